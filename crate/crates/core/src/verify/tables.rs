//! Printed descriptions of `lambda(O)` and `lambda(Ô)`, written out per
//! class independently of the torus data in the catalog.

use crate::rootsys::{CartanType, Family, Weight};

#[derive(Debug, Clone)]
struct Term {
    var: usize,
    mult: i64,
    support: Vec<usize>,
}

/// `sum_k mult_k n_k omega_{S_k}` over `n_k >= 0`, subject to parity
/// conditions on the `n_k`.
#[derive(Debug, Clone, Default)]
pub struct TableFormula {
    terms: Vec<Term>,
    even: Vec<Vec<usize>>,
}

impl TableFormula {
    pub fn new() -> Self {
        Self::default()
    }

    /// `mult * n_var * sum_{i in support} omega_i`.
    pub fn term(mut self, var: usize, mult: i64, support: &[usize]) -> Self {
        self.terms.push(Term {
            var,
            mult,
            support: support.to_vec(),
        });
        self
    }

    /// `mult * n_i * omega_i`.
    pub fn single(self, i: usize, mult: i64) -> Self {
        self.term(i, mult, &[i])
    }

    pub fn singles(self, idx: impl IntoIterator<Item = usize>, mult: i64) -> Self {
        idx.into_iter().fold(self, |f, i| f.single(i, mult))
    }

    /// `n_a (omega_a + omega_b)`.
    pub fn pair(self, a: usize, b: usize) -> Self {
        self.term(a, 1, &[a, b])
    }

    /// `sum_{k in vars} n_k` even.
    pub fn even(mut self, vars: impl IntoIterator<Item = usize>) -> Self {
        self.even.push(vars.into_iter().collect());
        self
    }

    /// The values `n_k`, if `lambda` has the printed shape.
    fn solve(&self, lambda: &Weight) -> Option<Vec<(usize, i64)>> {
        let l = lambda.coords();
        let mut covered = vec![false; l.len()];
        let mut vals = Vec::new();
        for t in &self.terms {
            let x = l[t.support[0] - 1];
            if x % t.mult != 0 || t.support.iter().any(|&i| l[i - 1] != x) {
                return None;
            }
            for &i in &t.support {
                covered[i - 1] = true;
            }
            vals.push((t.var, x / t.mult));
        }
        l.iter()
            .zip(&covered)
            .all(|(&x, &c)| c || x == 0)
            .then_some(vals)
    }

    pub fn contains(&self, lambda: &Weight) -> bool {
        let Some(vals) = self.solve(lambda) else {
            return false;
        };
        self.even.iter().all(|set| {
            let s: i64 = vals
                .iter()
                .filter(|(v, _)| set.contains(v))
                .map(|(_, x)| x)
                .sum();
            s % 2 == 0
        })
    }
}

/// One row: the class label, `lambda(O)`, `lambda(Ô)`, and quotient rows keyed
/// by isogeny tag.
#[derive(Debug, Clone)]
pub struct TableRow {
    pub label: String,
    pub o: TableFormula,
    pub o_hat: TableFormula,
    pub isogeny: Vec<(String, TableFormula)>,
}

fn row(label: impl Into<String>, o: TableFormula) -> TableRow {
    TableRow {
        label: label.into(),
        o_hat: o.clone(),
        o,
        isogeny: Vec::new(),
    }
}

fn row2(label: impl Into<String>, o: TableFormula, o_hat: TableFormula) -> TableRow {
    TableRow {
        label: label.into(),
        o,
        o_hat,
        isogeny: Vec::new(),
    }
}

fn f() -> TableFormula {
    TableFormula::new()
}

fn evens(upto: usize) -> impl Iterator<Item = usize> {
    (2..=upto).step_by(2)
}

fn odds(upto: usize) -> impl Iterator<Item = usize> {
    (1..=upto).step_by(2)
}

/// All printed rows for a group.
pub fn rows(t: CartanType) -> Vec<TableRow> {
    let n = t.rank();
    match t.family() {
        Family::A => type_a(n),
        Family::B if n.is_multiple_of(2) => type_b_even(n),
        Family::B => type_b_odd(n),
        Family::C => type_c(n),
        Family::D if n.is_multiple_of(2) => type_d_even(n),
        Family::D => type_d_odd(n),
        Family::E if n == 6 => e6(),
        Family::E if n == 7 => e7(),
        Family::E => e8(),
        Family::F => f4(),
        Family::G => g2(),
    }
}

fn type_a(n: usize) -> Vec<TableRow> {
    let m = n.div_ceil(2);
    let mut out = Vec::new();
    for l in 1..=m {
        let pairs = |upto: usize| (1..=upto).fold(f(), |acc, k| acc.pair(k, n - k + 1));
        let (o, o_hat) = if l == m && n + 1 == 2 * m {
            (pairs(m - 1).single(m, 2), pairs(m - 1).single(m, 1))
        } else {
            (pairs(l), pairs(l))
        };
        out.push(row2(format!("X_{l}"), o.clone(), o_hat));
        out.push(row(format!("exp(zeta w{l})"), o));
    }
    out
}

fn type_c(n: usize) -> Vec<TableRow> {
    let p = n / 2;
    let mut out = Vec::new();
    for l in 1..=n {
        out.push(row2(
            format!("X_{l}"),
            f().singles(1..=l, 2),
            f().singles(1..l, 2).single(l, 1),
        ));
    }
    out.push(row(format!("exp(zeta w{n})"), f().singles(1..=n, 2)));
    out.push(row("exp(zeta w1)", f().single(1, 2).single(2, 1)));
    for l in 1..=p {
        out.push(row(format!("exp(pi i w{l})"), f().singles(evens(2 * l), 1)));
    }
    out.push(row2(
        format!("sigma_{p} x_alpha_n(1)"),
        f().singles(1..=n, 1).even(odds(n)),
        f().singles(1..=n, 1),
    ));
    for l in 1..p {
        out.push(row2(
            format!("sigma_{l} x_alpha_n(1)"),
            f().singles(1..=2 * l + 1, 1).even(odds(2 * l + 1)),
            f().singles(1..=2 * l + 1, 1),
        ));
    }
    for l in 1..=p {
        out.push(row2(
            format!("sigma_{l} x_beta_1(1)"),
            f().singles(1..=2 * l, 1).even(odds(2 * l - 1)),
            f().singles(1..=2 * l, 1),
        ));
    }
    out
}

fn d_semisimple_common(m: usize, out: &mut Vec<TableRow>) {
    out.push(row("exp(zeta w1)", f().single(1, 2).single(2, 1)));
    for l in 2..m {
        out.push(row(
            format!("exp(pi i w{l})"),
            f().singles(1..2 * l, 2).single(2 * l, 1),
        ));
    }
}

fn type_d_even(n: usize) -> Vec<TableRow> {
    let m = n / 2;
    let mut out = Vec::new();
    for l in 1..m {
        out.push(row(format!("X_{l}"), f().singles(evens(2 * l), 1)));
    }
    let low = || f().singles(evens(2 * m - 2), 1);
    out.push(row2(format!("X_{m}"), low().single(n, 2), low().single(n, 1)));
    out.push(row2(format!("X_{m}'"), low().single(n - 1, 2), low().single(n - 1, 1)));
    for l in 1..m {
        out.push(row2(
            format!("Z_{l}"),
            f().singles(1..=2 * l, 1).even(odds(2 * l - 1)),
            f().singles(1..=2 * l, 1),
        ));
    }
    out.push(row2(
        format!("Z_{m}"),
        f().singles(1..=n, 1).even(odds(2 * m - 1)).even([n - 1, n]),
        f().singles(1..=n, 1),
    ));
    d_semisimple_common(m, &mut out);
    let mut top = row(format!("exp(pi i w{m})"), f().singles(1..=n, 2));
    top.isogeny.push((
        "Z".into(),
        f().singles(1..=n, 2).even([n - 1, n]).even(odds(2 * m - 1)),
    ));
    out.push(top);
    out.push(row(format!("exp(zeta w{n})"), low().single(n, 2)));
    out.push(row(format!("exp(zeta w{})", n - 1), low().single(n - 1, 2)));
    out
}

fn type_d_odd(n: usize) -> Vec<TableRow> {
    let m = n / 2;
    let mut out = Vec::new();
    for l in 1..m {
        out.push(row(format!("X_{l}"), f().singles(evens(2 * l), 1)));
    }
    let low = || f().singles(evens(2 * m - 2), 1);
    out.push(row(format!("X_{m}"), low().pair(n - 1, n)));
    for l in 1..m {
        out.push(row2(
            format!("Z_{l}"),
            f().singles(1..=2 * l, 1).even(odds(2 * l - 1)),
            f().singles(1..=2 * l, 1),
        ));
    }
    out.push(row2(
        format!("Z_{m}"),
        f().singles(1..=n - 2, 1).pair(n - 1, n).even(odds(2 * m - 1)),
        f().singles(1..=n - 2, 1).pair(n - 1, n),
    ));
    d_semisimple_common(m, &mut out);
    out.push(row(
        format!("exp(pi i w{m})"),
        f().singles(1..=n - 2, 2).pair(n - 1, n),
    ));
    out.push(row(format!("exp(zeta w{n})"), low().pair(n - 1, n)));
    out
}

/// Rows `exp(pi i w_l)` for `l` from `from` to `n`, on the `M_r` parabolics.
fn b_high_semisimple(n: usize, from: usize, out: &mut Vec<TableRow>) {
    for l in from..=n {
        let r = 2 * (n - l);
        out.push(row(
            format!("exp(pi i w{l})"),
            f().singles(1..=r, 2).single(r + 1, 1),
        ));
    }
}

fn b_mixed_label(l: usize) -> String {
    if l == 1 {
        "sigma_n x_beta_1(1)".into()
    } else {
        format!("sigma_n x_beta_1..beta_{l}(1)")
    }
}

fn type_b_even(n: usize) -> Vec<TableRow> {
    let m = n / 2;
    let mut out = Vec::new();
    for l in 1..m {
        out.push(row(format!("X_{l}"), f().singles(evens(2 * l), 1)));
    }
    out.push(row2(
        format!("X_{m}"),
        f().singles(evens(2 * m - 2), 1).single(n, 2),
        f().singles(evens(2 * m), 1),
    ));
    for l in 1..m {
        out.push(row2(
            format!("Z_{l}"),
            f().singles(1..=2 * l, 1).even(odds(2 * l - 1)),
            f().singles(1..=2 * l, 1),
        ));
    }
    out.push(row2(
        format!("Z_{m}"),
        f().singles(1..=n, 1).even(odds(2 * m - 1)).even([n]),
        f().singles(1..=n, 1).even([n]),
    ));
    if m >= 2 {
        out.push(row("exp(zeta w1)", f().single(1, 2).single(2, 1)));
        for l in 2..m {
            out.push(row(
                format!("exp(pi i w{l})"),
                f().singles(1..2 * l, 2).single(2 * l, 1),
            ));
        }
        out.push(row(format!("exp(pi i w{m})"), f().singles(1..=n, 2)));
    } else {
        out.push(row("exp(zeta w1)", f().single(1, 2).single(2, 2)));
    }
    b_high_semisimple(n, m + 1, &mut out);
    out.push(row(format!("exp(zeta w{n})"), f().singles(1..=n, 1).even([n])));
    for l in 1..m {
        out.push(row(b_mixed_label(l), f().singles(1..=2 * l + 1, 1)));
    }
    out.push(row2(
        b_mixed_label(m),
        f().singles(1..=n, 1).even([n]),
        f().singles(1..=n, 1),
    ));
    out
}

fn type_b_odd(n: usize) -> Vec<TableRow> {
    let m = n / 2;
    let mut out = Vec::new();
    for l in 1..=m {
        out.push(row(format!("X_{l}"), f().singles(evens(2 * l), 1)));
        out.push(row2(
            format!("Z_{l}"),
            f().singles(1..=2 * l, 1).even(odds(2 * l - 1)),
            f().singles(1..=2 * l, 1),
        ));
    }
    out.push(row2(
        format!("Z_{}", m + 1),
        f().singles(1..=n, 1).even([n]),
        f().singles(1..=n, 1),
    ));
    out.push(row("exp(zeta w1)", f().single(1, 2).single(2, 1)));
    for l in 2..=m {
        out.push(row(
            format!("exp(pi i w{l})"),
            f().singles(1..2 * l, 2).single(2 * l, 1),
        ));
    }
    out.push(row(format!("exp(pi i w{})", m + 1), f().singles(1..=n, 2)));
    b_high_semisimple(n, m + 2, &mut out);
    out.push(row(format!("exp(zeta w{n})"), f().singles(1..=n, 1).even([n])));
    for l in 1..m {
        out.push(row(b_mixed_label(l), f().singles(1..=2 * l + 1, 1)));
    }
    out.push(row(b_mixed_label(m), f().singles(1..=n, 1).even([n])));
    out
}

fn e6() -> Vec<TableRow> {
    vec![
        row("A1", f().single(2, 1)),
        row("2A1", f().pair(1, 6).single(2, 1)),
        row("3A1", f().pair(1, 6).pair(3, 5).single(2, 1).single(4, 1)),
        row(
            "exp(pi i w2)",
            f().pair(1, 6).pair(3, 5).single(2, 2).single(4, 2),
        ),
        row("exp(zeta w1)", f().pair(1, 6).single(2, 1)),
    ]
}

fn e7() -> Vec<TableRow> {
    let e6t1 = || f().single(1, 1).single(6, 1).single(7, 2);
    let mut c = row("exp(zeta w7)", e6t1());
    c.isogeny.push(("Z".into(), e6t1().even([1, 7])));
    c.isogeny.push(("Z-generic".into(), e6t1()));
    let mut a7 = row("exp(pi i w2)", f().singles(1..=7, 2));
    a7.isogeny.push(("Z".into(), f().singles(1..=7, 2).even([2, 5, 7])));
    vec![
        row("A1", f().single(1, 1)),
        row("2A1", f().singles([1, 6], 1)),
        row2(
            "3A1''",
            f().singles([1, 6], 1).single(7, 2),
            f().singles([1, 6, 7], 1),
        ),
        row("3A1'", f().singles([1, 3, 4, 6], 1)),
        row2(
            "4A1",
            f().singles(1..=7, 1).even([2, 5, 7]),
            f().singles(1..=7, 1),
        ),
        c,
        row("exp(pi i w1)", f().singles([1, 3], 2).singles([4, 6], 1)),
        a7,
    ]
}

fn e8() -> Vec<TableRow> {
    vec![
        row("A1", f().single(8, 1)),
        row("2A1", f().singles([1, 8], 1)),
        row("3A1", f().singles([1, 6, 7, 8], 1)),
        row("4A1", f().singles(1..=8, 1)),
        row("exp(pi i w8)", f().singles([1, 6], 1).singles([7, 8], 2)),
        row("exp(pi i w1)", f().singles(1..=8, 2)),
    ]
}

fn f4() -> Vec<TableRow> {
    vec![
        row("A1", f().single(1, 1)),
        row2("A1tilde", f().single(1, 1).single(4, 2), f().singles([1, 4], 1)),
        row("A1+A1tilde", f().singles([1, 2], 1).singles([3, 4], 2)),
        row("exp(pi i w1)", f().singles(1..=4, 2)),
        row("exp(pi i w4)", f().single(4, 1)),
        row("f_2 x_beta_1(1)", f().singles(1..=4, 1)),
    ]
}

fn g2() -> Vec<TableRow> {
    vec![
        row("A1", f().single(2, 1)),
        row("A1tilde", f().singles([1, 2], 1)),
        row("exp(pi i w2)", f().singles([1, 2], 2)),
        row("exp(2pi i/3 w1)", f().single(1, 1)),
    ]
}

/// The printed closure description for the two non-normal classes.
pub fn closure_contains(t: CartanType, label: &str, lambda: &Weight) -> Option<bool> {
    let n = t.rank();
    let l = lambda.coords();
    match (t.family(), label) {
        (Family::B, _) if n % 2 == 1 && label == format!("Z_{}", n / 2 + 1) => {
            let m = n / 2;
            let low = f().singles(1..=2 * m, 1).even(odds(2 * m - 1));
            let high = f().singles(1..=n, 1).even([n]);
            Some(low.contains(lambda) || (high.contains(lambda) && l[n - 1] >= 2))
        }
        (Family::G, "A1tilde") => Some(l[0] != 1),
        _ => None,
    }
}
