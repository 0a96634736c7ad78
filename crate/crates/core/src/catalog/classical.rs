//! Rank-parametric class lists for types A, B, C and D.

use crate::error::Result;
use crate::rootsys::{Family, Root, RootSystem};
use crate::TorusPoint;

use super::{center_generators, half, quarter, two_torsion, ClassKind, ClosureSpecial, RawClass};

use ClassKind::{Mixed, Semisimple, Unipotent};

struct Ctx<'a> {
    rs: &'a RootSystem,
    n: usize,
}

impl Ctx<'_> {
    /// Root from sparse `e_i` coordinates (1-based).
    fn e(&self, terms: &[(usize, i64)]) -> Result<Root> {
        let len = if self.rs.cartan_type().family() == Family::A {
            self.n + 1
        } else {
            self.n
        };
        let mut v = vec![0; len];
        for &(i, c) in terms {
            v[i - 1] += c;
        }
        self.rs.root_from_epsilon(&v)
    }

    fn h(&self, idx: &[usize]) -> TorusPoint {
        half(self.n, idx)
    }

    /// `h_{alpha_i}(-1)` for each `i` in `1..=k`, as separate generators.
    fn each_h(&self, k: usize) -> Vec<TorusPoint> {
        (1..=k).map(|i| self.h(&[i])).collect()
    }

    /// `prod_{i<=k} h_{alpha_{2i-1}}(-1)`.
    fn sigma(&self, k: usize) -> TorusPoint {
        self.h(&odd_upto(2 * k - 1))
    }

    /// `beta_i = e_{2i-1} + e_{2i}` and `delta_i = e_{2i-1} - e_{2i}`.
    fn beta(&self, i: usize) -> Result<Root> {
        self.e(&[(2 * i - 1, 1), (2 * i, 1)])
    }

    fn delta(&self, i: usize) -> Result<Root> {
        self.e(&[(2 * i - 1, 1), (2 * i, -1)])
    }

    fn betas(&self, k: usize) -> Result<Vec<Root>> {
        (1..=k).map(|i| self.beta(i)).collect()
    }

    fn beta_deltas(&self, k: usize) -> Result<Vec<Root>> {
        let mut out = Vec::new();
        for i in 1..=k {
            out.push(self.beta(i)?);
            out.push(self.delta(i)?);
        }
        Ok(out)
    }

    /// `gamma_i = e_i` (type B) or `2 e_i` (type C) for `i <= k`.
    fn gammas(&self, k: usize, coeff: i64) -> Result<Vec<Root>> {
        (1..=k).map(|i| self.e(&[(i, coeff)])).collect()
    }
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

fn odd_upto(k: usize) -> Vec<usize> {
    (1..=k).step_by(2).collect()
}

pub(crate) fn classes(rs: &RootSystem) -> Result<Vec<RawClass>> {
    let cx = Ctx { rs, n: rs.rank() };
    match rs.cartan_type().family() {
        Family::A => type_a(&cx),
        Family::B => type_b(&cx),
        Family::C => type_c(&cx),
        Family::D => type_d(&cx),
        _ => unreachable!("exceptional types are loaded from data files"),
    }
}

fn type_a(cx: &Ctx) -> Result<Vec<RawClass>> {
    let n = cx.n;
    let m = n.div_ceil(2);
    let mut out = Vec::new();
    for l in 1..=m {
        let j = if l < m { range(l + 1, n - l) } else { Vec::new() };
        let factors = (1..=l)
            .map(|i| cx.e(&[(i, 1), (n + 2 - i, -1)]))
            .collect::<Result<Vec<_>>>()?;
        let s_o = if n + 1 == 2 * m && l == m {
            vec![cx.h(&[m])]
        } else {
            Vec::new()
        };
        out.push(
            RawClass::new(format!("X_{l}"), Unipotent, j.clone())
                .factors(factors.clone())
                .s_o(s_o.clone()),
        );
        let mut alias = "T1".to_string();
        if l > 1 {
            alias += &format!("A{}", l - 1);
        }
        if n > l {
            alias += &format!("A{}", n - l);
        }
        out.push(
            RawClass::new(format!("exp(zeta w{l})"), Semisimple, j)
                .alias(alias)
                .factors(factors)
                .s_o(s_o)
                .cover_equal(),
        );
    }
    Ok(out)
}

fn type_c(cx: &Ctx) -> Result<Vec<RawClass>> {
    let n = cx.n;
    let p = n / 2;
    let mut out = Vec::new();
    for l in 1..=n {
        out.push(
            RawClass::new(format!("X_{l}"), Unipotent, range(l + 1, n))
                .factors(cx.gammas(l, 2)?)
                .s_o(cx.each_h(l))
                .s_o_hat(cx.each_h(l - 1)),
        );
    }
    out.push(
        RawClass::new(format!("exp(zeta w{n})"), Semisimple, Vec::new())
            .alias(format!("T1A{}tilde", n - 1))
            .factors(cx.gammas(n, 2)?)
            .s_o(two_torsion(n))
            .cover_equal(),
    );
    out.push(
        RawClass::new("exp(zeta w1)", Semisimple, range(3, n))
            .alias(format!("T1C{}", n - 1))
            .factors(cx.gammas(2, 2)?)
            .s_o(vec![cx.h(&[1])])
            .cover_equal(),
    );
    for l in 1..=p {
        let mut k = odd_upto(2 * l - 1);
        k.extend(range(2 * l + 1, n));
        out.push(
            RawClass::new(format!("exp(pi i w{l})"), Semisimple, k)
                .alias(format!("C{l}C{}", n - l))
                .factors(cx.betas(l)?),
        );
    }
    out.push(
        RawClass::new(format!("sigma_{p} x_alpha_n(1)"), Mixed, Vec::new())
            .alias(format!("sigma{p}.xaN"))
            .factors(cx.gammas(n, 2)?)
            .s_o(vec![cx.h(&odd_upto(n))]),
    );
    for k in 1..p {
        out.push(
            RawClass::new(format!("sigma_{k} x_alpha_n(1)"), Mixed, range(2 * k + 2, n))
                .alias(format!("sigma{k}.xaN"))
                .factors(cx.gammas(2 * k + 1, 2)?)
                .s_o(vec![cx.sigma(k + 1)]),
        );
    }
    for k in 1..=p {
        out.push(
            RawClass::new(format!("sigma_{k} x_beta_1(1)"), Mixed, range(2 * k + 1, n))
                .alias(format!("sigma{k}.xb1"))
                .factors(cx.gammas(2 * k, 2)?)
                .s_o(vec![cx.sigma(k)]),
        );
    }
    Ok(out)
}

fn type_d(cx: &Ctx) -> Result<Vec<RawClass>> {
    let n = cx.n;
    let m = n / 2;
    let even = n.is_multiple_of(2);
    let j = |l: usize| if l < m { range(2 * l + 1, n) } else { Vec::new() };
    let k = |l: usize| {
        let mut v = j(l);
        v.extend(odd_upto(2 * l - 1));
        v
    };
    let z = center_generators(cx.rs);
    let mut out = Vec::new();

    for l in 1..=m {
        let s_o = if l < m || !even {
            vec![cx.sigma(l)]
        } else {
            z.clone()
        };
        out.push(
            RawClass::new(format!("Z_{l}"), Unipotent, j(l))
                .factors(cx.beta_deltas(l)?)
                .s_o(s_o),
        );
    }
    for l in 1..=m {
        let s_o = if l == m && even { z.clone() } else { Vec::new() };
        out.push(
            RawClass::new(format!("X_{l}"), Unipotent, k(l))
                .factors(cx.betas(l)?)
                .s_o(s_o),
        );
    }
    let mut very_even_j = odd_upto(n - 3);
    very_even_j.push(n);
    let mut very_even_w = cx.betas(m - 1)?;
    very_even_w.push(cx.e(&[(n - 1, 1), (n, -1)])?);
    if even {
        out.push(
            RawClass::new(format!("X_{m}'"), Unipotent, very_even_j.clone())
                .factors(very_even_w.clone())
                .s_o(z.clone()),
        );
    }

    out.push(
        RawClass::new("exp(zeta w1)", Semisimple, j(1))
            .alias(format!("T1D{}", n - 1))
            .factors(cx.beta_deltas(1)?)
            .s_o(vec![cx.h(&[1])])
            .cover_equal(),
    );
    for l in 2..m {
        out.push(
            RawClass::new(format!("exp(pi i w{l})"), Semisimple, j(l))
                .alias(format!("D{l}D{}", n - l))
                .factors(cx.beta_deltas(l)?)
                .s_o(cx.each_h(2 * l - 1))
                .cover_equal(),
        );
    }
    if even {
        let mut t_xd = two_torsion(n);
        t_xd.push(quarter(n, &[n - 1, n]));
        t_xd.push(quarter(n, &odd_upto(n - 1)));
        let mut c = RawClass::new(format!("exp(pi i w{m})"), Semisimple, Vec::new())
            .alias(format!("D{m}D{m}"))
            .factors(cx.beta_deltas(m)?)
            .s_o(two_torsion(n))
            .cover_equal();
        c.isogeny.push(("Z".into(), "G/Z(G)".into(), z.clone(), t_xd));
        out.push(c);
        out.push(
            RawClass::new(format!("exp(zeta w{n})"), Semisimple, k(m))
                .alias(format!("T1A{}", n - 1))
                .factors(cx.betas(m)?)
                .s_o(z.clone())
                .cover_equal(),
        );
        out.push(
            RawClass::new(format!("exp(zeta w{})", n - 1), Semisimple, very_even_j)
                .alias(format!("T1A{}'", n - 1))
                .factors(very_even_w)
                .s_o(z)
                .cover_equal(),
        );
    } else {
        out.push(
            RawClass::new(format!("exp(pi i w{m})"), Semisimple, Vec::new())
                .alias(format!("D{m}D{}", m + 1))
                .factors(cx.beta_deltas(m)?)
                .s_o(cx.each_h(n - 2))
                .cover_equal(),
        );
        out.push(
            RawClass::new(format!("exp(zeta w{n})"), Semisimple, k(m))
                .alias(format!("T1A{}", n - 1))
                .factors(cx.betas(m)?),
        );
    }
    Ok(out)
}

fn type_b(cx: &Ctx) -> Result<Vec<RawClass>> {
    let n = cx.n;
    let m = n / 2;
    let even = n.is_multiple_of(2);
    let j = |l: usize| range(2 * l + 1, n);
    let k = |l: usize| {
        let mut v = j(l);
        v.extend(odd_upto(2 * l - 1));
        v
    };
    let zb = vec![cx.h(&[n])];
    let db_alias = |l: usize| {
        if l < n {
            format!("D{l}B{}", n - l)
        } else {
            format!("D{l}")
        }
    };
    let mixed_label = |l: usize| {
        if l == 1 {
            "sigma_n x_beta_1(1)".to_string()
        } else {
            format!("sigma_n x_beta_1..beta_{l}(1)")
        }
    };
    let mut out = Vec::new();

    for l in 1..=m {
        let mut c = RawClass::new(format!("Z_{l}"), Unipotent, j(l))
            .factors(cx.beta_deltas(l)?)
            .s_o(vec![cx.sigma(l)]);
        if even && l == m {
            c = c.s_o(vec![cx.sigma(l), cx.h(&[n])]).s_o_hat(zb.clone());
        }
        out.push(c);
    }
    if !even {
        let mut factors = cx.beta_deltas(m)?;
        factors.push(cx.e(&[(n, 1)])?);
        let mut c = RawClass::new(format!("Z_{}", m + 1), Unipotent, Vec::new())
            .factors(factors)
            .s_o(zb.clone());
        c.normal = false;
        c.closure_special = Some(ClosureSpecial::BOddZmax);
        out.push(c);
    }
    for l in 1..=m {
        let s_o = if even && l == m { zb.clone() } else { Vec::new() };
        out.push(
            RawClass::new(format!("X_{l}"), Unipotent, k(l))
                .factors(cx.betas(l)?)
                .s_o(s_o),
        );
    }

    let first = RawClass::new("exp(zeta w1)", Semisimple, j(1))
        .alias(format!("T1B{}", n - 1))
        .factors(cx.beta_deltas(1)?);
    out.push(if n == 2 {
        first.s_o(two_torsion(n)).cover_equal()
    } else {
        first.s_o(vec![cx.h(&[1])]).cover_equal()
    });
    let last_j = if even { m } else { m + 1 };
    for l in 2..last_j {
        out.push(
            RawClass::new(format!("exp(pi i w{l})"), Semisimple, j(l))
                .alias(db_alias(l))
                .factors(cx.beta_deltas(l)?)
                .s_o(cx.each_h(2 * l - 1))
                .cover_equal(),
        );
    }
    if n > 2 {
        out.push(
            RawClass::new(format!("exp(pi i w{last_j})"), Semisimple, Vec::new())
                .alias(db_alias(last_j))
                .factors(if even {
                    cx.beta_deltas(m)?
                } else {
                    cx.gammas(n, 1)?
                })
                .s_o(two_torsion(n))
                .cover_equal(),
        );
    }
    for l in last_j + 1..=n {
        let r = 2 * (n - l) + 1;
        out.push(
            RawClass::new(format!("exp(pi i w{l})"), Semisimple, range(r + 1, n))
                .alias(db_alias(l))
                .factors(cx.gammas(r, 1)?)
                .s_o(cx.each_h(r - 1))
                .cover_equal(),
        );
    }
    out.push(
        RawClass::new(format!("exp(zeta w{n})"), Semisimple, Vec::new())
            .alias(format!("T1A{}", n - 1))
            .factors(cx.gammas(n, 1)?)
            .s_o(zb.clone())
            .cover_equal(),
    );

    let mixed_max = if even { m - 1 } else { m };
    for l in 1..=mixed_max {
        let r = 2 * l + 1;
        let s_o = if r == n { zb.clone() } else { Vec::new() };
        out.push(
            RawClass::new(mixed_label(l), Mixed, range(r + 1, n))
                .alias(format!("sigmaN.xb1-{l}"))
                .factors(cx.gammas(r, 1)?)
                .s_o(s_o)
                .cover_equal(),
        );
    }
    if even {
        out.push(
            RawClass::new(mixed_label(m), Mixed, Vec::new())
                .alias(format!("sigmaN.xb1-{m}"))
                .factors(cx.gammas(n, 1)?)
                .s_o(zb),
        );
    }
    Ok(out)
}
