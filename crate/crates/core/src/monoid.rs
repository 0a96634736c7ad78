//! Weight monoids: the free monoid `P+_w` on orbit sums, its finite-index
//! submonoids cut out by torus constraints, and the closure variants that
//! are not of that form.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::catalog::{ClassDescriptor, ClosureSpecial};
use crate::error::{Error, Result};
use crate::intlat::{self, Lattice};
use crate::rootsys::{RootSystem, Weight};
use crate::torus;
use crate::{FiniteTorusSubgroup, IntMatrix, TorusPoint};

/// `{omega_S : S a theta-orbit in the complement of J}`, the basis of `P+_w`.
pub fn pwplus_basis(rs: &RootSystem, j: &[usize]) -> Result<Vec<Weight>> {
    let n = rs.rank();
    if let Some(&bad) = j.iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::IndexOutOfRange { index: bad, rank: n });
    }
    if !rs.is_theta_invariant(j) {
        return Err(Error::NotThetaInvariant(j.to_vec()));
    }
    let rest: Vec<usize> = (1..=n).filter(|i| !j.contains(i)).collect();
    Ok(rs
        .theta_orbits(&rest)
        .into_iter()
        .map(|orbit| {
            let mut v = vec![0; n];
            for i in orbit {
                v[i - 1] = 1;
            }
            Weight(v)
        })
        .collect())
}

/// One constrained piece of a union: coefficients on `basis`, trivial on
/// `constraints`, and at least `min` coordinate-wise.
#[derive(Debug, Clone, PartialEq)]
pub struct Piece {
    pub basis: Vec<Weight>,
    pub constraints: Vec<TorusPoint>,
    pub min: Vec<i64>,
}

impl Piece {
    fn contains(&self, lambda: &Weight) -> bool {
        lambda.coords().iter().zip(&self.min).all(|(x, m)| x >= m)
            && coefficients(&self.basis, lambda).is_some()
            && trivial_on_all(lambda, &self.constraints)
    }
}

/// Phases of the constraints on the ambient basis, scaled by `den`.
#[derive(Debug, Clone, PartialEq)]
struct PhaseTable {
    den: i64,
    rows: Vec<Vec<i64>>,
}

impl PhaseTable {
    fn new(basis: &[Weight], constraints: &[TorusPoint]) -> Self {
        let rank = basis.first().map_or(0, Weight::rank);
        let s = FiniteTorusSubgroup::new(rank, constraints.to_vec());
        let (den, rows) = s.phase_table(basis);
        PhaseTable {
            den,
            rows: rows.into_iter().filter(|r| r.iter().any(|&x| x != 0)).collect(),
        }
    }

    fn trivial(&self, c: &[i64]) -> bool {
        self.rows
            .iter()
            .all(|r| r.iter().zip(c).map(|(a, b)| a * b).sum::<i64>() % self.den == 0)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Rule {
    Constrained(PhaseTable),
    Union(Vec<Piece>),
    Generated,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightMonoid {
    /// The `omega_S` basis of the ambient free monoid.
    pub ambient_basis: Vec<Weight>,
    /// Torus elements on which every member evaluates trivially.
    pub constraints: Vec<TorusPoint>,
    /// Minimal generators in graded order.
    pub generators: Vec<Weight>,
    rule: Rule,
}

impl WeightMonoid {
    pub fn rank(&self) -> usize {
        self.ambient_basis.first().map_or(0, Weight::rank)
    }

    pub fn contains(&self, lambda: &Weight) -> bool {
        if lambda.rank() != self.rank() || !lambda.is_dominant() {
            return false;
        }
        match &self.rule {
            Rule::Constrained(table) => {
                coefficients(&self.ambient_basis, lambda).is_some_and(|c| table.trivial(&c))
            }
            Rule::Union(pieces) => pieces.iter().any(|p| p.contains(lambda)),
            Rule::Generated => generated_contains(&self.generators, lambda, &mut HashMap::new()),
        }
    }

    /// Whether `lambda` is a sum of generators, ignoring the membership rule.
    pub fn is_generated(&self, lambda: &Weight) -> bool {
        lambda.rank() == self.rank()
            && lambda.is_dominant()
            && generated_contains(&self.generators, lambda, &mut HashMap::new())
    }

    /// The pieces of a union description, if this monoid is one.
    pub fn pieces(&self) -> Option<&[Piece]> {
        match &self.rule {
            Rule::Union(p) => Some(p),
            _ => None,
        }
    }

    /// Whether membership is given by `constraints` alone.
    pub fn is_constrained(&self) -> bool {
        matches!(self.rule, Rule::Constrained(_))
    }

    /// Whether every generator is a fundamental weight and every fundamental
    /// weight is a generator.
    pub fn is_free_on_fundamentals(&self) -> bool {
        let n = self.rank();
        self.generators.len() == n
            && (1..=n).all(|i| self.generators.contains(&Weight::fundamental(n, i)))
    }
}

impl fmt::Display for WeightMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(Weight::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// Coefficients of `lambda` on a basis of weights with disjoint supports,
/// if they exist and are nonnegative integers.
pub(crate) fn coefficients(basis: &[Weight], lambda: &Weight) -> Option<Vec<i64>> {
    let mut rest = lambda.coords().to_vec();
    let mut out = Vec::with_capacity(basis.len());
    for b in basis {
        let i = b.coords().iter().position(|&x| x != 0)?;
        if rest[i] % b.coords()[i] != 0 {
            return None;
        }
        let c = rest[i] / b.coords()[i];
        if c < 0 {
            return None;
        }
        for (r, x) in rest.iter_mut().zip(b.coords()) {
            *r -= c * x;
        }
        out.push(c);
    }
    rest.iter().all(|&r| r == 0).then_some(out)
}

fn trivial_on_all(lambda: &Weight, constraints: &[TorusPoint]) -> bool {
    constraints.iter().all(|t| t.phase(lambda.coords()).is_zero())
}

fn generated_contains(gens: &[Weight], lambda: &Weight, memo: &mut HashMap<Weight, bool>) -> bool {
    if lambda.is_zero() {
        return true;
    }
    if let Some(&v) = memo.get(lambda) {
        return v;
    }
    let found = gens.iter().any(|g| {
        let rest = lambda.sub(g);
        rest.is_dominant() && generated_contains(gens, &rest, memo)
    });
    memo.insert(lambda.clone(), found);
    found
}

fn combine(basis: &[Weight], c: &[i64]) -> Weight {
    let n = basis.first().map_or(0, Weight::rank);
    basis
        .iter()
        .zip(c)
        .fold(Weight::zero(n), |acc, (b, &k)| acc.add(&b.scale(k)))
}

/// Upper bound on the length of a minimal zero-sum sequence over the finite
/// abelian group `Z^k / {c : table c = 0 mod den}`.
fn zero_sum_bound(den: i64, table: &[Vec<i64>]) -> usize {
    let s = table.len();
    let rows: Vec<Vec<i64>> = (0..s)
        .map(|i| {
            let mut r = table[i].clone();
            r.extend((0..s).map(|j| if i == j { den } else { 0 }));
            r
        })
        .collect();
    let orders: Vec<i64> = intlat::elementary_divisors(&IntMatrix::from_i64_rows(&rows))
        .into_iter()
        .map(|e: BigInt| den / e.to_i64().expect("small divisor"))
        .filter(|&o| o > 1)
        .collect();
    if is_prime_power(den) {
        1 + orders.iter().map(|o| (o - 1) as usize).sum::<usize>()
    } else {
        orders.iter().product::<i64>() as usize
    }
}

fn is_prime_power(n: i64) -> bool {
    if n < 2 {
        return true;
    }
    let p = (2..=n).find(|p| n % p == 0).expect("n >= 2");
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    m == 1
}

/// All coefficient vectors of length `k` with entries summing to `d`.
fn for_each_of_degree(k: usize, d: i64, f: &mut impl FnMut(&[i64])) {
    fn rec(c: &mut Vec<i64>, k: usize, left: i64, f: &mut impl FnMut(&[i64])) {
        if c.len() + 1 == k {
            c.push(left);
            f(c);
            c.pop();
            return;
        }
        for x in (0..=left).rev() {
            c.push(x);
            rec(c, k, left - x, f);
            c.pop();
        }
    }
    if k > 0 {
        rec(&mut Vec::with_capacity(k), k, d, f);
    }
}

fn sort_graded(mut gens: Vec<Weight>) -> Vec<Weight> {
    gens.sort_by(Weight::graded_cmp);
    gens
}

/// Hilbert basis of `{sum c_j b_j : c_j >= 0, trivial on S}`.
pub fn constrained_monoid(basis: &[Weight], s: &FiniteTorusSubgroup) -> WeightMonoid {
    let k = basis.len();
    let phases = PhaseTable::new(basis, s.generators());
    let (den, table) = (phases.den, &phases.rows);
    let generators = if table.is_empty() {
        basis.to_vec()
    } else {
        let bound = zero_sum_bound(den, table);
        let mut found: Vec<Vec<i64>> = Vec::new();
        for d in 1..=bound as i64 {
            let mut fresh = Vec::new();
            for_each_of_degree(k, d, &mut |c| {
                if phases.trivial(c) && !found.iter().any(|g| g.iter().zip(c).all(|(a, b)| a <= b)) {
                    fresh.push(c.to_vec());
                }
            });
            found.extend(fresh);
        }
        found.iter().map(|c| combine(basis, c)).collect()
    };
    WeightMonoid {
        ambient_basis: basis.to_vec(),
        constraints: s.generators().to_vec(),
        generators: sort_graded(generators),
        rule: Rule::Constrained(phases),
    }
}

/// Irreducible members of degree at most `max_degree` on `basis`.
fn irreducibles(basis: &[Weight], max_degree: i64, member: impl Fn(&Weight) -> bool) -> Vec<Weight> {
    let mut gens: Vec<Weight> = Vec::new();
    for d in 1..=max_degree {
        let mut fresh = Vec::new();
        for_each_of_degree(basis.len(), d, &mut |c| {
            let lambda = combine(basis, c);
            if member(&lambda)
                && !gens.iter().any(|g| {
                    let rest = lambda.sub(g);
                    coefficients(basis, &rest).is_some() && member(&rest)
                })
            {
                fresh.push(lambda);
            }
        });
        gens.extend(fresh);
    }
    sort_graded(gens)
}

/// `lambda(O)`: members of `P+_w` trivial on `S_O`.
pub fn lambda_o(c: &ClassDescriptor) -> WeightMonoid {
    constrained_monoid(c.pw_basis(), &c.s_o)
}

/// `lambda(Ô)` for the simply-connected cover: members trivial on `S_Ô`.
pub fn lambda_o_hat(c: &ClassDescriptor) -> WeightMonoid {
    constrained_monoid(c.pw_basis(), &c.s_o_hat)
}

/// Degree bound for generators of a union of pieces.
const UNION_DEGREE: i64 = 4;

/// Highest weights in the coordinate ring of the closure.
pub fn lambda_closure(c: &ClassDescriptor) -> WeightMonoid {
    let n = c.rank();
    match c.closure_special {
        None => lambda_o(c),
        Some(ClosureSpecial::BOddZmax) => {
            let m = (n - 1) / 2;
            let odd: Vec<usize> = (1..=m).map(|i| 2 * i - 1).collect();
            let low = Piece {
                basis: (1..n).map(|i| Weight::fundamental(n, i)).collect(),
                constraints: vec![torus::h_simple(n, &odd, 2)],
                min: vec![0; n],
            };
            let mut min = vec![0; n];
            min[n - 1] = 2;
            let high = Piece {
                basis: c.pw_basis().to_vec(),
                constraints: vec![torus::h_simple(n, &[n], 2)],
                min,
            };
            let pieces = vec![low, high];
            let generators = irreducibles(c.pw_basis(), UNION_DEGREE, |l| {
                pieces.iter().any(|p| p.contains(l))
            });
            WeightMonoid {
                ambient_basis: c.pw_basis().to_vec(),
                constraints: Vec::new(),
                generators,
                rule: Rule::Union(pieces),
            }
        }
        Some(ClosureSpecial::G2A1tilde) => {
            let w1 = Weight::fundamental(n, 1);
            WeightMonoid {
                ambient_basis: c.pw_basis().to_vec(),
                constraints: Vec::new(),
                generators: vec![w1.scale(2), w1.scale(3), Weight::fundamental(n, 2)],
                rule: Rule::Generated,
            }
        }
    }
}

/// `lambda` of the image class in `G/D`: members of `P+_w` trivial on `D`
/// and on `T_{x,D}`.
pub fn lambda_isogeny(c: &ClassDescriptor, tag: &str) -> Result<WeightMonoid> {
    let e = c.isogeny_entry(tag)?;
    Ok(constrained_monoid(c.pw_basis(), &e.d.join(&e.t_xd)))
}

/// Every `lambda` in `[0, bound]^n` on the ambient basis that lies in the
/// group generated by the generators also lies in the monoid.
pub fn saturation_check(m: &WeightMonoid, bound: i64) -> bool {
    let k = m.ambient_basis.len();
    let gens: Vec<Vec<i64>> = m
        .generators
        .iter()
        .map(|g| coefficients(&m.ambient_basis, g).expect("generator lies in the ambient monoid"))
        .collect();
    let lattice = Lattice::<i64>::spanned_by(k, &gens);
    if let Rule::Constrained(table) = &m.rule {
        return lattice.all_in_box(bound, |c| table.trivial(c));
    }
    lattice.all_in_box(bound, |c| m.contains(&combine(&m.ambient_basis, c)))
}

/// `Z lambda(O) ∩ P+`, tested pointwise.
fn in_saturation(lattice: &Lattice<i64>, basis: &[Weight], lambda: &Weight) -> bool {
    coefficients(basis, lambda).is_some_and(|c| lattice.contains(&c))
}

/// The chain `2P+_w ⊆ (1-w)P+ ⊆ lambda(closure) ⊆ lambda(O) ⊆ Z lambda(O) ∩ P+ ⊆ P+_w`
/// on every dominant weight with coefficients at most `bound`.
pub fn chain_check(c: &ClassDescriptor, bound: i64) -> bool {
    use rayon::prelude::*;
    let n = c.rank();
    let w = c.w();
    let o = lambda_o(c);
    let closure = lambda_closure(c);
    let basis = c.pw_basis();
    let gens: Vec<Vec<i64>> = o
        .generators
        .iter()
        .map(|g| coefficients(basis, g).expect("generator lies in P+_w"))
        .collect();
    let lattice = Lattice::<i64>::spanned_by(basis.len(), &gens);
    let in_pw = |l: &Weight| w.apply(l.coords()).iter().zip(l.coords()).all(|(a, b)| *a == -b);
    let one_minus = w.one_minus();
    (0..=bound).into_par_iter().all(|first| {
        let mut v = vec![0; n];
        v[0] = first;
        loop {
            let lambda = Weight(v.clone());
            let image = Weight(
                one_minus
                    .iter()
                    .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
                    .collect(),
            );
            let pw = in_pw(&lambda);
            let image_ok = image.is_dominant() && closure.contains(&image);
            let in_o = o.contains(&lambda);
            let saturated = in_saturation(&lattice, basis, &lambda);
            let chain = (!pw || image == lambda.scale(2))
                && image_ok
                && (!closure.contains(&lambda) || in_o)
                && (!in_o || saturated)
                && (!saturated || pw);
            if !chain {
                return false;
            }
            let mut i = n - 1;
            loop {
                if i == 0 {
                    return true;
                }
                if v[i] < bound {
                    v[i] += 1;
                    break;
                }
                v[i] = 0;
                i -= 1;
            }
        }
    })
}

/// `dim O = l(w) + rk(1 - w)`.
pub fn class_dimension(c: &ClassDescriptor) -> usize {
    let rs = c.root_system();
    rs.length(c.w()) + intlat::rank(&IntMatrix::from_i64_rows(&c.w().one_minus()))
}

/// Whether `lambda(O)` is all of `P+`, i.e. `O` is a model homogeneous space.
pub fn is_model(c: &ClassDescriptor) -> bool {
    lambda_o(c).is_free_on_fundamentals()
}
