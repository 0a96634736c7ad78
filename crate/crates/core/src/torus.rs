//! Finite-order elements of the maximal torus, modelled as rational
//! coweights `q` (simple-coroot coordinates) modulo the coroot lattice.
//! A weight `lambda` takes the value `exp(2 pi i <lambda, q>)` on `q`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intlat::{self, Matrix};
use crate::rootsys::{Family, Root, RootSystem, Weight, WeylElement};
use crate::scalar::ExactInt;

fn frac<I: ExactInt>(x: Ratio<I>) -> Ratio<I> {
    let f = x.floor();
    x - f
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coweight<I: ExactInt> {
    q: Vec<Ratio<I>>,
}

impl<I: ExactInt> Coweight<I> {
    pub fn new(q: Vec<Ratio<I>>) -> Self {
        Coweight {
            q: q.into_iter().map(frac).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Coweight {
            q: vec![Ratio::zero(); n],
        }
    }

    /// `c * alpha^vee` for a coroot given in simple-coroot coordinates.
    pub fn along(coroot: &[i64], c: Ratio<I>) -> Self {
        Self::new(
            coroot
                .iter()
                .map(|&x| c.clone() * Ratio::from_integer(I::from_small(x)))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[Ratio<I>] {
        &self.q
    }

    pub fn rank(&self) -> usize {
        self.q.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.q
                .iter()
                .zip(&other.q)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn inverse(&self) -> Self {
        Self::new(self.q.iter().map(|a| -a.clone()).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.q.iter().all(Zero::is_zero)
    }

    pub fn order(&self) -> I {
        self.q
            .iter()
            .fold(I::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// `<lambda, q>` reduced into `[0, 1)`.
    pub fn phase(&self, lambda: &[i64]) -> Ratio<I> {
        let s = self
            .q
            .iter()
            .zip(lambda)
            .fold(Ratio::zero(), |acc: Ratio<I>, (a, &l)| {
                acc + a.clone() * Ratio::from_integer(I::from_small(l))
            });
        frac(s)
    }
}

impl<I: ExactInt> fmt::Display for Coweight<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.q.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

pub fn eval_phase<I: ExactInt>(lambda: &Weight, t: &Coweight<I>) -> Ratio<I> {
    t.phase(lambda.coords())
}

/// A finite subgroup of the torus given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusSubgroup<I: ExactInt> {
    rank: usize,
    generators: Vec<Coweight<I>>,
}

impl<I: ExactInt> TorusSubgroup<I> {
    pub fn new(rank: usize, generators: Vec<Coweight<I>>) -> Self {
        assert!(generators.iter().all(|g| g.rank() == rank), "rank mismatch");
        TorusSubgroup { rank, generators }
    }

    pub fn trivial(rank: usize) -> Self {
        TorusSubgroup {
            rank,
            generators: Vec::new(),
        }
    }

    /// The 2-torsion `T_2`, generated by all `h_{alpha_i}(-1)`.
    pub fn two_torsion(rank: usize) -> Self {
        let gens = (1..=rank).map(|i| h_simple(rank, &[i], 2)).collect();
        TorusSubgroup::new(rank, gens)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[Coweight<I>] {
        &self.generators
    }

    pub fn join(&self, other: &Self) -> Self {
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        TorusSubgroup::new(self.rank, g)
    }

    pub fn elements(&self) -> BTreeSet<Coweight<I>> {
        let mut seen = BTreeSet::new();
        let id = Coweight::identity(self.rank);
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = x.mul(g);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    pub fn contains(&self, t: &Coweight<I>) -> bool {
        self.elements().contains(t)
    }

    pub fn is_subgroup_of(&self, other: &Self) -> bool {
        let big = other.elements();
        self.generators.iter().all(|g| big.contains(g))
    }

    pub fn trivial_on(&self, lambda: &Weight) -> bool {
        trivial_on(lambda, self)
    }

    /// The image of the group in `Hom(L, Q/Z)`, where `L` is spanned by `basis`:
    /// the set of phase vectors `(<b, t>)_b` over all elements `t`.
    pub fn phase_image(&self, basis: &[Weight]) -> BTreeSet<Vec<Ratio<I>>> {
        self.elements()
            .iter()
            .map(|t| basis.iter().map(|b| t.phase(b.coords())).collect())
            .collect()
    }

    /// Generator phases on `basis` as integers modulo a common denominator.
    pub fn phase_table(&self, basis: &[Weight]) -> (i64, Vec<Vec<i64>>) {
        let mut den = I::one();
        let table: Vec<Vec<Ratio<I>>> = self
            .generators
            .iter()
            .map(|g| basis.iter().map(|b| g.phase(b.coords())).collect())
            .collect();
        for row in &table {
            for x in row {
                den = den.lcm(x.denom());
            }
        }
        let d = Ratio::from_integer(den.clone());
        let ints = table
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|x| (x * d.clone()).to_integer().to_i64().expect("small phase"))
                    .collect()
            })
            .collect();
        (den.to_i64().expect("small modulus"), ints)
    }
}

pub fn trivial_on<I: ExactInt>(lambda: &Weight, s: &TorusSubgroup<I>) -> bool {
    s.generators().iter().all(|g| g.phase(lambda.coords()).is_zero())
}

/// `h_{alpha_{i_1}}(z) ... h_{alpha_{i_k}}(z)` with `z = exp(2 pi i / order)`.
pub fn h_simple<I: ExactInt>(rank: usize, indices: &[usize], order: i64) -> Coweight<I> {
    let mut q = vec![Ratio::zero(); rank];
    for &i in indices {
        q[i - 1] = q[i - 1].clone() + Ratio::new(I::one(), I::from_small(order));
    }
    Coweight::new(q)
}

/// `h_beta(exp(2 pi i c))`, i.e. `c * beta^vee`.
pub fn h_root<I: ExactInt>(rs: &RootSystem, beta: &Root, c: Ratio<I>) -> Result<Coweight<I>> {
    Ok(Coweight::along(&rs.coroot(beta)?, c))
}

/// Inverse Cartan matrix over the rationals; column `i` holds the fundamental
/// coweight `omega_i^vee` in simple-coroot coordinates.
pub fn inverse_cartan(rs: &RootSystem) -> Vec<Vec<Ratio<i64>>> {
    let n = rs.rank();
    let mut a: Vec<Vec<Ratio<i64>>> = rs
        .cartan()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Ratio<i64>> = row.iter().map(|&x| Ratio::from_integer(x)).collect();
            r.extend((0..n).map(|j| Ratio::from_integer(i64::from(i == j))));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("Cartan matrix is invertible");
        a.swap(c, p);
        let inv = a[c][c].recip();
        a[c].iter_mut().for_each(|x| *x *= inv);
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c];
                let pivot = a[c].clone();
                a[r].iter_mut().zip(&pivot).for_each(|(x, y)| *x -= f * y);
            }
        }
    }
    a.into_iter().map(|r| r[n..].to_vec()).collect()
}

/// `exp(2 pi i c omega_i^vee)`.
pub fn exp_coweight<I: ExactInt>(rs: &RootSystem, i: usize, c: Ratio<I>) -> Coweight<I> {
    let inv = inverse_cartan(rs);
    Coweight::new(
        (0..rs.rank())
            .map(|k| {
                let x = inv[k][i - 1];
                c.clone()
                    * Ratio::new(I::from_small(*x.numer()), I::from_small(*x.denom()))
            })
            .collect(),
    )
}

/// Generators of the center `Z(G)` of the simply-connected group.
pub fn center<I: ExactInt>(rs: &RootSystem) -> TorusSubgroup<I> {
    let t = rs.cartan_type();
    let n = t.rank();
    let half = |idx: &[usize]| h_simple::<I>(n, idx, 2);
    let gens = match t.family() {
        Family::A => vec![exp_coweight(rs, 1, Ratio::one())],
        Family::B => vec![half(&[n])],
        Family::C => {
            let odd: Vec<usize> = (1..=n).step_by(2).collect();
            vec![half(&odd)]
        }
        Family::D => {
            let m = n / 2;
            let odd: Vec<usize> = (1..=m).map(|i| 2 * i - 1).collect();
            if n.is_multiple_of(2) {
                vec![half(&odd), half(&[n - 1, n])]
            } else {
                let quarter = Coweight::new({
                    let mut q = vec![Ratio::zero(); n];
                    q[n - 2] = Ratio::new(I::one(), I::from_small(4));
                    q[n - 1] = Ratio::new(I::from_small(-1), I::from_small(4));
                    q
                });
                vec![half(&odd).mul(&quarter)]
            }
        }
        Family::E if n == 6 => vec![exp_coweight(rs, 1, Ratio::one())],
        Family::E if n == 7 => vec![half(&[2, 5, 7])],
        Family::E | Family::F | Family::G => Vec::new(),
    };
    TorusSubgroup::new(n, gens)
}

fn bigint_matrix(rows: &[Vec<i64>]) -> Matrix<BigInt> {
    Matrix::from_i64_rows(rows)
}

/// `dim ker(1 - w)`, the dimension of the fixed torus `T^w`.
pub fn fixed_torus_rank(w: &WeylElement) -> Result<usize> {
    if !w.is_involution() {
        return Err(Error::NotAnInvolution);
    }
    Ok(w.rank() - intlat::rank(&bigint_matrix(&w.one_minus())))
}

/// Invariant factors of the component group of `T^w`, the torsion of `P/(1-w)P`.
pub fn component_group_of_tw(w: &WeylElement) -> Result<Vec<i64>> {
    if !w.is_involution() {
        return Err(Error::NotAnInvolution);
    }
    Ok(intlat::quotient_torsion(&bigint_matrix(&w.one_minus()))
        .into_iter()
        .map(|x| x.try_into().expect("small divisor"))
        .collect())
}

/// Whether `t` is fixed by `w`: every weight `(1-w) omega_j` is trivial on `t`.
pub fn is_fixed_by<I: ExactInt>(w: &WeylElement, t: &Coweight<I>) -> bool {
    let m = w.one_minus();
    let n = w.rank();
    (0..n).all(|j| {
        let col: Vec<i64> = (0..n).map(|i| m[i][j]).collect();
        t.phase(&col).is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    type Q = Ratio<i64>;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse::<CartanType>().unwrap())
    }

    #[test]
    fn phase_examples() {
        let t: Coweight<i64> = h_simple(3, &[2], 2);
        assert_eq!(eval_phase(&Weight(vec![0, 1, 0]), &t), Q::new(1, 2));
        let e7 = rs("E7");
        let zs = center::<i64>(&e7);
        let z = &zs.generators()[0];
        assert_eq!(eval_phase(&Weight::fundamental(7, 1), z), Q::zero());
        assert_eq!(eval_phase(&Weight::fundamental(7, 2), z), Q::new(1, 2));
        let t: Coweight<i64> = h_simple(4, &[3], 4);
        assert_eq!(eval_phase(&Weight::fundamental(4, 3), &t), Q::new(1, 4));
    }

    #[test]
    fn trivial_on_examples() {
        let e7 = rs("E7");
        assert!(trivial_on(&Weight(vec![1, 0, 0, 0, 0, 0, 0]), &TorusSubgroup::<i64>::trivial(7)));
        assert!(!trivial_on(&Weight::fundamental(7, 2), &center::<i64>(&e7)));
        let s = TorusSubgroup::<i64>::new(4, vec![h_simple(4, &[1], 2)]);
        assert!(trivial_on(&Weight(vec![2, 0, 0, 0]), &s));
    }

    #[test]
    fn center_orders() {
        for (t, k) in [
            ("A1", 2),
            ("A4", 5),
            ("B5", 2),
            ("C3", 2),
            ("C4", 2),
            ("D4", 4),
            ("D5", 4),
            ("D8", 4),
            ("E6", 3),
            ("E7", 2),
            ("E8", 1),
            ("F4", 1),
            ("G2", 1),
        ] {
            let r = rs(t);
            let z = center::<i64>(&r);
            assert_eq!(z.order(), k, "{t}");
            for g in z.generators() {
                for beta in r.positive_roots() {
                    assert!(g.phase(r.root_to_weight(beta.coords()).coords()).is_zero(), "{t}");
                }
            }
        }
    }

    #[test]
    fn inverse_cartan_a2() {
        let inv = inverse_cartan(&rs("A2"));
        assert_eq!(inv[0], vec![Q::new(2, 3), Q::new(1, 3)]);
    }

    #[test]
    fn component_groups() {
        let a1 = rs("A1");
        let w0 = a1.longest_element();
        assert_eq!(fixed_torus_rank(&w0).unwrap(), 0);
        assert_eq!(component_group_of_tw(&w0).unwrap(), vec![2]);
        let a3 = rs("A3");
        let c = a3.simple_reflection(1).unwrap().compose(&a3.simple_reflection(2).unwrap());
        assert_eq!(fixed_torus_rank(&c), Err(Error::NotAnInvolution));
        let c5 = rs("C5");
        let w = c5.reflection_for_root(c5.highest_root()).unwrap();
        assert_eq!(component_group_of_tw(&w).unwrap(), vec![2]);
        assert!(is_fixed_by(&w, &h_simple::<i64>(5, &[1], 2)));
    }

    #[test]
    fn group_closure() {
        let s = TorusSubgroup::<i64>::two_torsion(3);
        assert_eq!(s.order(), 8);
        let a = TorusSubgroup::new(3, vec![h_simple::<i64>(3, &[1, 2], 2)]);
        assert!(a.is_subgroup_of(&s));
        assert!(!s.is_subgroup_of(&a));
        assert_eq!(a.phase_image(&[Weight(vec![1, 1, 0])]).len(), 1);
    }
}
