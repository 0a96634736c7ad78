//! Root systems and Weyl groups of the simple types, Bourbaki numbering.
//!
//! Weights are stored in fundamental-weight coordinates and roots in
//! simple-root coordinates; the Cartan matrix converts between the two.

mod cartan;
mod weyl;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub use cartan::{CartanType, Family};
pub use weyl::WeylElement;

use crate::error::{Error, Result};

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| k * a).collect())
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Graded order: total degree first, then larger leading coordinates first.
    pub fn graded_cmp(&self, other: &Weight) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                f.write_str("-")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "w{}", i + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Parses comma-separated fundamental-weight coordinates, e.g. `0,1,0`.
    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// A root in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    lengths: Vec<i64>,
    symmetrizers: Vec<i64>,
    positive_roots: Vec<Root>,
    positive_weights: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, isize>,
}

pub fn build_root_system(t: CartanType) -> RootSystem {
    RootSystem::new(t)
}

impl RootSystem {
    pub fn new(t: CartanType) -> Self {
        let n = t.rank();
        let cartan = cartan::cartan_matrix(&t);
        let lengths = t.simple_root_lengths();
        let l = lengths.iter().fold(1, |acc, &x| acc.lcm(&x));
        let mut symmetrizers: Vec<i64> = lengths.iter().map(|&x| l / x).collect();
        let g = symmetrizers.iter().fold(0, |acc, &x| acc.gcd(&x));
        symmetrizers.iter_mut().for_each(|d| *d /= g);

        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        seen.extend(layer.iter().cloned());
        while !layer.is_empty() {
            let mut next = BTreeSet::new();
            for beta in &layer {
                for i in 0..n {
                    // <beta, alpha_i^vee> = sum_j c_j a_ji; the alpha_i-string through
                    // beta runs from beta - p alpha_i to beta + q alpha_i with p - q equal to it.
                    let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if seen.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !seen.contains(&up) {
                            next.insert(up);
                        }
                    }
                }
            }
            seen.extend(next.iter().cloned());
            layer = next.into_iter().collect();
        }
        let mut positive_roots: Vec<Root> = seen.into_iter().map(Root).collect();
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)));

        let to_weight = |c: &[i64]| -> Vec<i64> {
            (0..n).map(|j| (0..n).map(|i| c[i] * cartan[i][j]).sum()).collect()
        };
        let positive_weights: Vec<Vec<i64>> =
            positive_roots.iter().map(|r| to_weight(&r.0)).collect();
        let mut lookup = HashMap::new();
        for (k, w) in positive_weights.iter().enumerate() {
            lookup.insert(w.clone(), k as isize + 1);
            lookup.insert(w.iter().map(|x| -x).collect(), -(k as isize + 1));
        }
        RootSystem {
            cartan_type: t,
            cartan,
            lengths,
            symmetrizers,
            positive_roots,
            positive_weights,
            lookup,
        }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    /// Squared lengths of the simple roots (short roots have length 2).
    pub fn simple_lengths(&self) -> &[i64] {
        &self.lengths
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("nonempty root system")
    }

    pub fn simple_root(&self, i: usize) -> Result<Root> {
        self.check_index(i)?;
        let mut c = vec![0; self.rank()];
        c[i - 1] = 1;
        Ok(Root(c))
    }

    /// All roots, positive ones first.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut out = self.positive_roots.clone();
        out.extend(self.positive_roots.iter().map(Root::neg));
        out
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// Fundamental-weight coordinates of an element of the root lattice.
    pub fn root_to_weight(&self, c: &[i64]) -> Weight {
        let n = self.rank();
        Weight(
            (0..n)
                .map(|j| (0..n).map(|i| c[i] * self.cartan[i][j]).sum())
                .collect(),
        )
    }

    pub fn is_root(&self, beta: &Root) -> bool {
        beta.0.len() == self.rank() && self.lookup.contains_key(&self.root_to_weight(&beta.0).0)
    }

    /// The root whose fundamental-weight coordinates are `v`, if any.
    pub fn root_of_weight(&self, v: &[i64]) -> Option<Root> {
        self.lookup.get(v).map(|&k| {
            let r = &self.positive_roots[k.unsigned_abs() - 1];
            if k > 0 {
                r.clone()
            } else {
                r.neg()
            }
        })
    }

    fn is_positive_weight(&self, v: &[i64]) -> bool {
        self.lookup.get(v).is_some_and(|&k| k > 0)
    }

    /// `(beta, gamma)` with short roots of squared length 2.
    pub fn inner(&self, beta: &[i64], gamma: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            for j in 0..n {
                s += beta[i] * gamma[j] * self.cartan[i][j] * self.lengths[j];
            }
        }
        s / 2
    }

    /// Coordinates of `beta^vee` in the basis of simple coroots.
    pub fn coroot(&self, beta: &Root) -> Result<Vec<i64>> {
        if !self.is_root(beta) {
            return Err(Error::NotARoot(beta.0.clone()));
        }
        let lb = self.inner(&beta.0, &beta.0);
        Ok(beta
            .0
            .iter()
            .zip(&self.lengths)
            .map(|(c, l)| c * l / lb)
            .collect())
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank())
    }

    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement> {
        self.check_index(i)?;
        let n = self.rank();
        let mut m = WeylElement::identity(n).matrix().to_vec();
        for (k, row) in m.iter_mut().enumerate() {
            row[i - 1] -= self.cartan[i - 1][k];
        }
        Ok(WeylElement::from_matrix(m))
    }

    pub fn reflection_for_root(&self, beta: &Root) -> Result<WeylElement> {
        let chat = self.coroot(beta)?;
        let bw = self.root_to_weight(&beta.0).0;
        let n = self.rank();
        let m = (0..n)
            .map(|k| {
                (0..n)
                    .map(|j| i64::from(k == j) - bw[k] * chat[j])
                    .collect()
            })
            .collect();
        Ok(WeylElement::from_matrix(m))
    }

    /// Product `s_{beta_1} ... s_{beta_k}` in the given order.
    pub fn product_of_reflections(&self, betas: &[Root]) -> Result<WeylElement> {
        betas.iter().try_fold(self.identity(), |acc, b| {
            Ok(acc.compose(&self.reflection_for_root(b)?))
        })
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_weights
            .iter()
            .filter(|b| !self.is_positive_weight(&w.apply(b)))
            .count()
    }

    pub fn longest_element(&self) -> WeylElement {
        self.longest_in(&(1..=self.rank()).collect::<Vec<_>>())
    }

    /// Longest element of the parabolic subgroup `W_J`; indices are 1-based.
    pub fn parabolic_longest(&self, j: &[usize]) -> Result<WeylElement> {
        for &i in j {
            self.check_index(i)?;
        }
        Ok(self.longest_in(j))
    }

    fn longest_in(&self, j: &[usize]) -> WeylElement {
        let mut w = self.identity();
        'outer: loop {
            for &i in j {
                let image = w.apply(&self.cartan[i - 1]);
                if self.is_positive_weight(&image) {
                    w = w.compose(&self.simple_reflection(i).expect("checked index"));
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// The diagram symmetry `theta` with `w0(alpha_i) = -alpha_theta(i)`,
    /// returned as a 1-based permutation (`theta[i-1] = theta(i)`).
    pub fn theta(&self) -> Vec<usize> {
        let w0 = self.longest_element();
        (0..self.rank())
            .map(|i| {
                let img: Vec<i64> = w0.apply(&self.cartan[i]).iter().map(|x| -x).collect();
                (0..self.rank())
                    .find(|&k| self.cartan[k] == img)
                    .expect("w0 maps simple roots to negative simple roots")
                    + 1
            })
            .collect()
    }

    /// Orbits of `theta` on the given 1-based indices, each sorted, ordered by minimum.
    pub fn theta_orbits(&self, indices: &[usize]) -> Vec<Vec<usize>> {
        let theta = self.theta();
        let set: BTreeSet<usize> = indices.iter().copied().collect();
        let mut out: Vec<Vec<usize>> = Vec::new();
        for &i in &set {
            let t = theta[i - 1];
            if t < i && set.contains(&t) {
                continue;
            }
            let mut orbit = vec![i];
            if t != i {
                orbit.push(t);
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_theta_invariant(&self, j: &[usize]) -> bool {
        let theta = self.theta();
        j.iter().all(|&i| j.contains(&theta[i - 1]))
    }

    /// `{beta in Phi : w(beta) = -beta}` for an involution `w`.
    pub fn minus_fixed_roots(&self, w: &WeylElement) -> Result<Vec<Root>> {
        if !w.is_involution() {
            return Err(Error::NotAnInvolution);
        }
        let mut out = Vec::new();
        for (r, b) in self.positive_roots.iter().zip(&self.positive_weights) {
            let img = w.apply(b);
            if img.iter().zip(b).all(|(x, y)| *x == -*y) {
                out.push(r.clone());
                out.push(r.neg());
            }
        }
        Ok(out)
    }

    /// Converts a classical root given in orthonormal `e_i` coordinates
    /// (Bourbaki planches) to simple-root coordinates.
    pub fn root_from_epsilon(&self, e: &[i64]) -> Result<Root> {
        let n = self.rank();
        let bad = || Error::NotARoot(e.to_vec());
        let prefix = |k: usize| -> i64 { e[..k].iter().sum() };
        let c: Vec<i64> = match self.cartan_type.family() {
            Family::A => {
                if e.len() != n + 1 {
                    return Err(bad());
                }
                (1..=n).map(prefix).collect()
            }
            Family::B => (1..=n).map(prefix).collect(),
            Family::C => {
                let mut c: Vec<i64> = (1..=n).map(prefix).collect();
                if c[n - 1] % 2 != 0 {
                    return Err(bad());
                }
                c[n - 1] /= 2;
                c
            }
            Family::D => {
                let mut c: Vec<i64> = (1..=n).map(prefix).collect();
                let s1 = prefix(n - 1);
                let (a, b) = (s1 - e[n - 1], s1 + e[n - 1]);
                if a % 2 != 0 {
                    return Err(bad());
                }
                c[n - 2] = a / 2;
                c[n - 1] = b / 2;
                c
            }
            _ => return Err(bad()),
        };
        if e.len() != n + usize::from(self.cartan_type.family() == Family::A) {
            return Err(bad());
        }
        let r = Root(c);
        if self.is_root(&r) {
            Ok(r)
        } else {
            Err(bad())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    #[test]
    fn root_counts() {
        for (t, k) in [
            ("A1", 1),
            ("A2", 3),
            ("A7", 28),
            ("B4", 16),
            ("C3", 9),
            ("D4", 12),
            ("D8", 56),
            ("E6", 36),
            ("E7", 63),
            ("E8", 120),
            ("F4", 24),
            ("G2", 6),
        ] {
            assert_eq!(rs(t).positive_roots().len(), k, "{t}");
        }
    }

    #[test]
    fn a2_roots_and_highest() {
        let r = rs("A2");
        let roots: Vec<_> = r.positive_roots().iter().map(|x| x.0.clone()).collect();
        assert_eq!(roots, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(rs("G2").highest_root().0, vec![3, 2]);
        assert_eq!(rs("E8").highest_root().0, vec![2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(rs("F4").highest_root().0, vec![2, 3, 4, 2]);
    }

    #[test]
    fn symmetrized_cartan() {
        for t in CartanType::all_up_to(8) {
            let r = RootSystem::new(t);
            let n = r.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(
                        r.symmetrizers()[i] * r.cartan()[i][j],
                        r.symmetrizers()[j] * r.cartan()[j][i]
                    );
                }
            }
        }
    }

    #[test]
    fn simple_reflection_examples() {
        let r = rs("A2");
        let s1 = r.simple_reflection(1).unwrap();
        assert_eq!(s1.apply(&[1, 0]), vec![-1, 1]);
        assert_eq!(s1.apply(&[0, 1]), vec![0, 1]);
        let c2 = rs("C2");
        let a2 = c2.root_to_weight(&[0, 1]).0;
        let s2 = c2.simple_reflection(2).unwrap();
        assert_eq!(s2.apply(&a2), a2.iter().map(|x| -x).collect::<Vec<_>>());
        assert_eq!(
            r.simple_reflection(3),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        );
    }

    #[test]
    fn reflection_examples() {
        let a3 = rs("A3");
        let beta = a3.root_from_epsilon(&[1, 0, 0, -1]).unwrap();
        assert_eq!(beta.0, vec![1, 1, 1]);
        let s = a3.reflection_for_root(&beta).unwrap();
        assert!(s.is_involution());
        assert_eq!(a3.length(&s), 5);
        let g2 = rs("G2");
        let s = g2.reflection_for_root(&Root(vec![3, 2])).unwrap();
        assert_eq!(g2.length(&s), 5);
        assert_eq!(
            g2.reflection_for_root(&Root(vec![1, 0])).unwrap(),
            g2.simple_reflection(1).unwrap()
        );
        assert!(g2.reflection_for_root(&Root(vec![2, 2])).is_err());
        let a5 = rs("A5");
        let b1 = a5.root_from_epsilon(&[1, 0, 0, 0, 0, -1]).unwrap();
        assert_eq!(a5.length(&a5.reflection_for_root(&b1).unwrap()), 9);
    }

    #[test]
    fn longest_elements() {
        let c3 = rs("C3");
        let w0 = c3.longest_element();
        assert_eq!(w0.apply(&[1, 2, 3]), vec![-1, -2, -3]);
        let a2 = rs("A2");
        assert_eq!(a2.longest_element().apply(&[1, 0]), vec![0, -1]);
        let e6 = rs("E6");
        let wj = e6.parabolic_longest(&[3, 4, 5]).unwrap();
        for i in [1, 2, 6] {
            let w = Weight::fundamental(6, i);
            assert_eq!(wj.apply(w.coords()), w.0);
        }
        assert_eq!(rs("E7").length(&rs("E7").longest_element()), 63);
        assert_eq!(a2.length(&a2.identity()), 0);
    }

    #[test]
    fn theta_examples() {
        assert_eq!(rs("C4").theta(), vec![1, 2, 3, 4]);
        assert_eq!(rs("A3").theta(), vec![3, 2, 1]);
        assert_eq!(rs("E6").theta(), vec![6, 2, 5, 4, 3, 1]);
        assert_eq!(rs("D5").theta(), vec![1, 2, 3, 5, 4]);
        assert_eq!(rs("D4").theta(), vec![1, 2, 3, 4]);
        assert_eq!(
            rs("E6").theta_orbits(&[1, 2, 6]),
            vec![vec![1, 6], vec![2]]
        );
    }

    #[test]
    fn minus_fixed_examples() {
        let a2 = rs("A2");
        assert!(a2.minus_fixed_roots(&a2.identity()).unwrap().is_empty());
        let c2 = rs("C2");
        assert_eq!(c2.minus_fixed_roots(&c2.longest_element()).unwrap().len(), 8);
        let s = a2.reflection_for_root(&Root(vec![1, 1])).unwrap();
        let fixed = a2.minus_fixed_roots(&s).unwrap();
        assert_eq!(fixed, vec![Root(vec![1, 1]), Root(vec![-1, -1])]);
        let a3 = rs("A3");
        let c = a3.simple_reflection(1).unwrap().compose(&a3.simple_reflection(2).unwrap());
        assert_eq!(a3.minus_fixed_roots(&c), Err(Error::NotAnInvolution));
    }

    #[test]
    fn epsilon_conversion() {
        let d4 = rs("D4");
        assert_eq!(d4.root_from_epsilon(&[0, 0, 1, 1]).unwrap().0, vec![0, 0, 0, 1]);
        assert_eq!(d4.root_from_epsilon(&[1, 1, 0, 0]).unwrap().0, vec![1, 2, 1, 1]);
        let c3 = rs("C3");
        assert_eq!(c3.root_from_epsilon(&[2, 0, 0]).unwrap().0, vec![2, 2, 1]);
        let b3 = rs("B3");
        assert_eq!(b3.root_from_epsilon(&[1, 0, 0]).unwrap().0, vec![1, 1, 1]);
        assert!(b3.root_from_epsilon(&[2, 0, 0]).is_err());
    }

    #[test]
    fn weight_display_and_parse() {
        assert_eq!(Weight(vec![2, 0, 1]).to_string(), "2w1+w3");
        assert_eq!(Weight(vec![0, 0]).to_string(), "0");
        assert_eq!("1, 0,2".parse::<Weight>().unwrap(), Weight(vec![1, 0, 2]));
        assert!("1,x".parse::<Weight>().is_err());
    }
}
