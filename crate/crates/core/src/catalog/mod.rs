//! Inventory of spherical conjugacy classes: label, `J`, the reflection
//! factorization of `w`, the torus data `S_O`, `S_Ô` and isogeny entries.
//! Classical families are generated per rank; exceptional groups are loaded
//! from the JSON files under `data/`.

mod classical;
mod exceptional;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, Root, RootSystem, Weight, WeylElement};
use crate::torus::{self, Coweight, TorusSubgroup};
use crate::{FiniteTorusSubgroup, TorusPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassKind {
    Unipotent,
    Semisimple,
    Mixed,
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassKind::Unipotent => "unipotent",
            ClassKind::Semisimple => "semisimple",
            ClassKind::Mixed => "mixed",
        })
    }
}

/// The two classes whose closure is not normal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosureSpecial {
    #[serde(rename = "B_odd_Zmax")]
    BOddZmax,
    #[serde(rename = "G2_A1tilde")]
    G2A1tilde,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IsogenyEntry {
    pub tag: String,
    pub note: String,
    /// The central subgroup `D`.
    pub d: FiniteTorusSubgroup,
    /// Generators of `T_{x,D}` modulo `(T^w)°`.
    pub t_xd: FiniteTorusSubgroup,
}

/// Class data before validation.
#[derive(Debug, Clone)]
pub(crate) struct RawClass {
    pub label: String,
    pub aliases: Vec<String>,
    pub kind: ClassKind,
    pub j: Vec<usize>,
    pub w_factors: Vec<Root>,
    pub s_o: Vec<TorusPoint>,
    pub s_o_hat: Vec<TorusPoint>,
    pub normal: bool,
    pub closure_special: Option<ClosureSpecial>,
    pub isogeny: Vec<(String, String, Vec<TorusPoint>, Vec<TorusPoint>)>,
}

impl RawClass {
    pub(crate) fn new(label: impl Into<String>, kind: ClassKind, j: Vec<usize>) -> Self {
        RawClass {
            label: label.into(),
            aliases: Vec::new(),
            kind,
            j,
            w_factors: Vec::new(),
            s_o: Vec::new(),
            s_o_hat: Vec::new(),
            normal: true,
            closure_special: None,
            isogeny: Vec::new(),
        }
    }

    pub(crate) fn alias(mut self, a: impl Into<String>) -> Self {
        self.aliases.push(a.into());
        self
    }

    pub(crate) fn factors(mut self, f: Vec<Root>) -> Self {
        self.w_factors = f;
        self
    }

    pub(crate) fn s_o(mut self, s: Vec<TorusPoint>) -> Self {
        self.s_o = s;
        self
    }

    pub(crate) fn s_o_hat(mut self, s: Vec<TorusPoint>) -> Self {
        self.s_o_hat = s;
        self
    }

    /// Sets `S_Ô = S_O`.
    pub(crate) fn cover_equal(mut self) -> Self {
        self.s_o_hat = self.s_o.clone();
        self
    }
}

#[derive(Debug, Clone)]
pub struct ClassDescriptor {
    pub group: CartanType,
    pub label: String,
    pub aliases: Vec<String>,
    pub kind: ClassKind,
    pub j: Vec<usize>,
    pub w_factors: Vec<Root>,
    pub s_o: FiniteTorusSubgroup,
    pub s_o_hat: FiniteTorusSubgroup,
    pub normal_closure: bool,
    pub closure_special: Option<ClosureSpecial>,
    pub isogeny: Vec<IsogenyEntry>,
    w: WeylElement,
    basis: Vec<Weight>,
    root_system: Arc<RootSystem>,
}

impl ClassDescriptor {
    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    /// The involution `w = s_{beta_1} ... s_{beta_k}`.
    pub fn w(&self) -> &WeylElement {
        &self.w
    }

    /// The basis `{omega_S}` of `P⁺_w`.
    pub fn pw_basis(&self) -> &[Weight] {
        &self.basis
    }

    pub fn id(&self) -> String {
        format!("{}/{}", self.group, self.label)
    }

    pub fn isogeny_entry(&self, tag: &str) -> Result<&IsogenyEntry> {
        self.isogeny
            .iter()
            .find(|e| e.tag == tag)
            .ok_or_else(|| Error::NoIsogeny {
                label: self.label.clone(),
                tag: tag.to_string(),
            })
    }

    pub fn matches(&self, label: &str) -> bool {
        let key = normalize_label(label);
        normalize_label(&self.label) == key || self.aliases.iter().any(|a| normalize_label(a) == key)
    }

    fn build(rs: &Arc<RootSystem>, raw: RawClass) -> Result<Self> {
        let t = rs.cartan_type();
        let n = rs.rank();
        let fail = |msg: String| Err(Error::Data(format!("{t} {}: {msg}", raw.label)));
        for beta in &raw.w_factors {
            if !rs.is_root(beta) {
                return fail(format!("factor {beta} is not a root"));
            }
        }
        let mut j = raw.j.clone();
        j.sort_unstable();
        j.dedup();
        if j.iter().any(|&i| i == 0 || i > n) {
            return fail(format!("J = {j:?} out of range"));
        }
        if !rs.is_theta_invariant(&j) {
            return fail(format!("J = {j:?} is not theta-invariant"));
        }
        let w = rs.product_of_reflections(&raw.w_factors)?;
        if !w.is_involution() {
            return fail("w is not an involution".into());
        }
        let expected = rs.longest_element().compose(&rs.parabolic_longest(&j)?);
        if w != expected {
            return fail("w differs from w0 w_J".into());
        }
        if w.is_identity() {
            return fail("central class".into());
        }
        let basis = crate::monoid::pwplus_basis(rs, &j)?;
        let s_o = TorusSubgroup::new(n, raw.s_o);
        let s_o_hat = TorusSubgroup::new(n, raw.s_o_hat);
        for g in s_o.generators().iter().chain(s_o_hat.generators()) {
            if !torus::is_fixed_by(&w, g) {
                return fail(format!("torus element {g} is not fixed by w"));
            }
        }
        if !s_o_hat.is_subgroup_of(&s_o) {
            return fail("S_O_hat is not contained in S_O".into());
        }
        let z = torus::center(rs);
        if !z.phase_image(&basis).is_subset(&s_o.phase_image(&basis)) {
            return fail("center is not effectively contained in S_O".into());
        }
        let mut isogeny = Vec::new();
        for (tag, note, d, t_xd) in raw.isogeny {
            let d = TorusSubgroup::new(n, d);
            let t_xd = TorusSubgroup::new(n, t_xd);
            if !d.is_subgroup_of(&z) {
                return fail(format!("isogeny {tag}: D is not central"));
            }
            for g in t_xd.generators() {
                if !is_fixed_modulo(&w, g, &d) {
                    return fail(format!("isogeny {tag}: {g} is not in T^w_D"));
                }
            }
            isogeny.push(IsogenyEntry { tag, note, d, t_xd });
        }
        let c = ClassDescriptor {
            group: t,
            label: raw.label,
            aliases: raw.aliases,
            kind: raw.kind,
            j,
            w_factors: raw.w_factors,
            s_o,
            s_o_hat,
            normal_closure: raw.normal,
            closure_special: raw.closure_special,
            isogeny,
            w,
            basis,
            root_system: Arc::clone(rs),
        };
        let dim = c.class_dimension_raw();
        if !dim.is_multiple_of(2) {
            return Err(Error::Data(format!("{}: odd dimension {dim}", c.id())));
        }
        if c.normal_closure == c.closure_special.is_some() {
            return Err(Error::Data(format!("{}: normality flag inconsistent", c.id())));
        }
        Ok(c)
    }

    fn class_dimension_raw(&self) -> usize {
        self.root_system.length(&self.w) + crate::intlat::rank(&crate::IntMatrix::from_i64_rows(&self.w.one_minus()))
    }
}

/// `w t w^{-1} = z t` for some `z` in `D`.
fn is_fixed_modulo(w: &WeylElement, t: &TorusPoint, d: &FiniteTorusSubgroup) -> bool {
    let n = w.rank();
    let m = w.one_minus();
    let cols: Vec<Vec<i64>> = (0..n).map(|j| (0..n).map(|i| -m[i][j]).collect()).collect();
    d.elements().iter().any(|z| {
        (0..n).all(|j| t.phase(&cols[j]) == z.phase(Weight::fundamental(n, j + 1).coords()))
    })
}

fn normalize_label(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '_')
        .flat_map(char::to_lowercase)
        .collect()
}

/// All classes of one group together with its root system.
#[derive(Debug, Clone)]
pub struct GroupCatalog {
    root_system: Arc<RootSystem>,
    classes: Vec<ClassDescriptor>,
}

impl GroupCatalog {
    pub fn new(t: CartanType) -> Result<Self> {
        let rs = Arc::new(RootSystem::new(t));
        let raws = if t.is_classical() {
            classical::classes(&rs)?
        } else {
            exceptional::classes(&rs)?
        };
        let classes = raws
            .into_iter()
            .map(|r| ClassDescriptor::build(&rs, r))
            .collect::<Result<Vec<_>>>()?;
        let mut keys: Vec<String> = classes
            .iter()
            .flat_map(|c| std::iter::once(&c.label).chain(&c.aliases))
            .map(|s| normalize_label(s))
            .collect();
        keys.sort();
        if let Some(dup) = keys.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Data(format!("{t}: duplicate label {:?}", dup[0])));
        }
        Ok(GroupCatalog {
            root_system: rs,
            classes,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn classes(&self) -> &[ClassDescriptor] {
        &self.classes
    }

    pub fn into_classes(self) -> Vec<ClassDescriptor> {
        self.classes
    }

    pub fn lookup(&self, label: &str) -> Result<&ClassDescriptor> {
        self.classes
            .iter()
            .find(|c| c.matches(label))
            .ok_or_else(|| Error::UnknownClass {
                group: self.root_system.cartan_type().to_string(),
                label: label.to_string(),
                available: self
                    .classes
                    .iter()
                    .map(|c| c.label.as_str())
                    .collect::<Vec<_>>()
                    .join(", "),
            })
    }
}

pub fn instantiate(t: CartanType) -> Result<Vec<ClassDescriptor>> {
    Ok(GroupCatalog::new(t)?.into_classes())
}

pub fn lookup(t: CartanType, label: &str) -> Result<ClassDescriptor> {
    GroupCatalog::new(t)?.lookup(label).cloned()
}

/// Order of the component group of the centralizer: the index of the image
/// of `S_Ô` in the image of `S_O`, both taken as characters of `P_w`.
pub fn centralizer_component_order(c: &ClassDescriptor) -> usize {
    c.s_o.phase_image(&c.basis).len() / c.s_o_hat.phase_image(&c.basis).len()
}

pub(crate) fn half(n: usize, indices: &[usize]) -> TorusPoint {
    torus::h_simple(n, indices, 2)
}

pub(crate) fn quarter(n: usize, indices: &[usize]) -> TorusPoint {
    torus::h_simple(n, indices, 4)
}

pub(crate) fn two_torsion(n: usize) -> Vec<TorusPoint> {
    (1..=n).map(|i| half(n, &[i])).collect()
}

pub(crate) fn center_generators(rs: &RootSystem) -> Vec<Coweight<i64>> {
    torus::center::<i64>(rs).generators().to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    #[test]
    fn every_group_loads() {
        for ty in CartanType::all_up_to(8) {
            let cat = GroupCatalog::new(ty).unwrap_or_else(|e| panic!("{ty}: {e}"));
            assert!(!cat.classes().is_empty(), "{ty}");
        }
    }

    #[test]
    fn lookup_examples() {
        let c = lookup(t("B5"), "Z_3").unwrap();
        assert!(c.j.is_empty());
        assert_eq!(c.w(), &c.root_system().longest_element());
        let c = lookup(t("E7"), "3A1''").unwrap();
        assert_eq!(c.j, vec![2, 3, 4, 5]);
        assert_eq!(c.w_factors.len(), 3);
        match lookup(t("A4"), "X_9") {
            Err(Error::UnknownClass { available, .. }) => assert!(available.contains("X_1")),
            other => panic!("{other:?}"),
        }
        assert_eq!(lookup(t("E7"), "e6t1").unwrap().label, "exp(zeta w7)");
    }

    #[test]
    fn instantiate_examples() {
        let labels = |ty: &str| -> Vec<String> {
            instantiate(t(ty)).unwrap().into_iter().map(|c| c.label).collect()
        };
        let e8 = labels("E8");
        for l in ["A1", "2A1", "3A1", "4A1", "exp(pi i w8)", "exp(pi i w1)"] {
            assert!(e8.contains(&l.to_string()), "{l}");
        }
        assert_eq!(e8.len(), 6);
        assert_eq!(labels("G2").len(), 4);
        let c3 = instantiate(t("C3")).unwrap();
        let count = |k| c3.iter().filter(|c| c.kind == k).count();
        assert_eq!(count(ClassKind::Unipotent), 3);
        assert_eq!(count(ClassKind::Semisimple), 3);
        assert_eq!(count(ClassKind::Mixed), 2);
    }

    #[test]
    fn component_orders() {
        assert_eq!(centralizer_component_order(&lookup(t("E8"), "4A1").unwrap()), 1);
        assert_eq!(centralizer_component_order(&lookup(t("E7"), "4A1").unwrap()), 2);
        for n in 2..=6 {
            let ty = CartanType::new(crate::Family::C, n).unwrap();
            for l in 1..=n {
                let c = lookup(ty, &format!("X_{l}")).unwrap();
                assert_eq!(centralizer_component_order(&c), 2, "C{n} X_{l}");
            }
        }
    }

    #[test]
    fn normality_flags() {
        for ty in CartanType::all_up_to(8) {
            for c in instantiate(ty).unwrap() {
                let special = matches!(
                    (ty.to_string().as_str(), c.label.as_str()),
                    ("G2", "A1tilde")
                ) || (ty.family() == crate::Family::B
                    && ty.rank() % 2 == 1
                    && c.label == format!("Z_{}", ty.rank() / 2 + 1));
                assert_eq!(!c.normal_closure, special, "{}", c.id());
            }
        }
    }
}
