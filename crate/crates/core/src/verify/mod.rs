//! Cross-checks of the monoid engine: against a first-principles oracle,
//! against the printed tables, and for connectedness of `T^{s_alpha}`.

pub mod tables;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{ClassDescriptor, GroupCatalog};
use crate::error::{Error, Result};
use crate::monoid::{self, WeightMonoid};
use crate::rootsys::{CartanType, Family, RootSystem, Weight};
use crate::torus;

/// Which coordinate ring a membership question refers to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Variant {
    O,
    Cover,
    Closure,
    Isogeny(String),
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::O => f.write_str("O"),
            Variant::Cover => f.write_str("cover"),
            Variant::Closure => f.write_str("closure"),
            Variant::Isogeny(tag) => write!(f, "isogeny:{tag}"),
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O" | "o" => Ok(Variant::O),
            "cover" | "O_hat" | "Ohat" => Ok(Variant::Cover),
            "closure" => Ok(Variant::Closure),
            _ => match s.strip_prefix("isogeny:") {
                Some(tag) if !tag.is_empty() => Ok(Variant::Isogeny(tag.to_string())),
                _ => Err(Error::UnknownVariant(s.to_string())),
            },
        }
    }
}

/// Every variant available on a class.
pub fn variants(c: &ClassDescriptor) -> Vec<Variant> {
    let mut v = vec![Variant::O, Variant::Cover, Variant::Closure];
    v.extend(c.isogeny.iter().map(|e| Variant::Isogeny(e.tag.clone())));
    v
}

/// The engine's monoid for a variant.
pub fn engine_monoid(c: &ClassDescriptor, variant: &Variant) -> Result<WeightMonoid> {
    Ok(match variant {
        Variant::O => monoid::lambda_o(c),
        Variant::Cover => monoid::lambda_o_hat(c),
        Variant::Closure => monoid::lambda_closure(c),
        Variant::Isogeny(tag) => monoid::lambda_isogeny(c, tag)?,
    })
}

/// Membership read off from `w` and the torus data alone: `(1 + w) lambda = 0`
/// and `lambda` trivial on the relevant finite subgroup.
pub fn oracle_membership(c: &ClassDescriptor, lambda: &Weight, variant: &Variant) -> Result<bool> {
    if !lambda.is_dominant() || lambda.rank() != c.rank() {
        return Err(Error::BadWeight(lambda.coords().to_vec()));
    }
    let w_fixed = c
        .w()
        .one_plus()
        .iter()
        .all(|row| row.iter().zip(lambda.coords()).map(|(a, b)| a * b).sum::<i64>() == 0);
    Ok(match variant {
        Variant::O => w_fixed && c.s_o.trivial_on(lambda),
        Variant::Cover => w_fixed && c.s_o_hat.trivial_on(lambda),
        Variant::Closure => match tables::closure_contains(c.group, &c.label, lambda) {
            Some(v) if !c.normal_closure => v,
            _ => w_fixed && c.s_o.trivial_on(lambda),
        },
        Variant::Isogeny(tag) => {
            let e = c.isogeny_entry(tag)?;
            w_fixed && e.d.trivial_on(lambda) && e.t_xd.trivial_on(lambda)
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub variant: String,
    pub weight: Weight,
    pub expected: bool,
    pub got: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub class: String,
    pub checked_bound: i64,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
    /// Structural failures that are not tied to a single weight.
    pub errors: Vec<String>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.errors.is_empty()
    }
}

/// Dominant weights of rank `n` with coefficient sum at most `bound`.
pub fn dominant_weights(n: usize, bound: i64) -> Vec<Weight> {
    fn rec(n: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == n {
            out.push(Weight(cur.clone()));
            return;
        }
        for x in 0..=left {
            cur.push(x);
            rec(n, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, bound, &mut Vec::with_capacity(n), &mut out);
    out.sort_by(Weight::graded_cmp);
    out
}

/// Engine membership is checked twice: through the monoid's own predicate
/// and through decomposition into its generators.
fn engine_checks(m: &WeightMonoid, lambda: &Weight) -> (bool, bool) {
    (m.contains(lambda), m.is_generated(lambda))
}

/// Engine against oracle on every dominant weight of coefficient sum at most
/// `bound`, for every variant of `c`.
pub fn verify_class(c: &ClassDescriptor, bound: i64) -> VerificationReport {
    let start = Instant::now();
    let weights = dominant_weights(c.rank(), bound);
    let mut mismatches = Vec::new();
    let mut errors = Vec::new();
    for variant in variants(c) {
        let m = match engine_monoid(c, &variant) {
            Ok(m) => m,
            Err(e) => {
                errors.push(format!("{variant}: {e}"));
                continue;
            }
        };
        for lambda in &weights {
            let expected = match oracle_membership(c, lambda, &variant) {
                Ok(v) => v,
                Err(e) => {
                    errors.push(format!("{variant}: {e}"));
                    break;
                }
            };
            let (a, b) = engine_checks(&m, lambda);
            for got in [a, b] {
                if got != expected {
                    mismatches.push(Mismatch {
                        variant: variant.to_string(),
                        weight: lambda.clone(),
                        expected,
                        got,
                    });
                    break;
                }
            }
        }
    }
    VerificationReport {
        class: c.id(),
        checked_bound: bound,
        checked: weights.len(),
        mismatches,
        errors,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// Engine against the printed rows for one group; every class must have a
/// row and every row a class.
pub fn verify_group_tables(t: CartanType, bound: i64) -> Result<Vec<VerificationReport>> {
    let cat = GroupCatalog::new(t)?;
    let rows = tables::rows(t);
    let weights = dominant_weights(t.rank(), bound);
    let mut reports: Vec<VerificationReport> = cat
        .classes()
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let mut mismatches = Vec::new();
            let mut errors = Vec::new();
            match rows.iter().find(|r| r.label == c.label) {
                None => errors.push("no printed row".to_string()),
                Some(r) => {
                    let mut pairs = vec![
                        (Variant::O, monoid::lambda_o(c), &r.o),
                        (Variant::Cover, monoid::lambda_o_hat(c), &r.o_hat),
                    ];
                    for (tag, formula) in &r.isogeny {
                        match monoid::lambda_isogeny(c, tag) {
                            Ok(m) => pairs.push((Variant::Isogeny(tag.clone()), m, formula)),
                            Err(e) => errors.push(e.to_string()),
                        }
                    }
                    if r.isogeny.len() != c.isogeny.len() {
                        errors.push("isogeny rows differ from catalog entries".to_string());
                    }
                    for (variant, m, formula) in pairs {
                        for lambda in &weights {
                            let expected = formula.contains(lambda);
                            let (a, b) = engine_checks(&m, lambda);
                            for got in [a, b] {
                                if got != expected {
                                    mismatches.push(Mismatch {
                                        variant: variant.to_string(),
                                        weight: lambda.clone(),
                                        expected,
                                        got,
                                    });
                                    break;
                                }
                            }
                        }
                    }
                }
            }
            VerificationReport {
                class: c.id(),
                checked_bound: bound,
                checked: weights.len(),
                mismatches,
                errors,
                elapsed_ms: start.elapsed().as_millis(),
            }
        })
        .collect();
    for r in &rows {
        if !cat.classes().iter().any(|c| c.label == r.label) {
            reports.push(VerificationReport {
                class: format!("{t}/{}", r.label),
                checked_bound: bound,
                checked: 0,
                mismatches: Vec::new(),
                errors: vec!["printed row without catalog class".to_string()],
                elapsed_ms: 0,
            });
        }
    }
    Ok(reports)
}

/// The standard sweep: every type of rank at most `rank_max`.
pub fn sweep_types(rank_max: usize) -> Vec<CartanType> {
    CartanType::all_up_to(rank_max)
}

pub fn verify_tables(rank_max: usize, bound: i64) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for t in sweep_types(rank_max) {
        out.extend(verify_group_tables(t, bound)?);
    }
    Ok(out)
}

/// Engine against oracle for every class of every type of rank at most `rank_max`.
pub fn verify_catalog(rank_max: usize, bound: i64) -> Result<Vec<VerificationReport>> {
    let classes: Vec<ClassDescriptor> = sweep_types(rank_max)
        .into_iter()
        .map(|t| GroupCatalog::new(t).map(GroupCatalog::into_classes))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(classes.par_iter().map(|c| verify_class(c, bound)).collect())
}

/// Whether `T^{s_alpha}` should be disconnected: type `A_1`, or `alpha` long
/// in `C_n` (including `B_2 = C_2` with its long simple root).
fn minima_expected(t: CartanType, long: bool) -> bool {
    match t.family() {
        Family::A => t.rank() == 1,
        Family::C => long,
        Family::B => t.rank() == 2 && long,
        _ => false,
    }
}

/// `T^{s_alpha}` for every positive root of every type of rank at most
/// `rank_max`: the component group is `Z/2` in the expected cases and
/// trivial otherwise.
pub fn verify_minima(rank_max: usize) -> VerificationReport {
    let start = Instant::now();
    let mut errors = Vec::new();
    let mut checked = 0;
    for t in sweep_types(rank_max) {
        let rs = RootSystem::new(t);
        let max_len = rs
            .positive_roots()
            .iter()
            .map(|r| rs.inner(r.coords(), r.coords()))
            .max()
            .unwrap_or(0);
        for alpha in rs.positive_roots() {
            checked += 1;
            let long = rs.inner(alpha.coords(), alpha.coords()) == max_len;
            let w = match rs.reflection_for_root(alpha) {
                Ok(w) => w,
                Err(e) => {
                    errors.push(format!("{t} {alpha}: {e}"));
                    continue;
                }
            };
            let divisors = match torus::component_group_of_tw(&w) {
                Ok(d) => d,
                Err(e) => {
                    errors.push(format!("{t} {alpha}: {e}"));
                    continue;
                }
            };
            let expected: Vec<i64> = if minima_expected(t, long) { vec![2] } else { Vec::new() };
            if divisors != expected {
                errors.push(format!("{t} {alpha}: component group {divisors:?}, expected {expected:?}"));
                continue;
            }
        }
    }
    VerificationReport {
        class: "minima".to_string(),
        checked_bound: 0,
        checked,
        mismatches: Vec::new(),
        errors,
        elapsed_ms: start.elapsed().as_millis(),
    }
}
