//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use rayon::prelude::*;

use spherical_core::catalog;
use num_traits::{Signed, Zero};
use spherical_core::intlat;
use spherical_core::monoid;
use spherical_core::torus;
use spherical_core::verify::{self, VerificationReport};
use spherical_core::{CartanType, ClassDescriptor, Family, IntMatrix, RootSystem, Weight};

const RANK_MAX: usize = 8;
const BOUND: i64 = 6;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn t(s: &str) -> CartanType {
    s.parse().expect("valid type")
}

fn all_classes() -> Vec<ClassDescriptor> {
    CartanType::all_up_to(RANK_MAX)
        .into_iter()
        .flat_map(|ty| catalog::instantiate(ty).expect("catalog loads"))
        .collect()
}

fn summarize(reports: &[VerificationReport]) -> (usize, Vec<String>) {
    let mismatches = reports.iter().map(|r| r.mismatches.len()).sum();
    let failing = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}: {:?} {:?}", r.class, r.errors, r.mismatches.first()))
        .collect();
    (mismatches, failing)
}

fn table_reproduction() -> Outcome {
    let start = Instant::now();
    let reports = verify::verify_tables(RANK_MAX, BOUND).expect("sweep runs");
    let elapsed = start.elapsed();
    let (mismatches, failing) = summarize(&reports);
    let ok = failing.is_empty() && elapsed < Duration::from_secs(60);
    outcome(
        ok,
        format!(
            "{} classes, {mismatches} mismatches, {:.1}s{}",
            reports.len(),
            elapsed.as_secs_f64(),
            failing.first().map(|f| format!("; first failure {f}")).unwrap_or_default()
        ),
    )
}

fn oracle_equivalence() -> Outcome {
    let reports = verify::verify_catalog(RANK_MAX, BOUND).expect("sweep runs");
    let (mismatches, failing) = summarize(&reports);
    let isogenies: usize = all_classes().iter().map(|c| c.isogeny.len()).sum();
    outcome(
        failing.is_empty(),
        format!(
            "{} classes, {isogenies} isogeny entries, {mismatches} mismatches{}",
            reports.len(),
            failing.first().map(|f| format!("; first failure {f}")).unwrap_or_default()
        ),
    )
}

fn minima() -> Outcome {
    let r = verify::verify_minima(RANK_MAX);
    outcome(
        r.passed(),
        format!("{} roots checked, {} errors {:?}", r.checked, r.errors.len(), r.errors.first()),
    )
}

fn structural_failures(c: &ClassDescriptor) -> Vec<String> {
    let rs = c.root_system();
    let w = c.w();
    let mut bad = Vec::new();
    if !w.compose(w).is_identity() {
        bad.push("w^2 != 1".to_string());
    }
    let w0wj = rs.longest_element().compose(&rs.parabolic_longest(&c.j).expect("J in range"));
    if *w != w0wj {
        bad.push("w != w0 w_J".to_string());
    }
    if !rs.is_theta_invariant(&c.j) {
        bad.push("J not theta-invariant".to_string());
    }
    let rank = intlat::rank(&IntMatrix::from_i64_rows(&w.one_minus()));
    if !(rs.length(w) + rank).is_multiple_of(2) {
        bad.push("odd dimension".to_string());
    }
    if !monoid::chain_check(c, 4) {
        bad.push("chain".to_string());
    }
    if !monoid::saturation_check(&monoid::lambda_o(c), BOUND) {
        bad.push("lambda(O) not saturated".to_string());
    }
    if !monoid::saturation_check(&monoid::lambda_o_hat(c), BOUND) {
        bad.push("lambda(O_hat) not saturated".to_string());
    }
    let o = monoid::lambda_o(c);
    let cl = monoid::lambda_closure(c);
    let equal = verify::dominant_weights(c.rank(), BOUND)
        .iter()
        .all(|l| o.contains(l) == cl.contains(l));
    if equal != c.normal_closure {
        bad.push("closure equality disagrees with normality flag".to_string());
    }
    bad.into_iter().map(|b| format!("{}: {b}", c.id())).collect()
}

fn structural_invariants() -> Outcome {
    let classes = all_classes();
    let failures: Vec<String> = classes.par_iter().flat_map(structural_failures).collect();
    let witness = |g: &str, label: &str, l: &[i64]| {
        let c = catalog::lookup(t(g), label).expect("class exists");
        let l = Weight(l.to_vec());
        monoid::lambda_o(&c).contains(&l) && !monoid::lambda_closure(&c).contains(&l)
    };
    let witnesses = witness("B3", "Z_2", &[1, 0, 0]) && witness("G2", "A1tilde", &[1, 0]);
    outcome(
        failures.is_empty() && witnesses,
        format!(
            "{} classes, {} failures, strict witnesses {}{}",
            classes.len(),
            failures.len(),
            if witnesses { "found" } else { "missing" },
            failures.first().map(|f| format!("; first failure {f}")).unwrap_or_default()
        ),
    )
}

fn torsion(c: &ClassDescriptor) -> Vec<i64> {
    torus::component_group_of_tw(c.w()).expect("finite torsion")
}

fn lattice_facts() -> Outcome {
    let mut bad = Vec::new();
    for n in 2..=RANK_MAX {
        for l in 1..=n {
            let c = catalog::lookup(CartanType::new(Family::C, n).unwrap(), &format!("X_{l}")).unwrap();
            if torsion(&c) != vec![2; l] {
                bad.push(c.id());
            }
        }
    }
    for n in (3..=RANK_MAX).step_by(2) {
        let ty = CartanType::new(Family::B, n).unwrap();
        for l in 1..=n / 2 {
            let x = catalog::lookup(ty, &format!("X_{l}")).unwrap();
            if !torsion(&x).is_empty() {
                bad.push(x.id());
            }
            let z = catalog::lookup(ty, &format!("Z_{l}")).unwrap();
            if torsion(&z) != vec![2; 2 * l - 1] {
                bad.push(z.id());
            }
        }
    }
    let e8 = catalog::lookup(t("E8"), "3A1").unwrap();
    let image = intlat::image_basis(&IntMatrix::from_i64_rows(&e8.w().one_minus()));
    let expected: Vec<Vec<BigInt>> = [(1, 1), (6, 1), (7, 2), (8, 2)]
        .iter()
        .map(|&(i, k)| {
            let mut v = vec![BigInt::from(0); 8];
            v[i - 1] = BigInt::from(k);
            v
        })
        .collect();
    if image != intlat::hermite_basis(&expected) || torsion(&e8) != vec![2, 2] {
        bad.push(e8.id());
    }
    outcome(bad.is_empty(), format!("{} failures {:?}", bad.len(), bad))
}

fn center_orders() -> Outcome {
    let mut bad = Vec::new();
    for ty in CartanType::all_up_to(RANK_MAX) {
        let n = ty.rank();
        let expected = match ty.family() {
            Family::A => n + 1,
            Family::B | Family::C => 2,
            Family::D => 4,
            Family::E if n == 6 => 3,
            Family::E if n == 7 => 2,
            _ => 1,
        };
        let rs = RootSystem::new(ty);
        let z = torus::center::<i64>(&rs);
        let integral = rs.all_roots().iter().all(|r| {
            let lambda = rs.root_to_weight(r.coords());
            z.generators().iter().all(|g| g.phase(lambda.coords()) == 0.into())
        });
        if z.order() != expected || !integral {
            bad.push(format!("{ty}: order {}", z.order()));
        }
    }
    outcome(bad.is_empty(), format!("{} types checked, failures {:?}", CartanType::all_up_to(RANK_MAX).len(), bad))
}

fn model_flags() -> Outcome {
    let mut models: Vec<String> = all_classes()
        .par_iter()
        .filter(|c| monoid::is_model(c))
        .map(|c| c.id())
        .collect();
    models.sort();
    let expected = ["E8/4A1", "F4/f_2 x_beta_1(1)", "G2/A1tilde"];
    outcome(models == expected, format!("model classes {models:?}"))
}

fn snf_check(m: &IntMatrix) -> Result<(), TestCaseError> {
    let s = intlat::smith_normal_form(m);
    prop_assert_eq!(s.u.mul(m).mul(&s.v), s.d.clone());
    prop_assert!(s.d.is_diagonal());
    prop_assert_eq!(s.u.determinant().abs(), BigInt::from(1));
    prop_assert_eq!(s.v.determinant().abs(), BigInt::from(1));
    prop_assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(m.rows()));
    let diag = s.diagonal();
    prop_assert!(diag.iter().all(|x| x.sign() != num_bigint::Sign::Minus));
    for w in diag.windows(2) {
        prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
    }
    Ok(())
}

fn snf_selftest() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    });
    let strategy = prop::collection::vec(prop::collection::vec(-9i64..=9, 8), 8);
    match runner.run(&strategy, |rows| snf_check(&IntMatrix::from_i64_rows(&rows))) {
        Ok(()) => outcome(true, "1000 random 8x8 matrices"),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("table reproduction", table_reproduction),
        ("oracle equivalence", oracle_equivalence),
        ("connectedness of T^s_alpha", minima),
        ("structural invariants", structural_invariants),
        ("lattice facts", lattice_facts),
        ("center orders", center_orders),
        ("model-orbit flags", model_flags),
        ("Smith normal form self-test", snf_selftest),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        all &= o.ok;
        println!(
            "criterion {} ({name}): {} [{:.1}s] {}",
            i + 1,
            if o.ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
