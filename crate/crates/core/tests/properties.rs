use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use spherical_core::intlat::{self, Lattice};
use spherical_core::{catalog, monoid, CartanType, ClassDescriptor, IntMatrix, RootSystem, TorusPoint, Weight};

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-20i64..=20, c), r))
}

fn types() -> Vec<CartanType> {
    CartanType::all_up_to(6)
}

fn classes() -> Vec<ClassDescriptor> {
    types()
        .into_iter()
        .flat_map(|t| catalog::instantiate(t).unwrap())
        .collect()
}

fn coweight(n: usize) -> impl Strategy<Value = TorusPoint> {
    prop::collection::vec((-12i64..=12, 1i64..=12), n)
        .prop_map(|q| TorusPoint::new(q.into_iter().map(|(a, b)| Ratio::new(a, b)).collect()))
}

proptest! {
    #[test]
    fn smith_form(rows in matrix()) {
        let m = IntMatrix::from_i64_rows(&rows);
        let s = intlat::smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(m.rows()));
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(s.v.determinant().abs().is_one());
        let diag = s.diagonal();
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
        }
        let rank = diag.iter().filter(|x| !x.is_zero()).count();
        prop_assert_eq!(intlat::rank(&m), rank);
    }

    #[test]
    fn hermite_basis_spans_the_same_lattice(rows in matrix()) {
        let big: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let h = intlat::hermite_basis(&big);
        let lattice = Lattice::<BigInt>::spanned_by(rows[0].len(), &big);
        for r in &big {
            prop_assert!(lattice.contains(r));
        }
        let back = Lattice::<BigInt>::spanned_by(rows[0].len(), &h);
        for r in &h {
            prop_assert!(lattice.contains(r));
        }
        prop_assert_eq!(back.basis(), lattice.basis());
        prop_assert_eq!(h.len(), intlat::rank(&IntMatrix::from_i64_rows(&rows)));
    }

    #[test]
    fn weyl_words(t in 0..types().len(), word in prop::collection::vec(1usize..=8, 0..12)) {
        let rs = RootSystem::new(types()[t]);
        let n = rs.rank();
        let w = word
            .iter()
            .map(|&i| rs.simple_reflection((i - 1) % n + 1).unwrap())
            .fold(rs.identity(), |acc, s| acc.compose(&s));
        prop_assert!(w.compose(&w.inverse()).is_identity());
        prop_assert_eq!(rs.length(&w), rs.length(&w.inverse()));
        prop_assert!(rs.length(&w) <= word.len());
        for i in 1..=n {
            let ws = w.compose(&rs.simple_reflection(i).unwrap());
            prop_assert_eq!(rs.length(&ws).abs_diff(rs.length(&w)), 1);
        }
        for beta in rs.positive_roots() {
            let image = rs.root_of_weight(&w.apply(rs.root_to_weight(beta.coords()).coords()));
            prop_assert!(image.is_some());
        }
        let rho = Weight(vec![1; n]);
        prop_assert_eq!(w.apply(rho.coords()) == rho.coords(), w.is_identity());
    }

    #[test]
    fn phase_is_multiplicative(
        (a, b, lambda) in (1usize..=8).prop_flat_map(|n| (coweight(n), coweight(n), prop::collection::vec(-9i64..=9, n)))
    ) {
        let sum = a.phase(&lambda) + b.phase(&lambda);
        let expected = sum - Ratio::from_integer(sum.to_integer());
        prop_assert_eq!(a.mul(&b).phase(&lambda), expected);
        prop_assert!(a.mul(&a.inverse()).is_identity());
        let order = a.order();
        prop_assert!(a.phase(&lambda.iter().map(|x| x * order).collect::<Vec<_>>()).is_zero());
    }

    #[test]
    fn monoid_generators(i in 0..classes().len()) {
        let c = &classes()[i];
        let w = c.w();
        for m in [monoid::lambda_o(c), monoid::lambda_o_hat(c)] {
            prop_assert!(m.generators.windows(2).all(|p| p[0].graded_cmp(&p[1]).is_lt()));
            for g in &m.generators {
                prop_assert!(g.is_dominant() && !g.is_zero());
                let neg: Vec<i64> = g.coords().iter().map(|x| -x).collect();
                prop_assert_eq!(w.apply(g.coords()), neg);
                prop_assert!(m.contains(g));
                for h in &m.generators {
                    let rest = g.sub(h);
                    prop_assert!(h == g || rest.is_zero() || !m.contains(&rest));
                }
            }
        }
    }
}
