mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use toric::ideals::{buchberger, normal_form, toric_ideal, Field, Polynomial, TermOrder};
use toric::polyhedra::PointConfig;

fn planar(count: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = PointConfig> {
    prop::collection::vec(prop::collection::vec(0i64..=3, 2), count).prop_map(|pts| common::distinct(2, pts))
}

fn image(config: &PointConfig, exp: &[u32]) -> Vec<i64> {
    (0..config.ambient_rank).map(|r| config.points.iter().zip(exp).map(|(p, &e)| p[r] * e as i64).sum()).collect()
}

/// All exponent vectors with entries at most `bound`.
fn exponents(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<u32>| (0..=bound).map(move |e| [v.clone(), vec![e]].concat())).collect();
    }
    out
}

proptest! {
    #![proptest_config(common::seeded(48))]

    #[test]
    fn generators_are_exact_binomials(config in planar(2..=5)) {
        let ideal = toric_ideal(&config, Field::Rationals).unwrap();
        for g in ideal.generators() {
            prop_assert_eq!(g.terms().len(), 2);
            let (a, b) = (&g.terms()[0].0, &g.terms()[1].0);
            prop_assert!(a.iter().zip(b.iter()).all(|(x, y)| *x == 0 || *y == 0), "supports overlap in {}", g);
            prop_assert_eq!(image(&config, a), image(&config, b));
            let ones = vec![1; config.len()];
            prop_assert!(g.eval(&ones).is_zero());
        }
    }

    #[test]
    fn height_one_configurations_are_homogeneous(config in planar(2..=5)) {
        let ideal = toric_ideal(&config.homogenized(), Field::Rationals).unwrap();
        prop_assert!(ideal.generators().iter().all(Polynomial::is_homogeneous));
    }

    #[test]
    fn binomial_membership_is_fiber_equality(config in planar(2..=4)) {
        let q = Field::Rationals;
        let order = TermOrder::GRevLex;
        let ideal = toric_ideal(&config, q).unwrap();
        let mut fibers: BTreeMap<Vec<i64>, Vec<Vec<u32>>> = BTreeMap::new();
        for e in exponents(config.len(), 2) {
            fibers.entry(image(&config, &e)).or_default().push(e);
        }
        let keys: Vec<&Vec<i64>> = fibers.keys().collect();
        for (i, members) in fibers.values().enumerate() {
            for b in members {
                for c in members {
                    let f = Polynomial::binomial(q, b, c);
                    prop_assert!(normal_form(&f, ideal.generators(), &order).unwrap().is_zero());
                }
                // one representative of the next fiber is never congruent
                if let Some(other) = keys.get(i + 1).map(|k| &fibers[*k][0]) {
                    let f = Polynomial::binomial(q, b, other);
                    prop_assert!(!normal_form(&f, ideal.generators(), &order).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn reduced_bases_are_fixed_points(config in planar(2..=5)) {
        let ideal = toric_ideal(&config.homogenized(), Field::Rationals).unwrap();
        for order in [TermOrder::GRevLex, TermOrder::Lex] {
            let gb = buchberger(ideal.generators(), &order).unwrap();
            let mut again = buchberger(&gb, &order).unwrap();
            let mut first = gb.clone();
            first.sort_by_key(|g| g.to_string());
            again.sort_by_key(|g| g.to_string());
            prop_assert_eq!(first, again);
        }
    }
}
