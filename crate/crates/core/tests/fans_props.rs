mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use toric::fans::{class_group, divisor_of_character, global_sections, orbit_distinguished_point, point_faces, positivity, Fan, WeilDivisor};
use toric::ideals::{toric_ideal, Field};
use toric::polyhedra::Polytope;

fn fan_and_divisor(range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = (Fan, WeilDivisor)> {
    (0..common::smooth_complete_fans().len()).prop_flat_map(move |i| {
        let fan = common::smooth_complete_fans().swap_remove(i);
        let s = fan.rays().len();
        (Just(fan), prop::collection::vec(range.clone(), s).prop_map(|coefficients| WeilDivisor { coefficients }))
    })
}

fn character(n: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, n)
}

/// Maximal cones as sets of ray vectors, independent of ray numbering.
fn cone_shapes(fan: &Fan) -> BTreeSet<BTreeSet<Vec<i64>>> {
    fan.maximal_cones().iter().map(|c| c.iter().map(|&i| fan.rays()[i].clone()).collect()).collect()
}

#[test]
fn class_groups_of_smooth_complete_fans_are_free() {
    for fan in common::smooth_complete_fans() {
        let cl = class_group(&fan).unwrap();
        assert_eq!(cl.free_rank, fan.rays().len() - fan.ambient_rank());
        assert!(cl.torsion.is_empty());
    }
}

proptest! {
    #![proptest_config(common::seeded(64))]

    #[test]
    fn sections_translate_with_characters((fan, d) in fan_and_divisor(-2..=3), m in character(3)) {
        let m = &m[..fan.ambient_rank()];
        let shifted = d.plus(&divisor_of_character(&fan, m));
        let mut expected: Vec<Vec<i64>> = global_sections(&fan, &d).unwrap().points.iter()
            .map(|p| p.iter().zip(m).map(|(a, b)| a - b).collect())
            .collect();
        expected.sort();
        prop_assert_eq!(global_sections(&fan, &shifted).unwrap().points, expected);
    }

    #[test]
    fn positivity_is_a_class_invariant((fan, d) in fan_and_divisor(-2..=3), m in character(3)) {
        let m = &m[..fan.ambient_rank()];
        let shifted = d.plus(&divisor_of_character(&fan, m));
        prop_assert_eq!(positivity(&fan, &d).unwrap(), positivity(&fan, &shifted).unwrap());
    }

    #[test]
    fn ample_divisors_recover_their_fan((fan, d) in fan_and_divisor(0..=3)) {
        let pos = positivity(&fan, &d).unwrap();
        prop_assume!(pos.ample);
        prop_assert!(pos.globally_generated);
        let sections = global_sections(&fan, &d).unwrap();
        let polytope = Polytope::new(fan.ambient_rank(), &sections.points).unwrap();
        let normal = polytope.normal_fan().unwrap();
        let rays: BTreeSet<&Vec<i64>> = normal.rays().iter().collect();
        prop_assert_eq!(rays, fan.rays().iter().collect::<BTreeSet<_>>());
        prop_assert_eq!(cone_shapes(&normal), cone_shapes(&fan));
    }

    #[test]
    fn distinguished_points_lie_on_the_variety(pts in prop::collection::vec(prop::collection::vec(0i64..=2, 2), 3..=5)) {
        let config = common::distinct(2, pts).homogenized();
        let ideal = toric_ideal(&config, Field::Rationals).unwrap();
        for face in point_faces(&config).unwrap() {
            let x: Vec<i64> = orbit_distinguished_point(&config, &face).unwrap().into_iter().map(i64::from).collect();
            for g in ideal.generators() {
                prop_assert!(g.eval(&x).is_zero(), "{} at {:?}", g, x);
            }
        }
    }
}
