mod common;

use proptest::prelude::*;
use toric::cohomology::{cohomology, default_box, reduced_homology, Method, SimplicialComplex};
use toric::fans::{divisor_of_character, global_sections, positivity, Fan, WeilDivisor};
use toric::ideals::Field;

fn fan_and_divisor(range: std::ops::RangeInclusive<i64>) -> impl Strategy<Value = (Fan, WeilDivisor)> {
    (0..common::smooth_complete_fans().len()).prop_flat_map(move |i| {
        let fan = common::smooth_complete_fans().swap_remove(i);
        let s = fan.rays().len();
        (Just(fan), prop::collection::vec(range.clone(), s).prop_map(|coefficients| WeilDivisor { coefficients }))
    })
}

fn dims(method: Method, fan: &Fan, d: &WeilDivisor) -> Vec<u64> {
    cohomology(method, fan, d, &default_box(fan, d).unwrap()).unwrap().dims
}

fn binomial(n: i64, k: i64) -> u64 {
    if n < k || k < 0 {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

#[test]
fn twists_of_projective_space() {
    for n in 1..=3usize {
        let fan = Fan::projective_space(n);
        for k in -6i64..=6 {
            let mut coefficients = vec![0; n + 1];
            coefficients[0] = k;
            let d = WeilDivisor { coefficients };
            let mut expected = vec![0u64; n + 1];
            expected[0] = binomial(n as i64 + k, n as i64);
            expected[n] = binomial(-k - 1, n as i64);
            assert_eq!(dims(Method::Coh1, &fan, &d), expected, "P^{n}, O({k})");
        }
    }
}

#[test]
fn simplices_and_spheres() {
    for n in 1..=5 {
        assert!(reduced_homology(&SimplicialComplex::simplex(n), Field::Rationals).is_acyclic());
        let sphere = reduced_homology(&SimplicialComplex::simplex_boundary(n), Field::Rationals);
        for j in -1..=n as i64 {
            assert_eq!(sphere.rank(j), u64::from(j == n as i64 - 1), "S^{} in degree {j}", n - 1);
        }
    }
    let void = reduced_homology(&SimplicialComplex::empty(3), Field::Rationals);
    assert_eq!(void.rank(-1), 1);
}

proptest! {
    #![proptest_config(common::seeded(40))]

    #[test]
    fn both_methods_agree((fan, d) in fan_and_divisor(-4..=4)) {
        prop_assert_eq!(dims(Method::Coh1, &fan, &d), dims(Method::Coh2, &fan, &d));
    }

    #[test]
    fn cohomology_depends_only_on_the_class((fan, d) in fan_and_divisor(-3..=3), m in prop::collection::vec(-2i64..=2, 3)) {
        let shifted = d.plus(&divisor_of_character(&fan, &m[..fan.ambient_rank()]));
        prop_assert_eq!(dims(Method::Coh2, &fan, &d), dims(Method::Coh2, &fan, &shifted));
    }

    #[test]
    fn serre_duality((fan, d) in fan_and_divisor(-3..=3)) {
        let dual = WeilDivisor { coefficients: d.coefficients.iter().map(|a| -1 - a).collect() };
        let mut reversed = dims(Method::Coh1, &fan, &dual);
        reversed.reverse();
        prop_assert_eq!(dims(Method::Coh1, &fan, &d), reversed);
    }

    #[test]
    fn ample_divisors_have_no_higher_cohomology((fan, d) in fan_and_divisor(0..=3)) {
        prop_assume!(positivity(&fan, &d).unwrap().ample);
        let h = dims(Method::Coh2, &fan, &d);
        prop_assert_eq!(h[0], global_sections(&fan, &d).unwrap().len() as u64);
        prop_assert!(h[1..].iter().all(|&x| x == 0));
    }
}
