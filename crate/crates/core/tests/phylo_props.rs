mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;
use toric::phylo::{
    compatible, complexity_estimate, flows, move_generate, phylo_toric_ideal, FiniteAbelianGroup, FlowTable,
};

fn group(s: &str) -> FiniteAbelianGroup {
    s.parse().unwrap()
}

/// Rows shared by two tables, counted with multiplicity.
fn shared_rows(a: &FlowTable, b: &FlowTable) -> usize {
    let mut rest = b.rows().to_vec();
    a.rows()
        .iter()
        .filter(|r| match rest.iter().position(|x| x == *r) {
            Some(i) => {
                rest.swap_remove(i);
                true
            }
            None => false,
        })
        .count()
}

/// Every table of the given degree, grouped by image.
fn fibers(g: &FiniteAbelianGroup, n: usize, degree: usize) -> Vec<Vec<FlowTable>> {
    let all = flows(g, n).unwrap();
    let mut out: BTreeMap<Vec<u32>, Vec<FlowTable>> = BTreeMap::new();
    let mut idx = vec![0usize; degree];
    loop {
        let t = FlowTable::new(g, idx.iter().map(|&i| all[i].clone()).collect()).unwrap();
        out.entry(t.image(g.order())).or_default().push(t);
        let Some(k) = (0..degree).rev().find(|&k| idx[k] + 1 < all.len()) else { break };
        idx[k] += 1;
        for j in k + 1..degree {
            idx[j] = idx[k];
        }
    }
    out.into_values().collect()
}

fn tables() -> impl Strategy<Value = (FiniteAbelianGroup, FlowTable, FlowTable)> {
    (0..FiniteAbelianGroup::presets().len(), 2usize..=4, 1usize..=3).prop_flat_map(|(gi, n, d)| {
        let g = FiniteAbelianGroup::presets().swap_remove(gi);
        let count = flows(&g, n).unwrap().len();
        let pick = prop::collection::vec(0..count, d);
        (Just(g), Just(n), pick.clone(), pick)
    })
    .prop_map(|(g, n, a, b)| {
        let all = flows(&g, n).unwrap();
        let t0 = FlowTable::new(&g, a.iter().map(|&i| all[i].clone()).collect()).unwrap();
        let t1 = FlowTable::new(&g, b.iter().map(|&i| all[i].clone()).collect()).unwrap();
        (g, t0, t1)
    })
}

#[test]
fn flow_counts() {
    for g in FiniteAbelianGroup::presets() {
        for n in 1..=4 {
            let all = flows(&g, n).unwrap();
            assert_eq!(all.len(), g.order().pow(n as u32 - 1), "{g}, n = {n}");
            assert!(all.iter().all(|f| g.sum(f) == 0));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

proptest! {
    #![proptest_config(common::seeded(128))]

    #[test]
    fn compatible_iff_same_image((g, t0, t1) in tables()) {
        prop_assert_eq!(compatible(&t0, &t1).unwrap(), t0.image(g.order()) == t1.image(g.order()));
        prop_assert!(compatible(&t0, &t0).unwrap());
    }
}

#[test]
fn move_paths_stay_in_their_fiber() {
    for (name, n) in [("Z2", 4), ("Z3", 3)] {
        let g = group(name);
        for degree in 2..=3 {
            let k = complexity_estimate(&g, n, degree).unwrap().estimate.max(1);
            for fiber in fibers(&g, n, degree).into_iter().filter(|f| f.len() > 1) {
                let (first, last) = (&fiber[0], &fiber[fiber.len() - 1]);
                let path = move_generate(&g, first, last, k).unwrap().unwrap_or_else(|| panic!("{name}: no {k}-path"));
                assert_eq!(path.tables.first(), Some(first));
                assert_eq!(path.tables.last(), Some(last));
                for w in path.tables.windows(2) {
                    assert_eq!(w[0].image(g.order()), w[1].image(g.order()));
                    assert!(degree - shared_rows(&w[0], &w[1]) <= k);
                }
            }
        }
    }
}

#[test]
fn complexity_stays_below_the_group_order() {
    for (name, n, degree) in [("Z2", 4, 3), ("Z2", 5, 3), ("Z3", 3, 3), ("Z2xZ2", 3, 3), ("Z4", 3, 3)] {
        let g = group(name);
        let report = complexity_estimate(&g, n, degree).unwrap();
        assert!(report.estimate <= g.order(), "{name}, n = {n}: {}", report.estimate);
    }
}

#[test]
fn ideal_degrees_match_move_sizes() {
    for (name, n) in [("Z2", 3), ("Z2", 4), ("Z3", 3), ("Z4", 3), ("Z2xZ2", 3)] {
        let g = group(name);
        let ideal = phylo_toric_ideal(&g, n).unwrap();
        let max_degree = ideal.max_degree as usize;
        let estimate = complexity_estimate(&g, n, max_degree.max(2)).unwrap().estimate;
        assert_eq!(estimate, max_degree, "{name}, n = {n}");
    }
}
