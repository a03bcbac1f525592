#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use toric::cuts::Graph;
use toric::polyhedra::PointConfig;

/// Property-test configuration with a fixed seed, so runs are reproducible.
pub fn seeded(cases: u32) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(0x0074_6f72_6963), failure_persistence: None, ..Config::default() }
}

pub fn config(rank: usize, pts: &[&[i64]]) -> PointConfig {
    PointConfig::new(rank, pts.iter().map(|p| p.to_vec()).collect()).expect("valid configuration")
}

/// Distinct points, as a configuration of the given rank.
pub fn distinct(rank: usize, mut pts: Vec<Vec<i64>>) -> PointConfig {
    pts.sort();
    pts.dedup();
    PointConfig::new(rank, pts).expect("valid configuration")
}

/// Smooth complete fans used across the fan and cohomology suites.
pub fn smooth_complete_fans() -> Vec<toric::fans::Fan> {
    use toric::fans::Fan;
    vec![Fan::projective_space(2), Fan::p1_x_p1(), Fan::hirzebruch(1), Fan::hirzebruch(2), Fan::hirzebruch(3), Fan::projective_space(3)]
}

/// A random spanning tree on `n` vertices plus random extra edges.
pub fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|v| 0..v).collect::<Vec<_>>();
        let pairs = n * (n - 1) / 2;
        (Just(n), parents, prop::collection::vec(any::<bool>(), pairs))
    })
    .prop_map(|(n, parents, extra)| {
        let mut edges: Vec<(usize, usize)> = parents.into_iter().enumerate().map(|(i, p)| (p, i + 1)).collect();
        let all = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        for (e, keep) in all.zip(extra) {
            if keep && !edges.contains(&e) {
                edges.push(e);
            }
        }
        Graph::new(n, edges).unwrap()
    })
}
