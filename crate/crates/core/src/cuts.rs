//! Cut polytopes of graphs.
//!
//! A partition `A|B` of the vertices gives the cut vector `(1, x_e)` with
//! `x_e = 1` exactly when `e` joins `A` to `B`. Partitions are canonical when
//! vertex 0 lies in `A`, and are then encoded as bitmasks of the `B` side.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{toric_ideal, Field, Ideal};
use crate::lattice::{integer_combination, IntMatrix};
use crate::polyhedra::{monoid_is_saturated_budgeted, PointConfig, SaturationReport};

/// Default bound on `|V|` for enumerating all cuts.
pub const DEFAULT_VERTEX_LIMIT: usize = 10;
/// Default bound on `|V|` for the three-cut search.
pub const DECOMPOSITION_VERTEX_LIMIT: usize = 9;

/// Simple undirected graph on `0..n`; edge order fixes cut-vector coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphSpec", into = "GraphSpec")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct GraphSpec {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphSpec> for Graph {
    type Error = Error;
    fn try_from(s: GraphSpec) -> Result<Graph> {
        Graph::new(s.n, s.edges.iter().map(|e| (e[0], e[1])).collect())
    }
}

impl From<Graph> for GraphSpec {
    fn from(g: Graph) -> GraphSpec {
        GraphSpec { n: g.n, edges: g.edges.iter().map(|&(u, v)| [u, v]).collect() }
    }
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!("edge ({u},{v}) leaves the vertex set")));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::InvalidInput(format!("repeated edge {e:?}")));
            }
            out.push(e);
        }
        Ok(Graph { n, edges: out })
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        Graph::new(n, edges).expect("simple")
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect()).expect("simple")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i)).collect()).expect("simple")
    }

    /// Hub `0` joined to a cycle on `1..n`.
    pub fn wheel(n: usize) -> Graph {
        let rim = n - 1;
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
        edges.extend((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim)));
        Graph::new(n, edges).expect("simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn edge_in_triangle(&self, (u, v): (usize, usize)) -> bool {
        (0..self.n).any(|w| w != u && w != v && self.has_edge(u, w) && self.has_edge(v, w))
    }

    fn edge_index(&self, u: usize, v: usize) -> usize {
        self.edges.iter().position(|&e| e == (u.min(v), u.max(v))).expect("edge")
    }

    /// Chordless cycles of length at least 3, as vertex sequences starting at
    /// their smallest vertex with the second vertex below the last.
    pub fn chordless_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for start in 0..self.n {
            let mut path = vec![start];
            self.extend_cycles(&mut path, &mut out);
        }
        out
    }

    fn extend_cycles(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().expect("nonempty");
        for w in self.neighbors(last) {
            if w <= start || path.contains(&w) {
                continue;
            }
            // a chord from w to an interior path vertex kills every extension
            let interior = if path.len() > 2 { &path[1..path.len() - 1] } else { &[][..] };
            if interior.iter().any(|&x| self.has_edge(x, w)) {
                continue;
            }
            path.push(w);
            if path.len() >= 3 && self.has_edge(w, start) && path[1] < w {
                out.push(path.clone());
            }
            // closing early through `start` would leave a chord
            if !(path.len() >= 3 && self.has_edge(w, start)) {
                self.extend_cycles(path, out);
            }
            path.pop();
        }
    }
}

/// Planar graphs on at most eight vertices used as fixtures.
pub fn planar_fixtures() -> Vec<(&'static str, Graph)> {
    let g = |n, e: &[(usize, usize)]| Graph::new(n, e.to_vec()).expect("fixture");
    vec![
        ("K4", Graph::complete(4)),
        ("C5", Graph::cycle(5)),
        ("W5", Graph::wheel(5)),
        ("W6", Graph::wheel(6)),
        ("W7", Graph::wheel(7)),
        ("prism", g(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])),
        (
            "octahedron",
            g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (5, 1), (5, 2), (5, 3), (5, 4), (1, 2), (2, 3), (3, 4), (4, 1)]),
        ),
        (
            "pentagonal bipyramid",
            g(
                7,
                &[(0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2)],
            ),
        ),
        ("K2,5", g(7, &[(0, 2), (0, 3), (0, 4), (0, 5), (0, 6), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6)])),
        ("P7", Graph::path(7)),
        (
            "cube",
            g(8, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)]),
        ),
    ]
}

/// Canonical partitions as masks of the `B` side over vertices `1..n`.
fn canonical_masks(n: usize) -> std::ops::Range<u64> {
    0..(1u64 << n.saturating_sub(1))
}

fn side(mask: u64, v: usize) -> bool {
    v > 0 && mask >> (v - 1) & 1 == 1
}

fn cut_of_mask(g: &Graph, mask: u64) -> Vec<i64> {
    let mut x = Vec::with_capacity(g.edges.len() + 1);
    x.push(1);
    x.extend(g.edges.iter().map(|&(u, v)| i64::from(side(mask, u) != side(mask, v))));
    x
}

/// A partition `A|B` listed by its two sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl Partition {
    fn from_mask(n: usize, mask: u64) -> Partition {
        let (b, a): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| side(mask, v));
        Partition { a, b }
    }
}

/// `(1, x_e)` for the partition `a | b`.
pub fn cut_vector(g: &Graph, a: &[usize], b: &[usize]) -> Result<Vec<i64>> {
    let mut in_b = vec![None; g.n];
    let listed = a.iter().map(|&v| (v, false)).chain(b.iter().map(|&v| (v, true)));
    for (v, s) in listed {
        let slot = in_b.get_mut(v).ok_or_else(|| Error::InvalidPartition(format!("vertex {v} out of range")))?;
        if slot.is_some() {
            return Err(Error::InvalidPartition(format!("vertex {v} listed twice")));
        }
        *slot = Some(s);
    }
    if let Some(v) = in_b.iter().position(Option::is_none) {
        return Err(Error::InvalidPartition(format!("vertex {v} missing")));
    }
    let in_b: Vec<bool> = in_b.into_iter().map(|s| s.expect("checked")).collect();
    let mut x = vec![1];
    x.extend(g.edges.iter().map(|&(u, v)| i64::from(in_b[u] != in_b[v])));
    Ok(x)
}

/// All `2^{|V|-1}` cut vectors of a connected graph, in canonical partition order.
pub fn cut_polytope_points(g: &Graph) -> Result<PointConfig> {
    cut_polytope_points_limited(g, DEFAULT_VERTEX_LIMIT)
}

pub fn cut_polytope_points_limited(g: &Graph, limit: usize) -> Result<PointConfig> {
    if g.n > limit {
        return Err(Error::TooLarge(format!("{} vertices exceeds the limit {limit}", g.n)));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let points = canonical_masks(g.n).map(|m| cut_of_mask(g, m)).collect();
    PointConfig::new(g.edges.len() + 1, points)
}

/// The target point `(3, 2, ..., 2)`.
pub fn target_point(g: &Graph) -> Vec<i64> {
    let mut p = vec![2; g.edges.len() + 1];
    p[0] = 3;
    p
}

/// Integer coefficients expressing `(3, 2, ..., 2)` through the cut vectors.
pub fn target_lattice_certificate(g: &Graph) -> Result<Option<Vec<BigInt>>> {
    let pts = cut_polytope_points(g)?;
    let a = IntMatrix::from_i64_rows(pts.ambient_rank, &pts.points);
    let target: Vec<BigInt> = target_point(g).into_iter().map(BigInt::from).collect();
    Ok(integer_combination(&a, &target))
}

/// Covectors `c` with `c · x >= 0` on the cone over the cut polytope: the box
/// inequalities for edges outside triangles and the odd-subset inequalities of
/// every chordless cycle. Complete only for graphs without a `K_5` minor.
pub fn seymour_inequalities(g: &Graph) -> Result<Vec<Vec<i64>>> {
    if g.n > DEFAULT_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!("{} vertices exceeds the limit {DEFAULT_VERTEX_LIMIT}", g.n)));
    }
    let dim = g.edges.len() + 1;
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    for (i, &e) in g.edges.iter().enumerate() {
        if !g.edge_in_triangle(e) {
            let mut lower = vec![0; dim];
            lower[i + 1] = 1;
            let mut upper = vec![0; dim];
            upper[0] = 1;
            upper[i + 1] = -1;
            out.insert(lower);
            out.insert(upper);
        }
    }
    for cycle in g.chordless_cycles() {
        let k = cycle.len();
        let idx: Vec<usize> = (0..k).map(|j| g.edge_index(cycle[j], cycle[(j + 1) % k])).collect();
        for f in 0u64..(1 << k) {
            let size = f.count_ones() as i64;
            if size % 2 == 0 {
                continue;
            }
            let mut c = vec![0; dim];
            c[0] = size - 1;
            for (j, &e) in idx.iter().enumerate() {
                c[e + 1] = if f >> j & 1 == 1 { -1 } else { 1 };
            }
            out.insert(c);
        }
    }
    Ok(out.into_iter().collect())
}

/// Three canonical partitions whose cut vectors sum to `(3, 2, ..., 2)`:
/// the lexicographically least sorted triple, or `None`.
pub fn decompose_targets(g: &Graph) -> Result<Option<[Partition; 3]>> {
    if g.n > DECOMPOSITION_VERTEX_LIMIT {
        return Err(Error::TooLarge(format!("{} vertices exceeds the limit {DECOMPOSITION_VERTEX_LIMIT}", g.n)));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let masks: Vec<u64> = canonical_masks(g.n).collect();
    let cuts: Vec<Vec<bool>> = masks.iter().map(|&m| g.edges.iter().map(|&(u, v)| side(m, u) != side(m, v)).collect()).collect();
    for (i, c1) in cuts.iter().enumerate() {
        for (j, c2) in cuts.iter().enumerate().skip(i) {
            if c1.iter().zip(c2).any(|(a, b)| !a && !b) {
                continue;
            }
            // the third cut must hit exactly the edges hit once so far
            let need: Vec<bool> = c1.iter().zip(c2).map(|(a, b)| a != b).collect();
            let Some(m3) = mask_for_cut(g, &need) else {
                continue;
            };
            if m3 < masks[j] {
                continue;
            }
            return Ok(Some([
                Partition::from_mask(g.n, masks[i]),
                Partition::from_mask(g.n, masks[j]),
                Partition::from_mask(g.n, m3),
            ]));
        }
    }
    Ok(None)
}

/// The canonical partition cutting exactly the flagged edges of a connected graph.
fn mask_for_cut(g: &Graph, cut: &[bool]) -> Option<u64> {
    let mut side_of: Vec<Option<bool>> = vec![None; g.n];
    side_of[0] = Some(false);
    let mut stack = vec![0];
    while let Some(v) = stack.pop() {
        let s = side_of[v].expect("visited");
        for (k, &(a, b)) in g.edges.iter().enumerate() {
            let w = if a == v { b } else if b == v { a } else { continue };
            let t = s != cut[k];
            match side_of[w] {
                None => {
                    side_of[w] = Some(t);
                    stack.push(w);
                }
                Some(x) if x != t => return None,
                Some(_) => {}
            }
        }
    }
    Some((1..g.n).filter(|&v| side_of[v] == Some(true)).map(|v| 1u64 << (v - 1)).sum())
}

/// Colors `1..=4` from a three-cut decomposition; vertex `v` gets the class
/// of its side pattern up to global swap.
pub fn four_coloring(g: &Graph) -> Result<Vec<u8>> {
    let parts = decompose_targets(g)?.ok_or(Error::NoDecomposition)?;
    let in_b = |p: &Partition, v: usize| p.b.contains(&v);
    let colors: Vec<u8> = (0..g.n)
        .map(|v| {
            let s1 = in_b(&parts[0], v);
            let t2 = in_b(&parts[1], v) != s1;
            let t3 = in_b(&parts[2], v) != s1;
            1 + 2 * u8::from(t2) + u8::from(t3)
        })
        .collect();
    if let Some(&(u, v)) = g.edges.iter().find(|&&(u, v)| colors[u] == colors[v]) {
        return Err(Error::NotProper((u, v)));
    }
    Ok(colors)
}

/// Toric ideal of the map `q_{A|B} -> Π_{cut} s_e Π_{uncut} t_e`; variables
/// follow canonical partition order.
pub fn cut_toric_ideal(g: &Graph) -> Result<Ideal> {
    if g.n > 4 {
        return Err(Error::TooLarge(format!("cut ideals are computed for at most 4 vertices, got {}", g.n)));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let m = g.edges.len();
    let points = canonical_masks(g.n)
        .map(|mask| {
            let cut = cut_of_mask(g, mask);
            let mut e = vec![0; 2 * m];
            for k in 0..m {
                e[if cut[k + 1] == 1 { k } else { m + k }] = 1;
            }
            e
        })
        .collect();
    let ideal = toric_ideal(&PointConfig::new(2 * m, points)?, Field::Rationals)?;
    assert!(ideal.generators().iter().all(|f| f.is_homogeneous()), "cut ideals are homogeneous");
    Ok(ideal)
}

/// Saturation test of the cut monoid, under a point budget.
pub fn normality_evidence(g: &Graph, budget: u64) -> Result<SaturationReport> {
    let pts = cut_polytope_points(g)?;
    monoid_is_saturated_budgeted(pts.ambient_rank, &pts.points, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cut_vectors() {
        let k3 = Graph::complete(3);
        assert_eq!(cut_vector(&k3, &[], &[0, 1, 2]).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(cut_vector(&k3, &[0], &[1, 2]).unwrap(), vec![1, 1, 1, 0]);
        assert_eq!(cut_vector(&k3, &[1, 2], &[0]).unwrap(), cut_vector(&k3, &[0], &[1, 2]).unwrap());
        assert!(matches!(cut_vector(&k3, &[0], &[0, 1, 2]), Err(Error::InvalidPartition(_))));
        assert!(matches!(cut_vector(&k3, &[0], &[1]), Err(Error::InvalidPartition(_))));
    }

    #[test]
    fn points_and_singletons() {
        assert_eq!(cut_polytope_points(&Graph::complete(2)).unwrap().len(), 2);
        assert_eq!(cut_polytope_points(&Graph::complete(3)).unwrap().len(), 4);
        let g = Graph::wheel(5);
        let mut sum = vec![0; g.edges().len() + 1];
        for v in 0..g.vertex_count() {
            let b: Vec<usize> = (0..g.vertex_count()).filter(|&w| w != v).collect();
            for (s, x) in sum.iter_mut().zip(cut_vector(&g, &[v], &b).unwrap()) {
                *s += x;
            }
        }
        let mut expect = vec![2; g.edges().len() + 1];
        expect[0] = 5;
        assert_eq!(sum, expect);
        assert!(target_lattice_certificate(&g).unwrap().is_some());
    }

    #[test]
    fn chordless_cycles() {
        assert_eq!(Graph::complete(3).chordless_cycles(), vec![vec![0, 1, 2]]);
        assert_eq!(Graph::complete(4).chordless_cycles().len(), 4);
        assert_eq!(Graph::cycle(5).chordless_cycles().len(), 1);
        // wheel with a 4-rim: 4 triangles and the rim
        assert_eq!(Graph::wheel(5).chordless_cycles().len(), 5);
        assert!(Graph::path(4).chordless_cycles().is_empty());
    }

    #[test]
    fn seymour_counts_and_soundness() {
        assert_eq!(seymour_inequalities(&Graph::complete(3)).unwrap().len(), 4);
        assert_eq!(seymour_inequalities(&Graph::path(4)).unwrap().len(), 6);
        let k4 = Graph::complete(4);
        let ineq = seymour_inequalities(&k4).unwrap();
        for p in cut_polytope_points(&k4).unwrap().points {
            assert!(ineq.iter().all(|c| c.iter().zip(&p).map(|(a, b)| a * b).sum::<i64>() >= 0));
        }
    }

    #[test]
    fn decompositions_and_colorings() {
        for g in [Graph::complete(2), Graph::complete(3), Graph::complete(4)] {
            let parts = decompose_targets(&g).unwrap().expect("decomposition");
            let mut sum = vec![0; g.edges().len() + 1];
            for p in &parts {
                for (s, x) in sum.iter_mut().zip(cut_vector(&g, &p.a, &p.b).unwrap()) {
                    *s += x;
                }
            }
            assert_eq!(sum, target_point(&g));
            four_coloring(&g).unwrap();
        }
        let colors = four_coloring(&Graph::complete(4)).unwrap();
        assert_eq!(colors.iter().collect::<BTreeSet<_>>().len(), 4);
        // odd wheels need four colors too; K5 has no decomposition
        assert!(decompose_targets(&Graph::complete(5)).unwrap().is_none());
        assert_eq!(four_coloring(&Graph::complete(5)), Err(Error::NoDecomposition));
    }

    #[test]
    fn small_cut_ideals() {
        assert!(cut_toric_ideal(&Graph::complete(2)).unwrap().is_zero_ideal());
        let p3 = cut_toric_ideal(&Graph::path(3)).unwrap();
        assert!(p3.generators().iter().all(|f| f.terms().len() == 2 && f.is_homogeneous()));
        let k3 = cut_toric_ideal(&Graph::complete(3)).unwrap();
        assert!(k3.generators().iter().all(|f| f.is_homogeneous()));
    }

    #[test]
    fn json_shape() {
        let g: Graph = serde_json::from_str(r#"{"n": 3, "edges": [[0,1],[1,2]]}"#).unwrap();
        assert_eq!(g, Graph::path(3));
        assert!(serde_json::from_str::<Graph>(r#"{"n": 2, "edges": [[0,0]]}"#).is_err());
    }
}
