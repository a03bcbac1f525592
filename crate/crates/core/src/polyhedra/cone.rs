use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::OnceLock;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::chart::Chart;
use super::triangulate::{abs_det, dot, facet_normals, parallelepiped_points, placing_triangulation};
use crate::error::{Error, Result};
use crate::lattice::primitive_i64;

/// Rational polyhedral cone given by integer generators.
///
/// Inequalities, the triangulation and the span chart are computed on first use.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Cone {
    ambient_rank: usize,
    generators: Vec<Vec<i64>>,
    #[serde(skip)]
    geometry: OnceLock<Geometry>,
}

#[derive(Clone, Debug)]
struct Geometry {
    chart: Chart,
    /// generators in chart coordinates
    local: Vec<Vec<i64>>,
    /// inner facet normals in chart coordinates
    facets: Vec<Vec<i64>>,
    cells: Vec<Vec<usize>>,
}

/// A face, recorded as the generators lying on it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Face {
    pub dim: usize,
    pub generators: Vec<usize>,
}

impl Cone {
    /// Cone generated by `generators`; nonzero generators are made primitive,
    /// zero vectors and repeated rays are dropped.
    pub fn new(ambient_rank: usize, generators: &[Vec<i64>]) -> Result<Cone> {
        let mut gens: Vec<Vec<i64>> = Vec::new();
        for g in generators {
            if g.len() != ambient_rank {
                return Err(Error::DimensionMismatch { expected: ambient_rank, got: g.len() });
            }
            if g.iter().all(|&x| x == 0) {
                continue;
            }
            let p = primitive_i64(g);
            if !gens.contains(&p) {
                gens.push(p);
            }
        }
        Ok(Cone { ambient_rank, generators: gens, geometry: OnceLock::new() })
    }

    pub fn positive_orthant(n: usize) -> Cone {
        let gens: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
        Cone::new(n, &gens).expect("unit vectors")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    fn geometry(&self) -> &Geometry {
        self.geometry.get_or_init(|| {
            let chart = Chart::saturated(self.ambient_rank, &self.generators);
            let local: Vec<Vec<i64>> =
                self.generators.iter().map(|g| chart.coords(g).expect("generator lies in its span")).collect();
            let k = chart.rank();
            let placing = placing_triangulation(&local, k);
            let facets = facet_normals(&placing);
            Geometry { chart, local, facets, cells: placing.cells }
        })
    }

    pub fn dim(&self) -> usize {
        self.geometry().chart.rank()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_rank
    }

    /// Inner facet normals as functionals on the ambient lattice, each
    /// primitive and lying in the span of the cone.
    pub fn inequalities(&self) -> Vec<Vec<i64>> {
        let g = self.geometry();
        g.facets.iter().map(|f| g.chart.lift_functional(f)).collect()
    }

    /// Functionals vanishing on the span of the cone.
    pub fn equations(&self) -> Vec<Vec<i64>> {
        self.geometry().chart.equations()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        let g = self.geometry();
        match g.chart.coords(x) {
            Some(c) => g.facets.iter().all(|f| dot(f, &c) >= 0),
            None => false,
        }
    }

    /// Indices of generators spanning the lineality space.
    fn lineality_generators(&self) -> Vec<usize> {
        let g = self.geometry();
        (0..g.local.len()).filter(|&i| g.facets.iter().all(|f| dot(f, &g.local[i]) == 0)).collect()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality_generators().is_empty()
    }

    /// Extreme ray generators of a pointed cone.
    pub fn rays(&self) -> Vec<Vec<i64>> {
        let mut rays: Vec<Vec<i64>> =
            self.faces().into_iter().filter(|f| f.dim == 1).map(|f| self.generators[f.generators[0]].clone()).collect();
        rays.sort();
        rays
    }

    /// All faces, from the minimal face up to the cone itself, sorted by
    /// dimension and generator set.
    pub fn faces(&self) -> Vec<Face> {
        let g = self.geometry();
        let tight: Vec<BTreeSet<usize>> = g
            .facets
            .iter()
            .map(|f| (0..g.local.len()).filter(|&i| dot(f, &g.local[i]) == 0).collect())
            .collect();
        let all: BTreeSet<usize> = (0..g.local.len()).collect();
        let mut seen: HashSet<BTreeSet<usize>> = HashSet::from([all.clone()]);
        let mut stack = vec![all];
        while let Some(face) = stack.pop() {
            for t in &tight {
                let next: BTreeSet<usize> = face.intersection(t).copied().collect();
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|s| {
                let generators: Vec<usize> = s.into_iter().collect();
                let rows: Vec<Vec<i64>> = generators.iter().map(|&i| g.local[i].clone()).collect();
                Face { dim: crate::lattice::rational::rank_i64(&rows), generators }
            })
            .collect();
        faces.sort();
        faces
    }

    pub fn face_cone(&self, face: &Face) -> Cone {
        let gens: Vec<Vec<i64>> = face.generators.iter().map(|&i| self.generators[i].clone()).collect();
        Cone::new(self.ambient_rank, &gens).expect("face generators share the ambient rank")
    }

    /// Whether `subset` (generator indices) is exactly the generator set of a face.
    pub fn is_face(&self, subset: &[usize]) -> bool {
        let want: Vec<usize> = {
            let mut s = subset.to_vec();
            s.sort_unstable();
            s.dedup();
            s
        };
        self.faces().iter().any(|f| f.generators == want)
    }

    /// The dual cone, generated by the inner facet normals and both signs of
    /// the equations.
    pub fn dual(&self) -> Cone {
        let mut gens = self.inequalities();
        for e in self.equations() {
            gens.push(e.iter().map(|x| -x).collect());
            gens.push(e);
        }
        Cone::new(self.ambient_rank, &gens).expect("functionals share the ambient rank")
    }

    /// Minimal generating set of the monoid of lattice points of a pointed cone.
    pub fn hilbert_basis(&self) -> Result<Vec<Vec<i64>>> {
        if !self.is_pointed() {
            return Err(Error::NotPointed);
        }
        let g = self.geometry();
        let local = hilbert_basis_local(&g.local, &g.cells, &g.facets, g.chart.rank());
        let mut out: Vec<Vec<i64>> = local.iter().map(|c| g.chart.lift(c)).collect();
        out.sort();
        Ok(out)
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(i == j)).collect()
}

fn in_local_cone(facets: &[Vec<i64>], x: &[i64]) -> bool {
    facets.iter().all(|f| dot(f, x) >= 0)
}

/// Candidates from the generators and cell parallelepipeds, pruned to the
/// irreducible ones.
fn hilbert_basis_local(local: &[Vec<i64>], cells: &[Vec<usize>], facets: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    if k == 0 {
        return Vec::new();
    }
    let mut candidates: BTreeSet<Vec<i64>> = local.iter().cloned().collect();
    for cell in cells {
        let vs: Vec<Vec<i64>> = cell.iter().map(|&i| local[i].clone()).collect();
        candidates.extend(parallelepiped_points(&vs, k));
    }
    let candidates: Vec<Vec<i64>> = candidates.into_iter().collect();
    candidates
        .iter()
        .filter(|x| {
            !candidates.iter().any(|c| {
                c != *x && {
                    let d: Vec<i64> = x.iter().zip(c).map(|(a, b)| a - b).collect();
                    d.iter().any(|&v| v != 0) && in_local_cone(facets, &d)
                }
            })
        })
        .cloned()
        .collect()
}

/// Outcome of comparing a monoid with the saturation `cone ∩ lattice`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub saturated: bool,
    /// a lattice point of the cone outside the monoid, in ambient coordinates
    pub witness: Option<Vec<i64>>,
    /// number of candidate lattice points checked for membership
    pub checked: usize,
    /// largest number of summands any membership search could use
    pub search_bound: usize,
}

/// Default cap on parallelepiped enumeration for saturation tests.
pub const DEFAULT_POINT_BUDGET: u64 = 2_000_000;

/// Whether the monoid generated by `points` equals `cone(points) ∩ lattice(points)`,
/// where `lattice(points)` is the group the points generate.
pub fn monoid_is_saturated(ambient_rank: usize, points: &[Vec<i64>]) -> Result<SaturationReport> {
    monoid_is_saturated_budgeted(ambient_rank, points, DEFAULT_POINT_BUDGET)
}

pub fn monoid_is_saturated_budgeted(ambient_rank: usize, points: &[Vec<i64>], budget: u64) -> Result<SaturationReport> {
    for p in points {
        if p.len() != ambient_rank {
            return Err(Error::DimensionMismatch { expected: ambient_rank, got: p.len() });
        }
    }
    let nonzero: Vec<Vec<i64>> = points.iter().filter(|p| p.iter().any(|&x| x != 0)).cloned().collect();
    let chart = Chart::generated(ambient_rank, &nonzero);
    let k = chart.rank();
    if k == 0 {
        return Ok(SaturationReport { saturated: true, witness: None, checked: 0, search_bound: 0 });
    }
    let mut local: Vec<Vec<i64>> = nonzero.iter().map(|p| chart.coords(p).expect("point in its own lattice")).collect();
    local.sort();
    local.dedup();
    let placing = placing_triangulation(&local, k);
    let facets = facet_normals(&placing);
    let total: u64 = placing
        .cells
        .iter()
        .map(|c| {
            let vs: Vec<Vec<i64>> = c.iter().map(|&i| local[i].clone()).collect();
            abs_det(&vs, k).to_u64().unwrap_or(u64::MAX)
        })
        .fold(0u64, u64::saturating_add);
    if total > budget {
        return Err(Error::BudgetExceeded(format!("{total} parallelepiped points exceed the budget of {budget}")));
    }

    let lineality: Vec<usize> =
        (0..local.len()).filter(|&i| facets.iter().all(|f| dot(f, &local[i]) == 0)).collect();
    let candidates: Vec<Vec<i64>> = if lineality.is_empty() {
        hilbert_basis_local(&local, &placing.cells, &facets, k)
    } else {
        let mut c: BTreeSet<Vec<i64>> = BTreeSet::new();
        for cell in &placing.cells {
            let vs: Vec<Vec<i64>> = cell.iter().map(|&i| local[i].clone()).collect();
            c.extend(parallelepiped_points(&vs, k));
        }
        c.into_iter().collect()
    };

    let mut oracle = Membership::new(&local, &lineality, &facets, k);
    let mut bound = 0;
    for c in &candidates {
        bound = bound.max(oracle.depth_bound(c));
        if !oracle.contains(c) {
            return Ok(SaturationReport {
                saturated: false,
                witness: Some(chart.lift(c)),
                checked: candidates.len(),
                search_bound: bound,
            });
        }
    }
    Ok(SaturationReport { saturated: true, witness: None, checked: candidates.len(), search_bound: bound })
}

/// Decides membership in the monoid generated by `gens` (chart coordinates).
///
/// Generators in the lineality space generate a group; the rest are peeled
/// off by a depth-first search that strictly decreases a positive grading.
pub(crate) struct Membership {
    steps: Vec<Vec<i64>>,
    grading: Vec<i64>,
    min_step: i64,
    facets: Vec<Vec<i64>>,
    group: Option<Chart>,
    memo: HashMap<Vec<i64>, bool>,
}

impl Membership {
    pub(crate) fn new(gens: &[Vec<i64>], lineality: &[usize], facets: &[Vec<i64>], k: usize) -> Membership {
        let grading: Vec<i64> = (0..k).map(|c| facets.iter().map(|f| f[c]).sum()).collect();
        let steps: Vec<Vec<i64>> =
            (0..gens.len()).filter(|i| !lineality.contains(i)).map(|i| gens[i].clone()).collect();
        let min_step = steps.iter().map(|s| dot(&grading, s)).min().unwrap_or(1).max(1);
        let group = (!lineality.is_empty()).then(|| {
            let lin: Vec<Vec<i64>> = lineality.iter().map(|&i| gens[i].clone()).collect();
            Chart::generated(k, &lin)
        });
        Membership { steps, grading, min_step, facets: facets.to_vec(), group, memo: HashMap::new() }
    }

    pub(crate) fn depth_bound(&self, x: &[i64]) -> usize {
        (dot(&self.grading, x).max(0) / self.min_step) as usize
    }

    pub(crate) fn contains(&mut self, x: &[i64]) -> bool {
        if let Some(&v) = self.memo.get(x) {
            return v;
        }
        let base = match &self.group {
            Some(g) => g.coords(x).is_some(),
            None => x.iter().all(|&v| v == 0),
        };
        let result = base
            || (0..self.steps.len()).any(|i| {
                let rest: Vec<i64> = x.iter().zip(&self.steps[i]).map(|(a, b)| a - b).collect();
                in_local_cone(&self.facets, &rest) && self.contains(&rest)
            });
        self.memo.insert(x.to_vec(), result);
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(gens: &[Vec<i64>]) -> Cone {
        Cone::new(gens[0].len(), gens).unwrap()
    }

    #[test]
    fn dual_of_quadric_cone() {
        let c = cone(&[vec![1, 0], vec![1, 2]]);
        let mut rays = c.dual().rays();
        rays.sort();
        assert_eq!(rays, vec![vec![0, 1], vec![2, -1]]);
        assert_eq!(Cone::positive_orthant(2).dual().rays(), vec![vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn dual_pairs_nonnegatively_on_grid() {
        let c = cone(&[vec![1, 0], vec![1, 2]]);
        let d = c.dual();
        for x in -3..=3 {
            for y in -3..=3 {
                let m = vec![x, y];
                let in_dual = c.generators().iter().all(|g| dot(g, &m) >= 0);
                assert_eq!(d.contains(&m), in_dual, "{m:?}");
            }
        }
    }

    #[test]
    fn dual_of_zero_cone_is_everything() {
        let z = Cone::new(2, &[]).unwrap();
        let d = z.dual();
        assert!(d.contains(&[5, -7]));
        assert!(!d.is_pointed());
    }

    #[test]
    fn face_counts() {
        assert_eq!(Cone::positive_orthant(2).faces().len(), 4);
        assert_eq!(cone(&[vec![1, 0], vec![1, 2]]).faces().len(), 4);
        assert_eq!(cone(&[vec![1, 1]]).faces().len(), 2);
        assert_eq!(Cone::positive_orthant(3).faces().len(), 8);
    }

    #[test]
    fn hilbert_basis_examples() {
        let c = cone(&[vec![1, 0], vec![1, 2]]);
        assert_eq!(c.hilbert_basis().unwrap(), vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
        assert_eq!(Cone::positive_orthant(2).hilbert_basis().unwrap(), vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(cone(&[vec![1]]).hilbert_basis().unwrap(), vec![vec![1]]);
        let half_plane = cone(&[vec![1, 0], vec![-1, 0], vec![0, 1]]);
        assert!(matches!(half_plane.hilbert_basis(), Err(Error::NotPointed)));
    }

    #[test]
    fn saturation_examples() {
        assert!(!monoid_is_saturated(1, &[vec![2], vec![3]]).unwrap().saturated);
        assert!(monoid_is_saturated(2, &[vec![1, 0], vec![1, 1], vec![1, 2]]).unwrap().saturated);
        assert!(monoid_is_saturated(1, &[vec![1]]).unwrap().saturated);
        // group Z generated by a non-pointed monoid
        assert!(monoid_is_saturated(1, &[vec![2], vec![-3]]).unwrap().saturated);
        // 2e1, -2e1, e2 generate the half-plane monoid in lattice 2Z x Z
        assert!(monoid_is_saturated(2, &[vec![2, 0], vec![-2, 0], vec![0, 1]]).unwrap().saturated);
        let r = monoid_is_saturated(2, &[vec![2, 0], vec![-2, 0], vec![1, 1]]).unwrap();
        assert!(r.saturated, "{r:?}");
    }

    #[test]
    fn nonsaturated_half_plane() {
        // lattice generated is Z^2 (contains (1,1)-(0,1)), cone is upper half plane;
        // (1,0) is in cone ∩ lattice but not a nonnegative combination
        let r = monoid_is_saturated(2, &[vec![2, 0], vec![-2, 0], vec![1, 1], vec![0, 1]]).unwrap();
        assert!(!r.saturated);
        assert_eq!(r.witness.as_ref().map(|w| w[1]), Some(0));
    }
}
