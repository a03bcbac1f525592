//! Reduced simplicial homology and cohomology of torus-invariant divisors.
//!
//! Two independent formulas are implemented. The first sums, over characters
//! `m`, the reduced cohomology of the complex of rays with `<m, u> < -a_u`.
//! The second sums, over the divisors `a` linearly equivalent to `D`, the
//! reduced homology of the complex of rays with `a_u >= 0`. Both enumerate
//! characters in a finite box; `box_stability_check` enlarges the box to see
//! whether anything was missed.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fans::{combinations, Fan, WeilDivisor};
use crate::lattice::rational::{self, Q};
use crate::ideals::{Coeff, Field};

/// Simplicial complex on vertices `0..nvertices`, stored by facets.
/// No facets at all means the complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    pub nvertices: usize,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Downward closure of `faces`; only inclusion-maximal sets are kept.
    pub fn new(nvertices: usize, faces: Vec<Vec<usize>>) -> Result<SimplicialComplex> {
        let mut faces: Vec<Vec<usize>> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .filter(|f| !f.is_empty())
            .collect();
        if let Some(bad) = faces.iter().flatten().find(|&&v| v >= nvertices) {
            return Err(Error::InvalidInput(format!("vertex {bad} out of range")));
        }
        faces.sort();
        faces.dedup();
        let facets = faces
            .iter()
            .filter(|f| !faces.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
            .cloned()
            .collect();
        Ok(SimplicialComplex { nvertices, facets })
    }

    /// The complex whose only face is the empty set.
    pub fn empty(nvertices: usize) -> SimplicialComplex {
        SimplicialComplex { nvertices, facets: Vec::new() }
    }

    pub fn simplex(n: usize) -> SimplicialComplex {
        SimplicialComplex { nvertices: n, facets: if n == 0 { Vec::new() } else { vec![(0..n).collect()] } }
    }

    /// Boundary of the simplex on `n + 1` vertices, an `(n-1)`-sphere.
    pub fn simplex_boundary(n: usize) -> SimplicialComplex {
        let facets = (0..=n).map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
        SimplicialComplex::new(n + 1, facets).expect("valid vertices")
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Dimension; `-1` for `{∅}`.
    pub fn dimension(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap_or(-1)
    }

    /// Faces with `k + 1` vertices, sorted.
    pub fn faces_of_size(&self, size: usize) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        if size == 0 {
            return vec![Vec::new()];
        }
        for f in &self.facets {
            if f.len() >= size {
                subsets_of_size(f, size, &mut out);
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn subsets_of_size(set: &[usize], k: usize, out: &mut Vec<Vec<usize>>) {
    fn go(set: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..set.len() {
            if set.len() - i < k - cur.len() {
                break;
            }
            cur.push(set[i]);
            go(set, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(set, k, 0, &mut Vec::new(), out);
}

/// Ranks of reduced homology, degrees `-1..=dim`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyProfile {
    /// `ranks[j + 1]` is the rank in degree `j`.
    pub ranks: Vec<u64>,
}

impl HomologyProfile {
    pub fn rank(&self, degree: i64) -> u64 {
        usize::try_from(degree + 1).ok().and_then(|i| self.ranks.get(i).copied()).unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Rank of a matrix over `field` by Gaussian elimination.
fn matrix_rank(mut rows: Vec<Vec<Coeff>>, field: Field) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(&rows[rank][c]);
        let pivot: Vec<Coeff> = rows[rank].iter().map(|x| field.mul(x, &inv)).collect();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = rows[r][c].clone();
            for (x, y) in rows[r].iter_mut().zip(&pivot) {
                *x = field.sub(x, &field.mul(&f, y));
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Reduced homology over `field`, via ranks of the augmented boundary maps.
pub fn reduced_homology(complex: &SimplicialComplex, field: Field) -> HomologyProfile {
    let top = complex.dimension();
    // chains[s] = faces with s vertices, s = 0..=top+1
    let chains: Vec<Vec<Vec<usize>>> = (0..=(top + 1) as usize).map(|s| complex.faces_of_size(s)).collect();
    // boundary_rank[s] = rank of the map from s-vertex chains to (s-1)-vertex chains
    let mut boundary_rank = vec![0usize; chains.len() + 1];
    for s in 1..chains.len() {
        let index: BTreeMap<&Vec<usize>, usize> = chains[s - 1].iter().enumerate().map(|(i, f)| (f, i)).collect();
        let rows: Vec<Vec<Coeff>> = chains[s]
            .iter()
            .map(|f| {
                let mut row = vec![field.zero(); chains[s - 1].len()];
                for skip in 0..f.len() {
                    let face: Vec<usize> = f.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, &v)| v).collect();
                    row[index[&face]] = field.from_i64(if skip % 2 == 0 { 1 } else { -1 });
                }
                row
            })
            .collect();
        boundary_rank[s] = matrix_rank(rows, field);
    }
    let ranks = (0..chains.len())
        .map(|s| (chains[s].len() - boundary_rank[s] - boundary_rank[s + 1]) as u64)
        .collect();
    HomologyProfile { ranks }
}

/// Character box `lo <= m <= hi`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl CharacterBox {
    pub fn symmetric(n: usize, radius: i64) -> CharacterBox {
        CharacterBox { lo: vec![-radius; n], hi: vec![radius; n] }
    }

    pub fn enlarged(&self, by: i64) -> CharacterBox {
        CharacterBox { lo: self.lo.iter().map(|x| x - by).collect(), hi: self.hi.iter().map(|x| x + by).collect() }
    }

    pub fn points(&self) -> Vec<Vec<i64>> {
        let n = self.lo.len();
        if self.lo.iter().zip(&self.hi).any(|(l, h)| l > h) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut m = self.lo.clone();
        loop {
            out.push(m.clone());
            let mut i = 0;
            while i < n {
                m[i] += 1;
                if m[i] <= self.hi[i] {
                    break;
                }
                m[i] = self.lo[i];
                i += 1;
            }
            if i == n {
                return out;
            }
        }
    }
}

/// Bounding box of every vertex of the arrangement of hyperplanes
/// `<m, u> = -a_u` and `<m, u> = -a_u - 1`, enlarged by one.
///
/// A character's sign pattern is constant on the cells of this arrangement,
/// and on a complete fan only bounded cells can contribute, so the box
/// contains every contributing character.
pub fn default_box(fan: &Fan, d: &WeilDivisor) -> Result<CharacterBox> {
    if d.coefficients.len() != fan.rays().len() {
        return Err(Error::DimensionMismatch { expected: fan.rays().len(), got: d.coefficients.len() });
    }
    let n = fan.ambient_rank();
    let mut lo = vec![0i64; n];
    let mut hi = vec![0i64; n];
    for subset in combinations(fan.rays().len(), n) {
        let a: Vec<Vec<Q>> = subset.iter().map(|&i| rational::q_vec(&fan.rays()[i])).collect();
        if rational::rank(&a) < n {
            continue;
        }
        for shifts in 0u32..1 << n {
            let b: Vec<Q> = subset.iter().enumerate().map(|(j, &i)| rational::q(-d.coefficients[i] - i64::from(shifts >> j & 1 == 1))).collect();
            let m = rational::solve(&a, &b).expect("independent constraints");
            for (k, x) in m.iter().enumerate() {
                let down = x.floor().to_integer().to_i64().ok_or_else(|| Error::TooLarge("character box".into()))?;
                let up = x.ceil().to_integer().to_i64().ok_or_else(|| Error::TooLarge("character box".into()))?;
                lo[k] = lo[k].min(down);
                hi[k] = hi[k].max(up);
            }
        }
    }
    Ok(CharacterBox { lo, hi }.enlarged(1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Coh1,
    Coh2,
}

/// `dims[p] = dim H^p`, with the characters that contribute.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyResult {
    pub dims: Vec<u64>,
    /// `(m, p, rank)` for every nonzero contribution.
    pub contributions: Vec<(Vec<i64>, usize, u64)>,
}

impl CohomologyResult {
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }
}

/// The subcomplex of the fan's nerve on the rays in `subset`.
fn restricted_nerve(fan: &Fan, subset: &[usize]) -> SimplicialComplex {
    let faces = fan.maximal_cones().iter().map(|c| c.iter().copied().filter(|i| subset.contains(i)).collect()).collect();
    SimplicialComplex::new(fan.rays().len(), faces).expect("ray indices")
}

fn check_divisor(fan: &Fan, d: &WeilDivisor, cbox: &CharacterBox) -> Result<()> {
    if d.coefficients.len() != fan.rays().len() {
        return Err(Error::DimensionMismatch { expected: fan.rays().len(), got: d.coefficients.len() });
    }
    if cbox.lo.len() != fan.ambient_rank() || cbox.hi.len() != fan.ambient_rank() {
        return Err(Error::DimensionMismatch { expected: fan.ambient_rank(), got: cbox.lo.len() });
    }
    Ok(())
}

/// Sums `rank H~_{degree(p)}` of `complex_for(m)` over the box, computing
/// each distinct complex once.
fn aggregate(
    fan: &Fan,
    cbox: &CharacterBox,
    subset_for: impl Fn(&[i64]) -> Vec<usize> + Sync,
    degree: impl Fn(usize) -> i64,
) -> CohomologyResult {
    let n = fan.ambient_rank();
    let points = cbox.points();
    let subsets: Vec<Vec<usize>> = points.par_iter().map(|m| subset_for(m)).collect();
    let distinct: Vec<Vec<usize>> = {
        let mut v = subsets.clone();
        v.sort();
        v.dedup();
        v
    };
    let profiles: BTreeMap<Vec<usize>, HomologyProfile> = distinct
        .par_iter()
        .map(|s| (s.clone(), reduced_homology(&restricted_nerve(fan, s), Field::Rationals)))
        .collect();
    let mut dims = vec![0u64; n + 1];
    let mut contributions = Vec::new();
    for (m, s) in points.iter().zip(&subsets) {
        let h = &profiles[s];
        for (p, dim) in dims.iter_mut().enumerate() {
            let r = h.rank(degree(p));
            if r > 0 {
                *dim += r;
                contributions.push((m.clone(), p, r));
            }
        }
    }
    CohomologyResult { dims, contributions }
}

/// `H^p(X, O(D)) = ⊕_m H~^{p-1}(C_{D,m})` over characters in the box; needs a simplicial fan.
pub fn cohomology_coh1(fan: &Fan, d: &WeilDivisor, cbox: &CharacterBox) -> Result<CohomologyResult> {
    check_divisor(fan, d, cbox)?;
    if !fan.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    let rays = fan.rays();
    Ok(aggregate(
        fan,
        cbox,
        |m| (0..rays.len()).filter(|&i| dot(m, &rays[i]) < -d.coefficients[i]).collect(),
        |p| p as i64 - 1,
    ))
}

/// `H^j(X, O(D)) = ⊕_a H~_{n-1-j}(Supp(a))` over `a = D + div(m)`, `m` in the box;
/// needs a smooth complete fan.
pub fn cohomology_coh2(fan: &Fan, d: &WeilDivisor, cbox: &CharacterBox) -> Result<CohomologyResult> {
    check_divisor(fan, d, cbox)?;
    if !fan.is_smooth() {
        return Err(Error::NotSmooth);
    }
    if !fan.is_complete() {
        return Err(Error::NotComplete);
    }
    let rays = fan.rays();
    let n = fan.ambient_rank() as i64;
    Ok(aggregate(
        fan,
        cbox,
        |m| (0..rays.len()).filter(|&i| d.coefficients[i] + dot(m, &rays[i]) >= 0).collect(),
        |j| n - 1 - j as i64,
    ))
}

pub fn cohomology(method: Method, fan: &Fan, d: &WeilDivisor, cbox: &CharacterBox) -> Result<CohomologyResult> {
    match method {
        Method::Coh1 => cohomology_coh1(fan, d, cbox),
        Method::Coh2 => cohomology_coh2(fan, d, cbox),
    }
}

/// Whether enlarging the box by one in every direction leaves all dimensions unchanged.
pub fn box_stability_check(method: Method, fan: &Fan, d: &WeilDivisor, cbox: &CharacterBox) -> Result<bool> {
    let small = cohomology(method, fan, d, cbox)?;
    let large = cohomology(method, fan, d, &cbox.enlarged(1))?;
    Ok(small.dims == large.dims)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
