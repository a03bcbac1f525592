use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::chart::Chart;
use super::cone::{monoid_is_saturated, Cone, SaturationReport};
use super::triangulate::{abs_det, dot};
use crate::error::{Error, Result};
use crate::fans::Fan;
use crate::lattice::primitive_i64;

/// An ordered finite set of lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfig {
    pub ambient_rank: usize,
    pub points: Vec<Vec<i64>>,
}

impl PointConfig {
    pub fn new(ambient_rank: usize, points: Vec<Vec<i64>>) -> Result<PointConfig> {
        let mut seen = BTreeSet::new();
        for p in &points {
            if p.len() != ambient_rank {
                return Err(Error::DimensionMismatch { expected: ambient_rank, got: p.len() });
            }
            if !seen.insert(p.clone()) {
                return Err(Error::InvalidInput(format!("repeated point {p:?}")));
            }
        }
        Ok(PointConfig { ambient_rank, points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Appends a trailing coordinate 1 to every point.
    pub fn homogenized(&self) -> PointConfig {
        let points = self
            .points
            .iter()
            .map(|p| {
                let mut q = p.clone();
                q.push(1);
                q
            })
            .collect();
        PointConfig { ambient_rank: self.ambient_rank + 1, points }
    }

    /// Whether the monoid generated by the points is saturated in the lattice they generate.
    pub fn monoid_saturation(&self) -> Result<SaturationReport> {
        monoid_is_saturated(self.ambient_rank, &self.points)
    }

    /// Projective normality of the embedding given by the points.
    pub fn is_projectively_normal(&self) -> Result<bool> {
        Ok(self.homogenized().monoid_saturation()?.saturated)
    }

    /// For every vertex `v` of the convex hull, the monoid generated by `S - v` is saturated.
    pub fn is_very_ample(&self) -> Result<bool> {
        let hull = Polytope::new(self.ambient_rank, &self.points)?;
        for v in hull.vertices() {
            let shifted: Vec<Vec<i64>> = self.points.iter().map(|p| sub(p, v)).collect();
            if !monoid_is_saturated(self.ambient_rank, &shifted)?.saturated {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A lattice polytope, stored by its vertices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Polytope {
    ambient_rank: usize,
    vertices: Vec<Vec<i64>>,
    #[serde(skip)]
    cone: Option<Cone>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank && self.vertices == other.vertices
    }
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn lift(p: &[i64], h: i64) -> Vec<i64> {
    let mut q = p.to_vec();
    q.push(h);
    q
}

impl Polytope {
    /// Convex hull of `points`; non-extreme points are discarded.
    pub fn new(ambient_rank: usize, points: &[Vec<i64>]) -> Result<Polytope> {
        if points.is_empty() {
            return Err(Error::InvalidInput("a polytope needs at least one point".into()));
        }
        for p in points {
            if p.len() != ambient_rank {
                return Err(Error::DimensionMismatch { expected: ambient_rank, got: p.len() });
            }
        }
        let mut pts: Vec<Vec<i64>> = points.to_vec();
        pts.sort();
        pts.dedup();
        let lifted: Vec<Vec<i64>> = pts.iter().map(|p| lift(p, 1)).collect();
        let cone = Cone::new(ambient_rank + 1, &lifted)?;
        let mut vertices: Vec<Vec<i64>> = cone
            .faces()
            .into_iter()
            .filter(|f| f.dim == 1)
            .map(|f| {
                let g = &cone.generators()[f.generators[0]];
                g[..ambient_rank].to_vec()
            })
            .collect();
        vertices.sort();
        let vcone = Cone::new(ambient_rank + 1, &vertices.iter().map(|v| lift(v, 1)).collect::<Vec<_>>())?;
        Ok(Polytope { ambient_rank, vertices, cone: Some(vcone) })
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    /// Cone over `P × {1}`.
    pub fn cone(&self) -> Cone {
        match &self.cone {
            Some(c) => c.clone(),
            None => {
                let lifted: Vec<Vec<i64>> = self.vertices.iter().map(|v| lift(v, 1)).collect();
                Cone::new(self.ambient_rank + 1, &lifted).expect("vertices share the ambient rank")
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.cone().dim() - 1
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient_rank
    }

    /// Lattice points of the `k`-th dilate, sorted.
    pub fn lattice_points(&self, k: u64) -> PointConfig {
        let n = self.ambient_rank;
        let k = k as i64;
        let cone = self.cone();
        let ineqs = cone.inequalities();
        let eqs = cone.equations();
        let lo: Vec<i64> = (0..n).map(|c| self.vertices.iter().map(|v| v[c]).min().unwrap_or(0) * k).collect();
        let hi: Vec<i64> = (0..n).map(|c| self.vertices.iter().map(|v| v[c]).max().unwrap_or(0) * k).collect();
        let inside = |x: &[i64]| {
            let y = lift(x, k);
            ineqs.iter().all(|f| dot(f, &y) >= 0) && eqs.iter().all(|e| dot(e, &y) == 0)
        };
        if n == 0 {
            return PointConfig { ambient_rank: 0, points: vec![Vec::new()] };
        }
        let mut points: Vec<Vec<i64>> = (lo[0]..=hi[0])
            .into_par_iter()
            .flat_map_iter(|x0| {
                let mut out = Vec::new();
                let mut x = lo.clone();
                x[0] = x0;
                loop {
                    if inside(&x) {
                        out.push(x.clone());
                    }
                    let mut i = 1;
                    while i < n {
                        x[i] += 1;
                        if x[i] <= hi[i] {
                            break;
                        }
                        x[i] = lo[i];
                        i += 1;
                    }
                    if i == n {
                        break;
                    }
                }
                out
            })
            .collect();
        points.sort();
        PointConfig { ambient_rank: n, points }
    }

    fn lattice_points_config(&self) -> PointConfig {
        self.lattice_points(1)
    }

    /// Lattice points of `kP` are sums of `k` lattice points of `P`, tested
    /// as saturation of the height-one monoid in the lattice it generates.
    pub fn is_normal(&self) -> Result<bool> {
        self.lattice_points_config().is_projectively_normal()
    }

    pub fn is_very_ample(&self) -> Result<bool> {
        let pts = self.lattice_points_config();
        for v in &self.vertices {
            let shifted: Vec<Vec<i64>> = pts.points.iter().map(|p| sub(p, v)).collect();
            if !monoid_is_saturated(self.ambient_rank, &shifted)?.saturated {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Neighbouring vertices of each vertex, by index.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let cone = self.cone();
        let index = |g: &[i64]| self.vertices.iter().position(|v| v.as_slice() == &g[..self.ambient_rank]);
        let mut edges: Vec<(usize, usize)> = cone
            .faces()
            .into_iter()
            .filter(|f| f.dim == 2)
            .filter_map(|f| {
                let ends: Vec<usize> = f
                    .generators
                    .iter()
                    .map(|&i| index(&cone.generators()[i]).expect("generator is a vertex"))
                    .collect();
                (ends.len() == 2).then(|| (ends[0].min(ends[1]), ends[0].max(ends[1])))
            })
            .collect();
        edges.sort_unstable();
        edges
    }

    /// Every vertex has `dim P` edges whose primitive directions form a basis
    /// of the lattice of the affine span.
    pub fn is_smooth(&self) -> bool {
        let d = self.dim();
        if d == 0 {
            return true;
        }
        let diffs: Vec<Vec<i64>> = self.vertices.iter().map(|v| sub(v, &self.vertices[0])).collect();
        let chart = Chart::saturated(self.ambient_rank, &diffs);
        let edges = self.edges();
        (0..self.vertices.len()).all(|v| {
            let dirs: Vec<Vec<i64>> = edges
                .iter()
                .filter_map(|&(a, b)| match (a == v, b == v) {
                    (true, _) => Some(b),
                    (_, true) => Some(a),
                    _ => None,
                })
                .map(|w| {
                    let dir = primitive_i64(&sub(&self.vertices[w], &self.vertices[v]));
                    chart.coords(&dir).expect("edge lies in the affine span")
                })
                .collect();
            dirs.len() == d && abs_det(&dirs, d).is_one()
        })
    }

    pub fn ehrhart(&self) -> Result<EhrhartPolynomial> {
        let d = self.dim();
        let counts: Vec<i64> = (0..=d as u64).map(|k| self.lattice_points(k).len() as i64).collect();
        let poly = EhrhartPolynomial::interpolate(&counts);
        let check = d as u64 + 1;
        let counted = self.lattice_points(check).len();
        let expected = poly.eval(check as i64);
        if expected != BigRational::from_integer(BigInt::from(counted)) {
            return Err(Error::InterpolationMismatch { k: check as usize, expected: expected.to_string(), counted });
        }
        Ok(poly)
    }

    /// Degree of the projective toric variety: the normalized volume `dim! · vol`.
    pub fn degree_of_variety(&self) -> Result<BigInt> {
        let poly = self.ehrhart()?;
        let d = self.dim();
        let lead = poly.coefficients.get(d).cloned().unwrap_or_else(BigRational::zero);
        let fact: BigInt = (1..=d as u64).map(BigInt::from).product();
        let v = lead * BigRational::from_integer(fact);
        debug_assert!(v.is_integer());
        Ok(v.to_integer())
    }

    /// The normal fan: rays are inner facet normals, one maximal cone per vertex.
    pub fn normal_fan(&self) -> Result<Fan> {
        if !self.is_full_dimensional() {
            return Err(Error::NotFullDimensional);
        }
        let n = self.ambient_rank;
        // inequalities (a, b) of the cone over P read a·x + b >= 0 on P
        let facets: Vec<Vec<i64>> = self.cone().inequalities();
        let mut rays: Vec<Vec<i64>> = facets.iter().map(|f| primitive_i64(&f[..n])).collect();
        rays.sort();
        rays.dedup();
        let tight_at = |v: &[i64]| -> Vec<usize> {
            let mut idx: Vec<usize> = facets
                .iter()
                .filter(|f| dot(f, &lift(v, 1)) == 0)
                .map(|f| {
                    let r = primitive_i64(&f[..n]);
                    rays.binary_search(&r).expect("ray present")
                })
                .collect();
            idx.sort_unstable();
            idx.dedup();
            idx
        };
        let mut cones: Vec<Vec<usize>> = self.vertices.iter().map(|v| tight_at(v)).collect();
        cones.sort();
        Fan::new(n, rays, cones)
    }
}

/// A polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EhrhartPolynomial {
    pub coefficients: Vec<BigRational>,
}

impl EhrhartPolynomial {
    /// Lagrange interpolation through `(k, counts[k])`.
    pub fn interpolate(counts: &[i64]) -> EhrhartPolynomial {
        let n = counts.len();
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, &yi) in counts.iter().enumerate() {
            // basis polynomial prod_{j != i} (x - j) / (i - j)
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for j in 0..n {
                if j == i {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (t, c) in basis.iter().enumerate() {
                    next[t + 1] += c;
                    next[t] -= c * BigRational::from_integer(BigInt::from(j));
                }
                basis = next;
                denom *= BigRational::from_integer(BigInt::from(i as i64 - j as i64));
            }
            let scale = BigRational::from_integer(BigInt::from(yi)) / denom;
            for (t, c) in basis.iter().enumerate() {
                coeffs[t] += c * &scale;
            }
        }
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        EhrhartPolynomial { coefficients: coeffs }
    }

    pub fn eval(&self, k: i64) -> BigRational {
        let x = BigRational::from_integer(BigInt::from(k));
        self.coefficients.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Values at `0..=upto` as integers, if they all are.
    pub fn values(&self, upto: i64) -> Option<Vec<i64>> {
        (0..=upto)
            .map(|k| {
                let v = self.eval(k);
                (v.is_integer() && !v.is_negative()).then(|| v.to_integer().to_i64()).flatten()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[Vec<i64>]) -> Polytope {
        Polytope::new(pts[0].len(), pts).unwrap()
    }

    fn simplex(d: usize) -> Polytope {
        let mut pts = vec![vec![0; d]];
        for i in 0..d {
            let mut e = vec![0; d];
            e[i] = 1;
            pts.push(e);
        }
        poly(&pts)
    }

    fn square(s: i64) -> Polytope {
        poly(&[vec![0, 0], vec![s, 0], vec![0, s], vec![s, s]])
    }

    #[test]
    fn vertices_drop_interior_points() {
        let p = poly(&[vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2], vec![1, 1], vec![1, 0]]);
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn lattice_point_counts() {
        assert_eq!(poly(&[vec![0], vec![1]]).lattice_points(3).len(), 4);
        assert_eq!(square(1).lattice_points(2).len(), 9);
        assert_eq!(poly(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 1]]).lattice_points(1).len(), 5);
        assert_eq!(square(1).lattice_points(0).len(), 1);
    }

    #[test]
    fn ehrhart_and_degree() {
        let e = square(1).ehrhart().unwrap();
        assert_eq!(e.values(4).unwrap(), vec![1, 4, 9, 16, 25]);
        assert_eq!(square(1).degree_of_variety().unwrap(), BigInt::from(2));
        for d in 1..=3 {
            assert_eq!(simplex(d).degree_of_variety().unwrap(), BigInt::one());
        }
        for d in 1..=5 {
            assert_eq!(poly(&[vec![0], vec![d]]).degree_of_variety().unwrap(), BigInt::from(d));
        }
    }

    #[test]
    fn smoothness() {
        assert!(simplex(2).is_smooth());
        assert!(square(2).is_smooth());
        assert!(!poly(&[vec![0, 0], vec![1, 0], vec![1, 2]]).is_smooth());
    }

    #[test]
    fn normality_of_small_polytopes() {
        for d in 1..=3 {
            assert!(simplex(d).is_normal().unwrap());
        }
        assert!(square(1).is_normal().unwrap());
        assert!(square(1).is_very_ample().unwrap());
    }

    #[test]
    fn very_ample_but_not_normal() {
        let p = poly(&[
            vec![0, 0, 0],
            vec![0, 0, -1],
            vec![0, 1, 0],
            vec![0, 1, -1],
            vec![1, 0, 0],
            vec![1, 0, -1],
            vec![1, 1, 3],
            vec![1, 1, 4],
        ]);
        assert_eq!(p.vertices().len(), 8);
        assert!(p.is_very_ample().unwrap());
        assert!(!p.is_normal().unwrap());
    }

    #[test]
    fn hypersurface_configuration_is_not_normal() {
        let s = PointConfig::new(3, vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![3, 1, 1], vec![4, 1, 1]]);
        assert!(!s.unwrap().is_projectively_normal().unwrap());
    }

    #[test]
    fn marked_segment_is_very_ample_not_normal() {
        let s = PointConfig::new(1, vec![vec![0], vec![1], vec![3], vec![4]]).unwrap();
        assert!(!s.is_projectively_normal().unwrap());
        assert!(s.is_very_ample().unwrap());
    }

    #[test]
    fn normal_fan_of_square_and_simplex() {
        let f = square(1).normal_fan().unwrap();
        assert_eq!(f.rays(), &[vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]]);
        assert_eq!(f.maximal_cones().len(), 4);
        let f = simplex(3).normal_fan().unwrap();
        let mut rays = f.rays().to_vec();
        rays.sort();
        assert_eq!(rays, vec![vec![-1, -1, -1], vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
        assert!(matches!(poly(&[vec![0, 0], vec![1, 1]]).normal_fan(), Err(Error::NotFullDimensional)));
    }
}
