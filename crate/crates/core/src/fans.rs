//! Fans, orbits of affine toric varieties, and torus-invariant divisors.
//!
//! Sign convention: a Cartier divisor `D = Σ a_u D_u` is given on each maximal
//! cone by `m_σ` with `<m_σ, u> = -a_u`, and its sections are the lattice
//! points of `P_D = {m : <m, u> >= -a_u}`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::rational::{self, Q};
use crate::lattice::{cokernel, primitive_i64, AbelianGroupStructure, IntMatrix};
use crate::polyhedra::{Chart, Cone, PointConfig, Polytope};

/// A fan stored by its rays and maximal cones (sorted ray-index sets).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient_rank: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
}

/// JSON shape of a fan.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FanSpec {
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complete: Option<bool>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|j| i64::from(i == j)).collect()
}

impl Fan {
    /// Validates rays and cones; cones contained in other listed cones are dropped.
    pub fn new(ambient_rank: usize, rays: Vec<Vec<i64>>, cones: Vec<Vec<usize>>) -> Result<Fan> {
        for r in &rays {
            if r.len() != ambient_rank {
                return Err(Error::DimensionMismatch { expected: ambient_rank, got: r.len() });
            }
            if r.iter().all(|&x| x == 0) || primitive_i64(r) != *r {
                return Err(Error::InvalidInput(format!("ray {r:?} is not a primitive nonzero vector")));
            }
        }
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for c in cones {
            let mut c = c;
            c.sort_unstable();
            c.dedup();
            if let Some(&bad) = c.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidInput(format!("cone refers to missing ray {bad}")));
            }
            let gens: Vec<Vec<i64>> = c.iter().map(|&i| rays[i].clone()).collect();
            let cone = Cone::new(ambient_rank, &gens)?;
            if !cone.is_pointed() || cone.rays().len() != c.len() {
                return Err(Error::InvalidInput(format!("rays of cone {c:?} are not its extreme rays")));
            }
            sets.push(c);
        }
        sets.sort();
        sets.dedup();
        let maximal: Vec<Vec<usize>> = sets
            .iter()
            .filter(|c| !sets.iter().any(|d| d != *c && c.iter().all(|i| d.contains(i))))
            .cloned()
            .collect();
        Ok(Fan { ambient_rank, rays, cones: maximal })
    }

    pub fn from_spec(spec: &FanSpec) -> Result<Fan> {
        let n = spec
            .rays
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::InvalidInput("a fan needs at least one ray".into()))?;
        let fan = Fan::new(n, spec.rays.clone(), spec.cones.clone())?;
        if spec.complete == Some(true) && !fan.is_complete() {
            return Err(Error::NotComplete);
        }
        Ok(fan)
    }

    pub fn to_spec(&self) -> FanSpec {
        FanSpec { rays: self.rays.clone(), cones: self.cones.clone(), complete: Some(self.is_complete()) }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn maximal_cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    fn cone_of(&self, idx: &[usize]) -> Cone {
        let gens: Vec<Vec<i64>> = idx.iter().map(|&i| self.rays[i].clone()).collect();
        Cone::new(self.ambient_rank, &gens).expect("validated rays")
    }

    /// Every cone of the fan as a sorted ray-index set, including the zero cone.
    pub fn all_cones(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for c in &self.cones {
            let cone = self.cone_of(c);
            for f in cone.faces() {
                out.insert(f.generators.iter().map(|&i| c[i]).collect());
            }
        }
        out
    }

    /// Whether the rays indexed by `subset` span a cone of the fan.
    pub fn is_cone(&self, subset: &[usize]) -> bool {
        if self.is_simplicial() {
            return self.cones.iter().any(|c| subset.iter().all(|i| c.contains(i)));
        }
        let mut s = subset.to_vec();
        s.sort_unstable();
        self.all_cones().contains(&s)
    }

    pub fn is_simplicial(&self) -> bool {
        self.cones.iter().all(|c| {
            let gens: Vec<Vec<i64>> = c.iter().map(|&i| self.rays[i].clone()).collect();
            rational::rank_i64(&gens) == c.len()
        })
    }

    /// Each maximal cone is generated by part of a lattice basis.
    pub fn is_smooth(&self) -> bool {
        self.is_simplicial()
            && self.cones.iter().all(|c| {
                let gens: Vec<Vec<i64>> = c.iter().map(|&i| self.rays[i].clone()).collect();
                let chart = Chart::saturated(self.ambient_rank, &gens);
                let local: Vec<Vec<i64>> = gens.iter().map(|g| chart.coords(g).expect("in span")).collect();
                IntMatrix::from_i64_rows(c.len(), &local).determinant().magnitude().is_one()
            })
    }

    /// Codimension-one faces of the maximal cones, each with the maximal cones containing it.
    fn facet_incidence(&self) -> BTreeMap<Vec<usize>, Vec<usize>> {
        let mut walls: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for (ci, c) in self.cones.iter().enumerate() {
            let cone = self.cone_of(c);
            let d = cone.dim();
            for f in cone.faces().into_iter().filter(|f| f.dim + 1 == d) {
                walls.entry(f.generators.iter().map(|&i| c[i]).collect()).or_default().push(ci);
            }
        }
        walls
    }

    /// Every maximal cone is full-dimensional and every facet lies in exactly two of them.
    pub fn is_complete(&self) -> bool {
        !self.cones.is_empty()
            && self.cones.iter().all(|c| self.cone_of(c).is_full_dimensional())
            && self.facet_incidence().values().all(|v| v.len() == 2)
    }

    /// Pairs of adjacent maximal cones, by index into `maximal_cones`.
    pub fn walls(&self) -> Vec<(usize, usize)> {
        self.facet_incidence()
            .values()
            .filter(|v| v.len() == 2)
            .map(|v| (v[0], v[1]))
            .collect()
    }

    /// `s × n` matrix of ray coordinates.
    pub fn pairing_matrix(&self) -> IntMatrix {
        IntMatrix::from_i64_rows(self.ambient_rank, &self.rays)
    }

    pub fn projective_space(n: usize) -> Fan {
        let mut rays: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
        rays.push(vec![-1; n]);
        let cones = (0..=n).map(|skip| (0..=n).filter(|&i| i != skip).collect()).collect();
        Fan::new(n, rays, cones).expect("standard fan")
    }

    /// Rays `e1, -e1, e2, -e2`.
    pub fn p1_x_p1() -> Fan {
        let rays = vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]];
        Fan::new(2, rays, vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]).expect("standard fan")
    }

    /// Rays `e1, e2, -e1 + r e2, -e2`.
    pub fn hirzebruch(r: i64) -> Fan {
        let rays = vec![vec![1, 0], vec![0, 1], vec![-1, r], vec![0, -1]];
        Fan::new(2, rays, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).expect("standard fan")
    }

    /// The single cone with rays `e2, 2e1 - e2` and its faces.
    pub fn quadric_cone() -> Fan {
        Fan::new(2, vec![vec![0, 1], vec![2, -1]], vec![vec![0, 1]]).expect("standard fan")
    }
}

/// `Σ a_u D_u`, one coefficient per ray of the fan.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeilDivisor {
    pub coefficients: Vec<i64>,
}

impl WeilDivisor {
    pub fn new(fan: &Fan, coefficients: Vec<i64>) -> Result<WeilDivisor> {
        if coefficients.len() != fan.rays.len() {
            return Err(Error::DimensionMismatch { expected: fan.rays.len(), got: coefficients.len() });
        }
        Ok(WeilDivisor { coefficients })
    }

    pub fn plus(&self, other: &WeilDivisor) -> WeilDivisor {
        WeilDivisor { coefficients: self.coefficients.iter().zip(&other.coefficients).map(|(a, b)| a + b).collect() }
    }
}

/// `div(m) = Σ <m, u> D_u`.
pub fn divisor_of_character(fan: &Fan, m: &[i64]) -> WeilDivisor {
    WeilDivisor { coefficients: fan.rays.iter().map(|u| dot(m, u)).collect() }
}

/// `Cl(X)`, the cokernel of the character-to-divisor map.
pub fn class_group(fan: &Fan) -> Result<AbelianGroupStructure> {
    if rational::rank_i64(&fan.rays) < fan.ambient_rank {
        return Err(Error::RaysDoNotSpan);
    }
    Ok(cokernel(&fan.pairing_matrix()))
}

/// Local linear data `m_σ` for each maximal cone, in the order of `maximal_cones`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartierData {
    pub local: Vec<Vec<i64>>,
}

fn q_to_string(x: &Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn cartier_data(fan: &Fan, d: &WeilDivisor) -> Result<CartierData> {
    if d.coefficients.len() != fan.rays.len() {
        return Err(Error::DimensionMismatch { expected: fan.rays.len(), got: d.coefficients.len() });
    }
    if !fan.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    let n = fan.ambient_rank;
    let mut local = Vec::with_capacity(fan.cones.len());
    for c in &fan.cones {
        if c.len() != n {
            return Err(Error::NotFullDimensional);
        }
        let a: Vec<Vec<Q>> = c.iter().map(|&i| rational::q_vec(&fan.rays[i])).collect();
        let b: Vec<Q> = c.iter().map(|&i| rational::q(-d.coefficients[i])).collect();
        let m = rational::solve(&a, &b).expect("simplicial full-dimensional cone");
        if m.iter().any(|x| !x.is_integer()) {
            return Err(Error::NotCartier { cone: c.clone(), solution: m.iter().map(q_to_string).collect() });
        }
        local.push(m.iter().map(|x| x.to_integer().to_i64().expect("small coordinates")).collect::<Vec<i64>>());
    }
    // agreement on shared rays determines agreement on intersections of simplicial cones
    for (i, ci) in fan.cones.iter().enumerate() {
        for (j, cj) in fan.cones.iter().enumerate().skip(i + 1) {
            for u in ci.iter().filter(|u| cj.contains(u)) {
                debug_assert_eq!(dot(&local[i], &fan.rays[*u]), dot(&local[j], &fan.rays[*u]));
            }
        }
    }
    Ok(CartierData { local })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Positivity {
    pub globally_generated: bool,
    pub ample: bool,
    pub very_ample: bool,
}

/// Convexity of the support function: `<m_σ, u> >= -a_u` for every ray `u`
/// outside `σ` (strict for ampleness), plus very ampleness of `P_D`.
pub fn positivity(fan: &Fan, d: &WeilDivisor) -> Result<Positivity> {
    if !fan.is_complete() {
        return Err(Error::NotComplete);
    }
    let data = cartier_data(fan, d)?;
    let mut gg = true;
    let mut ample = true;
    for (c, m) in fan.cones.iter().zip(&data.local) {
        for (u, ray) in fan.rays.iter().enumerate().filter(|(u, _)| !c.contains(u)) {
            let lhs = dot(m, ray);
            let rhs = -d.coefficients[u];
            gg &= lhs >= rhs;
            ample &= lhs > rhs;
        }
    }
    debug_assert!(wall_check_agrees(fan, d, &data, gg, ample));
    let very_ample = ample && {
        let pts = global_sections(fan, d)?;
        Polytope::new(fan.ambient_rank, &pts.points)?.is_very_ample()?
    };
    Ok(Positivity { globally_generated: gg, ample, very_ample })
}

/// The wall-local form of the convexity test, used as a cross-check.
fn wall_check_agrees(fan: &Fan, d: &WeilDivisor, data: &CartierData, gg: bool, ample: bool) -> bool {
    let mut wgg = true;
    let mut wample = true;
    for (s, t) in fan.walls() {
        for (a, b) in [(s, t), (t, s)] {
            for &u in fan.cones[b].iter().filter(|u| !fan.cones[a].contains(u)) {
                let lhs = dot(&data.local[a], &fan.rays[u]);
                let rhs = -d.coefficients[u];
                wgg &= lhs >= rhs;
                wample &= lhs > rhs;
            }
        }
    }
    wgg == gg && wample == ample
}

/// Integer bounding box `[lo, hi]` of `P_D`, or `None` when `P_D` is empty.
pub(crate) fn section_box(fan: &Fan, d: &WeilDivisor) -> Result<Option<(Vec<i64>, Vec<i64>)>> {
    if d.coefficients.len() != fan.rays.len() {
        return Err(Error::DimensionMismatch { expected: fan.rays.len(), got: d.coefficients.len() });
    }
    let n = fan.ambient_rank;
    let support = Cone::new(n, &fan.rays)?;
    if !(support.is_full_dimensional() && support.inequalities().is_empty()) {
        return Err(Error::Unbounded);
    }
    let feasible = |m: &[Q]| {
        fan.rays
            .iter()
            .zip(&d.coefficients)
            .all(|(u, a)| m.iter().zip(u).map(|(x, y)| x * rational::q(*y)).sum::<Q>() >= rational::q(-a))
    };
    // vertices of P_D are feasible solutions of n independent tight constraints
    let mut lo: Option<Vec<Q>> = None;
    let mut hi: Option<Vec<Q>> = None;
    for subset in combinations(fan.rays.len(), n) {
        let a: Vec<Vec<Q>> = subset.iter().map(|&i| rational::q_vec(&fan.rays[i])).collect();
        if rational::rank(&a) < n {
            continue;
        }
        let b: Vec<Q> = subset.iter().map(|&i| rational::q(-d.coefficients[i])).collect();
        let m = rational::solve(&a, &b).expect("independent constraints");
        if !feasible(&m) {
            continue;
        }
        lo = Some(match lo {
            None => m.clone(),
            Some(l) => l.into_iter().zip(&m).map(|(x, y)| if *y < x { y.clone() } else { x }).collect(),
        });
        hi = Some(match hi {
            None => m.clone(),
            Some(h) => h.into_iter().zip(&m).map(|(x, y)| if *y > x { y.clone() } else { x }).collect(),
        });
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Ok(None);
    };
    let lo: Vec<i64> = lo.iter().map(|x| x.ceil().to_integer().to_i64().expect("small")).collect();
    let hi: Vec<i64> = hi.iter().map(|x| x.floor().to_integer().to_i64().expect("small")).collect();
    Ok(Some((lo, hi)))
}

/// Lattice points of `P_D`.
pub fn global_sections(fan: &Fan, d: &WeilDivisor) -> Result<PointConfig> {
    let n = fan.ambient_rank;
    let Some((lo, hi)) = section_box(fan, d)? else {
        return Ok(PointConfig { ambient_rank: n, points: Vec::new() });
    };
    let mut points = Vec::new();
    if lo.iter().zip(&hi).all(|(l, h)| l <= h) {
        let mut m = lo.clone();
        loop {
            if fan.rays.iter().zip(&d.coefficients).all(|(u, a)| dot(&m, u) >= -a) {
                points.push(m.clone());
            }
            let mut i = 0;
            while i < n {
                m[i] += 1;
                if m[i] <= hi[i] {
                    break;
                }
                m[i] = lo[i];
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    points.sort();
    Ok(PointConfig { ambient_rank: n, points })
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { break };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// The point of the affine toric variety `Spec C[S]` distinguishing the orbit
/// of `face`: coordinate `i` is 1 exactly when point `i` lies on the face.
pub fn orbit_distinguished_point(points: &PointConfig, face: &[usize]) -> Result<Vec<u8>> {
    let faces = point_faces(points)?;
    let mut want = face.to_vec();
    want.sort_unstable();
    want.dedup();
    if !faces.contains(&want) {
        return Err(Error::NotAFace(want));
    }
    Ok((0..points.points.len()).map(|i| u8::from(want.contains(&i))).collect())
}

/// Faces of `cone(points)`, each as the set of point indices lying on it.
pub fn point_faces(points: &PointConfig) -> Result<BTreeSet<Vec<usize>>> {
    let cone = Cone::new(points.ambient_rank, &points.points)?;
    let ineqs = cone.inequalities();
    let all: Vec<usize> = (0..points.points.len()).collect();
    let tight: Vec<Vec<usize>> =
        ineqs.iter().map(|f| all.iter().copied().filter(|&i| dot(f, &points.points[i]) == 0).collect()).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([all.clone()]);
    let mut stack = vec![all];
    while let Some(face) = stack.pop() {
        for t in &tight {
            let next: Vec<usize> = face.iter().copied().filter(|i| t.contains(i)).collect();
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    Ok(seen)
}

/// Each face of the cone with the dimension of its orbit (the rank of the
/// lattice spanned by the generators on the face).
pub fn orbit_face_lattice(points: &PointConfig) -> Result<Vec<(Vec<usize>, usize)>> {
    let faces = point_faces(points)?;
    let mut out: Vec<(Vec<usize>, usize)> = faces
        .into_iter()
        .map(|f| {
            let rows: Vec<Vec<i64>> = f.iter().map(|&i| points.points[i].clone()).collect();
            let dim = rational::rank_i64(&rows);
            (f, dim)
        })
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn weil(fan: &Fan, a: &[i64]) -> WeilDivisor {
        WeilDivisor::new(fan, a.to_vec()).unwrap()
    }

    #[test]
    fn fixtures_are_complete_and_smooth() {
        for fan in [Fan::projective_space(1), Fan::projective_space(2), Fan::projective_space(3), Fan::p1_x_p1()] {
            assert!(fan.is_complete());
            assert!(fan.is_smooth());
        }
        for r in 0..=3 {
            assert!(Fan::hirzebruch(r).is_complete());
            assert!(Fan::hirzebruch(r).is_smooth());
        }
        assert!(!Fan::quadric_cone().is_complete());
        assert!(!Fan::quadric_cone().is_smooth());
    }

    #[test]
    fn class_groups() {
        assert_eq!(class_group(&Fan::projective_space(2)).unwrap(), AbelianGroupStructure::free(1));
        assert_eq!(class_group(&Fan::p1_x_p1()).unwrap(), AbelianGroupStructure::free(2));
        for r in 1..=3 {
            assert_eq!(class_group(&Fan::hirzebruch(r)).unwrap(), AbelianGroupStructure::free(2));
        }
        let q = class_group(&Fan::quadric_cone()).unwrap();
        assert_eq!(q.free_rank, 0);
        assert_eq!(q.torsion, vec![BigInt::from(2)]);
        let line = Fan::new(2, vec![vec![1, 0]], vec![vec![0]]).unwrap();
        assert!(matches!(class_group(&line), Err(Error::RaysDoNotSpan)));
    }

    #[test]
    fn characters() {
        let p2 = Fan::projective_space(2);
        assert_eq!(divisor_of_character(&p2, &[1, 0]).coefficients, vec![1, 0, -1]);
        assert_eq!(divisor_of_character(&p2, &[0, 0]).coefficients, vec![0, 0, 0]);
        assert_eq!(divisor_of_character(&Fan::p1_x_p1(), &[1, 0]).coefficients, vec![1, -1, 0, 0]);
    }

    #[test]
    fn cartier() {
        let q = Fan::quadric_cone();
        match cartier_data(&q, &weil(&q, &[1, 0])) {
            Err(Error::NotCartier { cone, solution }) => {
                assert_eq!(cone, vec![0, 1]);
                assert_eq!(solution, vec!["-1/2".to_string(), "-1".to_string()]);
            }
            other => panic!("{other:?}"),
        }
        let p2 = Fan::projective_space(2);
        let d = divisor_of_character(&p2, &[2, -1]);
        let data = cartier_data(&p2, &d).unwrap();
        assert!(data.local.iter().all(|m| m == &vec![-2, 1]));
    }

    #[test]
    fn positivity_examples() {
        let p2 = Fan::projective_space(2);
        let p = positivity(&p2, &weil(&p2, &[1, 0, 0])).unwrap();
        assert_eq!(p, Positivity { globally_generated: true, ample: true, very_ample: true });
        let p1p1 = Fan::p1_x_p1();
        let p = positivity(&p1p1, &weil(&p1p1, &[1, -1, 0, 0])).unwrap();
        assert!(p.globally_generated && !p.ample);
        let h2 = Fan::hirzebruch(2);
        let p = positivity(&h2, &weil(&h2, &[0, 0, 0, 1])).unwrap();
        assert!(p.globally_generated && !p.ample);
    }

    #[test]
    fn sections() {
        let p2 = Fan::projective_space(2);
        assert_eq!(global_sections(&p2, &weil(&p2, &[3, 0, 0])).unwrap().len(), 10);
        assert!(global_sections(&p2, &weil(&p2, &[-5, -5, -5])).unwrap().is_empty());
        let p1p1 = Fan::p1_x_p1();
        assert_eq!(global_sections(&p1p1, &weil(&p1p1, &[1, 0, 1, 0])).unwrap().len(), 4);
        let q = Fan::quadric_cone();
        assert!(matches!(global_sections(&q, &weil(&q, &[0, 0])), Err(Error::Unbounded)));
    }

    #[test]
    fn orbits() {
        let s = PointConfig::new(2, vec![vec![1, 0], vec![1, 1], vec![1, 2]]).unwrap();
        assert_eq!(orbit_distinguished_point(&s, &[0, 1, 2]).unwrap(), vec![1, 1, 1]);
        assert_eq!(orbit_distinguished_point(&s, &[]).unwrap(), vec![0, 0, 0]);
        assert_eq!(orbit_distinguished_point(&s, &[0]).unwrap(), vec![1, 0, 0]);
        assert!(matches!(orbit_distinguished_point(&s, &[1]), Err(Error::NotAFace(_))));
        let dims: Vec<usize> = orbit_face_lattice(&s).unwrap().iter().map(|f| f.1).collect();
        assert_eq!(dims, vec![0, 1, 1, 2]);
    }

    #[test]
    fn combinations_enumerate_subsets() {
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }
}
