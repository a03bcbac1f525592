//! Regular subdivisions of point configurations and their comparison with
//! initial complexes of toric ideals.
//!
//! Points are affine; the toric ideal used throughout is that of the
//! homogenized configuration `{(p, 1)}`, with variables in point order.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{toric_ideal, Field, Ideal, Monomial, TermOrder};
use crate::lattice::rational;
use crate::polyhedra::triangulate::{abs_det, placing_triangulation};
use crate::polyhedra::{Chart, Cone, PointConfig};

/// Cells of the regular subdivision induced by lifting point `i` to height `heights[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subdivision {
    pub points: PointConfig,
    pub heights: Vec<i64>,
    /// Sorted point-index sets, sorted.
    pub cells: Vec<Vec<usize>>,
}

/// Affine dimension of the configuration.
pub fn affine_dimension(config: &PointConfig) -> usize {
    let h = config.homogenized();
    rational::rank_i64(&h.points).saturating_sub(1)
}

/// Normalized volume of `conv(S)` relative to the affine lattice generated by `S`.
pub fn normalized_volume(config: &PointConfig) -> BigInt {
    let all: Vec<usize> = (0..config.len()).collect();
    cell_volume(config, &all)
}

fn cell_volume(config: &PointConfig, cell: &[usize]) -> BigInt {
    let h = config.homogenized();
    let chart = Chart::generated(h.ambient_rank, &h.points);
    let k = chart.rank();
    let coords: Vec<Vec<i64>> = cell.iter().map(|&i| chart.coords(&h.points[i]).expect("point of its own lattice")).collect();
    if rational::rank_i64(&coords) < k {
        return BigInt::from(0);
    }
    if coords.len() == k {
        return abs_det(&coords, k);
    }
    placing_triangulation(&coords, k)
        .cells
        .iter()
        .map(|c| {
            let vs: Vec<Vec<i64>> = c.iter().map(|&i| coords[i].clone()).collect();
            abs_det(&vs, k)
        })
        .sum()
}

/// Lower faces of the lifted configuration `{(p_i, ω_i)}`, projected back.
pub fn regular_subdivision(config: &PointConfig, heights: &[i64]) -> Result<Subdivision> {
    if heights.len() != config.len() {
        return Err(Error::DimensionMismatch { expected: config.len(), got: heights.len() });
    }
    if config.is_empty() {
        return Err(Error::InvalidInput("empty point configuration".into()));
    }
    let d = config.ambient_rank;
    let lifted: Vec<Vec<i64>> = config
        .points
        .iter()
        .zip(heights)
        .map(|(p, &w)| {
            let mut v = p.clone();
            v.push(1);
            v.push(w);
            v
        })
        .collect();
    let mut up = vec![0; d + 2];
    up[d + 1] = 1;
    let mut gens = lifted.clone();
    gens.push(up);
    let cone = Cone::new(d + 2, &gens)?;
    let mut cells: Vec<Vec<usize>> = cone
        .inequalities()
        .into_iter()
        .filter(|a| a[d + 1] > 0)
        .map(|a| (0..lifted.len()).filter(|&i| dot(&a, &lifted[i]) == 0).collect())
        .collect();
    cells.sort();
    cells.dedup();
    Ok(Subdivision { points: config.clone(), heights: heights.to_vec(), cells })
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Subdivision {
    pub fn dimension(&self) -> usize {
        affine_dimension(&self.points)
    }

    /// Every cell is a simplex.
    pub fn is_triangulation(&self) -> bool {
        let k = self.dimension() + 1;
        self.cells.iter().all(|c| c.len() == k)
    }

    /// First non-simplex cell, as an error.
    pub fn require_triangulation(&self) -> Result<()> {
        let k = self.dimension() + 1;
        match self.cells.iter().find(|c| c.len() != k) {
            Some(c) => Err(Error::NonGenericWeight { cell: c.clone() }),
            None => Ok(()),
        }
    }

    pub fn cell_volume(&self, cell: &[usize]) -> BigInt {
        cell_volume(&self.points, cell)
    }

    /// Sum of cell volumes equals the volume of the convex hull.
    pub fn volumes_add_up(&self) -> bool {
        let total: BigInt = self.cells.iter().map(|c| self.cell_volume(c)).sum();
        total == normalized_volume(&self.points)
    }

    /// All faces of the cells (subsets of the simplices) for a triangulation.
    pub fn faces(&self) -> BTreeSet<Vec<usize>> {
        let mut out = BTreeSet::new();
        for c in &self.cells {
            for mask in 0u64..(1 << c.len()) {
                out.insert(c.iter().enumerate().filter(|(j, _)| mask >> j & 1 == 1).map(|(_, &i)| i).collect());
            }
        }
        out
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_triangulation() && self.cells.iter().all(|c| self.cell_volume(c).is_one())
    }

    /// Whether every cell of `self` lies in a cell of `coarser`.
    pub fn refines(&self, coarser: &Subdivision) -> bool {
        self.cells.iter().all(|c| coarser.cells.iter().any(|d| c.iter().all(|i| d.contains(i))))
    }
}

/// A generic weight whose triangulation refines the subdivision of `heights`:
/// `M·ω + ε` with `ε_i = B^i`, enlarging `B` and `M` until the lift is generic
/// and the refinement holds.
pub fn perturbed_weight(config: &PointConfig, heights: &[i64]) -> Result<Vec<i64>> {
    let coarse = regular_subdivision(config, heights)?;
    let n = config.len() as u32;
    for base in 2i64..64 {
        let Some(eps) = (0..n).map(|i| base.checked_pow(i)).collect::<Option<Vec<i64>>>() else {
            break;
        };
        let spread: i64 = eps.iter().sum();
        for scale in [spread + 1, 4 * (spread + 1), 64 * (spread + 1)] {
            let Some(w) = heights.iter().zip(&eps).map(|(h, e)| h.checked_mul(scale)?.checked_add(*e)).collect::<Option<Vec<i64>>>() else {
                continue;
            };
            let fine = regular_subdivision(config, &w)?;
            if fine.is_triangulation() && fine.refines(&coarse) {
                return Ok(w);
            }
        }
    }
    Err(Error::TooLarge("no generic perturbation within integer range".into()))
}

/// Monomial ideal by minimal exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    pub nvars: usize,
    pub generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> MonomialIdeal {
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && divides(h, g)))
            .cloned()
            .collect();
        MonomialIdeal { nvars, generators: minimal }
    }

    /// Leading monomials of a Groebner basis, i.e. the initial ideal.
    pub fn from_ideal(ideal: &Ideal, order: &TermOrder) -> Result<MonomialIdeal> {
        let basis = ideal.groebner(order)?;
        let gens = basis.iter().filter_map(|g| g.leading_monomial(order).cloned()).collect();
        Ok(MonomialIdeal::new(ideal.nvars(), gens))
    }

    /// Prime `<x_i : i in vars>`.
    pub fn prime(nvars: usize, vars: &[usize]) -> MonomialIdeal {
        let gens = vars
            .iter()
            .map(|&i| {
                let mut e = vec![0; nvars];
                e[i] = 1;
                e
            })
            .collect();
        MonomialIdeal::new(nvars, gens)
    }

    pub fn contains(&self, m: &[u32]) -> bool {
        self.generators.iter().any(|g| divides(g, m))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.generators.iter().map(|g| g.iter().map(|&e| e.min(1)).collect()).collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(|g| g.iter().all(|&e| e <= 1))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()))
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Sets `x_i = 1` for `i in vars`.
    pub fn localize(&self, vars: &[usize]) -> MonomialIdeal {
        let gens = self
            .generators
            .iter()
            .map(|g| g.iter().enumerate().map(|(i, &e)| if vars.contains(&i) { 0 } else { e }).collect())
            .collect();
        MonomialIdeal::new(self.nvars, gens)
    }

    /// Number of monomials in the variables outside `ignore` that avoid the
    /// ideal; `None` if infinite.
    pub fn standard_monomial_count(&self, ignore: &[usize]) -> Option<u64> {
        let live: Vec<usize> = (0..self.nvars).filter(|i| !ignore.contains(i)).collect();
        if self.generators.iter().any(|g| g.iter().all(|&e| e == 0)) {
            return Some(0);
        }
        // each live variable needs a pure power
        let mut bound = vec![0u32; self.nvars];
        for &i in &live {
            let pure = self
                .generators
                .iter()
                .filter(|g| g.iter().enumerate().all(|(j, &e)| j == i || e == 0))
                .map(|g| g[i])
                .min()?;
            bound[i] = pure;
        }
        let mut count = 0u64;
        let mut stack = vec![vec![0u32; self.nvars]];
        while let Some(m) = stack.pop() {
            if self.contains(&m) {
                continue;
            }
            count += 1;
            // extend only at or after the last nonzero live position to visit each monomial once
            let last = live.iter().rposition(|&i| m[i] > 0).unwrap_or(0);
            for &i in &live[last..] {
                if m[i] < bound[i] {
                    let mut next = m.clone();
                    next[i] += 1;
                    stack.push(next);
                }
            }
        }
        Some(count)
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Simplicial complex of squarefree supports avoiding a monomial ideal's radical.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialComplex {
    pub nvars: usize,
    pub faces: BTreeSet<Vec<usize>>,
}

impl InitialComplex {
    pub fn of_monomial_ideal(ideal: &MonomialIdeal) -> InitialComplex {
        let rad = ideal.radical();
        let n = ideal.nvars;
        let mut faces = BTreeSet::new();
        let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
        while let Some(f) = stack.pop() {
            let mut m = vec![0u32; n];
            for &i in &f {
                m[i] = 1;
            }
            if rad.contains(&m) {
                continue;
            }
            let start = f.last().map_or(0, |&l| l + 1);
            for i in start..n {
                let mut g = f.clone();
                g.push(i);
                stack.push(g);
            }
            faces.insert(f);
        }
        InitialComplex { nvars: n, faces }
    }

    /// Inclusion-maximal faces.
    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .filter(|f| !self.faces.iter().any(|g| g.len() > f.len() && f.iter().all(|i| g.contains(i))))
            .cloned()
            .collect()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|f| {
            (0..f.len()).all(|skip| {
                let sub: Vec<usize> = f.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, &i)| i).collect();
                self.faces.contains(&sub)
            })
        })
    }
}

/// Complex of `in_<(I)`: faces are the supports whose squarefree monomial is not in the radical.
pub fn initial_complex(ideal: &Ideal, order: &TermOrder) -> Result<InitialComplex> {
    Ok(InitialComplex::of_monomial_ideal(&MonomialIdeal::from_ideal(ideal, order)?))
}

/// The weight order used for a configuration: heights shifted to be
/// nonnegative (harmless since the homogenized toric ideal is graded),
/// refined by grevlex.
pub fn weight_order(heights: &[i64]) -> Result<TermOrder> {
    let low = heights.iter().copied().min().unwrap_or(0).min(0);
    TermOrder::weight(heights.iter().map(|h| h - low).collect(), TermOrder::GRevLex)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceReport {
    pub triangulation: Vec<Vec<usize>>,
    pub initial_ideal: Vec<Monomial>,
    pub initial_complex_facets: Vec<Vec<usize>>,
    pub faces_equal: bool,
    /// `rad(in(I)) = ∩_σ <x_i : i not in σ>` over the cells σ.
    pub radical_identity: bool,
}

impl CorrespondenceReport {
    pub fn holds(&self) -> bool {
        self.faces_equal && self.radical_identity
    }
}

/// Computes the regular triangulation and the initial complex of the toric
/// ideal independently and compares them.
pub fn check_sturmfels_correspondence(config: &PointConfig, heights: &[i64]) -> Result<CorrespondenceReport> {
    let sub = regular_subdivision(config, heights)?;
    sub.require_triangulation()?;
    let ideal = toric_ideal(&config.homogenized(), Field::Rationals)?;
    let order = weight_order(heights)?;
    let initial = MonomialIdeal::from_ideal(&ideal, &order)?;
    let complex = InitialComplex::of_monomial_ideal(&initial);
    let faces_equal = complex.faces == sub.faces();
    let n = config.len();
    let mut meet: Option<MonomialIdeal> = None;
    for cell in &sub.cells {
        let outside: Vec<usize> = (0..n).filter(|i| !cell.contains(i)).collect();
        let p = MonomialIdeal::prime(n, &outside);
        meet = Some(match meet {
            None => p,
            Some(m) => m.intersect(&p),
        });
    }
    let radical_identity = meet.is_some_and(|m| m == initial.radical());
    Ok(CorrespondenceReport {
        triangulation: sub.cells.clone(),
        initial_ideal: initial.generators.clone(),
        initial_complex_facets: complex.facets(),
        faces_equal,
        radical_identity,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellMultiplicity {
    pub cell: Vec<usize>,
    pub normalized_volume: BigInt,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub cells: Vec<CellMultiplicity>,
    pub initial_squarefree: bool,
    pub unimodular: bool,
}

impl MultiplicityReport {
    /// Multiplicities match volumes, and squarefree iff unimodular.
    pub fn consistent(&self) -> bool {
        self.cells.iter().all(|c| BigInt::from(c.multiplicity) == c.normalized_volume) && self.initial_squarefree == self.unimodular
    }
}

/// Volume of each cell against the multiplicity of `<x_i : i not in σ>` in the initial ideal.
pub fn multiplicity_report(config: &PointConfig, heights: &[i64]) -> Result<MultiplicityReport> {
    let sub = regular_subdivision(config, heights)?;
    sub.require_triangulation()?;
    let ideal = toric_ideal(&config.homogenized(), Field::Rationals)?;
    let initial = MonomialIdeal::from_ideal(&ideal, &weight_order(heights)?)?;
    let mut cells = Vec::new();
    for cell in &sub.cells {
        let multiplicity = initial
            .localize(cell)
            .standard_monomial_count(cell)
            .ok_or_else(|| Error::InvalidInput(format!("cell {cell:?} is not a component of the initial ideal")))?;
        cells.push(CellMultiplicity { cell: cell.clone(), normalized_volume: sub.cell_volume(cell), multiplicity });
    }
    let unimodular = cells.iter().all(|c| c.normalized_volume.is_one());
    Ok(MultiplicityReport { cells, initial_squarefree: initial.is_squarefree(), unimodular })
}
