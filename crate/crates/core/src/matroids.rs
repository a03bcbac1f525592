//! Matroids given by their bases.
//!
//! Bases are stored as bitmasks over the ground set `0..n` and keep the order
//! they were given in; that order fixes the variables `y_B` of the toric ring
//! of the matroid.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cuts::Graph;
use crate::error::{Error, Result};
use crate::ideals::{toric_ideal, Field, Ideal, Polynomial, TermOrder};
use crate::lattice::rational::rank_i64;
use crate::lattice::IntMatrix;
use crate::polyhedra::{monoid_is_saturated, PointConfig, Polytope, SaturationReport};

/// Largest edge count accepted by [`graphic_matroid`].
pub const GRAPHIC_EDGE_LIMIT: usize = 12;
/// Default cap on the number of basis multisets enumerated by [`white_check`].
pub const DEFAULT_MULTISET_BUDGET: usize = 500_000;
/// Largest dilation accepted by [`icp_check`].
pub const ICP_DILATION_LIMIT: usize = 3;
const ICP_BASIS_LIMIT: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatroidSpec", into = "ExplicitSpec")]
pub struct Matroid {
    ground: usize,
    bases: Vec<u64>,
    index: HashMap<u64, usize>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatroidSpec {
    Described(Described),
    Explicit(ExplicitSpec),
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
enum Described {
    Uniform { r: usize, n: usize },
    Graphic { graph: Graph },
}

#[derive(Serialize, Deserialize)]
struct ExplicitSpec {
    ground: usize,
    bases: Vec<Vec<usize>>,
}

impl TryFrom<MatroidSpec> for Matroid {
    type Error = Error;
    fn try_from(spec: MatroidSpec) -> Result<Matroid> {
        match spec {
            MatroidSpec::Explicit(e) => Matroid::new(e.ground, e.bases),
            MatroidSpec::Described(Described::Uniform { r, n }) => uniform_matroid(r, n),
            MatroidSpec::Described(Described::Graphic { graph }) => graphic_matroid(&graph),
        }
    }
}

impl From<Matroid> for ExplicitSpec {
    fn from(m: Matroid) -> ExplicitSpec {
        ExplicitSpec { ground: m.ground, bases: m.bases() }
    }
}

fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0, |acc, &e| acc | 1 << e)
}

fn elements(mask: u64) -> Vec<usize> {
    (0..64).filter(|&e| mask >> e & 1 == 1).collect()
}

/// All `k`-subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        out.push(c.clone());
        let Some(i) = (0..k).rev().find(|&i| c[i] < n - k + i) else {
            return out;
        };
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

impl Matroid {
    /// Matroid with the given bases, checking the basis exchange axiom.
    pub fn new(ground: usize, bases: Vec<Vec<usize>>) -> Result<Matroid> {
        if ground > 64 {
            return Err(Error::TooLarge(format!("ground set of size {ground}")));
        }
        let Some(rank) = bases.first().map(Vec::len) else {
            return Err(Error::InvalidInput("a matroid has at least one basis".into()));
        };
        let mut masks = Vec::with_capacity(bases.len());
        let mut index = HashMap::new();
        for b in &bases {
            if b.iter().any(|&e| e >= ground) {
                return Err(Error::InvalidInput(format!("basis {b:?} leaves the ground set")));
            }
            let mask = mask_of(b);
            if mask.count_ones() as usize != b.len() {
                return Err(Error::InvalidInput(format!("basis {b:?} repeats an element")));
            }
            if b.len() != rank {
                return Err(Error::InvalidInput(format!("basis {b:?} does not have size {rank}")));
            }
            if index.insert(mask, masks.len()).is_some() {
                return Err(Error::InvalidInput(format!("basis {b:?} listed twice")));
            }
            masks.push(mask);
        }
        let m = Matroid { ground, bases: masks, index };
        if let Some((b1, b2, x)) = m.exchange_violation() {
            return Err(Error::InvalidInput(format!(
                "exchange axiom fails: no y in {:?} replaces {x} in {:?}",
                elements(b2 & !b1),
                elements(b1)
            )));
        }
        Ok(m)
    }

    fn exchange_violation(&self) -> Option<(u64, u64, usize)> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for x in elements(b1 & !b2) {
                    let without = b1 & !(1 << x);
                    if !elements(b2 & !b1).into_iter().any(|y| self.is_basis(without | 1 << y)) {
                        return Some((b1, b2, x));
                    }
                }
            }
        }
        None
    }

    pub fn ground_size(&self) -> usize {
        self.ground
    }

    pub fn rank(&self) -> usize {
        self.bases[0].count_ones() as usize
    }

    pub fn basis_count(&self) -> usize {
        self.bases.len()
    }

    /// Bases as sorted element lists, in variable order.
    pub fn bases(&self) -> Vec<Vec<usize>> {
        self.bases.iter().map(|&b| elements(b)).collect()
    }

    pub fn is_basis(&self, mask: u64) -> bool {
        self.index.contains_key(&mask)
    }

    /// Position of the basis with these elements, if it is one.
    pub fn basis_index(&self, set: &[usize]) -> Option<usize> {
        self.index.get(&mask_of(set)).copied()
    }

    /// 0/1 indicator vectors of the bases.
    pub fn indicator_vectors(&self) -> Vec<Vec<i64>> {
        self.bases.iter().map(|&b| (0..self.ground).map(|e| (b >> e & 1) as i64).collect()).collect()
    }

    /// Same ground set and the same bases, ignoring their order.
    pub fn same_bases(&self, other: &Matroid) -> bool {
        self.ground == other.ground
            && self.bases.iter().collect::<BTreeSet<_>>() == other.bases.iter().collect::<BTreeSet<_>>()
    }

    /// All multisets obtained from `m` by one symmetric exchange on one pair
    /// of its members; `m` itself is never listed.
    pub fn symmetric_exchange_moves(&self, m: &BasisMultiset) -> Vec<BasisMultiset> {
        let mut out = BTreeSet::new();
        let members = &m.members;
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                if members[i] == members[j] || (j > i + 1 && members[j] == members[j - 1]) {
                    continue;
                }
                for (k, l) in self.exchanges(members[i], members[j]) {
                    let mut next = members.clone();
                    next[i] = k;
                    next[j] = l;
                    let next = BasisMultiset::new(next);
                    if next != *m {
                        debug_assert_eq!(next.union(self), m.union(self));
                        out.insert(next);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    /// Pairs `(B1 - b1 + b2, B2 - b2 + b1)` of bases over all valid `b1, b2`.
    fn exchanges(&self, i: usize, j: usize) -> Vec<(usize, usize)> {
        let (b1, b2) = (self.bases[i], self.bases[j]);
        let mut out = Vec::new();
        for x in elements(b1 & !b2) {
            for y in elements(b2 & !b1) {
                let b3 = b1 & !(1 << x) | 1 << y;
                let b4 = b2 & !(1 << y) | 1 << x;
                if let (Some(&k), Some(&l)) = (self.index.get(&b3), self.index.get(&b4)) {
                    out.push((k, l));
                }
            }
        }
        out
    }
}

/// Uniform matroid `U(r, n)`: every `r`-subset of `0..n`, lexicographically.
pub fn uniform_matroid(r: usize, n: usize) -> Result<Matroid> {
    if r > n {
        return Err(Error::InvalidInput(format!("rank {r} exceeds ground set size {n}")));
    }
    Matroid::new(n, combinations(n, r))
}

/// Cycle matroid of a connected graph; the ground set is the edge list.
pub fn graphic_matroid(g: &Graph) -> Result<Matroid> {
    let m = g.edges().len();
    if m > GRAPHIC_EDGE_LIMIT {
        return Err(Error::TooLarge(format!("{m} edges, at most {GRAPHIC_EDGE_LIMIT} supported")));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let trees: Vec<Vec<usize>> =
        combinations(m, n.saturating_sub(1)).into_iter().filter(|s| is_forest(n, s.iter().map(|&e| g.edges()[e]))).collect();
    let expected = spanning_tree_count(g);
    assert_eq!(
        num_bigint::BigInt::from(trees.len()),
        expected,
        "spanning tree enumeration disagrees with the matrix-tree theorem"
    );
    Matroid::new(m, trees)
}

fn is_forest(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut v: usize) -> usize {
        while p[v] != v {
            p[v] = p[p[v]];
            v = p[v];
        }
        v
    }
    for (u, v) in edges {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Determinant of the Laplacian with vertex 0 removed.
fn spanning_tree_count(g: &Graph) -> num_bigint::BigInt {
    let n = g.vertex_count();
    if n <= 1 {
        return 1.into();
    }
    let mut lap = vec![vec![0i64; n - 1]; n - 1];
    for &(u, v) in g.edges() {
        for (a, b) in [(u, v), (v, u)] {
            if a > 0 {
                lap[a - 1][a - 1] += 1;
                if b > 0 {
                    lap[a - 1][b - 1] -= 1;
                }
            }
        }
    }
    IntMatrix::from_i64_rows(n - 1, &lap).determinant()
}

/// A multiset of bases, stored as sorted basis indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BasisMultiset {
    members: Vec<usize>,
}

impl BasisMultiset {
    pub fn new(mut members: Vec<usize>) -> BasisMultiset {
        members.sort_unstable();
        BasisMultiset { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn degree(&self) -> usize {
        self.members.len()
    }

    /// Multiplicity of each ground element: the image of the monomial under
    /// `y_B -> prod_{e in B} x_e`.
    pub fn union(&self, m: &Matroid) -> Vec<u32> {
        let mut counts = vec![0; m.ground];
        for &i in &self.members {
            for e in elements(m.bases[i]) {
                counts[e] += 1;
            }
        }
        counts
    }
}

fn multisets(count: usize, degree: usize) -> Vec<BasisMultiset> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(degree);
    fn rec(count: usize, degree: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<BasisMultiset>) {
        if cur.len() == degree {
            out.push(BasisMultiset { members: cur.clone() });
            return;
        }
        for i in from..count {
            cur.push(i);
            rec(count, degree, i, cur, out);
            cur.pop();
        }
    }
    rec(count, degree, 0, &mut cur, &mut out);
    out
}

fn multiset_count(count: usize, degree: usize) -> Option<usize> {
    // C(count + degree - 1, degree)
    let mut acc: u128 = 1;
    for i in 0..degree as u128 {
        acc = acc * (count as u128 + i) / (i + 1);
        if acc > usize::MAX as u128 {
            return None;
        }
    }
    usize::try_from(acc).ok()
}

/// A fiber split into more than one class under symmetric exchanges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DisconnectedFiber {
    pub union: Vec<u32>,
    pub components: Vec<Vec<BasisMultiset>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhiteReport {
    pub degree: usize,
    pub multisets: usize,
    pub fibers: usize,
    pub all_connected: bool,
    pub witness: Option<DisconnectedFiber>,
}

/// Whether every fiber of degree-`d` basis multisets is connected by
/// symmetric exchanges.
pub fn white_check(m: &Matroid, d: usize) -> Result<WhiteReport> {
    white_check_budgeted(m, d, DEFAULT_MULTISET_BUDGET)
}

pub fn white_check_budgeted(m: &Matroid, d: usize, budget: usize) -> Result<WhiteReport> {
    let total = multiset_count(m.basis_count(), d).filter(|&t| t <= budget).ok_or_else(|| {
        Error::BudgetExceeded(format!("more than {budget} multisets of {d} among {} bases", m.basis_count()))
    })?;
    let mut fibers: BTreeMap<Vec<u32>, Vec<BasisMultiset>> = BTreeMap::new();
    for ms in multisets(m.basis_count(), d) {
        fibers.entry(ms.union(m)).or_default().push(ms);
    }
    let fibers: Vec<(Vec<u32>, Vec<BasisMultiset>)> = fibers.into_iter().collect();
    let split: Vec<Option<DisconnectedFiber>> = fibers
        .par_iter()
        .map(|(union, members)| {
            let components = exchange_components(m, members);
            (components.len() > 1).then(|| DisconnectedFiber { union: union.clone(), components })
        })
        .collect();
    let witness = split.into_iter().flatten().next();
    Ok(WhiteReport { degree: d, multisets: total, fibers: fibers.len(), all_connected: witness.is_none(), witness })
}

fn exchange_components(m: &Matroid, members: &[BasisMultiset]) -> Vec<Vec<BasisMultiset>> {
    let mut unseen: BTreeSet<&BasisMultiset> = members.iter().collect();
    let mut components = Vec::new();
    while let Some(&start) = unseen.iter().next() {
        unseen.remove(start);
        let mut component = vec![start.clone()];
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(cur) = queue.pop_front() {
            for next in m.symmetric_exchange_moves(&cur) {
                if unseen.remove(&next) {
                    component.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        component.sort();
        components.push(component);
    }
    components
}

/// The base polytope together with a saturation test of its height-one
/// vertex configuration.
#[derive(Clone, Debug, Serialize)]
pub struct BasePolytope {
    pub polytope: Polytope,
    pub normality: SaturationReport,
}

impl BasePolytope {
    pub fn is_normal(&self) -> bool {
        self.normality.saturated
    }
}

pub fn matroid_base_polytope(m: &Matroid) -> Result<BasePolytope> {
    let vertices = m.indicator_vectors();
    let polytope = Polytope::new(m.ground, &vertices)?;
    let lifted = PointConfig::new(m.ground, vertices)?.homogenized();
    let normality = monoid_is_saturated(lifted.ambient_rank, &lifted.points)?;
    Ok(BasePolytope { polytope, normality })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IcpReport {
    pub dilation: usize,
    pub lattice_points: usize,
    pub holds: bool,
    /// a lattice point of the dilate with no such representation
    pub witness: Option<Vec<i64>>,
}

/// Whether every lattice point of `kP_M` is a sum of `k` vertices, with
/// multiplicity, whose distinct members are affinely independent.
pub fn icp_check(m: &Matroid, k: usize) -> Result<IcpReport> {
    if k > ICP_DILATION_LIMIT {
        return Err(Error::TooLarge(format!("dilation {k}, at most {ICP_DILATION_LIMIT} supported")));
    }
    if m.basis_count() > ICP_BASIS_LIMIT {
        return Err(Error::TooLarge(format!("{} bases, at most {ICP_BASIS_LIMIT} supported", m.basis_count())));
    }
    let vertices = m.indicator_vectors();
    let mut representable: HashSet<Vec<i64>> = HashSet::new();
    for ms in multisets(vertices.len(), k) {
        let support: BTreeSet<usize> = ms.members.iter().copied().collect();
        let support: Vec<&Vec<i64>> = support.into_iter().map(|i| &vertices[i]).collect();
        let diffs: Vec<Vec<i64>> =
            support[1..].iter().map(|v| v.iter().zip(support[0]).map(|(a, b)| a - b).collect()).collect();
        if rank_i64(&diffs) == diffs.len() {
            let mut sum = vec![0i64; m.ground];
            for &i in &ms.members {
                for (s, x) in sum.iter_mut().zip(&vertices[i]) {
                    *s += x;
                }
            }
            representable.insert(sum);
        }
    }
    let points = Polytope::new(m.ground, &vertices)?.lattice_points(k as u64).points;
    let witness = points.iter().find(|p| !representable.contains(*p)).cloned();
    Ok(IcpReport { dilation: k, lattice_points: points.len(), holds: witness.is_none(), witness })
}

/// Variable names `a1, a2, ...` for the basis variables.
pub fn basis_variable_names(count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("a{i}")).collect()
}

/// Binomials `y_B1 y_B2 - y_B3 y_B4` of all symmetric exchanges, up to sign;
/// exchanges that give back the same pair are dropped.
pub fn exchange_binomials(m: &Matroid, field: Field) -> Vec<Polynomial> {
    let nvars = m.basis_count();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for i in 0..nvars {
        for j in i + 1..nvars {
            for (k, l) in m.exchanges(i, j) {
                let (k, l) = (k.min(l), k.max(l));
                if (k, l) == (i, j) {
                    continue;
                }
                let key = ((i, j).min((k, l)), (i, j).max((k, l)));
                if seen.insert(key) {
                    let mut plus = vec![0u32; nvars];
                    plus[i] += 1;
                    plus[j] += 1;
                    let mut minus = vec![0u32; nvars];
                    minus[k] += 1;
                    minus[l] += 1;
                    out.push(Polynomial::binomial(field, &plus, &minus));
                }
            }
        }
    }
    out
}

/// Membership of a proposed polynomial in the colon ideal `C = J^[2] : J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateMembership {
    /// `f` lies in `C`
    pub in_colon: bool,
    /// `f` lies in `C + (y_B^2)`, i.e. in the image of `C` in `S/(y_B^2)`
    pub modulo_squares: bool,
}

#[derive(Clone, Debug)]
pub struct FedderReport {
    pub is_f_pure: bool,
    /// generator of `C = J^[2] : J` with a squarefree term
    pub witness: Option<Polynomial>,
    /// the witness with every non-squarefree term removed
    pub witness_modulo_squares: Option<Polynomial>,
    /// reduced grevlex basis of `C`
    pub colon: Ideal,
    pub candidate: Option<CandidateMembership>,
}

fn squarefree_part(g: &Polynomial) -> Polynomial {
    let terms = g.terms().iter().filter(|(mono, _)| mono.iter().all(|&e| e <= 1)).cloned().collect();
    Polynomial::from_terms(g.nvars(), g.field(), terms)
}

/// Fedder's test over `F_2` for the ideal `J` of symmetric exchanges:
/// `S/J` is F-pure exactly when `C = J^[2] : J` is not inside `(y_B^2)`.
///
/// `candidate`, if given, is tested for membership in `C` and in `C + (y_B^2)`.
pub fn fedder_check(m: &Matroid, candidate: Option<&Polynomial>) -> Result<FedderReport> {
    let f2 = Field::Prime(2);
    let nvars = m.basis_count();
    let exchanges = Ideal::new(nvars, f2, exchange_binomials(m, f2))?;
    let colon = exchanges.frobenius_power(2)?.colon(&exchanges)?.reduced(&TermOrder::GRevLex)?;
    // (y_B^2) is monomial, so a generator leaves it iff it has a squarefree term
    let witness = colon.generators().iter().find(|g| !squarefree_part(g).is_zero()).cloned();
    let candidate = match candidate {
        Some(f) => {
            let f = f.convert(f2)?;
            let squares = (0..nvars).map(|i| Polynomial::var(nvars, f2, i).pow(2)).collect();
            let widened = colon.sum(&Ideal::new(nvars, f2, squares)?)?;
            Some(CandidateMembership { in_colon: colon.contains(&f)?, modulo_squares: widened.contains(&f)? })
        }
        None => None,
    };
    Ok(FedderReport {
        is_f_pure: witness.is_some(),
        witness_modulo_squares: witness.as_ref().map(squarefree_part),
        witness,
        colon,
        candidate,
    })
}

#[derive(Clone, Debug)]
pub struct MatroidIdealReport {
    /// reduced grevlex Groebner basis
    pub ideal: Ideal,
    pub minimal: Ideal,
    /// largest degree of a minimal generator
    pub max_degree: u64,
    pub ground_size: usize,
}

impl MatroidIdealReport {
    /// Generators have degree at most `|E|`.
    pub fn within_ground_bound(&self) -> bool {
        self.max_degree <= self.ground_size as u64
    }
}

/// Toric ideal of the basis indicator vectors, over the rationals.
pub fn matroid_toric_ideal(m: &Matroid) -> Result<MatroidIdealReport> {
    let config = PointConfig::new(m.ground, m.indicator_vectors())?;
    let ideal = toric_ideal(&config, Field::Rationals)?;
    let minimal = ideal.minimal_generators()?;
    let max_degree = minimal.generators().iter().map(Polynomial::total_degree).max().unwrap_or(0);
    Ok(MatroidIdealReport { ideal, minimal, max_degree, ground_size: m.ground })
}

/// The square `0-1-2-3` with diagonal `0-2`; edges are listed so that
/// `{0,1,4}` and `{2,3,4}` are its triangles.
pub fn square_with_diagonal() -> Graph {
    Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).expect("simple graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_counts() {
        assert_eq!(uniform_matroid(2, 4).unwrap().basis_count(), 6);
        assert_eq!(uniform_matroid(0, 3).unwrap().basis_count(), 1);
        assert_eq!(uniform_matroid(3, 3).unwrap().basis_count(), 1);
        assert_eq!(uniform_matroid(2, 4).unwrap().bases()[..3], [vec![0, 1], vec![0, 2], vec![0, 3]]);
        assert!(uniform_matroid(3, 2).is_err());
    }

    #[test]
    fn exchange_axiom_rejects() {
        assert!(Matroid::new(4, vec![vec![0, 1], vec![2, 3]]).is_err());
        assert!(Matroid::new(3, vec![vec![0, 1], vec![0]]).is_err());
        assert!(Matroid::new(3, vec![vec![0, 0]]).is_err());
    }

    #[test]
    fn graphic_counts() {
        assert_eq!(graphic_matroid(&Graph::cycle(3)).unwrap().basis_count(), 3);
        assert_eq!(graphic_matroid(&square_with_diagonal()).unwrap().basis_count(), 8);
        assert_eq!(graphic_matroid(&Graph::path(5)).unwrap().basis_count(), 1);
        assert_eq!(graphic_matroid(&Graph::complete(4)).unwrap().basis_count(), 16);
        let split = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert_eq!(graphic_matroid(&split), Err(Error::Disconnected));
        assert!(matches!(graphic_matroid(&Graph::complete(6)), Err(Error::TooLarge(_))));
    }

    #[test]
    fn exchange_moves() {
        let m = uniform_matroid(2, 4).unwrap();
        let pair = BasisMultiset::new(vec![m.basis_index(&[0, 1]).unwrap(), m.basis_index(&[2, 3]).unwrap()]);
        let moves = m.symmetric_exchange_moves(&pair);
        let expected = BasisMultiset::new(vec![m.basis_index(&[1, 2]).unwrap(), m.basis_index(&[0, 3]).unwrap()]);
        assert!(moves.contains(&expected));
        assert_eq!(moves.len(), 2);
        for mv in &moves {
            assert_eq!(mv.union(&m), pair.union(&m));
        }
        let twice = BasisMultiset::new(vec![0, 0]);
        assert!(m.symmetric_exchange_moves(&twice).is_empty());
    }

    #[test]
    fn white_small() {
        let m = uniform_matroid(2, 4).unwrap();
        let r = white_check(&m, 2).unwrap();
        assert!(r.all_connected);
        assert_eq!(r.multisets, 21);
        assert!(white_check(&m, 1).unwrap().all_connected);
        let g = graphic_matroid(&square_with_diagonal()).unwrap();
        assert!(white_check(&g, 2).unwrap().all_connected);
        assert!(white_check(&g, 3).unwrap().all_connected);
        assert!(matches!(white_check_budgeted(&g, 3, 10), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn base_polytopes() {
        let oct = matroid_base_polytope(&uniform_matroid(2, 4).unwrap()).unwrap();
        assert_eq!(oct.polytope.vertices().len(), 6);
        assert!(oct.is_normal());
        assert!(matroid_base_polytope(&uniform_matroid(1, 5).unwrap()).unwrap().is_normal());
        let tri = matroid_base_polytope(&graphic_matroid(&Graph::cycle(3)).unwrap()).unwrap();
        assert_eq!(tri.polytope.vertices().len(), 3);
        assert!(tri.is_normal());
    }

    #[test]
    fn icp() {
        let u = uniform_matroid(2, 4).unwrap();
        assert!(icp_check(&u, 1).unwrap().holds);
        let r = icp_check(&u, 2).unwrap();
        assert!(r.holds);
        // 2 * octahedron: 6 doubled vertices, 15 pairwise sums minus 3 coincident centres
        assert_eq!(r.lattice_points, 19);
        assert!(icp_check(&graphic_matroid(&Graph::cycle(3)).unwrap(), 2).unwrap().holds);
        assert!(icp_check(&u, 4).is_err());
    }

    #[test]
    fn exchange_ideal_u24() {
        let m = uniform_matroid(2, 4).unwrap();
        let j = exchange_binomials(&m, Field::Rationals);
        assert_eq!(j.len(), 3);
        let report = matroid_toric_ideal(&m).unwrap();
        assert_eq!(report.max_degree, 2);
        assert_eq!(report.minimal.generators().len(), 2);
        assert!(report.within_ground_bound());
        let ji = Ideal::new(6, Field::Rationals, j).unwrap();
        assert!(ji.same_ideal(&report.ideal).unwrap());
    }

    #[test]
    fn degenerate_ideals() {
        assert!(matroid_toric_ideal(&uniform_matroid(1, 4).unwrap()).unwrap().ideal.is_zero_ideal());
        assert!(matroid_toric_ideal(&graphic_matroid(&Graph::cycle(3)).unwrap()).unwrap().ideal.is_zero_ideal());
        let u12 = uniform_matroid(1, 2).unwrap();
        assert!(exchange_binomials(&u12, Field::Prime(2)).is_empty());
        let r = fedder_check(&u12, None).unwrap();
        assert!(r.is_f_pure);
        assert!(r.colon.is_unit().unwrap());
    }

    #[test]
    fn fedder_uniform() {
        let m = uniform_matroid(2, 4).unwrap();
        let names = basis_variable_names(6);
        let f = Polynomial::parse("a2*a3*a4*a5 + a1*a3*a4*a6 + a1*a2*a5*a6", &names, Field::Prime(2)).unwrap();
        let r = fedder_check(&m, Some(&f)).unwrap();
        assert!(r.is_f_pure);
        assert_eq!(r.candidate, Some(CandidateMembership { in_colon: false, modulo_squares: true }));
        assert_eq!(r.witness_modulo_squares, Some(f));
        let not_in = Polynomial::parse("a1*a2*a3*a4", &names, Field::Prime(2)).unwrap();
        assert!(!r.colon.contains(&not_in).unwrap());
    }

    #[test]
    fn fedder_square_with_diagonal() {
        let listed = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3], [0, 2, 4], [1, 3, 4], [0, 3, 4], [1, 2, 4]];
        let m = Matroid::new(5, listed.iter().map(|b| b.to_vec()).collect()).unwrap();
        assert!(m.same_bases(&graphic_matroid(&square_with_diagonal()).unwrap()));
        let names = basis_variable_names(8);
        let f = Polynomial::parse(
            "a1*a4*a5*a6*a7 + a2*a3*a5*a6*a8 + a2*a4*a5*a7*a8 + a1*a3*a6*a7*a8",
            &names,
            Field::Prime(2),
        )
        .unwrap();
        let r = fedder_check(&m, Some(&f)).unwrap();
        assert!(r.is_f_pure);
        assert_eq!(r.candidate.map(|c| c.modulo_squares), Some(true));
    }

    #[test]
    fn json_forms() {
        let u: Matroid = serde_json::from_str(r#"{"type":"uniform","r":2,"n":4}"#).unwrap();
        assert_eq!(u, uniform_matroid(2, 4).unwrap());
        let g: Matroid = serde_json::from_str(r#"{"type":"graphic","graph":{"n":3,"edges":[[0,1],[1,2],[0,2]]}}"#).unwrap();
        assert_eq!(g.basis_count(), 3);
        let e: Matroid = serde_json::from_str(r#"{"ground":3,"bases":[[0],[1],[2]]}"#).unwrap();
        assert_eq!(e, uniform_matroid(1, 3).unwrap());
        let back: Matroid = serde_json::from_str(&serde_json::to_string(&u).unwrap()).unwrap();
        assert_eq!(back, u);
        assert!(serde_json::from_str::<Matroid>(r#"{"ground":4,"bases":[[0,1],[2,3]]}"#).is_err());
    }
}
