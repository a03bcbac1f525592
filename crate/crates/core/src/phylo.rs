//! Group-based phylogenetic models on star trees.
//!
//! A flow is an `n`-tuple of group elements summing to zero. Monomials of the
//! toric ring are tables whose rows are flows, taken up to row order; two
//! tables give a binomial of the toric ideal exactly when their columns agree
//! as multisets.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideals::{toric_ideal, Field, Ideal, Polynomial};
use crate::polyhedra::PointConfig;

/// Largest number of flows enumerated by [`flows`].
pub const FLOW_LIMIT: usize = 1 << 16;
/// Default cap on the number of tables visited by move searches.
pub const DEFAULT_TABLE_BUDGET: usize = 2_000_000;
/// Largest number of flows for which [`phylo_toric_ideal`] is attempted.
pub const IDEAL_FLOW_LIMIT: usize = 16;

/// `Z_{d_1} x ... x Z_{d_k}`; elements are indexed `0..order` in
/// lexicographic order of their coordinate tuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct FiniteAbelianGroup {
    factors: Vec<u32>,
}

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<u32>) -> Result<FiniteAbelianGroup> {
        if factors.is_empty() || factors.iter().any(|&d| d < 2) {
            return Err(Error::InvalidInput(format!("invalid cyclic factors {factors:?}")));
        }
        let order = factors.iter().try_fold(1u64, |acc, &d| acc.checked_mul(u64::from(d)));
        if order.is_none_or(|o| o > 256) {
            return Err(Error::TooLarge(format!("group with factors {factors:?}")));
        }
        Ok(FiniteAbelianGroup { factors })
    }

    pub fn cyclic(d: u32) -> Result<FiniteAbelianGroup> {
        FiniteAbelianGroup::new(vec![d])
    }

    /// The groups offered as named presets.
    pub fn presets() -> Vec<FiniteAbelianGroup> {
        ["Z2", "Z3", "Z2xZ2", "Z4"].iter().map(|s| s.parse().expect("preset")).collect()
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&d| d as usize).product()
    }

    pub fn coordinates(&self, g: usize) -> Vec<u32> {
        let mut rest = g;
        let mut out = vec![0; self.factors.len()];
        for (slot, &d) in out.iter_mut().zip(&self.factors).rev() {
            *slot = (rest % d as usize) as u32;
            rest /= d as usize;
        }
        out
    }

    pub fn element(&self, coords: &[u32]) -> usize {
        coords.iter().zip(&self.factors).fold(0, |acc, (&c, &d)| acc * d as usize + (c % d) as usize)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.coordinates(a), self.coordinates(b));
        let sum: Vec<u32> = x.iter().zip(&y).zip(&self.factors).map(|((p, q), d)| (p + q) % d).collect();
        self.element(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let x = self.coordinates(a);
        let inv: Vec<u32> = x.iter().zip(&self.factors).map(|(p, d)| (d - p) % d).collect();
        self.element(&inv)
    }

    pub fn sum(&self, elems: &[usize]) -> usize {
        elems.iter().fold(0, |acc, &g| self.add(acc, g))
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|d| format!("Z{d}")).collect();
        f.write_str(&parts.join("x"))
    }
}

impl FromStr for FiniteAbelianGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<FiniteAbelianGroup> {
        let factors = s
            .split(['x', 'X'])
            .map(|part| {
                part.trim()
                    .strip_prefix('Z')
                    .and_then(|d| d.parse::<u32>().ok())
                    .ok_or_else(|| Error::InvalidInput(format!("cannot read group \"{s}\"; expected e.g. Z2xZ2")))
            })
            .collect::<Result<Vec<u32>>>()?;
        FiniteAbelianGroup::new(factors)
    }
}

impl TryFrom<String> for FiniteAbelianGroup {
    type Error = Error;
    fn try_from(s: String) -> Result<FiniteAbelianGroup> {
        s.parse()
    }
}

impl From<FiniteAbelianGroup> for String {
    fn from(g: FiniteAbelianGroup) -> String {
        g.to_string()
    }
}

pub type Flow = Vec<usize>;

/// All flows of length `n`, in lexicographic order of element indices.
pub fn flows(group: &FiniteAbelianGroup, n: usize) -> Result<Vec<Flow>> {
    if n == 0 {
        return Err(Error::InvalidInput("flows need at least one leaf".into()));
    }
    let order = group.order();
    let count = u32::try_from(n - 1).ok().and_then(|e| order.checked_pow(e)).filter(|&c| c <= FLOW_LIMIT);
    let Some(count) = count else {
        return Err(Error::TooLarge(format!("{group} with {n} leaves has more than {FLOW_LIMIT} flows")));
    };
    let mut out = Vec::with_capacity(count);
    let mut prefix = vec![0usize; n - 1];
    loop {
        let mut flow = prefix.clone();
        flow.push(group.neg(group.sum(&prefix)));
        out.push(flow);
        let Some(i) = (0..n - 1).rev().find(|&i| prefix[i] + 1 < order) else {
            return Ok(out);
        };
        prefix[i] += 1;
        prefix[i + 1..].iter_mut().for_each(|x| *x = 0);
    }
}

fn is_flow(group: &FiniteAbelianGroup, row: &[usize]) -> bool {
    row.iter().all(|&g| g < group.order()) && group.sum(row) == 0
}

fn vertex_of(order: usize, flow: &[usize]) -> Vec<i64> {
    let mut v = vec![0i64; flow.len() * order];
    for (i, &g) in flow.iter().enumerate() {
        v[i * order + g] = 1;
    }
    v
}

/// Vertices of `P(G, n)`: one 0/1 vector per flow, block `i` marking `g_i`.
pub fn polytope_pgn(group: &FiniteAbelianGroup, n: usize) -> Result<PointConfig> {
    let order = group.order();
    let points = flows(group, n)?.iter().map(|f| vertex_of(order, f)).collect();
    PointConfig::new(n * order, points)
}

/// A multiset of flows, rows sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FlowTable {
    rows: Vec<Flow>,
}

impl FlowTable {
    /// Table with the given rows; every row must be a flow of the same length.
    pub fn new(group: &FiniteAbelianGroup, mut rows: Vec<Flow>) -> Result<FlowTable> {
        if let Some(first) = rows.first() {
            let n = first.len();
            for r in &rows {
                if r.len() != n {
                    return Err(Error::ShapeMismatch);
                }
                if !is_flow(group, r) {
                    return Err(Error::InvalidInput(format!("row {r:?} is not a flow of {group}")));
                }
            }
        }
        rows.sort();
        Ok(FlowTable { rows })
    }

    fn from_sorted(rows: Vec<Flow>) -> FlowTable {
        debug_assert!(rows.windows(2).all(|w| w[0] <= w[1]));
        FlowTable { rows }
    }

    pub fn rows(&self) -> &[Flow] {
        &self.rows
    }

    pub fn degree(&self) -> usize {
        self.rows.len()
    }

    pub fn leaves(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Sum of the vertices of `P(G, n)` for the rows.
    pub fn image(&self, order: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.leaves() * order];
        for row in &self.rows {
            for (i, &g) in row.iter().enumerate() {
                v[i * order + g] += 1;
            }
        }
        v
    }

    fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.leaves())
            .map(|i| {
                let mut c: Vec<usize> = self.rows.iter().map(|r| r[i]).collect();
                c.sort_unstable();
                c
            })
            .collect()
    }

    /// Size of the largest common sub-multiset of rows.
    fn common_rows(&self, other: &FlowTable) -> usize {
        let (mut i, mut j, mut k) = (0, 0, 0);
        while i < self.rows.len() && j < other.rows.len() {
            match self.rows[i].cmp(&other.rows[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    k += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        k
    }
}

/// Columns of the two tables agree as multisets.
pub fn compatible(t0: &FlowTable, t1: &FlowTable) -> Result<bool> {
    if t0.degree() != t1.degree() || (t0.degree() > 0 && t0.leaves() != t1.leaves()) {
        return Err(Error::ShapeMismatch);
    }
    Ok(t0.columns() == t1.columns())
}

/// Sequence of tables, each obtained from the previous one by one move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MovePath {
    pub tables: Vec<FlowTable>,
}

impl MovePath {
    pub fn length(&self) -> usize {
        self.tables.len() - 1
    }
}

/// All multisets of `k` rows from `rows` (given sorted), as index lists.
fn sub_multisets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..len {
            cur.push(i);
            rec(len, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Row multisets of size `k` grouped by image.
fn replacement_index(all: &[Flow], order: usize, k: usize, budget: usize) -> Result<HashMap<Vec<u32>, Vec<Vec<Flow>>>> {
    let mut index: HashMap<Vec<u32>, Vec<Vec<Flow>>> = HashMap::new();
    let mut seen = 0usize;
    let mut cur: Vec<usize> = Vec::with_capacity(k);
    fn rec(
        all: &[Flow],
        order: usize,
        k: usize,
        from: usize,
        cur: &mut Vec<usize>,
        seen: &mut usize,
        budget: usize,
        index: &mut HashMap<Vec<u32>, Vec<Vec<Flow>>>,
    ) -> Result<()> {
        if cur.len() == k {
            *seen += 1;
            if *seen > budget {
                return Err(Error::BudgetExceeded(format!("more than {budget} replacement row sets")));
            }
            let rows: Vec<Flow> = cur.iter().map(|&i| all[i].clone()).collect();
            let t = FlowTable::from_sorted(rows);
            index.entry(t.image(order)).or_default().push(t.rows);
            return Ok(());
        }
        for i in from..all.len() {
            cur.push(i);
            rec(all, order, k, i, cur, seen, budget, index)?;
            cur.pop();
        }
        Ok(())
    }
    rec(all, order, k, 0, &mut cur, &mut seen, budget, &mut index)?;
    Ok(index)
}

/// Shortest path from `t0` to `t1` in which each step replaces at most `d`
/// rows by a compatible set of flows.
pub fn move_generate(group: &FiniteAbelianGroup, t0: &FlowTable, t1: &FlowTable, d: usize) -> Result<Option<MovePath>> {
    move_generate_budgeted(group, t0, t1, d, DEFAULT_TABLE_BUDGET)
}

pub fn move_generate_budgeted(
    group: &FiniteAbelianGroup,
    t0: &FlowTable,
    t1: &FlowTable,
    d: usize,
    budget: usize,
) -> Result<Option<MovePath>> {
    if !compatible(t0, t1)? {
        return Err(Error::InvalidInput("tables are not compatible".into()));
    }
    for t in [t0, t1] {
        if let Some(r) = t.rows.iter().find(|r| !is_flow(group, r)) {
            return Err(Error::InvalidInput(format!("row {r:?} is not a flow of {group}")));
        }
    }
    if t0 == t1 {
        return Ok(Some(MovePath { tables: vec![t0.clone()] }));
    }
    if d >= t0.degree() {
        return Ok(Some(MovePath { tables: vec![t0.clone(), t1.clone()] }));
    }
    let order = group.order();
    let all = flows(group, t0.leaves())?;
    let indices: Vec<HashMap<Vec<u32>, Vec<Vec<Flow>>>> =
        (2..=d).map(|k| replacement_index(&all, order, k, budget)).collect::<Result<_>>()?;

    let mut parent: HashMap<FlowTable, Option<FlowTable>> = HashMap::from([(t0.clone(), None)]);
    let mut queue = VecDeque::from([t0.clone()]);
    while let Some(cur) = queue.pop_front() {
        for (offset, index) in indices.iter().enumerate() {
            let k = offset + 2;
            for picked in sub_multisets(cur.degree(), k) {
                let sub = FlowTable::from_sorted(picked.iter().map(|&i| cur.rows[i].clone()).collect());
                let rest: Vec<Flow> =
                    (0..cur.degree()).filter(|i| !picked.contains(i)).map(|i| cur.rows[i].clone()).collect();
                for replacement in index.get(&sub.image(order)).into_iter().flatten() {
                    let mut rows = rest.clone();
                    rows.extend(replacement.iter().cloned());
                    rows.sort();
                    let next = FlowTable::from_sorted(rows);
                    if parent.contains_key(&next) {
                        continue;
                    }
                    debug_assert_eq!(next.image(order), cur.image(order));
                    if parent.len() >= budget {
                        return Err(Error::BudgetExceeded(format!("move search visited {budget} tables")));
                    }
                    parent.insert(next.clone(), Some(cur.clone()));
                    if next == *t1 {
                        let mut tables = vec![next];
                        while let Some(Some(p)) = parent.get(tables.last().expect("nonempty")) {
                            tables.push(p.clone());
                        }
                        tables.reverse();
                        return Ok(Some(MovePath { tables }));
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub degree: usize,
    pub tables: usize,
    pub fibers: usize,
    /// smallest move size connecting every fiber of this degree
    pub max_move: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexityReport {
    pub group: FiniteAbelianGroup,
    pub leaves: usize,
    pub degree_max: usize,
    pub degrees: Vec<DegreeProfile>,
    /// largest move size any fiber of degree at most `degree_max` requires
    pub estimate: usize,
}

/// Smallest `k` such that every fiber of tables of degree at most
/// `degree_max` is connected by moves replacing at most `k` rows.
///
/// Two tables of degree `d` are one `k`-move apart exactly when they share
/// at least `d - k` rows, so each fiber needs the bottleneck weight of a
/// minimum spanning tree under the weight `d - common rows`.
pub fn complexity_estimate(group: &FiniteAbelianGroup, n: usize, degree_max: usize) -> Result<ComplexityReport> {
    complexity_estimate_budgeted(group, n, degree_max, DEFAULT_TABLE_BUDGET)
}

pub fn complexity_estimate_budgeted(
    group: &FiniteAbelianGroup,
    n: usize,
    degree_max: usize,
    budget: usize,
) -> Result<ComplexityReport> {
    let order = group.order();
    let all = flows(group, n)?;
    let mut degrees = Vec::new();
    for d in 2..=degree_max {
        let index = replacement_index(&all, order, d, budget)?;
        let fibers: Vec<Vec<FlowTable>> = index
            .into_values()
            .map(|sets| sets.into_iter().map(FlowTable::from_sorted).collect::<Vec<_>>())
            .collect();
        let tables = fibers.iter().map(Vec::len).sum();
        let max_move = fibers.par_iter().map(|f| bottleneck(f, d)).max().unwrap_or(0);
        degrees.push(DegreeProfile { degree: d, tables, fibers: fibers.len(), max_move });
    }
    let estimate = degrees.iter().map(|p| p.max_move).max().unwrap_or(0);
    Ok(ComplexityReport { group: group.clone(), leaves: n, degree_max, degrees, estimate })
}

/// Largest edge of a minimum spanning tree on the fiber (Prim).
fn bottleneck(fiber: &[FlowTable], d: usize) -> usize {
    if fiber.len() < 2 {
        return 0;
    }
    let mut best = vec![usize::MAX; fiber.len()];
    let mut done = vec![false; fiber.len()];
    best[0] = 0;
    let mut worst = 0;
    for _ in 0..fiber.len() {
        let (u, &w) = best.iter().enumerate().filter(|(i, _)| !done[*i]).min_by_key(|(_, w)| **w).expect("vertex left");
        done[u] = true;
        worst = worst.max(w);
        for v in 0..fiber.len() {
            if !done[v] {
                best[v] = best[v].min(d - fiber[u].common_rows(&fiber[v]));
            }
        }
    }
    worst
}

#[derive(Clone, Debug)]
pub struct PhyloIdeal {
    /// reduced grevlex Groebner basis
    pub ideal: Ideal,
    pub minimal: Ideal,
    pub flows: Vec<Flow>,
    /// largest degree of a minimal generator
    pub max_degree: u64,
}

/// Toric ideal of `P(G, n)` over the rationals; variables follow [`flows`].
pub fn phylo_toric_ideal(group: &FiniteAbelianGroup, n: usize) -> Result<PhyloIdeal> {
    let all = flows(group, n)?;
    if all.len() > IDEAL_FLOW_LIMIT {
        return Err(Error::BudgetExceeded(format!("{} flows, at most {IDEAL_FLOW_LIMIT} supported", all.len())));
    }
    let ideal = toric_ideal(&polytope_pgn(group, n)?, Field::Rationals)?;
    let minimal = ideal.minimal_generators()?;
    let max_degree = minimal.generators().iter().map(Polynomial::total_degree).max().unwrap_or(0);
    Ok(PhyloIdeal { ideal, minimal, flows: all, max_degree })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(d: u32) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(d).unwrap()
    }

    fn table(g: &FiniteAbelianGroup, rows: &[&[usize]]) -> FlowTable {
        FlowTable::new(g, rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn groups() {
        let g: FiniteAbelianGroup = "Z2xZ2".parse().unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.add(1, 2), 3);
        assert_eq!(g.add(3, 3), 0);
        assert_eq!(g.to_string(), "Z2xZ2");
        assert_eq!(z(4).neg(1), 3);
        assert!("Z1".parse::<FiniteAbelianGroup>().is_err());
        assert!("Q2".parse::<FiniteAbelianGroup>().is_err());
    }

    #[test]
    fn flow_lists() {
        assert_eq!(flows(&z(2), 3).unwrap(), vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        assert_eq!(flows(&z(3), 2).unwrap(), vec![vec![0, 0], vec![1, 2], vec![2, 1]]);
        assert_eq!(flows(&z(3), 1).unwrap(), vec![vec![0]]);
        for g in FiniteAbelianGroup::presets() {
            for n in 1..=4 {
                assert_eq!(flows(&g, n).unwrap().len(), g.order().pow(n as u32 - 1));
            }
        }
    }

    #[test]
    fn vertices() {
        let p = polytope_pgn(&z(2), 3).unwrap();
        assert_eq!(
            p.points,
            vec![vec![1, 0, 1, 0, 1, 0], vec![1, 0, 0, 1, 0, 1], vec![0, 1, 1, 0, 0, 1], vec![0, 1, 0, 1, 1, 0]]
        );
        assert_eq!(polytope_pgn(&z(2), 2).unwrap().len(), 2);
        assert_eq!(polytope_pgn(&z(3), 1).unwrap().len(), 1);
    }

    fn example_pair() -> (FlowTable, FlowTable) {
        let g = z(2);
        let t0 = table(&g, &[&[1, 1, 1, 1, 1, 1], &[0, 0, 0, 0, 0, 0], &[1, 1, 0, 0, 0, 0]]);
        let t1 = table(&g, &[&[0, 1, 0, 1, 0, 0], &[1, 0, 1, 0, 0, 0], &[1, 1, 0, 0, 1, 1]]);
        (t0, t1)
    }

    #[test]
    fn compatibility() {
        let (t0, t1) = example_pair();
        assert!(compatible(&t0, &t1).unwrap());
        assert_eq!(t0.image(2), t1.image(2));
        assert!(compatible(&t0, &t0).unwrap());
        let g = z(2);
        let flipped = table(&g, &[&[1, 1, 1, 1, 1, 1], &[0, 0, 0, 0, 0, 0], &[0, 0, 0, 0, 0, 0]]);
        assert!(!compatible(&t0, &flipped).unwrap());
        let short = table(&g, &[&[0, 0, 0, 0, 0, 0]]);
        assert_eq!(compatible(&t0, &short), Err(Error::ShapeMismatch));
        assert!(FlowTable::new(&g, vec![vec![1, 0]]).is_err());
    }

    #[test]
    fn example_path() {
        let g = z(2);
        let (t0, t1) = example_pair();
        let path = move_generate(&g, &t0, &t1, 2).unwrap().unwrap();
        assert_eq!(path.length(), 2);
        for w in path.tables.windows(2) {
            assert!(compatible(&w[0], &w[1]).unwrap());
            assert!(w[0].common_rows(&w[1]) >= 1);
        }
        assert_eq!(move_generate(&g, &t0, &t0, 2).unwrap().unwrap().length(), 0);
        assert_eq!(move_generate(&g, &t0, &t1, 3).unwrap().unwrap().length(), 1);
    }

    #[test]
    fn complexity_z2() {
        assert_eq!(complexity_estimate(&z(2), 4, 3).unwrap().estimate, 2);
        assert!(complexity_estimate(&z(2), 3, 3).unwrap().estimate <= 2);
    }

    #[test]
    fn ideals_match_moves() {
        assert!(phylo_toric_ideal(&z(2), 3).unwrap().ideal.is_zero_ideal());
        assert!(phylo_toric_ideal(&z(2), 2).unwrap().ideal.is_zero_ideal());
        let i = phylo_toric_ideal(&z(2), 4).unwrap();
        assert!(!i.ideal.is_zero_ideal());
        assert!(i.ideal.generators().iter().all(|g| g.total_degree() == 2));
    }

    #[test]
    fn json() {
        let g: FiniteAbelianGroup = serde_json::from_str("\"Z2xZ2\"").unwrap();
        assert_eq!(serde_json::to_string(&g).unwrap(), "\"Z2xZ2\"");
    }
}
