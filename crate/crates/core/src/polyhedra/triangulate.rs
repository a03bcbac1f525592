//! Placing triangulations of vector configurations and parallelepiped enumeration.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::lattice::rational::{self, Q};
use crate::lattice::{smith_normal_form, IntMatrix};

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// A primitive integer normal to the hyperplane spanned by `vectors`
/// (which must have rank `k - 1` in `Z^k`), oriented positively on `towards`.
pub(crate) fn hyperplane_normal(vectors: &[&[i64]], k: usize, towards: &[i64]) -> Vec<i64> {
    let rows: Vec<Vec<Q>> = vectors.iter().map(|v| rational::q_vec(v)).collect();
    let ns = rational::nullspace(&rows, k);
    debug_assert_eq!(ns.len(), 1, "facet vectors must have corank one");
    let n = crate::lattice::to_i64(&rational::primitive_integer(&ns[0]));
    if dot(&n, towards) < 0 {
        n.iter().map(|x| -x).collect()
    } else {
        n
    }
}

/// Cells and boundary facets of a placing triangulation of the cone spanned
/// by full-rank vectors in `Z^k`.
#[derive(Clone, Debug, Default)]
pub(crate) struct Placing {
    pub cells: Vec<Vec<usize>>,
    /// boundary facets as (sorted vector indices, inner normal)
    pub boundary: Vec<(Vec<usize>, Vec<i64>)>,
}

/// Places the vectors in order. Vectors must span `Q^k`; zero vectors are ignored.
pub(crate) fn placing_triangulation(vectors: &[Vec<i64>], k: usize) -> Placing {
    if k == 0 {
        return Placing { cells: vec![Vec::new()], boundary: Vec::new() };
    }
    // greedy independent start
    let mut start: Vec<usize> = Vec::new();
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        rows.push(v.clone());
        if rational::rank_i64(&rows) == rows.len() {
            start.push(i);
            if start.len() == k {
                break;
            }
        } else {
            rows.pop();
        }
    }
    assert_eq!(start.len(), k, "vectors do not span");
    let mut boundary: Vec<(Vec<usize>, Vec<i64>)> = Vec::new();
    for (pos, &j) in start.iter().enumerate() {
        let facet: Vec<usize> = start.iter().enumerate().filter(|&(p, _)| p != pos).map(|(_, &i)| i).collect();
        let refs: Vec<&[i64]> = facet.iter().map(|&i| vectors[i].as_slice()).collect();
        let normal = hyperplane_normal(&refs, k, &vectors[j]);
        boundary.push((facet, normal));
    }
    let mut cells = vec![{
        let mut c = start.clone();
        c.sort_unstable();
        c
    }];

    for (v, vec_v) in vectors.iter().enumerate() {
        if start.contains(&v) || vec_v.iter().all(|&x| x == 0) {
            continue;
        }
        let (visible, kept): (Vec<_>, Vec<_>) = boundary.into_iter().partition(|(_, n)| dot(n, vec_v) < 0);
        boundary = kept;
        if visible.is_empty() {
            continue;
        }
        let mut fresh: BTreeMap<Vec<usize>, (usize, Vec<i64>)> = BTreeMap::new();
        for (facet, _) in &visible {
            let mut cell = facet.clone();
            cell.push(v);
            cell.sort_unstable();
            cells.push(cell);
            for &r in facet {
                let mut nf: Vec<usize> = facet.iter().copied().filter(|&i| i != r).collect();
                nf.push(v);
                nf.sort_unstable();
                let entry = fresh.entry(nf.clone()).or_insert_with(|| {
                    let refs: Vec<&[i64]> = nf.iter().map(|&i| vectors[i].as_slice()).collect();
                    (0, hyperplane_normal(&refs, k, &vectors[r]))
                });
                entry.0 += 1;
            }
        }
        boundary.extend(fresh.into_iter().filter(|(_, (c, _))| *c == 1).map(|(f, (_, n))| (f, n)));
    }
    Placing { cells, boundary }
}

/// Distinct facet normals of the triangulated cone.
pub(crate) fn facet_normals(placing: &Placing) -> Vec<Vec<i64>> {
    let mut normals: Vec<Vec<i64>> = placing.boundary.iter().map(|(_, n)| n.clone()).collect();
    normals.sort();
    normals.dedup();
    normals
}

pub(crate) fn abs_det(vectors: &[Vec<i64>], k: usize) -> BigInt {
    IntMatrix::from_i64_rows(k, vectors).determinant().abs()
}

/// Nonzero lattice points of the half-open parallelepiped `{Σ λ_i v_i : 0 <= λ_i < 1}`
/// of a simplicial cone with full-rank generators `cell` in `Z^k`.
pub(crate) fn parallelepiped_points(cell: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    let v = IntMatrix::from_i64_rows(k, cell);
    let (d, _, w) = smith_normal_form(&v);
    let diag: Vec<i64> = (0..k).map(|i| d[(i, i)].to_i64().expect("determinant too large")).collect();
    let to_q = |m: &IntMatrix| -> Vec<Vec<Q>> {
        (0..k).map(|i| (0..k).map(|j| Q::from_integer(m[(i, j)].clone())).collect()).collect()
    };
    let w_inv = inverse(&to_q(&w));
    let v_inv = inverse(&to_q(&v));
    let total: i64 = diag.iter().product();
    let mut out = Vec::new();
    let mut y = vec![0i64; k];
    for _ in 0..total {
        // x = y W^{-1}
        let x: Vec<Q> = (0..k).map(|j| (0..k).map(|i| &w_inv[i][j] * Q::from_integer(y[i].into())).sum()).collect();
        // lambda = x V^{-1}, keep fractional parts
        let lambda: Vec<Q> = (0..k).map(|j| (0..k).map(|i| &x[i] * &v_inv[i][j]).sum()).collect();
        let frac: Vec<Q> = lambda.iter().map(|l| l - l.floor()).collect();
        if frac.iter().any(|f| !f.is_zero()) {
            let p: Vec<i64> = (0..k)
                .map(|c| {
                    let s: Q = (0..k).map(|i| &frac[i] * Q::from_integer(cell[i][c].into())).sum();
                    debug_assert!(s.is_integer());
                    s.to_integer().to_i64().expect("coordinate overflow")
                })
                .collect();
            out.push(p);
        }
        // odometer over 0 <= y_i < d_i
        for i in 0..k {
            y[i] += 1;
            if y[i] < diag[i] {
                break;
            }
            y[i] = 0;
        }
    }
    out.sort();
    out.dedup();
    out
}

fn inverse(m: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let k = m.len();
    let mut aug: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { rational::q(1) } else { rational::q(0) }));
            r
        })
        .collect();
    let piv = rational::rref(&mut aug);
    assert_eq!(piv.len(), k, "singular matrix");
    aug.into_iter().map(|r| r[k..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn placing_covers_plane() {
        let vs = vec![vec![1, 0], vec![0, 1], vec![-1, 0], vec![0, -1]];
        let p = placing_triangulation(&vs, 2);
        assert!(p.boundary.is_empty());
        assert_eq!(p.cells.len(), 4);
    }

    #[test]
    fn placing_square_cone() {
        let vs = vec![vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]];
        let p = placing_triangulation(&vs, 3);
        assert_eq!(p.cells.len(), 2);
        assert_eq!(facet_normals(&p).len(), 4);
    }

    #[test]
    fn parallelepiped_of_det_two_cone() {
        let pts = parallelepiped_points(&[vec![1, 0], vec![1, 2]], 2);
        assert_eq!(pts, vec![vec![1, 1]]);
        assert!(parallelepiped_points(&[vec![1, 0], vec![0, 1]], 2).is_empty());
        let pts = parallelepiped_points(&[vec![3]], 1);
        assert_eq!(pts, vec![vec![1], vec![2]]);
    }
}
