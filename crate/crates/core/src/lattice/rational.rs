//! Small exact linear systems over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

pub fn q_vec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut [Vec<Q>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Q>]) -> usize {
    let mut w = m.to_vec();
    rref(&mut w).len()
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    rank(&rows.iter().map(|r| q_vec(r)).collect::<Vec<_>>())
}

/// Some solution of `A x = b` (free variables set to zero), or `None` if inconsistent.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Q::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = aug[i][cols].clone();
    }
    Some(x)
}

/// Basis of the right null space `{x : A x = 0}` over Q.
pub fn nullspace(a: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut w = a.to_vec();
    let pivots = rref(&mut w);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -w[i][f].clone();
            }
            v
        })
        .collect()
}

/// Clears denominators and divides by the content.
pub fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    super::primitive(&ints)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_nullspace() {
        let a = vec![q_vec(&[0, 1]), q_vec(&[2, -1])];
        let x = solve(&a, &q_vec(&[-1, 0])).unwrap();
        assert_eq!(x, vec![Q::new(BigInt::from(-1), BigInt::from(2)), q(-1)]);
        let inconsistent = vec![q_vec(&[1, 1]), q_vec(&[2, 2])];
        assert!(solve(&inconsistent, &q_vec(&[1, 3])).is_none());
        let ns = nullspace(&[q_vec(&[1, 1, 1])], 3);
        assert_eq!(ns.len(), 2);
        assert_eq!(rank_i64(&[vec![1, 2], vec![2, 4]]), 1);
    }
}
