use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `(g, x, y)` with `g = gcd(a, b) >= 0` and `a x + b y = g`.
fn egcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let nr = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, nr);
        let ns = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, ns);
        let nt = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, nt);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Replaces rows `(i, j)` of `m` by `(x r_i + y r_j, -b/g r_i + a/g r_j)`.
fn combine_rows(m: &mut IntMatrix, i: usize, j: usize, x: &BigInt, y: &BigInt, p: &BigInt, q: &BigInt) {
    for c in 0..m.ncols() {
        let ri = m[(i, c)].clone();
        let rj = m[(j, c)].clone();
        m[(i, c)] = x * &ri + y * &rj;
        m[(j, c)] = p * &ri + q * &rj;
    }
}

fn combine_cols(m: &mut IntMatrix, i: usize, j: usize, x: &BigInt, y: &BigInt, p: &BigInt, q: &BigInt) {
    for r in 0..m.nrows() {
        let ci = m[(r, i)].clone();
        let cj = m[(r, j)].clone();
        m[(r, i)] = x * &ci + y * &cj;
        m[(r, j)] = p * &ci + q * &cj;
    }
}

fn add_row_multiple(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for c in 0..m.ncols() {
        let v = factor * &m[(source, c)];
        m[(target, c)] += v;
    }
}

fn add_col_multiple(m: &mut IntMatrix, target: usize, source: usize, factor: &BigInt) {
    if factor.is_zero() {
        return;
    }
    for r in 0..m.nrows() {
        let v = factor * &m[(r, source)];
        m[(r, target)] += v;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for c in 0..m.ncols() {
        let v = -m[(i, c)].clone();
        m[(i, c)] = v;
    }
}

fn negate_col(m: &mut IntMatrix, j: usize) {
    for r in 0..m.nrows() {
        let v = -m[(r, j)].clone();
        m[(r, j)] = v;
    }
}

/// Row-style Hermite normal form: returns `(H, U)` with `U` unimodular and `U A = H`.
///
/// Pivots are positive and entries above each pivot lie in `[0, pivot)`.
/// Zero rows collect at the bottom.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h[(i, c)].is_zero() {
                continue;
            }
            let a_rc = h[(r, c)].clone();
            let a_ic = h[(i, c)].clone();
            let (g, x, y) = egcd(&a_rc, &a_ic);
            let p = -(&a_ic / &g);
            let q = &a_rc / &g;
            combine_rows(&mut h, r, i, &x, &y, &p, &q);
            combine_rows(&mut u, r, i, &x, &y, &p, &q);
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        let pivot = h[(r, c)].clone();
        for i in 0..r {
            let f = h[(i, c)].div_floor(&pivot);
            if !f.is_zero() {
                let nf = -f;
                add_row_multiple(&mut h, i, r, &nf);
                add_row_multiple(&mut u, i, r, &nf);
            }
        }
        r += 1;
    }
    (h, u)
}

/// Smith normal form: returns `(S, U, V)` with `U`, `V` unimodular and `U A V = S`,
/// `S` diagonal with nonnegative entries `d_1 | d_2 | ...`.
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = (a.nrows(), a.ncols());
    let mut s = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !s[(i, j)].is_zero()
                    && best.is_none_or(|(bi, bj)| s[(i, j)].abs() < s[(bi, bj)].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let (a_t, a_i) = (s[(t, t)].clone(), s[(i, t)].clone());
                if (&a_i % &a_t).is_zero() {
                    let f = -(&a_i / &a_t);
                    add_row_multiple(&mut s, i, t, &f);
                    add_row_multiple(&mut u, i, t, &f);
                    continue;
                }
                let (g, x, y) = egcd(&a_t, &a_i);
                let p = -(&a_i / &g);
                let q = &a_t / &g;
                combine_rows(&mut s, t, i, &x, &y, &p, &q);
                combine_rows(&mut u, t, i, &x, &y, &p, &q);
                changed = true;
            }
            for j in t + 1..cols {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let (a_t, a_j) = (s[(t, t)].clone(), s[(t, j)].clone());
                if (&a_j % &a_t).is_zero() {
                    let f = -(&a_j / &a_t);
                    add_col_multiple(&mut s, j, t, &f);
                    add_col_multiple(&mut v, j, t, &f);
                    continue;
                }
                let (g, x, y) = egcd(&a_t, &a_j);
                let p = -(&a_j / &g);
                let q = &a_t / &g;
                combine_cols(&mut s, t, j, &x, &y, &p, &q);
                combine_cols(&mut v, t, j, &x, &y, &p, &q);
                changed = true;
            }
            if changed {
                continue;
            }
            // row and column cleared; enforce divisibility of the trailing block
            let pivot = s[(t, t)].clone();
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&s[(i, j)] % &pivot).is_zero());
            match offender {
                Some((i, _)) => {
                    let one = BigInt::one();
                    add_row_multiple(&mut s, t, i, &one);
                    add_row_multiple(&mut u, t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            negate_row(&mut s, t);
            negate_row(&mut u, t);
        }
        t += 1;
    }
    // zero pivots found by the search loop never occur before nonzero ones, so
    // the diagonal already satisfies the divisibility chain
    for i in 0..n {
        if s[(i, i)].is_negative() {
            negate_col(&mut s, i);
            negate_col(&mut v, i);
        }
    }
    (s, u, v)
}
