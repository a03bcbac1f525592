//! Exact integer linear algebra.
//!
//! Everything here works over arbitrary-precision integers: Hermite and Smith
//! normal forms with their unimodular transforms, integer kernels, cokernels
//! (finitely generated abelian groups) and saturation of sublattices.

mod normal_form;
pub mod rational;

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use normal_form::{hermite_normal_form, smith_normal_form};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        IntMatrix { rows: n, cols, data }
    }

    pub fn from_i64_rows(cols: usize, rows: &[Vec<i64>]) -> Self {
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<BigInt> {
        self.row(i).to_vec()
    }

    pub fn rows_vec(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row_vec(i)).collect()
    }

    /// Rows converted to `i64`; panics on overflow.
    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_i64().expect("entry exceeds i64")).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut p = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        p[(i, j)] += a * b;
                    }
                }
            }
        }
        p
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                    Some(i) => {
                        m.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = BigInt::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * m[(n - 1, n - 1)].clone()
    }

    pub fn rank(&self) -> usize {
        let (h, _) = hermite_normal_form(self);
        (0..h.rows).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).count()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// A basis of a sublattice of `Z^ambient_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeBasis {
    pub ambient_rank: usize,
    pub vectors: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    pub fn new(ambient_rank: usize, vectors: Vec<Vec<BigInt>>) -> Self {
        debug_assert!(vectors.iter().all(|v| v.len() == ambient_rank));
        LatticeBasis { ambient_rank, vectors }
    }

    pub fn from_i64(ambient_rank: usize, vectors: &[Vec<i64>]) -> Self {
        Self::new(ambient_rank, vectors.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    pub fn as_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.ambient_rank, self.vectors.clone())
    }

    pub fn to_i64(&self) -> Vec<Vec<i64>> {
        self.as_matrix().to_i64_rows()
    }

    /// Canonical basis of the same lattice (nonzero rows of the Hermite normal form).
    pub fn canonical(&self) -> LatticeBasis {
        row_lattice_basis(&self.as_matrix())
    }

    /// Whether both bases generate the same lattice.
    pub fn same_lattice(&self, other: &LatticeBasis) -> bool {
        self.ambient_rank == other.ambient_rank && self.canonical() == other.canonical()
    }

    /// Coefficients expressing `v` in this basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        integer_combination(&self.as_matrix(), v)
    }
}

/// A finitely generated abelian group `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k`, `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroupStructure {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupStructure {
    pub fn free(rank: usize) -> Self {
        AbelianGroupStructure { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

impl fmt::Display for AbelianGroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.free_rank > 0 {
            parts.push(if self.free_rank == 1 { "Z".to_string() } else { format!("Z^{}", self.free_rank) });
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Nonzero rows of the Hermite normal form: a canonical basis of the row lattice.
pub fn row_lattice_basis(a: &IntMatrix) -> LatticeBasis {
    let (h, _) = hermite_normal_form(a);
    let vectors = (0..h.nrows())
        .filter(|&i| h.row(i).iter().any(|x| !x.is_zero()))
        .map(|i| h.row_vec(i))
        .collect();
    LatticeBasis::new(a.ncols(), vectors)
}

/// Basis of `{v in Z^cols : A v = 0}`, canonicalized by HNF.
pub fn kernel_lattice(a: &IntMatrix) -> LatticeBasis {
    let n = a.ncols();
    let (h, u) = hermite_normal_form(&a.transpose());
    let vectors: Vec<Vec<BigInt>> = (0..h.nrows())
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .map(|i| u.row_vec(i))
        .collect();
    if vectors.is_empty() {
        return LatticeBasis::new(n, vectors);
    }
    row_lattice_basis(&IntMatrix::from_rows(n, vectors))
}

/// `Z^rows / A Z^cols`, the quotient of the target by the column span.
pub fn cokernel(a: &IntMatrix) -> AbelianGroupStructure {
    let (s, _, _) = smith_normal_form(a);
    let diag: Vec<BigInt> = (0..a.nrows().min(a.ncols())).map(|i| s[(i, i)].clone()).filter(|d| !d.is_zero()).collect();
    AbelianGroupStructure {
        free_rank: a.nrows() - diag.len(),
        torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// The saturation `(Q B) ∩ Z^n` of the lattice spanned by `b`.
pub fn saturate_sublattice(b: &LatticeBasis) -> LatticeBasis {
    let n = b.ambient_rank;
    if b.vectors.is_empty() {
        return LatticeBasis::new(n, Vec::new());
    }
    let orth = kernel_lattice(&b.as_matrix());
    kernel_lattice(&IntMatrix::from_rows(n, orth.vectors))
}

pub fn is_saturated(b: &LatticeBasis) -> bool {
    saturate_sublattice(b).same_lattice(b)
}

/// Integer coefficients `c` with `Σ c_i row_i = target`, if they exist.
pub fn integer_combination(a: &IntMatrix, target: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.ncols(), target.len());
    let (h, u) = hermite_normal_form(a);
    let mut rest = target.to_vec();
    let mut y = vec![BigInt::zero(); a.nrows()];
    for i in 0..h.nrows() {
        let Some(p) = h.row(i).iter().position(|x| !x.is_zero()) else { break };
        let pivot = &h[(i, p)];
        if (&rest[p] % pivot).is_zero() {
            let q = &rest[p] / pivot;
            for j in 0..h.ncols() {
                rest[j] -= &q * &h[(i, j)];
            }
            y[i] = q;
        } else {
            return None;
        }
    }
    if rest.iter().any(|x| !x.is_zero()) {
        return None;
    }
    // target = y H = y U A
    let mut c = vec![BigInt::zero(); a.nrows()];
    for (i, yi) in y.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        for (k, ck) in c.iter_mut().enumerate() {
            *ck += yi * &u[(i, k)];
        }
    }
    Some(c)
}

/// gcd of the entries (nonnegative); zero for the zero vector.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x))
}

/// Divides out the content; the zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn primitive_i64(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| num_integer::Integer::gcd(&g, &x));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

pub fn to_big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("entry exceeds i64")).collect()
}
