//! Integer coordinates on a sublattice of `Z^n`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::lattice::rational::{self, Q};
use crate::lattice::{kernel_lattice, row_lattice_basis, saturate_sublattice, to_big, IntMatrix, LatticeBasis};

/// A lattice `L ⊂ Z^n` together with its HNF basis; points of `L` get
/// coordinates in `Z^rank`.
#[derive(Clone, Debug)]
pub struct Chart {
    ambient: usize,
    basis: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Chart {
    fn from_basis(ambient: usize, basis: LatticeBasis) -> Chart {
        let pivots = basis
            .vectors
            .iter()
            .map(|v| v.iter().position(|x| !x.is_zero()).expect("zero basis vector"))
            .collect();
        Chart { ambient, basis: basis.vectors, pivots }
    }

    /// The lattice generated by `points`.
    pub fn generated(ambient: usize, points: &[Vec<i64>]) -> Chart {
        let m = IntMatrix::from_i64_rows(ambient, points);
        Self::from_basis(ambient, row_lattice_basis(&m))
    }

    /// `span_Q(points) ∩ Z^n`.
    pub fn saturated(ambient: usize, points: &[Vec<i64>]) -> Chart {
        let b = row_lattice_basis(&IntMatrix::from_i64_rows(ambient, points));
        Self::from_basis(ambient, saturate_sublattice(&b).canonical())
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis_i64(&self) -> Vec<Vec<i64>> {
        self.basis.iter().map(|v| crate::lattice::to_i64(v)).collect()
    }

    /// Coordinates of `v` in the chart basis, if `v` lies in the lattice.
    pub fn coords(&self, v: &[i64]) -> Option<Vec<i64>> {
        let mut rest = to_big(v);
        let mut c = Vec::with_capacity(self.rank());
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !(&rest[p] % &b[p]).is_zero() {
                return None;
            }
            let f = &rest[p] / &b[p];
            for (r, x) in rest.iter_mut().zip(b) {
                *r -= &f * x;
            }
            c.push(f.to_i64()?);
        }
        rest.iter().all(Zero::is_zero).then_some(c)
    }

    pub fn lift(&self, c: &[i64]) -> Vec<i64> {
        let mut v = vec![BigInt::zero(); self.ambient];
        for (ci, b) in c.iter().zip(&self.basis) {
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi += bi * *ci;
            }
        }
        crate::lattice::to_i64(&v)
    }

    /// A primitive integer functional `y` on `Z^n`, lying in the span of the
    /// lattice, that restricts to a positive multiple of `f` on the chart.
    pub fn lift_functional(&self, f: &[i64]) -> Vec<i64> {
        let k = self.rank();
        let b: Vec<Vec<Q>> = self.basis.iter().map(|v| v.iter().map(|x| Q::from_integer(x.clone())).collect()).collect();
        let gram: Vec<Vec<Q>> = (0..k)
            .map(|i| (0..k).map(|j| b[i].iter().zip(&b[j]).map(|(x, y)| x * y).sum()).collect())
            .collect();
        let z = rational::solve(&gram, &rational::q_vec(f)).expect("Gram matrix is invertible");
        let y: Vec<Q> = (0..self.ambient).map(|c| (0..k).map(|i| &z[i] * &b[i][c]).sum()).collect();
        crate::lattice::to_i64(&rational::primitive_integer(&y))
    }

    /// Integer basis of the orthogonal complement of the lattice's span.
    pub fn equations(&self) -> Vec<Vec<i64>> {
        if self.basis.is_empty() {
            return (0..self.ambient)
                .map(|i| (0..self.ambient).map(|j| i64::from(i == j)).collect())
                .collect();
        }
        kernel_lattice(&IntMatrix::from_rows(self.ambient, self.basis.clone())).to_i64()
    }
}
