//! Dense symmetric eigenvalues and exact characteristic polynomials.
//!
//! Two independent numeric paths are provided: cyclic-by-row Jacobi
//! ([`jacobi_eigenvalues`]) and Householder tridiagonalization followed by
//! implicit QL ([`tridiagonal_ql_eigenvalues`]). [`eigenvalues_symmetric`]
//! picks Jacobi up to [`SolverOptions::ql_threshold`] and QL above it.
//!
//! For small integer matrices, [`characteristic_polynomial`] is exact and
//! [`polynomial_roots_real`] isolates the real roots with exact sign
//! evaluation.

mod charpoly;
mod jacobi;
mod multiset;
mod roots;
mod tridiagonal;

pub use charpoly::{characteristic_polynomial, IntMatrix, Polynomial, MAX_EXACT_DIMENSION};
pub use jacobi::jacobi_eigenvalues;
pub use multiset::{SpectralValue, SpectrumMultiset};
pub use roots::polynomial_roots_real;
pub use tridiagonal::tridiagonal_ql_eigenvalues;

use crate::{Error, Result};

/// Absolute symmetry tolerance accepted by [`DenseSymMatrix::new`].
pub const SYMMETRY_TOLERANCE: f64 = 1e-12;

/// Square real matrix, row-major, symmetric to within [`SYMMETRY_TOLERANCE`].
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSymMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl DenseSymMatrix {
    pub fn new(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::Shape(format!("expected {} entries, got {}", dim * dim, data.len())));
        }
        for i in 0..dim {
            for j in i + 1..dim {
                let gap = (data[i * dim + j] - data[j * dim + i]).abs();
                if !(gap <= SYMMETRY_TOLERANCE) {
                    return Err(Error::NotSymmetric { row: i, col: j, gap });
                }
            }
        }
        Ok(Self { dim, data })
    }

    /// Caller guarantees symmetry (crate-internal constructors).
    pub(crate) fn new_unchecked(dim: usize, data: Vec<f64>) -> Self {
        debug_assert_eq!(data.len(), dim * dim);
        Self { dim, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Shape("rows must all have length equal to the row count".into()));
        }
        Self::new(dim, rows.concat())
    }

    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![0.0; dim * dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// `P·M·Pᵀ` where `perm[i]` is the source row placed at position `i`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dim);
        let m = self.dim;
        let mut data = vec![0.0; m * m];
        for i in 0..m {
            for j in 0..m {
                data[i * m + j] = self.get(perm[i], perm[j]);
            }
        }
        Self { dim: m, data }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverOptions {
    /// Jacobi stops once the off-diagonal Frobenius norm is below `tol·‖M‖_F`.
    pub tol: f64,
    /// Absolute gap under which sorted eigenvalues share a multiplicity group.
    pub merge_tol: f64,
    pub max_sweeps: usize,
    /// Dimensions above this use tridiagonalization + QL instead of Jacobi.
    pub ql_threshold: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self { tol: 1e-10, merge_tol: 1e-6, max_sweeps: 100, ql_threshold: 2000 }
    }
}

/// All eigenvalues of `matrix`, unsorted, from the path selected by `options`.
pub fn raw_eigenvalues(matrix: &DenseSymMatrix, options: &SolverOptions) -> Result<Vec<f64>> {
    if !(options.tol > 0.0) {
        return Err(Error::Domain(format!("solver tolerance must be positive, got {}", options.tol)));
    }
    if matrix.dim() > options.ql_threshold {
        tridiagonal_ql_eigenvalues(matrix)
    } else {
        jacobi_eigenvalues(matrix, options.tol, options.max_sweeps)
    }
}

pub fn eigenvalues_symmetric(
    matrix: &DenseSymMatrix,
    options: &SolverOptions,
) -> Result<SpectrumMultiset> {
    let values = raw_eigenvalues(matrix, options)?;
    Ok(SpectrumMultiset::from_values(&values, options.merge_tol))
}
