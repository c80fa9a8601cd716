//! Adjacency spectra, quotient matrices of vertex partitions, the
//! constant-row-sum tridiagonal deflation, and polynomial tools.

mod eigen;
mod matrix;
mod poly;
mod quotient;
mod tridiagonal;

use serde::Serialize;
use thiserror::Error;

pub use eigen::{eigenvalues_symmetric, eigenvalues_tridiagonal, embeds, interlaces, remove_one, spectra_match};
pub use matrix::Matrix;
pub use poly::{char_poly, largest_root, Polynomial, ROOT_SCAN_STEPS};
pub use quotient::{is_equitable, quotient, QuotientMatrix, VertexPartition};
pub use tridiagonal::tridiagonal_reduce;

use crate::graph::Graph;

/// Absolute tolerance at which two eigenvalues are treated as equal.
pub const EIGEN_EQ_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },
    #[error("entry ({row}, {col}) is off the tridiagonal band but non-zero")]
    NotTridiagonal { row: usize, col: usize },
    #[error("entry ({row}, {col}) is negative")]
    NegativeEntry { row: usize, col: usize },
    #[error("row {row} sums to {sum}, expected {expected}")]
    RowSumMismatch { row: usize, sum: f64, expected: f64 },
    #[error("need at least {min} rows, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("matrix is not similar to a symmetric one by diagonal scaling")]
    NotSymmetrizable,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("polynomial is not monic (leading coefficient {leading})")]
    NotMonic { leading: f64 },
    #[error("invalid root bracket [{lo}, {hi}]")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("no sign change in [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },
}

/// Adjacency spectrum of a graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSummary {
    /// Sorted non-increasing.
    pub eigenvalues: Vec<f64>,
    pub lambda2: f64,
    /// `max(|λ₂|, |λ_n|)`.
    pub lambda_abs: f64,
}

pub fn adjacency_matrix(g: &Graph) -> Matrix {
    Matrix::from_rows(&g.adjacency_rows())
}

pub fn spectrum(g: &Graph) -> Result<SpectralSummary, SpectraError> {
    if g.order() < 2 {
        return Err(SpectraError::TooSmall { n: g.order(), min: 2 });
    }
    let eigenvalues = eigenvalues_symmetric(&adjacency_matrix(g))?;
    let lambda2 = eigenvalues[1];
    let lambda_abs = lambda2.abs().max(eigenvalues[eigenvalues.len() - 1].abs());
    Ok(SpectralSummary {
        eigenvalues,
        lambda2,
        lambda_abs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycles_union_complement};

    #[test]
    fn graph_spectra() {
        let s = spectrum(&complete(4).unwrap()).unwrap();
        assert!((s.lambda2 + 1.0).abs() < 1e-12);
        assert!((s.lambda_abs - 1.0).abs() < 1e-12);
        let k33 = spectrum(&cycles_union_complement(&[3, 3]).unwrap()).unwrap();
        for (x, y) in k33.eigenvalues.iter().zip([3.0, 0.0, 0.0, 0.0, 0.0, -3.0]) {
            assert!((x - y).abs() < 1e-12);
        }
        assert!(k33.lambda2.abs() < 1e-12);
        assert!((k33.lambda_abs - 3.0).abs() < 1e-12);
        assert!(matches!(spectrum(&complete(1).unwrap()), Err(SpectraError::TooSmall { .. })));
    }
}
