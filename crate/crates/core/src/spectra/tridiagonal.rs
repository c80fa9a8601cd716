use super::eigen::check_tridiagonal;
use super::matrix::Matrix;
use super::SpectraError;

const ROW_SUM_TOL: f64 = 1e-9;

/// Deflates the eigenvalue `row_sum` out of a non-negative tridiagonal
/// matrix with constant row sums.
///
/// Writing `a_i`, `b_i`, `c_i` for the diagonal, super- and sub-diagonal of
/// row `i`, the `n x n` result has diagonal `d - b_i - c_{i+1}`,
/// superdiagonal `b_{i+1}` and subdiagonal `c_{i+1}`. Its spectrum is that of
/// `m` with one copy of `d` removed.
pub fn tridiagonal_reduce(m: &Matrix, row_sum: f64) -> Result<Matrix, SpectraError> {
    check_tridiagonal(m)?;
    let size = m.rows();
    if size < 2 {
        return Err(SpectraError::TooSmall { n: size, min: 2 });
    }
    for i in 0..size {
        for j in 0..size {
            if m[(i, j)] < 0.0 {
                return Err(SpectraError::NegativeEntry { row: i, col: j });
            }
        }
    }
    for (row, sum) in m.row_sums().into_iter().enumerate() {
        if (sum - row_sum).abs() > ROW_SUM_TOL * row_sum.abs().max(1.0) {
            return Err(SpectraError::RowSumMismatch {
                row,
                sum,
                expected: row_sum,
            });
        }
    }
    let n = size - 1;
    let sup = |i: usize| m[(i, i + 1)];
    let sub = |i: usize| m[(i, i - 1)];
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        out[(i, i)] = row_sum - sup(i) - sub(i + 1);
        if i + 1 < n {
            out[(i, i + 1)] = sup(i + 1);
            out[(i + 1, i)] = sub(i + 1);
        }
    }
    Ok(out)
}
