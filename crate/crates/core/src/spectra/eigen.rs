//! Cyclic Jacobi eigensolver for dense symmetric matrices.

use super::matrix::Matrix;
use super::SpectraError;

const MAX_SWEEPS: usize = 100;

/// All eigenvalues of a symmetric matrix, sorted non-increasing.
pub fn eigenvalues_symmetric(m: &Matrix) -> Result<Vec<f64>, SpectraError> {
    if !m.is_square() {
        return Err(SpectraError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let scale = (0..n)
        .flat_map(|i| m.row(i).iter().map(|x| x.abs()))
        .fold(1.0, f64::max);
    let asym = m.asymmetry();
    if asym > 1e-12 * scale {
        return Err(SpectraError::NotSymmetric { asymmetry: asym });
    }
    let mut a = m.clone();
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (a[(i, j)] + a[(j, i)]);
            a[(i, j)] = avg;
            a[(j, i)] = avg;
        }
    }
    jacobi_in_place(&mut a);
    let mut ev: Vec<f64> = (0..n).map(|i| a[(i, i)]).collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    Ok(ev)
}

fn off_diagonal_norm2(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            s += a[(i, j)] * a[(i, j)];
        }
    }
    s
}

fn jacobi_in_place(a: &mut Matrix) {
    let n = a.rows();
    let frob2: f64 = (0..n).map(|i| a.row(i).iter().map(|x| x * x).sum::<f64>()).sum();
    let target = 1e-30 * frob2;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm2(a) <= target {
            return;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                a[(p, p)] -= t * apq;
                a[(q, q)] += t * apq;
                a[(p, q)] = 0.0;
                a[(q, p)] = 0.0;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    let np = c * akp - s * akq;
                    let nq = s * akp + c * akq;
                    a[(k, p)] = np;
                    a[(p, k)] = np;
                    a[(k, q)] = nq;
                    a[(q, k)] = nq;
                }
            }
        }
    }
}

/// Eigenvalues of a real tridiagonal matrix whose paired off-diagonal
/// entries have non-negative products, via the similar symmetric matrix
/// with off-diagonal `sqrt(m[i][i+1] * m[i+1][i])`.
pub fn eigenvalues_tridiagonal(m: &Matrix) -> Result<Vec<f64>, SpectraError> {
    check_tridiagonal(m)?;
    let n = m.rows();
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        s[(i, i)] = m[(i, i)];
        if i + 1 < n {
            let prod = m[(i, i + 1)] * m[(i + 1, i)];
            if prod < 0.0 {
                return Err(SpectraError::NotSymmetrizable);
            }
            s[(i, i + 1)] = prod.sqrt();
            s[(i + 1, i)] = prod.sqrt();
        }
    }
    eigenvalues_symmetric(&s)
}

pub(crate) fn check_tridiagonal(m: &Matrix) -> Result<(), SpectraError> {
    if !m.is_square() {
        return Err(SpectraError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    for i in 0..n {
        for j in 0..n {
            if i.abs_diff(j) > 1 && m[(i, j)] != 0.0 {
                return Err(SpectraError::NotTridiagonal { row: i, col: j });
            }
        }
    }
    Ok(())
}

/// True when the sorted lists agree entrywise within `tol`.
pub fn spectra_match(a: &[f64], b: &[f64], tol: f64) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(|x, y| y.total_cmp(x));
    b.sort_by(|x, y| y.total_cmp(x));
    a.len() == b.len() && a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
}

/// `spectrum` with the entry closest to `value` removed.
pub fn remove_one(spectrum: &[f64], value: f64) -> Vec<f64> {
    let mut out = spectrum.to_vec();
    if let Some(idx) = (0..out.len()).min_by(|&i, &j| (out[i] - value).abs().total_cmp(&(out[j] - value).abs())) {
        out.remove(idx);
    }
    out
}

/// Cauchy interlacing of `inner` (length m, sorted non-increasing) inside
/// `outer` (length n): `outer[i] >= inner[i] >= outer[n - m + i]`.
pub fn interlaces(outer: &[f64], inner: &[f64], tol: f64) -> bool {
    let (n, m) = (outer.len(), inner.len());
    m <= n
        && inner
            .iter()
            .enumerate()
            .all(|(i, &mu)| outer[i] + tol >= mu && mu + tol >= outer[n - m + i])
}

/// Every entry of `inner` occurs in `outer`, multiplicities respected.
pub fn embeds(outer: &[f64], inner: &[f64], tol: f64) -> bool {
    let mut used = vec![false; outer.len()];
    inner.iter().all(|&x| {
        let hit = (0..outer.len())
            .filter(|&i| !used[i] && (outer[i] - x).abs() <= tol)
            .min_by(|&i, &j| (outer[i] - x).abs().total_cmp(&(outer[j] - x).abs()));
        match hit {
            Some(i) => {
                used[i] = true;
                true
            }
            None => false,
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn small_known_spectra() {
        let m = Matrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]]);
        close(&eigenvalues_symmetric(&m).unwrap(), &[1.0, -1.0], 1e-12);
        let k4 = Matrix::from_rows(&[
            [0.0, 1.0, 1.0, 1.0],
            [1.0, 0.0, 1.0, 1.0],
            [1.0, 1.0, 0.0, 1.0],
            [1.0, 1.0, 1.0, 0.0],
        ]);
        close(&eigenvalues_symmetric(&k4).unwrap(), &[3.0, -1.0, -1.0, -1.0], 1e-12);
        let c4 = Matrix::from_rows(&[
            [0.0, 1.0, 0.0, 1.0],
            [1.0, 0.0, 1.0, 0.0],
            [0.0, 1.0, 0.0, 1.0],
            [1.0, 0.0, 1.0, 0.0],
        ]);
        close(&eigenvalues_symmetric(&c4).unwrap(), &[2.0, 0.0, 0.0, -2.0], 1e-12);
        assert!(eigenvalues_symmetric(&Matrix::zeros(0, 0)).unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_input() {
        let m = Matrix::from_rows(&[[0.0, 1.0], [0.5, 0.0]]);
        assert!(matches!(eigenvalues_symmetric(&m), Err(SpectraError::NotSymmetric { .. })));
        let r = Matrix::zeros(2, 3);
        assert!(matches!(eigenvalues_symmetric(&r), Err(SpectraError::NotSquare { .. })));
    }

    #[test]
    fn nonsymmetric_tridiagonal() {
        // [[1,2],[8,1]] has eigenvalues 1 ± 4
        let m = Matrix::from_rows(&[[1.0, 2.0], [8.0, 1.0]]);
        close(&eigenvalues_tridiagonal(&m).unwrap(), &[5.0, -3.0], 1e-12);
        let full = Matrix::from_rows(&[[1.0, 0.0, 1.0], [0.0, 1.0, 0.0], [1.0, 0.0, 1.0]]);
        assert!(matches!(eigenvalues_tridiagonal(&full), Err(SpectraError::NotTridiagonal { .. })));
    }

    #[test]
    fn interlacing_helpers() {
        assert!(interlaces(&[3.0, 1.0, -1.0, -3.0], &[2.0, -2.0], 1e-12));
        assert!(!interlaces(&[3.0, 1.0, -1.0, -3.0], &[3.5, -2.0], 1e-12));
        assert!(embeds(&[3.0, 1.0, 1.0, -1.0], &[1.0, 1.0], 1e-12));
        assert!(!embeds(&[3.0, 1.0, -1.0], &[1.0, 1.0], 1e-12));
        assert_eq!(remove_one(&[3.0, 1.0, -1.0], 3.0), vec![1.0, -1.0]);
    }
}
