//! Monic real polynomials, characteristic polynomials and bracketed
//! largest-root search.

use std::fmt;

use serde::Serialize;

use super::matrix::Matrix;
use super::SpectraError;

/// Subintervals scanned for a sign change before giving up.
pub const ROOT_SCAN_STEPS: usize = 64;
const BISECT_WIDTH: f64 = 1e-12;

/// Coefficients in descending powers; the leading one is exactly 1.
#[derive(Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn monic(coeffs: Vec<f64>) -> Result<Self, SpectraError> {
        match coeffs.first() {
            Some(&lead) if (lead - 1.0).abs() <= 1e-12 => {
                // adding 0.0 turns -0.0 into 0.0
                let mut coeffs: Vec<f64> = coeffs.into_iter().map(|c| c + 0.0).collect();
                coeffs[0] = 1.0;
                Ok(Polynomial { coeffs })
            }
            Some(&lead) => Err(SpectraError::NotMonic { leading: lead }),
            None => Err(SpectraError::NotMonic { leading: 0.0 }),
        }
    }

    /// `(x - r_1)(x - r_2)...`
    pub fn from_roots(roots: &[f64]) -> Self {
        let mut coeffs = vec![1.0];
        for &r in roots {
            let mut next = coeffs.clone();
            next.push(0.0);
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] -= r * c;
            }
            coeffs = next;
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn eval_derivative(&self, x: f64) -> f64 {
        let n = self.degree();
        self.coeffs[..n]
            .iter()
            .enumerate()
            .fold(0.0, |acc, (i, &c)| acc * x + c * (n - i) as f64)
    }

    /// Quotient by `(x - root)`, discarding the remainder.
    pub fn deflate(&self, root: f64) -> Polynomial {
        let mut out = Vec::with_capacity(self.degree());
        let mut acc = 0.0;
        for &c in &self.coeffs[..self.degree()] {
            acc = acc * root + c;
            out.push(acc);
        }
        if out.is_empty() {
            out.push(1.0);
        }
        Polynomial { coeffs: out }
    }

    pub fn max_coeff_diff(&self, other: &Polynomial) -> f64 {
        if self.coeffs.len() != other.coeffs.len() {
            return f64::INFINITY;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial{:?}", self.coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let p = n - i;
            let mag = c.abs();
            let sign = if c < 0.0 { "-" } else { "+" };
            if first {
                if c < 0.0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = p == 0 || mag != 1.0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match p {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{p}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(xI - m)` by the Faddeev-LeVerrier
/// recurrence.
pub fn char_poly(m: &Matrix) -> Result<Polynomial, SpectraError> {
    if !m.is_square() {
        return Err(SpectraError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut coeffs = vec![1.0];
    let mut acc = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul(&acc);
        for i in 0..n {
            next[(i, i)] += coeffs[k - 1];
        }
        let c = -m.mul(&next).trace() / k as f64;
        coeffs.push(c);
        acc = next;
    }
    Ok(Polynomial { coeffs })
}

/// The largest root of `p` in `[lo, hi]`.
///
/// `[lo, hi]` is split into [`ROOT_SCAN_STEPS`] pieces scanned from the top
/// for a sign change; the first bracket found is bisected to width 1e-12 and
/// finished with guarded Newton steps. Roots of even multiplicity, which do
/// not change sign, are not detected.
pub fn largest_root(p: &Polynomial, lo: f64, hi: f64) -> Result<f64, SpectraError> {
    if !lo.is_finite() || !hi.is_finite() || lo >= hi {
        return Err(SpectraError::InvalidBracket { lo, hi });
    }
    let step = (hi - lo) / ROOT_SCAN_STEPS as f64;
    let mut upper = hi;
    let mut f_upper = p.eval(upper);
    if f_upper == 0.0 {
        return Ok(hi);
    }
    for i in 1..=ROOT_SCAN_STEPS {
        let lower = if i == ROOT_SCAN_STEPS { lo } else { hi - step * i as f64 };
        let f_lower = p.eval(lower);
        if f_lower == 0.0 {
            return Ok(lower);
        }
        if (f_lower < 0.0) != (f_upper < 0.0) {
            return Ok(refine_root(p, lower, upper, f_lower));
        }
        upper = lower;
        f_upper = f_lower;
    }
    Err(SpectraError::NoSignChange { lo, hi })
}

fn refine_root(p: &Polynomial, mut a: f64, mut b: f64, mut fa: f64) -> f64 {
    for _ in 0..200 {
        if b - a <= BISECT_WIDTH {
            break;
        }
        let mid = 0.5 * (a + b);
        let fm = p.eval(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    let mut x = 0.5 * (a + b);
    for _ in 0..4 {
        let fx = p.eval(x);
        let dfx = p.eval_derivative(x);
        if dfx == 0.0 {
            break;
        }
        let next = x - fx / dfx;
        if !(a..=b).contains(&next) || p.eval(next).abs() > fx.abs() {
            break;
        }
        x = next;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_examples() {
        let swap = Matrix::from_rows(&[[0.0, 1.0], [1.0, 0.0]]);
        assert_eq!(char_poly(&swap).unwrap().coeffs(), &[1.0, 0.0, -1.0]);
        let id = Matrix::identity(3);
        assert_eq!(char_poly(&id).unwrap().coeffs(), &[1.0, -3.0, 3.0, -1.0]);
        assert_eq!(char_poly(&Matrix::zeros(0, 0)).unwrap().coeffs(), &[1.0]);
    }

    #[test]
    fn root_examples() {
        let p = Polynomial::monic(vec![1.0, 0.0, -4.0]).unwrap();
        assert!((largest_root(&p, 0.0, 3.0).unwrap() - 2.0).abs() < 1e-12);
        let f0 = Polynomial::monic(vec![1.0, 0.0, -7.0, -2.0]).unwrap();
        let r = largest_root(&f0, 2.0, 3.0).unwrap();
        assert!(f0.eval(r).abs() < 1e-10);
        assert!((r - 2.7784).abs() < 1e-4);
    }

    #[test]
    fn largest_of_several_in_bracket() {
        let p = Polynomial::from_roots(&[0.5, 1.5, 2.5]);
        assert!((largest_root(&p, 0.0, 3.0).unwrap() - 2.5).abs() < 1e-11);
        assert!((largest_root(&p, 0.0, 2.0).unwrap() - 1.5).abs() < 1e-11);
    }

    #[test]
    fn root_errors() {
        let p = Polynomial::monic(vec![1.0, 0.0, 1.0]).unwrap();
        assert!(matches!(largest_root(&p, -2.0, 2.0), Err(SpectraError::NoSignChange { .. })));
        assert!(matches!(largest_root(&p, 2.0, 2.0), Err(SpectraError::InvalidBracket { .. })));
        assert!(Polynomial::monic(vec![2.0, 1.0]).is_err());
        assert!(Polynomial::monic(vec![]).is_err());
    }

    #[test]
    fn deflation_and_display() {
        let p = Polynomial::from_roots(&[1.0, 2.0, -3.0]);
        let q = p.deflate(2.0);
        assert!(q.max_coeff_diff(&Polynomial::from_roots(&[1.0, -3.0])) < 1e-12);
        let f = Polynomial::monic(vec![1.0, 0.0, -7.0, -2.0]).unwrap();
        assert_eq!(f.to_string(), "x^3 - 7x - 2");
        assert!((f.eval_derivative(2.0) - 5.0).abs() < 1e-12);
    }
}
