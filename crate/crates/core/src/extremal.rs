//! The extremal regular graphs with a cut vertex, their defining
//! polynomials, the quotient matrices behind them, and numerical checks of
//! the monotonicity statements used to compare them.
//!
//! For degree `d` and branch degree `c` (edges from the cut vertex into one
//! side), the graph `G(d, c)` is a sequential join of five or six blocks:
//!
//! | case                         | blocks                                   |
//! |------------------------------|------------------------------------------|
//! | odd d, c = 1 or d - 1        | K2, M̄(d-1), K1, K1, M̄(d-1), K2          |
//! | odd d, odd c in [3, d-2]     | M̄(d+2-c), C̄(c), K1, M̄(d-c), K(c+1)      |
//! | odd d, even c in [2, d-3]    | K(d+1-c), M̄(c), K1, C̄(d-c), M̄(c+2)      |
//! | even d, even c in [2, d-2]   | K(d+1-c), M̄(c), K1, M̄(d-c), K(c+1)      |
//!
//! `M̄(n)` is the complement of a perfect matching and `C̄(k)` the complement
//! of a disjoint union of cycles on `k` vertices (the cycle lengths are the
//! spec's composition).

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{complete, cycles_union_complement, matching_complement, sequential_join, Graph, GraphError};
use crate::spectra::{
    eigenvalues_tridiagonal, largest_root, Matrix, Polynomial, QuotientMatrix, SpectraError, VertexPartition,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExtremalError {
    #[error("d must be at least {min}, got {d}")]
    DegreeTooSmall { d: usize, min: usize },
    #[error("c must satisfy {range}, got c = {c} for d = {d}")]
    BranchOutOfRange { d: usize, c: usize, range: &'static str },
    #[error("c must be even for even d (got d = {d}, c = {c})")]
    OddBranchForEvenDegree { d: usize, c: usize },
    #[error("d must be {expected} for this construction, got {d}")]
    DegreeParity { d: usize, expected: &'static str },
    #[error("this case takes no cycle composition (d = {d}, c = {c})")]
    UnexpectedComposition { d: usize, c: usize },
    #[error("cycle lengths must sum to {expected}, got {got}")]
    CompositionSum { expected: usize, got: usize },
    #[error("every cycle length must be at least 3, got {0}")]
    CycleTooShort(usize),
    #[error("branch parameters violate {0}")]
    BranchParams(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

/// Which row of the construction table a `(d, c)` pair falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalCase {
    CutEdge,
    OddDegreeOddBranch,
    OddDegreeEvenBranch,
    EvenDegree,
}

/// Parameters selecting one extremal graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalSpec {
    d: usize,
    c: usize,
    composition: Vec<usize>,
}

fn classify(d: usize, c: usize) -> Result<ExtremalCase, ExtremalError> {
    if d < 3 {
        return Err(ExtremalError::DegreeTooSmall { d, min: 3 });
    }
    if c < 1 || c > d - 1 {
        return Err(ExtremalError::BranchOutOfRange {
            d,
            c,
            range: "1 <= c <= d - 1",
        });
    }
    Ok(if d % 2 == 0 {
        if c % 2 == 1 {
            return Err(ExtremalError::OddBranchForEvenDegree { d, c });
        }
        ExtremalCase::EvenDegree
    } else if c == 1 || c == d - 1 {
        ExtremalCase::CutEdge
    } else if c % 2 == 1 {
        ExtremalCase::OddDegreeOddBranch
    } else {
        ExtremalCase::OddDegreeEvenBranch
    })
}

impl ExtremalSpec {
    pub fn new(d: usize, c: usize, composition: Vec<usize>) -> Result<Self, ExtremalError> {
        let case = classify(d, c)?;
        let total = match case {
            ExtremalCase::CutEdge | ExtremalCase::EvenDegree => {
                if !composition.is_empty() {
                    return Err(ExtremalError::UnexpectedComposition { d, c });
                }
                return Ok(ExtremalSpec { d, c, composition });
            }
            ExtremalCase::OddDegreeOddBranch => c,
            ExtremalCase::OddDegreeEvenBranch => d - c,
        };
        if let Some(&short) = composition.iter().find(|&&l| l < 3) {
            return Err(ExtremalError::CycleTooShort(short));
        }
        let got = composition.iter().sum();
        if got != total {
            return Err(ExtremalError::CompositionSum { expected: total, got });
        }
        Ok(ExtremalSpec { d, c, composition })
    }

    /// A single cycle whenever a cycle part is needed.
    pub fn with_default_composition(d: usize, c: usize) -> Result<Self, ExtremalError> {
        let composition = match classify(d, c)? {
            ExtremalCase::CutEdge | ExtremalCase::EvenDegree => Vec::new(),
            ExtremalCase::OddDegreeOddBranch => vec![c],
            ExtremalCase::OddDegreeEvenBranch => vec![d - c],
        };
        ExtremalSpec::new(d, c, composition)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn composition(&self) -> &[usize] {
        &self.composition
    }

    pub fn case(&self) -> ExtremalCase {
        classify(self.d, self.c).expect("validated at construction")
    }

    /// Number of vertices in the cycle-complement block, if any.
    pub fn cycle_total(&self) -> Option<usize> {
        match self.case() {
            ExtremalCase::OddDegreeOddBranch => Some(self.c),
            ExtremalCase::OddDegreeEvenBranch => Some(self.d - self.c),
            _ => None,
        }
    }

    fn parts(&self) -> Result<Vec<Graph>, GraphError> {
        let (d, c) = (self.d, self.c);
        Ok(match self.case() {
            ExtremalCase::CutEdge => vec![
                complete(2)?,
                matching_complement(d - 1)?,
                complete(1)?,
                complete(1)?,
                matching_complement(d - 1)?,
                complete(2)?,
            ],
            ExtremalCase::OddDegreeOddBranch => vec![
                matching_complement(d + 2 - c)?,
                cycles_union_complement(&self.composition)?,
                complete(1)?,
                matching_complement(d - c)?,
                complete(c + 1)?,
            ],
            ExtremalCase::OddDegreeEvenBranch => vec![
                complete(d + 1 - c)?,
                matching_complement(c)?,
                complete(1)?,
                cycles_union_complement(&self.composition)?,
                matching_complement(c + 2)?,
            ],
            ExtremalCase::EvenDegree => vec![
                complete(d + 1 - c)?,
                matching_complement(c)?,
                complete(1)?,
                matching_complement(d - c)?,
                complete(c + 1)?,
            ],
        })
    }

    /// Orders of the join blocks, in label order.
    pub fn block_sizes(&self) -> Vec<usize> {
        let (d, c) = (self.d, self.c);
        match self.case() {
            ExtremalCase::CutEdge => vec![2, d - 1, 1, 1, d - 1, 2],
            ExtremalCase::OddDegreeOddBranch => vec![d + 2 - c, c, 1, d - c, c + 1],
            ExtremalCase::OddDegreeEvenBranch => vec![d + 1 - c, c, 1, d - c, c + 2],
            ExtremalCase::EvenDegree => vec![d + 1 - c, c, 1, d - c, c + 1],
        }
    }

    /// Label of the `K1` block vertex that separates the graph.
    pub fn cut_vertex(&self) -> usize {
        let s = self.block_sizes();
        s[0] + s[1]
    }

    pub fn order(&self) -> usize {
        self.block_sizes().iter().sum()
    }
}

/// The extremal graph, labelled block by block in join order.
pub fn build_extremal(spec: &ExtremalSpec) -> Result<Graph, ExtremalError> {
    Ok(sequential_join(&spec.parts()?)?)
}

/// The join blocks as a vertex partition of [`build_extremal`]'s output.
pub fn construction_partition(spec: &ExtremalSpec) -> VertexPartition {
    VertexPartition::contiguous(&spec.block_sizes()).expect("block sizes are positive")
}

/// All multisets of cycle lengths (each at least 3) summing to `total`,
/// each listed in non-increasing order.
pub fn cycle_compositions(total: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (3..=max.min(left)).rev() {
            if left - part == 0 || left - part >= 3 {
                cur.push(part);
                go(left - part, part, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if total >= 3 {
        go(total, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Every valid spec for `(d, c)` across all cycle compositions.
pub fn all_specs(d: usize, c: usize) -> Result<Vec<ExtremalSpec>, ExtremalError> {
    let base = ExtremalSpec::with_default_composition(d, c)?;
    match base.cycle_total() {
        None => Ok(vec![base]),
        Some(total) => cycle_compositions(total)
            .into_iter()
            .map(|comp| ExtremalSpec::new(d, c, comp))
            .collect(),
    }
}

fn poly(coeffs: Vec<f64>) -> Polynomial {
    Polynomial::monic(coeffs).expect("leading coefficient is 1")
}

/// `x³ - (d-3)x² - (3d-2)x - 2`, for odd `d >= 3`.
pub fn f0_poly(d: usize) -> Result<Polynomial, ExtremalError> {
    if d < 3 {
        return Err(ExtremalError::DegreeTooSmall { d, min: 3 });
    }
    if d % 2 == 0 {
        return Err(ExtremalError::DegreeParity { d, expected: "odd" });
    }
    let d = d as f64;
    Ok(poly(vec![1.0, -(d - 3.0), -(3.0 * d - 2.0), -2.0]))
}

/// `x⁴ - (d-4)x³ - (4d-4)x² + (2cd - 2c² - 4d)x + 3c(d-c)`, for even
/// `d >= 4` and even `c` in `[2, d-2]`.
pub fn f1_poly(d: usize, c: usize) -> Result<Polynomial, ExtremalError> {
    check_even_pair(d, c)?;
    let (d, c) = (d as f64, c as f64);
    Ok(poly(vec![
        1.0,
        -(d - 4.0),
        -(4.0 * d - 4.0),
        2.0 * c * d - 2.0 * c * c - 4.0 * d,
        3.0 * c * (d - c),
    ]))
}

/// `x⁴ - (d-5)x³ - (5d-6)x² + (2cd - 2c² - 6d)x + 4c(d-c)`, for odd
/// `d >= 5` and `c` in `[2, d-2]`.
pub fn f2_poly(d: usize, c: usize) -> Result<Polynomial, ExtremalError> {
    check_odd_pair(d, c)?;
    let (d, c) = (d as f64, c as f64);
    Ok(poly(vec![
        1.0,
        -(d - 5.0),
        -(5.0 * d - 6.0),
        2.0 * c * d - 2.0 * c * c - 6.0 * d,
        4.0 * c * (d - c),
    ]))
}

fn check_even_pair(d: usize, c: usize) -> Result<(), ExtremalError> {
    if d < 4 {
        return Err(ExtremalError::DegreeTooSmall { d, min: 4 });
    }
    if d % 2 == 1 {
        return Err(ExtremalError::DegreeParity { d, expected: "even" });
    }
    if c % 2 == 1 {
        return Err(ExtremalError::OddBranchForEvenDegree { d, c });
    }
    if c < 2 || c > d - 2 {
        return Err(ExtremalError::BranchOutOfRange {
            d,
            c,
            range: "2 <= c <= d - 2",
        });
    }
    Ok(())
}

fn check_odd_pair(d: usize, c: usize) -> Result<(), ExtremalError> {
    if d < 5 {
        return Err(ExtremalError::DegreeTooSmall { d, min: 5 });
    }
    if d % 2 == 0 {
        return Err(ExtremalError::DegreeParity { d, expected: "odd" });
    }
    if c < 2 || c > d - 2 {
        return Err(ExtremalError::BranchOutOfRange {
            d,
            c,
            range: "2 <= c <= d - 2",
        });
    }
    Ok(())
}

/// The polynomial whose largest root is λ₂ of `G(d, c)`.
pub fn extremal_poly(d: usize, c: usize) -> Result<Polynomial, ExtremalError> {
    match classify(d, c)? {
        ExtremalCase::CutEdge => f0_poly(d),
        ExtremalCase::EvenDegree => f1_poly(d, c),
        ExtremalCase::OddDegreeOddBranch | ExtremalCase::OddDegreeEvenBranch => f2_poly(d, c),
    }
}

/// λ₂ of `G(d, c)` as the largest root of [`extremal_poly`] in `[d-1, d]`.
pub fn extremal_lambda2(d: usize, c: usize) -> Result<f64, ExtremalError> {
    let p = extremal_poly(d, c)?;
    Ok(largest_root(&p, d as f64 - 1.0, d as f64)?)
}

/// The sharp λ₂ threshold for degree `d`.
#[derive(Debug, Clone, Serialize)]
pub struct ThresholdResult {
    pub d: usize,
    pub c_star: usize,
    pub value: f64,
    pub poly: Polynomial,
    #[serde(skip)]
    pub extremal_graph: Graph,
}

/// Branch degree of the extremal graph with the smallest λ₂ among all
/// connected `d`-regular graphs with a cut vertex.
pub fn optimal_branch(d: usize) -> Result<usize, ExtremalError> {
    if d < 3 {
        return Err(ExtremalError::DegreeTooSmall { d, min: 3 });
    }
    Ok(if d == 3 {
        1
    } else if d % 2 == 0 {
        2 * (d / 4)
    } else {
        (d - 1) / 2
    })
}

pub fn threshold(d: usize) -> Result<ThresholdResult, ExtremalError> {
    let c_star = optimal_branch(d)?;
    let poly = extremal_poly(d, c_star)?;
    let value = largest_root(&poly, d as f64 - 1.0, d as f64)?;
    let extremal_graph = build_extremal(&ExtremalSpec::with_default_composition(d, c_star)?)?;
    Ok(ThresholdResult {
        d,
        c_star,
        value,
        poly,
        extremal_graph,
    })
}

fn quotient_from(rows: &[[f64; 5]], sizes: Vec<usize>) -> QuotientMatrix {
    QuotientMatrix::new(Matrix::from_rows(rows), sizes).expect("entries are non-negative")
}

/// Quotient of the even-degree extremal graph over its five join blocks.
pub fn quotient_b1(d: usize, c: usize) -> Result<QuotientMatrix, ExtremalError> {
    check_even_pair(d, c)?;
    let (df, cf) = (d as f64, c as f64);
    Ok(quotient_from(
        &[
            [df - cf, cf, 0.0, 0.0, 0.0],
            [df + 1.0 - cf, cf - 2.0, 1.0, 0.0, 0.0],
            [0.0, cf, 0.0, df - cf, 0.0],
            [0.0, 0.0, 1.0, df - cf - 2.0, cf + 1.0],
            [0.0, 0.0, 0.0, df - cf, cf],
        ],
        vec![d + 1 - c, c, 1, d - c, c + 1],
    ))
}

/// Quotient of the odd-degree, odd-branch extremal graph over its five join
/// blocks. Defined for odd `c` in `[3, d-2]`; for even `c` the same graph
/// is reached through `d - c`.
pub fn quotient_b2(d: usize, c: usize) -> Result<QuotientMatrix, ExtremalError> {
    check_odd_pair(d, c)?;
    if c % 2 == 0 {
        return Err(ExtremalError::BranchOutOfRange {
            d,
            c,
            range: "odd c in [3, d - 2] (use d - c for even c)",
        });
    }
    let (df, cf) = (d as f64, c as f64);
    Ok(quotient_from(
        &[
            [df - cf, cf, 0.0, 0.0, 0.0],
            [df + 2.0 - cf, cf - 3.0, 1.0, 0.0, 0.0],
            [0.0, cf, 0.0, df - cf, 0.0],
            [0.0, 0.0, 1.0, df - cf - 2.0, cf + 1.0],
            [0.0, 0.0, 0.0, df - cf, cf],
        ],
        vec![d + 2 - c, c, 1, d - c, c + 1],
    ))
}

/// The 4x4 reduction of [`quotient_b1`], written out directly.
pub fn reduced_b1(d: usize, c: usize) -> Result<Matrix, ExtremalError> {
    check_even_pair(d, c)?;
    let (d, c) = (d as f64, c as f64);
    Ok(Matrix::from_rows(&[
        [-1.0, 1.0, 0.0, 0.0],
        [d + 1.0 - c, d - c - 1.0, d - c, 0.0],
        [0.0, c, c - 1.0, c + 1.0],
        [0.0, 0.0, 1.0, -1.0],
    ]))
}

/// The 4x4 reduction of [`quotient_b2`], written out directly. Unlike `B2`
/// itself this matrix is non-negative off the diagonal for every `c` in
/// `[2, d-2]`.
pub fn reduced_b2(d: usize, c: usize) -> Result<Matrix, ExtremalError> {
    check_odd_pair(d, c)?;
    let (d, c) = (d as f64, c as f64);
    Ok(Matrix::from_rows(&[
        [-2.0, 1.0, 0.0, 0.0],
        [d + 2.0 - c, d - c - 1.0, d - c, 0.0],
        [0.0, c, c - 1.0, c + 1.0],
        [0.0, 0.0, 1.0, -1.0],
    ]))
}

/// Sizes and cross-edge counts around a cut vertex `u` with branch degree
/// `c`: `p` vertices of the first side are not adjacent to `u` and send `r`
/// edges to u's `c` neighbours on that side; `q` and `t` likewise on the
/// other side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchParams {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub t: usize,
}

impl BranchParams {
    pub fn new(d: usize, c: usize, p: usize, q: usize, r: usize, t: usize) -> Result<Self, ExtremalError> {
        check_branch_pair(d, c)?;
        let bad = |what: String| Err(ExtremalError::BranchParams(what));
        if p < d + 1 - c {
            return bad(format!("p >= d + 1 - c (p = {p})"));
        }
        if q < c + 1 {
            return bad(format!("q >= c + 1 (q = {q})"));
        }
        if r < 1 || r > (c * p).min(c * (d - 1)) {
            return bad(format!("1 <= r <= min(cp, c(d-1)) (r = {r})"));
        }
        if t < 1 || t > ((d - c) * q).min((d - c) * (d - 1)) {
            return bad(format!("1 <= t <= min((d-c)q, (d-c)(d-1)) (t = {t})"));
        }
        Ok(BranchParams { p, q, r, t })
    }

    /// The saturated choice `r = cp`, `t = (d-c)q`.
    pub fn saturated(d: usize, c: usize, p: usize, q: usize) -> Result<Self, ExtremalError> {
        BranchParams::new(d, c, p, q, c * p, (d - c) * q)
    }
}

fn check_branch_pair(d: usize, c: usize) -> Result<(), ExtremalError> {
    if d < 3 {
        return Err(ExtremalError::DegreeTooSmall { d, min: 3 });
    }
    if c < 1 || c > d - 1 {
        return Err(ExtremalError::BranchOutOfRange {
            d,
            c,
            range: "1 <= c <= d - 1",
        });
    }
    Ok(())
}

/// Quotient over the five blocks (far side 1, neighbours on side 1, the cut
/// vertex, neighbours on side 2, far side 2).
pub fn quotient_b3(d: usize, c: usize, bp: &BranchParams) -> Result<QuotientMatrix, ExtremalError> {
    let bp = BranchParams::new(d, c, bp.p, bp.q, bp.r, bp.t)?;
    let (d_, c_) = (d as f64, c as f64);
    let (p, q, r, t) = (bp.p as f64, bp.q as f64, bp.r as f64, bp.t as f64);
    let e = d_ - c_;
    Ok(quotient_from(
        &[
            [d_ - r / p, r / p, 0.0, 0.0, 0.0],
            [r / c_, d_ - 1.0 - r / c_, 1.0, 0.0, 0.0],
            [0.0, c_, 0.0, e, 0.0],
            [0.0, 0.0, 1.0, d_ - 1.0 - t / e, t / e],
            [0.0, 0.0, 0.0, t / q, d_ - t / q],
        ],
        vec![bp.p, c, 1, d - c, bp.q],
    ))
}

/// The 4x4 reduction of [`quotient_b3`], written out directly.
pub fn reduced_b3(d: usize, c: usize, bp: &BranchParams) -> Result<Matrix, ExtremalError> {
    let bp = BranchParams::new(d, c, bp.p, bp.q, bp.r, bp.t)?;
    let (d, c) = (d as f64, c as f64);
    let (p, q, r, t) = (bp.p as f64, bp.q as f64, bp.r as f64, bp.t as f64);
    let e = d - c;
    Ok(Matrix::from_rows(&[
        [d - r / p - r / c, 1.0, 0.0, 0.0],
        [r / c, d - c - 1.0, e, 0.0],
        [0.0, c, c - 1.0, t / e],
        [0.0, 0.0, 1.0, d - t / e - t / q],
    ]))
}

/// [`reduced_b3`] at the saturated counts `r = cp`, `t = (d-c)q`.
pub fn matrix_d(d: usize, c: usize, p: usize, q: usize) -> Result<Matrix, ExtremalError> {
    check_branch_pair(d, c)?;
    if p < d + 1 - c || q < c + 1 {
        return Err(ExtremalError::BranchParams(format!(
            "p >= d + 1 - c and q >= c + 1 (p = {p}, q = {q})"
        )));
    }
    let (d, c, p, q) = (d as f64, c as f64, p as f64, q as f64);
    Ok(Matrix::from_rows(&[
        [d - c - p, 1.0, 0.0, 0.0],
        [p, d - c - 1.0, d - c, 0.0],
        [0.0, c, c - 1.0, q],
        [0.0, 0.0, 1.0, c - q],
    ]))
}

/// Largest eigenvalue of a tridiagonal matrix with non-negative
/// off-diagonal products.
pub fn top_eigenvalue(m: &Matrix) -> Result<f64, ExtremalError> {
    Ok(eigenvalues_tridiagonal(m)?[0])
}

/// Branch degrees `c` below the symmetric midpoint, paired with λ₂ of
/// `G(d, c)`. Even `d` uses `c = 2, 4, ..., 2⌊d/4⌋`; odd `d` uses
/// `c = 1, ..., (d-1)/2`.
pub fn monotonicity_chain(d: usize) -> Result<Vec<(usize, f64)>, ExtremalError> {
    if d < 3 {
        return Err(ExtremalError::DegreeTooSmall { d, min: 3 });
    }
    let cs: Vec<usize> = if d % 2 == 0 {
        (1..=d / 4).map(|k| 2 * k).collect()
    } else {
        (1..=(d - 1) / 2).collect()
    };
    cs.into_iter().map(|c| Ok((c, extremal_lambda2(d, c)?))).collect()
}

/// Ranges swept by [`fact_sweeps_on`]. `r` and `t` are additionally clipped
/// to their admissible bounds at each `(p, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepGrid {
    pub p: (usize, usize),
    pub q: (usize, usize),
    pub r: (usize, usize),
    pub t: (usize, usize),
}

impl SweepGrid {
    /// `p` in `[d+1-c, 2d]`, `q` in `[c+1, 2d]`, `r` and `t` over every
    /// admissible count.
    pub fn admissible(d: usize, c: usize) -> Self {
        SweepGrid {
            p: (d + 1 - c, 2 * d),
            q: (c + 1, 2 * d),
            r: (1, usize::MAX),
            t: (1, usize::MAX),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactKind {
    /// λ₁ of the reduced B3 must strictly decrease as `r` grows.
    ReducedB3InR,
    /// ... and as `t` grows.
    ReducedB3InT,
    /// λ₁ of D must strictly increase as `p` grows.
    DInP,
    /// ... and as `q` grows.
    DInQ,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactViolation {
    pub kind: FactKind,
    pub params: BranchParams,
    pub before: f64,
    pub after: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactSweepReport {
    pub d: usize,
    pub c: usize,
    pub comparisons: usize,
    pub violations: Vec<FactViolation>,
}

impl FactSweepReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Minimum gap accepted as a strict change between neighbouring grid points.
pub const FACT_STRICT_TOL: f64 = 1e-10;

pub fn fact_sweeps(d: usize, c: usize) -> Result<FactSweepReport, ExtremalError> {
    fact_sweeps_on(d, c, &SweepGrid::admissible(d, c))
}

pub fn fact_sweeps_on(d: usize, c: usize, grid: &SweepGrid) -> Result<FactSweepReport, ExtremalError> {
    check_branch_pair(d, c)?;
    let p_lo = grid.p.0.max(d + 1 - c);
    let q_lo = grid.q.0.max(c + 1);
    let ps: Vec<usize> = (p_lo..=grid.p.1).collect();
    let qs: Vec<usize> = (q_lo..=grid.q.1).collect();
    let r_range = |p: usize| (grid.r.0.max(1), grid.r.1.min((c * p).min(c * (d - 1))));
    let t_range = |q: usize| (grid.t.0.max(1), grid.t.1.min(((d - c) * q).min((d - c) * (d - 1))));

    let pq: Vec<(usize, usize)> = ps.iter().flat_map(|&p| qs.iter().map(move |&q| (p, q))).collect();
    // r and t sweeps for each (p, q), in grid order.
    let fact1: Vec<Result<(usize, Vec<FactViolation>), ExtremalError>> = pq
        .par_iter()
        .map(|&(p, q)| {
            let (r0, r1) = r_range(p);
            let (t0, t1) = t_range(q);
            if r0 > r1 || t0 > t1 {
                return Ok((0, Vec::new()));
            }
            let width = t1 - t0 + 1;
            let mut top = vec![0.0; (r1 - r0 + 1) * width];
            for r in r0..=r1 {
                for t in t0..=t1 {
                    let bp = BranchParams { p, q, r, t };
                    top[(r - r0) * width + (t - t0)] = top_eigenvalue(&reduced_b3(d, c, &bp)?)?;
                }
            }
            let at = |r: usize, t: usize| top[(r - r0) * width + (t - t0)];
            let mut comparisons = 0;
            let mut violations = Vec::new();
            for r in r0..=r1 {
                for t in t0..=t1 {
                    if r < r1 {
                        comparisons += 1;
                        if at(r + 1, t) > at(r, t) - FACT_STRICT_TOL {
                            violations.push(FactViolation {
                                kind: FactKind::ReducedB3InR,
                                params: BranchParams { p, q, r, t },
                                before: at(r, t),
                                after: at(r + 1, t),
                            });
                        }
                    }
                    if t < t1 {
                        comparisons += 1;
                        if at(r, t + 1) > at(r, t) - FACT_STRICT_TOL {
                            violations.push(FactViolation {
                                kind: FactKind::ReducedB3InT,
                                params: BranchParams { p, q, r, t },
                                before: at(r, t),
                                after: at(r, t + 1),
                            });
                        }
                    }
                }
            }
            Ok((comparisons, violations))
        })
        .collect();

    let mut comparisons = 0;
    let mut violations = Vec::new();
    for item in fact1 {
        let (n, v) = item?;
        comparisons += n;
        violations.extend(v);
    }

    let mut d_top = vec![0.0; ps.len() * qs.len()];
    for (i, &p) in ps.iter().enumerate() {
        for (j, &q) in qs.iter().enumerate() {
            d_top[i * qs.len() + j] = top_eigenvalue(&matrix_d(d, c, p, q)?)?;
        }
    }
    let at = |i: usize, j: usize| d_top[i * qs.len() + j];
    for i in 0..ps.len() {
        for j in 0..qs.len() {
            let params = BranchParams {
                p: ps[i],
                q: qs[j],
                r: c * ps[i],
                t: (d - c) * qs[j],
            };
            if i + 1 < ps.len() {
                comparisons += 1;
                if at(i + 1, j) < at(i, j) + FACT_STRICT_TOL {
                    violations.push(FactViolation {
                        kind: FactKind::DInP,
                        params,
                        before: at(i, j),
                        after: at(i + 1, j),
                    });
                }
            }
            if j + 1 < qs.len() {
                comparisons += 1;
                if at(i, j + 1) < at(i, j) + FACT_STRICT_TOL {
                    violations.push(FactViolation {
                        kind: FactKind::DInQ,
                        params,
                        before: at(i, j),
                        after: at(i, j + 1),
                    });
                }
            }
        }
    }
    Ok(FactSweepReport {
        d,
        c,
        comparisons,
        violations,
    })
}
