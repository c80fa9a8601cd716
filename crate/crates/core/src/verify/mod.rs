//! Desk-scale verification: generating connected regular graphs, checking
//! every cut-vertex graph against the branch-degree bounds and the sharp
//! threshold, plus edge-expansion and prior-bound comparisons.

mod bounds;
mod cheeger;
mod enumerate;
mod random;
mod report;

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

pub use bounds::{prior_bounds, PriorBound, PriorBoundTable};
pub use cheeger::{cheeger_check, edge_expansion, CheegerReport, CHEEGER_TOL, MAX_CHEEGER_ORDER};
pub use enumerate::{enumerate_connected_regular, MAX_ENUM_ORDER};
pub use random::{random_connected_regular, MAX_ATTEMPTS};
pub use report::{format_eigenvalue, format_sig, write_csv, write_summary_json, CSV_HEADER};

use crate::extremal::{all_specs, build_extremal, extremal_lambda2, threshold, ExtremalError};
use crate::graph::{Graph, GraphError};
use crate::graph6::to_graph6;
use crate::iso::is_isomorphic;
use crate::spectra::{spectrum, SpectraError, EIGEN_EQ_TOL};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error("n * d must be even (n = {n}, d = {d})")]
    OddDegreeSum { n: usize, d: usize },
    #[error("n must be at least d + 1 (n = {n}, d = {d})")]
    OrderTooSmall { n: usize, d: usize },
    #[error("n = {n} exceeds the supported maximum {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("no simple connected pairing found in {attempts} attempts (n = {n}, d = {d})")]
    RejectionBudget { n: usize, d: usize, attempts: usize },
    #[error("no order in [d + 1, {n_max}] admits a {d}-regular graph")]
    NoValidOrder { d: usize, n_max: usize },
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("bounds need n > d + 1 (d = {d}, n = {n})")]
    DegenerateBound { d: usize, n: usize },
    #[error("odd branch degree {branch} at cut vertex {vertex} of an even-degree graph {graph6}")]
    OddBranch { graph6: String, vertex: usize, branch: usize },
    #[error("random mode needs at least one sample")]
    NoSamples,
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Mode {
    Exhaustive,
    /// `samples` graphs; sample `i` draws its order and pairing from a
    /// stream seeded by `seed`.
    Random { samples: usize, seed: u64 },
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Exhaustive => "exhaustive",
            Mode::Random { .. } => "random",
        }
    }
}

/// Where a value sits relative to a reference, with `EIGEN_EQ_TOL` slack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    Below,
    Equal,
    Above,
}

impl Comparison {
    pub fn of(value: f64, reference: f64) -> Self {
        if value < reference - EIGEN_EQ_TOL {
            Comparison::Below
        } else if value > reference + EIGEN_EQ_TOL {
            Comparison::Above
        } else {
            Comparison::Equal
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Comparison::Below => "below",
            Comparison::Equal => "equal",
            Comparison::Above => "above",
        }
    }
}

/// A cut vertex and a branch degree `c <= d - c` seen from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub vertex: usize,
    pub c: usize,
}

/// λ₂ against the extremal value for one branch degree.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BranchCheck {
    pub c: usize,
    pub bound: f64,
    pub cmp: Comparison,
    pub iso_extremal: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub graph6: String,
    pub n: usize,
    pub d: usize,
    pub witnesses: Vec<Witness>,
    pub lambda2: f64,
    /// λ₂ against `threshold(d).value`.
    pub threshold_cmp: Comparison,
    /// Isomorphic to the threshold's extremal graph (some cycle composition).
    pub iso_extremal: bool,
    pub branch_checks: Vec<BranchCheck>,
}

impl VerificationRecord {
    pub fn has_cut_vertex(&self) -> bool {
        !self.witnesses.is_empty()
    }

    pub fn violates_threshold(&self, mode: &Mode) -> bool {
        self.has_cut_vertex()
            && match self.threshold_cmp {
                Comparison::Below => true,
                Comparison::Equal => matches!(mode, Mode::Exhaustive) && !self.iso_extremal,
                Comparison::Above => false,
            }
    }

    pub fn violates_branch_bound(&self, mode: &Mode) -> bool {
        self.branch_checks.iter().any(|l| match l.cmp {
            Comparison::Below => true,
            Comparison::Equal => matches!(mode, Mode::Exhaustive) && !l.iso_extremal,
            Comparison::Above => false,
        })
    }
}

/// Reference values and extremal graphs for one degree.
struct Reference {
    d: usize,
    threshold: f64,
    c_star: usize,
    by_branch: BTreeMap<usize, (f64, Vec<Graph>)>,
}

impl Reference {
    fn new(d: usize) -> Result<Self, VerifyError> {
        let t = threshold(d)?;
        let mut by_branch = BTreeMap::new();
        for c in 1..=d / 2 {
            if d % 2 == 0 && c % 2 == 1 {
                continue;
            }
            let graphs = all_specs(d, c)?
                .iter()
                .map(build_extremal)
                .collect::<Result<Vec<_>, _>>()?;
            by_branch.insert(c, (extremal_lambda2(d, c)?, graphs));
        }
        Ok(Reference {
            d,
            threshold: t.value,
            c_star: t.c_star,
            by_branch,
        })
    }

    fn classify(&self, g: &Graph) -> Result<VerificationRecord, VerifyError> {
        let d = self.d;
        let graph6 = to_graph6(g);
        let mut witnesses = Vec::new();
        for w in g.articulation_points()? {
            for &b in &w.branch_degrees {
                if d % 2 == 0 && b % 2 == 1 {
                    return Err(VerifyError::OddBranch {
                        graph6,
                        vertex: w.vertex,
                        branch: b,
                    });
                }
                witnesses.push(Witness {
                    vertex: w.vertex,
                    c: b.min(d - b),
                });
            }
        }
        witnesses.sort();
        witnesses.dedup();
        let lambda2 = spectrum(g)?.lambda2;
        let iso_any = |graphs: &[Graph]| graphs.iter().any(|h| is_isomorphic(g, h));

        let mut cs: Vec<usize> = witnesses.iter().map(|w| w.c).collect();
        cs.sort_unstable();
        cs.dedup();
        let mut branch_checks = Vec::with_capacity(cs.len());
        for c in cs {
            let (bound, graphs) = &self.by_branch[&c];
            let cmp = Comparison::of(lambda2, *bound);
            branch_checks.push(BranchCheck {
                c,
                bound: *bound,
                cmp,
                iso_extremal: cmp == Comparison::Equal && iso_any(graphs),
            });
        }
        let threshold_cmp = Comparison::of(lambda2, self.threshold);
        let iso_extremal =
            !witnesses.is_empty() && threshold_cmp == Comparison::Equal && iso_any(&self.by_branch[&self.c_star].1);
        Ok(VerificationRecord {
            n: g.order(),
            d,
            graph6,
            witnesses,
            lambda2,
            threshold_cmp,
            iso_extremal,
            branch_checks,
        })
    }
}

fn valid_orders(d: usize, n_max: usize) -> Vec<usize> {
    (d + 1..=n_max).filter(|n| n * d % 2 == 0).collect()
}

/// The graphs a run examines: every class for each admissible order, or
/// the seeded random samples.
pub fn generate(d: usize, n_max: usize, mode: &Mode) -> Result<Vec<Graph>, VerifyError> {
    let orders = valid_orders(d, n_max);
    if orders.is_empty() {
        return Err(VerifyError::NoValidOrder { d, n_max });
    }
    match *mode {
        Mode::Exhaustive => {
            let mut out = Vec::new();
            for n in orders {
                out.extend(enumerate_connected_regular(n, d)?);
            }
            Ok(out)
        }
        Mode::Random { samples, seed } => {
            if samples == 0 {
                return Err(VerifyError::NoSamples);
            }
            let mut master = ChaCha8Rng::seed_from_u64(seed);
            let plan: Vec<(usize, u64)> = (0..samples)
                .map(|_| (orders[master.gen_range(0..orders.len())], master.gen()))
                .collect();
            plan.into_par_iter()
                .map(|(n, s)| random_connected_regular(n, d, s))
                .collect()
        }
    }
}

/// One record per generated graph, sorted by graph6.
pub fn verify_cut_lemmas(d: usize, n_max: usize, mode: &Mode) -> Result<Vec<VerificationRecord>, VerifyError> {
    if d < 3 {
        return Err(ExtremalError::DegreeTooSmall { d, min: 3 }.into());
    }
    let reference = Reference::new(d)?;
    let graphs = generate(d, n_max, mode)?;
    let mut records = graphs
        .par_iter()
        .map(|g| reference.classify(g))
        .collect::<Result<Vec<_>, _>>()?;
    records.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    Ok(records)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub d: usize,
    pub n_max: usize,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub pass: bool,
    pub graphs: usize,
    pub cut_vertex_graphs: usize,
    #[serde(serialize_with = "report::serialize_sig")]
    pub threshold: f64,
    /// graph6 of cut-vertex graphs with λ₂ equal to the threshold.
    pub equality_cases: Vec<String>,
    pub counterexamples: Vec<String>,
    pub branch_bound_counterexamples: Vec<String>,
}

impl TheoremReport {
    pub fn from_records(d: usize, n_max: usize, mode: &Mode, records: &[VerificationRecord]) -> Result<Self, VerifyError> {
        let (samples, seed) = match *mode {
            Mode::Exhaustive => (None, None),
            Mode::Random { samples, seed } => (Some(samples), Some(seed)),
        };
        let pick = |f: &dyn Fn(&VerificationRecord) -> bool| -> Vec<String> {
            records.iter().filter(|r| f(r)).map(|r| r.graph6.clone()).collect()
        };
        let equality_cases = pick(&|r| r.has_cut_vertex() && r.threshold_cmp == Comparison::Equal);
        let counterexamples = pick(&|r| r.violates_threshold(mode));
        let branch_bound_counterexamples = pick(&|r| r.violates_branch_bound(mode));
        Ok(TheoremReport {
            d,
            n_max,
            mode: mode.name(),
            samples,
            seed,
            pass: counterexamples.is_empty() && branch_bound_counterexamples.is_empty(),
            graphs: records.len(),
            cut_vertex_graphs: records.iter().filter(|r| r.has_cut_vertex()).count(),
            threshold: threshold(d)?.value,
            equality_cases,
            counterexamples,
            branch_bound_counterexamples,
        })
    }
}

pub fn verify_theorem(d: usize, n_max: usize, mode: &Mode) -> Result<TheoremReport, VerifyError> {
    let records = verify_cut_lemmas(d, n_max, mode)?;
    TheoremReport::from_records(d, n_max, mode, &records)
}

/// Runs `f` on a dedicated pool of `threads` workers, or on the global pool.
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, VerifyError> {
    match threads {
        None => Ok(f()),
        Some(k) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| VerifyError::ThreadPool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}
