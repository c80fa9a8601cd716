//! Regular graphs with a cut vertex: constructions, spectra and the sharp
//! upper bound on the second largest adjacency eigenvalue.
//!
//! ```
//! use regcut::extremal::threshold;
//!
//! let t = threshold(3).unwrap();
//! assert_eq!(t.c_star, 1);
//! assert!((t.value - 2.7784).abs() < 1e-4);
//! ```

pub mod cli;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod spectra;
pub mod verify;

pub use extremal::{build_extremal, threshold, ExtremalError, ExtremalSpec, ThresholdResult};
pub use graph::{Graph, GraphError};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use iso::{canonical_form, is_isomorphic};
pub use spectra::{spectrum, SpectraError};
pub use verify::VerifyError;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Extremal(#[from] ExtremalError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}
