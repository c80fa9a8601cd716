//! Seeded random connected regular graphs from the pairing model.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::VerifyError;
use crate::graph::Graph;

pub const MAX_ATTEMPTS: usize = 100_000;

/// Pairs up `n * d` half-edges uniformly at random and retries until the
/// result is simple and connected. Identical seeds give identical graphs.
pub fn random_connected_regular(n: usize, d: usize, seed: u64) -> Result<Graph, VerifyError> {
    if n * d % 2 == 1 {
        return Err(VerifyError::OddDegreeSum { n, d });
    }
    if n < d + 1 {
        return Err(VerifyError::OrderTooSmall { n, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..n * d).map(|p| p / d.max(1)).collect();
    'attempt: for _ in 0..MAX_ATTEMPTS {
        points.shuffle(&mut rng);
        let mut g = Graph::empty(n);
        for pair in points.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || g.has_edge(u, v) {
                continue 'attempt;
            }
            g.add_edge(u, v);
        }
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(VerifyError::RejectionBudget {
        n,
        d,
        attempts: MAX_ATTEMPTS,
    })
}
