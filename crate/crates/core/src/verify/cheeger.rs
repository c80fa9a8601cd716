//! Exact edge expansion and the spectral sandwich around it.

use serde::Serialize;

use super::VerifyError;
use crate::graph::Graph;
use crate::spectra::spectrum;

/// Largest order for which every vertex subset is examined.
pub const MAX_CHEEGER_ORDER: usize = 20;
pub const CHEEGER_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CheegerReport {
    pub h: f64,
    pub lower: f64,
    pub upper: f64,
    pub pass: bool,
}

/// `min |∂S| / |S|` over non-empty `S` with `|S| <= n/2`, visiting subsets
/// in Gray-code order so each step updates the boundary in O(1) words.
pub fn edge_expansion(g: &Graph) -> Result<f64, VerifyError> {
    let n = g.order();
    if n > MAX_CHEEGER_ORDER {
        return Err(VerifyError::OrderTooLarge {
            n,
            max: MAX_CHEEGER_ORDER,
        });
    }
    if n < 2 {
        return Err(VerifyError::OrderTooSmall { n, d: 0 });
    }
    let nbr: Vec<u32> = (0..n).map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u)).collect();
    let mut set = 0u32;
    let mut boundary: i64 = 0;
    let mut best = f64::INFINITY;
    for step in 1u32..(1 << n) {
        let v = step.trailing_zeros() as usize;
        let inside = (nbr[v] & set).count_ones() as i64;
        let deg = nbr[v].count_ones() as i64;
        if set >> v & 1 == 1 {
            set &= !(1 << v);
            boundary -= deg - 2 * inside;
        } else {
            set |= 1 << v;
            boundary += deg - 2 * inside;
        }
        let size = set.count_ones() as usize;
        if size * 2 <= n {
            best = best.min(boundary as f64 / size as f64);
        }
    }
    Ok(best)
}

/// Checks `(d - λ₂)/2 <= h(G) <= sqrt(2d(d - λ₂))` for a connected
/// `d`-regular graph.
pub fn cheeger_check(g: &Graph) -> Result<CheegerReport, VerifyError> {
    let d = g.regular_degree().ok_or(VerifyError::NotRegular)?;
    if !g.is_connected() {
        return Err(VerifyError::Disconnected);
    }
    let h = edge_expansion(g)?;
    let l2 = spectrum(g)?.lambda2;
    let d = d as f64;
    let lower = (d - l2) / 2.0;
    let upper = (2.0 * d * (d - l2)).max(0.0).sqrt();
    Ok(CheegerReport {
        h,
        lower,
        upper,
        pass: lower <= h + CHEEGER_TOL && h <= upper + CHEEGER_TOL,
    })
}
