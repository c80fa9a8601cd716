//! Exhaustive generation of connected regular graphs up to isomorphism.
//!
//! Rows of the adjacency matrix are filled in vertex order. Every class has
//! a labelling in which vertex `j`'s adjacency to `0..j` is
//! lexicographically at least that of any later vertex (pick each next
//! vertex greedily), so the search only produces labellings whose columns
//! stay in that order. Within a run of identical columns the new row's ones
//! must then come first, which is the only branching left. Survivors are
//! deduplicated by canonical form.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::VerifyError;
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::iso::canonical_form;

/// Largest order the single-word row representation supports.
pub const MAX_ENUM_ORDER: usize = 64;
const SHARD_DEPTH: usize = 3;

struct Search {
    n: usize,
    d: usize,
    rows: Vec<u64>,
}

impl Search {
    fn deg(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Fills rows `i..stop`, calling `sink` once per completed prefix.
    fn row(&mut self, i: usize, stop: usize, sink: &mut dyn FnMut(&[u64])) {
        if i == stop || i == self.n {
            sink(&self.rows);
            return;
        }
        let need = self.d - self.deg(i);
        let mask = (1u64 << i) - 1;
        // (first vertex, run length, usable) over candidates i+1..n
        let mut runs: Vec<(usize, usize, usize)> = Vec::new();
        for j in i + 1..self.n {
            match runs.last_mut() {
                Some(run) if self.rows[run.0] & mask == self.rows[j] & mask => run.1 += 1,
                _ => runs.push((j, 1, 0)),
            }
        }
        for run in &mut runs {
            run.2 = if self.deg(run.0) < self.d { run.1 } else { 0 };
        }
        let mut suffix = vec![0; runs.len() + 1];
        for r in (0..runs.len()).rev() {
            suffix[r] = suffix[r + 1] + runs[r].2;
        }
        self.choose(i, &runs, &suffix, 0, need, stop, sink);
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        i: usize,
        runs: &[(usize, usize, usize)],
        suffix: &[usize],
        r: usize,
        need: usize,
        stop: usize,
        sink: &mut dyn FnMut(&[u64]),
    ) {
        if need == 0 {
            self.after_row(i, stop, sink);
            return;
        }
        if r == runs.len() || need > suffix[r] {
            return;
        }
        let (start, _, usable) = runs[r];
        for k in (0..=usable.min(need)).rev() {
            for j in start..start + k {
                self.rows[i] |= 1 << j;
                self.rows[j] |= 1 << i;
            }
            self.choose(i, runs, suffix, r + 1, need - k, stop, sink);
            for j in start..start + k {
                self.rows[i] &= !(1 << j);
                self.rows[j] &= !(1 << i);
            }
        }
    }

    fn after_row(&mut self, i: usize, stop: usize, sink: &mut dyn FnMut(&[u64])) {
        let m = i + 1;
        if m < self.n {
            // columns are ordered, so if m has no earlier neighbour none of
            // the remaining vertices do
            if self.rows[m] & ((1u64 << m) - 1) == 0 {
                return;
            }
            let room = self.n - m - 1;
            let mut total = 0;
            for j in m..self.n {
                let deficit = self.d - self.deg(j);
                if deficit > room {
                    return;
                }
                total += deficit;
            }
            if total % 2 == 1 {
                return;
            }
        }
        self.row(m, stop, sink);
    }
}

fn check_order(n: usize, d: usize) -> Result<(), VerifyError> {
    if n * d % 2 == 1 {
        return Err(VerifyError::OddDegreeSum { n, d });
    }
    if n < d + 1 {
        return Err(VerifyError::OrderTooSmall { n, d });
    }
    Ok(())
}

/// One representative per isomorphism class of connected `d`-regular simple
/// graphs on `n` vertices, in canonical form, sorted by graph6.
pub fn enumerate_connected_regular(n: usize, d: usize) -> Result<Vec<Graph>, VerifyError> {
    check_order(n, d)?;
    if n > MAX_ENUM_ORDER {
        return Err(VerifyError::OrderTooLarge { n, max: MAX_ENUM_ORDER });
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1)]);
    }
    if d == 0 {
        return Ok(Vec::new());
    }
    let mut start = Search {
        n,
        d,
        rows: vec![0; n],
    };
    let mut prefixes = Vec::new();
    start.row(0, SHARD_DEPTH.min(n), &mut |rows| prefixes.push(rows.to_vec()));
    let depth = SHARD_DEPTH.min(n);
    let shards: Vec<BTreeSet<String>> = prefixes
        .into_par_iter()
        .map(|rows| {
            let mut seen = BTreeSet::new();
            let mut search = Search { n, d, rows };
            search.row(depth, n, &mut |rows| {
                seen.insert(to_graph6(&canonical_form(&Graph::from_word_rows(rows))));
            });
            seen
        })
        .collect();
    let mut all = BTreeSet::new();
    for shard in shards {
        all.extend(shard);
    }
    Ok(all
        .into_iter()
        .map(|s| crate::graph6::from_graph6(&s).expect("encoded above"))
        .collect())
}
