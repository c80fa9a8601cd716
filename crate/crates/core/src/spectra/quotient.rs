use serde::Serialize;

use super::eigen::eigenvalues_symmetric;
use super::matrix::Matrix;
use super::SpectraError;
use crate::graph::{Graph, VertexSet};

/// An ordered partition of `0..n` into non-empty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<VertexSet>,
    block_of: Vec<usize>,
}

impl VertexPartition {
    pub fn new(blocks: Vec<VertexSet>, n: usize) -> Result<Self, SpectraError> {
        let mut block_of = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(SpectraError::InvalidPartition(format!("block {b} is empty")));
            }
            for &v in block.members() {
                if v >= n {
                    return Err(SpectraError::InvalidPartition(format!("vertex {v} out of range")));
                }
                if block_of[v] != usize::MAX {
                    return Err(SpectraError::InvalidPartition(format!("vertex {v} in two blocks")));
                }
                block_of[v] = b;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(SpectraError::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(VertexPartition { blocks, block_of })
    }

    /// Blocks of consecutive labels with the given sizes.
    pub fn contiguous(sizes: &[usize]) -> Result<Self, SpectraError> {
        let mut next = 0;
        let blocks = sizes
            .iter()
            .map(|&s| {
                let b = VertexSet::new(next..next + s);
                next += s;
                b
            })
            .collect();
        VertexPartition::new(blocks, next)
    }

    /// Block `labels[v]` receives vertex `v`; labels must be `0..m` with no gaps.
    pub fn from_labels(labels: &[usize]) -> Result<Self, SpectraError> {
        let m = labels.iter().max().map_or(0, |&x| x + 1);
        let mut blocks = vec![Vec::new(); m];
        for (v, &l) in labels.iter().enumerate() {
            blocks[l].push(v);
        }
        VertexPartition::new(blocks.into_iter().map(VertexSet::new).collect(), labels.len())
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.block_of[v]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(VertexSet::len).collect()
    }

    fn counts(&self, g: &Graph) -> Result<Vec<Vec<usize>>, SpectraError> {
        if g.order() != self.block_of.len() {
            return Err(SpectraError::InvalidPartition(format!(
                "partition covers {} vertices but the graph has {}",
                self.block_of.len(),
                g.order()
            )));
        }
        Ok((0..g.order())
            .map(|v| {
                let mut c = vec![0; self.blocks.len()];
                for u in g.neighbors(v) {
                    c[self.block_of[u]] += 1;
                }
                c
            })
            .collect())
    }
}

/// Mean block-to-block neighbour counts of a partitioned graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuotientMatrix {
    #[serde(serialize_with = "serialize_rows")]
    entries: Matrix,
    block_sizes: Vec<usize>,
}

fn serialize_rows<S: serde::Serializer>(m: &Matrix, s: S) -> Result<S::Ok, S::Error> {
    m.to_rows().serialize(s)
}

impl QuotientMatrix {
    pub fn new(entries: Matrix, block_sizes: Vec<usize>) -> Result<Self, SpectraError> {
        if !entries.is_square() || entries.rows() != block_sizes.len() {
            return Err(SpectraError::NotSquare {
                rows: entries.rows(),
                cols: entries.cols(),
            });
        }
        let m = entries.rows();
        for i in 0..m {
            for j in 0..m {
                if entries[(i, j)] < 0.0 {
                    return Err(SpectraError::NegativeEntry { row: i, col: j });
                }
            }
        }
        Ok(QuotientMatrix { entries, block_sizes })
    }

    pub fn entries(&self) -> &Matrix {
        &self.entries
    }

    pub fn block_sizes(&self) -> &[usize] {
        &self.block_sizes
    }

    /// Eigenvalues, sorted non-increasing.
    ///
    /// A quotient satisfies `n_i b_ij = n_j b_ji` (both count the edges
    /// between blocks i and j), so `D^{1/2} B D^{-1/2}` with `D` the block
    /// sizes is symmetric with entries `sqrt(b_ij b_ji)`.
    pub fn eigenvalues(&self) -> Result<Vec<f64>, SpectraError> {
        let m = self.entries.rows();
        let mut s = Matrix::zeros(m, m);
        for i in 0..m {
            for j in 0..m {
                let (bij, bji) = (self.entries[(i, j)], self.entries[(j, i)]);
                let lhs = self.block_sizes[i] as f64 * bij;
                let rhs = self.block_sizes[j] as f64 * bji;
                if (lhs - rhs).abs() > 1e-9 * lhs.abs().max(rhs.abs()).max(1.0) {
                    return Err(SpectraError::NotSymmetrizable);
                }
                s[(i, j)] = (bij * bji).sqrt();
            }
        }
        eigenvalues_symmetric(&s)
    }
}

/// `entries[i][j]` is the mean, over vertices of block `i`, of the number of
/// neighbours in block `j`.
pub fn quotient(g: &Graph, p: &VertexPartition) -> Result<QuotientMatrix, SpectraError> {
    let counts = p.counts(g)?;
    let m = p.len();
    let mut entries = Matrix::zeros(m, m);
    for (v, c) in counts.iter().enumerate() {
        let b = p.block_of(v);
        for j in 0..m {
            entries[(b, j)] += c[j] as f64;
        }
    }
    let sizes = p.sizes();
    for i in 0..m {
        for j in 0..m {
            entries[(i, j)] /= sizes[i] as f64;
        }
    }
    QuotientMatrix::new(entries, sizes)
}

/// True when every vertex of block `i` has the same number of neighbours in
/// each block `j`.
pub fn is_equitable(g: &Graph, p: &VertexPartition) -> Result<bool, SpectraError> {
    let counts = p.counts(g)?;
    Ok(p.blocks().iter().all(|block| {
        let first = &counts[block.members()[0]];
        block.members().iter().all(|&v| &counts[v] == first)
    }))
}
