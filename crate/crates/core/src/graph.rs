//! Simple undirected graphs stored as packed adjacency bit rows, the
//! building blocks used by the extremal constructions, and the structural
//! queries (connectivity, cut vertices, edge counts between vertex sets).

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{what} requires {requirement}, got n = {n}")]
    InvalidOrder {
        what: &'static str,
        requirement: &'static str,
        n: usize,
    },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("sequential join of an empty list")]
    EmptyJoin,
    #[error("edge list: {0}")]
    EdgeList(String),
}

const WORD: usize = 64;

/// A simple undirected graph on vertices `0..n`.
///
/// Each vertex owns a row of `u64` words; bit `j` of row `i` is set iff
/// `{i, j}` is an edge. Rows are kept symmetric and loop-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD).max(1);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Graph on `rows.len() <= 64` vertices from single-word bit rows.
    /// Callers guarantee the rows are symmetric and loop-free.
    pub(crate) fn from_word_rows(rows: &[u64]) -> Self {
        debug_assert!(rows.len() <= WORD);
        Graph {
            n: rows.len(),
            words: 1,
            rows: rows.to_vec(),
        }
    }

    /// Inserts `{u, v}`. Callers guarantee `u != v` and both are in range.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD + b)
                }
            })
        })
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn adjacency_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| if self.has_edge(u, v) { 1.0 } else { 0.0 }).collect())
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal the order");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// `Some(d)` when every vertex has degree `d`. The empty graph is 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degs = (0..self.n).map(|v| self.degree(v));
        match degs.next() {
            None => Some(0),
            Some(d) => degs.all(|x| x == d).then_some(d),
        }
    }

    pub fn is_regular(&self) -> bool {
        self.regular_degree().is_some()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components_avoiding(None).len() == 1
    }

    /// Connected components of `G - skip` (or `G` when `skip` is `None`),
    /// each sorted, listed by smallest member.
    pub fn components_avoiding(&self, skip: Option<usize>) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        if let Some(s) = skip {
            seen[s] = true;
        }
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(x) = queue.pop_front() {
                members.push(x);
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(VertexSet::from_sorted(members));
        }
        out
    }

    /// Number of edges with one end in `s` and the other in `t`. An edge
    /// with both ends in `s ∩ t` is counted once.
    pub fn edges_between(&self, s: &VertexSet, t: &VertexSet) -> usize {
        let mut in_s = vec![false; self.n];
        let mut in_t = vec![false; self.n];
        for &v in s.members().iter().filter(|&&v| v < self.n) {
            in_s[v] = true;
        }
        for &v in t.members().iter().filter(|&&v| v < self.n) {
            in_t[v] = true;
        }
        self.edges()
            .filter(|&(u, v)| (in_s[u] && in_t[v]) || (in_s[v] && in_t[u]))
            .count()
    }

    /// Every cut vertex together with the components it separates and the
    /// number of edges it sends into each of them.
    pub fn articulation_points(&self) -> Result<Vec<CutVertexWitness>, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.n <= 2 {
            return Ok(Vec::new());
        }
        let cut = self.cut_vertex_flags();
        Ok((0..self.n)
            .filter(|&u| cut[u])
            .map(|u| {
                let components = self.components_avoiding(Some(u));
                let branch_degrees = components
                    .iter()
                    .map(|c| c.members().iter().filter(|&&v| self.has_edge(u, v)).count())
                    .collect();
                CutVertexWitness {
                    vertex: u,
                    components,
                    branch_degrees,
                }
            })
            .collect())
    }

    /// Iterative low-link search from vertex 0.
    fn cut_vertex_flags(&self) -> Vec<bool> {
        const UNSEEN: usize = usize::MAX;
        let nbrs: Vec<Vec<usize>> = (0..self.n).map(|v| self.neighbors(v).collect()).collect();
        let mut disc = vec![UNSEEN; self.n];
        let mut low = vec![0; self.n];
        let mut cut = vec![false; self.n];
        let mut timer = 0;
        // (vertex, parent, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        let mut root_children = 0;
        disc[0] = timer;
        low[0] = timer;
        timer += 1;
        stack.push((0, UNSEEN, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent, idx) = *top;
            if idx < nbrs[v].len() {
                top.2 += 1;
                let w = nbrs[v][idx];
                if disc[w] == UNSEEN {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == 0 {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != UNSEEN {
                    low[parent] = low[parent].min(low[v]);
                    if parent != 0 && low[v] >= disc[parent] {
                        cut[parent] = true;
                    }
                }
            }
        }
        cut[0] = root_children > 1;
        cut
    }

    /// Text form: a `n=<count>` header followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("n={}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| GraphError::EdgeList("missing n=<count> header".into()))?;
        let n: usize = header
            .strip_prefix("n=")
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| GraphError::EdgeList(format!("bad header {header:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
                _ => return Err(GraphError::EdgeList(format!("bad edge line {line:?}"))),
            }
        }
        Graph::from_edges(n, edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// A sorted, duplicate-free set of vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    fn from_sorted(v: Vec<usize>) -> Self {
        VertexSet(v)
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// A cut vertex `vertex`, the components of `G - vertex`, and for each
/// component the number of edges from `vertex` into it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutVertexWitness {
    pub vertex: usize,
    pub components: Vec<VertexSet>,
    pub branch_degrees: Vec<usize>,
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidOrder {
            what: "complete graph",
            requirement: "n >= 1",
            n,
        });
    }
    Ok(Graph::empty(n).complement())
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidOrder {
            what: "cycle",
            requirement: "n >= 3",
            n,
        });
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complement of the perfect matching `{0,1}, {2,3}, ...` on `n` vertices.
pub fn matching_complement(n: usize) -> Result<Graph, GraphError> {
    if n < 2 || n % 2 == 1 {
        return Err(GraphError::InvalidOrder {
            what: "matching complement",
            requirement: "even n >= 2",
            n,
        });
    }
    Ok(Graph::from_edges(n, (0..n / 2).map(|i| (2 * i, 2 * i + 1)))?.complement())
}

/// Complement of the disjoint union of cycles with the given lengths.
pub fn cycles_union_complement(lengths: &[usize]) -> Result<Graph, GraphError> {
    if lengths.is_empty() {
        return Err(GraphError::InvalidOrder {
            what: "cycle union",
            requirement: "at least one cycle",
            n: 0,
        });
    }
    let cycles = lengths.iter().map(|&l| cycle(l)).collect::<Result<Vec<_>, _>>()?;
    Ok(disjoint_union(&cycles).complement())
}

pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::order).sum();
    let mut g = Graph::empty(n);
    let mut offset = 0;
    for p in parts {
        for (u, v) in p.edges() {
            g.add_edge(offset + u, offset + v);
        }
        offset += p.order();
    }
    g
}

/// `G_1 ∨ G_2 ∨ ... ∨ G_k`: disjoint union plus every edge between
/// consecutive parts. Part `i` occupies a contiguous label range following
/// part `i - 1`.
pub fn sequential_join(parts: &[Graph]) -> Result<Graph, GraphError> {
    if parts.is_empty() {
        return Err(GraphError::EmptyJoin);
    }
    let mut g = disjoint_union(parts);
    let mut offsets = Vec::with_capacity(parts.len() + 1);
    let mut acc = 0;
    for p in parts {
        offsets.push(acc);
        acc += p.order();
    }
    offsets.push(acc);
    for i in 1..parts.len() {
        for u in offsets[i - 1]..offsets[i] {
            for v in offsets[i]..offsets[i + 1] {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn building_blocks() {
        assert_eq!(complete(1).unwrap().edge_count(), 0);
        let k3 = complete(3).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.regular_degree(), Some(2));
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert!(complete(0).is_err());

        assert_eq!(cycle(3).unwrap(), k3);
        assert!(cycle(2).is_err());

        assert_eq!(matching_complement(2).unwrap().edge_count(), 0);
        let m4 = matching_complement(4).unwrap();
        assert_eq!(m4.regular_degree(), Some(2));
        assert!(m4.is_connected());
        assert!(matching_complement(3).is_err());

        assert_eq!(cycles_union_complement(&[3]).unwrap().edge_count(), 0);
        let k33 = cycles_union_complement(&[3, 3]).unwrap();
        assert_eq!(k33.regular_degree(), Some(3));
        for u in 0..3 {
            for v in 3..6 {
                assert!(k33.has_edge(u, v));
            }
        }
        let two_edges = cycles_union_complement(&[4]).unwrap();
        assert_eq!(two_edges.edge_count(), 2);
        assert_eq!(two_edges.regular_degree(), Some(1));
        assert!(cycles_union_complement(&[2, 3]).is_err());
    }

    #[test]
    fn joins() {
        let k1 = complete(1).unwrap();
        let e = sequential_join(&[k1.clone(), k1.clone()]).unwrap();
        assert_eq!(e.edge_count(), 1);
        let p3 = sequential_join(&[k1.clone(), k1.clone(), k1.clone()]).unwrap();
        assert_eq!(p3, path(3));
        let g = sequential_join(&[complete(2).unwrap(), matching_complement(2).unwrap(), k1]).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.degree(4), 2);
        assert_eq!(sequential_join(&[]), Err(GraphError::EmptyJoin));
    }

    #[test]
    fn connectivity() {
        assert!(complete(4).unwrap().is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::empty(1).is_connected());
        assert!(Graph::empty(0).is_connected());
    }

    #[test]
    fn cut_vertices() {
        let w = path(3).articulation_points().unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].vertex, 1);
        assert_eq!(w[0].branch_degrees, vec![1, 1]);
        assert!(cycle(5).unwrap().articulation_points().unwrap().is_empty());
        assert!(path(2).articulation_points().unwrap().is_empty());
        assert_eq!(Graph::empty(3).articulation_points(), Err(GraphError::Disconnected));

        // star: center separates three leaves
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let w = star.articulation_points().unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].components.len(), 3);
        assert_eq!(w[0].branch_degrees, vec![1, 1, 1]);
    }

    #[test]
    fn edge_counts_between_sets() {
        let k4 = complete(4).unwrap();
        assert_eq!(k4.edges_between(&VertexSet::new([0, 1]), &VertexSet::new([2, 3])), 4);
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.edges_between(&VertexSet::new([0, 2]), &VertexSet::new([1, 3])), 4);
        let two = Graph::empty(2);
        assert_eq!(two.edges_between(&VertexSet::new([0]), &VertexSet::new([1])), 0);
        // overlapping sets count the shared edge once
        assert_eq!(k4.edges_between(&VertexSet::new([0, 1]), &VertexSet::new([0, 1])), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = sequential_join(&[complete(2).unwrap(), cycle(4).unwrap()]).unwrap();
        let text = g.to_edge_list();
        assert!(text.starts_with("n=6\n"));
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
        assert!(Graph::from_edge_list("0 1\n").is_err());
        assert!(Graph::from_edge_list("n=2\n0 0\n").is_err());
        assert!(Graph::from_edge_list("n=2\n0 5\n").is_err());
    }

    #[test]
    fn wide_graph_rows() {
        let g = cycle(130).unwrap();
        assert_eq!(g.regular_degree(), Some(2));
        assert!(g.has_edge(129, 0));
        assert_eq!(g.neighbors(64).collect::<Vec<_>>(), vec![63, 65]);
    }
}
