//! Isomorphism testing and canonical forms by colour refinement with
//! individualisation and backtracking.
//!
//! Colours are always named by rank of a label-independent signature, so two
//! isomorphic coloured graphs refine to colourings with identical names. That
//! is what makes colours comparable across graphs in [`is_isomorphic`] and
//! what makes the leaf set of the search tree in [`canonical_form`] an
//! isomorphism invariant.

use crate::graph::Graph;

struct Adjacency {
    nbrs: Vec<Vec<usize>>,
}

impl Adjacency {
    fn new(g: &Graph) -> Self {
        Adjacency {
            nbrs: (0..g.order()).map(|v| g.neighbors(v).collect()).collect(),
        }
    }

    fn len(&self) -> usize {
        self.nbrs.len()
    }
}

/// Ranks `keys` and writes the dense rank of each entry into `color`.
/// Returns the number of distinct keys.
fn rank_into<K: Ord>(keys: &[K], color: &mut [u32]) -> usize {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut rank = 0u32;
    for (pos, &v) in idx.iter().enumerate() {
        if pos > 0 && keys[idx[pos - 1]] != keys[v] {
            rank += 1;
        }
        color[v] = rank;
    }
    if keys.is_empty() {
        0
    } else {
        rank as usize + 1
    }
}

/// Degree and triangle count per vertex.
fn initial_coloring(g: &Graph, adj: &Adjacency) -> (Vec<u32>, usize) {
    let keys: Vec<(usize, usize)> = (0..adj.len())
        .map(|v| {
            let nv = g.row(v);
            let tri: usize = adj.nbrs[v]
                .iter()
                .map(|&u| {
                    g.row(u)
                        .iter()
                        .zip(nv)
                        .map(|(a, b)| (a & b).count_ones() as usize)
                        .sum::<usize>()
                })
                .sum();
            (adj.nbrs[v].len(), tri / 2)
        })
        .collect();
    let mut color = vec![0; adj.len()];
    let k = rank_into(&keys, &mut color);
    (color, k)
}

/// Refines to the coarsest equitable colouring finer than `color`.
fn refine(adj: &Adjacency, color: &mut [u32], mut ncolors: usize) -> usize {
    let n = adj.len();
    let mut keys: Vec<Vec<u32>> = vec![Vec::new(); n];
    loop {
        for v in 0..n {
            let key = &mut keys[v];
            key.clear();
            key.push(color[v]);
            key.extend(adj.nbrs[v].iter().map(|&u| color[u]));
            key[1..].sort_unstable();
        }
        let k = rank_into(&keys, color);
        if k == ncolors {
            return k;
        }
        ncolors = k;
    }
}

/// Gives `v` its own colour just below the rest of its cell.
fn individualize(color: &[u32], v: usize) -> Vec<u32> {
    let cv = color[v];
    color
        .iter()
        .enumerate()
        .map(|(w, &c)| if c > cv || (c == cv && w != v) { c + 1 } else { c })
        .collect()
}

/// Label-independent summary of an equitable colouring: cell sizes and the
/// neighbour-colour profile of each cell.
fn trace(adj: &Adjacency, color: &[u32], ncolors: usize) -> u64 {
    const PRIME: u64 = 0x100_0000_01b3;
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut mix = |x: u64| {
        h ^= x;
        h = h.wrapping_mul(PRIME);
    };
    let mut size = vec![0u64; ncolors];
    let mut rep = vec![usize::MAX; ncolors];
    for (v, &c) in color.iter().enumerate() {
        size[c as usize] += 1;
        if rep[c as usize] == usize::MAX {
            rep[c as usize] = v;
        }
    }
    mix(ncolors as u64);
    let mut prof = Vec::new();
    for c in 0..ncolors {
        mix(size[c]);
        prof.clear();
        prof.extend(adj.nbrs[rep[c]].iter().map(|&u| color[u]));
        prof.sort_unstable();
        for &p in &prof {
            mix(p as u64 + 1);
        }
        mix(u64::MAX);
    }
    h
}

fn target_cell(color: &[u32], ncolors: usize) -> Option<u32> {
    let mut size = vec![0usize; ncolors];
    for &c in color {
        size[c as usize] += 1;
    }
    (0..ncolors as u32).find(|&c| size[c as usize] > 1)
}

fn histogram(color: &[u32], ncolors: usize) -> Vec<usize> {
    let mut size = vec![0usize; ncolors];
    for &c in color {
        size[c as usize] += 1;
    }
    size
}

/// True iff some bijection of vertices preserves adjacency.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.order() != b.order() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    if a.order() == 0 {
        return true;
    }
    let (adj_a, adj_b) = (Adjacency::new(a), Adjacency::new(b));
    let (mut ca, ka) = initial_coloring(a, &adj_a);
    let (mut cb, kb) = initial_coloring(b, &adj_b);
    if ka != kb {
        return false;
    }
    let ka = refine(&adj_a, &mut ca, ka);
    let kb = refine(&adj_b, &mut cb, kb);
    match_colorings(a, b, &adj_a, &adj_b, ca, ka, cb, kb)
}

#[allow(clippy::too_many_arguments)]
fn match_colorings(
    a: &Graph,
    b: &Graph,
    adj_a: &Adjacency,
    adj_b: &Adjacency,
    ca: Vec<u32>,
    ka: usize,
    cb: Vec<u32>,
    kb: usize,
) -> bool {
    if ka != kb || histogram(&ca, ka) != histogram(&cb, kb) || trace(adj_a, &ca, ka) != trace(adj_b, &cb, kb) {
        return false;
    }
    let n = a.order();
    if ka == n {
        let mut inv_b = vec![0; n];
        for (v, &c) in cb.iter().enumerate() {
            inv_b[c as usize] = v;
        }
        let map: Vec<usize> = ca.iter().map(|&c| inv_b[c as usize]).collect();
        return a.edges().all(|(u, v)| b.has_edge(map[u], map[v]));
    }
    let cell = target_cell(&ca, ka).expect("non-discrete colouring has a non-singleton cell");
    let va = (0..n).find(|&v| ca[v] == cell).unwrap();
    let child_a = individualize(&ca, va);
    (0..n).filter(|&w| cb[w] == cell).any(|wb| {
        let mut na = child_a.clone();
        let mut nb = individualize(&cb, wb);
        let ka2 = refine(adj_a, &mut na, ka + 1);
        let kb2 = refine(adj_b, &mut nb, kb + 1);
        match_colorings(a, b, adj_a, adj_b, na, ka2, nb, kb2)
    })
}

struct CanonSearch<'a> {
    g: &'a Graph,
    adj: Adjacency,
    best_trace: Vec<u64>,
    /// Adjacency rows and vertex labels of the best leaf so far.
    best: Option<(Vec<u64>, Vec<u32>)>,
    /// Automorphisms found by reaching the best leaf twice.
    autos: Vec<Vec<usize>>,
    prefix: Vec<usize>,
}

impl CanonSearch<'_> {
    fn leaf_rows(&self, color: &[u32]) -> Vec<u64> {
        let n = self.g.order();
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for v in 0..n {
            let lv = color[v] as usize;
            for &u in &self.adj.nbrs[v] {
                let lu = color[u] as usize;
                rows[lv * words + lu / 64] |= 1 << (lu % 64);
            }
        }
        rows
    }

    fn leaf(&mut self, color: Vec<u32>) {
        let rows = self.leaf_rows(&color);
        match &self.best {
            Some((b, _)) if rows < *b => {}
            Some((b, labels)) if rows == *b => {
                let mut vertex_of = vec![0; labels.len()];
                for (v, &l) in labels.iter().enumerate() {
                    vertex_of[l as usize] = v;
                }
                let gamma: Vec<usize> = color.iter().map(|&l| vertex_of[l as usize]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.autos.push(gamma);
                }
            }
            _ => self.best = Some((rows, color)),
        }
    }

    /// Orbit representative of each vertex under the automorphisms found so
    /// far that fix the current prefix pointwise.
    fn orbits(&self) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for gamma in &self.autos {
            if self.prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (root(&mut parent, v), root(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| root(&mut parent, v)).collect()
    }

    fn visit(&mut self, color: Vec<u32>, ncolors: usize, depth: usize) {
        let inv = trace(&self.adj, &color, ncolors);
        match self.best_trace.get(depth) {
            Some(&b) if inv < b => return,
            Some(&b) if inv > b => {
                self.best_trace.truncate(depth);
                self.best_trace.push(inv);
                self.best = None;
            }
            Some(_) => {}
            None => self.best_trace.push(inv),
        }
        let n = self.g.order();
        if ncolors == n {
            self.leaf(color);
            return;
        }
        let cell = target_cell(&color, ncolors).expect("non-discrete colouring has a non-singleton cell");
        let mut done: Vec<usize> = Vec::new();
        for v in (0..n).filter(|&v| color[v] == cell) {
            if !done.is_empty() {
                let orbit = self.orbits();
                if done.iter().any(|&u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            let mut child = individualize(&color, v);
            let k = refine(&self.adj, &mut child, ncolors + 1);
            self.prefix.push(v);
            self.visit(child, k, depth + 1);
            self.prefix.pop();
            done.push(v);
        }
    }
}

/// A relabelling of `g` that is identical for all graphs isomorphic to `g`.
///
/// Children of a search node that are equivalent under automorphisms
/// already discovered (fixing the node's individualised vertices) are
/// skipped, which keeps highly symmetric graphs tractable.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.order();
    if n == 0 {
        return g.clone();
    }
    let adj = Adjacency::new(g);
    let (mut color, k) = initial_coloring(g, &adj);
    let k = refine(&adj, &mut color, k);
    let mut search = CanonSearch {
        g,
        adj,
        best_trace: Vec::new(),
        best: None,
        autos: Vec::new(),
        prefix: Vec::new(),
    };
    search.visit(color, k, 0);
    let (rows, _) = search.best.expect("search reaches at least one leaf");
    let words = n.div_ceil(64).max(1);
    let edges = (0..n).flat_map(|u| {
        let rows = &rows;
        (u + 1..n).filter(move |&v| rows[u * words + v / 64] >> (v % 64) & 1 == 1).map(move |v| (u, v))
    });
    Graph::from_edges(n, edges.collect::<Vec<_>>()).expect("relabelled edges are valid")
}
