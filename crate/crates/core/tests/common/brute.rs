//! Brute-force labelled enumeration of connected regular graphs with a
//! backtracking isomorphism test, sharing nothing with the library's
//! generator or canonical form.

use regcut::graph::Graph;

/// Adjacency as bit rows, n <= 32.
pub type Rows = Vec<u32>;

/// Every labelled d-regular graph on n vertices with N(0) = {1..d}.
/// Every isomorphism class has such a labelling.
pub fn brute_force(n: usize, d: usize) -> Vec<Rows> {
    fn go(v: usize, n: usize, d: usize, rows: &mut Rows, out: &mut Vec<Rows>) {
        if v == n {
            out.push(rows.clone());
            return;
        }
        let need = d - rows[v].count_ones() as usize;
        let cands: Vec<usize> = (v + 1..n).filter(|&u| (rows[u].count_ones() as usize) < d).collect();
        if need > cands.len() {
            return;
        }
        for subset in subsets(&cands, need) {
            for &u in &subset {
                rows[v] |= 1 << u;
                rows[u] |= 1 << v;
            }
            go(v + 1, n, d, rows, out);
            for &u in &subset {
                rows[v] &= !(1 << u);
                rows[u] &= !(1 << v);
            }
        }
    }
    let mut rows = vec![0u32; n];
    for u in 1..=d {
        rows[0] |= 1 << u;
        rows[u] |= 1;
    }
    let mut out = Vec::new();
    go(1, n, d, &mut rows, &mut out);
    out.retain(connected);
    out
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn connected(rows: &Rows) -> bool {
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = rows[v] & !seen;
        seen |= new;
        frontier |= new;
    }
    seen.count_ones() as usize == rows.len()
}

/// Per vertex: triangles through it and the sizes of its distance layers.
fn vertex_invariants(rows: &Rows) -> Vec<Vec<u32>> {
    let n = rows.len();
    (0..n)
        .map(|v| {
            let tri: u32 = (0..n).filter(|&u| rows[v] >> u & 1 == 1).map(|u| (rows[u] & rows[v]).count_ones()).sum();
            let mut inv = vec![tri];
            let (mut seen, mut layer) = (1u32 << v, 1u32 << v);
            while layer != 0 {
                let next = rows.iter().enumerate().filter(|&(u, _)| layer >> u & 1 == 1).fold(0, |acc, (_, r)| acc | r);
                layer = next & !seen;
                seen |= layer;
                inv.push(layer.count_ones());
            }
            inv
        })
        .collect()
}

fn naive_iso(a: &Rows, b: &Rows, ia: &[Vec<u32>], ib: &[Vec<u32>]) -> bool {
    fn extend(v: usize, a: &Rows, b: &Rows, ia: &[Vec<u32>], ib: &[Vec<u32>], map: &mut Vec<usize>, used: u32) -> bool {
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if used >> w & 1 == 1 || ia[v] != ib[w] {
                continue;
            }
            if (0..v).all(|u| (a[v] >> u & 1) == (b[w] >> map[u] & 1)) {
                map.push(w);
                if extend(v + 1, a, b, ia, ib, map, used | 1 << w) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    extend(0, a, b, ia, ib, &mut Vec::new(), 0)
}

pub struct Class {
    rows: Rows,
    inv: Vec<Vec<u32>>,
    key: Vec<Vec<u32>>,
}

impl Class {
    pub fn new(rows: Rows) -> Self {
        let inv = vertex_invariants(&rows);
        let mut key = inv.clone();
        key.sort();
        Class { rows, inv, key }
    }

    pub fn same(&self, other: &Class) -> bool {
        self.key == other.key && naive_iso(&self.rows, &other.rows, &self.inv, &other.inv)
    }
}

pub fn brute_force_classes(n: usize, d: usize) -> Vec<Class> {
    let mut classes: Vec<Class> = Vec::new();
    for rows in brute_force(n, d) {
        let c = Class::new(rows);
        if !classes.iter().any(|k| k.same(&c)) {
            classes.push(c);
        }
    }
    classes
}

pub fn to_rows(g: &Graph) -> Rows {
    (0..g.order()).map(|v| g.neighbors(v).fold(0u32, |r, u| r | 1 << u)).collect()
}
