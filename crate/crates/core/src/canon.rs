//! Canonical labeling by equitable refinement, individualisation and
//! backtracking.
//!
//! The canonical form is the lexicographically least `(trace, adjacency)`
//! certificate over all leaves of the search tree. Subtrees are skipped when
//! their trace prefix is already worse than the best leaf, or when the
//! branching vertex lies in the orbit of an explored sibling under
//! automorphisms found so far that fix the current path pointwise.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{bit, BitIter, LabeledGraph};

/// Isomorphism-invariant key; equal keys iff the (coloured) graphs are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey(Vec<u8>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Self {
        Self(bytes)
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        hex::decode(s).ok().map(Self)
    }
}

impl fmt::Display for CanonKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Canonical key of the underlying graph; part labels are ignored.
pub fn canonical_form(g: &LabeledGraph) -> CanonKey {
    canonical_labeling(g.rows(), None).1
}

pub fn isomorphic(g: &LabeledGraph, h: &LabeledGraph) -> bool {
    g.vertex_count() == h.vertex_count() && g.edge_count() == h.edge_count() && canonical_form(g) == canonical_form(h)
}

/// Canonical key of a vertex-coloured graph. Isomorphisms must preserve colours.
pub fn canonical_form_colored(rows: &[u64], colors: &[u32]) -> CanonKey {
    canonical_labeling(rows, Some(colors)).1
}

/// Returns `lab` (canonical position → original vertex) and the key.
pub fn canonical_labeling(rows: &[u64], colors: Option<&[u32]>) -> (Vec<usize>, CanonKey) {
    let n = rows.len();
    assert!(n <= 64);
    if n == 0 {
        return (Vec::new(), CanonKey(vec![0]));
    }
    let mut cells: Vec<Vec<usize>> = match colors {
        None => vec![(0..n).collect()],
        Some(c) => {
            assert_eq!(c.len(), n);
            let mut distinct: Vec<u32> = c.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            distinct
                .iter()
                .map(|&col| (0..n).filter(|&v| c[v] == col).collect())
                .collect()
        }
    };
    refine(rows, &mut cells);
    let mut search = Search {
        rows,
        best: None,
        first: None,
        autos: Vec::new(),
    };
    let mut path = Vec::new();
    let mut trace = Vec::new();
    search.dfs(cells, &mut path, &mut trace);
    let best = search.best.expect("search reaches at least one leaf");
    let key = encode(n, &best.cert, &best.lab, colors);
    (best.lab, key)
}

struct Leaf {
    trace: Vec<u64>,
    cert: Vec<u64>,
    lab: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    best: Option<Leaf>,
    first: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn dfs(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>, trace: &mut Vec<u64>) {
        trace.push(trace_value(&cells));
        if let Some(best) = &self.best {
            let depth = trace.len();
            let prefix = &best.trace[..depth.min(best.trace.len())];
            if trace.as_slice().cmp(prefix) == Ordering::Greater {
                trace.pop();
                return;
            }
        }
        if cells.len() == self.rows.len() {
            self.leaf(&cells, trace);
            trace.pop();
            return;
        }
        let target = cells
            .iter()
            .position(|c| c.len() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &w in &candidates {
            if !explored.is_empty() && self.in_explored_orbit(path, w, &explored) {
                continue;
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![w]);
            next.push(cells[target].iter().copied().filter(|&x| x != w).collect());
            next.extend_from_slice(&cells[target + 1..]);
            refine(self.rows, &mut next);
            path.push(w);
            self.dfs(next, path, trace);
            path.pop();
            explored.push(w);
        }
        trace.pop();
    }

    fn leaf(&mut self, cells: &[Vec<usize>], trace: &[u64]) {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = certificate(self.rows, &lab);
        let leaf = Leaf {
            trace: trace.to_vec(),
            cert,
            lab,
        };
        if let Some(first) = &self.first {
            if first.trace == leaf.trace && first.cert == leaf.cert {
                self.autos.push(automorphism(&leaf.lab, &first.lab));
            }
        } else {
            self.first = Some(Leaf {
                trace: leaf.trace.clone(),
                cert: leaf.cert.clone(),
                lab: leaf.lab.clone(),
            });
        }
        match &self.best {
            None => self.best = Some(leaf),
            Some(best) => match (leaf.trace.as_slice(), &leaf.cert).cmp(&(best.trace.as_slice(), &best.cert)) {
                Ordering::Less => self.best = Some(leaf),
                Ordering::Equal => {
                    let gamma = automorphism(&leaf.lab, &best.lab);
                    self.autos.push(gamma);
                }
                Ordering::Greater => {}
            },
        }
    }

    fn in_explored_orbit(&self, path: &[usize], w: usize, explored: &[usize]) -> bool {
        let n = self.rows.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for gamma in &self.autos {
            if path.iter().all(|&p| gamma[p] == p) {
                any = true;
                for (v, &image) in gamma.iter().enumerate().take(n) {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, image));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, w);
        explored.iter().any(|&e| find(&mut parent, e) == root)
    }
}

/// Maps each vertex of leaf `a` to the vertex holding the same position in leaf `b`.
fn automorphism(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; a.len()];
    for (pos, &v) in a.iter().enumerate() {
        gamma[v] = b[pos];
    }
    gamma
}

fn certificate(rows: &[u64], lab: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    lab.iter()
        .map(|&v| BitIter(rows[v]).fold(0u64, |acc, w| acc | bit(pos[w])))
        .collect()
}

fn trace_value(cells: &[Vec<usize>]) -> u64 {
    // FNV-1a over the ordered cell sizes.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for c in cells {
        h ^= c.len() as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Splits cells by neighbour counts into each splitter cell until equitable.
/// Sub-cells are ordered by increasing count, which keeps the refinement
/// isomorphism-invariant.
fn refine(rows: &[u64], cells: &mut Vec<Vec<usize>>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u64, |m, &v| m | bit(v));
            let mut split_any = false;
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 2);
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let counts: Vec<u32> = cell.iter().map(|&v| (rows[v] & splitter).count_ones()).collect();
                if counts.iter().all(|&c| c == counts[0]) {
                    next.push(cell.clone());
                    continue;
                }
                split_any = true;
                let mut keys: Vec<u32> = counts.clone();
                keys.sort_unstable();
                keys.dedup();
                for k in keys {
                    next.push(
                        cell.iter()
                            .zip(&counts)
                            .filter(|&(_, &c)| c == k)
                            .map(|(&v, _)| v)
                            .collect(),
                    );
                }
            }
            if split_any {
                *cells = next;
                continue 'outer;
            }
        }
        break;
    }
}

fn encode(n: usize, cert: &[u64], lab: &[usize], colors: Option<&[u32]>) -> CanonKey {
    let mut out = Vec::with_capacity(2 + n * n / 16);
    out.push(n as u8);
    match colors {
        None => out.push(0),
        Some(c) => {
            out.push(1);
            for &v in lab {
                out.extend_from_slice(&(c[v] as u16).to_be_bytes());
            }
        }
    }
    let mut acc = 0u8;
    let mut used = 0;
    for (i, &row) in cert.iter().enumerate() {
        for j in (i + 1)..n {
            acc = (acc << 1) | u8::from(row & bit(j) != 0);
            used += 1;
            if used == 8 {
                out.push(acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(acc << (8 - used));
    }
    CanonKey(out)
}
