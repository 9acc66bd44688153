//! Small simple graphs stored as bit rows, with an optional part structure.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bit(i: usize) -> u64 {
    1u64 << i
}

/// Simple undirected graph on at most 64 vertices.
///
/// `part_of` is present for `K(v)` and for graphs derived from it by edge
/// deletion; it records the part each vertex was created in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    rows: Vec<u64>,
    part_of: Option<Vec<usize>>,
}

impl LabeledGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices");
        Self {
            rows: vec![0; n],
            part_of: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn from_rows(rows: Vec<u64>) -> Self {
        assert!(rows.len() <= MAX_VERTICES);
        Self { rows, part_of: None }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        let all = if n == 64 { u64::MAX } else { bit(n) - 1 };
        for (v, row) in g.rows.iter_mut().enumerate() {
            *row = all & !bit(v);
        }
        g
    }

    /// `K(u)` with vertices numbered part by part.
    pub fn complete_multipartite(u: &Partition) -> Self {
        let part_of = u.part_of();
        let n = part_of.len();
        let mut g = Self::empty(n);
        for a in 0..n {
            for b in (a + 1)..n {
                if part_of[a] != part_of[b] {
                    g.add_edge(a, b);
                }
            }
        }
        g.part_of = Some(part_of);
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn part_of(&self) -> Option<&[usize]> {
        self.part_of.as_deref()
    }

    pub fn with_parts(mut self, part_of: Vec<usize>) -> Self {
        assert_eq!(part_of.len(), self.rows.len());
        self.part_of = Some(part_of);
        self
    }

    pub fn without_parts(mut self) -> Self {
        self.part_of = None;
        self
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.rows[a] & bit(b) != 0
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a != b, "loops are not allowed");
        self.rows[a] |= bit(b);
        self.rows[b] |= bit(a);
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.rows[a] &= !bit(b);
        self.rows[b] &= !bit(a);
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.rows[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(a, &row)| {
            let mut later = row & !((bit(a) << 1).wrapping_sub(1));
            if a == 63 {
                later = 0;
            }
            BitIter(later).map(move |b| (a, b))
        })
    }

    /// `I₃(G)`.
    pub fn triangle_count(&self) -> u64 {
        let mut total = 0u64;
        for (a, b) in self.edges() {
            // third vertex above b keeps each triangle counted once
            let common = self.rows[a] & self.rows[b];
            let above = if b == 63 { 0 } else { !((bit(b) << 1) - 1) };
            total += u64::from((common & above).count_ones());
        }
        total
    }

    /// `K \ E`, preserving part labels.
    pub fn delete_edges(&self, edges: &EdgeSet) -> Result<Self> {
        let mut g = self.clone();
        for &(a, b) in edges.edges() {
            if a >= g.rows.len() || b >= g.rows.len() || !g.has_edge(a, b) {
                return Err(Error::EdgeNotInHost { a, b });
            }
            g.remove_edge(a, b);
        }
        Ok(g)
    }

    /// Graph with vertex `v` removed; higher vertices shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Self {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != v)
            .map(|(_, &r)| squeeze_out(r, v))
            .collect();
        let part_of = self
            .part_of
            .as_ref()
            .map(|p| p.iter().enumerate().filter(|&(i, _)| i != v).map(|(_, &x)| x).collect());
        Self { rows, part_of }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.rows.len();
        if n <= 1 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= self.rows[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == n
    }

    /// Exact chromatic number by backtracking with increasing colour budgets.
    pub fn chromatic_number(&self) -> usize {
        let n = self.rows.len();
        if n == 0 {
            return 0;
        }
        if self.edge_count() == 0 {
            return 1;
        }
        // Colour high-degree vertices first.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        let mut colour = vec![usize::MAX; n];
        (2..=n)
            .find(|&k| {
                colour.iter_mut().for_each(|c| *c = usize::MAX);
                self.colourable(&order, 0, k, 0, &mut colour)
            })
            .unwrap_or(n)
    }

    fn colourable(&self, order: &[usize], idx: usize, k: usize, used: usize, colour: &mut [usize]) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        // Symmetry: a fresh colour is only ever the next unused one.
        for c in 0..k.min(used + 1) {
            if BitIter(self.rows[v]).all(|w| colour[w] != c) {
                colour[v] = c;
                if self.colourable(order, idx + 1, k, used.max(c + 1), colour) {
                    return true;
                }
                colour[v] = usize::MAX;
            }
        }
        false
    }

    pub fn adjacency_list(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|&r| BitIter(r).collect()).collect()
    }
}

/// Drops bit `v` from `row`, shifting higher bits down.
pub(crate) fn squeeze_out(row: u64, v: usize) -> u64 {
    let low = row & (bit(v) - 1);
    let high = if v == 63 { 0 } else { (row >> (v + 1)) << v };
    low | high
}

/// Iterates over the set bit positions of a word.
#[derive(Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// A set of edges of a complete multipartite host `K(v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeSet {
    host: Partition,
    edges: Vec<(usize, usize)>,
}

impl EdgeSet {
    /// Normalises each pair to `a < b`, sorts, and checks membership in `K(host)`.
    pub fn new(host: &Partition, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let part_of = host.part_of();
        let mut out: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        for &(a, b) in &out {
            if b >= part_of.len() || a == b || part_of[a] == part_of[b] {
                return Err(Error::EdgeNotInHost { a, b });
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(Self {
            host: host.clone(),
            edges: out,
        })
    }

    /// Parses `a-b,c-d` over vertex indices numbered part by part.
    pub fn parse(host: &Partition, s: &str) -> Result<Self> {
        let malformed = |reason: String| Error::MalformedEdgeList {
            input: s.to_string(),
            reason,
        };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Self::new(host, std::iter::empty());
        }
        let pairs = trimmed
            .split(',')
            .map(|tok| {
                let (a, b) = tok
                    .trim()
                    .split_once('-')
                    .ok_or_else(|| malformed(format!("`{tok}` is not of the form a-b")))?;
                let a = a
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| malformed(format!("`{a}`: {e}")))?;
                let b = b
                    .trim()
                    .parse::<usize>()
                    .map_err(|e| malformed(format!("`{b}`: {e}")))?;
                Ok((a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(host, pairs)
    }

    pub fn host(&self) -> &Partition {
        &self.host
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Sub-collection selected by the bits of `mask` (bit `i` ↔ `edges()[i]`).
    pub fn subset(&self, mask: u64) -> Self {
        Self {
            host: self.host.clone(),
            edges: BitIter(mask).map(|i| self.edges[i]).collect(),
        }
    }

    /// `H = K(host) \ E`.
    pub fn complement_graph(&self) -> LabeledGraph {
        LabeledGraph::complete_multipartite(&self.host)
            .delete_edges(self)
            .expect("edges were validated against the host")
    }

    pub fn to_edge_list_string(&self) -> String {
        self.edges
            .iter()
            .map(|(a, b)| format!("{a}-{b}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}
