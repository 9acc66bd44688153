//! Edge subsets of `K(v)` up to automorphisms of `K(v)`.
//!
//! `(K(v), E)` is encoded as a vertex-coloured graph: the `n` original
//! vertices carry the edges of `E`, and one marker vertex per part, coloured
//! by the part size, is joined to that part. Automorphisms of the encoding are
//! exactly the permutations of `Aut(K(v))` that fix `E`, so equal canonical
//! forms mean equal orbits. Orbits are built level by level: every orbit of
//! `k`-subsets contains a one-edge extension of some `(k−1)`-subset orbit.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::canon::{canonical_form_colored, CanonKey};
use crate::graph::bit;
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitGuard {
    pub level: usize,
    pub count: u64,
    pub limit: u64,
}

/// Edges of `K(v)` in lexicographic order; bit `i` of a subset mask selects entry `i`.
pub fn host_edge_list(v: &Partition) -> Vec<(usize, usize)> {
    crate::sample::host_edges(v)
}

struct Encoder {
    n: usize,
    edges: Vec<(usize, usize)>,
    base_rows: Vec<u64>,
    colors: Vec<u32>,
}

impl Encoder {
    fn new(v: &Partition) -> Self {
        let part_of = v.part_of();
        let n = part_of.len();
        let t = v.len();
        let mut base_rows = vec![0u64; n + t];
        for (x, &p) in part_of.iter().enumerate() {
            base_rows[x] |= bit(n + p);
            base_rows[n + p] |= bit(x);
        }
        let mut colors = vec![0u32; n];
        colors.extend(v.parts().iter().map(|&s| 1 + s));
        Self {
            n,
            edges: host_edge_list(v),
            base_rows,
            colors,
        }
    }

    fn key(&self, mask: u128) -> CanonKey {
        let mut rows = self.base_rows.clone();
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let (a, b) = self.edges[i];
            rows[a] |= bit(b);
            rows[b] |= bit(a);
        }
        debug_assert!(rows.len() <= 64 && self.n < rows.len());
        canonical_form_colored(&rows, &self.colors)
    }
}

/// Canonical form of `(K(v), E)` for the subset `mask`; equal keys mean equal orbits.
pub fn orbit_key(v: &Partition, mask: u128) -> CanonKey {
    Encoder::new(v).key(mask)
}

/// One representative (the least mask) per orbit of `k`-subsets of the edges
/// of `K(v)`, sorted ascending. Fails once any level holds more than `limit` orbits.
pub fn edge_subset_orbits(v: &Partition, k: usize, limit: u64) -> Result<Vec<u128>, OrbitGuard> {
    let enc = Encoder::new(v);
    let m = enc.edges.len();
    assert!(m <= 128, "more than 128 host edges");
    assert!(enc.n + v.len() <= 64, "encoding exceeds 64 vertices");
    if k > m {
        return Ok(Vec::new());
    }
    let mut level: Vec<u128> = vec![0];
    for depth in 1..=k {
        let merged = level
            .par_iter()
            .fold(HashMap::<CanonKey, u128>::new, |mut acc, &rep| {
                for i in (0..m).filter(|&i| rep >> i & 1 == 0) {
                    let ext = rep | 1u128 << i;
                    acc.entry(enc.key(ext))
                        .and_modify(|best| *best = (*best).min(ext))
                        .or_insert(ext);
                }
                acc
            })
            .reduce(HashMap::new, |mut a, b| {
                if a.len() < b.len() {
                    return merge_into(b, a);
                }
                merge_into(std::mem::take(&mut a), b)
            });
        if merged.len() as u64 > limit {
            return Err(OrbitGuard {
                level: depth,
                count: merged.len() as u64,
                limit,
            });
        }
        level = merged.into_values().collect();
        level.par_sort_unstable();
    }
    Ok(level)
}

fn merge_into(mut into: HashMap<CanonKey, u128>, from: HashMap<CanonKey, u128>) -> HashMap<CanonKey, u128> {
    for (key, mask) in from {
        into.entry(key)
            .and_modify(|best| *best = (*best).min(mask))
            .or_insert(mask);
    }
    into
}

/// Every `k`-subset of the edges of `K(v)`, without symmetry reduction.
pub fn all_edge_subsets(v: &Partition, k: usize, limit: u64) -> Result<Vec<u128>, OrbitGuard> {
    let m = host_edge_list(v).len();
    let total = binomial(m as u64, k as u64);
    if total > u128::from(limit) {
        return Err(OrbitGuard {
            level: k,
            count: u64::try_from(total).unwrap_or(u64::MAX),
            limit,
        });
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut idx: Vec<usize> = (0..k).collect();
    if k > m {
        return Ok(out);
    }
    loop {
        out.push(idx.iter().fold(0u128, |acc, &i| acc | 1u128 << i));
        // advance the rightmost index that can move
        let Some(pos) = (0..k).rev().find(|&p| idx[p] < m - k + p) else {
            break;
        };
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
    Ok(out)
}

pub(crate) fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}
