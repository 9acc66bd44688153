//! Dominance order, elementary transformations and the lattice `NPL(n, t)`
//! of fixed-length partitions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_with_length, Partition};

/// `true` iff `v ⊴ u`: every prefix sum of `v` is at most the matching prefix
/// sum of `u`, comparing with zero padding.
pub fn dominates(u: &Partition, v: &Partition) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::IncomparableTotals {
            left: u.n(),
            right: v.n(),
        });
    }
    Ok(dominates_unchecked(u, v))
}

fn dominates_unchecked(u: &Partition, v: &Partition) -> bool {
    let len = u.len().max(v.len());
    u.prefix_sums(len).iter().zip(v.prefix_sums(len)).all(|(&a, b)| b <= a)
}

/// Every partition reachable from `u` by one elementary transformation:
/// move one unit from position `i` to a later position `j` when
/// `u_i − 1 ≥ u_{i+1}`, `u_{j−1} ≥ u_j + 1` and `u_i − u_j ≥ 2`.
pub fn elementary_transformations(u: &Partition) -> Vec<Partition> {
    let parts = u.parts();
    let t = parts.len();
    let mut out = Vec::new();
    for i in 0..t {
        for j in (i + 1)..t {
            let ok = parts[i] > parts[i + 1] && parts[j - 1] > parts[j] && parts[i] >= parts[j] + 2;
            if ok {
                let mut next = parts.to_vec();
                next[i] -= 1;
                next[j] += 1;
                out.push(Partition::new(next).expect("guards keep the sequence decreasing"));
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeNode {
    pub partition: Partition,
    pub height: u32,
}

/// A cover `lower ⋖ upper` annotated with the invariant differences
/// `m(K(lower)) − m(K(upper))` and `pt(K(upper)) − pt(K(lower))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverEdge {
    pub upper: Partition,
    pub lower: Partition,
    pub delta_edges: u64,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub delta_pt: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lattice {
    pub n: u32,
    pub t: u32,
    pub max_height: u32,
    pub nodes: Vec<LatticeNode>,
    pub covers: Vec<CoverEdge>,
}

pub fn npl_lattice(n: u32, t: u32, max_height: u32) -> Result<Lattice> {
    let all = partitions_with_length(n, t);
    if all.is_empty() {
        return Err(Error::EmptyLattice { n, t });
    }
    // Increasing lexicographic order is a linear extension of dominance.
    let mut asc = all;
    asc.reverse();
    let count = asc.len();
    let below: Vec<Vec<bool>> = (0..count)
        .map(|a| {
            (0..count)
                .map(|b| a != b && dominates_unchecked(&asc[a], &asc[b]))
                .collect()
        })
        .collect();
    // covers[a] lists the b with asc[b] ⋖ asc[a].
    let mut covered_by: Vec<Vec<usize>> = vec![Vec::new(); count];
    for a in 0..count {
        for b in 0..a {
            if below[a][b] && !(b + 1..a).any(|w| below[a][w] && below[w][b]) {
                covered_by[a].push(b);
            }
        }
    }
    let mut height = vec![0u32; count];
    for a in 0..count {
        height[a] = covered_by[a].iter().map(|&b| height[b] + 1).max().unwrap_or(0);
    }
    let keep: Vec<bool> = height.iter().map(|&h| h <= max_height).collect();
    let nodes = (0..count)
        .filter(|&a| keep[a])
        .map(|a| LatticeNode {
            partition: asc[a].clone(),
            height: height[a],
        })
        .collect();
    let mut covers = Vec::new();
    for a in (0..count).filter(|&a| keep[a]) {
        for &b in covered_by[a].iter().filter(|&&b| keep[b]) {
            covers.push(cover_edge(&asc[a], &asc[b]));
        }
    }
    Ok(Lattice {
        n,
        t,
        max_height,
        nodes,
        covers,
    })
}

fn cover_edge(upper: &Partition, lower: &Partition) -> CoverEdge {
    CoverEdge {
        upper: upper.clone(),
        lower: lower.clone(),
        delta_edges: lower.edge_count() - upper.edge_count(),
        delta_pt: upper.pt_closed_form() - lower.pt_closed_form(),
    }
}

/// Recomputes `(Δm, Δpt)` for every cover from the two partitions.
pub fn cover_labels(covers: &[CoverEdge]) -> Vec<CoverEdge> {
    covers.iter().map(|c| cover_edge(&c.upper, &c.lower)).collect()
}

impl Lattice {
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph npl_{}_{} {{", self.n, self.t);
        let _ = writeln!(out, "  rankdir=BT;");
        let mut by_height: BTreeMap<u32, Vec<&LatticeNode>> = BTreeMap::new();
        for node in &self.nodes {
            by_height.entry(node.height).or_default().push(node);
            let _ = writeln!(
                out,
                "  \"{}\" [label=\"({})\\nh={}\"];",
                node.partition, node.partition, node.height
            );
        }
        for (h, nodes) in &by_height {
            let names: Vec<String> = nodes.iter().map(|n| format!("\"{}\"", n.partition)).collect();
            let _ = writeln!(out, "  {{ rank=same; {} }} // height {h}", names.join("; "));
        }
        for c in &self.covers {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"Δm={}, Δpt={}\"];",
                c.upper, c.lower, c.delta_edges, c.delta_pt
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn height_of(&self, p: &Partition) -> Option<u32> {
        self.nodes.iter().find(|n| &n.partition == p).map(|n| n.height)
    }

    pub fn cover(&self, upper: &Partition, lower: &Partition) -> Option<&CoverEdge> {
        self.covers.iter().find(|c| &c.upper == upper && &c.lower == lower)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p("3,2,1"), &p("2,2,2")).unwrap());
        assert!(!dominates(&p("2,2,2"), &p("3,2,1")).unwrap());
        assert!(dominates(&p("5,4,3"), &p("5,4,3")).unwrap());
        // zero padding across lengths
        assert!(dominates(&p("4,2"), &p("3,2,1")).unwrap());
        assert_eq!(
            dominates(&p("3"), &p("2,2")),
            Err(Error::IncomparableTotals { left: 3, right: 4 })
        );
    }

    #[test]
    fn transformation_examples() {
        assert_eq!(elementary_transformations(&p("3,1")), vec![p("2,2")]);
        assert!(elementary_transformations(&p("2,2,2")).is_empty());
        assert_eq!(elementary_transformations(&p("4,2,2")), vec![p("3,3,2")]);
        assert_eq!(elementary_transformations(&p("7,3,2")), vec![p("6,4,2"), p("6,3,3")]);
    }

    #[test]
    fn fig2_nodes_at_q4() {
        let lat = npl_lattice(12, 3, 4).unwrap();
        let mut got: Vec<String> = lat.nodes.iter().map(|n| n.partition.to_string()).collect();
        got.sort();
        assert_eq!(got, ["4,4,4", "5,4,3", "5,5,2", "6,3,3", "6,4,2", "6,5,1", "7,3,2"]);
        assert_eq!(lat.height_of(&p("4,4,4")), Some(0));
        assert_eq!(lat.height_of(&p("7,3,2")), Some(4));
    }

    #[test]
    fn fig3_nodes_at_q4() {
        let lat = npl_lattice(13, 3, 4).unwrap();
        let mut got: Vec<String> = lat.nodes.iter().map(|n| n.partition.to_string()).collect();
        got.sort();
        assert_eq!(got, ["5,4,4", "5,5,3", "6,4,3", "6,5,2", "6,6,1", "7,3,3", "7,4,2"]);
    }

    #[test]
    fn trivial_lattice_and_empty() {
        let lat = npl_lattice(3, 3, 10).unwrap();
        assert_eq!(lat.nodes.len(), 1);
        assert!(lat.covers.is_empty());
        assert_eq!(npl_lattice(2, 3, 1), Err(Error::EmptyLattice { n: 2, t: 3 }));
    }

    #[test]
    fn cover_label_examples() {
        let lat = npl_lattice(13, 3, 4).unwrap();
        let c = lat.cover(&p("6,6,1"), &p("6,5,2")).unwrap();
        assert_eq!((c.delta_edges, c.delta_pt.clone()), (4, BigInt::from(15)));
        let lat = npl_lattice(12, 3, 4).unwrap();
        let c = lat.cover(&p("5,4,3"), &p("4,4,4")).unwrap();
        assert_eq!((c.delta_edges, c.delta_pt.clone()), (1, BigInt::from(4)));
        let c = lat.cover(&p("7,3,2"), &p("6,4,2")).unwrap();
        assert_eq!((c.delta_edges, c.delta_pt.clone()), (3, BigInt::from(28)));
        assert_eq!(cover_labels(&lat.covers), lat.covers);
    }

    #[test]
    fn dot_mentions_every_cover() {
        let lat = npl_lattice(12, 3, 4).unwrap();
        let dot = lat.to_dot();
        assert_eq!(dot.matches(" -> ").count(), 7);
        assert!(dot.contains("Δm=3, Δpt=28"));
    }
}
