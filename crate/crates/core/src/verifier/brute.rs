use rayon::prelude::*;

use super::{Counterexample, GuardTrip, Method, Verdict, VerificationReport};
use crate::canon::isomorphic;
use crate::chromatic::ChromaticEngine;
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::graph6::{emit_graph6, parse_graph6};
use crate::partition::Partition;

/// Compares `P(K(u))` against every graph of a graph6 stream (blank lines
/// ignored). Unique iff every polynomial match is isomorphic to `K(u)` and
/// at least one is present.
pub fn bruteforce_verify<'a, I>(engine: &ChromaticEngine, u: &Partition, lines: I) -> Result<VerificationReport>
where
    I: IntoIterator<Item = &'a str>,
{
    let n = u.n() as usize;
    let target = LabeledGraph::complete_multipartite(u).without_parts();
    let target_poly = engine.polynomial(&target)?;
    let (m, tri) = (target.edge_count(), target.triangle_count());

    let mut graphs = Vec::new();
    for (idx, line) in lines.into_iter().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let g = parse_graph6(line.trim())?;
        if g.vertex_count() != n {
            return Err(Error::VertexCountMismatch {
                line: idx + 1,
                expected: n,
                found: g.vertex_count(),
            });
        }
        graphs.push(g);
    }

    // (passed prefilter, polynomial match, isomorphic to target)
    let verdicts: Vec<(bool, bool, bool)> = graphs
        .par_iter()
        .map(|g| {
            if g.edge_count() != m || g.triangle_count() != tri {
                return Ok((false, false, false));
            }
            let same = engine.polynomial(g)? == target_poly;
            Ok((true, same, same && isomorphic(g, &target)))
        })
        .collect::<Result<_>>()?;

    let mut counterexamples = Vec::new();
    let mut self_matches = 0u64;
    for (g, &(_, same, iso)) in graphs.iter().zip(&verdicts) {
        if same && !iso {
            counterexamples.push(Counterexample {
                v: None,
                edges: None,
                graph6: emit_graph6(g),
            });
        }
        if iso {
            self_matches += 1;
        }
    }
    let prefiltered = verdicts.iter().filter(|r| r.0).count() as u64;
    let report = VerificationReport {
        method: Method::Bruteforce,
        target: u.clone(),
        candidates: Vec::new(),
        searches: Vec::new(),
        equal_edge_hosts_checked: 0,
        subsets_examined: graphs.len() as u64,
        subsets_surviving_i3: prefiltered,
        subsets_surviving_pt: prefiltered,
        polynomial_matches: verdicts.iter().filter(|r| r.1).count() as u64,
        counterexamples,
        guard_tripped: (self_matches == 0).then(|| GuardTrip {
            candidate: None,
            what: "target graph absent from input stream".into(),
            value: 0,
            limit: 1,
        }),
        verdict: Verdict::UniqueAtScope,
    };
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One graph6 line per isomorphism class on `n` vertices.
    fn all_graphs(n: usize) -> Vec<String> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut seen = std::collections::BTreeMap::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = LabeledGraph::from_edges(n, &edges);
            seen.entry(crate::canon::canonical_form(&g))
                .or_insert_with(|| emit_graph6(&g));
        }
        seen.into_values().collect()
    }

    #[test]
    fn four_vertex_examples() {
        let graphs = all_graphs(4);
        assert_eq!(graphs.len(), 11);
        let e = ChromaticEngine::default();
        let r = bruteforce_verify(&e, &"2,2".parse().unwrap(), graphs.iter().map(String::as_str)).unwrap();
        assert_eq!(r.verdict, Verdict::UniqueAtScope);
        assert_eq!((r.subsets_examined, r.polynomial_matches), (11, 1));
        // every tree on 4 vertices shares x(x-1)^3
        let r = bruteforce_verify(&e, &"3,1".parse().unwrap(), graphs.iter().map(String::as_str)).unwrap();
        assert_eq!(r.verdict, Verdict::Counterexample);
        assert_eq!(r.counterexamples.len(), 1);
    }

    #[test]
    fn wrong_vertex_count_names_the_line() {
        let e = ChromaticEngine::default();
        let err = bruteforce_verify(&e, &"2,2".parse().unwrap(), ["C~", "", "BW"]).unwrap_err();
        assert_eq!(
            err,
            Error::VertexCountMismatch {
                line: 3,
                expected: 4,
                found: 3
            }
        );
    }

    #[test]
    fn missing_target_is_incomplete() {
        let e = ChromaticEngine::default();
        let r = bruteforce_verify(&e, &"2,2".parse().unwrap(), ["C?"]).unwrap();
        assert_eq!(r.verdict, Verdict::Incomplete);
    }
}
