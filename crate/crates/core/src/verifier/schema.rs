//! Search over `H = K(v) \ E` with invariant filters in increasing cost:
//! `ΔI₃`, `χ(H) = t`, the destruction bound, the `Δpt` census, the full
//! polynomial, and finally isomorphism with `K(u)`.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use super::orbits::{all_edge_subsets, binomial, edge_subset_orbits, host_edge_list};
use super::{
    candidate_partitions, CandidateCase, CandidateSearch, Counterexample, GuardTrip, Method, Verdict,
    VerificationReport, VerifyOptions,
};
use crate::canon::isomorphic;
use crate::chromatic::{ChromaticEngine, StandardPolynomial};
use crate::error::Result;
use crate::garlands::{census_range, destruction_bound_holds_host, xi_stats_host, Host, MAX_CENSUS_EDGES};
use crate::graph::{EdgeSet, LabeledGraph};
use crate::graph6::emit_graph6;
use crate::partition::{partitions_with_length, Partition};

/// Furthest filter a subset reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetStage {
    FailedI3,
    FailedChi,
    FailedDestruction,
    FailedPt,
    FailedPolynomial,
    IsomorphicToTarget,
    Counterexample,
}

pub fn schema_verify(u: &Partition, opts: &VerifyOptions) -> Result<VerificationReport> {
    schema_verify_with(ChromaticEngine::global(), u, opts)
}

struct Target {
    graph: LabeledGraph,
    poly: StandardPolynomial,
    pt: BigInt,
    i3: u64,
    edges: u64,
}

impl Target {
    fn new(engine: &ChromaticEngine, u: &Partition) -> Result<Self> {
        let graph = LabeledGraph::complete_multipartite(u);
        Ok(Self {
            poly: engine.polynomial(&graph)?,
            graph,
            pt: u.pt_closed_form(),
            i3: u.triangle_count(),
            edges: u.edge_count(),
        })
    }
}

pub fn schema_verify_with(engine: &ChromaticEngine, u: &Partition, opts: &VerifyOptions) -> Result<VerificationReport> {
    let target = Target::new(engine, u)?;
    let candidates = candidate_partitions(u);
    let mut report = VerificationReport {
        method: Method::Schema,
        target: u.clone(),
        candidates: candidates.clone(),
        searches: Vec::new(),
        equal_edge_hosts_checked: 0,
        subsets_examined: 0,
        subsets_surviving_i3: 0,
        subsets_surviving_pt: 0,
        polynomial_matches: 0,
        counterexamples: Vec::new(),
        guard_tripped: None,
        verdict: Verdict::UniqueAtScope,
    };

    for v in partitions_with_length(u.n(), u.len() as u32) {
        if &v != u && v.edge_count() == target.edges {
            report.equal_edge_hosts_checked += 1;
            let kv = LabeledGraph::complete_multipartite(&v);
            if engine.polynomial(&kv)? == target.poly {
                report.polynomial_matches += 1;
                report.counterexamples.push(Counterexample {
                    v: Some(v.clone()),
                    edges: Some(String::new()),
                    graph6: emit_graph6(&kv),
                });
            }
        }
    }

    for case in &candidates {
        if case.pruned_by.is_some() && !opts.search_pruned {
            continue;
        }
        match search_candidate(engine, &target, case, opts)? {
            Ok((search, found)) => {
                report.subsets_examined += search.subsets_examined;
                report.subsets_surviving_i3 += search.surviving_i3;
                report.subsets_surviving_pt += search.surviving_pt;
                report.polynomial_matches += search.surviving_polynomial;
                report.counterexamples.extend(found);
                report.searches.push(search);
            }
            Err(trip) => {
                report.guard_tripped.get_or_insert(trip);
            }
        }
    }
    Ok(report.finish())
}

/// Furthest stage reached by each subset of the edges of `K(v)` when
/// searching for `K(u)`; `None` if `v` is not a candidate for `u`.
pub fn subset_stages(
    engine: &ChromaticEngine,
    u: &Partition,
    v: &Partition,
    subsets: &[u128],
) -> Result<Option<Vec<SubsetStage>>> {
    let Some(case) = candidate_partitions(u).into_iter().find(|c| &c.v == v) else {
        return Ok(None);
    };
    let target = Target::new(engine, u)?;
    let host_edges = host_edge_list(v);
    let host = Host::new(v);
    let kv = LabeledGraph::complete_multipartite(v);
    let stages = subsets
        .par_iter()
        .map(|&m| examine(engine, &target, &case, &host, &host_edges, &kv, m).map(|(s, _)| s))
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(stages))
}

type SearchOutcome = std::result::Result<(CandidateSearch, Vec<Counterexample>), GuardTrip>;

fn search_candidate(
    engine: &ChromaticEngine,
    target: &Target,
    case: &CandidateCase,
    opts: &VerifyOptions,
) -> Result<SearchOutcome> {
    let v = &case.v;
    let k = case.edge_deficit as usize;
    let trip = |what: &str, value: u64, limit: u64| GuardTrip {
        candidate: Some(v.clone()),
        what: what.to_string(),
        value,
        limit,
    };
    if k > MAX_CENSUS_EDGES {
        return Ok(Err(trip("edge deficit", k as u64, MAX_CENSUS_EDGES as u64)));
    }
    let subsets = if opts.symmetry_reduction {
        edge_subset_orbits(v, k, opts.orbit_guard)
    } else {
        all_edge_subsets(v, k, opts.orbit_guard)
    };
    let subsets = match subsets {
        Ok(s) => s,
        Err(g) => {
            let what = if opts.symmetry_reduction {
                "orbit representatives"
            } else {
                "raw subsets"
            };
            return Ok(Err(trip(what, g.count, g.limit)));
        }
    };
    let host_edges = host_edge_list(v);
    let host = Host::new(v);
    let kv = LabeledGraph::complete_multipartite(v);

    let stages: Vec<(SubsetStage, Option<Counterexample>)> = subsets
        .par_iter()
        .map(|&mask| examine(engine, target, case, &host, &host_edges, &kv, mask))
        .collect::<Result<Vec<_>>>()?;

    let passed = |s: SubsetStage| stages.iter().filter(|(st, _)| *st > s).count() as u64;
    let search = CandidateSearch {
        v: Some(v.clone()),
        edge_deficit: case.edge_deficit,
        raw_subsets: u64::try_from(binomial(host_edges.len() as u64, k as u64)).unwrap_or(u64::MAX),
        subsets_examined: stages.len() as u64,
        surviving_i3: passed(SubsetStage::FailedI3),
        surviving_chi: passed(SubsetStage::FailedChi),
        surviving_destruction: passed(SubsetStage::FailedDestruction),
        surviving_pt: passed(SubsetStage::FailedPt),
        surviving_polynomial: passed(SubsetStage::FailedPolynomial),
        isomorphic_to_target: stages
            .iter()
            .filter(|(s, _)| *s == SubsetStage::IsomorphicToTarget)
            .count() as u64,
    };
    let found = stages.into_iter().filter_map(|(_, c)| c).collect();
    Ok(Ok((search, found)))
}

fn examine(
    engine: &ChromaticEngine,
    target: &Target,
    case: &CandidateCase,
    host: &Host,
    host_edges: &[(usize, usize)],
    kv: &LabeledGraph,
    mask: u128,
) -> Result<(SubsetStage, Option<Counterexample>)> {
    let v = &case.v;
    let edges: Vec<(usize, usize)> = (0..host_edges.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| host_edges[i])
        .collect();

    if xi_stats_host(v, host, &edges).delta_i3 != case.delta_i3_required {
        return Ok((SubsetStage::FailedI3, None));
    }
    let mut h = kv.clone();
    for &(a, b) in &edges {
        h.remove_edge(a, b);
    }
    let t = v.len();
    if h.chromatic_number() != t {
        return Ok((SubsetStage::FailedChi, None));
    }
    // pt(H, t) = 1 is necessary for equivalence with K(u) and is what makes
    // the census below equal to Δpt.
    if !destruction_bound_holds_host(host, &edges) {
        return Ok((SubsetStage::FailedDestruction, None));
    }
    let census = census_range(host, &edges, 1, 1u64 << edges.len());
    if BigInt::from(census.total_interesting) != case.delta_pt_required {
        return Ok((SubsetStage::FailedPt, None));
    }
    let poly = engine.polynomial(&h)?;
    if poly != target.poly {
        return Ok((SubsetStage::FailedPolynomial, None));
    }
    // Invariants read off the polynomial must agree with the target.
    assert_eq!(h.vertex_count(), target.graph.vertex_count());
    assert_eq!(h.edge_count() as u64, target.edges);
    assert_eq!(h.triangle_count(), target.i3);
    assert_eq!(engine.pt_invariant(&h)?, target.pt);
    if isomorphic(&h, &target.graph) {
        return Ok((SubsetStage::IsomorphicToTarget, None));
    }
    let e = EdgeSet::new(v, edges).expect("host edges");
    debug_assert_eq!(&e.complement_graph(), &h.clone().with_parts(v.part_of()));
    Ok((
        SubsetStage::Counterexample,
        Some(Counterexample {
            v: Some(v.clone()),
            edges: Some(e.to_edge_list_string()),
            graph6: emit_graph6(&h),
        }),
    ))
}
