//! Chromatic-uniqueness verification for `K(u)`.
//!
//! Any `H` chromatically equivalent to `K(u)` with `t = |u|` parts has
//! `χ(H) = t`, so `H = K(v) \ E` for some `v` with `t` parts and
//! `|E| = m(K(v)) − m(K(u))`. [`schema_verify`] searches over those `(v, E)`;
//! [`bruteforce_verify`] compares against an externally enumerated list of
//! all graphs on `n` vertices.

mod brute;
mod case_study;
mod orbits;
mod schema;

use num_bigint::BigInt;
use serde::Serialize;

use crate::lattice::elementary_transformations;
use crate::partition::{partitions_with_length, Partition};

pub use brute::bruteforce_verify;
pub use case_study::{case_study, case_target, CaseRow, CaseStudy, GarlandBounds};
pub use orbits::{all_edge_subsets, edge_subset_orbits, host_edge_list, orbit_key, OrbitGuard};
pub use schema::{schema_verify, schema_verify_with, subset_stages, SubsetStage};

/// Default cap on orbit representatives per candidate and level.
pub const DEFAULT_ORBIT_GUARD: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PruneReason {
    /// `Δpt` lies outside `[|E|, 2^{|E|} − 1]`.
    Lemma1,
    /// `v` is one elementary transformation below `u` and `u_t ≥ 2`.
    OneStep,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CandidateCase {
    pub v: Partition,
    pub edge_deficit: u64,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub delta_pt_required: BigInt,
    pub delta_i3_required: i64,
    pub pruned_by: Option<PruneReason>,
}

/// Admissible range of `Δpt(H, K(v))` for `|E| = k`: every single edge is an
/// interesting garland, and at most every nonempty subset of `E` is one.
pub fn lemma1_window(k: u64) -> (BigInt, BigInt) {
    (BigInt::from(k), (BigInt::from(1) << k) - 1)
}

/// `true` iff `v` is obtained from `u` by one elementary transformation and
/// the last part of `u` is at least 2. Such `K(v)` and `K(u)` have
/// `|E| = m(K(v)) − m(K(u))` small enough that no `K(v) \ E` matches `K(u)`.
pub fn one_step_prunable(v: &Partition, u: &Partition) -> bool {
    u.parts().last().is_some_and(|&last| last >= 2) && elementary_transformations(u).contains(v)
}

/// Every partition `v` of `n` with `t` parts and more edges than `K(u)`,
/// most edges first.
pub fn candidate_partitions(u: &Partition) -> Vec<CandidateCase> {
    let m_u = u.edge_count();
    let pt_u = u.pt_closed_form();
    let i3_u = u.triangle_count() as i64;
    let mut out: Vec<CandidateCase> = partitions_with_length(u.n(), u.len() as u32)
        .into_iter()
        .filter(|v| v.edge_count() > m_u)
        .map(|v| {
            let k = v.edge_count() - m_u;
            let delta_pt = &pt_u - v.pt_closed_form();
            let (lo, hi) = lemma1_window(k);
            let pruned_by = if one_step_prunable(&v, u) {
                Some(PruneReason::OneStep)
            } else if delta_pt < lo || delta_pt > hi {
                Some(PruneReason::Lemma1)
            } else {
                None
            };
            CandidateCase {
                edge_deficit: k,
                delta_pt_required: delta_pt,
                delta_i3_required: v.triangle_count() as i64 - i3_u,
                pruned_by,
                v,
            }
        })
        .collect();
    out.sort_by(|a, b| b.edge_deficit.cmp(&a.edge_deficit).then_with(|| b.v.cmp(&a.v)));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Schema,
    Bruteforce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    UniqueAtScope,
    Counterexample,
    Incomplete,
}

impl Verdict {
    /// Process exit status for this verdict.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::UniqueAtScope => 0,
            Verdict::Counterexample => 1,
            Verdict::Incomplete => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GuardTrip {
    pub candidate: Option<Partition>,
    pub what: String,
    pub value: u64,
    pub limit: u64,
}

/// A graph with the polynomial of `K(u)` that is not isomorphic to it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    /// Host `K(v)` and deleted edges, for schema results.
    pub v: Option<Partition>,
    pub edges: Option<String>,
    pub graph6: String,
}

/// Per-candidate filter counts; each counter is the number of subsets that
/// passed that stage and every earlier one.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CandidateSearch {
    pub v: Option<Partition>,
    pub edge_deficit: u64,
    pub raw_subsets: u64,
    pub subsets_examined: u64,
    pub surviving_i3: u64,
    pub surviving_chi: u64,
    pub surviving_destruction: u64,
    pub surviving_pt: u64,
    pub surviving_polynomial: u64,
    pub isomorphic_to_target: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyOptions {
    pub orbit_guard: u64,
    /// Reduce subsets modulo `Aut(K(v))`; off means plain enumeration.
    pub symmetry_reduction: bool,
    /// Also search candidates pruned by arithmetic.
    pub search_pruned: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            orbit_guard: DEFAULT_ORBIT_GUARD,
            symmetry_reduction: true,
            search_pruned: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub method: Method,
    pub target: Partition,
    pub candidates: Vec<CandidateCase>,
    pub searches: Vec<CandidateSearch>,
    /// Hosts `K(v) ≠ K(u)` with as many edges as `K(u)`, compared directly.
    pub equal_edge_hosts_checked: u64,
    pub subsets_examined: u64,
    #[serde(rename = "subsets_surviving_I3")]
    pub subsets_surviving_i3: u64,
    pub subsets_surviving_pt: u64,
    pub polynomial_matches: u64,
    pub counterexamples: Vec<Counterexample>,
    pub guard_tripped: Option<GuardTrip>,
    pub verdict: Verdict,
}

impl VerificationReport {
    fn finish(mut self) -> Self {
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self.verdict = if !self.counterexamples.is_empty() {
            Verdict::Counterexample
        } else if self.guard_tripped.is_some() {
            Verdict::Incomplete
        } else {
            Verdict::UniqueAtScope
        };
        self
    }

    pub fn candidate(&self, v: &Partition) -> Option<&CandidateCase> {
        self.candidates.iter().find(|c| &c.v == v)
    }

    pub fn search(&self, v: &Partition) -> Option<&CandidateSearch> {
        self.searches.iter().find(|s| s.v.as_ref() == Some(v))
    }
}
