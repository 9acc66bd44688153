//! Garlands over a deleted edge set `E ⊆ edges(K(v))`.
//!
//! An E-subgraph is a complete multipartite subgraph of `K(v)` whose parts
//! each sit inside one part of `K(v)` and whose edges all lie in `E`. A
//! garland is a set of vertex-disjoint E-subgraphs; it is determined by its
//! edge aggregate, so garlands are enumerated as edge subsets of `E`
//! (bit `i` of a mask selects `E.edges()[i]`).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{bit, BitIter, EdgeSet};
use crate::partition::Partition;

/// Largest `|E|` accepted by the subset enumerations.
pub const MAX_CENSUS_EDGES: usize = 24;

/// `|E|` above which the all-subsets form of the uncontinuable-subset bound is skipped.
pub const MAX_UNCONTINUABLE_CHECK_EDGES: usize = 12;

#[derive(Debug, Clone)]
pub(crate) struct Host {
    part_of: Vec<usize>,
    part_masks: Vec<u64>,
}

impl Host {
    pub(crate) fn new(v: &Partition) -> Self {
        let part_of = v.part_of();
        let mut part_masks = vec![0u64; v.len()];
        for (x, &p) in part_of.iter().enumerate() {
            part_masks[p] |= bit(x);
        }
        Self { part_of, part_masks }
    }

    fn part_sizes_in(&self, verts: u64) -> Vec<u32> {
        self.part_masks
            .iter()
            .map(|&m| (m & verts).count_ones())
            .filter(|&c| c > 0)
            .collect()
    }

    fn destroyed(&self, covered: u64) -> Vec<usize> {
        self.part_masks
            .iter()
            .enumerate()
            .filter(|&(_, &m)| m & covered == m)
            .map(|(i, _)| i)
            .collect()
    }

    pub(crate) fn destroyed_count(&self, covered: u64) -> usize {
        self.part_masks.iter().filter(|&&m| m & covered == m).count()
    }
}

/// Components of the graph spanned by the selected edges, as
/// `(vertex mask, edge count)`, or `None` when some component is not an
/// E-subgraph.
fn decompose(host: &Host, edges: &[(usize, usize)], mask: u64, out: &mut Vec<(u64, u32)>) -> bool {
    out.clear();
    let mut adj = [0u64; 64];
    let mut touched = 0u64;
    for i in BitIter(mask) {
        let (a, b) = edges[i];
        adj[a] |= bit(b);
        adj[b] |= bit(a);
        touched |= bit(a) | bit(b);
    }
    let mut left = touched;
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let next = BitIter(frontier).fold(0u64, |m, v| m | adj[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        left &= !seen;
        let degree_sum: u32 = BitIter(seen).map(|v| adj[v].count_ones()).sum();
        let m = degree_sum / 2;
        // complete multipartite with parts C ∩ V_i iff every cross pair is present
        let s = seen.count_ones();
        let sq: u32 = host.part_masks.iter().map(|&pm| (pm & seen).count_ones().pow(2)).sum();
        if m != (s * s - sq) / 2 {
            return false;
        }
        out.push((seen, m));
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Shape {
    pub cardinality: u32,
    pub covered: u64,
}

pub(crate) fn shape(host: &Host, edges: &[(usize, usize)], mask: u64, buf: &mut Vec<(u64, u32)>) -> Option<Shape> {
    if !decompose(host, edges, mask, buf) {
        return None;
    }
    Some(Shape {
        cardinality: buf.len() as u32,
        covered: buf.iter().fold(0, |acc, &(v, _)| acc | v),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ESubgraph {
    /// Vertex sets, one per occupied part of `K(v)`, in part order.
    pub parts: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl ESubgraph {
    /// Part sizes sorted descending, e.g. `[2, 1]` for `K(2,1)`.
    pub fn part_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.parts.iter().map(Vec::len).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Garland {
    pub members: Vec<ESubgraph>,
    pub edge_aggregate: Vec<(usize, usize)>,
}

impl Garland {
    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    /// Members' part-size lists sorted descending and joined with `⊔`.
    pub fn type_string(&self) -> String {
        type_string(self.members.iter().map(ESubgraph::part_sizes).collect())
    }
}

fn type_string(mut members: Vec<Vec<usize>>) -> String {
    members.sort_unstable_by(|a, b| b.cmp(a));
    members
        .iter()
        .map(|s| {
            let inner: Vec<String> = s.iter().map(usize::to_string).collect();
            format!("K({})", inner.join(","))
        })
        .collect::<Vec<_>>()
        .join("⊔")
}

fn member_type(host: &Host, comps: &[(u64, u32)]) -> String {
    type_string(
        comps
            .iter()
            .map(|&(verts, _)| {
                let mut s: Vec<usize> = host.part_sizes_in(verts).into_iter().map(|c| c as usize).collect();
                s.sort_unstable_by(|a, b| b.cmp(a));
                s
            })
            .collect(),
    )
}

/// The garland whose edge aggregate is `eprime`, if its components are all E-subgraphs.
pub fn as_garland(v: &Partition, eprime: &EdgeSet) -> Option<Garland> {
    let host = Host::new(v);
    let edges = eprime.edges();
    if edges.is_empty() || edges.len() > 64 {
        return None;
    }
    let mask = if edges.len() == 64 {
        u64::MAX
    } else {
        bit(edges.len()) - 1
    };
    let mut comps = Vec::new();
    if !decompose(&host, edges, mask, &mut comps) {
        return None;
    }
    let members = comps
        .iter()
        .map(|&(verts, _)| {
            let parts = host
                .part_masks
                .iter()
                .map(|&pm| BitIter(pm & verts).collect::<Vec<_>>())
                .filter(|p| !p.is_empty())
                .collect();
            let member_edges = edges.iter().copied().filter(|&(a, _)| verts & bit(a) != 0).collect();
            ESubgraph {
                parts,
                edges: member_edges,
            }
        })
        .collect();
    Some(Garland {
        members,
        edge_aggregate: edges.to_vec(),
    })
}

/// Parts of `K(v)` every vertex of which lies in some member of `g`.
pub fn destroyed_parts(v: &Partition, g: &Garland) -> Vec<usize> {
    let host = Host::new(v);
    let covered = g
        .members
        .iter()
        .flat_map(|m| m.parts.iter().flatten())
        .fold(0u64, |acc, &x| acc | bit(x));
    host.destroyed(covered)
}

/// A garland of cardinality `p` is interesting when it destroys exactly `p − 1` parts.
pub fn is_interesting(v: &Partition, g: &Garland) -> bool {
    g.cardinality() >= 1 && destroyed_parts(v, g).len() == g.cardinality() - 1
}

fn check_census_guard(e: &EdgeSet) -> Result<()> {
    if e.len() > MAX_CENSUS_EDGES {
        return Err(Error::GuardExceeded {
            what: "|E| for garland enumeration",
            value: e.len() as u128,
            limit: MAX_CENSUS_EDGES as u128,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GarlandCensus {
    pub total_interesting: u64,
    /// All nonempty garlands, interesting or not.
    pub total_garlands: u64,
    /// `μ_k`: interesting garlands with a `k`-edge aggregate.
    pub mu: BTreeMap<usize, u64>,
    pub by_type: BTreeMap<String, u64>,
    /// Garlands of cardinality `p` destroying at least `p` parts.
    pub over_destroying: u64,
}

impl GarlandCensus {
    pub fn mu(&self, k: usize) -> u64 {
        self.mu.get(&k).copied().unwrap_or(0)
    }

    /// Associative, commutative merge for split enumerations.
    pub fn merge(mut self, other: &Self) -> Self {
        self.total_interesting += other.total_interesting;
        self.total_garlands += other.total_garlands;
        self.over_destroying += other.over_destroying;
        for (k, c) in &other.mu {
            *self.mu.entry(*k).or_default() += c;
        }
        for (k, c) in &other.by_type {
            *self.by_type.entry(k.clone()).or_default() += c;
        }
        self
    }
}

/// Census of all garlands whose aggregates are nonempty subsets of `E`.
pub fn interesting_census(v: &Partition, e: &EdgeSet) -> Result<GarlandCensus> {
    check_census_guard(e)?;
    let host = Host::new(v);
    Ok(census_range(&host, e.edges(), 1, 1u64 << e.len()))
}

pub(crate) fn census_range(host: &Host, edges: &[(usize, usize)], lo: u64, hi: u64) -> GarlandCensus {
    let mut census = GarlandCensus::default();
    let mut buf = Vec::new();
    for mask in lo..hi {
        let Some(s) = shape(host, edges, mask, &mut buf) else {
            continue;
        };
        census.total_garlands += 1;
        let d = host.destroyed_count(s.covered) as u32;
        if d >= s.cardinality {
            census.over_destroying += 1;
        }
        if d + 1 == s.cardinality {
            census.total_interesting += 1;
            *census.mu.entry(mask.count_ones() as usize).or_default() += 1;
            *census.by_type.entry(member_type(host, &buf)).or_default() += 1;
        }
    }
    census
}

/// Every nonempty edge aggregate that forms a garland, as masks over `E`.
pub fn garland_masks(v: &Partition, e: &EdgeSet) -> Result<Vec<u64>> {
    check_census_guard(e)?;
    let host = Host::new(v);
    let mut buf = Vec::new();
    Ok((1..(1u64 << e.len()))
        .filter(|&m| shape(&host, e.edges(), m, &mut buf).is_some())
        .collect())
}

/// `true` iff no garland of cardinality `p` destroys `p` or more parts.
///
/// Equivalent to `K(v) \ E` having exactly one partition into `t`
/// independent sets, which holds whenever it is chromatically equivalent to
/// some `K(u)` with `t` parts.
pub fn destruction_bound_holds(v: &Partition, e: &EdgeSet) -> Result<bool> {
    check_census_guard(e)?;
    let host = Host::new(v);
    Ok(destruction_bound_holds_host(&host, e.edges()))
}

pub(crate) fn destruction_bound_holds_host(host: &Host, edges: &[(usize, usize)]) -> bool {
    let mut buf = Vec::new();
    (1..(1u64 << edges.len())).all(|m| match shape(host, edges, m, &mut buf) {
        Some(s) => (host.destroyed_count(s.covered) as u32) < s.cardinality,
        None => true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartPairCount {
    pub i: usize,
    pub j: usize,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XiStats {
    pub xi1: u64,
    pub xi2: u64,
    pub xi3: u64,
    /// `e_{ij}` for `i < j`, zero entries omitted.
    pub e_between: Vec<PartPairCount>,
    /// `ξ₁ − ξ₂ − 2ξ₃`.
    pub delta_i3: i64,
}

impl XiStats {
    pub fn e(&self, i: usize, j: usize) -> u64 {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.e_between
            .iter()
            .find(|p| p.i == i && p.j == j)
            .map_or(0, |p| p.count)
    }
}

pub fn xi_stats(v: &Partition, e: &EdgeSet) -> XiStats {
    let host = Host::new(v);
    xi_stats_host(v, &host, e.edges())
}

pub(crate) fn xi_stats_host(v: &Partition, host: &Host, edges: &[(usize, usize)]) -> XiStats {
    let n = u64::from(v.n());
    let parts = v.parts();
    let mut between: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut adj = [0u64; 64];
    let mut xi1 = 0u64;
    for &(a, b) in edges {
        let (pa, pb) = (host.part_of[a], host.part_of[b]);
        xi1 += n - u64::from(parts[pa]) - u64::from(parts[pb]);
        *between.entry((pa.min(pb), pa.max(pb))).or_default() += 1;
        adj[a] |= bit(b);
        adj[b] |= bit(a);
    }
    let (mut xi2, mut xi3_times3) = (0u64, 0u64);
    for x in 0..host.part_of.len() {
        let nb: Vec<usize> = BitIter(adj[x]).collect();
        for (k, &y) in nb.iter().enumerate() {
            for &z in &nb[k + 1..] {
                if host.part_of[y] == host.part_of[z] {
                    continue;
                }
                if adj[y] & bit(z) != 0 {
                    xi3_times3 += 1;
                } else {
                    xi2 += 1;
                }
            }
        }
    }
    let xi3 = xi3_times3 / 3;
    XiStats {
        xi1,
        xi2,
        xi3,
        e_between: between
            .into_iter()
            .map(|((i, j), count)| PartPairCount { i, j, count })
            .collect(),
        delta_i3: xi1 as i64 - xi2 as i64 - 2 * xi3 as i64,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum EdgePairs {
    /// Some part of `K(v)` has fewer than three vertices.
    Inapplicable,
    Evaluated {
        mu2: u64,
        xi2: u64,
        xi3: u64,
        /// `μ₂ + ξ₂ + 3ξ₃`
        lhs: u64,
        /// `Σ C(d_i, 2)` over degrees of `⟨E⟩`
        rhs: u64,
        /// `C(|E|, 2)`
        bound: u64,
        holds: bool,
    },
}

pub fn edge_pairs_identity(v: &Partition, e: &EdgeSet) -> EdgePairs {
    if v.parts().iter().any(|&p| p < 3) {
        return EdgePairs::Inapplicable;
    }
    let host = Host::new(v);
    let edges = e.edges();
    let mut buf = Vec::new();
    let mut mu2 = 0u64;
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let mask = bit(i) | bit(j);
            if let Some(s) = shape(&host, edges, mask, &mut buf) {
                if host.destroyed_count(s.covered) as u32 + 1 == s.cardinality {
                    mu2 += 1;
                }
            }
        }
    }
    let xi = xi_stats_host(v, &host, edges);
    let mut degree = vec![0u64; host.part_of.len()];
    for &(a, b) in edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let rhs: u64 = degree.iter().map(|&d| d * d.saturating_sub(1) / 2).sum();
    let m = edges.len() as u64;
    let bound = m * m.saturating_sub(1) / 2;
    let lhs = mu2 + xi.xi2 + 3 * xi.xi3;
    EdgePairs::Evaluated {
        mu2,
        xi2: xi.xi2,
        xi3: xi.xi3,
        lhs,
        rhs,
        bound,
        holds: lhs == rhs && rhs <= bound,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundLemma {
    /// `N · 2^{|E|−|E₁|} − 1` for every `E₁ ⊆ E`.
    Uncontinuable,
    /// Triangle in `⟨E⟩`: `5 · 2^{|E|−3} − 1`.
    Triangle,
    /// A Ξ₂-subgraph: `3 · 2^{|E|−2} − 1`.
    Xi2,
    /// Two distinct Ξ₂-subgraphs `E₁, E₂`: `2^{|E|−1} + 2^{|E|−|E₁∪E₂|} − 1`.
    Xi2Pair,
    /// Two distinct Ξ₂-subgraphs: `2^{|E|−1} + 2^{|E|−3} − 1`.
    Xi2PairCorollary,
    /// A garland of type `K(2,1,1)`: `13 · 2^{|E|−5} − 1`.
    K211,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub lemma: BoundLemma,
    pub applicable: bool,
    /// Tightest bound among the instances of the hypothesis found in `E`.
    pub bound: Option<u64>,
    pub actual: u64,
    pub satisfied: Option<bool>,
    /// Largest number of continuable-outside subsets seen for the lemma's
    /// witness structure (triangle, Ξ₂, `K(2,1,1)` aggregate).
    pub max_continuable_outside: Option<u64>,
    /// Hypothesis instances examined.
    pub instances: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaSuite {
    pub edge_count: usize,
    pub total_garlands: u64,
    pub checks: Vec<BoundCheck>,
}

impl LemmaSuite {
    pub fn check(&self, lemma: BoundLemma) -> &BoundCheck {
        self.checks
            .iter()
            .find(|c| c.lemma == lemma)
            .expect("every lemma is reported")
    }

    pub fn all_satisfied(&self) -> bool {
        self.checks.iter().all(|c| c.satisfied != Some(false))
    }
}

/// Number of distinct traces `g ∩ E₁` over all garlands `g`, plus the empty set.
fn continuable_outside(garlands: &[u64], e1: u64) -> u64 {
    let mut traces: Vec<u64> = garlands.iter().map(|&g| g & e1).collect();
    traces.push(0);
    traces.sort_unstable();
    traces.dedup();
    traces.len() as u64
}

pub(crate) fn triangles_in(edges: &[(usize, usize)]) -> Vec<u64> {
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            for k in (j + 1)..edges.len() {
                let mut verts = [edges[i].0, edges[i].1, edges[j].0, edges[j].1, edges[k].0, edges[k].1];
                verts.sort_unstable();
                let distinct = verts.windows(2).filter(|w| w[0] != w[1]).count() + 1;
                // three edges on three vertices, each vertex of degree two
                if distinct == 3 && verts[0] == verts[1] && verts[2] == verts[3] && verts[4] == verts[5] {
                    out.push(bit(i) | bit(j) | bit(k));
                }
            }
        }
    }
    out
}

/// Edge pairs `{xy, xz}` of `E` with `y`, `z` in different parts and `yz ∉ E`.
pub(crate) fn xi2_subgraphs(host: &Host, edges: &[(usize, usize)]) -> Vec<u64> {
    let has = |a: usize, b: usize| edges.contains(&(a.min(b), a.max(b)));
    let mut out = Vec::new();
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let (y, z) = if a == c {
                (b, d)
            } else if a == d {
                (b, c)
            } else if b == c {
                (a, d)
            } else if b == d {
                (a, c)
            } else {
                continue;
            };
            if host.part_of[y] != host.part_of[z] && !has(y, z) {
                out.push(bit(i) | bit(j));
            }
        }
    }
    out
}

fn pow2(k: usize) -> u64 {
    1u64 << k
}

/// Evaluates the garland-count bounds whose hypotheses hold for `E`.
pub fn lemma_bound_suite(v: &Partition, e: &EdgeSet) -> Result<LemmaSuite> {
    check_census_guard(e)?;
    let host = Host::new(v);
    let edges = e.edges();
    let m = edges.len();
    let mut buf = Vec::new();
    let mut garlands = Vec::new();
    let mut k211 = Vec::new();
    for mask in 1..(1u64 << m) {
        if let Some(s) = shape(&host, edges, mask, &mut buf) {
            garlands.push(mask);
            if s.cardinality == 1 && member_type(&host, &buf) == "K(2,1,1)" {
                k211.push(mask);
            }
        }
    }
    let actual = garlands.len() as u64;
    let mut checks = Vec::new();

    let mut push = |lemma: BoundLemma, bounds: Vec<(u64, Option<u64>)>| {
        let applicable = !bounds.is_empty();
        let bound = bounds.iter().map(|b| b.0).min();
        checks.push(BoundCheck {
            lemma,
            applicable,
            bound,
            actual,
            satisfied: applicable.then(|| bounds.iter().all(|b| actual <= b.0)),
            max_continuable_outside: bounds.iter().filter_map(|b| b.1).max(),
            instances: bounds.len() as u64,
        });
    };

    let uncontinuable = if m <= MAX_UNCONTINUABLE_CHECK_EDGES {
        (0..(1u64 << m))
            .map(|e1| {
                let n = continuable_outside(&garlands, e1);
                (n * pow2(m - e1.count_ones() as usize) - 1, None)
            })
            .collect()
    } else {
        Vec::new()
    };
    push(BoundLemma::Uncontinuable, uncontinuable);

    let tri = triangles_in(edges);
    push(
        BoundLemma::Triangle,
        tri.iter()
            .map(|&t| (5 * pow2(m - 3) - 1, Some(continuable_outside(&garlands, t))))
            .collect(),
    );

    let xi2 = xi2_subgraphs(&host, edges);
    push(
        BoundLemma::Xi2,
        xi2.iter()
            .map(|&x| (3 * pow2(m - 2) - 1, Some(continuable_outside(&garlands, x))))
            .collect(),
    );
    let mut pairs = Vec::new();
    for (i, &a) in xi2.iter().enumerate() {
        for &b in &xi2[i + 1..] {
            let union = (a | b).count_ones() as usize;
            pairs.push((pow2(m - 1) + pow2(m - union) - 1, None));
        }
    }
    let corollary = if pairs.is_empty() {
        Vec::new()
    } else {
        vec![(pow2(m - 1) + pow2(m - 3) - 1, None)]
    };
    push(BoundLemma::Xi2Pair, pairs);
    push(BoundLemma::Xi2PairCorollary, corollary);

    push(
        BoundLemma::K211,
        k211.iter()
            .map(|&k| (13 * pow2(m - 5) - 1, Some(continuable_outside(&garlands, k))))
            .collect(),
    );

    Ok(LemmaSuite {
        edge_count: m,
        total_garlands: actual,
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SixEdgeVerdict {
    /// `⟨E⟩` is a coordinated `K(6,1)` with 63 interesting garlands.
    K61_63,
    AtMost33,
    OutOfHypothesis {
        reason: String,
    },
    /// Hypotheses hold but neither alternative does.
    Violated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SixEdgeOutcome {
    pub census: GarlandCensus,
    pub coordinated_k61: bool,
    #[serde(flatten)]
    pub verdict: SixEdgeVerdict,
}

pub fn six_edge_check(v: &Partition, e: &EdgeSet) -> Result<SixEdgeOutcome> {
    if e.len() != 6 {
        return Err(Error::NotSixEdges(e.len()));
    }
    let host = Host::new(v);
    let edges = e.edges();
    let census = census_range(&host, edges, 1, 1 << 6);
    let touched = edges.iter().fold(0u64, |acc, &(a, b)| acc | bit(a) | bit(b));
    let small_active = host
        .part_masks
        .iter()
        .any(|&pm| pm & touched != 0 && pm.count_ones() < 4);
    let mut buf = Vec::new();
    let whole = shape(&host, edges, (1 << 6) - 1, &mut buf);
    let coordinated_k61 = whole.is_some_and(|s| s.cardinality == 1) && member_type(&host, &buf) == "K(6,1)";
    let verdict = if small_active {
        SixEdgeVerdict::OutOfHypothesis {
            reason: "an active part has fewer than 4 vertices".into(),
        }
    } else if census.over_destroying > 0 {
        SixEdgeVerdict::OutOfHypothesis {
            reason: "a garland of cardinality p destroys p or more parts".into(),
        }
    } else if coordinated_k61 && census.total_interesting == 63 {
        SixEdgeVerdict::K61_63
    } else if !coordinated_k61 && census.total_interesting <= 33 {
        SixEdgeVerdict::AtMost33
    } else {
        SixEdgeVerdict::Violated
    };
    Ok(SixEdgeOutcome {
        census,
        coordinated_k61,
        verdict,
    })
}
