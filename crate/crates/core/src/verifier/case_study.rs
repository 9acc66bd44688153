//! Per-candidate arithmetic for the targets `K(q+3, q−1, q−2)` (`n = 3q`)
//! and `K(q+3, q, q−2)` (`n = 3q + 1`).

use num_bigint::BigInt;
use serde::Serialize;

use super::{schema_verify_with, CandidateSearch, PruneReason, Verdict, VerificationReport, VerifyOptions};
use crate::chromatic::ChromaticEngine;
use crate::error::{Error, Result};
use crate::partition::Partition;

/// The case-study target for `n ≡ residue (mod 3)`.
pub fn case_target(residue: u32, q: u32) -> Result<Partition> {
    if q < 4 {
        return Err(Error::UnsupportedQ(q));
    }
    match residue {
        0 => Partition::new(vec![q + 3, q - 1, q - 2]),
        1 => Partition::new(vec![q + 3, q, q - 2]),
        r => Err(Error::UnsupportedResidue(r)),
    }
}

/// Upper bounds on the number of garlands for `|E| = k` under each structural hypothesis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GarlandBounds {
    /// `2^k − 1`, any `E`.
    pub any: u64,
    /// `5 · 2^{k−3} − 1`, `⟨E⟩` contains a triangle.
    pub triangle: Option<u64>,
    /// `3 · 2^{k−2} − 1`, one Ξ₂-subgraph.
    pub xi2: Option<u64>,
    /// `2^{k−1} + 2^{k−3} − 1`, two Ξ₂-subgraphs.
    pub xi2_pair: Option<u64>,
    /// `13 · 2^{k−5} − 1`, a `K(2,1,1)` garland.
    pub k211: Option<u64>,
}

impl GarlandBounds {
    pub fn for_edges(k: u64) -> Self {
        let p = |e: u64| 1u64 << e;
        Self {
            any: p(k) - 1,
            triangle: (k >= 3).then(|| 5 * p(k - 3) - 1),
            xi2: (k >= 2).then(|| 3 * p(k - 2) - 1),
            xi2_pair: (k >= 3).then(|| p(k - 1) + p(k - 3) - 1),
            k211: (k >= 5).then(|| 13 * p(k - 5) - 1),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRow {
    pub v: Partition,
    pub edge_deficit: u64,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub delta_pt: BigInt,
    pub delta_i3: i64,
    /// `ξ₁` as a combination of the `e_ij`.
    pub xi1_formula: String,
    pub pruned_by: Option<PruneReason>,
    pub bounds: GarlandBounds,
    /// Observations from comparing `Δpt` with the bounds.
    pub remarks: Vec<String>,
    pub search: Option<CandidateSearch>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseStudy {
    pub residue: u32,
    pub q: u32,
    pub target: Partition,
    pub target_edges: u64,
    #[serde(serialize_with = "crate::report::ser_bigint")]
    pub target_pt: BigInt,
    pub target_i3: u64,
    pub rows: Vec<CaseRow>,
    pub report: VerificationReport,
    pub verdict: Verdict,
}

fn subscript(i: usize) -> String {
    i.to_string()
        .chars()
        .map(|c| char::from_u32(0x2080 + c.to_digit(10).unwrap()).unwrap())
        .collect()
}

/// `ξ₁ = Σ_{i<j} (n − v_i − v_j) e_ij`, e.g. `ξ₁ = 3e₁₂ + 4e₁₃ + 5e₂₃` for `(5,4,3)`.
pub fn xi1_formula(v: &Partition) -> String {
    let n = v.n();
    let p = v.parts();
    let mut terms = Vec::new();
    for i in 0..p.len() {
        for j in (i + 1)..p.len() {
            let c = n - p[i] - p[j];
            let coeff = if c == 1 { String::new() } else { c.to_string() };
            terms.push(format!("{coeff}e{}{}", subscript(i + 1), subscript(j + 1)));
        }
    }
    format!("ξ₁ = {}", terms.join(" + "))
}

fn remarks(k: u64, delta_pt: &BigInt, v: &Partition, b: &GarlandBounds) -> Vec<String> {
    let mut out = Vec::new();
    let above = |x: Option<u64>| x.is_some_and(|x| delta_pt > &BigInt::from(x));
    if delta_pt > &BigInt::from(b.any) {
        out.push(format!("Δpt = {delta_pt} > 2^{k} − 1 = {}", b.any));
        return out;
    }
    if above(b.triangle) {
        out.push(format!(
            "Δpt = {delta_pt} > {}: ⟨E⟩ is triangle-free",
            b.triangle.unwrap()
        ));
    }
    if above(b.xi2_pair) {
        out.push(format!(
            "Δpt = {delta_pt} > {}: at most one Ξ₂-subgraph",
            b.xi2_pair.unwrap()
        ));
    }
    if above(b.xi2) {
        out.push(format!("Δpt = {delta_pt} > {}: no Ξ₂-subgraph", b.xi2.unwrap()));
    }
    if above(b.k211) {
        out.push(format!("Δpt = {delta_pt} > {}: no K(2,1,1) garland", b.k211.unwrap()));
    }
    if k == 6 && v.parts().iter().all(|&x| x >= 4) {
        let allowed = delta_pt == &BigInt::from(63) || delta_pt <= &BigInt::from(33);
        if !allowed {
            out.push(format!("Δpt = {delta_pt} is neither 63 nor at most 33: six-edge bound"));
        }
    }
    out
}

pub fn case_study(engine: &ChromaticEngine, residue: u32, q: u32, opts: &VerifyOptions) -> Result<CaseStudy> {
    let target = case_target(residue, q)?;
    let report = schema_verify_with(engine, &target, opts)?;
    let rows = report
        .candidates
        .iter()
        .map(|c| {
            let bounds = GarlandBounds::for_edges(c.edge_deficit);
            CaseRow {
                v: c.v.clone(),
                edge_deficit: c.edge_deficit,
                delta_pt: c.delta_pt_required.clone(),
                delta_i3: c.delta_i3_required,
                xi1_formula: xi1_formula(&c.v),
                pruned_by: c.pruned_by,
                remarks: remarks(c.edge_deficit, &c.delta_pt_required, &c.v, &bounds),
                bounds,
                search: report.search(&c.v).cloned(),
            }
        })
        .collect();
    Ok(CaseStudy {
        residue,
        q,
        target_edges: target.edge_count(),
        target_pt: target.pt_closed_form(),
        target_i3: target.triangle_count(),
        target,
        rows,
        verdict: report.verdict,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets() {
        assert_eq!(case_target(0, 4).unwrap().to_string(), "7,3,2");
        assert_eq!(case_target(1, 4).unwrap().to_string(), "7,4,2");
        assert_eq!(case_target(0, 5).unwrap().to_string(), "8,4,3");
        assert_eq!(case_target(2, 4), Err(Error::UnsupportedResidue(2)));
        assert_eq!(case_target(0, 3), Err(Error::UnsupportedQ(3)));
    }

    #[test]
    fn formula_and_bounds() {
        assert_eq!(xi1_formula(&"5,4,3".parse().unwrap()), "ξ₁ = 3e₁₂ + 4e₁₃ + 5e₂₃");
        let b = GarlandBounds::for_edges(7);
        assert_eq!((b.triangle, b.xi2_pair, b.any), (Some(79), Some(79), 127));
        let b = GarlandBounds::for_edges(6);
        assert_eq!((b.xi2, b.k211), (Some(47), Some(25)));
    }

    #[test]
    fn remarks_for_known_cases() {
        let r = remarks(
            4,
            &BigInt::from(36),
            &"5,5,2".parse().unwrap(),
            &GarlandBounds::for_edges(4),
        );
        assert_eq!(r, ["Δpt = 36 > 2^4 − 1 = 15"]);
        let r = remarks(
            6,
            &BigInt::from(42),
            &"5,4,4".parse().unwrap(),
            &GarlandBounds::for_edges(6),
        );
        assert!(r.iter().any(|s| s.contains("six-edge")));
        let r = remarks(
            7,
            &BigInt::from(92),
            &"5,5,5".parse().unwrap(),
            &GarlandBounds::for_edges(7),
        );
        assert!(r.iter().any(|s| s.contains("> 79: ⟨E⟩ is triangle-free")));
        assert!(r.iter().any(|s| s.contains("> 79: at most one")));
    }
}
