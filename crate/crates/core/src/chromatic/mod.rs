//! Chromatic polynomials in the power and falling-factorial bases.

mod cache;
mod poly;

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::Zero;

pub use cache::{PolyCache, CACHE_ENV};
pub use poly::{stirling1_signed_table, stirling2_table, FactorialPolynomial, StandardPolynomial};

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::{bit, squeeze_out, BitIter, LabeledGraph};
use crate::partition::Partition;

/// Largest vertex count accepted by the polynomial routines.
pub const MAX_POLY_VERTICES: usize = 16;

/// Assignment budget for [`count_colorings_oracle`].
pub const ORACLE_ASSIGNMENT_LIMIT: u128 = 100_000_000;

/// Counts proper colourings with `x` colours by enumerating every one of the
/// `xⁿ` assignments. Shares no code with the polynomial routines.
pub fn count_colorings_oracle(g: &LabeledGraph, x: u32) -> Result<BigInt> {
    let n = g.vertex_count();
    let total = (x as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > ORACLE_ASSIGNMENT_LIMIT {
        return Err(Error::GuardExceeded {
            what: "colour assignments",
            value: total,
            limit: ORACLE_ASSIGNMENT_LIMIT,
        });
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }
    if x == 0 {
        return Ok(BigInt::zero());
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut colour = vec![0u32; n];
    let mut count = 0u64;
    loop {
        if edges.iter().all(|&(a, b)| colour[a] != colour[b]) {
            count += 1;
        }
        // odometer increment
        let mut i = 0;
        while i < n {
            colour[i] += 1;
            if colour[i] < x {
                break;
            }
            colour[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    Ok(BigInt::from(count))
}

/// Deletion–contraction engine with a canonical-form memo.
pub struct ChromaticEngine {
    cache: Arc<PolyCache>,
}

impl Default for ChromaticEngine {
    fn default() -> Self {
        Self::new(Arc::new(PolyCache::in_memory()))
    }
}

impl ChromaticEngine {
    pub fn new(cache: Arc<PolyCache>) -> Self {
        Self { cache }
    }

    /// Process-wide engine with an in-memory cache.
    pub fn global() -> &'static ChromaticEngine {
        static ENGINE: OnceLock<ChromaticEngine> = OnceLock::new();
        ENGINE.get_or_init(ChromaticEngine::default)
    }

    pub fn cache(&self) -> &PolyCache {
        &self.cache
    }

    pub fn polynomial(&self, g: &LabeledGraph) -> Result<StandardPolynomial> {
        check_guard(g)?;
        Ok((*self.poly_rows(g.rows().to_vec())).clone())
    }

    fn poly_rows(&self, mut rows: Vec<u64>) -> Arc<StandardPolynomial> {
        // Peel simplicial vertices: P(G) = (x − deg v) · P(G − v).
        let mut factors: Vec<i64> = Vec::new();
        while let Some(v) = simplicial_vertex(&rows) {
            factors.push(i64::from(rows[v].count_ones()));
            rows = remove_vertex(&rows, v);
        }
        let core = self.core_poly(rows);
        if factors.is_empty() {
            return core;
        }
        let mut p = (*core).clone();
        for k in factors {
            p = p.mul_linear(k);
        }
        Arc::new(p)
    }

    fn core_poly(&self, rows: Vec<u64>) -> Arc<StandardPolynomial> {
        let n = rows.len();
        let m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        if n == 0 {
            return Arc::new(StandardPolynomial::one());
        }
        if m == 0 {
            return Arc::new(StandardPolynomial::monomial(n));
        }
        if m == n * (n - 1) / 2 {
            return Arc::new(StandardPolynomial::falling_factorial(n));
        }
        let comps = components(&rows);
        if comps.len() > 1 {
            let p = comps.iter().fold(StandardPolynomial::one(), |acc, &mask| {
                acc.mul(&self.poly_rows(induced(&rows, mask)))
            });
            return Arc::new(p);
        }
        let g = LabeledGraph::from_rows(rows);
        let key = canonical_form(&g);
        if let Some(p) = self.cache.get(&key) {
            return p;
        }
        let rows = g.rows();
        let p = if 2 * m > n * (n - 1) / 2 {
            // Dense: P(G) = P(G + ab) + P(G / ab) for a non-edge ab.
            let (a, b) = dense_pivot(rows);
            let mut plus = rows.to_vec();
            plus[a] |= bit(b);
            plus[b] |= bit(a);
            self.poly_rows(plus).add(&self.poly_rows(contract(rows, a, b)))
        } else {
            // Sparse: P(G) = P(G − ab) − P(G / ab) for an edge ab.
            let (a, b) = sparse_pivot(rows);
            let mut minus = rows.to_vec();
            minus[a] &= !bit(b);
            minus[b] &= !bit(a);
            self.poly_rows(minus).sub(&self.poly_rows(contract(rows, a, b)))
        };
        let p = Arc::new(p);
        self.cache.insert(key, Arc::clone(&p));
        p
    }

    pub fn zykov_coefficients(&self, g: &LabeledGraph) -> Result<FactorialPolynomial> {
        Ok(self.polynomial(g)?.to_factorial())
    }

    pub fn pt_invariant(&self, g: &LabeledGraph) -> Result<BigInt> {
        Ok(self.zykov_coefficients(g)?.pt())
    }

    pub fn chromatically_equivalent(&self, g: &LabeledGraph, h: &LabeledGraph) -> Result<bool> {
        if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
            check_guard(g)?;
            check_guard(h)?;
            return Ok(false);
        }
        Ok(self.polynomial(g)? == self.polynomial(h)?)
    }
}

fn check_guard(g: &LabeledGraph) -> Result<()> {
    if g.vertex_count() > MAX_POLY_VERTICES {
        return Err(Error::GuardExceeded {
            what: "vertex count",
            value: g.vertex_count() as u128,
            limit: MAX_POLY_VERTICES as u128,
        });
    }
    Ok(())
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        bit(n) - 1
    }
}

fn simplicial_vertex(rows: &[u64]) -> Option<usize> {
    (0..rows.len()).find(|&v| {
        let nb = rows[v];
        BitIter(nb).all(|w| (rows[w] | bit(w)) & nb == nb)
    })
}

fn remove_vertex(rows: &[u64], v: usize) -> Vec<u64> {
    rows.iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, &r)| squeeze_out(r, v))
        .collect()
}

/// Merges `b` into `a` and drops `b`.
fn contract(rows: &[u64], a: usize, b: usize) -> Vec<u64> {
    let mut r = rows.to_vec();
    let merged = (r[a] | r[b]) & !bit(a) & !bit(b);
    for w in BitIter(r[b]) {
        r[w] = (r[w] & !bit(b)) | bit(a);
    }
    r[a] = merged;
    for w in BitIter(merged) {
        r[w] |= bit(a);
    }
    remove_vertex(&r, b)
}

fn components(rows: &[u64]) -> Vec<u64> {
    let mut left = full_mask(rows.len());
    let mut out = Vec::new();
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let next = BitIter(frontier).fold(0u64, |m, v| m | rows[v]) & !seen;
            seen |= next;
            frontier = next;
        }
        out.push(seen);
        left &= !seen;
    }
    out
}

fn induced(rows: &[u64], mask: u64) -> Vec<u64> {
    let verts: Vec<usize> = BitIter(mask).collect();
    verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| rows[v] & bit(w) != 0)
                .fold(0u64, |acc, (j, _)| acc | bit(j))
        })
        .collect()
}

fn sparse_pivot(rows: &[u64]) -> (usize, usize) {
    let deg = |v: usize| rows[v].count_ones();
    let a = (0..rows.len()).max_by_key(|&v| (deg(v), std::cmp::Reverse(v))).unwrap();
    let b = BitIter(rows[a])
        .max_by_key(|&w| (deg(w), std::cmp::Reverse(w)))
        .unwrap();
    (a, b)
}

fn dense_pivot(rows: &[u64]) -> (usize, usize) {
    let n = rows.len();
    let all = full_mask(n);
    let non = |v: usize| all & !rows[v] & !bit(v);
    let deg = |v: usize| rows[v].count_ones();
    let a = (0..n)
        .filter(|&v| non(v) != 0)
        .max_by_key(|&v| (deg(v), std::cmp::Reverse(v)))
        .unwrap();
    let b = BitIter(non(a)).max_by_key(|&w| (deg(w), std::cmp::Reverse(w))).unwrap();
    (a, b)
}

pub fn chromatic_polynomial(g: &LabeledGraph) -> Result<StandardPolynomial> {
    ChromaticEngine::global().polynomial(g)
}

/// `pt(G, i)` for every `i`, by basis conversion from the chromatic polynomial.
pub fn zykov_coefficients(g: &LabeledGraph) -> Result<FactorialPolynomial> {
    ChromaticEngine::global().zykov_coefficients(g)
}

/// `pt(G) = pt(G, χ + 1)`.
pub fn pt_invariant(g: &LabeledGraph) -> Result<BigInt> {
    ChromaticEngine::global().pt_invariant(g)
}

pub fn pt_closed_form(u: &Partition) -> BigInt {
    u.pt_closed_form()
}

pub fn chromatically_equivalent(g: &LabeledGraph, h: &LabeledGraph) -> Result<bool> {
    ChromaticEngine::global().chromatically_equivalent(g, h)
}

/// `pt(G, i)` by direct dynamic programming over vertex subsets: the number of
/// partitions of `V(G)` into `i` independent sets. Independent of the
/// deletion–contraction path.
pub fn zykov_by_enumeration(g: &LabeledGraph) -> Result<FactorialPolynomial> {
    check_guard(g)?;
    let n = g.vertex_count();
    let rows = g.rows();
    let size = 1usize << n;
    let mut independent = vec![false; size];
    independent[0] = true;
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        independent[s] = independent[rest] && (rows[low] & rest as u64) == 0;
    }
    // table[s][k] = partitions of s into k independent sets
    let mut table = vec![0u64; size * (n + 1)];
    table[0] = 1;
    for s in 1..size {
        let low = s.trailing_zeros() as usize;
        let lowbit = 1usize << low;
        let others = s & !lowbit;
        let free = others & !(rows[low] as usize);
        // iterate over submasks t of free; the block is t ∪ {low}
        let mut t = free;
        loop {
            if independent[t] {
                let block = t | lowbit;
                let rest = s & !block;
                for k in 1..=n {
                    let prev = table[rest * (n + 1) + k - 1];
                    if prev != 0 {
                        table[s * (n + 1) + k] += prev;
                    }
                }
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & free;
        }
    }
    let all = size - 1;
    let coeffs = (0..=n).map(|k| BigInt::from(table[all * (n + 1) + k])).collect();
    Ok(FactorialPolynomial::from_coeffs(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kp(s: &str) -> LabeledGraph {
        LabeledGraph::complete_multipartite(&s.parse::<Partition>().unwrap())
    }

    fn sp(c: &[i64]) -> StandardPolynomial {
        StandardPolynomial::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn fac(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(count_colorings_oracle(&kp("1,1,1"), 3).unwrap(), BigInt::from(6));
        assert_eq!(count_colorings_oracle(&kp("2,2"), 2).unwrap(), BigInt::from(2));
        assert_eq!(count_colorings_oracle(&kp("3,3"), 0).unwrap(), BigInt::from(0));
        assert!(matches!(
            count_colorings_oracle(&LabeledGraph::empty(12), 10),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(chromatic_polynomial(&kp("1,1,1")).unwrap(), sp(&[0, 2, -3, 1]));
        assert_eq!(chromatic_polynomial(&LabeledGraph::empty(2)).unwrap(), sp(&[0, 0, 1]));
        let c4 = chromatic_polynomial(&kp("2,2")).unwrap();
        assert_eq!(c4, sp(&[0, -3, 6, -4, 1]));
        assert_eq!(c4.eval(2), BigInt::from(2));
        assert!(matches!(
            chromatic_polynomial(&LabeledGraph::empty(17)),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn zykov_examples() {
        assert_eq!(zykov_coefficients(&kp("1,1,1")).unwrap().coeffs(), fac(&[0, 0, 0, 1]));
        assert_eq!(
            zykov_coefficients(&LabeledGraph::empty(3)).unwrap().coeffs(),
            fac(&[0, 1, 3, 1])
        );
        let c4 = zykov_coefficients(&kp("2,2")).unwrap();
        assert_eq!(c4.coeffs(), fac(&[0, 0, 1, 2, 1]));
        assert_eq!(c4.chi(), 2);
        assert_eq!(zykov_by_enumeration(&kp("2,2")).unwrap(), c4);
    }

    #[test]
    fn pt_examples() {
        assert_eq!(pt_invariant(&kp("5,4,3")).unwrap(), BigInt::from(25));
        assert_eq!(pt_invariant(&kp("4,4,4")).unwrap(), BigInt::from(21));
        assert_eq!(pt_invariant(&kp("2,2")).unwrap(), BigInt::from(2));
    }

    #[test]
    fn equivalence_examples() {
        let c4 = kp("2,2");
        let p4 = LabeledGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(chromatically_equivalent(&c4, &c4).unwrap());
        assert!(!chromatically_equivalent(&c4, &p4).unwrap());
        let k33 = kp("3,3");
        let relabeled = LabeledGraph::from_edges(6, &k33.edges().map(|(a, b)| (5 - a, 5 - b)).collect::<Vec<_>>());
        assert!(chromatically_equivalent(&k33, &relabeled).unwrap());
        // trees on four vertices share x(x-1)^3
        let star = kp("3,1");
        assert!(chromatically_equivalent(&star, &p4).unwrap());
    }

    #[test]
    fn contraction_merges_neighbourhoods() {
        // path 0-1-2 contracted along 0-1 is a single edge
        let rows = LabeledGraph::from_edges(3, &[(0, 1), (1, 2)]).rows().to_vec();
        let c = contract(&rows, 0, 1);
        assert_eq!(c, vec![0b10, 0b01]);
    }
}
