//! Integer partitions with a fixed number of positive parts.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Indexes the complete multipartite graph `K(u)`: part `i` holds `parts[i]`
/// vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let shown = || parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
        if parts.is_empty() {
            return Err(Error::MalformedPartition {
                input: String::new(),
                reason: "no parts".into(),
            });
        }
        if parts.contains(&0) {
            return Err(Error::MalformedPartition {
                input: shown(),
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedPartition {
                input: shown(),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Self { parts })
    }

    /// Sorts and strips zeros before validating.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of edges of `K(u)`: `(n² − Σ u_i²) / 2`.
    pub fn edge_count(&self) -> u64 {
        let n = u64::from(self.n());
        let squares: u64 = self.parts.iter().map(|&p| u64::from(p) * u64::from(p)).sum();
        (n * n - squares) / 2
    }

    /// Number of triangles of `K(u)`, the third elementary symmetric sum of the parts.
    pub fn triangle_count(&self) -> u64 {
        // e1, e2, e3 accumulated left to right.
        let (mut e1, mut e2, mut e3) = (0u64, 0u64, 0u64);
        for &p in &self.parts {
            let p = u64::from(p);
            e3 += e2 * p;
            e2 += e1 * p;
            e1 += p;
        }
        e3
    }

    /// `pt(K(u)) = Σ 2^{u_i − 1} − t`.
    pub fn pt_closed_form(&self) -> BigInt {
        let sum: BigInt = self.parts.iter().map(|&p| BigInt::from(1u8) << (p as usize - 1)).sum();
        sum - BigInt::from(self.parts.len())
    }

    /// First vertex index of each part when vertices are numbered part by part.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0usize;
        self.parts
            .iter()
            .map(|&p| {
                let start = acc;
                acc += p as usize;
                start
            })
            .collect()
    }

    /// Part index of every vertex, numbered part by part.
    pub fn part_of(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| std::iter::repeat_n(i, p as usize))
            .collect()
    }

    pub(crate) fn prefix_sums(&self, len: usize) -> Vec<u64> {
        let mut acc = 0u64;
        (0..len)
            .map(|i| {
                acc += u64::from(self.parts.get(i).copied().unwrap_or(0));
                acc
            })
            .collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let malformed = |reason: String| Error::MalformedPartition {
            input: s.to_string(),
            reason,
        };
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        if trimmed.is_empty() {
            return Err(malformed("empty".into()));
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|e| malformed(format!("`{}`: {e}", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts).map_err(|e| match e {
            Error::MalformedPartition { reason, .. } => malformed(reason),
            other => other,
        })
    }
}

/// All partitions of `n` with exactly `t` positive parts, in decreasing
/// lexicographic order.
pub fn partitions_with_length(n: u32, t: u32) -> Vec<Partition> {
    fn rec(remaining: u32, slots: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if slots == 0 {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
            }
            return;
        }
        // Each remaining slot needs at least 1.
        if remaining < slots {
            return;
        }
        let hi = max.min(remaining - (slots - 1));
        let lo = remaining.div_ceil(slots);
        for p in (lo..=hi).rev() {
            cur.push(p);
            rec(remaining - p, slots - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if t == 0 || n < t {
        return out;
    }
    rec(n, t, n, &mut Vec::with_capacity(t as usize), &mut out);
    out
}

/// All partitions of `n`, every length.
pub fn all_partitions(n: u32) -> Vec<Partition> {
    (1..=n).flat_map(|t| partitions_with_length(n, t)).collect()
}
