//! Seeded generators for random `(v, E)` instances.

use rand::seq::index;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::EdgeSet;
use crate::partition::{partitions_with_length, Partition};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over partitions of `n` with exactly `t` parts. Panics if there are none.
pub fn random_partition<R: Rng>(rng: &mut R, n: u32, t: u32) -> Partition {
    let all = partitions_with_length(n, t);
    assert!(!all.is_empty(), "no partition of {n} with {t} parts");
    all[rng.gen_range(0..all.len())].clone()
}

/// All cross-part vertex pairs of `K(v)`, in lexicographic order.
pub fn host_edges(v: &Partition) -> Vec<(usize, usize)> {
    let part_of = v.part_of();
    let n = part_of.len();
    (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
        .filter(|&(a, b)| part_of[a] != part_of[b])
        .collect()
}

/// `k` distinct edges of `K(v)` chosen uniformly; `k` is clamped to the edge count.
pub fn random_edge_set<R: Rng>(rng: &mut R, v: &Partition, k: usize) -> EdgeSet {
    let all = host_edges(v);
    let k = k.min(all.len());
    let picked = index::sample(rng, all.len(), k).into_iter().map(|i| all[i]);
    EdgeSet::new(v, picked).expect("host edges are cross-part")
}

/// Random `(v, E)` with `t` parts, `t ≤ n ≤ max_n`, every part at least
/// `min_part`, and `1 ≤ |E| ≤ max_edges`.
pub fn random_instance<R: Rng>(
    rng: &mut R,
    t: u32,
    max_n: u32,
    min_part: u32,
    max_edges: usize,
) -> (Partition, EdgeSet) {
    let lo = t * min_part.max(1);
    assert!(lo <= max_n, "no host fits");
    let n = rng.gen_range(lo..=max_n);
    let pool: Vec<Partition> = partitions_with_length(n, t)
        .into_iter()
        .filter(|p| p.parts().iter().all(|&x| x >= min_part))
        .collect();
    let v = pool[rng.gen_range(0..pool.len())].clone();
    let k = rng.gen_range(1..=max_edges);
    let e = random_edge_set(rng, &v, k);
    (v, e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_instances() {
        let draw = |seed| {
            let mut rng = seeded(seed);
            (0..20)
                .map(|_| random_instance(&mut rng, 3, 12, 1, 6))
                .map(|(v, e)| (v.to_string(), e.to_edge_list_string()))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(11), draw(11));
        assert_ne!(draw(11), draw(12));
    }

    #[test]
    fn instances_respect_bounds() {
        let mut rng = seeded(3);
        for _ in 0..200 {
            let (v, e) = random_instance(&mut rng, 3, 12, 3, 6);
            assert!(v.n() <= 12 && v.len() == 3);
            assert!(v.parts().iter().all(|&p| p >= 3));
            assert!((1..=6).contains(&e.len()));
        }
        assert_eq!(host_edges(&"2,1".parse().unwrap()), vec![(0, 2), (1, 2)]);
    }
}
