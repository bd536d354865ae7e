//! Seeded random instance generators. One documented deterministic PRNG
//! (ChaCha8 keyed by a 64-bit seed) everywhere, so any reported violation
//! can be refound from its seed.

use num::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cocycle::{PmMatrix, UniformHypergraph};
use crate::combin::k_subsets;
use crate::geom::PointSet;
use crate::graph::Graph;
use crate::rational::Rational;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Random point set with rational coordinates. Half the draws use small
/// integer (lattice) coordinates, which produce frequent exact distance ties
/// and hence interesting diameter graphs; the rest use generic small
/// rationals.
pub fn random_point_set(rng: &mut ChaCha8Rng, n: usize, d: usize) -> PointSet {
    loop {
        let lattice = rng.gen_bool(0.5);
        let mut pts: Vec<Vec<Rational>> = Vec::with_capacity(n);
        for _ in 0..n {
            let p: Vec<Rational> = (0..d)
                .map(|_| {
                    if lattice {
                        rat(rng.gen_range(-4i64..=4), 1)
                    } else {
                        rat(rng.gen_range(-12i64..=12), rng.gen_range(1i64..=6))
                    }
                })
                .collect();
            pts.push(p);
        }
        pts.sort();
        pts.dedup();
        if pts.len() == n {
            // restore a scrambled but seed-deterministic order
            for i in (1..n).rev() {
                let j = rng.gen_range(0..=i);
                pts.swap(i, j);
            }
            return PointSet::new(d, pts).expect("distinct by construction");
        }
    }
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

pub fn random_pm_matrix(rng: &mut ChaCha8Rng, m: usize) -> PmMatrix {
    let entries: Vec<Vec<i8>> = (0..m)
        .map(|_| (0..m).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect())
        .collect();
    PmMatrix::new(entries).expect("entries are +-1")
}

/// Random k-uniform hypergraph with the given edge probability.
pub fn random_hypergraph(
    rng: &mut ChaCha8Rng,
    n: usize,
    k: usize,
    edge_prob: f64,
) -> UniformHypergraph {
    let edges: Vec<u64> = k_subsets(n, k)
        .into_iter()
        .filter(|_| rng.gen_bool(edge_prob))
        .collect();
    UniformHypergraph::new(n, k, edges).expect("valid by construction")
}
