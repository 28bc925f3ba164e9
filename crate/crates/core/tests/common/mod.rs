#![allow(dead_code)]

use proptest::prelude::*;
use triprofile_core::{Graph, StepGraphon};

/// Random step graphon with 1 to 4 blocks; about a third of the density
/// entries are forced to 0 or 1.
pub fn step_graphon() -> impl Strategy<Value = StepGraphon> {
    (1usize..=4).prop_flat_map(|b| {
        let sizes = prop::collection::vec(0.05f64..1.0, b);
        let probs = prop::collection::vec(prop_oneof![Just(0.0), Just(1.0), 0.0f64..=1.0], b * b);
        (sizes, probs).prop_map(move |(s, p)| {
            let total: f64 = s.iter().sum();
            let sizes: Vec<f64> = s.iter().map(|v| v / total).collect();
            let mut m = vec![vec![0.0; b]; b];
            for i in 0..b {
                for j in i..b {
                    m[i][j] = p[i * b + j];
                    m[j][i] = p[i * b + j];
                }
            }
            StepGraphon::new(sizes, m).expect("valid graphon")
        })
    })
}

/// Erdős–Rényi style graph from explicit coin flips.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let w = StepGraphon::constant(p).unwrap();
    triprofile_core::graphon::sample_w_random_graph(&w, n, seed)
}

/// Brute-force census straight from the definition, independent of the
/// crate's oracle: classify every triple with `has_edge`.
pub fn census_by_definition(g: &Graph) -> [u64; 4] {
    let n = g.n();
    let mut c = [0u64; 4];
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                let e = g.has_edge(a, b) as usize
                    + g.has_edge(a, d) as usize
                    + g.has_edge(b, d) as usize;
                c[e] += 1;
            }
        }
    }
    c
}
