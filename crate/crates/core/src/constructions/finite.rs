use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::family::{Family, FamilySpec};
use super::{
    clique_plus_isolated_blocks, g0_blocks, g2_blocks, pr_extremal_blocks, s12_blocks, s23_blocks,
};
use crate::boundary::{delta_a, h_a3_inverse};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graphon::blow_up;
use crate::numeric::floor_count;

/// Smallest vertex count accepted by the finite realizations.
pub const MIN_VERTICES: usize = 8;

/// Floor-based part sizes for block masses; the last part absorbs the
/// leftover vertices.
pub(crate) fn part_sizes(masses: &[f64], n: usize) -> Vec<usize> {
    let mut sizes: Vec<usize> = masses[..masses.len() - 1]
        .iter()
        .map(|m| floor_count(m * n as f64))
        .collect();
    let used: usize = sizes.iter().sum();
    sizes.push(n.saturating_sub(used));
    sizes
}

fn check_n(n: usize) -> Result<()> {
    if n < MIN_VERTICES {
        return Err(Error::InvalidParams(format!(
            "n = {n} is too small for a construction; need n >= {MIN_VERTICES}"
        )));
    }
    Ok(())
}

/// Disjoint cliques plus a biregular circulant bipartite graph between the
/// first two.
fn linked_cliques(a: usize, d: usize, c: usize, e: usize) -> Graph {
    let n = 2 * a + c + e;
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    let clique = |start: usize, len: usize, adj: &mut Vec<Vec<u32>>| {
        for u in start..start + len {
            for v in start..start + len {
                if u != v {
                    adj[u].push(v as u32);
                }
            }
        }
    };
    clique(0, a, &mut adj);
    clique(a, a, &mut adj);
    clique(2 * a, c, &mut adj);
    clique(2 * a + c, e, &mut adj);
    // vertex i of A sees B[i], B[i+1], ..., B[i+d-1] (indices mod |B|)
    for i in 0..a {
        for t in 0..d {
            let j = a + (i + t) % a;
            adj[i].push(j as u32);
            adj[j].push(i as u32);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Graph::from_sorted_adjacency(adj)
}

pub(crate) fn g0_graph_any(x: f64, n: usize, seed: u64) -> Result<Graph> {
    let (masses, probs) = g0_blocks(x)?;
    if (1.0 / 16.0..1.0 / 9.0).contains(&x) {
        let sigma = h_a3_inverse(x)?;
        let delta = delta_a(sigma)?;
        let a = floor_count((1.0 - 2.0 * sigma) * n as f64 / 2.0);
        let rest = n - 2 * a;
        let d = floor_count(delta * a as f64).min(a);
        return Ok(linked_cliques(a, d, rest / 2, rest - rest / 2));
    }
    Ok(blow_up(&part_sizes(&masses, n), &probs, seed))
}

/// Finite `G_0(n, x)`. The cross-linked cliques of the middle regime are
/// joined by a circulant, so each vertex of `A` has exactly
/// `⌊δ_A(σ)|B|⌋` neighbours in `B` and vice versa. The regime with
/// fractional densities draws its edges from `seed`; the others ignore it.
pub fn g0_graph(x: f64, n: usize, seed: u64) -> Result<Graph> {
    check_n(n)?;
    g0_graph_any(x, n, seed)
}

/// Adds `u` vertices adjacent to everything.
fn with_universal(g: &Graph, u: usize) -> Graph {
    let inner = g.n();
    let n = inner + u;
    let mut adj: Vec<Vec<u32>> = Vec::with_capacity(n);
    for v in 0..inner {
        let mut list = g.neighbors(v).to_vec();
        list.extend((inner..n).map(|w| w as u32));
        adj.push(list);
    }
    for v in inner..n {
        adj.push((0..n).filter(|&w| w != v).map(|w| w as u32).collect());
    }
    Graph::from_sorted_adjacency(adj)
}

/// Finite graph for a family specification.
pub fn realize(spec: &FamilySpec) -> Result<Graph> {
    let n = spec
        .n
        .ok_or_else(|| Error::InvalidParams("a vertex count n is required".into()))?;
    check_n(n)?;
    spec.check_names()?;
    let seed = spec.seed.unwrap_or(0);
    let get = |name: &str| spec.param(name);
    let (masses, probs) = match spec.family {
        Family::G0 => return g0_graph_any(get("x")?, n, seed),
        Family::G1 => {
            let a = get("a")?;
            let x = get("x")?;
            super::g1_graphon(a, x)?;
            let u = floor_count(a * n as f64).min(n);
            let inner = g0_graph_any(x, n - u, seed)?;
            return Ok(with_universal(&inner, u));
        }
        Family::G2 => g2_blocks(get("a")?, get("p")?)?,
        Family::TwoBlockS12 => s12_blocks(get("a")?, get("p")?)?,
        Family::MultipartiteS23 => s23_blocks(get("a")?, get("b")?)?,
        Family::PRExtremal => pr_extremal_blocks(get("de")?)?,
        Family::CliquePlusIsolated => {
            clique_plus_isolated_blocks(get("a")?, spec.flag("complement")?)?
        }
    };
    Ok(blow_up(&part_sizes(&masses, n), &probs, seed))
}
