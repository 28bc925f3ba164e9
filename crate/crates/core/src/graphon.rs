//! Step graphons: block weights plus a symmetric matrix of block densities.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::census::DensityVector;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::SeededRng;

/// A graphon constant on the products of finitely many blocks.
///
/// Block weights are positive and sum to one; `probs` is symmetric with
/// entries in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct StepGraphon {
    sizes: Vec<f64>,
    probs: Vec<Vec<f64>>,
}

impl StepGraphon {
    pub fn new(sizes: Vec<f64>, probs: Vec<Vec<f64>>) -> Result<Self> {
        let b = sizes.len();
        if b == 0 {
            return Err(Error::InvalidGraphon(
                "at least one block is required".into(),
            ));
        }
        for (i, &s) in sizes.iter().enumerate() {
            if !(s.is_finite() && s > 0.0) {
                return Err(Error::InvalidGraphon(format!(
                    "block size sizes[{i}] = {s} must be a positive real"
                )));
            }
        }
        let total: f64 = sizes.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidGraphon(format!(
                "block sizes sum to {total}, expected 1 (tolerance 1e-12)"
            )));
        }
        if probs.len() != b {
            return Err(Error::InvalidGraphon(format!(
                "probs has {} rows but there are {b} blocks",
                probs.len()
            )));
        }
        for (i, row) in probs.iter().enumerate() {
            if row.len() != b {
                return Err(Error::InvalidGraphon(format!(
                    "probs row {i} has {} entries, expected {b}",
                    row.len()
                )));
            }
            for (j, &p) in row.iter().enumerate() {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::InvalidGraphon(format!(
                        "probs[{i}][{j}] = {p} is outside [0, 1]"
                    )));
                }
                if probs[j][i] != p {
                    return Err(Error::InvalidGraphon(format!(
                        "probs is not symmetric at ({i}, {j}): {p} vs {}",
                        probs[j][i]
                    )));
                }
            }
        }
        Ok(Self { sizes, probs })
    }

    /// Builds a graphon from blocks that may have zero weight; such blocks
    /// are dropped. Sizes are renormalised against rounding drift.
    pub(crate) fn from_blocks(sizes: &[f64], probs: &[Vec<f64>]) -> Result<Self> {
        let keep: Vec<usize> = (0..sizes.len()).filter(|&i| sizes[i] > 0.0).collect();
        let total: f64 = keep.iter().map(|&i| sizes[i]).sum();
        let s = keep.iter().map(|&i| sizes[i] / total).collect();
        let p = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| probs[i][j]).collect())
            .collect();
        Self::new(s, p)
    }

    /// The constant graphon `W = p`.
    pub fn constant(p: f64) -> Result<Self> {
        Self::new(vec![1.0], vec![vec![p]])
    }

    pub fn sizes(&self) -> &[f64] {
        &self.sizes
    }

    pub fn probs(&self) -> &[Vec<f64>] {
        &self.probs
    }

    pub fn blocks(&self) -> usize {
        self.sizes.len()
    }

    /// `W -> 1 - W`.
    pub fn complement(&self) -> Self {
        Self {
            sizes: self.sizes.clone(),
            probs: self
                .probs
                .iter()
                .map(|row| row.iter().map(|p| 1.0 - p).collect())
                .collect(),
        }
    }

    /// Degree `D_i = Σ_j s_j P_ij` of every vertex in block `i`.
    pub fn block_degrees(&self) -> Vec<f64> {
        self.probs
            .iter()
            .map(|row| row.iter().zip(&self.sizes).map(|(p, s)| p * s).sum())
            .collect()
    }

    /// Rescales this graphon to total mass `1 - a` and adds a block of mass
    /// `a` joined to everything (itself included).
    pub(crate) fn with_universal_block(&self, a: f64) -> Result<Self> {
        let b = self.blocks();
        let mut sizes: Vec<f64> = self.sizes.iter().map(|s| s * (1.0 - a)).collect();
        sizes.push(a);
        let mut probs: Vec<Vec<f64>> = self
            .probs
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.push(1.0);
                r
            })
            .collect();
        probs.push(vec![1.0; b + 1]);
        Self::from_blocks(&sizes, &probs)
    }

    pub fn densities(&self) -> DensityVector {
        graphon_densities(self)
    }
}

/// Exact limit densities of a step graphon.
///
/// Sums over ordered block triples `(i, j, k)` with weight `s_i s_j s_k`; the
/// three pair indicators are independent with success probabilities
/// `P_ij, P_ik, P_jk`, so the chance of exactly `e` edges is an elementary
/// symmetric combination of those probabilities.
pub fn graphon_densities(w: &StepGraphon) -> DensityVector {
    let s = &w.sizes;
    let p = &w.probs;
    let b = s.len();
    let mut d = [0.0f64; 4];
    for i in 0..b {
        for j in 0..b {
            let sij = s[i] * s[j];
            let a = p[i][j];
            for k in 0..b {
                let weight = sij * s[k];
                let (x, y) = (p[i][k], p[j][k]);
                let (qa, qx, qy) = (1.0 - a, 1.0 - x, 1.0 - y);
                d[0] += weight * qa * qx * qy;
                d[1] += weight * (a * qx * qy + qa * x * qy + qa * qx * y);
                d[2] += weight * (a * x * qy + a * qx * y + qa * x * y);
                d[3] += weight * a * x * y;
            }
        }
    }
    let de = (0..b)
        .flat_map(|i| (0..b).map(move |j| (i, j)))
        .map(|(i, j)| s[i] * s[j] * p[i][j])
        .sum();
    DensityVector {
        d0: d[0],
        d1: d[1],
        d2: d[2],
        d3: d[3],
        de,
    }
}

/// Samples an `n`-vertex W-random graph.
///
/// Draw order: one uniform per vertex selects its block through the
/// cumulative block sizes, then one uniform per pair `(u, v)`, `u < v`, in
/// lexicographic order decides the edge.
pub fn sample_w_random_graph(w: &StepGraphon, n: usize, seed: u64) -> Graph {
    let mut rng = SeededRng::new(seed);
    let mut cumulative = Vec::with_capacity(w.blocks());
    let mut acc = 0.0;
    for &s in &w.sizes {
        acc += s;
        cumulative.push(acc);
    }
    let block: Vec<usize> = (0..n)
        .map(|_| {
            let u = rng.uniform();
            cumulative
                .iter()
                .position(|&c| u < c)
                .unwrap_or(w.blocks() - 1)
        })
        .collect();
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for u in 0..n {
        let row = &w.probs[block[u]];
        for v in u + 1..n {
            if rng.bernoulli(row[block[v]]) {
                adj[u].push(v as u32);
                adj[v].push(u as u32);
            }
        }
    }
    Graph::from_sorted_adjacency(adj)
}

/// Realises a step graphon on consecutive vertex ranges of the given sizes.
///
/// Pairs with probability 0 or 1 are decided deterministically; every other
/// pair consumes one uniform draw, in lexicographic pair order.
pub(crate) fn blow_up(part_sizes: &[usize], probs: &[Vec<f64>], seed: u64) -> Graph {
    let n: usize = part_sizes.iter().sum();
    let mut part = Vec::with_capacity(n);
    for (i, &c) in part_sizes.iter().enumerate() {
        part.extend(core::iter::repeat_n(i, c));
    }
    let mut rng = SeededRng::new(seed);
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
    for u in 0..n {
        let row = &probs[part[u]];
        for v in u + 1..n {
            let p = row[part[v]];
            let joined = if p >= 1.0 {
                true
            } else if p <= 0.0 {
                false
            } else {
                rng.bernoulli(p)
            };
            if joined {
                adj[u].push(v as u32);
                adj[v].push(u as u32);
            }
        }
    }
    Graph::from_sorted_adjacency(adj)
}
