//! Finite simple undirected graphs stored as sorted adjacency lists.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A finite simple undirected graph.
///
/// Neighbor lists are sorted ascending, contain no duplicates and no
/// self-loops, and are symmetric. Every constructor upholds this.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: u64,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let adj = (0..n)
            .map(|v| (0..n as u32).filter(|&u| u as usize != v).collect())
            .collect();
        let n64 = n as u64;
        Self {
            adj,
            m: n64 * n64.saturating_sub(1) / 2,
        }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges = (0..n).map(|v| (v, (v + 1) % n));
        Self::from_edges(n, edges).expect("cycle edges are valid")
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v));
        Self::from_edges(n, edges).expect("path edges are valid")
    }

    /// Builds a graph from an edge list, rejecting self-loops, out-of-range
    /// endpoints and duplicate edges (in either orientation).
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > u32::MAX as usize {
            return Err(Error::InvalidGraph(format!(
                "vertex count {n} exceeds u32 range"
            )));
        }
        let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside [0, {n})"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        let mut m = 0u64;
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge ({}, {})",
                    v.min(w[0] as usize),
                    v.max(w[0] as usize)
                )));
            }
            m += list.len() as u64;
        }
        Ok(Self { adj, m: m / 2 })
    }

    /// Wraps adjacency lists produced by an in-crate generator that already
    /// emits sorted, symmetric, loop-free lists.
    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<u32>>) -> Self {
        let sum: u64 = adj.iter().map(|l| l.len() as u64).sum();
        let g = Self { adj, m: sum / 2 };
        debug_assert!(g.check_invariants().is_ok());
        g
    }

    /// Verifies every structural invariant; used by tests and debug builds.
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.adj.len();
        let mut degree_sum = 0u64;
        for (v, list) in self.adj.iter().enumerate() {
            degree_sum += list.len() as u64;
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::InvalidGraph(format!(
                        "neighbor list of {v} is not strictly increasing"
                    )));
                }
            }
            for &u in list {
                let u = u as usize;
                if u >= n || u == v {
                    return Err(Error::InvalidGraph(format!("bad neighbor {u} of {v}")));
                }
                if self.adj[u].binary_search(&(v as u32)).is_err() {
                    return Err(Error::InvalidGraph(format!(
                        "edge ({v}, {u}) is not symmetric"
                    )));
                }
            }
        }
        if !degree_sum.is_multiple_of(2) || degree_sum / 2 != self.m {
            return Err(Error::InvalidGraph("edge count mismatch".into()));
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    #[inline]
    pub fn m(&self) -> u64 {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| (v as usize) > u)
                .map(move |v| (u, v as usize))
        })
    }

    pub fn complement(&self) -> Self {
        let n = self.n();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, list)| {
                let mut out = Vec::with_capacity(n - 1 - list.len());
                let mut it = list.iter().copied().peekable();
                for u in 0..n as u32 {
                    if it.peek() == Some(&u) {
                        it.next();
                    } else if u as usize != v {
                        out.push(u);
                    }
                }
                out
            })
            .collect();
        Self::from_sorted_adjacency(adj)
    }

    /// Edge density `m / C(n, 2)`; zero for graphs with fewer than two vertices.
    pub fn edge_density(&self) -> f64 {
        let n = self.n() as u64;
        if n < 2 {
            return 0.0;
        }
        self.m as f64 / (n * (n - 1) / 2) as f64
    }
}
