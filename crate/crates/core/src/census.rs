//! Exact counts of the four 3-vertex induced subgraphs.
//!
//! [`census_fast`] never enumerates triples. With `t` triangles, `m` edges
//! and `p2 = Σ_v C(deg v, 2)` paths of length two,
//!
//! ```text
//! c3 = t
//! c2 = p2 - 3t
//! c1 = m(n-2) - 2 p2 + 3t
//! c0 = C(n,3) - c1 - c2 - c3
//! ```
//!
//! so the whole census reduces to a triangle count. Triangles are counted by
//! degree-ordered forward-neighbor intersection; dense graphs intersect the
//! forward sets as bitsets, sparse graphs with a marker array.
//! [`census_brute`] classifies every triple and serves as the oracle.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::numeric::choose_small;

/// Induced counts of `H_0..H_3` over all `C(n, 3)` vertex triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleCensus {
    pub n: u64,
    pub c0: u64,
    pub c1: u64,
    pub c2: u64,
    pub c3: u64,
}

impl TripleCensus {
    pub fn counts(&self) -> [u64; 4] {
        [self.c0, self.c1, self.c2, self.c3]
    }

    pub fn total(&self) -> u64 {
        choose_small(self.n, 3)
    }

    /// Edge count recovered from `c1 + 2 c2 + 3 c3 = m (n - 2)`.
    pub fn edges(&self) -> u64 {
        (self.c1 + 2 * self.c2 + 3 * self.c3) / (self.n - 2)
    }

    /// Census of the complement graph: `c0 <-> c3`, `c1 <-> c2`.
    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            c0: self.c3,
            c1: self.c2,
            c2: self.c1,
            c3: self.c0,
        }
    }

    pub fn densities(&self) -> DensityVector {
        densities(self)
    }
}

/// Densities `d0..d3` of `H_0..H_3` and the edge density `de`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityVector {
    pub d0: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
    pub de: f64,
}

impl DensityVector {
    /// Builds a vector from `d0..d3`, deriving `de = (d1 + 2 d2 + 3 d3) / 3`.
    pub fn from_profile(d: [f64; 4]) -> Self {
        Self {
            d0: d[0],
            d1: d[1],
            d2: d[2],
            d3: d[3],
            de: (d[1] + 2.0 * d[2] + 3.0 * d[3]) / 3.0,
        }
    }

    pub fn profile(&self) -> [f64; 4] {
        [self.d0, self.d1, self.d2, self.d3]
    }

    pub fn complement(&self) -> Self {
        Self {
            d0: self.d3,
            d1: self.d2,
            d2: self.d1,
            d3: self.d0,
            de: 1.0 - self.de,
        }
    }

    /// Largest absolute difference over `d0..d3`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.profile()
            .iter()
            .zip(other.profile())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

fn check_size(g: &Graph) -> Result<()> {
    if g.n() < 3 {
        Err(Error::GraphTooSmall { n: g.n() })
    } else {
        Ok(())
    }
}

/// Exact census via counting identities and a forward triangle count.
pub fn census_fast(g: &Graph) -> Result<TripleCensus> {
    check_size(g)?;
    let n = g.n() as u64;
    let m = g.m();
    let t = triangle_count(g);
    let p2: u64 = (0..g.n())
        .map(|v| choose_small(g.degree(v) as u64, 2))
        .sum();

    let (t, p2, m128, n128) = (t as i128, p2 as i128, m as i128, n as i128);
    let c3 = t;
    let c2 = p2 - 3 * t;
    let c1 = m128 * (n128 - 2) - 2 * p2 + 3 * t;
    let c0 = choose_small(n, 3) as i128 - c1 - c2 - c3;
    debug_assert!(c0 >= 0 && c1 >= 0 && c2 >= 0);
    Ok(TripleCensus {
        n,
        c0: c0 as u64,
        c1: c1 as u64,
        c2: c2 as u64,
        c3: c3 as u64,
    })
}

/// Number of triangles, by intersecting forward neighborhoods under the
/// (degree, id) vertex order.
pub fn triangle_count(g: &Graph) -> u64 {
    let n = g.n();
    if n < 3 {
        return 0;
    }
    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_unstable_by_key(|&v| (g.degree(v as usize), v));
    let mut rank = vec![0u32; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v as usize] = r as u32;
    }
    // forward[v]: neighbors of v that come later in the order
    let forward: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|&u| rank[u as usize] > rank[v])
                .collect()
        })
        .collect();

    let n64 = n as u64;
    let dense = n <= 50_000 && g.m().saturating_mul(32) >= n64 * n64 / 2;
    if dense {
        forward_bitset_count(n, &forward)
    } else {
        forward_marker_count(n, &forward)
    }
}

fn forward_marker_count(n: usize, forward: &[Vec<u32>]) -> u64 {
    let mut mark = vec![u32::MAX; n];
    let mut t = 0u64;
    for (v, fv) in forward.iter().enumerate() {
        for &u in fv {
            mark[u as usize] = v as u32;
        }
        for &u in fv {
            for &w in &forward[u as usize] {
                if mark[w as usize] == v as u32 {
                    t += 1;
                }
            }
        }
    }
    t
}

fn forward_bitset_count(n: usize, forward: &[Vec<u32>]) -> u64 {
    let words = n.div_ceil(64);
    let mut bits = vec![0u64; n * words];
    for (v, fv) in forward.iter().enumerate() {
        let row = &mut bits[v * words..(v + 1) * words];
        for &u in fv {
            row[u as usize / 64] |= 1u64 << (u % 64);
        }
    }
    let mut t = 0u64;
    for (v, fv) in forward.iter().enumerate() {
        let rv = &bits[v * words..(v + 1) * words];
        for &u in fv {
            let ru = &bits[u as usize * words..(u as usize + 1) * words];
            t += rv
                .iter()
                .zip(ru)
                .map(|(a, b)| (a & b).count_ones() as u64)
                .sum::<u64>();
        }
    }
    t
}

/// Brute-force census: classify every triple by its induced edge count.
pub fn census_brute(g: &Graph) -> Result<TripleCensus> {
    check_size(g)?;
    let n = g.n();
    let words = n.div_ceil(64);
    let mut bits = vec![0u64; n * words];
    for (u, v) in g.edges() {
        bits[u * words + v / 64] |= 1 << (v % 64);
        bits[v * words + u / 64] |= 1 << (u % 64);
    }
    let adj = |a: usize, b: usize| (bits[a * words + b / 64] >> (b % 64)) & 1;
    let mut c = [0u64; 4];
    for i in 0..n {
        for j in i + 1..n {
            let ij = adj(i, j);
            for k in j + 1..n {
                c[(ij + adj(i, k) + adj(j, k)) as usize] += 1;
            }
        }
    }
    Ok(TripleCensus {
        n: n as u64,
        c0: c[0],
        c1: c[1],
        c2: c[2],
        c3: c[3],
    })
}

/// Densities `d_k = c_k / C(n, 3)`; the edge density comes from the identity
/// `de = (d1 + 2 d2 + 3 d3) / 3`, which agrees with `m / C(n, 2)`.
pub fn densities(c: &TripleCensus) -> DensityVector {
    let total = c.total() as f64;
    let d = DensityVector::from_profile([
        c.c0 as f64 / total,
        c.c1 as f64 / total,
        c.c2 as f64 / total,
        c.c3 as f64 / total,
    ]);
    debug_assert!({
        let pairs = choose_small(c.n, 2) as f64;
        (d.de - c.edges() as f64 / pairs).abs() <= 1e-12
    });
    d
}
