//! Extremal families as exact step graphons, their limit maps, and finite
//! realizations.

mod family;
mod finite;

pub use family::{Family, FamilySpec};
pub use finite::{g0_graph, realize};

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::boundary::{delta_a, g_r_params, h_a3_inverse, h_b3_inverse};
use crate::error::{Error, Result};
use crate::graphon::{graphon_densities, StepGraphon};
use crate::numeric::{cbrt, floor_count};

fn check(what: &'static str, v: f64, lo: f64, hi: f64, range: &'static str) -> Result<()> {
    if v.is_finite() && v >= lo && v <= hi {
        Ok(())
    } else {
        Err(Error::domain(what, v, range))
    }
}

/// Block masses and block densities of `G_0(x)` before zero blocks are
/// dropped. Blocks are listed in the construction's order, which is also the
/// order finite realizations assign vertices in.
pub(crate) fn g0_blocks(x: f64) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    check("x", x, -0.25, 0.25, "[-1/4, 1/4]")?;
    Ok(if x < 0.0 {
        // A, B, C, D of mass 1/4 + x, the rest E isolated
        let q = 0.25 + x;
        let mut p = vec![vec![0.0; 5]; 5];
        for (i, j) in [(0, 1), (2, 3)] {
            p[i][j] = 1.0;
            p[j][i] = 1.0;
        }
        (vec![q, q, q, q, 1.0 - 4.0 * q], p)
    } else if x < 1.0 / 16.0 {
        // d3 = ((2p - 1)^3 + 1)/32 for inner density p, so p is chosen to
        // make d3 = x; (d1, d3) then lies on d1 = 3 d3 + 3/8
        let inner = (0.5 * (1.0 + cbrt(32.0 * x - 1.0))).clamp(0.0, 1.0);
        let mut p = vec![vec![0.0; 4]; 4];
        for (i, row) in p.iter_mut().enumerate() {
            row[i] = inner;
        }
        for (i, j) in [(0, 1), (2, 3)] {
            p[i][j] = 1.0 - inner;
            p[j][i] = 1.0 - inner;
        }
        (vec![0.25; 4], p)
    } else if x < 1.0 / 9.0 {
        let sigma = h_a3_inverse(x)?;
        let d = delta_a(sigma)?;
        let half = (1.0 - 2.0 * sigma) / 2.0;
        let p = vec![
            vec![1.0, d, 0.0, 0.0],
            vec![d, 1.0, 0.0, 0.0],
            vec![0.0, 0.0, 1.0, 0.0],
            vec![0.0, 0.0, 0.0, 1.0],
        ];
        (vec![half, half, sigma, sigma], p)
    } else {
        let sigma = h_b3_inverse(x)?;
        (vec![sigma, sigma, 1.0 - 2.0 * sigma], identity(3))
    })
}

fn identity(b: usize) -> Vec<Vec<f64>> {
    (0..b)
        .map(|i| (0..b).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect()
}

/// `G_0(x)`: its `(d1, d3)` lies on the upper co-cherry boundary for
/// `x ∈ [0, 1/4]` and traces `d3 = 0` for negative `x`.
pub fn g0_graphon(x: f64) -> Result<StepGraphon> {
    let (s, p) = g0_blocks(x)?;
    StepGraphon::from_blocks(&s, &p)
}

/// `G_0(x)` shrunk to mass `1 - a` plus a universal block of mass `a`.
pub fn g1_graphon(a: f64, x: f64) -> Result<StepGraphon> {
    check("a", a, 0.0, 1.0, "[0, 1]")?;
    g0_graphon(x)?.with_universal_block(a)
}

/// `(d1, d3)` of [`g1_graphon`].
pub fn h1(a: f64, x: f64) -> Result<(f64, f64)> {
    let d = graphon_densities(&g1_graphon(a, x)?);
    Ok((d.d1, d.d3))
}

pub(crate) fn g2_blocks(a: f64, p: f64) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    check("a", a, 0.0, 1.0, "[0, 1]")?;
    check("p", p, 0.0, 1.0, "[0, 1]")?;
    Ok((vec![a, 1.0 - a], vec![vec![1.0, p], vec![p, 1.0 - p]]))
}

/// A clique of mass `a`, density `p` between the parts and `1 - p` inside
/// the rest.
pub fn g2_graphon(a: f64, p: f64) -> Result<StepGraphon> {
    let (s, q) = g2_blocks(a, p)?;
    StepGraphon::from_blocks(&s, &q)
}

/// `(d1, d3)` of [`g2_graphon`].
pub fn h2(a: f64, p: f64) -> Result<(f64, f64)> {
    let d = graphon_densities(&g2_graphon(a, p)?);
    Ok((d.d1, d.d3))
}

pub(crate) fn s12_blocks(a: f64, p: f64) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    check("a", a, 0.0, 1.0, "[0, 1]")?;
    check("p", p, 0.0, 1.0, "[0, 1]")?;
    Ok((vec![a, 1.0 - a], vec![vec![p, 1.0 - p], vec![1.0 - p, p]]))
}

/// Two blocks `a`, `1 - a` with density `p` inside both and `1 - p` across.
pub fn s12_graphon(a: f64, p: f64) -> Result<StepGraphon> {
    let (s, q) = s12_blocks(a, p)?;
    StepGraphon::from_blocks(&s, &q)
}

/// `(d1, d2)` of [`s12_graphon`].
pub fn h_s12(a: f64, p: f64) -> Result<(f64, f64)> {
    let d = graphon_densities(&s12_graphon(a, p)?);
    Ok((d.d1, d.d2))
}

pub(crate) fn s23_blocks(a: f64, b: f64) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    check("a", a, 0.0, 0.5, "[0, 1/2]")?;
    check("b", b, 0.0, 1.0, "[0, 1]")?;
    // isolated mass first, then the multipartite parts, remainder last
    let mut sizes = vec![1.0 - b];
    if a == 0.0 {
        sizes.push(b);
    } else {
        let k = floor_count(1.0 / a);
        sizes.extend(core::iter::repeat_n(a * b, k));
        sizes.push((b * (1.0 - k as f64 * a)).max(0.0));
    }
    let parts = sizes.len();
    let mut p = vec![vec![0.0; parts]; parts];
    if a == 0.0 {
        p[1][1] = 1.0;
    } else {
        for (i, row) in p.iter_mut().enumerate().skip(1) {
            for (j, v) in row.iter_mut().enumerate().skip(1) {
                if i != j {
                    *v = 1.0;
                }
            }
        }
    }
    Ok((sizes, p))
}

/// Complete multipartite graphon on mass `b` with `⌊1/a⌋` parts of mass
/// `ab` and one smaller part; the remaining `1 - b` is isolated. For
/// `a = 0` the multipartite portion is a single clique.
pub fn s23_graphon(a: f64, b: f64) -> Result<StepGraphon> {
    let (s, p) = s23_blocks(a, b)?;
    StepGraphon::from_blocks(&s, &p)
}

/// `(d2, d3)` of [`s23_graphon`].
pub fn h_s23(a: f64, b: f64) -> Result<(f64, f64)> {
    let d = graphon_densities(&s23_graphon(a, b)?);
    Ok((d.d2, d.d3))
}

/// How the last, enlarged part of the minimum-triangle graphon is filled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InnerChoice {
    /// A complete bipartite graphon on sub-blocks of masses `(1 - z)/(k - 1)`
    /// and `z`.
    #[default]
    Bipartite,
}

/// Largest part count built by [`pr_extremal_graphon`] (edge densities up
/// to `1 - 1/1000`).
pub const MAX_PARTS: u64 = 1000;

pub(crate) fn pr_extremal_blocks(de: f64) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let params = g_r_params(de)?;
    if params.k > MAX_PARTS {
        return Err(Error::InvalidParams(format!(
            "edge density {de} needs {} parts; at most {MAX_PARTS} are supported",
            params.k
        )));
    }
    let k = params.k as usize;
    let z = params.z;
    let mut sizes = vec![(1.0 - z) / (k - 1) as f64; k - 1];
    sizes.push(z);
    let p = (0..k)
        .map(|i| (0..k).map(|j| if i == j { 0.0 } else { 1.0 }).collect())
        .collect();
    Ok((sizes, p))
}

/// A graphon with edge density `de` and the minimum triangle density
/// `g_R(de)`: `k - 2` independent parts of mass `(1 - z)/(k - 1)`, complete
/// to each other, plus a last part of mass `z + (1 - z)/(k - 1)` filled as
/// chosen by `inner`, with `k` and `z` from [`g_r_params`].
pub fn pr_extremal_graphon(de: f64, inner: InnerChoice) -> Result<StepGraphon> {
    let InnerChoice::Bipartite = inner;
    let (s, p) = pr_extremal_blocks(de)?;
    StepGraphon::from_blocks(&s, &p)
}

pub(crate) fn clique_plus_isolated_blocks(
    a: f64,
    complemented: bool,
) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    check("a", a, 0.0, 1.0, "[0, 1]")?;
    let (inside, other) = if complemented { (0.0, 1.0) } else { (1.0, 0.0) };
    Ok((
        vec![a, 1.0 - a],
        vec![vec![inside, other], vec![other, other]],
    ))
}

/// A clique of mass `a` and isolated vertices, or its complement.
pub fn clique_plus_isolated_graphon(a: f64, complemented: bool) -> Result<StepGraphon> {
    let (s, p) = clique_plus_isolated_blocks(a, complemented)?;
    StepGraphon::from_blocks(&s, &p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::{g_r, g_t, h_a, h_b};

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn g0_on_upper_boundary() {
        for i in 0..=40 {
            let x = 0.25 * i as f64 / 40.0;
            let d = graphon_densities(&g0_graphon(x).unwrap());
            assert!(close(d.d3, x, 1e-9), "x = {x}: d3 = {}", d.d3);
            assert!(close(d.d1, g_t(x).unwrap(), 1e-9), "x = {x}: d1 = {}", d.d1);
        }
    }

    #[test]
    fn g0_negative_regime() {
        for x in [-0.25, -0.2, -0.1, -0.01] {
            let d = graphon_densities(&g0_graphon(x).unwrap());
            let q = 0.25 + x;
            assert!(close(d.d3, 0.0, 1e-15));
            assert!(close(d.d1, 24.0 * q * q * (0.25 - x), 1e-12), "x = {x}");
        }
        assert_eq!(g0_graphon(-0.25).unwrap().blocks(), 1);
        assert!(g0_graphon(0.3).is_err());
    }

    #[test]
    fn g0_four_equal_cliques() {
        let d = graphon_densities(&g0_graphon(1.0 / 16.0).unwrap());
        assert!(close(d.d1, 9.0 / 16.0, 1e-12) && close(d.d3, 1.0 / 16.0, 1e-12));
    }

    #[test]
    fn h_pairs_match_closed_forms() {
        for s in [0.25, 0.28, 0.3, 1.0 / 3.0] {
            let (h1, h3) = h_a(s).unwrap();
            let d = delta_a(s).unwrap();
            let half = (1.0 - 2.0 * s) / 2.0;
            let w = StepGraphon::new(
                vec![half, half, s, s],
                vec![
                    vec![1.0, d, 0.0, 0.0],
                    vec![d, 1.0, 0.0, 0.0],
                    vec![0.0, 0.0, 1.0, 0.0],
                    vec![0.0, 0.0, 0.0, 1.0],
                ],
            )
            .unwrap();
            let g = graphon_densities(&w);
            assert!(
                close(g.d1, h1, 1e-12) && close(g.d3, h3, 1e-12),
                "sigma = {s}"
            );
        }
        let (b1, b3) = h_b(0.4).unwrap();
        let g = graphon_densities(&StepGraphon::new(vec![0.4, 0.4, 0.2], identity(3)).unwrap());
        assert!(close(g.d1, b1, 1e-12) && close(g.d3, b3, 1e-12));
    }

    #[test]
    fn h1_formulas() {
        for a in [0.0, 0.2, 0.5, 0.9] {
            let (c, t) = h1(a, 0.25).unwrap();
            assert!(close(c, 0.75 * (1.0 - a).powi(3), 1e-12), "a = {a}");
            assert!(close(t, 1.0 - 0.75 * (1.0 + a) * (1.0 - a).powi(2), 1e-12));
            let (c, t) = h1(a, -0.25).unwrap();
            assert!(close(c, 0.0, 1e-12) && close(t, a.powi(3) + 3.0 * a * a * (1.0 - a), 1e-12));
        }
        for x in [-0.1, 0.0, 0.1] {
            assert_eq!(h1(1.0, x).unwrap(), (0.0, 1.0));
        }
    }

    #[test]
    fn h2_formulas() {
        for a in [0.0, 0.3, 0.7] {
            let (c, t) = h2(a, 0.0).unwrap();
            assert!(
                close(c, 3.0 * a * (1.0 - a), 1e-12) && close(t, 1.0 - 3.0 * a * (1.0 - a), 1e-12)
            );
            let (c, t) = h2(a, 1.0).unwrap();
            assert!(close(c, 0.0, 1e-12) && close(t, a * a * (3.0 - 2.0 * a), 1e-12));
        }
        assert_eq!(h2(1.0, 0.4).unwrap(), (0.0, 1.0));
    }

    #[test]
    fn s12_formulas() {
        for a in [0.1, 0.5, 0.8] {
            for p in [0.0, 0.3, 0.6, 1.0] {
                let (co, ch) = h_s12(a, p).unwrap();
                let q = a * (1.0 - a);
                assert!(close(
                    co,
                    3.0 * p * (1.0 - p).powi(2) + 3.0 * q * p * (2.0 * p - 1.0),
                    1e-12
                ));
                assert!(close(
                    ch,
                    3.0 * p * p * (1.0 - p) + 3.0 * q * (1.0 - p) * (1.0 - 2.0 * p),
                    1e-12
                ));
            }
        }
        let (co, ch) = h_s12(0.5, 0.2).unwrap();
        let c = (1.0 - 0.4f64).powi(3);
        assert!(close(co, 0.375 - 0.375 * c, 1e-12) && close(ch, 0.375 + 0.375 * c, 1e-12));
    }

    #[test]
    fn s23_scaling_and_boundary() {
        for a in [0.1, 0.2, 0.3, 0.45, 0.5] {
            let (c1, t1) = h_s23(a, 1.0).unwrap();
            let (cb, tb) = h_s23(a, 0.6).unwrap();
            let b3 = 0.6f64.powi(3);
            assert!(
                close(cb, b3 * c1, 1e-12) && close(tb, b3 * t1, 1e-12),
                "a = {a}"
            );
            let on = 1.5 * (crate::boundary::g_r_inverse(t1).unwrap() - t1);
            assert!(close(c1, on, 1e-9), "a = {a}: {c1} vs {on}");
        }
        assert!(close(h_s23(0.0, 0.7).unwrap().1, 0.343, 1e-12));
        assert_eq!(h_s23(0.0, 0.7).unwrap().0, 0.0);
        assert!(s23_graphon(0.6, 1.0).is_err());
        assert_eq!(s23_graphon(1.0 / 3.0, 1.0).unwrap().blocks(), 3);
    }

    #[test]
    fn pr_extremal_attains_g_r() {
        for de in [0.5, 0.55, 0.6, 2.0 / 3.0, 0.7, 0.8, 0.9, 0.95] {
            let d = graphon_densities(&pr_extremal_graphon(de, InnerChoice::Bipartite).unwrap());
            assert!(close(d.de, de, 1e-9), "de = {de}");
            assert!(close(d.d3, g_r(de).unwrap(), 1e-9), "de = {de}");
        }
        let d = graphon_densities(&pr_extremal_graphon(2.0 / 3.0, InnerChoice::Bipartite).unwrap());
        assert!(close(d.d3, 2.0 / 9.0, 1e-12));
        assert!(pr_extremal_graphon(1.0, InnerChoice::Bipartite).is_err());
    }

    #[test]
    fn pr_inner_density() {
        // inner density of the last part matches 2z(k-1)(1-z)/(kz-2z+1)^2
        let de = 0.7;
        let p = g_r_params(de).unwrap();
        let (k, z) = (p.k as f64, p.z);
        let s1 = (1.0 - z) / (k - 1.0);
        let inner = 2.0 * s1 * z / ((s1 + z) * (s1 + z));
        let printed = 2.0 * z * (k - 1.0) * (1.0 - z) / ((k * z - 2.0 * z + 1.0).powi(2));
        assert!(close(inner, printed, 1e-12));
    }

    #[test]
    fn clique_plus_isolated() {
        for a in [0.0, 0.3, 0.7, 1.0] {
            let d = graphon_densities(&clique_plus_isolated_graphon(a, false).unwrap());
            assert!(close(d.d3, a * a * a, 1e-12));
            let b = 1.0 - a;
            assert!(close(d.d0, b * b * b + 3.0 * b * b * a, 1e-12));
            let c = graphon_densities(&clique_plus_isolated_graphon(a, true).unwrap());
            assert!(close(c.d0, d.d3, 1e-12) && close(c.d3, d.d0, 1e-12));
        }
    }
}
