use crate::error::{Error, Result};
use crate::numeric::{bisect_increasing, cbrt, sqrt, BISECTION_TOL};

fn check_unit(what: &'static str, x: f64) -> Result<()> {
    if x.is_finite() && (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::domain(what, x, "[0, 1]"))
    }
}

/// Part count `k` and small-part fraction `z` of the complete `k`-partite
/// graphon with `k - 1` equal parts that attains the minimum triangle
/// density at a given edge density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveParams {
    pub k: u64,
    pub z: f64,
}

/// `k` is the smallest integer `>= 2` with `de <= 1 - 1/k`, and `z` the root
/// in `(0, 1/k]` of `(1 - z)(kz + k - 2)/(k - 1) = de`. Requires
/// `de ∈ [1/2, 1)`.
pub fn g_r_params(de: f64) -> Result<CurveParams> {
    if !(de.is_finite() && (0.5..1.0).contains(&de)) {
        return Err(Error::domain("edge density", de, "[1/2, 1)"));
    }
    // part counts beyond this only arise within rounding distance of 1
    const K_CAP: f64 = 1e12;
    let mut k = libm::ceil(1.0 / (1.0 - de)).clamp(2.0, K_CAP);
    while k < K_CAP && de > 1.0 - 1.0 / k {
        k += 1.0;
    }
    while k > 2.0 && de <= 1.0 - 1.0 / (k - 1.0) {
        k -= 1.0;
    }
    let kf = k;
    // k z^2 - 2z - (k - 2 - de(k - 1)) = 0; the smaller root lies in (0, 1/k]
    let disc = ((kf - 1.0) * (kf - 1.0 - kf * de)).max(0.0);
    let z = (1.0 - sqrt(disc)) / kf;
    Ok(CurveParams { k: k as u64, z })
}

/// Minimum triangle density of a graphon with edge density `de`.
pub fn g_r(de: f64) -> Result<f64> {
    check_unit("edge density", de)?;
    if de <= 0.5 {
        return Ok(0.0);
    }
    if de >= 1.0 {
        return Ok(1.0);
    }
    let CurveParams { k, z } = g_r_params(de)?;
    let kf = k as f64;
    let one_z = 1.0 - z;
    Ok(one_z * one_z * (kf - 2.0) * (2.0 * z * kf + kf - 3.0) / ((kf - 1.0) * (kf - 1.0)))
}

/// Inverse of `g_r` restricted to `[1/2, 1]`.
pub fn g_r_inverse(t: f64) -> Result<f64> {
    check_unit("triangle density", t)?;
    if t <= 0.0 {
        return Ok(0.5);
    }
    if t >= 1.0 {
        return Ok(1.0);
    }
    Ok(bisect_increasing(
        |de| g_r(de).unwrap_or(f64::NAN),
        t,
        0.5,
        1.0,
        BISECTION_TOL,
    ))
}

fn check_sigma_a(sigma: f64) -> Result<()> {
    if sigma.is_finite() && (0.25..=1.0 / 3.0).contains(&sigma) {
        Ok(())
    } else {
        Err(Error::domain("sigma", sigma, "[1/4, 1/3]"))
    }
}

fn check_sigma_b(sigma: f64) -> Result<()> {
    if sigma.is_finite() && (1.0 / 3.0..=0.5).contains(&sigma) {
        Ok(())
    } else {
        Err(Error::domain("sigma", sigma, "[1/3, 1/2]"))
    }
}

/// Relative density between the two cross-linked cliques of the
/// concave-regime construction.
pub fn delta_a(sigma: f64) -> Result<f64> {
    check_sigma_a(sigma)?;
    Ok((4.0 * sigma - 1.0) / ((1.0 - 2.0 * sigma) * sqrt(5.0 - 12.0 * sigma)))
}

/// `(h_A1, h_A3)`: co-cherry and triangle densities of two cliques of mass
/// `sigma` plus two cross-linked cliques of mass `(1 - 2 sigma)/2`.
pub fn h_a(sigma: f64) -> Result<(f64, f64)> {
    check_sigma_a(sigma)?;
    Ok(h_a_unchecked(sigma))
}

fn h_a_unchecked(s: f64) -> (f64, f64) {
    let s2 = s * s;
    let s3 = s2 * s;
    let r = sqrt(5.0 - 12.0 * s);
    let q = 4.0 * s - 1.0;
    let h1 = (9.0 - 48.0 * s + 114.0 * s2 - 120.0 * s3 + 3.0 * (1.0 - 2.0 * s) * q * q * r)
        / (10.0 - 24.0 * s);
    let h3 = (2.0 - 18.0 * s + 57.0 * s2 - 60.0 * s3) / (5.0 - 12.0 * s);
    (h1, h3)
}

/// `(h_B1, h_B3)`: co-cherry and triangle densities of three disjoint
/// cliques of masses `sigma`, `sigma`, `1 - 2 sigma`.
pub fn h_b(sigma: f64) -> Result<(f64, f64)> {
    check_sigma_b(sigma)?;
    Ok(h_b_unchecked(sigma))
}

fn h_b_unchecked(s: f64) -> (f64, f64) {
    let s2 = s * s;
    let s3 = s2 * s;
    (
        6.0 * s - 18.0 * s2 + 18.0 * s3,
        1.0 - 6.0 * s + 12.0 * s2 - 6.0 * s3,
    )
}

/// Values within this distance outside an inverse's domain are treated as
/// the nearest endpoint, so round trips through the forward maps succeed.
const ENDPOINT_SLACK: f64 = 1e-12;

pub fn h_a3_inverse(x: f64) -> Result<f64> {
    let (lo, hi) = (1.0 / 16.0, 1.0 / 9.0);
    if !(x.is_finite() && x >= lo - ENDPOINT_SLACK && x <= hi + ENDPOINT_SLACK) {
        return Err(Error::domain("triangle density", x, "[1/16, 1/9]"));
    }
    Ok(bisect_increasing(
        |s| h_a_unchecked(s).1,
        x,
        0.25,
        1.0 / 3.0,
        BISECTION_TOL,
    ))
}

pub fn h_b3_inverse(x: f64) -> Result<f64> {
    let (lo, hi) = (1.0 / 9.0, 0.25);
    if !(x.is_finite() && x >= lo - ENDPOINT_SLACK && x <= hi + ENDPOINT_SLACK) {
        return Err(Error::domain("triangle density", x, "[1/9, 1/4]"));
    }
    Ok(bisect_increasing(
        |s| h_b_unchecked(s).1,
        x,
        1.0 / 3.0,
        0.5,
        BISECTION_TOL,
    ))
}

/// The four smooth pieces of the co-cherry upper boundary `g_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GtBranch {
    /// `3x + 3/8` on `[0, 1/16]`.
    Linear,
    /// `h_A1(h_A3^{-1}(x))` on `(1/16, 1/9)`.
    ConcaveHA,
    /// `h_B1(h_B3^{-1}(x))` on `[1/9, 1/4)`.
    ConvexHB,
    /// `1 - x` on `[1/4, 1]`.
    UnitSum,
}

impl GtBranch {
    pub fn label(self) -> &'static str {
        match self {
            GtBranch::Linear => "linear",
            GtBranch::ConcaveHA => "concave-hA",
            GtBranch::ConvexHB => "convex-hB",
            GtBranch::UnitSum => "unit-sum",
        }
    }
}

pub fn g_t_branch(x: f64) -> Result<GtBranch> {
    check_unit("triangle density", x)?;
    Ok(if x <= 1.0 / 16.0 {
        GtBranch::Linear
    } else if x < 1.0 / 9.0 {
        GtBranch::ConcaveHA
    } else if x < 0.25 {
        GtBranch::ConvexHB
    } else {
        GtBranch::UnitSum
    })
}

/// Maximum co-cherry density given triangle density `x`.
pub fn g_t(x: f64) -> Result<f64> {
    Ok(match g_t_branch(x)? {
        GtBranch::Linear => 3.0 * x + 0.375,
        GtBranch::ConcaveHA => h_a_unchecked(h_a3_inverse(x)?).0,
        GtBranch::ConvexHB => h_b_unchecked(h_b3_inverse(x)?).0,
        GtBranch::UnitSum => 1.0 - x,
    })
}

/// Derivative of `g_t` on the open curved pieces `(1/16, 1/9)` and
/// `(1/9, 1/4)`.
pub fn g_t_prime(x: f64) -> Result<f64> {
    let inside = x.is_finite() && x > 1.0 / 16.0 && x < 0.25 && x != 1.0 / 9.0;
    if !inside {
        return Err(Error::domain(
            "triangle density",
            x,
            "(1/16, 1/9) ∪ (1/9, 1/4)",
        ));
    }
    if x < 1.0 / 9.0 {
        let s = h_a3_inverse(x)?;
        Ok(1.0 + sqrt(5.0 - 12.0 * s))
    } else {
        let s = h_b3_inverse(x)?;
        let s2 = s * s;
        Ok((6.0 - 36.0 * s + 54.0 * s2) / (-6.0 + 24.0 * s - 18.0 * s2))
    }
}

/// Root `alpha ∈ [0, 1]` of `alpha^3 + 3 alpha^2 (1 - alpha) = d0`.
pub fn s03_alpha(d0: f64) -> Result<f64> {
    check_unit("co-triangle density", d0)?;
    Ok(bisect_increasing(
        |a| a * a * (3.0 - 2.0 * a),
        d0,
        0.0,
        1.0,
        BISECTION_TOL,
    ))
}

/// The two candidate upper bounds on `d3` at co-triangle density `d0`:
/// the complement of a clique plus isolated vertices, and a clique plus
/// isolated vertices.
pub fn s03_branches(d0: f64) -> Result<(f64, f64)> {
    check_unit("co-triangle density", d0)?;
    let c = cbrt(d0);
    let one_c = 1.0 - c;
    let first = one_c * one_c * one_c + 3.0 * c * one_c * one_c;
    let alpha = s03_alpha(d0)?;
    let one_a = 1.0 - alpha;
    Ok((first, one_a * one_a * one_a))
}

/// Maximum triangle density given co-triangle density `d0`.
pub fn s03_upper(d0: f64) -> Result<f64> {
    let (a, b) = s03_branches(d0)?;
    Ok(a.max(b))
}

/// `d0` where the two branches of [`s03_upper`] cross. The branches are
/// mirror images under `d0 <-> d3`, so the crossing lies on the diagonal
/// and is the fixed point of the first (decreasing) branch.
pub fn s03_crossover() -> f64 {
    bisect_increasing(
        |d0| d0 - s03_branches(d0).map(|b| b.0).unwrap_or(f64::NAN),
        0.0,
        0.0,
        1.0,
        BISECTION_TOL,
    )
}
