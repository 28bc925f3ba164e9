//! The six-variable maximisation behind the concave part of the `S13`
//! boundary:
//!
//! ```text
//! F(x, y) = Σ_j x_j^3 (3 - α - 3(3 - α) y_j - 3(α - 1) y_j^2) + 3 x_j^2 y_j
//! ```
//!
//! over `x` in the simplex and `y_j ∈ [1/2, 1]`, for `α ∈ (2, 1 + √2)`.
//! The maximum has the closed form [`closed_form_max`]; [`maximize_grid`]
//! recomputes it independently by a simplex grid search with the `y_j`
//! eliminated through [`stationary_y`], followed by a local polish.

use alloc::vec::Vec;

use crate::boundary::h_a;
use crate::error::{Error, Result};
use crate::numeric::sqrt;

pub const ALPHA_MIN: f64 = 2.0;
pub const ALPHA_MAX: f64 = 1.0 + core::f64::consts::SQRT_2;

/// Iteration cap of the local polish in [`maximize_grid`].
pub const REFINE_CAP: usize = 10_000;

/// The coefficient `α` of the objective `d1 - α d3`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObjectiveParams {
    alpha: f64,
}

impl ObjectiveParams {
    pub fn new(alpha: f64) -> Result<Self> {
        if alpha.is_finite() && alpha > ALPHA_MIN && alpha < ALPHA_MAX {
            Ok(Self { alpha })
        } else {
            Err(Error::domain("alpha", alpha, "(2, 1+sqrt(2))"))
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasiblePoint {
    pub x: [f64; 3],
    pub y: [f64; 3],
}

impl FeasiblePoint {
    /// A point with each `y_j` chosen by [`stationary_y`]; `y_j = 1` where
    /// `x_j = 0`.
    pub fn with_stationary_y(x: [f64; 3], alpha: f64) -> Self {
        Self {
            x,
            y: x.map(|v| if v > 0.0 { stationary_y(v, alpha) } else { 1.0 }),
        }
    }

    /// Checks the constraints of the relaxed problem (`y_j ∈ [1/2, 1]`),
    /// or of the original one (`y_j ∈ (1/2, 1]`) when `strict` is set.
    pub fn check(&self, strict: bool) -> Result<()> {
        for (j, &v) in self.x.iter().enumerate() {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidParams(alloc::format!(
                    "x{} = {v} must be >= 0",
                    j + 1
                )));
            }
        }
        let sum: f64 = self.x.iter().sum();
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParams(alloc::format!(
                "x1 + x2 + x3 = {sum}, expected 1"
            )));
        }
        for (j, &v) in self.y.iter().enumerate() {
            let ok = v <= 1.0 && if strict { v > 0.5 } else { v >= 0.5 };
            if !ok {
                let range = if strict { "(1/2, 1]" } else { "[1/2, 1]" };
                return Err(Error::InvalidParams(alloc::format!(
                    "y{} = {v} is outside {range}",
                    j + 1
                )));
            }
        }
        Ok(())
    }

    /// Coordinates reordered so that `x` is ascending.
    pub fn sorted(&self) -> Self {
        let mut idx = [0usize, 1, 2];
        idx.sort_by(|&a, &b| self.x[a].total_cmp(&self.x[b]));
        Self {
            x: idx.map(|i| self.x[i]),
            y: idx.map(|i| self.y[i]),
        }
    }
}

fn term(x: f64, y: f64, alpha: f64) -> f64 {
    let x2 = x * x;
    x2 * x * (3.0 - alpha - 3.0 * (3.0 - alpha) * y - 3.0 * (alpha - 1.0) * y * y) + 3.0 * x2 * y
}

/// The objective `F`. Any `α` is accepted so that tests can probe outside
/// the open interval.
pub fn objective_f(p: &FeasiblePoint, alpha: f64) -> f64 {
    (0..3).map(|j| term(p.x[j], p.y[j], alpha)).sum()
}

/// The maximiser over `y ∈ [1/2, 1]` of the `j`-th term for a given `x_j`.
pub fn stationary_y(xj: f64, alpha: f64) -> f64 {
    if xj <= 1.0 / (alpha + 1.0) {
        1.0
    } else if xj >= 0.5 {
        0.5
    } else {
        (1.0 / xj - (3.0 - alpha)) / (2.0 * (alpha - 1.0))
    }
}

/// `∂F/∂y_j`.
pub fn y_derivative(xj: f64, yj: f64, alpha: f64) -> f64 {
    xj * xj * xj * (-3.0 * (3.0 - alpha) - 6.0 * (alpha - 1.0) * yj) + 3.0 * xj * xj
}

/// `σ = (5 - (α - 1)^2)/12 ∈ (1/4, 1/3)`.
pub fn optimal_sigma(alpha: f64) -> Result<f64> {
    ObjectiveParams::new(alpha)?;
    Ok((5.0 - (alpha - 1.0) * (alpha - 1.0)) / 12.0)
}

/// The maximum `(-α^6 + 6α^5 - 9α^4 - 4α^3 + 96α - 80) / (144(α - 1))`.
pub fn closed_form_max(alpha: f64) -> Result<f64> {
    ObjectiveParams::new(alpha)?;
    let a = alpha;
    let a2 = a * a;
    let a3 = a2 * a;
    let num = -a3 * a3 + 6.0 * a3 * a2 - 9.0 * a2 * a2 - 4.0 * a3 + 96.0 * a - 80.0;
    Ok(num / (144.0 * (a - 1.0)))
}

/// The maximum written as `h_A1(σ) - α h_A3(σ)`.
pub fn closed_form_max_via_h(alpha: f64) -> Result<f64> {
    let (h1, h3) = h_a(optimal_sigma(alpha)?)?;
    Ok(h1 - alpha * h3)
}

/// The optimal point `x = (σ, σ, 1 - 2σ)`, `y = (1, 1, y3)` with `y3` in the
/// printed closed form.
pub fn optimum_point(alpha: f64) -> Result<FeasiblePoint> {
    let s = optimal_sigma(alpha)?;
    let r = sqrt(5.0 - 12.0 * s);
    let y3 = ((1.0 - 2.0 * s) * r + 4.0 * s - 1.0) / (2.0 * (1.0 - 2.0 * s) * r);
    Ok(FeasiblePoint {
        x: [s, s, 1.0 - 2.0 * s],
        y: [1.0, 1.0, y3],
    })
}

/// A closed-form candidate from the case analysis of the maximisation.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub label: &'static str,
    pub point: FeasiblePoint,
    /// `F` evaluated at the point.
    pub value: f64,
    /// The value formula printed for the case, where one is given.
    pub printed: Option<f64>,
    /// The claimed maximiser.
    pub optimal: bool,
    /// Attains the maximum of the relaxed problem only, with some
    /// `y_j = 1/2`.
    pub degenerate: bool,
}

/// Every closed-form stationary candidate, sorted as in the case analysis:
/// two zero coordinates, one zero, two or one coordinates at a breakpoint
/// `1/(α+1)` or `1/2`, then the fully interior cases.
pub fn analytic_candidates(alpha: f64) -> Result<Vec<Candidate>> {
    let a = ObjectiveParams::new(alpha)?.alpha();
    let a2 = a * a;
    let a3 = a2 * a;
    let a4 = a2 * a2;
    let a5 = a4 * a;
    let a6 = a3 * a3;
    let b2 = (a + 1.0) * (a + 1.0);
    let b3 = b2 * (a + 1.0);
    let b4 = b2 * b2;
    let inv = 1.0 / (a + 1.0);
    let mut out = Vec::new();
    let mut push = |label, x: [f64; 3], printed: Option<f64>| {
        let point = FeasiblePoint::with_stationary_y(x, a);
        out.push(Candidate {
            label,
            value: objective_f(&point, a),
            point,
            printed,
            optimal: false,
            degenerate: false,
        });
    };

    push("two-zero", [0.0, 0.0, 1.0], Some((3.0 - a) / 4.0));
    push("one-zero x2=1/3", [0.0, 1.0 / 3.0, 2.0 / 3.0], None);
    push(
        "one-zero x2=1/(a+1)",
        [0.0, inv, a * inv],
        Some((-a4 + 3.0 * a3 + 6.0 * a2 + 8.0 * a) / (4.0 * b3)),
    );
    push(
        "one-zero degenerate",
        [0.0, (a2 - 2.0 * a + 2.0) / 6.0, (-a2 + 2.0 * a + 4.0) / 6.0],
        None,
    );
    push("one-zero x2=1/2", [0.0, 0.5, 0.5], Some((9.0 - a) / 16.0));
    push(
        "x1=x2=1/(a+1)",
        [inv, inv, (a - 1.0) * inv],
        Some((-a4 + 6.0 * a3 + 3.0 * a2 - 16.0 * a + 36.0) / (4.0 * b3)),
    );
    push(
        "x2=1/(a+1) x3=1/2",
        [(a - 1.0) / (2.0 * (a + 1.0)), inv, 0.5],
        Some((-5.0 * a3 + 35.0 * a2 - 11.0 * a + 45.0) / (32.0 * b2)),
    );
    let rad = 4.0 * a6 - 8.0 * a5 - 39.0 * a4 + 84.0 * a3 + 74.0 * a2 - 196.0 * a + 97.0;
    if rad >= 0.0 {
        let r = sqrt(rad);
        let p4 = 3.0 * b4;
        let p3 = 3.0 * b3;
        let x1 = (-a4 + 3.0 * a3 + 15.0 * a2 + a - 10.0) / p4 + r / p3;
        let x3 = (4.0 * a4 + 6.0 * a3 - 6.0 * a2 + 2.0 * a + 10.0) / p4 - r / p3;
        if x1 > 0.0 && x3 > 0.0 {
            push("x2=1/(a+1) x3<1/2", [x1, inv, x3], None);
        }
    }
    let d = a2 + 4.0 * a + 3.0;
    push(
        "x2=1/(a+1) x3>1/2",
        [(-a2 + a + 4.0) / d, inv, 2.0 * (a2 + a - 2.0) / d],
        Some((-a5 + a4 + 11.0 * a3 + 3.0 * a2 - 6.0 * a + 24.0) / (b2 * ((a + 3.0) * (a + 3.0)))),
    );
    push(
        "x1=1/(a+1)",
        [inv, a / (2.0 * (a + 1.0)), a / (2.0 * (a + 1.0))],
        Some(-a * (a4 - 10.0 * a3 - 3.0 * a2 - 20.0 * a + 20.0) / (16.0 * (a - 1.0) * b3)),
    );
    push(
        "x1=x2=1/4 x3=1/2",
        [0.25, 0.25, 0.5],
        Some((9.0 - a) / 16.0),
    );
    let q = sqrt(a4 - 8.0 * a3 + 23.0 * a2 - 22.0 * a + 10.0);
    push(
        "x3=1/2 interior pair",
        [
            (-a2 - 2.0 * q + 10.0 * a - 5.0) / (6.0 * b2),
            (2.0 * a2 + q - 2.0 * a + 4.0) / (3.0 * b2),
            0.5,
        ],
        None,
    );
    let disc = 4.0 * a4 - 24.0 * a3 + 53.0 * a2 - 30.0 * a + 1.0;
    if disc >= 0.0 {
        let r = sqrt(disc);
        let den = 3.0 * (5.0 * a2 + 10.0 * a - 11.0);
        for (label, s) in [("x2=x3 plus", 1.0), ("x2=x3 minus", -1.0)] {
            let x1 = (-a2 + 18.0 * a - 13.0 + s * 2.0 * r) / den;
            let x3 = (8.0 * a2 + 6.0 * a - 10.0 - s * r) / den;
            if x1 > 0.0 && x3 > 0.0 {
                push(label, [x1, x3, x3], None);
            }
        }
    }
    let best = optimum_point(a)?;
    out.push(Candidate {
        label: "optimum",
        value: objective_f(&best, a),
        point: best,
        printed: Some(closed_form_max(a)?),
        optimal: true,
        degenerate: false,
    });
    for c in &mut out {
        if c.label == "one-zero degenerate" {
            c.degenerate = true;
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    pub alpha: f64,
    /// Maximiser with `x` ascending.
    pub best: FeasiblePoint,
    pub value: f64,
    pub analytic_value: f64,
    pub candidates: Vec<Candidate>,
    pub stationarity_residual: f64,
    /// Sweeps used by the local polish.
    pub refine_sweeps: usize,
}

impl OptimizationResult {
    pub fn gap(&self) -> f64 {
        (self.value - self.analytic_value).abs()
    }
}

/// KKT residual of a point: the spread of `∂F/∂x_j` over the positive
/// coordinates (plus any excess of a zero coordinate's derivative over the
/// multiplier) and the violation of the bound conditions on each `y_j`.
/// Derivatives are central differences with step `1e-6`.
pub fn stationarity_residual(p: &FeasiblePoint, alpha: f64) -> f64 {
    const H: f64 = 1e-6;
    let grad_x: [f64; 3] = core::array::from_fn(|j| {
        (term(p.x[j] + H, p.y[j], alpha) - term(p.x[j] - H, p.y[j], alpha)) / (2.0 * H)
    });
    let active: Vec<usize> = (0..3).filter(|&j| p.x[j] > 1e-12).collect();
    let lambda = active.iter().map(|&j| grad_x[j]).sum::<f64>() / active.len().max(1) as f64;
    let mut res = 0.0f64;
    for j in 0..3 {
        if active.contains(&j) {
            res = res.max((grad_x[j] - lambda).abs());
        } else {
            res = res.max(grad_x[j] - lambda);
        }
        let gy = (term(p.x[j], p.y[j] + H, alpha) - term(p.x[j], p.y[j] - H, alpha)) / (2.0 * H);
        let viol = if p.y[j] >= 1.0 {
            (-gy).max(0.0)
        } else if p.y[j] <= 0.5 {
            gy.max(0.0)
        } else {
            gy.abs()
        };
        res = res.max(viol);
    }
    res
}

/// The `j`-th term with `y_j` eliminated.
fn psi(x: f64, alpha: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        term(x, stationary_y(x, alpha), alpha)
    }
}

fn reduced(x: &[f64; 3], alpha: f64) -> f64 {
    x.iter().map(|&v| psi(v, alpha)).sum()
}

/// Maximiser of `f` on `[lo, hi]` by golden-section search.
fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    const R: f64 = 0.618_033_988_749_894_9;
    let mut c = hi - R * (hi - lo);
    let mut d = lo + R * (hi - lo);
    let (mut fc, mut fd) = (f(c), f(d));
    while hi - lo > tol {
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - R * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + R * (hi - lo);
            fd = f(d);
        }
    }
    let mid = 0.5 * (lo + hi);
    if f(mid) >= fc.max(fd) {
        mid
    } else if fc >= fd {
        c
    } else {
        d
    }
}

/// Search directions of the polish: pairwise transfers, plus moving mass
/// from one coordinate into the other two equally. The latter are needed at
/// kinks such as `(1/4, 1/4, 1/2)`, where no pairwise transfer gains.
const DIRECTIONS: [[f64; 3]; 6] = [
    [1.0, -1.0, 0.0],
    [1.0, 0.0, -1.0],
    [0.0, 1.0, -1.0],
    [-2.0, 1.0, 1.0],
    [1.0, -2.0, 1.0],
    [1.0, 1.0, -2.0],
];

/// Line searches `x + t d` over [`DIRECTIONS`] with `|t| <= window`,
/// repeated until a sweep moves less than `tol` or gains nothing
/// measurable. Returns the polished point and the sweep count.
fn polish(mut x: [f64; 3], alpha: f64, window: f64, tol: f64) -> Result<([f64; 3], usize)> {
    for sweep in 1..=REFINE_CAP {
        let before = reduced(&x, alpha);
        let mut moved = 0.0f64;
        for d in DIRECTIONS {
            let x0 = x;
            let along = |t: f64| reduced(&core::array::from_fn(|k| x0[k] + t * d[k]), alpha);
            let mut lo = -window;
            let mut hi = window;
            for k in 0..3 {
                if d[k] > 0.0 {
                    lo = lo.max(-x0[k] / d[k]);
                } else if d[k] < 0.0 {
                    hi = hi.min(x0[k] / -d[k]);
                }
            }
            if hi - lo <= 0.0 {
                continue;
            }
            let t = golden_max(along, lo, hi, tol.max(1e-15));
            if along(t) > along(0.0) {
                x = core::array::from_fn(|k| (x0[k] + t * d[k]).max(0.0));
                moved = moved.max(t.abs());
            }
        }
        let gain = reduced(&x, alpha) - before;
        if moved < tol || gain <= 4.0 * f64::EPSILON * before.abs().max(1.0) {
            return Ok((x, sweep));
        }
    }
    Err(Error::NoConvergence { cap: REFINE_CAP })
}

fn better(a: (f64, [f64; 3]), b: (f64, [f64; 3])) -> bool {
    // higher value wins; ties go to the lexicographically smaller sorted x
    a.0 > b.0 || (a.0 == b.0 && a.1 < b.1)
}

/// Independent maximisation: every simplex point with coordinates in steps
/// of `1/grid` (ascending representatives only), `y` eliminated through
/// [`stationary_y`], then a local polish of the best point to `refine_tol`.
///
/// The relaxed problem also attains its maximum at a point with a zero
/// coordinate and some `y_j = 1/2`. Both the overall best grid point and the
/// best point with all coordinates positive are polished, and the latter is
/// returned when it is within `1e-9` of the former.
pub fn maximize_grid(alpha: f64, grid: usize, refine_tol: f64) -> Result<OptimizationResult> {
    let a = ObjectiveParams::new(alpha)?.alpha();
    if grid < 50 {
        return Err(Error::InvalidParams(alloc::format!(
            "grid = {grid} must be at least 50"
        )));
    }
    if !(refine_tol.is_finite() && refine_tol > 0.0) {
        return Err(Error::domain("refine tolerance", refine_tol, "(0, inf)"));
    }
    let step = 1.0 / grid as f64;
    let mut best: Option<(f64, [f64; 3])> = None;
    let mut best_interior: Option<(f64, [f64; 3])> = None;
    for i in 0..=grid / 3 {
        for j in i..=(grid - i) / 2 {
            let k = grid - i - j;
            let x = [i as f64 * step, j as f64 * step, k as f64 * step];
            let cand = (reduced(&x, a), x);
            if best.is_none_or(|b| better(cand, b)) {
                best = Some(cand);
            }
            if i > 0 && best_interior.is_none_or(|b| better(cand, b)) {
                best_interior = Some(cand);
            }
        }
    }
    let window = 2.0 * step;
    let (_, x0) = best.expect("grid is nonempty");
    let (x_best, mut sweeps) = polish(x0, a, window, refine_tol)?;
    let mut chosen = x_best;
    if let Some((_, xi)) = best_interior {
        let (x_int, s) = polish(xi, a, window, refine_tol)?;
        sweeps += s;
        if x_int.iter().all(|&v| v > 0.0) && reduced(&x_int, a) >= reduced(&x_best, a) - 1e-9 {
            chosen = x_int;
        }
    }
    let sum: f64 = chosen.iter().sum();
    let chosen = chosen.map(|v| v / sum);
    let point = FeasiblePoint::with_stationary_y(chosen, a).sorted();
    Ok(OptimizationResult {
        alpha: a,
        value: objective_f(&point, a),
        analytic_value: closed_form_max(a)?,
        candidates: analytic_candidates(a)?,
        stationarity_residual: stationarity_residual(&point, a),
        best: point,
        refine_sweeps: sweeps,
    })
}
