//! Small numeric helpers shared by the boundary curves and the optimizer.

/// Absolute tolerance used by every monotone inversion in the crate.
pub const BISECTION_TOL: f64 = 1e-12;

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline]
pub fn cbrt(x: f64) -> f64 {
    libm::cbrt(x)
}

#[inline]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline]
pub fn ceil(x: f64) -> f64 {
    libm::ceil(x)
}

/// Solves `f(x) = target` for a continuous nondecreasing `f` on `[lo, hi]`
/// by bisection until the bracket is narrower than `tol`.
///
/// Targets at or beyond `f(lo)` / `f(hi)` return the corresponding endpoint,
/// so flat stretches resolve to their leftmost point.
pub fn bisect_increasing<F>(f: F, target: f64, mut lo: f64, mut hi: f64, tol: f64) -> f64
where
    F: Fn(f64) -> f64,
{
    if target <= f(lo) {
        return lo;
    }
    if target >= f(hi) {
        return hi;
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if f(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Part count for a floor-based part size.
///
/// Products like `(1/3) * 999` land a few ulps below the integer they
/// represent; a 1e-9 guard keeps those from losing a vertex.
pub fn floor_count(x: f64) -> usize {
    if x <= 0.0 {
        0
    } else {
        floor(x + 1e-9) as usize
    }
}

/// Ceiling counterpart of [`floor_count`].
pub fn ceil_count(x: f64) -> usize {
    if x <= 0.0 {
        0
    } else {
        ceil(x - 1e-9) as usize
    }
}

/// Binomial coefficient `C(n, k)` for `k <= 3` in exact arithmetic.
pub fn choose_small(n: u64, k: u32) -> u64 {
    match k {
        0 => 1,
        1 => n,
        2 => {
            if n < 2 {
                0
            } else {
                n * (n - 1) / 2
            }
        }
        3 => {
            if n < 3 {
                0
            } else {
                // n(n-1) is even, and n(n-1)(n-2) divisible by 6
                let a = n * (n - 1) / 2;
                if a.is_multiple_of(3) {
                    a / 3 * (n - 2)
                } else {
                    a * ((n - 2) / 3)
                }
            }
        }
        _ => panic!("choose_small supports k <= 3"),
    }
}
