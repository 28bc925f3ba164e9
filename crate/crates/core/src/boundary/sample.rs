use alloc::vec::Vec;

use super::curves::{g_r, h_a, h_b, s03_branches, s03_crossover};
use super::region::RegionId;
use crate::error::{Error, Result};

/// A sampled boundary point in the region's coordinate order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPoint {
    /// Curve parameter of the piece (its own coordinate, `sigma`, `d_e`, ...).
    pub param: f64,
    pub x: f64,
    pub y: f64,
    pub branch: &'static str,
}

fn piece<F>(
    out: &mut Vec<BoundaryPoint>,
    branch: &'static str,
    from: f64,
    to: f64,
    count: usize,
    f: F,
) -> Result<()>
where
    F: Fn(f64) -> Result<(f64, f64)>,
{
    for i in 0..count {
        let t = if i + 1 == count {
            to
        } else {
            from + (to - from) * i as f64 / (count - 1) as f64
        };
        let (x, y) = f(t)?;
        out.push(BoundaryPoint {
            param: t,
            x,
            y,
            branch,
        });
    }
    Ok(())
}

/// The closed boundary polyline of a region, traversed counter-clockwise
/// from the origin (or the Goodman line for `S03`). Each smooth piece gets
/// `count` points including both endpoints, so junction points appear once
/// at the end of a piece and again at the start of the next.
pub fn sample_boundary(region: RegionId, count: usize) -> Result<Vec<BoundaryPoint>> {
    if count < 2 {
        return Err(Error::InvalidParams(alloc::format!(
            "boundary sampling needs at least 2 points per piece, got {count}"
        )));
    }
    let mut out = Vec::new();
    let o = &mut out;
    match region {
        RegionId::S12 => {
            piece(o, "d2=0", 0.0, 0.75, count, |t| Ok((t, 0.0)))?;
            piece(o, "d1+d2=3/4", 0.75, 0.0, count, |t| Ok((t, 0.75 - t)))?;
            piece(o, "d1=0", 0.75, 0.0, count, |t| Ok((0.0, t)))?;
        }
        RegionId::S13 => {
            piece(o, "d3=0", 0.0, 0.375, count, |t| Ok((t, 0.0)))?;
            piece(o, "linear", 0.0, 1.0 / 16.0, count, |t| {
                Ok((3.0 * t + 0.375, t))
            })?;
            piece(o, "concave-hA", 0.25, 1.0 / 3.0, count, h_a)?;
            piece(o, "convex-hB", 1.0 / 3.0, 0.5, count, h_b)?;
            piece(o, "unit-sum", 0.25, 1.0, count, |t| Ok((1.0 - t, t)))?;
            piece(o, "d1=0", 1.0, 0.0, count, |t| Ok((0.0, t)))?;
        }
        RegionId::S23 => {
            // parametrised by edge density; the k = 2 piece is the bottom edge
            let on_curve = |de: f64| -> Result<(f64, f64)> {
                let t = g_r(de)?;
                Ok((1.5 * (de - t), t))
            };
            piece(o, "d3=0", 0.0, 0.5, count, on_curve)?;
            const LABELS: [&str; 8] = [
                "razborov-k3",
                "razborov-k4",
                "razborov-k5",
                "razborov-k6",
                "razborov-k7",
                "razborov-k8",
                "razborov-k9",
                "razborov-k10",
            ];
            for (i, label) in LABELS.iter().enumerate() {
                let k = (i + 3) as f64;
                piece(
                    o,
                    label,
                    1.0 - 1.0 / (k - 1.0),
                    1.0 - 1.0 / k,
                    count,
                    on_curve,
                )?;
            }
            piece(o, "razborov-tail", 0.9, 1.0, count, on_curve)?;
            piece(o, "d2=0", 1.0, 0.0, count, |t| Ok((0.0, t)))?;
        }
        RegionId::S03 => {
            let cross = s03_crossover();
            piece(o, "goodman", 0.25, 0.0, count, |t| Ok((t, 0.25 - t)))?;
            piece(o, "d0=0", 0.25, 1.0, count, |t| Ok((0.0, t)))?;
            piece(o, "clique-complement", 0.0, cross, count, |t| {
                Ok((t, s03_branches(t)?.0))
            })?;
            piece(o, "clique-isolated", cross, 1.0, count, |t| {
                Ok((t, s03_branches(t)?.1))
            })?;
            piece(o, "d3=0", 1.0, 0.25, count, |t| Ok((t, 0.0)))?;
        }
    }
    Ok(out)
}
