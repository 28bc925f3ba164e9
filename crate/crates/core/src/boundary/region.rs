use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::curves::{g_r_inverse, g_t, g_t_branch, s03_branches};
use crate::census::DensityVector;
use crate::error::{Error, Result};

/// One of the four coordinate projections of the 3-profile body.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionId {
    S03,
    S12,
    S13,
    S23,
}

impl RegionId {
    pub const ALL: [RegionId; 4] = [RegionId::S03, RegionId::S12, RegionId::S13, RegionId::S23];

    /// Indices `(i, j)` of the projected densities `(d_i, d_j)`.
    pub fn indices(self) -> (usize, usize) {
        match self {
            RegionId::S03 => (0, 3),
            RegionId::S12 => (1, 2),
            RegionId::S13 => (1, 3),
            RegionId::S23 => (2, 3),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RegionId::S03 => "s03",
            RegionId::S12 => "s12",
            RegionId::S13 => "s13",
            RegionId::S23 => "s23",
        }
    }

    /// Coordinates of `d` in this region's index order.
    pub fn project(self, d: &DensityVector) -> (f64, f64) {
        let p = d.profile();
        let (i, j) = self.indices();
        (p[i], p[j])
    }

    /// Map an arbitrary index pair to a stored region. The flag reports
    /// whether the query coordinates must be swapped.
    ///
    /// Pairs not stored directly are complemented (`i -> 3 - i`), which
    /// leaves the projected set unchanged.
    pub fn resolve(i: usize, j: usize) -> Result<(RegionId, bool)> {
        if i > 3 || j > 3 || i == j {
            return Err(Error::InvalidParams(alloc::format!(
                "no projection onto (d{i}, d{j}); indices must be distinct and in 0..=3"
            )));
        }
        let direct = |a: usize, b: usize| {
            RegionId::ALL.into_iter().find_map(|r| {
                let (p, q) = r.indices();
                if (p, q) == (a, b) {
                    Some((r, false))
                } else if (p, q) == (b, a) {
                    Some((r, true))
                } else {
                    None
                }
            })
        };
        Ok(direct(i, j)
            .or_else(|| direct(3 - i, 3 - j))
            .expect("every index pair reduces to a stored region"))
    }
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RegionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s03" => Ok(RegionId::S03),
            "s12" => Ok(RegionId::S12),
            "s13" => Ok(RegionId::S13),
            "s23" => Ok(RegionId::S23),
            _ => Err(Error::InvalidParams(alloc::format!(
                "unknown region {s:?}; expected one of s03, s12, s13, s23"
            ))),
        }
    }
}

/// A defining inequality of a region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Constraint {
    /// The inequality, e.g. `"d1+d2≤3/4"`.
    pub name: &'static str,
    /// Short tag. For curved constraints this names the active branch.
    pub label: &'static str,
}

impl Constraint {
    const fn plain(name: &'static str) -> Self {
        Constraint { name, label: name }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Inside,
    Boundary,
    Outside,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Inside => "inside",
            Status::Boundary => "boundary",
            Status::Outside => "outside",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MembershipVerdict {
    pub inside: bool,
    /// Minimum of `rhs - lhs` over the region's inequalities.
    pub slack: f64,
    pub binding: Constraint,
    pub tol: f64,
}

impl MembershipVerdict {
    /// Outside when the slack is below `-tol`; on the boundary when it is
    /// within `min(tol, DEFAULT_TOL)` of zero, so that the loose finite-size
    /// tolerances used for graphs do not label every point as boundary.
    pub fn status(&self) -> Status {
        if !self.inside {
            Status::Outside
        } else if self.slack.abs() <= self.tol.min(super::DEFAULT_TOL) {
            Status::Boundary
        } else {
            Status::Inside
        }
    }
}

impl fmt::Display for MembershipVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}, slack {}, binding {}",
            self.status().as_str(),
            self.slack,
            self.binding.label
        )?;
        if self.binding.label != self.binding.name {
            write!(f, " ({})", self.binding.name)?;
        }
        Ok(())
    }
}

fn clamp01(v: f64) -> f64 {
    v.clamp(0.0, 1.0)
}

fn constraints(region: RegionId, x: f64, y: f64) -> Result<Vec<(Constraint, f64)>> {
    Ok(match region {
        RegionId::S12 => vec![
            (Constraint::plain("d1≥0"), x),
            (Constraint::plain("d2≥0"), y),
            (Constraint::plain("d1+d2≤3/4"), 0.75 - x - y),
        ],
        RegionId::S13 => {
            let d3 = clamp01(y);
            let upper = Constraint {
                name: "d1≤g_t(d3)",
                label: g_t_branch(d3)?.label(),
            };
            vec![
                (Constraint::plain("d3≥0"), y),
                (Constraint::plain("d3≤1"), 1.0 - y),
                (Constraint::plain("d1≥0"), x),
                (upper, g_t(d3)? - x),
            ]
        }
        RegionId::S23 => {
            let d3 = clamp01(y);
            let upper = Constraint {
                name: "d2≤(3/2)(g_R⁻¹(d3)−d3)",
                label: "razborov",
            };
            vec![
                (Constraint::plain("d2≥0"), x),
                (Constraint::plain("d3≥0"), y),
                (Constraint::plain("d3≤1"), 1.0 - y),
                (upper, 1.5 * (g_r_inverse(d3)? - d3) - x),
            ]
        }
        RegionId::S03 => {
            let (first, second) = s03_branches(clamp01(x))?;
            let label = if first >= second {
                "clique-complement"
            } else {
                "clique-isolated"
            };
            vec![
                (Constraint::plain("d0≥0"), x),
                (Constraint::plain("d0≤1"), 1.0 - x),
                (Constraint::plain("d3≥0"), y),
                (
                    Constraint {
                        name: "d0+d3≥1/4",
                        label: "goodman",
                    },
                    x + y - 0.25,
                ),
                (
                    Constraint {
                        name: "d3≤s03_upper(d0)",
                        label,
                    },
                    first.max(second) - y,
                ),
            ]
        }
    })
}

/// Decide whether `(x, y)`, given in the region's index order, lies in the
/// region. Ties in slack go to the constraint listed first.
pub fn membership(region: RegionId, x: f64, y: f64, tol: f64) -> Result<MembershipVerdict> {
    if !x.is_finite() {
        return Err(Error::NonFinite {
            what: "x coordinate",
        });
    }
    if !y.is_finite() {
        return Err(Error::NonFinite {
            what: "y coordinate",
        });
    }
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Error::domain("tolerance", tol, "[0, inf)"));
    }
    let list = constraints(region, x, y)?;
    let (binding, slack) = list
        .iter()
        .copied()
        .fold(list[0], |best, c| if c.1 < best.1 { c } else { best });
    Ok(MembershipVerdict {
        inside: slack >= -tol,
        slack,
        binding,
        tol,
    })
}

/// Membership of `(d_i, d_j) = (a, b)` in the projection onto any pair of
/// distinct coordinates.
pub fn membership_pair(
    i: usize,
    j: usize,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<(RegionId, MembershipVerdict)> {
    let (region, swap) = RegionId::resolve(i, j)?;
    let (x, y) = if swap { (b, a) } else { (a, b) };
    Ok((region, membership(region, x, y, tol)?))
}

/// Verdicts for all four stored projections of a density vector.
pub fn membership_all(d: &DensityVector, tol: f64) -> Result<Vec<(RegionId, MembershipVerdict)>> {
    RegionId::ALL
        .into_iter()
        .map(|region| {
            let (x, y) = region.project(d);
            Ok((region, membership(region, x, y, tol)?))
        })
        .collect()
}
