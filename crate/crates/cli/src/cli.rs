//! Argument definitions and the subcommand dispatcher.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use triprofile_core::boundary::{membership_all, membership_pair, sample_boundary, DEFAULT_TOL};
use triprofile_core::census::{census_fast, densities};
use triprofile_core::constructions::{realize, Family, FamilySpec};
use triprofile_core::optimizer::{maximize_grid, optimal_sigma, ObjectiveParams};
use triprofile_core::{DensityVector, RegionId};

use crate::error::{CliError, Result};
use crate::io::{self, num, nums, parse_real};
use crate::report::{Csv, Report};
use crate::{sweep, verify};

#[derive(Debug, Parser)]
#[command(
    name = "triprofile",
    version,
    about = "3-vertex density profiles, feasible-region boundaries and extremal constructions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Census and densities of an edge list or step-graphon file, with the
    /// membership verdict of every projection.
    Census(CensusArgs),
    /// Sample a region's boundary polyline as CSV "param,x,y,branch".
    Boundary(BoundaryArgs),
    /// Decide whether a point lies in a region.
    Member(MemberArgs),
    /// Realize a construction family as an edge list plus a summary.
    Construct(ConstructArgs),
    /// Convergence table of a family over parameters, sizes and seeds.
    Sweep(SweepArgs),
    /// Maximise the six-variable objective and compare with the closed form.
    Optimize(OptimizeArgs),
    /// Run the invariant suites.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    /// Edge list, or a step-graphon JSON document with --graphon.
    pub input: PathBuf,
    #[arg(long)]
    pub graphon: bool,
    /// Membership tolerance [default: 10/n for graphs, 1e-9 for graphons].
    #[arg(long, allow_negative_numbers = true)]
    pub tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    #[arg(long)]
    pub region: String,
    /// Points per smooth piece, endpoints included.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    /// Output file [default: stdout].
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MemberArgs {
    /// s03, s12, s13, s23, or any pair sIJ of distinct indices in 0..=3.
    #[arg(long)]
    pub region: String,
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub y: f64,
    #[arg(long, default_value_t = DEFAULT_TOL, allow_negative_numbers = true)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(long)]
    pub family: String,
    /// Family parameter as key=value; repeatable.
    #[arg(long = "param", allow_hyphen_values = true)]
    pub params: Vec<String>,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge-list output; the summary goes to `<out>.summary` and stdout.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub family: String,
    /// key=v1,v2,...; repeat for a product grid.
    #[arg(long = "param-grid", allow_hyphen_values = true)]
    pub param_grid: Vec<String>,
    /// Comma-separated vertex counts.
    #[arg(long = "n-list")]
    pub n_list: String,
    /// Comma-separated seeds.
    #[arg(long, default_value = "0,1,2")]
    pub seeds: String,
    /// Output file [default: stdout].
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 400)]
    pub grid: usize,
    #[arg(long = "refine-tol", default_value_t = 1e-10)]
    pub refine_tol: f64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// all, census, boundary, constructions or optimizer.
    #[arg(long, default_value = "all")]
    pub suite: String,
}

/// Runs a parsed command, writing its report to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let text = match cli.command {
        Command::Census(a) => census(&a)?.to_string(),
        Command::Boundary(a) => emit(boundary(&a)?.to_string(), a.out.as_deref())?,
        Command::Member(a) => member(&a)?.to_string(),
        Command::Construct(a) => construct(&a)?.to_string(),
        Command::Sweep(a) => emit(sweep(&a)?.to_string(), a.out.as_deref())?,
        Command::Optimize(a) => optimize(&a)?.to_string(),
        Command::Verify(a) => return verify(&a, out),
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))
}

/// Writes `text` to `path` when given (and returns nothing to print).
fn emit(text: String, path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => io::write_text(p, &text).map(|_| String::new()),
        None => Ok(text),
    }
}

fn verdict_rows(report: &mut Report, d: &DensityVector, tol: f64) -> Result<()> {
    for (region, v) in membership_all(d, tol)? {
        report.field(region.name(), v);
    }
    Ok(())
}

pub fn census(a: &CensusArgs) -> Result<Report> {
    let text = io::read_text(&a.input)?;
    let source = a.input.display().to_string();
    let mut r = Report::new();
    let (d, tol) = if a.graphon {
        let w = io::parse_graphon(&text, &source)?;
        r.field("blocks", w.blocks());
        (w.densities(), a.tol.unwrap_or(DEFAULT_TOL))
    } else {
        let g = io::parse_edge_list(&text, &source)?;
        let c = census_fast(&g)?;
        r.field("n", g.n()).field("m", g.m());
        r.field("counts", c.counts().map(|v| v.to_string()).join(","));
        (densities(&c), a.tol.unwrap_or(10.0 / g.n() as f64))
    };
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(CliError::domain(format!(
            "tol = {tol} must be a finite value >= 0"
        )));
    }
    r.field("d", nums(&d.profile()))
        .field("de", num(d.de))
        .field("tol", num(tol));
    verdict_rows(&mut r, &d, tol)?;
    Ok(r)
}

pub fn boundary(a: &BoundaryArgs) -> Result<Csv> {
    let region: RegionId = a.region.parse()?;
    let mut t = Csv::new(&["param", "x", "y", "branch"]);
    for p in sample_boundary(region, a.samples)? {
        t.push(vec![num(p.param), num(p.x), num(p.y), p.branch.to_string()]);
    }
    Ok(t)
}

/// `sIJ` with distinct indices in `0..=3`.
fn region_pair(name: &str) -> Result<(usize, usize)> {
    let bad = || {
        CliError::domain(format!(
            "unknown region {name:?}; expected s03, s12, s13, s23 or sIJ with distinct I, J in 0..=3"
        ))
    };
    let digits: Vec<usize> = name
        .strip_prefix(['s', 'S'])
        .ok_or_else(bad)?
        .chars()
        .map(|c| c.to_digit(10).map(|d| d as usize))
        .collect::<Option<_>>()
        .ok_or_else(bad)?;
    match digits[..] {
        [i, j] if i <= 3 && j <= 3 && i != j => Ok((i, j)),
        _ => Err(bad()),
    }
}

pub fn member(a: &MemberArgs) -> Result<Report> {
    let (i, j) = region_pair(&a.region)?;
    let (region, v) = membership_pair(i, j, a.x, a.y, a.tol)?;
    let mut r = Report::new();
    r.field("region", region)
        .field("status", v.status().as_str())
        .field("slack", num(v.slack))
        .field("binding", v.binding.label)
        .field("constraint", v.binding.name)
        .field("verdict", v);
    Ok(r)
}

fn family_spec(family: &str, params: &[String]) -> Result<FamilySpec> {
    let family: Family = family.parse()?;
    let mut spec = FamilySpec::new(family);
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| CliError::domain(format!("parameter {p:?} is not key=value")))?;
        let v = parse_real(v)
            .ok_or_else(|| CliError::domain(format!("parameter {k}: {v:?} is not a number")))?;
        spec.set(k.trim(), v);
    }
    spec.check_names()?;
    Ok(spec)
}

pub fn construct(a: &ConstructArgs) -> Result<Report> {
    let mut spec = family_spec(&a.family, &a.params)?;
    let limit = spec.graphon()?.densities();
    spec.n = Some(a.n);
    spec.seed = Some(a.seed);
    let g = realize(&spec)?;
    let c = census_fast(&g)?;
    let d = densities(&c);
    io::write_text(&a.out, &io::format_edge_list(&g))?;
    let tol = 10.0 / g.n() as f64;
    let mut r = Report::new();
    r.field("family", spec.family)
        .field(
            "params",
            spec.params
                .iter()
                .map(|(k, v)| format!("{k}={}", num(*v)))
                .collect::<Vec<_>>()
                .join(";"),
        )
        .field("n", g.n())
        .field("m", g.m())
        .field("seed", a.seed)
        .field("counts", c.counts().map(|v| v.to_string()).join(","))
        .field("d", nums(&d.profile()))
        .field("limit_d", nums(&limit.profile()))
        .field("de", num(d.de))
        .field("limit_de", num(limit.de))
        .field("deviation", num(d.max_abs_diff(&limit)))
        .field("tol", num(tol));
    verdict_rows(&mut r, &d, tol)?;
    let mut summary = a.out.clone().into_os_string();
    summary.push(".summary");
    io::write_text(Path::new(&summary), &r.to_string())?;
    Ok(r)
}

pub fn sweep(a: &SweepArgs) -> Result<Csv> {
    let family: Family = a.family.parse()?;
    let grid = sweep::parse_param_grid(&a.param_grid)?;
    let ns = sweep::parse_values(&a.n_list, |s| s.parse::<usize>().ok())
        .map_err(|bad| CliError::domain(format!("n-list: {bad:?} is not a vertex count")))?;
    if ns.is_empty() {
        return Err(CliError::domain("n-list is empty"));
    }
    let seeds = sweep::parse_values(&a.seeds, |s| s.parse::<u64>().ok())
        .map_err(|bad| CliError::domain(format!("seeds: {bad:?} is not a seed")))?;
    if seeds.is_empty() {
        return Err(CliError::domain("seed list is empty"));
    }
    Ok(sweep::to_csv(&sweep::run(family, &grid, &ns, &seeds)?))
}

pub fn optimize(a: &OptimizeArgs) -> Result<Report> {
    ObjectiveParams::new(a.alpha)?;
    let res = maximize_grid(a.alpha, a.grid, a.refine_tol)?;
    let mut t = Csv::new(&[
        "label",
        "x1",
        "x2",
        "x3",
        "y1",
        "y2",
        "y3",
        "value",
        "printed",
        "below_max",
        "note",
    ]);
    for c in &res.candidates {
        let mut row = vec![c.label.to_string()];
        row.extend(c.point.x.iter().chain(&c.point.y).map(|&v| num(v)));
        row.push(num(c.value));
        row.push(c.printed.map(num).unwrap_or_default());
        row.push(num(res.analytic_value - c.value));
        row.push(
            if c.optimal {
                "optimum"
            } else if c.degenerate {
                "degenerate"
            } else {
                ""
            }
            .to_string(),
        );
        t.push(row);
    }
    let mut r = Report::new();
    r.field("alpha", num(res.alpha))
        .field("sigma", num(optimal_sigma(res.alpha)?))
        .field("analytic_value", num(res.analytic_value))
        .field("grid_value", num(res.value))
        .field("gap", num(res.gap()))
        .field("best_x", nums(&res.best.x))
        .field("best_y", nums(&res.best.y))
        .field("stationarity_residual", num(res.stationarity_residual))
        .field("refine_sweeps", res.refine_sweeps)
        .table("candidates", &t);
    Ok(r)
}

fn verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<()> {
    let suite: verify::Suite = a.suite.parse()?;
    let checks = verify::run(suite);
    let stdout = |e| CliError::io("<stdout>", e);
    for c in &checks {
        writeln!(out, "{c}").map_err(stdout)?;
    }
    match checks.iter().find(|c| !c.pass()) {
        Some(c) => Err(CliError::domain(format!(
            "invariant failed: {}/{} (measured {})",
            c.suite,
            c.name,
            num(c.measured)
        ))),
        None => {
            writeln!(out, "all {} invariants pass", checks.len()).map_err(stdout)?;
            Ok(())
        }
    }
}
