//! Convergence sweeps: realize a family over a parameter grid, several sizes
//! and seeds, and compare each finite profile with the limit.

use std::collections::BTreeMap;

use triprofile_core::census::{census_fast, densities};
use triprofile_core::constructions::{realize, Family, FamilySpec};
use triprofile_core::DensityVector;

use crate::error::{CliError, Result};
use crate::io::{num, parse_real};
use crate::report::Csv;

pub const HEADER: [&str; 13] = [
    "family", "params", "n", "seed", "d0", "d1", "d2", "d3", "limit_d0", "limit_d1", "limit_d2",
    "limit_d3", "max_dev",
];

/// Seed column of the per-(params, n) row holding seed-averaged densities.
pub const MEAN_SEED: &str = "mean";

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub family: Family,
    pub params: BTreeMap<String, f64>,
    pub n: usize,
    /// `None` for the seed-averaged row.
    pub seed: Option<u64>,
    pub d: [f64; 4],
    pub limit: [f64; 4],
    pub max_dev: f64,
}

impl SweepRow {
    /// Parameters as `k=v` pairs joined by `;`.
    pub fn params_label(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={}", num(*v)))
            .collect::<Vec<_>>()
            .join(";")
    }

    fn cells(&self) -> Vec<String> {
        let mut row = vec![
            self.family.name().to_string(),
            self.params_label(),
            self.n.to_string(),
            self.seed.map_or(MEAN_SEED.to_string(), |s| s.to_string()),
        ];
        row.extend(self.d.iter().chain(&self.limit).map(|&v| num(v)));
        row.push(num(self.max_dev));
        row
    }
}

/// Parses `key=v1,v2,...` specs (values may be fractions) into the
/// cartesian product of the value lists, in the order given.
pub fn parse_param_grid(specs: &[String]) -> Result<Vec<BTreeMap<String, f64>>> {
    let mut grid = vec![BTreeMap::new()];
    for spec in specs {
        let (key, values) = spec.split_once('=').ok_or_else(|| {
            CliError::domain(format!("parameter grid {spec:?} is not key=v1,v2,..."))
        })?;
        let key = key.trim();
        let values = parse_values(values, parse_real)
            .map_err(|bad| CliError::domain(format!("parameter {key}: {bad:?} is not a number")))?;
        if values.is_empty() {
            return Err(CliError::domain(format!(
                "parameter {key} has an empty value list"
            )));
        }
        grid = grid
            .into_iter()
            .flat_map(|point| {
                values.iter().map(move |&v| {
                    let mut p = point.clone();
                    p.insert(key.to_string(), v);
                    p
                })
            })
            .collect();
    }
    Ok(grid)
}

/// Comma-separated list; the error carries the first bad item.
pub fn parse_values<T>(
    s: &str,
    parse: impl Fn(&str) -> Option<T>,
) -> std::result::Result<Vec<T>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse(t).ok_or_else(|| t.to_string()))
        .collect()
}

/// One row per (parameter point, n, seed), each group followed by a row of
/// densities averaged over the seeds. Averaging the profile before taking
/// the deviation separates the finite-size bias from sampling noise of the
/// same order.
pub fn run(
    family: Family,
    grid: &[BTreeMap<String, f64>],
    ns: &[usize],
    seeds: &[u64],
) -> Result<Vec<SweepRow>> {
    if grid.is_empty() || ns.is_empty() || seeds.is_empty() {
        return Err(CliError::domain(
            "sweep needs a parameter point, an n and a seed",
        ));
    }
    let mut rows = Vec::new();
    for params in grid {
        let mut spec = FamilySpec::new(family);
        spec.params = params.clone();
        let limit = spec.graphon()?.densities().profile();
        for &n in ns {
            let mut mean = [0.0; 4];
            for &seed in seeds {
                spec.n = Some(n);
                spec.seed = Some(seed);
                let d = densities(&census_fast(&realize(&spec)?)?).profile();
                for k in 0..4 {
                    mean[k] += d[k] / seeds.len() as f64;
                }
                rows.push(row(&spec, n, Some(seed), d, limit));
            }
            rows.push(row(&spec, n, None, mean, limit));
        }
    }
    Ok(rows)
}

fn row(spec: &FamilySpec, n: usize, seed: Option<u64>, d: [f64; 4], limit: [f64; 4]) -> SweepRow {
    let max_dev = DensityVector::from_profile(d).max_abs_diff(&DensityVector::from_profile(limit));
    SweepRow {
        family: spec.family,
        params: spec.params.clone(),
        n,
        seed,
        d,
        limit,
        max_dev,
    }
}

pub fn to_csv(rows: &[SweepRow]) -> Csv {
    let mut t = Csv::new(&HEADER);
    for r in rows {
        t.push(r.cells());
    }
    t
}
