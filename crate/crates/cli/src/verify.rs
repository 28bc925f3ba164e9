//! Desk-scale invariant suites behind `triprofile verify`.

use std::fmt;
use std::str::FromStr;

use triprofile_core::boundary::{
    g_r, g_r_inverse, g_t, g_t_prime, h_a, h_b, membership, membership_all, Status,
};
use triprofile_core::census::{census_brute, census_fast, densities};
use triprofile_core::constructions::{
    g0_graphon, pr_extremal_graphon, realize, Family, FamilySpec, InnerChoice,
};
use triprofile_core::graphon::sample_w_random_graph;
use triprofile_core::optimizer::{
    analytic_candidates, closed_form_max, closed_form_max_via_h, maximize_grid, objective_f,
    optimum_point, stationarity_residual, FeasiblePoint, ALPHA_MAX, ALPHA_MIN,
};
use triprofile_core::rng::SeededRng;
use triprofile_core::{RegionId, StepGraphon};

use crate::error::CliError;
use crate::io::num;
use crate::report::Csv;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Census,
    Boundary,
    Constructions,
    Optimizer,
}

impl Suite {
    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![
                Suite::Census,
                Suite::Boundary,
                Suite::Constructions,
                Suite::Optimizer,
            ],
            s => vec![s],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Census => "census",
            Suite::Boundary => "boundary",
            Suite::Constructions => "constructions",
            Suite::Optimizer => "optimizer",
        }
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        [Suite::All, Suite::Census, Suite::Boundary, Suite::Constructions, Suite::Optimizer]
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| {
                CliError::domain(format!(
                    "unknown suite {s:?}; expected one of all, census, boundary, constructions, optimizer"
                ))
            })
    }
}

/// Outcome of one invariant: `measured` is compared against `limit` (an
/// upper bound unless `at_least` is set).
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub measured: f64,
    pub limit: f64,
    pub at_least: bool,
}

impl Check {
    fn at_most(suite: &'static str, name: &'static str, measured: f64, limit: f64) -> Self {
        Check {
            suite,
            name,
            measured,
            limit,
            at_least: false,
        }
    }

    fn at_least(suite: &'static str, name: &'static str, measured: f64, limit: f64) -> Self {
        Check {
            suite,
            name,
            measured,
            limit,
            at_least: true,
        }
    }

    pub fn pass(&self) -> bool {
        if self.at_least {
            self.measured >= self.limit
        } else {
            self.measured <= self.limit
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = if self.at_least { ">=" } else { "<=" };
        write!(
            f,
            "{} {}/{}: {} {op} {}",
            if self.pass() { "PASS" } else { "FAIL" },
            self.suite,
            self.name,
            num(self.measured),
            num(self.limit)
        )
    }
}

pub fn run(suite: Suite) -> Vec<Check> {
    suite
        .parts()
        .into_iter()
        .flat_map(|s| match s {
            Suite::Census => census(),
            Suite::Boundary => boundary(),
            Suite::Constructions => constructions(),
            Suite::Optimizer => optimizer(),
            Suite::All => unreachable!(),
        })
        .collect()
}

pub fn to_csv(checks: &[Check]) -> Csv {
    let mut t = Csv::new(&["suite", "invariant", "status", "measured", "limit"]);
    for c in checks {
        let op = if c.at_least { ">=" } else { "<=" };
        t.push(vec![
            c.suite.to_string(),
            c.name.to_string(),
            if c.pass() { "pass" } else { "fail" }.to_string(),
            num(c.measured),
            format!("{op}{}", num(c.limit)),
        ]);
    }
    t
}

/// Random step graphon with 1 to 4 blocks.
pub fn random_graphon(rng: &mut SeededRng) -> StepGraphon {
    let b = 1 + (rng.next_u64() % 4) as usize;
    let raw: Vec<f64> = (0..b).map(|_| 0.05 + rng.uniform()).collect();
    let total: f64 = raw.iter().sum();
    let mut sizes: Vec<f64> = raw.iter().map(|v| v / total).collect();
    let head: f64 = sizes[..b - 1].iter().sum();
    sizes[b - 1] = 1.0 - head;
    let mut probs = vec![vec![0.0; b]; b];
    for i in 0..b {
        for j in i..b {
            let p = match rng.next_u64() % 3 {
                0 => (rng.next_u64() % 2) as f64,
                _ => rng.uniform(),
            };
            probs[i][j] = p;
            probs[j][i] = p;
        }
    }
    StepGraphon::new(sizes, probs).expect("normalised sizes")
}

const EDGE_PROBS: [f64; 5] = [0.05, 0.3, 0.5, 0.8, 1.0];

fn census() -> Vec<Check> {
    const S: &str = "census";
    let mut rng = SeededRng::new(1);
    let (mut mismatches, mut identity) = (0u64, 0u64);
    for i in 0..1000u64 {
        let n = 3 + (rng.next_u64() % 58) as usize;
        let p = EDGE_PROBS[(i % 5) as usize];
        let g = sample_w_random_graph(&StepGraphon::constant(p).unwrap(), n, i);
        let c = census_fast(&g).unwrap();
        if c != census_brute(&g).unwrap() {
            mismatches += 1;
        }
        let n = n as u64;
        if c.c1 + 2 * c.c2 + 3 * c.c3 != g.m() * (n - 2) || c.total() != n * (n - 1) * (n - 2) / 6 {
            identity += 1;
        }
        if census_fast(&g.complement()).unwrap() != c.complement() {
            identity += 1;
        }
    }
    let (mut norm, mut lemma6, mut goodman) = (0.0f64, f64::INFINITY, f64::INFINITY);
    for _ in 0..1000 {
        let d = random_graphon(&mut rng).densities();
        norm = norm.max((d.d0 + d.d1 + d.d2 + d.d3 - 1.0).abs());
        norm = norm.max((d.de - (d.d1 + 2.0 * d.d2 + 3.0 * d.d3) / 3.0).abs());
        lemma6 = lemma6.min(3.0 * d.d3 + 0.375 - d.d1);
        goodman = goodman.min(d.d3 - d.de * (2.0 * d.de - 1.0));
    }
    vec![
        Check::at_most(
            S,
            "fast-equals-brute mismatches (1000 graphs, n<=60)",
            mismatches as f64,
            0.0,
        ),
        Check::at_most(S, "count identities violated", identity as f64, 0.0),
        Check::at_most(S, "graphon normalisation error", norm, 1e-12),
        Check::at_least(S, "d1<=3d3+3/8 slack on graphons", lemma6, -1e-12),
        Check::at_least(S, "goodman slack on graphons", goodman, -1e-12),
    ]
}

fn boundary() -> Vec<Check> {
    const S: &str = "boundary";
    let jump = (2..=10)
        .map(|k| {
            let b = 1.0 - 1.0 / k as f64;
            (g_r(b - 1e-8).unwrap() - g_r(b + 1e-8).unwrap()).abs()
        })
        .fold(0.0, f64::max);
    let round = (0..500)
        .map(|i| {
            let t = i as f64 / 499.0;
            (g_r(g_r_inverse(t).unwrap()).unwrap() - t).abs()
        })
        .fold(0.0, f64::max);
    let g3 = (0..1000)
        .map(|i| {
            let de = 0.5 + (2.0 / 3.0 - 0.5) * i as f64 / 999.0;
            let r = (4.0 - 6.0 * de).sqrt();
            (g_r(de).unwrap() - (1.0 - r) * (2.0 + r) * (2.0 + r) / 18.0).abs()
        })
        .fold(0.0, f64::max);
    let gt = [
        (1.0 / 16.0, 9.0 / 16.0),
        (1.0 / 9.0, 2.0 / 3.0),
        (0.25, 0.75),
    ]
    .iter()
    .flat_map(|&(x, want)| [-1e-10, 0.0, 1e-10].map(|h| (g_t(x + h).unwrap() - want).abs()))
    .fold(0.0, f64::max);
    let mut rng = SeededRng::new(2);
    let mut slack = f64::INFINITY;
    for _ in 0..2000 {
        let d = random_graphon(&mut rng).densities();
        for (_, v) in membership_all(&d, 1e-9).unwrap() {
            slack = slack.min(v.slack);
        }
    }
    vec![
        Check::at_most(S, "g_R jump at 1-1/k, k=2..10", jump, 1e-6),
        Check::at_most(S, "g_R closed form on [1/2,2/3]", g3, 1e-12),
        Check::at_most(S, "g_R round trip", round, 1e-9),
        Check::at_most(S, "g_t continuity at 1/16, 1/9, 1/4", gt, 1e-9),
        Check::at_least(S, "min slack of 2000 random graphons", slack, -1e-9),
    ]
}

fn constructions() -> Vec<Check> {
    const S: &str = "constructions";
    let mut on_boundary = 0.0f64;
    for i in 0..100 {
        let x = 0.25 * i as f64 / 99.0;
        let d = g0_graphon(x).unwrap().densities();
        let v = membership(RegionId::S13, d.d1, d.d3, 1e-9).unwrap();
        if v.status() == Status::Boundary {
            on_boundary = on_boundary.max(v.slack.abs());
        } else {
            on_boundary = f64::INFINITY;
        }
    }
    let (a1, a3) = h_a(0.25).unwrap();
    let (b1, b3) = h_b(0.5).unwrap();
    let (m1, m3) = h_a(1.0 / 3.0).unwrap();
    let (n1, n3) = h_b(1.0 / 3.0).unwrap();
    let anchors = [
        a1 - 9.0 / 16.0,
        a3 - 1.0 / 16.0,
        b1 - 0.75,
        b3 - 0.25,
        m1 - 2.0 / 3.0,
        m3 - 1.0 / 9.0,
        n1 - 2.0 / 3.0,
        n3 - 1.0 / 9.0,
    ]
    .iter()
    .fold(0.0f64, |m, v| m.max(v.abs()));
    let pr = (0..50)
        .map(|i| {
            let de = 0.5 + 0.45 * i as f64 / 49.0;
            let d = pr_extremal_graphon(de, InnerChoice::Bipartite)
                .unwrap()
                .densities();
            (d.de - de).abs().max((d.d3 - g_r(de).unwrap()).abs())
        })
        .fold(0.0, f64::max);
    let samples: [(Family, &[(&str, f64)]); 7] = [
        (Family::G0, &[("x", 0.09)]),
        (Family::G1, &[("a", 0.3), ("x", 0.2)]),
        (Family::G2, &[("a", 0.4), ("p", 0.3)]),
        (Family::TwoBlockS12, &[("a", 0.3), ("p", 0.6)]),
        (Family::MultipartiteS23, &[("a", 0.3), ("b", 0.8)]),
        (Family::PRExtremal, &[("de", 0.7)]),
        (Family::CliquePlusIsolated, &[("a", 0.6)]),
    ];
    let dev = samples
        .iter()
        .map(|(f, params)| {
            let mut spec = FamilySpec::new(*f);
            for &(k, v) in params.iter() {
                spec.set(k, v);
            }
            let limit = spec.graphon().unwrap().densities();
            spec.n = Some(500);
            spec.seed = Some(1);
            densities(&census_fast(&realize(&spec).unwrap()).unwrap()).max_abs_diff(&limit)
        })
        .fold(0.0, f64::max);
    vec![
        Check::at_most(
            S,
            "g0 on the S13 boundary, 100 x in [0,1/4]",
            on_boundary,
            1e-9,
        ),
        Check::at_most(S, "h_A / h_B anchor values", anchors, 1e-12),
        Check::at_most(S, "pr-extremal attains g_R", pr, 1e-9),
        Check::at_most(S, "deviation at n=500, every family", dev, 0.05),
    ]
}

fn alpha_grid() -> Vec<f64> {
    (0..20)
        .map(|i| ALPHA_MIN + (i as f64 + 0.5) / 20.0 * (ALPHA_MAX - ALPHA_MIN))
        .collect()
}

/// Uniform point of the simplex with uniform `y_j ∈ [1/2, 1]`.
pub fn random_feasible(rng: &mut SeededRng) -> FeasiblePoint {
    let (u, v) = (rng.uniform(), rng.uniform());
    let (lo, hi) = if u < v { (u, v) } else { (v, u) };
    FeasiblePoint {
        x: [lo, hi - lo, 1.0 - hi],
        y: [0.0; 3].map(|_| 0.5 + 0.5 * rng.uniform()),
    }
}

fn optimizer() -> Vec<Check> {
    const S: &str = "optimizer";
    let mut rng = SeededRng::new(3);
    let (mut excess, mut forms, mut resid, mut margin) =
        (f64::NEG_INFINITY, 0.0f64, 0.0f64, f64::INFINITY);
    for a in alpha_grid() {
        let m = closed_form_max(a).unwrap();
        for _ in 0..10_000 {
            excess = excess.max(objective_f(&random_feasible(&mut rng), a) - m);
        }
        forms = forms.max((m - closed_form_max_via_h(a).unwrap()).abs());
        resid = resid.max(stationarity_residual(&optimum_point(a).unwrap(), a));
        for c in analytic_candidates(a).unwrap() {
            if !c.optimal && !c.degenerate {
                margin = margin.min(m - c.value);
            }
        }
    }
    let gap = [2.05, 2.1, 2.2, 2.3, 2.41]
        .iter()
        .map(|&a| maximize_grid(a, 400, 1e-10).unwrap().gap())
        .fold(0.0, f64::max);
    let tangent = (1..20)
        .map(|i| {
            let x = 1.0 / 16.0 + (1.0 / 9.0 - 1.0 / 16.0) * i as f64 / 20.0;
            let a = g_t_prime(x).unwrap();
            (closed_form_max(a).unwrap() - (g_t(x).unwrap() - a * x)).abs()
        })
        .fold(0.0, f64::max);
    vec![
        Check::at_most(
            S,
            "random points above the maximum (20 alphas x 1e4)",
            excess,
            1e-9,
        ),
        Check::at_most(S, "grid oracle gap (grid 400)", gap, 1e-6),
        Check::at_most(S, "printed forms of the maximum agree", forms, 1e-12),
        Check::at_most(S, "stationarity residual at the optimum", resid, 1e-8),
        Check::at_least(S, "non-optimal candidates below the maximum", margin, 0.0),
        Check::at_most(S, "tangent-line consistency", tangent, 1e-9),
    ]
}
