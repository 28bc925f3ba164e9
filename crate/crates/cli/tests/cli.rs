mod common;

use std::fs;

use common::*;
use tempfile::tempdir;

#[test]
fn census_of_c5() {
    let dir = tempdir().unwrap();
    let f = dir.path().join("c5.txt");
    fs::write(&f, C5).unwrap();
    let r = triprofile(&["census", &path_arg(&f)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.field("d"), "0,0.5,0.5,0");
    assert_eq!(r.field("counts"), "0,5,5,0");
    assert_eq!(r.num("de"), 0.5);
    assert_eq!(r.num("tol"), 2.0);
    for region in ["s03", "s12", "s13", "s23"] {
        assert!(!r.field(region).starts_with("outside"), "{}", r.stdout);
    }
}

#[test]
fn census_of_two_cliques_graphon() {
    let dir = tempdir().unwrap();
    let f = dir.path().join("w.json");
    fs::write(&f, TWO_CLIQUES).unwrap();
    let r = triprofile(&["census", "--graphon", &path_arg(&f)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.field("d"), "0,0.75,0,0.25");
    let s13 = r.field("s13");
    assert!(
        s13.starts_with("boundary,") && s13.contains("binding unit-sum"),
        "{s13}"
    );
}

#[test]
fn census_errors() {
    let dir = tempdir().unwrap();
    let f = dir.path().join("bad.txt");
    fs::write(&f, "0 1\n3 3\n").unwrap();
    let r = triprofile(&["census", &path_arg(&f)]);
    assert_eq!(r.code, 2);
    assert!(
        r.stderr.contains("line 2") && r.stderr.contains("self-loop"),
        "{}",
        r.stderr
    );

    fs::write(&f, "0 1\n1 2\n2 0\n1 0\n").unwrap();
    let r = triprofile(&["census", &path_arg(&f)]);
    assert_eq!(r.code, 2);
    assert!(
        r.stderr.contains("line 4") && r.stderr.contains("duplicate"),
        "{}",
        r.stderr
    );

    fs::write(&f, "0 1\n").unwrap();
    let r = triprofile(&["census", &path_arg(&f)]);
    assert_eq!(r.code, 1, "n = 2 is a domain error");
    assert!(r.stderr.contains("too small"), "{}", r.stderr);

    let r = triprofile(&["census", &path_arg(&dir.path().join("missing.txt"))]);
    assert_eq!(r.code, 2);

    fs::write(&f, r#"{"sizes": [0.5, 0.4], "probs": [[1, 0], [0, 1]]}"#).unwrap();
    let r = triprofile(&["census", "--graphon", &path_arg(&f)]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("sum"), "{}", r.stderr);

    fs::write(&f, C5).unwrap();
    let r = triprofile(&["census", "--tol", "-1", &path_arg(&f)]);
    assert_eq!(r.code, 1);
}

fn boundary_rows(region: &str, samples: usize) -> Vec<Vec<String>> {
    let r = triprofile(&[
        "boundary",
        "--region",
        region,
        "--samples",
        &samples.to_string(),
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rows = csv_rows(&r.stdout);
    assert_eq!(rows[0], ["param", "x", "y", "branch"]);
    rows
}

fn floats(rows: &[Vec<String>], name: &str) -> Vec<f64> {
    column(rows, name)
        .iter()
        .map(|v| v.parse().unwrap())
        .collect()
}

#[test]
fn s13_boundary_has_its_junctions() {
    let rows = boundary_rows("s13", 1000);
    let ys = floats(&rows, "y");
    let spacing = 1.0 / 999.0;
    for j in [1.0 / 16.0, 1.0 / 9.0, 0.25] {
        let best = ys
            .iter()
            .map(|y| (y - j).abs())
            .fold(f64::INFINITY, f64::min);
        assert!(best <= spacing, "junction {j}: {best}");
    }
    let branches = column(&rows, "branch");
    for b in ["linear", "concave-hA", "convex-hB", "unit-sum"] {
        assert!(branches.iter().any(|v| v == b), "{b}");
    }
}

#[test]
fn s12_boundary_is_a_triangle() {
    let rows = boundary_rows("s12", 5);
    let (xs, ys) = (floats(&rows, "x"), floats(&rows, "y"));
    let mut branches = column(&rows, "branch");
    branches.dedup();
    assert_eq!(branches.len(), 3);
    for (x, y) in xs.iter().zip(&ys) {
        let on_edge = x.abs() < 1e-15 || y.abs() < 1e-15 || (x + y - 0.75).abs() < 1e-15;
        assert!(on_edge, "({x}, {y})");
    }
}

#[test]
fn s23_boundary_endpoints() {
    let rows = boundary_rows("s23", 50);
    let pts: Vec<(f64, f64)> = floats(&rows, "x")
        .into_iter()
        .zip(floats(&rows, "y"))
        .collect();
    for want in [(0.75, 0.0), (0.0, 1.0)] {
        assert!(
            pts.iter()
                .any(|p| (p.0 - want.0).abs() < 1e-12 && (p.1 - want.1).abs() < 1e-12),
            "{want:?}"
        );
    }
}

#[test]
fn boundary_csv_round_trips_and_is_deterministic() {
    let dir = tempdir().unwrap();
    for region in ["s03", "s12", "s13", "s23"] {
        let a = dir.path().join(format!("{region}-a.csv"));
        let b = dir.path().join(format!("{region}-b.csv"));
        for f in [&a, &b] {
            let r = triprofile(&[
                "boundary",
                "--region",
                region,
                "--samples",
                "300",
                "--out",
                &path_arg(f),
            ]);
            assert_eq!(r.code, 0);
            assert!(r.stdout.is_empty());
        }
        let text = fs::read_to_string(&a).unwrap();
        assert_eq!(text, fs::read_to_string(&b).unwrap());
        assert!(text.ends_with('\n') && !text.contains('\r'));
        for row in csv_rows(&text).iter().skip(1) {
            for cell in &row[..3] {
                let v: f64 = cell.parse().unwrap();
                assert_eq!(&triprofile::io::num(v), cell);
            }
        }
    }
}

#[test]
fn boundary_errors() {
    assert_eq!(triprofile(&["boundary", "--region", "s14"]).code, 1);
    assert_eq!(
        triprofile(&["boundary", "--region", "s13", "--samples", "1"]).code,
        1
    );
    assert_eq!(
        triprofile(&["boundary", "--region", "s13", "--samples", "x"]).code,
        2
    );
    assert_eq!(
        triprofile(&["boundary", "--region", "s13", "--bogus"]).code,
        2
    );
}

#[test]
fn member_examples() {
    let r = triprofile(&["member", "--region", "s12", "--x", "0.5", "--y", "0.3"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.field("status"), "outside");
    assert!((r.num("slack") + 0.05).abs() < 1e-12);

    let r = triprofile(&["member", "--region", "s03", "--x", "0.125", "--y", "0.125"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.field("status"), "boundary");
    assert_eq!(r.field("binding"), "goodman");

    let r = triprofile(&["member", "--region", "s13", "--x", "0.4", "--y", "0.01"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.field("status"), "inside");
    assert!((r.num("slack") - 0.005).abs() < 1e-12);

    // (d3, d0) is answered through S03 with the coordinates swapped
    let r = triprofile(&["member", "--region", "s30", "--x", "0.5", "--y", "0.1"]);
    assert_eq!(r.field("region"), "s03");
    assert_eq!(r.field("status"), "inside");
}

#[test]
fn member_errors() {
    assert_eq!(
        triprofile(&["member", "--region", "s44", "--x", "0", "--y", "0"]).code,
        1
    );
    assert_eq!(
        triprofile(&["member", "--region", "s12", "--x", "0", "--y", "0", "--tol", "-1"]).code,
        1
    );
    assert_eq!(
        triprofile(&["member", "--region", "s12", "--x", "inf", "--y", "0"]).code,
        1
    );
    assert_eq!(
        triprofile(&["member", "--region", "s12", "--x", "0"]).code,
        2
    );
}

fn construct(args: &[&str]) -> (Run, String, String) {
    let dir = tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let mut all: Vec<String> = vec!["construct".into()];
    all.extend(args.iter().map(|s| s.to_string()));
    all.extend(["--out".into(), path_arg(&out)]);
    let r = triprofile(&all);
    let graph = fs::read_to_string(&out).unwrap_or_default();
    let summary = fs::read_to_string(dir.path().join("g.txt.summary")).unwrap_or_default();
    (r, graph, summary)
}

#[test]
fn construct_examples() {
    let (r, graph, summary) = construct(&["--family", "g0", "--param", "x=0.2", "--n", "2000"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.num("deviation") <= 0.01, "{}", r.stdout);
    assert_eq!(summary, r.stdout);
    assert!(graph.starts_with("n 2000\n"));
    // the written graph re-parses to the reported census
    let dir = tempdir().unwrap();
    let f = dir.path().join("g.txt");
    fs::write(&f, &graph).unwrap();
    let again = triprofile(&["census", &path_arg(&f)]);
    assert_eq!(again.field("counts"), r.field("counts"));

    let (r, _, _) = construct(&[
        "--family",
        "multipartite",
        "--param",
        "a=0.333",
        "--param",
        "b=1",
        "--n",
        "999",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let slack: f64 = r
        .field("s23")
        .split("slack ")
        .nth(1)
        .unwrap()
        .split(',')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!(slack.abs() <= 0.01, "{}", r.stdout);

    let (r, graph, _) = construct(&[
        "--family", "g2", "--param", "a=0", "--param", "p=1", "--n", "100",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.num("m"), 0.0);
    assert_eq!(graph, "n 100\n");
}

#[test]
fn construct_is_deterministic() {
    let args = [
        "--family", "g1", "--param", "a=0.3", "--param", "x=0.05", "--n", "300", "--seed", "9",
    ];
    let (_, a, _) = construct(&args);
    let (_, b, _) = construct(&args);
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn construct_errors() {
    let (r, _, _) = construct(&["--family", "g7", "--n", "100"]);
    assert_eq!(r.code, 1);
    assert!(
        r.stderr.contains("g0") && r.stderr.contains("multipartite"),
        "{}",
        r.stderr
    );
    let (r, _, _) = construct(&[
        "--family", "g2", "--param", "a=2", "--param", "p=0.5", "--n", "100",
    ]);
    assert_eq!(r.code, 1);
    assert!(
        r.stderr.contains("a in [0, 1]") && r.stderr.contains("p in [0, 1]"),
        "{}",
        r.stderr
    );
    let (r, _, _) = construct(&["--family", "g0", "--param", "y=0.1", "--n", "100"]);
    assert_eq!(r.code, 1);
    let (r, _, _) = construct(&["--family", "g0", "--param", "x=0.1", "--n", "5"]);
    assert_eq!(r.code, 1);
}

#[test]
fn sweep_g0_decreases() {
    let r = triprofile(&[
        "sweep",
        "--family",
        "g0",
        "--param-grid",
        "x=0.05,0.1,0.2",
        "--n-list",
        "500,1000,2000",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rows = csv_rows(&r.stdout);
    assert_eq!(
        rows[0].join(","),
        "family,params,n,seed,d0,d1,d2,d3,limit_d0,limit_d1,limit_d2,limit_d3,max_dev"
    );
    assert_eq!(rows.len(), 1 + 3 * 3 * 4);
    let (params, seeds, devs) = (
        column(&rows, "params"),
        column(&rows, "seed"),
        column(&rows, "max_dev"),
    );
    for x in ["x=0.05", "x=0.1", "x=0.2"] {
        let mean: Vec<f64> = (0..params.len())
            .filter(|&i| params[i] == x && seeds[i] == "mean")
            .map(|i| devs[i].parse().unwrap())
            .collect();
        assert_eq!(mean.len(), 3);
        assert!(mean[0] >= mean[1] && mean[1] >= mean[2], "{x}: {mean:?}");
    }
}

#[test]
fn sweep_s12_traces_the_cubic() {
    let r = triprofile(&[
        "sweep",
        "--family",
        "s12",
        "--param-grid",
        "a=1/2",
        "--param-grid",
        "p=0,0.25,0.5,0.75,1",
        "--n-list",
        "100",
        "--seeds",
        "0",
    ]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let rows = csv_rows(&r.stdout);
    let params = column(&rows, "params");
    let (l1, l2) = (column(&rows, "limit_d1"), column(&rows, "limit_d2"));
    for i in 0..params.len() {
        let p: f64 = params[i].split("p=").nth(1).unwrap().parse().unwrap();
        let co = 3.0 * p * (1.0 - p) * (1.0 - p) + 0.75 * p * (2.0 * p - 1.0);
        let ch = 3.0 * p * p * (1.0 - p) + 0.75 * (1.0 - p) * (1.0 - 2.0 * p);
        assert!(
            (l1[i].parse::<f64>().unwrap() - co).abs() <= 1e-12,
            "p = {p}"
        );
        assert!(
            (l2[i].parse::<f64>().unwrap() - ch).abs() <= 1e-12,
            "p = {p}"
        );
    }
}

#[test]
fn sweep_errors() {
    let base = ["sweep", "--family", "g0", "--param-grid", "x=0.1"];
    let with = |extra: &[&str]| {
        let mut v: Vec<&str> = base.to_vec();
        v.extend(extra);
        triprofile(&v)
    };
    assert_eq!(with(&["--n-list", ""]).code, 1);
    assert_eq!(with(&["--n-list", "100,abc"]).code, 1);
    assert_eq!(with(&["--n-list", "100", "--seeds", ""]).code, 1);
    assert_eq!(
        triprofile(&[
            "sweep",
            "--family",
            "g0",
            "--param-grid",
            "x",
            "--n-list",
            "100"
        ])
        .code,
        1
    );
    assert_eq!(
        triprofile(&["sweep", "--family", "g0", "--n-list", "100"]).code,
        1
    );
}

#[test]
fn optimize_examples() {
    let r = triprofile(&["optimize", "--alpha", "2.2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.num("gap") <= 1e-6);

    let r = triprofile(&["optimize", "--alpha", "2.0"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("(2, 1+sqrt(2))"), "{}", r.stderr);
    assert_eq!(triprofile(&["optimize", "--alpha", "2.5"]).code, 1);
    assert_eq!(
        triprofile(&["optimize", "--alpha", "2.2", "--grid", "10"]).code,
        1
    );

    let a = 2.41;
    let r = triprofile(&["optimize", "--alpha", "2.41"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!((r.num("sigma") - 0.25).abs() < 0.002);
    let table: Vec<&str> = r
        .stdout
        .lines()
        .skip_while(|l| *l != "candidates:")
        .skip(1)
        .map(str::trim)
        .collect();
    let rows = csv_rows(&table.join("\n"));
    let (values, below) = (column(&rows, "value"), column(&rows, "below_max"));
    for want in [(3.0 - a) / 4.0, (9.0 - a) / 16.0] {
        let i = values
            .iter()
            .position(|v| (v.parse::<f64>().unwrap() - want).abs() < 1e-12)
            .unwrap_or_else(|| panic!("no row with value {want}"));
        assert!(below[i].parse::<f64>().unwrap() > 0.0);
    }
}

#[test]
fn verify_suites() {
    let r = triprofile(&["verify", "--suite", "census"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert!(r.stdout.contains("PASS census/fast-equals-brute"));
    for suite in ["boundary", "constructions", "optimizer"] {
        let r = triprofile(&["verify", "--suite", suite]);
        assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
        assert!(!r.stdout.contains("FAIL"));
    }
    assert_eq!(triprofile(&["verify", "--suite", "nothing"]).code, 1);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(triprofile::<&str>(&[]).code, 2);
    assert_eq!(triprofile(&["frobnicate"]).code, 2);
    assert_eq!(triprofile(&["optimize"]).code, 2);
    assert_eq!(triprofile(&["--help"]).code, 0);
}
