#![allow(dead_code)]

use std::path::Path;
use std::process::Command;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    /// Value of a `key: value` line.
    pub fn field(&self, key: &str) -> &str {
        let prefix = format!("{key}: ");
        self.stdout
            .lines()
            .find_map(|l| l.strip_prefix(prefix.as_str()))
            .unwrap_or_else(|| panic!("no {key:?} in\n{}", self.stdout))
    }

    pub fn num(&self, key: &str) -> f64 {
        self.field(key).parse().unwrap()
    }
}

pub fn triprofile<S: AsRef<str>>(args: &[S]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_triprofile"))
        .args(args.iter().map(|a| a.as_ref()))
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn path_arg(p: &Path) -> String {
    p.to_str().unwrap().to_string()
}

/// Rows of a CSV text as string cells, header first.
pub fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

/// Reads a column by header name, as floats where they parse.
pub fn column(rows: &[Vec<String>], name: &str) -> Vec<String> {
    let idx = rows[0]
        .iter()
        .position(|h| h == name)
        .unwrap_or_else(|| panic!("no column {name}"));
    rows[1..].iter().map(|r| r[idx].clone()).collect()
}

pub const C5: &str = "0 1\n1 2\n2 3\n3 4\n4 0\n";
pub const TWO_CLIQUES: &str = r#"{"sizes": [0.5, 0.5], "probs": [[1, 0], [0, 1]]}"#;
