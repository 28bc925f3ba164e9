//! Plain-text reports: `key: value` lines, with CSV tables indented under a
//! `key:` line.

use std::fmt::{self, Display};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    lines: Vec<String>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn field(&mut self, key: &str, value: impl Display) -> &mut Self {
        self.lines.push(format!("{key}: {value}"));
        self
    }

    pub fn table(&mut self, key: &str, csv: &Csv) -> &mut Self {
        self.lines.push(format!("{key}:"));
        self.lines.extend(csv.lines().map(|l| format!("  {l}")));
        self
    }

    /// Value of the first `key: value` line with this key.
    pub fn get(&self, key: &str) -> Option<&str> {
        let prefix = format!("{key}: ");
        self.lines
            .iter()
            .find_map(|l| l.strip_prefix(prefix.as_str()))
    }
}

impl Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// A CSV table with a header row; cells are written verbatim.
#[derive(Debug, Clone, PartialEq)]
pub struct Csv {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Csv {
    pub fn new<S: AsRef<str>>(header: &[S]) -> Self {
        Self {
            header: header.iter().map(|s| s.as_ref().to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn lines(&self) -> impl Iterator<Item = String> + '_ {
        std::iter::once(self.header.join(",")).chain(self.rows.iter().map(|r| r.join(",")))
    }
}

impl Display for Csv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
