use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{
    clique_plus_isolated_graphon, g0_graphon, g1_graphon, g2_graphon, pr_extremal_graphon,
    s12_graphon, s23_graphon, InnerChoice,
};
use crate::error::{Error, Result};
use crate::graphon::StepGraphon;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    G0,
    G1,
    G2,
    TwoBlockS12,
    MultipartiteS23,
    PRExtremal,
    CliquePlusIsolated,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::G0,
        Family::G1,
        Family::G2,
        Family::TwoBlockS12,
        Family::MultipartiteS23,
        Family::PRExtremal,
        Family::CliquePlusIsolated,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::G0 => "g0",
            Family::G1 => "g1",
            Family::G2 => "g2",
            Family::TwoBlockS12 => "s12",
            Family::MultipartiteS23 => "multipartite",
            Family::PRExtremal => "pr-extremal",
            Family::CliquePlusIsolated => "clique-isolated",
        }
    }

    /// Parameter names with their valid ranges.
    pub fn params(self) -> &'static [(&'static str, &'static str)] {
        match self {
            Family::G0 => &[("x", "[-1/4, 1/4]")],
            Family::G1 => &[("a", "[0, 1]"), ("x", "[-1/4, 1/4]")],
            Family::G2 | Family::TwoBlockS12 => &[("a", "[0, 1]"), ("p", "[0, 1]")],
            Family::MultipartiteS23 => &[("a", "[0, 1/2]"), ("b", "[0, 1]")],
            Family::PRExtremal => &[("de", "[1/2, 0.999]")],
            Family::CliquePlusIsolated => &[("a", "[0, 1]"), ("complement", "0 or 1, default 0")],
        }
    }

    /// Whether realizations draw random edges for some parameter values.
    pub fn is_random(self) -> bool {
        matches!(
            self,
            Family::G0 | Family::G1 | Family::G2 | Family::TwoBlockS12
        )
    }

    /// Human-readable parameter list, e.g. `"a in [0, 1], p in [0, 1]"`.
    pub fn usage(self) -> String {
        self.params()
            .iter()
            .map(|(n, r)| format!("{n} in {r}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase();
        let found = match key.as_str() {
            "two-block" | "twoblocks12" => Some(Family::TwoBlockS12),
            "s23" | "multipartites23" => Some(Family::MultipartiteS23),
            "pr" | "prextremal" => Some(Family::PRExtremal),
            "clique" | "cliqueplusisolated" => Some(Family::CliquePlusIsolated),
            _ => Family::ALL.into_iter().find(|f| f.name() == key),
        };
        found.ok_or_else(|| {
            let names: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
            Error::InvalidParams(format!(
                "unknown family {s:?}; expected one of {}",
                names.join(", ")
            ))
        })
    }
}

/// A construction family with named real parameters and an optional size
/// and seed for finite realizations.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: BTreeMap<String, f64>,
    pub n: Option<usize>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            params: BTreeMap::new(),
            n: None,
            seed: None,
        }
    }

    pub fn set(&mut self, name: &str, value: f64) -> &mut Self {
        self.params.insert(name.to_string(), value);
        self
    }

    fn invalid(&self, msg: String) -> Error {
        Error::InvalidParams(format!(
            "{msg}; family {} takes {}",
            self.family,
            self.family.usage()
        ))
    }

    pub fn param(&self, name: &str) -> Result<f64> {
        self.params
            .get(name)
            .copied()
            .ok_or_else(|| self.invalid(format!("missing parameter {name}")))
    }

    /// A 0/1 parameter, false when absent.
    pub fn flag(&self, name: &str) -> Result<bool> {
        match self.params.get(name) {
            None => Ok(false),
            Some(&0.0) => Ok(false),
            Some(&1.0) => Ok(true),
            Some(&v) => Err(self.invalid(format!("parameter {name} = {v} must be 0 or 1"))),
        }
    }

    /// Rejects parameters the family does not take.
    pub fn check_names(&self) -> Result<()> {
        for name in self.params.keys() {
            if !self.family.params().iter().any(|(p, _)| p == name) {
                return Err(self.invalid(format!("unknown parameter {name}")));
            }
        }
        Ok(())
    }

    /// The limit object of the family.
    pub fn graphon(&self) -> Result<StepGraphon> {
        self.check_names()?;
        let get = |n: &str| self.param(n);
        let w = match self.family {
            Family::G0 => g0_graphon(get("x")?),
            Family::G1 => g1_graphon(get("a")?, get("x")?),
            Family::G2 => g2_graphon(get("a")?, get("p")?),
            Family::TwoBlockS12 => s12_graphon(get("a")?, get("p")?),
            Family::MultipartiteS23 => s23_graphon(get("a")?, get("b")?),
            Family::PRExtremal => pr_extremal_graphon(get("de")?, InnerChoice::Bipartite),
            Family::CliquePlusIsolated => {
                clique_plus_isolated_graphon(get("a")?, self.flag("complement")?)
            }
        };
        w.map_err(|e| match e {
            Error::Domain { .. } => self.invalid(e.to_string()),
            other => other,
        })
    }
}
