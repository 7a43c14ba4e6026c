//! Named verification scenarios and lattice builders, registered by name.
//!
//! A [`Scenario`] runs a pipeline and returns [`Expectation`]s; the registry
//! wraps them into a versioned [`Report`].

mod catalog;
mod lattices;
mod report;

pub use lattices::{
    BccTorus, HexTorus, LatticeBuilder, LatticeRegistry, LatticeSpec, OctahedralSphere, SixteenCell,
};
pub use report::{Basis, Expectation, Report, Value, REPORT_FORMAT_VERSION};

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};

/// Inputs shared by every scenario run.
pub struct RunContext<'a> {
    pub lattices: &'a LatticeRegistry,
    /// Seed for randomized suites.
    pub seed: u64,
}

pub trait Scenario: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn tags(&self) -> &'static [&'static str];
    /// Lattice specs the scenario builds, for the report header.
    fn lattices(&self) -> &'static [&'static str];
    fn run(&self, ctx: &RunContext) -> Result<Vec<Expectation>>;
}

/// A scenario given by a plain function.
pub struct FnScenario {
    pub name: &'static str,
    pub description: &'static str,
    pub tags: &'static [&'static str],
    pub lattices: &'static [&'static str],
    pub body: fn(&RunContext) -> Result<Vec<Expectation>>,
}

impl Scenario for FnScenario {
    fn name(&self) -> &'static str {
        self.name
    }
    fn description(&self) -> &'static str {
        self.description
    }
    fn tags(&self) -> &'static [&'static str] {
        self.tags
    }
    fn lattices(&self) -> &'static [&'static str] {
        self.lattices
    }
    fn run(&self, ctx: &RunContext) -> Result<Vec<Expectation>> {
        (self.body)(ctx)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub tags: Vec<String>,
}

#[derive(Default)]
pub struct ScenarioRegistry {
    entries: BTreeMap<&'static str, Box<dyn Scenario>>,
}

impl ScenarioRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registry holding the bundled catalog.
    pub fn with_defaults() -> Self {
        let mut r = Self::new();
        for s in catalog::bundled() {
            r.register(s).expect("bundled names are unique");
        }
        r
    }

    pub fn register(&mut self, s: Box<dyn Scenario>) -> Result<()> {
        let name = s.name();
        if self.entries.contains_key(name) {
            return Err(Error::InvalidInput(format!("scenario {name} registered twice")));
        }
        self.entries.insert(name, s);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&dyn Scenario> {
        self.entries.get(name).map(|b| b.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }

    /// Catalog sorted by name, optionally restricted to one tag.
    pub fn list(&self, tag: Option<&str>) -> Vec<CatalogEntry> {
        self.entries
            .values()
            .filter(|s| tag.is_none_or(|t| s.tags().contains(&t)))
            .map(|s| CatalogEntry {
                name: s.name().into(),
                description: s.description().into(),
                tags: s.tags().iter().map(|t| t.to_string()).collect(),
            })
            .collect()
    }

    pub fn run(&self, name: &str, ctx: &RunContext) -> Result<Report> {
        let s = self
            .get(name)
            .ok_or_else(|| Error::Unknown(format!("scenario {name}")))?;
        let start = Instant::now();
        let expectations = s.run(ctx)?;
        let mut report = Report::new(s.name(), s.lattices(), ctx.seed, expectations);
        report.elapsed_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_contains_named_scenarios() {
        let r = ScenarioRegistry::with_defaults();
        for n in ["cluster-boundary-2d", "r3-transversality-16cell", "walls-72", "three-loop-table"] {
            assert!(r.get(n).is_some(), "{n}");
        }
        let braiding = r.list(Some("braiding"));
        assert!(!braiding.is_empty());
        assert!(braiding.iter().all(|e| e.tags.iter().any(|t| t == "braiding")));
        assert!(r.list(Some("no-such-tag")).is_empty());
    }

    #[test]
    fn empty_pipeline_passes() {
        let mut r = ScenarioRegistry::new();
        r.register(Box::new(FnScenario {
            name: "empty",
            description: "",
            tags: &[],
            lattices: &[],
            body: |_| Ok(Vec::new()),
        }))
        .unwrap();
        let lat = LatticeRegistry::with_defaults();
        let rep = r.run("empty", &RunContext { lattices: &lat, seed: 0 }).unwrap();
        assert!(rep.passed);
        assert!(r.register(Box::new(FnScenario {
            name: "empty",
            description: "",
            tags: &[],
            lattices: &[],
            body: |_| Ok(Vec::new()),
        }))
        .is_err());
    }
}
