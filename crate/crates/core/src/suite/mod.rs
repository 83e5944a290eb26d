//! The acceptance checks, shared by the `check` command and the test suite.
//!
//! Each criterion runs against a [`Workbench`] that caches analyses by
//! label, and reports through a [`Recorder`]. Output contains no timings
//! so that repeated runs are byte-identical.

mod criteria;
pub mod dynkin;
pub mod iso;
pub mod numeric;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

pub use criteria::{criteria, preset_instances, run_all, run_criterion};

use crate::error::Result;
use crate::matgroup::FiniteMatrixGroup;
use crate::pipeline::Analysis;
use crate::presets::resolve;

/// A file written by `check`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Artifact {
    pub name: String,
    pub contents: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub id: u32,
    pub title: &'static str,
    pub passed: bool,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
    pub artifacts: Vec<Artifact>,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "criterion {:>2} [{verdict}] {}", self.id, self.title)?;
        for n in &self.notes {
            write!(f, "\n    {n}")?;
        }
        for n in &self.failures {
            write!(f, "\n    FAILED: {n}")?;
        }
        Ok(())
    }
}

/// Collects check results and artifacts for one criterion.
#[derive(Debug, Default)]
pub struct Recorder {
    notes: Vec<String>,
    failures: Vec<String>,
    artifacts: Vec<Artifact>,
}

impl Recorder {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        if !ok {
            self.failures.push(what());
        }
        ok
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn artifact(&mut self, name: impl Into<String>, contents: impl Into<String>) {
        self.artifacts.push(Artifact {
            name: name.into(),
            contents: contents.into(),
        });
    }

    fn finish(mut self, id: u32, title: &'static str, result: Result<()>) -> Outcome {
        if let Err(e) = result {
            self.failures.push(format!("{}: {e}", e.name()));
        }
        Outcome {
            id,
            title,
            passed: self.failures.is_empty(),
            notes: self.notes,
            failures: self.failures,
            artifacts: self.artifacts,
        }
    }
}

/// Analysis cache keyed by a label such as `cyclic_sl2(5)`.
#[derive(Debug)]
pub struct Workbench {
    pub max_order: usize,
    cache: BTreeMap<String, Analysis>,
}

impl Workbench {
    pub fn new(max_order: usize) -> Workbench {
        Workbench {
            max_order,
            cache: BTreeMap::new(),
        }
    }

    /// Analysis of a preset given as `name` or `name:n`.
    pub fn preset(&mut self, spec: &str) -> Result<Analysis> {
        let (preset, param) = resolve(spec)?;
        let label = preset.label(param);
        let max_order = self.max_order;
        self.analyse(&label, || preset.group(param, max_order))
    }

    pub fn analyse(
        &mut self,
        label: &str,
        build: impl FnOnce() -> Result<FiniteMatrixGroup>,
    ) -> Result<Analysis> {
        if let Some(a) = self.cache.get(label) {
            return Ok(a.clone());
        }
        let a = Analysis::new(Arc::new(build()?), label)?;
        self.cache.insert(label.to_string(), a.clone());
        Ok(a)
    }
}
