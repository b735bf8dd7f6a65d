//! Executable versions of the structural statements about solutions, checked
//! exhaustively on concrete semigroups.
//!
//! Each [`PropertyCase`] has a stable id, a scope predicate on the semigroup and
//! a checker. Per-solution checkers read a raw θ-table and never assume it is a
//! solution; [`run_catalog`] only hands them verified solutions, while the
//! mutation harness feeds them corrupted tables on purpose. Semigroup-level
//! checkers receive the full solution list explicitly for the same reason.

mod cases;
mod mutation;
mod scope;

use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{enumerate_semigroups, EnumerateOptions, FiniteSemigroup};
use crate::pentagon::{is_cocommutative, is_commutative, is_involutive, satisfies_pentagon, Property, ThetaTable};
use crate::search::{enumerate_thetas, SearchError, SearchOptions};

pub use cases::{catalog, observations};
pub use mutation::{mutation_sweep, Detection, MutationResult};
pub use scope::Scope;

/// Largest semigroup whose full solution list is searched for semigroup-level cases.
pub const LAB_SEARCH_CAP: usize = 4;

/// Failures kept per case in a report.
pub const WITNESS_CAP: usize = 5;

/// A failed instance of a statement: the bound variables and what went wrong.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub bindings: Vec<(String, usize)>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, v) in &self.bindings {
            write!(f, "{name}={v} ")?;
        }
        f.write_str(&self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Pass,
    Fail(Witness),
    Skip(String),
}

pub type SolutionCheck = fn(&FiniteSemigroup, &ThetaTable) -> Outcome;
pub type SetCheck = fn(&FiniteSemigroup, &[ThetaTable]) -> Outcome;

#[derive(Clone, Copy)]
pub enum Checker {
    /// Evaluated once per solution.
    Solution(SolutionCheck),
    /// Evaluated once per semigroup, given all of its solutions.
    Semigroup(SetCheck),
}

#[derive(Clone)]
pub struct PropertyCase {
    pub id: &'static str,
    pub scope: Scope,
    /// Verbatim phrase locating the statement in the source text.
    pub quote: &'static str,
    pub statement: &'static str,
    /// Set when the instance encodes a reading of an ambiguous statement.
    pub interpretation: Option<&'static str>,
    pub checker: Checker,
}

impl PropertyCase {
    /// Scope first, then the checker. Out-of-scope input is a skip.
    pub fn check_solution(&self, s: &FiniteSemigroup, theta: &ThetaTable) -> Outcome {
        match (self.scope.admits(s), self.checker) {
            (Err(reason), _) => Outcome::Skip(reason),
            (Ok(()), Checker::Solution(f)) => f(s, theta),
            (Ok(()), Checker::Semigroup(_)) => Outcome::Skip("semigroup-level case".into()),
        }
    }

    pub fn check_semigroup(&self, s: &FiniteSemigroup, solutions: &[ThetaTable]) -> Outcome {
        match (self.scope.admits(s), self.checker) {
            (Err(reason), _) => Outcome::Skip(reason),
            (Ok(()), Checker::Semigroup(f)) => f(s, solutions),
            (Ok(()), Checker::Solution(_)) => Outcome::Skip("per-solution case".into()),
        }
    }

    pub fn is_per_solution(&self) -> bool {
        matches!(self.checker, Checker::Solution(_))
    }
}

/// A semigroup, optionally with one θ-table to check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub label: String,
    pub semigroup: FiniteSemigroup,
    pub solution: Option<ThetaTable>,
}

/// One instance per semigroup of order `1..=max_order` up to isomorphism, plus
/// one per solution on it.
pub fn standard_instances(max_order: usize) -> Result<Vec<Instance>, SearchError> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        let semigroups = enumerate_semigroups(n, EnumerateOptions::default())?;
        for (i, s) in semigroups.into_iter().enumerate() {
            let label = format!("S{n}.{}", i + 1);
            let thetas = enumerate_thetas(&s, &SearchOptions { max_order, ..Default::default() })?;
            out.push(Instance { label: label.clone(), semigroup: s.clone(), solution: None });
            for (j, t) in thetas.into_iter().enumerate() {
                out.push(Instance { label: format!("{label}/θ{}", j + 1), semigroup: s.clone(), solution: Some(t) });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseSummary {
    pub id: &'static str,
    pub scope: String,
    pub quote: &'static str,
    pub statement: &'static str,
    pub interpretation: Option<&'static str>,
    pub instances: usize,
    pub passes: usize,
    pub fails: usize,
    pub skips: usize,
    pub failures: Vec<(String, Witness)>,
}

/// Per-instance outcomes of statements that are recorded, not asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ObservationSummary {
    pub id: &'static str,
    pub quote: &'static str,
    pub statement: &'static str,
    pub holds: usize,
    pub fails: usize,
    pub examples: Vec<(String, Witness)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabReport {
    pub instances: usize,
    pub cases: Vec<CaseSummary>,
    pub observations: Vec<ObservationSummary>,
    /// Instances that were not checked, with the reason.
    pub rejected: Vec<(String, String)>,
}

fn tally(
    instances: &[Instance],
    eval: impl Fn(usize, &Instance) -> Option<Outcome>,
) -> (usize, usize, usize, Vec<(String, Witness)>) {
    let (mut passes, mut fails, mut skips, mut failures) = (0, 0, 0, Vec::new());
    for (i, inst) in instances.iter().enumerate() {
        match eval(i, inst) {
            None => {}
            Some(Outcome::Pass) => passes += 1,
            Some(Outcome::Skip(_)) => skips += 1,
            Some(Outcome::Fail(w)) => {
                fails += 1;
                if failures.len() < WITNESS_CAP {
                    failures.push((inst.label.clone(), w));
                }
            }
        }
    }
    (passes, fails, skips, failures)
}

/// Evaluates every case on every instance. Instances carrying a θ-table that is
/// not a solution are rejected with a reason and take no further part.
pub fn run_catalog(instances: &[Instance]) -> LabReport {
    let mut rejected = Vec::new();
    let mut good = Vec::new();
    for inst in instances {
        match &inst.solution {
            Some(t) if t.order() != inst.semigroup.order() => {
                rejected.push((inst.label.clone(), "θ-table order differs from the semigroup".into()))
            }
            Some(t) if !satisfies_pentagon(&inst.semigroup, t) => {
                rejected.push((inst.label.clone(), "not a solution".into()))
            }
            _ => good.push(inst.clone()),
        }
    }
    // Semigroup-level cases need every solution on the semigroup.
    let searched: Vec<Result<Vec<ThetaTable>, SearchError>> = good
        .par_iter()
        .map(|inst| match inst.solution {
            Some(_) => Ok(Vec::new()),
            None => enumerate_thetas(&inst.semigroup, &SearchOptions { max_order: LAB_SEARCH_CAP, ..Default::default() }),
        })
        .collect();
    let mut solution_lists = Vec::new();
    let mut kept = Vec::new();
    for (inst, found) in good.into_iter().zip(searched) {
        match found {
            Ok(list) => {
                kept.push(inst);
                solution_lists.push(list);
            }
            Err(err) => rejected.push((inst.label.clone(), err.to_string())),
        }
    }
    let good = kept;

    let cases: Vec<CaseSummary> = catalog()
        .into_par_iter()
        .map(|case| {
            let (passes, fails, skips, failures) = tally(&good, |i, inst| {
                match (&inst.solution, case.checker) {
                    (Some(t), Checker::Solution(_)) => Some(case.check_solution(&inst.semigroup, t)),
                    (None, Checker::Semigroup(_)) => Some(case.check_semigroup(&inst.semigroup, &solution_lists[i])),
                    _ => None,
                }
            });
            CaseSummary {
                id: case.id,
                scope: case.scope.to_string(),
                quote: case.quote,
                statement: case.statement,
                interpretation: case.interpretation,
                instances: passes + fails + skips,
                passes,
                fails,
                skips,
                failures,
            }
        })
        .collect();

    let observations = observations()
        .into_iter()
        .map(|obs| {
            let (mut holds, mut fails, mut examples) = (0, 0, Vec::new());
            for inst in &good {
                let Some(t) = &inst.solution else { continue };
                match obs.check_solution(&inst.semigroup, t) {
                    Outcome::Pass => holds += 1,
                    Outcome::Fail(w) => {
                        fails += 1;
                        if examples.len() < WITNESS_CAP {
                            examples.push((inst.label.clone(), w));
                        }
                    }
                    Outcome::Skip(_) => {}
                }
            }
            ObservationSummary { id: obs.id, quote: obs.quote, statement: obs.statement, holds, fails, examples }
        })
        .collect();

    LabReport { instances: instances.len(), cases, observations, rejected }
}

impl LabReport {
    pub fn total_fails(&self) -> usize {
        self.cases.iter().map(|c| c.fails).sum()
    }

    pub fn is_clean(&self) -> bool {
        self.total_fails() == 0
    }

    /// One line per case: id, scope, instances, passes, fails, skips.
    pub fn machine_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let _ = writeln!(
                out,
                "case={} scope={} instances={} pass={} fail={} skip={}",
                c.id, c.scope, c.instances, c.passes, c.fails, c.skips
            );
        }
        out
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "theorem lab: {} instances, {} cases", self.instances, self.cases.len());
        for c in &self.cases {
            let status = if c.fails > 0 { "FAIL" } else if c.passes > 0 { "pass" } else { "skip" };
            let _ = writeln!(out);
            let _ = writeln!(out, "[{status}] {}  ({})", c.id, c.scope);
            let _ = writeln!(out, "  anchor: \"{}\"", c.quote);
            let _ = writeln!(out, "  claim: {}", c.statement);
            if let Some(note) = c.interpretation {
                let _ = writeln!(out, "  interpretation: {note}");
            }
            let _ = writeln!(out, "  pass={} fail={} skip={}", c.passes, c.fails, c.skips);
            for (label, w) in &c.failures {
                let _ = writeln!(out, "  witness {label}: {w}");
            }
        }
        for o in &self.observations {
            let _ = writeln!(out);
            let _ = writeln!(out, "[observation] {}", o.id);
            let _ = writeln!(out, "  anchor: \"{}\"", o.quote);
            let _ = writeln!(out, "  recorded: {}", o.statement);
            let _ = writeln!(out, "  holds={} fails={}", o.holds, o.fails);
            for (label, w) in &o.examples {
                let _ = writeln!(out, "  example {label}: {w}");
            }
        }
        if !self.rejected.is_empty() {
            let _ = writeln!(out);
            for (label, reason) in &self.rejected {
                let _ = writeln!(out, "rejected {label}: {reason}");
            }
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "TOTAL_FAILS={}", self.total_fails());
        out
    }
}

/// The non-degenerate solutions on a monoid: expects exactly one, with every
/// `θ_x` the identity map.
pub fn check_nondegenerate_monoid(m: &FiniteSemigroup) -> Outcome {
    if m.identity().is_none() {
        return Outcome::Skip("not a monoid".into());
    }
    let opts = SearchOptions::default().require(Property::Nondegenerate);
    let found = match enumerate_thetas(m, &opts) {
        Ok(found) => found,
        Err(e) => return Outcome::Skip(e.to_string()),
    };
    let identity_theta = ThetaTable::from_fn(m.order(), |_, y| y);
    if found == [identity_theta] {
        Outcome::Pass
    } else {
        Outcome::Fail(Witness {
            bindings: vec![("count".into(), found.len())],
            detail: "expected only θ_x = id".into(),
        })
    }
}

/// Runs every per-solution case on `theta` without checking that it is a
/// solution first. Used to probe corrupted tables.
pub fn evaluate_unverified(s: &FiniteSemigroup, theta: &ThetaTable) -> Vec<(&'static str, Outcome)> {
    catalog().into_iter().filter(PropertyCase::is_per_solution).map(|c| (c.id, c.check_solution(s, theta))).collect()
}

/// Every involutive solution among `instances` is commutative and cocommutative.
pub fn check_involutive_implies_cc(instances: &[(FiniteSemigroup, ThetaTable)]) -> Outcome {
    for (i, (s, t)) in instances.iter().enumerate() {
        if is_involutive(s, t) && !(is_commutative(s, t) && is_cocommutative(s, t)) {
            return Outcome::Fail(Witness {
                bindings: vec![("instance".into(), i)],
                detail: "involutive but not both commutative and cocommutative".into(),
            });
        }
    }
    Outcome::Pass
}
