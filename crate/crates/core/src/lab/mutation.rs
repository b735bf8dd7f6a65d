use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{enumerate_semigroups, EnumerateOptions, FiniteSemigroup};
use crate::pentagon::{satisfies_pentagon, ThetaTable};
use crate::search::{enumerate_thetas, SearchError, SearchOptions};

use super::{catalog, Checker, Outcome, PropertyCase};

/// How a case reacted to the corrupted inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Detection {
    /// Some corruption produced a failure with witness.
    Fail,
    /// No failure, but some corruption moved a passing input out of the
    /// case's hypotheses.
    Skip,
    Undetected,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MutationResult {
    pub case_id: &'static str,
    pub detection: Detection,
    /// The first corruption that produced the detection.
    pub example: Option<String>,
}

struct Sample {
    label: String,
    semigroup: FiniteSemigroup,
    solutions: Vec<ThetaTable>,
}

/// Corruptions of `t` that are no longer solutions: one cell changed, one
/// column overwritten in every row, or two values swapped throughout.
fn broken_mutants(s: &FiniteSemigroup, t: &ThetaTable) -> Vec<(String, ThetaTable)> {
    let n = s.order();
    let mut candidates = Vec::new();
    for (x, y) in (0..n).cartesian_product(0..n) {
        for v in (0..n).filter(|&v| v != t.get(x, y)) {
            candidates.push((format!("θ_{x}({y}) := {v}"), t.with_cell(x, y, v)));
        }
    }
    for (y, v) in (0..n).cartesian_product(0..n) {
        let m = ThetaTable::from_fn(n, |a, b| if b == y { v } else { t.get(a, b) });
        candidates.push((format!("θ_*({y}) := {v}"), m));
    }
    for (a, b) in (0..n).tuple_combinations() {
        let swap = |v: usize| if v == a { b } else if v == b { a } else { v };
        candidates.push((format!("values {a} ↔ {b}"), ThetaTable::from_fn(n, |x, y| swap(t.get(x, y)))));
    }
    candidates.retain(|(_, m)| m != t && !satisfies_pentagon(s, m));
    candidates
}

fn first_detection(attempts: impl Iterator<Item = (String, Outcome, bool)>) -> (Detection, Option<String>) {
    let mut skip = None;
    for (label, outcome, baseline_passes) in attempts {
        match outcome {
            Outcome::Fail(w) => return (Detection::Fail, Some(format!("{label}: {w}"))),
            Outcome::Skip(reason) if baseline_passes && skip.is_none() => skip = Some(format!("{label}: {reason}")),
            _ => {}
        }
    }
    match skip {
        Some(example) => (Detection::Skip, Some(example)),
        None => (Detection::Undetected, None),
    }
}

fn sweep_case(case: &PropertyCase, samples: &[Sample]) -> MutationResult {
    let in_scope = samples.iter().filter(|sm| case.scope.admits(&sm.semigroup).is_ok());
    let attempts = in_scope.flat_map(|sm| {
        let s = &sm.semigroup;
        let per: Vec<(String, Outcome, bool)> = match case.checker {
            Checker::Solution(_) => sm
                .solutions
                .iter()
                .enumerate()
                .flat_map(|(i, t)| {
                    let baseline = case.check_solution(s, t) == Outcome::Pass;
                    broken_mutants(s, t).into_iter().map(move |(what, m)| {
                        (format!("{}/θ{}: {what}", sm.label, i + 1), case.check_solution(s, &m), baseline)
                    })
                })
                .collect(),
            Checker::Semigroup(_) => {
                let baseline = case.check_semigroup(s, &sm.solutions) == Outcome::Pass;
                let dropped = (0..sm.solutions.len()).map(|i| {
                    let mut list = sm.solutions.clone();
                    list.remove(i);
                    (format!("{}: drop θ{}", sm.label, i + 1), list)
                });
                let added = sm.solutions.iter().enumerate().flat_map(|(i, t)| {
                    broken_mutants(s, t).into_iter().map(move |(what, m)| {
                        let mut list = sm.solutions.clone();
                        list.push(m);
                        (format!("{}: add θ{} with {what}", sm.label, i + 1), list)
                    })
                });
                dropped
                    .chain(added)
                    .map(|(label, list)| (label, case.check_semigroup(s, &list), baseline))
                    .collect()
            }
        };
        per
    });
    // Out-of-scope semigroups are counter-instances of the hypothesis.
    let rejected = samples.iter().filter_map(|sm| match case.scope.admits(&sm.semigroup) {
        Err(reason) => Some((sm.label.clone(), Outcome::Skip(reason), true)),
        Ok(()) => None,
    });
    let (detection, example) = first_detection(attempts.chain(rejected));
    MutationResult { case_id: case.id, detection, example }
}

/// Corrupts the solutions of every semigroup of order `1..=max_order` (up to
/// isomorphism) and records, per catalog case, whether the corruption is
/// caught.
pub fn mutation_sweep(max_order: usize) -> Result<Vec<MutationResult>, SearchError> {
    let mut samples = Vec::new();
    for n in 1..=max_order {
        for (i, s) in enumerate_semigroups(n, EnumerateOptions::default())?.into_iter().enumerate() {
            let solutions = enumerate_thetas(&s, &SearchOptions { max_order, ..Default::default() })?;
            samples.push(Sample { label: format!("S{n}.{}", i + 1), semigroup: s, solutions });
        }
    }
    Ok(catalog().par_iter().map(|case| sweep_case(case, &samples)).collect())
}
