//! Exhaustive search for all solutions on a fixed semigroup, plus censuses over
//! every semigroup of a given order.
//!
//! Output order is deterministic: raw results are sorted by flattened θ-table,
//! and up-to-isomorphism results are the sorted canonical forms. Runs with
//! several workers split the tree by the first θ-row and concatenate the
//! subtrees in search order, which gives the same list as a single worker.

mod census;
mod engine;

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{automorphisms, AlgebraError, FiniteSemigroup};
use crate::pentagon::{canonical_theta, classify, ClassificationFlags, PentagonSolution, Property, ThetaTable};

use engine::{Engine, Filters};

pub use census::{census, census_order3, CensusOptions, CensusReport, FlagCount, SemigroupCensus, CENSUS_DEFAULT_CAP};

/// Largest order searched unless the caller raises `max_order`.
pub const DEFAULT_SEARCH_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {order} exceeds the search cap {cap}; raise it explicitly to proceed")]
    OverCap { order: usize, cap: usize },
    #[error("worker count must be at least 1")]
    NoWorkers,
    #[error("could not start the worker pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Properties every emitted solution must have. Enforced inside the search.
    pub filter: Vec<Property>,
    pub up_to_iso: bool,
    pub worker_count: usize,
    pub max_order: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { filter: Vec::new(), up_to_iso: false, worker_count: 1, max_order: DEFAULT_SEARCH_CAP }
    }
}

impl SearchOptions {
    pub fn require(mut self, p: Property) -> Self {
        if !self.filter.contains(&p) {
            self.filter.push(p);
        }
        self
    }

    pub fn iso_classes(mut self) -> Self {
        self.up_to_iso = true;
        self
    }

    pub fn workers(mut self, k: usize) -> Self {
        self.worker_count = k;
        self
    }
}

/// All θ-tables solving the pentagon equation on `s` under `opts`.
pub fn enumerate_thetas(s: &FiniteSemigroup, opts: &SearchOptions) -> Result<Vec<ThetaTable>, SearchError> {
    if s.order() > opts.max_order {
        return Err(SearchError::OverCap { order: s.order(), cap: opts.max_order });
    }
    let parallel = opts.worker_count > 1;
    with_pool(opts.worker_count, || search(s, &opts.filter, opts.up_to_iso, parallel))
}

pub fn enumerate_solutions(s: &FiniteSemigroup, opts: &SearchOptions) -> Result<Vec<PentagonSolution>, SearchError> {
    Ok(enumerate_thetas(s, opts)?.into_iter().map(|t| PentagonSolution::new_unchecked(s.clone(), t)).collect())
}

/// Number of solutions per flag combination. The counts sum to the number of
/// solutions `enumerate_solutions` returns for the same options.
pub fn count_by_flags(
    s: &FiniteSemigroup,
    opts: &SearchOptions,
) -> Result<BTreeMap<ClassificationFlags, usize>, SearchError> {
    let mut counts = BTreeMap::new();
    for sol in enumerate_solutions(s, opts)? {
        *counts.entry(classify(&sol)).or_insert(0) += 1;
    }
    Ok(counts)
}

pub(crate) fn search(s: &FiniteSemigroup, filter: &[Property], up_to_iso: bool, parallel: bool) -> Vec<ThetaTable> {
    let engine = Engine::new(s, Filters::from_properties(filter));
    let Some(mut root) = engine.initial() else {
        return Vec::new();
    };
    let found = if parallel {
        let mut frontier = Vec::new();
        engine.first_row_frontier(&mut root, &mut frontier);
        frontier
            .into_par_iter()
            .map(|mut d| {
                let mut out = Vec::new();
                engine.solve(&mut d, &mut out);
                out
            })
            .collect::<Vec<_>>()
            .concat()
    } else {
        let mut out = Vec::new();
        engine.solve(&mut root, &mut out);
        out
    };
    if up_to_iso {
        canonical_forms(s, &found)
    } else {
        found
    }
}

/// Sorted, deduplicated canonical forms under `Aut(s)`.
pub fn canonical_forms(s: &FiniteSemigroup, thetas: &[ThetaTable]) -> Vec<ThetaTable> {
    let auts = automorphisms(s);
    thetas.iter().map(|t| canonical_theta(t, &auts)).collect::<BTreeSet<_>>().into_iter().collect()
}

/// Runs `f` on a pool of `workers` threads; one worker runs it inline.
pub fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T, SearchError> {
    match workers {
        0 => Err(SearchError::NoWorkers),
        1 => Ok(f()),
        k => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(k)
                .build()
                .map_err(|e| SearchError::Pool(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}
