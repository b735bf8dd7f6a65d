use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{enumerate_semigroups, EnumerateOptions, FiniteSemigroup};
use crate::pentagon::{classify, ClassificationFlags, PentagonSolution, ThetaTable};

use super::{canonical_forms, search, with_pool, SearchError, DEFAULT_SEARCH_CAP};

/// Orders above this need `allow_large`.
pub const CENSUS_DEFAULT_CAP: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CensusOptions {
    pub order: usize,
    pub worker_count: usize,
    pub allow_large: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions { order: 3, worker_count: 1, allow_large: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlagCount {
    pub flags: ClassificationFlags,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupCensus {
    pub semigroup: FiniteSemigroup,
    /// Distinct θ-tables on this Cayley table.
    pub raw_count: usize,
    /// Orbits of those tables under `Aut(S)`.
    pub iso_count: usize,
    /// Flags of the orbit representatives.
    pub flag_histogram: Vec<FlagCount>,
    pub representatives: Vec<ThetaTable>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CensusReport {
    pub order: usize,
    pub entries: Vec<SemigroupCensus>,
    pub total_raw: usize,
    pub total_iso: usize,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl PartialEq for CensusReport {
    /// Timing is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
            && self.entries == other.entries
            && self.total_raw == other.total_raw
            && self.total_iso == other.total_iso
    }
}

/// Solutions on every semigroup of the given order, one semigroup per
/// isomorphism class. Semigroup classes are pairwise non-isomorphic, so solution
/// classes across the census are the per-semigroup orbits added up.
pub fn census(opts: CensusOptions) -> Result<CensusReport, SearchError> {
    let cap = if opts.allow_large { DEFAULT_SEARCH_CAP } else { CENSUS_DEFAULT_CAP };
    if opts.order > cap {
        return Err(SearchError::OverCap { order: opts.order, cap });
    }
    let start = Instant::now();
    let semigroups = enumerate_semigroups(
        opts.order,
        EnumerateOptions { monoid_only: false, up_to_iso: true, max_order: DEFAULT_SEARCH_CAP },
    )?;
    let parallel = opts.worker_count > 1;
    let entries: Vec<SemigroupCensus> =
        with_pool(opts.worker_count, || semigroups.into_par_iter().map(|s| census_one(s, parallel)).collect())?;
    Ok(CensusReport {
        order: opts.order,
        total_raw: entries.iter().map(|e| e.raw_count).sum(),
        total_iso: entries.iter().map(|e| e.iso_count).sum(),
        entries,
        elapsed: start.elapsed(),
    })
}

pub fn census_order3() -> CensusReport {
    census(CensusOptions::default()).expect("order 3 is within the default cap")
}

fn census_one(s: FiniteSemigroup, parallel: bool) -> SemigroupCensus {
    let raw = search(&s, &[], false, parallel);
    let representatives = canonical_forms(&s, &raw);
    let mut histogram = BTreeMap::new();
    for t in &representatives {
        let sol = PentagonSolution::new_unchecked(s.clone(), t.clone());
        *histogram.entry(classify(&sol)).or_insert(0usize) += 1;
    }
    SemigroupCensus {
        raw_count: raw.len(),
        iso_count: representatives.len(),
        flag_histogram: histogram.into_iter().map(|(flags, count)| FlagCount { flags, count }).collect(),
        representatives,
        semigroup: s,
    }
}

fn digits(cells: &[u8]) -> String {
    cells.iter().map(|c| char::from_digit(u32::from(*c), 36).expect("order below 36")).collect()
}

impl CensusReport {
    pub fn semigroup_classes(&self) -> usize {
        self.entries.len()
    }

    /// Stable text rendering; timing is left out so runs can be diffed.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "census order={}", self.order);
        let _ = writeln!(out, "semigroup classes={}", self.entries.len());
        for (i, e) in self.entries.iter().enumerate() {
            let s = &e.semigroup;
            let _ = writeln!(out);
            let _ = writeln!(out, "[semigroup {}]", i + 1);
            let _ = writeln!(out, "table {}", digits(s.flat_table()));
            match s.identity() {
                Some(id) => {
                    let _ = writeln!(out, "identity {id}");
                }
                None => {
                    let _ = writeln!(out, "identity none");
                }
            }
            for row in s.rows() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "  {}", cells.join(" "));
            }
            let _ = writeln!(out, "solutions raw={} iso={}", e.raw_count, e.iso_count);
            for fc in &e.flag_histogram {
                let _ = writeln!(out, "flags {} count={}", fc.flags, fc.count);
            }
            for t in &e.representatives {
                let _ = writeln!(out, "theta {}", digits(t.flat()));
            }
        }
        let _ = writeln!(out);
        let _ = writeln!(out, "RAW_SOLUTIONS={}", self.total_raw);
        let _ = writeln!(out, "TOTAL_ISO_CLASSES={}", self.total_iso);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_two_census() {
        let r = census(CensusOptions { order: 2, ..Default::default() }).unwrap();
        assert_eq!(r.semigroup_classes(), 5);
        assert_eq!(r.total_iso, r.entries.iter().map(|e| e.representatives.len()).sum::<usize>());
        assert!(r.render_text().ends_with(&format!("TOTAL_ISO_CLASSES={}\n", r.total_iso)));
    }

    #[test]
    fn large_orders_need_opt_in() {
        let err = census(CensusOptions { order: 4, ..Default::default() }).unwrap_err();
        assert_eq!(err, SearchError::OverCap { order: 4, cap: CENSUS_DEFAULT_CAP });
    }
}
