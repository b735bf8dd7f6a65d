//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pentagon::algebra::{enumerate_semigroups, named, EnumerateOptions, FiniteSemigroup, MAX_ORDER};
use pentagon::construct::{enumerate_group_solutions, enumerate_monoid_constructions};
use pentagon::lab::{mutation_sweep, run_catalog, standard_instances, Detection};
use pentagon::pentagon::{
    classify_table, solutions_isomorphic, verify_pentagon_direct, verify_solution, PentagonSolution, Property, ThetaTable,
};
use pentagon::search::{canonical_forms, census, enumerate_thetas, CensusOptions, SearchOptions};

const CENSUS_EXPECTED_ISO: usize = 202;
const CENSUS_EXPECTED_CLASSES: usize = 24;
const CENSUS_TIME_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_TRIALS: usize = 20_000;
const ORACLE_SEED: u64 = 0x5eed_0004;
const GROUP_UNIQUENESS_MAX_ORDER: usize = 8;
const CANCELLATIVE_MAX_ORDER: usize = 4;
const GROUP_THEOREM_MAX_ORDER: usize = 6;
const MONOID_THEOREM_MAX_ORDER: usize = 4;
const LAB_MAX_ORDER: usize = 3;

type Verdict = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Verdict);

fn semigroups(n: usize, monoid_only: bool) -> Vec<FiniteSemigroup> {
    enumerate_semigroups(n, EnumerateOptions { monoid_only, ..Default::default() }).unwrap()
}

fn table(rows: [[usize; 3]; 3]) -> ThetaTable {
    ThetaTable::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn uncapped() -> SearchOptions {
    SearchOptions { max_order: MAX_ORDER, ..Default::default() }
}

fn idempotent_solutions(s: &FiniteSemigroup) -> Vec<ThetaTable> {
    enumerate_thetas(s, &uncapped().require(Property::Idempotent)).unwrap()
}

fn census_reproduction() -> Verdict {
    let start = Instant::now();
    let r = census(CensusOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let detail = format!(
        "{} iso classes ({} raw) over {} semigroup classes in {:.2?}",
        r.total_iso,
        r.total_raw,
        r.semigroup_classes(),
        elapsed
    );
    if r.total_iso == CENSUS_EXPECTED_ISO && r.semigroup_classes() == CENSUS_EXPECTED_CLASSES && elapsed < CENSUS_TIME_LIMIT {
        Ok(detail)
    } else {
        Err(format!("expected {CENSUS_EXPECTED_ISO} over {CENSUS_EXPECTED_CLASSES}; got {detail}"))
    }
}

fn worked_example() -> Verdict {
    let m = named::monoid_with_unit_b();
    let printed = [
        table([[0, 0, 0], [0, 0, 0], [0, 0, 0]]),
        table([[0, 1, 0], [0, 1, 0], [0, 1, 0]]),
        table([[0, 1, 0], [0, 1, 2], [0, 1, 0]]),
    ];
    let found = enumerate_thetas(&m, &SearchOptions::default().require(Property::Idempotent).iso_classes()).unwrap();
    if found != printed {
        return Err(format!("got {:?}", found.iter().map(ThetaTable::rows).collect::<Vec<_>>()));
    }
    let sols: Vec<_> = found.into_iter().map(|t| PentagonSolution::new(m.clone(), t).unwrap()).collect();
    for (i, a) in sols.iter().enumerate() {
        for b in &sols[i + 1..] {
            if solutions_isomorphic(a, b).is_some() {
                return Err("two listed solutions are isomorphic".into());
            }
        }
    }
    Ok("3 solutions, cell-for-cell, pairwise non-isomorphic".into())
}

fn uniqueness() -> Verdict {
    let mut groups = 0;
    for (name, g) in named::small_groups().into_iter().filter(|(_, g)| g.order() <= GROUP_UNIQUENESS_MAX_ORDER) {
        let one = g.identity().unwrap();
        let sols = idempotent_solutions(&g);
        if sols != [ThetaTable::constant(g.order(), one)] {
            return Err(format!("{name}: {} idempotent solutions", sols.len()));
        }
        groups += 1;
    }
    let mut monoids = 0;
    for n in 1..=CANCELLATIVE_MAX_ORDER {
        for m in semigroups(n, true).into_iter().filter(FiniteSemigroup::is_cancellative) {
            let sols = idempotent_solutions(&m);
            if sols != [ThetaTable::constant(n, m.identity().unwrap())] {
                return Err(format!("cancellative monoid {:?}: {} idempotent solutions", m.rows(), sols.len()));
            }
            monoids += 1;
        }
    }
    Ok(format!("{groups} groups of order <= {GROUP_UNIQUENESS_MAX_ORDER}, {monoids} cancellative monoids of order <= {CANCELLATIVE_MAX_ORDER}"))
}

fn oracle_equivalence() -> Verdict {
    let mut pool = Vec::new();
    for n in 1..=3 {
        for s in semigroups(n, false) {
            let sols = enumerate_thetas(&s, &SearchOptions::default()).unwrap();
            pool.push((s, sols));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ORACLE_SEED);
    let (mut solutions, mut others) = (0, 0);
    for trial in 0..ORACLE_TRIALS {
        let (base, sols) = &pool[rng.gen_range(0..pool.len())];
        let n = base.order();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let s = base.relabel(&perm);
        // half near-solutions (a relabelled solution with one cell redrawn), half uniform
        let theta = if rng.gen_bool(0.5) {
            let t = &sols[rng.gen_range(0..sols.len())];
            let moved = ThetaTable::from_fn(n, |x, y| {
                let inv = |v: usize| perm.iter().position(|&p| p == v).unwrap();
                perm[t.get(inv(x), inv(y))]
            });
            moved.with_cell(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))
        } else {
            let cells: Vec<usize> = (0..n * n).map(|_| rng.gen_range(0..n)).collect();
            ThetaTable::from_fn(n, |x, y| cells[x * n + y])
        };
        let fast = verify_solution(&s, &theta).unwrap().holds();
        let direct = verify_pentagon_direct(&s, &theta).unwrap();
        if fast != direct {
            return Err(format!("trial {trial}: {:?} / {:?} disagree", s.rows(), theta.rows()));
        }
        if fast {
            solutions += 1;
        } else {
            others += 1;
        }
    }
    Ok(format!("{ORACLE_TRIALS} tables agree ({solutions} solutions, {others} non-solutions), seed {ORACLE_SEED:#x}"))
}

fn group_theorem() -> Verdict {
    let mut checked = 0;
    for (name, g) in named::small_groups().into_iter().filter(|(_, g)| g.order() <= GROUP_THEOREM_MAX_ORDER) {
        let built: Vec<ThetaTable> = enumerate_group_solutions(&g).unwrap().into_iter().map(PentagonSolution::into_theta).collect();
        let searched = enumerate_thetas(&g, &uncapped()).unwrap();
        let raw_equal = built.iter().collect::<BTreeSet<_>>() == searched.iter().collect::<BTreeSet<_>>();
        if !raw_equal || canonical_forms(&g, &built) != canonical_forms(&g, &searched) {
            return Err(format!("{name}: constructed {} vs searched {}", built.len(), searched.len()));
        }
        checked += 1;
    }
    Ok(format!("{checked} groups of order <= {GROUP_THEOREM_MAX_ORDER}, construction = search"))
}

fn monoid_theorem() -> Verdict {
    let mut checked = 0;
    for n in 1..=MONOID_THEOREM_MAX_ORDER {
        for m in semigroups(n, true).into_iter().filter(FiniteSemigroup::has_central_idempotents) {
            let built: BTreeSet<ThetaTable> =
                enumerate_monoid_constructions(&m).unwrap().into_iter().map(PentagonSolution::into_theta).collect();
            let searched: BTreeSet<ThetaTable> = idempotent_solutions(&m).into_iter().collect();
            if built != searched {
                return Err(format!("{:?}: constructed {} vs searched {}", m.rows(), built.len(), searched.len()));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} monoids with central idempotents of order <= {MONOID_THEOREM_MAX_ORDER}"))
}

fn theorem_lab() -> Verdict {
    let report = run_catalog(&standard_instances(LAB_MAX_ORDER).unwrap());
    if !report.is_clean() || !report.rejected.is_empty() {
        return Err(format!("{} failures, {} rejected instances", report.total_fails(), report.rejected.len()));
    }
    let sweep = mutation_sweep(LAB_MAX_ORDER).unwrap();
    if let Some(r) = sweep.iter().find(|r| r.detection == Detection::Undetected) {
        return Err(format!("corruption never noticed by {}", r.case_id));
    }
    let by_skip = sweep.iter().filter(|r| r.detection == Detection::Skip).count();
    Ok(format!(
        "{} cases on {} instances, 0 failures; mutation caught by all ({} via scope guard)",
        report.cases.len(),
        report.instances,
        by_skip
    ))
}

fn micro_examples() -> Verdict {
    // {1, a, b} idempotent commutative with ab = b; θ_1 = θ_a, θ_b = (a, a, b)
    let chain = named::chain_monoid();
    let stated = |t: &ThetaTable| {
        t.row(0) == t.row(1)
            && t.get(0, 0) == 0
            && t.get(1, 0) == 0
            && t.get(0, 2) == 2
            && (t.get(2, 0), t.get(2, 1), t.get(2, 2)) == (1, 1, 2)
    };
    let matching: Vec<ThetaTable> = idempotent_solutions(&chain).into_iter().filter(stated).collect();
    let expected = table([[0, 0, 2], [0, 0, 2], [1, 1, 2]]);
    if matching != [expected.clone()] {
        return Err(format!("{} idempotent solutions fit the stated cells", matching.len()));
    }
    let flags = classify_table(&chain, &expected).map_err(|e| e.to_string())?;
    if !flags.idempotent || expected.get(2, 0) != 1 {
        return Err("units example is not idempotent with θ_b(1) = a".into());
    }

    let null = named::null_semigroup(3);
    let swap = table([[0, 1, 2], [0, 2, 1], [0, 2, 1]]);
    let flags = classify_table(&null, &swap).map_err(|e| e.to_string())?;
    if !(flags.idempotent && flags.nondegenerate) {
        return Err(format!("null-semigroup swap: {flags}"));
    }

    let remark = named::monoid_b_squared_a();
    let sols = idempotent_solutions(&remark);
    if sols != [ThetaTable::constant(3, remark.identity().unwrap())] {
        return Err(format!("b² = a monoid has {} idempotent solutions", sols.len()));
    }
    Ok("θ_b(1) = a example idempotent and unique for its stated cells; swap idempotent + non-degenerate; b² = a gives only (xy, 1)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("AC1", "census-order-3", census_reproduction),
        ("AC2", "worked-example", worked_example),
        ("AC3", "group-and-cancellative-uniqueness", uniqueness),
        ("AC4", "oracle-equivalence", oracle_equivalence),
        ("AC5", "group-theorem-equivalence", group_theorem),
        ("AC6", "monoid-theorem-equivalence", monoid_theorem),
        ("AC7", "theorem-lab-clean-run", theorem_lab),
        ("AC8", "micro-examples", micro_examples),
    ];
    let mut failed = 0;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let verdict = check();
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("{id} {name} PASS ({secs:.2}s): {detail}"),
            Err(detail) => {
                failed += 1;
                println!("{id} {name} FAIL ({secs:.2}s): {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
