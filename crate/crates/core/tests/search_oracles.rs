//! The pruned search against plain brute force over every θ-table (n ≤ 3),
//! with orbits counted by an independent permutation scan.

use std::collections::BTreeSet;

use itertools::Itertools;
use pentagon::algebra::{enumerate_semigroups, named, EnumerateOptions, FiniteSemigroup};
use pentagon::pentagon::{
    classify_by_composition, solutions_isomorphic, verify_pentagon_direct, ClassificationFlags, PentagonSolution,
    Property, ThetaTable,
};
use pentagon::search::{
    census, count_by_flags, enumerate_solutions, enumerate_thetas, CensusOptions, SearchOptions,
};

fn all_semigroups_up_to(n: usize) -> Vec<FiniteSemigroup> {
    (1..=n)
        .flat_map(|k| enumerate_semigroups(k, EnumerateOptions { up_to_iso: true, ..Default::default() }).unwrap())
        .collect()
}

/// Every θ-table on `s` checked by composing the legs of `s` on `X³`.
fn brute_solutions(s: &FiniteSemigroup) -> Vec<ThetaTable> {
    let n = s.order();
    let mut out = Vec::new();
    for code in 0..n.pow((n * n) as u32) {
        let mut c = code;
        let mut cells = vec![0usize; n * n];
        for cell in cells.iter_mut().rev() {
            *cell = c % n;
            c /= n;
        }
        let theta = ThetaTable::from_fn(n, |x, y| cells[x * n + y]);
        if verify_pentagon_direct(s, &theta).unwrap() {
            out.push(theta);
        }
    }
    out
}

fn flags_of(s: &FiniteSemigroup, t: &ThetaTable) -> ClassificationFlags {
    classify_by_composition(&PentagonSolution::new(s.clone(), t.clone()).unwrap())
}

/// Permutations of `0..n` preserving the table, found by scanning all of them.
fn automorphisms_by_scan(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    let n = s.order();
    (0..n)
        .permutations(n)
        .filter(|f| (0..n).all(|x| (0..n).all(|y| f[s.mul(x, y)] == s.mul(f[x], f[y]))))
        .collect()
}

fn orbit_count(s: &FiniteSemigroup, thetas: &[ThetaTable]) -> usize {
    let n = s.order();
    let auts = automorphisms_by_scan(s);
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for t in thetas {
        let key = t.flat().to_vec();
        if seen.contains(&key) {
            continue;
        }
        orbits += 1;
        for f in &auts {
            let mut img = vec![0u8; n * n];
            for x in 0..n {
                for y in 0..n {
                    img[f[x] * n + f[y]] = f[t.get(x, y)] as u8;
                }
            }
            seen.insert(img);
        }
    }
    orbits
}

#[test]
fn search_equals_brute_force_up_to_order_3() {
    for s in all_semigroups_up_to(3) {
        let fast = enumerate_thetas(&s, &SearchOptions::default()).unwrap();
        assert_eq!(fast, brute_solutions(&s), "table {:?}", s.rows());
    }
}

#[test]
fn filtered_search_equals_filter_after_enumeration() {
    for s in all_semigroups_up_to(3) {
        let brute = brute_solutions(&s);
        let flags: Vec<_> = brute.iter().map(|t| flags_of(&s, t)).collect();
        for p in Property::ALL {
            let expected: Vec<_> = brute.iter().zip(&flags).filter(|(_, f)| f.has(p)).map(|(t, _)| t.clone()).collect();
            let got = enumerate_thetas(&s, &SearchOptions::default().require(p)).unwrap();
            assert_eq!(got, expected, "{p} on {:?}", s.rows());
        }
        let both = [Property::Idempotent, Property::Nondegenerate];
        let expected: Vec<_> =
            brute.iter().zip(&flags).filter(|(_, f)| f.satisfies_all(&both)).map(|(t, _)| t.clone()).collect();
        let opts = SearchOptions { filter: both.to_vec(), ..Default::default() };
        assert_eq!(enumerate_thetas(&s, &opts).unwrap(), expected);
    }
}

#[test]
fn iso_representatives_are_distinct_and_complete() {
    for s in all_semigroups_up_to(3) {
        let reps = enumerate_solutions(&s, &SearchOptions::default().iso_classes()).unwrap();
        for (a, b) in reps.iter().tuple_combinations() {
            assert!(solutions_isomorphic(a, b).is_none());
        }
        for t in brute_solutions(&s) {
            let sol = PentagonSolution::new(s.clone(), t).unwrap();
            assert!(reps.iter().any(|r| solutions_isomorphic(&sol, r).is_some()));
        }
        assert_eq!(reps.len(), orbit_count(&s, &brute_solutions(&s)));
    }
}

#[test]
fn order_3_census_against_independent_counts() {
    let report = census(CensusOptions::default()).unwrap();
    assert_eq!(report.semigroup_classes(), 24);
    let mut raw = 0;
    let mut orbits = 0;
    for e in &report.entries {
        let brute = brute_solutions(&e.semigroup);
        assert_eq!(e.raw_count, brute.len());
        assert_eq!(e.iso_count, orbit_count(&e.semigroup, &brute));
        for t in &e.representatives {
            assert!(verify_pentagon_direct(&e.semigroup, t).unwrap());
        }
        raw += brute.len();
        orbits += orbit_count(&e.semigroup, &brute);
    }
    assert_eq!(report.total_raw, raw);
    assert_eq!(report.total_iso, orbits);
    assert_eq!((raw, orbits), (266, 198));
}

#[test]
fn census_is_identical_across_worker_counts() {
    let one = census(CensusOptions::default()).unwrap().render_text();
    for k in [2, 3, 8] {
        let many = census(CensusOptions { worker_count: k, ..Default::default() }).unwrap().render_text();
        assert_eq!(one, many, "workers={k}");
    }
}

#[test]
fn parallel_search_is_identical_on_order_4() {
    let s = named::direct_product(&named::cyclic_group(2), &named::chain_semilattice(2));
    let one = enumerate_thetas(&s, &SearchOptions::default()).unwrap();
    let four = enumerate_thetas(&s, &SearchOptions::default().workers(4)).unwrap();
    assert!(!one.is_empty());
    assert_eq!(one, four);
}

#[test]
fn count_by_flags_examples() {
    let trivial = count_by_flags(&named::trivial(), &SearchOptions::default()).unwrap();
    let all_true = ClassificationFlags {
        idempotent: true,
        involutive: true,
        nondegenerate: true,
        commutative: true,
        cocommutative: true,
    };
    assert_eq!(trivial.into_iter().collect::<Vec<_>>(), vec![(all_true, 1)]);

    for n in [2, 3] {
        let g = named::cyclic_group(n);
        let counts = count_by_flags(&g, &SearchOptions::default().require(Property::Idempotent)).unwrap();
        assert_eq!(counts.values().sum::<usize>(), 1);
        let sols = enumerate_thetas(&g, &SearchOptions::default().require(Property::Idempotent)).unwrap();
        assert_eq!(sols, vec![ThetaTable::constant(n, 0)]);
    }
}

#[test]
fn counts_partition_and_idempotent_involutive_overlap_is_identity_like() {
    for s in all_semigroups_up_to(3) {
        let counts = count_by_flags(&s, &SearchOptions::default()).unwrap();
        let total = enumerate_thetas(&s, &SearchOptions::default()).unwrap().len();
        assert_eq!(counts.values().sum::<usize>(), total);
        for t in enumerate_thetas(&s, &SearchOptions::default()).unwrap() {
            let f = flags_of(&s, &t);
            if f.idempotent && f.involutive {
                // s² = s = id forces xy = x and θ_x(y) = y
                let n = s.order();
                assert!((0..n).all(|x| (0..n).all(|y| s.mul(x, y) == x && t.get(x, y) == y)));
            }
        }
    }
}

/// Solutions on all 3-element sets up to relabelling, without going through
/// semigroup classes: scan every Cayley table, every θ-table, and count
/// S₃-orbits of the (mul, θ) pairs.
#[test]
fn order_3_total_from_labelled_scan() {
    let n = 3;
    let decode = |mut code: usize| {
        let mut cells = vec![0usize; n * n];
        for cell in cells.iter_mut().rev() {
            *cell = code % n;
            code /= n;
        }
        cells
    };
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let mut pairs = BTreeSet::new();
    let mut labelled = 0;
    for mcode in 0..n.pow(9) {
        let mul = decode(mcode);
        let m = |x: usize, y: usize| mul[x * n + y];
        let assoc = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| m(m(x, y), z) == m(x, m(y, z)))));
        if !assoc {
            continue;
        }
        labelled += 1;
        let s = FiniteSemigroup::from_flat(n, &mul, None).unwrap();
        for theta in brute_solutions(&s) {
            pairs.insert((mul.clone(), theta.flat().iter().map(|&c| c as usize).collect::<Vec<_>>()));
        }
    }
    assert_eq!(labelled, 113);
    let raw_labelled = pairs.len();
    let mut seen = BTreeSet::new();
    let mut orbits = 0;
    for (mul, theta) in &pairs {
        if seen.contains(&(mul.clone(), theta.clone())) {
            continue;
        }
        orbits += 1;
        for f in &perms {
            let mut m2 = vec![0; n * n];
            let mut t2 = vec![0; n * n];
            for x in 0..n {
                for y in 0..n {
                    m2[f[x] * n + f[y]] = f[mul[x * n + y]];
                    t2[f[x] * n + f[y]] = f[theta[x * n + y]];
                }
            }
            seen.insert((m2, t2));
        }
    }
    assert!(raw_labelled > 0);
    assert_eq!(orbits, census(CensusOptions::default()).unwrap().total_iso);
    assert_eq!(orbits, 198);
}
