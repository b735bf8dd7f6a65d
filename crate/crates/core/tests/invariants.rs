use std::sync::OnceLock;

use itertools::Itertools;
use proptest::prelude::*;

use pentagon::algebra::{enumerate_semigroups, isomorphisms, kernel_congruence, quotient, ElementMap, EnumerateOptions, FiniteSemigroup};
use pentagon::format::{parse_cayley, parse_construction, parse_solution, parse_theta, write_cayley, write_solution};
use pentagon::pentagon::{
    is_solution_iso, satisfies_pentagon, solutions_isomorphic, transport_theta, verify_pentagon_direct, verify_solution,
    PentagonSolution, ThetaTable,
};
use pentagon::search::{enumerate_thetas, SearchOptions};

const SMALL: usize = 3;

struct Pool {
    semigroups: Vec<FiniteSemigroup>,
    solutions: Vec<Vec<ThetaTable>>,
}

/// Semigroups of order 1..=3 up to isomorphism with all their solutions.
fn pool() -> &'static Pool {
    static POOL: OnceLock<Pool> = OnceLock::new();
    POOL.get_or_init(|| {
        let semigroups: Vec<FiniteSemigroup> =
            (1..=SMALL).flat_map(|n| enumerate_semigroups(n, EnumerateOptions::default()).unwrap()).collect();
        let solutions = semigroups.iter().map(|s| enumerate_thetas(s, &SearchOptions::default()).unwrap()).collect();
        Pool { semigroups, solutions }
    })
}

fn semigroups_up_to(n: usize) -> Vec<FiniteSemigroup> {
    (1..=n).flat_map(|k| enumerate_semigroups(k, EnumerateOptions::default()).unwrap()).collect()
}

fn associative_by_triples(rows: &[Vec<usize>]) -> bool {
    let n = rows.len();
    (0..n).cartesian_product(0..n).cartesian_product(0..n).all(|((x, y), z)| rows[rows[x][y]][z] == rows[x][rows[y][z]])
}

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::vec(0..n, n), n)
}

fn any_square() -> impl Strategy<Value = Vec<Vec<usize>>> {
    (1..=SMALL).prop_flat_map(square)
}

/// A semigroup from the pool relabelled by a random permutation, so that
/// tables in every labelling are exercised.
fn relabelled_semigroup() -> impl Strategy<Value = (usize, FiniteSemigroup)> {
    (0..pool().semigroups.len()).prop_flat_map(|i| {
        let n = pool().semigroups[i].order();
        Just((0..n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |perm| (i, pool().semigroups[i].relabel(&perm)))
    })
}

/// A θ-table: either uniformly random, or a known solution with one cell
/// changed, so both outcomes of the checks are well represented.
fn theta_for(i: usize) -> impl Strategy<Value = ThetaTable> {
    let n = pool().semigroups[i].order();
    let sols = pool().solutions[i].clone();
    let random = square(n).prop_map(|rows| ThetaTable::new(rows).unwrap()).boxed();
    let near = (0..sols.len(), 0..n, 0..n, 0..n).prop_map(move |(k, x, y, v)| sols[k].with_cell(x, y, v)).boxed();
    prop_oneof![random, near]
}

fn pool_pair() -> impl Strategy<Value = (FiniteSemigroup, ThetaTable)> {
    (0..pool().semigroups.len()).prop_flat_map(|i| theta_for(i).prop_map(move |t| (pool().semigroups[i].clone(), t)))
}

fn pool_solution() -> impl Strategy<Value = PentagonSolution> {
    (0..pool().semigroups.len()).prop_flat_map(|i| {
        let sols = pool().solutions[i].clone();
        (0..sols.len()).prop_map(move |k| PentagonSolution::new(pool().semigroups[i].clone(), sols[k].clone()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, ..ProptestConfig::default() })]

    #[test]
    fn constructor_accepts_exactly_the_associative_tables(rows in any_square()) {
        let accepted = FiniteSemigroup::new(rows.clone(), None).is_ok();
        prop_assert_eq!(accepted, associative_by_triples(&rows));
    }

    #[test]
    fn verification_agrees_with_the_direct_check((s, theta) in pool_pair()) {
        let report = verify_solution(&s, &theta).unwrap();
        prop_assert_eq!(report.holds(), verify_pentagon_direct(&s, &theta).unwrap());
        prop_assert_eq!(report.holds(), satisfies_pentagon(&s, &theta));
    }

    #[test]
    fn verification_agrees_on_relabelled_tables(
        (s, rows) in relabelled_semigroup().prop_flat_map(|(_, s)| { let n = s.order(); (Just(s), square(n)) })
    ) {
        let theta = ThetaTable::new(rows).unwrap();
        prop_assert_eq!(verify_solution(&s, &theta).unwrap().holds(), verify_pentagon_direct(&s, &theta).unwrap());
    }

    #[test]
    fn isomorphic_copies_are_found_and_witnesses_check(sol in pool_solution(), seed in any::<u64>()) {
        let s = sol.semigroup();
        let n = s.order();
        let mut perm: Vec<usize> = (0..n).collect();
        // deterministic shuffle from the seed
        for k in (1..n).rev() {
            perm.swap(k, (seed as usize >> (k * 3)) % (k + 1));
        }
        let t = s.relabel(&perm);
        let f = isomorphisms(s, &t).into_iter().next().unwrap();
        let copy = PentagonSolution::new(t.clone(), transport_theta(sol.theta(), &f)).unwrap();

        let there = solutions_isomorphic(&sol, &copy).unwrap();
        prop_assert!(is_solution_iso(&there.witness, (s, sol.theta()), (&t, copy.theta())));
        let back = solutions_isomorphic(&copy, &sol).unwrap();
        prop_assert!(is_solution_iso(&back.witness, (&t, copy.theta()), (s, sol.theta())));
        let itself = solutions_isomorphic(&sol, &sol).unwrap();
        prop_assert!(is_solution_iso(&itself.witness, (s, sol.theta()), (s, sol.theta())));
        // composing the two directions is an automorphism of the solution
        let round = back.witness.compose(&there.witness);
        prop_assert!(is_solution_iso(&round, (s, sol.theta()), (s, sol.theta())));
    }

    #[test]
    fn solution_text_round_trips_byte_for_byte(sol in pool_solution()) {
        let text = write_solution(&sol);
        let back = parse_solution(&text).unwrap();
        prop_assert_eq!(&back, &sol);
        prop_assert_eq!(write_solution(&back), text);
    }

    #[test]
    fn cayley_text_round_trips((_, s) in relabelled_semigroup()) {
        let text = write_cayley(&s);
        let back = parse_cayley(&text).unwrap();
        prop_assert_eq!(write_cayley(&back), text);
        prop_assert_eq!(back, s);
    }

    #[test]
    fn parsers_never_panic(text in "[0-9 \\-#>a-z\n]{0,60}") {
        let _ = parse_cayley(&text);
        let _ = parse_theta(&text);
        let _ = parse_solution(&text);
        let _ = parse_construction(&text, 3);
    }
}

#[test]
fn idempotent_order_is_a_partial_order() {
    for s in semigroups_up_to(4) {
        let e = s.idempotents();
        let leq = |a: usize, b: usize| s.idempotent_leq(a, b).unwrap();
        for &a in e {
            assert!(leq(a, a));
            for &b in e {
                if leq(a, b) && leq(b, a) {
                    assert_eq!(a, b);
                }
                for &c in e {
                    if leq(a, b) && leq(b, c) {
                        assert!(leq(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn local_groups_are_disjoint_closed_groups() {
    for s in semigroups_up_to(4) {
        let groups: Vec<_> = s.idempotents().iter().map(|&e| s.local_group(e).unwrap()).collect();
        for h in &groups {
            assert!(h.contains(h.identity));
            for (&x, &inv) in &h.inverse {
                assert_eq!(s.mul(x, inv), h.identity);
                assert_eq!(s.mul(inv, x), h.identity);
                assert!(h.elements.iter().all(|&y| h.contains(s.mul(x, y))));
            }
        }
        for (g, h) in groups.iter().tuple_combinations() {
            assert!(g.elements.iter().all(|x| !h.contains(*x)), "{:?} meets {:?}", g.elements, h.elements);
        }
    }
}

#[test]
fn endomorphisms_factor_through_their_kernel_quotient() {
    for s in semigroups_up_to(3) {
        let n = s.order();
        for table in (0..n).map(|_| 0..n).multi_cartesian_product() {
            let m = ElementMap::on(&s, table).unwrap();
            if !m.is_homomorphism(&s, &s) {
                continue;
            }
            let c = kernel_congruence(&s, &m).unwrap();
            let (q, proj) = quotient(&s, &c);
            assert!(proj.is_homomorphism(&s, &q));
            assert_eq!(proj.image().len(), q.order());
            // the induced map q → s is well defined, injective and a homomorphism
            let mut section = vec![None; q.order()];
            for x in s.elements() {
                let slot = &mut section[proj.apply(x)];
                assert!(slot.is_none_or(|v| v == m.apply(x)));
                *slot = Some(m.apply(x));
            }
            let section: Vec<usize> = section.into_iter().map(Option::unwrap).collect();
            assert_eq!(section.iter().unique().count(), section.len());
            let iota = ElementMap::new(section, q.order(), n).unwrap();
            assert!(iota.is_homomorphism(&q, &s));
            assert_eq!(iota.compose(&proj), m);
        }
    }
}
