//! Concrete semigroups used throughout the tests, the theorem lab and the CLI.
//!
//! Every constructor detects and stores the identity when the table has one.

use std::collections::BTreeSet;

use super::FiniteSemigroup;

fn build(rows: Vec<Vec<usize>>) -> FiniteSemigroup {
    FiniteSemigroup::with_detected_identity(rows).expect("named table is a semigroup")
}

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> FiniteSemigroup {
    build((0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect())
}

pub fn trivial() -> FiniteSemigroup {
    table(1, |_, _| 0)
}

/// `Z_n` under addition, identity 0.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    table(n, |x, y| (x + y) % n)
}

/// `xy = 0` for all `x, y`.
pub fn null_semigroup(n: usize) -> FiniteSemigroup {
    table(n, |_, _| 0)
}

/// `xy = x`.
pub fn left_zero(n: usize) -> FiniteSemigroup {
    table(n, |x, _| x)
}

/// `xy = y`.
pub fn right_zero(n: usize) -> FiniteSemigroup {
    table(n, |_, y| y)
}

/// The chain `0 < 1 < ... < n-1` under `min`; `n-1` is the identity.
pub fn chain_semilattice(n: usize) -> FiniteSemigroup {
    table(n, |x, y| x.min(y))
}

/// Commutative monoid `{1, a, b}` = `{0, 1, 2}` with `a² = a`, `ab = a`, `b² = 1`.
pub fn monoid_with_unit_b() -> FiniteSemigroup {
    build(vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 0]])
}

/// Commutative monoid `{1, a, b}` = `{0, 1, 2}` with `a² = a`, `ab = a`, `b² = a`,
/// so that the idempotents are exactly `{1, a}`.
pub fn monoid_b_squared_a() -> FiniteSemigroup {
    build(vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 1, 1]])
}

/// Idempotent commutative monoid `{1, a, b}` = `{0, 1, 2}` with `ab = b`.
pub fn chain_monoid() -> FiniteSemigroup {
    build(vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]])
}

/// Direct product, with `(i, j)` stored at index `i * |b| + j`.
pub fn direct_product(a: &FiniteSemigroup, b: &FiniteSemigroup) -> FiniteSemigroup {
    let m = b.order();
    table(a.order() * m, |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m))
}

/// `g` with a new absorbing element appended as index `|g|`.
pub fn group_with_zero(g: &FiniteSemigroup) -> FiniteSemigroup {
    let z = g.order();
    table(z + 1, |x, y| if x == z || y == z { z } else { g.mul(x, y) })
}

/// The group generated by permutations of `0..points`, elements sorted
/// lexicographically (so the identity permutation is element 0).
pub fn permutation_group(points: usize, generators: &[Vec<usize>]) -> FiniteSemigroup {
    let id: Vec<usize> = (0..points).collect();
    let mut elements: BTreeSet<Vec<usize>> = BTreeSet::from([id]);
    let mut frontier: Vec<Vec<usize>> = elements.iter().cloned().collect();
    while let Some(p) = frontier.pop() {
        for g in generators {
            let q: Vec<usize> = (0..points).map(|i| p[g[i]]).collect();
            if elements.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    let elements: Vec<Vec<usize>> = elements.into_iter().collect();
    let index = |p: &Vec<usize>| elements.binary_search(p).expect("closed under composition");
    table(elements.len(), |x, y| {
        let (p, q) = (&elements[x], &elements[y]);
        index(&(0..points).map(|i| p[q[i]]).collect())
    })
}

pub fn symmetric_group_3() -> FiniteSemigroup {
    permutation_group(3, &[vec![1, 0, 2], vec![1, 2, 0]])
}

/// Symmetries of a square acting on its corners.
pub fn dihedral_group_4() -> FiniteSemigroup {
    permutation_group(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
}

/// `{±1, ±i, ±j, ±k}`, element `4 * sign + unit` with units ordered `1, i, j, k`.
pub fn quaternion_group() -> FiniteSemigroup {
    // (negate, unit) for unit products
    const UNITS: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    table(8, |x, y| {
        let (sign, unit) = UNITS[x % 4][y % 4];
        ((x / 4 + y / 4 + sign) % 2) * 4 + unit
    })
}

/// One representative of every group of order at most 8.
pub fn small_groups() -> Vec<(&'static str, FiniteSemigroup)> {
    let z = cyclic_group;
    vec![
        ("Z1", z(1)),
        ("Z2", z(2)),
        ("Z3", z(3)),
        ("Z4", z(4)),
        ("Z2xZ2", direct_product(&z(2), &z(2))),
        ("Z5", z(5)),
        ("Z6", z(6)),
        ("S3", symmetric_group_3()),
        ("Z7", z(7)),
        ("Z8", z(8)),
        ("Z4xZ2", direct_product(&z(4), &z(2))),
        ("Z2xZ2xZ2", direct_product(&direct_product(&z(2), &z(2)), &z(2))),
        ("D4", dihedral_group_4()),
        ("Q8", quaternion_group()),
    ]
}
