use std::collections::BTreeSet;

use itertools::Itertools;

use super::{AlgebraError, FiniteSemigroup};

/// Orders above this need an explicit opt-in; order 5 already has
/// over a thousand isomorphism classes and 183 732 labelled tables.
pub const DEFAULT_ORDER_CAP: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub monoid_only: bool,
    pub up_to_iso: bool,
    pub max_order: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { monoid_only: false, up_to_iso: true, max_order: DEFAULT_ORDER_CAP }
    }
}

const UNSET: u8 = u8::MAX;

/// All semigroups of order `n`, sorted by table.
///
/// With `up_to_iso` each class is represented by its lexicographically least
/// table. The identity is filled in whenever the table has one.
pub fn enumerate_semigroups(n: usize, opts: EnumerateOptions) -> Result<Vec<FiniteSemigroup>, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::Empty);
    }
    if n > opts.max_order {
        return Err(AlgebraError::OverCap { order: n, cap: opts.max_order });
    }
    let mut tables = Vec::new();
    let mut cells = vec![UNSET; n * n];
    fill(n, 0, &mut cells, &mut tables);

    let tables: Vec<Vec<u8>> = if opts.up_to_iso {
        let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
        let canon: BTreeSet<Vec<u8>> = tables.into_iter().map(|t| canonical_table(n, &t, &perms)).collect();
        canon.into_iter().collect()
    } else {
        tables
    };

    let mut out = Vec::with_capacity(tables.len());
    for t in tables {
        let s = FiniteSemigroup::from_flat_u8(n, t, None).expect("search only emits associative tables");
        let e = s.find_identity();
        if opts.monoid_only && e.is_none() {
            continue;
        }
        out.push(s.with_identity(e).expect("detected identity"));
    }
    Ok(out)
}

/// Lexicographically least relabelling of a flat table.
pub(crate) fn canonical_table(n: usize, table: &[u8], perms: &[Vec<usize>]) -> Vec<u8> {
    let mut best = table.to_vec();
    let mut cand = vec![0u8; n * n];
    for p in perms {
        for x in 0..n {
            for y in 0..n {
                cand[p[x] * n + p[y]] = p[table[x * n + y] as usize] as u8;
            }
        }
        if cand < best {
            best.copy_from_slice(&cand);
        }
    }
    best
}

fn fill(n: usize, cell: usize, cells: &mut [u8], out: &mut Vec<Vec<u8>>) {
    if cell == n * n {
        out.push(cells.to_vec());
        return;
    }
    for v in 0..n as u8 {
        cells[cell] = v;
        if partial_associative(n, cells) {
            fill(n, cell + 1, cells, out);
        }
    }
    cells[cell] = UNSET;
}

fn partial_associative(n: usize, cells: &[u8]) -> bool {
    let get = |a: usize, b: usize| cells[a * n + b];
    for x in 0..n {
        for y in 0..n {
            let xy = get(x, y);
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let left = get(xy as usize, z);
                let yz = get(y, z);
                if left == UNSET || yz == UNSET {
                    continue;
                }
                let right = get(x, yz as usize);
                if right != UNSET && left != right {
                    return false;
                }
            }
        }
    }
    true
}
