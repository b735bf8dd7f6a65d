//! Finite semigroups and monoids given by their Cayley tables.
//!
//! Elements are the indices `0..n`. A semigroup may carry an explicit identity,
//! which switches monoid-only operations (units, monoid homomorphisms) on.

mod congruence;
mod enumerate;
mod maps;
pub mod named;
mod structure;

use serde::Serialize;
use thiserror::Error;

pub use congruence::{kernel_congruence, quotient, Congruence};
pub use enumerate::{enumerate_semigroups, EnumerateOptions, DEFAULT_ORDER_CAP};
pub use maps::{automorphisms, isomorphisms, ElementMap, IsoWitness};
pub use structure::{LocalGroup, PrincipalSets};

/// Largest order any table in this crate may have. Search kernels keep
/// candidate sets in `u32` bitmasks.
pub const MAX_ORDER: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("a semigroup needs at least one element")]
    Empty,
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    TooLarge(usize),
    #[error("row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("entry {value} at row {row}, column {col} is outside 0..{n}")]
    OutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("not associative: ({x}*{y})*{z} = {left} but {x}*({y}*{z}) = {right}")]
    NotAssociative { x: usize, y: usize, z: usize, left: usize, right: usize },
    #[error("element {0} is not a two-sided identity")]
    NotIdentity(usize),
    #[error("element {0} is not an idempotent")]
    NotIdempotent(usize),
    #[error("the semigroup has no identity element")]
    NoIdentity,
    #[error("map has {len} entries but the semigroup has {n} elements")]
    MapShape { len: usize, n: usize },
    #[error("map sends {x} to {image}, outside 0..{n}")]
    MapOutOfRange { x: usize, image: usize, n: usize },
    #[error(
        "fibers are not compatible with multiplication: {a}~{a2} and {b}~{b2} \
         but {a}*{b} and {a2}*{b2} lie in different classes"
    )]
    NotACongruence { a: usize, a2: usize, b: usize, b2: usize },
    #[error("order {order} exceeds the enumeration cap {cap}; raise the cap explicitly")]
    OverCap { order: usize, cap: usize },
}

/// A finite semigroup on `0..n` stored as a flat row-major Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FiniteSemigroup {
    n: usize,
    mul: Vec<u8>,
    identity: Option<usize>,
    #[serde(skip)]
    idempotents: Vec<usize>,
}

/// Returns the lexicographically first triple `(x, y, z)` with `(xy)z != x(yz)`,
/// or `None` when the table is associative.
pub fn check_associativity(rows: &[Vec<usize>]) -> Result<Option<[usize; 3]>, AlgebraError> {
    let (n, flat) = flatten(rows)?;
    Ok(first_non_associative(n, &flat))
}

fn flatten(rows: &[Vec<usize>]) -> Result<(usize, Vec<u8>), AlgebraError> {
    let n = rows.len();
    if n == 0 {
        return Err(AlgebraError::Empty);
    }
    if n > MAX_ORDER {
        return Err(AlgebraError::TooLarge(n));
    }
    let mut flat = Vec::with_capacity(n * n);
    for (row, entries) in rows.iter().enumerate() {
        if entries.len() != n {
            return Err(AlgebraError::Ragged { row, len: entries.len(), expected: n });
        }
        for (col, &value) in entries.iter().enumerate() {
            if value >= n {
                return Err(AlgebraError::OutOfRange { row, col, value, n });
            }
            flat.push(value as u8);
        }
    }
    Ok((n, flat))
}

fn first_non_associative(n: usize, mul: &[u8]) -> Option<[usize; 3]> {
    let m = |a: usize, b: usize| mul[a * n + b] as usize;
    for x in 0..n {
        for y in 0..n {
            let xy = m(x, y);
            for z in 0..n {
                if m(xy, z) != m(x, m(y, z)) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

impl FiniteSemigroup {
    /// Builds a semigroup from table rows, rejecting malformed or
    /// non-associative tables and a wrong identity.
    pub fn new(rows: Vec<Vec<usize>>, identity: Option<usize>) -> Result<Self, AlgebraError> {
        let (n, flat) = flatten(&rows)?;
        Self::from_flat_u8(n, flat, identity)
    }

    /// Like [`FiniteSemigroup::new`] but fills in the identity when the table has one.
    pub fn with_detected_identity(rows: Vec<Vec<usize>>) -> Result<Self, AlgebraError> {
        let s = Self::new(rows, None)?;
        let e = s.find_identity();
        Ok(s.with_identity(e).expect("detected identity is valid"))
    }

    pub fn from_flat(n: usize, flat: &[usize], identity: Option<usize>) -> Result<Self, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::Empty);
        }
        if flat.len() != n * n {
            return Err(AlgebraError::MapShape { len: flat.len(), n: n * n });
        }
        Self::new(flat.chunks(n).map(<[usize]>::to_vec).collect(), identity)
    }

    pub(crate) fn from_flat_u8(n: usize, mul: Vec<u8>, identity: Option<usize>) -> Result<Self, AlgebraError> {
        if let Some([x, y, z]) = first_non_associative(n, &mul) {
            let m = |a: usize, b: usize| mul[a * n + b] as usize;
            return Err(AlgebraError::NotAssociative {
                x,
                y,
                z,
                left: m(m(x, y), z),
                right: m(x, m(y, z)),
            });
        }
        let idempotents = (0..n).filter(|&x| mul[x * n + x] as usize == x).collect();
        let s = FiniteSemigroup { n, mul, identity: None, idempotents };
        s.with_identity(identity)
    }

    /// Replaces the stored identity, checking that it really is one.
    pub fn with_identity(mut self, identity: Option<usize>) -> Result<Self, AlgebraError> {
        if let Some(e) = identity {
            if e >= self.n {
                return Err(AlgebraError::OutOfRange { row: e, col: e, value: e, n: self.n });
            }
            if !self.is_identity(e) {
                return Err(AlgebraError::NotIdentity(e));
            }
        }
        self.identity = identity;
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.n + y] as usize
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn require_identity(&self) -> Result<usize, AlgebraError> {
        self.identity.ok_or(AlgebraError::NoIdentity)
    }

    /// Scans the table for a two-sided identity, ignoring the stored one.
    pub fn find_identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| self.is_identity(e))
    }

    fn is_identity(&self, e: usize) -> bool {
        (0..self.n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn flat_table(&self) -> &[u8] {
        &self.mul
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.mul(x, x) == x
    }

    pub fn is_commutative(&self) -> bool {
        self.elements().all(|x| (0..x).all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Every element is idempotent.
    pub fn is_band(&self) -> bool {
        self.idempotents.len() == self.n
    }

    pub fn is_group(&self) -> bool {
        match self.find_identity() {
            Some(e) => self.elements().all(|x| self.elements().any(|y| self.mul(x, y) == e && self.mul(y, x) == e)),
            None => false,
        }
    }

    /// Two-sided inverse of `x` relative to the stored identity.
    pub fn inverse(&self, x: usize) -> Option<usize> {
        let e = self.identity?;
        self.elements().find(|&y| self.mul(x, y) == e && self.mul(y, x) == e)
    }

    /// The table with rows and columns relabelled by the bijection `perm`,
    /// so that `perm` becomes an isomorphism from `self` onto the result.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSemigroup {
        let n = self.n;
        let mut mul = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                mul[perm[x] * n + perm[y]] = perm[self.mul(x, y)] as u8;
            }
        }
        let identity = self.identity.map(|e| perm[e]);
        let mut idempotents: Vec<usize> = self.idempotents.iter().map(|&e| perm[e]).collect();
        idempotents.sort_unstable();
        FiniteSemigroup { n, mul, identity, idempotents }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_is_associative() {
        assert_eq!(check_associativity(&[vec![0]]).unwrap(), None);
    }

    #[test]
    fn xor_is_associative() {
        assert_eq!(check_associativity(&[vec![0, 1], vec![1, 0]]).unwrap(), None);
    }

    #[test]
    fn first_violating_triple_is_reported() {
        // (0*0)*0 = 1*0 = 0 while 0*(0*0) = 0*1 = 0; (0*0)*1 = 1*1 = 0 while 0*(0*1) = 0*0 = 1.
        assert_eq!(check_associativity(&[vec![1, 0], vec![0, 0]]).unwrap(), Some([0, 0, 1]));
        let err = FiniteSemigroup::new(vec![vec![1, 0], vec![0, 0]], None).unwrap_err();
        assert_eq!(err, AlgebraError::NotAssociative { x: 0, y: 0, z: 1, left: 0, right: 1 });
    }

    #[test]
    fn malformed_tables_are_rejected() {
        assert_eq!(check_associativity(&[]).unwrap_err(), AlgebraError::Empty);
        assert!(matches!(
            check_associativity(&[vec![0, 1], vec![1]]).unwrap_err(),
            AlgebraError::Ragged { row: 1, len: 1, expected: 2 }
        ));
        assert!(matches!(
            check_associativity(&[vec![0, 2], vec![1, 0]]).unwrap_err(),
            AlgebraError::OutOfRange { row: 0, col: 1, value: 2, n: 2 }
        ));
    }

    #[test]
    fn identity_is_checked() {
        let z2 = vec![vec![0, 1], vec![1, 0]];
        assert!(FiniteSemigroup::new(z2.clone(), Some(0)).is_ok());
        assert_eq!(FiniteSemigroup::new(z2.clone(), Some(1)).unwrap_err(), AlgebraError::NotIdentity(1));
        assert_eq!(FiniteSemigroup::with_detected_identity(z2).unwrap().identity(), Some(0));
    }

    #[test]
    fn relabel_is_an_isomorphism() {
        let s = named::monoid_with_unit_b();
        let perm = [2, 0, 1];
        let t = s.relabel(&perm);
        for x in s.elements() {
            for y in s.elements() {
                assert_eq!(perm[s.mul(x, y)], t.mul(perm[x], perm[y]));
            }
        }
        assert_eq!(t.identity(), Some(2));
    }
}
