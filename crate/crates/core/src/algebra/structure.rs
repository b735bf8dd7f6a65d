use std::collections::BTreeMap;

use super::{AlgebraError, FiniteSemigroup};

/// The fixed sets of an idempotent `e`: `eX = {x | ex = x}`, `Xe = {x | xe = x}`
/// and their intersection `eXe`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalSets {
    pub right: Vec<usize>,
    pub left: Vec<usize>,
    pub two_sided: Vec<usize>,
}

/// The maximal subgroup around an idempotent together with its inversion map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalGroup {
    pub identity: usize,
    pub elements: Vec<usize>,
    pub inverse: BTreeMap<usize, usize>,
}

impl LocalGroup {
    pub fn contains(&self, x: usize) -> bool {
        self.inverse.contains_key(&x)
    }
}

impl FiniteSemigroup {
    fn require_idempotent(&self, e: usize) -> Result<(), AlgebraError> {
        if e < self.order() && self.is_idempotent(e) {
            Ok(())
        } else {
            Err(AlgebraError::NotIdempotent(e))
        }
    }

    /// Natural partial order on idempotents: `e <= f` iff `ef = fe = e`.
    pub fn idempotent_leq(&self, e: usize, f: usize) -> Result<bool, AlgebraError> {
        self.require_idempotent(e)?;
        self.require_idempotent(f)?;
        Ok(self.leq_unchecked(e, f))
    }

    #[inline]
    pub(crate) fn leq_unchecked(&self, e: usize, f: usize) -> bool {
        self.mul(e, f) == e && self.mul(f, e) == e
    }

    pub fn principal_structures(&self, e: usize) -> Result<PrincipalSets, AlgebraError> {
        self.require_idempotent(e)?;
        let right: Vec<usize> = self.elements().filter(|&x| self.mul(e, x) == x).collect();
        let left: Vec<usize> = self.elements().filter(|&x| self.mul(x, e) == x).collect();
        let two_sided = right.iter().copied().filter(|x| left.contains(x)).collect();
        Ok(PrincipalSets { right, left, two_sided })
    }

    /// `{x | xe = x}` for any element `e`, used for the sets `X·θ(..)`.
    pub fn left_fixed_by(&self, e: usize) -> Vec<usize> {
        self.elements().filter(|&x| self.mul(x, e) == x).collect()
    }

    /// `H_e = {x ∈ Xe | ∃ y ∈ Xe: xy = yx = e}` with the inverse of each member.
    pub fn local_group(&self, e: usize) -> Result<LocalGroup, AlgebraError> {
        self.require_idempotent(e)?;
        let xe = self.left_fixed_by(e);
        let mut inverse = BTreeMap::new();
        for &x in &xe {
            if let Some(&y) = xe.iter().find(|&&y| self.mul(x, y) == e && self.mul(y, x) == e) {
                inverse.insert(x, y);
            }
        }
        let elements: Vec<usize> = inverse.keys().copied().collect();
        debug_assert!(elements.iter().all(|&x| self.mul(e, x) == x && self.mul(x, e) == x));
        debug_assert!(elements.iter().all(|&x| elements.iter().all(|&y| inverse.contains_key(&self.mul(x, y)))));
        Ok(LocalGroup { identity: e, elements, inverse })
    }

    /// Every idempotent commutes with every element.
    pub fn has_central_idempotents(&self) -> bool {
        self.idempotents().iter().all(|&e| self.elements().all(|x| self.mul(e, x) == self.mul(x, e)))
    }

    /// Returns the inversion table when every element has exactly one inverse
    /// (`xyx = x`, `yxy = y`) and that inverse commutes with it; `None` otherwise.
    pub fn clifford_inverses(&self) -> Option<Vec<usize>> {
        let mut table = Vec::with_capacity(self.order());
        for x in self.elements() {
            let mut inverses =
                self.elements().filter(|&y| self.mul(self.mul(x, y), x) == x && self.mul(self.mul(y, x), y) == y);
            let y = inverses.next()?;
            if inverses.next().is_some() || self.mul(x, y) != self.mul(y, x) {
                return None;
            }
            table.push(y);
        }
        Some(table)
    }

    pub fn is_clifford(&self) -> bool {
        self.clifford_inverses().is_some()
    }

    pub fn is_cancellative(&self) -> bool {
        let n = self.order();
        for x in 0..n {
            for a in 0..n {
                for b in (a + 1)..n {
                    if self.mul(x, a) == self.mul(x, b) || self.mul(a, x) == self.mul(b, x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Elements `r` with some `r'` such that `rr' = 1`.
    pub fn right_units(&self) -> Result<Vec<usize>, AlgebraError> {
        let one = self.require_identity()?;
        Ok(self.elements().filter(|&r| self.elements().any(|s| self.mul(r, s) == one)).collect())
    }

    /// Elements `l` with some `l'` such that `l'l = 1`.
    pub fn left_units(&self) -> Result<Vec<usize>, AlgebraError> {
        let one = self.require_identity()?;
        Ok(self.elements().filter(|&l| self.elements().any(|s| self.mul(s, l) == one)).collect())
    }

    /// Membership in the variety defined by `abc = bc`.
    pub fn in_variety_s(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| self.mul(a, self.mul(b, c)) == self.mul(b, c))))
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        self.elements().filter(|&z| self.elements().all(|x| self.mul(z, x) == self.mul(x, z))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::named;
    use super::*;

    #[test]
    fn idempotent_sets() {
        assert_eq!(named::cyclic_group(2).idempotents(), &[0]);
        assert_eq!(named::null_semigroup(3).idempotents(), &[0]);
        // 1 = 0, a = 1, b = 2
        assert_eq!(named::monoid_with_unit_b().idempotents(), &[0, 1]);
    }

    #[test]
    fn partial_order_examples() {
        let m = named::monoid_with_unit_b();
        assert!(m.idempotent_leq(1, 1).unwrap());
        assert!(m.idempotent_leq(1, 0).unwrap());
        assert!(!m.idempotent_leq(0, 1).unwrap());
        assert_eq!(m.idempotent_leq(2, 0).unwrap_err(), AlgebraError::NotIdempotent(2));
        assert!(named::null_semigroup(3).idempotent_leq(0, 0).unwrap());
    }

    #[test]
    fn principal_sets() {
        let m = named::monoid_with_unit_b();
        let all = vec![0, 1, 2];
        assert_eq!(m.principal_structures(0).unwrap(), PrincipalSets { right: all.clone(), left: all.clone(), two_sided: all });
        let at_a = m.principal_structures(1).unwrap();
        assert_eq!(at_a.right, vec![1]);
        assert_eq!(at_a.left, vec![1]);
        assert_eq!(at_a.two_sided, vec![1]);
        let z = named::null_semigroup(3).principal_structures(0).unwrap();
        assert_eq!((z.right, z.left, z.two_sided), (vec![0], vec![0], vec![0]));
        assert!(m.principal_structures(2).is_err());
    }

    #[test]
    fn local_groups() {
        let s3 = named::symmetric_group_3();
        let h = s3.local_group(0).unwrap();
        assert_eq!(h.elements, vec![0, 1, 2, 3, 4, 5]);
        for (&x, &y) in &h.inverse {
            assert_eq!(s3.mul(x, y), 0);
        }
        let z = named::null_semigroup(3).local_group(0).unwrap();
        assert_eq!(z.elements, vec![0]);

        // Z2 with an adjoined zero is Clifford; its local groups cover it.
        let c = named::group_with_zero(&named::cyclic_group(2));
        let mut covered: Vec<usize> = c.idempotents().iter().flat_map(|&e| c.local_group(e).unwrap().elements).collect();
        covered.sort_unstable();
        assert_eq!(covered, vec![0, 1, 2]);
    }

    #[test]
    fn central_idempotents() {
        assert!(named::cyclic_group(3).has_central_idempotents());
        assert!(named::null_semigroup(3).has_central_idempotents());
        assert!(!named::left_zero(2).has_central_idempotents());
    }

    #[test]
    fn clifford_detection() {
        let z3 = named::cyclic_group(3);
        assert_eq!(z3.clifford_inverses(), Some(vec![0, 2, 1]));
        let chain = named::chain_semilattice(3);
        assert_eq!(chain.clifford_inverses(), Some(vec![0, 1, 2]));
        assert_eq!(named::null_semigroup(3).clifford_inverses(), None);
        // every element has exactly one commuting inverse, but 2 is a second,
        // non-commuting inverse of the idempotent 0
        let s = FiniteSemigroup::with_detected_identity(vec![
            vec![0, 0, 2, 2],
            vec![0, 1, 2, 3],
            vec![0, 2, 2, 0],
            vec![0, 3, 2, 1],
        ])
        .unwrap();
        assert!(!s.has_central_idempotents());
        assert_eq!(s.clifford_inverses(), None);
    }

    #[test]
    fn cancellation_and_units() {
        assert!(named::cyclic_group(3).is_cancellative());
        assert!(!named::null_semigroup(3).is_cancellative());
        let m = named::monoid_with_unit_b();
        assert_eq!(m.right_units().unwrap(), vec![0, 2]);
        assert_eq!(m.left_units().unwrap(), vec![0, 2]);
        assert_eq!(named::null_semigroup(2).right_units().unwrap_err(), AlgebraError::NoIdentity);
    }

    #[test]
    fn variety_membership() {
        assert!(named::null_semigroup(3).in_variety_s());
        assert!(named::right_zero(3).in_variety_s());
        assert!(!named::cyclic_group(2).in_variety_s());
    }
}
