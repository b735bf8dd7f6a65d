use serde::Serialize;

use super::{AlgebraError, FiniteSemigroup};

/// A total map between element sets, stored as its table of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElementMap {
    table: Vec<usize>,
}

impl ElementMap {
    /// Checks that `table` has one image per element of a source of order
    /// `source_order`, each inside `0..target_order`.
    pub fn new(table: Vec<usize>, source_order: usize, target_order: usize) -> Result<Self, AlgebraError> {
        if table.len() != source_order {
            return Err(AlgebraError::MapShape { len: table.len(), n: source_order });
        }
        if let Some((x, &image)) = table.iter().enumerate().find(|(_, &v)| v >= target_order) {
            return Err(AlgebraError::MapOutOfRange { x, image, n: target_order });
        }
        Ok(ElementMap { table })
    }

    /// A self-map of `s`.
    pub fn on(s: &FiniteSemigroup, table: Vec<usize>) -> Result<Self, AlgebraError> {
        Self::new(table, s.order(), s.order())
    }

    pub fn identity(n: usize) -> Self {
        ElementMap { table: (0..n).collect() }
    }

    pub fn constant(n: usize, value: usize) -> Self {
        ElementMap { table: vec![value; n] }
    }

    pub(crate) fn from_table_unchecked(table: Vec<usize>) -> Self {
        ElementMap { table }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// `self ∘ inner`, i.e. `x ↦ self(inner(x))`.
    pub fn compose(&self, inner: &ElementMap) -> ElementMap {
        ElementMap { table: inner.table.iter().map(|&y| self.table[y]).collect() }
    }

    pub fn is_idempotent(&self) -> bool {
        self.table.iter().all(|&y| self.table[y] == y)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.table.len()];
        self.table.iter().all(|&y| y < seen.len() && !std::mem::replace(&mut seen[y], true))
    }

    /// Sorted distinct images.
    pub fn image(&self) -> Vec<usize> {
        let mut image = self.table.clone();
        image.sort_unstable();
        image.dedup();
        image
    }

    /// First pair `(x, y)` with `m(xy) != m(x)m(y)`.
    pub fn homomorphism_violation(&self, source: &FiniteSemigroup, target: &FiniteSemigroup) -> Option<(usize, usize)> {
        for x in source.elements() {
            for y in source.elements() {
                if self.apply(source.mul(x, y)) != target.mul(self.apply(x), self.apply(y)) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    pub fn is_homomorphism(&self, source: &FiniteSemigroup, target: &FiniteSemigroup) -> bool {
        self.homomorphism_violation(source, target).is_none()
    }

    /// Homomorphism that also sends the identity to the identity.
    pub fn is_monoid_homomorphism(&self, source: &FiniteSemigroup, target: &FiniteSemigroup) -> bool {
        match (source.identity(), target.identity()) {
            (Some(a), Some(b)) => self.apply(a) == b && self.is_homomorphism(source, target),
            _ => false,
        }
    }
}

/// A multiplication-preserving bijection between two semigroups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IsoWitness {
    map: Vec<usize>,
}

impl IsoWitness {
    pub fn identity(n: usize) -> Self {
        IsoWitness { map: (0..n).collect() }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn inverse(&self) -> IsoWitness {
        let mut inv = vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        IsoWitness { map: inv }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &IsoWitness) -> IsoWitness {
        IsoWitness { map: inner.map.iter().map(|&y| self.map[y]).collect() }
    }

    pub fn as_map(&self) -> ElementMap {
        ElementMap::from_table_unchecked(self.map.clone())
    }

    /// Re-checks bijectivity and multiplicativity.
    pub fn is_isomorphism(&self, s: &FiniteSemigroup, t: &FiniteSemigroup) -> bool {
        s.order() == t.order() && self.map.len() == s.order() && self.as_map().is_bijective() && self.as_map().is_homomorphism(s, t)
    }
}

/// All isomorphisms `s → t` in lexicographic order of their tables.
pub fn isomorphisms(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Vec<IsoWitness> {
    let n = s.order();
    if n != t.order() || s.idempotents().len() != t.idempotents().len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(s, t, 0, &mut map, &mut used, &mut out);
    out
}

pub fn automorphisms(s: &FiniteSemigroup) -> Vec<IsoWitness> {
    isomorphisms(s, s)
}

fn extend(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    next: usize,
    map: &mut [usize],
    used: &mut [bool],
    out: &mut Vec<IsoWitness>,
) {
    let n = s.order();
    if next == n {
        out.push(IsoWitness { map: map.to_vec() });
        return;
    }
    for image in 0..n {
        if used[image] || s.is_idempotent(next) != t.is_idempotent(image) {
            continue;
        }
        map[next] = image;
        if consistent(s, t, next, map) {
            used[image] = true;
            extend(s, t, next + 1, map, used, out);
            used[image] = false;
        }
    }
    map[next] = usize::MAX;
}

// Checks every product `ab = p` inside the assigned prefix `0..=last` in which
// `last` occurs as a factor or as the result.
fn consistent(s: &FiniteSemigroup, t: &FiniteSemigroup, last: usize, map: &[usize]) -> bool {
    for a in 0..=last {
        for b in 0..=last {
            let p = s.mul(a, b);
            if p <= last && (a == last || b == last || p == last) && map[p] != t.mul(map[a], map[b]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::named;
    use super::*;

    #[test]
    fn automorphism_examples() {
        assert_eq!(automorphisms(&named::cyclic_group(2)), vec![IsoWitness::identity(2)]);
        let null = automorphisms(&named::null_semigroup(3));
        assert_eq!(null.iter().map(|f| f.table().to_vec()).collect::<Vec<_>>(), vec![vec![0, 1, 2], vec![0, 2, 1]]);
        assert_eq!(automorphisms(&named::symmetric_group_3()).len(), 6);
        assert_eq!(automorphisms(&named::cyclic_group(5)).len(), 4);
    }

    #[test]
    fn isomorphisms_between_relabelled_copies() {
        let s = named::monoid_with_unit_b();
        assert!(isomorphisms(&s, &s).contains(&IsoWitness::identity(3)));
        let t = s.relabel(&[1, 2, 0]);
        let isos = isomorphisms(&s, &t);
        assert_eq!(isos.len(), 1);
        assert_eq!(isos[0].table(), &[1, 2, 0]);
        assert!(isos[0].is_isomorphism(&s, &t));
        assert!(isos[0].inverse().is_isomorphism(&t, &s));
        assert!(isomorphisms(&s, &named::cyclic_group(3)).is_empty());
        assert!(isomorphisms(&s, &named::cyclic_group(2)).is_empty());

        // 0·0 = 1 is only decided once 1 is placed, after both factors
        let a = FiniteSemigroup::new(vec![vec![1, 2, 2], vec![2, 2, 2], vec![2, 2, 2]], None).unwrap();
        let b = FiniteSemigroup::new(vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 1]], None).unwrap();
        let isos = isomorphisms(&a, &b);
        assert_eq!(isos.iter().map(|f| f.table().to_vec()).collect::<Vec<_>>(), vec![vec![2, 1, 0]]);
        assert!(isos.iter().all(|f| f.is_isomorphism(&a, &b)));
    }

    #[test]
    fn anti_isomorphic_tables_are_not_isomorphic() {
        assert!(isomorphisms(&named::left_zero(2), &named::right_zero(2)).is_empty());
    }

    #[test]
    fn element_map_checks() {
        let z = named::cyclic_group(4);
        assert_eq!(ElementMap::on(&z, vec![0, 1]).unwrap_err(), AlgebraError::MapShape { len: 2, n: 4 });
        assert_eq!(ElementMap::on(&z, vec![0, 1, 2, 9]).unwrap_err(), AlgebraError::MapOutOfRange { x: 3, image: 9, n: 4 });
        let double = ElementMap::on(&z, vec![0, 2, 0, 2]).unwrap();
        assert!(double.is_homomorphism(&z, &z));
        assert!(!double.is_idempotent());
        assert_eq!(double.image(), vec![0, 2]);
        let shift = ElementMap::on(&z, vec![1, 2, 3, 0]).unwrap();
        assert_eq!(shift.homomorphism_violation(&z, &z), Some((0, 0)));
        assert!(shift.is_bijective());
        assert_eq!(shift.compose(&shift).table(), &[2, 3, 0, 1]);
    }
}
