use super::{AlgebraError, ElementMap, FiniteSemigroup};

/// A partition of the elements that is compatible with multiplication.
///
/// Class ids are normalised to `0..k` in order of first appearance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: usize,
}

impl Congruence {
    pub fn new(s: &FiniteSemigroup, labels: &[usize]) -> Result<Self, AlgebraError> {
        let n = s.order();
        if labels.len() != n {
            return Err(AlgebraError::MapShape { len: labels.len(), n });
        }
        let mut seen: Vec<(usize, usize)> = Vec::new();
        let class_of: Vec<usize> = labels
            .iter()
            .map(|label| match seen.iter().find(|(l, _)| l == label) {
                Some(&(_, id)) => id,
                None => {
                    seen.push((*label, seen.len()));
                    seen.len() - 1
                }
            })
            .collect();
        let c = Congruence { class_of, classes: seen.len() };
        if let Some((a, a2, b, b2)) = c.compatibility_violation(s) {
            return Err(AlgebraError::NotACongruence { a, a2, b, b2 });
        }
        Ok(c)
    }

    pub fn discrete(s: &FiniteSemigroup) -> Self {
        Congruence { class_of: s.elements().collect(), classes: s.order() }
    }

    pub fn full(s: &FiniteSemigroup) -> Self {
        Congruence { class_of: vec![0; s.order()], classes: 1 }
    }

    fn compatibility_violation(&self, s: &FiniteSemigroup) -> Option<(usize, usize, usize, usize)> {
        let n = s.order();
        for a in 0..n {
            for a2 in (a + 1)..n {
                if self.class_of[a] != self.class_of[a2] {
                    continue;
                }
                for b in 0..n {
                    if !self.related(s.mul(a, b), s.mul(a2, b)) {
                        return Some((a, a2, b, b));
                    }
                    if !self.related(s.mul(b, a), s.mul(b, a2)) {
                        return Some((b, b, a, a2));
                    }
                }
            }
        }
        None
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.classes];
        for (x, &c) in self.class_of.iter().enumerate() {
            blocks[c].push(x);
        }
        blocks
    }

    /// `reps` meets every class exactly once.
    pub fn is_system_of_representatives(&self, reps: &[usize]) -> bool {
        let mut hits = vec![0usize; self.classes];
        for &r in reps {
            match hits.get_mut(self.class_of.get(r).copied().unwrap_or(usize::MAX)) {
                Some(h) => *h += 1,
                None => return false,
            }
        }
        hits.iter().all(|&h| h == 1)
    }
}

/// The partition of `s` into fibers of `m`; fails when `m` is not a homomorphism
/// in the sense that its fibers are not compatible with multiplication.
pub fn kernel_congruence(s: &FiniteSemigroup, m: &ElementMap) -> Result<Congruence, AlgebraError> {
    if m.len() != s.order() {
        return Err(AlgebraError::MapShape { len: m.len(), n: s.order() });
    }
    if let Some((x, &image)) = m.table().iter().enumerate().find(|(_, &v)| v >= s.order()) {
        return Err(AlgebraError::MapOutOfRange { x, image, n: s.order() });
    }
    Congruence::new(s, m.table())
}

/// The quotient semigroup on class ids together with the projection onto it.
pub fn quotient(s: &FiniteSemigroup, c: &Congruence) -> (FiniteSemigroup, ElementMap) {
    let blocks = c.blocks();
    let rows = blocks
        .iter()
        .map(|p| blocks.iter().map(|q| c.class_of(s.mul(p[0], q[0]))).collect())
        .collect();
    let identity = s.identity().map(|e| c.class_of(e));
    let q = FiniteSemigroup::new(rows, identity).expect("quotient by a congruence is a semigroup");
    let projection = ElementMap::from_table_unchecked(c.class_of.clone());
    (q, projection)
}
