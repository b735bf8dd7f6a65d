use crate::algebra::FiniteSemigroup;

use super::{PentagonError, ThetaTable};

/// A self-map of `X × X`, with its leg actions `s₁₂`, `s₁₃`, `s₂₃` on `X³`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMap {
    n: usize,
    image: Vec<(usize, usize)>,
}

type Triple = [usize; 3];

impl PairMap {
    pub fn new(n: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        PairMap { n, image: (0..n * n).map(|i| f(i / n, i % n)).collect() }
    }

    /// `s(x, y) = (xy, θ_x(y))`.
    pub fn from_table(s: &FiniteSemigroup, theta: &ThetaTable) -> Self {
        Self::new(s.order(), |x, y| (s.mul(x, y), theta.get(x, y)))
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, |x, y| (x, y))
    }

    #[inline]
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        self.image[x * self.n + y]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &PairMap) -> PairMap {
        Self::new(self.n, |x, y| {
            let (a, b) = inner.apply(x, y);
            self.apply(a, b)
        })
    }

    pub fn s12(&self, [x, y, z]: Triple) -> Triple {
        let (a, b) = self.apply(x, y);
        [a, b, z]
    }

    pub fn s23(&self, [x, y, z]: Triple) -> Triple {
        let (b, c) = self.apply(y, z);
        [x, b, c]
    }

    /// `(id × τ) s₁₂ (id × τ)` with `τ` the flip.
    pub fn s13(&self, t: Triple) -> Triple {
        flip23(self.s12(flip23(t)))
    }

    pub fn triples(&self) -> impl Iterator<Item = Triple> + '_ {
        let n = self.n;
        (0..n * n * n).map(move |i| [i / (n * n), (i / n) % n, i % n])
    }

    /// `s₂₃ s₁₃ s₁₂ = s₁₂ s₂₃` pointwise on `X³`.
    pub fn satisfies_pentagon(&self) -> bool {
        self.triples().all(|t| self.s23(self.s13(self.s12(t))) == self.s12(self.s23(t)))
    }

    /// `s₁₂ s₁₃ = s₁₃ s₁₂`.
    pub fn legs_12_13_commute(&self) -> bool {
        self.triples().all(|t| self.s12(self.s13(t)) == self.s13(self.s12(t)))
    }

    /// `s₁₃ s₂₃ = s₂₃ s₁₃`.
    pub fn legs_13_23_commute(&self) -> bool {
        self.triples().all(|t| self.s13(self.s23(t)) == self.s23(self.s13(t)))
    }
}

fn flip23([x, y, z]: Triple) -> Triple {
    [x, z, y]
}

/// Builds `s` on `X × X` and checks the pentagon equation by composing its legs.
/// Independent of the (P1)/(P2) reformulation used by `verify_solution`.
pub fn verify_pentagon_direct(s: &FiniteSemigroup, theta: &ThetaTable) -> Result<bool, PentagonError> {
    theta.check_shape(s)?;
    Ok(PairMap::from_table(s, theta).satisfies_pentagon())
}
