use serde::Serialize;

use crate::algebra::{isomorphisms, FiniteSemigroup, IsoWitness};

use super::{PentagonSolution, ThetaTable};

/// A semigroup isomorphism `f` with `f(θ_x(y)) = η_{f(x)}(f(y))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolutionIso {
    pub witness: IsoWitness,
}

/// The θ-table carried along `f`: `η[f(x)][f(y)] = f(θ[x][y])`.
pub fn transport_theta(theta: &ThetaTable, f: &IsoWitness) -> ThetaTable {
    let n = theta.order();
    let mut cells = vec![0u8; n * n];
    for x in 0..n {
        for y in 0..n {
            cells[f.apply(x) * n + f.apply(y)] = f.apply(theta.get(x, y)) as u8;
        }
    }
    ThetaTable::from_cells(n, cells)
}

/// Checks the solution-isomorphism condition for a given bijection.
pub fn is_solution_iso(
    f: &IsoWitness,
    (s, theta): (&FiniteSemigroup, &ThetaTable),
    (t, eta): (&FiniteSemigroup, &ThetaTable),
) -> bool {
    f.is_isomorphism(s, t)
        && s.elements().all(|x| s.elements().all(|y| f.apply(theta.get(x, y)) == eta.get(f.apply(x), f.apply(y))))
}

/// First witness, in lexicographic order of the underlying bijection.
pub fn solutions_isomorphic(a: &PentagonSolution, b: &PentagonSolution) -> Option<SolutionIso> {
    isomorphisms(a.semigroup(), b.semigroup())
        .into_iter()
        .find(|f| transport_theta(a.theta(), f) == *b.theta())
        .map(|witness| SolutionIso { witness })
}

/// Lexicographically least image of `theta` under the given automorphisms.
pub fn canonical_theta(theta: &ThetaTable, automorphisms: &[IsoWitness]) -> ThetaTable {
    automorphisms
        .iter()
        .map(|f| transport_theta(theta, f))
        .min()
        .unwrap_or_else(|| theta.clone())
}
