//! Solutions built from structural data, each constructor validating its
//! hypotheses before producing anything.

mod group;
mod monoid;

use thiserror::Error;

use crate::algebra::{AlgebraError, ElementMap, FiniteSemigroup};
use crate::pentagon::{PentagonError, PentagonSolution, ThetaTable};

pub use group::{enumerate_group_solutions, group_solution, normal_subgroups, GroupConstructionData};
pub use monoid::{enumerate_monoid_constructions, monoid_idempotent_solution, MonoidConstructionData, MONOID_SEARCH_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Pentagon(#[from] PentagonError),

    #[error("map is not an endomorphism: γ({x}·{y}) ≠ γ({x})·γ({y})")]
    NotEndomorphism { x: usize, y: usize },
    #[error("map is not idempotent at {x}")]
    NotIdempotentMap { x: usize },
    #[error("not in the variety abc = bc: ({a}{b}){c} ≠ {b}{c}")]
    NotInVariety { a: usize, b: usize, c: usize },
    #[error("semigroup is not Clifford")]
    NotClifford,
    #[error("maps do not commute at {x}")]
    NotCommuting { x: usize },

    #[error("not a group")]
    NotAGroup,
    #[error("K is not a subgroup: {reason}")]
    NotASubgroup { reason: String },
    #[error("normality fails: {g}·{k}·{g}⁻¹ ∉ K")]
    NotNormal { g: usize, k: usize },
    #[error("coset coverage fails: R has no element in the coset of {x}")]
    CosetMissed { x: usize },
    #[error("coset coverage fails: {a} and {b} in R lie in the same coset")]
    CosetRepeated { a: usize, b: usize },
    #[error("the identity is not in R")]
    IdentityNotInR,
    #[error("μ({x}) = {image} is not in Kx")]
    MuOutsideCoset { x: usize, image: usize },
    #[error("μ({x}) = {image} is not in R")]
    MuOutsideR { x: usize, image: usize },

    #[error("idempotent {e} is not central: {e}·{x} ≠ {x}·{e}")]
    NonCentralIdempotent { e: usize, x: usize },
    #[error("μ is not a homomorphism at ({x}, {y})")]
    MuNotHomomorphism { x: usize, y: usize },
    #[error("μ does not fix the identity")]
    MuNotUnital,
    #[error("μ is not idempotent at {x}")]
    MuNotIdempotent { x: usize },
    #[error("μ({x}) = {image} is not idempotent")]
    MuOutsideIdempotents { x: usize, image: usize },
    #[error("μ({x}) is not a right identity for {x}")]
    MuNotRightIdentity { x: usize },
    #[error("θ_1 differs from μ at {x}")]
    ThetaOneNotMu { x: usize },
    #[error("no map θ_{e} given for {e} in the image of μ")]
    MissingTheta { e: usize },
    #[error("θ_{e} given but {e} is not in the image of μ")]
    UnexpectedTheta { e: usize },
    #[error("(ast) fails: θ_{e}({x}·{y}) ≠ θ_{e}({x})·θ_{f}({y}) with f = μ({e}·{x}) = {f}")]
    Ast { e: usize, x: usize, y: usize, f: usize },
    #[error("(astast) fails: θ_{e}({x}) ≠ θ_{e}(θ_{{{e}·{f}}}({x})) with f = {f}")]
    AstAst { e: usize, f: usize, x: usize },
    #[error("(astastast) fails: θ_{{{e}·{f}}}(θ_{e}({x})) ≠ θ_{e}({x}) with f = μ({x}) = {f}")]
    AstAstAst { e: usize, x: usize, f: usize },
    #[error("constructed solution is not idempotent")]
    NotIdempotentSolution,
    #[error("idempotent solutions need a monoid with central idempotents of order at most {cap}, got order {order}")]
    OverCap { order: usize, cap: usize },
}

fn check_endomorphism(s: &FiniteSemigroup, gamma: &ElementMap) -> Result<(), ConstructError> {
    if gamma.len() != s.order() {
        return Err(AlgebraError::MapShape { len: gamma.len(), n: s.order() }.into());
    }
    if let Some((x, y)) = gamma.homomorphism_violation(s, s) {
        return Err(ConstructError::NotEndomorphism { x, y });
    }
    match s.elements().find(|&x| gamma.apply(gamma.apply(x)) != gamma.apply(x)) {
        Some(x) => Err(ConstructError::NotIdempotentMap { x }),
        None => Ok(()),
    }
}

/// `s(x, y) = (xy, γ(y))` for an idempotent endomorphism `γ`.
pub fn from_endomorphism(s: &FiniteSemigroup, gamma: &ElementMap) -> Result<PentagonSolution, ConstructError> {
    check_endomorphism(s, gamma)?;
    let theta = ThetaTable::from_fn(s.order(), |_, y| gamma.apply(y));
    Ok(PentagonSolution::new(s.clone(), theta)?)
}

/// `s(x, y) = (xy, e)` for an idempotent `e`. It is idempotent exactly when
/// `xy·e = xy` for all `x, y`.
pub fn constant_solution(s: &FiniteSemigroup, e: usize) -> Result<PentagonSolution, ConstructError> {
    if e >= s.order() {
        return Err(AlgebraError::MapOutOfRange { x: 0, image: e, n: s.order() }.into());
    }
    if !s.is_idempotent(e) {
        return Err(AlgebraError::NotIdempotent(e).into());
    }
    from_endomorphism(s, &ElementMap::constant(s.order(), e))
}

/// `s(x, y) = (xy, xy)` on a semigroup satisfying `abc = bc`.
pub fn variety_s_solution(s: &FiniteSemigroup) -> Result<PentagonSolution, ConstructError> {
    let n = s.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if s.mul(s.mul(a, b), c) != s.mul(b, c) {
                    return Err(ConstructError::NotInVariety { a, b, c });
                }
            }
        }
    }
    let theta = ThetaTable::from_fn(n, |x, y| s.mul(x, y));
    Ok(PentagonSolution::new(s.clone(), theta)?)
}

/// `s(x, y) = (xy, y⁻¹y)` on a Clifford semigroup.
pub fn clifford_solution(s: &FiniteSemigroup) -> Result<PentagonSolution, ConstructError> {
    let inv = s.clifford_inverses().ok_or(ConstructError::NotClifford)?;
    let theta = ThetaTable::from_fn(s.order(), |_, y| s.mul(inv[y], y));
    Ok(PentagonSolution::new(s.clone(), theta)?)
}

/// For commuting idempotent maps `f`, `g` on `0..n`: the semigroup `x·y = f(x)`
/// with `s(x, y) = (x·y, g(y))`.
pub fn militaru_solution(f: &[usize], g: &[usize]) -> Result<(FiniteSemigroup, PentagonSolution), ConstructError> {
    let n = f.len();
    let f = ElementMap::new(f.to_vec(), n, n)?;
    let g = ElementMap::new(g.to_vec(), n, n)?;
    for m in [&f, &g] {
        if let Some(x) = (0..n).find(|&x| m.apply(m.apply(x)) != m.apply(x)) {
            return Err(ConstructError::NotIdempotentMap { x });
        }
    }
    if let Some(x) = (0..n).find(|&x| f.apply(g.apply(x)) != g.apply(f.apply(x))) {
        return Err(ConstructError::NotCommuting { x });
    }
    let rows = (0..n).map(|x| vec![f.apply(x); n]).collect();
    let s = FiniteSemigroup::with_detected_identity(rows)?;
    let theta = ThetaTable::from_fn(n, |_, y| g.apply(y));
    let sol = PentagonSolution::new(s.clone(), theta)?;
    Ok((s, sol))
}
