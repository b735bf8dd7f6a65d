//! Idempotent solutions on monoids whose idempotents are central, built from an
//! idempotent homomorphism `μ: M → E(M)` and one map `θ_e` per `e ∈ im μ`.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::algebra::{AlgebraError, ElementMap, FiniteSemigroup};
use crate::pentagon::{is_idempotent, PentagonSolution, ThetaTable};

use super::ConstructError;

/// Largest monoid searched by [`enumerate_monoid_constructions`].
pub const MONOID_SEARCH_CAP: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidConstructionData {
    monoid: FiniteSemigroup,
    mu: ElementMap,
    thetas: BTreeMap<usize, ElementMap>,
}

fn check_central_idempotents(m: &FiniteSemigroup) -> Result<usize, ConstructError> {
    let one = m.require_identity()?;
    for &e in m.idempotents() {
        if let Some(x) = m.elements().find(|&x| m.mul(e, x) != m.mul(x, e)) {
            return Err(ConstructError::NonCentralIdempotent { e, x });
        }
    }
    Ok(one)
}

fn check_mu(m: &FiniteSemigroup, one: usize, mu: &ElementMap) -> Result<(), ConstructError> {
    if mu.len() != m.order() {
        return Err(AlgebraError::MapShape { len: mu.len(), n: m.order() }.into());
    }
    for x in m.elements() {
        let image = mu.apply(x);
        if image >= m.order() || !m.is_idempotent(image) {
            return Err(ConstructError::MuOutsideIdempotents { x, image });
        }
    }
    if let Some((x, y)) = mu.homomorphism_violation(m, m) {
        return Err(ConstructError::MuNotHomomorphism { x, y });
    }
    if mu.apply(one) != one {
        return Err(ConstructError::MuNotUnital);
    }
    if let Some(x) = m.elements().find(|&x| mu.apply(mu.apply(x)) != mu.apply(x)) {
        return Err(ConstructError::MuNotIdempotent { x });
    }
    if let Some(x) = m.elements().find(|&x| m.mul(x, mu.apply(x)) != x) {
        return Err(ConstructError::MuNotRightIdentity { x });
    }
    Ok(())
}

/// Checks (ast), (astast) and (astastast) on every instance whose maps are all
/// present in `maps` (indexed by element). Missing maps make instances skip,
/// which lets the search test partial families.
fn check_family(
    m: &FiniteSemigroup,
    mu: &ElementMap,
    image: &[usize],
    maps: &[Option<&ElementMap>],
) -> Result<(), ConstructError> {
    let elems = m.elements();
    for &e in image {
        let Some(te) = maps[e] else { continue };
        for x in elems.clone() {
            let f = mu.apply(m.mul(e, x));
            let Some(tf) = maps[f] else { continue };
            for y in elems.clone() {
                if te.apply(m.mul(x, y)) != m.mul(te.apply(x), tf.apply(y)) {
                    return Err(ConstructError::Ast { e, x, y, f });
                }
            }
        }
    }
    for &e in image {
        let Some(te) = maps[e] else { continue };
        for &f in image {
            let Some(tef) = maps[m.mul(e, f)] else { continue };
            if let Some(x) = elems.clone().find(|&x| te.apply(x) != te.apply(tef.apply(x))) {
                return Err(ConstructError::AstAst { e, f, x });
            }
        }
    }
    for &e in image {
        let Some(te) = maps[e] else { continue };
        for x in elems.clone() {
            let f = mu.apply(x);
            let Some(tef) = maps[m.mul(e, f)] else { continue };
            if tef.apply(te.apply(x)) != te.apply(x) {
                return Err(ConstructError::AstAstAst { e, x, f });
            }
        }
    }
    Ok(())
}

impl MonoidConstructionData {
    /// Validates the monoid, `μ`, the shape of the family, `θ_1 = μ`, and then
    /// (ast), (astast), (astastast) in that order, each with a witness.
    pub fn new(
        monoid: FiniteSemigroup,
        mu: ElementMap,
        thetas: BTreeMap<usize, ElementMap>,
    ) -> Result<Self, ConstructError> {
        let one = check_central_idempotents(&monoid)?;
        check_mu(&monoid, one, &mu)?;
        let image = mu.image();
        if let Some(&e) = image.iter().find(|e| !thetas.contains_key(e)) {
            return Err(ConstructError::MissingTheta { e });
        }
        if let Some(&e) = thetas.keys().find(|e| image.binary_search(e).is_err()) {
            return Err(ConstructError::UnexpectedTheta { e });
        }
        for map in thetas.values() {
            ElementMap::on(&monoid, map.table().to_vec())?;
        }
        if let Some(x) = monoid.elements().find(|&x| thetas[&one].apply(x) != mu.apply(x)) {
            return Err(ConstructError::ThetaOneNotMu { x });
        }
        let mut maps = vec![None; monoid.order()];
        for (&e, map) in &thetas {
            maps[e] = Some(map);
        }
        check_family(&monoid, &mu, &image, &maps)?;
        Ok(MonoidConstructionData { monoid, mu, thetas })
    }

    /// `μ = θ_1` and `θ_e` for `e ∈ im θ_1`, read off an idempotent solution.
    pub fn from_solution(sol: &PentagonSolution) -> Result<Self, ConstructError> {
        let m = sol.semigroup();
        let one = m.require_identity()?;
        let mu = sol.theta_map(one);
        let thetas = mu.image().into_iter().map(|e| (e, sol.theta_map(e))).collect();
        Self::new(m.clone(), mu, thetas)
    }

    pub fn monoid(&self) -> &FiniteSemigroup {
        &self.monoid
    }

    pub fn mu(&self) -> &ElementMap {
        &self.mu
    }

    pub fn theta(&self, e: usize) -> Option<&ElementMap> {
        self.thetas.get(&e)
    }
}

/// `θ_x := θ_{μ(x)}`, verified to be an idempotent solution.
pub fn monoid_idempotent_solution(data: &MonoidConstructionData) -> Result<PentagonSolution, ConstructError> {
    let m = &data.monoid;
    let theta = ThetaTable::from_fn(m.order(), |x, y| data.thetas[&data.mu.apply(x)].apply(y));
    let sol = PentagonSolution::new(m.clone(), theta)?;
    if !is_idempotent(m, sol.theta()) {
        return Err(ConstructError::NotIdempotentSolution);
    }
    Ok(sol)
}

/// Every solution obtainable from valid `(μ, {θ_e})` data, sorted by θ-table.
///
/// `μ` ranges over all maps into `E(M)` that pass the homomorphism and
/// right-identity checks. The maps `θ_e` are then chosen one at a time, whole
/// maps rather than single cells, and each partial family is tested against
/// the instances of (ast)/(astast)/(astastast) it already determines.
pub fn enumerate_monoid_constructions(m: &FiniteSemigroup) -> Result<Vec<PentagonSolution>, ConstructError> {
    let one = check_central_idempotents(m)?;
    let n = m.order();
    if n > MONOID_SEARCH_CAP {
        return Err(ConstructError::OverCap { order: n, cap: MONOID_SEARCH_CAP });
    }
    let all_maps: Vec<ElementMap> = (0..n)
        .map(|_| 0..n)
        .multi_cartesian_product()
        .map(|t| ElementMap::on(m, t).expect("entries in range"))
        .collect();
    let idem = m.idempotents().to_vec();
    let mut out = Vec::new();
    for mu_table in (0..n).map(|_| idem.iter().copied()).multi_cartesian_product() {
        let mu = ElementMap::on(m, mu_table)?;
        if check_mu(m, one, &mu).is_err() {
            continue;
        }
        let image = mu.image();
        let free: Vec<usize> = image.iter().copied().filter(|&e| e != one).collect();
        let mut maps: Vec<Option<&ElementMap>> = vec![None; n];
        maps[one] = Some(&mu);
        if check_family(m, &mu, &image, &maps).is_err() {
            continue;
        }
        // Candidates for each θ_e that are consistent with θ_1 on their own.
        let candidates: Vec<Vec<&ElementMap>> = free
            .iter()
            .map(|&e| {
                all_maps
                    .iter()
                    .filter(|cand| {
                        maps[e] = Some(cand);
                        let ok = check_family(m, &mu, &image, &maps).is_ok();
                        maps[e] = None;
                        ok
                    })
                    .collect()
            })
            .collect();
        let mut families = Vec::new();
        extend_family(m, &mu, &image, &free, &candidates, &mut maps, 0, &mut families);
        for thetas in families {
            let data = MonoidConstructionData::new(m.clone(), mu.clone(), thetas)?;
            out.push(monoid_idempotent_solution(&data)?);
        }
    }
    out.sort_by(|a, b| a.theta().cmp(b.theta()));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn extend_family<'a>(
    m: &FiniteSemigroup,
    mu: &ElementMap,
    image: &[usize],
    free: &[usize],
    candidates: &[Vec<&'a ElementMap>],
    maps: &mut Vec<Option<&'a ElementMap>>,
    depth: usize,
    out: &mut Vec<BTreeMap<usize, ElementMap>>,
) {
    if depth == free.len() {
        out.push(image.iter().map(|&e| (e, maps[e].expect("complete family").clone())).collect());
        return;
    }
    let e = free[depth];
    for &cand in &candidates[depth] {
        maps[e] = Some(cand);
        if check_family(m, mu, image, maps).is_ok() {
            extend_family(m, mu, image, free, candidates, maps, depth + 1, out);
        }
    }
    maps[e] = None;
}
