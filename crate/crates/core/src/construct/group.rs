use itertools::Itertools;

use crate::algebra::{AlgebraError, ElementMap, FiniteSemigroup};
use crate::pentagon::{PentagonSolution, ThetaTable};

use super::ConstructError;

/// Largest group handled by [`enumerate_group_solutions`].
pub const GROUP_ENUMERATION_CAP: usize = 8;

/// A normal subgroup `K`, a system `R` of coset representatives with `1 ∈ R`,
/// and `μ: G → R` with `μ(x) ∈ Kx`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupConstructionData {
    group: FiniteSemigroup,
    k: Vec<usize>,
    r: Vec<usize>,
    mu: ElementMap,
}

fn sorted_subset(g: &FiniteSemigroup, set: &[usize]) -> Result<Vec<usize>, ConstructError> {
    if let Some(&x) = set.iter().find(|&&x| x >= g.order()) {
        return Err(AlgebraError::MapOutOfRange { x, image: x, n: g.order() }.into());
    }
    let mut v = set.to_vec();
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

fn same_coset(g: &FiniteSemigroup, k: &[usize], a: usize, b: usize) -> bool {
    let binv = g.inverse(b).expect("group element");
    k.binary_search(&g.mul(a, binv)).is_ok()
}

fn check_normal_subgroup(g: &FiniteSemigroup, k: &[usize]) -> Result<(), ConstructError> {
    let one = g.identity().ok_or(ConstructError::NotAGroup)?;
    if k.binary_search(&one).is_err() {
        return Err(ConstructError::NotASubgroup { reason: "the identity is missing".into() });
    }
    for (&a, &b) in k.iter().cartesian_product(k) {
        let ab = g.mul(a, b);
        if k.binary_search(&ab).is_err() {
            return Err(ConstructError::NotASubgroup { reason: format!("{a}·{b} = {ab} is not in K") });
        }
    }
    for x in g.elements() {
        let xinv = g.inverse(x).expect("group element");
        if let Some(&kk) = k.iter().find(|&&kk| k.binary_search(&g.mul(g.mul(x, kk), xinv)).is_err()) {
            return Err(ConstructError::NotNormal { g: x, k: kk });
        }
    }
    Ok(())
}

impl GroupConstructionData {
    /// Validates every hypothesis, reporting the first failure found in the
    /// order: group, subgroup, normality, coset coverage, `1 ∈ R`, then `μ`.
    pub fn new(group: FiniteSemigroup, k: &[usize], r: &[usize], mu: ElementMap) -> Result<Self, ConstructError> {
        if !group.is_group() {
            return Err(ConstructError::NotAGroup);
        }
        let k = sorted_subset(&group, k)?;
        let r = sorted_subset(&group, r)?;
        check_normal_subgroup(&group, &k)?;
        for (&a, &b) in r.iter().tuple_combinations() {
            if same_coset(&group, &k, a, b) {
                return Err(ConstructError::CosetRepeated { a, b });
            }
        }
        if let Some(x) = group.elements().find(|&x| !r.iter().any(|&rep| same_coset(&group, &k, x, rep))) {
            return Err(ConstructError::CosetMissed { x });
        }
        let one = group.identity().expect("groups have an identity");
        if r.binary_search(&one).is_err() {
            return Err(ConstructError::IdentityNotInR);
        }
        if mu.len() != group.order() {
            return Err(AlgebraError::MapShape { len: mu.len(), n: group.order() }.into());
        }
        for x in group.elements() {
            let image = mu.apply(x);
            if image >= group.order() || !same_coset(&group, &k, image, x) {
                return Err(ConstructError::MuOutsideCoset { x, image });
            }
            if r.binary_search(&image).is_err() {
                return Err(ConstructError::MuOutsideR { x, image });
            }
        }
        Ok(GroupConstructionData { group, k, r, mu })
    }

    /// Reads `K = {x | θ_1(x) = 1}`, `R = im θ_1` and `μ = θ_1` off a solution.
    pub fn from_solution(sol: &PentagonSolution) -> Result<Self, ConstructError> {
        let g = sol.semigroup();
        if !g.is_group() {
            return Err(ConstructError::NotAGroup);
        }
        let one = g.identity().expect("groups have an identity");
        let theta1 = sol.theta_map(one);
        let k: Vec<usize> = g.elements().filter(|&x| theta1.apply(x) == one).collect();
        let r = theta1.image();
        Self::new(g.clone(), &k, &r, theta1)
    }

    pub fn group(&self) -> &FiniteSemigroup {
        &self.group
    }

    pub fn normal_subgroup(&self) -> &[usize] {
        &self.k
    }

    pub fn representatives(&self) -> &[usize] {
        &self.r
    }

    pub fn mu(&self) -> &ElementMap {
        &self.mu
    }
}

/// `s(x, y) = (xy, μ(x)⁻¹ μ(xy))`.
pub fn group_solution(data: &GroupConstructionData) -> Result<PentagonSolution, ConstructError> {
    let g = &data.group;
    let theta = ThetaTable::from_fn(g.order(), |x, y| {
        let mx = data.mu.apply(x);
        g.mul(g.inverse(mx).expect("group element"), data.mu.apply(g.mul(x, y)))
    });
    Ok(PentagonSolution::new(g.clone(), theta)?)
}

/// All normal subgroups, each sorted, listed by bitmask of their elements.
pub fn normal_subgroups(g: &FiniteSemigroup) -> Result<Vec<Vec<usize>>, ConstructError> {
    if !g.is_group() {
        return Err(ConstructError::NotAGroup);
    }
    if g.order() > GROUP_ENUMERATION_CAP {
        return Err(ConstructError::OverCap { order: g.order(), cap: GROUP_ENUMERATION_CAP });
    }
    let n = g.order();
    Ok((1u32..1 << n)
        .map(|mask| (0..n).filter(|&x| mask >> x & 1 == 1).collect::<Vec<_>>())
        .filter(|k| check_normal_subgroup(g, k).is_ok())
        .collect())
}

/// Every solution the group theorem produces: all normal `K`, all
/// representative systems through `1`, with `μ` forced by `R`.
/// Sorted by θ-table.
pub fn enumerate_group_solutions(g: &FiniteSemigroup) -> Result<Vec<PentagonSolution>, ConstructError> {
    let one = g.identity().ok_or(ConstructError::NotAGroup)?;
    let mut out = Vec::new();
    for k in normal_subgroups(g)? {
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for x in g.elements() {
            if !cosets.iter().any(|c| same_coset(g, &k, c[0], x)) {
                cosets.push(g.elements().filter(|&y| same_coset(g, &k, x, y)).collect());
            }
        }
        let choices = cosets.iter().map(|c| if c.contains(&one) { vec![one] } else { c.clone() });
        for r in choices.multi_cartesian_product() {
            let mu_table: Vec<usize> = g
                .elements()
                .map(|x| *r.iter().find(|&&rep| same_coset(g, &k, x, rep)).expect("R covers every coset"))
                .collect();
            let data = GroupConstructionData::new(g.clone(), &k, &r, ElementMap::on(g, mu_table)?)?;
            out.push(group_solution(&data)?);
        }
    }
    out.sort_by(|a, b| a.theta().cmp(b.theta()));
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::named;

    fn z4_data() -> GroupConstructionData {
        let z4 = named::cyclic_group(4);
        let mu = ElementMap::on(&z4, vec![0, 1, 0, 1]).unwrap();
        GroupConstructionData::new(z4, &[0, 2], &[0, 1], mu).unwrap()
    }

    #[test]
    fn trivial_and_full_kernels() {
        let g = named::symmetric_group_3();
        let all: Vec<usize> = g.elements().collect();
        let id = GroupConstructionData::new(g.clone(), &[0], &all, ElementMap::identity(6)).unwrap();
        assert_eq!(*group_solution(&id).unwrap().theta(), ThetaTable::from_fn(6, |_, y| y));
        let full = GroupConstructionData::new(g.clone(), &all, &[0], ElementMap::constant(6, 0)).unwrap();
        assert_eq!(*group_solution(&full).unwrap().theta(), ThetaTable::constant(6, 0));
    }

    #[test]
    fn z4_round_trip() {
        let data = z4_data();
        let sol = group_solution(&data).unwrap();
        let back = GroupConstructionData::from_solution(&sol).unwrap();
        assert_eq!(back, data);
        assert_eq!(back.normal_subgroup(), &[0, 2]);
    }

    #[test]
    fn each_hypothesis_has_its_own_error() {
        let z4 = named::cyclic_group(4);
        let mu = |t: Vec<usize>| ElementMap::on(&z4, t).unwrap();
        let new = |k: &[usize], r: &[usize], m| GroupConstructionData::new(z4.clone(), k, r, m);
        assert_eq!(
            GroupConstructionData::new(named::null_semigroup(2), &[0], &[0], ElementMap::identity(2)),
            Err(ConstructError::NotAGroup)
        );
        assert!(matches!(new(&[0, 1], &[0], mu(vec![0; 4])), Err(ConstructError::NotASubgroup { .. })));
        assert!(matches!(new(&[2], &[0], mu(vec![0; 4])), Err(ConstructError::NotASubgroup { .. })));
        assert_eq!(new(&[0, 2], &[0, 1, 2], mu(vec![0; 4])), Err(ConstructError::CosetRepeated { a: 0, b: 2 }));
        assert_eq!(new(&[0, 2], &[0], mu(vec![0; 4])), Err(ConstructError::CosetMissed { x: 1 }));
        assert_eq!(new(&[0, 2], &[2, 3], mu(vec![2, 3, 2, 3])), Err(ConstructError::IdentityNotInR));
        assert_eq!(new(&[0, 2], &[0, 1], mu(vec![0, 0, 0, 1])), Err(ConstructError::MuOutsideCoset { x: 1, image: 0 }));
        assert_eq!(new(&[0, 2], &[0, 1], mu(vec![0, 3, 0, 1])), Err(ConstructError::MuOutsideR { x: 1, image: 3 }));

        let s3 = named::symmetric_group_3();
        // a subgroup of order 2 in S3 is not normal
        let order_two = s3.elements().find(|&x| x != 0 && s3.mul(x, x) == 0).unwrap();
        let err = GroupConstructionData::new(s3.clone(), &[0, order_two], &[0], ElementMap::constant(6, 0));
        assert!(matches!(err, Err(ConstructError::NotNormal { .. })));
    }

    #[test]
    fn normal_subgroup_counts() {
        assert_eq!(normal_subgroups(&named::cyclic_group(6)).unwrap().len(), 4);
        assert_eq!(normal_subgroups(&named::symmetric_group_3()).unwrap().len(), 3);
        assert_eq!(normal_subgroups(&named::quaternion_group()).unwrap().len(), 6);
        assert_eq!(normal_subgroups(&named::dihedral_group_4()).unwrap().len(), 6);
    }

    #[test]
    fn solution_counts_follow_index_formula() {
        // Σ_K |K|^([G:K] - 1)
        assert_eq!(enumerate_group_solutions(&named::cyclic_group(2)).unwrap().len(), 2);
        assert_eq!(enumerate_group_solutions(&named::cyclic_group(3)).unwrap().len(), 2);
        assert_eq!(enumerate_group_solutions(&named::cyclic_group(6)).unwrap().len(), 1 + 4 + 3 + 1);
    }
}
