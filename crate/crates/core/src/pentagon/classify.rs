use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::FiniteSemigroup;

use super::{verify_solution, PairMap, PentagonError, PentagonSolution, ThetaTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Idempotent,
    Involutive,
    Nondegenerate,
    Commutative,
    Cocommutative,
}

impl Property {
    pub const ALL: [Property; 5] =
        [Property::Idempotent, Property::Involutive, Property::Nondegenerate, Property::Commutative, Property::Cocommutative];

    pub fn name(self) -> &'static str {
        match self {
            Property::Idempotent => "idempotent",
            Property::Involutive => "involutive",
            Property::Nondegenerate => "nondegenerate",
            Property::Commutative => "commutative",
            Property::Cocommutative => "cocommutative",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s || (s == "non-degenerate" && *p == Property::Nondegenerate))
            .ok_or_else(|| format!("unknown property `{s}`"))
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ClassificationFlags {
    pub idempotent: bool,
    pub involutive: bool,
    pub nondegenerate: bool,
    pub commutative: bool,
    pub cocommutative: bool,
}

impl ClassificationFlags {
    pub fn has(&self, p: Property) -> bool {
        match p {
            Property::Idempotent => self.idempotent,
            Property::Involutive => self.involutive,
            Property::Nondegenerate => self.nondegenerate,
            Property::Commutative => self.commutative,
            Property::Cocommutative => self.cocommutative,
        }
    }

    pub fn set(&mut self, p: Property, value: bool) {
        *match p {
            Property::Idempotent => &mut self.idempotent,
            Property::Involutive => &mut self.involutive,
            Property::Nondegenerate => &mut self.nondegenerate,
            Property::Commutative => &mut self.commutative,
            Property::Cocommutative => &mut self.cocommutative,
        } = value;
    }

    pub fn satisfies_all(&self, required: &[Property]) -> bool {
        required.iter().all(|&p| self.has(p))
    }
}

impl fmt::Display for ClassificationFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in Property::ALL.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}={}", p, if self.has(p) { "yes" } else { "no" })?;
        }
        Ok(())
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

/// (I1) `xy·θ_x(y) = xy` and (I2) `θ_{xy}(θ_x(y)) = θ_x(y)`.
pub fn is_idempotent(s: &FiniteSemigroup, theta: &ThetaTable) -> bool {
    pairs(s.order()).all(|(x, y)| {
        let (xy, t) = (s.mul(x, y), theta.get(x, y));
        s.mul(xy, t) == xy && theta.get(xy, t) == t
    })
}

/// `s² = id`: `xy·θ_x(y) = x` and `θ_{xy}(θ_x(y)) = y`.
pub fn is_involutive(s: &FiniteSemigroup, theta: &ThetaTable) -> bool {
    pairs(s.order()).all(|(x, y)| {
        let (xy, t) = (s.mul(x, y), theta.get(x, y));
        s.mul(xy, t) == x && theta.get(xy, t) == y
    })
}

/// Every `θ_x` is a bijection.
pub fn is_nondegenerate(theta: &ThetaTable) -> bool {
    (0..theta.order()).all(|x| theta.row(x).is_bijective())
}

/// (C1) `xzy = xyz` and (C2) `θ_x = θ_{xy}`.
pub fn is_commutative(s: &FiniteSemigroup, theta: &ThetaTable) -> bool {
    let n = s.order();
    let c1 = (0..n).all(|x| pairs(n).all(|(y, z)| s.mul(s.mul(x, z), y) == s.mul(s.mul(x, y), z)));
    c1 && pairs(n).all(|(x, y)| (0..n).all(|z| theta.get(x, z) == theta.get(s.mul(x, y), z)))
}

/// (CC1) `x·θ_y(z) = xz` and (CC2) `θ_x θ_y = θ_y θ_x`.
pub fn is_cocommutative(s: &FiniteSemigroup, theta: &ThetaTable) -> bool {
    let n = s.order();
    let cc1 = (0..n).all(|x| pairs(n).all(|(y, z)| s.mul(x, theta.get(y, z)) == s.mul(x, z)));
    cc1 && pairs(n).all(|(x, y)| (0..n).all(|z| theta.get(x, theta.get(y, z)) == theta.get(y, theta.get(x, z))))
}

fn elementwise(s: &FiniteSemigroup, theta: &ThetaTable) -> ClassificationFlags {
    ClassificationFlags {
        idempotent: is_idempotent(s, theta),
        involutive: is_involutive(s, theta),
        nondegenerate: is_nondegenerate(theta),
        commutative: is_commutative(s, theta),
        cocommutative: is_cocommutative(s, theta),
    }
}

/// Flags from the elementwise conditions. Debug builds also compare against
/// [`classify_by_composition`].
pub fn classify(sol: &PentagonSolution) -> ClassificationFlags {
    let flags = elementwise(sol.semigroup(), sol.theta());
    debug_assert_eq!(flags, classify_by_composition(sol));
    flags
}

/// Flags read off compositions of maps on `X × X` and `X³`: `s² = s`, `s² = id`,
/// `s₁₂s₁₃ = s₁₃s₁₂` and `s₁₃s₂₃ = s₂₃s₁₃`.
pub fn classify_by_composition(sol: &PentagonSolution) -> ClassificationFlags {
    let s = PairMap::from_table(sol.semigroup(), sol.theta());
    let square = s.compose(&s);
    ClassificationFlags {
        idempotent: square == s,
        involutive: square == PairMap::identity(sol.order()),
        nondegenerate: is_nondegenerate(sol.theta()),
        commutative: s.legs_12_13_commute(),
        cocommutative: s.legs_13_23_commute(),
    }
}

/// Classifies a raw table, rejecting anything that is not a solution.
pub fn classify_table(s: &FiniteSemigroup, theta: &ThetaTable) -> Result<ClassificationFlags, PentagonError> {
    let report = verify_solution(s, theta)?;
    if !report.holds() {
        return Err(PentagonError::NotASolution(report));
    }
    Ok(elementwise(s, theta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::named;

    fn sol(s: FiniteSemigroup, theta: ThetaTable) -> PentagonSolution {
        PentagonSolution::new(s, theta).unwrap()
    }

    #[test]
    fn constant_identity_on_z2() {
        let flags = classify(&sol(named::cyclic_group(2), ThetaTable::constant(2, 0)));
        assert_eq!(
            flags,
            ClassificationFlags {
                idempotent: true,
                involutive: false,
                nondegenerate: false,
                commutative: true,
                cocommutative: false
            }
        );
    }

    #[test]
    fn null_semigroup_swap() {
        let theta = ThetaTable::new(vec![vec![0, 1, 2], vec![0, 2, 1], vec![0, 2, 1]]).unwrap();
        let flags = classify(&sol(named::null_semigroup(3), theta));
        assert!(flags.idempotent && flags.nondegenerate);
    }

    #[test]
    fn identity_theta_is_cocommutative_on_monoids() {
        let m = named::monoid_with_unit_b();
        let flags = classify(&sol(m, ThetaTable::from_fn(3, |_, y| y)));
        assert!(flags.cocommutative);
        assert!(flags.nondegenerate);
    }

    #[test]
    fn non_solutions_are_rejected() {
        let z2 = named::cyclic_group(2);
        assert!(matches!(
            classify_table(&z2, &ThetaTable::from_fn(2, |x, y| (x + y) % 2)),
            Err(PentagonError::NotASolution(_))
        ));
    }

    #[test]
    fn property_names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
        assert_eq!("non-degenerate".parse::<Property>().unwrap(), Property::Nondegenerate);
        assert!("bogus".parse::<Property>().is_err());
    }
}
