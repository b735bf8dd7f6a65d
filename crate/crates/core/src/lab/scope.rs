use std::fmt;

use crate::algebra::{isomorphisms, named, FiniteSemigroup};

/// Which semigroups a case talks about. Checked before every evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    Semigroup,
    Monoid,
    CentralIdempotentSemigroup,
    CentralIdempotentMonoid,
    Group,
    CancellativeMonoid,
    /// `x·y = f(x)` for some map `f`: every row of the table is constant.
    RowConstant,
    /// Satisfies `abc = bc`.
    VarietyS,
    Clifford,
    /// Isomorphic to one specific named semigroup.
    IsoTo(NamedInstance),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedInstance {
    /// `{1, a, b}` with `a² = a`, `ab = a`, `b² = 1`.
    UnitB,
    /// `{1, a, b}` with `a² = a`, `ab = a`, `b² = a`.
    BSquaredA,
    /// `{1, a, b}` idempotent with `ab = b`.
    Chain,
    /// Null semigroup on three elements.
    Null3,
}

impl NamedInstance {
    pub fn semigroup(self) -> FiniteSemigroup {
        match self {
            NamedInstance::UnitB => named::monoid_with_unit_b(),
            NamedInstance::BSquaredA => named::monoid_b_squared_a(),
            NamedInstance::Chain => named::chain_monoid(),
            NamedInstance::Null3 => named::null_semigroup(3),
        }
    }

    fn name(self) -> &'static str {
        match self {
            NamedInstance::UnitB => "monoid-b-squared-1",
            NamedInstance::BSquaredA => "monoid-b-squared-a",
            NamedInstance::Chain => "chain-monoid",
            NamedInstance::Null3 => "null-3",
        }
    }
}

impl Scope {
    pub fn admits(&self, s: &FiniteSemigroup) -> Result<(), String> {
        let ok = |cond: bool, reason: &str| if cond { Ok(()) } else { Err(reason.to_string()) };
        match *self {
            Scope::Semigroup => Ok(()),
            Scope::Monoid => ok(s.identity().is_some(), "not a monoid"),
            Scope::CentralIdempotentSemigroup => ok(s.has_central_idempotents(), "idempotents are not central"),
            Scope::CentralIdempotentMonoid => {
                Scope::Monoid.admits(s)?;
                ok(s.has_central_idempotents(), "idempotents are not central")
            }
            Scope::Group => ok(s.is_group(), "not a group"),
            Scope::CancellativeMonoid => {
                Scope::Monoid.admits(s)?;
                ok(s.is_cancellative(), "not cancellative")
            }
            Scope::RowConstant => ok(s.elements().all(|x| s.elements().all(|y| s.mul(x, y) == s.mul(x, 0))), "rows are not constant"),
            Scope::VarietyS => ok(s.in_variety_s(), "not in the variety abc = bc"),
            Scope::Clifford => ok(s.is_clifford(), "not a Clifford semigroup"),
            Scope::IsoTo(which) => ok(!isomorphisms(s, &which.semigroup()).is_empty(), "not the named instance"),
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Semigroup => f.write_str("semigroup"),
            Scope::Monoid => f.write_str("monoid"),
            Scope::CentralIdempotentSemigroup => f.write_str("central-idempotent-semigroup"),
            Scope::CentralIdempotentMonoid => f.write_str("central-idempotent-monoid"),
            Scope::Group => f.write_str("group"),
            Scope::CancellativeMonoid => f.write_str("cancellative-monoid"),
            Scope::RowConstant => f.write_str("row-constant"),
            Scope::VarietyS => f.write_str("variety-abc=bc"),
            Scope::Clifford => f.write_str("clifford"),
            Scope::IsoTo(which) => write!(f, "iso:{}", which.name()),
        }
    }
}
