//! Set-theoretical solutions `s(x, y) = (xy, θ_x(y))` of the pentagon equation
//! on a finite semigroup.
//!
//! A θ-table satisfies the pentagon equation exactly when for all `x, y, z`
//!
//! * (P1) `θ_x(y) · θ_{xy}(z) = θ_x(yz)`
//! * (P2) `θ_{θ_x(y)}(θ_{xy}(z)) = θ_y(z)`
//!
//! [`verify_solution`] checks these two conditions, [`verify_pentagon_direct`]
//! checks `s₂₃ s₁₃ s₁₂ = s₁₂ s₂₃` on `X³` by composing maps; the two must agree.

mod classify;
mod direct;
mod iso;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, ElementMap, FiniteSemigroup, MAX_ORDER};

pub use classify::{
    classify, classify_by_composition, classify_table, is_cocommutative, is_commutative, is_idempotent, is_involutive,
    is_nondegenerate, ClassificationFlags, Property,
};
pub use direct::{verify_pentagon_direct, PairMap};
pub use iso::{canonical_theta, is_solution_iso, solutions_isomorphic, transport_theta, SolutionIso};

/// Default number of violations kept in a report.
pub const VIOLATION_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PentagonError {
    #[error("θ-table has {found} rows or columns, the semigroup has {expected} elements")]
    Shape { expected: usize, found: usize },
    #[error("θ entry {value} at row {row}, column {col} is outside 0..{n}")]
    OutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("not a solution: {0}")]
    NotASolution(Verification),
    #[error("stored flags {stored} do not match recomputed flags {computed}")]
    FlagMismatch { stored: ClassificationFlags, computed: ClassificationFlags },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Dense table `θ[x][y] = θ_x(y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ThetaTable {
    n: usize,
    cells: Vec<u8>,
}

impl ThetaTable {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, PentagonError> {
        let n = rows.len();
        if n == 0 || n > MAX_ORDER {
            return Err(PentagonError::Shape { expected: n.clamp(1, MAX_ORDER), found: n });
        }
        let mut cells = Vec::with_capacity(n * n);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != n {
                return Err(PentagonError::Shape { expected: n, found: entries.len() });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(PentagonError::OutOfRange { row, col, value, n });
                }
                cells.push(value as u8);
            }
        }
        Ok(ThetaTable { n, cells })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let cells = (0..n * n).map(|i| f(i / n, i % n) as u8).collect();
        ThetaTable { n, cells }
    }

    pub(crate) fn from_cells(n: usize, cells: Vec<u8>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        ThetaTable { n, cells }
    }

    /// `θ_x = θ_e` for every `x`.
    pub fn constant(n: usize, e: usize) -> Self {
        Self::from_fn(n, |_, _| e)
    }

    /// `θ_x = γ` for every `x`.
    pub fn from_map(gamma: &ElementMap) -> Self {
        Self::from_fn(gamma.len(), |_, y| gamma.apply(y))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y] as usize
    }

    pub fn flat(&self) -> &[u8] {
        &self.cells
    }

    pub fn row(&self, x: usize) -> ElementMap {
        ElementMap::from_table_unchecked(self.cells[x * self.n..(x + 1) * self.n].iter().map(|&v| v as usize).collect())
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells.chunks(self.n).map(|r| r.iter().map(|&v| v as usize).collect()).collect()
    }

    /// Copy with one cell replaced.
    pub fn with_cell(&self, x: usize, y: usize, value: usize) -> Self {
        let mut t = self.clone();
        t.cells[x * self.n + y] = value as u8;
        t
    }

    fn check_shape(&self, s: &FiniteSemigroup) -> Result<(), PentagonError> {
        if self.n != s.order() {
            return Err(PentagonError::Shape { expected: s.order(), found: self.n });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Condition {
    P1,
    P2,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::P1 => "(P1)",
            Condition::P2 => "(P2)",
        })
    }
}

/// One failing instance of (P1) or (P2) with both sides evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: Condition,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub lhs: usize,
    pub rhs: usize,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at x={} y={} z={}: {} != {}", self.condition, self.x, self.y, self.z, self.lhs, self.rhs)
    }
}

/// Outcome of [`verify_solution`]: the first violations in triple order and the total count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub violations: Vec<Violation>,
    pub total: usize,
}

impl Verification {
    pub fn holds(&self) -> bool {
        self.total == 0
    }
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.holds() {
            return f.write_str("(P1) and (P2) hold");
        }
        write!(f, "{} violation(s)", self.total)?;
        if let Some(v) = self.violations.first() {
            write!(f, ", first {v}")?;
        }
        Ok(())
    }
}

/// Checks (P1) and (P2) on every triple, keeping at most [`VIOLATION_CAP`] witnesses.
pub fn verify_solution(s: &FiniteSemigroup, theta: &ThetaTable) -> Result<Verification, PentagonError> {
    verify_solution_capped(s, theta, VIOLATION_CAP)
}

pub fn verify_solution_capped(s: &FiniteSemigroup, theta: &ThetaTable, cap: usize) -> Result<Verification, PentagonError> {
    theta.check_shape(s)?;
    let n = s.order();
    let mut violations = Vec::new();
    let mut total = 0;
    let mut record = |v: Violation| {
        total += 1;
        if violations.len() < cap {
            violations.push(v);
        }
    };
    for x in 0..n {
        for y in 0..n {
            let xy = s.mul(x, y);
            let txy = theta.get(x, y);
            for z in 0..n {
                let t_xy_z = theta.get(xy, z);
                let lhs = s.mul(txy, t_xy_z);
                let rhs = theta.get(x, s.mul(y, z));
                if lhs != rhs {
                    record(Violation { condition: Condition::P1, x, y, z, lhs, rhs });
                }
                let lhs = theta.get(txy, t_xy_z);
                let rhs = theta.get(y, z);
                if lhs != rhs {
                    record(Violation { condition: Condition::P2, x, y, z, lhs, rhs });
                }
            }
        }
    }
    Ok(Verification { violations, total })
}

/// Quick yes/no form of [`verify_solution`] for tables of matching shape.
pub fn satisfies_pentagon(s: &FiniteSemigroup, theta: &ThetaTable) -> bool {
    let n = s.order();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let (xy, txy) = (s.mul(x, y), theta.get(x, y));
            (0..n).all(|z| {
                let t = theta.get(xy, z);
                s.mul(txy, t) == theta.get(x, s.mul(y, z)) && theta.get(txy, t) == theta.get(y, z)
            })
        })
    })
}

/// A verified solution on a semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PentagonSolution {
    semigroup: FiniteSemigroup,
    theta: ThetaTable,
}

impl PentagonSolution {
    pub fn new(semigroup: FiniteSemigroup, theta: ThetaTable) -> Result<Self, PentagonError> {
        let report = verify_solution(&semigroup, &theta)?;
        if !report.holds() {
            return Err(PentagonError::NotASolution(report));
        }
        Ok(PentagonSolution { semigroup, theta })
    }

    /// For tables produced by the search, which only emits solutions.
    pub(crate) fn new_unchecked(semigroup: FiniteSemigroup, theta: ThetaTable) -> Self {
        debug_assert!(satisfies_pentagon(&semigroup, &theta));
        PentagonSolution { semigroup, theta }
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn theta(&self) -> &ThetaTable {
        &self.theta
    }

    pub fn into_theta(self) -> ThetaTable {
        self.theta
    }

    pub fn order(&self) -> usize {
        self.semigroup.order()
    }

    /// `s(x, y)`.
    pub fn apply(&self, x: usize, y: usize) -> (usize, usize) {
        (self.semigroup.mul(x, y), self.theta.get(x, y))
    }

    /// The map `θ_x`.
    pub fn theta_map(&self, x: usize) -> ElementMap {
        self.theta.row(x)
    }
}
