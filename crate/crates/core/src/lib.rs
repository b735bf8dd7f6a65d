//! Finite semigroups and set-theoretical solutions of the pentagon equation.

pub mod algebra;
pub mod construct;
pub mod format;
pub mod lab;
pub mod pentagon;
pub mod search;
