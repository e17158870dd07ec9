//! Exact rational arithmetic and an exact linear-program solver.
//!
//! Every weight, threshold and optimum in this crate is a [`Rational`];
//! [`solve_lp`] is a two-phase primal simplex over exact rationals with
//! Bland's anti-cycling rule, so results are exact and deterministic.

mod lp;
mod rational;

pub use lp::{
    check_feasible, solve_lp, LinearConstraint, LinearProgram, LpOutcome, Relation, VarSign,
};
pub use rational::{NumericsError, Rational};
