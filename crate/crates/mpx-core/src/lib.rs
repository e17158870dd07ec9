//! Exact analysis of mean-payoff automaton expressions.
//!
//! An expression combines deterministic weighted automata, read as
//! `LimInfAvg`/`LimSupAvg` quantitative languages, with `min`, `max`, `sum`
//! and numerical complement. This crate computes exact maximum values and
//! decides the classical quantitative problems (emptiness, universality,
//! inclusion, equivalence, distance) by reducing them to rational linear
//! programs over circulations of a product automaton.
//!
//! Everything is exact: weights, thresholds and optima are arbitrary
//! precision rationals and no floating point is used anywhere.
//!
//! The main entry points are:
//! - [`workspace::Workspace`] to load automata and parse expressions,
//! - [`engine`] for maximum values, decision procedures, lasso evaluation
//!   and witness schedules,
//! - [`oracles`] for independent brute-force cross-checks and fixture
//!   generators used by the test suites.

pub mod automata;
pub mod constraints;
pub mod engine;
pub mod error;
pub mod expressions;
pub mod numerics;
pub mod oracles;
pub mod workspace;

pub use engine::{EngineOptions, Verdict};
pub use error::Error;
pub use expressions::Expression;
pub use numerics::Rational;
pub use workspace::Workspace;
