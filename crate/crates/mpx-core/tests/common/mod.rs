#![allow(dead_code)] // each test binary uses a different subset

use std::sync::Arc;

use mpx_core::automata::WeightedAutomaton;
use mpx_core::engine::LassoWord;
use mpx_core::expressions::Expression;
use mpx_core::Rational;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

pub fn a1() -> Arc<WeightedAutomaton> {
    Arc::new(
        WeightedAutomaton::new(
            "A1",
            &["a", "b"],
            &["q"],
            "q",
            &[
                ("q", "a", "q", Rational::one()),
                ("q", "b", "q", Rational::zero()),
            ],
        )
        .unwrap(),
    )
}

pub fn a2() -> Arc<WeightedAutomaton> {
    Arc::new(
        WeightedAutomaton::new(
            "A2",
            &["a", "b"],
            &["q"],
            "q",
            &[
                ("q", "a", "q", Rational::zero()),
                ("q", "b", "q", Rational::one()),
            ],
        )
        .unwrap(),
    )
}

pub fn inf(a: &Arc<WeightedAutomaton>) -> Expression {
    Expression::AtomInf(a.clone())
}

pub fn sup(a: &Arc<WeightedAutomaton>) -> Expression {
    Expression::AtomSup(a.clone())
}

/// Random ultimately periodic word over a two-symbol alphabet.
pub fn random_lasso(rng: &mut ChaCha8Rng) -> LassoWord {
    let prefix: Vec<usize> = (0..rng.random_range(0..=3))
        .map(|_| rng.random_range(0..2))
        .collect();
    let cycle: Vec<usize> = (0..rng.random_range(1..=3))
        .map(|_| rng.random_range(0..2))
        .collect();
    LassoWord::new(prefix, cycle).unwrap()
}
