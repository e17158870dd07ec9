use thiserror::Error;

use crate::automata::WeightedAutomaton;
use crate::expressions::{Expression, ExpressionError};
use crate::numerics::Rational;

#[derive(Debug, Error)]
pub enum LassoError {
    #[error("lasso cycle part must be nonempty")]
    EmptyCycle,
    #[error("symbol `{0}` is not in the alphabet")]
    UnknownSymbol(String),
}

/// Ultimately periodic word `u . v^omega`, stored as symbol indices into a
/// fixed alphabet. The cycle part `v` is nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoWord {
    pub prefix: Vec<usize>,
    pub cycle: Vec<usize>,
}

impl LassoWord {
    pub fn new(prefix: Vec<usize>, cycle: Vec<usize>) -> Result<LassoWord, LassoError> {
        if cycle.is_empty() {
            return Err(LassoError::EmptyCycle);
        }
        Ok(LassoWord { prefix, cycle })
    }

    /// Parses whitespace-separated symbol lists for the finite prefix and
    /// the repeated part.
    pub fn parse(prefix: &str, cycle: &str, alphabet: &[String]) -> Result<LassoWord, LassoError> {
        let lookup = |word: &str| -> Result<Vec<usize>, LassoError> {
            word.split_whitespace()
                .map(|s| {
                    alphabet
                        .iter()
                        .position(|a| a == s)
                        .ok_or_else(|| LassoError::UnknownSymbol(s.to_string()))
                })
                .collect()
        };
        LassoWord::new(lookup(prefix)?, lookup(cycle)?)
    }
}

/// Exact value of an expression on an ultimately periodic word. The run of
/// a deterministic automaton on `u . v^omega` is itself ultimately
/// periodic, so lim-inf and lim-sup averages coincide and equal the average
/// weight of the run's cycle; operators combine the atom values pointwise.
pub fn evaluate_lasso(e: &Expression, word: &LassoWord) -> Result<Rational, ExpressionError> {
    let value = match e {
        Expression::AtomInf(a) | Expression::AtomSup(a) => atom_value(a, word),
        Expression::Min(x, y) => evaluate_lasso(x, word)?.min(evaluate_lasso(y, word)?),
        Expression::Max(x, y) => evaluate_lasso(x, word)?.max(evaluate_lasso(y, word)?),
        Expression::Sum(x, y) => evaluate_lasso(x, word)? + evaluate_lasso(y, word)?,
    };
    Ok(value)
}

fn atom_value(a: &WeightedAutomaton, word: &LassoWord) -> Rational {
    let mut state = a.initial;
    for &symbol in &word.prefix {
        state = a.step(state, symbol).target;
    }
    // Iterate v and record the state at each v-boundary; the first repeat
    // closes a cycle whose length is a multiple of |v|.
    let mut seen: Vec<usize> = vec![state];
    let mut weights: Vec<Rational> = Vec::new();
    loop {
        let mut sum = Rational::zero();
        for &symbol in &word.cycle {
            let t = a.step(state, symbol);
            sum += &t.weight;
            state = t.target;
        }
        weights.push(sum);
        if let Some(first) = seen.iter().position(|&s| s == state) {
            let total: Rational = weights[first..].iter().cloned().sum();
            let length = (weights.len() - first) * word.cycle.len();
            return total / Rational::integer(length as i64);
        }
        seen.push(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::testutil::*;
    use std::sync::Arc;

    fn inf(a: &WeightedAutomaton) -> Expression {
        Expression::AtomInf(Arc::new(a.clone()))
    }

    fn sup(a: &WeightedAutomaton) -> Expression {
        Expression::AtomSup(Arc::new(a.clone()))
    }

    fn lasso(prefix: &str, cycle: &str) -> LassoWord {
        let alphabet = vec!["a".to_string(), "b".to_string()];
        LassoWord::parse(prefix, cycle, &alphabet).unwrap()
    }

    #[test]
    fn alternating_word() {
        let a1 = a1();
        let w = lasso("", "a b");
        assert_eq!(evaluate_lasso(&inf(&a1), &w).unwrap(), r(1, 2));
    }

    #[test]
    fn eventually_constant_word() {
        let a1 = a1();
        let w = lasso("b", "a");
        assert_eq!(evaluate_lasso(&sup(&a1), &w).unwrap(), Rational::one());
    }

    #[test]
    fn min_combines_atom_values() {
        let a1 = a1();
        let a2 = a2();
        let e = Expression::min(inf(&a1), inf(&a2));
        assert_eq!(evaluate_lasso(&e, &lasso("", "a b")).unwrap(), r(1, 2));
    }

    #[test]
    fn run_cycle_longer_than_v() {
        // On A3 the word a^omega alternates s and t, so the run cycle spans
        // two iterations of v = "a".
        let a3 = a3();
        assert_eq!(evaluate_lasso(&inf(&a3), &lasso("", "a")).unwrap(), Rational::one());
        assert_eq!(evaluate_lasso(&inf(&a3), &lasso("", "b")).unwrap(), Rational::one());
        assert_eq!(evaluate_lasso(&inf(&a3), &lasso("a", "b")).unwrap(), Rational::integer(-1));
    }

    #[test]
    fn parse_rejects_bad_input() {
        let alphabet = vec!["a".to_string(), "b".to_string()];
        assert!(matches!(
            LassoWord::parse("a", "", &alphabet),
            Err(LassoError::EmptyCycle)
        ));
        assert!(matches!(
            LassoWord::parse("a", "c", &alphabet),
            Err(LassoError::UnknownSymbol(s)) if s == "c"
        ));
    }
}
