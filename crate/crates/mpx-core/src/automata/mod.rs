//! Deterministic weighted automata and the graph layer built on top of
//! them: multi-dimensional products, strongly connected components, simple
//! cycle enumeration and maximum mean cycles.

mod cycles;
mod mean_cycle;
mod product;
mod scc;

pub use cycles::{enumerate_simple_cycles, SimpleCycle};
pub use mean_cycle::max_mean_cycle;
pub use product::{build_product, ProductAutomaton, ProductEdge};
pub use scc::{reachable_sccs, SccComponent, SccPartition};

use std::collections::HashMap;
use std::str::FromStr;

use thiserror::Error;

use crate::numerics::Rational;

#[derive(Debug, Error)]
pub enum AutomataError {
    #[error("alphabet-mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("cycle-cap-exceeded({cap})")]
    CycleCapExceeded { cap: usize },
    #[error("{origin}:{line}: {message}")]
    Parse {
        origin: String,
        line: usize,
        message: String,
    },
    #[error("automaton `{name}`: {message}")]
    Invalid { name: String, message: String },
}

/// Marks how an automaton occurrence is read: as the lim-inf or the lim-sup
/// of its running average weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AtomKind {
    Inf,
    Sup,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub target: usize,
    pub weight: Rational,
}

/// Deterministic, total, rational-weighted finite automaton. For every
/// state and symbol exactly one transition exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedAutomaton {
    pub name: String,
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: usize,
    trans: Vec<Vec<Transition>>, // [state][symbol]
}

impl WeightedAutomaton {
    pub fn new(
        name: impl Into<String>,
        alphabet: &[&str],
        states: &[&str],
        initial: &str,
        transitions: &[(&str, &str, &str, Rational)],
    ) -> Result<WeightedAutomaton, AutomataError> {
        let name = name.into();
        let invalid = |message: String| AutomataError::Invalid { name: name.clone(), message };
        if alphabet.is_empty() {
            return Err(invalid("empty alphabet".into()));
        }
        if states.is_empty() {
            return Err(invalid("no states".into()));
        }
        let sym_index: HashMap<&str, usize> =
            alphabet.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let state_index: HashMap<&str, usize> =
            states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        if sym_index.len() != alphabet.len() {
            return Err(invalid("duplicate alphabet symbol".into()));
        }
        if state_index.len() != states.len() {
            return Err(invalid("duplicate state name".into()));
        }
        let initial = *state_index
            .get(initial)
            .ok_or_else(|| invalid(format!("unknown initial state `{initial}`")))?;
        let mut trans: Vec<Vec<Option<Transition>>> =
            vec![vec![None; alphabet.len()]; states.len()];
        for (src, sym, dst, weight) in transitions {
            let q = *state_index
                .get(src)
                .ok_or_else(|| invalid(format!("unknown state `{src}`")))?;
            let s = *sym_index
                .get(sym)
                .ok_or_else(|| invalid(format!("unknown symbol `{sym}`")))?;
            let t = *state_index
                .get(dst)
                .ok_or_else(|| invalid(format!("unknown state `{dst}`")))?;
            if trans[q][s].is_some() {
                return Err(invalid(format!("duplicate transition for ({src}, {sym})")));
            }
            trans[q][s] = Some(Transition { target: t, weight: weight.clone() });
        }
        let mut table = Vec::with_capacity(states.len());
        for (q, row) in trans.into_iter().enumerate() {
            let mut out = Vec::with_capacity(alphabet.len());
            for (s, cell) in row.into_iter().enumerate() {
                out.push(cell.ok_or_else(|| {
                    invalid(format!("missing transition for ({}, {})", states[q], alphabet[s]))
                })?);
            }
            table.push(out);
        }
        Ok(WeightedAutomaton {
            name,
            alphabet: alphabet.iter().map(|s| s.to_string()).collect(),
            states: states.iter().map(|s| s.to_string()).collect(),
            initial,
            trans: table,
        })
    }

    pub fn step(&self, state: usize, symbol: usize) -> &Transition {
        &self.trans[state][symbol]
    }

    pub fn symbol_index(&self, symbol: &str) -> Option<usize> {
        self.alphabet.iter().position(|s| s == symbol)
    }

    /// Derived automaton with every weight negated. Negating strips a
    /// trailing `!neg` from the name, so double negation restores the
    /// original automaton exactly.
    pub fn negated(&self) -> WeightedAutomaton {
        let name = match self.name.strip_suffix("!neg") {
            Some(base) => base.to_string(),
            None => format!("{}!neg", self.name),
        };
        WeightedAutomaton {
            name,
            alphabet: self.alphabet.clone(),
            states: self.states.clone(),
            initial: self.initial,
            trans: self
                .trans
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|t| Transition { target: t.target, weight: -&t.weight })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Parses the line-oriented automaton format:
///
/// ```text
/// automaton NAME
/// alphabet s1 s2 ...
/// states q0 q1 ...
/// initial q0
/// trans SRC SYMBOL DST WEIGHT
/// ```
///
/// `#` starts a comment; weights are `p/q` or integers; every
/// (state, symbol) pair must appear exactly once.
pub fn parse_automaton(text: &str, origin: &str) -> Result<WeightedAutomaton, AutomataError> {
    let err = |line: usize, message: String| AutomataError::Parse {
        origin: origin.to_string(),
        line,
        message,
    };
    let mut name: Option<String> = None;
    let mut alphabet: Vec<String> = Vec::new();
    let mut states: Vec<String> = Vec::new();
    let mut initial: Option<String> = None;
    let mut transitions: Vec<(String, String, String, Rational)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let directive = words.next().unwrap();
        let rest: Vec<&str> = words.collect();
        match directive {
            "automaton" => match rest.as_slice() {
                [n] => {
                    if name.is_some() {
                        return Err(err(lineno, "duplicate `automaton` directive".into()));
                    }
                    name = Some(n.to_string());
                }
                _ => return Err(err(lineno, "expected `automaton NAME`".into())),
            },
            "alphabet" => {
                if rest.is_empty() {
                    return Err(err(lineno, "empty alphabet".into()));
                }
                alphabet = rest.iter().map(|s| s.to_string()).collect();
            }
            "states" => {
                if rest.is_empty() {
                    return Err(err(lineno, "empty state list".into()));
                }
                states = rest.iter().map(|s| s.to_string()).collect();
            }
            "initial" => match rest.as_slice() {
                [q] => initial = Some(q.to_string()),
                _ => return Err(err(lineno, "expected `initial STATE`".into())),
            },
            "trans" => match rest.as_slice() {
                [src, sym, dst, w] => {
                    let weight = Rational::from_str(w)
                        .map_err(|e| err(lineno, format!("bad weight `{w}`: {e}")))?;
                    transitions.push((src.to_string(), sym.to_string(), dst.to_string(), weight));
                }
                _ => return Err(err(lineno, "expected `trans SRC SYMBOL DST WEIGHT`".into())),
            },
            other => return Err(err(lineno, format!("unknown directive `{other}`"))),
        }
    }
    let name = name.ok_or_else(|| err(0, "missing `automaton` directive".into()))?;
    let initial = initial.ok_or_else(|| err(0, "missing `initial` directive".into()))?;
    let alphabet_refs: Vec<&str> = alphabet.iter().map(|s| s.as_str()).collect();
    let state_refs: Vec<&str> = states.iter().map(|s| s.as_str()).collect();
    let trans_refs: Vec<(&str, &str, &str, Rational)> = transitions
        .iter()
        .map(|(a, b, c, w)| (a.as_str(), b.as_str(), c.as_str(), w.clone()))
        .collect();
    WeightedAutomaton::new(name, &alphabet_refs, &state_refs, &initial, &trans_refs)
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::*;

    pub fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    /// Single state, `a` weighs 1 and `b` weighs 0.
    pub fn a1() -> WeightedAutomaton {
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
        .unwrap()
    }

    /// Single state, `a` weighs 0 and `b` weighs 1.
    pub fn a2() -> WeightedAutomaton {
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
        .unwrap()
    }

    /// Two states swapped by `a`; `b` loops with weights 1 at `s`, -1 at `t`.
    pub fn a3() -> WeightedAutomaton {
        WeightedAutomaton::new(
            "A3",
            &["a", "b"],
            &["s", "t"],
            "s",
            &[
                ("s", "a", "t", Rational::zero()),
                ("t", "a", "s", Rational::integer(2)),
                ("s", "b", "s", Rational::one()),
                ("t", "b", "t", Rational::integer(-1)),
            ],
        )
        .unwrap()
    }
}
