use std::collections::{HashMap, HashSet, VecDeque};

use crate::automata::{AutomataError, WeightedAutomaton};
use crate::numerics::Rational;

/// Total deterministic acceptor of a language of finite words.
#[derive(Debug, Clone)]
pub struct Dfa {
    pub name: String,
    pub alphabet: Vec<String>,
    pub states: Vec<String>,
    pub initial: usize,
    pub accepting: Vec<bool>,
    trans: Vec<Vec<usize>>, // [state][symbol]
}

impl Dfa {
    pub fn new(
        name: impl Into<String>,
        alphabet: &[&str],
        states: &[&str],
        initial: &str,
        accepting: &[&str],
        transitions: &[(&str, &str, &str)],
    ) -> Result<Dfa, AutomataError> {
        let name = name.into();
        let invalid = |message: String| AutomataError::Invalid { name: name.clone(), message };
        let state_index: HashMap<&str, usize> =
            states.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let sym_index: HashMap<&str, usize> =
            alphabet.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let initial = *state_index
            .get(initial)
            .ok_or_else(|| invalid(format!("unknown initial state `{initial}`")))?;
        let mut acc = vec![false; states.len()];
        for q in accepting {
            let i = *state_index
                .get(q)
                .ok_or_else(|| invalid(format!("unknown accepting state `{q}`")))?;
            acc[i] = true;
        }
        let mut trans = vec![vec![usize::MAX; alphabet.len()]; states.len()];
        for (src, sym, dst) in transitions {
            let q = *state_index
                .get(src)
                .ok_or_else(|| invalid(format!("unknown state `{src}`")))?;
            let s = *sym_index
                .get(sym)
                .ok_or_else(|| invalid(format!("unknown symbol `{sym}`")))?;
            let t = *state_index
                .get(dst)
                .ok_or_else(|| invalid(format!("unknown state `{dst}`")))?;
            if trans[q][s] != usize::MAX {
                return Err(invalid(format!("duplicate transition for ({src}, {sym})")));
            }
            trans[q][s] = t;
        }
        for (q, row) in trans.iter().enumerate() {
            for (s, &t) in row.iter().enumerate() {
                if t == usize::MAX {
                    return Err(invalid(format!(
                        "missing transition for ({}, {})",
                        states[q], alphabet[s]
                    )));
                }
            }
        }
        Ok(Dfa {
            name,
            alphabet: alphabet.iter().map(|s| s.to_string()).collect(),
            states: states.iter().map(|s| s.to_string()).collect(),
            initial,
            accepting: acc,
            trans,
        })
    }

    pub fn step(&self, state: usize, symbol: usize) -> usize {
        self.trans[state][symbol]
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        let mut q = self.initial;
        for &s in word {
            q = self.trans[q][s];
        }
        self.accepting[q]
    }
}

/// Parses the DFA text format, which mirrors the automaton format with an
/// `accepting` directive instead of weights:
///
/// ```text
/// dfa NAME
/// alphabet s1 s2 ...
/// states q0 q1 ...
/// initial q0
/// accepting q1 q2 ...
/// trans SRC SYMBOL DST
/// ```
pub fn parse_dfa(text: &str, origin: &str) -> Result<Dfa, AutomataError> {
    let err = |line: usize, message: String| AutomataError::Parse {
        origin: origin.to_string(),
        line,
        message,
    };
    let mut name = None;
    let mut alphabet: Vec<String> = Vec::new();
    let mut states: Vec<String> = Vec::new();
    let mut initial = None;
    let mut accepting: Vec<String> = Vec::new();
    let mut transitions: Vec<(String, String, String)> = Vec::new();
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
            "dfa" => match rest.as_slice() {
                [n] => name = Some(n.to_string()),
                _ => return Err(err(lineno, "expected `dfa NAME`".into())),
            },
            "alphabet" => alphabet = rest.iter().map(|s| s.to_string()).collect(),
            "states" => states = rest.iter().map(|s| s.to_string()).collect(),
            "initial" => match rest.as_slice() {
                [q] => initial = Some(q.to_string()),
                _ => return Err(err(lineno, "expected `initial STATE`".into())),
            },
            "accepting" => accepting = rest.iter().map(|s| s.to_string()).collect(),
            "trans" => match rest.as_slice() {
                [src, sym, dst] => {
                    transitions.push((src.to_string(), sym.to_string(), dst.to_string()))
                }
                _ => return Err(err(lineno, "expected `trans SRC SYMBOL DST`".into())),
            },
            other => return Err(err(lineno, format!("unknown directive `{other}`"))),
        }
    }
    let name = name.ok_or_else(|| err(0, "missing `dfa` directive".into()))?;
    let initial = initial.ok_or_else(|| err(0, "missing `initial` directive".into()))?;
    Dfa::new(
        name,
        &alphabet.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        &states.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        &initial,
        &accepting.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        &transitions
            .iter()
            .map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str()))
            .collect::<Vec<_>>(),
    )
}

fn fresh_name(base: &str, taken: &HashSet<&str>) -> String {
    let mut name = base.to_string();
    while taken.contains(name.as_str()) {
        name.push('_');
    }
    name
}

/// Weighted automaton whose lim-inf average is +1 exactly on the words
/// `u . xi . anything` with `u` accepted by `d`, and -1 otherwise: it
/// tracks `d` until the first `xi` with weight -1 everywhere, then jumps to
/// a +1 or -1 sink depending on acceptance. The jump from an accepting
/// state is the single pre-`xi` transition weighing +1. Linear in the size
/// of `d`.
pub fn gadget_f(d: &Dfa, xi: &str) -> Result<WeightedAutomaton, AutomataError> {
    if d.alphabet.iter().any(|s| s == xi) {
        return Err(AutomataError::Invalid {
            name: d.name.clone(),
            message: format!("symbol `{xi}` already occurs in the alphabet"),
        });
    }
    let taken: HashSet<&str> = d.states.iter().map(|s| s.as_str()).collect();
    let plus = fresh_name("sink_pos", &taken);
    let minus = fresh_name("sink_neg", &taken);

    let mut alphabet: Vec<&str> = d.alphabet.iter().map(|s| s.as_str()).collect();
    alphabet.push(xi);
    let mut states: Vec<&str> = d.states.iter().map(|s| s.as_str()).collect();
    states.push(&plus);
    states.push(&minus);

    let neg = Rational::integer(-1);
    let pos = Rational::one();
    let mut transitions: Vec<(&str, &str, &str, Rational)> = Vec::new();
    for (q, qname) in d.states.iter().enumerate() {
        for (s, sym) in d.alphabet.iter().enumerate() {
            transitions.push((qname, sym, &d.states[d.step(q, s)], neg.clone()));
        }
        if d.accepting[q] {
            transitions.push((qname, xi, &plus, pos.clone()));
        } else {
            transitions.push((qname, xi, &minus, neg.clone()));
        }
    }
    for sym in &alphabet.clone() {
        transitions.push((&plus, sym, &plus, pos.clone()));
        transitions.push((&minus, sym, &minus, neg.clone()));
    }
    WeightedAutomaton::new(
        format!("f_{}", d.name),
        &alphabet,
        &states,
        &d.states[d.initial],
        &transitions,
    )
}

/// Weighted automaton whose lim-inf average is +1 on words that never use
/// `xi` and -1 on the rest: a +1 loop over the base alphabet, and any `xi`
/// falls into a -1 sink.
pub fn gadget_g(alphabet: &[String], xi: &str) -> Result<WeightedAutomaton, AutomataError> {
    if alphabet.iter().any(|s| s == xi) {
        return Err(AutomataError::Invalid {
            name: "g".into(),
            message: format!("symbol `{xi}` already occurs in the alphabet"),
        });
    }
    let mut full: Vec<&str> = alphabet.iter().map(|s| s.as_str()).collect();
    full.push(xi);
    let neg = Rational::integer(-1);
    let mut transitions: Vec<(&str, &str, &str, Rational)> = Vec::new();
    for sym in alphabet {
        transitions.push(("top", sym, "top", Rational::one()));
    }
    transitions.push(("top", xi, "sink", neg.clone()));
    for sym in &full.clone() {
        transitions.push(("sink", sym, "sink", neg.clone()));
    }
    WeightedAutomaton::new("g", &full, &["top", "sink"], "top", &transitions)
}

/// Textbook product-DFA reachability: is the intersection of the given
/// finite-word languages nonempty? The empty word counts when every
/// initial state accepts.
pub fn dfa_intersection_nonempty(dfas: &[&Dfa]) -> bool {
    product_search(dfas, |tuple_accepting| tuple_accepting.iter().all(|&a| a))
}

/// Is the union of the given finite-word languages universal? Holds iff no
/// reachable product state rejects in every component.
pub fn dfa_union_universal(dfas: &[&Dfa]) -> bool {
    !product_search(dfas, |tuple_accepting| tuple_accepting.iter().all(|&a| !a))
}

fn product_search(dfas: &[&Dfa], goal: impl Fn(&[bool]) -> bool) -> bool {
    let start: Vec<usize> = dfas.iter().map(|d| d.initial).collect();
    let accepting = |tuple: &[usize]| -> Vec<bool> {
        tuple.iter().zip(dfas).map(|(&q, d)| d.accepting[q]).collect()
    };
    let mut seen: HashSet<Vec<usize>> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    let n_symbols = dfas[0].alphabet.len();
    while let Some(tuple) = queue.pop_front() {
        if goal(&accepting(&tuple)) {
            return true;
        }
        for s in 0..n_symbols {
            let next: Vec<usize> = tuple.iter().zip(dfas).map(|(&q, d)| d.step(q, s)).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    false
}
