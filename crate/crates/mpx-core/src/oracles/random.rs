use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::automata::{AtomKind, WeightedAutomaton};
use crate::expressions::Expression;
use crate::numerics::Rational;

/// How atom kinds are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindPolicy {
    Random,
    /// All atoms lim-inf except one randomly placed lim-sup atom.
    OneSup,
    AllInf,
}

#[derive(Debug, Clone)]
pub struct InstanceBounds {
    pub max_states: usize,
    pub max_atoms: usize,
    pub alphabet: Vec<String>,
    /// Integer weights drawn from `min_weight..=max_weight`.
    pub min_weight: i64,
    pub max_weight: i64,
    pub allow_max: bool,
    pub kinds: KindPolicy,
}

impl Default for InstanceBounds {
    fn default() -> Self {
        InstanceBounds {
            max_states: 4,
            max_atoms: 4,
            alphabet: vec!["a".into(), "b".into()],
            min_weight: -2,
            max_weight: 2,
            allow_max: true,
            kinds: KindPolicy::Random,
        }
    }
}

/// Seeded random instance: a pool of valid automata over the bounded
/// alphabet and an expression over them. Reproducible for a fixed seed and
/// bounds; atoms may reference the same automaton more than once.
pub fn random_instance(
    seed: u64,
    bounds: &InstanceBounds,
) -> (Vec<Arc<WeightedAutomaton>>, Expression) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n_atoms = rng.random_range(1..=bounds.max_atoms);
    let n_automata = rng.random_range(1..=n_atoms);
    let automata: Vec<Arc<WeightedAutomaton>> = (0..n_automata)
        .map(|i| Arc::new(random_automaton(&mut rng, bounds, &format!("R{i}"))))
        .collect();

    let mut kinds: Vec<AtomKind> = match bounds.kinds {
        KindPolicy::Random => (0..n_atoms)
            .map(|_| if rng.random_bool(0.5) { AtomKind::Inf } else { AtomKind::Sup })
            .collect(),
        KindPolicy::AllInf => vec![AtomKind::Inf; n_atoms],
        KindPolicy::OneSup => {
            let mut kinds = vec![AtomKind::Inf; n_atoms];
            let at = rng.random_range(0..n_atoms);
            kinds[at] = AtomKind::Sup;
            kinds
        }
    };

    let mut pieces: Vec<Expression> = kinds
        .drain(..)
        .map(|kind| {
            let automaton = automata[rng.random_range(0..automata.len())].clone();
            match kind {
                AtomKind::Inf => Expression::AtomInf(automaton),
                AtomKind::Sup => Expression::AtomSup(automaton),
            }
        })
        .collect();
    while pieces.len() > 1 {
        let right = pieces.remove(rng.random_range(0..pieces.len()));
        let left = pieces.remove(rng.random_range(0..pieces.len()));
        let op = if bounds.allow_max {
            rng.random_range(0..3)
        } else {
            rng.random_range(0..2)
        };
        let combined = match op {
            0 => Expression::min(left, right),
            1 => Expression::sum(left, right),
            _ => Expression::max(left, right),
        };
        pieces.push(combined);
    }
    (automata, pieces.pop().unwrap())
}

fn random_automaton(
    rng: &mut ChaCha8Rng,
    bounds: &InstanceBounds,
    name: &str,
) -> WeightedAutomaton {
    let n_states = rng.random_range(1..=bounds.max_states);
    let states: Vec<String> = (0..n_states).map(|i| format!("q{i}")).collect();
    let state_refs: Vec<&str> = states.iter().map(|s| s.as_str()).collect();
    let alphabet_refs: Vec<&str> = bounds.alphabet.iter().map(|s| s.as_str()).collect();
    let mut transitions: Vec<(&str, &str, &str, Rational)> = Vec::new();
    for q in &state_refs {
        for sym in &alphabet_refs {
            let target = state_refs[rng.random_range(0..n_states)];
            let weight = Rational::integer(rng.random_range(bounds.min_weight..=bounds.max_weight));
            transitions.push((q, sym, target, weight));
        }
    }
    WeightedAutomaton::new(name, &alphabet_refs, &state_refs, state_refs[0], &transitions)
        .expect("generated automaton is valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_a_seed() {
        let bounds = InstanceBounds::default();
        let (auts1, e1) = random_instance(1, &bounds);
        let (auts2, e2) = random_instance(1, &bounds);
        assert_eq!(e1, e2);
        assert_eq!(auts1.len(), auts2.len());
        for (a, b) in auts1.iter().zip(&auts2) {
            assert_eq!(a.as_ref(), b.as_ref());
        }
        let (_, other) = random_instance(2, &bounds);
        // different seeds almost surely differ; if not, the suite would
        // still pass, this simply documents the expectation
        let _ = other;
    }

    #[test]
    fn all_instances_validate() {
        let bounds = InstanceBounds::default();
        for seed in 0..1000 {
            let (automata, e) = random_instance(seed, &bounds);
            assert!(!automata.is_empty());
            assert!(e.size() <= 2 * bounds.max_atoms);
            for a in &automata {
                assert_eq!(a.alphabet, bounds.alphabet);
            }
        }
    }

    #[test]
    fn kind_policies_hold() {
        let bounds = InstanceBounds {
            kinds: KindPolicy::OneSup,
            allow_max: false,
            ..InstanceBounds::default()
        };
        for seed in 0..50 {
            let (_, e) = random_instance(seed, &bounds);
            assert!(!e.contains_max());
            let atoms = e.atom_vector().unwrap();
            assert_eq!(atoms.dimension() - atoms.lim_inf_count, 1, "exactly one sup atom");
        }
    }
}
