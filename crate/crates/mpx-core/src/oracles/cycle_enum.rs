use std::collections::BTreeMap;

use crate::automata::{build_product, enumerate_simple_cycles, reachable_sccs, AtomKind};
use crate::constraints::{min_only_constraints, structural_constraints, ThresholdVariables};
use crate::error::Error;
use crate::expressions::Expression;
use crate::numerics::{solve_lp, LpOutcome, Rational};

/// Maximum value of a MAX-free expression through the literal naive route:
/// list every simple cycle of each component, build the min-only
/// constraints over explicit cycle variables, and maximize `nu` together
/// with the structural rows. Exponential in general; this is the
/// independent oracle behind the circulation path.
///
/// Returns the value together with the attaining component id.
pub fn cycle_enum_max_value(e: &Expression, cycle_cap: usize) -> Result<(Rational, usize), Error> {
    let atoms = e.atom_vector()?;
    let refs: Vec<(&crate::automata::WeightedAutomaton, AtomKind)> = atoms
        .atoms
        .iter()
        .map(|a| (a.automaton.as_ref(), a.kind))
        .collect();
    let product = build_product(&refs)?;
    let partition = reachable_sccs(&product);
    let vars = ThresholdVariables::for_expression(e, &atoms);

    let mut best: Option<(Rational, usize)> = None;
    for comp in partition.cyclic_components() {
        let cycles = enumerate_simple_cycles(&product, &partition, comp.id, cycle_cap)?;
        let system = min_only_constraints(&atoms, &cycles, &vars.as_thresholds())?
            .merge(structural_constraints(e, &vars));
        let mut objective = BTreeMap::new();
        objective.insert(vars.nu.clone(), Rational::one());
        match solve_lp(&system.into_lp(objective)) {
            LpOutcome::Optimal { value, .. } => {
                if best.as_ref().is_none_or(|(b, _)| value > *b) {
                    best = Some((value, comp.id));
                }
            }
            other => panic!("per-component program must have an optimum, got {other:?}"),
        }
    }
    Ok(best.expect("total transitions force at least one cyclic component"))
}
