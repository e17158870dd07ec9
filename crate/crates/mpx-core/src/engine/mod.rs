//! Decision procedures over expressions: exact maximum values via per-SCC
//! circulation programs, the classical quantitative problems reduced to
//! maximum values, exact lasso evaluation and witness schedules.

mod lasso;
mod witness;

pub use lasso::{evaluate_lasso, LassoWord};
pub use witness::{witness_schedule, WitnessSchedule};

use std::collections::BTreeMap;

use crate::automata::{build_product, reachable_sccs, AtomKind, ProductAutomaton, SccPartition};
use crate::constraints::{
    circulation_constraints, family_specs, structural_constraints, ThresholdVariables,
};
use crate::error::Error;
use crate::expressions::{AtomVector, Expression};
use crate::numerics::{solve_lp, LpOutcome, Rational};
use crate::oracles::cycle_enum_max_value;

#[derive(Debug, Clone, Copy)]
pub struct EngineOptions {
    /// Abort cycle enumeration beyond this many cycles per component.
    pub cycle_cap: usize,
    /// Abort MAX-splitting beyond this many pieces.
    pub piece_cap: usize,
    /// Compute maxima through the exponential cycle-enumeration program
    /// instead of the circulation program.
    pub use_oracle: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions { cycle_cap: 100_000, piece_cap: 4096, use_oracle: false }
    }
}

/// Which MAX-free piece and which component attained the optimum. Ties
/// break to the lowest piece index, then the lowest component id.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Attribution {
    pub piece: usize,
    pub scc: usize,
}

/// Answer to one decision query. The boolean is a pure function of the
/// optimal value and the query threshold.
#[derive(Debug, Clone)]
pub struct Verdict {
    pub answer: bool,
    pub value: Rational,
    pub attribution: Attribution,
    pub witness: Option<WitnessSchedule>,
}

/// Solved per-SCC program of a MAX-free expression, with everything the
/// witness construction needs.
#[derive(Debug, Clone)]
pub struct MaxFreeOutcome {
    pub value: Rational,
    pub scc: usize,
    pub(crate) atoms: AtomVector,
    pub(crate) product: ProductAutomaton,
    pub(crate) partition: SccPartition,
    /// Optimal threshold per dimension.
    pub(crate) thresholds: Vec<Rational>,
    /// Positive edge flows per constraint family, in edge-id order.
    pub(crate) families: Vec<FamilyFlow>,
}

#[derive(Debug, Clone)]
pub(crate) struct FamilyFlow {
    pub sup_dim: Option<usize>,
    pub flow: Vec<(usize, Rational)>,
}

/// Maximum value of a MAX-free expression: over every reachable component
/// that can host an infinite run, maximize `nu` subject to the circulation
/// and structural constraints, and keep the best component. The optimum is
/// always attained and rational.
pub fn max_value_max_free(e: &Expression, _opts: &EngineOptions) -> Result<MaxFreeOutcome, Error> {
    let atoms = e.atom_vector()?;
    let refs: Vec<(&crate::automata::WeightedAutomaton, AtomKind)> = atoms
        .atoms
        .iter()
        .map(|a| (a.automaton.as_ref(), a.kind))
        .collect();
    let product = build_product(&refs)?;
    let partition = reachable_sccs(&product);
    let vars = ThresholdVariables::for_expression(e, &atoms);

    let mut best: Option<MaxFreeOutcome> = None;
    for comp in partition.cyclic_components() {
        let system = circulation_constraints(&product, &partition, comp.id, &atoms, &vars.as_thresholds())
            .merge(structural_constraints(e, &vars));
        let mut objective = BTreeMap::new();
        objective.insert(vars.nu.clone(), Rational::one());
        let lp = system.into_lp(objective);
        let outcome = solve_lp(&lp);
        let (value, assignment) = match outcome {
            LpOutcome::Optimal { value, assignment } => (value, assignment),
            // Thresholds can always decrease and every atom dimension is
            // bounded above by some family row, so per-component programs
            // are feasible and bounded.
            other => panic!("per-component program must have an optimum, got {other:?}"),
        };
        if best.as_ref().is_none_or(|b| value > b.value) {
            let thresholds = vars
                .atom_vars
                .iter()
                .map(|name| assignment[name].clone())
                .collect();
            let families = family_specs(&atoms)
                .iter()
                .map(|family| FamilyFlow {
                    sup_dim: family.sup_dim,
                    flow: partition
                        .component(comp.id)
                        .internal_edges
                        .iter()
                        .filter_map(|&edge| {
                            let v = &assignment[&format!("x{}@e{edge}", family.index)];
                            v.is_positive().then(|| (edge, v.clone()))
                        })
                        .collect(),
                })
                .collect();
            best = Some(MaxFreeOutcome {
                value,
                scc: comp.id,
                atoms: atoms.clone(),
                product: product.clone(),
                partition: partition.clone(),
                thresholds,
                families,
            });
        }
    }
    Ok(best.expect("total transitions force at least one cyclic component"))
}

/// Maximum value of an arbitrary expression: the exact maximum over its
/// MAX-free pieces.
#[derive(Debug)]
pub struct MaxValueOutcome {
    pub value: Rational,
    pub attribution: Attribution,
    pub pieces: Vec<Expression>,
    /// Solution of the winning piece; absent on the oracle path.
    pub(crate) best: Option<MaxFreeOutcome>,
}

pub fn max_value(e: &Expression, opts: &EngineOptions) -> Result<MaxValueOutcome, Error> {
    let pieces = e.split_max(opts.piece_cap)?;
    let mut best: Option<(Rational, Attribution, Option<MaxFreeOutcome>)> = None;
    for (index, piece) in pieces.iter().enumerate() {
        let (value, scc, outcome) = if opts.use_oracle {
            let (value, scc) = cycle_enum_max_value(piece, opts.cycle_cap)?;
            (value, scc, None)
        } else {
            let outcome = max_value_max_free(piece, opts)?;
            (outcome.value.clone(), outcome.scc, Some(outcome))
        };
        if best.as_ref().is_none_or(|(b, _, _)| value > *b) {
            best = Some((value, Attribution { piece: index, scc }, outcome));
        }
    }
    let (value, attribution, best) = best.expect("split_max returns at least one piece");
    Ok(MaxValueOutcome { value, attribution, pieces, best })
}

/// Quantitative emptiness: the verdict is `true` iff some word reaches the
/// threshold, i.e. iff the cut-point language is nonempty.
pub fn is_empty(e: &Expression, nu: &Rational, opts: &EngineOptions) -> Result<Verdict, Error> {
    let mv = max_value(e, opts)?;
    Ok(Verdict {
        answer: mv.value >= *nu,
        value: mv.value,
        attribution: mv.attribution,
        witness: None,
    })
}

/// Quantitative universality: every word reaches the threshold iff the
/// minimum value, the negated maximum of the complement, does.
pub fn is_universal(e: &Expression, nu: &Rational, opts: &EngineOptions) -> Result<Verdict, Error> {
    let mv = max_value(&e.complement(), opts)?;
    let min_value = -mv.value;
    Ok(Verdict {
        answer: min_value >= *nu,
        value: min_value,
        attribution: mv.attribution,
        witness: None,
    })
}

/// Pointwise inclusion `e1 <= e2`: the difference `e1 - e2` must have
/// maximum value at most zero.
pub fn includes(e1: &Expression, e2: &Expression, opts: &EngineOptions) -> Result<Verdict, Error> {
    let diff = Expression::sum(e1.clone(), e2.complement());
    let mv = max_value(&diff, opts)?;
    Ok(Verdict {
        answer: !mv.value.is_positive(),
        value: mv.value,
        attribution: mv.attribution,
        witness: None,
    })
}

/// Distance `sup_w |e1(w) - e2(w)|`: the maximum value of
/// `max(e1 - e2, e2 - e1)`. Always nonnegative.
pub fn distance(e1: &Expression, e2: &Expression, opts: &EngineOptions) -> Result<MaxValueOutcome, Error> {
    let f = Expression::max(
        Expression::sum(e1.clone(), e2.complement()),
        Expression::sum(e2.clone(), e1.complement()),
    );
    let mv = max_value(&f, opts)?;
    debug_assert!(!mv.value.is_negative());
    Ok(mv)
}

/// Language equivalence: distance zero.
pub fn equivalent(e1: &Expression, e2: &Expression, opts: &EngineOptions) -> Result<Verdict, Error> {
    let mv = distance(e1, e2, opts)?;
    Ok(Verdict {
        answer: mv.value.is_zero(),
        value: mv.value,
        attribution: mv.attribution,
        witness: None,
    })
}

/// Maximum value together with a witness schedule for the winning MAX-free
/// piece. On the oracle path the circulation program of the winning piece
/// is re-solved, since the cycle-enumeration route keeps no flows.
pub fn witness_for(
    e: &Expression,
    epsilon: &Rational,
    opts: &EngineOptions,
) -> Result<(MaxValueOutcome, WitnessSchedule), Error> {
    let mv = max_value(e, opts)?;
    let schedule = match &mv.best {
        Some(outcome) => witness::schedule_from_outcome(outcome, epsilon),
        None => {
            let piece = &mv.pieces[mv.attribution.piece];
            let outcome = max_value_max_free(piece, opts)?;
            witness::schedule_from_outcome(&outcome, epsilon)
        }
    };
    Ok((mv, schedule))
}

/// Renders every constraint system a maximum-value query would solve, one
/// block per (piece, component) pair.
pub fn dump_constraints(e: &Expression, opts: &EngineOptions) -> Result<String, Error> {
    use std::fmt::Write as _;
    let mut out = String::new();
    for (index, piece) in e.split_max(opts.piece_cap)?.iter().enumerate() {
        let atoms = piece.atom_vector()?;
        let refs: Vec<(&crate::automata::WeightedAutomaton, AtomKind)> = atoms
            .atoms
            .iter()
            .map(|a| (a.automaton.as_ref(), a.kind))
            .collect();
        let product = build_product(&refs)?;
        let partition = reachable_sccs(&product);
        let vars = ThresholdVariables::for_expression(piece, &atoms);
        for comp in partition.cyclic_components() {
            writeln!(out, "# piece {index} scc {}", comp.id).unwrap();
            let system =
                circulation_constraints(&product, &partition, comp.id, &atoms, &vars.as_thresholds())
                    .merge(structural_constraints(piece, &vars));
            out.push_str(&system.render());
        }
    }
    Ok(out)
}
