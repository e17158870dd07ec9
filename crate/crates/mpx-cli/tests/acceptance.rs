//! Acceptance suite: one test per criterion, each printing a pass line.
//! Everything is exact; no tolerance is ever applied to a comparison
//! unless the criterion itself defines a margin.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::Command;
use std::sync::Arc;

use mpx_core::automata::{
    build_product, max_mean_cycle, reachable_sccs, AtomKind, WeightedAutomaton,
};
use mpx_core::constraints::{circulation_constraints, Thresholds};
use mpx_core::engine::{
    evaluate_lasso, is_empty, is_universal, max_value, max_value_max_free, witness_schedule,
    EngineOptions, LassoWord,
};
use mpx_core::expressions::Expression;
use mpx_core::numerics::{
    check_feasible, solve_lp, LinearConstraint, LinearProgram, LpOutcome, VarSign,
};
use mpx_core::oracles::{
    brute_force_max, cycle_enum_max_value, dfa_intersection_nonempty, dfa_union_universal,
    gadget_f, gadget_g, random_instance, BruteOutcome, Dfa, InstanceBounds, KindPolicy,
};
use mpx_core::Rational;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d).unwrap()
}

fn a1() -> Arc<WeightedAutomaton> {
    Arc::new(
        WeightedAutomaton::new(
            "A1",
            &["a", "b"],
            &["q"],
            "q",
            &[("q", "a", "q", Rational::one()), ("q", "b", "q", Rational::zero())],
        )
        .unwrap(),
    )
}

fn a2() -> Arc<WeightedAutomaton> {
    Arc::new(
        WeightedAutomaton::new(
            "A2",
            &["a", "b"],
            &["q"],
            "q",
            &[("q", "a", "q", Rational::zero()), ("q", "b", "q", Rational::one())],
        )
        .unwrap(),
    )
}

fn inf(a: &Arc<WeightedAutomaton>) -> Expression {
    Expression::AtomInf(a.clone())
}

fn sup(a: &Arc<WeightedAutomaton>) -> Expression {
    Expression::AtomSup(a.clone())
}

fn opts() -> EngineOptions {
    EngineOptions::default()
}

/// All atom occurrences, `max` nodes included.
fn all_atoms(e: &Expression) -> Vec<(Arc<WeightedAutomaton>, AtomKind)> {
    match e {
        Expression::AtomInf(a) => vec![(a.clone(), AtomKind::Inf)],
        Expression::AtomSup(a) => vec![(a.clone(), AtomKind::Sup)],
        Expression::Min(x, y) | Expression::Max(x, y) | Expression::Sum(x, y) => {
            let mut v = all_atoms(x);
            v.extend(all_atoms(y));
            v
        }
    }
}

fn full_product_vertices(e: &Expression) -> usize {
    let atoms = all_atoms(e);
    let refs: Vec<_> = atoms.iter().map(|(a, k)| (a.as_ref(), *k)).collect();
    build_product(&refs).unwrap().vertex_count()
}

/// Seeded instances filtered by full-product size.
fn instances(
    count: usize,
    max_vertices: usize,
    bounds: &InstanceBounds,
    seed_base: u64,
) -> Vec<(u64, Expression)> {
    let mut out = Vec::new();
    let mut seed = seed_base;
    while out.len() < count {
        let (_, e) = random_instance(seed, bounds);
        if full_product_vertices(&e) <= max_vertices {
            out.push((seed, e));
        }
        seed += 1;
    }
    out
}

#[test]
fn acceptance_01_closed_form_instances() {
    let a1 = a1();
    let a2 = a2();
    let cases = [
        (Expression::min(inf(&a1), inf(&a2)), r(1, 2)),
        (Expression::min(sup(&a1), sup(&a2)), r(1, 1)),
        (Expression::sum(inf(&a1), inf(&a2)), r(1, 1)),
        (Expression::sum(sup(&a1), sup(&a2)), r(2, 1)),
    ];
    for (e, expected) in &cases {
        let engine = max_value(e, &opts()).unwrap();
        let (oracle, _) = cycle_enum_max_value(e, 100_000).unwrap();
        assert_eq!(&engine.value, expected, "engine value of {e}");
        assert_eq!(&oracle, expected, "oracle value of {e}");
    }
    let d12 = mpx_core::engine::distance(&inf(&a1), &inf(&a2), &opts()).unwrap();
    assert_eq!(d12.value, r(1, 1));
    let d_inf_sup = mpx_core::engine::distance(&inf(&a1), &sup(&a1), &opts()).unwrap();
    assert_eq!(d_inf_sup.value, r(1, 1));
    println!("acceptance 1 (closed-form instances, engine vs oracle): PASS");
}

#[test]
fn acceptance_02_oracle_equivalence() {
    let bounds = InstanceBounds { allow_max: false, ..InstanceBounds::default() };
    let cases = instances(200, 6, &bounds, 0);
    for (seed, e) in &cases {
        let direct = max_value_max_free(e, &opts()).unwrap();
        let (oracle, oracle_scc) = cycle_enum_max_value(e, 100_000).unwrap();
        assert_eq!(direct.value, oracle, "seed {seed}: {e}");
        assert_eq!(direct.scc, oracle_scc, "seed {seed}: {e}");
    }
    println!("acceptance 2 (circulation vs cycle enumeration on {} instances): PASS", cases.len());
}

#[test]
fn acceptance_03_one_sup_flip() {
    let bounds = InstanceBounds {
        allow_max: false,
        kinds: KindPolicy::OneSup,
        ..InstanceBounds::default()
    };
    let cases = instances(100, 12, &bounds, 10_000);
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    let mut comparisons = 0usize;
    for (seed, e) in &cases {
        let flipped = flip_sups_to_inf(e);
        let atoms = e.atom_vector().unwrap();
        let atoms_flipped = flipped.atom_vector().unwrap();
        let p = {
            let refs: Vec<_> = atoms.atoms.iter().map(|a| (a.automaton.as_ref(), a.kind)).collect();
            build_product(&refs).unwrap()
        };
        let p_flipped = {
            let refs: Vec<_> =
                atoms_flipped.atoms.iter().map(|a| (a.automaton.as_ref(), a.kind)).collect();
            build_product(&refs).unwrap()
        };
        let partition = reachable_sccs(&p);
        let partition_flipped = reachable_sccs(&p_flipped);
        let thresholds_of = |rng: &mut ChaCha8Rng| -> Vec<Rational> {
            (0..atoms.dimension())
                .map(|_| r(rng.random_range(-8..=8), rng.random_range(1..=4)))
                .collect()
        };
        for _ in 0..20 {
            let thresholds = thresholds_of(&mut rng);
            let by_path: BTreeMap<&str, &Rational> = atoms
                .atoms
                .iter()
                .zip(&thresholds)
                .map(|(a, t)| (a.node_path.as_str(), t))
                .collect();
            let flipped_thresholds: Vec<Rational> = atoms_flipped
                .atoms
                .iter()
                .map(|a| by_path[a.node_path.as_str()].clone())
                .collect();
            let feasible = |p, partition: &mpx_core::automata::SccPartition, atoms, t: Vec<Rational>| {
                partition.cyclic_components().any(|comp| {
                    let sys = circulation_constraints(
                        p,
                        partition,
                        comp.id,
                        atoms,
                        &Thresholds::Fixed(t.clone()),
                    );
                    check_feasible(&sys.constraints(), &sys.variables)
                })
            };
            let original = feasible(&p, &partition, &atoms, thresholds.clone());
            let after_flip = feasible(&p_flipped, &partition_flipped, &atoms_flipped, flipped_thresholds);
            assert_eq!(original, after_flip, "seed {seed}, thresholds {thresholds:?}");
            comparisons += 1;
        }
    }
    println!("acceptance 3 (one lim-sup atom flip, {comparisons} feasibility checks): PASS");
}

fn flip_sups_to_inf(e: &Expression) -> Expression {
    match e {
        Expression::AtomInf(a) => Expression::AtomInf(a.clone()),
        Expression::AtomSup(a) => Expression::AtomInf(a.clone()),
        Expression::Min(x, y) => Expression::min(flip_sups_to_inf(x), flip_sups_to_inf(y)),
        Expression::Max(x, y) => Expression::max(flip_sups_to_inf(x), flip_sups_to_inf(y)),
        Expression::Sum(x, y) => Expression::sum(flip_sups_to_inf(x), flip_sups_to_inf(y)),
    }
}

#[test]
fn acceptance_04_sup_only_min_componentwise() {
    let bounds = InstanceBounds { allow_max: false, ..InstanceBounds::default() };
    let mut tested = 0;
    let mut seed = 40_000;
    while tested < 50 {
        seed += 1;
        let (automata, _) = random_instance(seed, &bounds);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5f5f);
        let n_atoms = rng.random_range(1..=3);
        let mut e = Expression::AtomSup(automata[rng.random_range(0..automata.len())].clone());
        for _ in 1..n_atoms {
            let atom = Expression::AtomSup(automata[rng.random_range(0..automata.len())].clone());
            e = Expression::min(e, atom);
        }
        let atoms = e.atom_vector().unwrap();
        let refs: Vec<_> = atoms.atoms.iter().map(|a| (a.automaton.as_ref(), a.kind)).collect();
        let p = build_product(&refs).unwrap();
        let partition = reachable_sccs(&p);
        if partition.components.len() != 1 {
            continue;
        }
        let expected = (0..p.dimension)
            .map(|dim| max_mean_cycle(&p, &partition, 0, dim))
            .min()
            .unwrap();
        let got = max_value(&e, &opts()).unwrap();
        assert_eq!(got.value, expected, "seed {seed}: {e}");
        tested += 1;
    }
    println!("acceptance 4 (lim-sup-only min = componentwise best, {tested} instances): PASS");
}

#[test]
fn acceptance_05_lasso_soundness() {
    let bounds = InstanceBounds::default();
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    let cases = instances(50, 20, &bounds, 50_000);
    let mut pairs = 0usize;
    for (seed, e) in &cases {
        let mv = max_value(e, &opts()).unwrap();
        let complement = e.complement();
        for _ in 0..10 {
            let prefix: Vec<usize> =
                (0..rng.random_range(0..=3)).map(|_| rng.random_range(0..2)).collect();
            let cycle: Vec<usize> =
                (0..rng.random_range(1..=3)).map(|_| rng.random_range(0..2)).collect();
            let w = LassoWord::new(prefix, cycle).unwrap();
            let v = evaluate_lasso(e, &w).unwrap();
            assert!(v <= mv.value, "seed {seed}: {e} exceeds its maximum on {w:?}");
            let vc = evaluate_lasso(&complement, &w).unwrap();
            assert_eq!(vc, -v.clone(), "seed {seed}: complement not pointwise negation");
            pairs += 1;
        }
    }
    assert!(pairs >= 500);
    println!("acceptance 5 (lasso soundness on {pairs} pairs): PASS");
}

#[test]
fn acceptance_06_rationality_and_split() {
    let bounds = InstanceBounds::default();
    let cases = instances(60, 20, &bounds, 60_000);
    for (seed, e) in &cases {
        let mv = max_value(e, &opts()).unwrap();
        let pieces = e.split_max(4096).unwrap();
        let via_pieces = pieces
            .iter()
            .map(|piece| max_value_max_free(piece, &opts()).unwrap().value)
            .max()
            .unwrap();
        assert_eq!(mv.value, via_pieces, "seed {seed}: {e}");
        // exact rational: the canonical p/q rendering round-trips losslessly
        let reparsed: Rational = mv.value.to_string().parse().unwrap();
        assert_eq!(reparsed, mv.value, "seed {seed}: not canonical");
    }
    println!("acceptance 6 (rationality and MAX-split agreement on {} instances): PASS", cases.len());
}

#[test]
fn acceptance_07_witness_convergence() {
    let a1 = a1();
    let a2 = a2();
    let eps = r(1, 100);

    // min(inf, inf): after some position <= 10000 the running minimum
    // average stays above 1/2 - 1/100 (verified over a 200k horizon).
    let e = Expression::min(inf(&a1), inf(&a2));
    let s = witness_schedule(&e, &eps, &opts()).unwrap();
    let p = s.product();
    let mut vertex = p.initial;
    // weights here are 0/1 integers, so i64 counters are exact
    let mut counts = [0i64, 0i64];
    let mut last_violation = 0usize;
    for (i, symbol) in s.symbols().take(200_000).enumerate() {
        let edge = p.edge_for(vertex, symbol);
        vertex = edge.to;
        for (count, w) in counts.iter_mut().zip(&edge.weight) {
            if *w == Rational::one() {
                *count += 1;
            }
        }
        let len = (i + 1) as i64;
        // min average < 49/100  <=>  100 * min(count) < 49 * len
        if 100 * counts.iter().min().unwrap() < 49 * len {
            last_violation = i + 1;
        }
    }
    assert!(
        last_violation <= 10_000,
        "running minimum still dips at position {last_violation}"
    );

    // min(sup, sup): beyond every checkpoint both dimensions' running
    // averages exceed 1 - 1/100 at some position within the first 100000
    // symbols. Recoveries of opposite dimensions are at least a factor 99
    // apart in position, so checkpoints are capped at 100.
    let e = Expression::min(sup(&a1), sup(&a2));
    let s = witness_schedule(&e, &eps, &opts()).unwrap();
    let p = s.product();
    let mut vertex = p.initial;
    let mut counts = [0i64, 0i64];
    let mut hits: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for (i, symbol) in s.symbols().take(100_000).enumerate() {
        let edge = p.edge_for(vertex, symbol);
        vertex = edge.to;
        for (count, w) in counts.iter_mut().zip(&edge.weight) {
            if *w == Rational::one() {
                *count += 1;
            }
        }
        let len = (i + 1) as i64;
        for (dim_hits, &count) in hits.iter_mut().zip(&counts) {
            // average > 99/100  <=>  100 * count > 99 * len
            if 100 * count > 99 * len {
                dim_hits.push(i + 1);
            }
        }
    }
    for (dim, dim_hits) in hits.iter().enumerate() {
        for checkpoint in [1usize, 10, 100] {
            assert!(
                dim_hits.iter().any(|&pos| pos > checkpoint),
                "dimension {dim} never recovers past checkpoint {checkpoint}"
            );
        }
    }
    println!("acceptance 7 (witness convergence for both canonical schedules): PASS");
}

fn random_dfa(rng: &mut ChaCha8Rng, name: &str) -> Dfa {
    let n = rng.random_range(1..=3);
    let states: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let state_refs: Vec<&str> = states.iter().map(|s| s.as_str()).collect();
    let mut transitions = Vec::new();
    for q in &state_refs {
        for sym in ["a", "b"] {
            transitions.push((*q, sym, state_refs[rng.random_range(0..n)]));
        }
    }
    let accepting: Vec<&str> = state_refs
        .iter()
        .copied()
        .filter(|_| rng.random_bool(0.4))
        .collect();
    Dfa::new(name, &["a", "b"], &state_refs, state_refs[0], &accepting, &transitions).unwrap()
}

#[test]
fn acceptance_08_hardness_gadgets() {
    let mut rng = ChaCha8Rng::seed_from_u64(808);
    let mut cases = 0usize;
    while cases < 50 {
        let k = rng.random_range(2..=3);
        let dfas: Vec<Dfa> = (0..k).map(|i| random_dfa(&mut rng, &format!("D{i}"))).collect();
        let refs: Vec<&Dfa> = dfas.iter().collect();

        // intersection emptiness through min of f-gadgets at threshold 0
        let gadgets: Vec<Arc<WeightedAutomaton>> = dfas
            .iter()
            .map(|d| Arc::new(gadget_f(d, "xi").unwrap()))
            .collect();
        let mut e = Expression::AtomInf(gadgets[0].clone());
        for g in &gadgets[1..] {
            e = Expression::min(e, Expression::AtomInf(g.clone()));
        }
        let nonempty = is_empty(&e, &Rational::zero(), &opts()).unwrap().answer;
        assert_eq!(
            nonempty,
            dfa_intersection_nonempty(&refs),
            "intersection mismatch for case {cases}"
        );

        // union universality through max of f-gadgets plus the g-gadget
        let g = Arc::new(gadget_g(&["a".into(), "b".into()], "xi").unwrap());
        let mut u = Expression::AtomInf(gadgets[0].clone());
        for f in &gadgets[1..] {
            u = Expression::max(u, Expression::AtomInf(f.clone()));
        }
        u = Expression::max(u, Expression::AtomInf(g));
        let universal = is_universal(&u, &Rational::zero(), &opts()).unwrap().answer;
        assert_eq!(
            universal,
            dfa_union_universal(&refs),
            "universality mismatch for case {cases}"
        );
        cases += 1;
    }
    println!("acceptance 8 (hardness gadgets vs product-DFA oracles, {cases} cases): PASS");
}

fn random_lp(rng: &mut ChaCha8Rng) -> LinearProgram {
    let n = rng.random_range(1..=4);
    let m = rng.random_range(1..=6);
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let variables: Vec<(String, VarSign)> =
        names.iter().map(|s| (s.clone(), VarSign::NonNegative)).collect();
    let mut constraints = Vec::new();
    for _ in 0..m {
        let mut terms: Vec<(String, Rational)> = Vec::new();
        for name in &names {
            if rng.random_bool(0.8) {
                terms.push((name.clone(), Rational::integer(rng.random_range(-3..=3))));
            }
        }
        let rhs = Rational::integer(rng.random_range(-4..=4));
        if rng.random_bool(0.25) {
            constraints.push(LinearConstraint::eq(terms, rhs));
        } else {
            constraints.push(LinearConstraint::ge(terms, rhs));
        }
    }
    let objective: BTreeMap<String, Rational> = names
        .iter()
        .map(|s| (s.clone(), Rational::integer(rng.random_range(-3..=3))))
        .collect();
    LinearProgram { variables, constraints, objective }
}

#[test]
fn acceptance_09_lp_unit_suite() {
    let mut rng = ChaCha8Rng::seed_from_u64(909);
    let mut optimal = 0usize;
    let mut infeasible = 0usize;
    let mut unbounded = 0usize;
    for case in 0..120 {
        let lp = random_lp(&mut rng);
        let fast = solve_lp(&lp);
        let brute = brute_force_max(&lp);
        match (&fast, &brute) {
            (LpOutcome::Infeasible, BruteOutcome::Infeasible) => infeasible += 1,
            (LpOutcome::Unbounded, BruteOutcome::Unbounded) => unbounded += 1,
            (LpOutcome::Optimal { value, assignment }, BruteOutcome::Optimal(expected)) => {
                assert_eq!(value, expected, "case {case}: optimum mismatch");
                for c in &lp.constraints {
                    assert!(c.satisfied_by(assignment), "case {case}: {c} violated");
                }
                optimal += 1;
            }
            other => panic!("case {case}: verdicts disagree: {other:?}"),
        }
    }
    assert!(optimal + infeasible + unbounded >= 100);
    assert!(optimal > 0 && infeasible > 0 && unbounded > 0, "{optimal}/{infeasible}/{unbounded}");

    // constructed statuses
    let vars = vec![("x".to_string(), VarSign::NonNegative)];
    let contradiction = LinearProgram {
        variables: vars.clone(),
        constraints: vec![
            LinearConstraint::ge(vec![("x".to_string(), Rational::one())], Rational::one()),
            LinearConstraint::ge(vec![("x".to_string(), -Rational::one())], Rational::zero()),
        ],
        objective: BTreeMap::new(),
    };
    assert_eq!(solve_lp(&contradiction), LpOutcome::Infeasible);
    let ray = LinearProgram {
        variables: vars,
        constraints: vec![LinearConstraint::ge(
            vec![("x".to_string(), Rational::one())],
            Rational::integer(3),
        )],
        objective: [("x".to_string(), Rational::one())].into_iter().collect(),
    };
    assert_eq!(solve_lp(&ray), LpOutcome::Unbounded);
    println!(
        "acceptance 9 (simplex vs vertex enumeration: {optimal} optimal, {infeasible} infeasible, {unbounded} unbounded): PASS"
    );
}

fn fixture(rel: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(rel);
    p.display().to_string()
}

fn run_mpx(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_mpx"))
        .args(args)
        .output()
        .expect("mpx runs");
    (
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn acceptance_10_cli_goldens_are_deterministic() {
    let automata = fixture("automata");
    let min_inf = fixture("exprs/min_inf.expr");
    let min_sup = fixture("exprs/min_sup.expr");
    let inf_a1 = fixture("exprs/inf_a1.expr");
    let inf_a2 = fixture("exprs/inf_a2.expr");
    let sup_a1 = fixture("exprs/sup_a1.expr");
    let validate_expected = format!(
        "automaton A1 states 1 symbols 2\nautomaton A2 states 1 symbols 2\nautomaton A3 states 2 symbols 2\nexpression {min_inf} atoms 2 pieces 1\n"
    );

    let goldens: Vec<(Vec<&str>, &str, i32)> = vec![
        (
            vec!["maxvalue", "-a", &automata, "-e", &min_inf],
            "result 1/2\npiece 0\nscc 0\n",
            0,
        ),
        (
            vec!["maxvalue", "-a", &automata, "-e", &min_inf, "--oracle"],
            "result 1/2\npiece 0\nscc 0\n",
            0,
        ),
        (
            vec!["maxvalue", "-a", &automata, "-e", &min_sup],
            "result 1\npiece 0\nscc 0\n",
            0,
        ),
        (
            vec!["empty", "-a", &automata, "-e", &min_inf, "--nu", "51/100"],
            "verdict false\nresult 1/2\npiece 0\nscc 0\n",
            0,
        ),
        (
            vec!["empty", "-a", &automata, "-e", &min_inf, "--nu", "1/2"],
            "verdict true\nresult 1/2\npiece 0\nscc 0\n",
            0,
        ),
        (
            vec!["universal", "-a", &automata, "-e", &inf_a1, "--nu", "0"],
            "verdict true\nresult 0\npiece 0\nscc 0\n",
            0,
        ),
        (
            vec!["includes", "-a", &automata, "-e", &inf_a1, "-e2", &sup_a1],
            "verdict true\nresult 0\npiece 0\nscc 0\n",
            0,
        ),
        (
            vec!["equiv", "-a", &automata, "-e", &min_inf, "-e2", &min_inf],
            "verdict true\nresult 0\npiece 0\nscc 0\n",
            0,
        ),
        (
            vec!["distance", "-a", &automata, "-e", &inf_a1, "-e2", &inf_a2],
            "result 1\npiece 0\nscc 0\n",
            0,
        ),
        (
            vec!["distance", "-a", &automata, "-e", &inf_a1, "-e2", &sup_a1],
            "result 1\npiece 1\nscc 0\n",
            0,
        ),
        (
            vec!["eval-lasso", "-a", &automata, "-e", &inf_a1, "--v", "a b"],
            "result 1/2\n",
            0,
        ),
        (
            vec!["witness", "-a", &automata, "-e", &min_inf, "--prefix", "8"],
            "result 1/2\npiece 0\nscc 0\nprefix a b a a b b a a\n",
            0,
        ),
        (
            vec!["validate", "-a", &automata, "-e", &min_inf],
            validate_expected.as_str(),
            0,
        ),
    ];

    for (args, expected, code) in &goldens {
        let (first, first_code) = run_mpx(args);
        let (second, second_code) = run_mpx(args);
        assert_eq!(first, second, "repeated run differs for {args:?}");
        assert_eq!(first_code, second_code);
        assert_eq!(&first, expected, "unexpected stdout for {args:?}");
        assert_eq!(first_code, *code, "unexpected exit code for {args:?}");
    }

    // cap exhaustion and input errors map to the documented exit codes
    let (_, code) = run_mpx(&[
        "maxvalue", "-a", &automata, "-e", &min_inf, "--oracle", "--cycle-cap", "1",
    ]);
    assert_eq!(code, 3);
    let (_, code) = run_mpx(&["maxvalue", "-a", &automata, "-e", "/nonexistent.expr"]);
    assert_eq!(code, 2);
    println!("acceptance 10 (byte-identical CLI goldens, {} commands): PASS", goldens.len());
}
