use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{max_value_max_free, EngineOptions, MaxFreeOutcome};
use crate::automata::ProductAutomaton;
use crate::error::Error;
use crate::expressions::Expression;
use crate::numerics::Rational;

/// Finitely described infinite word certifying an optimal threshold vector
/// up to `epsilon`: an access path into the winning component, one
/// multi-cycle per constraint family, and connecting paths between cycles
/// and families. Emission interleaves the families in rounds; within a
/// round a family emits growing passes of its multi-cycle until the prefix
/// averages of every lim-inf dimension (margin `epsilon/2`) and of the
/// family's own lim-sup dimension (margin `9*epsilon/10`) have recovered.
/// Pass lengths grow linearly over the whole run, so connecting-path
/// overhead and intra-pass dips both vanish.
#[derive(Debug, Clone)]
pub struct WitnessSchedule {
    product: ProductAutomaton,
    access: Vec<usize>,
    families: Vec<FamilyPlan>,
    /// `family_links[f]` walks from family `f`'s entry to family
    /// `f + 1 (mod F)`'s entry.
    family_links: Vec<Vec<usize>>,
    thresholds: Vec<Rational>,
    lim_inf_count: usize,
    epsilon: Rational,
    /// Per-dimension integer edge weights over a common denominator, when
    /// they fit a machine word; keeps the per-symbol bookkeeping exact and
    /// cheap.
    scaled: Option<ScaledWeights>,
}

#[derive(Debug, Clone)]
struct ScaledWeights {
    /// `denom[dim]` is the common denominator of all edge weights in that
    /// dimension.
    denom: Vec<BigInt>,
    /// `edge[e][dim] = weight * denom[dim]`, bounded so running sums over
    /// any realistic horizon stay inside `i128`.
    edge: Vec<Vec<i64>>,
}

impl ScaledWeights {
    fn build(p: &ProductAutomaton) -> Option<ScaledWeights> {
        let mut denom = vec![BigInt::one(); p.dimension];
        for e in &p.edges {
            for (dim, w) in e.weight.iter().enumerate() {
                denom[dim] = denom[dim].lcm(w.denom());
            }
        }
        let mut edge = Vec::with_capacity(p.edges.len());
        for e in &p.edges {
            let mut row = Vec::with_capacity(p.dimension);
            for (dim, w) in e.weight.iter().enumerate() {
                let scaled = w.numer() * (&denom[dim] / w.denom());
                row.push(scaled.to_i64()?);
            }
            edge.push(row);
        }
        Some(ScaledWeights { denom, edge })
    }
}

#[derive(Debug, Clone)]
struct FamilyPlan {
    sup_dim: Option<usize>,
    cycles: Vec<CyclePlan>,
    /// `links[i]` walks from cycle `i`'s anchor to cycle `i + 1 (mod n)`'s
    /// anchor, traversed once per pass.
    links: Vec<Vec<usize>>,
    entry: usize,
}

#[derive(Debug, Clone)]
struct CyclePlan {
    edges: Vec<usize>,
    multiplicity: u64,
}

impl WitnessSchedule {
    pub fn thresholds(&self) -> &[Rational] {
        &self.thresholds
    }

    pub fn lim_inf_count(&self) -> usize {
        self.lim_inf_count
    }

    pub fn product(&self) -> &ProductAutomaton {
        &self.product
    }

    pub fn alphabet(&self) -> &[String] {
        &self.product.alphabet
    }

    /// Infinite deterministic symbol stream (as alphabet indices).
    pub fn symbols(&self) -> ScheduleCursor<'_> {
        ScheduleCursor::new(self)
    }

    /// First `n` symbols by name. Prefixes are nested: the result for `n`
    /// is a prefix of the result for `n + 1`.
    pub fn emit_prefix(&self, n: usize) -> Vec<String> {
        self.symbols()
            .take(n)
            .map(|s| self.product.alphabet[s].clone())
            .collect()
    }
}

/// Builds the witness schedule for a MAX-free expression from the optimal
/// circulation of its winning component: each family's flow is decomposed
/// into a multi-cycle with integer multiplicities, and connecting paths are
/// shortest paths inside the component.
pub fn witness_schedule(
    e: &Expression,
    epsilon: &Rational,
    opts: &EngineOptions,
) -> Result<WitnessSchedule, Error> {
    assert!(epsilon.is_positive(), "epsilon must be positive");
    let outcome = max_value_max_free(e, opts)?;
    Ok(schedule_from_outcome(&outcome, epsilon))
}

pub(crate) fn schedule_from_outcome(
    outcome: &MaxFreeOutcome,
    epsilon: &Rational,
) -> WitnessSchedule {
    let p = &outcome.product;
    let in_component = |v: usize| outcome.partition.comp_of[v] == outcome.scc;

    let mut families = Vec::with_capacity(outcome.families.len());
    for flow in &outcome.families {
        assert!(!flow.flow.is_empty(), "optimal circulation has empty support");
        let mut cycles = decompose_flow(p, &flow.flow);
        cycles.sort_by(|a, b| a.0.cmp(&b.0));
        let lcm = cycles
            .iter()
            .fold(BigInt::one(), |acc, (_, amount)| acc.lcm(amount.denom()));
        let cycles: Vec<CyclePlan> = cycles
            .into_iter()
            .map(|(edges, amount)| {
                let scaled = amount.numer() * (&lcm / amount.denom());
                let multiplicity = scaled
                    .to_u64()
                    .expect("cycle multiplicity fits in 64 bits");
                CyclePlan { edges, multiplicity }
            })
            .collect();
        let anchors: Vec<usize> = cycles.iter().map(|c| p.edges[c.edges[0]].from).collect();
        let links = (0..cycles.len())
            .map(|i| {
                let next = anchors[(i + 1) % anchors.len()];
                shortest_path(p, anchors[i], next, &in_component)
            })
            .collect();
        families.push(FamilyPlan { sup_dim: flow.sup_dim, cycles, links, entry: anchors[0] });
    }

    let entries: Vec<usize> = families.iter().map(|f| f.entry).collect();
    let family_links = (0..families.len())
        .map(|f| {
            let next = entries[(f + 1) % entries.len()];
            shortest_path(p, entries[f], next, &in_component)
        })
        .collect();
    let access = shortest_path(p, p.initial, entries[0], &|_| true);

    WitnessSchedule {
        product: p.clone(),
        access,
        families,
        family_links,
        thresholds: outcome.thresholds.clone(),
        lim_inf_count: outcome.atoms.lim_inf_count,
        epsilon: epsilon.clone(),
        scaled: ScaledWeights::build(p),
    }
}

/// Greedy exact decomposition of a circulation into simple cycles: walk
/// positive-flow edges (lowest edge id first) until a vertex repeats,
/// subtract the bottleneck, repeat. Each round zeroes at least one edge.
/// Cycles are rotated to start at their smallest vertex.
fn decompose_flow(
    p: &ProductAutomaton,
    flow: &[(usize, Rational)],
) -> Vec<(Vec<usize>, Rational)> {
    let mut remaining: BTreeMap<usize, Rational> = flow.iter().cloned().collect();
    let mut out = Vec::new();
    while let Some((&start, _)) = remaining.iter().next() {
        let mut path: Vec<usize> = vec![start];
        let mut seen_at: BTreeMap<usize, usize> = BTreeMap::new();
        seen_at.insert(p.edges[start].from, 0);
        let mut cursor = p.edges[start].to;
        let cycle = loop {
            if let Some(&i) = seen_at.get(&cursor) {
                break path.split_off(i);
            }
            seen_at.insert(cursor, path.len());
            let next = p
                .out_edges(cursor)
                .iter()
                .copied()
                .find(|e| remaining.contains_key(e))
                .expect("flow conservation guarantees an outgoing positive edge");
            path.push(next);
            cursor = p.edges[next].to;
        };
        let bottleneck = cycle
            .iter()
            .map(|e| remaining[e].clone())
            .min()
            .expect("cycle is nonempty");
        for e in &cycle {
            let left = remaining[e].clone() - &bottleneck;
            if left.is_zero() {
                remaining.remove(e);
            } else {
                remaining.insert(*e, left);
            }
        }
        out.push((rotate_to_smallest(p, cycle), bottleneck));
    }
    out
}

fn rotate_to_smallest(p: &ProductAutomaton, cycle: Vec<usize>) -> Vec<usize> {
    let pivot = (0..cycle.len())
        .min_by_key(|&i| p.edges[cycle[i]].from)
        .unwrap();
    let mut rotated = cycle;
    rotated.rotate_left(pivot);
    rotated
}

/// Deterministic BFS path (edge-id order) from `from` to `to`, restricted
/// to vertices allowed by `filter`. Empty when `from == to`.
fn shortest_path(
    p: &ProductAutomaton,
    from: usize,
    to: usize,
    filter: &dyn Fn(usize) -> bool,
) -> Vec<usize> {
    if from == to {
        return Vec::new();
    }
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::from([from]);
    'bfs: while let Some(v) = queue.pop_front() {
        for &e in p.out_edges(v) {
            let w = p.edges[e].to;
            if !filter(w) || w == from || parent.contains_key(&w) {
                continue;
            }
            parent.insert(w, e);
            if w == to {
                break 'bfs;
            }
            queue.push_back(w);
        }
    }
    let mut path = Vec::new();
    let mut cursor = to;
    while cursor != from {
        let e = *parent
            .get(&cursor)
            .expect("target reachable inside the component");
        path.push(e);
        cursor = p.edges[e].from;
    }
    path.reverse();
    path
}

/// Pull-based emitter for [`WitnessSchedule`]; a pure function of the
/// schedule, so repeated cursors yield identical streams.
pub struct ScheduleCursor<'a> {
    schedule: &'a WitnessSchedule,
    buf: std::collections::VecDeque<usize>,
    vertex: usize,
    started: bool,
    round: u64,
    family: usize,
    passes: Vec<u64>,
    len: u64,
    sums: Sums,
}

/// Exact running weight sums. Integer sums over the schedule's common
/// denominators are exact and cheap; the rational form is the fallback for
/// weights too large to scale.
enum Sums {
    Scaled(Vec<i128>),
    Exact(Vec<Rational>),
}

impl<'a> ScheduleCursor<'a> {
    fn new(schedule: &'a WitnessSchedule) -> Self {
        let dims = schedule.product.dimension;
        let sums = if schedule.scaled.is_some() {
            Sums::Scaled(vec![0; dims])
        } else {
            Sums::Exact(vec![Rational::zero(); dims])
        };
        ScheduleCursor {
            schedule,
            buf: std::collections::VecDeque::new(),
            vertex: schedule.product.initial,
            started: false,
            round: 1,
            family: 0,
            passes: vec![0; schedule.families.len()],
            len: 0,
            sums,
        }
    }

    fn push_edge(&mut self, e: usize) {
        let edge = &self.schedule.product.edges[e];
        debug_assert_eq!(edge.from, self.vertex, "schedule must emit a valid run");
        self.vertex = edge.to;
        self.len += 1;
        match &mut self.sums {
            Sums::Scaled(sums) => {
                let scaled = &self.schedule.scaled.as_ref().unwrap().edge[e];
                for (sum, w) in sums.iter_mut().zip(scaled) {
                    *sum += i128::from(*w);
                }
            }
            Sums::Exact(sums) => {
                for (sum, w) in sums.iter_mut().zip(&edge.weight) {
                    *sum += w;
                }
            }
        }
        self.buf.push_back(edge.symbol);
    }

    fn push_path(&mut self, path: &[usize]) {
        for &e in path {
            self.push_edge(e);
        }
    }

    /// `avg(dim) >= bound - margin`, exactly. Only evaluated at pass
    /// boundaries, so big-integer cross multiplication is fine.
    fn recovered(&self, dim: usize, margin: &Rational) -> bool {
        let bound = &self.schedule.thresholds[dim] - margin;
        let len = BigInt::from(self.len);
        match &self.sums {
            Sums::Scaled(sums) => {
                // sums / (denom * len) >= p/q  <=>  sums * q >= p * denom * len
                let denom = &self.schedule.scaled.as_ref().unwrap().denom[dim];
                BigInt::from(sums[dim]) * bound.denom() >= bound.numer() * denom * len
            }
            Sums::Exact(sums) => sums[dim] >= bound * Rational::from(len),
        }
    }

    fn block_done(&self) -> bool {
        if self.passes[self.family] < self.round {
            return false;
        }
        let half = Rational::new(1, 2).unwrap() * &self.schedule.epsilon;
        for dim in 0..self.schedule.lim_inf_count {
            if !self.recovered(dim, &half) {
                return false;
            }
        }
        if let Some(dim) = self.schedule.families[self.family].sup_dim {
            let tight = Rational::new(9, 10).unwrap() * &self.schedule.epsilon;
            if !self.recovered(dim, &tight) {
                return false;
            }
        }
        true
    }

    fn produce(&mut self) {
        if !self.started {
            self.started = true;
            let access = self.schedule.access.clone();
            self.push_path(&access);
            if !self.buf.is_empty() {
                return;
            }
        }
        // one pass of the current family's multi-cycle, scaled by its pass
        // counter; afterwards, possibly hand over to the next family
        self.passes[self.family] += 1;
        let scale = self.passes[self.family];
        let plan = self.schedule.families[self.family].clone();
        for (i, cycle) in plan.cycles.iter().enumerate() {
            for _ in 0..cycle.multiplicity * scale {
                let edges = cycle.edges.clone();
                self.push_path(&edges);
            }
            self.push_path(&plan.links[i]);
        }
        if self.block_done() {
            let link = self.schedule.family_links[self.family].clone();
            self.push_path(&link);
            self.family += 1;
            if self.family == self.schedule.families.len() {
                self.family = 0;
                self.round += 1;
            }
        }
    }
}

impl Iterator for ScheduleCursor<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.buf.is_empty() {
            self.produce();
        }
        self.buf.pop_front()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::testutil::*;
    use crate::automata::WeightedAutomaton;
    use std::sync::Arc;

    fn inf(a: &WeightedAutomaton) -> Expression {
        Expression::AtomInf(Arc::new(a.clone()))
    }

    fn sup(a: &WeightedAutomaton) -> Expression {
        Expression::AtomSup(Arc::new(a.clone()))
    }

    fn eps() -> Rational {
        r(1, 100)
    }

    #[test]
    fn min_inf_schedule_shape() {
        let e = Expression::min(inf(&a1()), inf(&a2()));
        let s = witness_schedule(&e, &eps(), &EngineOptions::default()).unwrap();
        assert_eq!(s.families.len(), 1);
        assert_eq!(s.families[0].cycles.len(), 2);
        assert!(s.families[0].cycles.iter().all(|c| c.multiplicity == 1));
        // growing passes of the two-loop multi-cycle
        let prefix = s.emit_prefix(12);
        let expected: Vec<String> = "a b a a b b a a a b b b"
            .split_whitespace()
            .map(str::to_string)
            .collect();
        assert_eq!(prefix, expected);
        // prefixes nest
        assert_eq!(s.emit_prefix(5), expected[..5].to_vec());
        assert_eq!(s.emit_prefix(12), s.emit_prefix(12));
    }

    #[test]
    fn single_atom_repeats_best_cycle() {
        let e = inf(&a1());
        let s = witness_schedule(&e, &eps(), &EngineOptions::default()).unwrap();
        let prefix = s.emit_prefix(16);
        assert!(prefix.iter().all(|s| s == "a"));
    }

    #[test]
    fn sup_families_alternate_with_recovery() {
        let e = Expression::min(sup(&a1()), sup(&a2()));
        let s = witness_schedule(&e, &eps(), &EngineOptions::default()).unwrap();
        assert_eq!(s.families.len(), 2);
        let prefix: String = s.emit_prefix(200).join("");
        // first a-block is a single symbol, then b recovers to 1 - 9eps/10
        assert!(prefix.starts_with("ab"));
        let first_a_back = prefix[1..].find('a').unwrap() + 1;
        assert!(first_a_back > 100, "b-block too short: {first_a_back}");
    }

    #[test]
    fn connecting_paths_between_cycle_anchors() {
        // Two cycles at different vertices carry the optimum, so the
        // multi-cycle needs real connecting paths, and the initial state
        // sits outside the winning component, so the access path is
        // nonempty: u -> {s, t} with the payoffs on the two b-loops.
        let build = |name: &str, pay_s: i64, pay_t: i64| {
            WeightedAutomaton::new(
                name,
                &["a", "b"],
                &["u", "s", "t"],
                "u",
                &[
                    ("u", "a", "s", Rational::zero()),
                    ("u", "b", "s", Rational::zero()),
                    ("s", "a", "t", Rational::zero()),
                    ("t", "a", "s", Rational::zero()),
                    ("s", "b", "s", Rational::integer(pay_s)),
                    ("t", "b", "t", Rational::integer(pay_t)),
                ],
            )
            .unwrap()
        };
        let d1 = build("D1", 1, 0);
        let d2 = build("D2", 0, 1);
        let e = Expression::min(inf(&d1), inf(&d2));
        let s = witness_schedule(&e, &eps(), &EngineOptions::default()).unwrap();
        assert_eq!(s.families.len(), 1);
        assert_eq!(s.families[0].cycles.len(), 2);
        assert!(!s.access.is_empty(), "initial vertex lies outside the component");
        assert!(
            s.families[0].links.iter().any(|l| !l.is_empty()),
            "anchors differ, so some connecting path is nonempty"
        );

        // the emitted word is a valid run whose minimum running average
        // converges toward 1/2 - epsilon despite the connector overhead
        let p = s.product();
        let mut vertex = p.initial;
        let mut sums = vec![Rational::zero(); 2];
        let bound = r(1, 2) - eps();
        let mut last_violation = 0usize;
        for (i, symbol) in s.symbols().take(150_000).enumerate() {
            let edge = p.edge_for(vertex, symbol).clone();
            vertex = edge.to;
            for (dim, w) in edge.weight.iter().enumerate() {
                sums[dim] += w;
            }
            let len = Rational::integer((i + 1) as i64);
            let min_avg = sums.iter().map(|s| s / &len).min().unwrap();
            if min_avg < bound {
                last_violation = i + 1;
            }
        }
        assert!(
            last_violation <= 60_000,
            "running minimum still dips at position {last_violation}"
        );
    }

    #[test]
    fn emitted_prefix_is_a_valid_run() {
        let e = Expression::min(inf(&a3()), sup(&a1()));
        let s = witness_schedule(&e, &eps(), &EngineOptions::default()).unwrap();
        let p = s.product();
        let mut vertex = p.initial;
        for symbol in s.symbols().take(5000) {
            let edge = p.edge_for(vertex, symbol);
            vertex = edge.to;
        }
    }

    #[test]
    fn min_inf_running_averages_converge() {
        let e = Expression::min(inf(&a1()), inf(&a2()));
        let s = witness_schedule(&e, &eps(), &EngineOptions::default()).unwrap();
        let p = s.product();
        let mut vertex = p.initial;
        let mut sums = vec![Rational::zero(); 2];
        let bound = r(1, 2) - eps();
        let mut last_violation = 0usize;
        for (i, symbol) in s.symbols().take(50_000).enumerate() {
            let edge = p.edge_for(vertex, symbol).clone();
            vertex = edge.to;
            for (dim, w) in edge.weight.iter().enumerate() {
                sums[dim] += w;
            }
            let len = Rational::integer((i + 1) as i64);
            let min_avg = sums.iter().map(|s| s / &len).min().unwrap();
            if min_avg < bound {
                last_violation = i + 1;
            }
        }
        assert!(last_violation <= 10_000, "violations persist to {last_violation}");
    }
}
