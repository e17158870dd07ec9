use super::ProductAutomaton;

/// One strongly connected component of a product automaton.
#[derive(Debug, Clone)]
pub struct SccComponent {
    pub id: usize,
    pub vertices: Vec<usize>,
    /// Edge ids with both endpoints inside the component.
    pub internal_edges: Vec<usize>,
    /// True iff the component contains at least one internal edge, i.e. it
    /// can host an infinite run tail.
    pub has_cycle: bool,
}

#[derive(Debug, Clone)]
pub struct SccPartition {
    /// Component id per vertex.
    pub comp_of: Vec<usize>,
    pub components: Vec<SccComponent>,
}

impl SccPartition {
    pub fn component(&self, id: usize) -> &SccComponent {
        &self.components[id]
    }

    pub fn cyclic_components(&self) -> impl Iterator<Item = &SccComponent> {
        self.components.iter().filter(|c| c.has_cycle)
    }
}

/// Tarjan's algorithm over the reachable product graph. Component ids are
/// renumbered by ascending smallest vertex, so ids are stable for a given
/// product.
pub fn reachable_sccs(p: &ProductAutomaton) -> SccPartition {
    let n = p.vertex_count();
    let mut state = Tarjan {
        p,
        index: 0,
        idx: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        comps: Vec::new(),
    };
    for v in 0..n {
        if state.idx[v].is_none() {
            state.visit(v);
        }
    }
    let mut comps = state.comps;
    for c in &mut comps {
        c.sort_unstable();
    }
    comps.sort_by_key(|c| c[0]);

    let mut comp_of = vec![usize::MAX; n];
    for (id, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = id;
        }
    }
    let mut components: Vec<SccComponent> = comps
        .into_iter()
        .enumerate()
        .map(|(id, vertices)| SccComponent { id, vertices, internal_edges: Vec::new(), has_cycle: false })
        .collect();
    for (edge_id, e) in p.edges.iter().enumerate() {
        if comp_of[e.from] == comp_of[e.to] {
            components[comp_of[e.from]].internal_edges.push(edge_id);
        }
    }
    for c in &mut components {
        c.has_cycle = !c.internal_edges.is_empty();
    }
    debug_assert!(
        components.iter().any(|c| c.has_cycle),
        "total transitions force a cycle in some reachable component"
    );
    SccPartition { comp_of, components }
}

struct Tarjan<'a> {
    p: &'a ProductAutomaton,
    index: usize,
    idx: Vec<Option<usize>>,
    low: Vec<usize>,
    on_stack: Vec<bool>,
    stack: Vec<usize>,
    comps: Vec<Vec<usize>>,
}

impl Tarjan<'_> {
    /// Iterative DFS; product graphs can contain long chains before the
    /// absorbing components.
    fn visit(&mut self, root: usize) {
        let mut call: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(&mut (v, ref mut next)) = call.last_mut() {
            if *next == 0 {
                self.idx[v] = Some(self.index);
                self.low[v] = self.index;
                self.index += 1;
                self.stack.push(v);
                self.on_stack[v] = true;
            }
            if *next < self.p.out_edges(v).len() {
                let w = self.p.edges[self.p.out_edges(v)[*next]].to;
                *next += 1;
                match self.idx[w] {
                    None => call.push((w, 0)),
                    Some(wi) => {
                        if self.on_stack[w] {
                            self.low[v] = self.low[v].min(wi);
                        }
                    }
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                self.low[parent] = self.low[parent].min(self.low[v]);
            }
            if self.low[v] == self.idx[v].unwrap() {
                let mut comp = Vec::new();
                loop {
                    let w = self.stack.pop().expect("tarjan stack underflow");
                    self.on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                self.comps.push(comp);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::testutil::*;
    use crate::automata::{build_product, AtomKind, WeightedAutomaton};
    use crate::numerics::Rational;

    #[test]
    fn single_vertex_component_has_cycle() {
        let a1 = a1();
        let a2 = a2();
        let p = build_product(&[(&a1, AtomKind::Inf), (&a2, AtomKind::Inf)]).unwrap();
        let part = reachable_sccs(&p);
        assert_eq!(part.components.len(), 1);
        assert!(part.components[0].has_cycle);
        assert_eq!(part.components[0].internal_edges.len(), 2);
    }

    #[test]
    fn chain_automaton_splits_into_transients_and_sink() {
        let chain = WeightedAutomaton::new(
            "chain",
            &["a", "b"],
            &["q0", "q1", "q2"],
            "q0",
            &[
                ("q0", "a", "q1", Rational::zero()),
                ("q0", "b", "q1", Rational::zero()),
                ("q1", "a", "q2", Rational::zero()),
                ("q1", "b", "q2", Rational::zero()),
                ("q2", "a", "q2", Rational::one()),
                ("q2", "b", "q2", Rational::one()),
            ],
        )
        .unwrap();
        let p = build_product(&[(&chain, AtomKind::Inf)]).unwrap();
        let part = reachable_sccs(&p);
        assert_eq!(part.components.len(), 3);
        let cyclic: Vec<_> = part.cyclic_components().collect();
        assert_eq!(cyclic.len(), 1);
        assert_eq!(cyclic[0].vertices.len(), 1);
        let transient = part.components.iter().filter(|c| !c.has_cycle).count();
        assert_eq!(transient, 2);
    }

    #[test]
    fn mutually_reachable_states_share_a_component() {
        let a3 = a3();
        let p = build_product(&[(&a3, AtomKind::Inf)]).unwrap();
        let part = reachable_sccs(&p);
        assert_eq!(part.components.len(), 1);
        assert_eq!(part.components[0].vertices, vec![0, 1]);
    }
}
