use std::collections::{HashMap, VecDeque};

use super::{AtomKind, AutomataError, WeightedAutomaton};
use crate::numerics::Rational;

/// Edge of a product automaton: one symbol step with the per-dimension
/// weight vector of all component automata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductEdge {
    pub from: usize,
    pub symbol: usize,
    pub to: usize,
    pub weight: Vec<Rational>,
}

/// Synchronized product of `k` weighted automata, restricted to the
/// vertices reachable from the initial state tuple. Deterministic and total
/// on those vertices: the edge count is `|vertices| * |alphabet|`.
#[derive(Debug, Clone)]
pub struct ProductAutomaton {
    pub atoms: Vec<(String, AtomKind)>,
    pub dimension: usize,
    pub alphabet: Vec<String>,
    /// Reachable state tuples; index 0 is the initial vertex.
    pub vertices: Vec<Vec<usize>>,
    pub initial: usize,
    pub edges: Vec<ProductEdge>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
}

impl ProductAutomaton {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Outgoing edge ids of `v`, in symbol order.
    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_edges[v]
    }

    pub fn in_edges(&self, v: usize) -> &[usize] {
        &self.in_edges[v]
    }

    /// The unique edge leaving `v` under `symbol`.
    pub fn edge_for(&self, v: usize, symbol: usize) -> &ProductEdge {
        &self.edges[self.out_edges[v][symbol]]
    }

    pub fn symbol_name(&self, symbol: usize) -> &str {
        &self.alphabet[symbol]
    }
}

/// Builds the reachable product of the given automaton occurrences; the
/// weight vector's `i`-th component is the `i`-th automaton's weight for
/// the same symbol step. All automata must share one alphabet.
pub fn build_product(
    atoms: &[(&WeightedAutomaton, AtomKind)],
) -> Result<ProductAutomaton, AutomataError> {
    let (first, _) = atoms
        .first()
        .ok_or_else(|| AutomataError::AlphabetMismatch("empty atom list".into()))?;
    for (aut, _) in atoms {
        if aut.alphabet != first.alphabet {
            return Err(AutomataError::AlphabetMismatch(format!(
                "`{}` and `{}` have different alphabets",
                first.name, aut.name
            )));
        }
    }
    let alphabet = first.alphabet.clone();
    let k = atoms.len();

    let initial: Vec<usize> = atoms.iter().map(|(a, _)| a.initial).collect();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut vertices = vec![initial.clone()];
    index.insert(initial, 0);

    let mut edges: Vec<ProductEdge> = Vec::new();
    let mut out_edges: Vec<Vec<usize>> = vec![Vec::new()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for symbol in 0..alphabet.len() {
            let mut target = Vec::with_capacity(k);
            let mut weight = Vec::with_capacity(k);
            for (dim, (aut, _)) in atoms.iter().enumerate() {
                let t = aut.step(vertices[v][dim], symbol);
                target.push(t.target);
                weight.push(t.weight.clone());
            }
            let to = match index.get(&target) {
                Some(&id) => id,
                None => {
                    let id = vertices.len();
                    index.insert(target.clone(), id);
                    vertices.push(target);
                    out_edges.push(Vec::new());
                    queue.push_back(id);
                    id
                }
            };
            let edge_id = edges.len();
            edges.push(ProductEdge { from: v, symbol, to, weight });
            out_edges[v].push(edge_id);
        }
    }

    let mut in_edges = vec![Vec::new(); vertices.len()];
    for (id, e) in edges.iter().enumerate() {
        in_edges[e.to].push(id);
    }

    Ok(ProductAutomaton {
        atoms: atoms.iter().map(|(a, kind)| (a.name.clone(), *kind)).collect(),
        dimension: k,
        alphabet,
        vertices,
        initial: 0,
        edges,
        out_edges,
        in_edges,
    })
}
