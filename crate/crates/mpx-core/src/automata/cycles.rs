use super::{AutomataError, ProductAutomaton, SccPartition};
use crate::numerics::Rational;

/// A vertex-simple cycle, stored as its edge-id sequence. Parallel edges
/// (same endpoints, different symbols) give distinct cycles. The canonical
/// rotation starts at the lexicographically smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleCycle {
    pub edges: Vec<usize>,
    pub length: usize,
    /// Per-dimension sum of edge weights.
    pub weight: Vec<Rational>,
    /// `weight / length`.
    pub average: Vec<Rational>,
}

impl SimpleCycle {
    pub fn from_edges(p: &ProductAutomaton, edges: Vec<usize>) -> SimpleCycle {
        debug_assert!(!edges.is_empty());
        let length = edges.len();
        let mut weight = vec![Rational::zero(); p.dimension];
        for &e in &edges {
            for (dim, w) in p.edges[e].weight.iter().enumerate() {
                weight[dim] += w;
            }
        }
        let len = Rational::integer(length as i64);
        let average = weight.iter().map(|w| w / &len).collect();
        SimpleCycle { edges, length, weight, average }
    }

    pub fn start_vertex(&self, p: &ProductAutomaton) -> usize {
        p.edges[self.edges[0]].from
    }

    /// Vertices visited in order, starting (and implicitly ending) at the
    /// canonical start vertex.
    pub fn vertices(&self, p: &ProductAutomaton) -> Vec<usize> {
        self.edges.iter().map(|&e| p.edges[e].from).collect()
    }
}

/// Complete, duplicate-free (up to rotation) enumeration of the simple
/// cycles inside one strongly connected component, following Johnson's
/// algorithm with edge-level expansion so parallel edges are kept apart.
///
/// Enumeration is oracle and witness machinery; instances whose cycle count
/// exceeds `cap` signal that the circulation formulation must be used
/// instead.
pub fn enumerate_simple_cycles(
    p: &ProductAutomaton,
    partition: &SccPartition,
    component: usize,
    cap: usize,
) -> Result<Vec<SimpleCycle>, AutomataError> {
    let comp = partition.component(component);
    let n = p.vertex_count();
    let mut internal = vec![false; p.edges.len()];
    for &e in &comp.internal_edges {
        internal[e] = true;
    }

    let mut cycles: Vec<SimpleCycle> = Vec::new();
    let mut blocked = vec![false; n];
    let mut blist: Vec<Vec<usize>> = vec![Vec::new(); n];

    for &start in &comp.vertices {
        // Only targets >= start participate, so every cycle is discovered
        // exactly once, rooted at its smallest vertex.
        let allowed_edges = |v: usize| -> Vec<usize> {
            p.out_edges(v)
                .iter()
                .copied()
                .filter(|&e| internal[e] && p.edges[e].to >= start)
                .collect()
        };
        for &v in &comp.vertices {
            blocked[v] = false;
            blist[v].clear();
        }
        blocked[start] = true;

        struct Frame {
            vertex: usize,
            edges: Vec<usize>,
            next: usize,
            found: bool,
        }
        let mut stack = vec![Frame {
            vertex: start,
            edges: allowed_edges(start),
            next: 0,
            found: false,
        }];
        let mut path_edges: Vec<usize> = Vec::new();

        while let Some(frame) = stack.last_mut() {
            if frame.next < frame.edges.len() {
                let e = frame.edges[frame.next];
                frame.next += 1;
                let w = p.edges[e].to;
                if w == start {
                    frame.found = true;
                    let mut edges = path_edges.clone();
                    edges.push(e);
                    if cycles.len() == cap {
                        return Err(AutomataError::CycleCapExceeded { cap });
                    }
                    cycles.push(SimpleCycle::from_edges(p, edges));
                } else if !blocked[w] {
                    path_edges.push(e);
                    blocked[w] = true;
                    stack.push(Frame { vertex: w, edges: allowed_edges(w), next: 0, found: false });
                }
                continue;
            }
            let Frame { vertex: v, edges, found, .. } = stack.pop().unwrap();
            if found {
                unblock(v, &mut blocked, &mut blist);
            } else {
                for e in edges {
                    let w = p.edges[e].to;
                    if !blist[w].contains(&v) {
                        blist[w].push(v);
                    }
                }
            }
            if let Some(parent) = stack.last_mut() {
                path_edges.pop();
                parent.found |= found;
            }
        }
    }
    Ok(cycles)
}

fn unblock(v: usize, blocked: &mut [bool], blist: &mut [Vec<usize>]) {
    let mut work = vec![v];
    while let Some(u) = work.pop() {
        blocked[u] = false;
        for w in std::mem::take(&mut blist[u]) {
            if blocked[w] {
                work.push(w);
            }
        }
    }
}
