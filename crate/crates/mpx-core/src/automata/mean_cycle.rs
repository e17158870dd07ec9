use super::{ProductAutomaton, SccPartition};
use crate::numerics::Rational;

/// Maximum cycle mean of one weight dimension inside a strongly connected
/// component, via Karp's dynamic program on negated weights. Polynomial and
/// exact; it never enumerates cycles.
pub fn max_mean_cycle(
    p: &ProductAutomaton,
    partition: &SccPartition,
    component: usize,
    dim: usize,
) -> Rational {
    let comp = partition.component(component);
    assert!(comp.has_cycle, "component {component} has no cycle");
    assert!(dim < p.dimension, "dimension {dim} out of range");

    let n = comp.vertices.len();
    let local = |v: usize| comp.vertices.binary_search(&v).expect("vertex in component");
    let edges: Vec<(usize, usize, Rational)> = comp
        .internal_edges
        .iter()
        .map(|&e| {
            let edge = &p.edges[e];
            (local(edge.from), local(edge.to), -&edge.weight[dim])
        })
        .collect();

    // dist[k][v] = minimum weight of a walk of exactly k edges from the
    // source (the component's smallest vertex) to v.
    let mut dist: Vec<Vec<Option<Rational>>> = vec![vec![None; n]; n + 1];
    dist[0][0] = Some(Rational::zero());
    for k in 1..=n {
        for &(u, v, ref w) in &edges {
            if let Some(du) = dist[k - 1][u].clone() {
                let cand = du + w;
                match &dist[k][v] {
                    Some(cur) if *cur <= cand => {}
                    _ => dist[k][v] = Some(cand),
                }
            }
        }
    }

    let mut best: Option<Rational> = None;
    for v in 0..n {
        let dn = match &dist[n][v] {
            Some(d) => d,
            None => continue,
        };
        let mut worst: Option<Rational> = None;
        for (k, dk) in dist.iter().enumerate().take(n) {
            if let Some(dk) = &dk[v] {
                let mean = (dn - dk) / &Rational::integer((n - k) as i64);
                if worst.as_ref().is_none_or(|w| mean > *w) {
                    worst = Some(mean);
                }
            }
        }
        let worst = worst.expect("dist[0][source] is always set");
        if best.as_ref().is_none_or(|b| worst < *b) {
            best = Some(worst);
        }
    }
    -best.expect("cyclic component admits walks of every length")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::testutil::*;
    use crate::automata::{build_product, enumerate_simple_cycles, reachable_sccs, AtomKind};

    #[test]
    fn matches_known_values() {
        let a3 = a3();
        let p = build_product(&[(&a3, AtomKind::Inf)]).unwrap();
        let part = reachable_sccs(&p);
        assert_eq!(max_mean_cycle(&p, &part, 0, 0), Rational::one());

        let a1 = a1();
        let a2 = a2();
        let p = build_product(&[(&a1, AtomKind::Inf), (&a2, AtomKind::Sup)]).unwrap();
        let part = reachable_sccs(&p);
        assert_eq!(max_mean_cycle(&p, &part, 0, 0), Rational::one());
        assert_eq!(max_mean_cycle(&p, &part, 0, 1), Rational::one());
    }

    #[test]
    fn constant_weights_give_the_constant() {
        let c = crate::automata::WeightedAutomaton::new(
            "C",
            &["a", "b"],
            &["x", "y"],
            "x",
            &[
                ("x", "a", "y", r(1, 3)),
                ("y", "a", "x", r(1, 3)),
                ("x", "b", "x", r(1, 3)),
                ("y", "b", "y", r(1, 3)),
            ],
        )
        .unwrap();
        let p = build_product(&[(&c, AtomKind::Inf)]).unwrap();
        let part = reachable_sccs(&p);
        assert_eq!(max_mean_cycle(&p, &part, 0, 0), r(1, 3));
    }

    #[test]
    fn agrees_with_enumeration() {
        let a3 = a3();
        let a1 = a1();
        let p = build_product(&[(&a3, AtomKind::Inf), (&a1, AtomKind::Sup)]).unwrap();
        let part = reachable_sccs(&p);
        for comp in part.cyclic_components() {
            let cycles = enumerate_simple_cycles(&p, &part, comp.id, 10_000).unwrap();
            for dim in 0..p.dimension {
                let best = cycles.iter().map(|c| c.average[dim].clone()).max().unwrap();
                assert_eq!(max_mean_cycle(&p, &part, comp.id, dim), best);
            }
        }
    }
}
