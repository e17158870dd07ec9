use crate::numerics::{LinearProgram, Rational, Relation, VarSign};

/// Vertex-enumeration verdict; values agree exactly with the simplex on
/// the instances this oracle accepts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteOutcome {
    Infeasible,
    Unbounded,
    Optimal(Rational),
}

/// Brute-force maximization for small programs over nonnegative variables:
/// enumerate every candidate vertex as the solution of n active
/// constraints, and every extreme ray of the recession cone from n-1
/// active rows plus a normalization. With all variables sign-restricted
/// the feasible region is pointed, so a nonempty region has a vertex and
/// the objective is unbounded exactly when some feasible extreme ray
/// improves it.
///
/// Independent of the simplex path on purpose: no pivoting, no tableau.
pub fn brute_force_max(lp: &LinearProgram) -> BruteOutcome {
    assert!(
        lp.variables.iter().all(|(_, s)| *s == VarSign::NonNegative),
        "vertex enumeration requires nonnegative variables"
    );
    let n = lp.variables.len();
    let objective: Vec<Rational> = lp
        .variables
        .iter()
        .map(|(name, _)| lp.objective.get(name).cloned().unwrap_or_else(Rational::zero))
        .collect();

    // all rows: declared constraints plus one sign row per variable
    let mut rows: Vec<(Vec<Rational>, Relation, Rational)> = lp
        .constraints
        .iter()
        .map(|c| {
            let coeffs = lp
                .variables
                .iter()
                .map(|(name, _)| c.terms.get(name).cloned().unwrap_or_else(Rational::zero))
                .collect();
            (coeffs, c.relation, c.rhs.clone())
        })
        .collect();
    for i in 0..n {
        let mut unit = vec![Rational::zero(); n];
        unit[i] = Rational::one();
        rows.push((unit, Relation::Ge, Rational::zero()));
    }

    let satisfied = |x: &[Rational]| {
        rows.iter().all(|(coeffs, rel, rhs)| {
            let lhs: Rational = coeffs.iter().zip(x).map(|(c, v)| c * v).sum();
            match rel {
                Relation::Ge => lhs >= *rhs,
                Relation::Eq => lhs == *rhs,
            }
        })
    };

    let mut vertices: Vec<Vec<Rational>> = Vec::new();
    for subset in subsets(rows.len(), n) {
        let system: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        let rhs: Vec<Rational> = subset.iter().map(|&i| rows[i].2.clone()).collect();
        if let Some(x) = solve_square(&system, &rhs) {
            if satisfied(&x) && !vertices.contains(&x) {
                vertices.push(x);
            }
        }
    }
    if vertices.is_empty() {
        return BruteOutcome::Infeasible;
    }

    // extreme rays: n-1 active homogeneous rows plus sum(d) = 1
    let ray_valid = |d: &[Rational]| {
        d.iter().all(|v| !v.is_negative())
            && rows.iter().all(|(coeffs, rel, _)| {
                let lhs: Rational = coeffs.iter().zip(d).map(|(c, v)| c * v).sum();
                match rel {
                    Relation::Ge => !lhs.is_negative(),
                    Relation::Eq => lhs.is_zero(),
                }
            })
    };
    for subset in subsets(rows.len(), n.saturating_sub(1)) {
        let mut system: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        let mut rhs: Vec<Rational> = vec![Rational::zero(); system.len()];
        system.push(vec![Rational::one(); n]);
        rhs.push(Rational::one());
        if let Some(d) = solve_square(&system, &rhs) {
            if ray_valid(&d) {
                let gain: Rational = objective.iter().zip(&d).map(|(c, v)| c * v).sum();
                if gain.is_positive() {
                    return BruteOutcome::Unbounded;
                }
            }
        }
    }

    let best = vertices
        .iter()
        .map(|x| objective.iter().zip(x).map(|(c, v)| c * v).sum::<Rational>())
        .max()
        .unwrap();
    BruteOutcome::Optimal(best)
}

/// All index subsets of size `k` from `0..n`, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

/// Exact Gaussian elimination; `None` when the square system is singular.
fn solve_square(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = b.len();
    if a.len() != n || a.iter().any(|row| row.len() != n) {
        return None;
    }
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for cell in m[col][col..].iter_mut() {
            if !cell.is_zero() {
                *cell = std::mem::take(cell) * &inv;
            }
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (c, p) in pivot_row.iter().enumerate().skip(col) {
                if !p.is_zero() {
                    let delta = &f * p;
                    row[c] -= &delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{solve_lp, LinearConstraint, LpOutcome};
    use std::collections::BTreeMap;

    fn terms(pairs: &[(&str, i64)]) -> Vec<(String, Rational)> {
        pairs
            .iter()
            .map(|(n, c)| (n.to_string(), Rational::integer(*c)))
            .collect()
    }

    fn nonneg(names: &[&str]) -> Vec<(String, VarSign)> {
        names
            .iter()
            .map(|n| (n.to_string(), VarSign::NonNegative))
            .collect()
    }

    #[test]
    fn agrees_with_simplex_on_basics() {
        let lp = LinearProgram {
            variables: nonneg(&["x", "y"]),
            constraints: vec![
                LinearConstraint::ge(terms(&[("x", -1), ("y", -2)]), Rational::integer(-4)),
                LinearConstraint::ge(terms(&[("x", -1)]), Rational::integer(-2)),
            ],
            objective: terms(&[("x", 1), ("y", 1)]).into_iter().collect(),
        };
        assert_eq!(brute_force_max(&lp), BruteOutcome::Optimal(Rational::integer(3)));
        match solve_lp(&lp) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, Rational::integer(3)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let infeasible = LinearProgram {
            variables: nonneg(&["x"]),
            constraints: vec![
                LinearConstraint::ge(terms(&[("x", -1)]), Rational::zero()),
                LinearConstraint::ge(terms(&[("x", 1)]), Rational::one()),
            ],
            objective: BTreeMap::new(),
        };
        assert_eq!(brute_force_max(&infeasible), BruteOutcome::Infeasible);

        let unbounded = LinearProgram {
            variables: nonneg(&["x", "y"]),
            constraints: vec![LinearConstraint::ge(terms(&[("x", 1), ("y", -1)]), Rational::zero())],
            objective: terms(&[("x", 1)]).into_iter().collect(),
        };
        assert_eq!(brute_force_max(&unbounded), BruteOutcome::Unbounded);
    }

    #[test]
    fn equality_rows_are_respected() {
        let lp = LinearProgram {
            variables: nonneg(&["x", "y"]),
            constraints: vec![LinearConstraint::eq(terms(&[("x", 1), ("y", 1)]), Rational::one())],
            objective: terms(&[("x", 2), ("y", 1)]).into_iter().collect(),
        };
        assert_eq!(brute_force_max(&lp), BruteOutcome::Optimal(Rational::integer(2)));
    }
}
