use std::collections::BTreeMap;
use std::fmt;

use super::Rational;

/// Constraint relation. `<=` rows are expressed by negating all
/// coefficients and the right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Eq,
}

/// One linear row `sum(coef * var) REL rhs`. Variable names are unique keys
/// of the term map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub terms: BTreeMap<String, Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn ge(terms: impl IntoIterator<Item = (String, Rational)>, rhs: Rational) -> Self {
        Self::build(terms, Relation::Ge, rhs)
    }

    pub fn eq(terms: impl IntoIterator<Item = (String, Rational)>, rhs: Rational) -> Self {
        Self::build(terms, Relation::Eq, rhs)
    }

    fn build(
        terms: impl IntoIterator<Item = (String, Rational)>,
        relation: Relation,
        rhs: Rational,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (name, coef) in terms {
            if coef.is_zero() {
                continue;
            }
            let slot = map.entry(name).or_insert_with(Rational::zero);
            *slot += &coef;
        }
        map.retain(|_, c: &mut Rational| !c.is_zero());
        LinearConstraint { terms: map, relation, rhs }
    }

    /// Exact check of the row against a (partial) assignment; absent
    /// variables count as zero.
    pub fn satisfied_by(&self, assignment: &BTreeMap<String, Rational>) -> bool {
        let lhs: Rational = self
            .terms
            .iter()
            .map(|(name, coef)| match assignment.get(name) {
                Some(v) => coef * v,
                None => Rational::zero(),
            })
            .sum();
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

impl fmt::Display for LinearConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        }
        for (i, (name, coef)) in self.terms.iter().enumerate() {
            if i == 0 {
                if coef == &Rational::one() {
                    write!(f, "{name}")?;
                } else if *coef == -Rational::one() {
                    write!(f, "-{name}")?;
                } else {
                    write!(f, "{coef} {name}")?;
                }
            } else if coef.is_negative() {
                let mag = coef.abs();
                if mag == Rational::one() {
                    write!(f, " - {name}")?;
                } else {
                    write!(f, " - {mag} {name}")?;
                }
            } else if coef == &Rational::one() {
                write!(f, " + {name}")?;
            } else {
                write!(f, " + {coef} {name}")?;
            }
        }
        let rel = match self.relation {
            Relation::Ge => ">=",
            Relation::Eq => "=",
        };
        write!(f, " {rel} {}", self.rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarSign {
    NonNegative,
    Free,
}

/// A maximization problem over declared variables. An empty objective is a
/// pure feasibility problem. Every variable referenced by a constraint or
/// the objective must be declared.
#[derive(Debug, Clone, Default)]
pub struct LinearProgram {
    pub variables: Vec<(String, VarSign)>,
    pub constraints: Vec<LinearConstraint>,
    pub objective: BTreeMap<String, Rational>,
}

/// Exact solver verdict. An `Optimal` assignment satisfies every constraint
/// exactly and attains the reported value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal {
        value: Rational,
        assignment: BTreeMap<String, Rational>,
    },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        !matches!(self, LpOutcome::Infeasible)
    }

    pub fn optimal_value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn assignment(&self) -> Option<&BTreeMap<String, Rational>> {
        match self {
            LpOutcome::Optimal { assignment, .. } => Some(assignment),
            _ => None,
        }
    }
}

/// True iff the constraints admit a rational solution. Equivalent to
/// [`solve_lp`] with an empty objective not returning `Infeasible`.
pub fn check_feasible(constraints: &[LinearConstraint], variables: &[(String, VarSign)]) -> bool {
    let lp = LinearProgram {
        variables: variables.to_vec(),
        constraints: constraints.to_vec(),
        objective: BTreeMap::new(),
    };
    solve_lp(&lp).is_feasible()
}

/// Two-phase primal simplex over exact rationals.
///
/// Free variables are split into differences of two nonnegative columns;
/// Bland's rule (lowest eligible index enters, ratio ties broken by lowest
/// basis index) prevents cycling and makes the output deterministic.
/// Optimal assignments are basic feasible solutions, so at most one
/// variable per constraint row is nonzero.
pub fn solve_lp(lp: &LinearProgram) -> LpOutcome {
    // Column layout per declared variable: nonnegative vars get one column,
    // free vars a (plus, minus) pair.
    let mut col_of: BTreeMap<&str, (usize, Option<usize>)> = BTreeMap::new();
    let mut ncols = 0;
    for (name, sign) in &lp.variables {
        match sign {
            VarSign::NonNegative => {
                col_of.insert(name, (ncols, None));
                ncols += 1;
            }
            VarSign::Free => {
                col_of.insert(name, (ncols, Some(ncols + 1)));
                ncols += 2;
            }
        }
    }
    let structural = ncols;
    let expand = |terms: &BTreeMap<String, Rational>| -> Vec<Rational> {
        let mut row = vec![Rational::zero(); structural];
        for (name, coef) in terms {
            let (pos, neg) = *col_of
                .get(name.as_str())
                .unwrap_or_else(|| panic!("undeclared variable `{name}` in linear program"));
            row[pos] += coef;
            if let Some(neg) = neg {
                row[neg] -= coef;
            }
        }
        row
    };

    let m = lp.constraints.len();
    let surplus_count = lp
        .constraints
        .iter()
        .filter(|c| c.relation == Relation::Ge)
        .count();
    ncols += surplus_count + m; // surplus columns, then one artificial per row
    let art_start = structural + surplus_count;

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    let mut next_surplus = structural;
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut row = expand(&c.terms);
        row.resize(ncols, Rational::zero());
        if c.relation == Relation::Ge {
            row[next_surplus] = -Rational::one();
            next_surplus += 1;
        }
        let mut b = c.rhs.clone();
        if b.is_negative() {
            for cell in row.iter_mut() {
                *cell = -std::mem::take(cell);
            }
            b = -b;
        }
        row[art_start + i] = Rational::one();
        rows.push(row);
        rhs.push(b);
    }

    let mut tab = Tableau {
        ncols,
        rows,
        rhs,
        basis: (0..m).map(|i| art_start + i).collect(),
        obj: vec![Rational::zero(); ncols],
        value: Rational::zero(),
    };

    // Phase 1: maximize -sum(artificials).
    for j in art_start..ncols {
        tab.obj[j] = -Rational::one();
    }
    tab.price_out();
    tab.run(art_start); // artificials may leave but never re-enter
    if tab.value.is_negative() {
        return LpOutcome::Infeasible;
    }
    tab.evict_artificials(art_start);

    // Phase 2: the real objective over the surviving rows.
    tab.obj = expand(&lp.objective);
    tab.obj.resize(ncols, Rational::zero());
    tab.value = Rational::zero();
    tab.price_out();
    if tab.run(art_start) == SimplexEnd::Unbounded {
        return LpOutcome::Unbounded;
    }

    let mut col_values = vec![Rational::zero(); ncols];
    for (i, &j) in tab.basis.iter().enumerate() {
        col_values[j] = tab.rhs[i].clone();
    }
    let mut assignment = BTreeMap::new();
    for (name, _) in &lp.variables {
        let (pos, neg) = col_of[name.as_str()];
        let mut v = col_values[pos].clone();
        if let Some(neg) = neg {
            v -= &col_values[neg];
        }
        assignment.insert(name.clone(), v);
    }
    let value: Rational = lp
        .objective
        .iter()
        .map(|(name, coef)| coef * &assignment[name])
        .sum();
    debug_assert_eq!(value, tab.value, "objective bookkeeping out of sync");
    debug_assert!(lp.constraints.iter().all(|c| c.satisfied_by(&assignment)));
    LpOutcome::Optimal { value, assignment }
}

#[derive(PartialEq)]
enum SimplexEnd {
    Optimal,
    Unbounded,
}

struct Tableau {
    ncols: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced-cost row; a column with positive entry improves the
    /// (maximization) objective.
    obj: Vec<Rational>,
    value: Rational,
}

impl Tableau {
    /// Eliminates basic columns from the objective row so `obj` holds
    /// reduced costs and `value` the current objective value.
    fn price_out(&mut self) {
        for i in 0..self.rows.len() {
            let j = self.basis[i];
            if self.obj[j].is_zero() {
                continue;
            }
            let f = self.obj[j].clone();
            self.value += &(&f * &self.rhs[i]);
            for col in 0..self.ncols {
                if !self.rows[i][col].is_zero() {
                    let delta = &f * &self.rows[i][col];
                    self.obj[col] -= &delta;
                }
            }
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let factor = self.rows[r][c].clone();
        let inv = factor.recip();
        for cell in self.rows[r].iter_mut() {
            if !cell.is_zero() {
                *cell = std::mem::take(cell) * &inv;
            }
        }
        self.rhs[r] = std::mem::take(&mut self.rhs[r]) * &inv;
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for col in 0..self.ncols {
                if !self.rows[r][col].is_zero() {
                    let delta = &f * &self.rows[r][col];
                    self.rows[i][col] -= &delta;
                }
            }
            let delta = &f * &self.rhs[r];
            self.rhs[i] -= &delta;
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            self.value += &(&f * &self.rhs[r]);
            for col in 0..self.ncols {
                if !self.rows[r][col].is_zero() {
                    let delta = &f * &self.rows[r][col];
                    self.obj[col] -= &delta;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule main loop. Columns `>= forbidden_from` never enter.
    fn run(&mut self, forbidden_from: usize) -> SimplexEnd {
        loop {
            let entering = (0..forbidden_from).find(|&j| self.obj[j].is_positive());
            let entering = match entering {
                Some(j) => j,
                None => return SimplexEnd::Optimal,
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][entering].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][entering];
                let better = match &leaving {
                    None => true,
                    Some((best_i, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*best_i])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                Some((r, _)) => self.pivot(r, entering),
                None => return SimplexEnd::Unbounded,
            }
        }
    }

    /// After a zero-value phase 1, drives leftover artificial variables out
    /// of the basis; rows that cannot be repaired are redundant and dropped.
    fn evict_artificials(&mut self, art_start: usize) {
        let mut drop_rows = Vec::new();
        for i in 0..self.rows.len() {
            if self.basis[i] < art_start {
                continue;
            }
            debug_assert!(self.rhs[i].is_zero());
            match (0..art_start).find(|&j| !self.rows[i][j].is_zero()) {
                Some(j) => self.pivot(i, j),
                None => drop_rows.push(i),
            }
        }
        for &i in drop_rows.iter().rev() {
            self.rows.remove(i);
            self.rhs.remove(i);
            self.basis.remove(i);
        }
    }
}
