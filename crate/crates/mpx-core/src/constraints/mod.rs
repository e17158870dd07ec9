//! Builders for the linear constraint systems whose feasibility
//! characterizes nonemptiness:
//!
//! - multi-cycle constraints: one nonnegative variable per simple cycle,
//!   per-dimension average-weight rows and a length normalization;
//! - min-only constraints: one multi-cycle family per lim-sup dimension,
//!   each family coupling every lim-inf dimension with its own lim-sup
//!   dimension;
//! - structural constraints: the threshold rows read off the expression
//!   tree (`min` children dominate their node, `sum` children add up);
//! - circulation constraints: the polynomial-size reformulation of the
//!   min-only system with one flow variable per component-internal edge
//!   and conservation at every vertex. A circulation decomposes into
//!   simple cycles inside its component, so feasibility is unchanged.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::automata::{ProductAutomaton, SccPartition, SimpleCycle};
use crate::expressions::{AtomVector, Expression};
use crate::numerics::{LinearConstraint, LinearProgram, Rational, VarSign};

#[derive(Debug, Error)]
pub enum ConstraintsError {
    #[error("no-cycles")]
    NoCycles,
    #[error("threshold dimension mismatch: {expected} dims, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// Where a row came from, for `--dump-constraints` output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    MultiCycle,
    MinOnly,
    Structural,
}

impl Provenance {
    fn tag(self) -> &'static str {
        match self {
            Provenance::MultiCycle => "multi-cycle",
            Provenance::MinOnly => "min-only",
            Provenance::Structural => "structural",
        }
    }
}

/// A set of rows plus the sign-annotated declarations of every variable
/// they mention.
#[derive(Debug, Clone, Default)]
pub struct ConstraintSystem {
    pub variables: Vec<(String, VarSign)>,
    pub rows: Vec<(LinearConstraint, Provenance)>,
}

impl ConstraintSystem {
    pub fn merge(mut self, other: ConstraintSystem) -> ConstraintSystem {
        for (name, sign) in other.variables {
            if !self.variables.iter().any(|(n, _)| *n == name) {
                self.variables.push((name, sign));
            }
        }
        self.rows.extend(other.rows);
        self
    }

    pub fn constraints(&self) -> Vec<LinearConstraint> {
        self.rows.iter().map(|(c, _)| c.clone()).collect()
    }

    pub fn into_lp(self, objective: BTreeMap<String, Rational>) -> LinearProgram {
        LinearProgram {
            variables: self.variables,
            constraints: self.rows.into_iter().map(|(c, _)| c).collect(),
            objective,
        }
    }

    /// Line-per-row text form: declarations first, then tagged rows.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, sign) in &self.variables {
            let sign = match sign {
                VarSign::NonNegative => ">= 0",
                VarSign::Free => "free",
            };
            writeln!(out, "var {name} {sign}").unwrap();
        }
        for (row, provenance) in &self.rows {
            writeln!(out, "[{}] {row}", provenance.tag()).unwrap();
        }
        out
    }
}

/// Per-dimension thresholds: either fixed rationals or the free threshold
/// variables of an expression's atoms.
#[derive(Debug, Clone)]
pub enum Thresholds {
    Fixed(Vec<Rational>),
    Vars(Vec<String>),
}

impl Thresholds {
    pub fn dimension(&self) -> usize {
        match self {
            Thresholds::Fixed(v) => v.len(),
            Thresholds::Vars(v) => v.len(),
        }
    }

    /// Returns the row `terms >= r_m`, folding a variable threshold into
    /// the left-hand side.
    fn bound_row(&self, mut terms: Vec<(String, Rational)>, dim: usize) -> LinearConstraint {
        match self {
            Thresholds::Fixed(r) => LinearConstraint::ge(terms, r[dim].clone()),
            Thresholds::Vars(names) => {
                terms.push((names[dim].clone(), -Rational::one()));
                LinearConstraint::ge(terms, Rational::zero())
            }
        }
    }
}

/// The free threshold variables of a MAX-free expression: one `r@<path>`
/// per atom and per internal node, except that the root operator's
/// threshold is the query threshold `nu` itself. A tree with `k` atoms
/// therefore declares at most `2k` variables including `nu`.
#[derive(Debug, Clone)]
pub struct ThresholdVariables {
    /// Aligned with the atom vector's dimensions.
    pub atom_vars: Vec<String>,
    pub nu: String,
    pub declarations: Vec<(String, VarSign)>,
}

impl ThresholdVariables {
    pub fn for_expression(e: &Expression, atoms: &AtomVector) -> ThresholdVariables {
        let atom_vars = atoms
            .atoms
            .iter()
            .map(|a| format!("r@{}", a.node_path))
            .collect();
        let mut declarations = Vec::new();
        collect_node_vars(e, String::new(), true, &mut declarations);
        declarations.push(("nu".to_string(), VarSign::Free));
        ThresholdVariables { atom_vars, nu: "nu".to_string(), declarations }
    }

    pub fn as_thresholds(&self) -> Thresholds {
        Thresholds::Vars(self.atom_vars.clone())
    }
}

fn collect_node_vars(
    e: &Expression,
    path: String,
    is_root: bool,
    out: &mut Vec<(String, VarSign)>,
) {
    match e {
        Expression::AtomInf(_) | Expression::AtomSup(_) => {
            out.push((format!("r@{path}"), VarSign::Free));
        }
        Expression::Min(a, b) | Expression::Sum(a, b) => {
            if !is_root {
                out.push((format!("r@{path}"), VarSign::Free));
            }
            collect_node_vars(a, format!("{path}L"), false, out);
            collect_node_vars(b, format!("{path}R"), false, out);
        }
        Expression::Max(_, _) => panic!("threshold variables require a MAX-free expression"),
    }
}

/// The threshold rows of the expression tree: for a `min` node each child
/// threshold dominates the node's, for a `sum` node the children add up to
/// at least the node's. The root's threshold is `nu`; a bare atom
/// contributes `r@ >= nu`. All rows are of the form
/// `sum(coef * var) >= var-or-constant` and there are O(k^2) of them.
pub fn structural_constraints(e: &Expression, vars: &ThresholdVariables) -> ConstraintSystem {
    let mut rows = Vec::new();
    emit_structural(e, String::new(), true, vars, &mut rows);
    ConstraintSystem {
        variables: vars.declarations.clone(),
        rows: rows.into_iter().map(|c| (c, Provenance::Structural)).collect(),
    }
}

fn emit_structural(
    e: &Expression,
    path: String,
    is_root: bool,
    vars: &ThresholdVariables,
    rows: &mut Vec<LinearConstraint>,
) {
    let threshold = if is_root { vars.nu.clone() } else { format!("r@{path}") };
    match e {
        Expression::AtomInf(_) | Expression::AtomSup(_) => {
            if is_root {
                rows.push(LinearConstraint::ge(
                    vec![
                        (format!("r@{path}"), Rational::one()),
                        (vars.nu.clone(), -Rational::one()),
                    ],
                    Rational::zero(),
                ));
            }
        }
        Expression::Min(a, b) => {
            for (child, side) in [(a, "L"), (b, "R")] {
                rows.push(LinearConstraint::ge(
                    vec![
                        (format!("r@{path}{side}"), Rational::one()),
                        (threshold.clone(), -Rational::one()),
                    ],
                    Rational::zero(),
                ));
                emit_structural(child, format!("{path}{side}"), false, vars, rows);
            }
        }
        Expression::Sum(a, b) => {
            rows.push(LinearConstraint::ge(
                vec![
                    (format!("r@{path}L"), Rational::one()),
                    (format!("r@{path}R"), Rational::one()),
                    (threshold.clone(), -Rational::one()),
                ],
                Rational::zero(),
            ));
            emit_structural(a, format!("{path}L"), false, vars, rows);
            emit_structural(b, format!("{path}R"), false, vars, rows);
        }
        Expression::Max(_, _) => panic!("structural constraints require a MAX-free expression"),
    }
}

/// The multi-cycle rows for one strongly connected component: a
/// nonnegative variable per cycle, `sum(X_c * weight_m(c)) >= r_m` per
/// dimension and the normalization `sum(|c| * X_c) = 1`.
pub fn multi_cycle_constraints(
    cycles: &[SimpleCycle],
    thresholds: &Thresholds,
    var_prefix: &str,
) -> Result<ConstraintSystem, ConstraintsError> {
    build_cycle_family(
        cycles,
        thresholds,
        &(0..thresholds.dimension()).collect::<Vec<_>>(),
        var_prefix,
        Provenance::MultiCycle,
    )
}

fn build_cycle_family(
    cycles: &[SimpleCycle],
    thresholds: &Thresholds,
    row_dims: &[usize],
    var_prefix: &str,
    provenance: Provenance,
) -> Result<ConstraintSystem, ConstraintsError> {
    if cycles.is_empty() {
        return Err(ConstraintsError::NoCycles);
    }
    if let Some(c) = cycles.first() {
        let dims = c.weight.len();
        if thresholds.dimension() > dims {
            return Err(ConstraintsError::DimensionMismatch {
                expected: dims,
                got: thresholds.dimension(),
            });
        }
    }
    let var = |idx: usize| format!("{var_prefix}@c{idx}");
    let variables: Vec<(String, VarSign)> = (0..cycles.len())
        .map(|i| (var(i), VarSign::NonNegative))
        .collect();
    let mut rows = Vec::new();
    for &m in row_dims {
        let terms: Vec<(String, Rational)> = cycles
            .iter()
            .enumerate()
            .map(|(i, c)| (var(i), c.weight[m].clone()))
            .collect();
        rows.push((thresholds.bound_row(terms, m), provenance));
    }
    let norm: Vec<(String, Rational)> = cycles
        .iter()
        .enumerate()
        .map(|(i, c)| (var(i), Rational::integer(c.length as i64)))
        .collect();
    rows.push((LinearConstraint::eq(norm, Rational::one()), provenance));
    Ok(ConstraintSystem { variables, rows })
}

/// One constraint family of the min-only system. `sup_dim` is `None` for
/// the single pseudo-family emitted when the expression has no lim-sup
/// atoms.
#[derive(Debug, Clone)]
pub struct FamilySpec {
    pub index: usize,
    pub sup_dim: Option<usize>,
    pub row_dims: Vec<usize>,
}

/// The family layout for an atom vector: one family per lim-sup dimension,
/// each coupling all lim-inf dimensions with that dimension. With no
/// lim-sup atoms a single family over all dimensions is emitted; with no
/// lim-inf atoms each family constrains only its own dimension.
pub fn family_specs(atoms: &AtomVector) -> Vec<FamilySpec> {
    let j = atoms.lim_inf_count;
    let k = atoms.dimension();
    if j == k {
        return vec![FamilySpec { index: 0, sup_dim: None, row_dims: (0..j).collect() }];
    }
    atoms
        .sup_dims()
        .enumerate()
        .map(|(index, i)| {
            let mut row_dims: Vec<usize> = (0..j).collect();
            row_dims.push(i);
            FamilySpec { index, sup_dim: Some(i), row_dims }
        })
        .collect()
}

/// The min-only constraints over explicit cycle variables: one family per
/// [`family_specs`] entry, each a fresh copy of the multi-cycle system
/// restricted to the family's dimensions.
pub fn min_only_constraints(
    atoms: &AtomVector,
    cycles: &[SimpleCycle],
    thresholds: &Thresholds,
) -> Result<ConstraintSystem, ConstraintsError> {
    let mut system = ConstraintSystem::default();
    for family in family_specs(atoms) {
        let prefix = format!("X{}", family.index);
        system = system.merge(build_cycle_family(
            cycles,
            thresholds,
            &family.row_dims,
            &prefix,
            Provenance::MinOnly,
        )?);
    }
    Ok(system)
}

/// The circulation form of the min-only constraints for one component:
/// per family, nonnegative flow on the component-internal edges,
/// conservation at every vertex, total flow one, and the same
/// average-weight rows as the cycle form. Polynomial in the component
/// size.
pub fn circulation_constraints(
    p: &ProductAutomaton,
    partition: &SccPartition,
    component: usize,
    atoms: &AtomVector,
    thresholds: &Thresholds,
) -> ConstraintSystem {
    let comp = partition.component(component);
    let mut system = ConstraintSystem::default();
    for family in family_specs(atoms) {
        let var = |edge: usize| format!("x{}@e{edge}", family.index);
        let mut fam = ConstraintSystem {
            variables: comp
                .internal_edges
                .iter()
                .map(|&e| (var(e), VarSign::NonNegative))
                .collect(),
            rows: Vec::new(),
        };
        for &v in &comp.vertices {
            let mut terms: Vec<(String, Rational)> = Vec::new();
            for &e in p.in_edges(v) {
                if partition.comp_of[p.edges[e].from] == component {
                    terms.push((var(e), Rational::one()));
                }
            }
            for &e in p.out_edges(v) {
                if partition.comp_of[p.edges[e].to] == component {
                    terms.push((var(e), -Rational::one()));
                }
            }
            let row = LinearConstraint::eq(terms, Rational::zero());
            if !row.terms.is_empty() {
                fam.rows.push((row, Provenance::MinOnly));
            }
        }
        let norm: Vec<(String, Rational)> = comp
            .internal_edges
            .iter()
            .map(|&e| (var(e), Rational::one()))
            .collect();
        fam.rows.push((LinearConstraint::eq(norm, Rational::one()), Provenance::MinOnly));
        for &m in &family.row_dims {
            let terms: Vec<(String, Rational)> = comp
                .internal_edges
                .iter()
                .map(|&e| (var(e), p.edges[e].weight[m].clone()))
                .collect();
            fam.rows.push((thresholds.bound_row(terms, m), Provenance::MinOnly));
        }
        system = system.merge(fam);
    }
    system
}
