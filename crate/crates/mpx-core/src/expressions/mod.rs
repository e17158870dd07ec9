//! Expression AST over `inf`/`sup` atoms combined with `min`, `max` and
//! `sum`, plus the rewrites the decision procedures rely on: numerical
//! complement and splitting away every `max` operator.

mod parse;

pub use parse::parse_expression;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::automata::{AtomKind, WeightedAutomaton};

#[derive(Debug, Error)]
pub enum ExpressionError {
    #[error("{origin}:{line}:{col}: {message}")]
    Syntax {
        origin: String,
        line: usize,
        col: usize,
        message: String,
    },
    #[error("unknown automaton `{0}`")]
    UnknownAutomaton(String),
    #[error("alphabet-mismatch: `{0}` does not share the expression alphabet")]
    AlphabetMismatch(String),
    #[error("contains-max")]
    ContainsMax,
    #[error("piece-cap-exceeded({cap})")]
    PieceCapExceeded { cap: usize },
}

/// Binary expression tree. Atoms hold shared, immutable automata; derived
/// (weight-negated) automata are created by [`Expression::complement`] and
/// never written back to disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expression {
    AtomInf(Arc<WeightedAutomaton>),
    AtomSup(Arc<WeightedAutomaton>),
    Min(Box<Expression>, Box<Expression>),
    Max(Box<Expression>, Box<Expression>),
    Sum(Box<Expression>, Box<Expression>),
}

/// One atom occurrence of a MAX-free expression, tied to its product
/// dimension. `node_path` is the L/R path of the occurrence in the AST and
/// doubles as the threshold-variable name suffix.
#[derive(Debug, Clone)]
pub struct AtomOccurrence {
    pub automaton: Arc<WeightedAutomaton>,
    pub kind: AtomKind,
    pub node_path: String,
}

/// Ordered atoms of a MAX-free expression: the lim-inf atoms come first
/// (there are `lim_inf_count` of them), then the lim-sup atoms; within each
/// group the order is the left-to-right AST order. Every occurrence gets
/// its own dimension, even repeated references to one automaton.
#[derive(Debug, Clone)]
pub struct AtomVector {
    pub atoms: Vec<AtomOccurrence>,
    pub lim_inf_count: usize,
}

impl AtomVector {
    pub fn dimension(&self) -> usize {
        self.atoms.len()
    }

    pub fn sup_dims(&self) -> std::ops::Range<usize> {
        self.lim_inf_count..self.atoms.len()
    }
}

impl Expression {
    pub fn min(a: Expression, b: Expression) -> Expression {
        Expression::Min(Box::new(a), Box::new(b))
    }

    pub fn max(a: Expression, b: Expression) -> Expression {
        Expression::Max(Box::new(a), Box::new(b))
    }

    pub fn sum(a: Expression, b: Expression) -> Expression {
        Expression::Sum(Box::new(a), Box::new(b))
    }

    pub fn contains_max(&self) -> bool {
        match self {
            Expression::AtomInf(_) | Expression::AtomSup(_) => false,
            Expression::Max(_, _) => true,
            Expression::Min(a, b) | Expression::Sum(a, b) => {
                a.contains_max() || b.contains_max()
            }
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Expression::AtomInf(_) | Expression::AtomSup(_) => 1,
            Expression::Min(a, b) | Expression::Max(a, b) | Expression::Sum(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    /// The shared alphabet of the referenced automata.
    pub fn alphabet(&self) -> &[String] {
        match self {
            Expression::AtomInf(a) | Expression::AtomSup(a) => &a.alphabet,
            Expression::Min(a, _) | Expression::Max(a, _) | Expression::Sum(a, _) => a.alphabet(),
        }
    }

    /// Numerical complement: pointwise negation, realized structurally.
    /// `-min` becomes `max` of complements (and vice versa), `-sum` the sum
    /// of complements, and atoms flip their kind on the weight-negated
    /// automaton. Applying it twice restores the expression exactly.
    pub fn complement(&self) -> Expression {
        match self {
            Expression::AtomInf(a) => Expression::AtomSup(Arc::new(a.negated())),
            Expression::AtomSup(a) => Expression::AtomInf(Arc::new(a.negated())),
            Expression::Min(a, b) => Expression::max(a.complement(), b.complement()),
            Expression::Max(a, b) => Expression::min(a.complement(), b.complement()),
            Expression::Sum(a, b) => Expression::sum(a.complement(), b.complement()),
        }
    }

    /// Decomposes the expression into MAX-free pieces whose pointwise
    /// maximum equals the expression: `max` nodes concatenate the pieces of
    /// their children, `min`/`sum` nodes take the cross product (both
    /// distribute over `max`). Every piece is at most as large as the
    /// input; at most `2^(#max nodes)` pieces, guarded by `cap`.
    pub fn split_max(&self, cap: usize) -> Result<Vec<Expression>, ExpressionError> {
        let cap_err = || ExpressionError::PieceCapExceeded { cap };
        let pieces = match self {
            Expression::AtomInf(_) | Expression::AtomSup(_) => vec![self.clone()],
            Expression::Max(a, b) => {
                let mut pieces = a.split_max(cap)?;
                pieces.extend(b.split_max(cap)?);
                pieces
            }
            Expression::Min(a, b) | Expression::Sum(a, b) => {
                let left = a.split_max(cap)?;
                let right = b.split_max(cap)?;
                let combine: fn(Expression, Expression) -> Expression = match self {
                    Expression::Min(_, _) => Expression::min,
                    _ => Expression::sum,
                };
                let mut pieces = Vec::with_capacity(left.len() * right.len());
                for l in &left {
                    for r in &right {
                        if pieces.len() == cap {
                            return Err(cap_err());
                        }
                        pieces.push(combine(l.clone(), r.clone()));
                    }
                }
                pieces
            }
        };
        if pieces.len() > cap {
            return Err(cap_err());
        }
        Ok(pieces)
    }

    /// Atom occurrences of a MAX-free expression, lim-inf dimensions first.
    pub fn atom_vector(&self) -> Result<AtomVector, ExpressionError> {
        if self.contains_max() {
            return Err(ExpressionError::ContainsMax);
        }
        let mut inf = Vec::new();
        let mut sup = Vec::new();
        collect_atoms(self, String::new(), &mut inf, &mut sup);
        let lim_inf_count = inf.len();
        inf.extend(sup);
        Ok(AtomVector { atoms: inf, lim_inf_count })
    }
}

fn collect_atoms(
    e: &Expression,
    path: String,
    inf: &mut Vec<AtomOccurrence>,
    sup: &mut Vec<AtomOccurrence>,
) {
    match e {
        Expression::AtomInf(a) => inf.push(AtomOccurrence {
            automaton: a.clone(),
            kind: AtomKind::Inf,
            node_path: path,
        }),
        Expression::AtomSup(a) => sup.push(AtomOccurrence {
            automaton: a.clone(),
            kind: AtomKind::Sup,
            node_path: path,
        }),
        Expression::Min(a, b) | Expression::Sum(a, b) => {
            collect_atoms(a, format!("{path}L"), inf, sup);
            collect_atoms(b, format!("{path}R"), inf, sup);
        }
        Expression::Max(_, _) => unreachable!("checked MAX-free"),
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::AtomInf(a) => write!(f, "inf({})", a.name),
            Expression::AtomSup(a) => write!(f, "sup({})", a.name),
            Expression::Min(a, b) => write!(f, "min({a}, {b})"),
            Expression::Max(a, b) => write!(f, "max({a}, {b})"),
            Expression::Sum(a, b) => write!(f, "({a} + {b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::testutil::{a1, a2};

    fn inf(a: &WeightedAutomaton) -> Expression {
        Expression::AtomInf(Arc::new(a.clone()))
    }

    fn sup(a: &WeightedAutomaton) -> Expression {
        Expression::AtomSup(Arc::new(a.clone()))
    }

    #[test]
    fn complement_rules() {
        let a1 = a1();
        let c = inf(&a1).complement();
        match &c {
            Expression::AtomSup(a) => {
                assert_eq!(a.name, "A1!neg");
                assert_eq!(a.step(0, 0).weight, crate::numerics::Rational::integer(-1));
            }
            other => panic!("expected sup atom, got {other:?}"),
        }
        assert_eq!(c.complement(), inf(&a1));

        let a2 = a2();
        let e = Expression::min(inf(&a1), Expression::sum(sup(&a2), inf(&a1)));
        assert_eq!(e.complement().complement(), e);
    }

    #[test]
    fn split_max_shapes() {
        let a1 = a1();
        let a2 = a2();
        let x = inf(&a1);
        let y = inf(&a2);
        let z = sup(&a2);

        let e = Expression::sum(Expression::max(x.clone(), y.clone()), z.clone());
        let pieces = e.split_max(64).unwrap();
        assert_eq!(
            pieces,
            vec![
                Expression::sum(x.clone(), z.clone()),
                Expression::sum(y.clone(), z.clone())
            ]
        );

        let max_free = Expression::min(x.clone(), y.clone());
        assert_eq!(max_free.split_max(64).unwrap(), vec![max_free.clone()]);

        let nested = Expression::max(Expression::max(x.clone(), y.clone()), z.clone());
        assert_eq!(nested.split_max(64).unwrap(), vec![x.clone(), y.clone(), z.clone()]);

        assert!(matches!(
            nested.split_max(2),
            Err(ExpressionError::PieceCapExceeded { cap: 2 })
        ));
        for piece in e.split_max(64).unwrap() {
            assert!(piece.size() <= e.size());
        }
    }

    #[test]
    fn atom_vector_orders_inf_first() {
        let a1 = a1();
        let a2 = a2();
        let e = Expression::min(sup(&a1), Expression::sum(inf(&a2), inf(&a2)));
        let av = e.atom_vector().unwrap();
        assert_eq!(av.dimension(), 3);
        assert_eq!(av.lim_inf_count, 2);
        assert_eq!(av.atoms[0].node_path, "RL");
        assert_eq!(av.atoms[1].node_path, "RR");
        assert_eq!(av.atoms[2].node_path, "L");
        // repeated references still occupy distinct dimensions
        assert_eq!(av.atoms[0].automaton.name, "A2");
        assert_eq!(av.atoms[1].automaton.name, "A2");

        let with_max = Expression::max(inf(&a1), inf(&a2));
        assert!(matches!(with_max.atom_vector(), Err(ExpressionError::ContainsMax)));
    }
}
