//! Python bindings: load automata, parse expressions and run the exact
//! decision procedures. Rational values cross the boundary as `p/q`
//! strings so exactness survives the FFI.

use std::str::FromStr;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use mpx_core::engine::{self, EngineOptions, LassoWord};
use mpx_core::Rational;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(text: &str) -> PyResult<Rational> {
    Rational::from_str(text).map_err(err)
}

/// A set of named automata loaded from automaton-format text.
#[pyclass]
#[derive(Default)]
struct Workspace {
    inner: mpx_core::Workspace,
}

#[pymethods]
impl Workspace {
    #[new]
    fn new() -> Self {
        Workspace::default()
    }

    /// Parses one automaton in the text format and adds it under its
    /// declared name.
    fn add_automaton_text(&mut self, text: &str) -> PyResult<()> {
        self.inner.add_automaton_text(text, "<python>").map_err(err)
    }

    fn automaton_names(&self) -> Vec<String> {
        self.inner.names()
    }

    /// Parses an expression such as `min(inf(A1), inf(A2))` against the
    /// loaded automata.
    fn parse_expression(&self, text: &str) -> PyResult<Expression> {
        let inner = self.inner.parse_expression_text(text, "<python>").map_err(err)?;
        Ok(Expression { inner })
    }
}

/// Expression over `inf`/`sup` atoms with `min`, `max` and `sum`.
#[pyclass(skip_from_py_object)]
struct Expression {
    inner: mpx_core::Expression,
}

#[pymethods]
impl Expression {
    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Expression({})", self.inner)
    }

    /// Numerical complement (pointwise negation).
    fn complement(&self) -> Expression {
        Expression { inner: self.inner.complement() }
    }
}

/// Exact maximum value as `(value, piece, scc)`.
#[pyfunction]
fn max_value(e: &Expression) -> PyResult<(String, usize, usize)> {
    let mv = engine::max_value(&e.inner, &EngineOptions::default()).map_err(err)?;
    Ok((mv.value.to_string(), mv.attribution.piece, mv.attribution.scc))
}

/// Emptiness query: `(verdict, value)`. The verdict is true iff some word
/// reaches the threshold.
#[pyfunction]
fn empty(e: &Expression, nu: &str) -> PyResult<(bool, String)> {
    let v = engine::is_empty(&e.inner, &rational(nu)?, &EngineOptions::default()).map_err(err)?;
    Ok((v.answer, v.value.to_string()))
}

/// Universality query: `(verdict, minimum value)`.
#[pyfunction]
fn universal(e: &Expression, nu: &str) -> PyResult<(bool, String)> {
    let v =
        engine::is_universal(&e.inner, &rational(nu)?, &EngineOptions::default()).map_err(err)?;
    Ok((v.answer, v.value.to_string()))
}

/// Pointwise inclusion `e1 <= e2`: `(verdict, max of the difference)`.
#[pyfunction]
fn includes(e1: &Expression, e2: &Expression) -> PyResult<(bool, String)> {
    let v = engine::includes(&e1.inner, &e2.inner, &EngineOptions::default()).map_err(err)?;
    Ok((v.answer, v.value.to_string()))
}

/// Language equivalence: `(verdict, distance)`.
#[pyfunction]
fn equivalent(e1: &Expression, e2: &Expression) -> PyResult<(bool, String)> {
    let v = engine::equivalent(&e1.inner, &e2.inner, &EngineOptions::default()).map_err(err)?;
    Ok((v.answer, v.value.to_string()))
}

/// `sup` over all words of `|e1 - e2|`.
#[pyfunction]
fn distance(e1: &Expression, e2: &Expression) -> PyResult<String> {
    let mv = engine::distance(&e1.inner, &e2.inner, &EngineOptions::default()).map_err(err)?;
    Ok(mv.value.to_string())
}

/// Exact value of the expression on the ultimately periodic word
/// `u . v^omega`, with the word given as symbol lists.
#[pyfunction]
#[pyo3(signature = (e, v, u = vec![]))]
fn eval_lasso(e: &Expression, v: Vec<String>, u: Vec<String>) -> PyResult<String> {
    let alphabet = e.inner.alphabet();
    let word = LassoWord::parse(&u.join(" "), &v.join(" "), alphabet).map_err(err)?;
    let value = engine::evaluate_lasso(&e.inner, &word).map_err(err)?;
    Ok(value.to_string())
}

/// First `n` symbols of a word whose prefix averages certify the maximum
/// value of the winning MAX-free piece up to `epsilon`.
#[pyfunction]
#[pyo3(signature = (e, n, epsilon = "1/100"))]
fn witness_prefix(e: &Expression, n: usize, epsilon: &str) -> PyResult<Vec<String>> {
    let eps = rational(epsilon)?;
    if !eps.is_positive() {
        return Err(PyValueError::new_err("epsilon must be positive"));
    }
    let (_, schedule) =
        engine::witness_for(&e.inner, &eps, &EngineOptions::default()).map_err(err)?;
    Ok(schedule.emit_prefix(n))
}

#[pymodule]
fn mpx_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Workspace>()?;
    m.add_class::<Expression>()?;
    m.add_function(wrap_pyfunction!(max_value, m)?)?;
    m.add_function(wrap_pyfunction!(empty, m)?)?;
    m.add_function(wrap_pyfunction!(universal, m)?)?;
    m.add_function(wrap_pyfunction!(includes, m)?)?;
    m.add_function(wrap_pyfunction!(equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(distance, m)?)?;
    m.add_function(wrap_pyfunction!(eval_lasso, m)?)?;
    m.add_function(wrap_pyfunction!(witness_prefix, m)?)?;
    Ok(())
}
