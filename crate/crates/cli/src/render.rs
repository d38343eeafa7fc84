//! JSON and human-readable rendering. All JSON keys come out of
//! `serde_json`'s sorted map, so identical inputs print byte-identically.

use serde_json::{json, Value};
use wronsky::multipoly::MPoly;
use wronsky::{MatQ, Rat, UniPoly};

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    Factorial,
}

/// A polynomial as `{"degree": d, "monomial": [c0, ..]}` (or the
/// factorial-basis view); the zero polynomial has degree `null`.
pub fn poly_json(p: &UniPoly, basis: Basis) -> Value {
    let degree = match p.degree() {
        Some(d) => json!(d),
        None => Value::Null,
    };
    let (key, coeffs) = match basis {
        Basis::Monomial => (
            "monomial",
            p.monomial_coeffs().iter().map(Rat::to_string).collect::<Vec<_>>(),
        ),
        Basis::Factorial => (
            "factorial",
            p.factorial_coeffs().iter().map(|c| c.to_string()).collect(),
        ),
    };
    json!({ "degree": degree, key: coeffs })
}

/// A multivariate polynomial as graded-lex sorted terms
/// `{"exp": [e1..eK], "coef": "p/q"}`.
pub fn mpoly_json(p: &MPoly<Rat>) -> Value {
    let terms: Vec<Value> = p
        .terms_graded_lex()
        .into_iter()
        .map(|(exp, coef)| json!({ "exp": exp, "coef": coef.to_string() }))
        .collect();
    json!({ "vars": p.nvars(), "terms": terms })
}

pub fn matrix_json(m: &MatQ) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(Rat::to_string).collect())
        .collect();
    json!({ "n": m.rows(), "m": m.cols(), "rows": rows })
}
