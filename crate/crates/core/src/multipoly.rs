//! Sparse multivariate polynomials over an exact scalar.
//!
//! Terms map exponent vectors to nonzero coefficients. The number of
//! variables is explicit (`t_1 .. t_K`); the canonical term order used for
//! display and serialization is graded lexicographic.

use crate::poly::Poly;
use crate::scalar::{int, Scalar};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly<T> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, T>,
}

impl<T: Scalar> MPoly<T> {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: T, nvars: usize) -> Self {
        let mut p = MPoly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        MPoly::constant(T::one(), nvars)
    }

    /// The variable with 0-based index `idx`.
    pub fn variable(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars, "variable index out of range");
        let mut exp = vec![0; nvars];
        exp[idx] = 1;
        let mut p = MPoly::zero(nvars);
        p.add_term(exp, T::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of the given exponent vector (zero when absent).
    pub fn coefficient(&self, exp: &[u32]) -> T {
        self.terms.get(exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: T) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
        }
    }

    /// Terms in graded lexicographic order: ascending total degree, and
    /// within a degree descending lex on exponents, so powers of `t_1`
    /// come first.
    pub fn terms_graded_lex(&self) -> Vec<(&Vec<u32>, &T)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(ea, _), (eb, _)| {
            let da: u32 = ea.iter().sum();
            let db: u32 = eb.iter().sum();
            da.cmp(&db).then_with(|| eb.cmp(ea))
        });
        terms
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
            .collect();
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Reinterpret with `nvars >= self.nvars()` by zero-padding exponents.
    pub fn with_nvars(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars, "cannot drop variables");
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| {
                let mut exp = e.clone();
                exp.resize(nvars, 0);
                (exp, v.clone())
            })
            .collect();
        MPoly { nvars, terms }
    }

    /// Substitute `t_1 = x` and `t_j = 0` for `j >= 2`, producing a
    /// univariate polynomial: only terms supported on the first variable
    /// survive.
    pub fn initial_value(&self) -> Poly<T> {
        let mut coeffs: Vec<T> = Vec::new();
        for (exp, c) in &self.terms {
            if exp.iter().skip(1).any(|&e| e != 0) {
                continue;
            }
            let q = exp.first().copied().unwrap_or(0) as usize;
            if coeffs.len() <= q {
                coeffs.resize(q + 1, T::zero());
            }
            coeffs[q] = coeffs[q].clone() + c.clone();
        }
        Poly::from_monomial_coeffs(coeffs)
    }

    /// True when no term involves any of the variables `t_j`, `j >= 2`
    /// (0-based indices `1..`).
    pub fn depends_only_on_first_variable(&self) -> bool {
        self.terms
            .keys()
            .all(|exp| exp.iter().skip(1).all(|&e| e == 0))
    }
}

impl<T: Scalar> Add for &MPoly<T> {
    type Output = MPoly<T>;
    fn add(self, rhs: &MPoly<T>) -> MPoly<T> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &MPoly<T> {
    type Output = MPoly<T>;
    fn sub(self, rhs: &MPoly<T>) -> MPoly<T> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<T: Scalar> Mul for &MPoly<T> {
    type Output = MPoly<T>;
    fn mul(self, rhs: &MPoly<T>) -> MPoly<T> {
        debug_assert_eq!(self.nvars, rhs.nvars);
        let mut out = MPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exp = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<T: Scalar> Neg for &MPoly<T> {
    type Output = MPoly<T>;
    fn neg(self) -> MPoly<T> {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        MPoly {
            nvars: self.nvars,
            terms,
        }
    }
}

impl<T: Scalar> fmt::Display for MPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.terms_graded_lex() {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let is_const = exp.iter().all(|&e| e == 0);
            if is_const || !mag.is_one() {
                write!(f, "{mag}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first_var = true;
            for (k, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first_var {
                    write!(f, "*")?;
                }
                first_var = false;
                write!(f, "t{}", k + 1)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// The complete homogeneous pieces `h_1 .. h_K` as polynomials in the
/// times `t_1 .. t_K`, defined by `exp(sum_i t_i z^i) = 1 + sum_j h_j z^j`.
/// They satisfy the recurrence `j h_j = sum_{k=1}^{j} k t_k h_{j-k}`, the
/// z-derivative of the defining identity. Empty when `K = 0`.
pub fn h_from_t<T: Scalar>(k: usize) -> Vec<MPoly<T>> {
    let mut hs: Vec<MPoly<T>> = Vec::with_capacity(k + 1);
    hs.push(MPoly::one(k));
    for j in 1..=k {
        let mut sum = MPoly::zero(k);
        for i in 1..=j {
            let t_i = MPoly::variable(k, i - 1);
            let term = &t_i * &hs[j - i];
            sum = &sum + &term.scale(&int::<T>(i as i64));
        }
        hs.push(sum.scale(&(T::one() / int::<T>(j as i64))));
    }
    hs.remove(0);
    hs
}

/// Determinant of a small square matrix with multivariate entries, by
/// cofactor expansion along the first row. Fine for the Jacobi-Trudi and
/// Toeplitz minors this crate needs (size <= 8); an empty matrix has
/// determinant one.
pub(crate) fn mpoly_mat_det<T: Scalar>(m: &[Vec<MPoly<T>>], nvars: usize) -> MPoly<T> {
    fn go<T: Scalar>(m: &[Vec<MPoly<T>>], rows: &[usize], cols: &[usize], nvars: usize) -> MPoly<T> {
        if rows.is_empty() {
            return MPoly::one(nvars);
        }
        let r = rows[0];
        let mut acc = MPoly::zero(nvars);
        for (k, &c) in cols.iter().enumerate() {
            let e = &m[r][c];
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let sub = go(m, &rows[1..], &rest, nvars);
            let term = e * &sub;
            acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let idx: Vec<usize> = (0..m.len()).collect();
    go(m, &idx, &idx, nvars)
}
