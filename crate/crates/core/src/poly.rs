//! Dense univariate polynomials in the monomial basis.
//!
//! Coefficient `q` of the backing vector is the coefficient of `x^q`;
//! trailing zeros are stripped so the zero polynomial has an empty vector
//! and its degree is the sentinel `None`. The factorial-basis view
//! `a_q = q! * coeff(q)` used throughout the Wronskian machinery is a
//! conversion, not a second storage format.

use crate::error::{Error, Result};
use crate::scalar::{factorial, Scalar};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Poly::from_monomial_coeffs(vec![c])
    }

    /// The monomial `c * x^q`.
    pub fn monomial(c: T, q: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); q + 1];
        coeffs[q] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Poly::monomial(T::one(), 1)
    }

    pub fn from_monomial_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Build from factorial-basis coefficients: entry `q` is `a_q` in
    /// `sum a_q x^q / q!`.
    pub fn from_factorial_coeffs(coeffs: &[T]) -> Self {
        let monomial = coeffs
            .iter()
            .enumerate()
            .map(|(q, a)| a.clone() / factorial::<T>(q))
            .collect();
        Poly::from_monomial_coeffs(monomial)
    }

    /// Factorial-basis view `a_q = q! * coeff(q)`, one entry per degree up
    /// to `deg`. Empty for the zero polynomial.
    pub fn factorial_coeffs(&self) -> Vec<T> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(q, c)| c.clone() * factorial::<T>(q))
            .collect()
    }

    /// Coefficient of `x^q` in the monomial basis (zero beyond the degree).
    pub fn coeff(&self, q: usize) -> T {
        self.coeffs.get(q).cloned().unwrap_or_else(T::zero)
    }

    /// Factorial-basis coefficient `a_q = q! * coeff(q)`.
    pub fn factorial_coeff(&self, q: usize) -> T {
        self.coeff(q) * factorial::<T>(q)
    }

    pub fn monomial_coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Degree, with `None` as the sentinel for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<T> {
        self.coeffs.last().cloned()
    }

    /// Termwise exact derivative.
    pub fn derivative(&self) -> Self {
        let d = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(q, c)| c.clone() * crate::scalar::int::<T>(q as i64))
            .collect();
        Poly::from_monomial_coeffs(d)
    }

    /// `n`-th derivative.
    pub fn derivative_n(&self, n: usize) -> Self {
        let mut p = self.clone();
        for _ in 0..n {
            p = p.derivative();
        }
        p
    }

    /// Reciprocal polynomial `x^d * f(1/x)`: coefficient `q` of the result
    /// is coefficient `d - q` of `f`. Requires `d >= deg f`.
    pub fn reciprocal(&self, d: usize) -> Result<Self> {
        if let Some(deg) = self.degree() {
            if deg > d {
                return Err(Error::DegreeBound(format!(
                    "reciprocal bound {d} is below degree {deg}"
                )));
            }
        }
        let coeffs = (0..=d).map(|q| self.coeff(d - q)).collect();
        Ok(Poly::from_monomial_coeffs(coeffs))
    }

    pub fn scale(&self, c: &T) -> Self {
        Poly::from_monomial_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Quotient and remainder of division by `d` (field coefficients).
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::Dimension("division by the zero polynomial".into()));
        }
        let dd = d.degree().unwrap();
        let lead = d.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let q = rem.len() - 1 - dd;
            let c = rem.last().unwrap().clone() / lead.clone();
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = rem[q + j].clone() - c.clone() * dc.clone();
                    rem[q + j] = t;
                }
            }
            quo[q] = c;
            rem.pop();
        }
        Ok((
            Poly::from_monomial_coeffs(quo),
            Poly::from_monomial_coeffs(rem),
        ))
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (Euclidean algorithm).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divide through by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(l) if !l.is_one() => {
                self.scale(&(T::one() / l))
            }
            _ => self.clone(),
        }
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|q| self.coeff(q) + rhs.coeff(q)).collect();
        Poly::from_monomial_coeffs(coeffs)
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|q| self.coeff(q) - rhs.coeff(q)).collect();
        Poly::from_monomial_coeffs(coeffs)
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = coeffs[i + j].clone() + a.clone() * b.clone();
                coeffs[i + j] = t;
            }
        }
        Poly::from_monomial_coeffs(coeffs)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly::from_monomial_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar> Poly<T> {
    /// Factorial display mirroring the `t^q/q!` normalization:
    /// `a0 + a1 x + a2 x^2/2! + ..`.
    pub fn display_factorial(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (q, a) in self.factorial_coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (sign, mag) = if a.is_negative() {
                ("-", -a.clone())
            } else {
                ("+", a.clone())
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push(' ');
                out.push_str(sign);
                out.push(' ');
            }
            match q {
                0 => out.push_str(&mag.to_string()),
                1 => out.push_str(&format!("{mag} x")),
                _ => out.push_str(&format!("{mag} x^{q}/{q}!")),
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (q, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
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
            match q {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if q == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{q}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Exact determinant of a square matrix with polynomial entries, by
/// evaluation and Newton interpolation: the determinant degree is at most
/// the smaller of the row-wise and column-wise sums of largest entry
/// degrees, so that many scalar fraction-free determinants at small
/// integer points pin it down. An empty matrix has determinant one.
pub(crate) fn poly_mat_det<T: Scalar>(m: Vec<Vec<Poly<T>>>) -> Poly<T> {
    poly_mat_det_bounded(m, None)
}

/// [`poly_mat_det`] with an extra caller-supplied degree cap, for matrices
/// whose structure proves a bound sharper than the entry-degree sums.
pub(crate) fn poly_mat_det_bounded<T: Scalar>(m: Vec<Vec<Poly<T>>>, cap: Option<usize>) -> Poly<T> {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let row_bound: usize = m
        .iter()
        .map(|row| row.iter().filter_map(Poly::degree).max().unwrap_or(0))
        .sum();
    let col_bound: usize = (0..n)
        .map(|j| m.iter().filter_map(|row| row[j].degree()).max().unwrap_or(0))
        .sum();
    let bound = row_bound.min(col_bound).min(cap.unwrap_or(usize::MAX));
    // small symmetric points keep the evaluated integers short
    let points: Vec<T> = (0..=bound as i64)
        .map(|k| crate::scalar::int(if k % 2 == 0 { k / 2 } else { -(k / 2) - 1 }))
        .collect();
    let values: Vec<T> = points
        .iter()
        .map(|x| {
            let evaluated =
                crate::mat::Mat::from_fn(n, n, |i, j| m[i][j].eval(x));
            evaluated.det().expect("square by construction")
        })
        .collect();
    newton_interpolate(&points, values)
}

/// Newton's divided-difference interpolation through distinct points.
pub(crate) fn newton_interpolate<T: Scalar>(points: &[T], mut dd: Vec<T>) -> Poly<T> {
    let n = points.len();
    for level in 1..n {
        for j in (level..n).rev() {
            let num = dd[j].clone() - dd[j - 1].clone();
            let den = points[j].clone() - points[j - level].clone();
            dd[j] = num / den;
        }
    }
    let mut out = Poly::constant(dd[n - 1].clone());
    for j in (0..n - 1).rev() {
        // out = out * (x - x_j) + dd[j]
        let shifted = &out * &Poly::from_monomial_coeffs(vec![-points[j].clone(), T::one()]);
        out = &shifted + &Poly::constant(dd[j].clone());
    }
    out
}
