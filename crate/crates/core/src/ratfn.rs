//! Rational functions in one variable, kept in reduced form.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::Scalar;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A quotient of polynomials. The denominator is nonzero and monic, and
/// numerator and denominator share no common factor, so equality of values
/// is equality of representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn<T> {
    num: Poly<T>,
    den: Poly<T>,
}

impl<T: Scalar> RationalFn<T> {
    pub fn new(num: Poly<T>, den: Poly<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("zero denominator".into()));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly<T>, den: Poly<T>) -> Self {
        if num.is_zero() {
            return RationalFn {
                num,
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lead = den.leading_coeff().expect("nonzero denominator");
        let inv = T::one() / lead;
        RationalFn {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Poly<T>) -> Self {
        RationalFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly<T> {
        &self.num
    }

    pub fn den(&self) -> &Poly<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact derivative by the quotient rule.
    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::reduced(num, den)
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::reduced(self.num.scale(c), self.den.clone())
    }
}

impl<T: Scalar> Add for &RationalFn<T> {
    type Output = RationalFn<T>;
    fn add(self, rhs: &RationalFn<T>) -> RationalFn<T> {
        RationalFn::reduced(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<T: Scalar> Sub for &RationalFn<T> {
    type Output = RationalFn<T>;
    fn sub(self, rhs: &RationalFn<T>) -> RationalFn<T> {
        RationalFn::reduced(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<T: Scalar> Mul for &RationalFn<T> {
    type Output = RationalFn<T>;
    fn mul(self, rhs: &RationalFn<T>) -> RationalFn<T> {
        RationalFn::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<T: Scalar> Neg for &RationalFn<T> {
    type Output = RationalFn<T>;
    fn neg(self) -> RationalFn<T> {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<T: Scalar> fmt::Display for RationalFn<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
