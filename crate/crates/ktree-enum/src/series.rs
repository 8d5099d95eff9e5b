//! Truncated univariate formal power series over exact rationals.
//!
//! All coefficients are `BigRational`; there is no floating point anywhere in
//! this module. Series are dense: the generating functions computed from them
//! have no useful sparsity, and truncation orders stay small (tens).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("exp requires a zero constant term, found {found}")]
    NonzeroConstantTerm { found: BigRational },
    #[error("coefficient of x^{degree} is not an integer: {value}")]
    NonIntegerCoefficient { degree: usize, value: BigRational },
    #[error("coefficient of x^{degree} is negative: {value}")]
    NegativeCoefficient { degree: usize, value: BigRational },
}

/// A power series truncated at `order`: coefficients of x^0 .. x^order.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    /// Wraps a coefficient vector; `coeffs[d]` is the coefficient of x^d and
    /// the truncation order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// The monomial c·x^degree (zero series if degree exceeds the order).
    pub fn monomial(order: usize, degree: usize, coeff: BigRational) -> Self {
        let mut s = Series::zero(order);
        if degree <= order {
            s.coeffs[degree] = coeff;
        }
        s
    }

    /// Highest retained degree.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of x^d; zero beyond the truncation order.
    pub fn coeff(&self, d: usize) -> BigRational {
        self.coeffs.get(d).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Equality of all coefficients up to the smaller truncation order.
    pub fn eq_to_common_order(&self, other: &Series) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..=n] == other.coeffs[..=n]
    }

    pub fn scale(&self, q: &BigRational) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Re-truncates to `order` (extends with zeros if larger).
    pub fn truncated(&self, order: usize) -> Series {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, BigRational::zero());
        coeffs.truncate(order + 1);
        Series { coeffs }
    }

    /// Substitutes x ↦ x^m: coefficient of x^{dm} becomes the old coefficient
    /// of x^d; everything else is zero. Truncation order is preserved.
    pub fn substitute_power(&self, m: usize) -> Series {
        assert!(m >= 1, "substitution exponent must be >= 1");
        let order = self.order();
        let mut out = Series::zero(order);
        for (d, c) in self.coeffs.iter().enumerate() {
            match d.checked_mul(m) {
                Some(dm) if dm <= order => out.coeffs[dm] = c.clone(),
                _ => break,
            }
        }
        out
    }

    /// Multiplies by x^e, dropping coefficients pushed past the order.
    pub fn shifted(&self, e: usize) -> Series {
        let order = self.order();
        let mut out = Series::zero(order);
        for (d, c) in self.coeffs.iter().enumerate() {
            if d + e > order {
                break;
            }
            out.coeffs[d + e] = c.clone();
        }
        out
    }

    /// exp of a series with zero constant term, via the recurrence
    /// f_d = (1/d)·Σ_{m=1..d} m·g_m·f_{d-m}.
    pub fn exp(&self) -> Result<Series, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm { found: self.coeffs[0].clone() });
        }
        let order = self.order();
        let mut f = Vec::with_capacity(order + 1);
        f.push(BigRational::one());
        for d in 1..=order {
            let mut acc = BigRational::zero();
            for m in 1..=d {
                if self.coeffs[m].is_zero() {
                    continue;
                }
                acc += &self.coeffs[m] * &f[d - m] * BigRational::from_integer(BigInt::from(m));
            }
            f.push(acc / BigRational::from_integer(BigInt::from(d)));
        }
        Ok(Series { coeffs: f })
    }

    /// Extracts the coefficients as nonnegative integers, failing loudly on
    /// any fractional or negative coefficient.
    pub fn nonneg_integer_coeffs(&self) -> Result<Vec<BigInt>, SeriesError> {
        let mut out = Vec::with_capacity(self.coeffs.len());
        for (degree, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() {
                return Err(SeriesError::NonIntegerCoefficient { degree, value: c.clone() });
            }
            if c.is_negative() {
                return Err(SeriesError::NegativeCoefficient { degree, value: c.clone() });
            }
            out.push(c.to_integer());
        }
        Ok(out)
    }
}

impl Add for &Series {
    type Output = Series;

    /// Coefficient-wise sum, truncated at the smaller order.
    fn add(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n).map(|d| &self.coeffs[d] + &rhs.coeffs[d]).collect();
        Series { coeffs }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n).map(|d| &self.coeffs[d] - &rhs.coeffs[d]).collect();
        Series { coeffs }
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Series {
    type Output = Series;

    /// Schoolbook product truncated at the smaller order; quadratic is plenty
    /// at the orders used here (a hook for something faster if that changes).
    fn mul(self, rhs: &Series) -> Series {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        Series { coeffs }
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "Series[{}]", rendered.join(", "))
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", rendered.join(", "))
    }
}
