//! Scalar traits the algebra is generic over.
//!
//! Characters carry exact integer coefficients (`Coefficient`), numeric
//! evaluation runs over any IEEE float (`Real`) through `Complex<F>`.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, PrimInt, Signed};

use crate::error::{Error, Result};

/// Exact signed integer coefficient ring with checked arithmetic.
pub trait Coefficient: PrimInt + Signed + Debug + Display + Send + Sync + 'static {
    fn checked_sum(self, other: Self) -> Result<Self> {
        self.checked_add(&other).ok_or(Error::Overflow("coefficient addition"))
    }

    fn checked_product(self, other: Self) -> Result<Self> {
        self.checked_mul(&other).ok_or(Error::Overflow("coefficient multiplication"))
    }

    fn checked_negation(self) -> Result<Self> {
        Self::zero().checked_sub(&self).ok_or(Error::Overflow("coefficient negation"))
    }

    /// `(-1)^e`.
    fn sign_power(e: usize) -> Self {
        if e.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }
}

impl<T: PrimInt + Signed + Debug + Display + Send + Sync + 'static> Coefficient for T {}

/// Floating-point scalar used for numeric evaluation.
pub trait Real: Float + FloatConst + Debug + Display + Send + Sync + 'static {}

impl<T: Float + FloatConst + Debug + Display + Send + Sync + 'static> Real for T {}

/// `base^exp` for an integer exponent. Small exponents use repeated
/// multiplication, larger ones binary exponentiation.
pub fn complex_powi<F: Real>(base: Complex<F>, exp: i64, position: usize) -> Result<Complex<F>> {
    if exp == 0 {
        return Ok(Complex::new(F::one(), F::zero()));
    }
    let is_zero = base.re == F::zero() && base.im == F::zero();
    if exp < 0 && is_zero {
        return Err(Error::ZeroBaseWithNegativeExponent { position });
    }
    let magnitude = exp.unsigned_abs();
    let raised = if magnitude <= 8 {
        let mut acc = base;
        for _ in 1..magnitude {
            acc = acc * base;
        }
        acc
    } else {
        let mut acc = Complex::new(F::one(), F::zero());
        let mut square = base;
        let mut e = magnitude;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * square;
            }
            square = square * square;
            e >>= 1;
        }
        acc
    };
    Ok(if exp < 0 { raised.inv() } else { raised })
}
