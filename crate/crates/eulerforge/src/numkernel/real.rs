//! `Real`: an MPFR float pinned to the precision of the context that made it.
//!
//! A context is identified by its working precision in bits. Mixing two
//! `Real`s of different precision through the operator traits panics; the
//! `checked_*` methods return [`Error::ContextMismatch`] instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Round;
use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct Real(Float);

#[inline]
fn same_prec(a: &Real, b: &Real) {
    if a.0.prec() != b.0.prec() {
        panic!(
            "arithmetic between Reals of different contexts ({} vs {} bits)",
            a.0.prec(),
            b.0.prec()
        );
    }
}

impl Real {
    pub fn from_float(f: Float) -> Real {
        Real(f)
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    /// Working precision in bits; this is the context identity.
    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    pub fn same_context(&self, other: &Real) -> bool {
        self.prec() == other.prec()
    }

    fn wrap(&self, f: Float) -> Real {
        Real(f)
    }

    pub fn zero_like(&self) -> Real {
        Real(Float::with_val(self.prec(), 0))
    }

    pub fn int_like(&self, v: i64) -> Real {
        Real(Float::with_val(self.prec(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    /// Turns NaN/inf into an error naming the operation that produced it.
    pub fn finite(self, what: &str) -> Result<Real> {
        if self.0.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite(what.to_string()))
        }
    }

    pub fn checked_add(&self, rhs: &Real) -> Result<Real> {
        self.check(rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_sub(&self, rhs: &Real) -> Result<Real> {
        self.check(rhs)?;
        Ok(self - rhs)
    }

    pub fn checked_mul(&self, rhs: &Real) -> Result<Real> {
        self.check(rhs)?;
        Ok(self * rhs)
    }

    pub fn checked_div(&self, rhs: &Real) -> Result<Real> {
        self.check(rhs)?;
        (self / rhs).finite("division")
    }

    fn check(&self, rhs: &Real) -> Result<()> {
        if self.prec() == rhs.prec() {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.prec(), rhs.prec()))
        }
    }

    pub fn abs(&self) -> Real {
        self.wrap(self.0.clone().abs())
    }

    pub fn signum(&self) -> i32 {
        match self.0.cmp0() {
            Some(Ordering::Less) => -1,
            Some(Ordering::Greater) => 1,
            _ => 0,
        }
    }

    pub fn recip(&self) -> Real {
        self.wrap(self.0.clone().recip())
    }

    pub fn square(&self) -> Real {
        self.wrap(self.0.clone().square())
    }

    pub fn sqrt(&self) -> Real {
        self.wrap(self.0.clone().sqrt())
    }

    pub fn ln(&self) -> Real {
        self.wrap(self.0.clone().ln())
    }

    pub fn exp(&self) -> Real {
        self.wrap(self.0.clone().exp())
    }

    pub fn exp_m1(&self) -> Real {
        self.wrap(self.0.clone().exp_m1())
    }

    pub fn sin(&self) -> Real {
        self.wrap(self.0.clone().sin())
    }

    pub fn cos(&self) -> Real {
        self.wrap(self.0.clone().cos())
    }

    pub fn tan(&self) -> Real {
        self.wrap(self.0.clone().tan())
    }

    pub fn cot(&self) -> Real {
        self.wrap(self.0.clone().cot())
    }

    pub fn csc(&self) -> Real {
        self.wrap(self.0.clone().csc())
    }

    pub fn sinh(&self) -> Real {
        self.wrap(self.0.clone().sinh())
    }

    pub fn cosh(&self) -> Real {
        self.wrap(self.0.clone().cosh())
    }

    pub fn coth(&self) -> Real {
        self.wrap(self.0.clone().coth())
    }

    pub fn csch(&self) -> Real {
        self.wrap(self.0.clone().csch())
    }

    pub fn powi(&self, e: i32) -> Real {
        self.wrap(Float::with_val(self.prec(), (&self.0).pow(e)))
    }

    pub fn powr(&self, e: &Real) -> Real {
        same_prec(self, e);
        self.wrap(Float::with_val(self.prec(), (&self.0).pow(&e.0)))
    }

    pub fn round_to_i64(&self) -> Option<i64> {
        let r = self.0.clone().round();
        r.to_integer().and_then(|i| i.to_i64())
    }

    pub fn floor_to_i64(&self) -> Option<i64> {
        self.0.clone().floor().to_integer().and_then(|i| i.to_i64())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// log10 of the magnitude, as f64 (−inf for zero).
    pub fn log10_abs(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        let (m, e) = self.0.to_f64_exp();
        m.abs().log10() + (e as f64) * std::f64::consts::LOG10_2
    }

    pub fn max(self, other: Real) -> Real {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Real) -> Real {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Rounds to the given number of significant decimal digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".to_string();
        }
        let s = self
            .0
            .to_string_radix_round(10, Some(digits.max(1)), Round::Nearest);
        tidy_decimal(&s)
    }

    /// All significant digits the working precision carries.
    pub fn to_full_decimal(&self) -> String {
        let digits = ((self.prec() as f64) * std::f64::consts::LOG10_2).floor() as usize;
        self.to_decimal(digits)
    }
}

/// MPFR prints `1.2345e-3`; keep exponent notation only when it helps.
fn tidy_decimal(s: &str) -> String {
    let (mant, exp) = match s.split_once('e') {
        Some((m, e)) => (m.to_string(), e.parse::<i64>().unwrap_or(0)),
        None => (s.to_string(), 0),
    };
    if exp == 0 || exp.abs() > 12 {
        return if exp == 0 { mant } else { format!("{mant}e{exp}") };
    }
    let neg = mant.starts_with('-');
    let body = mant.trim_start_matches('-');
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: String = format!("{int}{frac}");
    let point = int.len() as i64 + exp;
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if point <= 0 {
        out.push_str("0.");
        out.push_str(&"0".repeat((-point) as usize));
        out.push_str(&digits);
    } else if point as usize >= digits.len() {
        out.push_str(&digits);
        out.push_str(&"0".repeat(point as usize - digits.len()));
    } else {
        out.push_str(&digits[..point as usize]);
        out.push('.');
        out.push_str(&digits[point as usize..]);
    }
    out
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "{}", self.to_decimal(p)),
            None => write!(f, "{}", self.to_full_decimal()),
        }
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({}, {}b)", self.to_decimal(20), self.prec())
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Real) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident, $op:tt, $aop:tt) => {
        impl<'a, 'b> $tr<&'b Real> for &'a Real {
            type Output = Real;
            #[inline]
            fn $m(self, rhs: &'b Real) -> Real {
                same_prec(self, rhs);
                Real(Float::with_val(self.0.prec(), &self.0 $op &rhs.0))
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            #[inline]
            fn $m(self, rhs: Real) -> Real {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b Real> for Real {
            type Output = Real;
            #[inline]
            fn $m(self, rhs: &'b Real) -> Real {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Real> for &'a Real {
            type Output = Real;
            #[inline]
            fn $m(self, rhs: Real) -> Real {
                self.$m(&rhs)
            }
        }
        impl<'a> $tr<i64> for &'a Real {
            type Output = Real;
            #[inline]
            fn $m(self, rhs: i64) -> Real {
                Real(Float::with_val(self.0.prec(), &self.0 $op rhs))
            }
        }
        impl $tr<i64> for Real {
            type Output = Real;
            #[inline]
            fn $m(self, rhs: i64) -> Real {
                (&self).$m(rhs)
            }
        }
        impl<'b> $atr<&'b Real> for Real {
            #[inline]
            fn $am(&mut self, rhs: &'b Real) {
                same_prec(self, rhs);
                self.0 $aop &rhs.0;
            }
        }
        impl $atr<Real> for Real {
            #[inline]
            fn $am(&mut self, rhs: Real) {
                same_prec(self, &rhs);
                self.0 $aop rhs.0;
            }
        }
        impl $atr<i64> for Real {
            #[inline]
            fn $am(&mut self, rhs: i64) {
                self.0 $aop rhs;
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign, +, +=);
binop!(Sub, sub, SubAssign, sub_assign, -, -=);
binop!(Mul, mul, MulAssign, mul_assign, *, *=);
binop!(Div, div, DivAssign, div_assign, /, /=);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl<'a> Neg for &'a Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0.clone())
    }
}

impl std::iter::Sum for Real {
    /// Panics on an empty iterator: a `Real` needs a precision.
    fn sum<I: Iterator<Item = Real>>(mut iter: I) -> Real {
        let first = iter.next().expect("sum of an empty iterator of Reals");
        iter.fold(first, |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64, prec: u32) -> Real {
        Real::from_float(Float::with_val(prec, v))
    }

    #[test]
    fn arithmetic_within_one_context() {
        let a = r(3, 128);
        let b = r(4, 128);
        assert_eq!((&a * &a + &b * &b).sqrt(), r(5, 128));
        assert_eq!(&b / 2, r(2, 128));
    }

    #[test]
    #[should_panic(expected = "different contexts")]
    fn mixing_contexts_panics() {
        let _ = r(1, 128) + r(1, 256);
    }

    #[test]
    fn checked_ops_report_mismatch() {
        let e = r(1, 128).checked_add(&r(1, 256)).unwrap_err();
        assert_eq!(e, Error::ContextMismatch(128, 256));
        assert!(r(1, 128).checked_div(&r(0, 128)).is_err());
    }

    #[test]
    fn decimal_formatting() {
        let x = Real::from_float(Float::with_val(200, 1) / 8);
        assert_eq!(x.to_decimal(5), "0.12500");
        let y = Real::from_float(Float::with_val(200, -1234567));
        assert_eq!(y.to_decimal(3), "-1230000");
        let z = Real::from_float(Float::with_val(200, 1) / Float::with_val(200, 10).pow(30));
        assert!(z.to_decimal(3).contains("e-30"));
    }
}
