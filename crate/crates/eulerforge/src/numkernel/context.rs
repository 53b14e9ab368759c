use std::any::Any;
use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use rug::{Float, Rational};

use super::real::Real;
use crate::error::{Error, Result};

pub const DEFAULT_GUARD: u32 = 10;
pub const DEFAULT_MAX_TERMS: u64 = 1_000_000;

type Entry = (Arc<dyn Any + Send + Sync>, u64);

/// Precision, truncation limits and the per-context memo store.
///
/// Clones share the memo store. `isolated` gives a context with the same
/// numerics and its own term meter, so counts can be attributed to one job.
#[derive(Clone)]
pub struct PrecisionContext {
    digits: u32,
    guard: u32,
    max_terms: u64,
    bits: u32,
    memo: Arc<Mutex<HashMap<String, Entry>>>,
    meter: Arc<AtomicU64>,
}

impl fmt::Debug for PrecisionContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrecisionContext")
            .field("digits", &self.digits)
            .field("guard", &self.guard)
            .field("max_terms", &self.max_terms)
            .field("bits", &self.bits)
            .finish()
    }
}

impl PrecisionContext {
    pub fn new(digits: u32) -> Result<Self> {
        Self::with_options(digits, DEFAULT_GUARD, DEFAULT_MAX_TERMS)
    }

    pub fn with_options(digits: u32, guard: u32, max_terms: u64) -> Result<Self> {
        if digits < 20 {
            return Err(Error::InvalidArgument(format!(
                "digits must be at least 20 (got {digits})"
            )));
        }
        if guard < 5 {
            return Err(Error::InvalidArgument(format!(
                "guard must be at least 5 (got {guard})"
            )));
        }
        if max_terms < 1000 {
            return Err(Error::InvalidArgument(format!(
                "max_terms must be at least 1000 (got {max_terms})"
            )));
        }
        let bits = ((digits + guard) as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8;
        Ok(PrecisionContext {
            digits,
            guard,
            max_terms,
            bits,
            memo: Arc::new(Mutex::new(HashMap::new())),
            meter: Arc::new(AtomicU64::new(0)),
        })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn guard(&self) -> u32 {
        self.guard
    }

    pub fn max_terms(&self) -> u64 {
        self.max_terms
    }

    pub fn prec_bits(&self) -> u32 {
        self.bits
    }

    /// Digits carried internally (digits + guard).
    pub fn working_digits(&self) -> u32 {
        self.digits + self.guard
    }

    /// Pass threshold for identity residuals: 10^−(digits−10).
    pub fn tolerance(&self) -> Real {
        self.pow10(-(self.digits as i32 - 10))
    }

    /// Error budget of one series truncation: 10^−(digits + guard/2).
    pub fn target(&self) -> Real {
        self.pow10(-((self.digits + self.guard / 2) as i32))
    }

    pub fn target_log10(&self) -> f64 {
        -((self.digits + self.guard / 2) as f64)
    }

    /// Same numerics and memo store, fresh term meter.
    pub fn isolated(&self) -> Self {
        PrecisionContext {
            meter: Arc::new(AtomicU64::new(0)),
            ..self.clone()
        }
    }

    /// Same settings, empty memo store.
    pub fn fresh(&self) -> Self {
        PrecisionContext {
            memo: Arc::new(Mutex::new(HashMap::new())),
            meter: Arc::new(AtomicU64::new(0)),
            ..self.clone()
        }
    }

    pub fn charge(&self, terms: u64) {
        self.meter.fetch_add(terms, Ordering::Relaxed);
    }

    pub fn terms_consumed(&self) -> u64 {
        self.meter.load(Ordering::Relaxed)
    }

    /// Looks up `key`, computing and storing it on a miss. A hit charges the
    /// meter with the terms the original computation consumed, so term counts
    /// do not depend on what happens to be cached.
    pub fn memoize<T, F>(&self, key: &str, compute: F) -> Result<Arc<T>>
    where
        T: Any + Send + Sync,
        F: FnOnce() -> Result<T>,
    {
        let hit = self.memo.lock().unwrap().get(key).cloned();
        if let Some((v, terms)) = hit {
            self.charge(terms);
            return v
                .downcast::<T>()
                .map_err(|_| Error::InvalidArgument(format!("memo type clash for `{key}`")));
        }
        let before = self.terms_consumed();
        let value = Arc::new(compute()?);
        let used = self.terms_consumed().saturating_sub(before);
        self.memo
            .lock()
            .unwrap()
            .insert(key.to_string(), (value.clone() as Arc<dyn Any + Send + Sync>, used));
        Ok(value)
    }

    pub fn zero(&self) -> Real {
        Real::from_float(Float::with_val(self.bits, 0))
    }

    pub fn one(&self) -> Real {
        self.int(1)
    }

    pub fn int(&self, v: i64) -> Real {
        Real::from_float(Float::with_val(self.bits, v))
    }

    pub fn ratio(&self, num: i64, den: i64) -> Real {
        Real::from_float(Float::with_val(self.bits, num) / den)
    }

    pub fn rational(&self, q: &Rational) -> Real {
        Real::from_float(Float::with_val(self.bits, q))
    }

    pub fn parse(&self, s: &str) -> Result<Real> {
        let p = Float::parse(s.trim()).map_err(|e| Error::Parse(format!("`{s}`: {e}")))?;
        Ok(Real::from_float(Float::with_val(self.bits, p)))
    }

    pub fn pow10(&self, e: i32) -> Real {
        use rug::ops::Pow;
        Real::from_float(Float::with_val(self.bits, Float::with_val(self.bits, 10).pow(e)))
    }

    /// Re-rounds a value of another context into this one.
    pub fn adopt(&self, x: &Real) -> Real {
        Real::from_float(Float::with_val(self.bits, x.as_float()))
    }

    /// n^−k for a positive integer n.
    pub fn inv_pow(&self, n: u64, k: u32) -> Real {
        use rug::ops::Pow;
        let base = Float::with_val(self.bits, n);
        Real::from_float(Float::with_val(self.bits, base.pow(-(k as i32))))
    }

    /// Relative-or-absolute closeness at the context tolerance.
    pub fn close(&self, a: &Real, b: &Real) -> bool {
        let d = (a - b).abs();
        let scale = a.abs().max(b.abs());
        let tol = self.tolerance();
        d < tol || d < &tol * &scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_are_enforced() {
        assert!(PrecisionContext::new(19).is_err());
        assert!(PrecisionContext::with_options(30, 4, 10_000).is_err());
        assert!(PrecisionContext::with_options(30, 10, 999).is_err());
        let ctx = PrecisionContext::new(30).unwrap();
        assert!(ctx.tolerance() > ctx.zero());
        assert!(ctx.tolerance() < ctx.pow10(-5));
    }

    #[test]
    fn memo_charges_on_hits() {
        let ctx = PrecisionContext::new(20).unwrap();
        let v = ctx
            .memoize("k", || {
                ctx.charge(7);
                Ok(5u32)
            })
            .unwrap();
        assert_eq!(*v, 5);
        let job = ctx.isolated();
        let again = job.memoize("k", || -> Result<u32> { unreachable!() }).unwrap();
        assert_eq!(*again, 5);
        assert_eq!(job.terms_consumed(), 7);
    }
}
