//! Exact Bernoulli numbers (B₁ = −1/2 convention).

use std::sync::{Mutex, OnceLock};

use rug::{Integer, Rational};

use crate::error::{Error, Result};

fn table() -> &'static Mutex<Vec<Rational>> {
    static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut v = vec![Rational::from(1)];
        extend(&mut v, 60);
        Mutex::new(v)
    })
}

/// Σ_{k=0}^{m} C(m+1,k)·B_k = 0 solved for B_m.
fn extend(v: &mut Vec<Rational>, upto: usize) {
    while v.len() <= upto {
        let m = v.len() as u32;
        if m > 1 && m % 2 == 1 {
            v.push(Rational::new());
            continue;
        }
        let mut acc = Rational::new();
        let mut binom = Integer::from(1);
        for (k, b) in v.iter().enumerate() {
            if *b != 0 {
                acc += Rational::from(&binom * b.numer()) / b.denom();
            }
            binom *= m + 1 - k as u32;
            binom /= k as u32 + 1;
        }
        v.push(-acc / (m + 1));
    }
}

pub fn bernoulli(n: i64) -> Result<Rational> {
    if n < 0 {
        return Err(Error::InvalidArgument(format!(
            "Bernoulli index must be non-negative (got {n})"
        )));
    }
    let n = n as usize;
    let mut t = table().lock().unwrap();
    if t.len() <= n {
        extend(&mut t, n);
    }
    Ok(t[n].clone())
}
