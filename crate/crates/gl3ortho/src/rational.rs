//! Exact rational scalars.
//!
//! Every scalar in this crate is an arbitrary-precision rational; there is
//! no floating point anywhere. `num::BigRational` already keeps values in
//! lowest terms with a positive denominator, which is exactly the invariant
//! we need.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// n/d as a rational. Panics on d = 0.
pub fn ratio(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_zero(r: &Rational) -> bool {
    r.is_zero()
}

/// Render as "num/den", or just "num" when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse "num" or "num/den" (den > 0 after normalization).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().ok()?;
            let d = d.trim().parse::<BigInt>().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
    }
}

/// k! as a rational.
pub fn factorial(k: usize) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    BigRational::from_integer(acc)
}

/// Rising factorial (a)_i = a(a+1)...(a+i-1), with (a)_0 = 1.
pub fn pochhammer(a: &Rational, i: usize) -> Rational {
    let mut acc = Rational::one();
    for j in 0..i {
        acc *= a + rat(j as i64);
    }
    acc
}
