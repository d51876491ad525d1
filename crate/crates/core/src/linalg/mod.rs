//! Exact rational scalars, dense matrices, canonical subspaces and
//! tensor-slot helpers. Everything else in the crate is built on this.

mod matrix;
mod subspace;
pub mod tensor;

pub use matrix::LinearMap;
pub use subspace::SubspaceBasis;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The ground field. Always reduced, denominator positive.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zeros(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

/// Standard basis vector `e_i` of length `n`.
pub fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zeros(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn add_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vec(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vec(c: &Rational, v: &[Rational]) -> Vec<Rational> {
    v.iter().map(|x| c * x).collect()
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Canonical text form: `p/q`, or `p` when `q = 1`; the sign sits on `p`.
pub fn format_rational(r: &Rational) -> String {
    use alloc::string::ToString;
    r.to_string()
}

/// Parses `p/q` or `p`. Accepts unreduced input and reduces it; rejects a
/// zero denominator, signs on the denominator and anything non-numeric.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = parse_int(num, true)?;
    let den: BigInt = match den {
        Some(d) => parse_int(d, false)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

fn parse_int(s: &str, signed: bool) -> Option<BigInt> {
    let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(s.as_bytes(), 10)
}
