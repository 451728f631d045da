//! Exact integer and rational primitives.
//!
//! [`Integer`] and [`Rational`] are the arbitrary-precision types from
//! `num-bigint` / `num-rational`; `BigRational` keeps itself normalized
//! (positive denominator, coprime parts) after every operation.

mod factor;

pub use factor::{divisors, factorize, is_probable_prime};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = num_rational::BigRational;

/// Parses a decimal integer, allowing a leading sign.
pub fn parse_integer(text: &str) -> Result<Integer> {
    let t = text.trim();
    t.parse::<Integer>()
        .map_err(|_| Error::parse(format!("not a decimal integer: {t:?}")))
}

/// Parses `"p/q"` or a bare decimal integer into a normalized rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    match t.split_once('/') {
        None => Ok(Rational::from_integer(parse_integer(t)?)),
        Some((p, q)) => {
            let num = parse_integer(p)?;
            let den = parse_integer(q)?;
            if den.is_zero() {
                return Err(Error::parse(format!("zero denominator in {t:?}")));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Formats a rational as `"p/q"`, or as a bare integer when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational_from_int(n: impl Into<Integer>) -> Rational {
    Rational::from_integer(n.into())
}

/// Largest `r` with `r² ≤ n`.
pub fn int_sqrt_floor(n: &Integer) -> Result<Integer> {
    if n.is_negative() {
        return Err(Error::domain(format!("square root of negative integer {n}")));
    }
    Ok(n.sqrt())
}

/// The non-negative square root of `n` when `n` is a perfect square.
/// Zero is a square; negative numbers never are.
pub fn perfect_square_root(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    // Quadratic residues mod 64 reject most non-squares without a root extraction.
    let low = n.iter_u32_digits().next().unwrap_or(0) & 63;
    if (0x0202_0212_0203_0213u64 >> low) & 1 == 0 {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Non-negative rational `r` with `r² = q`, if one exists.
pub fn rational_square_root(q: &Rational) -> Option<Rational> {
    let num = perfect_square_root(q.numer())?;
    let den = perfect_square_root(q.denom())?;
    Some(Rational::new_raw(num, den))
}

pub fn is_rational_square(q: &Rational) -> bool {
    rational_square_root(q).is_some()
}

/// Largest `r ≥ 0` with `r^k ≤ n` (for `n ≥ 0`, `k ≥ 1`).
pub fn nth_root_floor(n: &Integer, k: u32) -> Integer {
    assert!(k >= 1 && !n.is_negative());
    n.nth_root(k)
}

/// Smallest `r ≥ 0` with `r^k ≥ n` (for `n ≥ 0`, `k ≥ 1`).
pub fn nth_root_ceil(n: &Integer, k: u32) -> Integer {
    let r = nth_root_floor(n, k);
    if num_traits::pow(r.clone(), k as usize) == *n {
        r
    } else {
        r + 1
    }
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// Least common multiple of the denominators, 1 for an empty slice.
pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Integer {
    use num_integer::Integer as _;
    values
        .into_iter()
        .fold(Integer::one(), |acc, q| acc.lcm(q.denom()))
}

/// Smallest positive `L` such that `L² · q` is integral for every `q`.
pub fn square_clearing_factor<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Integer {
    use num_integer::Integer as _;
    let mut scale = Integer::one();
    for q in values {
        if q.denom().is_one() {
            continue;
        }
        let mut part = Integer::one();
        for (p, e) in factorize(q.denom()) {
            part *= num_traits::pow(p, e.div_ceil(2) as usize);
        }
        scale = scale.lcm(&part);
    }
    scale
}

/// Natural logarithm of `|n|` for `n ≠ 0`, accurate to f64 precision for any size.
pub fn ln_abs(n: &Integer) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        let (_, mag) = n.to_u64_digits();
        let f: f64 = mag
            .iter()
            .rev()
            .fold(0.0, |acc, &d| acc * 18446744073709551616.0 + d as f64);
        return f.ln();
    }
    let shift = bits - 64;
    let top: BigInt = BigInt::from_biguint(Sign::Plus, n.magnitude() >> shift);
    let (_, mag) = top.to_u64_digits();
    (mag[0] as f64).ln() + shift as f64 * std::f64::consts::LN_2
}
