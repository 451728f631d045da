use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::CurvePoint;
use crate::arith::{ln_abs, Integer};
use crate::error::{Error, Result};

/// `h(p/q) = max(ln|p|, ln|q|)` applied to the `T`-coordinate. Taking logs of
/// big integers goes through their leading bits, so the result is accurate
/// to `f64` precision at any size.
pub fn naive_height(p: &CurvePoint) -> Result<f64> {
    let x = p
        .x()
        .ok_or_else(|| Error::domain("the point at infinity has no height"))?;
    let log = |n: &BigInt| if n.is_zero() { 0.0 } else { ln_abs(n) };
    Ok(log(x.numer()).max(log(x.denom())))
}

/// Genus `1 + (k − 3)·2^(k−2)` of the curve cut out by `Y_i² = X + a_i`,
/// `i = 1..k`, for distinct `a_i`.
pub fn genus_of_system(k: u32) -> Result<Integer> {
    if k < 3 {
        return Err(Error::domain(format!("k must be at least 3, got {k}")));
    }
    Ok(Integer::one() + Integer::from(k - 3) * (Integer::one() << (k - 2) as usize))
}
