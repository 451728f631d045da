use num_traits::Signed;

use crate::arith::{rational_square_root, Rational};
use crate::error::{Error, Result};

/// The base set `{0, 2, 6}` whose square translates the recursion produces.
pub const EULER_BASE: [i64; 3] = [0, 2, 6];

/// Sizes roughly square each step; depth 6 already has numbers in the thousands of digits.
pub const EULER_MAX_DEPTH: usize = 6;

/// Euler's recursion on square translates of `{0, 2, 6}`.
///
/// Starting from `x₀ = 1/2`, with `y² = x² + 2` and `z² = x² + 6`, each step
/// sets `x' = (x⁴ − 12) / (2xyz)`. Returns `|x₀|, …, |x_depth|`; only `x²`
/// enters the translate, so signs are dropped. Every element is checked to
/// make `x²`, `x² + 2` and `x² + 6` rational squares.
pub fn euler_chain(depth: usize) -> Result<Vec<Rational>> {
    if depth > EULER_MAX_DEPTH {
        return Err(Error::size(format!("euler chain depth limited to {EULER_MAX_DEPTH}")));
    }
    let two = Rational::from_integer(2.into());
    let six = Rational::from_integer(6.into());
    let twelve = Rational::from_integer(12.into());

    let mut x = Rational::new(1.into(), 2.into());
    let mut out = vec![x.clone()];
    for step in 0..depth {
        let x2 = &x * &x;
        let root = |q: &Rational, what: &str| {
            rational_square_root(q).ok_or_else(|| {
                Error::Internal(format!("step {step}: x^2 + {what} is not a square"))
            })
        };
        let y = root(&(&x2 + &two), "2")?;
        let z = root(&(&x2 + &six), "6")?;
        let next = (&x2 * &x2 - &twelve) / (&two * &x * &y * &z);
        x = next.abs();
        let x2 = &x * &x;
        root(&(&x2 + &two), "2")?;
        root(&(&x2 + &six), "6")?;
        out.push(x.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    #[test]
    fn reproduces_known_steps() {
        let chain = euler_chain(2).unwrap();
        assert_eq!(chain[0], parse_rational("1/2").unwrap());
        assert_eq!(chain[1], parse_rational("191/60").unwrap());
        assert_eq!(chain[2], parse_rational("1175343361/1154457480").unwrap());
    }

    #[test]
    fn third_step_has_38_digits() {
        let x3 = euler_chain(3).unwrap().pop().unwrap();
        assert_eq!(x3.numer().to_string().len(), 38);
        assert_eq!(x3.denom().to_string().len(), 38);
        assert_eq!(
            x3,
            parse_rational(
                "19407022371405663547275671633715624959/16718396695005073496127790248431615760"
            )
            .unwrap()
        );
    }

    #[test]
    fn depth_guard() {
        assert!(euler_chain(EULER_MAX_DEPTH).is_ok());
        assert!(matches!(euler_chain(EULER_MAX_DEPTH + 1), Err(Error::Size(_))));
        assert_eq!(euler_chain(0).unwrap().len(), 1);
    }
}
