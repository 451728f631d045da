//! Translates of a finite set into the perfect squares.
//!
//! A rational `x` translates `A` into the squares when `a + x` is the square
//! of a rational for every `a ∈ A`. Zero counts as a square.

mod euler;

pub use euler::{euler_chain, EULER_BASE, EULER_MAX_DEPTH};

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{
    divisors, format_rational, int_sqrt_floor, parse_integer, parse_rational, perfect_square_root,
    rational_square_root, square_clearing_factor, Integer, Rational,
};
use crate::error::{Error, Result};

pub const SCAN_MAX_BOUND: u64 = 100_000_000;

/// Outcome of [`verify_family`]: `roots[i][j]` is `√(base[j] + xs[i])` when it exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub holds: bool,
    pub roots: Vec<Vec<Option<Rational>>>,
}

fn ensure_distinct(values: &[Rational], what: &str) -> Result<()> {
    let mut seen = BTreeSet::new();
    for v in values {
        if !seen.insert(v) {
            return Err(Error::validation(format!("duplicate {what} {}", format_rational(v))));
        }
    }
    Ok(())
}

/// Checks that every `a + x` is a rational square, returning the roots as witnesses.
pub fn verify_family(base: &[Rational], xs: &[Rational]) -> Result<FamilyCheck> {
    ensure_distinct(base, "base element")?;
    ensure_distinct(xs, "translate")?;
    let roots: Vec<Vec<Option<Rational>>> = xs
        .iter()
        .map(|x| base.iter().map(|a| rational_square_root(&(a + x))).collect())
        .collect();
    let holds = roots.iter().flatten().all(Option::is_some);
    Ok(FamilyCheck { holds, roots })
}

/// Every integer `x` with `a + x` and `b + x` both perfect squares.
///
/// Writing `a − b = (y₁ − y₂)(y₁ + y₂)`, each solution comes from a
/// factorization `a − b = d·e` with `d ≡ e (mod 2)`, giving `y₁ = (d + e)/2`.
/// Both signs of `d` are taken, so the list is complete; it is sorted and
/// free of duplicates.
pub fn pair_translates(a: &Integer, b: &Integer) -> Result<Vec<Integer>> {
    if a == b {
        return Err(Error::domain("pair translates need a != b"));
    }
    let diff = a - b;
    let mut out = BTreeSet::new();
    for d in divisors(&diff)? {
        for d in [d.clone(), -d] {
            let e = &diff / &d;
            let twice = &d + &e;
            if (&twice % 2u32).is_zero() {
                let y1 = twice / 2;
                out.insert(&y1 * &y1 - a);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// All integers `x ∈ [-bound, bound]` with `base + x` inside the squares.
///
/// Walks the squares `y²` near the largest base element rather than every
/// `x`, then filters against the rest of the base. An empty answer means
/// none exist in range, not none at all.
pub fn brute_force_translates(base: &[Integer], bound: u64) -> Result<Vec<Integer>> {
    if base.is_empty() {
        return Err(Error::domain("base set must be nonempty"));
    }
    if bound > SCAN_MAX_BOUND {
        return Err(Error::size(format!("scan bound limited to {SCAN_MAX_BOUND}, got {bound}")));
    }
    let pivot = base.iter().max().unwrap();
    let b = Integer::from(bound);
    let hi = pivot + &b;
    if hi.is_negative() {
        return Ok(Vec::new());
    }
    let lo = pivot - &b;
    let mut y = if lo.is_positive() {
        let r = int_sqrt_floor(&lo)?;
        if &r * &r == lo {
            r
        } else {
            r + 1
        }
    } else {
        Integer::zero()
    };
    let y_max = int_sqrt_floor(&hi)?;
    let mut out = Vec::new();
    while y <= y_max {
        let x = &y * &y - pivot;
        if base.iter().all(|a| perfect_square_root(&(a + &x)).is_some()) {
            out.push(x);
        }
        y += 1;
    }
    out.sort();
    Ok(out)
}

/// A base set together with translates carrying it into the squares.
///
/// `scale` records the factor `L` by which the family was scaled (entries
/// multiplied by `L²`) relative to the family it was derived from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslateFamily {
    base: Vec<Rational>,
    translates: Vec<Rational>,
    scale: Integer,
    roots: Vec<Vec<Rational>>,
}

impl TranslateFamily {
    /// Validates distinctness and the square condition for every pair.
    pub fn new(base: Vec<Rational>, translates: Vec<Rational>, scale: Integer) -> Result<Self> {
        if !scale.is_positive() {
            return Err(Error::validation("scale must be positive"));
        }
        let check = verify_family(&base, &translates)?;
        if !check.holds {
            return Err(Error::validation("some base + translate is not a rational square"));
        }
        let roots = check
            .roots
            .into_iter()
            .map(|row| row.into_iter().map(Option::unwrap).collect())
            .collect();
        Ok(TranslateFamily {
            base,
            translates,
            scale,
            roots,
        })
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    pub fn translates(&self) -> &[Rational] {
        &self.translates
    }

    pub fn scale(&self) -> &Integer {
        &self.scale
    }

    /// `witness_roots()[i][j]² = base[j] + translates[i]`.
    pub fn witness_roots(&self) -> &[Vec<Rational>] {
        &self.roots
    }

    pub fn is_integral(&self) -> bool {
        self.base.iter().chain(&self.translates).all(|q| q.is_integer())
    }

    /// Multiplies every entry by `L²` for the least `L` making all entries
    /// integral. Squares stay squares, so the result is again a family.
    pub fn clear_denominators(&self) -> TranslateFamily {
        let l = square_clearing_factor(self.base.iter().chain(&self.translates));
        self.scaled_by(&l)
    }

    /// Multiplies every entry by `factor²`.
    pub fn scaled_by(&self, factor: &Integer) -> TranslateFamily {
        let f = Rational::from_integer(factor.clone());
        let f2 = &f * &f;
        TranslateFamily {
            base: self.base.iter().map(|q| q * &f2).collect(),
            translates: self.translates.iter().map(|q| q * &f2).collect(),
            scale: &self.scale * factor,
            roots: self
                .roots
                .iter()
                .map(|row| row.iter().map(|r| r * &f).collect())
                .collect(),
        }
    }

    pub fn to_record(&self) -> FamilyRecord {
        FamilyRecord {
            base: self.base.iter().map(format_rational).collect(),
            translates: self.translates.iter().map(format_rational).collect(),
            scale: self.scale.to_string(),
            witness_roots: self
                .roots
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        }
    }

    /// Rebuilds a family from its record, re-verifying every square and
    /// checking the stored witnesses against the recomputed ones.
    pub fn from_record(record: &FamilyRecord) -> Result<Self> {
        let parse_all = |xs: &[String]| xs.iter().map(|t| parse_rational(t)).collect::<Result<Vec<_>>>();
        let family = TranslateFamily::new(
            parse_all(&record.base)?,
            parse_all(&record.translates)?,
            parse_integer(&record.scale)?,
        )?;
        let stored = record
            .witness_roots
            .iter()
            .map(|row| parse_all(row))
            .collect::<Result<Vec<_>>>()?;
        let matches = stored.len() == family.roots.len()
            && stored.iter().zip(&family.roots).all(|(s, r)| {
                s.len() == r.len() && s.iter().zip(r).all(|(x, y)| x.abs() == *y)
            });
        if !matches {
            return Err(Error::validation("stored witness roots do not match the family"));
        }
        Ok(family)
    }
}

/// JSON form of a [`TranslateFamily`]; every number is a decimal string.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct FamilyRecord {
    pub base: Vec<String>,
    pub translates: Vec<String>,
    pub scale: String,
    pub witness_roots: Vec<Vec<String>>,
}

/// Whether `x` carries every element of `base` into the squares.
pub fn is_translate(base: &[Rational], x: &Rational) -> bool {
    base.iter().all(|a| rational_square_root(&(a + x)).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_from_int;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Integer> {
        xs.iter().map(|&x| Integer::from(x)).collect()
    }

    #[test]
    fn verify_examples() {
        let base = [q("0"), q("9"), q("16")];
        assert!(verify_family(&base, &[q("0")]).unwrap().holds);
        let c = verify_family(&[q("0"), q("7")], &[q("9")]).unwrap();
        assert!(c.holds);
        assert_eq!(c.roots, vec![vec![Some(q("3")), Some(q("4"))]]);
        assert!(!verify_family(&[q("0"), q("3")], &[q("2")]).unwrap().holds);
        assert!(matches!(verify_family(&[q("1"), q("1")], &[q("0")]), Err(Error::Validation(_))));
        assert!(matches!(verify_family(&[q("1")], &[q("0"), q("0")]), Err(Error::Validation(_))));
    }

    #[test]
    fn pair_examples() {
        let p = |a: i64, b: i64| pair_translates(&Integer::from(a), &Integer::from(b)).unwrap();
        assert_eq!(p(16, 0), ints(&[0, 9]));
        assert_eq!(p(6, 2), ints(&[-2]));
        assert_eq!(p(2, 1), ints(&[-1]));
        assert!(pair_translates(&Integer::from(3), &Integer::from(3)).is_err());
    }

    #[test]
    fn scan_examples() {
        assert_eq!(brute_force_translates(&ints(&[1, 2]), 100).unwrap(), ints(&[-1]));
        assert_eq!(brute_force_translates(&ints(&[0]), 10).unwrap(), ints(&[0, 1, 4, 9]));
        assert_eq!(brute_force_translates(&ints(&[0, 2, 6]), 1_000_000).unwrap(), ints(&[]));
        assert_eq!(brute_force_translates(&ints(&[-50]), 3).unwrap(), ints(&[]));
        assert!(matches!(brute_force_translates(&ints(&[0]), SCAN_MAX_BOUND + 1), Err(Error::Size(_))));
        assert!(brute_force_translates(&[], 5).is_err());
    }

    #[test]
    fn scan_agrees_with_naive_loop() {
        for base in [vec![0i64, 5], vec![-3, 1, 6], vec![7], vec![-20, -11]] {
            let expect: Vec<Integer> = (-400i64..=400)
                .filter(|x| base.iter().all(|a| perfect_square_root(&Integer::from(a + x)).is_some()))
                .map(Integer::from)
                .collect();
            assert_eq!(brute_force_translates(&ints(&base), 400).unwrap(), expect, "{base:?}");
        }
    }

    #[test]
    fn clearing_examples() {
        let fam = TranslateFamily::new(vec![q("0"), q("2"), q("6")], vec![q("1/4")], Integer::from(1)).unwrap();
        let cleared = fam.clear_denominators();
        assert_eq!(cleared.scale(), &Integer::from(2));
        assert_eq!(cleared.base(), &[q("0"), q("8"), q("24")]);
        assert_eq!(cleared.translates(), &[q("1")]);
        assert!(cleared.is_integral());
        assert!(verify_family(cleared.base(), cleared.translates()).unwrap().holds);

        let integral = TranslateFamily::new(vec![q("0"), q("7")], vec![q("9")], Integer::from(1)).unwrap();
        assert_eq!(integral.clear_denominators(), integral);

        let curve = TranslateFamily::new(
            vec![q("4/9"), q("16/9"), q("1/9")],
            vec![q("35/48"), q("347776/99225")],
            Integer::from(1),
        )
        .unwrap();
        let cleared = curve.clear_denominators();
        assert!(cleared.is_integral());
        assert!(verify_family(cleared.base(), cleared.translates()).unwrap().holds);
    }

    #[test]
    fn record_round_trip_rechecks() {
        let fam = TranslateFamily::new(vec![q("0"), q("7")], vec![q("9"), q("729/16")], Integer::from(1)).unwrap();
        let rec = fam.to_record();
        let json = serde_json::to_string(&rec).unwrap();
        let back: FamilyRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(TranslateFamily::from_record(&back).unwrap(), fam);

        let mut bad = rec.clone();
        bad.translates[0] = "10".into();
        assert!(TranslateFamily::from_record(&bad).is_err());
        let mut bad = rec;
        bad.witness_roots[0][0] = "4".into();
        assert!(TranslateFamily::from_record(&bad).is_err());
    }

    #[test]
    fn non_family_rejected() {
        assert!(TranslateFamily::new(vec![q("0"), q("3")], vec![q("2")], Integer::from(1)).is_err());
        assert!(TranslateFamily::new(vec![rational_from_int(0)], vec![q("4")], Integer::from(0)).is_err());
    }
}
