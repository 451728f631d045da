use std::fmt;

use num_integer::Integer as _;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, parse_rational, rational_square_root, Integer, Rational};
use crate::error::{Error, Result};

/// `y² = x³ + αx + β` over ℚ with nonzero discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticCurve {
    alpha: Rational,
    beta: Rational,
}

/// A rational point: affine `(x, y)` or the point at infinity (the identity).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        CurvePoint::Affine {
            x: Rational::from_integer(x.into()),
            y: Rational::from_integer(y.into()),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&Rational> {
        match self {
            CurvePoint::Affine { x, .. } => Some(x),
            CurvePoint::Infinity => None,
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine { x, y } => {
                write!(f, "({}, {})", format_rational(x), format_rational(y))
            }
        }
    }
}

pub const SCAN_MAX_BOUND: u64 = 10_000;
pub const DEFAULT_SCAN_DENOMINATOR: u64 = 4;
/// Multiples checked before a point is treated as having infinite order.
/// Rational torsion never exceeds order 12.
pub const TORSION_SEARCH_LIMIT: usize = 16;

impl EllipticCurve {
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        let c = EllipticCurve { alpha, beta };
        if c.discriminant().is_zero() {
            return Err(Error::Degenerate(format!(
                "singular curve: alpha = {}, beta = {}",
                format_rational(&c.alpha),
                format_rational(&c.beta)
            )));
        }
        Ok(c)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// `−16(4α³ + 27β²)`
    pub fn discriminant(&self) -> Rational {
        let a = &self.alpha;
        let b = &self.beta;
        let inner = Rational::from_integer(4.into()) * a * a * a
            + Rational::from_integer(27.into()) * b * b;
        -Rational::from_integer(16.into()) * inner
    }

    /// `x³ + αx + β`
    pub fn rhs(&self, x: &Rational) -> Rational {
        x * x * x + &self.alpha * x + &self.beta
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y * y == self.rhs(x),
        }
    }

    fn check(&self, p: &CurvePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::validation(format!("point {p} is not on the curve")))
        }
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::affine(x.clone(), -y),
        }
    }

    /// Chord-tangent addition.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub(crate) fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let slope = if x1 == x2 {
            if y1 != y2 || y1.is_zero() {
                return CurvePoint::Infinity;
            }
            (Rational::from_integer(3.into()) * x1 * x1 + &self.alpha)
                / (Rational::from_integer(2.into()) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &slope * &slope - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        CurvePoint::affine(x3, y3)
    }

    pub fn double(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.add(p, p)
    }

    /// `k · p` by double-and-add; negative `k` negates.
    pub fn mul(&self, p: &CurvePoint, k: i64) -> Result<CurvePoint> {
        self.check(p)?;
        let mut base = if k < 0 { self.neg(p) } else { p.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// The order of `p` if it is at most `limit`, found by stepping through multiples.
    pub fn order_up_to(&self, p: &CurvePoint, limit: usize) -> Result<Option<usize>> {
        self.check(p)?;
        let mut acc = p.clone();
        for k in 1..=limit {
            if acc.is_infinity() {
                return Ok(Some(k));
            }
            acc = self.add_unchecked(&acc, p);
        }
        Ok(None)
    }

    /// Torsion test by small multiples (see [`TORSION_SEARCH_LIMIT`]).
    pub fn is_torsion(&self, p: &CurvePoint) -> Result<bool> {
        Ok(self.order_up_to(p, TORSION_SEARCH_LIMIT)?.is_some())
    }

    /// Affine points with `x = p/q` in lowest terms, `1 ≤ q ≤ max_denominator`
    /// and `|x| ≤ bound`, each verified on the curve. Sorted by `x` then `y`.
    ///
    /// A search, not a census: an empty result says nothing about the group.
    pub fn scan_rational_points(&self, bound: u64, max_denominator: u64) -> Result<Vec<CurvePoint>> {
        if bound > SCAN_MAX_BOUND {
            return Err(Error::size(format!("point scan bound limited to {SCAN_MAX_BOUND}")));
        }
        if max_denominator == 0 {
            return Err(Error::domain("denominator cap must be positive"));
        }
        let mut out = Vec::new();
        for q in 1..=max_denominator {
            let limit = (bound * q) as i64;
            for p in -limit..=limit {
                if Integer::from(p).gcd(&Integer::from(q)) != Integer::from(1) {
                    continue;
                }
                let x = Rational::new(p.into(), q.into());
                if let Some(y) = rational_square_root(&self.rhs(&x)) {
                    if !y.is_zero() {
                        out.push(CurvePoint::affine(x.clone(), -y.clone()));
                    }
                    out.push(CurvePoint::affine(x, y));
                }
            }
        }
        debug_assert!(out.iter().all(|p| self.contains(p)));
        out.sort();
        Ok(out)
    }

    pub fn to_record(&self, points: &[CurvePoint]) -> CurveRecord {
        CurveRecord {
            alpha: format_rational(&self.alpha),
            beta: format_rational(&self.beta),
            points: points
                .iter()
                .filter_map(|p| match p {
                    CurvePoint::Affine { x, y } => Some([format_rational(x), format_rational(y)]),
                    CurvePoint::Infinity => None,
                })
                .collect(),
        }
    }
}

/// JSON form of a curve with a list of affine points, numbers as `"p/q"` strings.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CurveRecord {
    pub alpha: String,
    pub beta: String,
    pub points: Vec<[String; 2]>,
}

impl CurveRecord {
    /// Parses the record and re-verifies that every listed point is on the curve.
    pub fn load(&self) -> Result<(EllipticCurve, Vec<CurvePoint>)> {
        let curve = EllipticCurve::new(parse_rational(&self.alpha)?, parse_rational(&self.beta)?)?;
        let points = self
            .points
            .iter()
            .map(|[x, y]| {
                let p = CurvePoint::affine(parse_rational(x)?, parse_rational(y)?);
                curve.check(&p)?;
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((curve, points))
    }
}

/// Convenience for tests and callers holding integer coefficients.
pub fn curve_from_ints(alpha: i64, beta: i64) -> Result<EllipticCurve> {
    EllipticCurve::new(Rational::from_integer(alpha.into()), Rational::from_integer(beta.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn curve() -> EllipticCurve {
        curve_from_ints(-63, 162).unwrap()
    }

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn identity_and_inverse() {
        let c = curve();
        let p = CurvePoint::from_ints(7, 8);
        assert_eq!(c.add(&p, &CurvePoint::Infinity).unwrap(), p);
        assert_eq!(c.add(&CurvePoint::Infinity, &p).unwrap(), p);
        assert!(c.add(&p, &c.neg(&p)).unwrap().is_infinity());
    }

    #[test]
    fn two_torsion() {
        // x³ − 63x + 162 = (x − 3)(x − 6)(x + 9)
        let c = curve();
        for x in [3, 6, -9] {
            let p = CurvePoint::from_ints(x, 0);
            assert!(c.double(&p).unwrap().is_infinity());
            assert_eq!(c.order_up_to(&p, 16).unwrap(), Some(2));
        }
    }

    #[test]
    fn doubling() {
        let c = curve();
        let d = c.double(&CurvePoint::from_ints(7, 8)).unwrap();
        assert_eq!(d, CurvePoint::affine(q("217/16"), q("-2717/64")));
        assert!(c.contains(&d));
        assert_eq!(c.mul(&CurvePoint::from_ints(7, 8), 2).unwrap(), d);
        assert_eq!(c.mul(&CurvePoint::from_ints(7, 8), -2).unwrap(), c.neg(&d));
        assert!(!c.is_torsion(&CurvePoint::from_ints(7, 8)).unwrap());
    }

    #[test]
    fn off_curve_rejected() {
        let c = curve();
        let bad = CurvePoint::from_ints(7, 9);
        assert!(matches!(c.add(&bad, &bad), Err(Error::Validation(_))));
    }

    #[test]
    fn singular_rejected() {
        // y² = x³ − 3x + 2 = (x − 1)²(x + 2)
        assert!(matches!(curve_from_ints(-3, 2), Err(Error::Degenerate(_))));
    }

    #[test]
    fn scan_small_points() {
        let c = curve();
        let pts = c.scan_rational_points(20, 1).unwrap();
        for (x, y) in [(1, 10), (1, -10), (-3, 18), (-3, -18), (-6, 18), (-6, -18), (7, 8), (7, -8), (3, 0), (6, 0), (-9, 0)] {
            assert!(pts.contains(&CurvePoint::from_ints(x, y)), "missing ({x}, {y})");
        }
        assert!(pts.iter().all(|p| c.contains(p)));
        // x = 0 gives 162, not a square
        assert!(c.scan_rational_points(0, 1).unwrap().is_empty());
        // y² = x³ + 16 at x = 0
        let c2 = curve_from_ints(0, 16).unwrap();
        assert_eq!(c2.scan_rational_points(0, 1).unwrap().len(), 2);
        assert!(matches!(c.scan_rational_points(SCAN_MAX_BOUND + 1, 1), Err(Error::Size(_))));
    }

    #[test]
    fn scan_finds_rational_x() {
        let c = curve();
        let pts = c.scan_rational_points(20, 16).unwrap();
        assert!(pts.contains(&CurvePoint::affine(q("217/16"), q("-2717/64"))));
    }

    #[test]
    fn record_reload_verifies() {
        let c = curve();
        let pts = vec![CurvePoint::from_ints(7, 8)];
        let rec = c.to_record(&pts);
        let (c2, p2) = rec.load().unwrap();
        assert_eq!((c2, p2), (c, pts));
        let mut bad = rec;
        bad.points[0][1] = "9".into();
        assert!(bad.load().is_err());
    }
}
