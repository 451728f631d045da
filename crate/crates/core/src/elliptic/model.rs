//! Three squares `Y_i² = X + a_i` as an elliptic curve.
//!
//! With `X = 0` a known solution, write `r_i = √a_i` and parametrize
//! `Y₁ = r₁ + u`, `Y₂ = r₂ + t·u`. Requiring `Y₁² − Y₂² = a₁ − a₂` with
//! `u ≠ 0` forces `u = 2(r₁ − t·r₂)/(t² − 1)`, and then
//! `Y₃² = Y₁² − (a₁ − a₃) = Q(t)/(t² − 1)²` where
//!
//! ```text
//! Q(t) = (r₁t² − 2r₂t + r₁)² − (a₁ − a₃)(t² − 1)²
//! ```
//!
//! has leading coefficient `a₃`. Let `Q̂ = Q/a₃` (monic) and split
//! `Q̂ = G² + H` with `G = t² + g₁t + g₀` and `H = h₁t + h₀` linear: matching
//! the `t³` and `t²` coefficients gives `g₁ = q₃/2`, `g₀ = (q₂ − g₁²)/2`.
//!
//! When `Q̂(t)` is a square put `T₀ = G(t) + √Q̂(t)` and `S₀ = t·T₀`. Then
//! `T₀(T₀ − 2G(t)) = H(t)`, and multiplying through by `T₀`:
//!
//! ```text
//! 2S₀² + (2g₁T₀ + h₁)S₀ = T₀³ − 2g₀T₀² − h₀T₀
//! ```
//!
//! Completing the square in `S₀` and halving `T₀` gives the short form
//! `S² = T³ + αT + β` under
//!
//! ```text
//! T = T₀/2 + c,   c = (g₁²/4 − g₀)/3
//! S = S₀/2 + g₁T₀/4 + h₁/8
//! ```
//!
//! whose `α`, `β` agree with the closed forms in [`curve_from_values`]. The
//! inverse is `T₀ = 2(T − c)`, `S₀ = 2S − g₁T₀/2 − h₁/4`, `t = S₀/T₀`.
//! Compared with the usual presentation this model has the opposite sign
//! on `S`; both signs give points of the same curve.

use num_traits::{One, Zero};

use super::{CurvePoint, EllipticCurve};
use crate::arith::{format_rational, rational_square_root, Rational};
use crate::error::{Error, Result};
use crate::translates::verify_family;

/// Three distinct rational squares `a₁, a₂, a₃` with their non-negative roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareTriple {
    values: [Rational; 3],
    roots: [Rational; 3],
}

impl SquareTriple {
    /// From the squares themselves; each must be a rational square.
    pub fn new(values: [Rational; 3]) -> Result<Self> {
        ensure_distinct(&values)?;
        let mut roots = Vec::with_capacity(3);
        for a in &values {
            roots.push(rational_square_root(a).ok_or_else(|| {
                Error::domain(format!("{} is not a rational square", format_rational(a)))
            })?);
        }
        Ok(SquareTriple {
            values,
            roots: roots.try_into().unwrap(),
        })
    }

    /// From non-negative roots `r_i`, giving `a_i = r_i²`.
    pub fn from_roots(roots: [Rational; 3]) -> Result<Self> {
        if roots.iter().any(|r| r < &Rational::zero()) {
            return Err(Error::domain("roots must be non-negative"));
        }
        let values = roots.clone().map(|r| &r * &r);
        ensure_distinct(&values)?;
        Ok(SquareTriple { values, roots })
    }

    pub fn values(&self) -> &[Rational; 3] {
        &self.values
    }

    pub fn roots(&self) -> &[Rational; 3] {
        &self.roots
    }
}

fn ensure_distinct(a: &[Rational; 3]) -> Result<()> {
    if a[0] == a[1] || a[0] == a[2] || a[1] == a[2] {
        return Err(Error::domain("triple entries must be distinct"));
    }
    Ok(())
}

/// The curve `S² = T³ + αT + β` attached to `(a₁, a₂, a₃)`:
///
/// ```text
/// α = (−Σ aᵢ² + Σ_{i<j} aᵢaⱼ) / (3a₃²)
/// β = (2Σ aᵢ³ − 3Σ_{i≠j} aᵢ²aⱼ + 12a₁a₂a₃) / (27a₃³)
/// ```
///
/// The `aᵢ` need not be squares for the formula; the point-to-translate map
/// needs them to be (see [`SquareTriple`]).
pub fn curve_from_values(a: &[Rational; 3]) -> Result<EllipticCurve> {
    ensure_distinct(a)?;
    let [a1, a2, a3] = a;
    if a3.is_zero() {
        return Err(Error::domain("a3 must be nonzero"));
    }
    let int = |n: i64| Rational::from_integer(n.into());
    let sq_sum = a1 * a1 + a2 * a2 + a3 * a3;
    let pair_sum = a1 * a2 + a1 * a3 + a2 * a3;
    let cube_sum = a1 * a1 * a1 + a2 * a2 * a2 + a3 * a3 * a3;
    let mixed = a1 * a1 * (a2 + a3) + a2 * a2 * (a1 + a3) + a3 * a3 * (a1 + a2);
    let alpha = (pair_sum - sq_sum) / (int(3) * a3 * a3);
    let beta = (int(2) * cube_sum - int(3) * mixed + int(12) * a1 * a2 * a3) / (int(27) * a3 * a3 * a3);
    EllipticCurve::new(alpha, beta)
}

pub fn curve_from_triple(t: &SquareTriple) -> Result<EllipticCurve> {
    curve_from_values(&t.values)
}

/// The change of variables between the `t`-parametrization of a
/// [`SquareTriple`] and its Weierstrass curve (see module docs).
#[derive(Debug, Clone)]
pub struct TripleModel {
    triple: SquareTriple,
    curve: EllipticCurve,
    /// `Q̂(t)` coefficients, constant term first.
    monic_quartic: [Rational; 5],
    g1: Rational,
    g0: Rational,
    h1: Rational,
    h0: Rational,
    shift: Rational,
}

/// Why a curve point yields no new translate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degeneracy {
    Infinity,
    /// `T₀ = 0`: `t = S₀/T₀` is undefined.
    VanishingT0,
    /// `t = ±1`: only `u = 0` solves `Y₁² − Y₂² = a₁ − a₂`.
    UnitParameter,
    /// The point maps back to the seed solution `X = 0` (`u = 0` or `u = −2r₁`).
    SeedSolution,
}

impl std::fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Degeneracy::Infinity => "point at infinity",
            Degeneracy::VanishingT0 => "T0 = 0, parameter t undefined",
            Degeneracy::UnitParameter => "t = ±1, only u = 0 solves the first equation",
            Degeneracy::SeedSolution => "point maps to the seed solution X = 0",
        };
        f.write_str(s)
    }
}

/// A translate `X` recovered from a curve point, with its intermediate values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointTranslate {
    pub t: Rational,
    pub u: Rational,
    pub x: Rational,
    /// `√(X + aᵢ)` for `i = 1, 2, 3`.
    pub roots: [Rational; 3],
}

fn poly_eval(coeffs: &[Rational], t: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

fn poly_mul(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

impl TripleModel {
    pub fn new(triple: SquareTriple) -> Result<Self> {
        let curve = curve_from_triple(&triple)?;
        let [r1, r2, _] = triple.roots.clone();
        let [a1, _, a3] = triple.values.clone();
        let two = Rational::from_integer(2.into());

        // Q(t) = (r1 t² − 2 r2 t + r1)² − (a1 − a3)(t² − 1)²
        let lin = [r1.clone(), -&two * &r2, r1];
        let unit = [-Rational::one(), Rational::zero(), Rational::one()];
        let sq = poly_mul(&lin, &lin);
        let unit_sq = poly_mul(&unit, &unit);
        let diff = &a1 - &a3;
        let q: Vec<Rational> = sq.iter().zip(&unit_sq).map(|(x, y)| x - &diff * y).collect();
        debug_assert_eq!(q[4], a3);
        let monic: [Rational; 5] = q.iter().map(|c| c / &a3).collect::<Vec<_>>().try_into().unwrap();

        let g1 = &monic[3] / &two;
        let g0 = (&monic[2] - &g1 * &g1) / &two;
        let g = [g0.clone(), g1.clone(), Rational::one()];
        let g_sq = poly_mul(&g, &g);
        let h: Vec<Rational> = monic.iter().zip(&g_sq).map(|(x, y)| x - y).collect();
        debug_assert!(h[2].is_zero() && h[3].is_zero() && h[4].is_zero());
        let four = Rational::from_integer(4.into());
        let shift = (&g1 * &g1 / &four - &g0) / Rational::from_integer(3.into());

        Ok(TripleModel {
            triple,
            curve,
            monic_quartic: monic,
            g1,
            g0,
            h1: h[1].clone(),
            h0: h[0].clone(),
            shift,
        })
    }

    pub fn triple(&self) -> &SquareTriple {
        &self.triple
    }

    pub fn curve(&self) -> &EllipticCurve {
        &self.curve
    }

    /// `Q(t)/a₃`, the monic quartic that must be a square.
    pub fn monic_quartic(&self, t: &Rational) -> Rational {
        poly_eval(&self.monic_quartic, t)
    }

    fn g(&self, t: &Rational) -> Rational {
        t * t + &self.g1 * t + &self.g0
    }

    /// `u = 2(r₁ − t·r₂)/(t² − 1)`; `None` for `t = ±1`.
    pub fn u_of(&self, t: &Rational) -> Option<Rational> {
        let den = t * t - Rational::one();
        if den.is_zero() {
            return None;
        }
        let [r1, r2, _] = &self.triple.roots;
        Some(Rational::from_integer(2.into()) * (r1 - t * r2) / den)
    }

    /// Curve points attached to parameter `t`, one per sign of `√Q̂(t)` that
    /// gives `T₀ ≠ 0`. Empty when `Q̂(t)` is not a rational square.
    pub fn points_from_parameter(&self, t: &Rational) -> Vec<CurvePoint> {
        let Some(root) = rational_square_root(&self.monic_quartic(t)) else {
            return Vec::new();
        };
        let g = self.g(t);
        let mut out = Vec::new();
        for t0 in [&g + &root, &g - &root] {
            if t0.is_zero() {
                continue;
            }
            let s0 = t * &t0;
            let p = self.to_weierstrass(&t0, &s0);
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    fn to_weierstrass(&self, t0: &Rational, s0: &Rational) -> CurvePoint {
        let two = Rational::from_integer(2.into());
        let four = Rational::from_integer(4.into());
        let eight = Rational::from_integer(8.into());
        let x = t0 / &two + &self.shift;
        let y = s0 / &two + &self.g1 * t0 / &four + &self.h1 / &eight;
        CurvePoint::affine(x, y)
    }

    /// The parameter `t = S₀/T₀` of an affine point.
    pub fn parameter_of(&self, p: &CurvePoint) -> std::result::Result<Rational, Degeneracy> {
        let CurvePoint::Affine { x, y } = p else {
            return Err(Degeneracy::Infinity);
        };
        let two = Rational::from_integer(2.into());
        let four = Rational::from_integer(4.into());
        let t0 = &two * (x - &self.shift);
        if t0.is_zero() {
            return Err(Degeneracy::VanishingT0);
        }
        let s0 = &two * y - &self.g1 * &t0 / &two - &self.h1 / &four;
        Ok(s0 / t0)
    }

    /// Maps a curve point back to a translate `X` with `X + aᵢ` square for
    /// all three `aᵢ`, verifying the squares before returning.
    pub fn point_to_translate(&self, p: &CurvePoint) -> Result<PointTranslate> {
        if !self.curve.contains(p) {
            return Err(Error::validation(format!("point {p} is not on the curve")));
        }
        let degenerate = |d: Degeneracy| Error::Degenerate(format!("{p}: {d}"));
        let t = self.parameter_of(p).map_err(degenerate)?;
        let u = self.u_of(&t).ok_or_else(|| degenerate(Degeneracy::UnitParameter))?;
        let [r1, _, _] = &self.triple.roots;
        let [a1, _, _] = &self.triple.values;
        let y1 = r1 + &u;
        let x = &y1 * &y1 - a1;
        if x.is_zero() {
            return Err(degenerate(Degeneracy::SeedSolution));
        }

        let check = verify_family(&self.triple.values, std::slice::from_ref(&x))?;
        if !check.holds {
            return Err(Error::Internal(format!(
                "{p} produced X = {} which fails the square check",
                format_rational(&x)
            )));
        }
        let roots: [Rational; 3] = check
            .roots
            .into_iter()
            .next()
            .unwrap()
            .into_iter()
            .map(Option::unwrap)
            .collect::<Vec<_>>()
            .try_into()
            .unwrap();
        Ok(PointTranslate { t, u, x, roots })
    }

    /// The constants of the change of variables, for documentation and tests:
    /// `(g₁, g₀, h₁, h₀, c)`.
    pub fn coefficients(&self) -> [&Rational; 5] {
        [&self.g1, &self.g0, &self.h1, &self.h0, &self.shift]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn euler_triple() -> SquareTriple {
        SquareTriple::new([q("4/9"), q("16/9"), q("1/9")]).unwrap()
    }

    #[test]
    fn curve_parameters() {
        let c = curve_from_triple(&euler_triple()).unwrap();
        assert_eq!((c.alpha(), c.beta()), (&q("-63"), &q("162")));

        let c = curve_from_values(&[q("3"), q("34"), q("89")]).unwrap();
        assert_eq!(c.alpha(), &q("-1897/7921"));
        assert_eq!(c.beta(), &q("14664/704969"));
    }

    #[test]
    fn triple_errors() {
        assert!(matches!(
            curve_from_values(&[q("1"), q("1"), q("4")]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(curve_from_values(&[q("1"), q("4"), q("0")]), Err(Error::Domain(_))));
        assert!(SquareTriple::new([q("1"), q("2"), q("4")]).is_err());
        assert!(SquareTriple::new([q("1"), q("1"), q("4")]).is_err());
    }

    #[test]
    fn model_coefficients() {
        let m = TripleModel::new(euler_triple()).unwrap();
        let [g1, g0, h1, h0, c] = m.coefficients();
        assert_eq!((g1, g0, h1, h0, c), (&q("-16"), &q("-89"), &q("-2880"), &q("-7920"), &q("51")));
    }

    #[test]
    fn parameter_round_trip() {
        let m = TripleModel::new(euler_triple()).unwrap();
        let mut hits = 0;
        for num in -40i64..=40 {
            for den in 1i64..=6 {
                let t = Rational::new(num.into(), den.into());
                for p in m.points_from_parameter(&t) {
                    assert!(m.curve().contains(&p), "t = {t}: {p} off curve");
                    assert_eq!(m.parameter_of(&p).unwrap(), t);
                    hits += 1;
                }
            }
        }
        assert!(hits > 0);
    }

    #[test]
    fn degenerate_points() {
        let m = TripleModel::new(euler_triple()).unwrap();
        let err = |p: CurvePoint| m.point_to_translate(&p).unwrap_err();
        assert!(matches!(err(CurvePoint::Infinity), Error::Degenerate(_)));
        for x in [3, 6, -9] {
            assert!(matches!(err(CurvePoint::from_ints(x, 0)), Error::Degenerate(_)));
        }
        // T = c = 51 has T0 = 0; 51³ − 63·51 + 162 = 360²
        assert!(matches!(err(CurvePoint::from_ints(51, 360)), Error::Degenerate(_)));
        assert!(matches!(err(CurvePoint::from_ints(7, 9)), Error::Validation(_)));
    }

    #[test]
    fn non_torsion_point_gives_translate() {
        let m = TripleModel::new(euler_triple()).unwrap();
        let tr = m.point_to_translate(&CurvePoint::from_ints(7, 8)).unwrap();
        assert_eq!(tr.x, q("347776/99225"));
        for (root, a) in tr.roots.iter().zip(m.triple().values()) {
            assert_eq!(root * root, &tr.x + a);
        }
        let tr = m.point_to_translate(&CurvePoint::from_ints(1, 10)).unwrap();
        assert_eq!(tr.x, q("35/48"));
    }
}
