use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::Serialize;

use crate::arith::{format_rational, Integer, Rational};
use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::rng::attempt_rng;

/// The real number `(s + sign·√(s² − 4p))/2`, one of the two roots of
/// `x² − s·x + p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlgebraicLabel {
    s: Rational,
    p: Rational,
    sign: i8,
}

impl AlgebraicLabel {
    pub fn new(s: Rational, p: Rational, sign: i8) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::validation(format!("sign must be ±1, got {sign}")));
        }
        let disc = &s * &s - Rational::from_integer(4.into()) * &p;
        if !disc.is_positive() {
            return Err(Error::domain(format!(
                "s² − 4p = {} must be positive",
                format_rational(&disc)
            )));
        }
        Ok(AlgebraicLabel { s, p, sign })
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn discriminant(&self) -> Rational {
        &self.s * &self.s - Rational::from_integer(4.into()) * &self.p
    }

    /// Double-precision approximation.
    pub fn approx(&self) -> f64 {
        let s = self.s.to_f64().unwrap_or(f64::NAN);
        let d = self.discriminant().to_f64().unwrap_or(f64::NAN);
        (s + f64::from(self.sign) * d.sqrt()) / 2.0
    }

    /// The conjugate root, so that `self + conjugate = s` and `self·conjugate = p`.
    pub fn conjugate(&self) -> AlgebraicLabel {
        AlgebraicLabel {
            s: self.s.clone(),
            p: self.p.clone(),
            sign: -self.sign,
        }
    }

    /// Exact equality of the real numbers denoted.
    ///
    /// A common value `x` satisfies both quadratics, so `(s₂ − s₁)x = p₂ − p₁`.
    /// With `s₁ ≠ s₂` this pins `x` to a rational, which is then tested
    /// against both labels; with `s₁ = s₂` the quadratics agree iff `p₁ = p₂`.
    pub fn same_value(&self, other: &AlgebraicLabel) -> bool {
        if self.s == other.s {
            return self.p == other.p && self.sign == other.sign;
        }
        let x = (&other.p - &self.p) / (&other.s - &self.s);
        self.is_rational_value(&x) && other.is_rational_value(&x)
    }

    fn is_rational_value(&self, x: &Rational) -> bool {
        let w = Rational::from_integer(2.into()) * x - &self.s;
        &w * &w == self.discriminant() && (w.is_positive() == (self.sign > 0))
    }

    /// Checks `x + y = s` and `x·y = p` for `x = self`, `y = conjugate`
    /// by computing in `ℚ(√Δ)` with `x = s/2 + σ/2·√Δ`.
    pub fn pair_identity_holds(&self) -> bool {
        let half = Rational::new(1.into(), 2.into());
        let x = Quadratic {
            a: &self.s * &half,
            b: &half * Rational::from_integer(self.sign.into()),
        };
        let y = Quadratic {
            a: x.a.clone(),
            b: -x.b.clone(),
        };
        let d = self.discriminant();
        let sum = x.add(&y);
        let prod = x.mul(&y, &d);
        sum.a == self.s && sum.b.is_zero() && prod.a == self.p && prod.b.is_zero()
    }
}

/// `a + b·√Δ` for a fixed `Δ` supplied to `mul`.
struct Quadratic {
    a: Rational,
    b: Rational,
}

impl Quadratic {
    fn add(&self, o: &Quadratic) -> Quadratic {
        Quadratic {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }

    fn mul(&self, o: &Quadratic, d: &Rational) -> Quadratic {
        Quadratic {
            a: &self.a * &o.a + &self.b * &o.b * d,
            b: &self.a * &o.b + &self.b * &o.a,
        }
    }
}

/// Whether all labels denote distinct reals. Labels are sorted by their
/// floating-point value and only neighbours closer than a tolerance far
/// above rounding error are compared exactly.
pub fn all_distinct(labels: &[AlgebraicLabel]) -> bool {
    let mut order: Vec<(f64, usize)> = labels.iter().map(|l| l.approx()).zip(0..).collect();
    order.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal));
    const TOL: f64 = 1e-6;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if order[j].0 - order[i].0 > TOL {
                break;
            }
            if labels[order[i].1].same_value(&labels[order[j].1]) {
                return false;
            }
        }
    }
    true
}

/// A matching labelled by quadratic irrationals with `⌈√n⌉` sums and products.
#[derive(Debug, Clone)]
pub struct RealMatching {
    pub graph: Graph,
    /// Vertex `v`'s label.
    pub labels: Vec<AlgebraicLabel>,
    pub sums: BTreeSet<Rational>,
    pub products: BTreeSet<Rational>,
    /// Sampling attempts used, counting from 1.
    pub attempts: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RealMatchingSummary {
    pub edges: usize,
    pub sum_count: usize,
    pub product_count: usize,
    pub attempts: u64,
}

impl RealMatching {
    pub fn summary(&self) -> RealMatchingSummary {
        RealMatchingSummary {
            edges: self.graph.edge_count(),
            sum_count: self.sums.len(),
            product_count: self.products.len(),
            attempts: self.attempts,
        }
    }
}

pub const REAL_MATCHING_MAX_EDGES: usize = 100_000;
pub const REAL_MATCHING_RETRIES: u64 = 16;
const GRID: i64 = 1_000_000;

fn sample_in_unit(rng: &mut impl Rng, m: usize) -> Vec<Rational> {
    let mut out = BTreeSet::new();
    while out.len() < m {
        let k: i64 = rng.gen_range(0..=GRID);
        out.insert(Rational::from_integer(5.into()) + Rational::new(Integer::from(k), Integer::from(GRID)));
    }
    out.into_iter().collect()
}

/// `n` disjoint pairs of reals with at most `m = ⌈√n⌉` sums and products.
///
/// Draws `m` distinct rationals from `[5, 6]` and uses them both as sums and
/// as products. Since `s² − 4p ≥ 25 − 24 > 0`, each `(s, p)` gives a pair of
/// distinct real roots. The first `n` of the `m²` pairs are used; the draw
/// is repeated when two labels coincide.
pub fn real_matching_family(n: usize, seed: u64) -> Result<RealMatching> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    if n > REAL_MATCHING_MAX_EDGES {
        return Err(Error::size(format!("n = {n} exceeds {REAL_MATCHING_MAX_EDGES}")));
    }
    let m = crate::graphs::ceil_sqrt(n as u64) as usize;
    for attempt in 0..REAL_MATCHING_RETRIES {
        let values = sample_in_unit(&mut attempt_rng(seed, attempt), m);
        let mut labels = Vec::with_capacity(2 * n);
        let mut sums = BTreeSet::new();
        let mut products = BTreeSet::new();
        for (s, p) in values
            .iter()
            .flat_map(|s| values.iter().map(move |p| (s, p)))
            .take(n)
        {
            let x = AlgebraicLabel::new(s.clone(), p.clone(), 1)?;
            labels.push(x.conjugate());
            labels.push(x);
            sums.insert(s.clone());
            products.insert(p.clone());
        }
        if all_distinct(&labels) {
            return Ok(RealMatching {
                graph: Graph::matching(n),
                labels,
                sums,
                products,
                attempts: attempt + 1,
            });
        }
    }
    Err(Error::Stochastic {
        attempts: REAL_MATCHING_RETRIES as usize,
        detail: "every sample produced coinciding labels".into(),
    })
}
