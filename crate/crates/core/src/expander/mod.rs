//! Cayley sum graphs over `ℤ_n`: `y ~ z` when `y + z mod n ∈ T`.
//!
//! With `T` a random set of size `d ~ c·log n` whose nontrivial character
//! sums are small, the graph is an expander, yet labelling vertex `y` by the
//! integer `y + 1` gives at most `2|T|` distinct edge sums.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use rand::seq::index::sample;
use rayon::prelude::*;
use rustfft::num_complex::Complex;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{diameter_lemma_check, sum_set, Graph, Labeling};
use crate::rng::attempt_rng;

/// Moduli at or above this use an FFT for character sums.
pub const FFT_THRESHOLD: usize = 1 << 12;
pub const CAYLEY_MAX_N: usize = 1 << 16;

/// `ℤ_n` with a connection set `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleySumGraph {
    n: usize,
    t: BTreeSet<usize>,
}

impl CayleySumGraph {
    pub fn new(n: usize, t: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 3 {
            return Err(Error::domain(format!("modulus must be at least 3, got {n}")));
        }
        if n > CAYLEY_MAX_N {
            return Err(Error::size(format!("modulus {n} exceeds {CAYLEY_MAX_N}")));
        }
        let t: BTreeSet<usize> = t.into_iter().collect();
        if t.is_empty() {
            return Err(Error::validation("connection set is empty"));
        }
        if let Some(&s) = t.iter().find(|&&s| s >= n) {
            return Err(Error::validation(format!("residue {s} is not below {n}")));
        }
        Ok(CayleySumGraph { n, t })
    }

    pub fn modulus(&self) -> usize {
        self.n
    }

    pub fn connection_set(&self) -> &BTreeSet<usize> {
        &self.t
    }

    /// The simple graph: pairs `y ≠ z` with `y + z mod n ∈ T`. A vertex with
    /// `2y ∈ T` would carry a loop, which is dropped.
    pub fn graph(&self) -> Graph {
        let n = self.n;
        let mut edges = Vec::new();
        for &s in &self.t {
            for y in 0..n {
                let z = (s + n - y) % n;
                if y < z {
                    edges.push((y, z));
                }
            }
        }
        Graph::new(n, edges).expect("each pair has a single residue sum")
    }

    /// Labels vertex `y` by the integer `y + 1`.
    pub fn labeling(&self) -> Labeling {
        Labeling::from_integers(1..=self.n as u64).expect("distinct")
    }
}

pub fn build_cayley_sum(n: usize, t: &[usize]) -> Result<Graph> {
    Ok(CayleySumGraph::new(n, t.iter().copied())?.graph())
}

/// `|Σ_{s∈T} e^{2πijs/n}|` for every `j = 0..n`, with a bound on the
/// floating-point error of each entry.
pub fn char_sums(n: usize, t: &BTreeSet<usize>) -> (Vec<f64>, f64) {
    let d = t.len() as f64;
    let eps = f64::EPSILON;
    if n >= FFT_THRESHOLD {
        let mut buf = vec![Complex::new(0.0, 0.0); n];
        for &s in t {
            buf[s].re = 1.0;
        }
        FftPlanner::<f64>::new().plan_fft_forward(n).process(&mut buf);
        // forward FFT gives the conjugate sums, which have the same modulus
        let radius = 8.0 * d * ((n as f64).log2() + 2.0) * eps;
        (buf.iter().map(|c| c.norm()).collect(), radius)
    } else {
        let table: Vec<(f64, f64)> = (0..n)
            .map(|k| {
                let a = 2.0 * PI * k as f64 / n as f64;
                (a.cos(), a.sin())
            })
            .collect();
        let values = (0..n)
            .map(|j| {
                let (re, im) = t.iter().fold((0.0, 0.0), |(re, im), &s| {
                    let (c, si) = table[(j * s) % n];
                    (re + c, im + si)
                });
                re.hypot(im)
            })
            .collect();
        (values, 8.0 * d * eps)
    }
}

/// The largest nontrivial character sum.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharSumMax {
    pub value: f64,
    /// The maximizing `j` in `1..n`.
    pub argmax: usize,
    /// Upper bound on the floating-point error of `value`.
    pub radius: f64,
}

pub fn char_sum_max(n: usize, t: &BTreeSet<usize>) -> Result<CharSumMax> {
    if t.is_empty() {
        return Err(Error::validation("connection set is empty"));
    }
    if n < 2 {
        return Err(Error::domain("modulus must be at least 2"));
    }
    let (values, radius) = char_sums(n, t);
    let (argmax, value) = values
        .iter()
        .enumerate()
        .skip(1)
        .fold((1, f64::NEG_INFINITY), |best, (j, &v)| if v > best.1 { (j, v) } else { best });
    Ok(CharSumMax { value, argmax, radius })
}

/// `3·√d·√ln(10n)`.
pub fn good_threshold(n: usize, d: usize) -> f64 {
    3.0 * (d as f64).sqrt() * (10.0 * n as f64).ln().sqrt()
}

/// A connection set certified to have small character sums.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GoodSet {
    pub residues: Vec<usize>,
    pub certificate: CharSumMax,
    pub threshold: f64,
    /// Zero-based index of the accepted attempt.
    pub attempt: u64,
}

/// Samples `d`-subsets of `ℤ_n` until one has every nontrivial character
/// sum at most `3√d·√ln(10n)`, with the error radius included.
#[allow(non_snake_case)]
pub fn random_good_T(n: usize, d: usize, seed: u64, attempts: u64) -> Result<GoodSet> {
    if attempts == 0 {
        return Err(Error::domain("attempts must be positive"));
    }
    if !(3..=CAYLEY_MAX_N).contains(&n) {
        return Err(Error::domain(format!("modulus must lie in 3..={CAYLEY_MAX_N}, got {n}")));
    }
    if d == 0 || (d as u128).pow(3) > (n as u128).pow(2) {
        return Err(Error::precondition(format!("need 1 ≤ d ≤ n^(2/3), got d = {d}, n = {n}")));
    }
    let threshold = good_threshold(n, d);
    let found = (0..attempts).into_par_iter().find_map_first(|a| {
        let mut rng = attempt_rng(seed, a);
        let t: BTreeSet<usize> = sample(&mut rng, n, d).into_iter().collect();
        let cert = char_sum_max(n, &t).ok()?;
        (cert.value + cert.radius <= threshold).then(|| GoodSet {
            residues: t.into_iter().collect(),
            certificate: cert,
            threshold,
            attempt: a,
        })
    });
    found.ok_or_else(|| Error::Stochastic {
        attempts: attempts as usize,
        detail: format!("no {d}-subset of Z_{n} met the character-sum threshold {threshold:.4}"),
    })
}

/// `δ = (d − λ)/(2d)`: every `(n, d, λ)`-graph is a `δ`-expander.
pub fn expander_delta(d: f64, lambda: f64) -> Result<f64> {
    if d.is_nan() || d <= 0.0 || lambda.is_nan() || lambda < 0.0 {
        return Err(Error::domain(format!("need d > 0 and λ ≥ 0, got d = {d}, λ = {lambda}")));
    }
    if lambda > d {
        return Err(Error::domain(format!("λ = {lambda} exceeds d = {d}")));
    }
    Ok((d - lambda) / (2.0 * d))
}

/// Measurements of one Cayley sum graph with a certified connection set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CayleyReport {
    pub n: usize,
    pub d: usize,
    #[serde(rename = "T")]
    pub t: Vec<usize>,
    pub certificate: CharSumMax,
    pub threshold: f64,
    pub attempt: u64,
    pub delta: f64,
    /// `(d − threshold)/(2d)`, the expansion promised by any good set.
    pub delta_lower_bound: f64,
    pub sum_set_size: usize,
    pub sum_set_bound: usize,
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    /// The sum-set/diameter inequality holds on every component.
    pub lemma_check: bool,
}

pub fn cayley_sum_experiment(n: usize, d: usize, seed: u64, attempts: u64) -> Result<CayleyReport> {
    let good = random_good_T(n, d, seed, attempts)?;
    let cayley = CayleySumGraph::new(n, good.residues.iter().copied())?;
    let g = cayley.graph();
    let l = cayley.labeling();
    let sums = sum_set(&g, &l)?;
    let checks = diameter_lemma_check(&g, &l)?;
    let connected = checks.len() == 1 && checks[0].vertices == n;
    let diameter = connected.then(|| checks[0].diameter);
    let lambda = good.certificate.value.min(d as f64);
    Ok(CayleyReport {
        n,
        d,
        certificate: good.certificate.clone(),
        threshold: good.threshold,
        attempt: good.attempt,
        delta: expander_delta(d as f64, lambda)?,
        delta_lower_bound: (d as f64 - good.threshold) / (2.0 * d as f64),
        sum_set_size: sums.len(),
        sum_set_bound: 2 * good.residues.len(),
        diameter,
        lemma_check: checks.iter().all(|c| c.holds),
        t: good.residues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::{DMatrix, SymmetricEigen};

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn small_builds() {
        assert_eq!(build_cayley_sum(5, &[0]).unwrap().edges(), &[(1, 4), (2, 3)]);
        assert_eq!(build_cayley_sum(4, &[1]).unwrap().edges(), &[(0, 1), (2, 3)]);
        assert!(matches!(build_cayley_sum(3, &[]), Err(Error::Validation(_))));
        assert!(build_cayley_sum(3, &[3]).is_err());
    }

    #[test]
    fn character_sums() {
        let all: Vec<usize> = (0..16).collect();
        assert!(char_sum_max(16, &set(&all)).unwrap().value < 1e-12);
        assert!((char_sum_max(16, &set(&[0])).unwrap().value - 1.0).abs() < 1e-12);
        let c = char_sum_max(4, &set(&[0, 1])).unwrap();
        assert!((c.value - 2f64.sqrt()).abs() < 1e-12);
        assert!(c.argmax == 1 || c.argmax == 3);
    }

    #[test]
    fn fft_matches_direct() {
        let n = FFT_THRESHOLD;
        let t = set(&[0, 5, 17, 400, 1023, 4000]);
        let (fast, _) = char_sums(n, &t);
        for j in [1usize, 7, 1000, 4095] {
            let (re, im) = t.iter().fold((0.0f64, 0.0f64), |(re, im), &s| {
                let a = 2.0 * PI * ((j * s) % n) as f64 / n as f64;
                (re + a.cos(), im + a.sin())
            });
            assert!((fast[j] - re.hypot(im)).abs() < 1e-9);
        }
    }

    #[test]
    fn delta_values() {
        assert_eq!(expander_delta(10.0, 0.0).unwrap(), 0.5);
        assert_eq!(expander_delta(10.0, 10.0).unwrap(), 0.0);
        assert_eq!(expander_delta(64.0, 16.0).unwrap(), 0.375);
        assert!(expander_delta(10.0, 11.0).is_err());
    }

    #[test]
    fn good_set_errors() {
        assert!(random_good_T(1024, 10, 0, 0).is_err());
        assert!(matches!(random_good_T(64, 17, 0, 5), Err(Error::Precondition(_))));
    }

    #[test]
    fn experiment_bounds() {
        let r = cayley_sum_experiment(1024, 56, 3, 200).unwrap();
        assert!(r.sum_set_size <= 112);
        assert!(r.lemma_check);
        assert!(r.delta >= r.delta_lower_bound);
        let t = set(&r.t);
        let again = char_sum_max(1024, &t).unwrap();
        assert!(again.value + again.radius <= r.threshold);
    }

    /// Eigenvalues of the adjacency matrix with loops have absolute values
    /// equal to the character sums; dropping loops moves each by at most 1.
    #[test]
    fn spectral_identity() {
        for (n, t) in [(16usize, vec![0usize, 3, 5]), (31, vec![1, 2, 9, 20]), (64, vec![0, 7, 8, 33, 50])] {
            let t = set(&t);
            let with_loops = DMatrix::from_fn(n, n, |y, z| if t.contains(&((y + z) % n)) { 1.0 } else { 0.0 });
            let mut loopless = with_loops.clone();
            for y in 0..n {
                loopless[(y, y)] = 0.0;
            }
            let sorted_abs = |m: DMatrix<f64>| {
                let mut v: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().map(|x| x.abs()).collect();
                v.sort_by(|a, b| a.partial_cmp(b).unwrap());
                v
            };
            let (mut chars, _) = char_sums(n, &t);
            chars.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let exact = sorted_abs(with_loops);
            for (a, b) in exact.iter().zip(&chars) {
                assert!((a - b).abs() < 1e-9, "n = {n}: {a} vs {b}");
            }
            let perturbed = sorted_abs(loopless);
            for (a, b) in perturbed.iter().zip(&chars) {
                assert!((a - b).abs() <= 1.0 + 1e-9);
            }
            let g = CayleySumGraph::new(n, t.iter().copied()).unwrap().graph();
            let adj = DMatrix::from_fn(n, n, |y, z| if g.has_edge(y, z) { 1.0 } else { 0.0 });
            assert_eq!(adj, loopless_matrix(n, &t));
        }
    }

    fn loopless_matrix(n: usize, t: &BTreeSet<usize>) -> DMatrix<f64> {
        DMatrix::from_fn(n, n, |y, z| if y != z && t.contains(&((y + z) % n)) { 1.0 } else { 0.0 })
    }
}
