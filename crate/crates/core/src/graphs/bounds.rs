//! Lower- and upper-bound calculators.
//!
//! Every real-valued root is resolved with exact integer arithmetic: a bound
//! like `⌈x^{1/k}⌉` is computed as the least integer `z` with `z^k ≥ x`, so
//! rounding is never in doubt.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{pow, One, ToPrimitive};
use serde::Serialize;

use super::{diameter, sum_set, Diameter, Graph, Labeling};
use crate::arith::{binomial, nth_root_ceil, nth_root_floor, Integer};
use crate::error::{Error, Result};

/// `⌈√|E|⌉`: no injective labeling into a field does better on sum-product.
pub fn sqrt_edge_bound(g: &Graph) -> u64 {
    ceil_sqrt(g.edge_count() as u64)
}

pub fn ceil_sqrt(n: u64) -> u64 {
    nth_root_ceil(&Integer::from(n), 2).to_u64().unwrap()
}

/// Number of (undirected) cycles of length `k` in `g`, by exhaustive search.
///
/// Each cycle is enumerated from its smallest vertex in both directions and
/// counted once.
pub fn count_cycles(g: &Graph, k: usize) -> u64 {
    assert!(k >= 3);
    let n = g.vertex_count();
    let mut total = 0u64;
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(k);

    fn extend(
        g: &Graph,
        start: usize,
        k: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        total: &mut u64,
    ) {
        let last = *path.last().unwrap();
        if path.len() == k {
            if g.has_edge(last, start) {
                *total += 1;
            }
            return;
        }
        for &w in g.neighbors(last) {
            if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(g, start, k, path, on_path, total);
                path.pop();
                on_path[w] = false;
            }
        }
    }

    for start in 0..n {
        path.clear();
        path.push(start);
        on_path[start] = true;
        extend(g, start, k, &mut path, &mut on_path, &mut total);
        on_path[start] = false;
    }
    total / 2
}

/// `⌈(2k · e_k(G))^{1/k}⌉` for odd `k ≥ 3`, where `e_k` counts `k`-cycles.
///
/// Any injective labeling into a field of characteristic other than 2 has at
/// least this many distinct edge sums.
pub fn odd_cycle_bound(g: &Graph, k: usize) -> Result<u64> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::domain(format!("cycle length must be odd and at least 3, got {k}")));
    }
    let cycles = count_cycles(g, k);
    let radicand = Integer::from(2 * k as u64) * Integer::from(cycles);
    Ok(nth_root_ceil(&radicand, k as u32).to_u64().unwrap())
}

/// Whether `2^s · C(r+s, s) ≥ n/2`, the counting inequality tying the sum-set
/// size `s` of a labeled graph to its diameter `r`.
pub fn sumset_diameter_inequality(n: u64, r: u64, s: u64) -> bool {
    let lhs: Integer = (Integer::one() << (s + 1)) * binomial(r + s, s);
    lhs >= Integer::from(n)
}

/// Smallest `s ≥ 1` with `2^s · C(r+s, s) ≥ n/2`.
pub fn min_sumset_from_diameter(n: u64, r: u64) -> Result<u64> {
    if n == 0 || r == 0 {
        return Err(Error::domain("need n >= 1 and r >= 1"));
    }
    let mut s = 1;
    while !sumset_diameter_inequality(n, r, s) {
        s += 1;
    }
    Ok(s)
}

/// Result of checking the diameter inequality on one connected component.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ComponentLemmaCheck {
    pub vertices: usize,
    pub diameter: usize,
    pub sum_set_size: usize,
    pub min_sum_set: u64,
    pub holds: bool,
}

/// Checks `2^s · C(r+s, s) ≥ n/2` on every connected component with at least
/// one edge, using the component's own vertex count, diameter and sum set.
pub fn diameter_lemma_check(g: &Graph, l: &Labeling) -> Result<Vec<ComponentLemmaCheck>> {
    let mut out = Vec::new();
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let mut index = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in comp.iter().enumerate() {
            index[v] = i;
        }
        let edges = g
            .edges()
            .iter()
            .filter(|(u, _)| index[*u] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let sub = Graph::new(comp.len(), edges)?;
        let r = match diameter(&sub) {
            Diameter::Finite(r) => r,
            Diameter::Unbounded => unreachable!("component is connected"),
        };
        let s = sum_set(&sub, &l.restrict(&comp))?.len();
        let n = comp.len() as u64;
        out.push(ComponentLemmaCheck {
            vertices: comp.len(),
            diameter: r,
            sum_set_size: s,
            min_sum_set: min_sumset_from_diameter(n, r as u64)?,
            holds: sumset_diameter_inequality(n, r as u64, s as u64),
        });
    }
    Ok(out)
}

/// Kővári–Sós–Turán: the largest edge count of a bipartite graph with `m`
/// vertices per side and no `K_{k,r}`, namely
/// `⌊(r−1)^{1/k}(m−k+1)m^{1−1/k} + (k−1)m⌋`.
///
/// Evaluated exactly as `⌊((m−k+1)^k (r−1) m^{k−1})^{1/k}⌋ + (k−1)m`.
pub fn kst_max_edges(m: u64, k: u64, r: u64) -> Result<Integer> {
    if k < 2 {
        return Err(Error::domain(format!("forbidden K_(k,r) needs k >= 2, got k = {k}")));
    }
    if k > r {
        return Err(Error::domain(format!("need k <= r, got k = {k}, r = {r}")));
    }
    if m < k {
        return Err(Error::domain(format!("need m >= k, got m = {m}, k = {k}")));
    }
    let radicand = pow(Integer::from(m - k + 1), k as usize)
        * Integer::from(r - 1)
        * pow(Integer::from(m), (k - 1) as usize);
    Ok(nth_root_floor(&radicand, k as u32) + Integer::from(k - 1) * Integer::from(m))
}

/// The explicit sum-product lower bound for an `n`-edge matching whose labels
/// admit at most `r` translates of any `k` sums (or products) into the squares:
/// `⌈(n/2)^{k/(2k−1)} · r^{−1/(2k−1)}⌉`.
///
/// This is the inequality the Kővári–Sós–Turán argument yields with its
/// constants intact; the other branch of that argument (`m > n/(2(k−1))`) is
/// weaker than this only for tiny `n`.
pub fn fk_sp_lower(n: u64, k: u64, r: u64) -> Result<Integer> {
    if k < 2 || r < 1 {
        return Err(Error::domain(format!("need k >= 2 and r >= 1, got k = {k}, r = {r}")));
    }
    // least z with z^(2k-1) * 2^k * r >= n^k
    let num = pow(Integer::from(n), k as usize);
    let den = (Integer::one() << k) * Integer::from(r);
    let target = num.div_ceil(&den);
    Ok(nth_root_ceil(&target, (2 * k - 1) as u32))
}

/// Main terms of the two dense-graph sum-product lower bounds for a graph on
/// `n` vertices with at least `n²/k` edges. The `o(1)` exponent corrections
/// and implied constants are dropped; every value is the floor of the exact
/// main term.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DenseBounds {
    /// `⌊n^{15/14} / k^{4/7}⌋`
    #[serde(serialize_with = "crate::serial::int")]
    pub matching_route: Integer,
    /// `⌊n^{3/2} / k⌋`
    #[serde(serialize_with = "crate::serial::int")]
    pub sparse_route: Integer,
    /// `min` of the two routes: the conditional bound's main term.
    #[serde(serialize_with = "crate::serial::int")]
    pub conditional: Integer,
    /// `⌊n^{10/9} / k^{19/9}⌋`: the unconditional bound's main term.
    #[serde(serialize_with = "crate::serial::int")]
    pub unconditional: Integer,
    /// False when `k ≥ n^{1/8}`: the conditional term no longer exceeds `n`.
    pub conditional_nontrivial: bool,
    /// False when `k ≥ n^{1/19}`: the unconditional term no longer exceeds `n`.
    pub unconditional_nontrivial: bool,
}

pub fn dense_graph_conditional_bounds(n: u64, k: u64) -> Result<DenseBounds> {
    if n < 2 || k < 1 {
        return Err(Error::domain(format!("need n >= 2 and k >= 1, got n = {n}, k = {k}")));
    }
    let (nb, kb) = (BigInt::from(n), BigInt::from(k));
    // floor((a/b)^(1/j)) == floor(root_j(floor(a/b)))
    let floor_root = |a: Integer, b: Integer, j: u32| nth_root_floor(&(a / b), j);
    let matching_route = floor_root(pow(nb.clone(), 15), pow(kb.clone(), 8), 14);
    let sparse_route = floor_root(pow(nb.clone(), 3), pow(kb.clone(), 2), 2);
    let unconditional = floor_root(pow(nb.clone(), 10), pow(kb.clone(), 19), 9);
    let conditional = matching_route.clone().min(sparse_route.clone());
    Ok(DenseBounds {
        conditional_nontrivial: pow(kb.clone(), 8) < nb,
        unconditional_nontrivial: pow(kb, 19) < nb,
        matching_route,
        sparse_route,
        conditional,
        unconditional,
    })
}

/// `e(S, S̄)` and `min(vol S, vol S̄)` for the minimizing cut, as a reduced fraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Conductance {
    pub cut: u64,
    pub volume: u64,
}

impl Conductance {
    fn as_rational(&self) -> crate::arith::Rational {
        crate::arith::Rational::new(Integer::from(self.cut), Integer::from(self.volume))
    }
}

pub const CONDUCTANCE_MAX_VERTICES: usize = 24;

/// Exact conductance `min_S e(S,S̄) / min(vol S, vol S̄)` over nonempty proper
/// vertex subsets, by Gray-code enumeration.
pub fn conductance_small(g: &Graph) -> Result<crate::arith::Rational> {
    let n = g.vertex_count();
    if n > CONDUCTANCE_MAX_VERTICES {
        return Err(Error::size(format!(
            "exhaustive conductance limited to {CONDUCTANCE_MAX_VERTICES} vertices, got {n}"
        )));
    }
    if n < 2 {
        return Err(Error::domain("conductance needs at least two vertices"));
    }
    if let Some(v) = (0..n).find(|&v| g.degree(v) == 0) {
        return Err(Error::domain(format!("vertex {v} is isolated")));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let total_vol = 2 * g.edge_count() as u64;

    // The last vertex stays outside S; complements give the same ratio.
    let free = n - 1;
    let mut set = 0u32;
    let mut cut = 0i64;
    let mut vol = 0u64;
    let mut best: Option<Conductance> = None;
    for step in 1u64..(1u64 << free) {
        let v = step.trailing_zeros() as usize;
        let deg = g.degree(v) as i64;
        let inside = (adj[v] & set).count_ones() as i64;
        if set & (1 << v) == 0 {
            set |= 1 << v;
            cut += deg - 2 * inside;
            vol += deg as u64;
        } else {
            set &= !(1 << v);
            cut -= deg - 2 * inside;
            vol -= deg as u64;
        }
        let cand = Conductance {
            cut: cut as u64,
            volume: vol.min(total_vol - vol),
        };
        let better = match best {
            None => true,
            Some(b) => (cand.cut as u128) * (b.volume as u128) < (b.cut as u128) * (cand.volume as u128),
        };
        if better {
            best = Some(cand);
        }
    }
    Ok(best.expect("at least one proper subset").as_rational())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    fn disjoint_triangles(t: usize) -> Graph {
        Graph::new(
            3 * t,
            (0..t).flat_map(|i| [(3 * i, 3 * i + 1), (3 * i + 1, 3 * i + 2), (3 * i, 3 * i + 2)]),
        )
        .unwrap()
    }

    #[test]
    fn sqrt_bound_examples() {
        assert_eq!(sqrt_edge_bound(&Graph::matching(9)), 3);
        assert_eq!(sqrt_edge_bound(&Graph::empty(4)), 0);
        assert_eq!(sqrt_edge_bound(&Graph::matching(2)), 2);
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(count_cycles(&Graph::complete(3), 3), 1);
        assert_eq!(count_cycles(&Graph::complete(4), 3), 4);
        // K5 has 5!/(2·5) = 12 five-cycles
        assert_eq!(count_cycles(&Graph::complete(5), 5), 12);
        assert_eq!(count_cycles(&Graph::cycle(5), 5), 1);
        assert_eq!(count_cycles(&Graph::cycle(6), 3), 0);
    }

    #[test]
    fn odd_cycle_examples() {
        assert_eq!(odd_cycle_bound(&Graph::complete(3), 3).unwrap(), 2);
        // 120^(1/3) ≈ 4.93
        assert_eq!(odd_cycle_bound(&disjoint_triangles(20), 3).unwrap(), 5);
        assert_eq!(odd_cycle_bound(&Graph::cycle(8), 3).unwrap(), 0);
        assert!(matches!(odd_cycle_bound(&Graph::complete(4), 4), Err(Error::Domain(_))));
    }

    #[test]
    fn diameter_sumset_examples() {
        assert_eq!(min_sumset_from_diameter(4, 1).unwrap(), 1);
        assert_eq!(min_sumset_from_diameter(1, 7).unwrap(), 1);
        // frozen from an independent exact-binomial loop
        assert_eq!(min_sumset_from_diameter(1 << 40, 40).unwrap(), 9);
        assert!(min_sumset_from_diameter(0, 1).is_err());
    }

    #[test]
    fn kst_examples() {
        assert_eq!(kst_max_edges(10, 2, 2).unwrap(), Integer::from(38));
        assert_eq!(kst_max_edges(100, 2, 3).unwrap(), Integer::from(1500));
        assert!(matches!(kst_max_edges(10, 1, 1), Err(Error::Domain(_))));
        assert!(matches!(kst_max_edges(10, 3, 2), Err(Error::Domain(_))));
    }

    #[test]
    fn fk_examples() {
        assert_eq!(fk_sp_lower(9, 2, 1).unwrap(), Integer::from(3));
        // (5e5)^(2/3) ≈ 6299.605
        assert_eq!(fk_sp_lower(1_000_000, 2, 1).unwrap(), Integer::from(6300));
        // (5e5)^(4/7) · 100^(-1/7) ≈ 935.06
        assert_eq!(fk_sp_lower(1_000_000, 4, 100).unwrap(), Integer::from(936));
    }

    #[test]
    fn dense_examples() {
        let b = dense_graph_conditional_bounds(1 << 28, 1).unwrap();
        assert_eq!(b.matching_route, Integer::from(1u64 << 30));
        assert_eq!(b.sparse_route, Integer::from(1u64 << 42));
        assert_eq!(b.conditional, Integer::from(1u64 << 30));
        // floor(2^(280/9)) ≈ 2319410628.13
        assert_eq!(b.unconditional, Integer::from(2_319_410_628u64));
        assert!(b.conditional_nontrivial && b.unconditional_nontrivial);

        // k = 16 = n^(1/7) for n = 2^28: above n^(1/8), above n^(1/19)
        let b = dense_graph_conditional_bounds(1 << 28, 16).unwrap();
        assert!(!b.conditional_nontrivial);
        assert!(!b.unconditional_nontrivial);
        assert!(b.conditional <= Integer::from(1u64 << 28));

        // n^(1/8) ≈ 11.3 and n^(1/19) ≈ 2.78
        let b = dense_graph_conditional_bounds(1 << 28, 2).unwrap();
        assert!(b.conditional_nontrivial && b.unconditional_nontrivial);
        let b = dense_graph_conditional_bounds(1 << 28, 3).unwrap();
        assert!(b.conditional_nontrivial && !b.unconditional_nontrivial);
    }

    #[test]
    fn conductance_examples() {
        let q = |s| parse_rational(s).unwrap();
        assert_eq!(conductance_small(&Graph::complete(2)).unwrap(), q("1"));
        assert_eq!(conductance_small(&Graph::cycle(4)).unwrap(), q("1/2"));
        assert_eq!(conductance_small(&Graph::matching(2)).unwrap(), q("0"));
        assert!(matches!(conductance_small(&Graph::empty(3)), Err(Error::Domain(_))));
        assert!(matches!(conductance_small(&Graph::cycle(25)), Err(Error::Size(_))));
    }

    #[test]
    fn conductance_matches_naive_enumeration() {
        for n in 3..9 {
            for g in [Graph::cycle(n), Graph::complete(n)] {
                let mut best: Option<crate::arith::Rational> = None;
                let vol_total = 2 * g.edge_count() as i64;
                for mask in 1u32..(1 << n) - 1 {
                    let inside = |v: usize| mask & (1 << v) != 0;
                    let cut = g.edges().iter().filter(|(u, v)| inside(*u) != inside(*v)).count() as i64;
                    let vol: i64 = (0..n).filter(|&v| inside(v)).map(|v| g.degree(v) as i64).sum();
                    let r = crate::arith::Rational::new(cut.into(), vol.min(vol_total - vol).into());
                    best = Some(best.map_or(r.clone(), |b| b.min(r)));
                }
                assert_eq!(conductance_small(&g).unwrap(), best.unwrap());
            }
        }
    }
}
