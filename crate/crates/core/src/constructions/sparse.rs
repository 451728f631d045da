use std::collections::BTreeMap;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::colouring::{check_labeling, greedy_until, EdgeColouring};
use super::report::{ConstructionReport, GuaranteeCheck};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::graphs::{sp_profile, Graph, Labeling};
use crate::rng::attempt_rng;

/// Figures from the accepted sampling attempt.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SparseStats {
    /// Zero-based index of the accepted attempt.
    pub attempt: u64,
    pub max_degree: usize,
    pub sum_bound: usize,
    pub sampled_sums: usize,
    pub subgraph_edges: usize,
    pub subgraph_max_degree: usize,
}

/// A matching inside a dense labelled graph that inherits few sums and products.
#[derive(Debug, Clone)]
pub struct SparseMatching {
    /// `n` disjoint edges `(2i, 2i+1)`.
    pub matching: Graph,
    pub labeling: Labeling,
    /// Edge indices of the matching in the input graph.
    pub source_edges: Vec<usize>,
    pub stats: SparseStats,
    pub report: ConstructionReport,
}

struct Sampled {
    attempt: u64,
    sampled_sums: usize,
    keep: Vec<usize>,
    max_degree: usize,
}

/// `a < b·√c` for non-negative integers, decided exactly.
fn lt_sqrt(a: u128, b: u128, c: u128) -> bool {
    a * a < b * b * c
}

/// Restricts a dense labelled graph to a random set of sums and extracts a
/// matching with at most `2S/√D` sums and products, where `D` is the maximum
/// degree and `S` bounds both the sum set and the product set.
///
/// Each attempt keeps every sum with probability `1/√D` and accepts the
/// resulting subgraph `H` when `|R| < 2S/√D`, `Δ(H) < 2√D` and
/// `|E(H)| ≥ |E|/(2√D)`. Attempts draw from independent streams and run in
/// parallel; the lowest accepted index wins, so results depend only on the
/// seed. The matching is then extracted from `H` coloured by products,
/// taking colour classes until `⌈|E(H)|/(8√D)⌉` edges are chosen.
pub fn sparse_from_dense(g: &Graph, l: &Labeling, seed: u64, retries: u64) -> Result<SparseMatching> {
    check_labeling(g, l)?;
    let n = g.vertex_count() as u128;
    let e = g.edge_count() as u128;
    let big_d = g.max_degree() as u128;
    if big_d == 0 {
        return Err(Error::precondition("graph has no edges"));
    }
    // average degree 2|E|/N ≥ 5√D
    if (2 * e) * (2 * e) < 25 * big_d * n * n {
        return Err(Error::precondition(format!(
            "average degree {:.3} is below 5·√D = {:.3}",
            2.0 * e as f64 / n as f64,
            5.0 * (big_d as f64).sqrt()
        )));
    }
    if retries == 0 {
        return Err(Error::domain("retries must be positive"));
    }

    let profile = sp_profile(g, l)?;
    let sum_list: Vec<Rational> = profile.sum_set.iter().cloned().collect();
    let big_s = profile.sum_count().max(profile.product_count()) as u128;
    let edge_sums: Vec<usize> = g
        .edges()
        .iter()
        .map(|&(u, v)| sum_list.binary_search(&(l.get(u) + l.get(v))).unwrap())
        .collect();
    let p = 1.0 / (big_d as f64).sqrt();

    let attempt = |a: u64| -> Option<Sampled> {
        let mut rng = attempt_rng(seed, a);
        let chosen: Vec<bool> = (0..sum_list.len()).map(|_| rng.gen_bool(p)).collect();
        let r = chosen.iter().filter(|&&b| b).count() as u128;
        let keep: Vec<usize> = (0..g.edge_count()).filter(|&i| chosen[edge_sums[i]]).collect();
        let mut deg = vec![0usize; g.vertex_count()];
        for &i in &keep {
            let (u, v) = g.edges()[i];
            deg[u] += 1;
            deg[v] += 1;
        }
        let max_degree = deg.into_iter().max().unwrap_or(0);
        let kept = keep.len() as u128;
        // |R|·√D < 2S, Δ(H) < 2√D, and 2√D·|E(H)| ≥ |E|
        let accepted = r * r * big_d < 4 * big_s * big_s
            && lt_sqrt(max_degree as u128, 2, big_d)
            && 4 * kept * kept * big_d >= e * e;
        accepted.then_some(Sampled {
            attempt: a,
            sampled_sums: r as usize,
            keep,
            max_degree,
        })
    };
    let Some(found) = (0..retries).into_par_iter().find_map_first(attempt) else {
        return Err(Error::Stochastic {
            attempts: retries as usize,
            detail: format!(
                "no sampled subgraph met |R| < 2S/√D, Δ(H) < 2√D and |E(H)| ≥ |E|/(2√D) (S = {big_s}, D = {big_d})"
            ),
        });
    };

    let h = g.edge_subgraph(found.keep.iter().copied());
    let (c, _) = EdgeColouring::by_products(&h, l)?;
    let h_edges = h.edge_count() as u128;
    // least t with t·8√D ≥ |E(H)|
    let mut target = ((h_edges as f64) / (8.0 * (big_d as f64).sqrt())).ceil() as u128;
    while target > 0 && 64 * big_d * (target - 1) * (target - 1) >= h_edges * h_edges {
        target -= 1;
    }
    while 64 * big_d * target * target < h_edges * h_edges {
        target += 1;
    }
    let m = greedy_until(&h, &c, target as usize)?;
    let source_edges: Vec<usize> = m.edges.iter().map(|&i| found.keep[i]).collect();

    let mut values = Vec::with_capacity(2 * source_edges.len());
    for &i in &source_edges {
        let (u, v) = g.edges()[i];
        values.push(l.get(u).clone());
        values.push(l.get(v).clone());
    }
    let matching = Graph::matching(source_edges.len());
    let labeling = Labeling::new(values)?;
    let out = sp_profile(&matching, &labeling)?;

    let min_size = e.div_ceil(16 * big_d) as usize;
    let sums = out.sum_count() as u128;
    let products = out.product_count() as u128;
    let set_bound = format!("2·{big_s}/√{big_d} = {:.3}", 2.0 * big_s as f64 * p);
    let mut parameters = BTreeMap::new();
    parameters.insert("seed".to_string(), json!(seed));
    parameters.insert("retries".to_string(), json!(retries));
    parameters.insert("S".to_string(), json!(big_s as u64));
    parameters.insert("D".to_string(), json!(big_d as u64));
    let report = ConstructionReport {
        construction: "sparse_from_dense".into(),
        parameters,
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        max_degree: big_d as usize,
        matching_size: source_edges.len(),
        colours_used: m.colours.len(),
        sum_count: out.sum_count(),
        product_count: out.product_count(),
        guarantees_checked: vec![
            GuaranteeCheck::new(
                "matching_size_at_least",
                min_size,
                source_edges.len(),
                source_edges.len() >= min_size,
            ),
            GuaranteeCheck::new("sums_at_most", &set_bound, sums, sums * sums * big_d <= 4 * big_s * big_s),
            GuaranteeCheck::new(
                "products_at_most",
                &set_bound,
                products,
                products * products * big_d <= 4 * big_s * big_s,
            ),
        ],
    };
    if !report.all_hold() {
        return Err(Error::Internal(format!("accepted sample violates a guarantee: {report:?}")));
    }
    Ok(SparseMatching {
        matching,
        labeling,
        source_edges,
        stats: SparseStats {
            attempt: found.attempt,
            max_degree: big_d as usize,
            sum_bound: big_s as usize,
            sampled_sums: found.sampled_sums,
            subgraph_edges: h.edge_count(),
            subgraph_max_degree: found.max_degree,
        },
        report,
    })
}
