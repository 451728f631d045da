use std::collections::BTreeMap;

use serde_json::json;

use super::colouring::{greedy_colour_matching, EdgeColouring};
use super::report::{ConstructionReport, GuaranteeCheck};
use crate::error::{Error, Result};
use crate::graphs::{sp_profile, Graph, Labeling};

pub const INTERVAL_MAX_N: u64 = 1 << 14;

/// The integer sums `t` with `N − w ≤ t < N + w`, `w = N/(32·(ln N)^ε)`.
pub fn sum_interval(n: u64, eps: f64) -> (u64, u64) {
    let w = n as f64 / (32.0 * (n as f64).ln().powf(eps));
    let lo = (n as f64 - w).ceil().max(0.0) as u64;
    let hi_exclusive = (n as f64 + w).ceil() as u64;
    (lo, hi_exclusive.max(lo))
}

/// Builds the graph on `1..=N` joining `i, j` when `i + j` lies in
/// [`sum_interval`], colours edges by `i·j`, and extracts a greedy matching.
///
/// The report checks the construction's own guarantees: at most `|I|`
/// distinct sums and at least `⌈|E|/(4Δ)⌉` matching edges. The product count
/// is measured only.
pub fn interval_matching_experiment(n: u64, eps: f64) -> Result<ConstructionReport> {
    if n < 2 {
        return Err(Error::domain(format!("N must be at least 2, got {n}")));
    }
    if n > INTERVAL_MAX_N {
        return Err(Error::size(format!("N = {n} exceeds {INTERVAL_MAX_N}")));
    }
    if !(eps > 0.0 && eps <= 1.0) {
        return Err(Error::domain(format!("eps must lie in (0, 1], got {eps}")));
    }
    let (lo, hi) = sum_interval(n, eps);
    let mut edges = Vec::new();
    for t in lo..hi {
        // pairs i < j with i + j = t and 1 ≤ i, j ≤ N
        let i_min = t.saturating_sub(n).max(1);
        let mut i = i_min;
        while 2 * i < t {
            edges.push(((i - 1) as usize, (t - i - 1) as usize));
            i += 1;
        }
    }
    let g = Graph::new(n as usize, edges)?;
    let l = Labeling::from_integers(1..=n)?;
    let (c, _) = EdgeColouring::by_products(&g, &l)?;
    let m = greedy_colour_matching(&g, &c)?;

    let matched = g.edge_subgraph(m.edges.iter().copied());
    let profile = sp_profile(&matched, &l)?;
    let is_matching = matched.is_matching();
    let interval_len = (hi - lo) as usize;
    let delta = g.max_degree();
    let size_bound = if delta == 0 { 0 } else { g.edge_count().div_ceil(4 * delta) };
    let colour_bound = if delta == 0 { 0 } else { c.colours_present().div_ceil(2 * delta) };

    let mut parameters = BTreeMap::new();
    parameters.insert("N".to_string(), json!(n));
    parameters.insert("eps".to_string(), json!(eps));
    parameters.insert("interval".to_string(), json!([lo, hi]));
    Ok(ConstructionReport {
        construction: "interval".into(),
        parameters,
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        max_degree: delta,
        matching_size: m.len(),
        colours_used: m.colours.len(),
        sum_count: profile.sum_count(),
        product_count: profile.product_count(),
        guarantees_checked: vec![
            GuaranteeCheck::new("is_matching", true, is_matching, is_matching),
            GuaranteeCheck::new(
                "sums_at_most_interval_length",
                interval_len,
                profile.sum_count(),
                profile.sum_count() <= interval_len,
            ),
            GuaranteeCheck::new("matching_size_at_least", size_bound, m.len(), m.len() >= size_bound),
            GuaranteeCheck::new(
                "colours_at_most",
                colour_bound,
                m.colours.len(),
                m.colours.len() <= colour_bound,
            ),
        ],
    })
}
