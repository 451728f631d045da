use serde::Serialize;

use super::{bounds::ceil_sqrt, SumProductProfile};
use crate::arith::Integer;
use crate::error::{Error, Result};

pub const ORACLE_MAX_EDGES: usize = 3;
pub const ORACLE_MAX_VALUE: i64 = 20;

/// Best labeling found by [`sp_oracle_matching`].
///
/// The search is confined to labels in `[-value_bound, value_bound]`, so `sp`
/// is the true minimum over that range only: an upper bound on the
/// unrestricted integer sum-product of the matching.
#[derive(Debug, Clone, Serialize)]
pub struct OracleResult {
    pub edges: usize,
    pub value_bound: i64,
    pub sp: usize,
    pub sum_count: usize,
    pub product_count: usize,
    pub pairs: Vec<(i64, i64)>,
    pub sqrt_lower_bound: u64,
    pub range_restricted: bool,
}

/// Exhaustive minimum of `max(|sums|, |products|)` over injective labelings of
/// an `n`-edge matching with values in `[-B, B]`.
///
/// Enumerates increasing sequences of pairs `x < y`, which covers every
/// labeling up to swapping endpoints and permuting edges. Stops early once
/// the `⌈√n⌉` lower bound is met.
pub fn sp_oracle_matching(n: usize, value_bound: i64) -> Result<OracleResult> {
    if n == 0 {
        return Err(Error::domain("matching needs at least one edge"));
    }
    if n > ORACLE_MAX_EDGES || value_bound > ORACLE_MAX_VALUE {
        return Err(Error::size(format!(
            "oracle limited to {ORACLE_MAX_EDGES} edges and values within ±{ORACLE_MAX_VALUE}"
        )));
    }
    if value_bound < 1 {
        return Err(Error::domain("value bound must be positive"));
    }
    let values: Vec<i64> = (-value_bound..=value_bound).collect();
    let pairs: Vec<(i64, i64)> = values
        .iter()
        .enumerate()
        .flat_map(|(i, &x)| values[i + 1..].iter().map(move |&y| (x, y)))
        .collect();
    if pairs.len() < n || values.len() < 2 * n {
        return Err(Error::size("value range too small for an injective labeling"));
    }

    let floor = ceil_sqrt(n as u64) as usize;
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut chosen = Vec::with_capacity(n);

    fn score(pairs: &[(i64, i64)], chosen: &[usize]) -> usize {
        let profile = SumProductProfile::from_pairs(chosen.iter().map(|&i| {
            let (x, y) = pairs[i];
            (x + y, x * y)
        }));
        profile.sp()
    }

    fn search(
        pairs: &[(i64, i64)],
        n: usize,
        from: usize,
        chosen: &mut Vec<usize>,
        best: &mut Option<(usize, Vec<usize>)>,
        floor: usize,
    ) -> bool {
        if chosen.len() == n {
            let sp = score(pairs, chosen);
            if best.as_ref().is_none_or(|(b, _)| sp < *b) {
                *best = Some((sp, chosen.clone()));
            }
            return sp <= floor;
        }
        for i in from..pairs.len() {
            let (x, y) = pairs[i];
            let clash = chosen.iter().any(|&j| {
                let (a, b) = pairs[j];
                a == x || a == y || b == x || b == y
            });
            if clash {
                continue;
            }
            chosen.push(i);
            let done = search(pairs, n, i + 1, chosen, best, floor);
            chosen.pop();
            if done {
                return true;
            }
        }
        false
    }

    search(&pairs, n, 0, &mut chosen, &mut best, floor);
    let (sp, idx) = best.expect("range admits at least one labeling");
    let chosen_pairs: Vec<(i64, i64)> = idx.iter().map(|&i| pairs[i]).collect();
    let profile = SumProductProfile::from_pairs(
        chosen_pairs
            .iter()
            .map(|&(x, y)| (Integer::from(x + y), Integer::from(x * y))),
    );
    Ok(OracleResult {
        edges: n,
        value_bound,
        sp,
        sum_count: profile.sum_count(),
        product_count: profile.product_count(),
        pairs: chosen_pairs,
        sqrt_lower_bound: floor as u64,
        range_restricted: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_matchings() {
        assert_eq!(sp_oracle_matching(1, 2).unwrap().sp, 1);
        assert_eq!(sp_oracle_matching(2, 5).unwrap().sp, 2);
        let r = sp_oracle_matching(3, 12).unwrap();
        assert_eq!(r.sp, 2);
        assert!(r.range_restricted);
        let mut labels: Vec<i64> = r.pairs.iter().flat_map(|&(x, y)| [x, y]).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), 6);
    }

    #[test]
    fn guards() {
        assert!(matches!(sp_oracle_matching(4, 5), Err(Error::Size(_))));
        assert!(matches!(sp_oracle_matching(2, 21), Err(Error::Size(_))));
        assert!(matches!(sp_oracle_matching(0, 5), Err(Error::Domain(_))));
        assert!(matches!(sp_oracle_matching(3, 1), Err(Error::Size(_))));
    }
}
