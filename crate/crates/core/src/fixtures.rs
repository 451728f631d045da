//! Data shipped with the crate.

use crate::arith::{parse_integer, Integer};
use crate::error::{Error, Result};

/// Nine integer pairs with three distinct sums and three distinct products,
/// one pair per line as `x,y` under a header row.
pub const TABLE9_CSV: &str = include_str!("../data/table9.csv");

/// Parses `x,y` rows after a header line.
pub fn parse_pairs_csv(text: &str) -> Result<Vec<(Integer, Integer)>> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    lines.next().ok_or_else(|| Error::Parse("empty pair file".into()))?;
    lines
        .enumerate()
        .map(|(i, line)| {
            let (x, y) = line
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("row {}: expected `x,y`", i + 1)))?;
            Ok((parse_integer(x.trim())?, parse_integer(y.trim())?))
        })
        .collect()
}

pub fn table9_pairs() -> Vec<(Integer, Integer)> {
    parse_pairs_csv(TABLE9_CSV).expect("shipped fixture parses")
}
