use std::collections::BTreeMap;

use serde::Serialize;

/// A bound that a construction promises, checked against the run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GuaranteeCheck {
    pub name: String,
    pub bound: String,
    pub measured: String,
    pub holds: bool,
}

impl GuaranteeCheck {
    pub fn new(name: &str, bound: impl ToString, measured: impl ToString, holds: bool) -> Self {
        GuaranteeCheck {
            name: name.to_string(),
            bound: bound.to_string(),
            measured: measured.to_string(),
            holds,
        }
    }
}

/// Summary of a construction run, serialized as JSON by the CLI.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstructionReport {
    pub construction: String,
    pub parameters: BTreeMap<String, serde_json::Value>,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub max_degree: usize,
    pub matching_size: usize,
    pub colours_used: usize,
    pub sum_count: usize,
    pub product_count: usize,
    pub guarantees_checked: Vec<GuaranteeCheck>,
}

impl ConstructionReport {
    pub fn all_hold(&self) -> bool {
        self.guarantees_checked.iter().all(|g| g.holds)
    }
}
