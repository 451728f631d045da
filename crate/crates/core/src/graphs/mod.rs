//! Graphs with injective labelings: sum and product sets along edges, and
//! the lower-bound calculators that constrain them.

mod bounds;
mod graph;
mod oracle;
mod profile;

pub use bounds::{
    ceil_sqrt, conductance_small, count_cycles, dense_graph_conditional_bounds,
    diameter_lemma_check, fk_sp_lower, kst_max_edges, min_sumset_from_diameter, odd_cycle_bound,
    sqrt_edge_bound, sumset_diameter_inequality, ComponentLemmaCheck, DenseBounds,
    CONDUCTANCE_MAX_VERTICES,
};
pub use graph::{diameter, Diameter, Graph, Labeling};
pub use oracle::{sp_oracle_matching, OracleResult, ORACLE_MAX_EDGES, ORACLE_MAX_VALUE};
pub use profile::{sp_profile, sum_set, ProfileSummary, SumProductProfile};
