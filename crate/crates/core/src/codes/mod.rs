//! Linear codes over finite fields, the Golay codes, and two-weight codes.

mod golay;
mod linear;
mod two_weight;

pub use golay::{
    codeword_support_graph_1288, golay_binary_23, golay_ternary_11, macwilliams_transform,
};
pub use linear::{code_distance_graph, weight, LinearCode, ENUMERATION_LIMIT, GRAPH_LIMIT};
pub use two_weight::{
    bundled_code_database, code_from_point_set, hyperoval_code, hyperoval_code_params,
    load_code_database, parse_code_file,
    two_weight_graph, CodeDatabase, CodeEntry, Rejected, TwoWeightWitness,
};
