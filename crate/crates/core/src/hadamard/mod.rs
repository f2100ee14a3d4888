//! Hadamard and conference matrices, regular symmetric Hadamard matrices
//! with constant diagonal, and the graphs they define.

mod matrix;
mod rshcd;

pub use matrix::{
    conference_paley, hadamard_paley_i, hadamard_paley_ii, hadamard_sylvester, PmOneMatrix,
    MATRIX_LIMIT,
};
pub use rshcd::{
    conference_descendant, find_flip_split, flip_eligible, graph_to_rshcd, natural_split,
    rshcd_base4, rshcd_descendant, rshcd_flip, rshcd_kronecker, rshcd_to_graph, rshcd_twist,
    Epsilon, Rshcd, RshcdWitness, SPLIT_SEARCH_LIMIT,
};
