//! Block designs, orthogonal arrays, generalized quadrangles, polar spaces,
//! and the strongly regular graphs built from them.

mod families;
mod gq;
mod incidence;
mod oa;
mod polar;

pub use families::{
    cross_cells, johnson_graph, johnson_params, mathon_rosa_graph, nine_point_partitions,
    paley_graph, paley_params, subsets,
};
pub use gq::{
    gq_ahrens_szekeres, gq_point_graph_params, gq_t2_star, hyperoval, GeneralizedQuadrangle,
};
pub use incidence::{
    block_intersection_graph, projective_plane, projective_space_lines, steiner_graph,
    steiner_graph_params, steiner_triple_system, witt_design_23, DesignKind, IncidenceStructure,
};
pub use oa::{
    oa_block_graph, oa_block_graph_params, orthogonal_array, switch_oa_graph, switch_oa_sweep,
    OrthogonalArray,
};
pub use polar::{affine_polar_graph, affine_polar_graph_params, polar_graph, polar_graph_params};
