//! Exact combinatorics of planar chain spaces.
//!
//! Everything is driven by a generic length vector: its short code, the
//! admissible-subset face poset of the moment polytope, exact H- and
//! V-representations, flagtope and asphericality classification, the
//! characteristic data of the associated small cover, and the cyclic
//! cell complexes on planar polygon spaces. All arithmetic is exact
//! rational; floating point is never used.

pub mod classify;
pub mod cover;
pub mod error;
pub mod geometry;
pub mod lengths;
pub mod lattice;
pub mod limits;
pub mod panina;
pub mod poset;

pub use classify::{
    blind_blind_identify, classify_flagtope, cube_code, hexagon_code, is_aspherical,
    matched_pattern, pentagon_code, simplex_code, torus_code, AsphericalityVerdict, ClassWitness,
    CodePattern, PolytopeClass, PolytopeClassTag,
};
pub use cover::{
    bott_data, characteristic_function, small_cover_cells, verify_characteristic, BottMatrix,
    CharacteristicFunction, CharacteristicMatrix,
};
pub use error::{Error, Result};
pub use lengths::{
    dominance_le, parse_length_vector, parse_rational, IndexSubset, LengthVector, Rational,
    ShortCode, Shortness,
};
pub use geometry::{
    f_vector, face_lattice_isomorphic, is_flagtope, is_triangle_free, moment_hrep,
    oracle_vertices, reduced_hrep, reduced_vertices, vertices, FacetLabel, HalfspaceRow,
    HalfspaceSystem, VertexPoint,
};
pub use lattice::{is_isomorphic, FaceLattice};
pub use panina::{
    enumerate_cells, euler_characteristic, top_cell_flag_report, CyclicPartition, PaninaComplex,
    PaninaMode, TopCellRecord,
};
pub use poset::{
    enumerate_faces, is_admissible, reduced_length_vector, verify_dual_criteria,
    vertex_truncation_delta, FacePoset, SignedSubset,
};
