//! Checks of the face correspondence between spread subsets and the
//! admissible cone, and of the facet and vertex classifications.

mod lattice;
mod predict;
mod report;
mod tables;

pub use lattice::{combinatorial_lattice, compare_lattices, join_formula_complex, vertex_arcs, CombinatorialLattice, LatticeElement};
pub use predict::{admissible_marks, predicted_facets, predicted_vertices, prop33_prediction, PredictedVertex};
pub use report::{Claim, Status, VerificationReport};
pub use tables::{admissible_cone, predicted_lineality, vertex_census, verify_instance, verify_tables, wrapped_betas, RMode};

use crate::geometry::GeometryError;
use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CorrespondError {
    #[error("no geometric realization for the Möbius family")]
    MissingGeometry,
    #[error("surface is not fully decorated")]
    NotFullyDecorated,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Cone(#[from] crate::cone::ConeError),
}
