//! Gröbner bases, syzygies and related operations for homogeneous
//! submodules of twisted free modules.

pub mod engine;
pub mod ideal;
pub mod linalg;
pub mod matrix;
pub mod ops;
pub mod presentation;
pub mod vector;

pub use engine::{GbOptions, GroebnerBasis};
pub use ideal::Ideal;
pub use linalg::DenseMatrix;
pub use matrix::{random_point, FreeModule, GradedMatrix};
pub use ops::{groebner_basis, intersect, minimal_generators, syzygy_module};
pub use presentation::{ModulePresentation, Pruned};
pub use vector::{Term, Vector};
