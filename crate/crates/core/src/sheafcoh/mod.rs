//! Sheaf-level layer: cohomology by local duality, Rao modules, condition
//! T, and curve ideals.

pub mod cohomology;
pub mod condition;
pub mod curve;
pub mod module;

pub use cohomology::{h1_star, h2_star_dual, h_i_star, rao_module, Cohomology};
pub use condition::{check_condition_t, ext_heights, ConditionTReport, Witness};
pub use curve::{embedding, module_to_ideal, Embedding, unmixed_check, CurveIdeal, UnmixedCertificate};
pub use module::{generic_rank, strip_finite_torsion, SheafModule};
