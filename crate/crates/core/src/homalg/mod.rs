//! Resolutions, Hilbert data, Hom and Ext, finite-length modules and
//! extensions.

pub mod finite;
pub mod hilbert;
pub mod hom;
pub mod resolution;
pub mod yoneda;

pub use finite::{FiniteLengthModule, IsoResult};
pub use hilbert::{hilbert_polynomial, over_ambient, HilbertPolynomial};
pub use hom::{ext_from_resolution, ext_module, hom_presentation, hom_presentation_with_maps, homology, subquotient};
pub use resolution::{minimal_free_resolution, BettiTable, FreeResolution};
pub use yoneda::{ext1_cocycles, yoneda_extension, Extension};
