//! Modules over hypersurface rings: syzygy sheaves with prescribed `H^1_*`,
//! maximal Cohen–Macaulay modules and the triples `(M, P, α)`.

pub mod stable;
pub mod syzygy;
pub mod triple;

pub use stable::{stably_equivalent, StableDecision};
pub use syzygy::{canonical_dual, is_mcm, second_syzygy_sheaf};
pub use triple::{mcm_triple, realize_triple, GorensteinTriple};
