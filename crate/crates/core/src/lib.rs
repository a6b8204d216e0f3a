//! Exact graded commutative algebra over prime fields, aimed at liaison and
//! biliaison of codimension two subschemes.

pub mod error;
pub mod gorenstein;
pub mod homalg;
pub mod liaison;
pub mod modgb;
pub mod sheafcoh;
pub mod ring;

pub use error::{Error, Result};
