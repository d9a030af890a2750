//! Exact equivariant and invariant theory of nets of conics.

pub mod enumerative;
pub mod error;
pub mod exactalg;
pub mod hierarchy;
pub mod invariants;
pub mod orbitdata;
pub mod report;
pub mod resolver;
pub mod symfun;
pub mod thom;

pub use error::{NocError, Result};
