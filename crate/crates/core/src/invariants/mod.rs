//! Classical invariant theory of nets of conics.

pub mod cubic;
pub mod jacobi;
pub mod lie;
pub mod net;
pub mod stability;
pub mod table2;
pub mod wedge;

pub use cubic::{aronhold, aronhold_at, det_map, Cubic};
pub use net::Net;
pub use stability::{discriminant_check, j12, j12_at, stability, Stability};
pub use table2::{j6, j6_at, plucker, table2_generators, Table2};
pub use wedge::{Basis, Wedge3};
