//! Exact Hall-Littlewood, cylindric and q-boson computations behind the
//! t-deformed sl(n) Verlinde algebra.

pub mod cylfunc;
pub mod bethe;
pub mod error;
pub mod fusion;
pub mod partition;
pub mod poly;
pub mod qboson;
pub mod symfunc;
pub mod vertex;

pub use error::{Error, Result};
pub use partition::{Alcove, CylShape, Partition};
pub use poly::{LaurentPoly, RationalFn, ZPoly};
