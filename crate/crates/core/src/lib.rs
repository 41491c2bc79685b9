//! Exact finite-dimensional models of module categories over commutative
//! monoids in vector spaces, their enriched functors, the six-functor pack
//! attached to a monoid map, the correspondence between cocontinuous lax
//! monoidal functors and commutative monoids under a pair, and Day convolution.

pub mod cosmos;
pub mod day_convolution;
pub mod error;
pub mod field;
pub mod functors;
pub mod harness;
pub mod laws;
pub mod main_equivalence;
pub mod module_tensor;
pub mod modules;
pub mod monoids;
pub mod random;
pub mod six_functors;

pub use cosmos::{Mor, Obj};
pub use error::{KernelError, Result};
pub use field::{Field, FieldSpec, Fp, Q};
