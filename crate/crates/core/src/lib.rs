//! Executable combinatorial proofs of four mod 3 partition congruences.
//!
//! Each of the families `PD` (designated summands), `A` (two-colour, blue
//! parts even) and `POD₋₂` (bipartitions with distinct odd parts) is mapped
//! bijectively onto a space of tuples `V_{t,k}`. On the weight-`(3n+2)` slice
//! the operator [`orbits::o_hat`] groups the tuples into orbits of three with
//! pairwise distinct V_R-ranks mod 3, so each slice has size divisible by 3.
//! The [`oracle`] module recomputes every count from generating functions.

pub mod bijections;
pub mod error;
pub mod families;
pub mod oracle;
pub mod orbits;
pub mod partition;

pub use bijections::Pipeline;
pub use error::{Error, Result};
pub use families::{Element, FamilyId};
pub use orbits::{VSpec, VTuple};
pub use partition::{FrobeniusSymbol, Partition, Residue};
