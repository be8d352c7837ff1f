//! Exact computations in the ring of symmetric functions and the classical
//! branching rules behind the `W_Sp(λ)` / `W_O(λ)` representation families.

pub mod classical;
pub mod error;
pub mod fermionic;
pub mod lie;
pub mod looproot;
pub mod partition;
pub mod schur;
pub mod tableaux;

pub use error::{Error, Result};
pub use partition::{DominantWeight, Partition, RootLatticeElement};
pub use schur::{Basis, Expansion};
