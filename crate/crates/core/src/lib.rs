//! Chute moves on reduced pipe dreams and the lattice they generate.

pub mod bitmatrix;
pub mod chute;
pub mod cli;
pub mod error;
pub mod perm;
pub mod pipedream;
pub mod poset;
pub mod schubert;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
pub use perm::Permutation;
pub use pipedream::{PipeDream, Tile};
pub use tableaux::{LehmerTableau, StairTableau};
