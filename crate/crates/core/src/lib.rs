pub mod affine;
pub mod affine_lattice;
pub mod cache;
pub mod cli;
pub mod dichotomy;
pub mod error;
pub mod group_table;
pub mod inventory;
pub mod lattice;
pub mod perm;
pub mod poset;

pub use error::{Error, Result};
