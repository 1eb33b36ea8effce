//! Combinatorics of parabolically induced representations in natural
//! characteristic: root systems, Weyl groups, standard parabolics,
//! (P, sigma, Q) triples, and the calculus of constituents, lattices,
//! adjoints and cuspidality built on top of them.

pub mod calculus;
pub mod cli;
pub mod error;
pub mod lattice;
pub mod parabolic;
pub mod rootsys;
pub mod triples;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
