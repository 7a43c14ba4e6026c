//! Exact verification toolkit for topological color codes.
//!
//! The crate builds colorable lattices, derives their CSS stabilizer codes,
//! and evaluates transversal phase gates, excitation-basis wavefunctions,
//! domain walls and loop braiding phases with exact cyclotomic arithmetic.

pub mod anyons;
pub mod braid;
pub mod code;
pub mod colex;
pub mod error;
pub mod excite;
pub mod f2;
pub mod pauli;
pub mod phasepoly;
pub mod ring;
pub mod scenario;

pub use error::{Error, Result};
pub use f2::{BinMat, BinVec};
pub use pauli::Pauli;
