use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
    #[error("stabilizers {x_row} (X) and {z_row} (Z) anticommute")]
    Commutation { x_row: usize, z_row: usize },
    #[error("code has {k} logical qubits; a unique ground state is required")]
    DegenerateCode { k: usize },
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("configuration error: {0}")]
    Configuration(String),
    #[error("excitation outside the allowed modes at cell {cell}")]
    StrayExcitation { cell: usize },
    #[error("unknown name: {0}")]
    Unknown(String),
}

pub type Result<T> = std::result::Result<T, Error>;
