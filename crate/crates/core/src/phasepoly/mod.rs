//! Diagonal gates as phase polynomials, Pauli/diagonal normal forms and
//! their group commutators.

mod codespace;
mod dense;
mod mixed;
mod poly;

pub use codespace::{
    classify, exponential_sum, ground_expectation, preserves_codespace,
    preserves_codespace_enumerated, substitute, ScalarOrOperator, ScalarRecord,
    ENUMERATION_LIMIT,
};
pub use dense::{dense_statevector_oracle, DenseState, MAX_DENSE_QUBITS};
pub use mixed::{pauli_commutator, sequential_commutator, MixedOperator, MixedRecord};
pub use poly::{PhasePolynomial, PolyRecord};

use serde::Serialize;

use crate::colex::Colex;
use crate::error::{Error, Result};
use crate::f2::BinVec;

/// `⊗_{j∈T∩V} R_k ⊗_{j∈T^c∩V} R_k^{-1}`: coefficient `±1` in `Z_{2^k}` per
/// qubit of the region, signed by the colex bipartition.
pub fn transversal_phase_poly(colex: &Colex, level: u32, region: Option<&BinVec>) -> Result<PhasePolynomial> {
    if !(2..=3).contains(&level) {
        return Err(Error::InvalidInput(format!("level {level} outside 2..=3")));
    }
    let n = colex.n_qubits;
    if let Some(r) = region {
        if r.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: r.len(),
            });
        }
    }
    let unit = 1i64 << (3 - level);
    let mut p = PhasePolynomial::zero(n);
    for q in 0..n {
        if region.is_none_or(|r| r.get(q)) {
            p.add_term(&[q as u32], unit * colex.sign(q));
        }
    }
    Ok(p)
}

/// `diag(1, ω^c)` on one qubit.
pub fn single_qubit_phase(n: usize, q: usize, c: i64) -> PhasePolynomial {
    let mut p = PhasePolynomial::zero(n);
    p.add_term(&[q as u32], c);
    p
}

/// How two diagonal operators compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalComparison {
    pub equal_up_to_constant: bool,
    pub exactly_equal: bool,
    /// `θ_a − θ_b` constant term, in units of `π/4`.
    pub constant_offset: u8,
}

pub fn compare_diagonals(a: &PhasePolynomial, b: &PhasePolynomial) -> DiagonalComparison {
    let diff = a.add(&b.neg());
    DiagonalComparison {
        equal_up_to_constant: diff.is_constant(),
        exactly_equal: diff.is_zero(),
        constant_offset: diff.constant_term(),
    }
}
