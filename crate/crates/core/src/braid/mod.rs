//! Braiding phases as ground-state scalars of nested group commutators.
//!
//! For loop-creating unitaries `U_α, U_β, U_γ`,
//!
//! ```text
//! θ(α,β)   from  K(U_α†, U_β†) = U_α† U_β† U_α U_β
//! θ(α,β,γ) from  K(K(U_α†, U_β†)†, U_γ†)
//! ```
//!
//! Each result must be a scalar on the code space; otherwise the supports do
//! not annihilate the excitations they create and the configuration is rejected.

mod fixtures;
mod wall;

pub use fixtures::{sixteen_cell_process, ProcessSpec};
pub use wall::{wall_braiding_triviality, WallContribution, WallReport};

use serde::Serialize;

use crate::code::ColorCode;
use crate::error::{Error, Result};
use crate::f2::BinVec;
use crate::pauli::Pauli;
use crate::phasepoly::{
    classify, dense_statevector_oracle, sequential_commutator, transversal_phase_poly, DenseState, MixedOperator,
    MixedRecord, PhasePolynomial, MAX_DENSE_QUBITS,
};
use crate::ring::Phase8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ProcessKind {
    /// Z-string, point charge.
    Charge,
    /// X-membrane, loop flux.
    Flux,
    /// `R₂`-membrane, SPT loop.
    Spt,
    /// Product of several of the above.
    Composite,
}

/// A unitary creating a pair of excitations (or a loop) with its label.
#[derive(Clone, Debug)]
pub struct LoopProcess {
    pub label: String,
    pub kind: ProcessKind,
    pub op: MixedOperator,
}

impl LoopProcess {
    pub fn charge(label: &str, support: BinVec) -> Self {
        Self {
            label: label.into(),
            kind: ProcessKind::Charge,
            op: MixedOperator::from_pauli(&Pauli::z_on(support)),
        }
    }

    pub fn flux(label: &str, support: BinVec) -> Self {
        Self {
            label: label.into(),
            kind: ProcessKind::Flux,
            op: MixedOperator::from_pauli(&Pauli::x_on(support)),
        }
    }

    /// `R₂^{±1}` on `support`, signed by the bipartition.
    pub fn spt(code: &ColorCode, label: &str, support: &BinVec) -> Result<Self> {
        Ok(Self {
            label: label.into(),
            kind: ProcessKind::Spt,
            op: MixedOperator::diagonal(transversal_phase_poly(&code.colex, 2, Some(support))?),
        })
    }

    /// `self · other` as operators.
    pub fn times(&self, other: &LoopProcess) -> Result<Self> {
        Ok(Self {
            label: format!("{}{}", self.label, other.label),
            kind: ProcessKind::Composite,
            op: self.op.mul(&other.op)?,
        })
    }

    pub fn is_pauli(&self) -> bool {
        self.op.to_pauli().is_some()
    }

    /// Multiplies the operator by `p` (typically a stabilizer).
    pub fn deformed(&self, p: &Pauli) -> Result<Self> {
        Ok(Self {
            label: self.label.clone(),
            kind: self.kind,
            op: self.op.mul(&MixedOperator::from_pauli(p))?,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BraidResult {
    pub participants: Vec<String>,
    pub phase: Phase8,
    /// Nested commutators, innermost first.
    pub trace: Vec<MixedRecord>,
}

impl BraidResult {
    pub fn sign(&self) -> Option<i8> {
        match self.phase.exponent() {
            0 => Some(1),
            4 => Some(-1),
            _ => None,
        }
    }
}

fn scalar_of(code: &ColorCode, m: &MixedOperator, who: &[&LoopProcess]) -> Result<Phase8> {
    classify(code, m).scalar().ok_or_else(|| {
        let names: Vec<&str> = who.iter().map(|p| p.label.as_str()).collect();
        Error::Configuration(format!(
            "commutator of ({}) is not a scalar on the code space",
            names.join(", ")
        ))
    })
}

fn nested(ops: &[&LoopProcess]) -> Result<Vec<MixedOperator>> {
    let daggers: Vec<MixedOperator> = ops.iter().map(|p| p.op.adjoint()).collect();
    let mut trace = Vec::new();
    for depth in 2..=daggers.len() {
        trace.push(sequential_commutator(&daggers[..depth])?);
    }
    Ok(trace)
}

fn check_sizes(code: &ColorCode, ops: &[&LoopProcess]) -> Result<()> {
    for p in ops {
        if p.op.n() != code.n() {
            return Err(Error::DimensionMismatch {
                expected: code.n(),
                found: p.op.n(),
            });
        }
    }
    Ok(())
}

fn braid(code: &ColorCode, ops: &[&LoopProcess]) -> Result<BraidResult> {
    check_sizes(code, ops)?;
    let trace = nested(ops)?;
    let last = trace.last().expect("at least one commutator");
    let phase = scalar_of(code, last, ops)?;
    Ok(BraidResult {
        participants: ops.iter().map(|p| p.label.clone()).collect(),
        phase,
        trace: trace.iter().map(MixedOperator::to_record).collect(),
    })
}

pub fn braid_two(code: &ColorCode, a: &LoopProcess, b: &LoopProcess) -> Result<BraidResult> {
    braid(code, &[a, b])
}

pub fn braid_three_loop(code: &ColorCode, a: &LoopProcess, b: &LoopProcess, c: &LoopProcess) -> Result<BraidResult> {
    braid(code, &[a, b, c])
}

/// Stabilizer generators that deform `ps[slot]` without sweeping it across
/// another participant: X checks that hold none of their flux plaquettes or
/// charges, and Z checks their X parts do not violate. The other
/// participants are held fixed.
pub fn admissible_deformations(code: &ColorCode, ps: &[&LoopProcess], slot: usize) -> Vec<Pauli> {
    let others: Vec<&LoopProcess> = ps.iter().enumerate().filter(|&(i, _)| i != slot).map(|(_, p)| *p).collect();
    let fluxes: Vec<BinVec> = others
        .iter()
        .flat_map(|p| code.hz.mul_vec(&p.op.x).iter_ones().collect::<Vec<_>>())
        .map(|r| code.hz.row(r).clone())
        .collect();
    let charges: Vec<BinVec> = others.iter().filter_map(|p| p.op.to_pauli()).map(|p| p.z).collect();
    let mut out = Vec::new();
    for row in code.hx.rows() {
        if fluxes.iter().all(|f| !f.is_subset_of(row)) && charges.iter().all(|z| !row.dot(z)) {
            out.push(Pauli::x_on(row.clone()));
        }
    }
    for row in code.hz.rows() {
        if others.iter().all(|p| !row.dot(&p.op.x)) {
            out.push(Pauli::z_on(row.clone()));
        }
    }
    out
}

/// `(−1)^{|x_a ∩ z_b| + |z_a ∩ x_b|}` for two Pauli processes.
pub fn symplectic_phase(a: &LoopProcess, b: &LoopProcess) -> Option<i8> {
    let (p, q) = (a.op.to_pauli()?, b.op.to_pauli()?);
    let odd = (p.x.overlap(&q.z) + p.z.overlap(&q.x)) % 2 == 1;
    Some(if odd { -1 } else { 1 })
}

/// `⟨gs| U |gs⟩` of the outermost commutator from a dense statevector.
pub fn dense_braid_phase(code: &ColorCode, ops: &[&LoopProcess]) -> Result<num_complex::Complex64> {
    if code.n() > MAX_DENSE_QUBITS {
        return Err(Error::Resource(format!("dense check on {} qubits", code.n())));
    }
    let trace = nested(ops)?;
    let gs = DenseState::ground_state(code)?;
    let out = dense_statevector_oracle(code, &[trace.last().expect("commutator").clone()])?;
    Ok(gs.inner(&out))
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorIdentity {
    pub equal_up_to_constant: bool,
    pub constant_offset: u8,
    pub exactly_equal: bool,
}

/// Compares `K(R̄₃, X^x)` with the `R₂` membrane on `x`.
pub fn commutator_identity(code: &ColorCode, membrane: &BinVec) -> Result<CommutatorIdentity> {
    let r3 = transversal_phase_poly(&code.colex, 3, None)?;
    let k = MixedOperator::diagonal(r3).commutator(&MixedOperator::from_pauli(&Pauli::x_on(membrane.clone())))?;
    if !k.is_diagonal() {
        return Err(Error::Configuration("commutator kept an X part".into()));
    }
    let r2: PhasePolynomial = transversal_phase_poly(&code.colex, 2, Some(membrane))?;
    let cmp = crate::phasepoly::compare_diagonals(&k.theta, &r2);
    Ok(CommutatorIdentity {
        equal_up_to_constant: cmp.equal_up_to_constant,
        constant_offset: cmp.constant_offset,
        exactly_equal: cmp.exactly_equal,
    })
}
