//! Dense statevector simulation, used as an independent floating-point check.

use num_complex::Complex64;
use rayon::prelude::*;

use super::codespace::span;
use super::mixed::MixedOperator;
use crate::code::ColorCode;
use crate::error::{Error, Result};
use crate::f2::BinVec;
use crate::pauli::Pauli;

pub const MAX_DENSE_QUBITS: usize = 20;

/// Amplitudes indexed by basis state; qubit `q` is bit `q` of the index.
#[derive(Clone, Debug)]
pub struct DenseState {
    pub n: usize,
    pub amps: Vec<Complex64>,
}

fn index_of(v: &BinVec) -> usize {
    v.iter_ones().map(|q| 1usize << q).sum()
}

fn bits_of(n: usize, idx: usize) -> BinVec {
    BinVec::from_indices(n, (0..n).filter(|q| idx & (1 << q) != 0))
}

impl DenseState {
    pub fn ground_state(code: &ColorCode) -> Result<Self> {
        let n = code.n();
        if n > MAX_DENSE_QUBITS {
            return Err(Error::Resource(format!("dense simulation of {n} qubits")));
        }
        let gs = code.ground_state()?;
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        let a = 2f64.powf(-(gs.r as f64) / 2.0);
        for v in span(gs.g.rows(), &BinVec::zeros(n)) {
            amps[index_of(&v)] = Complex64::new(a, 0.0);
        }
        Ok(Self { n, amps })
    }

    pub fn apply(&self, m: &MixedOperator) -> Result<Self> {
        if m.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: m.n(),
            });
        }
        let xm = index_of(&m.x);
        let n = self.n;
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        let phased: Vec<(usize, Complex64)> = self
            .amps
            .par_iter()
            .enumerate()
            .filter(|(_, a)| a.norm_sqr() > 0.0)
            .map(|(v, a)| {
                let k = m.theta.eval(&bits_of(n, v)) as f64;
                let ph = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4 * k);
                (v ^ xm, a * ph)
            })
            .collect();
        for (idx, a) in phased {
            out[idx] = a;
        }
        Ok(Self { n, amps: out })
    }

    pub fn apply_pauli(&self, p: &Pauli) -> Result<Self> {
        self.apply(&MixedOperator::from_pauli(p))
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amps
            .par_iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn expectation(&self, m: &MixedOperator) -> Result<Complex64> {
        Ok(self.inner(&self.apply(m)?))
    }

    pub fn fidelity(&self, other: &Self) -> f64 {
        self.inner(other).norm_sqr()
    }
}

/// Ground state followed by `ops` in order.
pub fn dense_statevector_oracle(code: &ColorCode, ops: &[MixedOperator]) -> Result<DenseState> {
    let mut s = DenseState::ground_state(code)?;
    for op in ops {
        s = s.apply(op)?;
    }
    Ok(s)
}
