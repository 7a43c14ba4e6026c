use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::f2::BinVec;
use crate::pauli::Pauli;
use crate::ring::{Cyclotomic, ZOmega};

use super::ExcitationState;

/// A state on a chosen list of modes, each treated as a qubit:
/// `X̃` creates or removes an excitation and `Z̃` reads its parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModeState {
    pub cells: Vec<usize>,
    pub amps: BTreeMap<BinVec, Cyclotomic>,
}

impl ModeState {
    /// Restriction of `state` to the modes of `cells`, in that order.
    /// Fails if a populated pattern excites any other mode.
    pub fn restrict(state: &ExcitationState, cells: &[usize]) -> Result<Self> {
        let pos: Vec<usize> = cells
            .iter()
            .map(|&c| {
                state
                    .modes
                    .iter()
                    .position(|m| m.cell == c)
                    .ok_or_else(|| Error::InvalidInput(format!("cell {c} is not a mode")))
            })
            .collect::<Result<_>>()?;
        let mut amps = BTreeMap::new();
        for (p, &a) in &state.amplitudes {
            if let Some(i) = p.iter_ones().find(|i| !pos.contains(i)) {
                return Err(Error::StrayExcitation {
                    cell: state.modes[i].cell,
                });
            }
            let local = BinVec::from_bools(&pos.iter().map(|&i| p.get(i)).collect::<Vec<_>>());
            amps.insert(local, a);
        }
        Ok(Self {
            cells: cells.to_vec(),
            amps,
        })
    }

    pub fn vacuum(cells: Vec<usize>) -> Self {
        let n = cells.len();
        Self {
            cells,
            amps: BTreeMap::from([(BinVec::zeros(n), Cyclotomic::one())]),
        }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    fn insert(amps: &mut BTreeMap<BinVec, Cyclotomic>, p: BinVec, a: Cyclotomic) {
        let e = amps.entry(p).or_default();
        *e = *e + a;
    }

    fn pruned(mut amps: BTreeMap<BinVec, Cyclotomic>) -> BTreeMap<BinVec, Cyclotomic> {
        amps.retain(|_, a| !a.is_zero());
        amps
    }

    pub fn apply_pauli(&self, p: &Pauli) -> Self {
        let mut amps = BTreeMap::new();
        for (v, &a) in &self.amps {
            let sign = if p.z.overlap(v).is_multiple_of(2) { 0 } else { 4 };
            Self::insert(&mut amps, v.xor(&p.x), a.rotate(2 * p.phase as i64 + sign));
        }
        Self {
            cells: self.cells.clone(),
            amps: Self::pruned(amps),
        }
    }

    /// `(1 + i·s·P)/√2 = exp(i s π/4 P)` for a Hermitian Pauli `P`.
    pub fn apply_quarter_rotation(&self, p: &Pauli, s: i64) -> Self {
        let rotated = self.apply_pauli(p);
        let mut amps = BTreeMap::new();
        let h = Cyclotomic::new(ZOmega::ONE, 1);
        for (v, &a) in &self.amps {
            Self::insert(&mut amps, v.clone(), a * h);
        }
        for (v, &a) in &rotated.amps {
            Self::insert(&mut amps, v.clone(), a.rotate(2 * s) * h);
        }
        Self {
            cells: self.cells.clone(),
            amps: Self::pruned(amps),
        }
    }

    /// `H^{⊗n}`, exact.
    pub fn hadamard_all(&self) -> Self {
        let n = self.len();
        let mut cur = self.amps.clone();
        let h = Cyclotomic::new(ZOmega::ONE, 1);
        for q in 0..n {
            let mut next = BTreeMap::new();
            for (v, &a) in &cur {
                let mut flipped = v.clone();
                flipped.flip(q);
                let a = a * h;
                if v.get(q) {
                    Self::insert(&mut next, flipped, a);
                    Self::insert(&mut next, v.clone(), -a);
                } else {
                    Self::insert(&mut next, flipped, a);
                    Self::insert(&mut next, v.clone(), a);
                }
            }
            cur = Self::pruned(next);
        }
        Self {
            cells: self.cells.clone(),
            amps: cur,
        }
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Cyclotomic {
        self.amps
            .iter()
            .filter_map(|(v, a)| other.amps.get(v).map(|b| a.conj() * *b))
            .sum()
    }

    pub fn norm_sqr(&self) -> Cyclotomic {
        self.inner(self)
    }

    /// `|⟨self|other⟩|²`.
    pub fn fidelity(&self, other: &Self) -> Cyclotomic {
        self.inner(other).norm_sqr()
    }

    pub fn expectation(&self, p: &Pauli) -> Cyclotomic {
        self.inner(&self.apply_pauli(p))
    }

    /// `⟨ψ| X^x · s(v) |ψ⟩` for a diagonal sign function `s`.
    pub fn expectation_with_signs(&self, x: &BinVec, sign: impl Fn(&BinVec) -> bool) -> Cyclotomic {
        self.amps
            .iter()
            .filter_map(|(v, a)| {
                let target = v.xor(x);
                self.amps.get(&target).map(|b| {
                    let t = b.conj() * *a;
                    if sign(v) {
                        -t
                    } else {
                        t
                    }
                })
            })
            .sum()
    }

    pub fn to_complex_vec(&self) -> BTreeMap<BinVec, num_complex::Complex64> {
        self.amps.iter().map(|(v, a)| (v.clone(), a.to_complex())).collect()
    }
}
