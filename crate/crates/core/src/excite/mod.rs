//! Excitation-basis amplitudes of diagonal operators applied to the ground
//! state, boundary wavefunctions and their SPT structure.
//!
//! With `|ψ⟩ = 2^{-r/2} Σ_u |uG⟩` and `|p̃⟩ = Z^w |ψ⟩` for any `w` with
//! generator syndrome `p`,
//!
//! ```text
//! λ_p = ⟨p̃| D |ψ⟩ = 2^{-r} Σ_u (−1)^{u·p} ω^{θ(uG)},
//! ```
//!
//! a Walsh–Hadamard transform of the substituted phase polynomial. Only the
//! generators touching `supp θ` enter the transform; every other generator
//! syndrome bit is forced to zero.

mod boundary;
mod cocycle;
mod flux;
mod modes;

pub use boundary::{
    boundary_wavefunction, closed_form_state_2d, closed_form_state_3d, float_fidelity, spt_stabilizer,
    verify_cluster_state_2d, verify_spt_state_3d, BoundaryWavefunction, ClusterFrame, ClusterReport, SptReport,
};
pub use cocycle::{cocycle_coboundary, evaluate_cocycle, CocycleType, Element};
pub use flux::{flux_crossing_witness, FluxCrossing};
pub use modes::ModeState;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::code::ColorCode;
use crate::colex::Color;
use crate::error::{Error, Result};
use crate::f2::BinVec;
use crate::phasepoly::{substitute, PhasePolynomial, ENUMERATION_LIMIT};
use crate::ring::{Cyclotomic, ZOmega};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mode {
    pub cell: usize,
    pub color: Color,
    pub label: String,
}

/// Amplitudes over full X-check syndromes (one bit per mode).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcitationState {
    pub modes: Vec<Mode>,
    pub amplitudes: BTreeMap<BinVec, Cyclotomic>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmplitudeRecord {
    pub pattern: String,
    /// `a · 2^{-t/2}` with `a = a0 + a1 ω + a2 ω² + a3 ω³`.
    pub a: [i64; 4],
    pub t: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExcitationRecord {
    pub modes: Vec<Mode>,
    pub amplitudes: Vec<AmplitudeRecord>,
}

impl ExcitationState {
    pub fn amplitude(&self, p: &BinVec) -> Cyclotomic {
        self.amplitudes.get(p).copied().unwrap_or_default()
    }

    /// Amplitude of the pattern exciting exactly `cells`.
    pub fn amplitude_of_cells(&self, cells: &[usize]) -> Cyclotomic {
        let mut p = BinVec::zeros(self.modes.len());
        for (i, m) in self.modes.iter().enumerate() {
            if cells.contains(&m.cell) {
                p.set(i, true);
            }
        }
        self.amplitude(&p)
    }

    pub fn total_weight(&self) -> Cyclotomic {
        self.amplitudes.values().map(Cyclotomic::norm_sqr).sum()
    }

    /// Modes excited with nonzero amplitude in some pattern.
    pub fn excited_modes(&self) -> BTreeSet<usize> {
        self.amplitudes.keys().flat_map(|p| p.iter_ones()).collect()
    }

    pub fn color_counts(&self, p: &BinVec, palette: usize) -> Vec<usize> {
        let mut counts = vec![0; palette];
        for i in p.iter_ones() {
            counts[self.modes[i].color.0 as usize] += 1;
        }
        counts
    }

    /// Every populated pattern has the same excitation parity on each color.
    pub fn parity_ok(&self, palette: usize) -> bool {
        self.amplitudes.keys().all(|p| {
            let c = self.color_counts(p, palette);
            c.iter().all(|&n| n % 2 == c[0] % 2)
        })
    }

    pub fn to_record(&self) -> ExcitationRecord {
        ExcitationRecord {
            modes: self.modes.clone(),
            amplitudes: self
                .amplitudes
                .iter()
                .map(|(p, c)| AmplitudeRecord {
                    pattern: p.to_bit_string(),
                    a: c.a.0,
                    t: c.t,
                })
                .collect(),
        }
    }

    pub fn from_record(rec: &ExcitationRecord) -> Result<Self> {
        let mut amplitudes = BTreeMap::new();
        for e in &rec.amplitudes {
            let p = BinVec::parse_bits(&e.pattern)?;
            if p.len() != rec.modes.len() {
                return Err(Error::DimensionMismatch {
                    expected: rec.modes.len(),
                    found: p.len(),
                });
            }
            let c = Cyclotomic::new(ZOmega(e.a), e.t);
            if c != (Cyclotomic { a: ZOmega(e.a), t: e.t }) {
                return Err(Error::Parse(format!("amplitude of {} not in lowest terms", e.pattern)));
            }
            if !c.is_zero() {
                amplitudes.insert(p, c);
            }
        }
        Ok(Self {
            modes: rec.modes.clone(),
            amplitudes,
        })
    }
}

fn modes_of(code: &ColorCode) -> Vec<Mode> {
    code.x_cells
        .iter()
        .enumerate()
        .map(|(row, &cell)| Mode {
            cell,
            color: code.x_row_color(row),
            label: code.colex.cells[cell].label.clone(),
        })
        .collect()
}

/// Expands a generator syndrome to all X checks.
fn full_syndrome(code: &ColorCode, gen: &BinVec) -> BinVec {
    let basis = code.codespace_basis();
    BinVec::from_bools(
        &basis
            .row_in_generators
            .iter()
            .map(|combo| combo.dot(gen))
            .collect::<Vec<_>>(),
    )
}

fn check_filter(state: &ExcitationState, filter: Option<&[usize]>) -> Result<()> {
    if let Some(allowed) = filter {
        for i in state.excited_modes() {
            let cell = state.modes[i].cell;
            if !allowed.contains(&cell) {
                return Err(Error::StrayExcitation { cell });
            }
        }
    }
    Ok(())
}

/// `λ_p` for every syndrome pattern reachable from `diag(ω^θ)|ψ⟩`.
pub fn excitation_spectrum(
    code: &ColorCode,
    theta: &PhasePolynomial,
    mode_filter: Option<&[usize]>,
) -> Result<ExcitationState> {
    if theta.num_vars() != code.n() {
        return Err(Error::DimensionMismatch {
            expected: code.n(),
            found: theta.num_vars(),
        });
    }
    let basis = code.codespace_basis();
    if basis.k() > 0 {
        return Err(Error::DegenerateCode { k: basis.k() });
    }
    let r = basis.r;
    let f = substitute(basis, theta);
    let support = f.support();
    let s = support.len();
    if s > ENUMERATION_LIMIT {
        return Err(Error::Resource(format!("transform over {s} generators")));
    }
    let local = f.relabel(s, |i| support.binary_search(&i).expect("support variable") as u32);
    let mut table: Vec<ZOmega> = (0u64..1 << s)
        .map(|u| {
            let v = BinVec::from_bools(&(0..s).map(|b| u & (1 << b) != 0).collect::<Vec<_>>());
            ZOmega::omega_pow(local.eval(&v) as i64)
        })
        .collect();
    walsh_hadamard(&mut table);
    let scale = Cyclotomic::inv_pow2(s as u32);
    let mut amplitudes = BTreeMap::new();
    for (ps, a) in table.into_iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let gen = BinVec::from_indices(
            r,
            (0..s).filter(|b| ps & (1 << b) != 0).map(|b| support[b] as usize),
        );
        amplitudes.insert(full_syndrome(code, &gen), Cyclotomic::new(a, 0) * scale);
    }
    let state = ExcitationState {
        modes: modes_of(code),
        amplitudes,
    };
    check_filter(&state, mode_filter)?;
    Ok(state)
}

fn walsh_hadamard(a: &mut [ZOmega]) {
    let mut h = 1;
    while h < a.len() {
        for block in a.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (x, y) in lo.iter_mut().zip(hi.iter_mut()) {
                let (s, d) = (*x + *y, *x - *y);
                *x = s;
                *y = d;
            }
        }
        h *= 2;
    }
}

/// Same amplitudes from `D = ω^{c₀} ∏_q (a_q + b_q Z_q)` for a `θ` of
/// degree at most one, grouping Z-products by their syndrome.
pub fn excitation_spectrum_by_expansion(code: &ColorCode, theta: &PhasePolynomial) -> Result<ExcitationState> {
    if theta.degree() > 1 {
        return Err(Error::InvalidInput("expansion needs a product of single-qubit phases".into()));
    }
    let basis = code.codespace_basis();
    if basis.k() > 0 {
        return Err(Error::DegenerateCode { k: basis.k() });
    }
    let factors: Vec<(usize, Cyclotomic, Cyclotomic)> = theta
        .terms()
        .filter(|(k, _)| k.len() == 1)
        .map(|(k, c)| {
            let w = Cyclotomic::omega_pow(c as i64);
            let half = Cyclotomic::inv_pow2(1);
            (k[0] as usize, (Cyclotomic::one() + w) * half, (Cyclotomic::one() - w) * half)
        })
        .collect();
    if factors.len() > ENUMERATION_LIMIT {
        return Err(Error::Resource(format!("expansion over {} qubits", factors.len())));
    }
    let global = Cyclotomic::omega_pow(theta.constant_term() as i64);
    let mut acc: HashMap<BinVec, Cyclotomic> = HashMap::new();
    for mask in 0u64..1 << factors.len() {
        let mut z = BinVec::zeros(code.n());
        let mut coef = global;
        for (i, (q, a, b)) in factors.iter().enumerate() {
            if mask & (1 << i) != 0 {
                z.set(*q, true);
                coef = coef * *b;
            } else {
                coef = coef * *a;
            }
            if coef.is_zero() {
                break;
            }
        }
        if coef.is_zero() {
            continue;
        }
        let syn = code.x_syndrome_of_support(&z);
        let e = acc.entry(syn).or_default();
        *e = *e + coef;
    }
    Ok(ExcitationState {
        modes: modes_of(code),
        amplitudes: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
    })
}

/// Floating-point `λ_p` from the dense statevector, for every pattern of `state`
/// and any extra patterns the dense computation populates.
pub fn dense_excitation_amplitudes(
    code: &ColorCode,
    theta: &PhasePolynomial,
) -> Result<BTreeMap<BinVec, num_complex::Complex64>> {
    use crate::phasepoly::{DenseState, MixedOperator};
    let gs = DenseState::ground_state(code)?;
    let out = gs.apply(&MixedOperator::diagonal(theta.clone()))?;
    let solver = code.hx.transpose().reduce();
    let n = code.n();
    // enumerate syndromes reachable by single-qubit Z flips combined
    let mut patterns: BTreeSet<BinVec> = BTreeSet::new();
    for mask in 0u64..1 << n.min(20) {
        let z = BinVec::from_indices(n, (0..n).filter(|q| mask & (1 << q) != 0));
        patterns.insert(code.x_syndrome_of_support(&z));
    }
    let mut res = BTreeMap::new();
    for p in patterns {
        let w = solver.solve(&p).expect("syndrome of a Z support");
        let mut amp = num_complex::Complex64::new(0.0, 0.0);
        for (idx, a) in out.amps.iter().enumerate() {
            let sign = if (0..n).filter(|&q| w.get(q) && idx & (1 << q) != 0).count() % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            amp += gs.amps[idx].conj() * sign * a;
        }
        if amp.norm() > 1e-12 {
            res.insert(p, amp);
        }
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_color_code;
    use crate::colex::{build_16cell_colex, build_octahedral_sphere};
    use crate::phasepoly::single_qubit_phase;

    #[test]
    fn identity_gives_vacuum() {
        let code = build_color_code(build_octahedral_sphere(1).unwrap()).unwrap();
        let s = excitation_spectrum(&code, &PhasePolynomial::zero(code.n()), None).unwrap();
        assert_eq!(s.amplitudes.len(), 1);
        assert_eq!(s.amplitude(&BinVec::zeros(s.modes.len())), Cyclotomic::one());
    }

    #[test]
    fn single_qubit_rotation_excites_three_plaquettes() {
        let code = build_color_code(build_octahedral_sphere(1).unwrap()).unwrap();
        for c in [1, 2, 4] {
            let theta = single_qubit_phase(code.n(), 5, c);
            let s = excitation_spectrum(&code, &theta, None).unwrap();
            assert_eq!(s.amplitudes.len(), if c == 4 { 1 } else { 2 });
            let cells = code.colex.cells_at(5).to_vec();
            let top: Vec<usize> = cells.into_iter().filter(|&c| code.colex.cells[c].rank == 2).collect();
            let w = Cyclotomic::omega_pow(c);
            let half = Cyclotomic::inv_pow2(1);
            assert_eq!(s.amplitude_of_cells(&[]), (Cyclotomic::one() + w) * half);
            assert_eq!(s.amplitude_of_cells(&top), (Cyclotomic::one() - w) * half);
            assert_eq!(s.total_weight(), Cyclotomic::one());
            assert!(s.parity_ok(3));
            assert_eq!(s, excitation_spectrum_by_expansion(&code, &theta).unwrap());
        }
    }

    #[test]
    fn filter_names_stray_cell() {
        let code = build_color_code(build_octahedral_sphere(0).unwrap()).unwrap();
        let theta = single_qubit_phase(code.n(), 0, 2);
        let err = excitation_spectrum(&code, &theta, Some(&[])).unwrap_err();
        assert!(matches!(err, Error::StrayExcitation { .. }));
    }

    #[test]
    fn record_round_trip() {
        let code = build_color_code(build_16cell_colex().unwrap()).unwrap();
        let theta = crate::phasepoly::transversal_phase_poly(&code.colex, 3, Some(&BinVec::from_indices(16, [0, 3, 5]))).unwrap();
        let s = excitation_spectrum(&code, &theta, None).unwrap();
        let rec = s.to_record();
        let json = serde_json::to_string(&rec).unwrap();
        let back: ExcitationRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(ExcitationState::from_record(&back).unwrap(), s);
    }
}
