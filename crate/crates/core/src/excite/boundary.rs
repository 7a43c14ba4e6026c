use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;
use serde::Serialize;

use super::modes::ModeState;
use super::{excitation_spectrum, ExcitationState};
use crate::code::ColorCode;
use crate::colex::{region_and_boundary, BoundaryLattice, Color, Colex, Region};
use crate::error::{Error, Result};
use crate::f2::BinVec;
use crate::pauli::Pauli;
use crate::phasepoly::{transversal_phase_poly, MixedOperator, PhasePolynomial};
use crate::ring::Cyclotomic;

#[derive(Clone, Debug)]
pub struct BoundaryWavefunction {
    pub region: Region,
    pub boundary: BoundaryLattice,
    pub level: u32,
    pub state: ExcitationState,
    /// The state on `boundary.cells`, in that order.
    pub modes: ModeState,
}

/// Applies `R̄_k` restricted to `region` to the ground state and reads off
/// the excitation pattern, which must live on `∂V`.
pub fn boundary_wavefunction(code: &ColorCode, region: &Region, level: u32) -> Result<BoundaryWavefunction> {
    let colex = &code.colex;
    let expected = colex.dim as u32;
    if level != expected {
        return Err(Error::InvalidInput(format!(
            "a {}D boundary state needs level {expected}, got {level}",
            colex.dim
        )));
    }
    let (region, boundary) = region_and_boundary(colex, region.color, &region.cells)?;
    if boundary.degenerate {
        return Err(Error::InvalidLattice("region boundary is not a single closed surface".into()));
    }
    let theta = transversal_phase_poly(colex, level, Some(&region.v))?;
    let state = excitation_spectrum(code, &theta, Some(&boundary.cells))?;
    let modes = ModeState::restrict(&state, &boundary.cells)?;
    Ok(BoundaryWavefunction {
        region,
        boundary,
        level,
        state,
        modes,
    })
}

/// Sign of the rotation carried by a link: `R_k^{±1} ∝ exp(∓iπ/2^k Z)`.
fn link_sign(colex: &Colex, q: usize) -> i64 {
    -colex.sign(q)
}

/// `∏_q exp(i σ_q π/4 X̃_{A(q)} X̃_{B(q)}) |0̃…0̃⟩`.
pub fn closed_form_state_2d(colex: &Colex, boundary: &BoundaryLattice) -> ModeState {
    let n = boundary.len();
    let mut s = ModeState::vacuum(boundary.cells.clone());
    for link in &boundary.links {
        let p = Pauli::x_on(BinVec::from_indices(n, link.nodes.iter().copied()));
        s = s.apply_quarter_rotation(&p, link_sign(colex, link.qubit));
    }
    s
}

/// `∏_Δ exp(i s σ_Δ π/8 X̃X̃X̃) |0̃…0̃⟩` in floating point, with `s = ±1`
/// an overall sign convention.
pub fn closed_form_state_3d(colex: &Colex, boundary: &BoundaryLattice, s: i64) -> BTreeMap<BinVec, Complex64> {
    let n = boundary.len();
    let (c, sn) = ((std::f64::consts::PI / 8.0).cos(), (std::f64::consts::PI / 8.0).sin());
    let mut cur: BTreeMap<BinVec, Complex64> = BTreeMap::from([(BinVec::zeros(n), Complex64::new(1.0, 0.0))]);
    for link in &boundary.links {
        let x = BinVec::from_indices(n, link.nodes.iter().copied());
        let sigma = (s * link_sign(colex, link.qubit)) as f64;
        let mut next: BTreeMap<BinVec, Complex64> = BTreeMap::new();
        for (v, a) in cur {
            *next.entry(v.clone()).or_default() += a * c;
            *next.entry(v.xor(&x)).or_default() += a * Complex64::new(0.0, sigma * sn);
        }
        cur = next;
    }
    cur.retain(|_, a| a.norm() > 1e-14);
    cur
}

pub fn float_fidelity(a: &BTreeMap<BinVec, Complex64>, b: &BTreeMap<BinVec, Complex64>) -> f64 {
    a.iter()
        .filter_map(|(v, x)| b.get(v).map(|y| x.conj() * y))
        .sum::<Complex64>()
        .norm_sqr()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClusterFrame {
    /// `Z X Z` chain terms after `H^{⊗2n}`, symmetries `∏ X`.
    PostHadamard,
    /// `X̃ Z̃ X̃` chain terms on the excitation modes, symmetries `∏ Z̃`.
    PreHadamard,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClusterReport {
    pub frame: ClusterFrame,
    pub cycle_cells: Vec<usize>,
    pub stabilizers: Vec<Cyclotomic>,
    pub symmetries: Vec<(Color, Cyclotomic)>,
    pub all_stabilizers_plus_one: bool,
    pub symmetries_plus_one: bool,
}

impl ClusterReport {
    pub fn passed(&self) -> bool {
        self.all_stabilizers_plus_one && self.symmetries_plus_one
    }

    pub fn failing_stabilizers(&self) -> Vec<usize> {
        self.stabilizers
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != Cyclotomic::one())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Evaluates the `2n` cluster stabilizers and the two color parities on a
/// state living on an alternating boundary cycle.
pub fn verify_cluster_state_2d(
    state: &ExcitationState,
    boundary: &BoundaryLattice,
    frame: ClusterFrame,
) -> Result<ClusterReport> {
    let cycle = boundary
        .cycle
        .as_ref()
        .ok_or_else(|| Error::InvalidLattice("boundary is not an alternating cycle".into()))?;
    let n = cycle.len();
    if n < 4 || n % 2 != 0 {
        return Err(Error::InvalidLattice(format!("cycle of {n} modes")));
    }
    let cells: Vec<usize> = cycle.iter().map(|&i| boundary.cells[i]).collect();
    let colors: Vec<Color> = cycle.iter().map(|&i| boundary.colors[i]).collect();
    let mut psi = ModeState::restrict(state, &cells)?;
    let (flip, read): (fn(BinVec) -> Pauli, fn(BinVec) -> Pauli) = match frame {
        ClusterFrame::PostHadamard => {
            psi = psi.hadamard_all();
            (Pauli::z_on, Pauli::x_on)
        }
        ClusterFrame::PreHadamard => (Pauli::x_on, Pauli::z_on),
    };
    let stabilizers: Vec<Cyclotomic> = (0..n)
        .map(|j| {
            let outer = flip(BinVec::from_indices(n, [(j + n - 1) % n, (j + 1) % n]));
            let centre = read(BinVec::from_indices(n, [j]));
            psi.expectation(&outer.mul(&centre).expect("equal lengths"))
        })
        .collect();
    let palette: BTreeSet<Color> = colors.iter().copied().collect();
    let symmetries: Vec<(Color, Cyclotomic)> = palette
        .iter()
        .map(|&c| {
            let sym = match frame {
                ClusterFrame::PostHadamard => Pauli::x_on,
                ClusterFrame::PreHadamard => Pauli::z_on,
            };
            let sup = BinVec::from_indices(n, (0..n).filter(|&j| colors[j] == c));
            (c, psi.expectation(&sym(sup)))
        })
        .collect();
    Ok(ClusterReport {
        frame,
        cycle_cells: cells,
        all_stabilizers_plus_one: stabilizers.iter().all(|v| *v == Cyclotomic::one()),
        symmetries_plus_one: symmetries.iter().all(|(_, v)| *v == Cyclotomic::one()),
        stabilizers,
        symmetries,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SptReport {
    pub cells: Vec<usize>,
    pub colors: Vec<Color>,
    /// `⟨Q_j⟩` per dual vertex.
    pub q_expectations: Vec<Cyclotomic>,
    pub symmetries: Vec<(Color, Cyclotomic)>,
    /// Whether `∏_{j of color c} Q_j = S_c` holds as an operator identity.
    pub product_identities: Vec<(Color, bool)>,
}

impl SptReport {
    pub fn passed(&self) -> bool {
        self.q_expectations.iter().all(|v| *v == Cyclotomic::one())
            && self.symmetries.iter().all(|(_, v)| *v == Cyclotomic::one())
            && self.product_identities.iter().all(|(_, ok)| *ok)
    }
}

/// Edges opposite to vertex `j` in the triangles of `∂V*` containing it.
fn opposite_edges(dual: &BoundaryLattice, j: usize) -> Vec<(usize, usize)> {
    dual.links
        .iter()
        .filter(|l| l.nodes.contains(&j))
        .map(|l| {
            let o: Vec<usize> = l.nodes.iter().copied().filter(|&v| v != j).collect();
            (o[0], o[1])
        })
        .collect()
}

/// `Q_j = X_j ∏ CZ` as an operator on the dual vertices.
pub fn spt_stabilizer(dual: &BoundaryLattice, j: usize) -> MixedOperator {
    let n = dual.len();
    let mut theta = PhasePolynomial::zero(n);
    for (a, b) in opposite_edges(dual, j) {
        theta.add_term(&[a as u32, b as u32], 4);
    }
    MixedOperator {
        x: BinVec::from_indices(n, [j]),
        theta,
    }
}

/// After `H^{⊗}` on the boundary modes, checks `Q_j = +1` for every dual
/// vertex, the three color symmetries, and `∏_{j∈c} Q_j = S_c`.
pub fn verify_spt_state_3d(state: &ExcitationState, dual: &BoundaryLattice) -> Result<SptReport> {
    let palette: BTreeSet<Color> = dual.colors.iter().copied().collect();
    let colored = dual.links.iter().all(|l| {
        l.nodes.len() == 3 && l.nodes.iter().map(|&i| dual.colors[i]).collect::<BTreeSet<_>>().len() == 3
    });
    if palette.len() != 3 || !colored {
        return Err(Error::InvalidLattice("dual lattice is not 3-colored".into()));
    }
    let n = dual.len();
    let psi = ModeState::restrict(state, &dual.cells)?.hadamard_all();
    let q_expectations = (0..n)
        .map(|j| {
            let edges = opposite_edges(dual, j);
            psi.expectation_with_signs(&BinVec::from_indices(n, [j]), |v| {
                edges.iter().filter(|&&(a, b)| v.get(a) && v.get(b)).count() % 2 == 1
            })
        })
        .collect();
    let mut symmetries = Vec::new();
    let mut product_identities = Vec::new();
    for &c in &palette {
        let members: Vec<usize> = (0..n).filter(|&j| dual.colors[j] == c).collect();
        let s = Pauli::x_on(BinVec::from_indices(n, members.iter().copied()));
        symmetries.push((c, psi.expectation(&s)));
        let mut prod = MixedOperator::identity(n);
        for &j in &members {
            prod = prod.mul(&spt_stabilizer(dual, j))?;
        }
        product_identities.push((c, prod == MixedOperator::from_pauli(&s)));
    }
    Ok(SptReport {
        cells: dual.cells.clone(),
        colors: dual.colors.clone(),
        q_expectations,
        symmetries,
        product_identities,
    })
}

impl ExcitationState {
    /// `X̃` on one mode: toggles its bit in every pattern.
    pub fn flip_mode(&self, cell: usize) -> Self {
        let i = self.modes.iter().position(|m| m.cell == cell).expect("unknown mode");
        let amplitudes = self
            .amplitudes
            .iter()
            .map(|(p, a)| {
                let mut p = p.clone();
                p.flip(i);
                (p, *a)
            })
            .collect();
        Self {
            modes: self.modes.clone(),
            amplitudes,
        }
    }

    /// `Z̃` on one mode.
    pub fn phase_flip_mode(&self, cell: usize) -> Self {
        let i = self.modes.iter().position(|m| m.cell == cell).expect("unknown mode");
        let amplitudes = self
            .amplitudes
            .iter()
            .map(|(p, a)| (p.clone(), if p.get(i) { -*a } else { *a }))
            .collect();
        Self {
            modes: self.modes.clone(),
            amplitudes,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_color_code;
    use crate::colex::{build_16cell_colex, build_octahedral_sphere};

    fn plaquette_region(colex: &Colex, color: Color, which: usize) -> Region {
        let cell = colex.top_cells().into_iter().filter(|&c| colex.top_color(c) == color).nth(which).unwrap();
        region_and_boundary(colex, color, &[cell]).unwrap().0
    }

    #[test]
    fn sphere_cluster_boundary() {
        for r in 0..3 {
            let code = build_color_code(build_octahedral_sphere(r).unwrap()).unwrap();
            let region = plaquette_region(&code.colex, Color::C, 0);
            let bw = boundary_wavefunction(&code, &region, 2).unwrap();
            assert_eq!(bw.state.total_weight(), Cyclotomic::one());
            let closed = closed_form_state_2d(&code.colex, &bw.boundary);
            assert_eq!(closed.fidelity(&bw.modes), Cyclotomic::one(), "refinement {r}");
            for frame in [ClusterFrame::PostHadamard, ClusterFrame::PreHadamard] {
                let rep = verify_cluster_state_2d(&bw.state, &bw.boundary, frame).unwrap();
                assert!(rep.passed(), "{rep:?}");
            }
        }
    }

    #[test]
    fn sixteen_cell_spt_boundary() {
        let code = build_color_code(build_16cell_colex().unwrap()).unwrap();
        let region = plaquette_region(&code.colex, Color::D, 0);
        let bw = boundary_wavefunction(&code, &region, 3).unwrap();
        assert_eq!(bw.boundary.len(), 6);
        let rep = verify_spt_state_3d(&bw.state, &bw.boundary).unwrap();
        assert!(rep.passed(), "{rep:?}");
        let exact = bw.modes.to_complex_vec();
        let f = float_fidelity(&closed_form_state_3d(&code.colex, &bw.boundary, 1), &exact);
        let g = float_fidelity(&closed_form_state_3d(&code.colex, &bw.boundary, -1), &exact);
        assert!((f - 1.0).abs() < 1e-10 || (g - 1.0).abs() < 1e-10);
    }
}
