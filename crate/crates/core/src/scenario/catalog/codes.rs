use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::code::{build_color_code, ColorCode};
use crate::colex::{region_and_boundary, Color, ColorSet, Region};
use crate::error::Result;
use crate::excite::{
    boundary_wavefunction, closed_form_state_2d, dense_excitation_amplitudes, excitation_spectrum,
    flux_crossing_witness, verify_cluster_state_2d, verify_spt_state_3d, ClusterFrame, ExcitationState,
};
use crate::pauli::Pauli;
use crate::phasepoly::{
    ground_expectation, preserves_codespace, preserves_codespace_enumerated, single_qubit_phase,
    transversal_phase_poly, DenseState, MixedOperator, PhasePolynomial,
};
use crate::ring::Cyclotomic;
use crate::scenario::{Basis, Expectation, RunContext, Value};

const DENSE_LIMIT: usize = 16;
const TOL: f64 = 1e-10;
/// Largest `r + k` for the brute-force code-space check.
const ENUMERATION_BITS: usize = 20;

fn code(ctx: &RunContext, spec: &str) -> Result<ColorCode> {
    build_color_code(ctx.lattices.build(spec)?)
}

/// The region spanned by the first top cell of `color`.
fn single_cell_region(code: &ColorCode, color: Color) -> Result<Region> {
    let colex = &code.colex;
    let cell = colex
        .top_cells()
        .into_iter()
        .find(|&c| colex.top_color(c) == color)
        .expect("every color has a top cell");
    Ok(region_and_boundary(colex, color, &[cell])?.0)
}

pub(super) fn stabilizer_consistency(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let mut out = Vec::new();
    for (spec, k, basis) in [
        ("hex-torus:2,2", 4, Basis::Derived),
        ("cube", 0, Basis::Reference),
        ("16-cell", 0, Basis::Reference),
        ("bcc-torus:2,2,2", 9, Basis::Derived),
    ] {
        let code = code(ctx, spec)?;
        let bad = code.hx.rows().iter().enumerate().find_map(|(i, x)| {
            code.hz
                .rows()
                .iter()
                .position(|z| x.dot(z))
                .map(|j| format!("x row {i}, z row {j}"))
        });
        out.push(
            Expectation::holds(format!("{spec}: every X/Z check pair commutes"), Basis::Reference, bad.is_none())
                .blame(bad.unwrap_or_default()),
        );
        let (_, found) = code.parameters();
        out.push(Expectation::equal(format!("{spec}: k"), basis, Value::int(k), Value::int(found)));
    }
    Ok(out)
}

fn transversality(code: &ColorCode, spec: &str, level: u32, expect: bool, basis: Basis) -> Result<Vec<Expectation>> {
    let theta = transversal_phase_poly(&code.colex, level, None)?;
    let symbolic = preserves_codespace(code, &theta);
    let mut out = vec![Expectation::equal(
        format!("{spec}: R{level} pattern preserves the code space"),
        basis,
        Value::bool(expect),
        Value::bool(symbolic),
    )];
    if code.codespace_basis().vectors.len() <= ENUMERATION_BITS {
        out.push(Expectation::equal(
            format!("{spec}: enumeration agrees"),
            Basis::Derived,
            Value::bool(symbolic),
            Value::bool(preserves_codespace_enumerated(code, &theta)?),
        ));
    }
    if code.n() <= DENSE_LIMIT {
        let d = MixedOperator::diagonal(theta);
        let exact = ground_expectation(code, &d)?.to_complex().norm();
        let gs = DenseState::ground_state(code)?;
        let dense = gs.inner(&gs.apply(&d)?).norm();
        out.push(Expectation::within(
            format!("{spec}: dense |<gs|D|gs>| equals the exact value"),
            Basis::Derived,
            exact,
            dense,
            TOL,
        ));
        out.push(Expectation::equal(
            format!("{spec}: dense fidelity is 1 iff preserved"),
            Basis::Derived,
            Value::bool(symbolic),
            Value::bool((dense - 1.0).abs() <= TOL),
        ));
    }
    Ok(out)
}

pub(super) fn r2_spheres(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let mut out = Vec::new();
    for r in 0..=2 {
        let spec = format!("octahedral-sphere:{r}");
        out.extend(transversality(&code(ctx, &spec)?, &spec, 2, true, Basis::Reference)?);
    }
    Ok(out)
}

pub(super) fn r3_sixteen_cell(ctx: &RunContext) -> Result<Vec<Expectation>> {
    transversality(&code(ctx, "16-cell")?, "16-cell", 3, true, Basis::Reference)
}

pub(super) fn r3_bcc(ctx: &RunContext) -> Result<Vec<Expectation>> {
    transversality(&code(ctx, "bcc-torus:2,2,2")?, "bcc-torus:2,2,2", 3, true, Basis::Reference)
}

pub(super) fn r3_cube(ctx: &RunContext) -> Result<Vec<Expectation>> {
    transversality(&code(ctx, "cube")?, "cube", 3, false, Basis::Derived)
}

pub(super) fn single_qubit_spectrum(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let code = code(ctx, "octahedral-sphere:1")?;
    let q = 5;
    let top: Vec<usize> = code
        .colex
        .cells_at(q)
        .iter()
        .copied()
        .filter(|&c| code.colex.cell(c).rank == 2)
        .collect();
    let quarter = Cyclotomic::inv_pow2(2);
    let two = Cyclotomic::from_int(2);
    let mut out = Vec::new();
    for (c, name) in [(1, "π/4"), (2, "π/2"), (4, "π")] {
        let s = excitation_spectrum(&code, &single_qubit_phase(code.n(), q, c), None)?;
        let (l0, l1) = (s.amplitude_of_cells(&[]), s.amplitude_of_cells(&top));
        let w = Cyclotomic::omega_pow(c);
        // cos θ = (w + w̄)/2 and i sin θ = (w − w̄)/2
        let cos2 = w + w.conj();
        out.push(Expectation::equal(
            format!("θ={name}: |λ_0|² = cos²(θ/2)"),
            Basis::Reference,
            Value::ring((two + cos2) * quarter),
            Value::ring(l0.norm_sqr()),
        ));
        out.push(Expectation::equal(
            format!("θ={name}: |λ_1|² = sin²(θ/2)"),
            Basis::Reference,
            Value::ring((two - cos2) * quarter),
            Value::ring(l1.norm_sqr()),
        ));
        out.push(Expectation::equal(
            format!("θ={name}: λ_1 conj(λ_0) = cos(θ/2) · i sin(θ/2)"),
            Basis::Reference,
            Value::ring((w - w.conj()) * quarter),
            Value::ring(l1 * l0.conj()),
        ));
        out.push(Expectation::equal(
            format!("θ={name}: no other pattern"),
            Basis::Reference,
            Value::ring(Cyclotomic::one()),
            Value::ring(l0.norm_sqr() + l1.norm_sqr()),
        ));
        out.push(parity(&s, 3, &format!("θ={name}")));
    }
    Ok(out)
}

fn parity(s: &ExcitationState, palette: usize, what: &str) -> Expectation {
    let bad = s
        .amplitudes
        .keys()
        .find(|p| {
            let counts = s.color_counts(p, palette);
            counts.iter().any(|c| c % 2 != counts[0] % 2)
        })
        .map(|p| p.to_bit_string());
    Expectation::holds(format!("{what}: every pattern obeys color parity"), Basis::Reference, bad.is_none())
        .blame(bad.unwrap_or_default())
}

fn max_deviation(code: &ColorCode, theta: &PhasePolynomial) -> Result<f64> {
    let exact = excitation_spectrum(code, theta, None)?;
    let dense = dense_excitation_amplitudes(code, theta)?;
    let keys: BTreeSet<_> = exact.amplitudes.keys().chain(dense.keys()).cloned().collect();
    Ok(keys
        .iter()
        .map(|k| {
            let a = exact.amplitude(k).to_complex();
            let b = dense.get(k).copied().unwrap_or_default();
            (a - b).norm()
        })
        .fold(0.0, f64::max))
}

pub(super) fn spectrum_oracle(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let mut rng = StdRng::seed_from_u64(ctx.seed);
    let mut out = Vec::new();
    for (spec, color) in [("cube", Color::C), ("16-cell", Color::D)] {
        let code = code(ctx, spec)?;
        let n = code.n();
        let level = code.colex.dim as u32;
        let region = single_cell_region(&code, color)?;
        let mut cases = vec![
            ("single qubit R3".to_string(), single_qubit_phase(n, 0, 1)),
            (format!("R{level} on one {color} cell"), transversal_phase_poly(&code.colex, level, Some(&region.v))?),
            (format!("R{level} everywhere"), transversal_phase_poly(&code.colex, level, None)?),
        ];
        for i in 0..3 {
            let mut theta = PhasePolynomial::zero(n);
            for q in 0..n {
                if rng.gen_bool(0.5) {
                    theta.add_term(&[q as u32], rng.gen_range(1..8));
                }
            }
            cases.push((format!("random linear phase {i}"), theta));
        }
        for (name, theta) in cases {
            out.push(Expectation::within(
                format!("{spec}, {name}: max |λ_exact − λ_dense|"),
                Basis::Derived,
                0.0,
                max_deviation(&code, &theta)?,
                TOL,
            ));
        }
    }
    Ok(out)
}

pub(super) fn cluster_boundary(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let mut out = Vec::new();
    for r in 0..=2 {
        let spec = format!("octahedral-sphere:{r}");
        let code = code(ctx, &spec)?;
        let region = single_cell_region(&code, Color::C)?;
        let bw = boundary_wavefunction(&code, &region, 2)?;
        let closed = closed_form_state_2d(&code.colex, &bw.boundary);
        out.push(Expectation::equal(
            format!("{spec}: overlap with the product of exp(iσπ/4 XX) is 1"),
            Basis::Derived,
            Value::ring(Cyclotomic::one()),
            Value::ring(closed.fidelity(&bw.modes)),
        ));
        out.push(parity(&bw.state, 3, &spec));
        for frame in [ClusterFrame::PostHadamard, ClusterFrame::PreHadamard] {
            let rep = verify_cluster_state_2d(&bw.state, &bw.boundary, frame)?;
            out.push(Expectation::equal(
                format!("{spec} {frame:?}: number of cluster stabilizers"),
                Basis::Reference,
                Value::int(bw.boundary.len()),
                Value::int(rep.stabilizers.len()),
            ));
            out.push(
                Expectation::holds(
                    format!("{spec} {frame:?}: every cluster stabilizer is +1"),
                    Basis::Reference,
                    rep.all_stabilizers_plus_one,
                )
                .blame(format!("stabilizers {:?}", rep.failing_stabilizers())),
            );
            out.push(Expectation::holds(
                format!("{spec} {frame:?}: both symmetries are +1"),
                Basis::Reference,
                rep.symmetries_plus_one,
            ));
        }
    }
    Ok(out)
}

pub(super) fn spt_boundary(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let code = code(ctx, "16-cell")?;
    let region = single_cell_region(&code, Color::D)?;
    let bw = boundary_wavefunction(&code, &region, 3)?;
    let rep = verify_spt_state_3d(&bw.state, &bw.boundary)?;
    let mut out = Vec::new();
    for (j, v) in rep.q_expectations.iter().enumerate() {
        out.push(Expectation::equal(
            format!("Q_{j} on cell {}", rep.cells[j]),
            Basis::Reference,
            Value::ring(Cyclotomic::one()),
            Value::ring(*v),
        ));
    }
    for (c, v) in &rep.symmetries {
        out.push(Expectation::equal(
            format!("S_{c}"),
            Basis::Reference,
            Value::ring(Cyclotomic::one()),
            Value::ring(*v),
        ));
    }
    for (c, ok) in &rep.product_identities {
        out.push(Expectation::holds(format!("∏_(j∈{c}) Q_j = S_{c}"), Basis::Reference, *ok));
    }
    let theta = transversal_phase_poly(&code.colex, 3, Some(&region.v))?;
    out.push(Expectation::within(
        "dense statevector agrees with the exact boundary state",
        Basis::Derived,
        0.0,
        max_deviation(&code, &theta)?,
        TOL,
    ));
    out.push(parity(&bw.state, 4, "16-cell"));
    Ok(out)
}

pub(super) fn flux_crossing(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let code = code(ctx, "octahedral-sphere:1")?;
    let colex = &code.colex;
    let region = single_cell_region(&code, Color::C)?;
    let ab = ColorSet::parse("AB")?;
    let mut out = Vec::new();
    let (mut crossing, mut outside) = (0, 0);
    for e in colex.cells_of_rank(1).filter(|&e| colex.cell(e).colors == ab) {
        let support = colex.support(e);
        let inside: Vec<usize> = support.iter_ones().filter(|&q| region.v.get(q)).collect();
        let w = flux_crossing_witness(&code, &region, &Pauli::x_on(support))?;
        if inside.len() == 1 {
            crossing += 1;
            let q = inside[0];
            let z = w.attached_z.as_ref().map(|p| p.z.iter_ones().collect::<Vec<_>>());
            let mut colors: Vec<Color> = w.charges.iter().map(|&c| colex.top_color(c)).collect();
            colors.sort();
            let ok = z.as_deref() == Some(&[q][..])
                && colors == [Color::A, Color::B, Color::C]
                && w.charges.contains(&region.cells[0]);
            out.push(
                Expectation::holds(
                    format!("edge {e}: crossing attaches Z on qubit {q} and charges e_A, e_B, e_C"),
                    Basis::Reference,
                    ok,
                )
                .blame(format!("charges {:?}", w.charges)),
            );
        } else if inside.is_empty() {
            outside += 1;
            out.push(Expectation::holds(
                format!("edge {e}: string away from the region picks up nothing"),
                Basis::Trivial,
                w.is_identity,
            ));
        }
    }
    out.push(Expectation::holds("some edge crosses the boundary", Basis::Trivial, crossing > 0));
    out.push(Expectation::holds("some edge avoids the region", Basis::Trivial, outside > 0));
    Ok(out)
}
