use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::braid::{
    admissible_deformations, braid_three_loop, braid_two, commutator_identity, dense_braid_phase, sixteen_cell_process, symplectic_phase,
    wall_braiding_triviality, BraidResult, LoopProcess,
};
use crate::code::{build_color_code, ColorCode};
use crate::error::Result;
use crate::excite::{cocycle_coboundary, CocycleType, Element};
use crate::pauli::Pauli;
use crate::ring::Phase8;
use crate::scenario::{Basis, Expectation, RunContext, Value};

const TOL: f64 = 1e-10;

pub(super) const TWO_BODY: &[(&str, &str, i8)] = &[
    ("e_A", "e_B", 1),
    ("e_A", "m_BC", -1),
    ("e_A", "m_AB", 1),
    ("m_AB", "s_BC@volume", 1),
];

pub(super) const THREE_LOOP: &[([&str; 3], i8, Basis)] = &[
    (["m_AB", "s_BC", "m_CA"], -1, Basis::Reference),
    (["m_BC", "s_CA", "m_AB"], -1, Basis::Reference),
    (["m_CA", "s_AB", "m_BC"], -1, Basis::Reference),
    (["s_AB", "m_BC", "m_CA"], -1, Basis::Reference),
    (["s_BC", "m_CA", "m_AB"], -1, Basis::Reference),
    (["s_CA", "m_AB", "m_BC"], -1, Basis::Reference),
    (["m_AB", "m_AB", "m_AB"], 1, Basis::Reference),
    (["m_AB", "m_AB", "m_BC"], 1, Basis::Reference),
    (["m_AB", "m_BC", "m_AB"], 1, Basis::Reference),
    (["m_AB", "m_BC", "m_CA"], 1, Basis::Derived),
    (["m_AB", "m_BC", "s_CA"], 1, Basis::Derived),
    (["s_AB", "s_BC", "m_CA"], 1, Basis::Derived),
];

fn sixteen_cell(ctx: &RunContext) -> Result<ColorCode> {
    build_color_code(ctx.lattices.build("16-cell")?)
}

fn processes(code: &ColorCode, names: &[&str]) -> Result<Vec<LoopProcess>> {
    names.iter().map(|n| sixteen_cell_process(code, n)).collect()
}

fn run(code: &ColorCode, ps: &[LoopProcess]) -> Result<BraidResult> {
    match ps {
        [a, b] => braid_two(code, a, b),
        [a, b, c] => braid_three_loop(code, a, b, c),
        _ => unreachable!("two or three participants"),
    }
}

fn sign_value(s: i8) -> Value {
    Value::sign(s)
}

pub(super) fn two_body(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let code = sixteen_cell(ctx)?;
    let mut out = Vec::new();
    for &(a, b, s) in TWO_BODY {
        let r = run(&code, &processes(&code, &[a, b])?)?;
        out.push(Expectation::equal(format!("θ({a},{b})"), Basis::Reference, sign_value(s), Value::phase(r.phase)));
    }
    Ok(out)
}

pub(super) fn three_loop(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let code = sixteen_cell(ctx)?;
    let mut out = Vec::new();
    for (names, s, basis) in THREE_LOOP {
        let ps = processes(&code, names)?;
        let r = run(&code, &ps)?;
        let label = format!("θ({})", names.join(","));
        out.push(Expectation::equal(label.clone(), *basis, sign_value(*s), Value::phase(r.phase)));
        let refs: Vec<&LoopProcess> = ps.iter().collect();
        let dense = dense_braid_phase(&code, &refs)?;
        out.push(Expectation::within(
            format!("{label}: dense deviation"),
            Basis::Derived,
            0.0,
            (dense - r.phase.to_complex()).norm(),
            TOL,
        ));
    }
    Ok(out)
}

pub(super) fn wall(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let code = sixteen_cell(ctx)?;
    let r = wall_braiding_triviality(&code)?;
    let mut out = vec![
        Expectation::equal("left side θ(e_A,m_BC)", Basis::Reference, sign_value(-1), sign_value(r.pair_before)),
        Expectation::equal("right side θ(e_A,m_BC s_BC)", Basis::Reference, sign_value(-1), sign_value(r.pair_after)),
        Expectation::equal(
            "pair (e_A|e_A), (m_BC|m_BC s_BC)",
            Basis::Reference,
            sign_value(1),
            sign_value(r.pair_total),
        ),
    ];
    for c in &r.composite_triples {
        out.push(Expectation::equal(
            format!("composite θ({})", c.participants.join(",")),
            Basis::Reference,
            sign_value(1),
            sign_value(c.sign),
        ));
    }
    let minus: Vec<String> = r
        .patterns
        .iter()
        .filter(|c| c.sign < 0)
        .map(|c| c.participants.join(","))
        .collect();
    out.push(Expectation::equal(
        "number of −1 contributions",
        Basis::Reference,
        Value::int(2),
        Value::int(minus.len()),
    ));
    out.push(Expectation::equal(
        "contributions multiply to the composite phase",
        Basis::Derived,
        sign_value(r.triple_direct),
        sign_value(r.pattern_product),
    ));
    out.push(Expectation::equal(
        "without s_BC the wall is detected",
        Basis::Derived,
        sign_value(-1),
        sign_value(r.triple_without_s_bc),
    ));
    out.push(Expectation::holds("wall braiding is trivial", Basis::Reference, r.is_trivial()));
    Ok(out)
}

pub(super) fn intersection_parity(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let code = sixteen_cell(ctx)?;
    let names = ["e_A", "e_B", "e_C", "m_AB", "m_BC", "m_CA"];
    let mut out = Vec::new();
    for (i, a) in names.iter().enumerate() {
        for b in &names[i + 1..] {
            let ps = processes(&code, &[a, b])?;
            let r = run(&code, &ps)?;
            let s = symplectic_phase(&ps[0], &ps[1]).expect("Pauli processes");
            out.push(Expectation::equal(
                format!("θ({a},{b}) = (−1)^overlap"),
                Basis::Reference,
                sign_value(s),
                Value::phase(r.phase),
            ));
        }
    }
    Ok(out)
}

/// A random product of the admissible stabilizer generators for `ps[slot]`.
pub(crate) fn random_deformation(code: &ColorCode, ps: &[&LoopProcess], slot: usize, rng: &mut StdRng) -> Pauli {
    let mut acc = Pauli::identity(code.n());
    for g in admissible_deformations(code, ps, slot) {
        if rng.gen_bool(0.5) {
            acc = acc.mul(&g).expect("lengths agree");
        }
    }
    acc
}

pub(super) fn deformation(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let code = sixteen_cell(ctx)?;
    let mut rng = StdRng::seed_from_u64(ctx.seed);
    let mut table: Vec<Vec<&str>> = TWO_BODY.iter().map(|(a, b, _)| vec![*a, *b]).collect();
    table.extend(THREE_LOOP.iter().map(|(n, _, _)| n.to_vec()));
    let mut out = Vec::new();
    for i in 0..10 {
        let names = &table[rng.gen_range(0..table.len())];
        let ps = processes(&code, names)?;
        let refs: Vec<&LoopProcess> = ps.iter().collect();
        let base = run(&code, &ps)?.phase;
        let slot = rng.gen_range(0..ps.len());
        let mut deformed = ps.clone();
        deformed[slot] = ps[slot].deformed(&random_deformation(&code, &refs, slot, &mut rng))?;
        let moved = run(&code, &deformed)?.phase;
        out.push(Expectation::equal(
            format!("config {i}: θ({}) after deforming {}", names.join(","), names[slot]),
            Basis::Reference,
            Value::phase(base),
            Value::phase(moved),
        ));
    }
    Ok(out)
}

pub(super) fn commutator(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let mut out = Vec::new();
    let code = sixteen_cell(ctx)?;
    for name in ["m_AB", "m_BC", "m_CA"] {
        let m = sixteen_cell_process(&code, name)?;
        let id = commutator_identity(&code, &m.op.x)?;
        out.push(Expectation::holds(
            format!("16-cell {name}: K(R3, X) is the R2 membrane up to a constant"),
            Basis::Reference,
            id.equal_up_to_constant,
        ));
    }
    let bcc = build_color_code(ctx.lattices.build("bcc-torus:2,2,2")?)?;
    let plaquettes: Vec<usize> = bcc.colex.cells_of_rank(2).collect();
    let mut bad = None;
    for &p in &plaquettes {
        if !commutator_identity(&bcc, &bcc.colex.support(p))?.equal_up_to_constant {
            bad = Some(p);
            break;
        }
    }
    out.push(
        Expectation::holds(
            format!("bcc-torus:2,2,2 all {} plaquettes: identity up to a constant", plaquettes.len()),
            Basis::Reference,
            bad.is_none(),
        )
        .blame(format!("plaquette {}", bad.unwrap_or_default())),
    );
    Ok(out)
}

pub(crate) fn cocycle_types() -> Vec<CocycleType> {
    let mut t: Vec<CocycleType> = (0..3).map(|i| CocycleType::I { i }).collect();
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                t.push(CocycleType::II { i, j });
            }
        }
    }
    for (i, j, l) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
        t.push(CocycleType::III { i, j, l });
    }
    t
}

fn element(bits: u32, shift: u32) -> Element {
    [(bits >> shift & 1) as u8, (bits >> (shift + 1) & 1) as u8, (bits >> (shift + 2) & 1) as u8]
}

pub(super) fn cocycles(_: &RunContext) -> Result<Vec<Expectation>> {
    let mut out = Vec::new();
    for t in cocycle_types() {
        let mut bad = None;
        for bits in 0..1u32 << 12 {
            let [a, b, c, d] = [0, 3, 6, 9].map(|s| element(bits, s));
            if cocycle_coboundary(t, a, b, c, d)? != Phase8::ONE {
                bad = Some((a, b, c, d));
                break;
            }
        }
        out.push(
            Expectation::holds(format!("{t:?}: δω = 1 on all 4096 inputs"), Basis::Reference, bad.is_none())
                .blame(format!("{bad:?}")),
        );
    }
    Ok(out)
}
