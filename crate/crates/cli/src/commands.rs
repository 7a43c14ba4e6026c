use std::path::Path;

use clap::ValueEnum;
use colorlab::anyons::{color_code_anyon_model, enumerate_transparent_walls, toric_code_model, two_toric_codes_model};
use colorlab::braid::{braid_three_loop, braid_two, sixteen_cell_process, LoopProcess};
use colorlab::code::{build_color_code, ColorCode};
use colorlab::colex::{region_and_boundary, Color, Colex, Region};
use colorlab::excite::{boundary_wavefunction, verify_cluster_state_2d, verify_spt_state_3d, ClusterFrame};
use colorlab::phasepoly::{
    ground_expectation, preserves_codespace, preserves_codespace_enumerated, transversal_phase_poly, MixedOperator,
};
use colorlab::ring::Cyclotomic;
use colorlab::scenario::{Basis, Expectation, LatticeRegistry, LatticeSpec, Report, RunContext, ScenarioRegistry, Value};
use colorlab::{Error, Result};
use rayon::prelude::*;

const ENUMERATION_BITS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    ColorCode,
    Toric,
    TwoToric,
}

fn build(spec: &str) -> Result<Colex> {
    LatticeRegistry::with_defaults().build(spec)
}

fn write(path: &Path, body: &str) -> Result<()> {
    std::fs::write(path, body).map_err(|e| Error::Resource(format!("{}: {e}", path.display())))
}

/// `C:0,2` selects the first and third top cells of color C. Without a spec
/// the first top cell of the last color is used.
pub fn parse_region(colex: &Colex, spec: Option<&str>) -> Result<Region> {
    let (color, picks) = match spec {
        None => (Color(colex.dim as u8), vec![0]),
        Some(s) => {
            let (c, idx) = s
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("region {s:?}: expected COLOR:INDEX,...")))?;
            let mut chars = c.trim().chars();
            let color = match (chars.next(), chars.next()) {
                (Some(ch), None) => Color::parse(ch)?,
                _ => return Err(Error::Parse(format!("region color {c:?}"))),
            };
            let picks = idx
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("region index {t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            (color, picks)
        }
    };
    let tops: Vec<usize> = colex.top_cells().into_iter().filter(|&c| colex.top_color(c) == color).collect();
    let cells = picks
        .iter()
        .map(|&i| {
            tops.get(i)
                .copied()
                .ok_or_else(|| Error::InvalidInput(format!("color {} has {} top cells", color.letter(), tops.len())))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(region_and_boundary(colex, color, &cells)?.0)
}

fn describe(region: &Region, colex: &Colex) -> String {
    let labels: Vec<&str> = region.cells.iter().map(|&c| colex.cell(c).label.as_str()).collect();
    format!("{} cells [{}]", region.color.letter(), labels.join("; "))
}

pub fn build_lattice(spec: &str, export: Option<&Path>) -> Result<Report> {
    let colex = build(spec)?;
    let v = colex.validity();
    if let Some(p) = export {
        write(p, &colex.to_text())?;
    }
    let mut out = vec![
        Expectation::holds("every vertex has one edge and one top cell per color", Basis::Reference, v.valence_ok),
        Expectation::holds("cells carry the complementary colors", Basis::Reference, v.coloring_ok),
        Expectation::holds("vertices are bipartite", Basis::Reference, v.bipartite_ok),
        Expectation::equal(
            "Euler characteristic",
            Basis::Trivial,
            Value::int(colex.manifold.euler_characteristic()),
            Value::int(v.euler_characteristic),
        ),
        Expectation::observed("qubits", Value::int(colex.n_qubits)),
    ];
    for rank in 1..=colex.dim as u8 {
        out.push(Expectation::observed(format!("cells of rank {rank}"), Value::int(colex.count_rank(rank))));
    }
    Ok(Report::new("build-lattice", &[spec], 0, out))
}

pub fn check_code(spec: &str, export: Option<&Path>) -> Result<Report> {
    let code = build_color_code(build(spec)?)?;
    if let Some(p) = export {
        write(p, &code.to_css_text())?;
    }
    let bad = code.hx.rows().iter().enumerate().find_map(|(i, x)| {
        code.hz.rows().iter().position(|z| x.dot(z)).map(|j| format!("x row {i}, z row {j}"))
    });
    let (n, k) = code.parameters();
    let out = vec![
        Expectation::holds("every X/Z check pair commutes", Basis::Reference, bad.is_none())
            .blame(bad.unwrap_or_default()),
        Expectation::observed("n", Value::int(n)),
        Expectation::observed("k", Value::int(k)),
        Expectation::observed("independent X checks", Value::int(code.codespace_basis().r)),
        Expectation::observed("X checks", Value::int(code.hx.num_rows())),
        Expectation::observed("Z checks", Value::int(code.hz.num_rows())),
    ];
    Ok(Report::new("check-code", &[spec], 0, out))
}

pub fn transversal_check(spec: &str, level: u32, region: Option<&str>) -> Result<Report> {
    let code = build_color_code(build(spec)?)?;
    let region = region.map(|r| parse_region(&code.colex, Some(r))).transpose()?;
    let theta = transversal_phase_poly(&code.colex, level, region.as_ref().map(|r| &r.v))?;
    let symbolic = preserves_codespace(&code, &theta);
    let what = region.as_ref().map_or("everywhere".to_string(), |r| describe(r, &code.colex));
    let mut out = vec![Expectation::holds(
        format!("R{level} pattern ({what}) preserves the code space"),
        Basis::Derived,
        symbolic,
    )];
    let b = code.codespace_basis();
    if b.r + b.k() <= ENUMERATION_BITS {
        out.push(Expectation::equal(
            "enumeration agrees",
            Basis::Derived,
            Value::bool(symbolic),
            Value::bool(preserves_codespace_enumerated(&code, &theta)?),
        ));
    }
    if b.k() == 0 {
        let g = ground_expectation(&code, &MixedOperator::diagonal(theta))?;
        out.push(Expectation::observed("⟨gs|D|gs⟩", Value::ring(g)));
    }
    Ok(Report::new("transversal-check", &[spec], 0, out))
}

fn boundary_of(code: &ColorCode, region: Option<&str>) -> Result<Region> {
    parse_region(&code.colex, region)
}

pub fn excite(spec: &str, region: Option<&str>, level: Option<u32>) -> Result<Report> {
    let code = build_color_code(build(spec)?)?;
    let region = boundary_of(&code, region)?;
    let bw = boundary_wavefunction(&code, &region, level.unwrap_or(code.colex.dim as u32))?;
    let state = &bw.state;
    let on_boundary = state.excited_modes().iter().all(|&i| bw.boundary.cells.contains(&state.modes[i].cell));
    let amplitudes: Vec<Value> = state
        .amplitudes
        .iter()
        .map(|(p, a)| {
            let labels: Vec<String> = p.iter_ones().map(|i| state.modes[i].label.clone()).collect();
            let pattern = if labels.is_empty() { "vacuum".to_string() } else { labels.join(" ") };
            Value::List {
                items: vec![Value::text(pattern), Value::ring(*a)],
            }
        })
        .collect();
    let out = vec![
        Expectation::observed("region", Value::text(describe(&region, &code.colex))),
        Expectation::observed("boundary modes", Value::int(bw.boundary.len())),
        Expectation::holds("excitations lie on the region boundary", Basis::Reference, on_boundary),
        Expectation::holds("color parity", Basis::Reference, state.parity_ok(code.colex.palette())),
        Expectation::equal(
            "Σ|λ_p|²",
            Basis::Trivial,
            Value::ring(Cyclotomic::one()),
            Value::ring(state.total_weight()),
        ),
        Expectation::observed("amplitudes", Value::List { items: amplitudes }),
    ];
    Ok(Report::new("excite", &[spec], 0, out))
}

pub fn verify_spt(spec: &str, region: Option<&str>) -> Result<Report> {
    let code = build_color_code(build(spec)?)?;
    let region = boundary_of(&code, region)?;
    let dim = code.colex.dim;
    let bw = boundary_wavefunction(&code, &region, dim as u32)?;
    let mut out = vec![Expectation::observed("region", Value::text(describe(&region, &code.colex)))];
    if dim == 2 {
        for frame in [ClusterFrame::PostHadamard, ClusterFrame::PreHadamard] {
            let rep = verify_cluster_state_2d(&bw.state, &bw.boundary, frame)?;
            out.push(
                Expectation::holds(format!("{frame:?}: every cluster stabilizer is +1"), Basis::Reference, rep.all_stabilizers_plus_one)
                    .blame(format!("stabilizers {:?}", rep.failing_stabilizers())),
            );
            out.push(Expectation::holds(format!("{frame:?}: both symmetries are +1"), Basis::Reference, rep.symmetries_plus_one));
        }
    } else {
        let rep = verify_spt_state_3d(&bw.state, &bw.boundary)?;
        let bad_q: Vec<usize> = (0..rep.q_expectations.len()).filter(|&j| rep.q_expectations[j] != Cyclotomic::one()).collect();
        out.push(
            Expectation::holds("every Q_j is +1", Basis::Reference, bad_q.is_empty()).blame(format!("vertices {bad_q:?}")),
        );
        for (c, v) in &rep.symmetries {
            out.push(Expectation::equal(
                format!("S_{}", c.letter()),
                Basis::Reference,
                Value::ring(Cyclotomic::one()),
                Value::ring(*v),
            ));
        }
        for (c, ok) in &rep.product_identities {
            out.push(Expectation::holds(format!("∏ Q_j over {} is S_{}", c.letter(), c.letter()), Basis::Reference, *ok));
        }
    }
    Ok(Report::new("verify-spt", &[spec], 0, out))
}

pub fn enumerate_walls(model: Model) -> Result<Report> {
    let (m, expected) = match model {
        Model::ColorCode => (color_code_anyon_model(2)?, 72),
        Model::Toric => (toric_code_model(), 2),
        Model::TwoToric => (two_toric_codes_model(), 72),
    };
    let walls = enumerate_transparent_walls(&m);
    let listed = walls
        .iter()
        .map(|w| Value::text(w.actions(&m).join(" ")))
        .collect();
    let out = vec![
        Expectation::equal("transparent walls", Basis::Reference, Value::int(expected), Value::int(walls.len())),
        Expectation::observed("walls", Value::List { items: listed }),
    ];
    Ok(Report::new("enumerate-walls", &[], 0, out))
}

fn process(code: &ColorCode, name: &str) -> Result<LoopProcess> {
    let mut parts = name.split('*');
    let first = sixteen_cell_process(code, parts.next().unwrap_or_default())?;
    parts.try_fold(first, |acc, p| acc.times(&sixteen_cell_process(code, p)?))
}

pub fn braid(spec: &str, names: &[String]) -> Result<Report> {
    if spec.parse::<LatticeSpec>()?.name != "16-cell" {
        return Err(Error::InvalidInput(format!("named processes live on the 16-cell, not {spec}")));
    }
    let code = build_color_code(build(spec)?)?;
    let ps = names.iter().map(|n| process(&code, n)).collect::<Result<Vec<_>>>()?;
    let r = match ps.as_slice() {
        [a, b] => braid_two(&code, a, b)?,
        [a, b, c] => braid_three_loop(&code, a, b, c)?,
        _ => return Err(Error::InvalidInput("braid takes two or three processes".into())),
    };
    let out = vec![
        Expectation::observed(format!("θ({})", names.join(",")), Value::phase(r.phase)),
        Expectation::observed("sign", r.sign().map_or(Value::text("not ±1"), Value::int)),
    ];
    Ok(Report::new("braid", &[spec], 0, out))
}

pub fn run(names: &[String], tag: Option<&str>, all: bool, seed: u64) -> Result<Vec<Report>> {
    let registry = ScenarioRegistry::with_defaults();
    let selected: Vec<String> = if all {
        registry.names().into_iter().map(String::from).collect()
    } else if let Some(t) = tag {
        registry.list(Some(t)).into_iter().map(|e| e.name).collect()
    } else if names.is_empty() {
        return Err(Error::InvalidInput("name a scenario, or pass --tag or --all".into()));
    } else {
        names.to_vec()
    };
    for n in &selected {
        if registry.get(n).is_none() {
            return Err(Error::Unknown(format!("scenario {n}")));
        }
    }
    let lattices = LatticeRegistry::with_defaults();
    let ctx = RunContext { lattices: &lattices, seed };
    selected.par_iter().map(|n| registry.run(n, &ctx)).collect()
}

pub fn list(tag: Option<&str>, structured: bool) -> String {
    let entries = ScenarioRegistry::with_defaults().list(tag);
    if structured {
        return serde_json::to_string_pretty(&entries).expect("catalog serializes") + "\n";
    }
    let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
    entries
        .iter()
        .map(|e| format!("{:width$}  {} [{}]\n", e.name, e.description, e.tags.join(", ")))
        .collect()
}
