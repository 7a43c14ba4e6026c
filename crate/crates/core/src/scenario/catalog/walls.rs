use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::anyons::{
    automorphism_from_gate, color_code_anyon_model, condensable_set_of_wall, enumerate_transparent_walls,
    generated_subgroup, is_abelian, reference_gate_actions, reference_walls, toric_code_model, toric_isomorphism,
    two_toric_codes_model, AnyonModel, Label, TransversalGate, Wall,
};
use crate::code::build_color_code;
use crate::error::Result;
use crate::scenario::{Basis, Expectation, RunContext, Value};

fn sorted_actions(v: &[String]) -> Value {
    let mut v = v.to_vec();
    v.sort();
    Value::List {
        items: v.into_iter().map(Value::text).collect(),
    }
}

/// Checks wall conditions against the folded Lagrangian criterion for every
/// invertible map; returns (number of invertible maps, mismatches).
fn folding_equivalence(model: &AnyonModel) -> (usize, Vec<Wall>) {
    let m = model.rank();
    let size = 1u64 << (m * m);
    let results: Vec<(bool, Option<Wall>)> = (0..size)
        .into_par_iter()
        .filter_map(|code| {
            let images: Vec<Label> = (0..m).map(|i| (code >> (i * m) & ((1 << m) - 1)) as Label).collect();
            let w = Wall { images };
            if !w.is_invertible() {
                return None;
            }
            let agree = w.preserves(model, model) == condensable_set_of_wall(&w, model).is_lagrangian();
            Some((true, (!agree).then_some(w)))
        })
        .collect();
    let mismatches = results.iter().filter_map(|(_, w)| w.clone()).collect();
    (results.len(), mismatches)
}

pub(super) fn census(_: &RunContext) -> Result<Vec<Expectation>> {
    let model = color_code_anyon_model(2)?;
    let walls = enumerate_transparent_walls(&model);
    let toric = enumerate_transparent_walls(&toric_code_model());
    let refs: Vec<Wall> = reference_walls()?.into_iter().map(|(_, w)| w).collect();
    let generated = generated_subgroup(&refs, model.rank());
    let s3 = generated_subgroup(&refs[..2], model.rank());
    let enumerated: BTreeSet<Wall> = walls.iter().cloned().collect();
    let (candidates, mismatches) = folding_equivalence(&model);
    let mut out = vec![
        Expectation::equal("color code transparent walls", Basis::Reference, Value::int(72), Value::int(walls.len())),
        Expectation::equal("toric code transparent walls", Basis::Reference, Value::int(2), Value::int(toric.len())),
        Expectation::equal("order of <W1..W5>", Basis::Reference, Value::int(72), Value::int(generated.len())),
        Expectation::holds("<W1..W5> is the enumerated set", Basis::Reference, generated == enumerated),
        Expectation::equal("order of <W1,W2>", Basis::Reference, Value::int(6), Value::int(s3.len())),
        Expectation::holds("<W1,W2> is non-abelian", Basis::Reference, !is_abelian(&s3)),
        Expectation::equal("invertible candidates", Basis::Trivial, Value::int(20160), Value::int(candidates)),
    ];
    out.push(
        Expectation::equal(
            "wall conditions agree with the folded Lagrangian test",
            Basis::Reference,
            Value::int(0),
            Value::int(mismatches.len()),
        )
        .blame(mismatches.first().map(|w| w.to_string()).unwrap_or_default()),
    );
    Ok(out)
}

pub(super) fn gate_automorphisms(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let code = build_color_code(ctx.lattices.build("hex-torus:2,2")?)?;
    let walls: BTreeSet<Wall> = enumerate_transparent_walls(&color_code_anyon_model(2)?).into_iter().collect();
    let mut out = Vec::new();
    for (gate, expected) in reference_gate_actions()? {
        let a = automorphism_from_gate(&code, &TransversalGate::by_name(&gate)?)?;
        out.push(Expectation::equal(
            format!("{gate}: action list"),
            Basis::Reference,
            sorted_actions(&expected),
            sorted_actions(&a.actions),
        ));
        out.push(Expectation::holds(
            format!("{gate}: wall is transparent"),
            Basis::Reference,
            walls.contains(&a.wall),
        ));
    }
    let refs = reference_walls()?;
    for (gate, name) in [("H", "W2"), ("T", "W1")] {
        let a = automorphism_from_gate(&code, &TransversalGate::by_name(gate)?)?;
        let w = &refs.iter().find(|(n, _)| n == name).expect("reference wall").1;
        out.push(Expectation::holds(format!("{gate} realizes {name}"), Basis::Reference, a.wall == *w));
    }
    Ok(out)
}

pub(super) fn toric_equivalence(_: &RunContext) -> Result<Vec<Expectation>> {
    let color = color_code_anyon_model(2)?;
    let two = two_toric_codes_model();
    let iso = toric_isomorphism();
    let mut bad = None;
    'outer: for a in 0..color.order() as Label {
        for b in 0..color.order() as Label {
            if color.braid(a, b) != two.braid(iso.apply(a), iso.apply(b)) {
                bad = Some(format!("{} {}", color.label_name(a), color.label_name(b)));
                break 'outer;
            }
        }
    }
    Ok(vec![
        Expectation::holds("map is invertible", Basis::Trivial, iso.is_invertible()),
        Expectation::holds("braiding and spins are preserved", Basis::Reference, iso.preserves(&color, &two)),
        Expectation::holds("every braiding phase is transported", Basis::Derived, bad.is_none())
            .blame(bad.unwrap_or_default()),
    ])
}
