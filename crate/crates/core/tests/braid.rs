use colorlab::braid::{
    admissible_deformations, braid_three_loop, braid_two, dense_braid_phase, sixteen_cell_process, symplectic_phase,
    BraidResult, LoopProcess, ProcessKind, ProcessSpec,
};
use colorlab::code::{build_color_code, ColorCode};
use colorlab::colex::build_16cell_colex;
use colorlab::pauli::Pauli;
use colorlab::phasepoly::{single_qubit_phase, MixedOperator};
use colorlab::{BinVec, Error};
use proptest::prelude::*;

const TABLE: &[&[&str]] = &[
    &["e_A", "e_B"],
    &["e_A", "m_BC"],
    &["e_A", "m_AB"],
    &["m_AB", "s_BC@volume"],
    &["m_AB", "s_BC", "m_CA"],
    &["s_AB", "m_BC", "m_CA"],
    &["m_AB", "m_AB", "m_AB"],
    &["m_AB", "m_AB", "m_BC"],
    &["m_AB", "m_BC", "m_AB"],
    &["m_AB", "m_BC", "m_CA"],
    &["m_AB", "m_BC", "s_CA"],
    &["s_AB", "s_BC", "m_CA"],
];

fn code() -> ColorCode {
    build_color_code(build_16cell_colex().unwrap()).unwrap()
}

fn procs(code: &ColorCode, names: &[&str]) -> Vec<LoopProcess> {
    names.iter().map(|n| sixteen_cell_process(code, n).unwrap()).collect()
}

fn run(code: &ColorCode, ps: &[LoopProcess]) -> colorlab::Result<BraidResult> {
    match ps {
        [a, b] => braid_two(code, a, b),
        [a, b, c] => braid_three_loop(code, a, b, c),
        _ => unreachable!(),
    }
}

#[test]
fn every_fixture_locates_a_cell() {
    let code = code();
    for spec in ProcessSpec::all() {
        spec.locate(&code.colex).unwrap();
    }
}

#[test]
fn each_admissible_generator_preserves_each_entry() {
    let code = code();
    for names in TABLE {
        let ps = procs(&code, names);
        let base = run(&code, &ps).unwrap().phase;
        let refs: Vec<&LoopProcess> = ps.iter().collect();
        for slot in 0..ps.len() {
            let gens = admissible_deformations(&code, &refs, slot);
            assert!(!gens.is_empty());
            for g in gens {
                let mut moved = ps.clone();
                moved[slot] = ps[slot].deformed(&g).unwrap();
                assert_eq!(run(&code, &moved).unwrap().phase, base, "{names:?} slot {slot}");
            }
        }
    }
}

#[test]
fn dense_oracle_agrees_on_every_entry() {
    let code = code();
    for names in TABLE {
        let ps = procs(&code, names);
        let exact = run(&code, &ps).unwrap().phase.to_complex();
        let refs: Vec<&LoopProcess> = ps.iter().collect();
        let dense = dense_braid_phase(&code, &refs).unwrap();
        assert!((dense - exact).norm() < 1e-10, "{names:?}");
    }
}

#[test]
fn pauli_entries_follow_symplectic_count() {
    let code = code();
    for names in TABLE.iter().filter(|n| n.len() == 2) {
        let ps = procs(&code, names);
        if let Some(s) = symplectic_phase(&ps[0], &ps[1]) {
            assert_eq!(run(&code, &ps).unwrap().sign(), Some(s));
        }
    }
}

#[test]
fn non_scalar_commutator_is_rejected() {
    let code = code();
    let s = LoopProcess {
        label: "s".into(),
        kind: ProcessKind::Spt,
        op: MixedOperator::diagonal(single_qubit_phase(code.n(), 0, 2)),
    };
    let x = LoopProcess::flux("x", BinVec::from_indices(code.n(), [0]));
    assert!(matches!(braid_two(&code, &s, &x), Err(Error::Configuration(_))));
}

#[test]
fn unknown_process_is_reported() {
    let code = code();
    assert!(matches!(sixteen_cell_process(&code, "q_XY"), Err(Error::Unknown(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn products_of_admissible_generators_preserve_phase(entry in 0..TABLE.len(), slot in 0usize..3, pick in any::<u32>()) {
        let code = code();
        let names = TABLE[entry];
        let slot = slot % names.len();
        let ps = procs(&code, names);
        let base = run(&code, &ps).unwrap().phase;
        let refs: Vec<&LoopProcess> = ps.iter().collect();
        let mut g = Pauli::identity(code.n());
        for (i, h) in admissible_deformations(&code, &refs, slot).iter().enumerate() {
            if pick >> (i % 32) & 1 == 1 {
                g = g.mul(h).unwrap();
            }
        }
        let mut moved = ps.clone();
        moved[slot] = ps[slot].deformed(&g).unwrap();
        prop_assert_eq!(run(&code, &moved).unwrap().phase, base);
    }
}
