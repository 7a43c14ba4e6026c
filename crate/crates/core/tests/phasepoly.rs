use colorlab::braid::commutator_identity;
use colorlab::code::build_color_code;
use colorlab::colex::{build_16cell_colex, build_bcc_torus, build_hex_torus, build_octahedral_sphere};
use colorlab::excite::{cocycle_coboundary, evaluate_cocycle, CocycleType, Element};
use colorlab::phasepoly::{
    compare_diagonals, preserves_codespace, preserves_codespace_enumerated, transversal_phase_poly, MixedOperator,
    PhasePolynomial,
};
use colorlab::ring::Phase8;
use colorlab::{BinVec, Pauli};
use proptest::prelude::*;

fn types() -> Vec<CocycleType> {
    let mut t: Vec<CocycleType> = (0..3).map(|i| CocycleType::I { i }).collect();
    for i in 0..3 {
        for j in (0..3).filter(|&j| j != i) {
            t.push(CocycleType::II { i, j });
        }
    }
    for (i, j, l) in [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)] {
        t.push(CocycleType::III { i, j, l });
    }
    t
}

fn element(bits: u32) -> Element {
    [(bits & 1) as u8, (bits >> 1 & 1) as u8, (bits >> 2 & 1) as u8]
}

#[test]
fn every_cocycle_is_closed() {
    for t in types() {
        for bits in 0..1u32 << 12 {
            let [a, b, c, d] = [0, 3, 6, 9].map(|s| element(bits >> s));
            assert_eq!(cocycle_coboundary(t, a, b, c, d).unwrap(), Phase8::ONE, "{t:?}");
        }
    }
}

#[test]
fn cocycle_values() {
    let one = [1, 1, 1];
    assert_eq!(evaluate_cocycle(CocycleType::III { i: 0, j: 1, l: 2 }, one, one, one).unwrap(), Phase8::new(4));
    assert_eq!(evaluate_cocycle(CocycleType::I { i: 0 }, one, one, one).unwrap(), Phase8::new(4));
    for t in types() {
        for bits in 0..1u32 << 6 {
            let (x, y) = (element(bits), element(bits >> 3));
            for args in [[[0; 3], x, y], [x, [0; 3], y], [x, y, [0; 3]]] {
                assert_eq!(evaluate_cocycle(t, args[0], args[1], args[2]).unwrap(), Phase8::ONE);
            }
        }
    }
    assert!(evaluate_cocycle(CocycleType::II { i: 1, j: 1 }, one, one, one).is_err());
    assert!(evaluate_cocycle(CocycleType::I { i: 3 }, one, one, one).is_err());
}

#[test]
fn transversality_by_lattice() {
    for r in 0..3 {
        let code = build_color_code(build_octahedral_sphere(r).unwrap()).unwrap();
        let theta = transversal_phase_poly(&code.colex, 2, None).unwrap();
        assert!(preserves_codespace(&code, &theta));
    }
    let hex = build_color_code(build_hex_torus(2, 2).unwrap()).unwrap();
    assert!(preserves_codespace(&hex, &transversal_phase_poly(&hex.colex, 2, None).unwrap()));
    for colex in [build_16cell_colex().unwrap(), build_bcc_torus(2, 2, 2).unwrap()] {
        let code = build_color_code(colex).unwrap();
        assert!(preserves_codespace(&code, &transversal_phase_poly(&code.colex, 3, None).unwrap()));
    }
    let cube = build_color_code(build_octahedral_sphere(0).unwrap()).unwrap();
    assert!(!preserves_codespace(&cube, &transversal_phase_poly(&cube.colex, 3, None).unwrap()));
}

#[test]
fn level_outside_range_is_rejected() {
    let colex = build_16cell_colex().unwrap();
    assert!(transversal_phase_poly(&colex, 1, None).is_err());
    assert!(transversal_phase_poly(&colex, 4, None).is_err());
}

#[test]
fn commutator_identity_on_every_bcc_plaquette() {
    let code = build_color_code(build_bcc_torus(2, 2, 2).unwrap()).unwrap();
    let plaquettes: Vec<usize> = code.colex.cells_of_rank(2).collect();
    assert_eq!(plaquettes.len(), 112);
    for p in plaquettes {
        let id = commutator_identity(&code, &code.colex.support(p)).unwrap();
        assert!(id.exactly_equal, "plaquette {p}");
    }
}

fn poly(n: usize, terms: &[(u32, u32, u32, i64)]) -> PhasePolynomial {
    let mut theta = PhasePolynomial::zero(n);
    for &(a, b, c, k) in terms {
        let mut vars = vec![a % n as u32, b % n as u32, c % n as u32];
        vars.sort_unstable();
        vars.dedup();
        theta.add_term(&vars, k);
    }
    theta
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn symbolic_and_enumerated_preservation_agree(terms in proptest::collection::vec((0u32..96, 0u32..96, 0u32..96, 0i64..8), 0..6), which in 0usize..3) {
        let colex = match which {
            0 => build_octahedral_sphere(1).unwrap(),
            1 => build_16cell_colex().unwrap(),
            _ => build_hex_torus(2, 2).unwrap(),
        };
        let code = build_color_code(colex).unwrap();
        let theta = poly(code.n(), &terms);
        prop_assert_eq!(preserves_codespace(&code, &theta), preserves_codespace_enumerated(&code, &theta).unwrap());
    }

    #[test]
    fn commutator_with_x_lowers_the_level(terms in proptest::collection::vec((0u32..8, 0u32..8, 0u32..8, 0i64..8), 1..6), x in 1u32..256) {
        let theta = poly(8, &terms);
        let p = Pauli::x_on(BinVec::from_indices(8, (0..8).filter(|q| x >> q & 1 == 1)));
        let k = MixedOperator::diagonal(theta.clone()).commutator(&MixedOperator::from_pauli(&p)).unwrap();
        prop_assert!(k.is_diagonal());
        prop_assert!(k.theta.hierarchy_level() < theta.hierarchy_level().max(1));
    }

    #[test]
    fn shifted_polynomial_matches_pointwise(terms in proptest::collection::vec((0u32..8, 0u32..8, 0u32..8, 0i64..8), 0..6), x in 0u32..256, v in 0u32..256) {
        let theta = poly(8, &terms);
        let bits = |m: u32| BinVec::from_indices(8, (0..8).filter(|q| m >> q & 1 == 1));
        prop_assert_eq!(theta.shift(&bits(x)).eval(&bits(v)), theta.eval(&bits(x ^ v)));
        let cmp = compare_diagonals(&theta, &theta.add(&PhasePolynomial::constant(8, 3)));
        prop_assert!(cmp.equal_up_to_constant);
    }
}
