use colorlab::code::build_color_code;
use colorlab::colex::{build_16cell_colex, build_bcc_torus, build_hex_torus, build_octahedral_sphere};
use colorlab::f2::f2_rank_solve;
use colorlab::pauli::{symplectic_commute, Pauli};
use colorlab::{BinMat, BinVec};
use num_complex::Complex64;
use proptest::prelude::*;

fn naive_rank(mut m: Vec<Vec<bool>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c]) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] {
                let pivot = m[rank].clone();
                m[r].iter_mut().zip(pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}

fn matrix(rows: &[Vec<bool>]) -> BinMat {
    BinMat::from_rows(rows[0].len(), rows.iter().map(|r| BinVec::from_bools(r)).collect()).unwrap()
}

fn rows_strategy() -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1usize..12, 1usize..80).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r))
}

fn dense(p: &Pauli) -> Vec<Complex64> {
    let n = p.len();
    let dim = 1 << n;
    let i_pow = [Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0), Complex64::new(-1.0, 0.0), Complex64::new(0.0, -1.0)];
    // i^phase X^x Z^z acting on basis states
    let mut m = vec![Complex64::new(0.0, 0.0); dim * dim];
    for col in 0..dim {
        let mut sign = 1.0;
        for q in 0..n {
            if p.z.get(q) && col >> q & 1 == 1 {
                sign = -sign;
            }
        }
        let mut row = col;
        for q in 0..n {
            if p.x.get(q) {
                row ^= 1 << q;
            }
        }
        m[row * dim + col] = i_pow[p.phase as usize] * sign;
    }
    m
}

fn matmul(a: &[Complex64], b: &[Complex64], dim: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); dim * dim];
    for i in 0..dim {
        for k in 0..dim {
            for j in 0..dim {
                out[i * dim + j] += a[i * dim + k] * b[k * dim + j];
            }
        }
    }
    out
}

fn two_qubit_paulis() -> Vec<Pauli> {
    let mut out = Vec::new();
    for bits in 0..16u8 {
        for phase in 0..4 {
            let x = BinVec::from_bools(&[bits & 1 == 1, bits & 2 == 2]);
            let z = BinVec::from_bools(&[bits & 4 == 4, bits & 8 == 8]);
            out.push(Pauli::new(x, z, phase).unwrap());
        }
    }
    out
}

#[test]
fn pauli_product_is_associative_exhaustively() {
    let ps = two_qubit_paulis();
    let bare: Vec<&Pauli> = ps.iter().filter(|p| p.phase == 0).collect();
    for a in &bare {
        for b in &bare {
            for c in &ps {
                let left = a.mul(b).unwrap().mul(c).unwrap();
                let right = a.mul(&b.mul(c).unwrap()).unwrap();
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn commutation_matches_dense_matrices_exhaustively() {
    let ps: Vec<Pauli> = two_qubit_paulis().into_iter().filter(|p| p.phase == 0).collect();
    for a in &ps {
        for b in &ps {
            let (da, db) = (dense(a), dense(b));
            let commute = matmul(&da, &db, 4)
                .iter()
                .zip(matmul(&db, &da, 4))
                .all(|(u, v)| (u - v).norm() < 1e-12);
            assert_eq!(symplectic_commute(a, b).unwrap(), commute);
            let prod = dense(&a.mul(b).unwrap());
            assert!(prod.iter().zip(matmul(&da, &db, 4)).all(|(u, v)| (u - v).norm() < 1e-12));
        }
    }
}

#[test]
fn empty_matrix_is_rejected() {
    assert!(f2_rank_solve(&BinMat::from_rows(3, vec![]).unwrap(), None).is_err());
}

#[test]
fn color_codes_have_expected_parameters() {
    for (colex, n, k) in [
        (build_hex_torus(2, 2).unwrap(), 24, 4),
        (build_octahedral_sphere(1).unwrap(), 32, 0),
        (build_16cell_colex().unwrap(), 16, 0),
        (build_bcc_torus(2, 2, 2).unwrap(), 96, 9),
    ] {
        let code = build_color_code(colex).unwrap();
        assert_eq!(code.parameters(), (n, k));
    }
}

proptest! {
    #[test]
    fn rank_matches_naive_elimination(rows in rows_strategy()) {
        prop_assert_eq!(matrix(&rows).rank(), naive_rank(rows.clone()));
    }

    #[test]
    fn solutions_reproduce_the_target(rows in rows_strategy(), pick in any::<u16>()) {
        let a = matrix(&rows);
        let combo = BinVec::from_bools(&(0..rows.len()).map(|i| pick >> (i % 16) & 1 == 1).collect::<Vec<_>>());
        let b = a.combine_rows(&combo);
        let x = f2_rank_solve(&a, Some(&b)).unwrap().solution.expect("b lies in the row space");
        prop_assert_eq!(a.combine_rows(&x), b);
    }

    #[test]
    fn kernel_is_annihilated_and_complete(rows in rows_strategy()) {
        let a = matrix(&rows);
        let ker = a.kernel();
        prop_assert_eq!(ker.len() + a.rank(), a.num_cols());
        for v in &ker {
            prop_assert!(a.mul_vec(v).is_zero());
        }
        if !ker.is_empty() {
            prop_assert_eq!(BinMat::from_rows(a.num_cols(), ker).unwrap().rank(), a.num_cols() - a.rank());
        }
    }

    #[test]
    fn independent_rows_span_the_row_space(rows in rows_strategy()) {
        let a = matrix(&rows);
        let keep = a.independent_rows();
        prop_assert_eq!(keep.len(), a.rank());
    }

    #[test]
    fn syndromes_obey_color_parity(bits in proptest::collection::vec(any::<bool>(), 96), which in 0usize..3) {
        let colex = match which {
            0 => build_octahedral_sphere(1).unwrap(),
            1 => build_16cell_colex().unwrap(),
            _ => build_bcc_torus(2, 2, 2).unwrap(),
        };
        let code = build_color_code(colex).unwrap();
        let palette = code.colex.palette();
        let z = BinVec::from_bools(&bits[..code.n()]);
        let s = code.syndrome_of(&Pauli::z_on(z)).unwrap();
        prop_assert!(s.parity_ok(palette));
    }

    #[test]
    fn stabilizer_products_have_trivial_syndrome(pick in any::<u64>()) {
        let code = build_color_code(build_16cell_colex().unwrap()).unwrap();
        let mut p = Pauli::identity(code.n());
        for (i, row) in code.hx.rows().iter().enumerate() {
            if pick >> (i % 64) & 1 == 1 {
                p = p.mul(&Pauli::x_on(row.clone())).unwrap();
            }
        }
        for (i, row) in code.hz.rows().iter().enumerate() {
            if pick >> ((i + 8) % 64) & 1 == 1 {
                p = p.mul(&Pauli::z_on(row.clone())).unwrap();
            }
        }
        prop_assert!(code.syndrome_of(&p).unwrap().is_trivial());
        prop_assert!(code.stabilizer_sign(&p).is_some());
    }
}
