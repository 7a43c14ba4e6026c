use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::Result;
use crate::f2::{BinMat, BinVec};
use crate::pauli::{symplectic_commute, Pauli};
use crate::scenario::{Basis, Expectation, RunContext, Value};

/// Gaussian elimination on plain `bool` rows.
fn naive_rank(mut m: Vec<Vec<bool>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c]) else { continue };
        m.swap(rank, p);
        let pivot = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[c] {
                row.iter_mut().zip(&pivot).for_each(|(a, b)| *a ^= b);
            }
        }
        rank += 1;
    }
    rank
}

fn rank_mismatch(rows: &[Vec<bool>]) -> Option<String> {
    let cols = rows[0].len();
    let m = BinMat::from_rows(cols, rows.iter().map(|r| BinVec::from_bools(r)).collect()).ok()?;
    let (fast, slow) = (m.rank(), naive_rank(rows.to_vec()));
    let kernel_ok = m.kernel().len() + fast == cols && m.kernel().iter().all(|v| m.mul_vec(v).is_zero());
    (fast != slow || !kernel_ok).then(|| format!("{rows:?}: rank {fast} vs {slow}"))
}

/// `i^p X^x Z^z` as a dense matrix, row-major.
fn dense(p: &Pauli) -> Vec<Complex64> {
    let n = p.len();
    let dim = 1usize << n;
    let i_pow = [Complex64::new(1.0, 0.0), Complex64::i(), Complex64::new(-1.0, 0.0), -Complex64::i()];
    let x: usize = p.x.iter_ones().map(|q| 1 << q).sum();
    let z: usize = p.z.iter_ones().map(|q| 1 << q).sum();
    let mut m = vec![Complex64::new(0.0, 0.0); dim * dim];
    for col in 0..dim {
        let sign = if (col & z).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
        m[(col ^ x) * dim + col] = i_pow[p.phase as usize] * sign;
    }
    m
}

fn matmul(a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let dim = (a.len() as f64).sqrt() as usize;
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

fn same(a: &[Complex64], b: &[Complex64]) -> bool {
    a.iter().zip(b).all(|(u, v)| (u - v).norm() < 1e-12)
}

fn two_qubit_paulis() -> Vec<Pauli> {
    (0..64u8)
        .map(|c| {
            let bit = |i: u8| c >> i & 1 == 1;
            Pauli::new(BinVec::from_bools(&[bit(0), bit(1)]), BinVec::from_bools(&[bit(2), bit(3)]), c >> 4).expect("phase < 4")
        })
        .collect()
}

pub(super) fn f2_algebra(ctx: &RunContext) -> Result<Vec<Expectation>> {
    let ps = two_qubit_paulis();
    let (mut product, mut commute, mut assoc) = (None, None, None);
    for a in &ps {
        for b in &ps {
            let ab = a.mul(b)?;
            let (da, db) = (dense(a), dense(b));
            let (dab, dba) = (matmul(&da, &db), matmul(&db, &da));
            if product.is_none() && !same(&dense(&ab), &dab) {
                product = Some(format!("{a:?} · {b:?}"));
            }
            if commute.is_none() && symplectic_commute(a, b)? != same(&dab, &dba) {
                commute = Some(format!("{a:?}, {b:?}"));
            }
            if a.phase == 0 && b.phase == 0 {
                for c in &ps {
                    if assoc.is_none() && ab.mul(c)? != a.mul(&b.mul(c)?)? {
                        assoc = Some(format!("{a:?}, {b:?}, {c:?}"));
                    }
                }
            }
        }
    }
    let mut square = None;
    for code in 0u32..1 << 16 {
        let rows: Vec<Vec<bool>> = (0..4).map(|r| (0..4).map(|c| code >> (4 * r + c) & 1 == 1).collect()).collect();
        if let Some(e) = rank_mismatch(&rows) {
            square = Some(e);
            break;
        }
    }
    let mut rng = StdRng::seed_from_u64(ctx.seed);
    let mut random = None;
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(1..16), rng.gen_range(1..140));
        let rows: Vec<Vec<bool>> = (0..r).map(|_| (0..c).map(|_| rng.gen_bool(0.3)).collect()).collect();
        if let Some(e) = rank_mismatch(&rows) {
            random = Some(e);
            break;
        }
    }
    let check = |name: &str, basis, bad: Option<String>| {
        Expectation::holds(name, basis, bad.is_none()).blame(bad.unwrap_or_default())
    };
    Ok(vec![
        Expectation::equal("two-qubit Paulis with phase", Basis::Trivial, Value::int(64), Value::int(ps.len())),
        check("products match 4x4 matrices, all 64² pairs", Basis::Derived, product),
        check("symplectic commutation matches 4x4 matrices", Basis::Derived, commute),
        check("products are associative on all triples", Basis::Trivial, assoc),
        check("rank and kernel of every 4x4 matrix match naive elimination", Basis::Derived, square),
        check("rank and kernel of 200 seeded random matrices match naive elimination", Basis::Derived, random),
    ])
}
