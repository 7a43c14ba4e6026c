//! Pauli operators `i^p X^x Z^z` with phase tracking.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::BinVec;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Pauli {
    pub x: BinVec,
    pub z: BinVec,
    /// Power of `i`, mod 4.
    pub phase: u8,
}

impl Pauli {
    pub fn identity(n: usize) -> Self {
        Self {
            x: BinVec::zeros(n),
            z: BinVec::zeros(n),
            phase: 0,
        }
    }

    pub fn new(x: BinVec, z: BinVec, phase: u8) -> Result<Self> {
        if x.len() != z.len() {
            return Err(Error::DimensionMismatch {
                expected: x.len(),
                found: z.len(),
            });
        }
        Ok(Self {
            x,
            z,
            phase: phase % 4,
        })
    }

    pub fn x_on(support: BinVec) -> Self {
        let n = support.len();
        Self {
            x: support,
            z: BinVec::zeros(n),
            phase: 0,
        }
    }

    pub fn z_on(support: BinVec) -> Self {
        let n = support.len();
        Self {
            x: BinVec::zeros(n),
            z: support,
            phase: 0,
        }
    }

    /// `X_q` on an `n`-qubit register.
    pub fn single_x(n: usize, q: usize) -> Self {
        Self::x_on(BinVec::from_indices(n, [q]))
    }

    pub fn single_z(n: usize, q: usize) -> Self {
        Self::z_on(BinVec::from_indices(n, [q]))
    }

    /// `Y = i X Z` on the given qubits.
    pub fn y_on(support: BinVec) -> Self {
        let w = support.weight();
        Self {
            x: support.clone(),
            z: support,
            phase: (w % 4) as u8,
        }
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    pub fn is_diagonal(&self) -> bool {
        self.x.is_zero()
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    fn check_len(&self, other: &Pauli) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Operator product `self · other`.
    pub fn mul(&self, other: &Pauli) -> Result<Pauli> {
        self.check_len(other)?;
        // Z^{z1} X^{x2} = (-1)^{z1·x2} X^{x2} Z^{z1}
        let swap = if self.z.dot(&other.x) { 2 } else { 0 };
        Ok(Pauli {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            phase: (self.phase + other.phase + swap) % 4,
        })
    }

    pub fn adjoint(&self) -> Pauli {
        // (i^p X Z)^† = i^{-p} Z X = i^{-p} (-1)^{x·z} X Z
        let flip = if self.x.dot(&self.z) { 2 } else { 0 };
        Pauli {
            x: self.x.clone(),
            z: self.z.clone(),
            phase: (4 - self.phase + flip) % 4,
        }
    }

    pub fn commutes_with(&self, other: &Pauli) -> Result<bool> {
        symplectic_commute(self, other)
    }
}

pub fn pauli_product(p: &Pauli, q: &Pauli) -> Result<Pauli> {
    p.mul(q)
}

/// True iff the symplectic form `<p.x, q.z> + <p.z, q.x>` vanishes mod 2.
pub fn symplectic_commute(p: &Pauli, q: &Pauli) -> Result<bool> {
    p.check_len(q)?;
    Ok(p.x.dot(&q.z) == p.z.dot(&q.x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    type M = Vec<Vec<Complex64>>;

    fn kron(a: &M, b: &M) -> M {
        let (n, m) = (a.len(), b.len());
        let mut out = vec![vec![Complex64::new(0.0, 0.0); n * m]; n * m];
        for i in 0..n {
            for j in 0..n {
                for k in 0..m {
                    for l in 0..m {
                        out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                    }
                }
            }
        }
        out
    }

    fn matmul(a: &M, b: &M) -> M {
        let n = a.len();
        let mut out = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
        out
    }

    fn dense(p: &Pauli) -> M {
        let c = |r: f64, i: f64| Complex64::new(r, i);
        let id = vec![vec![c(1., 0.), c(0., 0.)], vec![c(0., 0.), c(1., 0.)]];
        let x = vec![vec![c(0., 0.), c(1., 0.)], vec![c(1., 0.), c(0., 0.)]];
        let z = vec![vec![c(1., 0.), c(0., 0.)], vec![c(0., 0.), c(-1., 0.)]];
        let mut out = vec![vec![c(1., 0.)]];
        for q in 0..p.len() {
            let mut f = id.clone();
            if p.x.get(q) {
                f = matmul(&f, &x);
            }
            if p.z.get(q) {
                f = matmul(&f, &z);
            }
            out = kron(&out, &f);
        }
        let ph = Complex64::i().powu(p.phase as u32);
        out.iter()
            .map(|r| r.iter().map(|v| v * ph).collect())
            .collect()
    }

    fn close(a: &M, b: &M) -> bool {
        a.iter()
            .flatten()
            .zip(b.iter().flatten())
            .all(|(x, y)| (x - y).norm() < 1e-12)
    }

    fn all_two_qubit() -> Vec<Pauli> {
        let mut out = Vec::new();
        for bits in 0..16u32 {
            for phase in 0..4 {
                let x = BinVec::from_bools(&[bits & 1 != 0, bits & 2 != 0]);
                let z = BinVec::from_bools(&[bits & 4 != 0, bits & 8 != 0]);
                out.push(Pauli::new(x, z, phase).unwrap());
            }
        }
        out
    }

    #[test]
    fn x_squared_is_identity() {
        let x = Pauli::single_x(1, 0);
        let p = pauli_product(&x, &x).unwrap();
        assert!(p.is_identity_up_to_phase());
        assert_eq!(p.phase, 0);
    }

    #[test]
    fn xz_and_zx_differ_by_sign() {
        let x = Pauli::single_x(1, 0);
        let z = Pauli::single_z(1, 0);
        let xz = x.mul(&z).unwrap();
        let zx = z.mul(&x).unwrap();
        assert_eq!((xz.x.clone(), xz.z.clone()), (zx.x.clone(), zx.z.clone()));
        assert_eq!((zx.phase + 4 - xz.phase) % 4, 2);
        assert!(!symplectic_commute(&x, &z).unwrap());
    }

    #[test]
    fn xx_zz_is_yy_and_commutes() {
        let xx = Pauli::x_on(BinVec::ones(2));
        let zz = Pauli::z_on(BinVec::ones(2));
        let p = xx.mul(&zz).unwrap();
        let yy = Pauli::y_on(BinVec::ones(2));
        assert_eq!((p.x.clone(), p.z.clone()), (yy.x.clone(), yy.z.clone()));
        assert!(close(&dense(&p), &matmul(&dense(&xx), &dense(&zz))));
        assert_eq!(p, zz.mul(&xx).unwrap());
        assert!(symplectic_commute(&xx, &zz).unwrap());
    }

    #[test]
    fn length_mismatch_errors() {
        let a = Pauli::identity(2);
        let b = Pauli::identity(3);
        assert!(a.mul(&b).is_err());
        assert!(symplectic_commute(&a, &b).is_err());
    }

    #[test]
    fn product_matches_dense_exhaustively() {
        let all = all_two_qubit();
        for p in &all {
            for q in all.iter().step_by(3) {
                let pq = p.mul(q).unwrap();
                assert!(close(&dense(&pq), &matmul(&dense(p), &dense(q))));
            }
        }
    }

    #[test]
    fn commutation_matches_dense_exhaustively() {
        let all = all_two_qubit();
        for p in all.iter().step_by(4) {
            for q in all.iter().step_by(4) {
                let dp = dense(p);
                let dq = dense(q);
                let same = close(&matmul(&dp, &dq), &matmul(&dq, &dp));
                assert_eq!(symplectic_commute(p, q).unwrap(), same);
            }
        }
        assert!(all.iter().all(|p| symplectic_commute(p, p).unwrap()));
    }

    #[test]
    fn adjoint_inverts() {
        for p in all_two_qubit() {
            let e = p.mul(&p.adjoint()).unwrap();
            assert!(e.is_identity_up_to_phase());
            assert_eq!(e.phase, 0);
        }
    }

    proptest::proptest! {
        #[test]
        fn associativity(a in 0usize..64, b in 0usize..64, c in 0usize..64) {
            let all = all_two_qubit();
            let (p, q, r) = (&all[a], &all[b], &all[c]);
            let left = p.mul(q).unwrap().mul(r).unwrap();
            let right = p.mul(&q.mul(r).unwrap()).unwrap();
            proptest::prop_assert_eq!(left, right);
        }
    }
}
