use std::fmt;

use serde::Serialize;

use super::poly::{PhasePolynomial, PolyRecord};
use crate::error::{Error, Result};
use crate::f2::BinVec;
use crate::pauli::Pauli;

/// `X^x · diag(ω^{θ(v)})`. Any Z part and phase of a Pauli is absorbed into `θ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedOperator {
    pub x: BinVec,
    pub theta: PhasePolynomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct MixedRecord {
    pub x: Vec<usize>,
    pub theta: PolyRecord,
}

impl MixedOperator {
    pub fn identity(n: usize) -> Self {
        Self {
            x: BinVec::zeros(n),
            theta: PhasePolynomial::zero(n),
        }
    }

    pub fn diagonal(theta: PhasePolynomial) -> Self {
        Self {
            x: BinVec::zeros(theta.num_vars()),
            theta,
        }
    }

    pub fn from_pauli(p: &Pauli) -> Self {
        let n = p.len();
        let mut theta = PhasePolynomial::constant(n, 2 * p.phase as i64);
        for q in p.z.iter_ones() {
            theta.add_term(&[q as u32], 4);
        }
        Self {
            x: p.x.clone(),
            theta,
        }
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn is_diagonal(&self) -> bool {
        self.x.is_zero()
    }

    /// The Pauli this operator equals, if its diagonal part is a Z-string
    /// times a power of `i`.
    pub fn to_pauli(&self) -> Option<Pauli> {
        let c = self.theta.constant_term();
        if !c.is_multiple_of(2) {
            return None;
        }
        let mut z = BinVec::zeros(self.n());
        for (k, coef) in self.theta.terms() {
            match (k.len(), coef) {
                (0, _) => {}
                (1, 4) => z.set(k[0] as usize, true),
                _ => return None,
            }
        }
        Some(Pauli::new(self.x.clone(), z, c / 2).unwrap())
    }

    /// `(X^{x1} D1)(X^{x2} D2) = X^{x1⊕x2} · diag(θ1(v⊕x2) + θ2(v))`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Self {
            x: self.x.xor(&other.x),
            theta: self.theta.shift(&other.x).add(&other.theta),
        })
    }

    /// `(X^x D)† = X^x · diag(−θ(v⊕x))`.
    pub fn adjoint(&self) -> Self {
        Self {
            x: self.x.clone(),
            theta: self.theta.shift(&self.x).neg(),
        }
    }

    /// Group commutator `K(U,V) = U V U† V†`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?
            .mul(&self.adjoint())?
            .mul(&other.adjoint())
    }

    /// Equality up to a global phase.
    pub fn eq_up_to_phase(&self, other: &Self) -> bool {
        self.x == other.x && self.theta.without_constant() == other.theta.without_constant()
    }

    pub fn to_record(&self) -> MixedRecord {
        MixedRecord {
            x: self.x.iter_ones().collect(),
            theta: self.theta.to_record(),
        }
    }
}

impl fmt::Display for MixedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs: Vec<String> = self.x.iter_ones().map(|q| q.to_string()).collect();
        write!(f, "X[{}]·exp(iπ/4·({}))", xs.join(","), self.theta)
    }
}

/// Left-nested commutator: `[a, b] ↦ K(a, b)` and
/// `[a, b, c, …] ↦ K(K(…)†, next)` for each further operator.
pub fn sequential_commutator(ops: &[MixedOperator]) -> Result<MixedOperator> {
    if ops.len() < 2 {
        return Err(Error::InvalidInput("sequential commutator needs at least two operators".into()));
    }
    let mut acc = ops[0].commutator(&ops[1])?;
    for next in &ops[2..] {
        acc = acc.adjoint().commutator(next)?;
    }
    Ok(acc)
}

/// `K(D, P) = D P D† P†` for a diagonal `D` and Pauli `P`.
pub fn pauli_commutator(d: &PhasePolynomial, p: &Pauli) -> Result<MixedOperator> {
    MixedOperator::diagonal(d.clone()).commutator(&MixedOperator::from_pauli(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    /// Dense matrix of a mixed operator on `n ≤ 3` qubits; qubit `q` is bit `q`.
    fn dense(m: &MixedOperator) -> Vec<Vec<Complex64>> {
        let n = m.n();
        let dim = 1 << n;
        let mut out = vec![vec![Complex64::new(0.0, 0.0); dim]; dim];
        let xm: usize = m.x.iter_ones().map(|q| 1 << q).sum();
        for v in 0..dim {
            let bits = BinVec::from_bools(&(0..n).map(|i| v & (1 << i) != 0).collect::<Vec<_>>());
            let ph = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4 * m.theta.eval(&bits) as f64);
            out[v ^ xm][v] = ph;
        }
        out
    }

    fn matmul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
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

    fn close(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> bool {
        a.iter().flatten().zip(b.iter().flatten()).all(|(x, y)| (x - y).norm() < 1e-12)
    }

    fn random_op(n: usize, seed: &[u8]) -> MixedOperator {
        let mut theta = PhasePolynomial::zero(n);
        for (i, chunk) in seed.chunks(2).enumerate() {
            let vars: Vec<u32> = (0..n as u32).filter(|b| chunk[0] & (1 << b) != 0).collect();
            theta.add_term(&vars, chunk.get(1).copied().unwrap_or(i as u8) as i64);
        }
        let x = BinVec::from_bools(&(0..n).map(|i| seed[0] & (1 << (i + 3)) != 0).collect::<Vec<_>>());
        MixedOperator { x, theta }
    }

    #[test]
    fn cz_commutator_with_x_is_z() {
        let mut cz = PhasePolynomial::zero(2);
        cz.add_term(&[0, 1], 4);
        let k = pauli_commutator(&cz, &Pauli::single_x(2, 0)).unwrap();
        let z2 = MixedOperator::from_pauli(&Pauli::single_z(2, 1));
        assert!(k.eq_up_to_phase(&z2));
    }

    #[test]
    fn diagonal_with_z_commutes() {
        let mut d = PhasePolynomial::zero(3);
        d.add_term(&[0], 1);
        d.add_term(&[1, 2], 3);
        let k = pauli_commutator(&d, &Pauli::z_on(BinVec::ones(3))).unwrap();
        assert_eq!(k, MixedOperator::identity(3));
    }

    #[test]
    fn odd_overlap_gives_minus_one() {
        let x = MixedOperator::from_pauli(&Pauli::x_on(BinVec::from_indices(3, [0, 1])));
        let z = MixedOperator::from_pauli(&Pauli::z_on(BinVec::from_indices(3, [1, 2])));
        let k = sequential_commutator(&[x, z]).unwrap();
        assert!(k.is_diagonal());
        assert!(k.theta.is_constant());
        assert_eq!(k.theta.constant_term(), 4);
    }

    #[test]
    fn pauli_round_trip() {
        let p = Pauli::new(BinVec::from_indices(3, [0, 2]), BinVec::from_indices(3, [2]), 1).unwrap();
        assert_eq!(MixedOperator::from_pauli(&p).to_pauli().unwrap(), p);
    }

    proptest::proptest! {
        #[test]
        fn algebra_matches_dense(a in proptest::collection::vec(0u8..64, 1..7),
                                 b in proptest::collection::vec(0u8..64, 1..7)) {
            let (u, v) = (random_op(3, &a), random_op(3, &b));
            let (du, dv) = (dense(&u), dense(&v));
            proptest::prop_assert!(close(&dense(&u.mul(&v).unwrap()), &matmul(&du, &dv)));
            let id = u.mul(&u.adjoint()).unwrap();
            proptest::prop_assert_eq!(id, MixedOperator::identity(3));
        }

        #[test]
        fn commutator_degree_drops(a in proptest::collection::vec(0u8..64, 1..7), xbits in 1u8..8) {
            let d = random_op(3, &a).theta;
            let x = BinVec::from_bools(&(0..3).map(|i| xbits & (1 << i) != 0).collect::<Vec<_>>());
            let k = pauli_commutator(&d, &Pauli::x_on(x)).unwrap();
            let lvl = d.hierarchy_level();
            proptest::prop_assert!(k.theta.hierarchy_level() < lvl.max(1));
        }

        #[test]
        fn commutator_with_product_factorises(a in proptest::collection::vec(0u8..64, 1..7),
                                              x1 in 0u8..8, x2 in 0u8..8) {
            // K(D, P1 P2) = K(D, P1) · P1 K(D, P2) P1†
            let d = MixedOperator::diagonal(random_op(3, &a).theta);
            let bits = |m: u8| BinVec::from_bools(&(0..3).map(|i| m & (1 << i) != 0).collect::<Vec<_>>());
            let p1 = MixedOperator::from_pauli(&Pauli::x_on(bits(x1)));
            let p2 = MixedOperator::from_pauli(&Pauli::x_on(bits(x2)));
            let lhs = d.commutator(&p1.mul(&p2).unwrap()).unwrap();
            let inner = p1.mul(&d.commutator(&p2).unwrap()).unwrap().mul(&p1.adjoint()).unwrap();
            let rhs = d.commutator(&p1).unwrap().mul(&inner).unwrap();
            proptest::prop_assert_eq!(lhs, rhs);
        }
    }
}
