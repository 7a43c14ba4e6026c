//! Exact arithmetic in `Z[ω]`, `ω = e^{iπ/4}`, with dyadic `√2` denominators.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// `a0 + a1 ω + a2 ω² + a3 ω³` with `ω⁴ = −1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ZOmega(pub [i64; 4]);

impl ZOmega {
    pub const ZERO: ZOmega = ZOmega([0, 0, 0, 0]);
    pub const ONE: ZOmega = ZOmega([1, 0, 0, 0]);
    pub const SQRT2: ZOmega = ZOmega([0, 1, 0, -1]);

    /// `ω^k`.
    pub fn omega_pow(k: i64) -> ZOmega {
        let k = k.rem_euclid(8) as usize;
        let mut c = [0; 4];
        if k < 4 {
            c[k] = 1;
        } else {
            c[k - 4] = -1;
        }
        ZOmega(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn conj(&self) -> ZOmega {
        let [a0, a1, a2, a3] = self.0;
        ZOmega([a0, -a3, -a2, -a1])
    }

    pub fn scale(&self, s: i64) -> ZOmega {
        ZOmega(self.0.map(|c| c * s))
    }

    /// Multiplication by `ω^k`.
    pub fn rotate(&self, k: i64) -> ZOmega {
        let k = k.rem_euclid(8) as usize;
        let mut out = [0i64; 4];
        for (i, &c) in self.0.iter().enumerate() {
            let j = i + k;
            let sign = if (j / 4).is_multiple_of(2) { 1 } else { -1 };
            out[j % 4] += sign * c;
        }
        ZOmega(out)
    }

    /// Exact division by `√2` when possible.
    fn div_sqrt2(&self) -> Option<ZOmega> {
        // a/√2 = a·√2/2
        let p = *self * ZOmega::SQRT2;
        p.0.iter()
            .all(|c| c % 2 == 0)
            .then(|| ZOmega(p.0.map(|c| c / 2)))
    }

    pub fn to_complex(&self) -> Complex64 {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let [a0, a1, a2, a3] = self.0.map(|c| c as f64);
        Complex64::new(a0 + (a1 - a3) * h, a2 + (a1 + a3) * h)
    }

    /// If this is `±ω^k` with unit coefficient, its exponent `k`.
    pub fn as_root_of_unity(&self) -> Option<u8> {
        let nz: Vec<(usize, i64)> = self
            .0
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect();
        match nz.as_slice() {
            [(i, 1)] => Some(*i as u8),
            [(i, -1)] => Some(*i as u8 + 4),
            _ => None,
        }
    }
}

impl Add for ZOmega {
    type Output = ZOmega;
    fn add(self, o: ZOmega) -> ZOmega {
        ZOmega([
            self.0[0] + o.0[0],
            self.0[1] + o.0[1],
            self.0[2] + o.0[2],
            self.0[3] + o.0[3],
        ])
    }
}

impl Sub for ZOmega {
    type Output = ZOmega;
    fn sub(self, o: ZOmega) -> ZOmega {
        self + (-o)
    }
}

impl Neg for ZOmega {
    type Output = ZOmega;
    fn neg(self) -> ZOmega {
        ZOmega(self.0.map(|c| -c))
    }
}

impl Mul for ZOmega {
    type Output = ZOmega;
    fn mul(self, o: ZOmega) -> ZOmega {
        let mut out = [0i64; 4];
        for i in 0..4 {
            for j in 0..4 {
                let p = self.0[i] * o.0[j];
                if i + j < 4 {
                    out[i + j] += p;
                } else {
                    out[i + j - 4] -= p;
                }
            }
        }
        ZOmega(out)
    }
}

/// `a · 2^{-t/2}` with `a ∈ Z[ω]`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cyclotomic {
    pub a: ZOmega,
    pub t: u32,
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl Cyclotomic {
    pub fn new(a: ZOmega, t: u32) -> Self {
        let mut c = Cyclotomic { a, t };
        c.normalize();
        c
    }

    pub fn zero() -> Self {
        Cyclotomic {
            a: ZOmega::ZERO,
            t: 0,
        }
    }

    pub fn one() -> Self {
        Cyclotomic {
            a: ZOmega::ONE,
            t: 0,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(ZOmega([n, 0, 0, 0]), 0)
    }

    pub fn omega_pow(k: i64) -> Self {
        Cyclotomic {
            a: ZOmega::omega_pow(k),
            t: 0,
        }
    }

    /// `2^{-e}`.
    pub fn inv_pow2(e: u32) -> Self {
        Cyclotomic {
            a: ZOmega::ONE,
            t: 2 * e,
        }
    }

    fn normalize(&mut self) {
        if self.a.is_zero() {
            self.t = 0;
            return;
        }
        while self.t > 0 {
            match self.a.div_sqrt2() {
                Some(q) => {
                    self.a = q;
                    self.t -= 1;
                }
                None => break,
            }
        }
    }

    fn lift(&self, t: u32) -> ZOmega {
        let mut a = self.a;
        let d = t - self.t;
        // multiply by 2^{d/2}
        a = a.scale(1i64 << (d / 2));
        if d % 2 == 1 {
            a = a * ZOmega::SQRT2;
        }
        a
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero()
    }

    pub fn conj(&self) -> Self {
        Cyclotomic {
            a: self.a.conj(),
            t: self.t,
        }
    }

    pub fn rotate(&self, k: i64) -> Self {
        Cyclotomic {
            a: self.a.rotate(k),
            t: self.t,
        }
    }

    /// `|z|²`, which lies in `Z[√2]` scaled.
    pub fn norm_sqr(&self) -> Self {
        *self * self.conj()
    }

    pub fn to_complex(&self) -> Complex64 {
        self.a.to_complex() * 2f64.powf(-(self.t as f64) / 2.0)
    }

    pub fn as_phase(&self) -> Option<Phase8> {
        if self.t != 0 {
            return None;
        }
        self.a.as_root_of_unity().map(Phase8::new)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: Cyclotomic) -> Cyclotomic {
        let t = self.t.max(o.t);
        Cyclotomic::new(self.lift(t) + o.lift(t), t)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: Cyclotomic) -> Cyclotomic {
        self + (-o)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            a: -self.a,
            t: self.t,
        }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: Cyclotomic) -> Cyclotomic {
        Cyclotomic::new(self.a * o.a, self.t + o.t)
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a0, a1, a2, a3] = self.a.0;
        write!(f, "({a0} + {a1}ω + {a2}ω² + {a3}ω³)")?;
        if self.t > 0 {
            write!(f, "·2^(-{}/2)", self.t)?;
        }
        Ok(())
    }
}

/// The eighth root of unity `ω^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Phase8(u8);

impl Phase8 {
    pub const ONE: Phase8 = Phase8(0);
    pub const MINUS_ONE: Phase8 = Phase8(4);

    pub fn new(k: u8) -> Self {
        Phase8(k % 8)
    }

    pub fn from_i64(k: i64) -> Self {
        Phase8(k.rem_euclid(8) as u8)
    }

    pub fn exponent(&self) -> u8 {
        self.0
    }

    pub fn mul(&self, o: Phase8) -> Phase8 {
        Phase8::new(self.0 + o.0)
    }

    pub fn inv(&self) -> Phase8 {
        Phase8::new(8 - self.0)
    }

    /// The phase angle as `num/den · π` in lowest terms, with `num ∈ [0, 2·den)`.
    pub fn as_pi_fraction(&self) -> (i64, i64) {
        let (mut num, mut den) = (self.0 as i64, 4i64);
        while num % 2 == 0 && den > 1 {
            num /= 2;
            den /= 2;
        }
        if num == 0 {
            den = 1;
        }
        (num, den)
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::omega_pow(self.0 as i64)
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_4 * self.0 as f64)
    }
}

impl fmt::Display for Phase8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_pi_fraction() {
            (0, _) => write!(f, "0"),
            (n, 1) => write!(f, "{n}π"),
            (n, d) => write!(f, "{n}π/{d}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn sqrt2_squares_to_two() {
        assert_eq!(ZOmega::SQRT2 * ZOmega::SQRT2, ZOmega([2, 0, 0, 0]));
        let h = Cyclotomic::new(ZOmega::ONE, 1);
        assert_eq!(h * h + h * h, Cyclotomic::one());
    }

    #[test]
    fn omega_powers_match_floats() {
        for k in -9..17 {
            let z = ZOmega::omega_pow(k).to_complex();
            assert!(close(z, Phase8::from_i64(k).to_complex()));
            assert_eq!(ZOmega::ONE.rotate(k), ZOmega::omega_pow(k));
        }
    }

    #[test]
    fn normalization_is_canonical() {
        let a = Cyclotomic::new(ZOmega([2, 0, 0, 0]), 2);
        assert_eq!(a, Cyclotomic::one());
        let b = Cyclotomic::new(ZOmega::SQRT2, 1);
        assert_eq!(b, Cyclotomic::one());
        assert_eq!(Cyclotomic::new(ZOmega::ZERO, 5), Cyclotomic::zero());
    }

    #[test]
    fn cos_and_sin_of_quarter_pi() {
        // (1 + ω)/2 has modulus cos(π/8)
        let half = Cyclotomic::inv_pow2(1);
        let a = (Cyclotomic::one() + Cyclotomic::omega_pow(1)) * half;
        let expect = (std::f64::consts::PI / 8.0).cos();
        assert!((a.to_complex().norm() - expect).abs() < 1e-12);
        let b = (Cyclotomic::one() - Cyclotomic::omega_pow(1)) * half;
        assert_eq!(a.norm_sqr() + b.norm_sqr(), Cyclotomic::one());
    }

    #[test]
    fn phase_fractions() {
        assert_eq!(Phase8::new(0).as_pi_fraction(), (0, 1));
        assert_eq!(Phase8::new(4).as_pi_fraction(), (1, 1));
        assert_eq!(Phase8::new(2).as_pi_fraction(), (1, 2));
        assert_eq!(Phase8::new(3).as_pi_fraction(), (3, 4));
        assert_eq!(Phase8::MINUS_ONE.to_string(), "1π");
        assert_eq!(Cyclotomic::from_int(-1).as_phase(), Some(Phase8::MINUS_ONE));
        assert_eq!(Cyclotomic::from_int(2).as_phase(), None);
    }

    proptest::proptest! {
        #[test]
        fn ring_ops_match_floats(
            a in proptest::array::uniform4(-20i64..20), ta in 0u32..5,
            b in proptest::array::uniform4(-20i64..20), tb in 0u32..5,
        ) {
            let x = Cyclotomic::new(ZOmega(a), ta);
            let y = Cyclotomic::new(ZOmega(b), tb);
            let (fx, fy) = (x.to_complex(), y.to_complex());
            proptest::prop_assert!(close((x + y).to_complex(), fx + fy));
            proptest::prop_assert!(close((x * y).to_complex(), fx * fy));
            proptest::prop_assert!(close(x.conj().to_complex(), fx.conj()));
            proptest::prop_assert_eq!(x - x, Cyclotomic::zero());
        }
    }
}
