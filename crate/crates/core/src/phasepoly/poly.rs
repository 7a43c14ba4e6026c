use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::BinVec;

/// `θ : F₂ⁿ → Z₈` as a multilinear polynomial; the diagonal gate is
/// `Σ_v ω^{θ(v)} |v⟩⟨v|` with `ω = e^{iπ/4}`.
///
/// Coefficients are stored in units of `π/4`; a level-`k` polynomial in the
/// usual `Z_{2^k}` convention is recovered by dividing by `2^{3−k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhasePolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, u8>,
}

/// Serialized form: coefficients in `Z_{2^level}`, unit `π/2^{level−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub level: u32,
    pub n: usize,
    pub terms: Vec<(Vec<u32>, u32)>,
}

impl PhasePolynomial {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: i64) -> Self {
        let mut p = Self::zero(n);
        p.add_term(&[], c);
        p
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// Adds `c · ∏_{i∈S} v_i`; repeated indices collapse since `v² = v`.
    pub fn add_term(&mut self, vars: &[u32], c: i64) {
        let mut key = vars.to_vec();
        key.sort_unstable();
        key.dedup();
        debug_assert!(key.iter().all(|&i| (i as usize) < self.n));
        let c = c.rem_euclid(8) as u8;
        if c == 0 {
            return;
        }
        let v = (self.terms.get(&key).copied().unwrap_or(0) + c) % 8;
        if v == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], u8)> {
        self.terms.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> u8 {
        self.terms.get(&Vec::new()).copied().unwrap_or(0)
    }

    pub fn without_constant(&self) -> Self {
        let mut p = self.clone();
        p.terms.remove(&Vec::new());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| k.is_empty())
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Clifford-hierarchy level: the largest `|S| + 2 − v₂(c)` over
    /// non-constant monomials (`R₃ → 3`, `R₂, CZ → 2`, `Z → 1`).
    pub fn hierarchy_level(&self) -> u32 {
        self.terms
            .iter()
            .filter(|(k, _)| !k.is_empty())
            .map(|(k, &c)| k.len() as u32 + 2 - c.trailing_zeros())
            .max()
            .unwrap_or(0)
    }

    /// Smallest `k ≥ 1` with every coefficient a multiple of `2^{3−k}`.
    pub fn unit_level(&self) -> u32 {
        let tz = self
            .terms
            .values()
            .map(|c| c.trailing_zeros())
            .min()
            .unwrap_or(2)
            .min(2);
        3 - tz
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        assert_eq!(self.n, other.n, "variable count mismatch");
        for (k, &c) in &other.terms {
            self.add_term(k, c as i64);
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, s: i64) -> Self {
        let mut out = Self::zero(self.n);
        for (k, &c) in &self.terms {
            out.add_term(k, c as i64 * s);
        }
        out
    }

    /// Product with multilinear reduction.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut out = Self::zero(self.n);
        for (ka, &ca) in &self.terms {
            for (kb, &cb) in &other.terms {
                let mut key = ka.clone();
                key.extend_from_slice(kb);
                out.add_term(&key, ca as i64 * cb as i64);
            }
        }
        out
    }

    /// `θ(v ⊕ x)` as a polynomial in `v`.
    pub fn shift(&self, x: &BinVec) -> Self {
        assert_eq!(x.len(), self.n, "shift length mismatch");
        let mut out = Self::zero(self.n);
        for (key, &c) in &self.terms {
            let (flipped, kept): (Vec<u32>, Vec<u32>) =
                key.iter().partition(|&&i| x.get(i as usize));
            // ∏_{i∈F} (1 − v_i) = Σ_{T⊆F} (−1)^{|T|} v_T
            for mask in 0u32..(1 << flipped.len()) {
                let mut term = kept.clone();
                for (b, &i) in flipped.iter().enumerate() {
                    if mask & (1 << b) != 0 {
                        term.push(i);
                    }
                }
                let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
                out.add_term(&term, sign * c as i64);
            }
        }
        out
    }

    pub fn eval(&self, v: &BinVec) -> u8 {
        let mut acc = 0u32;
        for (key, &c) in &self.terms {
            if key.iter().all(|&i| v.get(i as usize)) {
                acc += c as u32;
            }
        }
        (acc % 8) as u8
    }

    /// Variables that occur in some monomial.
    pub fn support(&self) -> Vec<u32> {
        let mut s: Vec<u32> = self.terms.keys().flatten().copied().collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Renames variables through `map` into a space of `n` variables.
    pub fn relabel(&self, n: usize, map: impl Fn(u32) -> u32) -> Self {
        let mut out = Self::zero(n);
        for (k, &c) in &self.terms {
            let key: Vec<u32> = k.iter().map(|&i| map(i)).collect();
            out.add_term(&key, c as i64);
        }
        out
    }

    pub fn to_record(&self) -> PolyRecord {
        let level = self.unit_level();
        let div = 1u32 << (3 - level);
        PolyRecord {
            level,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, &c)| (k.clone(), c as u32 / div))
                .collect(),
        }
    }

    pub fn from_record(rec: &PolyRecord) -> Result<Self> {
        if !(1..=3).contains(&rec.level) {
            return Err(Error::InvalidInput(format!("level {} out of range", rec.level)));
        }
        let mul = 1i64 << (3 - rec.level);
        let mut p = Self::zero(rec.n);
        for (k, c) in &rec.terms {
            if k.iter().any(|&i| i as usize >= rec.n) {
                return Err(Error::InvalidInput(format!("variable out of range in {k:?}")));
            }
            if *c >= 1 << rec.level {
                return Err(Error::InvalidInput(format!("coefficient {c} exceeds Z_2^{}", rec.level)));
            }
            p.add_term(k, *c as i64 * mul);
        }
        Ok(p)
    }
}

impl fmt::Display for PhasePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                if k.is_empty() {
                    c.to_string()
                } else {
                    let vs: Vec<String> = k.iter().map(|i| format!("v{i}")).collect();
                    format!("{c}·{}", vs.join("·"))
                }
            })
            .collect();
        write!(f, "{} (π/4)", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_vectors(n: usize) -> impl Iterator<Item = BinVec> {
        (0..1u32 << n).map(move |m| {
            BinVec::from_bools(&(0..n).map(|i| m & (1 << i) != 0).collect::<Vec<_>>())
        })
    }

    #[test]
    fn levels() {
        let mut r3 = PhasePolynomial::zero(2);
        r3.add_term(&[0], 1);
        assert_eq!(r3.hierarchy_level(), 3);
        let mut cz = PhasePolynomial::zero(2);
        cz.add_term(&[0, 1], 4);
        assert_eq!(cz.hierarchy_level(), 2);
        assert_eq!(cz.unit_level(), 1);
        let mut z = PhasePolynomial::zero(2);
        z.add_term(&[1], 4);
        assert_eq!(z.hierarchy_level(), 1);
        assert_eq!(PhasePolynomial::constant(2, 3).hierarchy_level(), 0);
    }

    #[test]
    fn shift_matches_pointwise() {
        let mut p = PhasePolynomial::zero(3);
        p.add_term(&[0], 1);
        p.add_term(&[0, 2], 2);
        p.add_term(&[0, 1, 2], 4);
        p.add_term(&[], 5);
        let x = BinVec::from_indices(3, [0, 2]);
        let s = p.shift(&x);
        for v in all_vectors(3) {
            assert_eq!(s.eval(&v), p.eval(&v.xor(&x)));
        }
    }

    #[test]
    fn record_round_trip() {
        let mut p = PhasePolynomial::zero(3);
        p.add_term(&[1], 2);
        p.add_term(&[0, 2], 6);
        let rec = p.to_record();
        assert_eq!(rec.level, 2);
        assert_eq!(PhasePolynomial::from_record(&rec).unwrap(), p);
        let bad = PolyRecord {
            level: 2,
            n: 3,
            terms: vec![(vec![0], 4)],
        };
        assert!(PhasePolynomial::from_record(&bad).is_err());
    }

    proptest::proptest! {
        #[test]
        fn product_matches_pointwise(a in proptest::collection::vec((0u32..8, 0i64..8), 0..6),
                                     b in proptest::collection::vec((0u32..8, 0i64..8), 0..6)) {
            let build = |t: &[(u32, i64)]| {
                let mut p = PhasePolynomial::zero(3);
                for &(m, c) in t {
                    let vars: Vec<u32> = (0..3).filter(|i| m & (1 << i) != 0).collect();
                    p.add_term(&vars, c);
                }
                p
            };
            let (pa, pb) = (build(&a), build(&b));
            let prod = pa.mul(&pb);
            for v in all_vectors(3) {
                proptest::prop_assert_eq!(prod.eval(&v) as u32, (pa.eval(&v) as u32 * pb.eval(&v) as u32) % 8);
            }
        }
    }
}
