//! Diagonal operators restricted to the code space.
//!
//! Code-space vectors are written `v = Σ_i y_i B_i` over the basis of
//! `ker H_Z` (independent X checks first, then logical representatives).
//! Each `v_j` is the XOR of the `y_i` with `B_i(j) = 1`, and over `Z₈`
//!
//! ```text
//! y₁ ⊕ … ⊕ y_m = Σ_{T ≠ ∅} (−2)^{|T|−1} ∏_{i∈T} y_i,
//! ```
//!
//! where terms with `|T| ≥ 4` vanish. Substituting turns `θ` into an exact
//! polynomial in `y`.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::mixed::MixedOperator;
use super::poly::PhasePolynomial;
use crate::code::{CodespaceBasis, ColorCode};
use crate::error::{Error, Result};
use crate::f2::BinVec;
use crate::ring::{Cyclotomic, Phase8};

/// Largest number of free variables summed by brute force.
pub const ENUMERATION_LIMIT: usize = 24;

/// `θ(Σ y_i B_i)` as a polynomial in the basis coefficients `y`.
pub fn substitute(basis: &CodespaceBasis, theta: &PhasePolynomial) -> PhasePolynomial {
    let m = basis.vectors.len();
    let mut cache: HashMap<u32, PhasePolynomial> = HashMap::new();
    let mut out = PhasePolynomial::constant(m, theta.constant_term() as i64);
    for (key, c) in theta.terms() {
        if key.is_empty() {
            continue;
        }
        let mut prod = PhasePolynomial::constant(m, c as i64);
        for &j in key {
            let vj = cache.entry(j).or_insert_with(|| xor_poly(basis, j));
            prod = prod.mul(vj);
            if prod.is_zero() {
                break;
            }
        }
        out.add_assign(&prod);
    }
    out
}

fn xor_poly(basis: &CodespaceBasis, qubit: u32) -> PhasePolynomial {
    let m = basis.vectors.len();
    let ids: Vec<u32> = (0..m as u32)
        .filter(|&i| basis.vectors[i as usize].get(qubit as usize))
        .collect();
    let mut p = PhasePolynomial::zero(m);
    for (a, &i) in ids.iter().enumerate() {
        p.add_term(&[i], 1);
        for (b, &j) in ids.iter().enumerate().skip(a + 1) {
            p.add_term(&[i, j], -2);
            for &l in &ids[b + 1..] {
                p.add_term(&[i, j, l], 4);
            }
        }
    }
    p
}

/// Whether `diag(ω^θ)` maps the code space to itself.
///
/// This holds iff, after substitution, no monomial involves a stabilizer
/// coordinate; the remaining dependence on logical coordinates is a logical
/// diagonal gate.
pub fn preserves_codespace(code: &ColorCode, theta: &PhasePolynomial) -> bool {
    let basis = code.codespace_basis();
    let sub = substitute(basis, theta);
    let r = basis.r as u32;
    let ok = sub.terms().all(|(k, _)| k.iter().all(|&i| i >= r));
    ok
}

/// Brute-force cross-check of [`preserves_codespace`].
pub fn preserves_codespace_enumerated(code: &ColorCode, theta: &PhasePolynomial) -> Result<bool> {
    let basis = code.codespace_basis();
    let (r, k) = (basis.r, basis.k());
    if r + k > 20 {
        return Err(Error::Resource(format!("2^{} code-space vectors", r + k)));
    }
    for l in 0u64..(1 << k) {
        let mut base = BinVec::zeros(code.n());
        for (i, lv) in basis.logicals().iter().enumerate() {
            if l & (1 << i) != 0 {
                base.xor_assign(lv);
            }
        }
        let values: BTreeSet<u8> = span(basis.generators(), &base)
            .iter()
            .map(|v| theta.eval(v))
            .collect();
        if values.len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All vectors `base ⊕ Σ u_i g_i`, in Gray-code order.
pub(crate) fn span(gens: &[BinVec], base: &BinVec) -> Vec<BinVec> {
    let mut out = Vec::with_capacity(1 << gens.len());
    let mut v = base.clone();
    out.push(v.clone());
    for step in 1u64..(1 << gens.len()) {
        v.xor_assign(&gens[step.trailing_zeros() as usize]);
        out.push(v.clone());
    }
    out
}

/// A code-space operator that is either a phase or something nontrivial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarOrOperator {
    Scalar(Phase8),
    Operator(MixedOperator),
}

#[derive(Clone, Debug, Serialize)]
pub enum ScalarRecord {
    Scalar { pi_numerator: i64, pi_denominator: i64 },
    Operator(super::mixed::MixedRecord),
}

impl ScalarOrOperator {
    pub fn scalar(&self) -> Option<Phase8> {
        match self {
            ScalarOrOperator::Scalar(p) => Some(*p),
            ScalarOrOperator::Operator(_) => None,
        }
    }

    pub fn to_record(&self) -> ScalarRecord {
        match self {
            ScalarOrOperator::Scalar(p) => {
                let (a, b) = p.as_pi_fraction();
                ScalarRecord::Scalar {
                    pi_numerator: a,
                    pi_denominator: b,
                }
            }
            ScalarOrOperator::Operator(m) => ScalarRecord::Operator(m.to_record()),
        }
    }
}

/// Declares `m` a scalar iff its X part is an X stabilizer and its phase
/// polynomial is constant on the code space.
pub fn classify(code: &ColorCode, m: &MixedOperator) -> ScalarOrOperator {
    let basis = code.codespace_basis();
    if m.x.len() == code.n() && basis.in_x_rowspace(&m.x) {
        let sub = substitute(basis, &m.theta);
        if sub.is_constant() {
            return ScalarOrOperator::Scalar(Phase8::new(sub.constant_term()));
        }
    }
    ScalarOrOperator::Operator(m.clone())
}

/// `⟨gs| M |gs⟩` for a code with a unique ground state.
pub fn ground_expectation(code: &ColorCode, m: &MixedOperator) -> Result<Cyclotomic> {
    let basis = code.codespace_basis();
    if basis.k() > 0 {
        return Err(Error::DegenerateCode { k: basis.k() });
    }
    if m.x.len() != code.n() {
        return Err(Error::DimensionMismatch {
            expected: code.n(),
            found: m.x.len(),
        });
    }
    if !basis.in_x_rowspace(&m.x) {
        return Ok(Cyclotomic::zero());
    }
    let f = substitute(basis, &m.theta);
    let sum = exponential_sum(&f, basis.r)?;
    Ok(sum * Cyclotomic::inv_pow2(basis.r as u32))
}

/// `Σ_{u ∈ F₂^m} ω^{f(u)}` for `f` over `m` variables.
pub fn exponential_sum(f: &PhasePolynomial, m: usize) -> Result<Cyclotomic> {
    let mut f = f.clone();
    let mut factor = Cyclotomic::one();
    let mut free = m;
    loop {
        let support = f.support();
        for _ in support.len()..free {
            factor = factor * Cyclotomic::from_int(2);
        }
        free = support.len();
        if f.is_constant() {
            return Ok(factor * Cyclotomic::omega_pow(f.constant_term() as i64));
        }
        // a variable occurring only in a linear term c·u sums to (1 + ω^c)
        let lone = support.iter().copied().find(|&i| {
            f.terms()
                .filter(|(k, _)| k.contains(&i))
                .all(|(k, _)| k.len() == 1)
        });
        let Some(i) = lone else { break };
        let c = f
            .terms()
            .find(|(k, _)| k == &[i])
            .map(|(_, c)| c)
            .expect("lone variable without a term");
        if c == 4 {
            return Ok(Cyclotomic::zero());
        }
        factor = factor * (Cyclotomic::one() + Cyclotomic::omega_pow(c as i64));
        f.add_term(&[i], -(c as i64));
        free -= 1;
    }
    let support = f.support();
    if support.len() > ENUMERATION_LIMIT {
        return Err(Error::Resource(format!(
            "exponential sum over {} entangled variables",
            support.len()
        )));
    }
    let local = f.relabel(support.len(), |i| {
        support.binary_search(&i).expect("support variable") as u32
    });
    let s = support.len();
    let counts = (0u64..1 << s)
        .into_par_iter()
        .fold(
            || [0i64; 8],
            |mut acc, bits| {
                let v = BinVec::from_bools(&(0..s).map(|b| bits & (1 << b) != 0).collect::<Vec<_>>());
                acc[local.eval(&v) as usize] += 1;
                acc
            },
        )
        .reduce(
            || [0i64; 8],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let total: Cyclotomic = counts
        .iter()
        .enumerate()
        .map(|(k, &c)| Cyclotomic::from_int(c) * Cyclotomic::omega_pow(k as i64))
        .sum();
    Ok(factor * total)
}
