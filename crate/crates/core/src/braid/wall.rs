use serde::Serialize;

use super::{braid_three_loop, braid_two, sixteen_cell_process, LoopProcess};
use crate::code::ColorCode;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct WallContribution {
    pub participants: Vec<String>,
    pub sign: i8,
}

/// Braiding across the `R̄₃` wall on the 16-cell, where fluxes pick up an SPT
/// loop: `m_K → m_K s_K`.
#[derive(Clone, Debug, Serialize)]
pub struct WallReport {
    /// `θ(e_A, m_BC)` before and after the wall, and their product.
    pub pair_before: i8,
    pub pair_after: i8,
    pub pair_total: i8,
    /// `θ(a,a,a)`, `θ(a,a,b)`, `θ(a,b,a)`, `θ(a,b,c)` for the composites
    /// `a = m_BC s_BC`, `b = m_CA s_CA`, `c = m_AB s_AB`.
    pub composite_triples: Vec<WallContribution>,
    /// Every choice of `m` or `s` in each slot of the three-loop triple.
    pub patterns: Vec<WallContribution>,
    /// Product of `patterns`.
    pub pattern_product: i8,
    /// `θ(c, a, b)` computed directly.
    pub triple_direct: i8,
    /// The same triple with the SPT loop on `m_BC` dropped.
    pub triple_without_s_bc: i8,
}

impl WallReport {
    /// The wall does not change any braiding phase.
    pub fn is_trivial(&self) -> bool {
        self.pair_total == 1
            && self.composite_triples.iter().all(|c| c.sign == 1)
            && self.triple_direct == 1
            && self.pattern_product == self.triple_direct
    }
}

fn sign_of(r: &super::BraidResult) -> Result<i8> {
    r.sign()
        .ok_or_else(|| Error::Configuration(format!("phase {} is not ±1", r.phase.exponent())))
}

pub fn wall_braiding_triviality(code: &ColorCode) -> Result<WallReport> {
    let p = |n: &str| sixteen_cell_process(code, n);
    let e_a = p("e_A")?;
    let (m_bc, s_bc) = (p("m_BC")?, p("s_BC")?);
    let pair_before = sign_of(&braid_two(code, &e_a, &m_bc)?)?;
    let pair_after = sign_of(&braid_two(code, &e_a, &m_bc.times(&s_bc)?)?)?;

    let slots: Vec<(LoopProcess, LoopProcess)> = [("m_AB", "s_AB"), ("m_BC", "s_BC"), ("m_CA", "s_CA")]
        .iter()
        .map(|(m, s)| Ok((p(m)?, p(s)?)))
        .collect::<Result<_>>()?;
    let mut patterns = Vec::new();
    let mut pattern_product = 1i8;
    for mask in 0..8u8 {
        let pick: Vec<&LoopProcess> = (0..3)
            .map(|i| if mask >> i & 1 == 1 { &slots[i].1 } else { &slots[i].0 })
            .collect();
        let sign = sign_of(&braid_three_loop(code, pick[0], pick[1], pick[2])?)?;
        pattern_product *= sign;
        patterns.push(WallContribution {
            participants: pick.iter().map(|x| x.label.clone()).collect(),
            sign,
        });
    }
    let comp: Vec<LoopProcess> = slots.iter().map(|(m, s)| m.times(s)).collect::<Result<_>>()?;
    let triple_direct = sign_of(&braid_three_loop(code, &comp[0], &comp[1], &comp[2])?)?;
    let (c, a, b) = (&comp[0], &comp[1], &comp[2]);
    let mut composite_triples = Vec::new();
    for (names, t) in [("aaa", [a, a, a]), ("aab", [a, a, b]), ("aba", [a, b, a]), ("abc", [a, b, c])] {
        composite_triples.push(WallContribution {
            participants: names.chars().map(String::from).collect(),
            sign: sign_of(&braid_three_loop(code, t[0], t[1], t[2])?)?,
        });
    }
    let triple_without_s_bc = sign_of(&braid_three_loop(code, &comp[0], &slots[1].0, &comp[2])?)?;
    Ok(WallReport {
        pair_before,
        pair_after,
        pair_total: pair_before * pair_after,
        composite_triples,
        patterns,
        pattern_product,
        triple_direct,
        triple_without_s_bc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::build_color_code;
    use crate::colex::build_16cell_colex;

    #[test]
    fn r2_wall_is_transparent_to_braiding() {
        let code = build_color_code(build_16cell_colex().unwrap()).unwrap();
        let r = wall_braiding_triviality(&code).unwrap();
        assert!(r.is_trivial());
        assert_eq!(r.triple_without_s_bc, -1);
        let minus: Vec<_> = r.patterns.iter().filter(|c| c.sign == -1).map(|c| c.participants.join(",")).collect();
        assert_eq!(minus, ["s_AB,m_BC,m_CA", "m_AB,s_BC,m_CA"]);
    }
}
