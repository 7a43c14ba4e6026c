use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::Phase8;

/// Group 3-cocycles of `Z₂³`; indices select components of the arguments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CocycleType {
    I { i: usize },
    II { i: usize, j: usize },
    III { i: usize, j: usize, l: usize },
}

pub type Element = [u8; 3];

fn add(a: Element, b: Element) -> Element {
    [(a[0] + b[0]) % 2, (a[1] + b[1]) % 2, (a[2] + b[2]) % 2]
}

impl CocycleType {
    fn validate(&self) -> Result<()> {
        let ok = match *self {
            CocycleType::I { i } => i < 3,
            CocycleType::II { i, j } => i < 3 && j < 3 && i != j,
            CocycleType::III { i, j, l } => i < 3 && j < 3 && l < 3 && i != j && j != l && i != l,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!("invalid index selection {self:?}")))
        }
    }
}

/// `exp(iπ/2 · a_i (b_j + c_j − [b_j + c_j]))` with `[·]` reduction mod 2.
fn bracket(a: u8, b: u8, c: u8) -> Phase8 {
    let carry = (b + c) - (b + c) % 2;
    Phase8::from_i64(2 * (a * carry) as i64)
}

pub fn evaluate_cocycle(t: CocycleType, a: Element, b: Element, c: Element) -> Result<Phase8> {
    t.validate()?;
    if a.iter().chain(&b).chain(&c).any(|&x| x > 1) {
        return Err(Error::InvalidInput("cocycle arguments must be bits".into()));
    }
    Ok(match t {
        CocycleType::I { i } => bracket(a[i], b[i], c[i]),
        CocycleType::II { i, j } => bracket(a[i], b[j], c[j]),
        CocycleType::III { i, j, l } => Phase8::from_i64(4 * (a[i] * b[j] * c[l]) as i64),
    })
}

/// `(δω)(a,b,c,d)`; equal to one for a cocycle.
pub fn cocycle_coboundary(t: CocycleType, a: Element, b: Element, c: Element, d: Element) -> Result<Phase8> {
    let w = |x, y, z| evaluate_cocycle(t, x, y, z);
    Ok(w(b, c, d)?
        .mul(w(add(a, b), c, d)?.inv())
        .mul(w(a, add(b, c), d)?)
        .mul(w(a, b, add(c, d))?.inv())
        .mul(w(a, b, c)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_three_on_ones() {
        let t = CocycleType::III { i: 0, j: 1, l: 2 };
        assert_eq!(evaluate_cocycle(t, [1, 0, 0], [0, 1, 0], [0, 0, 1]).unwrap(), Phase8::MINUS_ONE);
        assert_eq!(evaluate_cocycle(t, [0; 3], [1; 3], [1; 3]).unwrap(), Phase8::ONE);
        assert!(evaluate_cocycle(CocycleType::III { i: 0, j: 0, l: 2 }, [0; 3], [0; 3], [0; 3]).is_err());
        assert!(evaluate_cocycle(CocycleType::I { i: 3 }, [0; 3], [0; 3], [0; 3]).is_err());
    }
}
