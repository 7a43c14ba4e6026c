use serde::Serialize;

use super::{color_code_anyon_model, Label, Wall};
use crate::code::ColorCode;
use crate::colex::{Color, ColorSet, Colex};
use crate::error::{Error, Result};
use crate::f2::BinVec;
use crate::pauli::Pauli;

/// A single-qubit Clifford by its action on `X` and `Z`; each image is
/// `i^phase X^x Z^z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LocalClifford {
    pub x_image: (bool, bool, u8),
    pub z_image: (bool, bool, u8),
}

const X: (bool, bool, u8) = (true, false, 0);
const Z: (bool, bool, u8) = (false, true, 0);
const Y: (bool, bool, u8) = (true, true, 1);
const MINUS_Y: (bool, bool, u8) = (true, true, 3);

fn single(img: (bool, bool, u8)) -> Pauli {
    Pauli::new(BinVec::from_bools(&[img.0]), BinVec::from_bools(&[img.1]), img.2).expect("one qubit")
}

impl LocalClifford {
    pub const IDENTITY: LocalClifford = LocalClifford { x_image: X, z_image: Z };

    /// Image of `i^phase X^x Z^z`.
    pub fn conjugate(&self, x: bool, z: bool, phase: u8) -> (bool, bool, u8) {
        let mut p = Pauli::new(BinVec::zeros(1), BinVec::zeros(1), phase).expect("one qubit");
        if x {
            p = p.mul(&single(self.x_image)).expect("one qubit");
        }
        if z {
            p = p.mul(&single(self.z_image)).expect("one qubit");
        }
        (p.x.get(0), p.z.get(0), p.phase)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LocalClifford) -> LocalClifford {
        let (x, z, p) = other.x_image;
        let (a, b, q) = other.z_image;
        LocalClifford {
            x_image: self.conjugate(x, z, p),
            z_image: self.conjugate(a, b, q),
        }
    }
}

/// A transversal gate acting as `on_t` on `T` and `on_tc` on `T^c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalGate {
    pub name: String,
    pub on_t: LocalClifford,
    pub on_tc: LocalClifford,
}

impl TransversalGate {
    pub fn identity() -> Self {
        Self::uniform("I", LocalClifford::IDENTITY)
    }

    fn uniform(name: &str, g: LocalClifford) -> Self {
        Self {
            name: name.into(),
            on_t: g,
            on_tc: g,
        }
    }

    pub fn hadamard() -> Self {
        Self::uniform("H", LocalClifford { x_image: Z, z_image: X })
    }

    /// `R₂` on `T`, `R₂†` on `T^c`.
    pub fn r2() -> Self {
        Self {
            name: "R2".into(),
            on_t: LocalClifford { x_image: Y, z_image: Z },
            on_tc: LocalClifford {
                x_image: MINUS_Y,
                z_image: Z,
            },
        }
    }

    /// `X → Y → Z → X` on `T`; on `T^c` the image of `X` is `−Y`.
    pub fn t() -> Self {
        Self {
            name: "T".into(),
            on_t: LocalClifford { x_image: Y, z_image: X },
            on_tc: LocalClifford {
                x_image: MINUS_Y,
                z_image: X,
            },
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "I" | "identity" => Ok(Self::identity()),
            "H" | "hadamard" => Ok(Self::hadamard()),
            "R2" | "r2" => Ok(Self::r2()),
            "T" | "t" => Ok(Self::t()),
            _ => Err(Error::Unknown(format!("gate {name}"))),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &TransversalGate) -> TransversalGate {
        TransversalGate {
            name: format!("{}∘{}", self.name, other.name),
            on_t: self.on_t.compose(&other.on_t),
            on_tc: self.on_tc.compose(&other.on_tc),
        }
    }
}

/// `U P U†` for the transversal gate `U`.
pub fn conjugate_transversal(colex: &Colex, gate: &TransversalGate, p: &Pauli) -> Pauli {
    let n = p.len();
    let (mut x, mut z) = (BinVec::zeros(n), BinVec::zeros(n));
    let mut phase = p.phase as u32;
    for q in 0..n {
        let (px, pz) = (p.x.get(q), p.z.get(q));
        if !px && !pz {
            continue;
        }
        let g = if colex.sign(q) > 0 { &gate.on_t } else { &gate.on_tc };
        let (a, b, ph) = g.conjugate(px, pz, 0);
        x.set(q, a);
        z.set(q, b);
        phase += ph as u32;
    }
    Pauli::new(x, z, (phase % 4) as u8).expect("lengths agree")
}

#[derive(Clone, Debug, Serialize)]
pub struct AnyonAutomorphism {
    pub gate: String,
    pub wall: Wall,
    pub actions: Vec<String>,
}

/// Conjugates short e- and m-strings of each color by the gate and reads the
/// label at their endpoints.
pub fn automorphism_from_gate(code: &ColorCode, gate: &TransversalGate) -> Result<AnyonAutomorphism> {
    let colex = &code.colex;
    if colex.dim != 2 {
        return Err(Error::InvalidInput("gate automorphisms are read on 2D codes".into()));
    }
    for (m, make) in [(&code.hx, Pauli::x_on as fn(BinVec) -> Pauli), (&code.hz, Pauli::z_on)] {
        for row in m.rows() {
            let img = conjugate_transversal(colex, gate, &make(row.clone()));
            if code.stabilizer_sign(&img) != Some(1) {
                return Err(Error::Configuration(format!(
                    "{} does not preserve the code space",
                    gate.name
                )));
            }
        }
    }
    let model = color_code_anyon_model(2)?;
    let mut images = vec![0 as Label; 4];
    // (color, e bit, m bit)
    for (color, e_bit, m_bit) in [(Color::A, 0usize, 2usize), (Color::B, 1, 3)] {
        let edge_colors = ColorSet::single(color).complement(3);
        let edge = colex
            .cells_of_rank(1)
            .find(|&e| colex.cells[e].colors == edge_colors)
            .ok_or_else(|| Error::InvalidLattice(format!("no {edge_colors} edge")))?;
        let support = colex.support(edge);
        for (bit, op) in [(e_bit, Pauli::z_on(support.clone())), (m_bit, Pauli::x_on(support.clone()))] {
            let img = conjugate_transversal(colex, gate, &op);
            images[bit] = read_label(code, &img, &support, color, e_bit, m_bit)?;
        }
    }
    let wall = Wall { images };
    Ok(AnyonAutomorphism {
        gate: gate.name.clone(),
        actions: wall.actions(&model),
        wall,
    })
}

fn read_label(code: &ColorCode, p: &Pauli, support: &BinVec, color: Color, e_bit: usize, m_bit: usize) -> Result<Label> {
    let colex = &code.colex;
    let ends: Vec<usize> = support
        .iter_ones()
        .map(|q| colex.top_cell_at(q, color).expect("every qubit has a cell of each color"))
        .collect();
    if ends.len() != 2 || ends[0] == ends[1] {
        return Err(Error::InvalidLattice("string endpoints coincide".into()));
    }
    let charges: Vec<usize> = code.hx.mul_vec(&p.z).iter_ones().map(|r| code.x_cells[r]).collect();
    let fluxes: Vec<usize> = code.hz.mul_vec(&p.x).iter_ones().map(|r| code.z_cells[r]).collect();
    if let Some(&cell) = charges.iter().chain(&fluxes).find(|c| !ends.contains(c)) {
        return Err(Error::StrayExcitation { cell });
    }
    let e = charges.contains(&ends[0]);
    let m = fluxes.contains(&ends[0]);
    if e != charges.contains(&ends[1]) || m != fluxes.contains(&ends[1]) {
        return Err(Error::Configuration("conjugated string is not string-like".into()));
    }
    Ok((e as Label) << e_bit | (m as Label) << m_bit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anyons::{enumerate_transparent_walls, reference_walls};
    use crate::code::build_color_code;
    use crate::colex::build_hex_torus;

    #[test]
    fn gates_match_reference_actions() {
        let code = build_color_code(build_hex_torus(2, 2).unwrap()).unwrap();
        let refs = reference_walls().unwrap();
        let h = automorphism_from_gate(&code, &TransversalGate::hadamard()).unwrap();
        assert_eq!(h.wall, refs[1].1);
        let t = automorphism_from_gate(&code, &TransversalGate::t()).unwrap();
        assert_eq!(t.wall, refs[0].1);
        let r2 = automorphism_from_gate(&code, &TransversalGate::r2()).unwrap();
        assert!(r2.actions.contains(&"(m_A|e_A m_A)".to_string()));
        assert!(r2.actions.contains(&"(e_A|e_A)".to_string()));
        let id = automorphism_from_gate(&code, &TransversalGate::identity()).unwrap();
        assert_eq!(id.wall, Wall::identity(4));
        let walls = enumerate_transparent_walls(&crate::anyons::color_code_anyon_model(2).unwrap());
        for a in [&h, &t, &r2] {
            assert!(walls.contains(&a.wall));
        }
    }

    #[test]
    fn composition_is_multiplicative() {
        let code = build_color_code(build_hex_torus(2, 2).unwrap()).unwrap();
        let gates = [TransversalGate::hadamard(), TransversalGate::r2(), TransversalGate::t()];
        for g1 in &gates {
            for g2 in &gates {
                let m1 = automorphism_from_gate(&code, g1).unwrap().wall;
                let m2 = automorphism_from_gate(&code, g2).unwrap().wall;
                let m12 = automorphism_from_gate(&code, &g1.compose(g2)).unwrap().wall;
                assert_eq!(m12, m1.compose(&m2), "{} {}", g1.name, g2.name);
            }
        }
    }
}
