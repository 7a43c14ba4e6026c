//! Color-code stabilizer data derived from a colex.

use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::colex::{Color, ColorSet, Colex};
use crate::error::{Error, Result};
use crate::f2::{BinMat, BinVec, Echelon};
use crate::pauli::Pauli;

/// CSS code with X checks on top cells and Z checks on plaquettes.
#[derive(Debug)]
pub struct ColorCode {
    pub colex: Arc<Colex>,
    /// Colex cell ids of the X-check rows.
    pub x_cells: Vec<usize>,
    /// Colex cell ids of the Z-check rows.
    pub z_cells: Vec<usize>,
    pub hx: BinMat,
    pub hz: BinMat,
    basis: OnceLock<CodespaceBasis>,
}

/// Basis of `C = ker H_Z`: independent X-check rows first, then logical
/// representatives.
#[derive(Clone, Debug)]
pub struct CodespaceBasis {
    pub generator_rows: Vec<usize>,
    pub vectors: Vec<BinVec>,
    pub r: usize,
    /// Each X-check row as a combination of the generator rows.
    pub row_in_generators: Vec<BinVec>,
    x_echelon: Echelon,
    z_echelon: Echelon,
}

impl CodespaceBasis {
    pub fn k(&self) -> usize {
        self.vectors.len() - self.r
    }

    pub fn generators(&self) -> &[BinVec] {
        &self.vectors[..self.r]
    }

    pub fn logicals(&self) -> &[BinVec] {
        &self.vectors[self.r..]
    }

    /// Coordinates of `x` in the X-check row space, as generator coefficients.
    pub fn x_coordinates(&self, x: &BinVec) -> Option<BinVec> {
        self.x_echelon.solve(x)
    }

    pub fn in_x_rowspace(&self, x: &BinVec) -> bool {
        self.x_echelon.contains(x)
    }

    pub fn in_z_rowspace(&self, z: &BinVec) -> bool {
        self.z_echelon.contains(z)
    }
}

/// `|ψ⟩ = 2^{-r/2} Σ_u |uG⟩`.
#[derive(Clone, Debug, Serialize)]
pub struct GroundState {
    pub g: BinMat,
    pub generator_rows: Vec<usize>,
    pub r: usize,
}

impl GroundState {
    /// Number of basis states in the superposition, `2^r`.
    pub fn support_size(&self) -> u128 {
        1u128 << self.r
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Syndrome {
    /// Violated X checks (from the Z part of the operator).
    pub x: BinVec,
    /// Violated Z checks (from the X part of the operator).
    pub z: BinVec,
    pub x_colors: Vec<Color>,
}

impl Syndrome {
    pub fn is_trivial(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// Number of violated X checks of each color.
    pub fn color_counts(&self, palette: usize) -> Vec<usize> {
        let mut counts = vec![0; palette];
        for j in self.x.iter_ones() {
            counts[self.x_colors[j].0 as usize] += 1;
        }
        counts
    }

    /// `N_A ≡ N_B ≡ …` mod 2.
    pub fn parity_ok(&self, palette: usize) -> bool {
        let c = self.color_counts(palette);
        c.iter().all(|n| n % 2 == c[0] % 2)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PauliKind {
    X,
    Z,
}

impl ColorCode {
    pub fn new(colex: Arc<Colex>) -> Result<Self> {
        let n = colex.n_qubits;
        let x_cells = colex.top_cells();
        let z_cells: Vec<usize> = colex.cells_of_rank(2).collect();
        let rows = |ids: &[usize]| {
            BinMat::from_rows(n, ids.iter().map(|&c| colex.support(c)).collect())
        };
        let hx = rows(&x_cells)?;
        let hz = rows(&z_cells)?;
        for (i, xr) in hx.rows().iter().enumerate() {
            for (j, zr) in hz.rows().iter().enumerate() {
                if xr.dot(zr) {
                    return Err(Error::Commutation {
                        x_row: x_cells[i],
                        z_row: z_cells[j],
                    });
                }
            }
        }
        Ok(Self {
            colex,
            x_cells,
            z_cells,
            hx,
            hz,
            basis: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.colex.n_qubits
    }

    pub fn parameters(&self) -> (usize, usize) {
        let b = self.codespace_basis();
        (self.n(), b.k())
    }

    pub fn x_row_color(&self, row: usize) -> Color {
        self.colex.top_color(self.x_cells[row])
    }

    pub fn x_row_of_cell(&self, cell: usize) -> Option<usize> {
        self.x_cells.iter().position(|&c| c == cell)
    }

    pub fn z_row_of_cell(&self, cell: usize) -> Option<usize> {
        self.z_cells.iter().position(|&c| c == cell)
    }

    pub fn codespace_basis(&self) -> &CodespaceBasis {
        self.basis.get_or_init(|| {
            let generator_rows = self.hx.independent_rows();
            let mut vectors: Vec<BinVec> =
                generator_rows.iter().map(|&i| self.hx.row(i).clone()).collect();
            let r = vectors.len();
            let mut ech = Echelon::empty(self.n(), 0);
            for v in &vectors {
                ech.insert(v.clone(), BinVec::zeros(0));
            }
            for v in self.hz.kernel() {
                if ech.insert(v.clone(), BinVec::zeros(0)) {
                    vectors.push(v);
                }
            }
            let g = BinMat::from_rows(self.n(), vectors[..r].to_vec()).unwrap();
            let gens = g.reduce();
            let row_in_generators = self
                .hx
                .rows()
                .iter()
                .map(|row| gens.solve(row).expect("row outside its own span"))
                .collect();
            CodespaceBasis {
                generator_rows,
                r,
                vectors,
                row_in_generators,
                x_echelon: gens,
                z_echelon: self.hz.reduce(),
            }
        })
    }

    pub fn ground_state(&self) -> Result<GroundState> {
        let b = self.codespace_basis();
        if b.k() > 0 {
            return Err(Error::DegenerateCode { k: b.k() });
        }
        Ok(GroundState {
            g: BinMat::from_rows(self.n(), b.generators().to_vec())?,
            generator_rows: b.generator_rows.clone(),
            r: b.r,
        })
    }

    pub fn syndrome_of(&self, p: &Pauli) -> Result<Syndrome> {
        if p.len() != self.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: p.len(),
            });
        }
        Ok(Syndrome {
            x: self.hx.mul_vec(&p.z),
            z: self.hz.mul_vec(&p.x),
            x_colors: (0..self.x_cells.len()).map(|j| self.x_row_color(j)).collect(),
        })
    }

    /// X-check syndrome of a Z-support.
    pub fn x_syndrome_of_support(&self, z: &BinVec) -> BinVec {
        self.hx.mul_vec(z)
    }

    /// `+1`/`−1` if `p` is `±` a stabilizer, `None` otherwise.
    pub fn stabilizer_sign(&self, p: &Pauli) -> Option<i8> {
        let b = self.codespace_basis();
        if !b.in_x_rowspace(&p.x) || !b.in_z_rowspace(&p.z) {
            return None;
        }
        match p.phase {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// Z- or X-type operator on the union of the given cells.
    pub fn string_or_membrane_operator(
        &self,
        colors: ColorSet,
        cells: &[usize],
        kind: PauliKind,
    ) -> Result<Pauli> {
        let (support, _) = self.colex.cell_support(colors, cells)?;
        Ok(match kind {
            PauliKind::X => Pauli::x_on(support),
            PauliKind::Z => Pauli::z_on(support),
        })
    }

    /// Check matrices as `X q…` / `Z q…` lines.
    pub fn to_css_text(&self) -> String {
        let mut s = format!("# {} n={}\n", self.colex.name, self.n());
        for (tag, m) in [("X", &self.hx), ("Z", &self.hz)] {
            for row in m.rows() {
                let qs: Vec<String> = row.iter_ones().map(|q| q.to_string()).collect();
                writeln!(s, "{tag} {}", qs.join(" ")).unwrap();
            }
        }
        s
    }
}

pub fn build_color_code(colex: Colex) -> Result<ColorCode> {
    ColorCode::new(Arc::new(colex))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colex::*;

    fn cells_of(c: &Colex, rank: u8, colors: &str) -> Vec<usize> {
        let cs = ColorSet::parse(colors).unwrap();
        c.cells_of_rank(rank).filter(|&i| c.cells[i].colors == cs).collect()
    }

    #[test]
    fn parameters_of_small_codes() {
        let hex = build_color_code(build_hex_torus(2, 2).unwrap()).unwrap();
        assert_eq!(hex.parameters(), (24, 4));
        let cube = build_color_code(build_octahedral_sphere(0).unwrap()).unwrap();
        assert_eq!(cube.parameters(), (8, 0));
        assert_eq!(cube.ground_state().unwrap().r, 4);
        let c16 = build_color_code(build_16cell_colex().unwrap()).unwrap();
        assert_eq!(c16.parameters(), (16, 0));
        assert!(hex.ground_state().is_err());
    }

    #[test]
    fn single_z_excites_one_of_each_color() {
        let hex = build_color_code(build_hex_torus(2, 2).unwrap()).unwrap();
        for q in 0..hex.n() {
            let s = hex.syndrome_of(&Pauli::single_z(hex.n(), q)).unwrap();
            assert_eq!(s.color_counts(3), vec![1, 1, 1]);
        }
        assert!(hex.syndrome_of(&Pauli::identity(24)).unwrap().is_trivial());
    }

    #[test]
    fn open_strings_have_endpoint_excitations() {
        let hex = build_color_code(build_hex_torus(2, 2).unwrap()).unwrap();
        let e = cells_of(&hex.colex, 1, "AB")[0];
        let p = hex
            .string_or_membrane_operator(ColorSet::parse("AB").unwrap(), &[e], PauliKind::Z)
            .unwrap();
        let s = hex.syndrome_of(&p).unwrap();
        assert_eq!(s.color_counts(3), vec![0, 0, 2]);

        let c16 = build_color_code(build_16cell_colex().unwrap()).unwrap();
        let e = cells_of(&c16.colex, 1, "ABC")[0];
        let p = c16
            .string_or_membrane_operator(ColorSet::parse("ABC").unwrap(), &[e], PauliKind::Z)
            .unwrap();
        assert_eq!(c16.syndrome_of(&p).unwrap().color_counts(4), vec![0, 0, 0, 2]);
    }

    #[test]
    fn css_export_lists_all_rows() {
        let cube = build_color_code(build_octahedral_sphere(0).unwrap()).unwrap();
        let text = cube.to_css_text();
        assert_eq!(text.lines().filter(|l| l.starts_with("X ")).count(), 6);
        assert_eq!(text.lines().filter(|l| l.starts_with("Z ")).count(), 6);
    }
}
