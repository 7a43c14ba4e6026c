//! Colorable cell complexes ("colexes") on closed 2- and 3-manifolds.
//!
//! Qubits sit on the vertices of the colex. A colex is stored by its cells:
//! rank-1 edges, rank-2 plaquettes and (in 3D) rank-3 volumes, each carrying
//! a color set and the sorted list of qubits on its boundary. The top-rank
//! cells carry a single color; a lower-rank cell carries the colors of the
//! top cells that meet along it.

mod builders;
mod io;
mod region;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::f2::BinVec;

pub use builders::{build_16cell_colex, build_bcc_torus, build_hex_torus, build_octahedral_sphere};
pub use region::{region_and_boundary, BoundaryLattice, BoundaryLink, Region};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Color(pub u8);

impl Color {
    pub const A: Color = Color(0);
    pub const B: Color = Color(1);
    pub const C: Color = Color(2);
    pub const D: Color = Color(3);

    pub fn letter(self) -> char {
        (b'A' + self.0) as char
    }

    pub fn parse(ch: char) -> Result<Color> {
        match ch {
            'A'..='D' => Ok(Color(ch as u8 - b'A')),
            _ => Err(Error::Parse(format!("unknown color {ch:?}"))),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A set of colors as a bitmask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColorSet(pub u8);

impl ColorSet {
    pub fn single(c: Color) -> Self {
        ColorSet(1 << c.0)
    }

    pub fn from_colors<I: IntoIterator<Item = Color>>(it: I) -> Self {
        ColorSet(it.into_iter().fold(0, |m, c| m | (1 << c.0)))
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 & (1 << c.0) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn colors(self) -> impl Iterator<Item = Color> {
        (0..4u8).filter(move |i| self.0 & (1 << i) != 0).map(Color)
    }

    /// Colors of `all` (a palette of `d+1` colors) not in this set.
    pub fn complement(self, palette: usize) -> ColorSet {
        ColorSet(!self.0 & ((1u8 << palette) - 1))
    }

    pub fn parse(s: &str) -> Result<ColorSet> {
        if s.is_empty() {
            return Err(Error::Parse("empty color set".into()));
        }
        let mut m = 0u8;
        for ch in s.chars() {
            m |= 1 << Color::parse(ch)?.0;
        }
        Ok(ColorSet(m))
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.colors() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Manifold {
    Torus2,
    Sphere2,
    Sphere3,
    Torus3,
}

impl Manifold {
    pub fn dimension(self) -> usize {
        match self {
            Manifold::Torus2 | Manifold::Sphere2 => 2,
            Manifold::Sphere3 | Manifold::Torus3 => 3,
        }
    }

    pub fn euler_characteristic(self) -> i64 {
        match self {
            Manifold::Sphere2 => 2,
            _ => 0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Manifold::Torus2 => "torus2",
            Manifold::Sphere2 => "sphere2",
            Manifold::Sphere3 => "sphere3",
            Manifold::Torus3 => "torus3",
        }
    }

    pub fn parse(s: &str) -> Result<Manifold> {
        Ok(match s {
            "torus2" => Manifold::Torus2,
            "sphere2" => Manifold::Sphere2,
            "sphere3" => Manifold::Sphere3,
            "torus3" => Manifold::Torus3,
            _ => return Err(Error::Parse(format!("unknown manifold {s:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub rank: u8,
    pub colors: ColorSet,
    /// Geometric tag from the builder, e.g. the dual vertices it came from.
    pub label: String,
    pub qubits: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colex {
    pub name: String,
    pub dim: usize,
    pub manifold: Manifold,
    pub n_qubits: usize,
    pub qubit_labels: Vec<String>,
    pub cells: Vec<Cell>,
    /// Set bits mark the class `T^c` of the vertex bipartition.
    pub bipartition: BinVec,
    #[serde(skip)]
    incidence: Vec<Vec<usize>>,
}

/// Outcome of the structural checks run on every built colex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub valence_ok: bool,
    pub coloring_ok: bool,
    pub bipartite_ok: bool,
    pub euler_characteristic: i64,
    pub euler_ok: bool,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.valence_ok && self.coloring_ok && self.bipartite_ok && self.euler_ok
    }
}

impl Colex {
    pub fn from_parts(
        name: String,
        manifold: Manifold,
        n_qubits: usize,
        qubit_labels: Vec<String>,
        cells: Vec<Cell>,
        bipartition: BinVec,
    ) -> Result<Self> {
        let dim = manifold.dimension();
        if bipartition.len() != n_qubits {
            return Err(Error::DimensionMismatch {
                expected: n_qubits,
                found: bipartition.len(),
            });
        }
        if qubit_labels.len() != n_qubits {
            return Err(Error::DimensionMismatch {
                expected: n_qubits,
                found: qubit_labels.len(),
            });
        }
        let mut incidence = vec![Vec::new(); n_qubits];
        for (ci, cell) in cells.iter().enumerate() {
            if cell.rank == 0 || cell.rank as usize > dim {
                return Err(Error::InvalidLattice(format!("cell {ci} has rank {}", cell.rank)));
            }
            for &q in &cell.qubits {
                if q >= n_qubits {
                    return Err(Error::InvalidLattice(format!("cell {ci} names qubit {q}")));
                }
                incidence[q].push(ci);
            }
        }
        Ok(Self {
            name,
            dim,
            manifold,
            n_qubits,
            qubit_labels,
            cells,
            bipartition,
            incidence,
        })
    }

    pub fn palette(&self) -> usize {
        self.dim + 1
    }

    pub fn cell(&self, id: usize) -> &Cell {
        &self.cells[id]
    }

    pub fn cells_of_rank(&self, rank: u8) -> impl Iterator<Item = usize> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(move |(_, c)| c.rank == rank)
            .map(|(i, _)| i)
    }

    pub fn top_cells(&self) -> Vec<usize> {
        self.cells_of_rank(self.dim as u8).collect()
    }

    pub fn count_rank(&self, rank: u8) -> usize {
        self.cells_of_rank(rank).count()
    }

    /// Cells containing qubit `q`.
    pub fn cells_at(&self, q: usize) -> &[usize] {
        &self.incidence[q]
    }

    /// The top cell of color `c` containing qubit `q`.
    pub fn top_cell_at(&self, q: usize, c: Color) -> Option<usize> {
        self.incidence[q].iter().copied().find(|&ci| {
            let cell = &self.cells[ci];
            cell.rank as usize == self.dim && cell.colors == ColorSet::single(c)
        })
    }

    pub fn top_color(&self, cell: usize) -> Color {
        self.cells[cell]
            .colors
            .colors()
            .next()
            .expect("cell without color")
    }

    pub fn support(&self, cell: usize) -> BinVec {
        BinVec::from_indices(self.n_qubits, self.cells[cell].qubits.iter().copied())
    }

    pub fn find_cell(&self, rank: u8, label: &str) -> Option<usize> {
        self.cells
            .iter()
            .position(|c| c.rank == rank && c.label == label)
    }

    pub fn find_qubit(&self, label: &str) -> Option<usize> {
        self.qubit_labels.iter().position(|l| l == label)
    }

    /// +1 on `T`, −1 on `T^c`.
    pub fn sign(&self, q: usize) -> i64 {
        if self.bipartition.get(q) {
            -1
        } else {
            1
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = self.n_qubits as i64;
        for cell in &self.cells {
            chi += if cell.rank % 2 == 0 { 1 } else { -1 };
        }
        chi
    }

    pub fn validity(&self) -> ValidityReport {
        let d = self.dim;
        let mut valence_ok = true;
        let mut coloring_ok = true;
        for cell in &self.cells {
            if cell.colors.len() != d + 1 - cell.rank as usize {
                coloring_ok = false;
            }
            if cell.rank == 1 && (cell.qubits.len() != 2 || cell.qubits[0] == cell.qubits[1]) {
                valence_ok = false;
            }
        }
        for q in 0..self.n_qubits {
            let edges = self.incidence[q]
                .iter()
                .filter(|&&c| self.cells[c].rank == 1)
                .count();
            if edges != d + 1 {
                valence_ok = false;
            }
            let mut seen = 0u8;
            let mut tops = 0;
            for &ci in &self.incidence[q] {
                let cell = &self.cells[ci];
                if cell.rank as usize == d {
                    tops += 1;
                    seen |= cell.colors.0;
                }
            }
            if tops != d + 1 || seen.count_ones() as usize != d + 1 {
                coloring_ok = false;
            }
        }
        let bipartite_ok = self.cells_of_rank(1).all(|e| {
            let qs = &self.cells[e].qubits;
            qs.len() == 2 && self.bipartition.get(qs[0]) != self.bipartition.get(qs[1])
        });
        let chi = self.euler_characteristic();
        ValidityReport {
            valence_ok,
            coloring_ok,
            bipartite_ok,
            euler_characteristic: chi,
            euler_ok: chi == self.manifold.euler_characteristic(),
        }
    }

    /// Union support of the chosen cells, which must all be of one color set.
    /// Returns the support and whether it is open.
    pub fn cell_support(&self, colors: ColorSet, cells: &[usize]) -> Result<(BinVec, bool)> {
        if cells.is_empty() {
            return Err(Error::InvalidInput("empty cell selection".into()));
        }
        let rank = self.cells[cells[0]].rank;
        let mut support = BinVec::zeros(self.n_qubits);
        for &c in cells {
            let cell = self
                .cells
                .get(c)
                .ok_or_else(|| Error::InvalidInput(format!("no cell {c}")))?;
            if cell.colors != colors || cell.rank != rank {
                return Err(Error::InvalidInput(format!(
                    "cell {c} has colors {} rank {}, expected {colors} rank {rank}",
                    cell.colors, cell.rank
                )));
            }
            // cells of one color set are disjoint
            support.xor_assign(&self.support(c));
        }
        let open = !self.chain_boundary(&support, rank).is_empty();
        Ok((support, open))
    }

    /// Cells witnessing an open chain: edges are tested against top cells,
    /// plaquettes against the other plaquettes.
    pub fn chain_boundary(&self, support: &BinVec, rank: u8) -> Vec<usize> {
        let test_rank = if rank == 1 { self.dim as u8 } else { 2 };
        self.cells_of_rank(test_rank)
            .filter(|&c| {
                self.cells[c]
                    .qubits
                    .iter()
                    .filter(|&&q| support.get(q))
                    .count()
                    % 2
                    == 1
            })
            .collect()
    }

    pub(crate) fn edge_neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_qubits];
        for e in self.cells_of_rank(1) {
            let qs = &self.cells[e].qubits;
            if qs.len() == 2 {
                adj[qs[0]].push(qs[1]);
                adj[qs[1]].push(qs[0]);
            }
        }
        adj
    }
}

/// Proper 2-coloring of the qubit graph, if one exists.
pub(crate) fn two_color(n: usize, adj: &[Vec<usize>]) -> Option<BinVec> {
    let mut side: Vec<Option<bool>> = vec![None; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &w in &adj[u] {
                match side[w] {
                    None => {
                        side[w] = Some(!su);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == su => return None,
                    _ => {}
                }
            }
        }
    }
    Some(BinVec::from_bools(
        &side.into_iter().map(|s| s.unwrap()).collect::<Vec<_>>(),
    ))
}
