use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::{Color, ColorSet, Colex};
use crate::error::{Error, Result};
use crate::f2::BinVec;

#[derive(Clone, Debug, Serialize)]
pub struct Region {
    pub color: Color,
    pub cells: Vec<usize>,
    pub v: BinVec,
}

/// A qubit of the region whose remaining top cells all lie on the boundary.
/// In 2D it is an edge of the boundary cycle, in 3D a triangle of `∂V*`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundaryLink {
    pub qubit: usize,
    /// Indices into `BoundaryLattice::cells`, ordered by color.
    pub nodes: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundaryLattice {
    pub dim: usize,
    /// Top cells of the other colors that partially overlap the region.
    pub cells: Vec<usize>,
    pub colors: Vec<Color>,
    pub links: Vec<BoundaryLink>,
    /// 2D: boundary nodes in cyclic order, when they form one alternating cycle.
    pub cycle: Option<Vec<usize>>,
    pub degenerate: bool,
}

impl BoundaryLattice {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn node_of_cell(&self, cell: usize) -> Option<usize> {
        self.cells.iter().position(|&c| c == cell)
    }

    /// Dual edges of `∂V*` with the triangles (link indices) containing them.
    pub fn dual_edges(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut edges: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (li, link) in self.links.iter().enumerate() {
            let n = &link.nodes;
            for i in 0..n.len() {
                for j in i + 1..n.len() {
                    let e = (n[i].min(n[j]), n[i].max(n[j]));
                    edges.entry(e).or_default().push(li);
                }
            }
        }
        edges
    }
}

/// Builds the region spanned by top cells of one color and its boundary.
pub fn region_and_boundary(
    colex: &Colex,
    color: Color,
    cell_ids: &[usize],
) -> Result<(Region, BoundaryLattice)> {
    if cell_ids.is_empty() {
        return Err(Error::InvalidInput("region needs at least one cell".into()));
    }
    let d = colex.dim;
    let mut v = BinVec::zeros(colex.n_qubits);
    let mut cells: Vec<usize> = cell_ids.to_vec();
    cells.sort_unstable();
    cells.dedup();
    for &c in &cells {
        let cell = colex
            .cells
            .get(c)
            .ok_or_else(|| Error::InvalidInput(format!("no cell {c}")))?;
        if cell.rank as usize != d || cell.colors != ColorSet::single(color) {
            return Err(Error::InvalidInput(format!(
                "cell {c} is not a top cell of color {color}"
            )));
        }
        for &q in &cell.qubits {
            v.set(q, true);
        }
    }
    if !connected(colex, &v) {
        return Err(Error::InvalidInput("region is disconnected".into()));
    }

    let mut boundary: Vec<usize> = Vec::new();
    for c in colex.top_cells() {
        if colex.top_color(c) == color {
            continue;
        }
        let qs = &colex.cells[c].qubits;
        let inside = qs.iter().filter(|&&q| v.get(q)).count();
        if inside > 0 && inside < qs.len() {
            boundary.push(c);
        }
    }
    let index: BTreeMap<usize, usize> = boundary.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut links = Vec::new();
    for q in v.iter_ones() {
        let others: Vec<usize> = (0..colex.palette() as u8)
            .map(Color)
            .filter(|&c| c != color)
            .filter_map(|c| colex.top_cell_at(q, c))
            .collect();
        if others.len() == d && others.iter().all(|c| index.contains_key(c)) {
            links.push(BoundaryLink {
                qubit: q,
                nodes: others.iter().map(|c| index[c]).collect(),
            });
        }
    }
    let colors: Vec<Color> = boundary.iter().map(|&c| colex.top_color(c)).collect();
    let mut lattice = BoundaryLattice {
        dim: d,
        cells: boundary,
        colors,
        links,
        cycle: None,
        degenerate: false,
    };
    if d == 2 {
        lattice.cycle = boundary_cycle(&lattice);
        lattice.degenerate = lattice.cycle.is_none() && !lattice.is_empty();
    } else {
        lattice.degenerate = !lattice.is_empty() && !is_sphere(&lattice);
    }
    Ok((Region { color, cells, v }, lattice))
}

fn connected(colex: &Colex, v: &BinVec) -> bool {
    let Some(start) = v.first_one() else {
        return false;
    };
    let adj = colex.edge_neighbors();
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if v.get(w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == v.weight()
}

/// Orders the boundary nodes around a single cycle whose colors alternate.
fn boundary_cycle(b: &BoundaryLattice) -> Option<Vec<usize>> {
    let n = b.len();
    let mut adj = vec![Vec::new(); n];
    for link in &b.links {
        let (x, y) = (link.nodes[0], link.nodes[1]);
        adj[x].push(y);
        adj[y].push(x);
    }
    if n < 2 || adj.iter().any(|a| a.len() != 2) {
        return None;
    }
    let mut order = vec![0];
    let mut prev = usize::MAX;
    let mut cur = 0;
    loop {
        let next = if adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
        if next == 0 {
            break;
        }
        if order.contains(&next) {
            return None;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return None;
    }
    let alternates = (0..n).all(|i| b.colors[order[i]] != b.colors[order[(i + 1) % n]]);
    alternates.then_some(order)
}

fn is_sphere(b: &BoundaryLattice) -> bool {
    let edges = b.dual_edges();
    if edges.values().any(|ts| ts.len() != 2) {
        return false;
    }
    let used: BTreeSet<usize> = b.links.iter().flat_map(|l| l.nodes.iter().copied()).collect();
    let chi = used.len() as i64 - edges.len() as i64 + b.links.len() as i64;
    let colored = b.links.iter().all(|l| {
        let cs: BTreeSet<Color> = l.nodes.iter().map(|&i| b.colors[i]).collect();
        cs.len() == l.nodes.len()
    });
    chi == 2 && colored && used.len() == b.len()
}
