//! Lattice builders.
//!
//! Each colex is obtained as the dual of a colored triangulation: qubits are
//! the top simplices, and a dual simplex with vertex set `σ` becomes a colex
//! cell of rank `d + 1 − |σ|` colored by the colors of `σ`. On periodic
//! lattices a simplex is identified by its lifted vertices modulo
//! translations, so that small tori with repeated vertex sets still produce
//! distinct cells.

use std::collections::BTreeMap;

use super::{two_color, Cell, Colex, ColorSet, Color, Manifold};
use crate::error::{Error, Result};

type Point = [i64; 4];

struct Triangulation<'a> {
    name: String,
    manifold: Manifold,
    tops: Vec<Vec<Point>>,
    canon: &'a dyn Fn(Point) -> Point,
    color: &'a dyn Fn(Point) -> u8,
    label: &'a dyn Fn(Point) -> String,
}

fn sub(a: Point, b: Point) -> Point {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

fn add(a: Point, b: Point) -> Point {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

impl Triangulation<'_> {
    /// Lifted simplex modulo translations.
    fn key(&self, simplex: &[Point]) -> Vec<Point> {
        simplex
            .iter()
            .map(|&v| {
                let shift = sub((self.canon)(v), v);
                let mut t: Vec<Point> = simplex.iter().map(|&w| add(w, shift)).collect();
                t.sort();
                t
            })
            .min()
            .expect("empty simplex")
    }

    fn into_colex(self) -> Result<Colex> {
        let d = self.manifold.dimension();
        let mut cell_map: BTreeMap<(usize, Vec<Point>), Vec<usize>> = BTreeMap::new();
        let mut qubit_labels = Vec::with_capacity(self.tops.len());
        for (q, top) in self.tops.iter().enumerate() {
            if top.len() != d + 1 {
                return Err(Error::InvalidLattice(format!("simplex {q} has {} vertices", top.len())));
            }
            let mut verts = top.clone();
            verts.sort_by_key(|&v| (self.color)(v));
            let colors: Vec<u8> = verts.iter().map(|&v| (self.color)(v)).collect();
            if colors.iter().enumerate().any(|(i, &c)| c as usize != i) {
                return Err(Error::InvalidLattice(format!(
                    "simplex {q} is not properly colored: {colors:?}"
                )));
            }
            qubit_labels.push(
                verts
                    .iter()
                    .map(|&v| (self.label)((self.canon)(v)))
                    .collect::<Vec<_>>()
                    .join("|"),
            );
            for mask in 1u32..(1 << (d + 1)) - 1 {
                let sigma: Vec<Point> = (0..=d)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| verts[i])
                    .collect();
                let rank = d + 1 - sigma.len();
                cell_map
                    .entry((d - rank, self.key(&sigma)))
                    .or_default()
                    .push(q);
            }
        }
        let cells: Vec<Cell> = cell_map
            .into_iter()
            .map(|((_, key), mut qubits)| {
                qubits.sort_unstable();
                let colors = ColorSet::from_colors(key.iter().map(|&v| Color((self.color)(v))));
                let label = key
                    .iter()
                    .map(|&v| (self.label)(v))
                    .collect::<Vec<_>>()
                    .join(",");
                Cell {
                    rank: (d + 1 - key.len()) as u8,
                    colors,
                    label,
                    qubits,
                }
            })
            .collect();
        let n = self.tops.len();
        let provisional = Colex::from_parts(
            self.name.clone(),
            self.manifold,
            n,
            qubit_labels.clone(),
            cells,
            crate::f2::BinVec::zeros(n),
        )?;
        let bip = two_color(n, &provisional.edge_neighbors())
            .ok_or_else(|| Error::InvalidLattice("qubit graph is not bipartite".into()))?;
        let Colex { cells, .. } = provisional;
        let colex = Colex::from_parts(self.name, self.manifold, n, qubit_labels, cells, bip)?;
        let report = colex.validity();
        if !report.is_valid() {
            return Err(Error::InvalidLattice(format!("{}: {report:?}", colex.name)));
        }
        Ok(colex)
    }
}

/// Hexagonal color code on a torus: the dual of the 3-colored triangular
/// lattice, periodic under `d1·(1,1)` and `d2·(−1,2)`.
pub fn build_hex_torus(d1: usize, d2: usize) -> Result<Colex> {
    if d1 == 0 || d2 == 0 {
        return Err(Error::InvalidInput("hex-torus periods must be positive".into()));
    }
    let (d1, d2) = (d1 as i64, d2 as i64);
    let color = |p: Point| (p[0] + 2 * p[1]).rem_euclid(3) as u8;
    // p = (c,0) + a(1,1) + b(−1,2)
    let canon = move |p: Point| {
        let c = (p[0] + 2 * p[1]).rem_euclid(3);
        let b = (p[1] - p[0] + c) / 3;
        let a = p[1] - 2 * b;
        let (a, b) = (a.rem_euclid(d1), b.rem_euclid(d2));
        [c + a - b, a + 2 * b, 0, 0]
    };
    let label = |p: Point| format!("{}:{}", p[0], p[1]);
    let mut tops = Vec::new();
    for c in 0..3 {
        for a in 0..d1 {
            for b in 0..d2 {
                let (i, j) = (c + a - b, a + 2 * b);
                tops.push(vec![[i, j, 0, 0], [i + 1, j, 0, 0], [i, j + 1, 0, 0]]);
                tops.push(vec![[i + 1, j, 0, 0], [i, j + 1, 0, 0], [i + 1, j + 1, 0, 0]]);
            }
        }
    }
    Triangulation {
        name: format!("hex-torus:{d1},{d2}"),
        manifold: Manifold::Torus2,
        tops,
        canon: &canon,
        color: &color,
        label: &label,
    }
    .into_colex()
}

/// Dual of the axis-colored octahedron, each refinement step splitting every
/// triangle into four at the edge midpoints. Refinement 0 is the cube.
pub fn build_octahedral_sphere(refinement: usize) -> Result<Colex> {
    if refinement > 6 {
        return Err(Error::Resource(format!("refinement {refinement} too large")));
    }
    let s = 1i64 << refinement;
    let axis = |i: usize, sign: i64| {
        let mut p = [0; 4];
        p[i] = sign * s;
        p
    };
    let mut colors: BTreeMap<Point, u8> = BTreeMap::new();
    let mut tris: Vec<[Point; 3]> = Vec::new();
    for i in 0..3 {
        colors.insert(axis(i, 1), i as u8);
        colors.insert(axis(i, -1), i as u8);
    }
    for sx in [1, -1] {
        for sy in [1, -1] {
            for sz in [1, -1] {
                tris.push([axis(0, sx), axis(1, sy), axis(2, sz)]);
            }
        }
    }
    for _ in 0..refinement {
        let mut next = Vec::with_capacity(tris.len() * 4);
        for [a, b, c] in tris {
            let mut mid = |p: Point, q: Point| {
                let m = [(p[0] + q[0]) / 2, (p[1] + q[1]) / 2, (p[2] + q[2]) / 2, 0];
                let col = 3 - colors[&p] - colors[&q];
                colors.insert(m, col);
                m
            };
            let (ab, bc, ca) = (mid(a, b), mid(b, c), mid(c, a));
            next.extend([[a, ab, ca], [b, bc, ab], [c, ca, bc], [ab, bc, ca]]);
        }
        tris = next;
    }
    let color = |p: Point| colors[&p];
    let canon = |p: Point| p;
    let label = |p: Point| format!("{}:{}:{}", p[0], p[1], p[2]);
    Triangulation {
        name: format!("octahedral-sphere:{refinement}"),
        manifold: Manifold::Sphere2,
        tops: tris.into_iter().map(|t| t.to_vec()).collect(),
        canon: &canon,
        color: &color,
        label: &label,
    }
    .into_colex()
}

/// Dual of the boundary of the 16-cell: tetrahedra `{s0 e0, s1 e1, s2 e2, s3 e3}`
/// for all sign choices, vertex `±e_i` colored by `i`.
pub fn build_16cell_colex() -> Result<Colex> {
    let mut tops = Vec::new();
    for m in 0..16u32 {
        tops.push(
            (0..4)
                .map(|i| {
                    let mut p = [0; 4];
                    p[i] = if m & (1 << (3 - i)) == 0 { 1 } else { -1 };
                    p
                })
                .collect(),
        );
    }
    let color = |p: Point| p.iter().position(|&x| x != 0).unwrap() as u8;
    let canon = |p: Point| p;
    let label = |p: Point| {
        let i = p.iter().position(|&x| x != 0).unwrap();
        format!("{}{}", if p[i] > 0 { '+' } else { '-' }, i)
    };
    Triangulation {
        name: "16-cell".into(),
        manifold: Manifold::Sphere3,
        tops,
        canon: &canon,
        color: &color,
        label: &label,
    }
    .into_colex()
}

/// Dual of the body-centred-cubic tetrahedral honeycomb on a 3-torus.
///
/// Coordinates are doubled: even points (all coordinates even) carry colors
/// A/B, odd points C/D, and the period along axis `i` is `2·L_i`.
pub fn build_bcc_torus(l1: usize, l2: usize, l3: usize) -> Result<Colex> {
    let ls = [l1 as i64, l2 as i64, l3 as i64];
    if ls.iter().any(|&l| l <= 0 || l % 2 != 0) {
        return Err(Error::InvalidInput(format!(
            "bcc-torus periods must be even and positive, got {l1},{l2},{l3}"
        )));
    }
    let color = |p: Point| {
        let par = p[0].rem_euclid(2);
        let half = ((p[0] + p[1] + p[2] - par) / 2).rem_euclid(2);
        (2 * par + half) as u8
    };
    let canon = move |p: Point| {
        [
            p[0].rem_euclid(2 * ls[0]),
            p[1].rem_euclid(2 * ls[1]),
            p[2].rem_euclid(2 * ls[2]),
            0,
        ]
    };
    let label = |p: Point| format!("{}:{}:{}", p[0], p[1], p[2]);
    let unit = |i: usize, s: i64| {
        let mut e = [0; 4];
        e[i] = s;
        e
    };
    let mut tops = Vec::new();
    for x in 0..ls[0] {
        for y in 0..ls[1] {
            for z in 0..ls[2] {
                let p = [2 * x, 2 * y, 2 * z, 0];
                for j in 0..3 {
                    let p2 = add(p, unit(j, 2));
                    for k in (0..3).filter(|&k| k != j) {
                        let m = 3 - j - k;
                        for sm in [1, -1] {
                            let q = add(add(add(p, unit(j, 1)), unit(k, -1)), unit(m, sm));
                            tops.push(vec![p, p2, q, add(q, unit(k, 2))]);
                        }
                    }
                }
            }
        }
    }
    Triangulation {
        name: format!("bcc-torus:{l1},{l2},{l3}"),
        manifold: Manifold::Torus3,
        tops,
        canon: &canon,
        color: &color,
        label: &label,
    }
    .into_colex()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_counts() {
        for (d1, d2) in [(1, 1), (2, 2), (1, 3), (3, 2)] {
            let c = build_hex_torus(d1, d2).unwrap();
            assert_eq!(c.n_qubits, 6 * d1 * d2);
            assert_eq!(c.count_rank(2), 3 * d1 * d2);
            assert_eq!(c.euler_characteristic(), 0);
            for col in 0..3 {
                let n = c
                    .top_cells()
                    .into_iter()
                    .filter(|&p| c.top_color(p) == Color(col))
                    .count();
                assert_eq!(n, d1 * d2);
            }
        }
        assert!(build_hex_torus(0, 1).is_err());
    }

    #[test]
    fn octahedral_counts() {
        let cube = build_octahedral_sphere(0).unwrap();
        assert_eq!((cube.n_qubits, cube.count_rank(2), cube.count_rank(1)), (8, 6, 12));
        assert_eq!(build_octahedral_sphere(1).unwrap().n_qubits, 32);
        assert_eq!(build_octahedral_sphere(2).unwrap().n_qubits, 128);
    }

    #[test]
    fn sixteen_cell_counts() {
        let c = build_16cell_colex().unwrap();
        assert_eq!(c.n_qubits, 16);
        assert_eq!(c.count_rank(3), 8);
        assert_eq!(c.count_rank(2), 24);
        assert_eq!(c.count_rank(1), 32);
        assert_eq!(c.bipartition.weight(), 8);
    }

    #[test]
    fn bcc_counts_and_parity() {
        let c = build_bcc_torus(2, 2, 2).unwrap();
        assert_eq!(c.n_qubits, 96);
        assert!(c.validity().is_valid());
        assert_eq!(build_bcc_torus(2, 2, 4).unwrap().n_qubits, 192);
        assert!(build_bcc_torus(2, 3, 2).is_err());
    }
}
