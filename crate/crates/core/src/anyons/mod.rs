//! Abelian anyon models over `F₂^m`, their transparent domain walls and the
//! automorphisms induced by transversal Clifford gates.
//!
//! Labels are bitmasks over the named generators. The braiding form is
//! `B(a,b) = (−1)^{aᵀ B b}` and the topological spin is `θ(a) = i^{q(a)}` with
//! `q(a) = Σ s_i a_i + 2 Σ_{i<j} B_ij a_i a_j (mod 4)`.

mod gates;

pub use gates::{automorphism_from_gate, conjugate_transversal, AnyonAutomorphism, LocalClifford, TransversalGate};

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Label = u32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnyonModel {
    pub name: String,
    pub generators: Vec<String>,
    /// Symmetric bit matrix of the braiding form.
    pub braiding: Vec<Vec<u8>>,
    /// Spin exponents of the generators, `θ(g_i) = i^{s_i}`.
    pub spins: Vec<u8>,
    /// Extra names accepted when parsing, e.g. `e_C = e_A e_B`.
    pub aliases: Vec<(String, Label)>,
}

impl AnyonModel {
    pub fn new(name: &str, generators: &[&str], pairs: &[(usize, usize)], spins: Vec<u8>) -> Result<Self> {
        let m = generators.len();
        if m > 8 || spins.len() != m {
            return Err(Error::InvalidInput(format!("model with {m} generators")));
        }
        let mut braiding = vec![vec![0u8; m]; m];
        for &(i, j) in pairs {
            braiding[i][j] ^= 1;
            if i != j {
                braiding[j][i] ^= 1;
            }
        }
        for i in 0..m {
            if braiding[i][i] != spins[i] % 2 {
                return Err(Error::InvalidInput(format!(
                    "spin of {} inconsistent with its self-braiding",
                    generators[i]
                )));
            }
        }
        Ok(Self {
            name: name.into(),
            generators: generators.iter().map(|s| s.to_string()).collect(),
            braiding,
            spins,
            aliases: Vec::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn order(&self) -> usize {
        1 << self.rank()
    }

    /// `aᵀ B b` mod 2; `1` means a braiding phase of `−1`.
    pub fn braid(&self, a: Label, b: Label) -> u8 {
        let mut acc = 0;
        for i in 0..self.rank() {
            if a >> i & 1 == 0 {
                continue;
            }
            for j in 0..self.rank() {
                if b >> j & 1 == 1 {
                    acc ^= self.braiding[i][j];
                }
            }
        }
        acc
    }

    /// Spin exponent `q(a)` mod 4.
    pub fn spin(&self, a: Label) -> u8 {
        let m = self.rank();
        let mut q = 0u32;
        for i in 0..m {
            if a >> i & 1 == 1 {
                q += self.spins[i] as u32;
                for j in i + 1..m {
                    if a >> j & 1 == 1 {
                        q += 2 * self.braiding[i][j] as u32;
                    }
                }
            }
        }
        (q % 4) as u8
    }

    pub fn label_name(&self, a: Label) -> String {
        if a == 0 {
            return "1".into();
        }
        (0..self.rank())
            .filter(|i| a >> i & 1 == 1)
            .map(|i| self.generators[i].as_str())
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses a space-separated product of generator names or aliases.
    pub fn parse_label(&self, s: &str) -> Result<Label> {
        let mut a = 0;
        for tok in s.split([' ', '·', '*']).filter(|t| !t.is_empty()) {
            if tok == "1" {
                continue;
            }
            if let Some(i) = self.generators.iter().position(|g| g == tok) {
                a ^= 1 << i;
            } else if let Some((_, l)) = self.aliases.iter().find(|(n, _)| n == tok) {
                a ^= l;
            } else {
                return Err(Error::Parse(format!("unknown anyon {tok:?} in {}", self.name)));
            }
        }
        Ok(a)
    }

    /// The model stacked with the mirror of `other`; labels are `a | b << m`.
    pub fn folded(&self, other: &AnyonModel) -> AnyonModel {
        let (m, k) = (self.rank(), other.rank());
        let mut braiding = vec![vec![0u8; m + k]; m + k];
        for i in 0..m {
            for j in 0..m {
                braiding[i][j] = self.braiding[i][j];
            }
        }
        for i in 0..k {
            for j in 0..k {
                braiding[m + i][m + j] = other.braiding[i][j];
            }
        }
        let mut generators: Vec<String> = self.generators.iter().map(|g| format!("{g}_l")).collect();
        generators.extend(other.generators.iter().map(|g| format!("{g}_r")));
        let mut spins = self.spins.clone();
        spins.extend(other.spins.iter().map(|s| (4 - s) % 4));
        AnyonModel {
            name: format!("{}|{}", self.name, other.name),
            generators,
            braiding,
            spins,
            aliases: Vec::new(),
        }
    }
}

/// The 2D color-code model on `e_A, e_B, m_A, m_B` (bits 0..4), with
/// `e_C = e_A e_B` and `m_C = m_A m_B`.
pub fn color_code_anyon_model(dimension: usize) -> Result<AnyonModel> {
    if dimension != 2 {
        return Err(Error::InvalidInput(format!(
            "anyon data is only modelled in two dimensions, got {dimension}"
        )));
    }
    let mut model = AnyonModel::new(
        "color-code-2d",
        &["e_A", "e_B", "m_A", "m_B"],
        &[(0, 3), (1, 2)],
        vec![0; 4],
    )?;
    model.aliases = vec![("e_C".into(), 0b0011), ("m_C".into(), 0b1100)];
    Ok(model)
}

pub fn toric_code_model() -> AnyonModel {
    AnyonModel::new("toric", &["e", "m"], &[(0, 1)], vec![0, 0]).expect("valid model")
}

/// Two toric codes on `e1, m1, e2, m2`.
pub fn two_toric_codes_model() -> AnyonModel {
    AnyonModel::new("toric-x2", &["e1", "m1", "e2", "m2"], &[(0, 1), (2, 3)], vec![0; 4]).expect("valid model")
}

/// `e_A → e2, e_B → e1, m_A → m1, m_B → m2`.
pub fn toric_isomorphism() -> Wall {
    Wall {
        images: vec![0b0100, 0b0001, 0b0010, 0b1000],
    }
}

/// A linear map on labels, given by the images of the generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Wall {
    pub images: Vec<Label>,
}

impl Wall {
    pub fn identity(m: usize) -> Self {
        Self {
            images: (0..m).map(|i| 1 << i).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, a: Label) -> Label {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, _)| a >> i & 1 == 1)
            .fold(0, |acc, (_, &img)| acc ^ img)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Wall) -> Wall {
        Wall {
            images: other.images.iter().map(|&g| self.apply(g)).collect(),
        }
    }

    pub fn is_invertible(&self) -> bool {
        let mut basis: Vec<Label> = Vec::new();
        for &img in &self.images {
            let mut v = img;
            for &b in &basis {
                v = v.min(v ^ b);
            }
            if v == 0 {
                return false;
            }
            basis.push(v);
        }
        true
    }

    /// Preserves `B` and `θ` from `from` to `to` (both of the same rank).
    pub fn preserves(&self, from: &AnyonModel, to: &AnyonModel) -> bool {
        let m = from.rank();
        if self.rank() != m || to.rank() != m || !self.is_invertible() {
            return false;
        }
        (0..m).all(|i| {
            to.spin(self.images[i]) == from.spin(1 << i)
                && (0..i).all(|j| to.braid(self.images[i], self.images[j]) == from.braid(1 << i, 1 << j))
        })
    }

    /// Rows are images of the generators, columns generator bits.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let m = self.rank();
        self.images
            .iter()
            .map(|&img| (0..m).map(|j| (img >> j & 1) as u8).collect())
            .collect()
    }

    pub fn actions(&self, model: &AnyonModel) -> Vec<String> {
        (0..self.rank())
            .map(|i| format!("({}|{})", model.label_name(1 << i), model.label_name(self.images[i])))
            .collect()
    }

    /// Parses `(a|b)` action lists; each generator must appear exactly once.
    pub fn from_actions(model: &AnyonModel, actions: &[String]) -> Result<Wall> {
        let m = model.rank();
        let mut images: Vec<Option<Label>> = vec![None; m];
        for act in actions {
            let inner = act
                .trim()
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| Error::Parse(format!("bad action {act:?}")))?;
            let (a, b) = inner
                .split_once('|')
                .ok_or_else(|| Error::Parse(format!("bad action {act:?}")))?;
            let a = model.parse_label(a)?;
            if a.count_ones() != 1 {
                return Err(Error::Parse(format!("action source {act:?} is not a generator")));
            }
            let i = a.trailing_zeros() as usize;
            if images[i].replace(model.parse_label(b)?).is_some() {
                return Err(Error::Parse(format!("generator {} mapped twice", model.generators[i])));
            }
        }
        images
            .into_iter()
            .enumerate()
            .map(|(i, img)| img.ok_or_else(|| Error::Parse(format!("no image for {}", model.generators[i]))))
            .collect::<Result<Vec<_>>>()
            .map(|images| Wall { images })
    }
}

impl fmt::Display for Wall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.images.iter().map(|i| format!("{i:0w$b}", w = self.rank())).collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// All invertible maps preserving `B` and `θ`, in lexicographic order of images.
pub fn enumerate_transparent_walls(model: &AnyonModel) -> Vec<Wall> {
    let m = model.rank();
    if m == 0 {
        return vec![Wall { images: Vec::new() }];
    }
    let firsts: Vec<Label> = (1..1u32 << m).filter(|&a| model.spin(a) == model.spin(1)).collect();
    let mut walls: Vec<Wall> = firsts
        .par_iter()
        .flat_map_iter(|&a| {
            let mut out = Vec::new();
            extend(model, &mut vec![a], &mut out);
            out
        })
        .collect();
    walls.sort();
    walls
}

fn extend(model: &AnyonModel, images: &mut Vec<Label>, out: &mut Vec<Wall>) {
    let m = model.rank();
    let i = images.len();
    if i == m {
        let w = Wall { images: images.clone() };
        if w.is_invertible() {
            out.push(w);
        }
        return;
    }
    for a in 1..1u32 << m {
        if model.spin(a) != model.spin(1 << i) {
            continue;
        }
        if (0..i).any(|j| model.braid(a, images[j]) != model.braid(1 << i, 1 << j)) {
            continue;
        }
        if in_span(images, a) {
            continue;
        }
        images.push(a);
        extend(model, images, out);
        images.pop();
    }
}

fn in_span(vs: &[Label], a: Label) -> bool {
    (0..1u32 << vs.len()).any(|mask| {
        vs.iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .fold(0, |acc, (_, &v)| acc ^ v)
            == a
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub order: usize,
    pub closed: bool,
    pub abelian: bool,
}

/// Elements generated by `gens` under composition.
pub fn generated_subgroup(gens: &[Wall], m: usize) -> BTreeSet<Wall> {
    let id = Wall::identity(m);
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in gens {
            let next = g.compose(&w);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

pub fn wall_group_structure(walls: &[Wall]) -> Result<GroupReport> {
    let set: BTreeSet<&Wall> = walls.iter().collect();
    for a in walls {
        for b in walls {
            if !set.contains(&a.compose(b)) {
                return Err(Error::InvalidInput(format!("walls not closed: {a} ∘ {b}")));
            }
        }
    }
    let abelian = walls.iter().all(|a| walls.iter().all(|b| a.compose(b) == b.compose(a)));
    Ok(GroupReport {
        order: walls.len(),
        closed: true,
        abelian,
    })
}

pub fn is_abelian(elements: &BTreeSet<Wall>) -> bool {
    elements.iter().all(|a| elements.iter().all(|b| a.compose(b) == b.compose(a)))
}

#[derive(Clone, Debug, Serialize)]
pub struct LagrangianReport {
    pub elements: Vec<(Label, Label)>,
    pub names: Vec<String>,
    pub bosonic: bool,
    pub mutually_trivial: bool,
    pub maximal: bool,
}

impl LagrangianReport {
    pub fn is_lagrangian(&self) -> bool {
        self.bosonic && self.mutually_trivial && self.maximal
    }
}

/// `{(a, Ma)}` in the folded model, checked for self- and mutual bosonicity.
pub fn condensable_set_of_wall(wall: &Wall, model: &AnyonModel) -> LagrangianReport {
    let m = model.rank();
    let folded = model.folded(model);
    let elements: Vec<(Label, Label)> = (0..1u32 << m).map(|a| (a, wall.apply(a))).collect();
    let packed: Vec<Label> = elements.iter().map(|&(a, b)| a | b << m).collect();
    let distinct: BTreeSet<Label> = packed.iter().copied().collect();
    let bosonic = packed.iter().all(|&x| folded.spin(x) == 0);
    let mutually_trivial = packed.iter().all(|&x| packed.iter().all(|&y| folded.braid(x, y) == 0));
    let names = elements
        .iter()
        .map(|&(a, b)| format!("({}, {})", model.label_name(a), model.label_name(b)))
        .collect();
    LagrangianReport {
        maximal: distinct.len() * distinct.len() == folded.order(),
        elements,
        names,
        bosonic,
        mutually_trivial,
    }
}

#[derive(Clone, Debug, Deserialize)]
struct FixtureFile {
    walls: Vec<FixtureWall>,
    gates: Vec<FixtureGate>,
}

#[derive(Clone, Debug, Deserialize)]
struct FixtureGate {
    gate: String,
    actions: Vec<String>,
}

fn fixture() -> Result<FixtureFile> {
    serde_json::from_str(include_str!("../../fixtures/reference_walls.json")).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Clone, Debug, Deserialize)]
struct FixtureWall {
    name: String,
    actions: Vec<String>,
}

/// The five reference walls `W1…W5` of the color code.
pub fn reference_walls() -> Result<Vec<(String, Wall)>> {
    let model = color_code_anyon_model(2)?;
    fixture()?
        .walls
        .into_iter()
        .map(|w| Ok((w.name, Wall::from_actions(&model, &w.actions)?)))
        .collect()
}

/// Reference action lists of the walls made by transversal `H`, `R₂`, `T`.
pub fn reference_gate_actions() -> Result<Vec<(String, Vec<String>)>> {
    Ok(fixture()?.gates.into_iter().map(|g| (g.gate, g.actions)).collect())
}
