//! Plain-text colex format.
//!
//! ```text
//! colex v1
//! name <name>
//! manifold <torus2|sphere2|sphere3|torus3>
//! qubits <n>
//! qubit <index> <label>
//! cell <rank> <colors> <label> : <q> <q> ...
//! bipartition <bits>
//! ```

use std::fmt::Write as _;

use super::{Cell, Colex, ColorSet, Manifold};
use crate::error::{Error, Result};
use crate::f2::BinVec;

const HEADER: &str = "colex v1";

impl Colex {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{HEADER}").unwrap();
        writeln!(s, "name {}", self.name).unwrap();
        writeln!(s, "manifold {}", self.manifold.as_str()).unwrap();
        writeln!(s, "qubits {}", self.n_qubits).unwrap();
        for (i, l) in self.qubit_labels.iter().enumerate() {
            writeln!(s, "qubit {i} {l}").unwrap();
        }
        for c in &self.cells {
            let qs: Vec<String> = c.qubits.iter().map(|q| q.to_string()).collect();
            writeln!(s, "cell {} {} {} : {}", c.rank, c.colors, c.label, qs.join(" ")).unwrap();
        }
        writeln!(s, "bipartition {}", self.bipartition).unwrap();
        s
    }

    pub fn from_text(text: &str) -> Result<Colex> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        if lines.next().map(str::trim) != Some(HEADER) {
            return Err(Error::Parse(format!("missing '{HEADER}' header")));
        }
        let mut name = None;
        let mut manifold = None;
        let mut n = None;
        let mut labels: Vec<String> = Vec::new();
        let mut cells = Vec::new();
        let mut bip = None;
        for line in lines {
            let (key, rest) = line.split_once(' ').unwrap_or((line, ""));
            match key {
                "name" => name = Some(rest.to_string()),
                "manifold" => manifold = Some(Manifold::parse(rest.trim())?),
                "qubits" => n = Some(parse_usize(rest)?),
                "qubit" => {
                    let (idx, label) = rest
                        .split_once(' ')
                        .ok_or_else(|| Error::Parse(format!("bad qubit line {line:?}")))?;
                    if parse_usize(idx)? != labels.len() {
                        return Err(Error::Parse(format!("qubit lines out of order at {line:?}")));
                    }
                    labels.push(label.to_string());
                }
                "cell" => cells.push(parse_cell(rest)?),
                "bipartition" => bip = Some(BinVec::parse_bits(rest.trim())?),
                _ => return Err(Error::Parse(format!("unknown line {line:?}"))),
            }
        }
        let missing = |what: &str| Error::Parse(format!("missing {what}"));
        Colex::from_parts(
            name.ok_or_else(|| missing("name"))?,
            manifold.ok_or_else(|| missing("manifold"))?,
            n.ok_or_else(|| missing("qubits"))?,
            labels,
            cells,
            bip.ok_or_else(|| missing("bipartition"))?,
        )
    }
}

fn parse_usize(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected integer, got {s:?}")))
}

fn parse_cell(rest: &str) -> Result<Cell> {
    let (head, qubits) = rest
        .split_once(" : ")
        .ok_or_else(|| Error::Parse(format!("bad cell line {rest:?}")))?;
    let mut parts = head.split_whitespace();
    let rank = parse_usize(parts.next().unwrap_or(""))? as u8;
    let colors = ColorSet::parse(parts.next().unwrap_or(""))?;
    let label = parts.next().unwrap_or("").to_string();
    let qubits = qubits
        .split_whitespace()
        .map(parse_usize)
        .collect::<Result<Vec<_>>>()?;
    Ok(Cell {
        rank,
        colors,
        label,
        qubits,
    })
}

#[cfg(test)]
mod tests {
    use crate::colex::*;

    #[test]
    fn round_trip() {
        for c in [
            build_octahedral_sphere(1).unwrap(),
            build_16cell_colex().unwrap(),
            build_hex_torus(1, 2).unwrap(),
        ] {
            let text = c.to_text();
            let back = Colex::from_text(&text).unwrap();
            assert_eq!(back, c);
            assert_eq!(back.to_text(), text);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(Colex::from_text("colex v2\n").is_err());
        assert!(Colex::from_text("colex v1\nbogus 1\n").is_err());
    }
}
