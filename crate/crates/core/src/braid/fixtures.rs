use std::collections::BTreeSet;

use super::{LoopProcess, ProcessKind};
use crate::code::ColorCode;
use crate::colex::{ColorSet, Colex};
use crate::error::{Error, Result};

/// A named process on the 16-cell: an operator kind on one cell, given by
/// its colors and the dual vertices it sits on.
#[derive(Clone, Copy, Debug)]
pub struct ProcessSpec {
    pub name: &'static str,
    pub kind: ProcessKind,
    pub rank: u8,
    pub colors: &'static str,
    pub vertices: &'static [&'static str],
}

const SPECS: &[ProcessSpec] = &[
    ProcessSpec { name: "e_A", kind: ProcessKind::Charge, rank: 1, colors: "BCD", vertices: &["+1", "+2", "+3"] },
    ProcessSpec { name: "e_B", kind: ProcessKind::Charge, rank: 1, colors: "ACD", vertices: &["+0", "+2", "+3"] },
    ProcessSpec { name: "e_C", kind: ProcessKind::Charge, rank: 1, colors: "ABD", vertices: &["+0", "+1", "+3"] },
    ProcessSpec { name: "m_AB", kind: ProcessKind::Flux, rank: 2, colors: "CD", vertices: &["+2", "+3"] },
    ProcessSpec { name: "m_BC", kind: ProcessKind::Flux, rank: 2, colors: "AD", vertices: &["+0", "+3"] },
    ProcessSpec { name: "m_CA", kind: ProcessKind::Flux, rank: 2, colors: "BD", vertices: &["+1", "+3"] },
    ProcessSpec { name: "s_AB", kind: ProcessKind::Spt, rank: 2, colors: "CD", vertices: &["+2", "+3"] },
    ProcessSpec { name: "s_BC", kind: ProcessKind::Spt, rank: 2, colors: "AD", vertices: &["+0", "+3"] },
    ProcessSpec { name: "s_CA", kind: ProcessKind::Spt, rank: 2, colors: "BD", vertices: &["+1", "+3"] },
    ProcessSpec { name: "s_BC@volume", kind: ProcessKind::Spt, rank: 3, colors: "D", vertices: &["+3"] },
];

impl ProcessSpec {
    pub fn all() -> &'static [ProcessSpec] {
        SPECS
    }

    pub fn by_name(name: &str) -> Result<&'static ProcessSpec> {
        SPECS
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::Unknown(format!("process {name}")))
    }

    pub fn locate(&self, colex: &Colex) -> Result<usize> {
        let colors = ColorSet::parse(self.colors)?;
        let want: BTreeSet<&str> = self.vertices.iter().copied().collect();
        colex
            .cells_of_rank(self.rank)
            .find(|&c| {
                let cell = colex.cell(c);
                cell.colors == colors && cell.label.split(',').collect::<BTreeSet<_>>() == want
            })
            .ok_or_else(|| Error::InvalidLattice(format!("no cell for {}", self.name)))
    }
}

/// Builds the named process on a 16-cell code.
pub fn sixteen_cell_process(code: &ColorCode, name: &str) -> Result<LoopProcess> {
    let spec = ProcessSpec::by_name(name)?;
    let support = code.colex.support(spec.locate(&code.colex)?);
    Ok(match spec.kind {
        ProcessKind::Charge => LoopProcess::charge(name, support),
        ProcessKind::Flux => LoopProcess::flux(name, support),
        ProcessKind::Spt => LoopProcess::spt(code, name, &support)?,
        ProcessKind::Composite => unreachable!("no composite specs"),
    })
}
