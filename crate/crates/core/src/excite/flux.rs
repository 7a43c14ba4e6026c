use serde::Serialize;

use crate::code::ColorCode;
use crate::colex::Region;
use crate::error::{Error, Result};
use crate::pauli::Pauli;
use crate::phasepoly::{pauli_commutator, transversal_phase_poly, MixedOperator};

/// What an X-string or membrane picks up when conjugated by `R̄_d|_V`.
#[derive(Clone, Debug, Serialize)]
pub struct FluxCrossing {
    /// `D P D† P†`, so that `D P D† = delta · P`.
    #[serde(skip)]
    pub delta: MixedOperator,
    pub delta_level: u32,
    /// The attached operator with its constant phase dropped, when it is a
    /// Z-string.
    #[serde(skip)]
    pub attached_z: Option<Pauli>,
    /// X checks violated by the attached Z-string.
    pub charges: Vec<usize>,
    pub is_identity: bool,
}

pub fn flux_crossing_witness(code: &ColorCode, region: &Region, string: &Pauli) -> Result<FluxCrossing> {
    if string.len() != code.n() {
        return Err(Error::DimensionMismatch {
            expected: code.n(),
            found: string.len(),
        });
    }
    if !string.z.is_zero() {
        return Err(Error::InvalidInput("crossing operator must be X-type".into()));
    }
    let colex = &code.colex;
    let d = transversal_phase_poly(colex, colex.dim as u32, Some(&region.v))?;
    let delta = pauli_commutator(&d, string)?;
    let attached_z = MixedOperator::diagonal(delta.theta.without_constant())
        .to_pauli()
        .filter(|p| p.x.is_zero());
    let charges = match &attached_z {
        Some(z) => code
            .x_syndrome_of_support(&z.z)
            .iter_ones()
            .map(|row| code.x_cells[row])
            .collect(),
        None => Vec::new(),
    };
    Ok(FluxCrossing {
        delta_level: delta.theta.hierarchy_level(),
        is_identity: delta.theta.is_constant(),
        delta,
        attached_z,
        charges,
    })
}
