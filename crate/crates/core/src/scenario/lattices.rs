use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::colex::{build_16cell_colex, build_bcc_torus, build_hex_torus, build_octahedral_sphere, Colex};
use crate::error::{Error, Result};

pub trait LatticeBuilder: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    /// Parameters used when the spec gives none.
    fn default_params(&self) -> &'static [usize];
    fn build(&self, params: &[usize]) -> Result<Colex>;
}

fn arity(name: &str, params: &[usize], n: usize) -> Result<()> {
    if params.len() == n {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{name} takes {n} parameters, got {}", params.len())))
    }
}

pub struct HexTorus;
pub struct OctahedralSphere;
pub struct SixteenCell;
pub struct BccTorus;

impl LatticeBuilder for HexTorus {
    fn name(&self) -> &'static str {
        "hex-torus"
    }
    fn description(&self) -> &'static str {
        "hexagonal lattice on a torus, d1 x d2 unit cells"
    }
    fn default_params(&self) -> &'static [usize] {
        &[2, 2]
    }
    fn build(&self, p: &[usize]) -> Result<Colex> {
        arity(self.name(), p, 2)?;
        build_hex_torus(p[0], p[1])
    }
}

impl LatticeBuilder for OctahedralSphere {
    fn name(&self) -> &'static str {
        "octahedral-sphere"
    }
    fn description(&self) -> &'static str {
        "dual of the subdivided octahedron; refinement 0 is the cube"
    }
    fn default_params(&self) -> &'static [usize] {
        &[0]
    }
    fn build(&self, p: &[usize]) -> Result<Colex> {
        arity(self.name(), p, 1)?;
        build_octahedral_sphere(p[0])
    }
}

impl LatticeBuilder for SixteenCell {
    fn name(&self) -> &'static str {
        "16-cell"
    }
    fn description(&self) -> &'static str {
        "dual of the 16-cell boundary, a 3-sphere with 16 qubits"
    }
    fn default_params(&self) -> &'static [usize] {
        &[]
    }
    fn build(&self, p: &[usize]) -> Result<Colex> {
        arity(self.name(), p, 0)?;
        build_16cell_colex()
    }
}

impl LatticeBuilder for BccTorus {
    fn name(&self) -> &'static str {
        "bcc-torus"
    }
    fn description(&self) -> &'static str {
        "truncated-octahedra honeycomb on a 3-torus, even L1 x L2 x L3"
    }
    fn default_params(&self) -> &'static [usize] {
        &[2, 2, 2]
    }
    fn build(&self, p: &[usize]) -> Result<Colex> {
        arity(self.name(), p, 3)?;
        build_bcc_torus(p[0], p[1], p[2])
    }
}

/// `name[:p1,p2,…]`, e.g. `hex-torus:2,2`. `cube` is `octahedral-sphere:0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeSpec {
    pub name: String,
    pub params: Option<Vec<usize>>,
}

impl FromStr for LatticeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "cube" {
            return Ok(Self {
                name: "octahedral-sphere".into(),
                params: Some(vec![0]),
            });
        }
        let (name, rest) = match s.split_once(':') {
            Some((n, r)) => (n, Some(r)),
            None => (s, None),
        };
        if name.is_empty() {
            return Err(Error::Parse(format!("empty lattice name in {s:?}")));
        }
        let params = rest
            .map(|r| {
                r.split(',')
                    .filter(|t| !t.is_empty())
                    .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .transpose()?;
        Ok(Self {
            name: name.into(),
            params,
        })
    }
}

impl fmt::Display for LatticeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)?;
        if let Some(p) = &self.params {
            let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            write!(f, ":{}", parts.join(","))?;
        }
        Ok(())
    }
}

#[derive(Default)]
pub struct LatticeRegistry {
    builders: BTreeMap<&'static str, Box<dyn LatticeBuilder>>,
}

impl LatticeRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_defaults() -> Self {
        let mut r = Self::new();
        r.register(Box::new(HexTorus));
        r.register(Box::new(OctahedralSphere));
        r.register(Box::new(SixteenCell));
        r.register(Box::new(BccTorus));
        r
    }

    pub fn register(&mut self, b: Box<dyn LatticeBuilder>) {
        self.builders.insert(b.name(), b);
    }

    pub fn get(&self, name: &str) -> Option<&dyn LatticeBuilder> {
        self.builders.get(name).map(|b| b.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.builders.keys().copied().collect()
    }

    pub fn build(&self, spec: &str) -> Result<Colex> {
        let spec: LatticeSpec = spec.parse()?;
        let b = self
            .get(&spec.name)
            .ok_or_else(|| Error::Unknown(format!("lattice {}", spec.name)))?;
        b.build(spec.params.as_deref().unwrap_or(b.default_params()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        let s: LatticeSpec = "hex-torus:2,3".parse().unwrap();
        assert_eq!(s.params, Some(vec![2, 3]));
        assert_eq!(s.to_string(), "hex-torus:2,3");
        assert_eq!("cube".parse::<LatticeSpec>().unwrap().to_string(), "octahedral-sphere:0");
        assert!("hex-torus:a".parse::<LatticeSpec>().is_err());
    }

    #[test]
    fn builds_by_name() {
        let r = LatticeRegistry::with_defaults();
        assert_eq!(r.build("cube").unwrap().n_qubits, 8);
        assert_eq!(r.build("16-cell").unwrap().n_qubits, 16);
        assert_eq!(r.build("hex-torus").unwrap().n_qubits, 24);
        assert!(matches!(r.build("moebius"), Err(Error::Unknown(_))));
        assert!(r.build("hex-torus:1").is_err());
        assert!(r.build("bcc-torus:3,2,2").is_err());
    }
}
