mod algebra;
mod braiding;
mod codes;
mod walls;

use super::{FnScenario, Scenario};

macro_rules! scenario {
    ($name:literal, $desc:literal, [$($tag:literal),*], [$($lat:literal),*], $body:path) => {
        Box::new(FnScenario {
            name: $name,
            description: $desc,
            tags: &[$($tag),*],
            lattices: &[$($lat),*],
            body: $body,
        }) as Box<dyn Scenario>
    };
}

pub(super) fn bundled() -> Vec<Box<dyn Scenario>> {
    vec![
        scenario!(
            "f2-algebra",
            "GF(2) rank and kernel, Pauli products and commutation against dense matrices",
            ["code", "property"],
            [],
            algebra::f2_algebra
        ),
        scenario!(
            "stabilizer-consistency",
            "X/Z checks commute and code dimensions on the reference lattices",
            ["code"],
            ["hex-torus:2,2", "cube", "16-cell", "bcc-torus:2,2,2"],
            codes::stabilizer_consistency
        ),
        scenario!(
            "r2-transversality-spheres",
            "R2 pattern preserves the code space on octahedral spheres 0-2",
            ["transversality"],
            ["octahedral-sphere:0", "octahedral-sphere:1", "octahedral-sphere:2"],
            codes::r2_spheres
        ),
        scenario!(
            "r3-transversality-16cell",
            "R3 pattern preserves the 16-cell code space, with dense cross-check",
            ["transversality"],
            ["16-cell"],
            codes::r3_sixteen_cell
        ),
        scenario!(
            "r3-transversality-bcc",
            "R3 pattern preserves the bcc-torus code space (symbolic)",
            ["transversality"],
            ["bcc-torus:2,2,2"],
            codes::r3_bcc
        ),
        scenario!(
            "r3-cube-leakage",
            "R3 pattern leaves the 2D cube code space",
            ["transversality"],
            ["cube"],
            codes::r3_cube
        ),
        scenario!(
            "excitation-spectrum",
            "single-qubit R(theta) amplitudes and color parity",
            ["excitation"],
            ["octahedral-sphere:1"],
            codes::single_qubit_spectrum
        ),
        scenario!(
            "spectrum-oracle",
            "exact excitation spectra against the dense statevector",
            ["excitation", "oracle"],
            ["cube", "16-cell"],
            codes::spectrum_oracle
        ),
        scenario!(
            "cluster-boundary-2d",
            "boundary of an R2 region is a cluster state",
            ["excitation", "spt"],
            ["octahedral-sphere:0", "octahedral-sphere:1", "octahedral-sphere:2"],
            codes::cluster_boundary
        ),
        scenario!(
            "spt-boundary-3d",
            "boundary of an R3 volume is the Z2^3 SPT state",
            ["excitation", "spt", "oracle"],
            ["16-cell"],
            codes::spt_boundary
        ),
        scenario!(
            "flux-crossing",
            "an X-string crossing an R2 region boundary picks up a charge",
            ["excitation"],
            ["octahedral-sphere:1"],
            codes::flux_crossing
        ),
        scenario!(
            "cocycle-identities",
            "delta omega = 1 for every Z2^3 3-cocycle type on all inputs",
            ["spt", "property"],
            [],
            braiding::cocycles
        ),
        scenario!(
            "walls-72",
            "census of transparent walls and the group they form",
            ["walls"],
            [],
            walls::census
        ),
        scenario!(
            "gate-automorphisms",
            "H, R2 and T realize reference anyon automorphisms",
            ["walls"],
            ["hex-torus:2,2"],
            walls::gate_automorphisms
        ),
        scenario!(
            "toric-isomorphism",
            "the color code model is two toric codes",
            ["walls"],
            [],
            walls::toric_equivalence
        ),
        scenario!(
            "two-body-braiding",
            "charge/flux/SPT two-excitation braiding on the 16-cell",
            ["braiding"],
            ["16-cell"],
            braiding::two_body
        ),
        scenario!(
            "three-loop-table",
            "three-loop braiding signs on the 16-cell with dense cross-check",
            ["braiding", "oracle"],
            ["16-cell"],
            braiding::three_loop
        ),
        scenario!(
            "r3-wall-braiding",
            "excitations condensing on the R3 wall braid trivially",
            ["braiding", "walls"],
            ["16-cell"],
            braiding::wall
        ),
        scenario!(
            "intersection-parity",
            "Pauli braiding equals the symplectic overlap count",
            ["braiding", "property"],
            ["16-cell"],
            braiding::intersection_parity
        ),
        scenario!(
            "deformation-invariance",
            "braiding phases survive random stabilizer deformations",
            ["braiding", "property"],
            ["16-cell"],
            braiding::deformation
        ),
        scenario!(
            "commutator-identity",
            "K(R3, X-membrane) is the R2 membrane up to a constant",
            ["braiding", "transversality"],
            ["16-cell", "bcc-torus:2,2,2"],
            braiding::commutator
        ),
    ]
}
