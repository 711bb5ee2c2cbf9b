//! Shared descriptor matrices for the integration suites, loaded from the
//! shipped corpus where possible.
#![allow(dead_code)] // each test binary uses a different subset

use std::path::PathBuf;

use gsp4obs::tamerep::{parse_descriptor, LocalTypeDescriptor};

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../descriptors")
}

pub fn load(name: &str) -> LocalTypeDescriptor {
    let path = corpus_dir().join(format!("{name}.desc"));
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
    parse_descriptor(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Groups I-VI: the flagship oracle-equivalence matrix (13 descriptors).
pub fn matrix_i_to_vi() -> Vec<LocalTypeDescriptor> {
    [
        "groupI_ell3",
        "groupI_ell5",
        "groupII_ell7",
        "groupII_ell3",
        "groupII_ell5_ram",
        "groupIII_ell5",
        "groupIII_ell5_ram",
        "groupIV_ell3",
        "groupIV_ell5",
        "groupV_ell5",
        "groupV_ell3_unram",
        "groupVI_ell3",
        "groupVI_ell7",
    ]
    .iter()
    .map(|n| load(n))
    .collect()
}

/// Dihedral descriptors (VII-XI), covering all three quadratic extensions.
pub fn matrix_dihedral() -> Vec<LocalTypeDescriptor> {
    [
        "groupVII_ell3",
        "groupVII_ell5_ram2",
        "groupVIII_ell3",
        "groupIX_ell3",
        "groupX_ell3",
        "groupXI_ell3",
        "groupXI_ell5",
        "groupXI_ell7_ram",
    ]
    .iter()
    .map(|n| load(n))
    .collect()
}

/// The decomposition matrix: corpus names with three primes each
/// (covers II, III, IV, V, VI, XI; 14 entries).
pub fn decomposition_matrix() -> Vec<(LocalTypeDescriptor, [u64; 3])> {
    [
        ("groupII_ell7", [5u64, 13, 19]),
        ("groupII_ell3", [5, 7, 11]),
        ("groupII_ell5_ram", [7, 11, 13]),
        ("groupIII_ell5", [7, 11, 13]),
        ("groupIII_ell5_ram", [7, 11, 17]),
        ("groupIV_ell3", [7, 11, 13]),
        ("groupIV_ell5", [7, 11, 13]),
        ("groupV_ell5", [7, 11, 13]),
        ("groupV_ell3_unram", [5, 7, 11]),
        ("groupVI_ell3", [5, 7, 11]),
        ("groupVI_ell7", [5, 11, 13]),
        ("groupXI_ell3", [5, 7, 13]),
        ("groupXI_ell5", [7, 11, 13]),
        ("groupXI_ell7_ram", [5, 11, 13]),
    ]
    .iter()
    .map(|(n, ps)| (load(n), *ps))
    .collect()
}

/// p divides a root-of-unity order needed by the concretization.
pub fn degenerate(desc: &LocalTypeDescriptor, p: u64) -> bool {
    let mut orders: Vec<u64> = Vec::new();
    for c in [desc.chi, desc.chi1, desc.chi2, desc.xi, desc.mchi]
        .into_iter()
        .flatten()
    {
        orders.push(c.frob_order());
        orders.push(c.inertia_order());
    }
    for d in [desc.psi, desc.psi2].into_iter().flatten() {
        orders.push(d.chi.frob_order());
        orders.push(d.chi.inertia_order());
    }
    orders.iter().any(|&n| n % p == 0)
}
