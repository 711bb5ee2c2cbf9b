//! Trace and invariant verification of the claimed adjoint
//! decompositions, for a fixed matrix of descriptors over several primes.

mod common;

use gsp4obs::obstruction::verify_decomposition;

#[test]
fn decompositions_verify_across_matrix() {
    for (desc, primes) in common::decomposition_matrix() {
        for p in primes {
            let report = verify_decomposition(&desc, p)
                .unwrap_or_else(|e| panic!("{} ell={} p={p}: {e}", desc.group, desc.ell));
            assert!(
                report.trace_witness.is_none(),
                "{} ell={} p={p}: trace mismatch at {:?}",
                desc.group,
                desc.ell,
                report.trace_witness
            );
            assert_eq!(
                report.lhs_dims, report.rhs_dims,
                "{} ell={} p={p}: invariant dims differ",
                desc.group, desc.ell
            );
        }
    }
}

#[test]
fn semisimple_group_decompositions_verify() {
    // semisimple comparisons for I, VII, VIII, IX, X
    for name in [
        "groupI_ell3",
        "groupVII_ell3",
        "groupVIII_ell3",
        "groupIX_ell3",
        "groupX_ell3",
    ] {
        let desc = common::load(name);
        for p in [5u64, 7, 11] {
            let report =
                verify_decomposition(&desc, p).unwrap_or_else(|e| panic!("{name} p={p}: {e}"));
            assert!(report.passed(), "{name} p={p}: {report:?}");
        }
    }
}
