//! Verification suites behind `gsp4obs verify`: each returns labelled
//! pass/fail lines so the CLI can print one line per check.

use gsp4obs::obstruction::{steinberg_h0_identity_corrected, verify_decomposition};
use gsp4obs::symplectic::{euler_defect, similitude};
use gsp4obs::tamerep::{
    parse_descriptor, sizing::group_for, steinberg_rep, LocalTypeDescriptor, SqrtChoice,
    SteinbergKind, SymChar,
};
use gsp4obs::ExtField;

/// The shipped descriptor corpus, embedded at compile time.
pub const CORPUS: &[(&str, &str)] = &[
    (
        "groupI_ell3",
        include_str!("../../../descriptors/groupI_ell3.desc"),
    ),
    (
        "groupI_ell5",
        include_str!("../../../descriptors/groupI_ell5.desc"),
    ),
    (
        "groupII_ell7",
        include_str!("../../../descriptors/groupII_ell7.desc"),
    ),
    (
        "groupII_ell3",
        include_str!("../../../descriptors/groupII_ell3.desc"),
    ),
    (
        "groupII_ell5_ram",
        include_str!("../../../descriptors/groupII_ell5_ram.desc"),
    ),
    (
        "groupIII_ell5",
        include_str!("../../../descriptors/groupIII_ell5.desc"),
    ),
    (
        "groupIII_ell5_ram",
        include_str!("../../../descriptors/groupIII_ell5_ram.desc"),
    ),
    (
        "groupIV_ell3",
        include_str!("../../../descriptors/groupIV_ell3.desc"),
    ),
    (
        "groupIV_ell5",
        include_str!("../../../descriptors/groupIV_ell5.desc"),
    ),
    (
        "groupV_ell5",
        include_str!("../../../descriptors/groupV_ell5.desc"),
    ),
    (
        "groupV_ell3_unram",
        include_str!("../../../descriptors/groupV_ell3_unram.desc"),
    ),
    (
        "groupVI_ell3",
        include_str!("../../../descriptors/groupVI_ell3.desc"),
    ),
    (
        "groupVI_ell7",
        include_str!("../../../descriptors/groupVI_ell7.desc"),
    ),
    (
        "groupVII_ell3",
        include_str!("../../../descriptors/groupVII_ell3.desc"),
    ),
    (
        "groupVII_ell5_ram2",
        include_str!("../../../descriptors/groupVII_ell5_ram2.desc"),
    ),
    (
        "groupVIII_ell3",
        include_str!("../../../descriptors/groupVIII_ell3.desc"),
    ),
    (
        "groupIX_ell3",
        include_str!("../../../descriptors/groupIX_ell3.desc"),
    ),
    (
        "groupX_ell3",
        include_str!("../../../descriptors/groupX_ell3.desc"),
    ),
    (
        "groupXI_ell3",
        include_str!("../../../descriptors/groupXI_ell3.desc"),
    ),
    (
        "groupXI_ell5",
        include_str!("../../../descriptors/groupXI_ell5.desc"),
    ),
    (
        "groupXI_ell7_ram",
        include_str!("../../../descriptors/groupXI_ell7_ram.desc"),
    ),
    (
        "scirr_ell3",
        include_str!("../../../descriptors/scirr_ell3.desc"),
    ),
    (
        "scirr_ell5",
        include_str!("../../../descriptors/scirr_ell5.desc"),
    ),
    (
        "scpair_ell5",
        include_str!("../../../descriptors/scpair_ell5.desc"),
    ),
];

pub fn corpus_descriptor(name: &str) -> LocalTypeDescriptor {
    let text = CORPUS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .unwrap_or_else(|| panic!("no corpus descriptor named {name}"));
    parse_descriptor(text).unwrap_or_else(|e| panic!("corpus {name}: {e}"))
}

/// The fixed decomposition matrix: corpus names with three primes each.
pub fn standard_matrix() -> Vec<(&'static str, [u64; 3])> {
    vec![
        ("groupII_ell7", [5, 13, 19]),
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
}

pub fn euler_suite() -> Vec<(String, bool)> {
    let mut out = Vec::new();
    for p in [7u64, 11, 13] {
        let field = match ExtField::new(p, 1) {
            Ok(f) => f,
            Err(_) => {
                out.push((format!("euler: field F_{p}"), false));
                continue;
            }
        };
        for (cls, expect) in [
            (gsp4obs::ParityClass::Even, 1),
            (gsp4obs::ParityClass::OddI, 5),
            (gsp4obs::ParityClass::OddII, 7),
        ] {
            let ok = euler_defect(&field, cls) == Ok(expect);
            out.push((
                format!("euler defect {} over F_{p} = {expect}", cls.label()),
                ok,
            ));
        }
    }
    out
}

/// A deterministic sample of characters usable as twists at (ell, p).
fn char_sample(ell: u64, count: usize) -> Vec<SymChar> {
    let mut v = Vec::new();
    let inertia_orders: Vec<u64> = [1u64, 2, 4]
        .iter()
        .copied()
        .filter(|n| (ell - 1) % n == 0)
        .collect();
    'outer: for cyc in -4i64..=4 {
        for &nf in &[1u64, 2, 3, 4, 6] {
            for j in 0..nf {
                for &ni in &inertia_orders {
                    for k in 0..ni.min(2) {
                        v.push(SymChar::new(ell, nf, j as i64, cyc, ni, k as i64));
                        if v.len() >= count {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    v
}

pub fn steinberg_suite(pmax: u64) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    // compatibility sigma N sigma^{-1} = ell N and symplectic images
    for kind in SteinbergKind::all() {
        let mut failure: Option<String> = None;
        for p in [5u64, 7, 11, 13] {
            for ell in [2u64, 3, 5] {
                if ell == p || p < kind.min_characteristic() {
                    continue;
                }
                let built = group_for(ell, p, &[], true).and_then(|(field, group)| {
                    let rep = steinberg_rep(kind, &field.one(), &field, &group, SqrtChoice::Plus)?;
                    // sigma N sigma^{-1} = ell N
                    let n = kind.nilpotent(&field);
                    let sigma = rep.frobenius_image();
                    let lhs = sigma.mul(&n).mul(&sigma.inverse().unwrap());
                    let ell_elt = field.from_u64(ell % p);
                    if lhs != n.scale(&ell_elt) {
                        return Err(gsp4obs::tamerep::TameError::RelationViolated);
                    }
                    if matches!(kind, SteinbergKind::St22 | SteinbergKind::St4)
                        && (similitude(rep.frobenius_image()).is_none()
                            || similitude(rep.inertia_image()).is_none())
                    {
                        return Err(gsp4obs::tamerep::TameError::NotSymplectic);
                    }
                    Ok(())
                });
                if let Err(e) = built {
                    failure.get_or_insert(format!("p={p} ell={ell}: {e}"));
                }
            }
        }
        match failure {
            None => out.push((format!("steinberg compatibility {}", kind.label()), true)),
            Some(w) => out.push((
                format!("steinberg compatibility {} [{w}]", kind.label()),
                false,
            )),
        }
    }
    // the four H^0 identities over a deterministic character sample
    for kind in SteinbergKind::all() {
        let mut failure: Option<String> = None;
        let mut tested = 0usize;
        for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
            .into_iter()
            .filter(|&p| p <= pmax.max(13))
        {
            if p < kind.min_characteristic() {
                continue;
            }
            for ell in [2u64, 3] {
                if ell == p {
                    continue;
                }
                for chi in char_sample(ell, 8) {
                    match steinberg_h0_identity_corrected(kind, &chi, p, ell, 1, SqrtChoice::Plus) {
                        Ok((lhs, rhs)) => {
                            if lhs != rhs {
                                failure.get_or_insert(format!(
                                    "chi={chi} p={p} ell={ell}: {lhs} != {rhs}"
                                ));
                            }
                            tested += 1;
                        }
                        Err(e) => {
                            failure.get_or_insert(format!("chi={chi} p={p} ell={ell}: {e}"));
                        }
                    }
                }
            }
        }
        let note = if kind == SteinbergKind::St22 {
            " (corrected form: H0(chi nu) + H0(chi))"
        } else {
            ""
        };
        match failure {
            None => out.push((
                format!("h0 identity {}{note} ({tested} characters)", kind.label()),
                true,
            )),
            Some(w) => out.push((
                format!("h0 identity {}{note} [first failure {w}]", kind.label()),
                false,
            )),
        }
    }
    out
}

pub fn decomposition_suite() -> Vec<(String, bool)> {
    let mut out = Vec::new();
    for (name, primes) in standard_matrix() {
        let desc = corpus_descriptor(name);
        for p in primes {
            match verify_decomposition(&desc, p) {
                Ok(r) if r.passed() => {
                    out.push((format!("decomposition {name} p={p}"), true));
                }
                Ok(r) => {
                    let detail = match r.trace_witness {
                        Some(w) => format!("trace differs at u^{}F^{}", w.b, w.a),
                        None => format!("dims {:?} != {:?}", r.lhs_dims, r.rhs_dims),
                    };
                    out.push((format!("decomposition {name} p={p} [{detail}]"), false));
                }
                Err(e) => {
                    out.push((format!("decomposition {name} p={p} [{e}]"), false));
                }
            }
        }
    }
    out
}
