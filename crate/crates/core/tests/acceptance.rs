//! Acceptance suite: one test per criterion, each printing a pass line
//! (visible with --nocapture).  Tolerances and bounds are pinned here.

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gsp4obs::ff::is_prime;
use gsp4obs::obstruction::{
    adjoint_invariants, sc_endo_invariants, steinberg_h0_identity, steinberg_h0_identity_corrected,
    verify_decomposition,
};
use gsp4obs::sieve::{
    exceptional_primes, fl_check, ordinary_check, sieve_fires, FlOutcome, WeightData,
};
use gsp4obs::symplectic::{euler_defect, similitude};
use gsp4obs::tamerep::sizing::group_for;
use gsp4obs::tamerep::{
    concretize, concretize_with, steinberg_rep, trivial_char, SqrtChoice, SteinbergKind, SymChar,
};
use gsp4obs::{ExtField, ParityClass};

#[test]
fn criterion_1_euler_defect_table() {
    let start = std::time::Instant::now();
    for p in [7u64, 11, 13] {
        let field = ExtField::new(p, 1).unwrap();
        assert_eq!(euler_defect(&field, ParityClass::Even).unwrap(), 1);
        assert_eq!(euler_defect(&field, ParityClass::OddI).unwrap(), 5);
        assert_eq!(euler_defect(&field, ParityClass::OddII).unwrap(), 7);
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 1, "euler table took {elapsed:?}");
    println!("criterion 1 (euler defect 1/5/7 over F_7, F_11, F_13): PASS in {elapsed:?}");
}

#[test]
fn criterion_2_steinberg_compatibility() {
    let mut checks = 0usize;
    for kind in SteinbergKind::all() {
        for p in [5u64, 7, 11, 13] {
            for ell in [2u64, 3, 5] {
                if ell == p || p < kind.min_characteristic() {
                    continue;
                }
                let (field, group) = group_for(ell, p, &[], true).unwrap();
                for sqrt in SqrtChoice::both() {
                    let rep = steinberg_rep(kind, &field.one(), &field, &group, sqrt).unwrap();
                    // sigma N sigma^{-1} = ell N exactly
                    let n = kind.nilpotent(&field);
                    let sigma = rep.frobenius_image();
                    let lhs = sigma.mul(&n).mul(&sigma.inverse().unwrap());
                    assert_eq!(
                        lhs,
                        n.scale(&field.from_u64(ell % p)),
                        "{} p={p} ell={ell}",
                        kind.label()
                    );
                    if matches!(kind, SteinbergKind::St22 | SteinbergKind::St4) {
                        assert!(similitude(rep.frobenius_image()).is_some());
                        assert!(similitude(rep.inertia_image()).is_some());
                    }
                    checks += 1;
                }
            }
        }
    }
    println!("criterion 2 (steinberg compatibility, {checks} cases): PASS");
}

fn random_char(rng: &mut ChaCha8Rng, ell: u64) -> SymChar {
    let nf = [1u64, 2, 3, 4, 5, 6][rng.gen_range(0..6)];
    let j = rng.gen_range(0..nf) as i64;
    let cyclo = rng.gen_range(-4i64..=4);
    let divisors: Vec<u64> = (1..=ell - 1).filter(|d| (ell - 1) % d == 0).collect();
    let ni = divisors[rng.gen_range(0..divisors.len())];
    let k = rng.gen_range(0..ni) as i64;
    SymChar::new(ell, nf, j, cyclo, ni, k)
}

#[test]
fn criterion_3_h0_identities() {
    let start = std::time::Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let primes: Vec<u64> = (5..=50).filter(|&p| is_prime(p)).collect();
    for kind in SteinbergKind::all() {
        let mut tested = 0usize;
        while tested < 100 {
            let ell = [2u64, 3, 5][rng.gen_range(0..3)];
            let p = primes[rng.gen_range(0..primes.len())];
            if p == ell || p < kind.min_characteristic() {
                continue;
            }
            let chi = random_char(&mut rng, ell);
            if chi.frob_order() % p == 0 || chi.inertia_order() % p == 0 {
                continue;
            }
            let (lhs, rhs) =
                steinberg_h0_identity_corrected(kind, &chi, p, ell, 1, SqrtChoice::Plus).unwrap();
            assert_eq!(lhs, rhs, "{} chi={chi} p={p} ell={ell}", kind.label());
            // for the three single-top kinds the displayed identity is the
            // corrected one
            if kind != SteinbergKind::St22 {
                let (l2, r2) =
                    steinberg_h0_identity(kind, &chi, p, ell, 1, SqrtChoice::Plus).unwrap();
                assert_eq!(l2, r2);
            }
            tested += 1;
        }
    }
    // the displayed St_{2,2} identity misses the weight-1 kernel line:
    // pin the counterexample chi = 1, ell = 3, p = 7 (LHS 1, RHS 0)
    let (lhs, rhs) = steinberg_h0_identity(
        SteinbergKind::St22,
        &trivial_char(3),
        7,
        3,
        1,
        SqrtChoice::Plus,
    )
    .unwrap();
    assert_eq!((lhs, rhs), (1, 0));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "identities took {elapsed:?}");
    println!(
        "criterion 3 (H0 identities, 100 characters each; St2,2 in corrected form \
         H0(chi nu)+H0(chi), displayed form fails at chi=1): PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_4_decomposition_matrix() {
    let matrix = common::decomposition_matrix();
    assert!(matrix.len() >= 12);
    let mut cases = 0usize;
    for (desc, primes) in matrix {
        for p in primes {
            let report = verify_decomposition(&desc, p)
                .unwrap_or_else(|e| panic!("{} ell={} p={p}: {e}", desc.group, desc.ell));
            assert!(
                report.passed(),
                "{} ell={} p={p}: {report:?}",
                desc.group,
                desc.ell
            );
            cases += 1;
        }
    }
    println!("criterion 4 (decomposition verification, {cases} cases): PASS");
}

#[test]
fn criterion_5_oracle_equivalence_flagship() {
    let start = std::time::Instant::now();
    let mut cases = 0usize;
    for desc in common::matrix_i_to_vi() {
        for p in (5..=200).filter(|&p| is_prime(p)) {
            if p == desc.ell || common::degenerate(&desc, p) {
                continue;
            }
            let conc = concretize(&desc, p).unwrap();
            let oracle = adjoint_invariants(&conc.rep, true).unwrap().dimension;
            let fired = sieve_fires(&desc, p).unwrap();
            assert_eq!(fired, oracle > 0, "{} ell={} p={p}", desc.group, desc.ell);
            cases += 1;
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 300, "flagship took {elapsed:?}");
    println!(
        "criterion 5 (oracle equivalence, groups I-VI, {cases} (descriptor, prime) pairs): \
         PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_6_group_iv_pinpoint() {
    let desc = common::load("groupIV_ell3");
    let reports = exceptional_primes(&desc, 10_000).unwrap();
    let primes: Vec<u64> = reports.iter().map(|r| r.p).collect();
    assert_eq!(primes, vec![5], "expected exactly {{5}}, got {primes:?}");
    let conc = concretize(&desc, 5).unwrap();
    let dim = adjoint_invariants(&conc.rep, true).unwrap().dimension;
    assert!(dim >= 1, "oracle at p = 5 found dimension {dim}");
    println!(
        "criterion 6 (group IV at ell=3: exceptional set {{5}} up to 10^4, oracle dim {dim}): PASS"
    );
}

#[test]
fn criterion_7_supercuspidal_ratios() {
    let mut cases = 0usize;
    for name in ["scirr_ell3", "scirr_ell5"] {
        let desc = common::load(name);
        for p in (5..=100).filter(|&p| is_prime(p)) {
            if p == desc.ell || common::degenerate(&desc, p) {
                continue;
            }
            let conc = concretize(&desc, p).unwrap();
            let oracle = sc_endo_invariants(&conc.rep, true).unwrap().dimension;
            let fired = sieve_fires(&desc, p).unwrap();
            assert_eq!(
                fired,
                oracle > 0,
                "{name} p={p}: sieve={fired} oracle={oracle}"
            );
            cases += 1;
        }
    }
    println!("criterion 7 (supercuspidal conjugate ratios vs G_M oracle, {cases} cases): PASS");
}

#[test]
fn criterion_8_ell_equals_p_checks() {
    let mut cases = 0usize;
    for a in 1..=40i64 {
        for b in 1..a {
            if a + b > 40 {
                continue;
            }
            let wd = WeightData::new(a, b, a + b + 1).unwrap();
            for p in (3..=50u64).filter(|&p| is_prime(p)) {
                // independent route: Fontaine-Laffaille weight disjointness
                let expected = a + b > 0 && a + b < p as i64 - 2 && wd.weights_disjoint();
                let got = fl_check(&wd, p) == FlOutcome::UnobstructedAtP;
                assert_eq!(got, expected, "fl a={a} b={b} p={p}");
                // ordinary congruences recomputed directly
                let fired = ordinary_check(&wd, p);
                let m = (p - 1) as i64;
                for (q, v) in [("a", a), ("b", b), ("a-b", a - b), ("a+b", a + b)] {
                    let expect_fire = v.rem_euclid(m) == 1i64.rem_euclid(m)
                        || v.rem_euclid(m) == (-1i64).rem_euclid(m);
                    let did = fired.iter().any(|c| c.quantity == q);
                    assert_eq!(did, expect_fire, "ordinary {q} a={a} b={b} p={p}");
                }
                cases += 1;
            }
        }
    }
    println!("criterion 8 (ell = p checks on the exhaustive grid, {cases} cases): PASS");
}

#[test]
fn criterion_9_tau_and_root_independence() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xdeadbeef);
    let mut cases = 0usize;
    for (desc, primes) in common::decomposition_matrix() {
        let p = primes[0];
        let reference = {
            let conc = concretize_with(&desc, p, 1, SqrtChoice::Plus).unwrap();
            adjoint_invariants(&conc.rep, true).unwrap().dimension
        };
        for _ in 0..50 {
            let tau = rng.gen_range(1..p);
            for sqrt in SqrtChoice::both() {
                let conc = concretize_with(&desc, p, tau, sqrt).unwrap();
                let dim = adjoint_invariants(&conc.rep, true).unwrap().dimension;
                assert_eq!(
                    dim, reference,
                    "{} ell={} p={p} tau={tau} {sqrt:?}",
                    desc.group, desc.ell
                );
                cases += 1;
            }
        }
    }
    println!("criterion 9 (tau and root-choice independence, {cases} cases): PASS");
}
