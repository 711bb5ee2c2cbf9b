//! Property tests for the algebraic invariants: field axioms at random
//! elements, rank-nullity, similitude multiplicativity, adjoint scaling
//! invariance, involution eigenvalue patterns, twist consistency and the
//! semisimplification bound.

mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gsp4obs::ff::is_prime;
use gsp4obs::linalg::FMatrix;
use gsp4obs::obstruction::{adjoint_invariants, h0_oracle};
use gsp4obs::symplectic::{adjoint_action, parity_class, similitude, sp4_basis};
use gsp4obs::tamerep::{concretize_with, trivial_char, twist, SqrtChoice, SymChar};
use gsp4obs::ExtField;

const SMALL_PRIMES: [u64; 6] = [5, 7, 11, 13, 17, 19];

proptest! {
    #[test]
    fn fermat_lagrange_and_order_divisibility(
        pi in 0usize..6,
        d in 1usize..4,
        k in 1u64..10_000,
    ) {
        let p = SMALL_PRIMES[pi];
        let field = ExtField::new(p, d).unwrap();
        let x = field.element_at(k % field.order());
        if !x.is_zero() {
            let q1 = field.order() - 1;
            prop_assert_eq!(x.pow(q1), field.one());
            let ord = x.mult_order().unwrap();
            prop_assert_eq!(q1 % ord, 0);
        }
    }

    #[test]
    fn sqrt_candidates_square_back(
        pi in 0usize..6,
        d in 1usize..3,
        k in 0u64..10_000,
    ) {
        let p = SMALL_PRIMES[pi];
        let field = ExtField::new(p, d).unwrap();
        let a = field.element_at(k % field.order());
        let roots = field.sqrt_candidates(&a);
        for r in &roots {
            prop_assert_eq!(r * r, a.clone());
        }
        if !a.is_zero() {
            prop_assert!(roots.len() != 1 || p == 2);
        }
    }

    #[test]
    fn rank_nullity_on_random_matrices(
        pi in 0usize..6,
        entries in proptest::collection::vec(0u64..1000, 20),
        rows in 2usize..5,
    ) {
        let p = SMALL_PRIMES[pi];
        let field = ExtField::new(p, 1).unwrap();
        let cols = entries.len() / rows;
        let m = FMatrix::from_fn(&field, rows, cols, |i, j| {
            field.from_u64(entries[i * cols + j])
        });
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), cols);
        for v in m.kernel_basis() {
            prop_assert!(m.mul_vec(&v).iter().all(|e| e.is_zero()));
        }
    }
}

/// Random element of GSp_4 over F_p: product of torus elements, root
/// unipotents and the form J itself.
fn random_gsp4(rng: &mut ChaCha8Rng, field: &ExtField) -> FMatrix {
    let p = field.characteristic();
    let basis = sp4_basis(field);
    let mut g = FMatrix::identity(field, 4);
    for _ in 0..rng.gen_range(2..6) {
        match rng.gen_range(0..3) {
            0 => {
                // torus diag(a, b, c/b, c/a)
                let unit = |rng: &mut ChaCha8Rng| field.from_u64(rng.gen_range(1..p));
                let (a, b, c) = (unit(rng), unit(rng), unit(rng));
                let t = FMatrix::diagonal(
                    field,
                    &[
                        a.clone(),
                        b.clone(),
                        &c * &b.inv().unwrap(),
                        &c * &a.inv().unwrap(),
                    ],
                );
                g = g.mul(&t);
            }
            1 => {
                // root unipotent I + t X, X a root vector (X^2 = 0 except
                // the short ones; exp handles the truncation exactly)
                let x = &basis[rng.gen_range(2..10)];
                let t = field.from_u64(rng.gen_range(0..p));
                g = g.mul(&x.scale(&t).exp_nilpotent(&field.one()).unwrap());
            }
            _ => {
                g = g.mul(&gsp4obs::symplectic::symplectic_form(field));
            }
        }
    }
    g
}

#[test]
fn similitude_is_multiplicative_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for p in [5u64, 7, 13] {
        let field = ExtField::new(p, 1).unwrap();
        for _ in 0..40 {
            let g = random_gsp4(&mut rng, &field);
            let h = random_gsp4(&mut rng, &field);
            let (cg, ch) = (similitude(&g).unwrap(), similitude(&h).unwrap());
            assert_eq!(similitude(&g.mul(&h)), Some(&cg * &ch));
        }
    }
}

#[test]
fn adjoint_action_scaling_invariance_and_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let field = ExtField::new(11, 1).unwrap();
    let basis = sp4_basis(&field);
    for _ in 0..25 {
        let g = random_gsp4(&mut rng, &field);
        let h = random_gsp4(&mut rng, &field);
        let lam = field.from_u64(rng.gen_range(1..11));
        let ad_g = adjoint_action(&g, &basis).unwrap();
        // Ad(lambda g) = Ad(g): depends only on the projectivization
        assert_eq!(adjoint_action(&g.scale(&lam), &basis).unwrap(), ad_g);
        // homomorphism
        let ad_h = adjoint_action(&h, &basis).unwrap();
        assert_eq!(adjoint_action(&g.mul(&h), &basis).unwrap(), ad_g.mul(&ad_h));
    }
}

#[test]
fn symplectic_involutions_have_balanced_eigenvalues() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let field = ExtField::new(13, 1).unwrap();
    let one = field.one();
    let neg = field.from_i64(-1);
    // all 8 diagonal involutions inside GSp4 (d1 d4 = d2 d3)
    let mut seeds = Vec::new();
    for mask in 0..16u32 {
        let d: Vec<_> = (0..4)
            .map(|i| {
                if mask & (1 << i) != 0 {
                    neg.clone()
                } else {
                    one.clone()
                }
            })
            .collect();
        let prod14 = &d[0] * &d[3];
        let prod23 = &d[1] * &d[2];
        if prod14 == prod23 {
            seeds.push(FMatrix::diagonal(&field, &d));
        }
    }
    assert_eq!(seeds.len(), 8);
    for seed in &seeds {
        for _ in 0..10 {
            let t = random_gsp4(&mut rng, &field);
            let c = seed.conjugate_by(&t).unwrap();
            assert!(similitude(&c).is_some());
            let id = FMatrix::identity(&field, 4);
            let plus = c.sub(&id).kernel_basis().len();
            let minus = c.add(&id).kernel_basis().len();
            assert!(
                matches!((plus, minus), (4, 0) | (0, 4) | (2, 2)),
                "multiplicities ({plus},{minus})"
            );
            parity_class(&c).unwrap();
        }
    }
}

#[test]
fn adjoint_invariants_ignore_central_twists() {
    // ad kills twists: invariants of rep and rep (x) eta agree
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for name in ["groupII_ell7", "groupIV_ell3", "groupV_ell5"] {
        let desc = common::load(name);
        for p in [7u64, 11] {
            if p == desc.ell {
                continue;
            }
            let conc = concretize_with(&desc, p, 1, SqrtChoice::Plus).unwrap();
            let reference = adjoint_invariants(&conc.rep, true).unwrap().dimension;
            let q1 = conc.rep.field().order() - 1;
            let orders: Vec<u64> = (1..=6).filter(|n| q1 % n == 0).collect();
            for _ in 0..20 {
                let ell = desc.ell;
                let nf = orders[rng.gen_range(0..orders.len())];
                let eta = SymChar::new(
                    ell,
                    nf,
                    rng.gen_range(0..nf) as i64,
                    2 * rng.gen_range(-2i64..=2),
                    1,
                    0,
                );
                let twisted = twist(&conc.rep, &eta, SqrtChoice::Plus).unwrap();
                let dim = adjoint_invariants(&twisted, true).unwrap().dimension;
                assert_eq!(dim, reference, "{name} p={p} eta={eta}");
            }
        }
    }
}

#[test]
fn semisimplification_bounds_invariants() {
    // dim H^0(rep) <= dim H^0(rep^ss); tau = 0 gives the semisimplification
    for name in [
        "groupII_ell7",
        "groupIII_ell5",
        "groupIV_ell3",
        "groupVI_ell3",
    ] {
        let desc = common::load(name);
        for p in (5..=30u64).filter(|&p| is_prime(p) && p != desc.ell) {
            let with_t = concretize_with(&desc, p, 1, SqrtChoice::Plus).unwrap();
            let ss = concretize_with(&desc, p, p, SqrtChoice::Plus).unwrap(); // tau = 0 mod p
            for twisted in [false, true] {
                let d1 = adjoint_invariants(&with_t.rep, twisted).unwrap().dimension;
                let d0 = adjoint_invariants(&ss.rep, twisted).unwrap().dimension;
                assert!(d1 <= d0, "{name} p={p} twist={twisted}: {d1} > {d0}");
            }
            let h1 = h0_oracle(&with_t.rep, &trivial_char(desc.ell), SqrtChoice::Plus)
                .unwrap()
                .dimension;
            let h0 = h0_oracle(&ss.rep, &trivial_char(desc.ell), SqrtChoice::Plus)
                .unwrap()
                .dimension;
            assert!(h1 <= h0);
        }
    }
}
