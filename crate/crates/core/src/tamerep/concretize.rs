//! Assembly of the 4-dimensional mod-p representation attached to each
//! local-type descriptor, together with its canonical filtration, and the
//! genericity predicate on filtrations.
//!
//! Block layouts with respect to the fixed form J:
//!   - interleaved: A acts on (e0, e3), B on (e1, e2); symplectic iff
//!     det A = det B (= the similitude).
//!   - paired: A on (e0, e1), partner c * (det A)^{-1} D A D on (e2, e3)
//!     with D = diag(1, -1); symplectic with similitude c for any A.

use super::chars::{nu, nu_half_power, trivial_char, SymChar};
use super::descriptor::{GroupLabel, LocalTypeDescriptor};
use super::group::TameGroup;
use super::induction::{
    induce, induced_det_char, invariant_alternating_form, restrict_char, symplectic_basis_change,
    IndFrame, SubgroupChar,
};
use super::rep::{
    char_rep, direct_sum, steinberg_rep, twist, ConcreteRep, SqrtChoice, SteinbergKind,
};
use super::sizing::Sizing;
use super::TameError;
use crate::ff::{ExtField, FqElem};
use crate::linalg::FMatrix;

/// One step of an ordered Jordan-Holder filtration: the original basis
/// indices spanning the step, and a display label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationStep {
    pub indices: Vec<usize>,
    pub label: String,
}

/// A concretized local type: the representation, its filtration, and the
/// parameters that produced it.
#[derive(Debug, Clone)]
pub struct Concretization {
    pub rep: ConcreteRep,
    pub steps: Vec<FiltrationStep>,
    pub tau: FqElem,
    pub sqrt_choice: SqrtChoice,
}

fn det2(m: &FMatrix) -> FqElem {
    &(&m[(0, 0)] * &m[(1, 1)]) - &(&m[(0, 1)] * &m[(1, 0)])
}

/// A (+) B with A on (e0, e3) and B on (e1, e2).
fn interleave(outer: &ConcreteRep, inner: &ConcreteRep) -> Result<ConcreteRep, TameError> {
    if outer.field() != inner.field() || outer.group() != inner.group() {
        return Err(TameError::Mismatch);
    }
    let field = outer.field();
    let weave = |a: &FMatrix, b: &FMatrix| {
        let mut m = FMatrix::zeros(field, 4, 4);
        m[(0, 0)] = a[(0, 0)].clone();
        m[(0, 3)] = a[(0, 1)].clone();
        m[(3, 0)] = a[(1, 0)].clone();
        m[(3, 3)] = a[(1, 1)].clone();
        m[(1, 1)] = b[(0, 0)].clone();
        m[(1, 2)] = b[(0, 1)].clone();
        m[(2, 1)] = b[(1, 0)].clone();
        m[(2, 2)] = b[(1, 1)].clone();
        m
    };
    ConcreteRep::new(
        field.clone(),
        outer.group().clone(),
        weave(outer.frobenius_image(), inner.frobenius_image()),
        weave(outer.inertia_image(), inner.inertia_image()),
    )
}

/// A (+) (c (det A)^{-1} D A D), block diagonal on (e0,e1 | e2,e3):
/// symplectic with similitude c.
fn paired_sum(
    a: &ConcreteRep,
    c: &SymChar,
    sqrt_choice: SqrtChoice,
) -> Result<ConcreteRep, TameError> {
    let field = a.field().clone();
    let d = FMatrix::diagonal(&field, &[field.one(), field.from_i64(-1)]);
    let partner = |m: &FMatrix, cval: &FqElem| -> Result<FMatrix, TameError> {
        let det_inv = det2(m).inv()?;
        Ok(d.mul(m).mul(&d).scale(&(cval * &det_inv)))
    };
    let cf = c.eval_frobenius(&field, sqrt_choice)?;
    let cu = c.eval_inertia(&field)?;
    let b = ConcreteRep::new(
        field.clone(),
        a.group().clone(),
        partner(a.frobenius_image(), &cf)?,
        partner(a.inertia_image(), &cu)?,
    )?;
    direct_sum(&[a, &b])
}

/// 2-dimensional representation from a pair of characters on the diagonal.
fn diag_pair(
    a: &SymChar,
    b: &SymChar,
    field: &ExtField,
    group: &TameGroup,
    sqrt_choice: SqrtChoice,
) -> Result<ConcreteRep, TameError> {
    let ra = char_rep(a, field, group, sqrt_choice)?;
    let rb = char_rep(b, field, group, sqrt_choice)?;
    direct_sum(&[&ra, &rb])
}

fn steps(data: &[(&[usize], String)]) -> Vec<FiltrationStep> {
    data.iter()
        .map(|(idx, label)| FiltrationStep {
            indices: idx.to_vec(),
            label: label.clone(),
        })
        .collect()
}

/// Concretize with the default parameters tau = 1, positive square root.
pub fn concretize(desc: &LocalTypeDescriptor, p: u64) -> Result<Concretization, TameError> {
    concretize_with(desc, p, 1, SqrtChoice::Plus)
}

/// Build the mod-p representation for a descriptor.
pub fn concretize_with(
    desc: &LocalTypeDescriptor,
    p: u64,
    tau_scalar: u64,
    sqrt_choice: SqrtChoice,
) -> Result<Concretization, TameError> {
    desc.validate()?;
    if !crate::ff::is_prime(p) {
        return Err(TameError::Constraint(format!("{p} is not prime")));
    }
    if p < 5 {
        return Err(TameError::Constraint(
            "concretization requires p >= 5 (exp denominators)".into(),
        ));
    }
    if p == desc.ell {
        return Err(TameError::Constraint("p must differ from ell".into()));
    }
    let ell = desc.ell;
    let nu1 = nu(ell);
    let half = |k: i64| nu_half_power(ell, k);

    match desc.group {
        GroupLabel::I => {
            let c1 = desc.chi1.unwrap();
            let c2 = desc.chi2.unwrap();
            let prod = c1.mul(&c2);
            let mut s = Sizing::new(ell, p);
            s.add_char(&c1).add_char(&c2).add_char(&prod);
            let (field, group) = s.build()?;
            let chars = [prod, c1, c2, trivial_char(ell)];
            let reps: Result<Vec<ConcreteRep>, TameError> = chars
                .iter()
                .map(|c| char_rep(c, &field, &group, sqrt_choice))
                .collect();
            let reps = reps?;
            let rep = direct_sum(&reps.iter().collect::<Vec<_>>())?;
            let st = steps(&[
                (&[0], format!("{prod}")),
                (&[1], format!("{c1}")),
                (&[2], format!("{c2}")),
                (&[3], "1".into()),
            ]);
            Ok(Concretization {
                rep,
                steps: st,
                tau: field.zero(),
                sqrt_choice,
            })
        }
        GroupLabel::II => {
            let chi = desc.chi.unwrap();
            let chi2 = chi.pow(2);
            let mut s = Sizing::new(ell, p);
            s.add_char(&chi).add_char(&chi2).add_steinberg();
            let (field, group) = s.build()?;
            let tau = field.from_u64(tau_scalar);
            let outer = diag_pair(&chi2, &trivial_char(ell), &field, &group, sqrt_choice)?;
            let st2 = steinberg_rep(SteinbergKind::St2, &tau, &field, &group, sqrt_choice)?;
            let inner = twist(&st2, &chi, sqrt_choice)?;
            let rep = interleave(&outer, &inner)?;
            let st = steps(&[
                (&[0], format!("{chi2}")),
                (&[1], format!("{}", chi.mul(&half(1)))),
                (&[2], format!("{}", chi.mul(&half(-1)))),
                (&[3], "1".into()),
            ]);
            Ok(Concretization {
                rep,
                steps: st,
                tau,
                sqrt_choice,
            })
        }
        GroupLabel::III => {
            let chi = desc.chi.unwrap();
            let mut s = Sizing::new(ell, p);
            s.add_char(&chi).add_steinberg();
            let (field, group) = s.build()?;
            let tau = field.from_u64(tau_scalar);
            let st2 = steinberg_rep(SteinbergKind::St2, &tau, &field, &group, sqrt_choice)?;
            let a = twist(&st2, &chi, sqrt_choice)?;
            let rep = paired_sum(&a, &chi, sqrt_choice)?;
            let st = steps(&[
                (&[0], format!("{}", chi.mul(&half(1)))),
                (&[1], format!("{}", chi.mul(&half(-1)))),
                (&[2], format!("{}", half(1))),
                (&[3], format!("{}", half(-1))),
            ]);
            Ok(Concretization {
                rep,
                steps: st,
                tau,
                sqrt_choice,
            })
        }
        GroupLabel::IV => {
            let mut s = Sizing::new(ell, p);
            s.add_steinberg();
            let (field, group) = s.build()?;
            let tau = field.from_u64(tau_scalar);
            let rep = steinberg_rep(SteinbergKind::St4, &tau, &field, &group, sqrt_choice)?;
            let st = steps(&[
                (&[0], format!("{}", half(3))),
                (&[1], format!("{}", half(1))),
                (&[2], format!("{}", half(-1))),
                (&[3], format!("{}", half(-3))),
            ]);
            Ok(Concretization {
                rep,
                steps: st,
                tau,
                sqrt_choice,
            })
        }
        GroupLabel::V | GroupLabel::VI => {
            let xi = if desc.group == GroupLabel::V {
                desc.xi.unwrap()
            } else {
                trivial_char(ell)
            };
            let mut s = Sizing::new(ell, p);
            s.add_char(&xi).add_steinberg();
            let (field, group) = s.build()?;
            let tau = field.from_u64(tau_scalar);
            let st2 = steinberg_rep(SteinbergKind::St2, &tau, &field, &group, sqrt_choice)?;
            let inner = twist(&st2, &xi, sqrt_choice)?;
            let rep = interleave(&st2, &inner)?;
            let st = steps(&[
                (&[0], format!("{}", half(1))),
                (&[3], format!("{}", half(-1))),
                (&[1], format!("{}", xi.mul(&half(1)))),
                (&[2], format!("{}", xi.mul(&half(-1)))),
            ]);
            Ok(Concretization {
                rep,
                steps: st,
                tau,
                sqrt_choice,
            })
        }
        GroupLabel::VII | GroupLabel::VIII | GroupLabel::IX => {
            let psi = desc.psi.unwrap();
            let sub = psi.subgroup_char();
            let omega = induced_det_char(ell, &sub);
            let chi = match desc.group {
                GroupLabel::VII => desc.chi.unwrap(),
                GroupLabel::VIII => trivial_char(ell),
                _ => nu1.mul(&desc.xi.unwrap()),
            };
            // fold the twist inside the induction: with A = chi (x) psi the
            // adjoint comes out as ad psi (+) chi ad0 (+) chi^{-1} ad0
            let folded = sub.mul(&restrict_char(&chi, sub.frame));
            let c = chi.mul(&omega); // similitude
            let mut s = Sizing::new(ell, p);
            s.add_char_with_multiplier(&folded.chi, 2, sub.frame.inertia_step())
                .add_char(&omega)
                .add_char(&chi)
                .add_char(&c)
                .require_even_m();
            if sub.frame.needs_even_r() {
                s.require_even_r();
            }
            let (field, group) = s.build()?;
            let a = induce(&field, &group, &folded, sqrt_choice)?;
            let rep = paired_sum(&a, &c, sqrt_choice)?;
            let st = steps(&[
                (&[0, 1], format!("({chi})x(psi)")),
                (&[2, 3], "psi'".into()),
            ]);
            Ok(Concretization {
                rep,
                steps: st,
                tau: field.zero(),
                sqrt_choice,
            })
        }
        GroupLabel::X => {
            let psi = desc.psi.unwrap();
            let sub = psi.subgroup_char();
            let omega = induced_det_char(ell, &sub);
            let mut s = Sizing::new(ell, p);
            s.add_char_with_multiplier(&sub.chi, 2, sub.frame.inertia_step())
                .add_char(&omega)
                .require_even_m();
            if sub.frame.needs_even_r() {
                s.require_even_r();
            }
            let (field, group) = s.build()?;
            let outer = diag_pair(&omega, &trivial_char(ell), &field, &group, sqrt_choice)?;
            let inner = induce(&field, &group, &sub, sqrt_choice)?;
            let rep = interleave(&outer, &inner)?;
            let st = steps(&[
                (&[0], format!("{omega}")),
                (&[1, 2], "psi".into()),
                (&[3], "1".into()),
            ]);
            Ok(Concretization {
                rep,
                steps: st,
                tau: field.zero(),
                sqrt_choice,
            })
        }
        GroupLabel::XI => {
            let psi = desc.psi.unwrap();
            let sub = psi.subgroup_char();
            let mut s = Sizing::new(ell, p);
            s.add_char_with_multiplier(&sub.chi, 2, sub.frame.inertia_step())
                .add_steinberg()
                .require_even_m();
            if sub.frame.needs_even_r() {
                s.require_even_r();
            }
            let (field, group) = s.build()?;
            let tau = field.from_u64(tau_scalar);
            let outer = steinberg_rep(SteinbergKind::St2, &tau, &field, &group, sqrt_choice)?;
            let inner = induce(&field, &group, &sub, sqrt_choice)?;
            let rep = interleave(&outer, &inner)?;
            let st = steps(&[
                (&[0], format!("{}", half(1))),
                (&[3], format!("{}", half(-1))),
                (&[1, 2], "psi".into()),
            ]);
            Ok(Concretization {
                rep,
                steps: st,
                tau,
                sqrt_choice,
            })
        }
        GroupLabel::ScIrreducible => {
            let mchi = desc.mchi.unwrap();
            let sub = SubgroupChar::new(IndFrame::Biquadratic, mchi);
            let conj = sub.conjugates(ell);
            // candidate pairings sigma0 with chi * chi^{sigma0} Galois-invariant
            let mut pairings = Vec::new();
            for cand in &conj[1..] {
                let c_h = sub.mul(cand);
                if c_h.conj_by_f(ell).chi == c_h.chi && c_h.conj_by_u(ell).chi == c_h.chi {
                    pairings.push(c_h);
                }
            }
            let mut s = Sizing::new(ell, p);
            s.add_char_with_multiplier(&sub.chi, 2, 2)
                .require_even_r()
                .require_even_m();
            for c_h in &pairings {
                s.require_root(2 * c_h.chi.frob_order());
                s.require_root(2 * c_h.chi.inertia_order());
            }
            let (field, group) = s.build()?;
            let raw = induce(&field, &group, &sub, sqrt_choice)?;
            let st = steps(&[(&[0, 1, 2, 3], "Ind(mchi)".into())]);
            // Try to realize an invariant alternating form.  A regular tame
            // chi never admits one (the pairing condition ord chi(u^2) |
            // (ell^2-1)/2 is exactly the condition for the u-conjugate to
            // fix chi), so the GL_4 model is returned when none exists; the
            // supercuspidal sieve and oracle work at the G_M level where
            // the symplectic structure is not needed.
            for c_h in &pairings {
                let vf2 = c_h.chi.eval_frobenius(&field, sqrt_choice)?;
                let vu2 = c_h.chi.eval_inertia(&field)?;
                for cf in field.sqrt_candidates(&vf2) {
                    for cu in field.sqrt_candidates(&vu2) {
                        let Some(b) = invariant_alternating_form(&raw, &cf, &cu) else {
                            continue;
                        };
                        let Some(t) = symplectic_basis_change(&b) else {
                            continue;
                        };
                        let rep = raw.conjugate_by(&t)?;
                        return Ok(Concretization {
                            rep,
                            steps: st,
                            tau: field.zero(),
                            sqrt_choice,
                        });
                    }
                }
            }
            Ok(Concretization {
                rep: raw,
                steps: st,
                tau: field.zero(),
                sqrt_choice,
            })
        }
        GroupLabel::ScPair => {
            let p1 = desc.psi.unwrap();
            let p2 = desc.psi2.unwrap();
            let s1 = p1.subgroup_char();
            let s2 = p2.subgroup_char();
            let mut s = Sizing::new(ell, p);
            s.add_char_with_multiplier(&s1.chi, 2, s1.frame.inertia_step())
                .add_char_with_multiplier(&s2.chi, 2, s2.frame.inertia_step())
                .require_even_m();
            if s1.frame.needs_even_r() || s2.frame.needs_even_r() {
                s.require_even_r();
            }
            let (field, group) = s.build()?;
            let w1 = induce(&field, &group, &s1, sqrt_choice)?;
            let w2 = induce(&field, &group, &s2, sqrt_choice)?;
            let rep = interleave(&w1, &w2)?;
            let st = steps(&[(&[0, 3], "Ind(chi1)".into()), (&[1, 2], "Ind(chi2)".into())]);
            Ok(Concretization {
                rep,
                steps: st,
                tau: field.zero(),
                sqrt_choice,
            })
        }
    }
}

/// The genericity predicate on a filtration: every step isomorphic to a
/// cyclotomic twist of another must be adjacent to its twist partner,
/// with an inertially non-split connecting extension.
pub fn is_generic(rep: &ConcreteRep, steps: &[FiltrationStep]) -> Result<bool, TameError> {
    let field = rep.field();
    let ell_elt = field.from_u64(rep.group().ell() % field.characteristic());
    let order: Vec<usize> = steps.iter().flat_map(|s| s.indices.clone()).collect();
    if order.len() != rep.dim() {
        return Err(TameError::Constraint(
            "filtration does not exhaust the representation".into(),
        ));
    }
    let perm_rep = rep.permuted(&order)?;
    // block-upper-triangularity check
    let sizes: Vec<usize> = steps.iter().map(|s| s.indices.len()).collect();
    let offset: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    for m in [perm_rep.frobenius_image(), perm_rep.inertia_image()] {
        for (bi, &oi) in offset.iter().enumerate() {
            for (bj, &oj) in offset.iter().enumerate() {
                if bi <= bj {
                    continue;
                }
                for i in 0..sizes[bi] {
                    for j in 0..sizes[bj] {
                        if !m[(oi + i, oj + j)].is_zero() {
                            return Err(TameError::Constraint(
                                "filtration inconsistent with representation".into(),
                            ));
                        }
                    }
                }
            }
        }
    }
    // diagonal blocks as step representations
    let block = |m: &FMatrix, k: usize| -> FMatrix {
        let rows: Vec<usize> = (offset[k]..offset[k] + sizes[k]).collect();
        m.submatrix(&rows, &rows)
    };
    let step_gens: Vec<(FMatrix, FMatrix)> = (0..steps.len())
        .map(|k| {
            (
                block(perm_rep.frobenius_image(), k),
                block(perm_rep.inertia_image(), k),
            )
        })
        .collect();
    // step_i isomorphic to step_j(1)?
    let twisted_iso = |i: usize, j: usize| -> bool {
        if sizes[i] != sizes[j] {
            return false;
        }
        let (af, au) = &step_gens[i];
        let (bf, bu) = &step_gens[j];
        let bf_tw = bf.scale(&ell_elt);
        crate::linalg::hom_dimension(&[af, au], &[&bf_tw, bu]) > 0
    };
    for i in 0..steps.len() {
        let has_partner = (0..steps.len()).any(|j| twisted_iso(i, j));
        if !has_partner {
            continue;
        }
        if i + 1 >= steps.len() || !twisted_iso(i, i + 1) {
            return Ok(false);
        }
        // connecting block of the inertia image must be nonzero
        let m = perm_rep.inertia_image();
        let mut nonzero = false;
        for a in 0..sizes[i] {
            for b in 0..sizes[i + 1] {
                if !m[(offset[i] + a, offset[i + 1] + b)].is_zero() {
                    nonzero = true;
                }
            }
        }
        if !nonzero {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::similitude;
    use crate::tamerep::descriptor::DihedralData;
    use crate::tamerep::QuadExt;

    fn desc_iv(ell: u64) -> LocalTypeDescriptor {
        LocalTypeDescriptor::new(GroupLabel::IV, ell)
    }

    #[test]
    fn group_iv_concretization_is_st4() {
        let c = concretize(&desc_iv(3), 7).unwrap();
        assert_eq!(c.rep.dim(), 4);
        assert!(similitude(c.rep.frobenius_image()).is_some());
        // semisimplification diagonal: s^3, s, s^{-1}, s^{-3} with s^2 = 3
        let rf = c.rep.frobenius_image();
        let s3 = &rf[(1, 1)].pow(3);
        assert_eq!(&rf[(0, 0)], s3);
        assert_eq!(&rf[(1, 1)] * &rf[(2, 2)], c.rep.field().one());
    }

    #[test]
    fn group_iv_is_generic_iff_tau_nonzero() {
        let d = desc_iv(3);
        let c = concretize(&d, 7).unwrap();
        assert!(is_generic(&c.rep, &c.steps).unwrap());
        let c0 = concretize_with(&d, 7, 7, SqrtChoice::Plus).unwrap(); // tau = 7 = 0 mod 7
        assert!(!is_generic(&c0.rep, &c0.steps).unwrap());
    }

    #[test]
    fn group_i_diagonal_and_vacuously_generic() {
        let mut d = LocalTypeDescriptor::new(GroupLabel::I, 3);
        d.chi1 = Some(trivial_char(3));
        d.chi2 = Some(trivial_char(3));
        let c = concretize(&d, 7).unwrap();
        assert_eq!(c.rep.dim(), 4);
        assert_eq!(
            *c.rep.frobenius_image(),
            FMatrix::identity(c.rep.field(), 4)
        );
        assert!(is_generic(&c.rep, &c.steps).unwrap());
    }

    #[test]
    fn groups_ii_iii_v_vi_land_in_gsp4_and_are_generic() {
        let mut ii = LocalTypeDescriptor::new(GroupLabel::II, 5);
        ii.chi = Some(SymChar::unramified(5, 3, 1));
        let mut iii = LocalTypeDescriptor::new(GroupLabel::III, 5);
        iii.chi = Some(SymChar::unramified(5, 2, 1));
        let mut v = LocalTypeDescriptor::new(GroupLabel::V, 5);
        v.xi = Some(SymChar::ramified(5, 2, 1));
        let vi = LocalTypeDescriptor::new(GroupLabel::VI, 5);
        for (name, d) in [("II", ii), ("III", iii), ("V", v), ("VI", vi)] {
            let c = concretize(&d, 11).unwrap();
            assert!(
                similitude(c.rep.frobenius_image()).is_some(),
                "{name}: R_F not symplectic"
            );
            assert!(
                similitude(c.rep.inertia_image()).is_some(),
                "{name}: R_u not symplectic"
            );
            assert!(is_generic(&c.rep, &c.steps).unwrap(), "{name} not generic");
        }
    }

    #[test]
    fn dihedral_groups_land_in_gsp4() {
        let psi = DihedralData {
            ext: QuadExt::Unramified,
            chi: SymChar::new(9, 1, 0, 0, 8, 1),
        };
        let mut x = LocalTypeDescriptor::new(GroupLabel::X, 3);
        x.psi = Some(psi);
        let c = concretize(&x, 7).unwrap();
        assert!(similitude(c.rep.frobenius_image()).is_some());
        assert!(similitude(c.rep.inertia_image()).is_some());

        let mut vii = LocalTypeDescriptor::new(GroupLabel::VII, 3);
        vii.chi = Some(SymChar::unramified(3, 4, 1));
        vii.psi = Some(psi);
        let c7 = concretize(&vii, 7).unwrap();
        assert!(similitude(c7.rep.frobenius_image()).is_some());
        assert!(similitude(c7.rep.inertia_image()).is_some());
    }

    #[test]
    fn group_xi_concretizes_with_trivial_det() {
        // det(Ind chi) = 1: chi(F^2) = -1 cancels the permutation sign, and
        // chi(u^2) of order 4 | ell + 1 kills the inertia determinant.
        let mut xi_desc = LocalTypeDescriptor::new(GroupLabel::XI, 3);
        xi_desc.psi = Some(DihedralData {
            ext: QuadExt::Unramified,
            chi: SymChar::new(9, 2, 1, 0, 4, 1),
        });
        let c = concretize(&xi_desc, 7).unwrap();
        assert!(similitude(c.rep.frobenius_image()).is_some());
        assert!(similitude(c.rep.inertia_image()).is_some());
        assert!(is_generic(&c.rep, &c.steps).unwrap());
        // det = nu fails the omega_psi = 1 constraint
        let mut bad = xi_desc.clone();
        bad.psi = Some(DihedralData {
            ext: QuadExt::Unramified,
            chi: SymChar::new(9, 2, 1, 1, 4, 1),
        });
        assert!(bad.validate().is_err());
    }

    #[test]
    fn sc_irreducible_gives_gl4_model_for_regular_tame_chi() {
        // A regular tame chi admits no invariant alternating form (the
        // pairing condition coincides with u-conjugation fixing chi), so
        // the concretization is the GL_4 induction.
        let mut d = LocalTypeDescriptor::new(GroupLabel::ScIrreducible, 3);
        d.mchi = Some(SymChar::new(9, 1, 0, 0, 8, 1));
        let c = concretize(&d, 7).unwrap();
        assert_eq!(c.rep.dim(), 4);
        assert_eq!(
            crate::linalg::commutant_dimension(&[c.rep.frobenius_image(), c.rep.inertia_image()]),
            1
        );
        assert!(similitude(c.rep.frobenius_image()).is_none());
    }

    #[test]
    fn induction_sizing_handles_mixed_orders() {
        // inertia roots leak into the Frobenius image of an induction;
        // exercise a descriptor with nontrivial orders on both generators
        let mut d = LocalTypeDescriptor::new(GroupLabel::ScIrreducible, 7);
        d.mchi = Some(SymChar::new(49, 3, 1, 0, 16, 1)); // 16 | 48
        for p in [5u64, 11, 13, 17] {
            let c = concretize(&d, p).unwrap();
            assert_eq!(c.rep.dim(), 4);
        }
        let mut x = LocalTypeDescriptor::new(GroupLabel::X, 7);
        x.psi = Some(DihedralData {
            ext: QuadExt::Unramified,
            chi: SymChar::new(49, 4, 1, 0, 16, 1),
        });
        for p in [5u64, 11, 13] {
            let c = concretize(&x, p).unwrap();
            assert!(similitude(c.rep.frobenius_image()).is_some());
        }
    }

    #[test]
    fn is_generic_rejects_inconsistent_filtration() {
        let c = concretize(&desc_iv(3), 7).unwrap();
        let backwards: Vec<FiltrationStep> = c.steps.iter().rev().cloned().collect();
        assert!(is_generic(&c.rep, &backwards).is_err());
    }

    #[test]
    fn sc_pair_interleaves() {
        // ramified chi1 with v_u = zeta_4 and unramified chi2 with
        // w = zeta_8 satisfy det Ind chi1 = det Ind chi2 (= zeta_2 on F,
        // zeta_4^3 on u), computed the slow way in the margin.
        let mut d = LocalTypeDescriptor::new(GroupLabel::ScPair, 5);
        d.psi = Some(DihedralData {
            ext: QuadExt::Ramified1,
            chi: SymChar::new(5, 1, 0, 0, 4, 1),
        });
        d.psi2 = Some(DihedralData {
            ext: QuadExt::Unramified,
            chi: SymChar::new(25, 1, 0, 0, 8, 1),
        });
        let c = concretize(&d, 7).unwrap();
        assert!(similitude(c.rep.frobenius_image()).is_some());
        assert!(similitude(c.rep.inertia_image()).is_some());
    }
}
