//! Concrete matrix representations of a finite tame quotient, and the
//! Steinberg-type constructors rho_t(sigma, N): semisimple part sigma on
//! Frobenius, unipotent part exp(N t) on inertia, subject to the
//! compatibility sigma N sigma^{-1} = ell N.

use super::chars::{eval_ell_half_power, SymChar};
use super::group::{TameElt, TameGroup};
use super::TameError;
use crate::ff::{ExtField, FqElem};
use crate::linalg::FMatrix;

/// Which of the two square roots of ell to use (Plus = first in the
/// field's enumeration order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SqrtChoice {
    Plus,
    Minus,
}

impl SqrtChoice {
    pub fn both() -> [SqrtChoice; 2] {
        [SqrtChoice::Plus, SqrtChoice::Minus]
    }
}

/// The four generalized Steinberg shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SteinbergKind {
    St2,
    St3,
    St22,
    St4,
}

impl SteinbergKind {
    pub fn all() -> [SteinbergKind; 4] {
        [
            SteinbergKind::St2,
            SteinbergKind::St3,
            SteinbergKind::St22,
            SteinbergKind::St4,
        ]
    }

    pub fn dim(self) -> usize {
        match self {
            SteinbergKind::St2 => 2,
            SteinbergKind::St3 => 3,
            SteinbergKind::St22 | SteinbergKind::St4 => 4,
        }
    }

    /// Exponents of the semisimple part as half-integers (numerators over 2).
    pub fn half_exponents(self) -> &'static [i64] {
        match self {
            SteinbergKind::St2 => &[1, -1],
            SteinbergKind::St3 => &[2, 0, -2],
            SteinbergKind::St22 => &[2, 0, 0, -2],
            SteinbergKind::St4 => &[3, 1, -1, -3],
        }
    }

    /// The nilpotent N_1 .. N_4.
    pub fn nilpotent(self, field: &ExtField) -> FMatrix {
        let rows: &[&[i64]] = match self {
            SteinbergKind::St2 => &[&[0, 1], &[0, 0]],
            SteinbergKind::St3 => &[&[0, -2, 0], &[0, 0, 1], &[0, 0, 0]],
            SteinbergKind::St22 => &[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 0, 0]],
            SteinbergKind::St4 => &[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1], &[0, 0, 0, 0]],
        };
        FMatrix::from_int_rows(field, rows)
    }

    /// Numerator over 2 of the cyclotomic shift in the H^0 identity:
    /// H^0(St applied, twisted by chi) = H^0(chi * nu^{shift/2}).
    pub fn h0_shift_num(self) -> i64 {
        match self {
            SteinbergKind::St2 => 1,
            SteinbergKind::St3 | SteinbergKind::St22 => 2,
            SteinbergKind::St4 => 3,
        }
    }

    /// Smallest characteristic over which exp of the nilpotent is defined.
    pub fn min_characteristic(self) -> u64 {
        match self {
            SteinbergKind::St2 | SteinbergKind::St22 => 2,
            SteinbergKind::St3 => 3,
            SteinbergKind::St4 => 5,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SteinbergKind::St2 => "St2",
            SteinbergKind::St3 => "St3",
            SteinbergKind::St22 => "St2,2",
            SteinbergKind::St4 => "St4",
        }
    }
}

/// A matrix representation of a TameGroup, stored by the images of the
/// two generators.  The tame relation and the generator orders are
/// verified at construction, so every value of `evaluate` is consistent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteRep {
    field: ExtField,
    group: TameGroup,
    r_f: FMatrix,
    r_u: FMatrix,
}

impl ConcreteRep {
    pub fn new(
        field: ExtField,
        group: TameGroup,
        r_f: FMatrix,
        r_u: FMatrix,
    ) -> Result<ConcreteRep, TameError> {
        if !r_f.is_square() || !r_u.is_square() || r_f.rows() != r_u.rows() {
            return Err(TameError::Mismatch);
        }
        if *r_f.field() != field || *r_u.field() != field {
            return Err(TameError::Mismatch);
        }
        let n = r_f.rows();
        let id = FMatrix::identity(&field, n);
        let rf_inv = r_f.inverse().ok_or(TameError::RelationViolated)?;
        if r_f.mul(&r_u).mul(&rf_inv) != r_u.pow(group.ell()) {
            return Err(TameError::RelationViolated);
        }
        if r_u.pow(group.inertia_order()) != id {
            return Err(TameError::InertiaOrderViolated);
        }
        if r_f.pow(group.frobenius_order()) != id {
            return Err(TameError::FrobeniusOrderViolated);
        }
        Ok(ConcreteRep {
            field,
            group,
            r_f,
            r_u,
        })
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn group(&self) -> &TameGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.r_f.rows()
    }

    pub fn frobenius_image(&self) -> &FMatrix {
        &self.r_f
    }

    pub fn inertia_image(&self) -> &FMatrix {
        &self.r_u
    }

    /// rho(u^b F^a) = R_u^b R_f^a.
    pub fn evaluate(&self, elt: TameElt) -> FMatrix {
        self.r_u.pow(elt.b).mul(&self.r_f.pow(elt.a))
    }

    /// Scale the generator images by explicit values (a twist by the
    /// character with those values, no validity re-derivation).
    pub fn twist_by_values(&self, vf: &FqElem, vu: &FqElem) -> Result<ConcreteRep, TameError> {
        ConcreteRep::new(
            self.field.clone(),
            self.group.clone(),
            self.r_f.scale(vf),
            self.r_u.scale(vu),
        )
    }

    /// The dual representation g -> rho(g^{-1})^t.
    pub fn dual(&self) -> Result<ConcreteRep, TameError> {
        let rf = self
            .r_f
            .inverse()
            .ok_or(TameError::RelationViolated)?
            .transpose();
        let ru = self
            .r_u
            .inverse()
            .ok_or(TameError::RelationViolated)?
            .transpose();
        ConcreteRep::new(self.field.clone(), self.group.clone(), rf, ru)
    }

    /// Conjugate by t: g -> t^{-1} rho(g) t.
    pub fn conjugate_by(&self, t: &FMatrix) -> Result<ConcreteRep, TameError> {
        let rf = self.r_f.conjugate_by(t)?;
        let ru = self.r_u.conjugate_by(t)?;
        ConcreteRep::new(self.field.clone(), self.group.clone(), rf, ru)
    }

    /// Permute basis vectors: the new k-th basis vector is e_(perm k).
    pub fn permuted(&self, perm: &[usize]) -> Result<ConcreteRep, TameError> {
        let n = self.dim();
        assert_eq!(perm.len(), n);
        let mut t = FMatrix::zeros(&self.field, n, n);
        for (new, &old) in perm.iter().enumerate() {
            t[(old, new)] = self.field.one();
        }
        self.conjugate_by(&t)
    }

    /// The conjugation action on the trace-zero 2x2 matrices, in the basis
    /// (E01, E00 - E11, E10).  Only for 2-dimensional representations.
    pub fn ad0(&self) -> Result<ConcreteRep, TameError> {
        assert_eq!(self.dim(), 2, "ad0 is for 2-dimensional representations");
        let basis = [
            FMatrix::from_int_rows(&self.field, &[&[0, 1], &[0, 0]]),
            FMatrix::from_int_rows(&self.field, &[&[1, 0], &[0, -1]]),
            FMatrix::from_int_rows(&self.field, &[&[0, 0], &[1, 0]]),
        ];
        let act = |g: &FMatrix| -> Result<FMatrix, TameError> {
            let ginv = g.inverse().ok_or(TameError::RelationViolated)?;
            let mut out = FMatrix::zeros(&self.field, 3, 3);
            for (col, x) in basis.iter().enumerate() {
                let y = g.mul(x).mul(&ginv);
                let coords =
                    crate::symplectic::coords_in_basis(&y, &basis).ok_or(TameError::Mismatch)?;
                for (row, c) in coords.into_iter().enumerate() {
                    out[(row, col)] = c;
                }
            }
            Ok(out)
        };
        ConcreteRep::new(
            self.field.clone(),
            self.group.clone(),
            act(&self.r_f)?,
            act(&self.r_u)?,
        )
    }
}

/// The general rho_t(sigma, N) constructor: sigma is the diagonal
/// semisimple part with the given half-integral cyclotomic exponents,
/// and the inertia image is exp(N tau).
pub fn rho_t(
    field: &ExtField,
    group: &TameGroup,
    half_exponents: &[i64],
    nilpotent: &FMatrix,
    tau: &FqElem,
    sqrt_choice: SqrtChoice,
) -> Result<ConcreteRep, TameError> {
    let ell = group.ell();
    let n = half_exponents.len();
    assert_eq!(nilpotent.rows(), n);
    let entries: Result<Vec<FqElem>, TameError> = half_exponents
        .iter()
        .map(|&e| eval_ell_half_power(field, ell, e, sqrt_choice))
        .collect();
    let sigma = FMatrix::diagonal(field, &entries?);
    // compatibility sigma N sigma^{-1} = ell N
    let sigma_inv = sigma.inverse().ok_or(TameError::RelationViolated)?;
    let ell_elt = field.from_u64(ell % field.characteristic());
    if sigma.mul(nilpotent).mul(&sigma_inv) != nilpotent.scale(&ell_elt) {
        return Err(TameError::RelationViolated);
    }
    if !tau.is_zero() && group.inertia_order() % field.characteristic() != 0 {
        return Err(TameError::NeedsPDividesM {
            p: field.characteristic(),
            m: group.inertia_order(),
        });
    }
    let r_u = nilpotent.exp_nilpotent(tau)?;
    ConcreteRep::new(field.clone(), group.clone(), sigma, r_u)
}

/// One of the four named Steinberg representations.
pub fn steinberg_rep(
    kind: SteinbergKind,
    tau: &FqElem,
    field: &ExtField,
    group: &TameGroup,
    sqrt_choice: SqrtChoice,
) -> Result<ConcreteRep, TameError> {
    rho_t(
        field,
        group,
        kind.half_exponents(),
        &kind.nilpotent(field),
        tau,
        sqrt_choice,
    )
}

/// Twist a representation by a symbolic character.
pub fn twist(
    rep: &ConcreteRep,
    chi: &SymChar,
    sqrt_choice: SqrtChoice,
) -> Result<ConcreteRep, TameError> {
    if !chi.is_homomorphism() || rep.group().inertia_order() % chi.inertia_order() != 0 {
        return Err(TameError::NotHomomorphism {
            n_i: chi.inertia_order(),
            bound: rep.group().ell() - 1,
        });
    }
    let vf = chi.eval_frobenius(rep.field(), sqrt_choice)?;
    let vu = chi.eval_inertia(rep.field())?;
    rep.twist_by_values(&vf, &vu)
}

/// Block-diagonal direct sum.
pub fn direct_sum(reps: &[&ConcreteRep]) -> Result<ConcreteRep, TameError> {
    if reps.is_empty() {
        return Err(TameError::Mismatch);
    }
    let f = reps[0].field().clone();
    let g = reps[0].group().clone();
    if reps.iter().any(|r| *r.field() != f || *r.group() != g) {
        return Err(TameError::Mismatch);
    }
    let rf: Vec<&FMatrix> = reps.iter().map(|r| r.frobenius_image()).collect();
    let ru: Vec<&FMatrix> = reps.iter().map(|r| r.inertia_image()).collect();
    ConcreteRep::new(f, g, FMatrix::block_diag(&rf), FMatrix::block_diag(&ru))
}

/// Tensor product (Kronecker on the generator images).
pub fn tensor(a: &ConcreteRep, b: &ConcreteRep) -> Result<ConcreteRep, TameError> {
    if a.field() != b.field() || a.group() != b.group() {
        return Err(TameError::Mismatch);
    }
    ConcreteRep::new(
        a.field().clone(),
        a.group().clone(),
        a.frobenius_image().kronecker(b.frobenius_image()),
        a.inertia_image().kronecker(b.inertia_image()),
    )
}

/// The 1-dimensional representation attached to a symbolic character.
pub fn char_rep(
    chi: &SymChar,
    field: &ExtField,
    group: &TameGroup,
    sqrt_choice: SqrtChoice,
) -> Result<ConcreteRep, TameError> {
    if !chi.is_homomorphism() || group.inertia_order() % chi.inertia_order() != 0 {
        return Err(TameError::NotHomomorphism {
            n_i: chi.inertia_order(),
            bound: group.ell() - 1,
        });
    }
    let vf = chi.eval_frobenius(field, sqrt_choice)?;
    let vu = chi.eval_inertia(field)?;
    let mf = FMatrix::from_fn(field, 1, 1, |_, _| vf.clone());
    let mu = FMatrix::from_fn(field, 1, 1, |_, _| vu.clone());
    ConcreteRep::new(field.clone(), group.clone(), mf, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tamerep::chars::{nu, nu_half_power, trivial_char};
    use crate::tamerep::sizing::group_for;

    #[test]
    fn steinberg_compatibility_all_kinds() {
        for kind in SteinbergKind::all() {
            for (p, ell) in [(5u64, 3u64), (7, 3), (11, 2), (13, 5)] {
                if p < kind.min_characteristic() {
                    continue;
                }
                let (field, group) = group_for(ell, p, &[nu_half_power(ell, 1)], true).unwrap();
                let tau = field.one();
                let rep = steinberg_rep(kind, &tau, &field, &group, SqrtChoice::Plus).unwrap();
                assert_eq!(rep.dim(), kind.dim());
                // tame relation is asserted inside the constructor; spot check too
                let lhs = rep
                    .frobenius_image()
                    .mul(rep.inertia_image())
                    .mul(&rep.frobenius_image().inverse().unwrap());
                assert_eq!(lhs, rep.inertia_image().pow(ell));
            }
        }
    }

    #[test]
    fn st22_and_st4_are_symplectic() {
        for (p, ell) in [(5u64, 3u64), (7, 3), (7, 2), (11, 5), (13, 3)] {
            let (field, group) = group_for(ell, p, &[nu_half_power(ell, 1)], true).unwrap();
            let tau = field.one();
            for kind in [SteinbergKind::St22, SteinbergKind::St4] {
                let rep = steinberg_rep(kind, &tau, &field, &group, SqrtChoice::Plus).unwrap();
                assert!(
                    crate::symplectic::similitude(rep.frobenius_image()).is_some(),
                    "{} R_F not symplectic at p={p} ell={ell}",
                    kind.label()
                );
                assert!(
                    crate::symplectic::similitude(rep.inertia_image()).is_some(),
                    "{} R_u not symplectic at p={p} ell={ell}",
                    kind.label()
                );
            }
        }
    }

    #[test]
    fn st2_tau_one_gives_i_plus_n() {
        // p = 5, ell = 3, sqrt(3) lives in F_25
        let (field, group) = group_for(3, 5, &[nu_half_power(3, 1)], true).unwrap();
        let rep = steinberg_rep(
            SteinbergKind::St2,
            &field.one(),
            &field,
            &group,
            SqrtChoice::Plus,
        )
        .unwrap();
        let expected = FMatrix::identity(&field, 2).add(&SteinbergKind::St2.nilpotent(&field));
        assert_eq!(*rep.inertia_image(), expected);
    }

    #[test]
    fn st4_corner_entry_is_minus_sixth() {
        // p = 7, ell = 3: (1,4) entry of exp(N4) is -1/6 = 1 mod 7
        let (field, group) = group_for(3, 7, &[nu_half_power(3, 1)], true).unwrap();
        let rep = steinberg_rep(
            SteinbergKind::St4,
            &field.one(),
            &field,
            &group,
            SqrtChoice::Plus,
        )
        .unwrap();
        assert_eq!(rep.inertia_image()[(0, 3)], field.one());
    }

    #[test]
    fn tau_zero_is_semisimple() {
        let (field, group) = group_for(3, 7, &[nu_half_power(3, 1)], true).unwrap();
        let rep = steinberg_rep(
            SteinbergKind::St4,
            &field.zero(),
            &field,
            &group,
            SqrtChoice::Plus,
        )
        .unwrap();
        assert_eq!(*rep.inertia_image(), FMatrix::identity(&field, 4));
    }

    #[test]
    fn twist_round_trip() {
        let (field, group) = group_for(3, 5, &[nu_half_power(3, 1)], true).unwrap();
        let rep = steinberg_rep(
            SteinbergKind::St2,
            &field.one(),
            &field,
            &group,
            SqrtChoice::Plus,
        )
        .unwrap();
        let t = twist(&rep, &trivial_char(3), SqrtChoice::Plus).unwrap();
        assert_eq!(t, rep);
        let up = twist(&rep, &nu(3), SqrtChoice::Plus).unwrap();
        let back = twist(&up, &nu(3).inv(), SqrtChoice::Plus).unwrap();
        assert_eq!(back, rep);
    }

    #[test]
    fn st2_twisted_down_is_unipotent_ell_inverse() {
        let (field, group) = group_for(3, 5, &[nu_half_power(3, 1)], true).unwrap();
        let rep = steinberg_rep(
            SteinbergKind::St2,
            &field.one(),
            &field,
            &group,
            SqrtChoice::Plus,
        )
        .unwrap();
        let tw = twist(&rep, &nu_half_power(3, -1), SqrtChoice::Plus).unwrap();
        let ell_inv = field.from_u64(3).inv().unwrap();
        let expected = FMatrix::diagonal(&field, &[field.one(), ell_inv]);
        assert_eq!(*tw.frobenius_image(), expected);
    }

    #[test]
    fn direct_sum_and_tensor_shapes() {
        let (field, group) = group_for(3, 5, &[nu_half_power(3, 1)], true).unwrap();
        let a = steinberg_rep(
            SteinbergKind::St2,
            &field.one(),
            &field,
            &group,
            SqrtChoice::Plus,
        )
        .unwrap();
        let s = direct_sum(&[&a, &a]).unwrap();
        assert_eq!(s.dim(), 4);
        let t = tensor(&a, &a).unwrap();
        assert_eq!(t.dim(), 4);
        let d = a.dual().unwrap();
        assert_eq!(d.dim(), 2);
    }

    #[test]
    fn evaluate_is_homomorphism() {
        let (field, group) = group_for(3, 5, &[nu_half_power(3, 1)], true).unwrap();
        let rep = steinberg_rep(
            SteinbergKind::St4,
            &field.one(),
            &field,
            &group,
            SqrtChoice::Plus,
        )
        .unwrap();
        let els: Vec<TameElt> = group.elements().take(40).collect();
        for &x in &els {
            for &y in els.iter().take(10) {
                assert_eq!(
                    rep.evaluate(group.mul(x, y)),
                    rep.evaluate(x).mul(&rep.evaluate(y))
                );
            }
        }
    }
}
