//! The group GSp_4 and its Lie algebra sp_4: similitude character,
//! adjoint action, parity of complex conjugation, Euler-characteristic
//! defect.
//!
//! The symplectic form is the fixed antidiagonal
//!     J = [[ .  .  .  1 ]
//!          [ .  .  1  . ]
//!          [ . -1  .  . ]
//!          [-1  .  .  . ]]
//! and sp_4 = { X : X^t J + J X = 0 } is 10-dimensional.  The adjoint
//! representation used throughout is this sp_4; the 11-dimensional
//! variant with the scalar line is available separately.

use thiserror::Error;

use crate::ff::{ExtField, FqElem};
use crate::linalg::{FMatrix, LinalgError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymplecticError {
    #[error("matrix is not a symplectic similitude")]
    NotSimilitude,
    #[error("matrix is not an involution")]
    NotInvolution,
    #[error("characteristic 2 not supported")]
    CharTwo,
    #[error("involution in GSp4 with eigenvalue multiplicities other than (4,0),(0,4),(2,2)")]
    ClassificationFailure,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Parity class of a complex-conjugation involution in GSp4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityClass {
    Even,
    OddI,
    OddII,
}

impl ParityClass {
    pub fn label(self) -> &'static str {
        match self {
            ParityClass::Even => "even",
            ParityClass::OddI => "odd I",
            ParityClass::OddII => "odd II",
        }
    }
}

/// The fixed symplectic form J over the given field.
pub fn symplectic_form(field: &ExtField) -> FMatrix {
    FMatrix::from_int_rows(
        field,
        &[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[-1, 0, 0, 0]],
    )
}

/// The similitude factor c with g^t J g = c J, if g lies in GSp4.
pub fn similitude(g: &FMatrix) -> Option<FqElem> {
    assert!(g.is_square() && g.rows() == 4, "GSp4 lives on 4x4 matrices");
    let field = g.field();
    let j = symplectic_form(field);
    let gtjg = g.transpose().mul(&j).mul(g);
    let c = gtjg[(0, 3)].clone();
    if c.is_zero() {
        return None;
    }
    if gtjg == j.scale(&c) {
        Some(c)
    } else {
        None
    }
}

/// Ordered basis of sp_4: two Cartan generators, then the eight root
/// vectors ordered by height (positive roots first).
///
/// With torus diag(u, v, 1/v, 1/u) the root values on the eight vectors
/// are u/v, v^2, uv, u^2 and their inverses, in that order.
pub fn sp4_basis(field: &ExtField) -> Vec<FMatrix> {
    let m = |rows: &[&[i64]]| FMatrix::from_int_rows(field, rows);
    vec![
        // Cartan: E00 - E33, E11 - E22
        m(&[&[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, -1]]),
        m(&[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 0]]),
        // short positive root u/v: E01 - E23
        m(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 0, 0]]),
        // long positive root v^2: E12
        m(&[&[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]),
        // height 2, uv: E02 + E13
        m(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 0, 0, 0], &[0, 0, 0, 0]]),
        // height 3, u^2: E03
        m(&[&[0, 0, 0, 1], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0]]),
        // negatives, same order
        m(&[&[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, -1, 0]]),
        m(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 0]]),
        m(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0]]),
        m(&[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0]]),
    ]
}

/// sp_4 plus the scalar line: the 11-dimensional gsp_4 variant.
pub fn gsp4_basis(field: &ExtField) -> Vec<FMatrix> {
    let mut b = sp4_basis(field);
    b.push(FMatrix::identity(field, 4));
    b
}

/// Coordinates of y in the span of the basis, or None if it is outside.
pub fn coords_in_basis(y: &FMatrix, basis: &[FMatrix]) -> Option<Vec<FqElem>> {
    let field = y.field();
    let n2 = y.rows() * y.cols();
    let k = basis.len();
    let b = FMatrix::from_fn(field, n2, k, |e, c| {
        basis[c][(e / y.cols(), e % y.cols())].clone()
    });
    let rhs = FMatrix::from_fn(field, n2, 1, |e, _| y[(e / y.cols(), e % y.cols())].clone());
    let x = b.solve_multi(&rhs)?;
    Some((0..k).map(|i| x[(i, 0)].clone()).collect())
}

/// Matrix of X -> g X g^{-1} in the given basis of a conjugation-stable
/// subspace of gl_4.  Requires g to be a symplectic similitude.
pub fn adjoint_action(g: &FMatrix, basis: &[FMatrix]) -> Result<FMatrix, SymplecticError> {
    if similitude(g).is_none() {
        return Err(SymplecticError::NotSimilitude);
    }
    let field = g.field().clone();
    let ginv = g.inverse().ok_or(SymplecticError::NotSimilitude)?;
    let k = basis.len();
    let mut out = FMatrix::zeros(&field, k, k);
    for (col, x) in basis.iter().enumerate() {
        let y = g.mul(x).mul(&ginv);
        let coords = coords_in_basis(&y, basis).ok_or(SymplecticError::NotSimilitude)?;
        for (row, c) in coords.into_iter().enumerate() {
            out[(row, col)] = c;
        }
    }
    Ok(out)
}

/// Classify an involution in GSp4 as even / odd I / odd II.
pub fn parity_class(c: &FMatrix) -> Result<ParityClass, SymplecticError> {
    let field = c.field();
    if field.characteristic() == 2 {
        return Err(SymplecticError::CharTwo);
    }
    let id = FMatrix::identity(field, 4);
    if c.mul(c) != id {
        return Err(SymplecticError::NotInvolution);
    }
    let sim = similitude(c).ok_or(SymplecticError::NotSimilitude)?;
    if *c == id || *c == id.neg() {
        return Ok(ParityClass::Even);
    }
    let plus = c.sub(&id).kernel_basis().len();
    let minus = c.add(&id).kernel_basis().len();
    match (plus, minus) {
        (2, 2) => {
            if sim == field.one() {
                Ok(ParityClass::OddI)
            } else if sim == field.from_i64(-1) {
                Ok(ParityClass::OddII)
            } else {
                Err(SymplecticError::ClassificationFailure)
            }
        }
        (4, 0) | (0, 4) => Ok(ParityClass::Even),
        _ => Err(SymplecticError::ClassificationFailure),
    }
}

/// A standard representative of each parity class.
pub fn parity_representative(field: &ExtField, cls: ParityClass) -> FMatrix {
    match cls {
        ParityClass::Even => FMatrix::identity(field, 4).neg(),
        ParityClass::OddI => FMatrix::diagonal(
            field,
            &[
                field.one(),
                field.from_i64(-1),
                field.from_i64(-1),
                field.one(),
            ],
        ),
        ParityClass::OddII => FMatrix::diagonal(
            field,
            &[
                field.one(),
                field.from_i64(-1),
                field.one(),
                field.from_i64(-1),
            ],
        ),
    }
}

/// d1 - d2 = 1 + dim sp_4 - dim sp_4^{c=1}, computed by an explicit kernel
/// over the adjoint action of the class representative (not hardcoded).
pub fn euler_defect(field: &ExtField, cls: ParityClass) -> Result<i64, SymplecticError> {
    let rep = parity_representative(field, cls);
    let basis = sp4_basis(field);
    let ad = adjoint_action(&rep, &basis)?;
    let fixed = ad.sub(&FMatrix::identity(field, 10)).kernel_basis().len();
    Ok(1 + 10 - fixed as i64)
}
