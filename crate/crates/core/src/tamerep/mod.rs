//! Finite models of the tame quotient of G_ell, symbolic local characters,
//! Steinberg-type constructors, dihedral and biquadratic inductions, and
//! concretization of local-type descriptors into matrices over F_{p^d}.

mod chars;
mod concretize;
mod descriptor;
mod group;
mod induction;
mod rep;
pub mod sizing;

pub use chars::{nu, nu_half_power, trivial_char, SymChar};
pub use concretize::{concretize, concretize_with, is_generic, Concretization, FiltrationStep};
pub use descriptor::{parse_descriptor, DihedralData, GroupLabel, LocalTypeDescriptor};
pub use group::{TameElt, TameGroup};
pub use induction::{
    dihedral_rep, induce, induce_biquadratic, induced_det_char, invariant_alternating_form,
    restrict_char, symplectic_basis_change, IndFrame, QuadExt, SubgroupChar,
};
pub use rep::{
    char_rep, direct_sum, rho_t, steinberg_rep, tensor, twist, ConcreteRep, SqrtChoice,
    SteinbergKind,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TameError {
    #[error("tame relation requires ell^r = 1 mod m (ell={ell}, r={r}, m={m})")]
    BadPresentation { ell: u64, r: u64, m: u64 },
    #[error("character of inertia order {n_i} is not a homomorphism here (needs n_i | {bound})")]
    NotHomomorphism { n_i: u64, bound: u64 },
    #[error("field F_{{{p}^{d}}} cannot realize a root of unity of order {n}")]
    RootUnrealizable { p: u64, d: usize, n: u64 },
    #[error("no square root of {what} in the field")]
    NoSquareRoot { what: String },
    #[error("additive parameter requires p | m (p={p}, m={m})")]
    NeedsPDividesM { p: u64, m: u64 },
    #[error("tame relation fails on constructed matrices")]
    RelationViolated,
    #[error("inertia image has order not dividing m")]
    InertiaOrderViolated,
    #[error("frobenius image has order not dividing r")]
    FrobeniusOrderViolated,
    #[error("ell must be odd for inductions (ell = 2 excluded)")]
    EllIsTwo,
    #[error("{0}")]
    Constraint(String),
    #[error("representations live over different fields or groups")]
    Mismatch,
    #[error("induced representation admits no invariant symplectic form")]
    NotSymplectic,
    #[error(transparent)]
    Field(#[from] crate::ff::FieldError),
    #[error(transparent)]
    Linalg(#[from] crate::linalg::LinalgError),
}
