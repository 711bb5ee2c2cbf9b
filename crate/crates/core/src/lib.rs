//! Exact-arithmetic library for local obstruction invariants of GSp(4)
//! local types.
//!
//! Given the local type of an automorphic representation at a residual
//! prime ell, this crate computes the invariant spaces H^0(G_ell, ad(1))
//! of the twisted adjoint representation two ways — by brute-force linear
//! algebra over finite fields and by character-theoretic criteria — and
//! enumerates the finite set of coefficient primes p where they can be
//! nonzero.

pub mod ff;
pub mod linalg;
pub mod obstruction;
pub mod sieve;
pub mod symplectic;
pub mod tamerep;

pub use ff::{ExtField, FieldError, FqElem};
pub use linalg::FMatrix;
pub use symplectic::ParityClass;
pub use tamerep::{ConcreteRep, SqrtChoice, SteinbergKind, SymChar, TameElt, TameGroup};
