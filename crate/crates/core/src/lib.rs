//! Exact verification of almost 3-contact metric structures on Lie algebras,
//! with a focus on degenerate 3-(α,δ)-Sasakian structures.
//!
//! The crate is organized bottom-up:
//!
//! - [`scalar`], [`linalg`], [`tensor`], [`forms`]: exact (rational) and
//!   tolerance-based (float) scalars, dense elimination, vectors, covectors,
//!   endomorphisms, bilinear forms and constant alternating forms;
//! - [`lie`]: structure constants, Jacobi check, Chevalley–Eilenberg
//!   differential, center, lower central series and structure derivations;
//! - [`contact`]: almost contact axioms, compatibility, the structure
//!   equations and parameter inference;
//! - [`constructions`]: quaternionic Heisenberg algebras, ℋ-homothetic
//!   deformations, flat central extensions, quaternionic Gram–Schmidt and the
//!   isomorphism onto the Heisenberg model.

pub mod constructions;
pub mod contact;
pub mod error;
pub mod forms;
pub mod lie;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod tensor;

pub use contact::{
    AlmostContact3Structure, AlmostContactStructure, InferredParameters, SasakiParams, SasakianLieAlgebra,
};
pub use error::{Error, Result};
pub use forms::AlternatingForm;
pub use lie::{LieAlgebra, Subspace};
pub use linalg::Matrix;
pub use report::{Check, VerificationReport};
pub use scalar::{Approx, Rational, Scalar};
pub use tensor::{BilinearForm, Covector, Endomorphism, Vector};
