//! Graded weak identities of the pair `(M₂, sl₂)` over the integers.
//!
//! The relatively free algebra is modelled by its canonical basis
//! ([`freealg`]), identities are decided by evaluation on generic matrices
//! ([`genmat`]), and the finite-generation machinery (orders on the basis,
//! embeddings, Euclidean reduction) lives in [`orders`] and [`specht`].

pub mod error;
pub mod freealg;
pub mod genmat;
pub mod lattice;
pub mod orders;
pub mod ring;
pub mod specht;
pub mod stream;

pub use error::{Error, Result};
pub use freealg::{
    CanonicalMonomial, FreePolynomial, Grade, GradedLetter, GradedLieExpr, GradedWord,
    QuotientPolynomial, Sign,
};
pub use genmat::{GMatrix2, GenericEval};
pub use orders::{MonotoneInjection, Profile};
