//! Exact intersection theory on projective bundles over curves.
//!
//! The crate is layered bottom-up:
//!
//! - [`ring`]: graded rings on two even generators with rewrite rules.
//! - [`presentations`]: the concrete ring families and Betti/Hodge bookkeeping.
//! - [`char_classes`]: Chern and Pontrjagin classes, Riemann–Roch for `χ(O)`.
//! - [`invariants`]: homeomorphism invariants and classification predicates.
//! - [`diophantine`]: exhaustive integer case analyses.
//! - [`replay`]: ordered, machine-checkable reports of the case analyses.
//! - [`expr`] and [`cli`]: a small expression language and the command line.

pub mod char_classes;
pub mod cli;
pub mod diophantine;
pub mod expr;
pub mod invariants;
pub mod presentations;
pub mod replay;
pub mod ring;

pub use ring::{ClassElement, Monomial, Ring, RingError, RingPresentation, Scalar};
