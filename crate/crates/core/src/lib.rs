//! Decides whether a positively graded algebra `A = k[x₁..xₙ]/I` is a regular
//! graded local ring and whether it is a graded isolated singularity.

pub mod analysis;
pub mod error;
pub mod groebner;
pub mod invariants;
pub mod limits;
pub mod monomial_oracle;
pub mod numeric;
pub mod polyparse;
pub mod polyring;
pub mod regularity;
pub mod singularity;

pub use error::{Error, Result};
pub use limits::{Budget, Limits};
pub use numeric::{Coeff, FieldSpec, PrimeFieldElement, Rational};
pub use polyring::{GradedRingPresentation, GradingSpec, Monomial, PolyRing, Polynomial, TermOrder, TermOrderKind};
