//! Weyl groups of generalized Cartan matrices, the face lattice of the Tits
//! cone, the face monoid `Ŵ`, and its actions on the Coxeter complex.

pub mod actions;
pub mod cone;
pub mod coxeter;
pub mod error;
pub mod faces;
pub mod gcm;
pub mod monoid;
pub mod subset;
#[cfg(test)]
mod testing;
pub mod verify;

pub use actions::{ActionKind, ComplexElement, LooFacetLabel};
pub use cone::{ConeProfile, Dominance, OracleOutcome, Region, DEFAULT_BUDGET};
pub use coxeter::{FiveFactor, RawWord, RootVector, Side, WeylGroup, Word};
pub use error::{Error, Result};
pub use faces::{Face, FaceInput, FacetInput, FacetLabel};
pub use gcm::{Component, Gcm, TypeClass};
pub use monoid::{Element, ElementInput, NormalForm};
pub use subset::IndexSet;
pub use verify::{Failure, Report, Suite, VerifyParams};
