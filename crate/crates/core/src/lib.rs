//! Grothendieck monoids of extriangulated categories, computed exactly.
//!
//! The kernel is [`monoid::CanonicalMonoid`], a finitely presented commutative
//! monoid of the form `(ℤ^J / L) ⊕ ℕ^(n − |J|)`. On top of it sit the module
//! category of a linearly oriented `A_n` quiver ([`quiver`]) and the
//! intermediate subcategories of its derived category ([`intermediate`]).
//! [`oracle`] recomputes the combinatorial rules by linear algebra over `𝔽₂`.

pub mod cli;
pub mod error;
pub mod intermediate;
pub mod lattice;
pub mod monoid;
pub mod oracle;
pub mod positivity;
pub mod quiver;
pub mod verify;

mod json;

pub use error::{Error, Result};
pub use lattice::{hnf, AbGroupPresentation, IntLattice, IntVec};
pub use monoid::{CanonicalMonoid, FaceDesc, MonoidElem, SubmonoidGens, SubtractiveVerdict};
pub use quiver::{Interval, LinearAQuiver, ModuleObj, TorsionfreeClass};
