//! Support τ-tilting pairs of string algebras.
//!
//! Given a string algebra presented by a quiver with monomial relations,
//! this crate lists its strings, decides which string modules are τ-rigid
//! and which pairs of rigid objects are compatible, assembles all support
//! τ-tilting pairs with their g-vectors, and builds the Hasse quiver of the
//! mutation order. Every combinatorial verdict can be cross-checked against
//! an independent rank computation in the homotopy category ([`homoracle`]).

pub mod catalog;
pub mod enumeration;
pub mod homoracle;
pub mod linalg;
pub mod presentation;
pub mod report;
pub mod rigidity;
pub mod strings;

pub use enumeration::{build_hasse, Classification, EnumerationError, HassePoset, RigidObject};
pub use presentation::{Algebra, AlgebraError};
pub use rigidity::{CoincidenceRange, RigidityOptions};
pub use strings::{GVector, StringWord};
