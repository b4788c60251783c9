//! Finite preordered monoids, their positive cones, Schreier split
//! extensions and preordered actions.
//!
//! Monoids are written additively on carriers `{0, .., n-1}`.

pub mod actions;
pub mod builtin;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod format;
pub mod monoid;
pub mod pom;
pub mod relation;
pub mod report;
pub mod schreier;
pub mod zz;

pub use actions::{ConedSplitExtension, PreorderedAction};
pub use constructions::{FreeFragment, PreorderedSet, Word};
pub use error::{Error, Result};
pub use format::{parse, serialize, Document};
pub use monoid::{Congruence, FiniteMonoid, MonoidHom, Submonoid};
pub use pom::PreorderedMonoid;
pub use relation::Preorder;
pub use schreier::{ActionTable, SplitExtension};
