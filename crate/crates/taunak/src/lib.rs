//! Combinatorics of serial modules over connected Nakayama algebras.
//!
//! The crate models an algebra by its Kupisch series and derives, purely
//! combinatorially:
//!
//! * Hom/Ext/Auslander-Reiten arithmetic of serial modules ([`algebra`]);
//! * the arc diagram on a punctured disk whose arcs are the bricks ([`arcs`]);
//! * semibrick pairs and two-term simple-minded collections ([`smc`]);
//! * support tau-tilting pairs, wide subcategories and reduction ([`tautilt`]);
//! * the lattice of torsion classes with its brick labeling ([`lattice`]);
//! * the picture group with several presentations, certified through a brick
//!   multiplication ring ([`picture`]);
//! * the cubical morphism category of wide subcategories and the
//!   nonpositive-curvature check of its classifying complex ([`cluster`]).

pub mod algebra;
pub mod arcs;
pub mod smc;
pub mod tautilt;
pub mod lattice;
pub mod picture;
pub mod cluster;
pub mod export;

pub use algebra::{AlgebraSpec, HomKind, Indec, SignedIndec, SpecError};
