//! Weaving braids and their closures.
//!
//! The crate builds the braids `(σ1 σ2⁻¹ σ3 ⋯)^q`, closes them into planar
//! diagrams and computes the combinatorial quantities attached to them:
//! warping degrees of braids and diagrams, region crossing changes over
//! GF(2), isolate-region numbers, linking numbers, and triviality
//! certificates built from descending sequences, Markov simplification and
//! the Kauffman bracket.
//!
//! Everything here is pure computation on owned values and only needs
//! `alloc`. File formats and the command line live in the `weaving` crate.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod bracket;
pub mod braid;
pub mod certify;
pub mod closure;
mod error;
pub mod gf2;
pub mod laurent;
pub mod limits;
pub mod markov;
pub mod rational;
pub mod region;
pub mod search;
pub mod warping;

pub use braid::{BraidWord, CrossingRecord, Letter, Sign, StrandPermutation};
pub use closure::{ClosureDiagram, Region, RegionLabel};
pub use error::{Error, Result};
pub use limits::Limits;
