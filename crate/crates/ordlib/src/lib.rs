//! Computational left-ordered and circularly-ordered groups, with the braid
//! groups as the flagship instance.
//!
//! The library is organised around order oracles: a group instance reports
//! the sign of any element, and everything else — floors against a central
//! cofinal element, translation- and rotation-number bounds, quotient
//! cocycles, lift groups, tight embeddings into the line — is derived from
//! sign queries with exact big-integer rational arithmetic throughout. No
//! floating point is used anywhere.
//!
//! Modules:
//!
//! - [`order`] — order oracles, floors, translation bounds, circular
//!   cocycles, the lift group, and cofinality certificates;
//! - [`braid`] — braid words, Garside normal forms (the word-problem
//!   oracle), and the Dehornoy ordering via handle reduction;
//! - [`fdtc`] — fractional Dehn twist coefficients of braids computed from
//!   Dehornoy floors against the full twist, with exact rational
//!   reconstruction where certifiable;
//! - [`realize`] — finite-scale dynamic realisations: tight embeddings of
//!   order balls, partial actions on the line, and pointwise Euler-cocycle
//!   extraction;
//! - [`fixtures`] — ℤ, ℤ² with slope orderings, and ℤ/n for exhaustive
//!   testing.

#![forbid(unsafe_code)]

pub mod braid;
pub mod error;
pub mod fdtc;
pub mod fixtures;
pub mod order;
pub mod rational;
pub mod realize;

pub use error::{Error, Result};
pub use order::{
    floor, translation_bounds, CentralCofinal, Group, OrderSign, OrderedGroup,
    DEFAULT_FLOOR_BUDGET,
};
pub use rational::{Rational, RationalInterval};
