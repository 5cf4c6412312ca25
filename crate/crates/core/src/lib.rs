//! Tangent space at the most degenerate point of the moduli scheme of affine
//! spherical varieties with a prescribed free weight monoid.
//!
//! The crate has two independent routes to the same answer:
//!
//! * [`adapted`] decides combinatorially which spherically closed spherical
//!   roots (from [`sphroots`]) are N-adapted to the monoid, using the data of
//!   [`wmonoid`];
//! * [`oracle`] builds the irreducible modules explicitly and computes the
//!   invariant quotient and the extension criterion by exact linear algebra.
//!
//! [`report`] ties both together for the command line front end.

pub mod adapted;
pub mod linalg;
pub mod oracle;
pub mod report;
pub mod rootsys;
pub mod sphroots;
pub mod wmonoid;

pub use rootsys::{DynkinType, RootSystem, RootVector, Weight};
pub use wmonoid::{Functional, WeightMonoidContext};
