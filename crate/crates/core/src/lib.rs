//! Exact computations with Demazure modules: characters, weight polytopes,
//! their faces, and Hilbert bases of the associated weight cones.
//!
//! All arithmetic is exact. Integral data (weights, Weyl group actions,
//! multiplicities) uses checked machine integers; everything rational uses
//! arbitrary-precision fractions.

pub mod charpoly;
pub mod conehb;
pub mod error;
pub mod faces;
pub mod lattice;
pub mod lp;
pub mod polytope;
pub mod rational;
pub mod rootdata;
pub mod weyl;

pub use error::{Error, Result};
pub use rootdata::{Coweight, LieType, RatWeight, RootDatum, Weight};
pub use weyl::{WeylElement, WeylGroup};
