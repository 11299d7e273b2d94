//! Exact weight-lattice arithmetic and representation-theoretic oracles for
//! PRV-type component rules.
//!
//! * [`rootlat`] and [`weyl`]: root data, weights, Weyl group elements.
//! * [`charkit`]: multiplicities, dimensions, characters, tensor products.
//! * [`branchkit`]: restriction to subgroups along a torus map.
//! * [`prvkit`]: PRV components and their generalized certificates.
//! * [`kronkit`]: partitions, tableaux and Kronecker coefficients.
//! * [`literal`]: textual syntax for weights, Weyl words and partitions.

pub mod branchkit;
pub mod charkit;
pub mod error;
pub mod kronkit;
pub mod literal;
pub mod prvkit;
pub mod rootlat;
pub mod weyl;

pub use error::{Error, Result};
pub use rootlat::{Family, FactorSpec, RootDatum, Weight};
pub use weyl::WeylElement;
