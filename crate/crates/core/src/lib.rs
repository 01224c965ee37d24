//! Exact intersection theory on the Cayley plane `OP^2 = E6/P6`.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`]: the E6 root and weight lattice in rational coordinates.
//! * [`minuscule`]: the 27-node weight diagram, Hasse diagram, reduced words and path counts.
//! * [`chowring`]: Schubert-basis Chow ring, Pieri products and the structure-constant solver.
//! * [`borel`]: polynomials, divided differences and the invariant-theoretic product engine.
//! * [`bundles`]: Chern and Segre classes of the normal bundle and the degree of `Y8`.
//! * [`jordan`]: split octonions and the exceptional Jordan algebra.
//! * [`acceptance`]: the end-to-end checks shared by the test suite and the CLI.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod acceptance;
pub mod borel;
pub mod bundles;
pub mod chowring;
pub mod error;
pub mod jordan;
pub mod lattice;
pub mod linalg;
pub mod minuscule;
pub mod rational;

pub use error::{Error, Result};
pub use rational::Q;
