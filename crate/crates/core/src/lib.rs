//! Strongly regular graphs and their chromatic index.
//!
//! The crate builds the classical strongly regular families, computes their
//! spectra and the eigenvalue bounds around them, and decides whether a
//! regular graph is 1-factorable (class 1) through constructive
//! factorizations, a randomized perfect-matching search, or an exact
//! backtracking proof. Results are packaged as certificates that can be
//! re-checked independently of the code that produced them.
//!
//! ```
//! use srgec::{families, factor};
//!
//! let g = families::lattice(4)?;
//! let out = factor::heuristic_factorize(&g, &factor::SearchConfig::with_seed(42))?;
//! let factor::HeuristicOutcome::Found { factorization, .. } = out else { panic!() };
//! assert!(factor::verify_factorization(&g, &factorization).is_ok());
//! # Ok::<(), srgec::Error>(())
//! ```

pub mod cert;
pub mod classify;
pub mod error;
pub mod factor;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod rng;
pub mod spectra;
pub mod surd;

pub use error::{Error, Result};
pub use graph::{Graph, SrgParams};
