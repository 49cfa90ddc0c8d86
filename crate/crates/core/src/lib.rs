//! Exact search for graphs whose Laplacian is diagonalized by a Hadamard matrix.
//!
//! The pipeline is: ingest a Hadamard matrix ([`io::sloane`]), normalize it
//! ([`hadamard`]), build the auxiliary coefficient matrix and enumerate the
//! first-row assignments that yield a Laplacian ([`search`]), then aggregate
//! per-matrix outcomes into catalogs ([`catalog`]). All arithmetic is integer.

pub mod batch;
pub mod catalog;
pub mod error;
pub mod graph;
pub mod hadamard;
pub mod io;
pub mod search;
pub mod spectra;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{CanonicalForm, Graph};
pub use hadamard::{HadamardMatrix, NormalizedHadamard};
pub use search::{enumerate_graphs, SearchOutcome};
pub use spectra::SpectrumVector;
