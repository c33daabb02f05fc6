//! Exact machinery for the catalog of connected graphs whose adjacency
//! spectrum has at most two eigenvalues different from 2 and -1: four
//! infinite families, twenty sporadic graphs, and the generalized friendship
//! graphs F(t, r, k) with t - r = 3.
//!
//! The exact integer track (fraction-free elimination, exact characteristic
//! polynomials, Sturm root isolation) is the source of truth everywhere; the
//! numeric Jacobi track exists only as an independent cross-check.
//!
//! Start with the runnable examples:
//!
//! ```text
//! cargo run --release --example build_families      # catalog entries, graph6 + spectra
//! cargo run --release --example certify_catalog     # exact sweep certification
//! cargo run --release --example exact_spectrum      # factorizations vs Jacobi
//! cargo run --release --example classify_graphs     # the trichotomy classifier
//! cargo run --release --example cospectral_pairs    # certified cospectral mates
//! cargo run --release --example ds_verdicts         # determined-by-spectrum table
//! cargo run --release --example survey_small        # exhaustive survey, n <= 8
//! cargo run --release --example section4_check      # printed polynomial identities
//! cargo run --release --example quotient_partitions # equitable partitions
//! ```
//!
//! A thin `speccat` binary exposes the same operations for graph6 pipelines;
//! `speccat selfcheck` runs the acceptance suite.

pub mod acceptance;
pub mod canon;
pub mod classify;
pub mod cospectral;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod jacobi;
pub mod matrix;
pub mod poly;
pub mod spectral;

pub use canon::{canonical_form, is_isomorphic, CanonError, CanonicalForm};
pub use families::{
    build_family, certify_family, claimed_spectrum, ClaimedSpectrum, FamilyDescriptor,
};
pub use graph::{Graph, GraphError};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use jacobi::eigenvalues_symmetric;
pub use matrix::{IntMatrix, MatrixError};
pub use poly::{factor_spectrum, ExactSpectrum, IntPolynomial, RealRoot};
