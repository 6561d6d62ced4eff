//! Symbolic powers of edge ideals.
//!
//! * [`monomial`]: monomials and monomial ideals in minimal-generator form.
//! * [`graph`]: simple graphs, minimal vertex covers and parallelizations.
//! * [`symbolic`]: generators of `I(G)^(s)` and of the restricted ideals of
//!   `I(K_m)^(s)`.
//! * [`splitting`]: Eliahou–Kervaire splitting certificates and their
//!   verification.
//! * [`betti`]: graded Betti tables from the Koszul oracle, the splitting
//!   recursion and closed forms.
//! * [`cli`]: the `sympow` command-line front end.

pub mod betti;
pub mod cli;
pub mod error;
pub mod graph;
pub mod monomial;
pub mod splitting;
pub mod symbolic;

pub use betti::{BettiTable, Convention, FieldSpec};
pub use error::{Error, Result};
pub use graph::{ParallelizationSpec, SimpleGraph};
pub use monomial::{Monomial, MonomialIdeal};
pub use splitting::{SplitCertificate, Verdict};

/// Resource limits shared by the computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest total degree the Betti oracle may visit.
    pub degree: u32,
    /// Largest vertex count for minimal-cover enumeration.
    pub vertex: usize,
    /// Largest number of candidate generators built at once.
    pub generators: usize,
    /// Largest `|G(J ∩ K)|` for exhaustive subset verification.
    pub subsets: usize,
}

pub const DEFAULT_GENERATOR_CAP: usize = 1_000_000;

impl Default for Caps {
    fn default() -> Self {
        Caps {
            degree: monomial::DEFAULT_DEGREE_CAP,
            vertex: graph::DEFAULT_VERTEX_CAP,
            generators: DEFAULT_GENERATOR_CAP,
            subsets: splitting::DEFAULT_SUBSET_CAP,
        }
    }
}
