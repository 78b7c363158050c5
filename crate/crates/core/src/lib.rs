//! Exact enumeration of parking functions, spherical parking functions,
//! standard monomials of the skeleton ideals `M_n^(k)`, u-vector parking
//! functions and uprooted trees, together with brute-force cross-checks of
//! the counting identities that tie them together.
//!
//! Sequences are exponent vectors: the monomial `x_1^a_1 ... x_n^a_n` and the
//! sequence `(a_1, ..., a_n)` are the same object throughout the crate.
//!
//! Module map:
//!
//! * [`seqcore`]: parking-style predicates, enumerators and degree histograms.
//! * [`ideal`]: skeleton-ideal generators and standard-monomial search.
//! * [`arbor`]: labeled rooted trees, Prüfer codes, uprooted trees and
//!   inversion statistics.
//! * [`identity`]: closed forms and summation identities in exact integers.
//! * [`crosscheck`]: oracle-vs-formula comparisons producing
//!   [`crosscheck::VerificationReport`]s.

pub mod arbor;
pub mod crosscheck;
pub mod distribution;
mod error;
pub mod ideal;
pub mod identity;
pub mod seqcore;

pub use distribution::Distribution;
pub use error::{Error, Result};
pub use identity::ExactInt;
pub use seqcore::{Sequence, UVector};
