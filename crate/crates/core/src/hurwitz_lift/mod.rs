//! Permutation systems and braid systems over punctured spheres, Hurwitz
//! sliding moves, standardization and lifting algorithms, and smooth-category
//! obstructions for branched covers over the 2-sphere.
//!
//! A *permutation system* is a tuple `(ρ₁, …, ρ_m)` of permutations whose
//! left-to-right product is a fixed target (the identity unless stated
//! otherwise): the monodromy of a branched cover of the sphere, one entry per
//! branch point. A *braid system* is a tuple of braids with identity product
//! whose entries close to completely split unlinks; it encodes a braided
//! embedding lifting the cover. The sliding moves act on both.

mod conjugacy;
mod covers;
mod io;
mod lift;
mod standardize;
mod systems;

pub use conjugacy::conjugating_witness;
pub use covers::{
    cover_genus, klein_bottle_2fold, lift_cyclic_cover, rewrite_derives_identity,
    smooth_obstruction, torsion_obstruction, CyclicCoverOutcome, KleinCover, SignAssignment,
    SmoothOutcome, TorsionVerdict,
};
pub use io::{parse_braid_system, parse_permutation_system};
pub use lift::lift_permutation_system;
pub use standardize::standardize_transpositions;
pub use systems::{BraidSystem, Move, MoveTrace, PermutationSystem};

use crate::braid_core::BraidWord;
use serde::Serialize;
use thiserror::Error;

/// Errors from system construction and the lifting algorithms.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum HurwitzError {
    /// A slide index is out of range.
    #[error("slide index {0} out of range for a system of length {1}")]
    IndexOutOfRange(usize, usize),
    /// The system's entry product does not equal its target.
    #[error("product of system entries does not equal the target")]
    NotIdentityProduct,
    /// An operation requiring transposition entries was given something else.
    #[error("entry {0} is not a transposition")]
    NotTranspositions(usize),
    /// Standardization requires a transitive (connected) system.
    #[error("the system does not act transitively on the strands")]
    NotTransitive,
    /// Entries of a system have inconsistent degrees.
    #[error("degree mismatch within system: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    /// A system file line could not be parsed.
    #[error("malformed system line: {0}")]
    MalformedSystem(String),
    /// An internal invariant failed; indicates a bug, never expected.
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

/// Convenience result alias for this module.
pub type Result<T> = std::result::Result<T, HurwitzError>;

/// Verification outcome of a braid system against a permutation system.
///
/// The overall verdict passes iff all three component checks pass; failures
/// are report content, not errors.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    /// `forget(entry_j) = ρ_j` for every entry.
    pub forget_match: bool,
    /// The product of the braid entries is the identity (word problem).
    pub identity_product: bool,
    /// Every entry carries a certificate and the certificate verifies.
    pub all_certificates_valid: bool,
    /// Per-entry certificate status: `"valid"`, `"invalid"`, or `"missing"`.
    pub certificate_status: Vec<String>,
}

impl VerificationReport {
    /// Overall verdict: all three booleans.
    pub fn pass(&self) -> bool {
        self.forget_match && self.identity_product && self.all_certificates_valid
    }
}

/// Checks a braid system against the permutation system it claims to lift.
///
/// Three independent checks: entrywise forgetful match, identity product in
/// `Bₙ`, and validity of every stored split-unlink certificate.
pub fn verify_braid_system(bs: &BraidSystem, ps: &PermutationSystem) -> VerificationReport {
    let forget_match = bs.entries().len() == ps.entries().len()
        && bs.strand_count() == ps.degree()
        && bs
            .entries()
            .iter()
            .zip(ps.entries())
            .all(|(b, p)| &b.forget() == p);

    let product = bs
        .entries()
        .iter()
        .fold(BraidWord::identity(bs.strand_count()), |acc, w| {
            acc.then(w)
        });
    let identity_product = crate::braid_core::normal_form(&product).is_identity();

    let certificate_status: Vec<String> = bs
        .entries()
        .iter()
        .zip(bs.certificates())
        .map(|(entry, cert)| match cert {
            None => "missing".to_string(),
            Some(c) => {
                if c.verify(entry) {
                    "valid".to_string()
                } else {
                    "invalid".to_string()
                }
            }
        })
        .collect();
    let all_certificates_valid = certificate_status.iter().all(|s| s == "valid");

    VerificationReport {
        forget_match,
        identity_product,
        all_certificates_valid,
        certificate_status,
    }
}

#[cfg(test)]
mod tests;
