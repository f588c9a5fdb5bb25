//! Braid-group elements with exact arithmetic and a decidable word problem.
//!
//! Braids and permutations compose **left to right** throughout: in a product
//! `u · v` the factor `u` acts first, so `(u · v)(x) = v(u(x))` for the
//! induced permutations. Under this convention the forgetful map
//! `forget : Bₙ → Sₙ` is a homomorphism.

mod cable;
mod certificate;
mod garside;
mod perm;
mod psl2z;
mod word;

pub use cable::cable;
pub use certificate::{CertificateKind, SplitUnlinkCertificate};
pub use garside::{normal_form, GarsideNormalForm};
pub(crate) use garside::{permutation_braid_word, tau};
pub use perm::Permutation;
pub use psl2z::{psl2z_image, PslMatrix};
pub use word::{parse_braid, BraidWord};

use thiserror::Error;

/// Errors arising from braid-word construction and arithmetic.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum BraidError {
    /// A token in a braid-word string could not be parsed.
    #[error("malformed token `{0}` in braid word")]
    MalformedToken(String),
    /// A generator index is out of range for the strand count.
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    /// Two operands live in braid groups on different strand counts.
    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),
    /// Cabling operands have inconsistent sizes.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    /// A permutation description is not a bijection of {1..n}.
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
}

/// Convenience result alias for this module.
pub type Result<T> = std::result::Result<T, BraidError>;

/// Equality in the braid group, decided via Garside normal forms.
///
/// Returns `Err(StrandMismatch)` when the operands have different strand
/// counts, and `Ok(true)` iff `u·v⁻¹` is the identity of `Bₙ`.
pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strand_count() != v.strand_count() {
        return Err(BraidError::StrandMismatch(
            u.strand_count(),
            v.strand_count(),
        ));
    }
    Ok(normal_form(u) == normal_form(v))
}

/// The conjugate `g⁻¹ · w · g`.
///
/// With left-to-right composition this is "w seen after the change of
/// coordinates g": `forget(conjugate(w, g))` is the permutation conjugate
/// `forget(g)⁻¹ ∘ forget(w) ∘ forget(g)`.
pub fn conjugate(w: &BraidWord, g: &BraidWord) -> Result<BraidWord> {
    if w.strand_count() != g.strand_count() {
        return Err(BraidError::StrandMismatch(
            w.strand_count(),
            g.strand_count(),
        ));
    }
    Ok(g.inverse().then(w).then(g))
}
