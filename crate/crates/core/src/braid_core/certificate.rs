//! Certificates that a braid closes to a completely split unlink inside its
//! solid torus.
//!
//! The toolkit never attempts general unlink recognition. Instead, every
//! braid the lifting algorithms emit comes with a certificate: an explicit
//! conjugator carrying the braid to a canonical target that is split by
//! construction (a product of disjoint standard generator chains). Verifying
//! a certificate is a word-problem check.

use super::{conjugate, equal, BraidWord};

/// Which split-unlink class the certificate asserts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// The closure is a completely split unlink.
    CompletelySplitUnlink,
    /// The closure is a completely split unlink and every component is a
    /// standard unknot (a conjugate of a chain `σ_a … σ_b^{±1}`).
    CompletelySplitStandardUnlink,
}

/// A checkable witness that `conjugator⁻¹ · canonical_target · conjugator`
/// equals the certified braid in `Bₙ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitUnlinkCertificate {
    /// Asserted split-unlink class.
    pub kind: CertificateKind,
    /// The conjugating braid `c`.
    pub conjugator: BraidWord,
    /// A product of disjoint blocks, each a standard `σ_a … σ_b^{±1}` chain.
    pub canonical_target: BraidWord,
}

impl SplitUnlinkCertificate {
    /// A certificate for the braid `c⁻¹ · target · c`.
    pub fn new(kind: CertificateKind, conjugator: BraidWord, canonical_target: BraidWord) -> Self {
        SplitUnlinkCertificate {
            kind,
            conjugator,
            canonical_target,
        }
    }

    /// Certificate for a braid known to equal `c⁻¹ · σ_i^{sign} · c`
    /// (membership in the set of standard half-twist conjugates).
    pub fn conjugate_of_generator(n: usize, i: usize, sign: i32, conjugator: BraidWord) -> Self {
        SplitUnlinkCertificate {
            kind: CertificateKind::CompletelySplitStandardUnlink,
            conjugator,
            canonical_target: BraidWord::generator(n, i, sign),
        }
    }

    /// Builds the canonical chain-block target on `n` strands.
    ///
    /// Each `(start, len, sign)` block contributes the chain
    /// `σ_start … σ_{start+len−2}` (all letters with the given sign); blocks
    /// must occupy disjoint consecutive strand ranges. A `len` of 1 is a
    /// free strand and contributes nothing.
    pub fn chain_target(n: usize, blocks: &[(usize, usize, i32)]) -> BraidWord {
        let mut letters = Vec::new();
        for &(start, len, sign) in blocks {
            assert!(len >= 1 && start >= 1 && start + len - 1 <= n);
            for i in start..start + len - 1 {
                letters.push(sign * i as i32);
            }
        }
        BraidWord::from_letters(n, &letters).expect("chain indices are in range")
    }

    /// Word-problem check of the defining invariant against `braid`.
    pub fn verify(&self, braid: &BraidWord) -> bool {
        match conjugate(&self.canonical_target, &self.conjugator) {
            Ok(conj) => equal(&conj, braid).unwrap_or(false),
            Err(_) => false,
        }
    }

    /// Transports the certificate along a further conjugation: if this
    /// certifies `e`, the result certifies `g⁻¹ · e · g`.
    pub fn conjugated_by(&self, g: &BraidWord) -> Self {
        SplitUnlinkCertificate {
            kind: self.kind,
            conjugator: self.conjugator.then(g).free_reduce(),
            canonical_target: self.canonical_target.clone(),
        }
    }

    /// The certificate for the inverse braid (same conjugator, inverted
    /// target — the inverse of a split chain product is again one, with all
    /// chain signs flipped up to reordering of disjoint blocks).
    pub fn inverted(&self) -> Self {
        SplitUnlinkCertificate {
            kind: self.kind,
            conjugator: self.conjugator.clone(),
            canonical_target: self.canonical_target.inverse(),
        }
    }
}
