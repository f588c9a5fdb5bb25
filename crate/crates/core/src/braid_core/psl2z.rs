//! The quotient map `B₃ → B₃/Z(B₃) ≅ PSL(2,ℤ)`.
//!
//! The center of `B₃` is generated by `Δ² = (σ₁σ₂σ₁)²`, and the quotient is
//! the modular group. The generator matrices are pinned to
//! `σ₁ ↦ [[1,1],[0,1]]` and `σ₂ ↦ [[1,0],[−1,1]]`, both modulo global sign;
//! any convention works provided `Δ² ↦ ±I`, and the tests pin this one.

use super::{BraidError, BraidWord, Result};
use std::fmt;

/// A `2×2` integer matrix of determinant 1, taken modulo global sign.
///
/// The stored representative is normalized so that its first nonzero entry
/// (in row-major order) is positive, making equality structural.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PslMatrix {
    entries: [i128; 4],
}

impl PslMatrix {
    /// Builds a matrix from row-major entries, normalizing the global sign.
    pub fn new(a: i128, b: i128, c: i128, d: i128) -> Self {
        let mut entries = [a, b, c, d];
        if let Some(&lead) = entries.iter().find(|&&x| x != 0) {
            if lead < 0 {
                for x in entries.iter_mut() {
                    *x = -*x;
                }
            }
        }
        PslMatrix { entries }
    }

    /// The identity class `±I`.
    pub fn identity() -> Self {
        PslMatrix::new(1, 0, 0, 1)
    }

    /// Row-major entries of the normalized representative.
    pub fn entries(&self) -> [i128; 4] {
        self.entries
    }

    /// Matrix product `self · other` (in word order).
    pub fn mul(&self, other: &PslMatrix) -> PslMatrix {
        let [a, b, c, d] = self.entries;
        let [e, f, g, h] = other.entries;
        PslMatrix::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }

    /// Inverse (determinant is 1 up to the sign quotient).
    pub fn inverse(&self) -> PslMatrix {
        let [a, b, c, d] = self.entries;
        PslMatrix::new(d, -b, -c, a)
    }

    /// Whether this is `±I`.
    pub fn is_identity(&self) -> bool {
        *self == PslMatrix::identity()
    }
}

impl fmt::Display for PslMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries;
        write!(f, "±[[{a},{b}],[{c},{d}]]")
    }
}

impl fmt::Debug for PslMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PslMatrix({self})")
    }
}

/// The image of a 3-braid in `PSL(2,ℤ)`.
///
/// This is a homomorphism whose kernel is exactly the center `⟨Δ²⟩` of `B₃`.
/// Errors with `StrandMismatch` unless `w` has exactly three strands.
pub fn psl2z_image(w: &BraidWord) -> Result<PslMatrix> {
    if w.strand_count() != 3 {
        return Err(BraidError::StrandMismatch(w.strand_count(), 3));
    }
    let s1 = PslMatrix::new(1, 1, 0, 1);
    let s2 = PslMatrix::new(1, 0, -1, 1);
    let mut m = PslMatrix::identity();
    for &l in w.letters() {
        let gen = if l.abs() == 1 { s1 } else { s2 };
        let gen = if l > 0 { gen } else { gen.inverse() };
        m = m.mul(&gen);
    }
    Ok(m)
}
