//! Two-bridge (rational) links and their two-generator presentations.

use super::{LinkError, Result};

/// Generator index for the meridian `a` in two-bridge presentations.
pub const GEN_A: usize = 0;
/// Generator index for the meridian `b` in two-bridge presentations.
pub const GEN_B: usize = 1;

/// The fraction `p/q` of a two-bridge link, with `0 < q < p` and
/// `gcd(p, q) = 1` (the unknot is `1/1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwoBridgeForm {
    /// Determinant of the link.
    pub p: u64,
    /// Fraction numerator is `p`; this is the denominator.
    pub q: u64,
}

impl TwoBridgeForm {
    /// Validates the fraction.
    pub fn new(p: u64, q: u64) -> Result<TwoBridgeForm> {
        if p == 0 || q == 0 || q > p || gcd(p, q) != 1 {
            return Err(LinkError::NotCoprime(p, q));
        }
        Ok(TwoBridgeForm { p, q })
    }

    /// Number of link components: one (a knot) when `p` is odd, two when
    /// `p` is even.
    pub fn component_count(&self) -> usize {
        if self.p % 2 == 1 {
            1
        } else {
            2
        }
    }
}

/// A two-generator one-relator presentation `⟨a, b | a·w·c⁻¹·w⁻¹⟩` on the
/// meridians of the two bridges, where `c = b` for knots and `c = a` for
/// two-component links. Words are sequences of `(generator, ±1)` letters
/// with generators [`GEN_A`] and [`GEN_B`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoBridgePresentation {
    /// The underlying fraction.
    pub form: TwoBridgeForm,
    /// The conjugating word `w` of the relation `a·w = w·c`.
    pub word: Vec<(usize, i8)>,
    /// Generator conjugate to `a` across the relation (`b` or `a`).
    pub closing_generator: usize,
}

impl TwoBridgePresentation {
    /// The full relator `a·w·c⁻¹·w⁻¹` as a letter sequence.
    pub fn relator(&self) -> Vec<(usize, i8)> {
        let mut r = vec![(GEN_A, 1i8)];
        r.extend(&self.word);
        r.push((self.closing_generator, -1));
        r.extend(self.word.iter().rev().map(|&(g, e)| (g, -e)));
        r
    }
}

/// The presentation of the two-bridge link `p/q`: `w = g₁^{ε₁}⋯g_{p−1}^{ε_{p−1}}`
/// with `gᵢ = b` for odd `i`, `a` for even `i`, and `εᵢ = (−1)^{⌊iβ/p⌋}`,
/// where `β` is an odd representative of `±q^{±1} (mod p)`.
///
/// The exponent pattern is symmetric (`εᵢ = ε_{p−i}`) exactly when the
/// denominator is odd, so an even `q` is first replaced by `q − p`: the same
/// fraction class mod `p`, hence the same link up to mirror image, which
/// leaves the group (and every lifting question) unchanged.
pub fn two_bridge_presentation(p: u64, q: u64) -> Result<TwoBridgePresentation> {
    let form = TwoBridgeForm::new(p, q)?;
    let beta: i64 = if q % 2 == 1 {
        q as i64
    } else {
        q as i64 - p as i64
    };
    let word = (1..p as i64)
        .map(|i| {
            let g = if i % 2 == 1 { GEN_B } else { GEN_A };
            let e = if (i * beta).div_euclid(p as i64) % 2 == 0 {
                1i8
            } else {
                -1
            };
            (g, e)
        })
        .collect();
    let closing_generator = if p % 2 == 1 { GEN_B } else { GEN_A };
    Ok(TwoBridgePresentation {
        form,
        word,
        closing_generator,
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
