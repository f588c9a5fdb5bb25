//! Garside left normal form for the classical Garside structure on `Bₙ`.
//!
//! Elements are written `Δᵖ · A₁ · … · A_k` where `Δ` is the positive half
//! twist, each `Aᵢ` is a nontrivial proper positive permutation braid, and
//! adjacent factors are left-weighted: the starting set of `A_{i+1}` is
//! contained in the finishing set of `Aᵢ`. The normal form is canonical, so
//! two words are equal in `Bₙ` iff their normal forms are structurally
//! identical — this decides the word problem.

use super::{BraidWord, Permutation};
use std::fmt;

/// The left normal form `Δᵖ · A₁ · … · A_k` of a braid.
///
/// Each factor is stored as its permutation (a positive permutation braid is
/// determined by the permutation it induces). Invariants maintained by
/// [`normal_form`]:
///
/// - no factor is the identity or the half-twist permutation `ω₀`;
/// - adjacent factors are left-weighted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GarsideNormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl GarsideNormalForm {
    /// Strand count `n`.
    pub fn strand_count(&self) -> usize {
        self.strands
    }

    /// The power of `Δ` (the infimum of the element).
    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    /// The left-weighted permutation-braid factors.
    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Canonical length (number of non-`Δ` factors).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    /// The supremum `delta_power + canonical_length`.
    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    /// Whether this is the identity of `Bₙ`.
    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Rebuilds a braid word `Δᵖ · A₁ · … · A_k` realizing this normal form.
    pub fn to_word(&self) -> BraidWord {
        let mut w = BraidWord::half_twist(self.strands).pow(self.delta_power);
        for f in &self.factors {
            w = w.then(&permutation_braid_word(self.strands, f));
        }
        w
    }
}

/// The positive braid word of the permutation braid inducing `perm`.
///
/// Peels starting letters greedily: while `perm` has a descent `i`, emit `σᵢ`
/// and continue with `σᵢ⁻¹ · perm`. The result is a reduced positive word of
/// length equal to the number of inversions of `perm`.
pub(crate) fn permutation_braid_word(n: usize, perm: &Permutation) -> BraidWord {
    let mut p = perm.clone();
    let mut letters = Vec::new();
    loop {
        let descents = p.descents();
        match descents.first() {
            None => break,
            Some(&i) => {
                letters.push(i as i32);
                p = Permutation::transposition(n, i, i + 1).then(&p);
            }
        }
    }
    BraidWord::from_letters(n, &letters).expect("indices are in range by construction")
}

/// The flip automorphism `τ(A) = Δ⁻¹ A Δ` on permutation-braid factors,
/// acting as conjugation by the order reversal `ω₀` (an involution).
pub(crate) fn tau(n: usize, perm: &Permutation) -> Permutation {
    let w0 = Permutation::reversal(n);
    w0.then(perm).then(&w0)
}

/// Computes the Garside left normal form of a braid word.
pub fn normal_form(w: &BraidWord) -> GarsideNormalForm {
    let n = w.strand_count();
    let w0 = Permutation::reversal(n);
    let mut delta_power: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::with_capacity(w.len());

    // Rewrite the word as Δᵖ · (positive permutation braids): a positive
    // letter contributes its transposition; a negative letter σᵢ⁻¹ equals
    // Δ⁻¹ · X with X = Δσᵢ⁻¹ the permutation braid of y ↦ (i i+1)(ω₀(y)),
    // and the Δ⁻¹ commutes to the front through the flip automorphism.
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize;
        let t = Permutation::transposition(n, i, i + 1);
        if l > 0 {
            factors.push(t);
        } else {
            delta_power -= 1;
            for f in factors.iter_mut() {
                *f = tau(n, f);
            }
            factors.push(w0.then(&t));
        }
    }

    left_weight(n, &mut delta_power, &mut factors);

    GarsideNormalForm {
        strands: n,
        delta_power,
        factors,
    }
}

/// Left-weights a factor sequence in place, stripping identity factors and
/// absorbing full half twists into the `Δ` power.
fn left_weight(n: usize, delta_power: &mut i64, factors: &mut Vec<Permutation>) {
    let w0 = Permutation::reversal(n);
    loop {
        let mut changed = false;

        factors.retain(|f| !f.is_identity());

        // Absorb Δ factors: F₁…F_{j−1} Δ = Δ τ(F₁)…τ(F_{j−1}).
        let mut j = 0;
        while j < factors.len() {
            if factors[j] == w0 {
                factors.remove(j);
                *delta_power += 1;
                for f in factors.iter_mut().take(j) {
                    *f = tau(n, f);
                }
                changed = true;
            } else {
                j += 1;
            }
        }

        // Transfer letters left until every adjacent pair is left-weighted.
        for t in 1..factors.len().max(1) {
            if t >= factors.len() {
                break;
            }
            loop {
                let finishing: Vec<usize> = factors[t - 1].inverse().descents();
                let candidate = factors[t]
                    .descents()
                    .into_iter()
                    .find(|i| !finishing.contains(i));
                match candidate {
                    None => break,
                    Some(i) => {
                        let tr = Permutation::transposition(n, i, i + 1);
                        // A ← A·σᵢ (valid: i is not in A's finishing set),
                        // B ← σᵢ⁻¹·B.
                        factors[t - 1] = factors[t - 1].then(&tr);
                        factors[t] = tr.then(&factors[t]);
                        changed = true;
                    }
                }
            }
        }

        if !changed {
            return;
        }
    }
}

impl fmt::Display for GarsideNormalForm {
    /// Serialized as `D^k | p1 ; p2 ; ...` with each `pᵢ` a one-line
    /// permutation image list; the identity prints as `D^0 |`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{} |", self.delta_power)?;
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " ;")?;
            }
            for x in 1..=self.strands {
                write!(f, " {}", factor.apply(x))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GarsideNormalForm(n={}, {})", self.strands, self)
    }
}
