//! Exact lift decision for two-bridge knots.

use crate::braid_core::{equal, BraidWord};
use crate::link_model::{TwoBridgePresentation, GEN_A, GEN_B};
use crate::verdict::LiftVerdict;

use super::laurent::LaurentPoly;
use super::Result;

/// Witness for a liftable two-bridge coloring: the images of the two bridge
/// meridians.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoBridgeWitness {
    /// Image of the meridian `a`.
    pub a: BraidWord,
    /// Image of the meridian `b`.
    pub b: BraidWord,
}

/// Substitutes a letter sequence over `{a, b}` with braid words.
pub fn substitute(word: &[(usize, i8)], a: &BraidWord, b: &BraidWord) -> BraidWord {
    let mut out = BraidWord::identity(a.strand_count());
    for &(g, e) in word {
        let img = if g == GEN_A { a } else { b };
        out = out.then(&if e == 1 { img.clone() } else { img.inverse() });
    }
    out
}

/// Decides whether the nontrivial tricoloring of a two-bridge knot lifts to
/// a simple B₃-coloring: it does precisely when setting `a = σ₁`, `b = σ₂`
/// kills the relator in B₃. The decision is exact (Garside word problem).
pub fn two_bridge_lift_decision(
    pres: &TwoBridgePresentation,
) -> Result<LiftVerdict<TwoBridgeWitness>> {
    let s1 = BraidWord::generator(3, 1, 1);
    let s2 = BraidWord::generator(3, 2, 1);
    let relator = substitute(&pres.relator(), &s1, &s2);
    if equal(&relator, &BraidWord::identity(3))? {
        Ok(LiftVerdict::Liftable {
            witness: TwoBridgeWitness { a: s1, b: s2 },
        })
    } else {
        Ok(LiftVerdict::NotLiftable {
            obstruction: format!(
                "relator of {}/{} is nontrivial in B3 under a = s1, b = s2",
                pres.form.p, pres.form.q
            ),
        })
    }
}

/// Fox derivative `∂R/∂b` of a two-generator relator, abelianized by
/// sending both generators to `t`: the Alexander polynomial of the knot, up
/// to units.
pub fn fox_alexander_two_generator(relator: &[(usize, i8)]) -> LaurentPoly {
    let mut delta = LaurentPoly::zero();
    let mut prefix_exp = 0i64;
    for &(g, e) in relator {
        if g == GEN_B {
            if e == 1 {
                delta = delta.add(&LaurentPoly::monomial(prefix_exp, 1));
            } else {
                delta = delta.sub(&LaurentPoly::monomial(prefix_exp - 1, 1));
            }
        }
        prefix_exp += e as i64;
    }
    delta.normalized()
}
