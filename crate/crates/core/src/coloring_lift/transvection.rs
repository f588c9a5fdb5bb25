//! Transvections of ℤ² and the vector labelling of arcs.
//!
//! A primitive vector `v` gives the transvection `T_v(w) = w + ⟨v,w⟩·v`
//! with `⟨·,·⟩` the determinant pairing `⟨u,w⟩ = u₀w₁ − u₁w₀`. This
//! convention satisfies `T_{f(v)} = f∘T_v∘f⁻¹` for `f ∈ SL(2,ℤ)`, and
//! `T_x = [[1,1],[0,1]]`, `T_y = [[1,0],[−1,1]]` for the standard basis, so
//! transvections are exactly the images of the braid generators under
//! `B₃ → PSL(2,ℤ)`.

use crate::braid_core::{Permutation, PslMatrix};

use super::{ColoringError, Result};

/// A labelled strand: a primitive vector (projective, but a representative
/// is stored) plus a handedness sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Label {
    /// Primitive vector in ℤ².
    pub v: (i64, i64),
    /// Handedness: the strand's meridian maps to `T_v^{sign}`.
    pub sign: i8,
}

impl Label {
    /// Validates primitivity and builds a label.
    pub fn new(v: (i64, i64), sign: i8) -> Result<Label> {
        if !is_primitive(v) {
            return Err(ColoringError::NonPrimitiveLabel(v.0, v.1));
        }
        assert!(sign == 1 || sign == -1);
        Ok(Label { v, sign })
    }

    /// The transvection power `T_v^{sign}` as a matrix class.
    pub fn matrix(&self) -> PslMatrix {
        let m = transvection_matrix(self.v);
        if self.sign == 1 {
            m
        } else {
            m.inverse()
        }
    }

    /// Projective equality: same handedness and same vector up to sign.
    pub fn projectively_equal(&self, other: &Label) -> bool {
        self.sign == other.sign
            && (self.v == other.v || self.v == (-other.v.0, -other.v.1))
    }
}

/// Whether the entries are coprime (and not both zero).
pub fn is_primitive(v: (i64, i64)) -> bool {
    gcd(v.0.unsigned_abs(), v.1.unsigned_abs()) == 1
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The determinant pairing `⟨u,w⟩ = u₀w₁ − u₁w₀`.
pub fn pairing(u: (i64, i64), w: (i64, i64)) -> i64 {
    u.0 * w.1 - u.1 * w.0
}

/// The matrix of `T_v`.
pub fn transvection_matrix(v: (i64, i64)) -> PslMatrix {
    let (a, b) = (v.0 as i128, v.1 as i128);
    PslMatrix::new(1 - a * b, a * a, -b * b, 1 + a * b)
}

/// Applies a matrix class to a vector; the result is well defined
/// projectively (the sign of the output tracks the normalized matrix
/// representative).
pub fn apply(m: &PslMatrix, v: (i64, i64)) -> (i64, i64) {
    let [a, b, c, d] = m.entries();
    let (x, y) = (v.0 as i128, v.1 as i128);
    (
        (a * x + b * y).try_into().expect("label entry overflow"),
        (c * x + d * y).try_into().expect("label entry overflow"),
    )
}

/// The transposition in S₃ determined by a primitive vector mod 2:
/// `(1,0) ↦ (12)`, `(0,1) ↦ (23)`, `(1,1) ↦ (13)`.
pub fn tricolor_of_vector(v: (i64, i64)) -> Result<Permutation> {
    if !is_primitive(v) {
        return Err(ColoringError::NonPrimitiveLabel(v.0, v.1));
    }
    let class = (v.0.rem_euclid(2), v.1.rem_euclid(2));
    let (a, b) = match class {
        (1, 0) => (1, 2),
        (0, 1) => (2, 3),
        (1, 1) => (1, 3),
        _ => unreachable!("primitive vector cannot be (0,0) mod 2"),
    };
    Ok(Permutation::transposition(3, a, b))
}

/// The base vector of a mod-2 class, inverse to [`tricolor_of_vector`].
pub fn base_vector_of_transposition(t: &Permutation) -> Option<(i64, i64)> {
    let c = t.cycles();
    match c.first().map(|c| (c[0], c[1])) {
        Some((1, 2)) => Some((1, 0)),
        Some((2, 3)) => Some((0, 1)),
        Some((1, 3)) => Some((1, 1)),
        _ => None,
    }
}

/// Direction of the two strands through a twist region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrandDirection {
    /// Both strands traverse the region the same way.
    Same,
    /// The strands run against each other.
    Opposite,
}

/// Propagates labels through a twist region of `half_twists` signed half
/// twists, returning the top labels.
///
/// One positive half twist takes `(u, v)` to `(M_u⁻¹·v, u)` where `M_u` is
/// `u`'s transvection power: the over-strand label passes through while the
/// under label is conjugated per the Wirtinger relation. With
/// [`StrandDirection::Opposite`] the conjugating power is inverted, which
/// realizes the `(a,b;c,d) → (d,−b;−c,a)` inverse-matrix transform (up to
/// the global `(−1)ⁿ`) on the vector coefficients for negative regions.
pub fn twist_region_propagate(
    bottom_left: Label,
    bottom_right: Label,
    half_twists: i64,
    direction: StrandDirection,
) -> Result<(Label, Label)> {
    let (mut u, mut v) = (bottom_left, bottom_right);
    let flip: i8 = if direction == StrandDirection::Same {
        1
    } else {
        -1
    };
    for _ in 0..half_twists.unsigned_abs() {
        if half_twists > 0 {
            let m = Label {
                sign: u.sign * flip,
                ..u
            }
            .matrix()
            .inverse();
            (u, v) = (Label::new(apply(&m, v.v), v.sign)?, u);
        } else {
            let m = Label {
                sign: v.sign * flip,
                ..v
            }
            .matrix();
            (u, v) = (v, Label::new(apply(&m, u.v), u.sign)?);
        }
    }
    Ok((u, v))
}
