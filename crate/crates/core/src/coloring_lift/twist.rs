//! The twist-region coefficient recurrences.
//!
//! Tracking a pair of homology vectors through a twist region with
//! intersection number `k` produces four integer sequences:
//!
//! ```text
//! A₁ = B₁ = C₁ = D₁ = 1
//! A_{n+1} = (1 − k²)·Aₙ + Bₙ + 1        B_{n+1} = Bₙ + 1 − k²·Aₙ
//! C_{n+1} = (1 + k²)·Cₙ + Dₙ + 1        D_{n+1} = Dₙ + 1 + k²·Cₙ
//! ```
//!
//! `(A, B)` govern alternating same-handed twists `(T_x∘T_y)ⁿ` and `(C, D)`
//! the opposite-handed `(T_x∘T_y⁻¹)ⁿ`; the substitution `k² → −k²` turns one
//! family into the other.

/// Coefficient values at index `n` and intersection number `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TwistRecurrence {
    /// Index, at least 1.
    pub n: u32,
    /// Intersection number of the two labels.
    pub k: i64,
    /// `Aₙ(k)`.
    pub a: i128,
    /// `Bₙ(k)`.
    pub b: i128,
    /// `Cₙ(k)`.
    pub c: i128,
    /// `Dₙ(k)`.
    pub d: i128,
}

/// Computes `(Aₙ, Bₙ, Cₙ, Dₙ)` at `(n, k)` by iterating the recurrences.
pub fn twist_recurrences(n: u32, k: i64) -> TwistRecurrence {
    assert!(n >= 1, "index starts at 1");
    let k2 = (k as i128) * (k as i128);
    let (mut a, mut b, mut c, mut d) = (1i128, 1i128, 1i128, 1i128);
    for _ in 1..n {
        let (na, nb) = ((1 - k2) * a + b + 1, b + 1 - k2 * a);
        let (nc, nd) = ((1 + k2) * c + d + 1, d + 1 + k2 * c);
        (a, b, c, d) = (na, nb, nc, nd);
    }
    TwistRecurrence { n, k, a, b, c, d }
}
