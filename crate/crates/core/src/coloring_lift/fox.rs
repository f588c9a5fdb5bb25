//! Alexander polynomials via Fox calculus on Wirtinger presentations.

use num_traits::One;

use crate::link_model::WirtingerPresentation;

use super::laurent::LaurentPoly;
use super::{ColoringError, Result};

/// Outcome of the divisibility obstruction test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Obstruction {
    /// `t² − t + 1` does not divide Δ: no tricoloring lifts to a simple
    /// B₃-coloring.
    Obstructed,
    /// The test says nothing.
    Inconclusive,
}

/// Computes the Alexander polynomial of a knot from a Wirtinger
/// presentation, normalized up to units `±tᵏ`.
///
/// Each crossing relation `x_out = o^{−s}·x_in·o^{s}` is a relator whose
/// Fox derivatives, abelianized by sending every generator to `t`, give one
/// matrix row: for `s = +1` the row is `x_in + (t−1)·o − t·x_out`, for
/// `s = −1` it is `t·x_in + (1−t)·o − x_out` (each already multiplied by a
/// unit to clear `t⁻¹`). One redundant relation and the basepoint column
/// are dropped; the remaining minor is Δ up to units.
pub fn fox_alexander(pres: &WirtingerPresentation) -> Result<LaurentPoly> {
    if pres.components != 1 {
        return Err(ColoringError::NotKnotGroup(pres.components));
    }
    let n = pres.generator_count;
    if pres.relations.is_empty() {
        return Ok(LaurentPoly::one());
    }
    let t = LaurentPoly::monomial(1, 1);
    let one = LaurentPoly::one();
    let rows: Vec<Vec<LaurentPoly>> = pres
        .relations
        .iter()
        .map(|r| {
            let mut row = vec![LaurentPoly::zero(); n];
            let (cin, cover, cout) = if r.sign == 1 {
                (one.clone(), t.sub(&one), t.neg())
            } else {
                (t.clone(), one.sub(&t), one.neg())
            };
            row[r.under_in] = row[r.under_in].add(&cin);
            row[r.over] = row[r.over].add(&cover);
            row[r.under_out] = row[r.under_out].add(&cout);
            row
        })
        .collect();
    // Drop the basepoint column and the last (redundant) relation.
    let minor: Vec<Vec<LaurentPoly>> = rows[..rows.len() - 1]
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != pres.basepoint)
                .map(|(_, p)| p.clone())
                .collect()
        })
        .collect();
    let delta = bareiss_det(minor).normalized();
    debug_assert!(
        delta.eval(1).magnitude().is_one(),
        "Alexander polynomial of a knot evaluates to ±1 at t = 1, got {delta}"
    );
    Ok(delta)
}

/// Fraction-free (Bareiss) determinant over ℤ[t]; divisions are exact.
fn bareiss_det(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    assert!(m.iter().all(|r| r.len() == n), "square matrix required");
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        // Pivot: any row with nonzero entry in column k.
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return LaurentPoly::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num
                    .divide_exact(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            m[i][k] = LaurentPoly::zero();
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].shift(0, sign)
}

/// The trefoil-divisibility obstruction: if `t² − t + 1` does not divide
/// Δ, no tricoloring of the knot lifts to a simple B₃-coloring.
pub fn trefoil_divisibility_obstruction(delta: &LaurentPoly) -> Obstruction {
    if delta.rem_by_cyclotomic6().is_zero() {
        Obstruction::Inconclusive
    } else {
        Obstruction::Obstructed
    }
}
