//! Cabling: inserting interior braids into the tube neighbourhoods of a
//! tubular braid to produce a reducible braid.

use super::{BraidError, BraidWord, Result};

/// Cables `m` interior `l`-strand braids along a tubular `m`-strand braid,
/// producing a reducible braid on `m·l` strands.
///
/// The `m·l` strands are grouped in `m` consecutive blocks of `l`. Interior
/// braid `i` acts on block `i` first (before any tube moves), then each
/// letter of the tubular braid exchanges two adjacent blocks wholesale: the
/// generator `σ_t` of the tubular braid becomes the positive block
/// transposition word crossing the `l` strands of block `t` over the `l`
/// strands of block `t+1` (and its inverse for `σ_t⁻¹`).
///
/// The induced permutation composes block-lexicographically: strand `(i, j)`
/// (strand `j` of block `i`) maps to `(φ(i), χ_i(j))` where `φ` is the
/// tubular permutation and `χ_i` the interior permutation of block `i`.
pub fn cable(tubular: &BraidWord, interiors: &[BraidWord]) -> Result<BraidWord> {
    let m = tubular.strand_count();
    if interiors.len() != m {
        return Err(BraidError::SizeMismatch(format!(
            "tubular braid has {m} strands but {} interiors were supplied",
            interiors.len()
        )));
    }
    let l = interiors
        .first()
        .map(BraidWord::strand_count)
        .unwrap_or(1);
    if interiors.iter().any(|w| w.strand_count() != l) {
        return Err(BraidError::SizeMismatch(
            "interior braids must share a strand count".to_string(),
        ));
    }

    let n = m * l;
    let mut letters: Vec<i32> = Vec::new();

    // Interior braids on their initial blocks: generator j of block i
    // (0-based) becomes generator i·l + j.
    for (i, interior) in interiors.iter().enumerate() {
        for &letter in interior.letters() {
            let j = letter.unsigned_abs() as usize;
            let shifted = (i * l + j) as i32;
            letters.push(if letter > 0 { shifted } else { -shifted });
        }
    }

    // Tubular letters become block transpositions. The positive word for
    // crossing the block at positions [p, p+l) over the block at
    // [p+l, p+2l) is, for r = 1..=l, the descending run
    // σ_{p+l+r−2} … σ_{p+r−1} (1-based strand positions, p = (t−1)l + 1).
    for &letter in tubular.letters() {
        let t = letter.unsigned_abs() as usize;
        let p = (t - 1) * l + 1;
        let mut block_word: Vec<i32> = Vec::with_capacity(l * l);
        for r in 1..=l {
            for idx in ((p + r - 1)..=(p + l + r - 2)).rev() {
                block_word.push(idx as i32);
            }
        }
        if letter > 0 {
            letters.extend_from_slice(&block_word);
        } else {
            letters.extend(block_word.iter().rev().map(|&x| -x));
        }
    }

    BraidWord::from_letters(n, &letters)
}
