//! Standardization of transposition systems by sliding moves.
//!
//! Every transitive transposition system with identity product can be carried
//! by Hurwitz slides (plus deletion/insertion of cancelling pairs) to the
//! standard form `((1 2), …, (1 2), (1 3), (1 3), …, (1 n), (1 n))` with an
//! even number of `(1 2)` entries and exactly two `(1 r)` entries for each
//! `r ≥ 3`.

use super::systems::apply_move;
use super::{HurwitzError, Move, MoveTrace, PermutationSystem, Result};
use crate::braid_core::Permutation;

/// Whether the transposition `t` moves the point `r`.
fn contains(t: &Permutation, r: usize) -> bool {
    t.apply(r) != r
}

/// The point paired with `r` in the transposition `t`.
fn other_point(t: &Permutation, r: usize) -> usize {
    t.apply(r)
}

/// Whether two transpositions move disjoint point sets.
fn disjoint(a: &Permutation, b: &Permutation) -> bool {
    let ca = &a.cycles()[0];
    let cb = &b.cycles()[0];
    ca.iter().all(|p| !cb.contains(p))
}

/// Carries a transitive transposition system to standard form.
///
/// Returns the standard system together with the move trace; replaying the
/// trace on the input reproduces the output exactly.
///
/// The choreography processes one symbol `r` at a time, from `n` down to 3:
/// every transposition through `r` is collected right-to-left into a zone at
/// the active end (an overlapping bystander is passed by an inverse slide,
/// which conjugates the mover but keeps it a transposition through `r`; a
/// disjoint bystander by a forward slide, leaving both intact), and the zone
/// is then reduced to the tail `((1 r), (1 r))` by forward slides on
/// distinct-valued pairs and deletion of equal-valued pairs, inserting a
/// fresh `((1 r), (1 r))` pair when the surviving pair has the wrong value.
pub fn standardize_transpositions(
    ps: &PermutationSystem,
) -> Result<(PermutationSystem, MoveTrace)> {
    let n = ps.degree();
    if !ps.target().is_identity() {
        return Err(HurwitzError::NotIdentityProduct);
    }
    for (i, e) in ps.entries().iter().enumerate() {
        if !e.is_transposition() {
            return Err(HurwitzError::NotTranspositions(i + 1));
        }
    }
    if !ps.is_transitive() {
        return Err(HurwitzError::NotTransitive);
    }

    let mut sys = ps.clone();
    let mut trace = MoveTrace::new();
    let record = |sys: &mut PermutationSystem, trace: &mut MoveTrace, m: Move| -> Result<()> {
        *sys = apply_move(sys, &m)?;
        trace.push(m);
        Ok(())
    };

    // Active region is positions 1..=end; each completed phase freezes a
    // two-entry tail.
    let mut end = sys.len();

    for r in (3..=n).rev() {
        // Collection: grow the zone [z..=end] of entries through r.
        let mut z = end + 1;
        while z > 1 && contains(&sys.entries()[z - 2], r) {
            z -= 1;
        }
        loop {
            let k = match (1..z).rev().find(|&k| contains(&sys.entries()[k - 1], r)) {
                None => break,
                Some(k) => k,
            };
            // Move the entry at k rightwards until adjacent to the zone.
            for pos in k..z - 1 {
                let dir = if disjoint(&sys.entries()[pos - 1], &sys.entries()[pos]) {
                    1
                } else {
                    -1
                };
                let m = Move::Slide { position: pos, dir };
                record(&mut sys, &mut trace, m)?;
            }
            z -= 1;
        }

        // Zone reduction to the tail ((1 r), (1 r)).
        loop {
            let zone_len = end + 1 - z;
            if zone_len == 0 {
                // No entry moves r at all (earlier phases may have cancelled
                // them in pairs); create the required tail from thin air.
                record(
                    &mut sys,
                    &mut trace,
                    Move::InsertPair {
                        position: z,
                        value: Permutation::transposition(n, 1, r),
                    },
                )?;
                end += 2;
                break;
            }
            if zone_len < 2 {
                return Err(HurwitzError::InternalInconsistency(format!(
                    "zone for symbol {r} reduced below two entries"
                )));
            }
            let u = other_point(&sys.entries()[z - 1], r);
            let v = other_point(&sys.entries()[z], r);
            if zone_len == 2 {
                if u != v {
                    return Err(HurwitzError::InternalInconsistency(format!(
                        "final zone pair for symbol {r} has distinct values {u}, {v}"
                    )));
                }
                if u != 1 {
                    // Replace the ((u r),(u r)) tail by a ((1 r),(1 r)) tail.
                    let val = Permutation::transposition(n, u, r);
                    record(
                        &mut sys,
                        &mut trace,
                        Move::DeletePair {
                            position: z,
                            value: val,
                        },
                    )?;
                    record(
                        &mut sys,
                        &mut trace,
                        Move::InsertPair {
                            position: z,
                            value: Permutation::transposition(n, 1, r),
                        },
                    )?;
                }
                break;
            }
            if u != v {
                // Forward slide expels the conjugate (v u) from the zone.
                record(
                    &mut sys,
                    &mut trace,
                    Move::Slide {
                        position: z,
                        dir: 1,
                    },
                )?;
                z += 1;
            } else {
                record(
                    &mut sys,
                    &mut trace,
                    Move::DeletePair {
                        position: z,
                        value: Permutation::transposition(n, u, r),
                    },
                )?;
                end -= 2;
            }
        }
        end -= 2;
    }

    // The surviving prefix must consist of (1 2) entries, evenly many.
    let t12 = Permutation::transposition(n.max(2), 1, 2);
    if n >= 2 {
        for e in sys.entries().iter().take(end) {
            if *e != t12 {
                return Err(HurwitzError::InternalInconsistency(
                    "prefix after standardization is not all (1 2)".to_string(),
                ));
            }
        }
    }
    if !end.is_multiple_of(2) {
        return Err(HurwitzError::InternalInconsistency(
            "odd number of (1 2) entries after standardization".to_string(),
        ));
    }

    Ok((sys, trace))
}
