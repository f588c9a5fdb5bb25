//! Obstructions and constructions for branched covers beyond the generic
//! lifting algorithm: framing sign assignments, cyclic covers of the disk,
//! genus bookkeeping, and the torsion obstruction for non-spherical covers.

use super::{BraidSystem, HurwitzError, PermutationSystem, Result};
use crate::braid_core::{BraidWord, Permutation, SplitUnlinkCertificate};
use crate::verdict::LiftVerdict;
use std::collections::HashSet;
use std::fmt;

/// A choice of sign (chain orientation) for every nontrivial cycle of every
/// entry of a permutation system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignAssignment {
    /// For each entry, its nontrivial cycles paired with the chosen sign.
    pub entries: Vec<Vec<(Vec<usize>, i8)>>,
}

impl fmt::Display for SignAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, cycles) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "entry {}:", i + 1)?;
            if cycles.is_empty() {
                write!(f, " -")?;
            }
            for (cycle, sign) in cycles {
                let pts: Vec<String> = cycle.iter().map(usize::to_string).collect();
                write!(
                    f,
                    " ({}){}",
                    pts.join(" "),
                    if *sign > 0 { "+" } else { "-" }
                )?;
            }
        }
        Ok(())
    }
}

/// Outcome of the framing sign search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmoothOutcome {
    /// A balancing assignment exists; this is the lexicographically least
    /// one (cycles in entry order, `+` preferred at each step).
    Assignment(SignAssignment),
    /// No assignment balances some component; carries the reason.
    NoAssignmentExists {
        /// Human-readable description of the failing component.
        reason: String,
    },
}

/// Whether signs for the remaining `weights` can sum to `target`.
fn balance_feasible(weights: &[i64], target: i64) -> bool {
    let mut reachable: HashSet<i64> = HashSet::new();
    reachable.insert(0);
    for w in weights {
        reachable = reachable
            .iter()
            .flat_map(|s| [s + w, s - w])
            .collect();
    }
    reachable.contains(&target)
}

/// Searches for a sign assignment making the weighted cycle sums vanish on
/// every component.
///
/// Each nontrivial cycle of length `ℓ` contributes `±(ℓ−1)`; a braid entry
/// whose closure is a split union of standard chains has exponent sum equal
/// to such a signed sum, so a lift with all entries of that shape forces, on
/// each component of the cover, a sign assignment summing to zero. When none
/// exists, no such lift does.
pub fn smooth_obstruction(ps: &PermutationSystem) -> SmoothOutcome {
    let orbits = Permutation::orbits(ps.degree(), ps.entries());
    let orbit_of = |p: usize| orbits.iter().position(|o| o.contains(&p));

    // Collect, per orbit, the cycles in (entry, cycle) order.
    let mut per_orbit: Vec<Vec<(usize, usize, i64)>> = vec![Vec::new(); orbits.len()];
    let mut entry_cycles: Vec<Vec<(Vec<usize>, i8)>> = Vec::with_capacity(ps.len());
    for (ei, e) in ps.entries().iter().enumerate() {
        let cycles = e.cycles();
        for (ci, c) in cycles.iter().enumerate() {
            let o = orbit_of(c[0]).expect("cycle points lie in some orbit");
            per_orbit[o].push((ei, ci, c.len() as i64 - 1));
        }
        entry_cycles.push(cycles.into_iter().map(|c| (c, 0i8)).collect());
    }

    for (o, items) in per_orbit.iter().enumerate() {
        let weights: Vec<i64> = items.iter().map(|&(_, _, w)| w).collect();
        if !balance_feasible(&weights, 0) {
            let pts: Vec<String> = orbits[o].iter().map(usize::to_string).collect();
            return SmoothOutcome::NoAssignmentExists {
                reason: format!(
                    "no signs balance the cycle weights on the component {{{}}}",
                    pts.join(", ")
                ),
            };
        }
        // Greedy lexicographically-least choice, preferring +1.
        let mut sum = 0i64;
        for (idx, &(ei, ci, w)) in items.iter().enumerate() {
            let rest = &weights[idx + 1..];
            let sign = if balance_feasible(rest, -(sum + w)) {
                1i8
            } else {
                -1i8
            };
            sum += i64::from(sign) * w;
            entry_cycles[ei][ci].1 = sign;
        }
        debug_assert_eq!(sum, 0);
    }

    SmoothOutcome::Assignment(SignAssignment {
        entries: entry_cycles,
    })
}

/// Outcome of the cyclic-cover lift.
#[derive(Debug, Clone)]
pub enum CyclicCoverOutcome {
    /// The certified braid system lifting the cyclic cover.
    Lift(BraidSystem),
    /// The cover does not lift; carries the framing obstruction.
    NoAssignmentExists {
        /// Human-readable description of the obstruction.
        reason: String,
    },
}

/// The monodromy of the standard `n`-cyclic cover of the disk branched over
/// `n` points: the full cycle `(1 2 … n)` at every branch point.
pub(crate) fn cyclic_cover_system(n: usize) -> PermutationSystem {
    let mut images: Vec<usize> = (2..=n).collect();
    images.push(1);
    let rho = Permutation::from_images(&images).expect("full cycle is a permutation");
    PermutationSystem::new(n, vec![rho; n]).expect("ρⁿ is the identity")
}

/// Lifts the `n`-cyclic branched cover of the disk, or reports the framing
/// obstruction.
///
/// For even `n = 2m` the lift is `(α, …, α, C, …, C)` (each `m` times) with
/// `α = σ_{n−1}·…·σ₁` and `C = w·α⁻¹·w⁻¹`, where `w` is the half twist of
/// `B_m` written in the doubled generators `σ_i·σ_{i+m}`. The power `α^m` is
/// the half rotation of the `n`-punctured disk and `w` is symmetric under
/// that rotation, so `w` commutes with `α^m` and the product telescopes:
/// `α^m·C^m = α^m·w·α^{−m}·w⁻¹ = 1`. Conjugating by `w` repairs the forget
/// image: `C` projects to the full cycle `ρ` again (α⁻¹ alone projects to
/// `ρ⁻¹`). Both entries are tracked conjugates of the full standard chain
/// `σ₁·…·σ_{n−1}` (via `Δ` and `Δ·w⁻¹`), so certificates are immediate. For
/// odd `n ≥ 3` every entry is an `n`-cycle of even weight `n−1`, and an odd
/// count of odd weights can never balance, so no lift exists.
pub fn lift_cyclic_cover(n: usize) -> Result<CyclicCoverOutcome> {
    if n == 0 {
        return Err(HurwitzError::DegreeMismatch(0, 1));
    }
    if n == 1 {
        let bs = BraidSystem::new(
            1,
            vec![BraidWord::identity(1)],
            vec![Some(SplitUnlinkCertificate::new(
                crate::braid_core::CertificateKind::CompletelySplitStandardUnlink,
                BraidWord::identity(1),
                BraidWord::identity(1),
            ))],
        )?;
        return Ok(CyclicCoverOutcome::Lift(bs));
    }
    if n % 2 == 1 {
        let reason = match smooth_obstruction(&cyclic_cover_system(n)) {
            SmoothOutcome::NoAssignmentExists { reason } => reason,
            SmoothOutcome::Assignment(_) => {
                return Err(HurwitzError::InternalInconsistency(
                    "odd cyclic cover unexpectedly admits a sign assignment".to_string(),
                ))
            }
        };
        return Ok(CyclicCoverOutcome::NoAssignmentExists { reason });
    }
    let m = n / 2;
    let alpha_letters: Vec<i32> = (1..n).rev().map(|i| i as i32).collect();
    let alpha = BraidWord::from_letters(n, &alpha_letters)
        .map_err(|e| HurwitzError::InternalInconsistency(e.to_string()))?;
    let mut w_letters = Vec::new();
    for &l in BraidWord::half_twist(m).letters() {
        w_letters.push(l);
        w_letters.push(l + m as i32);
    }
    let w = BraidWord::from_letters(n, &w_letters)
        .map_err(|e| HurwitzError::InternalInconsistency(e.to_string()))?;
    let entry_c = w
        .then(&alpha.inverse())
        .then(&w.inverse())
        .free_reduce();
    let rho = alpha.forget();
    if entry_c.forget() != rho {
        return Err(HurwitzError::InternalInconsistency(
            "symmetric conjugate does not project to the full cycle".to_string(),
        ));
    }
    let product = alpha.pow(m as i64).then(&entry_c.pow(m as i64));
    if !crate::braid_core::normal_form(&product).is_identity() {
        return Err(HurwitzError::InternalInconsistency(
            "cyclic cover entries do not multiply to the identity".to_string(),
        ));
    }
    let delta = BraidWord::half_twist(n);
    let chain = SplitUnlinkCertificate::chain_target(n, &[(1, n, 1)]);
    let cert_alpha = SplitUnlinkCertificate::new(
        crate::braid_core::CertificateKind::CompletelySplitStandardUnlink,
        delta.clone(),
        chain.clone(),
    );
    let cert_c = SplitUnlinkCertificate::new(
        crate::braid_core::CertificateKind::CompletelySplitStandardUnlink,
        delta.then(&w.inverse()).free_reduce(),
        chain.inverse(),
    );
    let mut entries = vec![alpha; m];
    entries.extend(vec![entry_c; m]);
    let mut certs = vec![Some(cert_alpha); m];
    certs.extend(vec![Some(cert_c); m]);
    Ok(CyclicCoverOutcome::Lift(BraidSystem::new(
        n, entries, certs,
    )?))
}

/// The genus of each component of the branched cover of the sphere with the
/// given monodromy, in order of the components' smallest points.
///
/// Riemann–Hurwitz per component: `χ = 2·(sheets) − Σ (ℓ − 1)` over the
/// nontrivial cycles supported on the component, and `genus = (2 − χ)/2`.
pub fn cover_genus(ps: &PermutationSystem) -> Result<Vec<i64>> {
    if !ps.target().is_identity() {
        return Err(HurwitzError::NotIdentityProduct);
    }
    let orbits = Permutation::orbits(ps.degree(), ps.entries());
    let mut genera = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let branch: i64 = ps
            .entries()
            .iter()
            .flat_map(|e| e.cycles())
            .filter(|c| orbit.contains(&c[0]))
            .map(|c| c.len() as i64 - 1)
            .sum();
        let chi = 2 * orbit.len() as i64 - branch;
        if chi % 2 != 0 || chi > 2 {
            return Err(HurwitzError::InternalInconsistency(format!(
                "component Euler characteristic {chi} is not that of a closed surface"
            )));
        }
        genera.push((2 - chi) / 2);
    }
    Ok(genera)
}

/// Verdict of the torsion obstruction for covers over a base with
/// non-trivial fundamental group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionVerdict {
    /// A base loop is torsion in the relevant quotient but has non-trivial
    /// monodromy image, while braid groups are torsion-free: no lift.
    Obstructed,
    /// The torsion test does not decide this case.
    Inconclusive,
}

/// Applies the torsion obstruction: a loop of finite order in the base whose
/// monodromy `image` is non-trivial cannot lift, because its lift would be a
/// non-trivial torsion element of a braid group, and braid groups are
/// torsion-free.
///
/// `relator_gives_torsion` records that the finite order of the loop has
/// been derived from the base relators (see [`rewrite_derives_identity`]).
pub fn torsion_obstruction(relator_gives_torsion: bool, image: &Permutation) -> TorsionVerdict {
    if relator_gives_torsion && !image.is_identity() {
        TorsionVerdict::Obstructed
    } else {
        TorsionVerdict::Inconclusive
    }
}

/// Letter-inverse in the `a`/`A` convention.
fn flip(c: char) -> char {
    if c.is_ascii_uppercase() {
        c.to_ascii_lowercase()
    } else {
        c.to_ascii_uppercase()
    }
}

/// Inverse of a word in the `a`/`A` convention.
fn invert_word(w: &str) -> String {
    w.chars().rev().map(flip).collect()
}

/// Decides by bounded search whether `start` can be carried to the empty
/// word using the given relator `rules` plus free insertion/cancellation of
/// inverse pairs.
///
/// Words are strings over case-paired letters (`a` and `A` are mutually
/// inverse). Each rule `(u, v)` asserts `u = v` in the group and may be
/// applied in either direction, as may its inverse `(u⁻¹, v⁻¹)`. The search
/// is a breadth-first enumeration of all words of length at most `max_len`,
/// visiting at most `max_nodes` words; `true` means a derivation was found
/// (a sound conclusion), `false` only that none exists within the bounds.
pub fn rewrite_derives_identity(
    rules: &[(&str, &str)],
    start: &str,
    max_len: usize,
    max_nodes: usize,
) -> bool {
    if start.is_empty() {
        return true;
    }
    // Both orientations of each rule and of its inverse.
    let mut subs: Vec<(String, String)> = Vec::new();
    let mut alphabet: HashSet<char> = start.chars().map(|c| c.to_ascii_lowercase()).collect();
    for (u, v) in rules {
        for c in u.chars().chain(v.chars()) {
            alphabet.insert(c.to_ascii_lowercase());
        }
        let (iu, iv) = (invert_word(u), invert_word(v));
        subs.push((u.to_string(), v.to_string()));
        subs.push((v.to_string(), u.to_string()));
        subs.push((iu.clone(), iv.clone()));
        subs.push((iv, iu));
    }
    let letters: Vec<char> = alphabet.into_iter().collect();

    let mut visited: HashSet<String> = HashSet::new();
    let mut queue: std::collections::VecDeque<String> = std::collections::VecDeque::new();
    visited.insert(start.to_string());
    queue.push_back(start.to_string());
    while let Some(w) = queue.pop_front() {
        let chars: Vec<char> = w.chars().collect();
        let push = |next: String, visited: &mut HashSet<String>,
                        queue: &mut std::collections::VecDeque<String>|
         -> bool {
            if next.is_empty() {
                return true;
            }
            if next.len() <= max_len && visited.len() < max_nodes && visited.insert(next.clone()) {
                queue.push_back(next);
            }
            false
        };
        // Cancellation of adjacent inverse pairs.
        for i in 0..chars.len().saturating_sub(1) {
            if flip(chars[i]) == chars[i + 1] {
                let next: String = chars[..i].iter().chain(&chars[i + 2..]).collect();
                if push(next, &mut visited, &mut queue) {
                    return true;
                }
            }
        }
        // Rule applications.
        for (u, v) in &subs {
            let mut from = 0;
            while let Some(off) = w[from..].find(u.as_str()) {
                let i = from + off;
                let next = format!("{}{}{}", &w[..i], v, &w[i + u.len()..]);
                if push(next, &mut visited, &mut queue) {
                    return true;
                }
                from = i + 1;
            }
        }
        // Insertion of inverse pairs.
        for i in 0..=chars.len() {
            for &l in &letters {
                for pair in [[l, flip(l)], [flip(l), l]] {
                    let next: String = chars[..i]
                        .iter()
                        .chain(pair.iter())
                        .chain(&chars[i..])
                        .collect();
                    if push(next, &mut visited, &mut queue) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// The three 2-fold covers of the Klein bottle relevant to the lifting
/// question, distinguished by their monodromy `π₁ → S₂` on the standard
/// generators `a, b` with relator `a²b²`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KleinCover {
    /// `a ↦ (1 2), b ↦ (1 2)`: the orientation double cover (the torus).
    OrientationDouble,
    /// `a ↦ (1 2), b ↦ id`: the Klein bottle covering itself.
    SelfCover,
    /// `a ↦ id, b ↦ id`: the disconnected trivial cover.
    Disconnected,
}

/// Decides which 2-fold covers of the Klein bottle lift to braided
/// embeddings, with explicit images of `(a, b)` in `B₂` as witnesses.
///
/// `B₂ ≅ ℤ`, so the relator `a²b² ↦ σ₁^{2(m+k)}` forces `m + k = 0` for
/// images `a ↦ σ₁^m`, `b ↦ σ₁^k`. The forgetful map fixes the parities of
/// `m` and `k`; for the self-cover they are odd and even, so `m + k` is odd
/// and the relator can never die — an exact obstruction, not a bounded
/// search.
pub fn klein_bottle_2fold(case: KleinCover) -> LiftVerdict<(BraidWord, BraidWord)> {
    let s1 = BraidWord::generator(2, 1, 1);
    match case {
        KleinCover::OrientationDouble => LiftVerdict::Liftable {
            witness: (s1.clone(), s1.inverse()),
        },
        KleinCover::Disconnected => LiftVerdict::Liftable {
            witness: (BraidWord::identity(2), BraidWord::identity(2)),
        },
        KleinCover::SelfCover => LiftVerdict::NotLiftable {
            obstruction: "any lift sends a ↦ σ₁^m with m odd and b ↦ σ₁^k with k even, \
                          so the relator a²b² maps to σ₁^{2(m+k)} with m+k odd, which is \
                          never trivial in B₂ ≅ ℤ"
                .to_string(),
        },
    }
}
