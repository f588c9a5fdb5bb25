//! System types and the Hurwitz sliding moves.

use super::{HurwitzError, Result};
use crate::braid_core::{BraidWord, Permutation, SplitUnlinkCertificate};
use std::fmt;

/// A tuple of permutations whose left-to-right product equals a target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationSystem {
    degree: usize,
    entries: Vec<Permutation>,
    target: Permutation,
}

impl PermutationSystem {
    /// Builds a system with identity target, checking the product invariant.
    pub fn new(degree: usize, entries: Vec<Permutation>) -> Result<Self> {
        Self::with_target(degree, entries, Permutation::identity(degree))
    }

    /// Builds a system with an explicit target, checking the product invariant.
    pub fn with_target(
        degree: usize,
        entries: Vec<Permutation>,
        target: Permutation,
    ) -> Result<Self> {
        for e in &entries {
            if e.degree() != degree {
                return Err(HurwitzError::DegreeMismatch(e.degree(), degree));
            }
        }
        let product = entries
            .iter()
            .fold(Permutation::identity(degree), |acc, p| acc.then(p));
        if product != target {
            return Err(HurwitzError::NotIdentityProduct);
        }
        Ok(PermutationSystem {
            degree,
            entries,
            target,
        })
    }

    /// Number of points the permutations act on.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The entries `(ρ₁, …, ρ_m)`.
    pub fn entries(&self) -> &[Permutation] {
        &self.entries
    }

    /// Number of entries `m`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Whether the system has no entries.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The target permutation (identity unless constructed otherwise).
    pub fn target(&self) -> &Permutation {
        &self.target
    }

    /// Whether every entry is a transposition.
    pub fn all_transpositions(&self) -> bool {
        self.entries.iter().all(Permutation::is_transposition)
    }

    /// Whether the generated subgroup acts transitively on `{1..n}`.
    pub fn is_transitive(&self) -> bool {
        Permutation::orbits(self.degree, &self.entries).len() <= 1
    }

    /// Applies the Hurwitz slide at `k` (1-based, `1 ≤ k < m`).
    ///
    /// Forward (`dir = +1`): `(a_k, a_{k+1}) ↦ (a_k a_{k+1} a_k⁻¹, a_k)`.
    /// Inverse (`dir = −1`): `(a_k, a_{k+1}) ↦ (a_{k+1}, a_{k+1}⁻¹ a_k a_{k+1})`.
    /// Both preserve the entry product; they are mutually inverse.
    pub fn apply_slide(&self, k: usize, dir: i8) -> Result<(PermutationSystem, Move)> {
        if k == 0 || k >= self.entries.len() {
            return Err(HurwitzError::IndexOutOfRange(k, self.entries.len()));
        }
        let mut entries = self.entries.clone();
        let (a, b) = (entries[k - 1].clone(), entries[k].clone());
        if dir >= 0 {
            // a·b·a⁻¹ under left-to-right composition.
            entries[k - 1] = a.then(&b).then(&a.inverse());
            entries[k] = a;
        } else {
            entries[k - 1] = b.clone();
            entries[k] = b.inverse().then(&a).then(&b);
        }
        let out = PermutationSystem {
            degree: self.degree,
            entries,
            target: self.target.clone(),
        };
        let dir = if dir >= 0 { 1 } else { -1 };
        Ok((out, Move::Slide { position: k, dir }))
    }
}

impl fmt::Display for PermutationSystem {
    /// File format: `perm-system n: (1 2),(3 4),…`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm-system {}:", self.degree)?;
        for (i, e) in self.entries.iter().enumerate() {
            write!(f, "{}{}", if i == 0 { " " } else { "," }, e)?;
        }
        Ok(())
    }
}

/// A tuple of braid words with identity product, each entry optionally
/// carrying a split-unlink certificate.
#[derive(Debug, Clone)]
pub struct BraidSystem {
    strand_count: usize,
    entries: Vec<BraidWord>,
    certificates: Vec<Option<SplitUnlinkCertificate>>,
}

impl BraidSystem {
    /// Builds a system from entries and matching per-entry certificates.
    ///
    /// The identity-product invariant is the caller's responsibility at
    /// construction time (it is re-checked by [`super::verify_braid_system`],
    /// which is the contractual verifier).
    pub fn new(
        strand_count: usize,
        entries: Vec<BraidWord>,
        certificates: Vec<Option<SplitUnlinkCertificate>>,
    ) -> Result<Self> {
        assert_eq!(entries.len(), certificates.len());
        for e in &entries {
            if e.strand_count() != strand_count {
                return Err(HurwitzError::DegreeMismatch(e.strand_count(), strand_count));
            }
        }
        Ok(BraidSystem {
            strand_count,
            entries,
            certificates,
        })
    }

    /// Builds a system with no certificates attached.
    pub fn uncertified(strand_count: usize, entries: Vec<BraidWord>) -> Result<Self> {
        let certs = vec![None; entries.len()];
        Self::new(strand_count, entries, certs)
    }

    /// Strand count `n`.
    pub fn strand_count(&self) -> usize {
        self.strand_count
    }

    /// The braid entries.
    pub fn entries(&self) -> &[BraidWord] {
        &self.entries
    }

    /// Per-entry certificates (parallel to `entries`).
    pub fn certificates(&self) -> &[Option<SplitUnlinkCertificate>] {
        &self.certificates
    }

    /// The permutation system obtained by forgetting every entry.
    pub fn forget(&self) -> Result<PermutationSystem> {
        let perms: Vec<Permutation> = self.entries.iter().map(BraidWord::forget).collect();
        let target = perms
            .iter()
            .fold(Permutation::identity(self.strand_count), |a, p| a.then(p));
        PermutationSystem::with_target(self.strand_count, perms, target)
    }

    /// Applies the Hurwitz slide at `k` (1-based), transporting certificates.
    ///
    /// A slide conjugates one entry and moves the other intact, so
    /// certificates survive: the conjugated entry's certificate is
    /// transported along the conjugation.
    pub fn apply_slide(&self, k: usize, dir: i8) -> Result<(BraidSystem, Move)> {
        if k == 0 || k >= self.entries.len() {
            return Err(HurwitzError::IndexOutOfRange(k, self.entries.len()));
        }
        let mut entries = self.entries.clone();
        let mut certs = self.certificates.clone();
        let (a, b) = (entries[k - 1].clone(), entries[k].clone());
        let (ca, cb) = (certs[k - 1].clone(), certs[k].clone());
        if dir >= 0 {
            entries[k - 1] = a.then(&b).then(&a.inverse()).free_reduce();
            entries[k] = a.clone();
            certs[k - 1] = cb.map(|c| c.conjugated_by(&a.inverse()));
            certs[k] = ca;
        } else {
            entries[k - 1] = b.clone();
            entries[k] = b.inverse().then(&a).then(&b).free_reduce();
            certs[k - 1] = cb;
            certs[k] = ca.map(|c| c.conjugated_by(&b));
        }
        let out = BraidSystem {
            strand_count: self.strand_count,
            entries,
            certificates: certs,
        };
        let dir = if dir >= 0 { 1 } else { -1 };
        Ok((out, Move::Slide { position: k, dir }))
    }
}

impl fmt::Display for BraidSystem {
    /// File format: `braid-system n: [1],[3],[2 1 -2],…`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid-system {}:", self.strand_count)?;
        for (i, e) in self.entries.iter().enumerate() {
            write!(f, "{}[{}]", if i == 0 { " " } else { "," }, e)?;
        }
        Ok(())
    }
}

/// One move of a system-rewriting trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// Hurwitz slide `s_position^dir` (`dir ∈ {+1, −1}`).
    Slide { position: usize, dir: i8 },
    /// Deletion of the subsystem `(value, value⁻¹)` at `position`
    /// (1-based index of the left member).
    DeletePair { position: usize, value: Permutation },
    /// Insertion of the subsystem `(value, value⁻¹)` at `position`.
    InsertPair { position: usize, value: Permutation },
    /// Replacement of the entry at `position` by the two `factors`
    /// (left-to-right product preserved).
    Fission {
        position: usize,
        factors: (Permutation, Permutation),
    },
    /// Replacement of the entries at `position`, `position + 1` by their
    /// product; records the fused factors so the move can be reversed.
    Fusion {
        position: usize,
        factors: (Permutation, Permutation),
    },
}

impl Move {
    /// The move undoing this one.
    pub fn inverse(&self) -> Move {
        match self {
            Move::Slide { position, dir } => Move::Slide {
                position: *position,
                dir: -dir,
            },
            Move::DeletePair { position, value } => Move::InsertPair {
                position: *position,
                value: value.clone(),
            },
            Move::InsertPair { position, value } => Move::DeletePair {
                position: *position,
                value: value.clone(),
            },
            Move::Fission { position, factors } => Move::Fusion {
                position: *position,
                factors: factors.clone(),
            },
            Move::Fusion { position, factors } => Move::Fission {
                position: *position,
                factors: factors.clone(),
            },
        }
    }
}

/// A recorded sequence of moves; replaying it on the recorded start system
/// yields the recorded end system.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveTrace {
    moves: Vec<Move>,
}

impl MoveTrace {
    /// The empty trace.
    pub fn new() -> Self {
        MoveTrace::default()
    }

    /// The recorded moves, in application order.
    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// Appends a move.
    pub fn push(&mut self, m: Move) {
        self.moves.push(m);
    }

    /// The trace undoing this one (inverted moves in reverse order).
    pub fn reversed(&self) -> MoveTrace {
        MoveTrace {
            moves: self.moves.iter().rev().map(Move::inverse).collect(),
        }
    }

    /// Replays the trace on a permutation system.
    pub fn replay(&self, start: &PermutationSystem) -> Result<PermutationSystem> {
        let mut sys = start.clone();
        for m in &self.moves {
            sys = apply_move(&sys, m)?;
        }
        Ok(sys)
    }
}

/// Applies a single move to a permutation system.
pub(crate) fn apply_move(sys: &PermutationSystem, m: &Move) -> Result<PermutationSystem> {
    let degree = sys.degree();
    let mut entries: Vec<Permutation> = sys.entries().to_vec();
    match m {
        Move::Slide { position, dir } => {
            return Ok(sys.apply_slide(*position, *dir)?.0);
        }
        Move::DeletePair { position, value } => {
            let p = *position;
            if p == 0 || p + 1 > entries.len() || p >= entries.len() {
                return Err(HurwitzError::IndexOutOfRange(p, entries.len()));
            }
            if &entries[p - 1] != value || entries[p] != value.inverse() {
                return Err(HurwitzError::InternalInconsistency(format!(
                    "delete-pair at {p} does not match recorded value {value}"
                )));
            }
            entries.drain(p - 1..=p);
        }
        Move::InsertPair { position, value } => {
            let p = *position;
            if p == 0 || p > entries.len() + 1 {
                return Err(HurwitzError::IndexOutOfRange(p, entries.len()));
            }
            entries.insert(p - 1, value.inverse());
            entries.insert(p - 1, value.clone());
        }
        Move::Fission { position, factors } => {
            let p = *position;
            if p == 0 || p > entries.len() {
                return Err(HurwitzError::IndexOutOfRange(p, entries.len()));
            }
            if entries[p - 1] != factors.0.then(&factors.1) {
                return Err(HurwitzError::InternalInconsistency(format!(
                    "fission at {p} does not match recorded factors"
                )));
            }
            entries[p - 1] = factors.0.clone();
            entries.insert(p, factors.1.clone());
        }
        Move::Fusion { position, factors } => {
            let p = *position;
            if p == 0 || p >= entries.len() {
                return Err(HurwitzError::IndexOutOfRange(p, entries.len()));
            }
            if entries[p - 1] != factors.0 || entries[p] != factors.1 {
                return Err(HurwitzError::InternalInconsistency(format!(
                    "fusion at {p} does not match recorded factors"
                )));
            }
            entries[p - 1] = factors.0.then(&factors.1);
            entries.remove(p);
        }
    }
    PermutationSystem::with_target(degree, entries, sys.target().clone())
}
