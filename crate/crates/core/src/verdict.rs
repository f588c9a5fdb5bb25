//! The common answer type for lifting decision procedures.

use serde::Serialize;

/// Outcome of a lifting decision.
///
/// `Liftable` carries an explicit witness (checkable by the caller);
/// `NotLiftable` carries a human-readable obstruction; `UnknownWithinBound`
/// reports that a bounded search was exhausted without a decision, so the
/// question remains open at that bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum LiftVerdict<W> {
    /// A lift exists; `witness` realizes it.
    Liftable { witness: W },
    /// No lift exists; `obstruction` names the reason.
    NotLiftable { obstruction: String },
    /// Undecided: the search was exhausted at `bound`.
    UnknownWithinBound { bound: u64 },
}

impl<W> LiftVerdict<W> {
    /// Whether this verdict is `Liftable`.
    pub fn is_liftable(&self) -> bool {
        matches!(self, LiftVerdict::Liftable { .. })
    }

    /// Whether this verdict is `NotLiftable`.
    pub fn is_not_liftable(&self) -> bool {
        matches!(self, LiftVerdict::NotLiftable { .. })
    }

    /// Maps the witness type, preserving the other variants.
    pub fn map_witness<V>(self, f: impl FnOnce(W) -> V) -> LiftVerdict<V> {
        match self {
            LiftVerdict::Liftable { witness } => LiftVerdict::Liftable {
                witness: f(witness),
            },
            LiftVerdict::NotLiftable { obstruction } => LiftVerdict::NotLiftable { obstruction },
            LiftVerdict::UnknownWithinBound { bound } => LiftVerdict::UnknownWithinBound { bound },
        }
    }
}
