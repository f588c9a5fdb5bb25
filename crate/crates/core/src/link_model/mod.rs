//! Link diagrams and generated presentations.
//!
//! A [`LinkDiagram`] is a PD-code carrier: a list of crossings, each a
//! quadruple of arc identifiers read counterclockwise starting from the
//! incoming under-strand. Orientations are not part of the input; they are
//! recovered by constraint propagation (each arc has exactly one head and
//! one tail, and at every crossing exactly one of the two over slots is
//! incoming), and crossing signs follow from them.
//!
//! Sign convention: a crossing `X[a,b,c,d]` (under-strand entering at `a`,
//! leaving at `c`) is **positive** when the over-strand runs `d → b`, i.e.
//! rotating the over direction counterclockwise by a quarter turn gives the
//! under direction.
//!
//! [`wirtinger`] extracts the link-group presentation with one generator per
//! strand (arcs merged across over-passes) and one conjugation relation per
//! crossing; [`two_bridge_presentation`] produces the 2-generator Schubert
//! form for a rational link; [`pretzel_diagram`] generates the standard
//! diagram of `P(q₁,…,q_m)`.

mod diagram;
mod pretzel;
mod two_bridge;
mod wirtinger;


pub use diagram::{braid_closure, connect_sum, parse_pd, BandMarker, Crossing, LinkDiagram};
pub use pretzel::{is_pretzel_knot, pretzel_diagram, PretzelForm};
pub use two_bridge::{two_bridge_presentation, TwoBridgeForm, TwoBridgePresentation, GEN_A, GEN_B};
pub use wirtinger::{wirtinger, WirtingerPresentation, WirtingerRelation};

use thiserror::Error;

/// Errors arising from diagram construction and presentation extraction.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum LinkError {
    /// The PD text could not be parsed.
    #[error("malformed PD text: {0}")]
    MalformedPD(String),
    /// The arc bookkeeping is inconsistent (an arc does not appear exactly
    /// twice, or orientations cannot be propagated consistently).
    #[error("inconsistent arcs: {0}")]
    InconsistentArcs(String),
    /// The diagram is disconnected where a connected one is required.
    #[error("diagram is disconnected")]
    Disconnected,
    /// A two-bridge fraction is not in lowest terms.
    #[error("p = {0} and q = {1} are not coprime")]
    NotCoprime(u64, u64),
    /// A parameter violates a precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    /// The two band strands carry different colors, so the marked band is
    /// not a connect-sum splitting.
    #[error("band colors differ")]
    BandColorsDiffer,
}

/// Convenience alias.
pub type Result<T> = std::result::Result<T, LinkError>;
