//! Exact-arithmetic toolkit for deciding and certifying when branched coverings
//! lift to braided embeddings.
//!
//! The crate is organized in five modules:
//!
//! - [`braid_core`] — braid-group elements with a decidable word problem
//!   (Garside left normal form), the forgetful map to the symmetric group,
//!   exponent sums, cabling of reducible braids, and the quotient map
//!   `B₃ → PSL(2,ℤ)`.
//! - [`hurwitz_lift`] — permutation systems and braid systems over punctured
//!   spheres, Hurwitz sliding moves, standardization and lifting algorithms,
//!   and smooth-category obstructions.
//! - [`link_model`] — link diagrams (PD codes, generated pretzel diagrams),
//!   Wirtinger presentations, and two-bridge presentations in Schubert form.
//! - [`coloring_lift`] — coloring enumeration, Fox-calculus Alexander
//!   polynomials, transvection labellings with the twist-region recurrences,
//!   and decision/search procedures for lifting tricolorings to simple
//!   `B₃`-colorings.
//! - [`pretzel_classify`] — closed-form liftability classifiers for pretzel
//!   links, cross-checkable against the general solver.
//!
//! All types are immutable values and all operations are pure functions, so
//! callers may parallelize freely.

pub mod braid_core;
pub mod coloring_lift;
pub mod hurwitz_lift;
pub mod link_model;
pub mod pretzel_classify;
pub mod verdict;

pub use verdict::LiftVerdict;
