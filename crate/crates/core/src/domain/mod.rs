//! Shared domain types: colors, weights, block sums, propositions, moves,
//! and the event records a session stream is made of.
//!
//! Everything here is an immutable value; construction validates invariants
//! and propositions are kept in canonical form so that value equality is
//! canonical-form equality.

mod color;
mod events;
mod moves;
mod prop;
mod sum;

pub use color::{BlockColor, WeightLiteral};
pub use events::{Aabb, DeixisEvent, GazeEvent, ObjectClass, ObjectDetection, Utterance};
pub use moves::{EpistemicMove, MoveLabel, QUD};
pub use prop::{Proposition, Relation, Rhs};
pub use sum::BlockSum;
