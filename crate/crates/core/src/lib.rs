//! Deterministic, replayable common-ground tracking for situated group dialogue.
//!
//! The library ingests annotated session event streams (speech, deixis, gaze,
//! object detections), runs them through a typed dataflow graph, and maintains
//! the group's questions under discussion, evidence, and fact banks. Scoring
//! (Sørensen–Dice per bank), a ground-truth substitution harness, and per-node
//! profiling are built in.
//!
//! Modules:
//! - [`domain`]: block colors, weights, propositions, utterances, events
//! - [`pipeline`]: the typed dataflow graph framework with profiling
//! - [`geometry`]: pointing frustums, gaze rays, target selection
//! - [`mmdp`]: demonstrative resolution against deixis target queues
//! - [`nlu`]: proposition vocabulary, extraction, and move classification
//! - [`cgt`]: the bank state machine and its closure rules
//! - [`eval`]: Dice scoring, trajectory reports, substitution studies
//! - [`session`]: session-file ingestion and validation
//! - [`replay`]: end-to-end session replay through the dataflow graph

pub mod cgt;
pub mod config;
pub mod domain;
pub mod error;
pub mod eval;
pub mod geometry;
pub mod math;
pub mod mmdp;
pub mod nlu;
pub mod pipeline;
pub mod replay;
pub mod session;

pub use cgt::{apply_move, initial_state, Applied, BankState, MoveRecord};
pub use config::{FrustumConfig, RunConfig, SubstitutionCondition};
pub use domain::{
    BlockColor, BlockSum, DeixisEvent, EpistemicMove, GazeEvent, MoveLabel, ObjectClass,
    ObjectDetection, Proposition, Relation, Rhs, Utterance, WeightLiteral, QUD,
};
pub use error::{DomainError, GraphError, SessionError};
pub use eval::{dice, score_trajectory, DiceScore, EvalReport, GoldTrajectory};
pub use geometry::{Frustum, Target, TargetList};
pub use math::Vec3;
pub use pipeline::{GraphPlan, InterfaceId, NodeSpec, Pipeline, ProfileReport};
pub use session::{SessionEvent, SessionFile};
