//! Error types shared across the crate.

use thiserror::Error;

/// Violations of domain-type invariants and proposition grammar errors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("malformed proposition text {text:?}: {reason}")]
    MalformedProposition { text: String, reason: String },
    #[error("block sum must contain at least one color")]
    EmptyBlockSum,
    #[error("duplicate color {0:?} in block sum")]
    DuplicateColor(String),
    #[error("unknown token {0:?}")]
    UnknownToken(String),
    #[error("weight literal may not appear on the left-hand side")]
    WeightOnLhs,
    #[error("invalid weight {0}: expected one of 10, 20, 30, 40, 50")]
    InvalidWeight(i64),
    #[error("left and right block sums overlap")]
    OverlappingSides,
    #[error("direction norm {0} too far from unit length")]
    NonUnitDirection(f64),
    #[error("degenerate direction (zero length)")]
    DegenerateDirection,
    #[error("interval start {start} exceeds end {end}")]
    InvalidInterval { start: u64, end: u64 },
    #[error("utterance text must be non-empty")]
    EmptyUtteranceText,
    #[error("bounding box min corner exceeds max corner")]
    InvalidBoundingBox,
    #[error("centroid lies outside the bounding box")]
    CentroidOutsideBox,
    #[error("a NONE move carries no propositions")]
    NonePropsNotEmpty,
    #[error("invalid frustum: {0}")]
    InvalidFrustum(String),
    #[error("gaze origin coincides with the ear midpoint")]
    DegenerateGaze,
    #[error("bank state invariant violated: {0}")]
    BankInvariant(String),
}

/// Graph construction and execution errors for the dataflow framework.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("duplicate node name {0:?}")]
    DuplicateNodeName(String),
    #[error("interface {interface:?} has more than one producer ({first:?} and {second:?})")]
    DuplicateProducer {
        interface: String,
        first: String,
        second: String,
    },
    #[error("node {node:?} declares input {interface:?} which has no producer")]
    MissingProducer { node: String, interface: String },
    #[error("node {0:?} lists its own output as an input")]
    SelfDependency(String),
    #[error("dependency cycle involving nodes {0:?}")]
    Cycle(Vec<String>),
    #[error("tick input {0:?} is not a declared source interface")]
    UnknownSourceInterface(String),
}

/// Session-file ingestion errors. Line numbers are 1-based.
#[derive(Debug, Error)]
pub enum SessionError {
    #[error("failed to read session file: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: malformed record: {message}")]
    MalformedLine { line: usize, message: String },
    #[error("line {line}: unknown event kind {kind:?}")]
    UnknownKind { line: usize, kind: String },
    #[error("first record must be a header")]
    MissingHeader,
    #[error("line {line}: second header record")]
    DuplicateHeader { line: usize },
    #[error("line {line}: {kind} timestamp {current} precedes timestamp {previous} on line {previous_line}")]
    NonMonotoneTimestamp {
        kind: String,
        line: usize,
        current: u64,
        previous_line: usize,
        previous: u64,
    },
    #[error("line {line}: reference to unknown utterance id {utterance_id:?}")]
    DanglingUtteranceRef { line: usize, utterance_id: String },
    #[error("line {line}: duplicate utterance id {id:?}")]
    DuplicateUtteranceId { line: usize, id: String },
    #[error("line {line}: {source}")]
    InvalidEvent {
        line: usize,
        #[source]
        source: DomainError,
    },
    #[error("session has no {channel} records, required for condition {condition}")]
    MissingGoldChannel { channel: String, condition: String },
    #[error("invalid configuration: {0}")]
    Config(String),
}
