use crate::domain::BlockColor;
use crate::error::DomainError;
use crate::math::Vec3;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// Tolerance for accepting a stored direction as unit length.
pub const UNIT_NORM_TOLERANCE: f64 = 1e-6;

/// Directions within this tolerance of unit length are normalized on intake;
/// anything further off is rejected.
pub const DIRECTION_INTAKE_TOLERANCE: f64 = 1e-3;

fn intake_direction(direction: Vec3) -> Result<Vec3, DomainError> {
    let n = direction.norm();
    if n == 0.0 {
        return Err(DomainError::DegenerateDirection);
    }
    if (n - 1.0).abs() > DIRECTION_INTAKE_TOLERANCE {
        return Err(DomainError::NonUnitDirection(n));
    }
    Ok(direction * (1.0 / n))
}

/// A transcribed utterance with its time span in milliseconds.
#[derive(Debug, Clone, PartialEq)]
pub struct Utterance {
    pub id: String,
    pub speaker: String,
    pub start_ms: u64,
    pub end_ms: u64,
    pub text: String,
    /// Filled in by dense paraphrasing; absent on raw input.
    pub paraphrase: Option<String>,
}

impl Utterance {
    pub fn new(
        id: impl Into<String>,
        speaker: impl Into<String>,
        start_ms: u64,
        end_ms: u64,
        text: impl Into<String>,
    ) -> Result<Utterance, DomainError> {
        let text = text.into();
        if start_ms > end_ms {
            return Err(DomainError::InvalidInterval {
                start: start_ms,
                end: end_ms,
            });
        }
        if text.is_empty() {
            return Err(DomainError::EmptyUtteranceText);
        }
        Ok(Utterance {
            id: id.into(),
            speaker: speaker.into(),
            start_ms,
            end_ms,
            text,
            paraphrase: None,
        })
    }
}

/// A detected deictic (pointing) gesture: fingertip position and pointing
/// direction over a time span.
#[derive(Debug, Clone, PartialEq)]
pub struct DeixisEvent {
    pub id: String,
    pub hand: String,
    pub start_ms: u64,
    pub end_ms: u64,
    pub fingertip: Vec3,
    pub direction: Vec3,
}

impl DeixisEvent {
    pub fn new(
        id: impl Into<String>,
        hand: impl Into<String>,
        start_ms: u64,
        end_ms: u64,
        fingertip: Vec3,
        direction: Vec3,
    ) -> Result<DeixisEvent, DomainError> {
        if start_ms > end_ms {
            return Err(DomainError::InvalidInterval {
                start: start_ms,
                end: end_ms,
            });
        }
        Ok(DeixisEvent {
            id: id.into(),
            hand: hand.into(),
            start_ms,
            end_ms,
            fingertip,
            direction: intake_direction(direction)?,
        })
    }
}

/// A gaze ray for one participant at one frame.
#[derive(Debug, Clone, PartialEq)]
pub struct GazeEvent {
    pub time_ms: u64,
    pub participant: String,
    pub origin: Vec3,
    pub direction: Vec3,
}

impl GazeEvent {
    pub fn new(
        time_ms: u64,
        participant: impl Into<String>,
        origin: Vec3,
        direction: Vec3,
    ) -> Result<GazeEvent, DomainError> {
        Ok(GazeEvent {
            time_ms,
            participant: participant.into(),
            origin,
            direction: intake_direction(direction)?,
        })
    }
}

/// Class of a detected object: one of the five blocks or the balance scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectClass {
    Red,
    Blue,
    Green,
    Purple,
    Yellow,
    Scale,
}

impl ObjectClass {
    pub fn block_color(self) -> Option<BlockColor> {
        match self {
            ObjectClass::Red => Some(BlockColor::Red),
            ObjectClass::Blue => Some(BlockColor::Blue),
            ObjectClass::Green => Some(BlockColor::Green),
            ObjectClass::Purple => Some(BlockColor::Purple),
            ObjectClass::Yellow => Some(BlockColor::Yellow),
            ObjectClass::Scale => None,
        }
    }

    pub fn from_block(color: BlockColor) -> ObjectClass {
        match color {
            BlockColor::Red => ObjectClass::Red,
            BlockColor::Blue => ObjectClass::Blue,
            BlockColor::Green => ObjectClass::Green,
            BlockColor::Purple => ObjectClass::Purple,
            BlockColor::Yellow => ObjectClass::Yellow,
        }
    }

    pub fn name(self) -> &'static str {
        match self.block_color() {
            Some(c) => c.name(),
            None => "scale",
        }
    }
}

// Blocks in canonical color order, the scale after all blocks. Used for
// tie-breaking equidistant deixis targets.
impl Ord for ObjectClass {
    fn cmp(&self, other: &Self) -> Ordering {
        fn rank(c: ObjectClass) -> u8 {
            match c.block_color() {
                Some(color) => color.bit(),
                None => 5,
            }
        }
        rank(*self).cmp(&rank(*other))
    }
}

impl PartialOrd for ObjectClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Axis-aligned box in millimeters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Aabb {
    pub min: Vec3,
    pub max: Vec3,
}

impl Aabb {
    pub fn contains(&self, p: Vec3) -> bool {
        p.x >= self.min.x
            && p.y >= self.min.y
            && p.z >= self.min.z
            && p.x <= self.max.x
            && p.y <= self.max.y
            && p.z <= self.max.z
    }
}

/// One detected object at one frame time.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectDetection {
    pub time_ms: u64,
    pub class: ObjectClass,
    pub centroid: Vec3,
    pub bbox: Aabb,
}

impl ObjectDetection {
    pub fn new(
        time_ms: u64,
        class: ObjectClass,
        centroid: Vec3,
        bbox: Aabb,
    ) -> Result<ObjectDetection, DomainError> {
        if bbox.min.x > bbox.max.x || bbox.min.y > bbox.max.y || bbox.min.z > bbox.max.z {
            return Err(DomainError::InvalidBoundingBox);
        }
        if !bbox.contains(centroid) {
            return Err(DomainError::CentroidOutsideBox);
        }
        Ok(ObjectDetection {
            time_ms,
            class,
            centroid,
            bbox,
        })
    }

    /// A detection with a small box centered on the centroid; fixtures and
    /// tests mostly care about the centroid only.
    pub fn at_point(
        time_ms: u64,
        class: ObjectClass,
        centroid: Vec3,
        half_extent_mm: f64,
    ) -> ObjectDetection {
        let h = Vec3::new(half_extent_mm, half_extent_mm, half_extent_mm);
        ObjectDetection {
            time_ms,
            class,
            centroid,
            bbox: Aabb {
                min: centroid - h,
                max: centroid + h,
            },
        }
    }
}
