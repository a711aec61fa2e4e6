//! Pointing frustum construction and object intersection.
//!
//! A deictic gesture projects a truncated-cone volume from the extended
//! fingertip into the scene; objects whose centroid falls inside are the
//! candidate targets of the deixis, ordered by distance along the pointing
//! axis. The same machinery traces gaze rays, whose hits are reported but
//! never treated as selections.

use crate::config::FrustumConfig;
use crate::domain::{DeixisEvent, ObjectDetection};
use crate::error::DomainError;
use crate::math::Vec3;

/// Directions within this tolerance of unit length are normalized;
/// anything further off is rejected.
const AXIS_INTAKE_TOLERANCE: f64 = 1e-3;

/// A pointing volume: a cone truncated at the fingertip with radius
/// `near_radius_mm`, widening linearly to `far_radius_mm` at `length_mm`
/// along the axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frustum {
    pub origin: Vec3,
    pub axis: Vec3,
    pub near_radius_mm: f64,
    pub far_radius_mm: f64,
    pub length_mm: f64,
}

/// Axial/lateral decomposition of a point relative to a frustum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probe {
    pub inside: bool,
    pub axial_mm: f64,
    pub lateral_mm: f64,
}

/// One object selected by a frustum, with its distances.
#[derive(Debug, Clone, PartialEq)]
pub struct Target {
    pub object: ObjectDetection,
    pub axial_mm: f64,
    pub lateral_mm: f64,
}

/// Targets sorted ascending by axial distance; ties broken by canonical
/// object-class order.
pub type TargetList = Vec<Target>;

impl Frustum {
    pub fn new(origin: Vec3, axis: Vec3, config: &FrustumConfig) -> Result<Frustum, DomainError> {
        if config.near_radius_mm <= 0.0 {
            return Err(DomainError::InvalidFrustum(
                "near radius must be positive".into(),
            ));
        }
        if config.far_radius_mm < config.near_radius_mm {
            return Err(DomainError::InvalidFrustum(
                "far radius must be at least the near radius".into(),
            ));
        }
        if config.length_mm <= 0.0 {
            return Err(DomainError::InvalidFrustum("length must be positive".into()));
        }
        let n = axis.norm();
        if n == 0.0 {
            return Err(DomainError::DegenerateDirection);
        }
        if (n - 1.0).abs() > AXIS_INTAKE_TOLERANCE {
            return Err(DomainError::NonUnitDirection(n));
        }
        Ok(Frustum {
            origin,
            axis: axis * (1.0 / n),
            near_radius_mm: config.near_radius_mm,
            far_radius_mm: config.far_radius_mm,
            length_mm: config.length_mm,
        })
    }

    /// Build the pointing frustum for a deixis event.
    pub fn from_deixis(event: &DeixisEvent, config: &FrustumConfig) -> Result<Frustum, DomainError> {
        Frustum::new(event.fingertip, event.direction, config)
    }

    /// Interpolated radius at axial distance `d`.
    pub fn radius_at(&self, axial_mm: f64) -> f64 {
        self.near_radius_mm
            + (self.far_radius_mm - self.near_radius_mm) * axial_mm / self.length_mm
    }

    /// Decompose a point into axial distance along the axis and lateral
    /// offset from it, and test containment: inside iff `0 <= d <= length`
    /// and the lateral offset is at most the interpolated radius at `d`
    /// (boundary included).
    pub fn probe(&self, point: Vec3) -> Probe {
        let rel = point - self.origin;
        let axial = rel.dot(self.axis);
        let lateral = (rel - self.axis * axial).norm();
        let inside =
            axial >= 0.0 && axial <= self.length_mm && lateral <= self.radius_at(axial);
        Probe {
            inside,
            axial_mm: axial,
            lateral_mm: lateral,
        }
    }

    pub fn contains(&self, point: Vec3) -> bool {
        self.probe(point).inside
    }

    /// Objects whose centroid lies inside the frustum, ascending by axial
    /// distance, equidistant entries in canonical class order.
    pub fn select_targets(&self, objects: &[ObjectDetection]) -> TargetList {
        let mut targets: TargetList = objects
            .iter()
            .filter_map(|o| {
                let probe = self.probe(o.centroid);
                probe.inside.then(|| Target {
                    object: o.clone(),
                    axial_mm: probe.axial_mm,
                    lateral_mm: probe.lateral_mm,
                })
            })
            .collect();
        targets.sort_by(|a, b| {
            a.axial_mm
                .total_cmp(&b.axial_mm)
                .then(a.object.class.cmp(&b.object.class))
        });
        targets
    }
}

/// Gaze direction from head joints: the ear midpoint sits roughly behind the
/// nose, so the ray runs from the nose away from that midpoint.
pub fn gaze_ray(nose: Vec3, left_ear: Vec3, right_ear: Vec3) -> Result<(Vec3, Vec3), DomainError> {
    let midpoint = (left_ear + right_ear) * 0.5;
    let direction = (nose - midpoint)
        .normalized()
        .ok_or(DomainError::DegenerateGaze)?;
    Ok((nose, direction))
}
