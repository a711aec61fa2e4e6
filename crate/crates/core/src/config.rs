//! Run configuration: frustum dimensions, extraction thresholds, lexicon
//! overrides, and the substitution condition.

use crate::error::SessionError;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::Path;

/// Pointing-frustum dimensions in millimeters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrustumConfig {
    pub near_radius_mm: f64,
    pub far_radius_mm: f64,
    pub length_mm: f64,
}

impl Default for FrustumConfig {
    fn default() -> Self {
        FrustumConfig {
            near_radius_mm: 40.0,
            far_radius_mm: 70.0,
            length_mm: 3000.0,
        }
    }
}

/// Which input channel, if any, is replaced by its ground-truth annotations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum SubstitutionCondition {
    #[default]
    None,
    GoldUtterances,
    GoldGestures,
    GoldObjects,
}

impl SubstitutionCondition {
    pub fn name(self) -> &'static str {
        match self {
            SubstitutionCondition::None => "none",
            SubstitutionCondition::GoldUtterances => "gold-utterances",
            SubstitutionCondition::GoldGestures => "gold-gestures",
            SubstitutionCondition::GoldObjects => "gold-objects",
        }
    }
}

impl fmt::Display for SubstitutionCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Demonstrative lexicon used by dense paraphrasing; override to adapt the
/// surface forms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DemonstrativeLexicon {
    pub singular: Vec<String>,
    pub plural: Vec<String>,
}

impl Default for DemonstrativeLexicon {
    fn default() -> Self {
        DemonstrativeLexicon {
            singular: ["this one", "that one", "this", "that", "it"]
                .map(String::from)
                .to_vec(),
            plural: ["these", "those"].map(String::from).to_vec(),
        }
    }
}

/// Full run configuration with the pinned defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunConfig {
    pub frustum: FrustumConfig,
    /// Cosine-similarity acceptance threshold for backoff extraction.
    pub cosine_threshold: f64,
    /// Candidate count above which rule extraction backs off to cosine.
    pub prune_threshold: usize,
    pub demonstratives: DemonstrativeLexicon,
    pub condition: SubstitutionCondition,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            frustum: FrustumConfig::default(),
            cosine_threshold: 0.5,
            prune_threshold: 137,
            demonstratives: DemonstrativeLexicon::default(),
            condition: SubstitutionCondition::None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), SessionError> {
        if self.frustum.near_radius_mm <= 0.0
            || self.frustum.far_radius_mm < self.frustum.near_radius_mm
            || self.frustum.length_mm <= 0.0
        {
            return Err(SessionError::Config(
                "frustum radii and length must be positive with far >= near".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.cosine_threshold) {
            return Err(SessionError::Config(
                "cosine threshold must lie in [0, 1]".into(),
            ));
        }
        if self.prune_threshold == 0 {
            return Err(SessionError::Config(
                "prune threshold must be positive".into(),
            ));
        }
        if self.demonstratives.singular.is_empty() && self.demonstratives.plural.is_empty() {
            return Err(SessionError::Config(
                "demonstrative lexicon must not be empty".into(),
            ));
        }
        Ok(())
    }

    pub fn load(path: &Path) -> Result<RunConfig, SessionError> {
        let text = std::fs::read_to_string(path)?;
        let config: RunConfig = serde_json::from_str(&text)
            .map_err(|e| SessionError::Config(format!("{}: {e}", path.display())))?;
        config.validate()?;
        Ok(config)
    }
}
