use crate::domain::{BlockColor, Proposition};
use crate::error::DomainError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// An open question under discussion: "what is the weight of `subject`?"
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct QUD {
    pub subject: BlockColor,
}

impl QUD {
    pub fn new(subject: BlockColor) -> QUD {
        QUD { subject }
    }
}

impl fmt::Display for QUD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "weight({})", self.subject)
    }
}

/// Epistemic stance an utterance takes toward propositional content.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum MoveLabel {
    Statement,
    Accept,
    Doubt,
    None,
}

impl MoveLabel {
    pub fn name(self) -> &'static str {
        match self {
            MoveLabel::Statement => "STATEMENT",
            MoveLabel::Accept => "ACCEPT",
            MoveLabel::Doubt => "DOUBT",
            MoveLabel::None => "NONE",
        }
    }
}

impl fmt::Display for MoveLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A classified epistemic move with the propositions it carries.
/// `NONE` always carries an empty list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpistemicMove {
    pub label: MoveLabel,
    pub props: Vec<Proposition>,
}

impl EpistemicMove {
    pub fn new(label: MoveLabel, props: Vec<Proposition>) -> Result<EpistemicMove, DomainError> {
        if label == MoveLabel::None && !props.is_empty() {
            return Err(DomainError::NonePropsNotEmpty);
        }
        Ok(EpistemicMove { label, props })
    }

    pub fn statement(props: Vec<Proposition>) -> EpistemicMove {
        EpistemicMove {
            label: MoveLabel::Statement,
            props,
        }
    }

    pub fn accept(props: Vec<Proposition>) -> EpistemicMove {
        EpistemicMove {
            label: MoveLabel::Accept,
            props,
        }
    }

    pub fn doubt(props: Vec<Proposition>) -> EpistemicMove {
        EpistemicMove {
            label: MoveLabel::Doubt,
            props,
        }
    }

    pub fn none() -> EpistemicMove {
        EpistemicMove {
            label: MoveLabel::None,
            props: Vec::new(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn none_rejects_props() {
        let p = Proposition::parse("red = 10").unwrap();
        assert!(EpistemicMove::new(MoveLabel::None, vec![p]).is_err());
        assert!(EpistemicMove::new(MoveLabel::None, vec![]).is_ok());
    }

    #[test]
    fn label_serde_is_uppercase() {
        assert_eq!(
            serde_json::to_string(&MoveLabel::Statement).unwrap(),
            "\"STATEMENT\""
        );
        let l: MoveLabel = serde_json::from_str("\"DOUBT\"").unwrap();
        assert_eq!(l, MoveLabel::Doubt);
    }
}
