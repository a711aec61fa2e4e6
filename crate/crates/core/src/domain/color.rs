use crate::error::DomainError;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The five block colors, in canonical order.
///
/// The canonical order `red < blue < green < purple < yellow` is the listing
/// order of the task blocks and is what every rendered form and tie-break in
/// the crate uses. The derived `Ord` follows declaration order on purpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockColor {
    Red,
    Blue,
    Green,
    Purple,
    Yellow,
}

impl BlockColor {
    pub const ALL: [BlockColor; 5] = [
        BlockColor::Red,
        BlockColor::Blue,
        BlockColor::Green,
        BlockColor::Purple,
        BlockColor::Yellow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BlockColor::Red => "red",
            BlockColor::Blue => "blue",
            BlockColor::Green => "green",
            BlockColor::Purple => "purple",
            BlockColor::Yellow => "yellow",
        }
    }

    pub fn parse(s: &str) -> Option<BlockColor> {
        match s {
            "red" => Some(BlockColor::Red),
            "blue" => Some(BlockColor::Blue),
            "green" => Some(BlockColor::Green),
            "purple" => Some(BlockColor::Purple),
            "yellow" => Some(BlockColor::Yellow),
            _ => None,
        }
    }

    /// Bit position used by `BlockSum`'s mask representation.
    pub(crate) fn bit(self) -> u8 {
        match self {
            BlockColor::Red => 0,
            BlockColor::Blue => 1,
            BlockColor::Green => 2,
            BlockColor::Purple => 3,
            BlockColor::Yellow => 4,
        }
    }

    /// The answer key for the task: the actual weight of each block.
    pub fn true_weight(self) -> WeightLiteral {
        let grams = match self {
            BlockColor::Red => 10,
            BlockColor::Blue => 10,
            BlockColor::Green => 20,
            BlockColor::Purple => 30,
            BlockColor::Yellow => 50,
        };
        WeightLiteral::new(grams).expect("answer key weights are valid")
    }
}

impl fmt::Display for BlockColor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A weight literal in grams, restricted to the task vocabulary
/// {10, 20, 30, 40, 50}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "i64")]
pub struct WeightLiteral(u32);

impl WeightLiteral {
    pub const ALL: [WeightLiteral; 5] = [
        WeightLiteral(10),
        WeightLiteral(20),
        WeightLiteral(30),
        WeightLiteral(40),
        WeightLiteral(50),
    ];

    pub fn new(grams: u32) -> Result<WeightLiteral, DomainError> {
        match grams {
            10 | 20 | 30 | 40 | 50 => Ok(WeightLiteral(grams)),
            other => Err(DomainError::InvalidWeight(other as i64)),
        }
    }

    pub fn grams(self) -> u32 {
        self.0
    }
}

impl fmt::Display for WeightLiteral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<i64> for WeightLiteral {
    type Error = DomainError;
    fn try_from(v: i64) -> Result<Self, Self::Error> {
        if !(0..=u32::MAX as i64).contains(&v) {
            return Err(DomainError::InvalidWeight(v));
        }
        WeightLiteral::new(v as u32)
    }
}

impl From<WeightLiteral> for i64 {
    fn from(w: WeightLiteral) -> i64 {
        w.0 as i64
    }
}
