use crate::domain::{BlockColor, BlockSum, WeightLiteral};
use crate::error::DomainError;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Relation between the two sides of a proposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Eq,
    Ne,
    Lt,
    Gt,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ne => "!=",
            Relation::Lt => "<",
            Relation::Gt => ">",
        }
    }

    fn parse(s: &str) -> Option<Relation> {
        match s {
            "=" => Some(Relation::Eq),
            "!=" => Some(Relation::Ne),
            "<" => Some(Relation::Lt),
            ">" => Some(Relation::Gt),
            _ => None,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Right-hand side of a proposition: a weight literal or a disjoint block sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rhs {
    Weight(WeightLiteral),
    Blocks(BlockSum),
}

impl fmt::Display for Rhs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rhs::Weight(w) => w.fmt(f),
            Rhs::Blocks(s) => s.fmt(f),
        }
    }
}

/// A canonical relation between a block sum and either a weight literal or a
/// disjoint block sum. The unit of common-ground content.
///
/// Canonical form, enforced by every constructor:
/// - for `=` and `!=` between two sums, the lexicographically smaller sum
///   (canonical color order) is on the left;
/// - `>` between two sums is rewritten as `<` with the sides swapped;
/// - `>` against a weight literal is kept, since a weight may never appear
///   on the left.
///
/// Equality of propositions is therefore equality of canonical forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Proposition {
    lhs: BlockSum,
    rel: Relation,
    rhs: Rhs,
}

impl Proposition {
    pub fn new(lhs: BlockSum, rel: Relation, rhs: Rhs) -> Result<Proposition, DomainError> {
        match rhs {
            Rhs::Weight(_) => Ok(Proposition { lhs, rel, rhs }),
            Rhs::Blocks(rhs_sum) => {
                if !lhs.is_disjoint(&rhs_sum) {
                    return Err(DomainError::OverlappingSides);
                }
                let (lhs, rel, rhs_sum) = match rel {
                    Relation::Eq | Relation::Ne => {
                        if rhs_sum < lhs {
                            (rhs_sum, rel, lhs)
                        } else {
                            (lhs, rel, rhs_sum)
                        }
                    }
                    Relation::Gt => (rhs_sum, Relation::Lt, lhs),
                    Relation::Lt => (lhs, rel, rhs_sum),
                };
                Ok(Proposition {
                    lhs,
                    rel,
                    rhs: Rhs::Blocks(rhs_sum),
                })
            }
        }
    }

    /// Convenience for the common `color = weight` form.
    pub fn weight_fact(color: BlockColor, grams: u32) -> Result<Proposition, DomainError> {
        Proposition::new(
            BlockSum::singleton(color),
            Relation::Eq,
            Rhs::Weight(WeightLiteral::new(grams)?),
        )
    }

    pub fn lhs(&self) -> BlockSum {
        self.lhs
    }

    pub fn rel(&self) -> Relation {
        self.rel
    }

    pub fn rhs(&self) -> Rhs {
        self.rhs
    }

    /// All colors mentioned on either side.
    pub fn block_set(&self) -> BlockSum {
        match self.rhs {
            Rhs::Weight(_) => self.lhs,
            Rhs::Blocks(s) => self.lhs.union(&s),
        }
    }

    pub fn weight(&self) -> Option<WeightLiteral> {
        match self.rhs {
            Rhs::Weight(w) => Some(w),
            Rhs::Blocks(_) => None,
        }
    }

    /// Deterministic text form; grammar:
    /// `sum " " rel " " (weight | sum)` with `sum ::= color (" + " color)*`.
    pub fn render(&self) -> String {
        format!("{} {} {}", self.lhs, self.rel, self.rhs)
    }

    /// Parse the rendered grammar back into a canonical proposition.
    pub fn parse(text: &str) -> Result<Proposition, DomainError> {
        let malformed = |reason: &str| DomainError::MalformedProposition {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(malformed("empty"));
        }
        let mut pos = 0;
        let lhs = parse_sum(&tokens, &mut pos, text, true)?;
        let rel_tok = tokens.get(pos).ok_or_else(|| malformed("missing relation"))?;
        let rel = Relation::parse(rel_tok)
            .ok_or_else(|| DomainError::UnknownToken(rel_tok.to_string()))?;
        pos += 1;
        let rhs_tok = tokens
            .get(pos)
            .ok_or_else(|| malformed("missing right-hand side"))?;
        let rhs = if rhs_tok.chars().all(|c| c.is_ascii_digit()) {
            pos += 1;
            let grams: i64 = rhs_tok.parse().map_err(|_| malformed("bad number"))?;
            Rhs::Weight(WeightLiteral::try_from(grams)?)
        } else {
            Rhs::Blocks(parse_sum(&tokens, &mut pos, text, false)?)
        };
        if pos != tokens.len() {
            return Err(malformed("trailing tokens"));
        }
        Proposition::new(lhs, rel, rhs)
    }
}

fn parse_sum(
    tokens: &[&str],
    pos: &mut usize,
    text: &str,
    is_lhs: bool,
) -> Result<BlockSum, DomainError> {
    let malformed = |reason: &str| DomainError::MalformedProposition {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let mut colors: Vec<BlockColor> = Vec::new();
    loop {
        let tok = tokens.get(*pos).ok_or_else(|| malformed("missing color"))?;
        if is_lhs && colors.is_empty() && tok.chars().all(|c| c.is_ascii_digit()) {
            return Err(DomainError::WeightOnLhs);
        }
        let color =
            BlockColor::parse(tok).ok_or_else(|| DomainError::UnknownToken(tok.to_string()))?;
        if colors.contains(&color) {
            return Err(DomainError::DuplicateColor(color.name().to_string()));
        }
        colors.push(color);
        *pos += 1;
        if tokens.get(*pos) == Some(&"+") {
            *pos += 1;
        } else {
            break;
        }
    }
    BlockSum::new(colors)
}

impl fmt::Display for Proposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.lhs, self.rel, self.rhs)
    }
}

impl FromStr for Proposition {
    type Err = DomainError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Proposition::parse(s)
    }
}

impl TryFrom<String> for Proposition {
    type Error = DomainError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        Proposition::parse(&s)
    }
}

impl From<Proposition> for String {
    fn from(p: Proposition) -> String {
        p.render()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BlockColor::*;

    fn sum(colors: &[BlockColor]) -> BlockSum {
        BlockSum::new(colors.iter().copied()).unwrap()
    }

    #[test]
    fn parse_weight_relation() {
        let p = Proposition::parse("red = 10").unwrap();
        assert_eq!(p.lhs(), sum(&[Red]));
        assert_eq!(p.rel(), Relation::Eq);
        assert_eq!(p.rhs(), Rhs::Weight(WeightLiteral::new(10).unwrap()));
        assert_eq!(p.render(), "red = 10");
    }

    #[test]
    fn parse_sum_relation() {
        let p = Proposition::parse("red < blue + green").unwrap();
        assert_eq!(p.lhs(), sum(&[Red]));
        assert_eq!(p.rel(), Relation::Lt);
        assert_eq!(p.rhs(), Rhs::Blocks(sum(&[Blue, Green])));
    }

    #[test]
    fn symmetric_relations_canonicalize() {
        // blue = red puts the lexicographically smaller sum on the left
        let p = Proposition::parse("blue = red").unwrap();
        assert_eq!(p.render(), "red = blue");
        let q = Proposition::parse("red = blue").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn greater_than_between_sums_becomes_less_than() {
        let p = Proposition::parse("red > blue").unwrap();
        assert_eq!(p.render(), "blue < red");
        // against a weight literal, > is kept
        let q = Proposition::parse("red > 20").unwrap();
        assert_eq!(q.render(), "red > 20");
    }

    #[test]
    fn render_multi_block_sum() {
        let p = Proposition::new(
            sum(&[Green, Purple]),
            Relation::Eq,
            Rhs::Weight(WeightLiteral::new(50).unwrap()),
        )
        .unwrap();
        assert_eq!(p.render(), "green + purple = 50");
    }

    #[test]
    fn render_ne() {
        let p = Proposition::new(sum(&[Red]), Relation::Ne, Rhs::Blocks(sum(&[Blue]))).unwrap();
        assert_eq!(p.render(), "red != blue");
    }

    #[test]
    fn rejects_weight_on_lhs() {
        assert_eq!(
            Proposition::parse("10 = red"),
            Err(DomainError::WeightOnLhs)
        );
    }

    #[test]
    fn rejects_overlap() {
        assert_eq!(
            Proposition::parse("red = red + blue"),
            Err(DomainError::DuplicateColor("red".into()))
        );
        assert_eq!(
            Proposition::parse("red + blue = blue + green"),
            Err(DomainError::OverlappingSides)
        );
    }

    #[test]
    fn rejects_malformed() {
        assert!(Proposition::parse("red =").is_err());
        assert!(Proposition::parse("red == 10").is_err());
        assert!(Proposition::parse("red = 15").is_err());
        assert!(Proposition::parse("red = 10 blue").is_err());
        assert!(Proposition::parse("crimson = 10").is_err());
        assert!(Proposition::parse("").is_err());
    }

    #[test]
    fn roundtrip_through_serde() {
        let p = Proposition::parse("green + purple = yellow").unwrap();
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "\"green + purple = yellow\"");
        let back: Proposition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }
}
