use crate::domain::BlockColor;
use crate::error::DomainError;
use std::cmp::Ordering;
use std::fmt;

/// A non-empty set of distinct block colors, e.g. the `green + purple` side
/// of a proposition. Stored as a bitmask; iteration and rendering always use
/// canonical color order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockSum(u8);

impl BlockSum {
    pub fn new(colors: impl IntoIterator<Item = BlockColor>) -> Result<BlockSum, DomainError> {
        let mut mask = 0u8;
        for c in colors {
            mask |= 1 << c.bit();
        }
        if mask == 0 {
            Err(DomainError::EmptyBlockSum)
        } else {
            Ok(BlockSum(mask))
        }
    }

    pub fn singleton(color: BlockColor) -> BlockSum {
        BlockSum(1 << color.bit())
    }

    pub fn colors(&self) -> impl Iterator<Item = BlockColor> + '_ {
        BlockColor::ALL
            .iter()
            .copied()
            .filter(move |c| self.contains(*c))
    }

    pub fn contains(&self, color: BlockColor) -> bool {
        self.0 & (1 << color.bit()) != 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }

    pub fn is_singleton(&self) -> Option<BlockColor> {
        if self.len() == 1 {
            self.colors().next()
        } else {
            None
        }
    }

    pub fn is_disjoint(&self, other: &BlockSum) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(&self, other: &BlockSum) -> BlockSum {
        BlockSum(self.0 | other.0)
    }

    /// All 31 non-empty subsets of the five colors, in an order consistent
    /// with `Ord` on the masks being irrelevant: callers sort as needed.
    pub fn all_nonempty() -> impl Iterator<Item = BlockSum> {
        (1u8..32).map(BlockSum)
    }
}

// Lexicographic over the canonical color sequence, so {red} < {red,blue} <
// {blue}. This is the order "lexicographically smaller side left" refers to
// in proposition canonicalization. The mask's integer order would differ.
impl Ord for BlockSum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.colors().cmp(other.colors())
    }
}

impl PartialOrd for BlockSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BlockSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in self.colors() {
            if !first {
                f.write_str(" + ")?;
            }
            f.write_str(c.name())?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BlockColor::*;

    #[test]
    fn rejects_empty() {
        assert_eq!(BlockSum::new([]), Err(DomainError::EmptyBlockSum));
    }

    #[test]
    fn renders_in_canonical_order() {
        let s = BlockSum::new([Purple, Green]).unwrap();
        assert_eq!(s.to_string(), "green + purple");
        let s = BlockSum::new([Yellow, Red, Blue]).unwrap();
        assert_eq!(s.to_string(), "red + blue + yellow");
    }

    #[test]
    fn duplicates_collapse() {
        let s = BlockSum::new([Red, Red, Blue]).unwrap();
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn lexicographic_order() {
        let red = BlockSum::singleton(Red);
        let blue = BlockSum::singleton(Blue);
        let red_blue = BlockSum::new([Red, Blue]).unwrap();
        assert!(red < blue);
        assert!(red < red_blue);
        assert!(red_blue < blue);
    }

    #[test]
    fn disjointness() {
        let a = BlockSum::new([Red, Green]).unwrap();
        let b = BlockSum::new([Blue, Yellow]).unwrap();
        let c = BlockSum::new([Green]).unwrap();
        assert!(a.is_disjoint(&b));
        assert!(!a.is_disjoint(&c));
    }

    #[test]
    fn all_nonempty_has_31_entries() {
        assert_eq!(BlockSum::all_nonempty().count(), 31);
    }
}
