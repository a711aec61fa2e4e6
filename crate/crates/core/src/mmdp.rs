//! Multimodal dense paraphrasing: rewrites demonstrative tokens using the
//! referent queue assembled from deixis target lists that temporally overlap
//! the utterance.

use crate::config::DemonstrativeLexicon;
use crate::domain::BlockColor;
use crate::geometry::TargetList;
use std::ops::Range;

/// Grammatical number of a demonstrative surface form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GrammaticalNumber {
    Singular,
    Plural,
}

/// One demonstrative found in an utterance.
#[derive(Debug, Clone, PartialEq)]
pub struct DemonstrativeToken {
    pub surface: String,
    pub number: GrammaticalNumber,
    /// Byte span in the original text.
    pub span: Range<usize>,
}

/// Candidate referents for one utterance: colors in consumption order.
///
/// Built from all deixis events overlapping the utterance interval, ordered
/// by event start time and, within each event, by the target list's axial
/// order. Duplicates keep their first occurrence.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReferentQueue(Vec<BlockColor>);

impl ReferentQueue {
    pub fn new(colors: Vec<BlockColor>) -> ReferentQueue {
        let mut seen = Vec::new();
        for c in colors {
            if !seen.contains(&c) {
                seen.push(c);
            }
        }
        ReferentQueue(seen)
    }

    pub fn colors(&self) -> &[BlockColor] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }
}

/// A deixis event's time span with its resolved target list.
#[derive(Debug, Clone, PartialEq)]
pub struct TimedTargets {
    pub start_ms: u64,
    pub end_ms: u64,
    pub targets: TargetList,
}

/// Closed-interval overlap; touching endpoints count.
pub fn intervals_overlap(a_start: u64, a_end: u64, b_start: u64, b_end: u64) -> bool {
    a_start <= b_end && b_start <= a_end
}

/// Assemble the referent queue for an utterance span from deixis target
/// lists. `events` must be in arrival order; ties on start time keep it.
pub fn build_referent_queue(
    utterance_start_ms: u64,
    utterance_end_ms: u64,
    events: &[TimedTargets],
) -> ReferentQueue {
    let mut overlapping: Vec<&TimedTargets> = events
        .iter()
        .filter(|e| intervals_overlap(e.start_ms, e.end_ms, utterance_start_ms, utterance_end_ms))
        .collect();
    overlapping.sort_by_key(|e| e.start_ms);
    let colors = overlapping
        .iter()
        .flat_map(|e| e.targets.iter())
        .filter_map(|t| t.object.class.block_color())
        .collect();
    ReferentQueue::new(colors)
}

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric()
}

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Case-insensitive match of `entry` against `text` starting at byte `at`.
/// Returns the end byte index on success.
fn match_entry_at(text: &str, at: usize, entry: &str) -> Option<usize> {
    let mut text_iter = text[at..].char_indices();
    for ec in entry.chars() {
        let (_, tc) = text_iter.next()?;
        if !tc.eq_ignore_ascii_case(&ec) {
            return None;
        }
    }
    let end = at + text_iter
        .next()
        .map(|(i, _)| i)
        .unwrap_or(text.len() - at);
    Some(end)
}

/// Find demonstratives left to right, longest lexicon entry first,
/// non-overlapping, case-insensitive, on word boundaries. Contractions keep
/// their suffix: in "that's" only "that" is matched. A multi-word entry
/// ending in a separate word is not taken when that word is itself
/// contracted, so "this one's" matches "this", keeping "one's".
pub fn find_demonstratives(
    text: &str,
    lexicon: &DemonstrativeLexicon,
) -> Vec<DemonstrativeToken> {
    let mut entries: Vec<(&str, GrammaticalNumber)> = lexicon
        .singular
        .iter()
        .map(|e| (e.as_str(), GrammaticalNumber::Singular))
        .chain(
            lexicon
                .plural
                .iter()
                .map(|e| (e.as_str(), GrammaticalNumber::Plural)),
        )
        .collect();
    entries.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));

    let mut tokens = Vec::new();
    let mut prev_char: Option<char> = None;
    let mut i = 0;
    while i < text.len() {
        let c = match text[i..].chars().next() {
            Some(c) => c,
            None => break,
        };
        let at_word_start = !prev_char.map(is_word_char).unwrap_or(false) && is_word_char(c);
        if at_word_start {
            let mut matched = None;
            for (entry, number) in &entries {
                if let Some(end) = match_entry_at(text, i, entry) {
                    let next = text[end..].chars().next();
                    let boundary_ok = !next.map(is_word_char).unwrap_or(false);
                    let multiword = entry.contains(' ');
                    let contracted_tail = multiword && next.map(is_apostrophe).unwrap_or(false);
                    if boundary_ok && !contracted_tail {
                        matched = Some((end, *number));
                        break;
                    }
                }
            }
            if let Some((end, number)) = matched {
                tokens.push(DemonstrativeToken {
                    surface: text[i..end].to_string(),
                    number,
                    span: i..end,
                });
                prev_char = text[..end].chars().next_back();
                i = end;
                continue;
            }
        }
        prev_char = Some(c);
        i += c.len_utf8();
    }
    tokens
}

/// Rewrite demonstratives against the referent queue.
///
/// Each singular demonstrative consumes the next unconsumed referent and
/// becomes `[<color> block]`; a plural demonstrative consumes all remaining
/// referents and becomes `[<c1> block, <c2> block, ...]`. Demonstratives with
/// no referent left are untouched, as is all other text.
pub fn dense_paraphrase(
    text: &str,
    queue: &ReferentQueue,
    lexicon: &DemonstrativeLexicon,
) -> String {
    let tokens = find_demonstratives(text, lexicon);
    let mut out = String::with_capacity(text.len());
    let mut cursor = 0;
    let mut next_referent = 0;
    let colors = queue.colors();
    for tok in tokens {
        if next_referent >= colors.len() {
            break;
        }
        let replacement = match tok.number {
            GrammaticalNumber::Singular => {
                let color = colors[next_referent];
                next_referent += 1;
                format!("[{} block]", color)
            }
            GrammaticalNumber::Plural => {
                let rest: Vec<String> = colors[next_referent..]
                    .iter()
                    .map(|c| format!("{c} block"))
                    .collect();
                next_referent = colors.len();
                format!("[{}]", rest.join(", "))
            }
        };
        out.push_str(&text[cursor..tok.span.start]);
        out.push_str(&replacement);
        cursor = tok.span.end;
    }
    out.push_str(&text[cursor..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn lex() -> DemonstrativeLexicon {
        DemonstrativeLexicon::default()
    }

    fn queue(colors: &[BlockColor]) -> ReferentQueue {
        ReferentQueue::new(colors.to_vec())
    }

    #[test]
    fn finds_contraction_demonstrative() {
        let toks = find_demonstratives("So, that's more than 20", &lex());
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].surface, "that");
        assert_eq!(toks[0].number, GrammaticalNumber::Singular);
    }

    #[test]
    fn finds_plural() {
        let toks = find_demonstratives("So, these are 50 on here?", &lex());
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].surface, "these");
        assert_eq!(toks[0].number, GrammaticalNumber::Plural);
    }

    #[test]
    fn no_lexicon_hit() {
        assert!(find_demonstratives("the red block is heavy", &lex()).is_empty());
    }

    #[test]
    fn word_boundaries_respected() {
        // "it" must not match inside "with" or "item"
        assert!(find_demonstratives("with items", &lex()).is_empty());
        let toks = find_demonstratives("with it.", &lex());
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].surface, "it");
    }

    #[test]
    fn this_one_matches_whole_phrase_when_uncontracted() {
        let toks = find_demonstratives("is this one heavier", &lex());
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].surface, "this one");
    }

    #[test]
    fn contracted_one_keeps_one() {
        let toks = find_demonstratives("I guess this one's 10", &lex());
        assert_eq!(toks.len(), 1);
        assert_eq!(toks[0].surface, "this");
    }

    #[test]
    fn paraphrase_table_row_one() {
        use BlockColor::Purple;
        let out = dense_paraphrase("So, that's more than 20.", &queue(&[Purple]), &lex());
        assert_eq!(out, "So, [purple block]'s more than 20.");
    }

    #[test]
    fn paraphrase_table_row_two() {
        use BlockColor::{Green, Red};
        let out = dense_paraphrase(
            "So that's a 10 and that's a 20 right there?",
            &queue(&[Red, Green]),
            &lex(),
        );
        assert_eq!(out, "So [red block]'s a 10 and [green block]'s a 20 right there?");
    }

    #[test]
    fn paraphrase_table_row_three() {
        use BlockColor::{Green, Purple};
        let out = dense_paraphrase(
            "So, these are 50 on here?",
            &queue(&[Green, Purple]),
            &lex(),
        );
        assert_eq!(out, "So, [green block, purple block] are 50 on here?");
    }

    #[test]
    fn paraphrase_it() {
        use BlockColor::Green;
        let out = dense_paraphrase(
            "now the first go through it bounced twice",
            &queue(&[Green]),
            &lex(),
        );
        assert_eq!(out, "now the first go through [green block] bounced twice");
    }

    #[test]
    fn paraphrase_demo_contraction() {
        use BlockColor::Red;
        let out = dense_paraphrase("okay, I guess this one's 10", &queue(&[Red]), &lex());
        assert_eq!(out, "okay, I guess [red block] one's 10");
    }

    #[test]
    fn empty_queue_is_identity() {
        let text = "So, that's more than 20.";
        assert_eq!(dense_paraphrase(text, &queue(&[]), &lex()), text);
    }

    #[test]
    fn exhausted_queue_leaves_later_demonstratives() {
        use BlockColor::Red;
        let out = dense_paraphrase("that and that", &queue(&[Red]), &lex());
        assert_eq!(out, "[red block] and that");
    }

    #[test]
    fn case_insensitive_match() {
        use BlockColor::Blue;
        let out = dense_paraphrase("That is heavy", &queue(&[Blue]), &lex());
        assert_eq!(out, "[blue block] is heavy");
    }

    #[test]
    fn queue_building_orders_by_start_then_axial() {
        use crate::domain::{ObjectClass, ObjectDetection};
        use crate::geometry::Target;
        use crate::math::Vec3;
        let target = |class: ObjectClass, axial: f64| Target {
            object: ObjectDetection::at_point(0, class, Vec3::new(0.0, 0.0, axial), 10.0),
            axial_mm: axial,
            lateral_mm: 0.0,
        };
        let events = vec![
            TimedTargets {
                start_ms: 200,
                end_ms: 400,
                targets: vec![target(ObjectClass::Green, 500.0)],
            },
            TimedTargets {
                start_ms: 100,
                end_ms: 300,
                targets: vec![
                    target(ObjectClass::Purple, 300.0),
                    target(ObjectClass::Yellow, 700.0),
                ],
            },
            // outside the utterance interval
            TimedTargets {
                start_ms: 900,
                end_ms: 950,
                targets: vec![target(ObjectClass::Red, 100.0)],
            },
        ];
        let q = build_referent_queue(150, 600, &events);
        assert_eq!(
            q.colors(),
            &[BlockColor::Purple, BlockColor::Yellow, BlockColor::Green]
        );
    }

    #[test]
    fn queue_touching_interval_counts_and_dedup_keeps_first() {
        use crate::domain::{ObjectClass, ObjectDetection};
        use crate::geometry::Target;
        use crate::math::Vec3;
        let target = |class: ObjectClass, axial: f64| Target {
            object: ObjectDetection::at_point(0, class, Vec3::new(0.0, 0.0, axial), 10.0),
            axial_mm: axial,
            lateral_mm: 0.0,
        };
        let events = vec![
            TimedTargets {
                start_ms: 0,
                end_ms: 100,
                targets: vec![target(ObjectClass::Red, 400.0)],
            },
            TimedTargets {
                start_ms: 150,
                end_ms: 200,
                targets: vec![target(ObjectClass::Red, 300.0), target(ObjectClass::Blue, 600.0)],
            },
        ];
        // utterance starts exactly where the first event ends
        let q = build_referent_queue(100, 300, &events);
        assert_eq!(q.colors(), &[BlockColor::Red, BlockColor::Blue]);
    }

    fn arb_text() -> impl Strategy<Value = String> {
        let word = prop_oneof![
            Just("this".to_string()),
            Just("that".to_string()),
            Just("these".to_string()),
            Just("those".to_string()),
            Just("it".to_string()),
            Just("one".to_string()),
            Just("block".to_string()),
            Just("red".to_string()),
            Just("is".to_string()),
            Just("10".to_string()),
            Just("that's".to_string()),
            Just("so,".to_string()),
        ];
        proptest::collection::vec(word, 0..12).prop_map(|ws| ws.join(" "))
    }

    fn arb_queue() -> impl Strategy<Value = ReferentQueue> {
        proptest::collection::vec(
            prop_oneof![
                Just(BlockColor::Red),
                Just(BlockColor::Blue),
                Just(BlockColor::Green),
                Just(BlockColor::Purple),
                Just(BlockColor::Yellow),
            ],
            0..5,
        )
        .prop_map(ReferentQueue::new)
    }

    proptest! {
        #[test]
        fn prop_empty_queue_identity(text in arb_text()) {
            prop_assert_eq!(dense_paraphrase(&text, &ReferentQueue::default(), &lex()), text);
        }

        #[test]
        fn prop_locality_outside_spans(text in arb_text(), q in arb_queue()) {
            // characters outside demonstrative spans survive byte for byte
            let tokens = find_demonstratives(&text, &lex());
            let out = dense_paraphrase(&text, &q, &lex());
            let mut stripped_in = text.clone();
            for tok in tokens.iter().rev() {
                stripped_in.replace_range(tok.span.clone(), "\u{0}");
            }
            // every non-replaced segment of the input appears in order in the output
            let mut cursor = 0usize;
            for segment in stripped_in.split('\u{0}') {
                if segment.is_empty() { continue; }
                let found = out[cursor..].find(segment);
                prop_assert!(found.is_some());
                cursor += found.unwrap() + segment.len();
            }
        }

        #[test]
        fn prop_conservation(text in arb_text(), q in arb_queue()) {
            let out = dense_paraphrase(&text, &q, &lex());
            let consumed = out.matches(" block").count();
            prop_assert!(consumed <= q.len());
        }

        #[test]
        fn prop_idempotent_on_output(text in arb_text(), q in arb_queue()) {
            // once rewritten, a second pass with a fully consumed queue is a no-op
            let out = dense_paraphrase(&text, &q, &lex());
            let again = dense_paraphrase(&out, &ReferentQueue::default(), &lex());
            prop_assert_eq!(again, out);
        }
    }
}
