//! Corpus ingestion and the prefix-frequency index.
//!
//! The stemmer never looks at a word in isolation: every decision is driven
//! by how often each of the word's prefixes occurs across a corpus. This
//! module owns that corpus view. Text comes in either as ready-made
//! `word<TAB>count` rows ([`parse_corpus_tsv`]) or as raw text that gets
//! tokenized and counted here ([`entries_from_raw_text`]), and is compiled
//! into an immutable [`PrefixFrequencyIndex`].
//!
//! Counts are token counts: a word occurring 328 times contributes 328 to
//! every one of its prefixes, not 1.

use std::collections::BTreeMap;
use std::error::Error;
use std::fmt;

/// Lowercase a token without changing its length.
///
/// Each character is mapped through its simple (one-to-one) lowercase form;
/// characters whose full lowercasing would expand to several characters are
/// kept as they are. The result therefore always has the same number of
/// `char`s as the input, which keeps n-gram positions stable.
///
/// ```
/// use stemgram::corpus::normalize_token;
/// assert_eq!(normalize_token("Juggling"), "juggling");
/// assert_eq!(normalize_token("CAT"), "cat");
/// ```
pub fn normalize_token(token: &str) -> String {
    token
        .chars()
        .map(|c| {
            let mut lower = c.to_lowercase();
            match (lower.next(), lower.next()) {
                (Some(l), None) => l,
                // Multi-char lowercasing (e.g. 'İ') would shift positions.
                _ => c,
            }
        })
        .collect()
}

/// Split text into normalized word tokens.
///
/// A token is a maximal run of alphabetic characters (Unicode `Alphabetic`),
/// so digits, apostrophes and punctuation all act as separators.
///
/// ```
/// use stemgram::corpus::tokenize_text;
/// assert_eq!(tokenize_text("The cat, the CAT!"), vec!["the", "cat", "the", "cat"]);
/// assert_eq!(tokenize_text("it's"), vec!["it", "s"]);
/// ```
pub fn tokenize_text(text: &str) -> Vec<String> {
    text.split(|c: char| !c.is_alphabetic())
        .filter(|run| !run.is_empty())
        .map(normalize_token)
        .collect()
}

/// A single `word -> count` observation from a corpus.
///
/// The word is stored normalized. Construction rejects empty words, words
/// containing whitespace, and zero counts, so an entry that exists is always
/// safe to index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    word: String,
    count: u64,
}

impl CorpusEntry {
    pub fn new(word: &str, count: u64) -> Result<Self, CorpusError> {
        let word = normalize_token(word);
        if word.is_empty() {
            return Err(CorpusError::EmptyWord);
        }
        if word.chars().any(char::is_whitespace) {
            return Err(CorpusError::WhitespaceInWord(word));
        }
        if count == 0 {
            return Err(CorpusError::ZeroCount(word));
        }
        Ok(CorpusEntry { word, count })
    }

    pub fn word(&self) -> &str {
        &self.word
    }

    pub fn count(&self) -> u64 {
        self.count
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusError {
    EmptyWord,
    WhitespaceInWord(String),
    ZeroCount(String),
    /// A corpus TSV line that could not be turned into an entry. Lines are
    /// numbered from 1 and include comment and blank lines.
    MalformedLine {
        line: usize,
        message: String,
    },
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusError::EmptyWord => write!(f, "corpus entry has an empty word"),
            CorpusError::WhitespaceInWord(word) => {
                write!(f, "corpus word {word:?} contains whitespace")
            }
            CorpusError::ZeroCount(word) => {
                write!(f, "corpus word {word:?} has a zero count")
            }
            CorpusError::MalformedLine { line, message } => {
                write!(f, "corpus line {line}: {message}")
            }
        }
    }
}

impl Error for CorpusError {}

/// Parse `word<TAB>count` rows.
///
/// Lines that are empty or start with `#` are skipped. Every other line must
/// contain exactly one tab. Duplicate words are allowed; they are summed when
/// the entries are folded into an index.
pub fn parse_corpus_tsv(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut entries = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.strip_suffix('\r').unwrap_or(raw_line);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split('\t');
        let (word, count) = match (fields.next(), fields.next(), fields.next()) {
            (Some(word), Some(count), None) => (word, count),
            _ => {
                return Err(CorpusError::MalformedLine {
                    line: line_no,
                    message: "expected exactly one tab: word<TAB>count".to_string(),
                })
            }
        };
        let count: u64 = count.parse().map_err(|_| CorpusError::MalformedLine {
            line: line_no,
            message: format!("invalid count {count:?}"),
        })?;
        let entry = CorpusEntry::new(word, count).map_err(|e| CorpusError::MalformedLine {
            line: line_no,
            message: e.to_string(),
        })?;
        entries.push(entry);
    }
    Ok(entries)
}

/// Tokenize raw text and count token occurrences into corpus entries.
pub fn entries_from_raw_text(text: &str) -> Vec<CorpusEntry> {
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    for token in tokenize_text(text) {
        *counts.entry(token).or_insert(0) += 1;
    }
    counts
        .into_iter()
        .map(|(word, count)| CorpusEntry { word, count })
        .collect()
}

#[derive(Debug, Default, Clone)]
struct TrieNode {
    /// Total count of corpus tokens whose word passes through this prefix.
    count: u64,
    /// True when some corpus entry ends exactly here.
    terminal: bool,
    children: BTreeMap<char, TrieNode>,
}

/// Immutable prefix-count index over a corpus.
///
/// Built once from a batch of entries; queries then answer "how many corpus
/// tokens start with this prefix" in one trie walk. Because each word's count
/// feeds all of its prefixes, the count along any root-to-leaf path can never
/// increase with depth. The stemmer leans on that monotonicity.
///
/// Entries are normalized at construction, so queries are matched against
/// lowercase words. Query strings are used exactly as given; run them through
/// [`normalize_token`] first if they may carry case.
#[derive(Debug, Clone)]
pub struct PrefixFrequencyIndex {
    root: TrieNode,
    entries: usize,
}

impl PrefixFrequencyIndex {
    pub fn from_entries<I>(entries: I) -> Self
    where
        I: IntoIterator<Item = CorpusEntry>,
    {
        let mut root = TrieNode::default();
        let mut distinct = 0usize;
        for entry in entries {
            root.count += entry.count;
            let mut node = &mut root;
            for c in entry.word.chars() {
                node = node.children.entry(c).or_default();
                node.count += entry.count;
            }
            if !node.terminal {
                node.terminal = true;
                distinct += 1;
            }
        }
        PrefixFrequencyIndex {
            root,
            entries: distinct,
        }
    }

    /// Number of distinct words in the corpus.
    pub fn entry_count(&self) -> usize {
        self.entries
    }

    /// Total number of corpus tokens (sum of all entry counts).
    pub fn total_tokens(&self) -> u64 {
        self.root.count
    }

    fn node(&self, prefix: &str) -> Option<&TrieNode> {
        let mut node = &self.root;
        for c in prefix.chars() {
            node = node.children.get(&c)?;
        }
        Some(node)
    }

    /// Count of tokens whose word starts with `prefix`, with a floor applied:
    /// raw counts below `floor` are reported as 0. A floor of 0 returns the
    /// raw count. The empty prefix matches every token.
    pub fn prefix_frequency(&self, prefix: &str, floor: u64) -> u64 {
        let raw = self.node(prefix).map_or(0, |n| n.count);
        if raw >= floor {
            raw
        } else {
            0
        }
    }

    /// Raw prefix counts for every prefix of `word`, from length 1 to the
    /// full word, in one walk. Once a prefix is absent all longer counts
    /// are 0.
    pub fn prefix_counts(&self, word: &str) -> Vec<u64> {
        let mut counts = Vec::new();
        let mut node = Some(&self.root);
        for c in word.chars() {
            node = node.and_then(|n| n.children.get(&c));
            counts.push(node.map_or(0, |n| n.count));
        }
        counts
    }

    /// The `k` most frequent prefixes of exactly `len` characters, ordered by
    /// descending count and then lexicographically. Deterministic for a given
    /// corpus.
    pub fn top_prefixes(&self, len: usize, k: usize) -> Vec<(String, u64)> {
        if len == 0 || k == 0 {
            return Vec::new();
        }
        let mut found = Vec::new();
        let mut prefix = String::new();
        collect_at_depth(&self.root, len, &mut prefix, &mut found);
        found.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        found.truncate(k);
        found
    }
}

fn collect_at_depth(
    node: &TrieNode,
    remaining: usize,
    prefix: &mut String,
    out: &mut Vec<(String, u64)>,
) {
    if remaining == 0 {
        out.push((prefix.clone(), node.count));
        return;
    }
    for (c, child) in &node.children {
        prefix.push(*c);
        collect_at_depth(child, remaining - 1, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(word: &str, count: u64) -> CorpusEntry {
        CorpusEntry::new(word, count).unwrap()
    }

    #[test]
    fn normalize_lowercases_without_changing_length() {
        assert_eq!(normalize_token("Juggling"), "juggling");
        assert_eq!(normalize_token("CAT"), "cat");
        assert_eq!(normalize_token("ß"), "ß");
        let turkish = "İstanbul";
        let normalized = normalize_token(turkish);
        assert_eq!(normalized.chars().count(), turkish.chars().count());
    }

    #[test]
    fn tokenize_splits_on_non_alphabetic() {
        assert_eq!(
            tokenize_text("The cat, the CAT!"),
            vec!["the", "cat", "the", "cat"]
        );
        assert_eq!(tokenize_text("it's"), vec!["it", "s"]);
        assert_eq!(tokenize_text("a1b2c"), vec!["a", "b", "c"]);
        assert!(tokenize_text("123 .. !").is_empty());
    }

    #[test]
    fn entry_construction_validates() {
        assert_eq!(entry("Cat", 3).word(), "cat");
        assert_eq!(CorpusEntry::new("", 1), Err(CorpusError::EmptyWord));
        assert!(matches!(
            CorpusEntry::new("two words", 1),
            Err(CorpusError::WhitespaceInWord(_))
        ));
        assert!(matches!(
            CorpusEntry::new("cat", 0),
            Err(CorpusError::ZeroCount(_))
        ));
    }

    #[test]
    fn tsv_parser_skips_comments_and_reports_lines() {
        let parsed = parse_corpus_tsv("# header\ncat\t3\n\ndog\t5\n").unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0].word(), "cat");
        assert_eq!(parsed[1].count(), 5);

        let err = parse_corpus_tsv("cat\t3\ndog five\n").unwrap_err();
        assert!(matches!(err, CorpusError::MalformedLine { line: 2, .. }));

        let err = parse_corpus_tsv("# c\ncat\tx\n").unwrap_err();
        match err {
            CorpusError::MalformedLine { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("invalid count"));
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn raw_text_counts_tokens() {
        let entries = entries_from_raw_text("the cat the CAT the dog");
        let index = PrefixFrequencyIndex::from_entries(entries);
        assert_eq!(index.entry_count(), 3);
        assert_eq!(index.total_tokens(), 6);
        assert_eq!(index.prefix_frequency("cat", 0), 2);
        assert_eq!(index.prefix_frequency("the", 0), 3);
    }

    #[test]
    fn duplicate_entries_are_summed() {
        let index = PrefixFrequencyIndex::from_entries(vec![entry("cat", 2), entry("Cat", 3)]);
        assert_eq!(index.entry_count(), 1);
        assert_eq!(index.prefix_frequency("cat", 0), 5);
        assert_eq!(index.prefix_frequency("ca", 0), 5);
    }

    #[test]
    fn prefix_counts_walk_matches_point_queries() {
        let index = PrefixFrequencyIndex::from_entries(vec![
            entry("juggling", 328),
            entry("juggler", 401),
            entry("jugged", 186),
        ]);
        assert_eq!(index.total_tokens(), 915);
        assert_eq!(
            index.prefix_counts("juggling"),
            vec![915, 915, 915, 915, 729, 328, 328, 328]
        );
        assert_eq!(index.prefix_frequency("jugg", 0), 915);
        assert_eq!(index.prefix_frequency("juggl", 0), 729);
        assert_eq!(index.prefix_frequency("", 0), 915);
        assert_eq!(index.prefix_frequency("zebra", 0), 0);
    }

    #[test]
    fn floor_zeroes_small_counts() {
        let index = PrefixFrequencyIndex::from_entries(vec![entry("cat", 5)]);
        assert_eq!(index.prefix_frequency("cat", 5), 5);
        assert_eq!(index.prefix_frequency("cat", 6), 0);
    }

    #[test]
    fn top_prefixes_order_is_deterministic() {
        let index = PrefixFrequencyIndex::from_entries(vec![
            entry("alpha", 5),
            entry("altar", 5),
            entry("beta", 9),
        ]);
        assert_eq!(
            index.top_prefixes(4, 10),
            vec![
                ("beta".to_string(), 9),
                ("alph".to_string(), 5),
                ("alta".to_string(), 5),
            ]
        );
        assert_eq!(index.top_prefixes(4, 1), vec![("beta".to_string(), 9)]);
        assert!(index.top_prefixes(0, 3).is_empty());
    }
}
