//! Paired evaluation of two stemmers.
//!
//! The toolkit compares stemmers by how far they strip: for each word the
//! Levenshtein distance from the word to its stem is the amount of
//! stripping, and two stemmers are compared on the paired distances over a
//! shared word sample. The [`wilcoxon`] submodule tests whether the paired
//! differences are centred on zero; [`report`] bundles everything into a
//! serializable document.
//!
//! Word/stem pairs travel in TSV rows of the form
//! `word<TAB>stem_a<TAB>stem_b`, optionally followed by the expected
//! distances for both stems. When the expected columns are present they can
//! be checked against recomputation with [`validate_expected`].

pub mod report;
pub mod wilcoxon;

use std::error::Error;
use std::fmt;

use crate::corpus::normalize_token;

/// Unit-cost edit distance (insert, delete, substitute) over characters.
///
/// ```
/// use stemgram::evaluate::levenshtein;
/// assert_eq!(levenshtein("kitten", "sitting"), 3);
/// assert_eq!(levenshtein("juggling", "juggl"), 3);
/// assert_eq!(levenshtein("", "abc"), 3);
/// ```
pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    // Two-row dynamic program; prev holds the distances for the previous
    // prefix of `a`.
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0usize; b.len() + 1];
    for (i, ca) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, cb) in b.iter().enumerate() {
            let cost = usize::from(ca != cb);
            cur[j + 1] = (prev[j + 1] + 1).min(cur[j] + 1).min(prev[j] + cost);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// A word with the stems two different stemmers produced for it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemPair {
    pub word: String,
    pub stem_a: String,
    pub stem_b: String,
}

impl StemPair {
    pub fn new(word: &str, stem_a: &str, stem_b: &str) -> Self {
        StemPair {
            word: word.to_string(),
            stem_a: stem_a.to_string(),
            stem_b: stem_b.to_string(),
        }
    }
}

/// Stripping distances for one word, after normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceRecord {
    pub word: String,
    pub ld_a: usize,
    pub ld_b: usize,
}

/// Levenshtein distance from each word to each of its two stems.
///
/// Words and stems are normalized before measuring, so recorded casing
/// does not influence the distances.
pub fn paired_distances(pairs: &[StemPair]) -> Vec<DistanceRecord> {
    pairs
        .iter()
        .map(|pair| {
            let word = normalize_token(&pair.word);
            DistanceRecord {
                ld_a: levenshtein(&word, &normalize_token(&pair.stem_a)),
                ld_b: levenshtein(&word, &normalize_token(&pair.stem_b)),
                word,
            }
        })
        .collect()
}

/// One parsed row of a pairs file: the pair itself plus any expected
/// distances the file carried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRow {
    pub pair: StemPair,
    pub expected_ld_a: Option<usize>,
    pub expected_ld_b: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum EvalError {
    /// The evaluation needs at least one pair.
    EmptySample,
    /// Paired series must have the same length.
    LengthMismatch { x: usize, y: usize },
    /// Exact enumeration is limited to small samples.
    SampleTooLarge { n_r: usize, limit: usize },
    /// Significance levels must lie strictly between 0 and 1.
    InvalidAlpha(f64),
    /// A pairs TSV line that could not be parsed. Lines are numbered from 1
    /// and include comment and blank lines.
    MalformedLine { line: usize, message: String },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::EmptySample => write!(f, "evaluation sample is empty"),
            EvalError::LengthMismatch { x, y } => {
                write!(f, "paired series differ in length: {x} vs {y}")
            }
            EvalError::SampleTooLarge { n_r, limit } => write!(
                f,
                "exact enumeration supports at most {limit} nonzero differences, got {n_r}"
            ),
            EvalError::InvalidAlpha(alpha) => {
                write!(f, "alpha must be strictly between 0 and 1, got {alpha}")
            }
            EvalError::MalformedLine { line, message } => {
                write!(f, "pairs line {line}: {message}")
            }
        }
    }
}

impl Error for EvalError {}

/// Parse `word<TAB>stem_a<TAB>stem_b[<TAB>ld_a[<TAB>ld_b]]` rows.
///
/// Lines that are empty or start with `#` are skipped. Rows may carry 3, 4
/// or 5 columns; the trailing integer columns are the expected distances.
pub fn parse_pairs_tsv(text: &str) -> Result<Vec<PairRow>, EvalError> {
    let mut rows = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.strip_suffix('\r').unwrap_or(raw_line);
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if !(3..=5).contains(&fields.len()) {
            return Err(EvalError::MalformedLine {
                line: line_no,
                message: format!(
                    "expected 3 to 5 tab-separated columns, got {}",
                    fields.len()
                ),
            });
        }
        if fields[..3].iter().any(|f| f.is_empty()) {
            return Err(EvalError::MalformedLine {
                line: line_no,
                message: "word and stems must be non-empty".to_string(),
            });
        }
        let parse_ld = |field: &str| -> Result<usize, EvalError> {
            field.parse().map_err(|_| EvalError::MalformedLine {
                line: line_no,
                message: format!("invalid distance {field:?}"),
            })
        };
        let expected_ld_a = fields.get(3).map(|f| parse_ld(f)).transpose()?;
        let expected_ld_b = fields.get(4).map(|f| parse_ld(f)).transpose()?;
        rows.push(PairRow {
            pair: StemPair::new(fields[0], fields[1], fields[2]),
            expected_ld_a,
            expected_ld_b,
        });
    }
    Ok(rows)
}

/// Which of the two stem columns a mismatch refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StemColumn {
    A,
    B,
}

impl fmt::Display for StemColumn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StemColumn::A => f.write_str("a"),
            StemColumn::B => f.write_str("b"),
        }
    }
}

/// A stored distance that disagrees with recomputation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdMismatch {
    /// 1-based position among the parsed data rows.
    pub row: usize,
    /// The word as written in the file.
    pub word: String,
    pub column: StemColumn,
    pub stored: usize,
    pub recomputed: usize,
}

impl fmt::Display for LdMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {} ({}): ld_{} stored as {}, recomputed as {}",
            self.row, self.word, self.column, self.stored, self.recomputed
        )
    }
}

/// Recompute distances for every row and collect disagreements with the
/// expected columns, where present. An empty result means every stored
/// distance checks out.
pub fn validate_expected(rows: &[PairRow]) -> Vec<LdMismatch> {
    let mut mismatches = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let pair = std::slice::from_ref(&row.pair);
        let record = &paired_distances(pair)[0];
        if let Some(stored) = row.expected_ld_a {
            if stored != record.ld_a {
                mismatches.push(LdMismatch {
                    row: idx + 1,
                    word: row.pair.word.clone(),
                    column: StemColumn::A,
                    stored,
                    recomputed: record.ld_a,
                });
            }
        }
        if let Some(stored) = row.expected_ld_b {
            if stored != record.ld_b {
                mismatches.push(LdMismatch {
                    row: idx + 1,
                    word: row.pair.word.clone(),
                    column: StemColumn::B,
                    stored,
                    recomputed: record.ld_b,
                });
            }
        }
    }
    mismatches
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_basics() {
        assert_eq!(levenshtein("kitten", "sitting"), 3);
        assert_eq!(levenshtein("", ""), 0);
        assert_eq!(levenshtein("abc", ""), 3);
        assert_eq!(levenshtein("same", "same"), 0);
        assert_eq!(levenshtein("casa", "cama"), 1);
        assert_eq!(levenshtein("abnormally", "abnormal"), 2);
        // Distance to a prefix is pure deletion.
        assert_eq!(levenshtein("juggling", "juggl"), 3);
    }

    #[test]
    fn distances_ignore_recorded_case() {
        let records = paired_distances(&[StemPair::new("Parsons", "Parson", "PARSON")]);
        assert_eq!(records[0].word, "parsons");
        assert_eq!(records[0].ld_a, 1);
        assert_eq!(records[0].ld_b, 1);
    }

    #[test]
    fn pairs_parser_accepts_three_to_five_columns() {
        let rows = parse_pairs_tsv(
            "# comment\nBraid\tBraid\tBrai\nFleet\tFleet\tFlee\t0\nHaze\tHaze\tHaze\t0\t0\n",
        )
        .unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].expected_ld_a, None);
        assert_eq!(rows[1].expected_ld_a, Some(0));
        assert_eq!(rows[1].expected_ld_b, None);
        assert_eq!(rows[2].expected_ld_b, Some(0));
    }

    #[test]
    fn pairs_parser_rejects_bad_rows() {
        let err = parse_pairs_tsv("word\tstem\n").unwrap_err();
        assert!(matches!(err, EvalError::MalformedLine { line: 1, .. }));

        let err = parse_pairs_tsv("# ok\nw\ta\tb\tx\n").unwrap_err();
        match err {
            EvalError::MalformedLine { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("invalid distance"));
            }
            other => panic!("unexpected error: {other}"),
        }

        let err = parse_pairs_tsv("a\tb\tc\t1\t2\t3\n").unwrap_err();
        assert!(matches!(err, EvalError::MalformedLine { line: 1, .. }));
    }

    #[test]
    fn validation_reports_recomputed_values() {
        let rows = parse_pairs_tsv("Braid\tBraid\tBrai\t0\t9\n").unwrap();
        let mismatches = validate_expected(&rows);
        assert_eq!(mismatches.len(), 1);
        let m = &mismatches[0];
        assert_eq!(m.row, 1);
        assert_eq!(m.word, "Braid");
        assert_eq!(m.column, StemColumn::B);
        assert_eq!(m.stored, 9);
        assert_eq!(m.recomputed, 1);
        assert_eq!(
            m.to_string(),
            "row 1 (Braid): ld_b stored as 9, recomputed as 1"
        );
    }

    #[test]
    fn validation_passes_consistent_rows() {
        let rows = parse_pairs_tsv("Braid\tBraid\tBrai\t0\t1\nFleet\tFleet\tFlee\t0\t1\n").unwrap();
        assert!(validate_expected(&rows).is_empty());
    }
}
