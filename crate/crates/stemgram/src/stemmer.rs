//! The two-phase prefix-frequency stemmer.
//!
//! The idea: look at a word's prefixes of growing length and at how many
//! corpus tokens share each of them. The count can only fall as the prefix
//! grows, and for inflected words it tends to fall in a characteristic
//! pattern: a plateau over the stem, then a cliff where the suffixes fan
//! out. The algorithm detects that cliff with two difference sequences over
//! the prefix counts `F_i`:
//!
//! * `λ_i = |F_i - F_{i-1}|`, the first-order deviation, and
//! * `Δ_i = λ_i - λ_{i-1}`, the second-order deviation.
//!
//! Phase 1 scans `i = 5..=|word|`. At each step, a deviation above the
//! threshold `Γ` means the prefix of length `i - 1` was the more frequent
//! one, so that is the current stem candidate `ψ`; otherwise `ψ` moves to
//! `i`. The scan ends at the word boundary or as soon as `Δ_i` turns
//! positive; a positive second difference marks the sharpest drop, and
//! cutting there keeps the longest prefix before the fan-out. The recursion
//! starts from a sentinel `λ_4` that compares above every finite count, so
//! `Δ_5` can never stop the scan.
//!
//! Phase 2 handles the words Phase 1 left whole. If the scan consumed the
//! entire word and the last three prefix counts are identical, the tail is
//! carried by so few distinct continuations that it is almost surely a
//! suffix, so three characters are stripped, but only while the remaining
//! stem stays longer than the guarded minimum.
//!
//! Words shorter than [`MIN_WORD_LEN`] bypass both phases, and by default a
//! word whose 4-prefix is unknown to the corpus passes through unchanged.
//! Every decision is recorded in a [`StemTrace`] so a stem can always be
//! explained after the fact.

use std::error::Error;
use std::fmt;

use crate::corpus::{normalize_token, PrefixFrequencyIndex};

/// Words shorter than this many characters are returned unchanged, and no
/// stem is ever shorter than this.
pub const MIN_WORD_LEN: usize = 4;

/// Tuning knobs for the stemmer. `Default` gives the canonical behavior.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StemmerConfig {
    /// Deviation threshold `Γ`. A first-order deviation must exceed this to
    /// pull the stem candidate back to the previous prefix. 0 means any
    /// drop counts.
    pub gamma: u64,
    /// Prefix counts below this value are treated as 0, mimicking corpora
    /// that hide rare entries. 0 disables the floor.
    pub frequency_floor: u64,
    /// When true, a word whose 4-prefix has frequency 0 is returned
    /// unchanged instead of being run through the phases.
    pub oov_passthrough: bool,
}

impl Default for StemmerConfig {
    fn default() -> Self {
        StemmerConfig {
            gamma: 0,
            frequency_floor: 0,
            oov_passthrough: true,
        }
    }
}

/// First-order deviation value in the Phase-1 recursion.
///
/// The recursion needs a `λ_4` that is "very high": higher than any finite
/// deviation, so that `Δ_5` is always negative. That starting value is the
/// sentinel; every computed deviation is finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lambda {
    /// The start-of-scan value, above every finite deviation.
    Sentinel,
    Finite(u64),
}

/// Second-order deviation `Δ_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Delta {
    /// Difference against the sentinel; below every finite value.
    NegativeInfinity,
    Finite(i128),
}

impl Delta {
    /// Only a strictly positive finite Δ stops the Phase-1 scan.
    pub fn is_positive(self) -> bool {
        matches!(self, Delta::Finite(d) if d > 0)
    }
}

impl fmt::Display for Delta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Delta::NegativeInfinity => write!(f, "-inf"),
            Delta::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// `Δ_i = λ_i - λ_{i-1}`, where the previous deviation may be the sentinel.
pub fn second_order_deviation(lambda: u64, previous: Lambda) -> Delta {
    match previous {
        Lambda::Sentinel => Delta::NegativeInfinity,
        Lambda::Finite(prev) => Delta::Finite(lambda as i128 - prev as i128),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StemError {
    /// `stem` was given an empty token.
    EmptyWord,
    /// A profile was requested for a word below [`MIN_WORD_LEN`].
    WordTooShort { word: String, len: usize },
    /// A deviation was requested for an n-gram length outside `4..=|word|`.
    DeviationOutOfRange { ngram_len: usize, word_len: usize },
    /// A profile was built with the wrong number of frequencies for the word.
    ProfileShape { expected: usize, got: usize },
    /// A profile was built with a frequency that increases with length.
    ProfileNotMonotone { ngram_len: usize },
}

impl fmt::Display for StemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StemError::EmptyWord => write!(f, "cannot stem an empty word"),
            StemError::WordTooShort { word, len } => write!(
                f,
                "word {word:?} has {len} characters, need at least {MIN_WORD_LEN} for a profile"
            ),
            StemError::DeviationOutOfRange {
                ngram_len,
                word_len,
            } => write!(
                f,
                "n-gram length {ngram_len} outside {MIN_WORD_LEN}..={word_len}"
            ),
            StemError::ProfileShape { expected, got } => {
                write!(f, "profile needs {expected} frequencies, got {got}")
            }
            StemError::ProfileNotMonotone { ngram_len } => write!(
                f,
                "prefix frequency rises at n-gram length {ngram_len}; prefix counts cannot increase"
            ),
        }
    }
}

impl Error for StemError {}

/// The frequencies `F_4..=F_L` of a word's prefixes, `L = |word|`.
///
/// Invariants: the word has at least [`MIN_WORD_LEN`] characters, there is
/// exactly one frequency per n-gram length, and the sequence never
/// increases. Profiles built through [`ngram_profile`] inherit monotonicity
/// from the index; hand-built profiles are validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NGramProfile {
    word: String,
    word_len: usize,
    frequencies: Vec<u64>,
}

impl NGramProfile {
    /// Build a profile directly from a frequency vector, one value per
    /// n-gram length from [`MIN_WORD_LEN`] to `|word|`. Mostly useful for
    /// exercising the phases against synthetic count patterns.
    pub fn from_frequencies(word: &str, frequencies: Vec<u64>) -> Result<Self, StemError> {
        let word = normalize_token(word);
        let word_len = word.chars().count();
        if word_len < MIN_WORD_LEN {
            return Err(StemError::WordTooShort {
                word,
                len: word_len,
            });
        }
        let expected = word_len - MIN_WORD_LEN + 1;
        if frequencies.len() != expected {
            return Err(StemError::ProfileShape {
                expected,
                got: frequencies.len(),
            });
        }
        if let Some(pos) = frequencies.windows(2).position(|w| w[1] > w[0]) {
            return Err(StemError::ProfileNotMonotone {
                ngram_len: MIN_WORD_LEN + pos + 1,
            });
        }
        Ok(NGramProfile {
            word,
            word_len,
            frequencies,
        })
    }

    pub fn word(&self) -> &str {
        &self.word
    }

    /// Word length in characters; also the largest valid n-gram length.
    pub fn word_len(&self) -> usize {
        self.word_len
    }

    /// `F_i` for an n-gram length in `4..=word_len`.
    pub fn frequency(&self, ngram_len: usize) -> Option<u64> {
        if !(MIN_WORD_LEN..=self.word_len).contains(&ngram_len) {
            return None;
        }
        Some(self.frequencies[ngram_len - MIN_WORD_LEN])
    }

    /// All frequencies, index 0 holding `F_4`.
    pub fn frequencies(&self) -> &[u64] {
        &self.frequencies
    }

    /// First-order deviation `λ_i = |F_i - F_{i-1}|`, with `λ_4 = 0` as the
    /// base case.
    pub fn first_order_deviation(&self, ngram_len: usize) -> Result<u64, StemError> {
        if ngram_len == MIN_WORD_LEN {
            return Ok(0);
        }
        match (self.frequency(ngram_len), self.frequency(ngram_len - 1)) {
            (Some(cur), Some(prev)) => Ok(prev.abs_diff(cur)),
            _ => Err(StemError::DeviationOutOfRange {
                ngram_len,
                word_len: self.word_len,
            }),
        }
    }
}

/// Look up the prefix-frequency profile of a normalized word.
///
/// One trie walk yields every `F_i`; the configured frequency floor is
/// applied to each count. Flooring keeps the sequence monotone: counts at
/// or above the floor are untouched and counts below it all become 0.
pub fn ngram_profile(
    index: &PrefixFrequencyIndex,
    word: &str,
    config: &StemmerConfig,
) -> Result<NGramProfile, StemError> {
    let word_len = word.chars().count();
    if word_len < MIN_WORD_LEN {
        return Err(StemError::WordTooShort {
            word: word.to_string(),
            len: word_len,
        });
    }
    let raw = index.prefix_counts(word);
    let frequencies = raw[MIN_WORD_LEN - 1..]
        .iter()
        .map(|&count| {
            if count >= config.frequency_floor {
                count
            } else {
                0
            }
        })
        .collect();
    Ok(NGramProfile {
        word: word.to_string(),
        word_len,
        frequencies,
    })
}

/// Why the stemmer stopped where it did.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// The word is shorter than [`MIN_WORD_LEN`]; both phases were skipped.
    WordTooShort,
    /// The word's 4-prefix is unknown to the corpus and passthrough is on.
    OovPassthrough,
    /// The Phase-1 scan reached the end of the word.
    EndOfWord,
    /// A positive second-order deviation stopped the Phase-1 scan early.
    PositiveSecondDeviation,
}

impl StopReason {
    pub fn as_str(self) -> &'static str {
        match self {
            StopReason::WordTooShort => "word-too-short",
            StopReason::OovPassthrough => "oov-passthrough",
            StopReason::EndOfWord => "end-of-word",
            StopReason::PositiveSecondDeviation => "positive-second-deviation",
        }
    }
}

impl fmt::Display for StopReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One Phase-1 step, taken at n-gram length `ngram_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub ngram_len: usize,
    /// `F_i`, after flooring.
    pub frequency: u64,
    /// `λ_i`.
    pub lambda: u64,
    /// `Δ_i`; `None` when the scan reached the word end before computing it.
    pub delta: Option<Delta>,
    /// The stem candidate after this step's update.
    pub psi_after: usize,
}

/// Full record of a stemming decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemTrace {
    pub steps: Vec<TraceStep>,
    pub stop_reason: StopReason,
    /// True when Phase 2 stripped the flat tail.
    pub phase2_applied: bool,
}

impl StemTrace {
    fn bypass(stop_reason: StopReason) -> Self {
        StemTrace {
            steps: Vec::new(),
            stop_reason,
            phase2_applied: false,
        }
    }
}

/// A stemmed word together with the trace that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StemResult {
    /// The input after normalization.
    pub word: String,
    /// Always a prefix of `word`.
    pub stem: String,
    pub trace: StemTrace,
}

/// Phase 1: scan the deviations and pick the stem candidate `ψ`.
///
/// Per step `i`, in this order: compute `λ_i`; move `ψ` (back to `i - 1`
/// when `λ_i` exceeds `Γ`, else forward to `i`); stop if the word is
/// exhausted; otherwise compute `Δ_i` and stop if it is positive. The
/// returned trace has one step per visited `i` and `phase2_applied` still
/// false.
pub fn phase1(profile: &NGramProfile, config: &StemmerConfig) -> (usize, StemTrace) {
    let len = profile.word_len();
    let freqs = profile.frequencies();
    let mut psi = MIN_WORD_LEN;
    let mut lambda_prev = Lambda::Sentinel;
    let mut steps = Vec::new();
    let mut stop_reason = StopReason::EndOfWord;

    for i in MIN_WORD_LEN + 1..=len {
        let f_cur = freqs[i - MIN_WORD_LEN];
        let f_prev = freqs[i - 1 - MIN_WORD_LEN];
        let lambda = f_prev.abs_diff(f_cur);

        if lambda > config.gamma {
            // The counts are monotone, so a deviation above Γ ≥ 0 means the
            // previous prefix is strictly the more frequent of the two.
            debug_assert!(f_prev > f_cur);
            psi = i - 1;
        } else {
            psi = i;
        }

        if i == len {
            steps.push(TraceStep {
                ngram_len: i,
                frequency: f_cur,
                lambda,
                delta: None,
                psi_after: psi,
            });
            stop_reason = StopReason::EndOfWord;
            break;
        }

        let delta = second_order_deviation(lambda, lambda_prev);
        steps.push(TraceStep {
            ngram_len: i,
            frequency: f_cur,
            lambda,
            delta: Some(delta),
            psi_after: psi,
        });
        if delta.is_positive() {
            stop_reason = StopReason::PositiveSecondDeviation;
            break;
        }
        lambda_prev = Lambda::Finite(lambda);
    }

    (
        psi,
        StemTrace {
            steps,
            stop_reason,
            phase2_applied: false,
        },
    )
}

/// Phase 2: strip a flat tail off words Phase 1 left whole.
///
/// Applies only when `ψ` still equals the word length, the last three
/// prefix counts are identical, and stripping three characters leaves more
/// than a bypass-length stem (`ψ - 3 > 3`). Marks the trace when it fires.
pub fn phase2(profile: &NGramProfile, psi: usize, trace: &mut StemTrace) -> usize {
    let len = profile.word_len();
    if psi != len || psi <= MIN_WORD_LEN + 2 {
        return psi;
    }
    let freqs = profile.frequencies();
    let n = freqs.len();
    // psi > 6 implies the word has at least three n-grams of length >= 4.
    if freqs[n - 1] == freqs[n - 2] && freqs[n - 2] == freqs[n - 3] {
        trace.phase2_applied = true;
        return psi - 3;
    }
    psi
}

/// Stem one word against a corpus index.
///
/// The word is normalized first; the result's `stem` is always a prefix of
/// that normalized form. Only an empty token is an error: short words and
/// out-of-vocabulary words come back unchanged, with the trace saying why.
///
/// ```
/// use stemgram::corpus::{CorpusEntry, PrefixFrequencyIndex};
/// use stemgram::stemmer::{stem, StemmerConfig};
///
/// let index = PrefixFrequencyIndex::from_entries(vec![
///     CorpusEntry::new("juggling", 328).unwrap(),
///     CorpusEntry::new("juggler", 401).unwrap(),
///     CorpusEntry::new("jugged", 186).unwrap(),
/// ]);
/// let result = stem(&index, "Juggling", &StemmerConfig::default()).unwrap();
/// assert_eq!(result.stem, "juggl");
/// ```
pub fn stem(
    index: &PrefixFrequencyIndex,
    word: &str,
    config: &StemmerConfig,
) -> Result<StemResult, StemError> {
    let word = normalize_token(word);
    if word.is_empty() {
        return Err(StemError::EmptyWord);
    }
    let len = word.chars().count();
    if len < MIN_WORD_LEN {
        return Ok(StemResult {
            stem: word.clone(),
            word,
            trace: StemTrace::bypass(StopReason::WordTooShort),
        });
    }

    let profile = ngram_profile(index, &word, config)?;
    if config.oov_passthrough && profile.frequency(MIN_WORD_LEN) == Some(0) {
        return Ok(StemResult {
            stem: word.clone(),
            word,
            trace: StemTrace::bypass(StopReason::OovPassthrough),
        });
    }

    let (psi, mut trace) = phase1(&profile, config);
    let psi = phase2(&profile, psi, &mut trace);
    let stem = word.chars().take(psi).collect();
    Ok(StemResult { word, stem, trace })
}

/// Stem many words, keeping per-word failures instead of stopping at the
/// first one.
pub fn stem_batch(
    index: &PrefixFrequencyIndex,
    words: &[String],
    config: &StemmerConfig,
) -> Vec<Result<StemResult, StemError>> {
    words.iter().map(|w| stem(index, w, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::CorpusEntry;

    fn juggling_index() -> PrefixFrequencyIndex {
        PrefixFrequencyIndex::from_entries(vec![
            CorpusEntry::new("juggling", 328).unwrap(),
            CorpusEntry::new("juggler", 401).unwrap(),
            CorpusEntry::new("jugged", 186).unwrap(),
        ])
    }

    fn create_index() -> PrefixFrequencyIndex {
        PrefixFrequencyIndex::from_entries(vec![
            CorpusEntry::new("create", 10).unwrap(),
            CorpusEntry::new("creates", 8).unwrap(),
            CorpusEntry::new("creating", 6).unwrap(),
            CorpusEntry::new("created", 9).unwrap(),
            CorpusEntry::new("creation", 7).unwrap(),
            CorpusEntry::new("creative", 5).unwrap(),
        ])
    }

    #[test]
    fn profile_reads_floored_prefix_counts() {
        let config = StemmerConfig::default();
        let profile = ngram_profile(&create_index(), "creates", &config).unwrap();
        assert_eq!(profile.frequencies(), &[45, 45, 27, 8]);
        assert_eq!(profile.frequency(4), Some(45));
        assert_eq!(profile.frequency(7), Some(8));
        assert_eq!(profile.frequency(3), None);
        assert_eq!(profile.frequency(8), None);

        let floored = StemmerConfig {
            frequency_floor: 10,
            ..StemmerConfig::default()
        };
        let profile = ngram_profile(&create_index(), "creates", &floored).unwrap();
        assert_eq!(profile.frequencies(), &[45, 45, 27, 0]);
    }

    #[test]
    fn profile_rejects_short_words() {
        let err = ngram_profile(&create_index(), "cat", &StemmerConfig::default()).unwrap_err();
        assert_eq!(
            err,
            StemError::WordTooShort {
                word: "cat".to_string(),
                len: 3
            }
        );
    }

    #[test]
    fn hand_built_profiles_are_validated() {
        assert!(NGramProfile::from_frequencies("stemming", vec![7, 7, 7, 7, 7]).is_ok());
        assert_eq!(
            NGramProfile::from_frequencies("stemming", vec![7, 7]),
            Err(StemError::ProfileShape {
                expected: 5,
                got: 2
            })
        );
        assert_eq!(
            NGramProfile::from_frequencies("stemming", vec![7, 7, 8, 8, 8]),
            Err(StemError::ProfileNotMonotone { ngram_len: 6 })
        );
    }

    #[test]
    fn first_order_deviation_has_base_case() {
        let config = StemmerConfig::default();
        let profile = ngram_profile(&juggling_index(), "juggling", &config).unwrap();
        assert_eq!(profile.first_order_deviation(4), Ok(0));
        assert_eq!(profile.first_order_deviation(5), Ok(186));
        assert_eq!(profile.first_order_deviation(6), Ok(401));
        assert_eq!(
            profile.first_order_deviation(3),
            Err(StemError::DeviationOutOfRange {
                ngram_len: 3,
                word_len: 8
            })
        );
        assert_eq!(
            profile.first_order_deviation(9),
            Err(StemError::DeviationOutOfRange {
                ngram_len: 9,
                word_len: 8
            })
        );
    }

    #[test]
    fn second_order_deviation_handles_sentinel() {
        assert_eq!(
            second_order_deviation(186, Lambda::Sentinel),
            Delta::NegativeInfinity
        );
        assert_eq!(
            second_order_deviation(401, Lambda::Finite(186)),
            Delta::Finite(215)
        );
        assert_eq!(
            second_order_deviation(10, Lambda::Finite(40)),
            Delta::Finite(-30)
        );
        assert!(Delta::Finite(1).is_positive());
        assert!(!Delta::Finite(0).is_positive());
        assert!(!Delta::Finite(-5).is_positive());
        assert!(!Delta::NegativeInfinity.is_positive());
    }

    #[test]
    fn phase1_stops_on_positive_second_deviation() {
        let config = StemmerConfig::default();
        let profile = ngram_profile(&juggling_index(), "juggling", &config).unwrap();
        let (psi, trace) = phase1(&profile, &config);
        assert_eq!(psi, 5);
        assert_eq!(trace.stop_reason, StopReason::PositiveSecondDeviation);
        assert!(!trace.phase2_applied);
        assert_eq!(
            trace.steps,
            vec![
                TraceStep {
                    ngram_len: 5,
                    frequency: 729,
                    lambda: 186,
                    delta: Some(Delta::NegativeInfinity),
                    psi_after: 4,
                },
                TraceStep {
                    ngram_len: 6,
                    frequency: 328,
                    lambda: 401,
                    delta: Some(Delta::Finite(215)),
                    psi_after: 5,
                },
            ]
        );
    }

    #[test]
    fn phase1_on_min_length_word_never_loops() {
        let profile = NGramProfile::from_frequencies("wasp", vec![12]).unwrap();
        let (psi, trace) = phase1(&profile, &StemmerConfig::default());
        assert_eq!(psi, 4);
        assert!(trace.steps.is_empty());
        assert_eq!(trace.stop_reason, StopReason::EndOfWord);
    }

    #[test]
    fn phase1_final_step_has_no_delta() {
        let config = StemmerConfig::default();
        let profile = ngram_profile(&create_index(), "create", &config).unwrap();
        let (psi, trace) = phase1(&profile, &config);
        assert_eq!(psi, 5);
        assert_eq!(trace.stop_reason, StopReason::EndOfWord);
        let last = trace.steps.last().unwrap();
        assert_eq!(last.ngram_len, 6);
        assert_eq!(last.delta, None);
    }

    #[test]
    fn phase2_strips_flat_tails() {
        let profile =
            NGramProfile::from_frequencies("condensed", vec![50, 40, 30, 12, 12, 12]).unwrap();
        let mut trace = StemTrace::bypass(StopReason::EndOfWord);
        assert_eq!(phase2(&profile, 9, &mut trace), 6);
        assert!(trace.phase2_applied);
    }

    #[test]
    fn phase2_needs_three_identical_counts() {
        let profile =
            NGramProfile::from_frequencies("condensed", vec![50, 40, 30, 13, 12, 12]).unwrap();
        let mut trace = StemTrace::bypass(StopReason::EndOfWord);
        assert_eq!(phase2(&profile, 9, &mut trace), 9);
        assert!(!trace.phase2_applied);
    }

    #[test]
    fn phase2_keeps_stems_above_bypass_length() {
        // Stripping a 6-character word would leave 3 characters.
        let profile = NGramProfile::from_frequencies("mucked", vec![8, 8, 8]).unwrap();
        let mut trace = StemTrace::bypass(StopReason::EndOfWord);
        assert_eq!(phase2(&profile, 6, &mut trace), 6);
        assert!(!trace.phase2_applied);
    }

    #[test]
    fn phase2_only_fires_at_word_end() {
        let profile =
            NGramProfile::from_frequencies("condensed", vec![50, 40, 30, 12, 12, 12]).unwrap();
        let mut trace = StemTrace::bypass(StopReason::PositiveSecondDeviation);
        assert_eq!(phase2(&profile, 7, &mut trace), 7);
        assert!(!trace.phase2_applied);
    }

    #[test]
    fn stem_normalizes_and_cuts() {
        let result = stem(&juggling_index(), "JUGGLING", &StemmerConfig::default()).unwrap();
        assert_eq!(result.word, "juggling");
        assert_eq!(result.stem, "juggl");
        assert!(!result.trace.phase2_applied);
    }

    #[test]
    fn stem_applies_phase2_on_flat_profiles() {
        let index =
            PrefixFrequencyIndex::from_entries(vec![CorpusEntry::new("stemming", 7).unwrap()]);
        let result = stem(&index, "stemming", &StemmerConfig::default()).unwrap();
        assert_eq!(result.stem, "stemm");
        assert_eq!(result.trace.stop_reason, StopReason::EndOfWord);
        assert!(result.trace.phase2_applied);
    }

    #[test]
    fn short_words_bypass_everything() {
        let result = stem(&juggling_index(), "cat", &StemmerConfig::default()).unwrap();
        assert_eq!(result.stem, "cat");
        assert_eq!(result.trace.stop_reason, StopReason::WordTooShort);
        assert!(result.trace.steps.is_empty());
        assert_eq!(
            stem(&juggling_index(), "", &StemmerConfig::default()),
            Err(StemError::EmptyWord)
        );
    }

    #[test]
    fn unknown_words_pass_through_by_default() {
        let config = StemmerConfig::default();
        let result = stem(&juggling_index(), "zebra", &config).unwrap();
        assert_eq!(result.stem, "zebra");
        assert_eq!(result.trace.stop_reason, StopReason::OovPassthrough);

        let no_passthrough = StemmerConfig {
            oov_passthrough: false,
            ..config
        };
        let result = stem(&juggling_index(), "zebra", &no_passthrough).unwrap();
        // All-zero profile: every λ is 0, ψ walks to the word end.
        assert_eq!(result.stem, "zebra");
        assert_eq!(result.trace.stop_reason, StopReason::EndOfWord);
    }

    #[test]
    fn gamma_suppresses_small_deviations() {
        let config = StemmerConfig {
            gamma: 500,
            ..StemmerConfig::default()
        };
        let result = stem(&juggling_index(), "juggling", &config).unwrap();
        // Neither 186 nor 401 exceeds 500, so ψ follows i to the stop step.
        assert_eq!(result.stem, "juggli");
        assert_eq!(
            result.trace.stop_reason,
            StopReason::PositiveSecondDeviation
        );
    }

    #[test]
    fn floor_reshapes_the_profile() {
        let config = StemmerConfig {
            frequency_floor: 400,
            ..StemmerConfig::default()
        };
        let result = stem(&juggling_index(), "juggling", &config).unwrap();
        assert_eq!(result.stem, "juggl");
        // F_6 drops to 0 under the floor, so λ_6 = 729.
        assert_eq!(result.trace.steps[1].lambda, 729);
    }

    #[test]
    fn batch_keeps_per_word_outcomes() {
        let words = vec!["juggling".to_string(), String::new(), "cat".to_string()];
        let results = stem_batch(&juggling_index(), &words, &StemmerConfig::default());
        assert_eq!(results.len(), 3);
        assert_eq!(results[0].as_ref().unwrap().stem, "juggl");
        assert_eq!(results[1], Err(StemError::EmptyWord));
        assert_eq!(results[2].as_ref().unwrap().stem, "cat");
    }
}
