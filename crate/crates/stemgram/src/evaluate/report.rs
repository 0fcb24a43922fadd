//! Comparison reports.
//!
//! [`compare_report`] runs the full evaluation over a set of stem pairs and
//! packs the outcome into a [`ReportDocument`] that serializes to TSV or
//! JSON. Serialization is byte-deterministic: fixed key order, floats always
//! rendered with six decimals.

use super::wilcoxon::wilcoxon_signed_rank;
use super::{paired_distances, DistanceRecord, EvalError, StemPair};
use crate::corpus::normalize_token;

/// Everything the evaluation produced for one sample of pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportDocument {
    /// Number of pairs evaluated.
    pub n: usize,
    /// Pairs remaining after zero differences were discarded.
    pub n_r: usize,
    pub w: f64,
    pub z: f64,
    pub p_two_sided: f64,
    pub alpha: f64,
    /// True when `p_two_sided < alpha`.
    pub reject_null: bool,
    pub mean_ld_a: f64,
    pub mean_ld_b: f64,
    /// Pairs whose two stems are identical after normalization.
    pub identical_stem_count: usize,
    /// The per-word distances behind the summary.
    pub records: Vec<DistanceRecord>,
}

/// Compare two stemmers over a shared word sample.
///
/// Distances are computed per pair, the signed-rank test (plain normal
/// approximation) is run over the paired distances, and the null hypothesis
/// "both stemmers strip alike" is rejected when the p-value falls below
/// `alpha`.
pub fn compare_report(pairs: &[StemPair], alpha: f64) -> Result<ReportDocument, EvalError> {
    if pairs.is_empty() {
        return Err(EvalError::EmptySample);
    }
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(EvalError::InvalidAlpha(alpha));
    }
    let records = paired_distances(pairs);
    let x: Vec<f64> = records.iter().map(|r| r.ld_a as f64).collect();
    let y: Vec<f64> = records.iter().map(|r| r.ld_b as f64).collect();
    let test = wilcoxon_signed_rank(&x, &y)?;
    let n = records.len() as f64;
    let identical_stem_count = pairs
        .iter()
        .filter(|p| normalize_token(&p.stem_a) == normalize_token(&p.stem_b))
        .count();
    Ok(ReportDocument {
        n: records.len(),
        n_r: test.n_r,
        w: test.w,
        z: test.z,
        p_two_sided: test.p_two_sided,
        alpha,
        reject_null: test.p_two_sided < alpha,
        mean_ld_a: x.iter().sum::<f64>() / n,
        mean_ld_b: y.iter().sum::<f64>() / n,
        identical_stem_count,
        records,
    })
}

fn fmt_f64(value: f64) -> String {
    format!("{value:.6}")
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

impl ReportDocument {
    /// Key-value TSV, one summary field per line, fixed order. With
    /// `include_records` the per-word rows follow under a `#` column header.
    pub fn to_tsv(&self, include_records: bool) -> String {
        let mut out = String::new();
        out.push_str(&format!("n\t{}\n", self.n));
        out.push_str(&format!("n_r\t{}\n", self.n_r));
        out.push_str(&format!("w\t{}\n", fmt_f64(self.w)));
        out.push_str(&format!("z\t{}\n", fmt_f64(self.z)));
        out.push_str(&format!("p_two_sided\t{}\n", fmt_f64(self.p_two_sided)));
        out.push_str(&format!("alpha\t{}\n", fmt_f64(self.alpha)));
        out.push_str(&format!("reject_null\t{}\n", self.reject_null));
        out.push_str(&format!("mean_ld_a\t{}\n", fmt_f64(self.mean_ld_a)));
        out.push_str(&format!("mean_ld_b\t{}\n", fmt_f64(self.mean_ld_b)));
        out.push_str(&format!(
            "identical_stem_count\t{}\n",
            self.identical_stem_count
        ));
        if include_records {
            out.push_str("# word\tld_a\tld_b\n");
            for record in &self.records {
                out.push_str(&format!(
                    "{}\t{}\t{}\n",
                    record.word, record.ld_a, record.ld_b
                ));
            }
        }
        out
    }

    /// Pretty JSON with a fixed key order and six-decimal floats.
    pub fn to_json(&self, include_records: bool) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!("  \"n\": {},\n", self.n));
        out.push_str(&format!("  \"n_r\": {},\n", self.n_r));
        out.push_str(&format!("  \"w\": {},\n", fmt_f64(self.w)));
        out.push_str(&format!("  \"z\": {},\n", fmt_f64(self.z)));
        out.push_str(&format!(
            "  \"p_two_sided\": {},\n",
            fmt_f64(self.p_two_sided)
        ));
        out.push_str(&format!("  \"alpha\": {},\n", fmt_f64(self.alpha)));
        out.push_str(&format!("  \"reject_null\": {},\n", self.reject_null));
        out.push_str(&format!("  \"mean_ld_a\": {},\n", fmt_f64(self.mean_ld_a)));
        out.push_str(&format!("  \"mean_ld_b\": {},\n", fmt_f64(self.mean_ld_b)));
        if include_records {
            out.push_str(&format!(
                "  \"identical_stem_count\": {},\n",
                self.identical_stem_count
            ));
            out.push_str("  \"records\": [\n");
            for (i, record) in self.records.iter().enumerate() {
                let comma = if i + 1 < self.records.len() { "," } else { "" };
                out.push_str(&format!(
                    "    {{\"word\": \"{}\", \"ld_a\": {}, \"ld_b\": {}}}{}\n",
                    json_escape(&record.word),
                    record.ld_a,
                    record.ld_b,
                    comma
                ));
            }
            out.push_str("  ]\n");
        } else {
            out.push_str(&format!(
                "  \"identical_stem_count\": {}\n",
                self.identical_stem_count
            ));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_pairs() -> Vec<StemPair> {
        vec![
            StemPair::new("Museums", "Museum", "Museum"),
            StemPair::new("Braid", "Braid", "Brai"),
            StemPair::new("Training", "Train", "Train"),
        ]
    }

    #[test]
    fn report_summarizes_the_sample() {
        // Distances: (1,1), (0,1), (3,3); one nonzero difference of -1.
        let report = compare_report(&sample_pairs(), 0.05).unwrap();
        assert_eq!(report.n, 3);
        assert_eq!(report.n_r, 1);
        assert!((report.w - 1.0).abs() < 1e-12);
        assert!((report.z - 1.0).abs() < 1e-12);
        assert!((report.p_two_sided - 0.317311).abs() < 1e-6);
        assert!(!report.reject_null);
        assert!((report.mean_ld_a - 4.0 / 3.0).abs() < 1e-12);
        assert!((report.mean_ld_b - 5.0 / 3.0).abs() < 1e-12);
        assert_eq!(report.identical_stem_count, 2);
        assert_eq!(report.records.len(), 3);
    }

    #[test]
    fn report_validates_inputs() {
        assert_eq!(compare_report(&[], 0.05), Err(EvalError::EmptySample));
        let pairs = sample_pairs();
        assert_eq!(
            compare_report(&pairs, 0.0),
            Err(EvalError::InvalidAlpha(0.0))
        );
        assert_eq!(
            compare_report(&pairs, 1.0),
            Err(EvalError::InvalidAlpha(1.0))
        );
    }

    #[test]
    fn tsv_serialization_is_stable() {
        let report = compare_report(&sample_pairs(), 0.05).unwrap();
        let expected = "n\t3\n\
                        n_r\t1\n\
                        w\t1.000000\n\
                        z\t1.000000\n\
                        p_two_sided\t0.317311\n\
                        alpha\t0.050000\n\
                        reject_null\tfalse\n\
                        mean_ld_a\t1.333333\n\
                        mean_ld_b\t1.666667\n\
                        identical_stem_count\t2\n";
        assert_eq!(report.to_tsv(false), expected);
        let with_records = report.to_tsv(true);
        assert!(with_records.starts_with(expected));
        assert!(with_records.contains("# word\tld_a\tld_b\n"));
        assert!(with_records.ends_with("museums\t1\t1\nbraid\t0\t1\ntraining\t3\t3\n"));
    }

    #[test]
    fn json_serialization_is_stable() {
        let report = compare_report(&sample_pairs(), 0.05).unwrap();
        let json = report.to_json(false);
        assert!(json.starts_with("{\n  \"n\": 3,\n  \"n_r\": 1,\n"));
        assert!(json.contains("\"p_two_sided\": 0.317311,\n"));
        assert!(json.contains("\"reject_null\": false,\n"));
        assert!(json.ends_with("\"identical_stem_count\": 2\n}\n"));

        let json = report.to_json(true);
        assert!(json.contains("\"records\": [\n"));
        assert!(json.contains("{\"word\": \"braid\", \"ld_a\": 0, \"ld_b\": 1},\n"));
        assert!(json.contains("{\"word\": \"training\", \"ld_a\": 3, \"ld_b\": 3}\n"));
    }

    #[test]
    fn json_strings_are_escaped() {
        assert_eq!(json_escape("plain"), "plain");
        assert_eq!(json_escape("a\"b\\c"), "a\\\"b\\\\c");
        assert_eq!(json_escape("tab\there"), "tab\\there");
        assert_eq!(json_escape("\u{1}"), "\\u0001");
    }
}
