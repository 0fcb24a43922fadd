//! Bundled data for the self-test, the examples and the test suite.
//!
//! Four small corpora and one evaluation sample ship inside the binary so
//! every check runs without touching the filesystem. The same files live
//! under `data/` for use from the command line.

use crate::corpus::{parse_corpus_tsv, PrefixFrequencyIndex};
use crate::evaluate::{parse_pairs_tsv, PairRow};

/// 100 words with the stems of two stemmers and the recorded distances.
pub const EVAL_SAMPLE_TSV: &str = include_str!("../data/eval_sample.tsv");

/// Three words engineered to put a frequency cliff after "juggl".
pub const JUGGLING_TSV: &str = include_str!("../data/juggling.tsv");

/// English inflection cluster around "creat".
pub const CLUSTERS_EN_TSV: &str = include_str!("../data/clusters_en.tsv");

/// Spanish inflection cluster around "traba".
pub const CLUSTERS_ES_TSV: &str = include_str!("../data/clusters_es.tsv");

/// Portuguese inflection cluster around "dific".
pub const CLUSTERS_PT_TSV: &str = include_str!("../data/clusters_pt.tsv");

fn index_from(tsv: &str) -> PrefixFrequencyIndex {
    let entries = parse_corpus_tsv(tsv).expect("bundled corpus is well-formed");
    PrefixFrequencyIndex::from_entries(entries)
}

pub fn juggling_index() -> PrefixFrequencyIndex {
    index_from(JUGGLING_TSV)
}

pub fn clusters_en_index() -> PrefixFrequencyIndex {
    index_from(CLUSTERS_EN_TSV)
}

pub fn clusters_es_index() -> PrefixFrequencyIndex {
    index_from(CLUSTERS_ES_TSV)
}

pub fn clusters_pt_index() -> PrefixFrequencyIndex {
    index_from(CLUSTERS_PT_TSV)
}

/// The evaluation sample, parsed. All 100 rows carry both expected-distance
/// columns.
pub fn eval_sample_rows() -> Vec<PairRow> {
    parse_pairs_tsv(EVAL_SAMPLE_TSV).expect("bundled sample is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_data_parses() {
        assert_eq!(eval_sample_rows().len(), 100);
        assert_eq!(juggling_index().total_tokens(), 915);
        assert_eq!(clusters_en_index().entry_count(), 6);
        assert_eq!(clusters_es_index().entry_count(), 5);
        assert_eq!(clusters_pt_index().entry_count(), 3);
    }

    #[test]
    fn every_sample_row_has_expected_distances() {
        assert!(eval_sample_rows()
            .iter()
            .all(|r| r.expected_ld_a.is_some() && r.expected_ld_b.is_some()));
    }

    #[test]
    fn sample_statistic_under_option_variants() {
        use crate::evaluate::paired_distances;
        use crate::evaluate::wilcoxon::{wilcoxon_signed_rank_with, WilcoxonOptions};

        let pairs: Vec<_> = eval_sample_rows().iter().map(|r| r.pair.clone()).collect();
        let records = paired_distances(&pairs);
        let x: Vec<f64> = records.iter().map(|r| r.ld_a as f64).collect();
        let y: Vec<f64> = records.iter().map(|r| r.ld_b as f64).collect();

        let continuity = wilcoxon_signed_rank_with(
            &x,
            &y,
            WilcoxonOptions {
                continuity_correction: true,
                tie_correction: false,
            },
        )
        .unwrap();
        assert!((continuity.z - 0.614939).abs() < 1e-6);
        assert!((continuity.p_two_sided - 0.538595).abs() < 1e-6);

        let tie_corrected = wilcoxon_signed_rank_with(
            &x,
            &y,
            WilcoxonOptions {
                continuity_correction: false,
                tie_correction: true,
            },
        )
        .unwrap();
        assert!((tie_corrected.z - 0.629635).abs() < 1e-6);
        assert!((tie_corrected.p_two_sided - 0.528933).abs() < 1e-6);
    }
}
