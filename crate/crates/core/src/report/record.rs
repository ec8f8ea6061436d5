use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Discrepancy,
}

/// How `oracle_value` is compared with `paper_value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    /// `oracle_value >= paper_value`.
    AtLeast,
    /// `oracle_value <= paper_value`.
    AtMost,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub claim_id: String,
    pub params: String,
    pub relation: Relation,
    pub paper_value: f64,
    pub oracle_value: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub expected_discrepancy: bool,
}

impl VerificationRecord {
    pub fn new(
        claim_id: &str,
        params: String,
        relation: Relation,
        paper_value: f64,
        oracle_value: f64,
        tolerance: f64,
    ) -> Self {
        let abs_err = match relation {
            Relation::Equal => (paper_value - oracle_value).abs(),
            Relation::AtLeast => (paper_value - oracle_value).max(0.0),
            Relation::AtMost => (oracle_value - paper_value).max(0.0),
        };
        let rel_err = if paper_value != 0.0 {
            abs_err / paper_value.abs()
        } else {
            abs_err
        };
        // NaN compares false, so a non-finite error is a discrepancy.
        let verdict = if abs_err <= tolerance {
            Verdict::Pass
        } else {
            Verdict::Discrepancy
        };
        VerificationRecord {
            claim_id: claim_id.to_string(),
            params,
            relation,
            paper_value,
            oracle_value,
            abs_err,
            rel_err,
            tolerance,
            verdict,
            expected_discrepancy: super::claims::EXPECTED_DISCREPANCIES
                .iter()
                .any(|(id, _)| *id == claim_id),
        }
    }

    pub fn equal(claim_id: &str, params: String, paper: f64, oracle: f64, tol: f64) -> Self {
        Self::new(claim_id, params, Relation::Equal, paper, oracle, tol)
    }

    /// A discrepancy that is not covered by the expected-discrepancy registry.
    pub fn is_unexpected(&self) -> bool {
        self.verdict == Verdict::Discrepancy && !self.expected_discrepancy
    }
}
