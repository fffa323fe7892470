use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Which side-builders a check uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Numeric,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Numeric => "numeric",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// Outcome of one check. Serialized field names are part of the
/// external contract; see the README for the schema.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub backend: Backend,
    /// Truncation order (exact) or working precision in digits (numeric).
    pub order_or_precision: u32,
    pub params: BTreeMap<String, String>,
    pub verdict: Verdict,
    /// `"0"` for an exact pass, the first mismatch for an exact failure,
    /// and the relative error in scientific notation for numeric checks.
    pub discrepancy: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_diff_exponent: Option<i64>,
    pub wall_ms: u64,
    /// Position of the instance within its entry; used for ordering only.
    #[serde(skip)]
    pub instance: usize,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = match self.backend {
            Backend::Exact => "N",
            Backend::Numeric => "digits",
        };
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(
            f,
            "{:<4} {:<24} {:<7} {:<10} {:<28} [{}] {}ms",
            match self.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
            },
            self.id,
            self.backend.to_string(),
            format!("{unit}={}", self.order_or_precision),
            self.discrepancy,
            params.join(", "),
            self.wall_ms
        )
    }
}

/// Orders reports by id, then by instance.
pub fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| (a.id.as_str(), a.instance).cmp(&(b.id.as_str(), b.instance)));
}
