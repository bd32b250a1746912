//! Machine-readable output schemas. Counts and coefficients are decimal
//! strings; several of the tabulated values exceed 64-bit range.

use sdcodes_core::design::DesignInstance;
use sdcodes_core::enumerate::WeightEnumerator;
use sdcodes_core::gleason::{AlphaRange, DivisibilityReport, ParametricEnumerator};
use sdcodes_core::FieldKind;
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct WeightEnumeratorJson {
    pub field: String,
    pub n: usize,
    /// Nonzero entries as [weight, count] pairs, count as decimal string.
    pub counts: Vec<(usize, String)>,
}

impl WeightEnumeratorJson {
    pub fn new(field: FieldKind, we: &WeightEnumerator) -> Self {
        WeightEnumeratorJson {
            field: field.to_string(),
            n: we.len(),
            counts: we.iter().map(|(w, c)| (w, c.to_string())).collect(),
        }
    }
}

/// The parametric table as rows [weight, s, t], meaning the weight-w
/// count is s + t * alpha; this bare array is the wire format of the
/// `gleason` subcommand.
pub fn parametric_rows(p: &ParametricEnumerator) -> Vec<(usize, String, String)> {
    p.terms()
        .map(|(w, s, t)| (w, s.to_string(), t.to_string()))
        .collect()
}

#[derive(Debug, Serialize)]
pub struct AlphaRangeJson {
    pub field: String,
    pub m: usize,
    pub modulus: u64,
    pub beta_min: String,
    pub beta_max: String,
}

impl AlphaRangeJson {
    pub fn new(field: FieldKind, m: usize, r: &AlphaRange) -> Self {
        AlphaRangeJson {
            field: field.to_string(),
            m,
            modulus: r.modulus,
            beta_min: r.beta_min.to_string(),
            beta_max: r.beta_max.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DivisibilityJson {
    pub field: String,
    pub m: usize,
    pub modulus: u64,
    pub pass: bool,
    pub violations: Vec<(usize, String)>,
}

impl DivisibilityJson {
    pub fn new(r: &DivisibilityReport) -> Self {
        DivisibilityJson {
            field: r.field.to_string(),
            m: r.m,
            modulus: r.modulus,
            pass: r.passed(),
            violations: r
                .violations
                .iter()
                .map(|(w, s)| (*w, s.to_string()))
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct DesignJson {
    pub v: usize,
    pub k: usize,
    pub b: usize,
    /// Replication number; null when the supports are not a 1-design.
    pub r: Option<usize>,
    pub is_1_design: bool,
}

impl DesignJson {
    pub fn new(d: &DesignInstance) -> Self {
        DesignJson {
            v: d.v,
            k: d.k,
            b: d.b,
            r: d.r,
            is_1_design: d.is_one_design(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// One named check of a verification run.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub got: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cite: Option<String>,
}

impl Check {
    pub fn new(name: &str, status: Status) -> Self {
        Check {
            name: name.to_string(),
            status,
            expected: None,
            got: None,
            cite: None,
        }
    }

    pub fn expected(mut self, e: impl ToString) -> Self {
        self.expected = Some(e.to_string());
        self
    }

    pub fn got(mut self, g: impl ToString) -> Self {
        self.got = Some(g.to_string());
        self
    }

    pub fn cite(mut self, c: &Option<String>) -> Self {
        self.cite = c.clone();
        self
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub checks: Vec<Check>,
}

impl EntryReport {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    /// One human-readable line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            out += &format!("{:<12} {:<14} {}", self.id, c.name, status);
            if let Some(got) = &c.got {
                out += &format!(": {got}");
            }
            if c.status == Status::Fail {
                if let Some(e) = &c.expected {
                    out += &format!(" (expected {e})");
                }
            }
            if let Some(cite) = &c.cite {
                out += &format!("  [{cite}]");
            }
            out.push('\n');
        }
        out
    }
}
