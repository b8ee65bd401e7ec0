//! Audit reports: structured verdicts for exhaustive checks.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Outcome of an audited claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The claim was checked to hold on the full stated range.
    Holds,
    /// A counterexample was found; the report carries a witness.
    Fails,
    /// The claim does not constrain these parameters.
    NotApplicable,
    /// A search budget ran out before the range was exhausted.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

/// A concrete object backing a verdict: a vector, a pair of vectors, or a
/// coordinate arrangement (1-indexed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Vector(String),
    VectorPair([String; 2]),
    Arrangement {
        pi_x: Vec<usize>,
        pi_y: Vec<usize>,
    },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Vector(v) => write!(f, "{v}"),
            Witness::VectorPair([a, b]) => write!(f, "{a}, {b}"),
            Witness::Arrangement { pi_x, pi_y } => {
                write!(f, "pi_x={pi_x:?} pi_y={pi_y:?}")
            }
        }
    }
}

/// The full record of one audited claim.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AuditReport {
    /// Stable identifier of the claim, e.g. "prop_3_1".
    pub claim: String,
    /// The parameters the claim was instantiated with.
    pub params: BTreeMap<String, i64>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Quantities the check went through, e.g. how many cases were covered.
    pub counters: BTreeMap<String, i64>,
    pub elapsed_ms: u64,
}

impl AuditReport {
    pub fn new(claim: &str, verdict: Verdict) -> Self {
        AuditReport {
            claim: claim.to_string(),
            params: BTreeMap::new(),
            verdict,
            witness: None,
            counters: BTreeMap::new(),
            elapsed_ms: 0,
        }
    }

    pub fn with_param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn with_counter(mut self, key: &str, value: i64) -> Self {
        self.counters.insert(key.to_string(), value);
        self
    }

    pub fn with_witness(mut self, witness: Witness) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_verdict(mut self, verdict: Verdict) -> Self {
        self.verdict = verdict;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// One-paragraph text rendering for terminals.
    pub fn render_text(&self) -> String {
        let mut out = format!("claim {}", self.claim);
        if !self.params.is_empty() {
            let params: Vec<String> = self
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            out.push_str(&format!(" ({})", params.join(", ")));
        }
        out.push_str(&format!(": {}", self.verdict));
        if let Some(w) = &self.witness {
            out.push_str(&format!("\n  witness: {w}"));
        }
        for (k, v) in &self.counters {
            out.push_str(&format!("\n  {k} = {v}"));
        }
        out.push_str(&format!("\n  elapsed: {} ms", self.elapsed_ms));
        out
    }

    /// Copy with the timing zeroed, for comparing runs byte for byte.
    pub fn timeless(&self) -> AuditReport {
        let mut r = self.clone();
        r.elapsed_ms = 0;
        r
    }
}
