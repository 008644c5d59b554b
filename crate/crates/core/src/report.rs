//! Text and structured rendering of match reports and findings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::matcher::MatchReport;
use crate::process::Finding;

/// Structured output: the report fields at top level plus `findings`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuredReport {
    #[serde(flatten)]
    pub report: MatchReport,
    #[serde(default)]
    pub findings: Vec<Finding>,
}

/// One line per device in catalog order, colors always spelled out. Per-limb
/// colors are listed when the operating limbs disagree.
pub fn render_text(r: &MatchReport, findings: &[Finding]) -> String {
    let mut out = String::new();
    let width = r
        .verdicts
        .iter()
        .map(|v| v.device_id.chars().count())
        .max()
        .unwrap_or(0);
    let _ = writeln!(out, "catalog: {}", r.catalog_version);
    let _ = writeln!(out, "profile: {}", short_digest(&r.profile_digest));
    let _ = writeln!(
        out,
        "summary: green: {}, yellow: {}, red: {}",
        r.summary.green, r.summary.yellow, r.summary.red
    );
    for v in &r.verdicts {
        let pad = width - v.device_id.chars().count();
        let _ = write!(
            out,
            "{}{}  {:<6}  best: {}",
            v.device_id,
            " ".repeat(pad),
            v.color.as_str(),
            v.best
        );
        let mut colors = v.per_limb.values().map(|l| l.color);
        let first = colors.next();
        if colors.any(|c| Some(c) != first) {
            let limbs: Vec<String> = v
                .per_limb
                .iter()
                .map(|(op, l)| format!("{op}={}", l.color))
                .collect();
            let _ = write!(out, "  [{}]", limbs.join(" "));
        }
        if !v.rationale.is_empty() {
            let _ = write!(out, "  ({})", v.rationale.join("; "));
        }
        out.push('\n');
    }
    if !findings.is_empty() {
        out.push_str("findings:\n");
        out.push_str(&render_findings(findings));
    }
    out
}

pub fn render_findings(findings: &[Finding]) -> String {
    findings
        .iter()
        .map(|f| format!("  {:<7}  {}: {}\n", f.severity, f.code, f.message))
        .collect()
}

fn short_digest(d: &str) -> &str {
    d.get(..12).unwrap_or(d)
}

pub fn render_structured(r: &MatchReport, findings: &[Finding]) -> String {
    let doc = StructuredReport {
        report: r.clone(),
        findings: findings.to_vec(),
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}

pub fn parse_structured(text: &str) -> Result<StructuredReport, serde_json::Error> {
    serde_json::from_str(text)
}
