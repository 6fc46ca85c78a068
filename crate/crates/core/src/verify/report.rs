//! Structured results of verification runs and their text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// Bumped whenever a field is added, removed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

/// One graph in a ranking or attainer list. `graph6` is the canonical form,
/// so it doubles as the canonical key.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankedGraph {
    pub graph6: String,
    pub wiener: u64,
    /// Matched family in text form, or `None` when unnamed.
    pub family: Option<String>,
}

/// Graphs sharing one Wiener value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tier {
    pub wiener: u64,
    pub members: Vec<RankedGraph>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankingReport {
    pub class: String,
    pub class_size: usize,
    /// Highest tiers first; may be truncated to the top few.
    pub tiers: Vec<Tier>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Extreme {
    Min,
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatioReport {
    pub class: String,
    pub class_size: usize,
    /// What was optimized, e.g. `Sz/W`.
    pub quantity: String,
    pub extreme: Extreme,
    pub value: Rational,
    pub attainers: Vec<RankedGraph>,
    pub bound: Rational,
    pub matches: bool,
}

/// One named assertion inside a theorem check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A graph that violates a check, with both sides of the failed comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: String,
    pub graph6: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremResult {
    pub id: String,
    pub n: Option<usize>,
    pub passed: bool,
    /// The class scanned, when a single class is involved.
    pub class: Option<String>,
    pub bound: Option<Rational>,
    pub attainers: Vec<String>,
    pub checks: Vec<Check>,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ranking: Option<RankingReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ratio: Option<RatioReport>,
    /// Marks runs outside the default scope (full cyclic sweeps).
    #[serde(skip_serializing_if = "std::ops::Not::not", default)]
    pub stretch: bool,
    /// Wall-clock time; only recorded on request so reports stay byte-stable.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runtime_ms: Option<u64>,
}

impl TheoremResult {
    pub fn new(id: impl Into<String>, n: Option<usize>) -> TheoremResult {
        TheoremResult {
            id: id.into(),
            n,
            passed: true,
            class: None,
            bound: None,
            attainers: Vec::new(),
            checks: Vec::new(),
            witnesses: Vec::new(),
            ranking: None,
            ratio: None,
            stretch: false,
            runtime_ms: None,
        }
    }

    /// Records a check. A failure without explicit witnesses still gets one,
    /// carrying the detail text.
    pub fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) -> bool {
        let detail = detail.into();
        if !passed {
            self.passed = false;
            if !self.witnesses.iter().any(|w| w.check == name) {
                self.witnesses.push(Witness {
                    check: name.to_string(),
                    graph6: None,
                    detail: detail.clone(),
                });
            }
        }
        self.checks.push(Check {
            name: name.to_string(),
            passed,
            detail,
        });
        passed
    }

    /// Records a counterexample graph; call before the matching [`check`](Self::check).
    pub fn witness(&mut self, check: &str, graph6: impl Into<String>, detail: impl Into<String>) {
        const MAX_WITNESSES: usize = 20;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(Witness {
                check: check.to_string(),
                graph6: Some(graph6.into()),
                detail: detail.into(),
            });
        }
    }

    pub fn label(&self) -> String {
        match self.n {
            Some(n) => format!("{} n={n}", self.id),
            None => self.id.clone(),
        }
    }
}

/// Everything one CLI invocation produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub command: String,
    pub seed: Option<u64>,
    pub guards: serde_json::Value,
    pub results: Vec<TheoremResult>,
}

impl ReportDocument {
    pub fn new(command: impl Into<String>, seed: Option<u64>, guards: serde_json::Value) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            seed,
            guards,
            results: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Compact human-readable summary: one line per result, then the checks.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let width = self.results.iter().map(|r| r.label().len()).max().unwrap_or(0).max(8);
        for r in &self.results {
            let verdict = if r.passed { "PASS" } else { "FAIL" };
            let bound = r.bound.map(|b| format!("  bound {b}")).unwrap_or_default();
            let _ = writeln!(out, "{verdict}  {:<width$}{bound}", r.label());
            for c in &r.checks {
                let mark = if c.passed { "ok " } else { "BAD" };
                let _ = writeln!(out, "      {mark} {}: {}", c.name, c.detail);
            }
            if let Some(rank) = &r.ranking {
                let _ = writeln!(out, "      ranking of {} ({} graphs):", rank.class, rank.class_size);
                out.push_str(&ranking_table(rank, "        "));
            }
            if let Some(ratio) = &r.ratio {
                let names: Vec<String> = ratio.attainers.iter().map(display_name).collect();
                let _ = writeln!(
                    out,
                    "      {:?} {} over {} ({} graphs) = {} by {}",
                    ratio.extreme,
                    ratio.quantity,
                    ratio.class,
                    ratio.class_size,
                    ratio.value,
                    names.join(", ")
                );
            }
            for w in &r.witnesses {
                let g = w.graph6.as_deref().unwrap_or("-");
                let _ = writeln!(out, "      witness [{}] {g}: {}", w.check, w.detail);
            }
        }
        out
    }
}

fn display_name(g: &RankedGraph) -> String {
    match &g.family {
        Some(f) => format!("{f} ({})", g.graph6),
        None => g.graph6.clone(),
    }
}

/// Rank, W and members of each tier, one line per tier.
pub fn ranking_table(rank: &RankingReport, indent: &str) -> String {
    let mut out = String::new();
    for (i, t) in rank.tiers.iter().enumerate() {
        let names: Vec<String> = t.members.iter().map(display_name).collect();
        let _ = writeln!(out, "{indent}{:>3}  W={:<6} {}", i + 1, t.wiener, names.join(", "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_check_always_has_a_witness() {
        let mut r = TheoremResult::new("thm2.3", Some(5));
        assert!(r.check("min", true, "8/7"));
        assert!(r.passed && r.witnesses.is_empty());
        r.witness("unique", "DQc", "second attainer");
        assert!(!r.check("unique", false, "2 attainers"));
        assert!(!r.check("bound", false, "7/6 != 8/7"));
        assert!(!r.passed);
        assert_eq!(r.witnesses.len(), 2);
        assert_eq!(r.witnesses[0].graph6.as_deref(), Some("DQc"));
    }

    #[test]
    fn json_is_stable_and_round_trips() {
        let mut doc = ReportDocument::new("verify thm2.3 --n 5", None, serde_json::json!({"max_connected": 9}));
        let mut r = TheoremResult::new("thm2.3", Some(5));
        r.bound = Some(Rational::new(8, 7));
        r.check("min", true, "ok");
        doc.results.push(r);
        let a = doc.to_json();
        assert_eq!(a, doc.to_json());
        assert!(a.contains("\"bound\": \"8/7\""));
        assert!(!a.contains("runtime_ms"));
        let back: ReportDocument = serde_json::from_str(&a).unwrap();
        assert_eq!(back, doc);
        assert!(doc.to_table().starts_with("PASS  thm2.3 n=5"));
    }
}
