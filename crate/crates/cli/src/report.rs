//! Machine-readable sweep reports.
//!
//! A report carries everything needed to reproduce and audit a sweep: the
//! task name, the exact parameter ranges, how many instances were examined,
//! and every counterexample as a graph6 string with the parameters it
//! failed under. The verdict is derived, never stored independently:
//! pass if and only if no counterexamples.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// graph6 encoding of the offending graph (before any join).
    pub graph6: String,
    /// The parameters the claim failed under, e.g. n, t, r.
    pub params: BTreeMap<String, String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub task: String,
    pub params: BTreeMap<String, String>,
    pub graphs_checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    pub verdict: Verdict,
}

impl VerificationReport {
    /// Seal a finished sweep. Counterexamples are sorted for bit-identical
    /// output regardless of worker interleaving.
    pub fn new(
        task: &str,
        params: BTreeMap<String, String>,
        graphs_checked: u64,
        mut counterexamples: Vec<Counterexample>,
        elapsed: Duration,
    ) -> Self {
        counterexamples.sort_by(|a, b| (&a.params, &a.graph6).cmp(&(&b.params, &b.graph6)));
        let verdict = if counterexamples.is_empty() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationReport {
            task: task.to_string(),
            params,
            graphs_checked,
            counterexamples,
            elapsed_ms: elapsed.as_millis() as u64,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// One-line human summary; the JSON form carries the full detail.
    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} checked, {} counterexamples, {} ms)",
            self.task,
            self.verdict,
            self.graphs_checked,
            self.counterexamples.len(),
            self.elapsed_ms
        )
    }
}

/// Convenience for building string-keyed parameter maps.
pub fn param_map<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_follows_counterexamples() {
        let ok = VerificationReport::new("demo", BTreeMap::new(), 5, vec![], Duration::ZERO);
        assert!(ok.passed());
        let bad = VerificationReport::new(
            "demo",
            BTreeMap::new(),
            5,
            vec![Counterexample {
                graph6: "D?{".into(),
                params: BTreeMap::new(),
            }],
            Duration::ZERO,
        );
        assert!(!bad.passed());
        assert!(bad.summary().contains("fail"));
    }

    #[test]
    fn counterexamples_are_sorted() {
        let ce = |g6: &str, t: usize| Counterexample {
            graph6: g6.into(),
            params: param_map([("t", t.to_string())]),
        };
        let r = VerificationReport::new(
            "demo",
            BTreeMap::new(),
            2,
            vec![ce("Bw", 3), ce("A_", 1), ce("A_", 0)],
            Duration::ZERO,
        );
        let order: Vec<&str> = r.counterexamples.iter().map(|c| c.graph6.as_str()).collect();
        assert_eq!(order, ["A_", "A_", "Bw"]);
        assert!(r.counterexamples[0].params["t"] < r.counterexamples[1].params["t"]);
    }

    #[test]
    fn json_round_trip() {
        let r = VerificationReport::new(
            "demo",
            param_map([("nmax", "5".to_string())]),
            7,
            vec![],
            Duration::from_millis(12),
        );
        let text = serde_json::to_string(&r).unwrap();
        let back: VerificationReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back.verdict, Verdict::Pass);
        assert_eq!(back.graphs_checked, 7);
        assert_eq!(back.params["nmax"], "5");
    }
}
