//! Three-valued verdicts, monotonicity classification and condition reports.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    Violated,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Violated => "VIOLATED",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// A grid location where an inequality failed, with the signed slack
/// (positive = violated by that amount).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub x: f64,
    pub slack: f64,
}

/// One evaluated point of an inequality `slack <= tol`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct SlackPoint {
    pub x: f64,
    pub slack: f64,
    pub tol: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlackScan {
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    /// Largest `slack - tol` over the evaluated points; `<= 0` exactly when
    /// every point is within tolerance.
    pub max_violation: f64,
    pub evaluated: usize,
    pub skipped: usize,
}

/// Scans a sequence of slacks in grid order.
///
/// A violation only counts when at least two consecutive evaluated points
/// exceed their tolerance; isolated exceedances make the result
/// inconclusive instead of violated.
pub(crate) fn scan_slacks<I>(points: I) -> SlackScan
where
    I: IntoIterator<Item = SlackPoint>,
{
    let mut witnesses = Vec::new();
    let mut max_violation = f64::NEG_INFINITY;
    let (mut evaluated, mut skipped) = (0usize, 0usize);
    let mut isolated = 0usize;
    let mut pending: Option<Witness> = None;
    let mut in_run = false;

    for p in points {
        if !(p.slack.is_finite() && p.tol.is_finite()) {
            skipped += 1;
            continue;
        }
        evaluated += 1;
        let excess = p.slack - p.tol;
        max_violation = max_violation.max(excess);
        if excess > 0.0 {
            let w = Witness {
                x: p.x,
                slack: p.slack,
            };
            if in_run {
                witnesses.push(w);
            } else if let Some(prev) = pending.take() {
                witnesses.push(prev);
                witnesses.push(w);
                in_run = true;
            } else {
                pending = Some(w);
            }
        } else {
            if pending.take().is_some() {
                isolated += 1;
            }
            in_run = false;
        }
    }
    if pending.is_some() {
        isolated += 1;
    }

    let verdict = if evaluated == 0 {
        Verdict::Inconclusive
    } else if !witnesses.is_empty() {
        Verdict::Violated
    } else if isolated > 0 {
        Verdict::Inconclusive
    } else {
        Verdict::Holds
    };
    SlackScan {
        verdict,
        witnesses,
        max_violation: if evaluated == 0 { f64::NAN } else { max_violation },
        evaluated,
        skipped,
    }
}

/// Combines scans of the same inequality taken along several sequences
/// (for example one per stride). Violated beats inconclusive beats holds.
pub(crate) fn merge_scans(scans: Vec<SlackScan>) -> SlackScan {
    let verdict = if scans.iter().any(|s| s.verdict == Verdict::Violated) {
        Verdict::Violated
    } else if scans.is_empty() || scans.iter().any(|s| s.verdict == Verdict::Inconclusive) {
        Verdict::Inconclusive
    } else {
        Verdict::Holds
    };
    let max_violation = scans
        .iter()
        .map(|s| s.max_violation)
        .filter(|v| !v.is_nan())
        .fold(f64::NAN, f64::max);
    SlackScan {
        verdict,
        witnesses: scans.iter().flat_map(|s| s.witnesses.iter().copied()).collect(),
        max_violation,
        evaluated: scans.iter().map(|s| s.evaluated).sum(),
        skipped: scans.iter().map(|s| s.skipped).sum(),
    }
}

/// Scans consecutive steps of a sampled series for monotonicity. A step
/// against the requested direction is a violation once it exceeds
/// `rel_tol · (1 + |level|)`.
pub(crate) fn monotone_scan(xs: &[f64], values: &[f64], increasing: bool, rel_tol: f64) -> SlackScan {
    scan_slacks(xs.windows(2).zip(values.windows(2)).map(|(x, v)| {
        let step = v[1] - v[0];
        SlackPoint {
            x: x[0],
            slack: if increasing { -step } else { step },
            tol: rel_tol * (1.0 + v[0].abs().max(v[1].abs())),
        }
    }))
}

/// Monotonicity class of a sampled function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Trend {
    Increasing,
    Decreasing,
    Constant,
    Neither,
}

impl Trend {
    /// Weak reading: a constant function counts as both increasing and
    /// decreasing.
    pub fn is_nondecreasing(self) -> bool {
        matches!(self, Trend::Increasing | Trend::Constant)
    }

    pub fn is_nonincreasing(self) -> bool {
        matches!(self, Trend::Decreasing | Trend::Constant)
    }
}

impl fmt::Display for Trend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Trend::Increasing => "increasing",
            Trend::Decreasing => "decreasing",
            Trend::Constant => "constant",
            Trend::Neither => "neither",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrendReport {
    pub trend: Trend,
    /// Largest step up between consecutive points.
    pub max_rise: f64,
    /// Largest step down between consecutive points (reported positive).
    pub max_fall: f64,
    /// First location of a step against the reported trend, if any.
    pub rise_at: Option<f64>,
    pub fall_at: Option<f64>,
    pub points: usize,
}

/// Classifies `values` (sampled at ascending `xs`) by the signs of
/// consecutive differences. A step counts only when its magnitude exceeds
/// `rel_tol · (1 + |level|)`. Non-finite samples are dropped.
pub fn classify_trend(xs: &[f64], values: &[f64], rel_tol: f64) -> TrendReport {
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(values)
        .filter(|(x, v)| x.is_finite() && v.is_finite())
        .map(|(&x, &v)| (x, v))
        .collect();
    let (mut max_rise, mut max_fall) = (0.0f64, 0.0f64);
    let (mut rise_at, mut fall_at) = (None, None);
    for w in pts.windows(2) {
        let (x0, v0) = w[0];
        let (_, v1) = w[1];
        let d = v1 - v0;
        let tol = rel_tol * (1.0 + v0.abs().max(v1.abs()));
        if d > tol {
            rise_at.get_or_insert(x0);
            max_rise = max_rise.max(d);
        } else if d < -tol {
            fall_at.get_or_insert(x0);
            max_fall = max_fall.max(-d);
        }
    }
    let trend = match (rise_at.is_some(), fall_at.is_some()) {
        (true, true) => Trend::Neither,
        (true, false) => Trend::Increasing,
        (false, true) => Trend::Decreasing,
        (false, false) => Trend::Constant,
    };
    TrendReport {
        trend,
        max_rise,
        max_fall,
        rise_at,
        fall_at,
        points: pts.len(),
    }
}

/// A single named hypothesis and its verdict.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HypothesisResult {
    pub name: String,
    pub verdict: Verdict,
    pub evidence: String,
}

impl HypothesisResult {
    pub fn new(name: impl Into<String>, verdict: Verdict, evidence: impl Into<String>) -> Self {
        HypothesisResult {
            name: name.into(),
            verdict,
            evidence: evidence.into(),
        }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, evidence: impl Into<String>) -> Self {
        let verdict = if ok { Verdict::Holds } else { Verdict::Violated };
        Self::new(name, verdict, evidence)
    }
}

/// Verdicts for a list of hypotheses; `all_pass` iff every verdict holds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub subject: String,
    pub theorem: Option<String>,
    pub hypotheses: Vec<HypothesisResult>,
    pub all_pass: bool,
}

impl ConditionReport {
    pub fn new(subject: impl Into<String>, hypotheses: Vec<HypothesisResult>) -> Self {
        let all_pass = hypotheses.iter().all(|h| h.verdict == Verdict::Holds);
        ConditionReport {
            subject: subject.into(),
            theorem: None,
            hypotheses,
            all_pass,
        }
    }

    pub fn with_theorem(mut self, theorem: impl Into<String>) -> Self {
        self.theorem = Some(theorem.into());
        self
    }

    pub fn get(&self, name: &str) -> Option<&HypothesisResult> {
        self.hypotheses.iter().find(|h| h.name == name)
    }

    pub fn failed(&self) -> impl Iterator<Item = &HypothesisResult> {
        self.hypotheses.iter().filter(|h| h.verdict != Verdict::Holds)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(slacks: &[f64]) -> Vec<SlackPoint> {
        slacks
            .iter()
            .enumerate()
            .map(|(i, &s)| SlackPoint {
                x: i as f64,
                slack: s,
                tol: 1e-8,
            })
            .collect()
    }

    #[test]
    fn all_within_tolerance_holds() {
        let scan = scan_slacks(pts(&[-1.0, 0.0, 5e-9, -3.0]));
        assert_eq!(scan.verdict, Verdict::Holds);
        assert!(scan.max_violation <= 0.0);
        assert!(scan.witnesses.is_empty());
    }

    #[test]
    fn isolated_spike_is_inconclusive() {
        let scan = scan_slacks(pts(&[-1.0, 1.0, -1.0, -1.0]));
        assert_eq!(scan.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn consecutive_run_is_violation_with_witnesses() {
        let scan = scan_slacks(pts(&[-1.0, 1.0, 2.0, 3.0, -1.0, 0.5]));
        assert_eq!(scan.verdict, Verdict::Violated);
        let xs: Vec<f64> = scan.witnesses.iter().map(|w| w.x).collect();
        assert_eq!(xs, vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn trend_classification() {
        let xs: Vec<f64> = (0..10).map(f64::from).collect();
        let up: Vec<f64> = xs.iter().map(|x| x * x).collect();
        assert_eq!(classify_trend(&xs, &up, 1e-9).trend, Trend::Increasing);
        let flat = vec![0.5; 10];
        assert_eq!(classify_trend(&xs, &flat, 1e-9).trend, Trend::Constant);
        let wave: Vec<f64> = xs.iter().map(|x| x.sin()).collect();
        assert_eq!(classify_trend(&xs, &wave, 1e-9).trend, Trend::Neither);
    }

    #[test]
    fn condition_report_all_pass() {
        let r = ConditionReport::new(
            "t",
            vec![
                HypothesisResult::from_bool("a", true, ""),
                HypothesisResult::new("b", Verdict::Inconclusive, ""),
            ],
        );
        assert!(!r.all_pass);
        assert_eq!(r.failed().count(), 1);
    }
}
