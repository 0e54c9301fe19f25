//! Shared density bookkeeping: counting reports, fixed-slack comparisons
//! against predicted bounds, and the prime-counting sanity ratio.
//!
//! Tolerances are fixed globally: 0.05 for "approximately equal", 0.03
//! sampling slack for "at least", and strict positivity for ">0". The
//! claims being checked are asymptotic; fixed desk-scale slack makes
//! PASS/FAIL reproducible.

use crate::nf::primes_up_to;
use crate::{Error, Result};
use serde::Serialize;

/// Slack for the ≈ relation.
pub const APPROX_TOLERANCE: f64 = 0.05;
/// Sampling slack subtracted from the ≥ relation's bound.
pub const AT_LEAST_SLACK: f64 = 0.03;
/// Minimum certified sample size for a comparison to mean anything.
pub const MIN_SAMPLE: u64 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Relation {
    #[serde(rename = "approx")]
    Approx,
    #[serde(rename = "at_least")]
    AtLeast,
    #[serde(rename = "positive")]
    Positive,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PredictedBound {
    pub value: f64,
    pub relation: Relation,
}

impl PredictedBound {
    pub fn approx(value: f64) -> Self {
        PredictedBound {
            value,
            relation: Relation::Approx,
        }
    }
    pub fn at_least(value: f64) -> Self {
        PredictedBound {
            value,
            relation: Relation::AtLeast,
        }
    }
    pub fn positive() -> Self {
        PredictedBound {
            value: 0.0,
            relation: Relation::Positive,
        }
    }
}

/// A labelled counting outcome over primes up to x.
#[derive(Clone, Debug, Serialize)]
pub struct DensityReport {
    pub label: String,
    pub x: u64,
    pub hits: u64,
    pub total: u64,
    pub fraction: Option<f64>,
    pub predicted: Option<PredictedBound>,
}

impl DensityReport {
    pub fn new(label: impl Into<String>, x: u64, hits: u64, total: u64) -> Result<Self> {
        if hits > total {
            return Err(Error::Precondition(format!(
                "hits {} exceed total {}",
                hits, total
            )));
        }
        Ok(DensityReport {
            label: label.into(),
            x,
            hits,
            total,
            fraction: (total > 0).then(|| hits as f64 / total as f64),
            predicted: None,
        })
    }

    pub fn with_bound(mut self, bound: PredictedBound) -> Self {
        self.predicted = Some(bound);
        self
    }

    /// Merge with a report over a disjoint prime range.
    pub fn merge(&self, other: &DensityReport) -> Result<DensityReport> {
        DensityReport::new(
            self.label.clone(),
            self.x.max(other.x),
            self.hits + other.hits,
            self.total + other.total,
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    Insufficient,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub verdict: Verdict,
    /// Signed distance to the bound; positive means margin, negative deficit.
    pub slack: f64,
}

/// Compare a report's fraction against a predicted bound with the fixed
/// global tolerances. Undersized samples are reported as insufficient.
pub fn compare(report: &DensityReport, bound: &PredictedBound) -> Comparison {
    if report.total < MIN_SAMPLE {
        return Comparison {
            verdict: Verdict::Insufficient,
            slack: 0.0,
        };
    }
    let f = report.fraction.unwrap_or(0.0);
    let (pass, slack) = match bound.relation {
        Relation::Approx => {
            let dev = (f - bound.value).abs();
            (dev <= APPROX_TOLERANCE, APPROX_TOLERANCE - dev)
        }
        Relation::AtLeast => {
            let margin = f - (bound.value - AT_LEAST_SLACK);
            (margin >= 0.0, margin)
        }
        Relation::Positive => (f > 0.0, f),
    };
    Comparison {
        verdict: if pass { Verdict::Pass } else { Verdict::Fail },
        slack,
    }
}

/// π(x) / (x / log x); lands in [0.9, 1.25] for 10³ ≤ x ≤ 10⁷.
pub fn prime_counting_sanity(x: u64) -> Result<f64> {
    if x < 1_000 {
        return Err(Error::Precondition("x must be at least 1000".into()));
    }
    let pi = primes_up_to(x).len() as f64;
    Ok(pi / (x as f64 / (x as f64).ln()))
}
