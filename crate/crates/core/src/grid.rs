//! Evaluation grids and the support reparameterizations used for plotting.
//!
//! A grid is a set of nodes `(t, x)`: `t` is the plotting parameter, ordered
//! ascending, and `x` the point in the distribution's support. The standard
//! reparameterizations are
//!
//! | kind                 | map                | support       |
//! |----------------------|--------------------|---------------|
//! | `half-line`          | `x = t / (1 - t)`  | `[0, ∞)`      |
//! | `reciprocal`         | `x = 1 / t`        | `[1, ∞)`      |
//! | `negative-half-line` | `x = t / (1 + t)`  | `(-∞, 0]`     |
//! | `interval`           | `x = t`            | `[lo, hi]`    |
//!
//! with `t` spaced uniformly and both ends trimmed by `trim`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_POINTS: usize = 2000;
pub const DEFAULT_TRIM: f64 = 1e-3;

fn one() -> f64 {
    1.0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GridKind {
    /// `x = origin + t/(1-t)`, `t ∈ [trim, 1-trim]`.
    HalfLine {
        #[serde(default)]
        origin: f64,
    },
    /// `x = scale/t`, `t ∈ [trim, 1-trim]`.
    Reciprocal {
        #[serde(default = "one")]
        scale: f64,
    },
    /// `x = origin + t/(1+t)`, `t ∈ [-1+trim, -trim]`.
    NegativeHalfLine {
        #[serde(default)]
        origin: f64,
    },
    /// `x = t`, `t` uniform on `[lo, hi]` shrunk by `trim·(hi-lo)` at each end.
    Interval { lo: f64, hi: f64 },
    /// `x = t`, `t` uniform on `[trim, 1-trim]`. Used for probability grids.
    Unit,
    /// `x = lo·(hi/lo)^t`, `t` uniform on `[0, 1]`; no trimming.
    LogSpaced { lo: f64, hi: f64 },
    /// Caller-provided abscissae, `t = x`.
    Explicit { values: Vec<f64> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    #[serde(flatten)]
    pub kind: GridKind,
    #[serde(default = "default_points")]
    pub points: usize,
    #[serde(default = "default_trim")]
    pub trim: f64,
}

fn default_points() -> usize {
    DEFAULT_POINTS
}

fn default_trim() -> f64 {
    DEFAULT_TRIM
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridNode {
    pub t: f64,
    pub x: f64,
}

impl Grid {
    pub fn new(kind: GridKind, points: usize) -> Self {
        Grid {
            kind,
            points,
            trim: DEFAULT_TRIM,
        }
    }

    pub fn half_line(points: usize) -> Self {
        Self::new(GridKind::HalfLine { origin: 0.0 }, points)
    }

    pub fn reciprocal(points: usize) -> Self {
        Self::new(GridKind::Reciprocal { scale: 1.0 }, points)
    }

    pub fn negative_half_line(points: usize) -> Self {
        Self::new(GridKind::NegativeHalfLine { origin: 0.0 }, points)
    }

    pub fn interval(lo: f64, hi: f64, points: usize) -> Self {
        Self::new(GridKind::Interval { lo, hi }, points)
    }

    pub fn unit(points: usize) -> Self {
        Self::new(GridKind::Unit, points)
    }

    pub fn log_spaced(lo: f64, hi: f64, points: usize) -> Self {
        Self::new(GridKind::LogSpaced { lo, hi }, points)
    }

    pub fn explicit(values: Vec<f64>) -> Self {
        let points = values.len();
        Self::new(GridKind::Explicit { values }, points)
    }

    pub fn with_trim(mut self, trim: f64) -> Self {
        self.trim = trim;
        self
    }

    /// The reparameterization matching a support interval.
    pub fn for_support(lo: f64, hi: f64, points: usize) -> Self {
        match (lo.is_finite(), hi.is_finite()) {
            (true, true) => Self::interval(lo, hi, points),
            (true, false) if lo > 0.0 => Self::new(GridKind::Reciprocal { scale: lo }, points),
            (true, false) => Self::new(GridKind::HalfLine { origin: lo }, points),
            (false, true) => Self::new(GridKind::NegativeHalfLine { origin: hi }, points),
            (false, false) => Self::unit(points),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let GridKind::Explicit { values } = &self.kind {
            if values.is_empty() {
                return Err(Error::Argument("grid is empty".into()));
            }
            if values.iter().any(|v| !v.is_finite()) {
                return Err(Error::Argument("grid contains non-finite values".into()));
            }
            return Ok(());
        }
        if self.points == 0 {
            return Err(Error::Argument("grid is empty".into()));
        }
        if !(0.0..0.5).contains(&self.trim) {
            return Err(Error::Argument(format!("grid trim {} not in [0, 0.5)", self.trim)));
        }
        match self.kind {
            GridKind::Interval { lo, hi } if !(lo.is_finite() && hi.is_finite() && lo < hi) => {
                Err(Error::Argument(format!("interval grid [{lo}, {hi}] is invalid")))
            }
            GridKind::LogSpaced { lo, hi } if !(lo > 0.0 && hi > lo && hi.is_finite()) => Err(
                Error::Argument(format!("log-spaced grid [{lo}, {hi}] is invalid")),
            ),
            GridKind::Reciprocal { scale } if !(scale > 0.0) => Err(Error::Argument(format!(
                "reciprocal grid scale {scale} must be positive"
            ))),
            _ => Ok(()),
        }
    }

    fn ts(&self, lo: f64, hi: f64) -> Vec<f64> {
        let n = self.points;
        if n == 1 {
            return vec![0.5 * (lo + hi)];
        }
        (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect()
    }

    /// Grid nodes ordered by ascending `t`.
    pub fn nodes(&self) -> Vec<GridNode> {
        let trim = self.trim;
        let node = |t: f64, x: f64| GridNode { t, x };
        match &self.kind {
            GridKind::HalfLine { origin } => self
                .ts(trim, 1.0 - trim)
                .into_iter()
                .map(|t| node(t, origin + t / (1.0 - t)))
                .collect(),
            GridKind::Reciprocal { scale } => self
                .ts(trim, 1.0 - trim)
                .into_iter()
                .map(|t| node(t, scale / t))
                .collect(),
            GridKind::NegativeHalfLine { origin } => self
                .ts(-1.0 + trim, -trim)
                .into_iter()
                .map(|t| node(t, origin + t / (1.0 + t)))
                .collect(),
            GridKind::Interval { lo, hi } => {
                let pad = trim * (hi - lo);
                self.ts(lo + pad, hi - pad)
                    .into_iter()
                    .map(|t| node(t, t))
                    .collect()
            }
            GridKind::Unit => self
                .ts(trim, 1.0 - trim)
                .into_iter()
                .map(|t| node(t, t))
                .collect(),
            GridKind::LogSpaced { lo, hi } => {
                let ratio = (hi / lo).ln();
                self.ts(0.0, 1.0)
                    .into_iter()
                    .map(|t| node(t, lo * (t * ratio).exp()))
                    .collect()
            }
            GridKind::Explicit { values } => values.iter().map(|&x| node(x, x)).collect(),
        }
    }

    /// Support points sorted ascending, duplicates removed.
    pub fn xs_ascending(&self) -> Vec<f64> {
        let mut xs: Vec<f64> = self.nodes().into_iter().map(|n| n.x).collect();
        xs.sort_by(|a, b| a.total_cmp(b));
        xs.dedup();
        xs
    }

    /// Short human-readable descriptor, used in report headers.
    pub fn describe(&self) -> String {
        let body = match &self.kind {
            GridKind::HalfLine { origin } if *origin == 0.0 => "x=t/(1-t)".to_string(),
            GridKind::HalfLine { origin } => format!("x={origin}+t/(1-t)"),
            GridKind::Reciprocal { scale } if *scale == 1.0 => "x=1/t".to_string(),
            GridKind::Reciprocal { scale } => format!("x={scale}/t"),
            GridKind::NegativeHalfLine { origin } if *origin == 0.0 => "x=t/(1+t)".to_string(),
            GridKind::NegativeHalfLine { origin } => format!("x={origin}+t/(1+t)"),
            GridKind::Interval { lo, hi } => format!("x=t on [{lo}, {hi}]"),
            GridKind::Unit => "u=t on (0, 1)".to_string(),
            GridKind::LogSpaced { lo, hi } => format!("log-spaced on [{lo}, {hi}]"),
            GridKind::Explicit { .. } => "explicit".to_string(),
        };
        match &self.kind {
            GridKind::Explicit { values } => format!("{body}, {} points", values.len()),
            GridKind::LogSpaced { .. } => format!("{body}, {} points", self.points),
            _ => format!("{body}, {} points, trim {}", self.points, self.trim),
        }
    }
}
