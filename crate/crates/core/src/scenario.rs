//! Scenario files: one comparison of two sample extremes with the checks to
//! run and the outcome expected.
//!
//! ```toml
//! id = "my-case"
//! kind = "min"
//! checks = ["dispersive", "3.1"]
//!
//! [baseline]
//! family = "weibull-survival"
//! params = [1.0, 0.3]
//!
//! [x]
//! alphas = [0.34, 0.65, 1.23]
//! generator = { family = "nelsen-4-2-19", params = [5.0] }
//!
//! [y]
//! alpha = 0.88
//! generator = { family = "nelsen-4-2-19", params = [5.0] }
//!
//! [grid]
//! kind = "half-line"
//!
//! [expect]
//! dispersive = "le"
//! hypotheses = { "3.1" = true }
//! ```
//!
//! `x` is the heterogeneous sample, `y` the homogeneous one. `y.alpha` may be
//! the string `"mean"` for the mean of `x.alphas`, and `y.n` defaults to the
//! size of `x`. Either sample may carry its own `baseline` table; otherwise
//! the top-level one is shared. Unknown keys are rejected.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::Deserialize;

use crate::baselines::BaselineSpec;
use crate::error::Error;
use crate::extremes::{ExtremeKind, POSampleSpec};
use crate::generators::GeneratorSpec;
use crate::grid::{Grid, GridKind, DEFAULT_POINTS, DEFAULT_TRIM};
use crate::order_checks::{Relation, TheoremId};

/// A scenario file that could not be read or does not describe a valid
/// comparison. `field` is the dotted path of the offending key when known.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioError {
    pub field: Option<String>,
    pub message: String,
}

impl ScenarioError {
    fn at(field: impl Into<String>, message: impl fmt::Display) -> Self {
        ScenarioError {
            field: Some(field.into()),
            message: message.to_string(),
        }
    }
}

impl fmt::Display for ScenarioError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.field {
            Some(field) => write!(f, "{field}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ScenarioError {}

impl From<ScenarioError> for Error {
    fn from(e: ScenarioError) -> Self {
        Error::Argument(e.to_string())
    }
}

// ---- raw file layout ------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    id: String,
    #[serde(default)]
    title: Option<String>,
    #[serde(default)]
    figure: Option<String>,
    kind: ExtremeKind,
    #[serde(default)]
    checks: Vec<String>,
    #[serde(default)]
    notes: Option<String>,
    #[serde(default)]
    baseline: Option<RawBaseline>,
    x: RawX,
    y: RawY,
    #[serde(default)]
    grid: Option<RawGrid>,
    #[serde(default)]
    expect: Option<RawExpect>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBaseline {
    family: String,
    #[serde(default)]
    params: Vec<f64>,
    #[serde(default)]
    support: Option<[f64; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    family: String,
    #[serde(default)]
    params: Vec<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawX {
    alphas: Vec<f64>,
    generator: RawGenerator,
    #[serde(default)]
    baseline: Option<RawBaseline>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawAlpha {
    Value(f64),
    Keyword(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawY {
    alpha: RawAlpha,
    #[serde(default)]
    n: Option<usize>,
    generator: RawGenerator,
    #[serde(default)]
    baseline: Option<RawBaseline>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    kind: String,
    #[serde(default)]
    points: Option<usize>,
    #[serde(default)]
    trim: Option<f64>,
    #[serde(default)]
    origin: Option<f64>,
    #[serde(default)]
    scale: Option<f64>,
    #[serde(default)]
    lo: Option<f64>,
    #[serde(default)]
    hi: Option<f64>,
    #[serde(default)]
    values: Option<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawExpect {
    #[serde(default)]
    dispersive: Option<Relation>,
    #[serde(default)]
    star: Option<Relation>,
    #[serde(default)]
    hypotheses: BTreeMap<String, bool>,
}

// ---- validated form -------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Dispersive,
    Star,
    Theorem(TheoremId),
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Dispersive => f.write_str("dispersive"),
            Check::Star => f.write_str("star"),
            Check::Theorem(t) => write!(f, "{t}"),
        }
    }
}

/// Declared outcome of a scenario run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Expectation {
    pub dispersive: Option<Relation>,
    pub star: Option<Relation>,
    pub hypotheses: Vec<(TheoremId, bool)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub id: String,
    pub title: Option<String>,
    pub figure: Option<String>,
    pub kind: ExtremeKind,
    /// The heterogeneous sample.
    pub x: POSampleSpec,
    /// The homogeneous sample.
    pub y: POSampleSpec,
    pub checks: Vec<Check>,
    pub grid: Grid,
    pub expect: Expectation,
    pub notes: Option<String>,
}

fn baseline_from(raw: &RawBaseline, field: &str) -> Result<BaselineSpec, ScenarioError> {
    let b = BaselineSpec::from_id(&raw.family, &raw.params).map_err(|e| ScenarioError::at(field, e))?;
    match raw.support {
        Some([lo, hi]) => b
            .with_support(lo, hi)
            .map_err(|e| ScenarioError::at(format!("{field}.support"), e)),
        None => Ok(b),
    }
}

fn generator_from(raw: &RawGenerator, field: &str) -> Result<GeneratorSpec, ScenarioError> {
    GeneratorSpec::from_id(&raw.family, &raw.params).map_err(|e| ScenarioError::at(field, e))
}

fn grid_from(raw: &RawGrid, baseline: &BaselineSpec) -> Result<Grid, ScenarioError> {
    let points = raw.points.unwrap_or(DEFAULT_POINTS);
    let need = |v: Option<f64>, name: &str| {
        v.ok_or_else(|| ScenarioError::at(format!("grid.{name}"), format!("required for kind '{}'", raw.kind)))
    };
    let kind = match raw.kind.as_str() {
        "natural" => baseline.natural_grid(points).kind,
        "half-line" => GridKind::HalfLine {
            origin: raw.origin.unwrap_or(0.0),
        },
        "reciprocal" => GridKind::Reciprocal {
            scale: raw.scale.unwrap_or(1.0),
        },
        "negative-half-line" => GridKind::NegativeHalfLine {
            origin: raw.origin.unwrap_or(0.0),
        },
        "interval" => GridKind::Interval {
            lo: need(raw.lo, "lo")?,
            hi: need(raw.hi, "hi")?,
        },
        "unit" => GridKind::Unit,
        "log-spaced" => GridKind::LogSpaced {
            lo: need(raw.lo, "lo")?,
            hi: need(raw.hi, "hi")?,
        },
        "explicit" => {
            let values = raw
                .values
                .clone()
                .ok_or_else(|| ScenarioError::at("grid.values", "required for kind 'explicit'"))?;
            let n = values.len();
            let g = Grid {
                kind: GridKind::Explicit { values },
                points: n,
                trim: 0.0,
            };
            g.validate().map_err(|e| ScenarioError::at("grid", e))?;
            return Ok(g);
        }
        other => {
            return Err(ScenarioError::at(
                "grid.kind",
                format!(
                    "unknown grid kind '{other}' (expected natural, half-line, reciprocal, \
                     negative-half-line, interval, unit, log-spaced or explicit)"
                ),
            ))
        }
    };
    let g = Grid {
        kind,
        points,
        trim: raw.trim.unwrap_or(DEFAULT_TRIM),
    };
    g.validate().map_err(|e| ScenarioError::at("grid", e))?;
    Ok(g)
}

fn parse_check(s: &str, i: usize) -> Result<Check, ScenarioError> {
    match s {
        "dispersive" => Ok(Check::Dispersive),
        "star" => Ok(Check::Star),
        other => other.parse::<TheoremId>().map(Check::Theorem).map_err(|_| {
            ScenarioError::at(
                format!("checks[{i}]"),
                format!("unknown check '{other}' (expected dispersive, star or a theorem id such as 3.1 or C4.2)"),
            )
        }),
    }
}

impl Scenario {
    pub fn from_toml_str(src: &str) -> Result<Scenario, ScenarioError> {
        let raw: RawScenario = toml::from_str(src).map_err(|e| ScenarioError {
            field: None,
            message: e.to_string().trim_end().to_string(),
        })?;
        Self::from_raw(raw)
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Scenario, ScenarioError> {
        let path = path.as_ref();
        let src = std::fs::read_to_string(path).map_err(|e| ScenarioError {
            field: None,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        Self::from_toml_str(&src)
    }

    fn from_raw(raw: RawScenario) -> Result<Scenario, ScenarioError> {
        if raw.id.trim().is_empty() {
            return Err(ScenarioError::at("id", "must not be empty"));
        }
        let shared = raw.baseline.as_ref().map(|b| baseline_from(b, "baseline")).transpose()?;
        let pick = |own: &Option<RawBaseline>, field: &str| -> Result<BaselineSpec, ScenarioError> {
            match (own, &shared) {
                (Some(b), _) => baseline_from(b, &format!("{field}.baseline")),
                (None, Some(b)) => Ok(b.clone()),
                (None, None) => Err(ScenarioError::at(
                    "baseline",
                    format!("missing: give a top-level [baseline] or [{field}.baseline]"),
                )),
            }
        };
        let bx = pick(&raw.x.baseline, "x")?;
        let by = pick(&raw.y.baseline, "y")?;

        for (i, &a) in raw.x.alphas.iter().enumerate() {
            if !(a > 0.0 && a.is_finite()) {
                return Err(ScenarioError::at(format!("x.alphas[{i}]"), format!("must be positive and finite, got {a}")));
            }
        }
        if raw.x.alphas.len() < 2 {
            return Err(ScenarioError::at("x.alphas", "a sample needs at least two entries"));
        }
        let gx = generator_from(&raw.x.generator, "x.generator")?;
        let gy = generator_from(&raw.y.generator, "y.generator")?;
        let x = POSampleSpec::new(bx, raw.x.alphas.clone(), gx).map_err(|e| ScenarioError::at("x", e))?;

        let alpha = match &raw.y.alpha {
            RawAlpha::Value(v) => *v,
            RawAlpha::Keyword(k) if k == "mean" => x.mean_alpha(),
            RawAlpha::Keyword(k) => {
                return Err(ScenarioError::at("y.alpha", format!("expected a number or \"mean\", got \"{k}\"")))
            }
        };
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(ScenarioError::at("y.alpha", format!("must be positive and finite, got {alpha}")));
        }
        let n = raw.y.n.unwrap_or(x.n());
        let y = POSampleSpec::homogeneous(by, alpha, n, gy).map_err(|e| ScenarioError::at("y", e))?;

        let checks = raw
            .checks
            .iter()
            .enumerate()
            .map(|(i, c)| parse_check(c, i))
            .collect::<Result<Vec<_>, _>>()?;

        let grid = match &raw.grid {
            Some(g) => grid_from(g, x.baseline())?,
            None => x.baseline().natural_grid(DEFAULT_POINTS),
        };

        let expect = match raw.expect {
            None => Expectation::default(),
            Some(e) => {
                let mut hypotheses = Vec::new();
                for (k, v) in e.hypotheses {
                    let t = k
                        .parse::<TheoremId>()
                        .map_err(|err| ScenarioError::at(format!("expect.hypotheses.\"{k}\""), err))?;
                    hypotheses.push((t, v));
                }
                Expectation {
                    dispersive: e.dispersive,
                    star: e.star,
                    hypotheses,
                }
            }
        };

        Ok(Scenario {
            id: raw.id,
            title: raw.title,
            figure: raw.figure,
            kind: raw.kind,
            x,
            y,
            checks,
            grid,
            expect,
            notes: raw.notes,
        })
    }

    /// Copy with the grid density replaced.
    pub fn with_points(mut self, points: usize) -> Self {
        if !matches!(self.grid.kind, GridKind::Explicit { .. }) {
            self.grid.points = points;
        }
        self
    }
}

// ---- registry -------------------------------------------------------------

/// Built-in scenario files, `(id, source)`.
pub const REGISTRY_SOURCES: [(&str, &str); 10] = [
    ("ce-3.1a", include_str!("../scenarios/ce-3.1a.toml")),
    ("ce-3.1b", include_str!("../scenarios/ce-3.1b.toml")),
    ("ce-3.2a", include_str!("../scenarios/ce-3.2a.toml")),
    ("ce-3.2b", include_str!("../scenarios/ce-3.2b.toml")),
    ("ce-4.1", include_str!("../scenarios/ce-4.1.toml")),
    ("ce-4.2", include_str!("../scenarios/ce-4.2.toml")),
    ("ex-5.1", include_str!("../scenarios/ex-5.1.toml")),
    ("ex-5.2", include_str!("../scenarios/ex-5.2.toml")),
    ("ex-5.3", include_str!("../scenarios/ex-5.3.toml")),
    ("ex-5.4", include_str!("../scenarios/ex-5.4.toml")),
];

/// All built-in scenarios, in registry order.
pub fn registry() -> Vec<Scenario> {
    REGISTRY_SOURCES
        .iter()
        .map(|(id, src)| Scenario::from_toml_str(src).unwrap_or_else(|e| panic!("built-in scenario {id}: {e}")))
        .collect()
}

/// Looks up a built-in scenario by id or by its figure id.
pub fn registry_entry(id: &str) -> Option<Scenario> {
    registry()
        .into_iter()
        .find(|s| s.id == id || s.figure.as_deref() == Some(id))
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
id = "t"
kind = "min"
checks = ["dispersive"]
[baseline]
family = "weibull-survival"
params = [1.0, 1.0]
[x]
alphas = [0.5, 2.0]
generator = { family = "independence" }
[y]
alpha = "mean"
generator = { family = "independence" }
"#;

    #[test]
    fn registry_parses_and_ids_match() {
        let all = registry();
        assert_eq!(all.len(), 10);
        for (s, (id, _)) in all.iter().zip(REGISTRY_SOURCES) {
            assert_eq!(s.id, id);
        }
        assert_eq!(registry_entry("fig3").unwrap().id, "ex-5.1");
    }

    #[test]
    fn minimal_file_uses_defaults() {
        let s = Scenario::from_toml_str(MINIMAL).unwrap();
        assert_eq!(s.y.alphas(), &[1.25, 1.25]);
        assert_eq!(s.grid.points, DEFAULT_POINTS);
        assert_eq!(s.checks, vec![Check::Dispersive]);
    }

    #[test]
    fn unknown_key_is_reported_with_location() {
        let src = MINIMAL.replace("[y]", "[y]\nbogus = 1");
        let e = Scenario::from_toml_str(&src).unwrap_err();
        assert!(e.message.contains("bogus"), "{e}");
        assert!(e.message.contains("line"), "{e}");
    }

    #[test]
    fn bad_alpha_names_the_field() {
        let src = MINIMAL.replace("[0.5, 2.0]", "[0.5, -2.0]");
        let e = Scenario::from_toml_str(&src).unwrap_err();
        assert_eq!(e.field.as_deref(), Some("x.alphas[1]"));
    }

    #[test]
    fn bad_check_and_bad_family() {
        let e = Scenario::from_toml_str(&MINIMAL.replace("\"dispersive\"]", "\"9.9\"]")).unwrap_err();
        assert_eq!(e.field.as_deref(), Some("checks[0]"));
        let e = Scenario::from_toml_str(&MINIMAL.replace("\"weibull-survival\"", "\"gumbel\"")).unwrap_err();
        assert_eq!(e.field.as_deref(), Some("baseline"));
    }
}
