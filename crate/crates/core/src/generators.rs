//! Archimedean generators `φ`, their inverses `ϕ = φ⁻¹` and derivatives.
//!
//! Catalog:
//!
//! | id              | `φ(t)`                        | params | `t_max` |
//! |-----------------|-------------------------------|--------|---------|
//! | `independence`  | `e^{-t}`                      | none   | `∞`     |
//! | `nelsen-4-2-19` | `a / ln(t + e^a)`             | `a > 0`| `∞`     |
//! | `nelsen-4-2-8`  | `(1 - t) / (1 + (λ - 1) t)`   | `λ ≥ 1`| `1`     |
//!
//! plus [`GeneratorSpec::custom`] for user-supplied closures.
//!
//! Internally every family works in its own coordinate rather than in `t`.
//! For `nelsen-4-2-19` the natural `t = e^{a/u} - e^a` overflows once
//! `u < a/709`, which happens well inside the grids of interest, so that
//! family uses `d = ln(1 + t e^{-a})` instead. The other families use `t`.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::numeric::{bisect_increasing, central_difference};
use crate::prob::Prob;
use crate::verdict::{
    merge_scans, monotone_scan, scan_slacks, ConditionReport, HypothesisResult, SlackPoint,
    SlackScan, Verdict,
};

/// Relative tolerance of the generator shape checks.
pub const SHAPE_TOL: f64 = 1e-9;

/// Minimum number of grid points inside `(0, t_max)` for the validity check.
pub const MIN_VALIDITY_POINTS: usize = 200;

pub type PhiFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GeneratorFamily {
    #[serde(rename = "independence")]
    Independence,
    #[serde(rename = "nelsen-4-2-19")]
    Nelsen4219,
    #[serde(rename = "nelsen-4-2-8")]
    Nelsen428,
    #[serde(rename = "custom")]
    Custom,
}

impl GeneratorFamily {
    pub const CATALOG: [GeneratorFamily; 3] = [
        GeneratorFamily::Independence,
        GeneratorFamily::Nelsen4219,
        GeneratorFamily::Nelsen428,
    ];

    pub fn id(self) -> &'static str {
        match self {
            GeneratorFamily::Independence => "independence",
            GeneratorFamily::Nelsen4219 => "nelsen-4-2-19",
            GeneratorFamily::Nelsen428 => "nelsen-4-2-8",
            GeneratorFamily::Custom => "custom",
        }
    }

    pub fn parse(id: &str) -> Option<Self> {
        Self::CATALOG.into_iter().find(|f| f.id() == id)
    }
}

impl fmt::Display for GeneratorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Position on the generator's domain in the family's internal coordinate.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub(crate) struct Coord(pub(crate) f64);

#[derive(Clone, Serialize)]
pub struct GeneratorSpec {
    family: GeneratorFamily,
    name: String,
    params: Vec<f64>,
    t_max: f64,
    #[serde(skip)]
    custom: Option<PhiFn>,
}

impl fmt::Debug for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratorSpec")
            .field("family", &self.family)
            .field("name", &self.name)
            .field("params", &self.params)
            .field("t_max", &self.t_max)
            .finish()
    }
}

impl PartialEq for GeneratorSpec {
    fn eq(&self, other: &Self) -> bool {
        let same_fn = match (&self.custom, &other.custom) {
            (None, None) => true,
            (Some(a), Some(b)) => Arc::ptr_eq(a, b),
            _ => false,
        };
        self.family == other.family
            && self.name == other.name
            && self.params == other.params
            && self.t_max == other.t_max
            && same_fn
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            GeneratorFamily::Independence => f.write_str("independence"),
            GeneratorFamily::Nelsen4219 => write!(f, "nelsen-4-2-19(a={})", self.params[0]),
            GeneratorFamily::Nelsen428 => write!(f, "nelsen-4-2-8(lambda={})", self.params[0]),
            GeneratorFamily::Custom => write!(f, "custom:{}", self.name),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Convex,
    Concave,
}

/// Which cross-generator ratio must be increasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossDirection {
    /// `φ₂(ϕ₂(t)/n) / φ₁(ϕ₁(t)/n)`
    G2OverG1,
    /// `φ₁(ϕ₁(t)/n) / φ₂(ϕ₂(t)/n)`
    G1OverG2,
}

impl GeneratorSpec {
    pub fn independence() -> Self {
        GeneratorSpec {
            family: GeneratorFamily::Independence,
            name: "independence".into(),
            params: vec![],
            t_max: f64::INFINITY,
            custom: None,
        }
    }

    pub fn nelsen_4_2_19(a: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::domain("a", a, "(0, ∞)"));
        }
        Ok(GeneratorSpec {
            family: GeneratorFamily::Nelsen4219,
            name: "nelsen-4-2-19".into(),
            params: vec![a],
            t_max: f64::INFINITY,
            custom: None,
        })
    }

    pub fn nelsen_4_2_8(lambda: f64) -> Result<Self> {
        if !(lambda >= 1.0 && lambda.is_finite()) {
            return Err(Error::domain("lambda", lambda, "[1, ∞)"));
        }
        Ok(GeneratorSpec {
            family: GeneratorFamily::Nelsen428,
            name: "nelsen-4-2-8".into(),
            params: vec![lambda],
            t_max: 1.0,
            custom: None,
        })
    }

    /// A generator given by a closure on `[0, t_max]`. Inverse and
    /// derivatives are numerical. Nothing is validated here; run
    /// [`check_generator_validity`] before relying on it.
    pub fn custom<F>(name: impl Into<String>, t_max: f64, phi: F) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if !(t_max > 0.0) {
            return Err(Error::domain("t_max", t_max, "(0, ∞]"));
        }
        Ok(GeneratorSpec {
            family: GeneratorFamily::Custom,
            name: name.into(),
            params: vec![],
            t_max,
            custom: Some(Arc::new(phi)),
        })
    }

    /// Builds a catalog generator from its string id and positional params.
    pub fn from_id(id: &str, params: &[f64]) -> Result<Self> {
        let family = GeneratorFamily::parse(id).ok_or_else(|| {
            Error::Argument(format!(
                "unknown generator family '{id}' (expected one of: independence, nelsen-4-2-19, nelsen-4-2-8)"
            ))
        })?;
        let want = match family {
            GeneratorFamily::Independence => 0,
            _ => 1,
        };
        if params.len() != want {
            return Err(Error::Argument(format!(
                "generator '{id}' takes {want} parameter(s), got {}",
                params.len()
            )));
        }
        match family {
            GeneratorFamily::Independence => Ok(Self::independence()),
            GeneratorFamily::Nelsen4219 => Self::nelsen_4_2_19(params[0]),
            GeneratorFamily::Nelsen428 => Self::nelsen_4_2_8(params[0]),
            GeneratorFamily::Custom => unreachable!(),
        }
    }

    pub fn family(&self) -> GeneratorFamily {
        self.family
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn is_strict(&self) -> bool {
        self.t_max.is_infinite()
    }

    /// The grid on which the shape checks are run by default.
    pub fn default_grid(&self, points: usize) -> Grid {
        if self.t_max.is_finite() {
            Grid::interval(0.0, self.t_max, points)
        } else {
            Grid::half_line(points)
        }
    }

    fn check_t(&self, t: f64) -> Result<()> {
        if t.is_nan() || t < 0.0 {
            return Err(Error::domain("t", t, "[0, ∞)"));
        }
        Ok(())
    }

    fn raw_custom(&self, t: f64) -> f64 {
        (self.custom.as_ref().expect("custom generator without closure"))(t)
    }

    // ---- coordinate layer -------------------------------------------------

    pub(crate) fn coord_of_t(&self, t: f64) -> Coord {
        match self.family {
            GeneratorFamily::Nelsen4219 => Coord((t * (-self.params[0]).exp()).ln_1p()),
            _ => Coord(t),
        }
    }

    pub(crate) fn t_of_coord(&self, c: Coord) -> f64 {
        match self.family {
            GeneratorFamily::Nelsen4219 => self.params[0].exp() * c.0.exp_m1(),
            _ => c.0,
        }
    }

    pub(crate) fn at_t_max(&self, c: Coord) -> bool {
        match self.family {
            GeneratorFamily::Nelsen428 => c.0 >= 1.0,
            GeneratorFamily::Custom => c.0 >= self.t_max,
            _ => c.0 == f64::INFINITY,
        }
    }

    /// `φ` at a coordinate, as a probability with accurate complement and log.
    pub(crate) fn phi_coord(&self, c: Coord) -> Prob {
        if self.at_t_max(c) {
            return Prob::ZERO;
        }
        let x = c.0;
        match self.family {
            GeneratorFamily::Independence => Prob::from_ln(-x),
            GeneratorFamily::Nelsen4219 => {
                let a = self.params[0];
                let s = a + x;
                Prob::from_parts(a / s, x / s, a.ln() - s.ln())
            }
            GeneratorFamily::Nelsen428 => {
                let l = self.params[0];
                let den = 1.0 + (l - 1.0) * x;
                Prob::from_parts(
                    (1.0 - x) / den,
                    l * x / den,
                    (-x).ln_1p() - ((l - 1.0) * x).ln_1p(),
                )
            }
            GeneratorFamily::Custom => Prob::new(self.raw_custom(x)),
        }
    }

    /// `ϕ(u)` as a coordinate. `u = 0` maps to `t_max`.
    pub(crate) fn inv_coord(&self, u: Prob) -> Coord {
        if u.value() >= 1.0 && u.complement_value() <= 0.0 {
            return Coord(0.0);
        }
        match self.family {
            GeneratorFamily::Independence => Coord(-u.ln()),
            GeneratorFamily::Nelsen4219 => {
                if u.value() == 0.0 {
                    Coord(f64::INFINITY)
                } else {
                    Coord(self.params[0] * u.complement_value() / u.value())
                }
            }
            GeneratorFamily::Nelsen428 => {
                let l = self.params[0];
                Coord(u.complement_value() / (1.0 + (l - 1.0) * u.value()))
            }
            GeneratorFamily::Custom => Coord(self.custom_inverse(u.value())),
        }
    }

    fn custom_inverse(&self, u: f64) -> f64 {
        if u <= 0.0 {
            return self.t_max;
        }
        let mut hi = if self.t_max.is_finite() { self.t_max } else { 1.0 };
        while self.t_max.is_infinite() && self.raw_custom(hi) > u && hi < 1e300 {
            hi *= 2.0;
        }
        bisect_increasing(|t| -self.raw_custom(t), -u, 0.0, hi).unwrap_or(f64::NAN)
    }

    /// The coordinate of `Σ tᵢ`.
    pub(crate) fn sum_coords(&self, cs: &[Coord]) -> Coord {
        match self.family {
            GeneratorFamily::Nelsen4219 => {
                let dmax = cs.iter().map(|c| c.0).fold(0.0f64, f64::max);
                if dmax == f64::INFINITY {
                    return Coord(f64::INFINITY);
                }
                if dmax < 700.0 {
                    Coord(cs.iter().map(|c| c.0.exp_m1()).sum::<f64>().ln_1p())
                } else {
                    // ln(Σ e^{dᵢ} - (n - 1)) with the leading exponential factored out
                    let s: f64 = cs.iter().map(|c| (c.0 - dmax).exp()).sum();
                    let k = cs.len() as f64 - 1.0;
                    Coord(dmax + s.ln() + (-k * (-dmax).exp() / s).ln_1p())
                }
            }
            _ => Coord(cs.iter().map(|c| c.0).sum()),
        }
    }

    /// The coordinate of `k·t`, `k > 0`.
    pub(crate) fn scale_coord(&self, c: Coord, k: f64) -> Coord {
        match self.family {
            GeneratorFamily::Nelsen4219 => {
                let d = c.0;
                if d < 700.0 {
                    Coord((k * d.exp_m1()).ln_1p())
                } else {
                    Coord(d + k.ln() + ((1.0 / k - 1.0) * (-d).exp()).ln_1p())
                }
            }
            _ => Coord(c.0 * k),
        }
    }

    /// `ln(-φ'(t))` at a coordinate; `-∞` where `φ' = 0`.
    pub(crate) fn ln_neg_dphi_coord(&self, c: Coord) -> f64 {
        if self.at_t_max(c) {
            return f64::NEG_INFINITY;
        }
        let x = c.0;
        match self.family {
            GeneratorFamily::Independence => -x,
            GeneratorFamily::Nelsen4219 => {
                let a = self.params[0];
                let s = a + x;
                a.ln() - 2.0 * s.ln() - s
            }
            GeneratorFamily::Nelsen428 => {
                let l = self.params[0];
                l.ln() - 2.0 * ((l - 1.0) * x).ln_1p()
            }
            GeneratorFamily::Custom => (-self.custom_derivative(x, 1)).ln(),
        }
    }

    fn custom_derivative(&self, t: f64, order: u8) -> f64 {
        let f = |s: f64| self.raw_custom(s);
        let h = 1e-5 * t.max(1.0);
        match order {
            1 if t >= h => central_difference(f, t, 1e-5),
            1 => (-3.0 * f(t) + 4.0 * f(t + h) - f(t + 2.0 * h)) / (2.0 * h),
            _ if t >= h => (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h),
            _ => (f(t) - 2.0 * f(t + h) + f(t + 2.0 * h)) / (h * h),
        }
    }

    // ---- public evaluation ------------------------------------------------

    /// `φ(t)`; zero for `t ≥ t_max`.
    pub fn phi(&self, t: f64) -> Result<f64> {
        Ok(self.phi_prob(t)?.value())
    }

    pub fn phi_prob(&self, t: f64) -> Result<Prob> {
        self.check_t(t)?;
        if t >= self.t_max {
            return Ok(Prob::ZERO);
        }
        Ok(self.phi_coord(self.coord_of_t(t)))
    }

    /// `ϕ(u) = φ⁻¹(u)` for `u ∈ (0, 1]`.
    pub fn phi_inverse(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u <= 1.0) {
            return Err(Error::domain("u", u, "(0, 1]"));
        }
        Ok(self.t_of_coord(self.inv_coord(Prob::new(u))))
    }

    /// `φ'(t)` (order 1) or `φ''(t)` (order 2).
    pub fn phi_derivative(&self, t: f64, order: u8) -> Result<f64> {
        if order != 1 && order != 2 {
            return Err(Error::Argument(format!(
                "derivative order must be 1 or 2, got {order}"
            )));
        }
        self.check_t(t)?;
        if t >= self.t_max {
            return Ok(0.0);
        }
        let v = match (self.family, order) {
            (GeneratorFamily::Independence, 1) => -(-t).exp(),
            (GeneratorFamily::Independence, _) => (-t).exp(),
            (GeneratorFamily::Nelsen4219, _) => {
                let a = self.params[0];
                let w = t + a.exp();
                let l = w.ln();
                if order == 1 {
                    -a / (l * l * w)
                } else {
                    a * (2.0 + l) / (l * l * l * w * w)
                }
            }
            (GeneratorFamily::Nelsen428, _) => {
                let lam = self.params[0];
                let den = 1.0 + (lam - 1.0) * t;
                if order == 1 {
                    -lam / (den * den)
                } else {
                    2.0 * lam * (lam - 1.0) / (den * den * den)
                }
            }
            (GeneratorFamily::Custom, o) => self.custom_derivative(t, o),
        };
        Ok(v)
    }

    /// `φ(t)/φ'(t)`.
    pub fn phi_over_dphi(&self, t: f64) -> Result<f64> {
        self.check_t(t)?;
        let v = match self.family {
            GeneratorFamily::Independence => -1.0,
            GeneratorFamily::Nelsen4219 => {
                let w = t + self.params[0].exp();
                -w * w.ln()
            }
            GeneratorFamily::Nelsen428 if t < 1.0 => {
                let lam = self.params[0];
                -(1.0 - t) * (1.0 + (lam - 1.0) * t) / lam
            }
            _ => {
                let d = self.phi_derivative(t, 1)?;
                if d == 0.0 || !d.is_finite() {
                    return Err(Error::Singularity { what: "φ'", at: t });
                }
                self.phi(t)? / d
            }
        };
        Ok(v)
    }

    /// `φ(ϕ(u)/n)`: the marginal probability of each component of a
    /// homogeneous sample whose extreme has probability `u`.
    pub fn root_transform(&self, u: Prob, n: f64) -> Prob {
        self.phi_coord(self.scale_coord(self.inv_coord(u), 1.0 / n))
    }

    /// Grid points strictly inside `(0, t_max)`.
    fn domain_points(&self, grid: &Grid) -> Result<Vec<f64>> {
        grid.validate()?;
        let ts: Vec<f64> = grid
            .xs_ascending()
            .into_iter()
            .filter(|&t| t > 0.0 && t < self.t_max)
            .collect();
        if ts.is_empty() {
            return Err(Error::Argument(format!(
                "no grid points inside the generator domain (0, {})",
                self.t_max
            )));
        }
        Ok(ts)
    }
}

/// Midpoint test of `f` on pairs `(tᵢ, tᵢ₊₂ₛ)` for strides `s = 1, 2, 4, …`.
fn midpoint_scan<F>(ts: &[f64], shape: Shape, f: F) -> Result<SlackScan>
where
    F: Fn(f64) -> Result<f64>,
{
    let vals: Vec<f64> = ts.iter().map(|&t| f(t)).collect::<Result<_>>()?;
    let mut scans = Vec::new();
    let mut s = 1;
    while 2 * s < ts.len() {
        let mut pts = Vec::with_capacity(ts.len() - 2 * s);
        for i in 0..ts.len() - 2 * s {
            let (a, b) = (ts[i], ts[i + 2 * s]);
            let mid = f(0.5 * (a + b))?;
            let chord = 0.5 * (vals[i] + vals[i + 2 * s]);
            let slack = match shape {
                Shape::Convex => mid - chord,
                Shape::Concave => chord - mid,
            };
            pts.push(SlackPoint {
                x: 0.5 * (a + b),
                slack,
                tol: SHAPE_TOL * (1.0 + mid.abs()),
            });
        }
        scans.push(scan_slacks(pts));
        s *= 2;
    }
    if scans.is_empty() {
        return Err(Error::Argument("grid too small for a midpoint test".into()));
    }
    Ok(merge_scans(scans))
}

/// Midpoint convexity or concavity of `ln φ` on the grid.
pub fn check_log_shape(gen: &GeneratorSpec, grid: &Grid, shape: Shape) -> Result<SlackScan> {
    let ts = gen.domain_points(grid)?;
    midpoint_scan(&ts, shape, |t| Ok(gen.phi_prob(t)?.ln()))
}

/// Midpoint convexity or concavity of `φ/φ'` on the grid.
pub fn check_ratio_shape(gen: &GeneratorSpec, grid: &Grid, shape: Shape) -> Result<SlackScan> {
    let ts = gen.domain_points(grid)?;
    midpoint_scan(&ts, shape, |t| gen.phi_over_dphi(t))
}

/// Samples `t ↦ φ_num(ϕ_num(t)/n) / φ_den(ϕ_den(t)/n)` on a probability grid.
pub fn cross_ratio_series(
    gen1: &GeneratorSpec,
    gen2: &GeneratorSpec,
    n: usize,
    grid: &Grid,
    direction: CrossDirection,
) -> Result<(Vec<f64>, Vec<f64>)> {
    grid.validate()?;
    if n < 1 {
        return Err(Error::Argument("n must be positive".into()));
    }
    let us: Vec<f64> = grid
        .xs_ascending()
        .into_iter()
        .filter(|&u| u > 0.0 && u < 1.0)
        .collect();
    if us.is_empty() {
        return Err(Error::Argument("cross-generator grid has no points in (0, 1)".into()));
    }
    let (num, den) = match direction {
        CrossDirection::G2OverG1 => (gen2, gen1),
        CrossDirection::G1OverG2 => (gen1, gen2),
    };
    let nf = n as f64;
    let ratios = us
        .iter()
        .map(|&u| {
            let p = Prob::new(u);
            (num.root_transform(p, nf).ln() - den.root_transform(p, nf).ln()).exp()
        })
        .collect();
    Ok((us, ratios))
}

/// Whether the requested cross-generator ratio is increasing on `(0, 1)`.
pub fn check_cross_generator(
    gen1: &GeneratorSpec,
    gen2: &GeneratorSpec,
    n: usize,
    grid: &Grid,
    direction: CrossDirection,
) -> Result<SlackScan> {
    let (us, ratios) = cross_ratio_series(gen1, gen2, n, grid, direction)?;
    Ok(monotone_scan(&us, &ratios, true, SHAPE_TOL))
}

/// Secant slopes of a sampled function must be nondecreasing.
fn convexity_scan(ts: &[f64], vals: &[f64]) -> SlackScan {
    let mids: Vec<f64> = ts.windows(2).map(|w| 0.5 * (w[0] + w[1])).collect();
    let slopes: Vec<f64> = ts
        .windows(2)
        .zip(vals.windows(2))
        .map(|(t, v)| (v[1] - v[0]) / (t[1] - t[0]))
        .collect();
    monotone_scan(&mids, &slopes, true, SHAPE_TOL)
}

fn scan_evidence(scan: &SlackScan) -> String {
    match scan.witnesses.first() {
        Some(w) => format!(
            "max violation {:.3e}, first witness at {:.6e}",
            scan.max_violation, w.x
        ),
        None => format!(
            "{} points, max violation {:.3e}",
            scan.evaluated, scan.max_violation
        ),
    }
}

pub(crate) fn scan_hypothesis(name: &str, scan: &SlackScan) -> HypothesisResult {
    HypothesisResult::new(name, scan.verdict, scan_evidence(scan))
}

/// Checks that `gen` generates an `n`-dimensional Archimedean copula on the
/// sampled grid: `φ(0) = 1`, `φ → 0` at `t_max`, range in `[0, 1]`, strict
/// decrease and convexity. For `n = 3, 4` it also checks that
/// `(-1)^{n-2} φ^{(n-2)}` is decreasing and convex. Larger `n` is reported
/// inconclusive.
pub fn check_generator_validity(gen: &GeneratorSpec, n: usize, grid: &Grid) -> Result<ConditionReport> {
    if n < 2 {
        return Err(Error::Argument(format!("dimension n must be at least 2, got {n}")));
    }
    let ts = gen.domain_points(grid)?;
    if ts.len() < MIN_VALIDITY_POINTS {
        return Err(Error::Argument(format!(
            "validity check needs at least {MIN_VALIDITY_POINTS} grid points in (0, t_max), got {}",
            ts.len()
        )));
    }
    let raw = |t: f64| -> Prob {
        match gen.family {
            GeneratorFamily::Custom => Prob::new(gen.raw_custom(t)),
            _ => gen.phi_coord(gen.coord_of_t(t)),
        }
    };
    let mut hyps = Vec::new();

    let phi0 = raw(0.0).value();
    hyps.push(HypothesisResult::from_bool(
        "phi(0) = 1",
        (phi0 - 1.0).abs() <= 1e-12,
        format!("phi(0) = {phi0:.17}"),
    ));

    let limit = if gen.t_max.is_finite() {
        match gen.family {
            GeneratorFamily::Custom => gen.raw_custom(gen.t_max),
            _ => raw(gen.t_max).value(),
        }
    } else {
        match gen.family {
            GeneratorFamily::Custom => gen.raw_custom(1e12),
            _ => gen.phi_coord(gen.coord_of_t(f64::INFINITY)).value(),
        }
    };
    let limit_ok = if gen.t_max.is_finite() {
        limit.abs() <= 1e-12
    } else {
        limit.abs() < 1e-9
    };
    hyps.push(HypothesisResult::from_bool(
        "phi -> 0 at t_max",
        limit_ok,
        format!("phi({}) = {limit:.3e}", gen.t_max),
    ));

    let probs: Vec<Prob> = ts.iter().map(|&t| raw(t)).collect();
    let bad_range = ts
        .iter()
        .zip(&probs)
        .find(|(_, p)| !(0.0..=1.0).contains(&p.value()));
    hyps.push(match bad_range {
        None => HypothesisResult::new("phi in [0, 1]", Verdict::Holds, format!("{} points", ts.len())),
        Some((t, p)) => HypothesisResult::new(
            "phi in [0, 1]",
            Verdict::Violated,
            format!("phi({t:.6e}) = {:.6e}", p.value()),
        ),
    });

    let not_decreasing = ts
        .windows(2)
        .zip(probs.windows(2))
        .find(|(_, p)| !p[1].less_than(&p[0]));
    hyps.push(match not_decreasing {
        None => HypothesisResult::new("strictly decreasing", Verdict::Holds, format!("{} points", ts.len())),
        Some((t, _)) => HypothesisResult::new(
            "strictly decreasing",
            Verdict::Violated,
            format!("phi({:.6e}) >= phi({:.6e})", t[1], t[0]),
        ),
    });

    let vals: Vec<f64> = probs.iter().map(Prob::value).collect();
    hyps.push(scan_hypothesis("convex", &convexity_scan(&ts, &vals)));

    if n == 3 || n == 4 {
        let d2: Vec<f64> = ts
            .iter()
            .map(|&t| gen.phi_derivative(t, 2))
            .collect::<Result<_>>()?;
        // n = 3: -φ' decreasing (φ'' ≥ 0) and convex (φ'' nonincreasing).
        // n = 4: φ'' decreasing and convex.
        let mut scans = vec![monotone_scan(&ts, &d2, false, SHAPE_TOL)];
        let label = if n == 3 {
            scans.push(scan_slacks(ts.iter().zip(&d2).map(|(&t, &v)| SlackPoint {
                x: t,
                slack: -v,
                tol: 0.0,
            })));
            "-phi' decreasing and convex"
        } else {
            scans.push(convexity_scan(&ts, &d2));
            "phi'' decreasing and convex"
        };
        hyps.push(scan_hypothesis(label, &merge_scans(scans)));
    } else if n > 4 {
        hyps.push(HypothesisResult::new(
            format!("{n}-monotone"),
            Verdict::Inconclusive,
            "n-monotonicity is only certified for n <= 4",
        ));
    }

    Ok(ConditionReport::new(format!("generator {gen} for n = {n}"), hyps))
}
