//! Baseline lifetime distributions.
//!
//! | id                     | distribution                  | support    |
//! |------------------------|-------------------------------|------------|
//! | `weibull-survival`     | `F̄ = e^{-(cx)^k}`             | `[0, ∞)`   |
//! | `exp-root`             | `F = 1 - e^{-(cx)^k}`         | `[0, ∞)`   |
//! | `pareto-lomax`         | `F̄ = (1 + x/σ)^{-θ}`          | `[0, ∞)`   |
//! | `power-pareto`         | `F̄ = x^{-p}`                  | `[1, ∞)`   |
//! | `negative-weibull`     | `F = e^{-(-cx)^k}`            | `(-∞, 0]`  |
//! | `truncated-exp-growth` | `F = (e^x - 1)/(e - 1)`       | `[0, 1]`   |
//!
//! `weibull-survival` and `exp-root` are the same law under two names; the
//! registry keeps both so each scenario reads the way it was stated.
//!
//! Every family reports `F`, `F̄`, `ln F` and `ln F̄` from closed forms so
//! that tail probabilities far below `f64::EPSILON` keep their precision.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::Grid;
use crate::numeric::invert_cdf;
use crate::prob::Prob;
use crate::verdict::{classify_trend, TrendReport};

/// Relative tolerance of the aging classification.
pub const AGING_TOL: f64 = 1e-9;

pub type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaselineFamily {
    WeibullSurvival,
    ExpRoot,
    ParetoLomax,
    PowerPareto,
    NegativeWeibull,
    TruncatedExpGrowth,
    Custom,
}

impl BaselineFamily {
    pub const CATALOG: [BaselineFamily; 6] = [
        BaselineFamily::WeibullSurvival,
        BaselineFamily::ExpRoot,
        BaselineFamily::ParetoLomax,
        BaselineFamily::PowerPareto,
        BaselineFamily::NegativeWeibull,
        BaselineFamily::TruncatedExpGrowth,
    ];

    pub fn id(self) -> &'static str {
        match self {
            BaselineFamily::WeibullSurvival => "weibull-survival",
            BaselineFamily::ExpRoot => "exp-root",
            BaselineFamily::ParetoLomax => "pareto-lomax",
            BaselineFamily::PowerPareto => "power-pareto",
            BaselineFamily::NegativeWeibull => "negative-weibull",
            BaselineFamily::TruncatedExpGrowth => "truncated-exp-growth",
            BaselineFamily::Custom => "custom",
        }
    }

    pub fn parse(id: &str) -> Option<Self> {
        Self::CATALOG.into_iter().find(|f| f.id() == id)
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            BaselineFamily::WeibullSurvival
            | BaselineFamily::ExpRoot
            | BaselineFamily::NegativeWeibull => &["c", "k"],
            BaselineFamily::ParetoLomax => &["sigma", "theta"],
            BaselineFamily::PowerPareto => &["p"],
            BaselineFamily::TruncatedExpGrowth | BaselineFamily::Custom => &[],
        }
    }
}

impl fmt::Display for BaselineFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Which tail a probability argument refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scale {
    Cdf,
    Survival,
}

/// A closed support interval; either end may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Support {
    pub lo: f64,
    pub hi: f64,
}

impl Support {
    pub fn new(lo: f64, hi: f64) -> Self {
        Support { lo, hi }
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    pub fn contains_open(&self, x: f64) -> bool {
        x > self.lo && x < self.hi
    }
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = if self.lo.is_finite() { "[" } else { "(" };
        let hi = if self.hi.is_finite() { "]" } else { ")" };
        write!(f, "{lo}{}, {}{hi}", self.lo, self.hi)
    }
}

/// `ln p` given `p` and `q = 1 - p`, through `ln1p(-q)` when `q` is small.
fn ln_one_minus(p: f64, q: f64) -> f64 {
    if q < 0.5 {
        (-q).ln_1p()
    } else {
        p.ln()
    }
}

/// Both tails of a distribution at one point, with their logarithms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tails {
    pub cdf: f64,
    pub sf: f64,
    pub ln_cdf: f64,
    pub ln_sf: f64,
}

impl Tails {
    fn from_cdf_sf(cdf: f64, sf: f64) -> Self {
        Tails {
            cdf,
            sf,
            ln_cdf: ln_one_minus(cdf, sf),
            ln_sf: ln_one_minus(sf, cdf),
        }
    }

    pub fn from_cdf(p: Prob) -> Self {
        Tails {
            cdf: p.value(),
            sf: p.complement_value(),
            ln_cdf: p.ln(),
            ln_sf: p.ln_complement(),
        }
    }

    pub fn from_sf(p: Prob) -> Self {
        Tails {
            cdf: p.complement_value(),
            sf: p.value(),
            ln_cdf: p.ln_complement(),
            ln_sf: p.ln(),
        }
    }

    pub fn cdf_prob(&self) -> Prob {
        Prob::from_parts(self.cdf, self.sf, self.ln_cdf)
    }

    pub fn sf_prob(&self) -> Prob {
        Prob::from_parts(self.sf, self.cdf, self.ln_sf)
    }
}

/// Pointwise summary of a distribution.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalRecord {
    pub x: f64,
    pub cdf: f64,
    pub survival: f64,
    pub density: f64,
    pub hazard: f64,
    pub reversed_hazard: f64,
    pub odds: f64,
}

struct CustomBaseline {
    cdf: ScalarFn,
    density: ScalarFn,
}

#[derive(Clone, Serialize)]
pub struct BaselineSpec {
    family: BaselineFamily,
    name: String,
    params: Vec<f64>,
    support: Support,
    #[serde(skip)]
    custom: Option<Arc<CustomBaseline>>,
}

impl fmt::Debug for BaselineSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BaselineSpec")
            .field("family", &self.family)
            .field("name", &self.name)
            .field("params", &self.params)
            .field("support", &self.support)
            .finish()
    }
}

impl PartialEq for BaselineSpec {
    fn eq(&self, other: &Self) -> bool {
        let same_fn = match (&self.custom, &other.custom) {
            (None, None) => true,
            (Some(a), Some(b)) => Arc::ptr_eq(a, b),
            _ => false,
        };
        self.family == other.family
            && self.name == other.name
            && self.params == other.params
            && self.support == other.support
            && same_fn
    }
}

impl fmt::Display for BaselineSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.family == BaselineFamily::Custom {
            return write!(f, "custom:{} on {}", self.name, self.support);
        }
        let args: Vec<String> = self
            .family
            .param_names()
            .iter()
            .zip(&self.params)
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        write!(f, "{}({}) on {}", self.family, args.join(", "), self.support)
    }
}

fn positive(what: &'static str, v: f64) -> Result<f64> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(Error::domain(what, v, "(0, ∞)"))
    }
}

const E_M1: f64 = std::f64::consts::E - 1.0;

impl BaselineSpec {
    fn catalog(family: BaselineFamily, params: Vec<f64>, lo: f64, hi: f64) -> Self {
        BaselineSpec {
            family,
            name: family.id().to_string(),
            params,
            support: Support::new(lo, hi),
            custom: None,
        }
    }

    /// `F̄(x) = e^{-(cx)^k}` on `[0, ∞)`.
    pub fn weibull_survival(c: f64, k: f64) -> Result<Self> {
        let p = vec![positive("c", c)?, positive("k", k)?];
        Ok(Self::catalog(BaselineFamily::WeibullSurvival, p, 0.0, f64::INFINITY))
    }

    /// `F(x) = 1 - e^{-(cx)^k}` on `[0, ∞)`.
    pub fn exp_root(c: f64, k: f64) -> Result<Self> {
        let p = vec![positive("c", c)?, positive("k", k)?];
        Ok(Self::catalog(BaselineFamily::ExpRoot, p, 0.0, f64::INFINITY))
    }

    /// `F̄(x) = (1 + x/σ)^{-θ}` on `[0, ∞)`.
    pub fn pareto_lomax(sigma: f64, theta: f64) -> Result<Self> {
        let p = vec![positive("sigma", sigma)?, positive("theta", theta)?];
        Ok(Self::catalog(BaselineFamily::ParetoLomax, p, 0.0, f64::INFINITY))
    }

    /// `F̄(x) = x^{-p}` on `[1, ∞)`.
    pub fn power_pareto(p: f64) -> Result<Self> {
        let params = vec![positive("p", p)?];
        Ok(Self::catalog(BaselineFamily::PowerPareto, params, 1.0, f64::INFINITY))
    }

    /// `F(x) = e^{-(-cx)^k}` on `(-∞, 0]`.
    pub fn negative_weibull(c: f64, k: f64) -> Result<Self> {
        let p = vec![positive("c", c)?, positive("k", k)?];
        Ok(Self::catalog(BaselineFamily::NegativeWeibull, p, f64::NEG_INFINITY, 0.0))
    }

    /// `F(x) = (e^x - 1)/(e - 1)` on `[0, 1]`.
    pub fn truncated_exp_growth() -> Self {
        Self::catalog(BaselineFamily::TruncatedExpGrowth, vec![], 0.0, 1.0)
    }

    /// A distribution given by closures for `F` and `f` on `[lo, hi]`.
    /// Quantiles are found by bisection.
    pub fn custom<C, D>(name: impl Into<String>, lo: f64, hi: f64, cdf: C, density: D) -> Result<Self>
    where
        C: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if !(lo < hi) || lo.is_nan() || hi.is_nan() {
            return Err(Error::Argument(format!("support [{lo}, {hi}] is empty")));
        }
        Ok(BaselineSpec {
            family: BaselineFamily::Custom,
            name: name.into(),
            params: vec![],
            support: Support::new(lo, hi),
            custom: Some(Arc::new(CustomBaseline {
                cdf: Arc::new(cdf),
                density: Arc::new(density),
            })),
        })
    }

    /// Builds a catalog family from its string id and positional params.
    pub fn from_id(id: &str, params: &[f64]) -> Result<Self> {
        let family = BaselineFamily::parse(id).ok_or_else(|| {
            let known: Vec<&str> = BaselineFamily::CATALOG.iter().map(|f| f.id()).collect();
            Error::Argument(format!(
                "unknown baseline family '{id}' (expected one of: {})",
                known.join(", ")
            ))
        })?;
        let names = family.param_names();
        if params.len() != names.len() {
            return Err(Error::Argument(format!(
                "baseline '{id}' takes {} parameter(s) [{}], got {}",
                names.len(),
                names.join(", "),
                params.len()
            )));
        }
        match family {
            BaselineFamily::WeibullSurvival => Self::weibull_survival(params[0], params[1]),
            BaselineFamily::ExpRoot => Self::exp_root(params[0], params[1]),
            BaselineFamily::ParetoLomax => Self::pareto_lomax(params[0], params[1]),
            BaselineFamily::PowerPareto => Self::power_pareto(params[0]),
            BaselineFamily::NegativeWeibull => Self::negative_weibull(params[0], params[1]),
            BaselineFamily::TruncatedExpGrowth => Ok(Self::truncated_exp_growth()),
            BaselineFamily::Custom => unreachable!(),
        }
    }

    /// Narrows the support. Accepted only inside the current support and
    /// when the closed form already puts all mass inside: `F(lo) = 0` and
    /// `F(hi) = 1` within `1e-9`.
    pub fn with_support(mut self, lo: f64, hi: f64) -> Result<Self> {
        if !(lo < hi) {
            return Err(Error::Argument(format!("support [{lo}, {hi}] is empty")));
        }
        if lo < self.support.lo || hi > self.support.hi {
            return Err(Error::Argument(format!(
                "support [{lo}, {hi}] extends outside the support of {self}"
            )));
        }
        let f_lo = if lo.is_finite() { self.raw_tails(lo).cdf } else { 0.0 };
        let f_hi = if hi.is_finite() { self.raw_tails(hi).cdf } else { 1.0 };
        if !(f_lo.abs() <= 1e-9 && (1.0 - f_hi).abs() <= 1e-9) {
            return Err(Error::Argument(format!(
                "support [{lo}, {hi}] does not carry all mass of {self}: F(lo) = {f_lo}, F(hi) = {f_hi}"
            )));
        }
        self.support = Support::new(lo, hi);
        Ok(self)
    }

    pub fn family(&self) -> BaselineFamily {
        self.family
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn support(&self) -> Support {
        self.support
    }

    /// The plotting grid matching the support.
    pub fn natural_grid(&self, points: usize) -> Grid {
        Grid::for_support(self.support.lo, self.support.hi, points)
    }

    fn check_x(&self, x: f64) -> Result<()> {
        if !self.support.contains(x) {
            return Err(Error::domain("x", x, self.support.to_string()));
        }
        Ok(())
    }

    fn p(&self, i: usize) -> f64 {
        self.params[i]
    }

    /// Closed-form tails; no support clamping.
    fn raw_tails(&self, x: f64) -> Tails {
        match self.family {
            BaselineFamily::WeibullSurvival | BaselineFamily::ExpRoot => {
                let z = (self.p(0) * x).powf(self.p(1));
                let cdf = -(-z).exp_m1();
                let sf = (-z).exp();
                Tails {
                    cdf,
                    sf,
                    ln_cdf: ln_one_minus(cdf, sf),
                    ln_sf: -z,
                }
            }
            BaselineFamily::ParetoLomax => {
                let ln_sf = -self.p(1) * (x / self.p(0)).ln_1p();
                let cdf = -ln_sf.exp_m1();
                let sf = ln_sf.exp();
                Tails {
                    cdf,
                    sf,
                    ln_cdf: ln_one_minus(cdf, sf),
                    ln_sf,
                }
            }
            BaselineFamily::PowerPareto => {
                let ln_sf = -self.p(0) * x.ln();
                let cdf = -ln_sf.exp_m1();
                let sf = ln_sf.exp();
                Tails {
                    cdf,
                    sf,
                    ln_cdf: ln_one_minus(cdf, sf),
                    ln_sf,
                }
            }
            BaselineFamily::NegativeWeibull => {
                let z = (-self.p(0) * x).powf(self.p(1));
                let sf = -(-z).exp_m1();
                let cdf = (-z).exp();
                Tails {
                    cdf,
                    sf,
                    ln_cdf: -z,
                    ln_sf: ln_one_minus(sf, cdf),
                }
            }
            BaselineFamily::TruncatedExpGrowth => {
                let num_cdf = x.exp_m1();
                let num_sf = -(x - 1.0).exp_m1();
                Tails {
                    cdf: num_cdf / E_M1,
                    sf: num_sf * std::f64::consts::E / E_M1,
                    ln_cdf: num_cdf.ln() - E_M1.ln(),
                    ln_sf: num_sf.ln() + 1.0 - E_M1.ln(),
                }
            }
            BaselineFamily::Custom => {
                let c = self.custom.as_ref().expect("custom baseline without closures");
                let cdf = (c.cdf)(x);
                Tails::from_cdf_sf(cdf, 1.0 - cdf)
            }
        }
    }

    /// Tails at `x`, clamped to the support.
    pub(crate) fn tails(&self, x: f64) -> Tails {
        if x <= self.support.lo {
            Tails::from_cdf(Prob::ZERO)
        } else if x >= self.support.hi {
            Tails::from_cdf(Prob::ONE)
        } else {
            self.raw_tails(x)
        }
    }

    /// `ln f(x)` for `x` in the support.
    pub(crate) fn ln_density(&self, x: f64) -> f64 {
        match self.family {
            BaselineFamily::WeibullSurvival | BaselineFamily::ExpRoot => {
                let (c, k) = (self.p(0), self.p(1));
                let cx = c * x;
                let power = if k == 1.0 { 0.0 } else { (k - 1.0) * cx.ln() };
                (c * k).ln() + power - cx.powf(k)
            }
            BaselineFamily::ParetoLomax => {
                let (s, th) = (self.p(0), self.p(1));
                th.ln() - s.ln() - (th + 1.0) * (x / s).ln_1p()
            }
            BaselineFamily::PowerPareto => {
                let p = self.p(0);
                p.ln() - (p + 1.0) * x.ln()
            }
            BaselineFamily::NegativeWeibull => {
                let (c, k) = (self.p(0), self.p(1));
                let cx = -c * x;
                let power = if k == 1.0 { 0.0 } else { (k - 1.0) * cx.ln() };
                (c * k).ln() + power - cx.powf(k)
            }
            BaselineFamily::TruncatedExpGrowth => x - E_M1.ln(),
            BaselineFamily::Custom => {
                let c = self.custom.as_ref().expect("custom baseline without closures");
                (c.density)(x).ln()
            }
        }
    }

    /// Hazard rate `f/F̄` without support checks.
    pub(crate) fn hazard_unchecked(&self, x: f64) -> f64 {
        match self.family {
            BaselineFamily::WeibullSurvival | BaselineFamily::ExpRoot => {
                let (c, k) = (self.p(0), self.p(1));
                if k == 1.0 {
                    c
                } else {
                    c * k * (c * x).powf(k - 1.0)
                }
            }
            BaselineFamily::ParetoLomax => self.p(1) / (self.p(0) + x),
            BaselineFamily::PowerPareto => self.p(0) / x,
            _ => (self.ln_density(x) - self.tails(x).ln_sf).exp(),
        }
    }

    /// Reversed hazard rate `f/F` without support checks.
    pub(crate) fn reversed_hazard_unchecked(&self, x: f64) -> f64 {
        match self.family {
            BaselineFamily::NegativeWeibull => {
                let (c, k) = (self.p(0), self.p(1));
                if k == 1.0 {
                    c
                } else {
                    c * k * (-c * x).powf(k - 1.0)
                }
            }
            BaselineFamily::TruncatedExpGrowth => x.exp() / x.exp_m1(),
            _ => (self.ln_density(x) - self.tails(x).ln_cdf).exp(),
        }
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        Ok(self.tails(x).cdf)
    }

    pub fn survival(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        Ok(self.tails(x).sf)
    }

    pub fn density(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        Ok(self.ln_density(x).exp())
    }

    pub fn hazard(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        Ok(self.hazard_unchecked(x))
    }

    pub fn reversed_hazard(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        Ok(self.reversed_hazard_unchecked(x))
    }

    /// All pointwise quantities at `x`. Ratios that blow up at a support
    /// endpoint are reported as `∞`; a `0/0` is an endpoint error.
    pub fn evaluate(&self, x: f64) -> Result<EvalRecord> {
        self.check_x(x)?;
        let t = self.tails(x);
        let rec = EvalRecord {
            x,
            cdf: t.cdf,
            survival: t.sf,
            density: self.ln_density(x).exp(),
            hazard: self.hazard_unchecked(x),
            reversed_hazard: self.reversed_hazard_unchecked(x),
            odds: t.sf / t.cdf,
        };
        for (q, v) in [
            ("density", rec.density),
            ("hazard", rec.hazard),
            ("reversed hazard", rec.reversed_hazard),
            ("odds", rec.odds),
        ] {
            if v.is_nan() {
                return Err(Error::Endpoint { quantity: q, x });
            }
        }
        Ok(rec)
    }

    /// `F⁻¹(u)` or `F̄⁻¹(u)` for `u ∈ (0, 1)`.
    pub fn quantile(&self, u: f64, scale: Scale) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::domain("u", u, "(0, 1)"));
        }
        let p = Prob::new(u);
        Ok(match scale {
            Scale::Cdf => self.quantile_tails(Tails::from_cdf(p)),
            Scale::Survival => self.quantile_tails(Tails::from_sf(p)),
        })
    }

    /// The point whose tails equal `t`, using whichever representation of
    /// `t` is accurate for the family.
    pub(crate) fn quantile_tails(&self, t: Tails) -> f64 {
        let Support { lo, hi } = self.support;
        if t.cdf <= 0.0 && t.ln_cdf == f64::NEG_INFINITY {
            return lo;
        }
        if t.sf <= 0.0 && t.ln_sf == f64::NEG_INFINITY {
            return hi;
        }
        let x = match self.family {
            BaselineFamily::WeibullSurvival | BaselineFamily::ExpRoot => {
                (-t.ln_sf).powf(1.0 / self.p(1)) / self.p(0)
            }
            BaselineFamily::ParetoLomax => self.p(0) * (-t.ln_sf / self.p(1)).exp_m1(),
            BaselineFamily::PowerPareto => (-t.ln_sf / self.p(0)).exp(),
            BaselineFamily::NegativeWeibull => -(-t.ln_cdf).powf(1.0 / self.p(1)) / self.p(0),
            BaselineFamily::TruncatedExpGrowth => {
                if t.cdf < 0.5 {
                    (t.cdf * E_M1).ln_1p()
                } else {
                    1.0 + (-t.sf * E_M1 / std::f64::consts::E).ln_1p()
                }
            }
            BaselineFamily::Custom => invert_cdf(|x| self.tails(x).cdf_prob(), t.cdf_prob(), lo, hi),
        };
        x.clamp(lo, hi)
    }

    /// Monotonicity of `r`, `r̃`, `x·r` and `x·r̃` on the grid points inside
    /// the open support.
    pub fn classify_aging(&self, grid: &Grid) -> Result<AgingReport> {
        grid.validate()?;
        let xs: Vec<f64> = grid
            .xs_ascending()
            .into_iter()
            .filter(|&x| self.support.contains_open(x))
            .collect();
        if xs.len() < 2 {
            return Err(Error::Argument(
                "aging classification needs at least two grid points inside the support".into(),
            ));
        }
        let r: Vec<f64> = xs.iter().map(|&x| self.hazard_unchecked(x)).collect();
        let rt: Vec<f64> = xs.iter().map(|&x| self.reversed_hazard_unchecked(x)).collect();
        let xr: Vec<f64> = xs.iter().zip(&r).map(|(x, v)| x * v).collect();
        let xrt: Vec<f64> = xs.iter().zip(&rt).map(|(x, v)| x * v).collect();
        Ok(AgingReport {
            hazard: classify_trend(&xs, &r, AGING_TOL),
            reversed_hazard: classify_trend(&xs, &rt, AGING_TOL),
            x_hazard: classify_trend(&xs, &xr, AGING_TOL),
            x_reversed_hazard: classify_trend(&xs, &xrt, AGING_TOL),
        })
    }
}

/// Monotonicity of the hazard-type functions of a baseline.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AgingReport {
    /// `r(x)`: increasing = IFR, decreasing = DFR.
    pub hazard: TrendReport,
    /// `r̃(x)`: increasing = IRHR, decreasing = DRHR.
    pub reversed_hazard: TrendReport,
    pub x_hazard: TrendReport,
    pub x_reversed_hazard: TrendReport,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::central_difference;
    use crate::verdict::Trend;
    use approx::assert_relative_eq;

    fn catalog() -> Vec<BaselineSpec> {
        vec![
            BaselineSpec::weibull_survival(9.0, 0.9).unwrap(),
            BaselineSpec::weibull_survival(1.0, 3.0).unwrap(),
            BaselineSpec::exp_root(5.0, 0.5).unwrap(),
            BaselineSpec::pareto_lomax(13.0, 0.9).unwrap(),
            BaselineSpec::pareto_lomax(1.0, 0.6).unwrap(),
            BaselineSpec::power_pareto(2.0).unwrap(),
            BaselineSpec::power_pareto(0.5).unwrap(),
            BaselineSpec::negative_weibull(3.0, 0.3).unwrap(),
            BaselineSpec::truncated_exp_growth(),
        ]
    }

    #[test]
    fn unit_exponential() {
        let b = BaselineSpec::weibull_survival(1.0, 1.0).unwrap();
        let r = b.evaluate(1.0).unwrap();
        assert_relative_eq!(r.survival, (-1.0f64).exp(), epsilon = 1e-16);
        assert_relative_eq!(r.hazard, 1.0);
        assert_relative_eq!(b.quantile(1.0 - (-1.0f64).exp(), Scale::Cdf).unwrap(), 1.0, epsilon = 1e-15);
    }

    #[test]
    fn reference_values() {
        let b = BaselineSpec::weibull_survival(9.0, 0.9).unwrap();
        assert_relative_eq!(
            b.survival(0.1).unwrap(),
            (-(0.9f64).powf(0.9)).exp(),
            max_relative = 1e-15
        );
        assert_eq!(BaselineSpec::truncated_exp_growth().cdf(1.0).unwrap(), 1.0);
        let pp = BaselineSpec::power_pareto(2.0).unwrap();
        assert_relative_eq!(pp.quantile(0.25, Scale::Survival).unwrap(), 2.0, epsilon = 1e-15);
    }

    #[test]
    fn errors() {
        let b = BaselineSpec::power_pareto(2.0).unwrap();
        assert!(matches!(b.evaluate(0.5), Err(Error::Domain { .. })));
        assert!(b.quantile(0.0, Scale::Cdf).is_err());
        assert!(b.quantile(1.0, Scale::Cdf).is_err());
        assert!(BaselineSpec::from_id("gamma", &[1.0]).is_err());
        assert!(BaselineSpec::from_id("pareto-lomax", &[1.0]).is_err());
        assert!(BaselineSpec::weibull_survival(-1.0, 1.0).is_err());
    }

    #[test]
    fn truncated_endpoint_is_infinite_not_nan() {
        let b = BaselineSpec::truncated_exp_growth();
        let r = b.evaluate(1.0).unwrap();
        assert_eq!(r.survival, 0.0);
        assert_eq!(r.hazard, f64::INFINITY);
    }

    #[test]
    fn tails_are_complementary_and_density_matches_cdf() {
        for b in catalog() {
            let grid = b.natural_grid(300);
            for x in grid.xs_ascending() {
                let t = b.tails(x);
                assert!((t.cdf + t.sf - 1.0).abs() <= 1e-12, "{b} at {x}");
                let h = 1e-6 * x.abs().max(1e-3);
                if !(b.support().contains_open(x - h) && b.support().contains_open(x + h)) {
                    continue;
                }
                let f = b.density(x).unwrap();
                if f < 1e-200 {
                    continue;
                }
                let fd = central_difference(|s| b.tails(s).cdf, x, h / x.abs().max(1.0));
                let fd_sf = -central_difference(|s| b.tails(s).sf, x, h / x.abs().max(1.0));
                let fd = if t.cdf < 0.5 { fd } else { fd_sf };
                assert!(
                    ((fd - f) / f).abs() <= 1e-5,
                    "{b} at x={x}: density {f} vs difference {fd}"
                );
            }
        }
    }

    #[test]
    fn quantile_round_trip() {
        for b in catalog() {
            for i in 1..1000 {
                let u = i as f64 / 1000.0;
                for scale in [Scale::Cdf, Scale::Survival] {
                    let x = b.quantile(u, scale).unwrap();
                    let back = match scale {
                        Scale::Cdf => b.cdf(x).unwrap(),
                        Scale::Survival => b.survival(x).unwrap(),
                    };
                    assert!((back - u).abs() <= 1e-9, "{b} {scale:?} u={u} got {back}");
                }
            }
        }
    }

    #[test]
    fn aging_classes() {
        let w = BaselineSpec::weibull_survival(9.0, 0.9).unwrap();
        let g = w.natural_grid(2000);
        assert_eq!(w.classify_aging(&g).unwrap().hazard.trend, Trend::Decreasing);
        let w3 = BaselineSpec::weibull_survival(1.0, 3.0).unwrap();
        assert_eq!(w3.classify_aging(&g).unwrap().hazard.trend, Trend::Increasing);
        let pp = BaselineSpec::power_pareto(0.5).unwrap();
        let a = pp.classify_aging(&pp.natural_grid(2000)).unwrap();
        assert_eq!(a.x_hazard.trend, Trend::Constant);
        let nw = BaselineSpec::negative_weibull(3.0, 0.3).unwrap();
        let a = nw.classify_aging(&nw.natural_grid(2000)).unwrap();
        assert_eq!(a.reversed_hazard.trend, Trend::Increasing);
        let lx = BaselineSpec::pareto_lomax(13.0, 0.9).unwrap();
        let a = lx.classify_aging(&lx.natural_grid(2000)).unwrap();
        assert_eq!(a.x_hazard.trend, Trend::Increasing);
        let er = BaselineSpec::exp_root(5.0, 0.5).unwrap();
        let a = er.classify_aging(&er.natural_grid(2000)).unwrap();
        assert_eq!(a.reversed_hazard.trend, Trend::Decreasing);
    }

    #[test]
    fn truncated_exp_growth_x_reversed_hazard_is_increasing() {
        // x·r̃(x) = x/(1 - e^{-x}), whose derivative is positive on (0, 1]
        let b = BaselineSpec::truncated_exp_growth();
        let a = b.classify_aging(&b.natural_grid(2000)).unwrap();
        assert_eq!(a.x_reversed_hazard.trend, Trend::Increasing);
        assert_eq!(a.reversed_hazard.trend, Trend::Decreasing);
    }

    #[test]
    fn support_override_must_carry_all_mass() {
        let b = BaselineSpec::truncated_exp_growth();
        assert!(b.clone().with_support(0.0, 0.5).is_err());
        assert!(b.with_support(0.0, 1.0).is_ok());
    }

    #[test]
    fn deep_tail_quantile_uses_log_survival() {
        let b = BaselineSpec::weibull_survival(1.0, 0.3).unwrap();
        let t = Tails::from_sf(Prob::from_ln(-900.0));
        let x = b.quantile_tails(t);
        assert_relative_eq!(x, 900f64.powf(1.0 / 0.3), max_relative = 1e-14);
    }
}
