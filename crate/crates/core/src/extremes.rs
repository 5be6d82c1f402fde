//! Sample minima and maxima of `X ~ PO(F̄, α, φ)`.
//!
//! With marginals `X_i ~ PO(F̄, α_i)` coupled by the Archimedean copula with
//! generator `φ`,
//!
//! ```text
//! F̄_{X₁:ₙ}(x) = φ(Σ ϕ(F̄_{X_i}(x)))        F_{Xₙ:ₙ}(x) = φ(Σ ϕ(F_{X_i}(x)))
//! ```
//!
//! For the minimum the survival function is the "natural" probability, for
//! the maximum the cdf; everything here computes the natural probability
//! first and derives the other tail from it without subtraction.
//!
//! When `Y` is homogeneous with ratio `α` and `n` components, the quantile
//! composition `G⁻¹(F(x))` has the closed form
//!
//! ```text
//! min: F̄⁻¹(γ),  γ = w / (α + ᾱw)        max: F⁻¹(β),  β = αw / (1 - ᾱw)
//! ```
//!
//! where `w = φ_Y(ϕ_Y(P)/n)` and `P` is the natural probability of the
//! extreme of `X` at `x`. With `φ_Y = φ_X` this is the `γ`/`β` form; with a
//! different generator it is the `η`/`ζ` form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::baselines::{BaselineSpec, Support, Tails};
use crate::error::{Error, Result};
use crate::generators::{Coord, GeneratorSpec};
use crate::numeric::invert_cdf;
use crate::po_model::POMarginal;
use crate::prob::Prob;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremeKind {
    Min,
    Max,
}

impl fmt::Display for ExtremeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtremeKind::Min => "min",
            ExtremeKind::Max => "max",
        })
    }
}

/// A dependent sample `X ~ PO(F̄, (α₁, …, αₙ), φ)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct POSampleSpec {
    baseline: BaselineSpec,
    alphas: Vec<f64>,
    generator: GeneratorSpec,
}

impl POSampleSpec {
    pub fn new(baseline: BaselineSpec, alphas: Vec<f64>, generator: GeneratorSpec) -> Result<Self> {
        if alphas.len() < 2 {
            return Err(Error::Argument(format!(
                "a sample needs at least 2 components, got {}",
                alphas.len()
            )));
        }
        if let Some((i, a)) = alphas
            .iter()
            .enumerate()
            .find(|(_, a)| !(**a > 0.0 && a.is_finite()))
        {
            return Err(Error::Argument(format!("alphas[{i}] = {a} must be positive")));
        }
        Ok(POSampleSpec {
            baseline,
            alphas,
            generator,
        })
    }

    pub fn homogeneous(baseline: BaselineSpec, alpha: f64, n: usize, generator: GeneratorSpec) -> Result<Self> {
        Self::new(baseline, vec![alpha; n], generator)
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn baseline(&self) -> &BaselineSpec {
        &self.baseline
    }

    pub fn generator(&self) -> &GeneratorSpec {
        &self.generator
    }

    pub fn is_homogeneous(&self) -> bool {
        self.alphas.iter().all(|&a| a == self.alphas[0])
    }

    pub fn mean_alpha(&self) -> f64 {
        self.alphas.iter().sum::<f64>() / self.alphas.len() as f64
    }

    pub fn marginal(&self, i: usize) -> POMarginal {
        POMarginal::new(self.baseline.clone(), self.alphas[i]).expect("alphas validated")
    }

    pub fn marginals(&self) -> Vec<POMarginal> {
        (0..self.n()).map(|i| self.marginal(i)).collect()
    }
}

/// The distribution of `X₁:ₙ` or `Xₙ:ₙ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremeDistribution {
    kind: ExtremeKind,
    sample: POSampleSpec,
    #[serde(skip)]
    margins: Vec<POMarginal>,
}

/// Everything the density and the composition need at one point.
struct State {
    base: Tails,
    /// Natural probability of each marginal (survival for min, cdf for max).
    parts: Vec<Prob>,
    coords: Vec<Coord>,
    sum: Coord,
    natural: Prob,
}

/// Which closed-form inner function produced a composition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InnerFunction {
    Gamma,
    Beta,
    Eta,
    Zeta,
}

/// Value of the active inner function at `x`; the other fields are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransformProfile {
    pub x: f64,
    pub gamma: Option<f64>,
    pub beta: Option<f64>,
    pub eta: Option<f64>,
    pub zeta: Option<f64>,
}

impl TransformProfile {
    fn new(x: f64, which: InnerFunction, v: f64) -> Self {
        let mut p = TransformProfile {
            x,
            gamma: None,
            beta: None,
            eta: None,
            zeta: None,
        };
        *match which {
            InnerFunction::Gamma => &mut p.gamma,
            InnerFunction::Beta => &mut p.beta,
            InnerFunction::Eta => &mut p.eta,
            InnerFunction::Zeta => &mut p.zeta,
        } = Some(v);
        p
    }

    pub fn active(&self) -> Option<(InnerFunction, f64)> {
        [
            (InnerFunction::Gamma, self.gamma),
            (InnerFunction::Beta, self.beta),
            (InnerFunction::Eta, self.eta),
            (InnerFunction::Zeta, self.zeta),
        ]
        .into_iter()
        .find_map(|(k, v)| v.map(|v| (k, v)))
    }
}

/// `y = G⁻¹(F(x))` together with `g(y)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Composition {
    pub x: f64,
    pub y: f64,
    pub profile: TransformProfile,
    /// `g(G⁻¹(F(x)))`.
    pub density: f64,
}

impl ExtremeDistribution {
    pub fn new(kind: ExtremeKind, sample: POSampleSpec) -> Self {
        let margins = sample.marginals();
        ExtremeDistribution {
            kind,
            sample,
            margins,
        }
    }

    pub fn min(sample: POSampleSpec) -> Self {
        Self::new(ExtremeKind::Min, sample)
    }

    pub fn max(sample: POSampleSpec) -> Self {
        Self::new(ExtremeKind::Max, sample)
    }

    pub fn kind(&self) -> ExtremeKind {
        self.kind
    }

    pub fn sample(&self) -> &POSampleSpec {
        &self.sample
    }

    pub fn support(&self) -> Support {
        self.sample.baseline.support()
    }

    fn check_x(&self, x: f64) -> Result<()> {
        if !self.support().contains(x) {
            return Err(Error::domain("x", x, self.support().to_string()));
        }
        Ok(())
    }

    fn natural_of(&self, t: &Tails) -> Prob {
        match self.kind {
            ExtremeKind::Min => t.sf_prob(),
            ExtremeKind::Max => t.cdf_prob(),
        }
    }

    fn tails_of_natural(&self, p: Prob) -> Tails {
        match self.kind {
            ExtremeKind::Min => Tails::from_sf(p),
            ExtremeKind::Max => Tails::from_cdf(p),
        }
    }

    fn state(&self, x: f64) -> State {
        let base = self.sample.baseline.tails(x);
        let gen = &self.sample.generator;
        let parts: Vec<Prob> = self
            .margins
            .iter()
            .map(|m| self.natural_of(&m.transform(&base)))
            .collect();
        let coords: Vec<Coord> = parts.iter().map(|&p| gen.inv_coord(p)).collect();
        let sum = gen.sum_coords(&coords);
        let natural = gen.phi_coord(sum);
        State {
            base,
            parts,
            coords,
            sum,
            natural,
        }
    }

    /// Tails of the extreme at `x`, clamped to the support.
    pub(crate) fn tails_unchecked(&self, x: f64) -> Tails {
        self.tails_of_natural(self.state(x).natural)
    }

    pub fn tails(&self, x: f64) -> Result<Tails> {
        self.check_x(x)?;
        Ok(self.tails_unchecked(x))
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        Ok(self.tails(x)?.cdf)
    }

    pub fn survival(&self, x: f64) -> Result<f64> {
        Ok(self.tails(x)?.sf)
    }

    /// Natural-scale probabilities of the marginals at `x`.
    pub fn marginal_tails(&self, x: f64) -> Result<Vec<Tails>> {
        self.check_x(x)?;
        let base = self.sample.baseline.tails(x);
        Ok(self.margins.iter().map(|m| m.transform(&base)).collect())
    }

    pub(crate) fn density_unchecked(&self, x: f64) -> f64 {
        let st = self.state(x);
        let gen = &self.sample.generator;
        let ln_s = gen.ln_neg_dphi_coord(st.sum);
        if ln_s == f64::NEG_INFINITY {
            return 0.0;
        }
        self.margins
            .iter()
            .zip(st.parts.iter().zip(&st.coords))
            .filter(|(_, (p, _))| p.ln() > f64::NEG_INFINITY)
            .map(|(m, (_, &c))| (m.ln_density_from(x, &st.base) + ln_s - gen.ln_neg_dphi_coord(c)).exp())
            .sum()
    }

    /// Density of the extreme; `f₁` for the minimum, `f₂` for the maximum.
    pub fn density(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        let v = self.density_unchecked(x);
        if v.is_nan() {
            return Err(Error::Singularity {
                what: "extreme density",
                at: x,
            });
        }
        Ok(v)
    }

    /// `y` with `G(y) = F(x)`-type equality expressed through tails; uses
    /// the closed form for homogeneous samples and bisection otherwise.
    pub(crate) fn quantile_tails(&self, t: Tails) -> f64 {
        if self.sample.is_homogeneous() {
            self.quantile_tails_closed(t)
        } else {
            self.quantile_tails_numeric(t)
        }
    }

    fn quantile_tails_closed(&self, t: Tails) -> f64 {
        let gen = &self.sample.generator;
        let p = self.natural_of(&t);
        let w = gen.phi_coord(gen.scale_coord(gen.inv_coord(p), 1.0 / self.sample.n() as f64));
        self.invert_marginal(w)
    }

    /// Baseline quantile at the point where one homogeneous marginal has
    /// natural probability `w`.
    fn invert_marginal(&self, w: Prob) -> f64 {
        let m = &self.margins[0];
        let b = &self.sample.baseline;
        match self.kind {
            ExtremeKind::Min => b.quantile_tails(Tails::from_sf(m.baseline_sf_for(w))),
            ExtremeKind::Max => b.quantile_tails(Tails::from_cdf(m.baseline_cdf_for(w))),
        }
    }

    pub(crate) fn quantile_tails_numeric(&self, t: Tails) -> f64 {
        let Support { lo, hi } = self.support();
        invert_cdf(|x| self.tails_unchecked(x).cdf_prob(), t.cdf_prob(), lo, hi)
    }

    /// `F⁻¹(u)` for `u ∈ (0, 1)`.
    pub fn quantile(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::domain("u", u, "(0, 1)"));
        }
        Ok(self.quantile_tails(Tails::from_cdf(Prob::new(u))))
    }

    /// `F⁻¹(u)` by bisection on the cdf, regardless of homogeneity.
    pub fn quantile_numeric(&self, u: f64) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::domain("u", u, "(0, 1)"));
        }
        Ok(self.quantile_tails_numeric(Tails::from_cdf(Prob::new(u))))
    }
}

/// Whether the closed-form composition applies to `(het, hom)`.
pub fn composable(het: &ExtremeDistribution, hom: &ExtremeDistribution) -> bool {
    check_composable(het, hom).is_ok()
}

fn check_composable(het: &ExtremeDistribution, hom: &ExtremeDistribution) -> Result<()> {
    if het.kind != hom.kind {
        return Err(Error::Argument(format!(
            "cannot compose a sample {} with a sample {}",
            het.kind, hom.kind
        )));
    }
    if het.sample.baseline != hom.sample.baseline {
        return Err(Error::Argument(format!(
            "baselines differ: {} vs {}",
            het.sample.baseline, hom.sample.baseline
        )));
    }
    if !hom.sample.is_homogeneous() {
        return Err(Error::Argument("second sample must be homogeneous".into()));
    }
    if het.sample.n() != hom.sample.n() {
        return Err(Error::Argument(format!(
            "sample sizes differ: {} vs {}",
            het.sample.n(),
            hom.sample.n()
        )));
    }
    Ok(())
}

pub(crate) fn compose_unchecked(het: &ExtremeDistribution, hom: &ExtremeDistribution, x: f64) -> Composition {
    let st = het.state(x);
    let gy = &hom.sample.generator;
    let same = het.sample.generator == *gy;
    let s_y = if same { st.sum } else { gy.inv_coord(st.natural) };
    let n = hom.sample.n() as f64;
    let c_y = gy.scale_coord(s_y, 1.0 / n);
    let w = gy.phi_coord(c_y);
    let m = &hom.margins[0];
    let alpha = m.alpha();
    let b = &hom.sample.baseline;
    let (y, which, inner, ln_factor) = match hom.kind {
        ExtremeKind::Min => {
            let g = m.baseline_sf_for(w);
            let y = b.quantile_tails(Tails::from_sf(g));
            // r(y)·(α + ᾱw)/α
            let f = b.hazard_unchecked(y).ln() + (alpha * w.complement_value() + w.value()).ln() - alpha.ln();
            (y, if same { InnerFunction::Gamma } else { InnerFunction::Eta }, g, f)
        }
        ExtremeKind::Max => {
            let be = m.baseline_cdf_for(w);
            let y = b.quantile_tails(Tails::from_cdf(be));
            // r̃(y)·(1 - ᾱw)
            let f = b.reversed_hazard_unchecked(y).ln() + (w.complement_value() + alpha * w.value()).ln();
            (y, if same { InnerFunction::Beta } else { InnerFunction::Zeta }, be, f)
        }
    };
    let ln_s = gy.ln_neg_dphi_coord(s_y);
    let density = if w.value() == 0.0 || ln_s == f64::NEG_INFINITY {
        0.0
    } else {
        (n.ln() + w.ln() + ln_s - gy.ln_neg_dphi_coord(c_y) + ln_factor).exp()
    };
    Composition {
        x,
        y,
        profile: TransformProfile::new(x, which, inner.value()),
        density,
    }
}

/// `G⁻¹(F(x))` through the active closed-form inner function, where `F` is
/// the law of `het` and `G` that of the homogeneous `hom`.
pub fn compose(het: &ExtremeDistribution, hom: &ExtremeDistribution, x: f64) -> Result<Composition> {
    check_composable(het, hom)?;
    het.check_x(x)?;
    Ok(compose_unchecked(het, hom, x))
}

pub fn compose_quantile_cdf(
    het: &ExtremeDistribution,
    hom: &ExtremeDistribution,
    x: f64,
) -> Result<(f64, TransformProfile)> {
    let c = compose(het, hom, x)?;
    Ok((c.y, c.profile))
}

/// `g(G⁻¹(F(x)))` from the closed form.
pub fn composed_density(het: &ExtremeDistribution, hom: &ExtremeDistribution, x: f64) -> Result<f64> {
    Ok(compose(het, hom, x)?.density)
}

/// `G⁻¹(F(x))` and `g` there for an arbitrary pair, by numerical inversion.
pub(crate) fn compose_numeric(a: &ExtremeDistribution, b: &ExtremeDistribution, x: f64) -> (f64, f64) {
    let y = b.quantile_tails(a.tails_unchecked(x));
    (y, b.density_unchecked(y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::central_difference;
    use crate::grid::Grid;
    use approx::assert_relative_eq;

    fn unit_exp() -> BaselineSpec {
        BaselineSpec::weibull_survival(1.0, 1.0).unwrap()
    }

    fn ind() -> GeneratorSpec {
        GeneratorSpec::independence()
    }

    fn ex51() -> (ExtremeDistribution, ExtremeDistribution) {
        let b = BaselineSpec::weibull_survival(1.0, 0.3).unwrap();
        let g = GeneratorSpec::nelsen_4_2_19(5.0).unwrap();
        let x = POSampleSpec::new(b.clone(), vec![0.34, 0.65, 1.23], g.clone()).unwrap();
        let y = POSampleSpec::homogeneous(b, 0.88, 3, g).unwrap();
        (ExtremeDistribution::min(x), ExtremeDistribution::min(y))
    }

    fn ce31a() -> (ExtremeDistribution, ExtremeDistribution) {
        let b = BaselineSpec::weibull_survival(9.0, 0.9).unwrap();
        let x = POSampleSpec::new(b.clone(), vec![7.0, 25.0, 100.0], ind()).unwrap();
        let y = POSampleSpec::homogeneous(b, 44.0, 3, ind()).unwrap();
        (ExtremeDistribution::min(x), ExtremeDistribution::min(y))
    }

    fn ex53() -> (ExtremeDistribution, ExtremeDistribution) {
        let b = BaselineSpec::negative_weibull(3.0, 0.3).unwrap();
        let g = GeneratorSpec::nelsen_4_2_8(1.5).unwrap();
        let x = POSampleSpec::new(b.clone(), vec![0.95, 0.32, 1.54, 0.76], g.clone()).unwrap();
        let y = POSampleSpec::homogeneous(b, 0.8925, 4, g).unwrap();
        (ExtremeDistribution::max(x), ExtremeDistribution::max(y))
    }

    #[test]
    fn iid_exponential_minimum() {
        let s = POSampleSpec::homogeneous(unit_exp(), 1.0, 3, ind()).unwrap();
        let d = ExtremeDistribution::min(s);
        assert_relative_eq!(d.survival(1.0).unwrap(), (-3.0f64).exp(), max_relative = 1e-15);
        assert_relative_eq!(d.density(1.0).unwrap(), 3.0 * (-3.0f64).exp(), max_relative = 1e-14);
        assert_relative_eq!(d.quantile(1.0 - (-3.0f64).exp()).unwrap(), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn independence_reduces_to_products() {
        let (x, _) = ce31a();
        for t in [0.001, 0.01, 0.1, 0.5, 2.0] {
            let prod: f64 = x.marginal_tails(t).unwrap().iter().map(|m| m.sf).product();
            assert!((x.survival(t).unwrap() - prod).abs() <= 1e-12);
        }
        let s = POSampleSpec::new(unit_exp(), vec![0.9, 0.95, 27.0, 37.0], ind()).unwrap();
        let mx = ExtremeDistribution::max(s);
        for t in [0.01, 0.5, 3.0] {
            let prod: f64 = mx.marginal_tails(t).unwrap().iter().map(|m| m.cdf).product();
            assert!((mx.cdf(t).unwrap() - prod).abs() <= 1e-12);
        }
    }

    #[test]
    fn density_matches_cdf_difference() {
        for (a, _) in [ex51(), ce31a(), ex53()] {
            let grid = a.sample().baseline().natural_grid(200);
            for x in grid.xs_ascending() {
                let f = a.density(x).unwrap();
                if f < 1e-12 {
                    continue;
                }
                let h = 1e-6;
                let fd = central_difference(|s| a.tails_unchecked(s).cdf, x, h);
                let fd_sf = -central_difference(|s| a.tails_unchecked(s).sf, x, h);
                let fd = if a.tails_unchecked(x).cdf < 0.5 { fd } else { fd_sf };
                assert!(((f - fd) / f).abs() < 1e-4, "x={x} f={f} fd={fd}");
            }
        }
    }

    #[test]
    fn homogeneous_quantile_closed_form_matches_bisection() {
        let (_, y) = ex51();
        let (_, y3) = ex53();
        for d in [y, y3] {
            for i in 1..100 {
                let u = i as f64 / 100.0;
                let a = d.quantile(u).unwrap();
                let b = d.quantile_numeric(u).unwrap();
                assert!((a - b).abs() <= 1e-8 * (1.0 + a.abs()), "u={u}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn composition_of_a_sample_with_itself_is_identity() {
        let (_, y) = ex51();
        for x in [0.01, 0.5, 3.0, 40.0] {
            let c = compose(&y, &y, x).unwrap();
            assert_relative_eq!(c.y, x, max_relative = 1e-12);
            assert_relative_eq!(c.density, y.density(x).unwrap(), max_relative = 1e-10);
        }
    }

    #[test]
    fn closed_form_composition_matches_numeric_path() {
        for (a, b) in [ex51(), ce31a(), ex53()] {
            let grid = a.sample().baseline().natural_grid(200);
            for x in grid.xs_ascending() {
                let p = a.tails_unchecked(x);
                if !(p.cdf > 1e-13 && p.sf > 1e-13) {
                    continue;
                }
                let c = compose(&a, &b, x).unwrap();
                let y_num = b.quantile_tails_numeric(p);
                assert!((c.y - y_num).abs() <= 1e-8 * (1.0 + c.y.abs()), "x={x}: {} vs {y_num}", c.y);
                let g = b.density(c.y).unwrap();
                assert!((c.density - g).abs() <= 1e-6 * g.max(1e-300), "x={x}: {} vs {g}", c.density);
            }
        }
    }

    #[test]
    fn ce31_product_formula() {
        // g(G⁻¹(F(x))) = (1/α) 3 (Π F̄ᵢ)(α + ᾱ(Π F̄ᵢ)^{1/3}) r(F̄⁻¹(γ))
        let (a, b) = ce31a();
        let base = a.sample().baseline().clone();
        let alpha = 44.0;
        for x in Grid::half_line(100).xs_ascending() {
            let prod: f64 = a.marginal_tails(x).unwrap().iter().map(|m| m.sf).product();
            if prod < 1e-250 {
                continue;
            }
            let c = compose(&a, &b, x).unwrap();
            let root = prod.powf(1.0 / 3.0);
            let expect = 3.0 * prod * (alpha + (1.0 - alpha) * root) * base.hazard(c.y).unwrap() / alpha;
            assert_relative_eq!(c.density, expect, max_relative = 1e-8);
            assert_eq!(c.profile.active().unwrap().0, InnerFunction::Gamma);
        }
    }

    #[test]
    fn bounds_against_marginals() {
        let (mn, _) = ex51();
        let (mx, _) = ex53();
        for x in [0.01, 0.3, 2.0, 50.0] {
            let f = mn.cdf(x).unwrap();
            for m in mn.marginal_tails(x).unwrap() {
                assert!(f >= m.cdf - 1e-15);
            }
        }
        for x in [-50.0, -1.0, -0.01] {
            let f = mx.cdf(x).unwrap();
            for m in mx.marginal_tails(x).unwrap() {
                assert!(f <= m.cdf + 1e-15);
            }
        }
    }

    #[test]
    fn mismatched_pairs_are_rejected() {
        let (a, _) = ex51();
        let (_, b) = ex53();
        assert!(compose(&a, &b, 1.0).is_err());
        let (x, _) = ce31a();
        assert!(compose(&x, &x, 1.0).is_err());
    }

    #[test]
    fn cross_generator_uses_eta() {
        let b = BaselineSpec::weibull_survival(1.0, 0.3).unwrap();
        let x = POSampleSpec::homogeneous(b.clone(), 0.5, 3, GeneratorSpec::nelsen_4_2_19(5.0).unwrap()).unwrap();
        let y = POSampleSpec::homogeneous(b, 0.5, 3, ind()).unwrap();
        let (x, y) = (ExtremeDistribution::min(x), ExtremeDistribution::min(y));
        let c = compose(&x, &y, 0.7).unwrap();
        assert_eq!(c.profile.active().unwrap().0, InnerFunction::Eta);
        let num = y.quantile_tails_numeric(x.tails_unchecked(0.7));
        assert!((c.y - num).abs() < 1e-10);
    }

    #[test]
    fn invalid_samples() {
        assert!(POSampleSpec::new(unit_exp(), vec![1.0], ind()).is_err());
        assert!(POSampleSpec::new(unit_exp(), vec![1.0, -0.5], ind()).is_err());
        let d = ExtremeDistribution::min(POSampleSpec::homogeneous(unit_exp(), 1.0, 2, ind()).unwrap());
        assert!(d.quantile(1.0).is_err());
        assert!(d.cdf(-1.0).is_err());
    }
}
