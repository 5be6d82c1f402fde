//! The proportional-odds transform of a baseline:
//!
//! ```text
//! F̄_X(x) = α F̄(x) / (1 - ᾱ F̄(x)),   ᾱ = 1 - α,
//! ```
//!
//! equivalently `θ_X = α θ`, with `θ = F̄/F` the odds function.
//!
//! The denominator `1 - ᾱF̄` is formed as `F + αF̄`, which is the same number
//! but never subtracts two values close to one.

use serde::Serialize;

use crate::baselines::{BaselineSpec, Scale, Tails};
use crate::error::{Error, Result};
use crate::prob::Prob;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct POMarginal {
    baseline: BaselineSpec,
    alpha: f64,
    alpha_bar: f64,
}

impl POMarginal {
    pub fn new(baseline: BaselineSpec, alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha.is_finite()) {
            return Err(Error::domain("alpha", alpha, "(0, ∞)"));
        }
        Ok(POMarginal {
            baseline,
            alpha,
            alpha_bar: 1.0 - alpha,
        })
    }

    pub fn baseline(&self) -> &BaselineSpec {
        &self.baseline
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn alpha_bar(&self) -> f64 {
        self.alpha_bar
    }

    fn check_x(&self, x: f64) -> Result<()> {
        if !self.baseline.support().contains(x) {
            return Err(Error::domain("x", x, self.baseline.support().to_string()));
        }
        Ok(())
    }

    /// `1 - ᾱF̄ = F + αF̄`.
    pub(crate) fn denominator(&self, base: &Tails) -> f64 {
        base.cdf + self.alpha * base.sf
    }

    /// Tails of the PO marginal given the baseline tails at the same point.
    pub(crate) fn transform(&self, base: &Tails) -> Tails {
        let d = self.denominator(base);
        // ln d as 1 + (α-1)F̄ in the upper tail and α(1 + (1/α - 1)F) in the
        // lower one, so that neither log loses the small term
        let (ln_cdf, ln_sf) = if base.sf < 0.5 {
            let ln_d = ((self.alpha - 1.0) * base.sf).ln_1p();
            (base.ln_cdf - ln_d, self.alpha.ln() + base.ln_sf - ln_d)
        } else {
            let ln_d_over_alpha = ((1.0 / self.alpha - 1.0) * base.cdf).ln_1p();
            (base.ln_cdf - self.alpha.ln() - ln_d_over_alpha, base.ln_sf - ln_d_over_alpha)
        };
        Tails {
            cdf: base.cdf / d,
            sf: self.alpha * base.sf / d,
            ln_cdf,
            ln_sf,
        }
    }

    pub(crate) fn tails(&self, x: f64) -> Tails {
        self.transform(&self.baseline.tails(x))
    }

    /// `ln` of the PO density `α f / (1 - ᾱF̄)²`.
    pub(crate) fn ln_density_from(&self, x: f64, base: &Tails) -> f64 {
        self.alpha.ln() + self.baseline.ln_density(x) - 2.0 * self.denominator(base).ln()
    }

    /// Baseline survival at the point where the marginal survival is `s`:
    /// `F̄ = s / (α(1 - s) + s)`.
    pub(crate) fn baseline_sf_for(&self, s: Prob) -> Prob {
        let d = self.alpha * s.complement_value() + s.value();
        Prob::from_parts(
            s.value() / d,
            self.alpha * s.complement_value() / d,
            s.ln() - d.ln(),
        )
    }

    /// Baseline cdf at the point where the marginal cdf is `c`:
    /// `F = αc / (1 - c + αc)`.
    pub(crate) fn baseline_cdf_for(&self, c: Prob) -> Prob {
        let d = c.complement_value() + self.alpha * c.value();
        Prob::from_parts(
            self.alpha * c.value() / d,
            c.complement_value() / d,
            self.alpha.ln() + c.ln() - d.ln(),
        )
    }

    /// `F_X⁻¹(u)` or `F̄_X⁻¹(u)` for `u ∈ (0, 1)`.
    pub fn quantile(&self, u: f64, scale: Scale) -> Result<f64> {
        if !(u > 0.0 && u < 1.0) {
            return Err(Error::domain("u", u, "(0, 1)"));
        }
        Ok(self.quantile_tails(match scale {
            Scale::Cdf => Tails::from_cdf(Prob::new(u)),
            Scale::Survival => Tails::from_sf(Prob::new(u)),
        }))
    }

    /// The point where the marginal has tails `t`.
    pub(crate) fn quantile_tails(&self, t: Tails) -> f64 {
        let base = if t.sf < 0.5 {
            Tails::from_sf(self.baseline_sf_for(t.sf_prob()))
        } else {
            Tails::from_cdf(self.baseline_cdf_for(t.cdf_prob()))
        };
        self.baseline.quantile_tails(base)
    }

    pub fn survival(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        let v = self.tails(x).sf;
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::Invariant(format!("PO survival {v} outside [0, 1] at x = {x}")));
        }
        Ok(v)
    }

    pub fn cdf(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        Ok(self.tails(x).cdf)
    }

    pub fn density(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        let base = self.baseline.tails(x);
        Ok(self.ln_density_from(x, &base).exp())
    }

    /// Ratio of the PO hazard rate to the baseline hazard, `1/(1 - ᾱF̄)`.
    pub fn hazard_ratio(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        Ok(1.0 / self.denominator(&self.baseline.tails(x)))
    }

    /// Odds of survival `F̄_X / F_X = α F̄/F`.
    pub fn odds(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        let t = self.tails(x);
        Ok(t.sf / t.cdf)
    }

    /// Hazard rate of the PO marginal, `r(x)/(1 - ᾱF̄(x))`.
    pub fn hazard(&self, x: f64) -> Result<f64> {
        Ok(self.baseline.hazard(x)? * self.hazard_ratio(x)?)
    }

    /// Reversed hazard rate of the PO marginal, `α r̃(x)/(1 - ᾱF̄(x))`.
    pub fn reversed_hazard(&self, x: f64) -> Result<f64> {
        Ok(self.alpha * self.baseline.reversed_hazard(x)? * self.hazard_ratio(x)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::central_difference;
    use approx::assert_relative_eq;

    fn unit_exp() -> BaselineSpec {
        BaselineSpec::weibull_survival(1.0, 1.0).unwrap()
    }

    #[test]
    fn identity_at_alpha_one() {
        let b = BaselineSpec::pareto_lomax(13.0, 0.9).unwrap();
        let m = POMarginal::new(b.clone(), 1.0).unwrap();
        for x in [0.0, 0.3, 4.0, 100.0] {
            assert_relative_eq!(m.survival(x).unwrap(), b.survival(x).unwrap(), max_relative = 1e-12);
            assert_relative_eq!(m.cdf(x).unwrap(), b.cdf(x).unwrap(), max_relative = 1e-12);
            assert_relative_eq!(m.density(x).unwrap(), b.density(x).unwrap(), max_relative = 1e-12);
            assert_eq!(m.hazard_ratio(x).unwrap(), 1.0);
        }
    }

    #[test]
    fn hand_values() {
        // baseline survival 0.5 at x = ln 2
        let m = POMarginal::new(unit_exp(), 2.0).unwrap();
        let x = 2f64.ln();
        assert_relative_eq!(m.survival(x).unwrap(), 2.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(m.cdf(x).unwrap(), 1.0 / 3.0, max_relative = 1e-15);
        assert_relative_eq!(m.density(0.0).unwrap(), 0.5, max_relative = 1e-15);
        let big = POMarginal::new(unit_exp(), 1e6).unwrap();
        assert!((big.survival(x).unwrap() - 1.0).abs() < 1e-5);
    }

    #[test]
    fn cdf_at_upper_end() {
        let m = POMarginal::new(BaselineSpec::truncated_exp_growth(), 0.3).unwrap();
        assert_eq!(m.cdf(1.0).unwrap(), 1.0);
    }

    #[test]
    fn rejects_nonpositive_alpha() {
        assert!(POMarginal::new(unit_exp(), 0.0).is_err());
        assert!(POMarginal::new(unit_exp(), -2.0).is_err());
    }

    #[test]
    fn density_matches_difference_and_odds_scale() {
        let b = BaselineSpec::weibull_survival(9.0, 0.9).unwrap();
        for alpha in [0.2, 0.88, 7.0] {
            let m = POMarginal::new(b.clone(), alpha).unwrap();
            for x in [0.01, 0.1, 0.5, 1.0] {
                let fd = central_difference(|s| m.cdf(s).unwrap(), x, 1e-6);
                assert_relative_eq!(m.density(x).unwrap(), fd, max_relative = 1e-5);
                let base_odds = b.survival(x).unwrap() / b.cdf(x).unwrap();
                assert_relative_eq!(m.odds(x).unwrap(), alpha * base_odds, max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn quantile_inverts_both_tails() {
        let b = BaselineSpec::weibull_survival(9.0, 0.9).unwrap();
        let m = POMarginal::new(b, 44.0).unwrap();
        for u in [1e-9, 0.01, 0.3, 0.5, 0.9, 1.0 - 1e-9] {
            let x = m.quantile(u, Scale::Cdf).unwrap();
            assert_relative_eq!(m.cdf(x).unwrap(), u, max_relative = 1e-9);
            let x = m.quantile(u, Scale::Survival).unwrap();
            assert_relative_eq!(m.survival(x).unwrap(), u, max_relative = 1e-9);
        }
    }

    #[test]
    fn hazard_ratio_direction() {
        let b = unit_exp();
        let up = POMarginal::new(b.clone(), 3.0).unwrap();
        let down = POMarginal::new(b, 0.3).unwrap();
        let xs = [0.1, 0.5, 1.0, 2.0, 5.0];
        for w in xs.windows(2) {
            assert!(up.hazard_ratio(w[1]).unwrap() > up.hazard_ratio(w[0]).unwrap());
            assert!(down.hazard_ratio(w[1]).unwrap() < down.hazard_ratio(w[0]).unwrap());
        }
        assert!((up.hazard_ratio(40.0).unwrap() - 1.0).abs() < 1e-15);
    }
}
