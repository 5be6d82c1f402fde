//! Distributions of sample minima and maxima, and the quantile composition
//! `G^-1(F(x))` between a heterogeneous and a homogeneous sample.

use po_extremes::extremes::compose;
use po_extremes::{BaselineSpec, ExtremeDistribution, GeneratorSpec, POSampleSpec, Result};

fn main() -> Result<()> {
    let base = BaselineSpec::weibull_survival(1.0, 0.3)?;
    let gen = GeneratorSpec::nelsen_4_2_19(5.0)?;
    let x = POSampleSpec::new(base.clone(), vec![0.34, 0.65, 1.23], gen.clone())?;
    let y = POSampleSpec::homogeneous(base, 0.88, 3, gen)?;

    let x_min = ExtremeDistribution::min(x.clone());
    let y_min = ExtremeDistribution::min(y);
    let x_max = ExtremeDistribution::max(x);
    for t in [0.01, 0.1, 1.0, 10.0] {
        let c = compose(&x_min, &y_min, t)?;
        let (inner, value) = c.profile.active().expect("closed form");
        println!(
            "x = {t:<5} min: S = {:.6e} f = {:.6e} | max: F = {:.6e} | G^-1(F(x)) = {:.6e} via {inner:?} = {value:.6e}",
            x_min.survival(t)?,
            x_min.density(t)?,
            x_max.cdf(t)?,
            c.y
        );
    }
    for u in [0.1, 0.5, 0.9] {
        println!(
            "u = {u}: X1:3 quantile {:.8e}, Y1:3 quantile {:.8e}",
            x_min.quantile(u)?,
            y_min.quantile(u)?
        );
    }
    Ok(())
}
