//! Baseline families: point evaluation, quantiles and aging classification.

use po_extremes::{BaselineSpec, Result, Scale};

fn main() -> Result<()> {
    let families = [
        BaselineSpec::weibull_survival(1.0, 0.3)?,
        BaselineSpec::exp_root(5.0, 0.5)?,
        BaselineSpec::pareto_lomax(13.0, 0.9)?,
        BaselineSpec::power_pareto(2.0)?,
        BaselineSpec::negative_weibull(3.0, 0.3)?,
        BaselineSpec::truncated_exp_growth(),
    ];
    for b in &families {
        println!("{b}");
        let q = b.quantile(0.25, Scale::Cdf)?;
        let r = b.evaluate(q)?;
        println!(
            "  lower quartile {q:.6}: f = {:.6}, r = {:.6}, reversed r = {:.6}, odds = {:.6}",
            r.density, r.hazard, r.reversed_hazard, r.odds
        );
        let aging = b.classify_aging(&b.natural_grid(2000))?;
        println!(
            "  hazard {}, reversed hazard {}, x*hazard {}, x*reversed hazard {}",
            aging.hazard.trend, aging.reversed_hazard.trend, aging.x_hazard.trend, aging.x_reversed_hazard.trend
        );
    }

    // A support override may only drop regions without mass.
    let lomax = BaselineSpec::pareto_lomax(1.0, 0.6)?;
    println!("override [-1, inf): {}", lomax.clone().with_support(-1.0, f64::INFINITY).unwrap_err());
    println!("override [0, 10]: {}", lomax.with_support(0.0, 10.0).unwrap_err());
    Ok(())
}
