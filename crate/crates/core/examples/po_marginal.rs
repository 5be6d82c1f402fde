//! The proportional-odds transform of a baseline.

use po_extremes::{BaselineSpec, POMarginal, Result, Scale};

fn main() -> Result<()> {
    let base = BaselineSpec::weibull_survival(1.0, 1.0)?;
    println!("baseline {base}");
    for alpha in [0.25, 1.0, 4.0] {
        let m = POMarginal::new(base.clone(), alpha)?;
        let x = 1.0;
        println!(
            "alpha = {alpha}: S({x}) = {:.6}  f = {:.6}  hazard ratio = {:.6}  odds = {:.6}  median = {:.6}",
            m.survival(x)?,
            m.density(x)?,
            m.hazard_ratio(x)?,
            m.odds(x)?,
            m.quantile(0.5, Scale::Cdf)?
        );
    }
    Ok(())
}
