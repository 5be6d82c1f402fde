//! Dispersive order by the density and the quantile-spread criteria.

use po_extremes::order_checks::{compare_dispersive, compare_dispersive_quantile, ugrid_from, DEFAULT_TOL};
use po_extremes::{BaselineSpec, ExtremeDistribution, GeneratorSpec, Grid, POSampleSpec, Result};

fn main() -> Result<()> {
    // Minimum of two iid exponentials with rate 1 is exponential with rate 2.
    let iid = |c: f64| -> Result<ExtremeDistribution> {
        let b = BaselineSpec::weibull_survival(c, 1.0)?;
        Ok(ExtremeDistribution::min(POSampleSpec::homogeneous(b, 1.0, 2, GeneratorSpec::independence())?))
    };
    let (fast, slow) = (iid(1.0)?, iid(0.5)?);
    let grid = Grid::half_line(2000);
    let by_density = compare_dispersive(&fast, &slow, &grid, DEFAULT_TOL)?;
    let by_quantile = compare_dispersive_quantile(&fast, &slow, &ugrid_from(&fast, &grid)?, DEFAULT_TOL)?;
    println!("Exp(2) vs Exp(1): density {}, quantile spread {}", by_density.relation, by_quantile.relation);

    // Heterogeneous vs homogeneous dependent minima.
    let base = BaselineSpec::weibull_survival(1.0, 0.3)?;
    let gen = GeneratorSpec::nelsen_4_2_19(5.0)?;
    let a = ExtremeDistribution::min(POSampleSpec::new(base.clone(), vec![0.34, 0.65, 1.23], gen.clone())?);
    let b = ExtremeDistribution::min(POSampleSpec::homogeneous(base, 0.88, 3, gen)?);
    let c = compare_dispersive(&a, &b, &grid, DEFAULT_TOL)?;
    println!(
        "X1:3 vs Y1:3: {} (le {}, ge {}; {} points, largest le slack {:.3e})",
        c.relation, c.le.verdict, c.ge.verdict, c.le.evaluated, c.le.max_violation
    );
    Ok(())
}
