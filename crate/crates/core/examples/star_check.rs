//! Star order through the monotonicity of `G^-1(F(x))/x`.

use po_extremes::order_checks::{compare_star, star_series, DEFAULT_TOL};
use po_extremes::{BaselineSpec, ExtremeDistribution, GeneratorSpec, Grid, POSampleSpec, Result};

fn main() -> Result<()> {
    let weibull_min = |k: f64| -> Result<ExtremeDistribution> {
        let b = BaselineSpec::weibull_survival(1.0, k)?;
        Ok(ExtremeDistribution::min(POSampleSpec::homogeneous(b, 1.0, 2, GeneratorSpec::independence())?))
    };
    let (k2, k1) = (weibull_min(2.0)?, weibull_min(1.0)?);
    let grid = Grid::half_line(2000);
    let c = compare_star(&k2, &k1, &grid, DEFAULT_TOL)?;
    println!("Weibull shape 2 vs shape 1: {}", c.relation);

    let base = BaselineSpec::truncated_exp_growth();
    let gen = GeneratorSpec::nelsen_4_2_8(1.5)?;
    let a = ExtremeDistribution::max(POSampleSpec::new(base.clone(), vec![0.5, 0.8, 1.7], gen.clone())?);
    let b = ExtremeDistribution::max(POSampleSpec::homogeneous(base, 1.6, 3, gen)?);
    let grid = Grid::interval(0.0, 1.0, 2000);
    for r in star_series(&a, &b, &grid)?.iter().step_by(400) {
        println!("x = {:.4}  G^-1(F(x)) = {:.6}  ratio = {:.6}  slope = {:.3e}", r.x, r.lhs, r.ratio, r.slope);
    }
    println!("X3:3 vs Y3:3: {}", compare_star(&a, &b, &grid, DEFAULT_TOL)?.relation);
    Ok(())
}
