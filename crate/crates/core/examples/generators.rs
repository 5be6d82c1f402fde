//! Evaluate the catalog generators and run their validity and shape checks.

use po_extremes::generators::{check_generator_validity, check_log_shape, check_ratio_shape, Shape};
use po_extremes::{GeneratorSpec, Result};

fn main() -> Result<()> {
    let gens = [
        GeneratorSpec::independence(),
        GeneratorSpec::nelsen_4_2_19(5.0)?,
        GeneratorSpec::nelsen_4_2_8(1.5)?,
    ];
    for g in &gens {
        println!("{g}  (t_max = {}, strict = {})", g.t_max(), g.is_strict());
        for t in [0.0, 0.1, 0.5, 0.9] {
            let u = g.phi(t)?;
            println!(
                "  t = {t:<4} phi = {u:.6}  phi^-1(phi) = {:.6}  phi' = {:.6}  phi'' = {:.6}",
                g.phi_inverse(u)?,
                g.phi_derivative(t, 1)?,
                g.phi_derivative(t, 2)?
            );
        }
        let grid = g.default_grid(2000);
        let validity = check_generator_validity(g, 3, &grid)?;
        println!("  valid for n = 3: {}", validity.all_pass);
        println!(
            "  log-convex: {}  log-concave: {}  phi/phi' concave: {}  phi/phi' convex: {}",
            check_log_shape(g, &grid, Shape::Convex)?.verdict,
            check_log_shape(g, &grid, Shape::Concave)?.verdict,
            check_ratio_shape(g, &grid, Shape::Concave)?.verdict,
            check_ratio_shape(g, &grid, Shape::Convex)?.verdict,
        );
    }

    // A user generator: Clayton with theta = 1, phi(t) = 1/(1 + t).
    let clayton = GeneratorSpec::custom("clayton-1", f64::INFINITY, |t| 1.0 / (1.0 + t))?;
    let report = check_generator_validity(&clayton, 2, &clayton.default_grid(500))?;
    for h in &report.hypotheses {
        println!("clayton-1 {}: {}", h.name, h.verdict);
    }
    Ok(())
}
