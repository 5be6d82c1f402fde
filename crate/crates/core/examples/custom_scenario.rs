//! A scenario written inline, run end to end.

use po_extremes::order_checks::{run_scenario, DEFAULT_TOL};
use po_extremes::Scenario;

const SCENARIO: &str = r#"
id = "lomax-minima"
kind = "min"
checks = ["dispersive", "star", "3.1", "3.3"]

[baseline]
family = "pareto-lomax"
params = [2.0, 1.5]

[x]
alphas = [0.2, 0.5, 0.9]
generator = { family = "nelsen-4-2-19", params = [3.0] }

[y]
alpha = 0.9
generator = { family = "nelsen-4-2-19", params = [3.0] }

[grid]
kind = "half-line"
points = 1000
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s = Scenario::from_toml_str(SCENARIO)?;
    let r = run_scenario(&s, DEFAULT_TOL)?;
    for c in [&r.dispersive, &r.dispersive_quantile, &r.star].into_iter().flatten() {
        println!("{:?} / {:?}: {}", c.order, c.criterion, c.relation);
    }
    for t in &r.theorems {
        println!("theorem {}: hypotheses pass = {}, conclusion {}, {:?}", t.theorem, t.hypotheses.all_pass, t.conclusion, t.quadrant);
        for h in t.hypotheses.failed() {
            println!("  failed: {} ({})", h.name, h.evidence);
        }
    }
    Ok(())
}
