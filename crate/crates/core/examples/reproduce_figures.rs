//! Writes the CSV series and an SVG plot for every figure into a directory
//! (first argument, default `figures/`).

use po_extremes::figures::{reproduce, FIGURES};
use po_extremes::grid::DEFAULT_POINTS;
use po_extremes::order_checks::DEFAULT_TOL;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "figures".into());
    std::fs::create_dir_all(&dir)?;
    for (fig, _) in FIGURES {
        let rep = reproduce(fig, DEFAULT_POINTS, DEFAULT_TOL)?;
        std::fs::write(format!("{dir}/{fig}.csv"), rep.series.to_csv())?;
        std::fs::write(format!("{dir}/{fig}.svg"), rep.to_svg()?)?;
        println!(
            "{fig} ({}): {}  [{}]",
            rep.scenario,
            rep.verdict_line,
            if rep.matches() { "as expected" } else { "MISMATCH" }
        );
    }
    Ok(())
}
