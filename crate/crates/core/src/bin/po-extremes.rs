use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use po_extremes::extremes::ExtremeDistribution;
use po_extremes::figures::{reproduce, FIGURES};
use po_extremes::mc::{empirical_cdf_series, ks_extreme, sample};
use po_extremes::order_checks::{run_scenario, Comparison, ScenarioReport, DEFAULT_TOL};
use po_extremes::scenario::{registry, Scenario};
use po_extremes::grid::DEFAULT_POINTS;

#[derive(Parser)]
#[command(name = "po-extremes", version, about = "Order checks for extremes of dependent proportional-odds samples")]
struct Cli {
    /// Grid density for series and shape checks.
    #[arg(long, global = true, default_value_t = DEFAULT_POINTS)]
    grid_points: usize,
    /// Relative tolerance of the order checks.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Also write an SVG line plot of the series.
    #[arg(long, global = true)]
    plot: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Series and verdict behind a figure (fig1a … fig6) or a built-in scenario id.
    Reproduce { figure_id: String },
    /// Run the checks of a scenario file and compare with its expectations.
    Check { file: PathBuf },
    /// Monte-Carlo draws of a scenario sample; empirical vs analytic cdf of its extreme.
    Sample {
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Which sample of the scenario to draw.
        #[arg(long, value_enum, default_value_t = Which::X)]
        which: Which,
    },
    /// List built-in scenarios and figure ids.
    ListScenarios,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    X,
    Y,
}

enum Outcome {
    Match,
    Mismatch,
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_plot(cli: &Cli, svg: impl FnOnce() -> po_extremes::Result<String>) -> Result<(), String> {
    if let Some(p) = &cli.plot {
        let svg = svg().map_err(|e| e.to_string())?;
        std::fs::write(p, svg).map_err(|e| format!("cannot write {}: {e}", p.display()))?;
    }
    Ok(())
}

fn load(file: &PathBuf, points: usize) -> Result<Scenario, String> {
    Scenario::from_path(file)
        .map(|s| s.with_points(points))
        .map_err(|e| format!("{}: {e}", file.display()))
}

fn render_comparison(out: &mut String, label: &str, c: &Comparison) {
    let _ = writeln!(
        out,
        "{label}: {}  (le: {}, ge: {})",
        c.relation, c.le.verdict, c.ge.verdict
    );
    for r in [&c.le, &c.ge] {
        if r.witnesses.is_empty() {
            continue;
        }
        let ws: Vec<String> = r
            .witnesses
            .iter()
            .take(3)
            .map(|w| format!("x={:.6e} slack={:.3e}", w.x, w.slack))
            .collect();
        let _ = writeln!(
            out,
            "  {:?} witnesses ({} points, max violation {:.3e}): {}",
            r.direction,
            r.evaluated,
            r.max_violation,
            ws.join("; ")
        );
    }
}

fn render_report(s: &Scenario, r: &ScenarioReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "scenario {} ({}, n = {})", r.id, r.kind, s.x.n());
    if let Some(t) = &s.title {
        let _ = writeln!(out, "  {t}");
    }
    let _ = writeln!(out, "grid: {}  tol: {:e}", r.grid, r.tol);
    let _ = writeln!(out, "X: alphas {:?}, {}, {}", s.x.alphas(), s.x.generator(), s.x.baseline());
    let _ = writeln!(out, "Y: alpha {}, {}, {}", s.y.alphas()[0], s.y.generator(), s.y.baseline());
    out.push('\n');
    if let Some(c) = &r.dispersive {
        render_comparison(&mut out, "dispersive (density)", c);
    }
    if let Some(c) = &r.dispersive_quantile {
        render_comparison(&mut out, "dispersive (quantile spread)", c);
    }
    if let Some(c) = &r.star {
        render_comparison(&mut out, "star (ratio)", c);
    }
    for t in &r.theorems {
        let _ = writeln!(
            out,
            "\ntheorem {}: hypotheses {}, conclusion {}, {:?}",
            t.theorem,
            if t.hypotheses.all_pass { "all pass" } else { "not all pass" },
            t.conclusion,
            t.quadrant
        );
        for h in &t.hypotheses.hypotheses {
            let _ = writeln!(out, "  [{:<12}] {}: {}", h.verdict.to_string(), h.name, h.evidence);
        }
    }
    if !r.expectations.is_empty() {
        out.push('\n');
        for e in &r.expectations {
            let _ = writeln!(
                out,
                "expect {} = {}: got {} ({})",
                e.what,
                e.expected,
                e.actual,
                if e.matches { "ok" } else { "MISMATCH" }
            );
        }
    }
    let _ = writeln!(
        out,
        "\nresult: {}",
        if r.expectations_met() { "expectations met" } else { "expectation mismatch" }
    );
    out
}

fn run(cli: &Cli) -> Result<Outcome, String> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(format!("--tol must be positive, got {}", cli.tol));
    }
    match &cli.command {
        Command::ListScenarios => {
            let mut out = format!("{:<9} {:<7} {:<5} {:<16} title\n", "id", "figure", "kind", "checks");
            for s in registry() {
                let checks: Vec<String> = s.checks.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(
                    out,
                    "{:<9} {:<7} {:<5} {:<16} {}",
                    s.id,
                    s.figure.as_deref().unwrap_or("-"),
                    s.kind.to_string(),
                    checks.join(" "),
                    s.title.as_deref().unwrap_or("")
                );
            }
            emit(cli, &out)?;
            Ok(Outcome::Match)
        }
        Command::Reproduce { figure_id } => {
            let rep = reproduce(figure_id, cli.grid_points, cli.tol).map_err(|e| e.to_string())?;
            let text = match cli.format {
                Format::Csv => rep.series.to_csv(),
                Format::Structured => rep.series.to_json(),
            };
            emit(cli, &text)?;
            write_plot(cli, || rep.to_svg())?;
            eprintln!("{}: {}", rep.figure.as_deref().unwrap_or(&rep.scenario), rep.verdict_line);
            Ok(if rep.matches() { Outcome::Match } else { Outcome::Mismatch })
        }
        Command::Check { file } => {
            let s = load(file, cli.grid_points)?;
            let r = run_scenario(&s, cli.tol).map_err(|e| e.to_string())?;
            let text = match cli.format {
                Format::Csv => render_report(&s, &r),
                Format::Structured => serde_json::to_string_pretty(&r).map_err(|e| e.to_string())? + "\n",
            };
            emit(cli, &text)?;
            Ok(if r.expectations_met() { Outcome::Match } else { Outcome::Mismatch })
        }
        Command::Sample { file, n, seed, which } => {
            let s = load(file, cli.grid_points)?;
            let spec = match which {
                Which::X => &s.x,
                Which::Y => &s.y,
            };
            let batch = sample(spec, s.kind, *n, *seed).map_err(|e| e.to_string())?;
            let dist = ExtremeDistribution::new(s.kind, spec.clone());
            let ks = ks_extreme(&dist, &batch);
            let series = empirical_cdf_series(&dist, &batch, &s.grid)
                .map_err(|e| e.to_string())?
                .meta("scenario", &s.id)
                .meta("extreme", s.kind)
                .meta("draws", ks.draws)
                .meta("seed", ks.seed)
                .meta("ks", format!("{:.6e}", ks.distance))
                .meta("ks_critical_0.01", format!("{:.6e}", ks.critical))
                .meta("ks_result", if ks.pass { "pass" } else { "fail" })
                .meta("version", format!("po-extremes {}", env!("CARGO_PKG_VERSION")));
            let text = match cli.format {
                Format::Csv => series.to_csv(),
                Format::Structured => series.to_json(),
            };
            emit(cli, &text)?;
            write_plot(cli, || series.to_svg("x", "empirical", &format!("{} empirical cdf", s.id)))?;
            eprintln!(
                "KS distance {:.6e} vs critical {:.6e} at level 0.01: {}",
                ks.distance,
                ks.critical,
                if ks.pass { "pass" } else { "fail" }
            );
            Ok(if ks.pass { Outcome::Match } else { Outcome::Mismatch })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(Outcome::Match) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            if matches!(cli.command, Command::Reproduce { .. }) {
                let ids: Vec<&str> = FIGURES.iter().map(|(f, _)| *f).collect();
                eprintln!("available figures: {}", ids.join(", "));
            }
            ExitCode::from(2)
        }
    }
}
