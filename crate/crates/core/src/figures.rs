//! Series data behind the figures, and plain CSV, JSON and SVG writers.

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::extremes::{ExtremeDistribution, ExtremeKind};
use crate::order_checks::{
    compare_dispersive_rows, compare_star_rows, dispersive_series, star_series, Comparison, Order, Relation,
};
use crate::scenario::{registry_entry, Check, Scenario};

/// Figure ids and the scenario each one plots.
pub const FIGURES: [(&str, &str); 8] = [
    ("fig1a", "ce-3.1a"),
    ("fig1b", "ce-3.1b"),
    ("fig2a", "ce-3.2a"),
    ("fig2b", "ce-3.2b"),
    ("fig3", "ex-5.1"),
    ("fig4", "ex-5.2"),
    ("fig5", "ex-5.3"),
    ("fig6", "ex-5.4"),
];

/// A table of numbers with `key: value` metadata.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesOutput {
    pub metadata: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl SeriesOutput {
    pub fn new(columns: &[&str]) -> Self {
        SeriesOutput {
            metadata: vec![],
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: vec![],
        }
    }

    pub fn meta(mut self, key: &str, value: impl ToString) -> Self {
        self.metadata.push((key.to_string(), value.to_string()));
        self
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[i]).collect())
    }

    /// `#`-prefixed metadata lines, a header line, then one row per line
    /// with every number in `{:.16e}`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|v| format!("{v:.16e}")).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let meta: serde_json::Map<String, serde_json::Value> =
            self.metadata.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
        let value = json!({
            "metadata": meta,
            "columns": self.columns,
            "rows": self.rows,
        });
        serde_json::to_string_pretty(&value).expect("finite rows serialize") + "\n"
    }

    /// A line plot of column `y` against column `x`.
    pub fn to_svg(&self, x: &str, y: &str, title: &str) -> Result<String> {
        let xs = self.column(x).ok_or_else(|| Error::Argument(format!("no column '{x}'")))?;
        let ys = self.column(y).ok_or_else(|| Error::Argument(format!("no column '{y}'")))?;
        Ok(svg_line_plot(&xs, &ys, x, y, title))
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn svg_line_plot(xs: &[f64], ys: &[f64], xlabel: &str, ylabel: &str, title: &str) -> String {
    const W: f64 = 720.0;
    const H: f64 = 440.0;
    const L: f64 = 90.0;
    const R: f64 = 20.0;
    const T: f64 = 40.0;
    const B: f64 = 60.0;
    let range = |v: &[f64]| {
        let lo = v.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = v.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if !(lo < hi) {
            (lo - 0.5, hi + 0.5)
        } else {
            (lo, hi)
        }
    };
    let (x0, x1) = range(xs);
    let (y0, y1) = range(ys);
    let px = |x: f64| L + (x - x0) / (x1 - x0) * (W - L - R);
    let py = |y: f64| H - B - (y - y0) / (y1 - y0) * (H - T - B);
    let pts: Vec<String> = xs
        .iter()
        .zip(ys)
        .map(|(&x, &y)| format!("{:.2},{:.2}", px(x), py(y)))
        .collect();
    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" font-family=\"sans-serif\" font-size=\"12\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n\
         <text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
        W / 2.0,
        escape(title)
    );
    s.push_str(&format!(
        "<rect x=\"{L}\" y=\"{T}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
        W - L - R,
        H - T - B
    ));
    if y0 < 0.0 && y1 > 0.0 {
        s.push_str(&format!(
            "<line x1=\"{L}\" x2=\"{0}\" y1=\"{1:.2}\" y2=\"{1:.2}\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n",
            W - R,
            py(0.0)
        ));
    }
    for i in 0..=4 {
        let f = i as f64 / 4.0;
        let (xv, yv) = (x0 + f * (x1 - x0), y0 + f * (y1 - y0));
        s.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{}\" text-anchor=\"middle\">{xv:.3e}</text>\n",
            px(xv),
            H - B + 18.0
        ));
        s.push_str(&format!(
            "<text x=\"{}\" y=\"{:.2}\" text-anchor=\"end\">{yv:.3e}</text>\n",
            L - 6.0,
            py(yv) + 4.0
        ));
    }
    s.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
        L + (W - L - R) / 2.0,
        H - 16.0,
        escape(xlabel)
    ));
    s.push_str(&format!(
        "<text x=\"16\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {0})\">{1}</text>\n",
        T + (H - T - B) / 2.0,
        escape(ylabel)
    ));
    s.push_str(&format!(
        "<polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"{}\"/>\n</svg>\n",
        pts.join(" ")
    ));
    s
}

/// `X1:3 <=disp Y1:3` and similar.
pub fn relation_statement(kind: ExtremeKind, n: usize, order: Order, relation: Relation) -> String {
    let idx = match kind {
        ExtremeKind::Min => format!("1:{n}"),
        ExtremeKind::Max => format!("{n}:{n}"),
    };
    let ord = match order {
        Order::Dispersive => "disp",
        Order::Star => "*",
    };
    let (x, y) = (format!("X{idx}"), format!("Y{idx}"));
    match relation {
        Relation::Le => format!("{x} <={ord} {y}"),
        Relation::Ge => format!("{x} >={ord} {y}"),
        Relation::Equal => format!("{x} ={ord} {y}"),
        Relation::Neither => format!("neither {x} <={ord} {y} nor {x} >={ord} {y}"),
        Relation::Inconclusive => format!("{x} vs {y} under {ord}: inconclusive"),
    }
}

/// Series and verdict for one figure.
#[derive(Debug, Clone, PartialEq)]
pub struct Reproduction {
    pub figure: Option<String>,
    pub scenario: String,
    pub order: Order,
    pub comparison: Comparison,
    pub expected: Option<Relation>,
    pub verdict_line: String,
    pub series: SeriesOutput,
}

impl Reproduction {
    pub fn relation(&self) -> Relation {
        self.comparison.relation
    }

    /// Whether the verdict agrees with the scenario's declared outcome.
    /// Scenarios without a declared outcome always match.
    pub fn matches(&self) -> bool {
        self.expected.is_none_or(|e| e == self.relation())
    }

    /// The column plotted for this figure, against the grid parameter `t`.
    pub fn plot_column(&self) -> &'static str {
        match self.order {
            Order::Dispersive => "diff",
            Order::Star => "ratio",
        }
    }

    pub fn to_svg(&self) -> Result<String> {
        let title = format!("{} ({})", self.figure.as_deref().unwrap_or(&self.scenario), self.verdict_line);
        self.series.to_svg("t", self.plot_column(), &title)
    }
}

/// Resolves a figure id (`fig3`) or scenario id (`ex-5.1`) to a built-in
/// scenario.
pub fn figure_scenario(id: &str) -> Result<Scenario> {
    let sid = FIGURES.iter().find(|(f, _)| *f == id).map_or(id, |(_, s)| s);
    registry_entry(sid).ok_or_else(|| {
        let figs: Vec<&str> = FIGURES.iter().map(|(f, _)| *f).collect();
        Error::Argument(format!(
            "unknown figure or scenario '{id}' (figures: {}; run list-scenarios for scenario ids)",
            figs.join(", ")
        ))
    })
}

/// Reproduces a built-in figure at the given grid density.
pub fn reproduce(id: &str, points: usize, tol: f64) -> Result<Reproduction> {
    let s = figure_scenario(id)?.with_points(points);
    reproduce_scenario(&s, tol)
}

/// Series for the scenario's dispersive check when it has one, else its
/// star check.
pub fn reproduce_scenario(s: &Scenario, tol: f64) -> Result<Reproduction> {
    let a = ExtremeDistribution::new(s.kind, s.x.clone());
    let b = ExtremeDistribution::new(s.kind, s.y.clone());
    let dispersive = s.checks.contains(&Check::Dispersive)
        || (!s.checks.contains(&Check::Star) && s.expect.star.is_none());
    let desc = s.grid.describe();
    let (order, comparison, mut series, expected) = if dispersive {
        let rows = dispersive_series(&a, &b, &s.grid)?;
        let cmp = compare_dispersive_rows(&rows, tol, desc.clone());
        let mut out = SeriesOutput::new(&["t", "x", "lhs", "rhs", "diff"]);
        out.rows = rows
            .iter()
            .filter(|r| r.diff.is_finite())
            .map(|r| vec![r.t, r.x, r.lhs, r.rhs, r.diff])
            .collect();
        (Order::Dispersive, cmp, out, s.expect.dispersive)
    } else {
        let rows = star_series(&a, &b, &s.grid)?;
        let cmp = compare_star_rows(&rows, tol, desc.clone());
        let mut out = SeriesOutput::new(&["t", "x", "lhs", "rhs", "ratio", "slope"]);
        out.rows = rows
            .iter()
            .filter(|r| r.ratio.is_finite())
            .map(|r| vec![r.t, r.x, r.lhs, r.rhs, r.ratio, r.slope])
            .collect();
        (Order::Star, cmp, out, s.expect.star)
    };
    let verdict_line = relation_statement(s.kind, s.x.n(), order, comparison.relation);
    let mut meta = vec![("scenario".to_string(), s.id.clone())];
    if let Some(f) = &s.figure {
        meta.push(("figure".into(), f.clone()));
    }
    meta.extend([
        ("grid".into(), desc),
        ("tol".into(), format!("{tol:e}")),
        ("version".into(), format!("po-extremes {}", env!("CARGO_PKG_VERSION"))),
        ("verdict".into(), verdict_line.clone()),
        ("relation".into(), comparison.relation.to_string()),
    ]);
    if let Some(e) = expected {
        meta.push(("expected".into(), e.to_string()));
    }
    meta.push(("skipped".into(), (comparison.le.skipped).to_string()));
    series.metadata = meta;
    Ok(Reproduction {
        figure: s.figure.clone(),
        scenario: s.id.clone(),
        order,
        comparison,
        expected,
        verdict_line,
        series,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_figure_resolves() {
        for (f, s) in FIGURES {
            assert_eq!(figure_scenario(f).unwrap().id, s);
        }
        assert!(figure_scenario("fig9").is_err());
    }

    #[test]
    fn csv_layout() {
        let mut s = SeriesOutput::new(&["a", "b"]).meta("k", "v");
        s.rows.push(vec![1.0, -0.5]);
        assert_eq!(s.to_csv(), "# k: v\na,b\n1.0000000000000000e0,-5.0000000000000000e-1\n");
        let j: serde_json::Value = serde_json::from_str(&s.to_json()).unwrap();
        assert_eq!(j["rows"][0][1], -0.5);
    }

    #[test]
    fn statement_text() {
        assert_eq!(
            relation_statement(ExtremeKind::Min, 3, Order::Dispersive, Relation::Le),
            "X1:3 <=disp Y1:3"
        );
        assert_eq!(relation_statement(ExtremeKind::Max, 4, Order::Star, Relation::Ge), "X4:4 >=* Y4:4");
    }

    #[test]
    fn reproduction_is_deterministic() {
        let a = reproduce("fig3", 300, 1e-8).unwrap();
        let b = reproduce("fig3", 300, 1e-8).unwrap();
        assert_eq!(a.series.to_csv(), b.series.to_csv());
        assert!(a.matches());
        assert!(a.to_svg().unwrap().starts_with("<svg"));
    }
}
