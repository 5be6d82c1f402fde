//! Grid verdicts for the dispersive and star orders between two extremes,
//! and the hypothesis lists of the comparison theorems.
//!
//! Conventions: `A ≤disp B` means `g_B(G_B⁻¹(F_A(x))) ≤ f_A(x)` on the
//! grid, i.e. `B` is more dispersed; `A ≤⋆ B` means `G_B⁻¹(F_A(x))/x` is
//! increasing. All verdicts are three-valued, see [`crate::verdict`].

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::baselines::BaselineSpec;
use crate::error::{Error, Result};
use crate::extremes::{composable, compose_numeric, compose_unchecked, ExtremeDistribution, ExtremeKind, POSampleSpec};
use crate::generators::{
    check_cross_generator, check_log_shape, check_ratio_shape, scan_hypothesis, CrossDirection,
    Shape,
};
use crate::grid::{Grid, GridNode};
use crate::numeric::gradient;
use crate::scenario::{Check, Scenario};
use crate::verdict::{
    merge_scans, monotone_scan, scan_slacks, ConditionReport, HypothesisResult, SlackPoint,
    SlackScan, TrendReport, Verdict, Witness,
};

/// Default relative tolerance of the order checks.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Points where the numeric path is not attempted: the extreme's cdf is
/// too close to 0 or 1 for the inverse to be meaningful.
const NUMERIC_CDF_GUARD: f64 = 1e-13;

/// Relative slack on `α ≥ mean(αᵢ)`, so that a mean typed out in decimal
/// is not rejected by the rounding of the computed sum.
const ALPHA_REL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Order {
    Dispersive,
    Star,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    Density,
    QuantileSpread,
    RatioMonotonicity,
}

/// `A ≤ B` or `A ≥ B` in the order under test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    Le,
    Ge,
}

/// Outcome of testing both directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Le,
    Ge,
    Equal,
    Neither,
    Inconclusive,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "le",
            Relation::Ge => "ge",
            Relation::Equal => "equal",
            Relation::Neither => "neither",
            Relation::Inconclusive => "inconclusive",
        })
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "le" => Ok(Relation::Le),
            "ge" => Ok(Relation::Ge),
            "equal" => Ok(Relation::Equal),
            "neither" => Ok(Relation::Neither),
            "inconclusive" => Ok(Relation::Inconclusive),
            _ => Err(Error::Argument(format!(
                "unknown relation '{s}' (expected le, ge, equal, neither or inconclusive)"
            ))),
        }
    }
}

impl Relation {
    fn from_verdicts(le: Verdict, ge: Verdict) -> Self {
        use Verdict::*;
        match (le, ge) {
            (Holds, Holds) => Relation::Equal,
            (Holds, Violated) => Relation::Le,
            (Violated, Holds) => Relation::Ge,
            (Violated, Violated) => Relation::Neither,
            _ => Relation::Inconclusive,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderCheckReport {
    pub order: Order,
    pub criterion: Criterion,
    pub direction: Direction,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub max_violation: f64,
    pub evaluated: usize,
    pub skipped: usize,
    pub grid: String,
}

impl OrderCheckReport {
    fn from_scan(order: Order, criterion: Criterion, direction: Direction, scan: SlackScan, grid: String) -> Self {
        OrderCheckReport {
            order,
            criterion,
            direction,
            verdict: scan.verdict,
            witnesses: scan.witnesses,
            max_violation: scan.max_violation,
            evaluated: scan.evaluated,
            skipped: scan.skipped,
            grid,
        }
    }
}

/// Both directions of one criterion.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub order: Order,
    pub criterion: Criterion,
    pub relation: Relation,
    pub le: OrderCheckReport,
    pub ge: OrderCheckReport,
}

impl Comparison {
    fn new(le: OrderCheckReport, ge: OrderCheckReport) -> Self {
        Comparison {
            order: le.order,
            criterion: le.criterion,
            relation: Relation::from_verdicts(le.verdict, ge.verdict),
            le,
            ge,
        }
    }

    pub fn report(&self, direction: Direction) -> &OrderCheckReport {
        match direction {
            Direction::Le => &self.le,
            Direction::Ge => &self.ge,
        }
    }
}

/// One grid point of the dispersive density criterion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DispersiveRow {
    pub t: f64,
    pub x: f64,
    /// `g_B(G_B⁻¹(F_A(x)))`
    pub lhs: f64,
    /// `f_A(x)`
    pub rhs: f64,
    pub diff: f64,
}

/// One grid point of the star criterion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StarRow {
    pub t: f64,
    pub x: f64,
    /// `G_B⁻¹(F_A(x))`
    pub lhs: f64,
    /// `x`
    pub rhs: f64,
    pub ratio: f64,
    /// `d ratio / dx` by central differences along the grid.
    pub slope: f64,
}

fn interior_nodes(a: &ExtremeDistribution, grid: &Grid) -> Result<Vec<GridNode>> {
    grid.validate()?;
    let sup = a.support();
    let nodes: Vec<GridNode> = grid.nodes().into_iter().filter(|n| sup.contains_open(n.x)).collect();
    if nodes.is_empty() {
        return Err(Error::Argument(format!(
            "grid {} has no points inside the support {sup}",
            grid.describe()
        )));
    }
    Ok(nodes)
}

/// `y = G_B⁻¹(F_A(x))` and `g_B(y)`: closed form when it applies, else by
/// inversion. `None` where the numeric path is not attempted.
fn composition(a: &ExtremeDistribution, b: &ExtremeDistribution, closed: bool, x: f64) -> Option<(f64, f64)> {
    if closed {
        let c = compose_unchecked(a, b, x);
        return Some((c.y, c.density));
    }
    let t = a.tails_unchecked(x);
    if !(t.cdf > NUMERIC_CDF_GUARD && t.sf > NUMERIC_CDF_GUARD) {
        return None;
    }
    Some(compose_numeric(a, b, x))
}

/// The series `g_B(G_B⁻¹(F_A(x))) - f_A(x)` in grid order. Points where
/// the numeric inversion is not attempted carry `NaN`.
pub fn dispersive_series(a: &ExtremeDistribution, b: &ExtremeDistribution, grid: &Grid) -> Result<Vec<DispersiveRow>> {
    let nodes = interior_nodes(a, grid)?;
    let closed = composable(a, b);
    Ok(nodes
        .par_iter()
        .map(|n| {
            let rhs = a.density_unchecked(n.x);
            let lhs = composition(a, b, closed, n.x).map_or(f64::NAN, |(_, g)| g);
            DispersiveRow {
                t: n.t,
                x: n.x,
                lhs,
                rhs,
                diff: lhs - rhs,
            }
        })
        .collect())
}

fn judge_dispersive(rows: &[DispersiveRow], tol: f64, direction: Direction, grid: String) -> OrderCheckReport {
    let scan = scan_slacks(rows.iter().map(|r| SlackPoint {
        x: r.x,
        slack: match direction {
            Direction::Le => r.diff,
            Direction::Ge => -r.diff,
        },
        tol: tol * (1.0 + r.rhs.abs()),
    }));
    OrderCheckReport::from_scan(Order::Dispersive, Criterion::Density, direction, scan, grid)
}

/// Dispersive order by the density criterion, one direction.
pub fn check_dispersive(
    a: &ExtremeDistribution,
    b: &ExtremeDistribution,
    grid: &Grid,
    tol: f64,
    direction: Direction,
) -> Result<OrderCheckReport> {
    let rows = dispersive_series(a, b, grid)?;
    Ok(judge_dispersive(&rows, tol, direction, grid.describe()))
}

/// Dispersive order by the density criterion, both directions.
pub fn compare_dispersive(a: &ExtremeDistribution, b: &ExtremeDistribution, grid: &Grid, tol: f64) -> Result<Comparison> {
    let rows = dispersive_series(a, b, grid)?;
    Ok(compare_dispersive_rows(&rows, tol, grid.describe()))
}

pub fn compare_dispersive_rows(rows: &[DispersiveRow], tol: f64, grid: String) -> Comparison {
    Comparison::new(
        judge_dispersive(rows, tol, Direction::Le, grid.clone()),
        judge_dispersive(rows, tol, Direction::Ge, grid),
    )
}

/// The probability grid `F_A(x)` over the interior nodes of `grid`,
/// restricted to `(0, 1)`.
pub fn ugrid_from(a: &ExtremeDistribution, grid: &Grid) -> Result<Grid> {
    let nodes = interior_nodes(a, grid)?;
    let mut us: Vec<f64> = nodes
        .iter()
        .map(|n| a.tails_unchecked(n.x).cdf)
        .filter(|&u| u > 0.0 && u < 1.0)
        .collect();
    us.sort_by(|p, q| p.total_cmp(q));
    us.dedup();
    Ok(Grid::explicit(us))
}

fn quantile_pairs(a: &ExtremeDistribution, b: &ExtremeDistribution, ugrid: &Grid) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    ugrid.validate()?;
    let us: Vec<f64> = ugrid.xs_ascending().into_iter().filter(|&u| u > 0.0 && u < 1.0).collect();
    if us.len() < 2 {
        return Err(Error::Argument("quantile-spread check needs at least two probabilities in (0, 1)".into()));
    }
    let qa: Vec<f64> = us.par_iter().map(|&u| a.quantile(u)).collect::<Result<_>>()?;
    let qb: Vec<f64> = us.par_iter().map(|&u| b.quantile(u)).collect::<Result<_>>()?;
    Ok((us, qa, qb))
}

fn judge_spreads(us: &[f64], qa: &[f64], qb: &[f64], tol: f64, direction: Direction, grid: String) -> OrderCheckReport {
    let mut scans = Vec::new();
    let mut s = 1;
    while s < us.len() {
        let pts = (0..us.len() - s).map(|i| {
            let j = i + s;
            let (sa, sb) = (qa[j] - qa[i], qb[j] - qb[i]);
            let scale = qa[i].abs().max(qa[j].abs()).max(qb[i].abs()).max(qb[j].abs());
            SlackPoint {
                x: us[i],
                slack: match direction {
                    Direction::Le => sa - sb,
                    Direction::Ge => sb - sa,
                },
                tol: tol * (1.0 + scale),
            }
        });
        scans.push(scan_slacks(pts));
        s *= 2;
    }
    OrderCheckReport::from_scan(Order::Dispersive, Criterion::QuantileSpread, direction, merge_scans(scans), grid)
}

/// Dispersive order by the quantile-spread criterion
/// `F_A⁻¹(v) - F_A⁻¹(u) ≤ G_B⁻¹(v) - G_B⁻¹(u)` over pairs of the
/// probability grid at strides `1, 2, 4, …`.
pub fn check_dispersive_quantile(
    a: &ExtremeDistribution,
    b: &ExtremeDistribution,
    ugrid: &Grid,
    tol: f64,
    direction: Direction,
) -> Result<OrderCheckReport> {
    let (us, qa, qb) = quantile_pairs(a, b, ugrid)?;
    Ok(judge_spreads(&us, &qa, &qb, tol, direction, ugrid.describe()))
}

pub fn compare_dispersive_quantile(a: &ExtremeDistribution, b: &ExtremeDistribution, ugrid: &Grid, tol: f64) -> Result<Comparison> {
    let (us, qa, qb) = quantile_pairs(a, b, ugrid)?;
    let desc = ugrid.describe();
    Ok(Comparison::new(
        judge_spreads(&us, &qa, &qb, tol, Direction::Le, desc.clone()),
        judge_spreads(&us, &qa, &qb, tol, Direction::Ge, desc),
    ))
}

/// The series `G_B⁻¹(F_A(x))/x` in grid order.
pub fn star_series(a: &ExtremeDistribution, b: &ExtremeDistribution, grid: &Grid) -> Result<Vec<StarRow>> {
    grid.validate()?;
    if grid.nodes().iter().any(|n| n.x == 0.0) {
        return Err(Error::Argument("star check grid contains x = 0".into()));
    }
    let nodes = interior_nodes(a, grid)?;
    let closed = composable(a, b);
    let mut rows: Vec<StarRow> = nodes
        .par_iter()
        .map(|n| {
            let y = composition(a, b, closed, n.x).map_or(f64::NAN, |(y, _)| y);
            StarRow {
                t: n.t,
                x: n.x,
                lhs: y,
                rhs: n.x,
                ratio: y / n.x,
                slope: f64::NAN,
            }
        })
        .collect();
    let xs: Vec<f64> = rows.iter().map(|r| r.x).collect();
    let rs: Vec<f64> = rows.iter().map(|r| r.ratio).collect();
    for (r, s) in rows.iter_mut().zip(gradient(&xs, &rs)) {
        r.slope = s;
    }
    Ok(rows)
}

fn judge_star(rows: &[StarRow], tol: f64, direction: Direction, grid: String) -> OrderCheckReport {
    let mut pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.x, r.ratio)).collect();
    pts.sort_by(|p, q| p.0.total_cmp(&q.0));
    let xs: Vec<f64> = pts.iter().map(|p| p.0).collect();
    let rs: Vec<f64> = pts.iter().map(|p| p.1).collect();
    let scan = monotone_scan(&xs, &rs, direction == Direction::Le, tol);
    OrderCheckReport::from_scan(Order::Star, Criterion::RatioMonotonicity, direction, scan, grid)
}

/// Star order: `A ≤⋆ B` iff the ratio is increasing in `x`.
pub fn check_star(a: &ExtremeDistribution, b: &ExtremeDistribution, grid: &Grid, tol: f64, direction: Direction) -> Result<OrderCheckReport> {
    let rows = star_series(a, b, grid)?;
    Ok(judge_star(&rows, tol, direction, grid.describe()))
}

pub fn compare_star(a: &ExtremeDistribution, b: &ExtremeDistribution, grid: &Grid, tol: f64) -> Result<Comparison> {
    let rows = star_series(a, b, grid)?;
    Ok(compare_star_rows(&rows, tol, grid.describe()))
}

pub fn compare_star_rows(rows: &[StarRow], tol: f64, grid: String) -> Comparison {
    Comparison::new(
        judge_star(rows, tol, Direction::Le, grid.clone()),
        judge_star(rows, tol, Direction::Ge, grid),
    )
}

// ---- theorems -------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T3_1,
    T3_2,
    T3_3,
    T3_4,
    T4_1,
    T4_2,
    T4_3,
    T4_4,
    C3_1,
    C3_2,
    C4_1,
    C4_2,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::T3_1,
        TheoremId::T3_2,
        TheoremId::T3_3,
        TheoremId::T3_4,
        TheoremId::T4_1,
        TheoremId::T4_2,
        TheoremId::T4_3,
        TheoremId::T4_4,
        TheoremId::C3_1,
        TheoremId::C3_2,
        TheoremId::C4_1,
        TheoremId::C4_2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TheoremId::T3_1 => "3.1",
            TheoremId::T3_2 => "3.2",
            TheoremId::T3_3 => "3.3",
            TheoremId::T3_4 => "3.4",
            TheoremId::T4_1 => "4.1",
            TheoremId::T4_2 => "4.2",
            TheoremId::T4_3 => "4.3",
            TheoremId::T4_4 => "4.4",
            TheoremId::C3_1 => "C3.1",
            TheoremId::C3_2 => "C3.2",
            TheoremId::C4_1 => "C4.1",
            TheoremId::C4_2 => "C4.2",
        }
    }

    /// The extreme the statement is about.
    pub fn kind(self) -> ExtremeKind {
        use TheoremId::*;
        match self {
            T3_1 | T3_2 | T3_3 | T3_4 | C3_1 | C3_2 => ExtremeKind::Min,
            _ => ExtremeKind::Max,
        }
    }

    pub fn order(self) -> Order {
        use TheoremId::*;
        match self {
            T3_1 | T3_2 | C3_1 | T4_1 | T4_2 | C4_1 => Order::Dispersive,
            _ => Order::Star,
        }
    }

    /// Direction of the conclusion with `A = X`, `B = Y`.
    pub fn direction(self) -> Direction {
        match self.kind() {
            ExtremeKind::Min => Direction::Le,
            ExtremeKind::Max => Direction::Ge,
        }
    }

    fn heterogeneous(self) -> bool {
        use TheoremId::*;
        matches!(self, T3_1 | T3_3 | T4_1 | T4_3 | C3_1 | C3_2 | C4_1 | C4_2)
    }

    fn cross_generator(self) -> bool {
        use TheoremId::*;
        !matches!(self, T3_1 | T3_3 | T4_1 | T4_3)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase();
        let norm = norm
            .strip_prefix("THEOREM-")
            .or_else(|| norm.strip_prefix("THM-"))
            .map(str::to_string)
            .or_else(|| norm.strip_prefix("COROLLARY-").map(|r| format!("C{r}")))
            .unwrap_or(norm.clone());
        TheoremId::ALL
            .into_iter()
            .find(|t| t.label() == norm)
            .ok_or_else(|| Error::Argument(format!("unknown theorem id '{s}'")))
    }
}

fn trend_evidence(what: &str, r: &TrendReport) -> String {
    format!(
        "{what} {} over {} points (largest rise {:.3e}, largest fall {:.3e})",
        r.trend, r.points, r.max_rise, r.max_fall
    )
}

fn trend_hypothesis(name: &str, what: &str, r: &TrendReport, increasing: bool) -> HypothesisResult {
    let ok = if increasing {
        r.trend.is_nondecreasing()
    } else {
        r.trend.is_nonincreasing()
    };
    HypothesisResult::from_bool(name, ok, trend_evidence(what, r))
}

/// Checks each hypothesis of `theorem` for `X` and `Y` compared through
/// their extremes of the given kind. `points` sets the density of every
/// grid used.
pub fn verify_hypotheses_for(
    theorem: TheoremId,
    kind: ExtremeKind,
    x: &POSampleSpec,
    y: &POSampleSpec,
    points: usize,
) -> Result<ConditionReport> {
    let mut h = Vec::new();
    let want_kind = theorem.kind();
    h.push(HypothesisResult::from_bool(
        "compares sample extremes of the stated kind",
        kind == want_kind,
        format!("scenario compares {kind}, theorem concerns {want_kind}"),
    ));
    h.push(HypothesisResult::from_bool(
        "common baseline",
        x.baseline() == y.baseline(),
        format!("X: {}, Y: {}", x.baseline(), y.baseline()),
    ));
    h.push(HypothesisResult::from_bool(
        "equal sample sizes",
        x.n() == y.n(),
        format!("n_X = {}, n_Y = {}", x.n(), y.n()),
    ));
    h.push(HypothesisResult::from_bool(
        "Y homogeneous",
        y.is_homogeneous(),
        format!("Y alphas {:?}", y.alphas()),
    ));
    let alpha = y.alphas()[0];
    let (g1, g2) = (x.generator(), y.generator());

    if theorem.cross_generator() {
        if !theorem.heterogeneous() {
            h.push(HypothesisResult::from_bool(
                "X homogeneous with the same alpha as Y",
                x.is_homogeneous() && x.alphas()[0] == alpha,
                format!("X alphas {:?}, alpha = {alpha}", x.alphas()),
            ));
        }
    } else {
        h.push(HypothesisResult::from_bool(
            "common generator",
            g1 == g2,
            format!("X: {g1}, Y: {g2}"),
        ));
    }

    if theorem.heterogeneous() {
        let mean = x.mean_alpha();
        h.push(HypothesisResult::from_bool(
            "alpha >= mean(alpha_i)",
            alpha >= mean * (1.0 - ALPHA_REL_TOL),
            format!("alpha = {alpha}, mean = {mean}"),
        ));
    }

    let baseline: &BaselineSpec = x.baseline();
    let aging = baseline.classify_aging(&baseline.natural_grid(points))?;
    use TheoremId::*;
    h.push(match theorem {
        T3_1 | T3_2 | C3_1 => trend_hypothesis("baseline DFR", "r(x)", &aging.hazard, false),
        T3_3 | T3_4 | C3_2 => trend_hypothesis("x r(x) decreasing", "x r(x)", &aging.x_hazard, false),
        T4_1 | T4_2 | C4_1 => trend_hypothesis("baseline IRHR", "reversed hazard", &aging.reversed_hazard, true),
        T4_3 | T4_4 | C4_2 => trend_hypothesis(
            "x r~(x) increasing",
            "x times reversed hazard",
            &aging.x_reversed_hazard,
            true,
        ),
    });

    if theorem.heterogeneous() {
        let grid = g1.default_grid(points);
        let (log_shape, ratio_shape, log_name, ratio_name) = match theorem.kind() {
            ExtremeKind::Min => (Shape::Convex, Shape::Concave, "phi log-convex", "phi/phi' concave"),
            ExtremeKind::Max => (Shape::Concave, Shape::Convex, "phi log-concave", "phi/phi' convex"),
        };
        h.push(scan_hypothesis(log_name, &check_log_shape(g1, &grid, log_shape)?));
        h.push(scan_hypothesis(ratio_name, &check_ratio_shape(g1, &grid, ratio_shape)?));
    }

    if theorem.cross_generator() {
        let grid = Grid::unit(points);
        let n = y.n();
        let (name, dir) = match theorem.kind() {
            ExtremeKind::Min => ("phi2(psi2(t)/n)/phi1(psi1(t)/n) increasing", CrossDirection::G2OverG1),
            ExtremeKind::Max => ("phi1(psi1(t)/n)/phi2(psi2(t)/n) increasing", CrossDirection::G1OverG2),
        };
        h.push(scan_hypothesis(name, &check_cross_generator(g1, g2, n, &grid, dir)?));
    }

    match theorem {
        T3_1 | T3_2 | T3_3 | T3_4 | C3_1 | C3_2 => h.push(HypothesisResult::from_bool(
            "0 <= alpha <= 1",
            (0.0..=1.0).contains(&alpha),
            format!("alpha = {alpha}"),
        )),
        T4_2 | T4_4 | C4_1 | C4_2 => h.push(HypothesisResult::from_bool(
            "alpha >= 1",
            alpha >= 1.0,
            format!("alpha = {alpha}"),
        )),
        T4_1 | T4_3 => {}
    }

    Ok(ConditionReport::new(format!("theorem {theorem}"), h).with_theorem(theorem.label()))
}

/// [`verify_hypotheses_for`] on a scenario's samples and grid density.
pub fn verify_hypotheses(theorem: TheoremId, scenario: &Scenario) -> Result<ConditionReport> {
    verify_hypotheses_for(theorem, scenario.kind, &scenario.x, &scenario.y, scenario.grid.points.max(2))
}

// ---- scenario runs --------------------------------------------------------

/// Where a theorem run lands relative to its hypotheses and conclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Quadrant {
    /// Hypotheses hold and so does the conclusion.
    Confirmed,
    /// Hypotheses hold but the conclusion fails: the theorem is refuted.
    Refuted,
    /// Hypotheses fail, conclusion holds anyway.
    HoldsWithoutHypotheses,
    /// Hypotheses fail and so does the conclusion: a counterexample.
    Counterexample,
    Undetermined,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremOutcome {
    pub theorem: TheoremId,
    pub hypotheses: ConditionReport,
    pub conclusion: Verdict,
    pub quadrant: Quadrant,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectationCheck {
    pub what: String,
    pub expected: String,
    pub actual: String,
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioReport {
    pub id: String,
    pub kind: ExtremeKind,
    pub grid: String,
    pub tol: f64,
    pub dispersive: Option<Comparison>,
    pub dispersive_quantile: Option<Comparison>,
    pub star: Option<Comparison>,
    pub theorems: Vec<TheoremOutcome>,
    pub expectations: Vec<ExpectationCheck>,
    #[serde(skip)]
    pub dispersive_rows: Vec<DispersiveRow>,
    #[serde(skip)]
    pub star_rows: Vec<StarRow>,
}

impl ScenarioReport {
    pub fn expectations_met(&self) -> bool {
        self.expectations.iter().all(|e| e.matches)
    }

    pub fn comparison(&self, order: Order) -> Option<&Comparison> {
        match order {
            Order::Dispersive => self.dispersive.as_ref(),
            Order::Star => self.star.as_ref(),
        }
    }
}

fn quadrant(hyp: bool, conclusion: Verdict) -> Quadrant {
    match (hyp, conclusion) {
        (true, Verdict::Holds) => Quadrant::Confirmed,
        (true, Verdict::Violated) => Quadrant::Refuted,
        (false, Verdict::Holds) => Quadrant::HoldsWithoutHypotheses,
        (false, Verdict::Violated) => Quadrant::Counterexample,
        _ => Quadrant::Undetermined,
    }
}

/// Builds both extremes, runs every requested check and compares the
/// results with the scenario's declared expectations.
pub fn run_scenario(s: &Scenario, tol: f64) -> Result<ScenarioReport> {
    let a = ExtremeDistribution::new(s.kind, s.x.clone());
    let b = ExtremeDistribution::new(s.kind, s.y.clone());
    let mut wants_disp = s.checks.contains(&Check::Dispersive);
    let mut wants_star = s.checks.contains(&Check::Star);
    let theorems: Vec<TheoremId> = s
        .checks
        .iter()
        .filter_map(|c| match c {
            Check::Theorem(t) => Some(*t),
            _ => None,
        })
        .collect();
    for t in &theorems {
        match t.order() {
            Order::Dispersive => wants_disp = true,
            Order::Star => wants_star = true,
        }
    }

    let mut report = ScenarioReport {
        id: s.id.clone(),
        kind: s.kind,
        grid: s.grid.describe(),
        tol,
        dispersive: None,
        dispersive_quantile: None,
        star: None,
        theorems: vec![],
        expectations: vec![],
        dispersive_rows: vec![],
        star_rows: vec![],
    };

    if wants_disp {
        let rows = dispersive_series(&a, &b, &s.grid)?;
        report.dispersive = Some(compare_dispersive_rows(&rows, tol, s.grid.describe()));
        report.dispersive_rows = rows;
        let ugrid = ugrid_from(&a, &s.grid)?;
        if ugrid.points >= 2 {
            report.dispersive_quantile = Some(compare_dispersive_quantile(&a, &b, &ugrid, tol)?);
        }
    }
    if wants_star {
        let rows = star_series(&a, &b, &s.grid)?;
        report.star = Some(compare_star_rows(&rows, tol, s.grid.describe()));
        report.star_rows = rows;
    }

    for t in theorems {
        let hyp = verify_hypotheses(t, s)?;
        let conclusion = report
            .comparison(t.order())
            .map(|c| c.report(t.direction()).verdict)
            .unwrap_or(Verdict::Inconclusive);
        let conclusion = if s.kind == t.kind() {
            conclusion
        } else {
            Verdict::Inconclusive
        };
        report.theorems.push(TheoremOutcome {
            theorem: t,
            quadrant: quadrant(hyp.all_pass, conclusion),
            hypotheses: hyp,
            conclusion,
        });
    }

    let mut exp = Vec::new();
    for (what, want, got) in [
        ("dispersive", s.expect.dispersive, report.dispersive.as_ref().map(|c| c.relation)),
        ("star", s.expect.star, report.star.as_ref().map(|c| c.relation)),
    ] {
        if let Some(want) = want {
            exp.push(ExpectationCheck {
                what: what.into(),
                expected: want.to_string(),
                actual: got.map_or("not run".into(), |g| g.to_string()),
                matches: got == Some(want),
            });
        }
    }
    for (t, want) in &s.expect.hypotheses {
        let got = match report.theorems.iter().find(|o| o.theorem == *t) {
            Some(o) => Some(o.hypotheses.all_pass),
            None => Some(verify_hypotheses(*t, s)?.all_pass),
        };
        exp.push(ExpectationCheck {
            what: format!("theorem {t} hypotheses"),
            expected: if *want { "all pass" } else { "some fail" }.into(),
            actual: match got {
                Some(true) => "all pass".into(),
                Some(false) => "some fail".into(),
                None => "not run".into(),
            },
            matches: got == Some(*want),
        });
    }
    report.expectations = exp;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::GeneratorSpec;

    fn exp_min(rate: f64) -> ExtremeDistribution {
        // the minimum of two iid exponentials with rate λ/2 is exponential(λ)
        let b = BaselineSpec::weibull_survival(rate / 2.0, 1.0).unwrap();
        ExtremeDistribution::min(POSampleSpec::homogeneous(b, 1.0, 2, GeneratorSpec::independence()).unwrap())
    }

    #[test]
    fn identical_distributions_are_equal() {
        let a = exp_min(1.0);
        let c = compare_dispersive(&a, &a, &Grid::half_line(200), DEFAULT_TOL).unwrap();
        assert_eq!(c.relation, Relation::Equal);
        let u = compare_dispersive_quantile(&a, &a, &Grid::unit(200), DEFAULT_TOL).unwrap();
        assert_eq!(u.relation, Relation::Equal);
    }

    #[test]
    fn exponential_rates_are_dispersive_ordered() {
        let (fast, slow) = (exp_min(2.0), exp_min(1.0));
        let grid = Grid::half_line(400);
        assert_eq!(check_dispersive(&fast, &slow, &grid, DEFAULT_TOL, Direction::Le).unwrap().verdict, Verdict::Holds);
        assert_eq!(check_dispersive(&slow, &fast, &grid, DEFAULT_TOL, Direction::Le).unwrap().verdict, Verdict::Violated);
        let ug = Grid::unit(400);
        assert_eq!(
            check_dispersive_quantile(&fast, &slow, &ug, DEFAULT_TOL, Direction::Le).unwrap().verdict,
            Verdict::Holds
        );
        assert_eq!(
            check_dispersive_quantile(&slow, &fast, &ug, DEFAULT_TOL, Direction::Le).unwrap().verdict,
            Verdict::Violated
        );
    }

    #[test]
    fn scale_copy_is_star_equal() {
        let (a, b) = (exp_min(2.0), exp_min(1.0));
        let c = compare_star(&a, &b, &Grid::half_line(300), DEFAULT_TOL).unwrap();
        assert_eq!(c.relation, Relation::Equal);
    }

    #[test]
    fn star_grid_with_zero_is_rejected() {
        let a = exp_min(1.0);
        let g = Grid::explicit(vec![0.0, 1.0, 2.0]);
        assert!(matches!(star_series(&a, &a, &g), Err(Error::Argument(_))));
    }

    #[test]
    fn theorem_ids_parse() {
        assert_eq!("3.1".parse::<TheoremId>().unwrap(), TheoremId::T3_1);
        assert_eq!("c4.2".parse::<TheoremId>().unwrap(), TheoremId::C4_2);
        assert_eq!("thm-4.3".parse::<TheoremId>().unwrap(), TheoremId::T4_3);
        assert!("5.1".parse::<TheoremId>().is_err());
    }
}
