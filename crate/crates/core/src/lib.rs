//! Sample extremes of dependent proportional-odds lifetimes coupled by
//! Archimedean copulas, and numerical checks of the dispersive and star
//! orders between them.
//!
//! The crate is organised bottom-up:
//!
//! * [`generators`]: Archimedean generators, their inverses, derivatives and
//!   the shape checks (log-convexity, `φ/φ'` concavity, cross-generator
//!   ratio monotonicity) used as theorem hypotheses.
//! * [`baselines`]: baseline lifetime distributions with hazard and
//!   reversed-hazard evaluation, quantiles and aging classification.
//! * [`po_model`]: the proportional-odds marginal transform.
//! * [`extremes`]: distributions of the sample minimum and maximum, their
//!   densities and quantiles, and the closed-form quantile compositions
//!   `G⁻¹(F(x))` together with the composed densities.
//! * [`order_checks`]: grid-based verdicts for the dispersive and star
//!   orders, theorem hypothesis checking and scenario runs.
//! * [`mc`]: Monte-Carlo sampling and Kolmogorov-Smirnov validation.
//! * [`scenario`] and [`figures`]: the scenario file schema, the built-in
//!   registry and figure-data reproduction.

pub mod baselines;
pub mod error;
pub mod extremes;
pub mod figures;
pub mod generators;
pub mod grid;
pub mod mc;
pub mod numeric;
pub mod order_checks;
pub mod po_model;
pub mod prob;
pub mod scenario;
pub mod verdict;

pub use baselines::{BaselineFamily, BaselineSpec, EvalRecord, Scale, Support};
pub use error::{Error, Result};
pub use extremes::{ExtremeDistribution, ExtremeKind, POSampleSpec, TransformProfile};
pub use generators::{GeneratorFamily, GeneratorSpec};
pub use grid::{Grid, GridKind};
pub use po_model::POMarginal;
pub use prob::Prob;
pub use scenario::Scenario;
pub use verdict::{ConditionReport, Trend, Verdict};
