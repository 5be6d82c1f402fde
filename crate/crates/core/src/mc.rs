//! Monte-Carlo draws from a PO sample and Kolmogorov-Smirnov checks of the
//! extreme-value distributions against them.
//!
//! The copula couples the probabilities the extreme is built from: marginal
//! survivals for the minimum, marginal cdfs for the maximum. Row `i` of a
//! batch uses its own ChaCha8 stream, so batches are bit-identical for a
//! seed regardless of thread count.

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::baselines::Tails;
use crate::error::{Error, Result};
use crate::extremes::{ExtremeDistribution, ExtremeKind, POSampleSpec};
use crate::figures::SeriesOutput;
use crate::generators::GeneratorFamily;
use crate::grid::Grid;
use crate::numeric::bisect_increasing;
use crate::prob::Prob;

/// Two-sided KS critical value at level 0.01 is `KS_C001 / √N`.
pub const KS_C001: f64 = 1.63;

/// `N` draws of an `n`-vector, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    pub n: usize,
    pub seed: u64,
    pub coupling: ExtremeKind,
    pub values: Vec<f64>,
}

impl SampleBatch {
    pub fn len(&self) -> usize {
        self.values.len() / self.n
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.values[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.values.chunks(self.n)
    }

    /// Row minima or maxima.
    pub fn extremes(&self, kind: ExtremeKind) -> Vec<f64> {
        self.rows()
            .map(|r| match kind {
                ExtremeKind::Min => r.iter().cloned().fold(f64::INFINITY, f64::min),
                ExtremeKind::Max => r.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
            })
            .collect()
    }
}

/// Uniform on the open interval, from the top 53 bits.
fn open_uniform(rng: &mut ChaCha8Rng) -> f64 {
    ((rng.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
}

fn row_rng(seed: u64, row: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(row as u64);
    rng
}

fn to_values(spec: &POSampleSpec, coupling: ExtremeKind, us: &[f64]) -> Vec<f64> {
    us.iter()
        .enumerate()
        .map(|(i, &u)| {
            let t = match coupling {
                ExtremeKind::Min => Tails::from_sf(Prob::new(u)),
                ExtremeKind::Max => Tails::from_cdf(Prob::new(u)),
            };
            spec.marginal(i).quantile_tails(t)
        })
        .collect()
}

fn check_n(draws: usize) -> Result<()> {
    if draws == 0 {
        return Err(Error::Argument("number of draws must be positive".into()));
    }
    Ok(())
}

/// Draws from a sample with the independence generator.
pub fn sample_independent(spec: &POSampleSpec, coupling: ExtremeKind, draws: usize, seed: u64) -> Result<SampleBatch> {
    check_n(draws)?;
    if spec.generator().family() != GeneratorFamily::Independence {
        return Err(Error::Unsupported(format!(
            "sample_independent needs the independence generator, got {}",
            spec.generator()
        )));
    }
    let n = spec.n();
    let values: Vec<f64> = (0..draws)
        .into_par_iter()
        .flat_map_iter(|row| {
            let mut rng = row_rng(seed, row);
            let us: Vec<f64> = (0..n).map(|_| open_uniform(&mut rng)).collect();
            to_values(spec, coupling, &us)
        })
        .collect();
    Ok(SampleBatch {
        n,
        seed,
        coupling,
        values,
    })
}

/// Draws from a bivariate Archimedean sample by conditional inversion:
/// `u₁` uniform, then `u₂` solving `∂C(u₁, u₂)/∂u₁ = v`.
pub fn sample_bivariate_archimedean(
    spec: &POSampleSpec,
    coupling: ExtremeKind,
    draws: usize,
    seed: u64,
) -> Result<SampleBatch> {
    check_n(draws)?;
    if spec.n() != 2 {
        return Err(Error::Unsupported(format!(
            "conditional sampling is implemented for n = 2 only, got n = {}",
            spec.n()
        )));
    }
    let gen = spec.generator();
    let rows: Vec<Result<[f64; 2]>> = (0..draws)
        .into_par_iter()
        .map(|row| {
            let mut rng = row_rng(seed, row);
            let (u1, v) = (open_uniform(&mut rng), open_uniform(&mut rng));
            let c1 = gen.inv_coord(Prob::new(u1));
            let l1 = gen.ln_neg_dphi_coord(c1);
            let h = |u2: f64| {
                let s = gen.sum_coords(&[c1, gen.inv_coord(Prob::new(u2))]);
                (gen.ln_neg_dphi_coord(s) - l1).exp()
            };
            let u2 = bisect_increasing(h, v, 0.0, 1.0).ok_or_else(|| {
                Error::Numeric(format!("conditional inversion failed to bracket at row {row} (u1 = {u1}, v = {v})"))
            })?;
            let u2 = u2.clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON / 2.0);
            let xs = to_values(spec, coupling, &[u1, u2]);
            Ok([xs[0], xs[1]])
        })
        .collect();
    let mut values = Vec::with_capacity(2 * draws);
    for r in rows {
        values.extend(r?);
    }
    Ok(SampleBatch {
        n: 2,
        seed,
        coupling,
        values,
    })
}

/// Picks the sampler that supports `spec`.
pub fn sample(spec: &POSampleSpec, coupling: ExtremeKind, draws: usize, seed: u64) -> Result<SampleBatch> {
    if spec.generator().family() == GeneratorFamily::Independence {
        sample_independent(spec, coupling, draws, seed)
    } else if spec.n() == 2 {
        sample_bivariate_archimedean(spec, coupling, draws, seed)
    } else {
        Err(Error::Unsupported(format!(
            "sampling {} with n = {} is not implemented (independence for any n, other generators for n = 2)",
            spec.generator(),
            spec.n()
        )))
    }
}

/// `sup |F_N - F|` of a sample against a continuous cdf.
pub fn ks_distance<F: Fn(f64) -> f64>(values: &[f64], cdf: F) -> f64 {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.total_cmp(b));
    let n = v.len() as f64;
    v.iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            (f - i as f64 / n).max((i + 1) as f64 / n - f)
        })
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KsReport {
    pub draws: usize,
    pub seed: u64,
    pub distance: f64,
    pub critical: f64,
    pub pass: bool,
}

/// KS distance of the sampled extremes from the analytic extreme cdf.
pub fn ks_extreme(dist: &ExtremeDistribution, batch: &SampleBatch) -> KsReport {
    let ext = batch.extremes(dist.kind());
    let distance = ks_distance(&ext, |x| dist.tails_unchecked(x).cdf);
    let critical = KS_C001 / (ext.len() as f64).sqrt();
    KsReport {
        draws: ext.len(),
        seed: batch.seed,
        distance,
        critical,
        pass: distance < critical,
    }
}

/// Samples `spec` and checks the extreme of the given kind.
pub fn validate_extreme(spec: &POSampleSpec, kind: ExtremeKind, draws: usize, seed: u64) -> Result<KsReport> {
    let batch = sample(spec, kind, draws, seed)?;
    Ok(ks_extreme(&ExtremeDistribution::new(kind, spec.clone()), &batch))
}

/// Empirical and analytic extreme cdfs at the interior grid points.
pub fn empirical_cdf_series(dist: &ExtremeDistribution, batch: &SampleBatch, grid: &Grid) -> Result<SeriesOutput> {
    grid.validate()?;
    let mut ext = batch.extremes(dist.kind());
    ext.sort_by(|a, b| a.total_cmp(b));
    let n = ext.len() as f64;
    let sup = dist.support();
    let mut out = SeriesOutput::new(&["x", "empirical", "analytic"]);
    for x in grid.xs_ascending().into_iter().filter(|&x| sup.contains_open(x)) {
        let k = ext.partition_point(|&v| v <= x) as f64;
        out.rows.push(vec![x, k / n, dist.tails_unchecked(x).cdf]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::baselines::BaselineSpec;
    use crate::generators::GeneratorSpec;

    #[test]
    fn open_uniform_stays_inside() {
        let mut rng = row_rng(1, 0);
        for _ in 0..10_000 {
            let u = open_uniform(&mut rng);
            assert!(u > 0.0 && u < 1.0);
        }
    }

    #[test]
    fn ks_of_perfect_grid() {
        let v: Vec<f64> = (0..100).map(|i| (i as f64 + 0.5) / 100.0).collect();
        assert!((ks_distance(&v, |x| x) - 0.005).abs() < 1e-12);
    }

    #[test]
    fn independence_marginals_are_uniform_after_transform() {
        let b = BaselineSpec::weibull_survival(1.0, 1.0).unwrap();
        let spec = POSampleSpec::new(b, vec![0.5, 3.0], GeneratorSpec::independence()).unwrap();
        let batch = sample_independent(&spec, ExtremeKind::Min, 20_000, 3).unwrap();
        for i in 0..2 {
            let m = spec.marginal(i);
            let col: Vec<f64> = batch.rows().map(|r| r[i]).collect();
            let d = ks_distance(&col, |x| m.cdf(x).unwrap());
            assert!(d < KS_C001 / (20_000f64).sqrt(), "margin {i}: {d}");
        }
    }

    #[test]
    fn bivariate_needs_two() {
        let b = BaselineSpec::weibull_survival(1.0, 1.0).unwrap();
        let g = GeneratorSpec::nelsen_4_2_19(5.0).unwrap();
        let spec = POSampleSpec::homogeneous(b, 1.0, 3, g).unwrap();
        assert!(matches!(sample(&spec, ExtremeKind::Min, 10, 0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn same_seed_same_batch() {
        let b = BaselineSpec::weibull_survival(1.0, 0.3).unwrap();
        let g = GeneratorSpec::nelsen_4_2_8(1.5).unwrap();
        let spec = POSampleSpec::new(b, vec![0.3, 2.0], g).unwrap();
        let a = sample(&spec, ExtremeKind::Max, 500, 9).unwrap();
        let c = sample(&spec, ExtremeKind::Max, 500, 9).unwrap();
        assert_eq!(a, c);
        assert_ne!(a, sample(&spec, ExtremeKind::Max, 500, 10).unwrap());
    }
}
