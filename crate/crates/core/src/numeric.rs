//! Root bracketing and finite differences shared by the catalog modules.

use crate::prob::Prob;

/// Iteration cap for every bisection in the crate.
pub const MAX_BISECTION_ITERS: usize = 200;

/// Maps `z ∈ [0, 1]` onto an interval whose endpoints may be infinite.
#[derive(Debug, Clone, Copy)]
pub(crate) struct UnitMap {
    lo: f64,
    hi: f64,
}

impl UnitMap {
    pub(crate) fn new(lo: f64, hi: f64) -> Self {
        UnitMap { lo, hi }
    }

    pub(crate) fn to_x(self, z: f64) -> f64 {
        match (self.lo.is_finite(), self.hi.is_finite()) {
            (true, true) => self.lo + z * (self.hi - self.lo),
            (true, false) => self.lo + z / (1.0 - z),
            (false, true) => self.hi - (1.0 - z) / z,
            (false, false) => (z - 0.5) / (z * (1.0 - z)),
        }
    }
}

/// Finds `x` in `[lo, hi]` with `f(x) = target`, where `f` is a
/// nondecreasing cdf-scale probability. Bisection runs to float resolution
/// in the mapped coordinate or [`MAX_BISECTION_ITERS`], whichever is first.
pub(crate) fn invert_cdf<F>(f: F, target: Prob, lo: f64, hi: f64) -> f64
where
    F: Fn(f64) -> Prob,
{
    let map = UnitMap::new(lo, hi);
    let (mut a, mut b) = (0.0f64, 1.0f64);
    for _ in 0..MAX_BISECTION_ITERS {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let x = map.to_x(m);
        if f(x).less_than(&target) {
            a = m;
        } else {
            b = m;
        }
    }
    let (xa, xb) = (map.to_x(a), map.to_x(b));
    match (xa.is_finite(), xb.is_finite()) {
        (true, true) => 0.5 * (xa + xb),
        (true, false) => xa,
        (false, true) => xb,
        (false, false) => f64::NAN,
    }
}

/// Plain bisection for a continuous increasing function on a finite bracket.
/// Returns `None` when the bracket does not straddle the target.
pub(crate) fn bisect_increasing<F>(f: F, target: f64, mut lo: f64, mut hi: f64) -> Option<f64>
where
    F: Fn(f64) -> f64,
{
    let (flo, fhi) = (f(lo), f(hi));
    if !(flo <= target && target <= fhi) {
        return None;
    }
    for _ in 0..MAX_BISECTION_ITERS {
        let m = 0.5 * (lo + hi);
        if m <= lo || m >= hi {
            break;
        }
        if f(m) < target {
            lo = m;
        } else {
            hi = m;
        }
    }
    Some(0.5 * (lo + hi))
}

/// Central difference with a step scaled to the magnitude of `x`.
pub fn central_difference<F: Fn(f64) -> f64>(f: F, x: f64, rel_step: f64) -> f64 {
    let h = rel_step * x.abs().max(1.0);
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Derivative of a sampled series with respect to its abscissa: central
/// differences inside, one-sided at the two ends.
pub fn gradient(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    match n {
        0 => vec![],
        1 => vec![0.0],
        _ => (0..n)
            .map(|i| {
                let (a, b) = match i {
                    0 => (0, 1),
                    i if i == n - 1 => (n - 2, n - 1),
                    i => (i - 1, i + 1),
                };
                (ys[b] - ys[a]) / (xs[b] - xs[a])
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invert_on_half_line() {
        let f = |x: f64| Prob::from_ln(-x).complement();
        let target = Prob::new(1.0 - (-2.0f64).exp());
        let x = invert_cdf(f, target, 0.0, f64::INFINITY);
        assert!((x - 2.0).abs() < 1e-12, "{x}");
    }

    #[test]
    fn invert_on_negative_half_line() {
        // F(x) = e^x on (-inf, 0]
        let f = |x: f64| Prob::from_ln(x);
        let x = invert_cdf(f, Prob::from_ln(-3.5), f64::NEG_INFINITY, 0.0);
        assert!((x + 3.5).abs() < 1e-12, "{x}");
    }

    #[test]
    fn bisect_rejects_bad_bracket() {
        assert!(bisect_increasing(|x| x, 5.0, 0.0, 1.0).is_none());
        let r = bisect_increasing(|x| x * x, 2.0, 0.0, 2.0).unwrap();
        assert!((r - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn gradient_of_quadratic() {
        let xs: Vec<f64> = (0..11).map(|i| i as f64 * 0.1).collect();
        let ys: Vec<f64> = xs.iter().map(|x| x * x).collect();
        let g = gradient(&xs, &ys);
        for i in 1..10 {
            assert!((g[i] - 2.0 * xs[i]).abs() < 1e-12);
        }
    }
}
