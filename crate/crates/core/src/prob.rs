//! A probability carried together with its complement and logarithm.
//!
//! Tail computations lose all precision when a survival probability is
//! formed as `1 - F` near `F = 1`, or when `exp` underflows long before the
//! quantity of interest does. [`Prob`] keeps `p`, `1 - p` and `ln p`, each
//! computed by whoever knows the closed form, so the composition chain
//! `baseline -> PO marginal -> generator -> inner function -> quantile` never
//! has to recover one from another by subtraction.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Prob {
    p: f64,
    q: f64,
    ln_p: f64,
}

impl Prob {
    pub const ZERO: Prob = Prob {
        p: 0.0,
        q: 1.0,
        ln_p: f64::NEG_INFINITY,
    };
    pub const ONE: Prob = Prob {
        p: 1.0,
        q: 0.0,
        ln_p: 0.0,
    };

    pub fn new(p: f64) -> Self {
        Prob {
            p,
            q: 1.0 - p,
            ln_p: p.ln(),
        }
    }

    pub fn from_ln(ln_p: f64) -> Self {
        Prob {
            p: ln_p.exp(),
            q: -ln_p.exp_m1(),
            ln_p,
        }
    }

    pub fn from_complement(q: f64) -> Self {
        Prob {
            p: 1.0 - q,
            q,
            ln_p: (-q).ln_1p(),
        }
    }

    /// Assembles a probability whose three representations were computed
    /// independently. No consistency check is made.
    pub fn from_parts(p: f64, q: f64, ln_p: f64) -> Self {
        Prob { p, q, ln_p }
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.p
    }

    #[inline]
    pub fn complement_value(&self) -> f64 {
        self.q
    }

    #[inline]
    pub fn ln(&self) -> f64 {
        self.ln_p
    }

    /// `ln(1 - p)`, taken from whichever representation is accurate.
    pub fn ln_complement(&self) -> f64 {
        if self.p < 0.5 {
            (-self.p).ln_1p()
        } else {
            self.q.ln()
        }
    }

    pub fn complement(self) -> Self {
        Prob {
            p: self.q,
            q: self.p,
            ln_p: self.ln_complement(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0.0 && self.ln_p == f64::NEG_INFINITY
    }

    /// Orders two probabilities using the representation with the most
    /// resolution near the target.
    pub fn less_than(&self, other: &Prob) -> bool {
        if other.p < 0.5 {
            self.ln_p < other.ln_p
        } else {
            self.q > other.q
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_keeps_tiny_tails() {
        let p = Prob::from_ln(-800.0);
        assert_eq!(p.value(), 0.0);
        assert_eq!(p.ln(), -800.0);
        let c = p.complement();
        assert_eq!(c.complement_value(), 0.0);
        assert_eq!(c.value(), 1.0);
        // the log of an underflowed complement cannot be recovered
        assert_eq!(c.complement().ln(), f64::NEG_INFINITY);
    }

    #[test]
    fn from_complement_is_accurate_near_one() {
        let p = Prob::from_complement(1e-18);
        assert_eq!(p.complement_value(), 1e-18);
        assert!((p.ln() + 1e-18).abs() < 1e-30);
    }

    #[test]
    fn ordering_uses_logs_in_lower_tail() {
        let a = Prob::from_ln(-900.0);
        let b = Prob::from_ln(-800.0);
        assert!(a.less_than(&b));
        assert!(!b.less_than(&a));
        let c = Prob::from_complement(1e-20);
        let d = Prob::from_complement(2e-20);
        assert!(d.less_than(&c));
    }
}
