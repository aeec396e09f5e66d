//! Closed-form regime parameters and predicted metric-dimension bounds for
//! G(n, p).
//!
//! For expected degree d = p(n-1), the regime is summarized by the largest
//! power i with d^i still small relative to n, the spillover c = d^(i+1)/n,
//! and the coordinate-collision probability q of a random pair seen from a
//! random landmark. Predictions split into three cases by the size of c,
//! with matching upper/lower bounds in cases (i)/(ii) and an eta-factor gap
//! in case (iii).
//!
//! All logarithms are natural. The only base-2 logarithm in the crate sits
//! inside the top-degree landmark count, written explicitly as
//! (3 ln n)/(ln 2).
//!
//! Finite-n conventions (asymptotic conditions have no single-n reading):
//! * "d^i = o(n)" becomes d^i <= n/ln n; "p = Theta(1)" (the dense branch)
//!   becomes d > n/ln n.
//! * The case (i)/(ii) split "c = Theta(1)" vs "c -> infinity" becomes a
//!   configurable threshold c <= C0 (default 10); both case formulas are
//!   reported when c lands within [C0/2, 2*C0].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Derived regime parameters for one (n, p) point.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Regime {
    pub n: usize,
    pub p: f64,
    /// Expected degree p(n-1).
    pub d: f64,
    /// Largest integer with d^i <= n/ln n (0 in the dense branch).
    pub i: u32,
    /// d^(i+1) / n.
    pub c: f64,
    /// Coordinate collision probability: p^2 + (1-p)^2 when dense,
    /// e^(-2c) + (1 - e^(-c))^2 when sparse.
    pub q: f64,
    /// log_n d^i = i ln d / ln n.
    pub eta: f64,
    /// True when d > n/ln n (p treated as constant-order).
    pub dense: bool,
}

pub fn compute_regime(n: usize, p: f64) -> Result<Regime> {
    if n < 2 {
        return Err(Error::NTooSmall { n, min: 2 });
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::DegenerateP(p));
    }
    let nf = n as f64;
    let d = p * (nf - 1.0);
    let threshold = nf / nf.ln();
    let dense = d > threshold;
    let (i, c, q) = if dense {
        (0u32, d / nf, p * p + (1.0 - p) * (1.0 - p))
    } else {
        if d <= 1.0 {
            return Err(Error::DegreeTooSmall(d));
        }
        let mut i = 0u32;
        let mut power = 1.0; // d^i
        while power * d <= threshold {
            power *= d;
            i += 1;
        }
        let c = power * d / nf;
        let em = (-c).exp();
        // For c beyond ~37 the sum rounds to 1.0 in f64; keep q inside the
        // open interval (downstream formulas stop using q long before that,
        // at the case boundary c0).
        let q = ((-2.0 * c).exp() + (1.0 - em) * (1.0 - em)).min(1.0 - f64::EPSILON / 2.0);
        (i, c, q)
    };
    let eta = f64::from(i) * d.ln() / nf.ln();
    Ok(Regime {
        n,
        p,
        d,
        i,
        c,
        q,
        eta,
        dense,
    })
}

/// Which prediction regime applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseLabel {
    #[serde(rename = "i")]
    I,
    #[serde(rename = "ii")]
    II,
    #[serde(rename = "iii-lower-upper")]
    III,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PredictConfig {
    /// Case threshold between (i) and (ii); both formulas are reported when
    /// c falls within [c0/2, 2*c0].
    pub c0: f64,
    /// Epsilon in the sub-threshold set size (2 - eps) ln n / ln(1/q).
    pub epsilon: f64,
    /// Margin for the diameter criterion.
    pub margin: f64,
}

impl Default for PredictConfig {
    fn default() -> Self {
        PredictConfig {
            c0: 10.0,
            epsilon: 0.5,
            margin: 0.0,
        }
    }
}

/// Alternate formulas reported when c sits near the case (i)/(ii) boundary.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundaryAlternates {
    /// 2 ln n / ln(1/q).
    pub case_i_beta: f64,
    /// e^c ln n.
    pub case_ii_beta: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Prediction {
    pub case_label: CaseLabel,
    pub beta_lower: f64,
    pub beta_upper: f64,
    /// Largest set size that should a.a.s. fail to resolve, per the
    /// lower-bound argument: floor((2 - eps) ln n / ln(1/q)).
    pub subthreshold_size: usize,
    /// Diameter from the threshold criterion at the configured margin;
    /// `None` when ambiguous or when d < 2.
    pub predicted_diameter: Option<u32>,
    pub boundary_alternates: Option<BoundaryAlternates>,
}

pub fn predict_beta(regime: &Regime, cfg: &PredictConfig) -> Result<Prediction> {
    if !cfg.c0.is_finite() || cfg.c0 <= 0.0 {
        return Err(Error::OutOfDomain {
            what: "c0",
            value: cfg.c0,
            domain: "(0, inf)",
        });
    }
    let nf = regime.n as f64;
    let ln_n = nf.ln();
    let ln_ln_n = ln_n.ln();
    let ln_inv_q = (1.0 / regime.q).ln();
    let c = regime.c;

    let matched = 2.0 * ln_n / ln_inv_q;
    let (case_label, beta_lower, beta_upper) = if c <= cfg.c0 {
        (CaseLabel::I, matched, matched)
    } else if c.exp() <= ln_n / (3.0 * ln_ln_n) {
        (CaseLabel::II, matched, matched)
    } else {
        let inv = 1.0 / (powi(regime.d, regime.i) / nf + (-c).exp());
        (CaseLabel::III, regime.eta * inv * ln_n, inv * ln_n)
    };

    let boundary_alternates = if c >= cfg.c0 / 2.0 && c <= 2.0 * cfg.c0 {
        Some(BoundaryAlternates {
            case_i_beta: matched,
            case_ii_beta: c.exp() * ln_n,
        })
    } else {
        None
    };

    let subthreshold_size = subthreshold_size(regime, cfg.epsilon)?;
    let predicted_diameter = if regime.d >= 2.0 {
        match predict_diameter(regime.n, regime.p, cfg.margin)? {
            DiameterPrediction::Definite(d) => Some(d),
            DiameterPrediction::Ambiguous { .. } => None,
        }
    } else {
        None
    };

    Ok(Prediction {
        case_label,
        beta_lower,
        beta_upper,
        subthreshold_size,
        predicted_diameter,
        boundary_alternates,
    })
}

fn powi(base: f64, exp: u32) -> f64 {
    base.powi(exp as i32)
}

/// The zigzag exponent f(x) = 1 - x * floor(1/x) for x in (0, 1]:
/// the predicted asymptotic exponent of beta for p = n^(x-1).
///
/// ```
/// use metridim_core::zigzag_f;
///
/// assert_eq!(zigzag_f(0.5).unwrap(), 0.0);
/// assert!((zigzag_f(0.4).unwrap() - 0.2).abs() < 1e-12);
/// ```
pub fn zigzag_f(x: f64) -> Result<f64> {
    check_unit_open(x, "x")?;
    Ok(1.0 - x * (1.0 / x).floor())
}

/// Upper/lower bound ratio curve (x * floor(1/x))^(-1) for x in (0, 1].
pub fn ratio_bound(x: f64) -> Result<f64> {
    check_unit_open(x, "x")?;
    Ok(1.0 / (x * (1.0 / x).floor()))
}

fn check_unit_open(x: f64, what: &'static str) -> Result<()> {
    if x > 0.0 && x <= 1.0 {
        Ok(())
    } else {
        Err(Error::OutOfDomain {
            what,
            value: x,
            domain: "(0, 1]",
        })
    }
}

/// Outcome of the diameter threshold criterion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DiameterPrediction {
    Definite(u32),
    /// The two asymptotic conditions conflict at this finite n: the
    /// crossing point D satisfied d^D/n >= 2 ln n (1+margin) but
    /// d^(D-1)/n > 2 ln n (1-margin) as well.
    Ambiguous {
        crossing: u32,
    },
}

/// Smallest D with d^D / n >= 2 ln n * (1 + margin); ambiguous when the
/// complementary condition d^(D-1)/n <= 2 ln n * (1 - margin) fails.
pub fn predict_diameter(n: usize, p: f64, margin: f64) -> Result<DiameterPrediction> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::DegenerateP(p));
    }
    if margin.is_nan() || margin < 0.0 {
        return Err(Error::OutOfDomain {
            what: "margin",
            value: margin,
            domain: "[0, inf)",
        });
    }
    let nf = n as f64;
    let d = p * (nf - 1.0);
    if d < 2.0 {
        return Err(Error::DegreeTooSmall(d));
    }
    let target = 2.0 * nf.ln();
    let mut crossing = 1u32;
    let mut power = d; // d^crossing
    while power / nf < target * (1.0 + margin) {
        crossing += 1;
        power *= d;
    }
    let below = powi(d, crossing - 1) / nf;
    if crossing >= 2 && below > target * (1.0 - margin) {
        Ok(DiameterPrediction::Ambiguous { crossing })
    } else {
        Ok(DiameterPrediction::Definite(crossing))
    }
}

/// floor((2 - epsilon) ln n / ln(1/q)): the set size below which random sets
/// should a.a.s. fail to resolve.
pub fn subthreshold_size(regime: &Regime, epsilon: f64) -> Result<usize> {
    if !(epsilon > 0.0 && epsilon < 2.0) {
        return Err(Error::OutOfDomain {
            what: "epsilon",
            value: epsilon,
            domain: "(0, 2)",
        });
    }
    let ln_n = (regime.n as f64).ln();
    let ln_inv_q = (1.0 / regime.q).ln();
    Ok(((2.0 - epsilon) * ln_n / ln_inv_q).floor() as usize)
}

/// Deviation fraction from the Chernoff tail bound
/// P(|X - E| >= eps E) <= 2 exp(-eps^2 E / 3).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChernoffTolerance {
    pub epsilon: f64,
    /// The bound is only stated for 0 < eps < 3/2; larger answers are
    /// reported but flagged.
    pub within_validity: bool,
}

/// Smallest eps with 2 exp(-eps^2 E / 3) <= failure_prob, i.e.
/// sqrt(3 ln(2 / failure_prob) / E).
pub fn chernoff_tolerance(expectation: f64, failure_prob: f64) -> Result<ChernoffTolerance> {
    if !expectation.is_finite() || expectation <= 0.0 {
        return Err(Error::OutOfDomain {
            what: "expectation",
            value: expectation,
            domain: "(0, inf)",
        });
    }
    if !(failure_prob > 0.0 && failure_prob < 1.0) {
        return Err(Error::OutOfDomain {
            what: "failure_prob",
            value: failure_prob,
            domain: "(0, 1)",
        });
    }
    let epsilon = (3.0 * (2.0 / failure_prob).ln() / expectation).sqrt();
    Ok(ChernoffTolerance {
        epsilon,
        within_validity: epsilon < 1.5,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn regime_dense_half() {
        let r = compute_regime(1000, 0.5).unwrap();
        assert!(r.dense);
        assert_eq!(r.i, 0);
        assert_eq!(r.q, 0.5);
        assert_eq!(r.eta, 0.0);
    }

    #[test]
    fn regime_sparse_powers_of_ten() {
        // d = 10 exactly; n/ln n ~ 1085.7 so i = 3, c = 10^4/10^4 = 1.
        let r = compute_regime(10_000, 10.0 / 9999.0).unwrap();
        assert!(!r.dense);
        assert_eq!(r.i, 3);
        assert!(close(r.d, 10.0, 1e-12));
        assert!(close(r.c, 1.0, 1e-12));
        assert!(close(r.q, 0.5349116841303407, 1e-12));
        assert!(close(r.eta, 0.75, 1e-12));
        // c >= 1 makes the eta bound tight here: eta = i/(i+1) exactly.
        assert!(r.eta >= 0.75 - 1e-15);
    }

    #[test]
    fn regime_rejects_degenerate() {
        assert!(matches!(
            compute_regime(100, 0.0),
            Err(Error::DegenerateP(_))
        ));
        assert!(matches!(
            compute_regime(100, 1.0),
            Err(Error::DegenerateP(_))
        ));
        // p = 1/(n-1) gives d = 1: below the usable regime.
        assert!(matches!(
            compute_regime(1000, 1.0 / 999.0),
            Err(Error::DegreeTooSmall(_))
        ));
    }

    #[test]
    fn predict_matched_cases() {
        let cfg = PredictConfig::default();
        let r = compute_regime(10_000, 10.0 / 9999.0).unwrap();
        let pred = predict_beta(&r, &cfg).unwrap();
        assert_eq!(pred.case_label, CaseLabel::I);
        assert!(close(pred.beta_lower, 29.4422985708728, 1e-9));
        assert_eq!(pred.beta_lower, pred.beta_upper);

        let r = compute_regime(1_000_000, 0.5).unwrap();
        let pred = predict_beta(&r, &cfg).unwrap();
        assert_eq!(pred.case_label, CaseLabel::I);
        assert!(close(pred.beta_upper, 39.86313713864835, 1e-9));
    }

    #[test]
    fn case_iii_limit_identity() {
        // With e^(-c) << d^i/n the case (iii) upper bound reduces to
        // (n ln n / d^i) * (1 + e^(-c) n / d^i)^(-1).
        let r = Regime {
            n: 100_000,
            p: 60.0 / 99_999.0,
            d: 60.0,
            i: 2,
            c: 12.0,
            q: 0.99,
            eta: 2.0 * 60.0f64.ln() / 100_000.0f64.ln(),
            dense: false,
        };
        let pred = predict_beta(&r, &PredictConfig::default()).unwrap();
        assert_eq!(pred.case_label, CaseLabel::III);
        let nf = 100_000.0f64;
        let di = 3600.0f64;
        let alt = (nf * nf.ln() / di) / (1.0 + (-12.0f64).exp() * nf / di);
        assert!(close(pred.beta_upper, alt, 1e-12));
        assert!(close(pred.beta_lower, r.eta * pred.beta_upper, 1e-12));
        assert!(pred.beta_lower <= pred.beta_upper);
    }

    #[test]
    fn boundary_reports_both_formulas() {
        let mut r = compute_regime(10_000, 10.0 / 9999.0).unwrap();
        r.c = 7.0; // inside [c0/2, 2 c0] for c0 = 10
        let em = (-r.c).exp();
        r.q = (-2.0 * r.c).exp() + (1.0 - em) * (1.0 - em);
        let pred = predict_beta(&r, &PredictConfig::default()).unwrap();
        let alts = pred.boundary_alternates.expect("near boundary");
        // The two case formulas agree within relative 2/e^c.
        assert!((alts.case_ii_beta / alts.case_i_beta - 1.0).abs() <= 2.0 * em);
    }

    #[test]
    fn zigzag_values() {
        assert_eq!(zigzag_f(0.5).unwrap(), 0.0);
        assert!(close(zigzag_f(0.4).unwrap(), 0.2, 1e-12));
        assert!(close(zigzag_f(0.3).unwrap(), 0.1, 1e-12));
        assert!(matches!(zigzag_f(0.0), Err(Error::OutOfDomain { .. })));
        assert!(matches!(zigzag_f(1.1), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn ratio_bound_values() {
        assert_eq!(ratio_bound(0.5).unwrap(), 1.0);
        assert!(close(ratio_bound(0.4).unwrap(), 1.25, 1e-12));
        assert!(close(ratio_bound(0.3).unwrap(), 1.0 / 0.9, 1e-12));
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(
            predict_diameter(2000, 0.15, 0.0).unwrap(),
            DiameterPrediction::Definite(2)
        );
        assert_eq!(
            predict_diameter(10_000, 10.0 / 9999.0, 0.0).unwrap(),
            DiameterPrediction::Definite(6)
        );
        assert!(matches!(
            predict_diameter(2000, 0.15, 5.0).unwrap(),
            DiameterPrediction::Ambiguous { .. }
        ));
        assert!(matches!(
            predict_diameter(2000, 0.0, 0.0),
            Err(Error::DegenerateP(_))
        ));
    }

    #[test]
    fn subthreshold_sizes() {
        let g128 = Regime {
            n: 128,
            p: 0.5,
            d: 63.5,
            i: 0,
            c: 63.5 / 128.0,
            q: 0.5,
            eta: 0.0,
            dense: true,
        };
        assert_eq!(subthreshold_size(&g128, 0.6).unwrap(), 9);
        let r = compute_regime(10_000, 10.0 / 9999.0).unwrap();
        assert_eq!(subthreshold_size(&r, 0.2).unwrap(), 26);
        // epsilon -> 2 degenerates to size 0.
        assert_eq!(subthreshold_size(&g128, 1.999999).unwrap(), 0);
        assert!(subthreshold_size(&g128, 2.0).is_err());
        assert!(subthreshold_size(&g128, 0.0).is_err());
    }

    #[test]
    fn chernoff_values() {
        let t = chernoff_tolerance(100.0, 0.01).unwrap();
        assert!(close(t.epsilon, 0.3986847388557042, 1e-12));
        assert!(t.within_validity);
        let t = chernoff_tolerance(1.0, 0.01).unwrap();
        assert!(close(t.epsilon, 3.986847388557042, 1e-12));
        assert!(!t.within_validity);
        assert!(chernoff_tolerance(0.0, 0.01).is_err());
        assert!(chernoff_tolerance(10.0, 1.0).is_err());
    }

    #[test]
    fn chernoff_monotone_in_expectation() {
        let mut last = f64::INFINITY;
        for e in [1.0, 10.0, 100.0, 1e4, 1e6] {
            let t = chernoff_tolerance(e, 0.01).unwrap().epsilon;
            assert!(t < last);
            last = t;
        }
    }
}
