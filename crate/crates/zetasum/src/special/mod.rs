//! Special functions underlying everything else: the Riemann-Siegel theta
//! function, Hardy's Z, ζ(s) by Euler-Maclaurin summation, ζ'/ζ, the
//! functional-equation factor Δ'/Δ, and the smooth zero-count main term.

mod digamma;
mod em;
mod rs;

pub use digamma::{delta_log_deriv, digamma};
pub use em::{log_deriv_zeta, log_deriv_zeta_series, zeta, zeta_deriv};
pub use rs::hardy_z_rs;

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Complex value with an attached absolute-error estimate, produced by
/// series truncation or quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    pub abs_err: f64,
}

impl Estimate {
    pub fn new(value: Complex64, abs_err: f64) -> Self {
        Estimate { value, abs_err }
    }

    /// Reject non-finite values so NaN/infinity never escapes an operation.
    pub fn checked(self, context: &str) -> Result<Self> {
        if self.value.re.is_finite() && self.value.im.is_finite() && self.abs_err >= 0.0 {
            Ok(self)
        } else {
            Err(Error::Consistency(format!(
                "non-finite value in {context}: {} + {}i",
                self.value.re, self.value.im
            )))
        }
    }
}

/// Evaluation knobs for ζ and Z.
#[derive(Debug, Clone, Copy)]
pub struct EvalConfig {
    /// Minimum main-sum length for the Euler-Maclaurin evaluation of ζ.
    /// The cutoff grows automatically with |Im s|; this is the floor.
    pub euler_maclaurin_terms: usize,
    /// Number of Riemann-Siegel correction coefficients (0-4) applied to
    /// the main sum when Z(t) is evaluated above the crossover height.
    pub rs_correction_terms: u8,
    /// Absolute-error target for quadrature and ζ series truncation.
    pub quad_tol: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            euler_maclaurin_terms: 64,
            rs_correction_terms: 4,
            quad_tol: 1e-8,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        if self.euler_maclaurin_terms == 0 {
            return Err(Error::InvalidInput(
                "euler_maclaurin_terms must be positive".into(),
            ));
        }
        if self.rs_correction_terms > 4 {
            return Err(Error::InvalidInput(
                "rs_correction_terms must be at most 4 (only the first few coefficients are implemented)"
                    .into(),
            ));
        }
        if !(self.quad_tol > 0.0) {
            return Err(Error::InvalidInput("quad_tol must be positive".into()));
        }
        Ok(())
    }
}

/// Height above which `hardy_z` switches from the Euler-Maclaurin route to
/// the Riemann-Siegel formula. Below this the two routes are cross-checked
/// against each other in tests; above it the main sum is much cheaper.
pub const EM_RS_CROSSOVER: f64 = 1000.0;

/// Riemann-Siegel theta: the phase that makes e^{iθ(t)} ζ(1/2+it) real.
///
/// Asymptotic series θ(t) = (t/2)log(t/2π) − t/2 − π/8 + 1/(48t)
/// + 7/(5760 t³) + 31/(80640 t⁵) + 127/(430080 t⁷); absolute error
/// below 1e-10 for t ≥ 10.
pub fn theta(t: f64) -> Result<f64> {
    if !(t >= 1.0) {
        return Err(Error::Domain(format!(
            "theta requires t >= 1 (asymptotic series unreliable below), got {t}"
        )));
    }
    let lg = (t / (2.0 * PI)).ln();
    let t2 = t * t;
    let corr = 1.0 / (48.0 * t)
        + 7.0 / (5760.0 * t * t2)
        + 31.0 / (80640.0 * t * t2 * t2)
        + 127.0 / (430080.0 * t * t2 * t2 * t2);
    Ok(0.5 * t * lg - 0.5 * t - PI / 8.0 + corr)
}

/// Hardy's Z-function, real on the critical line: Z(t) = e^{iθ(t)} ζ(1/2+it).
///
/// Below [`EM_RS_CROSSOVER`] the value is Re(e^{iθ} ζ(1/2+it)) with ζ by
/// Euler-Maclaurin; above it the Riemann-Siegel main sum with
/// `cfg.rs_correction_terms` correction coefficients takes over.
pub fn hardy_z(t: f64, cfg: &EvalConfig) -> Result<f64> {
    if !(t >= 2.0) {
        return Err(Error::Domain(format!("hardy_z requires t >= 2, got {t}")));
    }
    if t <= EM_RS_CROSSOVER {
        let th = theta(t)?;
        let z = zeta(Complex64::new(0.5, t), cfg)?;
        let phase = Complex64::new(0.0, th).exp();
        Ok((phase * z.value).re)
    } else {
        rs::hardy_z_rs(t, cfg.rs_correction_terms)
    }
}

/// Smooth main term of the zero-counting function:
/// n(T) = (T/2π) log(T/2πe) + 7/8, optionally plus the first two terms of
/// the decaying correction f(T) = 1/(48πT) + 7/(5760πT³) + O(T^-5).
///
/// Requires T > 0.
pub fn count_main_term(t: f64, include_f: bool) -> f64 {
    assert!(t > 0.0, "count_main_term requires T > 0");
    let mut v = t / (2.0 * PI) * (t / (2.0 * PI * std::f64::consts::E)).ln() + 0.875;
    if include_f {
        v += 1.0 / (48.0 * PI * t) + 7.0 / (5760.0 * PI * t * t * t);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const TAU2PIE: f64 = 17.079468445347132; // 2πe

    #[test]
    fn theta_reference_values() {
        // leading terms cancel analytically at t = 2πe, leaving -π/8 + corrections
        assert_abs_diff_eq!(
            theta(TAU2PIE).unwrap(),
            -0.391479049353898,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(theta(100.0).unwrap(), 87.9721652317872, epsilon = 1e-10);
        assert_abs_diff_eq!(theta(10.0).unwrap(), -3.06707439628990, epsilon = 1e-10);
    }

    #[test]
    fn theta_sign_change() {
        // θ crosses zero once near 17.8456
        let (mut lo, mut hi) = (17.0, 18.5);
        assert!(theta(lo).unwrap() < 0.0 && theta(hi).unwrap() > 0.0);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if theta(mid).unwrap() < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert_abs_diff_eq!(0.5 * (lo + hi), 17.8455995404109, epsilon = 1e-9);
    }

    #[test]
    fn theta_domain() {
        assert!(theta(0.5).is_err());
        assert!(theta(f64::NAN).is_err());
    }

    #[test]
    fn count_main_term_values() {
        assert_abs_diff_eq!(count_main_term(TAU2PIE, false), 0.875, epsilon = 1e-12);
        assert_abs_diff_eq!(
            count_main_term(100.0, false),
            29.002343587325348,
            epsilon = 1e-10
        );
        assert_abs_diff_eq!(
            count_main_term(100.0, true),
            29.002409902271805,
            epsilon = 1e-10
        );
        // cross-check: the true zero count N(1000) = 649 sits within 1
        assert!((count_main_term(1000.0, false) - 649.0).abs() < 1.0);
        assert_abs_diff_eq!(
            count_main_term(1000.0, false),
            648.616235312967,
            epsilon = 1e-9
        );
    }

    #[test]
    fn count_main_term_increasing_above_2pie() {
        let mut prev = count_main_term(TAU2PIE + 1e-6, false);
        let mut t = TAU2PIE + 0.5;
        while t < 5000.0 {
            let v = count_main_term(t, false);
            assert!(v > prev, "not increasing at T = {t}");
            prev = v;
            t += 0.5;
        }
    }

    #[test]
    fn hardy_z_brackets_first_zero() {
        let cfg = EvalConfig::default();
        let z14 = hardy_z(14.0, &cfg).unwrap();
        let z15 = hardy_z(15.0, &cfg).unwrap();
        assert!(z14.signum() != z15.signum());
        // bisect the sign change: the first ordinate
        let (mut lo, mut hi) = (14.0, 15.0);
        let mut flo = z14;
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            let fm = hardy_z(mid, &cfg).unwrap();
            if fm.signum() == flo.signum() {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        assert_abs_diff_eq!(0.5 * (lo + hi), 14.134725141734694, epsilon = 1e-9);
    }

    #[test]
    fn hardy_z_matches_zeta_modulus() {
        let cfg = EvalConfig::default();
        // |Z(30)| = |ζ(1/2+30i)| computed by the same Euler-Maclaurin core
        let z = hardy_z(30.0, &cfg).unwrap();
        let zv = zeta(Complex64::new(0.5, 30.0), &cfg).unwrap().value;
        assert_abs_diff_eq!(z.abs(), zv.norm(), epsilon = 1e-10);
        assert_abs_diff_eq!(z, 0.596028519239885, epsilon = 1e-10);
    }

    #[test]
    fn hardy_z_em_reference_values() {
        let cfg = EvalConfig::default();
        for (t, want) in [
            (60.8, 0.0515358337828292),
            (120.4, -2.41325988512127),
            (307.6, 2.28750627578454),
            (750.1, -2.31328770799645),
        ] {
            assert_abs_diff_eq!(hardy_z(t, &cfg).unwrap(), want, epsilon = 1e-9);
        }
    }

    #[test]
    fn hardy_z_domain() {
        let cfg = EvalConfig::default();
        assert!(hardy_z(1.5, &cfg).is_err());
    }
}
