//! Complex digamma and the logarithmic derivative of the functional-equation
//! factor Δ(s) = 2^s π^{s-1} sin(πs/2) Γ(1-s).

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::PI;

/// B_{2k}/(2k) for the digamma asymptotic series, k = 1..=7.
const DIGAMMA_ASYMP: [f64; 7] = [
    8.333333333333333e-2,
    -8.333333333333333e-3,
    3.968253968253968e-3,
    -4.166666666666667e-3,
    7.575757575757576e-3,
    -2.109279609279609e-2,
    8.333333333333333e-2,
];

/// cot(πz), stable for large |Im z| where sin/cos overflow.
pub(crate) fn cot_pi(z: Complex64) -> Complex64 {
    if z.im > 4.0 {
        // |w| = e^{-2π Im z} < e^{-8π}
        let w = (Complex64::new(0.0, 2.0 * PI) * z).exp();
        Complex64::new(0.0, 1.0) * (w + 1.0) / (w - 1.0)
    } else if z.im < -4.0 {
        cot_pi(z.conj()).conj()
    } else {
        let pz = PI * z;
        pz.cos() / pz.sin()
    }
}

/// ψ(z) = Γ'(z)/Γ(z) for complex z.
///
/// Reflection for Re z < 0.5, recurrence up to |z| ≥ 10, then the Bernoulli
/// asymptotic series; good to ~1e-15 away from the poles at 0, -1, -2, ….
pub fn digamma(z: Complex64) -> Complex64 {
    if z.re < 0.5 {
        // ψ(z) = ψ(1-z) - π cot(πz)
        return digamma(1.0 - z) - PI * cot_pi(z);
    }
    let mut w = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.norm_sqr() < 100.0 {
        acc -= 1.0 / w;
        w += 1.0;
    }
    let mut v = w.ln() - 0.5 / w;
    let inv_w2 = 1.0 / (w * w);
    let mut pw = inv_w2;
    for c in DIGAMMA_ASYMP {
        v -= c * pw;
        pw *= inv_w2;
    }
    acc + v
}

/// Δ'/Δ(s) for the functional equation ζ(s) = Δ(s) ζ(1-s):
/// log 2π + (π/2) cot(πs/2) − ψ(1−s).
///
/// Real on the critical line and equal to −log(|t|/2π) + O(1/|t|).
/// Requires |Im s| ≥ 2 (the poles of Δ'/Δ lie on the real line) and
/// |Re s| ≤ 2.
pub fn delta_log_deriv(s: Complex64) -> Result<Complex64> {
    if !(s.im.abs() >= 2.0) {
        return Err(Error::Domain(format!(
            "delta_log_deriv requires |Im s| >= 2, got {}",
            s.im
        )));
    }
    if s.re.abs() > 2.0 {
        return Err(Error::Domain(format!(
            "delta_log_deriv requires |Re s| <= 2, got {}",
            s.re
        )));
    }
    let v = (2.0 * PI).ln() + 0.5 * PI * cot_pi(0.5 * s) - digamma(1.0 - s);
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Consistency("delta_log_deriv: non-finite value".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn assert_c_close(v: Complex64, re: f64, im: f64, eps: f64) {
        assert_abs_diff_eq!(v.re, re, epsilon = eps);
        assert_abs_diff_eq!(v.im, im, epsilon = eps);
    }

    #[test]
    fn digamma_reference_values() {
        assert_c_close(
            digamma(Complex64::new(0.75, -17.0)),
            2.833177294767967,
            -1.556087260656011,
            1e-12,
        );
        assert_c_close(
            digamma(Complex64::new(8.5, 3.0)),
            2.145659567058182,
            0.358396712837597,
            1e-12,
        );
        // reflection path
        assert_c_close(
            digamma(Complex64::new(-2.5, 40.0)),
            3.691658464502954,
            1.645660038009613,
            1e-12,
        );
        // ψ(1) = -γ
        assert_abs_diff_eq!(
            digamma(Complex64::new(1.0, 0.0)).re,
            -0.5772156649015329,
            epsilon = 1e-14
        );
    }

    #[test]
    fn cot_pi_saturates() {
        let v = cot_pi(Complex64::new(0.25, 50.0));
        assert_c_close(v, 0.0, -1.0, 1e-100);
        let v = cot_pi(Complex64::new(0.25, -50.0));
        assert_c_close(v, 0.0, 1.0, 1e-100);
    }

    #[test]
    fn delta_log_deriv_matches_expansion() {
        // exact values are real on the critical line
        let v = delta_log_deriv(Complex64::new(0.5, 17.079468445347132)).unwrap();
        assert_c_close(v, -0.999857077372555, 0.0, 1e-11);
        assert!((v.re + 1.0).abs() < 0.06);

        let v = delta_log_deriv(Complex64::new(0.5, 100.0)).unwrap();
        assert_c_close(v, -2.767288952839159, 0.0, 1e-11);
        assert!((v.re - (-2.7675)).abs() < 0.01);
    }

    #[test]
    fn delta_log_deriv_sigma_dependence_is_second_order() {
        // the -log(|t|/2π) approximation is σ-independent to first order
        let a = delta_log_deriv(Complex64::new(-0.25, 50.0)).unwrap();
        let b = delta_log_deriv(Complex64::new(0.25, 50.0)).unwrap();
        assert!((a - b).norm() < 2.0 / 50.0);
        assert_c_close(a, -2.074241769779276, -0.014999374996870, 1e-11);
        assert_c_close(b, -2.074141772279213, -0.005000125015630, 1e-11);
    }

    #[test]
    fn delta_log_deriv_expansion_rate() {
        // t·|Δ'/Δ(1/2+it) + log(t/2π)| stays bounded (well under 10)
        let mut t = 10.0;
        while t <= 1000.0 {
            let v = delta_log_deriv(Complex64::new(0.5, t)).unwrap();
            let resid = (v.re + (t / (2.0 * PI)).ln()).abs();
            assert!(t * resid < 10.0, "t = {t}: t*resid = {}", t * resid);
            t *= 1.37;
        }
    }

    #[test]
    fn delta_log_deriv_domain() {
        assert!(delta_log_deriv(Complex64::new(0.5, 1.0)).is_err());
        assert!(delta_log_deriv(Complex64::new(3.0, 10.0)).is_err());
    }
}
