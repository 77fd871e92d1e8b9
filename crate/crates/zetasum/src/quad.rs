//! Adaptive Gauss-Kronrod quadrature for complex-valued integrands on a
//! real interval. Shared by the oscillatory module, the contour check and
//! the Perron inversion.

use crate::error::{Error, Result};
use crate::special::Estimate;
use num_complex::Complex64;

// 15-point Kronrod nodes and weights with the embedded 7-point Gauss rule.
const XGK: [f64; 8] = [
    0.991455371120813,
    0.949107912342759,
    0.864864423359769,
    0.741531185599394,
    0.586087235467691,
    0.405845151377397,
    0.207784955007898,
    0.0,
];
const WGK: [f64; 8] = [
    0.022935322010529,
    0.063092092629979,
    0.104790010322250,
    0.140653259715525,
    0.169004726639267,
    0.190350578064785,
    0.204432940075298,
    0.209482141084728,
];
const WG: [f64; 4] = [
    0.129484966168870,
    0.279705391489277,
    0.381830050505119,
    0.417959183673469,
];

fn gk15(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64) -> (Complex64, f64) {
    let half = 0.5 * (b - a);
    let center = 0.5 * (a + b);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let fsum = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    let value = kronrod * half;
    let err = ((kronrod - gauss) * half).norm();
    (value, err)
}

struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

/// Integrate `f` over [a, b] to absolute tolerance `tol`.
///
/// `breakpoints` seeds the initial subdivision (callers pre-split by phase
/// for oscillatory integrands); panels are then bisected worst-first until
/// the summed error estimate meets `tol` or `max_panels` trips the guard.
pub(crate) fn adaptive(
    f: &dyn Fn(f64) -> Complex64,
    a: f64,
    b: f64,
    tol: f64,
    max_panels: usize,
    breakpoints: &[f64],
) -> Result<Estimate> {
    if a == b {
        return Ok(Estimate::new(Complex64::new(0.0, 0.0), 0.0));
    }
    let mut cuts: Vec<f64> = Vec::with_capacity(breakpoints.len() + 2);
    cuts.push(a);
    cuts.extend(breakpoints.iter().copied().filter(|&x| x > a && x < b));
    cuts.push(b);

    let mut panels: Vec<Panel> = cuts
        .windows(2)
        .map(|w| {
            let (v, e) = gk15(f, w[0], w[1]);
            Panel {
                a: w[0],
                b: w[1],
                value: v,
                err: e,
            }
        })
        .collect();

    loop {
        let total_err: f64 = panels.iter().map(|p| p.err).sum();
        if total_err <= tol {
            break;
        }
        if panels.len() >= max_panels {
            return Err(Error::Resource(format!(
                "quadrature did not reach tol {tol:.2e} within {max_panels} panels \
                 (error estimate {total_err:.2e})"
            )));
        }
        let worst = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, _)| i)
            .unwrap();
        let Panel { a: pa, b: pb, .. } = panels[worst];
        let mid = 0.5 * (pa + pb);
        if mid <= pa || mid >= pb {
            // interval no longer splittable at f64 resolution
            break;
        }
        let (v1, e1) = gk15(f, pa, mid);
        let (v2, e2) = gk15(f, mid, pb);
        panels[worst] = Panel {
            a: pa,
            b: mid,
            value: v1,
            err: e1,
        };
        panels.push(Panel {
            a: mid,
            b: pb,
            value: v2,
            err: e2,
        });
    }

    // deterministic summation order: by left endpoint
    panels.sort_by(|x, y| x.a.total_cmp(&y.a));
    let mut value = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for p in &panels {
        value += p.value;
        err += p.err;
    }
    Estimate::new(value, err).checked("adaptive quadrature")
}
