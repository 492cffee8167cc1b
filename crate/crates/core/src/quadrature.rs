//! Periodic trapezoid quadrature of the defining integrals.
//!
//! Each functional is integrated from pointwise samples of `p`, `p'` and
//! `p''` rather than from the coefficient formulas. The rule is exact for
//! trigonometric polynomials of degree below the node count, so agreement
//! with [`crate::functionals`] is an equality up to rounding.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::functionals::CurveFunctionals;
use crate::scan;
use crate::support::SupportFourier;

/// Samples of a periodic function at `θ_k = 2πk/M`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicSamples {
    values: Vec<f64>,
}

impl PeriodicSamples {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.len() < 4 {
            return Err(Error::InvalidArgument(format!(
                "need at least 4 periodic samples, got {}",
                values.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("samples must be finite".into()));
        }
        Ok(PeriodicSamples { values })
    }

    /// Samples `f` on `m` uniform nodes.
    pub fn from_fn(m: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        Self::new(nodes(m).map(f).collect())
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Uniform nodes `2πk/m`, `k = 0..m`.
pub fn nodes(m: usize) -> impl Iterator<Item = f64> {
    let h = TAU / m as f64;
    (0..m).map(move |k| h * k as f64)
}

/// `(2π/M) Σ f(θ_k)` with compensated summation.
pub fn periodic_trapezoid(samples: &PeriodicSamples) -> f64 {
    TAU / samples.len() as f64 * neumaier_sum(samples.values.iter().copied())
}

pub(crate) fn neumaier_sum(it: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in it {
        let t = sum + x;
        if sum.abs() >= x.abs() {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Smallest node count for which every integrand of `c` is integrated exactly.
pub fn min_nodes(c: &SupportFourier) -> usize {
    4 * (c.degree() + 1)
}

/// All functionals of `c` from `m` samples of `p`, `p'`, `p''`.
pub fn oracle_functionals(c: &SupportFourier, m: usize) -> Result<CurveFunctionals> {
    let need = min_nodes(c).max(4);
    if m < need {
        return Err(Error::InvalidArgument(format!(
            "{m} nodes cannot integrate a degree-{} curve exactly; need at least {need}",
            c.degree()
        )));
    }
    let mut p = Vec::with_capacity(m);
    let mut area = Vec::with_capacity(m);
    let mut evolute = Vec::with_capacity(m);
    let mut rho_sq = Vec::with_capacity(m);
    for t in nodes(m) {
        let (v, d1, d2) = (c.p(t), c.dp(t), c.ddp(t));
        p.push(v);
        area.push(0.5 * (v * v - d1 * d1));
        evolute.push(0.5 * (d1 * d1 - d2 * d2));
        rho_sq.push((v + d2) * (v + d2));
    }
    let integrate = |v: Vec<f64>| PeriodicSamples::new(v).map(|s| periodic_trapezoid(&s));
    let length = integrate(p)?;
    let area = integrate(area)?;
    let evolute_area_oriented = integrate(evolute)?;
    let int_rho_sq = integrate(rho_sq)?;

    let rho = |t: f64| c.p(t) + c.ddp(t);
    let hi = scan::periodic_max(rho, m);
    let lo = scan::periodic_min(rho, m);
    let max_rho_sq = (hi.value * hi.value).max(lo.value * lo.value);

    Ok(CurveFunctionals {
        length,
        area,
        evolute_area_oriented,
        evolute_area_abs: evolute_area_oriented.abs(),
        int_rho_sq,
        max_rho_sq,
        convex: lo.value > 0.0,
    })
}

/// Signed area of the polygon through `m` curve points (shoelace formula).
pub fn shoelace_area(c: &SupportFourier, m: usize) -> f64 {
    let pts: Vec<_> = nodes(m).map(|t| c.curve_point(t)).collect();
    0.5 * neumaier_sum((0..m).map(|k| {
        let a = pts[k];
        let b = pts[(k + 1) % m];
        a.x * b.y - a.y * b.x
    }))
}
