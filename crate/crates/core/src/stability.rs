//! Distance from a convex curve to its Steiner disc, and the bounds that
//! control it by the deficit.
//!
//! After moving the Steiner point to the origin the two support functions
//! differ exactly by the harmonics `n ≥ 2`, so
//!
//! - `h₁² = (max_θ |Σ_{n≥2} (a_n cos nθ + b_n sin nθ)|)²`
//! - `h₂² = π Σ_{n≥2} (a_n² + b_n²)`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functionals::{self, harmonic_energy};
use crate::inequalities::{self, cone_check_with_tol, param_tol, IneqParams};
use crate::scan;
use crate::support::SupportFourier;

/// Default truncation tolerance of [`stability_constant`].
pub const SERIES_TOL: f64 = 1e-12;

/// Hard cap on the number of series terms summed explicitly.
pub const MAX_SERIES_TERMS: usize = 20_000_000;

/// `h₁²` together with the coefficient bound `(Σ_{n≥2} √(a_n²+b_n²))²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupDistance {
    pub h1_sq: f64,
    pub theta: f64,
    pub coefficient_bound: f64,
}

/// Sup-norm distance squared between `c` and its Steiner disc.
pub fn h1_sq(c: &SupportFourier) -> Result<SupDistance> {
    c.ensure_convex()?;
    Ok(h1_sq_unchecked(c))
}

fn h1_sq_unchecked(c: &SupportFourier) -> SupDistance {
    let osc = |t: f64| {
        c.terms()
            .skip(1)
            .map(|(n, a, b)| {
                let (s, co) = (n as f64 * t).sin_cos();
                a * co + b * s
            })
            .sum::<f64>()
    };
    let grid = scan::grid_size(c.degree());
    let hi = scan::periodic_max(osc, grid);
    let lo = scan::periodic_min(osc, grid);
    let (sup, theta) = if hi.value >= -lo.value {
        (hi.value, hi.theta)
    } else {
        (-lo.value, lo.theta)
    };
    let sum: f64 = c.terms().skip(1).map(|(_, a, b)| a.hypot(b)).sum();
    SupDistance {
        h1_sq: sup.max(0.0).powi(2),
        theta,
        coefficient_bound: sum * sum,
    }
}

/// L²-distance squared between `c` and its Steiner disc.
pub fn h2_sq(c: &SupportFourier) -> Result<f64> {
    c.ensure_convex()?;
    Ok(PI * harmonic_energy(c, |_| 1.0))
}

/// The series constant `max{1, (2/π) Σ_{n≥2} 1/((2α(n²−1) − λ + δn²)(n²−1))}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StabilityConstant {
    /// Upper bound on the constant (tail bound included).
    pub value: f64,
    /// `(2/π)` times the series, tail bound included.
    pub series: f64,
    /// Certified bound on `value − true constant`.
    pub error_bound: f64,
    /// Number of terms summed explicitly.
    pub terms: usize,
}

/// Sums the series until its rigorous tail bound falls below `tol`.
///
/// Write the inner factor as `k + g(n²−4)` with `k = 6α − λ + 4δ > 0` and
/// `g = 2α + δ ≥ 0`. Two tail bounds for `n > N` are used:
///
/// - `term_n ≤ 1/(k(n²−1))`, and `Σ_{n>N} 1/(n²−1) = (1/N + 1/(N+1))/2`
///   exactly. When `g = 0` this is the exact tail.
/// - with `m = min(g, k/3)`, `k + g(n²−4) ≥ m(n²−1)`, so
///   `term_n ≤ 1/(m(n−1)⁴)` and `Σ_{n>N} ≤ 1/(3m(N−1)³)`.
///
/// The smaller bound is added to the partial sum, so the returned value
/// never underestimates the constant.
pub fn stability_constant(p: &IneqParams, tol: f64) -> Result<StabilityConstant> {
    if !p.is_finite() || !cone_check_with_tol(p, param_tol(p)).cond20 {
        return Err(Error::Cone {
            condition: "cond20",
            params: p.to_string(),
        });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let k = p.second_harmonic_factor();
    let g = p.growth();
    let scale = 2.0 / PI;

    if g <= param_tol(p) {
        // constant inner factor: Σ_{n≥2} 1/(n²−1) = 3/4. For 0 < g ≤ tol
        // this overestimates, which keeps the value an upper bound.
        let series = scale * 0.75 / k;
        return Ok(StabilityConstant {
            value: series.max(1.0),
            series,
            error_bound: 0.0,
            terms: 0,
        });
    }

    let m = g.min(k / 3.0);
    let tail_bound = |n: usize| -> f64 {
        let nf = n as f64;
        let telescoped = 0.5 * (1.0 / nf + 1.0 / (nf + 1.0)) / k;
        let quartic = 1.0 / (3.0 * m * (nf - 1.0).powi(3));
        telescoped.min(quartic)
    };
    let target = tol / scale;

    let mut n = 1usize;
    let mut tail = f64::INFINITY;
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    while n < MAX_SERIES_TERMS {
        n += 1;
        let n2m1 = (n * n - 1) as f64;
        let term = 1.0 / (p.inner_factor(n) * n2m1);
        let t = sum + term;
        comp += if sum.abs() >= term.abs() { (sum - t) + term } else { (term - t) + sum };
        sum = t;
        // the bound is cheap but not free; test it every 64 terms after warm-up
        if n < 64 || n.is_multiple_of(64) {
            tail = tail_bound(n);
            if tail <= target {
                break;
            }
        }
    }
    if n >= MAX_SERIES_TERMS {
        tail = tail_bound(n);
    }
    let partial = sum + comp;
    let series = scale * (partial + tail);
    Ok(StabilityConstant {
        value: series.max(1.0),
        series,
        error_bound: scale * tail,
        terms: n - 1,
    })
}

/// One side-by-side comparison `lhs ≤ rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs − lhs`.
    pub margin: f64,
    pub holds: bool,
}

impl BoundCheck {
    fn new(lhs: f64, rhs: f64, slack: f64) -> Self {
        let margin = rhs - lhs;
        BoundCheck {
            lhs,
            rhs,
            margin,
            holds: margin >= -slack,
        }
    }
}

fn slack(c: &SupportFourier, tol: f64) -> f64 {
    let l = functionals::length(c);
    tol * (l * l).max(1.0)
}

/// Sup-distance bound `h₁² ≤ C · deficit`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupBoundReport {
    pub constant: StabilityConstant,
    pub deficit: f64,
    pub distance: SupDistance,
    /// Exact `h₁²` against `C · deficit`.
    pub bound: BoundCheck,
    /// Coefficient bound on `h₁²` against `C · deficit`.
    pub coefficient_bound: BoundCheck,
    /// `h₁² ≤ (Σ √(a_n²+b_n²))²`.
    pub sup_below_coefficient_bound: bool,
}

impl SupBoundReport {
    pub fn holds(&self) -> bool {
        self.bound.holds && self.coefficient_bound.holds && self.sup_below_coefficient_bound
    }
}

pub fn check_sup_bound(c: &SupportFourier, p: &IneqParams, tol: f64) -> Result<SupBoundReport> {
    let deficit = inequalities::deficit(c, p)?.value;
    check_sup_bound_with(c, p, deficit, tol)
}

fn check_sup_bound_with(c: &SupportFourier, p: &IneqParams, deficit: f64, tol: f64) -> Result<SupBoundReport> {
    let constant = stability_constant(p, SERIES_TOL)?;
    let distance = h1_sq(c)?;
    let s = slack(c, tol);
    let rhs = constant.value * deficit;
    Ok(SupBoundReport {
        constant,
        deficit,
        distance,
        bound: BoundCheck::new(distance.h1_sq, rhs, s),
        coefficient_bound: BoundCheck::new(distance.coefficient_bound, rhs, s),
        sup_below_coefficient_bound: distance.h1_sq <= distance.coefficient_bound * (1.0 + 1e-12) + 1e-300,
    })
}

/// L²-distance bound `h₂² ≤ deficit`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct L2BoundReport {
    pub bound: BoundCheck,
    /// Set when the parameters sit on the equality face and the margin
    /// vanishes: whether all harmonics `n ≥ 3` vanish as required.
    pub equality_degree_two: Option<bool>,
}

impl L2BoundReport {
    pub fn holds(&self) -> bool {
        self.bound.holds && self.equality_degree_two.unwrap_or(true)
    }
}

pub fn check_l2_bound(c: &SupportFourier, p: &IneqParams, tol: f64) -> Result<L2BoundReport> {
    let deficit = inequalities::deficit(c, p)?.value;
    check_l2_bound_with(c, p, deficit, tol)
}

fn check_l2_bound_with(c: &SupportFourier, p: &IneqParams, deficit: f64, tol: f64) -> Result<L2BoundReport> {
    if !p.is_finite() || !cone_check_with_tol(p, param_tol(p)).cond25 {
        return Err(Error::Cone {
            condition: "cond25",
            params: p.to_string(),
        });
    }
    let h2 = h2_sq(c)?;
    let s = slack(c, tol);
    let bound = BoundCheck::new(h2, deficit, s);
    let on_face = cone_check_with_tol(p, param_tol(p)).cond27;
    let equality_degree_two = (on_face && bound.margin.abs() <= s).then(|| {
        c.terms()
            .skip(2)
            .all(|(_, a, b)| a.hypot(b) <= inequalities::EQUALITY_TOL.sqrt())
    });
    Ok(L2BoundReport {
        bound,
        equality_degree_two,
    })
}

/// `max{h₁², h₂²} ≤ C · deficit`.
pub fn check_combined_bound(c: &SupportFourier, p: &IneqParams, tol: f64) -> Result<BoundCheck> {
    let deficit = inequalities::deficit(c, p)?.value;
    check_combined_with(c, p, deficit, tol)
}

fn check_combined_with(c: &SupportFourier, p: &IneqParams, deficit: f64, tol: f64) -> Result<BoundCheck> {
    if !cone_check_with_tol(p, param_tol(p)).cond25 {
        return Err(Error::Cone {
            condition: "cond25",
            params: p.to_string(),
        });
    }
    let constant = stability_constant(p, SERIES_TOL)?;
    let lhs = h1_sq(c)?.h1_sq.max(h2_sq(c)?);
    Ok(BoundCheck::new(lhs, constant.value * deficit, slack(c, tol)))
}

/// `(4π² − 33)/(96π²)`.
pub fn panxu_h1_factor() -> f64 {
    (4.0 * PI * PI - 33.0) / (96.0 * PI * PI)
}

/// `1/(18π)`.
pub fn panxu_h2_factor() -> f64 {
    1.0 / (18.0 * PI)
}

/// Parameters under which the L² bound reads `h₂² ≤ Φ/(18π)`.
pub fn panxu_l2_params() -> IneqParams {
    IneqParams::new(0.0, -1.0 / (18.0 * PI), 2.0 / 9.0, 2.0 / 9.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PanXuReport {
    /// `Φ = 4π(A + |Ã|) − L²`.
    pub phi: f64,
    pub h1: BoundCheck,
    pub h2: BoundCheck,
    /// Deficit at [`panxu_l2_params`]; equals `Φ/(18π)`.
    pub l2_instance_deficit: f64,
    /// Relative difference between `Φ/(18π)` and `l2_instance_deficit`.
    pub l2_instance_rel_diff: f64,
}

impl PanXuReport {
    pub fn holds(&self) -> bool {
        self.h1.holds && self.h2.holds
    }
}

pub fn check_panxu(c: &SupportFourier, tol: f64) -> Result<PanXuReport> {
    let phi = inequalities::reverse_pan_zhang(c)?;
    let instance = inequalities::deficit(c, &panxu_l2_params())?.value;
    check_panxu_with(c, phi, instance, tol)
}

fn check_panxu_with(c: &SupportFourier, phi: f64, instance: f64, tol: f64) -> Result<PanXuReport> {
    let s = slack(c, tol);
    let h1 = h1_sq(c)?.h1_sq;
    let h2 = h2_sq(c)?;
    let h2_rhs = panxu_h2_factor() * phi;
    let denom = h2_rhs.abs().max(instance.abs());
    let rel = if denom == 0.0 { 0.0 } else { (h2_rhs - instance).abs() / denom };
    Ok(PanXuReport {
        phi,
        h1: BoundCheck::new(h1, panxu_h1_factor() * phi, s),
        h2: BoundCheck::new(h2, h2_rhs, s),
        l2_instance_deficit: instance,
        l2_instance_rel_diff: rel,
    })
}

/// Everything the stability checks produce for one curve and one
/// parameter choice. Checks whose cone condition fails are `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub steiner_point: crate::support::PlanePoint,
    pub steiner_radius: f64,
    pub h1_sq: f64,
    pub h1_coefficient_bound: f64,
    pub h2_sq: f64,
    #[serde(rename = "C_const")]
    pub c_const: Option<f64>,
    #[serde(rename = "C_error")]
    pub c_error: Option<f64>,
    pub deficit_value: f64,
    pub phi: f64,
    pub bound_21_ok: Option<bool>,
    pub margin_21: Option<f64>,
    pub bound_26_ok: Option<bool>,
    pub margin_26: Option<f64>,
    pub bound_30_ok: Option<bool>,
    pub margin_30: Option<f64>,
    pub panxu_h1_ok: bool,
    pub panxu_h2_ok: bool,
    pub params: IneqParams,
}

impl StabilityReport {
    /// True when every applicable check holds.
    pub fn all_hold(&self) -> bool {
        [self.bound_21_ok, self.bound_26_ok, self.bound_30_ok]
            .iter()
            .all(|b| b.unwrap_or(true))
            && self.panxu_h1_ok
            && self.panxu_h2_ok
    }

    /// True when at least one of the parametric bounds applies.
    pub fn any_applicable(&self) -> bool {
        self.bound_21_ok.is_some() || self.bound_26_ok.is_some()
    }
}

/// Runs every stability check for `c` with parameters `p`.
pub fn stability_report(c: &SupportFourier, p: &IneqParams, tol: f64) -> Result<StabilityReport> {
    c.ensure_convex()?;
    let f = functionals::compute_all(c);
    stability_report_from(c, &f, p, tol)
}

/// As [`stability_report`] with precomputed (possibly perturbed) functionals.
pub(crate) fn stability_report_from(
    c: &SupportFourier,
    f: &functionals::CurveFunctionals,
    p: &IneqParams,
    tol: f64,
) -> Result<StabilityReport> {
    let deficit = inequalities::deficit_from_parts(c, f, p)?.value;
    let phi = inequalities::deficit_from_parts(c, f, &crate::Preset::Eq2.params().unwrap())?.value;
    let instance = inequalities::deficit_from_parts(c, f, &panxu_l2_params())?.value;
    let status = cone_check_with_tol(p, param_tol(p));
    let dist = h1_sq(c)?;

    let (sup, constant) = if status.cond20 {
        let r = check_sup_bound_with(c, p, deficit, tol)?;
        (Some(r), Some(r.constant))
    } else {
        (None, None)
    };
    let l2 = if status.cond25 {
        Some(check_l2_bound_with(c, p, deficit, tol)?)
    } else {
        None
    };
    let combined = if status.cond20 && status.cond25 {
        Some(check_combined_with(c, p, deficit, tol)?)
    } else {
        None
    };
    let panxu = check_panxu_with(c, phi, instance, tol)?;
    let disc = functionals::steiner_disc(c);

    Ok(StabilityReport {
        steiner_point: functionals::steiner_point(c),
        steiner_radius: disc.a0,
        h1_sq: dist.h1_sq,
        h1_coefficient_bound: dist.coefficient_bound,
        h2_sq: h2_sq(c)?,
        c_const: constant.map(|k| k.value),
        c_error: constant.map(|k| k.error_bound),
        deficit_value: deficit,
        phi,
        bound_21_ok: sup.map(|r| r.holds()),
        margin_21: sup.map(|r| r.bound.margin),
        bound_26_ok: l2.map(|r| r.holds()),
        margin_26: l2.map(|r| r.bound.margin),
        bound_30_ok: combined.map(|r| r.holds),
        margin_30: combined.map(|r| r.margin),
        panxu_h1_ok: panxu.h1.holds,
        panxu_h2_ok: panxu.h2.holds,
        params: *p,
    })
}
