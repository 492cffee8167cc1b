//! The four-parameter deficit `α∫ρ² + βL² + λA + δ|Ã|` and the linear
//! conditions on `(α, β, λ, δ)` that make it nonnegative.
//!
//! In coefficients the deficit splits into a constant part and one term
//! per harmonic,
//!
//! ```text
//! π a0² (2α + 4πβ + λ) + (π/2) Σ_{n≥2} (2α(n²−1) − λ + δn²)(n²−1)(a_n² + b_n²)
//! ```
//!
//! so nonnegativity reduces to the sign of `2α + 4πβ + λ` and of every
//! per-harmonic factor. When `2α + δ ≥ 0` the inner factor is
//! nondecreasing in `n`, which is why only `n = 2` shows up in the cone.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functionals::{self, CurveFunctionals};
use crate::support::SupportFourier;

/// Relative agreement required between the functional route and the
/// coefficient route of [`deficit`].
pub const ROUTE_AGREEMENT: f64 = 1e-11;

/// Tolerance of the equality diagnosis, relative to `max(1, L²)`.
pub const EQUALITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IneqParams {
    pub alpha: f64,
    pub beta: f64,
    pub lambda: f64,
    pub delta: f64,
}

impl fmt::Display for IneqParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(alpha={}, beta={}, lambda={}, delta={})",
            self.alpha, self.beta, self.lambda, self.delta
        )
    }
}

impl IneqParams {
    pub const fn new(alpha: f64, beta: f64, lambda: f64, delta: f64) -> Self {
        IneqParams {
            alpha,
            beta,
            lambda,
            delta,
        }
    }

    /// `2α + δ`: the growth rate of the inner factor in `n²`.
    pub fn growth(&self) -> f64 {
        2.0 * self.alpha + self.delta
    }

    /// `2α + 4πβ + λ`: the weight of `π a0²`.
    ///
    /// Parameters like `β = −1/(18π)` can only cancel up to rounding, so a
    /// sum within a few ulps of its largest term is taken as exactly zero.
    pub fn constant_weight(&self) -> f64 {
        let terms = [2.0 * self.alpha, 4.0 * PI * self.beta, self.lambda];
        let w = terms.iter().sum::<f64>();
        let size = terms.iter().fold(0.0f64, |m, t| m.max(t.abs()));
        if w.abs() <= 4.0 * f64::EPSILON * size {
            0.0
        } else {
            w
        }
    }

    /// `6α − λ + 4δ`: the inner factor at `n = 2`.
    pub fn second_harmonic_factor(&self) -> f64 {
        6.0 * self.alpha - self.lambda + 4.0 * self.delta
    }

    /// `18α − 3λ + 12δ − 2`: the `n = 2` weight of the deficit minus `h₂²`.
    pub fn l2_stability_factor(&self) -> f64 {
        18.0 * self.alpha - 3.0 * self.lambda + 12.0 * self.delta - 2.0
    }

    /// `2α(n²−1) − λ + δn²`.
    pub fn inner_factor(&self, n: usize) -> f64 {
        let n2 = (n * n) as f64;
        2.0 * self.alpha * (n2 - 1.0) - self.lambda + self.delta * n2
    }

    pub fn is_finite(&self) -> bool {
        self.alpha.is_finite()
            && self.beta.is_finite()
            && self.lambda.is_finite()
            && self.delta.is_finite()
    }

    pub fn cone(&self) -> ConeStatus {
        cone_check(self)
    }

    /// Same parameters scaled by `s` (the deficit scales linearly).
    pub fn scaled(&self, s: f64) -> Self {
        IneqParams::new(self.alpha * s, self.beta * s, self.lambda * s, self.delta * s)
    }
}

/// Which of the linear parameter conditions hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeStatus {
    /// `2α+δ ≥ 0`, `2α+4πβ+λ ≥ 0`, `6α−λ+4δ ≥ 0`: the deficit is nonnegative.
    pub cond4: bool,
    /// `2α+4πβ+λ = 0`: circles give equality.
    pub cond6: bool,
    /// `2α+δ > 0`, `2α+4πβ+λ = 0`, `6α−λ+4δ = 0`: equality forces degree ≤ 2.
    pub cond7: bool,
    /// As `cond4` with `6α−λ+4δ > 0`: sup-distance stability.
    pub cond20: bool,
    /// `2α+δ ≥ 0`, `2α+4πβ+λ ≥ 0`, `18α−3λ+12δ−2 ≥ 0`: L²-distance stability.
    pub cond25: bool,
    /// As `cond25` with strict first line and equalities elsewhere.
    pub cond27: bool,
}

/// Evaluates every condition with exact comparisons.
pub fn cone_check(p: &IneqParams) -> ConeStatus {
    cone_check_with_tol(p, 0.0)
}

/// Like [`cone_check`] but treats `|x| ≤ tol` as zero in every line.
///
/// Equality conditions are otherwise hard to meet with parameters such as
/// `β = −3/π` that are not exactly representable.
pub fn cone_check_with_tol(p: &IneqParams, tol: f64) -> ConeStatus {
    let ge = |x: f64| x >= -tol;
    let gt = |x: f64| x > tol;
    let eq = |x: f64| x.abs() <= tol;
    let g = p.growth();
    let w = p.constant_weight();
    let k = p.second_harmonic_factor();
    let s = p.l2_stability_factor();
    ConeStatus {
        cond4: ge(g) && ge(w) && ge(k),
        cond6: eq(w),
        cond7: gt(g) && eq(w) && eq(k),
        cond20: ge(g) && ge(w) && gt(k),
        cond25: ge(g) && ge(w) && ge(s),
        cond27: gt(g) && eq(w) && eq(s),
    }
}

/// Tolerance used for the equality lines of the cone when deciding
/// preconditions: a few ulps of the largest parameter term.
pub fn param_tol(p: &IneqParams) -> f64 {
    let scale = [p.alpha * 18.0, 4.0 * PI * p.beta, 3.0 * p.lambda, 12.0 * p.delta, 2.0]
        .iter()
        .fold(0.0f64, |m, x| m.max(x.abs()));
    1e-12 * scale
}

/// Per-harmonic coefficient `(2α(n²−1) − λ + δn²)(n²−1)`.
pub fn coefficient(p: &IneqParams, n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "harmonic coefficient defined for n >= 2, got {n}"
        )));
    }
    let n2m1 = (n * n - 1) as f64;
    Ok(p.inner_factor(n) * n2m1)
}

/// Deficit value with its per-harmonic breakdown.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeficitReport {
    pub value: f64,
    pub a0_term: f64,
    pub harmonic_terms: Vec<(usize, f64)>,
    pub params: IneqParams,
    pub cone: ConeStatus,
}

impl DeficitReport {
    /// Sum of the absolute values of the terms, a natural rounding scale.
    pub fn magnitude(&self) -> f64 {
        self.a0_term.abs() + self.harmonic_terms.iter().map(|t| t.1.abs()).sum::<f64>()
    }
}

/// `α∫ρ² + βL² + λA + δ|Ã|` from precomputed functionals.
pub fn deficit_from_functionals(f: &CurveFunctionals, p: &IneqParams) -> f64 {
    p.alpha * f.int_rho_sq
        + p.beta * f.length * f.length
        + p.lambda * f.area
        + p.delta * f.evolute_area_abs
}

/// Coefficient form of the deficit.
pub fn deficit_breakdown(c: &SupportFourier, p: &IneqParams) -> DeficitReport {
    let a0_term = PI * c.a0 * c.a0 * p.constant_weight();
    let harmonic_terms: Vec<(usize, f64)> = c
        .terms()
        .skip(1)
        .map(|(n, a, b)| {
            let n2m1 = (n * n - 1) as f64;
            (n, 0.5 * PI * p.inner_factor(n) * n2m1 * (a * a + b * b))
        })
        .collect();
    let value = a0_term + harmonic_terms.iter().map(|t| t.1).sum::<f64>();
    DeficitReport {
        value,
        a0_term,
        harmonic_terms,
        params: *p,
        cone: cone_check(p),
    }
}

/// Deficit computed both from `f` and from the coefficients of `c`.
///
/// Fails with [`Error::Inconsistent`] when the two routes disagree by more
/// than [`ROUTE_AGREEMENT`] relative to the size of the individual terms.
pub fn deficit_from_parts(
    c: &SupportFourier,
    f: &CurveFunctionals,
    p: &IneqParams,
) -> Result<DeficitReport> {
    let report = deficit_breakdown(c, p);
    let direct = deficit_from_functionals(f, p);
    let scale = (p.alpha * f.int_rho_sq).abs()
        + (p.beta * f.length * f.length).abs()
        + (p.lambda * f.area).abs()
        + (p.delta * f.evolute_area_abs).abs();
    if (direct - report.value).abs() > ROUTE_AGREEMENT * scale.max(1e-300) {
        return Err(Error::Inconsistent {
            what: "deficit",
            lhs: direct,
            rhs: report.value,
        });
    }
    Ok(report)
}

/// Deficit of a strictly convex curve.
pub fn deficit(c: &SupportFourier, p: &IneqParams) -> Result<DeficitReport> {
    c.ensure_convex()?;
    deficit_from_parts(c, &functionals::compute_all(c), p)
}

/// Outcome of [`equality_diagnosis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Diagnosis {
    /// Deficit vanishes and no harmonic above the second is present.
    DegreeAtMostTwo,
    /// Deficit is positive and some harmonic above the second is present.
    StrictInequality,
    /// Deficit is above the threshold although every harmonic above the
    /// second is individually below the amplitude tolerance.
    NearEquality,
    /// Deficit vanishes while a harmonic above the second is present.
    Inconsistent,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EqualityReport {
    pub diagnosis: Diagnosis,
    pub deficit: f64,
    /// Equality threshold `EQUALITY_TOL · max(1, L²)`.
    pub threshold: f64,
    /// `max_{n≥3} √(a_n² + b_n²)`.
    pub max_high_amplitude: f64,
    /// Largest amplitude a single harmonic `n ≥ 3` can have while the
    /// deficit stays below `threshold`.
    pub amplitude_tol: f64,
}

/// Checks the equality characterization for parameters on the `cond7` face.
///
/// On that face the constant and `n = 2` terms vanish and every term with
/// `n ≥ 3` is positive and at least `(π/2) c₃ (a_n² + b_n²)`, since the
/// per-harmonic coefficient `c_n` grows with `n`. A deficit below the
/// threshold therefore bounds every amplitude by
/// `√(threshold / ((π/2) c₃))`.
pub fn equality_diagnosis(c: &SupportFourier, p: &IneqParams) -> Result<EqualityReport> {
    if !cone_check_with_tol(p, param_tol(p)).cond7 {
        return Err(Error::Cone {
            condition: "cond7",
            params: p.to_string(),
        });
    }
    let report = deficit(c, p)?;
    let l = functionals::length(c);
    let threshold = EQUALITY_TOL * (l * l).max(1.0);
    let c3 = coefficient(p, 3)?;
    let amplitude_tol = (threshold / (0.5 * PI * c3)).sqrt();
    let max_high_amplitude = c
        .terms()
        .skip(2)
        .map(|(_, a, b)| a.hypot(b))
        .fold(0.0, f64::max);
    let equal = report.value.abs() <= threshold;
    let high_vanish = max_high_amplitude <= amplitude_tol;
    let diagnosis = match (equal, high_vanish) {
        (true, true) => Diagnosis::DegreeAtMostTwo,
        (false, false) => Diagnosis::StrictInequality,
        (false, true) => Diagnosis::NearEquality,
        (true, false) => Diagnosis::Inconsistent,
    };
    Ok(EqualityReport {
        diagnosis,
        deficit: report.value,
        threshold,
        max_high_amplitude,
        amplitude_tol,
    })
}

/// Named instances of the deficit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// `L² − 4πA ≥ 0`.
    Eq1,
    /// `4π(A + |Ã|) − L² ≥ 0`.
    Eq2,
    /// `∫ρ² − (L² − 2πA)/π ≥ 0`.
    Eq3,
    /// `4πA + π|Ã| − L² ≥ 0`.
    Eq8,
    /// `∫ρ² − (L²/π − 2A + |Ã|) ≥ 0`.
    Eq9,
    /// `max ρ² − (L²/π − 2A + |Ã|)/2π ≥ 0`; not a deficit instance.
    Eq10,
}

impl Preset {
    pub const ALL: [Preset; 6] = [
        Preset::Eq1,
        Preset::Eq2,
        Preset::Eq3,
        Preset::Eq8,
        Preset::Eq9,
        Preset::Eq10,
    ];

    /// Parameters realising the preset as a deficit, if it is one.
    pub fn params(self) -> Option<IneqParams> {
        match self {
            Preset::Eq1 => Some(IneqParams::new(0.0, 1.0, -4.0 * PI, 0.0)),
            Preset::Eq2 => Some(IneqParams::new(0.0, -1.0, 4.0 * PI, 4.0 * PI)),
            Preset::Eq3 => Some(IneqParams::new(1.0, -1.0 / PI, 2.0, 0.0)),
            Preset::Eq8 => Some(IneqParams::new(0.0, -1.0, 4.0 * PI, PI)),
            Preset::Eq9 => Some(IneqParams::new(1.0, -1.0 / PI, 2.0, -1.0)),
            Preset::Eq10 => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::Eq1 => "eq1",
            Preset::Eq2 => "eq2",
            Preset::Eq3 => "eq3",
            Preset::Eq8 => "eq8",
            Preset::Eq9 => "eq9",
            Preset::Eq10 => "eq10",
        }
    }

    /// Residual of the preset for `c`; nonnegative means the inequality holds.
    pub fn residual(self, c: &SupportFourier) -> Result<f64> {
        match self {
            Preset::Eq1 => classical_isoperimetric(c),
            Preset::Eq2 => reverse_pan_zhang(c),
            Preset::Eq3 => pan_yang(c),
            Preset::Eq8 => bonnesen_8(c),
            Preset::Eq9 => bonnesen_9(c),
            Preset::Eq10 => bonnesen_10(c),
        }
    }
}

impl std::str::FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown preset {s:?}")))
    }
}

fn preset_deficit(c: &SupportFourier, preset: Preset) -> Result<f64> {
    let p = preset.params().expect("preset has deficit parameters");
    deficit(c, &p).map(|r| r.value)
}

/// `L² − 4πA`.
pub fn classical_isoperimetric(c: &SupportFourier) -> Result<f64> {
    c.ensure_convex()?;
    Ok(functionals::compute_all(c).isoperimetric_deficit())
}

/// `4π(A + |Ã|) − L²`.
pub fn reverse_pan_zhang(c: &SupportFourier) -> Result<f64> {
    preset_deficit(c, Preset::Eq2)
}

/// `∫ρ² − (L² − 2πA)/π`.
pub fn pan_yang(c: &SupportFourier) -> Result<f64> {
    preset_deficit(c, Preset::Eq3)
}

/// `4πA + π|Ã| − L²`.
pub fn bonnesen_8(c: &SupportFourier) -> Result<f64> {
    preset_deficit(c, Preset::Eq8)
}

/// `∫ρ² − (L²/π − 2A + |Ã|)`.
pub fn bonnesen_9(c: &SupportFourier) -> Result<f64> {
    preset_deficit(c, Preset::Eq9)
}

/// `max ρ² − (L²/π − 2A + |Ã|)/2π`.
pub fn bonnesen_10(c: &SupportFourier) -> Result<f64> {
    c.ensure_convex()?;
    let f = functionals::compute_all(c);
    let bound = (f.length * f.length / PI - 2.0 * f.area + f.evolute_area_abs) / (2.0 * PI);
    Ok(f.max_rho_sq - bound)
}

/// How much the improved inequalities gain over the originals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TightnessReport {
    pub residual_2: f64,
    pub residual_8: f64,
    /// `residual_2 − residual_8 = 3π|Ã|`.
    pub gap_8_vs_2: f64,
    pub lower_bound_3: f64,
    pub lower_bound_9: f64,
    /// `lower_bound_9 − lower_bound_3 = |Ã|`.
    pub gap_9_vs_3: f64,
    pub holds: bool,
}

pub fn tightness_ordering(c: &SupportFourier) -> Result<TightnessReport> {
    c.ensure_convex()?;
    let f = functionals::compute_all(c);
    let l2 = f.length * f.length;
    let residual_2 = 4.0 * PI * (f.area + f.evolute_area_abs) - l2;
    let residual_8 = 4.0 * PI * f.area + PI * f.evolute_area_abs - l2;
    let lower_bound_3 = l2 / PI - 2.0 * f.area;
    let lower_bound_9 = lower_bound_3 + f.evolute_area_abs;
    Ok(TightnessReport {
        residual_2,
        residual_8,
        gap_8_vs_2: residual_2 - residual_8,
        lower_bound_3,
        lower_bound_9,
        gap_9_vs_3: lower_bound_9 - lower_bound_3,
        holds: residual_8 <= residual_2 && lower_bound_9 >= lower_bound_3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg2() -> SupportFourier {
        SupportFourier::single(1.0, 2, 0.1, 0.0)
    }

    #[test]
    fn constant_weight_absorbs_rounding() {
        let p = IneqParams::new(0.0, -1.0 / (18.0 * PI), 2.0 / 9.0, 2.0 / 9.0);
        assert_eq!(p.constant_weight(), 0.0);
        let q = IneqParams::new(0.0, -1.0 / (18.0 * PI), 2.0 / 9.0 + 1e-12, 2.0 / 9.0);
        assert!(q.constant_weight() > 0.0);
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn remark_parameters_in_cone() {
        assert!(cone_check(&IneqParams::new(0.0, -1.0, 4.0 * PI, 4.0 * PI)).cond4);
        assert!(cone_check(&IneqParams::new(1.0, -1.0 / PI, 2.0, 0.0)).cond4);
        for preset in Preset::ALL {
            if let Some(p) = preset.params() {
                assert!(cone_check_with_tol(&p, param_tol(&p)).cond4, "{preset:?}");
            }
        }
    }

    #[test]
    fn l2_stability_corner() {
        let p = IneqParams::new(0.0, -1.0 / (18.0 * PI), 2.0 / 9.0, 2.0 / 9.0);
        assert!(p.l2_stability_factor().abs() < 1e-15);
        let s = cone_check_with_tol(&p, param_tol(&p));
        assert!(s.cond25 && s.cond27 && s.cond4 && s.cond20);
        assert!(p.growth() > 0.0);
    }

    #[test]
    fn coefficients() {
        let p = IneqParams::new(0.0, -1.0, 4.0 * PI, 4.0 * PI);
        assert!(close(coefficient(&p, 2).unwrap(), 36.0 * PI, 1e-15));
        let q = IneqParams::new(1.0, -1.0 / PI, 2.0, 0.0);
        assert!(close(coefficient(&q, 3).unwrap(), 112.0, 1e-15));
        assert_eq!(q.inner_factor(2), q.second_harmonic_factor());
        assert!(coefficient(&q, 1).is_err());
        assert!(coefficient(&q, 0).is_err());
    }

    #[test]
    fn deficit_examples() {
        let p2 = Preset::Eq2.params().unwrap();
        let r = deficit(&deg2(), &p2).unwrap();
        assert!(close(r.value, 0.18 * PI * PI, 1e-13));
        assert_eq!(r.harmonic_terms.len(), 1);
        assert!(close(r.a0_term + r.harmonic_terms[0].1, r.value, 1e-15));

        let circle_params = IneqParams::new(1.5, -(3.0 + 2.0) / (4.0 * PI), 2.0, 0.3);
        let r = deficit(&SupportFourier::circle(2.0), &circle_params).unwrap();
        assert!(r.value.abs() < 1e-13);

        assert!(matches!(
            deficit(&SupportFourier::single(1.0, 3, 0.2, 0.0), &p2),
            Err(Error::NotConvex { .. })
        ));
    }

    #[test]
    fn route_disagreement_is_flagged() {
        let c = deg2();
        let mut f = functionals::compute_all(&c);
        f.evolute_area_abs = -f.evolute_area_abs;
        let err = deficit_from_parts(&c, &f, &Preset::Eq2.params().unwrap());
        assert!(matches!(err, Err(Error::Inconsistent { .. })));
    }

    #[test]
    fn equality_characterization() {
        let p = IneqParams::new(1.0, -3.0 / PI, 10.0, 1.0);
        let c = SupportFourier::new(1.0, vec![(0.0, 0.0), (0.1, 0.05)]).unwrap();
        let d = equality_diagnosis(&c, &p).unwrap();
        assert_eq!(d.diagnosis, Diagnosis::DegreeAtMostTwo, "{d:?}");
        assert!(d.deficit.abs() < 1e-12);

        let d = equality_diagnosis(&SupportFourier::circle(1.3), &p).unwrap();
        assert_eq!(d.diagnosis, Diagnosis::DegreeAtMostTwo);

        let c3 = SupportFourier::single(1.0, 3, 0.05, 0.0);
        assert!(close(coefficient(&p, 3).unwrap(), 120.0, 1e-14));
        let d = equality_diagnosis(&c3, &p).unwrap();
        assert_eq!(d.diagnosis, Diagnosis::StrictInequality);
        assert!(d.deficit > 0.0);

        let off_face = Preset::Eq2.params().unwrap();
        assert!(matches!(equality_diagnosis(&c3, &off_face), Err(Error::Cone { .. })));
    }

    #[test]
    fn named_corollaries() {
        for r in [0.5, 1.0, 7.0] {
            let c = SupportFourier::circle(r);
            for preset in Preset::ALL {
                let v = preset.residual(&c).unwrap();
                assert!(v.abs() <= 1e-12 * r * r * 100.0, "{preset:?} r={r} {v}");
            }
        }
        let c = deg2();
        assert!(bonnesen_8(&c).unwrap().abs() < 1e-13);
        let c3 = SupportFourier::single(1.0, 3, 0.05, 0.0);
        for preset in Preset::ALL {
            assert!(preset.residual(&c3).unwrap() > 0.0, "{preset:?}");
        }
        let p: Preset = "EQ8".parse().unwrap();
        assert_eq!(p, Preset::Eq8);
        assert!("eq4".parse::<Preset>().is_err());
    }

    #[test]
    fn tightness() {
        let t = tightness_ordering(&SupportFourier::circle(1.0)).unwrap();
        assert!(t.holds && t.gap_8_vs_2 == 0.0 && t.gap_9_vs_3 == 0.0);
        let t = tightness_ordering(&deg2()).unwrap();
        assert!(t.holds);
        assert!(close(t.gap_8_vs_2, 3.0 * PI * 0.06 * PI, 1e-13));
        assert!(close(t.gap_9_vs_3, 0.06 * PI, 1e-13));
    }

    #[test]
    fn cone_implications() {
        let samples = [
            IneqParams::new(1.0, -3.0 / PI, 10.0, 1.0),
            IneqParams::new(0.0, -1.0 / (18.0 * PI), 2.0 / 9.0, 2.0 / 9.0),
            IneqParams::new(-0.5, 0.2, -1.0, 3.0),
            IneqParams::new(0.0, -1.0, 4.0 * PI, PI),
        ];
        for p in samples {
            let s = cone_check_with_tol(&p, param_tol(&p));
            assert!(!s.cond7 || s.cond4);
            assert!(!s.cond20 || s.cond4);
            assert!(!s.cond27 || s.cond25);
        }
    }
}
