//! Test curves, parameter sampling and point-cloud ingestion.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::inequalities::{cone_check, IneqParams};
use crate::quadrature::nodes;
use crate::support::{PlanePoint, SupportFourier};

pub fn make_circle(r: f64, center: PlanePoint) -> Result<SupportFourier> {
    if !(r > 0.0) || !r.is_finite() || !center.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "circle needs a finite positive radius, got {r}"
        )));
    }
    let c = SupportFourier::circle(r);
    Ok(if center == PlanePoint::ORIGIN {
        c
    } else {
        c.translated(center)
    })
}

/// `a0 + a2 cos 2θ + b2 sin 2θ`, the shape of every equality case.
///
/// Requires `a0 > 3√(a2² + b2²)`, which is exactly `min ρ > 0`.
pub fn make_degree_two(a0: f64, a2: f64, b2: f64) -> Result<SupportFourier> {
    let amp = a2.hypot(b2);
    if !(a0 > 3.0 * amp) {
        return Err(Error::NotConvex {
            min_rho: a0 - 3.0 * amp,
            theta: 0.5 * b2.atan2(a2),
        });
    }
    SupportFourier::new(a0, vec![(0.0, 0.0), (a2, b2)])
}

/// Parameters of the random curve model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RandomCurveSpec {
    pub max_harmonic: usize,
    /// Decay exponent `q > 2` of the amplitude envelope `n^{−q}`.
    pub decay: f64,
    /// Fraction `κ ∈ (0, 1)` of `a0` spent on the oscillating part of `ρ`.
    pub amplitude: f64,
    pub seed: u64,
}

impl RandomCurveSpec {
    pub fn new(max_harmonic: usize, decay: f64, amplitude: f64, seed: u64) -> Result<Self> {
        let spec = RandomCurveSpec {
            max_harmonic,
            decay,
            amplitude,
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_harmonic < 2 {
            return Err(Error::InvalidArgument("max_harmonic must be at least 2".into()));
        }
        if !(self.decay > 2.0) || !self.decay.is_finite() {
            return Err(Error::InvalidArgument(format!("decay must exceed 2, got {}", self.decay)));
        }
        if !(self.amplitude > 0.0 && self.amplitude < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "amplitude must lie in (0, 1), got {}",
                self.amplitude
            )));
        }
        Ok(())
    }
}

/// Random strictly convex curve with `a0 = 1`.
///
/// `(a_n, b_n)` are uniform in `[−1, 1]²` scaled by `s_n/√2` with
/// `s_n = κ / (Z n^q (n²−1))` and `Z = Σ_{n=2}^{N} n^{−q}`, so that
/// `Σ (n²−1) √(a_n² + b_n²) ≤ κ` and `min ρ ≥ 1 − κ`.
pub fn random_convex(spec: &RandomCurveSpec) -> Result<SupportFourier> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n_max = spec.max_harmonic;
    let q = spec.decay;
    let z: f64 = (2..=n_max).map(|n| (n as f64).powf(-q)).sum();
    let mut harmonics = Vec::with_capacity(n_max);
    harmonics.push((rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)));
    for n in 2..=n_max {
        let nf = n as f64;
        let s = spec.amplitude / (z * nf.powf(q) * (nf * nf - 1.0)) / std::f64::consts::SQRT_2;
        harmonics.push((s * rng.gen_range(-1.0..=1.0), s * rng.gen_range(-1.0..=1.0)));
    }
    SupportFourier::new(1.0, harmonics)
}

/// A random curve spec drawn from `rng`: degree in `2..=max_degree`,
/// decay in `[2.5, 4]`, amplitude in `[0.1, 0.95]`.
pub fn random_spec(rng: &mut impl Rng, max_degree: usize) -> RandomCurveSpec {
    RandomCurveSpec {
        max_harmonic: rng.gen_range(2..=max_degree.max(2)),
        decay: rng.gen_range(2.5..=4.0),
        amplitude: rng.gen_range(0.1..=0.95),
        seed: rng.gen(),
    }
}

/// Regions of parameter space sampled by [`sample_params`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamRegion {
    /// Nonnegativity cone, boundary faces included.
    Cone4,
    /// Cone with `6α − λ + 4δ > 0` (sup-distance stability).
    Cond20,
    /// `18α − 3λ + 12δ ≥ 2` (L²-distance stability).
    Cond25,
    /// Equality face: `2α + δ > 0`, `2α + 4πβ + λ = 0`, `6α − λ + 4δ = 0`.
    Cond7,
}

/// Random parameters in `region`.
///
/// The sampler picks the slacks `g = 2α + δ`, `k = 6α − λ + 4δ` and
/// `w = 2α + 4πβ + λ` directly, landing on a boundary face about a fifth
/// of the time, and then solves for `(δ, λ, β)`. Rounding is repaired by
/// nudging single coordinates so that the exact [`cone_check`] holds.
pub fn sample_params(region: ParamRegion, rng: &mut impl Rng) -> IneqParams {
    let mut face = |p: f64, lo: f64, hi: f64| if rng.gen_bool(p) { lo } else { rng.gen_range(lo..=hi) };
    let alpha: f64 = face(0.1, 0.0, 2.0) - face(0.5, 0.0, 1.0);
    let (g, k, w) = match region {
        ParamRegion::Cone4 => (face(0.2, 0.0, 3.0), face(0.2, 0.0, 5.0), face(0.2, 0.0, 3.0)),
        ParamRegion::Cond20 => (face(0.2, 0.0, 3.0), face(0.0, 0.01, 5.0), face(0.2, 0.0, 3.0)),
        ParamRegion::Cond25 => (face(0.2, 0.0, 3.0), 2.0 / 3.0 + face(0.2, 0.0, 5.0), face(0.2, 0.0, 3.0)),
        ParamRegion::Cond7 => (face(0.0, 0.1, 3.0), 0.0, 0.0),
    };
    let delta = g - 2.0 * alpha;
    let lambda = 6.0 * alpha + 4.0 * delta - k;
    let beta = (w - 2.0 * alpha - lambda) / (4.0 * PI);
    let mut p = IneqParams::new(alpha, beta, lambda, delta);
    if region != ParamRegion::Cond7 {
        repair(&mut p, region);
    }
    p
}

fn repair(p: &mut IneqParams, region: ParamRegion) {
    let holds = |p: &IneqParams| {
        let s = cone_check(p);
        match region {
            ParamRegion::Cone4 => s.cond4,
            ParamRegion::Cond20 => s.cond20,
            ParamRegion::Cond25 => s.cond25,
            ParamRegion::Cond7 => s.cond7,
        }
    };
    let mag = [p.alpha, 4.0 * PI * p.beta, p.lambda, p.delta]
        .iter()
        .fold(1.0f64, |m, x| m.max(x.abs()));
    let mut step = f64::EPSILON * mag;
    for _ in 0..64 {
        if holds(p) {
            return;
        }
        if p.growth() < 0.0 {
            p.delta += step;
        } else if p.second_harmonic_factor() <= 0.0 || p.l2_stability_factor() < 0.0 {
            p.lambda -= step;
        } else {
            p.beta += step / (4.0 * PI);
        }
        step *= 2.0;
    }
    debug_assert!(holds(p), "could not repair {p}");
}

/// A finite set of points, not all on one line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PointCloud {
    points: Vec<PlanePoint>,
}

impl PointCloud {
    pub fn new(points: Vec<PlanePoint>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidArgument(format!(
                "point cloud needs at least 3 points, got {}",
                points.len()
            )));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidArgument("point coordinates must be finite".into()));
        }
        let o = points[0];
        let far = points
            .iter()
            .copied()
            .max_by(|a, b| (*a - o).norm().total_cmp(&(*b - o).norm()))
            .unwrap();
        let d = far - o;
        let span = d.norm();
        let collinear = span == 0.0
            || points.iter().all(|&p| {
                let v = p - o;
                (d.x * v.y - d.y * v.x).abs() <= 1e-12 * span * span
            });
        if collinear {
            return Err(Error::InvalidArgument("point cloud is collinear".into()));
        }
        Ok(PointCloud { points })
    }

    pub fn points(&self) -> &[PlanePoint] {
        &self.points
    }

    /// Points sampled from the curve `c` at `m` uniform normal angles.
    pub fn from_curve(c: &SupportFourier, m: usize) -> Result<Self> {
        PointCloud::new(nodes(m).map(|t| c.curve_point(t)).collect())
    }
}

/// Discrete support function `max_i ⟨x_i, (cos θ, sin θ)⟩`.
pub fn support_of_cloud(pc: &PointCloud, theta: f64) -> f64 {
    let u = PlanePoint::new(theta.cos(), theta.sin());
    pc.points
        .iter()
        .map(|p| p.dot(u))
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Fourier coefficients up to degree `n_max` of uniform samples
/// `values[k] = h(2πk/M)` by discrete projection.
pub fn project_samples(values: &[f64], n_max: usize) -> Result<SupportFourier> {
    let m = values.len();
    if m < 4 * (n_max + 1) {
        return Err(Error::InvalidArgument(format!(
            "{m} samples cannot resolve degree {n_max}; need at least {}",
            4 * (n_max + 1)
        )));
    }
    let mf = m as f64;
    let a0 = values.iter().sum::<f64>() / mf;
    let harmonics = (1..=n_max)
        .map(|n| {
            let (mut a, mut b) = (0.0, 0.0);
            for (t, &h) in nodes(m).zip(values) {
                let (s, c) = (n as f64 * t).sin_cos();
                a += h * c;
                b += h * s;
            }
            (2.0 * a / mf, 2.0 * b / mf)
        })
        .collect();
    SupportFourier::new(a0, harmonics)
}

/// Result of [`fit_support_fourier`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    #[serde(flatten)]
    pub curve: SupportFourier,
    /// `max_k |h(θ_k) − p(θ_k)|` over the sample angles.
    pub residual_sup: f64,
    pub convex: bool,
}

/// Truncated Fourier fit of the support function of a point cloud.
///
/// Non-convex truncations are reported through `convex`, not repaired.
pub fn fit_support_fourier(pc: &PointCloud, n_max: usize, m: usize) -> Result<FitReport> {
    let values: Vec<f64> = nodes(m).map(|t| support_of_cloud(pc, t)).collect();
    let curve = project_samples(&values, n_max)?;
    let residual_sup = nodes(m)
        .zip(&values)
        .map(|(t, &h)| (h - curve.p(t)).abs())
        .fold(0.0, f64::max);
    let convex = curve.is_strictly_convex();
    Ok(FitReport {
        curve,
        residual_sup,
        convex,
    })
}
