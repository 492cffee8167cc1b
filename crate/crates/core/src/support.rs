//! Truncated Fourier series of the Minkowski support function.

use std::f64::consts::TAU;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scan::{self, Extremum};

/// A point (or vector) in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub const ORIGIN: PlanePoint = PlanePoint { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        PlanePoint { x, y }
    }

    pub fn dot(self, other: PlanePoint) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

impl Add for PlanePoint {
    type Output = PlanePoint;
    fn add(self, o: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for PlanePoint {
    type Output = PlanePoint;
    fn sub(self, o: PlanePoint) -> PlanePoint {
        PlanePoint::new(self.x - o.x, self.y - o.y)
    }
}

/// Support function `p(θ) = a0 + Σ_{n=1}^{N} (a_n cos nθ + b_n sin nθ)`.
///
/// `harmonics[n - 1]` holds `(a_n, b_n)`. The value is not required to
/// describe a convex curve; use [`SupportFourier::is_strictly_convex`] or
/// [`SupportFourier::ensure_convex`] before relying on geometry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupportFourier {
    pub a0: f64,
    #[serde(default)]
    pub harmonics: Vec<(f64, f64)>,
}

impl SupportFourier {
    /// Builds a support function, rejecting non-finite coefficients.
    pub fn new(a0: f64, harmonics: Vec<(f64, f64)>) -> Result<Self> {
        let c = SupportFourier { a0, harmonics };
        c.check_finite()?;
        Ok(c)
    }

    /// Circle of radius `r` centred at the origin.
    pub fn circle(r: f64) -> Self {
        SupportFourier {
            a0: r,
            harmonics: Vec::new(),
        }
    }

    /// `a0` plus a single harmonic `(a_n, b_n)`.
    pub fn single(a0: f64, n: usize, a: f64, b: f64) -> Self {
        let mut c = SupportFourier::circle(a0);
        c.set_harmonic(n, a, b);
        c
    }

    pub fn check_finite(&self) -> Result<()> {
        let ok = self.a0.is_finite()
            && self
                .harmonics
                .iter()
                .all(|&(a, b)| a.is_finite() && b.is_finite());
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidArgument(
                "support coefficients must be finite".into(),
            ))
        }
    }

    /// Highest index with a non-zero coefficient pair (0 for a circle).
    pub fn degree(&self) -> usize {
        self.harmonics
            .iter()
            .rposition(|&(a, b)| a != 0.0 || b != 0.0)
            .map_or(0, |i| i + 1)
    }

    /// `(a_n, b_n)`, zero beyond the stored length. `n` must be at least 1.
    pub fn harmonic(&self, n: usize) -> (f64, f64) {
        assert!(n >= 1, "harmonic index starts at 1");
        self.harmonics.get(n - 1).copied().unwrap_or((0.0, 0.0))
    }

    pub fn set_harmonic(&mut self, n: usize, a: f64, b: f64) {
        assert!(n >= 1, "harmonic index starts at 1");
        if self.harmonics.len() < n {
            self.harmonics.resize(n, (0.0, 0.0));
        }
        self.harmonics[n - 1] = (a, b);
    }

    /// Iterator over `(n, a_n, b_n)` for `n >= 1`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, f64, f64)> + '_ {
        self.harmonics
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| (i + 1, a, b))
    }

    /// Σ over `k` of `w(n) (a_n cos nθ + b_n sin nθ)` and the matching sine
    /// combination `w(n) (−a_n sin nθ + b_n cos nθ)`.
    fn weighted_sums(&self, theta: f64, w: impl Fn(f64) -> f64) -> (f64, f64) {
        let theta = theta.rem_euclid(TAU);
        let mut even = 0.0;
        let mut odd = 0.0;
        for (n, a, b) in self.terms() {
            let nf = n as f64;
            let (s, c) = (nf * theta).sin_cos();
            let wn = w(nf);
            even += wn * (a * c + b * s);
            odd += wn * (b * c - a * s);
        }
        (even, odd)
    }

    /// `p(θ)`.
    pub fn p(&self, theta: f64) -> f64 {
        self.a0 + self.weighted_sums(theta, |_| 1.0).0
    }

    /// `p'(θ)`.
    pub fn dp(&self, theta: f64) -> f64 {
        self.weighted_sums(theta, |n| n).1
    }

    /// `p''(θ)`.
    pub fn ddp(&self, theta: f64) -> f64 {
        -self.weighted_sums(theta, |n| n * n).0
    }

    /// Radius of curvature `ρ(θ) = p(θ) + p''(θ)`.
    pub fn rho(&self, theta: f64) -> f64 {
        self.a0 + self.weighted_sums(theta, |n| 1.0 - n * n).0
    }

    /// `ρ'(θ)`; its sign changes mark the cusps of the evolute.
    pub fn drho(&self, theta: f64) -> f64 {
        self.weighted_sums(theta, |n| (1.0 - n * n) * n).1
    }

    /// Point of the curve whose outward normal has angle `θ`.
    pub fn curve_point(&self, theta: f64) -> PlanePoint {
        let p = self.p(theta);
        let dp = self.dp(theta);
        let (s, c) = theta.sin_cos();
        PlanePoint::new(p * c - dp * s, p * s + dp * c)
    }

    /// Centre of curvature at normal angle `θ`.
    pub fn evolute_point(&self, theta: f64) -> PlanePoint {
        let dp = self.dp(theta);
        let ddp = self.ddp(theta);
        let (s, c) = theta.sin_cos();
        PlanePoint::new(-dp * s - ddp * c, dp * c - ddp * s)
    }

    /// Global minimum of `ρ` and an angle attaining it.
    pub fn min_rho(&self) -> Extremum {
        scan::periodic_min(|t| self.rho(t), scan::grid_size(self.degree()))
    }

    /// Global maximum of `ρ` and an angle attaining it.
    pub fn max_rho(&self) -> Extremum {
        scan::periodic_max(|t| self.rho(t), scan::grid_size(self.degree()))
    }

    /// Cheap sufficient test: `a0 > Σ_{n≥2} (n²−1) √(a_n² + b_n²)`.
    pub fn convex_by_coefficients(&self) -> bool {
        let osc: f64 = self
            .terms()
            .skip(1)
            .map(|(n, a, b)| {
                let nf = n as f64;
                (nf * nf - 1.0) * a.hypot(b)
            })
            .sum();
        self.a0 > osc
    }

    /// True iff `min ρ > 0`.
    pub fn is_strictly_convex(&self) -> bool {
        self.convex_by_coefficients() || self.min_rho().value > 0.0
    }

    /// `Ok` for strictly convex curves, otherwise reports where `ρ` fails.
    pub fn ensure_convex(&self) -> Result<()> {
        self.check_finite()?;
        if self.convex_by_coefficients() {
            return Ok(());
        }
        let m = self.min_rho();
        if m.value > 0.0 {
            Ok(())
        } else {
            Err(Error::NotConvex {
                min_rho: m.value,
                theta: m.theta,
            })
        }
    }

    /// Support function of the curve rotated so that `p_new(θ) = p(θ + φ)`.
    pub fn rotated(&self, phi: f64) -> Self {
        let harmonics = self
            .terms()
            .map(|(n, a, b)| {
                let (s, c) = (n as f64 * phi).sin_cos();
                (a * c + b * s, -a * s + b * c)
            })
            .collect();
        SupportFourier {
            a0: self.a0,
            harmonics,
        }
    }

    /// Support function of the curve translated by `v`.
    pub fn translated(&self, v: PlanePoint) -> Self {
        let mut c = self.clone();
        let (a1, b1) = c.harmonic(1);
        c.set_harmonic(1, a1 + v.x, b1 + v.y);
        c
    }

    /// Support function of the curve dilated about the origin by `s`.
    pub fn scaled(&self, s: f64) -> Self {
        SupportFourier {
            a0: self.a0 * s,
            harmonics: self.harmonics.iter().map(|&(a, b)| (a * s, b * s)).collect(),
        }
    }
}
