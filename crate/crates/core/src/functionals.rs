//! Closed-form geometric functionals from Fourier coefficients.
//!
//! With `p = a0 + Σ (a_n cos nθ + b_n sin nθ)`:
//!
//! | quantity | formula |
//! |---|---|
//! | `L` | `2π a0` |
//! | `A` | `π a0² − (π/2) Σ (n²−1)(a_n²+b_n²)` |
//! | `Ã` (oriented) | `−(π/2) Σ n²(n²−1)(a_n²+b_n²)` |
//! | `∫ρ²` | `2π (a0² + ½ Σ (n²−1)² (a_n²+b_n²))` |
//!
//! The `n = 1` terms drop out of every formula; they only move the curve.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::support::{PlanePoint, SupportFourier};

/// All scalar functionals of one curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveFunctionals {
    #[serde(rename = "L")]
    pub length: f64,
    #[serde(rename = "A")]
    pub area: f64,
    #[serde(rename = "A_tilde_oriented")]
    pub evolute_area_oriented: f64,
    #[serde(rename = "A_tilde_abs")]
    pub evolute_area_abs: f64,
    pub int_rho_sq: f64,
    pub max_rho_sq: f64,
    pub convex: bool,
}

/// `max_θ ρ(θ)²`, flagged when the curve is not strictly convex (the
/// maximum may then come from a negative `ρ`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaxRhoSq {
    pub value: f64,
    pub theta: f64,
    pub convex: bool,
}

/// `Σ_{n≥2} w(n) (a_n² + b_n²)`.
pub(crate) fn harmonic_energy(c: &SupportFourier, w: impl Fn(f64) -> f64) -> f64 {
    c.terms()
        .skip(1)
        .map(|(n, a, b)| w(n as f64) * (a * a + b * b))
        .sum()
}

pub fn length(c: &SupportFourier) -> f64 {
    TAU * c.a0
}

pub fn area(c: &SupportFourier) -> f64 {
    PI * c.a0 * c.a0 - 0.5 * PI * harmonic_energy(c, |n| n * n - 1.0)
}

/// `|Ã| = (π/2) Σ n²(n²−1)(a_n²+b_n²)`.
pub fn evolute_area_abs(c: &SupportFourier) -> f64 {
    0.5 * PI * harmonic_energy(c, |n| n * n * (n * n - 1.0))
}

/// `½ ∫ (p'² − p''²) dθ`, never positive.
pub fn evolute_area_oriented(c: &SupportFourier) -> f64 {
    -evolute_area_abs(c)
}

pub fn integral_rho_sq(c: &SupportFourier) -> f64 {
    TAU * (c.a0 * c.a0 + 0.5 * harmonic_energy(c, |n| (n * n - 1.0).powi(2)))
}

pub fn max_rho_sq(c: &SupportFourier) -> MaxRhoSq {
    let hi = c.max_rho();
    let lo = c.min_rho();
    let (value, theta) = if hi.value.abs() >= lo.value.abs() {
        (hi.value * hi.value, hi.theta)
    } else {
        (lo.value * lo.value, lo.theta)
    };
    MaxRhoSq {
        value,
        theta,
        convex: lo.value > 0.0,
    }
}

pub fn compute_all(c: &SupportFourier) -> CurveFunctionals {
    let max = max_rho_sq(c);
    let abs = evolute_area_abs(c);
    CurveFunctionals {
        length: length(c),
        area: area(c),
        evolute_area_oriented: -abs,
        evolute_area_abs: abs,
        int_rho_sq: integral_rho_sq(c),
        max_rho_sq: max.value,
        convex: max.convex,
    }
}

/// Steiner point `(1/π) ∫ (cos θ, sin θ) p(θ) dθ = (a1, b1)`.
pub fn steiner_point(c: &SupportFourier) -> PlanePoint {
    let (a1, b1) = c.harmonics.first().copied().unwrap_or((0.0, 0.0));
    PlanePoint::new(a1, b1)
}

/// Disc of radius `L/2π` centred at the Steiner point.
pub fn steiner_disc(c: &SupportFourier) -> SupportFourier {
    let s = steiner_point(c);
    let mut disc = SupportFourier::circle(length(c) / TAU);
    if s != PlanePoint::ORIGIN {
        disc.set_harmonic(1, s.x, s.y);
    }
    disc
}

impl CurveFunctionals {
    /// `L² − 4πA`.
    pub fn isoperimetric_deficit(&self) -> f64 {
        self.length * self.length - 4.0 * PI * self.area
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature;

    fn deg2() -> SupportFourier {
        SupportFourier::single(1.0, 2, 0.1, 0.0)
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1.0)
    }

    #[test]
    fn circle_values() {
        let r = 1.5;
        let f = compute_all(&SupportFourier::circle(r));
        assert_eq!(f.length, TAU * r);
        assert_eq!(f.area, PI * r * r);
        assert_eq!(f.evolute_area_abs, 0.0);
        assert_eq!(f.int_rho_sq, TAU * r * r);
        assert!((f.max_rho_sq - r * r).abs() < 1e-15);
        assert!(f.convex);
        // ∫ρ² = 2A for the circle
        assert!(rel(f.int_rho_sq, 2.0 * f.area) < 1e-15);
    }

    #[test]
    fn degree_two_values() {
        let f = compute_all(&deg2());
        assert!(rel(f.length, TAU) < 1e-15);
        assert!(rel(f.area, 0.985 * PI) < 1e-15);
        assert!(rel(f.evolute_area_abs, 0.06 * PI) < 1e-14);
        assert!(rel(f.evolute_area_oriented, -0.06 * PI) < 1e-14);
        assert!(rel(f.int_rho_sq, 2.09 * PI) < 1e-15);
        assert!(rel(f.max_rho_sq, 1.69) < 1e-14);
        assert!(f.max_rho_sq >= f.int_rho_sq / TAU);

        let sine = SupportFourier::single(1.0, 2, 0.0, 0.1);
        assert!(rel(evolute_area_abs(&sine), 0.06 * PI) < 1e-14);
    }

    #[test]
    fn translated_circle_area() {
        let c = SupportFourier::single(1.0, 1, 7.0, -3.0);
        assert_eq!(area(&c), PI);
        assert_eq!(evolute_area_abs(&c), 0.0);
    }

    #[test]
    fn matches_quadrature() {
        let c = SupportFourier::new(1.0, vec![(0.2, 0.1), (0.04, -0.03), (0.01, 0.005)]).unwrap();
        let f = compute_all(&c);
        let q = quadrature::oracle_functionals(&c, 64).unwrap();
        assert!(rel(f.length, q.length) < 1e-12);
        assert!(rel(f.area, q.area) < 1e-12);
        assert!(rel(f.evolute_area_oriented, q.evolute_area_oriented) < 1e-12);
        assert!(rel(f.int_rho_sq, q.int_rho_sq) < 1e-12);
    }

    #[test]
    fn non_convex_is_flagged() {
        let c = SupportFourier::single(1.0, 3, 0.2, 0.0);
        let f = compute_all(&c);
        assert!(!f.convex);
        // ρ ranges over [−0.6, 2.6]
        assert!(rel(f.max_rho_sq, 2.6 * 2.6) < 1e-13);
        let m = max_rho_sq(&SupportFourier::single(1.0, 3, -0.5, 0.0));
        // ρ = 1 + 4 cos 3θ ∈ [−3, 5]
        assert!(rel(m.value, 25.0) < 1e-13 && !m.convex);
    }

    #[test]
    fn steiner() {
        assert_eq!(steiner_point(&SupportFourier::circle(3.0)), PlanePoint::ORIGIN);
        let c = SupportFourier::single(1.0, 1, 0.5, 0.2);
        assert_eq!(steiner_point(&c), PlanePoint::new(0.5, 0.2));
        let v = PlanePoint::new(-1.0, 2.5);
        let moved = steiner_point(&c.translated(v));
        assert_eq!(moved, steiner_point(&c) + v);

        // defining integral by quadrature
        let m = 64;
        let (mut sx, mut sy) = (0.0, 0.0);
        let with_more = SupportFourier::new(1.0, vec![(0.5, 0.2), (0.1, 0.0), (0.0, 0.02)]).unwrap();
        for k in 0..m {
            let t = TAU * k as f64 / m as f64;
            sx += t.cos() * with_more.p(t);
            sy += t.sin() * with_more.p(t);
        }
        let h = TAU / m as f64 / PI;
        assert!((sx * h - 0.5).abs() < 1e-14 && (sy * h - 0.2).abs() < 1e-14);

        let disc = steiner_disc(&deg2());
        assert_eq!(disc, SupportFourier::circle(1.0));
        let circ = SupportFourier::single(2.0, 1, 1.0, -1.0);
        assert_eq!(steiner_disc(&circ), circ);
        for c in [&deg2(), &with_more] {
            let d = compute_all(&steiner_disc(c));
            let phi = 4.0 * PI * (d.area + d.evolute_area_abs) - d.length * d.length;
            assert!(phi.abs() < 1e-13);
        }
    }
}
