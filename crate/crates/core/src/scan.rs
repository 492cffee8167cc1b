//! Global extrema of smooth 2π-periodic functions.
//!
//! A uniform grid locates every local extremum, each one is then polished
//! by golden-section search inside its grid bracket. For a trigonometric
//! polynomial of degree `N` a grid of `16(N+1)` points puts several
//! samples inside every oscillation, so no basin is skipped.

use std::f64::consts::TAU;

/// Tolerance on the bracket width at which refinement stops.
pub const THETA_TOL: f64 = 1e-12;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Grid size used for a trigonometric polynomial of degree `degree`.
pub fn grid_size(degree: usize) -> usize {
    (16 * (degree + 1)).max(64)
}

/// An extremal value together with an attaining angle in `[0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremum {
    pub value: f64,
    pub theta: f64,
}

/// Global maximum of `f` over one period.
pub fn periodic_max<F: Fn(f64) -> f64>(f: F, grid: usize) -> Extremum {
    assert!(grid >= 3, "grid needs at least three nodes");
    let h = TAU / grid as f64;
    let samples: Vec<f64> = (0..grid).map(|k| f(h * k as f64)).collect();

    let (k0, v0) = samples
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (i, v)| if v > acc.1 { (i, v) } else { acc });
    let mut best = Extremum {
        value: v0,
        theta: h * k0 as f64,
    };
    for k in 0..grid {
        let prev = samples[(k + grid - 1) % grid];
        let next = samples[(k + 1) % grid];
        let cur = samples[k];
        if cur < prev || cur < next {
            continue;
        }
        let center = h * k as f64;
        let cand = golden_max(&f, center - h, center + h, cur, center);
        if cand.value > best.value {
            best = cand;
        }
    }
    best.theta = best.theta.rem_euclid(TAU);
    best
}

/// Global minimum of `f` over one period.
pub fn periodic_min<F: Fn(f64) -> f64>(f: F, grid: usize) -> Extremum {
    let e = periodic_max(|t| -f(t), grid);
    Extremum {
        value: -e.value,
        theta: e.theta,
    }
}

fn golden_max<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, seed_val: f64, seed_theta: f64) -> Extremum {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > THETA_TOL {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        }
    }
    let mid = 0.5 * (lo + hi);
    let fm = f(mid);
    // Golden-section only compares values; keep the grid node if the
    // refinement wandered into a flat region and came out lower.
    [(fm, mid), (f1, x1), (f2, x2), (seed_val, seed_theta)]
        .into_iter()
        .fold(
            Extremum {
                value: f64::NEG_INFINITY,
                theta: seed_theta,
            },
            |acc, (v, t)| if v > acc.value { Extremum { value: v, theta: t } } else { acc },
        )
}
