//! Recover a support function from the points of an ellipse.
//!
//!     cargo run --example fit_point_cloud

use std::f64::consts::TAU;

use isoperix::generators::{fit_support_fourier, PointCloud};
use isoperix::{functionals, quadrature, PlanePoint};

fn main() -> isoperix::Result<()> {
    let (a, b) = (2.0, 1.0);
    let pts = quadrature::nodes(400)
        .map(|t| PlanePoint::new(a * t.cos() + 0.3, b * t.sin()))
        .collect();
    let cloud = PointCloud::new(pts)?;

    for n_max in [2, 4, 8, 16] {
        let fit = fit_support_fourier(&cloud, n_max, 512)?;
        let area = functionals::area(&fit.curve);
        println!(
            "N = {n_max:>2}: area {area:.6} (exact {:.6}), residual {:.2e}, convex {}",
            std::f64::consts::PI * a * b,
            fit.residual_sup,
            fit.convex
        );
    }
    let fit = fit_support_fourier(&cloud, 8, 512)?;
    println!("steiner point {:?}", functionals::steiner_point(&fit.curve));
    println!("perimeter {:.6} vs 2π·(a+b)/2 ≈ {:.6}", functionals::length(&fit.curve), TAU * (a + b) / 2.0);
    Ok(())
}
