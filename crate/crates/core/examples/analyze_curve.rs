//! Closed-form functionals of a support function, checked against
//! trapezoidal quadrature.
//!
//!     cargo run --example analyze_curve

use isoperix::{compute_all, functionals, quadrature, SupportFourier};

fn main() -> isoperix::Result<()> {
    // p(θ) = 1 + 0.1 cos 2θ + 0.02 sin 3θ
    let mut c = SupportFourier::single(1.0, 2, 0.1, 0.0);
    c.set_harmonic(3, 0.0, 0.02);

    let f = compute_all(&c);
    let q = quadrature::oracle_functionals(&c, 256)?;
    println!("{:<10} {:>20} {:>20}", "", "fourier", "quadrature");
    println!("{:<10} {:>20.15} {:>20.15}", "L", f.length, q.length);
    println!("{:<10} {:>20.15} {:>20.15}", "A", f.area, q.area);
    println!("{:<10} {:>20.15} {:>20.15}", "Ã", f.evolute_area_oriented, q.evolute_area_oriented);
    println!("{:<10} {:>20.15} {:>20.15}", "∫ρ²", f.int_rho_sq, q.int_rho_sq);
    let m = functionals::max_rho_sq(&c);
    println!(
        "max ρ² = {:.6} at θ = {:.6}; L² − 4πA = {:.3e}",
        m.value,
        m.theta,
        f.isoperimetric_deficit()
    );
    Ok(())
}
