//! Distance to the Steiner disc versus the deficit, for one curve and a
//! few parameter choices.
//!
//!     cargo run --example stability_bounds

use isoperix::inequalities::Preset;
use isoperix::stability::{self, stability_constant, stability_report, SERIES_TOL};
use isoperix::{IneqParams, SupportFourier};

fn main() -> isoperix::Result<()> {
    let mut c = SupportFourier::single(1.0, 2, 0.08, 0.03);
    c.set_harmonic(5, -0.004, 0.002);
    let c = c.translated(isoperix::PlanePoint::new(0.5, -0.25));

    let choices = [
        ("eq2", Preset::Eq2.params().unwrap()),
        ("l2 instance", stability::panxu_l2_params()),
        ("cond20 only", IneqParams::new(0.0, -1.0, 4.0 * std::f64::consts::PI, 1.0)),
    ];
    for (name, p) in choices {
        let r = stability_report(&c, &p, 1e-9)?;
        println!("{name} {p}");
        println!(
            "  steiner point ({:.4}, {:.4}), h1² = {:.3e}, h2² = {:.3e}, deficit = {:.3e}",
            r.steiner_point.x, r.steiner_point.y, r.h1_sq, r.h2_sq, r.deficit_value
        );
        if let Ok(k) = stability_constant(&p, SERIES_TOL) {
            println!("  C = {:.9} (series {:.12}, tail ≤ {:.1e}, {} terms)", k.value, k.series, k.error_bound, k.terms);
        }
        println!(
            "  sup bound {:?}, L2 bound {:?}, combined {:?}",
            r.bound_21_ok, r.bound_26_ok, r.bound_30_ok
        );
    }

    let px = stability::check_panxu(&c, 1e-9)?;
    println!(
        "fixed constants: h1² {:.3e} ≤ {:.3e}, h2² {:.3e} ≤ {:.3e}",
        px.h1.lhs, px.h1.rhs, px.h2.lhs, px.h2.rhs
    );
    Ok(())
}
