//! Write an SVG of a curve and its evolute.
//!
//!     cargo run --example render_svg > curve.svg

use isoperix::{io, SupportFourier};

fn main() -> isoperix::Result<()> {
    let mut c = SupportFourier::single(1.0, 3, 0.06, 0.0);
    c.set_harmonic(2, 0.05, 0.02);
    c.ensure_convex()?;
    print!("{}", io::render_svg(&c));
    Ok(())
}
