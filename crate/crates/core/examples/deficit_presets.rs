//! Residuals of the named inequalities on a family of degree-two curves,
//! with the per-harmonic breakdown of one deficit.
//!
//!     cargo run --example deficit_presets

use isoperix::inequalities::{self, tightness_ordering, Preset};
use isoperix::SupportFourier;

fn main() -> isoperix::Result<()> {
    print!("{:>6}", "a2");
    for preset in Preset::ALL {
        print!(" {:>12}", preset.name());
    }
    println!();
    for a2 in [0.0, 0.05, 0.1, 0.2, 0.3] {
        let c = SupportFourier::single(1.0, 2, a2, 0.0);
        print!("{a2:>6}");
        for preset in Preset::ALL {
            print!(" {:>12.3e}", preset.residual(&c)?);
        }
        println!();
    }

    let mut c = SupportFourier::single(1.0, 2, 0.1, 0.0);
    c.set_harmonic(4, 0.01, -0.01);
    let t = tightness_ordering(&c)?;
    println!("\nresidual eq2 − eq8 = {:.6} (3π|Ã|)", t.gap_8_vs_2);

    let d = inequalities::deficit(&c, &Preset::Eq2.params().unwrap())?;
    println!("eq2 deficit {:.6}: a0 term {:.1e}", d.value, d.a0_term);
    for (n, term) in &d.harmonic_terms {
        println!("  n = {n}: {term:.6}");
    }
    Ok(())
}
