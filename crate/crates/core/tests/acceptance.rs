//! Acceptance criteria. Runs as a plain binary (no libtest harness) so the
//! per-criterion PASS/FAIL lines are always printed.

use std::f64::consts::{PI, TAU};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use isoperix::functionals::{self, compute_all};
use isoperix::fuzz::{self, FuzzConfig, Mutation};
use isoperix::generators::{self, make_degree_two, ParamRegion, PointCloud};
use isoperix::inequalities::{self, coefficient, Diagnosis, Preset};
use isoperix::quadrature::{self, PeriodicSamples};
use isoperix::stability::{self, SERIES_TOL};
use isoperix::{PlanePoint, SupportFourier};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).abs() / b.abs().max(a.abs())
    }
}

fn within_time(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn random_curve(seed: u64, index: usize) -> SupportFourier {
    fuzz::make_case(seed, index, 16).curve
}

/// 1. Circles: exact functionals and vanishing residuals.
fn circle_exactness() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for r in [0.5, 1.0, 7.0] {
        let c = SupportFourier::circle(r);
        let f = compute_all(&c);
        ensure(rel(f.length, TAU * r) <= 1e-12, || format!("L for r={r}"))?;
        ensure(rel(f.area, PI * r * r) <= 1e-12, || format!("A for r={r}"))?;
        ensure(f.evolute_area_abs == 0.0, || format!("|Ã| for r={r}"))?;
        ensure(rel(f.int_rho_sq, TAU * r * r) <= 1e-12, || format!("∫ρ² for r={r}"))?;
        for preset in Preset::ALL {
            let v = preset.residual(&c).map_err(|e| e.to_string())?;
            worst = worst.max(v.abs());
            ensure(v.abs() <= 1e-12, || format!("{} residual {v:e} for r={r}", preset.name()))?;
        }
    }
    within_time(start, Duration::from_secs(1), "circle checks")?;
    Ok(format!("max |residual| = {worst:.1e}"))
}

/// 2. p = 1 + 0.1 cos 2θ, every value against the closed form and the
///    quadrature oracle.
fn worked_curve() -> Outcome {
    let c = SupportFourier::single(1.0, 2, 0.1, 0.0);
    let f = compute_all(&c);
    let q = quadrature::oracle_functionals(&c, 64).map_err(|e| e.to_string())?;

    let deficit = inequalities::reverse_pan_zhang(&c).map_err(|e| e.to_string())?;
    let oracle_deficit = 4.0 * PI * (q.area + q.evolute_area_abs) - q.length * q.length;

    let h2 = stability::h2_sq(&c).map_err(|e| e.to_string())?;
    let disc = functionals::steiner_disc(&c);
    let oracle_h2 = quadrature::periodic_trapezoid(
        &PeriodicSamples::from_fn(64, |t| (c.p(t) - disc.p(t)).powi(2)).map_err(|e| e.to_string())?,
    );

    let h1 = stability::h1_sq(&c).map_err(|e| e.to_string())?.h1_sq;
    let grid = 1 << 16;
    let oracle_h1 = quadrature::nodes(grid)
        .map(|t| (c.p(t) - disc.p(t)).abs())
        .fold(0.0, f64::max)
        .powi(2);

    let rows = [
        ("L", f.length, q.length, TAU),
        ("A", f.area, q.area, 0.985 * PI),
        ("|Ã|", f.evolute_area_abs, q.evolute_area_abs, 0.06 * PI),
        ("∫ρ²", f.int_rho_sq, q.int_rho_sq, 2.09 * PI),
        ("Eq2 deficit", deficit, oracle_deficit, 0.18 * PI * PI),
        ("h2²", h2, oracle_h2, 0.01 * PI),
        ("h1²", h1, oracle_h1, 0.01),
    ];
    let mut worst = 0.0f64;
    for (name, value, oracle, expect) in rows {
        let d_oracle = rel(value, oracle);
        let d_expect = rel(value, expect);
        worst = worst.max(d_oracle).max(d_expect);
        ensure(d_oracle <= 1e-11, || format!("{name}: {value} vs oracle {oracle} ({d_oracle:e})"))?;
        ensure(d_expect <= 1e-11, || format!("{name}: {value} vs expected {expect} ({d_expect:e})"))?;
    }
    Ok(format!("7 values, max relative deviation {worst:.1e}"))
}

/// 3. Parseval formulas against quadrature on 1000 random curves.
fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for i in 0..1000 {
        let c = random_curve(3, i);
        if c.degree() > 16 {
            return Err(format!("curve {i} has degree {}", c.degree()));
        }
        let f = compute_all(&c);
        let q = quadrature::oracle_functionals(&c, quadrature::min_nodes(&c)).map_err(|e| e.to_string())?;
        for (name, a, b) in [
            ("L", f.length, q.length),
            ("A", f.area, q.area),
            ("Ã", f.evolute_area_oriented, q.evolute_area_oriented),
            ("∫ρ²", f.int_rho_sq, q.int_rho_sq),
        ] {
            let d = rel(b, a);
            worst = worst.max(d);
            ensure(d <= 1e-11, || format!("curve {i}: {name} parseval {a} quadrature {b} ({d:e})"))?;
        }
    }
    within_time(start, Duration::from_secs(10), "oracle equivalence")?;
    Ok(format!("1000 curves, max relative difference {worst:.1e}"))
}

/// 4. Nonnegativity on the cone and the equality characterization.
fn theorem_nonnegativity() -> Outcome {
    let start = Instant::now();
    let mut worst = f64::INFINITY;
    for i in 0..10_000 {
        let mut rng = fuzz::case_rng(4, i);
        let c = random_curve(4, i);
        let p = generators::sample_params(ParamRegion::Cone4, &mut rng);
        let d = inequalities::deficit(&c, &p).map_err(|e| format!("case {i}: {e}"))?;
        let scale = functionals::length(&c).powi(2).max(1.0);
        worst = worst.min(d.value / scale);
        ensure(d.value >= -1e-9 * scale, || format!("case {i}: deficit {} for {p}", d.value))?;
    }

    // equality instances: cond7 parameters and degree-two curves
    let mut equalities = 0;
    let mut max_eq = 0.0f64;
    for i in 0..1000 {
        let mut rng = fuzz::case_rng(44, i);
        let p = generators::sample_params(ParamRegion::Cond7, &mut rng);
        let a0 = rng.gen_range(0.5..2.0);
        let amp = rng.gen_range(0.0..0.3) * a0;
        let phase: f64 = rng.gen_range(0.0..TAU);
        let c = make_degree_two(a0, amp * phase.cos(), amp * phase.sin())
            .map_err(|e| e.to_string())?
            .translated(PlanePoint::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
        let r = inequalities::equality_diagnosis(&c, &p).map_err(|e| format!("eq {i}: {e}"))?;
        max_eq = max_eq.max(r.deficit.abs());
        ensure(r.deficit.abs() <= 1e-10, || format!("eq {i}: |deficit| {} for {p}", r.deficit))?;
        ensure(r.diagnosis == Diagnosis::DegreeAtMostTwo, || format!("eq {i}: {:?}", r.diagnosis))?;
        equalities += 1;
    }

    // converse: on the cond7 face, vanishing deficit forces n ≥ 3 to vanish
    let mut strict = 0;
    for i in 0..1000 {
        let mut rng = fuzz::case_rng(45, i);
        let p = generators::sample_params(ParamRegion::Cond7, &mut rng);
        let c = random_curve(45, i);
        let r = inequalities::equality_diagnosis(&c, &p).map_err(|e| format!("conv {i}: {e}"))?;
        ensure(r.diagnosis != Diagnosis::Inconsistent, || format!("conv {i}: {r:?}"))?;
        if r.diagnosis == Diagnosis::StrictInequality {
            strict += 1;
        }
    }
    within_time(start, Duration::from_secs(60), "nonnegativity fuzz")?;
    Ok(format!(
        "10000 cases, min deficit/scale {worst:.2e}; {equalities} equality instances (max |deficit| {max_eq:.1e}); {strict}/1000 strict converse cases"
    ))
}

/// 5. Sup, L2 and combined stability bounds; the series constant.
fn stability_fuzz() -> Outcome {
    let start = Instant::now();
    let tol = 1e-9;
    let mut worst = f64::INFINITY;
    let mut worst_cert = 0.0f64;
    for i in 0..10_000 {
        let mut rng = fuzz::case_rng(5, i);
        let c = random_curve(5, i);
        let scale = functionals::length(&c).powi(2).max(1.0);
        let p20 = generators::sample_params(ParamRegion::Cond20, &mut rng);
        let p25 = generators::sample_params(ParamRegion::Cond25, &mut rng);

        let sup = stability::check_sup_bound(&c, &p20, tol).map_err(|e| format!("case {i}: {e}"))?;
        ensure(sup.holds(), || format!("case {i}: sup bound fails for {p20}: {sup:?}"))?;
        worst_cert = worst_cert.max(sup.constant.error_bound);
        ensure(sup.constant.error_bound <= SERIES_TOL, || {
            format!("case {i}: tail {} for {p20}", sup.constant.error_bound)
        })?;
        worst = worst.min(sup.bound.margin / scale);

        let sup25 = stability::check_sup_bound(&c, &p25, tol).map_err(|e| format!("case {i}: {e}"))?;
        ensure(sup25.holds(), || format!("case {i}: sup bound fails for {p25}"))?;
        let l2 = stability::check_l2_bound(&c, &p25, tol).map_err(|e| format!("case {i}: {e}"))?;
        ensure(l2.holds(), || format!("case {i}: L2 bound fails for {p25}: {l2:?}"))?;
        let both = stability::check_combined_bound(&c, &p25, tol).map_err(|e| format!("case {i}: {e}"))?;
        ensure(both.holds, || format!("case {i}: combined bound fails for {p25}: {both:?}"))?;
        worst = worst.min(l2.bound.margin / scale).min(both.margin / scale);
    }

    let p = Preset::Eq2.params().unwrap();
    let k = stability::stability_constant(&p, SERIES_TOL).map_err(|e| e.to_string())?;
    let closed = (PI * PI / 12.0 - 11.0 / 16.0) / (2.0 * PI * PI);
    ensure((k.series - closed).abs() <= 1e-10, || format!("series {} vs closed form {closed}", k.series))?;
    ensure(k.value == 1.0, || format!("C = {}", k.value))?;
    ensure(k.error_bound <= SERIES_TOL, || format!("tail {}", k.error_bound))?;
    within_time(start, Duration::from_secs(120), "stability fuzz")?;
    Ok(format!(
        "10000 cases, min margin/scale {worst:.2e}, max tail bound {worst_cert:.1e}; series {:.12} vs {closed:.12}",
        k.series
    ))
}

/// 6. The two fixed-constant estimates against the Steiner disc.
fn panxu_consistency() -> Outcome {
    let mut worst_rel = 0.0f64;
    for i in 0..1000 {
        let c = random_curve(6, i);
        let r = stability::check_panxu(&c, 1e-9).map_err(|e| format!("case {i}: {e}"))?;
        ensure(r.h1.holds, || format!("case {i}: h1 bound {:?}", r.h1))?;
        ensure(r.h2.holds, || format!("case {i}: h2 bound {:?}", r.h2))?;
        let l2 = stability::check_l2_bound(&c, &stability::panxu_l2_params(), 1e-9)
            .map_err(|e| format!("case {i}: {e}"))?;
        let d = rel(l2.bound.rhs, r.h2.rhs);
        worst_rel = worst_rel.max(d);
        ensure(d <= 1e-12, || format!("case {i}: Φ/18π {} vs L² instance {} ({d:e})", r.h2.rhs, l2.bound.rhs))?;
    }
    Ok(format!("1000 curves, max relative difference of the two h2 bounds {worst_rel:.1e}"))
}

/// 7. The eq8 form is sharp on degree-two curves where eq2 is not.
fn bonnesen_sharpness() -> Outcome {
    let eq8 = Preset::Eq8.params().unwrap();
    let c2 = coefficient(&eq8, 2).map_err(|e| e.to_string())?;
    ensure(c2 == 0.0, || format!("n = 2 coefficient of eq8 is {c2}"))?;
    let mut notes = Vec::new();
    for a2 in [0.05, 0.1, 0.2] {
        let c = SupportFourier::single(1.0, 2, a2, 0.0);
        let r8 = inequalities::bonnesen_8(&c).map_err(|e| e.to_string())?;
        let r2 = inequalities::reverse_pan_zhang(&c).map_err(|e| e.to_string())?;
        let abs = functionals::evolute_area_abs(&c);
        ensure(r8.abs() <= 1e-12, || format!("a2={a2}: eq8 residual {r8:e}"))?;
        ensure(r2 > 0.0, || format!("a2={a2}: eq2 residual {r2}"))?;
        let gap = 3.0 * PI * abs;
        ensure(rel(r2, gap) <= 1e-12, || format!("a2={a2}: eq2 residual {r2} vs 3π|Ã| {gap}"))?;
        notes.push(format!("a2={a2}: r8={r8:.1e} r2={r2:.6}"));
    }
    Ok(notes.join("; "))
}

/// 8. Point-cloud fitting.
fn ingestion_round_trip() -> Outcome {
    let mut worst = 0.0f64;
    for seed in 0..50u64 {
        let spec = generators::RandomCurveSpec::new(8, 2.5, 0.9, seed).map_err(|e| e.to_string())?;
        let c = generators::random_convex(&spec).map_err(|e| e.to_string())?;
        let cloud = PointCloud::from_curve(&c, 64).map_err(|e| e.to_string())?;
        let fit = generators::fit_support_fourier(&cloud, 8, 64).map_err(|e| e.to_string())?;
        worst = worst.max((fit.curve.a0 - c.a0).abs());
        for n in 1..=8 {
            let (a, b) = fit.curve.harmonic(n);
            let (ea, eb) = c.harmonic(n);
            worst = worst.max((a - ea).abs()).max((b - eb).abs());
        }
    }
    ensure(worst <= 1e-9, || format!("coefficient error {worst:e}"))?;

    let pts = quadrature::nodes(720)
        .map(|t| PlanePoint::new(2.0 * t.cos(), t.sin()))
        .collect();
    let fit = generators::fit_support_fourier(&PointCloud::new(pts).map_err(|e| e.to_string())?, 8, 720)
        .map_err(|e| e.to_string())?;
    let area = functionals::area(&fit.curve);
    let err = rel(area, TAU);
    ensure(err <= 0.01, || format!("ellipse area {area} vs 2π"))?;
    Ok(format!("coefficient error {worst:.1e}; ellipse area error {:.3}%", 100.0 * err))
}

/// 9. The campaign must be able to fail.
fn mutation_self_test() -> Outcome {
    let base = FuzzConfig {
        count: 500,
        seed: 9,
        ..FuzzConfig::default()
    };
    let clean = fuzz::run(&base).map_err(|e| e.to_string())?;
    ensure(clean.passed(), || format!("unmutated campaign failed: {:?}", clean.failures_by_check))?;
    let mutated = fuzz::run(&FuzzConfig {
        mutation: Mutation::NegateEvoluteArea,
        ..base
    })
    .map_err(|e| e.to_string())?;
    ensure(mutated.failures > 0, || "mutated campaign reported no failures".into())?;
    Ok(format!(
        "clean: 0/{} checks failed; mutated: {} failures {:?}",
        clean.checks, mutated.failures, mutated.failures_by_check
    ))
}

fn main() -> ExitCode {
    // libtest-style flags are accepted and ignored
    let filter: Option<String> = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let criteria: [Criterion; 9] = [
        ("AC1 circle exactness", circle_exactness),
        ("AC2 worked curve 1 + 0.1 cos 2θ", worked_curve),
        ("AC3 Parseval vs quadrature oracle", oracle_equivalence),
        ("AC4 deficit nonnegativity and equality", theorem_nonnegativity),
        ("AC5 sup, L2 and combined stability bounds", stability_fuzz),
        ("AC6 fixed-constant Steiner-disc estimates", panxu_consistency),
        ("AC7 eq8 sharper than eq2 at degree two", bonnesen_sharpness),
        ("AC8 ingestion round trip", ingestion_round_trip),
        ("AC9 mutation self-test", mutation_self_test),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        if let Some(f) = &filter {
            if !name.contains(f.as_str()) {
                continue;
            }
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {name:<44} {took:>10.2?}  {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name:<44} {took:>10.2?}  {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
