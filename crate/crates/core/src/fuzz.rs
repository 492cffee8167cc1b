//! Randomized invariant campaign over random curves and sampled parameters.
//!
//! Case `i` draws everything from a ChaCha stream keyed by `(seed, i)`, so
//! results do not depend on thread count or scheduling.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functionals::{self, CurveFunctionals};
use crate::generators::{self, ParamRegion};
use crate::inequalities::{self, IneqParams, Preset};
use crate::quadrature;
use crate::stability;
use crate::support::SupportFourier;

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "ISOPERIX_THREADS";

/// Relative agreement required between Parseval formulas and quadrature.
pub const ORACLE_TOL: f64 = 1e-11;

/// Deliberate defects used to check that the campaign can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    #[default]
    None,
    /// Flip the sign of `|Ã|` before it enters any deficit.
    NegateEvoluteArea,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FuzzConfig {
    pub count: usize,
    pub seed: u64,
    pub max_harmonic: usize,
    /// Violations are tolerated up to `tol · max(1, L²)`.
    pub tol: f64,
    pub mutation: Mutation,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            count: 1000,
            seed: 0,
            max_harmonic: 16,
            tol: 1e-9,
            mutation: Mutation::None,
        }
    }
}

/// Everything needed to replay one failed check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub case: usize,
    pub seed: u64,
    pub check: String,
    pub detail: String,
    pub curve: SupportFourier,
    pub params: Option<IneqParams>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub config: FuzzConfig,
    pub cases: usize,
    pub checks: usize,
    pub failures: usize,
    pub failures_by_check: BTreeMap<String, usize>,
    /// Most negative normalized margin seen per check.
    pub worst_margin: BTreeMap<String, f64>,
    pub failed_cases: Vec<Failure>,
}

impl FuzzSummary {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// One random case: the curve and the two parameter choices it is tested with.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzCase {
    pub curve: SupportFourier,
    pub cone_params: IneqParams,
    pub stability_params: IneqParams,
}

/// Reproducible RNG for case `index` of a campaign seeded with `seed`.
pub fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

pub fn make_case(seed: u64, index: usize, max_harmonic: usize) -> FuzzCase {
    let mut rng = case_rng(seed, index);
    let spec = generators::random_spec(&mut rng, max_harmonic);
    let curve = generators::random_convex(&spec).expect("random spec is valid");
    let cone_params = generators::sample_params(ParamRegion::Cone4, &mut rng);
    let region = if rng.gen_bool(0.5) {
        ParamRegion::Cond20
    } else {
        ParamRegion::Cond25
    };
    let stability_params = generators::sample_params(region, &mut rng);
    FuzzCase {
        curve,
        cone_params,
        stability_params,
    }
}

struct CaseOutcome {
    checks: usize,
    failures: Vec<Failure>,
    margins: Vec<(&'static str, f64)>,
}

struct Recorder<'a> {
    case: &'a FuzzCase,
    index: usize,
    seed: u64,
    out: CaseOutcome,
}

impl Recorder<'_> {
    fn check(&mut self, name: &'static str, ok: bool, margin: f64, params: Option<IneqParams>, detail: impl FnOnce() -> String) {
        self.out.checks += 1;
        self.out.margins.push((name, margin));
        if !ok {
            self.out.failures.push(Failure {
                case: self.index,
                seed: self.seed,
                check: name.to_string(),
                detail: detail(),
                curve: self.case.curve.clone(),
                params,
            });
        }
    }

    fn fail(&mut self, name: &'static str, params: Option<IneqParams>, err: &Error) {
        self.check(name, false, f64::NEG_INFINITY, params, || err.to_string());
    }
}

fn rel_diff(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

fn run_case(cfg: &FuzzConfig, index: usize) -> CaseOutcome {
    let case = make_case(cfg.seed, index, cfg.max_harmonic);
    let mut r = Recorder {
        case: &case,
        index,
        seed: cfg.seed,
        out: CaseOutcome {
            checks: 0,
            failures: Vec::new(),
            margins: Vec::new(),
        },
    };
    let c = &case.curve;

    let min_rho = c.min_rho().value;
    r.check("convex", min_rho > 0.0, min_rho, None, || format!("min rho = {min_rho}"));

    let mut f = functionals::compute_all(c);
    if cfg.mutation == Mutation::NegateEvoluteArea {
        f.evolute_area_abs = -f.evolute_area_abs;
    }
    let scale = (f.length * f.length).max(1.0);
    let slack = cfg.tol * scale;

    match quadrature::oracle_functionals(c, quadrature::min_nodes(c)) {
        Ok(q) => {
            let worst = [
                rel_diff(q.length, f.length),
                rel_diff(q.area, f.area),
                rel_diff(q.evolute_area_oriented, f.evolute_area_oriented),
                rel_diff(q.evolute_area_abs, f.evolute_area_abs),
                rel_diff(q.int_rho_sq, f.int_rho_sq),
            ]
            .into_iter()
            .fold(0.0, f64::max);
            r.check("oracle", worst <= ORACLE_TOL, ORACLE_TOL - worst, None, || {
                format!("max relative difference {worst:e}")
            });
        }
        Err(e) => r.fail("oracle", None, &e),
    }

    let sign_ok = f.evolute_area_oriented <= 0.0 && f.evolute_area_abs == -f.evolute_area_oriented;
    r.check("evolute_sign", sign_ok, -f.evolute_area_oriented, None, || {
        format!("oriented {} abs {}", f.evolute_area_oriented, f.evolute_area_abs)
    });

    let iso = f.isoperimetric_deficit();
    r.check("isoperimetric", iso >= -slack, iso / scale, None, || format!("L^2 - 4piA = {iso}"));
    r.check("max_rho_sq", f.max_rho_sq * (1.0 + 1e-12) >= f.int_rho_sq / (2.0 * PI), 0.0, None, || {
        format!("max rho^2 {} < mean {}", f.max_rho_sq, f.int_rho_sq / (2.0 * PI))
    });

    for preset in Preset::ALL {
        let name = match preset {
            Preset::Eq1 => "residual_eq1",
            Preset::Eq2 => "residual_eq2",
            Preset::Eq3 => "residual_eq3",
            Preset::Eq8 => "residual_eq8",
            Preset::Eq9 => "residual_eq9",
            Preset::Eq10 => "residual_eq10",
        };
        let value = match preset.params() {
            Some(p) => inequalities::deficit_from_parts(c, &f, &p).map(|d| d.value),
            None => Ok(bonnesen_10_from(&f)),
        };
        match value {
            Ok(v) => r.check(name, v >= -slack, v / scale, preset.params(), || format!("residual {v}")),
            Err(e) => r.fail(name, preset.params(), &e),
        }
    }

    let p = case.cone_params;
    match inequalities::deficit_from_parts(c, &f, &p) {
        Ok(d) => r.check("deficit", d.value >= -slack, d.value / scale, Some(p), || {
            format!("deficit {}", d.value)
        }),
        Err(e) => r.fail("deficit", Some(p), &e),
    }

    let q = case.stability_params;
    match stability::stability_report_from(c, &f, &q, cfg.tol) {
        Ok(s) => {
            let checks = [
                ("bound_21", s.bound_21_ok, s.margin_21),
                ("bound_26", s.bound_26_ok, s.margin_26),
                ("bound_30", s.bound_30_ok, s.margin_30),
            ];
            for (name, ok, margin) in checks {
                if let (Some(ok), Some(m)) = (ok, margin) {
                    r.check(name, ok, m / scale, Some(q), || format!("margin {m}"));
                }
            }
            if let Some(err) = s.c_error {
                r.check("series_certificate", err <= stability::SERIES_TOL, stability::SERIES_TOL - err, Some(q), || {
                    format!("tail bound {err:e}")
                });
            }
            r.check("panxu_h1", s.panxu_h1_ok, 0.0, None, || format!("h1^2 {} phi {}", s.h1_sq, s.phi));
            r.check("panxu_h2", s.panxu_h2_ok, 0.0, None, || format!("h2^2 {} phi {}", s.h2_sq, s.phi));
        }
        Err(e) => r.fail("stability", Some(q), &e),
    }

    r.out
}

fn bonnesen_10_from(f: &CurveFunctionals) -> f64 {
    f.max_rho_sq - (f.length * f.length / PI - 2.0 * f.area + f.evolute_area_abs) / (2.0 * PI)
}

/// Worker count from [`THREADS_ENV`], if set to a positive integer.
pub fn threads_from_env() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

/// Runs the campaign, parallel over cases.
pub fn run(cfg: &FuzzConfig) -> Result<FuzzSummary> {
    if cfg.max_harmonic < 2 {
        return Err(Error::InvalidArgument("max_harmonic must be at least 2".into()));
    }
    if !(cfg.tol >= 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be nonnegative, got {}", cfg.tol)));
    }
    let work = || -> Vec<CaseOutcome> { (0..cfg.count).into_par_iter().map(|i| run_case(cfg, i)).collect() };
    let outcomes = match threads_from_env() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(work),
        None => work(),
    };

    let mut summary = FuzzSummary {
        config: *cfg,
        cases: cfg.count,
        checks: 0,
        failures: 0,
        failures_by_check: BTreeMap::new(),
        worst_margin: BTreeMap::new(),
        failed_cases: Vec::new(),
    };
    for out in outcomes {
        summary.checks += out.checks;
        for (name, m) in out.margins {
            let e = summary.worst_margin.entry(name.to_string()).or_insert(f64::INFINITY);
            *e = e.min(m);
        }
        for f in out.failures {
            summary.failures += 1;
            *summary.failures_by_check.entry(f.check.clone()).or_default() += 1;
            summary.failed_cases.push(f);
        }
    }
    Ok(summary)
}
