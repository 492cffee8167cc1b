//! Command-line front end: analyze, check, stability, fuzz, fit.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use isoperix::fuzz::{self, FuzzConfig, Mutation};
use isoperix::generators::fit_support_fourier;
use isoperix::inequalities::{self, IneqParams, Preset};
use isoperix::{functionals, io, stability, Error, SupportFourier};

const EXIT_VIOLATED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_NOT_CONVEX: u8 = 3;
const EXIT_CONE: u8 = 4;

#[derive(Parser)]
#[command(name = "isoperix", version, about = "Support-function analysis of convex plane curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Functionals of a curve, optionally with an SVG of curve and evolute.
    Analyze {
        #[command(flatten)]
        io: IoArgs,
        /// Also draw the curve and its evolute as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Deficit for given parameters or a named inequality.
    Check {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Bounds may fail by at most tol·max(1, L²).
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Distances to the Steiner disc and the stability bounds.
    Stability {
        #[command(flatten)]
        io: IoArgs,
        #[command(flatten)]
        params: ParamArgs,
        /// Bounds may fail by at most tol·max(1, L²).
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Randomized invariant campaign.
    Fuzz {
        /// Number of random cases.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Case i uses stream i of a generator seeded with this.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Highest harmonic of the random curves.
        #[arg(long, default_value_t = 16)]
        max_harmonic: usize,
        /// Bounds may fail by at most tol·max(1, L²).
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Write the full summary, including every failing case, here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MutationArg::None, hide = true)]
        mutate: MutationArg,
        /// Write the summary here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Fourier fit of the support function of a point cloud.
    Fit {
        #[command(flatten)]
        io: IoArgs,
        /// Highest harmonic of the fitted support function.
        #[arg(long, default_value_t = 8)]
        max_harmonic: usize,
        /// Directions at which the support function is sampled.
        #[arg(long, default_value_t = 720)]
        samples: usize,
        /// Also write the fitted curve alone, in curve JSON format.
        #[arg(long)]
        curve_out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct IoArgs {
    /// Input file (curve JSON; point cloud CSV or JSON for `fit`).
    #[arg(value_name = "PATH", required_unless_present = "input")]
    path: Option<PathBuf>,
    /// Same as PATH.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Print a fixed-width table instead of JSON.
    #[arg(long, conflicts_with = "json")]
    table: bool,
    /// JSON output (the default).
    #[arg(long)]
    json: bool,
}

impl IoArgs {
    fn input(&self) -> &Path {
        self.input.as_deref().or(self.path.as_deref()).expect("clap enforces an input")
    }
}

#[derive(Args)]
struct ParamArgs {
    /// Named inequality instead of explicit parameters.
    #[arg(long, value_enum, conflicts_with_all = ["alpha", "beta", "lambda", "delta"])]
    preset: Option<PresetArg>,
    /// Weight of the integral of the squared radius of curvature.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    /// Weight of L².
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// Weight of the enclosed area.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<f64>,
    /// Weight of the evolute area.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<f64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PresetArg {
    Eq1,
    Eq2,
    Eq3,
    Eq8,
    Eq9,
    Eq10,
}

impl From<PresetArg> for Preset {
    fn from(p: PresetArg) -> Preset {
        match p {
            PresetArg::Eq1 => Preset::Eq1,
            PresetArg::Eq2 => Preset::Eq2,
            PresetArg::Eq3 => Preset::Eq3,
            PresetArg::Eq8 => Preset::Eq8,
            PresetArg::Eq9 => Preset::Eq9,
            PresetArg::Eq10 => Preset::Eq10,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MutationArg {
    None,
    NegateEvoluteArea,
}

enum Selected {
    Preset(Preset),
    Raw(IneqParams),
}

impl ParamArgs {
    fn select(&self) -> Result<Selected, Failure> {
        if let Some(p) = self.preset {
            return Ok(Selected::Preset(p.into()));
        }
        match (self.alpha, self.beta, self.lambda, self.delta) {
            (Some(a), Some(b), Some(l), Some(d)) => Ok(Selected::Raw(IneqParams::new(a, b, l, d))),
            (None, None, None, None) => Err(Failure::usage("give --preset or all of --alpha --beta --lambda --delta")),
            _ => Err(Failure::usage("--alpha --beta --lambda --delta must be given together")),
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(msg: &str) -> Self {
        Failure {
            code: EXIT_PARSE,
            message: msg.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NotConvex { .. } => EXIT_NOT_CONVEX,
            Error::Cone { .. } => EXIT_CONE,
            Error::Inconsistent { .. } => EXIT_VIOLATED,
            Error::Parse(_) | Error::Io(_) | Error::InvalidArgument(_) => EXIT_PARSE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Failure::from(Error::from(e))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn load_convex(path: &Path) -> Result<SupportFourier, Failure> {
    let c = io::read_curve(path).map_err(|e| match e {
        Error::Io(err) => Failure::from(Error::Parse(format!("{}: {err}", path.display()))),
        other => Failure::from(other),
    })?;
    c.ensure_convex()?;
    Ok(c)
}

fn table(rows: &[(&str, String)]) -> String {
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<22} {v:>24}\n"));
    }
    out
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| x.to_string())
}

fn num(x: f64) -> String {
    if x != 0.0 && !(1e-4..1e9).contains(&x.abs()) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

fn analyze(args: &IoArgs, svg: Option<&Path>) -> Result<u8, Failure> {
    let c = load_convex(args.input())?;
    let f = functionals::compute_all(&c);
    let text = if args.table {
        table(&[
            ("L", num(f.length)),
            ("A", num(f.area)),
            ("A_tilde_oriented", num(f.evolute_area_oriented)),
            ("A_tilde_abs", num(f.evolute_area_abs)),
            ("int_rho_sq", num(f.int_rho_sq)),
            ("max_rho_sq", num(f.max_rho_sq)),
            ("convex", f.convex.to_string()),
        ])
    } else {
        to_json(&f)
    };
    emit(args.output.as_deref(), &text)?;
    if let Some(path) = svg {
        std::fs::write(path, io::render_svg(&c)).map_err(|e| Failure::from(Error::from(e)))?;
    }
    Ok(0)
}

fn check(args: &IoArgs, params: &ParamArgs, tol: f64) -> Result<u8, Failure> {
    let c = load_convex(args.input())?;
    let selected = params.select()?;
    let slack = tol * functionals::length(&c).powi(2).max(1.0);
    let (residual, body) = match selected {
        Selected::Preset(Preset::Eq10) => {
            let f = functionals::compute_all(&c);
            let residual = inequalities::bonnesen_10(&c)?;
            let body = json!({
                "preset": "eq10",
                "residual": residual,
                "max_rho_sq": f.max_rho_sq,
                "bound": f.max_rho_sq - residual,
            });
            (residual, body)
        }
        Selected::Preset(preset) => {
            let p = preset.params().expect("deficit preset");
            let report = inequalities::deficit(&c, &p)?;
            let residual = preset.residual(&c)?;
            let mut body = serde_json::to_value(&report).expect("report serializes");
            body["preset"] = json!(preset.name());
            body["residual"] = json!(residual);
            (residual, body)
        }
        Selected::Raw(p) => {
            if !p.is_finite() {
                return Err(Failure::usage("parameters must be finite"));
            }
            if !inequalities::cone_check(&p).cond4 {
                eprintln!("warning: parameters {p} are outside cond4; nonnegativity is not guaranteed");
            }
            let report = inequalities::deficit(&c, &p)?;
            let residual = report.value;
            let mut body = serde_json::to_value(&report).expect("report serializes");
            body["residual"] = json!(residual);
            (residual, body)
        }
    };
    let text = if args.table {
        table(&[("residual", num(residual)), ("holds", (residual >= -slack).to_string())])
    } else {
        to_json(&body)
    };
    emit(args.output.as_deref(), &text)?;
    Ok(if residual >= -slack { 0 } else { EXIT_VIOLATED })
}

fn stability_cmd(args: &IoArgs, params: &ParamArgs, tol: f64) -> Result<u8, Failure> {
    let c = load_convex(args.input())?;
    let p = match params.select()? {
        Selected::Raw(p) => p,
        Selected::Preset(preset) => preset
            .params()
            .ok_or_else(|| Failure::usage("preset eq10 has no deficit parameters"))?,
    };
    let report = stability::stability_report(&c, &p, tol)?;
    let text = if args.table {
        table(&[
            ("steiner_point", format!("({}, {})", report.steiner_point.x, report.steiner_point.y)),
            ("steiner_radius", num(report.steiner_radius)),
            ("h1_sq", num(report.h1_sq)),
            ("h1_coefficient_bound", num(report.h1_coefficient_bound)),
            ("h2_sq", num(report.h2_sq)),
            ("C_const", opt(report.c_const.map(num))),
            ("C_error", opt(report.c_error.map(num))),
            ("deficit_value", num(report.deficit_value)),
            ("phi", num(report.phi)),
            ("bound_21_ok", opt(report.bound_21_ok)),
            ("bound_26_ok", opt(report.bound_26_ok)),
            ("bound_30_ok", opt(report.bound_30_ok)),
            ("panxu_h1_ok", report.panxu_h1_ok.to_string()),
            ("panxu_h2_ok", report.panxu_h2_ok.to_string()),
        ])
    } else {
        to_json(&report)
    };
    emit(args.output.as_deref(), &text)?;
    if !report.any_applicable() {
        eprintln!("error: parameters {p} satisfy neither cond20 nor cond25");
        return Ok(EXIT_CONE);
    }
    Ok(if report.all_hold() { 0 } else { EXIT_VIOLATED })
}

fn fit(args: &IoArgs, max_harmonic: usize, samples: usize, curve_out: Option<&Path>) -> Result<u8, Failure> {
    let cloud = io::read_point_cloud(args.input()).map_err(|e| match e {
        Error::Io(err) => Failure::from(Error::Parse(format!("{}: {err}", args.input().display()))),
        other => Failure::from(other),
    })?;
    let report = fit_support_fourier(&cloud, max_harmonic, samples)?;
    let text = if args.table {
        table(&[
            ("a0", report.curve.a0.to_string()),
            ("degree", report.curve.degree().to_string()),
            ("residual_sup", report.residual_sup.to_string()),
            ("convex", report.convex.to_string()),
        ])
    } else {
        to_json(&report)
    };
    emit(args.output.as_deref(), &text)?;
    if let Some(path) = curve_out {
        std::fs::write(path, io::curve_to_json(&report.curve) + "\n").map_err(|e| Failure::from(Error::from(e)))?;
    }
    Ok(if report.convex { 0 } else { EXIT_NOT_CONVEX })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { io, svg } => analyze(&io, svg.as_deref()),
        Command::Check { io, params, tol } => check(&io, &params, tol),
        Command::Stability { io, params, tol } => stability_cmd(&io, &params, tol),
        Command::Fit {
            io,
            max_harmonic,
            samples,
            curve_out,
        } => fit(&io, max_harmonic, samples, curve_out.as_deref()),
        Command::Fuzz {
            count,
            seed,
            max_harmonic,
            tol,
            report,
            mutate,
            output,
        } => {
            let cfg = FuzzConfig {
                count,
                seed,
                max_harmonic,
                tol,
                mutation: match mutate {
                    MutationArg::None => Mutation::None,
                    MutationArg::NegateEvoluteArea => Mutation::NegateEvoluteArea,
                },
            };
            let summary = fuzz::run(&cfg)?;
            if let Some(path) = report {
                std::fs::write(path, to_json(&summary)).map_err(|e| Failure::from(Error::from(e)))?;
            }
            let brief = json!({
                "cases": summary.cases,
                "checks": summary.checks,
                "failures": summary.failures,
                "failures_by_check": summary.failures_by_check,
                "seed": seed,
            });
            emit(output.as_deref(), &to_json(&brief))?;
            Ok(if summary.passed() { 0 } else { EXIT_VIOLATED })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
