//! `hardy-forge`: batch front end for the weighted Hardy space toolkit.
//!
//! Exit status: 0 on success, 1 on input errors (with an `E_*` code on
//! stderr), 2 when a report's invariant checks fail.

mod inputs;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hardy_forge::corona::{corona_solve, verify_corona, CoronaConfig, CoronaInput};
use hardy_forge::duality::{dist_h2_with_outer, pythagoras};
use hardy_forge::exhaustion::{boundary_weight, ring_exhaustion, ExhaustionFile};
use hardy_forge::interpolation::{
    bridge_family, bridge_report, candidate_phi, constraint_defect, min_norm_interpolant, pick_min_norm,
    sparsity_delta, ComplexJson,
};
use hardy_forge::norms::{boundary_norm, carleson_identity_check, AreaIntegrator};
use hardy_forge::suite::{verify_suite, SuiteConfig};
use hardy_forge::weights::{default_outer, outer_function, WeightFile};
use hardy_forge::CircleGrid;
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

use inputs::*;

#[derive(Parser)]
#[command(name = "hardy-forge", version, about = "Numerics for weighted Hardy spaces on the unit disk")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
struct GlobalArgs {
    /// Boundary grid size (power of two, at least 256).
    #[arg(long, global = true, default_value_t = 1024)]
    grid: usize,
    /// Radial nodes of the disk quadrature.
    #[arg(long, global = true, default_value_t = 200)]
    disk_radial: usize,
    /// Angular nodes of the disk quadrature (power of two).
    #[arg(long, global = true, default_value_t = 512)]
    disk_angular: usize,
    /// Overrides the tolerance of the command's invariant check.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Output path (stdout when omitted).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Weight files: validation, normalization, outer functions.
    Weight {
        #[command(subcommand)]
        action: WeightCmd,
    },
    /// Conversions between weights and exhaustions.
    Exhaust {
        #[command(subcommand)]
        action: ExhaustCmd,
    },
    /// Boundary and area norms.
    Norm {
        #[command(subcommand)]
        action: NormCmd,
    },
    /// Distance from a boundary function to weighted H².
    Dist {
        #[arg(long)]
        phi: PathBuf,
        #[arg(long)]
        weight: Option<PathBuf>,
    },
    /// Interpolation problems.
    Interp {
        #[command(subcommand)]
        action: InterpCmd,
    },
    /// Corona problems with two generators.
    Corona {
        #[command(subcommand)]
        action: CoronaCmd,
    },
    /// Invariant suite.
    Verify {
        #[command(subcommand)]
        action: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum WeightCmd {
    Validate {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Normalize {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Outer {
        #[arg(long = "in")]
        input: PathBuf,
        /// Truncation degree of log a (defaults to the grid's Nyquist degree).
        #[arg(long)]
        degree: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ExhaustCmd {
    FromWeight {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 0.9)]
        radius: f64,
    },
    BoundaryWeight {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Roundtrip {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', default_values_t = [0.9, 0.99, 0.999])]
        radii: Vec<f64>,
    },
}

#[derive(Subcommand)]
enum NormCmd {
    Boundary {
        #[arg(long)]
        function: PathBuf,
        #[arg(long)]
        weight: Option<PathBuf>,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
    },
    Area {
        #[arg(long)]
        function: PathBuf,
        #[arg(long)]
        exhaustion: PathBuf,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
    },
    Check {
        #[arg(long)]
        function: PathBuf,
        #[arg(long)]
        exhaustion: PathBuf,
        #[arg(long, default_value_t = 2.0)]
        p: f64,
    },
}

#[derive(Subcommand)]
enum InterpCmd {
    Delta {
        #[arg(long)]
        problem: PathBuf,
    },
    Candidate {
        #[arg(long)]
        problem: PathBuf,
    },
    Minnorm {
        #[arg(long)]
        problem: PathBuf,
        #[arg(long)]
        weight: Option<PathBuf>,
    },
    Pick {
        #[arg(long)]
        problem: PathBuf,
    },
    Bridge {
        #[arg(long)]
        problem: PathBuf,
        /// Number of random weights in the family.
        #[arg(long, default_value_t = 20)]
        family: usize,
    },
}

#[derive(Subcommand)]
enum CoronaCmd {
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    All,
}

/// Settings echoed into every report.
#[derive(Debug, Clone, Serialize)]
struct RunConfig {
    grid_n: usize,
    disk_radial: usize,
    disk_angular: usize,
    tol: Option<f64>,
    seed: u64,
    format: Format,
}

enum Output {
    /// Enveloped report with its invariant verdict and optional CSV body.
    Report {
        result: Value,
        passed: bool,
        csv: Option<String>,
    },
    /// A data file meant to be fed back to the tool.
    Artifact(Value),
}

fn report(result: Value, passed: bool) -> Output {
    Output::Report {
        result,
        passed,
        csv: None,
    }
}

fn complex_list(values: &[Complex64]) -> Vec<ComplexJson> {
    values.iter().map(|&c| c.into()).collect()
}

struct Ctx {
    grid: CircleGrid,
    global: GlobalArgs,
}

impl Ctx {
    fn tol(&self, default: f64) -> f64 {
        self.global.tol.unwrap_or(default)
    }

    fn corona_config(&self) -> CoronaConfig {
        CoronaConfig {
            radial: self.global.disk_radial,
            angular: self.global.disk_angular,
        }
    }
}

fn weight_cmd(ctx: &Ctx, action: &WeightCmd) -> CliResult<Output> {
    match action {
        WeightCmd::Validate { input } => {
            let file: WeightFile = read_json(input)?;
            let w = file.to_weight()?;
            let max = w.samples().iter().copied().fold(f64::MIN, f64::max);
            Ok(report(
                json!({"n": w.grid().len(), "min": w.lower_bound(), "max": max, "mass": w.mass(), "normalized": file.normalized}),
                true,
            ))
        }
        WeightCmd::Normalize { input } => {
            let w = load_weight(input)?.normalized();
            let mut file = WeightFile::from_weight(&w);
            file.normalized = true;
            Ok(Output::Artifact(serde_json::to_value(file).expect("weight file serializes")))
        }
        WeightCmd::Outer { input, degree } => {
            let w = load_weight(input)?;
            let outer = match degree {
                Some(d) => outer_function(&w, *d)?,
                None => default_outer(&w),
            };
            let defect = outer
                .boundary_power(1.0)
                .values()
                .iter()
                .zip(w.samples())
                .map(|(a, s)| (a.norm() - s).abs())
                .fold(0.0, f64::max);
            let tol = ctx.tol(1e-8);
            Ok(report(
                json!({
                    "a0": outer.eval(Complex64::new(0.0, 0.0)).re,
                    "modulus_defect": defect,
                    "tolerance": tol,
                    "coeffs": complex_list(outer.power_series(1.0).coeffs()),
                    "log_coeffs": complex_list(outer.log_series().coeffs()),
                }),
                defect <= tol,
            ))
        }
    }
}

fn exhaust_cmd(ctx: &Ctx, action: &ExhaustCmd) -> CliResult<Output> {
    match action {
        ExhaustCmd::FromWeight { input, radius } => {
            let e = ring_exhaustion(&load_weight(input)?, *radius)?;
            Ok(Output::Artifact(serde_json::to_value(ExhaustionFile::from_exhaustion(&e)).expect("serializes")))
        }
        ExhaustCmd::BoundaryWeight { input } => {
            let e = load_exhaustion(input)?;
            let w = boundary_weight(e.measure(), ctx.grid)?;
            Ok(Output::Artifact(serde_json::to_value(WeightFile::from_weight(&w)).expect("serializes")))
        }
        ExhaustCmd::Roundtrip { input, radii } => {
            let w = load_weight(input)?;
            let mut rows = Vec::with_capacity(radii.len());
            for &r in radii {
                let back = boundary_weight(ring_exhaustion(&w, r)?.measure(), w.grid())?;
                rows.push((r, back.sup_distance(&w)?));
            }
            let decreasing = rows.windows(2).all(|p| p[1].1 < p[0].1);
            let tol = ctx.tol(1e-2);
            let last = rows.last().map_or(0.0, |r| r.1);
            let csv = rows.iter().fold(String::from("radius,error\n"), |mut s, (r, e)| {
                s.push_str(&format!("{r:.16e},{e:.16e}\n"));
                s
            });
            Ok(Output::Report {
                result: json!({
                    "rows": rows.iter().map(|(r, e)| json!({"radius": r, "error": e})).collect::<Vec<_>>(),
                    "decreasing": decreasing,
                    "final_error": last,
                    "tolerance": tol,
                }),
                passed: decreasing && last <= tol,
                csv: Some(csv),
            })
        }
    }
}

fn norm_cmd(ctx: &Ctx, action: &NormCmd) -> CliResult<Output> {
    let g = &ctx.global;
    match action {
        NormCmd::Boundary { function, weight, p } => {
            let f = load_function(function)?;
            let w = weight_or_classical(weight.as_deref(), ctx.grid)?;
            Ok(report(json!({"p": p, "norm": boundary_norm(&f, &w, *p)?}), true))
        }
        NormCmd::Area { function, exhaustion, p } => {
            let f = load_function(function)?;
            let e = load_exhaustion(exhaustion)?;
            let area = AreaIntegrator::new(&e, g.disk_radial, g.disk_angular)?.area_norm(&f, *p)?;
            Ok(report(json!({"p": p, "area": area}), true))
        }
        NormCmd::Check { function, exhaustion, p } => {
            let f = load_function(function)?;
            let e = load_exhaustion(exhaustion)?;
            let area = AreaIntegrator::new(&e, g.disk_radial, g.disk_angular)?.area_norm(&f, *p)?;
            let alpha = boundary_weight(e.measure(), ctx.grid)?;
            let boundary = boundary_norm(&f, &alpha, *p)?;
            let gap = (area.norm - boundary).abs() / boundary.max(f64::MIN_POSITIVE);
            let carleson = if e.has_caps() {
                Value::Null
            } else {
                json!(carleson_identity_check(&f, &e, *p, ctx.grid)?)
            };
            let tol = ctx.tol(1e-6);
            Ok(report(
                json!({"p": p, "area_norm": area.norm, "boundary_norm": boundary, "relative_gap": gap, "tolerance": tol, "carleson_identity": carleson}),
                gap <= tol,
            ))
        }
    }
}

fn dist_cmd(ctx: &Ctx, phi: &std::path::Path, weight: Option<&std::path::Path>) -> CliResult<Output> {
    let w = weight_or_classical(weight, ctx.grid)?;
    let phi = load_boundary(phi, w.grid())?;
    let d = dist_h2_with_outer(&phi, &default_outer(&w))?;
    let pyth = pythagoras(&d);
    let tol = ctx.tol(1e-10);
    Ok(report(
        json!({
            "distance": d.distance,
            "projection_norm": d.projection_norm,
            "embedded_norm": d.embedded_norm,
            "pythagoras_defect": pyth.defect,
            "tail": d.tail,
            "tolerance": tol,
            "best_approximant": complex_list(d.best_approximant.coeffs()),
        }),
        pyth.defect <= tol,
    ))
}

fn interp_cmd(ctx: &Ctx, action: &InterpCmd) -> CliResult<Output> {
    match action {
        InterpCmd::Delta { problem } => {
            let p = load_problem(problem)?;
            Ok(report(json!({"delta": sparsity_delta(p.sequence())?}), true))
        }
        InterpCmd::Candidate { problem } => {
            let p = load_problem(problem)?;
            let c = candidate_phi(&p, ctx.grid)?;
            Ok(report(
                json!({
                    "coeffs": complex_list(c.coeffs()),
                    "sup_norm": c.samples.sup_norm(),
                    "l2_norm": c.samples.l2_norm(),
                    "samples": complex_list(c.samples.values()),
                }),
                true,
            ))
        }
        InterpCmd::Minnorm { problem, weight } => {
            let p = load_problem(problem)?;
            let w = weight_or_classical(weight.as_deref(), ctx.grid)?;
            let sol = min_norm_interpolant(&p, &default_outer(&w))?;
            let defect = constraint_defect(&sol.function, &p);
            let tol = ctx.tol(1e-8);
            Ok(report(
                json!({
                    "norm": sol.norm,
                    "condition": sol.condition,
                    "constraint_defect": defect,
                    "tolerance": tol,
                    "kernel_coeffs": complex_list(&sol.coeffs),
                }),
                defect <= tol,
            ))
        }
        InterpCmd::Pick { problem } => {
            let p = load_problem(problem)?;
            let r = pick_min_norm(&p, ctx.tol(1e-10))?;
            Ok(report(json!(r), true))
        }
        InterpCmd::Bridge { problem, family } => {
            let p = load_problem(problem)?;
            let weights = bridge_family(ctx.grid, *family, ctx.global.seed)?;
            let r = bridge_report(&p, &weights, ctx.tol(1e-10))?;
            Ok(Output::Report {
                passed: r.within_pick && r.within_bound,
                csv: Some(r.to_csv()),
                result: json!(r),
            })
        }
    }
}

fn corona_cmd(ctx: &Ctx, action: &CoronaCmd) -> CliResult<Output> {
    let (input, verify) = match action {
        CoronaCmd::Solve { input } => (input, false),
        CoronaCmd::Verify { input } => (input, true),
    };
    let parsed: CoronaInput = read_json(input)?;
    let data = parsed.to_data()?;
    let weight = parsed.weight.to_weight(ctx.grid)?;
    let sol = corona_solve(&data, &default_outer(&weight), ctx.corona_config())?;
    let certificate = data.certificate();
    if !verify {
        let boundary = sol.boundary();
        return Ok(report(
            json!({
                "delta": data.delta(),
                "certificate": certificate,
                "k_delta": data.k_delta(),
                "distance": sol.distance(),
                "correction": sol.correction().map(|h| complex_list(h.coeffs())),
                "boundary_g1": complex_list(&boundary.g1),
                "boundary_g2": complex_list(&boundary.g2),
            }),
            true,
        ));
    }
    let r = verify_corona(&sol)?;
    let dbar_tol = ctx.tol(1e-2);
    let bezout_tol = 1e-3;
    let passed = r.bezout_interior <= bezout_tol
        && r.dbar_residual.iter().all(|v| *v <= dbar_tol)
        && r.within_budget;
    Ok(report(
        json!({"report": r, "certificate": certificate, "bezout_tolerance": bezout_tol, "dbar_tolerance": dbar_tol}),
        passed,
    ))
}

fn verify_cmd(ctx: &Ctx) -> CliResult<Output> {
    let g = &ctx.global;
    let suite = verify_suite(SuiteConfig {
        grid_n: g.grid,
        disk_radial: g.disk_radial,
        disk_angular: g.disk_angular,
        seed: g.seed,
        tol: g.tol,
    })?;
    let mut csv = String::from("module,name,value,tolerance,bound,passed\n");
    for c in &suite.checks {
        let bound = if matches!(c.bound, hardy_forge::suite::Bound::AtMost) { "at_most" } else { "at_least" };
        csv.push_str(&format!(
            "{},{},{:.16e},{:.16e},{bound},{}\n",
            c.module, c.name, c.value, c.tolerance, c.passed
        ));
    }
    Ok(Output::Report {
        passed: suite.passed,
        result: json!(suite),
        csv: Some(csv),
    })
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Weight { action } => match action {
            WeightCmd::Validate { .. } => "weight validate",
            WeightCmd::Normalize { .. } => "weight normalize",
            WeightCmd::Outer { .. } => "weight outer",
        },
        Command::Exhaust { action } => match action {
            ExhaustCmd::FromWeight { .. } => "exhaust from-weight",
            ExhaustCmd::BoundaryWeight { .. } => "exhaust boundary-weight",
            ExhaustCmd::Roundtrip { .. } => "exhaust roundtrip",
        },
        Command::Norm { action } => match action {
            NormCmd::Boundary { .. } => "norm boundary",
            NormCmd::Area { .. } => "norm area",
            NormCmd::Check { .. } => "norm check",
        },
        Command::Dist { .. } => "dist",
        Command::Interp { action } => match action {
            InterpCmd::Delta { .. } => "interp delta",
            InterpCmd::Candidate { .. } => "interp candidate",
            InterpCmd::Minnorm { .. } => "interp minnorm",
            InterpCmd::Pick { .. } => "interp pick",
            InterpCmd::Bridge { .. } => "interp bridge",
        },
        Command::Corona { action } => match action {
            CoronaCmd::Solve { .. } => "corona solve",
            CoronaCmd::Verify { .. } => "corona verify",
        },
        Command::Verify { .. } => "verify all",
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("HARDY_FORGE_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| InputError::new("E_INPUT", format!("HARDY_FORGE_THREADS={raw:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| InputError::new("E_INPUT", format!("thread pool: {e}")))
}

fn execute(cli: Cli) -> CliResult<bool> {
    configure_threads()?;
    let g = cli.global.clone();
    if let Some(t) = g.tol {
        if t.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) || !t.is_finite() {
            return Err(InputError::new("E_INPUT", format!("--tol {t} must be positive")));
        }
    }
    let grid = CircleGrid::new(g.grid)?;
    let default_format = match &cli.command {
        Command::Interp { action: InterpCmd::Bridge { .. } } => Format::Csv,
        _ => Format::Json,
    };
    let format = g.format.unwrap_or(default_format);
    let ctx = Ctx { grid, global: g.clone() };
    let output = match &cli.command {
        Command::Weight { action } => weight_cmd(&ctx, action)?,
        Command::Exhaust { action } => exhaust_cmd(&ctx, action)?,
        Command::Norm { action } => norm_cmd(&ctx, action)?,
        Command::Dist { phi, weight } => dist_cmd(&ctx, phi, weight.as_deref())?,
        Command::Interp { action } => interp_cmd(&ctx, action)?,
        Command::Corona { action } => corona_cmd(&ctx, action)?,
        Command::Verify { .. } => verify_cmd(&ctx)?,
    };
    let config = RunConfig {
        grid_n: g.grid,
        disk_radial: g.disk_radial,
        disk_angular: g.disk_angular,
        tol: g.tol,
        seed: g.seed,
        format,
    };
    let (text, passed) = match output {
        Output::Artifact(value) => {
            if format == Format::Csv {
                return Err(InputError::new("E_FORMAT", "this command writes a JSON data file; CSV is not available"));
            }
            (output::to_json(&value), true)
        }
        Output::Report { result, passed, csv } => match format {
            Format::Json => (
                output::to_json(&json!({
                    "command": command_name(&cli.command),
                    "config": config,
                    "passed": passed,
                    "result": result,
                })),
                passed,
            ),
            Format::Csv => (csv.unwrap_or_else(|| output::scalars_csv(&result)), passed),
        },
    };
    output::emit(&text, g.out.as_deref())
        .map_err(|e| InputError::new("E_IO", format!("cannot write output: {e}")))?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return if usage { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match execute(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("invariant check failed; see report");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(1)
        }
    }
}
