//! Command-line interface over the transition laboratory: polynomial and
//! series evaluation, ensemble sampling, averaged products, dualities,
//! window limits, regime classification, and convergence scans.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;

use charpoly::{
    duality_check_gaussian, duality_check_laguerre, exact_k_gaussian, exact_k_laguerre,
    mc_charpoly_avg_with_workers, CharPolyQuery, DualityMode, Sampler,
};
use combinatorics::{jack_eval, jack_polynomial, JackParams, Partition};
use ensembles::{
    density, ensemble_horizon, sample_matrix_model, sample_sde_with, EnsembleSpec, Scheme,
    SdeConfig,
};
use hyperfun::{hyperg_one_set, hyperg_two_set, HypergeometricSpec, TruncationPolicy};
use numeric::QuadOptions;
use scalinglimits::{crit_b_z, gauss_g_z, hard_w_z, pearcey_p_z, EvalPolicy};
use transition_cli::{
    classify_regime, emit, gaussian_saddle_residual, regime_name, render, run_convergence_scan,
    sig17, ExperimentConfig, Family, OutputFormat,
};

#[derive(Parser)]
#[command(
    name = "transition-cli",
    version,
    about = "Phase-transition laboratory for averaged products of characteristic polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Jack-polynomial utilities.
    Jack {
        #[command(subcommand)]
        command: JackCommand,
    },
    /// Evaluate a vector-argument hypergeometric series.
    Hyperg(HypergArgs),
    /// Joint eigenvalue density of a sourced ensemble at a configuration.
    Density(DensityArgs),
    /// Draw eigenvalue samples from a sourced ensemble.
    Sample(SampleArgs),
    /// Average a product of characteristic polynomials.
    Kavg(KavgArgs),
    /// Compare both sides of the argument/source swap identity.
    Duality(DualityArgs),
    /// Evaluate a window-limit function.
    Limit(LimitArgs),
    /// Classify a (t, b) parameter point and print its window map.
    Classify(ClassifyArgs),
    /// Run a convergence scan from a JSON config file.
    Scan(ScanArgs),
}

#[derive(Subcommand)]
enum JackCommand {
    /// Evaluate P_kappa at a complex point.
    Eval(JackEvalArgs),
}

#[derive(Args)]
struct JackEvalArgs {
    /// Partition parts, weakly decreasing, e.g. "3,1".
    #[arg(long)]
    kappa: String,
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// Evaluation point: comma-separated entries like "0.5,1+2i,-0.3i".
    #[arg(long)]
    x: String,
}

#[derive(Args)]
struct HypergArgs {
    /// Upper parameters, comma-separated; empty for none.
    #[arg(long, default_value = "")]
    upper: String,
    /// Lower parameters, comma-separated; empty for none.
    #[arg(long, default_value = "")]
    lower: String,
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    /// First argument vector (complex entries allowed).
    #[arg(long)]
    x: String,
    /// Optional second argument vector of the same length.
    #[arg(long)]
    y: Option<String>,
    #[arg(long, default_value_t = 80)]
    max_degree: usize,
    #[arg(long, default_value_t = 1e-12)]
    tail_tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Gaussian,
    Laguerre,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Gaussian => Family::Gaussian,
            FamilyArg::Laguerre => Family::Laguerre,
        }
    }
}

#[derive(Args)]
struct DensityArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, default_value_t = 2.0)]
    beta: f64,
    /// Matrix size.
    #[arg(long)]
    n_dim: usize,
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    /// Source entries (length n-dim); empty means an unsourced ensemble.
    #[arg(long, default_value = "")]
    f: String,
    /// Half-line exponent (Laguerre only).
    #[arg(long)]
    a: Option<f64>,
    /// Eigenvalue configuration to evaluate at.
    #[arg(long)]
    x: String,
    #[arg(long, default_value_t = 80)]
    max_degree: usize,
    #[arg(long, default_value_t = 1e-12)]
    tail_tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SampleMethod {
    Auto,
    Matrix,
    Sde,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, default_value_t = 2.0)]
    beta: f64,
    #[arg(long)]
    n_dim: usize,
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    #[arg(long, default_value = "")]
    f: String,
    #[arg(long)]
    a: Option<f64>,
    #[arg(long, value_enum, default_value_t = SampleMethod::Auto)]
    method: SampleMethod,
    /// SDE macro step (SDE route only).
    #[arg(long)]
    dt: Option<f64>,
    #[arg(long, default_value_t = 1)]
    samples: usize,
    #[arg(long)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KavgMethod {
    Auto,
    Quad,
    Mc,
}

#[derive(Args)]
struct KavgArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, default_value_t = 2.0)]
    beta: f64,
    /// Matrix size.
    #[arg(long)]
    n_dim: usize,
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    /// Bulk source location.
    #[arg(long, default_value_t = 0.0)]
    b: f64,
    /// Designated source entries ahead of the bulk.
    #[arg(long, default_value = "")]
    spikes: String,
    #[arg(long)]
    a: Option<f64>,
    /// Polynomial arguments (complex entries allowed).
    #[arg(long)]
    s: String,
    #[arg(long, value_enum, default_value_t = KavgMethod::Auto)]
    method: KavgMethod,
    #[arg(long, default_value_t = 20000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = 80)]
    max_degree: usize,
    #[arg(long, default_value_t = 1e-12)]
    tail_tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum DualityModeArg {
    Quad,
    Mc,
}

#[derive(Args)]
struct DualityArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, default_value_t = 2.0)]
    beta: f64,
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    #[arg(long)]
    a: Option<f64>,
    /// Polynomial arguments (complex entries allowed in quad mode).
    #[arg(long)]
    s: String,
    /// Source entries, one per eigenvalue.
    #[arg(long, default_value = "")]
    f: String,
    #[arg(long, value_enum, default_value_t = DualityModeArg::Quad)]
    mode: DualityModeArg,
    #[arg(long, default_value_t = 20000)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 80)]
    max_degree: usize,
    #[arg(long, default_value_t = 1e-12)]
    tail_tol: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LimitKindArg {
    /// Quartic window at the real-line transition.
    Pearcey,
    /// Gaussian window past the real-line transition.
    Gauss,
    /// Wall window at the half-line transition.
    Critb,
    /// Hard-wall window past the half-line transition.
    Hardw,
}

#[derive(Args)]
struct LimitArgs {
    #[arg(long, value_enum)]
    kind: LimitKindArg,
    #[arg(long, default_value_t = 1.0)]
    alpha: f64,
    /// Half-line exponent (critb/hardw only).
    #[arg(long)]
    a: Option<f64>,
    #[arg(long, default_value_t = 0.0)]
    tau: f64,
    #[arg(long)]
    y: String,
    #[arg(long, default_value = "")]
    sigma: String,
    #[arg(long, default_value_t = 80)]
    max_degree: usize,
    #[arg(long, default_value_t = 1e-12)]
    tail_tol: f64,
    #[arg(long, default_value_t = 20000)]
    samples: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    t: f64,
    #[arg(long)]
    b: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Args)]
struct ScanArgs {
    /// JSON config file; flags below override its fields.
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    workers: Option<usize>,
}

fn parse_signed_unit(s: &str) -> Result<f64> {
    match s.trim() {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        other => other.parse::<f64>().with_context(|| format!("bad number '{other}'")),
    }
}

/// Parse one complex entry: "1.5", "1+2i", "-0.3i", "2e-3-1e-4i", "i".
fn parse_complex(raw: &str) -> Result<Complex64> {
    let s = raw.trim();
    if s.is_empty() {
        bail!("empty complex entry");
    }
    if let Ok(re) = s.parse::<f64>() {
        return Ok(Complex64::new(re, 0.0));
    }
    let body = s
        .strip_suffix('i')
        .or_else(|| s.strip_suffix('I'))
        .ok_or_else(|| anyhow!("cannot parse complex entry '{raw}'"))?;
    if let Ok(im) = parse_signed_unit(body) {
        return Ok(Complex64::new(0.0, im));
    }
    let bytes = body.as_bytes();
    for pos in (1..bytes.len()).rev() {
        let c = bytes[pos] as char;
        if (c == '+' || c == '-') && !matches!(bytes[pos - 1] as char, 'e' | 'E') {
            let re: f64 = body[..pos]
                .trim()
                .parse()
                .with_context(|| format!("bad real part in '{raw}'"))?;
            let im = parse_signed_unit(&body[pos..])?;
            return Ok(Complex64::new(re, im));
        }
    }
    bail!("cannot parse complex entry '{raw}'")
}

fn complex_list(raw: &str) -> Result<Vec<Complex64>> {
    if raw.trim().is_empty() {
        return Ok(vec![]);
    }
    raw.split(',').map(parse_complex).collect()
}

fn f64_list(raw: &str) -> Result<Vec<f64>> {
    if raw.trim().is_empty() {
        return Ok(vec![]);
    }
    raw.split(',')
        .map(|p| p.trim().parse::<f64>().with_context(|| format!("bad number '{p}'")))
        .collect()
}

fn usize_list(raw: &str) -> Result<Vec<usize>> {
    if raw.trim().is_empty() {
        return Ok(vec![]);
    }
    raw.split(',')
        .map(|p| p.trim().parse::<usize>().with_context(|| format!("bad integer '{p}'")))
        .collect()
}

fn fmt_complex(z: Complex64) -> String {
    format!("({}, {})", sig17(z.re), sig17(z.im))
}

fn truncation(max_degree: usize, tail_tol: f64) -> TruncationPolicy {
    TruncationPolicy { max_degree, tail_tol }
}

fn build_spec(
    family: FamilyArg,
    beta: f64,
    n_dim: usize,
    t: f64,
    f_raw: &str,
    a: Option<f64>,
) -> Result<EnsembleSpec> {
    let mut f = f64_list(f_raw)?;
    if f.is_empty() {
        f = vec![0.0; n_dim];
    }
    let spec = match family {
        FamilyArg::Gaussian => EnsembleSpec::gaussian(beta, n_dim, t, f)?,
        FamilyArg::Laguerre => {
            let a = a.ok_or_else(|| anyhow!("the half-line family needs --a"))?;
            EnsembleSpec::laguerre(beta, n_dim, t, f, a, None)?
        }
    };
    Ok(spec)
}

fn run_jack(args: &JackEvalArgs) -> Result<()> {
    let parts = usize_list(&args.kappa)?;
    let xs = complex_list(&args.x)?;
    if xs.is_empty() {
        bail!("--x needs at least one coordinate");
    }
    let kappa = Partition::new(parts)?;
    let poly = jack_polynomial(&kappa, &JackParams::new(args.alpha, xs.len())?)?;
    let value = jack_eval(&poly, &xs)?;
    println!("value = {}", fmt_complex(value));
    println!("eigenvalue = {}", sig17(poly.eigenvalue));
    Ok(())
}

fn run_hyperg(args: &HypergArgs) -> Result<()> {
    let x = complex_list(&args.x)?;
    if x.is_empty() {
        bail!("--x needs at least one coordinate");
    }
    let spec =
        HypergeometricSpec::new(f64_list(&args.upper)?, f64_list(&args.lower)?, args.alpha, x.len())?;
    let policy = truncation(args.max_degree, args.tail_tol);
    let out = match &args.y {
        Some(y_raw) => {
            let y = complex_list(y_raw)?;
            hyperg_two_set(&spec, &x, &y, &policy)?
        }
        None => hyperg_one_set(&spec, &x, &policy)?,
    };
    println!("value = {}", fmt_complex(out.value));
    println!(
        "degrees_used = {} last_shell = {} converged = {}",
        out.degrees_used,
        sig17(out.last_shell),
        out.converged
    );
    Ok(())
}

fn run_density(args: &DensityArgs) -> Result<()> {
    let spec = build_spec(args.family, args.beta, args.n_dim, args.t, &args.f, args.a)?;
    let x = f64_list(&args.x)?;
    let value = density(&spec, &x, &truncation(args.max_degree, args.tail_tol))?;
    println!("density = {}", sig17(value));
    Ok(())
}

fn run_sample(args: &SampleArgs) -> Result<()> {
    let spec = build_spec(args.family, args.beta, args.n_dim, args.t, &args.f, args.a)?;
    let auto = Sampler::auto(&spec);
    let use_matrix = match args.method {
        SampleMethod::Matrix => true,
        SampleMethod::Sde => false,
        SampleMethod::Auto => matches!(auto, Sampler::MatrixModel),
    };
    let horizon = ensemble_horizon(&spec);
    let config = SdeConfig {
        scheme: Scheme::EulerMaruyama,
        dt: args.dt.unwrap_or(horizon / 2000.0),
        t_final: horizon,
        collision_floor: 1e-12,
        seed: args.seed,
    };
    for path in 0..args.samples {
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        rng.set_stream(path as u64);
        let sample = if use_matrix {
            sample_matrix_model(&spec, &mut rng)?
        } else {
            sample_sde_with(&spec, &config, &mut rng)?
        };
        let line: Vec<String> = sample.values.iter().map(|&v| sig17(v)).collect();
        println!("{}", line.join(","));
    }
    Ok(())
}

fn run_kavg(args: &KavgArgs) -> Result<()> {
    let s = complex_list(&args.s)?;
    if s.is_empty() {
        bail!("--s needs at least one argument");
    }
    let spikes = f64_list(&args.spikes)?;
    let use_quad = match args.method {
        KavgMethod::Quad => true,
        KavgMethod::Mc => false,
        KavgMethod::Auto => s.len() <= 3,
    };
    let policy = truncation(args.max_degree, args.tail_tol);
    if use_quad {
        let opts = QuadOptions { tol_abs: 1e-12, tol_rel: 1e-10, max_intervals: 800 };
        let kv = match args.family {
            FamilyArg::Gaussian => exact_k_gaussian(
                &s,
                args.beta,
                args.n_dim,
                args.t,
                args.b,
                &spikes,
                &policy,
                &opts,
            )?,
            FamilyArg::Laguerre => {
                let a = args.a.ok_or_else(|| anyhow!("the half-line family needs --a"))?;
                exact_k_laguerre(
                    &s, args.beta, args.n_dim, args.t, a, args.b, &spikes, &policy, &opts,
                )?
            }
        };
        println!("value = {}", fmt_complex(kv.value));
        println!("est_error = {} method = quadrature", sig17(kv.est_error));
    } else {
        let mut f = spikes;
        match args.family {
            FamilyArg::Gaussian => {
                let free = args.n_dim.checked_sub(f.len()).ok_or_else(|| {
                    anyhow!("more designated entries than the matrix size {}", args.n_dim)
                })?;
                if args.b > 0.0 && free % 2 != 0 {
                    bail!("the bulk splits into equal halves only when N + r is even");
                }
                let edge = (args.beta / 2.0).sqrt() * args.b;
                f.extend(std::iter::repeat(edge).take(free / 2));
                f.extend(std::iter::repeat(-edge).take(free - free / 2));
            }
            FamilyArg::Laguerre => {
                let free = args.n_dim.checked_sub(f.len()).ok_or_else(|| {
                    anyhow!("more designated entries than the matrix size {}", args.n_dim)
                })?;
                f.extend(std::iter::repeat(args.beta * args.b / 2.0).take(free));
            }
        }
        let spec = match args.family {
            FamilyArg::Gaussian => EnsembleSpec::gaussian(args.beta, args.n_dim, args.t, f)?,
            FamilyArg::Laguerre => {
                let a = args.a.ok_or_else(|| anyhow!("the half-line family needs --a"))?;
                EnsembleSpec::laguerre(args.beta, args.n_dim, args.t, f, a, None)?
            }
        };
        let sampler = Sampler::auto(&spec);
        let query = CharPolyQuery::new(s, spec)?;
        let est =
            mc_charpoly_avg_with_workers(&query, &sampler, args.samples, args.seed, args.workers)?;
        println!("value = {}", fmt_complex(est.mean));
        println!(
            "est_error = {} method = monte-carlo samples = {} seed = {}",
            sig17(est.stderr),
            est.samples,
            est.seed
        );
    }
    Ok(())
}

fn run_duality(args: &DualityArgs) -> Result<()> {
    let s = complex_list(&args.s)?;
    let f = f64_list(&args.f)?;
    let mode = match args.mode {
        DualityModeArg::Quad => DualityMode::Quadrature,
        DualityModeArg::Mc => DualityMode::MonteCarlo { samples: args.samples, seed: args.seed },
    };
    let policy = truncation(args.max_degree, args.tail_tol);
    let opts = QuadOptions { tol_abs: 1e-12, tol_rel: 1e-10, max_intervals: 800 };
    let check = match args.family {
        FamilyArg::Gaussian => {
            duality_check_gaussian(&s, &f, args.beta, args.t, &mode, &policy, &opts)?
        }
        FamilyArg::Laguerre => {
            let a = args.a.ok_or_else(|| anyhow!("the half-line family needs --a"))?;
            duality_check_laguerre(&s, &f, a, args.beta, args.t, &mode, &policy, &opts)?
        }
    };
    println!("lhs = {} err = {}", fmt_complex(check.lhs), sig17(check.lhs_err));
    println!("rhs = {} err = {}", fmt_complex(check.rhs), sig17(check.rhs_err));
    println!("gap = {}", sig17(check.gap()));
    Ok(())
}

fn run_limit(args: &LimitArgs) -> Result<()> {
    let y: Vec<Complex64> = complex_list(&args.y)?;
    let sigma: Vec<Complex64> = complex_list(&args.sigma)?;
    if y.is_empty() {
        bail!("--y needs at least one coordinate");
    }
    let policy = EvalPolicy {
        series: truncation(args.max_degree, args.tail_tol),
        mc_samples: args.samples,
        mc_seed: args.seed,
        ..EvalPolicy::default()
    };
    let need_a = || args.a.ok_or_else(|| anyhow!("this window needs --a"));
    let out = match args.kind {
        LimitKindArg::Pearcey => pearcey_p_z(args.alpha, args.tau, &y, &sigma, &policy)?,
        LimitKindArg::Gauss => gauss_g_z(args.alpha, &y, &sigma, &policy)?,
        LimitKindArg::Critb => crit_b_z(need_a()?, args.alpha, args.tau, &y, &sigma, &policy)?,
        LimitKindArg::Hardw => hard_w_z(need_a()?, args.alpha, &y, &sigma, &policy)?,
    };
    println!("value = {}", fmt_complex(out.value));
    println!("est_error = {} method = {:?}", sig17(out.est_error), out.method);
    Ok(())
}

fn run_classify(args: &ClassifyArgs) -> Result<()> {
    let report = classify_regime(args.family.into(), args.t, args.b)?;
    println!("family = {}", report.family.as_str());
    println!("regime = {}", regime_name(report.regime));
    let saddles: Vec<String> = report.saddle_points.iter().map(|&z| fmt_complex(z)).collect();
    println!("saddle_points = {}", saddles.join(" "));
    if report.family == Family::Gaussian {
        let worst = report
            .saddle_points
            .iter()
            .map(|&z| gaussian_saddle_residual(z, args.t, args.b))
            .fold(0.0f64, f64::max);
        println!("max_saddle_residual = {}", sig17(worst));
    }
    println!(
        "window: s = v + y / (rho * N^e) with v = {} rho = {} e = {}",
        sig17(report.scaling.v),
        sig17(report.scaling.rho),
        sig17(report.scaling.n_exponent)
    );
    Ok(())
}

fn run_scan(args: &ScanArgs) -> Result<()> {
    let mut config = ExperimentConfig::from_path(
        args.config.to_str().ok_or_else(|| anyhow!("config path is not valid UTF-8"))?,
    )?;
    if let Some(seed) = args.seed {
        config.seed = Some(seed);
    }
    if let Some(max_degree) = args.max_degree {
        config.max_degree = max_degree;
    }
    if let Some(samples) = args.samples {
        config.samples = samples;
    }
    if let Some(workers) = args.workers {
        config.workers = workers;
    }
    if let Some(format) = args.format {
        config.format = match format {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        };
    }
    if let Some(out) = &args.out {
        config.out =
            Some(out.to_str().ok_or_else(|| anyhow!("output path is not valid UTF-8"))?.into());
    }

    let result = run_convergence_scan(&config)?;
    for row in result.rows.iter().filter(|r| r.error.is_some()) {
        eprintln!(
            "warning: row N = {} y = {:?} aborted: {}",
            row.n_dim,
            row.y,
            row.error.as_deref().unwrap_or("")
        );
    }
    match &result.config.out {
        Some(path) => {
            emit(&result, std::path::Path::new(path), result.config.format)?;
            let good = result.rows.iter().filter(|r| r.error.is_none()).count();
            println!(
                "wrote {} rows ({} aborted) to {}",
                good,
                result.rows.len() - good,
                path
            );
        }
        None => print!("{}", render(&result, result.config.format)?),
    }
    Ok(())
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    match &cli.command {
        Command::Jack { command: JackCommand::Eval(args) } => run_jack(args),
        Command::Hyperg(args) => run_hyperg(args),
        Command::Density(args) => run_density(args),
        Command::Sample(args) => run_sample(args),
        Command::Kavg(args) => run_kavg(args),
        Command::Duality(args) => run_duality(args),
        Command::Limit(args) => run_limit(args),
        Command::Classify(args) => run_classify(args),
        Command::Scan(args) => run_scan(args),
    }
}
