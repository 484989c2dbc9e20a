//! Command-line front end: Hilbert functions of point files, configuration
//! generation, closed-form prediction, and verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error, 3 invalid
//! geometry (e.g. duplicate points).

use fatpoints_cli::suites;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use fatpoints_core::configs::{generate_by_id, known_case_ids};
use fatpoints_core::error::Error;
use fatpoints_core::exactalg::numtheory::{is_prime, random_prime_31};
use fatpoints_core::formulas::{
    davis_split, predict_ci, predict_nine_double, predict_singular_cubic,
    predict_singular_support, predict_smooth_cubic, predict_uniform, NineBranch, SingularBranch,
    SmoothBranch,
};
use fatpoints_core::geometry::{hilbert_function_stabilized, pointfile};
use fatpoints_core::surface::LambdaOracle;
use fatpoints_core::{Field, HVector};

#[derive(Parser)]
#[command(
    name = "fatpoints",
    about = "Exact Hilbert functions of fat point subschemes of the projective plane",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the Hilbert function and its first difference for a point file.
    Hv(HvArgs),
    /// Generate a named point configuration (point file plus JSON sidecar).
    Config(ConfigArgs),
    /// Print the closed-form difference function of a formula family.
    Predict(PredictArgs),
    /// Run a verification suite (brute force vs. formulas).
    Verify(VerifyArgs),
    /// Inspect a point file against a cubic: membership, smoothness, and the
    /// group sum of the smooth points.
    Curve(CurveArgs),
}

#[derive(Args)]
struct HvArgs {
    /// Point file: optional `# field q` header, then `x y z m` per line.
    #[arg(long)]
    points: PathBuf,
    /// Highest degree to print for h (defaults to the stabilization degree).
    #[arg(long)]
    tmax: Option<usize>,
    /// Override ground field: `rational` or a prime.
    #[arg(long)]
    field: Option<String>,
    /// Emit JSON instead of the two text lines.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConfigArgs {
    /// Case id, e.g. `nine.7.ci`, `split.6-3`, `ci.4`,
    /// `oncubic.smooth.n12.m2.generic`, `oncubic.nodal.n13.m2.generic.singular`.
    #[arg(long)]
    case: String,
    /// Seed for the generator (default: FATPOINTS_SEED or 42).
    #[arg(long)]
    seed: Option<u64>,
    /// Ground field: `random` (31-bit prime drawn from the seed), `rational`,
    /// or an explicit prime.
    #[arg(long, default_value = "random")]
    field: String,
    /// Output point-file path (sidecar written next to it with `.json`).
    #[arg(long)]
    out: Option<PathBuf>,
    /// List the known case ids and exit.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct PredictArgs {
    /// Formula family: nine | ci | smooth-cubic | singular-cubic | uniform |
    /// singular-support | davis.
    #[arg(long)]
    formula: String,
    /// Case number for `nine` (1..8).
    #[arg(long)]
    case: Option<usize>,
    /// Branch: `max`/`min`/row index for nine; `a`/`b-i`/`b-ii` for
    /// smooth-cubic; `d0`/`d1-first`/`d1-second`/`d2` for singular-cubic.
    #[arg(long)]
    branch: Option<String>,
    /// Degree t for `ci`, or the split degree for `davis`.
    #[arg(long)]
    t: Option<usize>,
    /// Number of points.
    #[arg(long)]
    n: Option<usize>,
    /// Multiplicity.
    #[arg(long)]
    m: Option<u32>,
    /// Torsion order lambda for `uniform` (`generic` or an integer).
    #[arg(long, default_value = "generic")]
    lambda: String,
    /// Highest degree for `singular-support`.
    #[arg(long)]
    tmax: Option<usize>,
    /// Difference function for `davis`, space- or comma-separated.
    #[arg(long)]
    dh: Option<String>,
    /// Emit JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CurveArgs {
    /// Curve spec: `weierstrass a b [q]`, `nodal [q]`, `cuspidal [q]`, or
    /// `reducible <form>;<form>[;<form>]`.
    #[arg(long)]
    spec: String,
    /// Point file to check against the curve.
    #[arg(long)]
    points: PathBuf,
    /// Bound for the order search of the point sum.
    #[arg(long, default_value_t = 100)]
    bound: u64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: table3 | ci | smooth-cubic | singular-cubic | uniform |
    /// invariants | all.
    suite: String,
    /// Master seed (default: FATPOINTS_SEED or 42).
    #[arg(long)]
    seed: Option<u64>,
    /// Highest complete-intersection degree for the `ci` suite.
    #[arg(long, default_value_t = 7)]
    tmax: usize,
    /// Emit a JSON report.
    #[arg(long)]
    json: bool,
}

fn default_seed(explicit: Option<u64>) -> u64 {
    explicit
        .or_else(|| {
            std::env::var("FATPOINTS_SEED")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(42)
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } => 2,
        Error::InvalidInput(_) | Error::MixedField | Error::DimensionMismatch(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Hv(args) => run_hv(args),
        Command::Config(args) => run_config(args),
        Command::Predict(args) => run_predict(args),
        Command::Verify(args) => run_verify(args),
        Command::Curve(args) => run_curve(args),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

#[derive(Serialize)]
struct HvReport {
    field: String,
    degree: u64,
    regularity: usize,
    h: Vec<u64>,
    dh: Vec<u64>,
}

fn run_hv(args: HvArgs) -> Result<ExitCode, Error> {
    let mut text = std::fs::read_to_string(&args.points)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", args.points.display())))?;
    if let Some(field_spec) = &args.field {
        // Override the file's field: drop any header and re-prepend.
        let body: String = text
            .lines()
            .filter(|l| !l.trim_start().starts_with("# field"))
            .collect::<Vec<_>>()
            .join("\n");
        text = match field_spec.as_str() {
            "rational" => body,
            q => {
                let q: u64 = q
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("invalid field `{q}`")))?;
                if !is_prime(q) {
                    return Err(Error::InvalidInput(format!("{q} is not prime")));
                }
                format!("# field {q}\n{body}\n")
            }
        };
    }
    let parsed = pointfile::parse(&text)?;
    let field = parsed.field;
    let (scheme, _) = parsed.into_scheme()?;
    let h = hilbert_function_stabilized(&scheme)?;
    let dh = h.to_difference()?;
    let reg = dh.len();
    let h_values: Vec<u64> = match args.tmax {
        None => h.values().to_vec(),
        Some(tmax) => (0..=tmax).map(|t| h.at(t)).collect(),
    };
    if args.json {
        let report = HvReport {
            field: field.to_string(),
            degree: scheme.degree(),
            regularity: reg,
            h: h_values,
            dh: dh.values().to_vec(),
        };
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        println!("h: {}", join(&h_values));
        println!("dh: {}", dh);
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ConfigSidecar {
    case: String,
    seed: u64,
    field: String,
    n: usize,
    multiplicities: Vec<u32>,
    expected_scale: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<Vec<u64>>,
    points_file: String,
}

fn run_config(args: ConfigArgs) -> Result<ExitCode, Error> {
    if args.list {
        for id in known_case_ids() {
            println!("{id}");
        }
        println!("split.<a>-<b>[-...]");
        println!("oncubic.<smooth|nodal|cuspidal|conicline|lines3>.n<n>.m<m>.<generic|sum1|sum<k>>[.singular]");
        return Ok(ExitCode::SUCCESS);
    }
    let seed = default_seed(args.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = match args.field.as_str() {
        "random" => Field::Prime(random_prime_31(&mut rng)),
        "rational" => Field::Rationals,
        q => {
            let q: u64 = q
                .parse()
                .map_err(|_| Error::InvalidInput(format!("invalid field `{q}`")))?;
            if !is_prime(q) {
                return Err(Error::InvalidInput(format!("{q} is not prime")));
            }
            Field::Prime(q)
        }
    };
    let cfg = generate_by_id(&args.case, field, &mut rng)?;
    let out_path = args
        .out
        .unwrap_or_else(|| PathBuf::from(format!("{}.points", cfg.case)));
    let sidecar_path = out_path.with_extension("json");
    let scheme = cfg.expected_scheme();
    let body = pointfile::serialize(&scheme, field);
    write_file(&out_path, body.as_bytes())?;
    let sidecar = ConfigSidecar {
        case: cfg.case.clone(),
        seed,
        field: field.to_string(),
        n: scheme.len(),
        multiplicities: scheme.mults().to_vec(),
        expected_scale: cfg.expected_scale,
        expected: cfg.expected.clone(),
        points_file: out_path.display().to_string(),
    };
    let json = serde_json::to_string_pretty(&sidecar).expect("serializable");
    write_file(&sidecar_path, format!("{json}\n").as_bytes())?;
    println!("wrote {} and {}", out_path.display(), sidecar_path.display());
    Ok(ExitCode::SUCCESS)
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Result<(), Error> {
    let mut file = std::fs::File::create(path)
        .map_err(|e| Error::InvalidInput(format!("cannot create {}: {e}", path.display())))?;
    file.write_all(bytes)
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
struct PredictReport {
    formula: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    branch: Option<String>,
    values: Vec<u64>,
}

fn run_predict(args: PredictArgs) -> Result<ExitCode, Error> {
    let need = |what: &str, opt: Option<usize>| {
        opt.ok_or_else(|| Error::InvalidInput(format!("--{what} required for this formula")))
    };
    match args.formula.as_str() {
        "nine" => {
            let case = need("case", args.case)?;
            let branch = NineBranch::parse(args.branch.as_deref().unwrap_or("max"))?;
            let p = predict_nine_double(case, branch)?;
            emit_prediction(&args, "nine", p.branch, p.dh.values())
        }
        "ci" => {
            let t = need("t", args.t)?;
            let p = predict_ci(t)?;
            emit_prediction(&args, "ci", p.branch, p.dh.values())
        }
        "smooth-cubic" => {
            let n = need("n", args.n)?;
            let branch = SmoothBranch::parse(args.branch.as_deref().unwrap_or("a"))?;
            let p = predict_smooth_cubic(n, branch)?;
            emit_prediction(&args, "smooth-cubic", p.branch, p.dh.values())
        }
        "singular-cubic" => {
            let n = need("n", args.n)?;
            let branch = SingularBranch::parse(args.branch.as_deref().unwrap_or("d0"))?;
            let p = predict_singular_cubic(n, branch)?;
            emit_prediction(&args, "singular-cubic", p.branch, p.dh.values())
        }
        "uniform" => {
            let n = need("n", args.n)?;
            let m = args
                .m
                .ok_or_else(|| Error::InvalidInput("--m required for uniform".into()))?;
            let lambda = match args.lambda.as_str() {
                "generic" => None,
                v => Some(v.parse::<u64>().map_err(|_| {
                    Error::InvalidInput(format!("invalid --lambda `{v}`"))
                })?),
            };
            let oracle = LambdaOracle::new(lambda);
            let p = predict_uniform(n, m, &oracle)?;
            emit_prediction(&args, "uniform", p.branch, p.dh.values())
        }
        "singular-support" => {
            let n = need("n", args.n)?;
            let m = args
                .m
                .ok_or_else(|| Error::InvalidInput("--m required for singular-support".into()))?;
            let tmax = args.tmax.unwrap_or(2 * (n + 1) / 3 + 2);
            let h0 = predict_singular_support(n, m, tmax)?;
            emit_prediction(&args, "singular-support", Some(format!("n={n},m={m}")), &h0)
        }
        "davis" => {
            let text = args
                .dh
                .as_deref()
                .ok_or_else(|| Error::InvalidInput("--dh required for davis".into()))?;
            let values: Vec<u64> = text
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse()
                        .map_err(|_| Error::InvalidInput(format!("invalid dh entry `{s}`")))
                })
                .collect::<Result<_, _>>()?;
            let t = need("t", args.t)?;
            let dh = HVector::difference(values);
            let split = davis_split(&dh, t)?;
            if args.json {
                let report = serde_json::json!({
                    "formula": "davis",
                    "d": split.d,
                    "w1": split.w1.values(),
                    "w2": split.w2.values(),
                });
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                println!("d: {}", split.d);
                println!("w1: {}", split.w1);
                println!("w2: {}", split.w2);
            }
            Ok(ExitCode::SUCCESS)
        }
        other => Err(Error::InvalidInput(format!(
            "unknown formula `{other}`; valid: nine, ci, smooth-cubic, singular-cubic, uniform, singular-support, davis"
        ))),
    }
}

fn emit_prediction(
    args: &PredictArgs,
    formula: &str,
    branch: Option<String>,
    values: &[u64],
) -> Result<ExitCode, Error> {
    if args.json {
        let report = PredictReport {
            formula: formula.to_string(),
            branch,
            values: values.to_vec(),
        };
        println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    } else {
        println!("{}", join(values));
    }
    Ok(ExitCode::SUCCESS)
}

fn run_curve(args: CurveArgs) -> Result<ExitCode, Error> {
    use fatpoints_core::cubicgroup::{self, CubicCurve, Order};
    let curve = CubicCurve::parse_spec(&args.spec)?;
    let text = std::fs::read_to_string(&args.points)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", args.points.display())))?;
    let parsed = pointfile::parse(&text)?;
    if parsed.field != curve.field() {
        return Err(Error::InvalidInput(format!(
            "point file is over {} but the curve is over {}",
            parsed.field,
            curve.field()
        )));
    }
    let (scheme, _) = parsed.into_scheme()?;
    let mut smooth_points = Vec::new();
    for p in scheme.points() {
        if !curve.contains(p) {
            println!("{p}: off the curve");
        } else if curve.is_smooth_point(p) {
            println!("{p}: smooth");
            smooth_points.push(curve.curve_point(p.clone())?);
        } else {
            println!("{p}: singular point of the curve");
        }
    }
    if smooth_points.len() == scheme.len() && !smooth_points.is_empty() {
        match cubicgroup::sum_of_points(&curve, &smooth_points) {
            Ok(sigma) => {
                match cubicgroup::order(&curve, &sigma, args.bound)? {
                    Order::Finite(k) => println!("sum of points has order {k}"),
                    Order::ExceedsBound => {
                        println!("sum of points has order exceeding {}", args.bound)
                    }
                }
            }
            Err(Error::Unsupported(msg)) => println!("group sum unavailable: {msg}"),
            Err(e) => return Err(e),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, Error> {
    let seed = default_seed(args.seed);
    let results = suites::run_suite(&args.suite, seed, args.tmax)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&results).expect("serializable"));
    } else {
        print!("{}", suites::render_text(&results));
    }
    let any_fail = results.iter().any(|r| r.status == suites::Status::Fail);
    Ok(if any_fail {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
