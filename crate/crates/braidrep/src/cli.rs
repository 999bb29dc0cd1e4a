//! Command-line front end: argument parsing, validation and the three commands.

use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Result;
use braidrep_core::elliptic::{check_daha_on, check_elliptic_on, check_scalars_on, AmbientOps, Mode, WOperator, WOps};
use braidrep_core::linalg::SparseMat;
use braidrep_core::rea::{Conventions, YShape};
use braidrep_core::report::Report;
use braidrep_core::scalars::{Jet, RatFunc};
use braidrep_core::slnjets::{
    build_formal_ops, check_hecke, check_omega, check_yis, coefficient, extract_degenerate, KParam,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::files::{write_atomic, BasisCache};
use crate::json::{to_text, BasisJson, MatrixJson, ReportJson, ScalarText};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Random evaluation points used by the probabilistic pre-screen.
pub const PRESCREEN_TRIALS: usize = 3;
pub const PRESCREEN_SEED: u64 = 0x5eed;

#[derive(Parser, Debug)]
#[command(
    name = "braidrep",
    version,
    about = "Exact checks of elliptic braid group and DAHA representations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Elliptic braid relations, scalar identities and the Hecke quotient on W.
    CheckElliptic(EllipticArgs),
    /// The sl_N Hecke relation and the trigonometric degeneration of T_i, Y_i.
    CheckDegeneration(DegenerationArgs),
    /// Write every operator on V^n (x) A and on W, and the basis of W, as JSON.
    Export(ExportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    /// Random-point pre-screen followed by the exact check.
    ProbabilisticThenExact,
}

#[derive(Args, Debug, Clone)]
pub struct EllipticArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long = "K")]
    pub k: usize,
    #[arg(long, value_enum, default_value = "exact")]
    pub mode: ModeArg,
    /// Also write the operators into the output directory.
    #[arg(long)]
    pub export: bool,
    /// Evaluate exported matrices at a point, e.g. `s=2`.
    #[arg(long)]
    pub eval: Option<String>,
    /// Directory for report files and exports.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct DegenerationArgs {
    #[arg(long = "N")]
    pub big_n: i64,
    #[arg(long)]
    pub n: usize,
    /// `k` for the symbolic parameter, or a rational value such as `1/2`.
    #[arg(long, default_value = "k")]
    pub k: String,
    #[arg(long, default_value_t = braidrep_core::slnjets::DEFAULT_ORDER)]
    pub jet_order: usize,
    #[arg(long)]
    pub export: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct ExportArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long = "K")]
    pub k: usize,
    #[arg(long)]
    pub eval: Option<String>,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

/// A usage error: exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Usage(msg.into()).into())
}

/// Parse `s=<rational>`.
pub fn parse_eval(text: &str) -> Result<BigRational> {
    let Some(value) = text.strip_prefix("s=") else {
        return usage(format!("--eval expects s=<rational>, got {text:?}"));
    };
    match value.parse::<BigRational>() {
        Ok(v) => Ok(v),
        Err(_) => usage(format!("--eval expects s=<rational>, got {text:?}")),
    }
}

/// Parse `k` or a rational value.
pub fn parse_k(text: &str) -> Result<KParam> {
    if text == "k" {
        return Ok(KParam::Symbolic);
    }
    match text.parse::<BigRational>() {
        Ok(v) => Ok(KParam::Value(v)),
        Err(_) => usage(format!("--k expects `k` or a rational, got {text:?}")),
    }
}

fn validate_nk(n: usize) -> Result<()> {
    if n < 1 {
        return usage("--n must be at least 1");
    }
    Ok(())
}

/// Conventions attached to every report.
pub fn convention_facts(rep: &mut Report) {
    let c = Conventions::default();
    rep.fact(
        "coproduct",
        "Delta(E) = E (x) 1 + K (x) E, Delta(F) = F (x) K^-1 + 1 (x) F",
    );
    rep.fact("braiding", "sigma = flip R");
    rep.fact(
        "orientation",
        format!(
            "coaction sigma^{}, product sigma^{}, Y1 double braiding^{}",
            c.coaction, c.product, c.y
        ),
    );
    rep.fact("coaction normalization", "delta = delta_raw curl^-1, counit f(K^-1 v)");
}

fn degeneration_facts(rep: &mut Report) {
    rep.fact(
        "R rescaling",
        "sigma_VV = u^-1 Jimbo R-check with q = u^N, eigenvalues u^(N-1), -u^(-N-1)",
    );
    rep.fact("substitution", "q = e^h, t = u^N = e^(nkh)");
}

/// Outputs of one command: reports plus files to write.
pub struct RunOutput {
    pub reports: Vec<Report>,
    pub files: Vec<(PathBuf, String)>,
}

impl RunOutput {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(Report::all_passed)
    }

    pub fn text(&self) -> String {
        self.reports
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn report_files(out: &Option<PathBuf>, reports: &[Report]) -> Result<Vec<(PathBuf, String)>> {
    let Some(dir) = out else { return Ok(Vec::new()) };
    let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
    let json: Vec<_> = reports.iter().map(ReportJson::from_report).collect();
    Ok(vec![
        (dir.join("report.txt"), text),
        (dir.join("report.json"), to_text(&json)?),
    ])
}

fn timed(mut rep: Report, start: Instant) -> Report {
    rep.fact("elapsed ms", start.elapsed().as_millis().to_string());
    rep
}

fn build(n: usize, k: usize, cache: &BasisCache) -> Result<(AmbientOps, WOps)> {
    let ambient = AmbientOps::new(n, k, Conventions::default(), YShape::DoubleBraiding)?;
    let basis = cache.basis(n, k)?;
    let w = WOps::with_basis(&ambient, basis);
    Ok((ambient, w))
}

/// `check-elliptic`.
pub fn run_elliptic(args: &EllipticArgs, cache: &BasisCache) -> Result<RunOutput> {
    validate_nk(args.n)?;
    let point = args.eval.as_deref().map(parse_eval).transpose()?;
    let (ambient, w) = build(args.n, args.k, cache)?;
    let origin = Instant::now();
    let clock = move || origin.elapsed().as_millis() as u64;
    let mut reports = Vec::new();
    if args.mode == ModeArg::ProbabilisticThenExact {
        let start = Instant::now();
        let mode = Mode::Probabilistic {
            trials: PRESCREEN_TRIALS,
            seed: PRESCREEN_SEED,
        };
        let mut rep = check_elliptic_on(&ambient, &w, mode, Some(&clock));
        rep.title = format!("pre-screen: {}", rep.title);
        reports.push(timed(rep, start));
    }
    let start = Instant::now();
    let mut rep = check_elliptic_on(&ambient, &w, Mode::Exact, Some(&clock));
    convention_facts(&mut rep);
    reports.push(timed(rep, start));
    let start = Instant::now();
    let rep = check_scalars_on(&ambient, &w)?;
    reports.push(timed(rep, start));
    let start = Instant::now();
    let rep = check_daha_on(&ambient, &w)?;
    reports.push(timed(rep, start));
    let mut files = report_files(&args.out, &reports)?;
    if args.export {
        let Some(dir) = &args.out else {
            return usage("--export needs --out");
        };
        files.extend(operator_files(dir, &ambient, &w, point.as_ref())?);
    }
    Ok(RunOutput { reports, files })
}

/// `check-degeneration`.
pub fn run_degeneration(args: &DegenerationArgs) -> Result<RunOutput> {
    if args.big_n < 2 {
        return usage(format!("--N must be at least 2, got {}", args.big_n));
    }
    validate_nk(args.n)?;
    if args.jet_order < 2 {
        return usage(format!("--jet-order must be at least 2, got {}", args.jet_order));
    }
    let big_n = args.big_n as usize;
    let k = parse_k(&args.k)?;
    let mut reports = Vec::new();
    let start = Instant::now();
    let mut hecke = check_hecke(big_n);
    degeneration_facts(&mut hecke);
    reports.push(timed(hecke, start));
    let start = Instant::now();
    let omega = check_omega(big_n);
    reports.push(timed(omega, start));
    let start = Instant::now();
    let yis = check_yis(big_n, args.n, &k, args.jet_order)?;
    reports.push(timed(yis, start));
    let mut files = report_files(&args.out, &reports)?;
    if args.export {
        let Some(dir) = &args.out else {
            return usage("--export needs --out");
        };
        files.extend(degeneration_files(dir, big_n, args.n, &k, args.jet_order)?);
    }
    Ok(RunOutput { reports, files })
}

/// `export`.
pub fn run_export(args: &ExportArgs, cache: &BasisCache) -> Result<RunOutput> {
    validate_nk(args.n)?;
    let point = args.eval.as_deref().map(parse_eval).transpose()?;
    let (ambient, w) = build(args.n, args.k, cache)?;
    let files = operator_files(&args.out, &ambient, &w, point.as_ref())?;
    let mut rep = Report::new(format!("export, n = {}, K = {}", args.n, args.k));
    convention_facts(&mut rep);
    rep.fact("dim W", w.dim().to_string());
    rep.fact("files", files.len().to_string());
    Ok(RunOutput {
        reports: vec![rep],
        files,
    })
}

fn matrix_file<T: ScalarText>(dir: &Path, name: &str, m: &SparseMat<T>) -> Result<(PathBuf, String)> {
    Ok((dir.join(format!("{name}.json")), to_text(&MatrixJson::from_matrix(m))?))
}

fn with_eval(
    dir: &Path,
    name: &str,
    m: &SparseMat<RatFunc>,
    point: Option<&BigRational>,
) -> Result<Vec<(PathBuf, String)>> {
    let mut out = vec![matrix_file(dir, name, m)?];
    if let Some(p) = point {
        out.push(matrix_file(
            dir,
            &format!("{name}_at_s={p}").replace('/', "_"),
            &m.eval(p)?,
        )?);
    }
    Ok(out)
}

/// Every operator on the ambient space and on `W`, and the basis of `W`.
pub fn operator_files(
    dir: &Path,
    ambient: &AmbientOps,
    w: &WOps,
    point: Option<&BigRational>,
) -> Result<Vec<(PathBuf, String)>> {
    let mut files = vec![(dir.join("basis.json"), to_text(&BasisJson::from_basis(&w.basis))?)];
    let ambient_groups: [(&str, &[SparseMat<RatFunc>]); 5] = [
        ("T", &ambient.t),
        ("Tinv", &ambient.t_inv),
        ("Y", &ambient.y),
        ("X", &ambient.x),
        ("Xinv", &ambient.x_inv),
    ];
    for (name, ops) in ambient_groups {
        for (i, m) in ops.iter().enumerate() {
            files.extend(with_eval(dir, &format!("{name}{}", i + 1), m, point)?);
        }
    }
    let w_groups: [(&str, &[WOperator]); 5] = [
        ("T", &w.t),
        ("Tinv", &w.t_inv),
        ("Y", &w.y),
        ("X", &w.x),
        ("Xinv", &w.x_inv),
    ];
    for (name, ops) in w_groups {
        for (i, op) in ops.iter().enumerate() {
            files.extend(with_eval(dir, &format!("W_{name}{}", i + 1), &op.matrix, point)?);
        }
    }
    Ok(files)
}

fn degeneration_files(dir: &Path, big_n: usize, n: usize, k: &KParam, order: usize) -> Result<Vec<(PathBuf, String)>> {
    let ops = build_formal_ops(big_n, n, k, order)?;
    let deg = extract_degenerate(&ops)?;
    let mut files = vec![matrix_file::<Jet>(dir, "sigma", &ops.sigma)?];
    for (i, t) in ops.t.iter().enumerate() {
        files.push(matrix_file(dir, &format!("T{}", i + 1), t)?);
    }
    for (i, y) in ops.y.iter().enumerate() {
        files.push(matrix_file(dir, &format!("Y{}", i + 1), y)?);
        files.push(matrix_file(dir, &format!("Y{}_h1", i + 1), &coefficient(y, 1))?);
    }
    for (i, s) in deg.s.iter().enumerate() {
        files.push(matrix_file(dir, &format!("s{}", i + 1), s)?);
    }
    for (i, y) in deg.y.iter().enumerate() {
        files.push(matrix_file(dir, &format!("y{}", i + 1), y)?);
    }
    Ok(files)
}

/// Write all files, each atomically.
pub fn write_files(files: &[(PathBuf, String)]) -> Result<()> {
    for (p, text) in files {
        write_atomic(p, text)?;
    }
    Ok(())
}

/// Run a parsed command line and return the exit code.
pub fn run(cli: Cli) -> i32 {
    let cache = BasisCache::from_env();
    let result = match &cli.command {
        Command::CheckElliptic(a) => run_elliptic(a, &cache),
        Command::CheckDegeneration(a) => run_degeneration(a),
        Command::Export(a) => run_export(a, &cache),
    };
    let output = match result.and_then(|o| write_files(&o.files).map(|_| o)) {
        Ok(o) => o,
        Err(e) if e.downcast_ref::<Usage>().is_some() => {
            eprintln!("usage error: {e}");
            return EXIT_USAGE;
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            return EXIT_FAIL;
        }
    };
    println!("{}", output.text());
    if output.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Parse the process arguments and run; clap's own usage errors exit with 2.
pub fn main_exit_code() -> i32 {
    match Cli::try_parse() {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let _ = e.print();
            code
        }
    }
}
