//! The `polyholes` command line.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
//! error, 3 construction contract violated, 4 parameter outside a domain,
//! 5 internal invariant broken.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{self, BoundsError};
use crate::constructions::{self, ConstructionError, ConstructionReport};
use crate::enumeration::{self, EnumError, Pruning, SearchOptions, ENUMERATION_CAP};
use crate::grid::Polyomino;
use crate::verify::{self, Check, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONTRACT: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

/// Census size accepted without `--cap`.
pub const DEFAULT_CLI_CAP: usize = 14;

#[derive(Debug, Parser)]
#[command(name = "polyholes", version, about = "Polyominoes with many holes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a member of one of the extremal families.
    Construct(ConstructArgs),
    /// Print the metrics of a polyomino file.
    Analyze {
        path: PathBuf,
    },
    /// Census of fixed polyominoes by hole count, as CSV.
    Enumerate(EnumerateArgs),
    /// Least size with m holes, for m = 1..=max-m, as CSV.
    Gtable(GtableArgs),
    /// Bounds on the largest hole count, as CSV.
    Bounds(BoundsArgs),
    /// Recompute a result and report one line per check.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Render a polyomino file.
    Render(RenderArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    S,
    A,
    R,
    Rext,
    Rprime,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    PolyText,
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PruningArg {
    Sound,
    Heuristic,
    None,
}

impl From<PruningArg> for Pruning {
    fn from(p: PruningArg) -> Self {
        match p {
            PruningArg::Sound => Pruning::Sound,
            PruningArg::Heuristic => Pruning::Heuristic,
            PruningArg::None => Pruning::None,
        }
    }
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    l: Option<u64>,
    /// Tile count, for `rprime`.
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, value_enum, default_value = "poly-text")]
    format: Format,
    /// Write the shape here and the summary to stdout; otherwise the shape
    /// goes to stdout and the summary to stderr.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Largest accepted `--max-n` (at most the hard cap of 18).
    #[arg(long, default_value_t = DEFAULT_CLI_CAP)]
    cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Node budget for searches past the census.
    #[arg(long, default_value_t = 1_000_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value = "sound")]
    pruning: PruningArg,
}

impl SearchArgs {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            node_budget: self.budget,
            pruning: self.pruning.into(),
        }
    }
}

#[derive(Debug, Args)]
struct GtableArgs {
    #[arg(long)]
    max_m: u32,
    /// Census size; rows the census does not reach are searched.
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct BoundsArgs {
    /// Single size; or use `--n-min`/`--n-max` for a range.
    #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
    n: Option<u64>,
    #[arg(long, requires = "n_max")]
    n_min: Option<u64>,
    #[arg(long, requires = "n_min")]
    n_max: Option<u64>,
    /// Lower bound on f(n) fed to `ub_from_lb` instead of the construction.
    #[arg(long)]
    lb: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RenderArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "ascii")]
    format: RenderFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum VerifyTarget {
    /// S_k, A_k and the bound at n_k - 2, for k = 1..=k-max.
    Theorem1 {
        #[arg(long, default_value_t = 8)]
        k_max: u32,
    },
    /// The asymptotic sandwich for R'_n over a range of n and the sizes m_k.
    Theorem2 {
        #[arg(long, default_value_t = 71400)]
        n_min: u64,
        #[arg(long, default_value_t = 71500)]
        n_max: u64,
        /// Also check n = m_k for k in k-min..=k-max.
        #[arg(long, default_value_t = 42)]
        k_min: u32,
        #[arg(long, default_value_t = 60)]
        k_max: u32,
        #[arg(long, default_value_t = 1.6)]
        c1: f64,
        #[arg(long, default_value_t = 1.2)]
        c2: f64,
    },
    /// Least sizes with m holes against the table of known values.
    Table1 {
        #[arg(long, default_value_t = 4)]
        m_max: u32,
        #[arg(long, default_value_t = 14)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Metric identities on seeded random polyominoes.
    Identities {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        max_n: usize,
    },
    /// Tile and hole counts of R_k and R_{k,l}.
    Rfamily {
        #[arg(long, default_value_t = 5)]
        k_max: u32,
        #[arg(long, default_value_t = 3)]
        k_ext_max: u32,
    },
    /// Perimeter facts over a census.
    Perimeter {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// The inequalities behind the asymptotic lower bound.
    Chain {
        #[arg(long, default_value_t = 200)]
        k_max: u32,
        #[arg(long, default_value_t = 1.6)]
        c1: f64,
    },
    /// Enumerator against the naive generator.
    Oracle {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match e {
            ConstructionError::ContractViolation { .. } => EXIT_CONTRACT,
            ConstructionError::Invalid(_) => EXIT_INTERNAL,
            _ => EXIT_DOMAIN,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        let code = match e {
            EnumError::ThreadPool(_) | EnumError::Internal(_) => EXIT_INTERNAL,
            _ => EXIT_DOMAIN,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Construction(c) => c.into(),
            BoundsError::ConsistencyFailure(m) => Failure::new(EXIT_INTERNAL, m),
            BoundsError::Precondition(m) => Failure::new(EXIT_DOMAIN, m),
        }
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Range(m) => Failure::new(EXIT_DOMAIN, m),
            VerifyError::Enumeration(e) => e.into(),
            VerifyError::Bounds(e) => e.into(),
            VerifyError::Construction(e) => e.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Construct(a) => construct(a, out, err),
        Command::Analyze { path } => analyze(&path, out),
        Command::Enumerate(a) => enumerate(a, out),
        Command::Gtable(a) => gtable(a, out),
        Command::Bounds(a) => bounds_cmd(a, out),
        Command::Verify { target } => verify_cmd(target, out),
        Command::Render(a) => render(a, out),
    }
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(Failure::from),
    }
}

fn read_polyomino(path: &PathBuf) -> Result<Polyomino, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    Polyomino::parse(&text).map_err(|e| Failure::new(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::new(EXIT_USAGE, format!("family {family} needs --{flag}")))
}

fn summary_line(r: &ConstructionReport) -> String {
    format!(
        "family={} k={} l={} expected_tiles={} expected_holes={} tiles={} holes={} {}",
        r.family.name(),
        r.k,
        r.l,
        r.expected_tiles,
        r.expected_holes,
        r.tiles(),
        r.holes,
        if r.tiles() == r.expected_tiles && r.holes == r.expected_holes { "PASS" } else { "FAIL" }
    )
}

fn render_as(p: &Polyomino, format: Format) -> String {
    match format {
        Format::PolyText => p.serialize(),
        Format::Ascii => p.render_ascii() + "\n",
        Format::Svg => p.render_svg(),
    }
}

fn construct(a: ConstructArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let report = match a.family {
        FamilyArg::S => constructions::build_s(need(a.k, "k", "s")?)?,
        FamilyArg::A => constructions::build_a(need(a.k, "k", "a")?)?,
        FamilyArg::R => constructions::build_r(need(a.k, "k", "r")?)?,
        FamilyArg::Rext => constructions::build_r_ext(need(a.k, "k", "rext")?, a.l.unwrap_or(0))?,
        FamilyArg::Rprime => constructions::build_r_prime(need(a.n, "n", "rprime")?)?,
    };
    let text = render_as(&report.polyomino, a.format);
    emit(&text, a.out.as_ref(), out)?;
    let summary = summary_line(&report);
    if a.out.is_some() {
        writeln!(out, "{summary}")?;
    } else {
        writeln!(err, "{summary}")?;
    }
    Ok(EXIT_OK)
}

fn analyze(path: &PathBuf, out: &mut dyn Write) -> Result<i32, Failure> {
    let p = read_polyomino(path)?;
    let m = p.metrics();
    if !m.identities_hold() {
        return Err(Failure::new(EXIT_INTERNAL, "metric identities do not hold"));
    }
    writeln!(out, "n={} holes={} p={} b={} p_h={} p_o={}", m.n, m.holes, m.p, m.b, m.p_h, m.p_o)?;
    Ok(EXIT_OK)
}

fn enumerate(a: EnumerateArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let cap = a.cap.min(ENUMERATION_CAP);
    if a.max_n > cap {
        return Err(EnumError::CapExceeded { n: a.max_n, cap }.into());
    }
    let table = enumeration::census(a.max_n, a.workers)?;
    emit(&table.to_csv(), a.out.as_ref(), out)?;
    Ok(EXIT_OK)
}

fn gtable(a: GtableArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    if a.max_m == 0 {
        return Err(Failure::new(EXIT_DOMAIN, "--max-m must be at least 1"));
    }
    if a.max_n > DEFAULT_CLI_CAP {
        return Err(EnumError::CapExceeded { n: a.max_n, cap: DEFAULT_CLI_CAP }.into());
    }
    let table = enumeration::census(a.max_n, a.workers)?;
    let mut csv = String::from("m,g\n");
    for m in 1..=a.max_m {
        let g = match enumeration::g_table(m, &table) {
            Ok(t) => t.g(m).expect("filled"),
            Err(EnumError::InsufficientCensus { .. }) => enumeration::search_g(m, a.search.options())?.g,
            Err(e) => return Err(e.into()),
        };
        writeln!(csv, "{m},{g}").unwrap();
    }
    emit(&csv, a.out.as_ref(), out)?;
    Ok(EXIT_OK)
}

fn bounds_cmd(a: BoundsArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (lo, hi) = match (a.n, a.n_min, a.n_max) {
        (Some(n), _, _) => (n, n),
        (None, Some(lo), Some(hi)) => (lo, hi),
        _ => return Err(Failure::new(EXIT_USAGE, "give --n or --n-min and --n-max")),
    };
    if lo == 0 || lo > hi || hi > 1 << 40 {
        return Err(Failure::new(EXIT_DOMAIN, format!("invalid range {lo}..={hi}")));
    }
    let opt = |v: Option<String>| v.unwrap_or_default();
    let mut csv = String::from("n,p_min,ub_fixed_point,lb_construction,ub_from_lb\n");
    for n in lo..=hi {
        let r = bounds::bounds_report(n, a.lb);
        writeln!(
            csv,
            "{},{},{},{},{}",
            r.n,
            r.p_min,
            r.ub_fixed_point,
            opt(r.lb_construction.map(|v| v.to_string())),
            opt(r.ub_from_lb.map(|v| v.to_string()))
        )
        .unwrap();
    }
    emit(&csv, a.out.as_ref(), out)?;
    Ok(EXIT_OK)
}

fn verify_cmd(target: VerifyTarget, out: &mut dyn Write) -> Result<i32, Failure> {
    let checks: Vec<Check> = match target {
        VerifyTarget::Theorem1 { k_max } => verify::theorem1(k_max)?,
        VerifyTarget::Theorem2 { n_min, n_max, k_min, k_max, c1, c2 } => {
            if n_min > n_max || n_max - n_min > 1_000_000 {
                return Err(Failure::new(EXIT_DOMAIN, format!("invalid range {n_min}..={n_max}")));
            }
            let mut ns: Vec<u64> = (n_min..=n_max).collect();
            if k_min <= k_max {
                ns.extend(verify::m_k_values(k_min, k_max));
            }
            ns.sort_unstable();
            ns.dedup();
            verify::theorem2(&ns, c1, c2)?
        }
        VerifyTarget::Table1 { m_max, max_n, workers, search } => {
            let table = enumeration::census(max_n, workers)?;
            verify::table1(m_max, &table, search.options())?
        }
        VerifyTarget::Identities { samples, seed, max_n } => verify::identities(samples, seed, max_n)?,
        VerifyTarget::Rfamily { k_max, k_ext_max } => verify::r_family(k_max, k_ext_max)?,
        VerifyTarget::Perimeter { max_n, workers } => {
            let table = enumeration::census(max_n, workers)?;
            verify::perimeter(&table, max_n)
        }
        VerifyTarget::Chain { k_max, c1 } => verify::inequality_chain(k_max, c1),
        VerifyTarget::Oracle { max_n } => verify::oracle(max_n)?,
    };
    for c in &checks {
        writeln!(out, "{c}")?;
    }
    let passed = checks.iter().filter(|c| c.pass).count();
    writeln!(out, "{passed}/{} checks passed", checks.len())?;
    Ok(if passed == checks.len() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn render(a: RenderArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let p = read_polyomino(&a.input)?;
    let text = match a.format {
        RenderFormat::Ascii => render_as(&p, Format::Ascii),
        RenderFormat::Svg => render_as(&p, Format::Svg),
    };
    emit(&text, a.out.as_ref(), out)?;
    Ok(EXIT_OK)
}
