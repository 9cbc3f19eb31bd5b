//! Command-line front end.
//!
//! Exit codes: 0 success, 1 computational failure (overflow, disagreeing
//! methods, failed verification), 2 usage error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::autgroup::MatrixGroup;
use crate::burnside::{burnside_count_by_classes, burnside_count_simplex};
use crate::duality::{relation_group, verify_dual_counts, DualReport};
use crate::enumerate::{count_classes, list_classes, CountRow, CountTable, Method, ObjectKind, Relation};
use crate::intmat::Matrix;
use crate::simplex::{list_simplex_classes_with_group, simplex_groups, tau_with_group, verify_bijection, BijectionReport};
use crate::Int;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

const MIN_DIM: usize = 2;
const MAX_DIM: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "coweight", version, about = "Sublattices of A*_n and lattice simplices up to equivalence")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count equivalence classes for one index or a range of indices.
    Count(RunArgs),
    /// List canonical class representatives as JSON.
    List(RunArgs),
    /// Run the bijection, duality and Burnside checks over a range.
    Verify(RunArgs),
    /// Export counts for k = kmin..kmax in OEIS b-file format.
    Bfile(RunArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CliObject {
    Sublattice,
    Simplex,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CliRelation {
    Isometry,
    Proper,
    None,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CliMethod {
    Orbit,
    Burnside,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    /// Lattice dimension (2..=6).
    #[arg(long)]
    pub n: usize,
    /// Single index / normalized volume.
    #[arg(long, conflicts_with_all = ["kmin", "kmax"])]
    pub k: Option<u64>,
    #[arg(long)]
    pub kmin: Option<u64>,
    #[arg(long)]
    pub kmax: Option<u64>,
    #[arg(long, value_enum, default_value_t = CliObject::Sublattice)]
    pub object: CliObject,
    #[arg(long, value_enum, default_value_t = CliRelation::Isometry)]
    pub relation: CliRelation,
    #[arg(long, value_enum, default_value_t = CliMethod::Orbit)]
    pub method: CliMethod,
    /// Output format; defaults depend on the subcommand.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    pub workers: Option<usize>,
    /// Write output to FILE instead of stdout (verify: the JSON report).
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

impl From<CliObject> for ObjectKind {
    fn from(o: CliObject) -> Self {
        match o {
            CliObject::Sublattice => ObjectKind::Sublattice,
            CliObject::Simplex => ObjectKind::Simplex,
        }
    }
}

impl From<CliRelation> for Relation {
    fn from(r: CliRelation) -> Self {
        match r {
            CliRelation::Isometry => Relation::Isometry,
            CliRelation::Proper => Relation::ProperIsometry,
            CliRelation::None => Relation::UnimodularOnly,
        }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Compute(String),
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

/// Validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub n: usize,
    pub ks: std::ops::RangeInclusive<u64>,
    pub single: bool,
    pub object: ObjectKind,
    pub relation: Relation,
    pub method: CliMethod,
    pub workers: Option<usize>,
}

impl RunConfig {
    fn from_args(a: &RunArgs, require_range: bool) -> CliResult<Self> {
        if !(MIN_DIM..=MAX_DIM).contains(&a.n) {
            return Err(Failure::Usage(format!("--n must be in {MIN_DIM}..={MAX_DIM}, got {}", a.n)));
        }
        let (ks, single) = match (a.k, a.kmin, a.kmax) {
            (Some(k), _, _) => {
                if require_range {
                    return Err(Failure::Usage("this subcommand takes --kmin/--kmax, not --k".into()));
                }
                (k..=k, true)
            }
            (None, kmin, Some(kmax)) => (kmin.unwrap_or(1)..=kmax, false),
            (None, _, None) => return Err(Failure::Usage("either --k or --kmax is required".into())),
        };
        if *ks.start() == 0 {
            return Err(Failure::Usage("k must be at least 1".into()));
        }
        if ks.is_empty() {
            return Err(Failure::Usage(format!("empty range {}..={}", ks.start(), ks.end())));
        }
        if a.workers == Some(0) {
            return Err(Failure::Usage("--workers must be positive".into()));
        }
        Ok(RunConfig {
            n: a.n,
            ks,
            single,
            object: a.object.into(),
            relation: a.relation.into(),
            method: a.method,
            workers: a.workers,
        })
    }
}

/// Group acting on the chosen object for the chosen relation.
struct Counter {
    n: usize,
    object: ObjectKind,
    group: MatrixGroup<Int>,
}

impl Counter {
    fn new(n: usize, object: ObjectKind, relation: Relation) -> CliResult<Self> {
        let group = match (object, relation) {
            (ObjectKind::Sublattice, rel) => relation_group(n, rel)?,
            (ObjectKind::Simplex, Relation::Isometry) => simplex_groups(n)?.unoriented,
            (ObjectKind::Simplex, Relation::ProperIsometry) => simplex_groups(n)?.oriented,
            (ObjectKind::Simplex, Relation::UnimodularOnly) => MatrixGroup::trivial(n),
        };
        Ok(Counter { n, object, group })
    }

    fn count(&self, k: u64, method: Method) -> CliResult<u64> {
        let n = self.n;
        Ok(match (self.object, method) {
            (ObjectKind::Sublattice, Method::Orbit) => count_classes(n, k, &self.group)?,
            (ObjectKind::Sublattice, Method::Burnside) => burnside_count_by_classes(&self.group, n, k)?,
            (ObjectKind::Simplex, Method::Orbit) => tau_with_group(n, k, &self.group)?,
            (ObjectKind::Simplex, Method::Burnside) => burnside_count_simplex(&self.group, n, k)?,
        })
    }

    fn list(&self, k: u64) -> CliResult<Vec<Matrix<Int>>> {
        Ok(match self.object {
            ObjectKind::Sublattice => list_classes(self.n, k, &self.group)?.into_iter().map(|c| c.canonical.into_matrix()).collect(),
            ObjectKind::Simplex => list_simplex_classes_with_group(self.n, k, &self.group)?.into_iter().map(|c| c.matrix().clone()).collect(),
        })
    }
}

fn count_rows(cfg: &RunConfig) -> CliResult<CountTable> {
    let counter = Counter::new(cfg.n, cfg.object, cfg.relation)?;
    let mut table = CountTable::default();
    for k in cfg.ks.clone() {
        let (method, count) = match cfg.method {
            CliMethod::Orbit => (Method::Orbit, counter.count(k, Method::Orbit)?),
            CliMethod::Burnside => (Method::Burnside, counter.count(k, Method::Burnside)?),
            CliMethod::Both => {
                let a = counter.count(k, Method::Orbit)?;
                let b = counter.count(k, Method::Burnside)?;
                if a != b {
                    return Err(Failure::Compute(format!("orbit count {a} and Burnside count {b} disagree at n={}, k={k}", cfg.n)));
                }
                (Method::Orbit, a)
            }
        };
        table.insert(CountRow { n: cfg.n, k, relation: cfg.relation, object: cfg.object, method, count });
    }
    Ok(table)
}

/// OEIS b-file body: `k value` per line, LF endings.
pub fn render_bfile(table: &CountTable) -> String {
    table.rows.iter().map(|r| format!("{} {}\n", r.k, r.count)).collect()
}

fn render_counts(table: &CountTable, format: Format, single: bool) -> CliResult<String> {
    Ok(match format {
        Format::Table if single => format!("{}\n", table.rows[0].count),
        Format::Table => {
            let mut s = format!("{:>6} {:>12}\n", "k", "count");
            for r in &table.rows {
                s.push_str(&format!("{:>6} {:>12}\n", r.k, r.count));
            }
            s
        }
        Format::Csv => {
            let mut s = String::from("n,k,object,relation,method,count\n");
            for r in &table.rows {
                s.push_str(&format!("{},{},{},{},{},{}\n", r.n, r.k, r.object, r.relation, r.method, r.count));
            }
            s
        }
        Format::Json => to_json(table)?,
        Format::Bfile => render_bfile(table),
    })
}

/// JSON document emitted by `list`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct ClassList {
    pub n: usize,
    pub k: u64,
    pub relation: Relation,
    pub object: ObjectKind,
    pub matrices: Vec<Vec<Vec<Int>>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyEntry {
    pub k: u64,
    pub bijection: BijectionReport,
    pub dual_isometry: DualReport,
    pub dual_proper: DualReport,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub kmin: u64,
    pub kmax: u64,
    pub entries: Vec<VerifyEntry>,
    pub pass: bool,
}

pub fn verify_range(n: usize, ks: std::ops::RangeInclusive<u64>) -> crate::Result<VerifyReport> {
    let (kmin, kmax) = (*ks.start(), *ks.end());
    let mut entries = Vec::new();
    for k in ks {
        let bijection = verify_bijection::<Int>(n, k)?;
        let dual_isometry = verify_dual_counts::<Int>(n, k, Relation::Isometry)?;
        let dual_proper = verify_dual_counts::<Int>(n, k, Relation::ProperIsometry)?;
        let pass = bijection.pass
            && dual_isometry.pass
            && dual_proper.pass
            && dual_isometry.count == bijection.beta
            && dual_proper.count == bijection.beta_plus;
        entries.push(VerifyEntry { k, bijection, dual_isometry, dual_proper, pass });
    }
    let pass = entries.iter().all(|e| e.pass);
    Ok(VerifyReport { n, kmin, kmax, entries, pass })
}

fn to_json<S: Serialize>(v: &S) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Failure::Compute(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn emit(text: &str, output: &Option<PathBuf>, out: &mut dyn Write) -> CliResult<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Compute(format!("{}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(|e| Failure::Compute(e.to_string())),
    }
}

fn execute(cmd: &Command, out: &mut dyn Write) -> CliResult<bool> {
    match cmd {
        Command::Count(a) => {
            let cfg = RunConfig::from_args(a, false)?;
            let table = with_workers(cfg.workers, || count_rows(&cfg))?;
            emit(&render_counts(&table, a.format.unwrap_or(Format::Table), cfg.single)?, &a.output, out)?;
            Ok(true)
        }
        Command::Bfile(a) => {
            let cfg = RunConfig::from_args(a, true)?;
            let table = with_workers(cfg.workers, || count_rows(&cfg))?;
            emit(&render_bfile(&table), &a.output, out)?;
            Ok(true)
        }
        Command::List(a) => {
            let cfg = RunConfig::from_args(a, false)?;
            if !cfg.single {
                return Err(Failure::Usage("list takes a single --k".into()));
            }
            let k = *cfg.ks.start();
            let matrices = with_workers(cfg.workers, || Counter::new(cfg.n, cfg.object, cfg.relation)?.list(k))?;
            let text = match a.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&ClassList {
                    n: cfg.n,
                    k,
                    relation: cfg.relation,
                    object: cfg.object,
                    matrices: matrices.iter().map(Matrix::rows).collect(),
                })?,
                Format::Table => matrices.iter().map(|m| format!("{m}\n")).collect(),
                f => return Err(Failure::Usage(format!("list does not support --format {f:?}"))),
            };
            emit(&text, &a.output, out)?;
            Ok(true)
        }
        Command::Verify(a) => {
            let cfg = RunConfig::from_args(a, true)?;
            let report = with_workers(cfg.workers, || Ok(verify_range(cfg.n, cfg.ks.clone())?))?;
            let json = to_json(&report)?;
            if let Some(path) = &a.output {
                fs::write(path, &json).map_err(|e| Failure::Compute(format!("{}: {e}", path.display())))?;
            }
            if a.format == Some(Format::Json) {
                if a.output.is_none() {
                    emit(&json, &None, out)?;
                }
            } else {
                let mut s = String::new();
                for e in &report.entries {
                    let b = &e.bijection;
                    s.push_str(&format!(
                        "n={} k={:<4} beta={:<6} tau={:<6} beta+={:<6} tau+={:<6} dual={}/{} burnside={}/{} {}\n",
                        report.n,
                        e.k,
                        b.beta,
                        b.tau,
                        b.beta_plus,
                        b.tau_plus,
                        e.dual_isometry.dual_count,
                        e.dual_proper.dual_count,
                        e.dual_isometry.burnside,
                        e.dual_proper.burnside,
                        if e.pass { "PASS" } else { "FAIL" }
                    ));
                }
                s.push_str(&format!("{}\n", if report.pass { "all checks passed" } else { "VERIFICATION FAILED" }));
                emit(&s, &None, out)?;
            }
            Ok(report.pass)
        }
    }
}

fn with_workers<R: Send>(workers: Option<usize>, f: impl FnOnce() -> CliResult<R> + Send) -> CliResult<R> {
    match workers {
        None => f(),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map_err(|e| Failure::Compute(e.to_string()))?
            .install(f),
    }
}

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match execute(&cli.command, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILURE,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Compute(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}
