//! `voa`: dimensions of Zhu's algebra A(V) and the C2 algebra A_[2](V) for
//! lattice, affine Lie-algebra, and Virasoro minimal-model vertex operator
//! algebras, with anomaly classification (A_[2] strictly bigger than A).
//!
//! Reports are JSON on standard output (or `--out`); `--pretty` renders a
//! human-readable table instead. Exit codes: 0 success, 2 argument or file
//! parse error, 3 resource limit, 4 invalid input.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use voa_core::affine::{self, AffineError};
use voa_core::catalog;
use voa_core::lattice::{Lattice, LatticeError, LatticeFile};
use voa_core::lattice_voa::{self, Caps, Effort, LatticeReport, VoaError};
use voa_core::minimal::{self, MinimalError};
use voa_core::qseries::LaurentPoly;

#[derive(Parser)]
#[command(
    name = "voa",
    version,
    about = "Zhu-algebra and C2-algebra dimensions for lattice, affine, and minimal-model VOAs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Render a human-readable table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads (default: all available).
    #[arg(long, global = true, env = "VOA_THREADS")]
    threads: Option<usize>,
    /// Highest oscillator degree allowed per graded quotient.
    #[arg(long, global = true, default_value_t = 64)]
    max_degree: u32,
    /// Largest monomial basis allowed in one graded piece.
    #[arg(long, global = true, default_value_t = 200_000)]
    max_monomials: u64,
    /// Most candidate vectors one lattice enumeration may explore.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    max_vectors: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice VOA computations (named lattice or JSON file).
    Lattice {
        #[command(subcommand)]
        op: LatticeOp,
    },
    /// Affine Lie-algebra VOA computations.
    Affine {
        #[command(subcommand)]
        op: AffineOp,
    },
    /// Virasoro minimal model: both algebras have dimension (p-1)(q-1)/2.
    Minimal { p: u64, q: u64 },
    /// Batch operations over directories of lattice files.
    Catalog {
        #[command(subcommand)]
        op: CatalogOp,
    },
}

#[derive(Subcommand)]
enum LatticeOp {
    /// Rank, determinant, minimal norm, and discriminant cosets.
    Info { target: String },
    /// Zhu-algebra dimension.
    Zhu { target: String },
    /// C2-algebra dimension with the per-vector graded breakdown.
    C2 { target: String },
    /// Cheap lower bound for the C2 dimension from minimum-norm data.
    Bound { target: String },
    /// Anomaly classification combining all of the above.
    Classify {
        target: String,
        /// How much work to do before giving a verdict.
        #[arg(long, value_enum, default_value_t = EffortArg::Full)]
        effort: EffortArg,
    },
}

#[derive(Subcommand)]
enum AffineOp {
    /// Zhu-algebra dimension for an algebra ("A2", "E8", ...) at a level.
    Zhu { algebra: String, level: i64 },
    /// Evaluate the conjectured grade-by-grade sl(N) C2 description.
    #[command(name = "c2-conj")]
    C2Conj { n: usize, level: i64 },
    /// Degree-refined sl(2) character and its grade-equals-degree part.
    #[command(name = "sl2-char")]
    Sl2Char { level: i64, truncation: u32 },
}

#[derive(Subcommand)]
enum CatalogOp {
    /// Classify every lattice JSON file in a directory (sorted by name).
    Run {
        dir: PathBuf,
        /// How much work to do per lattice.
        #[arg(long, value_enum, default_value_t = EffortArg::Full)]
        effort: EffortArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EffortArg {
    /// Compute the full C2 dimension.
    Full,
    /// Decide from the lower bound alone where possible.
    #[value(name = "bound_only", alias = "bound-only")]
    BoundOnly,
}

impl From<EffortArg> for Effort {
    fn from(e: EffortArg) -> Effort {
        match e {
            EffortArg::Full => Effort::Full,
            EffortArg::BoundOnly => Effort::BoundOnly,
        }
    }
}

/// A failure to be reported as a machine-readable error record.
struct CliError {
    kind: &'static str,
    message: String,
    code: u8,
}

impl CliError {
    fn validation(message: impl Into<String>) -> Self {
        CliError {
            kind: "validation",
            message: message.into(),
            code: 4,
        }
    }

    fn parse(message: impl Into<String>) -> Self {
        CliError {
            kind: "parse",
            message: message.into(),
            code: 2,
        }
    }

    fn resource(message: impl Into<String>) -> Self {
        CliError {
            kind: "resource_limit",
            message: message.into(),
            code: 3,
        }
    }

    fn io(message: impl Into<String>) -> Self {
        CliError {
            kind: "io",
            message: message.into(),
            code: 1,
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::TooManyVectors { .. } => CliError::resource(e.to_string()),
            _ => CliError::validation(e.to_string()),
        }
    }
}

impl From<VoaError> for CliError {
    fn from(e: VoaError) -> Self {
        if e.is_resource_limit() {
            CliError::resource(e.to_string())
        } else {
            CliError::validation(e.to_string())
        }
    }
}

impl From<AffineError> for CliError {
    fn from(e: AffineError) -> Self {
        match e {
            AffineError::ResourceLimit { .. } | AffineError::TooLarge { .. } => {
                CliError::resource(e.to_string())
            }
            AffineError::ConjectureViolation { .. } => CliError {
                kind: "conjecture_violation",
                message: e.to_string(),
                code: 4,
            },
            AffineError::Lie(_) | AffineError::Series(_) => CliError::validation(e.to_string()),
        }
    }
}

impl From<MinimalError> for CliError {
    fn from(e: MinimalError) -> Self {
        CliError::validation(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            report_error(&CliError::validation(format!(
                "cannot configure {threads} worker threads: {e}"
            )));
            return ExitCode::from(4);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            report_error(&err);
            ExitCode::from(err.code)
        }
    }
}

/// Error records always go to standard output so callers can parse them.
fn report_error(err: &CliError) {
    let record = serde_json::json!({
        "error": { "kind": err.kind, "message": err.message }
    });
    println!(
        "{}",
        serde_json::to_string_pretty(&record).expect("error records serialize")
    );
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let caps = Caps {
        max_degree: cli.max_degree,
        max_monomials: cli.max_monomials,
        max_vectors: cli.max_vectors,
    };
    let output = match &cli.command {
        Command::Lattice { op } => run_lattice(op, &caps)?,
        Command::Affine { op } => run_affine(op)?,
        Command::Minimal { p, q } => {
            let report = minimal::minimal_dims(*p, *q)?;
            Output::new(&report)?.table(render_minimal(&report))
        }
        Command::Catalog {
            op: CatalogOp::Run { dir, effort },
        } => run_catalog(dir, *effort, &caps)?,
    };
    emit(cli, &output)
}

/// A finished report: its JSON form and a human-readable rendering.
struct Output {
    json: String,
    table: String,
}

impl Output {
    fn new<T: Serialize>(value: &T) -> Result<Output, CliError> {
        let mut json = serde_json::to_string_pretty(value)
            .map_err(|e| CliError::io(format!("cannot serialize report: {e}")))?;
        json.push('\n');
        Ok(Output {
            json,
            table: String::new(),
        })
    }

    fn table(mut self, table: String) -> Output {
        self.table = table;
        self
    }
}

fn emit(cli: &Cli, output: &Output) -> Result<(), CliError> {
    let body = if cli.pretty {
        output.table.as_str()
    } else {
        output.json.as_str()
    };
    match &cli.out {
        Some(path) => std::fs::write(path, body)
            .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

/// Resolve a lattice argument: first the named catalog, then a JSON file.
fn load_lattice(target: &str) -> Result<Lattice, CliError> {
    if let Some(l) = catalog::by_name(target) {
        return Ok(l);
    }
    let path = Path::new(target);
    if !path.is_file() {
        return Err(CliError::validation(format!(
            "{target:?} is neither a cataloged lattice name nor a lattice file"
        )));
    }
    load_lattice_file(path)
}

fn load_lattice_file(path: &Path) -> Result<Lattice, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("cannot read {}: {e}", path.display())))?;
    let file: LatticeFile = serde_json::from_str(&text)
        .map_err(|e| CliError::parse(format!("{} is not a lattice file: {e}", path.display())))?;
    Ok(file.into_lattice()?)
}

#[derive(Serialize)]
struct CosetRecord {
    representative: Vec<String>,
    min_norm: String,
    min_count: u64,
}

#[derive(Serialize)]
struct InfoRecord {
    lattice: String,
    rank: usize,
    det: u128,
    min_norm: i64,
    min_vector_count: u64,
    cosets: Vec<CosetRecord>,
}

#[derive(Serialize)]
struct ZhuRecord {
    lattice: String,
    zhu_dim: u128,
}

#[derive(Serialize)]
struct C2Record {
    lattice: String,
    c2_dim: u128,
    small_vector_count: u64,
    per_alpha: Vec<lattice_voa::AlphaDims>,
}

#[derive(Serialize)]
struct BoundRecord {
    lattice: String,
    c2_lower_bound: u128,
}

fn run_lattice(op: &LatticeOp, caps: &Caps) -> Result<Output, CliError> {
    match op {
        LatticeOp::Info { target } => {
            let l = load_lattice(target)?;
            let summary = l.summary()?;
            let cosets = l
                .discriminant_cosets()?
                .into_iter()
                .map(|c| CosetRecord {
                    representative: c.representative.iter().map(|r| r.to_string()).collect(),
                    min_norm: c.min_norm.to_string(),
                    min_count: c.min_count,
                })
                .collect();
            let record = InfoRecord {
                lattice: l.display_name(),
                rank: l.rank(),
                det: summary
                    .det
                    .to_u128()
                    .ok_or_else(|| CliError::resource("determinant exceeds 128 bits"))?,
                min_norm: summary.mu,
                min_vector_count: summary.min_count,
                cosets,
            };
            Ok(Output::new(&record)?.table(render_info(&record)))
        }
        LatticeOp::Zhu { target } => {
            let l = load_lattice(target)?;
            let record = ZhuRecord {
                lattice: l.display_name(),
                zhu_dim: lattice_voa::zhu_dim_lattice(&l)?,
            };
            let table = format!(
                "lattice   {}\nzhu_dim   {}\n",
                record.lattice, record.zhu_dim
            );
            Ok(Output::new(&record)?.table(table))
        }
        LatticeOp::C2 { target } => {
            let l = load_lattice(target)?;
            let c2 = lattice_voa::c2_dim_lattice(&l, caps)?;
            let record = C2Record {
                lattice: l.display_name(),
                c2_dim: c2.total,
                small_vector_count: c2.small_count,
                per_alpha: c2
                    .per_alpha
                    .into_iter()
                    .map(|(alpha, g)| lattice_voa::AlphaDims {
                        alpha,
                        dims: g.dims,
                    })
                    .collect(),
            };
            let table = format!(
                "lattice        {}\nc2_dim         {}\nsmall vectors  {}\n",
                record.lattice, record.c2_dim, record.small_vector_count
            );
            Ok(Output::new(&record)?.table(table))
        }
        LatticeOp::Bound { target } => {
            let l = load_lattice(target)?;
            let record = BoundRecord {
                lattice: l.display_name(),
                c2_lower_bound: lattice_voa::c2_lower_bound(&l)?,
            };
            let table = format!(
                "lattice         {}\nc2_lower_bound  {}\n",
                record.lattice, record.c2_lower_bound
            );
            Ok(Output::new(&record)?.table(table))
        }
        LatticeOp::Classify { target, effort } => {
            let l = load_lattice(target)?;
            let report = lattice_voa::classify(&l, (*effort).into(), caps)?;
            Ok(Output::new(&report)?.table(render_classify(&report)))
        }
    }
}

#[derive(Serialize)]
struct Sl2CharGrade {
    grade: u32,
    dim: i128,
    z_character: String,
}

#[derive(Serialize)]
struct Sl2CharRecord {
    level: i64,
    truncation: u32,
    /// Graded dimensions of the whole VOA (all degrees, z = 1).
    graded_dims: Vec<i128>,
    /// Whether the C2 profile below is complete (needs truncation >= 2k).
    c2_complete: bool,
    /// The grade-equals-degree part: the C2 algebra, grade by grade.
    c2_per_grade: Vec<Sl2CharGrade>,
}

fn run_affine(op: &AffineOp) -> Result<Output, CliError> {
    match op {
        AffineOp::Zhu { algebra, level } => {
            require_positive_level(*level)?;
            let report = affine::affine_zhu_report(algebra, *level)?;
            let table = format!(
                "algebra  {}\nlevel    {}\nzhu_dim  {}\n",
                report.algebra, report.level, report.zhu_dim
            );
            Ok(Output::new(&report)?.table(table))
        }
        AffineOp::C2Conj { n, level } => {
            if *n < 2 {
                return Err(CliError::validation(format!(
                    "sl(N) needs N >= 2; got N = {n}"
                )));
            }
            require_positive_level(*level)?;
            let report = affine::sln_c2_report(*n, *level)?;
            Ok(Output::new(&report)?.table(render_affine_conjecture(&report)))
        }
        AffineOp::Sl2Char { level, truncation } => {
            require_positive_level(*level)?;
            let chi = affine::sl2_refined_character(*level, *truncation)?;
            let graded_dims = chi
                .q_profile()
                .iter()
                .map(|c| {
                    c.to_i128()
                        .ok_or_else(|| CliError::resource("graded dimension exceeds 128 bits"))
                })
                .collect::<Result<_, _>>()?;
            let c2_per_grade: Vec<Sl2CharGrade> = (0..=*truncation)
                .map(|m| {
                    let poly = chi.coeff(m, m);
                    Ok(Sl2CharGrade {
                        grade: m,
                        dim: poly
                            .eval_at_one()
                            .to_i128()
                            .ok_or_else(|| CliError::resource("dimension exceeds 128 bits"))?,
                        z_character: render_laurent(&poly),
                    })
                })
                .collect::<Result<_, CliError>>()?;
            let record = Sl2CharRecord {
                level: *level,
                truncation: *truncation,
                graded_dims,
                c2_complete: *truncation as i64 >= 2 * *level,
                c2_per_grade,
            };
            Ok(Output::new(&record)?.table(render_sl2_char(&record)))
        }
    }
}

fn require_positive_level(level: i64) -> Result<(), CliError> {
    if level < 1 {
        return Err(CliError::validation(format!(
            "the level must be a positive integer; got {level}"
        )));
    }
    Ok(())
}

fn run_catalog(dir: &Path, effort: EffortArg, caps: &Caps) -> Result<Output, CliError> {
    let entries = std::fs::read_dir(dir)
        .map_err(|e| CliError::validation(format!("cannot read {}: {e}", dir.display())))?;
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().map(|x| x == "json").unwrap_or(false))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(CliError::validation(format!(
            "{} contains no lattice .json files",
            dir.display()
        )));
    }
    let mut reports: Vec<LatticeReport> = Vec::with_capacity(files.len());
    for path in &files {
        let l = load_lattice_file(path)?;
        let report = lattice_voa::classify(&l, effort.into(), caps).map_err(|e| {
            let mut err = CliError::from(e);
            err.message = format!("{}: {}", path.display(), err.message);
            err
        })?;
        reports.push(report);
    }
    let mut table = format!(
        "{:<12} {:>14} {:>10} {:>10} {:>10}\n",
        "lattice", "verdict", "zhu", "c2", "bound"
    );
    for r in &reports {
        let c2 = r.c2_dim.map_or("-".to_string(), |d| d.to_string());
        let _ = writeln!(
            table,
            "{:<12} {:>14} {:>10} {:>10} {:>10}",
            r.lattice, r.verdict, r.zhu_dim, c2, r.c2_lower_bound
        );
    }
    Ok(Output::new(&reports)?.table(table))
}

fn render_laurent(poly: &LaurentPoly) -> String {
    poly.to_string()
}

fn render_info(record: &InfoRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "lattice           {}", record.lattice);
    let _ = writeln!(s, "rank              {}", record.rank);
    let _ = writeln!(s, "det               {}", record.det);
    let _ = writeln!(s, "min_norm          {}", record.min_norm);
    let _ = writeln!(s, "min_vector_count  {}", record.min_vector_count);
    let _ = writeln!(s, "cosets ({}):", record.cosets.len());
    for c in &record.cosets {
        let _ = writeln!(
            s,
            "  rep [{}]  min_norm {}  count {}",
            c.representative.join(", "),
            c.min_norm,
            c.min_count
        );
    }
    s
}

fn render_classify(report: &LatticeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "lattice         {}", report.lattice);
    let _ = writeln!(s, "verdict         {}", report.verdict);
    let _ = writeln!(s, "zhu_dim         {}", report.zhu_dim);
    match report.c2_dim {
        Some(c2) => {
            let _ = writeln!(s, "c2_dim          {c2}");
        }
        None => {
            let _ = writeln!(s, "c2_dim          (not computed)");
        }
    }
    let _ = writeln!(s, "c2_lower_bound  {}", report.c2_lower_bound);
    if let Some(count) = report.small_vector_count {
        let _ = writeln!(s, "small_vectors   {count}");
    }
    if let Some(diag) = &report.diagnostics {
        let _ = writeln!(s, "note            {diag}");
    }
    s
}

fn render_minimal(report: &minimal::MinimalReport) -> String {
    format!(
        "model    ({}, {})\nzhu_dim  {}\nc2_dim   {}\nverdict  {}\n",
        report.p, report.q, report.zhu_dim, report.c2_dim, report.verdict
    )
}

fn render_affine_conjecture(report: &affine::AffineReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra      {}", report.algebra);
    let _ = writeln!(s, "level        {}", report.level);
    let _ = writeln!(s, "zhu_dim      {}", report.zhu_dim);
    if let Some(conj) = &report.c2_conjecture {
        let _ = writeln!(s, "c2 total     {}", conj.total);
        let _ = writeln!(s, "per grade    {:?}", conj.per_grade);
        let _ = writeln!(s, "matches_zhu  {}", conj.matches_zhu);
    }
    s
}

fn render_sl2_char(record: &Sl2CharRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "algebra      A1");
    let _ = writeln!(s, "level        {}", record.level);
    let _ = writeln!(s, "truncation   {}", record.truncation);
    let _ = writeln!(s, "graded dims  {:?}", record.graded_dims);
    let _ = writeln!(
        s,
        "c2 per grade{}:",
        if record.c2_complete {
            ""
        } else {
            " (truncated before 2k; incomplete)"
        }
    );
    for g in &record.c2_per_grade {
        let _ = writeln!(
            s,
            "  grade {:<3} dim {:<6} {}",
            g.grade, g.dim, g.z_character
        );
    }
    s
}
