//! Command-line interface. [`run`] is the whole program; the binary only
//! forwards `std::env::args` and the process streams.
//!
//! Exit codes: 0 verdict obtained, 1 verification failed or a negative
//! verdict where a positive one was asserted, 2 usage or input error,
//! 3 search budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arrangement::{
    intersection_subspace, localization, product, restrict_arrangement, restriction, Arrangement, ExponentVector,
    Subspace,
};
use crate::catalog::{self, CatalogEntry, Payload};
use crate::certfile::{format_blocks, parse_blocks, CertificateDoc, Kind};
use crate::error::{Error, Result};
use crate::linalg::Row;
use crate::matkernel::{
    free_filtration, necessary_filter, necessary_filter_tabulated, product_partition, verify_mat2_blocks,
    verify_mat_partition, FilterStatus, MatCertificate, StepReport, Verification,
};
use crate::scalar::CycloScalar;
use crate::search::{search_mat, search_mat2, Certificate, Mode, SearchConfig, Verdict};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "matfree", version, about = "Decide and certify MAT-freeness of hyperplane arrangements")]
struct Cli {
    /// Refuse arrangement files over cyclotomic fields with a larger conductor.
    #[arg(long, global = true, default_value_t = 120)]
    conductor_limit: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List or show built-in arrangements.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Verify a certificate (file, inline blocks, or the built-in one).
    Verify(VerifyArgs),
    /// Search for a MAT-partition or a second-variant step sequence.
    Search(SearchArgs),
    /// Evaluate the restriction-size necessary condition.
    Filter(FilterArgs),
    /// Restrict an arrangement to one of its hyperplanes.
    Restrict(RestrictArgs),
    /// Localize an arrangement at a subspace.
    Localize(LocalizeArgs),
    /// Product of two arrangements, with the product certificate when both
    /// factors have one.
    Product(ProductArgs),
    /// Free filtration read off from a certificate.
    Filtration(FiltrationArgs),
}

#[derive(Debug, Subcommand)]
enum CatalogCommand {
    /// Names of built-in arrangements and tabulated records.
    List,
    /// Print an entry in the arrangement file format.
    Show {
        name: String,
        /// Write the built-in blocks as a certificate document.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Mat,
    Mat2,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Mat => Mode::Mat,
            ModeArg::Mat2 => Mode::Mat2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExpectArg {
    Certified,
    ExhaustedNone,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Arrangement file or catalog name.
    source: String,
    /// Certificate document (JSON).
    certificate: Option<PathBuf>,
    /// Inline 1-based blocks, e.g. "1,2,3|4,5|6".
    #[arg(long, conflicts_with_all = ["certificate", "builtin"])]
    blocks: Option<String>,
    /// Treat inline blocks as second-variant steps with canonical slots.
    #[arg(long, requires = "blocks")]
    mat2: bool,
    /// Verify the catalog entry's built-in certificate.
    #[arg(long, conflicts_with = "certificate")]
    builtin: bool,
    /// Write the re-emitted certificate here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SearchArgs {
    source: String,
    #[arg(long, value_enum, default_value_t = ModeArg::Mat)]
    mode: ModeArg,
    /// Maximum number of expanded search states.
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// File with allowed first blocks, one per line as 1-based indices.
    #[arg(long)]
    first_blocks: Option<PathBuf>,
    /// Disable memoization of failed states.
    #[arg(long)]
    no_memo: bool,
    /// Print progress lines to stderr.
    #[arg(long)]
    progress: bool,
    /// Exit with 1 unless the verdict matches.
    #[arg(long, value_enum)]
    expect: Option<ExpectArg>,
    /// Write the outcome document here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FilterArgs {
    /// Arrangement file, catalog name, or tabulated record name.
    source: String,
    /// Exponents, e.g. "1,5,9". Taken from the tabulated record when omitted.
    #[arg(long)]
    exponents: Option<String>,
}

#[derive(Debug, Args)]
struct RestrictArgs {
    source: String,
    /// 1-based index of the hyperplane.
    #[arg(long)]
    hyperplane: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct LocalizeArgs {
    source: String,
    /// Forms cutting out the subspace: rows separated by '|', entries by ';'.
    #[arg(long, conflicts_with = "meet")]
    subspace: Option<String>,
    /// The subspace as the intersection of these 1-based hyperplanes.
    #[arg(long)]
    meet: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ProductArgs {
    first: String,
    second: String,
    /// Certificate of the first factor (defaults to its built-in blocks).
    #[arg(long)]
    cert1: Option<PathBuf>,
    /// Certificate of the second factor (defaults to its built-in blocks).
    #[arg(long)]
    cert2: Option<PathBuf>,
    /// Write the product arrangement here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the product certificate here.
    #[arg(long)]
    cert_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct FiltrationArgs {
    source: String,
    certificate: Option<PathBuf>,
    /// Use the catalog entry's built-in certificate.
    #[arg(long, conflicts_with = "certificate")]
    builtin: bool,
}

struct Source {
    arrangement: Arrangement,
    entry: Option<CatalogEntry>,
}

fn load(source: &str, limit: u32) -> Result<Source> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        return Ok(Source { arrangement: Arrangement::parse_with_limit(&text, limit)?, entry: None });
    }
    let entry = catalog::named(source)?;
    let arrangement = entry.arrangement()?.clone();
    Ok(Source { arrangement, entry: Some(entry) })
}

fn read_doc(path: &Path) -> Result<CertificateDoc> {
    CertificateDoc::from_json(&std::fs::read_to_string(path)?)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

fn parse_exponents(text: &str) -> Result<ExponentVector> {
    let v = text
        .trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse { line: 1, msg: format!("bad exponent {x:?}: {e}") }))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExponentVector::new(v))
}

fn fmt_set(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

fn fmt_list(v: &[usize]) -> String {
    let inner: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn write_report(out: &mut dyn Write, r: &StepReport) -> std::io::Result<()> {
    let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
    write!(out, "step {} {}", r.step, fmt_set(&r.members))?;
    if let Some(slots) = &r.slots {
        write!(out, " slots {}", fmt_list(slots))?;
    }
    write!(out, ": rank {} {}", r.rank, mark(r.codim_ok))?;
    match r.blocking {
        Some(b) => write!(out, "; avoidance FAIL (contained in hyperplane {})", b + 1)?,
        None => write!(out, "; avoidance ok")?,
    }
    write!(out, "; defects {} required {} {}", fmt_list(&r.defects), fmt_list(&r.required), mark(r.defect_ok))?;
    if !r.multiplicity_ok {
        write!(out, "; multiplicity FAIL")?;
    }
    match &r.exponents_after {
        Some(e) => writeln!(out, "; exponents {} -> {}", r.exponents_before, e),
        None => writeln!(out),
    }
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let mut io = Io { out, err };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io<'_>) -> Result<i32> {
    let limit = cli.conductor_limit;
    match &cli.command {
        Command::Catalog(c) => cmd_catalog(c, io),
        Command::Verify(a) => cmd_verify(a, limit, io),
        Command::Search(a) => cmd_search(a, limit, io),
        Command::Filter(a) => cmd_filter(a, limit, io),
        Command::Restrict(a) => cmd_restrict(a, limit, io),
        Command::Localize(a) => cmd_localize(a, limit, io),
        Command::Product(a) => cmd_product(a, limit, io),
        Command::Filtration(a) => cmd_filtration(a, limit, io),
    }
}

fn cmd_catalog(c: &CatalogCommand, io: &mut Io<'_>) -> Result<i32> {
    match c {
        CatalogCommand::List => {
            for name in catalog::list() {
                writeln!(io.out, "{name}")?;
            }
        }
        CatalogCommand::Show { name, cert } => {
            let entry = catalog::named(name)?;
            match &entry.payload {
                Payload::Facts(f) => {
                    writeln!(io.out, "{}", serde_json::to_string_pretty(f).expect("facts serialize"))?;
                    if cert.is_some() {
                        return Err(Error::FactsOnly(name.clone()));
                    }
                }
                Payload::Forms { arrangement, .. } => {
                    writeln!(io.out, "# {}: {}", entry.name, entry.provenance)?;
                    if let Some(b) = entry.blocks() {
                        writeln!(io.out, "# blocks {}", format_blocks(b))?;
                    }
                    if let Some(b) = entry.mat2_blocks() {
                        writeln!(io.out, "# steps {}", format_blocks(b))?;
                    }
                    write!(io.out, "{}", arrangement.to_text())?;
                    if let Some(path) = cert {
                        let doc = builtin_doc(&entry, arrangement, name)?;
                        write_file(path, &doc.to_json())?;
                    }
                }
            }
        }
    }
    Ok(EXIT_OK)
}

/// Certificate document for an entry's built-in blocks; the blocks are
/// verified on the way.
fn builtin_doc(entry: &CatalogEntry, a: &Arrangement, source: &str) -> Result<CertificateDoc> {
    let v = builtin_verification(entry, a)?;
    match v {
        Verification::Certified(c) => Ok(CertificateDoc::from_certificate(&c, source)),
        Verification::Rejected(r) => Err(Error::Reverification(r.to_string())),
    }
}

fn builtin_verification(entry: &CatalogEntry, a: &Arrangement) -> Result<Verification<Certificate>> {
    if let Some(b) = entry.blocks() {
        return Ok(verify_mat_partition(a, b)?.map(Certificate::Mat));
    }
    if let Some(b) = entry.mat2_blocks() {
        return Ok(verify_mat2_blocks(a, b)?.map(Certificate::Mat2));
    }
    Err(Error::Certificate(format!("{} has no built-in certificate", entry.name)))
}

fn cmd_verify(args: &VerifyArgs, limit: u32, io: &mut Io<'_>) -> Result<i32> {
    let src = load(&args.source, limit)?;
    let a = &src.arrangement;
    let v = if let Some(text) = &args.blocks {
        let blocks = parse_blocks(text, a.len())?;
        if args.mat2 {
            verify_mat2_blocks(a, &blocks)?.map(Certificate::Mat2)
        } else {
            verify_mat_partition(a, &blocks)?.map(Certificate::Mat)
        }
    } else if let Some(path) = &args.certificate {
        read_doc(path)?.verify(a)?
    } else if args.builtin {
        let entry = src.entry.as_ref().ok_or_else(|| Error::Certificate("--builtin needs a catalog name".into()))?;
        builtin_verification(entry, a)?
    } else {
        return Err(Error::Certificate("give a certificate file, --blocks, or --builtin".into()));
    };
    match v {
        Verification::Certified(c) => {
            let reports = match &c {
                Certificate::Mat(m) => &m.reports,
                Certificate::Mat2(m) => &m.reports,
            };
            for r in reports {
                write_report(io.out, r)?;
            }
            writeln!(io.out, "certified: exponents {}", c.exponents())?;
            if let Some(path) = &args.out {
                write_file(path, &CertificateDoc::from_certificate(&c, &args.source).to_json())?;
            }
            Ok(EXIT_OK)
        }
        Verification::Rejected(r) => {
            for rep in &r.reports {
                write_report(io.out, rep)?;
            }
            writeln!(io.out, "rejected: {r}")?;
            Ok(EXIT_FAILED)
        }
    }
}

fn read_first_blocks(path: &Path, len: usize) -> Result<Vec<Vec<usize>>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut b = parse_blocks(line, len)?;
        if b.len() != 1 {
            return Err(Error::Parse { line: out.len() + 1, msg: "expected one block per line".into() });
        }
        out.push(b.remove(0));
    }
    Ok(out)
}

fn cmd_search(args: &SearchArgs, limit: u32, io: &mut Io<'_>) -> Result<i32> {
    let src = load(&args.source, limit)?;
    let a = &src.arrangement;
    let mode: Mode = args.mode.into();
    let cfg = SearchConfig {
        mode,
        node_budget: args.budget,
        worker_count: args.threads,
        memoization: !args.no_memo,
        first_block_restriction: args.first_blocks.as_deref().map(|p| read_first_blocks(p, a.len())).transpose()?,
        progress: args.progress,
    };
    let outcome = match mode {
        Mode::Mat => search_mat(a, &cfg)?,
        Mode::Mat2 => search_mat2(a, &cfg)?,
    };
    let s = &outcome.stats;
    writeln!(io.out, "verdict: {}", outcome.verdict)?;
    if outcome.restriction_in_force {
        writeln!(io.out, "note: verdict is relative to the supplied first blocks")?;
    }
    if let Some(c) = &outcome.certificate {
        writeln!(io.out, "blocks: {}", format_blocks(&c.blocks()))?;
        writeln!(io.out, "exponents: {}", c.exponents())?;
    }
    writeln!(io.out, "nodes: {}  memo hits: {}  time: {:.3}s", s.nodes, s.memo_hits, s.wall_seconds)?;
    if let Some(path) = &args.out {
        let kind = if mode == Mode::Mat { Kind::Mat } else { Kind::Mat2 };
        write_file(path, &CertificateDoc::from_outcome(&outcome, kind, &args.source).to_json())?;
    }
    if outcome.verdict == Verdict::BudgetExceeded {
        writeln!(io.err, "search budget of {} nodes exceeded; no verdict", args.budget)?;
        return Ok(EXIT_BUDGET);
    }
    let expected = match args.expect {
        Some(ExpectArg::Certified) => Some(Verdict::Certified),
        Some(ExpectArg::ExhaustedNone) => Some(Verdict::ExhaustedNone),
        None => None,
    };
    Ok(match expected {
        Some(v) if v != outcome.verdict => EXIT_FAILED,
        _ => EXIT_OK,
    })
}

fn cmd_filter(args: &FilterArgs, limit: u32, io: &mut Io<'_>) -> Result<i32> {
    let facts = if Path::new(&args.source).is_file() { None } else { catalog::named(&args.source)?.facts().cloned() };
    if let Some(f) = facts {
        let exps = match &args.exponents {
            Some(t) => parse_exponents(t)?,
            None => f.exponents.clone(),
        };
        let f = crate::matkernel::FactsRecord { exponents: exps, ..f };
        let pass = necessary_filter_tabulated(&f)?;
        let diff = f.restriction_difference().expect("checked by the filter");
        writeln!(io.out, "{}: |A| = {}, |A| - |A^H| = {} for every H, top exponent {}", f.name, f.size, diff, f.exponents.top())?;
        return Ok(if pass {
            writeln!(io.out, "pass")?;
            EXIT_OK
        } else {
            writeln!(io.out, "fail: not MAT2-free (necessary condition)")?;
            EXIT_FAILED
        });
    }
    let src = load(&args.source, limit)?;
    let exps = match &args.exponents {
        Some(t) => parse_exponents(t)?,
        None => return Err(Error::InvalidParameters("--exponents is required for arrangements".into())),
    };
    let o = necessary_filter(&src.arrangement, &exps)?;
    writeln!(io.out, "differences |A| - |A^H|: {}", fmt_list(&o.differences))?;
    writeln!(io.out, "top exponent: {}", o.top_exponent)?;
    Ok(match &o.status {
        FilterStatus::Pass { witnesses } => {
            writeln!(io.out, "pass: witnesses {}", fmt_set(witnesses))?;
            EXIT_OK
        }
        FilterStatus::Fail => {
            writeln!(io.out, "fail: not MAT2-free (necessary condition)")?;
            EXIT_FAILED
        }
        FilterStatus::Inapplicable => {
            writeln!(io.out, "inapplicable: empty arrangement")?;
            EXIT_OK
        }
    })
}

fn emit(io: &mut Io<'_>, out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => write_file(p, text),
        None => Ok(write!(io.out, "{text}")?),
    }
}

fn cmd_restrict(args: &RestrictArgs, limit: u32, io: &mut Io<'_>) -> Result<i32> {
    let src = load(&args.source, limit)?;
    let a = &src.arrangement;
    if args.hyperplane == 0 || args.hyperplane > a.len() {
        return Err(Error::IndexOutOfRange { index: args.hyperplane, len: a.len() });
    }
    let h = a.get(args.hyperplane - 1)?;
    let count = restriction(a, h)?.len();
    let r = restrict_arrangement(a, h)?;
    debug_assert_eq!(count, r.len());
    let text = format!(
        "# restriction to hyperplane {}: |A^H| = {}, |A| - |A^H| = {}\n{}",
        args.hyperplane,
        count,
        a.len() - count,
        r.to_text()
    );
    emit(io, &args.out, &text)?;
    Ok(EXIT_OK)
}

fn parse_subspace(text: &str, a: &Arrangement) -> Result<Subspace> {
    let n = a.conductor();
    let rows: Vec<Row> = text
        .split('|')
        .map(|row| {
            let entries: Vec<&str> = row.split(';').map(str::trim).collect();
            if entries.len() != a.dim() {
                return Err(Error::DimensionMismatch { expected: a.dim(), found: entries.len() });
            }
            entries
                .iter()
                .map(|e| CycloScalar::parse(e, n).map_err(|msg| Error::Parse { line: 1, msg }))
                .collect()
        })
        .collect::<Result<_>>()?;
    Subspace::from_forms(a.dim(), rows)
}

fn cmd_localize(args: &LocalizeArgs, limit: u32, io: &mut Io<'_>) -> Result<i32> {
    let src = load(&args.source, limit)?;
    let a = &src.arrangement;
    let x = match (&args.subspace, &args.meet) {
        (Some(t), _) => parse_subspace(t, a)?,
        (None, Some(m)) => {
            let idx = parse_blocks(m, a.len())?.concat();
            let hs: Vec<_> = idx.iter().map(|&i| a.hyperplanes()[i].clone()).collect();
            intersection_subspace(&hs)?
        }
        (None, None) => return Err(Error::InvalidParameters("give --subspace or --meet".into())),
    };
    let loc = localization(a, &x);
    let members: Vec<usize> = (0..a.len()).filter(|&i| loc.contains(&a.hyperplanes()[i])).collect();
    let text = format!("# localization: hyperplanes {} of the input\n{}", fmt_set(&members), loc.to_text());
    emit(io, &args.out, &text)?;
    Ok(EXIT_OK)
}

fn factor_certificate(src: &Source, cert: &Option<PathBuf>) -> Result<Option<MatCertificate>> {
    let blocks = match cert {
        Some(p) => {
            let doc = read_doc(p)?;
            if doc.kind != Kind::Mat {
                return Err(Error::Certificate("product certificates need mat documents".into()));
            }
            doc.mat_blocks(src.arrangement.len())?
        }
        None => match src.entry.as_ref().and_then(CatalogEntry::blocks) {
            Some(b) => b.to_vec(),
            None => return Ok(None),
        },
    };
    match verify_mat_partition(&src.arrangement, &blocks)? {
        Verification::Certified(c) => Ok(Some(c)),
        Verification::Rejected(r) => Err(Error::Certificate(format!("factor certificate rejected: {r}"))),
    }
}

fn cmd_product(args: &ProductArgs, limit: u32, io: &mut Io<'_>) -> Result<i32> {
    let s1 = load(&args.first, limit)?;
    let s2 = load(&args.second, limit)?;
    let p = product(&s1.arrangement, &s2.arrangement);
    emit(io, &args.out, &p.to_text())?;
    let (c1, c2) = (factor_certificate(&s1, &args.cert1)?, factor_certificate(&s2, &args.cert2)?);
    if let (Some(c1), Some(c2)) = (c1, c2) {
        let c = product_partition(&c1, &c2)?;
        writeln!(io.err, "product blocks {} exponents {}", format_blocks(&c.blocks), c.exponents)?;
        if let Some(path) = &args.cert_out {
            let label = args.out.as_ref().map_or_else(|| "product".to_string(), |p| p.display().to_string());
            write_file(path, &CertificateDoc::from_mat(&c, &label).to_json())?;
        }
    } else if args.cert_out.is_some() {
        return Err(Error::Certificate("both factors need a certificate".into()));
    }
    Ok(EXIT_OK)
}

fn cmd_filtration(args: &FiltrationArgs, limit: u32, io: &mut Io<'_>) -> Result<i32> {
    let src = load(&args.source, limit)?;
    let a = &src.arrangement;
    let v = match (&args.certificate, args.builtin) {
        (Some(p), _) => read_doc(p)?.verify(a)?,
        (None, true) => {
            let entry =
                src.entry.as_ref().ok_or_else(|| Error::Certificate("--builtin needs a catalog name".into()))?;
            builtin_verification(entry, a)?
        }
        (None, false) => return Err(Error::Certificate("give a certificate file or --builtin".into())),
    };
    let c = match v {
        Verification::Certified(c) => c,
        Verification::Rejected(r) => {
            writeln!(io.out, "rejected: {r}")?;
            return Ok(EXIT_FAILED);
        }
    };
    writeln!(io.out, "size added exponents")?;
    for step in free_filtration(&c)? {
        writeln!(io.out, "{} {} {}", step.size, step.added + 1, step.exponents)?;
    }
    Ok(EXIT_OK)
}
