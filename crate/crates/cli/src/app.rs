use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use relcat_core::census::{
    cross_check_theorem1, cross_check_theorems23, enumerate_frobenius, enumerate_groupoids, enumerate_hstar,
    enumerate_lcr_semigroupoids, CensusError, FixtureCorpus, FixtureStructure,
};
use relcat_core::correspond::{
    frob_to_groupoid, groupoid_to_frob, hstar_to_sgpd, literal_unit_relation, roundtrip_frob, roundtrip_groupoid,
    roundtrip_sgpd, sgpd_to_hstar, CorrespondError,
};
use relcat_core::frobenius::{check_frobenius, check_hstar, FrobCandidate, FrobError, HStarCandidate};
use relcat_core::groupoid::{
    check_groupoid, check_local_cancellativity, check_local_cancellativity_with, check_semigroupoid, is_regular,
    Cancellation, Semigroupoid,
};
use relcat_core::report::{all_pass, failures, CheckReport, Verdict};
use relcat_core::weakmonoid::{
    check_cyclic, check_weak_monoid, check_weak_star, monoid_projector_to_weak, monoid_to_weak, quotient_by_projector,
};

use crate::emit;
use crate::manifest::{self, Expectation};
use crate::resolve::{load, Document, Resolved, Structure};
use crate::syntax::{print, BlockKind, Diagnostic, StructureFile};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "relcat",
    version,
    about = "Check, convert and enumerate relative Frobenius algebras, H*-algebras, groupoids and weak monoids in Rel"
)]
struct Cli {
    /// Print one JSON object per line instead of text (see docs/json-lines.md).
    #[arg(long, global = true)]
    json_lines: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the axiom checks for every structure of a kind in FILE.
    Check {
        kind: CheckKind,
        file: PathBuf,
        /// Add the literal readings as informational reports.
        #[arg(long)]
        strict: bool,
        /// Print the instantiated equation for each failure.
        #[arg(long)]
        explain: bool,
    },
    /// Convert every matching structure in FILE.
    Convert {
        conversion: Conversion,
        file: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Convert there and back and compare.
    Roundtrip { kind: RoundtripKind, file: PathBuf },
    /// Enumerate every structure of a kind on a carrier of the given size.
    Enumerate {
        kind: CensusKind,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        count_only: bool,
        /// Write one file per structure and a manifest into DIR.
        #[arg(long, value_name = "DIR")]
        emit: Option<PathBuf>,
    },
    /// Compare censuses through the conversions.
    Crosscheck {
        which: CrossCheck,
        #[arg(long)]
        size: usize,
    },
    /// Quotient a commutative monoid by a projector.
    Quotient {
        file: PathBuf,
        #[arg(long, value_name = "LBL")]
        projector: String,
    },
    /// Write the reference fixtures and their manifest.
    Fixtures {
        #[arg(long, value_name = "DIR")]
        emit: PathBuf,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CheckKind {
    Frob,
    Hstar,
    Groupoid,
    Sgpd,
    Weak,
    Weakstar,
    Cyclic,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Conversion {
    FrobToGpd,
    GpdToFrob,
    SgpdToHstar,
    HstarToSgpd,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RoundtripKind {
    Frob,
    Gpd,
    Sgpd,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CensusKind {
    Frob,
    Gpd,
    Hstar,
    LcrSgpd,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CrossCheck {
    Thm1,
    Thm23,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}:{}:{}: {}", path.display(), diag.loc.line, diag.loc.col, diag.message)]
    Parse { path: PathBuf, diag: Diagnostic },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Cap(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Cap(_) => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            CensusError::BadOverride(_) => CliError::Usage(e.to_string()),
        }
    }
}

fn frob_error(e: FrobError) -> CliError {
    match e {
        FrobError::CapExceeded { .. } => CliError::Cap(e.to_string()),
        other => CliError::Usage(other.to_string()),
    }
}

struct Ctx<'a> {
    out: &'a mut dyn Write,
    json: bool,
}

impl Ctx<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", s.as_ref());
    }

    fn json(&mut self, v: Value) {
        let _ = writeln!(self.out, "{v}");
    }
}

/// Runs one command line (including the program name) and returns the exit
/// code: 0 all checks pass, 1 a check failed, 2 parse or usage error, 3 a
/// size cap was exceeded.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        out,
        json: cli.json_lines,
    };
    match dispatch(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(e) => {
            if ctx.json {
                let mut v = json!({"type": "error", "exit": e.code(), "message": e.to_string()});
                if let CliError::Parse { path, diag } = &e {
                    v = json!({
                        "type": "diagnostic",
                        "exit": e.code(),
                        "file": path.display().to_string(),
                        "severity": diag.severity.name(),
                        "line": diag.loc.line,
                        "column": diag.loc.col,
                        "message": diag.message,
                    });
                }
                ctx.json(v);
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            e.code()
        }
    }
}

fn dispatch(ctx: &mut Ctx, command: Command) -> Result<i32, CliError> {
    match command {
        Command::Check {
            kind,
            file,
            strict,
            explain,
        } => check(ctx, kind, &file, strict, explain),
        Command::Convert { conversion, file, out } => convert(ctx, conversion, &file, out.as_deref()),
        Command::Roundtrip { kind, file } => roundtrip(ctx, kind, &file),
        Command::Enumerate {
            kind,
            size,
            count_only,
            emit,
        } => enumerate(ctx, kind, size, count_only, emit.as_deref()),
        Command::Crosscheck { which, size } => crosscheck(ctx, which, size),
        Command::Quotient { file, projector } => quotient(ctx, &file, &projector),
        Command::Fixtures { emit } => fixtures(ctx, &emit),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn create_dir(path: &Path) -> Result<(), CliError> {
    fs::create_dir_all(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load_file(path: &Path) -> Result<Document, CliError> {
    load(&read(path)?).map_err(|diag| CliError::Parse {
        path: path.to_owned(),
        diag,
    })
}

fn targets<'a>(doc: &'a Document, kinds: &[BlockKind], path: &Path) -> Result<Vec<&'a Resolved>, CliError> {
    let found: Vec<&Resolved> = doc.of_kind(kinds).collect();
    if found.is_empty() {
        let names: Vec<&str> = kinds.iter().map(|k| k.keyword()).collect();
        return Err(CliError::Usage(format!(
            "{}: no {} declaration",
            path.display(),
            names.join(" or ")
        )));
    }
    Ok(found)
}

// ---------------------------------------------------------------------------
// check

fn frob_of(s: &Structure) -> &FrobCandidate {
    match s {
        Structure::Frob(c) => c,
        Structure::HStar(h) => h.base(),
        _ => unreachable!("filtered by kind"),
    }
}

fn sgpd_of(s: &Structure) -> &Semigroupoid {
    match s {
        Structure::Sgpd(g) => g,
        Structure::Groupoid(g) => g.base(),
        _ => unreachable!("filtered by kind"),
    }
}

fn accepted(kind: CheckKind) -> &'static [BlockKind] {
    match kind {
        CheckKind::Frob | CheckKind::Hstar => &[BlockKind::Frob, BlockKind::HStar],
        CheckKind::Groupoid => &[BlockKind::Groupoid],
        CheckKind::Sgpd => &[BlockKind::Sgpd, BlockKind::Groupoid],
        CheckKind::Weak => &[BlockKind::Weak, BlockKind::Monoid],
        CheckKind::Weakstar => &[BlockKind::WeakStar],
        CheckKind::Cyclic => &[BlockKind::Cyclic],
    }
}

fn reports_for(kind: CheckKind, s: &Structure, strict: bool) -> Result<Vec<CheckReport>, CliError> {
    let mut reports = match kind {
        CheckKind::Frob => {
            let c = frob_of(s);
            let mut r = check_frobenius(c);
            if strict {
                r.push(literal_unit_relation(c));
            }
            r
        }
        CheckKind::Hstar => {
            let h: HStarCandidate = match s {
                Structure::HStar(h) => h.clone(),
                other => frob_of(other).clone().into(),
            };
            check_hstar(&h).map_err(frob_error)?
        }
        CheckKind::Groupoid => match s {
            Structure::Groupoid(g) => check_groupoid(g),
            _ => unreachable!("filtered by kind"),
        },
        CheckKind::Sgpd => {
            let g = sgpd_of(s);
            let mut r = check_semigroupoid(g);
            r.push(is_regular(g));
            r.push(check_local_cancellativity(g));
            if strict {
                r.push(check_local_cancellativity_with(g, Cancellation::Literal).informational());
            }
            r
        }
        CheckKind::Weak => match s {
            Structure::Weak(w) => check_weak_monoid(w),
            Structure::Monoid(m) => check_weak_monoid(&monoid_to_weak(m)),
            _ => unreachable!("filtered by kind"),
        },
        CheckKind::Weakstar => match s {
            Structure::WeakStar(w) => check_weak_star(w),
            _ => unreachable!("filtered by kind"),
        },
        CheckKind::Cyclic => match s {
            Structure::Cyclic(w) => check_cyclic(w),
            _ => unreachable!("filtered by kind"),
        },
    };
    // informational reports stay visible but sort after the gating ones
    reports.sort_by_key(|r| r.informational);
    Ok(reports)
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
        Verdict::Internal => "internal",
    }
}

pub(crate) fn report_json(structure: &str, kind: &str, r: &CheckReport) -> Value {
    let w = r.witness.as_ref();
    json!({
        "type": "report",
        "structure": structure,
        "kind": kind,
        "law": r.law.name(),
        "verdict": verdict_name(r.verdict),
        "informational": r.informational,
        "clause": w.map(|w| w.clause.clone()),
        "elements": w.map(|w| w.elements.clone()),
        "equation": w.map(|w| w.equation.clone()),
        "unit": r.unit.as_ref().map(|u| u.labels()),
        "note": r.note,
    })
}

fn print_reports(ctx: &mut Ctx, kind: &str, name: &str, reports: &[CheckReport], explain: bool) -> bool {
    let ok = all_pass(reports);
    if ctx.json {
        for r in reports {
            ctx.json(report_json(name, kind, r));
        }
        ctx.json(json!({"type": "result", "structure": name, "kind": kind, "passed": ok}));
        return ok;
    }
    ctx.line(format!("{kind} {name}: {}", if ok { "pass" } else { "FAIL" }));
    for r in reports {
        ctx.line(format!("  {r}"));
        if explain || r.verdict == Verdict::Internal {
            if let Some(w) = &r.witness {
                ctx.line(format!("      {}", w.equation));
            }
            if let Some(n) = &r.note {
                ctx.line(format!("      note: {n}"));
            }
        }
    }
    ok
}

fn check(ctx: &mut Ctx, kind: CheckKind, path: &Path, strict: bool, explain: bool) -> Result<i32, CliError> {
    let doc = load_file(path)?;
    let label = kind
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned();
    let mut ok = true;
    for r in targets(&doc, accepted(kind), path)? {
        let reports = reports_for(kind, &r.structure, strict)?;
        ok &= print_reports(ctx, &label, &r.name, &reports, explain);
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}

// ---------------------------------------------------------------------------
// convert and roundtrip

fn conversion_failure(ctx: &mut Ctx, what: &str, name: &str, e: &CorrespondError) {
    if ctx.json {
        ctx.json(json!({"type": "conversion-failed", "structure": name, "conversion": what, "message": e.to_string()}));
        return;
    }
    ctx.line(format!("{what} {name}: {e}"));
    if let CorrespondError::Precondition(f) | CorrespondError::Construction(f) = e {
        for r in failures(&f.0) {
            ctx.line(format!("  {r}"));
        }
    }
}

fn convert(ctx: &mut Ctx, conversion: Conversion, path: &Path, out: Option<&Path>) -> Result<i32, CliError> {
    let doc = load_file(path)?;
    let what = conversion
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned();
    let kinds: &[BlockKind] = match conversion {
        Conversion::FrobToGpd | Conversion::HstarToSgpd => &[BlockKind::Frob, BlockKind::HStar],
        Conversion::GpdToFrob => &[BlockKind::Groupoid],
        Conversion::SgpdToHstar => &[BlockKind::Sgpd, BlockKind::Groupoid],
    };
    let mut files = Vec::new();
    let mut ok = true;
    for r in targets(&doc, kinds, path)? {
        let s = &r.structure;
        let converted: Result<StructureFile, CorrespondError> = match conversion {
            Conversion::FrobToGpd => frob_to_groupoid(frob_of(s)).map(|g| emit::groupoid(&r.name, &g)),
            Conversion::GpdToFrob => match s {
                Structure::Groupoid(g) => groupoid_to_frob(g).map(|c| emit::frob(&r.name, &c)),
                _ => unreachable!("filtered by kind"),
            },
            Conversion::SgpdToHstar => sgpd_to_hstar(sgpd_of(s)).map(|h| emit::hstar(&r.name, &h)),
            Conversion::HstarToSgpd => {
                let h: HStarCandidate = match s {
                    Structure::HStar(h) => h.clone(),
                    other => frob_of(other).clone().into(),
                };
                hstar_to_sgpd(&h).map(|g| emit::sgpd(&r.name, &g))
            }
        };
        match converted {
            Ok(f) => files.push(f),
            Err(e) => {
                ok = false;
                conversion_failure(ctx, &what, &r.name, &e);
            }
        }
    }
    if !ok {
        return Ok(EXIT_FAIL);
    }
    let merged = emit::merge(files).map_err(CliError::Usage)?;
    let text = print(&merged);
    match out {
        Some(p) => write(p, &text)?,
        None if ctx.json => ctx.json(json!({"type": "converted", "conversion": what, "text": text})),
        None => {
            let _ = write!(ctx.out, "{text}");
        }
    }
    Ok(EXIT_PASS)
}

fn roundtrip(ctx: &mut Ctx, kind: RoundtripKind, path: &Path) -> Result<i32, CliError> {
    let doc = load_file(path)?;
    let kinds: &[BlockKind] = match kind {
        RoundtripKind::Frob => &[BlockKind::Frob, BlockKind::HStar],
        RoundtripKind::Gpd => &[BlockKind::Groupoid],
        RoundtripKind::Sgpd => &[BlockKind::Sgpd, BlockKind::Groupoid],
    };
    let mut all_ok = true;
    for r in targets(&doc, kinds, path)? {
        let (ok, detail) = match kind {
            RoundtripKind::Frob => match roundtrip_frob(frob_of(&r.structure)) {
                Ok(true) => (true, "exact".to_owned()),
                Ok(false) => (false, "multiplication changed".to_owned()),
                Err(e) => (false, e.to_string()),
            },
            RoundtripKind::Gpd => {
                let Structure::Groupoid(g) = &r.structure else {
                    unreachable!("filtered by kind")
                };
                match roundtrip_groupoid(g) {
                    Ok(iso) => {
                        let back = frob_to_groupoid(&groupoid_to_frob(g).expect("round trip succeeded"))
                            .expect("round trip succeeded");
                        let pairs: Vec<String> = iso
                            .object_map
                            .iter()
                            .enumerate()
                            .map(|(x, &y)| format!("{} ↦ {}", g.objects().label(x), back.objects().label(y)))
                            .collect();
                        (true, format!("isomorphism verified; objects {}", pairs.join(", ")))
                    }
                    Err(e) => (false, e.to_string()),
                }
            }
            RoundtripKind::Sgpd => match roundtrip_sgpd(sgpd_of(&r.structure)) {
                Ok(rep) if rep.passed() => (true, rep.note.clone().unwrap_or_else(|| "pass".into())),
                Ok(rep) => (
                    false,
                    rep.witness
                        .map_or_else(|| "fail".into(), |w| format!("{} ({})", w.equation, w.clause)),
                ),
                Err(e) => (false, e.to_string()),
            },
        };
        all_ok &= ok;
        if ctx.json {
            ctx.json(json!({"type": "roundtrip", "structure": r.name, "passed": ok, "detail": detail}));
        } else {
            ctx.line(format!(
                "{} {}: {} ({detail})",
                r.kind,
                r.name,
                if ok { "pass" } else { "FAIL" }
            ));
        }
    }
    Ok(if all_ok { EXIT_PASS } else { EXIT_FAIL })
}

// ---------------------------------------------------------------------------
// census

/// `hg=v` cells of a table, labels concatenated.
fn describe_table(c: &FrobCandidate) -> String {
    let n = c.len();
    let t = c.table().expect("census tables are single valued");
    let cells: Vec<String> = t
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| format!("{}{}={}", c.label(i / n), c.label(i % n), c.label(v))))
        .collect();
    cells.join(" ")
}

fn describe_sgpd(g: &Semigroupoid) -> String {
    let a = g.arrows();
    let ends: Vec<String> = (0..a.len())
        .map(|f| {
            let o = |x: usize| g.objects().label(x).to_owned();
            format!("{}:{}->{}", a.label(f), o(g.source(f)), o(g.target(f)))
        })
        .collect();
    let n = a.len();
    let cells: Vec<String> = g
        .comp_table()
        .iter()
        .enumerate()
        .filter_map(|(i, v)| v.map(|v| format!("{}{}={}", a.label(i / n), a.label(i % n), a.label(v))))
        .collect();
    format!("{} | {}", ends.join(" "), cells.join(" "))
}

struct Census {
    kind: &'static str,
    tag: &'static str,
    entries: Vec<(String, StructureFile)>,
}

fn run_census(kind: CensusKind, n: usize) -> Result<Census, CliError> {
    let name = |tag: &str, i: usize| format!("{tag}_{n}_{:03}", i + 1);
    Ok(match kind {
        CensusKind::Frob => Census {
            kind: "frob",
            tag: "frob",
            entries: enumerate_frobenius(n)?
                .structures
                .iter()
                .enumerate()
                .map(|(i, c)| (describe_table(c), emit::frob(&name("frob", i), c)))
                .collect(),
        },
        CensusKind::Hstar => Census {
            kind: "hstar",
            tag: "hstar",
            entries: enumerate_hstar(n)?
                .structures
                .iter()
                .enumerate()
                .map(|(i, c)| (describe_table(c.base()), emit::hstar(&name("hstar", i), c)))
                .collect(),
        },
        CensusKind::Gpd => Census {
            kind: "gpd",
            tag: "gpd",
            entries: enumerate_groupoids(n)?
                .structures
                .iter()
                .enumerate()
                .map(|(i, g)| (describe_sgpd(g.base()), emit::groupoid(&name("gpd", i), g)))
                .collect(),
        },
        CensusKind::LcrSgpd => Census {
            kind: "lcr-sgpd",
            tag: "lcr",
            entries: enumerate_lcr_semigroupoids(n)?
                .structures
                .iter()
                .enumerate()
                .map(|(i, g)| (describe_sgpd(g), emit::sgpd(&name("lcr", i), g)))
                .collect(),
        },
    })
}

fn enumerate(ctx: &mut Ctx, kind: CensusKind, n: usize, count_only: bool, dir: Option<&Path>) -> Result<i32, CliError> {
    let start = std::time::Instant::now();
    let census = run_census(kind, n)?;
    let elapsed = start.elapsed();
    let count = census.entries.len();
    if ctx.json {
        ctx.json(json!({
            "type": "census",
            "kind": census.kind,
            "n": n,
            "count": count,
            "elapsed_ms": elapsed.as_millis() as u64,
        }));
    } else {
        ctx.line(format!("{} census, n = {n}: {count} structures", census.kind));
    }
    if !count_only {
        for (i, (desc, _)) in census.entries.iter().enumerate() {
            if ctx.json {
                ctx.json(json!({"type": "structure", "index": i + 1, "description": desc}));
            } else {
                ctx.line(format!("  {:>3}  {desc}", i + 1));
            }
        }
    }
    if let Some(dir) = dir {
        create_dir(dir)?;
        let mut manifest = format!("# census\nkind {}\nsize {n}\ncount {count}\n", census.kind);
        for (i, (_, file)) in census.entries.iter().enumerate() {
            let fname = format!("{}_{n}_{:03}.struct", census.tag, i + 1);
            write(&dir.join(&fname), &print(file))?;
            manifest.push_str(&format!("file {fname}\n"));
        }
        write(&dir.join("manifest.txt"), &manifest)?;
    }
    Ok(EXIT_PASS)
}

fn crosscheck(ctx: &mut Ctx, which: CrossCheck, n: usize) -> Result<i32, CliError> {
    let (name, passed, text) = match which {
        CrossCheck::Thm1 => {
            let r = cross_check_theorem1(n)?;
            ("thm1", r.passed(), r.to_string())
        }
        CrossCheck::Thm23 => {
            let r = cross_check_theorems23(n)?;
            ("thm23", r.passed(), r.to_string())
        }
    };
    if ctx.json {
        ctx.json(json!({"type": "crosscheck", "which": name, "n": n, "passed": passed, "report": text}));
    } else {
        ctx.line(text.trim_end());
    }
    Ok(if passed { EXIT_PASS } else { EXIT_FAIL })
}

// ---------------------------------------------------------------------------
// quotient and fixtures

fn quotient(ctx: &mut Ctx, path: &Path, projector: &str) -> Result<i32, CliError> {
    let doc = load_file(path)?;
    let mut files = Vec::new();
    let mut ok = true;
    for r in targets(&doc, &[BlockKind::Monoid], path)? {
        let Structure::Monoid(m) = &r.structure else {
            unreachable!("filtered by kind")
        };
        let p = m
            .carrier()
            .index_of(projector)
            .ok_or_else(|| CliError::Usage(format!("monoid {} has no element '{projector}'", r.name)))?;
        let weak = monoid_projector_to_weak(m, p).map(|w| check_weak_monoid(&w));
        match (weak, quotient_by_projector(m, p)) {
            (Ok(reports), Ok(q)) => {
                let weak_ok = all_pass(&reports);
                ok &= weak_ok;
                let x = m.carrier();
                let classes: Vec<String> = (0..m.len())
                    .filter(|&a| a <= m.mul(p, a))
                    .map(|a| {
                        let b = m.mul(p, a);
                        if a == b {
                            format!("{{{}}}", x.label(a))
                        } else {
                            format!("{{{}, {}}}", x.label(a), x.label(b))
                        }
                    })
                    .collect();
                let file = emit::monoid(&format!("{}_q", r.name), &q);
                if ctx.json {
                    for rep in &reports {
                        ctx.json(report_json(&r.name, "weak", rep));
                    }
                    ctx.json(json!({
                        "type": "quotient",
                        "structure": r.name,
                        "classes": classes,
                        "weak_monoid": weak_ok,
                        "text": print(&file),
                    }));
                } else {
                    ctx.line(format!("# {} by {projector}: classes {}", r.name, classes.join(" ")));
                    ctx.line(format!(
                        "# weak monoid with L1 = {{{}, {projector}}}: {}",
                        m.carrier().label(m.one()),
                        if weak_ok { "pass" } else { "FAIL" }
                    ));
                }
                files.push(file);
            }
            (Err(e), _) | (_, Err(e)) => {
                ok = false;
                if ctx.json {
                    ctx.json(json!({"type": "quotient-failed", "structure": r.name, "message": e.to_string()}));
                } else {
                    ctx.line(format!("quotient {}: {e}", r.name));
                }
            }
        }
    }
    if !files.is_empty() && !ctx.json {
        let merged = emit::merge(files).map_err(CliError::Usage)?;
        let _ = write!(ctx.out, "{}", print(&merged));
    }
    Ok(if ok { EXIT_PASS } else { EXIT_FAIL })
}

/// What each reference fixture is expected to do under `check`.
pub fn fixture_expectations() -> Vec<Expectation> {
    let e = |file: &str, check: &str, failing: &[&str]| Expectation {
        file: format!("{file}.struct"),
        check: check.into(),
        failing: failing.iter().map(|s| s.to_string()).collect(),
    };
    let mut out = Vec::new();
    for name in ["Z1", "Z2", "D2", "P2"] {
        out.push(e(name, "frob", &[]));
        out.push(e(name, "hstar", &[]));
    }
    out.push(e("SL2", "frob", &["F"]));
    out.push(e("SL2", "hstar", &["H"]));
    out.push(e("RB2", "sgpd", &["local-cancellativity"]));
    out.push(e("M5", "weak", &[]));
    out
}

/// The reference fixtures as canonical file text, by name.
pub fn fixture_files() -> Vec<(String, String)> {
    FixtureCorpus::new()
        .iter()
        .map(|(name, s)| {
            let file = match s {
                FixtureStructure::Frob(c) => emit::frob(name, c),
                FixtureStructure::Semigroupoid(g) => emit::sgpd(name, g),
                FixtureStructure::Monoid(m) => emit::monoid(name, m),
            };
            (name.to_owned(), print(&file))
        })
        .collect()
}

fn fixtures(ctx: &mut Ctx, dir: &Path) -> Result<i32, CliError> {
    create_dir(dir)?;
    let files = fixture_files();
    for (name, text) in &files {
        write(&dir.join(format!("{name}.struct")), text)?;
    }
    write(&dir.join("manifest.txt"), &manifest::print(&fixture_expectations()))?;
    if ctx.json {
        ctx.json(json!({"type": "fixtures", "dir": dir.display().to_string(), "count": files.len()}));
    } else {
        ctx.line(format!(
            "wrote {} fixtures and manifest.txt to {}",
            files.len(),
            dir.display()
        ));
    }
    Ok(EXIT_PASS)
}
