//! The `lch` command line.
//!
//! Exit codes: 0 success, 1 when `obstruct` finds an obstruction, 2 on any
//! usage, parse or computation error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::algebra::{Field, LaurentPoly};
use crate::augcat::{check_pairs, gaps_only_in_low_degrees, PairReport};
use crate::augment::{enumerate_augmentations, spectrum_of};
use crate::diagram::{parse_front, resolve, rotation, tb, FrontDiagram};
use crate::dga::{build_dga, check_dga, DgaJson, DgaReport};
use crate::error::{Error, Result};
use crate::library::builtins;
use crate::obstruct::{obstruct, CobordismHypothesis, Verdict};
use crate::rulings::{summarize, RulingSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OBSTRUCTED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lch", version, about = "Legendrian knot invariants and cobordism obstructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Opts {
    /// Comma-separated list of primes.
    #[arg(long, value_delimiter = ',', default_value = "2")]
    q: Vec<u32>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the built-in knots.
    List {
        #[arg(long)]
        json: bool,
    },
    /// Print the DGA and its axiom checks.
    Dga {
        /// `@name`, a front file, or a directory of front files.
        knot: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// tb, rotation, augmentation count and LCH spectrum.
    Invariants {
        knot: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Ruling polynomial and homotopy cardinality.
    Rulings {
        knot: String,
        #[command(flatten)]
        opts: Opts,
        #[arg(long)]
        ungraded_rulings: bool,
    },
    /// Hom complexes of the augmentation category.
    Homcat {
        knot: String,
        #[command(flatten)]
        opts: Opts,
    },
    /// Test a hypothetical exact Lagrangian cobordism from MINUS to PLUS.
    Obstruct {
        minus: String,
        plus: String,
        #[arg(long, allow_negative_numbers = true, conflicts_with = "genus", required_unless_present = "genus")]
        chi: Option<i64>,
        #[arg(long)]
        genus: Option<u32>,
        #[command(flatten)]
        opts: Opts,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match thread_limit() {
        Ok(Some(n)) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(cli.command)),
            Err(e) => Err(Error::Domain(format!("cannot build thread pool: {e}"))),
        },
        Ok(None) => execute(cli.command),
        Err(e) => Err(e),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn thread_limit() -> Result<Option<usize>> {
    match std::env::var("LCH_THREADS") {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(Error::Domain(format!("LCH_THREADS must be a positive integer, got {v:?}"))),
        },
    }
}

/// `@name` selects a built-in, a directory selects every file in it
/// (sorted by name), anything else is read as a front file.
pub fn load_targets(arg: &str) -> Result<Vec<FrontDiagram>> {
    if let Some(name) = arg.strip_prefix('@') {
        return Ok(vec![crate::library::builtin(name)?]);
    }
    let path = Path::new(arg);
    if path.is_dir() {
        let io = |e: std::io::Error| Error::Io { path: arg.to_string(), message: e.to_string() };
        let mut files: Vec<_> = std::fs::read_dir(path)
            .map_err(io)?
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.is_file() && !p.file_name().is_some_and(|n| n.to_string_lossy().starts_with('.')))
            .collect();
        files.sort();
        return files.iter().map(|p| load_file(p)).collect();
    }
    Ok(vec![load_file(path)?])
}

fn load_file(path: &Path) -> Result<FrontDiagram> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    let front = parse_front(&text)?;
    if front.name().is_empty() {
        let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        return Ok(front.with_name(stem));
    }
    Ok(front)
}

fn single(arg: &str) -> Result<FrontDiagram> {
    let mut v = load_targets(arg)?;
    if v.len() != 1 {
        return Err(Error::Domain(format!("{arg} must name exactly one front")));
    }
    Ok(v.remove(0))
}

fn check_fields(qs: &[u32]) -> Result<()> {
    if qs.is_empty() {
        return Err(Error::Domain("--q needs at least one prime".into()));
    }
    for &q in qs {
        Field::new(q)?;
    }
    Ok(())
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

/// One object for a single target, an array otherwise.
fn json_many<T: Serialize>(items: &[T]) -> String {
    if items.len() == 1 {
        json(&items[0])
    } else {
        json(&items)
    }
}

fn execute(cmd: Command) -> Result<(String, i32)> {
    let text = match cmd {
        Command::List { json: as_json } => list(as_json),
        Command::Dga { knot, opts } => {
            per_target(&knot, &opts, dga_report, |r| json_many(&r.iter().map(|x| &x.0).collect::<Vec<_>>()), dga_text)?
        }
        Command::Invariants { knot, opts } => per_target(&knot, &opts, invariants_report, json_many, invariants_text)?,
        Command::Rulings { knot, opts, ungraded_rulings } => per_target(
            &knot,
            &opts,
            |f, qs| rulings_report(f, qs, !ungraded_rulings),
            json_many,
            rulings_text,
        )?,
        Command::Homcat { knot, opts } => per_target(&knot, &opts, homcat_report, json_many, homcat_text)?,
        Command::Obstruct { minus, plus, chi, genus, opts } => {
            check_fields(&opts.q)?;
            let (lo, hi) = (single(&minus)?, single(&plus)?);
            let h = match (chi, genus) {
                (Some(c), _) => CobordismHypothesis::new(lo, hi, c, opts.q.clone())?,
                (None, Some(g)) => CobordismHypothesis::with_genus(lo, hi, g, opts.q.clone())?,
                (None, None) => return Err(Error::Domain("one of --chi or --genus is required".into())),
            };
            let report = obstruct(&h)?;
            let code = if report.obstructed() { EXIT_OBSTRUCTED } else { EXIT_OK };
            let text = if opts.json {
                json(&report)
            } else {
                let mut s = format!("minus: {}\nplus: {}\nchi: {}\n", report.minus, report.plus, report.chi);
                for t in &report.tests {
                    let q = t.q.map(|q| format!(" q={q}")).unwrap_or_default();
                    s.push_str(&format!("[{}] {}{q}: {}\n", if t.passed { "PASS" } else { "FAIL" }, t.name, t.details));
                }
                s.push_str(&format!("verdict: {}\n", report.verdict.as_str()));
                if report.verdict == Verdict::NoObstructionFound {
                    s.push_str("(these tests are necessary conditions only; existence is not claimed)\n");
                }
                s
            };
            return Ok((text, code));
        }
    };
    Ok((text, EXIT_OK))
}

fn per_target<R>(
    knot: &str,
    opts: &Opts,
    build: impl Fn(&FrontDiagram, &[u32]) -> Result<R>,
    to_json: impl Fn(&[R]) -> String,
    to_text: impl Fn(&R) -> String,
) -> Result<String> {
    check_fields(&opts.q)?;
    let reports = load_targets(knot)?.iter().map(|f| build(f, &opts.q)).collect::<Result<Vec<R>>>()?;
    if opts.json {
        Ok(to_json(&reports))
    } else {
        Ok(reports.iter().map(to_text).collect::<Vec<_>>().join("\n"))
    }
}

#[derive(Serialize)]
struct ListEntry {
    name: &'static str,
    tb: i64,
    r: i64,
    crossings: usize,
    note: &'static str,
}

fn list(as_json: bool) -> String {
    let entries: Vec<ListEntry> = builtins()
        .iter()
        .map(|(e, f)| ListEntry { name: e.name, tb: e.tb, r: e.rotation, crossings: f.num_crossings(), note: e.note })
        .collect();
    if as_json {
        return json(&entries);
    }
    let mut s = format!("{:<12} {:>4} {:>3} {:>9}  note\n", "name", "tb", "r", "crossings");
    for e in &entries {
        s.push_str(&format!("{:<12} {:>4} {:>3} {:>9}  {}\n", e.name, e.tb, e.r, e.crossings, e.note));
    }
    s
}

#[derive(Serialize)]
struct DgaField {
    q: u32,
    #[serde(flatten)]
    dga: DgaJson,
    checks: DgaReport,
}

#[derive(Serialize)]
struct DgaOutput {
    knot: String,
    fields: Vec<DgaField>,
}

fn dga_report(f: &FrontDiagram, qs: &[u32]) -> Result<(DgaOutput, Vec<String>)> {
    let rd = resolve(f)?;
    let mut fields = Vec::new();
    let mut texts = Vec::new();
    for &q in qs {
        let d = build_dga(&rd, q)?;
        let checks = check_dga(&d);
        let mut s = format!("F_{q}:\n");
        for (g, gen) in d.generators().iter().enumerate() {
            s.push_str(&format!("  |{}| = {}   d{} = {}\n", gen.id, gen.degree, gen.id, d.display_poly(d.differential(g))));
        }
        s.push_str(&format!(
            "  d^2 = 0: {}; deg d = -1: {}; Euler count {} vs tb {}: {}\n",
            yes(checks.d_squared_zero),
            yes(checks.degree_minus_one),
            checks.euler_count,
            checks.tb,
            yes(checks.euler_matches_tb)
        ));
        for fail in &checks.failures {
            s.push_str(&format!("  failure: {fail}\n"));
        }
        texts.push(s);
        fields.push(DgaField { q, dga: d.to_json(), checks });
    }
    Ok((DgaOutput { knot: f.name().to_string(), fields }, texts))
}

fn dga_text(r: &(DgaOutput, Vec<String>)) -> String {
    format!("knot {}\n{}", r.0.knot, r.1.concat())
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct FieldInvariants {
    q: u32,
    augmentations: usize,
    lch_spectrum: Vec<LaurentPoly>,
}

/// Flat for a single field, per-field list otherwise. Graded invariants are
/// omitted when the rotation number is nonzero.
#[derive(Serialize)]
struct Invariants {
    #[serde(skip)]
    knot: String,
    tb: i64,
    r: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    augmentations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lch_spectrum: Option<Vec<LaurentPoly>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    fields: Option<Vec<FieldInvariants>>,
}

fn invariants_report(f: &FrontDiagram, qs: &[u32]) -> Result<Invariants> {
    let mut inv = Invariants {
        knot: f.name().to_string(),
        tb: tb(f),
        r: rotation(f),
        augmentations: None,
        lch_spectrum: None,
        fields: None,
    };
    if inv.r != 0 {
        return Ok(inv);
    }
    let rd = resolve(f)?;
    let mut fields = Vec::new();
    for &q in qs {
        let d = build_dga(&rd, q)?;
        let augs = enumerate_augmentations(&d)?;
        fields.push(FieldInvariants { q, augmentations: augs.len(), lch_spectrum: spectrum_of(&d, &augs)? });
    }
    if fields.len() == 1 {
        let f = fields.remove(0);
        inv.augmentations = Some(f.augmentations);
        inv.lch_spectrum = Some(f.lch_spectrum);
    } else {
        inv.fields = Some(fields);
    }
    Ok(inv)
}

fn spectrum_text(ps: &[LaurentPoly]) -> String {
    format!("[{}]", ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "))
}

fn invariants_text(inv: &Invariants) -> String {
    let mut s = format!("knot {}\ntb = {}\nr = {}\n", inv.knot, inv.tb, inv.r);
    if inv.r != 0 {
        s.push_str("graded augmentations need rotation number 0\n");
    }
    if let (Some(n), Some(sp)) = (inv.augmentations, &inv.lch_spectrum) {
        s.push_str(&format!("augmentations: {n}\nLCH spectrum: {}\n", spectrum_text(sp)));
    }
    for f in inv.fields.iter().flatten() {
        s.push_str(&format!("F_{}: {} augmentations, LCH spectrum {}\n", f.q, f.augmentations, spectrum_text(&f.lch_spectrum)));
    }
    s
}

#[derive(Serialize)]
struct RulingsOutput {
    knot: String,
    #[serde(flatten)]
    summary: RulingSummary,
}

fn rulings_report(f: &FrontDiagram, qs: &[u32], graded: bool) -> Result<RulingsOutput> {
    Ok(RulingsOutput { knot: f.name().to_string(), summary: summarize(f, qs, graded)? })
}

fn rulings_text(r: &RulingsOutput) -> String {
    let s = &r.summary;
    let mut out = format!(
        "knot {}\n{} rulings: {}\nR(z) = {}\n",
        r.knot,
        if s.graded { "graded" } else { "ungraded" },
        s.count,
        s.polynomial
    );
    for e in &s.evaluations {
        out.push_str(&format!("q={}: R(q^1/2 - q^-1/2) = {}", e.q, e.value));
        if let Some(h) = &e.homotopy_cardinality {
            out.push_str(&format!(", homotopy cardinality = {h}"));
        }
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct HomcatField {
    q: u32,
    augmentations: Vec<String>,
    pairs: Vec<PairReport>,
    passed: bool,
    /// Gaps between Hom₊ and Hom₋ cohomology confined to degrees 0 and 1.
    gaps_in_degrees_0_1: bool,
}

#[derive(Serialize)]
struct HomcatOutput {
    knot: String,
    fields: Vec<HomcatField>,
}

fn homcat_report(f: &FrontDiagram, qs: &[u32]) -> Result<HomcatOutput> {
    let rd = resolve(f)?;
    let mut fields = Vec::new();
    for &q in qs {
        let d = build_dga(&rd, q)?;
        let augs = enumerate_augmentations(&d)?;
        let pairs = check_pairs(&d, &augs)?;
        fields.push(HomcatField {
            q,
            augmentations: augs.iter().map(|e| e.describe(&d)).collect(),
            passed: pairs.iter().all(|p| p.passed()),
            gaps_in_degrees_0_1: pairs.iter().all(|p| gaps_only_in_low_degrees(&p.plus, &p.minus)),
            pairs,
        });
    }
    Ok(HomcatOutput { knot: f.name().to_string(), fields })
}

fn dims(m: &std::collections::BTreeMap<i64, usize>) -> String {
    let parts: Vec<String> = m.iter().map(|(k, v)| format!("H^{k}={v}")).collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ")
    }
}

fn homcat_text(r: &HomcatOutput) -> String {
    let mut s = format!("knot {}\n", r.knot);
    for f in &r.fields {
        s.push_str(&format!("F_{}: {} augmentations\n", f.q, f.augmentations.len()));
        for (i, a) in f.augmentations.iter().enumerate() {
            s.push_str(&format!("  e{i}: {a}\n"));
        }
        for p in &f.pairs {
            let opt = |b: Option<bool>| b.map(yes).unwrap_or("-");
            s.push_str(&format!(
                "  (e{}, e{}) Hom+: {} | Hom-: {} | m1^2=0 {} duality {} les {} unit {} lch {}\n",
                p.first,
                p.second,
                dims(&p.plus),
                dims(&p.minus),
                yes(p.m1_squared_zero),
                yes(p.duality),
                yes(p.les),
                opt(p.unit),
                opt(p.identification)
            ));
        }
        s.push_str(&format!("  all checks: {}\n", if f.passed { "pass" } else { "FAIL" }));
        s.push_str(&format!("  gaps confined to degrees 0,1: {}\n", yes(f.gaps_in_degrees_0_1)));
    }
    s
}
