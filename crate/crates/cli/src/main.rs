//! `liechain` command-line front end.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on usage or input errors.
//! Every stdout line in json mode is one object carrying `"schema": 1`.

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use liechain::characters::{
    decompose_dual_weyl, dual_weyl_character, exterior_algebra, exterior_power, is_restricted, load_cache,
    save_cache, DualWeylDecomposition, FormalCharacter,
};
use liechain::embeddings::restrict_character;
use liechain::nilpotent::{
    centralizer_dimension, centralizer_factors, parse_chain, parse_orbit_tables, reductive_centralizer,
    reductive_dimension, unipotent_dimension, Chain, JordanKind, JordanType, OrbitRecord,
};
use liechain::verifier::{chain_map, spot_check, verify_all, SpotCheck};
use liechain::{GroupType, RootDatum, Weight};

const SCHEMA: u32 = 1;
const CACHE_FILE: &str = "characters.bin";

#[derive(Parser)]
#[command(name = "liechain", version, about = "Root systems, characters and embedding-chain verification")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Report elapsed time on standard error.
    #[arg(long, global = true)]
    timing: bool,
    /// Neither read nor write the character cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Root counts, Weyl group order and highest roots of a type.
    Roots {
        #[arg(value_name = "TYPE")]
        gtype: String,
    },
    /// Dominant multiplicities and dimension of the dual Weyl module.
    Char {
        #[arg(value_name = "TYPE")]
        gtype: String,
        /// Highest weight, comma-separated fundamental coordinates.
        #[arg(value_name = "LAMBDA", allow_hyphen_values = true)]
        lambda: String,
        /// List every weight, not only the dominant ones.
        #[arg(long)]
        all: bool,
    },
    /// Dual Weyl decomposition of a character read from a file.
    Decompose {
        #[arg(value_name = "TYPE")]
        gtype: String,
        /// `@path` to a file of `multiplicity weight` lines.
        #[arg(value_name = "@CHARFILE")]
        charfile: String,
    },
    /// Dual Weyl decomposition of the exterior algebra of a dual Weyl module.
    Exterior {
        #[arg(value_name = "TYPE")]
        gtype: String,
        #[arg(value_name = "LAMBDA", allow_hyphen_values = true)]
        lambda: String,
        /// Report whether every highest weight is restricted for this prime.
        #[arg(long)]
        p: Option<u64>,
        /// Only the k-th exterior power.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Restrict a dual Weyl module of the last group of a chain to its first group.
    Restrict {
        /// Chain such as `G2 -[auto]-> D4`.
        chain: String,
        #[arg(value_name = "LAMBDA", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Nilpotent orbit data.
    Orbit {
        #[command(subcommand)]
        which: OrbitCommand,
    },
    /// Check every row of one or more orbit tables.
    VerifyTables {
        #[arg(value_name = "FILE", required = true)]
        files: Vec<PathBuf>,
    },
    /// Restrict dual Weyl modules along the chains of a table.
    SpotCheck {
        #[arg(value_name = "FILE")]
        file: PathBuf,
        /// Highest weight of the ambient group; repeatable.
        #[arg(long = "lambda", value_name = "LAMBDA", required = true, allow_hyphen_values = true)]
        lambdas: Vec<String>,
        /// Only rows with this label.
        #[arg(long)]
        label: Option<String>,
    },
}

#[derive(Subcommand)]
enum OrbitCommand {
    /// Jordan type of a nilpotent in gl_n, sp_n or so_n.
    Classical {
        /// GL, Sp or SO.
        kind: String,
        /// Parts such as `3,1` or `2^2,1`.
        partition: String,
    },
}

/// Collects output lines so text and json share one code path.
struct Out {
    format: Format,
    lines: Vec<String>,
}

impl Out {
    fn emit(&mut self, text: String, mut obj: Value) {
        match self.format {
            Format::Text => self.lines.push(text),
            Format::Json => {
                let map = obj.as_object_mut().expect("json object");
                map.insert("schema".into(), json!(SCHEMA));
                self.lines.push(obj.to_string());
            }
        }
    }

    fn flush(&self) -> io::Result<()> {
        let mut stdout = io::stdout().lock();
        for l in &self.lines {
            writeln!(stdout, "{l}")?;
        }
        stdout.flush()
    }
}

fn parse_type(s: &str) -> Result<GroupType> {
    s.trim().parse().map_err(|e| anyhow!("{e}"))
}

fn parse_weight(rd: &RootDatum, s: &str) -> Result<Weight> {
    let w: Weight = s.parse().map_err(|e| anyhow!("{e}"))?;
    if w.len() != rd.rank() {
        bail!("weight {w} has {} coordinates, {} has rank {}", w.len(), rd.gtype(), rd.rank());
    }
    if !rd.is_dominant(&w)? {
        bail!("weight {w} is not dominant for {}", rd.gtype());
    }
    Ok(w)
}

fn coords(w: &Weight) -> Value {
    json!(w.0)
}

fn terms_json(terms: &BTreeMap<Weight, BigInt>) -> Value {
    Value::Array(
        terms
            .iter()
            .map(|(w, m)| json!({"weight": coords(w), "mult": m.to_string()}))
            .collect(),
    )
}

fn terms_text(terms: &BTreeMap<Weight, BigInt>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms.iter().map(|(w, m)| format!("{m}*{w}")).collect::<Vec<_>>().join(" + ")
}

fn cache_path() -> Option<PathBuf> {
    let dir = match std::env::var_os("LIECHAIN_CACHE_DIR") {
        Some(d) if d.is_empty() => return None,
        Some(d) => PathBuf::from(d),
        None => match std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
            Some(d) => PathBuf::from(d).join("liechain"),
            None => PathBuf::from(std::env::var_os("HOME")?).join(".cache").join("liechain"),
        },
    };
    Some(dir.join(CACHE_FILE))
}

fn save_cache_to(path: &Path) {
    // The cache is a hint; failures only cost recomputation.
    if let Some(dir) = path.parent() {
        if std::fs::create_dir_all(dir).is_ok() {
            let _ = save_cache(path);
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let cache = if cli.no_cache { None } else { cache_path() };
    if let Some(path) = &cache {
        let _ = load_cache(path);
    }
    let mut out = Out {
        format: cli.format,
        lines: Vec::new(),
    };
    let status = match run(&cli.command, &mut out) {
        Ok(ok) => {
            if out.flush().is_err() {
                return ExitCode::from(2);
            }
            u8::from(!ok)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    if let Some(path) = &cache {
        save_cache_to(path);
    }
    if cli.timing {
        eprintln!("elapsed: {:.3} s", started.elapsed().as_secs_f64());
    }
    ExitCode::from(status)
}

/// Returns `Ok(false)` when a check fails.
fn run(cmd: &Command, out: &mut Out) -> Result<bool> {
    match cmd {
        Command::Roots { gtype } => roots(out, &parse_type(gtype)?),
        Command::Char { gtype, lambda, all } => character(out, &parse_type(gtype)?, lambda, *all),
        Command::Decompose { gtype, charfile } => decompose(out, &parse_type(gtype)?, charfile),
        Command::Exterior { gtype, lambda, p, degree } => exterior(out, &parse_type(gtype)?, lambda, *p, *degree),
        Command::Restrict { chain, lambda } => restrict(out, chain, lambda),
        Command::Orbit {
            which: OrbitCommand::Classical { kind, partition },
        } => orbit_classical(out, kind, partition),
        Command::VerifyTables { files } => verify_tables(out, files),
        Command::SpotCheck { file, lambdas, label } => spot_check_file(out, file, lambdas, label.as_deref()),
    }
}

fn roots(out: &mut Out, g: &GroupType) -> Result<bool> {
    let rd = RootDatum::new(g)?;
    let highest: Vec<(Vec<i64>, Weight)> = rd
        .highest_roots()
        .into_iter()
        .map(|r| {
            let w = rd.root_to_weight(&r);
            (r, w)
        })
        .collect();
    let mut text = format!(
        "type {}\nrank {}\nsemisimple_rank {}\npositive_roots {}\nroots {}\ndimension {}\nweyl_group_order {}",
        g,
        rd.rank(),
        g.semisimple_rank(),
        rd.num_positive_roots(),
        2 * rd.num_positive_roots(),
        rd.dimension(),
        rd.weyl_group_order()
    );
    for (r, w) in &highest {
        let r: Vec<String> = r.iter().map(i64::to_string).collect();
        text.push_str(&format!("\nhighest_root [{}] weight {}", r.join(","), w));
    }
    out.emit(
        text,
        json!({
            "kind": "roots",
            "type": g.to_string(),
            "rank": rd.rank(),
            "semisimple_rank": g.semisimple_rank(),
            "positive_roots": rd.num_positive_roots(),
            "dimension": rd.dimension(),
            "weyl_group_order": rd.weyl_group_order().to_string(),
            "highest_roots": highest.iter().map(|(r, w)| json!({"root": r, "weight": coords(w)})).collect::<Vec<_>>(),
        }),
    );
    Ok(true)
}

fn character(out: &mut Out, g: &GroupType, lambda: &str, all: bool) -> Result<bool> {
    let rd = RootDatum::new(g)?;
    let lambda = parse_weight(&rd, lambda)?;
    let chi = dual_weyl_character(&rd, &lambda)?;
    let terms: BTreeMap<Weight, BigInt> = chi
        .iter()
        .filter(|(w, _)| all || rd.is_dominant(w).unwrap_or(false))
        .map(|(w, m)| (w.clone(), m.clone()))
        .collect();
    let which = if all { "weights" } else { "dominant" };
    let mut text = format!("type {g}\nlambda {lambda}\ndimension {}\nweights {}", chi.dim(), chi.len());
    for (w, m) in &terms {
        text.push_str(&format!("\n{m} {w}"));
    }
    out.emit(
        text,
        json!({
            "kind": "char",
            "type": g.to_string(),
            "lambda": coords(&lambda),
            "dimension": chi.dim().to_string(),
            "weights": chi.len(),
            which: terms_json(&terms),
        }),
    );
    Ok(true)
}

/// Reads `multiplicity weight` lines; `#` starts a comment.
fn read_charfile(g: &GroupType, rank: usize, text: &str, path: &str) -> Result<FormalCharacter> {
    let mut terms = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut it = line.split_whitespace();
        let (Some(m), Some(w), None) = (it.next(), it.next(), it.next()) else {
            bail!("{path}:{}: expected `multiplicity weight`", i + 1);
        };
        let m: BigInt = m.parse().map_err(|_| anyhow!("{path}:{}: bad multiplicity `{m}`", i + 1))?;
        let w: Weight = w.parse().map_err(|e| anyhow!("{path}:{}: {e}", i + 1))?;
        if w.len() != rank {
            bail!("{path}:{}: weight {w} has {} coordinates, expected {rank}", i + 1, w.len());
        }
        terms.push((w, m));
    }
    FormalCharacter::from_terms(g.clone(), terms).map_err(|e| anyhow!("{path}: {e}"))
}

fn decompose(out: &mut Out, g: &GroupType, charfile: &str) -> Result<bool> {
    let Some(path) = charfile.strip_prefix('@') else {
        bail!("character file must be given as @PATH");
    };
    let rd = RootDatum::new(g)?;
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    let chi = read_charfile(g, rd.rank(), &text, path)?;
    let d = match decompose_dual_weyl(&rd, &chi) {
        Ok(d) => d,
        Err(liechain::Error::NotSymmetric(w)) => {
            out.emit(
                format!("type {g}\ndimension {}\nFAIL not Weyl invariant at {w}", chi.dim()),
                json!({"kind": "decompose", "type": g.to_string(), "dimension": chi.dim().to_string(),
                       "status": "FAIL", "reason": format!("not Weyl invariant at {w}")}),
            );
            return Ok(false);
        }
        Err(e) => return Err(e.into()),
    };
    emit_decomposition(out, "decompose", g, &chi, &d, json!({}));
    Ok(true)
}

fn emit_decomposition(out: &mut Out, kind: &str, g: &GroupType, chi: &FormalCharacter, d: &DualWeylDecomposition, extra: Value) {
    let text = format!(
        "type {g}\ndimension {}\nnonnegative {}\nterms {}\ndecomposition {}",
        chi.dim(),
        d.exact,
        d.terms.len(),
        terms_text(&d.terms)
    );
    let mut obj = json!({
        "kind": kind,
        "type": g.to_string(),
        "dimension": chi.dim().to_string(),
        "nonnegative": d.exact,
        "terms": terms_json(&d.terms),
    });
    if let (Some(o), Value::Object(e)) = (obj.as_object_mut(), extra) {
        o.extend(e);
    }
    out.emit(text, obj);
}

fn exterior(out: &mut Out, g: &GroupType, lambda: &str, p: Option<u64>, degree: Option<usize>) -> Result<bool> {
    let rd = RootDatum::new(g)?;
    let lambda = parse_weight(&rd, lambda)?;
    let nabla = dual_weyl_character(&rd, &lambda)?;
    let chi = match degree {
        Some(k) => exterior_power(&nabla, k)?,
        None => exterior_algebra(&nabla)?,
    };
    let d = decompose_dual_weyl(&rd, &chi)?;
    emit_decomposition(
        out,
        "exterior",
        g,
        &chi,
        &d,
        json!({"lambda": coords(&lambda), "module_dimension": nabla.dim().to_string(), "degree": degree}),
    );
    let mut ok = d.exact;
    if let Some(p) = p {
        let mut bad = Vec::new();
        for w in d.highest_weights() {
            if !is_restricted(&rd, w, p)? {
                bad.push(w.clone());
            }
        }
        let pass = bad.is_empty();
        ok &= pass;
        let status = if pass { "PASS" } else { "FAIL" };
        let listed: Vec<String> = bad.iter().map(Weight::to_string).collect();
        let text = if pass {
            format!("restricted p={p}: PASS")
        } else {
            format!("restricted p={p}: FAIL {}", listed.join(" "))
        };
        out.emit(
            text,
            json!({"kind": "restricted", "p": p, "status": status,
                   "unrestricted": bad.iter().map(coords).collect::<Vec<_>>()}),
        );
    }
    Ok(ok)
}

fn restrict(out: &mut Out, chain: &str, lambda: &str) -> Result<bool> {
    let chain = parse_chain(chain.trim()).map_err(|e| anyhow!("chain: {e}"))?;
    let Chain::Steps { start, steps } = &chain else {
        bail!("TORUS has no weight map");
    };
    let end = chain.end().expect("chain has steps");
    let big = RootDatum::new(end)?;
    let lambda = parse_weight(&big, lambda)?;
    let map = match chain_map(start, steps) {
        Ok(m) => m,
        Err(why) => {
            out.emit(
                format!("chain {chain}\nFAIL {why}"),
                json!({"kind": "restrict", "chain": chain.to_string(), "status": "FAIL", "reason": why}),
            );
            return Ok(false);
        }
    };
    let chi = dual_weyl_character(&big, &lambda)?;
    let res = restrict_character(&chi, &map)?;
    let small = RootDatum::new(start)?;
    let d = decompose_dual_weyl(&small, &res)?;
    let mut text = format!("chain {chain}\nlambda {lambda}\n");
    let mut sub = Out {
        format: out.format,
        lines: Vec::new(),
    };
    emit_decomposition(
        &mut sub,
        "restrict",
        start,
        &res,
        &d,
        json!({"chain": chain.to_string(), "lambda": coords(&lambda)}),
    );
    match out.format {
        Format::Text => {
            text.push_str(&sub.lines.concat());
            out.lines.push(text);
        }
        Format::Json => out.lines.extend(sub.lines),
    }
    Ok(d.exact)
}

/// Parses `3,1` or `2^2,1` into a list of parts.
fn parse_partition(s: &str) -> Result<Vec<usize>> {
    let mut parts = Vec::new();
    for tok in s.split(',') {
        let tok = tok.trim();
        let (part, reps) = match tok.split_once('^') {
            Some((a, b)) => (a, b.parse::<usize>().map_err(|_| anyhow!("bad multiplicity in `{tok}`"))?),
            None => (tok, 1),
        };
        let part: usize = part.parse().map_err(|_| anyhow!("bad part `{tok}`"))?;
        if part == 0 || reps == 0 {
            bail!("parts and multiplicities must be positive: `{tok}`");
        }
        parts.extend(std::iter::repeat_n(part, reps));
    }
    Ok(parts)
}

fn orbit_classical(out: &mut Out, kind: &str, partition: &str) -> Result<bool> {
    let kind: JordanKind = kind.parse().map_err(|e| anyhow!("{e}"))?;
    let jt = JordanType::from_partition(kind, &parse_partition(partition)?)?;
    let n = jt.n();
    let factors = match centralizer_factors(&jt) {
        Ok(f) => f,
        Err(e) => {
            out.emit(
                format!("jordan_type {jt}\nn {n}\nvalid false\nreason {e}"),
                json!({"kind": "orbit", "jordan_type": jt.to_string(), "n": n, "valid": false, "reason": e.to_string()}),
            );
            return Ok(false);
        }
    };
    let names: Vec<String> = factors.iter().map(ToString::to_string).collect();
    let group = reductive_centralizer(&jt)?;
    let (red, uni, total) = (
        reductive_dimension(&jt)?,
        unipotent_dimension(&jt)?,
        centralizer_dimension(&jt)?,
    );
    let group_text = if group.factors.is_empty() { "1".to_string() } else { group.to_string() };
    out.emit(
        format!(
            "jordan_type {jt}\nn {n}\nvalid true\ncentralizer {}\nroot_type {group_text}\nreductive_dimension {red}\nunipotent_dimension {uni}\ncentralizer_dimension {total}",
            names.join(".")
        ),
        json!({
            "kind": "orbit",
            "jordan_type": jt.to_string(),
            "n": n,
            "valid": true,
            "centralizer": names.join("."),
            "root_type": group_text,
            "reductive_dimension": red,
            "unipotent_dimension": uni,
            "centralizer_dimension": total,
        }),
    );
    Ok(true)
}

fn read_tables(file: &Path) -> Result<Vec<OrbitRecord>> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    parse_orbit_tables(&text).map_err(|e| anyhow!("{}: {e}", file.display()))
}

fn verify_tables(out: &mut Out, files: &[PathBuf]) -> Result<bool> {
    let mut records = Vec::new();
    let mut origin = Vec::new();
    for f in files {
        let recs = read_tables(f)?;
        origin.extend(std::iter::repeat_n(f.display().to_string(), recs.len()));
        records.extend(recs);
    }
    let summary = verify_all(&records);
    for (r, file) in summary.reports.iter().zip(&origin) {
        let status = if r.passed { "PASS" } else { "FAIL" };
        let mut text = format!("{status} {file}:{} {} {} p_min={} good={}", r.line, r.ambient, r.label, r.p_min, r.good_prime);
        for s in r.steps.iter().filter(|s| !s.legal) {
            text.push_str(&format!("\n  illegal {}: {}", s.step.trim(), s.reason));
        }
        if !r.endpoints_ok {
            text.push_str(&format!("\n  endpoints: {}", r.endpoint_note));
        }
        if r.p_min > r.good_prime {
            text.push_str(&format!("\n  prime bound {} exceeds good prime {}", r.p_min, r.good_prime));
        }
        let mut obj = serde_json::to_value(r)?;
        obj["kind"] = json!("row");
        obj["status"] = json!(status);
        obj["file"] = json!(file);
        out.emit(text, obj);
    }
    let status = if summary.all_passed() { "PASS" } else { "FAIL" };
    out.emit(
        format!("{status} {} rows: {} passed, {} failed", records.len(), summary.passed, summary.failed),
        json!({"kind": "summary", "status": status, "rows": records.len(), "passed": summary.passed, "failed": summary.failed}),
    );
    Ok(summary.all_passed())
}

fn spot_check_file(out: &mut Out, file: &Path, lambdas: &[String], label: Option<&str>) -> Result<bool> {
    let records = read_tables(file)?;
    let weights: Vec<Weight> = lambdas
        .iter()
        .map(|s| s.parse().map_err(|e| anyhow!("{e}")))
        .collect::<Result<_>>()?;
    let mut counts = BTreeMap::from([("PASS", 0usize), ("FAIL", 0), ("SKIPPED", 0)]);
    let mut matched = false;
    for r in records.iter().filter(|r| label.is_none_or(|l| r.label == l)) {
        matched = true;
        for w in &weights {
            let verdict = spot_check(r, w);
            *counts.get_mut(verdict.status()).expect("known status") += 1;
            let mut obj = json!({
                "kind": "spot_check",
                "ambient": r.ambient.to_string(),
                "label": r.label,
                "line": r.line,
                "lambda": coords(w),
                "status": verdict.status(),
            });
            match &verdict {
                SpotCheck::Pass(terms) => {
                    obj["terms"] = terms_json(&terms.iter().cloned().collect());
                }
                SpotCheck::Fail(why) | SpotCheck::Skipped(why) => obj["reason"] = json!(why),
            }
            out.emit(format!("{} {} {} {}", r.ambient, r.label, w, verdict), obj);
        }
    }
    if let (Some(l), false) = (label, matched) {
        bail!("no row labelled `{l}` in {}", file.display());
    }
    let ok = counts["FAIL"] == 0;
    out.emit(
        format!(
            "{} {} passed, {} failed, {} skipped",
            if ok { "PASS" } else { "FAIL" },
            counts["PASS"],
            counts["FAIL"],
            counts["SKIPPED"]
        ),
        json!({"kind": "summary", "status": if ok { "PASS" } else { "FAIL" },
               "passed": counts["PASS"], "failed": counts["FAIL"], "skipped": counts["SKIPPED"]}),
    );
    Ok(ok)
}
