//! The `spinvol` command line.
//!
//! [`run`] takes the full argument vector (program name first) and returns
//! the exit status with everything that would be written to stdout and
//! stderr. Exit status 0 means success, 1 a domain error (not an involution,
//! size guard, failed self-check, ...), 2 a usage or parse error.

pub mod format;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::enumerate::{
    enumerate_group, enumerate_involutions, partition_classes, verify_counts, CountReport,
};
use crate::error::Error;
use crate::field::{FieldCtx, Scalar};
use crate::involution::{
    classify, decide_isomorphic, representative, verify_transition, ClassSummary, InvType,
    InvolutionReport, RepParams,
};
use crate::linalg::Mat;
use crate::symplectic::SympSpace;

use format::{parse_base, parse_document, parse_field, print_document};

#[derive(Parser, Debug)]
#[command(
    name = "spinvol",
    version,
    about = "Involutions of Sp(2n, k) in exact arithmetic"
)]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Type, invariants and transition matrix of the involution induced by a matrix.
    Classify { file: String },
    /// Decide whether two matrices induce isomorphic involutions.
    Isomorphic { file_a: String, file_b: String },
    /// Canonical form X^{-1} A X together with X.
    Canonical { file: String },
    /// A matrix inducing an involution with the given invariants.
    Representative {
        #[arg(long = "type", value_parser = clap::value_parser!(u8).range(1..=4))]
        ty: u8,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long, default_value = "rationals")]
        field: String,
    },
    /// Involution classes of Sp(2n, p) (or of the sqrt(alpha) coset) by brute force.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Compare enumerated class counts with the formulas.
    VerifyCounts {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
    },
    /// Square class of a base-field element.
    SquareClass {
        #[arg(long)]
        field: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Parse(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn parse_err(e: impl ToString) -> Failure {
    Failure::Parse(e.to_string())
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    match dispatch(&cli) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Parse(m)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {m}\n"),
        },
        Err(Failure::Domain(e)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> Res<String> {
    let json = cli.json;
    match &cli.cmd {
        Command::Classify { file } => {
            let a = load(file)?;
            let r = classify(&a)?;
            verify_transition(&a, &r)?;
            Ok(report_text(&r, None, json))
        }
        Command::Canonical { file } => {
            let a = load(file)?;
            let r = classify(&a)?;
            let form = verify_transition(&a, &r)?;
            Ok(report_text(&r, Some(&form), json))
        }
        Command::Isomorphic { file_a, file_b } => {
            let a = load(file_a)?;
            let b = load(file_b)?;
            isomorphic(&a, &b, json)
        }
        Command::Representative {
            ty,
            n,
            s,
            alpha,
            field,
        } => {
            let ctx = parse_field(field).map_err(parse_err)?;
            let alpha = alpha
                .as_deref()
                .map(|t| parse_base(&ctx, t))
                .transpose()
                .map_err(parse_err)?;
            let ty = InvType::from_number(*ty).expect("range checked by clap");
            let params = RepParams { s: *s, alpha };
            let m = representative(&ctx, ty, *n, &params)?;
            let r = classify(&m)?;
            verify_transition(&m, &r)?;
            Ok(if json {
                to_json(&RepJson {
                    matrix: rows(&m),
                    field: m.ctx().kind().to_string(),
                    alpha: m.ctx().ext_disc().map(|a| a.to_string()),
                    report: ReportJson::new(&r),
                })
            } else {
                print_document(&m)
            })
        }
        Command::Enumerate { n, p, alpha } => enumerate(*n, *p, alpha.as_deref(), json),
        Command::VerifyCounts { n, p } => {
            let report = verify_counts(*n, *p)?;
            Ok(counts_text(&report, json))
        }
        Command::SquareClass { field, x } => {
            let ctx = parse_field(field).map_err(parse_err)?;
            let v = parse_base(&ctx, x).map_err(parse_err)?;
            let class = ctx.square_class(&v)?;
            let count = ctx.square_class_count();
            let square = class.is_trivial();
            Ok(if json {
                to_json(&SquareJson {
                    field: ctx.kind().to_string(),
                    x: v.to_string(),
                    class: class.to_string(),
                    square,
                    classes: count,
                })
            } else {
                let count = count.map_or("infinite".to_string(), |c| c.to_string());
                format!("class={class} square={square} classes={count}\n")
            })
        }
    }
}

fn load(path: &str) -> Res<Mat> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{path}: {e}")))?;
    let doc = parse_document(&text).map_err(|e| Failure::Parse(format!("{path}: {e}")))?;
    Ok(doc.matrix)
}

fn rows(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect())
        .collect()
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn matrix_block(out: &mut String, title: &str, m: &Mat) {
    writeln!(out, "{title}:").unwrap();
    write!(out, "{m}").unwrap();
}

#[derive(Serialize)]
struct ReportJson {
    #[serde(rename = "type")]
    ty: u8,
    n: usize,
    gamma: i8,
    alpha_class: String,
    dim_pair: Option<(usize, usize)>,
    transition: Vec<Vec<String>>,
    verified: bool,
}

impl ReportJson {
    fn new(r: &InvolutionReport) -> ReportJson {
        ReportJson {
            ty: r.inv_type.number(),
            n: r.n,
            gamma: r.gamma,
            alpha_class: r.alpha_class.to_string(),
            dim_pair: r.dim_pair,
            transition: rows(&r.transition),
            verified: true,
        }
    }
}

#[derive(Serialize)]
struct CanonicalJson {
    #[serde(flatten)]
    report: ReportJson,
    canonical: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct RepJson {
    field: String,
    alpha: Option<String>,
    matrix: Vec<Vec<String>>,
    report: ReportJson,
}

#[derive(Serialize)]
struct SquareJson {
    field: String,
    x: String,
    class: String,
    square: bool,
    classes: Option<u64>,
}

fn report_text(r: &InvolutionReport, form: Option<&Mat>, json: bool) -> String {
    if json {
        return match form {
            None => to_json(&ReportJson::new(r)),
            Some(f) => to_json(&CanonicalJson {
                report: ReportJson::new(r),
                canonical: rows(f),
            }),
        };
    }
    let mut out = String::new();
    writeln!(
        out,
        "type={} alpha={} n={} gamma={}",
        r.inv_type, r.alpha_class, r.n, r.gamma
    )
    .unwrap();
    if let Some((s, t)) = r.dim_pair {
        writeln!(out, "dim_pair=({s},{t})").unwrap();
    }
    if let Some(case) = r.case {
        writeln!(out, "case={case:?}").unwrap();
    }
    if let Some(d) = &r.gram_diag {
        let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
        writeln!(out, "gram_diag={}", d.join(",")).unwrap();
    }
    let name = if r.gram_diag.is_some() { "U" } else { "X" };
    matrix_block(&mut out, &format!("transition {name}"), &r.transition);
    if let Some(f) = form {
        matrix_block(&mut out, &format!("canonical {name}^-1 A {name}"), f);
    }
    writeln!(out, "verified=true").unwrap();
    out
}

#[derive(Serialize)]
struct IsoJson {
    isomorphic: bool,
    sign: Option<i8>,
    conjugator: Option<Vec<Vec<String>>>,
    note: Option<String>,
    verified: bool,
}

fn isomorphic(a: &Mat, b: &Mat, json: bool) -> Res<String> {
    let d = decide_isomorphic(a, b)?;
    if let (Some(q), Some(sign)) = (&d.conjugator, d.sign) {
        recheck_conjugator(a, b, q, sign)?;
    }
    if json {
        return Ok(to_json(&IsoJson {
            isomorphic: d.isomorphic,
            sign: d.sign,
            conjugator: d.conjugator.as_ref().map(rows),
            note: d.note.clone(),
            verified: true,
        }));
    }
    let mut out = String::new();
    writeln!(out, "isomorphic={}", d.isomorphic).unwrap();
    if let Some(sign) = d.sign {
        writeln!(out, "sign={sign}").unwrap();
    }
    if let Some(q) = &d.conjugator {
        matrix_block(&mut out, "conjugator Q (Q^-1 A Q = sign B)", q);
        writeln!(out, "verified=true").unwrap();
    }
    if let Some(note) = &d.note {
        writeln!(out, "note={note}").unwrap();
    }
    Ok(out)
}

/// `Q` base-valued, symplectic, `Q^{-1} A Q = sign B`.
fn recheck_conjugator(a: &Mat, b: &Mat, q: &Mat, sign: i8) -> Res<()> {
    let base = q.ctx().base();
    let qb = q.with_ctx(&base);
    let sp = SympSpace::new(&base, q.rows() / 2);
    let ctx = if a.is_base() { b.ctx() } else { a.ctx() };
    let lift = |m: &Mat| {
        if m.is_base() {
            m.with_ctx(&base).with_ctx(ctx)
        } else {
            m.clone()
        }
    };
    let (a, b) = (lift(a), lift(b));
    let qe = qb.with_ctx(ctx);
    let target = if sign == 1 { b } else { b.neg() };
    let ok = q.is_base() && sp.is_symplectic(&qb)? && qe.inverse()?.mul(&a).mul(&qe) == target;
    if !ok {
        return Err(Error::SelfCheck("conjugator identity".into()).into());
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassJson {
    #[serde(rename = "type")]
    ty: u8,
    size: usize,
    dim_pair: Option<(usize, usize)>,
    alpha_class: String,
    witness: Vec<Vec<String>>,
}

impl ClassJson {
    fn new(c: &ClassSummary) -> ClassJson {
        ClassJson {
            ty: c.inv_type.number(),
            size: c.size,
            dim_pair: c.dim_pair,
            alpha_class: c.alpha_class.to_string(),
            witness: rows(&c.witness),
        }
    }
}

#[derive(Serialize)]
struct EnumJson {
    n: usize,
    p: u64,
    group_order: usize,
    alpha: Option<String>,
    involutions: usize,
    counts: [u64; 4],
    invariants_complete: bool,
    classes: Vec<ClassJson>,
}

fn enumerate(n: usize, p: u64, alpha: Option<&str>, json: bool) -> Res<String> {
    let ctx = FieldCtx::prime_field(p)?;
    let alpha: Option<Scalar> = alpha
        .map(|t| parse_base(&ctx, t))
        .transpose()
        .map_err(parse_err)?;
    let group = enumerate_group(n, p)?;
    let set = enumerate_involutions(&group, alpha.as_ref())?;
    let part = partition_classes(&set, &group)?;
    let mut counts = [0u64; 4];
    for c in &part.table.classes {
        counts[c.inv_type.number() as usize - 1] += 1;
    }
    if json {
        return Ok(to_json(&EnumJson {
            n,
            p,
            group_order: group.order(),
            alpha: alpha.as_ref().map(|a| a.to_string()),
            involutions: set.len(),
            counts,
            invariants_complete: part.invariants_complete,
            classes: part.table.classes.iter().map(ClassJson::new).collect(),
        }));
    }
    let mut out = String::new();
    writeln!(out, "group=Sp({},{p}) order={}", 2 * n, group.order()).unwrap();
    match &alpha {
        Some(a) => writeln!(out, "coset=sqrt({a})*B involutions={}", set.len()).unwrap(),
        None => writeln!(out, "involutions={}", set.len()).unwrap(),
    }
    writeln!(
        out,
        "C1={} C2={} C3={} C4={}",
        counts[0], counts[1], counts[2], counts[3]
    )
    .unwrap();
    writeln!(out, "invariants_complete={}", part.invariants_complete).unwrap();
    for (k, c) in part.table.classes.iter().enumerate() {
        write!(out, "class {k}: type={} size={}", c.inv_type, c.size).unwrap();
        if let Some((s, t)) = c.dim_pair {
            write!(out, " dim_pair=({s},{t})").unwrap();
        }
        writeln!(out, " alpha={}", c.alpha_class).unwrap();
        write!(out, "{}", c.witness).unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct RowJson {
    #[serde(rename = "type")]
    ty: u8,
    formula: String,
    observed: u64,
    status: String,
}

#[derive(Serialize)]
struct CountsJson {
    n: usize,
    p: u64,
    group_order: usize,
    alpha: String,
    rows: Vec<RowJson>,
    invariants_complete: bool,
}

fn counts_text(r: &CountReport, json: bool) -> String {
    if json {
        return to_json(&CountsJson {
            n: r.n,
            p: r.p,
            group_order: r.group_order,
            alpha: r.alpha.to_string(),
            rows: r
                .rows
                .iter()
                .map(|row| RowJson {
                    ty: row.inv_type.number(),
                    formula: row.formula.to_string(),
                    observed: row.observed,
                    status: row.status.to_string(),
                })
                .collect(),
            invariants_complete: r.invariants_complete,
        });
    }
    let mut out = String::new();
    writeln!(
        out,
        "Sp({},{}) order={} alpha={}",
        2 * r.n,
        r.p,
        r.group_order,
        r.alpha
    )
    .unwrap();
    writeln!(
        out,
        "{:<5} {:>8} {:>8}  status",
        "type", "formula", "observed"
    )
    .unwrap();
    for row in &r.rows {
        writeln!(
            out,
            "C{:<4} {:>8} {:>8}  {}",
            row.inv_type,
            row.formula.to_string(),
            row.observed,
            row.status
        )
        .unwrap();
    }
    writeln!(out, "invariants_complete={}", r.invariants_complete).unwrap();
    out
}
