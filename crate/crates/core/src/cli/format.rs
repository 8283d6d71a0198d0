//! Text syntax for scalars, field descriptors and matrix files.
//!
//! A matrix file looks like
//!
//! ```text
//! field: rationals
//! alpha: 2
//! 0 1/2*w 0 0
//! ...
//! ```
//!
//! The `field:` line is one of `rationals`, `fp <p>` or `real`. The optional
//! `alpha:` line names the extension `k[w]` with `w = sqrt(alpha)`; entries
//! then take the form `a`, `b*w`, `w`, `-w` or `a+b*w` with `a`, `b`
//! rationals `p/q`. Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::field::{Adjoined, FVal, FieldCtx, FieldKind, RootImage, Scalar};
use crate::linalg::Mat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Other(String),
}

fn at(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        msg: msg.into(),
    }
}

/// `p`, `-p` or `p/q` with integer `p`, `q`.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num
        .trim()
        .parse()
        .map_err(|_| format!("bad number {s:?}"))?;
    let den: BigInt = den
        .trim()
        .parse()
        .map_err(|_| format!("bad number {s:?}"))?;
    if den == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(BigRational::new(num, den))
}

/// A base-field scalar; prime-field values reduce `p/q` modulo the prime.
pub fn parse_base(ctx: &FieldCtx, s: &str) -> Result<Scalar, String> {
    let q = parse_rational(s)?;
    if let FieldKind::PrimeField(p) = ctx.kind() {
        if q.denom() % BigInt::from(p) == BigInt::from(0) {
            return Err(format!("{s:?} has a denominator divisible by {p}"));
        }
    }
    Ok(ctx.rational(q))
}

/// `(a, b)` for `a + b*w`, parsed against the base field.
pub fn parse_parts(ctx: &FieldCtx, s: &str) -> Result<(Scalar, Scalar), String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty scalar".into());
    }
    let Some(body) = t.strip_suffix('w') else {
        return Ok((parse_base(ctx, &t)?, ctx.zero()));
    };
    // Split off the w-term at the last sign that is not the leading one.
    let split = body
        .char_indices()
        .filter(|&(i, c)| i > 0 && (c == '+' || c == '-') && !body[..i].ends_with('/'))
        .map(|(i, _)| i)
        .next_back();
    let (a_txt, b_txt) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let b_txt = b_txt.strip_suffix('*').unwrap_or(b_txt);
    let b = match b_txt {
        "" | "+" => ctx.one(),
        "-" => ctx.int(-1),
        other => parse_base(ctx, other.strip_prefix('+').unwrap_or(other))?,
    };
    let a = if a_txt.is_empty() {
        ctx.zero()
    } else {
        parse_base(ctx, a_txt)?
    };
    Ok((a, b))
}

/// `rationals`, `real`, `fp <p>` (also `fp:<p>`).
pub fn parse_field(s: &str) -> Result<FieldCtx, String> {
    let t = s.trim();
    match t {
        "rationals" | "Q" => return Ok(FieldCtx::rationals()),
        "real" | "R" => return Ok(FieldCtx::real_model()),
        _ => {}
    }
    let rest = t
        .strip_prefix("fp")
        .ok_or_else(|| format!("unknown field {t:?} (expected rationals, fp <p> or real)"))?;
    let p: u64 = rest
        .trim_start_matches([':', ' '])
        .trim()
        .parse()
        .map_err(|_| format!("bad prime in field descriptor {t:?}"))?;
    FieldCtx::prime_field(p).map_err(|e| e.to_string())
}

/// A parsed matrix file; `matrix` lives in the canonical extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixDocument {
    pub base: FieldCtx,
    /// `alpha` exactly as written in the file.
    pub alpha: Option<Scalar>,
    pub matrix: Mat,
}

/// Field in which the values of a document live, given its `alpha:` line.
pub fn extension_for(base: &FieldCtx, alpha: Option<&Scalar>) -> Result<Option<Adjoined>, String> {
    match alpha {
        None => Ok(None),
        Some(a) if a.is_zero() => Err("alpha must be nonzero".into()),
        Some(a) => base.adjoin(a).map(Some).map_err(|e| e.to_string()),
    }
}

pub fn parse_value(base: &FieldCtx, adj: Option<&Adjoined>, s: &str) -> Result<FVal, String> {
    let (a, b) = parse_parts(base, s)?;
    match adj {
        Some(adj) => Ok(adj.value(a, b)),
        None if b.is_zero() => Ok(base.lift(a)),
        None => Err(format!("{s:?} uses w but the file has no alpha line")),
    }
}

pub fn parse_document(text: &str) -> Result<MatrixDocument, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, first) = lines
        .next()
        .ok_or_else(|| ParseError::Other("empty matrix file".into()))?;
    let desc = first
        .strip_prefix("field:")
        .ok_or_else(|| at(ln, "expected `field: rationals | fp <p> | real`"))?;
    let base = parse_field(desc).map_err(|m| at(ln, m))?;
    let mut rest: Vec<(usize, &str)> = lines.collect();
    let mut alpha = None;
    if let Some(&(ln, l)) = rest.first() {
        if let Some(v) = l.strip_prefix("alpha:") {
            alpha = Some(parse_base(&base, v).map_err(|m| at(ln, m))?);
            rest.remove(0);
        }
    }
    let adj = extension_for(&base, alpha.as_ref()).map_err(ParseError::Other)?;
    let ctx = adj.as_ref().map_or(base.clone(), |a| a.ctx.clone());
    let dim = rest.len();
    if dim == 0 || dim % 2 == 1 {
        return Err(ParseError::Other(format!(
            "expected 2n matrix rows, found {dim}"
        )));
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for (ln, l) in rest {
        let cells: Vec<&str> = l.split_whitespace().collect();
        if cells.len() != dim {
            return Err(at(
                ln,
                format!("expected {dim} entries, found {}", cells.len()),
            ));
        }
        for c in cells {
            entries.push(parse_value(&base, adj.as_ref(), c).map_err(|m| at(ln, m))?);
        }
    }
    let matrix = Mat::from_fn(&ctx, dim, dim, |i, j| entries[i * dim + j].clone());
    Ok(MatrixDocument {
        base,
        alpha,
        matrix,
    })
}

/// Canonical text of a matrix: `field:` line, `alpha:` line when the
/// matrix has extension entries, then the rows.
pub fn print_document(m: &Mat) -> String {
    let mut out = String::new();
    let ctx = m.ctx();
    writeln!(out, "field: {}", ctx.kind()).unwrap();
    if let Some(a) = ctx.ext_disc() {
        writeln!(out, "alpha: {a}").unwrap();
    }
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

/// `sqrt(alpha_user)` expressed in the canonical field, for messages.
pub fn describe_root(adj: &Adjoined) -> String {
    match &adj.image {
        RootImage::Folded(r) => format!("{r}"),
        RootImage::Scaled(c) if c.is_one() => "w".to_string(),
        RootImage::Scaled(c) => format!("{c}*w"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_syntax() {
        let q = FieldCtx::rationals();
        let half = q.frac(1, 2);
        assert_eq!(parse_parts(&q, "3/2").unwrap(), (q.frac(3, 2), q.zero()));
        assert_eq!(parse_parts(&q, "1/2+1/2*w").unwrap(), (half.clone(), half));
        assert_eq!(parse_parts(&q, "w").unwrap(), (q.zero(), q.one()));
        assert_eq!(parse_parts(&q, "-w").unwrap(), (q.zero(), q.int(-1)));
        assert_eq!(parse_parts(&q, "-3*w").unwrap(), (q.zero(), q.int(-3)));
        assert_eq!(parse_parts(&q, "1-3*w").unwrap(), (q.one(), q.int(-3)));
        assert_eq!(
            parse_parts(&q, "-1/8-1/8*w").unwrap(),
            (q.frac(-1, 8), q.frac(-1, 8))
        );
        assert!(parse_parts(&q, "1/0").is_err());
        assert!(parse_parts(&q, "x").is_err());
    }

    #[test]
    fn prime_field_values_reduce() {
        let f5 = FieldCtx::prime_field(5).unwrap();
        assert_eq!(parse_base(&f5, "-1").unwrap(), f5.int(4));
        assert_eq!(parse_base(&f5, "1/2").unwrap(), f5.int(3));
        assert!(parse_base(&f5, "1/5").is_err());
    }

    #[test]
    fn field_descriptors() {
        assert_eq!(parse_field("rationals").unwrap(), FieldCtx::rationals());
        assert_eq!(
            parse_field("fp 7").unwrap(),
            FieldCtx::prime_field(7).unwrap()
        );
        assert_eq!(
            parse_field("fp:7").unwrap(),
            FieldCtx::prime_field(7).unwrap()
        );
        assert_eq!(parse_field("real").unwrap(), FieldCtx::real_model());
        assert!(parse_field("fp 2").is_err());
        assert!(parse_field("complex").is_err());
    }

    #[test]
    fn document_round_trip() {
        let text = "field: rationals\nalpha: 8\n0 w\n-1/8*w 0\n";
        let doc = parse_document(text).unwrap();
        // sqrt(8) = 2 sqrt(2)
        assert_eq!(
            doc.matrix.ctx().ext_disc(),
            Some(&FieldCtx::rationals().int(2))
        );
        let printed = print_document(&doc.matrix);
        assert_eq!(printed, "field: rationals\nalpha: 2\n0 2*w\n-1/4*w 0\n");
        let again = parse_document(&printed).unwrap();
        assert_eq!(again.matrix, doc.matrix);
        assert_eq!(print_document(&again.matrix), printed);
    }

    #[test]
    fn document_errors_name_the_line() {
        let err = parse_document("field: rationals\n1 0\n0\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Line {
                line: 3,
                msg: "expected 2 entries, found 1".into()
            }
        );
        assert!(parse_document("field: rationals\nw 0\n0 1\n").is_err());
        assert!(parse_document("rationals\n1 0\n0 1\n").is_err());
    }
}
