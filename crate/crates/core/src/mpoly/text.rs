//! Plain-text polynomial format.
//!
//! ```text
//! # comment lines start with '#'
//! 4 2 2 2 2 Q
//! -1 1 1 2 2
//! 1/2 2 2 2 1
//! ```
//!
//! The header is `d n_1 ... n_d field`; each following line is a coefficient
//! and a 1-based index tuple. Repeated tuples are summed. Rational
//! coefficients `a/b` are accepted over `Q` only; integers are reduced into
//! `F_p`.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::{BalancedPoly, Shape};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

/// Whitespace-separated tokens of a line with their 1-based start columns.
pub(crate) fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

pub(crate) fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Content lines (1-based line number, text), skipping blanks and comments.
pub(crate) fn content_lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
}

pub(crate) fn parse_usize(tok: &str, line: usize, col: usize, what: &str) -> Result<usize> {
    tok.parse::<usize>()
        .map_err(|_| parse_err(line, col, format!("expected {what}, found {tok:?}")))
}

fn parse_coefficient(tok: &str, field: FieldSpec, line: usize, col: usize) -> Result<Scalar> {
    let int = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|_| parse_err(line, col, format!("malformed coefficient {tok:?}")))
    };
    match tok.split_once('/') {
        None => Ok(field.from_bigint(&int(tok)?)),
        Some((n, d)) => {
            if !field.is_rationals() {
                return Err(parse_err(
                    line,
                    col,
                    format!("rational coefficient {tok:?} not allowed over {field}"),
                ));
            }
            field
                .from_ratio(&int(n)?, &int(d)?)
                .map_err(|_| parse_err(line, col, format!("zero denominator in {tok:?}")))
        }
    }
}

/// Parses a polynomial. With `field_override`, coefficients are read into
/// that field instead of the one named in the header.
pub fn parse_poly(src: &str, field_override: Option<FieldSpec>) -> Result<BalancedPoly> {
    let mut lines = content_lines(src);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "missing header line `d n_1 ... n_d field`"))?;
    let toks = tokens(header);
    let d = parse_usize(toks[0].1, hline, toks[0].0, "color count d")?;
    if d == 0 {
        return Err(parse_err(hline, toks[0].0, "d must be positive"));
    }
    if toks.len() != d + 2 {
        return Err(parse_err(
            hline,
            toks.last().map_or(1, |t| t.0),
            format!(
                "header must have {} fields for d = {d}, found {}",
                d + 2,
                toks.len()
            ),
        ));
    }
    let mut n = Vec::with_capacity(d);
    for &(col, tok) in &toks[1..=d] {
        let v = parse_usize(tok, hline, col, "variable count")?;
        if v == 0 {
            return Err(parse_err(hline, col, "variable count must be positive"));
        }
        n.push(v);
    }
    let (fcol, ftok) = toks[d + 1];
    let declared: FieldSpec = ftok
        .parse()
        .map_err(|e: Error| parse_err(hline, fcol, e.to_string()))?;
    let field = field_override.unwrap_or(declared);
    let shape = Shape::new(n).map_err(|e| parse_err(hline, 1, e.to_string()))?;

    let mut f = BalancedPoly::zero(shape, field);
    for (lno, line) in lines {
        let toks = tokens(line);
        if toks.len() != d + 1 {
            return Err(parse_err(
                lno,
                toks.last().map_or(1, |t| t.0),
                format!(
                    "term needs a coefficient and {d} indices, found {} fields",
                    toks.len()
                ),
            ));
        }
        let c = parse_coefficient(toks[0].1, field, lno, toks[0].0)?;
        let mut tuple = Vec::with_capacity(d);
        for (color, &(col, tok)) in toks[1..].iter().enumerate() {
            let j = parse_usize(tok, lno, col, "index")?;
            let nj = f.shape.dims()[color];
            if j == 0 || j > nj {
                return Err(parse_err(
                    lno,
                    col,
                    format!("index {j} out of range 1..={nj} for color {}", color + 1),
                ));
            }
            tuple.push(j - 1);
        }
        let off = f.shape.offset(&tuple)?;
        f.coeffs[off] = &f.coeffs[off] + &c;
    }
    Ok(f)
}

/// Renders `f`, preceded by the given comment lines (without the `# `).
pub fn write_poly(f: &BalancedPoly, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let dims: Vec<String> = f.shape().dims().iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "{} {} {}", f.d(), dims.join(" "), f.field());
    for (tuple, c) in f.terms() {
        let idx: Vec<String> = tuple.iter().map(|j| (j + 1).to_string()).collect();
        let _ = writeln!(out, "{c} {}", idx.join(" "));
    }
    out
}
