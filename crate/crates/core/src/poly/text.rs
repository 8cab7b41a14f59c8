//! Polynomial files: one `name: c0 c1 c2 …` per line, constant coefficient first.
//! `#` starts a comment; blank lines are skipped.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::{parse_rational_text, Rational};

use super::Polynomial;

#[derive(Clone, Debug, PartialEq)]
pub struct NamedPoly {
    pub name: String,
    pub poly: Polynomial<Rational>,
}

impl NamedPoly {
    pub fn new(name: impl Into<String>, poly: Polynomial<Rational>) -> Self {
        NamedPoly {
            name: name.into(),
            poly,
        }
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Parses one non-comment line. `line` is only used for error positions.
fn parse_line(text: &str, line: usize) -> Result<Option<NamedPoly>> {
    let body = match text.find('#') {
        Some(i) => &text[..i],
        None => text,
    };
    if body.trim().is_empty() {
        return Ok(None);
    }
    let col = |byte: usize| text[..byte].chars().count() + 1;
    let colon = body
        .find(':')
        .ok_or_else(|| syntax(line, col(body.len()), "expected 'name:'"))?;
    let name = body[..colon].trim();
    if name.is_empty() {
        return Err(syntax(line, col(colon), "empty polynomial name"));
    }
    if let Some((i, _)) = body[..colon]
        .char_indices()
        .skip_while(|(_, c)| c.is_whitespace())
        .find(|(i, c)| c.is_whitespace() && *i < body[..colon].trim_end().len())
    {
        return Err(syntax(line, col(i), "whitespace inside polynomial name"));
    }
    let mut coeffs = Vec::new();
    let rest = &body[colon + 1..];
    let mut offset = colon + 1;
    for tok in rest.split_inclusive(char::is_whitespace) {
        let start = offset;
        offset += tok.len();
        let t = tok.trim();
        if t.is_empty() {
            continue;
        }
        let lead = tok.len() - tok.trim_start().len();
        let column = col(start + lead);
        if let Some((_, d)) = t.split_once('/') {
            if parse_rational_text(d).is_some_and(|q| q.is_zero()) {
                return Err(Error::ZeroDenominator { line, column });
            }
        }
        let q = parse_rational_text(t).ok_or_else(|| syntax(line, column, format!("invalid coefficient '{t}'")))?;
        coeffs.push(q);
    }
    if coeffs.is_empty() {
        return Err(syntax(line, col(body.len()), "no coefficients"));
    }
    Ok(Some(NamedPoly {
        name: name.to_string(),
        poly: Polynomial::new(coeffs),
    }))
}

/// Parses a single `name: c0 c1 …` line.
pub fn parse_poly(text: &str) -> Result<NamedPoly> {
    parse_line(text, 1)?.ok_or_else(|| syntax(1, 1, "empty input"))
}

/// Parses a whole file, 1-based line/column errors.
pub fn parse_poly_file(text: &str) -> Result<Vec<NamedPoly>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if let Some(p) = parse_line(line, i + 1)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Canonical text: single spaces, reduced fractions; the zero polynomial prints as `0`.
pub fn format_poly(p: &NamedPoly) -> String {
    format!("{}: {}", p.name, p.poly)
}
