//! Plain-text generator matrix files.
//!
//! ```text
//! # comment
//! 1 9
//! # expect rank 13
//! 1 | 0 0 0 0 0 0 0 0 0
//! 0 | 0 0 0 2 0 0 0 0 0
//! ```
//!
//! The first non-comment line is `alpha beta`. Each further line is one row:
//! binary symbols, a literal `|`, quaternary symbols. Comment lines of the
//! form `# expect rank N`, `# expect kernel N` or `# expect type (a,b;g,d;k)`
//! are kept as [`Expectation`]s; all other comments are dropped.

use crate::error::{Error, Result};
use crate::params::TypeParams;
use crate::vector::MixedVector;
use std::fmt::Write as _;

/// An invariant a matrix file claims for its code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Rank(usize),
    Kernel(usize),
    Type(TypeParams),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFile {
    pub alpha: usize,
    pub beta: usize,
    pub rows: Vec<MixedVector>,
    pub expectations: Vec<Expectation>,
}

impl MatrixFile {
    pub fn new(alpha: usize, beta: usize, rows: Vec<MixedVector>) -> Self {
        Self { alpha, beta, rows, expectations: Vec::new() }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut rows = Vec::new();
        let mut expectations = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let (body, comment) = match raw.find('#') {
                Some(p) => (&raw[..p], Some((p, &raw[p + 1..]))),
                None => (raw, None),
            };
            if let Some((p, c)) = comment {
                if let Some(e) = parse_expectation(c, line, p + 2)? {
                    expectations.push(e);
                }
            }
            let tokens = tokenize(body);
            if tokens.is_empty() {
                continue;
            }
            match header {
                None => header = Some(parse_header(&tokens, line)?),
                Some((alpha, beta)) => rows.push(parse_row(&tokens, alpha, beta, line, body.len())?),
            }
        }

        let (alpha, beta) = header.ok_or(Error::Parse {
            line: text.lines().count().max(1),
            column: 1,
            message: "missing `alpha beta` header".into(),
        })?;
        Ok(Self { alpha, beta, rows, expectations })
    }

    pub fn serialize(&self) -> String {
        let mut out = format!("{} {}\n", self.alpha, self.beta);
        for e in &self.expectations {
            match e {
                Expectation::Rank(r) => writeln!(out, "# expect rank {r}"),
                Expectation::Kernel(k) => writeln!(out, "# expect kernel {k}"),
                Expectation::Type(t) => writeln!(out, "# expect type {t}"),
            }
            .expect("writing to a String");
        }
        for r in &self.rows {
            writeln!(out, "{r}").expect("writing to a String");
        }
        out
    }

    pub fn expected_rank(&self) -> Option<usize> {
        self.expectations.iter().find_map(|e| match e {
            Expectation::Rank(r) => Some(*r),
            _ => None,
        })
    }

    pub fn expected_kernel(&self) -> Option<usize> {
        self.expectations.iter().find_map(|e| match e {
            Expectation::Kernel(k) => Some(*k),
            _ => None,
        })
    }

    pub fn expected_type(&self) -> Option<TypeParams> {
        self.expectations.iter().find_map(|e| match e {
            Expectation::Type(t) => Some(*t),
            _ => None,
        })
    }
}

/// Whitespace tokens with 1-based columns; `|` is always a token of its own.
fn tokenize(body: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in body.char_indices() {
        if ch.is_whitespace() || ch == '|' {
            if let Some(s) = start.take() {
                out.push((s + 1, &body[s..i]));
            }
            if ch == '|' {
                out.push((i + 1, "|"));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &body[s..]));
    }
    out
}

fn parse_number(tok: &str, line: usize, column: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse { line, column, message: format!("expected a non-negative integer, found `{tok}`") })
}

fn parse_header(tokens: &[(usize, &str)], line: usize) -> Result<(usize, usize)> {
    if tokens.len() != 2 {
        let column = tokens.get(2).map_or(tokens[0].0, |t| t.0);
        return Err(Error::Parse { line, column, message: "header must be `alpha beta`".into() });
    }
    let alpha = parse_number(tokens[0].1, line, tokens[0].0)?;
    let beta = parse_number(tokens[1].1, line, tokens[1].0)?;
    if alpha + beta == 0 {
        return Err(Error::Parse { line, column: 1, message: "alpha + beta must be positive".into() });
    }
    Ok((alpha, beta))
}

fn parse_row(tokens: &[(usize, &str)], alpha: usize, beta: usize, line: usize, width: usize) -> Result<MixedVector> {
    let bars: Vec<usize> = tokens.iter().enumerate().filter(|(_, t)| t.1 == "|").map(|(i, _)| i).collect();
    let bar = match bars.as_slice() {
        [b] => *b,
        [] => return Err(Error::Parse { line, column: 1, message: "row needs a `|` between binary and quaternary parts".into() }),
        [_, second, ..] => {
            return Err(Error::Parse { line, column: tokens[*second].0, message: "more than one `|` in row".into() })
        }
    };
    let (xs, ys) = (&tokens[..bar], &tokens[bar + 1..]);
    if xs.len() != alpha {
        let column = xs.get(alpha).map_or(tokens[bar].0, |t| t.0);
        return Err(Error::Parse { line, column, message: format!("expected {alpha} binary symbols, found {}", xs.len()) });
    }
    if ys.len() != beta {
        let column = ys.get(beta).map_or(width + 1, |t| t.0);
        return Err(Error::Parse { line, column, message: format!("expected {beta} quaternary symbols, found {}", ys.len()) });
    }
    let symbol = |&(column, tok): &(usize, &str), modulus: u8| -> Result<u8> {
        match tok.parse::<u8>() {
            Ok(v) if v < modulus => Ok(v),
            _ => Err(Error::Parse { line, column, message: format!("`{tok}` is not a symbol of Z{modulus}") }),
        }
    };
    let x = xs.iter().map(|t| symbol(t, 2)).collect::<Result<Vec<u8>>>()?;
    let y = ys.iter().map(|t| symbol(t, 4)).collect::<Result<Vec<u8>>>()?;
    MixedVector::from_symbols(&x, &y)
}

fn parse_expectation(comment: &str, line: usize, column: usize) -> Result<Option<Expectation>> {
    let mut words = comment.split_whitespace();
    if words.next() != Some("expect") {
        return Ok(None);
    }
    let bad = |message: String| Error::Parse { line, column, message };
    let kind = words.next().ok_or_else(|| bad("`expect` needs `rank`, `kernel` or `type`".into()))?;
    let value: String = words.collect::<Vec<_>>().join("");
    let number = || value.parse::<usize>().map_err(|_| bad(format!("`{value}` is not a non-negative integer")));
    let e = match kind {
        "rank" => Expectation::Rank(number()?),
        "kernel" => Expectation::Kernel(number()?),
        "type" => Expectation::Type(parse_type(&value).ok_or_else(|| bad(format!("`{value}` is not a type (a,b;g,d;k)")))?),
        other => return Err(bad(format!("unknown expectation `{other}`"))),
    };
    Ok(Some(e))
}

/// Parses `(a,b;g,d;k)`.
pub fn parse_type(s: &str) -> Option<TypeParams> {
    let inner = s.trim().strip_prefix('(')?.strip_suffix(')')?;
    let nums: Vec<usize> = inner
        .split([',', ';'])
        .map(|t| t.trim().parse().ok())
        .collect::<Option<Vec<_>>>()?;
    match nums.as_slice() {
        &[a, b, g, d, k] => Some(TypeParams::new(a, b, g, d, k)),
        _ => None,
    }
}
