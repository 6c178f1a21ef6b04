//! Problem-file parsing: a set of square rational matrices plus an optional
//! shift override, read from either a line-oriented block layout or a JSON
//! document.
//!
//! Line-oriented layout: one matrix per block, blocks separated by blank
//! lines, one matrix row per line with whitespace-separated entries. Each
//! entry is an integer or a fraction `p/q`. Lines starting with `#` are
//! comments. An optional `shift = <value>` line may precede the first block.
//!
//! JSON layout (detected by a leading `{`): an object with fields `n`,
//! `matrices` (an array of n×n arrays whose entries are integers or
//! fraction strings) and an optional `shift`.

use invar_core::{Matrix, Rat};
use num::BigInt;
use num::Zero;
use serde::Deserialize;

/// A parsed enumeration problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemFile {
    /// Ambient dimension; every matrix is n×n.
    pub n: usize,
    pub matrices: Vec<Matrix<Rat>>,
    /// Shift override; `None` selects the smallest non-negative integer
    /// shift automatically.
    pub shift: Option<Rat>,
}

#[derive(Debug, thiserror::Error)]
pub enum ProblemError {
    /// Malformed input with a position. Positions are 1-based; JSON data
    /// errors past the syntax stage instead name the offending matrix.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Structurally well-formed input describing no usable problem.
    #[error("{0}")]
    Invalid(String),
}

type Result<T> = std::result::Result<T, ProblemError>;

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> ProblemError {
    ProblemError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Parses an integer or `p/q` fraction with a non-zero denominator.
pub fn parse_rat(tok: &str) -> std::result::Result<Rat, String> {
    let (p, q) = match tok.split_once('/') {
        Some((p, q)) => (p, q),
        None => (tok, "1"),
    };
    let bad = || format!("expected an integer or fraction p/q, found {tok:?}");
    let p: BigInt = p.trim().parse().map_err(|_| bad())?;
    let q: BigInt = q.trim().parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(format!("fraction {tok:?} has a zero denominator"));
    }
    Ok(Rat::new(p, q))
}

/// Splits a line into (1-based column, token) pairs on ASCII whitespace.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let bytes = line.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        out.push((start + 1, &line[start..i]));
    }
    out
}

/// Parses either supported layout, chosen by the first non-space character.
pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_lines(text)
    }
}

/// Finishes a matrix block once a blank line or the end of input is seen.
fn close_block(
    block: &mut Vec<Vec<Rat>>,
    n: Option<usize>,
    matrices: &mut Vec<Matrix<Rat>>,
    line_no: usize,
) -> Result<()> {
    if block.is_empty() {
        return Ok(());
    }
    let expected = n.expect("n is fixed by the first parsed row");
    if block.len() != expected {
        return Err(parse_err(
            line_no,
            1,
            format!(
                "matrix block has {} rows, expected {expected} to match its width",
                block.len()
            ),
        ));
    }
    matrices.push(Matrix::from_rows(std::mem::take(block)));
    Ok(())
}

fn parse_lines(text: &str) -> Result<ProblemFile> {
    let mut matrices: Vec<Matrix<Rat>> = Vec::new();
    let mut shift: Option<Rat> = None;
    let mut block: Vec<Vec<Rat>> = Vec::new();
    let mut n: Option<usize> = None;

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.starts_with('#') {
            continue;
        }
        if trimmed.is_empty() {
            close_block(&mut block, n, &mut matrices, line_no)?;
            continue;
        }
        let toks = tokens(line);
        if toks[0].1 == "shift" {
            if !matrices.is_empty() || !block.is_empty() {
                return Err(parse_err(
                    line_no,
                    toks[0].0,
                    "shift directive must precede the matrices",
                ));
            }
            if shift.is_some() {
                return Err(parse_err(line_no, toks[0].0, "duplicate shift directive"));
            }
            match toks.as_slice() {
                [_, (_, "="), (col, value)] => {
                    shift =
                        Some(parse_rat(value).map_err(|m| parse_err(line_no, *col, m))?);
                }
                _ => {
                    return Err(parse_err(
                        line_no,
                        toks[0].0,
                        "expected `shift = <integer or p/q>`",
                    ))
                }
            }
            continue;
        }
        let mut row = Vec::with_capacity(toks.len());
        for (col, tok) in &toks {
            row.push(parse_rat(tok).map_err(|m| parse_err(line_no, *col, m))?);
        }
        match n {
            None => n = Some(row.len()),
            Some(expected) if row.len() != expected => {
                return Err(parse_err(
                    line_no,
                    1,
                    format!("row has {} entries, expected {expected}", row.len()),
                ));
            }
            Some(_) => {}
        }
        block.push(row);
    }
    let end = text.lines().count() + 1;
    close_block(&mut block, n, &mut matrices, end)?;

    match n {
        None => Err(ProblemError::Invalid(
            "input contains no matrices".to_string(),
        )),
        Some(n) => Ok(ProblemFile {
            n,
            matrices,
            shift,
        }),
    }
}

#[derive(Deserialize)]
struct JsonProblem {
    n: usize,
    #[serde(default)]
    shift: Option<JsonEntry>,
    matrices: Vec<Vec<Vec<JsonEntry>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonEntry {
    Int(i64),
    Str(String),
}

impl JsonEntry {
    fn to_rat(&self, what: &str) -> Result<Rat> {
        match self {
            JsonEntry::Int(v) => Ok(Rat::from_integer(BigInt::from(*v))),
            JsonEntry::Str(s) => {
                parse_rat(s).map_err(|m| ProblemError::Invalid(format!("{what}: {m}")))
            }
        }
    }
}

fn parse_json(text: &str) -> Result<ProblemFile> {
    let raw: JsonProblem = serde_json::from_str(text).map_err(|e| {
        parse_err(e.line(), e.column().max(1), e.to_string())
    })?;
    if raw.n == 0 {
        return Err(ProblemError::Invalid("n must be positive".to_string()));
    }
    if raw.matrices.is_empty() {
        return Err(ProblemError::Invalid(
            "input contains no matrices".to_string(),
        ));
    }
    let mut matrices = Vec::with_capacity(raw.matrices.len());
    for (mi, rows) in raw.matrices.iter().enumerate() {
        if rows.len() != raw.n {
            return Err(ProblemError::Invalid(format!(
                "matrix {} has {} rows, expected {}",
                mi + 1,
                rows.len(),
                raw.n
            )));
        }
        let mut out_rows = Vec::with_capacity(raw.n);
        for (ri, row) in rows.iter().enumerate() {
            if row.len() != raw.n {
                return Err(ProblemError::Invalid(format!(
                    "matrix {}, row {} has {} entries, expected {}",
                    mi + 1,
                    ri + 1,
                    row.len(),
                    raw.n
                )));
            }
            let mut out_row = Vec::with_capacity(raw.n);
            for (ci, entry) in row.iter().enumerate() {
                let what = format!("matrix {}, row {}, column {}", mi + 1, ri + 1, ci + 1);
                out_row.push(entry.to_rat(&what)?);
            }
            out_rows.push(out_row);
        }
        matrices.push(Matrix::from_rows(out_rows));
    }
    let shift = match &raw.shift {
        Some(e) => Some(e.to_rat("shift")?),
        None => None,
    };
    Ok(ProblemFile {
        n: raw.n,
        matrices,
        shift,
    })
}
