//! Plain-text code files.
//!
//! A file holds a header line `alpha=<A> beta=<B>` followed by one
//! generator per line, binary part and quaternary part separated by `|`:
//!
//! ```text
//! alpha=3 beta=6
//! 110|112310
//! 011|011231
//! ```
//!
//! `#` starts a comment anywhere on a line; blank lines are skipped. The
//! canonical form written by [`format_code`] has the header and the reduced
//! generators, nothing else, so parsing it back yields the same code and
//! re-rendering yields the same bytes.

use crate::code::{MixedMatrix, Z2Z4Code};
use crate::vector::parse_literal_msg;
use crate::{Error, Result};

/// Parses generator rows from the text format.
pub fn parse_matrix(text: &str) -> Result<MixedMatrix> {
    let mut header: Option<(usize, usize)> = None;
    let mut matrix: Option<MixedMatrix> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if header.is_none() {
            header = Some(parse_header(line_no, line)?);
            let (alpha, beta) = header.unwrap();
            matrix = Some(MixedMatrix::new(alpha, beta));
            continue;
        }
        let v = parse_literal_msg(line).map_err(|msg| Error::Parse { line: line_no, msg })?;
        let m = matrix.as_mut().unwrap();
        if v.alpha() != m.alpha() || v.beta() != m.beta() {
            return Err(Error::Parse {
                line: line_no,
                msg: format!(
                    "generator has shape ({}, {}), header says ({}, {})",
                    v.alpha(),
                    v.beta(),
                    m.alpha(),
                    m.beta()
                ),
            });
        }
        m.push(v)?;
    }
    matrix.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        msg: "missing header line 'alpha=<A> beta=<B>'".into(),
    })
}

fn parse_header(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let err = |msg: String| Error::Parse { line: line_no, msg };
    let mut alpha: Option<usize> = None;
    let mut beta: Option<usize> = None;
    for tok in line.split_whitespace() {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| err(format!("expected key=value, found '{tok}'")))?;
        let n: usize = val
            .parse()
            .map_err(|_| err(format!("invalid number '{val}' for {key}")))?;
        match key {
            "alpha" => alpha = Some(n),
            "beta" => beta = Some(n),
            _ => return Err(err(format!("unknown header key '{key}'"))),
        }
    }
    match (alpha, beta) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(err("header must set both alpha and beta".into())),
    }
}

/// Parses a code from the text format (generators are reduced on load).
pub fn parse_code(text: &str) -> Result<Z2Z4Code> {
    Z2Z4Code::from_generators(parse_matrix(text)?)
}

/// Renders a code in canonical form: header plus reduced generators.
pub fn format_code(code: &Z2Z4Code) -> String {
    let mut out = format!("alpha={} beta={}\n", code.alpha(), code.beta());
    for row in code.reduced().all_rows() {
        out.push_str(&row.to_string());
        out.push('\n');
    }
    out
}
