//! Reader for the `snf` input format: a `rows cols` header line followed by
//! `rows * cols` whitespace-separated integers in row-major order.

use std::fmt;

use num_bigint::BigInt;
use rootlattice::zlinalg::IntMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(src: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (l, line) in src.lines().enumerate() {
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            out.push(Token {
                text: &tail[..len],
                line: l + 1,
                column: offset + start + 1,
            });
            offset += start + len;
            rest = &tail[len..];
        }
    }
    out
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse(src: &str) -> Result<IntMatrix, ParseError> {
    let toks = tokens(src);
    let header: Vec<&Token> = toks.iter().filter(|t| t.line == toks.first().map_or(1, |f| f.line)).collect();
    if header.len() != 2 {
        let (line, column) = header.get(2).map_or((1, 1), |t| (t.line, t.column));
        return Err(err(line, column, "header must be exactly \"rows cols\""));
    }
    let dim = |t: &Token| -> Result<usize, ParseError> {
        t.text
            .parse::<usize>()
            .map_err(|_| err(t.line, t.column, format!("expected a dimension, found {:?}", t.text)))
    };
    let rows = dim(header[0])?;
    let cols = dim(header[1])?;
    let entries = &toks[2..];
    let expected = rows * cols;
    let data = entries
        .iter()
        .take(expected)
        .map(|t| {
            t.text
                .parse::<BigInt>()
                .map_err(|_| err(t.line, t.column, format!("expected an integer, found {:?}", t.text)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(extra) = entries.get(expected) {
        return Err(err(
            extra.line,
            extra.column,
            format!("unexpected entry {:?}; a {rows}x{cols} matrix has {expected} entries", extra.text),
        ));
    }
    if data.len() < expected {
        let last_line = src.lines().count().max(1);
        let column = src.lines().last().map_or(0, str::len) + 1;
        return Err(err(
            last_line,
            column,
            format!("found {} entries, expected {expected}", data.len()),
        ));
    }
    Ok(IntMatrix::new(rows, cols, data).expect("entry count checked"))
}
