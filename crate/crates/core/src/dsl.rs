//! Line-oriented text format for circuits (`.qc` files).
//!
//! ```text
//! # three CX̃ gates swap two qutrits
//! dim 3
//! wires 2
//! CXT 2 1
//! CXT 1 2
//! CXT 2 1
//! ```
//!
//! `dim` and `wires` must come first, in that order. Each following line is
//! a gate mnemonic and its 1-based wires, control first. Blank lines and
//! lines starting with `#` are ignored.

use std::fmt;

use crate::algebra::Dimension;
use crate::circuit::{Circuit, GateOp};
use crate::gates::GateKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    DuplicateHeader,
    UnknownGate,
    ArityMismatch,
    WireOutOfRange,
    DuplicateWire,
    NotAnInteger,
    InvalidDimension,
    InvalidWireCount,
    UnexpectedToken,
}

/// First problem found in a document. `line` and `column` are 1-based and
/// count characters, not bytes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub token: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )?;
        if !self.token.is_empty() {
            write!(f, " (at `{}`)", self.token)?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl<'a> Token<'a> {
    fn error(&self, kind: ParseErrorKind, message: impl Into<String>) -> ParseError {
        ParseError {
            kind,
            line: self.line,
            column: self.column,
            message: message.into(),
            token: self.text.to_string(),
        }
    }

    fn integer(&self) -> Result<i64, ParseError> {
        self.text
            .parse::<i64>()
            .map_err(|_| self.error(ParseErrorKind::NotAnInteger, "expected an integer"))
    }
}

fn tokenize(line: &str, line_no: usize) -> Vec<Token<'_>> {
    let mut tokens = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (byte, ch)) in line.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((byte, col + 1)),
            (true, Some((b, c))) => {
                tokens.push(Token {
                    text: &line[b..byte],
                    line: line_no,
                    column: c,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((b, c)) = start {
        tokens.push(Token {
            text: &line[b..],
            line: line_no,
            column: c,
        });
    }
    tokens
}

/// Parses a header statement `keyword <integer>`.
fn header_value<'a>(tokens: &[Token<'a>]) -> Result<(Token<'a>, i64), ParseError> {
    let keyword = tokens[0];
    let value = tokens.get(1).ok_or_else(|| {
        let mut at = keyword;
        at.column += keyword.text.chars().count();
        at.text = "";
        at.error(
            ParseErrorKind::NotAnInteger,
            format!("`{}` needs an integer value", keyword.text),
        )
    })?;
    let v = value.integer()?;
    if let Some(extra) = tokens.get(2) {
        return Err(extra.error(
            ParseErrorKind::UnexpectedToken,
            "unexpected token after header value",
        ));
    }
    Ok((*value, v))
}

/// Parses a `.qc` document. Returns the first error encountered.
pub fn parse(text: &str) -> Result<Circuit, ParseError> {
    let mut dim: Option<Dimension> = None;
    let mut circuit: Option<Circuit> = None;
    let mut last_line = 0;

    for (i, raw) in text.split('\n').enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens = tokenize(line, line_no);
        let head = tokens[0];

        match (head.text, dim, circuit.as_mut()) {
            ("dim", None, _) => {
                let (at, v) = header_value(&tokens)?;
                dim = Some(Dimension::new(v).map_err(|_| {
                    at.error(
                        ParseErrorKind::InvalidDimension,
                        "dimension must be at least 2",
                    )
                })?);
            }
            ("wires", Some(d), None) => {
                let (at, v) = header_value(&tokens)?;
                if v < 1 {
                    return Err(
                        at.error(ParseErrorKind::InvalidWireCount, "need at least one wire")
                    );
                }
                circuit = Some(Circuit::new(d, v as usize).expect("n >= 1"));
            }
            ("dim", Some(_), _) | ("wires", _, Some(_)) => {
                return Err(head.error(
                    ParseErrorKind::DuplicateHeader,
                    format!("duplicate `{}` header", head.text),
                ));
            }
            (_, None, _) => {
                return Err(head.error(ParseErrorKind::MissingHeader, "expected `dim <d>` header"));
            }
            (_, Some(_), None) => {
                return Err(
                    head.error(ParseErrorKind::MissingHeader, "expected `wires <n>` header")
                );
            }
            (_, Some(d), Some(c)) => {
                let op = parse_gate(&tokens, d, c.wires())?;
                c.push_op(op).expect("wires checked while parsing");
            }
        }
    }

    circuit.ok_or_else(|| {
        let missing = if dim.is_none() {
            "dim <d>"
        } else {
            "wires <n>"
        };
        ParseError {
            kind: ParseErrorKind::MissingHeader,
            line: last_line.max(1),
            column: 1,
            message: format!("missing `{missing}` header"),
            token: String::new(),
        }
    })
}

fn parse_gate(tokens: &[Token<'_>], d: Dimension, n: usize) -> Result<GateOp, ParseError> {
    let head = tokens[0];
    let kind = GateKind::from_mnemonic(head.text).ok_or_else(|| {
        head.error(
            ParseErrorKind::UnknownGate,
            format!("unknown gate `{}`", head.text),
        )
    })?;
    let args = &tokens[1..];
    let mut wires = Vec::with_capacity(kind.arity());
    for (i, tok) in args.iter().enumerate() {
        let w = tok.integer()?;
        if i >= kind.arity() {
            return Err(tok.error(
                ParseErrorKind::ArityMismatch,
                format!(
                    "{} takes {} wire(s), got {}",
                    kind,
                    kind.arity(),
                    args.len()
                ),
            ));
        }
        if w < 1 || w as usize > n {
            return Err(tok.error(
                ParseErrorKind::WireOutOfRange,
                format!("wire must be in 1..={n}"),
            ));
        }
        let w = w as usize;
        if wires.contains(&w) {
            return Err(tok.error(
                ParseErrorKind::DuplicateWire,
                format!("wire {w} used twice"),
            ));
        }
        wires.push(w);
    }
    if wires.len() < kind.arity() {
        return Err(head.error(
            ParseErrorKind::ArityMismatch,
            format!(
                "{} takes {} wire(s), got {}",
                kind,
                kind.arity(),
                wires.len()
            ),
        ));
    }
    Ok(GateOp::new(d, kind, wires).expect("arity and distinct wires checked"))
}

/// Canonical text of a circuit: headers, then one gate per line, single
/// spaces, LF endings and a trailing newline.
pub fn render(c: &Circuit) -> String {
    let mut out = format!("dim {}\nwires {}\n", c.dimension(), c.wires());
    for op in c.ops() {
        out.push_str(op.kind().mnemonic());
        for w in op.wires() {
            out.push(' ');
            out.push_str(&w.to_string());
        }
        out.push('\n');
    }
    out
}
