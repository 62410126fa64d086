//! PD text format.
//!
//! Grammar (whitespace, including line breaks, allowed between tokens):
//!
//! ```text
//! pd      := "PD" "[" [ item { "," item } ] "]"
//! item    := "X" "[" int "," int "," int "," int "]"
//!          | "U" "[" int "]"
//! ```
//!
//! `U[k]` is an extension carrying `k` zero-crossing circles, which PD
//! cannot express otherwise; it is written only when `k > 0`.

use super::{Crossing, Label, LinkDiagram};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PdError {
    #[error("malformed PD text at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("arc label 0 is not allowed")]
    ZeroLabel,
    #[error("arc label {label} appears {count} times, expected 2")]
    LabelCount { label: Label, count: usize },
    #[error("arc labels are not contiguous: {0} is missing or out of range")]
    Gap(Label),
    #[error("inconsistent orientation: {0}")]
    Orientation(String),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn err(&self, msg: impl Into<String>) -> PdError {
        PdError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), PdError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<Label, PdError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a non-negative integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| PdError::Syntax {
                pos: start,
                msg: "integer out of range".into(),
            })
    }
}

/// Parses PD text into a validated diagram with crossings in listed order.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, PdError> {
    let mut lx = Lexer {
        src: text.as_bytes(),
        pos: 0,
    };
    lx.expect(b'P')?;
    lx.expect(b'D')?;
    lx.expect(b'[')?;
    let mut crossings = Vec::new();
    let mut unknots = 0u32;
    if lx.peek() != Some(b']') {
        loop {
            match lx.peek() {
                Some(b'X') => {
                    lx.pos += 1;
                    lx.expect(b'[')?;
                    let mut s = [0; 4];
                    for (i, v) in s.iter_mut().enumerate() {
                        if i > 0 {
                            lx.expect(b',')?;
                        }
                        *v = lx.int()?;
                    }
                    lx.expect(b']')?;
                    crossings.push(Crossing { slots: s });
                }
                Some(b'U') => {
                    lx.pos += 1;
                    lx.expect(b'[')?;
                    unknots += lx.int()?;
                    lx.expect(b']')?;
                }
                _ => return Err(lx.err("expected X[...] or U[...]")),
            }
            match lx.peek() {
                Some(b',') => lx.pos += 1,
                Some(b']') => break,
                _ => return Err(lx.err("expected ',' or ']'")),
            }
        }
    }
    lx.expect(b']')?;
    if lx.peek().is_some() {
        return Err(lx.err("trailing input"));
    }
    LinkDiagram::new(crossings, unknots)
}

/// Formats a diagram as `PD[X[1, 4, 2, 5], ...]`.
pub fn format_pd(d: &LinkDiagram) -> String {
    let mut items: Vec<String> = d
        .crossings()
        .iter()
        .map(|c| format!("X[{}, {}, {}, {}]", c.slots[0], c.slots[1], c.slots[2], c.slots[3]))
        .collect();
    if d.unknotted_extras() > 0 {
        items.push(format!("U[{}]", d.unknotted_extras()));
    }
    format!("PD[{}]", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let d = parse_pd("PD[X[1,4,2,5],\n X[3,6,4,1],X[5,2,6,3]]").unwrap();
        assert_eq!(format_pd(&d), "PD[X[1, 4, 2, 5], X[3, 6, 4, 1], X[5, 2, 6, 3]]");
        assert_eq!(parse_pd(&format_pd(&d)).unwrap(), d);
    }

    #[test]
    fn extras() {
        let d = parse_pd("PD[U[3]]").unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.component_count(), 3);
        assert_eq!(format_pd(&d), "PD[U[3]]");
        assert_eq!(format_pd(&parse_pd("PD[]").unwrap()), "PD[]");
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_pd("PD[X[1,2,3]]"), Err(PdError::Syntax { .. })));
        assert!(matches!(parse_pd("X[1,1,2,2]"), Err(PdError::Syntax { .. })));
        assert_eq!(parse_pd("PD[X[0,1,1,2]]"), Err(PdError::ZeroLabel));
        assert_eq!(
            parse_pd("PD[X[1,1,1,2]]"),
            Err(PdError::LabelCount { label: 1, count: 3 })
        );
        assert_eq!(parse_pd("PD[X[1,1,3,3]]"), Err(PdError::Gap(2)));
        assert!(parse_pd("PD[X[1,1,2,2]] junk").is_err());
    }
}
