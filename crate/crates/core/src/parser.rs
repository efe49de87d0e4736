//! Plain-text polynomial syntax.
//!
//! ```text
//! list       := [ '[' | '(' ] expression ( (',' | newline) expression )* [ ']' | ')' ]
//! expression := term ( ('+' | '-') term )*
//! term       := factor ( '*' factor )*
//! factor     := ('+' | '-') factor
//!             | rational
//!             | variable ( '^' exponent )?
//!             | '(' expression ')' ( '^' exponent )?
//! rational   := integer ( '/' positive-integer )?
//! exponent   := positive-integer
//! ```
//!
//! Whitespace is insignificant except that a newline outside parentheses
//! separates list elements. `**` is accepted for `^`. Juxtaposition is not
//! multiplication: `a1 a2` is an error.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{ParseError, ParseErrorKind};
use crate::poly::{Monomial, Polynomial, Rational, RingContext};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Newline,
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("number {n}"),
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Slash => "`/`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBracket => "`[`".into(),
            Tok::RBracket => "`]`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(src: &str) -> Result<Vec<Spanned>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, col);
        let push = |out: &mut Vec<Spanned>, tok| {
            out.push(Spanned {
                tok,
                line: start_line,
                column: start_col,
            })
        };
        match c {
            '\n' => {
                push(&mut out, Tok::Newline);
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {}
            '0'..='9' => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let digits: String = chars[i..j].iter().collect();
                push(&mut out, Tok::Int(digits.parse().unwrap()));
                col += j - i;
                i = j;
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                push(&mut out, Tok::Ident(chars[i..j].iter().collect()));
                col += j - i;
                i = j;
                continue;
            }
            '*' if chars.get(i + 1) == Some(&'*') => {
                push(&mut out, Tok::Caret);
                i += 2;
                col += 2;
                continue;
            }
            '+' => push(&mut out, Tok::Plus),
            '-' => push(&mut out, Tok::Minus),
            '*' => push(&mut out, Tok::Star),
            '^' => push(&mut out, Tok::Caret),
            '/' => push(&mut out, Tok::Slash),
            '(' => push(&mut out, Tok::LParen),
            ')' => push(&mut out, Tok::RParen),
            '[' => push(&mut out, Tok::LBracket),
            ']' => push(&mut out, Tok::RBracket),
            ',' => push(&mut out, Tok::Comma),
            other => {
                return Err(ParseError {
                    line,
                    column: col,
                    kind: ParseErrorKind::UnexpectedChar(other),
                    element: None,
                })
            }
        }
        i += 1;
        col += 1;
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    ctx: &'a Arc<RingContext>,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> &Spanned {
        // newlines inside parentheses are plain whitespace
        if self.depth > 0 {
            while self.toks[self.pos].tok == Tok::Newline {
                self.pos += 1;
            }
        }
        &self.toks[self.pos]
    }

    fn skip_newlines(&mut self) {
        while self.toks[self.pos].tok == Tok::Newline {
            self.pos += 1;
        }
    }

    fn bump(&mut self) -> Spanned {
        self.peek();
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error(&self, at: &Spanned, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: at.line,
            column: at.column,
            kind,
            element: None,
        }
    }

    fn unexpected(&self, at: &Spanned, expected: &'static str) -> ParseError {
        self.error(
            at,
            ParseErrorKind::UnexpectedToken {
                found: at.tok.describe(),
                expected,
            },
        )
    }

    fn expression(&mut self) -> Result<Polynomial, ParseError> {
        self.skip_newlines();
        let mut acc = self.term()?;
        loop {
            let t = self.peek().tok.clone();
            match t {
                Tok::Plus | Tok::Minus => {
                    self.bump();
                    self.skip_newlines();
                    let rhs = self.term()?;
                    acc = if t == Tok::Plus {
                        &acc + &rhs
                    } else {
                        &acc - &rhs
                    };
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            self.skip_newlines();
            let rhs = self.factor()?;
            acc = &acc * &rhs;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let t = self.bump();
        match t.tok.clone() {
            Tok::Minus => Ok(-&self.factor()?),
            Tok::Plus => self.factor(),
            Tok::Int(n) => {
                let mut value = Rational::from_integer(n);
                if self.peek().tok == Tok::Slash {
                    self.bump();
                    let d = self.bump();
                    match d.tok.clone() {
                        Tok::Int(den) if den.is_zero() => {
                            return Err(self.error(&d, ParseErrorKind::ZeroDenominator))
                        }
                        Tok::Int(den) => value /= Rational::from_integer(den),
                        _ => return Err(self.unexpected(&d, "a positive integer denominator")),
                    }
                }
                Ok(Polynomial::constant(self.ctx, value))
            }
            Tok::Ident(name) => {
                let Some(i) = self.ctx.index_of(&name) else {
                    return Err(self.error(&t, ParseErrorKind::UnknownVariable(name)));
                };
                let e = self.exponent()?;
                let mut exps = vec![0; self.ctx.len()];
                exps[i] = e;
                Ok(Polynomial::monomial(
                    self.ctx,
                    Monomial::new(exps),
                    Rational::one(),
                ))
            }
            Tok::LParen => {
                self.depth += 1;
                let inner = self.expression()?;
                let close = self.bump();
                self.depth -= 1;
                if close.tok != Tok::RParen {
                    return Err(self.unexpected(&close, "`)`"));
                }
                let e = self.exponent()?;
                Ok(inner.pow(e))
            }
            _ => Err(self.unexpected(&t, "a number, variable or `(`")),
        }
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek().tok != Tok::Caret {
            return Ok(1);
        }
        self.bump();
        let t = self.bump();
        match &t.tok {
            Tok::Int(n) => match n.to_u32() {
                Some(e) if e > 0 => Ok(e),
                _ => Err(self.error(&t, ParseErrorKind::BadExponent(n.to_string()))),
            },
            Tok::Minus => {
                Err(self.error(&t, ParseErrorKind::BadExponent("a negative value".into())))
            }
            _ => Err(self.unexpected(&t, "a positive integer exponent")),
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        self.skip_newlines();
        let t = self.bump();
        if t.tok == Tok::Eof {
            Ok(())
        } else {
            Err(self.unexpected(&t, "an operator or end of input"))
        }
    }

    /// Separated list up to `close` (or end of input when `close` is Eof).
    fn list(&mut self, close: Tok) -> Result<Vec<Polynomial>, ParseError> {
        let mut out = Vec::new();
        self.skip_newlines();
        if self.toks[self.pos].tok == close {
            self.bump();
            return Ok(out);
        }
        loop {
            let p = self.expression().map_err(|mut e| {
                e.element.get_or_insert(out.len());
                e
            })?;
            out.push(p);
            let sep = self.toks[self.pos].clone();
            match sep.tok {
                Tok::Comma | Tok::Newline => {
                    self.bump_raw();
                    self.skip_newlines();
                    if self.toks[self.pos].tok == close {
                        self.bump_raw();
                        return Ok(out);
                    }
                }
                ref t if *t == close => {
                    self.bump_raw();
                    return Ok(out);
                }
                _ => {
                    let mut e = self.unexpected(&sep, "`,`, a newline or an operator");
                    e.element = Some(out.len() - 1);
                    return Err(e);
                }
            }
        }
    }

    fn bump_raw(&mut self) {
        if self.toks[self.pos].tok != Tok::Eof {
            self.pos += 1;
        }
    }
}

/// Parse a single polynomial over `ctx`.
pub fn parse_polynomial(src: &str, ctx: &Arc<RingContext>) -> Result<Polynomial, ParseError> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
        ctx,
        depth: 0,
    };
    p.skip_newlines();
    if p.toks[p.pos].tok == Tok::Eof {
        let t = p.toks[p.pos].clone();
        return Err(p.unexpected(&t, "a polynomial"));
    }
    let poly = p.expression()?;
    p.expect_end()?;
    Ok(poly)
}

/// Parse a comma- or newline-separated generator list, optionally wrapped
/// in `[...]` or `(...)`. The empty string is the empty list.
pub fn parse_ideal(src: &str, ctx: &Arc<RingContext>) -> Result<Vec<Polynomial>, ParseError> {
    let toks = tokenize(src)?;
    let first = toks.iter().position(|t| t.tok != Tok::Newline).unwrap();
    let wrapper = match toks[first].tok {
        Tok::LBracket => Some(Tok::RBracket),
        Tok::LParen => Some(Tok::RParen),
        _ => None,
    };
    if let Some(close) = wrapper {
        // "(x + 1)*y" also starts with a paren, so fall back on failure
        let mut p = Parser {
            toks: toks.clone(),
            pos: first + 1,
            ctx,
            depth: 1,
        };
        if let Ok(list) = p.list(close.clone()) {
            p.depth = 0;
            if p.expect_end().is_ok() {
                return Ok(list);
            }
        }
        if close == Tok::RBracket {
            let mut p = Parser {
                toks,
                pos: first + 1,
                ctx,
                depth: 1,
            };
            let list = p.list(close)?;
            p.depth = 0;
            p.expect_end()?;
            return Ok(list);
        }
    }
    let mut p = Parser {
        toks,
        pos: 0,
        ctx,
        depth: 0,
    };
    p.list(Tok::Eof)
}

/// Canonical text of `p`; `parse_polynomial(&serialize(p))` gives back `p`.
pub fn serialize(p: &Polynomial) -> String {
    p.to_string()
}

/// Expand a variable declaration such as `a1..a5,z` into names.
///
/// A range `stemN..stemM` expands to `stemN, ..., stemM`; ranges may also
/// run downwards.
pub fn expand_variables(decl: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    for item in decl.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((lo, hi)) = item.split_once("..") {
            let (stem_lo, n_lo) = split_numeric_suffix(lo.trim())
                .ok_or_else(|| format!("range endpoint `{lo}` has no numeric suffix"))?;
            let (stem_hi, n_hi) = split_numeric_suffix(hi.trim())
                .ok_or_else(|| format!("range endpoint `{hi}` has no numeric suffix"))?;
            if stem_lo != stem_hi {
                return Err(format!(
                    "range `{item}` mixes stems `{stem_lo}` and `{stem_hi}`"
                ));
            }
            if n_lo <= n_hi {
                out.extend((n_lo..=n_hi).map(|k| format!("{stem_lo}{k}")));
            } else {
                out.extend((n_hi..=n_lo).rev().map(|k| format!("{stem_lo}{k}")));
            }
        } else {
            out.push(item.to_string());
        }
    }
    Ok(out)
}

fn split_numeric_suffix(s: &str) -> Option<(&str, u64)> {
    let idx = s.find(|c: char| c.is_ascii_digit())?;
    let (stem, digits) = s.split_at(idx);
    if stem.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    Some((stem, digits.parse().ok()?))
}
