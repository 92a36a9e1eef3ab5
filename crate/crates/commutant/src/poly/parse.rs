//! Recursive descent parser for polynomial expressions.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr    := term { ('+' | '-') term }
//! term    := factor { ['*'] factor }        -- juxtaposition multiplies
//! factor  := '-' factor | base [ '^' uint ]
//! base    := uint | ident | '(' expr ')'
//! ```
//!
//! `^` binds tighter than `*`, which binds tighter than `+`/`-`; unary
//! minus is allowed. A `*` between a coefficient and a variable is
//! optional, so `3x^2` and `2(x+y)` parse. Identifiers are lexed greedily:
//! with variables `x, y, z` the input `xyz` is a single unknown identifier,
//! so products of variables must be written `x*y*z` (or spaced `x y z`).
//! Errors report the 1-based byte position of the offending token.

use num::bigint::BigInt;
use thiserror::Error;

use crate::field::FieldSpec;
use crate::poly::{Polynomial, Vars};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
}

impl ParseError {
    pub fn position(&self) -> usize {
        match self {
            ParseError::Syntax { pos, .. } => *pos,
            ParseError::UnknownVariable { pos, .. } => *pos,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

struct Lexer {
    toks: Vec<(Tok, usize)>, // token with 1-based byte position
    end: usize,
}

fn lex(text: &str) -> Result<Lexer, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i + 1;
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
            }
            '+' => {
                toks.push((Tok::Plus, pos));
                i += 1;
            }
            '-' => {
                toks.push((Tok::Minus, pos));
                i += 1;
            }
            '*' => {
                toks.push((Tok::Star, pos));
                i += 1;
            }
            '^' => {
                toks.push((Tok::Caret, pos));
                i += 1;
            }
            '(' => {
                toks.push((Tok::LParen, pos));
                i += 1;
            }
            ')' => {
                toks.push((Tok::RParen, pos));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                toks.push((Tok::Int(text[start..i].to_string()), pos));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((Tok::Ident(text[start..i].to_string()), pos));
            }
            other => {
                return Err(ParseError::Syntax { pos, msg: format!("unexpected character `{}`", other) });
            }
        }
    }
    Ok(Lexer { toks, end: bytes.len() + 1 })
}

struct Parser<'a> {
    toks: &'a [(Tok, usize)],
    end: usize,
    idx: usize,
    vars: &'a Vars,
    field: FieldSpec,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(_, p)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(t, _)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                // juxtaposition: a factor can start right after another
                Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let exp_pos = self.pos();
            match self.bump() {
                Some(Tok::Int(digits)) => {
                    let e: u32 = digits.parse().map_err(|_| ParseError::Syntax {
                        pos: exp_pos,
                        msg: format!("exponent `{}` out of range", digits),
                    })?;
                    return Ok(base.pow(e));
                }
                _ => {
                    return Err(ParseError::Syntax {
                        pos: exp_pos,
                        msg: "expected a non-negative integer exponent after `^`".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(digits)) => {
                let v: BigInt = digits.parse().expect("digit string");
                Ok(Polynomial::constant(self.vars.len(), self.field.from_bigint(&v)))
            }
            Some(Tok::Ident(name)) => match self.vars.index_of(&name) {
                Some(i) => Ok(Polynomial::variable(self.vars.len(), self.field, i)),
                None => Err(ParseError::UnknownVariable { name, pos }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::Syntax { pos: self.prev_pos(), msg: "expected `)`".into() }),
                }
            }
            Some(tok) => Err(ParseError::Syntax { pos, msg: format!("unexpected token {:?}", tok) }),
            None => Err(ParseError::Syntax { pos, msg: "unexpected end of input".into() }),
        }
    }

    fn prev_pos(&self) -> usize {
        if self.idx == 0 {
            1
        } else {
            self.toks.get(self.idx - 1).map(|(_, p)| *p).unwrap_or(self.end)
        }
    }
}

/// Parses `text` into an exact polynomial in the given variables.
pub fn parse_polynomial(text: &str, vars: &Vars, field: FieldSpec) -> Result<Polynomial, ParseError> {
    let lexer = lex(text)?;
    let mut p = Parser { toks: &lexer.toks, end: lexer.end, idx: 0, vars, field };
    if p.peek().is_none() {
        return p.syntax("empty input");
    }
    let poly = p.expr()?;
    if p.peek().is_some() {
        return p.syntax("trailing input after expression");
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;

    fn q() -> FieldSpec {
        FieldSpec::rationals()
    }

    fn xyz() -> Vars {
        Vars::from_strs(&["x", "y", "z"])
    }

    #[test]
    fn sum_of_squares() {
        let p = parse_polynomial("x^2 + y^2 + z^2", &xyz(), q()).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.homogeneous_degree(), Some(2));
        assert_eq!(p.coefficient(&Monomial::new(vec![2, 0, 0])), q().from_i64(1));
    }

    #[test]
    fn zero_literal() {
        let p = parse_polynomial("0", &xyz(), q()).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn negated_square_expands() {
        let p = parse_polynomial("-(x - y)^2", &xyz(), q()).unwrap();
        // -x^2 + 2xy - y^2, cross-checked by direct arithmetic
        let x = Polynomial::variable(3, q(), 0);
        let y = Polynomial::variable(3, q(), 1);
        let expect = x.sub(&y).mul(&x.sub(&y)).neg();
        assert_eq!(p, expect);
        assert_eq!(p.coefficient(&Monomial::new(vec![1, 1, 0])), q().from_i64(2));
    }

    #[test]
    fn implicit_multiplication() {
        let p = parse_polynomial("3x^2y", &xyz(), q()).unwrap();
        assert_eq!(p.coefficient(&Monomial::new(vec![2, 1, 0])), q().from_i64(3));
        let p2 = parse_polynomial("2(x + y)", &xyz(), q()).unwrap();
        assert_eq!(p2, parse_polynomial("2*x + 2*y", &xyz(), q()).unwrap());
        let p3 = parse_polynomial("x*y*z", &xyz(), q()).unwrap();
        assert_eq!(p3.coefficient(&Monomial::new(vec![1, 1, 1])), q().from_i64(1));
    }

    #[test]
    fn caret_caret_reports_position() {
        let err = parse_polynomial("x^^2", &xyz(), q()).unwrap_err();
        assert_eq!(err, ParseError::Syntax { pos: 3, msg: "expected a non-negative integer exponent after `^`".into() });
    }

    #[test]
    fn unknown_variable_named() {
        let err = parse_polynomial("x + w^2", &xyz(), q()).unwrap_err();
        assert_eq!(err, ParseError::UnknownVariable { name: "w".into(), pos: 5 });
        // greedy identifier lexing: xyz is one unknown name
        let err = parse_polynomial("xyz", &xyz(), q()).unwrap_err();
        assert!(matches!(err, ParseError::UnknownVariable { ref name, pos: 1 } if name == "xyz"));
    }

    #[test]
    fn unbalanced_parens() {
        assert!(matches!(parse_polynomial("(x + y", &xyz(), q()), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_polynomial("x + ", &xyz(), q()), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn unary_minus_precedence() {
        // -x^2 is -(x^2)
        let p = parse_polynomial("-x^2", &xyz(), q()).unwrap();
        assert_eq!(p.coefficient(&Monomial::new(vec![2, 0, 0])), q().from_i64(-1));
    }

    #[test]
    fn prime_field_coefficients() {
        let f = FieldSpec::prime(5).unwrap();
        let p = parse_polynomial("7x + 3x", &xyz(), f).unwrap();
        // 10 = 0 mod 5
        assert!(p.is_zero());
    }
}
