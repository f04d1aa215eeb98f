//! Expression grammar for component strings.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Rational literals are written `p/q` and parse as a division. There are no
//! functions and no floating-point literals.

use num_bigint::BigInt;

use super::poly::{Rational, VarSet};
use super::ratfunc::RationalFunction;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Op(char),
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            if i < bytes.len() && (bytes[i] == b'.' || bytes[i] == b'e' || bytes[i] == b'E') {
                return Err(err(i, "floating-point literals are not allowed"));
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push((start, Token::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Token::Ident(src[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Token::Op(c)));
            i += 1;
        } else {
            return Err(err(i, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    vars: &'a VarSet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat_op(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            if self.eat_op('+') {
                acc = &acc + &self.term()?;
            } else if self.eat_op('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            if self.eat_op('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat_op('/') {
                let at = self.offset();
                let rhs = self.unary()?;
                acc = acc.try_div(&rhs).map_err(|_| err(at, "division by zero"))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        if self.eat_op('-') {
            Ok(-&self.unary()?)
        } else if self.eat_op('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.eat_op('^') {
            let at = self.offset();
            match self.tokens.get(self.pos).cloned() {
                Some((_, Token::Int(n))) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| err(at, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(at, "exponent must be a non-negative integer literal")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        let at = self.offset();
        match self.tokens.get(self.pos).cloned() {
            Some((_, Token::Int(n))) => {
                self.pos += 1;
                Ok(RationalFunction::constant(
                    self.vars,
                    Rational::from_integer(n),
                ))
            }
            Some((_, Token::Ident(name))) => {
                self.pos += 1;
                if self.peek() == Some(&Token::Op('(')) {
                    return Err(err(
                        at,
                        format!("function call `{name}(...)` is not allowed"),
                    ));
                }
                let idx = self
                    .vars
                    .index_of(&name)
                    .ok_or_else(|| err(at, format!("unknown coordinate `{name}`")))?;
                Ok(RationalFunction::var(self.vars, idx))
            }
            Some((_, Token::Op('('))) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat_op(')') {
                    return Err(err(self.offset(), "expected `)`"));
                }
                Ok(inner)
            }
            Some((_, tok)) => Err(err(at, format!("unexpected token {tok:?}"))),
            None => Err(err(at, "unexpected end of expression")),
        }
    }
}

/// Parses an expression over the given coordinates.
pub fn parse_expression(src: &str, vars: &VarSet) -> Result<RationalFunction> {
    let tokens = tokenize(src)?;
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: src.len(),
        vars,
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(err(parser.offset(), "trailing input"));
    }
    Ok(value)
}

/// Parses a constant such as `3`, `-1/2` or `(2 - 5)/4`.
pub fn parse_rational(src: &str) -> Result<Rational> {
    let empty = VarSet::new(Vec::<String>::new())?;
    let f = parse_expression(src, &empty)?;
    Ok(f.constant_value().expect("no variables, so constant"))
}
