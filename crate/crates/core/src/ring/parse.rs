//! Recursive-descent parser for the polynomial notation used in fixtures and
//! reports:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | identifier | '(' expr ')'
//! ```
//!
//! Whitespace is ignored between tokens. Juxtaposition is not multiplication.

use std::sync::Arc;

use num_bigint::BigInt;
use thiserror::Error;

use super::poly::IntPolynomial;
use super::vars::VarSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        if start >= bytes.len() {
            return Ok((start, Tok::End));
        }
        let b = bytes[start];
        if b.is_ascii_digit() {
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let n: BigInt = self.src[start..self.pos].parse().expect("digits");
            return Ok((start, Tok::Int(n)));
        }
        if b.is_ascii_alphabetic() || b == b'_' {
            while self.pos < bytes.len()
                && (bytes[self.pos].is_ascii_alphanumeric() || bytes[self.pos] == b'_')
            {
                self.pos += 1;
            }
            return Ok((start, Tok::Ident(self.src[start..self.pos].to_string())));
        }
        if matches!(b, b'+' | b'-' | b'*' | b'^' | b'(' | b')') {
            self.pos += 1;
            return Ok((start, Tok::Sym(b as char)));
        }
        let ch = self.src[start..].chars().next().unwrap_or('?');
        Err(ParseError {
            position: start,
            message: format!("unexpected character `{ch}`"),
        })
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    vars: &'a Arc<VarSet>,
    peeked: (usize, Tok),
}

impl<'a> Parser<'a> {
    fn bump(&mut self) -> Result<(usize, Tok), ParseError> {
        let next = self.lexer.next()?;
        Ok(std::mem::replace(&mut self.peeked, next))
    }

    fn err<T>(&self, position: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position,
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<IntPolynomial, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peeked.1 {
                Tok::Sym('+') => {
                    self.bump()?;
                    acc = &acc + &self.term()?;
                }
                Tok::Sym('-') => {
                    self.bump()?;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<IntPolynomial, ParseError> {
        let mut acc = self.unary()?;
        while self.peeked.1 == Tok::Sym('*') {
            self.bump()?;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<IntPolynomial, ParseError> {
        if self.peeked.1 == Tok::Sym('-') {
            self.bump()?;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<IntPolynomial, ParseError> {
        let base = self.atom()?;
        if self.peeked.1 != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump()?;
        match self.bump()? {
            (pos, Tok::Int(n)) => match u32::try_from(&n) {
                Ok(e) if e <= 1000 => Ok(base.pow(e)),
                _ => self.err(pos, "exponent too large"),
            },
            (pos, _) => self.err(pos, "expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<IntPolynomial, ParseError> {
        match self.bump()? {
            (_, Tok::Int(n)) => Ok(IntPolynomial::constant(self.vars, n)),
            (pos, Tok::Ident(name)) => match self.vars.index_of(&name) {
                Some(i) => Ok(IntPolynomial::var_at(self.vars, i)),
                None => self.err(pos, format!("unknown variable `{name}`")),
            },
            (_, Tok::Sym('(')) => {
                let inner = self.expr()?;
                match self.bump()? {
                    (_, Tok::Sym(')')) => Ok(inner),
                    (pos, _) => self.err(pos, "expected `)`"),
                }
            }
            (pos, Tok::End) => self.err(pos, "unexpected end of input"),
            (pos, Tok::Sym(c)) => self.err(pos, format!("unexpected `{c}`")),
        }
    }
}

pub fn parse_polynomial(vars: &Arc<VarSet>, src: &str) -> Result<IntPolynomial, ParseError> {
    let mut lexer = Lexer { src, pos: 0 };
    let first = lexer.next()?;
    let mut p = Parser {
        lexer,
        vars,
        peeked: first,
    };
    let out = p.expr()?;
    match &p.peeked {
        (_, Tok::End) => Ok(out),
        (pos, _) => p.err(*pos, "trailing input"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs() -> Arc<VarSet> {
        VarSet::new([("lambda1", 1), ("lambda2", 2), ("t", 1)]).unwrap()
    }

    #[test]
    fn precedence_and_unary_minus() {
        let v = vs();
        let a = parse_polynomial(&v, "-t^2 + 2*lambda1*t").unwrap();
        let b = parse_polynomial(&v, "(-1)*(t*t) + (lambda1 + lambda1)*t").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_polynomial(&v, " 3 - 5 ").unwrap().to_string(), "-2");
    }

    #[test]
    fn round_trips_display() {
        let v = vs();
        let p = parse_polynomial(&v, "(t - 2*lambda1)^3 - 44*lambda2*t").unwrap();
        assert_eq!(parse_polynomial(&v, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn reports_positions() {
        let v = vs();
        let e = parse_polynomial(&v, "t + gamma").unwrap_err();
        assert_eq!(e.position, 4);
        let e = parse_polynomial(&v, "t + (lambda1").unwrap_err();
        assert_eq!(e.position, 12);
        let e = parse_polynomial(&v, "t $").unwrap_err();
        assert_eq!(e.position, 2);
        let e = parse_polynomial(&v, "t t").unwrap_err();
        assert_eq!(e.message, "trailing input");
        assert!(parse_polynomial(&v, "t^-1").is_err());
    }
}
