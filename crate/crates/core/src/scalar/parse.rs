//! Text grammar for scalars.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' integer)?
//! atom   := integer | symbol | '(' expr ')'
//! ```
//! Whitespace is ignored. Exponents are non-negative integers.

use num_bigint::BigInt;

use super::field::Scalar;
use super::symbols::SymbolTable;
use super::Rational;
use crate::error::{Error, Result};

/// Parses a scalar expression.
pub fn parse(text: &str) -> Result<Scalar> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let value = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!(
            "unexpected trailing input in `{text}`"
        )));
    }
    Ok(value)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Int(s.parse().unwrap()));
        } else if c.is_ascii_lowercase() {
            let start = i;
            while i < chars.len()
                && (chars[i].is_ascii_lowercase() || chars[i].is_ascii_digit() || chars[i] == '_')
            {
                i += 1;
            }
            out.push(Tok::Sym(chars[start..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' {
                &acc * &rhs
            } else {
                acc.checked_div(&rhs)?
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Scalar> {
        match self.peek_op() {
            Some('-') => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            let e = match self.tokens.get(self.pos) {
                Some(Tok::Int(n)) => u32::try_from(n.clone())
                    .map_err(|_| Error::Parse("exponent too large".into()))?,
                _ => {
                    return Err(Error::Parse(
                        "expected a non-negative integer exponent".into(),
                    ))
                }
            };
            self.pos += 1;
            return Ok(base.powu(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Scalar> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of input".into()))?;
        self.pos += 1;
        match tok {
            Tok::Int(n) => Ok(Scalar::from_rational(Rational::from_integer(n))),
            Tok::Sym(name) => Ok(Scalar::var(SymbolTable::symbol(&name)?)),
            Tok::Op('(') => {
                let v = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Tok::Op(c) => Err(Error::Parse(format!("unexpected `{c}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_rationals() {
        assert_eq!(parse("1 + 2*3").unwrap(), Scalar::from_int(7));
        assert_eq!(parse("-2^2").unwrap(), Scalar::from_int(-4));
        assert_eq!(parse("3/4").unwrap(), Scalar::ratio(3, 4));
        assert_eq!(parse("(q+1)*(q-1)").unwrap(), parse("q^2 - 1").unwrap());
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("q^-1"), Err(Error::Parse(_))));
        assert!(matches!(parse("(q"), Err(Error::Parse(_))));
        assert!(matches!(parse("q $ 1"), Err(Error::Parse(_))));
        assert_eq!(parse("1/(q-q)"), Err(Error::DivisionByZero));
    }

    #[test]
    fn roundtrip_display() {
        for text in ["q^2 + mu1 - 3", "(q^2 - 1)/q", "h/2", "mu1*nu2 - 1/3"] {
            let x = parse(text).unwrap();
            assert_eq!(parse(&x.to_string()).unwrap(), x);
        }
    }
}
