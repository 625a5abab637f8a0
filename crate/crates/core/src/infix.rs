//! A small infix reader for polynomials such as `z1^2*z2 - 3/2*z1 + 1`.
//!
//! Grammar: sums and differences of products; factors are numbers, variable
//! names, parenthesized expressions, or a factor raised to `^k`. Division is
//! allowed only by a nonzero integer literal.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::SparsePolynomial;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Token)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
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
            let text: String = chars[start..i].iter().collect();
            out.push((start, Token::Num(text.parse().expect("digits"))));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Token::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Token::Op(c)));
            i += 1;
        } else {
            return Err(Error::Parse(format!(
                "unexpected character {c:?} at column {}",
                i + 1
            )));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or_else(|| self.tokens.last().map_or(1, |t| t.0 + 2), |t| t.0 + 1)
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at column {}", self.column()))
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Token::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<SparsePolynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SparsePolynomial> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                match self.peek().cloned() {
                    Some(Token::Num(n)) if !n.is_zero() => {
                        self.pos += 1;
                        acc = acc.scale(&Rational::new(1.into(), n));
                    }
                    _ => return Err(self.error("division only by a nonzero integer literal")),
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<SparsePolynomial> {
        if self.eat('-') {
            Ok(-&self.unary()?)
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<SparsePolynomial> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.peek().cloned() {
            Some(Token::Num(k)) => {
                self.pos += 1;
                let k: u32 = k.try_into().map_err(|_| self.error("exponent too large"))?;
                Ok(base.pow(k))
            }
            _ => Err(self.error("expected a nonnegative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<SparsePolynomial> {
        let dim = self.names.len();
        match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                Ok(SparsePolynomial::constant(dim, Rational::from_integer(n)))
            }
            Some(Token::Ident(name)) => {
                let i = self
                    .names
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| self.error(&format!("unknown variable {name:?}")))?;
                self.pos += 1;
                Ok(SparsePolynomial::var(dim, i))
            }
            Some(Token::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(_) => Err(self.error("unexpected token")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses `s` as a polynomial in the variables `names` (in order).
pub fn parse_polynomial(s: &str, names: &[String]) -> Result<SparsePolynomial> {
    let mut p = Parser {
        tokens: tokenize(s)?,
        pos: 0,
        names,
    };
    if p.tokens.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.error("trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn names() -> Vec<String> {
        vec!["z1".into(), "z2".into()]
    }

    fn parse(s: &str) -> SparsePolynomial {
        parse_polynomial(s, &names()).unwrap()
    }

    #[test]
    fn basic() {
        let p = parse("z1^2*z2 - 3/2*z1 + 1");
        assert_eq!(p.coeff(&[2, 1]), ratio(1, 1));
        assert_eq!(p.coeff(&[1, 0]), ratio(-3, 2));
        assert_eq!(p.coeff(&[0, 0]), ratio(1, 1));
        assert_eq!(p.num_terms(), 3);
        assert_eq!(parse("(z1 - z2)^2"), parse("z1^2 - 2*z1*z2 + z2^2"));
        assert_eq!(parse("-(z1)"), -&SparsePolynomial::var(2, 0));
        assert_eq!(parse("z1 - z1"), SparsePolynomial::zero(2));
        assert_eq!(parse("0"), SparsePolynomial::zero(2));
    }

    #[test]
    fn display_round_trip() {
        for s in ["z1^2*z2 - 3/2*z1 + 1", "z1*z2 - 1", "-z2^3 + 7/5"] {
            let p = parse(s);
            assert_eq!(parse(&p.display_with(&names())), p);
        }
    }

    #[test]
    fn errors() {
        for bad in [
            "", "z3", "z1 +", "(z1", "z1 ^ z2", "z1 / 0", "z1 / z2", "z1 $ 2", "z1 z2",
        ] {
            assert!(
                matches!(parse_polynomial(bad, &names()), Err(Error::Parse(_))),
                "{bad}"
            );
        }
        let msg = parse_polynomial("z1 + w", &names())
            .unwrap_err()
            .to_string();
        assert!(msg.contains("column 6"), "{msg}");
    }
}
