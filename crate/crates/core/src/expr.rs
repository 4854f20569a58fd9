//! Text form of polynomials.
//!
//! ```text
//! poly   := term (('+' | '-') term)*
//! term   := rational? ('*'? factor)*
//! factor := ident ('^' posint)?
//! ident  := x<i> | xi<i> | pi<i> | p<i> | xs<i>
//! ```
//!
//! Whitespace (including newlines) is insignificant. The printer on
//! [`SuperPolynomial`] emits this grammar, so `parse(print(f)) = f`.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::superalgebra::{Chart, CoordKind, Rational, SuperPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected {0}")]
    Unexpected(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("`{name}` is not a coordinate of {chart}")]
    NotInChart { name: String, chart: String },
    #[error("odd coordinate `{0}` squares to zero; powers above 1 are not allowed")]
    OddPower(String),
    #[error("division by zero")]
    ZeroDenominator,
    #[error("exponent must be a positive integer")]
    BadExponent,
}

#[derive(Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

struct Parser<'a> {
    chars: Vec<(Pos, char)>,
    at: usize,
    end: Pos,
    chart: &'a Chart,
}

pub fn parse_polynomial(text: &str, chart: &Chart) -> Result<SuperPolynomial, ParseError> {
    let mut chars = Vec::new();
    let mut pos = Pos { line: 1, column: 1 };
    for c in text.chars() {
        if c == '\n' {
            chars.push((pos, c));
            pos = Pos {
                line: pos.line + 1,
                column: 1,
            };
            continue;
        }
        chars.push((pos, c));
        pos.column += 1;
    }
    let mut p = Parser {
        chars,
        at: 0,
        end: pos,
        chart,
    };
    let out = p.poly()?;
    match p.peek() {
        None => Ok(out),
        Some((at, c)) => Err(p.error(at, ParseErrorKind::Unexpected(format!("`{c}`")))),
    }
}

impl Parser<'_> {
    /// Next significant character, skipping whitespace.
    fn peek(&mut self) -> Option<(Pos, char)> {
        while matches!(self.chars.get(self.at), Some((_, c)) if c.is_whitespace()) {
            self.at += 1;
        }
        self.chars.get(self.at).copied()
    }

    /// Next raw character, for scanning inside a token.
    fn raw(&self, test: impl Fn(char) -> bool) -> Option<char> {
        self.chars
            .get(self.at)
            .map(|&(_, c)| c)
            .filter(|&c| test(c))
    }

    fn here(&mut self) -> Pos {
        self.peek().map(|(p, _)| p).unwrap_or(self.end)
    }

    fn error(&self, at: Pos, kind: ParseErrorKind) -> ParseError {
        ParseError {
            line: at.line,
            column: at.column,
            kind,
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if matches!(self.peek(), Some((_, d)) if d == c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<SuperPolynomial, ParseError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?.signed(negative);
        loop {
            if self.eat('+') {
                acc += self.term()?;
            } else if self.eat('-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<SuperPolynomial, ParseError> {
        let start = self.here();
        let mut acc = match self.peek() {
            Some((_, c)) if c.is_ascii_digit() => SuperPolynomial::constant(self.rational()?),
            Some((_, c)) if c.is_ascii_alphabetic() => self.factor()?,
            Some((at, c)) => {
                return Err(self.error(at, ParseErrorKind::Unexpected(format!("`{c}`"))))
            }
            None => return Err(self.error(start, ParseErrorKind::UnexpectedEnd)),
        };
        loop {
            let star = self.eat('*');
            match self.peek() {
                Some((_, c)) if c.is_ascii_alphabetic() => acc = &acc * &self.factor()?,
                _ if star => {
                    let at = self.here();
                    let kind = match self.peek() {
                        Some((_, c)) => ParseErrorKind::Unexpected(format!("`{c}` after `*`")),
                        None => ParseErrorKind::UnexpectedEnd,
                    };
                    return Err(self.error(at, kind));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.peek();
        let mut s = String::new();
        while let Some(c) = self.raw(|c| c.is_ascii_digit()) {
            s.push(c);
            self.at += 1;
        }
        s.parse().ok()
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.digits().expect("called on a digit");
        if !self.eat('/') {
            return Ok(Rational::from_integer(numer));
        }
        let at = self.here();
        let denom = self.digits().ok_or_else(|| {
            self.error(at, ParseErrorKind::Unexpected("denominator missing".into()))
        })?;
        if denom.is_zero() {
            return Err(self.error(at, ParseErrorKind::ZeroDenominator));
        }
        Ok(Rational::new(numer, denom))
    }

    fn factor(&mut self) -> Result<SuperPolynomial, ParseError> {
        let start = self.here();
        let mut name = String::new();
        while let Some(c) = self.raw(|c| c.is_ascii_alphabetic()) {
            name.push(c);
            self.at += 1;
        }
        let split = name.len();
        while let Some(c) = self.raw(|c| c.is_ascii_digit()) {
            name.push(c);
            self.at += 1;
        }
        let (prefix, index) = name.split_at(split);
        let kind = match prefix {
            "x" => CoordKind::Base,
            "xi" => CoordKind::FiberOdd1,
            "pi" => CoordKind::FiberOdd2,
            "p" => CoordKind::Momentum,
            "xs" => CoordKind::AntiMomentum,
            _ => return Err(self.error(start, ParseErrorKind::UnknownIdentifier(name))),
        };
        let index: u16 = match index.parse() {
            Ok(i) if i >= 1 => i,
            _ => return Err(self.error(start, ParseErrorKind::UnknownIdentifier(name))),
        };
        let coordinate = self.chart.coordinate(kind, index).ok_or_else(|| {
            self.error(
                start,
                ParseErrorKind::NotInChart {
                    name: name.clone(),
                    chart: self.chart.to_string(),
                },
            )
        })?;
        let mut exponent = 1u32;
        if self.eat('^') {
            let at = self.here();
            exponent = self
                .digits()
                .and_then(|e| u32::try_from(e).ok())
                .filter(|&e| e >= 1)
                .ok_or_else(|| self.error(at, ParseErrorKind::BadExponent))?;
        }
        if exponent > 1 && coordinate.is_odd() {
            return Err(self.error(start, ParseErrorKind::OddPower(name)));
        }
        let var = SuperPolynomial::var(coordinate);
        Ok((1..exponent).fold(var.clone(), |acc, _| &acc * &var))
    }
}

/// Parses a rational such as `3/2` or `-4`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let value = match body.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Rational::new(n.parse().ok()?, d)
        }
        None => Rational::from_integer(body.parse().ok()?),
    };
    Some(if negative { -value } else { value })
}
