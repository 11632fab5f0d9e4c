//! Polynomial expressions such as `3/2*x(1)^2 - u(1,3)*(x(2) + 1)`.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary ("*" unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" INT)?
//! atom   := INT ("/" INT)? | "x(" INT ")" | "y(" INT ")" | "u(" INT "," INT ")"
//!         | "(" expr ")"
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exact_poly::{ExactRational, XYPolynomial};
use crate::xu_presentation::UPolynomial;

/// Which variables an expression may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ring {
    /// `x(i)`, `y(i)`.
    XY,
    /// `x(i)`, `u(i,j)`.
    XU,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expression {
    Literal(ExactRational),
    X(usize),
    Y(usize),
    /// Always stored with `i < j`; `u(j,i)` parses as `Neg(U(i,j))`.
    U(usize, usize),
    Neg(Box<Expression>),
    Add(Box<Expression>, Box<Expression>),
    Sub(Box<Expression>, Box<Expression>),
    Mul(Box<Expression>, Box<Expression>),
    Pow(Box<Expression>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("expected {expected}, found {found}")]
    Expected { expected: String, found: String },
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("variable y is not allowed in the x/u ring")]
    YInXuRing,
    #[error("variable u is not allowed in the x/y ring")]
    UInXyRing,
    #[error("u({0},{0}) is malformed: indices must differ")]
    DiagonalU(usize),
    #[error("negative exponent")]
    NegativeExponent,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("number too large")]
    Overflow,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(char),
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(v) => format!("number {v}"),
            Tok::Ident(c) => format!("'{c}'"),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Comma => "','".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Slash => "'/'".into(),
        }
    }
}

struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<(Vec<Token>, (usize, usize)), ParseError> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&ch) = chars.peek() {
        let (l, c) = (line, column);
        let tok = match ch {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
                continue;
            }
            c if c.is_whitespace() => {
                chars.next();
                column += 1;
                continue;
            }
            '0'..='9' => {
                let mut digits = String::new();
                while let Some(&d) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    digits.push(d);
                    chars.next();
                    column += 1;
                }
                out.push(Token {
                    tok: Tok::Int(digits.parse().expect("ascii digits")),
                    line: l,
                    column: c,
                });
                continue;
            }
            'x' | 'y' | 'u' => Tok::Ident(ch),
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            other => {
                return Err(ParseError {
                    line: l,
                    column: c,
                    kind: ParseErrorKind::UnexpectedChar(other),
                })
            }
        };
        chars.next();
        column += 1;
        out.push(Token {
            tok,
            line: l,
            column: c,
        });
    }
    Ok((out, (line, column)))
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: (usize, usize),
    n: usize,
    ring: Ring,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|t| (t.line, t.column))
            .unwrap_or(self.end)
    }

    fn error_at(&self, (line, column): (usize, usize), kind: ParseErrorKind) -> ParseError {
        ParseError { line, column, kind }
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        self.error_at(self.here(), kind)
    }

    fn expected(&self, what: &str) -> ParseError {
        match self.peek() {
            None => self.error(ParseErrorKind::UnexpectedEnd),
            Some(t) => self.error(ParseErrorKind::Expected {
                expected: what.into(),
                found: t.describe(),
            }),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.expected(what))
        }
    }

    fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.expected("a number")),
        }
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let at = self.here();
        let v = self.int()?;
        let idx: usize = v
            .try_into()
            .map_err(|_| self.error_at(at, ParseErrorKind::Overflow))?;
        if idx == 0 || idx > self.n {
            return Err(self.error_at(
                at,
                ParseErrorKind::IndexOutOfRange {
                    index: idx,
                    n: self.n,
                },
            ));
        }
        Ok(idx)
    }

    fn expr(&mut self) -> Result<Expression, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expression::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expression::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expression, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::Star) {
            lhs = Expression::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expression, ParseError> {
        if self.eat(&Tok::Minus) {
            return Ok(Expression::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expression, ParseError> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        if self.peek() == Some(&Tok::Minus) {
            return Err(self.error(ParseErrorKind::NegativeExponent));
        }
        let at = self.here();
        let e: u32 = self
            .int()?
            .try_into()
            .map_err(|_| self.error_at(at, ParseErrorKind::Overflow))?;
        Ok(Expression::Pow(Box::new(base), e))
    }

    fn atom(&mut self) -> Result<Expression, ParseError> {
        let at = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.pos += 1;
                let mut den = BigInt::one();
                if self.eat(&Tok::Slash) {
                    let at = self.here();
                    den = self.int()?;
                    if den.is_zero() {
                        return Err(self.error_at(at, ParseErrorKind::ZeroDenominator));
                    }
                }
                Ok(Expression::Literal(ExactRational::new(num, den)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match (name, self.ring) {
                    ('y', Ring::XU) => return Err(self.error_at(at, ParseErrorKind::YInXuRing)),
                    ('u', Ring::XY) => return Err(self.error_at(at, ParseErrorKind::UInXyRing)),
                    _ => {}
                }
                self.expect(Tok::LParen, "'('")?;
                let i = self.index()?;
                let e = if name == 'u' {
                    self.expect(Tok::Comma, "','")?;
                    let j = self.index()?;
                    match i.cmp(&j) {
                        std::cmp::Ordering::Less => Expression::U(i, j),
                        std::cmp::Ordering::Greater => {
                            Expression::Neg(Box::new(Expression::U(j, i)))
                        }
                        std::cmp::Ordering::Equal => {
                            return Err(self.error_at(at, ParseErrorKind::DiagonalU(i)))
                        }
                    }
                } else if name == 'x' {
                    Expression::X(i)
                } else {
                    Expression::Y(i)
                };
                self.expect(Tok::RParen, "')'")?;
                Ok(e)
            }
            _ => Err(self.expected("a number, variable or '('")),
        }
    }
}

/// Parses `text` as an expression over `n` variable pairs in `ring`.
pub fn parse(text: &str, n: usize, ring: Ring) -> Result<Expression, ParseError> {
    let (tokens, end) = lex(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end,
        n,
        ring,
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(p.expected("an operator or end of input"));
    }
    Ok(e)
}

impl Expression {
    /// Value in `K[X,Y]`. Expressions containing `u` are expanded via
    /// `u_ij = x_i y_j - x_j y_i`.
    pub fn eval_xy(&self, n: usize) -> XYPolynomial {
        match self {
            Expression::Literal(c) => XYPolynomial::constant(n, c.clone()),
            Expression::X(i) => XYPolynomial::x(n, *i),
            Expression::Y(i) => XYPolynomial::y(n, *i),
            Expression::U(i, j) => XYPolynomial::determinant(n, *i, *j),
            Expression::Neg(a) => -&a.eval_xy(n),
            Expression::Add(a, b) => &a.eval_xy(n) + &b.eval_xy(n),
            Expression::Sub(a, b) => &a.eval_xy(n) - &b.eval_xy(n),
            Expression::Mul(a, b) => &a.eval_xy(n) * &b.eval_xy(n),
            Expression::Pow(a, e) => a.eval_xy(n).pow(*e),
        }
    }

    /// Value in `K[X,U]`.
    ///
    /// # Panics
    /// On `y` variables, which [`parse`] rejects for [`Ring::XU`].
    pub fn eval_xu(&self, n: usize) -> UPolynomial {
        match self {
            Expression::Literal(c) => UPolynomial::one(n).scale(c),
            Expression::X(i) => UPolynomial::x(n, *i),
            Expression::Y(_) => panic!("y variable in an x/u expression"),
            Expression::U(i, j) => UPolynomial::u(n, *i, *j),
            Expression::Neg(a) => -&a.eval_xu(n),
            Expression::Add(a, b) => &a.eval_xu(n) + &b.eval_xu(n),
            Expression::Sub(a, b) => &a.eval_xu(n) - &b.eval_xu(n),
            Expression::Mul(a, b) => &a.eval_xu(n) * &b.eval_xu(n),
            Expression::Pow(a, e) => a.eval_xu(n).pow(*e),
        }
    }
}

pub fn parse_xy(text: &str, n: usize) -> Result<XYPolynomial, ParseError> {
    parse(text, n, Ring::XY).map(|e| e.eval_xy(n))
}

pub fn parse_xu(text: &str, n: usize) -> Result<UPolynomial, ParseError> {
    parse(text, n, Ring::XU).map(|e| e.eval_xu(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_expression() {
        let f = parse_xy("x(1)*y(2) - x(2)*y(1)", 2).unwrap();
        assert_eq!(f, XYPolynomial::determinant(2, 1, 2));
    }

    #[test]
    fn reversed_u_flips_sign() {
        assert_eq!(parse_xu("u(2,1)", 2).unwrap(), -&UPolynomial::u(2, 1, 2));
    }

    #[test]
    fn index_out_of_range() {
        let err = parse_xy("y(3)", 2).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::IndexOutOfRange { index: 3, n: 2 });
        assert_eq!((err.line, err.column), (1, 3));
    }

    #[test]
    fn ring_restrictions() {
        assert_eq!(
            parse_xu("y(1)", 2).unwrap_err().kind,
            ParseErrorKind::YInXuRing
        );
        assert_eq!(
            parse_xy("u(1,2)", 2).unwrap_err().kind,
            ParseErrorKind::UInXyRing
        );
        assert_eq!(
            parse_xu("u(2,2)", 2).unwrap_err().kind,
            ParseErrorKind::DiagonalU(2)
        );
        assert_eq!(
            parse_xy("x(1)^-1", 2).unwrap_err().kind,
            ParseErrorKind::NegativeExponent
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_xy("x(1) +\n  * y(1)", 2).unwrap_err();
        assert_eq!((err.line, err.column), (2, 3));
        assert_eq!(
            parse_xy("x(1", 2).unwrap_err().kind,
            ParseErrorKind::UnexpectedEnd
        );
        assert!(matches!(
            parse_xy("x(1) y(1)", 2).unwrap_err().kind,
            ParseErrorKind::Expected { .. }
        ));
        assert_eq!(
            parse_xy("1/0", 2).unwrap_err().kind,
            ParseErrorKind::ZeroDenominator
        );
        assert_eq!(
            parse_xy("x[1]", 2).unwrap_err().kind,
            ParseErrorKind::UnexpectedChar('[')
        );
    }

    #[test]
    fn precedence() {
        let f = parse_xy("-x(1)^2 + 3/2*(y(1) - 1)", 1).unwrap();
        let expected = &(&XYPolynomial::y(1, 1) - &XYPolynomial::one(1))
            .scale(&ExactRational::new(3.into(), 2.into()))
            - &XYPolynomial::x(1, 1).pow(2);
        assert_eq!(f, expected);
    }
}
