//! Class expressions such as `P^1 * P^1 - A^2` and their evaluation in `Z[L]`.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' uint)?
//! atom   := uint | 'L' | 'pt' | 'A' '^' uint | 'P' '^' uint | '(' expr ')'
//! ```
//!
//! `^` binds tighter than unary minus, which binds tighter than `*`, so
//! `-L^2` is `-(L^2)` and `-2*L` is `(-2)*L`. `A^n` and `P^n` are single
//! atoms; `^` does not chain. Exponents are decimal integers no larger than
//! [`MAX_EXPONENT`].

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::poly::LefschetzPoly;

pub const MAX_EXPONENT: u32 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symbol {
    /// `L = [A^1]`.
    Lefschetz,
    /// `pt = [Spec k] = 1`.
    Point,
    /// `A^n`.
    Affine(u32),
    /// `P^n`.
    Projective(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ClassExpr {
    Int(BigInt),
    Symbol(Symbol),
    Neg(Box<ClassExpr>),
    Add(Box<ClassExpr>, Box<ClassExpr>),
    Sub(Box<ClassExpr>, Box<ClassExpr>),
    Mul(Box<ClassExpr>, Box<ClassExpr>),
    Pow(Box<ClassExpr>, u32),
}

/// Parse failures. Offsets are 1-based byte positions into the input.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty expression")]
    Empty,
    #[error("unexpected {found} at byte {offset}, expected {expected}")]
    UnexpectedToken {
        offset: usize,
        found: String,
        expected: &'static str,
    },
    #[error("unbalanced parenthesis at byte {offset}")]
    UnbalancedParen { offset: usize },
    #[error("invalid exponent {found} at byte {offset}: expected an integer in 0..={max}", max = MAX_EXPONENT)]
    InvalidExponent { offset: usize, found: String },
}

impl ParseError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            Self::Empty => None,
            Self::UnexpectedToken { offset, .. }
            | Self::UnbalancedParen { offset }
            | Self::InvalidExponent { offset, .. } => Some(*offset),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    /// Digits, possibly with a fractional part (only ever an error).
    Number(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Unknown(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Number(s) => write!(f, "number '{s}'"),
            Tok::Ident(s) => write!(f, "symbol '{s}'"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::Unknown(c) => write!(f, "character {c:?}"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

/// Tokens paired with their 0-based byte offsets; always ends with `End`.
fn lex(input: &str) -> Vec<(usize, Tok)> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some((pos, c)) = chars.next() {
        let tok = match c {
            c if c.is_whitespace() => continue,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let mut end = pos + 1;
                while let Some(&(i, d)) = chars.peek() {
                    if d.is_ascii_digit() || d == '.' {
                        end = i + 1;
                        chars.next();
                    } else {
                        break;
                    }
                }
                Tok::Number(input[pos..end].to_string())
            }
            c if c.is_ascii_alphabetic() => {
                let mut end = pos + 1;
                while let Some(&(i, d)) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        end = i + 1;
                        chars.next();
                    } else {
                        break;
                    }
                }
                Tok::Ident(input[pos..end].to_string())
            }
            other => Tok::Unknown(other),
        };
        out.push((pos, tok));
    }
    out.push((input.len(), Tok::End));
    out
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0 + 1
    }

    fn bump(&mut self) -> (usize, Tok) {
        let (off, tok) = self.tokens[self.pos].clone();
        if tok != Tok::End {
            self.pos += 1;
        }
        (off + 1, tok)
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError::UnexpectedToken {
            offset: self.offset(),
            found: self.peek().to_string(),
            expected,
        }
    }

    fn expr(&mut self) -> Result<ClassExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = ClassExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = ClassExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ClassExpr, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = ClassExpr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<ClassExpr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(ClassExpr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<ClassExpr, ParseError> {
        let (base, is_cell) = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        if is_cell {
            return Err(self.unexpected("an operator ('^' does not chain)"));
        }
        self.bump();
        let e = self.exponent()?;
        if *self.peek() == Tok::Caret {
            return Err(self.unexpected("an operator ('^' does not chain)"));
        }
        Ok(ClassExpr::Pow(Box::new(base), e))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let offset = self.offset();
        let found = self.peek().to_string();
        let invalid = || ParseError::InvalidExponent {
            offset,
            found: found.clone(),
        };
        match self.peek().clone() {
            Tok::Number(digits) => {
                self.bump();
                digits
                    .parse::<u32>()
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(invalid)
            }
            Tok::Minus | Tok::Ident(_) | Tok::LParen => Err(invalid()),
            _ => Err(self.unexpected("an exponent")),
        }
    }

    /// Returns the atom and whether it already consumed a `^` (`A^n`/`P^n`).
    fn atom(&mut self) -> Result<(ClassExpr, bool), ParseError> {
        let expected = "a number, 'L', 'pt', 'A^n', 'P^n' or '('";
        match self.peek().clone() {
            Tok::Number(digits) => {
                let value = digits
                    .parse::<BigInt>()
                    .map_err(|_| self.unexpected("an integer literal"))?;
                self.bump();
                Ok((ClassExpr::Int(value), false))
            }
            Tok::Ident(name) => {
                let sym = match name.as_str() {
                    "L" => Some(Symbol::Lefschetz),
                    "pt" => Some(Symbol::Point),
                    _ => None,
                };
                if let Some(sym) = sym {
                    self.bump();
                    return Ok((ClassExpr::Symbol(sym), false));
                }
                let cell: fn(u32) -> Symbol = match name.as_str() {
                    "A" => Symbol::Affine,
                    "P" => Symbol::Projective,
                    _ => return Err(self.unexpected(expected)),
                };
                self.bump();
                if *self.peek() != Tok::Caret {
                    return Err(self.unexpected("'^' and a dimension after A or P"));
                }
                self.bump();
                let n = self.exponent()?;
                Ok((ClassExpr::Symbol(cell(n)), true))
            }
            Tok::LParen => {
                let (open, _) = self.bump();
                let inner = self.expr()?;
                match self.peek() {
                    Tok::RParen => {
                        self.bump();
                        Ok((inner, false))
                    }
                    Tok::End => Err(ParseError::UnbalancedParen { offset: open }),
                    _ => Err(self.unexpected("')'")),
                }
            }
            _ => Err(self.unexpected(expected)),
        }
    }
}

/// Parses a class expression.
pub fn parse(input: &str) -> Result<ClassExpr, ParseError> {
    let tokens = lex(input);
    if tokens.len() == 1 {
        return Err(ParseError::Empty);
    }
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr()?;
    match parser.peek() {
        Tok::End => Ok(expr),
        Tok::RParen => Err(ParseError::UnbalancedParen {
            offset: parser.offset(),
        }),
        _ => Err(parser.unexpected("an operator or end of input")),
    }
}

impl Symbol {
    pub fn class(self) -> LefschetzPoly {
        match self {
            Symbol::Lefschetz => LefschetzPoly::lefschetz(),
            Symbol::Point => LefschetzPoly::one(),
            Symbol::Affine(n) => LefschetzPoly::affine(n),
            Symbol::Projective(n) => LefschetzPoly::projective(n),
        }
    }
}

/// Evaluates an expression in `Z[L]`.
pub fn eval_expr(e: &ClassExpr) -> LefschetzPoly {
    match e {
        ClassExpr::Int(a) => LefschetzPoly::constant(a.clone()),
        ClassExpr::Symbol(s) => s.class(),
        ClassExpr::Neg(x) => -eval_expr(x),
        ClassExpr::Add(a, b) => eval_expr(a) + eval_expr(b),
        ClassExpr::Sub(a, b) => eval_expr(a) - eval_expr(b),
        ClassExpr::Mul(a, b) => eval_expr(a) * eval_expr(b),
        ClassExpr::Pow(a, n) => eval_expr(a).pow(*n),
    }
}

/// Parses and evaluates in one step.
pub fn parse_class(input: &str) -> Result<LefschetzPoly, ParseError> {
    parse(input).map(|e| eval_expr(&e))
}

/// Canonical, re-parseable text form of a class.
pub fn render(p: &LefschetzPoly) -> String {
    p.to_string()
}
