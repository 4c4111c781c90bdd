//! Parser for class expressions such as `c1c2^2 - 3/2 q(4c1^2 - d2)` or
//! `2 f1 + [point]`.
//!
//! Juxtaposition multiplies. Named classes (cells, orbits, `line`, `pt`,
//! `P2`, `[Y]`, ...) expand to their polynomial representatives.

use crate::chow::{c3, named_poly};
use crate::error::{Error, Result};
use crate::poly::{c1, c2, d2, q, MultiPoly};
use crate::rational::parse_rational;

const SYMBOLS: [&str; 28] = [
    "q_cell", "point", "line", "ell", "O2'", "pt", "P2", "O2", "O4", "O5", "c1", "c2", "c3", "d2", "e1", "e2", "e3",
    "f1", "f2", "f3", "h1", "h2", "h3", "m", "n", "p", "q", "Y",
];

fn symbol_poly(name: &str) -> Option<MultiPoly> {
    match name {
        "c1" => Some(c1()),
        "c2" => Some(c2()),
        "d2" => Some(d2()),
        "c3" => Some(c3()),
        "q" => Some(q()),
        "ell" => named_poly("line"),
        "Y" | "[Y]" => Some(MultiPoly::one()),
        other => named_poly(other.trim_start_matches('[').trim_end_matches(']')),
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(String),
    Sym(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' => {
                out.push(Token::Star);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::Open);
                i += 1
            }
            ')' => {
                out.push(Token::Close);
                i += 1
            }
            '[' => {
                let end = chars[i..]
                    .iter()
                    .position(|&c| c == ']')
                    .ok_or_else(|| Error::Parse(format!("unclosed `[` in `{s}`")))?;
                let name: String = chars[i..=i + end].iter().collect();
                out.push(Token::Sym(name));
                i += end + 1;
            }
            c if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                out.push(Token::Num(chars[start..i].iter().collect()));
            }
            _ => {
                let rest: String = chars[i..].iter().collect();
                let sym = SYMBOLS
                    .iter()
                    .find(|name| rest.starts_with(**name))
                    .ok_or_else(|| Error::UnknownLabel(rest.split_whitespace().next().unwrap_or("").to_owned()))?;
                out.push(Token::Sym((*sym).to_owned()));
                i += sym.chars().count();
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(Token::Num(_)) | Some(Token::Sym(_)) | Some(Token::Open) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.next() {
                Some(Token::Num(n)) => {
                    let e: u32 = n.parse().map_err(|_| Error::Parse(format!("bad exponent `{n}`")))?;
                    return Ok(base.pow(e));
                }
                other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.next() {
            Some(Token::Num(n)) => Ok(MultiPoly::constant(parse_rational(&n)?)),
            Some(Token::Sym(s)) => symbol_poly(&s).ok_or(Error::UnknownLabel(s)),
            Some(Token::Open) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::Close) => Ok(e),
                    _ => Err(Error::Parse("missing `)`".into())),
                }
            }
            Some(Token::Minus) => Ok(-self.power()?),
            other => Err(Error::Parse(format!("unexpected {other:?}"))),
        }
    }
}

/// Parses an expression into a polynomial in `c1, c2, d2, q`.
pub fn parse_poly(s: &str) -> Result<MultiPoly> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { tokens, pos: 0 };
    let out = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input in `{s}`")));
    }
    Ok(out)
}
