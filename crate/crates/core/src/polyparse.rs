//! Ring-definition documents and the polynomial expression grammar.
//!
//! ```text
//! expr        := ['-'] term (('+' | '-') term)*
//! term        := factor ('*' factor)*
//! factor      := coefficient | variable ['^' natural] | '(' expr ')'
//! coefficient := integer ['/' positive-integer]
//! ```
//!
//! Multiplication must be explicit; `2x` is rejected.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::FieldSpec;
use crate::polyring::{GradingSpec, Monomial, PolyRing, Polynomial, TermOrderKind};

const MAX_EXPONENT: u64 = 1 << 31;
const MAX_NESTING: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableDecl {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<TermOrderKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assume_equidimensional: Option<bool>,
}

/// A validated ring-definition file. Ideal generators stay as source text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDefinitionDocument {
    pub field: FieldSpec,
    pub variables: Vec<VariableDecl>,
    pub ideal: Vec<String>,
    #[serde(default)]
    pub options: RingOptions,
}

// Degrees are read signed so that nonpositive values get a proper message.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVariable {
    name: String,
    degree: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    field: FieldSpec,
    variables: Vec<RawVariable>,
    ideal: Vec<String>,
    #[serde(default)]
    options: RingOptions,
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_ring_file(src: &str) -> Result<RingDefinitionDocument> {
    let raw: RawDocument = serde_json::from_str(src).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    raw.field.validate()?;
    let mut variables = Vec::with_capacity(raw.variables.len());
    for v in raw.variables {
        if !valid_identifier(&v.name) {
            return Err(Error::InvalidInput(format!("invalid variable name `{}`", v.name)));
        }
        if variables.iter().any(|d: &VariableDecl| d.name == v.name) {
            return Err(Error::InvalidInput(format!("duplicate variable `{}`", v.name)));
        }
        if v.degree <= 0 {
            return Err(Error::InvalidInput(format!("variable `{}`: degree must be positive", v.name)));
        }
        let degree = u32::try_from(v.degree)
            .map_err(|_| Error::InvalidInput(format!("variable `{}`: degree too large", v.name)))?;
        variables.push(VariableDecl { name: v.name, degree });
    }
    if variables.is_empty() {
        return Err(Error::InvalidInput("at least one variable required".into()));
    }
    Ok(RingDefinitionDocument { field: raw.field, variables, ideal: raw.ideal, options: raw.options })
}

impl RingDefinitionDocument {
    /// The ambient polynomial ring; `field` and `order` override the document.
    pub fn ring(&self, field: Option<FieldSpec>, order: Option<TermOrderKind>) -> Result<PolyRing> {
        let names = self.variables.iter().map(|v| v.name.clone()).collect();
        let grading = GradingSpec::new(self.variables.iter().map(|v| v.degree).collect())?;
        let order = order.or(self.options.order).unwrap_or_default();
        PolyRing::new(field.unwrap_or(self.field), names, grading, order)
    }

    pub fn parse_ideal(&self, ring: &PolyRing) -> Result<Vec<Polynomial>> {
        self.ideal.iter().map(|s| parse_polynomial(s, ring)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Token) -> String {
    match t {
        Token::Int(n) => format!("integer `{n}`"),
        Token::Ident(s) => format!("identifier `{s}`"),
        Token::Plus => "`+`".into(),
        Token::Minus => "`-`".into(),
        Token::Star => "`*`".into(),
        Token::Slash => "`/`".into(),
        Token::Caret => "`^`".into(),
        Token::LParen => "`(`".into(),
        Token::RParen => "`)`".into(),
        Token::End => "end of input".into(),
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax { offset, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<(Token, usize)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Token::Int(src[start..i].parse().expect("digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Token::Ident(src[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = src[start..].chars().next().unwrap();
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Token::End, src.len()));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    ring: &'a PolyRing,
}

impl Parser<'_> {
    fn current(&self) -> &(Token, usize) {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn peek(&self) -> &Token {
        &self.current().0
    }

    fn offset(&self) -> usize {
        self.current().1
    }

    fn bump(&mut self) -> (Token, usize) {
        let t = self.current().clone();
        self.pos += 1;
        t
    }

    fn unexpected(&self) -> Error {
        match self.peek() {
            Token::End => syntax(self.offset(), "unexpected end of input"),
            t => syntax(self.offset(), format!("unexpected {}", describe(t))),
        }
    }

    fn expr(&mut self, depth: usize) -> Result<Polynomial> {
        if depth > MAX_NESTING {
            return Err(syntax(self.offset(), "expression nested too deeply"));
        }
        let negate = if *self.peek() == Token::Minus {
            self.bump();
            true
        } else {
            false
        };
        let first = self.term(depth)?;
        let mut acc = if negate { self.ring.neg(&first) } else { first };
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    let t = self.term(depth)?;
                    acc = self.ring.add(&acc, &t);
                }
                Token::Minus => {
                    self.bump();
                    let t = self.term(depth)?;
                    acc = self.ring.sub(&acc, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self, depth: usize) -> Result<Polynomial> {
        let mut acc = self.factor(depth)?;
        while *self.peek() == Token::Star {
            let (_, at) = self.bump();
            let f = self.factor(depth)?;
            acc = checked_product(self.ring, &acc, &f).ok_or(Error::ExponentOverflow { offset: at })?;
        }
        Ok(acc)
    }

    fn factor(&mut self, depth: usize) -> Result<Polynomial> {
        let (tok, at) = self.bump();
        match tok {
            Token::Int(n) => {
                if *self.peek() == Token::Slash {
                    self.bump();
                    let (den, den_at) = self.bump();
                    let d = match den {
                        Token::Int(v) if !v.is_zero() => v,
                        Token::Int(_) => return Err(syntax(den_at, "denominator must be positive")),
                        _ => {
                            self.pos -= 1;
                            return Err(self.unexpected());
                        }
                    };
                    let field = self.ring.field();
                    let c = field
                        .from_fraction(&n, &d)
                        .map_err(|_| syntax(den_at, format!("denominator vanishes in {field}")))?;
                    return Ok(self.ring.constant(c));
                }
                Ok(self.ring.constant(self.ring.field().from_bigint(&n)))
            }
            Token::Ident(name) => {
                let i = self
                    .ring
                    .variable_index(&name)
                    .ok_or(Error::UnknownVariable { name: name.clone(), offset: at })?;
                let mut e = 1u64;
                if *self.peek() == Token::Caret {
                    self.bump();
                    let (tok, exp_at) = self.bump();
                    match tok {
                        Token::Int(v) => {
                            e = match v.to_u64() {
                                Some(e) if e <= MAX_EXPONENT => e,
                                _ => return Err(Error::ExponentOverflow { offset: exp_at }),
                            }
                        }
                        _ => {
                            self.pos -= 1;
                            return Err(self.unexpected());
                        }
                    }
                }
                let mut m = Monomial::one(self.ring.nvars());
                *m.exponent_mut(i) = e as u32;
                Ok(self.ring.monomial(self.ring.field().one(), m))
            }
            Token::LParen => {
                let inner = self.expr(depth + 1)?;
                if *self.peek() != Token::RParen {
                    return Err(self.unexpected());
                }
                self.bump();
                Ok(inner)
            }
            Token::End => Err(syntax(at, "unexpected end of input")),
            other => Err(syntax(at, format!("unexpected {}", describe(&other)))),
        }
    }
}

fn checked_product(ring: &PolyRing, f: &Polynomial, g: &Polynomial) -> Option<Polynomial> {
    let mut terms = Vec::with_capacity(f.len() * g.len());
    for (a, m) in f.terms() {
        for (b, n) in g.terms() {
            let p = m.checked_mul(n)?;
            if p.exponents().iter().any(|&e| e as u64 > MAX_EXPONENT) {
                return None;
            }
            terms.push((a * b, p));
        }
    }
    Some(ring.from_terms(terms))
}

/// Parses one polynomial over `ring`; like terms are combined.
pub fn parse_polynomial(src: &str, ring: &PolyRing) -> Result<Polynomial> {
    let mut p = Parser { tokens: lex(src)?, pos: 0, ring };
    let f = p.expr(0)?;
    match p.peek() {
        Token::End => Ok(f),
        Token::Ident(_) | Token::Int(_) | Token::LParen => {
            Err(syntax(p.offset(), "expected an operator; multiplication must be written with `*`"))
        }
        _ => Err(p.unexpected()),
    }
}
