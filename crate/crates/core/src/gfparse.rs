//! A small expression language for writing power series the way the
//! source texts do: `1/(1-x)`, `(1-sqrt(1-4*x))/(2*x)`, `x/(1+7*x+12*x^2)`.
//!
//! Grammar (stable):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ['^' uint]
//! atom   := uint | 'x' | builtin-name | '(' expr ')' | 'sqrt' '(' expr ')' | '-' atom
//! ```
//!
//! Whitespace is insignificant; multiplication is always explicit. Note
//! that because `-` lives in `atom`, `-x^2` is `(-x)^2`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fps::Series;
use crate::rational::{Int, Rat};

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Literal(Int),
    X,
    /// A named series from the [`Builtins`] table (`c` by default).
    Builtin(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Sqrt(Box<Expr>),
}

/// Named series available as single-identifier atoms.
pub struct Builtins {
    entries: BTreeMap<String, fn(usize) -> Series>,
}

impl Builtins {
    /// The standard table: just `c`, the Catalan number series.
    pub fn standard() -> Self {
        Builtins {
            entries: BTreeMap::new(),
        }
        .with("c", Series::catalan)
    }

    /// Extend the table with another named series.
    pub fn with(mut self, name: &str, f: fn(usize) -> Series) -> Self {
        self.entries.insert(name.to_string(), f);
        self
    }

    pub fn contains(&self, name: &str) -> bool {
        self.entries.contains_key(name)
    }

    pub fn names(&self) -> Vec<String> {
        self.entries.keys().cloned().collect()
    }

    fn get(&self, name: &str) -> Option<&fn(usize) -> Series> {
        self.entries.get(name)
    }
}

impl Default for Builtins {
    fn default() -> Self {
        Builtins::standard()
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Uint(Int),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Uint(n) => format!("number {n}"),
            Tok::Ident(s) => format!("name '{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: Int = text[start..i].parse().expect("digits parse as an integer");
                out.push((Tok::Uint(n), start));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
            }
            b'+' => {
                out.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                out.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                out.push((Tok::Star, i));
                i += 1;
            }
            b'/' => {
                out.push((Tok::Slash, i));
                i += 1;
            }
            b'^' => {
                out.push((Tok::Caret, i));
                i += 1;
            }
            b'(' => {
                out.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                out.push((Tok::RParen, i));
                i += 1;
            }
            _ => {
                return Err(Error::Syntax {
                    offset: i,
                    expected: vec!["digit, name, operator, or parenthesis".into()],
                    found: format!("'{}'", &text[i..].chars().next().unwrap_or('?')),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    end_offset: usize,
    builtins: &'a Builtins,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|&(_, o)| o)
            .unwrap_or(self.end_offset)
    }

    fn found(&self) -> String {
        self.tokens
            .get(self.pos)
            .map(|(t, _)| t.describe())
            .unwrap_or_else(|| "end of input".into())
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, expected: &[&str]) -> Error {
        Error::Syntax {
            offset: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.found(),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut node = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    node = Expr::Add(Box::new(node), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    node = Expr::Sub(Box::new(node), Box::new(self.term()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut node = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    node = Expr::Mul(Box::new(node), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    node = Expr::Div(Box::new(node), Box::new(self.factor()?));
                }
                _ => return Ok(node),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            match self.bump() {
                Some(Tok::Uint(n)) => {
                    let e = u32::try_from(&n).map_err(|_| Error::Syntax {
                        offset: self.tokens[self.pos - 1].1,
                        expected: vec!["exponent small enough to expand".into()],
                        found: format!("number {n}"),
                    })?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => {
                    self.pos = self.pos.saturating_sub(1);
                    Err(self.err(&["non-negative integer exponent"]))
                }
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Uint(_)) => {
                if let Some(Tok::Uint(n)) = self.bump() {
                    Ok(Expr::Literal(n))
                } else {
                    unreachable!()
                }
            }
            Some(Tok::Minus) => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() == Some(&Tok::RParen) {
                    self.bump();
                    Ok(inner)
                } else {
                    Err(self.err(&["')'"]))
                }
            }
            Some(Tok::Ident(name)) => {
                self.bump();
                if name == "x" {
                    Ok(Expr::X)
                } else if name == "sqrt" {
                    if self.peek() != Some(&Tok::LParen) {
                        return Err(self.err(&["'(' after sqrt"]));
                    }
                    self.bump();
                    let inner = self.expr()?;
                    if self.peek() == Some(&Tok::RParen) {
                        self.bump();
                        Ok(Expr::Sqrt(Box::new(inner)))
                    } else {
                        Err(self.err(&["')'"]))
                    }
                } else if self.builtins.contains(&name) {
                    Ok(Expr::Builtin(name))
                } else {
                    self.pos -= 1;
                    let mut expected = vec!["'x'".to_string(), "'sqrt'".to_string()];
                    expected.extend(self.builtins.names().iter().map(|n| format!("'{n}'")));
                    Err(Error::Syntax {
                        offset: self.offset(),
                        expected,
                        found: format!("name '{name}'"),
                    })
                }
            }
            _ => Err(self.err(&["number", "'x'", "'('", "'sqrt'", "'-'"])),
        }
    }
}

/// Parse with the standard builtin table.
pub fn parse(text: &str) -> Result<Expr> {
    parse_with(text, &Builtins::standard())
}

/// Parse, resolving single-identifier atoms against `builtins`.
pub fn parse_with(text: &str, builtins: &Builtins) -> Result<Expr> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end_offset: text.len(),
        builtins,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err(&["operator", "end of input"]));
    }
    Ok(e)
}

/// Evaluate with the standard builtin table.
pub fn eval(e: &Expr, order: usize) -> Result<Series> {
    eval_with(e, order, &Builtins::standard())
}

/// Evaluate to a series of exactly `order` coefficients.
///
/// Division shifts out the denominator's power of `x` first, so quotients
/// like `(1 - sqrt(1-4*x))/(2*x)` work; each shift costs working precision,
/// which is recovered by re-evaluating at a higher internal order until the
/// requested one is met. A denominator that stays zero within the working
/// order (plus a bounded reserve) is reported as a division by a non-unit.
pub fn eval_with(e: &Expr, order: usize, builtins: &Builtins) -> Result<Series> {
    assert!(order >= 1, "series need at least one coefficient");
    let mut internal = order;
    let mut reserve = 0usize;
    for _ in 0..40 {
        match eval_at(e, internal, builtins) {
            Ok(s) if s.order() >= order => return Ok(s.truncate(order)),
            Ok(s) => internal += order - s.order(),
            Err(Error::DivisionByNonUnit) if reserve < 64 => {
                reserve += 16;
                internal = order + reserve;
            }
            Err(err) => return Err(err),
        }
    }
    Err(Error::DivisionByNonUnit)
}

fn eval_at(e: &Expr, order: usize, builtins: &Builtins) -> Result<Series> {
    match e {
        Expr::Literal(n) => Ok(Series::constant(Rat::from_integer(n.clone()), order)),
        Expr::X => Ok(Series::x(order)),
        Expr::Builtin(name) => match builtins.get(name) {
            Some(f) => Ok(f(order)),
            None => Err(Error::Syntax {
                offset: 0,
                expected: builtins.names().iter().map(|n| format!("'{n}'")).collect(),
                found: format!("name '{name}'"),
            }),
        },
        Expr::Neg(a) => Ok(eval_at(a, order, builtins)?.neg()),
        Expr::Add(a, b) => Ok(eval_at(a, order, builtins)?.add(&eval_at(b, order, builtins)?)),
        Expr::Sub(a, b) => Ok(eval_at(a, order, builtins)?.sub(&eval_at(b, order, builtins)?)),
        Expr::Mul(a, b) => Ok(eval_at(a, order, builtins)?.mul(&eval_at(b, order, builtins)?)),
        Expr::Div(a, b) => {
            let num = eval_at(a, order, builtins)?;
            let den = eval_at(b, order, builtins)?;
            match den.valuation() {
                None => Err(Error::DivisionByNonUnit),
                Some(0) => num.div(&den),
                Some(k) => {
                    let num = num.div_xpow(k)?;
                    let den = den.div_xpow(k)?;
                    num.div(&den)
                }
            }
        }
        Expr::Pow(a, e) => Ok(eval_at(a, order, builtins)?.pow(*e)),
        Expr::Sqrt(a) => eval_at(a, order, builtins)?.sqrt(),
    }
}

impl Expr {
    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 0,
            Expr::Mul(..) | Expr::Div(..) => 1,
            Expr::Pow(..) => 2,
            _ => 3,
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        let prec = self.precedence();
        if prec < min_prec {
            write!(f, "(")?;
            self.write(f, 0)?;
            return write!(f, ")");
        }
        match self {
            Expr::Literal(n) => write!(f, "{n}"),
            Expr::X => write!(f, "x"),
            Expr::Builtin(name) => write!(f, "{name}"),
            Expr::Sqrt(a) => {
                write!(f, "sqrt(")?;
                a.write(f, 0)?;
                write!(f, ")")
            }
            Expr::Neg(a) => {
                write!(f, "-")?;
                a.write(f, 3)
            }
            Expr::Pow(a, e) => {
                a.write(f, 3)?;
                write!(f, "^{e}")
            }
            Expr::Add(a, b) => {
                a.write(f, 0)?;
                write!(f, " + ")?;
                b.write(f, 1)
            }
            Expr::Sub(a, b) => {
                a.write(f, 0)?;
                write!(f, " - ")?;
                b.write(f, 1)
            }
            Expr::Mul(a, b) => {
                a.write(f, 1)?;
                write!(f, "*")?;
                b.write(f, 2)
            }
            Expr::Div(a, b) => {
                a.write(f, 1)?;
                write!(f, "/")?;
                b.write(f, 2)
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}
