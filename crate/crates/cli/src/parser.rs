//! Recursive-descent parser for the knot expression grammar:
//!
//! ```text
//! knot := 'T' '(' int ',' int ')'        torus knot
//!       | 'S' '{' int (',' int)* '}'     numerical semigroup generators
//!       | 'A' '[' int (',' int)* ']'     symmetric Alexander exponent list
//!       | 'G' '[' int (',' int)* ';' int ']'   Γ-prefix with delta
//!       | 'U'                            the unknot
//! ```
//!
//! Whitespace is ignored everywhere. Syntax errors carry the byte position
//! in the original input; semantically invalid data (gcd, symmetry, …) is
//! rejected by the library constructors and surfaced verbatim.

use nuplus::{AlexanderVector, EnumeratingFunction};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at position {}: {}",
            self.position, self.message
        )
    }
}

/// The surface form a knot was given in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotSource {
    Torus(u64, u64),
    Generators(Vec<u64>),
    Alexander(Vec<i64>),
    Gamma(Vec<u64>, u64),
    Unknot,
}

/// A parsed knot expression together with its resolved enumerating function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotSpec {
    pub source: KnotSource,
    pub resolved: EnumeratingFunction,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KnotError {
    Syntax(ParseError),
    Domain(nuplus::Error),
}

impl fmt::Display for KnotError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotError::Syntax(e) => e.fmt(f),
            KnotError::Domain(e) => e.fmt(f),
        }
    }
}

impl KnotSpec {
    pub fn parse(text: &str) -> Result<Self, KnotError> {
        let source = parse_source(text).map_err(KnotError::Syntax)?;
        let resolved = resolve(&source).map_err(KnotError::Domain)?;
        let rendered = render(&source);
        Ok(KnotSpec {
            source,
            resolved: resolved.with_label(rendered),
        })
    }

    /// Canonical text form; re-parsing it resolves to the same function.
    pub fn render(&self) -> String {
        render(&self.source)
    }
}

fn resolve(source: &KnotSource) -> nuplus::Result<EnumeratingFunction> {
    match source {
        KnotSource::Torus(p, q) => EnumeratingFunction::torus(*p, *q),
        KnotSource::Generators(gens) => EnumeratingFunction::from_generators(gens),
        KnotSource::Alexander(exponents) => {
            let poly = AlexanderVector::new(exponents.clone())?;
            EnumeratingFunction::from_alexander(&poly)
        }
        KnotSource::Gamma(prefix, delta) => {
            EnumeratingFunction::from_prefix(prefix.clone(), *delta)
        }
        KnotSource::Unknot => Ok(EnumeratingFunction::unknot()),
    }
}

fn render(source: &KnotSource) -> String {
    match source {
        KnotSource::Torus(p, q) => format!("T({p},{q})"),
        KnotSource::Generators(gens) => {
            let mut sorted = gens.clone();
            sorted.sort_unstable();
            sorted.dedup();
            format!("S{{{}}}", join(&sorted))
        }
        KnotSource::Alexander(exponents) => format!("A[{}]", join(exponents)),
        KnotSource::Gamma(prefix, delta) => format!("G[{};{delta}]", join(prefix)),
        KnotSource::Unknot => "U".to_owned(),
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += 1;
                Ok(())
            }
            Some(found) => Err(self.error(format!(
                "expected '{}', found '{}'",
                c as char, found as char
            ))),
            None => Err(self.error(format!("expected '{}', found end of input", c as char))),
        }
    }

    fn parse_u64(&mut self) -> Result<u64, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {}
            _ => return Err(self.error("expected a non-negative integer")),
        }
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("digits are ascii")
            .parse()
            .map_err(|_| ParseError {
                position: start,
                message: "integer out of range".to_owned(),
            })
    }

    fn parse_i64(&mut self) -> Result<i64, ParseError> {
        let negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            _ => false,
        };
        let magnitude = self.parse_u64()? as i64;
        Ok(if negative { -magnitude } else { magnitude })
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

fn parse_source(text: &str) -> Result<KnotSource, ParseError> {
    let mut s = Scanner::new(text);
    let head = s
        .peek()
        .ok_or_else(|| s.error("expected a knot expression"))?;
    let source = match head {
        b'T' | b't' => {
            s.pos += 1;
            s.expect(b'(')?;
            let p = s.parse_u64()?;
            s.expect(b',')?;
            let q = s.parse_u64()?;
            s.expect(b')')?;
            KnotSource::Torus(p, q)
        }
        b'S' | b's' => {
            s.pos += 1;
            s.expect(b'{')?;
            let mut gens = vec![s.parse_u64()?];
            while s.peek() == Some(b',') {
                s.pos += 1;
                gens.push(s.parse_u64()?);
            }
            s.expect(b'}')?;
            KnotSource::Generators(gens)
        }
        b'A' | b'a' => {
            s.pos += 1;
            s.expect(b'[')?;
            let mut exponents = vec![s.parse_i64()?];
            while s.peek() == Some(b',') {
                s.pos += 1;
                exponents.push(s.parse_i64()?);
            }
            s.expect(b']')?;
            KnotSource::Alexander(exponents)
        }
        b'G' | b'g' => {
            s.pos += 1;
            s.expect(b'[')?;
            let mut prefix = vec![s.parse_u64()?];
            while s.peek() == Some(b',') {
                s.pos += 1;
                prefix.push(s.parse_u64()?);
            }
            s.expect(b';')?;
            let delta = s.parse_u64()?;
            s.expect(b']')?;
            KnotSource::Gamma(prefix, delta)
        }
        b'U' | b'u' => {
            s.pos += 1;
            KnotSource::Unknot
        }
        other => {
            return Err(s.error(format!(
                "expected one of 'T', 'S', 'A', 'G', 'U', found '{}'",
                other as char
            )))
        }
    };
    if !s.at_end() {
        return Err(s.error("unexpected trailing input"));
    }
    Ok(source)
}
