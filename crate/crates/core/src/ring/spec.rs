//! Textual ring-spec grammar.
//!
//! ```text
//! spec := "zmod:" n
//!       | "mat:" k ":" spec
//!       | "tri:" k ":" spec
//!       | "prod:" spec "," spec
//!       | "sc:" path
//!       | "int"
//! ```
//!
//! `zmod:n` is Z/nZ; `mat:k:…`/`tri:k:…` are full and upper-triangular k×k
//! matrix rings over the inner spec; `prod` is a direct product; `sc:path`
//! reads a structure-constant table from a file (first line `n m`, then n²
//! lines of n coefficients giving the products of basis elements, row-major);
//! `int` is the witnessed backend for Z. Parsing is recursive descent, so
//! nested `prod` specs are unambiguous.

use super::RingError;
use std::fmt;

/// Parsed ring specification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Zmod(usize),
    Mat(usize, Box<RingSpec>),
    Tri(usize, Box<RingSpec>),
    Prod(Box<RingSpec>, Box<RingSpec>),
    Sc(String),
    Int,
}

impl RingSpec {
    pub fn parse(input: &str) -> Result<RingSpec, RingError> {
        let s = input.trim();
        let mut cur = Cursor { s, pos: 0 };
        let spec = cur.parse_spec()?;
        if cur.pos != s.len() {
            return Err(RingError::Parse {
                spec: input.to_string(),
                msg: format!("trailing input at byte {}", cur.pos),
            });
        }
        Ok(spec)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zmod(n) => write!(f, "zmod:{n}"),
            RingSpec::Mat(k, inner) => write!(f, "mat:{k}:{inner}"),
            RingSpec::Tri(k, inner) => write!(f, "tri:{k}:{inner}"),
            RingSpec::Prod(a, b) => write!(f, "prod:{a},{b}"),
            RingSpec::Sc(path) => write!(f, "sc:{path}"),
            RingSpec::Int => write!(f, "int"),
        }
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, msg: impl Into<String>) -> RingError {
        RingError::Parse {
            spec: self.s.to_string(),
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn eat(&mut self, prefix: &str) -> bool {
        if self.rest().starts_with(prefix) {
            self.pos += prefix.len();
            true
        } else {
            false
        }
    }

    fn parse_usize(&mut self) -> Result<usize, RingError> {
        let digits: String = self.rest().chars().take_while(|c| c.is_ascii_digit()).collect();
        if digits.is_empty() {
            return Err(self.err(format!("expected number at byte {}", self.pos)));
        }
        self.pos += digits.len();
        digits
            .parse::<usize>()
            .map_err(|e| self.err(format!("bad number `{digits}`: {e}")))
    }

    fn expect(&mut self, token: &str) -> Result<(), RingError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{token}` at byte {}", self.pos)))
        }
    }

    fn parse_spec(&mut self) -> Result<RingSpec, RingError> {
        if self.eat("zmod:") {
            let n = self.parse_usize()?;
            if n < 2 {
                return Err(self.err("zmod modulus must be at least 2"));
            }
            Ok(RingSpec::Zmod(n))
        } else if self.eat("mat:") {
            let k = self.parse_usize()?;
            if k == 0 {
                return Err(self.err("matrix dimension must be positive"));
            }
            self.expect(":")?;
            Ok(RingSpec::Mat(k, Box::new(self.parse_spec()?)))
        } else if self.eat("tri:") {
            let k = self.parse_usize()?;
            if k == 0 {
                return Err(self.err("matrix dimension must be positive"));
            }
            self.expect(":")?;
            Ok(RingSpec::Tri(k, Box::new(self.parse_spec()?)))
        } else if self.eat("prod:") {
            let a = self.parse_spec()?;
            self.expect(",")?;
            let b = self.parse_spec()?;
            Ok(RingSpec::Prod(Box::new(a), Box::new(b)))
        } else if self.eat("sc:") {
            // A file path: everything up to a top-level comma (so `sc:` can
            // appear inside `prod:`) or end of input.
            let rest = self.rest();
            let end = rest.find(',').unwrap_or(rest.len());
            if end == 0 {
                return Err(self.err("sc: requires a file path"));
            }
            let path = rest[..end].to_string();
            self.pos += end;
            Ok(RingSpec::Sc(path))
        } else if self.eat("int") {
            Ok(RingSpec::Int)
        } else {
            Err(self.err(format!(
                "expected one of zmod:/mat:/tri:/prod:/sc:/int at byte {}",
                self.pos
            )))
        }
    }
}
