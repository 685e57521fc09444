//! Text input for polynomials and generator lists.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer | variable | '(' expr ')'
//! ```

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::Fe;
use crate::poly::{Poly, Ring};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero(self.ring);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t)? } else { acc.add(&t)? };
            match self.peek() {
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected an exponent"));
            }
            let k: u32 = std::str::from_utf8(digits)
                .unwrap()
                .parse()
                .map_err(|_| Error::Syntax { pos: start, msg: "exponent too large".into() })?;
            return base.pow(k);
        }
        Ok(base)
    }

    fn digits(&mut self) -> &'a [u8] {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<Poly> {
        let field = self.ring.field();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let ten = field.from_u64(10);
                let mut acc: Fe = field.zero();
                for &d in self.digits() {
                    acc = field.add(field.mul(acc, ten), field.from_u64((d - b'0') as u64));
                }
                Ok(Poly::constant(self.ring, acc))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                match self.ring.var_index(name) {
                    Some(i) => Ok(Poly::var(self.ring, i)),
                    None => Err(Error::UnknownVariable { name: name.to_string(), pos: start }),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub fn parse_poly(text: &str, ring: &Arc<Ring>) -> Result<Poly> {
    parse_at(text, 0, ring)
}

fn parse_at(text: &str, base: usize, ring: &Arc<Ring>) -> Result<Poly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
    let shift = |e: Error| match e {
        Error::Syntax { pos, msg } => Error::Syntax { pos: pos + base, msg },
        Error::UnknownVariable { name, pos } => Error::UnknownVariable { name, pos: pos + base },
        other => other,
    };
    let out = p.expr().map_err(shift)?;
    if p.peek().is_some() {
        return Err(shift(p.err("unexpected trailing input")));
    }
    Ok(out)
}

/// Parses a comma-separated list of polynomials.
pub fn parse_poly_list(text: &str, ring: &Arc<Ring>) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices().chain(std::iter::once((text.len(), ','))) {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                let piece = &text[start..i];
                if piece.trim().is_empty() {
                    return Err(Error::Syntax { pos: start, msg: "empty generator".into() });
                }
                out.push(parse_at(piece, start, ring)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Identifiers occurring in `text`, sorted so that `x2 < x10`.
pub fn collect_variables(text: &str) -> Vec<String> {
    let bytes = text.as_bytes();
    let mut names = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            names.push(text[start..i].to_string());
        } else if bytes[i].is_ascii_digit() {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
        } else {
            i += 1;
        }
    }
    names.sort_by(|a, b| natural_key(a).cmp(&natural_key(b)));
    names.dedup();
    names
}

fn natural_key(s: &str) -> (String, u64, String) {
    let split = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (head, tail) = s.split_at(split);
    (head.to_string(), tail.parse().unwrap_or(0), s.to_string())
}
