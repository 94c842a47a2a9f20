//! Text syntax for regions.
//!
//! ```text
//! product  := factor ('*' factor)*
//! factor   := region ('^' count)?
//! region   := primary ('|' arc)?
//! primary  := 'H+' | 'H-' | 'disk' | 'ext'
//!           | 'closure(' region ')' | 'compl(' region ')'
//!           | 'mobius(' gauss ',' gauss ',' gauss ',' gauss ';' region ')'
//!           | arc
//! arc      := 'arc' ('[' | '(') endpoint ',' endpoint (']' | ')')
//! endpoint := rational | 'inf'
//! ```
//!
//! Arcs are read in the canonical frame of the region they attach to, so
//! `H-|arc[0,inf]` is `H₋ ∪ [−∞, 0]`.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::moebius::MoebiusMap;
use crate::scalar::{parse_rat, GaussRat};

use super::{Arc, Endpoint, Region, RegionProduct};

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

fn err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(err(format!("expected {tok:?} at {:?}", self.rest())))
        }
    }

    /// Text up to (not including) the first of `stops`.
    fn until(&mut self, stops: &[char]) -> &'a str {
        let rest = self.rest();
        let end = rest.find(|c| stops.contains(&c)).unwrap_or(rest.len());
        self.pos += end;
        &rest[..end]
    }

    fn region(&mut self) -> Result<Region> {
        let r = self.primary()?;
        if self.eat("|") {
            let a = self.arc()?;
            return r.with_arc(a);
        }
        Ok(r)
    }

    fn primary(&mut self) -> Result<Region> {
        if self.eat("H+") {
            Ok(Region::upper())
        } else if self.eat("H-") {
            Ok(Region::lower())
        } else if self.eat("disk") {
            Ok(Region::disk())
        } else if self.eat("ext") {
            Ok(Region::exterior())
        } else if self.eat("closure(") {
            let r = self.region()?;
            self.expect(")")?;
            Ok(r.closure())
        } else if self.eat("compl(") {
            let r = self.region()?;
            self.expect(")")?;
            Ok(r.complement())
        } else if self.eat("mobius(") {
            let mut g = Vec::with_capacity(4);
            for stop in [',', ',', ',', ';'] {
                let lit = self.until(&[stop]);
                g.push(GaussRat::from_str(lit)?);
                self.expect(&stop.to_string())?;
            }
            let r = self.region()?;
            self.expect(")")?;
            let [a, b, c, d]: [GaussRat; 4] = g.try_into().expect("four entries");
            Ok(r.image(&MoebiusMap::new(a, b, c, d)?))
        } else if self.rest().starts_with("arc") {
            Ok(Region::arc_only(self.arc()?))
        } else {
            Err(err(format!("unknown region at {:?}", self.rest())))
        }
    }

    fn arc(&mut self) -> Result<Arc> {
        self.expect("arc")?;
        let start_closed = if self.eat("[") {
            true
        } else if self.eat("(") {
            false
        } else {
            return Err(err("arc needs '[' or '('"));
        };
        let start = endpoint(self.until(&[',']))?;
        self.expect(",")?;
        let end = endpoint(self.until(&[']', ')']))?;
        let end_closed = if self.eat("]") {
            true
        } else if self.eat(")") {
            false
        } else {
            return Err(err("arc needs ']' or ')'"));
        };
        Ok(Arc { start, end, start_closed, end_closed })
    }
}

fn endpoint(s: &str) -> Result<Endpoint> {
    match s {
        "inf" | "-inf" | "+inf" | "∞" => Ok(Endpoint::Infinity),
        _ => Ok(Endpoint::Finite(parse_rat(s)?)),
    }
}

fn compact(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Parses a single region.
pub fn parse_region(s: &str) -> Result<Region> {
    let s = compact(s);
    let mut p = Parser { s: &s, pos: 0 };
    let r = p.region()?;
    if !p.rest().is_empty() {
        return Err(err(format!("trailing input {:?}", p.rest())));
    }
    Ok(r)
}

/// Splits on top-level `sep` (outside any bracket).
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut depth = 0i32;
    let mut parts = Vec::new();
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

/// Parses `R1 * R2 * …`, where any factor may carry a `^k` repeat count.
pub fn parse_product(s: &str) -> Result<RegionProduct> {
    let s = compact(s);
    let mut out = Vec::new();
    for factor in split_top(&s, '*') {
        let pieces = split_top(factor, '^');
        let (body, count) = match pieces.as_slice() {
            [body] => (*body, 1usize),
            [body, k] => (*body, k.parse().map_err(|_| err(format!("bad repeat count {k:?}")))?),
            _ => return Err(err(format!("bad factor {factor:?}"))),
        };
        let r = parse_region(body)?;
        out.extend(std::iter::repeat_n(r, count));
    }
    Ok(RegionProduct(out))
}
