//! Text formats: polynomials, monomial lists and system files.

use monobasis_core::{Error, Field, Monomial, MultiPoly, PolySystem, Result};
use num_bigint::BigInt;
use num_traits::One;

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    base: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str, base: usize) -> Self {
        Cursor { src, pos: 0, base }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.base + self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.src[start..self.pos])
    }

    fn number<T: std::str::FromStr>(&mut self, what: &str) -> Result<T> {
        let at = self.pos;
        let d = self.digits().ok_or_else(|| self.err(format!("expected {what}")))?;
        d.parse().map_err(|_| Error::Parse { pos: self.base + at, msg: format!("{what} `{d}` out of range") })
    }

    /// `x<k>[^e]` with `1 <= k <= n`; returns the 0-based variable index.
    fn factor(&mut self, n: usize) -> Result<(usize, u32)> {
        self.skip_ws();
        let at = self.pos;
        if !self.eat('x') {
            return Err(self.err("expected a variable `x<k>`"));
        }
        let k: usize = self.number("variable index")?;
        if k == 0 || k > n {
            return Err(Error::Parse { pos: self.base + at, msg: format!("unknown variable x{k} (variables are x1..x{n})") });
        }
        let e = if self.eat('^') { self.number("exponent")? } else { 1 };
        Ok((k - 1, e))
    }

    fn monomial(&mut self, n: usize) -> Result<Monomial> {
        let mut exps = vec![0u32; n];
        loop {
            let (i, e) = self.factor(n)?;
            exps[i] = exps[i].checked_add(e).ok_or_else(|| self.err("exponent overflow"))?;
            if !self.eat('*') {
                break;
            }
        }
        Ok(Monomial::new(exps))
    }

    fn starts_variable(&mut self) -> bool {
        self.skip_ws();
        self.peek() == Some('x')
    }
}

/// Parses `c1*m1 + c2*m2 - ...` in the variables `x1..xn`.
pub fn parse_poly<F: Field>(text: &str, n: usize, field: &F) -> Result<MultiPoly<F>> {
    parse_poly_at(text, n, field, 0)
}

fn parse_poly_at<F: Field>(text: &str, n: usize, field: &F, base: usize) -> Result<MultiPoly<F>> {
    let mut cur = Cursor::new(text, base);
    let mut out = MultiPoly::zero(field.clone(), n);
    if cur.at_end() {
        return Err(cur.err("empty polynomial"));
    }
    let mut first = true;
    loop {
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            return Err(cur.err("expected `+` or `-`"));
        };
        first = false;
        let coeff_at = cur.pos;
        let (num, den, has_coeff) = match cur.digits() {
            Some(d) => {
                let num: BigInt = d.parse().expect("digits");
                let den = if cur.eat('/') {
                    let d = cur.digits().ok_or_else(|| cur.err("expected a denominator"))?;
                    d.parse().expect("digits")
                } else {
                    BigInt::one()
                };
                (num, den, true)
            }
            None => (BigInt::one(), BigInt::one(), false),
        };
        let mono = if !has_coeff || cur.eat('*') {
            cur.monomial(n)?
        } else if cur.starts_variable() {
            return Err(cur.err("expected `*` between coefficient and monomial"));
        } else {
            Monomial::one(n)
        };
        let c = field
            .from_ratio(&num, &den)
            .map_err(|e| Error::Parse { pos: base + coeff_at, msg: e.to_string() })?;
        out.add_term(mono, if negative { field.neg(&c) } else { c });
        if cur.at_end() {
            return Ok(out);
        }
    }
}

/// Comma-separated monomials in `x1..xn`; `1` is the constant monomial.
pub fn parse_monomials(text: &str, n: usize) -> Result<Vec<Monomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let mut cur = Cursor::new(piece, offset);
        if cur.at_end() {
            return Err(cur.err("empty monomial"));
        }
        let m = if cur.eat('1') {
            Monomial::one(n)
        } else {
            cur.monomial(n)?
        };
        if !cur.at_end() {
            return Err(cur.err("unexpected trailing input"));
        }
        out.push(m);
        offset += piece.len() + 1;
    }
    Ok(out)
}

pub fn parse_degrees(text: &str) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let mut cur = Cursor::new(piece, offset);
        out.push(cur.number("degree")?);
        if !cur.at_end() {
            return Err(cur.err("unexpected trailing input"));
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

/// System file: a `degrees: d1,..,dn` header followed by one polynomial per
/// line; `#` starts a comment. Parse positions are byte offsets in the file.
pub fn parse_system<F: Field>(text: &str, field: &F) -> Result<PolySystem<F>> {
    let mut degrees: Option<Vec<u32>> = None;
    let mut polys = Vec::new();
    let mut offset = 0;
    for (lineno, raw) in text.split_inclusive('\n').enumerate() {
        let start = offset;
        offset += raw.len();
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let at_line = |e: Error| match e {
            Error::Parse { pos, msg } => Error::Parse { pos, msg: format!("line {}: {msg}", lineno + 1) },
            other => other,
        };
        match &degrees {
            None => {
                let lead = line.len() - line.trim_start().len();
                let Some(rest) = line.trim_start().strip_prefix("degrees:") else {
                    return Err(Error::Parse { pos: start + lead, msg: format!("line {}: expected `degrees: d1,..,dn`", lineno + 1) });
                };
                let d = parse_degrees(rest).map_err(|e| shift(e, start + lead + "degrees:".len())).map_err(at_line)?;
                degrees = Some(d);
            }
            Some(d) => {
                let p = parse_poly_at(line, d.len(), field, start).map_err(at_line)?;
                polys.push(p);
            }
        }
    }
    let degrees = degrees.ok_or_else(|| Error::Input("system file has no `degrees:` header".into()))?;
    if polys.len() != degrees.len() {
        return Err(Error::Input(format!("{} degrees declared but {} polynomials given", degrees.len(), polys.len())));
    }
    PolySystem::new(polys, degrees)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}
