//! Reading F-functions from text.
//!
//! Polynomials use `+ - * ^ ( )`, juxtaposition for products, integers,
//! `w` for the generator of F_4 and the variables `x y X Y`. A data file
//! has `key: value` headers `case`, `name`, `num`, `den` and optionally
//! `offset`; a line without a known key continues the previous value and
//! `#` starts a comment.

use super::{FFunction, FPoly};
use crate::curve::{Curve, CurveId};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
enum Tok {
    Num(u64),
    Var(char),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut n = 0u64;
            while let Some(&d) = chars.peek() {
                let Some(v) = d.to_digit(10) else { break };
                n = n.checked_mul(10).and_then(|n| n.checked_add(v as u64)).ok_or_else(|| Error::Parse("integer too large".into()))?;
                chars.next();
            }
            out.push(Tok::Num(n));
        } else if "xyXYw".contains(c) {
            out.push(Tok::Var(c));
            chars.next();
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            chars.next();
        } else {
            return Err(Error::Parse(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    curve: Curve,
    toks: &'a [Tok],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<FPoly> {
        let mut acc = FPoly::zero(self.curve);
        let mut sign = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(Tok::Op('+')) => sign = 1,
                Some(Tok::Op('-')) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<FPoly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::Op('(')) => {}
                _ => return Ok(acc),
            }
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
    }

    fn factor(&mut self) -> Result<FPoly> {
        let mut base = self.atom()?;
        while self.peek() == Some(Tok::Op('^')) {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    base = base.pow(n);
                }
                _ => return Err(Error::Parse("exponent must be a non-negative integer".into())),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FPoly> {
        let c = self.curve;
        let t = self.peek().ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        match t {
            Tok::Num(n) => {
                let a = c.field.from_int((n % c.field.p() as u64) as i64);
                Ok(FPoly::one(c).scale(a))
            }
            Tok::Var('w') => {
                if c.q() != 4 {
                    return Err(Error::Parse(format!("`w` needs F_4, not F_{}", c.q())));
                }
                Ok(FPoly::one(c).scale(2))
            }
            Tok::Var('x') => Ok(FPoly::x(c)),
            Tok::Var('X') => Ok(FPoly::big_x(c)),
            Tok::Var(v @ ('y' | 'Y')) => {
                if !c.has_y() {
                    return Err(Error::Parse(format!("`{v}` on a ring without y")));
                }
                Ok(if v == 'y' { FPoly::y(c) } else { FPoly::big_y(c) })
            }
            Tok::Op('(') => {
                let e = self.expr()?;
                if self.peek() != Some(Tok::Op(')')) {
                    return Err(Error::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a polynomial expression in `x, y, X, Y`.
pub fn parse_fpoly(curve: Curve, s: &str) -> Result<FPoly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { curve, toks: &toks, pos: 0 };
    let out = p.expr()?;
    if p.pos != toks.len() {
        return Err(Error::Parse(format!("trailing input after token {}", p.pos)));
    }
    Ok(out)
}

/// A parsed data file.
#[derive(Clone, Debug)]
pub struct FFunctionFile {
    pub curve: Curve,
    pub name: String,
    pub function: FFunction,
}

/// Parse the text of an F-function data file.
pub fn ff_parse(text: &str) -> Result<FFunctionFile> {
    let mut fields: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap();
        if line.trim().is_empty() {
            continue;
        }
        let key = line.split_once(':').map(|(k, v)| (k.trim(), v));
        match key {
            Some((k, v)) if ["case", "name", "num", "den", "offset"].contains(&k) => {
                if fields.iter().any(|(f, _)| f == k) {
                    return Err(Error::Parse(format!("duplicate `{k}`")));
                }
                fields.push((k.to_string(), v.trim().to_string()));
            }
            _ => match fields.last_mut() {
                Some((_, v)) => {
                    v.push(' ');
                    v.push_str(line.trim());
                }
                None => return Err(Error::Parse(format!("text before the first key: `{}`", line.trim()))),
            },
        }
    }
    let get = |k: &str| fields.iter().find(|(f, _)| f == k).map(|(_, v)| v.as_str());
    let need = |k: &str| get(k).ok_or_else(|| Error::Parse(format!("missing `{k}`")));
    let curve = Curve::builtin(CurveId::parse(need("case")?)?);
    let name = need("name")?.to_string();
    let num = parse_fpoly(curve, need("num")?)?;
    let den = parse_fpoly(curve, get("den").unwrap_or("1"))?;
    let offset = match get("offset") {
        None => 0,
        Some(s) => s.parse::<i32>().map_err(|_| Error::Parse(format!("bad offset `{s}`")))?,
    };
    let function = FFunction::from_parts_at(num, den, offset)?;
    Ok(FFunctionFile { curve, name, function })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expressions() {
        let c = Curve::builtin(CurveId::CaseI);
        let a = parse_fpoly(c, "(X + x)^2 - 3 x X").unwrap();
        let b = parse_fpoly(c, "X^2 + x*X + x^2").unwrap();
        assert_eq!(a, b);
        // y^2 + y = x^3 + x + 1
        assert_eq!(parse_fpoly(c, "y^2 + y").unwrap(), parse_fpoly(c, "x^3+x+1").unwrap());
        assert_eq!(parse_fpoly(c, "Y Y").unwrap(), parse_fpoly(c, "Y + X^3 + X + 1").unwrap());
        assert!(parse_fpoly(c, "w x").is_err());
        assert!(parse_fpoly(c, "(x").is_err());
        assert!(parse_fpoly(c, "x +").is_err());
        assert!(parse_fpoly(c, "").is_err());
    }

    #[test]
    fn file_format() {
        let text = "# comment\ncase: case-iii\nname: demo\nnum: w X\n  + x\nden: X^4 + x\n";
        let f = ff_parse(text).unwrap();
        assert_eq!(f.name, "demo");
        let c = f.curve;
        let num = parse_fpoly(c, "w X + x").unwrap();
        let den = parse_fpoly(c, "X^4 + x").unwrap();
        assert_eq!(f.function, FFunction::from_parts(num, den).unwrap());
        assert!(ff_parse("name: a\nnum: x").is_err());
        assert!(ff_parse("case: case-i\nname: a\nname: b\nnum: x").is_err());
    }
}
