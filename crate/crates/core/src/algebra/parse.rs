//! Field specifications and the scalar expression syntax.
//!
//! Scalars are written as arithmetic over integers, the radical `r = √d` and the declared
//! parameter names: `3/2`, `1/2*r`, `(c-1)/(c+2)`, `2^-3`.

use serde::{Deserialize, Serialize};

use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::quad::{valid_radicand, Quad};
use crate::error::{Error, Result};

/// The scalar field: `Q(√d)` (`d = 0` for `Q`), up to two parameters, and the shift step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    #[serde(default)]
    pub d: i64,
    #[serde(default)]
    pub params: Vec<String>,
    #[serde(default = "default_h")]
    pub h: String,
}

fn default_h() -> String {
    "1".into()
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec { d: 0, params: vec![], h: default_h() }
    }
}

impl FieldSpec {
    pub fn rational() -> Self {
        Self::default()
    }
    pub fn quadratic(d: i64) -> Self {
        FieldSpec { d, ..Self::default() }
    }
    pub fn with_params(mut self, names: &[&str]) -> Self {
        self.params = names.iter().map(|s| s.to_string()).collect();
        self
    }
    pub fn validate(&self) -> Result<()> {
        if self.d != 0 && !valid_radicand(self.d) {
            return Err(Error::InvalidField(format!("radicand {} is not squarefree", self.d)));
        }
        if self.params.len() > 2 {
            return Err(Error::InvalidField("at most two parameters".into()));
        }
        for (i, p) in self.params.iter().enumerate() {
            let ok = p.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && p.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok || p == "r" || p == "x" || p == "inf" {
                return Err(Error::InvalidField(format!("bad parameter name {p:?}")));
            }
            if self.params[..i].contains(p) {
                return Err(Error::InvalidField(format!("duplicate parameter {p:?}")));
            }
        }
        Ok(())
    }
    pub fn parse<F: Field>(&self, s: &str) -> Result<F> {
        parse_scalar(s, &self.params, self.d)
    }
    /// A polynomial in `x` over `F`, in the scalar syntax extended by the variable `x`.
    pub fn parse_poly<F: Field>(&self, s: &str) -> Result<Poly<F>> {
        let mut names = self.params.clone();
        while names.len() < F::LEVELS {
            names.push(format!("_p{}", names.len()));
        }
        names.truncate(F::LEVELS);
        names.push("x".into());
        let f: RatFunc<F> = parse_scalar(s, &names, self.d)?;
        f.as_poly().cloned().ok_or_else(|| Error::Parse(format!("{s:?} is not a polynomial in x")))
    }
    /// Names for rendering: the parameters followed by `x`.
    pub fn names(&self) -> Vec<String> {
        self.params.clone()
    }
    pub fn step<F: Field>(&self) -> Result<F> {
        let h: F = self.parse(&self.h)?;
        if h.is_zero() {
            return Err(Error::InvalidField("shift step h must be nonzero".into()));
        }
        Ok(h)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse().map_err(|_| Error::Parse(format!("integer too large: {t}")))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_ascii_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    names: &'a [String],
    d: i64,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }
    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
    fn expr<F: Field>(&mut self) -> Result<F> {
        let mut v = self.term::<F>()?;
        loop {
            if self.eat('+') {
                v = v + self.term::<F>()?;
            } else if self.eat('-') {
                v = v - self.term::<F>()?;
            } else {
                return Ok(v);
            }
        }
    }
    fn term<F: Field>(&mut self) -> Result<F> {
        let mut v = self.unary::<F>()?;
        loop {
            if self.eat('*') {
                v = v * self.unary::<F>()?;
            } else if self.eat('/') {
                let w = self.unary::<F>()?;
                let inv = w.inv().ok_or_else(|| Error::Parse("division by zero".into()))?;
                v = v * inv;
            } else {
                return Ok(v);
            }
        }
    }
    fn unary<F: Field>(&mut self) -> Result<F> {
        if self.eat('-') {
            return Ok(-self.unary::<F>()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }
    fn power<F: Field>(&mut self) -> Result<F> {
        let b = self.primary::<F>()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let Some(Tok::Num(e)) = self.peek().cloned() else {
                return Err(Error::Parse("exponent must be an integer".into()));
            };
            self.pos += 1;
            let e = if neg { -e } else { e };
            if e < 0 && b.is_zero() {
                return Err(Error::Parse("division by zero".into()));
            }
            return Ok(b.pow(e));
        }
        Ok(b)
    }
    fn primary<F: Field>(&mut self) -> Result<F> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(F::from_int(n))
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                if id == "r" {
                    if self.d == 0 {
                        return Err(Error::Parse("radical r used over Q".into()));
                    }
                    return Ok(F::from_quad(&Quad::sqrt_of(self.d)));
                }
                let lvl = self
                    .names
                    .iter()
                    .position(|n| *n == id)
                    .ok_or_else(|| Error::Parse(format!("unknown symbol {id:?}")))?;
                F::generator(lvl).ok_or_else(|| Error::Parse(format!("parameter {id:?} not in this field")))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Parse("missing ')'".into()));
                }
                Ok(v)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub fn parse_scalar<F: Field>(s: &str, names: &[String], d: i64) -> Result<F> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let mut p = Parser { toks, pos: 0, names, d };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in {s:?}")));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Q1, Q2};

    #[test]
    fn parse_basic() {
        let v: Quad = parse_scalar("1/2*r - 3/4", &[], 2).unwrap();
        assert_eq!(v.render(&[]), "-3/4+1/2*r");
        let w: Quad = parse_scalar("2^-3", &[], 0).unwrap();
        assert_eq!(w, Quad::frac(1, 8));
    }

    #[test]
    fn roundtrip_params() {
        let names = vec!["c".to_string(), "q".to_string()];
        let v: Q2 = parse_scalar("(c-1)/(q^2+c)*r", &names, -3).unwrap();
        let s = v.render(&names);
        let w: Q2 = parse_scalar(&s, &names, -3).unwrap();
        assert_eq!(v, w);
        let one = vec!["c".to_string()];
        assert!(parse_scalar::<Q1>("x", &one, 0).is_err());
        assert_eq!(parse_scalar::<Q1>("c*c", &one, 0).unwrap(), Q1::generator(0).unwrap().pow(2));
    }

    #[test]
    fn parse_polynomials() {
        let f = FieldSpec::rational();
        let p: Poly<Quad> = f.parse_poly("x^2 - 2*x + 3").unwrap();
        assert_eq!(p, Poly::from_ints(&[3, -2, 1]));
        assert!(f.parse_poly::<Quad>("1/x").is_err());
        let g = FieldSpec::rational().with_params(&["c"]);
        let q: Poly<Q1> = g.parse_poly("(x-c)*(x+1)").unwrap();
        assert_eq!(q.render_in("x", &g.names()), "x^2+(-c+1)*x-c");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar::<Quad>("1//2", &[], 0).is_err());
        assert!(parse_scalar::<Quad>("r", &[], 0).is_err());
        assert!(parse_scalar::<Quad>("1/0", &[], 0).is_err());
        assert!(parse_scalar::<Quad>("c", &["c".into()], 0).is_err());
        assert!(FieldSpec::quadratic(8).validate().is_err());
    }
}
