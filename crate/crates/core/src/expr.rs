//! A small expression language for catalog data.
//!
//! Expressions such as `e1 - 1/2*e6 + a*e8` mix scalar parameters with basis
//! labels. Identifiers are resolved by an [`Env`] at evaluation time.

use crate::field::{Field, Q};
use num_bigint::BigInt;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExprError {
    #[error("parse error in `{src}`: {msg}")]
    Parse { src: String, msg: String },
    #[error("unknown identifier `{0}`")]
    Unknown(String),
    #[error("type error: {0}")]
    Type(String),
    #[error("division by zero")]
    DivZero,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(BigInt),
    Ident(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value<F> {
    Scalar(F),
    Vector(Vec<F>),
}

impl<F: Field> Value<F> {
    pub fn scalar(self) -> Result<F, ExprError> {
        match self {
            Value::Scalar(s) => Ok(s),
            Value::Vector(_) => Err(ExprError::Type("expected a scalar".into())),
        }
    }
    pub fn vector(self) -> Result<Vec<F>, ExprError> {
        match self {
            Value::Vector(v) => Ok(v),
            Value::Scalar(_) => Err(ExprError::Type("expected a vector".into())),
        }
    }
}

/// Resolves identifiers to values.
pub trait Env<F> {
    fn lookup(&self, name: &str) -> Option<Value<F>>;
}

/// Environment made of basis labels (unit vectors) and named scalars.
pub struct BasisEnv<'a, F> {
    pub labels: &'a [String],
    pub scalars: &'a [(String, F)],
}

impl<F: Field> Env<F> for BasisEnv<'_, F> {
    fn lookup(&self, name: &str) -> Option<Value<F>> {
        if let Some((_, v)) = self.scalars.iter().find(|(n, _)| n == name) {
            return Some(Value::Scalar(v.clone()));
        }
        if let Some(i) = self.labels.iter().position(|l| l == name) {
            let mut v = vec![F::zero(); self.labels.len()];
            v[i] = F::one();
            return Some(Value::Vector(v));
        }
        F::constant(name).map(Value::Scalar)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Tok>, ExprError> {
    let err = |msg: String| ExprError::Parse { src: src.to_string(), msg };
    let chars: Vec<char> = src.chars().map(|c| if c == '−' { '-' } else { c }).collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = chars[s..i].iter().collect();
            out.push(Tok::Num(t.parse().map_err(|_| err(format!("bad number {t}")))?));
        } else if c.is_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[s..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(err(format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ExprError {
        ExprError::Parse { src: self.src.to_string(), msg: msg.to_string() }
    }
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
    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }
    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }
    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }
    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => Err(self.err("expected integer exponent")),
            }
        } else {
            Ok(base)
        }
    }
    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Ident(s))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("missing `)`"));
                }
                Ok(e)
            }
            _ => Err(self.err("unexpected end or token")),
        }
    }
}

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0, src };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

impl Expr {
    pub fn eval<F: Field>(&self, env: &dyn Env<F>) -> Result<Value<F>, ExprError> {
        use Value::*;
        Ok(match self {
            Expr::Num(n) => Scalar(F::from_q(Q::from_integer(n.clone()))),
            Expr::Ident(s) => env.lookup(s).ok_or_else(|| ExprError::Unknown(s.clone()))?,
            Expr::Neg(e) => match e.eval(env)? {
                Scalar(s) => Scalar(-s),
                Vector(v) => Vector(v.into_iter().map(|x| -x).collect()),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let neg = matches!(self, Expr::Sub(..));
                match (a.eval(env)?, b.eval(env)?) {
                    (Scalar(x), Scalar(y)) => Scalar(if neg { x - y } else { x + y }),
                    (Vector(x), Vector(y)) if x.len() == y.len() => Vector(
                        x.into_iter()
                            .zip(y)
                            .map(|(p, q)| if neg { p - q } else { p + q })
                            .collect(),
                    ),
                    _ => return Err(ExprError::Type("cannot add scalar and vector".into())),
                }
            }
            Expr::Mul(a, b) => match (a.eval(env)?, b.eval(env)?) {
                (Scalar(x), Scalar(y)) => Scalar(x * y),
                (Scalar(s), Vector(v)) | (Vector(v), Scalar(s)) => {
                    Vector(v.into_iter().map(|x| s.clone() * x).collect())
                }
                _ => return Err(ExprError::Type("cannot multiply two vectors".into())),
            },
            Expr::Div(a, b) => {
                let d = b.eval(env)?.scalar()?;
                let inv = d.inv().ok_or(ExprError::DivZero)?;
                match a.eval(env)? {
                    Scalar(x) => Scalar(x * inv),
                    Vector(v) => Vector(v.into_iter().map(|x| x * inv.clone()).collect()),
                }
            }
            Expr::Pow(a, n) => Scalar(a.eval(env)?.scalar()?.pow(*n)),
        })
    }

    /// Identifiers occurring in the expression.
    pub fn idents(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Ident(s) => {
                out.insert(s.clone());
            }
            Expr::Neg(e) | Expr::Pow(e, _) => e.collect(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect(out);
                b.collect(out);
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(n) => write!(f, "{n}"),
            Expr::Ident(s) => write!(f, "{s}"),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/({b})"),
            Expr::Pow(a, n) => write!(f, "({a})^{n}"),
        }
    }
}

/// Parses and evaluates in one step.
pub fn eval_str<F: Field>(src: &str, env: &dyn Env<F>) -> Result<Value<F>, ExprError> {
    parse(src)?.eval(env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{q, qf, QSqrt2};

    fn labels() -> Vec<String> {
        (1..=4).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn vector_expression() {
        let l = labels();
        let s = vec![("a".to_string(), q(3))];
        let env = BasisEnv { labels: &l, scalars: &s };
        let v = eval_str::<Q>("e1 - 1/2*e2 + a*(e3 - e4)", &env).unwrap().vector().unwrap();
        assert_eq!(v, vec![q(1), qf(-1, 2), q(3), q(-3)]);
    }

    #[test]
    fn scalar_expression_with_powers() {
        let l = labels();
        let s = vec![("c".to_string(), q(2)), ("d".to_string(), q(-1))];
        let env = BasisEnv { labels: &l, scalars: &s };
        let x = eval_str::<Q>("(c^3*d - c*d)/(2*c)", &env).unwrap().scalar().unwrap();
        assert_eq!(x, qf(-3, 2));
    }

    #[test]
    fn sqrt2_constant() {
        let l = labels();
        let env = BasisEnv::<QSqrt2> { labels: &l, scalars: &[] };
        let x = eval_str::<QSqrt2>("sqrt2*sqrt2", &env).unwrap().scalar().unwrap();
        assert_eq!(x, QSqrt2::from_i64(2));
    }

    #[test]
    fn errors() {
        let l = labels();
        let env = BasisEnv::<Q> { labels: &l, scalars: &[] };
        assert!(matches!(eval_str::<Q>("e1*e2", &env), Err(ExprError::Type(_))));
        assert!(matches!(eval_str::<Q>("zz", &env), Err(ExprError::Unknown(_))));
        assert!(matches!(eval_str::<Q>("e1/0", &env), Err(ExprError::DivZero)));
        assert!(parse("(e1").is_err());
        assert_eq!(parse("a*e1 + b").unwrap().idents().len(), 3);
    }
}
