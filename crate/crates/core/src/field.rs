//! Exact scalar fields used by the symbolic layer.
//!
//! `Q` is the rationals, `QSqrt2` is Q(√2) and `Cplx<F>` adjoins i to `F`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_to_f64(x: &Q) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => Some(Q::from_integer(s.parse().ok()?)),
    }
}

pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_q(x: Q) -> Self;
    fn to_c64(&self) -> Complex64;
    /// Named constants available to the expression evaluator.
    fn constant(_name: &str) -> Option<Self> {
        None
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
    fn from_i64(n: i64) -> Self {
        Self::from_q(q(n))
    }
    fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r * self.clone();
        }
        r
    }
}

impl Field for Q {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_q(x: Q) -> Self {
        x
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(q_to_f64(self), 0.0)
    }
}

/// `a + b√2` with rational `a`, `b`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSqrt2 {
    pub a: Q,
    pub b: Q,
}

impl QSqrt2 {
    pub fn new(a: Q, b: Q) -> Self {
        QSqrt2 { a, b }
    }
    pub fn sqrt2() -> Self {
        QSqrt2::new(q(0), q(1))
    }
    pub fn conj(&self) -> Self {
        QSqrt2::new(self.a.clone(), -self.b.clone())
    }
    /// Field norm a² − 2b².
    pub fn norm(&self) -> Q {
        &self.a * &self.a - q(2) * &self.b * &self.b
    }
    pub fn to_f64(&self) -> f64 {
        q_to_f64(&self.a) + q_to_f64(&self.b) * std::f64::consts::SQRT_2
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.b) {
            write!(f, "{}", fmt_q(&self.a))
        } else if Zero::is_zero(&self.a) {
            write!(f, "{}*sqrt2", fmt_q(&self.b))
        } else {
            write!(f, "({} + {}*sqrt2)", fmt_q(&self.a), fmt_q(&self.b))
        }
    }
}

impl Add for QSqrt2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        QSqrt2::new(self.a + o.a, self.b + o.b)
    }
}
impl Sub for QSqrt2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        QSqrt2::new(self.a - o.a, self.b - o.b)
    }
}
impl Mul for QSqrt2 {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        QSqrt2::new(
            &self.a * &o.a + q(2) * &self.b * &o.b,
            &self.a * &o.b + &self.b * &o.a,
        )
    }
}
impl Neg for QSqrt2 {
    type Output = Self;
    fn neg(self) -> Self {
        QSqrt2::new(-self.a, -self.b)
    }
}

impl Field for QSqrt2 {
    fn zero() -> Self {
        QSqrt2::new(q(0), q(0))
    }
    fn one() -> Self {
        QSqrt2::new(q(1), q(0))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn inv(&self) -> Option<Self> {
        // √2 is irrational so the norm vanishes only at zero.
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        let c = self.conj();
        Some(QSqrt2::new(c.a / &n, c.b / &n))
    }
    fn from_q(x: Q) -> Self {
        QSqrt2::new(x, q(0))
    }
    fn to_c64(&self) -> Complex64 {
        Complex64::new(self.to_f64(), 0.0)
    }
    fn constant(name: &str) -> Option<Self> {
        (name == "sqrt2").then(QSqrt2::sqrt2)
    }
}

/// `re + i·im` over a real field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cplx<F> {
    pub re: F,
    pub im: F,
}

impl<F: Field> Cplx<F> {
    pub fn new(re: F, im: F) -> Self {
        Cplx { re, im }
    }
    pub fn real(re: F) -> Self {
        Cplx { re, im: F::zero() }
    }
    pub fn i() -> Self {
        Cplx::new(F::zero(), F::one())
    }
    pub fn conj(&self) -> Self {
        Cplx::new(self.re.clone(), -self.im.clone())
    }
}

impl<F: Field> fmt::Display for Cplx<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}*i", self.im)
        } else {
            write!(f, "({} + {}*i)", self.re, self.im)
        }
    }
}

impl<F: Field> Add for Cplx<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Cplx::new(self.re + o.re, self.im + o.im)
    }
}
impl<F: Field> Sub for Cplx<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Cplx::new(self.re - o.re, self.im - o.im)
    }
}
impl<F: Field> Mul for Cplx<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Cplx::new(
            self.re.clone() * o.re.clone() - self.im.clone() * o.im.clone(),
            self.re * o.im + self.im * o.re,
        )
    }
}
impl<F: Field> Neg for Cplx<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Cplx::new(-self.re, -self.im)
    }
}

impl<F: Field> Field for Cplx<F> {
    fn zero() -> Self {
        Cplx::new(F::zero(), F::zero())
    }
    fn one() -> Self {
        Cplx::new(F::one(), F::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inv(&self) -> Option<Self> {
        let n = self.re.clone() * self.re.clone() + self.im.clone() * self.im.clone();
        let ni = n.inv()?;
        Some(Cplx::new(self.re.clone() * ni.clone(), -self.im.clone() * ni))
    }
    fn from_q(x: Q) -> Self {
        Cplx::real(F::from_q(x))
    }
    fn to_c64(&self) -> Complex64 {
        let r = self.re.to_c64();
        let i = self.im.to_c64();
        Complex64::new(r.re - i.im, r.im + i.re)
    }
    fn constant(name: &str) -> Option<Self> {
        if name == "i" {
            return Some(Cplx::i());
        }
        F::constant(name).map(Cplx::real)
    }
}

pub type CQ = Cplx<Q>;
pub type CQ2 = Cplx<QSqrt2>;

pub fn is_negative(x: &Q) -> bool {
    x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt2_squares_to_two() {
        let s = QSqrt2::sqrt2();
        assert_eq!(s.clone() * s, QSqrt2::from_i64(2));
    }

    #[test]
    fn qsqrt2_inverse() {
        let x = QSqrt2::new(q(3), q(-2));
        let y = x.inv().unwrap();
        assert_eq!(x * y, QSqrt2::one());
    }

    #[test]
    fn complex_i_squared() {
        let i = CQ::i();
        assert_eq!(i.clone() * i, -CQ::one());
        let z = CQ::new(q(1), q(2));
        assert_eq!(z.clone() * z.inv().unwrap(), CQ::one());
    }

    #[test]
    fn parse_and_format_rationals() {
        assert_eq!(parse_q("-3/6").unwrap(), qf(-1, 2));
        assert_eq!(fmt_q(&qf(4, 2)), "2");
        assert_eq!(fmt_q(&qf(-1, 2)), "-1/2");
        assert!(parse_q("1/0").is_none());
    }
}
