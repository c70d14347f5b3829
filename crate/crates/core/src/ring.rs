//! The two coefficient worlds identity builders run in.
//!
//! Every summand is written once, generically over [`Ring`], and instantiated
//! twice: over [`Polynomial`] for full symbolic expansion and over [`Rational`]
//! for direct exact evaluation at a point. The numeric path never expands a
//! polynomial, so it is an independent check of the symbolic one.

use crate::error::{Error, Result};
use crate::poly::{Assignment, Polynomial};
use crate::rational::Rational;

pub trait Ring: Clone + PartialEq + std::fmt::Debug + std::fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(c: Rational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale(&self, c: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// Storage size used for the term budget (monomial count).
    fn size(&self) -> usize;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(n))
    }

    /// `self^e`, with `0^0 = 1`.
    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn add_int(&self, n: i64) -> Self {
        if n == 0 {
            self.clone()
        } else {
            self.add(&Self::from_int(n))
        }
    }
}

impl Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn from_rational(c: Rational) -> Self {
        Polynomial::constant(c)
    }
    fn add(&self, other: &Self) -> Self {
        Polynomial::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Polynomial::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Polynomial::mul(self, other)
    }
    fn neg(&self) -> Self {
        Polynomial::neg(self)
    }
    fn scale(&self, c: &Rational) -> Self {
        Polynomial::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn size(&self) -> usize {
        self.len()
    }
    fn pow(&self, e: u32) -> Self {
        Polynomial::pow(self, e)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_rational(c: Rational) -> Self {
        c
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale(&self, c: &Rational) -> Self {
        self * c
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn size(&self) -> usize {
        1
    }
}

/// Supplies the meaning of named variables in a ring.
pub trait Env<R: Ring>: Sync {
    fn var(&self, name: &str) -> Result<R>;
    /// `q^e` for any integer `e`.
    fn q_power(&self, e: i64) -> Result<R>;
    /// Maps a kernel polynomial (e.g. a Gaussian binomial) into the ring.
    fn lift(&self, p: &Polynomial) -> Result<R>;
}

/// Variables stay indeterminates.
#[derive(Debug, Clone, Copy, Default)]
pub struct Symbolic;

impl Env<Polynomial> for Symbolic {
    fn var(&self, name: &str) -> Result<Polynomial> {
        Polynomial::var(name)
    }
    fn q_power(&self, e: i64) -> Result<Polynomial> {
        Ok(Polynomial::q_power(e))
    }
    fn lift(&self, p: &Polynomial) -> Result<Polynomial> {
        Ok(p.clone())
    }
}

/// Variables take fixed rational values.
#[derive(Debug, Clone, Default)]
pub struct Point(pub Assignment);

impl Env<Rational> for Point {
    fn var(&self, name: &str) -> Result<Rational> {
        self.0
            .get(name)
            .cloned()
            .ok_or_else(|| Error::MissingVariable(name.to_string()))
    }
    fn q_power(&self, e: i64) -> Result<Rational> {
        self.var(crate::poly::Q)?.pow(e)
    }
    fn lift(&self, p: &Polynomial) -> Result<Rational> {
        p.eval(&self.0)
    }
}
