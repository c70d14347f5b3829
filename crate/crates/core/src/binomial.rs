//! Binomial, multinomial and Gaussian coefficients with exact arithmetic.
//!
//! The generic functions (`falling`, `binom`, `multinomial`) work in any
//! [`Ring`], so identity summands can use them both symbolically and at a
//! numeric point. The `*_poly` / `*_int` wrappers are the polynomial- and
//! integer-typed entry points.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Q};
use crate::rational::Rational;
use crate::ring::Ring;

/// Integer vector `(k_1, ..., k_m)` used as a multi-index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VecIndex(Vec<i64>);

impl VecIndex {
    pub fn new(components: Vec<i64>) -> Self {
        VecIndex(components)
    }

    pub fn zeros(m: usize) -> Self {
        VecIndex(vec![0; m])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    /// `|k|`, the component sum.
    pub fn norm(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn check_nonnegative(&self) -> Result<()> {
        match self.0.iter().position(|&c| c < 0) {
            Some(index) => Err(Error::NegativeComponent { index, value: self.0[index] }),
            None => Ok(()),
        }
    }

    pub fn check_dim(&self, other: &VecIndex) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }

    /// `k ≤ n` componentwise.
    pub fn le(&self, other: &VecIndex) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn sub(&self, other: &VecIndex) -> Result<VecIndex> {
        self.check_dim(other)?;
        Ok(VecIndex(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn add(&self, other: &VecIndex) -> Result<VecIndex> {
        self.check_dim(other)?;
        Ok(VecIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect()))
    }
}

impl From<Vec<i64>> for VecIndex {
    fn from(v: Vec<i64>) -> Self {
        VecIndex(v)
    }
}

impl<const N: usize> From<[i64; N]> for VecIndex {
    fn from(v: [i64; N]) -> Self {
        VecIndex(v.to_vec())
    }
}

impl fmt::Display for VecIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for VecIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for VecIndex {
    type Err = Error;

    /// Parses `(2,1)`, `(3,)` or `(3)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { input: s.to_string(), reason: "expected a vector like (2,1)".into() };
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
        let parts = match parts.as_slice() {
            [head @ .., ""] if !head.is_empty() => head,
            all => all,
        };
        let comps = parts
            .iter()
            .map(|p| p.parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if comps.is_empty() {
            return Err(bad());
        }
        Ok(VecIndex(comps))
    }
}

static FACTORIALS: LazyLock<RwLock<Vec<BigInt>>> = LazyLock::new(|| RwLock::new(vec![BigInt::one()]));

/// `n!` for `n ≥ 0`, memoized across calls.
pub fn factorial(n: u32) -> BigInt {
    let n = n as usize;
    {
        let table = FACTORIALS.read().expect("factorial table poisoned");
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = FACTORIALS.write().expect("factorial table poisoned");
    while table.len() <= n {
        let next = table.last().expect("nonempty") * BigInt::from(table.len());
        table.push(next);
    }
    table[n].clone()
}

/// `k!` for a multi-index: the product of component factorials.
pub fn vec_factorial(k: &VecIndex) -> Result<BigInt> {
    k.check_nonnegative()?;
    Ok(k.components().iter().map(|&c| factorial(c as u32)).product())
}

/// `p (p-1) ... (p-k+1)`; the empty product for `k = 0` is 1.
pub fn falling<R: Ring>(p: &R, k: u32) -> R {
    (0..k as i64).fold(R::one(), |acc, i| acc.mul(&p.add_int(-i)))
}

/// `C(p, k)` for integer `k`; zero when `k < 0`.
pub fn binom<R: Ring>(p: &R, k: i64) -> R {
    if k < 0 {
        return R::zero();
    }
    let k = k as u32;
    let inv = Rational::new(1, factorial(k)).expect("factorial is positive");
    falling(p, k).scale(&inv)
}

/// Multinomial `C(p, n) = p (p-1) ... (p-|n|+1) / n!` for `n ∈ ℕ^m`, zero
/// otherwise.
pub fn multinomial<R: Ring>(p: &R, n: &VecIndex) -> R {
    if !n.is_nonnegative() {
        return R::zero();
    }
    let denom = vec_factorial(n).expect("checked nonnegative");
    let inv = Rational::new(1, denom).expect("factorial is positive");
    falling(p, n.norm() as u32).scale(&inv)
}

/// `b_1^{k_1} ... b_m^{k_m}`.
pub fn vec_power<R: Ring>(bases: &[R], k: &VecIndex) -> Result<R> {
    if bases.len() != k.dim() {
        return Err(Error::DimensionMismatch(bases.len(), k.dim()));
    }
    k.check_nonnegative()?;
    Ok(bases.iter().zip(k.components()).fold(R::one(), |acc, (b, &e)| acc.mul(&b.pow(e as u32))))
}

/// `k_1 b_1 + ... + k_m b_m`.
pub fn vec_dot<R: Ring>(bases: &[R], k: &VecIndex) -> Result<R> {
    if bases.len() != k.dim() {
        return Err(Error::DimensionMismatch(bases.len(), k.dim()));
    }
    Ok(bases
        .iter()
        .zip(k.components())
        .fold(R::zero(), |acc, (b, &c)| acc.add(&b.scale(&Rational::from(c)))))
}

pub fn falling_factorial(p: &Polynomial, k: u32) -> Polynomial {
    falling(p, k)
}

pub fn binom_poly(p: &Polynomial, k: i64) -> Polynomial {
    binom(p, k)
}

/// `C(a, k)` for integers, with the generalized upper index
/// (`C(-a, k) = (-1)^k C(a+k-1, k)` holds by construction).
pub fn binom_int(a: i64, k: i64) -> Rational {
    binom(&Rational::from(a), k)
}

pub fn multinomial_poly(p: &Polynomial, n: &VecIndex) -> Polynomial {
    multinomial(p, n)
}

/// `∏ C(n_i, k_i)`.
pub fn vec_binom(n: &VecIndex, k: &VecIndex) -> Result<Rational> {
    n.check_dim(k)?;
    Ok(n.components()
        .iter()
        .zip(k.components())
        .fold(Rational::one(), |acc, (&a, &b)| &acc * &binom_int(a, b)))
}

pub fn vec_monomial(z_vars: &[&str], k: &VecIndex) -> Result<Polynomial> {
    if z_vars.len() != k.dim() {
        return Err(Error::DimensionMismatch(z_vars.len(), k.dim()));
    }
    k.check_nonnegative()?;
    let m = Monomial::new(z_vars.iter().copied().zip(k.components().iter().copied()))?;
    Ok(Polynomial::term(Rational::one(), m))
}

pub fn dot_product(z_vars: &[&str], k: &VecIndex) -> Result<Polynomial> {
    let vars = z_vars.iter().map(|v| Polynomial::var(v)).collect::<Result<Vec<_>>>()?;
    vec_dot(&vars, k)
}

/// `(a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})`, with `q` the variable `q`.
pub fn q_pochhammer(a: &Polynomial, n: u32) -> Polynomial {
    (0..n as i64).fold(Polynomial::one(), |acc, i| {
        let factor = Polynomial::one().sub(&a.mul(&Polynomial::q_power(i)));
        acc.mul(&factor)
    })
}

/// Laurent monomial `q^e`.
pub fn q_power_exponent(e: i64) -> Polynomial {
    Polynomial::q_power(e)
}

/// Gaussian binomial `[alpha, k] = (q^{alpha-k+1};q)_k / (q;q)_k`, zero for
/// `k < 0`. The quotient is computed by exact division of Laurent
/// polynomials in `q`.
pub fn gauss_binom(alpha: i64, k: i64) -> Result<Polynomial> {
    if k < 0 {
        return Ok(Polynomial::zero());
    }
    let k = k as u32;
    let numer = q_pochhammer(&Polynomial::q_power(alpha - k as i64 + 1), k);
    let denom = q_pochhammer(&Polynomial::q_power(1), k);
    div_exact_in_q(&numer, &denom)
}

type Laurent = BTreeMap<i64, Rational>;

fn to_laurent(p: &Polynomial) -> Result<Laurent> {
    let mut out = Laurent::new();
    for (m, c) in p.terms() {
        let e = m.exponent(Q);
        if m.exponents().len() > 1 || (!m.is_one() && e == 0) {
            return Err(Error::InexactDivision(format!("{p} is not a polynomial in q alone")));
        }
        out.insert(e, c.clone());
    }
    Ok(out)
}

fn from_laurent(l: &Laurent) -> Polynomial {
    Polynomial::from_terms(l.iter().map(|(&e, c)| (c.clone(), Monomial::var(Q, e).expect("q"))))
}

/// Exact quotient `numer / denom` of Laurent polynomials in `q`; a nonzero
/// remainder is an error.
pub fn div_exact_in_q(numer: &Polynomial, denom: &Polynomial) -> Result<Polynomial> {
    let n = to_laurent(numer)?;
    let d = to_laurent(denom)?;
    let (&d_low, _) = d.iter().next().ok_or(Error::DivisionByZero)?;
    if n.is_empty() {
        return Ok(Polynomial::zero());
    }
    let n_low = *n.keys().next().expect("nonempty");
    // shift both to ordinary polynomials with a nonzero constant term in d
    let mut rem: Laurent = n.iter().map(|(e, c)| (e - n_low, c.clone())).collect();
    let d: Laurent = d.iter().map(|(e, c)| (e - d_low, c.clone())).collect();
    let (&d_deg, d_lead) = d.iter().next_back().expect("nonempty");
    let mut quot = Laurent::new();
    while let Some((&r_deg, r_lead)) = rem.iter().next_back() {
        if r_deg < d_deg {
            break;
        }
        let c = r_lead.checked_div(d_lead)?;
        let shift = r_deg - d_deg;
        for (e, dc) in &d {
            let slot = rem.entry(e + shift).or_insert_with(Rational::zero);
            *slot = &*slot - &(&c * dc);
            if slot.is_zero() {
                rem.remove(&(e + shift));
            }
        }
        quot.insert(shift, c);
    }
    if !rem.is_empty() {
        return Err(Error::InexactDivision(from_laurent(&rem).to_string()));
    }
    let offset = n_low - d_low;
    let shifted: Laurent = quot.into_iter().map(|(e, c)| (e + offset, c)).collect();
    Ok(from_laurent(&shifted))
}

/// `k!` as a rational, for callers composing their own coefficients.
pub fn factorial_rational(n: u32) -> Rational {
    Rational::from(factorial(n))
}

/// True when `C(a, k)` for nonnegative integer `a` vanishes.
pub fn binom_int_vanishes(a: i64, k: i64) -> bool {
    k < 0 || (a >= 0 && k > a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn r(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn falling_examples() {
        assert_eq!(falling_factorial(&p("x"), 3), p("x^3 - 3*x^2 + 2*x"));
        assert_eq!(falling_factorial(&p("x*y + 7"), 0), Polynomial::one());
        assert_eq!(falling_factorial(&p("x + z"), 2), p("x^2 + 2*x*z + z^2 - x - z"));
    }

    #[test]
    fn binom_poly_examples() {
        assert_eq!(binom_poly(&p("x"), 2).to_string(), "1/2*x^2 - 1/2*x");
        assert!(binom_poly(&p("x + y"), -1).is_zero());
        assert_eq!(binom_poly(&p("x + z"), 1), p("x + z"));
    }

    #[test]
    fn binom_int_examples() {
        assert_eq!(binom_int(5, 2), r(10));
        assert_eq!(binom_int(-1, 3), r(-1));
        assert_eq!(binom_int(0, 0), r(1));
        assert_eq!(binom_int(3, 5), r(0));
        assert_eq!(binom_int(4, -2), r(0));
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial_poly(&p("x"), &VecIndex::from([1, 1])), p("x^2 - x"));
        assert!(multinomial_poly(&p("x"), &VecIndex::from([2, -1])).is_zero());
        assert_eq!(multinomial_poly(&p("3"), &VecIndex::from([1, 1])), p("6"));
    }

    #[test]
    fn vec_binom_examples() {
        assert_eq!(vec_binom(&[2, 2].into(), &[1, 1].into()).unwrap(), r(4));
        assert_eq!(vec_binom(&[2, 1].into(), &[0, 0].into()).unwrap(), r(1));
        assert_eq!(vec_binom(&[1, 1].into(), &[2, 0].into()).unwrap(), r(0));
        assert_eq!(vec_binom(&[1, 1].into(), &[1].into()), Err(Error::DimensionMismatch(2, 1)));
    }

    #[test]
    fn vec_monomial_and_dot() {
        assert_eq!(vec_monomial(&["z1", "z2"], &[1, 2].into()).unwrap(), p("z1*z2^2"));
        assert_eq!(vec_monomial(&["z1", "z2"], &[0, 0].into()).unwrap(), Polynomial::one());
        assert_eq!(vec_monomial(&["z1"], &[3].into()).unwrap(), p("z1^3"));
        assert!(matches!(
            vec_monomial(&["z1"], &[-1].into()),
            Err(Error::NegativeComponent { index: 0, value: -1 })
        ));
        assert_eq!(dot_product(&["z1", "z2"], &[1, 2].into()).unwrap(), p("z1 + 2*z2"));
        assert!(dot_product(&["z1", "z2"], &[0, 0].into()).unwrap().is_zero());
        assert_eq!(dot_product(&["z1"], &[4].into()).unwrap(), p("4*z1"));
        assert!(dot_product(&["z1"], &[4, 1].into()).is_err());
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(q_pochhammer(&p("a"), 0), Polynomial::one());
        assert_eq!(q_pochhammer(&p("a"), 2), p("1 - a - a*q + a^2*q"));
        let arg = p("-x").mul(&q_power_exponent(2));
        assert_eq!(q_pochhammer(&arg, 1), p("1 + x*q^2"));
    }

    #[test]
    fn gauss_binom_examples() {
        assert_eq!(gauss_binom(4, 2).unwrap(), p("1 + q + 2*q^2 + q^3 + q^4"));
        assert!(gauss_binom(3, -1).unwrap().is_zero());
        assert_eq!(gauss_binom(5, 0).unwrap(), Polynomial::one());
        // k > alpha ≥ 0 vanishes through the zero factor (1 - q^0)
        assert!(gauss_binom(2, 3).unwrap().is_zero());
        assert_eq!(gauss_binom(-1, 2).unwrap(), p("q^-3"));
    }

    #[test]
    fn q_power_examples() {
        assert_eq!(q_power_exponent(0), Polynomial::one());
        assert_eq!(q_power_exponent(3), p("q^3"));
        assert_eq!(q_power_exponent(-2).to_string(), "q^-2");
    }

    #[test]
    fn inexact_division_reported() {
        assert!(matches!(div_exact_in_q(&p("q^2 + 1"), &p("q + 1")), Err(Error::InexactDivision(_))));
        assert!(div_exact_in_q(&p("x"), &p("q")).is_err());
        assert_eq!(div_exact_in_q(&p("q^-1 - q"), &p("1 - q")).unwrap(), p("q^-1 + 1"));
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(vec_factorial(&[3, 2].into()).unwrap(), BigInt::from(12));
    }

    #[test]
    fn vec_index_parse() {
        assert_eq!("(2,1)".parse::<VecIndex>().unwrap(), VecIndex::from([2, 1]));
        assert_eq!("(3,)".parse::<VecIndex>().unwrap(), VecIndex::from([3]));
        assert_eq!(" ( 0 , 4 ) ".parse::<VecIndex>().unwrap(), VecIndex::from([0, 4]));
        for bad in ["()", "2,1", "(a,1)", "(1,,2)"] {
            assert!(bad.parse::<VecIndex>().is_err(), "{bad}");
        }
        assert_eq!(VecIndex::from([1, 0]).to_string(), "(1,0)");
    }
}
