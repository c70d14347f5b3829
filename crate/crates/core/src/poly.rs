//! Sparse multivariate polynomials over [`Rational`].
//!
//! Terms are keyed by [`Monomial`], an exponent vector over named variables.
//! Only the variable `q` may carry negative exponents, which makes the type a
//! Laurent polynomial ring in `q` and an ordinary polynomial ring in every
//! other variable.
//!
//! # Text format
//!
//! [`Polynomial`]'s `Display` is the stable rendering consumed by the CLI and
//! by golden tests:
//!
//! * terms are sorted by total degree, highest first; ties are broken by
//!   graded-lex order (variables compared alphabetically, larger exponent of
//!   the first differing variable first);
//! * a term is `coeff*v1^e1*v2^e2`; the coefficient is omitted when it is
//!   `1` or `-1` (unless the term is constant) and exponent `1` is omitted;
//! * coefficients print as `p` or `p/q`; terms are joined by ` + ` / ` - `;
//! * the zero polynomial prints as `0`.
//!
//! `"3/2*x^2*y - z"`, `"q + q^-1"` and `"x + y + z"` are typical renderings.
//! [`Polynomial`]'s `FromStr` accepts this format (and is lenient about
//! whitespace), so `to_string` followed by `parse` is the identity.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The only variable allowed to carry negative exponents.
pub const Q: &str = "q";

/// A variable name: an ASCII letter followed by letters, digits or `_`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Result<Self> {
        let mut chars = name.chars();
        let ok = matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::InvalidVariable(name.to_string()));
        }
        Ok(Var(Arc::from(name)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn is_q(&self) -> bool {
        &*self.0 == Q
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Exponent vector, sorted by variable name, without zero exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Var, i64)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated variables
    /// have their exponents added.
    pub fn new<I, S>(factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, i64)>,
        S: AsRef<str>,
    {
        let mut acc: BTreeMap<Var, i64> = BTreeMap::new();
        for (name, exp) in factors {
            *acc.entry(Var::new(name.as_ref())?).or_insert(0) += exp;
        }
        let exps: Vec<_> = acc.into_iter().filter(|(_, e)| *e != 0).collect();
        for (v, e) in &exps {
            if *e < 0 && !v.is_q() {
                return Err(Error::NegativeExponent { var: v.to_string(), exp: *e });
            }
        }
        Ok(Monomial(exps))
    }

    pub fn var(name: &str, exp: i64) -> Result<Self> {
        Monomial::new([(name, exp)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponents(&self) -> &[(Var, i64)] {
        &self.0
    }

    pub fn exponent(&self, name: &str) -> i64 {
        self.0
            .iter()
            .find(|(v, _)| v.as_str() == name)
            .map_or(0, |(_, e)| *e)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Product of monomials. Cannot introduce a negative exponent on a
    /// non-`q` variable since both operands are valid.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Display order: higher total degree first, then graded-lex.
    pub fn display_cmp(&self, other: &Monomial) -> Ordering {
        other
            .total_degree()
            .cmp(&self.total_degree())
            .then_with(|| grlex_tiebreak(&self.0, &other.0))
    }
}

fn grlex_tiebreak(a: &[(Var, i64)], b: &[(Var, i64)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            // a variable present only on one side has exponent 0 on the other
            (Some((_, ea)), None) => return 0.cmp(ea),
            (None, Some((_, eb))) => return eb.cmp(&0),
            (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                Ordering::Less => return 0.cmp(ea),
                Ordering::Greater => return eb.cmp(&0),
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(ea);
                    }
                    i += 1;
                    j += 1;
                }
            },
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (idx, (v, e)) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type Assignment = BTreeMap<String, Rational>;

/// Sparse polynomial with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn term(c: impl Into<Rational>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(name: &str) -> Result<Self> {
        Ok(Polynomial::term(Rational::one(), Monomial::var(name, 1)?))
    }

    /// `q^e`; `e` may be negative.
    pub fn q_power(e: i64) -> Self {
        Polynomial::term(Rational::one(), Monomial::var(Q, e).expect("q accepts any exponent"))
    }

    /// Collects `(coefficient, monomial)` pairs into canonical form.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut out = Polynomial::zero();
        for (c, m) in terms {
            out.add_term(m, &c);
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value if this polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Sorted, deduplicated names of the variables that occur.
    pub fn variables(&self) -> Vec<String> {
        let mut vars: Vec<String> = self
            .terms
            .keys()
            .flat_map(|m| m.exponents().iter().map(|(v, _)| v.to_string()))
            .collect();
        vars.sort();
        vars.dedup();
        vars
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let (big, small) = if self.len() >= other.len() { (self, other) } else { (other, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }

    /// `self^e` with `p^0 = 1` for every `p`, including zero.
    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
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

    /// Exact value under `assignment`, which must cover every variable.
    pub fn eval(&self, assignment: &Assignment) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.exponents() {
                let val = assignment
                    .get(v.as_str())
                    .ok_or_else(|| Error::MissingVariable(v.to_string()))?;
                t *= &val.pow(*e)?;
            }
            total += &t;
        }
        Ok(total)
    }

    /// Replaces variables by polynomials. A variable with a negative exponent
    /// can only be replaced by a nonzero constant.
    pub fn substitute(&self, map: &BTreeMap<String, Polynomial>) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut t = Polynomial::constant(c.clone());
            for (v, e) in m.exponents() {
                match map.get(v.as_str()) {
                    None => kept.push((v.as_str(), *e)),
                    Some(rep) if *e >= 0 => t = t.mul(&rep.pow(*e as u32)),
                    Some(rep) => {
                        let k = rep.as_constant().ok_or_else(|| Error::NegativeExponent {
                            var: v.to_string(),
                            exp: *e,
                        })?;
                        t = t.scale(&k.pow(*e)?);
                    }
                }
            }
            t = t.mul(&Polynomial::term(Rational::one(), Monomial::new(kept)?));
            out = out.add(&t);
        }
        Ok(out)
    }

    /// Terms in display order.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.display_cmp(b.0));
        v
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty input"));
        }
        // split into signed terms; a sign right after '^' belongs to an exponent
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') {
                if !current.is_empty() {
                    pieces.push((negative, std::mem::take(&mut current)));
                } else if prev.is_some() {
                    return Err(bad("dangling sign"));
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
            prev = Some(ch);
        }
        if current.is_empty() {
            return Err(bad("trailing sign"));
        }
        pieces.push((negative, current));

        let mut out = Polynomial::zero();
        for (negative, piece) in pieces {
            let mut coeff = Rational::one();
            let mut factors: Vec<(String, i64)> = Vec::new();
            for factor in piece.split('*') {
                if factor.is_empty() {
                    return Err(bad("empty factor"));
                }
                if factor.starts_with(|c: char| c.is_ascii_digit()) {
                    coeff *= &factor.parse::<Rational>().map_err(|_| bad("malformed coefficient"))?;
                } else {
                    let (name, exp) = match factor.split_once('^') {
                        Some((n, e)) => (n, e.parse::<i64>().map_err(|_| bad("malformed exponent"))?),
                        None => (factor, 1),
                    };
                    factors.push((name.to_string(), exp));
                }
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(Monomial::new(factors)?, &coeff);
        }
        Ok(out)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Polynomial {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(p("x + 1").add(&p("-x + 2")), p("3"));
        assert_eq!(p("x^2 - y").add(&Polynomial::zero()), p("x^2 - y"));
        assert_eq!(p("x^2").add(&p("x^2")).to_string(), "2*x^2");
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("x + 1").mul(&p("x - 1")), p("x^2 - 1"));
        assert_eq!(p("1 - x*q^-1").mul(&p("q")), p("q - x"));
        assert!(Polynomial::zero().mul(&p("x + y")).is_zero());
    }

    #[test]
    fn negative_exponent_outside_q_rejected() {
        assert!(matches!(Monomial::var("x", -1), Err(Error::NegativeExponent { .. })));
        assert!("x^-1".parse::<Polynomial>().is_err());
        assert!("q^-3".parse::<Polynomial>().is_ok());
        assert!(Var::new("1x").is_err());
    }

    #[test]
    fn pow_examples() {
        assert_eq!(p("x + y").pow(2), p("x^2 + 2*x*y + y^2"));
        assert_eq!(p("x + y").pow(0), Polynomial::one());
        assert_eq!(Polynomial::zero().pow(0), Polynomial::one());
        assert_eq!(p("y - z").pow(1), p("y - z"));
    }

    #[test]
    fn scale_examples() {
        assert_eq!(p("x^2 - x").scale(&r(1, 2)).to_string(), "1/2*x^2 - 1/2*x");
        assert!(p("x + 3").scale(&Rational::zero()).is_zero());
        assert_eq!(p("3*x").scale(&r(-1, 3)), p("-x"));
    }

    #[test]
    fn eval_examples() {
        let mut a = Assignment::new();
        a.insert("x".into(), r(1, 2));
        assert_eq!(p("x^2 - x").eval(&a).unwrap(), r(-1, 4));
        assert_eq!(Polynomial::one().eval(&Assignment::new()).unwrap(), r(1, 1));
        let mut b = Assignment::new();
        b.insert("q".into(), r(2, 1));
        assert_eq!(p("q^-1 + q").eval(&b).unwrap(), r(5, 2));
    }

    #[test]
    fn eval_errors() {
        assert_eq!(p("x + y").eval(&Assignment::new()), Err(Error::MissingVariable("x".into())));
        let mut a = Assignment::new();
        a.insert("q".into(), Rational::zero());
        assert_eq!(p("q^-1").eval(&a), Err(Error::DivisionByZero));
        // a nonnegative power of q = 0 is fine
        assert_eq!(p("q^2 + 1").eval(&a).unwrap(), Rational::one());
    }

    #[test]
    fn rendering() {
        assert_eq!(p("z + y + x").to_string(), "x + y + z");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("-z + 3/2*y*x^2").to_string(), "3/2*x^2*y - z");
        assert_eq!(p("y^2 + x^2 + x*y").to_string(), "x^2 + x*y + y^2");
        assert_eq!(p("1 + q^-2 + q").to_string(), "q + 1 + q^-2");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("x1 + x2 - 7/3").to_string(), "x1 + x2 - 7/3");
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "x +", "+", "x ** y", "x^y", "2/0*x", "x + - y"] {
            assert!(bad.parse::<Polynomial>().is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn substitute_linear() {
        let mut map = BTreeMap::new();
        map.insert("x".to_string(), p("-x - 1"));
        map.insert("z".to_string(), p("-z + 1"));
        assert_eq!(p("x*z + x").substitute(&map).unwrap(), p("x*z - 2*x + z - 2"));
        let mut q1 = BTreeMap::new();
        q1.insert("q".to_string(), Polynomial::one());
        assert_eq!(p("q^-2*x + q").substitute(&q1).unwrap(), p("x + 1"));
        let mut qx = BTreeMap::new();
        qx.insert("q".to_string(), p("x + 1"));
        assert!(p("q^-1").substitute(&qx).is_err());
    }
}
