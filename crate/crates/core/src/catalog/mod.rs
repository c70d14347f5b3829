//! The identity catalog.
//!
//! Each [`IdentityDescriptor`] carries a parameter schema and two [`Side`]s.
//! A side is a summation domain plus a summand written once over [`Ring`] and
//! instantiated for polynomials (symbolic expansion) and for rationals
//! (evaluation at a point). Left and right sides never share summation code.

mod multi;
pub mod params;
mod qseries;
mod scalar;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::binomial::{binom_int, gauss_binom, VecIndex};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::ring::{Env, Point, Ring, Symbolic};

pub use params::{expand_grid, Bindings, DefaultValues, ParamDecl, ParamKind, ParamValue, StructuralParams};

/// One summation index of a side.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Index {
    /// Closed-form side: a single summand.
    Unit,
    K(i64),
    Tuple(Vec<i64>),
    Vector(VecIndex),
    Blocks(Vec<VecIndex>),
}

impl Index {
    pub(crate) fn k(&self) -> i64 {
        match self {
            Index::K(k) => *k,
            other => panic!("expected a scalar index, got {other}"),
        }
    }

    pub(crate) fn tuple(&self) -> &[i64] {
        match self {
            Index::Tuple(t) => t,
            other => panic!("expected a tuple index, got {other}"),
        }
    }

    pub(crate) fn vector(&self) -> &VecIndex {
        match self {
            Index::Vector(v) => v,
            other => panic!("expected a vector index, got {other}"),
        }
    }

    pub(crate) fn blocks(&self) -> &[VecIndex] {
        match self {
            Index::Blocks(b) => b,
            other => panic!("expected a block index, got {other}"),
        }
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Index::Unit => f.write_str("()"),
            Index::K(k) => write!(f, "{k}"),
            Index::Tuple(t) => write!(f, "{}", VecIndex::new(t.clone())),
            Index::Vector(v) => write!(f, "{v}"),
            Index::Blocks(b) => {
                f.write_str("[")?;
                for (i, v) in b.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str("]")
            }
        }
    }
}

pub type Domain = Box<dyn Iterator<Item = Index> + Send>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SideKind {
    Lhs,
    Rhs,
}

impl fmt::Display for SideKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SideKind::Lhs => "lhs",
            SideKind::Rhs => "rhs",
        })
    }
}

impl FromStr for SideKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "lhs" => Ok(SideKind::Lhs),
            "rhs" => Ok(SideKind::Rhs),
            other => Err(format!("unknown side `{other}` (expected lhs or rhs)")),
        }
    }
}

/// Perturbations of a left-hand side used as negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mutation {
    /// Add 1 to the upper argument of the summand's leading binomial-type
    /// factor (the one each builder passes through [`Ctx::shifted`]).
    ShiftUpper,
    /// Omit the final summand of the domain.
    DropLastTerm,
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mutation::ShiftUpper => "shift_upper",
            Mutation::DropLastTerm => "drop_last_term",
        })
    }
}

impl FromStr for Mutation {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "shift_upper" => Ok(Mutation::ShiftUpper),
            "drop_last_term" => Ok(Mutation::DropLastTerm),
            other => Err(format!("unknown mutation `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StatusFlag {
    Normal,
    KnownDiscrepant,
}

impl fmt::Display for StatusFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StatusFlag::Normal => "normal",
            StatusFlag::KnownDiscrepant => "known_discrepant",
        })
    }
}

/// What a summand sees: variable meanings plus the active mutation.
pub struct Ctx<'a, R: Ring> {
    env: &'a dyn Env<R>,
    shift: i64,
}

impl<'a, R: Ring> Ctx<'a, R> {
    pub fn new(env: &'a dyn Env<R>) -> Self {
        Ctx { env, shift: 0 }
    }

    fn with_shift(env: &'a dyn Env<R>, shift: i64) -> Self {
        Ctx { env, shift }
    }

    pub fn var(&self, name: &str) -> Result<R> {
        self.env.var(name)
    }

    /// `prefix1, ..., prefix{count}`.
    pub fn vars(&self, prefix: &str, count: usize) -> Result<Vec<R>> {
        (1..=count).map(|i| self.var(&format!("{prefix}{i}"))).collect()
    }

    /// Applies the shift_upper mutation to an upper argument (a no-op
    /// otherwise).
    pub fn shifted(&self, upper: R) -> R {
        upper.add_int(self.shift)
    }

    pub fn shifted_int(&self, upper: i64) -> i64 {
        upper + self.shift
    }

    pub fn int(&self, n: i64) -> R {
        R::from_int(n)
    }

    /// Integer binomial `C(a, k)` as a ring constant.
    pub fn c(&self, a: i64, k: i64) -> R {
        R::from_rational(binom_int(a, k))
    }

    /// Integer multinomial `C(a, k)` as a ring constant.
    pub fn mc(&self, a: i64, k: &VecIndex) -> R {
        R::from_rational(crate::binomial::multinomial(&Rational::from(a), k))
    }

    pub fn q_power(&self, e: i64) -> Result<R> {
        self.env.q_power(e)
    }

    /// Gaussian binomial `[alpha, k]` mapped into the ring.
    pub fn gauss(&self, alpha: i64, k: i64) -> Result<R> {
        self.env.lift(&gauss_binom(alpha, k)?)
    }

    /// `(a;q)_n`.
    pub fn q_poch(&self, a: &R, n: i64) -> Result<R> {
        let mut acc = R::one();
        for i in 0..n {
            acc = acc.mul(&R::one().sub(&a.mul(&self.q_power(i)?)));
        }
        Ok(acc)
    }
}

pub type Summand<R> = for<'a, 'b, 'c, 'd> fn(&'a Ctx<'b, R>, &'c StructuralParams, &'d Index) -> Result<R>;

/// One side of an identity.
pub struct Side {
    pub domain: fn(&StructuralParams) -> Result<Domain>,
    pub symbolic: Summand<Polynomial>,
    pub numeric: Summand<Rational>,
}

macro_rules! side {
    ($domain:path, $summand:ident) => {
        $crate::catalog::Side {
            domain: $domain,
            symbolic: $summand::<$crate::poly::Polynomial>,
            numeric: $summand::<$crate::rational::Rational>,
        }
    };
}
pub(crate) use side;

/// Picks the summand instance for a ring.
pub trait SideRing: Ring {
    fn summand(side: &Side) -> Summand<Self>;
}

impl SideRing for Polynomial {
    fn summand(side: &Side) -> Summand<Self> {
        side.symbolic
    }
}

impl SideRing for Rational {
    fn summand(side: &Side) -> Summand<Self> {
        side.numeric
    }
}

pub struct IdentityDescriptor {
    pub name: &'static str,
    /// Where the identity is displayed and how to find it.
    pub anchor: &'static str,
    pub status: StatusFlag,
    pub schema: &'static [ParamDecl],
    /// Human-readable list of symbolic variables.
    pub vars_summary: &'static str,
    pub(crate) vars: fn(&StructuralParams) -> Vec<String>,
    pub(crate) constraint: fn(&StructuralParams) -> std::result::Result<(), String>,
    pub lhs: Side,
    pub rhs: Side,
    /// Frozen `LHS - RHS` for identities whose printed form is off.
    pub(crate) expected_difference: fn(&StructuralParams) -> Option<&'static str>,
}

pub(crate) fn no_constraint(_: &StructuralParams) -> std::result::Result<(), String> {
    Ok(())
}

pub(crate) fn no_difference(_: &StructuralParams) -> Option<&'static str> {
    None
}

impl fmt::Debug for IdentityDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityDescriptor")
            .field("name", &self.name)
            .field("status", &self.status)
            .finish_non_exhaustive()
    }
}

impl IdentityDescriptor {
    pub fn schema_summary(&self) -> String {
        if self.schema.is_empty() {
            return "-".into();
        }
        self.schema.iter().map(ParamDecl::summary).collect::<Vec<_>>().join(" ")
    }

    fn schema_error(&self, reason: impl Into<String>) -> Error {
        Error::Schema { identity: self.name.to_string(), reason: reason.into() }
    }

    /// Checks `params` against the schema and returns them in schema order.
    pub fn validate(&self, params: &StructuralParams) -> Result<StructuralParams> {
        for (name, _) in params.entries() {
            if !self.schema.iter().any(|d| d.name == name) {
                return Err(self.schema_error(format!("unknown parameter `{name}`")));
            }
        }
        let mut out = StructuralParams::new();
        for decl in self.schema {
            let value = params
                .get(decl.name)
                .ok_or_else(|| self.schema_error(format!("missing parameter `{}`", decl.name)))?;
            decl.check(value).map_err(|r| self.schema_error(r))?;
            out.set(decl.name, value.clone());
        }
        (self.constraint)(&out).map_err(|r| self.schema_error(r))?;
        Ok(out)
    }

    /// Names of the indeterminates of both sides at these parameters.
    pub fn symbolic_vars(&self, params: &StructuralParams) -> Result<Vec<String>> {
        let params = self.validate(params)?;
        Ok((self.vars)(&params))
    }

    pub fn side(&self, side: SideKind) -> &Side {
        match side {
            SideKind::Lhs => &self.lhs,
            SideKind::Rhs => &self.rhs,
        }
    }

    /// Frozen `LHS - RHS` for a known-discrepant identity at these parameters.
    pub fn expected_difference(&self, params: &StructuralParams) -> Result<Option<Polynomial>> {
        let params = self.validate(params)?;
        (self.expected_difference)(&params).map(str::parse).transpose()
    }

    /// Default grid, with `bindings` overriding parameter ranges and cells
    /// violating cross-parameter constraints dropped.
    pub fn grid(&self, bindings: &Bindings, max_n: Option<i64>) -> Result<Vec<StructuralParams>> {
        let cells = expand_grid(self.name, self.schema, bindings, max_n)?;
        Ok(cells.into_iter().filter(|c| (self.constraint)(c).is_ok()).collect())
    }

    /// Number of summands of a side.
    pub fn domain_len(&self, params: &StructuralParams, side: SideKind) -> Result<usize> {
        let params = self.validate(params)?;
        Ok((self.side(side).domain)(&params)?.count())
    }

    /// Sum of a side in ring `R`, with an optional mutation (applied to the
    /// left side only) and a cap on intermediate sizes.
    pub fn sum_side<R: SideRing>(
        &self,
        params: &StructuralParams,
        side: SideKind,
        env: &dyn Env<R>,
        mutation: Option<Mutation>,
        budget: usize,
    ) -> Result<R> {
        let params = self.validate(params)?;
        let mutation = if side == SideKind::Lhs { mutation } else { None };
        let shift = i64::from(mutation == Some(Mutation::ShiftUpper));
        let ctx = Ctx::with_shift(env, shift);
        let s = self.side(side);
        let summand = R::summand(s);
        let mut indices = (s.domain)(&params)?.peekable();
        let mut acc = R::zero();
        while let Some(idx) = indices.next() {
            if mutation == Some(Mutation::DropLastTerm) && indices.peek().is_none() {
                break;
            }
            let t = summand(&ctx, &params, &idx)?;
            if t.size() > budget {
                return Err(Error::BudgetExceeded { budget });
            }
            acc = acc.add(&t);
            if acc.size() > budget {
                return Err(Error::BudgetExceeded { budget });
            }
        }
        Ok(acc)
    }

    /// Full symbolic expansion of one side.
    pub fn build_side(&self, params: &StructuralParams, side: SideKind) -> Result<Polynomial> {
        self.sum_side(params, side, &Symbolic, None, usize::MAX)
    }

    /// Exact value of one side at `point` without expanding.
    pub fn eval_side(&self, params: &StructuralParams, side: SideKind, point: &crate::poly::Assignment) -> Result<Rational> {
        self.sum_side(params, side, &Point(point.clone()), None, usize::MAX)
    }

    /// A single summand, symbolically.
    pub fn term(&self, params: &StructuralParams, index: &Index, side: SideKind) -> Result<Polynomial> {
        let params = self.validate(params)?;
        let s = self.side(side);
        if !(s.domain)(&params)?.any(|i| &i == index) {
            return Err(Error::IndexOutOfDomain { identity: self.name.to_string(), index: index.to_string() });
        }
        (s.symbolic)(&Ctx::new(&Symbolic), &params, index)
    }
}

/// Every catalog entry in its stable order.
pub fn list_identities() -> &'static [IdentityDescriptor] {
    CATALOG
}

pub fn find(name: &str) -> Result<&'static IdentityDescriptor> {
    CATALOG
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
}

/// Full symbolic expansion of one side of a catalog identity.
pub fn build_side(id: &IdentityDescriptor, params: &StructuralParams, side: SideKind) -> Result<Polynomial> {
    id.build_side(params, side)
}

pub fn term(id: &IdentityDescriptor, params: &StructuralParams, index: &Index, side: SideKind) -> Result<Polynomial> {
    id.term(params, index, side)
}

static CATALOG: &[IdentityDescriptor] = &[
    scalar::CHU_VANDERMONDE,
    scalar::ABEL,
    scalar::ROTHE,
    scalar::JENSEN,
    scalar::GOULD_JENSEN,
    scalar::GOULD_VARIATION,
    scalar::STIRLING_SUM,
    scalar::CHU_MULTISUM,
    scalar::JENSEN_ALT,
    scalar::SHIFT_IDENTITY,
    scalar::GKP,
    scalar::CHU_MULTISUM_ALT,
    scalar::KS2,
    scalar::GKP_FULL,
    scalar::SUN,
    scalar::MUNARINI,
    scalar::SIMONS,
    multi::CV_MULTI,
    multi::STIRLING_MULTI,
    multi::SCALAR_UPPER_COMPOSITION,
    multi::COMPOSITIONS_LEMMA,
    multi::MOHANTY_HANDA,
    multi::CHU89,
    multi::CHU89_ALT,
    multi::NEWMULTI,
    multi::MULTI_MUNARINI,
    multi::MULTI_SIMONS,
    qseries::HOU_ZENG_Q,
    qseries::MUNARINI_Q,
];

// Shared summation domains.

pub(crate) fn unit(_: &StructuralParams) -> Result<Domain> {
    Ok(Box::new(std::iter::once(Index::Unit)))
}

pub(crate) fn k_upto(n: i64) -> Domain {
    Box::new((0..=n).map(Index::K))
}

pub(crate) fn k_to_n(p: &StructuralParams) -> Result<Domain> {
    Ok(k_upto(p.int("n")))
}

pub(crate) fn k_to_m(p: &StructuralParams) -> Result<Domain> {
    Ok(k_upto(p.int("m")))
}

pub(crate) fn vec_to_nvec(p: &StructuralParams) -> Result<Domain> {
    Ok(Box::new(crate::enumeration::vec_range(p.vec("nvec"))?.map(Index::Vector)))
}

pub(crate) fn sign<R: Ring>(exp: i64) -> R {
    if exp.rem_euclid(2) == 0 {
        R::one()
    } else {
        R::one().neg()
    }
}

/// `v(v-1)/2`, i.e. `C(v, 2)` for any integer `v`.
pub(crate) fn choose2(v: i64) -> i64 {
    v * (v - 1) / 2
}

/// `p^e` for a possibly negative exponent `e`; negative `e` means a builder
/// reached a power its vanishing guard should have skipped.
pub(crate) fn guarded_pow<R: Ring>(p: &R, e: i64, what: &str) -> Result<R> {
    if e < 0 {
        return Err(Error::Guard(format!("negative power {e} of {what} with a nonzero coefficient")));
    }
    Ok(p.pow(e as u32))
}

pub(crate) fn scalar_vars(names: &'static [&'static str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub(crate) fn indexed_vars(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}
