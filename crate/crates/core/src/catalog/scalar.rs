//! Identities with scalar binomial coefficients: Chu–Vandermonde, Abel,
//! Rothe, Jensen and its relatives, Chu's multisum, and the
//! Graham–Knuth–Patashnik family (Sun, Munarini, Simons).

use super::params::{DefaultValues::*, ParamDecl, StructuralParams};
use super::*;
use crate::binomial::{binom, falling};
use crate::enumeration::compositions;

const N_0_5: &[ParamDecl] = &[ParamDecl::int("n", 0, Range(0, 5), true)];

fn vars_xy(_: &StructuralParams) -> Vec<String> {
    scalar_vars(&["x", "y"])
}

fn vars_xyz(_: &StructuralParams) -> Vec<String> {
    scalar_vars(&["x", "y", "z"])
}

fn vars_xz(_: &StructuralParams) -> Vec<String> {
    scalar_vars(&["x", "z"])
}

fn vars_xyr(_: &StructuralParams) -> Vec<String> {
    scalar_vars(&["r", "x", "y"])
}

fn vars_x(_: &StructuralParams) -> Vec<String> {
    scalar_vars(&["x"])
}

fn vars_none(_: &StructuralParams) -> Vec<String> {
    Vec::new()
}

fn vars_multisum(p: &StructuralParams) -> Vec<String> {
    let mut v = indexed_vars("x", p.int("s") as usize);
    v.push("z".into());
    v
}

// chu_vandermonde: Σ_k C(x,k) C(y,n-k) = C(x+y,n)

fn cv_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let (x, y) = (ctx.var("x")?, ctx.var("y")?);
    Ok(binom(&ctx.shifted(x), k).mul(&binom(&y, n - k)))
}

fn cv_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, _: &Index) -> Result<R> {
    Ok(binom(&ctx.var("x")?.add(&ctx.var("y")?), p.int("n")))
}

pub(super) const CHU_VANDERMONDE: IdentityDescriptor = IdentityDescriptor {
    name: "chu_vandermonde",
    anchor: "§1, \"the Chu-Vandermonde convolution formula\"",
    status: StatusFlag::Normal,
    schema: N_0_5,
    vars_summary: "x,y",
    vars: vars_xy,
    constraint: no_constraint,
    lhs: side!(k_to_n, cv_lhs),
    rhs: side!(unit, cv_rhs),
    expected_difference: no_difference,
};

// abel: Σ_k C(n,k) x (x+kz)^{k-1} (y-kz)^{n-k} = (x+y)^n
// The k = 0 summand x·x^{-1}·y^n is taken as y^n.

fn abel_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let coeff = ctx.c(ctx.shifted_int(n), k);
    let (x, y, z) = (ctx.var("x")?, ctx.var("y")?, ctx.var("z")?);
    let kz = z.scale(&Rational::from(k));
    let tail = y.sub(&kz).pow((n - k) as u32);
    if k == 0 {
        return Ok(coeff.mul(&tail));
    }
    let head = x.mul(&x.add(&kz).pow((k - 1) as u32));
    Ok(coeff.mul(&head).mul(&tail))
}

fn abel_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, _: &Index) -> Result<R> {
    Ok(ctx.var("x")?.add(&ctx.var("y")?).pow(p.int("n") as u32))
}

pub(super) const ABEL: IdentityDescriptor = IdentityDescriptor {
    name: "abel",
    anchor: "eq:abel, \"Abel's identity (see, for example\"",
    status: StatusFlag::Normal,
    schema: N_0_5,
    vars_summary: "x,y,z",
    vars: vars_xyz,
    constraint: no_constraint,
    lhs: side!(k_to_n, abel_lhs),
    rhs: side!(unit, abel_rhs),
    expected_difference: no_difference,
};

// rothe: Σ_k x/(x-kz) C(x-kz,k) C(y+kz,n-k) = C(x+y,n)
// x/(x-kz)·C(x-kz,k) = x·(x-kz-1)_{k-1}/k! for k ≥ 1, and 1 for k = 0.

fn rothe_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let (x, y, z) = (ctx.var("x")?, ctx.var("y")?, ctx.var("z")?);
    let kz = z.scale(&Rational::from(k));
    let right = binom(&ctx.shifted(y.add(&kz)), n - k);
    if k == 0 {
        return Ok(right);
    }
    let inv_fact = crate::binomial::factorial_rational(k as u32).recip()?;
    let left = x.mul(&falling(&x.sub(&kz).add_int(-1), (k - 1) as u32)).scale(&inv_fact);
    Ok(left.mul(&right))
}

pub(super) const ROTHE: IdentityDescriptor = IdentityDescriptor {
    name: "rothe",
    anchor: "eq:rothe, \"Rothe's identity (or called Hagen-Rothe's\"",
    status: StatusFlag::Normal,
    schema: N_0_5,
    vars_summary: "x,y,z",
    vars: vars_xyz,
    constraint: no_constraint,
    lhs: side!(k_to_n, rothe_lhs),
    rhs: side!(unit, cv_rhs),
    expected_difference: no_difference,
};

// jensen: Σ_k C(x+kz,k) C(y-kz,n-k) = Σ_k C(x+y-k,n-k) z^k

fn jensen_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let (x, y, z) = (ctx.var("x")?, ctx.var("y")?, ctx.var("z")?);
    let kz = z.scale(&Rational::from(k));
    Ok(binom(&ctx.shifted(x.add(&kz)), k).mul(&binom(&y.sub(&kz), n - k)))
}

fn jensen_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let (x, y, z) = (ctx.var("x")?, ctx.var("y")?, ctx.var("z")?);
    Ok(binom(&x.add(&y).add_int(-k), n - k).mul(&z.pow(k as u32)))
}

pub(super) const JENSEN: IdentityDescriptor = IdentityDescriptor {
    name: "jensen",
    anchor: "eq:jensen, \"Jensen's identity \\cite{Jensen}, which is closely related\"",
    status: StatusFlag::Normal,
    schema: N_0_5,
    vars_summary: "x,y,z",
    vars: vars_xyz,
    constraint: no_constraint,
    lhs: side!(k_to_n, jensen_lhs),
    rhs: side!(k_to_n, jensen_rhs),
    expected_difference: no_difference,
};

// gould_jensen: Σ_k (x+kz)^k/k! (y-kz)^{n-k}/(n-k)! = Σ_k (x+y)^k/k! z^{n-k}

fn gould_jensen_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let (x, y, z) = (ctx.var("x")?, ctx.var("y")?, ctx.var("z")?);
    let kz = z.scale(&Rational::from(k));
    let denom = crate::binomial::factorial_rational(k as u32) * crate::binomial::factorial_rational((n - k) as u32);
    let t = ctx.shifted(x.add(&kz)).pow(k as u32).mul(&y.sub(&kz).pow((n - k) as u32));
    Ok(t.scale(&denom.recip()?))
}

fn gould_jensen_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let (x, y, z) = (ctx.var("x")?, ctx.var("y")?, ctx.var("z")?);
    let inv = crate::binomial::factorial_rational(k as u32).recip()?;
    Ok(x.add(&y).pow(k as u32).mul(&z.pow((n - k) as u32)).scale(&inv))
}

pub(super) const GOULD_JENSEN: IdentityDescriptor = IdentityDescriptor {
    name: "gould_jensen",
    anchor: "eq:gould-jensen, \"the following Abel-type analogue\"",
    status: StatusFlag::Normal,
    schema: N_0_5,
    vars_summary: "x,y,z",
    vars: vars_xyz,
    constraint: no_constraint,
    lhs: side!(k_to_n, gould_jensen_lhs),
    rhs: side!(k_to_n, gould_jensen_rhs),
    expected_difference: no_difference,
};

// gould_variation, as printed:
//   Σ_k C(x+kz,k) C(y-kz,n-k) = Σ_k k C(x+y-k,n-k) (x+y-(n-k)z-k)/(x+y-k) z^k
// C(x+y-k,n-k)/(x+y-k) = (x+y-k-1)_{n-k-1}/(n-k)! for k < n; at k = n the
// fraction is (x+y-n)/(x+y-n) = 1.

fn gould_variation_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let (x, y, z) = (ctx.var("x")?, ctx.var("y")?, ctx.var("z")?);
    let zk = z.pow(k as u32).scale(&Rational::from(k));
    if k == n {
        return Ok(zk);
    }
    let s = x.add(&y);
    let inv = crate::binomial::factorial_rational((n - k) as u32).recip()?;
    let quotient = falling(&s.add_int(-k - 1), (n - k - 1) as u32).scale(&inv);
    let numer = s.sub(&z.scale(&Rational::from(n - k))).add_int(-k);
    Ok(quotient.mul(&numer).mul(&zk))
}

// LHS - RHS of the printed form, expanded by hand: C(x+y, n).
fn gould_variation_difference(p: &StructuralParams) -> Option<&'static str> {
    match p.int("n") {
        0 => Some("1"),
        1 => Some("x + y"),
        2 => Some("1/2*x^2 + x*y + 1/2*y^2 - 1/2*x - 1/2*y"),
        _ => None,
    }
}

pub(super) const GOULD_VARIATION: IdentityDescriptor = IdentityDescriptor {
    name: "gould_variation",
    anchor: "eq:gouldv, \"the following variation of Jensen's identity\"",
    status: StatusFlag::KnownDiscrepant,
    schema: &[ParamDecl::int("n", 0, Range(0, 2), true)],
    vars_summary: "x,y,z",
    vars: vars_xyz,
    constraint: no_constraint,
    lhs: side!(k_to_n, jensen_lhs),
    rhs: side!(k_to_n, gould_variation_rhs),
    expected_difference: gould_variation_difference,
};

// stirling_sum: Σ_k (-1)^{n-k} C(n,k) k^r = 0 (r < n), n! (r = n)

fn stirling_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, r, k) = (p.int("n"), p.int("r"), i.k());
    let power = ctx.int(k).pow(r as u32);
    Ok(sign::<R>(n - k).mul(&ctx.c(ctx.shifted_int(n), k)).mul(&power))
}

fn stirling_rhs<R: Ring>(_: &Ctx<R>, p: &StructuralParams, _: &Index) -> Result<R> {
    let (n, r) = (p.int("n"), p.int("r"));
    if r < n {
        return Ok(R::zero());
    }
    Ok(R::from_rational(crate::binomial::factorial_rational(n as u32)))
}

fn r_at_most_n(p: &StructuralParams) -> std::result::Result<(), String> {
    if p.int("r") > p.int("n") {
        return Err(format!("r={} must satisfy r <= n={}", p.int("r"), p.int("n")));
    }
    Ok(())
}

pub(super) const STIRLING_SUM: IdentityDescriptor = IdentityDescriptor {
    name: "stirling_sum",
    anchor: "eq:stirling, \"a well-known identity\"",
    status: StatusFlag::Normal,
    schema: &[
        ParamDecl::int("n", 0, Range(0, 8), true),
        ParamDecl::int("r", 0, UpTo("n"), false),
    ],
    vars_summary: "-",
    vars: vars_none,
    constraint: r_at_most_n,
    lhs: side!(k_to_n, stirling_lhs),
    rhs: side!(unit, stirling_rhs),
    expected_difference: no_difference,
};

// chu_multisum: Σ_{k_1+..+k_s=n} Π C(x_i+k_i z, k_i)
//             = Σ_k C(k+s-2,k) C(x_1+..+x_s+nz-k, n-k) z^k

const N_S: &[ParamDecl] = &[
    ParamDecl::int("n", 0, Range(0, 4), true),
    ParamDecl::int("s", 1, Range(1, 4), false),
];

fn compositions_n_s(p: &StructuralParams) -> Result<Domain> {
    Ok(Box::new(compositions(p.int("n"), p.int("s") as usize)?.map(Index::Tuple)))
}

fn chu_multisum_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let ks = i.tuple();
    let xs = ctx.vars("x", p.int("s") as usize)?;
    let z = ctx.var("z")?;
    let mut acc = R::one();
    for (j, (&k, x)) in ks.iter().zip(&xs).enumerate() {
        let upper = x.add(&z.scale(&Rational::from(k)));
        let upper = if j == 0 { ctx.shifted(upper) } else { upper };
        acc = acc.mul(&binom(&upper, k));
    }
    Ok(acc)
}

fn sum_of<R: Ring>(xs: &[R]) -> R {
    xs.iter().fold(R::zero(), |a, b| a.add(b))
}

fn chu_multisum_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, s, k) = (p.int("n"), p.int("s"), i.k());
    let xs = ctx.vars("x", s as usize)?;
    let z = ctx.var("z")?;
    let upper = sum_of(&xs).add(&z.scale(&Rational::from(n))).add_int(-k);
    Ok(ctx.c(k + s - 2, k).mul(&binom(&upper, n - k)).mul(&z.pow(k as u32)))
}

pub(super) const CHU_MULTISUM: IdentityDescriptor = IdentityDescriptor {
    name: "chu_multisum",
    anchor: "eq:chu, \"to a multi-sum form\"",
    status: StatusFlag::Normal,
    schema: N_S,
    vars_summary: "x1..xs,z",
    vars: vars_multisum,
    constraint: no_constraint,
    lhs: side!(compositions_n_s, chu_multisum_lhs),
    rhs: side!(k_to_n, chu_multisum_rhs),
    expected_difference: no_difference,
};

// jensen_alt: Σ_k C(x+kz,k) C(y-kz,n-k) = Σ_i C(x+y+1,n-i) (z-1)^i

fn jensen_alt_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, j) = (p.int("n"), i.k());
    let (x, y, z) = (ctx.var("x")?, ctx.var("y")?, ctx.var("z")?);
    Ok(binom(&x.add(&y).add_int(1), n - j).mul(&z.add_int(-1).pow(j as u32)))
}

pub(super) const JENSEN_ALT: IdentityDescriptor = IdentityDescriptor {
    name: "jensen_alt",
    anchor: "eq:new, \"Interchanging the summation order in\"",
    status: StatusFlag::Normal,
    schema: N_0_5,
    vars_summary: "x,y,z",
    vars: vars_xyz,
    constraint: no_constraint,
    lhs: side!(k_to_n, jensen_lhs),
    rhs: side!(k_to_n, jensen_alt_rhs),
    expected_difference: no_difference,
};

// shift_identity: Σ_k C(x-k,n-k) z^k = Σ_k C(x+1,n-k) (z-1)^k

fn shift_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let (x, z) = (ctx.var("x")?, ctx.var("z")?);
    Ok(binom(&ctx.shifted(x.add_int(-k)), n - k).mul(&z.pow(k as u32)))
}

fn shift_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let (x, z) = (ctx.var("x")?, ctx.var("z")?);
    Ok(binom(&x.add_int(1), n - k).mul(&z.add_int(-1).pow(k as u32)))
}

pub(super) const SHIFT_IDENTITY: IdentityDescriptor = IdentityDescriptor {
    name: "shift_identity",
    anchor: "§2 end, \"we get the following identity\"",
    status: StatusFlag::Normal,
    schema: N_0_5,
    vars_summary: "x,z",
    vars: vars_xz,
    constraint: no_constraint,
    lhs: side!(k_to_n, shift_lhs),
    rhs: side!(k_to_n, shift_rhs),
    expected_difference: no_difference,
};

// gkp: Σ_{k≤m} C(m+r,k) x^k y^{m-k} = Σ_{k≤m} C(-r,k) (-x)^k (x+y)^{m-k}
// (terms with k < 0 vanish)

fn gkp_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (m, k) = (p.int("m"), i.k());
    let (r, x, y) = (ctx.var("r")?, ctx.var("x")?, ctx.var("y")?);
    let c = binom(&ctx.shifted(r.add_int(m)), k);
    Ok(c.mul(&x.pow(k as u32)).mul(&y.pow((m - k) as u32)))
}

fn gkp_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (m, k) = (p.int("m"), i.k());
    let (r, x, y) = (ctx.var("r")?, ctx.var("x")?, ctx.var("y")?);
    let c = binom(&r.neg(), k);
    Ok(c.mul(&x.neg().pow(k as u32)).mul(&x.add(&y).pow((m - k) as u32)))
}

pub(super) const GKP: IdentityDescriptor = IdentityDescriptor {
    name: "gkp",
    anchor: "§2 end, \"equivalent to the following identity in\"",
    status: StatusFlag::Normal,
    schema: &[ParamDecl::int("m", 0, Range(0, 4), true)],
    vars_summary: "r,x,y",
    vars: vars_xyr,
    constraint: no_constraint,
    lhs: side!(k_to_m, gkp_lhs),
    rhs: side!(k_to_m, gkp_rhs),
    expected_difference: no_difference,
};

// chu_multisum_alt: same left side as chu_multisum,
//   = Σ_j C(j+s-2,j) C(x_1+..+x_s+nz+s-1, n-j) (z-1)^j

fn chu_multisum_alt_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, s, j) = (p.int("n"), p.int("s"), i.k());
    let xs = ctx.vars("x", s as usize)?;
    let z = ctx.var("z")?;
    let upper = sum_of(&xs).add(&z.scale(&Rational::from(n))).add_int(s - 1);
    Ok(ctx.c(j + s - 2, j).mul(&binom(&upper, n - j)).mul(&z.add_int(-1).pow(j as u32)))
}

pub(super) const CHU_MULTISUM_ALT: IdentityDescriptor = IdentityDescriptor {
    name: "chu_multisum_alt",
    anchor: "eq:finalpf, \"by \\eqref{eq:stirling} we get\"",
    status: StatusFlag::Normal,
    schema: N_S,
    vars_summary: "x1..xs,z",
    vars: vars_multisum,
    constraint: no_constraint,
    lhs: side!(compositions_n_s, chu_multisum_lhs),
    rhs: side!(k_to_n, chu_multisum_alt_rhs),
    expected_difference: no_difference,
};

// ks2: Σ_k C(k+s,k) C(x-k,n-k) z^k = Σ_k C(k+s,k) C(x+s+1,n-k) (z-1)^k
// (the displayed right-hand index j is read as k)

fn ks2_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, s, k) = (p.int("n"), p.int("s"), i.k());
    let (x, z) = (ctx.var("x")?, ctx.var("z")?);
    let lead = ctx.c(ctx.shifted_int(k + s), k);
    Ok(lead.mul(&binom(&x.add_int(-k), n - k)).mul(&z.pow(k as u32)))
}

fn ks2_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, s, k) = (p.int("n"), p.int("s"), i.k());
    let (x, z) = (ctx.var("x")?, ctx.var("z")?);
    let c = ctx.c(k + s, k);
    Ok(c.mul(&binom(&x.add_int(s + 1), n - k)).mul(&z.add_int(-1).pow(k as u32)))
}

pub(super) const KS2: IdentityDescriptor = IdentityDescriptor {
    name: "ks2",
    anchor: "eq:ks-2, \"replacing $s$ by $s+2$\"",
    status: StatusFlag::Normal,
    schema: &[
        ParamDecl::int("n", 0, Range(0, 4), true),
        ParamDecl::int("s", 0, Range(0, 3), false),
    ],
    vars_summary: "x,z",
    vars: vars_xz,
    constraint: no_constraint,
    lhs: side!(k_to_n, ks2_lhs),
    rhs: side!(k_to_n, ks2_rhs),
    expected_difference: no_difference,
};

// gkp_full: Σ_k C(m+r,m-n-k) C(n+k,n) x^{m-n-k} y^k
//         = Σ_k C(-r,m-n-k) C(n+k,n) (-x)^{m-n-k} (x+y)^k

fn k_to_m_minus_n(p: &StructuralParams) -> Result<Domain> {
    Ok(k_upto(p.int("m") - p.int("n")))
}

fn gkp_full_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (m, n, k) = (p.int("m"), p.int("n"), i.k());
    let (r, x, y) = (ctx.var("r")?, ctx.var("x")?, ctx.var("y")?);
    let c = binom(&ctx.shifted(r.add_int(m)), m - n - k).mul(&ctx.c(n + k, n));
    Ok(c.mul(&x.pow((m - n - k) as u32)).mul(&y.pow(k as u32)))
}

fn gkp_full_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (m, n, k) = (p.int("m"), p.int("n"), i.k());
    let (r, x, y) = (ctx.var("r")?, ctx.var("x")?, ctx.var("y")?);
    let c = binom(&r.neg(), m - n - k).mul(&ctx.c(n + k, n));
    Ok(c.mul(&x.neg().pow((m - n - k) as u32)).mul(&x.add(&y).pow(k as u32)))
}

fn n_at_most_m(p: &StructuralParams) -> std::result::Result<(), String> {
    if p.int("n") > p.int("m") {
        return Err(format!("n={} must satisfy n <= m={}", p.int("n"), p.int("m")));
    }
    Ok(())
}

pub(super) const GKP_FULL: IdentityDescriptor = IdentityDescriptor {
    name: "gkp_full",
    anchor: "abstract / §3, \"Graham-Knuth-Patashnik's identity\"",
    status: StatusFlag::Normal,
    schema: &[
        ParamDecl::int("m", 0, Range(0, 4), true),
        ParamDecl::int("n", 0, UpTo("m"), true),
    ],
    vars_summary: "r,x,y",
    vars: vars_xyr,
    constraint: n_at_most_m,
    lhs: side!(k_to_m_minus_n, gkp_full_lhs),
    rhs: side!(k_to_m_minus_n, gkp_full_rhs),
    expected_difference: no_difference,
};

// sun: Σ_{k=0}^m (-1)^{m-k} C(m,k) C(n+k,a) (1+x)^{n+k-a}
//    = Σ_{k=0}^n C(n,k) C(m+k,a) x^{m+k-a}
// A summand whose C(·,a) vanishes is skipped before its power is formed.

fn sun_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (m, n, a, k) = (p.int("m"), p.int("n"), p.int("a"), i.k());
    let c = ctx.c(n + k, a);
    if c.is_zero() {
        return Ok(R::zero());
    }
    let x = ctx.var("x")?;
    let power = guarded_pow(&x.add_int(1), n + k - a, "(1+x)")?;
    Ok(sign::<R>(m - k).mul(&ctx.c(ctx.shifted_int(m), k)).mul(&c).mul(&power))
}

fn sun_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (m, n, a, k) = (p.int("m"), p.int("n"), p.int("a"), i.k());
    let c = ctx.c(m + k, a);
    if c.is_zero() {
        return Ok(R::zero());
    }
    let x = ctx.var("x")?;
    Ok(ctx.c(n, k).mul(&c).mul(&guarded_pow(&x, m + k - a, "x")?))
}

pub(super) const SUN: IdentityDescriptor = IdentityDescriptor {
    name: "sun",
    anchor: "eq:sun, \"Sun's identity \\cite{Sun}\"",
    status: StatusFlag::Normal,
    schema: &[
        ParamDecl::int("m", 0, Range(0, 3), true),
        ParamDecl::int("n", 0, Range(0, 3), true),
        ParamDecl::int("a", 0, Range(0, 3), true),
    ],
    vars_summary: "x",
    vars: vars_x,
    constraint: no_constraint,
    lhs: side!(k_to_m, sun_lhs),
    rhs: side!(k_to_n, sun_rhs),
    expected_difference: no_difference,
};

// munarini, α and β symbolic:
//   Σ_k (-1)^{n-k} C(β-α+n,n-k) C(β+k,k) (1+x)^k = Σ_k C(α,n-k) C(β+k,k) x^k

fn vars_munarini(_: &StructuralParams) -> Vec<String> {
    scalar_vars(&["alpha", "beta", "x"])
}

fn munarini_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let (alpha, beta, x) = (ctx.var("alpha")?, ctx.var("beta")?, ctx.var("x")?);
    let first = binom(&ctx.shifted(beta.sub(&alpha).add_int(n)), n - k);
    let second = binom(&beta.add_int(k), k);
    Ok(sign::<R>(n - k).mul(&first).mul(&second).mul(&x.add_int(1).pow(k as u32)))
}

fn munarini_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let (alpha, beta, x) = (ctx.var("alpha")?, ctx.var("beta")?, ctx.var("x")?);
    Ok(binom(&alpha, n - k).mul(&binom(&beta.add_int(k), k)).mul(&x.pow(k as u32)))
}

pub(super) const MUNARINI: IdentityDescriptor = IdentityDescriptor {
    name: "munarini",
    anchor: "eq:munarini, \"Munarini's identity \\cite{Munarini}\"",
    status: StatusFlag::Normal,
    schema: &[ParamDecl::int("n", 0, Range(0, 4), true)],
    vars_summary: "alpha,beta,x",
    vars: vars_munarini,
    constraint: no_constraint,
    lhs: side!(k_to_n, munarini_lhs),
    rhs: side!(k_to_n, munarini_rhs),
    expected_difference: no_difference,
};

// simons: Σ_k (-1)^{n-k} C(n,k) C(n+k,k) (1+x)^k = Σ_k C(n,k) C(n+k,k) x^k

fn simons_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let x = ctx.var("x")?;
    let c = ctx.c(ctx.shifted_int(n), k).mul(&ctx.c(n + k, k));
    Ok(sign::<R>(n - k).mul(&c).mul(&x.add_int(1).pow(k as u32)))
}

fn simons_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.int("n"), i.k());
    let x = ctx.var("x")?;
    Ok(ctx.c(n, k).mul(&ctx.c(n + k, k)).mul(&x.pow(k as u32)))
}

pub(super) const SIMONS: IdentityDescriptor = IdentityDescriptor {
    name: "simons",
    anchor: "eq:simons, \"the following special case\"",
    status: StatusFlag::Normal,
    schema: &[ParamDecl::int("n", 0, Range(0, 6), true)],
    vars_summary: "x",
    vars: vars_x,
    constraint: no_constraint,
    lhs: side!(k_to_n, simons_lhs),
    rhs: side!(k_to_n, simons_rhs),
    expected_difference: no_difference,
};
