//! Multinomial-coefficient identities over vector indices: the vector
//! Chu–Vandermonde and Stirling sums, the composition lemma, Mohanty–Handa,
//! Chu's generalization, and the multinomial Munarini/Simons identities.
//!
//! Vector notation: `|k|` is the component sum, `k·z = Σ k_i z_i`,
//! `z^k = Π z_i^{k_i}`, and `C(p, k)` is the multinomial coefficient.

use super::params::{DefaultValues::*, ParamDecl, StructuralParams};
use super::*;
use crate::binomial::{multinomial, vec_dot, vec_factorial, vec_power};
use crate::enumeration::vec_compositions;

const NVEC: ParamDecl = ParamDecl::vector("nvec", Vectors { dims: (1, 3), max_norm: 4 }, true);
const S_1_3: ParamDecl = ParamDecl::int("s", 1, Range(1, 3), false);

fn m_of(p: &StructuralParams) -> usize {
    p.vec("nvec").dim()
}

fn vars_xy(_: &StructuralParams) -> Vec<String> {
    scalar_vars(&["x", "y"])
}

fn vars_none(_: &StructuralParams) -> Vec<String> {
    Vec::new()
}

fn blocks_of(n: &VecIndex, s: usize) -> Result<Domain> {
    Ok(Box::new(vec_compositions(n, s)?.map(Index::Blocks)))
}

fn blocks_nvec_s(p: &StructuralParams) -> Result<Domain> {
    blocks_of(p.vec("nvec"), p.int("s") as usize)
}

fn ones_plus<R: Ring>(xs: &[R], offset: i64) -> Vec<R> {
    xs.iter().map(|x| x.add_int(offset)).collect()
}

fn sum_of<R: Ring>(xs: &[R]) -> R {
    xs.iter().fold(R::zero(), |a, b| a.add(b))
}

// cv_multi: Σ_{0≤k≤n} C(x,k) C(y,n-k) = C(x+y,n)

fn cv_multi_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.vec("nvec"), i.vector());
    let (x, y) = (ctx.var("x")?, ctx.var("y")?);
    Ok(multinomial(&ctx.shifted(x), k).mul(&multinomial(&y, &n.sub(k)?)))
}

fn cv_multi_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, _: &Index) -> Result<R> {
    let sum = ctx.var("x")?.add(&ctx.var("y")?);
    Ok(multinomial(&sum, p.vec("nvec")))
}

pub(super) const CV_MULTI: IdentityDescriptor = IdentityDescriptor {
    name: "cv_multi",
    anchor: "eq:cvmulti, \"has the following trivial generalization\"",
    status: StatusFlag::Normal,
    schema: &[NVEC],
    vars_summary: "x,y",
    vars: vars_xy,
    constraint: no_constraint,
    lhs: side!(vec_to_nvec, cv_multi_lhs),
    rhs: side!(unit, cv_multi_rhs),
    expected_difference: no_difference,
};

// stirling_multi: Σ_{0≤k≤n} (-1)^{|n|-|k|} C(n,k) k^r
//               = 0 if some r_i < n_i, n! if r = n
// with C(n,k) = Π C(n_i,k_i).

fn stirling_multi_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, r, k) = (p.vec("nvec"), p.vec("rvec"), i.vector());
    let mut coeff = sign::<R>(n.norm() - k.norm());
    for (j, (&nj, &kj)) in n.components().iter().zip(k.components()).enumerate() {
        let upper = if j == 0 { ctx.shifted_int(nj) } else { nj };
        coeff = coeff.mul(&ctx.c(upper, kj));
    }
    let ks: Vec<R> = k.components().iter().map(|&c| ctx.int(c)).collect();
    Ok(coeff.mul(&vec_power(&ks, r)?))
}

fn stirling_multi_rhs<R: Ring>(_: &Ctx<R>, p: &StructuralParams, _: &Index) -> Result<R> {
    let (n, r) = (p.vec("nvec"), p.vec("rvec"));
    if r.components().iter().zip(n.components()).any(|(ri, ni)| ri < ni) {
        return Ok(R::zero());
    }
    Ok(R::from_rational(Rational::from(vec_factorial(n)?)))
}

fn rvec_within_nvec(p: &StructuralParams) -> std::result::Result<(), String> {
    let (n, r) = (p.vec("nvec"), p.vec("rvec"));
    if !r.le(n) {
        return Err(format!("rvec={r} must satisfy 0 <= rvec <= nvec={n}"));
    }
    Ok(())
}

pub(super) const STIRLING_MULTI: IdentityDescriptor = IdentityDescriptor {
    name: "stirling_multi",
    anchor: "eq:multi-stirling, \"can be easily generalized as\"",
    status: StatusFlag::Normal,
    schema: &[NVEC, ParamDecl::vector("rvec", VecUpTo("nvec"), false)],
    vars_summary: "-",
    vars: vars_none,
    constraint: rvec_within_nvec,
    lhs: side!(vec_to_nvec, stirling_multi_lhs),
    rhs: side!(unit, stirling_multi_rhs),
    expected_difference: no_difference,
};

// scalar_upper_composition: for a_1+..+a_s = |n|,
//   Σ_{k_1+..+k_s=n} Π C(a_i,k_i) = C(|n|,n)

fn blocks_nvec_avec(p: &StructuralParams) -> Result<Domain> {
    blocks_of(p.vec("nvec"), p.vec("avec").dim())
}

fn scalar_upper_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let a = p.vec("avec").components();
    let mut acc = R::one();
    for (j, (&ai, ki)) in a.iter().zip(i.blocks()).enumerate() {
        let upper = if j == 0 { ctx.shifted_int(ai) } else { ai };
        acc = acc.mul(&ctx.mc(upper, ki));
    }
    Ok(acc)
}

fn scalar_upper_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, _: &Index) -> Result<R> {
    let n = p.vec("nvec");
    Ok(ctx.mc(n.norm(), n))
}

fn avec_sums_to_norm(p: &StructuralParams) -> std::result::Result<(), String> {
    let (n, a) = (p.vec("nvec"), p.vec("avec"));
    if a.norm() != n.norm() {
        return Err(format!("avec={a} must sum to |nvec|={}", n.norm()));
    }
    Ok(())
}

pub(super) const SCALAR_UPPER_COMPOSITION: IdentityDescriptor = IdentityDescriptor {
    name: "scalar_upper_composition",
    anchor: "eq:multicv2, \"the following identity holds\"",
    status: StatusFlag::Normal,
    schema: &[NVEC, ParamDecl::vector("avec", CompositionsOfNorm { of: "nvec", parts: (1, 3) }, false)],
    vars_summary: "-",
    vars: vars_none,
    constraint: avec_sums_to_norm,
    lhs: side!(blocks_nvec_avec, scalar_upper_lhs),
    rhs: side!(unit, scalar_upper_rhs),
    expected_difference: no_difference,
};

// compositions_lemma: Σ_{k_1+..+k_s=n} Π C(|k_i|,k_i) = C(|n|+s-1,n)

fn lemma_lhs<R: Ring>(ctx: &Ctx<R>, _: &StructuralParams, i: &Index) -> Result<R> {
    let mut acc = R::one();
    for (j, ki) in i.blocks().iter().enumerate() {
        let upper = if j == 0 { ctx.shifted_int(ki.norm()) } else { ki.norm() };
        acc = acc.mul(&ctx.mc(upper, ki));
    }
    Ok(acc)
}

fn lemma_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, _: &Index) -> Result<R> {
    let n = p.vec("nvec");
    Ok(ctx.mc(n.norm() + p.int("s") - 1, n))
}

pub(super) const COMPOSITIONS_LEMMA: IdentityDescriptor = IdentityDescriptor {
    name: "compositions_lemma",
    anchor: "eq:lem, \"For $\\n\\in\\mathbb{N}^m$ and $s\\geq 1$, there holds\"",
    status: StatusFlag::Normal,
    schema: &[NVEC, S_1_3],
    vars_summary: "-",
    vars: vars_none,
    constraint: no_constraint,
    lhs: side!(blocks_nvec_s, lemma_lhs),
    rhs: side!(unit, lemma_rhs),
    expected_difference: no_difference,
};

// mohanty_handa: Σ_k C(x+k·z,k) C(y-k·z,n-k) = Σ_k C(x+y-|k|,n-k) C(|k|,k) z^k

fn vars_mh(p: &StructuralParams) -> Vec<String> {
    let mut v = scalar_vars(&["x", "y"]);
    v.extend(indexed_vars("z", m_of(p)));
    v
}

fn mh_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.vec("nvec"), i.vector());
    let (x, y) = (ctx.var("x")?, ctx.var("y")?);
    let kz = vec_dot(&ctx.vars("z", n.dim())?, k)?;
    Ok(multinomial(&ctx.shifted(x.add(&kz)), k).mul(&multinomial(&y.sub(&kz), &n.sub(k)?)))
}

fn mh_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.vec("nvec"), i.vector());
    let (x, y) = (ctx.var("x")?, ctx.var("y")?);
    let zs = ctx.vars("z", n.dim())?;
    let first = multinomial(&x.add(&y).add_int(-k.norm()), &n.sub(k)?);
    Ok(first.mul(&ctx.mc(k.norm(), k)).mul(&vec_power(&zs, k)?))
}

pub(super) const MOHANTY_HANDA: IdentityDescriptor = IdentityDescriptor {
    name: "mohanty_handa",
    anchor: "eq:mh, \"multinomial coefficient generalization of Jensen's identity\"",
    status: StatusFlag::Normal,
    schema: &[NVEC],
    vars_summary: "x,y,z1..zm",
    vars: vars_mh,
    constraint: no_constraint,
    lhs: side!(vec_to_nvec, mh_lhs),
    rhs: side!(vec_to_nvec, mh_rhs),
    expected_difference: no_difference,
};

// chu89: Σ_{k_1+..+k_s=n} Π C(x_i+k_i·z,k_i)
//      = Σ_k C(|k|+s-2,k) C(x_1+..+x_s+n·z-|k|,n-k) z^k

fn vars_chu89(p: &StructuralParams) -> Vec<String> {
    let mut v = indexed_vars("x", p.int("s") as usize);
    v.extend(indexed_vars("z", m_of(p)));
    v
}

fn chu89_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let xs = ctx.vars("x", p.int("s") as usize)?;
    let zs = ctx.vars("z", m_of(p))?;
    let mut acc = R::one();
    for (j, (ki, x)) in i.blocks().iter().zip(&xs).enumerate() {
        let upper = x.add(&vec_dot(&zs, ki)?);
        let upper = if j == 0 { ctx.shifted(upper) } else { upper };
        acc = acc.mul(&multinomial(&upper, ki));
    }
    Ok(acc)
}

fn chu89_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, s, k) = (p.vec("nvec"), p.int("s"), i.vector());
    let xs = ctx.vars("x", s as usize)?;
    let zs = ctx.vars("z", n.dim())?;
    let upper = sum_of(&xs).add(&vec_dot(&zs, n)?).add_int(-k.norm());
    let c = ctx.mc(k.norm() + s - 2, k);
    Ok(c.mul(&multinomial(&upper, &n.sub(k)?)).mul(&vec_power(&zs, k)?))
}

pub(super) const CHU89: IdentityDescriptor = IdentityDescriptor {
    name: "chu89",
    anchor: "eq:chu89, \"Mohanty-Handa's identity was generalized by Chu\"",
    status: StatusFlag::Normal,
    schema: &[NVEC, S_1_3],
    vars_summary: "x1..xs,z1..zm",
    vars: vars_chu89,
    constraint: no_constraint,
    lhs: side!(blocks_nvec_s, chu89_lhs),
    rhs: side!(vec_to_nvec, chu89_rhs),
    expected_difference: no_difference,
};

// chu89_alt: same left side,
//   = Σ_j C(|j|+s-2,j) C(x_1+..+x_s+n·z+s-1,n-j) (z-1)^j

fn chu89_alt_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, s, j) = (p.vec("nvec"), p.int("s"), i.vector());
    let xs = ctx.vars("x", s as usize)?;
    let zs = ctx.vars("z", n.dim())?;
    let upper = sum_of(&xs).add(&vec_dot(&zs, n)?).add_int(s - 1);
    let c = ctx.mc(j.norm() + s - 2, j);
    Ok(c.mul(&multinomial(&upper, &n.sub(j)?)).mul(&vec_power(&ones_plus(&zs, -1), j)?))
}

pub(super) const CHU89_ALT: IdentityDescriptor = IdentityDescriptor {
    name: "chu89_alt",
    anchor: "eq:multi-finalpf, \"Applying \\eqref{eq:multi-stirling}, we get\"",
    status: StatusFlag::Normal,
    schema: &[NVEC, S_1_3],
    vars_summary: "x1..xs,z1..zm",
    vars: vars_chu89,
    constraint: no_constraint,
    lhs: side!(blocks_nvec_s, chu89_lhs),
    rhs: side!(vec_to_nvec, chu89_alt_rhs),
    expected_difference: no_difference,
};

// newmulti: Σ_k C(|k|+s,k) C(x-|k|,n-k) z^k = Σ_k C(|k|+s,k) C(x+s+1,n-k) (z-1)^k

fn vars_newmulti(p: &StructuralParams) -> Vec<String> {
    let mut v = scalar_vars(&["x"]);
    v.extend(indexed_vars("z", m_of(p)));
    v
}

fn newmulti_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, s, k) = (p.vec("nvec"), p.int("s"), i.vector());
    let x = ctx.var("x")?;
    let zs = ctx.vars("z", n.dim())?;
    let lead = ctx.mc(ctx.shifted_int(k.norm() + s), k);
    Ok(lead.mul(&multinomial(&x.add_int(-k.norm()), &n.sub(k)?)).mul(&vec_power(&zs, k)?))
}

fn newmulti_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, s, k) = (p.vec("nvec"), p.int("s"), i.vector());
    let x = ctx.var("x")?;
    let zs = ctx.vars("z", n.dim())?;
    let lead = ctx.mc(k.norm() + s, k);
    Ok(lead.mul(&multinomial(&x.add_int(s + 1), &n.sub(k)?)).mul(&vec_power(&ones_plus(&zs, -1), k)?))
}

pub(super) const NEWMULTI: IdentityDescriptor = IdentityDescriptor {
    name: "newmulti",
    anchor: "eq:newmulti, \"For $\\n\\in\\mathbb{N}^m$ and $\\z\\in\\mathbb{C}^m$, there holds\"",
    status: StatusFlag::Normal,
    schema: &[NVEC, ParamDecl::int("s", 0, Range(0, 3), false)],
    vars_summary: "x,z1..zm",
    vars: vars_newmulti,
    constraint: no_constraint,
    lhs: side!(vec_to_nvec, newmulti_lhs),
    rhs: side!(vec_to_nvec, newmulti_rhs),
    expected_difference: no_difference,
};

// multi_munarini, α and β integers:
//   Σ_k (-1)^{|n|-|k|} C(β-α+|n|,n-k) C(β+|k|,k) (1+x)^k
//     = Σ_k C(α,n-k) C(β+|k|,k) x^k
// with (1+x)^k = Π (1+x_i)^{k_i}.

fn vars_xm(p: &StructuralParams) -> Vec<String> {
    indexed_vars("x", m_of(p))
}

fn multi_munarini_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.vec("nvec"), i.vector());
    let (alpha, beta) = (p.int("alpha"), p.int("beta"));
    let xs = ctx.vars("x", n.dim())?;
    let first = ctx.mc(ctx.shifted_int(beta - alpha + n.norm()), &n.sub(k)?);
    let second = ctx.mc(beta + k.norm(), k);
    let power = vec_power(&ones_plus(&xs, 1), k)?;
    Ok(sign::<R>(n.norm() - k.norm()).mul(&first).mul(&second).mul(&power))
}

fn multi_munarini_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.vec("nvec"), i.vector());
    let (alpha, beta) = (p.int("alpha"), p.int("beta"));
    let xs = ctx.vars("x", n.dim())?;
    let c = ctx.mc(alpha, &n.sub(k)?).mul(&ctx.mc(beta + k.norm(), k));
    Ok(c.mul(&vec_power(&xs, k)?))
}

pub(super) const MULTI_MUNARINI: IdentityDescriptor = IdentityDescriptor {
    name: "multi_munarini",
    anchor: "eq:multi-munarini, \"a generalization of Munarini's identity\"",
    status: StatusFlag::Normal,
    schema: &[
        NVEC,
        ParamDecl::int("alpha", i64::MIN, RangeAndNorm(0, 3, "nvec"), false),
        ParamDecl::int("beta", i64::MIN, RangeAndNorm(0, 3, "nvec"), false),
    ],
    vars_summary: "x1..xm",
    vars: vars_xm,
    constraint: no_constraint,
    lhs: side!(vec_to_nvec, multi_munarini_lhs),
    rhs: side!(vec_to_nvec, multi_munarini_rhs),
    expected_difference: no_difference,
};

// multi_simons:
//   Σ_k (-1)^{|n|-|k|} C(|n|,n-k) C(|n|+|k|,k) (1+x)^k = Σ_k C(|n|,n-k) C(|n|+|k|,k) x^k

fn multi_simons_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.vec("nvec"), i.vector());
    let xs = ctx.vars("x", n.dim())?;
    let c = ctx.mc(ctx.shifted_int(n.norm()), &n.sub(k)?).mul(&ctx.mc(n.norm() + k.norm(), k));
    let power = vec_power(&ones_plus(&xs, 1), k)?;
    Ok(sign::<R>(n.norm() - k.norm()).mul(&c).mul(&power))
}

fn multi_simons_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, k) = (p.vec("nvec"), i.vector());
    let xs = ctx.vars("x", n.dim())?;
    let c = ctx.mc(n.norm(), &n.sub(k)?).mul(&ctx.mc(n.norm() + k.norm(), k));
    Ok(c.mul(&vec_power(&xs, k)?))
}

pub(super) const MULTI_SIMONS: IdentityDescriptor = IdentityDescriptor {
    name: "multi_simons",
    anchor: "unnumbered after eq:multi-munarini, \"generalization of Simons' identity\"",
    status: StatusFlag::Normal,
    schema: &[NVEC],
    vars_summary: "x1..xm",
    vars: vars_xm,
    constraint: no_constraint,
    lhs: side!(vec_to_nvec, multi_simons_lhs),
    rhs: side!(vec_to_nvec, multi_simons_rhs),
    expected_difference: no_difference,
};
