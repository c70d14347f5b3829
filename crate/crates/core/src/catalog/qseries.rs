//! q-analogues: Gaussian binomials `[a, k]` and q-shifted factorials
//! `(a;q)_n = (1-a)(1-aq)...(1-aq^{n-1})`, in the Laurent ring over `q`.

use super::params::{DefaultValues::*, ParamDecl, StructuralParams};
use super::*;

fn vars_xq(_: &StructuralParams) -> Vec<String> {
    scalar_vars(&["q", "x"])
}

// hou_zeng_q:
//   Σ_{k=0}^m (-1)^{m-k} [m,k] [n+k,a] (-xq^a;q)_{n+k-a} q^{C(k+1,2)-mk+C(a,2)}
//     = Σ_{k=0}^n [n,k] [m+k,a] x^{m+k-a} q^{mn+C(k,2)}
// Summands whose [·,a] vanishes are skipped before the negative-length
// product or power is formed.

fn hz_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (m, n, a, k) = (p.int("m"), p.int("n"), p.int("a"), i.k());
    let g = ctx.gauss(n + k, a)?;
    if g.is_zero() {
        return Ok(R::zero());
    }
    if n + k - a < 0 {
        return Err(Error::Guard(format!("(-xq^a;q)_{{{}}} with a nonzero coefficient", n + k - a)));
    }
    let base = ctx.var("x")?.neg().mul(&ctx.q_power(a)?);
    let poch = ctx.q_poch(&base, n + k - a)?;
    let qe = ctx.q_power(choose2(k + 1) - m * k + choose2(a))?;
    let lead = ctx.gauss(ctx.shifted_int(m), k)?;
    Ok(sign::<R>(m - k).mul(&lead).mul(&g).mul(&poch).mul(&qe))
}

fn hz_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (m, n, a, k) = (p.int("m"), p.int("n"), p.int("a"), i.k());
    let g = ctx.gauss(m + k, a)?;
    if g.is_zero() {
        return Ok(R::zero());
    }
    let power = guarded_pow(&ctx.var("x")?, m + k - a, "x")?;
    let qe = ctx.q_power(m * n + choose2(k))?;
    Ok(ctx.gauss(n, k)?.mul(&g).mul(&power).mul(&qe))
}

pub(super) const HOU_ZENG_Q: IdentityDescriptor = IdentityDescriptor {
    name: "hou_zeng_q",
    anchor: "eq:hz, \"Hou and Zeng's q-analogue\"",
    status: StatusFlag::Normal,
    schema: &[
        ParamDecl::int("m", 0, Range(0, 3), true),
        ParamDecl::int("n", 0, Range(0, 3), true),
        ParamDecl::int("a", 0, Range(0, 3), true),
    ],
    vars_summary: "q,x",
    vars: vars_xq,
    constraint: no_constraint,
    lhs: side!(k_to_m, hz_lhs),
    rhs: side!(k_to_n, hz_rhs),
    expected_difference: no_difference,
};

// munarini_q, α and β integers:
//   Σ_k (-1)^{n-k} [β-α+n,n-k] [β+k,k] q^{C(n-k,2)-C(n,2)} (-x;q)_k
//     = Σ_k [α,n-k] [β+k,k] q^{C(n-k+1,2)+(β-α)(n-k)} x^k

fn mq_lhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, alpha, beta, k) = (p.int("n"), p.int("alpha"), p.int("beta"), i.k());
    let first = ctx.gauss(ctx.shifted_int(beta - alpha + n), n - k)?;
    let second = ctx.gauss(beta + k, k)?;
    let qe = ctx.q_power(choose2(n - k) - choose2(n))?;
    let poch = ctx.q_poch(&ctx.var("x")?.neg(), k)?;
    Ok(sign::<R>(n - k).mul(&first).mul(&second).mul(&qe).mul(&poch))
}

fn mq_rhs<R: Ring>(ctx: &Ctx<R>, p: &StructuralParams, i: &Index) -> Result<R> {
    let (n, alpha, beta, k) = (p.int("n"), p.int("alpha"), p.int("beta"), i.k());
    let c = ctx.gauss(alpha, n - k)?.mul(&ctx.gauss(beta + k, k)?);
    let qe = ctx.q_power(choose2(n - k + 1) + (beta - alpha) * (n - k))?;
    Ok(c.mul(&qe).mul(&ctx.var("x")?.pow(k as u32)))
}

pub(super) const MUNARINI_Q: IdentityDescriptor = IdentityDescriptor {
    name: "munarini_q",
    anchor: "eq:hznew, \"a q-analogue of Munarini's identity\"",
    status: StatusFlag::Normal,
    schema: &[
        ParamDecl::int("n", 0, Range(0, 3), true),
        ParamDecl::int("alpha", i64::MIN, Range(0, 3), false),
        ParamDecl::int("beta", i64::MIN, Range(0, 3), false),
    ],
    vars_summary: "q,x",
    vars: vars_xq,
    constraint: no_constraint,
    lhs: side!(k_to_n, mq_lhs),
    rhs: side!(k_to_n, mq_rhs),
    expected_difference: no_difference,
};
