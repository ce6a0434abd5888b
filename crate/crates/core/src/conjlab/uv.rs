//! The `(u, v)` substitution for quadratic factors of
//! `x^7 + (t - 1) x^6 + (t - 1) x - t`.

use rayon::prelude::*;
use serde::Serialize;

use super::equations::family_one_seventh;
use super::lemmas::conjugate_condition;
use crate::error::Result;
use crate::gf3m::{FieldCtx, FieldElement};
use crate::permtest::{mu_q_plus_1, UnityGroup};
use crate::polyring::quadratic_factors;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UVWitness {
    pub t: FieldElement,
    pub a: FieldElement,
    pub b: FieldElement,
    pub u: FieldElement,
    pub v: FieldElement,
    pub sextic: bool,
    pub cubic: bool,
    pub shifted: bool,
    /// `u a = b + 1` and `v a^2 = b`.
    pub definitions: bool,
    /// `u = a^-1 + a^-q` and `v = a^-1 a^-q`.
    pub conjugate_form: bool,
}

impl UVWitness {
    pub fn holds(&self) -> bool {
        self.sextic && self.cubic && self.shifted && self.definitions && self.conjugate_form
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct UvReport {
    pub k: u32,
    pub witnesses: Vec<UVWitness>,
    /// Factors with `ab != 0` that violate `a^q b = a`; not checked.
    pub off_hypothesis: usize,
}

impl UvReport {
    pub fn holds(&self) -> bool {
        self.witnesses.iter().all(UVWitness::holds)
    }

    pub fn failures(&self) -> usize {
        self.witnesses.iter().filter(|w| !w.holds()).count()
    }
}

/// `a^6 + a^5 b + a^5 + a^4 b - a^3 b^2 - a^3 b - b^6 - b^3 - 1`.
pub fn sextic(ctx: &FieldCtx, a: FieldElement, b: FieldElement) -> FieldElement {
    let p = |x, e| ctx.pow(x, e);
    let m = |x, y| ctx.mul(x, y);
    let (a3, a4, a5) = (p(a, 3), p(a, 4), p(a, 5));
    p(a, 6) + m(a5, b) + a5 + m(a4, b)
        - m(a3, ctx.square(b))
        - m(a3, b)
        - p(b, 6)
        - p(b, 3)
        - FieldElement::ONE
}

/// `v^3 - (u - 1) v - (u^6 - u - 1)`.
pub fn uv_cubic(ctx: &FieldCtx, u: FieldElement, v: FieldElement) -> FieldElement {
    let one = FieldElement::ONE;
    ctx.cube(v) - ctx.mul(u - one, v) - (ctx.pow(u, 6) - u - one)
}

/// `(v - 1)^3 - (u - 1)(v - 1) - u^6`.
pub fn uv_shifted(ctx: &FieldCtx, u: FieldElement, v: FieldElement) -> FieldElement {
    let one = FieldElement::ONE;
    ctx.cube(v - one) - ctx.mul(u - one, v - one) - ctx.pow(u, 6)
}

/// Harvests every quadratic factor with `ab != 0` and `a^q b = a` over all
/// `t` in `mu_(q+1)` and evaluates the identities at it.
pub fn uv_identity_check(ctx: &FieldCtx) -> Result<UvReport> {
    uv_in(ctx, &mu_q_plus_1(ctx))
}

pub(crate) fn uv_in(ctx: &FieldCtx, mu: &UnityGroup) -> Result<UvReport> {
    let per_t: Vec<(Vec<UVWitness>, usize)> = mu
        .elements()
        .par_iter()
        .map(|&t| {
            let mut found = Vec::new();
            let mut off = 0;
            for (a, b) in quadratic_factors(ctx, &family_one_seventh(t))? {
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                if conjugate_condition(ctx, a, b) {
                    found.push(witness(ctx, t, a, b)?);
                } else {
                    off += 1;
                }
            }
            Ok((found, off))
        })
        .collect::<Result<_>>()?;
    let mut report = UvReport {
        k: ctx.k(),
        ..UvReport::default()
    };
    for (found, off) in per_t {
        report.witnesses.extend(found);
        report.off_hypothesis += off;
    }
    Ok(report)
}

fn witness(ctx: &FieldCtx, t: FieldElement, a: FieldElement, b: FieldElement) -> Result<UVWitness> {
    let one = FieldElement::ONE;
    let u = ctx.div(b + one, a)?;
    let v = ctx.div(b, ctx.square(a))?;
    let ia = ctx.inv(a)?;
    let iaq = ctx.conjugate_q(ia);
    Ok(UVWitness {
        t,
        a,
        b,
        u,
        v,
        sextic: sextic(ctx, a, b).is_zero(),
        cubic: uv_cubic(ctx, u, v).is_zero(),
        shifted: uv_shifted(ctx, u, v).is_zero(),
        definitions: ctx.mul(u, a) == b + one && ctx.mul(v, ctx.square(a)) == b,
        conjugate_form: u == ia + iaq && v == ctx.mul(ia, iaq),
    })
}
