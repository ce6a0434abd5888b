//! The per-`t` polynomial equations whose roots in `mu_(q+1)` are the
//! fibers of the fractional maps.

use serde::Serialize;

use super::family::Family;
use crate::error::{Error, Result};
use crate::gf3m::{FieldCtx, FieldElement};
use crate::permtest::{mu_q_plus_1, UnityGroup};
use crate::polyring::{roots_in_set, Poly};

/// `F_t = x^5 + t x^4 - x^3 + t x^2 - x - t`.
pub fn fifth_degree(t: FieldElement) -> Poly {
    let one = FieldElement::ONE;
    Poly::from_coeffs(vec![-t, -one, t, -one, t, one])
}

/// `G_t = x^7 + t x^6 + t x^4 - x^3 - x - t`.
pub fn seventh_degree(t: FieldElement) -> Poly {
    let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
    Poly::from_coeffs(vec![-t, -one, zero, -one, t, zero, t, one])
}

/// `H_t = x^7 + (t - 1) x^6 + (t - 1) x - t`.
pub fn family_one_seventh(t: FieldElement) -> Poly {
    let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
    let s = t - one;
    Poly::from_coeffs(vec![-t, s, zero, zero, zero, zero, s, one])
}

/// The equation whose roots in `mu_(q+1)` solve `g(x) = t` for families 1
/// and 3, and `g(x) = 1/t` for family 2.
pub fn fiber_equation(family: Family, t: FieldElement) -> Poly {
    match family {
        Family::One => family_one_seventh(t),
        Family::Two => seventh_degree(t),
        Family::Three => fifth_degree(t),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionCount {
    pub t: FieldElement,
    pub count: usize,
    /// Ascending by encoding.
    pub roots: Vec<FieldElement>,
}

pub(crate) fn count_in(
    ctx: &FieldCtx,
    mu: &UnityGroup,
    poly: &Poly,
    t: FieldElement,
) -> Result<SolutionCount> {
    if !mu.contains(t) {
        return Err(Error::NotInMu(t.encode()));
    }
    let roots = roots_in_set(ctx, poly, mu.iter())?;
    Ok(SolutionCount {
        t,
        count: roots.len(),
        roots,
    })
}

/// Solutions of `F_t = 0` in `mu_(q+1)`.
pub fn count_solutions_eq5(t: FieldElement, ctx: &FieldCtx) -> Result<SolutionCount> {
    count_in(ctx, &mu_q_plus_1(ctx), &fifth_degree(t), t)
}

/// Solutions of `G_t = 0` in `mu_(q+1)`.
pub fn count_solutions_eq7(t: FieldElement, ctx: &FieldCtx) -> Result<SolutionCount> {
    count_in(ctx, &mu_q_plus_1(ctx), &seventh_degree(t), t)
}

/// Fiber equation counts for every `t` in `mu`, ascending in `t`.
pub fn count_all(family: Family, ctx: &FieldCtx, mu: &UnityGroup) -> Vec<SolutionCount> {
    use rayon::prelude::*;
    mu.elements()
        .par_iter()
        .map(|&t| count_in(ctx, mu, &fiber_equation(family, t), t).expect("t is in mu"))
        .collect()
}
