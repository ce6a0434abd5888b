//! Quadratic factors of the fifth- and seventh-degree fiber equations, the
//! relations they must satisfy, and the per-field facts that rule out two
//! distinct roots in `mu_(q+1)`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::equations::{count_in, fifth_degree, seventh_degree, SolutionCount};
use super::family::Family;
use crate::error::{Error, Result};
use crate::gf3m::{FieldCtx, FieldElement};
use crate::permtest::{mu_q_plus_1, UnityGroup};
use crate::polyring::{quadratic_factors, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LemmaCase {
    EpsilonCase,
    ThetaCase,
    FifthDegreeRelation,
    NoMatch,
}

impl LemmaCase {
    pub fn name(self) -> &'static str {
        match self {
            LemmaCase::EpsilonCase => "EpsilonCase",
            LemmaCase::ThetaCase => "ThetaCase",
            LemmaCase::FifthDegreeRelation => "FifthDegreeRelation",
            LemmaCase::NoMatch => "NoMatch",
        }
    }

    pub fn parse(text: &str) -> Option<LemmaCase> {
        [
            LemmaCase::EpsilonCase,
            LemmaCase::ThetaCase,
            LemmaCase::FifthDegreeRelation,
            LemmaCase::NoMatch,
        ]
        .into_iter()
        .find(|c| c.name() == text)
    }
}

impl fmt::Display for LemmaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A monic quadratic `x^2 + a x + b` dividing `F_t` (degree 5) or `G_t`
/// (degree 7).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadFactorWitness {
    pub t: FieldElement,
    pub a: FieldElement,
    pub b: FieldElement,
    pub degree: u8,
    pub lemma_case: LemmaCase,
    pub x1: Option<FieldElement>,
    pub x2: Option<FieldElement>,
}

impl QuadFactorWitness {
    pub fn quadratic(&self) -> Poly {
        Poly::from_coeffs(vec![self.b, self.a, FieldElement::ONE])
    }

    pub fn target(&self) -> Poly {
        target(self.degree, self.t)
    }

    /// Both roots lie in the field and in `mu`.
    pub fn roots_in(&self, mu: &UnityGroup) -> bool {
        matches!((self.x1, self.x2), (Some(x1), Some(x2)) if mu.contains(x1) && mu.contains(x2))
    }

    pub fn has_distinct_roots(&self) -> bool {
        matches!((self.x1, self.x2), (Some(x1), Some(x2)) if x1 != x2)
    }
}

fn target(degree: u8, t: FieldElement) -> Poly {
    if degree == 5 {
        fifth_degree(t)
    } else {
        seventh_degree(t)
    }
}

/// Roots `a - s`, `a + s` of `x^2 + a x + b` with `s^2 = a^2 - b` (in
/// characteristic 3, `-a/2 = a`), when `a^2 - b` is a square.
pub fn factor_roots(
    ctx: &FieldCtx,
    a: FieldElement,
    b: FieldElement,
) -> Option<(FieldElement, FieldElement)> {
    let s = ctx.sqrt(ctx.square(a) - b)?;
    Some((a - s, a + s))
}

/// `a^q b = a`, the shape forced on `(a, b)` by two roots in `mu_(q+1)`.
pub fn conjugate_condition(ctx: &FieldCtx, a: FieldElement, b: FieldElement) -> bool {
    ctx.mul(ctx.conjugate_q(a), b) == a
}

/// Divides `target` by `x^2 + a x + b` and returns the cofactor.
fn cofactor(ctx: &FieldCtx, target: &Poly, a: FieldElement, b: FieldElement) -> Result<Poly> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Precondition(format!(
            "witness needs ab != 0 (a = {a}, b = {b})"
        )));
    }
    let quad = Poly::from_coeffs(vec![b, a, FieldElement::ONE]);
    let (quot, rem) = target.divrem(ctx, &quad)?;
    if !rem.is_zero() {
        return Err(Error::Precondition(format!(
            "x^2 + {a} x + {b} does not divide the target polynomial"
        )));
    }
    Ok(quot)
}

fn witness_degree(w: &QuadFactorWitness, expected: u8) -> Result<()> {
    if w.degree != expected {
        return Err(Error::Precondition(format!(
            "expected a degree-{expected} witness, got degree {}",
            w.degree
        )));
    }
    Ok(())
}

/// `a^2 = (e - 1) b^2 - (e + 1) b + (e - 1)` for `e = epsilon` or `-epsilon`.
pub fn verify_lemma2_relation(ctx: &FieldCtx, w: &QuadFactorWitness) -> Result<bool> {
    witness_degree(w, 5)?;
    cofactor(ctx, &w.target(), w.a, w.b)?;
    Ok(lemma2_relation_holds(ctx, w.a, w.b))
}

fn lemma2_relation_holds(ctx: &FieldCtx, a: FieldElement, b: FieldElement) -> bool {
    let one = FieldElement::ONE;
    let eps = ctx.epsilon();
    let (a2, b2) = (ctx.square(a), ctx.square(b));
    [eps, -eps]
        .into_iter()
        .any(|e| a2 == ctx.mul(e - one, b2) - ctx.mul(e + one, b) + (e - one))
}

/// `(b - 1)^4 + (b^4 + 1) = -(b + 1)^4`: the discriminant of the quartic in
/// `a^2`, with `4 = 1`.
pub fn discriminant_identity(ctx: &FieldCtx, b: FieldElement) -> bool {
    let one = FieldElement::ONE;
    let p4 = |x: FieldElement| ctx.pow(x, 4);
    p4(b - one) + p4(b) + one == -p4(b + one)
}

/// Rechecks the coefficient system for `F_t = (x^2 + a x + b)(x^3 + s1 x^2 +
/// s2 x + s3)`, both ways of solving it for `s1, s2, s3`, the two linear
/// relations in `t` and the discriminant identity.
pub fn verify_lemma2_derivation(
    ctx: &FieldCtx,
    a: FieldElement,
    b: FieldElement,
    t: FieldElement,
) -> Result<bool> {
    let cof = cofactor(ctx, &fifth_degree(t), a, b)?;
    let m = |x: FieldElement, y: FieldElement| ctx.mul(x, y);
    let one = FieldElement::ONE;
    let (s1, s2, s3) = (cof.coeff(2), cof.coeff(1), cof.coeff(0));

    let system = a + s1 == t
        && b + s2 + m(a, s1) == -one
        && m(b, s1) + m(a, s2) + s3 == t
        && m(a, s3) + m(b, s2) == -one
        && m(b, s3) == -t;

    let (a2, b2, b3) = (ctx.square(a), ctx.square(b), ctx.cube(b));
    let forward = s1 == t - a && s2 == a2 - m(a, t) - b - one;
    let backward = s3 == -ctx.div(t, b)? && s2 == ctx.div(m(a, t) - b, b2)?;

    let eq1 = m(a + m(a, b2), t) == m(a2, b2) - b3 - b2 + b;
    let eq2 = m(b3 - b2 - b + a2, t) == m(a, b3) + m(a, b);

    Ok(system && forward && backward && eq1 && eq2 && discriminant_identity(ctx, b))
}

/// The two vanishing conditions the case analysis excludes:
/// `a + a b^2 = 0` and `b^3 - b^2 - b + a^2 = 0`.
pub fn fifth_degree_excluded_cases(
    ctx: &FieldCtx,
    a: FieldElement,
    b: FieldElement,
) -> (bool, bool) {
    let b2 = ctx.square(b);
    (
        (a + ctx.mul(a, b2)).is_zero(),
        (ctx.cube(b) - b2 - b + ctx.square(a)).is_zero(),
    )
}

/// Classifies a degree-7 witness satisfying `a^q b = a`.
pub fn verify_lemma4_relation(ctx: &FieldCtx, w: &QuadFactorWitness) -> Result<LemmaCase> {
    witness_degree(w, 7)?;
    cofactor(ctx, &w.target(), w.a, w.b)?;
    if !conjugate_condition(ctx, w.a, w.b) {
        return Err(Error::Precondition(format!(
            "witness (a, b) = ({}, {}) violates a^q b = a",
            w.a, w.b
        )));
    }
    Ok(lemma4_case(ctx, w.a, w.b))
}

fn lemma4_case(ctx: &FieldCtx, a: FieldElement, b: FieldElement) -> LemmaCase {
    let one = FieldElement::ONE;
    let eps = ctx.epsilon();
    if b == -one && (a == eps || a == -eps) {
        return LemmaCase::EpsilonCase;
    }
    let (a2, b2) = (ctx.square(a), ctx.square(b));
    let theta_match = ctx
        .theta_roots()
        .into_iter()
        .any(|th| a2 == ctx.mul(th, b2) - ctx.mul(th - one, b) + th);
    if theta_match {
        LemmaCase::ThetaCase
    } else {
        LemmaCase::NoMatch
    }
}

/// Rechecks the seven coefficient identities for `G_t = (x^2 + a x + b) *
/// (x^5 + s1 x^4 + ... + s5)`, the forward and backward solutions for the
/// `s_i`, and the two linear relations in `t`.
pub fn verify_lemma4_derivation(
    ctx: &FieldCtx,
    a: FieldElement,
    b: FieldElement,
    t: FieldElement,
) -> Result<bool> {
    let cof = cofactor(ctx, &seventh_degree(t), a, b)?;
    let m = |x: FieldElement, y: FieldElement| ctx.mul(x, y);
    let (zero, one) = (FieldElement::ZERO, FieldElement::ONE);
    let s: Vec<FieldElement> = (0..5).map(|i| cof.coeff(4 - i)).collect();
    let (s1, s2, s3, s4, s5) = (s[0], s[1], s[2], s[3], s[4]);

    let system = a + s1 == t
        && b + m(a, s1) + s2 == zero
        && m(b, s1) + m(a, s2) + s3 == t
        && m(b, s2) + m(a, s3) + s4 == -one
        && m(b, s3) + m(a, s4) + s5 == zero
        && m(a, s5) + m(b, s4) == -one
        && m(b, s5) == -t;

    let (a2, a3, a4) = (ctx.square(a), ctx.cube(a), ctx.pow(a, 4));
    let (b2, b3, b4) = (ctx.square(b), ctx.cube(b), ctx.pow(b, 4));
    let (at, bt, ab) = (m(a, t), m(b, t), m(a, b));
    let forward = s1 == t - a
        && s2 == a2 - at - b
        && s3 == t - a3 + m(a2, t) - bt - ab
        && s4 == -one - at + a4 - m(a3, t) - m(ab, t) + b2;
    let backward = s5 == -ctx.div(t, b)?
        && s4 == ctx.div(at - b, b2)?
        && s3 == ctx.div(ab + bt - m(a2, t), b3)?;

    let eq1 = m(m(a2, b3) + a2 - b4 + b3 - b, t) == m(a3, b3) + m(a, b4) + ab;
    let eq2 = m(a + m(a, b2) + m(a3, b2) + m(a, b3), t) == m(a4, b2) + b4 - b2 + b;

    Ok(system && forward && backward && eq1 && eq2)
}

/// `a^2 b^3 + a^2 - b^4 + b^3 - b = 0`, the case the seventh-degree analysis
/// rules out.
pub fn seventh_degree_excluded_case(ctx: &FieldCtx, a: FieldElement, b: FieldElement) -> bool {
    let (a2, b3) = (ctx.square(a), ctx.cube(b));
    (ctx.mul(a2, b3) + a2 - ctx.pow(b, 4) + b3 - b).is_zero()
}

/// Witnesses split by the `a^q b = a` hypothesis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Harvest {
    pub witnesses: Vec<QuadFactorWitness>,
    /// Degree-7 factors with `ab != 0` that violate `a^q b = a`.
    pub off_hypothesis: Vec<QuadFactorWitness>,
}

impl Harvest {
    pub fn histogram(&self) -> BTreeMap<String, usize> {
        let mut hist = BTreeMap::new();
        for w in &self.witnesses {
            *hist.entry(w.lemma_case.name().to_string()).or_default() += 1;
        }
        hist
    }

    pub fn count(&self, case: LemmaCase) -> usize {
        self.witnesses
            .iter()
            .filter(|w| w.lemma_case == case)
            .count()
    }
}

/// All quadratic factors with `ab != 0` of `F_t` (degree 5) or `G_t`
/// (degree 7) for every `t` in `mu_(q+1)`, ordered by `(t, a, b)`.
pub fn harvest_witnesses(ctx: &FieldCtx, degree: u8) -> Result<Harvest> {
    harvest_in(ctx, &mu_q_plus_1(ctx), degree)
}

pub(crate) fn harvest_in(ctx: &FieldCtx, mu: &UnityGroup, degree: u8) -> Result<Harvest> {
    if degree != 5 && degree != 7 {
        return Err(Error::Precondition(format!(
            "witness degree must be 5 or 7, got {degree}"
        )));
    }
    let per_t: Vec<Vec<(FieldElement, FieldElement, FieldElement)>> = mu
        .elements()
        .par_iter()
        .map(|&t| {
            let factors = quadratic_factors(ctx, &target(degree, t))?;
            Ok(factors
                .into_iter()
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .map(|(a, b)| (t, a, b))
                .collect())
        })
        .collect::<Result<_>>()?;

    let mut harvest = Harvest::default();
    for (t, a, b) in per_t.into_iter().flatten() {
        let (x1, x2) = factor_roots(ctx, a, b).unzip();
        let on_hypothesis = degree == 5 || conjugate_condition(ctx, a, b);
        let lemma_case = match degree {
            5 if lemma2_relation_holds(ctx, a, b) => LemmaCase::FifthDegreeRelation,
            7 if on_hypothesis => lemma4_case(ctx, a, b),
            _ => LemmaCase::NoMatch,
        };
        let w = QuadFactorWitness {
            t,
            a,
            b,
            degree,
            lemma_case,
            x1,
            x2,
        };
        if on_hypothesis {
            harvest.witnesses.push(w);
        } else {
            harvest.off_hypothesis.push(w);
        }
    }
    Ok(harvest)
}

/// One field fact used to rule out two distinct roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ingredient {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExclusionReport {
    pub family: Family,
    pub k: u32,
    pub counts: Vec<SolutionCount>,
    pub max_count: usize,
    /// Values of `t` with two or more roots in `mu_(q+1)`.
    pub counterexamples: Vec<SolutionCount>,
    /// Witnesses with two distinct roots, both in `mu_(q+1)`.
    pub distinct_pairs: Vec<QuadFactorWitness>,
    pub ingredients: Vec<Ingredient>,
}

impl ExclusionReport {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
            && self.distinct_pairs.is_empty()
            && self.ingredients.iter().all(|i| i.holds)
    }
}

/// Checks that the fiber equation of family 3 (fifth degree) or family 2
/// (seventh degree) has at most one root in `mu_(q+1)` for every `t`, and
/// recomputes the field facts the argument depends on.
pub fn distinct_root_exclusion(family: Family, ctx: &FieldCtx) -> Result<ExclusionReport> {
    let mu = mu_q_plus_1(ctx);
    let harvest = match family {
        Family::Two => harvest_in(ctx, &mu, 7)?,
        Family::Three if ctx.k() % 4 != 2 => harvest_in(ctx, &mu, 5)?,
        _ => Harvest::default(),
    };
    exclusion_in(family, ctx, &mu, &harvest)
}

pub(crate) fn exclusion_in(
    family: Family,
    ctx: &FieldCtx,
    mu: &UnityGroup,
    harvest: &Harvest,
) -> Result<ExclusionReport> {
    let k = ctx.k();
    let (degree, poly): (u8, fn(FieldElement) -> Poly) = match family {
        Family::One => {
            return Err(Error::Precondition(
                "distinct-root exclusion covers families 2 and 3 only".into(),
            ))
        }
        Family::Two => (7, seventh_degree),
        Family::Three if k % 4 == 2 => {
            return Err(Error::Precondition(format!(
                "family 3 exclusion needs k != 2 mod 4 (k = {k})"
            )))
        }
        Family::Three => (5, fifth_degree),
    };
    let counts: Vec<SolutionCount> = mu
        .elements()
        .par_iter()
        .map(|&t| count_in(ctx, mu, &poly(t), t))
        .collect::<Result<_>>()?;
    let max_count = counts.iter().map(|c| c.count).max().unwrap_or(0);
    let counterexamples = counts.iter().filter(|c| c.count >= 2).cloned().collect();
    let distinct_pairs = harvest
        .witnesses
        .iter()
        .filter(|w| w.degree == degree && w.has_distinct_roots() && w.roots_in(mu))
        .cloned()
        .collect();
    let ingredients = if degree == 5 {
        fifth_degree_ingredients(ctx)
    } else {
        seventh_degree_ingredients(ctx)
    };
    Ok(ExclusionReport {
        family,
        k,
        counts,
        max_count,
        counterexamples,
        distinct_pairs,
        ingredients,
    })
}

fn fifth_degree_ingredients(ctx: &FieldCtx) -> Vec<Ingredient> {
    let one = FieldElement::ONE;
    let eps = ctx.epsilon();
    let mut out = vec![Ingredient {
        name: "(eps-1)^2 = eps".into(),
        holds: [eps, -eps].into_iter().all(|e| ctx.square(e - one) == e),
    }];
    let roots: Vec<Option<FieldElement>> =
        [eps, -eps].into_iter().map(|e| ctx.sqrt(e - one)).collect();
    if ctx.k() % 2 == 1 {
        out.push(Ingredient {
            name: "sqrt(eps-1) not in field".into(),
            holds: roots.iter().all(Option::is_none),
        });
    } else if ctx.k().is_multiple_of(4) {
        let q = ctx.q();
        out.push(Ingredient {
            name: "sqrt(eps-1)^(q-1) = 1".into(),
            holds: roots
                .iter()
                .all(|r| r.is_some_and(|s| ctx.pow(s, q - 1).is_one())),
        });
    }
    out
}

fn seventh_degree_ingredients(ctx: &FieldCtx) -> Vec<Ingredient> {
    let thetas = ctx.theta_roots();
    if !ctx.k().is_multiple_of(3) {
        return vec![Ingredient {
            name: "theta not in field".into(),
            holds: thetas.is_empty(),
        }];
    }
    let half = (ctx.q() - 1) / 2;
    vec![
        Ingredient {
            name: "theta has three roots".into(),
            holds: thetas.len() == 3,
        },
        Ingredient {
            name: "theta^13 = 1".into(),
            holds: thetas.iter().all(|&th| ctx.pow(th, 13).is_one()),
        },
        Ingredient {
            name: "theta^((q-1)/2) = 1".into(),
            holds: thetas.iter().all(|&th| ctx.pow(th, half).is_one()),
        },
    ]
}
