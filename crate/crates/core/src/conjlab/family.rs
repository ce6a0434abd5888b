//! The three trinomial families over GF(q^2), q = 3^k, their decomposition
//! as `x^r h(x^(q-1))`, and the rational maps they induce on `mu_(q+1)`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf3m::{FieldCtx, FieldElement};
use crate::permtest::{self, MapReport, UnityGroup, ZieveConditions};
use crate::polyring::{roots_in_set, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    One = 1,
    Two = 2,
    Three = 3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::One, Family::Two, Family::Three];

    pub fn number(self) -> u8 {
        self as u8
    }
}

impl TryFrom<u8> for Family {
    type Error = Error;

    fn try_from(n: u8) -> Result<Family> {
        match n {
            1 => Ok(Family::One),
            2 => Ok(Family::Two),
            3 => Ok(Family::Three),
            _ => Err(Error::UnknownFamily(n)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.number())
    }
}

/// One trinomial `sum sign_i * x^(e_i)` of a family at given `l` and `q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrinomialSpec {
    pub family: Family,
    pub l: u64,
    pub q: u64,
    /// `(e1, e2, e3)` in the order the family is written.
    pub exponents: [u64; 3],
    /// `+1` or `-1` for each exponent.
    pub signs: [i8; 3],
    /// `gcd(5 + 2l, q - 1) = 1` for family 1, `gcd(1 + 2l, q - 1) = 1` otherwise.
    pub gcd_ok: bool,
}

impl TrinomialSpec {
    /// Exponents and signs from `l` and `q = 3^k`. Negative exponents are
    /// rejected rather than reduced.
    pub fn new(family: Family, l: u64, q: u64) -> Result<TrinomialSpec> {
        let (li, qi) = (l as i128, q as i128);
        let (raw, signs, gcd_arg) = match family {
            Family::One => (
                [li * qi + li + 5, (li + 5) * qi + li, (li - 1) * qi + li + 6],
                [1, 1, -1],
                5 + 2 * l,
            ),
            Family::Two => (
                [
                    li * qi + li + 1,
                    (li + 4) * qi + li - 3,
                    (li - 2) * qi + li + 3,
                ],
                [1, -1, 1],
                1 + 2 * l,
            ),
            Family::Three => (
                [
                    li * qi + li + 1,
                    (li + 2) * qi + li - 1,
                    (li - 2) * qi + li + 3,
                ],
                [1, 1, -1],
                1 + 2 * l,
            ),
        };
        if raw.iter().any(|&e| e < 0) {
            return Err(Error::LTooSmall {
                family: family.number(),
                l,
            });
        }
        Ok(TrinomialSpec {
            family,
            l,
            q,
            exponents: raw.map(|e| e as u64),
            signs,
            gcd_ok: gcd_arg.gcd(&(q - 1)) == 1,
        })
    }

    fn terms(&self) -> [(FieldElement, u64); 3] {
        [0, 1, 2].map(|i| (sign_element(self.signs[i]), self.exponents[i]))
    }

    /// `f(x)` evaluated term by term.
    pub fn eval(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for (&e, &s) in self.exponents.iter().zip(&self.signs) {
            let term = ctx.pow(x, e);
            acc = if s < 0 { acc - term } else { acc + term };
        }
        acc
    }

    pub fn to_poly(&self) -> Poly {
        let terms: Vec<(FieldElement, usize)> =
            self.terms().iter().map(|&(c, e)| (c, e as usize)).collect();
        Poly::from_terms(&terms)
    }
}

fn sign_element(s: i8) -> FieldElement {
    if s < 0 {
        -FieldElement::ONE
    } else {
        FieldElement::ONE
    }
}

/// The family trinomial at `l` over the field of `ctx`, with its dense
/// polynomial.
pub fn trinomial_family(family: Family, l: u64, ctx: &FieldCtx) -> Result<(TrinomialSpec, Poly)> {
    let spec = TrinomialSpec::new(family, l, ctx.q())?;
    let poly = spec.to_poly();
    Ok((spec, poly))
}

/// `(r, h)` with `f(x) = x^r h(x^(q-1))`, checked as a polynomial identity.
pub fn trinomial_decompose(spec: &TrinomialSpec) -> Result<(u64, Poly)> {
    let step = spec.q - 1;
    let r = *spec.exponents.iter().min().expect("three exponents");
    let mut terms = Vec::with_capacity(3);
    for (&e, &s) in spec.exponents.iter().zip(&spec.signs) {
        let gap = e - r;
        if !gap.is_multiple_of(step) {
            return Err(Error::NotZieveForm(format!(
                "exponent gap {gap} is not a multiple of q - 1 = {step}"
            )));
        }
        terms.push((sign_element(s), (gap / step) as usize));
    }
    let h = Poly::from_terms(&terms);
    if h.terms().len() != 3 || h.inflate(step as usize).shift(r as usize) != spec.to_poly() {
        return Err(Error::NotZieveForm(format!(
            "x^{r} h(x^{step}) does not reconstruct the trinomial"
        )));
    }
    Ok((r, h))
}

/// Criterion conditions for the trinomial with `d = q + 1`.
pub fn trinomial_criterion(ctx: &FieldCtx, spec: &TrinomialSpec) -> Result<ZieveConditions> {
    let (r, h) = trinomial_decompose(spec)?;
    permtest::zieve_criterion(ctx, r, ctx.q() + 1, &h)
}

/// Direct check that the trinomial permutes GF(q^2).
pub fn trinomial_permutes(ctx: &FieldCtx, spec: &TrinomialSpec) -> MapReport {
    let all: Vec<FieldElement> = ctx.elements().collect();
    permtest::is_bijection_on(ctx, |x| spec.eval(ctx, x), &all)
}

/// `g(x) = numerator / denominator`, the map a family induces on `mu_(q+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalMap {
    pub family: Family,
    pub numerator: Poly,
    pub denominator: Poly,
}

impl FractionalMap {
    /// `None` where the denominator vanishes.
    pub fn eval(&self, ctx: &FieldCtx, x: FieldElement) -> Option<FieldElement> {
        let den = self.denominator.eval(ctx, x);
        ctx.div(self.numerator.eval(ctx, x), den).ok()
    }
}

pub fn fractional_map(family: Family) -> FractionalMap {
    let (numerator, denominator) = match family {
        // (-x^7 + x^6 + x) / (x^6 + x - 1)
        Family::One => (
            Poly::from_ints(&[0, 1, 0, 0, 0, 0, 1, -1]),
            Poly::from_ints(&[-1, 1, 0, 0, 0, 0, 1]),
        ),
        // (x^6 + x^4 - 1) / (-x^7 + x^3 + x)
        Family::Two => (
            Poly::from_ints(&[-1, 0, 0, 0, 1, 0, 1]),
            Poly::from_ints(&[0, 1, 0, 1, 0, 0, 0, -1]),
        ),
        // (-x^5 + x^3 + x) / (x^4 + x^2 - 1)
        Family::Three => (
            Poly::from_ints(&[0, 1, 0, 1, 0, -1]),
            Poly::from_ints(&[-1, 0, 1, 0, 1]),
        ),
    };
    FractionalMap {
        family,
        numerator,
        denominator,
    }
}

/// Roots of the family's denominator inside `mu`.
pub fn denominator_roots(family: Family, ctx: &FieldCtx, mu: &UnityGroup) -> Vec<FieldElement> {
    roots_in_set(ctx, &fractional_map(family).denominator, mu.iter())
        .expect("denominator is nonzero")
}

/// `true` iff the denominator has no root in `mu_(q+1)`.
pub fn denominator_nonvanishing(family: Family, ctx: &FieldCtx) -> bool {
    denominator_roots(family, ctx, &permtest::mu_q_plus_1(ctx)).is_empty()
}

/// Whether `g` permutes `mu_(q+1)`; images leaving `mu_(q+1)` show up in
/// [`MapReport::escaped`].
pub fn g_permutes_mu(family: Family, ctx: &FieldCtx) -> Result<MapReport> {
    g_permutes(family, ctx, &permtest::mu_q_plus_1(ctx))
}

pub(crate) fn g_permutes(family: Family, ctx: &FieldCtx, mu: &UnityGroup) -> Result<MapReport> {
    if let Some(&x) = denominator_roots(family, ctx, mu).first() {
        return Err(Error::VanishingDenominator(x.encode()));
    }
    let g = fractional_map(family);
    Ok(permtest::is_bijection_on(
        ctx,
        |x| g.eval(ctx, x).expect("denominator checked nonzero"),
        mu.elements(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponent_examples() {
        let s = TrinomialSpec::new(Family::Two, 1, 3).unwrap();
        assert_eq!(s.exponents, [5, 13, 1]);
        assert_eq!(s.signs, [1, -1, 1]);
        assert!(s.gcd_ok);

        let s = TrinomialSpec::new(Family::Three, 2, 3).unwrap();
        assert_eq!(s.exponents, [9, 13, 5]);
        assert!(s.gcd_ok);

        let s = TrinomialSpec::new(Family::One, 1, 9).unwrap();
        assert_eq!(s.exponents, [15, 55, 7]);
        // gcd(7, 8) = 1
        assert!(s.gcd_ok);
    }

    #[test]
    fn exponents_follow_the_formulas() {
        for q in [3u64, 9, 27, 81] {
            for l in 2..8u64 {
                let (li, qi) = (l as i64, q as i64);
                let want = [
                    [li * qi + li + 5, (li + 5) * qi + li, (li - 1) * qi + li + 6],
                    [
                        li * qi + li + 1,
                        (li + 4) * qi + li - 3,
                        (li - 2) * qi + li + 3,
                    ],
                    [
                        li * qi + li + 1,
                        (li + 2) * qi + li - 1,
                        (li - 2) * qi + li + 3,
                    ],
                ];
                for (fam, w) in Family::ALL.iter().zip(want) {
                    let s = TrinomialSpec::new(*fam, l, q).unwrap();
                    assert_eq!(s.exponents.map(|e| e as i64), w);
                    let g = if *fam == Family::One {
                        5 + 2 * l
                    } else {
                        1 + 2 * l
                    };
                    assert_eq!(s.gcd_ok, g.gcd(&(q - 1)) == 1);
                    // all gaps are multiples of q - 1
                    for e in s.exponents {
                        assert_eq!((e as i64 - s.exponents[0] as i64).rem_euclid(qi - 1), 0);
                    }
                }
            }
        }
    }

    #[test]
    fn small_l_is_rejected() {
        // (l - 2)q + l + 3 at l = 1, q = 9 is -5
        assert!(matches!(
            TrinomialSpec::new(Family::Two, 1, 9),
            Err(Error::LTooSmall { family: 2, l: 1 })
        ));
        assert!(TrinomialSpec::new(Family::One, 0, 9).is_err());
        assert!(TrinomialSpec::new(Family::One, 0, 3).is_ok());
        assert_eq!(
            Family::try_from(4).unwrap_err().to_string(),
            "unknown family 4 (expected 1, 2 or 3)"
        );
    }

    #[test]
    fn decomposition_examples() {
        let s = TrinomialSpec::new(Family::Two, 1, 3).unwrap();
        let (r, h) = trinomial_decompose(&s).unwrap();
        assert_eq!(r, 1);
        assert_eq!(h, Poly::from_ints(&[1, 0, 1, 0, 0, 0, -1]));

        let s = TrinomialSpec::new(Family::Three, 2, 3).unwrap();
        let (r, h) = trinomial_decompose(&s).unwrap();
        assert_eq!(r, 5);
        assert_eq!(h, Poly::from_ints(&[-1, 0, 1, 0, 1]));
    }

    #[test]
    fn decomposition_guards_corruption() {
        let mut s = TrinomialSpec::new(Family::Two, 2, 9).unwrap();
        s.exponents[1] += 1;
        assert!(matches!(
            trinomial_decompose(&s),
            Err(Error::NotZieveForm(_))
        ));
    }

    #[test]
    fn reconstruction_for_all_families() {
        for k in 1..=3 {
            let ctx = FieldCtx::new(k).unwrap();
            for fam in Family::ALL {
                for l in 2..6 {
                    let (spec, f) = trinomial_family(fam, l, &ctx).unwrap();
                    let (r, h) = trinomial_decompose(&spec).unwrap();
                    assert_eq!(h.inflate(ctx.q() as usize - 1).shift(r as usize), f);
                    for x in ctx.elements().step_by(13) {
                        assert_eq!(spec.eval(&ctx, x), f.eval(&ctx, x));
                    }
                }
            }
        }
    }

    #[test]
    fn fractional_maps() {
        assert_eq!(
            fractional_map(Family::Three).numerator,
            Poly::from_ints(&[0, 1, 0, 1, 0, -1])
        );
        assert_eq!(
            fractional_map(Family::Three).denominator,
            Poly::from_ints(&[-1, 0, 1, 0, 1])
        );
        assert_eq!(
            fractional_map(Family::Two).denominator,
            Poly::from_ints(&[0, 1, 0, 1, 0, 0, 0, -1])
        );
        assert_eq!(
            fractional_map(Family::One).numerator,
            Poly::from_ints(&[0, 1, 0, 0, 0, 0, 1, -1])
        );
    }

    #[test]
    fn denominators_on_the_unit_circle() {
        for k in 1..=4 {
            let ctx = FieldCtx::new(k).unwrap();
            assert!(denominator_nonvanishing(Family::Two, &ctx), "k = {k}");
            assert!(denominator_nonvanishing(Family::Three, &ctx), "k = {k}");
        }
        for k in [2, 4] {
            assert!(denominator_nonvanishing(
                Family::One,
                &FieldCtx::new(k).unwrap()
            ));
        }
    }

    #[test]
    fn images_stay_on_the_unit_circle() {
        for k in 1..=3 {
            let ctx = FieldCtx::new(k).unwrap();
            let mu = permtest::mu_q_plus_1(&ctx);
            for fam in Family::ALL {
                let g = fractional_map(fam);
                for x in mu.iter() {
                    if let Some(y) = g.eval(&ctx, x) {
                        assert!(ctx.pow(y, ctx.q() + 1).is_one());
                    }
                }
            }
        }
    }

    #[test]
    fn g_permutes_examples() {
        for k in 1..=4 {
            let ctx = FieldCtx::new(k).unwrap();
            let report = g_permutes_mu(Family::Two, &ctx).unwrap();
            assert!(report.is_bijection && report.escaped.is_none(), "k = {k}");
        }
        for k in [1, 3, 4] {
            let ctx = FieldCtx::new(k).unwrap();
            assert!(
                g_permutes_mu(Family::Three, &ctx).unwrap().is_bijection,
                "k = {k}"
            );
        }
    }
}
