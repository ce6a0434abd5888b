//! Dense univariate polynomials over GF(3^(2k)).
//!
//! A [`Poly`] is a plain coefficient vector (constant term first, no
//! trailing zeros); operations that multiply coefficients take the
//! [`FieldCtx`] explicitly. Root scans over a given set are exhaustive,
//! costing `O(|S| * deg)` field multiplications, which is the intended
//! regime: the largest supported fields have a few hundred thousand
//! elements and the polynomials of interest have degree at most 7.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gf3m::{FieldCtx, FieldElement};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(FieldElement::ONE)
    }

    /// The indeterminate `x`.
    pub fn x() -> Poly {
        Poly::monomial(FieldElement::ONE, 1)
    }

    pub fn constant(c: FieldElement) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: FieldElement, degree: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Polynomial with prime-subfield coefficients given as small integers,
    /// constant term first; `-1` is read as `2`.
    pub fn from_ints(coeffs: &[i64]) -> Poly {
        Poly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| FieldElement::from_trit(c.rem_euclid(3) as u8))
                .collect(),
        )
    }

    /// Sparse constructor from `(coefficient, exponent)` terms; repeated
    /// exponents accumulate.
    pub fn from_terms(terms: &[(FieldElement, usize)]) -> Poly {
        let top = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
        let mut coeffs = vec![FieldElement::ZERO; top + 1];
        for &(c, e) in terms {
            coeffs[e] += c;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    /// Nonzero `(coefficient, exponent)` pairs, ascending in exponent.
    pub fn terms(&self) -> Vec<(FieldElement, usize)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, &c)| (c, e))
            .collect()
    }

    /// Horner evaluation.
    pub fn eval(&self, ctx: &FieldCtx, x: FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(FieldElement::ZERO, |acc, &c| ctx.mul(acc, x) + c)
    }

    pub fn scale(&self, ctx: &FieldCtx, c: FieldElement) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| ctx.mul(a, c)).collect())
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += ctx.mul(a, b);
            }
        }
        Poly::from_coeffs(out)
    }

    /// `(quotient, remainder)` with `self = divisor * quotient + remainder`
    /// and `deg remainder < deg divisor`.
    pub fn divrem(&self, ctx: &FieldCtx, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = ctx.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![FieldElement::ZERO; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = ctx.mul(rem[i + dd], lead_inv);
            if c.is_zero() {
                continue;
            }
            quot[i] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= ctx.mul(c, d);
            }
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, ctx: &FieldCtx, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(ctx, divisor)?.1)
    }

    /// Scales to leading coefficient one; the zero polynomial stays zero.
    pub fn monic(&self, ctx: &FieldCtx) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => self.scale(ctx, ctx.inv(lead).expect("leading coefficient is nonzero")),
        }
    }

    /// Formal derivative. In characteristic 3 every `x^(3j)` term drops out,
    /// so the degree can fall by more than one.
    pub fn derivative(&self) -> Poly {
        Poly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c.scale((i % 3) as u8))
                .collect(),
        )
    }

    /// `self(x^step)`.
    pub fn inflate(&self, step: usize) -> Poly {
        assert!(step > 0);
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; (self.coeffs.len() - 1) * step + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c;
        }
        Poly::from_coeffs(coeffs)
    }

    /// `x^n * self`.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![FieldElement::ZERO; n];
        coeffs.extend_from_slice(&self.coeffs);
        Poly::from_coeffs(coeffs)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, ctx: &FieldCtx, e: &BigUint, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(ctx, modulus)?;
        let mut acc = Poly::one().rem(ctx, modulus)?;
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(ctx, &base).rem(ctx, modulus)?;
            }
            base = base.mul(ctx, &base).rem(ctx, modulus)?;
        }
        Ok(acc)
    }

    /// Parses `"c0,c1,...,cn"`, each entry a decimal element encoding.
    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<Poly> {
        let coeffs = text
            .split(',')
            .map(|s| {
                let s = s.trim();
                let n: u64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("malformed element encoding {s:?}")))?;
                ctx.element(n)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

/// Monic gcd. `gcd(0, 0)` is undefined and reported as a division by zero.
pub fn gcd(ctx: &FieldCtx, a: &Poly, b: &Poly) -> Result<Poly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.rem(ctx, &y)?;
        x = y;
        y = r;
    }
    Ok(x.monic(ctx))
}

/// Distinct members of `set` at which `p` vanishes, ascending by encoding.
pub fn roots_in_set<I>(ctx: &FieldCtx, p: &Poly, set: I) -> Result<Vec<FieldElement>>
where
    I: IntoIterator<Item = FieldElement>,
{
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut roots: Vec<FieldElement> = set
        .into_iter()
        .filter(|&x| p.eval(ctx, x).is_zero())
        .collect();
    roots.sort_unstable();
    roots.dedup();
    Ok(roots)
}

/// How many times `x - r` divides `p`.
pub fn root_multiplicity(ctx: &FieldCtx, p: &Poly, r: FieldElement) -> usize {
    let linear = Poly::from_coeffs(vec![-r, FieldElement::ONE]);
    let mut rest = p.clone();
    let mut mult = 0;
    while !rest.is_zero() {
        let (quot, rem) = rest.divrem(ctx, &linear).expect("linear divisor");
        if !rem.is_zero() {
            break;
        }
        rest = quot;
        mult += 1;
    }
    mult
}

pub fn is_squarefree(ctx: &FieldCtx, p: &Poly) -> bool {
    match gcd(ctx, p, &p.derivative()) {
        Ok(g) => g.degree() == Some(0),
        Err(_) => false,
    }
}

/// `x^(3^j) mod f` by repeated cubing.
fn frobenius_of_x(ctx: &FieldCtx, f: &Poly, j: u32) -> Result<Poly> {
    let mut r = Poly::x().rem(ctx, f)?;
    for _ in 0..j {
        let sq = r.mul(ctx, &r);
        r = sq.mul(ctx, &r).rem(ctx, f)?;
    }
    Ok(r)
}

/// Splits a monic squarefree `g` whose irreducible factors all have degree
/// `d` into those factors, using gcds with `(x + c)^((N^d - 1)/2) - 1` for
/// shifts `c` taken in encoding order. Falls back to an exhaustive scan if
/// no shift separates the factors.
fn split_equal_degree(ctx: &FieldCtx, g: &Poly, d: usize) -> Result<Vec<Poly>> {
    let deg = match g.degree() {
        None | Some(0) => return Ok(Vec::new()),
        Some(deg) => deg,
    };
    if deg == d {
        return Ok(vec![g.clone()]);
    }
    let half = (BigUint::from(ctx.order()).pow(d as u32) - BigUint::one()) >> 1;
    let mut pending = vec![g.clone()];
    let mut done = Vec::new();
    for c in ctx.elements() {
        let mut next = Vec::new();
        for h in pending {
            if h.degree() == Some(d) {
                done.push(h);
                continue;
            }
            let shifted = Poly::from_coeffs(vec![c, FieldElement::ONE]);
            let probe = &shifted.pow_mod(ctx, &half, &h)? - &Poly::one();
            let s = gcd(ctx, &h, &probe)?;
            match s.degree() {
                Some(ds) if ds > 0 && Some(ds) < h.degree() => {
                    let (other, _) = h.divrem(ctx, &s)?;
                    next.push(s);
                    next.push(other.monic(ctx));
                }
                _ => next.push(h),
            }
        }
        pending = next;
        if pending.iter().all(|h| h.degree() == Some(d)) {
            break;
        }
    }
    for h in pending {
        if h.degree() == Some(d) {
            done.push(h);
        } else {
            done.extend(scan_factors(ctx, &h, d));
        }
    }
    Ok(done)
}

/// Monic degree-`d` divisors of `h` by trial division, `d` in {1, 2}.
fn scan_factors(ctx: &FieldCtx, h: &Poly, d: usize) -> Vec<Poly> {
    let divides = |f: &Poly| h.rem(ctx, f).map(|r| r.is_zero()).unwrap_or(false);
    match d {
        1 => ctx
            .elements()
            .map(|c| Poly::from_coeffs(vec![c, FieldElement::ONE]))
            .filter(divides)
            .collect(),
        _ => ctx
            .elements()
            .flat_map(|a| {
                ctx.elements()
                    .map(move |b| Poly::from_coeffs(vec![b, a, FieldElement::ONE]))
            })
            .filter(divides)
            .collect(),
    }
}

/// All monic `x^2 + ax + b` dividing `p`, as `(a, b)` ordered by
/// `(encoding(a), encoding(b))`.
///
/// Factors that split over the field come from pairing the roots of `p`
/// (a root of multiplicity at least two pairs with itself). Irreducible
/// quadratic factors come from `gcd(p, x^(N^2) - x) / gcd(p, x^N - x)`,
/// which is their product, split by [`split_equal_degree`].
pub fn quadratic_factors(ctx: &FieldCtx, p: &Poly) -> Result<Vec<(FieldElement, FieldElement)>> {
    match p.degree() {
        Some(d) if d >= 2 => {}
        _ => return Ok(Vec::new()),
    }
    let f = p.monic(ctx);
    let m = ctx.degree() as u32;
    let x = Poly::x();

    let linear_part = gcd(ctx, &f, &(&frobenius_of_x(ctx, &f, m)? - &x))?;
    let mut roots: Vec<FieldElement> = split_equal_degree(ctx, &linear_part, 1)?
        .iter()
        .map(|l| -l.coeff(0))
        .collect();
    roots.sort_unstable();

    let repeated: Vec<bool> = if is_squarefree(ctx, &f) {
        vec![false; roots.len()]
    } else {
        roots
            .iter()
            .map(|&r| root_multiplicity(ctx, &f, r) >= 2)
            .collect()
    };

    let mut out = Vec::new();
    for (i, &r1) in roots.iter().enumerate() {
        if repeated[i] {
            out.push((-(r1 + r1), ctx.mul(r1, r1)));
        }
        for &r2 in &roots[i + 1..] {
            out.push((-(r1 + r2), ctx.mul(r1, r2)));
        }
    }

    let up_to_two = gcd(ctx, &f, &(&frobenius_of_x(ctx, &f, 2 * m)? - &x))?;
    let (quadratic_part, _) = up_to_two.divrem(ctx, &linear_part)?;
    for q in split_equal_degree(ctx, &quadratic_part.monic(ctx), 2)? {
        out.push((q.coeff(1), q.coeff(0)));
    }

    out.retain(|&(a, b)| {
        let q = Poly::from_coeffs(vec![b, a, FieldElement::ONE]);
        f.rem(ctx, &q).map(|r| r.is_zero()).unwrap_or(false)
    });
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&c| -c).collect())
    }
}

/// Text format: comma-separated decimal encodings, constant term first.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.encode().to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf3m::DEFAULT_MAX_K;

    fn gf9() -> FieldCtx {
        FieldCtx::create(1, Some(&[1, 0, 1]), DEFAULT_MAX_K).unwrap()
    }

    fn fifth(_ctx: &FieldCtx, t: FieldElement) -> Poly {
        let one = FieldElement::ONE;
        Poly::from_coeffs(vec![-t, -one, t, -one, t, one])
    }

    fn mu(ctx: &FieldCtx) -> Vec<FieldElement> {
        let q = ctx.q();
        ctx.elements()
            .filter(|&x| ctx.pow(x, q + 1).is_one())
            .collect()
    }

    /// Oracle: every monic quadratic over the field, tried by division.
    fn brute_quadratic_factors(ctx: &FieldCtx, p: &Poly) -> Vec<(FieldElement, FieldElement)> {
        let mut out = Vec::new();
        for a in ctx.elements() {
            for b in ctx.elements() {
                let q = Poly::from_coeffs(vec![b, a, FieldElement::ONE]);
                if p.rem(ctx, &q).unwrap().is_zero() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    #[test]
    fn trimming_and_degree() {
        let p = Poly::from_coeffs(vec![
            FieldElement::ONE,
            FieldElement::ZERO,
            FieldElement::ZERO,
        ]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::from_ints(&[1, 0, -1]).coeff(2), FieldElement::TWO);
    }

    #[test]
    fn eval_examples() {
        let ctx = gf9();
        let eps = ctx.epsilon();
        assert!(Poly::from_ints(&[1, 0, 1]).eval(&ctx, eps).is_zero());
        assert!(Poly::zero().eval(&ctx, eps).is_zero());
        for k in 1..=4 {
            let ctx = FieldCtx::new(k).unwrap();
            assert!(fifth(&ctx, FieldElement::ONE)
                .eval(&ctx, FieldElement::ONE)
                .is_zero());
        }
    }

    #[test]
    fn constructed_divisibility() {
        let ctx = FieldCtx::new(2).unwrap();
        let (a, b) = (ctx.element(17).unwrap(), ctx.element(40).unwrap());
        let quad = Poly::from_coeffs(vec![b, a, FieldElement::ONE]);
        let cubic = Poly::from_coeffs(vec![
            ctx.element(5).unwrap(),
            ctx.element(77).unwrap(),
            FieldElement::ZERO,
            ctx.element(12).unwrap(),
        ]);
        let (quot, rem) = quad.mul(&ctx, &cubic).divrem(&ctx, &quad).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, cubic);
    }

    #[test]
    fn division_by_zero_polynomial() {
        let ctx = gf9();
        assert!(matches!(
            Poly::x().divrem(&ctx, &Poly::zero()),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            gcd(&ctx, &Poly::zero(), &Poly::zero()),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn gcd_examples() {
        let ctx = gf9();
        let p = Poly::from_coeffs(vec![ctx.x(), FieldElement::TWO]);
        assert_eq!(gcd(&ctx, &p, &Poly::zero()).unwrap(), p.monic(&ctx));
        // x^4 + x^2 - 1 at the roots +-eps of x^2 + 1 is 1 - 1 - 1 = -1.
        let g = gcd(
            &ctx,
            &Poly::from_ints(&[1, 0, 1]),
            &Poly::from_ints(&[-1, 0, 1, 0, 1]),
        )
        .unwrap();
        assert_eq!(g, Poly::one());
    }

    #[test]
    fn roots_examples() {
        let ctx = gf9();
        let all: Vec<_> = ctx.elements().collect();
        assert_eq!(
            roots_in_set(&ctx, &Poly::from_ints(&[-1, 0, 1]), all.clone()).unwrap(),
            vec![FieldElement::ONE, FieldElement::TWO]
        );
        assert!(matches!(
            roots_in_set(&ctx, &Poly::zero(), all),
            Err(Error::ZeroPolynomial)
        ));
        for k in 1..=4 {
            let ctx = FieldCtx::new(k).unwrap();
            let mu = mu(&ctx);
            assert!(
                roots_in_set(&ctx, &Poly::from_ints(&[-1, 0, 1, 0, 1]), mu.clone())
                    .unwrap()
                    .is_empty()
            );
            assert!(
                roots_in_set(&ctx, &Poly::from_ints(&[0, 1, 0, 1, 0, 0, 0, -1]), mu)
                    .unwrap()
                    .is_empty()
            );
        }
    }

    #[test]
    fn derivative_drops_multiples_of_three() {
        let p = Poly::from_ints(&[1, 1, 1, 1, 1]);
        assert_eq!(p.derivative(), Poly::from_ints(&[1, 2, 0, 1]));
        assert_eq!(Poly::from_ints(&[1, 0, 0, 1]).derivative(), Poly::zero());
    }

    #[test]
    fn multiplicity_and_squarefree() {
        let ctx = gf9();
        let p = Poly::from_ints(&[0, 0, 0, 0, 0, 1]);
        assert_eq!(root_multiplicity(&ctx, &p, FieldElement::ZERO), 5);
        assert!(!is_squarefree(&ctx, &p));
        assert!(is_squarefree(&ctx, &Poly::from_ints(&[-1, 0, 1])));
    }

    #[test]
    fn quadratic_factor_examples() {
        let ctx = gf9();
        let p = Poly::from_ints(&[1, 0, 1]).mul(&ctx, &Poly::from_ints(&[2, 1, 0, 1]));
        assert!(quadratic_factors(&ctx, &p)
            .unwrap()
            .contains(&(FieldElement::ZERO, FieldElement::ONE)));
        for k in 1..=3 {
            let ctx = FieldCtx::new(k).unwrap();
            assert_eq!(
                quadratic_factors(&ctx, &Poly::from_ints(&[0, 0, 0, 0, 0, 1])).unwrap(),
                vec![(FieldElement::ZERO, FieldElement::ZERO)]
            );
        }
        assert!(quadratic_factors(&ctx, &Poly::x()).unwrap().is_empty());
    }

    #[test]
    fn repeated_root_at_epsilon() {
        // b = -1 with a = -2*eps = eps gives x^2 + eps x - 1 = (x - eps)^2.
        for k in 1..=3 {
            let ctx = FieldCtx::new(k).unwrap();
            let eps = ctx.epsilon();
            let sq = Poly::from_coeffs(vec![-FieldElement::ONE, eps, FieldElement::ONE]);
            let p = sq.mul(&ctx, &Poly::from_ints(&[1, 1, 0, 1]));
            let found = quadratic_factors(&ctx, &p).unwrap();
            assert!(found.contains(&(eps, -FieldElement::ONE)), "k = {k}");
        }
    }

    #[test]
    fn quadratic_factors_match_trial_division() {
        for k in 1..=2 {
            let ctx = FieldCtx::new(k).unwrap();
            for t in mu(&ctx) {
                let p = fifth(&ctx, t);
                assert_eq!(
                    quadratic_factors(&ctx, &p).unwrap(),
                    brute_quadratic_factors(&ctx, &p)
                );
            }
        }
    }

    #[test]
    fn quadratic_factors_of_products_of_irreducibles() {
        // (x^2 + 1)(x^2 + x + 2)(x^2 + 2x + 2) over GF(3^4) splits completely;
        // over GF(9) with a product of three irreducible quadratics.
        let ctx = FieldCtx::new(1).unwrap();
        let irreducible: Vec<Poly> = ctx
            .elements()
            .flat_map(|a| ctx.elements().map(move |b| (a, b)))
            .map(|(a, b)| Poly::from_coeffs(vec![b, a, FieldElement::ONE]))
            .filter(|q| roots_in_set(&ctx, q, ctx.elements()).unwrap().is_empty())
            .take(3)
            .collect();
        let product = irreducible
            .iter()
            .fold(Poly::one(), |acc, q| acc.mul(&ctx, q));
        let mut expected: Vec<_> = irreducible
            .iter()
            .map(|q| (q.coeff(1), q.coeff(0)))
            .collect();
        expected.sort();
        assert_eq!(quadratic_factors(&ctx, &product).unwrap(), expected);
        assert_eq!(
            quadratic_factors(&ctx, &product).unwrap(),
            brute_quadratic_factors(&ctx, &product)
        );
    }

    #[test]
    fn text_format() {
        let ctx = gf9();
        let p = Poly::parse(&ctx, "2,0,1").unwrap();
        assert_eq!(p, Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(p.to_string(), "2,0,1");
        assert!(Poly::parse(&ctx, "2,9").is_err());
        assert!(Poly::parse(&ctx, "x").is_err());
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        let ctx = FieldCtx::new(2).unwrap();
        let modulus = fifth(&ctx, ctx.element(7).unwrap());
        let base = Poly::from_coeffs(vec![ctx.element(3).unwrap(), FieldElement::ONE]);
        let mut slow = Poly::one();
        for e in 0u32..40 {
            assert_eq!(
                base.pow_mod(&ctx, &BigUint::from(e), &modulus).unwrap(),
                slow
            );
            slow = slow.mul(&ctx, &base).rem(&ctx, &modulus).unwrap();
        }
    }

    mod props {
        use proptest::prelude::*;

        use super::*;

        fn poly_strategy(n: u64, max_len: usize) -> impl Strategy<Value = Poly> {
            proptest::collection::vec(0..n, 0..=max_len).prop_map(|v| {
                Poly::from_coeffs(v.into_iter().map(FieldElement::from_encoding).collect())
            })
        }

        proptest! {
            #[test]
            fn divrem_identity(p in poly_strategy(81, 9), d in poly_strategy(81, 5)) {
                let ctx = FieldCtx::new(2).unwrap();
                prop_assume!(!d.is_zero());
                let (quot, rem) = p.divrem(&ctx, &d).unwrap();
                prop_assert_eq!(&d.mul(&ctx, &quot) + &rem, p);
                prop_assert!(rem.degree() < d.degree());
            }

            #[test]
            fn planted_quadratic_is_found(a in 0u64..81, b in 0u64..81, c in poly_strategy(81, 6)) {
                let ctx = FieldCtx::new(2).unwrap();
                prop_assume!(!c.is_zero());
                let (a, b) = (FieldElement::from_encoding(a), FieldElement::from_encoding(b));
                let quad = Poly::from_coeffs(vec![b, a, FieldElement::ONE]);
                let found = quadratic_factors(&ctx, &quad.mul(&ctx, &c)).unwrap();
                prop_assert!(found.contains(&(a, b)));
            }

            #[test]
            fn root_count_bounded_by_degree(p in poly_strategy(81, 8)) {
                let ctx = FieldCtx::new(2).unwrap();
                prop_assume!(!p.is_zero());
                let roots = roots_in_set(&ctx, &p, ctx.elements()).unwrap();
                prop_assert!(roots.len() <= p.degree().unwrap());
            }

            #[test]
            fn gcd_divides_both(p in poly_strategy(81, 6), q in poly_strategy(81, 6)) {
                let ctx = FieldCtx::new(2).unwrap();
                prop_assume!(!(p.is_zero() && q.is_zero()));
                let g = gcd(&ctx, &p, &q).unwrap();
                prop_assert_eq!(g.leading(), Some(FieldElement::ONE));
                prop_assert!(p.rem(&ctx, &g).unwrap().is_zero());
                prop_assert!(q.rem(&ctx, &g).unwrap().is_zero());
            }
        }
    }
}
