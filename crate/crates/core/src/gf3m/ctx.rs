use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::element::FieldElement;
use super::prime_poly::{self, QuotientRing};
use crate::error::{Error, Result};

/// Default safety cap on `k`; the field has `3^(2k)` elements.
pub const DEFAULT_MAX_K: u32 = 6;

/// Encodings are `u64`, which holds `3^(2k)` up to `k = 20`.
pub const HARD_MAX_K: u32 = 20;

/// Immutable description of GF(3^(2k)) in polynomial basis.
#[derive(Clone, Debug)]
pub struct FieldCtx {
    k: u32,
    m: usize,
    modulus: Vec<u8>,
    order: u64,
    ring: QuotientRing,
    /// `x^(3i) mod M`; cubing is linear over GF(3).
    frob_basis: Vec<FieldElement>,
    /// Distinct primes dividing `3^(2k) - 1`.
    group_primes: Vec<u64>,
    alpha: FieldElement,
}

/// Constants that the trinomial lemmas are phrased in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialConstants {
    /// Root of `X^2 + 1`, smaller encoding of the two.
    pub epsilon: FieldElement,
    /// Root of `X^3 - X - 1`, present iff `k = 0 mod 3`.
    pub theta: Option<FieldElement>,
    pub sqrt_eps_minus_1: Option<FieldElement>,
    pub sqrt_theta: Option<FieldElement>,
}

impl FieldCtx {
    /// GF(3^(2k)) with the default modulus and the default cap on `k`.
    pub fn new(k: u32) -> Result<FieldCtx> {
        FieldCtx::create(k, None, DEFAULT_MAX_K)
    }

    /// Builds a context, verifying that `modulus` (constant term first) is
    /// monic, of degree `2k` and irreducible. Without a modulus the
    /// lexicographically smallest monic irreducible is used.
    pub fn create(k: u32, modulus: Option<&[u8]>, max_k: u32) -> Result<FieldCtx> {
        let max = max_k.min(HARD_MAX_K);
        if k == 0 || k > max {
            return Err(Error::UnsupportedDegree { k, max });
        }
        let m = 2 * k as usize;
        let modulus = match modulus {
            Some(given) => {
                if given.len() != m + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients for degree {m}, got {}",
                        m + 1,
                        given.len()
                    )));
                }
                if let Some(bad) = given.iter().find(|&&c| c > 2) {
                    return Err(Error::InvalidModulus(format!(
                        "coefficient {bad} is not a trit"
                    )));
                }
                if given[m] != 1 {
                    return Err(Error::InvalidModulus("modulus is not monic".into()));
                }
                if !prime_poly::is_irreducible(given) {
                    return Err(Error::ReducibleModulus(format_trits(given)));
                }
                given.to_vec()
            }
            None => prime_poly::default_modulus(m),
        };

        let ring = QuotientRing::new(&modulus);
        let order = 3u64.pow(m as u32);
        let x = FieldElement::from_trits(&[0, 1]);
        let x3 = ring.cube(x);
        let mut frob_basis = Vec::with_capacity(m);
        let mut power = FieldElement::ONE;
        for _ in 0..m {
            frob_basis.push(power);
            power = ring.mul(power, x3);
        }
        let q = 3u64.pow(k);
        let mut group_primes = prime_factors(q - 1);
        group_primes.extend(prime_factors(q + 1));
        group_primes.sort_unstable();
        group_primes.dedup();

        let mut ctx = FieldCtx {
            k,
            m,
            modulus,
            order,
            ring,
            frob_basis,
            group_primes,
            alpha: FieldElement::ZERO,
        };
        ctx.alpha = ctx.find_primitive();
        Ok(ctx)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Extension degree `m = 2k` over GF(3).
    pub fn degree(&self) -> usize {
        self.m
    }

    /// `q = 3^k`.
    pub fn q(&self) -> u64 {
        3u64.pow(self.k)
    }

    /// Number of field elements, `3^(2k)`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Order of the multiplicative group, `3^(2k) - 1`.
    pub fn group_order(&self) -> u64 {
        self.order - 1
    }

    /// Modulus trits, constant term first, length `2k + 1`.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        format_trits(&self.modulus)
    }

    /// Primes dividing `3^(2k) - 1`.
    pub fn group_primes(&self) -> &[u64] {
        &self.group_primes
    }

    /// Element with the given encoding.
    pub fn element(&self, encoding: u64) -> Result<FieldElement> {
        if encoding >= self.order {
            return Err(Error::Parse(format!(
                "element encoding {encoding} out of range for a field of order {}",
                self.order
            )));
        }
        Ok(FieldElement::from_encoding(encoding))
    }

    /// Element from coefficient trits, constant term first.
    pub fn element_from_trits(&self, trits: &[u8]) -> Result<FieldElement> {
        if trits.len() > self.m {
            return Err(Error::Parse(format!(
                "{} trits given for a degree-{} field",
                trits.len(),
                self.m
            )));
        }
        if let Some(bad) = trits.iter().find(|&&c| c > 2) {
            return Err(Error::Parse(format!("{bad} is not a trit")));
        }
        Ok(FieldElement::from_trits(trits))
    }

    /// Accepts a decimal encoding (`"10"`) or a trit list (`"1,0,1"`).
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let text = text.trim();
        if text.contains(',') {
            let trits = parse_trits(text)?;
            self.element_from_trits(&trits)
        } else {
            let n: u64 = text
                .parse()
                .map_err(|_| Error::Parse(format!("malformed element encoding {text:?}")))?;
            self.element(n)
        }
    }

    /// The generator `x` of the polynomial basis.
    pub fn x(&self) -> FieldElement {
        FieldElement::from_trits(&[0, 1])
    }

    /// All elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.order).map(FieldElement::from_encoding)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.ring.mul(a, b)
    }

    #[inline]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.ring.mul(a, a)
    }

    /// `a^e` for a nonnegative exponent. The exponent is reduced modulo the
    /// group order for nonzero `a`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if a.is_zero() {
            return if e == 0 {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            };
        }
        self.ring.pow(a, e % self.group_order())
    }

    /// `a^e` for an arbitrary integer exponent; negative exponents need a
    /// nonzero base.
    pub fn pow_big(&self, a: FieldElement, e: &BigInt) -> Result<FieldElement> {
        if a.is_zero() {
            return match e.sign() {
                Sign::Minus => Err(Error::DivisionByZero),
                Sign::NoSign => Ok(FieldElement::ONE),
                Sign::Plus => Ok(FieldElement::ZERO),
            };
        }
        let n = BigInt::from(self.group_order());
        let reduced = e
            .mod_floor(&n)
            .to_u64()
            .expect("reduced exponent fits the group order");
        Ok(self.ring.pow(a, reduced))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.ring.pow(a, self.group_order() - 1))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^3`, computed as a linear map on the trits.
    #[inline]
    pub fn cube(&self, a: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for (i, &image) in self.frob_basis.iter().enumerate() {
            acc += image.scale(a.trit(i));
        }
        acc
    }

    /// `a^(3^e)`.
    pub fn frobenius(&self, a: FieldElement, e: u64) -> FieldElement {
        let steps = e % self.m as u64;
        (0..steps).fold(a, |acc, _| self.cube(acc))
    }

    /// `a^q`, the conjugate over GF(q).
    pub fn conjugate_q(&self, a: FieldElement) -> FieldElement {
        self.frobenius(a, self.k as u64)
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut ord = self.group_order();
        for &p in &self.group_primes {
            while ord.is_multiple_of(p) && self.ring.pow(a, ord / p).is_one() {
                ord /= p;
            }
        }
        Ok(ord)
    }

    pub fn is_primitive(&self, a: FieldElement) -> bool {
        !a.is_zero()
            && self
                .group_primes
                .iter()
                .all(|&p| !self.ring.pow(a, self.group_order() / p).is_one())
    }

    fn find_primitive(&self) -> FieldElement {
        self.elements()
            .find(|&a| self.is_primitive(a))
            .expect("the multiplicative group of a finite field is cyclic")
    }

    /// Smallest-encoding generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        self.alpha
    }

    /// Euler criterion: zero or `a^((3^(2k)-1)/2) = 1`.
    pub fn is_square(&self, a: FieldElement) -> bool {
        a.is_zero() || self.ring.pow(a, self.group_order() / 2).is_one()
    }

    /// Tonelli-Shanks with the primitive element as the non-residue.
    /// Returns the root of smaller encoding.
    pub fn sqrt(&self, a: FieldElement) -> Option<FieldElement> {
        if a.is_zero() {
            return Some(FieldElement::ZERO);
        }
        if !self.is_square(a) {
            return None;
        }
        let n = self.group_order();
        let s = n.trailing_zeros();
        let odd = n >> s;

        let mut m = s;
        let mut c = self.ring.pow(self.alpha, odd);
        let mut t = self.ring.pow(a, odd);
        let mut r = self.ring.pow(a, odd.div_ceil(2));
        while !t.is_one() {
            let mut i = 0;
            let mut probe = t;
            while !probe.is_one() {
                probe = self.square(probe);
                i += 1;
            }
            debug_assert!(i < m);
            let mut b = c;
            for _ in 0..(m - i - 1) {
                b = self.square(b);
            }
            m = i;
            c = self.square(b);
            t = self.mul(t, c);
            r = self.mul(r, b);
        }
        Some(r.min(-r))
    }

    /// `epsilon = alpha^((q^2-1)/4)` normalized to the smaller root of
    /// `X^2 + 1`.
    pub fn epsilon(&self) -> FieldElement {
        let e = self.ring.pow(self.alpha, self.group_order() / 4);
        e.min(-e)
    }

    /// The three roots of `X^3 - X - 1`, ascending; empty unless
    /// `k = 0 mod 3`. They live in the subfield GF(27), generated by
    /// `alpha^((q^2-1)/26)`.
    pub fn theta_roots(&self) -> Vec<FieldElement> {
        if !self.k.is_multiple_of(3) {
            return Vec::new();
        }
        let gamma = self.ring.pow(self.alpha, self.group_order() / 26);
        let mut roots = Vec::with_capacity(3);
        let mut z = FieldElement::ONE;
        for _ in 0..26 {
            if (self.cube(z) - z - FieldElement::ONE).is_zero() {
                roots.push(z);
            }
            z = self.mul(z, gamma);
        }
        roots.sort();
        roots
    }

    /// Smallest-encoding root of `X^3 - X - 1`, when one exists.
    pub fn theta(&self) -> Option<FieldElement> {
        self.theta_roots().first().copied()
    }

    pub fn special_constants(&self) -> SpecialConstants {
        let epsilon = self.epsilon();
        let theta = self.theta();
        SpecialConstants {
            epsilon,
            theta,
            sqrt_eps_minus_1: self.sqrt(epsilon - FieldElement::ONE),
            sqrt_theta: theta.and_then(|th| self.sqrt(th)),
        }
    }

    /// `3^(2k) - 1` as an unbounded integer.
    pub fn group_order_big(&self) -> BigUint {
        BigUint::from(3u32).pow(self.m as u32) - BigUint::one()
    }
}

/// Distinct prime factors by trial division.
fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `"c0,c1,..."`.
pub fn format_trits(trits: &[u8]) -> String {
    trits
        .iter()
        .map(u8::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_trits(text: &str) -> Result<Vec<u8>> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            match s.parse::<u8>() {
                Ok(c) if c <= 2 => Ok(c),
                _ => Err(Error::Parse(format!("{s:?} is not a trit"))),
            }
        })
        .collect()
}

/// `true` when `d` divides the group order of `ctx`.
pub(crate) fn divides_group(ctx: &FieldCtx, d: u64) -> bool {
    d != 0 && (ctx.group_order_big() % BigUint::from(d)).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> FieldCtx {
        FieldCtx::create(1, Some(&[1, 0, 1]), DEFAULT_MAX_K).unwrap()
    }

    fn brute_order(ctx: &FieldCtx, a: FieldElement) -> u64 {
        let mut z = a;
        let mut n = 1;
        while !z.is_one() {
            z = ctx.mul(z, a);
            n += 1;
        }
        n
    }

    #[test]
    fn gf9_from_x2_plus_1() {
        let ctx = gf9();
        assert_eq!(ctx.order(), 9);
        assert_eq!(ctx.q(), 3);
        assert_eq!(ctx.modulus_string(), "1,0,1");
    }

    #[test]
    fn rejects_reducible_modulus() {
        let err = FieldCtx::create(1, Some(&[2, 0, 1]), DEFAULT_MAX_K).unwrap_err();
        assert!(matches!(err, Error::ReducibleModulus(_)));
        assert!(err.to_string().starts_with("reducible modulus"));
    }

    #[test]
    fn rejects_malformed_modulus() {
        assert!(matches!(
            FieldCtx::create(1, Some(&[1, 1]), DEFAULT_MAX_K),
            Err(Error::InvalidModulus(_))
        ));
        assert!(matches!(
            FieldCtx::create(1, Some(&[1, 0, 2]), DEFAULT_MAX_K),
            Err(Error::InvalidModulus(_))
        ));
    }

    #[test]
    fn degree_range() {
        for k in [0, 7] {
            let err = FieldCtx::new(k).unwrap_err();
            assert!(err.to_string().starts_with("unsupported degree"));
        }
        assert!(FieldCtx::create(7, None, 7).is_ok());
        assert!(FieldCtx::create(21, None, 40).is_err());
    }

    /// Independent sieve: every monic product of two lower-degree monic
    /// polynomials is reducible; the smallest survivor (constant term
    /// compared first) is the default modulus.
    #[test]
    fn default_modulus_matches_sieve_k3() {
        fn monic_of_degree(d: usize) -> Vec<Vec<u8>> {
            let mut out = Vec::new();
            for idx in 0..3u32.pow(d as u32) {
                let mut p = vec![0u8; d + 1];
                let mut rest = idx;
                for c in p.iter_mut().take(d) {
                    *c = (rest % 3) as u8;
                    rest /= 3;
                }
                p[d] = 1;
                out.push(p);
            }
            out
        }
        fn mul(a: &[u8], b: &[u8]) -> Vec<u8> {
            let mut out = vec![0u8; a.len() + b.len() - 1];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    out[i + j] = (out[i + j] + x * y) % 3;
                }
            }
            out
        }
        let mut reducible = std::collections::HashSet::new();
        for d in 1..=3 {
            for a in monic_of_degree(d) {
                for b in monic_of_degree(6 - d) {
                    reducible.insert(mul(&a, &b));
                }
            }
        }
        let mut candidates: Vec<Vec<u8>> = monic_of_degree(6)
            .into_iter()
            .filter(|p| !reducible.contains(p))
            .collect();
        candidates.sort();
        let ctx = FieldCtx::new(3).unwrap();
        assert_eq!(ctx.modulus(), candidates[0].as_slice());
        assert_eq!(ctx.order(), 729);
        // Ben-Or agrees with the sieve everywhere in degree 6.
        for p in monic_of_degree(6) {
            assert_eq!(
                prime_poly::is_irreducible(&p),
                !reducible.contains(&p),
                "{p:?}"
            );
        }
    }

    #[test]
    fn mul_examples() {
        let ctx = gf9();
        let x = ctx.x();
        assert_eq!(ctx.mul(x, x), FieldElement::TWO);
        assert_eq!(ctx.inv(FieldElement::TWO).unwrap(), FieldElement::TWO);
        assert_eq!(FieldElement::ONE + FieldElement::TWO, FieldElement::ZERO);
    }

    #[test]
    fn division_by_zero() {
        let ctx = gf9();
        assert!(matches!(
            ctx.inv(FieldElement::ZERO),
            Err(Error::DivisionByZero)
        ));
        assert!(matches!(
            ctx.pow_big(FieldElement::ZERO, &BigInt::from(-1)),
            Err(Error::DivisionByZero)
        ));
        assert_eq!(
            ctx.pow_big(FieldElement::ZERO, &BigInt::from(0)).unwrap(),
            FieldElement::ONE
        );
    }

    #[test]
    fn negative_and_huge_exponents() {
        let ctx = FieldCtx::new(2).unwrap();
        for a in ctx.elements().skip(1).step_by(7) {
            let inv = ctx.inv(a).unwrap();
            assert_eq!(ctx.pow_big(a, &BigInt::from(-1)).unwrap(), inv);
            let big = BigInt::from(ctx.group_order()) * BigInt::from(10u64).pow(30) + 5;
            assert_eq!(ctx.pow_big(a, &big).unwrap(), ctx.pow(a, 5));
        }
    }

    #[test]
    fn primitive_element_gf9() {
        let ctx = gf9();
        assert_eq!(brute_order(&ctx, ctx.element(2).unwrap()), 2);
        assert_eq!(brute_order(&ctx, ctx.element(3).unwrap()), 4);
        assert_eq!(brute_order(&ctx, ctx.element(4).unwrap()), 8);
        let alpha = ctx.primitive_element();
        assert_eq!(alpha.encode(), 4);
        assert_eq!(ctx.multiplicative_order(alpha).unwrap(), 8);
        assert_eq!(ctx.pow(alpha, 4), -FieldElement::ONE);
    }

    #[test]
    fn primitive_element_is_smallest_generator() {
        for k in 1..=3 {
            let ctx = FieldCtx::new(k).unwrap();
            let n = ctx.group_order();
            let first = ctx
                .elements()
                .skip(1)
                .find(|&a| brute_order(&ctx, a) == n)
                .unwrap();
            assert_eq!(ctx.primitive_element(), first, "k = {k}");
            assert!(ctx.pow(first, n).is_one());
        }
    }

    #[test]
    fn frobenius_examples() {
        let ctx = gf9();
        for c in [FieldElement::ZERO, FieldElement::ONE, FieldElement::TWO] {
            for e in 0..4 {
                assert_eq!(ctx.frobenius(c, e), c);
            }
        }
        assert_eq!(ctx.conjugate_q(ctx.x()), -ctx.x());
        for k in 1..=4 {
            let ctx = FieldCtx::new(k).unwrap();
            for a in ctx.elements().step_by(11) {
                assert_eq!(ctx.cube(a), ctx.pow(a, 3));
                assert_eq!(ctx.conjugate_q(a), ctx.pow(a, ctx.q()));
                assert_eq!(ctx.frobenius(a, 2 * k as u64), a);
            }
        }
    }

    #[test]
    fn conjugate_inverts_unit_circle() {
        for k in 1..=3 {
            let ctx = FieldCtx::new(k).unwrap();
            let q = ctx.q();
            for a in ctx.elements().filter(|&a| ctx.pow(a, q + 1).is_one()) {
                assert_eq!(ctx.conjugate_q(a), ctx.inv(a).unwrap());
            }
        }
    }

    #[test]
    fn sqrt_examples() {
        let ctx = gf9();
        assert_eq!(ctx.sqrt(FieldElement::ZERO), Some(FieldElement::ZERO));
        assert_eq!(ctx.sqrt(FieldElement::ONE), Some(FieldElement::ONE));
        // roots of -1 are x (3) and 2x (6)
        assert_eq!(ctx.sqrt(FieldElement::TWO), Some(ctx.x()));
    }

    #[test]
    fn sqrt_against_exhaustive_search() {
        for k in 1..=2 {
            let ctx = FieldCtx::new(k).unwrap();
            let mut squares = 0;
            for a in ctx.elements() {
                let oracle = ctx.elements().find(|&y| ctx.square(y) == a);
                assert_eq!(ctx.sqrt(a), oracle, "k = {k}, a = {a}");
                if oracle.is_some() && !a.is_zero() {
                    squares += 1;
                }
            }
            assert_eq!(squares, ctx.group_order() / 2);
        }
    }

    #[test]
    fn epsilon_gf9() {
        let ctx = gf9();
        let eps = ctx.epsilon();
        assert_eq!(eps.encode(), 3);
        assert_eq!(ctx.pow(eps, 4), FieldElement::ONE);
        assert_ne!(ctx.square(eps), FieldElement::ONE);
    }

    #[test]
    fn epsilon_identities() {
        for k in 1..=6 {
            let ctx = FieldCtx::new(k).unwrap();
            let eps = ctx.epsilon();
            assert!((ctx.square(eps) + FieldElement::ONE).is_zero());
            assert_eq!(ctx.square(eps - FieldElement::ONE), eps);
            let roots: Vec<_> = if k <= 2 {
                ctx.elements()
                    .filter(|&y| (ctx.square(y) + FieldElement::ONE).is_zero())
                    .collect()
            } else {
                vec![eps.min(-eps)]
            };
            assert_eq!(roots[0], eps);
        }
    }

    #[test]
    fn theta_presence_follows_k_mod_3() {
        for k in 1..=6 {
            let ctx = FieldCtx::new(k).unwrap();
            assert_eq!(ctx.theta().is_some(), k % 3 == 0, "k = {k}");
        }
    }

    #[test]
    fn theta_at_k3_matches_scan() {
        let ctx = FieldCtx::new(3).unwrap();
        let scan: Vec<_> = ctx
            .elements()
            .filter(|&z| (ctx.pow(z, 3) - z - FieldElement::ONE).is_zero())
            .collect();
        assert_eq!(scan.len(), 3);
        assert_eq!(ctx.theta_roots(), scan);
        for th in scan {
            assert!(ctx.pow(th, 13).is_one());
        }
    }

    #[test]
    fn special_constants_k4() {
        let ctx = FieldCtx::new(4).unwrap();
        let sc = ctx.special_constants();
        let s = sc.sqrt_eps_minus_1.expect("16 divides 3^8 - 1");
        assert_eq!(ctx.square(s), sc.epsilon - FieldElement::ONE);
        assert!(ctx.pow(s, ctx.q() - 1).is_one());
        assert!(sc.theta.is_none() && sc.sqrt_theta.is_none());

        let ctx = FieldCtx::new(3).unwrap();
        let sc = ctx.special_constants();
        assert!(sc.sqrt_eps_minus_1.is_none());
        assert!(sc.theta.is_some());
    }

    #[test]
    fn parse_elements() {
        let ctx = gf9();
        assert_eq!(ctx.parse_element("3").unwrap(), ctx.x());
        assert_eq!(ctx.parse_element("0,1").unwrap(), ctx.x());
        assert!(ctx.parse_element("9").is_err());
        assert!(ctx.parse_element("1,3").is_err());
        assert!(ctx.parse_element("0,0,1").is_err());
        assert!(ctx.parse_element("abc").is_err());
    }

    #[test]
    fn factors_of_group_order() {
        assert_eq!(prime_factors(728), vec![2, 7, 13]);
        let ctx = FieldCtx::new(6).unwrap();
        assert_eq!(ctx.group_primes(), &[2, 5, 7, 13, 73]);
    }
}
