//! Arithmetic over the prime field GF(3): dense trit polynomials and the
//! bit-sliced quotient ring GF(3)[x]/(M) for an arbitrary monic `M`.
//!
//! Trit polynomials are `Vec<u8>` with the constant term first. They are
//! only used to vet and choose moduli, so nothing here is performance
//! critical except [`QuotientRing::mul`].

use super::element::FieldElement;

/// Arithmetic modulo a monic `M` of degree `m`, 1 <= m <= 64. `M` need not
/// be irreducible: the irreducibility test itself runs in this ring.
#[derive(Clone, Debug)]
pub(crate) struct QuotientRing {
    m: usize,
    mask: u64,
    /// `x^m mod M`, i.e. the negated low part of `M`.
    fold: FieldElement,
}

impl QuotientRing {
    pub(crate) fn new(modulus: &[u8]) -> QuotientRing {
        let m = modulus.len() - 1;
        assert!((1..=64).contains(&m) && modulus[m] == 1);
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let fold = -FieldElement::from_trits(&modulus[..m]);
        QuotientRing { m, mask, fold }
    }

    #[inline]
    pub(crate) fn mul_by_x(&self, a: FieldElement) -> FieldElement {
        let top = a.trit(self.m - 1);
        a.shl1(self.mask) + self.fold.scale(top)
    }

    /// Shift-and-add over the trits of `b`, highest first.
    #[inline]
    pub(crate) fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (b1, b2) = b.masks();
        let used = b1 | b2;
        if used == 0 {
            return FieldElement::ZERO;
        }
        let top = 63 - used.leading_zeros() as usize;
        let neg_a = -a;
        let mut acc = FieldElement::ZERO;
        for i in (0..=top).rev() {
            acc = self.mul_by_x(acc);
            if (b1 >> i) & 1 == 1 {
                acc += a;
            } else if (b2 >> i) & 1 == 1 {
                acc += neg_a;
            }
        }
        acc
    }

    pub(crate) fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub(crate) fn cube(&self, a: FieldElement) -> FieldElement {
        self.mul(self.mul(a, a), a)
    }
}

pub(crate) fn trim(p: &mut Vec<u8>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn degree(p: &[u8]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` by nonzero `b` over GF(3).
fn rem(a: &[u8], b: &[u8]) -> Vec<u8> {
    let db = degree(b).expect("division by the zero trit polynomial");
    // 1 and 2 are their own inverses mod 3.
    let lead_inv = b[db];
    let mut r: Vec<u8> = a.iter().map(|c| c % 3).collect();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = (r[dr] * lead_inv) % 3;
        let shift = dr - db;
        for (i, &c) in b[..=db].iter().enumerate() {
            r[shift + i] = (r[shift + i] + 3 * 3 - factor * c) % 3;
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn gcd(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// Ben-Or irreducibility test: a monic `M` of degree `m` is irreducible
/// iff `gcd(M, x^(3^i) - x) = 1` for every `1 <= i <= m/2`.
pub(crate) fn is_irreducible(modulus: &[u8]) -> bool {
    let m = modulus.len() - 1;
    if m == 1 {
        return true;
    }
    if modulus[0] == 0 {
        return false;
    }
    let ring = QuotientRing::new(modulus);
    let x = FieldElement::from_trits(&[0, 1]);
    let mut frob = x;
    for _ in 1..=m / 2 {
        frob = ring.cube(frob);
        let g = gcd(modulus, &(frob - x).trits(m));
        if degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree `m`, comparing
/// coefficient vectors constant term first.
pub(crate) fn default_modulus(m: usize) -> Vec<u8> {
    let total = 3u64.pow(m as u32);
    for idx in 0..total {
        let mut poly = vec![0u8; m + 1];
        let mut rest = idx;
        for i in (0..m).rev() {
            poly[i] = (rest % 3) as u8;
            rest /= 3;
        }
        poly[m] = 1;
        if poly[0] != 0 && is_irreducible(&poly) {
            return poly;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_irreducibles() {
        assert!(is_irreducible(&[1, 0, 1]));
        assert!(!is_irreducible(&[2, 0, 1]));
        assert!(is_irreducible(&[2, 1, 1]));
        // x^3 - x - 1 = x^3 + 2x + 2
        assert!(is_irreducible(&[2, 2, 0, 1]));
        // (x^2 + 1)^2
        assert!(!is_irreducible(&[1, 0, 2, 0, 1]));
    }

    #[test]
    fn degree_two_default_is_x2_plus_1() {
        assert_eq!(default_modulus(2), vec![1, 0, 1]);
    }

    #[test]
    fn gcd_over_gf3() {
        // (x - 1)(x + 1) and (x - 1)(x^2 + 1) share x - 1 = x + 2
        let g = gcd(&[2, 0, 1], &[2, 1, 2, 1]);
        assert_eq!(degree(&g), Some(1));
        let monic: Vec<u8> = g.iter().map(|c| (c * g[1]) % 3).collect();
        assert_eq!(monic, vec![2, 1]);
    }

    #[test]
    fn quotient_ring_x_squared() {
        let ring = QuotientRing::new(&[1, 0, 1]);
        let x = FieldElement::from_trits(&[0, 1]);
        assert_eq!(ring.mul(x, x), FieldElement::TWO);
    }
}
