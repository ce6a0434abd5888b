use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

/// An element of GF(3)[x]/(M) in polynomial basis.
///
/// Trits are bit-sliced: bit `i` of `ones` is set when the coefficient of
/// `x^i` is 1, bit `i` of `twos` when it is 2. The two masks are disjoint,
/// so equality of elements is equality of the masks. Addition, subtraction
/// and negation need no modulus and are implemented as operators; anything
/// that multiplies goes through [`FieldCtx`](super::FieldCtx).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FieldElement {
    ones: u64,
    twos: u64,
}

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement { ones: 0, twos: 0 };
    pub const ONE: FieldElement = FieldElement { ones: 1, twos: 0 };
    pub const TWO: FieldElement = FieldElement { ones: 0, twos: 1 };

    /// Constant of the prime subfield, `c` taken mod 3.
    pub const fn from_trit(c: u8) -> FieldElement {
        match c % 3 {
            0 => FieldElement::ZERO,
            1 => FieldElement::ONE,
            _ => FieldElement::TWO,
        }
    }

    pub(crate) const fn masks(self) -> (u64, u64) {
        (self.ones, self.twos)
    }

    /// Builds an element from coefficients of `1, x, x^2, ...`. Every entry
    /// is reduced mod 3; at most 64 trits are accepted.
    pub fn from_trits(trits: &[u8]) -> FieldElement {
        assert!(trits.len() <= 64, "at most 64 trits fit in an element");
        let mut e = FieldElement::ZERO;
        for (i, &t) in trits.iter().enumerate() {
            match t % 3 {
                1 => e.ones |= 1 << i,
                2 => e.twos |= 1 << i,
                _ => {}
            }
        }
        e
    }

    /// Decodes a base-3 integer, low-degree digit least significant. The
    /// caller is responsible for checking the value against the field order.
    pub fn from_encoding(mut n: u64) -> FieldElement {
        let mut e = FieldElement::ZERO;
        let mut i = 0;
        while n > 0 {
            match n % 3 {
                1 => e.ones |= 1 << i,
                2 => e.twos |= 1 << i,
                _ => {}
            }
            n /= 3;
            i += 1;
        }
        e
    }

    /// Base-3 encoding; a bijection onto `[0, 3^m)` for elements of a field
    /// of degree `m`.
    pub fn encode(self) -> u64 {
        let mut n = 0u64;
        for i in (0..self.len()).rev() {
            n = n * 3 + self.trit(i) as u64;
        }
        n
    }

    /// Coefficient of `x^i`.
    #[inline]
    pub fn trit(self, i: usize) -> u8 {
        (((self.ones >> i) & 1) | (((self.twos >> i) & 1) << 1)) as u8
    }

    /// The first `m` coefficients, low degree first.
    pub fn trits(self, m: usize) -> Vec<u8> {
        (0..m).map(|i| self.trit(i)).collect()
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.ones == 0 && self.twos == 0
    }

    #[inline]
    pub fn is_one(self) -> bool {
        self == FieldElement::ONE
    }

    /// Number of trits up to and including the highest nonzero one.
    #[inline]
    fn len(self) -> usize {
        64 - (self.ones | self.twos).leading_zeros() as usize
    }

    /// Multiplication by a prime-subfield scalar.
    #[inline]
    pub fn scale(self, c: u8) -> FieldElement {
        match c % 3 {
            0 => FieldElement::ZERO,
            1 => self,
            _ => -self,
        }
    }

    #[inline]
    pub(crate) fn shl1(self, mask: u64) -> FieldElement {
        FieldElement {
            ones: (self.ones << 1) & mask,
            twos: (self.twos << 1) & mask,
        }
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    #[inline]
    fn add(self, rhs: FieldElement) -> FieldElement {
        let t = (self.ones | rhs.twos) ^ (self.twos | rhs.ones);
        FieldElement {
            ones: (self.twos | rhs.twos) ^ t,
            twos: (self.ones | rhs.ones) ^ t,
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    #[inline]
    fn neg(self) -> FieldElement {
        FieldElement {
            ones: self.twos,
            twos: self.ones,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;

    #[inline]
    fn sub(self, rhs: FieldElement) -> FieldElement {
        self + (-rhs)
    }
}

impl AddAssign for FieldElement {
    #[inline]
    fn add_assign(&mut self, rhs: FieldElement) {
        *self = *self + rhs;
    }
}

impl SubAssign for FieldElement {
    #[inline]
    fn sub_assign(&mut self, rhs: FieldElement) {
        *self = *self - rhs;
    }
}

/// Ordered by integer encoding.
impl Ord for FieldElement {
    fn cmp(&self, other: &FieldElement) -> Ordering {
        let diff = (self.ones ^ other.ones) | (self.twos ^ other.twos);
        if diff == 0 {
            return Ordering::Equal;
        }
        let top = 63 - diff.leading_zeros() as usize;
        self.trit(top).cmp(&other.trit(top))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &FieldElement) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialized as the integer encoding.
impl serde::Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u64(self.encode())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.encode())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (0..self.len())
            .rev()
            .filter(|&i| self.trit(i) != 0)
            .map(|i| match (self.trit(i), i) {
                (c, 0) => c.to_string(),
                (1, 1) => "x".to_string(),
                (c, 1) => format!("{c}x"),
                (1, i) => format!("x^{i}"),
                (c, i) => format!("{c}x^{i}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trit_addition_table() {
        for a in 0..3u8 {
            for b in 0..3u8 {
                let sum = FieldElement::from_trit(a) + FieldElement::from_trit(b);
                assert_eq!(sum, FieldElement::from_trit((a + b) % 3), "{a} + {b}");
                let diff = FieldElement::from_trit(a) - FieldElement::from_trit(b);
                assert_eq!(diff, FieldElement::from_trit((a + 3 - b) % 3), "{a} - {b}");
            }
        }
    }

    #[test]
    fn slices_add_independently() {
        let a = FieldElement::from_trits(&[1, 2, 0, 1, 2, 2]);
        let b = FieldElement::from_trits(&[1, 1, 2, 0, 2, 1]);
        assert_eq!((a + b).trits(6), vec![2, 0, 2, 1, 1, 0]);
    }

    #[test]
    fn three_copies_vanish() {
        let x = FieldElement::from_trits(&[0, 1]);
        assert!((x + x + x).is_zero());
    }

    #[test]
    fn encoding_round_trip() {
        for n in 0..729u64 {
            let e = FieldElement::from_encoding(n);
            assert_eq!(e.encode(), n);
        }
        assert_eq!(FieldElement::from_trits(&[1, 0, 1]).encode(), 10);
    }

    #[test]
    fn order_matches_encoding() {
        for a in 0..243u64 {
            for b in 0..243u64 {
                let (x, y) = (
                    FieldElement::from_encoding(a),
                    FieldElement::from_encoding(b),
                );
                assert_eq!(x.cmp(&y), a.cmp(&b));
            }
        }
    }

    #[test]
    fn debug_lists_terms() {
        let e = FieldElement::from_trits(&[2, 1, 0, 2]);
        assert_eq!(format!("{e:?}"), "2x^3 + x + 2");
        assert_eq!(format!("{:?}", FieldElement::ZERO), "0");
    }
}
