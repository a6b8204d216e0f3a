//! Packed exponent vectors and the degree reverse lexicographic order.

use std::cmp::Ordering;
use std::fmt;

/// Largest supported number of variables.
pub const MAX_VARS: usize = 8;
/// Exponents must stay below this bound so that the packed
/// divisibility test never borrows across bytes.
pub const MAX_EXPONENT: u32 = 127;

const HIGH_BITS: u64 = 0x8080_8080_8080_8080;
const ONES: u64 = 0x0101_0101_0101_0101;

/// A monomial `x0^e0 * ... * x7^e7`, one exponent per byte, variable `i`
/// in byte `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut bits = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_EXPONENT, "exponent {e} too large");
            bits |= u64::from(e) << (8 * i);
        }
        Monomial(bits)
    }

    pub fn var(i: usize) -> Monomial {
        assert!(i < MAX_VARS);
        Monomial(1u64 << (8 * i))
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        ((self.0 >> (8 * i)) & 0xff) as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exponent(i)).collect()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        (self.0.wrapping_mul(ONES) >> 56) as u32
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let r = self.0 + other.0;
        debug_assert!(r & HIGH_BITS == 0, "exponent overflow");
        Monomial(r)
    }

    /// True when `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        ((other.0 | HIGH_BITS) - self.0) & HIGH_BITS == HIGH_BITS
    }

    /// `other / self`, assuming `self.divides(other)`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(other.0 - self.0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut bits = 0u64;
        for i in 0..MAX_VARS {
            let e = self.exponent(i).max(other.exponent(i));
            bits |= u64::from(e) << (8 * i);
        }
        Monomial(bits)
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exponent(i) == 0 || other.exponent(i) == 0)
    }

    /// Set of variables appearing, as a bit mask.
    pub fn support(&self) -> u32 {
        (0..MAX_VARS)
            .filter(|&i| self.exponent(i) > 0)
            .fold(0, |m, i| m | (1 << i))
    }

    pub fn raw(&self) -> u64 {
        self.0
    }

    /// All monomials of total degree `d` in `nvars` variables, in
    /// decreasing degrevlex order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; nvars];
        fn rec(i: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == exps.len() {
                exps[i] = left;
                out.push(Monomial::from_exponents(exps));
                return;
            }
            for e in (0..=left).rev() {
                exps[i] = e;
                rec(i + 1, left - e, exps, out);
            }
            exps[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::ONE);
            }
            return out;
        }
        rec(0, d, &mut exps, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    pub fn fmt_vars(&self, nvars: usize) -> String {
        let mut parts = Vec::new();
        for i in 0..nvars {
            match self.exponent(i) {
                0 => {}
                1 => parts.push(format!("x{i}")),
                e => parts.push(format!("x{i}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    /// Degree reverse lexicographic: higher total degree is larger; on ties
    /// the monomial with the smaller exponent in the last differing
    /// variable is larger.
    fn cmp(&self, other: &Self) -> Ordering {
        let (da, db) = (self.degree(), other.degree());
        if da != db {
            return da.cmp(&db);
        }
        let x = self.0 ^ other.0;
        if x == 0 {
            return Ordering::Equal;
        }
        let byte = (63 - x.leading_zeros()) / 8;
        let ea = (self.0 >> (8 * byte)) & 0xff;
        let eb = (other.0 >> (8 * byte)) & 0xff;
        eb.cmp(&ea)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_vars(MAX_VARS))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_examples() {
        assert!(m(&[1, 0, 0, 0]) > m(&[0, 1, 0, 0]));
        assert!(m(&[0, 0, 0, 2]) > m(&[1, 0, 0, 0]));
        assert_eq!(m(&[1, 2, 0, 1]).cmp(&m(&[1, 2, 0, 1])), Ordering::Equal);
        // x1^2 > x0*x2 in degrevlex
        assert!(m(&[0, 2, 0, 0]) > m(&[1, 0, 1, 0]));
        assert!(m(&[1, 0, 1, 0]) > m(&[0, 1, 0, 1]));
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = m(&[1, 0, 2, 0]);
        let b = m(&[2, 1, 2, 0]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), m(&[1, 1, 0, 0]));
        assert_eq!(a.lcm(&m(&[0, 3, 1, 0])), m(&[1, 3, 2, 0]));
        assert_eq!(b.degree(), 5);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(Monomial::all_of_degree(4, 3).len(), 20);
        assert_eq!(Monomial::all_of_degree(5, 2).len(), 15);
        let v = Monomial::all_of_degree(4, 2);
        assert!(v.windows(2).all(|w| w[0] > w[1]));
    }
}
