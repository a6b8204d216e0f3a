//! Prime field arithmetic with Barrett reduction.

use crate::error::{Error, Result};

/// The prime field GF(p) with `2 < p < 2^31`.
///
/// Scalars are plain `u32` values kept in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
    // floor(2^64 / p)
    barrett: u64,
}

pub const DEFAULT_PRIME: u32 = 32003;

impl Default for Field {
    fn default() -> Self {
        Field::new(DEFAULT_PRIME).expect("default prime is valid")
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn new(p: u32) -> Result<Self> {
        if p <= 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        let barrett = (u128::from(u64::MAX) + 1) / u128::from(p);
        Ok(Field {
            p,
            barrett: barrett as u64,
        })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Reduces any `x < p^2` (in fact any `x < 2^63`).
    #[inline]
    pub fn reduce_u64(&self, x: u64) -> u32 {
        let q = ((u128::from(x) * u128::from(self.barrett)) >> 64) as u64;
        let mut r = x - q * u64::from(self.p);
        while r >= u64::from(self.p) {
            r -= u64::from(self.p);
        }
        r as u32
    }

    #[inline]
    pub fn from_i64(&self, x: i64) -> u32 {
        let p = i64::from(self.p);
        (((x % p) + p) % p) as u32
    }

    /// Signed representative in `(-p/2, p/2]`, used for printing.
    pub fn to_signed(&self, a: u32) -> i64 {
        if a > self.p / 2 {
            i64::from(a) - i64::from(self.p)
        } else {
            i64::from(a)
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.reduce_u64(u64::from(a) * u64::from(b))
    }

    pub fn pow(&self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        // extended Euclid
        let (mut t, mut new_t) = (0i64, 1i64);
        let (mut r, mut new_r) = (i64::from(self.p), i64::from(a));
        while new_r != 0 {
            let q = r / new_r;
            (t, new_t) = (new_t, t - q * new_t);
            (r, new_r) = (new_r, r - q * new_r);
        }
        self.from_i64(t)
    }

    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_primes() {
        assert!(Field::new(2).is_err());
        assert!(Field::new(15).is_err());
        assert!(Field::new(1 << 31).is_err());
        assert!(Field::new(7).is_ok());
    }

    #[test]
    fn small_field_axioms_exhaustive() {
        let f = Field::new(13).unwrap();
        for a in 0..13 {
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..13 {
                assert_eq!(f.add(a, b), (a + b) % 13);
                assert_eq!(f.mul(a, b), (a * b) % 13);
                for c in 0..13 {
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn barrett_matches_remainder_near_top() {
        let f = Field::new(2147483647).unwrap();
        for &(a, b) in &[(2147483646u32, 2147483646u32), (123456789, 987654321), (1, 2147483646)] {
            assert_eq!(f.mul(a, b) as u64, (a as u64 * b as u64) % 2147483647);
        }
    }
}
