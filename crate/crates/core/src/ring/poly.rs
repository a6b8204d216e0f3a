use std::cmp::Ordering;

use super::field::Field;
use super::monomial::Monomial;

/// A polynomial over GF(p): terms sorted strictly decreasing in degrevlex,
/// no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(c: u32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Polynomial {
                terms: vec![(Monomial::ONE, c)],
            }
        }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn monomial(m: Monomial, c: u32) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), 1)
    }

    /// Builds from arbitrary terms, combining duplicates.
    pub fn from_terms(field: &Field, mut terms: Vec<(Monomial, u32)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Monomial, u32)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial { terms: out }
    }

    /// Trusts the caller that terms are sorted and nonzero.
    pub(crate) fn from_sorted(terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(Monomial, u32)> {
        self.terms.first().copied()
    }

    /// Degree when homogeneous and nonzero.
    pub fn degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|t| t.0.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn constant_term(&self) -> u32 {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => *c,
            _ => 0,
        }
    }

    pub fn add(&self, field: &Field, other: &Polynomial) -> Polynomial {
        self.add_scaled(field, other, 1, &Monomial::ONE)
    }

    pub fn sub(&self, field: &Field, other: &Polynomial) -> Polynomial {
        self.add_scaled(field, other, field.neg(1), &Monomial::ONE)
    }

    pub fn neg(&self, field: &Field) -> Polynomial {
        self.scale(field, field.neg(1))
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, field: &Field, other: &Polynomial, c: u32, m: &Monomial) -> Polynomial {
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let bm = b[j].0.mul(m);
            if i == a.len() {
                out.push((bm, field.mul(c, b[j].1)));
                j += 1;
                continue;
            }
            match a[i].0.cmp(&bm) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, field.mul(c, b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(a[i].1, field.mul(c, b[j].1));
                    if s != 0 {
                        out.push((bm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { terms: out }
    }

    pub fn scale(&self, field: &Field, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|&(m, a)| (m, field.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, field: &Field, m: &Monomial, c: u32) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|&(t, a)| (t.mul(m), field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul(&self, field: &Field, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero();
        for &(m, c) in &small.terms {
            acc = acc.add_scaled(field, big, c, &m);
        }
        acc
    }

    pub fn pow(&self, field: &Field, e: u32) -> Polynomial {
        let mut r = Polynomial::one();
        for _ in 0..e {
            r = r.mul(field, self);
        }
        r
    }

    pub fn evaluate(&self, field: &Field, point: &[u32]) -> u32 {
        let mut acc = 0u32;
        for &(m, c) in &self.terms {
            let mut v = c;
            for (i, &x) in point.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    v = field.mul(v, field.pow(x, u64::from(e)));
                }
            }
            acc = field.add(acc, v);
        }
        acc
    }

    /// Substitutes each variable `x_i` by `images[i]`.
    pub fn substitute(&self, field: &Field, images: &[Polynomial]) -> Polynomial {
        let mut acc = Polynomial::zero();
        for &(m, c) in &self.terms {
            let mut t = Polynomial::constant(c);
            for (i, img) in images.iter().enumerate() {
                let e = m.exponent(i);
                if e > 0 {
                    t = t.mul(field, &img.pow(field, e));
                }
            }
            acc = acc.add(field, &t);
        }
        acc
    }

    /// Exact quotient by a monomial dividing every term.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Polynomial> {
        if !self.terms.iter().all(|t| m.divides(&t.0)) {
            return None;
        }
        Some(Polynomial {
            terms: self.terms.iter().map(|&(t, c)| (m.quotient_of(&t), c)).collect(),
        })
    }

    pub fn make_monic(&self, field: &Field) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some((_, c)) => self.scale(field, field.inv(c)),
        }
    }

    /// Canonical text form: terms in decreasing degrevlex order, signed
    /// coefficients.
    pub fn to_string_with(&self, field: &Field, nvars: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, &(m, c)) in self.terms.iter().enumerate() {
            let sc = field.to_signed(c);
            let neg = sc < 0;
            let abs = sc.unsigned_abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs == 1 {
                s.push_str(&m.fmt_vars(nvars));
            } else {
                s.push_str(&format!("{}*{}", abs, m.fmt_vars(nvars)));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let f = Field::new(7).unwrap();
        let x = Polynomial::var(0);
        let y = Polynomial::var(1);
        let s = x.add(&f, &y);
        let sq = s.mul(&f, &s);
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.degree(), Some(2));
        let d = sq.sub(&f, &sq);
        assert!(d.is_zero());
        assert_eq!(sq.evaluate(&f, &[1, 2]), 2);
        assert_eq!(sq.to_string_with(&f, 2), "x0^2 + 2*x0*x1 + x1^2");
    }

    #[test]
    fn non_homogeneous_has_no_degree() {
        let f = Field::new(7).unwrap();
        let p = Polynomial::var(0).add(&f, &Polynomial::one());
        assert_eq!(p.degree(), None);
        assert!(!p.is_homogeneous());
    }
}
