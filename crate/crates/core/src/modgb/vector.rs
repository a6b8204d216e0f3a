//! Sparse elements of free modules `S^r`.

use std::cmp::Ordering;

use crate::ring::{Field, Monomial, Polynomial};

/// One term `coef * mon * e_comp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mon: Monomial,
    pub comp: u32,
    pub coef: u32,
}

/// Term-over-position: compare monomials first, then the smaller
/// component index wins.
#[inline]
pub fn term_cmp(a: &Term, b: &Term) -> Ordering {
    a.mon.cmp(&b.mon).then(b.comp.cmp(&a.comp))
}

/// An element of a free module, terms strictly decreasing in the module
/// order and nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    /// `p * e_comp`.
    pub fn from_poly(p: &Polynomial, comp: usize) -> Self {
        Vector {
            terms: p
                .terms()
                .iter()
                .map(|&(mon, coef)| Term {
                    mon,
                    comp: comp as u32,
                    coef,
                })
                .collect(),
        }
    }

    pub fn unit(comp: usize) -> Self {
        Self::from_poly(&Polynomial::one(), comp)
    }

    pub fn from_terms(field: &Field, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| term_cmp(b, a));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mon == t.mon && last.comp == t.comp => {
                    last.coef = field.add(last.coef, t.coef)
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coef != 0);
        Vector { terms: out }
    }

    /// Builds from a dense column of polynomials.
    pub fn from_entries(field: &Field, entries: &[Polynomial]) -> Self {
        let mut terms = Vec::new();
        for (i, p) in entries.iter().enumerate() {
            for &(mon, coef) in p.terms() {
                terms.push(Term {
                    mon,
                    comp: i as u32,
                    coef,
                });
            }
        }
        Self::from_terms(field, terms)
    }

    pub(crate) fn from_sorted(terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| term_cmp(&w[0], &w[1]) == Ordering::Greater));
        Vector { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
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

    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Degree of the element given generator degrees of the ambient module.
    pub fn degree(&self, gen_degrees: &[i32]) -> Option<i32> {
        let t = self.terms.first()?;
        Some(t.mon.degree() as i32 + gen_degrees[t.comp as usize])
    }

    pub fn is_homogeneous(&self, gen_degrees: &[i32]) -> bool {
        match self.degree(gen_degrees) {
            None => true,
            Some(d) => self
                .terms
                .iter()
                .all(|t| t.mon.degree() as i32 + gen_degrees[t.comp as usize] == d),
        }
    }

    /// Coefficient polynomial in component `comp`.
    pub fn component(&self, comp: usize) -> Polynomial {
        Polynomial::from_sorted(
            self.terms
                .iter()
                .filter(|t| t.comp as usize == comp)
                .map(|t| (t.mon, t.coef))
                .collect(),
        )
    }

    /// Dense list of `rank` component polynomials.
    pub fn entries(&self, rank: usize) -> Vec<Polynomial> {
        let mut buckets: Vec<Vec<(Monomial, u32)>> = vec![Vec::new(); rank];
        for t in &self.terms {
            buckets[t.comp as usize].push((t.mon, t.coef));
        }
        buckets.into_iter().map(Polynomial::from_sorted).collect()
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, field: &Field, other: &Vector, c: u32, m: &Monomial) -> Vector {
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let a = &self.terms;
        let b = &other.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while j < b.len() {
            let bt = Term {
                mon: b[j].mon.mul(m),
                comp: b[j].comp,
                coef: field.mul(c, b[j].coef),
            };
            if i == a.len() {
                out.push(bt);
                j += 1;
                continue;
            }
            match term_cmp(&a[i], &bt) {
                Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Less => {
                    out.push(bt);
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(a[i].coef, bt.coef);
                    if s != 0 {
                        out.push(Term { coef: s, ..bt });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        Vector { terms: out }
    }

    pub fn add(&self, field: &Field, other: &Vector) -> Vector {
        self.add_scaled(field, other, 1, &Monomial::ONE)
    }

    pub fn sub(&self, field: &Field, other: &Vector) -> Vector {
        self.add_scaled(field, other, field.neg(1), &Monomial::ONE)
    }

    pub fn scale(&self, field: &Field, c: u32) -> Vector {
        if c == 0 {
            return Vector::zero();
        }
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: field.mul(t.coef, c),
                    ..*t
                })
                .collect(),
        }
    }

    pub fn mul_poly(&self, field: &Field, p: &Polynomial) -> Vector {
        let mut acc = Vector::zero();
        for &(m, c) in p.terms() {
            acc = acc.add_scaled(field, self, c, &m);
        }
        acc
    }

    pub fn make_monic(&self, field: &Field) -> (Vector, u32) {
        match self.leading() {
            None => (Vector::zero(), 1),
            Some(t) => {
                let inv = field.inv(t.coef);
                (self.scale(field, inv), inv)
            }
        }
    }

    /// Renumbers components through `map` (entries mapped to `None` must
    /// be absent).
    pub fn remap(&self, field: &Field, map: &[Option<usize>]) -> Vector {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                comp: map[t.comp as usize].expect("component dropped while nonzero") as u32,
                ..*t
            })
            .collect();
        Vector::from_terms(field, terms)
    }

    /// Shifts all component indices by `offset`.
    pub fn shift_components(&self, offset: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    comp: t.comp + offset as u32,
                    ..*t
                })
                .collect(),
        }
    }

    /// Keeps only components in `[lo, hi)`, renumbered from zero.
    pub fn restrict(&self, lo: usize, hi: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|t| (t.comp as usize) >= lo && (t.comp as usize) < hi)
                .map(|t| Term {
                    comp: t.comp - lo as u32,
                    ..*t
                })
                .collect(),
        }
    }

    pub fn max_component(&self) -> Option<usize> {
        self.terms.iter().map(|t| t.comp as usize).max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn add_and_cancel() {
        let f = Field::new(101).unwrap();
        let x = Polynomial::var(0);
        let y = Polynomial::var(1);
        let v = Vector::from_entries(&f, &[x.clone(), y.clone()]);
        let w = Vector::from_entries(&f, &[x, Polynomial::zero()]);
        let d = v.sub(&f, &w);
        assert_eq!(d.len(), 1);
        assert_eq!(d.component(1), y);
        assert!(v.sub(&f, &v).is_zero());
    }

    #[test]
    fn top_order_prefers_lower_component_on_ties() {
        let f = Field::new(101).unwrap();
        let v = Vector::from_entries(&f, &[Polynomial::var(0), Polynomial::var(0)]);
        assert_eq!(v.leading().unwrap().comp, 0);
    }
}
