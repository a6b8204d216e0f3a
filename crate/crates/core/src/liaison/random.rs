//! Seeded random forms and module elements.

use rand::Rng;

use crate::modgb::{ops, ModulePresentation, Vector};
use crate::ring::{Monomial, Polynomial, RingContext};

/// A random form of degree `d` (zero for negative `d`).
pub fn random_form<R: Rng>(ring: &RingContext, d: i32, rng: &mut R) -> Polynomial {
    if d < 0 {
        return Polynomial::zero();
    }
    let p = ring.field.characteristic();
    let terms = Monomial::all_of_degree(ring.num_vars, d as u32)
        .into_iter()
        .map(|m| (m, rng.gen_range(1..p)))
        .collect();
    ring.reduce(&Polynomial::from_terms(&ring.field, terms))
}

/// A basis of `M_d` as elements of the free cover.
pub fn degree_basis(m: &ModulePresentation, d: i32) -> Vec<Vector> {
    ops::standard_basis(&m.gb(), d)
        .into_iter()
        .map(|(mon, c)| Vector::from_poly(&Polynomial::monomial(mon, 1), c))
        .collect()
}

/// A random combination of `basis`.
pub fn random_combination<R: Rng>(ring: &RingContext, basis: &[Vector], rng: &mut R) -> Vector {
    let f = &ring.field;
    let p = f.characteristic();
    let mut v = Vector::zero();
    for b in basis {
        v = v.add(f, &b.scale(f, rng.gen_range(1..p)));
    }
    v
}
