//! Homogeneous ideals.

use super::engine::{GbOptions, GroebnerBasis};
use super::matrix::GradedMatrix;
use super::ops;
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::ring::{Polynomial, RingContext};

#[derive(Clone, Debug)]
pub struct Ideal {
    ring: RingContext,
    gens: Vec<Polynomial>,
}

impl PartialEq for Ideal {
    /// Equality as ideals, not as generator lists.
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.is_subset(other) && other.is_subset(self)
    }
}

impl Ideal {
    /// Rejects inhomogeneous generators; zero generators are dropped and
    /// entries are reduced modulo the ring relation.
    pub fn new(ring: &RingContext, gens: Vec<Polynomial>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.is_homogeneous() {
                return Err(Error::NonHomogeneous(ring.print(&g)));
            }
            let g = ring.reduce(&g);
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
        })
    }

    /// Parses generator strings.
    pub fn parse(ring: &RingContext, gens: &[&str]) -> Result<Self> {
        let polys = gens
            .iter()
            .map(|s| ring.parse_homogeneous(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: &RingContext) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &RingContext) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one()],
        }
    }

    /// The irrelevant ideal `(x0, ..., x_n)`.
    pub fn irrelevant(ring: &RingContext) -> Self {
        Ideal {
            ring: ring.clone(),
            gens: (0..ring.num_vars).map(Polynomial::var).collect(),
        }
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Generators as a row `⊕ S(-d_j) -> S`.
    pub fn as_row(&self) -> GradedMatrix {
        GradedMatrix::row(&self.ring, 0, &self.gens).expect("homogeneous generators")
    }

    pub fn from_row(m: &GradedMatrix) -> Ideal {
        assert_eq!(m.nrows(), 1);
        Ideal::new(m.ring(), m.columns().iter().map(|c| c.component(0)).collect()).expect("homogeneous")
    }

    pub fn gb(&self) -> GroebnerBasis {
        ops::column_gb(&self.as_row(), &GbOptions::default())
    }

    /// Reduced Gröbner basis, sorted by leading monomial.
    pub fn groebner_basis(&self) -> Vec<Polynomial> {
        self.gb().reduced().iter().map(|v| v.component(0)).collect()
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        self.gb().normal_form(&Vector::from_poly(p, 0)).component(0)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        let gb = other.gb();
        self.gens.iter().all(|g| gb.contains(&Vector::from_poly(g, 0)))
    }

    pub fn is_unit(&self) -> bool {
        self.contains(&Polynomial::one())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Minimal homogeneous generators.
    pub fn minimalize(&self) -> Ideal {
        Ideal::from_row(&ops::minimal_generators(&self.as_row()))
    }

    pub fn add(&self, other: &Ideal) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal {
            ring: self.ring.clone(),
            gens: g,
        }
    }

    pub fn mul(&self, other: &Ideal) -> Ideal {
        let f = &self.ring.field;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a.mul(f, b));
            }
        }
        Ideal::new(&self.ring, g).expect("products of forms")
    }

    pub fn scale_by(&self, p: &Polynomial) -> Ideal {
        let f = &self.ring.field;
        Ideal::new(&self.ring, self.gens.iter().map(|g| g.mul(f, p)).collect()).expect("forms")
    }

    pub fn intersect(&self, other: &Ideal) -> Ideal {
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(&self.ring);
        }
        Ideal::from_row(&ops::intersect(&self.as_row(), &other.as_row()))
    }

    /// `I : (f)`.
    pub fn colon_poly(&self, f: &Polynomial) -> Ideal {
        let f = self.ring.reduce(f);
        if f.is_zero() {
            return Ideal::unit(&self.ring);
        }
        let mut gens = vec![f];
        gens.extend(self.gens.iter().cloned());
        let row = GradedMatrix::row(&self.ring, 0, &gens).expect("forms");
        let syz = ops::syzygy_module(&row);
        let first: Vec<Polynomial> = syz.columns().iter().map(|c| c.component(0)).collect();
        Ideal::new(&self.ring, first).expect("forms").minimalize()
    }

    /// `I : J`.
    pub fn colon(&self, j: &Ideal) -> Ideal {
        let mut acc: Option<Ideal> = None;
        for g in &j.gens {
            let c = self.colon_poly(g);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c),
            });
        }
        acc.unwrap_or_else(|| Ideal::unit(&self.ring))
    }

    /// `I : m^∞` by iterated colon until it stabilizes.
    pub fn saturate(&self) -> Ideal {
        let m = Ideal::irrelevant(&self.ring);
        let mut cur = self.minimalize();
        loop {
            let next = cur.colon(&m);
            if next.is_subset(&cur) {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_saturated(&self) -> bool {
        self.colon(&Ideal::irrelevant(&self.ring)).is_subset(self)
    }

    /// Krull dimension of `S/I`; `None` for the unit ideal.
    pub fn dim(&self) -> Option<usize> {
        ops::krull_dim(&self.gb())
    }

    /// Height (codimension); the unit ideal has height `ring.dim + 1`.
    pub fn height(&self) -> usize {
        ops::height_of(&self.gb())
    }

    /// `dim_k (S/I)_d`.
    pub fn hilbert_function(&self, d: i32) -> usize {
        ops::hilbert_function(&self.gb(), d)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.ring.print(g)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p3() -> RingContext {
        RingContext::p3()
    }

    #[test]
    fn groebner_examples() {
        let r = p3();
        let i = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        assert_eq!(i.groebner_basis().len(), 2);
        let tc = Ideal::parse(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]).unwrap();
        assert_eq!(tc.groebner_basis().len(), 3);
        assert_eq!(tc.hilbert_function(2), 7);
    }

    #[test]
    fn normal_forms() {
        let r = p3();
        let i = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        assert!(i.contains(&r.parse("x0^2*x1").unwrap()));
        assert_eq!(i.normal_form(&r.parse("x2^3").unwrap()), r.parse("x2^3").unwrap());
    }

    #[test]
    fn saturation_examples() {
        let r = p3();
        let line = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        assert_eq!(line.saturate(), line);
        let xm = Ideal::parse(&r, &["x0^2", "x0*x1", "x0*x2", "x0*x3"]).unwrap();
        assert_eq!(xm.saturate(), Ideal::parse(&r, &["x0"]).unwrap());
        let emb = Ideal::parse(&r, &["x0^2", "x0*x1", "x0*x2", "x0*x3", "x1^2"]).unwrap();
        let sat = emb.saturate();
        assert_eq!(sat, Ideal::parse(&r, &["x0", "x1^2"]).unwrap());
        assert_eq!(sat.saturate(), sat);
    }

    #[test]
    fn colon_examples() {
        let r = p3();
        let i = Ideal::parse(&r, &["x0*x1"]).unwrap();
        assert_eq!(i.colon(&Ideal::parse(&r, &["x0"]).unwrap()), Ideal::parse(&r, &["x1"]).unwrap());
        let tc = Ideal::parse(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]).unwrap();
        assert_eq!(tc.colon(&Ideal::unit(&r)), tc);
        let a = Ideal::parse(&r, &["x0"]).unwrap();
        let b = Ideal::parse(&r, &["x1^2"]).unwrap();
        let c = a.intersect(&b).colon(&Ideal::parse(&r, &["x1"]).unwrap());
        assert_eq!(c, Ideal::parse(&r, &["x0*x1"]).unwrap());
    }

    #[test]
    fn heights() {
        let r = p3();
        assert_eq!(Ideal::parse(&r, &["x0", "x1"]).unwrap().height(), 2);
        assert_eq!(Ideal::zero(&r).height(), 0);
        assert_eq!(Ideal::irrelevant(&r).height(), 4);
    }
}
