//! Finitely presented graded modules `coker(F1 -> F0)`.

use super::engine::{GbOptions, GroebnerBasis};
use super::ideal::Ideal;
use super::matrix::{FreeModule, GradedMatrix};
use super::ops;
use super::vector::Vector;
use crate::ring::{Polynomial, RingContext};

/// The cokernel of `relations: F1 -> F0`; `F0` is the free cover.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModulePresentation {
    relations: GradedMatrix,
}

/// A presentation with fewer generators together with the images of the
/// old generators.
#[derive(Clone, Debug)]
pub struct Pruned {
    pub module: ModulePresentation,
    /// Map from the old free cover to the new one inducing the isomorphism.
    pub old_to_new: GradedMatrix,
    /// For each new generator, the old generator it came from.
    pub kept: Vec<usize>,
}

impl ModulePresentation {
    pub fn new(relations: GradedMatrix) -> Self {
        ModulePresentation { relations }
    }

    /// The free module `F` itself.
    pub fn free(ring: &RingContext, f: FreeModule) -> Self {
        ModulePresentation {
            relations: GradedMatrix::zero(ring, f, FreeModule::zero()),
        }
    }

    pub fn zero(ring: &RingContext) -> Self {
        Self::free(ring, FreeModule::zero())
    }

    /// `S/I`.
    pub fn quotient_ring(ideal: &Ideal) -> Self {
        ModulePresentation {
            relations: ideal.as_row(),
        }
    }

    /// The ideal `I` as a module, generated by its given generators.
    pub fn of_ideal(ideal: &Ideal) -> Self {
        let row = ideal.as_row();
        let syz = ops::syzygy_module(&row);
        ModulePresentation { relations: syz }
    }

    /// `im(m)` as a module, generated by the columns of `m`.
    pub fn image(m: &GradedMatrix) -> Self {
        ModulePresentation {
            relations: ops::syzygy_module(m),
        }
    }

    /// `coker(m)`.
    pub fn cokernel(m: &GradedMatrix) -> Self {
        ModulePresentation { relations: m.clone() }
    }

    pub fn ring(&self) -> &RingContext {
        self.relations.ring()
    }

    pub fn relations(&self) -> &GradedMatrix {
        &self.relations
    }

    pub fn free_cover(&self) -> &FreeModule {
        self.relations.target()
    }

    pub fn num_generators(&self) -> usize {
        self.relations.nrows()
    }

    /// `M(t)`.
    pub fn shift(&self, t: i32) -> Self {
        ModulePresentation {
            relations: self.relations.shift(t),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        ModulePresentation {
            relations: self.relations.direct_sum(&other.relations),
        }
    }

    pub fn gb(&self) -> GroebnerBasis {
        ops::column_gb(&self.relations, &GbOptions::default())
    }

    pub fn traced_gb(&self) -> GroebnerBasis {
        ops::column_gb(
            &self.relations,
            &GbOptions {
                trace: true,
                ..Default::default()
            },
        )
    }

    pub fn hilbert_function(&self, d: i32) -> usize {
        ops::hilbert_function(&self.gb(), d)
    }

    /// Krull dimension; `None` for the zero module.
    pub fn krull_dim(&self) -> Option<usize> {
        ops::krull_dim(&self.gb())
    }

    pub fn height(&self) -> usize {
        ops::height_of(&self.gb())
    }

    pub fn is_zero(&self) -> bool {
        let gb = self.gb();
        (0..self.num_generators()).all(|i| gb.contains(&Vector::unit(i)))
    }

    /// Annihilator-free test for finite length.
    pub fn is_finite_length(&self) -> bool {
        self.krull_dim().is_none_or(|d| d == 0)
    }

    /// Removes generators that are killed by scalar relations and then
    /// keeps a minimal set of relations.
    pub fn prune(&self) -> Pruned {
        let ring = self.ring().clone();
        let f = ring.field;
        let n0 = self.num_generators();
        let mut cols: Vec<Vector> = self.relations.columns().to_vec();
        let mut images: Vec<Vector> = (0..n0).map(Vector::unit).collect();
        let mut alive = vec![true; n0];
        loop {
            // first column carrying a unit entry, and its first such row
            let mut hit = None;
            'outer: for (j, c) in cols.iter().enumerate() {
                for t in c.terms() {
                    if t.mon.is_one() {
                        hit = Some((j, t.comp as usize, t.coef));
                        break 'outer;
                    }
                }
            }
            let Some((j, i, c)) = hit else { break };
            let pivot = cols.remove(j);
            let inv = f.inv(c);
            let eliminate = |v: &Vector| -> Vector {
                let coeff = v.component(i);
                if coeff.is_zero() {
                    return v.clone();
                }
                let mut out = v.clone();
                for &(m, a) in coeff.terms() {
                    out = out.add_scaled(&f, &pivot, f.neg(f.mul(a, inv)), &m);
                }
                out
            };
            for col in cols.iter_mut() {
                *col = eliminate(col);
            }
            for img in images.iter_mut() {
                *img = eliminate(img);
            }
            alive[i] = false;
        }
        let kept: Vec<usize> = (0..n0).filter(|&i| alive[i]).collect();
        let mut map = vec![None; n0];
        for (new, &old) in kept.iter().enumerate() {
            map[old] = Some(new);
        }
        let target = self.free_cover().select(&kept);
        let tdeg = target.degrees();
        let reduce = |v: &Vector| -> Vector {
            let r = v.remap(&f, &map);
            if ring.is_quotient() {
                let e: Vec<Polynomial> = r.entries(kept.len()).iter().map(|p| ring.reduce(p)).collect();
                Vector::from_entries(&f, &e)
            } else {
                r
            }
        };
        let mut new_cols = Vec::new();
        let mut new_src = Vec::new();
        for (c, tw) in cols.iter().zip(self.relation_twists_after(&cols)) {
            let v = reduce(c);
            if !v.is_zero() {
                debug_assert_eq!(v.degree(&tdeg), Some(-tw));
                new_cols.push(v);
                new_src.push(tw);
            }
        }
        let rel = GradedMatrix::new_unchecked(&ring, target.clone(), FreeModule::new(new_src), new_cols);
        let rel = ops::minimal_generators(&rel);
        let img_cols: Vec<Vector> = images.iter().map(reduce).collect();
        let old_to_new = GradedMatrix::new_unchecked(&ring, target, self.free_cover().clone(), img_cols);
        Pruned {
            module: ModulePresentation { relations: rel },
            old_to_new,
            kept,
        }
    }

    fn relation_twists_after(&self, cols: &[Vector]) -> Vec<i32> {
        let tdeg = self.free_cover().degrees();
        cols.iter().map(|c| -c.degree(&tdeg).unwrap_or(0)).collect()
    }

    pub fn minimal(&self) -> ModulePresentation {
        self.prune().module
    }

    /// `Fitt_r`: ideal of `(n - r)`-minors of the relation matrix.
    pub fn fitting_ideal(&self, r: usize) -> Ideal {
        let n = self.num_generators();
        let ring = self.ring();
        if r >= n {
            return Ideal::unit(ring);
        }
        let k = n - r;
        let rows = self.relations.rows();
        Ideal::new(ring, ops::minors(ring, &rows, k)).expect("minors are forms")
    }

    /// Annihilator of the module.
    pub fn annihilator(&self) -> Ideal {
        let ring = self.ring();
        let n = self.num_generators();
        let mut acc = Ideal::unit(ring);
        for i in 0..n {
            // ann(e_i) = (R : e_i) computed as kernel of S -> F0/M
            let mut m = GradedMatrix::new_unchecked(
                ring,
                self.free_cover().clone(),
                FreeModule::new(vec![self.free_cover().twists()[i]]),
                vec![Vector::unit(i)],
            );
            m = m.concat(&self.relations);
            let syz = ops::syzygy_module(&m);
            let first: Vec<Polynomial> = syz.columns().iter().map(|c| c.component(0)).collect();
            let ann = Ideal::new(ring, first).expect("forms");
            acc = acc.intersect(&ann);
        }
        acc.minimalize()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fitting_examples() {
        let r = RingContext::p3();
        let m = GradedMatrix::from_rows(
            &r,
            FreeModule::free(2),
            FreeModule::new(vec![-1]),
            &[vec![r.parse("x0").unwrap()], vec![r.parse("x1").unwrap()]],
        )
        .unwrap();
        let p = ModulePresentation::cokernel(&m);
        assert_eq!(p.fitting_ideal(1), Ideal::parse(&r, &["x0", "x1"]).unwrap());
        let free = ModulePresentation::free(&r, FreeModule::free(3));
        assert!(free.fitting_ideal(3).is_unit());
        let a = ModulePresentation::quotient_ring(&Ideal::parse(&r, &["x0"]).unwrap());
        let b = ModulePresentation::quotient_ring(&Ideal::parse(&r, &["x1"]).unwrap());
        assert_eq!(a.direct_sum(&b).fitting_ideal(0), Ideal::parse(&r, &["x0*x1"]).unwrap());
    }

    #[test]
    fn prune_removes_unit_relations() {
        let r = RingContext::p3();
        // S^2 / (e0 - x0 e1): isomorphic to S(-1) generated by e1
        let m = GradedMatrix::from_rows(
            &r,
            FreeModule::new(vec![-1, 0]),
            FreeModule::new(vec![-1]),
            &[vec![r.parse("1").unwrap()], vec![r.parse("-x0").unwrap()]],
        )
        .unwrap();
        let p = ModulePresentation::cokernel(&m).prune();
        assert_eq!(p.kept, vec![1]);
        assert_eq!(p.module.num_generators(), 1);
        assert_eq!(p.module.relations().ncols(), 0);
        assert_eq!(p.old_to_new.column(0).component(0), r.parse("x0").unwrap());
    }

    #[test]
    fn annihilator_of_cyclic() {
        let r = RingContext::p3();
        let i = Ideal::parse(&r, &["x0", "x1^2"]).unwrap();
        assert_eq!(ModulePresentation::quotient_ring(&i).annihilator(), i);
    }
}
