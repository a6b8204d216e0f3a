//! Modules standing for coherent sheaves.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::modgb::{ops, syzygy_module, FreeModule, GradedMatrix, Ideal, ModulePresentation, Vector};
use crate::ring::{Polynomial, RingContext};

const RANK_SEED: u64 = 0x7a6e_6b31;

/// A graded module with `H^0_m = 0`, standing for its sheaf.
#[derive(Clone, Debug)]
pub struct SheafModule {
    module: ModulePresentation,
    rank: usize,
}

impl SheafModule {
    /// Minimalizes `m` and removes its largest finite-length submodule.
    pub fn new(m: &ModulePresentation) -> Self {
        let module = strip_finite_torsion(m);
        let rank = generic_rank(&module);
        SheafModule { module, rank }
    }

    /// `I(n)` for an ideal `I`.
    pub fn from_ideal(i: &Ideal, n: i32) -> Self {
        Self::new(&ModulePresentation::of_ideal(i).shift(n))
    }

    /// The dissocié module `F`.
    pub fn free(ring: &RingContext, f: FreeModule) -> Self {
        let r = f.rank();
        SheafModule {
            module: ModulePresentation::free(ring, f),
            rank: r,
        }
    }

    pub fn module(&self) -> &ModulePresentation {
        &self.module
    }

    pub fn ring(&self) -> &RingContext {
        self.module.ring()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// True when the minimal presentation has no relations.
    pub fn is_dissocie(&self) -> bool {
        self.module.relations().ncols() == 0
    }

    pub fn shift(&self, t: i32) -> Self {
        SheafModule {
            module: self.module.shift(t),
            rank: self.rank,
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        SheafModule {
            module: self.module.direct_sum(&other.module),
            rank: self.rank + other.rank,
        }
    }

    /// `Hom(E, S)`.
    pub fn dual(&self) -> Self {
        let ring = self.ring();
        let s = ModulePresentation::free(ring, FreeModule::free(1));
        Self::new(&crate::homalg::hom_presentation(&self.module, &s))
    }
}

/// `rank F0 - rank(relations)` over the fraction field.
pub fn generic_rank(m: &ModulePresentation) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(RANK_SEED);
    m.num_generators() - m.relations().generic_rank(&mut rng)
}

/// `R : m` for a submodule `R` of `F0` given by columns.
fn colon_irrelevant(rel: &GradedMatrix) -> GradedMatrix {
    let ring = rel.ring();
    let n = ring.num_vars;
    let f0 = rel.target().clone();
    let r = f0.rank();
    let mut target = FreeModule::zero();
    for _ in 0..n {
        target = target.direct_sum(&f0);
    }
    let f = &ring.field;
    let mut cols = Vec::with_capacity(r + n * rel.ncols());
    for j in 0..r {
        let mut v = Vector::zero();
        for i in 0..n {
            v = v.add(f, &Vector::from_poly(&Polynomial::var(i), i * r + j));
        }
        cols.push(v);
    }
    for i in 0..n {
        for c in rel.columns() {
            cols.push(c.shift_components(i * r));
        }
    }
    let big = GradedMatrix::from_columns(ring, target, cols).expect("homogeneous");
    let syz = syzygy_module(&big);
    let top = syz.row_block(0, r);
    GradedMatrix::from_columns(ring, f0, top.columns().to_vec()).expect("block of a syzygy")
}

/// `M / H^0_m(M)`, minimally presented.
pub fn strip_finite_torsion(m: &ModulePresentation) -> ModulePresentation {
    let mut rel = m.minimal().relations().clone();
    if rel.nrows() == 0 {
        return ModulePresentation::cokernel(&rel);
    }
    loop {
        let c = colon_irrelevant(&rel);
        if ops::image_contained(&c, &rel) {
            break;
        }
        rel = ops::minimal_generators(&rel.concat(&c));
    }
    ModulePresentation::cokernel(&rel).minimal()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torsion_is_removed() {
        let r = RingContext::p3();
        let k = ModulePresentation::quotient_ring(&Ideal::irrelevant(&r));
        let s = ModulePresentation::free(&r, FreeModule::free(1));
        let e = SheafModule::new(&s.direct_sum(&k));
        assert_eq!(e.module().num_generators(), 1);
        assert!(e.is_dissocie());
        assert_eq!(e.rank(), 1);
        // (x0, x1^2, x0x1 ...) : m^inf
        let i = Ideal::parse(&r, &["x0^2", "x0*x1", "x0*x2", "x0*x3", "x1^2"]).unwrap();
        let q = SheafModule::new(&ModulePresentation::quotient_ring(&i));
        let sat = Ideal::parse(&r, &["x0", "x1^2"]).unwrap();
        for n in 0..6 {
            assert_eq!(q.module().hilbert_function(n), sat.hilbert_function(n));
        }
    }

    #[test]
    fn ranks() {
        let r = RingContext::p3();
        let line = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        assert_eq!(SheafModule::from_ideal(&line, 0).rank(), 1);
        let t = SheafModule::new(&ModulePresentation::quotient_ring(&line));
        assert_eq!(t.rank(), 0);
        let f = SheafModule::free(&r, FreeModule::new(vec![0, -1, 2]));
        assert_eq!(f.rank(), 3);
        assert_eq!(f.dual().module().free_cover().degrees().len(), 3);
    }
}
