//! Subquotients, homology, graded Hom and Ext.

use super::resolution::{minimal_free_resolution, FreeResolution};
use crate::error::{Error, Result};
use crate::modgb::{syzygy_module, FreeModule, GradedMatrix, ModulePresentation, Vector};

/// `(im gens + im rels) / im rels`, presented on the columns of `gens`.
pub fn subquotient(gens: &GradedMatrix, rels: &GradedMatrix) -> ModulePresentation {
    let k = gens.ncols();
    let syz = syzygy_module(&gens.concat(rels));
    ModulePresentation::cokernel(&syz.row_block(0, k))
}

/// Homology `ker g / im f` of `A -f-> B -g-> C` (requires `g ∘ f = 0`).
///
/// Returns the pruned presentation together with the kernel generators it
/// is presented on (columns in `B`).
pub fn homology(f: &GradedMatrix, g: &GradedMatrix) -> (ModulePresentation, GradedMatrix) {
    debug_assert!(g.compose(f).is_zero_in_ring(), "not a complex");
    let ker = syzygy_module(g);
    (subquotient(&ker, f), ker)
}

fn kron_index(j: usize, i: usize, rows: usize) -> usize {
    j * rows + i
}

/// `Hom(F, G)` with basis `e_j^* ⊗ g_i` at index `j * rank G + i`.
pub fn hom_free(f: &FreeModule, g: &FreeModule) -> FreeModule {
    let mut tw = Vec::with_capacity(f.rank() * g.rank());
    for &fj in f.twists() {
        for &gi in g.twists() {
            tw.push(gi - fj);
        }
    }
    FreeModule::new(tw)
}

/// `h ↦ h ∘ phi : Hom(F0, G) -> Hom(F1, G)` for `phi: F1 -> F0`.
pub fn precompose(phi: &GradedMatrix, g: &FreeModule) -> GradedMatrix {
    let ring = phi.ring();
    let fld = &ring.field;
    let (n0, n1, r) = (phi.nrows(), phi.ncols(), g.rank());
    let rows = phi.rows();
    let mut cols = Vec::with_capacity(n0 * r);
    for j in 0..n0 {
        for i in 0..r {
            let mut terms = Vec::new();
            for k in 0..n1 {
                for &(m, c) in rows[j][k].terms() {
                    terms.push(crate::modgb::Term {
                        mon: m,
                        comp: kron_index(k, i, r) as u32,
                        coef: c,
                    });
                }
            }
            cols.push(Vector::from_terms(fld, terms));
        }
    }
    GradedMatrix::new(ring, hom_free(phi.source(), g), hom_free(phi.target(), g), cols)
        .expect("degrees are consistent")
}

/// `h ↦ psi ∘ h : Hom(F, G1) -> Hom(F, G0)` for `psi: G1 -> G0`.
pub fn postcompose(psi: &GradedMatrix, f: &FreeModule) -> GradedMatrix {
    let ring = psi.ring();
    let (g0, g1) = (psi.nrows(), psi.ncols());
    let mut cols = Vec::with_capacity(f.rank() * g1);
    for j in 0..f.rank() {
        for l in 0..g1 {
            // column j of the result becomes column l of psi
            cols.push(psi.column(l).shift_components(j * g0));
        }
    }
    GradedMatrix::new(ring, hom_free(f, psi.target()), hom_free(f, psi.source()), cols)
        .expect("degrees are consistent")
}

/// Presentation of the graded module `Hom(A, B)`, along with the
/// generators as maps `F0(A) -> G0(B)` (columns in `Hom(F0, G0)`).
pub fn hom_presentation_with_maps(
    a: &ModulePresentation,
    b: &ModulePresentation,
) -> (ModulePresentation, GradedMatrix) {
    let phi = a.relations();
    let psi = b.relations();
    let f0 = a.free_cover();
    let big_phi = precompose(phi, b.free_cover());
    let q1 = postcompose(psi, phi.source());
    let q0 = postcompose(psi, f0);
    let k = syzygy_module(&big_phi.concat(&q1));
    let k0 = crate::modgb::minimal_generators(&k.row_block(0, big_phi.ncols()));
    let pres = subquotient(&k0, &q0);
    (pres, k0)
}

/// Presentation of `Hom(A, B)`.
pub fn hom_presentation(a: &ModulePresentation, b: &ModulePresentation) -> ModulePresentation {
    hom_presentation_with_maps(a, b).0.minimal()
}

/// `Ext^i(A, S(t))` computed from a resolution of `A`.
pub fn ext_from_resolution(res: &FreeResolution, i: usize, t: i32) -> Result<ModulePresentation> {
    let ring = res.ring();
    let needed = i + 1;
    if !res.is_complete() && res.differentials().len() < needed {
        return Err(Error::CapExceeded(res.differentials().len()));
    }
    let fi = res.free_module(i).dual().shift(t);
    // incoming: F_{i-1}^* -> F_i^*, outgoing: F_i^* -> F_{i+1}^*
    let incoming = if i == 0 || i > res.differentials().len() {
        GradedMatrix::zero(ring, fi.clone(), FreeModule::zero())
    } else {
        res.differential(i).transpose_into(t)
    };
    let outgoing = if i < res.differentials().len() {
        res.differential(i + 1).transpose_into(t)
    } else {
        GradedMatrix::zero(ring, FreeModule::zero(), fi.clone())
    };
    Ok(homology(&incoming, &outgoing).0.minimal())
}

/// `Ext^i(A, S(t))`; over quotient rings the resolution is capped at `i + 1`.
pub fn ext_module(a: &ModulePresentation, i: usize, t: i32) -> Result<ModulePresentation> {
    let cap = if a.ring().is_quotient() { i + 1 } else { a.ring().num_vars + 1 };
    let res = minimal_free_resolution(a, cap)?;
    ext_from_resolution(&res, i, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgb::Ideal;
    use crate::ring::RingContext;

    #[test]
    fn hom_examples() {
        let r = RingContext::p3();
        // Hom(S(-2), B) = B(2)
        let b = ModulePresentation::quotient_ring(&Ideal::parse(&r, &["x0", "x1"]).unwrap());
        let a = ModulePresentation::free(&r, FreeModule::new(vec![-2]));
        let h = hom_presentation(&a, &b);
        for n in -3..4 {
            assert_eq!(h.hilbert_function(n), b.hilbert_function(n + 2));
        }
        // Hom(S/(x0), S) = 0
        let t = ModulePresentation::quotient_ring(&Ideal::parse(&r, &["x0"]).unwrap());
        let s = ModulePresentation::free(&r, FreeModule::free(1));
        assert!(hom_presentation(&t, &s).is_zero());
        // Hom(S/(x0), S/(x0)) = S/(x0)
        let e = hom_presentation(&t, &t);
        for n in 0..5 {
            assert_eq!(e.hilbert_function(n), t.hilbert_function(n));
        }
    }

    #[test]
    fn ext_examples() {
        let r = RingContext::p3();
        let s = ModulePresentation::free(&r, FreeModule::free(1));
        assert!(ext_module(&s, 1, 0).unwrap().is_zero());
        let k = ModulePresentation::quotient_ring(&Ideal::irrelevant(&r));
        let e4 = ext_module(&k, 4, 0).unwrap();
        assert_eq!(e4.hilbert_function(-4), 1);
        assert_eq!((-10..10).map(|n| e4.hilbert_function(n)).sum::<usize>(), 1);
        for i in 0..4 {
            assert!(ext_module(&k, i, 0).unwrap().is_zero(), "Ext^{i}(k,S)");
        }
        let line = ModulePresentation::of_ideal(&Ideal::parse(&r, &["x0", "x1"]).unwrap());
        assert!(ext_module(&line, 2, 0).unwrap().is_zero());
        let e1 = ext_module(&line, 1, 0).unwrap();
        // Ext^1(I, S) = Ext^2(S/I, S) = (S/I)(2)
        assert_eq!(e1.hilbert_function(-2), 1);
        assert_eq!(e1.hilbert_function(0), 3);
    }
}
