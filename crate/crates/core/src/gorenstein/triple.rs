//! The triple `(M, P, α)` of an extraverti module over a hypersurface ring,
//! and the module realizing a given triple.

use super::syzygy::{canonical_dual, is_mcm, resolve};
use crate::error::{Error, Result};
use crate::homalg::{ext_module, homology, subquotient, FiniteLengthModule, IsoResult};
use crate::liaison::kernel_generators;
use crate::modgb::{ops, FreeModule, GradedMatrix, ModulePresentation};
use crate::sheafcoh::{h1_star, SheafModule};

const ISO_SEED: u64 = 0x7219_e0c4;

/// `0 -> P -> L1 -> L0 -> E -> 0` and its canonical dual
/// `L1^∨ -> P^∨ -α-> M* -> 0`.
#[derive(Clone, Debug)]
pub struct GorensteinTriple {
    /// `H^1_*(E)`.
    pub m: FiniteLengthModule,
    /// `M* = Ext^2(E, ω)`, presented on the generators of `P^∨`.
    pub m_dual: ModulePresentation,
    /// Minimal presentation of `P`.
    pub p: ModulePresentation,
    /// `Hom(P, ω)`.
    pub p_dual: ModulePresentation,
    /// `F0(P^∨) -> F0(M*)`.
    pub alpha: GradedMatrix,
    pub l0: FreeModule,
    pub l1: FreeModule,
}

impl GorensteinTriple {
    /// `P` has no relations after minimalization.
    pub fn p_is_free(&self) -> bool {
        self.p.relations().ncols() == 0
    }

    /// `coker α = 0`.
    pub fn alpha_surjective(&self) -> bool {
        alpha_onto(&self.alpha, &self.m_dual)
    }
}

fn alpha_onto(alpha: &GradedMatrix, target: &ModulePresentation) -> bool {
    ops::image_contained(
        &GradedMatrix::identity(target.ring(), target.free_cover()),
        &alpha.concat(target.relations()),
    )
}

/// Reads the triple off two syzygy steps of `E` over its ring.
pub fn mcm_triple(e: &SheafModule) -> Result<GorensteinTriple> {
    let ring = e.ring();
    let w = ring.canonical_twist;
    if !ext_module(e.module(), 1, 0)?.is_zero() {
        return Err(Error::NotExtraverti("Ext^1(E, R) does not vanish".into()));
    }
    let res = resolve(e.module(), 3)?;
    let d = res.differentials();
    let l0 = res.free_module(0);
    let l1 = res.free_module(1);
    let l2 = res.free_module(2);
    let p = match d.get(2) {
        Some(d3) => ModulePresentation::cokernel(d3),
        None => ModulePresentation::free(ring, l2.clone()),
    };
    let l2_dual = l2.dual().shift(w);
    let (m_dual, kernel) = match (d.get(1), d.get(2)) {
        (Some(d2), Some(d3)) => homology(&d2.transpose_into(w), &d3.transpose_into(w)),
        (Some(d2), None) => {
            let id = GradedMatrix::identity(ring, &l2_dual);
            (subquotient(&id, &d2.transpose_into(w)), id)
        }
        _ => {
            let id = GradedMatrix::identity(ring, &l2_dual);
            (ModulePresentation::free(ring, FreeModule::zero()), id)
        }
    };
    let p_dual = ModulePresentation::image(&kernel);
    let alpha = GradedMatrix::identity(ring, kernel.source());
    let alpha = if m_dual.num_generators() == 0 {
        GradedMatrix::zero(ring, FreeModule::zero(), kernel.source().clone())
    } else {
        alpha
    };
    let p = p.minimal();
    if !is_mcm(&p) {
        return Err(Error::NotMCM);
    }
    let m = h1_star(e)?;
    let md = FiniteLengthModule::from_presentation(&m_dual)?;
    if m.graded_dual().iso_up_to_shift(&md, ISO_SEED) != IsoResult::Equivalent(0) {
        return Err(Error::InvalidArgument("Ext^2(E, ω) is not the dual of H^1_*(E)".into()));
    }
    Ok(GorensteinTriple {
        m,
        m_dual,
        p,
        p_dual,
        alpha,
        l0,
        l1,
    })
}

/// `E = E'^∨` for `0 -> E' -> L1' -> L0' -> ker α -> 0`.
pub fn realize_triple(t: &GorensteinTriple) -> Result<SheafModule> {
    let ring = t.p.ring();
    if !is_mcm(&t.p) {
        return Err(Error::NotMCM);
    }
    if !alpha_onto(&t.alpha, &t.m_dual) {
        return Err(Error::AlphaNotSurjective);
    }
    let gens = kernel_generators(&t.alpha, &t.p_dual, &t.m_dual);
    if gens.is_empty() {
        return Ok(SheafModule::free(ring, FreeModule::zero()));
    }
    let k = GradedMatrix::from_columns(ring, t.p_dual.free_cover().clone(), gens)?;
    let kmod = subquotient(&k, t.p_dual.relations());
    let res = resolve(&kmod, 2)?;
    let e_prime = match res.differentials().get(1) {
        Some(d2) => ModulePresentation::image(d2),
        None => return Ok(SheafModule::free(ring, FreeModule::zero())),
    };
    Ok(SheafModule::new(&canonical_dual(&e_prime)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gorenstein::{second_syzygy_sheaf, stably_equivalent, StableDecision};
    use crate::liaison::build_extraverti;
    use crate::modgb::Ideal;
    use crate::ring::RingContext;

    fn residue_field(r: &RingContext) -> FiniteLengthModule {
        FiniteLengthModule::from_presentation(&ModulePresentation::quotient_ring(&Ideal::irrelevant(r))).unwrap()
    }

    #[test]
    fn free_input() {
        let q = RingContext::quadric_threefold();
        let e = SheafModule::free(&q, FreeModule::new(vec![0, 1]));
        let t = mcm_triple(&e).unwrap();
        assert!(t.m.is_zero() && t.p_is_free() && t.alpha_surjective());
        let back = realize_triple(&t).unwrap();
        assert!(back.is_dissocie());
    }

    #[test]
    fn residue_field_on_the_quadric() {
        let q = RingContext::quadric_threefold();
        let e = second_syzygy_sheaf(&residue_field(&q)).unwrap();
        let t = mcm_triple(&e).unwrap();
        assert_eq!(t.m.total_dim(), 1);
        assert!(t.alpha_surjective());
        assert!(is_mcm(&t.p));
        let back = realize_triple(&t).unwrap();
        assert_eq!(stably_equivalent(back.module(), e.module(), 1), StableDecision::Equivalent);
    }

    #[test]
    fn skew_lines_in_p3() {
        let r = RingContext::p3();
        let c = Ideal::parse(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]).unwrap();
        let x = build_extraverti(&SheafModule::from_ideal(&c, 0)).unwrap();
        let e = SheafModule::new(&x.module);
        let t = mcm_triple(&e).unwrap();
        assert!(t.p_is_free());
        assert_eq!(t.m.total_dim(), 1);
        let back = realize_triple(&t).unwrap();
        assert_eq!(stably_equivalent(back.module(), e.module(), 2), StableDecision::Equivalent);
    }

    #[test]
    fn line_on_the_quadric() {
        let q = RingContext::quadric_threefold();
        let line = Ideal::parse(&q, &["x0", "x2", "x4"]).unwrap();
        let x = build_extraverti(&SheafModule::from_ideal(&line, 0)).unwrap();
        let t = mcm_triple(&SheafModule::new(&x.module)).unwrap();
        assert!(t.m.is_zero());
        assert!(is_mcm(&t.p));
        assert!(!t.p_is_free());
    }

    #[test]
    fn non_surjective_alpha() {
        let q = RingContext::quadric_threefold();
        let e = second_syzygy_sheaf(&residue_field(&q)).unwrap();
        let mut t = mcm_triple(&e).unwrap();
        t.alpha = GradedMatrix::zero(&q, t.alpha.target().clone(), t.alpha.source().clone());
        assert!(matches!(realize_triple(&t), Err(Error::AlphaNotSurjective)));
    }
}
