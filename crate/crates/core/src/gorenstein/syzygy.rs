//! Syzygy sheaves, canonical duals and the maximal Cohen–Macaulay test.

use crate::error::{Error, Result};
use crate::homalg::{ext_from_resolution, hom_presentation, minimal_free_resolution, over_ambient, FiniteLengthModule, IsoResult};
use crate::modgb::{FreeModule, ModulePresentation};
use crate::sheafcoh::{h1_star, SheafModule};

const ISO_SEED: u64 = 0x3b1e_55a1;

/// Resolution length `k` over a hypersurface, the full resolution otherwise.
pub(crate) fn resolve(m: &ModulePresentation, k: usize) -> Result<crate::homalg::FreeResolution> {
    let cap = if m.ring().is_quotient() { k } else { m.ring().num_vars + 1 };
    minimal_free_resolution(m, cap)
}

/// `Hom(M, ω)` with `ω = R(canonical_twist)`.
pub fn canonical_dual(m: &ModulePresentation) -> ModulePresentation {
    let ring = m.ring();
    let omega = ModulePresentation::free(ring, FreeModule::new(vec![ring.canonical_twist]));
    hom_presentation(m, &omega)
}

/// `depth P = dim R`, read off `Ext^i_T(P, T)` over the ambient ring `T`:
/// only `i = codim R` may be nonzero.
pub fn is_mcm(p: &ModulePresentation) -> bool {
    let ring = p.ring();
    let e = usize::from(ring.is_quotient());
    let amb = over_ambient(p);
    let n = amb.ring().num_vars;
    let Ok(res) = minimal_free_resolution(&amb, n + 1) else {
        return false;
    };
    (0..=n)
        .filter(|&i| i != e)
        .all(|i| ext_from_resolution(&res, i, 0).map(|x| x.is_zero()).unwrap_or(false))
}

/// `E` in `0 -> E -> L1 -> L0 -> M -> 0`, checked to have `H^1_*(E) ≅ M`.
pub fn second_syzygy_sheaf(m: &FiniteLengthModule) -> Result<SheafModule> {
    let ring = m.ring();
    if ring.is_quotient() && ring.num_vars != 5 {
        return Err(Error::UnsupportedRing(format!(
            "hypersurface rings in {} variables are not supported",
            ring.num_vars
        )));
    }
    if !ring.is_quotient() && ring.num_vars != 4 {
        return Err(Error::UnsupportedRing(format!("polynomial ring in {} variables", ring.num_vars)));
    }
    if m.is_zero() {
        return Ok(SheafModule::free(ring, FreeModule::zero()));
    }
    let res = resolve(m.presentation(), 2)?;
    if res.differentials().len() < 2 {
        return Err(Error::InvalidArgument("finite-length module with a free first syzygy".into()));
    }
    let e = SheafModule::new(&ModulePresentation::image(res.differential(2)));
    let h1 = h1_star(&e)?;
    if m.iso_up_to_shift(&h1, ISO_SEED) != IsoResult::Equivalent(0) {
        return Err(Error::InvalidArgument("H^1_* of the syzygy sheaf differs from M".into()));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgb::Ideal;
    use crate::ring::RingContext;

    fn residue_field(r: &RingContext) -> FiniteLengthModule {
        FiniteLengthModule::from_presentation(&ModulePresentation::quotient_ring(&Ideal::irrelevant(r))).unwrap()
    }

    #[test]
    fn mcm_examples() {
        let q = RingContext::quadric_threefold();
        assert!(is_mcm(&ModulePresentation::free(&q, FreeModule::new(vec![0, -1]))));
        assert!(!is_mcm(&ModulePresentation::quotient_ring(&Ideal::irrelevant(&q))));
        let line = Ideal::parse(&q, &["x0", "x2", "x4"]).unwrap();
        assert!(!is_mcm(&ModulePresentation::quotient_ring(&line)));
        let p3 = RingContext::p3();
        assert!(is_mcm(&ModulePresentation::free(&p3, FreeModule::free(2))));
        let i = Ideal::parse(&p3, &["x0", "x1"]).unwrap();
        assert!(!is_mcm(&ModulePresentation::of_ideal(&i)));
    }

    #[test]
    fn syzygy_sheaf_of_k() {
        let p3 = RingContext::p3();
        let e = second_syzygy_sheaf(&residue_field(&p3)).unwrap();
        assert_eq!(e.rank(), 3);
        let h = h1_star(&e).unwrap();
        assert_eq!((h.total_dim(), h.dim(0)), (1, 1));
        let q = RingContext::quadric_threefold();
        let e = second_syzygy_sheaf(&residue_field(&q)).unwrap();
        let h = h1_star(&e).unwrap();
        assert_eq!((h.total_dim(), h.dim(0)), (1, 1));
        let z = second_syzygy_sheaf(&FiniteLengthModule::zero(&p3)).unwrap();
        assert!(z.is_dissocie());
    }
}
