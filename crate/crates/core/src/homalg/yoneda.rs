//! Extensions by free modules from Ext¹ cocycles.

use super::resolution::FreeResolution;
use crate::error::{Error, Result};
use crate::modgb::{ops, syzygy_module, FreeModule, GbOptions, GradedMatrix, ModulePresentation};

/// `0 -> L -> E -> A -> 0` with `E = coker([-c; d1])` on `L ⊕ F0`.
#[derive(Clone, Debug)]
pub struct Extension {
    pub module: ModulePresentation,
    pub kernel: FreeModule,
    /// The cocycle `c: F1 -> L`.
    pub cocycle: GradedMatrix,
}

impl Extension {
    /// Number of generators coming from `L` (they come first in the cover).
    pub fn kernel_rank(&self) -> usize {
        self.kernel.rank()
    }
}

/// A minimal system of generators of `Ext¹(A, S)` as cocycles, ordered by
/// degree and then by discovery order.  Returns `c: F1 -> L` whose rows
/// are the cocycles.
pub fn ext1_cocycles(res: &FreeResolution) -> GradedMatrix {
    let ring = res.ring();
    let f1 = res.free_module(1);
    if f1.rank() == 0 {
        return GradedMatrix::zero(ring, FreeModule::zero(), f1);
    }
    let d1t = res.differential(1).transpose();
    let d2t = if res.differentials().len() >= 2 {
        res.differential(2).transpose()
    } else {
        GradedMatrix::zero(ring, FreeModule::zero(), f1.dual())
    };
    let cycles = syzygy_module(&d2t);
    let all = d1t.concat(&cycles);
    let gb = ops::column_gb(&all, &GbOptions::default());
    let off = d1t.ncols();
    let mut kept: Vec<usize> = gb
        .minimal_generators()
        .iter()
        .filter(|&&j| j >= off)
        .map(|&j| j - off)
        .collect();
    kept.sort_by_key(|&j| (-cycles.source().twists()[j], j));
    cycles.select_columns(&kept).transpose()
}

/// Builds the extension of `A = coker(d1)` by the cocycle `c: F1 -> L`.
pub fn yoneda_extension(res: &FreeResolution, c: &GradedMatrix) -> Result<Extension> {
    let ring = res.ring();
    let f1 = res.free_module(1);
    if c.source() != &f1 {
        return Err(Error::NotACocycle("cocycle source differs from F1".into()));
    }
    if res.differentials().len() >= 2 && !c.compose(res.differential(2)).is_zero_in_ring() {
        return Err(Error::NotACocycle("c ∘ d2 is nonzero".into()));
    }
    let d1 = if res.differentials().is_empty() {
        GradedMatrix::zero(ring, res.free_module(0), FreeModule::zero())
    } else {
        res.differential(1).clone()
    };
    let rel = c.negate().stack(&d1);
    Ok(Extension {
        module: ModulePresentation::cokernel(&rel),
        kernel: c.target().clone(),
        cocycle: c.clone(),
    })
}
