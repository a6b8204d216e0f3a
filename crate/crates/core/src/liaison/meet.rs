//! Fibered products of surjections with dissocié kernels, and free summands.

use crate::error::{Error, Result};
use crate::homalg::subquotient;
use crate::modgb::{ops, syzygy_module, FreeModule, GbOptions, GradedMatrix, ModulePresentation, Vector};

/// A degree-0 surjection `source -> target` given on free covers.
#[derive(Clone, Debug)]
pub struct Surjection {
    pub source: ModulePresentation,
    pub target: ModulePresentation,
    /// `F0(source) -> F0(target)`.
    pub map: GradedMatrix,
}

impl Surjection {
    pub fn new(source: ModulePresentation, target: ModulePresentation, map: GradedMatrix) -> Result<Self> {
        if map.source() != source.free_cover() || map.target() != target.free_cover() {
            return Err(Error::DegreeMismatch("map does not match the free covers".into()));
        }
        if !ops::image_contained(&map.compose(source.relations()), target.relations()) {
            return Err(Error::InvalidArgument("map does not respect relations".into()));
        }
        if !ops::image_contained(
            &GradedMatrix::identity(target.ring(), target.free_cover()),
            &map.concat(target.relations()),
        ) {
            return Err(Error::InvalidArgument("map is not surjective".into()));
        }
        Ok(Surjection { source, target, map })
    }

    /// Minimal generators of the kernel, as elements of the source cover.
    pub fn kernel_generators(&self) -> Vec<Vector> {
        kernel_generators(&self.map, &self.source, &self.target)
    }

    /// The kernel, checked to be free.
    pub fn dissocie_kernel(&self) -> Result<(FreeModule, Vec<Vector>)> {
        dissocie_kernel(&self.map, &self.source, &self.target)
    }
}

/// Generators of `ker(A -> B)` in `F0(A)`, minimal modulo the relations of `A`.
pub fn kernel_generators(map: &GradedMatrix, a: &ModulePresentation, b: &ModulePresentation) -> Vec<Vector> {
    let n = map.ncols();
    let syz = syzygy_module(&map.concat(b.relations()));
    let top = syz.row_block(0, n);
    let top = GradedMatrix::from_columns(map.ring(), a.free_cover().clone(), top.columns().to_vec())
        .expect("block of a syzygy");
    let rel = a.relations();
    let all = rel.concat(&top);
    let gb = ops::column_gb(&all, &GbOptions::default());
    let off = rel.ncols();
    let mut kept: Vec<usize> = gb.minimal_generators().iter().filter(|&&j| j >= off).map(|&j| j - off).collect();
    let tdeg = a.free_cover().degrees();
    kept.sort_by_key(|&j| (top.column(j).degree(&tdeg).unwrap_or(0), j));
    kept.into_iter().map(|j| top.column(j).clone()).collect()
}

/// The kernel of `A -> B` when it is free: its twists and generators.
pub fn dissocie_kernel(
    map: &GradedMatrix,
    a: &ModulePresentation,
    b: &ModulePresentation,
) -> Result<(FreeModule, Vec<Vector>)> {
    let gens = kernel_generators(map, a, b);
    if gens.is_empty() {
        return Ok((FreeModule::zero(), gens));
    }
    let g = GradedMatrix::from_columns(a.ring(), a.free_cover().clone(), gens.clone()).expect("homogeneous");
    let k = subquotient(&g, a.relations()).minimal();
    if k.relations().ncols() != 0 || k.num_generators() != gens.len() {
        return Err(Error::KernelNotDissocie(format!(
            "kernel has {} generators and {} relations",
            k.num_generators(),
            k.relations().ncols()
        )));
    }
    Ok((g.source().clone(), gens))
}

/// `F = F1 ×_E' F2` with its projections, which have dissocié kernels.
#[derive(Clone, Debug)]
pub struct Meet {
    pub module: ModulePresentation,
    pub first: Surjection,
    pub second: Surjection,
    /// Kernel of `F -> F1`, isomorphic to the kernel of `F2 -> E'`.
    pub first_kernel: FreeModule,
    pub second_kernel: FreeModule,
}

/// The fibered product of two surjections onto the same module.
pub fn psi_meet(p1: &Surjection, p2: &Surjection) -> Result<Meet> {
    if p1.target != p2.target {
        return Err(Error::InvalidArgument("surjections have different targets".into()));
    }
    p1.dissocie_kernel()?;
    p2.dissocie_kernel()?;
    let ring = p1.source.ring();
    let (n1, n2) = (p1.map.ncols(), p2.map.ncols());
    let stacked = p1.map.concat(&p2.map.negate()).concat(p1.target.relations());
    let syz = syzygy_module(&stacked);
    let cover = p1.source.free_cover().direct_sum(p2.source.free_cover());
    let gens = GradedMatrix::from_columns(ring, cover.clone(), syz.row_block(0, n1 + n2).columns().to_vec())
        .expect("block of a syzygy");
    let rels = p1.source.relations().direct_sum(p2.source.relations());
    let full = subquotient(&gens, &rels);
    let pruned = full.prune();
    let module = pruned.module;
    // new generator j is old generator kept[j], a vector in F1 ⊕ F2
    let mut c1 = Vec::with_capacity(pruned.kept.len());
    let mut c2 = Vec::with_capacity(pruned.kept.len());
    for &old in &pruned.kept {
        let v = gens.column(old);
        c1.push(v.restrict(0, n1));
        c2.push(v.restrict(n1, n1 + n2));
    }
    let m1 = GradedMatrix::new(ring, p1.source.free_cover().clone(), module.free_cover().clone(), c1)?;
    let m2 = GradedMatrix::new(ring, p2.source.free_cover().clone(), module.free_cover().clone(), c2)?;
    let first = Surjection::new(module.clone(), p1.source.clone(), m1)?;
    let second = Surjection::new(module.clone(), p2.source.clone(), m2)?;
    let (first_kernel, _) = first.dissocie_kernel()?;
    let (second_kernel, _) = second.dissocie_kernel()?;
    Ok(Meet {
        module,
        first,
        second,
        first_kernel,
        second_kernel,
    })
}

/// `M = M' ⊕ F` with `F` free and `M'` without free summands.
#[derive(Clone, Debug)]
pub struct FreeSplitting {
    pub core: ModulePresentation,
    pub free: FreeModule,
    /// The projection `M -> M'`, whose kernel is `F`.
    pub projection: Surjection,
}

/// Splits off free summands one generator at a time.
pub fn split_free_summands(m: &ModulePresentation) -> FreeSplitting {
    let ring = m.ring();
    let m = m.minimal();
    let mut cur = m.clone();
    let mut proj = GradedMatrix::identity(ring, m.free_cover());
    let mut free = Vec::new();
    loop {
        let dual = syzygy_module(&cur.relations().transpose_into(0));
        let tw = cur.free_cover().twists().to_vec();
        let hit = dual.columns().iter().find_map(|phi| {
            phi.entries(tw.len()).iter().position(|p| !p.is_zero() && p.is_constant())
        });
        let Some(j) = hit else { break };
        free.push(tw[j]);
        let keep: Vec<usize> = (0..tw.len()).filter(|&i| i != j).collect();
        let rel = cur.relations().select_rows(&keep);
        let drop = GradedMatrix::identity(ring, cur.free_cover()).select_rows(&keep);
        let next = ModulePresentation::cokernel(&rel);
        let pruned = next.prune();
        proj = pruned.old_to_new.compose(&drop).compose(&proj);
        cur = pruned.module;
    }
    let projection = Surjection {
        source: m,
        target: cur.clone(),
        map: proj,
    };
    FreeSplitting {
        core: cur,
        free: FreeModule::new(free),
        projection,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgb::Ideal;
    use crate::ring::RingContext;

    fn id(m: &ModulePresentation) -> Surjection {
        Surjection::new(m.clone(), m.clone(), GradedMatrix::identity(m.ring(), m.free_cover())).unwrap()
    }

    fn skew() -> ModulePresentation {
        let r = RingContext::p3();
        ModulePresentation::of_ideal(&Ideal::parse(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]).unwrap()).minimal()
    }

    #[test]
    fn diagonal() {
        let e = skew();
        let m = psi_meet(&id(&e), &id(&e)).unwrap();
        assert_eq!(m.module.num_generators(), e.num_generators());
        assert_eq!(m.first_kernel.rank(), 0);
        assert_eq!(m.second_kernel.rank(), 0);
    }

    #[test]
    fn one_side_trivial() {
        let r = RingContext::p3();
        let e = skew();
        let f1 = e.direct_sum(&ModulePresentation::free(&r, FreeModule::new(vec![-1])));
        let n = e.num_generators();
        let cols: Vec<Vector> = (0..=n).map(|i| if i < n { Vector::unit(i) } else { Vector::zero() }).collect();
        let map = GradedMatrix::new(&r, e.free_cover().clone(), f1.free_cover().clone(), cols).unwrap();
        let p1 = Surjection::new(f1.clone(), e.clone(), map).unwrap();
        let m = psi_meet(&p1, &id(&e)).unwrap();
        assert_eq!(m.first_kernel.rank(), 0);
        assert_eq!(m.second_kernel.twists(), &[-1]);
        assert_eq!(m.module.num_generators(), f1.num_generators());
    }

    #[test]
    fn non_free_kernel_is_rejected() {
        let r = RingContext::p3();
        let s = ModulePresentation::free(&r, FreeModule::free(1));
        let k = ModulePresentation::quotient_ring(&Ideal::irrelevant(&r));
        let p = Surjection::new(s, k.clone(), GradedMatrix::identity(&r, k.free_cover())).unwrap();
        assert!(matches!(psi_meet(&p, &id(&k)), Err(Error::KernelNotDissocie(_))));
    }

    #[test]
    fn free_summands() {
        let r = RingContext::p3();
        let e = skew();
        let m = e.direct_sum(&ModulePresentation::free(&r, FreeModule::new(vec![-2, 1])));
        let sp = split_free_summands(&m);
        let mut tw = sp.free.twists().to_vec();
        tw.sort();
        assert_eq!(tw, vec![-2, 1]);
        assert_eq!(sp.core.num_generators(), e.num_generators());
        let (k, _) = sp.projection.dissocie_kernel().unwrap();
        assert_eq!(k.rank(), 2);
    }
}
