//! Modules with chosen sections, extraverti modules and N-type resolutions.

use crate::error::{Error, Result};
use crate::homalg::{ext1_cocycles, ext_module, minimal_free_resolution, yoneda_extension};
use crate::modgb::{syzygy_module, FreeModule, GradedMatrix, ModulePresentation, Vector};
use crate::sheafcoh::{check_condition_t, generic_rank, module_to_ideal, CurveIdeal, SheafModule};

/// `coker(rel)` further divided by the given elements of the free cover.
pub fn quotient_by(m: &ModulePresentation, sections: &[Vector]) -> ModulePresentation {
    if sections.is_empty() {
        return m.clone();
    }
    let s = section_matrix(m, sections);
    ModulePresentation::cokernel(&m.relations().concat(&s))
}

/// The map `⊕ S(-deg s_i) -> F0` given by the sections.
pub fn section_matrix(m: &ModulePresentation, sections: &[Vector]) -> GradedMatrix {
    GradedMatrix::from_columns(m.ring(), m.free_cover().clone(), sections.to_vec()).expect("homogeneous sections")
}

/// Degree of an element of the free cover of `m`.
pub fn element_degree(m: &ModulePresentation, v: &Vector) -> Option<i32> {
    v.degree(&m.free_cover().degrees())
}

/// `0 -> ⊕ S(-a_i) -> E -> I_V(a) -> 0` with the `a_i` sorted ascending.
#[derive(Clone, Debug)]
pub struct SectionSequence {
    pub module: ModulePresentation,
    pub sections: Vec<Vector>,
    pub degrees: Vec<i32>,
    pub curve: CurveIdeal,
    pub twist: i32,
}

/// An N-type resolution is a section sequence whose module is extraverti.
pub type NTypeResolution = SectionSequence;

impl SectionSequence {
    /// Sorts the sections and identifies the quotient as `I_V(a)`.
    pub fn new(module: ModulePresentation, sections: Vec<Vector>) -> Result<Self> {
        let (sections, degrees) = sort_sections(&module, sections)?;
        let q = SheafModule::new(&quotient_by(&module, &sections));
        let (curve, twist) = module_to_ideal(&q)?;
        let s = SectionSequence {
            module,
            sections,
            degrees,
            curve,
            twist,
        };
        if generic_rank(&s.module) != s.sections.len() + 1 {
            return Err(Error::InvalidArgument("sections are not independent".into()));
        }
        Ok(s)
    }

    /// Number of sections `r`; the module has rank `r + 1`.
    pub fn len(&self) -> usize {
        self.sections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sections.is_empty()
    }

    /// `⊕ S(-a_i)`.
    pub fn kernel(&self) -> FreeModule {
        FreeModule::new(self.degrees.iter().map(|d| -d).collect())
    }

    /// The sections define an injective map.
    pub fn is_exact(&self) -> bool {
        if self.sections.is_empty() {
            return true;
        }
        let r = self.sections.len();
        let s = section_matrix(&self.module, &self.sections);
        let syz = syzygy_module(&s.concat(self.module.relations()));
        syz.row_block(0, r).is_zero_in_ring()
    }
}

fn sort_sections(m: &ModulePresentation, sections: Vec<Vector>) -> Result<(Vec<Vector>, Vec<i32>)> {
    let mut tagged = Vec::with_capacity(sections.len());
    for (i, s) in sections.into_iter().enumerate() {
        let d = element_degree(m, &s).ok_or_else(|| Error::InvalidArgument(format!("section {i} is zero or not homogeneous")))?;
        tagged.push((d, i, s));
    }
    tagged.sort_by_key(|(d, i, _)| (*d, *i));
    let degrees = tagged.iter().map(|t| t.0).collect();
    Ok((tagged.into_iter().map(|t| t.2).collect(), degrees))
}

/// `0 -> L -> F -> E -> 0` killing `Ext^1(E, S)`.
#[derive(Clone, Debug)]
pub struct Extraverti {
    /// `F`, minimally presented.
    pub module: ModulePresentation,
    /// Images of the basis of `L`, sorted by degree.
    pub sections: Vec<Vector>,
    /// `F0(F) -> F0(E)`.
    pub projection: GradedMatrix,
}

/// The extension of `E` by the minimal generators of `Ext^1(E, S)`.
pub fn build_extraverti(e: &SheafModule) -> Result<Extraverti> {
    let rep = check_condition_t(e);
    if !rep.passes() {
        return Err(Error::ConditionTFailed(rep.failures()));
    }
    let ring = e.ring();
    let res = minimal_free_resolution(e.module(), ring.num_vars + 1)?;
    let c = ext1_cocycles(&res);
    let r = c.nrows();
    let e_cover = res.free_module(0);
    let (module, sections, projection) = if r == 0 {
        let m = res.resolved().clone();
        let id = GradedMatrix::identity(ring, &e_cover);
        (m, Vec::new(), id)
    } else {
        let ext = yoneda_extension(&res, &c)?;
        let pruned = ext.module.prune();
        let sections: Vec<Vector> = (0..r).map(|i| pruned.old_to_new.column(i).clone()).collect();
        let cols: Vec<Vector> = pruned
            .kept
            .iter()
            .map(|&old| if old < r { Vector::zero() } else { Vector::unit(old - r) })
            .collect();
        let proj = GradedMatrix::new(ring, e_cover, pruned.module.free_cover().clone(), cols).expect("degree 0");
        (pruned.module, sections, proj)
    };
    if !ext_module(&module, 1, 0)?.is_zero() {
        return Err(Error::NotExtraverti("Ext^1(F, S) does not vanish".into()));
    }
    Ok(Extraverti {
        module,
        sections,
        projection,
    })
}

/// `0 -> ⊕ S(-a_i) -> N -> I_C(a) -> 0` with `N` extraverti.
pub fn n_type_resolution(c: &CurveIdeal, a: i32) -> Result<NTypeResolution> {
    if c.is_empty() {
        return Err(Error::InvalidCurve("the empty scheme has no N-type resolution".into()));
    }
    let x = build_extraverti(&c.sheaf(a))?;
    let (sections, degrees) = sort_sections(&x.module, x.sections)?;
    Ok(SectionSequence {
        module: x.module,
        sections,
        degrees,
        curve: c.clone(),
        twist: a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgb::Ideal;
    use crate::ring::RingContext;
    use crate::sheafcoh::h1_star;

    fn curve(gens: &[&str]) -> CurveIdeal {
        CurveIdeal::new(Ideal::parse(&RingContext::p3(), gens).unwrap()).unwrap()
    }

    #[test]
    fn line_and_ci_give_dissocie() {
        let nt = n_type_resolution(&curve(&["x0", "x1"]), 0).unwrap();
        assert_eq!(nt.module.relations().ncols(), 0);
        assert_eq!(nt.module.free_cover().twists(), &[-1, -1]);
        assert_eq!(nt.degrees, vec![2]);
        assert!(nt.is_exact());
        let ci = n_type_resolution(&curve(&["x0^2 + x1*x2", "x3^3 + x0*x1*x2"]), 0).unwrap();
        assert_eq!(ci.module.relations().ncols(), 0);
        assert_eq!(ci.degrees, vec![5]);
    }

    #[test]
    fn skew_lines() {
        let c = curve(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        let nt = n_type_resolution(&c, 0).unwrap();
        assert!(nt.is_exact());
        let check = SectionSequence::new(nt.module.clone(), nt.sections.clone()).unwrap();
        assert!(check.curve == c);
        assert_eq!(check.twist, 0);
        let n = SheafModule::new(&nt.module);
        assert_eq!(n.rank(), nt.len() + 1);
        assert!(check_condition_t(&n).passes());
        let m = h1_star(&n).unwrap();
        assert_eq!((m.total_dim(), m.dim(0)), (1, 1));
    }
}
