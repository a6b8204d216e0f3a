//! Codimension-2 subschemes and the passage between rank-1 modules and
//! their ideals.

use super::condition::check_condition_t;
use super::module::SheafModule;
use crate::error::{Error, Result};
use crate::homalg::{ext_module, hilbert_polynomial, over_ambient, HilbertPolynomial};
use crate::modgb::{syzygy_module, Ideal, ModulePresentation, Vector};
use crate::ring::{Polynomial, RingContext};

/// A saturated, unmixed ideal of height 2, or the unit ideal for the
/// empty scheme.
#[derive(Clone, Debug)]
pub struct CurveIdeal {
    ideal: Ideal,
    degree: i64,
    genus: i64,
    empty: bool,
}

impl CurveIdeal {
    /// Validates `ideal` as given.
    pub fn new(ideal: Ideal) -> Result<Self> {
        if ideal.is_unit() {
            return Ok(Self::empty(ideal.ring()));
        }
        if !ideal.is_saturated() {
            return Err(Error::InvalidCurve("ideal is not saturated".into()));
        }
        let cert = unmixed_check(&ideal).map_err(|e| Error::InvalidCurve(e.to_string()))?;
        if !cert.unmixed {
            return Err(Error::InvalidCurve("ideal has embedded or lower-dimensional components".into()));
        }
        let hp = hilbert_polynomial(&ModulePresentation::quotient_ring(&ideal));
        let (degree, genus) = hp
            .curve_invariants()
            .ok_or_else(|| Error::InvalidCurve(format!("Hilbert polynomial {hp} is not linear")))?;
        Ok(CurveIdeal {
            ideal: ideal.minimalize(),
            degree,
            genus,
            empty: false,
        })
    }

    /// Saturates first.
    pub fn from_saturation(ideal: &Ideal) -> Result<Self> {
        Self::new(ideal.saturate())
    }

    pub fn empty(ring: &RingContext) -> Self {
        CurveIdeal {
            ideal: Ideal::unit(ring),
            degree: 0,
            genus: 1,
            empty: true,
        }
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ring(&self) -> &RingContext {
        self.ideal.ring()
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn is_empty(&self) -> bool {
        self.empty
    }

    pub fn hilbert_polynomial(&self) -> HilbertPolynomial {
        hilbert_polynomial(&ModulePresentation::quotient_ring(&self.ideal))
    }

    /// The module `I(n)`.
    pub fn sheaf(&self, n: i32) -> SheafModule {
        SheafModule::from_ideal(&self.ideal, n)
    }
}

impl PartialEq for CurveIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ideal == other.ideal
    }
}

/// Result of comparing an ideal with its equidimensional hull.
#[derive(Clone, Debug)]
pub struct UnmixedCertificate {
    pub unmixed: bool,
    /// `ann Ext^c_P(P/I, P)` with `c` the codimension of `I` in `P`.
    pub hull: Ideal,
}

/// Unmixedness of a height-2 ideal through `I = ann Ext^c(P/I, P)`.
pub fn unmixed_check(i: &Ideal) -> Result<UnmixedCertificate> {
    let h = i.height();
    if h != 2 {
        return Err(Error::WrongHeight { expected: 2, found: h });
    }
    let ring = i.ring();
    let c = 2 + usize::from(ring.is_quotient());
    let amb = over_ambient(&ModulePresentation::quotient_ring(i));
    let ext = ext_module(&amb, c, 0)?;
    let ann = ext.annihilator();
    let hull = Ideal::new(ring, ann.gens().to_vec())?;
    Ok(UnmixedCertificate {
        unmixed: hull.is_subset(i),
        hull,
    })
}

/// `E ≅ I_V(n)` for a rank-1 module satisfying T; returns `(V, n)`.
pub fn module_to_ideal(e: &SheafModule) -> Result<(CurveIdeal, i32)> {
    if e.rank() != 1 {
        return Err(Error::NotRankOne(e.rank()));
    }
    let rep = check_condition_t(e);
    if !rep.passes() {
        return Err(Error::ConditionTFailed(rep.failures()));
    }
    let emb = embedding(e.module())?;
    Ok((CurveIdeal::from_saturation(&emb.ideal)?, emb.twist))
}

/// A generator `φ` of `Hom(E, S) ≅ S(-n)` for a rank-1 torsion-free
/// module, with its image ideal.
#[derive(Clone, Debug)]
pub struct Embedding {
    /// `φ(e_j)` for the generators `e_j` of the presentation.
    pub functional: Vec<Polynomial>,
    pub ideal: Ideal,
    pub twist: i32,
}

impl Embedding {
    /// `φ(v)` for an element of the free cover; a form of degree
    /// `deg v + twist`.
    pub fn apply(&self, ring: &RingContext, v: &Vector) -> Polynomial {
        let f = &ring.field;
        let e = v.entries(self.functional.len());
        let mut acc = Polynomial::zero();
        for (a, b) in e.iter().zip(&self.functional) {
            acc = acc.add(f, &a.mul(f, b));
        }
        ring.reduce(&acc)
    }
}

/// The embedding of `coker(rel)` into `S(n)`; the presentation need not be
/// minimal.
pub fn embedding(m: &ModulePresentation) -> Result<Embedding> {
    let ring = m.ring();
    let rel = m.relations();
    let tw = m.free_cover().twists().to_vec();
    let dual = syzygy_module(&rel.transpose_into(0));
    if dual.ncols() != 1 {
        return Err(Error::ConditionTFailed(format!(
            "Hom(E, S) needs {} generators, expected 1",
            dual.ncols()
        )));
    }
    let functional = dual.column(0).entries(tw.len());
    let twist = functional
        .iter()
        .zip(&tw)
        .find_map(|(p, &a)| p.degree().map(|d| d as i32 + a))
        .ok_or_else(|| Error::ConditionTFailed("E has no nonzero functional".into()))?;
    let ideal = Ideal::new(ring, functional.clone())?;
    Ok(Embedding { functional, ideal, twist })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgb::FreeModule;

    #[test]
    fn unmixed_examples() {
        let r = RingContext::p3();
        let line = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        assert!(unmixed_check(&line).unwrap().unmixed);
        let cubic = Ideal::parse(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]).unwrap();
        assert!(unmixed_check(&cubic).unwrap().unmixed);
        let p = Ideal::parse(&r, &["x0", "x2^2", "x3"]).unwrap();
        let cert = unmixed_check(&line.intersect(&p)).unwrap();
        assert!(!cert.unmixed);
        assert!(cert.hull == line);
        assert!(matches!(
            unmixed_check(&Ideal::parse(&r, &["x0"]).unwrap()),
            Err(Error::WrongHeight { .. })
        ));
    }

    #[test]
    fn curve_validation() {
        let r = RingContext::p3();
        let skew = CurveIdeal::new(Ideal::parse(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]).unwrap()).unwrap();
        assert_eq!((skew.degree(), skew.genus()), (2, -1));
        let bad = Ideal::parse(&r, &["x0^2", "x0*x1", "x0*x2", "x0*x3", "x1^2"]).unwrap();
        assert!(matches!(CurveIdeal::new(bad.clone()), Err(Error::InvalidCurve(_))));
        let c = CurveIdeal::from_saturation(&bad).unwrap();
        assert_eq!(c.degree(), 2);
    }

    #[test]
    fn round_trips() {
        let r = RingContext::p3();
        let line = CurveIdeal::new(Ideal::parse(&r, &["x0", "x1"]).unwrap()).unwrap();
        let (v, n) = module_to_ideal(&line.sheaf(3)).unwrap();
        assert_eq!((v == line, n), (true, 3));
        let (v, n) = module_to_ideal(&SheafModule::free(&r, FreeModule::new(vec![5]))).unwrap();
        assert!(v.is_empty());
        assert_eq!(n, 5);
        let cubic = CurveIdeal::new(Ideal::parse(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]).unwrap())
            .unwrap();
        let (v, n) = module_to_ideal(&cubic.sheaf(-1)).unwrap();
        assert!(v == cubic);
        assert_eq!(n, -1);
    }

    #[test]
    fn rank_two_is_rejected() {
        let r = RingContext::p3();
        let e = SheafModule::free(&r, FreeModule::new(vec![0, 0]));
        assert!(matches!(module_to_ideal(&e), Err(Error::NotRankOne(2))));
    }
}
