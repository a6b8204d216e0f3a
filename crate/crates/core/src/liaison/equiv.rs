//! Biliaison classes: decisions through Rao modules, common section
//! sequences, and height-zero chains between minimal curves.

use rand::Rng;

use super::feasibility::SECTION_ATTEMPTS;
use super::meet::{dissocie_kernel, psi_meet, split_free_summands, Surjection};
use super::random::{degree_basis, random_combination, random_form};
use super::sections::{quotient_by, SectionSequence};
use super::step::{elementary_biliaison_rank2, BiliaisonStep};
use crate::error::{Error, Result};
use crate::homalg::{hom_presentation_with_maps, IsoResult};
use crate::modgb::{ops, GradedMatrix, ModulePresentation, Vector};
use crate::sheafcoh::{check_condition_t, rao_module, CurveIdeal, SheafModule};

const ISO_ATTEMPTS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassDecision {
    /// `M(C2)_{d+h} ≅ M(C1)_d`.
    Equivalent(i32),
    Inequivalent,
    Inconclusive,
}

/// Compares Rao modules up to shift; over `ℙ³` this decides the class.
pub fn same_biliaison_class(c1: &CurveIdeal, c2: &CurveIdeal, seed: u64) -> Result<ClassDecision> {
    if c1.ring().is_quotient() {
        return Err(Error::UnsupportedRing("Rao modules decide the class only over a polynomial ring".into()));
    }
    let m1 = rao_module(c1)?;
    let m2 = rao_module(c2)?;
    if m1.is_zero() && m2.is_zero() {
        return Ok(ClassDecision::Equivalent(0));
    }
    Ok(match m1.iso_up_to_shift(&m2, seed) {
        IsoResult::Equivalent(h) => ClassDecision::Equivalent(h),
        IsoResult::Inequivalent => ClassDecision::Inequivalent,
        IsoResult::Inconclusive => ClassDecision::Inconclusive,
    })
}

/// A random degree-0 map `a -> b`, as a matrix on free covers.
pub fn random_hom<R: Rng>(a: &ModulePresentation, b: &ModulePresentation, rng: &mut R) -> GradedMatrix {
    let ring = a.ring();
    let fld = &ring.field;
    let (_, gens) = hom_presentation_with_maps(a, b);
    let mut acc = Vector::zero();
    for (g, &tw) in gens.columns().iter().zip(gens.source().twists()) {
        acc = acc.add(fld, &g.mul_poly(fld, &random_form(ring, tw, rng)));
    }
    let rg = b.num_generators();
    let cols: Vec<Vector> = (0..a.num_generators()).map(|j| acc.restrict(j * rg, (j + 1) * rg)).collect();
    GradedMatrix::new(ring, b.free_cover().clone(), a.free_cover().clone(), cols).expect("degree-0 map")
}

fn is_isomorphism(phi: &GradedMatrix, a: &ModulePresentation, b: &ModulePresentation) -> bool {
    let onto = ops::image_contained(&GradedMatrix::identity(b.ring(), b.free_cover()), &phi.concat(b.relations()));
    onto && super::meet::kernel_generators(phi, a, b).is_empty()
}

/// Searches a degree-0 isomorphism `a -> b`.
pub fn find_isomorphism<R: Rng>(a: &ModulePresentation, b: &ModulePresentation, rng: &mut R) -> Option<GradedMatrix> {
    (0..ISO_ATTEMPTS)
        .map(|_| random_hom(a, b, rng))
        .find(|phi| is_isomorphism(phi, a, b))
}

fn lowest_degree(m: &ModulePresentation) -> Option<i32> {
    m.free_cover().degrees().into_iter().min()
}

/// Re-expresses the two section sequences on one common module, twisting
/// the second by `shift` when both modules are dissocié (otherwise the
/// shift is read off their non-free parts).
pub fn shared_sequences<R: Rng>(
    a: &SectionSequence,
    b: &SectionSequence,
    shift: i32,
    rng: &mut R,
) -> Result<(SectionSequence, SectionSequence, i32)> {
    let ring = a.module.ring();
    let sa = split_free_summands(&a.module);
    let sb = split_free_summands(&b.module);
    let (meet_module, to_a, to_b, h) = if sa.core.num_generators() == 0 && sb.core.num_generators() == 0 {
        let bm = b.module.shift(shift);
        let f = a.module.direct_sum(&bm);
        let na = a.module.num_generators();
        let nb = bm.num_generators();
        let pa: Vec<Vector> = (0..na + nb).map(|i| if i < na { Vector::unit(i) } else { Vector::zero() }).collect();
        let pb: Vec<Vector> = (0..na + nb).map(|i| if i < na { Vector::zero() } else { Vector::unit(i - na) }).collect();
        let pa = GradedMatrix::new(ring, a.module.free_cover().clone(), f.free_cover().clone(), pa)?;
        let pb = GradedMatrix::new(ring, bm.free_cover().clone(), f.free_cover().clone(), pb)?;
        (f, pa, pb, shift)
    } else {
        let (la, lb) = match (lowest_degree(&sa.core), lowest_degree(&sb.core)) {
            (Some(x), Some(y)) => (x, y),
            _ => return Err(Error::KernelNotDissocie("only one module has a non-free part".into())),
        };
        let h = lb - la;
        let core_b = sb.core.shift(h);
        let phi = find_isomorphism(&core_b, &sa.core, rng).ok_or_else(|| Error::GenericityFailure {
            attempts: ISO_ATTEMPTS,
            diagnostic: "no isomorphism between the non-free parts was found".into(),
        })?;
        let bm = b.module.shift(h);
        let proj_b = sb.projection.map.with_modules(core_b.free_cover().clone(), bm.free_cover().clone());
        let p1 = Surjection::new(a.module.clone(), sa.core.clone(), sa.projection.map.clone())?;
        let p2 = Surjection::new(bm, sa.core.clone(), phi.compose(&proj_b))?;
        let m = psi_meet(&p1, &p2)?;
        (m.module, m.first.map, m.second.map, h)
    };
    let restrict = |seq: &SectionSequence, map: &GradedMatrix, t: i32| -> Result<SectionSequence> {
        let target = quotient_by(&seq.module.shift(t), &seq.sections);
        let (_, gens) = dissocie_kernel(map, &meet_module, &target)?;
        SectionSequence::new(meet_module.clone(), gens)
    };
    let a2 = restrict(a, &to_a, 0)?;
    let b2 = restrict(b, &to_b, h)?;
    if a2.curve != a.curve || b2.curve != b.curve {
        return Err(Error::InvalidArgument("common module does not reproduce the curves".into()));
    }
    Ok((a2, b2, h))
}

fn reversed(step: &BiliaisonStep) -> Result<BiliaisonStep> {
    let c = &step.certificate;
    elementary_biliaison_rank2(&c.module, &c.t, &c.s)
}

fn chain<R: Rng>(a: &SectionSequence, b: &SectionSequence, rng: &mut R) -> Result<Vec<BiliaisonStep>> {
    let r = a.len();
    if a.curve == b.curve {
        return Ok(Vec::new());
    }
    if r == 0 {
        return Err(Error::InvalidArgument("rank-1 module carries two different curves".into()));
    }
    if r == 1 {
        return Ok(vec![elementary_biliaison_rank2(&a.module, &a.sections[0], &b.sections[0])?]);
    }
    let d = a.degrees[0];
    let ring = a.module.ring();
    let basis = degree_basis(&a.module, d);
    for _ in 0..SECTION_ATTEMPTS {
        let s = random_combination(ring, &basis, rng);
        if s.is_zero() {
            continue;
        }
        let f = quotient_by(&a.module, std::slice::from_ref(&s));
        let fs = SheafModule::new(&f);
        if fs.rank() != r || !check_condition_t(&fs).passes() {
            continue;
        }
        let step_a = elementary_biliaison_rank2(&quotient_by(&a.module, &a.sections[1..]), &a.sections[0], &s);
        let step_b = elementary_biliaison_rank2(&quotient_by(&b.module, &b.sections[1..]), &b.sections[0], &s);
        let (Ok(step_a), Ok(step_b)) = (step_a, step_b) else { continue };
        let a1 = SectionSequence::new(f.clone(), a.sections[1..].to_vec());
        let b1 = SectionSequence::new(f.clone(), b.sections[1..].to_vec());
        let (Ok(a1), Ok(b1)) = (a1, b1) else { continue };
        let mut out = vec![step_a];
        out.extend(chain(&a1, &b1, rng)?);
        out.push(reversed(&step_b)?);
        return Ok(out);
    }
    Err(Error::GenericityFailure {
        attempts: SECTION_ATTEMPTS,
        diagnostic: format!("no common section of degree {d} serves both curves"),
    })
}

/// A chain of height-zero elementary biliaisons between two minimal curves
/// of one class.
pub fn connect_minimal<R: Rng>(v: &SectionSequence, w: &SectionSequence, rng: &mut R) -> Result<Vec<BiliaisonStep>> {
    let (a, b, _) = shared_sequences(v, w, 0, rng)?;
    if a.degrees != b.degrees {
        return Err(Error::TwistsNotComparable);
    }
    let steps = chain(&a, &b, rng)?;
    if steps.iter().any(|s| s.height != 0) {
        return Err(Error::InvalidArgument("chain contains a step of nonzero height".into()));
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liaison::{basic_double_link, descending_step, n_type_resolution};
    use crate::modgb::Ideal;
    use crate::ring::RingContext;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn curve(gens: &[&str]) -> CurveIdeal {
        CurveIdeal::new(Ideal::parse(&RingContext::p3(), gens).unwrap()).unwrap()
    }

    #[test]
    fn decisions() {
        let r = RingContext::p3();
        let skew = curve(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        let line = curve(&["x0", "x1"]);
        assert_eq!(same_biliaison_class(&skew, &skew, 1).unwrap(), ClassDecision::Equivalent(0));
        assert_eq!(same_biliaison_class(&line, &skew, 1).unwrap(), ClassDecision::Inequivalent);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let up = basic_double_link(&skew, &r.parse("x0*x2").unwrap(), 2, &mut rng).unwrap();
        assert_eq!(same_biliaison_class(&skew, &up.to, 1).unwrap(), ClassDecision::Equivalent(2));
    }

    #[test]
    fn line_and_its_double_link() {
        let r = RingContext::p3();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let line = curve(&["x0", "x1"]);
        let w = basic_double_link(&line, &r.parse("x0").unwrap(), 1, &mut rng).unwrap().to;
        let a = n_type_resolution(&line, 0).unwrap();
        let b = n_type_resolution(&w, 0).unwrap();
        let (a2, b2, _) = shared_sequences(&a, &b, 1, &mut rng).unwrap();
        assert!(a2.is_exact() && b2.is_exact());
        let step = descending_step(&a2, &b2, &mut rng).unwrap();
        assert!(step.from == w);
        assert_eq!(step.height, -1);
        assert_eq!(step.to.degree(), 1);
    }

    #[test]
    fn skew_line_pairs_connect_at_height_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c1 = curve(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        let c2 = curve(&["x0*x1", "x0*x3", "x1*x2", "x2*x3"]);
        assert_eq!(same_biliaison_class(&c1, &c2, 1).unwrap(), ClassDecision::Equivalent(0));
        let a = n_type_resolution(&c1, 0).unwrap();
        let b = n_type_resolution(&c2, 0).unwrap();
        let steps = connect_minimal(&a, &b, &mut rng).unwrap();
        assert!(!steps.is_empty());
        assert!(steps.first().unwrap().from == c1);
        assert!(steps.last().unwrap().to == c2);
        for w in steps.windows(2) {
            assert!(w[0].to == w[1].from);
        }
    }
}
