//! Elementary biliaisons certified by a rank-2 module with two sections.

use rand::Rng;

use super::random::random_form;
use super::sections::{element_degree, quotient_by};
use crate::error::{Error, Result};
use crate::homalg::IsoResult;
use crate::modgb::{FreeModule, GbOptions, GroebnerBasis, Ideal, ModulePresentation, Vector};
use crate::ring::Polynomial;
use crate::sheafcoh::{embedding, generic_rank, module_to_ideal, rao_module, CurveIdeal, SheafModule};

const SURFACE_ATTEMPTS: usize = 32;

/// `E` with sections `s`, `t` such that `E/(s) ≅ I_from(a)` and
/// `E/(t) ≅ I_to(b)`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub module: ModulePresentation,
    pub s: Vector,
    pub t: Vector,
}

impl Certificate {
    /// Recomputes the step from scratch.
    pub fn verify(&self) -> Result<BiliaisonStep> {
        elementary_biliaison_rank2(&self.module, &self.s, &self.t)
    }
}

/// `to` is obtained from `from` by an elementary biliaison of height
/// `height` on the surface `surface = 0`.
#[derive(Clone, Debug)]
pub struct BiliaisonStep {
    pub from: CurveIdeal,
    pub to: CurveIdeal,
    pub from_twist: i32,
    pub to_twist: i32,
    pub surface: Polynomial,
    pub surface_degree: i32,
    pub height: i32,
    pub certificate: Certificate,
}

fn quotient_curve(m: &ModulePresentation, v: &Vector) -> Result<(CurveIdeal, i32)> {
    let q = SheafModule::new(&quotient_by(m, std::slice::from_ref(v)));
    module_to_ideal(&q).map_err(|e| Error::QuotientNotT(e.to_string()))
}

/// Reads the elementary biliaison off `0 -> S(-deg s) -> E -> I_V1(a) -> 0`
/// and `0 -> S(-deg t) -> E -> I_V2(b) -> 0`.
pub fn elementary_biliaison_rank2(e: &ModulePresentation, s: &Vector, t: &Vector) -> Result<BiliaisonStep> {
    let rank = generic_rank(e);
    if rank != 2 {
        return Err(Error::NotRankTwo(rank));
    }
    let ring = e.ring();
    let ds = element_degree(e, s).ok_or_else(|| Error::InvalidArgument("s is zero or not homogeneous".into()))?;
    let dt = element_degree(e, t).ok_or_else(|| Error::InvalidArgument("t is zero or not homogeneous".into()))?;
    let (v1, a) = quotient_curve(e, s)?;
    let (v2, b) = quotient_curve(e, t)?;
    let emb = embedding(&quotient_by(e, std::slice::from_ref(s)))?;
    let gamma = emb.apply(ring, t);
    let n = a + dt;
    if gamma.is_zero() {
        if v1 != v2 || a != b {
            return Err(Error::InvalidArgument("t vanishes in E/(s) but the quotients differ".into()));
        }
        return Ok(BiliaisonStep {
            from: v1,
            to: v2,
            from_twist: a,
            to_twist: b,
            surface: gamma,
            surface_degree: n,
            height: 0,
            certificate: Certificate {
                module: e.clone(),
                s: s.clone(),
                t: t.clone(),
            },
        });
    }
    let h = b - a;
    if h != dt - ds {
        return Err(Error::DegreeMismatch(format!("height {h} differs from deg t - deg s = {}", dt - ds)));
    }
    if v2.degree() != v1.degree() + i64::from(n) * i64::from(h) {
        return Err(Error::DegreeMismatch(format!(
            "degree {} is not {} + {n}*{h}",
            v2.degree(),
            v1.degree()
        )));
    }
    if !v1.ideal().contains(&gamma) || !v2.ideal().contains(&gamma) {
        return Err(Error::BadSurface("the surface does not contain both schemes".into()));
    }
    Ok(BiliaisonStep {
        from: v1,
        to: v2,
        from_twist: a,
        to_twist: b,
        surface: gamma.make_monic(&ring.field),
        surface_degree: n,
        height: h,
        certificate: Certificate {
            module: e.clone(),
            s: s.clone(),
            t: t.clone(),
        },
    })
}

/// `C' = C ∪ (f ∩ g)` with `I_C' = g·I_C + (f)` for a random `g` of degree
/// `h`; an elementary biliaison of height `h` on `f = 0`.
pub fn basic_double_link<R: Rng>(c: &CurveIdeal, f: &Polynomial, h: i32, rng: &mut R) -> Result<BiliaisonStep> {
    let ring = c.ring();
    if h <= 0 {
        return Err(Error::InvalidArgument(format!("height {h} must be positive")));
    }
    let f = check_surface(c, f)?;
    for _ in 0..SURFACE_ATTEMPTS {
        let g = random_form(ring, h, rng);
        if Ideal::new(ring, vec![f.clone(), g.clone()])?.height() == 2 {
            return basic_double_link_with(c, &f, &g);
        }
    }
    Err(Error::GenericityFailure {
        attempts: SURFACE_ATTEMPTS,
        diagnostic: format!("no form of degree {h} meets f properly"),
    })
}

fn check_surface(c: &CurveIdeal, f: &Polynomial) -> Result<Polynomial> {
    let f = c.ring().reduce(f);
    if f.is_zero() || !f.is_homogeneous() || f.is_constant() {
        return Err(Error::BadSurface("f must be a nonconstant form".into()));
    }
    if !c.ideal().contains(&f) {
        return Err(Error::BadSurface("f does not vanish on C".into()));
    }
    Ok(f)
}

/// The basic double link for a given `g`, which must meet `f` properly.
pub fn basic_double_link_with(c: &CurveIdeal, f: &Polynomial, g: &Polynomial) -> Result<BiliaisonStep> {
    let ring = c.ring();
    let f = check_surface(c, f)?;
    let g = ring.reduce(g);
    let h = match g.degree() {
        Some(d) if d > 0 && g.is_homogeneous() => d as i32,
        _ => return Err(Error::InvalidArgument("g must be a form of positive degree".into())),
    };
    if Ideal::new(ring, vec![f.clone(), g.clone()])?.height() != 2 {
        return Err(Error::BadSurface("f and g share a component".into()));
    }
    let n = f.degree().unwrap_or(0) as i32;
    let fld = &ring.field;
    let gens = c.ideal().gens();
    let k = gens.len();
    let vecs: Vec<Vector> = gens.iter().map(|p| Vector::from_poly(p, 0)).collect();
    let gb = GroebnerBasis::compute(
        ring,
        &[0],
        &vecs,
        &GbOptions {
            trace: true,
            ..Default::default()
        },
    );
    let (rem, coeffs) = gb.lift(&Vector::from_poly(&f, 0));
    debug_assert!(rem.is_zero());
    let mut t = Vector::zero();
    for (j, p) in coeffs.entries(k).iter().enumerate() {
        t = t.add(fld, &Vector::from_poly(p, j));
    }
    t = t.add(fld, &Vector::from_poly(&g.neg(fld), k));
    let e = ModulePresentation::of_ideal(c.ideal())
        .shift(-h)
        .direct_sum(&ModulePresentation::free(ring, FreeModule::new(vec![-n])));
    let s = Vector::unit(k);
    let step = elementary_biliaison_rank2(&e, &s, &t)?;
    let expected = CurveIdeal::from_saturation(&c.ideal().scale_by(&g).add(&Ideal::new(ring, vec![f])?))?;
    if step.from != *c || step.to != expected {
        return Err(Error::InvalidArgument("certificate does not reproduce g·I_C + (f)".into()));
    }
    Ok(step)
}

/// Compares `M(to)_{d}` with `M(from)_{d - height}`.
pub fn rao_shift(step: &BiliaisonStep, seed: u64) -> Result<IsoResult> {
    let m = rao_module(&step.from)?;
    let n = rao_module(&step.to)?;
    Ok(m.iso_up_to_shift(&n, seed))
}

/// The Rao modules of the two ends differ by the shift `height`.
pub fn verify_rao_shift(step: &BiliaisonStep, seed: u64) -> Result<bool> {
    let m = rao_module(&step.from)?;
    let n = rao_module(&step.to)?;
    if m.is_zero() && n.is_zero() {
        return Ok(true);
    }
    Ok(m.iso_up_to_shift(&n, seed) == IsoResult::Equivalent(step.height))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn curve(gens: &[&str]) -> CurveIdeal {
        CurveIdeal::new(Ideal::parse(&RingContext::p3(), gens).unwrap()).unwrap()
    }

    #[test]
    fn bdl_on_line() {
        let r = RingContext::p3();
        let line = curve(&["x0", "x1"]);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = r.parse("x0*x2 + x1*x3").unwrap();
        let step = basic_double_link(&line, &f, 1, &mut rng).unwrap();
        assert_eq!((step.height, step.surface_degree), (1, 2));
        assert_eq!(step.to.degree(), 3);
        assert_eq!(step.to.genus(), 0);
        assert!(verify_rao_shift(&step, 1).unwrap());
        let again = step.certificate.verify().unwrap();
        assert!(again.to == step.to);
    }

    #[test]
    fn bdl_on_skew_lines_shifts_rao() {
        let r = RingContext::p3();
        let c = curve(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let f = r.parse("x0*x2 + x1*x3").unwrap();
        let step = basic_double_link(&c, &f, 2, &mut rng).unwrap();
        assert_eq!(step.to.degree(), 2 + 2 * 2);
        assert_eq!(rao_shift(&step, 5).unwrap(), IsoResult::Equivalent(2));
    }

    #[test]
    fn explicit_link_and_identity() {
        let r = RingContext::p3();
        let line = curve(&["x0", "x1"]);
        let step = basic_double_link_with(&line, &r.parse("x0").unwrap(), &r.parse("x2").unwrap()).unwrap();
        assert!(step.to == curve(&["x0", "x1*x2"]));
        assert_eq!((step.height, step.surface_degree, step.to.degree()), (1, 1, 2));
        let c = &step.certificate;
        let id = elementary_biliaison_rank2(&c.module, &c.t, &c.t).unwrap();
        assert!(id.from == id.to && id.height == 0 && id.surface.is_zero());
    }

    #[test]
    fn free_rank_two() {
        let r = RingContext::p3();
        let e = ModulePresentation::free(&r, FreeModule::new(vec![-1, 0]));
        let t = Vector::from_poly(&Polynomial::one(), 0).add(&r.field, &Vector::from_poly(&r.parse("x0 + x3").unwrap(), 1));
        let step = elementary_biliaison_rank2(&e, &Vector::unit(0), &t).unwrap();
        assert!(step.from.is_empty() && step.to.is_empty());
        assert_eq!((step.from_twist, step.to_twist, step.height, step.surface_degree), (0, 0, 0, 1));
        let up = elementary_biliaison_rank2(&e, &Vector::unit(1), &t).unwrap();
        assert_eq!((up.from_twist, up.to_twist, up.height, up.surface_degree), (-1, 0, 1, 0));
        let down = elementary_biliaison_rank2(&e, &t, &Vector::unit(1)).unwrap();
        assert_eq!(down.height, -1);
    }

    #[test]
    fn rejects_bad_input() {
        let r = RingContext::p3();
        let line = curve(&["x0", "x1"]);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let f = r.parse("x2").unwrap();
        assert!(matches!(basic_double_link(&line, &f, 1, &mut rng), Err(Error::BadSurface(_))));
        let f = r.parse("x0").unwrap();
        assert!(matches!(basic_double_link(&line, &f, 0, &mut rng), Err(Error::InvalidArgument(_))));
        let e = ModulePresentation::free(&r, FreeModule::new(vec![0, 0, 0]));
        assert!(matches!(
            elementary_biliaison_rank2(&e, &Vector::unit(0), &Vector::unit(1)),
            Err(Error::NotRankTwo(3))
        ));
    }
}
