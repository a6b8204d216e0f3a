use biliaison_core::homalg::{minimal_free_resolution, FiniteLengthModule, IsoResult};
use biliaison_core::modgb::{Ideal, ModulePresentation};
use biliaison_core::ring::{Field, Monomial, Polynomial, RingContext};
use proptest::prelude::*;

const P: u32 = 32003;

fn poly(ring: &RingContext, terms: &[(u8, u8, u8, u8, u32)]) -> Polynomial {
    let t = terms
        .iter()
        .map(|&(a, b, c, d, k)| (Monomial::from_exponents(&[a.into(), b.into(), c.into(), d.into()]), k % P))
        .collect();
    Polynomial::from_terms(&ring.field, t)
}

fn terms() -> impl Strategy<Value = Vec<(u8, u8, u8, u8, u32)>> {
    prop::collection::vec((0u8..3, 0u8..3, 0u8..3, 0u8..3, 0u32..P), 0..6)
}

/// Homogeneous form of degree `d` from coefficients over all monomials.
fn form(ring: &RingContext, d: u32, coeffs: &[u32]) -> Polynomial {
    let t = Monomial::all_of_degree(ring.num_vars, d).into_iter().zip(coeffs).map(|(m, &c)| (m, c % 7)).collect();
    Polynomial::from_terms(&ring.field, t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in 1u32..P, b in 0u32..P) {
        let f = Field::new(P).unwrap();
        prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        prop_assert_eq!(f.add(f.sub(b, a), a), b);
        prop_assert_eq!(f.div(f.mul(a, b), a), b);
    }

    #[test]
    fn ring_laws(a in terms(), b in terms(), c in terms()) {
        let r = RingContext::p3();
        let f = &r.field;
        let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(a.mul(f, &b), b.mul(f, &a));
        prop_assert_eq!(a.mul(f, &b.add(f, &c)), a.mul(f, &b).add(f, &a.mul(f, &c)));
        prop_assert_eq!(a.mul(f, &b).mul(f, &c), a.mul(f, &b.mul(f, &c)));
        prop_assert!(a.sub(f, &a).is_zero());
    }

    #[test]
    fn print_parse_round_trip(a in terms()) {
        let r = RingContext::p3();
        let p = poly(&r, &a);
        prop_assert_eq!(r.parse(&r.print(&p)).unwrap(), p);
    }

    #[test]
    fn normal_forms(coeffs in prop::collection::vec(0u32..7, 20), mult in prop::collection::vec(0u32..7, 20), d1 in 1u32..3, d2 in 1u32..3) {
        let r = RingContext::p3();
        let f = &r.field;
        let g1 = form(&r, d1, &coeffs);
        let g2 = form(&r, d2, &mult);
        prop_assume!(!g1.is_zero() && !g2.is_zero());
        let i = Ideal::new(&r, vec![g1.clone(), g2.clone()]).unwrap();
        let x = form(&r, 2, &mult).mul(f, &g1).add(f, &form(&r, 2 + d1 - d2, &coeffs).mul(f, &g2));
        prop_assert!(i.normal_form(&x).is_zero());
        let y = form(&r, 3, &coeffs);
        let ny = i.normal_form(&y);
        prop_assert_eq!(i.normal_form(&ny), ny.clone());
        prop_assert!(i.contains(&y.sub(f, &ny)));
    }

    #[test]
    fn resolutions_are_exact_complexes(coeffs in prop::collection::vec(0u32..7, 20), mult in prop::collection::vec(0u32..7, 20), d in 1u32..4) {
        let r = RingContext::p3();
        let gens: Vec<Polynomial> = [form(&r, d, &coeffs), form(&r, 2, &mult), form(&r, 1, &coeffs)]
            .into_iter()
            .filter(|g| !g.is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let m = ModulePresentation::quotient_ring(&Ideal::new(&r, gens).unwrap());
        let res = minimal_free_resolution(&m, 5).unwrap();
        prop_assert!(res.is_complex() && res.is_minimal() && res.is_complete());
        prop_assert!(res.length() <= 4);
        for n in 0..7 {
            prop_assert_eq!(res.euler_characteristic(n), m.hilbert_function(n) as i64);
        }
    }

    #[test]
    fn finite_length_shifts(t in -3i32..3) {
        let r = RingContext::p3();
        let k = ModulePresentation::quotient_ring(&Ideal::parse(&r, &["x0", "x1", "x2^2", "x3"]).unwrap());
        let m = FiniteLengthModule::from_presentation(&k).unwrap();
        let n = FiniteLengthModule::from_presentation(&k.shift(t)).unwrap();
        prop_assert_eq!(m.total_dim(), 2);
        prop_assert_eq!(m.iso_up_to_shift(&n, 1), IsoResult::Equivalent(-t));
    }
}
