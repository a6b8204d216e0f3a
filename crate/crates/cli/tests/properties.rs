use biliaison_cli::idealfile::{render, IdealFile};
use biliaison_cli::oracle;
use biliaison_core::modgb::{syzygy_module, Ideal};
use biliaison_core::ring::{Monomial, Polynomial, RingContext};
use proptest::prelude::*;

const P: u32 = 32003;

/// A homogeneous form of degree `d` from a coefficient list over the
/// monomials of that degree.
fn form(ring: &RingContext, d: u32, coeffs: &[u32]) -> Polynomial {
    let terms = Monomial::all_of_degree(ring.num_vars, d)
        .into_iter()
        .zip(coeffs)
        .filter(|(_, &c)| c % P != 0)
        .map(|(m, &c)| (m, c % P))
        .collect();
    Polynomial::from_terms(&ring.field, terms)
}

fn ideal_strategy() -> impl Strategy<Value = Vec<(u32, Vec<u32>)>> {
    prop::collection::vec((1u32..=3, prop::collection::vec(0u32..5, 20)), 1..=3)
}

fn build(spec: &[(u32, Vec<u32>)]) -> Option<(RingContext, Vec<Polynomial>)> {
    let ring = RingContext::p3();
    let gens: Vec<Polynomial> = spec.iter().map(|(d, c)| form(&ring, *d, c)).filter(|g| !g.is_zero()).collect();
    (!gens.is_empty()).then_some((ring, gens))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ideal_file_round_trip(spec in ideal_strategy()) {
        let Some((ring, gens)) = build(&spec) else { return Ok(()) };
        let ideal = Ideal::new(&ring, gens).unwrap();
        let text = render(&ideal);
        let back = IdealFile::parse(&text).unwrap();
        prop_assert_eq!(&back.ideal, &ideal);
        prop_assert_eq!(render(&back.ideal), text);
    }

    #[test]
    fn hilbert_function_matches_linear_algebra(spec in ideal_strategy(), d in 0i32..6) {
        let Some((ring, gens)) = build(&spec) else { return Ok(()) };
        let ideal = Ideal::new(&ring, gens.clone()).unwrap();
        prop_assert_eq!(ideal.hilbert_function(d), oracle::quotient_dim(&gens, 4, d, u64::from(P)));
    }

    #[test]
    fn membership_and_syzygies(spec in ideal_strategy(), mult in prop::collection::vec(0u32..5, 35), d in 0i32..6) {
        let Some((ring, gens)) = build(&spec) else { return Ok(()) };
        let ideal = Ideal::new(&ring, gens.clone()).unwrap();
        let f = &ring.field;
        let top = gens.iter().map(|g| g.degree().unwrap()).max().unwrap();
        let mut x = Polynomial::zero();
        for g in &gens {
            let e = top - g.degree().unwrap();
            x = x.add(f, &form(&ring, e, &mult).mul(f, g));
        }
        prop_assert!(ideal.contains(&x));
        prop_assert!(oracle::ideal_member(&gens, &x, 4, u64::from(P)));
        let probe = form(&ring, top, &mult);
        prop_assert_eq!(ideal.contains(&probe), oracle::ideal_member(&gens, &probe, 4, u64::from(P)));
        let row = ideal.as_row();
        let syz = syzygy_module(&row);
        let degs: Vec<i32> = gens.iter().map(|g| g.degree().unwrap() as i32).collect();
        let cols: Vec<Vec<Polynomial>> = syz.columns().iter().map(|c| c.entries(gens.len())).collect();
        prop_assert_eq!(
            oracle::submodule_dim(&degs, &cols, &syz.source().degrees(), 4, d, u64::from(P)),
            oracle::syzygy_dim(&gens, 4, d, u64::from(P))
        );
    }
}
