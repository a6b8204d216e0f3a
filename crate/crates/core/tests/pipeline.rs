use biliaison_core::gorenstein::{mcm_triple, realize_triple, stably_equivalent, StableDecision};
use biliaison_core::liaison::{
    basic_double_link, build_extraverti, connect_minimal, descend_to_minimal, n_type_resolution, same_biliaison_class,
    verify_rao_shift, ClassDecision,
};
use biliaison_core::modgb::Ideal;
use biliaison_core::ring::RingContext;
use biliaison_core::sheafcoh::{check_condition_t, h1_star, rao_module, CurveIdeal, SheafModule};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn curve(gens: &[&str]) -> CurveIdeal {
    CurveIdeal::new(Ideal::parse(&RingContext::p3(), gens).unwrap()).unwrap()
}

fn skew_lines() -> CurveIdeal {
    curve(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"])
}

#[test]
fn link_then_descend() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let r = RingContext::p3();
    let c = skew_lines();
    let q = r.parse("x0*x2 + x1*x3").unwrap();
    let step = basic_double_link(&c, &q, 2, &mut rng).unwrap();
    assert_eq!(step.to.degree(), 6);
    assert!(verify_rao_shift(&step, 1).unwrap());
    assert_eq!(same_biliaison_class(&c, &step.to, 2).unwrap(), ClassDecision::Equivalent(2));
    let log = descend_to_minimal(&step.to, &mut rng).unwrap();
    assert!(log.heights().iter().all(|&h| h < 0));
    assert_eq!(log.heights().iter().sum::<i32>(), -2);
    assert_eq!(log.terminal.degree(), 2);
    assert_eq!(rao_module(&log.terminal).unwrap().dim(0), 1);
}

#[test]
fn extraverti_of_three_lines() {
    let r = RingContext::p3();
    let lines = [["x0", "x1"], ["x2", "x3"], ["x0 + x2", "x1 + x3"]];
    let mut i = Ideal::parse(&r, &lines[0]).unwrap();
    for l in &lines[1..] {
        i = i.intersect(&Ideal::parse(&r, l).unwrap());
    }
    let c = CurveIdeal::new(i).unwrap();
    assert_eq!((c.degree(), c.genus()), (3, -2));
    let x = build_extraverti(&c.sheaf(0)).unwrap();
    let f = SheafModule::new(&x.module);
    assert!(check_condition_t(&f).passes());
    let h = h1_star(&f).unwrap();
    let m = rao_module(&c).unwrap();
    assert_eq!(h.dims(), m.dims());
    let t = mcm_triple(&f).unwrap();
    assert!(t.p_is_free());
    let back = realize_triple(&t).unwrap();
    assert_eq!(stably_equivalent(back.module(), f.module(), 4), StableDecision::Equivalent);
}

#[test]
fn minimal_skew_pairs_are_connected() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = n_type_resolution(&skew_lines(), 0).unwrap();
    let b = n_type_resolution(&curve(&["x0*x1", "x0*x3", "x2*x1", "x2*x3"]), 0).unwrap();
    let steps = connect_minimal(&a, &b, &mut rng).unwrap();
    assert!(steps.iter().all(|s| s.height == 0 && s.to.degree() == 2));
}
