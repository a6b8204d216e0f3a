//! The acceptance checks, shared by `selftest` and the acceptance test
//! target. Every check is exact; sample sizes depend on the level.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use biliaison_core::gorenstein::{is_mcm, mcm_triple, second_syzygy_sheaf};
use biliaison_core::homalg::{ext1_cocycles, ext_module, minimal_free_resolution, yoneda_extension, FiniteLengthModule, IsoResult};
use biliaison_core::liaison::{basic_double_link, build_extraverti, descend_to_minimal, random_form, verify_rao_shift, BiliaisonStep};
use biliaison_core::modgb::{syzygy_module, FreeModule, GradedMatrix, Ideal, ModulePresentation, Vector};
use biliaison_core::ring::{Monomial, Polynomial, RingContext};
use biliaison_core::sheafcoh::{check_condition_t, h1_star, rao_module, CurveIdeal, SheafModule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands;
use crate::idealfile::{render, IdealFile};
use crate::oracle;

pub const LINE: &str = include_str!("../corpus/line.ideal");
pub const SKEW_LINES: &str = include_str!("../corpus/skew_lines.ideal");
pub const TWISTED_CUBIC: &str = include_str!("../corpus/twisted_cubic.ideal");
pub const CONIC: &str = include_str!("../corpus/conic.ideal");
pub const CI_2_3: &str = include_str!("../corpus/ci_2_3.ideal");
pub const LINE_ON_QUADRIC: &str = include_str!("../corpus/line_on_quadric.ideal");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Engine oracles only.
    Quick,
    /// Every check on reduced samples.
    Full,
    /// Every check on the full sample sizes.
    Acceptance,
}

impl Level {
    pub fn name(self) -> &'static str {
        match self {
            Level::Quick => "quick",
            Level::Full => "full",
            Level::Acceptance => "acceptance",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "quick" => Some(Level::Quick),
            "full" => Some(Level::Full),
            "acceptance" => Some(Level::Acceptance),
            _ => None,
        }
    }

    fn pick(self, full: usize, acceptance: usize) -> usize {
        match self {
            Level::Quick | Level::Full => full,
            Level::Acceptance => acceptance,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub ok: bool,
    pub details: String,
}

type Check = fn(Level, u64) -> Result<String, String>;

const CHECKS: [(u32, &str, Check); 10] = [
    (1, "line_resolution", line_resolution),
    (2, "rao_modules", rao_modules),
    (3, "shift_law", shift_law),
    (4, "strict_descent", strict_descent),
    (5, "extraverti", extraverti),
    (6, "psi_invariance", psi_invariance),
    (7, "syzygy_roundtrip", syzygy_roundtrip),
    (8, "quadric_separation", quadric_separation),
    (9, "equivalence", equivalence),
    (10, "engine_oracles", engine_oracles),
];

/// Runs one check by number.
pub fn run_one(id: u32, level: Level, seed: u64) -> CriterionResult {
    let (id, name, f) = CHECKS.iter().copied().find(|c| c.0 == id).expect("known criterion");
    let (ok, details) = match f(level, seed.wrapping_add(u64::from(id))) {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult { id, name, ok, details }
}

/// Runs every check the level includes.
pub fn run(level: Level, seed: u64) -> Vec<CriterionResult> {
    let ids: Vec<u32> = match level {
        Level::Quick => vec![10],
        _ => CHECKS.iter().map(|c| c.0).collect(),
    };
    ids.into_iter().map(|id| run_one(id, level, seed)).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

pub fn corpus_curve(text: &str) -> CurveIdeal {
    let f = IdealFile::parse(text).expect("corpus file parses");
    CurveIdeal::new(f.ideal).expect("corpus file is a curve")
}

fn p3_corpus() -> Vec<(&'static str, CurveIdeal)> {
    [("line", LINE), ("skew_lines", SKEW_LINES), ("twisted_cubic", TWISTED_CUBIC), ("conic", CONIC), ("ci_2_3", CI_2_3)]
        .into_iter()
        .map(|(n, t)| (n, corpus_curve(t)))
        .collect()
}

fn linear_form<R: Rng>(ring: &RingContext, rng: &mut R) -> Polynomial {
    random_form(ring, 1, rng)
}

/// `n` general lines and their components.
fn general_lines<R: Rng>(ring: &RingContext, n: usize, rng: &mut R) -> Result<(CurveIdeal, Vec<Ideal>), String> {
    let comps: Vec<Ideal> = (0..n)
        .map(|_| Ideal::new(ring, vec![linear_form(ring, rng), linear_form(ring, rng)]).expect("linear forms"))
        .collect();
    let mut i = comps[0].clone();
    for c in &comps[1..] {
        i = i.intersect(c);
    }
    let c = CurveIdeal::new(i).map_err(err)?;
    ensure(c.degree() == n as i64, || format!("{n} general lines have degree {}", c.degree()))?;
    Ok((c, comps))
}

/// A random form of degree `k` in `I_C`, if there is one.
fn surface<R: Rng>(c: &CurveIdeal, k: i32, rng: &mut R) -> Option<Polynomial> {
    let ring = c.ring();
    let f = &ring.field;
    let mut s = Polynomial::zero();
    for g in c.ideal().gens() {
        let d = g.degree().map_or(0, |d| d as i32);
        s = s.add(f, &random_form(ring, k - d, rng).mul(f, g));
    }
    (!s.is_zero()).then_some(s)
}

fn min_surface_degree(c: &CurveIdeal) -> i32 {
    c.ideal().gens().iter().filter_map(Polynomial::degree).min().unwrap_or(1) as i32
}

fn dims_line(m: &FiniteLengthModule) -> String {
    let d: BTreeMap<i32, usize> = m.dims().iter().filter(|(_, &v)| v > 0).map(|(&k, &v)| (k, v)).collect();
    format!("{d:?}")
}

/// `dim M(to)_{d+h} = dim M(from)_d` for every `d`.
fn hilbert_shifted(from: &FiniteLengthModule, to: &FiniteLengthModule, h: i32) -> bool {
    from.total_dim() == to.total_dim() && from.dims().iter().all(|(&d, &n)| to.dim(d + h) == n)
}

fn line_resolution(_: Level, _: u64) -> Result<String, String> {
    let line = corpus_curve(LINE);
    let res = minimal_free_resolution(&ModulePresentation::of_ideal(line.ideal()), 5).map_err(err)?;
    let shape: Vec<Vec<i32>> = (0..=res.differentials().len()).map(|i| res.free_module(i).twists().to_vec()).collect();
    ensure(shape == vec![vec![-1, -1], vec![-2]], || format!("resolution twists {shape:?}"))?;
    ensure(res.is_complex() && res.is_minimal(), || "resolution is not a minimal complex".into())?;
    Ok("0 -> S(-2) -> S(-1)^2 -> I -> 0".into())
}

/// `h^0(O_C(n)) - dim (S/I)_n` for a disjoint union of lines.
fn h1_oracle(c: &CurveIdeal, comps: &[Ideal], n: i32) -> i64 {
    let p = u64::from(c.ring().field.characteristic());
    let nv = c.ring().num_vars;
    let h0: i64 = if n < 0 {
        0
    } else {
        comps.iter().map(|l| oracle::quotient_dim(l.gens(), nv, n, p) as i64).sum()
    };
    h0 - oracle::quotient_dim(c.ideal().gens(), nv, n, p) as i64
}

fn rao_modules(level: Level, seed: u64) -> Result<String, String> {
    let r = RingContext::p3();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cases = vec![
        (corpus_curve(LINE), vec![Ideal::parse(&r, &["x0", "x1"]).map_err(err)?]),
        (
            corpus_curve(SKEW_LINES),
            vec![Ideal::parse(&r, &["x0", "x1"]).map_err(err)?, Ideal::parse(&r, &["x2", "x3"]).map_err(err)?],
        ),
    ];
    for _ in 0..level.pick(1, 3) {
        cases.push(general_lines(&r, 3, &mut rng)?);
    }
    let mut out = String::new();
    for (i, (c, comps)) in cases.iter().enumerate() {
        let m = rao_module(c).map_err(err)?;
        for n in -2..=4 {
            let want = h1_oracle(c, comps, n);
            ensure(m.dim(n) as i64 == want, || format!("case {i}: h^1(I(n)) at n={n} is {} but the oracle gives {want}", m.dim(n)))?;
        }
        match i {
            0 => ensure(m.is_zero(), || "rao(line) is not zero".into())?,
            1 => ensure(m.total_dim() == 1 && m.dim(0) == 1, || format!("rao(skew lines) = {}", dims_line(&m)))?,
            _ => {}
        }
        let _ = write!(out, "{}{}", if i == 0 { "" } else { "; " }, dims_line(&m));
    }
    Ok(format!("oracle agrees on n in [-2, 4]: {out}"))
}

fn bdl_sample<R: Rng>(base: &CurveIdeal, tower: bool, rng: &mut R) -> Result<BiliaisonStep, String> {
    let mut c = base.clone();
    if tower {
        let k = min_surface_degree(&c);
        let f = surface(&c, k, rng).ok_or("no surface of minimal degree")?;
        c = basic_double_link(&c, &f, 1, rng).map_err(err)?.to;
    }
    let m = min_surface_degree(&c);
    let choices: Vec<i32> = (1..=3).filter(|&k| k >= m).collect();
    let k = choices[rng.gen_range(0..choices.len())];
    let h = rng.gen_range(1..=3);
    let f = surface(&c, k, rng).ok_or("no surface")?;
    basic_double_link(&c, &f, h, rng).map_err(err)
}

fn shift_law(level: Level, seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases = [corpus_curve(LINE), corpus_curve(SKEW_LINES), corpus_curve(TWISTED_CUBIC)];
    let count = level.pick(12, 50);
    let iso = level.pick(3, 10);
    let mut isos = 0;
    for i in 0..count {
        let step = bdl_sample(&bases[i % 3], i % 2 == 1, &mut rng)?;
        ensure(
            step.to.degree() == step.from.degree() + i64::from(step.height) * i64::from(step.surface_degree),
            || format!("sample {i}: degree law fails"),
        )?;
        let (a, b) = (rao_module(&step.from).map_err(err)?, rao_module(&step.to).map_err(err)?);
        ensure(hilbert_shifted(&a, &b, step.height), || {
            format!("sample {i}: {} does not shift {} by {}", dims_line(&b), dims_line(&a), step.height)
        })?;
        if i < iso {
            ensure(verify_rao_shift(&step, seed).map_err(err)?, || format!("sample {i}: no isomorphism at the shift"))?;
            isos += 1;
        }
    }
    Ok(format!("{count} basic double links, {isos} module isomorphisms confirmed"))
}

fn tower(c: &CurveIdeal, depth: usize, rng: &mut ChaCha8Rng) -> Result<CurveIdeal, String> {
    let mut c = c.clone();
    for _ in 0..depth {
        let f = surface(&c, min_surface_degree(&c).max(2), rng).ok_or("no surface")?;
        c = basic_double_link(&c, &f, 1, rng).map_err(err)?.to;
    }
    Ok(c)
}

fn strict_descent(level: Level, seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = tower(&corpus_curve(SKEW_LINES), level.pick(2, 3), &mut rng)?;
    let log = descend_to_minimal(&start, &mut rng).map_err(err)?;
    let m = rao_module(&log.terminal).map_err(err)?;
    ensure(log.heights().iter().all(|&h| h < 0), || format!("heights {:?}", log.heights()))?;
    ensure(log.terminal.degree() == 2 && m.total_dim() == 1 && m.dim(0) == 1, || {
        format!("tower ends at degree {} with Rao {}", log.terminal.degree(), dims_line(&m))
    })?;
    let ci = descend_to_minimal(&corpus_curve(CI_2_3), &mut rng).map_err(err)?;
    ensure(ci.heights().iter().all(|&h| h < 0), || format!("CI heights {:?}", ci.heights()))?;
    ensure(ci.terminal.degree() == 1, || format!("CI(2,3) ends at degree {}", ci.terminal.degree()))?;
    Ok(format!(
        "tower of degree {}: degrees {:?}, heights {:?}; CI(2,3): degrees {:?}",
        start.degree(),
        log.degrees(),
        log.heights(),
        ci.degrees()
    ))
}

fn curve_sample(level: Level, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<CurveIdeal>, String> {
    let r = RingContext::p3();
    let mut out: Vec<CurveIdeal> = p3_corpus().into_iter().map(|(_, c)| c).collect();
    let bases = out.clone();
    let mut i = 0;
    while out.len() < n {
        match i % 3 {
            0 => out.push(general_lines(&r, 2 + (i / 3) % 2, rng)?.0),
            _ => {
                let base = &bases[i % 3];
                let f = surface(base, min_surface_degree(base), rng).ok_or("no surface")?;
                let h = 1 + (level == Level::Acceptance && i % 2 == 0) as i32;
                out.push(basic_double_link(base, &f, h, rng).map_err(err)?.to);
            }
        }
        i += 1;
    }
    out.truncate(n);
    Ok(out)
}

fn same_h1(a: &FiniteLengthModule, b: &FiniteLengthModule, seed: u64) -> bool {
    (a.is_zero() && b.is_zero()) || a.iso_up_to_shift(b, seed) == IsoResult::Equivalent(0)
}

fn extraverti(level: Level, seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let curves = curve_sample(level, level.pick(6, 20), &mut rng)?;
    for (i, c) in curves.iter().enumerate() {
        let x = build_extraverti(&c.sheaf(0)).map_err(err)?;
        let f = SheafModule::new(&x.module);
        ensure(ext_module(&x.module, 1, 0).map_err(err)?.is_zero(), || format!("curve {i}: Ext^1(F, S) ≠ 0"))?;
        ensure(check_condition_t(&f).passes(), || format!("curve {i}: F fails condition T"))?;
        let (h, m) = (h1_star(&f).map_err(err)?, rao_module(c).map_err(err)?);
        ensure(same_h1(&h, &m, seed), || format!("curve {i}: H^1_*(F) = {} but M(C) = {}", dims_line(&h), dims_line(&m)))?;
    }
    Ok(format!("{} curves", curves.len()))
}

/// `A ∘ c` for a random `A: L -> L'` with `L'` of rank one or two.
fn random_cocycle(c: &GradedMatrix, rng: &mut ChaCha8Rng) -> Result<GradedMatrix, String> {
    let ring = c.ring();
    let src = c.target().degrees();
    let low = *src.iter().min().ok_or("no cocycles")? - rng.gen_range(0..=1);
    let k = rng.gen_range(1..=2);
    let target = FreeModule::new(vec![-low; k]);
    let cols = src
        .iter()
        .map(|&d| {
            let entries: Vec<Polynomial> = (0..k).map(|_| random_form(ring, d - low, rng)).collect();
            Vector::from_entries(&ring.field, &entries)
        })
        .collect();
    let a = GradedMatrix::new(ring, target, c.target().clone(), cols).map_err(err)?;
    Ok(a.compose(c))
}

fn psi_invariance(level: Level, seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = level.pick(6, 20);
    let curves = curve_sample(level, 8, &mut rng)?;
    let mut nontrivial = 0;
    for i in 0..count {
        let c = &curves[i % curves.len()];
        let e = c.sheaf(0);
        let res = minimal_free_resolution(e.module(), 5).map_err(err)?;
        let cocycles = ext1_cocycles(&res);
        let cocycle = random_cocycle(&cocycles, &mut rng)?;
        let ext = yoneda_extension(&res, &cocycle).map_err(err)?;
        let big = SheafModule::new(&ext.module);
        let (a, b) = (h1_star(&e).map_err(err)?, h1_star(&big).map_err(err)?);
        ensure(a.dims() == b.dims() || dims_line(&a) == dims_line(&b), || {
            format!("extension {i}: Hilbert functions {} and {}", dims_line(&a), dims_line(&b))
        })?;
        ensure(same_h1(&a, &b, seed), || format!("extension {i}: no isomorphism at shift 0"))?;
        nontrivial += usize::from(!a.is_zero());
    }
    Ok(format!("{count} extensions, {nontrivial} with nonzero H^1_*"))
}

/// `dim M_t` for `M = coker(d1)` over `R`, by linear algebra in the
/// ambient ring.
fn presentation_dim_oracle(d1: &GradedMatrix, t: i32) -> usize {
    let ring = d1.ring();
    let nv = ring.num_vars;
    let p = u64::from(ring.field.characteristic());
    let gen_degrees = d1.target().degrees();
    let mut cols: Vec<Vec<Polynomial>> = d1.columns().iter().map(|c| c.entries(gen_degrees.len())).collect();
    let mut col_degrees = d1.source().degrees();
    if let Some(q) = &ring.relation {
        for (i, &g) in gen_degrees.iter().enumerate() {
            let mut e = vec![Polynomial::zero(); gen_degrees.len()];
            e[i] = q.clone();
            cols.push(e);
            col_degrees.push(g + q.degree().unwrap_or(0) as i32);
        }
    }
    let total: usize = gen_degrees.iter().map(|&g| oracle::monomials(nv, t - g).len()).sum();
    total - oracle::submodule_dim(&gen_degrees, &cols, &col_degrees, nv, t, p)
}

fn syzygy_roundtrip(_: Level, _: u64) -> Result<String, String> {
    let mut out = Vec::new();
    for ring in [RingContext::p3(), RingContext::quadric_threefold()] {
        let k = ModulePresentation::quotient_ring(&Ideal::irrelevant(&ring));
        let m = FiniteLengthModule::from_presentation(&k).map_err(err)?;
        let e = second_syzygy_sheaf(&m).map_err(err)?;
        let h = h1_star(&e).map_err(err)?;
        ensure(h.total_dim() == 1 && h.dim(0) == 1, || format!("H^1_*(E) = {}", dims_line(&h)))?;
        let res = minimal_free_resolution(&k, ring.num_vars + 1).map_err(err)?;
        for t in -2..=3 {
            let want = presentation_dim_oracle(res.differential(1), t);
            ensure(h.dim(t) == want, || format!("degree {t}: H^1 has {} but coker H^0 has {want}", h.dim(t)))?;
        }
        out.push(format!("{} variables: rank {}", ring.num_vars, e.rank()));
    }
    Ok(out.join("; "))
}

fn quadric_separation(level: Level, seed: u64) -> Result<String, String> {
    let line = corpus_curve(LINE_ON_QUADRIC);
    let x = build_extraverti(&line.sheaf(0)).map_err(err)?;
    let t = mcm_triple(&SheafModule::new(&x.module)).map_err(err)?;
    ensure(t.m.is_zero(), || format!("M = {}", dims_line(&t.m)))?;
    ensure(is_mcm(&t.p), || "P is not maximal Cohen–Macaulay".into())?;
    ensure(!t.p_is_free(), || "P is free on the quadric".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let curves = curve_sample(level, level.pick(5, 8), &mut rng)?;
    for (i, c) in curves.iter().enumerate() {
        let x = build_extraverti(&c.sheaf(0)).map_err(err)?;
        let t = mcm_triple(&SheafModule::new(&x.module)).map_err(err)?;
        ensure(t.p_is_free(), || format!("curve {i} of ℙ³ gives a non-free P"))?;
    }
    Ok(format!(
        "quadric line: P has {} generators and {} relations; {} curves of ℙ³ give free P",
        t.p.num_generators(),
        t.p.relations().ncols(),
        curves.len()
    ))
}

fn file_of(c: &CurveIdeal) -> IdealFile {
    IdealFile::parse(&render(c.ideal())).expect("rendered ideal parses")
}

fn equivalence(level: Level, seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (name, text) in [("skew_lines", SKEW_LINES), ("twisted_cubic", TWISTED_CUBIC)] {
        let base = corpus_curve(text);
        let mut c = base.clone();
        let mut shift = 0;
        for k in 1..=level.pick(1, 2) {
            let f = surface(&c, min_surface_degree(&c), &mut rng).ok_or("no surface")?;
            let h = rng.gen_range(1..=2);
            c = basic_double_link(&c, &f, h, &mut rng).map_err(err)?.to;
            shift += h;
            let o = commands::equiv(&file_of(&base), &file_of(&c), seed).map_err(err)?;
            let decision = &o.report.outputs["decision"];
            ensure(decision == "equivalent", || format!("{name} vs BDL^{k}: {decision}"))?;
            if name == "skew_lines" {
                let got = o.report.outputs["shift"].as_i64();
                ensure(got == Some(i64::from(shift)), || format!("{name} vs BDL^{k}: shift {got:?}, expected {shift}"))?;
            }
        }
        out.push(format!("{name}: BDL tower equivalent"));
    }
    let o = commands::equiv(&file_of(&corpus_curve(LINE)), &file_of(&corpus_curve(SKEW_LINES)), seed).map_err(err)?;
    ensure(o.report.outputs["decision"] == "inequivalent", || "line and skew lines not separated".into())?;
    let o = commands::equiv(&file_of(&corpus_curve(LINE)), &file_of(&corpus_curve(TWISTED_CUBIC)), seed).map_err(err)?;
    ensure(o.report.outputs["acm_class"] == true, || "line and twisted cubic not in the ACM class".into())?;
    out.push("line/skew lines inequivalent".into());
    Ok(out.join("; "))
}

/// A random homogeneous form with roughly half of the monomials present.
fn sparse_form<R: Rng>(ring: &RingContext, d: i32, rng: &mut R) -> Polynomial {
    let p = ring.field.characteristic();
    let mut terms: Vec<(Monomial, u32)> = Vec::new();
    for m in Monomial::all_of_degree(ring.num_vars, d as u32) {
        if rng.gen_bool(0.5) {
            terms.push((m, rng.gen_range(1..p)));
        }
    }
    if terms.is_empty() {
        return random_form(ring, d, rng);
    }
    Polynomial::from_terms(&ring.field, terms)
}

const ORACLE_DEGREE: i32 = 6;

fn engine_oracles(level: Level, seed: u64) -> Result<String, String> {
    let ring = RingContext::p3();
    let f = &ring.field;
    let p = u64::from(f.characteristic());
    let nv = ring.num_vars;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = match level {
        Level::Quick => 20,
        Level::Full => 30,
        Level::Acceptance => 100,
    };
    let (mut members, mut resolutions) = (0, 0);
    for i in 0..count {
        let ngens = rng.gen_range(2..=3);
        let gens: Vec<Polynomial> = (0..ngens).map(|_| sparse_form(&ring, rng.gen_range(1..=3), &mut rng)).collect();
        let ideal = Ideal::new(&ring, gens.clone()).map_err(err)?;
        let degs: Vec<i32> = gens.iter().map(|g| g.degree().unwrap_or(0) as i32).collect();
        let top = *degs.iter().max().unwrap_or(&1);
        let e = rng.gen_range(top..=ORACLE_DEGREE);
        let mut inside = Polynomial::zero();
        for (g, &d) in gens.iter().zip(&degs) {
            inside = inside.add(f, &random_form(&ring, e - d, &mut rng).mul(f, g));
        }
        let outside = sparse_form(&ring, e, &mut rng);
        for (k, q) in [inside, outside].iter().enumerate() {
            let a = ideal.contains(q);
            let b = oracle::ideal_member(&gens, q, nv, p);
            ensure(a == b, || format!("instance {i}: membership {a} vs oracle {b}"))?;
            ensure(k == 1 || a, || format!("instance {i}: combination of generators not in the ideal"))?;
            members += 1;
        }
        let row = ideal.as_row();
        let syz = syzygy_module(&row);
        ensure(syz.columns().iter().all(|c| row.apply(c).is_zero()), || format!("instance {i}: syzygy does not vanish"))?;
        let cols: Vec<Vec<Polynomial>> = syz.columns().iter().map(|c| c.entries(ngens)).collect();
        let col_degrees = syz.source().degrees();
        for d in 0..=ORACLE_DEGREE {
            let a = oracle::submodule_dim(&degs, &cols, &col_degrees, nv, d, p);
            let b = oracle::syzygy_dim(&gens, nv, d, p);
            ensure(a == b, || format!("instance {i}: syzygies in degree {d}: {a} vs oracle {b}"))?;
        }
        let res = minimal_free_resolution(&ModulePresentation::quotient_ring(&ideal), nv + 1).map_err(err)?;
        ensure(res.is_complex(), || format!("instance {i}: d ∘ d ≠ 0"))?;
        for d in 0..=ORACLE_DEGREE {
            let a = res.euler_characteristic(d);
            let b = oracle::quotient_dim(&gens, nv, d, p) as i64;
            ensure(a == b, || format!("instance {i}: Euler characteristic in degree {d}: {a} vs oracle {b}"))?;
        }
        resolutions += 1;
    }
    Ok(format!("{count} ideals up to degree {ORACLE_DEGREE}: {members} membership tests, {resolutions} resolutions"))
}
