//! Subcommands. Each returns a report and the exit code it implies.

use biliaison_core::gorenstein::{is_mcm, mcm_triple, realize_triple, stably_equivalent, StableDecision};
use biliaison_core::homalg::{ext_module, minimal_free_resolution, IsoResult};
use biliaison_core::liaison::{
    basic_double_link, build_extraverti, connect_minimal, descend_to_minimal, n_type_resolution, same_biliaison_class,
    verify_rao_shift, BiliaisonStep, ClassDecision,
};
use biliaison_core::modgb::ModulePresentation;
use biliaison_core::ring::Polynomial;
use biliaison_core::sheafcoh::{check_condition_t, h1_star, rao_module, unmixed_check, CurveIdeal, SheafModule};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{exit, CliError, CliResult};
use crate::idealfile::{render, IdealFile};
use crate::report::{betti_json, dims_json, RunReport};
use crate::suite::{self, Level};

const ISO_SEED: u64 = 0x1d;

#[derive(Clone, Debug)]
pub struct Outcome {
    pub report: RunReport,
    pub code: i32,
}

impl Outcome {
    fn from_report(report: RunReport) -> Self {
        let code = if report.all_ok() { exit::OK } else { exit::ASSERTION };
        Outcome { report, code }
    }
}

/// The surface of a basic double link.
#[derive(Clone, Debug)]
pub enum SurfaceSpec {
    /// Index into the generators as written in the file.
    Generator(usize),
    Text(String),
}

fn curve(file: &IdealFile) -> CliResult<CurveIdeal> {
    Ok(CurveIdeal::new(file.ideal.clone())?)
}

fn curve_json(c: &CurveIdeal) -> Value {
    json!({
        "ideal": c.ideal().to_strings(),
        "degree": c.degree(),
        "genus": c.genus(),
    })
}

fn step_json(s: &BiliaisonStep) -> Value {
    json!({
        "from_degree": s.from.degree(),
        "to_degree": s.to.degree(),
        "height": s.height,
        "surface": s.from.ring().print(&s.surface),
        "surface_degree": s.surface_degree,
        "to": s.to.ideal().to_strings(),
    })
}

fn degree_law(s: &BiliaisonStep) -> bool {
    s.to.degree() == s.from.degree() + i64::from(s.height) * i64::from(s.surface_degree)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Saturation, height, unmixedness, degree, genus, Betti table and Rao
/// module of the input ideal.
pub fn info(file: &IdealFile) -> CliResult<Outcome> {
    let mut r = RunReport::new("info", 0);
    r.input("ideal", &file.digest);
    let saturated = file.ideal.is_saturated();
    let sat = if saturated { file.ideal.clone() } else { file.ideal.saturate() };
    let mut warnings = Vec::new();
    if !saturated {
        warnings.push("input ideal is not saturated; its saturation is used".to_string());
        r.output("saturation", json!(sat.to_strings()));
    }
    r.output("saturated", json!(saturated));
    r.output("warnings", json!(warnings));
    let height = sat.height();
    r.output("height", json!(height));
    if height != 2 {
        return Err(CliError::Invalid(format!("ideal has height {height}, a curve needs 2")));
    }
    let unmixed = unmixed_check(&sat)?.unmixed;
    r.output("unmixed", json!(unmixed));
    if !unmixed {
        return Err(CliError::Invalid("ideal is not unmixed".into()));
    }
    let c = CurveIdeal::new(sat.clone())?;
    r.output("degree", json!(c.degree()));
    r.output("genus", json!(c.genus()));
    let res = minimal_free_resolution(&ModulePresentation::quotient_ring(&sat), c.ring().num_vars + 1)?;
    r.output("betti", betti_json(&res.betti_table()?));
    r.output("resolution_complete", json!(res.is_complete()));
    r.assert("resolution_is_complex", res.is_complex(), "d ∘ d = 0");
    r.output("rao_dims", dims_json(&rao_module(&c)?));
    Ok(Outcome::from_report(r))
}

/// A basic double link of height `h` on the given surface.
pub fn bdl(file: &IdealFile, surface: &SurfaceSpec, h: i32, seed: u64) -> CliResult<Outcome> {
    if h <= 0 {
        return Err(CliError::Invalid(format!("height must be positive, got {h}")));
    }
    let ring = &file.ring;
    let c = curve(file)?;
    let f: Polynomial = match surface {
        SurfaceSpec::Generator(i) => {
            let text = file
                .generators
                .get(*i)
                .ok_or_else(|| CliError::Invalid(format!("no generator with index {i}")))?;
            ring.parse_homogeneous(text)?
        }
        SurfaceSpec::Text(t) => ring.parse_homogeneous(t)?,
    };
    if f.is_zero() || !c.ideal().contains(&f) {
        return Err(CliError::Invalid("surface does not contain the curve".into()));
    }
    let mut r = RunReport::new("bdl", seed);
    r.input("ideal", &file.digest);
    let step = basic_double_link(&c, &f, h, &mut rng(seed))?;
    r.assert(
        "degree_law",
        degree_law(&step),
        format!("{} = {} + {}·{}", step.to.degree(), step.from.degree(), h, step.surface_degree),
    );
    r.assert("certificate", step.certificate.verify().is_ok(), "the rank-two quotients reproduce both curves");
    r.assert("rao_shift", verify_rao_shift(&step, seed)?, format!("M(C')_d+{h} ≅ M(C)_d"));
    r.output("step", step_json(&step));
    r.output("curve", curve_json(&step.to));
    r.output("rao_dims", dims_json(&rao_module(&step.to)?));
    r.output("ideal_file", json!(render(step.to.ideal())));
    Ok(Outcome::from_report(r))
}

/// Strict descent to a minimal curve of the class.
pub fn descend(file: &IdealFile, seed: u64) -> CliResult<Outcome> {
    let c = curve(file)?;
    let mut r = RunReport::new("descend", seed);
    r.input("ideal", &file.digest);
    let log = descend_to_minimal(&c, &mut rng(seed))?;
    let heights = log.heights();
    r.assert("strictly_descending", heights.iter().all(|&h| h < 0), format!("heights {heights:?}"));
    r.assert("degree_law", log.steps.iter().all(degree_law), format!("degrees {:?}", log.degrees()));
    let mut rao_ok = true;
    for s in &log.steps {
        rao_ok &= verify_rao_shift(s, seed)?;
    }
    r.assert("rao_shift", rao_ok, "every step shifts the Rao module by its height");
    r.assert("bound_respected", !log.bound_reached, "descent ended before the degree bound");
    r.output("steps", Value::Array(log.steps.iter().map(step_json).collect()));
    r.output("terminal", curve_json(&log.terminal));
    r.output("terminal_rao_dims", dims_json(&rao_module(&log.terminal)?));
    r.output("special_case", json!(log.special_case));
    Ok(Outcome::from_report(r))
}

/// Whether two curves in `ℙ³` lie in one biliaison class.
pub fn equiv(a: &IdealFile, b: &IdealFile, seed: u64) -> CliResult<Outcome> {
    let (ca, cb) = (curve(a)?, curve(b)?);
    let mut r = RunReport::new("equiv", seed);
    r.input("first", &a.digest);
    r.input("second", &b.digest);
    let (ma, mb) = (rao_module(&ca)?, rao_module(&cb)?);
    let decision = same_biliaison_class(&ca, &cb, seed)?;
    let (name, shift) = match decision {
        ClassDecision::Equivalent(h) => ("equivalent", Some(h)),
        ClassDecision::Inequivalent => ("inequivalent", None),
        ClassDecision::Inconclusive => ("inconclusive", None),
    };
    if let Some(h) = shift {
        let consistent = ma.dims().iter().all(|(&d, &n)| mb.dim(d + h) == n) && ma.total_dim() == mb.total_dim();
        r.assert("rao_dims_consistent", consistent, format!("dim M2 in degree d+{h} equals dim M1 in degree d"));
    }
    r.output("decision", json!(name));
    r.output("shift", json!(shift));
    r.output("acm_class", json!(ma.is_zero() && mb.is_zero()));
    r.output("rao_dims", json!([dims_json(&ma), dims_json(&mb)]));
    let mut out = Outcome::from_report(r);
    if decision == ClassDecision::Inconclusive && out.code == exit::OK {
        out.code = exit::INCONCLUSIVE;
    }
    Ok(out)
}

/// The N-type resolution `0 -> L -> N -> I_C -> 0`.
pub fn ntype(file: &IdealFile) -> CliResult<Outcome> {
    let c = curve(file)?;
    let mut r = RunReport::new("ntype", 0);
    r.input("ideal", &file.digest);
    let nt = n_type_resolution(&c, 0)?;
    let n = SheafModule::new(&nt.module);
    r.assert("ext1_vanishes", ext_module(&nt.module, 1, 0)?.is_zero(), "Ext^1(N, S) = 0");
    r.assert("condition_t", check_condition_t(&n).passes(), "N satisfies condition T");
    r.assert("exact", nt.is_exact(), "the sections are independent and the quotient is I_C");
    let (h, m) = (h1_star(&n)?, rao_module(&c)?);
    let same = (h.is_zero() && m.is_zero()) || h.iso_up_to_shift(&m, ISO_SEED) == IsoResult::Equivalent(0);
    r.assert("h1_preserved", same, "H^1_*(N) ≅ M(C)");
    r.output("generator_degrees", json!(nt.module.free_cover().degrees()));
    r.output("relation_degrees", json!(nt.module.relations().source().degrees()));
    r.output("section_degrees", json!(nt.degrees));
    r.output("dissocie", json!(nt.module.relations().ncols() == 0));
    Ok(Outcome::from_report(r))
}

/// The triple `(M, P, α)` of the extraverti module of a curve.
pub fn triple(file: &IdealFile, seed: u64) -> CliResult<Outcome> {
    let c = curve(file)?;
    let mut r = RunReport::new("triple", seed);
    r.input("ideal", &file.digest);
    let x = build_extraverti(&c.sheaf(0))?;
    let e = SheafModule::new(&x.module);
    let t = mcm_triple(&e)?;
    r.assert("p_is_mcm", is_mcm(&t.p), "depth P = dim R");
    r.assert("alpha_surjective", t.alpha_surjective(), "P^∨ -> M* is onto");
    let back = realize_triple(&t)?;
    let decision = stably_equivalent(back.module(), e.module(), seed);
    r.assert(
        "realization_stably_equivalent",
        decision == StableDecision::Equivalent,
        format!("{decision:?}"),
    );
    r.output("m_dims", dims_json(&t.m));
    r.output("p_generator_degrees", json!(t.p.free_cover().degrees()));
    r.output("p_relation_degrees", json!(t.p.relations().source().degrees()));
    r.output("p_free", json!(t.p_is_free()));
    r.output("extraverti_generator_degrees", json!(x.module.free_cover().degrees()));
    let mut out = Outcome::from_report(r);
    if decision == StableDecision::Inconclusive {
        out.code = exit::INCONCLUSIVE;
    }
    Ok(out)
}

/// A chain of height-zero elementary biliaisons between two minimal curves.
pub fn connect(a: &IdealFile, b: &IdealFile, seed: u64) -> CliResult<Outcome> {
    let (ca, cb) = (curve(a)?, curve(b)?);
    let mut r = RunReport::new("connect-minimal", seed);
    r.input("first", &a.digest);
    r.input("second", &b.digest);
    let mut g = rng(seed);
    let (na, nb) = (n_type_resolution(&ca, 0)?, n_type_resolution(&cb, 0)?);
    let steps = connect_minimal(&na, &nb, &mut g)?;
    r.assert("height_zero", steps.iter().all(|s| s.height == 0), "every step has height 0");
    r.assert("degree_law", steps.iter().all(degree_law), "degree is constant along the chain");
    let linked = steps.windows(2).all(|w| w[0].to == w[1].from);
    r.assert("chain_is_connected", linked, "each step starts where the previous one ends");
    r.output("steps", Value::Array(steps.iter().map(step_json).collect()));
    Ok(Outcome::from_report(r))
}

/// Runs the built-in acceptance checks.
pub fn selftest(level: Level, seed: u64) -> CliResult<Outcome> {
    let mut r = RunReport::new("selftest", seed);
    r.output("level", json!(level.name()));
    let mut details = Vec::new();
    for c in suite::run(level, seed) {
        r.assert(&format!("criterion_{:02}_{}", c.id, c.name), c.ok, c.details.clone());
        details.push(json!({"id": c.id, "name": c.name, "ok": c.ok}));
    }
    r.output("criteria", Value::Array(details));
    Ok(Outcome::from_report(r))
}
