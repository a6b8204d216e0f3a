//! Strictly descending biliaisons and descent to a minimal curve.

use rand::Rng;

use super::feasibility::{section_quotient_feasible, SECTION_ATTEMPTS};
use super::random::random_form;
use super::sections::{n_type_resolution, quotient_by, SectionSequence};
use super::step::{elementary_biliaison_rank2, BiliaisonStep};
use crate::error::{Error, Result};
use crate::modgb::{FreeModule, GradedMatrix, Ideal, ModulePresentation, Vector};
use crate::sheafcoh::{module_to_ideal, CurveIdeal, SheafModule};

const PERTURB_ATTEMPTS: usize = 8;

/// One candidate `(k, d)` examined by the descent search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveAttempt {
    pub index: usize,
    pub degree: i32,
    pub outcome: String,
}

#[derive(Clone, Debug)]
pub struct DescentLog {
    pub start: CurveIdeal,
    pub steps: Vec<BiliaisonStep>,
    pub terminal: CurveIdeal,
    /// The last step is the complete-intersection move onto a line.
    pub special_case: bool,
    /// Candidates rejected at the terminal curve.
    pub minimality: Vec<MoveAttempt>,
    pub bound_reached: bool,
}

impl DescentLog {
    pub fn heights(&self) -> Vec<i32> {
        self.steps.iter().map(|s| s.height).collect()
    }

    pub fn degrees(&self) -> Vec<i64> {
        let mut v = vec![self.start.degree()];
        v.extend(self.steps.iter().map(|s| s.to.degree()));
        v
    }
}

enum Move {
    Step(Box<BiliaisonStep>),
    Rejected(String),
}

/// Steps 2 and 3 for a chosen `s'` in `N/(t_<k)`.
fn complete_move<R: Rng>(seq: &SectionSequence, k: usize, s_new: &Vector, rng: &mut R, attempts: usize) -> Result<Move> {
    let ring = seq.module.ring();
    let fld = &ring.field;
    let t = &seq.sections;
    let b = &seq.degrees;
    let tries = if k + 1 == t.len() { 1 } else { attempts };
    for _ in 0..tries {
        let mut perturbed = Vec::with_capacity(t.len() - k - 1);
        for i in k + 1..t.len() {
            let f = random_form(ring, b[i] - b[k], rng);
            perturbed.push(t[i].add(fld, &t[k].mul_poly(fld, &f)));
        }
        let mut rest: Vec<Vector> = t[..k].to_vec();
        rest.extend(perturbed);
        let mut with_s = rest.clone();
        with_s.push(s_new.clone());
        let g = SheafModule::new(&quotient_by(&seq.module, &with_s));
        let (w, _) = match module_to_ideal(&g) {
            Ok(x) => x,
            Err(_) => continue,
        };
        if w.is_empty() {
            return Ok(Move::Rejected("quotient is the empty scheme".into()));
        }
        let e = quotient_by(&seq.module, &rest);
        let step = elementary_biliaison_rank2(&e, &t[k], s_new)?;
        return Ok(Move::Step(Box::new(step)));
    }
    Ok(Move::Rejected(format!("no perturbation in {tries} attempts gave a quotient satisfying T")))
}

/// Searches `s'` of degree `d` in `N/(t_<k)` and completes the move.
fn try_move<R: Rng>(seq: &SectionSequence, k: usize, d: i32, rng: &mut R) -> Result<Move> {
    let f = quotient_by(&seq.module, &seq.sections[..k]);
    let rep = section_quotient_feasible(&f, d, rng)?;
    if !rep.feasible() {
        return Ok(Move::Rejected(format!(
            "infeasible: dim = {}, rank E0 = {}, (a) {}, (b) {}",
            rep.sections, rep.e0_rank, rep.condition_a, rep.condition_b
        )));
    }
    complete_move(seq, k, &rep.witness.expect("feasible reports carry a witness"), rng, PERTURB_ATTEMPTS)
}

/// The strictly descending step on `W` obtained by comparing its section
/// sequence `b` with the sequence `a` of `V` on the same module.
pub fn descending_step<R: Rng>(a: &SectionSequence, b: &SectionSequence, rng: &mut R) -> Result<BiliaisonStep> {
    if a.module != b.module || a.len() != b.len() {
        return Err(Error::InvalidArgument("the sequences live on different modules".into()));
    }
    let k = (0..a.len()).find(|&i| a.degrees[i] != b.degrees[i]).ok_or(Error::TwistsNotComparable)?;
    if a.degrees[k] > b.degrees[k] {
        return Err(Error::TwistsNotComparable);
    }
    let d = a.degrees[k];
    let f = quotient_by(&b.module, &b.sections[..k]);
    let (s_new, _) = super::feasibility::general_section_quotient(&f, d, rng)?;
    match complete_move(b, k, &s_new, rng, SECTION_ATTEMPTS)? {
        Move::Step(s) => Ok(*s),
        Move::Rejected(why) => Err(Error::GenericityFailure {
            attempts: SECTION_ATTEMPTS,
            diagnostic: why,
        }),
    }
}

/// From `V(f, g)` with `deg f = n <= deg g = m`, `m >= 2`, to the line
/// `V(f, l)` on `f = 0`: height `1 - m`.
fn complete_intersection_step<R: Rng>(c: &CurveIdeal, rng: &mut R) -> Result<Option<BiliaisonStep>> {
    let ring = c.ring();
    let mut gens = c.ideal().gens().to_vec();
    if gens.len() != 2 {
        return Ok(None);
    }
    gens.sort_by_key(|p| p.degree());
    let (f, g) = (gens[0].clone(), gens[1].clone());
    let n = f.degree().unwrap_or(0) as i32;
    let m = g.degree().unwrap_or(0) as i32;
    if m < 2 {
        return Ok(None);
    }
    let mut line = None;
    for _ in 0..SECTION_ATTEMPTS {
        let l = random_form(ring, 1, rng);
        if Ideal::new(ring, vec![f.clone(), l.clone()])?.height() == 2 {
            line = Some(l);
            break;
        }
    }
    let l = line.ok_or_else(|| Error::GenericityFailure {
        attempts: SECTION_ATTEMPTS,
        diagnostic: "no linear form meets the surface properly".into(),
    })?;
    let target = FreeModule::new(vec![m, 1]);
    let cols = vec![
        Vector::from_entries(&ring.field, &[g, l]),
        Vector::from_poly(&f, 0),
        Vector::from_poly(&f, 1),
    ];
    let mat = GradedMatrix::from_columns(ring, target, cols)?;
    let e = ModulePresentation::image(&mat);
    let step = elementary_biliaison_rank2(&e, &Vector::unit(2), &Vector::unit(1))?;
    if step.from != *c || step.height != 1 - m || step.surface_degree != n {
        return Err(Error::InvalidArgument("complete intersection certificate is inconsistent".into()));
    }
    Ok(Some(step))
}

fn search<R: Rng>(seq: &SectionSequence, rng: &mut R, log: &mut Vec<MoveAttempt>) -> Result<Option<BiliaisonStep>> {
    let lo = seq.module.free_cover().degrees().into_iter().min().unwrap_or(0);
    for k in 0..seq.len() {
        for d in lo..seq.degrees[k] {
            match try_move(seq, k, d, rng)? {
                Move::Step(s) => return Ok(Some(*s)),
                Move::Rejected(outcome) => log.push(MoveAttempt { index: k, degree: d, outcome }),
            }
        }
    }
    Ok(None)
}

/// Applies strictly descending biliaisons until none is found.
pub fn descend_to_minimal<R: Rng>(c: &CurveIdeal, rng: &mut R) -> Result<DescentLog> {
    if c.is_empty() {
        return Err(Error::InvalidCurve("descent starts from a nonempty curve".into()));
    }
    let mut cur = c.clone();
    let mut steps = Vec::new();
    let mut special_case = false;
    for _ in 0..c.degree() {
        let seq = n_type_resolution(&cur, 0)?;
        let mut rejected = Vec::new();
        let step = match search(&seq, rng, &mut rejected)? {
            Some(s) => s,
            None => match complete_intersection_step(&cur, rng)? {
                Some(s) => {
                    special_case = true;
                    s
                }
                None => {
                    return Ok(DescentLog {
                        start: c.clone(),
                        steps,
                        terminal: cur,
                        special_case,
                        minimality: rejected,
                        bound_reached: false,
                    })
                }
            },
        };
        if step.height >= 0 || step.to.degree() >= cur.degree() {
            return Err(Error::InvalidArgument(format!("step of height {} is not descending", step.height)));
        }
        cur = step.to.clone();
        steps.push(step);
    }
    Ok(DescentLog {
        start: c.clone(),
        steps,
        terminal: cur,
        special_case,
        minimality: Vec::new(),
        bound_reached: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liaison::basic_double_link;
    use crate::ring::RingContext;
    use crate::sheafcoh::rao_module;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn curve(gens: &[&str]) -> CurveIdeal {
        CurveIdeal::new(Ideal::parse(&RingContext::p3(), gens).unwrap()).unwrap()
    }

    #[test]
    fn line_is_minimal() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let log = descend_to_minimal(&curve(&["x0", "x1"]), &mut rng).unwrap();
        assert!(log.steps.is_empty());
        assert!(!log.minimality.is_empty());
    }

    #[test]
    fn complete_intersection_descends_to_line() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let c = curve(&["x0^2 + x1*x2", "x3^3 + x0*x1*x2"]);
        let log = descend_to_minimal(&c, &mut rng).unwrap();
        assert_eq!(log.terminal.degree(), 1);
        assert!(log.heights().iter().all(|&h| h < 0));
        let total: i64 = log.steps.iter().map(|s| i64::from(s.height) * i64::from(s.surface_degree)).sum();
        assert_eq!(6 + total, 1);
    }

    #[test]
    fn twisted_cubic() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c = curve(&["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]);
        let log = descend_to_minimal(&c, &mut rng).unwrap();
        assert_eq!(log.terminal.degree(), 1);
        assert!(!log.special_case);
    }

    #[test]
    fn bdl_of_skew_lines() {
        let r = RingContext::p3();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let c = curve(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        let up = basic_double_link(&c, &r.parse("x0*x2 + x1*x3").unwrap(), 1, &mut rng).unwrap();
        let log = descend_to_minimal(&up.to, &mut rng).unwrap();
        assert_eq!(log.terminal.degree(), 2);
        let m = rao_module(&log.terminal).unwrap();
        assert_eq!((m.total_dim(), m.dim(0)), (1, 1));
    }

    #[test]
    fn descending_step_needs_comparable_twists() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let nt = n_type_resolution(&curve(&["x0", "x1"]), 0).unwrap();
        assert!(matches!(descending_step(&nt, &nt, &mut rng), Err(Error::TwistsNotComparable)));
    }
}
