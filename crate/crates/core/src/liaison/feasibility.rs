//! Quotients of a module by one general section of a given degree.

use rand::Rng;

use super::random::{degree_basis, random_combination};
use super::sections::quotient_by;
use crate::error::{Error, Result};
use crate::modgb::{GradedMatrix, ModulePresentation, Vector};
use crate::sheafcoh::{check_condition_t, generic_rank, SheafModule};

/// Random sections tried before declaring a degree infeasible.
pub const WITNESS_ATTEMPTS: usize = 4;
/// Random sections tried by [`general_section_quotient`].
pub const SECTION_ATTEMPTS: usize = 32;

#[derive(Clone, Debug)]
pub struct FeasibilityReport {
    pub degree: i32,
    /// `dim E_d`.
    pub sections: usize,
    /// Rank of the subsheaf `E0` generated by `E_d`.
    pub e0_rank: usize,
    /// A random section with a torsion-free quotient locally free in
    /// codimension 1 was found.
    pub condition_a: bool,
    /// `rank E0 >= 2`, or `E0` is free of rank 1 with a good quotient.
    pub condition_b: bool,
    pub witness: Option<Vector>,
    pub attempts: usize,
}

impl FeasibilityReport {
    pub fn feasible(&self) -> bool {
        self.condition_a && self.condition_b
    }
}

fn good_quotient(e: &ModulePresentation, rank: usize, s: &Vector) -> bool {
    let q = SheafModule::new(&quotient_by(e, std::slice::from_ref(s)));
    q.rank() + 1 == rank && check_condition_t(&q).passes()
}

fn e0_is_free_line(e: &ModulePresentation, basis: &[Vector], rank: usize) -> bool {
    let gens = GradedMatrix::from_columns(e.ring(), e.free_cover().clone(), basis.to_vec()).expect("homogeneous");
    let e0 = SheafModule::new(&crate::homalg::subquotient(&gens, e.relations()));
    if !(e0.is_dissocie() && e0.module().num_generators() == 1) {
        return false;
    }
    let q = SheafModule::new(&quotient_by(e, basis));
    q.rank() + 1 == rank && check_condition_t(&q).passes()
}

/// Decides whether a general `s ∈ E_d` has a quotient `E/(s)` satisfying T.
pub fn section_quotient_feasible<R: Rng>(e: &ModulePresentation, d: i32, rng: &mut R) -> Result<FeasibilityReport> {
    let ring = e.ring();
    let rank = generic_rank(e);
    if rank < 2 {
        return Err(Error::RankTooSmall(rank));
    }
    let basis = degree_basis(e, d);
    let mut rep = FeasibilityReport {
        degree: d,
        sections: basis.len(),
        e0_rank: 0,
        condition_a: false,
        condition_b: false,
        witness: None,
        attempts: 0,
    };
    if basis.is_empty() {
        return Ok(rep);
    }
    let with_w = ModulePresentation::cokernel(
        &e.relations()
            .concat(&GradedMatrix::from_columns(ring, e.free_cover().clone(), basis.clone()).expect("homogeneous")),
    );
    rep.e0_rank = rank - generic_rank(&with_w);
    rep.condition_b = rep.e0_rank >= 2 || (rep.e0_rank == 1 && e0_is_free_line(e, &basis, rank));
    if !rep.condition_b {
        return Ok(rep);
    }
    for _ in 0..WITNESS_ATTEMPTS {
        rep.attempts += 1;
        let s = random_combination(ring, &basis, rng);
        if !s.is_zero() && good_quotient(e, rank, &s) {
            rep.condition_a = true;
            rep.witness = Some(s);
            break;
        }
    }
    Ok(rep)
}

/// A general `s ∈ E_d` with `E/(s)` satisfying T, and the quotient.
pub fn general_section_quotient<R: Rng>(
    e: &ModulePresentation,
    d: i32,
    rng: &mut R,
) -> Result<(Vector, ModulePresentation)> {
    let ring = e.ring();
    let rank = generic_rank(e);
    if rank < 2 {
        return Err(Error::RankTooSmall(rank));
    }
    let basis = degree_basis(e, d);
    if basis.is_empty() {
        return Err(Error::GenericityFailure {
            attempts: 0,
            diagnostic: format!("no elements of degree {d}"),
        });
    }
    for _ in 0..SECTION_ATTEMPTS {
        let s = random_combination(ring, &basis, rng);
        if !s.is_zero() && good_quotient(e, rank, &s) {
            let q = quotient_by(e, std::slice::from_ref(&s));
            return Ok((s, q));
        }
    }
    let rep = section_quotient_feasible(e, d, rng)?;
    Err(Error::GenericityFailure {
        attempts: SECTION_ATTEMPTS,
        diagnostic: format!(
            "degree {d}: dim E_d = {}, rank E0 = {}, condition (b) {}",
            rep.sections,
            rep.e0_rank,
            if rep.condition_b { "holds" } else { "fails" }
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liaison::n_type_resolution;
    use crate::modgb::{FreeModule, Ideal};
    use crate::ring::RingContext;
    use crate::sheafcoh::CurveIdeal;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn free_modules() {
        let r = RingContext::p3();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let e = ModulePresentation::free(&r, FreeModule::new(vec![-1, -1, 0]));
        let rep = section_quotient_feasible(&e, 1, &mut rng).unwrap();
        assert!(rep.feasible());
        assert_eq!(rep.e0_rank, 3);
        let rep = section_quotient_feasible(&e, -1, &mut rng).unwrap();
        assert!(!rep.feasible() && !rep.condition_a && rep.sections == 0);
        let (_, q) = general_section_quotient(&e, 1, &mut rng).unwrap();
        let q = SheafModule::new(&q);
        assert_eq!(q.rank(), 2);
        assert!(check_condition_t(&q).passes());
        let line = ModulePresentation::free(&r, FreeModule::new(vec![0]));
        assert!(matches!(section_quotient_feasible(&line, 0, &mut rng), Err(Error::RankTooSmall(1))));
    }

    #[test]
    fn rank_one_e0() {
        // E0 = S·e0 is free, E/E0 = S(-3)
        let r = RingContext::p3();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let e = ModulePresentation::free(&r, FreeModule::new(vec![-2, -3]));
        let rep = section_quotient_feasible(&e, 2, &mut rng).unwrap();
        assert_eq!(rep.e0_rank, 1);
        assert!(rep.feasible());
    }

    #[test]
    fn skew_lines_module() {
        let r = RingContext::p3();
        let c = CurveIdeal::new(Ideal::parse(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]).unwrap()).unwrap();
        let nt = n_type_resolution(&c, 0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let d = *nt.module.free_cover().degrees().iter().min().unwrap();
        let rep = section_quotient_feasible(&nt.module, d, &mut rng).unwrap();
        assert!(rep.condition_b);
        let lo = section_quotient_feasible(&nt.module, d - 1, &mut rng).unwrap();
        assert!(!lo.feasible());
    }
}
