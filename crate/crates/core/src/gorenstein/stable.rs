//! Stable equivalence: isomorphism after cancelling free summands.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::syzygy::resolve;
use crate::liaison::{find_isomorphism, split_free_summands};
use crate::modgb::ModulePresentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StableDecision {
    Equivalent,
    Inequivalent,
    Inconclusive,
}

fn sorted(mut v: Vec<i32>) -> Vec<i32> {
    v.sort_unstable();
    v
}

/// Compares the parts without free summands: Betti numbers of a capped
/// resolution, then a random isomorphism search.
pub fn stably_equivalent(a: &ModulePresentation, b: &ModulePresentation, seed: u64) -> StableDecision {
    let ca = split_free_summands(a).core;
    let cb = split_free_summands(b).core;
    let (Ok(ra), Ok(rb)) = (resolve(&ca, 3), resolve(&cb, 3)) else {
        return StableDecision::Inconclusive;
    };
    let len = ra.differentials().len().max(rb.differentials().len());
    for i in 0..=len {
        let (fa, fb) = (
            if i <= ra.differentials().len() { ra.free_module(i).degrees() } else { Vec::new() },
            if i <= rb.differentials().len() { rb.free_module(i).degrees() } else { Vec::new() },
        );
        if sorted(fa) != sorted(fb) {
            return StableDecision::Inequivalent;
        }
    }
    if ca.num_generators() == 0 {
        return StableDecision::Equivalent;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match find_isomorphism(&ca, &cb, &mut rng) {
        Some(_) => StableDecision::Equivalent,
        None => StableDecision::Inconclusive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgb::{FreeModule, Ideal};
    use crate::ring::RingContext;

    #[test]
    fn free_summands_cancel() {
        let r = RingContext::p3();
        let i = ModulePresentation::of_ideal(&Ideal::parse(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]).unwrap());
        let j = i.direct_sum(&ModulePresentation::free(&r, FreeModule::new(vec![3])));
        assert_eq!(stably_equivalent(&i, &j, 0), StableDecision::Equivalent);
        let line = ModulePresentation::of_ideal(&Ideal::parse(&r, &["x0", "x1"]).unwrap());
        assert_eq!(stably_equivalent(&i, &line, 0), StableDecision::Inequivalent);
        assert_eq!(stably_equivalent(&i, &i.shift(1), 0), StableDecision::Inequivalent);
    }
}
