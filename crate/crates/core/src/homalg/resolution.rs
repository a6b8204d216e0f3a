//! Minimal graded free resolutions and Betti tables.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::modgb::{syzygy_module, FreeModule, GradedMatrix, ModulePresentation};
use crate::ring::RingContext;

/// `0 <- M <- F0 <-d1- F1 <-d2- ... <-dl- Fl`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    ring: RingContext,
    differentials: Vec<GradedMatrix>,
    free0: FreeModule,
    resolved: ModulePresentation,
    complete: bool,
}

impl FreeResolution {
    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    /// `d_1, d_2, ...` (the matrix at index `i` is `d_{i+1}`).
    pub fn differentials(&self) -> &[GradedMatrix] {
        &self.differentials
    }

    pub fn differential(&self, i: usize) -> &GradedMatrix {
        &self.differentials[i - 1]
    }

    /// `F_i`; index 0 is the free cover.
    pub fn free_module(&self, i: usize) -> FreeModule {
        if i == 0 {
            self.free0.clone()
        } else if i <= self.differentials.len() {
            self.differentials[i - 1].source().clone()
        } else {
            FreeModule::zero()
        }
    }

    /// Index of the last nonzero free module.
    pub fn length(&self) -> usize {
        (0..=self.differentials.len())
            .rev()
            .find(|&i| self.free_module(i).rank() > 0)
            .unwrap_or(0)
    }

    /// The minimal presentation the resolution starts from.
    pub fn resolved(&self) -> &ModulePresentation {
        &self.resolved
    }

    /// False when a cap cut the resolution short of exactness.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_minimal(&self) -> bool {
        self.differentials.iter().all(|d| !d.has_unit_entry())
    }

    /// `d_i ∘ d_{i+1} = 0` for all `i`, modulo the ring relation.
    pub fn is_complex(&self) -> bool {
        self.differentials
            .windows(2)
            .all(|w| w[0].compose(&w[1]).is_zero_in_ring())
    }

    pub fn betti_table(&self) -> Result<BettiTable> {
        if !self.is_minimal() {
            return Err(Error::NotMinimal);
        }
        let mut t = BettiTable::default();
        for i in 0..=self.differentials.len() {
            for d in self.free_module(i).degrees() {
                *t.entries.entry((i, d)).or_default() += 1;
            }
        }
        Ok(t)
    }

    /// `Σ (-1)^i dim (F_i)_n`, which equals `dim M_n` for complete
    /// resolutions over a polynomial ring.
    pub fn euler_characteristic(&self, n: i32) -> i64 {
        let nv = self.ring.num_vars as u64;
        let mut acc = 0i64;
        for i in 0..=self.differentials.len() {
            for d in self.free_module(i).degrees() {
                let e = n - d;
                if e >= 0 {
                    let c = crate::modgb::ops::binomial(nv + e as u64 - 1, e as u64) as i64;
                    acc += if i % 2 == 0 { c } else { -c };
                }
            }
        }
        acc
    }
}

/// Minimal free resolution of `m`.
///
/// Over a polynomial ring the resolution is computed to exactness and
/// `cap` only guards against runaway input; over a quotient ring at most
/// `cap` differentials are computed and the result is marked incomplete if
/// the next syzygy module is nonzero.
pub fn minimal_free_resolution(m: &ModulePresentation, cap: usize) -> Result<FreeResolution> {
    let ring = m.ring().clone();
    let pres = m.minimal();
    let free0 = pres.free_cover().clone();
    let mut diffs: Vec<GradedMatrix> = Vec::new();
    let d1 = pres.relations().clone();
    let mut complete = true;
    if d1.ncols() > 0 {
        diffs.push(d1);
        loop {
            let last = diffs.last().unwrap();
            let syz = syzygy_module(last);
            if syz.ncols() == 0 {
                break;
            }
            if diffs.len() >= cap {
                if ring.is_quotient() {
                    complete = false;
                    break;
                }
                return Err(Error::CapExceeded(cap));
            }
            diffs.push(syz);
        }
    }
    Ok(FreeResolution {
        ring,
        differentials: diffs,
        free0,
        resolved: pres,
        complete,
    })
}

/// Resolution of `coker(d1)` when `d1` is already minimal; `cap` as above.
pub fn resolve_matrix(d1: &GradedMatrix, cap: usize) -> Result<FreeResolution> {
    minimal_free_resolution(&ModulePresentation::cokernel(d1), cap)
}

/// Graded Betti numbers `β_{i,j}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub entries: BTreeMap<(usize, i32), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total rank of the i-th free module.
    pub fn rank(&self, i: usize) -> usize {
        self.entries.iter().filter(|((k, _), _)| *k == i).map(|(_, v)| v).sum()
    }

    pub fn length(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Castelnuovo-Mumford regularity `max (j - i)`.
    pub fn regularity(&self) -> Option<i32> {
        self.entries.keys().map(|&(i, j)| j - i as i32).max()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.entries.keys().map(|&(_, j)| j).max()
    }

    /// Rows `(i, [(j, β_ij)])`.
    pub fn rows(&self) -> Vec<(usize, Vec<(i32, usize)>)> {
        let mut out: Vec<(usize, Vec<(i32, usize)>)> = Vec::new();
        for (&(i, j), &b) in &self.entries {
            match out.last_mut() {
                Some((k, v)) if *k == i => v.push((j, b)),
                _ => out.push((i, vec![(j, b)])),
            }
        }
        out
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay2-style layout: rows indexed by `j - i`, columns by `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "0");
        }
        let len = self.length();
        let lo = self.entries.keys().map(|&(i, j)| j - i as i32).min().unwrap();
        let hi = self.regularity().unwrap();
        write!(f, "     ")?;
        for i in 0..=len {
            write!(f, "{i:>4}")?;
        }
        writeln!(f)?;
        for r in lo..=hi {
            write!(f, "{r:>4}:")?;
            for i in 0..=len {
                match self.get(i, r + i as i32) {
                    0 => write!(f, "   .")?,
                    b => write!(f, "{b:>4}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgb::Ideal;

    #[test]
    fn line_resolution_shape() {
        let r = RingContext::p3();
        let i = Ideal::parse(&r, &["x0", "x1"]).unwrap();
        let res = minimal_free_resolution(&ModulePresentation::of_ideal(&i), 10).unwrap();
        assert_eq!(res.free_module(0).twists(), &[-1, -1]);
        assert_eq!(res.free_module(1).twists(), &[-2]);
        assert_eq!(res.length(), 1);
        let b = res.betti_table().unwrap();
        assert_eq!(b.get(0, 1), 2);
        assert_eq!(b.get(1, 2), 1);
    }

    #[test]
    fn skew_lines_betti() {
        let r = RingContext::p3();
        let i = Ideal::parse(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]).unwrap();
        let res = minimal_free_resolution(&ModulePresentation::quotient_ring(&i), 10).unwrap();
        let b = res.betti_table().unwrap();
        assert_eq!((b.get(1, 2), b.get(2, 3), b.get(3, 4)), (4, 4, 1));
        assert!(res.is_complex());
        for n in -2..8 {
            assert_eq!(res.euler_characteristic(n), res.resolved().hilbert_function(n) as i64);
        }
    }

    #[test]
    fn twisted_cubic_and_free() {
        let r = RingContext::p3();
        let i = Ideal::parse(&r, &["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]).unwrap();
        let b = minimal_free_resolution(&ModulePresentation::of_ideal(&i), 10)
            .unwrap()
            .betti_table()
            .unwrap();
        assert_eq!((b.get(0, 2), b.get(1, 3)), (3, 2));
        let free = ModulePresentation::free(&r, FreeModule::new(vec![0, -3]));
        let res = minimal_free_resolution(&free, 10).unwrap();
        assert_eq!(res.length(), 0);
        assert!(minimal_free_resolution(&ModulePresentation::zero(&r), 10)
            .unwrap()
            .betti_table()
            .unwrap()
            .is_empty());
    }

    #[test]
    fn quotient_ring_resolution_is_capped() {
        let r = RingContext::quadric_threefold();
        let i = Ideal::parse(&r, &["x0", "x1", "x2", "x3", "x4"]).unwrap();
        let res = minimal_free_resolution(&ModulePresentation::quotient_ring(&i), 6).unwrap();
        assert!(!res.is_complete());
        assert!(res.is_complex());
        assert!(res.is_minimal());
    }
}
