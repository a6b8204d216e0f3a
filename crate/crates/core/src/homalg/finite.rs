//! Finite-length graded modules as explicit linear data.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::modgb::{DenseMatrix, FreeModule, GradedMatrix, ModulePresentation, Term, Vector};
use crate::ring::{Monomial, RingContext};

/// Largest total dimension accepted.
pub const MAX_LENGTH: usize = 4096;

/// A finite-length graded module: a basis in each degree and the action of
/// every variable.
#[derive(Clone, Debug)]
pub struct FiniteLengthModule {
    ring: RingContext,
    dims: BTreeMap<i32, usize>,
    /// `actions[(d, v)]`: matrix of `x_v : M_d -> M_{d+1}` (columns = basis
    /// of `M_d`).
    actions: BTreeMap<(i32, usize), DenseMatrix>,
    presentation: ModulePresentation,
}

/// Outcome of an isomorphism search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoResult {
    /// `M ≅ N(h)`, i.e. `M_d ≅ N_{d+h}` compatibly with the action.
    Equivalent(i32),
    Inequivalent,
    Inconclusive,
}

impl FiniteLengthModule {
    /// Reads the linear data off a presentation.
    pub fn from_presentation(m: &ModulePresentation) -> Result<Self> {
        let pres = m.minimal();
        let ring = pres.ring().clone();
        if !pres.is_finite_length() {
            return Err(Error::NotFiniteLength);
        }
        let gb = pres.gb();
        let mut dims = BTreeMap::new();
        let mut bases: BTreeMap<i32, Vec<(Monomial, usize)>> = BTreeMap::new();
        let gen_degs = pres.free_cover().degrees();
        let lo = gen_degs.iter().copied().min().unwrap_or(0);
        let hi = gen_degs.iter().copied().max().unwrap_or(lo);
        let mut total = 0;
        let mut d = lo;
        while !gen_degs.is_empty() {
            let basis = crate::modgb::ops::standard_basis(&gb, d);
            if basis.is_empty() {
                if d > hi {
                    break;
                }
            } else {
                total += basis.len();
                if total > MAX_LENGTH {
                    return Err(Error::NotFiniteLength);
                }
                dims.insert(d, basis.len());
                bases.insert(d, basis);
            }
            d += 1;
        }
        let f = &ring.field;
        let mut actions = BTreeMap::new();
        for (&d, basis) in &bases {
            let Some(next) = bases.get(&(d + 1)) else { continue };
            let index: BTreeMap<(u64, usize), usize> =
                next.iter().enumerate().map(|(k, (m, c))| ((m.raw(), *c), k)).collect();
            for v in 0..ring.num_vars {
                let mut a = DenseMatrix::zeros(f, next.len(), basis.len());
                for (col, &(m, c)) in basis.iter().enumerate() {
                    let e = Vector::from_sorted(vec![Term {
                        mon: m.mul(&Monomial::var(v)),
                        comp: c as u32,
                        coef: 1,
                    }]);
                    let nf = gb.normal_form(&e);
                    for t in nf.terms() {
                        let row = index[&(t.mon.raw(), t.comp as usize)];
                        a.set(row, col, t.coef);
                    }
                }
                actions.insert((d, v), a);
            }
        }
        Ok(FiniteLengthModule {
            ring,
            dims,
            actions,
            presentation: pres,
        })
    }

    /// Builds the module from dimensions and action matrices; missing
    /// actions are zero.
    pub fn from_actions(
        ring: &RingContext,
        dims: BTreeMap<i32, usize>,
        actions: BTreeMap<(i32, usize), DenseMatrix>,
    ) -> Self {
        let dims: BTreeMap<i32, usize> = dims.into_iter().filter(|(_, n)| *n > 0).collect();
        let f = &ring.field;
        // generators: every basis vector; offsets per degree
        let mut offset = BTreeMap::new();
        let mut degrees = Vec::new();
        for (&d, &n) in &dims {
            offset.insert(d, degrees.len());
            degrees.extend(std::iter::repeat_n(d, n));
        }
        let cover = FreeModule::from_degrees(&degrees);
        let mut cols = Vec::new();
        let mut src = Vec::new();
        for (&d, &n) in &dims {
            let o = offset[&d];
            for v in 0..ring.num_vars {
                for b in 0..n {
                    let mut terms = vec![Term {
                        mon: Monomial::var(v),
                        comp: (o + b) as u32,
                        coef: 1,
                    }];
                    if let (Some(a), Some(&o2)) = (actions.get(&(d, v)), offset.get(&(d + 1))) {
                        for row in 0..a.rows() {
                            let c = a.get(row, b);
                            if c != 0 {
                                terms.push(Term {
                                    mon: Monomial::ONE,
                                    comp: (o2 + row) as u32,
                                    coef: f.neg(c),
                                });
                            }
                        }
                    }
                    cols.push(Vector::from_terms(f, terms));
                    src.push(-(d + 1));
                }
            }
        }
        let rel = GradedMatrix::new(ring, cover, FreeModule::new(src), cols).expect("degree-consistent relations");
        let presentation = ModulePresentation::cokernel(&rel).minimal();
        let actions = actions
            .into_iter()
            .filter(|((d, _), _)| dims.contains_key(d) && dims.contains_key(&(d + 1)))
            .collect();
        FiniteLengthModule {
            ring: ring.clone(),
            dims,
            actions,
            presentation,
        }
    }

    pub fn zero(ring: &RingContext) -> Self {
        Self::from_actions(ring, BTreeMap::new(), BTreeMap::new())
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn presentation(&self) -> &ModulePresentation {
        &self.presentation
    }

    /// Nonzero graded pieces and their dimensions.
    pub fn dims(&self) -> &BTreeMap<i32, usize> {
        &self.dims
    }

    pub fn dim(&self, d: i32) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// `[lo, hi]` of the nonzero degrees.
    pub fn range(&self) -> Option<(i32, i32)> {
        Some((*self.dims.keys().next()?, *self.dims.keys().next_back()?))
    }

    /// Matrix of `x_v : M_d -> M_{d+1}` (zero matrix if either side is 0).
    pub fn action(&self, d: i32, v: usize) -> DenseMatrix {
        self.actions
            .get(&(d, v))
            .cloned()
            .unwrap_or_else(|| DenseMatrix::zeros(&self.ring.field, self.dim(d + 1), self.dim(d)))
    }

    /// `M(t)`: `M(t)_d = M_{t+d}`.
    pub fn shift(&self, t: i32) -> Self {
        FiniteLengthModule {
            ring: self.ring.clone(),
            dims: self.dims.iter().map(|(d, n)| (d - t, *n)).collect(),
            actions: self.actions.iter().map(|((d, v), a)| ((d - t, *v), a.clone())).collect(),
            presentation: self.presentation.shift(t),
        }
    }

    /// `M*_n = Hom_k(M_{-n}, k)` with transposed actions.
    pub fn graded_dual(&self) -> Self {
        let dims: BTreeMap<i32, usize> = self.dims.iter().map(|(d, n)| (-d, *n)).collect();
        let mut actions = BTreeMap::new();
        for (&(d, v), a) in &self.actions {
            // x_v : M_d -> M_{d+1} dualizes to M*_{-d-1} -> M*_{-d}
            actions.insert((-d - 1, v), a.transpose());
        }
        Self::from_actions(&self.ring, dims, actions)
    }

    /// Searches for `M ≅ N(h)`.
    pub fn iso_up_to_shift(&self, other: &Self, seed: u64) -> IsoResult {
        if self.is_zero() && other.is_zero() {
            return IsoResult::Equivalent(0);
        }
        let (Some((lo_m, _)), Some((lo_n, _))) = (self.range(), other.range()) else {
            return IsoResult::Inequivalent;
        };
        let h = lo_n - lo_m;
        if self.dims.len() != other.dims.len()
            || self.dims.iter().any(|(d, n)| other.dim(d + h) != *n)
        {
            return IsoResult::Inequivalent;
        }
        match self.isomorphism_to(&other.shift(h), seed) {
            Some(Some(_)) => IsoResult::Equivalent(h),
            Some(None) => IsoResult::Inconclusive,
            None => IsoResult::Inequivalent,
        }
    }

    /// Degree-0 homomorphisms `self -> other` as a basis of the solution
    /// space; each element maps degree `d` to a matrix.
    pub fn hom_degree_zero(&self, other: &Self) -> Vec<BTreeMap<i32, DenseMatrix>> {
        let f = self.ring.field;
        let degs: Vec<i32> = self.dims.keys().copied().filter(|d| other.dim(*d) > 0).collect();
        let mut offset = BTreeMap::new();
        let mut nunk = 0;
        for &d in &degs {
            offset.insert(d, nunk);
            nunk += self.dim(d) * other.dim(d);
        }
        // unknown for f_d[i][j] at offset + i * dim M_d + j
        let var = |d: i32, i: usize, j: usize| offset[&d] + i * self.dim(d) + j;
        let mut rows: Vec<Vec<u32>> = Vec::new();
        for &d in self.dims.keys() {
            let (md, md1) = (self.dim(d), self.dim(d + 1));
            let (nd, nd1) = (other.dim(d), other.dim(d + 1));
            if md == 0 || nd1 == 0 {
                continue;
            }
            for v in 0..self.ring.num_vars {
                let am = self.action(d, v);
                let an = other.action(d, v);
                // (f_{d+1} A^M)[i][j] - (A^N f_d)[i][j] = 0, i < nd1, j < md
                for i in 0..nd1 {
                    for j in 0..md {
                        let mut row = vec![0u32; nunk];
                        if md1 > 0 && other.dim(d + 1) > 0 {
                            for k in 0..md1 {
                                let c = am.get(k, j);
                                if c != 0 {
                                    let x = var(d + 1, i, k);
                                    row[x] = f.add(row[x], c);
                                }
                            }
                        }
                        if nd > 0 {
                            for k in 0..nd {
                                let c = an.get(i, k);
                                if c != 0 {
                                    let x = var(d, k, j);
                                    row[x] = f.sub(row[x], c);
                                }
                            }
                        }
                        if row.iter().any(|&c| c != 0) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..nunk)
                .map(|k| {
                    let mut v = vec![0u32; nunk];
                    v[k] = 1;
                    v
                })
                .collect()
        } else {
            DenseMatrix::from_rows(&f, rows).kernel()
        };
        kernel
            .into_iter()
            .map(|sol| {
                degs.iter()
                    .map(|&d| {
                        let mut m = DenseMatrix::zeros(&f, other.dim(d), self.dim(d));
                        for i in 0..other.dim(d) {
                            for j in 0..self.dim(d) {
                                m.set(i, j, sol[var(d, i, j)]);
                            }
                        }
                        (d, m)
                    })
                    .collect()
            })
            .collect()
    }

    /// `None` if there is no nonzero degree-0 map at all, `Some(None)` if
    /// random combinations never gave an isomorphism, `Some(Some(f))` with
    /// an isomorphism otherwise.  Requires equal dimensions degreewise.
    pub fn isomorphism_to(&self, other: &Self, seed: u64) -> Option<Option<BTreeMap<i32, DenseMatrix>>> {
        let f = self.ring.field;
        let basis = self.hom_degree_zero(other);
        if basis.is_empty() {
            return None;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..8 {
            let coeffs: Vec<u32> = basis.iter().map(|_| rng.gen_range(0..f.characteristic())).collect();
            let mut combo: BTreeMap<i32, DenseMatrix> = BTreeMap::new();
            for (c, map) in coeffs.iter().zip(&basis) {
                for (d, m) in map {
                    let entry = combo
                        .entry(*d)
                        .or_insert_with(|| DenseMatrix::zeros(&f, m.rows(), m.cols()));
                    for i in 0..m.rows() {
                        for j in 0..m.cols() {
                            let v = f.add(entry.get(i, j), f.mul(*c, m.get(i, j)));
                            entry.set(i, j, v);
                        }
                    }
                }
            }
            let ok = self
                .dims
                .keys()
                .all(|d| combo.get(d).is_some_and(|m| m.rows() == m.cols() && m.rank() == m.rows()));
            if ok {
                return Some(Some(combo));
            }
        }
        Some(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgb::Ideal;

    fn k(r: &RingContext) -> FiniteLengthModule {
        FiniteLengthModule::from_presentation(&ModulePresentation::quotient_ring(&Ideal::irrelevant(r))).unwrap()
    }

    #[test]
    fn residue_field_and_dual() {
        let r = RingContext::p3();
        let k0 = k(&r);
        assert_eq!(k0.dims().iter().collect::<Vec<_>>(), vec![(&0, &1)]);
        let kd = k0.graded_dual();
        assert_eq!(kd.dim(0), 1);
        let k2 = k0.shift(-2);
        assert_eq!(k2.dim(2), 1);
        assert_eq!(k2.graded_dual().dim(-2), 1);
        assert_eq!(k0.iso_up_to_shift(&k2, 1), IsoResult::Equivalent(2));
    }

    #[test]
    fn dual_transposes_actions() {
        let r = RingContext::p3();
        // S/(x1, x2, x3, x0^2): dims {0:1, 1:1}
        let m = FiniteLengthModule::from_presentation(&ModulePresentation::quotient_ring(
            &Ideal::parse(&r, &["x1", "x2", "x3", "x0^2"]).unwrap(),
        ))
        .unwrap();
        assert_eq!((m.dim(0), m.dim(1)), (1, 1));
        let d = m.graded_dual();
        assert_eq!((d.dim(-1), d.dim(0)), (1, 1));
        assert_eq!(d.action(-1, 0).get(0, 0), 1);
        // the dual is again cyclic, generated in degree -1
        assert_eq!(d.presentation().free_cover().degrees(), vec![-1]);
        let dd = d.graded_dual();
        assert_eq!(m.iso_up_to_shift(&dd, 3), IsoResult::Equivalent(0));
    }

    #[test]
    fn non_isomorphic_same_dims() {
        let r = RingContext::p3();
        // k ⊕ k(-1) versus S/(x1,x2,x3,x0^2): same dims, different structure
        let a = FiniteLengthModule::from_presentation(&ModulePresentation::quotient_ring(
            &Ideal::parse(&r, &["x1", "x2", "x3", "x0^2"]).unwrap(),
        ))
        .unwrap();
        let b = FiniteLengthModule::from_presentation(
            &ModulePresentation::quotient_ring(&Ideal::irrelevant(&r))
                .direct_sum(&ModulePresentation::quotient_ring(&Ideal::irrelevant(&r)).shift(-1)),
        )
        .unwrap();
        assert_ne!(a.iso_up_to_shift(&b, 5), IsoResult::Equivalent(0));
        assert!(FiniteLengthModule::from_presentation(&ModulePresentation::quotient_ring(
            &Ideal::parse(&r, &["x0", "x1"]).unwrap()
        ))
        .is_err());
    }
}
