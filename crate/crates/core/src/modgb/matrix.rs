//! Twisted free modules and homogeneous matrices between them.

use rand::Rng;

use super::linalg::DenseMatrix;
use super::vector::Vector;
use crate::error::{Error, Result};
use crate::ring::{Polynomial, RingContext};

/// `⊕ S(a_i)`; the i-th basis element sits in degree `-a_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeModule {
    twists: Vec<i32>,
}

impl FreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        FreeModule { twists }
    }

    pub fn zero() -> Self {
        FreeModule { twists: Vec::new() }
    }

    /// `S^r`.
    pub fn free(r: usize) -> Self {
        FreeModule { twists: vec![0; r] }
    }

    /// Free module with basis elements in the given degrees.
    pub fn from_degrees(degrees: &[i32]) -> Self {
        FreeModule {
            twists: degrees.iter().map(|d| -d).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn degrees(&self) -> Vec<i32> {
        self.twists.iter().map(|a| -a).collect()
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut t = self.twists.clone();
        t.extend_from_slice(&other.twists);
        FreeModule { twists: t }
    }

    /// `F(t)`.
    pub fn shift(&self, t: i32) -> FreeModule {
        FreeModule {
            twists: self.twists.iter().map(|a| a + t).collect(),
        }
    }

    /// `Hom(F, S)`.
    pub fn dual(&self) -> FreeModule {
        FreeModule {
            twists: self.twists.iter().map(|a| -a).collect(),
        }
    }

    pub fn select(&self, idx: &[usize]) -> FreeModule {
        FreeModule {
            twists: idx.iter().map(|&i| self.twists[i]).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.twists.is_empty()
    }
}

/// A degree-zero map `source -> target`, stored column by column.
///
/// Column `j` is an element of `target` of degree `-source.twists[j]`, so
/// entry `(i, j)` has degree `target.twists[i] - source.twists[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    ring: RingContext,
    target: FreeModule,
    source: FreeModule,
    cols: Vec<Vector>,
}

impl GradedMatrix {
    /// Builds a matrix from columns, checking homogeneity and degrees.
    pub fn new(
        ring: &RingContext,
        target: FreeModule,
        source: FreeModule,
        cols: Vec<Vector>,
    ) -> Result<Self> {
        if cols.len() != source.rank() {
            return Err(Error::DegreeMismatch(format!(
                "{} columns for a source of rank {}",
                cols.len(),
                source.rank()
            )));
        }
        let tdeg = target.degrees();
        for (j, c) in cols.iter().enumerate() {
            if c.max_component().is_some_and(|m| m >= target.rank()) {
                return Err(Error::DegreeMismatch(format!("column {j} exceeds target rank")));
            }
            if !c.is_homogeneous(&tdeg) {
                return Err(Error::NonHomogeneous(format!("column {j}")));
            }
            if let Some(d) = c.degree(&tdeg) {
                if d != -source.twists()[j] {
                    return Err(Error::DegreeMismatch(format!(
                        "column {j} has degree {d}, source expects {}",
                        -source.twists()[j]
                    )));
                }
            }
        }
        Ok(Self::new_unchecked(ring, target, source, cols))
    }

    pub(crate) fn new_unchecked(
        ring: &RingContext,
        target: FreeModule,
        source: FreeModule,
        cols: Vec<Vector>,
    ) -> Self {
        debug_assert_eq!(cols.len(), source.rank());
        GradedMatrix {
            ring: ring.clone(),
            target,
            source,
            cols,
        }
    }

    /// Builds from columns, reading the source twists off the column
    /// degrees.  Zero columns are placed in degree 0.
    pub fn from_columns(ring: &RingContext, target: FreeModule, cols: Vec<Vector>) -> Result<Self> {
        let tdeg = target.degrees();
        let mut twists = Vec::with_capacity(cols.len());
        for c in &cols {
            twists.push(-c.degree(&tdeg).unwrap_or(0));
        }
        Self::new(ring, target, FreeModule::new(twists), cols)
    }

    /// Builds from a row-major table of entries.
    pub fn from_rows(
        ring: &RingContext,
        target: FreeModule,
        source: FreeModule,
        rows: &[Vec<Polynomial>],
    ) -> Result<Self> {
        let f = &ring.field;
        let ncols = source.rank();
        if rows.len() != target.rank() || rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DegreeMismatch("entry table has wrong shape".into()));
        }
        let cols = (0..ncols)
            .map(|j| {
                let col: Vec<Polynomial> = rows.iter().map(|r| r[j].clone()).collect();
                Vector::from_entries(f, &col)
            })
            .collect();
        Self::new(ring, target, source, cols)
    }

    /// Row vector `S(a_1) ⊕ … → S(t)` with the given homogeneous entries;
    /// source twists are inferred.
    pub fn row(ring: &RingContext, target_twist: i32, entries: &[Polynomial]) -> Result<Self> {
        let cols = entries.iter().map(|p| Vector::from_poly(p, 0)).collect();
        Self::from_columns(ring, FreeModule::new(vec![target_twist]), cols)
    }

    pub fn identity(ring: &RingContext, f: &FreeModule) -> Self {
        let cols = (0..f.rank()).map(Vector::unit).collect();
        Self::new_unchecked(ring, f.clone(), f.clone(), cols)
    }

    pub fn zero(ring: &RingContext, target: FreeModule, source: FreeModule) -> Self {
        let cols = vec![Vector::zero(); source.rank()];
        Self::new_unchecked(ring, target, source, cols)
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn columns(&self) -> &[Vector] {
        &self.cols
    }

    pub fn column(&self, j: usize) -> &Vector {
        &self.cols[j]
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        self.cols[j].component(i)
    }

    /// Row-major table of entries.
    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        let dense: Vec<Vec<Polynomial>> = self.cols.iter().map(|c| c.entries(self.nrows())).collect();
        (0..self.nrows())
            .map(|i| (0..self.ncols()).map(|j| dense[j][i].clone()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_zero())
    }

    /// Entries reduced modulo the ring relation.
    pub fn reduced(&self) -> Self {
        if !self.ring.is_quotient() {
            return self.clone();
        }
        let f = &self.ring.field;
        let cols = self
            .cols
            .iter()
            .map(|c| {
                let e: Vec<Polynomial> = c.entries(self.nrows()).iter().map(|p| self.ring.reduce(p)).collect();
                Vector::from_entries(f, &e)
            })
            .collect();
        Self::new_unchecked(&self.ring, self.target.clone(), self.source.clone(), cols)
    }

    /// True when every entry vanishes in the ring (modulo the relation).
    pub fn is_zero_in_ring(&self) -> bool {
        self.reduced().is_zero()
    }

    /// Image of an element of the source.
    pub fn apply(&self, v: &Vector) -> Vector {
        let f = &self.ring.field;
        let mut acc = Vector::zero();
        for t in v.terms() {
            acc = acc.add_scaled(f, &self.cols[t.comp as usize], t.coef, &t.mon);
        }
        acc
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMatrix) -> GradedMatrix {
        assert_eq!(other.target.rank(), self.source.rank(), "composition shape");
        let cols = other.cols.iter().map(|c| self.apply(c)).collect();
        Self::new_unchecked(&self.ring, self.target.clone(), other.source.clone(), cols)
    }

    /// `Hom(-, S)` of the map: `target^* -> source^*`.
    pub fn transpose(&self) -> GradedMatrix {
        self.transpose_into(0)
    }

    /// `Hom(-, S(t))` of the map.
    pub fn transpose_into(&self, t: i32) -> GradedMatrix {
        let f = &self.ring.field;
        let rows = self.rows();
        let cols = rows.iter().map(|r| Vector::from_entries(f, r)).collect();
        Self::new_unchecked(
            &self.ring,
            self.source.dual().shift(t),
            self.target.dual().shift(t),
            cols,
        )
    }

    /// Same entries with both modules twisted by `t`.
    pub fn shift(&self, t: i32) -> GradedMatrix {
        Self::new_unchecked(&self.ring, self.target.shift(t), self.source.shift(t), self.cols.clone())
    }

    /// `[self | other]` with a common target.
    pub fn concat(&self, other: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.target, other.target, "concat needs a common target");
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        Self::new_unchecked(&self.ring, self.target.clone(), self.source.direct_sum(&other.source), cols)
    }

    /// Stacks `self` over `other` (common source).
    pub fn stack(&self, other: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.source, other.source, "stack needs a common source");
        let f = &self.ring.field;
        let off = self.nrows();
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| a.add(f, &b.shift_components(off)))
            .collect();
        Self::new_unchecked(&self.ring, self.target.direct_sum(&other.target), self.source.clone(), cols)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &GradedMatrix) -> GradedMatrix {
        let off = self.nrows();
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().map(|c| c.shift_components(off)));
        Self::new_unchecked(
            &self.ring,
            self.target.direct_sum(&other.target),
            self.source.direct_sum(&other.source),
            cols,
        )
    }

    pub fn select_columns(&self, idx: &[usize]) -> GradedMatrix {
        let cols = idx.iter().map(|&j| self.cols[j].clone()).collect();
        Self::new_unchecked(&self.ring, self.target.clone(), self.source.select(idx), cols)
    }

    /// Keeps rows in `idx` (in that order), dropping the others.
    pub fn select_rows(&self, idx: &[usize]) -> GradedMatrix {
        let f = &self.ring.field;
        let mut map = vec![None; self.nrows()];
        for (new, &old) in idx.iter().enumerate() {
            map[old] = Some(new);
        }
        let cols = self
            .cols
            .iter()
            .map(|c| {
                let terms = c
                    .terms()
                    .iter()
                    .filter_map(|t| map[t.comp as usize].map(|n| super::vector::Term { comp: n as u32, ..*t }))
                    .collect();
                Vector::from_terms(f, terms)
            })
            .collect();
        Self::new_unchecked(&self.ring, self.target.select(idx), self.source.clone(), cols)
    }

    /// Rows `[lo, hi)` as a matrix into the corresponding summand.
    pub fn row_block(&self, lo: usize, hi: usize) -> GradedMatrix {
        let idx: Vec<usize> = (lo..hi).collect();
        self.select_rows(&idx)
    }

    pub fn scale_column(&mut self, j: usize, c: u32) {
        self.cols[j] = self.cols[j].scale(&self.ring.field, c);
    }

    pub fn negate(&self) -> GradedMatrix {
        let f = &self.ring.field;
        let cols = self.cols.iter().map(|c| c.scale(f, f.neg(1))).collect();
        Self::new_unchecked(&self.ring, self.target.clone(), self.source.clone(), cols)
    }

    pub fn add(&self, other: &GradedMatrix) -> GradedMatrix {
        assert_eq!(self.target, other.target);
        assert_eq!(self.source, other.source);
        let f = &self.ring.field;
        let cols = self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(f, b)).collect();
        Self::new_unchecked(&self.ring, self.target.clone(), self.source.clone(), cols)
    }

    /// Replaces the target by an isomorphic free module with the same rank
    /// (used after re-indexing twists that carry no information, e.g. for
    /// zero rows).
    pub fn with_modules(&self, target: FreeModule, source: FreeModule) -> GradedMatrix {
        Self::new_unchecked(&self.ring, target, source, self.cols.clone())
    }

    /// True when some entry is a nonzero constant.
    pub fn has_unit_entry(&self) -> bool {
        self.cols
            .iter()
            .any(|c| c.terms().iter().any(|t| t.mon.is_one()))
    }

    /// Evaluates all entries at a point.
    pub fn evaluate(&self, point: &[u32]) -> DenseMatrix {
        let f = &self.ring.field;
        let mut m = DenseMatrix::zeros(f, self.nrows(), self.ncols());
        for (j, c) in self.cols.iter().enumerate() {
            for t in c.terms() {
                let mut v = t.coef;
                for (var, &x) in point.iter().enumerate() {
                    let e = t.mon.exponent(var);
                    if e > 0 {
                        v = f.mul(v, f.pow(x, u64::from(e)));
                    }
                }
                let i = t.comp as usize;
                m.set(i, j, f.add(m.get(i, j), v));
            }
        }
        m
    }

    /// Rank of the matrix over the fraction field of the ring, estimated
    /// as the maximum rank at a few random points of the ring's variety.
    pub fn generic_rank<R: Rng>(&self, rng: &mut R) -> usize {
        let mut best = 0;
        for _ in 0..3 {
            let pt = random_point(&self.ring, rng);
            best = best.max(self.evaluate(&pt).rank());
        }
        best
    }

    /// Entries in a human readable row-major layout.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows()
            .iter()
            .map(|r| r.iter().map(|p| self.ring.print(p)).collect())
            .collect()
    }
}

/// A random point on the affine cone of the ring (solving the relation for
/// one coordinate when it is linear in it).
pub fn random_point<R: Rng>(ring: &RingContext, rng: &mut R) -> Vec<u32> {
    let f = &ring.field;
    let p = f.characteristic();
    loop {
        let mut pt: Vec<u32> = (0..ring.num_vars).map(|_| rng.gen_range(0..p)).collect();
        let Some(q) = &ring.relation else {
            return pt;
        };
        // pick a variable occurring linearly in the leading term's support
        let lead = q.leading().unwrap().0;
        let Some(v) = (0..ring.num_vars).find(|&v| {
            q.terms().iter().all(|(m, _)| m.exponent(v) <= 1) && lead.exponent(v) == 1
        }) else {
            // fall back to points where q vanishes by search on a line
            if f.characteristic() > 0 && q.evaluate(f, &pt) == 0 {
                return pt;
            }
            continue;
        };
        // q = a * x_v + b with a, b free of x_v
        pt[v] = 0;
        let b = q.evaluate(f, &pt);
        pt[v] = 1;
        let a = f.sub(q.evaluate(f, &pt), b);
        if a == 0 {
            continue;
        }
        pt[v] = f.neg(f.div(b, a));
        return pt;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn degree_checks() {
        let r = RingContext::p3();
        let x0 = r.parse("x0").unwrap();
        let x1 = r.parse("x1").unwrap();
        // S(-1)^2 -> S with entries of degree 1
        let m = GradedMatrix::row(&r, 0, &[x0.clone(), x1.clone()]).unwrap();
        assert_eq!(m.source().twists(), &[-1, -1]);
        let bad = GradedMatrix::new(&r, FreeModule::free(1), FreeModule::free(2), m.columns().to_vec());
        assert!(bad.is_err());
        let t = m.transpose();
        assert_eq!(t.target().twists(), &[1, 1]);
        assert_eq!(t.source().twists(), &[0]);
    }

    #[test]
    fn compose_and_stack() {
        let r = RingContext::p3();
        let m = GradedMatrix::row(&r, 0, &[r.parse("x0").unwrap(), r.parse("x1").unwrap()]).unwrap();
        let koszul = GradedMatrix::from_rows(
            &r,
            FreeModule::new(vec![-1, -1]),
            FreeModule::new(vec![-2]),
            &[vec![r.parse("x1").unwrap()], vec![r.parse("-x0").unwrap()]],
        )
        .unwrap();
        assert!(m.compose(&koszul).is_zero());
        let st = m.stack(&m);
        assert_eq!(st.nrows(), 2);
        assert_eq!(st.entry(1, 1), r.parse("x1").unwrap());
    }

    #[test]
    fn points_lie_on_quadric() {
        let r = RingContext::quadric_threefold();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let pt = random_point(&r, &mut rng);
            assert_eq!(r.relation.as_ref().unwrap().evaluate(&r.field, &pt), 0);
        }
    }
}
