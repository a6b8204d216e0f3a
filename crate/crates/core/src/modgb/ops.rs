//! Submodule operations built on the Gröbner engine.

use super::engine::{GbOptions, GroebnerBasis};
use super::matrix::{FreeModule, GradedMatrix};
use super::vector::Vector;
use crate::ring::{Monomial, Polynomial, RingContext};

/// Gröbner basis of the submodule of `m.target()` spanned by the columns.
pub fn column_gb(m: &GradedMatrix, opts: &GbOptions) -> GroebnerBasis {
    GroebnerBasis::compute(m.ring(), &m.target().degrees(), m.columns(), opts)
}

/// Reduced Gröbner basis as a matrix, columns sorted by leading term.
pub fn groebner_basis(m: &GradedMatrix) -> GradedMatrix {
    let gb = column_gb(m, &GbOptions::default());
    GradedMatrix::from_columns(m.ring(), m.target().clone(), gb.reduced()).expect("homogeneous basis")
}

/// The columns of `m` forming a minimal generating set of its image.
pub fn minimal_generators(m: &GradedMatrix) -> GradedMatrix {
    let gb = column_gb(m, &GbOptions::default());
    m.select_columns(gb.minimal_generators())
}

/// Minimal generators of `ker m`, as a matrix into `m.source()`.
pub fn syzygy_module(m: &GradedMatrix) -> GradedMatrix {
    let gb = column_gb(
        m,
        &GbOptions {
            syzygies: true,
            ..Default::default()
        },
    );
    let ring = m.ring();
    let rank = m.ncols();
    let syz: Vec<Vector> = gb
        .syzygies()
        .iter()
        .map(|s| reduce_entries(ring, s, rank))
        .filter(|s| !s.is_zero())
        .collect();
    let raw = GradedMatrix::from_columns(ring, m.source().clone(), syz).expect("homogeneous syzygies");
    minimal_generators(&raw)
}

fn reduce_entries(ring: &RingContext, v: &Vector, rank: usize) -> Vector {
    if !ring.is_quotient() {
        return v.clone();
    }
    let e: Vec<Polynomial> = v.entries(rank).iter().map(|p| ring.reduce(p)).collect();
    Vector::from_entries(&ring.field, &e)
}

/// `im a ∩ im b` for matrices with a common target, as minimal generators.
pub fn intersect(a: &GradedMatrix, b: &GradedMatrix) -> GradedMatrix {
    let k = syzygy_module(&a.concat(b));
    let top = k.row_block(0, a.ncols());
    let gens = a.compose(&top);
    let cols: Vec<Vector> = gens
        .columns()
        .iter()
        .map(|c| reduce_entries(a.ring(), c, a.nrows()))
        .collect();
    let m = GradedMatrix::new(a.ring(), a.target().clone(), gens.source().clone(), cols).unwrap();
    minimal_generators(&m)
}

/// True when the image of `a` lies in the image of `b`.
pub fn image_contained(a: &GradedMatrix, b: &GradedMatrix) -> bool {
    let gb = column_gb(b, &GbOptions::default());
    a.columns().iter().all(|c| gb.contains(c))
}

/// Krull dimension of `F / M` read off leading terms; `None` for the zero
/// module.
pub fn krull_dim(gb: &GroebnerBasis) -> Option<usize> {
    let n = gb.ring().num_vars;
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); gb.rank()];
    for (m, c) in gb.leading_terms() {
        per_comp[c].push(m);
    }
    let mut best: Option<usize> = None;
    for leads in &per_comp {
        if leads.iter().any(|m| m.is_one()) {
            continue;
        }
        let supports: Vec<u32> = leads.iter().map(|m| m.support()).collect();
        let mut dim = 0;
        for u in 0u32..(1 << n) {
            let size = u.count_ones() as usize;
            if size <= dim {
                continue;
            }
            if supports.iter().all(|s| s & !u != 0) {
                dim = size;
            }
        }
        best = Some(best.map_or(dim, |b| b.max(dim)));
    }
    best
}

/// `ring.dim - dim(F/M)`; the zero module has height `ring.dim + 1`.
pub fn height_of(gb: &GroebnerBasis) -> usize {
    let d = gb.ring().dim;
    match krull_dim(gb) {
        None => d + 1,
        Some(k) => d - k.min(d),
    }
}

/// `dim_k (F/M)_d`, counting standard monomials.
pub fn hilbert_function(gb: &GroebnerBasis, d: i32) -> usize {
    let n = gb.ring().num_vars;
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); gb.rank()];
    for (m, c) in gb.leading_terms() {
        per_comp[c].push(m);
    }
    let mut total = 0;
    for (c, leads) in per_comp.iter().enumerate() {
        let e = d - gb.gen_degrees()[c];
        if e < 0 {
            continue;
        }
        total += count_standard(n, e as u32, leads);
    }
    total
}

fn count_standard(nvars: usize, d: u32, leads: &[Monomial]) -> usize {
    if leads.is_empty() {
        return binomial(nvars as u64 + d as u64 - 1, d as u64) as usize;
    }
    Monomial::all_of_degree(nvars, d)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count()
}

/// Standard monomials of `F/M` in degree `d`, as `(monomial, component)`.
pub fn standard_basis(gb: &GroebnerBasis, d: i32) -> Vec<(Monomial, usize)> {
    let n = gb.ring().num_vars;
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); gb.rank()];
    for (m, c) in gb.leading_terms() {
        per_comp[c].push(m);
    }
    let mut out = Vec::new();
    for (c, leads) in per_comp.iter().enumerate() {
        let e = d - gb.gen_degrees()[c];
        if e < 0 {
            continue;
        }
        for m in Monomial::all_of_degree(n, e as u32) {
            if !leads.iter().any(|l| l.divides(&m)) {
                out.push((m, c));
            }
        }
    }
    out
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Determinant of a small square matrix of polynomials by expansion over
/// row subsets.
pub fn poly_determinant(ring: &RingContext, m: &[Vec<Polynomial>]) -> Polynomial {
    let f = &ring.field;
    let k = m.len();
    if k == 0 {
        return Polynomial::one();
    }
    // dp[mask] = signed sum over placements of the first popcount(mask)
    // columns into the rows in mask
    let mut dp: Vec<Option<Polynomial>> = vec![None; 1 << k];
    dp[0] = Some(Polynomial::one());
    for mask in 0usize..(1 << k) {
        let Some(cur) = dp[mask].clone() else { continue };
        if cur.is_zero() {
            continue;
        }
        let col = mask.count_ones() as usize;
        if col == k {
            continue;
        }
        for row in 0..k {
            if mask & (1 << row) != 0 || m[row][col].is_zero() {
                continue;
            }
            let above = (mask >> (row + 1)).count_ones();
            let mut term = cur.mul(f, &m[row][col]);
            if above % 2 == 1 {
                term = term.neg(f);
            }
            let next = mask | (1 << row);
            dp[next] = Some(match dp[next].take() {
                None => term,
                Some(p) => p.add(f, &term),
            });
        }
    }
    dp[(1 << k) - 1].clone().unwrap_or_else(Polynomial::zero)
}

/// All `k x k` minors of a row-major table.
pub fn minors(ring: &RingContext, rows: &[Vec<Polynomial>], k: usize) -> Vec<Polynomial> {
    let nr = rows.len();
    let nc = rows.first().map_or(0, |r| r.len());
    if k == 0 {
        return vec![Polynomial::one()];
    }
    if k > nr || k > nc {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rs in subsets(nr, k) {
        for cs in subsets(nc, k) {
            let sub: Vec<Vec<Polynomial>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| rows[i][j].clone()).collect())
                .collect();
            let d = ring.reduce(&poly_determinant(ring, &sub));
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Single-column matrices for each ring variable, mapping `S(-1) -> S`.
pub fn variables_row(ring: &RingContext) -> GradedMatrix {
    let vars: Vec<Polynomial> = (0..ring.num_vars).map(Polynomial::var).collect();
    GradedMatrix::row(ring, 0, &vars).expect("linear forms")
}

/// `F` with a single summand `S(t)`.
pub fn line_module(t: i32) -> FreeModule {
    FreeModule::new(vec![t])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(r: &RingContext, ps: &[&str]) -> GradedMatrix {
        let v: Vec<Polynomial> = ps.iter().map(|s| r.parse(s).unwrap()).collect();
        GradedMatrix::row(r, 0, &v).unwrap()
    }

    #[test]
    fn koszul_syzygy() {
        let r = RingContext::p3();
        let s = syzygy_module(&row(&r, &["x0", "x1"]));
        assert_eq!(s.ncols(), 1);
        assert_eq!(s.source().twists(), &[-2]);
        assert!(row(&r, &["x0", "x1"]).compose(&s).is_zero());
    }

    #[test]
    fn identity_has_no_syzygies() {
        let r = RingContext::p3();
        let id = GradedMatrix::identity(&r, &FreeModule::free(2));
        assert_eq!(syzygy_module(&id).ncols(), 0);
    }

    #[test]
    fn skew_lines_have_four_linear_syzygies() {
        let r = RingContext::p3();
        let m = row(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        let s = syzygy_module(&m);
        assert_eq!(s.ncols(), 4);
        assert!(s.source().twists().iter().all(|&t| t == -3));
        assert!(m.compose(&s).is_zero());
    }

    #[test]
    fn determinants() {
        let r = RingContext::p3();
        let p = |s: &str| r.parse(s).unwrap();
        let m = vec![vec![p("x0"), p("x1")], vec![p("x2"), p("x3")]];
        assert_eq!(poly_determinant(&r, &m), p("x0*x3 - x1*x2"));
        let m3 = vec![
            vec![p("2"), p("0"), p("1")],
            vec![p("1"), p("3"), p("0")],
            vec![p("0"), p("1"), p("4")],
        ];
        // 2*(12) - 0 + 1*(1) = 25
        assert_eq!(poly_determinant(&r, &m3), p("25"));
    }

    #[test]
    fn dims_and_heights() {
        let r = RingContext::p3();
        let gb = column_gb(&row(&r, &["x0", "x1"]), &GbOptions::default());
        assert_eq!(krull_dim(&gb), Some(2));
        assert_eq!(height_of(&gb), 2);
        for n in 0..6 {
            assert_eq!(hilbert_function(&gb, n), n as usize + 1);
        }
        let unit = column_gb(&row(&r, &["1"]), &GbOptions::default());
        assert_eq!(height_of(&unit), 5);
        let zero = GradedMatrix::zero(&r, FreeModule::free(1), FreeModule::zero());
        assert_eq!(height_of(&column_gb(&zero, &GbOptions::default())), 0);
    }
}
