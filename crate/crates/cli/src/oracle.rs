//! Brute-force graded linear algebra over GF(p), written without the
//! Gröbner engine: each graded piece is an explicit coordinate space
//! spanned by monomial multiples.

use std::collections::HashMap;

use biliaison_core::ring::Polynomial;

/// Exponent vectors of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: i32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d >= 0 && n > 0 {
        rec(n, d as u32, &mut Vec::new(), &mut out);
    }
    out
}

/// Coordinates on `S_d`.
struct Basis {
    index: HashMap<Vec<u32>, usize>,
}

impl Basis {
    fn new(n: usize, d: i32) -> Self {
        let index = monomials(n, d).into_iter().enumerate().map(|(i, m)| (m, i)).collect();
        Basis { index }
    }

    fn len(&self) -> usize {
        self.index.len()
    }
}

/// `f · x^m` written in the coordinates of `basis`, added into `row[offset..]`.
fn write_product(f: &Polynomial, m: &[u32], n: usize, basis: &Basis, row: &mut [u64], offset: usize, p: u64) {
    for (mono, c) in f.terms() {
        let e: Vec<u32> = mono.exponents(n).iter().zip(m).map(|(a, b)| a + b).collect();
        let i = offset + basis.index[&e];
        row[i] = (row[i] + *c as u64) % p;
    }
}

fn inverse(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank by Gaussian elimination mod `p`.
pub fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = inverse(rows[r][c], p);
        let pivot: Vec<u64> = rows[r].iter().map(|x| x * inv % p).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let k = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + p - k * y % p) % p;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

fn degree(f: &Polynomial) -> i32 {
    f.degree().map_or(0, |d| d as i32)
}

/// The monomial multiples of `gens` spanning `(gens)_d`, in coordinates.
fn ideal_rows(gens: &[Polynomial], n: usize, d: i32, p: u64) -> (Vec<Vec<u64>>, Basis) {
    let basis = Basis::new(n, d);
    let mut rows = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        for m in monomials(n, d - degree(g)) {
            let mut row = vec![0; basis.len()];
            write_product(g, &m, n, &basis, &mut row, 0, p);
            rows.push(row);
        }
    }
    (rows, basis)
}

/// `dim (gens)_d`.
pub fn ideal_dim(gens: &[Polynomial], n: usize, d: i32, p: u64) -> usize {
    let (rows, basis) = ideal_rows(gens, n, d, p);
    if rows.is_empty() || basis.len() == 0 {
        return 0;
    }
    rank(rows, p)
}

/// `dim (S/(gens))_d`.
pub fn quotient_dim(gens: &[Polynomial], n: usize, d: i32, p: u64) -> usize {
    monomials(n, d).len() - ideal_dim(gens, n, d, p)
}

/// `f ∈ (gens)`, tested in the degree of `f`.
pub fn ideal_member(gens: &[Polynomial], f: &Polynomial, n: usize, p: u64) -> bool {
    if f.is_zero() {
        return true;
    }
    let d = degree(f);
    let (mut rows, basis) = ideal_rows(gens, n, d, p);
    let before = if rows.is_empty() { 0 } else { rank(rows.clone(), p) };
    let mut row = vec![0; basis.len()];
    write_product(f, &vec![0; n], n, &basis, &mut row, 0, p);
    rows.push(row);
    rank(rows, p) == before
}

/// `dim` of the degree-`d` syzygies of `gens`: the kernel of
/// `⊕ S_{d - deg g_i} -> S_d`.
pub fn syzygy_dim(gens: &[Polynomial], n: usize, d: i32, p: u64) -> usize {
    let domain: usize = gens.iter().map(|g| monomials(n, d - degree(g)).len()).sum();
    domain - ideal_dim(gens, n, d, p)
}

/// `dim` of the degree-`d` part of the submodule of `⊕ S(-deg g_i)` spanned
/// by `cols` (each a list of entries, column `j` of degree `col_degrees[j]`).
pub fn submodule_dim(gen_degrees: &[i32], cols: &[Vec<Polynomial>], col_degrees: &[i32], n: usize, d: i32, p: u64) -> usize {
    let bases: Vec<Basis> = gen_degrees.iter().map(|&e| Basis::new(n, d - e)).collect();
    let offsets: Vec<usize> = bases
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.len();
            Some(o)
        })
        .collect();
    let width: usize = bases.iter().map(Basis::len).sum();
    let mut rows = Vec::new();
    for (col, &cd) in cols.iter().zip(col_degrees) {
        for m in monomials(n, d - cd) {
            let mut row = vec![0; width];
            for (i, entry) in col.iter().enumerate() {
                write_product(entry, &m, n, &bases[i], &mut row, offsets[i], p);
            }
            rows.push(row);
        }
    }
    if rows.is_empty() || width == 0 {
        return 0;
    }
    rank(rows, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use biliaison_core::ring::RingContext;

    fn polys(r: &RingContext, gens: &[&str]) -> Vec<Polynomial> {
        gens.iter().map(|g| r.parse(g).unwrap()).collect()
    }

    #[test]
    fn counts() {
        assert_eq!(monomials(4, 2).len(), 10);
        assert_eq!(monomials(4, -1).len(), 0);
        assert_eq!(monomials(3, 0), vec![vec![0, 0, 0]]);
        let r = RingContext::p3();
        let line = polys(&r, &["x0", "x1"]);
        for d in 0..5 {
            assert_eq!(quotient_dim(&line, 4, d, 32003), d as usize + 1);
        }
        assert_eq!(syzygy_dim(&line, 4, 2, 32003), 1);
        assert!(ideal_member(&line, &r.parse("x0*x3 - x1*x2").unwrap(), 4, 32003));
        assert!(!ideal_member(&line, &r.parse("x2*x3").unwrap(), 4, 32003));
    }

    #[test]
    fn rank_mod_p() {
        assert_eq!(rank(vec![vec![1, 2], vec![2, 4]], 7), 1);
        assert_eq!(rank(vec![vec![1, 2], vec![2, 5]], 7), 2);
        assert_eq!(rank(vec![vec![3, 6], vec![1, 2]], 7), 1);
    }
}
