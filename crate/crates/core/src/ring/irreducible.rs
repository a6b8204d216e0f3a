//! Probabilistic irreducibility certificate for hypersurface equations.
//!
//! Quadrics are decided exactly by the rank of their Gram matrix. For higher
//! degrees the form is restricted to random lines; an irreducible
//! restriction (checked with Ben-Or's test) certifies irreducibility of the
//! form itself.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::Field;
use super::poly::Polynomial;

type Uni = Vec<u32>; // coefficients, index = power, trimmed

fn trim(mut a: Uni) -> Uni {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn uni_rem(f: &Field, a: &Uni, m: &Uni) -> Uni {
    let mut r = a.clone();
    let dm = m.len() - 1;
    let inv = f.inv(m[dm]);
    while r.len() > dm {
        let c = f.mul(*r.last().unwrap(), inv);
        let shift = r.len() - 1 - dm;
        for (i, &mc) in m.iter().enumerate() {
            r[shift + i] = f.sub(r[shift + i], f.mul(c, mc));
        }
        r = trim(r);
    }
    r
}

fn uni_mulmod(f: &Field, a: &Uni, b: &Uni, m: &Uni) -> Uni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            r[i + j] = f.add(r[i + j], f.mul(x, y));
        }
    }
    uni_rem(f, &trim(r), m)
}

fn uni_gcd(f: &Field, a: &Uni, b: &Uni) -> Uni {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = uni_rem(f, &a, &b);
        a = b;
        b = r;
    }
    a
}

fn uni_powmod(f: &Field, base: &Uni, mut e: u64, m: &Uni) -> Uni {
    let mut result: Uni = vec![1];
    let mut b = uni_rem(f, base, m);
    while e > 0 {
        if e & 1 == 1 {
            result = uni_mulmod(f, &result, &b, m);
        }
        b = uni_mulmod(f, &b, &b, m);
        e >>= 1;
    }
    result
}

/// Ben-Or irreducibility test for a univariate polynomial.
fn uni_irreducible(f: &Field, m: &Uni) -> bool {
    let d = m.len() - 1;
    if d == 0 {
        return false;
    }
    let x: Uni = vec![0, 1];
    let p = u64::from(f.characteristic());
    let mut xp = x.clone();
    for _ in 1..=d / 2 {
        xp = uni_powmod(f, &xp, p, m);
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = f.sub(diff[1], 1);
        let g = uni_gcd(f, m, &trim(diff));
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn quadric_rank(field: &Field, q: &Polynomial, nvars: usize) -> usize {
    let half = field.inv(2);
    let mut g = vec![vec![0u32; nvars]; nvars];
    for &(m, c) in q.terms() {
        let vars: Vec<usize> = (0..nvars).filter(|&i| m.exponent(i) > 0).collect();
        if vars.len() == 1 {
            g[vars[0]][vars[0]] = c;
        } else {
            let h = field.mul(c, half);
            g[vars[0]][vars[1]] = h;
            g[vars[1]][vars[0]] = h;
        }
    }
    crate::modgb::linalg::DenseMatrix::from_rows(field, g).rank()
}

/// Returns `Some(true)` when irreducibility is certified, `Some(false)`
/// when reducibility is certified and `None` when no certificate was found.
pub fn certify_irreducible(field: &Field, q: &Polynomial, nvars: usize, seed: u64) -> Option<bool> {
    let d = q.degree()?;
    if d == 1 {
        return Some(true);
    }
    if d == 2 && field.characteristic() != 2 {
        return Some(quadric_rank(field, q, nvars) >= 3);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.characteristic();
    for _ in 0..64 {
        // line t -> a + t b in affine chart
        let a: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..p)).collect();
        let b: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..p)).collect();
        let images: Vec<Polynomial> = (0..nvars)
            .map(|i| {
                Polynomial::from_terms(
                    field,
                    vec![
                        (super::Monomial::ONE, a[i]),
                        (super::Monomial::var(0), b[i]),
                    ],
                )
            })
            .collect();
        let restricted = q.substitute(field, &images);
        let mut uni = vec![0u32; d as usize + 1];
        for &(m, c) in restricted.terms() {
            uni[m.exponent(0) as usize] = c;
        }
        let uni = trim(uni);
        if uni.len() == d as usize + 1 && uni_irreducible(field, &uni) {
            return Some(true);
        }
    }
    None
}
