//! Homogeneous Buchberger algorithm for submodules of graded free modules,
//! processed one degree at a time.
//!
//! Over a hypersurface ring `T/(q)` the elements `q * e_i` are fed in as
//! background generators, so the basis computed is one of `M + q T^r` and
//! normal forms are normal forms over the quotient.

use std::collections::BTreeMap;

use super::vector::{Term, Vector};
use crate::ring::{Monomial, RingContext};

#[derive(Clone, Copy, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Origin {
    Input(usize),
    Background,
    Pair,
}

/// Options for a Gröbner basis run.
#[derive(Clone, Debug)]
#[derive(Default)]
pub struct GbOptions {
    /// Record how each basis element is built from the input generators.
    pub trace: bool,
    /// Collect syzygies of the input generators (implies `trace`).
    pub syzygies: bool,
    /// Stop after this degree.
    pub degree_limit: Option<i32>,
}


/// A Gröbner basis of a homogeneous submodule together with bookkeeping.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: RingContext,
    gen_degrees: Vec<i32>,
    num_inputs: usize,
    basis: Vec<Vector>,
    reps: Vec<Vector>,
    by_comp: Vec<Vec<usize>>,
    minimal: Vec<usize>,
    syzygies: Vec<Vector>,
    traced: bool,
    complete: bool,
}

impl GroebnerBasis {
    /// Computes a basis of the submodule of `⊕ S e_i` (with `deg e_i =
    /// gen_degrees[i]`) generated by `gens`, which must be homogeneous.
    pub fn compute(
        ring: &RingContext,
        gen_degrees: &[i32],
        gens: &[Vector],
        opts: &GbOptions,
    ) -> Self {
        let trace = opts.trace || opts.syzygies;
        let field = ring.field;
        let rank = gen_degrees.len();
        let mut gb = GroebnerBasis {
            ring: ring.clone(),
            gen_degrees: gen_degrees.to_vec(),
            num_inputs: gens.len(),
            basis: Vec::new(),
            reps: Vec::new(),
            by_comp: vec![Vec::new(); rank],
            minimal: Vec::new(),
            syzygies: Vec::new(),
            traced: trace,
            complete: true,
        };
        let input_degrees: Vec<i32> = gens
            .iter()
            .map(|g| g.degree(gen_degrees).unwrap_or(i32::MIN))
            .collect();

        let mut queue: BTreeMap<i32, Vec<(Origin, Vector, Vector)>> = BTreeMap::new();
        for (j, g) in gens.iter().enumerate() {
            debug_assert!(g.is_homogeneous(gen_degrees), "inhomogeneous generator");
            let rep = if trace { Vector::unit(j) } else { Vector::zero() };
            if g.is_zero() {
                if opts.syzygies {
                    gb.syzygies.push(Vector::unit(j));
                }
                continue;
            }
            queue
                .entry(input_degrees[j])
                .or_default()
                .push((Origin::Input(j), g.clone(), rep));
        }
        if let Some(q) = &ring.relation {
            let dq = q.degree().expect("homogeneous relation") as i32;
            for i in 0..rank {
                queue.entry(dq + gen_degrees[i]).or_default().push((
                    Origin::Background,
                    Vector::from_poly(q, i),
                    Vector::zero(),
                ));
            }
        }
        // inputs come after background elements within a degree
        for items in queue.values_mut() {
            items.sort_by_key(|(o, _, _)| match o {
                Origin::Background => (0, 0),
                Origin::Input(j) => (1, *j),
                Origin::Pair => (2, 0),
            });
        }

        let mut pairs: BTreeMap<i32, Vec<Pair>> = BTreeMap::new();
        let use_product = !trace && rank == 1;

        loop {
            let next_pair = pairs.keys().next().copied();
            let next_gen = queue.keys().next().copied();
            let d = match (next_pair, next_gen) {
                (None, None) => break,
                (Some(a), None) => a,
                (None, Some(b)) => b,
                (Some(a), Some(b)) => a.min(b),
            };
            if let Some(limit) = opts.degree_limit {
                if d > limit {
                    gb.complete = false;
                    break;
                }
            }
            let mut todo: Vec<(Origin, Vector, Vector)> = Vec::new();
            if let Some(ps) = pairs.remove(&d) {
                for p in ps {
                    let (s, rep) = gb.s_vector(&p);
                    todo.push((Origin::Pair, s, rep));
                }
            }
            if let Some(items) = queue.remove(&d) {
                todo.extend(items);
            }
            for (origin, v, rep) in todo {
                let (h, hrep) = gb.reduce_inner(v, trace.then_some(rep));
                if h.is_zero() {
                    if opts.syzygies {
                        let s = hrep.unwrap_or_default();
                        if !s.is_zero() {
                            gb.syzygies.push(s);
                        }
                    }
                    continue;
                }
                if let Origin::Input(j) = origin {
                    gb.minimal.push(j);
                }
                let (h, inv) = h.make_monic(&field);
                let hrep = hrep.map(|r| r.scale(&field, inv));
                gb.insert(h, hrep.unwrap_or_default(), d, &mut pairs, use_product);
            }
        }
        gb.minimal.sort_unstable();
        gb
    }

    fn s_vector(&self, p: &Pair) -> (Vector, Vector) {
        let f = &self.ring.field;
        let gi = &self.basis[p.i];
        let gj = &self.basis[p.j];
        let li = gi.leading().unwrap().mon;
        let lj = gj.leading().unwrap().mon;
        let mi = li.quotient_of(&p.lcm);
        let mj = lj.quotient_of(&p.lcm);
        let s = Vector::zero()
            .add_scaled(f, gi, 1, &mi)
            .add_scaled(f, gj, f.neg(1), &mj);
        let rep = if self.traced {
            Vector::zero()
                .add_scaled(f, &self.reps[p.i], 1, &mi)
                .add_scaled(f, &self.reps[p.j], f.neg(1), &mj)
        } else {
            Vector::zero()
        };
        (s, rep)
    }

    fn insert(
        &mut self,
        h: Vector,
        rep: Vector,
        d: i32,
        pairs: &mut BTreeMap<i32, Vec<Pair>>,
        use_product: bool,
    ) {
        let n = self.basis.len();
        let lead = *h.leading().unwrap();
        let comp = lead.comp as usize;
        let cdeg = self.gen_degrees[comp];

        // Gebauer-Möller: new pairs
        let mut cands: Vec<(usize, Monomial, bool)> = self.by_comp[comp]
            .iter()
            .map(|&i| {
                let li = self.basis[i].leading().unwrap().mon;
                (i, li.lcm(&lead.mon), li.gcd_is_one(&lead.mon))
            })
            .collect();
        // criterion M: drop pairs whose lcm is a proper multiple of another
        let lcms: Vec<Monomial> = cands.iter().map(|c| c.1).collect();
        cands.retain(|c| !lcms.iter().any(|l| *l != c.1 && l.divides(&c.1)));
        // criterion F and the product criterion, one pair per lcm
        cands.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        let mut k = 0;
        while k < cands.len() {
            let mut e = k;
            while e < cands.len() && cands[e].1 == cands[k].1 {
                e += 1;
            }
            let coprime = use_product && cands[k..e].iter().any(|c| c.2);
            if !coprime {
                kept.push((cands[k].0, cands[k].1));
            }
            k = e;
        }

        // criterion B on existing pairs
        for list in pairs.values_mut() {
            list.retain(|p| {
                if self.basis[p.i].leading().unwrap().comp as usize != comp {
                    return true;
                }
                if !lead.mon.divides(&p.lcm) {
                    return true;
                }
                let li = self.basis[p.i].leading().unwrap().mon.lcm(&lead.mon);
                let lj = self.basis[p.j].leading().unwrap().mon.lcm(&lead.mon);
                li == p.lcm || lj == p.lcm
            });
        }
        pairs.retain(|_, l| !l.is_empty());

        for (i, lcm) in kept {
            let deg = lcm.degree() as i32 + cdeg;
            debug_assert!(deg > d);
            pairs.entry(deg).or_default().push(Pair { i, j: n, lcm });
        }
        self.basis.push(h);
        self.reps.push(rep);
        self.by_comp[comp].push(n);
    }

    fn find_divisor(&self, t: &Term) -> Option<usize> {
        self.by_comp[t.comp as usize]
            .iter()
            .copied()
            .find(|&k| self.basis[k].leading().unwrap().mon.divides(&t.mon))
    }

    /// Full reduction; `rep` tracks the coefficients on the input generators.
    fn reduce_inner(&self, v: Vector, mut rep: Option<Vector>) -> (Vector, Option<Vector>) {
        let f = &self.ring.field;
        let mut rest = v;
        let mut out: Vec<Term> = Vec::new();
        while let Some(&t) = rest.leading() {
            match self.find_divisor(&t) {
                Some(k) => {
                    let g = &self.basis[k];
                    let m = g.leading().unwrap().mon.quotient_of(&t.mon);
                    let c = f.neg(t.coef);
                    rest = rest.add_scaled(f, g, c, &m);
                    if let Some(r) = rep.as_mut() {
                        *r = r.add_scaled(f, &self.reps[k], c, &m);
                    }
                }
                None => {
                    out.push(t);
                    rest = Vector::from_sorted(rest.terms()[1..].to_vec());
                }
            }
        }
        (Vector::from_sorted(out), rep)
    }

    /// Normal form of `v` modulo the submodule.
    pub fn normal_form(&self, v: &Vector) -> Vector {
        self.reduce_inner(v.clone(), None).0
    }

    /// Returns `(r, c)` with `v = r + Σ c_j gens_j` (modulo the relation)
    /// and `r` in normal form.  Requires a traced basis.
    pub fn lift(&self, v: &Vector) -> (Vector, Vector) {
        assert!(self.traced, "lift needs a traced basis");
        let f = &self.ring.field;
        let (r, rep) = self.reduce_inner(v.clone(), Some(Vector::zero()));
        // reduce_inner accumulated -Σ c_j gens_j
        (r, rep.unwrap().scale(f, f.neg(1)))
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn gen_degrees(&self) -> &[i32] {
        &self.gen_degrees
    }

    pub fn rank(&self) -> usize {
        self.gen_degrees.len()
    }

    pub fn num_inputs(&self) -> usize {
        self.num_inputs
    }

    /// Basis elements, monic, in insertion order.
    pub fn elements(&self) -> &[Vector] {
        &self.basis
    }

    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.basis
            .iter()
            .map(|g| {
                let t = g.leading().unwrap();
                (t.mon, t.comp as usize)
            })
            .collect()
    }

    /// Indices of input generators that form a minimal generating set.
    pub fn minimal_generators(&self) -> &[usize] {
        &self.minimal
    }

    pub fn syzygies(&self) -> &[Vector] {
        &self.syzygies
    }

    /// False when a degree limit cut the computation short.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Tail-reduced basis sorted by leading term, largest first.
    pub fn reduced(&self) -> Vec<Vector> {
        let mut out: Vec<Vector> = Vec::with_capacity(self.basis.len());
        let f = &self.ring.field;
        for g in &self.basis {
            let lead = *g.leading().unwrap();
            let tail = Vector::from_sorted(g.terms()[1..].to_vec());
            let (mut r, _) = self.reduce_inner(tail, None);
            r = r.add(f, &Vector::from_sorted(vec![lead]));
            out.push(r);
        }
        out.sort_by(|a, b| super::vector::term_cmp(b.leading().unwrap(), a.leading().unwrap()));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Polynomial;

    fn vecs(r: &RingContext, polys: &[&str]) -> Vec<Vector> {
        polys
            .iter()
            .map(|s| Vector::from_poly(&r.parse(s).unwrap(), 0))
            .collect()
    }

    #[test]
    fn twisted_cubic_basis_and_syzygies() {
        let r = RingContext::p3();
        let g = vecs(&r, &["x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"]);
        let gb = GroebnerBasis::compute(
            &r,
            &[0],
            &g,
            &GbOptions {
                syzygies: true,
                ..Default::default()
            },
        );
        assert_eq!(gb.minimal_generators(), &[0, 1, 2]);
        // all syzygies vanish and are of degree 3
        for s in gb.syzygies() {
            let mut acc = Polynomial::zero();
            for (j, gj) in g.iter().enumerate() {
                acc = acc.add(&r.field, &s.component(j).mul(&r.field, &gj.component(0)));
            }
            assert!(acc.is_zero());
            assert_eq!(s.degree(&[2, 2, 2]), Some(3));
        }
        assert!(gb.syzygies().len() >= 2);
    }

    #[test]
    fn lift_recovers_combination() {
        let r = RingContext::p3();
        let g = vecs(&r, &["x0^2", "x1^2"]);
        let gb = GroebnerBasis::compute(
            &r,
            &[0],
            &g,
            &GbOptions {
                trace: true,
                ..Default::default()
            },
        );
        let v = Vector::from_poly(&r.parse("x0^2*x2 + 3*x1^3 + x2*x3^2").unwrap(), 0);
        let (rem, c) = gb.lift(&v);
        assert_eq!(rem, Vector::from_poly(&r.parse("x2*x3^2").unwrap(), 0));
        let mut acc = rem.clone();
        for j in 0..2 {
            acc = acc.add(&r.field, &g[j].mul_poly(&r.field, &c.component(j)));
        }
        assert_eq!(acc, v);
    }

    #[test]
    fn non_minimal_input_detected() {
        let r = RingContext::p3();
        let g = vecs(&r, &["x0", "x0*x1", "x1"]);
        let gb = GroebnerBasis::compute(&r, &[0], &g, &GbOptions::default());
        assert_eq!(gb.minimal_generators(), &[0, 2]);
    }

    #[test]
    fn quotient_ring_background() {
        let r = RingContext::quadric_threefold();
        let g = vecs(&r, &["x0", "x2", "x4"]);
        let gb = GroebnerBasis::compute(&r, &[0], &g, &GbOptions::default());
        assert_eq!(gb.minimal_generators(), &[0, 1, 2]);
        let q = Vector::from_poly(r.relation.as_ref().unwrap(), 0);
        assert!(gb.contains(&q));
    }
}
