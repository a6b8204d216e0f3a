//! Hilbert functions and polynomials.

use std::fmt;

use super::resolution::minimal_free_resolution;
use crate::modgb::{GradedMatrix, ModulePresentation, Vector};

/// A numerical polynomial stored by its values' forward differences at a
/// base point: `P(n) = Σ_k diffs[k] * C(n - base, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertPolynomial {
    base: i64,
    diffs: Vec<i64>,
}

impl HilbertPolynomial {
    /// Interpolates from `values[k] = P(base + k)`.
    pub fn interpolate(base: i64, values: &[i64]) -> Self {
        let mut diffs = Vec::with_capacity(values.len());
        let mut row = values.to_vec();
        while !row.is_empty() {
            diffs.push(row[0]);
            row = row.windows(2).map(|w| w[1] - w[0]).collect();
        }
        while diffs.len() > 1 && *diffs.last().unwrap() == 0 {
            diffs.pop();
        }
        if diffs == [0] {
            diffs.clear();
        }
        HilbertPolynomial { base, diffs }
    }

    pub fn eval(&self, n: i64) -> i64 {
        let x = n - self.base;
        let mut acc = 0i128;
        let mut binom = 1i128; // C(x, k)
        for (k, &d) in self.diffs.iter().enumerate() {
            acc += d as i128 * binom;
            binom = binom * (x as i128 - k as i128) / (k as i128 + 1);
        }
        acc as i64
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        (!self.diffs.is_empty()).then(|| self.diffs.len() - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.diffs.is_empty()
    }

    /// Multiplicity: leading coefficient times `degree!`.
    pub fn multiplicity(&self) -> i64 {
        self.diffs.last().copied().unwrap_or(0)
    }

    /// Coefficients of `n^k` as reduced fractions `(num, den)`.
    pub fn coefficients(&self) -> Vec<(i64, i64)> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        // values at 0..=d determine the polynomial; solve via Lagrange in
        // rationals with common denominator d!
        let fact: i128 = (1..=d as i128).product::<i128>().max(1);
        // P(n) * d! has integer coefficients; expand Σ diffs_k C(n-base,k)
        let mut poly = vec![0i128; d + 1]; // scaled by fact
        for (k, &c) in self.diffs.iter().enumerate() {
            // C(n - base, k) * k! = Π_{i<k} (n - base - i)
            let mut term = vec![0i128; k + 1];
            term[0] = 1;
            for i in 0..k {
                let shift = -(self.base as i128) - i as i128;
                let mut next = vec![0i128; k + 1];
                for (e, &t) in term.iter().enumerate() {
                    if t == 0 {
                        continue;
                    }
                    next[e + 1] += t;
                    next[e] += t * shift;
                }
                term = next;
            }
            let kf: i128 = (1..=k as i128).product::<i128>().max(1);
            for (e, &t) in term.iter().enumerate() {
                poly[e] += c as i128 * t * (fact / kf);
            }
        }
        poly.iter()
            .map(|&num| {
                let g = gcd(num.abs(), fact);
                ((num / g) as i64, (fact / g) as i64)
            })
            .collect()
    }

    /// `(degree, arithmetic genus)` when the polynomial is `d n + 1 - g`.
    pub fn curve_invariants(&self) -> Option<(i64, i64)> {
        if self.degree() != Some(1) {
            return None;
        }
        let d = self.multiplicity();
        let c0 = self.eval(0);
        Some((d, 1 - c0))
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.coefficients();
        if coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &(num, den)) in coeffs.iter().enumerate().rev() {
            if num == 0 {
                continue;
            }
            let sign = if num < 0 { "-" } else { "+" };
            if first {
                if num < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = num.abs();
            let c = if den == 1 { format!("{a}") } else { format!("{a}/{den}") };
            match k {
                0 => write!(f, "{c}")?,
                _ => {
                    if !(a == 1 && den == 1) {
                        write!(f, "{c}*")?;
                    }
                    if k == 1 {
                        write!(f, "n")?;
                    } else {
                        write!(f, "n^{k}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The module as a module over the ambient polynomial ring (adding the
/// relation times each generator).
pub fn over_ambient(m: &ModulePresentation) -> ModulePresentation {
    let ring = m.ring();
    let Some(q) = &ring.relation else {
        return m.clone();
    };
    let amb = ring.ambient();
    let f0 = m.free_cover().clone();
    let rel = m.relations();
    let cols: Vec<Vector> = (0..f0.rank()).map(|i| Vector::from_poly(q, i)).collect();
    let qcols = GradedMatrix::from_columns(&amb, f0.clone(), cols).expect("homogeneous");
    let base = GradedMatrix::new(&amb, f0, rel.source().clone(), rel.columns().to_vec()).expect("same data");
    ModulePresentation::cokernel(&base.concat(&qcols))
}

/// Hilbert polynomial, interpolated past the point where the Hilbert
/// series numerator (read off a minimal resolution over the ambient
/// polynomial ring) stops contributing non-polynomial terms.
pub fn hilbert_polynomial(m: &ModulePresentation) -> HilbertPolynomial {
    let amb = over_ambient(m);
    let res = minimal_free_resolution(&amb, 64).expect("polynomial ring resolutions terminate");
    let nv = amb.ring().num_vars as i32;
    let max_j = (0..=res.differentials().len())
        .flat_map(|i| res.free_module(i).degrees())
        .max()
        .unwrap_or(0);
    let base = (max_j - nv + 1) as i64;
    let values: Vec<i64> = (0..=nv as i64)
        .map(|k| m.hilbert_function((base + k) as i32) as i64)
        .collect();
    HilbertPolynomial::interpolate(base, &values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgb::Ideal;
    use crate::ring::RingContext;

    fn hp(gens: &[&str]) -> HilbertPolynomial {
        let r = RingContext::p3();
        hilbert_polynomial(&ModulePresentation::quotient_ring(&Ideal::parse(&r, gens).unwrap()))
    }

    #[test]
    fn curve_examples() {
        assert_eq!(hp(&["x0", "x1"]).curve_invariants(), Some((1, 0)));
        assert_eq!(hp(&["x0", "x1"]).to_string(), "n + 1");
        let skew = hp(&["x0*x2", "x0*x3", "x1*x2", "x1*x3"]);
        assert_eq!(skew.curve_invariants(), Some((2, -1)));
        assert_eq!(skew.to_string(), "2*n + 2");
        let ci = hp(&["x0^2 + x1^2 + x2^2 + x3^2", "x0^3 + x1^3 + x2^3"]);
        assert_eq!(ci.curve_invariants(), Some((6, 4)));
    }

    #[test]
    fn plane_and_point() {
        let r = RingContext::p3();
        let s = hilbert_polynomial(&ModulePresentation::free(&r, crate::modgb::FreeModule::free(1)));
        assert_eq!(s.degree(), Some(3));
        assert_eq!(s.eval(3), 20);
        assert_eq!(s.to_string(), "1/6*n^3 + n^2 + 11/6*n + 1");
        assert!(hp(&["x0", "x1", "x2", "x3"]).is_zero());
    }
}
