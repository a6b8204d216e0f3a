//! Coefficient field, monomials, polynomials and the ambient graded ring.

pub mod field;
mod irreducible;
pub mod monomial;
pub mod parse;
pub mod poly;

pub use field::{Field, DEFAULT_PRIME};
pub use monomial::{Monomial, MAX_VARS};
pub use poly::Polynomial;

use crate::error::{Error, Result};

/// The graded ring everything lives over: either the polynomial ring
/// `k[x0..x_n]` or a quotient `k[x0..x_n]/(q)` by one irreducible form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingContext {
    pub field: Field,
    pub num_vars: usize,
    pub relation: Option<Polynomial>,
    /// Twist of the canonical module: `-num_vars`, or `deg q - num_vars`.
    pub canonical_twist: i32,
    /// Krull dimension.
    pub dim: usize,
}

impl RingContext {
    /// Polynomial ring in `num_vars` variables.
    pub fn polynomial(field: Field, num_vars: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&num_vars));
        RingContext {
            field,
            num_vars,
            relation: None,
            canonical_twist: -(num_vars as i32),
            dim: num_vars,
        }
    }

    /// Homogeneous coordinate ring of P^3 over GF(32003).
    pub fn p3() -> Self {
        Self::polynomial(Field::default(), 4)
    }

    /// `k[x0..x_{n-1}]/(q)` for a homogeneous irreducible `q`.
    pub fn hypersurface(field: Field, num_vars: usize, q: Polynomial) -> Result<Self> {
        let d = match q.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(Error::NonHomogeneous("hypersurface relation".into())),
        };
        match irreducible::certify_irreducible(&field, &q, num_vars, 0x5eed) {
            Some(true) => {}
            _ => return Err(Error::ReducibleRelation),
        }
        Ok(RingContext {
            field,
            num_vars,
            relation: Some(q.make_monic(&field)),
            canonical_twist: d as i32 - num_vars as i32,
            dim: num_vars - 1,
        })
    }

    /// The cone over the smooth quadric threefold `x0x1 + x2x3 + x4^2`.
    pub fn quadric_threefold() -> Self {
        let f = Field::default();
        let q = parse::parse_polynomial_in("x0*x1 + x2*x3 + x4^2", &f, 5).expect("valid quadric");
        Self::hypersurface(f, 5, q).expect("smooth quadric is irreducible")
    }

    pub fn is_quotient(&self) -> bool {
        self.relation.is_some()
    }

    /// The polynomial ring the quotient is taken in.
    pub fn ambient(&self) -> RingContext {
        Self::polynomial(self.field, self.num_vars)
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse::parse_polynomial_in(text, &self.field, self.num_vars)
    }

    /// Parses and rejects non-homogeneous input.
    pub fn parse_homogeneous(&self, text: &str) -> Result<Polynomial> {
        let p = self.parse(text)?;
        if !p.is_homogeneous() {
            return Err(Error::NonHomogeneous(text.trim().to_string()));
        }
        Ok(p)
    }

    pub fn print(&self, p: &Polynomial) -> String {
        p.to_string_with(&self.field, self.num_vars)
    }

    /// Reduces modulo the relation (identity over a polynomial ring).
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let Some(q) = &self.relation else {
            return p.clone();
        };
        let (lm, _) = q.leading().expect("nonzero relation");
        let f = &self.field;
        let mut rest = p.clone();
        let mut out = Vec::new();
        while let Some((m, c)) = rest.leading() {
            if lm.divides(&m) {
                rest = rest.add_scaled(f, q, f.neg(c), &lm.quotient_of(&m));
            } else {
                out.push((m, c));
                rest = Polynomial::from_sorted(rest.terms()[1..].to_vec());
            }
        }
        Polynomial::from_sorted(out)
    }
}
