//! Text grammar for polynomials:
//!
//! ```text
//! poly  := ['+'|'-'] term (('+'|'-') term)*
//! term  := coeff | coeff '*' monos | monos
//! monos := var ['^' exp] ('*' var ['^' exp])*
//! var   := 'x' digit+
//! ```
//! Whitespace is ignored.

use super::field::Field;
use super::monomial::{Monomial, MAX_EXPONENT};
use super::poly::Polynomial;
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    nvars: usize,
    field: &'a Field,
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map(|c| c.0).unwrap_or_else(|| {
            self.chars.last().map(|c| c.0 + c.1.len_utf8()).unwrap_or(0)
        })
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax {
            position: self.offset(),
            message: msg.to_string(),
        })
    }

    fn number(&mut self) -> Option<u64> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(c) = self.peek() {
            if let Some(d) = c.to_digit(10) {
                v = v.saturating_mul(10).saturating_add(u64::from(d));
                self.pos += 1;
            } else {
                break;
            }
        }
        (self.pos > start).then_some(v)
    }

    fn var_power(&mut self, exps: &mut [u32]) -> Result<()> {
        if self.peek() != Some('x') {
            return self.err("expected variable");
        }
        let var_pos = self.offset();
        self.pos += 1;
        let idx = match self.number() {
            Some(i) => i as usize,
            None => return self.err("expected variable index after 'x'"),
        };
        if idx >= self.nvars {
            return Err(Error::UnknownVariable {
                name: format!("x{idx}"),
                position: var_pos,
            });
        }
        let mut e = 1u64;
        if self.peek() == Some('^') {
            self.pos += 1;
            e = match self.number() {
                Some(e) => e,
                None => return self.err("expected exponent after '^'"),
            };
        }
        let total = u64::from(exps[idx]) + e;
        if total > u64::from(MAX_EXPONENT) {
            return self.err("exponent too large");
        }
        exps[idx] = total as u32;
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, u32)> {
        let mut coeff = 1u32;
        let mut exps = vec![0u32; self.nvars];
        let mut saw_factor = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.number().unwrap_or(0);
                    let p = u64::from(self.field.characteristic());
                    coeff = self.field.mul(coeff, (n % p) as u32);
                }
                Some('x') => self.var_power(&mut exps)?,
                _ => {
                    if saw_factor {
                        return self.err("expected factor after '*'");
                    }
                    return self.err("expected term");
                }
            }
            saw_factor = true;
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::from_exponents(&exps), coeff))
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let mut negative = false;
            match self.peek() {
                Some('+') => self.pos += 1,
                Some('-') => {
                    negative = true;
                    self.pos += 1;
                }
                None if !first => break,
                _ if first => {}
                Some(_) => return self.err("expected '+' or '-'"),
                None => break,
            }
            let (m, c) = self.term()?;
            terms.push((m, if negative { self.field.neg(c) } else { c }));
            first = false;
            if self.peek().is_none() {
                break;
            }
        }
        Ok(Polynomial::from_terms(self.field, terms))
    }
}

/// Parses text into a polynomial in `nvars` variables.
pub fn parse_polynomial_in(text: &str, field: &Field, nvars: usize) -> Result<Polynomial> {
    let chars: Vec<(usize, char)> = text.char_indices().filter(|c| !c.1.is_whitespace()).collect();
    let mut p = Parser {
        chars,
        pos: 0,
        nvars,
        field,
    };
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    p.polynomial()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> Field {
        Field::new(32003).unwrap()
    }

    #[test]
    fn documented_examples() {
        let p = parse_polynomial_in("x0^2*x1 + 3*x2*x3^2", &f(), 4).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.degree(), Some(3));
        assert!(parse_polynomial_in("x0 - x0", &f(), 4).unwrap().is_zero());
        assert_eq!(
            parse_polynomial_in("32004*x1", &f(), 4).unwrap(),
            parse_polynomial_in("x1", &f(), 4).unwrap()
        );
    }

    #[test]
    fn errors_carry_positions() {
        match parse_polynomial_in("x0 + x7", &f(), 4) {
            Err(Error::UnknownVariable { name, position }) => {
                assert_eq!(name, "x7");
                assert_eq!(position, 5);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial_in("x0 + * x1", &f(), 4), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial_in("", &f(), 4), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial_in("x0 x1", &f(), 4), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial_in("x0^", &f(), 4), Err(Error::Syntax { .. })));
    }

    #[test]
    fn leading_sign_and_constants() {
        let p = parse_polynomial_in("-2*x0*x1 + 5", &f(), 4).unwrap();
        assert_eq!(p.to_string_with(&f(), 4), "-2*x0*x1 + 5");
        let q = parse_polynomial_in("x0*x0*3", &f(), 4).unwrap();
        assert_eq!(q.to_string_with(&f(), 4), "3*x0^2");
    }
}
