//! Intermediate cohomology through local duality over the ambient
//! polynomial ring: `H^i_*(E~) = Ext^{n-1-i}(E, P(-n))^*` for `i >= 1`.

use super::curve::CurveIdeal;
use super::module::SheafModule;
use crate::error::{Error, Result};
use crate::homalg::{ext_module, over_ambient, FiniteLengthModule};
use crate::modgb::ModulePresentation;

/// `H^1_*(E~)` as a finite-length module.
pub fn h1_star(e: &SheafModule) -> Result<FiniteLengthModule> {
    let ext = duality_ext(e, 1)?;
    let m = FiniteLengthModule::from_presentation(&ext).map_err(|_| Error::NotFiniteLength)?;
    Ok(m.graded_dual())
}

/// The module `Ext^{n-3}(E, P(-n))` whose graded dual is `H^2_*(E~)`.
pub fn h2_star_dual(e: &SheafModule) -> Result<ModulePresentation> {
    duality_ext(e, 2)
}

/// `H^i_*` for `i = 1, 2`; the second is returned by its dual module.
pub fn h_i_star(e: &SheafModule, i: usize) -> Result<Cohomology> {
    match i {
        1 => Ok(Cohomology::FiniteLength(h1_star(e)?)),
        2 => Ok(Cohomology::Dual(h2_star_dual(e)?)),
        _ => Err(Error::InvalidArgument(format!("H^{i}_* is not provided"))),
    }
}

#[derive(Clone, Debug)]
pub enum Cohomology {
    FiniteLength(FiniteLengthModule),
    /// A module `D` with `H^i_* = D^*`.
    Dual(ModulePresentation),
}

fn duality_ext(e: &SheafModule, i: usize) -> Result<ModulePresentation> {
    let amb = over_ambient(e.module());
    let n = amb.ring().num_vars;
    if n < i + 2 {
        return Err(Error::UnsupportedRing(format!("{n} variables")));
    }
    let ext = ext_module(&amb, n - 1 - i, -(n as i32))?;
    Ok(ext)
}

/// The Rao module `H^1_*(I_C)`.
pub fn rao_module(c: &CurveIdeal) -> Result<FiniteLengthModule> {
    h1_star(&c.sheaf(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modgb::{FreeModule, Ideal};
    use crate::ring::RingContext;

    /// `h^1(I(n)) = h^0(O_C(n)) - dim (S/I)_n`, with `h^0(O_C(n))` for a
    /// disjoint union of lines counted line by line.
    fn lines_oracle(lines: usize, n: i32) -> usize {
        let h0 = if n >= 0 { lines * (n as usize + 1) } else { 0 };
        let r = RingContext::p3();
        let i = Ideal::parse(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]).unwrap();
        h0 - ModulePresentation::quotient_ring(&i).hilbert_function(n).min(h0)
    }

    #[test]
    fn free_and_line() {
        let r = RingContext::p3();
        let f = SheafModule::free(&r, FreeModule::new(vec![0, -2]));
        assert!(h1_star(&f).unwrap().is_zero());
        assert!(h2_star_dual(&f).unwrap().is_zero());
        let line = CurveIdeal::new(Ideal::parse(&r, &["x0", "x1"]).unwrap()).unwrap();
        assert!(rao_module(&line).unwrap().is_zero());
    }

    #[test]
    fn skew_lines_rao() {
        let r = RingContext::p3();
        let c = CurveIdeal::new(Ideal::parse(&r, &["x0*x2", "x0*x3", "x1*x2", "x1*x3"]).unwrap()).unwrap();
        let m = rao_module(&c).unwrap();
        for n in -2..=4 {
            assert_eq!(m.dim(n), lines_oracle(2, n), "degree {n}");
        }
    }

    #[test]
    fn syzygy_of_maximal_ideal() {
        let r = RingContext::p3();
        let row = crate::modgb::ops::variables_row(&r);
        let e = SheafModule::new(&ModulePresentation::image(&crate::modgb::syzygy_module(&row)));
        let m = h1_star(&e).unwrap();
        assert_eq!(m.total_dim(), 1);
        assert_eq!(m.dim(0), 1);
    }
}
