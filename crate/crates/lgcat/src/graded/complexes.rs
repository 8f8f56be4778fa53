//! `ComplexSource` implementations: the monomial basis of a semifree cdga and
//! the generator-times-monomial basis of a semifree module.

use num::BigRational;

use super::cdga::SemifreeCDGA;
use super::element::{AlgebraShape, GradedElement, Parity};
use super::module::SemifreeModule;
use super::slab::ComplexSource;
use crate::error::Result;
use crate::ring::{enumerate_monomials, Mono};

/// Enumerate all odd-generator masks whose weight fits in `budget`, assuming
/// weight-0 odd generators are allowed (their subsets are finite anyway).
pub fn enumerate_masks(shape: &AlgebraShape, budget: u32, f: &mut impl FnMut(u64, u32)) {
    fn rec(shape: &AlgebraShape, i: usize, mask: u64, used: u32, budget: u32, f: &mut impl FnMut(u64, u32)) {
        if i == shape.odd_len() {
            f(mask, used);
            return;
        }
        rec(shape, i + 1, mask, used, budget, f);
        let w = shape.odd_weight(i);
        if used + w <= budget {
            rec(shape, i + 1, mask | (1u64 << i), used + w, budget, f);
        }
    }
    rec(shape, 0, 0, 0, budget, f);
}

/// The underlying chain complex of a semifree cdga, basis all monomials.
pub struct CdgaComplex<'a>(pub &'a SemifreeCDGA);

impl ComplexSource for CdgaComplex<'_> {
    type Key = (Mono, u64);

    fn enumerate(&self, cap: u32) -> Result<Vec<(Self::Key, u32, Parity)>> {
        let shape = self.0.shape();
        let mut out = Vec::new();
        let mut current = vec![0u16; shape.even.len()];
        enumerate_monomials(&shape.even, cap, 0, &mut current, &mut |m, w| {
            enumerate_masks(shape, cap - w, &mut |mask, mw| {
                out.push(((m.to_vec(), mask), w + mw, Parity::of_mask(mask)));
            });
        });
        Ok(out)
    }

    fn differential(&self, key: &Self::Key) -> Result<Vec<(Self::Key, u32, BigRational)>> {
        let shape = self.0.shape();
        let e = GradedElement::from_terms(
            shape,
            [(key.0.clone(), key.1, BigRational::from_integer(1.into()))],
        );
        let de = self.0.differential(&e);
        Ok(de
            .terms()
            .map(|((m, mask), c)| {
                let w = shape.term_weight(m, *mask);
                ((m.clone(), *mask), w, c.clone())
            })
            .collect())
    }
}

/// The underlying chain complex of a semifree module: keys are
/// (generator index, base monomial, base mask).
pub struct ModuleComplex<'a>(pub &'a SemifreeModule);

impl ComplexSource for ModuleComplex<'_> {
    type Key = (usize, Mono, u64);

    fn enumerate(&self, cap: u32) -> Result<Vec<(Self::Key, u32, Parity)>> {
        let m = self.0;
        let shape = m.base().shape();
        let mut out = Vec::new();
        for g in 0..m.rank() {
            let gw = m.gen_weight(g);
            if gw > cap {
                continue;
            }
            let budget = cap - gw;
            let mut current = vec![0u16; shape.even.len()];
            enumerate_monomials(&shape.even, budget, 0, &mut current, &mut |mono, w| {
                enumerate_masks(shape, budget - w, &mut |mask, mw| {
                    let parity = Parity::of_mask(mask).combine(m.gen_parity(g));
                    out.push(((g, mono.to_vec(), mask), gw + w + mw, parity));
                });
            });
        }
        Ok(out)
    }

    fn differential(&self, key: &Self::Key) -> Result<Vec<(Self::Key, u32, BigRational)>> {
        let m = self.0;
        let base = m.base();
        let shape = base.shape();
        let (g, mono, mask) = key;
        let c = GradedElement::from_terms(
            shape,
            [(mono.clone(), *mask, BigRational::from_integer(1.into()))],
        );
        let mut out = Vec::new();
        // (d c) * g
        let dc = base.differential(&c);
        for ((m2, s2), coeff) in dc.terms() {
            let w = shape.term_weight(m2, *s2) + m.gen_weight(*g);
            out.push(((*g, m2.clone(), *s2), w, coeff.clone()));
        }
        // (-1)^{|c|} c * d(g)
        let sign = match Parity::of_mask(*mask) {
            Parity::Even => 1,
            Parity::Odd => -1,
        };
        for (i, entry) in m.diff_column(*g) {
            let prod = (&c * entry).scale(&BigRational::from_integer(sign.into()));
            for ((m2, s2), coeff) in prod.terms() {
                let w = shape.term_weight(m2, *s2) + m.gen_weight(*i);
                out.push(((*i, m2.clone(), *s2), w, coeff.clone()));
            }
        }
        Ok(out)
    }
}
