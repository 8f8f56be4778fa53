//! Semifree dg-modules over a semifree cdga: a finite list of free module
//! generators with a differential matrix over the base. The differential may
//! square to zero (dg-modules) or to a declared central even element
//! (factorization-type twists).

use std::fmt;

use num::BigRational;

use super::cdga::SemifreeCDGA;
use super::element::{GradedElement, Parity};
use crate::error::{LgError, Result};

#[derive(Debug, Clone)]
pub struct SemifreeModule {
    base: SemifreeCDGA,
    gen_names: Vec<String>,
    gen_parity: Vec<Parity>,
    gen_weight: Vec<u32>,
    /// `diff[j]` lists `(i, c)` with `d(g_j) = sum c * g_i`, coefficients on
    /// the left.
    diff: Vec<Vec<(usize, GradedElement)>>,
    twist: Option<GradedElement>,
}

impl SemifreeModule {
    pub fn new(
        base: SemifreeCDGA,
        gens: Vec<(String, Parity, u32)>,
        diff: Vec<Vec<(usize, GradedElement)>>,
        twist: Option<GradedElement>,
    ) -> Result<Self> {
        if diff.len() != gens.len() {
            return Err(LgError::DimensionMismatch("module differential length".into()));
        }
        let gen_names: Vec<String> = gens.iter().map(|g| g.0.clone()).collect();
        let gen_parity: Vec<Parity> = gens.iter().map(|g| g.1).collect();
        let gen_weight: Vec<u32> = gens.iter().map(|g| g.2).collect();
        let m = SemifreeModule { base, gen_names, gen_parity, gen_weight, diff, twist };
        m.validate()?;
        Ok(m)
    }

    /// Free rank-one module concentrated in even parity with zero
    /// differential.
    pub fn unit(base: SemifreeCDGA) -> Self {
        SemifreeModule {
            base,
            gen_names: vec!["e".into()],
            gen_parity: vec![Parity::Even],
            gen_weight: vec![0],
            diff: vec![Vec::new()],
            twist: None,
        }
    }

    fn validate(&self) -> Result<()> {
        for (j, col) in self.diff.iter().enumerate() {
            for (i, c) in col {
                if c.is_zero() {
                    continue;
                }
                let want = self.gen_parity[j].flip().combine(self.gen_parity[*i]);
                if !c.is_homogeneous_of(want) {
                    return Err(LgError::ParityMismatch(format!(
                        "module differential entry ({j} -> {i}) has wrong parity"
                    )));
                }
            }
        }
        // d^2(g_j) = sum_k [ d(D[j][k]) + sum_i (-1)^{|D[j][i]|} D[j][i] D[i][k] ] g_k
        for j in 0..self.rank() {
            let mut acc: Vec<GradedElement> =
                (0..self.rank()).map(|_| GradedElement::zero(self.base.shape())).collect();
            for (i, c) in &self.diff[j] {
                let dc = self.base.differential(c);
                acc[*i] = &acc[*i] + &dc;
                let sign = match c.parity() {
                    Some(Parity::Odd) => -1,
                    _ => 1,
                };
                for (k, c2) in &self.diff[*i] {
                    let prod = (&(c * c2)).scale(&BigRational::from_integer(sign.into()));
                    acc[*k] = &acc[*k] + &prod;
                }
            }
            for (k, entry) in acc.iter().enumerate() {
                let expected = if k == j {
                    self.twist.clone().unwrap_or_else(|| GradedElement::zero(self.base.shape()))
                } else {
                    GradedElement::zero(self.base.shape())
                };
                if *entry != expected {
                    return Err(LgError::Invalid(format!(
                        "module differential squares incorrectly at ({j}, {k}): got {entry}, expected {expected}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &SemifreeCDGA {
        &self.base
    }

    pub fn rank(&self) -> usize {
        self.gen_names.len()
    }

    pub fn gen_name(&self, i: usize) -> &str {
        &self.gen_names[i]
    }

    pub fn gen_parity(&self, i: usize) -> Parity {
        self.gen_parity[i]
    }

    pub fn gen_weight(&self, i: usize) -> u32 {
        self.gen_weight[i]
    }

    pub fn diff_column(&self, j: usize) -> &[(usize, GradedElement)] {
        &self.diff[j]
    }

    pub fn twist(&self) -> Option<&GradedElement> {
        self.twist.as_ref()
    }
}

impl fmt::Display for SemifreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "free module of rank {} over {}", self.rank(), self.base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::VarTable;

    #[test]
    fn unit_module_is_valid() {
        let base = SemifreeCDGA::polynomial(&VarTable::new(["x"]).unwrap());
        let m = SemifreeModule::unit(base);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn koszul_two_term_module() {
        // base K[x], gens e (even), f (odd), d(f) = x e, d(e) = 0
        let base = SemifreeCDGA::polynomial(&VarTable::new(["x"]).unwrap());
        let x = GradedElement::even_var(base.shape(), 0);
        let m = SemifreeModule::new(
            base,
            vec![("e".into(), Parity::Even, 0), ("f".into(), Parity::Odd, 0)],
            vec![Vec::new(), vec![(0, x)]],
            None,
        );
        assert!(m.is_ok());
    }

    #[test]
    fn twist_must_match() {
        // d(e) = x f, d(f) = x e: d^2 = x^2 id, a factorization-type twist
        let base = SemifreeCDGA::polynomial(&VarTable::new(["x"]).unwrap());
        let x = GradedElement::even_var(base.shape(), 0);
        let gens = vec![("e".into(), Parity::Even, 0), ("f".into(), Parity::Odd, 0)];
        let diff = vec![vec![(1, x.clone())], vec![(0, x.clone())]];
        assert!(SemifreeModule::new(base.clone(), gens.clone(), diff.clone(), None).is_err());
        let x2 = &x * &x;
        assert!(SemifreeModule::new(base, gens, diff, Some(x2)).is_ok());
    }
}
