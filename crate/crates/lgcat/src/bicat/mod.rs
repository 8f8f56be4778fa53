//! The bicategory of matrix factorizations: objects are variable tuples,
//! 1-morphisms are pairs (extra tuple, potential), 2-morphisms are homotopy
//! classes of matrix factorizations of the potential difference, represented
//! by finite-rank factorizations and compared through cohomology invariants.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{LgError, Result};
use crate::graded::{module_cohomology_hilbert, SemifreeModule};
use crate::hilbert::HilbertFunction;
use crate::mf::{end_complex, tensor_mf, unit_mf, MatrixFactorization};
use crate::ring::{parse_poly, Polynomial, VarTable};

/// Fresh-name supply: suffixes `_g<n>` with one counter per diagram. Clash
/// detection is the caller's: the freshener only hands out new candidates.
#[derive(Debug, Default)]
pub struct Freshener {
    counter: usize,
}

impl Freshener {
    pub fn new() -> Self {
        Freshener::default()
    }

    /// Keep `base` when it is not taken, otherwise append `_g<n>` suffixes
    /// until the name is free.
    pub fn rename_avoiding(&mut self, base: &str, taken: impl Fn(&str) -> bool) -> String {
        if !taken(base) {
            return base.to_string();
        }
        loop {
            self.counter += 1;
            let cand = format!("{base}_g{}", self.counter);
            if !taken(&cand) {
                return cand;
            }
        }
    }
}

/// An object: a finite tuple of even variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MFObject {
    pub vars: Vec<String>,
}

impl MFObject {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        MFObject { vars: vars.into_iter().map(Into::into).collect() }
    }

    pub fn empty() -> Self {
        MFObject { vars: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }
}

impl fmt::Display for MFObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.vars.join(", "))
    }
}

/// A 1-morphism `source -> target`: an extra tuple and a potential in the
/// polynomial ring on source, target, and extra variables together.
#[derive(Debug, Clone)]
pub struct MFOneMorphism {
    pub source: MFObject,
    pub target: MFObject,
    pub extra: Vec<String>,
    pub table: Arc<VarTable>,
    pub potential: Polynomial,
}

impl MFOneMorphism {
    pub fn new(
        source: MFObject,
        target: MFObject,
        extra: Vec<String>,
        potential: Polynomial,
    ) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        names.extend(source.vars.iter().cloned());
        names.extend(target.vars.iter().cloned());
        names.extend(extra.iter().cloned());
        let table = VarTable::new(names)?;
        let potential = potential.transfer(&table)?;
        Ok(MFOneMorphism { source, target, extra, table, potential })
    }

    pub fn parse(
        source: MFObject,
        target: MFObject,
        extra: Vec<String>,
        potential: &str,
    ) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        names.extend(source.vars.iter().cloned());
        names.extend(target.vars.iter().cloned());
        names.extend(extra.iter().cloned());
        let table = VarTable::new(names)?;
        let potential = parse_poly(&table, potential)?;
        Ok(MFOneMorphism { source, target, extra, table, potential })
    }

    pub fn same_as(&self, other: &MFOneMorphism) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.extra == other.extra
            && match other.potential.transfer(&self.table) {
                Ok(p) => p == self.potential,
                Err(_) => false,
            }
    }

    /// Indices of the extra variables inside the table.
    pub fn extra_indices(&self) -> Vec<usize> {
        self.extra.iter().map(|n| self.table.position(n).unwrap()).collect()
    }
}

impl fmt::Display for MFOneMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(({}), {}) : {} -> {}",
            self.extra.join(", "),
            self.potential,
            self.source,
            self.target
        )
    }
}

/// A 2-morphism: a finite-rank matrix factorization of `V_target - V_source`
/// over the variables of both 1-morphisms.
#[derive(Debug, Clone)]
pub struct MFTwoMorphism {
    pub source: MFOneMorphism,
    pub target: MFOneMorphism,
    pub mf: MatrixFactorization,
}

impl MFTwoMorphism {
    pub fn new(
        source: MFOneMorphism,
        target: MFOneMorphism,
        mf: MatrixFactorization,
    ) -> Result<Self> {
        if source.source != target.source || source.target != target.target {
            return Err(LgError::CompositionMismatch(
                "2-morphism endpoints have different boundary objects".into(),
            ));
        }
        let table = mf.table();
        let v_src = source.potential.transfer(table)?;
        let v_tgt = target.potential.transfer(table)?;
        let expected = &v_tgt - &v_src;
        if mf.potential() != &expected {
            return Err(LgError::PotentialMismatch(format!(
                "factorization potential {} should be {}",
                mf.potential(),
                expected
            )));
        }
        mf.verify()?;
        Ok(MFTwoMorphism { source, target, mf })
    }
}

/// Horizontal composition of 1-morphisms: concatenate the extra variables,
/// including the intermediary tuple, and sum the potentials. Name clashes in
/// the right factor are freshened.
pub fn h_compose_1(
    f: &MFOneMorphism,
    g: &MFOneMorphism,
    fresh: &mut Freshener,
) -> Result<MFOneMorphism> {
    if f.target != g.source {
        return Err(LgError::CompositionMismatch(format!(
            "target {} of the first differs from source {} of the second",
            f.target, g.source
        )));
    }
    // rename clashing names of g (its extra and target variables; its source
    // equals f.target and is shared on purpose)
    let mut forbidden: Vec<String> = f.table.names().to_vec();
    let mut rename: BTreeMap<String, String> = BTreeMap::new();
    for n in g.target.vars.iter().chain(g.extra.iter()) {
        let nn = fresh.rename_avoiding(n, |cand| forbidden.iter().any(|t| t == cand));
        forbidden.push(nn.clone());
        if &nn != n {
            rename.insert(n.clone(), nn.clone());
        }
    }
    let ren = |n: &str| -> String { rename.get(n).cloned().unwrap_or_else(|| n.to_string()) };

    let new_target = MFObject::new(g.target.vars.iter().map(|n| ren(n)));
    let mut extra: Vec<String> = f.extra.clone();
    extra.extend(f.target.vars.iter().cloned());
    extra.extend(g.extra.iter().map(|n| ren(n)));

    let mut names: Vec<String> = Vec::new();
    names.extend(f.source.vars.iter().cloned());
    names.extend(new_target.vars.iter().cloned());
    names.extend(extra.iter().cloned());
    let table = VarTable::new(names)?;
    let v1 = f.potential.transfer(&table)?;
    let v2 = g.potential.relabel(&table, |n| ren(n))?;
    Ok(MFOneMorphism {
        source: f.source.clone(),
        target: new_target,
        extra,
        table: table.clone(),
        potential: &v1 + &v2,
    })
}

/// The identity 1-morphism of an object: fresh target copies and one extra
/// variable per coordinate, with potential `sum a_i (x~_i - x_i)`.
pub fn identity_1(x: &MFObject, fresh: &mut Freshener) -> Result<MFOneMorphism> {
    let mut forbidden: Vec<String> = x.vars.clone();
    let mut pick = |base: String, forbidden: &mut Vec<String>, fresh: &mut Freshener| {
        let nn = fresh.rename_avoiding(&base, |cand| forbidden.iter().any(|t| t == cand));
        forbidden.push(nn.clone());
        nn
    };
    let target_names: Vec<String> = x
        .vars
        .iter()
        .map(|n| pick(format!("{n}t"), &mut forbidden, fresh))
        .collect();
    let extra_names: Vec<String> = x
        .vars
        .iter()
        .map(|n| pick(format!("a_{n}"), &mut forbidden, fresh))
        .collect();
    let mut names: Vec<String> = x.vars.clone();
    names.extend(target_names.iter().cloned());
    names.extend(extra_names.iter().cloned());
    let table = VarTable::new(names)?;
    let mut v = Polynomial::zero(&table);
    for i in 0..x.len() {
        let a = Polynomial::var_named(&table, &extra_names[i])?;
        let xt = Polynomial::var_named(&table, &target_names[i])?;
        let xx = Polynomial::var_named(&table, &x.vars[i])?;
        v = &v + &(&a * &(&xt - &xx));
    }
    Ok(MFOneMorphism {
        source: x.clone(),
        target: MFObject::new(target_names),
        extra: extra_names,
        table,
        potential: v,
    })
}

/// The identity 2-morphism of a 1-morphism: the unit factorization on a
/// primed copy of the extra tuple.
pub fn identity_2(f: &MFOneMorphism) -> Result<MFTwoMorphism> {
    let a_idx = f.extra_indices();
    let unit = unit_mf(&f.potential, &a_idx)?;
    let big = unit.mf.table().clone();
    // the target 1-morphism: extra variables replaced by their primed copies
    let primed_names: Vec<String> =
        unit.primed.iter().map(|&i| big.name(i).to_string()).collect();
    let mut subst: BTreeMap<usize, Polynomial> = BTreeMap::new();
    for (j, &ai) in a_idx.iter().enumerate() {
        let in_big = big.require(f.table.name(ai))?;
        subst.insert(in_big, Polynomial::var(&big, unit.primed[j]));
    }
    let v_primed = f.potential.transfer(&big)?.substitute(&subst)?;
    let target = MFOneMorphism::new(
        f.source.clone(),
        f.target.clone(),
        primed_names,
        v_primed,
    )?;
    MFTwoMorphism::new(f.clone(), target, unit.mf)
}

/// Vertical composition: the tensor product over the ring of the shared
/// middle 1-morphism. The potentials telescope.
pub fn v_compose_2(m: &MFTwoMorphism, n: &MFTwoMorphism) -> Result<MFTwoMorphism> {
    if !m.target.same_as(&n.source) {
        return Err(LgError::CompositionMismatch(
            "middle 1-morphisms of the vertical composition differ".into(),
        ));
    }
    let table = m.mf.table().union(n.mf.table())?;
    let a = m.mf.transfer(&table)?;
    let b = n.mf.transfer(&table)?;
    let t = tensor_mf(&a, &b)?;
    MFTwoMorphism::new(m.source.clone(), n.target.clone(), t)
}

/// Horizontal composition of 2-morphisms over a shared middle object: the
/// tensor product over the middle object's coordinate ring. Extra tuples
/// must be disjoint (no renaming happens at the 2-level, so the composite
/// boundary 1-morphisms stay aligned with the factor tables).
pub fn h_compose_2(m: &MFTwoMorphism, n: &MFTwoMorphism) -> Result<MFTwoMorphism> {
    if m.source.target != n.source.source {
        return Err(LgError::CompositionMismatch(
            "horizontal composition needs a shared middle object".into(),
        ));
    }
    // extras must be disjoint already: the composite tables stay aligned with
    // the factor tables only without renaming
    let middle = &m.source.target.vars;
    for name in m.mf.table().names() {
        if n.mf.table().position(name).is_some() && !middle.contains(name) {
            return Err(LgError::CompositionMismatch(format!(
                "variable `{name}` is shared outside the middle object; rename extras first"
            )));
        }
    }
    let source = h_compose_1(&m.source, &n.source, &mut Freshener::new())?;
    let target = h_compose_1(&m.target, &n.target, &mut Freshener::new())?;
    let table = m.mf.table().union(n.mf.table())?;
    let a = m.mf.transfer(&table)?;
    let b = n.mf.transfer(&table)?;
    let t = tensor_mf(&a, &b)?;
    MFTwoMorphism::new(source, target, t)
}

/// End-complex cohomology of the representative: the comparison invariant
/// for 2-morphisms.
pub fn end_hilbert(m: &MFTwoMorphism, bound: u32) -> Result<HilbertFunction> {
    let end = end_complex(&m.mf)?;
    module_cohomology_hilbert(&end, bound)
}

pub fn end_module(m: &MFTwoMorphism) -> Result<SemifreeModule> {
    end_complex(&m.mf)
}

/// The derivative endomorphism of the composite along an integrated middle
/// variable is a weight-0 odd cocycle of the End complex whenever the
/// telescoped potential is free of that variable. It generates the exterior
/// ghost factor by which the End cohomology of a composite representative
/// differs from the End cohomology of the reduced representative.
pub fn middle_derivative_is_cocycle(mf: &MatrixFactorization, middle: usize) -> Result<bool> {
    if mf.potential().depends_on(middle) {
        return Err(LgError::Invalid(
            "potential still depends on the middle variable".into(),
        ));
    }
    let lam = crate::mf::lambda(mf, middle);
    let d = crate::mf::delta_hom(mf, mf, &lam, crate::graded::Parity::Odd)?;
    Ok(d.is_zero())
}

#[cfg(test)]
mod tests;
