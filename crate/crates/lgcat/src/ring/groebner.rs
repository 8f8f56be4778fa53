//! Buchberger's algorithm with the normal selection strategy and full
//! inter-reduction, plus normal forms and standard-monomial counting for
//! quotient rings.

use std::sync::Arc;

use num::{BigRational, One};

use super::order::MonomialOrder;
use super::poly::{mono_div, mono_divides, mono_lcm, mono_mul, Mono, Polynomial};
use super::table::VarTable;
use crate::error::{LgError, Result};
use crate::hilbert::HilbertFunction;

/// A reduced Grobner basis: monic, auto-reduced, sorted by leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    gens: Vec<Polynomial>,
    table: Arc<VarTable>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// The ideal contains 1.
    pub fn is_unit_ideal(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.gens
            .iter()
            .map(|g| g.leading(self.order).expect("basis elements are nonzero").0.clone())
            .collect()
    }
}

/// One full reduction step: the remainder of `p` after division by `gens`.
fn reduce(p: &Polynomial, gens: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let table = p.table().clone();
    let mut rest = p.clone();
    let mut remainder = Polynomial::zero(&table);
    'outer: while !rest.is_zero() {
        let (lm, lc) = {
            let (m, c) = rest.leading(order).unwrap();
            (m.clone(), c.clone())
        };
        for g in gens {
            let (gm, gc) = g.leading(order).unwrap();
            if mono_divides(gm, &lm) {
                let q = mono_div(&lm, gm);
                let factor = &lc / gc;
                let sub = g.mul_term(&q, &factor);
                rest = &rest - &sub;
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        remainder.add_term(lm.clone(), lc.clone());
        rest.add_term(lm, -lc);
    }
    remainder
}

/// Fully reduced normal form modulo the basis; zero iff `p` is in the ideal.
pub fn normal_form(p: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    if *p.table() != gb.table {
        return Err(LgError::TableMismatch("normal_form".into()));
    }
    Ok(reduce(p, &gb.gens, gb.order))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, order: MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading(order).unwrap();
    let (gm, gc) = g.leading(order).unwrap();
    let l = mono_lcm(fm, gm);
    let a = f.mul_term(&mono_div(&l, fm), &(BigRational::one() / fc));
    let b = g.mul_term(&mono_div(&l, gm), &(BigRational::one() / gc));
    &a - &b
}

/// Buchberger with the normal selection strategy: among open critical pairs
/// pick the lowest lcm weight, then the lexicographically first pair index.
pub fn groebner_basis(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let nonzero: Vec<Polynomial> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    let table = match gens.first() {
        Some(p) => p.table().clone(),
        None => VarTable::new(Vec::<String>::new())?,
    };
    for p in gens {
        if p.table().as_ref() != table.as_ref() {
            return Err(LgError::TableMismatch("groebner_basis generators".into()));
        }
    }
    if nonzero.is_empty() {
        return Ok(GroebnerBasis { order, gens: Vec::new(), table });
    }

    let mut basis: Vec<Polynomial> = Vec::new();
    for p in &nonzero {
        basis.push(p.monic(order));
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }

    let weight_of = |m: &Mono, t: &Arc<VarTable>| -> u32 {
        m.iter().zip(t.weights()).map(|(&e, &w)| e as u32 * w).sum()
    };

    while !pairs.is_empty() {
        // normal strategy
        let mut best = 0usize;
        let mut best_key: Option<(u32, usize, usize)> = None;
        for (k, &(i, j)) in pairs.iter().enumerate() {
            let li = basis[i].leading(order).unwrap().0;
            let lj = basis[j].leading(order).unwrap().0;
            let l = mono_lcm(li, lj);
            let key = (weight_of(&l, &table), i, j);
            if best_key.map(|bk| key < bk).unwrap_or(true) {
                best_key = Some(key);
                best = k;
            }
        }
        let (i, j) = pairs.remove(best);
        let li = basis[i].leading(order).unwrap().0.clone();
        let lj = basis[j].leading(order).unwrap().0.clone();
        // product criterion: coprime leading monomials reduce to zero
        if mono_mul(&li, &lj) == mono_lcm(&li, &lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = reduce(&s, &basis, order);
        if !r.is_zero() {
            let r = r.monic(order);
            let new_idx = basis.len();
            basis.push(r);
            for k in 0..new_idx {
                pairs.push((k, new_idx));
            }
        }
    }

    // Full inter-reduction to the unique reduced basis. Elements are
    // re-reduced one at a time against the current state of the rest:
    // reducing all elements against a common snapshot can drop two
    // mutually-reducible elements at once and lose the ideal.
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < basis.len() {
            let current = basis.remove(i);
            let r = reduce(&current, &basis, order);
            if r.is_zero() {
                changed = true;
                // keep scanning from the same position
            } else {
                let r = r.monic(order);
                if r != current {
                    changed = true;
                }
                basis.insert(i, r);
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    basis.sort_by(|a, b| {
        order.cmp(a.leading(order).unwrap().0, b.leading(order).unwrap().0, &table)
    });
    basis.dedup();

    Ok(GroebnerBasis { order, gens: basis, table })
}

/// Standard monomials of the leading ideal, counted per weight up to `bound`.
/// Everything lives in even parity.
pub fn quotient_hilbert(gb: &GroebnerBasis, bound: u32) -> HilbertFunction {
    let table = &gb.table;
    let leads = gb.leading_monomials();
    let mut even = vec![0usize; bound as usize + 1];
    let n = table.len();
    let mut current = vec![0u16; n];
    enumerate_monomials(table, bound, 0, &mut current, &mut |m, w| {
        if !leads.iter().any(|l| mono_divides(l, m)) {
            even[w as usize] += 1;
        }
    });
    HilbertFunction::new(even, vec![0; bound as usize + 1], bound as i64)
}

/// Calls `f(mono, weight)` for every monomial of weight <= bound.
pub fn enumerate_monomials(
    table: &Arc<VarTable>,
    bound: u32,
    var: usize,
    current: &mut Vec<u16>,
    f: &mut impl FnMut(&[u16], u32),
) {
    if var == table.len() {
        let w: u32 = current
            .iter()
            .zip(table.weights())
            .map(|(&e, &w)| e as u32 * w)
            .sum();
        f(current, w);
        return;
    }
    let used: u32 = current[..var]
        .iter()
        .zip(table.weights())
        .map(|(&e, &w)| e as u32 * w)
        .sum();
    let room = (bound - used) / table.weight(var);
    for e in 0..=room.min(u16::MAX as u32) {
        current[var] = e as u16;
        enumerate_monomials(table, bound, var + 1, current, f);
    }
    current[var] = 0;
}

/// Brute-force ideal membership on the weight-`bound` window: `p` lies in the
/// span of `{ m * g : g in gens, weight(m * g) <= bound }`. Under a graded
/// order this agrees exactly with `normal_form(p) == 0` whenever
/// `weight(p) <= bound`. Used as the independent oracle for the Grobner
/// kernel.
pub fn membership_by_linear_algebra(
    p: &Polynomial,
    gens: &[Polynomial],
    bound: u32,
) -> Result<bool> {
    let table = p.table().clone();
    // Collect the spanning set.
    let mut span: Vec<Polynomial> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.table().as_ref() != table.as_ref() {
            return Err(LgError::TableMismatch("membership oracle".into()));
        }
        let gw = g.total_weight();
        if gw > bound {
            continue;
        }
        let mut current = vec![0u16; table.len()];
        let room = bound - gw;
        enumerate_monomials(&table, room, 0, &mut current, &mut |m, _| {
            span.push(g.mul_term(m, &BigRational::one()));
        });
    }
    // Index all monomials that occur.
    use std::collections::BTreeMap;
    let mut index: BTreeMap<Mono, usize> = BTreeMap::new();
    let touch = |q: &Polynomial, index: &mut BTreeMap<Mono, usize>| {
        for (m, _) in q.terms() {
            let next = index.len();
            index.entry(m.clone()).or_insert(next);
        }
    };
    for q in &span {
        touch(q, &mut index);
    }
    touch(p, &mut index);
    let dim = index.len();
    let mut cols: Vec<Vec<(usize, BigRational)>> = Vec::with_capacity(span.len());
    for q in &span {
        cols.push(q.terms().map(|(m, c)| (index[m], c.clone())).collect());
    }
    let target: Vec<(usize, BigRational)> =
        p.terms().map(|(m, c)| (index[m], c.clone())).collect();
    Ok(crate::linalg::solvable(dim, &cols, &target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse::parse_poly;

    fn gb(table: &Arc<VarTable>, gens: &[&str]) -> GroebnerBasis {
        let polys: Vec<Polynomial> =
            gens.iter().map(|s| parse_poly(table, s).unwrap()).collect();
        groebner_basis(&polys, MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn unit_rescale() {
        let t = VarTable::new(["a"]).unwrap();
        let b = gb(&t, &["2*a"]);
        assert_eq!(b.generators(), &[parse_poly(&t, "a").unwrap()]);
    }

    #[test]
    fn principal_ideal_by_hand() {
        // Buchberger on {3a^2}: single generator, monic a^2.
        let t = VarTable::new(["a"]).unwrap();
        let b = gb(&t, &["3*a^2"]);
        assert_eq!(b.generators(), &[parse_poly(&t, "a^2").unwrap()]);
    }

    #[test]
    fn s_polynomial_reduces_to_zero() {
        // {y - x, x + z} is already reduced under grevlex.
        let t = VarTable::new(["x", "y", "z"]).unwrap();
        let b = gb(&t, &["y - x", "x + z"]);
        assert_eq!(b.generators().len(), 2);
        // idempotent on its own output
        let again = groebner_basis(b.generators(), MonomialOrder::GrevLex).unwrap();
        assert_eq!(again.generators(), b.generators());
    }

    #[test]
    fn normal_form_examples() {
        let t = VarTable::new(["a"]).unwrap();
        let b = gb(&t, &["a^2"]);
        assert!(normal_form(&parse_poly(&t, "a^3").unwrap(), &b).unwrap().is_zero());
        assert_eq!(
            normal_form(&parse_poly(&t, "1").unwrap(), &b).unwrap(),
            parse_poly(&t, "1").unwrap()
        );
        let t2 = VarTable::new(["x", "y"]).unwrap();
        let b2 = gb(&t2, &["y - x"]);
        assert_eq!(
            normal_form(&parse_poly(&t2, "y^2").unwrap(), &b2).unwrap(),
            parse_poly(&t2, "x^2").unwrap()
        );
    }

    #[test]
    fn quotient_hilbert_examples() {
        let t = VarTable::new(["a"]).unwrap();
        let h = quotient_hilbert(&gb(&t, &["a^2"]), 4);
        assert_eq!(h.even, vec![1, 1, 0, 0, 0]);
        let h = quotient_hilbert(&gb(&t, &["a"]), 4);
        assert_eq!(h.even, vec![1, 0, 0, 0, 0]);
        let t2 = VarTable::new(["x", "y"]).unwrap();
        let h = quotient_hilbert(&gb(&t2, &["y - x"]), 4);
        assert_eq!(h.even, vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn empty_ideal() {
        let b = groebner_basis(&[], MonomialOrder::GrevLex).unwrap();
        assert!(b.is_empty());
    }

    #[test]
    fn cyclic2_lex_vs_grevlex_contain_same_ideal() {
        let t = VarTable::new(["x", "y"]).unwrap();
        let gens = [
            parse_poly(&t, "x + y").unwrap(),
            parse_poly(&t, "x*y - 1").unwrap(),
        ];
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex] {
            let b = groebner_basis(&gens, order).unwrap();
            for g in &gens {
                assert!(normal_form(g, &b).unwrap().is_zero());
            }
        }
    }
}
