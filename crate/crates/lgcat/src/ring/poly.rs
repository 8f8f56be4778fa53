use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, BigRational, One, Zero};

use super::order::MonomialOrder;
use super::table::VarTable;
use crate::error::{LgError, Result};

/// Exponent vector; the length always equals the table length.
pub type Mono = Vec<u16>;

pub fn mono_mul(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn mono_divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn mono_div(b: &[u16], a: &[u16]) -> Mono {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub fn mono_lcm(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    table: Arc<VarTable>,
    terms: BTreeMap<Mono, BigRational>,
}

impl Polynomial {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        Polynomial { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(table: &Arc<VarTable>, c: BigRational) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(vec![0; table.len()], c);
        }
        p
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Self::constant(table, BigRational::one())
    }

    pub fn int(table: &Arc<VarTable>, n: i64) -> Self {
        Self::constant(table, BigRational::from(BigInt::from(n)))
    }

    pub fn var(table: &Arc<VarTable>, i: usize) -> Self {
        let mut m = vec![0u16; table.len()];
        m[i] = 1;
        let mut p = Self::zero(table);
        p.terms.insert(m, BigRational::one());
        p
    }

    pub fn var_named(table: &Arc<VarTable>, name: &str) -> Result<Self> {
        Ok(Self::var(table, table.require(name)?))
    }

    pub fn from_terms(
        table: &Arc<VarTable>,
        terms: impl IntoIterator<Item = (Mono, BigRational)>,
    ) -> Self {
        let mut p = Self::zero(table);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    pub fn constant_part(&self) -> BigRational {
        self.terms
            .get(&vec![0; self.table.len()])
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, mono: Mono, coeff: BigRational) {
        debug_assert_eq!(mono.len(), self.table.len());
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &coeff;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn weighted_degree(&self, m: &[u16]) -> u32 {
        m.iter()
            .zip(self.table.weights())
            .map(|(&e, &w)| e as u32 * w)
            .sum()
    }

    /// Maximum weighted degree over all terms (0 for the zero polynomial).
    pub fn total_weight(&self) -> u32 {
        self.terms.keys().map(|m| self.weighted_degree(m)).max().unwrap_or(0)
    }

    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().map(|m| self.weighted_degree(m)).min()
    }

    pub fn is_weight_homogeneous(&self) -> bool {
        self.min_weight().map(|m| m == self.total_weight()).unwrap_or(true)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.keys().map(|m| m[v]).max().unwrap_or(0)
    }

    pub fn depends_on(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m[v] > 0)
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(&Mono, &BigRational)> {
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0, &self.table))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        Polynomial {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn mul_term(&self, mono: &[u16], coeff: &BigRational) -> Self {
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            out.terms.insert(mono_mul(m, mono), c * coeff);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.table);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn check_table(&self, other: &Polynomial) -> Result<()> {
        if Arc::ptr_eq(&self.table, &other.table) || self.table == other.table {
            Ok(())
        } else {
            Err(LgError::TableMismatch(format!("{} vs {}", self.table, other.table)))
        }
    }

    /// Formal partial derivative with respect to the named variable.
    pub fn derivative(&self, v: usize) -> Self {
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            let e = m[v];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[v] = e - 1;
            out.add_term(m2, c * BigRational::from(BigInt::from(e)));
        }
        out
    }

    pub fn derivative_named(&self, name: &str) -> Result<Self> {
        Ok(self.derivative(self.table.require(name)?))
    }

    /// Substitute polynomials for variables. Variables absent from the map
    /// stay themselves. All replacement images must share a table, which
    /// becomes the result table.
    pub fn substitute(&self, map: &BTreeMap<usize, Polynomial>) -> Result<Self> {
        let target: Arc<VarTable> = match map.values().next() {
            Some(p) => p.table.clone(),
            None => self.table.clone(),
        };
        for p in map.values() {
            if p.table != target {
                return Err(LgError::TableMismatch("substitution images".into()));
            }
        }
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut acc = Polynomial::constant(&target, c.clone());
            for (v, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let img = match map.get(&v) {
                    Some(p) => p.clone(),
                    None => Polynomial::var_named(&target, self.table.name(v))?,
                };
                acc = &acc * &img.pow(e as u32);
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Move the polynomial onto another table containing (at least) the same
    /// variable names, optionally renaming via `rename(old_name) -> new_name`.
    pub fn relabel(
        &self,
        target: &Arc<VarTable>,
        rename: impl Fn(&str) -> String,
    ) -> Result<Self> {
        // only variables that actually occur need to exist in the target
        let mut pos: Vec<Option<usize>> = vec![None; self.table.len()];
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut m2 = vec![0u16; target.len()];
            for (i, &e) in m.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = match pos[i] {
                    Some(p) => p,
                    None => {
                        let p = target.require(&rename(self.table.name(i)))?;
                        pos[i] = Some(p);
                        p
                    }
                };
                m2[p] += e;
            }
            out.add_term(m2, c.clone());
        }
        Ok(out)
    }

    /// Same variable names, possibly different table.
    pub fn transfer(&self, target: &Arc<VarTable>) -> Result<Self> {
        self.relabel(target, |n| n.to_string())
    }

    /// Exact division by the difference of two variables, `x_u - x_v`.
    /// Errors when the remainder (the substitution u -> v) is nonzero.
    pub fn div_linear_diff(&self, u: usize, v: usize) -> Result<Self> {
        let mut quotient = Self::zero(&self.table);
        let mut rest = self.clone();
        // Reduce every monomial containing x_u: c*x_u^e*m  ->  c*x_u^(e-1)*x_v*m.
        loop {
            let cand = rest
                .terms
                .iter()
                .find(|(m, _)| m[u] > 0)
                .map(|(m, c)| (m.clone(), c.clone()));
            let Some((m, c)) = cand else { break };
            let mut q = m.clone();
            q[u] -= 1;
            quotient.add_term(q.clone(), c.clone());
            // rest -= c * x_u^(e-1) * m' * (x_u - x_v)
            rest.add_term(m, -c.clone());
            let mut shifted = q;
            shifted[v] += 1;
            rest.add_term(shifted, c);
        }
        if !rest.is_zero() {
            return Err(LgError::DivisionRemainder(rest.to_string()));
        }
        Ok(quotient)
    }

    pub fn display_ordered(&self, order: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut monos: Vec<&Mono> = self.terms.keys().collect();
        monos.sort_by(|a, b| order.cmp(b, a, &self.table));
        let mut out = String::new();
        for (k, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let neg = c < &BigRational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono_str = self.mono_string(m);
            if mono_str.is_empty() {
                out.push_str(&rat_string(&abs));
            } else if abs.is_one() {
                out.push_str(&mono_str);
            } else {
                out.push_str(&rat_string(&abs));
                out.push('*');
                out.push_str(&mono_str);
            }
        }
        out
    }

    fn mono_string(&self, m: &[u16]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.table.name(i).to_string()),
                _ => parts.push(format!("{}^{}", self.table.name(i), e)),
            }
        }
        parts.join("*")
    }
}

pub fn rat_string(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_ordered(MonomialOrder::GrevLex))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(*self.table, *rhs.table);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(*self.table, *rhs.table);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(*self.table, *rhs.table);
        let mut out = Polynomial::zero(&self.table);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(mono_mul(m1, m2), c1 * c2);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse::parse_poly;

    fn table3() -> Arc<VarTable> {
        VarTable::new(["a", "b", "x"]).unwrap()
    }

    #[test]
    fn derivative_examples() {
        let t = VarTable::new(["a", "x", "y", "b"]).unwrap();
        // power rule
        let p = parse_poly(&t, "a^3").unwrap();
        assert_eq!(p.derivative_named("a").unwrap(), parse_poly(&t, "3*a^2").unwrap());
        // expand a*(y-x) and differentiate in x
        let p = parse_poly(&t, "a*(y - x)").unwrap();
        assert_eq!(p.derivative_named("x").unwrap(), parse_poly(&t, "-a").unwrap());
        // constant in b
        let p = parse_poly(&t, "x*y").unwrap();
        assert!(p.derivative_named("b").unwrap().is_zero());
    }

    #[test]
    fn division_by_variable_difference() {
        let t = VarTable::new(["a", "a'"]).unwrap();
        let p = parse_poly(&t, "a'^2 - a^2").unwrap();
        let q = p.div_linear_diff(1, 0).unwrap();
        assert_eq!(q, parse_poly(&t, "a + a'").unwrap());
        let r = parse_poly(&t, "a'^3 - a^3").unwrap().div_linear_diff(1, 0).unwrap();
        assert_eq!(r, parse_poly(&t, "a^2 + a*a' + a'^2").unwrap());
        assert!(parse_poly(&t, "a' - a + 1").unwrap().div_linear_diff(1, 0).is_err());
    }

    #[test]
    fn substitution_roundtrip() {
        let t = table3();
        let p = parse_poly(&t, "a^2*b - 2*x").unwrap();
        let mut map = BTreeMap::new();
        map.insert(0usize, parse_poly(&t, "a + b").unwrap());
        let q = p.substitute(&map).unwrap();
        assert_eq!(q, parse_poly(&t, "(a + b)^2*b - 2*x").unwrap());
    }

    #[test]
    fn display_is_grammar_compatible() {
        let t = table3();
        let p = parse_poly(&t, "1/2*a^2 - b + 3").unwrap();
        let s = p.display_ordered(MonomialOrder::GrevLex);
        let back = parse_poly(&t, &s).unwrap();
        assert_eq!(p, back);
    }
}
