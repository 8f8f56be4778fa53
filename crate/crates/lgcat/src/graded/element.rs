//! Elements of semifree Z2-graded commutative algebras: rational combinations
//! of (even monomial, strictly increasing odd subset) pairs, with Koszul sign
//! normalization baked into the product.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LgError, Result};
use crate::ring::{Mono, Polynomial, VarTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn of_mask(mask: u64) -> Parity {
        if mask.count_ones() % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// The generator lists of a semifree graded-commutative algebra: an even
/// variable table plus at most 64 odd exterior generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraShape {
    pub even: Arc<VarTable>,
    odd_names: Vec<String>,
    odd_weights: Vec<u32>,
    odd_index: BTreeMap<String, usize>,
}

impl AlgebraShape {
    pub fn new(even: Arc<VarTable>, odd: Vec<(String, u32)>) -> Result<Arc<Self>> {
        if odd.len() > 64 {
            return Err(LgError::Invalid("at most 64 odd generators are supported".into()));
        }
        let mut odd_index = BTreeMap::new();
        let mut odd_names = Vec::new();
        let mut odd_weights = Vec::new();
        for (i, (n, w)) in odd.into_iter().enumerate() {
            if !crate::ring::table::is_identifier(&n) {
                return Err(LgError::Invalid(format!("`{n}` is not a valid identifier")));
            }
            if even.position(&n).is_some() || odd_index.insert(n.clone(), i).is_some() {
                return Err(LgError::Invalid(format!("duplicate generator `{n}`")));
            }
            odd_names.push(n);
            odd_weights.push(w);
        }
        Ok(Arc::new(AlgebraShape { even, odd_names, odd_weights, odd_index }))
    }

    pub fn odd_len(&self) -> usize {
        self.odd_names.len()
    }

    pub fn odd_name(&self, i: usize) -> &str {
        &self.odd_names[i]
    }

    pub fn odd_names(&self) -> &[String] {
        &self.odd_names
    }

    pub fn odd_weight(&self, i: usize) -> u32 {
        self.odd_weights[i]
    }

    pub fn odd_position(&self, name: &str) -> Option<usize> {
        self.odd_index.get(name).copied()
    }

    pub fn mask_weight(&self, mask: u64) -> u32 {
        let mut w = 0;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            w += self.odd_weights[i];
            m &= m - 1;
        }
        w
    }

    pub fn mono_weight(&self, mono: &[u16]) -> u32 {
        mono.iter()
            .zip(self.even.weights())
            .map(|(&e, &w)| e as u32 * w)
            .sum()
    }

    pub fn term_weight(&self, mono: &[u16], mask: u64) -> u32 {
        self.mono_weight(mono) + self.mask_weight(mask)
    }

    pub fn mask_string(&self, mask: u64) -> String {
        let mut parts = Vec::new();
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            parts.push(self.odd_names[i].clone());
            m &= m - 1;
        }
        parts.join("*")
    }
}

/// Koszul sign for multiplying the odd words `a` and `b` (disjoint masks):
/// the parity of the number of transpositions needed to merge them.
pub fn merge_sign(a: u64, b: u64) -> i32 {
    let mut crossings = 0u32;
    let mut m = b;
    while m != 0 {
        let j = m.trailing_zeros();
        // generators of `a` strictly above position j must hop over b_j
        crossings += (a >> (j + 1)).count_ones();
        m &= m - 1;
    }
    if crossings % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A finite rational combination of terms `x^E * theta_S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    shape: Arc<AlgebraShape>,
    terms: BTreeMap<(Mono, u64), BigRational>,
}

impl GradedElement {
    pub fn zero(shape: &Arc<AlgebraShape>) -> Self {
        GradedElement { shape: shape.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(shape: &Arc<AlgebraShape>, c: BigRational) -> Self {
        let mut e = Self::zero(shape);
        if !c.is_zero() {
            e.terms.insert((vec![0; shape.even.len()], 0), c);
        }
        e
    }

    pub fn one(shape: &Arc<AlgebraShape>) -> Self {
        Self::constant(shape, BigRational::one())
    }

    pub fn int(shape: &Arc<AlgebraShape>, n: i64) -> Self {
        Self::constant(shape, BigRational::from(BigInt::from(n)))
    }

    pub fn even_var(shape: &Arc<AlgebraShape>, i: usize) -> Self {
        let mut m = vec![0u16; shape.even.len()];
        m[i] = 1;
        let mut e = Self::zero(shape);
        e.terms.insert((m, 0), BigRational::one());
        e
    }

    pub fn odd_var(shape: &Arc<AlgebraShape>, i: usize) -> Self {
        let mut e = Self::zero(shape);
        e.terms.insert((vec![0; shape.even.len()], 1u64 << i), BigRational::one());
        e
    }

    pub fn gen_named(shape: &Arc<AlgebraShape>, name: &str) -> Result<Self> {
        if let Some(i) = shape.even.position(name) {
            return Ok(Self::even_var(shape, i));
        }
        if let Some(i) = shape.odd_position(name) {
            return Ok(Self::odd_var(shape, i));
        }
        Err(LgError::UnknownVariable(name.to_string()))
    }

    pub fn from_poly(shape: &Arc<AlgebraShape>, p: &Polynomial) -> Result<Self> {
        let q = p.transfer(&shape.even)?;
        let mut e = Self::zero(shape);
        for (m, c) in q.terms() {
            e.terms.insert((m.clone(), 0), c.clone());
        }
        Ok(e)
    }

    pub fn from_terms(
        shape: &Arc<AlgebraShape>,
        terms: impl IntoIterator<Item = (Mono, u64, BigRational)>,
    ) -> Self {
        let mut e = Self::zero(shape);
        for (m, mask, c) in terms {
            e.add_term(m, mask, c);
        }
        e
    }

    pub fn shape(&self) -> &Arc<AlgebraShape> {
        &self.shape
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Mono, u64), &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: Mono, mask: u64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((mono, mask)) {
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

    /// `Some(parity)` when all terms share one parity; `None` on mixed terms.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|(_, mask)| Parity::of_mask(*mask));
        let first = it.next()?;
        for p in it {
            if p != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn is_homogeneous_of(&self, p: Parity) -> bool {
        self.terms.keys().all(|(_, mask)| Parity::of_mask(*mask) == p)
    }

    pub fn max_weight(&self) -> u32 {
        self.terms
            .keys()
            .map(|(m, mask)| self.shape.term_weight(m, *mask))
            .max()
            .unwrap_or(0)
    }

    pub fn min_weight(&self) -> Option<u32> {
        self.terms
            .keys()
            .map(|(m, mask)| self.shape.term_weight(m, *mask))
            .min()
    }

    /// Purely even elements convert back to a polynomial.
    pub fn to_poly(&self) -> Result<Polynomial> {
        let mut p = Polynomial::zero(&self.shape.even);
        for ((m, mask), c) in &self.terms {
            if *mask != 0 {
                return Err(LgError::ParityMismatch("element has odd factors".into()));
            }
            p.add_term(m.clone(), c.clone());
        }
        Ok(p)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.shape);
        }
        GradedElement {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.shape);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn display(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, ((m, mask), c)) in self.terms.iter().enumerate() {
            let neg = c < &BigRational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut parts: Vec<String> = Vec::new();
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(self.shape.even.name(i).to_string()),
                    _ => parts.push(format!("{}^{}", self.shape.even.name(i), e)),
                }
            }
            let odd = self.shape.mask_string(*mask);
            if !odd.is_empty() {
                parts.push(odd);
            }
            if parts.is_empty() {
                out.push_str(&crate::ring::rat_string(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&crate::ring::rat_string(&abs));
                    out.push('*');
                }
                out.push_str(&parts.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl Add for &GradedElement {
    type Output = GradedElement;
    fn add(self, rhs: &GradedElement) -> GradedElement {
        debug_assert_eq!(self.shape, rhs.shape);
        let mut out = self.clone();
        for ((m, mask), c) in &rhs.terms {
            out.add_term(m.clone(), *mask, c.clone());
        }
        out
    }
}

impl Sub for &GradedElement {
    type Output = GradedElement;
    fn sub(self, rhs: &GradedElement) -> GradedElement {
        debug_assert_eq!(self.shape, rhs.shape);
        let mut out = self.clone();
        for ((m, mask), c) in &rhs.terms {
            out.add_term(m.clone(), *mask, -c.clone());
        }
        out
    }
}

impl Neg for &GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        GradedElement {
            shape: self.shape.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }
}

impl Mul for &GradedElement {
    type Output = GradedElement;
    fn mul(self, rhs: &GradedElement) -> GradedElement {
        debug_assert_eq!(self.shape, rhs.shape);
        let mut out = GradedElement::zero(&self.shape);
        for ((m1, s1), c1) in &self.terms {
            for ((m2, s2), c2) in &rhs.terms {
                if s1 & s2 != 0 {
                    continue; // repeated odd generator squares to zero
                }
                let sign = merge_sign(*s1, *s2);
                let mono = crate::ring::poly::mono_mul(m1, m2);
                let c = c1 * c2 * BigRational::from(BigInt::from(sign));
                out.add_term(mono, s1 | s2, c);
            }
        }
        out
    }
}
