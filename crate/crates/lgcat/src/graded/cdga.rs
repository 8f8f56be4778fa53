//! Semifree Z2-graded commutative dg-algebras: free on even (polynomial) and
//! odd (exterior) generators, with the differential given on generators and
//! extended by the graded Leibniz rule.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational};

use super::element::{AlgebraShape, GradedElement, Parity};
use crate::error::{LgError, Result};
use crate::ring::parse::ExprParser;
use crate::ring::VarTable;

/// One graded generator: name, parity, positive weight (weight 0 is allowed
/// for odd generators, which keeps matrix-factorization carriers gradable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedVar {
    pub name: String,
    pub parity: Parity,
    pub weight: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemifreeCDGA {
    shape: Arc<AlgebraShape>,
    d_even: Vec<GradedElement>,
    d_odd: Vec<GradedElement>,
}

impl SemifreeCDGA {
    /// Polynomial algebra: no odd part, zero differential.
    pub fn polynomial(table: &Arc<VarTable>) -> Self {
        let shape = AlgebraShape::new(table.clone(), Vec::new()).expect("no odd generators");
        let d_even = (0..table.len()).map(|_| GradedElement::zero(&shape)).collect();
        SemifreeCDGA { shape, d_even, d_odd: Vec::new() }
    }

    /// Free graded-commutative algebra with zero differential.
    pub fn free(table: &Arc<VarTable>, odd: Vec<(String, u32)>) -> Result<Self> {
        let shape = AlgebraShape::new(table.clone(), odd)?;
        Ok(Self::with_zero_differential(&shape))
    }

    pub fn with_zero_differential(shape: &Arc<AlgebraShape>) -> Self {
        SemifreeCDGA {
            shape: shape.clone(),
            d_even: (0..shape.even.len()).map(|_| GradedElement::zero(shape)).collect(),
            d_odd: (0..shape.odd_len()).map(|_| GradedElement::zero(shape)).collect(),
        }
    }

    /// Full constructor; checks parities and `d^2 = 0` on generators.
    pub fn new(
        shape: Arc<AlgebraShape>,
        d_even: Vec<GradedElement>,
        d_odd: Vec<GradedElement>,
    ) -> Result<Self> {
        if d_even.len() != shape.even.len() || d_odd.len() != shape.odd_len() {
            return Err(LgError::DimensionMismatch("differential table length".into()));
        }
        let a = SemifreeCDGA { shape, d_even, d_odd };
        a.validate()?;
        Ok(a)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, img) in self.d_even.iter().enumerate() {
            if !img.is_homogeneous_of(Parity::Odd) {
                return Err(LgError::ParityMismatch(format!(
                    "d({}) must be odd",
                    self.shape.even.name(i)
                )));
            }
        }
        for (i, img) in self.d_odd.iter().enumerate() {
            if !img.is_homogeneous_of(Parity::Even) {
                return Err(LgError::ParityMismatch(format!(
                    "d({}) must be even",
                    self.shape.odd_name(i)
                )));
            }
        }
        // d^2 = 0 on generators suffices by Leibniz.
        for i in 0..self.shape.even.len() {
            let dd = self.differential(&self.d_even[i]);
            if !dd.is_zero() {
                return Err(LgError::Invalid(format!(
                    "d^2({}) = {} is nonzero",
                    self.shape.even.name(i),
                    dd
                )));
            }
        }
        for i in 0..self.shape.odd_len() {
            let dd = self.differential(&self.d_odd[i]);
            if !dd.is_zero() {
                return Err(LgError::Invalid(format!(
                    "d^2({}) = {} is nonzero",
                    self.shape.odd_name(i),
                    dd
                )));
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Arc<AlgebraShape> {
        &self.shape
    }

    pub fn even_table(&self) -> &Arc<VarTable> {
        &self.shape.even
    }

    pub fn d_even_gen(&self, i: usize) -> &GradedElement {
        &self.d_even[i]
    }

    pub fn d_odd_gen(&self, i: usize) -> &GradedElement {
        &self.d_odd[i]
    }

    pub fn has_zero_differential(&self) -> bool {
        self.d_even.iter().all(GradedElement::is_zero)
            && self.d_odd.iter().all(GradedElement::is_zero)
    }

    pub fn generators(&self) -> Vec<GradedVar> {
        let mut out = Vec::new();
        for i in 0..self.shape.even.len() {
            out.push(GradedVar {
                name: self.shape.even.name(i).to_string(),
                parity: Parity::Even,
                weight: self.shape.even.weight(i),
            });
        }
        for i in 0..self.shape.odd_len() {
            out.push(GradedVar {
                name: self.shape.odd_name(i).to_string(),
                parity: Parity::Odd,
                weight: self.shape.odd_weight(i),
            });
        }
        out
    }

    /// The graded Leibniz extension of the generator differential.
    pub fn differential(&self, e: &GradedElement) -> GradedElement {
        let shape = &self.shape;
        let mut out = GradedElement::zero(shape);
        for ((mono, mask), coeff) in e.terms() {
            // even generator contributions
            for v in 0..shape.even.len() {
                let ev = mono[v];
                if ev == 0 || self.d_even[v].is_zero() {
                    continue;
                }
                let mut m2 = mono.clone();
                m2[v] = ev - 1;
                let factor = GradedElement::from_terms(
                    shape,
                    [(m2, 0u64, coeff * BigRational::from(BigInt::from(ev)))],
                );
                let theta = GradedElement::from_terms(
                    shape,
                    [(vec![0; shape.even.len()], *mask, BigRational::from(BigInt::from(1)))],
                );
                out = &out + &(&(&factor * &self.d_even[v]) * &theta);
            }
            // odd generator contributions with alternating signs
            let mut rest = *mask;
            let mut k = 0u32;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let di = &self.d_odd[i];
                if !di.is_zero() {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    let others = *mask & !(1u64 << i);
                    let prefix = GradedElement::from_terms(
                        shape,
                        [(mono.clone(), 0u64, coeff * BigRational::from(BigInt::from(sign)))],
                    );
                    let theta = GradedElement::from_terms(
                        shape,
                        [(vec![0; shape.even.len()], others, BigRational::from(BigInt::from(1)))],
                    );
                    out = &out + &(&(&prefix * di) * &theta);
                }
                k += 1;
            }
        }
        out
    }

    /// Parse an element in the polynomial grammar extended with the odd
    /// generators.
    pub fn parse_element(&self, src: &str) -> Result<GradedElement> {
        let shape = self.shape.clone();
        let shape2 = self.shape.clone();
        let mut p = ExprParser::new(
            src,
            move |name| GradedElement::gen_named(&shape, name),
            move |c| GradedElement::constant(&shape2, c),
        )?;
        p.parse(|a, b| a + b, |a| -a, |a, b| a * b, |a, n| a.pow(n))
    }

    /// Largest weight increase of the differential across generators
    /// (`None` when the differential is zero).
    pub fn max_step(&self) -> Option<u32> {
        let mut s: Option<u32> = None;
        for i in 0..self.shape.even.len() {
            let img = &self.d_even[i];
            if !img.is_zero() {
                let step = img.max_weight().saturating_sub(self.shape.even.weight(i));
                s = Some(s.map_or(step, |x| x.max(step)));
            }
        }
        for i in 0..self.shape.odd_len() {
            let img = &self.d_odd[i];
            if !img.is_zero() {
                let step = img.max_weight().saturating_sub(self.shape.odd_weight(i));
                s = Some(s.map_or(step, |x| x.max(step)));
            }
        }
        s
    }

    /// Weight-monotonicity check: no generator differential may drop weight.
    pub fn check_monotone(&self) -> Result<()> {
        for i in 0..self.shape.even.len() {
            if let Some(mw) = self.d_even[i].min_weight() {
                if mw < self.shape.even.weight(i) {
                    return Err(LgError::Grading(format!(
                        "d({}) drops weight",
                        self.shape.even.name(i)
                    )));
                }
            }
        }
        for i in 0..self.shape.odd_len() {
            if let Some(mw) = self.d_odd[i].min_weight() {
                if mw < self.shape.odd_weight(i) {
                    return Err(LgError::Grading(format!(
                        "d({}) drops weight",
                        self.shape.odd_name(i)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Lower generator weights until the differential is weight
    /// non-decreasing; rewrites (for instance) of a Tate generator's
    /// differential through a leg can drop its image weight. Odd generators
    /// may sink to weight 0; an even generator forced below 1 is an error
    /// (the carrier would stop being weight-finite).
    pub fn regrade_monotone(&self) -> Result<SemifreeCDGA> {
        let mut even_w: Vec<u32> = (0..self.shape.even.len())
            .map(|i| self.shape.even.weight(i))
            .collect();
        let mut odd_w: Vec<u32> =
            (0..self.shape.odd_len()).map(|i| self.shape.odd_weight(i)).collect();
        let weigh = |e: &GradedElement, even_w: &[u32], odd_w: &[u32]| -> Option<u32> {
            e.terms()
                .map(|((m, mask), _)| {
                    let mut w: u32 = m
                        .iter()
                        .enumerate()
                        .map(|(v, &ev)| ev as u32 * even_w[v])
                        .sum();
                    let mut rest = *mask;
                    while rest != 0 {
                        let i = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        w += odd_w[i];
                    }
                    w
                })
                .min()
        };
        loop {
            let mut changed = false;
            for i in 0..even_w.len() {
                if let Some(mw) = weigh(&self.d_even[i], &even_w, &odd_w) {
                    if mw < even_w[i] {
                        if mw < 1 {
                            return Err(LgError::Grading(format!(
                                "even generator {} would need weight {mw}",
                                self.shape.even.name(i)
                            )));
                        }
                        even_w[i] = mw;
                        changed = true;
                    }
                }
            }
            for i in 0..odd_w.len() {
                if let Some(mw) = weigh(&self.d_odd[i], &even_w, &odd_w) {
                    if mw < odd_w[i] {
                        odd_w[i] = mw;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if even_w
            .iter()
            .enumerate()
            .all(|(i, &w)| w == self.shape.even.weight(i))
            && odd_w
                .iter()
                .enumerate()
                .all(|(i, &w)| w == self.shape.odd_weight(i))
        {
            return Ok(self.clone());
        }
        let table = VarTable::with_weights(self.shape.even.names().to_vec(), even_w)?;
        let odd: Vec<(String, u32)> = self
            .shape
            .odd_names()
            .iter()
            .cloned()
            .zip(odd_w)
            .collect();
        let shape = AlgebraShape::new(table, odd)?;
        let move_elem = |e: &GradedElement| -> GradedElement {
            GradedElement::from_terms(
                &shape,
                e.terms().map(|((m, mask), c)| (m.clone(), *mask, c.clone())),
            )
        };
        let d_even = self.d_even.iter().map(&move_elem).collect();
        let d_odd = self.d_odd.iter().map(&move_elem).collect();
        SemifreeCDGA::new(shape, d_even, d_odd)
    }
}

impl fmt::Display for SemifreeCDGA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let evens = self.shape.even.names().join(", ");
        let odds = self.shape.odd_names().join(", ");
        if odds.is_empty() {
            write!(f, "K[{evens}]")
        } else {
            write!(f, "K[{evens}; {odds}]")
        }
    }
}

/// A map of semifree cdgas, stored by generator images and verified to be a
/// parity-preserving chain map on generators.
#[derive(Debug, Clone)]
pub struct CDGAMap {
    pub source: SemifreeCDGA,
    pub target: SemifreeCDGA,
    even_images: Vec<GradedElement>,
    odd_images: Vec<GradedElement>,
}

impl CDGAMap {
    pub fn new(
        source: SemifreeCDGA,
        target: SemifreeCDGA,
        even_images: Vec<GradedElement>,
        odd_images: Vec<GradedElement>,
    ) -> Result<Self> {
        let m = CDGAMap { source, target, even_images, odd_images };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        if self.even_images.len() != self.source.shape().even.len()
            || self.odd_images.len() != self.source.shape().odd_len()
        {
            return Err(LgError::DimensionMismatch("image table length".into()));
        }
        for (i, img) in self.even_images.iter().enumerate() {
            if !img.is_homogeneous_of(Parity::Even) {
                return Err(LgError::ParityMismatch(format!(
                    "image of even generator {} is not even",
                    self.source.shape().even.name(i)
                )));
            }
        }
        for (i, img) in self.odd_images.iter().enumerate() {
            if !img.is_homogeneous_of(Parity::Odd) {
                return Err(LgError::ParityMismatch(format!(
                    "image of odd generator {} is not odd",
                    self.source.shape().odd_name(i)
                )));
            }
        }
        // chain map on generators
        for i in 0..self.source.shape().even.len() {
            let lhs = self.target.differential(&self.even_images[i]);
            let rhs = self.apply(self.source.d_even_gen(i))?;
            if lhs != rhs {
                return Err(LgError::NotChainMap {
                    gen: self.source.shape().even.name(i).to_string(),
                    defect: (&lhs - &rhs).to_string(),
                });
            }
        }
        for i in 0..self.source.shape().odd_len() {
            let lhs = self.target.differential(&self.odd_images[i]);
            let rhs = self.apply(self.source.d_odd_gen(i))?;
            if lhs != rhs {
                return Err(LgError::NotChainMap {
                    gen: self.source.shape().odd_name(i).to_string(),
                    defect: (&lhs - &rhs).to_string(),
                });
            }
        }
        Ok(())
    }

    /// Build from name-indexed images; absent names map to themselves when
    /// shared, otherwise the map is rejected.
    pub fn from_images(
        source: &SemifreeCDGA,
        target: &SemifreeCDGA,
        images: &BTreeMap<String, GradedElement>,
    ) -> Result<Self> {
        let mut even_images = Vec::new();
        for i in 0..source.shape().even.len() {
            let name = source.shape().even.name(i);
            match images.get(name) {
                Some(e) => even_images.push(e.clone()),
                None => even_images.push(GradedElement::gen_named(target.shape(), name)?),
            }
        }
        let mut odd_images = Vec::new();
        for i in 0..source.shape().odd_len() {
            let name = source.shape().odd_name(i);
            match images.get(name) {
                Some(e) => odd_images.push(e.clone()),
                None => odd_images.push(GradedElement::gen_named(target.shape(), name)?),
            }
        }
        Self::new(source.clone(), target.clone(), even_images, odd_images)
    }

    pub fn identity(a: &SemifreeCDGA) -> Self {
        let even_images = (0..a.shape().even.len())
            .map(|i| GradedElement::even_var(a.shape(), i))
            .collect();
        let odd_images = (0..a.shape().odd_len())
            .map(|i| GradedElement::odd_var(a.shape(), i))
            .collect();
        CDGAMap { source: a.clone(), target: a.clone(), even_images, odd_images }
    }

    pub fn even_image(&self, i: usize) -> &GradedElement {
        &self.even_images[i]
    }

    pub fn odd_image(&self, i: usize) -> &GradedElement {
        &self.odd_images[i]
    }

    pub fn apply(&self, e: &GradedElement) -> Result<GradedElement> {
        let shape = self.target.shape();
        let mut out = GradedElement::zero(shape);
        for ((mono, mask), coeff) in e.terms() {
            let mut acc = GradedElement::constant(shape, coeff.clone());
            for (v, &ev) in mono.iter().enumerate() {
                if ev > 0 {
                    acc = &acc * &self.even_images[v].pow(ev as u32);
                }
            }
            let mut rest = *mask;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                acc = &acc * &self.odd_images[i];
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    pub fn compose(&self, then: &CDGAMap) -> Result<CDGAMap> {
        let even_images = self
            .even_images
            .iter()
            .map(|e| then.apply(e))
            .collect::<Result<Vec<_>>>()?;
        let odd_images = self
            .odd_images
            .iter()
            .map(|e| then.apply(e))
            .collect::<Result<Vec<_>>>()?;
        CDGAMap::new(self.source.clone(), then.target.clone(), even_images, odd_images)
    }
}

/// Coproduct of two semifree cdgas. Name clashes on the right are renamed by
/// appending `_r<n>`; the applied renamings are returned.
pub fn tensor_cdga(a: &SemifreeCDGA, b: &SemifreeCDGA) -> Result<(SemifreeCDGA, Vec<(String, String)>)> {
    let mut renames = Vec::new();
    let mut taken: Vec<String> = a
        .shape()
        .even
        .names()
        .iter()
        .cloned()
        .chain(a.shape().odd_names().iter().cloned())
        .collect();
    let fresh = |name: &str, taken: &mut Vec<String>, renames: &mut Vec<(String, String)>| {
        if !taken.iter().any(|t| t == name) {
            taken.push(name.to_string());
            return name.to_string();
        }
        let mut n = 1usize;
        loop {
            let cand = format!("{name}_r{n}");
            if !taken.iter().any(|t| t == &cand) {
                taken.push(cand.clone());
                renames.push((name.to_string(), cand.clone()));
                return cand;
            }
            n += 1;
        }
    };

    let mut even_names: Vec<String> = a.shape().even.names().to_vec();
    let mut even_weights: Vec<u32> = a.shape().even.weights().to_vec();
    let mut b_even_named: Vec<String> = Vec::new();
    for i in 0..b.shape().even.len() {
        let nn = fresh(b.shape().even.name(i), &mut taken, &mut renames);
        b_even_named.push(nn.clone());
        even_names.push(nn);
        even_weights.push(b.shape().even.weight(i));
    }
    let mut odd: Vec<(String, u32)> = (0..a.shape().odd_len())
        .map(|i| (a.shape().odd_name(i).to_string(), a.shape().odd_weight(i)))
        .collect();
    let mut b_odd_named: Vec<String> = Vec::new();
    for i in 0..b.shape().odd_len() {
        let nn = fresh(b.shape().odd_name(i), &mut taken, &mut renames);
        b_odd_named.push(nn.clone());
        odd.push((nn, b.shape().odd_weight(i)));
    }

    let table = VarTable::with_weights(even_names, even_weights)?;
    let shape = AlgebraShape::new(table, odd)?;

    // transport of a b-element into the tensor shape
    let rename_map: BTreeMap<&str, &str> = b
        .shape()
        .even
        .names()
        .iter()
        .map(|s| s.as_str())
        .zip(b_even_named.iter().map(|s| s.as_str()))
        .chain(
            b.shape()
                .odd_names()
                .iter()
                .map(|s| s.as_str())
                .zip(b_odd_named.iter().map(|s| s.as_str())),
        )
        .collect();
    let move_b = |e: &GradedElement| -> Result<GradedElement> {
        let mut out = GradedElement::zero(&shape);
        for ((mono, mask), c) in e.terms() {
            let mut acc = GradedElement::constant(&shape, c.clone());
            for (v, &ev) in mono.iter().enumerate() {
                if ev > 0 {
                    let name = rename_map[b.shape().even.name(v)];
                    acc = &acc * &GradedElement::gen_named(&shape, name)?.pow(ev as u32);
                }
            }
            let mut rest = *mask;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let name = rename_map[b.shape().odd_name(i)];
                acc = &acc * &GradedElement::gen_named(&shape, name)?;
            }
            out = &out + &acc;
        }
        Ok(out)
    };
    let move_a = |e: &GradedElement| -> Result<GradedElement> {
        let mut out = GradedElement::zero(&shape);
        for ((mono, mask), c) in e.terms() {
            let mut m2 = vec![0u16; shape.even.len()];
            m2[..mono.len()].copy_from_slice(mono);
            out.add_term(m2, *mask, c.clone());
        }
        Ok(out)
    };

    let mut d_even = Vec::new();
    for i in 0..a.shape().even.len() {
        d_even.push(move_a(a.d_even_gen(i))?);
    }
    for i in 0..b.shape().even.len() {
        d_even.push(move_b(b.d_even_gen(i))?);
    }
    let mut d_odd = Vec::new();
    for i in 0..a.shape().odd_len() {
        d_odd.push(move_a(a.d_odd_gen(i))?);
    }
    for i in 0..b.shape().odd_len() {
        d_odd.push(move_b(b.d_odd_gen(i))?);
    }
    Ok((SemifreeCDGA::new(shape, d_even, d_odd)?, renames))
}
