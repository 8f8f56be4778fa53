//! The affine fragment of the span 2-category: symplectic cdga objects,
//! Lagrangian spans as cdga cospans, span composition by derived tensor,
//! 2-morphism modules with vertical and horizontal composition, duals,
//! diagonal spans, and the Serre composite.
//!
//! Symplectic forms are carried as formal antisymmetric expressions and
//! combined additively under products; nondegeneracy and isotropy homotopies
//! are not checked.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, Zero};

use crate::error::{LgError, Result};
use crate::graded::{
    derived_tensor, hilbert_to, is_semifree_inclusion, koszul_tate_resolve, tensor_cdga, CDGAMap,
    CdgaComplex, GradedElement, ModuleComplex, Parity, ResolveSide, SemifreeCDGA, SemifreeModule,
};
use crate::hilbert::HilbertFunction;
use crate::ring::VarTable;

/// A formal antisymmetric 2-form: rational combinations of `dv ^ dw`,
/// normalized so the stored pairs are strictly ordered.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymplecticForm {
    terms: BTreeMap<(String, String), BigRational>,
}

impl SymplecticForm {
    pub fn zero() -> Self {
        SymplecticForm::default()
    }

    pub fn add_term(&mut self, v: &str, w: &str, c: BigRational) {
        if c.is_zero() || v == w {
            return;
        }
        let (key, coeff) = if v < w {
            ((v.to_string(), w.to_string()), c)
        } else {
            ((w.to_string(), v.to_string()), -c)
        };
        let e = self.terms.entry(key).or_insert_with(BigRational::zero);
        *e += coeff;
        if e.is_zero() {
            let k: Vec<_> = self
                .terms
                .iter()
                .filter(|(_, c)| c.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in k {
                self.terms.remove(&k);
            }
        }
    }

    /// The canonical cotangent form `sum dx_i ^ dp_i` for paired names.
    pub fn cotangent(pairs: &[(String, String)]) -> Self {
        let mut f = SymplecticForm::zero();
        for (x, p) in pairs {
            f.add_term(x, p, BigRational::from(BigInt::from(1)));
        }
        f
    }

    pub fn negate(&self) -> Self {
        SymplecticForm {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c.clone())).collect(),
        }
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((v, w), c) in &other.terms {
            out.add_term(v, w, c.clone());
        }
        out
    }

    pub fn rename(&self, f: impl Fn(&str) -> String) -> Self {
        let mut out = SymplecticForm::zero();
        for ((v, w), c) in &self.terms {
            out.add_term(&f(v), &f(w), c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for SymplecticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((v, w), c)| {
                if c == &BigRational::from(BigInt::from(1)) {
                    format!("d{v}^d{w}")
                } else {
                    format!("{}*d{v}^d{w}", crate::ring::rat_string(c))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An affine symplectic object: a semifree cdga with form metadata.
#[derive(Debug, Clone)]
pub struct AffineSymplecticStack {
    pub algebra: SemifreeCDGA,
    pub form: SymplecticForm,
}

impl AffineSymplecticStack {
    pub fn new(algebra: SemifreeCDGA, form: SymplecticForm) -> Self {
        AffineSymplecticStack { algebra, form }
    }

    pub fn point() -> Self {
        let table = VarTable::new(Vec::<String>::new()).unwrap();
        AffineSymplecticStack {
            algebra: SemifreeCDGA::polynomial(&table),
            form: SymplecticForm::zero(),
        }
    }

    pub fn same_object(&self, other: &Self) -> bool {
        self.algebra == other.algebra && self.form == other.form
    }
}

/// Dual object: flip the sign of the form.
pub fn dual_stack(x: &AffineSymplecticStack) -> AffineSymplecticStack {
    AffineSymplecticStack { algebra: x.algebra.clone(), form: x.form.negate() }
}

/// A Lagrangian span, stored as a cospan of cdgas with chain-map legs.
#[derive(Debug, Clone)]
pub struct LagSpan {
    pub left: AffineSymplecticStack,
    pub right: AffineSymplecticStack,
    pub apex: SemifreeCDGA,
    /// Legs as algebra maps into the apex; a leg may be unavailable on a
    /// composite whose side was resolved away.
    pub left_leg: Option<CDGAMap>,
    pub right_leg: Option<CDGAMap>,
}

impl LagSpan {
    pub fn new(
        left: AffineSymplecticStack,
        right: AffineSymplecticStack,
        apex: SemifreeCDGA,
        left_leg: CDGAMap,
        right_leg: CDGAMap,
    ) -> Result<Self> {
        if left_leg.source != left.algebra || left_leg.target != apex {
            return Err(LgError::CompositionMismatch("left leg endpoints".into()));
        }
        if right_leg.source != right.algebra || right_leg.target != apex {
            return Err(LgError::CompositionMismatch("right leg endpoints".into()));
        }
        Ok(LagSpan { left, right, apex, left_leg: Some(left_leg), right_leg: Some(right_leg) })
    }

    pub fn require_left_leg(&self) -> Result<&CDGAMap> {
        self.left_leg
            .as_ref()
            .ok_or_else(|| LgError::Invalid("left leg was resolved away in a composition".into()))
    }

    pub fn require_right_leg(&self) -> Result<&CDGAMap> {
        self.right_leg
            .as_ref()
            .ok_or_else(|| LgError::Invalid("right leg was resolved away in a composition".into()))
    }

    pub fn apex_hilbert(&self, bound: u32) -> Result<HilbertFunction> {
        hilbert_to(&CdgaComplex(&self.apex), bound)
    }
}

/// The diagonal span of an object: apex the object's own algebra, both legs
/// the identity. Read between the unit and `X (x) X^dual` it provides the
/// (co)evaluation data; read between `X` and `X` it is the unit span.
pub fn diagonal_span(x: &AffineSymplecticStack) -> Result<LagSpan> {
    let id = CDGAMap::identity(&x.algebra);
    LagSpan::new(x.clone(), x.clone(), x.algebra.clone(), id.clone(), id)
}

/// Transposition: swap the two legs.
pub fn transpose_span(s: &LagSpan) -> LagSpan {
    LagSpan {
        left: s.right.clone(),
        right: s.left.clone(),
        apex: s.apex.clone(),
        left_leg: s.right_leg.clone(),
        right_leg: s.left_leg.clone(),
    }
}

/// Composite of two spans over their shared middle object: the apex is the
/// derived tensor of the apexes over the middle algebra. The side with fewer
/// generators is resolved (semifree inclusions are recognized and tensored
/// directly); a leg is dropped when its apex had to be resolved by the Tate
/// process.
pub fn compose_span(s1: &LagSpan, s2: &LagSpan, bound: u32) -> Result<LagSpan> {
    if !s1.right.same_object(&s2.left) {
        return Err(LgError::CompositionMismatch(
            "spans do not share the middle object".into(),
        ));
    }
    let into_r1 = s1.require_right_leg()?;
    let into_r2 = s2.require_left_leg()?;
    compose_span_with(s1, into_r1, s2, into_r2, bound)
}

fn compose_span_with(
    s1: &LagSpan,
    into_r1: &CDGAMap,
    s2: &LagSpan,
    into_r2: &CDGAMap,
    bound: u32,
) -> Result<LagSpan> {
    let dt = derived_tensor_with_maps(into_r1, into_r2, bound)?;
    let left_leg = match (&s1.left_leg, &dt.into_left) {
        (Some(a), Some(m)) => Some(a.compose(m)?),
        _ => None,
    };
    let right_leg = match (&s2.right_leg, &dt.into_right) {
        (Some(a), Some(m)) => Some(a.compose(m)?),
        _ => None,
    };
    Ok(LagSpan {
        left: s1.left.clone(),
        right: s2.right.clone(),
        apex: dt.model,
        left_leg,
        right_leg,
    })
}

pub struct TensorWithMaps {
    pub model: SemifreeCDGA,
    pub into_left: Option<CDGAMap>,
    pub into_right: Option<CDGAMap>,
    pub resolved: &'static str,
}

/// Derived tensor that also returns the structure maps of both factors into
/// the model whenever they exist strictly: the unresolved factor always
/// includes; the resolved factor maps in when it was a semifree inclusion
/// over the base (then its generators can be chased through the rewriting).
pub fn derived_tensor_with_maps(
    left: &CDGAMap,
    right: &CDGAMap,
    bound: u32,
) -> Result<TensorWithMaps> {
    // Prefer a side that is a split semifree inclusion, so both maps exist.
    let build = |resolved_left: bool| -> Result<TensorWithMaps> {
        let (l, r) = if resolved_left { (left, right) } else { (right, left) };
        let dt = derived_tensor(l, r, bound, ResolveSide::Left)?;
        // the un-resolved factor (r.target) includes generator by generator,
        // modulo the recorded renames
        let renames: BTreeMap<String, String> = dt.renames.iter().cloned().collect();
        let keep = |n: &str| renames.get(n).cloned().unwrap_or_else(|| n.to_string());
        let incl = {
            let mut images: BTreeMap<String, GradedElement> = BTreeMap::new();
            for g in r.target.generators() {
                images.insert(
                    g.name.clone(),
                    GradedElement::gen_named(dt.model.shape(), &g.name)?,
                );
            }
            CDGAMap::from_images(&r.target, &dt.model, &images)?
        };
        // the resolved factor maps in when it was a semifree inclusion:
        // base generators go through the other structure map, its own
        // extras keep their (possibly renamed) names
        let resolved_map = if is_semifree_inclusion(l) {
            let mut images: BTreeMap<String, GradedElement> = BTreeMap::new();
            let bs = l.source.shape();
            // which target generators are images of the base?
            let mut from_base: BTreeMap<String, GradedElement> = BTreeMap::new();
            for i in 0..bs.even.len() {
                let img = l.even_image(i);
                let ((m, _), _) = img.terms().next().unwrap();
                let v = m.iter().position(|&e| e > 0).unwrap();
                let gname = l.target.shape().even.name(v).to_string();
                from_base.insert(gname, incl.apply(right_or_left_image(r, i, Parity::Even)?)?);
            }
            for i in 0..bs.odd_len() {
                let img = l.odd_image(i);
                let ((_, mask), _) = img.terms().next().unwrap();
                let v = mask.trailing_zeros() as usize;
                let gname = l.target.shape().odd_name(v).to_string();
                from_base.insert(gname, incl.apply(right_or_left_image(r, i, Parity::Odd)?)?);
            }
            for g in l.target.generators() {
                match from_base.get(&g.name) {
                    Some(e) => {
                        images.insert(g.name.clone(), e.clone());
                    }
                    None => {
                        images.insert(
                            g.name.clone(),
                            GradedElement::gen_named(dt.model.shape(), &keep(&g.name))?,
                        );
                    }
                }
            }
            Some(CDGAMap::from_images(&l.target, &dt.model, &images)?)
        } else {
            None
        };
        let (into_left, into_right) = if resolved_left {
            (resolved_map, Some(incl))
        } else {
            (Some(incl), resolved_map)
        };
        Ok(TensorWithMaps { model: dt.model, into_left, into_right, resolved: dt.resolved })
    };

    let left_incl = is_semifree_inclusion(left);
    let right_incl = is_semifree_inclusion(right);
    match (left_incl, right_incl) {
        (true, _) => build(true),
        (false, true) => build(false),
        (false, false) => {
            // fall back: resolve the side with fewer apex generators
            let lg = left.target.shape().even.len() + left.target.shape().odd_len();
            let rg = right.target.shape().even.len() + right.target.shape().odd_len();
            if rg < lg {
                build(false)
            } else {
                build(true)
            }
        }
    }
}

fn right_or_left_image(r: &CDGAMap, i: usize, p: Parity) -> Result<&GradedElement> {
    Ok(match p {
        Parity::Even => r.even_image(i),
        Parity::Odd => r.odd_image(i),
    })
}

/// The intersection algebra of two parallel spans: the derived tensor of the
/// apexes over `A (x) B`.
pub fn intersect_spans(s: &LagSpan, t: &LagSpan, bound: u32) -> Result<crate::graded::DerivedTensor> {
    if !s.left.same_object(&t.left) || !s.right.same_object(&t.right) {
        return Err(LgError::CompositionMismatch(
            "parallel spans must share both boundary objects".into(),
        ));
    }
    let (ab, _renames) = tensor_cdga(&s.left.algebra, &s.right.algebra)?;
    let into_s = combine_legs(&ab, &s.left.algebra, &s.right.algebra, s.require_left_leg()?, s.require_right_leg()?)?;
    let into_t = combine_legs(&ab, &t.left.algebra, &t.right.algebra, t.require_left_leg()?, t.require_right_leg()?)?;
    derived_tensor(&into_s, &into_t, bound, ResolveSide::Auto)
}

/// The induced map `A (x) B -> R` from the two legs of a span. The tensor
/// renames the right copy on clashes, so images are matched positionally.
pub fn combine_legs(
    ab: &SemifreeCDGA,
    a: &SemifreeCDGA,
    b: &SemifreeCDGA,
    left_leg: &CDGAMap,
    right_leg: &CDGAMap,
) -> Result<CDGAMap> {
    let mut even_images = Vec::new();
    let mut odd_images = Vec::new();
    let na_even = a.shape().even.len();
    let na_odd = a.shape().odd_len();
    for i in 0..ab.shape().even.len() {
        if i < na_even {
            even_images.push(left_leg.even_image(i).clone());
        } else {
            even_images.push(right_leg.even_image(i - na_even).clone());
        }
    }
    for i in 0..ab.shape().odd_len() {
        if i < na_odd {
            odd_images.push(left_leg.odd_image(i).clone());
        } else {
            odd_images.push(right_leg.odd_image(i - na_odd).clone());
        }
    }
    let _ = b;
    CDGAMap::new(ab.clone(), left_leg.target.clone(), even_images, odd_images)
}

/// Vertical composition of 2-morphism modules over the shared middle span:
/// the two-sided resolution sandwich
/// `(X (x) Y) (x)_{S^e} KT(S^e -> S)`
/// over the base `(D1 (x) D2)[kt generators]`.
pub fn compose_2mor(
    x: &SemifreeModule,
    y: &SemifreeModule,
    s: &SemifreeCDGA,
    s_into_d1: &CDGAMap,
    s_into_d2: &CDGAMap,
    bound: u32,
) -> Result<(SemifreeModule, HilbertFunction)> {
    if s_into_d1.target != *x.base() || s_into_d2.target != *y.base() {
        return Err(LgError::CompositionMismatch(
            "structure maps do not land in the module bases".into(),
        ));
    }
    // S^e with the multiplication map to S
    let (se, renames) = tensor_cdga(s, s)?;
    let rename: BTreeMap<String, String> = renames.into_iter().collect();
    let mut mult_images: BTreeMap<String, GradedElement> = BTreeMap::new();
    for g in s.generators() {
        let orig = GradedElement::gen_named(s.shape(), &g.name)?;
        mult_images.insert(g.name.clone(), orig.clone());
        if let Some(rn) = rename.get(&g.name) {
            mult_images.insert(rn.clone(), orig);
        }
    }
    let mult = CDGAMap::from_images(&se, s, &mult_images)?;
    let kt = koszul_tate_resolve(&mult, bound)?;

    // base: D1 (x) D2, then adjoin the kt generators with differentials
    // pushed through (S^e -> D1 (x) D2)
    let (d12, d12_renames) = tensor_cdga(&s_into_d1.target, &s_into_d2.target)?;
    let d2_rename: BTreeMap<String, String> = d12_renames.into_iter().collect();

    // the map S^e -> D1 (x) D2: left copy through s_into_d1, right copy
    // through s_into_d2 (with the D2 renames applied). S^e generators are
    // S's (left) followed by the renamed copies (right), positionally.
    let into_d12 = {
        let transfer_left = |e: &GradedElement| -> Result<GradedElement> {
            transfer_by_name(e, &d12, |n| n.to_string())
        };
        let transfer_right = |e: &GradedElement| -> Result<GradedElement> {
            transfer_by_name(e, &d12, |n| {
                d2_rename.get(n).cloned().unwrap_or_else(|| n.to_string())
            })
        };
        let mut even_images = Vec::new();
        for i in 0..s.shape().even.len() {
            even_images.push(transfer_left(s_into_d1.even_image(i))?);
        }
        for i in 0..s.shape().even.len() {
            even_images.push(transfer_right(s_into_d2.even_image(i))?);
        }
        let mut odd_images = Vec::new();
        for i in 0..s.shape().odd_len() {
            odd_images.push(transfer_left(s_into_d1.odd_image(i))?);
        }
        for i in 0..s.shape().odd_len() {
            odd_images.push(transfer_right(s_into_d2.odd_image(i))?);
        }
        CDGAMap::new(se.clone(), d12.clone(), even_images, odd_images)?
    };

    // the kt generators adjoined beyond S^e, collected by name
    let base_names: Vec<String> = se
        .shape()
        .even
        .names()
        .iter()
        .cloned()
        .chain(se.shape().odd_names().iter().cloned())
        .collect();
    let kt_gens: Vec<crate::graded::GradedVar> = kt
        .algebra
        .generators()
        .into_iter()
        .filter(|g| !base_names.contains(&g.name))
        .collect();

    let mut even: Vec<(String, u32)> = (0..d12.shape().even.len())
        .map(|i| (d12.shape().even.name(i).to_string(), d12.shape().even.weight(i)))
        .collect();
    let mut odd: Vec<(String, u32)> = (0..d12.shape().odd_len())
        .map(|i| (d12.shape().odd_name(i).to_string(), d12.shape().odd_weight(i)))
        .collect();
    for g in &kt_gens {
        match g.parity {
            Parity::Even => even.push((g.name.clone(), g.weight)),
            Parity::Odd => odd.push((g.name.clone(), g.weight)),
        }
    }
    let (names, weights): (Vec<String>, Vec<u32>) = even.into_iter().unzip();
    let table = VarTable::with_weights(names, weights)?;
    let shape = crate::graded::AlgebraShape::new(table, odd)?;

    // transport helper: kt.algebra elements -> base shape, rewriting base
    // S^e generators through into_d12 and keeping kt names
    let se_names: Vec<String> = base_names;
    let rewrite = |e: &GradedElement| -> Result<GradedElement> {
        let mut out = GradedElement::zero(&shape);
        for ((mono, mask), c) in e.terms() {
            let mut acc = GradedElement::constant(&shape, c.clone());
            for (v, &ev) in mono.iter().enumerate() {
                if ev == 0 {
                    continue;
                }
                let name = kt.algebra.shape().even.name(v);
                let img = if se_names.contains(&name.to_string()) {
                    let idx = se.shape().even.position(name).unwrap();
                    transfer_by_name(into_d12.even_image(idx), &shape_algebra(&shape), |n| n.to_string())?
                } else {
                    GradedElement::gen_named(&shape, name)?
                };
                acc = &acc * &img.pow(ev as u32);
            }
            let mut rest = *mask;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let name = kt.algebra.shape().odd_name(i);
                let img = if se_names.contains(&name.to_string()) {
                    let idx = se.shape().odd_position(name).unwrap();
                    transfer_by_name(into_d12.odd_image(idx), &shape_algebra(&shape), |n| n.to_string())?
                } else {
                    GradedElement::gen_named(&shape, name)?
                };
                acc = &acc * &img;
            }
            out = &out + &acc;
        }
        Ok(out)
    };

    let mut d_even: Vec<GradedElement> = Vec::new();
    for i in 0..d12.shape().even.len() {
        d_even.push(transfer_by_name(d12.d_even_gen(i), &shape_algebra(&shape), |n| n.to_string())?);
    }
    let mut d_odd: Vec<GradedElement> = Vec::new();
    for i in 0..d12.shape().odd_len() {
        d_odd.push(transfer_by_name(d12.d_odd_gen(i), &shape_algebra(&shape), |n| n.to_string())?);
    }
    for g in &kt_gens {
        let img = match g.parity {
            Parity::Even => {
                let idx = kt.algebra.shape().even.position(&g.name).unwrap();
                kt.algebra.d_even_gen(idx)
            }
            Parity::Odd => {
                let idx = kt.algebra.shape().odd_position(&g.name).unwrap();
                kt.algebra.d_odd_gen(idx)
            }
        };
        let rewritten = rewrite(img)?;
        match g.parity {
            Parity::Even => d_even.push(rewritten),
            Parity::Odd => d_odd.push(rewritten),
        }
    }
    let base = SemifreeCDGA::new(shape.clone(), d_even, d_odd)?;

    // module generators: pairs, with D1/D2 coefficients transported
    let mut gens = Vec::new();
    let mut diff: Vec<Vec<(usize, GradedElement)>> = Vec::new();
    let gen_index = |i: usize, j: usize| i * y.rank() + j;
    for i in 0..x.rank() {
        for j in 0..y.rank() {
            gens.push((
                format!("{}_{}", x.gen_name(i), y.gen_name(j)),
                x.gen_parity(i).combine(y.gen_parity(j)),
                x.gen_weight(i) + y.gen_weight(j),
            ));
        }
    }
    let move_d1 = |e: &GradedElement| transfer_by_name(e, &shape_algebra(&shape), |n| n.to_string());
    let move_d2 = |e: &GradedElement| {
        transfer_by_name(e, &shape_algebra(&shape), |n| {
            d2_rename.get(n).cloned().unwrap_or_else(|| n.to_string())
        })
    };
    for i in 0..x.rank() {
        for j in 0..y.rank() {
            let mut col: Vec<(usize, GradedElement)> = Vec::new();
            for (i2, c) in x.diff_column(i) {
                col.push((gen_index(*i2, j), move_d1(c)?));
            }
            let sign = match x.gen_parity(i) {
                Parity::Even => BigRational::from(BigInt::from(1)),
                Parity::Odd => BigRational::from(BigInt::from(-1)),
            };
            for (j2, c) in y.diff_column(j) {
                col.push((gen_index(i, *j2), move_d2(c)?.scale(&sign)));
            }
            diff.push(col);
        }
    }
    let module = SemifreeModule::new(base, gens, diff, None)?;
    let h = hilbert_to(&ModuleComplex(&module), bound)?;
    Ok((module, h))
}

fn shape_algebra(shape: &std::sync::Arc<crate::graded::AlgebraShape>) -> SemifreeCDGA {
    SemifreeCDGA::with_zero_differential(shape)
}

/// Transport an element to another algebra's shape by (renamed) generator
/// names.
fn transfer_by_name(
    e: &GradedElement,
    target: &SemifreeCDGA,
    rename: impl Fn(&str) -> String,
) -> Result<GradedElement> {
    let shape = target.shape();
    let src = e.shape();
    let mut out = GradedElement::zero(shape);
    for ((mono, mask), c) in e.terms() {
        let mut acc = GradedElement::constant(shape, c.clone());
        for (v, &ev) in mono.iter().enumerate() {
            if ev > 0 {
                let name = rename(src.even.name(v));
                acc = &acc * &GradedElement::gen_named(shape, &name)?.pow(ev as u32);
            }
        }
        let mut rest = *mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let name = rename(src.odd_name(i));
            acc = &acc * &GradedElement::gen_named(shape, &name)?;
        }
        out = &out + &acc;
    }
    Ok(out)
}

/// The Serre composite of an affine object: the iterated span composition of
/// the paper of record's three-step diagram, whose apex cohomology should
/// reproduce the object's own algebra.
pub fn serre_composite(x: &AffineSymplecticStack, bound: u32) -> Result<HilbertFunction> {
    let a = &x.algebra;
    let (a2, _) = tensor_cdga(a, a)?;
    let (a3, _) = tensor_cdga(&a2, a)?;
    let n = a.shape().even.len() + a.shape().odd_len();

    // generator names of the copies inside a2 and a3 (positional)
    let gen_elem = |alg: &SemifreeCDGA, copy: usize, i: usize, p: Parity| -> Result<GradedElement> {
        match p {
            Parity::Even => {
                let idx = copy * a.shape().even.len() + i;
                Ok(GradedElement::even_var(alg.shape(), idx))
            }
            Parity::Odd => {
                let idx = copy * a.shape().odd_len() + i;
                Ok(GradedElement::odd_var(alg.shape(), idx))
            }
        }
    };
    let _ = n;

    // pi_1^*: A -> A^2 (first copy)
    let pi1 = {
        let mut ev = Vec::new();
        for i in 0..a.shape().even.len() {
            ev.push(gen_elem(&a2, 0, i, Parity::Even)?);
        }
        let mut od = Vec::new();
        for i in 0..a.shape().odd_len() {
            od.push(gen_elem(&a2, 0, i, Parity::Odd)?);
        }
        CDGAMap::new(a.clone(), a2.clone(), ev, od)?
    };
    // (id x i)^*: A^3 -> A^2 : copy0 -> copy0, copy1 -> copy1, copy2 -> copy1
    let id_times_diag = {
        let mut ev = Vec::new();
        for copy in 0..3 {
            let to = if copy == 0 { 0 } else { 1 };
            for i in 0..a.shape().even.len() {
                ev.push(gen_elem(&a2, to, i, Parity::Even)?);
            }
        }
        let mut od = Vec::new();
        for copy in 0..3 {
            let to = if copy == 0 { 0 } else { 1 };
            for i in 0..a.shape().odd_len() {
                od.push(gen_elem(&a2, to, i, Parity::Odd)?);
            }
        }
        CDGAMap::new(a3.clone(), a2.clone(), ev, od)?
    };
    // (sigma x id)^*: A^3 -> A^3 : swap copies 0 and 1
    let swap01 = {
        let mut ev = Vec::new();
        for copy in 0..3 {
            let to = match copy {
                0 => 1,
                1 => 0,
                _ => 2,
            };
            for i in 0..a.shape().even.len() {
                ev.push(gen_elem(&a3, to, i, Parity::Even)?);
            }
        }
        let mut od = Vec::new();
        for copy in 0..3 {
            let to = match copy {
                0 => 1,
                1 => 0,
                _ => 2,
            };
            for i in 0..a.shape().odd_len() {
                od.push(gen_elem(&a3, to, i, Parity::Odd)?);
            }
        }
        CDGAMap::new(a3.clone(), a3.clone(), ev, od)?
    };

    let x3 = AffineSymplecticStack::new(a3.clone(), SymplecticForm::zero());
    let x2 = AffineSymplecticStack::new(a2.clone(), SymplecticForm::zero());
    let _ = x2;
    // span 1: X <- X x X -> X^3 with legs pi_1 and (id x i)
    let span1 = LagSpan::new(x.clone(), x3.clone(), a2.clone(), pi1.clone(), id_times_diag.clone())?;
    // span 2: X^3 <- X^3 -> X^3 with legs id and (sigma x id)
    let span2 = LagSpan::new(
        x3.clone(),
        x3.clone(),
        a3.clone(),
        CDGAMap::identity(&a3),
        swap01,
    )?;
    // span 3: X^3 <- X x X -> X with legs (id x i) and pi_1
    let span3 = LagSpan::new(x3, x.clone(), a2.clone(), id_times_diag, pi1)?;

    let s12 = compose_span(&span1, &span2, bound)?;
    let s123 = compose_span(&s12, &span3, bound)?;
    s123.apex_hilbert(bound)
}

#[cfg(test)]
mod tests;
