//! Koszul-Tate resolutions and derived tensor products of semifree cdgas.
//!
//! The resolution process adjoins generators weight by weight to make a cdga
//! map a quasi-isomorphism: an even/odd generator with zero differential for
//! every cohomology class of the target that is not yet hit, and a generator
//! of opposite parity killing every cycle whose class dies in the target.
//! Over the rationals polynomial generators suffice; no divided powers.

use std::collections::BTreeMap;

use num::BigRational;

use super::cdga::{CDGAMap, SemifreeCDGA};
use super::complexes::CdgaComplex;
use super::element::{AlgebraShape, GradedElement, Parity};
use super::slab::{hilbert_to, induces_iso, Slab, SlabMap};
use crate::error::{LgError, Result};
use crate::hilbert::HilbertFunction;
use crate::linalg;
use crate::ring::{Mono, VarTable};

pub struct KTResolution {
    /// The source algebra with the adjoined generators; semifree over it.
    pub algebra: SemifreeCDGA,
    /// The extension of the resolved map; a quasi-isomorphism inside the
    /// window when `trusted`.
    pub map: CDGAMap,
    pub adjoined: Vec<String>,
    pub trusted: bool,
}

fn require_step0(a: &SemifreeCDGA, who: &str) -> Result<()> {
    match a.max_step() {
        None | Some(0) => Ok(()),
        Some(s) => Err(LgError::Grading(format!(
            "{who} has a weight-raising differential (step {s}); the Tate process needs weight-preserving differentials"
        ))),
    }
}

fn require_weight_preserving(f: &CDGAMap) -> Result<()> {
    let s = f.source.shape();
    for i in 0..s.even.len() {
        let img = f.even_image(i);
        if !img.is_zero()
            && (img.max_weight() != s.even.weight(i) || img.min_weight() != Some(s.even.weight(i)))
        {
            return Err(LgError::Grading(format!(
                "structure map shifts the weight of `{}`",
                s.even.name(i)
            )));
        }
    }
    for i in 0..s.odd_len() {
        let img = f.odd_image(i);
        if !img.is_zero()
            && (img.max_weight() != s.odd_weight(i) || img.min_weight() != Some(s.odd_weight(i)))
        {
            return Err(LgError::Grading(format!(
                "structure map shifts the weight of `{}`",
                s.odd_name(i)
            )));
        }
    }
    Ok(())
}

/// Append generators to a semifree cdga. Differential images and map images
/// are expressed over the *extended* shape by the caller through the returned
/// shape of a dry-run extension, so this helper takes closures.
struct Extension {
    name: String,
    parity: Parity,
    weight: u32,
}

fn extend_shape(a: &SemifreeCDGA, exts: &[Extension]) -> Result<std::sync::Arc<AlgebraShape>> {
    let shape = a.shape();
    let mut even: Vec<(String, u32)> = (0..shape.even.len())
        .map(|i| (shape.even.name(i).to_string(), shape.even.weight(i)))
        .collect();
    let mut odd: Vec<(String, u32)> = (0..shape.odd_len())
        .map(|i| (shape.odd_name(i).to_string(), shape.odd_weight(i)))
        .collect();
    for e in exts {
        match e.parity {
            Parity::Even => even.push((e.name.clone(), e.weight)),
            Parity::Odd => odd.push((e.name.clone(), e.weight)),
        }
    }
    let (names, weights): (Vec<String>, Vec<u32>) = even.into_iter().unzip();
    let table = VarTable::with_weights(names, weights)?;
    AlgebraShape::new(table, odd)
}

/// Transfer an element into an extended shape (same generator names, appended
/// generators; even indices may shift when evens were appended, odd indices
/// are stable).
fn transfer_element(
    e: &GradedElement,
    target: &std::sync::Arc<AlgebraShape>,
) -> Result<GradedElement> {
    let src = e.shape();
    let mut pos = Vec::with_capacity(src.even.len());
    for i in 0..src.even.len() {
        pos.push(target.even.require(src.even.name(i))?);
    }
    for i in 0..src.odd_len() {
        let want = target.odd_position(src.odd_name(i));
        if want != Some(i) {
            return Err(LgError::Internal("odd generator order changed in extension".into()));
        }
    }
    let mut out = GradedElement::zero(target);
    for ((m, mask), c) in e.terms() {
        let mut m2 = vec![0u16; target.even.len()];
        for (i, &ev) in m.iter().enumerate() {
            m2[pos[i]] = ev;
        }
        out.add_term(m2, *mask, c.clone());
    }
    Ok(out)
}

/// Reconstruct the element of a cdga slab basis key.
fn key_element(shape: &std::sync::Arc<AlgebraShape>, key: &(Mono, u64)) -> GradedElement {
    GradedElement::from_terms(
        shape,
        [(key.0.clone(), key.1, BigRational::from_integer(1.into()))],
    )
}

fn vector_element(
    shape: &std::sync::Arc<AlgebraShape>,
    slab: &Slab<(Mono, u64)>,
    v: &[(usize, BigRational)],
) -> GradedElement {
    let mut out = GradedElement::zero(shape);
    for (i, c) in v {
        let (m, mask) = &slab.keys[*i];
        out.add_term(m.clone(), *mask, c.clone());
    }
    out
}

/// Resolve `f : B -> C` by Tate's process up to the given weight bound.
pub fn koszul_tate_resolve(f: &CDGAMap, bound: u32) -> Result<KTResolution> {
    require_step0(&f.source, "the source algebra")?;
    require_step0(&f.target, "the target algebra")?;
    require_weight_preserving(f)?;

    let mut algebra = f.source.clone();
    let mut map = f.clone();
    let mut adjoined: Vec<String> = Vec::new();
    let mut counter = 0usize;
    let mut trusted = true;

    let target_slab = Slab::build(&CdgaComplex(&f.target), bound)?;

    for w in 0..=bound {
        let mut pass = 0;
        loop {
            pass += 1;
            if pass > 12 {
                trusted = false;
                break;
            }
            let x_slab = Slab::build(&CdgaComplex(&algebra), w)?;
            let mut exts: Vec<(Extension, GradedElement, GradedElement)> = Vec::new();
            // (extension, d-image over current shape, phi-image)

            for p in [Parity::Even, Parity::Odd] {
                let zc = target_slab.slot_cycles(w, p);
                let bc = target_slab.slot_boundaries(w, p.flip());
                let zx = x_slab.slot_cycles(w, p);
                let bx = x_slab.slot_boundaries(w, p.flip());

                // image of X-cycles in C
                let phi_of = |v: &[(usize, BigRational)]| -> Result<Vec<(usize, BigRational)>> {
                    let mut acc: BTreeMap<usize, BigRational> = BTreeMap::new();
                    for (i, c) in v {
                        let img = map.apply(&key_element(algebra.shape(), &x_slab.keys[*i]))?;
                        for ((m, mask), f_c) in img.terms() {
                            if let Some(&ti) = target_slab.index.get(&(m.clone(), *mask)) {
                                let e = acc
                                    .entry(ti)
                                    .or_insert_with(|| BigRational::from_integer(0.into()));
                                *e += c * f_c;
                            } else {
                                return Err(LgError::Internal(
                                    "map image escaped the target slab".into(),
                                ));
                            }
                        }
                    }
                    Ok(acc
                        .into_iter()
                        .filter(|(_, c)| !num::Zero::is_zero(c))
                        .collect())
                };

                // --- surjectivity defects ---
                let mut span = linalg::IncrementalSpan::new();
                for b in &bc {
                    span.absorb(b);
                }
                let mut phi_zx: Vec<Vec<(usize, BigRational)>> = Vec::new();
                for z in &zx {
                    phi_zx.push(phi_of(z)?);
                }
                for v in &phi_zx {
                    span.absorb(v);
                }
                for z in &zc {
                    if span.absorb(z) {
                        // a missing class: adjoin a cycle generator mapping to it
                        counter += 1;
                        let name = format!("t{w}_{counter}");
                        let phi_img = vector_element(f.target.shape(), &target_slab, z);
                        exts.push((
                            Extension { name: name.clone(), parity: p, weight: w },
                            GradedElement::zero(algebra.shape()),
                            phi_img,
                        ));
                        adjoined.push(name);
                    }
                }

                // --- injectivity defects ---
                // basis of H_X at (w, p): cycles independent modulo boundaries
                let mut hx_reps: Vec<Vec<(usize, BigRational)>> = Vec::new();
                {
                    let mut sp = linalg::IncrementalSpan::new();
                    for b in &bx {
                        sp.absorb(b);
                    }
                    for z in &zx {
                        if sp.absorb(z) {
                            hx_reps.push(z.clone());
                        }
                    }
                }
                if !hx_reps.is_empty() {
                    // kernel of H(phi): combinations of hx reps landing in B_C
                    let mut cols: Vec<Vec<(usize, BigRational)>> = Vec::new();
                    for r in &hx_reps {
                        cols.push(phi_of(r)?);
                    }
                    let nh = cols.len();
                    for b in &bc {
                        cols.push(b.clone());
                    }
                    let kernel = linalg::kernel_basis(target_slab.dim(), &cols);
                    // independent kernel combos restricted to the hx-part
                    let mut seen = linalg::IncrementalSpan::new();
                    for combo in kernel {
                        let hx_part: Vec<(usize, BigRational)> =
                            combo.iter().filter(|(i, _)| *i < nh).cloned().collect();
                        if hx_part.is_empty() || !seen.absorb(&hx_part) {
                            continue;
                        }
                        // z = sum of hx reps, a cycle whose class dies in C
                        let mut zvec: BTreeMap<usize, BigRational> = BTreeMap::new();
                        for (i, c) in &hx_part {
                            for (b, v) in &hx_reps[*i] {
                                let e = zvec
                                    .entry(*b)
                                    .or_insert_with(|| BigRational::from_integer(0.into()));
                                *e += c * v;
                            }
                        }
                        let zvec: Vec<(usize, BigRational)> = zvec
                            .into_iter()
                            .filter(|(_, c)| !num::Zero::is_zero(c))
                            .collect();
                        if zvec.is_empty() {
                            continue;
                        }
                        let phi_z = phi_of(&zvec)?;
                        // solve d_C(c) = phi(z)
                        let bc_cols: Vec<Vec<(usize, BigRational)>> = target_slab
                            .slot(w, p.flip())
                            .iter()
                            .map(|&i| target_slab.cols[i].clone())
                            .collect();
                        let sol = linalg::solve_in_span(target_slab.dim(), &bc_cols, &phi_z)
                            .ok_or_else(|| {
                                LgError::Internal(
                                    "dead class has no boundary preimage in the target".into(),
                                )
                            })?;
                        let mut c_elem = GradedElement::zero(f.target.shape());
                        let opp_slot = target_slab.slot(w, p.flip());
                        for (local, coeff) in sol {
                            let gi = opp_slot[local];
                            let (m, mask) = &target_slab.keys[gi];
                            c_elem.add_term(m.clone(), *mask, coeff);
                        }
                        counter += 1;
                        let name = format!("t{w}_{counter}");
                        let d_img = vector_element(algebra.shape(), &x_slab, &zvec);
                        exts.push((
                            Extension { name: name.clone(), parity: p.flip(), weight: w },
                            d_img,
                            c_elem,
                        ));
                        adjoined.push(name);
                    }
                }
            }

            if exts.is_empty() {
                break;
            }
            // apply the extensions
            let new_shape =
                extend_shape(&algebra, &exts.iter().map(|(e, _, _)| Extension {
                    name: e.name.clone(),
                    parity: e.parity,
                    weight: e.weight,
                }).collect::<Vec<_>>())?;
            let mut d_even: Vec<GradedElement> = Vec::new();
            let mut d_odd: Vec<GradedElement> = Vec::new();
            for i in 0..algebra.shape().even.len() {
                d_even.push(transfer_element(algebra.d_even_gen(i), &new_shape)?);
            }
            for (e, d_img, _) in &exts {
                if e.parity == Parity::Even {
                    d_even.push(transfer_element(d_img, &new_shape)?);
                }
            }
            for i in 0..algebra.shape().odd_len() {
                d_odd.push(transfer_element(algebra.d_odd_gen(i), &new_shape)?);
            }
            for (e, d_img, _) in &exts {
                if e.parity == Parity::Odd {
                    d_odd.push(transfer_element(d_img, &new_shape)?);
                }
            }
            let new_algebra = SemifreeCDGA::new(new_shape, d_even, d_odd)?;

            let mut even_images: Vec<GradedElement> = Vec::new();
            let mut odd_images: Vec<GradedElement> = Vec::new();
            for i in 0..algebra.shape().even.len() {
                even_images.push(map.even_image(i).clone());
            }
            for (e, _, phi) in &exts {
                if e.parity == Parity::Even {
                    even_images.push(phi.clone());
                }
            }
            for i in 0..algebra.shape().odd_len() {
                odd_images.push(map.odd_image(i).clone());
            }
            for (e, _, phi) in &exts {
                if e.parity == Parity::Odd {
                    odd_images.push(phi.clone());
                }
            }
            map = CDGAMap::new(new_algebra.clone(), f.target.clone(), even_images, odd_images)?;
            algebra = new_algebra;
        }
    }

    Ok(KTResolution { algebra, map, adjoined, trusted })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ResolveSide {
    Left,
    Right,
    #[default]
    Auto,
}

pub struct DerivedTensor {
    pub model: SemifreeCDGA,
    /// Structure map from the un-resolved factor into the model.
    pub hilbert: HilbertFunction,
    pub resolved: &'static str,
    pub renames: Vec<(String, String)>,
    pub trusted: bool,
}

/// Is `f : B -> M` a split generator inclusion (M semifree over B on the
/// nose)? Then the derived tensor needs no resolution.
pub fn is_semifree_inclusion(f: &CDGAMap) -> bool {
    let s = f.source.shape();
    let mut hit: Vec<(Parity, usize)> = Vec::new();
    for i in 0..s.even.len() {
        let img = f.even_image(i);
        let mut terms = img.terms();
        let Some(((m, mask), c)) = terms.next() else { return false };
        if terms.next().is_some() || *mask != 0 || c != &BigRational::from_integer(1.into()) {
            return false;
        }
        let ones: Vec<usize> = m
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, _)| v)
            .collect();
        if ones.len() != 1 || m[ones[0]] != 1 {
            return false;
        }
        let key = (Parity::Even, ones[0]);
        if hit.contains(&key) {
            return false;
        }
        hit.push(key);
    }
    for i in 0..s.odd_len() {
        let img = f.odd_image(i);
        let mut terms = img.terms();
        let Some(((m, mask), c)) = terms.next() else { return false };
        if terms.next().is_some()
            || c != &BigRational::from_integer(1.into())
            || m.iter().any(|&e| e > 0)
            || mask.count_ones() != 1
        {
            return false;
        }
        let key = (Parity::Odd, mask.trailing_zeros() as usize);
        if hit.contains(&key) {
            return false;
        }
        hit.push(key);
    }
    // differentials must correspond under the map, which the chain-map
    // validation already guarantees.
    true
}

/// `M tensor_B N`, underived, valid when `left` is a split semifree
/// inclusion: the result adjoins M's non-B generators to N.
fn semifree_tensor(
    left: &CDGAMap,
    right: &CDGAMap,
) -> Result<(SemifreeCDGA, Vec<(String, String)>)> {
    let m_alg = &left.target;
    let n_alg = &right.target;
    let ms = m_alg.shape();
    // which M-generators are images of B?
    let mut from_b_even: BTreeMap<usize, usize> = BTreeMap::new(); // M even gen -> B even gen
    let mut from_b_odd: BTreeMap<usize, usize> = BTreeMap::new();
    let bs = left.source.shape();
    for i in 0..bs.even.len() {
        let img = left.even_image(i);
        let ((m, _), _) = img.terms().next().unwrap();
        let v = m.iter().position(|&e| e > 0).unwrap();
        from_b_even.insert(v, i);
    }
    for i in 0..bs.odd_len() {
        let img = left.odd_image(i);
        let ((_, mask), _) = img.terms().next().unwrap();
        from_b_odd.insert(mask.trailing_zeros() as usize, i);
    }

    // result generators: N's, then M's extras (renamed on clash)
    let mut renames: Vec<(String, String)> = Vec::new();
    let mut taken: Vec<String> = n_alg
        .shape()
        .even
        .names()
        .iter()
        .cloned()
        .chain(n_alg.shape().odd_names().iter().cloned())
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

    let mut even: Vec<(String, u32)> = (0..n_alg.shape().even.len())
        .map(|i| (n_alg.shape().even.name(i).to_string(), n_alg.shape().even.weight(i)))
        .collect();
    let mut odd: Vec<(String, u32)> = (0..n_alg.shape().odd_len())
        .map(|i| (n_alg.shape().odd_name(i).to_string(), n_alg.shape().odd_weight(i)))
        .collect();
    let mut extra_even_name: BTreeMap<usize, String> = BTreeMap::new();
    let mut extra_odd_name: BTreeMap<usize, String> = BTreeMap::new();
    for v in 0..ms.even.len() {
        if !from_b_even.contains_key(&v) {
            let nn = fresh(ms.even.name(v), &mut taken, &mut renames);
            extra_even_name.insert(v, nn.clone());
            even.push((nn, ms.even.weight(v)));
        }
    }
    for v in 0..ms.odd_len() {
        if !from_b_odd.contains_key(&v) {
            let nn = fresh(ms.odd_name(v), &mut taken, &mut renames);
            extra_odd_name.insert(v, nn.clone());
            odd.push((nn, ms.odd_weight(v)));
        }
    }
    let (names, weights): (Vec<String>, Vec<u32>) = even.into_iter().unzip();
    let table = VarTable::with_weights(names, weights)?;
    let shape = AlgebraShape::new(table, odd)?;

    // psi : M -> result
    let psi_even: Vec<GradedElement> = (0..ms.even.len())
        .map(|v| -> Result<GradedElement> {
            if let Some(&b) = from_b_even.get(&v) {
                transfer_element(right.even_image(b), &shape)
            } else {
                GradedElement::gen_named(&shape, &extra_even_name[&v])
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let psi_odd: Vec<GradedElement> = (0..ms.odd_len())
        .map(|v| -> Result<GradedElement> {
            if let Some(&b) = from_b_odd.get(&v) {
                transfer_element(right.odd_image(b), &shape)
            } else {
                GradedElement::gen_named(&shape, &extra_odd_name[&v])
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let apply_psi = |e: &GradedElement| -> Result<GradedElement> {
        let mut out = GradedElement::zero(&shape);
        for ((mono, mask), coeff) in e.terms() {
            let mut acc = GradedElement::constant(&shape, coeff.clone());
            for (v, &ev) in mono.iter().enumerate() {
                if ev > 0 {
                    acc = &acc * &psi_even[v].pow(ev as u32);
                }
            }
            let mut rest = *mask;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                acc = &acc * &psi_odd[i];
            }
            out = &out + &acc;
        }
        Ok(out)
    };

    // differentials: N's generators keep theirs; M's extras push through psi
    let mut d_even: Vec<GradedElement> = Vec::new();
    for i in 0..n_alg.shape().even.len() {
        d_even.push(transfer_element(n_alg.d_even_gen(i), &shape)?);
    }
    for v in 0..ms.even.len() {
        if !from_b_even.contains_key(&v) {
            d_even.push(apply_psi(m_alg.d_even_gen(v))?);
        }
    }
    let mut d_odd: Vec<GradedElement> = Vec::new();
    for i in 0..n_alg.shape().odd_len() {
        d_odd.push(transfer_element(n_alg.d_odd_gen(i), &shape)?);
    }
    for v in 0..ms.odd_len() {
        if !from_b_odd.contains_key(&v) {
            d_odd.push(apply_psi(m_alg.d_odd_gen(v))?);
        }
    }
    Ok((SemifreeCDGA::new(shape, d_even, d_odd)?, renames))
}

/// Derived tensor product of two B-algebras given by their structure maps.
/// Resolves one side by the Tate process (or recognizes it as semifree over B
/// and tensors directly), then tensors underived.
pub fn derived_tensor(
    left: &CDGAMap,
    right: &CDGAMap,
    bound: u32,
    side: ResolveSide,
) -> Result<DerivedTensor> {
    if left.source.shape() != right.source.shape() {
        return Err(LgError::TableMismatch("derived tensor factors over different bases".into()));
    }
    let attempt = |l: &CDGAMap, r: &CDGAMap, label: &'static str, fast: &'static str| -> Result<DerivedTensor> {
        if is_semifree_inclusion(l) {
            let (model, renames) = semifree_tensor(l, r)?;
            let model = model.regrade_monotone()?;
            let hilbert = hilbert_to(&CdgaComplex(&model), bound)?;
            let trusted = hilbert.trusted_upto >= bound as i64;
            return Ok(DerivedTensor { model, hilbert, resolved: fast, renames, trusted });
        }
        let kt = koszul_tate_resolve(l, bound)?;
        // kt.algebra = B[new gens]; the inclusion B -> kt.algebra is split by
        // construction, so tensor it against `r`.
        let incl = CDGAMap::from_images(&l.source, &kt.algebra, &BTreeMap::new())?;
        let (model, renames) = semifree_tensor(&incl, r)?;
        let model = model.regrade_monotone()?;
        let hilbert = hilbert_to(&CdgaComplex(&model), bound)?;
        let trusted = kt.trusted && hilbert.trusted_upto >= bound as i64;
        Ok(DerivedTensor { model, hilbert, resolved: label, renames, trusted })
    };
    match side {
        ResolveSide::Left => attempt(left, right, "left (tate)", "left (semifree)"),
        ResolveSide::Right => attempt(right, left, "right (tate)", "right (semifree)"),
        ResolveSide::Auto => {
            if is_semifree_inclusion(left) {
                return attempt(left, right, "left (tate)", "left (semifree)");
            }
            if is_semifree_inclusion(right) {
                return attempt(right, left, "right (tate)", "right (semifree)");
            }
            // fall back: resolve the side with fewer target generators
            let lg = left.target.shape().even.len() + left.target.shape().odd_len();
            let rg = right.target.shape().even.len() + right.target.shape().odd_len();
            if rg < lg {
                attempt(right, left, "right (tate)", "right (semifree)")
            } else {
                attempt(left, right, "left (tate)", "left (semifree)")
            }
        }
    }
}

pub struct QuasiIsoReport {
    pub is_quasi_iso: bool,
    pub source_hilbert: HilbertFunction,
    pub target_hilbert: HilbertFunction,
}

/// Is the chain map a quasi-isomorphism in every trusted slot up to `bound`?
/// Uses induced-map rank checks for weight-homogeneous complexes; for mixed
/// steps the verdict degrades to Hilbert-function agreement.
pub fn quasi_iso_check(f: &CDGAMap, bound: u32) -> Result<QuasiIsoReport> {
    let mut cap = bound;
    for _ in 0..3 {
        let s = Slab::build(&CdgaComplex(&f.source), cap)?;
        let t = Slab::build(&CdgaComplex(&f.target), cap)?;
        let need = s.max_step.max(t.max_step);
        if cap as i64 - need as i64 >= bound as i64 {
            let m = SlabMap::build(&s, &t, |key| {
                let img = f.apply(&key_element(f.source.shape(), key))?;
                Ok(img
                    .terms()
                    .map(|((mo, ma), c)| {
                        ((mo.clone(), *ma), f.target.shape().term_weight(mo, *ma), c.clone())
                    })
                    .collect())
            })?;
            let verdict = induces_iso(&s, &t, &m, bound)?;
            return Ok(QuasiIsoReport {
                is_quasi_iso: verdict,
                source_hilbert: s.hilbert(),
                target_hilbert: t.hilbert(),
            });
        }
        cap = bound + need;
    }
    Err(LgError::Grading("could not stabilize the trusted window".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::element::GradedElement;
    use crate::ring::parse_poly;

    fn poly_cdga(vars: &[&str]) -> SemifreeCDGA {
        SemifreeCDGA::polynomial(&VarTable::new(vars.to_vec()).unwrap())
    }

    #[test]
    fn resolve_momentum_projection() {
        // B = K[y, p_y] -> C = K[y] (p_y -> 0): one odd generator with d = p_y
        let b = poly_cdga(&["y", "p_y"]);
        let c = poly_cdga(&["y"]);
        let images: BTreeMap<String, GradedElement> = [
            ("y".to_string(), GradedElement::even_var(c.shape(), 0)),
            ("p_y".to_string(), GradedElement::zero(c.shape())),
        ]
        .into_iter()
        .collect();
        let f = CDGAMap::from_images(&b, &c, &images).unwrap();
        let kt = koszul_tate_resolve(&f, 5).unwrap();
        assert_eq!(kt.adjoined.len(), 1);
        assert!(kt.trusted);
        let h = hilbert_to(&CdgaComplex(&kt.algebra), 5).unwrap();
        assert_eq!(h.even, vec![1, 1, 1, 1, 1, 1]); // K[y]
        assert!(h.odd_vanishes(5));
    }

    #[test]
    fn resolve_diagonal() {
        // B = K[x, x2] -> K[x] (both -> x): adjoin a single odd eta with
        // d(eta) = x - x2 (up to sign/basis choice)
        let b = poly_cdga(&["x", "x2"]);
        let c = poly_cdga(&["x"]);
        let x = GradedElement::even_var(c.shape(), 0);
        let images: BTreeMap<String, GradedElement> = [
            ("x".to_string(), x.clone()),
            ("x2".to_string(), x),
        ]
        .into_iter()
        .collect();
        let f = CDGAMap::from_images(&b, &c, &images).unwrap();
        let kt = koszul_tate_resolve(&f, 4).unwrap();
        assert_eq!(kt.adjoined.len(), 1);
        let h = hilbert_to(&CdgaComplex(&kt.algebra), 4).unwrap();
        assert_eq!(h.even, vec![1, 1, 1, 1, 1]);
        assert!(h.odd_vanishes(4));
    }

    #[test]
    fn identity_map_adjoins_nothing() {
        let b = poly_cdga(&["x"]);
        let f = CDGAMap::identity(&b);
        let kt = koszul_tate_resolve(&f, 4).unwrap();
        assert!(kt.adjoined.is_empty());
    }

    #[test]
    fn hochschild_of_polynomial_line() {
        // K[x] tensor^L_{K[x1] tensor K[x2]} K[x]: one even generator x and
        // one odd partner, zero differential.
        let b = poly_cdga(&["x1", "x2"]);
        let c = poly_cdga(&["x"]);
        let x = GradedElement::even_var(c.shape(), 0);
        let images: BTreeMap<String, GradedElement> =
            [("x1".to_string(), x.clone()), ("x2".to_string(), x)].into_iter().collect();
        let f = CDGAMap::from_images(&b, &c, &images).unwrap();
        let dt = derived_tensor(&f, &f, 5, ResolveSide::Left).unwrap();
        // HKR: K[x; theta], d = 0
        assert_eq!(dt.hilbert.even, vec![1, 1, 1, 1, 1, 1]);
        assert_eq!(dt.hilbert.odd, vec![0, 1, 1, 1, 1, 1]);
        // swap sides: same Hilbert function
        let dt2 = derived_tensor(&f, &f, 5, ResolveSide::Right).unwrap();
        assert!(dt.hilbert.agrees_with(&dt2.hilbert, 5));
    }

    #[test]
    fn tor_of_residue_field() {
        // K tensor^L_{K[a]} K: a is a regular element, so the Koszul
        // resolution K[a; eta] suffices and Tor is the exterior algebra on
        // one odd class of weight 1.
        let b = poly_cdga(&["a"]);
        let c = poly_cdga(&[]);
        let images: BTreeMap<String, GradedElement> =
            [("a".to_string(), GradedElement::zero(c.shape()))].into_iter().collect();
        let f = CDGAMap::from_images(&b, &c, &images).unwrap();
        let dt = derived_tensor(&f, &f, 4, ResolveSide::Left).unwrap();
        assert_eq!(dt.hilbert.even, vec![1, 0, 0, 0, 0]);
        assert_eq!(dt.hilbert.odd, vec![0, 1, 0, 0, 0]);
    }

    #[test]
    fn unit_of_tensor() {
        // A tensor^L_B B = A when B -> A is arbitrary and B -> B identity
        let b = poly_cdga(&["u"]);
        let a = poly_cdga(&["x"]);
        let images: BTreeMap<String, GradedElement> = [(
            "u".to_string(),
            {
                let x = parse_poly(a.even_table(), "x^2").unwrap();
                GradedElement::from_poly(a.shape(), &x).unwrap()
            },
        )]
        .into_iter()
        .collect();
        // weight-shifting structure map: the resolved side must be the
        // identity B -> B, which is semifree, so this still works
        let id = CDGAMap::identity(&b);
        let f = CDGAMap::from_images(&b, &a, &images).unwrap();
        let dt = derived_tensor(&id, &f, 4, ResolveSide::Left).unwrap();
        let ha = hilbert_to(&CdgaComplex(&a), 4).unwrap();
        assert!(dt.hilbert.agrees_with(&ha, 4));
    }

    #[test]
    fn quasi_iso_examples() {
        // identity: iso
        let a = poly_cdga(&["x"]);
        let f = CDGAMap::identity(&a);
        assert!(quasi_iso_check(&f, 4).unwrap().is_quasi_iso);
        // K[a; alpha] (d alpha = 2a) -> K: iso
        let t = VarTable::new(["a"]).unwrap();
        let shape = AlgebraShape::new(t, vec![("alpha".into(), 1)]).unwrap();
        let da = GradedElement::even_var(&shape, 0).scale(&BigRational::from_integer(2.into()));
        let r = SemifreeCDGA::new(shape.clone(), vec![GradedElement::zero(&shape)], vec![da])
            .unwrap();
        let k = poly_cdga(&[]);
        let images: BTreeMap<String, GradedElement> = [
            ("a".to_string(), GradedElement::zero(k.shape())),
            ("alpha".to_string(), GradedElement::zero(k.shape())),
        ]
        .into_iter()
        .collect();
        let f = CDGAMap::from_images(&r, &k, &images).unwrap();
        assert!(quasi_iso_check(&f, 4).unwrap().is_quasi_iso);
        // K[a] (d = 0) -> K: not an iso (fails at weight 1)
        let b = poly_cdga(&["a"]);
        let images: BTreeMap<String, GradedElement> =
            [("a".to_string(), GradedElement::zero(k.shape()))].into_iter().collect();
        let f = CDGAMap::from_images(&b, &k, &images).unwrap();
        assert!(!quasi_iso_check(&f, 4).unwrap().is_quasi_iso);
    }
}
