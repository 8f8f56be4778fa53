//! Two-dimensional oriented TFT values for an affine object: Hochschild
//! complexes, the circle, the sphere, genus-g surfaces, and the
//! impossibility check for a third dimension.

use std::collections::BTreeMap;

use crate::crw::{compose_span, diagonal_span, transpose_span, AffineSymplecticStack, LagSpan};
use crate::error::{LgError, Result};
use crate::graded::{
    derived_tensor, tensor_cdga, CDGAMap, GradedElement, Parity, ResolveSide, SemifreeCDGA,
};
use crate::hilbert::HilbertFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HochschildProvenance {
    /// Zero-differential input: adjoin one opposite-parity partner of equal
    /// weight per generator, differential zero.
    Hkr,
    /// The Tate path: resolve the multiplication map and tensor.
    Tate,
}

#[derive(Debug, Clone)]
pub struct HochschildModel {
    pub model: SemifreeCDGA,
    /// Names of the adjoined partner/resolution generators (everything that
    /// the fold map kills).
    pub partners: Vec<String>,
    pub provenance: HochschildProvenance,
    pub hilbert: HilbertFunction,
}

impl HochschildModel {
    /// The fold map onto the original algebra: original generators map to
    /// themselves, partners to zero.
    pub fn fold(&self, a: &SemifreeCDGA) -> Result<CDGAMap> {
        let mut images: BTreeMap<String, GradedElement> = BTreeMap::new();
        for p in &self.partners {
            images.insert(p.clone(), GradedElement::zero(a.shape()));
        }
        CDGAMap::from_images(&self.model, a, &images)
    }

    /// The inclusion of the original algebra.
    pub fn include(&self, a: &SemifreeCDGA) -> Result<CDGAMap> {
        CDGAMap::from_images(a, &self.model, &BTreeMap::new())
    }
}

/// The multiplication map `A (x) A -> A` together with its source.
pub fn multiplication_map(a: &SemifreeCDGA) -> Result<(SemifreeCDGA, CDGAMap)> {
    let (ae, renames) = tensor_cdga(a, a)?;
    let rename: BTreeMap<String, String> = renames.into_iter().collect();
    let mut images: BTreeMap<String, GradedElement> = BTreeMap::new();
    for g in a.generators() {
        let orig = GradedElement::gen_named(a.shape(), &g.name)?;
        images.insert(g.name.clone(), orig.clone());
        if let Some(rn) = rename.get(&g.name) {
            images.insert(rn.clone(), orig);
        }
    }
    let mult = CDGAMap::from_images(&ae, a, &images)?;
    Ok((ae, mult))
}

/// The Hochschild complex `A (x)^L_{A (x) A} A`. Zero-differential algebras
/// take the shortcut model; otherwise the multiplication map is resolved.
pub fn hochschild(a: &SemifreeCDGA, bound: u32) -> Result<HochschildModel> {
    if a.has_zero_differential() {
        let shape = a.shape();
        let mut even: Vec<(String, u32)> = (0..shape.even.len())
            .map(|i| (shape.even.name(i).to_string(), shape.even.weight(i)))
            .collect();
        let mut odd: Vec<(String, u32)> = (0..shape.odd_len())
            .map(|i| (shape.odd_name(i).to_string(), shape.odd_weight(i)))
            .collect();
        let mut taken: Vec<String> = even.iter().map(|g| g.0.clone()).collect();
        taken.extend(odd.iter().map(|g| g.0.clone()));
        let mut partners = Vec::new();
        let mut fresh = |base: &str, taken: &mut Vec<String>| -> String {
            let cand = format!("{base}_h");
            if !taken.iter().any(|t| t == &cand) {
                taken.push(cand.clone());
                return cand;
            }
            let mut k = 2usize;
            loop {
                let cand = format!("{base}_h{k}");
                if !taken.iter().any(|t| t == &cand) {
                    taken.push(cand.clone());
                    return cand;
                }
                k += 1;
            }
        };
        // one opposite-parity partner of equal weight per generator
        for i in 0..shape.even.len() {
            let name = fresh(shape.even.name(i), &mut taken);
            partners.push(name.clone());
            odd.push((name, shape.even.weight(i)));
        }
        for i in 0..shape.odd_len() {
            let name = fresh(shape.odd_name(i), &mut taken);
            partners.push(name.clone());
            even.push((name, shape.odd_weight(i)));
        }
        let (names, weights): (Vec<String>, Vec<u32>) = even.into_iter().unzip();
        let table = crate::ring::VarTable::with_weights(names, weights)?;
        let new_shape = crate::graded::AlgebraShape::new(table, odd)?;
        let model = SemifreeCDGA::with_zero_differential(&new_shape);
        let hilbert = crate::graded::cohomology_hilbert(&model, bound)?;
        return Ok(HochschildModel {
            model,
            partners,
            provenance: HochschildProvenance::Hkr,
            hilbert,
        });
    }
    let (_ae, mult) = multiplication_map(a)?;
    let dt = derived_tensor(&mult, &mult, bound, ResolveSide::Left)?;
    // everything beyond A's own generators counts as a partner
    let own: Vec<String> = a.generators().into_iter().map(|g| g.name).collect();
    let partners: Vec<String> = dt
        .model
        .generators()
        .into_iter()
        .map(|g| g.name)
        .filter(|n| !own.contains(n))
        .collect();
    Ok(HochschildModel {
        model: dt.model,
        partners,
        provenance: HochschildProvenance::Tate,
        hilbert: dt.hilbert,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TFTKind {
    Span,
    Module,
}

#[derive(Debug, Clone)]
pub struct TFTValue {
    pub kind: TFTKind,
    pub hilbert: HilbertFunction,
    /// Even/odd generator counts of the resulting semifree model, when the
    /// value is presented by one.
    pub census: Option<(usize, usize)>,
    pub zero_differential: bool,
}

/// The circle: computed two ways, by composing the coevaluation span with
/// the evaluation span, and through the Hochschild model. Disagreement in a
/// trusted slot is a hard error.
pub fn z_circle(a: &SemifreeCDGA, bound: u32) -> Result<(TFTValue, LagSpan)> {
    // coev: * -> X (x) X^dual with apex A; ev is its transpose. As cospans
    // they share the middle object Spec(A (x) A).
    let (ae, mult) = multiplication_map(a)?;
    let point = AffineSymplecticStack::point();
    let xx = AffineSymplecticStack::new(ae.clone(), crate::crw::SymplecticForm::zero());
    let unit_leg = CDGAMap::from_images(&point.algebra, a, &BTreeMap::new())?;
    let coev = LagSpan::new(point.clone(), xx, a.clone(), unit_leg, mult)?;
    let ev = transpose_span(&coev);
    let composed = compose_span(&coev, &ev, bound)?;
    let h_span = composed.apex_hilbert(bound)?;

    let hc = hochschild(a, bound)?;
    if !h_span.agrees_with(&hc.hilbert, bound) {
        return Err(LgError::Internal(format!(
            "the two circle computations disagree: span {} vs hochschild {}",
            h_span, hc.hilbert
        )));
    }
    Ok((
        TFTValue {
            kind: TFTKind::Span,
            hilbert: h_span,
            census: Some(census_of(&hc.model)),
            zero_differential: hc.model.has_zero_differential(),
        },
        composed,
    ))
}

fn census_of(a: &SemifreeCDGA) -> (usize, usize) {
    (a.shape().even.len(), a.shape().odd_len())
}

/// The sphere: `A (x)^L_{HC(A)} A` through the fold maps, with a generator
/// census of the resulting semifree model.
pub fn z_sphere(a: &SemifreeCDGA, bound: u32) -> Result<TFTValue> {
    let hc = hochschild(a, bound)?;
    let fold = hc.fold(a)?;
    let dt = derived_tensor(&fold, &fold, bound, ResolveSide::Left)?;
    Ok(TFTValue {
        kind: TFTKind::Module,
        hilbert: dt.hilbert,
        census: Some(census_of(&dt.model)),
        zero_differential: dt.model.has_zero_differential(),
    })
}

/// Genus-g value, assembled as
/// `A (x)_H (A (x)_{A^e} HC(HC(A)) (x)_{A^e} A)^{(x)_H g} (x)_H A`
/// with H-module structures threaded through each stage. `reverse` switches
/// from left-to-right to right-to-left association (the in-engine oracle for
/// assembly-order independence).
pub fn z_genus(a: &SemifreeCDGA, genus: u32, bound: u32, reverse: bool) -> Result<TFTValue> {
    use crate::crw::derived_tensor_with_maps;

    let hc = hochschild(a, bound)?;
    let h = &hc.model;
    let fold_h = hc.fold(a)?;

    // the twice-punctured torus panel W = A (x)_{A^e} H^2 (x)_{A^e} A,
    // with every A^e-copy acting through the original generators
    let panel: Option<CDGAMap> = if genus > 0 {
        let h2 = hochschild(h, bound)?;
        let (ae, fold_ae) = multiplication_map(a)?;
        // A^e -> H^2: both copies act through A's generators by name
        // (positionally: the tensor lists A's generators, then the renamed
        // second copy)
        let into_h2 = {
            let mut even_images = Vec::new();
            for _copy in 0..2 {
                for i in 0..a.shape().even.len() {
                    let name = a.shape().even.name(i);
                    even_images.push(GradedElement::gen_named(h2.model.shape(), name)?);
                }
            }
            let mut odd_images = Vec::new();
            for _copy in 0..2 {
                for i in 0..a.shape().odd_len() {
                    let name = a.shape().odd_name(i);
                    odd_images.push(GradedElement::gen_named(h2.model.shape(), name)?);
                }
            }
            CDGAMap::new(ae.clone(), h2.model.clone(), even_images, odd_images)?
        };
        let w1 = derived_tensor(&fold_ae, &into_h2, bound, ResolveSide::Left)?;
        let into_w1 = {
            let mut even_images = Vec::new();
            for _copy in 0..2 {
                for i in 0..a.shape().even.len() {
                    let name = a.shape().even.name(i);
                    even_images.push(GradedElement::gen_named(w1.model.shape(), name)?);
                }
            }
            let mut odd_images = Vec::new();
            for _copy in 0..2 {
                for i in 0..a.shape().odd_len() {
                    let name = a.shape().odd_name(i);
                    odd_images.push(GradedElement::gen_named(w1.model.shape(), name)?);
                }
            }
            CDGAMap::new(ae.clone(), w1.model.clone(), even_images, odd_images)?
        };
        let w = derived_tensor(&into_w1, &fold_ae, bound, ResolveSide::Right)?;
        // H acts on the panel through its generators (all survive by name)
        Some(CDGAMap::from_images(h, &w.model, &BTreeMap::new())?)
    } else {
        None
    };

    // factor list A, W, .., W, A; the accumulator keeps its H-structure
    let mut factors: Vec<CDGAMap> = Vec::new();
    factors.push(fold_h.clone());
    for _ in 0..genus {
        factors.push(panel.clone().expect("panel exists for positive genus"));
    }
    factors.push(fold_h.clone());
    if reverse {
        factors.reverse();
    }

    let mut iter = factors.into_iter();
    let mut acc_struct = iter.next().expect("at least two factors");
    let mut hilbert: Option<HilbertFunction> = None;
    for factor in iter {
        let t = if reverse {
            derived_tensor_with_maps(&factor, &acc_struct, bound)?
        } else {
            derived_tensor_with_maps(&acc_struct, &factor, bound)?
        };
        // thread the H-structure through whichever inclusion survived
        let (own, other) = if reverse {
            (&t.into_left, &t.into_right)
        } else {
            (&t.into_right, &t.into_left)
        };
        let new_struct = if let Some(m) = own {
            factor.compose(m)?
        } else if let Some(m) = other {
            acc_struct.compose(m)?
        } else {
            return Err(LgError::Internal(
                "both structure maps were resolved away in the genus assembly".into(),
            ));
        };
        hilbert = Some(crate::graded::cohomology_hilbert(&new_struct.target, bound)?);
        acc_struct = new_struct;
    }
    let model = acc_struct.target.clone();
    let hilbert = match hilbert {
        Some(h) => h,
        None => crate::graded::cohomology_hilbert(&model, bound)?,
    };
    Ok(TFTValue {
        kind: TFTKind::Module,
        census: Some(census_of(&model)),
        zero_differential: model.has_zero_differential(),
        hilbert,
    })
}

/// Three-dimensional extendability: the sphere value must be a finite
/// dimensional graded vector space, which happens exactly when no even
/// generator of positive weight survives in its model.
pub fn three_dual_check(a: &SemifreeCDGA, bound: u32) -> Result<bool> {
    let sphere = z_sphere(a, bound)?;
    let (even, _odd) = sphere.census.unwrap_or((0, 0));
    Ok(even == 0)
}

#[cfg(test)]
mod tests;
