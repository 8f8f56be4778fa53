use super::*;
use crate::graded::cohomology_hilbert;
use crate::ring::VarTable;

fn poly(vars: &[&str]) -> SemifreeCDGA {
    SemifreeCDGA::polynomial(&VarTable::new(vars.to_vec()).unwrap())
}

#[test]
fn hochschild_of_base_field() {
    let k = poly(&[]);
    let hc = hochschild(&k, 4).unwrap();
    assert_eq!(hc.provenance, HochschildProvenance::Hkr);
    assert!(hc.partners.is_empty());
    assert_eq!(hc.hilbert.even[0], 1);
    // twice: still the base field
    let hc2 = hochschild(&hc.model, 4).unwrap();
    assert_eq!(hc2.hilbert.even[0], 1);
    assert!(hc2.hilbert.even[1..].iter().all(|&d| d == 0));
}

#[test]
fn hochschild_of_line_both_paths_agree() {
    let a = poly(&["x"]);
    let hkr = hochschild(&a, 4).unwrap();
    assert_eq!(hkr.provenance, HochschildProvenance::Hkr);
    assert_eq!(hkr.model.shape().even.len(), 1);
    assert_eq!(hkr.model.shape().odd_len(), 1);
    assert!(hkr.model.has_zero_differential());
    // the Tate path gives the same Hilbert function
    let (_, mult) = multiplication_map(&a).unwrap();
    let tate = derived_tensor(&mult, &mult, 4, ResolveSide::Left).unwrap();
    assert!(hkr.hilbert.agrees_with(&tate.hilbert, 4), "{} vs {}", hkr.hilbert, tate.hilbert);
}

#[test]
fn hochschild_with_odd_generator() {
    // A = K[x] (x) Lambda(theta): partners are one odd and one even
    let t = VarTable::new(["x"]).unwrap();
    let a = SemifreeCDGA::free(&t, vec![("theta".into(), 1)]).unwrap();
    let hc = hochschild(&a, 4).unwrap();
    assert_eq!(hc.model.shape().even.len(), 2);
    assert_eq!(hc.model.shape().odd_len(), 2);
    // cross-check against the Tate path at low weight
    let (_, mult) = multiplication_map(&a).unwrap();
    let tate = derived_tensor(&mult, &mult, 3, ResolveSide::Left).unwrap();
    assert!(hc.hilbert.agrees_with(&tate.hilbert, 3), "{} vs {}", hc.hilbert, tate.hilbert);
}

#[test]
fn circle_values() {
    // A = K: the point
    let k = poly(&[]);
    let (v, _) = z_circle(&k, 4).unwrap();
    assert_eq!(v.hilbert.even[0], 1);
    assert!(v.hilbert.even[1..].iter().all(|&d| d == 0));
    assert!(v.hilbert.odd_vanishes(4));

    // A = K[x]: 1 + 1 generators
    let a = poly(&["x"]);
    let (v, _) = z_circle(&a, 4).unwrap();
    assert_eq!(v.census, Some((1, 1)));

    // A = K[x, p]: 2 + 2 generators
    let a = poly(&["x", "p"]);
    let (v, _) = z_circle(&a, 4).unwrap();
    assert_eq!(v.census, Some((2, 2)));
}

#[test]
fn sphere_census_is_even_only() {
    // A (x)^L_{HC(A)} A: killing the odd HKR partner adjoins an even
    // polynomial generator, so the model has 2t even and no odd generators.
    // (The honest census differs from the claim of record; the acceptance
    // suite records the discrepancy.)
    let k = poly(&[]);
    let v = z_sphere(&k, 4).unwrap();
    assert_eq!(v.census, Some((0, 0)));
    assert!(v.zero_differential);

    let a = poly(&["x"]);
    let v = z_sphere(&a, 4).unwrap();
    assert_eq!(v.census, Some((2, 0)));
    assert!(v.zero_differential);
    // Hilbert of K[x, u]: (1, 2, 3, ...)
    assert_eq!(v.hilbert.even, vec![1, 2, 3, 4, 5]);
    assert!(v.hilbert.odd_vanishes(4));

    let a = poly(&["x", "y"]);
    let v = z_sphere(&a, 3).unwrap();
    assert_eq!(v.census, Some((4, 0)));
}

#[test]
fn genus_values_over_the_base_field() {
    let k = poly(&[]);
    for g in 0..=2 {
        let v = z_genus(&k, g, 3, false).unwrap();
        assert_eq!(v.hilbert.even[0], 1, "genus {g}");
        assert!(v.hilbert.even[1..].iter().all(|&d| d == 0), "genus {g}");
        assert!(v.hilbert.odd_vanishes(3), "genus {g}");
    }
}

#[test]
fn genus_zero_is_the_sphere() {
    let a = poly(&["x"]);
    let sphere = z_sphere(&a, 4).unwrap();
    let g0 = z_genus(&a, 0, 4, false).unwrap();
    assert!(sphere.hilbert.agrees_with(&g0.hilbert, 4), "{} vs {}", sphere.hilbert, g0.hilbert);
}

#[test]
fn genus_one_assembly_order_invariance() {
    let a = poly(&["x"]);
    let ltr = z_genus(&a, 1, 4, false).unwrap();
    let rtl = z_genus(&a, 1, 4, true).unwrap();
    assert!(ltr.hilbert.agrees_with(&rtl.hilbert, 4), "{} vs {}", ltr.hilbert, rtl.hilbert);
}

#[test]
fn three_dualizability_verdicts() {
    assert!(three_dual_check(&poly(&[]), 4).unwrap());
    assert!(!three_dual_check(&poly(&["x"]), 4).unwrap());
    assert!(!three_dual_check(&poly(&["x", "y"]), 3).unwrap());
    assert!(!three_dual_check(&poly(&["x", "y", "z"]), 2).unwrap());
}

#[test]
fn circle_span_is_between_points() {
    let a = poly(&["x"]);
    let (_, span) = z_circle(&a, 3).unwrap();
    assert_eq!(span.left.algebra.even_table().len(), 0);
    assert_eq!(span.right.algebra.even_table().len(), 0);
}

#[test]
fn hilbert_of_circle_matches_model_cohomology() {
    let a = poly(&["x", "p"]);
    let (v, _) = z_circle(&a, 3).unwrap();
    let hc = hochschild(&a, 3).unwrap();
    let direct = cohomology_hilbert(&hc.model, 3).unwrap();
    assert!(v.hilbert.agrees_with(&direct, 3));
}
