use super::*;
use crate::mf::koszul_mf;
use crate::ring::parse_poly;

#[test]
fn composition_formula_concatenates_middle() {
    // (emptyset, xy): (x) -> (y) composed with (emptyset, yz): (y) -> (z)
    // gives ((y), xy + yz): (x) -> (z)
    let f = MFOneMorphism::parse(MFObject::new(["x"]), MFObject::new(["y"]), vec![], "x*y")
        .unwrap();
    let g = MFOneMorphism::parse(MFObject::new(["y"]), MFObject::new(["z"]), vec![], "y*z")
        .unwrap();
    let mut fresh = Freshener::new();
    let fg = h_compose_1(&f, &g, &mut fresh).unwrap();
    assert_eq!(fg.source, MFObject::new(["x"]));
    assert_eq!(fg.target, MFObject::new(["z"]));
    assert_eq!(fg.extra, vec!["y".to_string()]);
    assert_eq!(fg.potential, parse_poly(&fg.table, "x*y + y*z").unwrap());
}

#[test]
fn self_composition_freshens() {
    // ((a), a^2): () -> () composed with itself
    let f = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["a".into()], "a^2")
        .unwrap();
    let mut fresh = Freshener::new();
    let ff = h_compose_1(&f, &f, &mut fresh).unwrap();
    assert_eq!(ff.extra.len(), 2);
    assert_eq!(ff.extra[0], "a");
    assert_ne!(ff.extra[1], "a");
    assert!(ff.extra[1].starts_with("a_g"));
    let renamed = &ff.extra[1];
    let expect = parse_poly(&ff.table, &format!("a^2 + {renamed}^2")).unwrap();
    assert_eq!(ff.potential, expect);
}

#[test]
fn associativity_on_the_nose() {
    let f = MFOneMorphism::parse(MFObject::new(["x"]), MFObject::new(["y"]), vec!["a".into()], "x*a + y")
        .unwrap();
    let g = MFOneMorphism::parse(MFObject::new(["y"]), MFObject::new(["z"]), vec!["b".into()], "y*b")
        .unwrap();
    let h = MFOneMorphism::parse(MFObject::new(["z"]), MFObject::new(["w"]), vec![], "z + w")
        .unwrap();
    let mut fr1 = Freshener::new();
    let left = h_compose_1(&h_compose_1(&f, &g, &mut fr1).unwrap(), &h, &mut fr1).unwrap();
    let mut fr2 = Freshener::new();
    let right = h_compose_1(&f, &h_compose_1(&g, &h, &mut fr2).unwrap(), &mut fr2).unwrap();
    assert_eq!(left.extra, right.extra);
    assert_eq!(left.potential, right.potential.transfer(&left.table).unwrap());
}

#[test]
fn identity_morphism_shape() {
    let mut fresh = Freshener::new();
    let x = MFObject::new(["x"]);
    let id = identity_1(&x, &mut fresh).unwrap();
    assert_eq!(id.extra.len(), 1);
    assert_eq!(id.target.len(), 1);
    // potential a (xt - x)
    let a = &id.extra[0];
    let xt = &id.target.vars[0];
    let expect = parse_poly(&id.table, &format!("{a}*({xt} - x)")).unwrap();
    assert_eq!(id.potential, expect);

    // empty object: identity is ((), 0)
    let mut fresh = Freshener::new();
    let id0 = identity_1(&MFObject::empty(), &mut fresh).unwrap();
    assert!(id0.potential.is_zero());
    assert!(id0.extra.is_empty());

    // two coordinates: two extras, sum of two terms
    let mut fresh = Freshener::new();
    let id2 = identity_1(&MFObject::new(["x1", "x2"]), &mut fresh).unwrap();
    assert_eq!(id2.extra.len(), 2);
    assert_eq!(id2.potential.num_terms(), 4);
}

#[test]
fn identity_2_is_unit_factorization() {
    let f = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["a".into()], "a^2")
        .unwrap();
    let id2 = identity_2(&f).unwrap();
    assert_eq!(id2.mf.ranks(), (1, 1));
    assert_eq!(id2.target.extra, vec!["a'".to_string()]);
    // target potential is a'^2
    assert_eq!(
        id2.target.potential,
        parse_poly(&id2.target.table, "a'^2").unwrap()
    );
}

#[test]
fn vertical_composition_telescopes() {
    // M : (a, a^2) => (b, b^2), N : (b, b^2) => (c, c^2), both Koszul.
    let one_a = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["a".into()], "a^2").unwrap();
    let one_b = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["b".into()], "b^2").unwrap();
    let one_c = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["c".into()], "c^2").unwrap();
    let tab_ab = VarTable::new(["a", "b"]).unwrap();
    let m = MFTwoMorphism::new(
        one_a.clone(),
        one_b.clone(),
        koszul_mf(&[(
            parse_poly(&tab_ab, "b - a").unwrap(),
            parse_poly(&tab_ab, "b + a").unwrap(),
        )])
        .unwrap(),
    )
    .unwrap();
    let tab_bc = VarTable::new(["b", "c"]).unwrap();
    let n = MFTwoMorphism::new(
        one_b,
        one_c,
        koszul_mf(&[(
            parse_poly(&tab_bc, "c - b").unwrap(),
            parse_poly(&tab_bc, "c + b").unwrap(),
        )])
        .unwrap(),
    )
    .unwrap();
    let nm = v_compose_2(&m, &n).unwrap();
    assert_eq!(nm.mf.ranks(), (2, 2));
    let expect = parse_poly(nm.mf.table(), "c^2 - a^2").unwrap();
    assert_eq!(nm.mf.potential(), &expect);
}

#[test]
fn vertical_composition_rejects_middle_mismatch() {
    let one_a = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["a".into()], "a^2").unwrap();
    let one_b = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["b".into()], "b^2").unwrap();
    let one_b3 = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["b".into()], "b^3").unwrap();
    let tab_ab = VarTable::new(["a", "b"]).unwrap();
    let m = MFTwoMorphism::new(
        one_a.clone(),
        one_b.clone(),
        koszul_mf(&[(
            parse_poly(&tab_ab, "b - a").unwrap(),
            parse_poly(&tab_ab, "b + a").unwrap(),
        )])
        .unwrap(),
    )
    .unwrap();
    let tab_bc = VarTable::new(["b", "c"]).unwrap();
    let bad = MFTwoMorphism::new(
        one_b3.clone(),
        {
            let mut t = one_b3.clone();
            t.extra = vec!["c".into()];
            MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["c".into()], "c^3").unwrap()
        },
        koszul_mf(&[(
            parse_poly(&tab_bc, "c - b").unwrap(),
            parse_poly(&tab_bc, "c^2 + c*b + b^2").unwrap(),
        )])
        .unwrap(),
    )
    .unwrap();
    assert!(v_compose_2(&m, &bad).is_err());
}

#[test]
fn horizontal_composition_ranks_multiply() {
    // two rank (1|1) representatives over x -> y and y -> z data
    let f1 = MFOneMorphism::parse(MFObject::new(["x"]), MFObject::new(["y"]), vec![], "0").unwrap();
    let f2 = MFOneMorphism::parse(MFObject::new(["x"]), MFObject::new(["y"]), vec![], "x*y").unwrap();
    let t1 = VarTable::new(["x", "y"]).unwrap();
    let m = MFTwoMorphism::new(
        f1,
        f2,
        koszul_mf(&[(parse_poly(&t1, "x").unwrap(), parse_poly(&t1, "y").unwrap())]).unwrap(),
    )
    .unwrap();
    let g1 = MFOneMorphism::parse(MFObject::new(["y"]), MFObject::new(["z"]), vec![], "0").unwrap();
    let g2 = MFOneMorphism::parse(MFObject::new(["y"]), MFObject::new(["z"]), vec![], "y*z").unwrap();
    let t2 = VarTable::new(["y", "z"]).unwrap();
    let n = MFTwoMorphism::new(
        g1,
        g2,
        koszul_mf(&[(parse_poly(&t2, "y").unwrap(), parse_poly(&t2, "z").unwrap())]).unwrap(),
    )
    .unwrap();
    let mn = h_compose_2(&m, &n).unwrap();
    assert_eq!(mn.mf.ranks(), (2, 2));
    let expect = parse_poly(mn.mf.table(), "x*y + y*z").unwrap();
    assert_eq!(mn.mf.potential(), &expect);
}

#[test]
fn unit_law_composite_carries_a_middle_derivative_class() {
    // End cohomology of the composite representative I (x) M over the full
    // carrier ring differs from End(M) by exactly the class of
    // lambda_m = d/dm (d): an odd weight-0 cocycle, closed because the
    // telescoped potential no longer involves the middle variable m.
    let one_a = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["a".into()], "a^2").unwrap();
    let id2 = identity_2(&one_a).unwrap();
    // M : (a', a'^2) => (b, b^2) over the primed copy
    let one_ap = id2.target.clone();
    let one_b = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["b".into()], "b^2").unwrap();
    let tab = VarTable::new(["a'", "b"]).unwrap();
    let m = MFTwoMorphism::new(
        one_ap,
        one_b,
        koszul_mf(&[(
            parse_poly(&tab, "b - a'").unwrap(),
            parse_poly(&tab, "b + a'").unwrap(),
        )])
        .unwrap(),
    )
    .unwrap();
    let composite = v_compose_2(&id2, &m).unwrap();
    let h_m = end_hilbert(&m, 4).unwrap();
    let h_c = end_hilbert(&composite, 4).unwrap();
    // even parts agree, the odd part of the composite holds the ghost class
    assert_eq!(h_m.even, h_c.even);
    assert_eq!(h_m.odd, vec![0, 0, 0, 0, 0]);
    assert_eq!(h_c.odd, vec![1, 0, 0, 0, 0]);
}

#[test]
fn middle_derivative_generates_the_ghost() {
    let one_a = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["a".into()], "a^2").unwrap();
    let id2 = identity_2(&one_a).unwrap();
    let one_ap = id2.target.clone();
    let one_b = MFOneMorphism::parse(MFObject::empty(), MFObject::empty(), vec!["b".into()], "b^2").unwrap();
    let tab = VarTable::new(["a'", "b"]).unwrap();
    let m = MFTwoMorphism::new(
        one_ap,
        one_b,
        koszul_mf(&[(
            parse_poly(&tab, "b - a'").unwrap(),
            parse_poly(&tab, "b + a'").unwrap(),
        )])
        .unwrap(),
    )
    .unwrap();
    let composite = v_compose_2(&id2, &m).unwrap();
    let middle = composite.mf.table().require("a'").unwrap();
    assert!(middle_derivative_is_cocycle(&composite.mf, middle).unwrap());
    // the boundary variables are not cocycle directions
    let a = composite.mf.table().require("a").unwrap();
    assert!(!middle_derivative_is_cocycle(&composite.mf, a).is_ok());
}
