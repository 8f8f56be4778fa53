//! Property-based invariants for the polynomial and graded kernels.

use std::sync::Arc;

use num::{BigInt, BigRational};
use proptest::prelude::*;

use lgcat::graded::{AlgebraShape, GradedElement, SemifreeCDGA};
use lgcat::ring::{groebner_basis, normal_form, MonomialOrder, Polynomial, VarTable};

fn table() -> Arc<VarTable> {
    VarTable::new(["x", "y", "z"]).unwrap()
}

prop_compose! {
    fn arb_poly()(terms in prop::collection::vec(
        ((0u16..4, 0u16..4, 0u16..3), -4i64..=4),
        0..5,
    )) -> Polynomial {
        let t = table();
        let mut p = Polynomial::zero(&t);
        for ((a, b, c), coef) in terms {
            p.add_term(vec![a, b, c], BigRational::from(BigInt::from(coef)));
        }
        p
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        // associativity and distributivity, exactly
        let ab_c = &(&a * &b) * &c;
        let a_bc = &a * &(&b * &c);
        prop_assert_eq!(&ab_c, &a_bc);
        let left = &a * &(&b + &c);
        let right = &(&a * &b) + &(&a * &c);
        prop_assert_eq!(&left, &right);
        let add_assoc_l = &(&a + &b) + &c;
        let add_assoc_r = &a + &(&b + &c);
        prop_assert_eq!(&add_assoc_l, &add_assoc_r);
    }

    #[test]
    fn derivative_is_a_derivation(a in arb_poly(), b in arb_poly()) {
        for v in 0..3 {
            let lhs = (&a * &b).derivative(v);
            let rhs = &(&a.derivative(v) * &b) + &(&a * &b.derivative(v));
            prop_assert_eq!(&lhs, &rhs, "variable {}", v);
        }
    }

    #[test]
    fn normal_form_is_multiplicative_modulo_ideal(
        a in arb_poly(),
        b in arb_poly(),
        g1 in arb_poly(),
        g2 in arb_poly(),
    ) {
        let gb = groebner_basis(&[g1, g2], MonomialOrder::GrevLex).unwrap();
        if gb.is_unit_ideal() {
            return Ok(());
        }
        let direct = normal_form(&(&a * &b), &gb).unwrap();
        let na = normal_form(&a, &gb).unwrap();
        let nb = normal_form(&b, &gb).unwrap();
        let reduced = normal_form(&(&na * &nb), &gb).unwrap();
        prop_assert_eq!(&direct, &reduced);
    }

    #[test]
    fn difference_quotient_limits_to_derivative(v in arb_poly()) {
        // adjoin a', use x as the difference variable
        let big = VarTable::new(["x", "y", "z", "x'"]).unwrap();
        let v = v.transfer(&big).unwrap();
        let q = lgcat::ring::difference_quotient(&v, &[0], &[3], 0).unwrap();
        let mut back = std::collections::BTreeMap::new();
        back.insert(3usize, Polynomial::var(&big, 0));
        let limit = q.substitute(&back).unwrap();
        prop_assert_eq!(&limit, &v.derivative(0));
    }
}

prop_compose! {
    fn arb_graded()(terms in prop::collection::vec(
        ((0u16..3, 0u16..3), 0u64..8, -3i64..=3),
        0..4,
    )) -> GradedElement {
        let t = VarTable::new(["x", "y"]).unwrap();
        let shape = AlgebraShape::new(
            t,
            vec![("t1".into(), 1), ("t2".into(), 1), ("t3".into(), 1)],
        )
        .unwrap();
        let mut e = GradedElement::zero(&shape);
        for ((a, b), mask, coef) in terms {
            e.add_term(vec![a, b], mask, BigRational::from(BigInt::from(coef)));
        }
        e
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn graded_multiplication_is_associative(a in arb_graded(), b in arb_graded(), c in arb_graded()) {
        let l = &(&a * &b) * &c;
        let r = &a * &(&b * &c);
        prop_assert_eq!(&l, &r);
    }

    #[test]
    fn graded_commutativity(a in arb_graded(), b in arb_graded()) {
        // split into homogeneous parts and check the Koszul rule on each
        use lgcat::graded::Parity;
        let part = |e: &GradedElement, p: Parity| -> GradedElement {
            GradedElement::from_terms(
                e.shape(),
                e.terms().filter(|((_, mask), _)| Parity::of_mask(*mask) == p)
                    .map(|((m, mask), c)| (m.clone(), *mask, c.clone())),
            )
        };
        for pa in [Parity::Even, Parity::Odd] {
            for pb in [Parity::Even, Parity::Odd] {
                let xa = part(&a, pa);
                let xb = part(&b, pb);
                let ab = &xa * &xb;
                let ba = &xb * &xa;
                let expected = if pa == Parity::Odd && pb == Parity::Odd {
                    -&ba
                } else {
                    ba
                };
                prop_assert_eq!(&ab, &expected);
            }
        }
    }

    #[test]
    fn leibniz_differential_squares_to_zero(e in arb_graded()) {
        // random square-zero differential: odd generators map to even
        // polynomials, even generators are closed
        let shape = e.shape().clone();
        let d_even = vec![GradedElement::zero(&shape); 2];
        let poly_img = |k: i64| {
            let mut p = GradedElement::zero(&shape);
            p.add_term(vec![1, 0], 0, BigRational::from(BigInt::from(k)));
            p
        };
        let d_odd = vec![poly_img(2), poly_img(-1), poly_img(3)];
        let a = SemifreeCDGA::new(shape, d_even, d_odd).unwrap();
        let de = a.differential(&e);
        let dde = a.differential(&de);
        prop_assert!(dde.is_zero(), "d^2(e) = {}", dde);
    }
}
