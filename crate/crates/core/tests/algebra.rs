use std::collections::BTreeMap;

use g2_core::exactfield::{FieldElement, Rational};
use g2_core::fixtures;
use g2_core::liealg::*;
use g2_core::rootsys::{generate_root_system, CartanMatrix, Root, RootSystem};
use g2_core::Error;
use proptest::prelude::*;

fn label(s: &str) -> GeneratorLabel {
    s.parse().unwrap()
}

fn element(alg: &LieAlgebra) -> impl Strategy<Value = Element> {
    let basis = alg.basis().to_vec();
    prop::collection::vec((prop::sample::select(basis), -6i64..=6, 1i64..=4), 0..5)
        .prop_map(|terms| Element::from_terms(terms.into_iter().map(|(l, n, d)| (l, FieldElement::frac(n, d)))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_bilinear_and_alternating(
        (x, y, z) in {
            let t = fixtures::table2().unwrap();
            (element(&t), element(&t), element(&t))
        },
        n in -5i64..=5,
    ) {
        let t = fixtures::table2().unwrap();
        let s = FieldElement::from_int(n);
        let lhs = t.bracket(&(x.scale(&s) + y.clone()), &z).unwrap();
        let rhs = t.bracket(&x, &z).unwrap().scale(&s) + t.bracket(&y, &z).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(t.bracket(&x, &x).unwrap().is_zero());
        prop_assert_eq!(t.bracket(&x, &y).unwrap(), -t.bracket(&y, &x).unwrap());
    }

    #[test]
    fn jacobi_on_random_elements(
        (x, y, z) in {
            let t = fixtures::table1().unwrap();
            (element(&t), element(&t), element(&t))
        },
    ) {
        let t = fixtures::table1().unwrap();
        let b = |a: &Element, c: &Element| t.bracket(a, c).unwrap();
        let sum = b(&x, &b(&y, &z)) + b(&y, &b(&z, &x)) + b(&z, &b(&x, &y));
        prop_assert!(sum.is_zero());
    }
}

#[test]
fn json_round_trip() {
    for alg in [fixtures::table1().unwrap(), fixtures::table2().unwrap()] {
        let back = LieAlgebra::from_json(RootSystem::g2(), &alg.to_json()).unwrap();
        assert_eq!(back, alg);
    }
}

#[test]
fn corrupted_entry_breaks_jacobi() {
    let t1 = fixtures::table1().unwrap();
    let (x1, x2, x12) = (label("E[1,0]"), label("E[0,1]"), label("E[1,1]"));
    assert_eq!(*t1.bracket_basis(x1, x2).unwrap(), Element::basis(x12));
    let bad = t1.with_entry(x1, x2, Element::term(x12, FieldElement::from_int(2))).unwrap();
    let rep = check_jacobi(&bad).unwrap();
    assert!(!rep.all_pass());
    assert!(check_grading(&bad).all_pass());
    assert!(check_antisymmetry(&bad).unwrap().all_pass());
}

#[test]
fn incomplete_and_unknown_entries_are_rejected() {
    let t = fixtures::table2().unwrap();
    let mut doc = t.to_doc();
    doc.brackets.pop();
    assert!(matches!(LieAlgebra::from_doc(RootSystem::g2(), &doc), Err(Error::IncompleteTable(..))));
    assert!("Z[1,0]".parse::<GeneratorLabel>().is_err());
    assert!(matches!(t.structure_constant(Root::new(1, 0), Root::new(-1, 0)), Err(Error::CartanPair(..))));
}

#[test]
fn labels_accept_both_spellings() {
    assert_eq!(label("X[1,2]"), label("E[1,2]"));
    assert_eq!(label("Y[1,2]"), label("F[1,2]"));
    assert_eq!(label("F[1,2]").weight(), Root::new(-1, -2));
    assert_eq!(label("E[1,2]").partner(), label("F[1,2]"));
}

#[test]
fn serre_relations_on_both_tables() {
    for alg in [fixtures::table1().unwrap(), fixtures::table2().unwrap()] {
        let rep = check_serre(&alg).unwrap();
        assert_eq!(rep.checks.len(), 4);
        assert!(rep.all_pass(), "{}", rep.summary());
    }
}

#[test]
fn chain_product_identity_on_both_orientations() {
    let rs = RootSystem::g2();
    let mut chains = rs.enumerate_chains();
    chains.extend(rs.enumerate_chains().iter().map(|c| rs.alpha_chain(c.alpha, c.beta).unwrap()));
    let t2 = fixtures::table2().unwrap();
    assert!(audit_identity_211(&t2, &chains).unwrap().all_pass());
}

#[test]
fn killing_form_of_the_integer_table() {
    let t1 = fixtures::table1().unwrap();
    assert!(check_killing(&t1).unwrap().all_pass());
    // no single constant relates K(H_α, H_β) to ⟨β, H_α⟩ ...
    assert_eq!(global_killing_constant(&t1).unwrap(), None);
    // ... but for each fixed β the ratio is constant across α
    let mut per_beta: BTreeMap<Root, Vec<FieldElement>> = BTreeMap::new();
    for (alpha, beta, k, pairing) in cartan_killing_pairs(&t1).unwrap() {
        if pairing.is_zero() {
            assert!(k.is_zero(), "K(H_{alpha}, H_{beta}) = {k} with zero pairing");
        } else {
            per_beta.entry(beta).or_default().push(k.checked_div(&pairing).unwrap());
        }
    }
    let mut constants = BTreeMap::new();
    for (beta, ratios) in &per_beta {
        assert!(ratios.windows(2).all(|w| w[0] == w[1]), "{beta}: {ratios:?}");
        constants.insert(beta.positive_part(), ratios[0].clone());
    }
    // inversely proportional to the length of β
    assert_eq!(constants[&Root::new(1, 0)], FieldElement::from_int(8));
    assert_eq!(constants[&Root::new(0, 1)], FieldElement::from(Rational::from(24)));
}

#[test]
fn other_rank_two_systems() {
    for (name, n) in [("a2", 3), ("b2", 4), ("a1a1", 2)] {
        let rs = generate_root_system(CartanMatrix::preset(name).unwrap()).unwrap();
        assert_eq!(rs.positive_roots().len(), n);
        assert_eq!(rs.roots().count(), 2 * n);
    }
    let affine = CartanMatrix::new([[2, -2], [-3, 2]]).unwrap();
    assert!(matches!(generate_root_system(affine), Err(Error::NotFiniteType(_))));
}
