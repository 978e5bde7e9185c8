use archi_euler::*;
use proptest::prelude::*;

#[test]
fn named_identities_hold() {
    let c = check_factorization("sym2_x_sym2").unwrap();
    assert!(c.equal && c.euler_factors_agree);
    assert_eq!(c.left.len(), 9);
    assert_eq!(c.left.multiplicity((0, 0)), 3);
    let t = check_factorization("triple_product").unwrap();
    assert!(t.equal && t.euler_factors_agree);
    assert_eq!(t.left.len(), 8);
}

#[test]
fn factor_sizes() {
    let (_, f) = Identity::Sym2XSym2.sides();
    assert_eq!(f.iter().map(|(_, s)| s.len()).collect::<Vec<_>>(), vec![5, 3, 1]);
    let (_, f) = Identity::TripleProduct.sides();
    assert_eq!(f.iter().map(|(_, s)| s.len()).collect::<Vec<_>>(), vec![6, 2]);
}

#[test]
fn dropping_a_factor_is_detected() {
    let (left, factors) = Identity::Sym2XSym2.sides();
    let kept: Vec<_> = factors.iter().filter(|(n, _)| *n != "zeta").map(|(_, s)| s.clone()).collect();
    let c = FactorizationCheck::compare(Identity::Sym2XSym2, left, &kept);
    assert!(!c.equal && !c.euler_factors_agree);
    assert_eq!(c.diff_size(), 1);
    assert_eq!(c.only_left, SatakeMultiset::trivial());

    // removing one element of Π⊗ω from the triple product
    let (left, mut factors) = Identity::TripleProduct.sides();
    factors[1].1 = SatakeMultiset::new([(2, 1)]);
    let c = FactorizationCheck::compare(Identity::TripleProduct, left, &factors.into_iter().map(|(_, s)| s).collect::<Vec<_>>());
    assert!(!c.equal);
    assert_eq!(c.diff_size(), 1);
    assert_eq!(c.only_left, SatakeMultiset::new([(1, 2)]));
}

#[test]
fn unknown_identity_is_an_error() {
    assert_eq!(check_factorization("sym3"), Err(EulerError::UnknownIdentity("sym3".into())));
}

#[test]
fn undualized_square_needs_the_twist() {
    // Sym²×Sym² without the contragredient matches only after ω⁻²
    let std = SatakeMultiset::standard();
    let sym2 = std.sym_power(2);
    let (_, factors) = Identity::Sym2XSym2.sides();
    let right = factors.iter().fold(SatakeMultiset::default(), |a, (_, f)| a.union(f));
    assert_ne!(sym2.product(&sym2), right);
    assert_eq!(sym2.product(&sym2).twist(-2), right);
}

#[test]
fn archimedean_degree_count() {
    for ell in [3, 5, 7] {
        let d = archimedean_degrees(ell);
        assert_eq!(d.left, 9);
        assert!(d.balanced());
    }
}

fn multiset() -> impl Strategy<Value = SatakeMultiset> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 0..7).prop_map(SatakeMultiset::new)
}

proptest! {
    #[test]
    fn equality_iff_symmetric_functions_agree(a in multiset(), b in multiset()) {
        prop_assert_eq!(a == b, a.elementary_symmetric() == b.elementary_symmetric());
        // a permuted copy is always equal
        let mut rev = a.elements();
        rev.reverse();
        prop_assert_eq!(SatakeMultiset::new(rev).elementary_symmetric(), a.elementary_symmetric());
    }

    #[test]
    fn dual_and_twist_invert(a in multiset(), k in -4i64..=4) {
        prop_assert_eq!(a.dual().dual(), a.clone());
        prop_assert_eq!(a.twist(k).twist(-k), a.clone());
        prop_assert_eq!(a.dual().twist(k), a.twist(-k).dual());
    }

    #[test]
    fn product_and_sym_sizes(a in multiset(), b in multiset(), k in 0u32..4) {
        prop_assert_eq!(a.product(&b).len(), a.len() * b.len());
        let n = a.len() as u64;
        // C(n+k−1, k) multisets of size k
        let expect = (0..k as u64).fold(1u64, |acc, i| acc * (n + i) / (i + 1));
        prop_assert_eq!(a.sym_power(k).len() as u64, expect);
    }
}

#[test]
fn checks_serialize_to_json() {
    let check = check_factorization("sym2_x_sym2").unwrap();
    let v = serde_json::to_value(&check).unwrap();
    assert_eq!(v["identity"], "sym2_x_sym2");
    assert_eq!(v["equal"], true);
    assert_eq!(v["left"].as_array().unwrap().len(), 9);
    let m = SatakeMultiset::new([(0, 1), (1, 0), (1, 0)]);
    assert_eq!(serde_json::to_string(&m).unwrap(), "[[0,1],[1,0],[1,0]]");
}
