use cellring::hecke::{bernstein_s1, c_basis, central_times_c, s1_weights, theta, theta_with, X1, X2, X3};
use cellring::weyl::elements_up_to_length;
use cellring::{Basis, Hecke, HeckeElement, KlTable, Laurent, WeylElement};
use proptest::prelude::*;
use std::sync::OnceLock;

fn table() -> &'static KlTable {
    static T: OnceLock<KlTable> = OnceLock::new();
    T.get_or_init(KlTable::new)
}

fn short_elements() -> &'static Vec<WeylElement> {
    static E: OnceLock<Vec<WeylElement>> = OnceLock::new();
    E.get_or_init(|| elements_up_to_length(5))
}

fn add(a: [i32; 3], b: [i32; 3]) -> [i32; 3] {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[test]
fn theta_does_not_depend_on_the_decomposition() {
    for lambda in [[1, 0, 0], [0, 1, -1], [-1, 1, 0], [1, -1, 1], [0, 0, -1]] {
        let a: Hecke = theta(lambda);
        for z in [X3, add(X2, X3), add(X1, X2)] {
            let shifted = add(lambda, z);
            if shifted[0] >= shifted[1] && shifted[1] >= shifted[2] && shifted[2] >= 0 {
                assert_eq!(format!("{:?}", theta_with::<i64>(lambda, z)), format!("{a:?}"), "{lambda:?} via {z:?}");
            }
        }
    }
}

#[test]
fn theta_is_multiplicative() {
    for (l, m) in [([1, 0, 0], [0, 1, -1]), ([-1, 1, 0], [1, 0, 0]), ([0, 0, 1], [0, 1, -1])] {
        let lhs = theta::<i64>(l).t_mul(&theta(m));
        let rhs = theta::<i64>(add(l, m));
        assert_eq!(format!("{lhs:?}"), format!("{rhs:?}"));
    }
}

#[test]
fn bernstein_product_agrees_with_t_basis() {
    let t = table();
    let w012 = WeylElement::from_word("012012").unwrap();
    let prod = bernstein_s1::<i64>().t_mul(&c_basis(t, &w012)).to_c_basis(t).into_terms();
    assert_eq!(prod, central_times_c(t, &s1_weights(), 0, &w012));
}

#[test]
fn hecke_json_schema() {
    let h = HeckeElement::term(Basis::T, WeylElement::generator(2), Laurent::from_terms([(-2, 1), (0, -1)]));
    let v = serde_json::to_value(&h).unwrap();
    assert_eq!(v["basis"], "T");
    assert_eq!(v["terms"][0]["word"], "2");
    assert_eq!(v["terms"][0]["poly"], serde_json::json!({"-2": 1, "0": -1}));
}

fn element() -> impl Strategy<Value = WeylElement> {
    (0..short_elements().len()).prop_map(|k| short_elements()[k])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn c_basis_products_are_associative(a in element(), b in element(), c in element()) {
        let t = table();
        let (ca, cb, cc): (Hecke, Hecke, Hecke) = (c_basis(t, &a), c_basis(t, &b), c_basis(t, &c));
        let lhs = ca.t_mul(&cb).t_mul(&cc);
        let rhs = ca.t_mul(&cb.t_mul(&cc));
        prop_assert_eq!(format!("{lhs:?}"), format!("{rhs:?}"));
        let in_c = lhs.to_c_basis(t);
        prop_assert_eq!(format!("{:?}", in_c.to_t_basis(t)), format!("{lhs:?}"));
    }
}
