use std::collections::BTreeMap;

use cellring::repring::{character, tensor, tensor_by_characters, IrrClass, VirtualRep, Weight};
use proptest::prelude::*;

fn irr() -> impl Strategy<Value = IrrClass> {
    (0u32..5, 0u32..5, any::<bool>()).prop_map(|(a, b, e)| IrrClass::new(a, b, e))
}

fn virt() -> impl Strategy<Value = VirtualRep> {
    prop::collection::vec((irr(), -3i64..4), 0..4).prop_map(|ts| {
        let mut v = VirtualRep::zero();
        for (c, m) in ts {
            v.add_term(c, m);
        }
        v
    })
}

/// Weyl dimension formula for `Sp₄`, written out.
fn dim_oracle(a: u32, b: u32) -> i64 {
    let (a, b) = (a as i64, b as i64);
    (a + 1) * (b + 1) * (a + b + 2) * (a + 2 * b + 3) / 6
}

fn convolve(x: &BTreeMap<Weight, u64>, y: &BTreeMap<Weight, u64>) -> BTreeMap<Weight, i64> {
    let mut out = BTreeMap::new();
    for (u, m) in x {
        for (w, n) in y {
            *out.entry((u.0 + w.0, u.1 + w.1)).or_insert(0) += (m * n) as i64;
        }
    }
    out
}

fn character_of(v: &VirtualRep) -> BTreeMap<Weight, i64> {
    let mut out: BTreeMap<Weight, i64> = BTreeMap::new();
    for (c, m) in v.terms() {
        for (w, n) in character(c) {
            *out.entry(w).or_insert(0) += m * n as i64;
        }
    }
    out.retain(|_, m| *m != 0);
    out
}

#[test]
fn small_dimensions() {
    let dims: Vec<u64> = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)].iter().map(|&(a, b)| IrrClass::new(a, b, false).dim()).collect();
    assert_eq!(dims, vec![1, 4, 5, 10, 16, 14]);
}

#[test]
fn square_of_standard_representation() {
    let v = IrrClass::new(1, 0, false);
    let mut want = VirtualRep::zero();
    want.add_term(IrrClass::new(2, 0, false), 1);
    want.add_term(IrrClass::new(0, 1, false), 1);
    want.add_term(IrrClass::new(0, 0, false), 1);
    assert_eq!(tensor(&v, &v), want);
}

#[test]
fn sign_squares_to_trivial() {
    let e = IrrClass::new(0, 0, true);
    assert_eq!(tensor(&e, &e), VirtualRep::irr(IrrClass::new(0, 0, false)));
}

#[test]
fn parse_and_print() {
    for c in [IrrClass::new(0, 0, false), IrrClass::new(3, 1, true)] {
        assert_eq!(c.to_string().parse::<IrrClass>().unwrap(), c);
    }
}

proptest! {
    #[test]
    fn klimyk_matches_characters(x in irr(), y in irr()) {
        prop_assert_eq!(tensor(&x, &y), tensor_by_characters(&x, &y));
    }

    #[test]
    fn tensor_character_is_convolution(x in irr(), y in irr()) {
        let mut want = convolve(&character(&x), &character(&y));
        want.retain(|_, m| *m != 0);
        prop_assert_eq!(character_of(&tensor(&x, &y)), want);
    }

    #[test]
    fn dimension_formula_and_multiplicativity(x in irr(), y in irr()) {
        let (a, b) = x.highest_weight();
        prop_assert_eq!(x.dim() as i64, dim_oracle(a as u32, b as u32));
        prop_assert_eq!(character(&x).values().sum::<u64>(), x.dim());
        prop_assert_eq!(tensor(&x, &y).dim(), (x.dim() * y.dim()) as i64);
    }

    #[test]
    fn ring_laws(a in virt(), b in virt(), c in virt()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        let one = VirtualRep::irr(IrrClass::new(0, 0, false));
        prop_assert_eq!(a.mul(&one), a.clone());
        prop_assert_eq!(a.mul(&b).dim(), a.dim() * b.dim());
    }

    #[test]
    fn duality_is_trivial(a in virt()) {
        prop_assert_eq!(a.dual(), a.clone());
    }

    #[test]
    fn trivial_appears_once_in_self_square(x in irr()) {
        prop_assert_eq!(tensor(&x, &x).multiplicity(&IrrClass::new(0, 0, false)), 1);
    }
}
