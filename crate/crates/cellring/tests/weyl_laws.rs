use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use cellring::weyl::{bruhat_leq, elements_up_to_length, finite_weyl_group, lower_interval, tau, RANK};
use cellring::{GeneratorWord, WeylElement};
use proptest::prelude::*;

fn word() -> impl Strategy<Value = String> {
    prop::collection::vec(prop::sample::select(vec!['0', '1', '2', '3', 't']), 0..18).prop_map(|v| v.into_iter().collect())
}

fn element() -> impl Strategy<Value = WeylElement> {
    word().prop_map(|w| WeylElement::from_word(&w).unwrap())
}

/// Truncated power series of `∏ (1 − t^{dᵢ}) / ((1 − t)(1 − t^{dᵢ−1}))` for degrees 2, 4, 6.
fn bott_series(n: usize) -> Vec<i64> {
    let mut s = vec![0i64; n + 1];
    s[0] = 1;
    for d in [2usize, 4, 6] {
        // multiply by (1 + t + ... + t^{d-1}) then divide by (1 - t^{d-1})
        let mut m = vec![0i64; n + 1];
        for (k, c) in s.iter().enumerate() {
            for e in 0..d {
                if k + e <= n {
                    m[k + e] += c;
                }
            }
        }
        for k in (d - 1)..=n {
            m[k] += m[k - (d - 1)];
        }
        s = m;
    }
    s
}

#[test]
fn length_counts_match_bott_formula() {
    let n = 12;
    let mut counts = vec![0i64; n + 1];
    for w in elements_up_to_length(n).iter().filter(|w| w.in_coxeter_part()) {
        counts[w.length()] += 1;
    }
    assert_eq!(counts, bott_series(n));
    assert_eq!(counts.iter().sum::<i64>(), 1070);
}

#[test]
fn length_agrees_with_breadth_first_search() {
    let mut dist: HashMap<WeylElement, usize> = HashMap::from([(WeylElement::IDENTITY, 0)]);
    let mut queue = VecDeque::from([WeylElement::IDENTITY]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        assert_eq!(w.length(), d, "{w}");
        if d == 9 {
            continue;
        }
        for s in 0..RANK {
            let ws = w.mul(&WeylElement::generator(s));
            if let Entry::Vacant(e) = dist.entry(ws) {
                e.insert(d + 1);
                queue.push_back(ws);
            }
        }
    }
}

#[test]
fn finite_group_has_order_48() {
    let g = finite_weyl_group();
    assert_eq!(g.len(), 48);
    assert_eq!(g.iter().map(|w| w.length()).max(), Some(9));
}

#[test]
fn tau_relations() {
    let t = tau();
    assert_eq!(t.length(), 0);
    assert_eq!(t.mul(&t), WeylElement::IDENTITY);
    assert_eq!(t.mul(&WeylElement::generator(0)).mul(&t), WeylElement::generator(1));
    assert_eq!(WeylElement::from_word("01").unwrap(), WeylElement::from_word("10").unwrap());
    assert!(!t.in_coxeter_part());
}

#[test]
fn parse_rejects_bad_letters() {
    assert!(WeylElement::from_word("014").is_err());
    assert!(WeylElement::from_word("x").is_err());
    assert_eq!(WeylElement::from_word("").unwrap(), WeylElement::IDENTITY);
}

#[test]
fn interval_of_w012_has_24_elements() {
    let w = WeylElement::from_word("012012").unwrap();
    assert_eq!(w.length(), 6);
    let below = lower_interval(&w);
    assert_eq!(below.len(), 24);
    assert!(below.iter().all(|y| bruhat_leq(y, &w)));
}

proptest! {
    #[test]
    fn associativity(a in element(), b in element(), c in element()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn inverse_and_identity(a in element()) {
        prop_assert_eq!(a.mul(&a.inverse()), WeylElement::IDENTITY);
        prop_assert_eq!(a.inverse().mul(&a), WeylElement::IDENTITY);
        prop_assert_eq!(a.mul(&WeylElement::IDENTITY), a);
        prop_assert_eq!(a.inverse().length(), a.length());
    }

    #[test]
    fn word_evaluation_is_a_homomorphism(u in word(), v in word()) {
        let uv = format!("{u}{v}");
        let lhs = WeylElement::from_word(&uv).unwrap();
        prop_assert_eq!(lhs, WeylElement::from_word(&u).unwrap().mul(&WeylElement::from_word(&v).unwrap()));
    }

    #[test]
    fn length_is_subadditive_with_parity(a in element(), b in element()) {
        let l = a.mul(&b).length();
        prop_assert!(l <= a.length() + b.length());
        prop_assert_eq!(l % 2, (a.length() + b.length()) % 2);
    }

    #[test]
    fn descents_change_length_by_one(a in element()) {
        for s in 0..RANK {
            let (l, r) = (a.lmul_gen(s).length(), a.rmul_gen(s).length());
            prop_assert_eq!(a.is_left_descent(s), l < a.length());
            prop_assert_eq!(a.is_right_descent(s), r < a.length());
            prop_assert_eq!(l.abs_diff(a.length()), 1);
        }
    }

    #[test]
    fn reduced_word_round_trip(a in element()) {
        let w = a.reduced_word();
        prop_assert!(w.is_reduced());
        prop_assert_eq!(w.evaluate(), a);
        let again: GeneratorWord = w.to_string().parse().unwrap();
        prop_assert_eq!(again.evaluate(), a);
    }

    #[test]
    fn tau_conjugation_swaps_r0_r1(a in element()) {
        let swapped: String = a.reduced_word().to_string().chars().map(|c| match c { '0' => '1', '1' => '0', c => c }).collect();
        prop_assert_eq!(a.tau_conjugate(), WeylElement::from_word(&swapped).unwrap());
        prop_assert_eq!(a.tau_conjugate().length(), a.length());
    }

    #[test]
    fn bruhat_subword_property(a in element(), mask in any::<u32>()) {
        // any subword of a reduced word lies below the element
        let w = a.reduced_word().to_string();
        let sub: String = w.chars().enumerate().filter(|(i, c)| *c == 't' || mask >> (i % 32) & 1 == 1).map(|(_, c)| c).collect();
        let y = WeylElement::from_word(&sub).unwrap();
        prop_assert!(bruhat_leq(&y, &a));
        prop_assert!(a.length() > 9 || lower_interval(&a).contains(&y));
    }
}
