//! The extended affine Weyl group of type B̃₃ attached to Sp₆.
//!
//! Elements are affine maps `x ↦ u(x) + λ` of ℝ³ with `u` a signed
//! permutation and `λ ∈ ℤ³`. The Coxeter part `W′` consists of the maps whose
//! translation has even coordinate sum.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Number of simple reflections `r₀..r₃`.
pub const RANK: usize = 4;

/// Positive roots of B₃ in the orthogonal basis; their integer level sets are
/// exactly the reflecting hyperplanes of `W′`.
const POS_ROOTS: [[i32; 3]; 9] = [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [1, -1, 0],
    [1, 0, -1],
    [0, 1, -1],
    [1, 1, 0],
    [1, 0, 1],
    [0, 1, 1],
];

/// A point of the fundamental alcove, scaled by 12.
const ALCOVE_POINT: [i32; 3] = [5, 3, 1];

/// An element of `W = Ω ⋉ W′`.
///
/// `img[i] = ±(j+1)` encodes `u(eᵢ) = ±e_j`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    img: [i8; 3],
    trans: [i32; 3],
}

impl WeylElement {
    pub const IDENTITY: WeylElement = WeylElement { img: [1, 2, 3], trans: [0, 0, 0] };

    /// Builds an element from its signed-permutation images and translation.
    ///
    /// Returns `None` if `img` is not a signed permutation.
    pub fn from_parts(img: [i8; 3], trans: [i32; 3]) -> Option<WeylElement> {
        let mut seen = [false; 3];
        for &s in &img {
            let j = s.unsigned_abs() as usize;
            if j == 0 || j > 3 || seen[j - 1] {
                return None;
            }
            seen[j - 1] = true;
        }
        Some(WeylElement { img, trans })
    }

    pub fn translation(v: [i32; 3]) -> WeylElement {
        WeylElement { img: [1, 2, 3], trans: v }
    }

    pub fn finite_part(&self) -> [i8; 3] {
        self.img
    }

    pub fn translation_part(&self) -> [i32; 3] {
        self.trans
    }

    /// The simple reflection `rᵢ`, `i ∈ {0,1,2,3}`.
    pub fn generator(i: usize) -> WeylElement {
        GENS[i]
    }

    /// Applies the linear part to an integer vector.
    pub fn apply_linear(&self, x: [i32; 3]) -> [i32; 3] {
        let mut y = [0; 3];
        for (i, &s) in self.img.iter().enumerate() {
            let j = s.unsigned_abs() as usize - 1;
            y[j] += if s > 0 { x[i] } else { -x[i] };
        }
        y
    }

    /// Applies the affine map to an integer vector.
    pub fn apply(&self, x: [i32; 3]) -> [i32; 3] {
        let y = self.apply_linear(x);
        [y[0] + self.trans[0], y[1] + self.trans[1], y[2] + self.trans[2]]
    }

    pub fn mul(&self, b: &WeylElement) -> WeylElement {
        let mut img = [0i8; 3];
        for i in 0..3 {
            let sb = b.img[i];
            let j = sb.unsigned_abs() as usize - 1;
            let sa = self.img[j];
            img[i] = if sb > 0 { sa } else { -sa };
        }
        let t = self.apply_linear(b.trans);
        WeylElement {
            img,
            trans: [t[0] + self.trans[0], t[1] + self.trans[1], t[2] + self.trans[2]],
        }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut img = [0i8; 3];
        for i in 0..3 {
            let s = self.img[i];
            let j = s.unsigned_abs() as usize - 1;
            img[j] = if s > 0 { (i + 1) as i8 } else { -((i + 1) as i8) };
        }
        let inv = WeylElement { img, trans: [0; 3] };
        let t = inv.apply_linear(self.trans);
        WeylElement { img, trans: [-t[0], -t[1], -t[2]] }
    }

    /// `rᵢ·w`.
    pub fn lmul_gen(&self, i: usize) -> WeylElement {
        GENS[i].mul(self)
    }

    /// `w·rᵢ`.
    pub fn rmul_gen(&self, i: usize) -> WeylElement {
        self.mul(&GENS[i])
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Membership in the Coxeter part `W′`.
    pub fn in_coxeter_part(&self) -> bool {
        (self.trans[0] + self.trans[1] + self.trans[2]).rem_euclid(2) == 0
    }

    /// Number of affine hyperplanes separating the fundamental alcove from its image.
    pub fn length(&self) -> usize {
        let p = self.apply_linear(ALCOVE_POINT);
        let q = [p[0] + 12 * self.trans[0], p[1] + 12 * self.trans[1], p[2] + 12 * self.trans[2]];
        POS_ROOTS
            .iter()
            .map(|a| {
                let c = a[0] * q[0] + a[1] * q[1] + a[2] * q[2];
                c.div_euclid(12).unsigned_abs() as usize
            })
            .sum()
    }

    pub fn left_descents(&self) -> GenSet {
        let l = self.length();
        let mut s = GenSet::EMPTY;
        for i in 0..RANK {
            if self.lmul_gen(i).length() < l {
                s.insert(i);
            }
        }
        s
    }

    pub fn right_descents(&self) -> GenSet {
        let l = self.length();
        let mut s = GenSet::EMPTY;
        for i in 0..RANK {
            if self.rmul_gen(i).length() < l {
                s.insert(i);
            }
        }
        s
    }

    pub fn is_left_descent(&self, i: usize) -> bool {
        self.lmul_gen(i).length() < self.length()
    }

    pub fn is_right_descent(&self, i: usize) -> bool {
        self.rmul_gen(i).length() < self.length()
    }

    /// Splits `w = τ^ε·w′` with `w′ ∈ W′`.
    pub fn split_tau(&self) -> (bool, WeylElement) {
        if self.in_coxeter_part() {
            (false, *self)
        } else {
            (true, tau().mul(self))
        }
    }

    /// ShortLex-least reduced word, prefixed by `t` outside `W′`.
    pub fn reduced_word(&self) -> GeneratorWord {
        let (twisted, mut w) = self.split_tau();
        let mut letters = Vec::with_capacity(w.length() + 1);
        if twisted {
            letters.push(Letter::Tau);
        }
        while !w.is_identity() {
            let s = w.left_descents().first().expect("non-identity element has a left descent");
            letters.push(Letter::R(s as u8));
            w = w.lmul_gen(s);
        }
        GeneratorWord(letters)
    }

    /// Parses and evaluates a word over `{0,1,2,3,t}`.
    pub fn from_word(s: &str) -> Result<WeylElement, Error> {
        Ok(s.parse::<GeneratorWord>()?.evaluate())
    }

    /// `τ w τ`, the diagram automorphism swapping `r₀` and `r₁`.
    pub fn tau_conjugate(&self) -> WeylElement {
        let t = tau();
        t.mul(self).mul(&t)
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.reduced_word())
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.reduced_word().to_string();
        if w.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{w}")
        }
    }
}

impl Serialize for WeylElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.reduced_word().to_string())
    }
}

impl<'de> Deserialize<'de> for WeylElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        WeylElement::from_word(&s).map_err(serde::de::Error::custom)
    }
}

const GENS: [WeylElement; RANK] = [
    // x ↦ x − (x₁+x₂−1)(e₁+e₂)
    WeylElement { img: [-2, -1, 3], trans: [1, 1, 0] },
    WeylElement { img: [2, 1, 3], trans: [0, 0, 0] },
    WeylElement { img: [1, 3, 2], trans: [0, 0, 0] },
    WeylElement { img: [1, 2, -3], trans: [0, 0, 0] },
];

/// All 48 signed permutations.
pub fn finite_weyl_group() -> Vec<WeylElement> {
    let perms = [[1, 2, 3], [1, 3, 2], [2, 1, 3], [2, 3, 1], [3, 1, 2], [3, 2, 1]];
    let mut out = Vec::with_capacity(48);
    for p in perms {
        for signs in 0..8u8 {
            let mut img = [0i8; 3];
            for i in 0..3 {
                img[i] = if signs >> i & 1 == 1 { -p[i] } else { p[i] };
            }
            out.push(WeylElement { img, trans: [0; 3] });
        }
    }
    out
}

/// The unique length-zero element outside `W′`, located by search over
/// `t_ω·u` with `u ∈ W₀` and `ω` a small odd-sum weight.
pub fn tau() -> WeylElement {
    static TAU: OnceLock<WeylElement> = OnceLock::new();
    *TAU.get_or_init(|| {
        let w0 = finite_weyl_group();
        let mut found = Vec::new();
        for a in -1..=1 {
            for b in -1..=1 {
                for c in -1..=1 {
                    if (a + b + c) % 2 == 0 {
                        continue;
                    }
                    let t = WeylElement::translation([a, b, c]);
                    for u in &w0 {
                        let cand = t.mul(u);
                        if cand.length() == 0 && !found.contains(&cand) {
                            found.push(cand);
                        }
                    }
                }
            }
        }
        assert_eq!(found.len(), 1, "length-zero twist is not unique: {found:?}");
        found[0]
    })
}

/// A set of simple reflections as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GenSet(pub u8);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn from_slice(gens: &[usize]) -> GenSet {
        let mut s = GenSet::EMPTY;
        for &g in gens {
            s.insert(g);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_superset(&self, other: GenSet) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..RANK).filter(move |&i| self.contains(i))
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn intersection(&self, other: GenSet) -> GenSet {
        GenSet(self.0 & other.0)
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "r{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    R(u8),
    Tau,
}

/// A word over `{0,1,2,3,t}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GeneratorWord(pub Vec<Letter>);

impl GeneratorWord {
    pub fn evaluate(&self) -> WeylElement {
        let t = tau();
        self.0.iter().fold(WeylElement::IDENTITY, |acc, l| match l {
            Letter::R(i) => acc.rmul_gen(*i as usize),
            Letter::Tau => acc.mul(&t),
        })
    }

    /// Number of simple-reflection letters.
    pub fn len(&self) -> usize {
        self.0.iter().filter(|l| matches!(l, Letter::R(_))).count()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.len() == self.evaluate().length()
    }
}

impl FromStr for GeneratorWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        s.chars()
            .map(|c| match c {
                '0'..='3' => Ok(Letter::R(c as u8 - b'0')),
                't' => Ok(Letter::Tau),
                _ => Err(Error::BadWord(s.to_string())),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(GeneratorWord)
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            match l {
                Letter::R(i) => write!(f, "{i}")?,
                Letter::Tau => write!(f, "t")?,
            }
        }
        Ok(())
    }
}

/// Bruhat order; elements of different `Ω`-cosets are incomparable.
pub fn bruhat_leq(y: &WeylElement, w: &WeylElement) -> bool {
    let (ty, mut y) = y.split_tau();
    let (tw, mut w) = w.split_tau();
    if ty != tw {
        return false;
    }
    loop {
        let (ly, lw) = (y.length(), w.length());
        if ly > lw {
            return false;
        }
        if ly == lw {
            return y == w;
        }
        let s = w.left_descents().first().expect("w ≠ e");
        let sy = y.lmul_gen(s);
        if sy.length() < ly {
            y = sy;
        }
        w = w.lmul_gen(s);
    }
}

/// `{y : y ≤ w}`.
pub fn lower_interval(w: &WeylElement) -> HashSet<WeylElement> {
    let (twisted, w) = w.split_tau();
    let mut word = Vec::new();
    let mut v = w;
    while !v.is_identity() {
        let s = v.left_descents().first().expect("v ≠ e");
        word.push(s);
        v = v.lmul_gen(s);
    }
    let mut set: HashSet<WeylElement> = HashSet::from([WeylElement::IDENTITY]);
    for &s in word.iter().rev() {
        let extra: Vec<WeylElement> = set.iter().map(|y| y.lmul_gen(s)).collect();
        set.extend(extra);
    }
    if twisted {
        let t = tau();
        set.into_iter().map(|y| t.mul(&y)).collect()
    } else {
        set
    }
}

/// Every element of length at most `max_len`, in both cosets, ordered by
/// length and then by the derived order.
pub fn elements_up_to_length(max_len: usize) -> Vec<WeylElement> {
    let mut out = vec![WeylElement::IDENTITY, tau()];
    out.sort();
    let mut layer = out.clone();
    for n in 1..=max_len {
        let mut next: HashSet<WeylElement> = HashSet::new();
        for w in &layer {
            for s in 0..RANK {
                let ws = w.rmul_gen(s);
                if ws.length() == n {
                    next.insert(ws);
                }
            }
        }
        let mut next: Vec<_> = next.into_iter().collect();
        next.sort();
        out.extend_from_slice(&next);
        layer = next;
    }
    out
}

/// Word length by breadth-first search over the Cayley graph of `W′`.
/// Independent of the alcove formula; used to validate it.
pub fn bfs_lengths(max_len: usize) -> std::collections::HashMap<WeylElement, usize> {
    let mut dist = std::collections::HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(WeylElement::IDENTITY, 0);
    queue.push_back(WeylElement::IDENTITY);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        if d == max_len {
            continue;
        }
        for s in 0..RANK {
            let ws = w.rmul_gen(s);
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(ws) {
                e.insert(d + 1);
                queue.push_back(ws);
            }
        }
    }
    dist
}

/// Longest element of the finite parabolic subgroup `W_J`, or `None` if it is infinite.
pub fn longest_parabolic(j: GenSet) -> Option<WeylElement> {
    if j.len() == RANK {
        return None;
    }
    let mut w = WeylElement::IDENTITY;
    loop {
        match j.iter().find(|&s| !w.is_right_descent(s)) {
            Some(s) => w = w.rmul_gen(s),
            None => return Some(w),
        }
        if w.length() > 64 {
            return None;
        }
    }
}

/// Elements of the finite parabolic subgroup `W_J`.
pub fn parabolic_elements(j: GenSet) -> Vec<WeylElement> {
    let mut seen: HashSet<WeylElement> = HashSet::from([WeylElement::IDENTITY]);
    let mut order = vec![WeylElement::IDENTITY];
    let mut k = 0;
    while k < order.len() {
        let w = order[k];
        k += 1;
        for s in j.iter() {
            let ws = w.rmul_gen(s);
            if seen.insert(ws) {
                order.push(ws);
            }
        }
        assert!(order.len() <= 1152, "parabolic subgroup is infinite");
    }
    order.sort_by_key(|w| (w.length(), *w));
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(s: &str) -> WeylElement {
        WeylElement::from_word(s).unwrap()
    }

    #[test]
    fn generator_lengths() {
        for i in 0..RANK {
            assert_eq!(WeylElement::generator(i).length(), 1);
            assert!(WeylElement::generator(i).mul(&WeylElement::generator(i)).is_identity());
        }
        assert_eq!(tau().length(), 0);
        assert!(!tau().in_coxeter_part());
    }

    #[test]
    fn tau_matches_reflection_picture() {
        assert_eq!(tau().apply([0, 0, 0]), [1, 0, 0]);
        assert_eq!(tau().apply([1, 2, 3]), [0, 2, 3]);
    }

    #[test]
    fn listed_lengths() {
        assert_eq!(ev("012012").length(), 6);
        assert_eq!(ev("0120123213202321").length(), 16);
        assert_eq!(ev("012012320").right_descents(), GenSet::from_slice(&[0, 2]));
        assert_eq!(ev("012012").left_descents(), GenSet::from_slice(&[0, 1, 2]));
        assert!(WeylElement::IDENTITY.left_descents().is_empty());
    }

    #[test]
    fn reduced_words() {
        assert_eq!(WeylElement::IDENTITY.reduced_word().to_string(), "");
        assert_eq!(ev("10").reduced_word().to_string(), "01");
        assert_eq!(ev("210210").reduced_word().len(), 6);
        assert_eq!(tau().reduced_word().to_string(), "t");
    }

    #[test]
    fn intervals() {
        assert_eq!(lower_interval(&WeylElement::IDENTITY).len(), 1);
        assert_eq!(lower_interval(&ev("2")).len(), 2);
        assert_eq!(lower_interval(&ev("012012")).len(), 24);
        assert!(!bruhat_leq(&ev("3"), &ev("012012")));
        assert!(bruhat_leq(&ev("0120"), &ev("012012")));
    }

    #[test]
    fn small_layers() {
        assert_eq!(elements_up_to_length(0).len(), 2);
        assert_eq!(elements_up_to_length(1).len(), 10);
    }

    #[test]
    fn inverse_roundtrip() {
        let w = ev("t0123210321");
        assert!(w.mul(&w.inverse()).is_identity());
        assert_eq!(w.inverse().length(), w.length());
    }
}
