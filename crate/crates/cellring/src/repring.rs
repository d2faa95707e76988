//! The representation ring of `Sp₄ × ℤ/2`.
//!
//! Weights are written in the fundamental basis `aλ₁ + bλ₂`; internally they are
//! converted to orthogonal coordinates with `λ₁ = e₁`, `λ₂ = e₁ + e₂`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A weight `aλ₁ + bλ₂` (coefficients may be negative).
pub type Weight = (i32, i32);

/// Orthogonal coordinates of `aλ₁ + bλ₂`.
pub fn to_orth((a, b): Weight) -> (i32, i32) {
    (a + b, b)
}

pub fn from_orth((x, y): (i32, i32)) -> Weight {
    (x - y, y)
}

const RHO: (i32, i32) = (2, 1);

/// Positive roots `e₁−e₂, e₁+e₂, 2e₁, 2e₂` in orthogonal coordinates.
const POS_ROOTS: [(i32, i32); 4] = [(1, -1), (1, 1), (2, 0), (0, 2)];

fn dot(a: (i32, i32), b: (i32, i32)) -> i64 {
    a.0 as i64 * b.0 as i64 + a.1 as i64 * b.1 as i64
}

/// The eight signed permutations of two coordinates, with their signs.
fn weyl_group() -> [((i32, i32), i32, bool); 8] {
    // (sx, sy), determinant sign, swap
    let mut out = [((1, 1), 1, false); 8];
    let mut k = 0;
    for swap in [false, true] {
        for sx in [1, -1] {
            for sy in [1, -1] {
                let det = sx * sy * if swap { -1 } else { 1 };
                out[k] = ((sx, sy), det, swap);
                k += 1;
            }
        }
    }
    out
}

fn act(((sx, sy), _, swap): ((i32, i32), i32, bool), (x, y): (i32, i32)) -> (i32, i32) {
    let (a, b) = if swap { (y, x) } else { (x, y) };
    (sx * a, sy * b)
}

/// Dominant representative `x ≥ y ≥ 0` of an orthogonal weight, with the sign of a
/// Weyl element taking it there and whether the weight is fixed by a reflection.
fn dominant_orth((x, y): (i32, i32)) -> ((i32, i32), i32, bool) {
    let mut sign = 1;
    let (mut a, mut b) = (x, y);
    if a < 0 {
        a = -a;
        sign = -sign;
    }
    if b < 0 {
        b = -b;
        sign = -sign;
    }
    if a < b {
        std::mem::swap(&mut a, &mut b);
        sign = -sign;
    }
    let singular = x == 0 || y == 0 || x.abs() == y.abs();
    ((a, b), sign, singular)
}

/// The `W₁`-orbit of a weight, in the fundamental basis.
pub fn weight_orbit(w: Weight) -> Vec<Weight> {
    let o = to_orth(w);
    let mut out: Vec<Weight> = weyl_group().iter().map(|g| from_orth(act(*g, o))).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// An irreducible representation `V(aλ₁+bλ₂)` or `εV(aλ₁+bλ₂)`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IrrClass {
    pub a: u32,
    pub b: u32,
    pub eps: bool,
}

impl IrrClass {
    pub const TRIVIAL: IrrClass = IrrClass { a: 0, b: 0, eps: false };

    pub fn new(a: u32, b: u32, eps: bool) -> IrrClass {
        IrrClass { a, b, eps }
    }

    pub fn highest_weight(&self) -> Weight {
        (self.a as i32, self.b as i32)
    }

    /// Weyl dimension formula.
    pub fn dim(&self) -> u64 {
        let (p, q) = to_orth(self.highest_weight());
        let (p, q) = (p as i64 + RHO.0 as i64, q as i64 + RHO.1 as i64);
        ((p - q) * (p + q) * p * q / 6) as u64
    }

    /// Every representation of this group is self-dual.
    pub fn dual(&self) -> IrrClass {
        *self
    }

    pub fn tensor(&self, other: &IrrClass) -> VirtualRep {
        tensor(self, other)
    }
}

impl fmt::Display for IrrClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}V({},{})", if self.eps { "e" } else { "" }, self.a, self.b)
    }
}

impl FromStr for IrrClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<IrrClass, Error> {
        let bad = || Error::BadIrrClass(s.to_string());
        let (eps, rest) = match s.strip_prefix('e') {
            Some(r) => (true, r),
            None => (false, s),
        };
        let inner = rest.strip_prefix("V(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        Ok(IrrClass { a: a.trim().parse().map_err(|_| bad())?, b: b.trim().parse().map_err(|_| bad())?, eps })
    }
}

impl Serialize for IrrClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IrrClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<IrrClass, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A virtual representation: a finite integer combination of irreducibles.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct VirtualRep(BTreeMap<IrrClass, i64>);

impl VirtualRep {
    pub fn zero() -> VirtualRep {
        VirtualRep(BTreeMap::new())
    }

    pub fn irr(c: IrrClass) -> VirtualRep {
        VirtualRep(BTreeMap::from([(c, 1)]))
    }

    pub fn add_term(&mut self, c: IrrClass, m: i64) {
        if m == 0 {
            return;
        }
        let e = self.0.entry(c).or_insert(0);
        *e += m;
        if *e == 0 {
            self.0.remove(&c);
        }
    }

    pub fn add(&self, other: &VirtualRep) -> VirtualRep {
        let mut r = self.clone();
        for (c, m) in &other.0 {
            r.add_term(*c, *m);
        }
        r
    }

    pub fn terms(&self) -> &BTreeMap<IrrClass, i64> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiplicity(&self, c: &IrrClass) -> i64 {
        self.0.get(c).copied().unwrap_or(0)
    }

    /// The single irreducible if this is one with multiplicity 1.
    pub fn as_irreducible(&self) -> Option<IrrClass> {
        match self.0.iter().next() {
            Some((c, 1)) if self.0.len() == 1 => Some(*c),
            _ => None,
        }
    }

    pub fn dim(&self) -> i64 {
        self.0.iter().map(|(c, m)| c.dim() as i64 * m).sum()
    }

    pub fn mul(&self, other: &VirtualRep) -> VirtualRep {
        let mut out = VirtualRep::zero();
        for (a, m) in &self.0 {
            for (b, n) in &other.0 {
                for (c, k) in tensor(a, b).0 {
                    out.add_term(c, m * n * k);
                }
            }
        }
        out
    }

    pub fn dual(&self) -> VirtualRep {
        VirtualRep(self.0.iter().map(|(c, m)| (c.dual(), *m)).collect())
    }
}

impl fmt::Display for VirtualRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (c, m)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *m != 1 {
                write!(f, "{m}")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for VirtualRep {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

type MultTable = HashMap<(i32, i32), u64>;

fn freudenthal_cache() -> &'static Mutex<HashMap<(u32, u32), std::sync::Arc<MultTable>>> {
    static C: OnceLock<Mutex<HashMap<(u32, u32), std::sync::Arc<MultTable>>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// Dominant weight multiplicities of `V(aλ₁+bλ₂)`, keyed by orthogonal coordinates.
fn dominant_multiplicities(a: u32, b: u32) -> std::sync::Arc<MultTable> {
    if let Some(t) = freudenthal_cache().lock().unwrap().get(&(a, b)) {
        return t.clone();
    }
    let lam = to_orth((a as i32, b as i32));
    let lr = (lam.0 + RHO.0, lam.1 + RHO.1);
    let norm_lr = dot(lr, lr);
    // dominant weights below λ, nearest to λ first
    let mut doms: Vec<(i32, i32)> = Vec::new();
    for x in 0..=lam.0 {
        for y in 0..=x {
            let d = (lam.0 - x, lam.1 - y);
            // λ − μ must be a nonnegative integer combination of simple roots e₁−e₂, 2e₂
            let c1 = d.0;
            let rem = d.1 + c1;
            if c1 >= 0 && rem >= 0 && rem % 2 == 0 {
                doms.push((x, y));
            }
        }
    }
    doms.sort_by_key(|&(x, y)| height(lam, (x, y)));
    let mut mult: MultTable = HashMap::new();
    let lookup = |m: &MultTable, w: (i32, i32)| -> u64 {
        let (d, _, _) = dominant_orth(w);
        m.get(&d).copied().unwrap_or(0)
    };
    for mu in doms {
        if mu == lam {
            mult.insert(mu, 1);
            continue;
        }
        let mut num: i64 = 0;
        for alpha in POS_ROOTS {
            let mut k = 1;
            loop {
                let w = (mu.0 + k * alpha.0, mu.1 + k * alpha.1);
                let (d, _, _) = dominant_orth(w);
                if d.0 > lam.0 || d.0 + d.1 > lam.0 + lam.1 {
                    break;
                }
                num += lookup(&mult, w) as i64 * dot(w, alpha);
                k += 1;
            }
        }
        let mr = (mu.0 + RHO.0, mu.1 + RHO.1);
        let den = norm_lr - dot(mr, mr);
        assert!(den > 0 && (2 * num) % den == 0, "Freudenthal division is exact");
        let m = 2 * num / den;
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    let t = std::sync::Arc::new(mult);
    freudenthal_cache().lock().unwrap().insert((a, b), t.clone());
    t
}

fn height(lam: (i32, i32), mu: (i32, i32)) -> i32 {
    // coefficients of λ − μ on the simple roots e₁−e₂ and 2e₂
    let c1 = lam.0 - mu.0;
    let c2 = (lam.1 - mu.1 + c1) / 2;
    c1 + c2
}

/// Multiplicity of the weight `mu` in `V(lam)`.
pub fn weight_multiplicity(mu: Weight, lam: &IrrClass) -> u64 {
    let (d, _, _) = dominant_orth(to_orth(mu));
    dominant_multiplicities(lam.a, lam.b).get(&d).copied().unwrap_or(0)
}

/// The formal character as a map from weights (fundamental basis) to multiplicities.
pub fn character(c: &IrrClass) -> BTreeMap<Weight, u64> {
    let mut out = BTreeMap::new();
    for (d, m) in dominant_multiplicities(c.a, c.b).iter() {
        for w in weight_orbit(from_orth(*d)) {
            out.insert(w, *m);
        }
    }
    out
}

/// Tensor product by the Klimyk rule `Σ_ν m_μ(ν) · sign · V(dom(λ+ν+ρ) − ρ)`.
pub fn tensor(x: &IrrClass, y: &IrrClass) -> VirtualRep {
    let (big, small) = if (x.a + x.b) >= (y.a + y.b) { (x, y) } else { (y, x) };
    let lam = to_orth(big.highest_weight());
    let mut acc: BTreeMap<IrrClass, i64> = BTreeMap::new();
    for (nu, m) in character(&IrrClass::new(small.a, small.b, false)) {
        let n = to_orth(nu);
        let shifted = (lam.0 + n.0 + RHO.0, lam.1 + n.1 + RHO.1);
        let (d, sign, singular) = dominant_orth(shifted);
        if singular {
            continue;
        }
        let hw = from_orth((d.0 - RHO.0, d.1 - RHO.1));
        let c = IrrClass::new(hw.0 as u32, hw.1 as u32, x.eps ^ y.eps);
        *acc.entry(c).or_insert(0) += sign as i64 * m as i64;
    }
    let mut out = VirtualRep::zero();
    for (c, m) in acc {
        assert!(m >= 0, "negative multiplicity {m} for {c} in {x}⊗{y}");
        out.add_term(c, m);
    }
    out
}

/// Tensor product by multiplying characters and peeling off highest weights.
pub fn tensor_by_characters(x: &IrrClass, y: &IrrClass) -> VirtualRep {
    let cx = character(x);
    let cy = character(y);
    let mut prod: BTreeMap<Weight, i64> = BTreeMap::new();
    for (a, m) in &cx {
        for (b, n) in &cy {
            *prod.entry((a.0 + b.0, a.1 + b.1)).or_insert(0) += (*m * *n) as i64;
        }
    }
    let mut out = VirtualRep::zero();
    loop {
        prod.retain(|_, m| *m != 0);
        // a highest weight of what remains: maximal e₁ then e₂ coordinate among dominant weights
        let top = prod
            .iter()
            .map(|(w, m)| (to_orth(*w), *m))
            .filter(|((p, q), _)| *p >= *q && *q >= 0)
            .max_by_key(|((p, q), _)| (*p + *q, *p));
        let Some((o, m)) = top else { break };
        let hw = from_orth(o);
        assert!(m > 0, "negative leading multiplicity");
        let c = IrrClass::new(hw.0 as u32, hw.1 as u32, x.eps ^ y.eps);
        for (w, k) in character(&c) {
            *prod.entry(w).or_insert(0) -= m * k as i64;
        }
        out.add_term(c, m);
    }
    out
}

/// Characters as Laurent polynomials in two variables, for the Weyl numerator identity.
pub fn weyl_numerator(shifted: (i32, i32)) -> BTreeMap<(i32, i32), i64> {
    let mut out = BTreeMap::new();
    for g in weyl_group() {
        let w = act(g, shifted);
        *out.entry(w).or_insert(0) += g.1 as i64;
    }
    out.retain(|_, c| *c != 0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(IrrClass::new(0, 0, false).dim(), 1);
        assert_eq!(IrrClass::new(1, 0, false).dim(), 4);
        assert_eq!(IrrClass::new(0, 1, false).dim(), 5);
        assert_eq!(IrrClass::new(2, 0, false).dim(), 10);
        assert_eq!(IrrClass::new(0, 2, false).dim(), 14);
    }

    #[test]
    fn orbits() {
        let o1 = weight_orbit((1, 0));
        assert_eq!(o1, vec![(-1, 0), (-1, 1), (1, -1), (1, 0)]);
        let o2 = weight_orbit((0, 1));
        assert_eq!(o2.len(), 4);
        assert!(o2.contains(&(-2, 1)) && o2.contains(&(2, -1)));
        assert_eq!(weight_orbit((0, 0)), vec![(0, 0)]);
    }

    #[test]
    fn multiplicities() {
        let l1 = IrrClass::new(1, 0, false);
        let l2 = IrrClass::new(0, 1, false);
        assert_eq!(weight_multiplicity((1, 0), &l1), 1);
        assert_eq!(weight_multiplicity((0, 0), &l1), 0);
        assert_eq!(weight_multiplicity((0, 0), &l2), 1);
        assert_eq!(character(&l1).len(), 4);
        assert!(character(&l1).values().all(|m| *m == 1));
    }

    #[test]
    fn small_tensors() {
        let v = |a, b| IrrClass::new(a, b, false);
        assert_eq!(tensor(&v(1, 0), &v(0, 0)), VirtualRep::irr(v(1, 0)));
        let mut want = VirtualRep::zero();
        for c in [v(2, 0), v(0, 1), v(0, 0)] {
            want.add_term(c, 1);
        }
        assert_eq!(tensor(&v(1, 0), &v(1, 0)), want);
        let mut want = VirtualRep::zero();
        for c in [v(0, 2), v(2, 0), v(0, 0)] {
            want.add_term(c, 1);
        }
        assert_eq!(tensor(&v(0, 1), &v(0, 1)), want);
        let e = IrrClass::new(1, 0, true);
        assert!(tensor(&e, &e).terms().keys().all(|c| !c.eps));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["V(0,0)", "eV(3,1)"] {
            assert_eq!(s.parse::<IrrClass>().unwrap().to_string(), s);
        }
        assert!("W(1,2)".parse::<IrrClass>().is_err());
    }
}
