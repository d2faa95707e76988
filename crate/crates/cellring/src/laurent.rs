//! Exact Laurent polynomials in `v = q^{1/2}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed};
use serde::{Deserialize, Serialize};

/// Scalars usable as coefficients: exact signed integers with checked arithmetic.
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + Ord
    + Signed
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + From<i64>
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + Eq
        + Ord
        + Signed
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + From<i64>
        + fmt::Debug
        + fmt::Display
        + Send
        + Sync
        + 'static
{
}

fn add_c<C: Coeff>(a: &C, b: &C) -> C {
    a.checked_add(b).expect("coefficient overflow")
}

fn mul_c<C: Coeff>(a: &C, b: &C) -> C {
    a.checked_mul(b).expect("coefficient overflow")
}

/// Sparse Laurent polynomial: sorted `(exponent, coefficient)` pairs, no zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly<C> {
    terms: Vec<(i32, C)>,
}

impl<C: Coeff> Default for LaurentPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    /// `c·v^k`.
    pub fn monomial(k: i32, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(k, c)] }
        }
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::monomial(k, C::one())
    }

    /// `ξ = v + v⁻¹`.
    pub fn xi() -> Self {
        LaurentPoly { terms: vec![(-1, C::one()), (1, C::one())] }
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// Builds from arbitrary pairs, merging repeated exponents.
    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(it: I) -> Self {
        let mut m: BTreeMap<i32, C> = BTreeMap::new();
        for (k, c) in it {
            let e = m.entry(k).or_insert_with(C::zero);
            *e = add_c(e, &c);
        }
        LaurentPoly { terms: m.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// A polynomial in `q = v²` given by coefficients of `q⁰, q¹, …`.
    pub fn from_q_coeffs(cs: &[C]) -> Self {
        Self::from_terms(cs.iter().enumerate().map(|(i, c)| (2 * i as i32, c.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(i32, C)] {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i32> {
        self.terms.last().map(|t| t.0)
    }

    /// Smallest exponent; `None` for the zero polynomial.
    pub fn low_degree(&self) -> Option<i32> {
        self.terms.first().map(|t| t.0)
    }

    pub fn coeff(&self, k: i32) -> C {
        match self.terms.binary_search_by_key(&k, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().rev().map(|(k, c)| (-k, c.clone())).collect() }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, d)| (*e, mul_c(d, c))).collect() }
    }

    /// `self += c·v^k·other`, the workhorse of module arithmetic.
    pub fn add_scaled_shifted(&mut self, other: &Self, c: &C, k: i32) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let eb = if j < b.len() { Some(b[j].0 + k) } else { None };
            match (a.get(i), eb) {
                (Some(x), Some(e)) if x.0 == e => {
                    let s = add_c(&x.1, &mul_c(&b[j].1, c));
                    if !s.is_zero() {
                        out.push((e, s));
                    }
                    i += 1;
                    j += 1;
                }
                (Some(x), Some(e)) if x.0 < e => {
                    out.push(x.clone());
                    i += 1;
                }
                (_, Some(e)) => {
                    out.push((e, mul_c(&b[j].1, c)));
                    j += 1;
                }
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        self.terms = out;
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        self.add_scaled_shifted(other, &C::one(), 0);
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut acc = Self::zero();
        for (k, c) in &other.terms {
            acc.add_scaled_shifted(self, c, *k);
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = r.mul_ref(self);
        }
        r
    }

    /// Substitutes `q = v²` into a polynomial stored with `v`-exponents equal to `q`-exponents.
    pub fn q_to_v(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (2 * e, c.clone())).collect() }
    }

    /// Inverse of [`q_to_v`](Self::q_to_v); `None` if some exponent is odd.
    pub fn v_to_q(&self) -> Option<Self> {
        if self.terms.iter().any(|(e, _)| e % 2 != 0) {
            return None;
        }
        Some(LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e / 2, c.clone())).collect() })
    }

    /// Coefficients in `q`, as a map exponent → coefficient, for a polynomial in `v²`.
    pub fn to_map(&self) -> BTreeMap<i32, C> {
        self.terms.iter().cloned().collect()
    }

    /// Formats as a polynomial in the given variable name.
    pub fn format_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if n == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = a.is_one();
            match *e {
                0 => s.push_str(&a.to_string()),
                1 if unit => s.push_str(var),
                1 => s.push_str(&format!("{a}*{var}")),
                _ if unit => s.push_str(&format!("{var}^{e}")),
                _ => s.push_str(&format!("{a}*{var}^{e}")),
            }
        }
        s
    }
}

impl<C: Coeff> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_in("v"))
    }
}

impl<C: Coeff> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_in("v"))
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut r = self.clone();
        r.add_assign_ref(rhs);
        r
    }
}

impl<C: Coeff> Add for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self + &rhs
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        let mut r = self.clone();
        r.add_scaled_shifted(rhs, &-C::one(), 0);
        r
    }
}

impl<C: Coeff> Sub for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        &self - &rhs
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
        self.mul_ref(rhs)
    }
}

impl<C: Coeff> Mul for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
        self.mul_ref(&rhs)
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -self.clone()
    }
}

impl<C: Coeff> Serialize for LaurentPoly<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            let text = c.to_string();
            match text.parse::<i64>() {
                Ok(n) => m.serialize_entry(&e.to_string(), &n)?,
                Err(_) => m.serialize_entry(&e.to_string(), &text)?,
            }
        }
        m.end()
    }
}

impl<'de, C: Coeff + std::str::FromStr> Deserialize<'de> for LaurentPoly<C> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let m: BTreeMap<String, serde_json::Value> = BTreeMap::deserialize(d)?;
        let mut terms = Vec::with_capacity(m.len());
        for (k, v) in m {
            let e: i32 = k.parse().map_err(serde::de::Error::custom)?;
            let s = match v {
                serde_json::Value::String(s) => s,
                serde_json::Value::Number(n) => n.to_string(),
                other => return Err(serde::de::Error::custom(format!("bad coefficient {other}"))),
            };
            let c: C = s.parse().map_err(|_| serde::de::Error::custom("bad coefficient"))?;
            terms.push((e, c));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}
