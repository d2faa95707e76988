//! The Iwahori–Hecke algebra of `W`: `T`-basis arithmetic, the `C`-basis,
//! `θ`-elements and the Bernstein central elements `S_{x₁}`, `S_{x₂}`.

pub mod cache;
pub mod kl;
pub mod product;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::laurent::{Coeff, LaurentPoly};
use crate::weyl::{lower_interval, tau, Letter, WeylElement};
pub use kl::{KlTable, QPoly};
pub use product::{act_on_c, c_product, prepare_products, SignedLetter};

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Basis {
    T,
    C,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// A finite sparse combination of basis elements with Laurent coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement<C> {
    pub basis: Basis,
    terms: BTreeMap<WeylElement, LaurentPoly<C>>,
}

impl<C: Coeff> HeckeElement<C> {
    pub fn zero(basis: Basis) -> Self {
        HeckeElement { basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, w: WeylElement) -> Self {
        Self::term(basis, w, LaurentPoly::one())
    }

    pub fn term(basis: Basis, w: WeylElement, c: LaurentPoly<C>) -> Self {
        let mut h = Self::zero(basis);
        h.add_term(w, &c);
        h
    }

    pub fn from_terms<I: IntoIterator<Item = (WeylElement, LaurentPoly<C>)>>(basis: Basis, it: I) -> Self {
        let mut h = Self::zero(basis);
        for (w, c) in it {
            h.add_term(w, &c);
        }
        h
    }

    pub fn terms(&self) -> &BTreeMap<WeylElement, LaurentPoly<C>> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<WeylElement, LaurentPoly<C>> {
        self.terms
    }

    pub fn coeff(&self, w: &WeylElement) -> LaurentPoly<C> {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: WeylElement, c: &LaurentPoly<C>) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        e.add_assign_ref(c);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "mixed bases");
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_term(*w, c);
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-LaurentPoly::one()))
    }

    pub fn scale(&self, c: &LaurentPoly<C>) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(w, d)| (*w, d.mul_ref(c))))
    }

    fn assert_t(&self) {
        assert_eq!(self.basis, Basis::T, "operation requires the T-basis");
    }

    /// `T_r·h` or `h·T_r` via `(T_r − q)(T_r + 1) = 0`.
    pub fn t_mul_gen(&self, r: usize, side: Side) -> Self {
        self.assert_t();
        let q = LaurentPoly::<C>::v_pow(2);
        let q_minus_1 = &q - &LaurentPoly::one();
        let mut out = Self::zero(Basis::T);
        for (w, c) in &self.terms {
            let rw = match side {
                Side::Left => w.lmul_gen(r),
                Side::Right => w.rmul_gen(r),
            };
            if rw.length() > w.length() {
                out.add_term(rw, c);
            } else {
                out.add_term(rw, &c.mul_ref(&q));
                out.add_term(*w, &c.mul_ref(&q_minus_1));
            }
        }
        out
    }

    /// Multiplication by `T_τ` on the given side.
    pub fn t_mul_tau(&self, side: Side) -> Self {
        self.assert_t();
        let t = tau();
        Self::from_terms(
            Basis::T,
            self.terms.iter().map(|(w, c)| {
                (
                    match side {
                        Side::Left => t.mul(w),
                        Side::Right => w.mul(&t),
                    },
                    c.clone(),
                )
            }),
        )
    }

    /// Product of two `T`-basis elements.
    pub fn t_mul(&self, other: &Self) -> Self {
        self.assert_t();
        other.assert_t();
        let mut out = Self::zero(Basis::T);
        for (w, c) in &self.terms {
            let mut acc = other.clone();
            for l in w.reduced_word().0.iter().rev() {
                acc = match l {
                    Letter::R(i) => acc.t_mul_gen(*i as usize, Side::Left),
                    Letter::Tau => acc.t_mul_tau(Side::Left),
                };
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// `T_r⁻¹ = q⁻¹T_r + (q⁻¹ − 1)T_e`.
    pub fn t_inverse_gen(r: usize) -> Self {
        let qi = LaurentPoly::<C>::v_pow(-2);
        let mut h = Self::term(Basis::T, WeylElement::generator(r), qi.clone());
        h.add_term(WeylElement::IDENTITY, &(&qi - &LaurentPoly::one()));
        h
    }

    /// `T̃_w = v^{-l(w)} T_w`.
    pub fn t_tilde(w: &WeylElement) -> Self {
        Self::term(Basis::T, *w, LaurentPoly::v_pow(-(w.length() as i32)))
    }

    /// `T̃_w⁻¹`.
    pub fn t_tilde_inverse(w: &WeylElement) -> Self {
        let mut acc = Self::basis_element(Basis::T, WeylElement::IDENTITY);
        // T_w = T_τ^ε T_{s₁}⋯T_{s_k}, so T_w⁻¹ = T_{s_k}⁻¹⋯T_{s₁}⁻¹ T_τ^ε
        for l in w.reduced_word().0.iter() {
            acc = match l {
                Letter::R(i) => Self::t_inverse_gen(*i as usize).t_mul(&acc),
                Letter::Tau => acc.t_mul_tau(Side::Left),
            };
        }
        acc.scale(&LaurentPoly::v_pow(w.length() as i32))
    }

    /// Rewrites a `T`-basis element in the `C`-basis by top-down subtraction.
    pub fn to_c_basis(&self, table: &KlTable) -> Self {
        self.assert_t();
        let mut rest = self.clone();
        let mut out = Self::zero(Basis::C);
        while let Some(w) = rest.terms.keys().max_by_key(|w| (w.length(), **w)).copied() {
            let a = rest.coeff(&w);
            let h = a.shift(w.length() as i32);
            rest = rest.sub(&c_basis::<C>(table, &w).scale(&h));
            out.add_term(w, &h);
        }
        out
    }

    /// Rewrites a `C`-basis element in the `T`-basis.
    pub fn to_t_basis(&self, table: &KlTable) -> Self {
        assert_eq!(self.basis, Basis::C);
        let mut out = Self::zero(Basis::T);
        for (w, c) in &self.terms {
            out = out.add(&c_basis::<C>(table, w).scale(c));
        }
        out
    }
}

/// `C_w = v^{-l(w)} Σ_{y ≤ w} P_{y,w}(v²) T_y` in the `T`-basis.
pub fn c_basis<C: Coeff>(table: &KlTable, w: &WeylElement) -> HeckeElement<C> {
    let lw = w.length() as i32;
    let mut h = HeckeElement::zero(Basis::T);
    for y in lower_interval(w) {
        let p = table.kl_poly(&y, w);
        let poly = LaurentPoly::from_terms(p.iter().enumerate().map(|(i, &c)| (2 * i as i32 - lw, C::from(c))));
        h.add_term(y, &poly);
    }
    h
}

impl<C: Coeff> fmt::Debug for HeckeElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = match self.basis {
            Basis::T => "T",
            Basis::C => "C",
        };
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){b}_{w:?}")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
#[serde(bound = "")]
struct TermJson<'a, C: Coeff> {
    word: String,
    poly: &'a LaurentPoly<C>,
}

impl<C: Coeff> Serialize for HeckeElement<C> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let terms: Vec<TermJson<'_, C>> =
            self.terms.iter().map(|(w, c)| TermJson { word: w.reduced_word().to_string(), poly: c }).collect();
        let mut st = s.serialize_struct("HeckeElement", 2)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// Fundamental weights `x₁, x₂, x₃`.
pub const X1: [i32; 3] = [1, 0, 0];
pub const X2: [i32; 3] = [1, 1, 0];
pub const X3: [i32; 3] = [1, 1, 1];

pub fn is_dominant(x: [i32; 3]) -> bool {
    x[0] >= x[1] && x[1] >= x[2] && x[2] >= 0
}

/// The componentwise smallest dominant `z` with `λ + z` dominant.
pub fn default_shift(lambda: [i32; 3]) -> [i32; 3] {
    let z3 = 0.max(-lambda[2]);
    let z2 = z3.max(z3 + lambda[2] - lambda[1]);
    let z1 = z2.max(z2 + lambda[1] - lambda[0]);
    [z1, z2, z3]
}

/// `θ_λ = T̃_{t_y}·T̃_{t_z}⁻¹` with `λ = y − z`, `y, z` dominant.
pub fn theta_with<C: Coeff>(lambda: [i32; 3], z: [i32; 3]) -> HeckeElement<C> {
    let y = [lambda[0] + z[0], lambda[1] + z[1], lambda[2] + z[2]];
    assert!(is_dominant(y) && is_dominant(z), "θ decomposition needs dominant weights");
    let ty = HeckeElement::<C>::t_tilde(&WeylElement::translation(y));
    let tz = HeckeElement::<C>::t_tilde_inverse(&WeylElement::translation(z));
    ty.t_mul(&tz)
}

pub fn theta<C: Coeff>(lambda: [i32; 3]) -> HeckeElement<C> {
    theta_with(lambda, default_shift(lambda))
}

/// `θ_λ` as a signed word in `T̃_s^{±1}` and `T_τ`.
pub fn theta_letters(lambda: [i32; 3]) -> Vec<SignedLetter> {
    let z = default_shift(lambda);
    let y = [lambda[0] + z[0], lambda[1] + z[1], lambda[2] + z[2]];
    let mut out = Vec::new();
    for l in WeylElement::translation(y).reduced_word().0 {
        out.push(match l {
            Letter::R(i) => SignedLetter::T(i as usize),
            Letter::Tau => SignedLetter::Tau,
        });
    }
    for l in WeylElement::translation(z).reduced_word().0.iter().rev() {
        out.push(match l {
            Letter::R(i) => SignedLetter::TInv(*i as usize),
            Letter::Tau => SignedLetter::Tau,
        });
    }
    out
}

fn combo(a: i32, b: i32, c: i32) -> [i32; 3] {
    [a * X1[0] + b * X2[0] + c * X3[0], a * X1[1] + b * X2[1] + c * X3[1], a * X1[2] + b * X2[2] + c * X3[2]]
}

/// Weights of the six `θ`-terms of `S_{x₁}`.
pub fn s1_weights() -> Vec<[i32; 3]> {
    vec![combo(1, 0, 0), combo(-1, 1, 0), combo(0, -1, 1), combo(-1, 0, 0), combo(1, -1, 0), combo(0, 1, -1)]
}

/// Weights of the twelve `θ`-terms of `S_{x₂}`; the element adds `2T̃_e`.
pub fn s2_weights() -> Vec<[i32; 3]> {
    vec![
        combo(0, 1, 0),
        combo(1, -1, 1),
        combo(1, 1, -1),
        combo(2, -1, 0),
        combo(-1, 0, 1),
        combo(-1, 2, -1),
        combo(0, -1, 0),
        combo(-1, 1, -1),
        combo(-1, -1, 1),
        combo(-2, 1, 0),
        combo(1, 0, -1),
        combo(1, -2, 1),
    ]
}

pub fn bernstein_s1<C: Coeff>() -> HeckeElement<C> {
    s1_weights().into_iter().fold(HeckeElement::zero(Basis::T), |acc, w| acc.add(&theta(w)))
}

pub fn bernstein_s2<C: Coeff>() -> HeckeElement<C> {
    let two = LaurentPoly::constant(C::from(2));
    let base = HeckeElement::term(Basis::T, WeylElement::IDENTITY, two);
    s2_weights().into_iter().fold(base, |acc, w| acc.add(&theta(w)))
}

/// `S·C_y` in the `C`-basis for a sum of `θ`-weights plus `k·T̃_e`, computed in a parabolic module.
pub fn central_times_c(
    table: &KlTable,
    weights: &[[i32; 3]],
    identity_multiple: i64,
    y: &WeylElement,
) -> BTreeMap<WeylElement, crate::Laurent> {
    let mut out: BTreeMap<WeylElement, crate::Laurent> = BTreeMap::new();
    for w in weights {
        for (z, c) in act_on_c(table, &theta_letters(*w), y) {
            out.entry(z).or_default().add_assign_ref(&c);
        }
    }
    if identity_multiple != 0 {
        out.entry(*y).or_default().add_assign_ref(&crate::Laurent::constant(identity_multiple));
    }
    out.retain(|_, c| !c.is_zero());
    out
}
