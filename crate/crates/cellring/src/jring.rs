//! The based ring `J_c`: structure constants `γ_{x,y,z}` read off Hecke products.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use parking_lot::Mutex;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::cells::{a_lower_bound, x_ij, CellWindow, StarContext, A_VALUE};
use crate::error::Error;
use crate::hecke::{c_product, prepare_products, KlTable};
use crate::report::CheckReport;
use crate::weyl::{tau, WeylElement};
use crate::Laurent;

/// Nonzero `γ_{x,y,z}` for fixed `(x, y)`, keyed by `z`.
pub type GammaRow = BTreeMap<WeylElement, i64>;

/// Extracts `γ_{x,y,·}` from `C_x·C_y`, checking the degree bound on the window.
///
/// Terms outside the window are ignored when they are short enough to have been
/// enumerated or carry a descent certificate `a > 6`; otherwise the window is too small.
pub fn extract_row(
    window: &CellWindow,
    x: &WeylElement,
    y: &WeylElement,
    product: &BTreeMap<WeylElement, Laurent>,
) -> Result<GammaRow, Error> {
    let top = A_VALUE as i32;
    let mut row = GammaRow::new();
    for (z, h) in product {
        let Some(deg) = h.degree() else { continue };
        if window.contains(z) {
            if deg > top {
                return Err(Error::DegreeBound { x: x.to_string(), y: y.to_string(), z: z.to_string(), degree: deg });
            }
            let g = h.coeff(top);
            if g != 0 {
                row.insert(*z, g);
            }
        } else if deg >= top && z.length() > window.max_len() && a_lower_bound(z) <= A_VALUE {
            return Err(Error::WindowTooSmall(z.to_string()));
        }
    }
    Ok(row)
}

/// `γ` rows over a window, memoized per `(x, y)`.
pub struct JRing<'a> {
    table: &'a KlTable,
    window: &'a CellWindow,
    rows: Mutex<HashMap<(WeylElement, WeylElement), Arc<GammaRow>>>,
}

impl<'a> JRing<'a> {
    pub fn new(table: &'a KlTable, window: &'a CellWindow) -> JRing<'a> {
        JRing { table, window, rows: Mutex::new(HashMap::new()) }
    }

    pub fn window(&self) -> &CellWindow {
        self.window
    }

    pub fn table(&self) -> &KlTable {
        self.table
    }

    /// `γ_{x,y,·}` for arbitrary `x, y ∈ W`; only `z` in the window are reported.
    pub fn row_any(&self, x: &WeylElement, y: &WeylElement) -> Result<Arc<GammaRow>, Error> {
        if let Some(r) = self.rows.lock().get(&(*x, *y)) {
            return Ok(r.clone());
        }
        let p = c_product(self.table, x, y);
        let row = Arc::new(extract_row(self.window, x, y, &p)?);
        self.rows.lock().insert((*x, *y), row.clone());
        Ok(row)
    }

    /// `γ_{x,y,·}` for `x, y` in the window.
    pub fn row(&self, x: &WeylElement, y: &WeylElement) -> Result<Arc<GammaRow>, Error> {
        self.window.point(x)?;
        self.window.point(y)?;
        self.row_any(x, y)
    }

    /// Computes many rows, in parallel once the needed modules exist.
    pub fn prefetch(&self, pairs: &[(WeylElement, WeylElement)]) -> Result<(), Error> {
        let todo: Vec<_> = {
            let rows = self.rows.lock();
            let set: BTreeSet<_> = pairs.iter().filter(|p| !rows.contains_key(p)).copied().collect();
            set.into_iter().collect()
        };
        prepare_products(self.table, &todo);
        todo.par_iter().map(|(x, y)| self.row_any(x, y).map(|_| ())).collect()
    }

    pub fn gamma(&self, x: &WeylElement, y: &WeylElement, z: &WeylElement) -> Result<i64, Error> {
        self.window.point(z)?;
        Ok(self.row(x, y)?.get(z).copied().unwrap_or(0))
    }

    /// `γ_{x,y,z}` for any `x, y` and any `z`, or `None` when membership of `z`
    /// in the cell cannot be decided from the window.
    pub fn gamma_decided(&self, x: &WeylElement, y: &WeylElement, z: &WeylElement) -> Result<Option<i64>, Error> {
        if !self.window.contains(z) {
            return Ok((z.length() <= self.window.max_len()).then_some(0));
        }
        Ok(Some(self.row_any(x, y)?.get(z).copied().unwrap_or(0)))
    }

    pub fn t_multiply(&self, a: &JElement, b: &JElement) -> Result<JElement, Error> {
        let mut out = JElement::zero();
        for (x, m) in &a.0 {
            for (y, n) in &b.0 {
                for (z, g) in self.row(x, y)?.iter() {
                    out.add_term(*z, m * n * g);
                }
            }
        }
        Ok(out)
    }
}

/// An element `Σ n_x t_x` of `J_c`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct JElement(BTreeMap<WeylElement, i64>);

impl JElement {
    pub fn zero() -> JElement {
        JElement::default()
    }

    pub fn basis(w: WeylElement) -> JElement {
        JElement(BTreeMap::from([(w, 1)]))
    }

    pub fn from_terms<I: IntoIterator<Item = (WeylElement, i64)>>(it: I) -> JElement {
        let mut e = JElement::zero();
        for (w, n) in it {
            e.add_term(w, n);
        }
        e
    }

    pub fn add_term(&mut self, w: WeylElement, n: i64) {
        if n == 0 {
            return;
        }
        let e = self.0.entry(w).or_insert(0);
        *e += n;
        if *e == 0 {
            self.0.remove(&w);
        }
    }

    pub fn add(&self, other: &JElement) -> JElement {
        let mut r = self.clone();
        for (w, n) in &other.0 {
            r.add_term(*w, *n);
        }
        r
    }

    pub fn sub(&self, other: &JElement) -> JElement {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> JElement {
        JElement::from_terms(self.0.iter().map(|(w, n)| (*w, n * k)))
    }

    pub fn coeff(&self, w: &WeylElement) -> i64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> &BTreeMap<WeylElement, i64> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<&GammaRow> for JElement {
    fn from(r: &GammaRow) -> JElement {
        JElement::from_terms(r.iter().map(|(w, n)| (*w, *n)))
    }
}

impl fmt::Display for JElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, n)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *n != 1 {
                write!(f, "{n}")?;
            }
            write!(f, "t[{w}]")?;
        }
        Ok(())
    }
}

impl Serialize for JElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(w, n)| (w.to_string(), *n)))
    }
}

/// `S ∪ S⁻¹ ∪ τS ∪ Sτ ∪ τSτ`, restricted to the window.
pub fn symmetric_closure(window: &CellWindow, sample: &[WeylElement]) -> Vec<WeylElement> {
    let t = tau();
    let mut set = BTreeSet::new();
    for x in sample {
        for y in [*x, x.inverse()] {
            for z in [y, t.mul(&y), y.mul(&t), t.mul(&y).mul(&t)] {
                if window.contains(&z) {
                    set.insert(z);
                }
            }
        }
    }
    set.into_iter().collect()
}

/// The inversion and length-zero symmetries of `γ` and commutativity on
/// diagonal blocks, over all triples from the closure of `sample`.
pub fn verify_gamma_symmetries(jr: &JRing, sample: &[WeylElement]) -> Result<Vec<CheckReport>, Error> {
    let s = symmetric_closure(jr.window(), sample);
    let pairs: Vec<_> = s.iter().flat_map(|x| s.iter().map(move |y| (*x, *y))).collect();
    jr.prefetch(&pairs)?;
    let w = jr.window().max_len();
    let g = |x: &WeylElement, y: &WeylElement, z: &WeylElement| -> Result<i64, Error> {
        Ok(jr.row_any(x, y)?.get(z).copied().unwrap_or(0))
    };
    let t = tau();
    let mut cyc = CheckReport::new("gamma cyclic symmetry", w);
    let mut inv = CheckReport::new("gamma inversion symmetry", w);
    let mut twist = CheckReport::new("gamma length-zero twist", w);
    let mut comm = CheckReport::new("diagonal commutativity", w);
    for x in &s {
        for y in &s {
            for z in &s {
                let v = g(x, y, z)?;
                let tag = format!("{x},{y},{z}");
                cyc.compare(&tag, "γ(y,z⁻¹,x⁻¹)", v, g(y, &z.inverse(), &x.inverse())?);
                cyc.compare(&tag, "γ(z⁻¹,x,y⁻¹)", v, g(&z.inverse(), x, &y.inverse())?);
                inv.compare(&tag, "γ(y⁻¹,x⁻¹,z⁻¹)", v, g(&y.inverse(), &x.inverse(), &z.inverse())?);
                let (tx, tz) = (t.mul(x), t.mul(z));
                if s.contains(&tx) && s.contains(&tz) {
                    twist.compare(&tag, "γ(τx,y,τz)", v, g(&tx, y, &tz)?);
                }
                let (yt, zt) = (y.mul(&t), z.mul(&t));
                if s.contains(&yt) && s.contains(&zt) {
                    twist.compare(&tag, "γ(x,yτ,zτ)", v, g(x, &yt, &zt)?);
                }
                let (xt, ty) = (x.mul(&t), t.mul(y));
                if s.contains(&xt) && s.contains(&ty) {
                    twist.compare(&tag, "γ(xτ,y,z)=γ(x,τy,z)", g(&xt, y, z)?, g(x, &ty, z)?);
                }
            }
            let (px, py) = (jr.window().point(x)?, jr.window().point(y)?);
            if px.is_diagonal() && py.is_diagonal() && px.row == py.row {
                let a = JElement::from(jr.row(x, y)?.as_ref());
                let b = JElement::from(jr.row(y, x)?.as_ref());
                comm.compare(x, y, a, b);
            }
        }
    }
    Ok(vec![cyc, inv, twist, comm])
}

const STAR_PAIRS: [[usize; 2]; 3] = [[0, 2], [1, 2], [2, 3]];

/// `γ_{x,y,z} = γ_{*x#, #y★, *z★}` over pairs from `sample` and all `z` of the window
/// allowed by the cell constraints, for every choice of star pairs that applies.
pub fn verify_star_invariance(jr: &JRing, sample: &[WeylElement]) -> Result<CheckReport, Error> {
    let win = jr.window();
    let mut rep = CheckReport::new("gamma star invariance", win.max_len());
    for x in sample {
        for y in sample {
            let (px, py) = (win.point(x)?, win.point(y)?);
            if px.col != py.row {
                continue;
            }
            let zs: Vec<WeylElement> =
                win.block(px.row, py.col).filter(|p| p.length() <= x.length() + y.length()).map(|p| p.element).collect();
            for a in STAR_PAIRS {
                for b in STAR_PAIRS {
                    for c in STAR_PAIRS {
                        let (la, rb, lb, rc) =
                            (StarContext::left(a), StarContext::right(b), StarContext::left(b), StarContext::right(c));
                        let (Ok(x2), Ok(y2)) = (la.star(x).and_then(|u| rb.star(&u)), lb.star(y).and_then(|u| rc.star(&u)))
                        else {
                            continue;
                        };
                        if !win.contains(&x2) || !win.contains(&y2) {
                            continue;
                        }
                        for z in &zs {
                            let Ok(z2) = la.star(z).and_then(|u| rc.star(&u)) else { continue };
                            let lhs = jr.gamma(x, y, z)?;
                            let Some(rhs) = jr.gamma_decided(&x2, &y2, &z2)? else { continue };
                            rep.compare(format!("{x},{y},{z}"), format!("{a:?}{b:?}{c:?}"), lhs, rhs);
                        }
                    }
                }
            }
        }
    }
    Ok(rep)
}

/// The two string-sum identities for order-4 pairs, for `x, u` from `sample`.
///
/// Left: `γ(trw,u,trv) = γ(rw,u,rv) + γ(rw,u,rtrv)`.
/// Right: `γ(w',u't,v'trt) + γ(w',u't,v't) = γ(w',u'tr,v'tr)`.
pub fn verify_string_sums(jr: &JRing, sample: &[WeylElement]) -> Result<Vec<CheckReport>, Error> {
    let win = jr.window();
    let mut left = CheckReport::new("left string sums", win.max_len());
    let mut right = CheckReport::new("right string sums", win.max_len());
    let lc = StarContext::left([2, 3]);
    let rc = StarContext::right([2, 3]);
    let strings = |ctx: &StarContext| -> BTreeSet<Vec<WeylElement>> {
        win.points().iter().filter_map(|p| ctx.string_through(&p.element).ok().map(|(s, _)| s)).collect()
    };
    let lstrings = strings(&lc);
    let rstrings = strings(&rc);
    // the letter next to the coset minimum: first letter of the string's first element on that side
    let lletter = |s: &[WeylElement]| s[0].left_descents().iter().find(|&i| i == 2 || i == 3);
    let rletter = |s: &[WeylElement]| s[0].right_descents().iter().find(|&i| i == 2 || i == 3);
    for x in sample {
        let Ok((xs, _)) = lc.string_through(x) else { continue };
        for u in sample {
            for zs in &lstrings {
                if lletter(zs) != lletter(&xs) {
                    continue;
                }
                let a = jr.gamma_decided(&xs[1], u, &zs[1])?;
                let b = jr.gamma_decided(&xs[0], u, &zs[0])?;
                let c = jr.gamma_decided(&xs[0], u, &zs[2])?;
                if let (Some(a), Some(b), Some(c)) = (a, b, c) {
                    left.compare(format!("{},{},{}", xs[1], u, zs[1]), "sum", a, b + c);
                }
            }
        }
    }
    for w in sample {
        for u in sample {
            let Ok((us, _)) = rc.string_through(u) else { continue };
            for zs in &rstrings {
                if rletter(zs) != rletter(&us) {
                    continue;
                }
                let a = jr.gamma_decided(w, &us[0], &zs[2])?;
                let b = jr.gamma_decided(w, &us[0], &zs[0])?;
                let c = jr.gamma_decided(w, &us[1], &zs[1])?;
                if let (Some(a), Some(b), Some(c)) = (a, b, c) {
                    right.compare(format!("{},{},{}", w, us[1], zs[1]), "sum", a + b, c);
                }
            }
        }
    }
    Ok(vec![left, right])
}

/// Products `t_{x_{a,b}}·t_{x_{i,j}}` for `(a,b), (i,j) ≤ (k,l)`, from the rows of
/// `t_{x_{1,0}}` and `t_{x_{0,1}}` alone.
#[derive(Clone, Debug, Default)]
pub struct RecursionTable {
    pub products: BTreeMap<((u32, u32), (u32, u32)), JElement>,
}

/// Builds the table by
/// `t_{x_{a,b}} = t_{x_{1,0}} t_{x_{a−1,b}} − t_{x_{a,b−1}} − t_{x_{a−2,b+1}} − t_{x_{a−2,b}}` for `a ≥ 1` and
/// `t_{x_{0,b}} = t_{x_{0,1}} t_{x_{0,b−1}} − t_{x_{2,b−2}} − t_{x_{0,b−2}}`,
/// applying left multiplication by `t_{x_{1,0}}`, `t_{x_{0,1}}` through their `γ` rows.
pub fn recursion_closure(jr: &JRing, k: u32, l: u32) -> Result<RecursionTable, Error> {
    let x10 = x_ij(1, 0);
    let x01 = x_ij(0, 1);
    let lmul = |g: &WeylElement, e: &JElement| -> Result<JElement, Error> {
        let mut out = JElement::zero();
        for (w, n) in e.terms() {
            for (z, c) in jr.row(g, w)?.iter() {
                out.add_term(*z, n * c);
            }
        }
        Ok(out)
    };
    let top = k + l;
    let mut table = RecursionTable::default();
    for i in 0..=k {
        for j in 0..=l {
            let v = JElement::basis(x_ij(i, j));
            // t_{x_{a,b}}·v by total degree, a ≥ 1 first within a degree
            let mut t: BTreeMap<(i64, i64), JElement> = BTreeMap::new();
            let get = |t: &BTreeMap<(i64, i64), JElement>, a: i64, b: i64| -> JElement {
                if a < 0 || b < 0 {
                    JElement::zero()
                } else {
                    t[&(a, b)].clone()
                }
            };
            t.insert((0, 0), v.clone());
            for s in 1..=top as i64 {
                for a in (1..=s).rev() {
                    let b = s - a;
                    let e = lmul(&x10, &get(&t, a - 1, b))?
                        .sub(&get(&t, a, b - 1))
                        .sub(&get(&t, a - 2, b + 1))
                        .sub(&get(&t, a - 2, b));
                    t.insert((a, b), e);
                }
                let e = lmul(&x01, &get(&t, 0, s - 1))?.sub(&get(&t, 2, s - 2)).sub(&get(&t, 0, s - 2));
                t.insert((0, s), e);
            }
            for a in 0..=k {
                for b in 0..=l {
                    table.products.insert(((a, b), (i, j)), t[&(a as i64, b as i64)].clone());
                }
            }
        }
    }
    Ok(table)
}
