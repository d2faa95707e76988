//! The map `π` from `c` to irreducible entries of the `24 × 24` matrix ring over
//! `Rep(Sp₄ × ℤ/2)`, and checks that it is a based ring isomorphism.
//!
//! A point `x ∈ Γ∩Θ⁻¹` with parameters `(i, j, ε)` goes to `ε^ε V(iλ₁+jλ₂)` at row `Θ`,
//! column `Γ`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::cells::{CellPoint, CellWindow, LeftCellLabel, StarContext};
use crate::error::Error;
use crate::jring::{JElement, JRing};
use crate::report::CheckReport;
use crate::repring::{IrrClass, VirtualRep};
use crate::weyl::WeylElement;

/// One entry of the matrix ring.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct MatrixRep {
    pub row: LeftCellLabel,
    pub col: LeftCellLabel,
    pub entry: VirtualRep,
}

impl fmt::Display for MatrixRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({},{})", self.entry, self.row, self.col)
    }
}

/// A finitely supported matrix over the representation ring.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct RepMatrix(BTreeMap<(LeftCellLabel, LeftCellLabel), VirtualRep>);

impl RepMatrix {
    pub fn zero() -> RepMatrix {
        RepMatrix::default()
    }

    pub fn identity() -> RepMatrix {
        RepMatrix(LeftCellLabel::all().map(|c| ((c, c), VirtualRep::irr(IrrClass::TRIVIAL))).collect())
    }

    pub fn entry(&self, row: LeftCellLabel, col: LeftCellLabel) -> VirtualRep {
        self.0.get(&(row, col)).cloned().unwrap_or_default()
    }

    pub fn add_entry(&mut self, row: LeftCellLabel, col: LeftCellLabel, v: &VirtualRep) {
        let e = self.0.entry((row, col)).or_default();
        *e = e.add(v);
        if e.is_zero() {
            self.0.remove(&(row, col));
        }
    }

    pub fn add(&self, other: &RepMatrix) -> RepMatrix {
        let mut out = self.clone();
        for ((r, c), v) in &other.0 {
            out.add_entry(*r, *c, v);
        }
        out
    }

    pub fn mul(&self, other: &RepMatrix) -> RepMatrix {
        let mut out = RepMatrix::zero();
        for ((r, k), a) in &self.0 {
            for ((k2, c), b) in other.0.range((*k, LeftCellLabel::from_index(0).unwrap())..) {
                if k2 != k {
                    break;
                }
                out.add_entry(*r, *c, &a.mul(b));
            }
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = (LeftCellLabel, LeftCellLabel, &VirtualRep)> {
        self.0.iter().map(|((r, c), v)| (*r, *c, v))
    }
}

impl From<&MatrixRep> for RepMatrix {
    fn from(m: &MatrixRep) -> RepMatrix {
        let mut out = RepMatrix::zero();
        out.add_entry(m.row, m.col, &m.entry);
        out
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (k, ((r, c), v)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(f, "({r},{c}): {v}")?;
        }
        Ok(())
    }
}

pub fn irr_of(p: &CellPoint) -> IrrClass {
    IrrClass::new(p.i, p.j, p.eps)
}

pub fn pi(p: &CellPoint) -> MatrixRep {
    MatrixRep { row: p.row, col: p.col, entry: VirtualRep::irr(irr_of(p)) }
}

pub fn pi_element(window: &CellWindow, w: &WeylElement) -> Result<MatrixRep, Error> {
    Ok(pi(window.point(w)?))
}

/// Linear extension of `π` to `J_c`.
pub fn pi_j(window: &CellWindow, e: &JElement) -> Result<RepMatrix, Error> {
    let mut out = RepMatrix::zero();
    for (w, n) in e.terms() {
        let p = window.point(w)?;
        let mut v = VirtualRep::zero();
        v.add_term(irr_of(p), *n);
        out.add_entry(p.row, p.col, &v);
    }
    Ok(out)
}

pub fn pi_inverse(m: &MatrixRep) -> Result<CellPoint, Error> {
    let c = m.entry.as_irreducible().ok_or_else(|| Error::Reducible(m.entry.to_string()))?;
    Ok(CellPoint::from_params(m.row, m.col, c.a, c.b, c.eps))
}

/// `π(t_x t_y) = π(x)·π(y)` for each pair, including composability: if the column
/// of `x` differs from the row of `y` the product must vanish.
pub fn verify_isomorphism(jr: &JRing, pairs: &[(WeylElement, WeylElement)]) -> Result<CheckReport, Error> {
    let win = jr.window();
    jr.prefetch(pairs)?;
    let mut rep = CheckReport::new("pi is multiplicative", win.max_len());
    let results: Vec<Result<(String, String, String, String), Error>> = pairs
        .par_iter()
        .map(|(x, y)| {
            let row = jr.row(x, y)?;
            let got = pi_j(win, &JElement::from(row.as_ref()))?;
            let want = RepMatrix::from(&pi_element(win, x)?).mul(&RepMatrix::from(&pi_element(win, y)?));
            Ok((x.to_string(), y.to_string(), want.to_string(), got.to_string()))
        })
        .collect();
    for r in results {
        let (x, y, want, got) = r?;
        rep.compare(x, y, want, got);
    }
    Ok(rep)
}

/// `π(x⁻¹)` sits at the transposed position with the dual entry.
pub fn verify_duality(window: &CellWindow) -> CheckReport {
    let mut rep = CheckReport::new("pi duality", window.max_len());
    for p in window.points() {
        let a = pi(p);
        let expected = MatrixRep { row: a.col, col: a.row, entry: a.entry.dual() };
        match window.get(&p.element.inverse()) {
            Some(q) => rep.compare(p.element, "inverse", expected.to_string(), pi(q).to_string()),
            None => rep.fail(p.element, "inverse", expected, "missing from window"),
        }
    }
    rep
}

/// Round trips `π⁻¹(π(x)) = x` over the window.
pub fn verify_round_trip(window: &CellWindow) -> CheckReport {
    let mut rep = CheckReport::new("pi round trip", window.max_len());
    for p in window.points() {
        let back = pi_inverse(&pi(p)).map(|q| q.element.to_string()).unwrap_or_else(|e| e.to_string());
        rep.compare(p.element, "", p.element.to_string(), back);
    }
    rep
}

/// `π(t_d) = V(0)` on the diagonal for each distinguished involution, and the unit law
/// `t_{d_Θ} t_x = t_x = t_x t_{d_Γ}` for `x ∈ Γ∩Θ⁻¹` in `sample`.
pub fn verify_unit(
    jr: &JRing,
    distinguished: &BTreeMap<LeftCellLabel, WeylElement>,
    sample: &[WeylElement],
) -> Result<CheckReport, Error> {
    let win = jr.window();
    let mut rep = CheckReport::new("unit law", win.max_len());
    let mut unit = RepMatrix::zero();
    for d in distinguished.values() {
        unit = unit.add(&RepMatrix::from(&pi_element(win, d)?));
    }
    rep.compare("sum of t_d", "", RepMatrix::identity().to_string(), unit.to_string());
    let mut cases = Vec::new();
    for x in sample {
        let p = win.point(x)?;
        cases.push((distinguished[&p.row], *x, *x));
        cases.push((*x, distinguished[&p.col], *x));
    }
    let pairs: Vec<_> = cases.iter().map(|(a, b, _)| (*a, *b)).collect();
    jr.prefetch(&pairs)?;
    for (a, b, x) in cases {
        let got = JElement::from(jr.row(&a, &b)?.as_ref());
        rep.compare(a, b, JElement::basis(x).to_string(), got.to_string());
    }
    Ok(rep)
}

/// Transport along the trees commutes: right stars then left stars, or the reverse,
/// land on the same element; stepping along an edge and back is the identity.
pub fn verify_path_independence(window: &CellWindow) -> CheckReport {
    let mut rep = CheckReport::new("star path independence", window.max_len());
    for p in window.points() {
        let base = CellPoint::from_params(p.row.root(), p.col.root(), p.i, p.j, p.eps).element;
        let mut a = base;
        for pair in p.row.path_from_root() {
            a = StarContext::left(pair).star(&a).expect("left path");
        }
        for pair in p.col.path_from_root() {
            a = StarContext::right(pair).star(&a).expect("right path");
        }
        rep.compare(p.element, "left-then-right", p.element.to_string(), a.to_string());
        for (child, parent, pair) in LeftCellLabel::graph_edges() {
            for (from, to, ctx) in [(parent, child, StarContext::right(pair)), (child, parent, StarContext::right(pair))] {
                if p.col != from {
                    continue;
                }
                let there = ctx.star(&p.element);
                let ok = match there {
                    Ok(e) => {
                        let cell_ok = window.get(&e).map(|q| q.col == to && q.row == p.row).unwrap_or(e.length() > window.max_len());
                        cell_ok && ctx.star(&e).ok() == Some(p.element)
                    }
                    Err(_) => false,
                };
                rep.compare(p.element, format!("{from}->{to}"), true, ok);
            }
        }
    }
    rep
}

/// Checks `row(f(x), g(y)) = h(row(x, y))` for each pair: the row of the transported
/// pair is the image of the original row under `h`, with equal coefficients.
pub fn verify_transport<F, G, H>(
    jr: &JRing,
    name: &str,
    pairs: &[(WeylElement, WeylElement)],
    f: F,
    g: G,
    h: H,
) -> Result<CheckReport, Error>
where
    F: Fn(&WeylElement) -> Result<WeylElement, Error>,
    G: Fn(&WeylElement) -> Result<WeylElement, Error>,
    H: Fn(&WeylElement) -> Result<WeylElement, Error>,
{
    let mut moved = Vec::with_capacity(pairs.len());
    for (x, y) in pairs {
        moved.push((f(x)?, g(y)?));
    }
    let all: Vec<_> = pairs.iter().chain(moved.iter()).copied().collect();
    jr.prefetch(&all)?;
    let mut rep = CheckReport::new(name, jr.window().max_len());
    for ((x, y), (fx, gy)) in pairs.iter().zip(&moved) {
        let before = jr.row_any(x, y)?;
        let after = jr.row_any(fx, gy)?;
        let mut image = JElement::zero();
        let mut undefined = None;
        for (z, n) in before.iter() {
            match h(z) {
                Ok(hz) => image.add_term(hz, *n),
                Err(e) => undefined = Some(e),
            }
        }
        match undefined {
            Some(e) => rep.fail(x, y, "image of every z", e),
            None => rep.compare(fx, gy, image, JElement::from(after.as_ref())),
        }
    }
    Ok(rep)
}

/// `γ_{a,b,c} = γ_{b,c⁻¹,a⁻¹}` on explicit triples, reading both sides from rows.
pub fn verify_cyclic(jr: &JRing, name: &str, triples: &[(WeylElement, WeylElement, WeylElement)]) -> Result<CheckReport, Error> {
    let pairs: Vec<_> = triples.iter().flat_map(|(a, b, c)| [(*a, *b), (*b, c.inverse())]).collect();
    jr.prefetch(&pairs)?;
    let mut rep = CheckReport::new(name, jr.window().max_len());
    for (a, b, c) in triples {
        let lhs = jr.row_any(a, b)?.get(c).copied().unwrap_or(0);
        let rhs = jr.row_any(b, &c.inverse())?.get(&a.inverse()).copied().unwrap_or(0);
        rep.compare(format!("{a},{b}"), c, lhs, rhs);
    }
    Ok(rep)
}

/// One line of the element dictionary.
#[derive(Clone, Debug, Serialize)]
pub struct DictionaryRow {
    pub word: String,
    pub left_cell: String,
    pub right_cell: String,
    pub i: u32,
    pub j: u32,
    pub eps: u8,
    pub irr: String,
}

pub fn dictionary(window: &CellWindow) -> Vec<DictionaryRow> {
    window
        .points()
        .iter()
        .map(|p| DictionaryRow {
            word: p.element.to_string(),
            left_cell: p.col.name().to_string(),
            right_cell: p.row.name().to_string(),
            i: p.i,
            j: p.j,
            eps: p.eps as u8,
            irr: irr_of(p).to_string(),
        })
        .collect()
}
