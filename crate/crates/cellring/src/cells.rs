//! Strings, star operations and the two-sided cell `c` containing `w₀₁₂`.
//!
//! The 24 left cells of `c` are grouped into four star graphs. Every element of
//! `c` is produced from one of ten base intersections by star operations along
//! fixed spanning trees, which also attaches the parameters `(i, j, ε)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::hecke::{KlTable, Side};
use crate::weyl::{longest_parabolic, tau, GenSet, WeylElement, RANK};

/// `a`-value of the cell.
pub const A_VALUE: usize = 6;

/// Number of left cells in `c`.
pub const NUM_CELLS: usize = 24;

struct LabelData {
    name: &'static str,
    notation: &'static str,
    rep: &'static str,
    r_set: &'static [usize],
    group: u8,
    /// Tree parent and the star pair joining them.
    parent: Option<(usize, [usize; 2])>,
}

const fn cell(
    name: &'static str,
    notation: &'static str,
    rep: &'static str,
    r_set: &'static [usize],
    group: u8,
    parent: Option<(usize, [usize; 2])>,
) -> LabelData {
    LabelData { name, notation, rep, r_set, group, parent }
}

const LABELS: [LabelData; NUM_CELLS] = [
    cell("G012", "Γ₀₁₂", "012012", &[0, 1, 2], 1, None),
    cell("G013", "Γ₀₁₃", "0120123", &[0, 1, 3], 1, Some((2, [0, 2]))),
    cell("G2", "Γ₂", "01201232", &[2], 1, Some((0, [2, 3]))),
    cell("G23", "Γ₂₃", "012012323", &[2, 3], 2, Some((5, [0, 2]))),
    cell("G02", "Γ₀₂", "012012320", &[0, 2], 4, None),
    cell("G03", "Γ₀₃", "0120123203", &[0, 3], 2, None),
    cell("G12", "Γ₁₂", "012012321", &[1, 2], 4, Some((8, [0, 2]))),
    cell("G13", "Γ₁₃", "0120123213", &[1, 3], 2, Some((3, [1, 2]))),
    cell("G01", "Γ₀₁", "0120123201", &[0, 1], 4, Some((4, [1, 2]))),
    cell("G013p", "Γ′₀₁₃", "01201232013", &[0, 1, 3], 3, None),
    cell("G2p", "Γ′₂", "012012320132", &[2], 3, Some((9, [0, 2]))),
    cell("G3", "Γ₃", "0120123201323", &[3], 3, Some((9, [2, 3]))),
    cell("G02p", "Γ′₀₂", "01201232032", &[0, 2], 4, Some((4, [2, 3]))),
    cell("G01p", "Γ′₀₁", "012012320321", &[0, 1], 4, Some((12, [1, 2]))),
    cell("G12p", "Γ′₁₂", "01201232132", &[1, 2], 4, Some((6, [2, 3]))),
    cell("G01ph", "Γ̂′₀₁", "012012321320", &[0, 1], 4, Some((14, [0, 2]))),
    cell("G12pp", "Γ″₁₂", "0120123203212", &[1, 2], 4, Some((13, [0, 2]))),
    cell("G13p", "Γ′₁₃", "01201232032123", &[1, 3], 4, Some((18, [1, 2]))),
    cell("G2pp", "Γ″₂", "012012320321232", &[2], 4, Some((16, [2, 3]))),
    cell("G0", "Γ₀", "0120123203212320", &[0], 4, Some((18, [0, 2]))),
    cell("G02pp", "Γ″₀₂", "0120123213202", &[0, 2], 4, Some((15, [1, 2]))),
    cell("G03p", "Γ′₀₃", "01201232132023", &[0, 3], 4, Some((22, [0, 2]))),
    cell("G2pph", "Γ̂″₂", "012012321320232", &[2], 4, Some((20, [2, 3]))),
    cell("G1", "Γ₁", "0120123213202321", &[1], 4, Some((22, [1, 2]))),
];

/// Roots of the base intersections, in the order used to orient them.
const ROOTS: [usize; 4] = [0, 4, 5, 9];

/// One of the 24 left cells of `c`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeftCellLabel(u8);

impl LeftCellLabel {
    pub fn all() -> impl Iterator<Item = LeftCellLabel> {
        (0..NUM_CELLS as u8).map(LeftCellLabel)
    }

    pub fn from_index(i: usize) -> Option<LeftCellLabel> {
        (i < NUM_CELLS).then_some(LeftCellLabel(i as u8))
    }

    pub fn index(&self) -> usize {
        self.0 as usize
    }

    fn data(&self) -> &'static LabelData {
        &LABELS[self.0 as usize]
    }

    /// ASCII name such as `G13p`.
    pub fn name(&self) -> &'static str {
        self.data().name
    }

    /// Conventional notation such as `Γ′₁₃`.
    pub fn notation(&self) -> &'static str {
        self.data().notation
    }

    pub fn representative(&self) -> WeylElement {
        WeylElement::from_word(self.data().rep).expect("table words are valid")
    }

    pub fn r_set(&self) -> GenSet {
        GenSet::from_slice(self.data().r_set)
    }

    /// Index `k` of the group `Y_k` containing this cell.
    pub fn group(&self) -> u8 {
        self.data().group
    }

    /// Root of this cell's star tree.
    pub fn root(&self) -> LeftCellLabel {
        let mut c = *self;
        while let Some((p, _)) = c.data().parent {
            c = LeftCellLabel(p as u8);
        }
        c
    }

    pub fn parent(&self) -> Option<(LeftCellLabel, [usize; 2])> {
        self.data().parent.map(|(p, pair)| (LeftCellLabel(p as u8), pair))
    }

    /// Star pairs leading from the tree root to this cell.
    pub fn path_from_root(&self) -> Vec<[usize; 2]> {
        let mut out = Vec::new();
        let mut c = *self;
        while let Some((p, pair)) = c.parent() {
            out.push(pair);
            c = p;
        }
        out.reverse();
        out
    }

    pub fn is_root(&self) -> bool {
        self.data().parent.is_none()
    }

    /// Edges `(child, parent, pair)` of all four star graphs.
    pub fn graph_edges() -> Vec<(LeftCellLabel, LeftCellLabel, [usize; 2])> {
        LeftCellLabel::all().filter_map(|c| c.parent().map(|(p, pair)| (c, p, pair))).collect()
    }

    /// The cell holding `w`, decided by the window.
    pub fn of(w: &WeylElement, window: &CellWindow) -> Option<LeftCellLabel> {
        window.get(w).map(|p| p.col)
    }

    fn root_rank(&self) -> usize {
        ROOTS.iter().position(|r| *r == self.index()).expect("label is a root")
    }
}

impl fmt::Display for LeftCellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for LeftCellLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LeftCellLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<LeftCellLabel, Error> {
        LABELS
            .iter()
            .position(|d| d.name == s || d.notation == s)
            .map(|i| LeftCellLabel(i as u8))
            .ok_or_else(|| Error::UnknownLabel(s.to_string()))
    }
}

impl Serialize for LeftCellLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for LeftCellLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<LeftCellLabel, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A pair `{r, t}` of non-commuting simple reflections acting on one side.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct StarContext {
    pub r: usize,
    pub t: usize,
    pub side: Side,
    /// Order of `rt`.
    pub m: usize,
}

impl StarContext {
    pub fn new(r: usize, t: usize, side: Side) -> StarContext {
        assert!(r < RANK && t < RANK && r != t);
        let rt = WeylElement::generator(r).mul(&WeylElement::generator(t));
        let mut p = rt;
        let mut m = 1;
        while !p.is_identity() {
            p = p.mul(&rt);
            m += 1;
            assert!(m <= 6, "r{r}r{t} has infinite order");
        }
        assert!(m >= 3, "r{r} and r{t} commute");
        StarContext { r, t, side, m }
    }

    pub fn left(pair: [usize; 2]) -> StarContext {
        StarContext::new(pair[0], pair[1], Side::Left)
    }

    pub fn right(pair: [usize; 2]) -> StarContext {
        StarContext::new(pair[0], pair[1], Side::Right)
    }

    fn not_in_string(&self, x: &WeylElement) -> Error {
        Error::NotInString {
            element: x.to_string(),
            side: match self.side {
                Side::Left => "left",
                Side::Right => "right",
            },
            r: self.r,
            t: self.t,
        }
    }

    /// Writes `x = w·u` with `w` minimal in `w⟨r,t⟩`; returns `w`, the first letter of `u`
    /// and `l(u)`. Right-handed version; the left one goes through inverses.
    fn decompose_right(&self, x: &WeylElement) -> Result<(WeylElement, usize, usize), Error> {
        if x.is_right_descent(self.r) == x.is_right_descent(self.t) {
            return Err(self.not_in_string(x));
        }
        let mut w = *x;
        let mut k = 0;
        let mut last = self.r;
        loop {
            let s = if w.is_right_descent(self.r) {
                self.r
            } else if w.is_right_descent(self.t) {
                self.t
            } else {
                break;
            };
            w = w.rmul_gen(s);
            last = s;
            k += 1;
        }
        Ok((w, last, k))
    }

    fn alternate(&self, w: WeylElement, first: usize, n: usize) -> WeylElement {
        let other = if first == self.r { self.t } else { self.r };
        (0..n).fold(w, |acc, k| acc.rmul_gen(if k % 2 == 0 { first } else { other }))
    }

    /// The string through `x` and the 1-based position of `x` in it.
    pub fn string_through(&self, x: &WeylElement) -> Result<(Vec<WeylElement>, usize), Error> {
        match self.side {
            Side::Right => {
                let (w, f, k) = self.decompose_right(x)?;
                let s = (1..self.m).map(|n| self.alternate(w, f, n)).collect();
                Ok((s, k))
            }
            Side::Left => {
                let inv = StarContext { side: Side::Right, ..*self };
                let (s, k) = inv.string_through(&x.inverse()).map_err(|_| self.not_in_string(x))?;
                Ok((s.iter().map(|y| y.inverse()).collect(), k))
            }
        }
    }

    /// The `(m−i)`-th element of the string through `x`, where `x` is the `i`-th.
    pub fn star(&self, x: &WeylElement) -> Result<WeylElement, Error> {
        let (s, k) = self.string_through(x)?;
        Ok(s[self.m - 1 - k])
    }
}

/// `*(x^★) = (*x)^★` for a left and a right star.
pub fn commute_stars(x: &WeylElement, left: &StarContext, right: &StarContext) -> Result<WeylElement, Error> {
    assert!(left.side == Side::Left && right.side == Side::Right);
    let a = left.star(&right.star(x)?)?;
    let b = right.star(&left.star(x)?)?;
    assert_eq!(a, b, "left and right stars commute on {x}");
    Ok(a)
}

/// `max l(w_J)` over finite `J ⊆ L(w)` or `J ⊆ R(w)`; a lower bound for `a(w)`.
pub fn a_lower_bound(w: &WeylElement) -> usize {
    let mut best = 0;
    for d in [w.left_descents(), w.right_descents()] {
        for mask in 0..16u8 {
            let j = GenSet(mask);
            if !d.is_superset(j) || j.len() == RANK {
                continue;
            }
            if let Some(w0) = longest_parabolic(j) {
                best = best.max(w0.length());
            }
        }
    }
    best
}

/// `x_{i,j} = w₀₁₂ (τ r₃r₂r₀r₁r₂)^i (r₃r₂r₀r₁)^{2j}`.
pub fn x_ij(i: u32, j: u32) -> WeylElement {
    let mut w = WeylElement::from_word("012012").expect("valid word");
    let a = WeylElement::from_word("t32012").expect("valid word");
    let b = WeylElement::from_word("32013201").expect("valid word");
    for _ in 0..i {
        w = w.mul(&a);
    }
    for _ in 0..j {
        w = w.mul(&b);
    }
    w
}

/// Length of `x_{i,j}`.
pub fn x_ij_length(i: u32, j: u32) -> usize {
    6 + 5 * i as usize + 8 * j as usize
}

/// `x_{i,j}` or `τ·x_{i,j}`.
pub fn diagonal_base(i: u32, j: u32, eps: bool) -> WeylElement {
    let x = x_ij(i, j);
    if eps {
        tau().mul(&x)
    } else {
        x
    }
}

const LEFT23: [usize; 2] = [2, 3];

fn r(i: usize) -> WeylElement {
    WeylElement::generator(i)
}

fn root_names(row: usize, col: usize) -> String {
    format!("{}∩{}⁻¹", LABELS[col].name, LABELS[row].name)
}

/// The base element at `(row Θ, col Γ)` for root cells, built from `x = x_{i,j}` or `τx_{i,j}`.
/// Returns the element and the length budget its construction may remove.
fn base_element(row: LeftCellLabel, col: LeftCellLabel, x: WeylElement) -> (WeylElement, usize) {
    let (rr, cr) = (row.root_rank(), col.root_rank());
    if cr > rr {
        let (e, b) = base_element(col, row, x);
        return (e.inverse(), b);
    }
    let ls = StarContext::left(LEFT23);
    let rs = StarContext::right(LEFT23);
    let star_x = ls.star(&x).expect("x_{i,j} lies in a left {r2,r3}-string");
    let d02 = || {
        let both = rs.star(&star_x).expect("★x lies in a right {r2,r3}-string");
        r(0).mul(&both).mul(&r(0))
    };
    let d03 = || r(3).mul(&d02()).mul(&r(3));
    // budgets: a {r2,r3} star moves length by 2, a generator by 1
    match (rr, cr) {
        (0, 0) => (x, 0),
        (1, 0) => (r(0).mul(&star_x), 3),
        (2, 0) => (r(3).mul(&r(0)).mul(&star_x), 4),
        (3, 0) => (r(1).mul(&r(3)).mul(&r(0)).mul(&star_x), 5),
        (1, 1) => (d02(), 6),
        (2, 1) => (r(3).mul(&d02()), 7),
        (3, 1) => (r(1).mul(&r(3)).mul(&d02()), 8),
        (2, 2) => (d03(), 8),
        (3, 2) => (r(1).mul(&d03()), 9),
        (3, 3) => (r(1).mul(&d03()).mul(&r(1)), 10),
        _ => unreachable!(),
    }
}

fn path_budget(path: &[[usize; 2]]) -> usize {
    path.iter().map(|p| StarContext::right(*p).m - 2).sum()
}

/// A point of `c`: `element ∈ col ∩ row⁻¹`, with parameters `(i, j, ε)` of its base point.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct CellPoint {
    pub element: WeylElement,
    /// The left cell `Θ` with `element⁻¹ ∈ Θ`.
    pub row: LeftCellLabel,
    /// The left cell `Γ` containing `element`.
    pub col: LeftCellLabel,
    pub i: u32,
    pub j: u32,
    pub eps: bool,
}

impl CellPoint {
    /// The element at `(row, col)` with parameters `(i, j, ε)`, transported along the
    /// canonical star paths.
    pub fn from_params(row: LeftCellLabel, col: LeftCellLabel, i: u32, j: u32, eps: bool) -> CellPoint {
        let (element, _) = Self::build(row, col, i, j, eps);
        CellPoint { element, row, col, i, j, eps }
    }

    fn build(row: LeftCellLabel, col: LeftCellLabel, i: u32, j: u32, eps: bool) -> (WeylElement, usize) {
        let (mut e, mut budget) = base_element(row.root(), col.root(), diagonal_base(i, j, eps));
        let cpath = col.path_from_root();
        let rpath = row.path_from_root();
        for p in &cpath {
            e = StarContext::right(*p).star(&e).expect("star path stays in strings");
        }
        for p in &rpath {
            e = StarContext::left(*p).star(&e).expect("star path stays in strings");
        }
        budget += path_budget(&cpath) + path_budget(&rpath);
        (e, budget)
    }

    pub fn length(&self) -> usize {
        self.element.length()
    }

    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }

    /// The point for `element⁻¹`.
    pub fn inverse(&self) -> CellPoint {
        CellPoint::from_params(self.col, self.row, self.i, self.j, self.eps)
    }
}

impl fmt::Display for CellPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ∈ {}∩{}⁻¹ ({},{},{})",
            self.element,
            self.col,
            self.row,
            self.i,
            self.j,
            u8::from(self.eps)
        )
    }
}

/// Base intersection between two root cells, by label pair, as `Γ∩Θ⁻¹`.
pub fn cell_c_base_sets(gamma: &str, theta: &str, bound: u32) -> Result<Vec<CellPoint>, Error> {
    let col: LeftCellLabel = gamma.parse()?;
    let row: LeftCellLabel = theta.parse()?;
    if !col.is_root() || !row.is_root() {
        return Err(Error::UnknownBase(root_names(row.index(), col.index())));
    }
    let mut out = Vec::new();
    for s in 0..=bound {
        for i in 0..=s {
            for eps in [false, true] {
                out.push(CellPoint::from_params(row, col, i, s - i, eps));
            }
        }
    }
    Ok(out)
}

/// All points of `c` up to a length bound, indexed by element.
#[derive(Clone, Debug)]
pub struct CellWindow {
    max_len: usize,
    points: Vec<CellPoint>,
    index: HashMap<WeylElement, usize>,
}

impl CellWindow {
    pub fn enumerate(max_len: usize) -> CellWindow {
        let mut points = Vec::new();
        for row in LeftCellLabel::all() {
            for col in LeftCellLabel::all() {
                let (_, budget) = CellPoint::build(row, col, 0, 0, false);
                for j in 0u32.. {
                    if x_ij_length(0, j) > max_len + budget {
                        break;
                    }
                    for i in 0u32.. {
                        if x_ij_length(i, j) > max_len + budget {
                            break;
                        }
                        for eps in [false, true] {
                            let p = CellPoint::from_params(row, col, i, j, eps);
                            if p.length() <= max_len {
                                points.push(p);
                            }
                        }
                    }
                }
            }
        }
        points.sort_by_key(|p| (p.length(), p.element));
        let mut index = HashMap::with_capacity(points.len());
        for (k, p) in points.iter().enumerate() {
            if let Some(old) = index.insert(p.element, k) {
                panic!("{} parametrized twice: {} and {}", p.element, points[old], p);
            }
        }
        CellWindow { max_len, points, index }
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn points(&self) -> &[CellPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        self.index.contains_key(w)
    }

    pub fn get(&self, w: &WeylElement) -> Option<&CellPoint> {
        self.index.get(w).map(|&k| &self.points[k])
    }

    pub fn point(&self, w: &WeylElement) -> Result<&CellPoint, Error> {
        self.get(w).ok_or_else(|| Error::OutsideWindow(w.to_string()))
    }

    /// Points of `Γ∩Θ⁻¹`.
    pub fn block(&self, row: LeftCellLabel, col: LeftCellLabel) -> impl Iterator<Item = &CellPoint> {
        self.points.iter().filter(move |p| p.row == row && p.col == col)
    }

    /// Points of the left cell `Γ`.
    pub fn left_cell(&self, col: LeftCellLabel) -> impl Iterator<Item = &CellPoint> {
        self.points.iter().filter(move |p| p.col == col)
    }

    /// Looks up by parameters, failing if the point is longer than the window.
    pub fn by_params(&self, row: LeftCellLabel, col: LeftCellLabel, i: u32, j: u32, eps: bool) -> Result<&CellPoint, Error> {
        let p = CellPoint::from_params(row, col, i, j, eps);
        self.point(&p.element)
    }
}

/// `cell_c_enumerate`: the window of `c` up to `max_len`.
pub fn cell_c_enumerate(max_len: usize) -> CellWindow {
    CellWindow::enumerate(max_len)
}

/// `l(z) − a − 2δ(z)` for an element of `W′`; `None` outside `W′`.
pub fn distinguished_defect(table: &KlTable, z: &WeylElement) -> Option<i64> {
    let d = table.delta(z)?;
    Some(z.length() as i64 - A_VALUE as i64 - 2 * d as i64)
}

/// The distinguished involution of `Γ`: the unique involution `z ∈ Γ∩Γ⁻¹` with
/// `l(z) − 6 − 2δ(z) = 0`, searched among window points of length at most `search_len`.
pub fn distinguished_involution(
    table: &KlTable,
    window: &CellWindow,
    gamma: LeftCellLabel,
    search_len: usize,
) -> Result<WeylElement, Error> {
    let found = distinguished_candidates(table, window, gamma, search_len);
    match found.as_slice() {
        [z] => Ok(*z),
        [] => Err(Error::NotFound(gamma.name().to_string(), search_len)),
        many => panic!("{} distinguished involutions in {gamma}: {many:?}", many.len()),
    }
}

/// Every involution of `Γ∩Γ⁻¹` within `search_len` satisfying `l(z) − 6 − 2δ(z) = 0`.
pub fn distinguished_candidates(
    table: &KlTable,
    window: &CellWindow,
    gamma: LeftCellLabel,
    search_len: usize,
) -> Vec<WeylElement> {
    window
        .block(gamma, gamma)
        .filter(|p| p.length() <= search_len)
        .map(|p| p.element)
        .filter(|z| z.inverse() == *z && z.in_coxeter_part())
        .filter(|z| (z.length() - A_VALUE).is_multiple_of(2))
        .filter(|z| distinguished_defect(table, z) == Some(0))
        .collect()
}

/// Lusztig's identities between `a_ij = μ̃(x_i, y_j)` for two left strings `x`, `y`
/// with respect to the same pair, where `a_ij` is zero unless `x_i` and `y_j` have the
/// same left descents in the pair. Runs over all left strings in `W′` whose elements
/// have length `≤ max_len`; pairs of strings with no nonzero `μ̃` between them satisfy the
/// identities trivially and are not counted. Strings in `τW′` are the `τ`-conjugates
/// of strings in `W′`.
pub fn verify_string_mu_identities(table: &KlTable, max_len: usize) -> Vec<crate::report::CheckReport> {
    use crate::report::CheckReport;
    use std::collections::{BTreeSet, HashSet};

    let module = table.module(GenSet::default());
    module.ensure(max_len);
    let d = module.read_to(max_len);
    let ids: Vec<u32> = (0..d.len() as u32).filter(|&i| d.length(i) <= max_len).collect();
    let mut mu: HashMap<(u32, u32), i64> = HashMap::new();
    let mut nbrs: HashMap<u32, Vec<u32>> = HashMap::new();
    for &w in &ids {
        let lw = d.length(w);
        for &y in d.support(w) {
            let ly = d.length(y);
            if ly >= lw || (lw - ly).is_multiple_of(2) {
                continue;
            }
            let c = d.p(y, w).and_then(|p| p.get((lw - ly - 1) / 2).copied()).unwrap_or(0);
            if c != 0 {
                mu.insert((y, w), c);
                mu.insert((w, y), c);
                nbrs.entry(y).or_default().push(w);
                nbrs.entry(w).or_default().push(y);
            }
        }
    }

    let mut reports = Vec::new();
    for pair in [[0, 2], [1, 2], [2, 3]] {
        let ctx = StarContext::left(pair);
        let name = format!("mu-tilde string identities {{r{},r{}}} (m={})", pair[0], pair[1], ctx.m);
        let mut rep = CheckReport::new(name, max_len);
        let mut string_of: HashMap<u32, usize> = HashMap::new();
        let mut strings: Vec<Vec<u32>> = Vec::new();
        let mut seen: HashMap<WeylElement, usize> = HashMap::new();
        for &x in &ids {
            let e = d.elem(x);
            let Ok((s, _)) = ctx.string_through(&e) else { continue };
            if s.iter().any(|u| u.length() > max_len) {
                continue;
            }
            let k = *seen.entry(s[0]).or_insert_with(|| {
                strings.push(s.iter().map(|u| d.id(u).expect("string element in module")).collect());
                strings.len() - 1
            });
            string_of.insert(x, k);
        }
        let mask = GenSet::from_slice(&pair);
        let ldesc = |x: u32| d.elem(x).left_descents().intersection(mask);
        let mut done: HashSet<(usize, usize)> = HashSet::new();
        for (a, xs) in strings.iter().enumerate() {
            let partners: BTreeSet<usize> =
                xs.iter().flat_map(|x| nbrs.get(x).into_iter().flatten()).filter_map(|y| string_of.get(y).copied()).collect();
            for b in partners {
                if !done.insert((a, b)) {
                    continue;
                }
                let ys = &strings[b];
                let n = ctx.m - 1;
                let mut m = vec![vec![0i64; n]; n];
                for i in 0..n {
                    for j in 0..n {
                        if ldesc(xs[i]) == ldesc(ys[j]) {
                            m[i][j] = mu.get(&(xs[i], ys[j])).copied().unwrap_or(0);
                        }
                    }
                }
                let want: Vec<(i64, i64)> = if ctx.m == 3 {
                    vec![(m[0][0], m[1][1]), (m[0][1], m[1][0])]
                } else {
                    vec![
                        (m[0][0], m[2][2]),
                        (m[0][2], m[2][0]),
                        (m[1][1], m[0][0] + m[0][2]),
                        (m[0][1], m[1][0]),
                        (m[0][1], m[1][2]),
                        (m[0][1], m[2][1]),
                    ]
                };
                let x0 = d.elem(xs[0]);
                let y0 = d.elem(ys[0]);
                let ok = want.iter().all(|(p, q)| p == q);
                rep.compare(x0, y0, "identities hold".to_string(), if ok { "identities hold".to_string() } else { format!("{m:?}") });
            }
        }
        reports.push(rep);
    }
    reports
}


#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> WeylElement {
        WeylElement::from_word(s).unwrap()
    }

    #[test]
    fn trivial_strings() {
        let c = StarContext::left([2, 3]);
        assert_eq!(c.m, 4);
        let (s, k) = c.string_through(&w("2")).unwrap();
        assert_eq!(s, vec![w("2"), w("32"), w("232")]);
        assert_eq!(k, 1);
        assert_eq!(c.star(&w("2")).unwrap(), w("232"));
        let c = StarContext::left([0, 2]);
        assert_eq!(c.m, 3);
        let (s, k) = c.string_through(&w("0")).unwrap();
        assert_eq!(s, vec![w("0"), w("20")]);
        assert_eq!(k, 1);
        assert!(c.string_through(&w("")).is_err());
        assert!(c.string_through(&w("020")).is_err());
    }

    #[test]
    fn labels_parse() {
        for c in LeftCellLabel::all() {
            assert_eq!(c.name().parse::<LeftCellLabel>().unwrap(), c);
            assert_eq!(c.notation().parse::<LeftCellLabel>().unwrap(), c);
        }
        assert!("G99".parse::<LeftCellLabel>().is_err());
    }

    #[test]
    fn a_bounds() {
        assert_eq!(a_lower_bound(&w("012012")), 6);
        assert_eq!(a_lower_bound(&w("1")), 1);
        assert_eq!(a_lower_bound(&w("")), 0);
    }
}
