//! Kazhdan–Lusztig polynomials on parabolic modules.
//!
//! For a finite parabolic `W_J` the module `E_J = {w ∈ W′ : R(w) ⊇ J}` is
//! stable under the KL recursion and carries the left `C`-action. Columns are
//! stored only at extremal rows `y` with `L(y) ⊇ L(w)`; every other entry
//! follows from `P_{y,w} = P_{sy,w}` for `s ∈ L(w)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use parking_lot::{Mutex, RwLock, RwLockReadGuard};
use rayon::prelude::*;

use crate::weyl::{longest_parabolic, GenSet, WeylElement, RANK};

/// A polynomial in `q`, little-endian coefficients without trailing zeros.
pub type QPoly = Vec<i64>;

pub(crate) const STAY: u32 = u32::MAX;
pub(crate) const BEYOND: u32 = u32::MAX - 1;

#[derive(Default)]
struct PolyPool {
    polys: Vec<QPoly>,
    index: HashMap<QPoly, u32>,
}

impl PolyPool {
    fn intern(&mut self, p: QPoly) -> u32 {
        if let Some(&i) = self.index.get(&p) {
            return i;
        }
        let i = self.polys.len() as u32;
        self.polys.push(p.clone());
        self.index.insert(p, i);
        i
    }
}

/// One KL column: the Bruhat support, extremal entries and the `μ`-edges.
#[derive(Default, Clone)]
pub(crate) struct Column {
    pub support: Vec<u32>,
    pub ext: Vec<(u32, u32)>,
    pub mu: Vec<(u32, i64)>,
}

struct RawColumn {
    support: Vec<u32>,
    ext: Vec<(u32, QPoly)>,
    mu: Vec<(u32, i64)>,
}

/// Element data and KL columns of `E_J` up to a length bound.
pub struct ModuleData {
    pub(crate) elems: Vec<WeylElement>,
    pub(crate) lens: Vec<u16>,
    pub(crate) ldesc: Vec<u8>,
    pub(crate) left: Vec<[u32; RANK]>,
    index: HashMap<WeylElement, u32>,
    top_layer_start: usize,
    enumerated: usize,
    pub(crate) cols: Vec<Column>,
    pool: PolyPool,
}

/// The parabolic module `E_J` with lazily grown KL data.
pub struct ParabolicModule {
    pub j: GenSet,
    pub top: WeylElement,
    data: RwLock<ModuleData>,
    grow: Mutex<()>,
}

fn poly_add_shift(acc: &mut QPoly, p: &[i64], c: i64, k: usize) {
    if p.is_empty() || c == 0 {
        return;
    }
    if acc.len() < p.len() + k {
        acc.resize(p.len() + k, 0);
    }
    for (i, &a) in p.iter().enumerate() {
        acc[i + k] = acc[i + k].checked_add(a.checked_mul(c).expect("overflow")).expect("overflow");
    }
}

fn trim(p: &mut QPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

impl ModuleData {
    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn id(&self, w: &WeylElement) -> Option<u32> {
        self.index.get(w).copied()
    }

    pub fn elem(&self, id: u32) -> WeylElement {
        self.elems[id as usize]
    }

    pub fn length(&self, id: u32) -> usize {
        self.lens[id as usize] as usize
    }

    pub fn enumerated_length(&self) -> usize {
        self.enumerated
    }

    /// True if `s·y > y`.
    #[inline]
    pub(crate) fn is_up(&self, y: u32, s: usize) -> bool {
        self.ldesc[y as usize] >> s & 1 == 0
    }

    /// The element `s·y` when it lies in the module and is longer than `y`.
    #[inline]
    pub(crate) fn up(&self, y: u32, s: usize) -> u32 {
        let u = self.left[y as usize][s];
        assert!(u != BEYOND, "module bound exceeded at {:?}", self.elems[y as usize]);
        u
    }

    /// Reduces `y` to the extremal row for the descent set `mask`.
    fn extremal(&self, mut y: u32, mask: u8, max_len: usize) -> Option<u32> {
        'outer: loop {
            if self.lens[y as usize] as usize > max_len {
                return None;
            }
            for t in 0..RANK {
                if mask >> t & 1 == 1 && self.is_up(y, t) {
                    let u = self.left[y as usize][t];
                    if u == BEYOND {
                        return None;
                    }
                    y = u;
                    continue 'outer;
                }
            }
            return Some(y);
        }
    }

    /// `P_{y,w}` for module ids, as an interned polynomial.
    pub fn p(&self, y: u32, w: u32) -> Option<&QPoly> {
        let lw = self.lens[w as usize] as usize;
        let y = self.extremal(y, self.ldesc[w as usize], lw)?;
        let col = &self.cols[w as usize];
        col.ext.binary_search_by_key(&y, |e| e.0).ok().map(|i| &self.pool.polys[col.ext[i].1 as usize])
    }

    /// `y ≤ w` for module ids.
    pub fn leq(&self, y: u32, w: u32) -> bool {
        self.cols[w as usize].support.binary_search(&y).is_ok()
    }

    /// Bruhat support of the column of `w`.
    pub fn support(&self, w: u32) -> &[u32] {
        &self.cols[w as usize].support
    }

    /// The set `{z < w : s·z < z, μ(z,w) ≠ 0}` with multiplicities, for `s ∉ L(w)`.
    pub(crate) fn mu_edges(&self, w: u32, s: usize, out: &mut Vec<(u32, i64)>) {
        out.clear();
        let d = self.ldesc[w as usize];
        for t in 0..RANK {
            if d >> t & 1 == 1 {
                let z = self.left[w as usize][t];
                if z != STAY && !self.is_up(z, s) {
                    out.push((z, 1));
                }
            }
        }
        for &(z, m) in &self.cols[w as usize].mu {
            if !self.is_up(z, s) {
                out.push((z, m));
            }
        }
    }

    fn compute_column(&self, w: u32) -> RawColumn {
        if w == 0 {
            return RawColumn { support: vec![0], ext: vec![(0, vec![1])], mu: vec![] };
        }
        let wi = w as usize;
        let (s, v) = (0..RANK)
            .find_map(|s| {
                let u = self.left[wi][s];
                (u != STAY && u < w).then_some((s, u))
            })
            .expect("non-minimal module element has a descent inside the module");
        let lw = self.lens[wi] as usize;
        let mut support: Vec<u32> = self.cols[v as usize].support.clone();
        for &y in &self.cols[v as usize].support {
            if self.is_up(y, s) {
                support.push(self.up(y, s));
            }
        }
        support.sort_unstable();
        support.dedup();

        let mut medges = Vec::new();
        self.mu_edges(v, s, &mut medges);

        let dmask = self.ldesc[wi];
        let mut ext = Vec::new();
        let mut mu = Vec::new();
        for &y in &support {
            if (0..RANK).any(|t| dmask >> t & 1 == 1 && self.is_up(y, t)) {
                continue;
            }
            let p = if y == w {
                vec![1]
            } else {
                let sy = match self.left[y as usize][s] {
                    STAY => y,
                    u => u,
                };
                let mut p = QPoly::new();
                if let Some(a) = self.p(sy, v) {
                    poly_add_shift(&mut p, a, 1, 0);
                }
                if let Some(b) = self.p(y, v) {
                    poly_add_shift(&mut p, b, 1, 1);
                }
                for &(z, m) in &medges {
                    if let Some(c) = self.p(y, z) {
                        let lz = self.lens[z as usize] as usize;
                        poly_add_shift(&mut p, c, -m, (lw - lz) / 2);
                    }
                }
                trim(&mut p);
                p
            };
            if p.is_empty() {
                continue;
            }
            if y != w {
                let d = lw - self.lens[y as usize] as usize;
                debug_assert!(p.iter().all(|&c| c >= 0), "negative KL coefficient");
                debug_assert!(2 * (p.len() - 1) < d, "KL degree bound violated");
                if d % 2 == 1 {
                    let k = (d - 1) / 2;
                    if p.len() > k && p[k] != 0 {
                        mu.push((y, p[k]));
                    }
                }
            }
            ext.push((y, p));
        }
        RawColumn { support, ext, mu }
    }
}

impl ParabolicModule {
    fn new(j: GenSet) -> ParabolicModule {
        let top = longest_parabolic(j).expect("parabolic subgroup must be finite");
        let mut data = ModuleData {
            elems: vec![top],
            lens: vec![top.length() as u16],
            ldesc: vec![0],
            left: vec![[BEYOND; RANK]],
            index: HashMap::from([(top, 0)]),
            top_layer_start: 0,
            enumerated: top.length(),
            cols: Vec::new(),
            pool: PolyPool::default(),
        };
        data.ldesc[0] = top.left_descents().0;
        for s in 0..RANK {
            if data.ldesc[0] >> s & 1 == 1 {
                let z = top.lmul_gen(s);
                data.left[0][s] = data.index.get(&z).copied().unwrap_or(STAY);
            }
        }
        ParabolicModule { j, top, data: RwLock::new(data), grow: Mutex::new(()) }
    }

    /// Grows the module so that every element of length `≤ len` has its column.
    ///
    /// Must not be called while the caller holds a read guard of this module.
    pub fn ensure(&self, len: usize) {
        {
            let d = self.data.read();
            if d.enumerated >= len && d.cols.len() == d.elems.len() {
                return;
            }
        }
        let _g = self.grow.lock();
        {
            let mut d = self.data.write();
            while d.enumerated < len {
                Self::extend_layer(&mut d);
            }
        }
        // Columns of one length depend only on shorter ones.
        loop {
            let (k, e) = {
                let d = self.data.read();
                let k = d.cols.len();
                if k == d.elems.len() {
                    break;
                }
                let l = d.lens[k];
                let mut e = k;
                while e < d.elems.len() && d.lens[e] == l {
                    e += 1;
                }
                (k, e)
            };
            let raws: Vec<RawColumn> = {
                let d = self.data.read();
                let data: &ModuleData = &d;
                // Installing from a plain thread blocks without stealing outer jobs,
                // which could otherwise re-enter `ensure` while `grow` is held.
                std::thread::scope(|s| {
                    s.spawn(|| growth_pool().install(|| (k..e).into_par_iter().map(|w| data.compute_column(w as u32)).collect()))
                        .join()
                        .expect("column worker panicked")
                })
            };
            let mut d = self.data.write();
            for r in raws {
                let ext = r.ext.into_iter().map(|(y, p)| (y, d.pool.intern(p))).collect();
                d.cols.push(Column { support: r.support, ext, mu: r.mu });
            }
        }
    }

    fn extend_layer(d: &mut ModuleData) {
        let start = d.top_layer_start;
        let end = d.elems.len();
        let mut fresh: Vec<WeylElement> = Vec::new();
        for y in start..end {
            for s in 0..RANK {
                if d.ldesc[y] >> s & 1 == 0 {
                    fresh.push(d.elems[y].lmul_gen(s));
                }
            }
        }
        fresh.sort_unstable();
        fresh.dedup();
        let new_len = d.enumerated + 1;
        for z in &fresh {
            debug_assert_eq!(z.length(), new_len);
            let id = d.elems.len() as u32;
            d.elems.push(*z);
            d.lens.push(new_len as u16);
            d.index.insert(*z, id);
        }
        for y in start..end {
            for s in 0..RANK {
                if d.ldesc[y] >> s & 1 == 0 {
                    let z = d.elems[y].lmul_gen(s);
                    d.left[y][s] = d.index[&z];
                }
            }
        }
        for id in end..d.elems.len() {
            let z = d.elems[id];
            let mut row = [BEYOND; RANK];
            let mut mask = 0u8;
            for (s, slot) in row.iter_mut().enumerate() {
                let sz = z.lmul_gen(s);
                if sz.length() < new_len {
                    mask |= 1 << s;
                    *slot = d.index.get(&sz).copied().unwrap_or(STAY);
                }
            }
            d.left.push(row);
            d.ldesc.push(mask);
        }
        d.top_layer_start = end;
        d.enumerated = new_len;
    }

    /// Read access after [`ensure`](Self::ensure).
    pub fn read(&self) -> RwLockReadGuard<'_, ModuleData> {
        self.data.read_recursive()
    }

    /// Read access with the module grown to `len`.
    pub fn read_to(&self, len: usize) -> RwLockReadGuard<'_, ModuleData> {
        self.ensure(len);
        self.data.read_recursive()
    }

    pub fn size(&self) -> usize {
        self.data.read().elems.len()
    }
}

/// Workers for column computation, separate from the global pool so that a
/// blocked grower never steals work that needs the same module.
fn growth_pool() -> &'static rayon::ThreadPool {
    static P: OnceLock<rayon::ThreadPool> = OnceLock::new();
    P.get_or_init(|| rayon::ThreadPoolBuilder::new().thread_name(|i| format!("kl-grow-{i}")).build().expect("thread pool"))
}

/// Registry of parabolic modules, one per finite `J`.
#[derive(Default)]
pub struct KlTable {
    modules: Mutex<HashMap<GenSet, Arc<ParabolicModule>>>,
    pub(crate) memo: Option<RwLock<HashMap<(WeylElement, WeylElement), QPoly>>>,
}

impl KlTable {
    pub fn new() -> KlTable {
        KlTable::default()
    }

    /// Process-wide shared table.
    pub fn global() -> &'static KlTable {
        static G: OnceLock<KlTable> = OnceLock::new();
        G.get_or_init(KlTable::new)
    }

    pub fn module(&self, j: GenSet) -> Arc<ParabolicModule> {
        self.modules.lock().entry(j).or_insert_with(|| Arc::new(ParabolicModule::new(j))).clone()
    }

    /// `P_{y,w}` as coefficients in `q`.
    pub fn kl_poly(&self, y: &WeylElement, w: &WeylElement) -> QPoly {
        let Some(memo) = &self.memo else { return self.kl_poly_computed(y, w) };
        if let Some(p) = memo.read().get(&(*y, *w)) {
            return p.clone();
        }
        let p = self.kl_poly_computed(y, w);
        memo.write().insert((*y, *w), p.clone());
        p
    }

    fn kl_poly_computed(&self, y: &WeylElement, w: &WeylElement) -> QPoly {
        let (ty, y) = y.split_tau();
        let (tw, w) = w.split_tau();
        if ty != tw || y.length() > w.length() {
            return vec![];
        }
        if y == w {
            return vec![1];
        }
        let j = w.right_descents();
        let m = self.module(j);
        let d = m.read_to(w.length());
        let wid = d.id(&w).expect("w lies in its own parabolic module");
        let mut ymax = y;
        'walk: loop {
            for t in j.iter() {
                let yt = ymax.rmul_gen(t);
                if yt.length() > ymax.length() {
                    ymax = yt;
                    continue 'walk;
                }
            }
            break;
        }
        match d.id(&ymax) {
            Some(yid) => d.p(yid, wid).cloned().unwrap_or_default(),
            None => vec![],
        }
    }

    /// `μ(y,w)` for `y < w`; zero otherwise.
    pub fn mu(&self, y: &WeylElement, w: &WeylElement) -> i64 {
        let (ly, lw) = (y.length(), w.length());
        if ly >= lw || (lw - ly) % 2 == 0 {
            return 0;
        }
        let p = self.kl_poly(y, w);
        p.get((lw - ly - 1) / 2).copied().unwrap_or(0)
    }

    /// The symmetric extension `μ̃`: `μ(y,w)` if `y < w`, `μ(w,y)` if `w < y`.
    pub fn mu_tilde(&self, y: &WeylElement, w: &WeylElement) -> i64 {
        if y.length() < w.length() {
            self.mu(y, w)
        } else {
            self.mu(w, y)
        }
    }

    /// `δ(z) = deg P_{e,z}`, or `None` when `P_{e,z} = 0` (`z` outside `W′`).
    pub fn delta(&self, z: &WeylElement) -> Option<usize> {
        let p = self.kl_poly(&WeylElement::IDENTITY, z);
        p.iter().rposition(|c| *c != 0)
    }
}
