//! Products in the `C`-basis computed inside parabolic modules.

use std::collections::{BTreeMap, HashMap};

use crate::hecke::kl::{KlTable, ModuleData, ParabolicModule};
use crate::weyl::{parabolic_elements, tau, GenSet, WeylElement, RANK};
use crate::Laurent;

/// A vector `Σ h_w C_w` of a parabolic module, sorted by module id.
pub type ModVec = Vec<(u32, Laurent)>;

fn qpoly_to_v(p: &[i64], shift: i32) -> Laurent {
    Laurent::from_terms(p.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (2 * i as i32 + shift, c)))
}

fn collect(acc: HashMap<u32, Laurent>) -> ModVec {
    let mut out: ModVec = acc.into_iter().filter(|(_, p)| !p.is_zero()).collect();
    out.sort_unstable_by_key(|e| e.0);
    out
}

fn add_into(acc: &mut HashMap<u32, Laurent>, id: u32, p: &Laurent, c: i64, k: i32) {
    acc.entry(id).or_default().add_scaled_shifted(p, &c, k);
}

/// `T̃_s·h` using `T̃_s C_w = v C_w` if `sw < w`, else `C_{sw} + Σ μ(z,w) C_z − v⁻¹ C_w`.
pub fn apply_t_tilde(d: &ModuleData, h: &[(u32, Laurent)], s: usize) -> ModVec {
    let mut acc: HashMap<u32, Laurent> = HashMap::with_capacity(h.len() * 2);
    let mut edges = Vec::new();
    for (w, c) in h {
        if !d.is_up(*w, s) {
            add_into(&mut acc, *w, c, 1, 1);
        } else {
            add_into(&mut acc, d.up(*w, s), c, 1, 0);
            d.mu_edges(*w, s, &mut edges);
            for &(z, m) in &edges {
                add_into(&mut acc, z, c, m, 0);
            }
            add_into(&mut acc, *w, c, -1, -1);
        }
    }
    collect(acc)
}

/// `T̃_s⁻¹·h = T̃_s·h − (v − v⁻¹)·h`.
pub fn apply_t_tilde_inv(d: &ModuleData, h: &[(u32, Laurent)], s: usize) -> ModVec {
    let mut acc: HashMap<u32, Laurent> = apply_t_tilde(d, h, s).into_iter().collect();
    for (w, c) in h {
        add_into(&mut acc, *w, c, -1, 1);
        add_into(&mut acc, *w, c, 1, -1);
    }
    collect(acc)
}

/// A letter of a signed word in `T̃_s^{±1}` and `T_τ`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SignedLetter {
    T(usize),
    TInv(usize),
    Tau,
}

/// Applies a product of letters (leftmost letter applied last) to `C_y`.
///
/// Returns the `C`-coefficients, including the `τ`-twist.
pub fn act_on_c(table: &KlTable, letters: &[SignedLetter], y: &WeylElement) -> BTreeMap<WeylElement, Laurent> {
    let (ty, y1) = y.split_tau();
    let j = y1.right_descents();
    let m = table.module(j);
    let steps = letters.iter().filter(|l| !matches!(l, SignedLetter::Tau)).count();
    m.ensure(y1.length() + steps);
    let d = m.read();
    let mut h: ModVec = vec![(d.id(&y1).expect("y in its module"), Laurent::one())];
    let mut flip = false;
    let sigma = |s: usize| match s {
        0 => 1,
        1 => 0,
        s => s,
    };
    for l in letters.iter().rev() {
        match *l {
            SignedLetter::Tau => flip = !flip,
            SignedLetter::T(s) => h = apply_t_tilde(&d, &h, if flip { sigma(s) } else { s }),
            SignedLetter::TInv(s) => h = apply_t_tilde_inv(&d, &h, if flip { sigma(s) } else { s }),
        }
    }
    let t = tau();
    h.into_iter()
        .map(|(id, c)| {
            let w = d.elem(id);
            (if flip ^ ty { t.mul(&w) } else { w }, c)
        })
        .collect()
}

/// Coset maximum of `a` in `a·W_K`.
fn right_coset_max(mut a: WeylElement, k: GenSet) -> WeylElement {
    'walk: loop {
        for t in k.iter() {
            let at = a.rmul_gen(t);
            if at.length() > a.length() {
                a = at;
                continue 'walk;
            }
        }
        return a;
    }
}

/// `Σ_{c ∈ W_K} v^{2l(c)}`.
pub fn poincare(k: GenSet) -> Laurent {
    Laurent::from_terms(parabolic_elements(k).iter().map(|c| (2 * c.length() as i32, 1)))
}

/// Lengths of the modules a product `C_x·C_y` needs, as `(J, len)` pairs.
pub fn product_requirements(x: &WeylElement, y: &WeylElement) -> [(GenSet, usize); 2] {
    let (_, x1) = x.split_tau();
    let (_, y1) = y.split_tau();
    [(y1.right_descents(), x1.length() + y1.length()), (x1.right_descents(), x1.length())]
}

/// Structure constants `h_{x,y,z}` of `C_x·C_y = Σ h_{x,y,z} C_z`.
///
/// Writes `C_x = v^{-l(x)} Σ_{a ∈ W^K, a ≤ x} P_{a,x} T_a · Σ_{c ∈ W_K} T_c` with
/// `K = R(x) ∩ L(y)`, so the right factor acts on `C_y` by a scalar and the
/// left one by a walk over the minimal coset representatives.
pub fn c_product(table: &KlTable, x: &WeylElement, y: &WeylElement) -> BTreeMap<WeylElement, Laurent> {
    let (ta, x1) = x.split_tau();
    let (tb, y1) = y.split_tau();
    let x2 = if tb { x1.tau_conjugate() } else { x1 };
    let twist = ta ^ tb;

    let jy = y1.right_descents();
    let kx = x2.right_descents();
    let k1 = kx.intersection(y1.left_descents());
    let my = table.module(jy);
    let mx = table.module(kx);
    let lx = x2.length();
    my.ensure(lx + y1.length());
    mx.ensure(lx);
    let dy = my.read();
    let dx = mx.read();
    let xid = dx.id(&x2).expect("x in its module");

    let mut acc: HashMap<u32, Laurent> = HashMap::new();
    let start: ModVec = vec![(dy.id(&y1).expect("y in its module"), Laurent::one())];
    let ctx = Walk { dx: &dx, xid, kx, dy: &dy, k1 };
    ctx.walk(WeylElement::IDENTITY, start, &mut acc);

    let scale = poincare(k1).shift(-(lx as i32));
    let t = tau();
    let mut out = BTreeMap::new();
    for (id, c) in acc {
        if c.is_zero() {
            continue;
        }
        let w = dy.elem(id);
        out.insert(if twist { t.mul(&w) } else { w }, c.mul_ref(&scale));
    }
    out
}

struct Walk<'a> {
    dx: &'a ModuleData,
    xid: u32,
    kx: GenSet,
    dy: &'a ModuleData,
    k1: GenSet,
}

impl Walk<'_> {
    /// `a ≤ x`, decided through the coset maximum of `a` in `E_{R(x)}`.
    fn below_x(&self, a: &WeylElement) -> Option<u32> {
        let id = self.dx.id(&right_coset_max(*a, self.kx))?;
        self.dx.leq(id, self.xid).then_some(id)
    }

    fn walk(&self, a: WeylElement, h: ModVec, acc: &mut HashMap<u32, Laurent>) {
        if let Some(aid) = self.below_x(&a) {
            if let Some(p) = self.dx.p(aid, self.xid) {
                let p = qpoly_to_v(p, a.length() as i32);
                for (z, c) in &h {
                    acc.entry(*z).or_default().add_assign_ref(&c.mul_ref(&p));
                }
            }
        }
        let la = a.length();
        for s in 0..RANK {
            let sa = a.lmul_gen(s);
            if sa.length() < la {
                continue;
            }
            // canonical parent: the smallest left descent of the child
            if sa.left_descents().first() != Some(s) {
                continue;
            }
            if self.k1.iter().any(|t| sa.is_right_descent(t)) {
                continue;
            }
            if self.below_x(&sa).is_none() {
                continue;
            }
            let hs = apply_t_tilde(self.dy, &h, s);
            self.walk(sa, hs, acc);
        }
    }
}

/// Ensures all modules needed by a batch of products, so parallel callers only read.
pub fn prepare_products(table: &KlTable, pairs: &[(WeylElement, WeylElement)]) {
    let mut need: BTreeMap<GenSet, usize> = BTreeMap::new();
    for (x, y) in pairs {
        for (j, l) in product_requirements(x, y) {
            let e = need.entry(j).or_insert(0);
            *e = (*e).max(l);
        }
    }
    for (j, l) in need {
        table.module(j).ensure(l);
    }
}

/// Module for a descent set, for callers that want direct access.
pub fn module_for(table: &KlTable, j: GenSet) -> std::sync::Arc<ParabolicModule> {
    table.module(j)
}
