//! Named verification suites over truncated windows of `c`.
//!
//! Every suite builds its own `KlTable` and window, so memory is released when it
//! returns. Windows are sized from the longest product a suite needs.

use std::collections::BTreeMap;

use crate::bijection::{
    verify_cyclic, verify_duality, verify_isomorphism, verify_path_independence, verify_round_trip,
    verify_transport, verify_unit,
};
use crate::cells::{
    distinguished_candidates, verify_string_mu_identities, x_ij, CellPoint, CellWindow, LeftCellLabel, StarContext,
};
use crate::error::Error;
use crate::hecke::{bernstein_s1, bernstein_s2, c_basis, c_product, central_times_c, s1_weights, s2_weights};
use crate::jring::{extract_row, verify_gamma_symmetries, verify_star_invariance, verify_string_sums, JElement, JRing};
use crate::report::CheckReport;
use crate::repring::{tensor, tensor_by_characters, IrrClass, VirtualRep};
use crate::weyl::{longest_parabolic, lower_interval, parabolic_elements, tau, GenSet, WeylElement};
use crate::{Hecke, HeckeElement, KlTable, Laurent};

/// Size parameters shared by the suites. `None` means the suite's default.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub max_len: Option<usize>,
    pub max_ij: Option<u32>,
}

/// Suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "coxeter",
    "kl",
    "eta",
    "lambda1-rule",
    "lambda2-rule",
    "bernstein",
    "repring",
    "diagonal",
    "bimodule",
    "stars",
    "involutions",
    "isomorphism",
    "all",
];

pub fn run_suite(name: &str, b: &Bounds) -> Result<Vec<CheckReport>, Error> {
    let ij = b.max_ij.unwrap_or(1);
    Ok(match name {
        "coxeter" => vec![coxeter()],
        "kl" => kl_sanity(b.max_len.unwrap_or(10)),
        "eta" => eta()?,
        "lambda1-rule" => vec![lambda_rule(1, ij)?],
        "lambda2-rule" => vec![lambda_rule(2, ij)?],
        "bernstein" => bernstein()?,
        "repring" => repring(b.max_ij.unwrap_or(4)),
        "diagonal" => diagonal_blocks(ij)?,
        "bimodule" => bimodule_blocks(ij, b.max_len.unwrap_or(BIMODULE_BUDGET))?,
        "stars" => stars(b.max_len.unwrap_or(12))?,
        "involutions" => involutions(b.max_len.unwrap_or(26), UNIT_BUDGET)?,
        "isomorphism" => {
            let mut out = diagonal_blocks(ij)?;
            out.extend(bimodule_blocks(ij, b.max_len.unwrap_or(BIMODULE_BUDGET))?);
            out.extend(window_bijection(b.max_len.unwrap_or(30)));
            out
        }
        "all" => {
            let mut out = Vec::new();
            for s in SUITES.iter().filter(|s| !matches!(**s, "all" | "isomorphism")) {
                out.extend(run_suite(s, b)?);
            }
            out.extend(window_bijection(30));
            out
        }
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

fn w(word: &str) -> WeylElement {
    WeylElement::from_word(word).expect("static word")
}

fn label(name: &str) -> LeftCellLabel {
    name.parse().expect("static label")
}

/// `(i, j)` with `i + j ≤ n`.
pub fn params(n: u32) -> Vec<(u32, u32)> {
    (0..=n).flat_map(|s| (0..=s).map(move |i| (i, s - i))).collect()
}

/// Points of the block at `(row, col)` with `i + j ≤ n`, for each listed `ε`.
pub fn block_sample(row: &str, col: &str, n: u32, eps: &[bool]) -> Vec<WeylElement> {
    let (r, c) = (label(row), label(col));
    params(n)
        .into_iter()
        .flat_map(|(i, j)| eps.iter().map(move |&e| CellPoint::from_params(r, c, i, j, e).element))
        .collect()
}

fn product_pairs(xs: &[WeylElement], ys: &[WeylElement]) -> Vec<(WeylElement, WeylElement)> {
    xs.iter().flat_map(|x| ys.iter().map(move |y| (*x, *y))).collect()
}

// ---------------------------------------------------------------------------------------
// group and KL basics

/// Orders of `rᵢrⱼ` and the relations of `τ`.
pub fn coxeter() -> CheckReport {
    let mut rep = CheckReport::new("Coxeter presentation", 0);
    let expected = [[1, 2, 3, 2], [2, 1, 3, 2], [3, 3, 1, 4], [2, 2, 4, 1]];
    for i in 0..4 {
        for j in 0..4 {
            let rr = WeylElement::generator(i).mul(&WeylElement::generator(j));
            let mut p = rr;
            let mut n = 1;
            while !p.is_identity() && n < 100 {
                p = p.mul(&rr);
                n += 1;
            }
            rep.compare(format!("r{i}r{j}"), "order", expected[i][j], n);
        }
        rep.compare(format!("r{i}"), "length", 1, WeylElement::generator(i).length());
    }
    let t = tau();
    rep.compare("tau", "length", 0, t.length());
    rep.compare("tau", "square", WeylElement::IDENTITY, t.mul(&t));
    for (i, j) in [(0, 1), (1, 0), (2, 2), (3, 3)] {
        let c = t.mul(&WeylElement::generator(i)).mul(&t);
        rep.compare(format!("tau r{i} tau"), "conjugate", WeylElement::generator(j), c);
    }
    rep
}

/// `P_{y,w₀₁₂} = 1` on the lower interval; the degree bound, `P_{y,w}(0) = 1` and the
/// Bruhat support against subword enumeration for `l(w) ≤ max_len`.
pub fn kl_sanity(max_len: usize) -> Vec<CheckReport> {
    let table = KlTable::new();
    let w012 = longest_parabolic(GenSet::from_slice(&[0, 1, 2])).expect("finite parabolic");
    let mut top = CheckReport::new("KL polynomials under w012", 6);
    let below = lower_interval(&w012);
    top.compare("w012", "interval size", 24, below.len());
    for y in &below {
        top.compare(y, "w012", "[1]".to_string(), format!("{:?}", table.kl_poly(y, &w012)));
    }

    let mut deg = CheckReport::new("KL degree bound", max_len);
    let mut sup = CheckReport::new("KL support is the Bruhat interval", max_len.min(8));
    let module = table.module(GenSet::default());
    module.ensure(max_len);
    let d = module.read_to(max_len);
    for wid in 0..d.len() as u32 {
        let lw = d.length(wid);
        if lw > max_len {
            continue;
        }
        let we = d.elem(wid);
        for &yid in d.support(wid) {
            let ly = d.length(yid);
            let p = d.p(yid, wid).cloned().unwrap_or_default();
            let ok = if yid == wid {
                p == vec![1]
            } else {
                p.first() == Some(&1) && p.len() <= (lw - ly - 1) / 2 + 1
            };
            deg.compare(d.elem(yid), we, true, ok);
        }
        if lw <= 8 {
            let mut from_module: Vec<WeylElement> = d.support(wid).iter().map(|&y| d.elem(y)).collect();
            let mut from_words: Vec<WeylElement> = lower_interval(&we).into_iter().collect();
            from_module.sort();
            from_words.sort();
            sup.compare(we, "support", format!("{from_words:?}"), format!("{from_module:?}"));
        }
    }
    vec![top, deg, sup]
}

/// `C_{w₀₁₂}² = η C_{w₀₁₂}` with `η = Σ_{u ∈ W₀₁₂} v^{2l(u)−6}`, and `γ = 1`.
pub fn eta() -> Result<Vec<CheckReport>, Error> {
    let table = KlTable::new();
    let w012 = w("012012");
    let eta = Laurent::from_terms(parabolic_elements(GenSet::from_slice(&[0, 1, 2])).iter().map(|u| (2 * u.length() as i32 - 6, 1)));
    let prod = c_product(&table, &w012, &w012);
    let mut rep = CheckReport::new("C_w012 squared", 6);
    let want: BTreeMap<WeylElement, Laurent> = [(w012, eta)].into_iter().collect();
    rep.compare("w012", "w012", format!("{want:?}"), format!("{prod:?}"));
    let window = CellWindow::enumerate(12);
    let row = extract_row(&window, &w012, &w012, &prod)?;
    let mut g = CheckReport::new("gamma of w012 squared", 12);
    g.compare("w012", "w012", JElement::basis(w012), JElement::from(&row));
    Ok(vec![rep, g])
}

// ---------------------------------------------------------------------------------------
// rows of t_{x_{1,0}} and t_{x_{0,1}}

/// Terms of `V(λ₁)·V(iλ₁+jλ₂)` or `V(λ₂)·V(iλ₁+jλ₂)` as `(a, b, multiplicity)`,
/// with negative indices dropped.
pub fn product_rule(which: u8, i: u32, j: u32) -> Vec<(u32, u32, i64)> {
    let (i, j) = (i as i64, j as i64);
    let raw: Vec<(i64, i64, i64)> = match which {
        1 => vec![(i + 1, j, 1), (i + 1, j - 1, 1), (i - 1, j + 1, 1), (i - 1, j, 1)],
        2 => vec![
            (i, j + 1, 1),
            (i + 2, j - 1, 1),
            (i, j, if i == 0 { 0 } else { 1 }),
            (i - 2, j + 1, 1),
            (i, j - 1, 1),
        ],
        _ => panic!("rule {which}"),
    };
    raw.into_iter().filter(|&(a, b, m)| a >= 0 && b >= 0 && m != 0).map(|(a, b, m)| (a as u32, b as u32, m)).collect()
}

/// The row of `t_{x_{1,0}}` (`which = 1`) or `t_{x_{0,1}}` (`which = 2`) against
/// `t_{x_{i,j}}` and `t_{τx_{i,j}}`, `i + j ≤ max_ij`, from raw Hecke products.
pub fn lambda_rule(which: u8, max_ij: u32) -> Result<CheckReport, Error> {
    let g = label("G012");
    let left = if which == 1 { x_ij(1, 0) } else { x_ij(0, 1) };
    let targets: Vec<(u32, u32, bool)> = params(max_ij).into_iter().flat_map(|(i, j)| [(i, j, false), (i, j, true)]).collect();
    let longest = targets.iter().map(|&(i, j, e)| CellPoint::from_params(g, g, i, j, e).length()).max().unwrap_or(0);
    let window = CellWindow::enumerate(left.length() + longest);
    let table = KlTable::new();
    let jr = JRing::new(&table, &window);
    let pairs: Vec<_> = targets.iter().map(|&(i, j, e)| (left, CellPoint::from_params(g, g, i, j, e).element)).collect();
    jr.prefetch(&pairs)?;
    let name = if which == 1 { "row of t_x10 (four-term rule)" } else { "row of t_x01 (five-term rule)" };
    let mut rep = CheckReport::new(name, window.max_len());
    for (&(i, j, e), (x, y)) in targets.iter().zip(&pairs) {
        let want = JElement::from_terms(
            product_rule(which, i, j).into_iter().map(|(a, b, m)| (CellPoint::from_params(g, g, a, b, e).element, m)),
        );
        let got = JElement::from(jr.row(x, y)?.as_ref());
        rep.compare(x, y, want, got);
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------------------
// Bernstein elements

/// `S_{x₁}`, `S_{x₂}` commute with every `C_{rᵢ}` and `T_τ`; `S·C_{w₀₁₂}` has the expected
/// coefficients on `c` and nothing else there.
pub fn bernstein() -> Result<Vec<CheckReport>, Error> {
    let table = KlTable::new();
    let mut central = CheckReport::new("Bernstein elements are central", 0);
    for (name, s) in [("S1", bernstein_s1::<i64>()), ("S2", bernstein_s2::<i64>())] {
        for i in 0..4 {
            let c: Hecke = c_basis(&table, &WeylElement::generator(i));
            central.compare(name, format!("C_r{i}"), format!("{:?}", s.t_mul(&c)), format!("{:?}", c.t_mul(&s)));
        }
        let t = HeckeElement::basis_element(crate::Basis::T, tau());
        central.compare(name, "T_tau", format!("{:?}", s.t_mul(&t)), format!("{:?}", t.t_mul(&s)));
    }

    let w012 = w("012012");
    let x10 = x_ij(1, 0);
    let x01 = x_ij(0, 1);
    let t = tau();
    let xi = Laurent::xi();
    let cases = [
        ("S1 C_w012", central_times_c(&table, &s1_weights(), 0, &w012), vec![(x10, Laurent::one()), (t.mul(&w012), -xi.clone())]),
        (
            "S2 C_w012",
            central_times_c(&table, &s2_weights(), 2, &w012),
            vec![(x01, Laurent::one()), (t.mul(&x10), -xi.clone()), (w012, Laurent::one())],
        ),
    ];
    let longest = cases.iter().flat_map(|c| c.1.keys()).map(|z| z.length()).max().unwrap_or(0);
    let window = CellWindow::enumerate(longest);
    let mut coeffs = CheckReport::new("Bernstein products on c", window.max_len());
    let mut residual = CheckReport::new("Bernstein residual support outside c", window.max_len());
    for (name, prod, want) in &cases {
        let want: BTreeMap<WeylElement, Laurent> = want.iter().cloned().collect();
        let on_c: BTreeMap<WeylElement, Laurent> =
            prod.iter().filter(|(z, _)| window.contains(z)).map(|(z, c)| (*z, c.clone())).collect();
        coeffs.compare(*name, "", format!("{want:?}"), format!("{on_c:?}"));
        for (z, c) in prod {
            let status = |ok: bool| if ok { "expected term or outside c".to_string() } else { format!("{c} on c") };
            residual.compare(*name, z, status(true), status(want.contains_key(z) || !window.contains(z)));
        }
    }
    Ok(vec![central, coeffs, residual])
}

// ---------------------------------------------------------------------------------------
// representation ring

/// Klimyk against characters, dimensions, the two product rules, commutativity and
/// associativity.
pub fn repring(bound: u32) -> Vec<CheckReport> {
    let irr = |n: u32| -> Vec<IrrClass> { (0..=n).flat_map(|a| (0..=n).map(move |b| IrrClass::new(a, b, false))).collect() };
    let all = irr(bound);
    let mut klimyk = CheckReport::new("Klimyk equals character subtraction", 0);
    let mut dims = CheckReport::new("dimension is multiplicative", 0);
    for x in &all {
        for y in &all {
            let t = tensor(x, y);
            klimyk.compare(x, y, tensor_by_characters(x, y), t.clone());
            dims.compare(x, y, x.dim() as i64 * y.dim() as i64, t.dim());
        }
    }
    let mut rules = CheckReport::new("product rules for V(l1) and V(l2)", 0);
    for which in [1u8, 2] {
        let v = if which == 1 { IrrClass::new(1, 0, false) } else { IrrClass::new(0, 1, false) };
        for i in 0..=3 {
            for j in 0..=3 {
                for eps in [false, true] {
                    let mut want = VirtualRep::zero();
                    for (a, b, m) in product_rule(which, i, j) {
                        want.add_term(IrrClass::new(a, b, eps), m);
                    }
                    rules.compare(v, IrrClass::new(i, j, eps), want, tensor(&v, &IrrClass::new(i, j, eps)));
                }
            }
        }
    }
    let small = irr(2);
    let mut ring = CheckReport::new("tensor is commutative and associative", 0);
    for x in &small {
        for y in &small {
            let xy = VirtualRep::irr(*x).mul(&VirtualRep::irr(*y));
            ring.compare(x, y, xy.clone(), VirtualRep::irr(*y).mul(&VirtualRep::irr(*x)));
            for z in &small {
                let l = xy.mul(&VirtualRep::irr(*z));
                let r = VirtualRep::irr(*x).mul(&VirtualRep::irr(*y).mul(&VirtualRep::irr(*z)));
                ring.compare(format!("{x}{y}"), z, l, r);
            }
        }
    }
    vec![klimyk, dims, rules, ring]
}

// ---------------------------------------------------------------------------------------
// the isomorphism on diagonal and bimodule blocks

type Map = Box<dyn Fn(&WeylElement) -> Result<WeylElement, Error>>;

fn lmul(word: &str) -> Map {
    let a = w(word);
    Box::new(move |x| Ok(a.mul(x)))
}

fn rmul(word: &str) -> Map {
    let a = w(word);
    Box::new(move |x| Ok(x.mul(&a)))
}

fn conj(left: &str, right: &str) -> Map {
    let (a, b) = (w(left), w(right));
    Box::new(move |x| Ok(a.mul(x).mul(&b)))
}

fn ident() -> Map {
    Box::new(|x| Ok(*x))
}

/// `x ↦ a·(★x)·b` or similar, with `★` the left or right `{r₂,r₃}` star.
fn starred(left: &'static str, lstar: bool, rstar: bool, right: &'static str) -> Map {
    let (a, b) = (w(left), w(right));
    let (ls, rs) = (StarContext::left([2, 3]), StarContext::right([2, 3]));
    Box::new(move |x| {
        let mut y = *x;
        if lstar {
            y = ls.star(&y)?;
        }
        if rstar {
            y = rs.star(&y)?;
        }
        Ok(a.mul(&y).mul(&b))
    })
}

fn pair_window(pairs: &[(WeylElement, WeylElement)]) -> usize {
    pairs.iter().map(|(x, y)| x.length() + y.length()).max().unwrap_or(0)
}

struct Transport {
    name: &'static str,
    pairs: Vec<(WeylElement, WeylElement)>,
    f: Map,
    g: Map,
    h: Map,
}

impl Transport {
    fn moved_length(&self) -> Result<usize, Error> {
        let mut m = pair_window(&self.pairs);
        for (x, y) in &self.pairs {
            m = m.max((self.f)(x)?.length() + (self.g)(y)?.length());
        }
        Ok(m)
    }

    fn run(&self, jr: &JRing) -> Result<CheckReport, Error> {
        verify_transport(jr, self.name, &self.pairs, &self.f, &self.g, &self.h)
    }
}

/// Multiplicativity of `π` on the four root diagonal blocks and the conjugation
/// identities relating them, at `i + j ≤ max_ij`. `ε` runs over both values in the
/// left factor; the right factor is untwisted except on the `Γ₀₁₂` block.
pub fn diagonal_blocks(max_ij: u32) -> Result<Vec<CheckReport>, Error> {
    let both = [false, true];
    let plain = [false];
    let d012 = block_sample("G012", "G012", max_ij, &both);
    let d012p = block_sample("G012", "G012", max_ij, &plain);
    let d02 = block_sample("G02", "G02", max_ij, &both);
    let d02p = block_sample("G02", "G02", max_ij, &plain);
    let d03 = block_sample("G03", "G03", max_ij, &both);
    let d03p = block_sample("G03", "G03", max_ij, &plain);
    let d013 = block_sample("G013p", "G013p", max_ij, &both);
    let d013p = block_sample("G013p", "G013p", max_ij, &plain);

    let iso: Vec<(&str, Vec<(WeylElement, WeylElement)>)> = vec![
        ("pi multiplicative on G012 x G012", product_pairs(&d012, &d012)),
        ("pi multiplicative on G02 x G02", product_pairs(&d02, &d02p)),
        ("pi multiplicative on G03 x G03", product_pairs(&d03, &d03p)),
        ("pi multiplicative on G013p x G013p", product_pairs(&d013, &d013p)),
    ];
    let left_r3: Vec<WeylElement> = d02.iter().map(|x| x.mul(&w("3"))).collect();
    let conj_r3: Vec<WeylElement> = d02p.iter().map(|z| w("3").mul(z).mul(&w("3"))).collect();
    let left_r1: Vec<WeylElement> = d03.iter().map(|x| x.mul(&w("1"))).collect();
    let conj_r1: Vec<WeylElement> = d03p.iter().map(|z| w("1").mul(z).mul(&w("1"))).collect();
    let transports = vec![
        Transport {
            name: "star conjugation on G012 block",
            pairs: product_pairs(&d012, &d012p),
            f: starred("", true, true, ""),
            g: starred("", true, true, ""),
            h: starred("", true, true, ""),
        },
        Transport {
            name: "r0 star conjugation G012 -> G02",
            pairs: product_pairs(&d012, &d012p),
            f: starred("0", true, true, "0"),
            g: starred("0", true, true, "0"),
            h: starred("0", true, true, "0"),
        },
        Transport { name: "r3 x, y r3 on G02 block", pairs: product_pairs(&d02, &d02p), f: lmul("3"), g: rmul("3"), h: conj("3", "3") },
        Transport { name: "r3 on the left of x r3", pairs: product_pairs(&left_r3, &conj_r3), f: lmul("3"), g: ident(), h: lmul("3") },
        Transport { name: "r3 conjugation G02 -> G03", pairs: product_pairs(&d02, &d02p), f: conj("3", "3"), g: conj("3", "3"), h: conj("3", "3") },
        Transport { name: "r1 x, y r1 on G03 block", pairs: product_pairs(&d03, &d03p), f: lmul("1"), g: rmul("1"), h: conj("1", "1") },
        Transport { name: "r1 on the left of x r1", pairs: product_pairs(&left_r1, &conj_r1), f: lmul("1"), g: ident(), h: lmul("1") },
        Transport { name: "r1 conjugation G03 -> G013p", pairs: product_pairs(&d03, &d03p), f: conj("1", "1"), g: conj("1", "1"), h: conj("1", "1") },
    ];
    // cyclic forms: γ(r x, y r, r z r) read again from the row of (y r, r z⁻¹ r)
    let cyc = |xs: &[WeylElement], zs: &[WeylElement], r: &str| -> Vec<(WeylElement, WeylElement, WeylElement)> {
        let r = w(r);
        let mut out = Vec::new();
        for x in xs {
            for y in zs {
                for z in zs {
                    out.push((r.mul(x), y.mul(&r), r.mul(z).mul(&r)));
                }
            }
        }
        out
    };
    let cyclic = [("cyclic form at G03", cyc(&d02, &d02p, "3")), ("cyclic form at G013p", cyc(&d03, &d03p, "1"))];

    let mut len = iso.iter().map(|(_, p)| pair_window(p)).max().unwrap_or(0);
    for t in &transports {
        len = len.max(t.moved_length()?);
    }
    for (_, tr) in &cyclic {
        for (a, b, c) in tr {
            len = len.max(a.length() + b.length()).max(b.length() + c.length());
        }
    }
    let window = CellWindow::enumerate(len);
    let table = KlTable::new();
    let jr = JRing::new(&table, &window);
    let mut out = Vec::new();
    for (name, pairs) in &iso {
        let mut r = verify_isomorphism(&jr, pairs)?;
        r.check = name.to_string();
        out.push(r);
    }
    for t in &transports {
        out.push(t.run(&jr)?);
    }
    for (name, tr) in &cyclic {
        out.push(verify_cyclic(&jr, name, tr)?);
    }
    Ok(out)
}

/// Default length budget for products in the bimodule suite.
pub const BIMODULE_BUDGET: usize = 32;

/// Transport identities between the base intersections and composition of `π` across
/// Y-groups. Pairs whose products exceed `budget` in length are left out, except for
/// the base transports over `Γ₀₁₂`, which are always run in full.
pub fn bimodule_blocks(max_ij: u32, budget: usize) -> Result<Vec<CheckReport>, Error> {
    let both = [false, true];
    let plain = [false];
    let d012 = block_sample("G012", "G012", max_ij, &both);
    let d012p = block_sample("G012", "G012", max_ij, &plain);
    let base = product_pairs(&d012, &d012p);

    let mut transports = vec![
        Transport { name: "r0*x against y", pairs: base.clone(), f: starred("0", true, false, ""), g: ident(), h: starred("0", true, false, "") },
        Transport {
            name: "r0*x against y*r0",
            pairs: base.clone(),
            f: starred("0", true, false, ""),
            g: starred("", false, true, "0"),
            h: starred("0", true, true, "0"),
        },
        Transport {
            name: "r0*x against y*r0r3",
            pairs: base.clone(),
            f: starred("0", true, false, ""),
            g: starred("", false, true, "03"),
            h: starred("0", true, true, "03"),
        },
        Transport {
            name: "r0*x against y*r0r3r1",
            pairs: base.clone(),
            f: starred("0", true, false, ""),
            g: starred("", false, true, "031"),
            h: starred("0", true, true, "031"),
        },
        Transport {
            name: "x*r0 against r0*y",
            pairs: base.clone(),
            f: starred("", false, true, "0"),
            g: starred("0", true, false, ""),
            h: ident(),
        },
        Transport {
            name: "r0*x*r0 against r0*y",
            pairs: base.clone(),
            f: starred("0", true, true, "0"),
            g: starred("0", true, false, ""),
            h: starred("0", true, false, ""),
        },
        Transport {
            name: "r3r0*x*r0 against r0*y",
            pairs: base.clone(),
            f: starred("30", true, true, "0"),
            g: starred("0", true, false, ""),
            h: starred("30", true, false, ""),
        },
        Transport {
            name: "r1r3r0*x*r0 against r0*y",
            pairs: base,
            f: starred("130", true, true, "0"),
            g: starred("0", true, false, ""),
            h: starred("130", true, false, ""),
        },
    ];

    let all_rows = |row: &str| -> Vec<WeylElement> {
        LeftCellLabel::all()
            .flat_map(|c| params(max_ij).into_iter().map(move |(i, j)| CellPoint::from_params(label(row), c, i, j, false).element))
            .collect()
    };
    let within = |pairs: Vec<(WeylElement, WeylElement)>, f: &Map| -> Vec<(WeylElement, WeylElement)> {
        pairs.into_iter().filter(|(x, y)| f(x).map(|fx| fx.length() + y.length() <= budget).unwrap_or(true)).collect()
    };
    for (name, row, col, gen) in [
        ("r3 x against any y, x in (G02,G012)", "G02", "G012", "3"),
        ("r1 x against any y, x in (G03,G012)", "G03", "G012", "1"),
        ("r3 x against any y, x in (G02,G02)", "G02", "G02", "3"),
        ("r1 x against any y, x in (G03,G02)", "G03", "G02", "1"),
        ("r1 x against any y, x in (G03,G03)", "G03", "G03", "1"),
    ] {
        let xs = block_sample(row, col, max_ij, &both);
        let f = lmul(gen);
        let pairs = within(product_pairs(&xs, &all_rows(col)), &f);
        transports.push(Transport { name, pairs, f, g: ident(), h: lmul(gen) });
    }

    // matrix composition through the six base blocks, on both sides
    let mut composition = Vec::new();
    for (row, col) in [("G02", "G012"), ("G03", "G012"), ("G013p", "G012"), ("G03", "G02"), ("G013p", "G02"), ("G013p", "G03")] {
        let us = block_sample(row, col, max_ij, &both);
        let ms = all_rows(col);
        let ps: Vec<WeylElement> = LeftCellLabel::all()
            .flat_map(|t| {
                params(max_ij).into_iter().flat_map(move |(i, j)| both.map(|e| CellPoint::from_params(t, label(row), i, j, e).element))
            })
            .collect();
        let mut pairs = product_pairs(&us, &ms);
        pairs.extend(product_pairs(&ps, &block_sample(row, col, max_ij, &plain)));
        pairs.retain(|(x, y)| x.length() + y.length() <= budget);
        composition.push((format!("pi composition through ({row},{col})"), pairs));
    }
    // products of non-composable base points vanish
    let roots = ["G012", "G02", "G03", "G013p"];
    let mut loose = Vec::new();
    for a in roots {
        for b in roots {
            loose.push(CellPoint::from_params(label(a), label(b), 0, 0, false));
        }
    }
    let mismatched: Vec<_> = loose
        .iter()
        .flat_map(|p| loose.iter().map(move |q| (p, q)))
        .filter(|(p, q)| p.col != q.row && p.length() + q.length() <= budget)
        .map(|(p, q)| (p.element, q.element))
        .collect();
    composition.push(("pi on mismatched blocks".to_string(), mismatched));

    let mut len = 0;
    for t in &transports {
        len = len.max(t.moved_length()?);
    }
    for (_, p) in &composition {
        len = len.max(pair_window(p));
    }
    let window = CellWindow::enumerate(len);
    let table = KlTable::new();
    let jr = JRing::new(&table, &window);
    let mut out = Vec::new();
    for t in &transports {
        out.push(t.run(&jr)?);
    }
    for (name, pairs) in &composition {
        let mut r = verify_isomorphism(&jr, pairs)?;
        r.check = name.clone();
        out.push(r);
    }
    Ok(out)
}

/// Duality, round trips and path independence of `π` over a whole window.
pub fn window_bijection(max_len: usize) -> Vec<CheckReport> {
    let window = CellWindow::enumerate(max_len);
    vec![verify_duality(&window), verify_round_trip(&window), verify_path_independence(&window)]
}

// ---------------------------------------------------------------------------------------
// star and string identities

/// `μ̃` string identities up to `max_len`, then the symmetries, star invariance and
/// string sums of `γ` on the `Γ₀₁₂` block at `i + j ≤ 1`.
pub fn stars(max_len: usize) -> Result<Vec<CheckReport>, Error> {
    let table = KlTable::new();
    let mut out = verify_string_mu_identities(&table, max_len);
    drop(table);
    let sample = block_sample("G012", "G012", 1, &[false]);
    let window = CellWindow::enumerate(28);
    let table = KlTable::new();
    let jr = JRing::new(&table, &window);
    out.extend(verify_gamma_symmetries(&jr, &sample)?);
    out.push(verify_star_invariance(&jr, &sample)?);
    out.extend(verify_string_sums(&jr, &sample)?);
    Ok(out)
}

// ---------------------------------------------------------------------------------------
// distinguished involutions

/// Default length budget for unit-law products.
pub const UNIT_BUDGET: usize = 30;

/// Exactly one distinguished involution per left cell within `search_len`, `π` of their
/// sum is the identity, and they act as units on base points whose products stay within
/// `budget`.
pub fn involutions(search_len: usize, budget: usize) -> Result<Vec<CheckReport>, Error> {
    let window = CellWindow::enumerate(search_len.max(budget));
    let table = KlTable::new();
    let mut found = CheckReport::new("one distinguished involution per left cell", search_len);
    let mut ds = BTreeMap::new();
    for g in LeftCellLabel::all() {
        let c = distinguished_candidates(&table, &window, g, search_len);
        found.compare(g, "count", 1, c.len());
        if let [d] = c.as_slice() {
            ds.insert(g, *d);
        }
    }
    drop(table);
    if ds.len() != LeftCellLabel::all().count() {
        return Ok(vec![found]);
    }
    let sample: Vec<WeylElement> = window
        .points()
        .iter()
        .filter(|p| p.i == 0 && p.j == 0)
        .filter(|p| ds[&p.row].length() + p.length() <= budget && p.length() + ds[&p.col].length() <= budget)
        .map(|p| p.element)
        .collect();
    let table = KlTable::new();
    let jr = JRing::new(&table, &window);
    let unit = verify_unit(&jr, &ds, &sample)?;
    Ok(vec![found, unit])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_enumerates_simplex() {
        assert_eq!(params(1), vec![(0, 0), (0, 1), (1, 0)]);
        assert_eq!(params(2).len(), 6);
    }

    #[test]
    fn product_rules_drop_negative_indices() {
        assert_eq!(product_rule(1, 0, 0), vec![(1, 0, 1)]);
        assert_eq!(product_rule(2, 0, 0), vec![(0, 1, 1)]);
        assert_eq!(product_rule(2, 1, 0), vec![(1, 1, 1), (1, 0, 1)]);
    }

    #[test]
    fn coxeter_passes() {
        assert!(coxeter().passed());
    }
}
