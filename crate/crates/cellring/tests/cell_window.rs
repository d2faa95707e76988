use std::collections::BTreeSet;

use cellring::cells::{x_ij, x_ij_length, CellPoint, CellWindow, LeftCellLabel, StarContext, NUM_CELLS};
use cellring::weyl::tau;
use cellring::{KlTable, WeylElement};
use proptest::prelude::*;
use std::sync::OnceLock;

fn window() -> &'static CellWindow {
    static W: OnceLock<CellWindow> = OnceLock::new();
    W.get_or_init(|| CellWindow::enumerate(26))
}

fn label(name: &str) -> LeftCellLabel {
    name.parse().unwrap()
}

#[test]
fn twenty_four_labels_with_distinct_representatives() {
    let reps: BTreeSet<WeylElement> = LeftCellLabel::all().map(|c| c.representative()).collect();
    assert_eq!(reps.len(), NUM_CELLS);
    for c in LeftCellLabel::all() {
        assert_eq!(c.representative().right_descents(), c.r_set(), "{c}");
        assert_eq!(c.name().parse::<LeftCellLabel>().unwrap(), c);
    }
    let roots: Vec<&str> = LeftCellLabel::all().filter(|c| c.is_root()).map(|c| c.name()).collect();
    assert_eq!(roots, ["G012", "G02", "G03", "G013p"]);
}

#[test]
fn star_graph_is_a_tree_reaching_every_cell() {
    let edges = LeftCellLabel::graph_edges();
    assert_eq!(edges.len(), NUM_CELLS - 4);
    for c in LeftCellLabel::all() {
        let mut e = c.root().representative();
        for p in c.path_from_root() {
            e = StarContext::right(p).star(&e).unwrap();
        }
        assert_eq!(e.right_descents(), c.r_set(), "{c}");
    }
}

#[test]
fn base_points_lengths() {
    for (i, j) in [(0, 0), (1, 0), (0, 1), (2, 1)] {
        assert_eq!(x_ij(i, j).length(), x_ij_length(i, j));
        assert_eq!(x_ij(i, j).in_coxeter_part(), i % 2 == 0);
    }
    assert_eq!(x_ij(0, 0), WeylElement::from_word("012012").unwrap());
    let lens = |row: &str, col: &str| -> Vec<usize> {
        [(0, 0), (0, 1), (1, 0)].iter().map(|&(i, j)| CellPoint::from_params(label(row), label(col), i, j, false).length()).collect()
    };
    assert_eq!(lens("G012", "G02"), [9, 17, 14]);
    assert_eq!(lens("G02", "G02"), [12, 20, 17]);
    assert_eq!(lens("G012", "G03"), [10, 18, 15]);
    assert_eq!(lens("G03", "G03"), [14, 22, 19]);
    assert_eq!(lens("G012", "G013p"), [11, 19, 16]);
    assert_eq!(lens("G013p", "G013p"), [16, 24, 21]);
    assert_eq!(lens("G012", "G0"), [16, 24, 21]);
    assert_eq!(lens("G1", "G1"), [26, 34, 31]);
}

#[test]
fn window_points_carry_their_cells() {
    let w = window();
    assert!(w.len() > 1000);
    for p in w.points() {
        assert_eq!(p.element.right_descents(), p.col.r_set(), "{p}");
        assert_eq!(p.element.left_descents(), p.row.r_set(), "{p}");
        assert_eq!(CellPoint::from_params(p.row, p.col, p.i, p.j, p.eps), *p);
        assert_eq!(p.inverse().element, p.element.inverse());
        assert_eq!(p.length(), p.element.length());
        assert_eq!(w.by_params(p.row, p.col, p.i, p.j, p.eps).unwrap(), p);
    }
    let blocks: BTreeSet<_> = w.points().iter().map(|p| (p.row, p.col)).collect();
    assert_eq!(blocks.len(), NUM_CELLS * NUM_CELLS);
}

#[test]
fn windows_are_nested() {
    let small = CellWindow::enumerate(18);
    assert!(small.points().iter().all(|p| window().get(&p.element) == Some(p)));
    assert!(!small.contains(&WeylElement::IDENTITY));
}

#[test]
fn eps_twist_is_left_multiplication_by_tau() {
    let g = label("G012");
    for (i, j) in [(0, 0), (1, 0), (0, 1)] {
        let p = CellPoint::from_params(g, g, i, j, true);
        assert_eq!(p.element, tau().mul(&x_ij(i, j)));
    }
}

#[test]
fn distinguished_involution_of_base_cell() {
    let t = KlTable::new();
    let w012 = WeylElement::from_word("012012").unwrap();
    assert_eq!(t.delta(&w012), Some(0));
    assert_eq!(cellring::cells::distinguished_defect(&t, &w012), Some(0));
    assert_eq!(t.delta(&tau()), None);
}

fn point() -> impl Strategy<Value = CellPoint> {
    (0..window().len()).prop_map(|k| window().points()[k])
}

fn pair() -> impl Strategy<Value = [usize; 2]> {
    prop::sample::select(vec![[0, 2], [1, 2], [2, 3], [2, 0], [2, 1], [3, 2]])
}

proptest! {
    #[test]
    fn star_is_an_involution(p in point(), pr in pair(), left in any::<bool>()) {
        let ctx = if left { StarContext::left(pr) } else { StarContext::right(pr) };
        if let Ok(s) = ctx.star(&p.element) {
            prop_assert_eq!(ctx.star(&s).unwrap(), p.element);
            let (string, _) = ctx.string_through(&p.element).unwrap();
            prop_assert_eq!(string.len(), ctx.m - 1);
            prop_assert!(string.contains(&s));
        }
    }

    #[test]
    fn right_star_stays_in_row_and_left_star_in_column(p in point(), pr in pair()) {
        // a right star keeps x⁻¹'s left cell, a left star keeps x's left cell
        if let Ok(s) = StarContext::right(pr).star(&p.element) {
            if let Some(q) = window().get(&s) {
                prop_assert_eq!(q.row, p.row);
            }
        }
        if let Ok(s) = StarContext::left(pr).star(&p.element) {
            if let Some(q) = window().get(&s) {
                prop_assert_eq!(q.col, p.col);
            }
        }
    }

    #[test]
    fn left_and_right_stars_commute(p in point(), a in pair(), b in pair()) {
        let (l, r) = (StarContext::left(a), StarContext::right(b));
        if let (Ok(x), Ok(_)) = (l.star(&p.element), r.star(&p.element)) {
            if let Ok(y) = r.star(&x) {
                prop_assert_eq!(l.star(&r.star(&p.element).unwrap()).unwrap(), y);
            }
        }
    }
}
