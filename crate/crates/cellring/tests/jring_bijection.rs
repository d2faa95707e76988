use cellring::bijection::{
    dictionary, pi, pi_element, pi_inverse, pi_j, verify_duality, verify_isomorphism, verify_path_independence,
    verify_round_trip, MatrixRep, RepMatrix,
};
use cellring::cells::{x_ij, CellPoint, CellWindow, LeftCellLabel};
use cellring::jring::{JElement, JRing};
use cellring::repring::{IrrClass, VirtualRep};
use cellring::weyl::tau;
use cellring::{Error, KlTable, WeylElement};

fn g012() -> LeftCellLabel {
    "G012".parse().unwrap()
}

#[test]
fn square_of_t_x10() {
    let window = CellWindow::enumerate(22);
    let table = KlTable::new();
    let jr = JRing::new(&table, &window);
    let x = x_ij(1, 0);
    let row = jr.row(&x, &x).unwrap();
    let want = JElement::from_terms([(x_ij(2, 0), 1), (x_ij(0, 1), 1), (x_ij(0, 0), 1)]);
    assert_eq!(JElement::from(row.as_ref()), want);
    assert_eq!(jr.gamma(&x, &x, &x_ij(0, 1)).unwrap(), 1);
}

#[test]
fn square_of_t_x01() {
    let window = CellWindow::enumerate(30);
    let table = KlTable::new();
    let jr = JRing::new(&table, &window);
    let x = x_ij(0, 1);
    let want = JElement::from_terms([(x_ij(0, 2), 1), (x_ij(2, 0), 1), (x_ij(0, 0), 1)]);
    assert_eq!(jr.t_multiply(&JElement::basis(x), &JElement::basis(x)).unwrap(), want);
    assert_eq!(jr.gamma(&x, &x, &x).unwrap(), 0);
    assert_eq!(jr.gamma(&x_ij(1, 0), &x_ij(0, 0), &x_ij(1, 0)).unwrap(), 1);
    let w012 = x_ij(0, 0);
    assert_eq!(jr.gamma(&w012, &w012, &w012).unwrap(), 1);
}

#[test]
fn base_element_is_a_unit_on_its_block() {
    let window = CellWindow::enumerate(22);
    let table = KlTable::new();
    let jr = JRing::new(&table, &window);
    let e = x_ij(0, 0);
    for y in [x_ij(1, 0), x_ij(0, 1), tau().mul(&x_ij(1, 0))] {
        assert_eq!(JElement::from(jr.row(&e, &y).unwrap().as_ref()), JElement::basis(y));
        assert_eq!(JElement::from(jr.row(&y, &e).unwrap().as_ref()), JElement::basis(y));
    }
}

#[test]
fn gamma_symmetries_on_small_triples() {
    let window = CellWindow::enumerate(22);
    let table = KlTable::new();
    let jr = JRing::new(&table, &window);
    let (a, b) = (x_ij(1, 0), tau().mul(&x_ij(1, 0)));
    for z in jr.row(&a, &b).unwrap().keys() {
        let g = jr.gamma(&a, &b, z).unwrap();
        assert_eq!(jr.gamma(&b, &z.inverse(), &a.inverse()).unwrap(), g);
        assert_eq!(jr.gamma(&b.inverse(), &a.inverse(), &z.inverse()).unwrap(), g);
    }
}

#[test]
fn row_outside_the_window_is_reported() {
    let window = CellWindow::enumerate(12);
    let table = KlTable::new();
    let jr = JRing::new(&table, &window);
    let x = x_ij(1, 0);
    assert!(matches!(jr.row(&x, &x), Err(Error::WindowTooSmall(_))));
    assert!(jr.row(&WeylElement::IDENTITY, &x_ij(0, 0)).is_err());
}

#[test]
fn pi_of_base_points() {
    let window = CellWindow::enumerate(20);
    for (i, j) in [(0, 0), (1, 0), (0, 1), (2, 0)] {
        for eps in [false, true] {
            let w = CellPoint::from_params(g012(), g012(), i, j, eps).element;
            let m = pi_element(&window, &w).unwrap();
            assert_eq!(m, MatrixRep { row: g012(), col: g012(), entry: VirtualRep::irr(IrrClass::new(i, j, eps)) });
            assert_eq!(pi_inverse(&m).unwrap().element, w);
        }
    }
    assert!(pi_element(&window, &WeylElement::IDENTITY).is_err());
}

#[test]
fn pi_inverse_rejects_reducible_entries() {
    let mut v = VirtualRep::irr(IrrClass::new(0, 0, false));
    v.add_term(IrrClass::new(1, 0, false), 1);
    assert!(matches!(pi_inverse(&MatrixRep { row: g012(), col: g012(), entry: v }), Err(Error::Reducible(_))));
}

#[test]
fn matrix_ring_identity() {
    let window = CellWindow::enumerate(18);
    let id = RepMatrix::identity();
    for p in window.points().iter().take(200) {
        let m = RepMatrix::from(&pi(p));
        assert_eq!(id.mul(&m), m);
        assert_eq!(m.mul(&id), m);
    }
    let e = JElement::from_terms([(x_ij(0, 0), 2), (x_ij(1, 0), -1)]);
    let m = pi_j(&window, &e).unwrap();
    let mut want = VirtualRep::zero();
    want.add_term(IrrClass::new(0, 0, false), 2);
    want.add_term(IrrClass::new(1, 0, false), -1);
    assert_eq!(m.entry(g012(), g012()), want);
}

#[test]
fn window_bijection_checks() {
    let window = CellWindow::enumerate(24);
    assert!(verify_duality(&window).passed());
    assert!(verify_round_trip(&window).passed());
    assert!(verify_path_independence(&window).passed());
    let rows = dictionary(&window);
    assert_eq!(rows.len(), window.len());
    assert!(rows.iter().any(|r| r.word == "012012" && r.irr == IrrClass::new(0, 0, false).to_string()));
}

#[test]
fn isomorphism_on_first_products() {
    let window = CellWindow::enumerate(24);
    let table = KlTable::new();
    let jr = JRing::new(&table, &window);
    let xs = [x_ij(0, 0), x_ij(1, 0), tau().mul(&x_ij(1, 0))];
    let pairs: Vec<_> = xs.iter().flat_map(|x| xs.iter().map(move |y| (*x, *y))).collect();
    let rep = verify_isomorphism(&jr, &pairs).unwrap();
    assert!(rep.passed(), "{rep}");
}
