//! End-to-end smoke of the basis engine on the running example's second
//! critical system: the cubic surface, the printed curve generator, and the
//! determinant that cuts out the distance-function critical points on that
//! curve. The quotient must have dimension 45.

use polarmap_core::groebner::{quotient_dimension, Ideal};
use polarmap_core::polyring::{parse_poly, MonomialOrder, PolyMatrix, Ring};
use polarmap_core::zerodim::{analyze, default_box_width};

fn critical_system() -> Ideal {
    let r = Ring::new(&["x1", "x2", "x3"]).unwrap();
    let g = parse_poly("x1^3+x2^3+x3^3-x1-x2-x3-1", &r).unwrap();
    let d = parse_poly("(3*x1*x3+1)*(x1-x3)+3*x3^2-1", &r).unwrap();
    let phi1 = parse_poly("(x1-1)^2+x2^2+x3^2", &r).unwrap();

    let jac = PolyMatrix::from_rows(
        &r,
        vec![
            (0..3).map(|v| g.derivative(v).unwrap()).collect(),
            (0..3).map(|v| d.derivative(v).unwrap()).collect(),
            (0..3).map(|v| phi1.derivative(v).unwrap()).collect(),
        ],
    )
    .unwrap();
    let e = jac.determinant().unwrap();
    assert_eq!(e.total_degree(), Some(5));
    Ideal::new(&r, vec![g, d, e]).unwrap()
}

#[test]
fn second_critical_system_has_45_solutions() {
    let i = critical_system();
    let gb = i.groebner(&MonomialOrder::GrevLex).unwrap();
    assert_eq!(quotient_dimension(&gb).unwrap(), 45);
}

#[test]
fn second_critical_system_real_boxes() {
    let i = critical_system();
    let s = analyze(&i, &default_box_width()).unwrap();
    assert_eq!(s.complex_count_with_multiplicity, 45);
    assert_eq!(s.distinct_complex_count, 45);
    assert_eq!(s.real_count, 5);
    assert_eq!(s.real_boxes.len(), 5);
    assert!(s.real_boxes.iter().all(|b| b.is_certified()));

    let expected = [
        [-0.820967, -0.678414, -0.678414],
        [-0.279300, -0.486120, -0.486120],
        [0.528591, 1.324942, -0.522981],
        [1.290236, -0.071550, -0.071550],
        [1.744029, -3.791251, 3.729431],
    ];
    for want in expected {
        assert!(
            s.real_boxes.iter().any(|b| {
                b.midpoint_f64().iter().zip(&want).all(|(m, w)| (m - w).abs() < 1e-4)
            }),
            "missing a solution near {want:?}"
        );
    }
}
