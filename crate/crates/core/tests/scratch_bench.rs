//! Temporary benchmark scaffolding (removed before release).

use polarmap_core::groebner::{intersect, quotient_dimension, Ideal};
use polarmap_core::polyring::{parse_poly, MonomialOrder, PolyMatrix, Ring};
use polarmap_core::zerodim::{multiplication_matrix_for_poly, vector_annihilator, UPoly};
use std::time::Instant;

#[test]
#[ignore]
fn bench_union_intersection() {
    let r = Ring::new(&["x1", "x2", "x3"]).unwrap();
    let g = parse_poly("x1^3+x2^3+x3^3-x1-x2-x3-1", &r).unwrap();
    let d = parse_poly("(3*x1*x3+1)*(x1-x3)+3*x3^2-1", &r).unwrap();
    let phi1 = parse_poly("(x1-1)^2+x2^2+x3^2", &r).unwrap();
    let jac3 = PolyMatrix::from_rows(
        &r,
        vec![
            (0..3).map(|v| g.derivative(v).unwrap()).collect(),
            (0..3).map(|v| d.derivative(v).unwrap()).collect(),
            (0..3).map(|v| phi1.derivative(v).unwrap()).collect(),
        ],
    )
    .unwrap();
    let e = jac3.determinant().unwrap();
    let i45 = Ideal::new(&r, vec![g.clone(), d.clone(), e]).unwrap();

    // W(phi1, V): g plus 2-minors of jac(g, phi1)
    let jac2 = PolyMatrix::from_rows(
        &r,
        vec![
            (0..3).map(|v| g.derivative(v).unwrap()).collect(),
            (0..3).map(|v| phi1.derivative(v).unwrap()).collect(),
        ],
    )
    .unwrap();
    let mut gens = vec![g.clone()];
    gens.extend(jac2.minors(2).unwrap());
    let i21 = Ideal::new(&r, gens).unwrap();
    let t0 = Instant::now();
    let gb21 = i21.groebner(&MonomialOrder::GrevLex).unwrap();
    println!("i21 gb: {:?}, dim {}", t0.elapsed(), quotient_dimension(&gb21).unwrap());

    let t0 = Instant::now();
    let u = intersect(&i21, &i45).unwrap();
    println!("intersect: {:?} ({} gens)", t0.elapsed(), u.generators().len());
    let t0 = Instant::now();
    let gbu = u.groebner(&MonomialOrder::GrevLex).unwrap();
    println!("union gb: {:?}, dim {}", t0.elapsed(), quotient_dimension(&gbu).unwrap());
}

#[test]
#[ignore]
fn bench_assemble_stages() {
    use polarmap_core::geometry::{PolyMap, VarietySpec};
    use polarmap_core::roadmap;
    use polarmap_core::zerodim::default_box_width;
    let r = Ring::new(&["x1", "x2", "x3"]).unwrap();
    let g = parse_poly("x1^3+x2^3+x3^3-x1-x2-x3-1", &r).unwrap();
    let v = VarietySpec::new(&r, vec![g], 2).unwrap();
    let phi1 = parse_poly("(x1-1)^2+x2^2+x3^2", &r).unwrap();
    let map = PolyMap::new(vec![
        phi1.clone(),
        parse_poly("x2", &r).unwrap(),
        parse_poly("x1", &r).unwrap(),
    ])
    .unwrap();
    let w = default_box_width();

    let t = Instant::now();
    let a = roadmap::check_assumption_a(&v).unwrap();
    println!("check_a: {:?} ({})", t.elapsed(), a.status);
    let t = Instant::now();
    let (b1, b2) = roadmap::check_assumption_b(&v, &map, 2, 4, 7).unwrap();
    println!("check_b: {:?} ({}, {})", t.elapsed(), b1.status, b2.status);
    let t = Instant::now();
    let s = roadmap::compute_sample_set(&v, &map, 2, &w).unwrap();
    println!("sample_set: {:?} ({} points)", t.elapsed(), s.len());
    let t = Instant::now();
    let bundle = roadmap::assemble_roadmap(&v, &map, 2, &w, 7).unwrap();
    println!("assemble total: {:?} (values {})", t.elapsed(), bundle.critical_values().len());
}

#[test]
#[ignore]
fn bench_w2_singular_system_and_eliminant_roots() {
    let r = Ring::new(&["x1", "x2", "x3"]).unwrap();
    let g = parse_poly("x1^3+x2^3+x3^3-x1-x2-x3-1", &r).unwrap();
    let d = parse_poly("(3*x1*x3+1)*(x1-x3)+3*x3^2-1", &r).unwrap();
    // singular system of the curve {g, d}: both gens + 2-minors of their jacobian
    let jac = PolyMatrix::from_rows(
        &r,
        vec![
            (0..3).map(|v| g.derivative(v).unwrap()).collect(),
            (0..3).map(|v| d.derivative(v).unwrap()).collect(),
        ],
    )
    .unwrap();
    let mut gens = vec![g.clone(), d.clone()];
    gens.extend(jac.minors(2).unwrap());
    let s = Ideal::new(&r, gens).unwrap();
    let t0 = Instant::now();
    let gb = s.groebner(&MonomialOrder::GrevLex).unwrap();
    println!(
        "sing(W2) gb in {:?}: contains_one = {}",
        t0.elapsed(),
        gb.contains_one()
    );
    if !gb.contains_one() {
        println!("quotient dim attempt: {:?}", quotient_dimension(&gb));
    }

    // real-root count of the degree-39 image eliminant
    let phi1 = parse_poly("(x1-1)^2+x2^2+x3^2", &r).unwrap();
    let jac3 = PolyMatrix::from_rows(
        &r,
        vec![
            (0..3).map(|v| g.derivative(v).unwrap()).collect(),
            (0..3).map(|v| d.derivative(v).unwrap()).collect(),
            (0..3).map(|v| phi1.derivative(v).unwrap()).collect(),
        ],
    )
    .unwrap();
    let e = jac3.determinant().unwrap();
    let i45 = Ideal::new(&r, vec![g.clone(), d.clone(), e]).unwrap();
    let gb45 = i45.groebner(&MonomialOrder::GrevLex).unwrap();
    let m = multiplication_matrix_for_poly(&gb45, &phi1).unwrap();
    let mut start = vec![num_rational::BigRational::from_integer(0.into()); m.len()];
    start[0] = num_rational::BigRational::from_integer(1.into());
    let ann = vector_annihilator(&m, &start);
    let mut denlcm = num_bigint::BigInt::from(1);
    for c in &ann {
        denlcm = num_integer::lcm(denlcm.clone(), c.denom().clone());
    }
    let u = UPoly::new(ann.iter().map(|c| (c * &denlcm).to_integer()).collect());
    let yring = Ring::new(&["s"]).unwrap();
    let up = u.to_poly(&yring, 0);
    let nroots = polarmap_core::zerodim::sturm_distinct_real_roots(&up).unwrap();
    println!("eliminant degree {}, real roots {}", u.degree(), nroots);
    let ivs = polarmap_core::zerodim::isolate_univariate_roots(&up).unwrap();
    for iv in &ivs {
        let (a, b) = iv.to_f64_pair();
        println!("  root in [{a}, {b}]");
    }
}

#[test]
#[ignore]
fn bench_phi1_eliminant_and_compose() {
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
    let i = Ideal::new(&r, vec![g.clone(), d, e]).unwrap();

    let t0 = Instant::now();
    let gb = i.groebner(&MonomialOrder::GrevLex).unwrap();
    println!("gb: {:?}", t0.elapsed());

    let t0 = Instant::now();
    let m = multiplication_matrix_for_poly(&gb, &phi1).unwrap();
    println!("mult matrix ({}x{}): {:?}", m.len(), m.len(), t0.elapsed());

    let t0 = Instant::now();
    let mut start = vec![num_rational::BigRational::from_integer(0.into()); m.len()];
    start[0] = num_rational::BigRational::from_integer(1.into());
    let ann = vector_annihilator(&m, &start);
    println!(
        "annihilator degree {} in {:?}",
        ann.len() - 1,
        t0.elapsed()
    );
    // integer version & coefficient size
    let mut denlcm = num_bigint::BigInt::from(1);
    for c in &ann {
        denlcm = num_integer::lcm(denlcm.clone(), c.denom().clone());
    }
    let ints: Vec<num_bigint::BigInt> =
        ann.iter().map(|c| (c * &denlcm).to_integer()).collect();
    let u = UPoly::new(ints);
    let maxbits = u.coeffs.iter().map(|c| c.bits()).max().unwrap();
    println!("eliminant integer coeff max bits: {maxbits}");
    let t0 = Instant::now();
    let sf = u.squarefree_part().unwrap();
    println!("squarefree degree {} in {:?}", sf.degree(), t0.elapsed());
    let sfbits = sf.coeffs.iter().map(|c| c.bits()).max().unwrap();
    println!("squarefree coeff max bits: {sfbits}");

    // compose sf(phi1) by Horner
    let t0 = Instant::now();
    let mut acc = polarmap_core::polyring::Polynomial::zero(&r);
    for k in (0..=sf.degree()).rev() {
        acc = &(&acc * &phi1)
            + &polarmap_core::polyring::Polynomial::constant(
                &r,
                num_rational::BigRational::from_integer(sf.coeffs[k].clone()),
            );
    }
    println!(
        "composed: degree {:?}, {} terms, in {:?}",
        acc.total_degree(),
        acc.num_terms(),
        t0.elapsed()
    );
}
