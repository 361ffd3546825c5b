//! Certified real-solution boxes for zero-dimensional systems.
//!
//! Two pipelines, both exact:
//! 1. If the lex Gröbner basis is in shape position
//!    (x_1 − h_1(x_n), …, x_{n−1} − h_{n−1}(x_n), q(x_n)), real solutions
//!    biject with the real roots of q; boxes come from isolating those roots
//!    and pushing the interval through each h_v.
//! 2. Otherwise, per-coordinate eliminants give candidate product boxes,
//!    pruned by interval evaluation of the generators. Counting certifies:
//!    every real solution occupies its own product box, so when the number
//!    of surviving boxes equals the exact real count, each surviving box
//!    holds exactly one solution. If refinement cannot reach that state the
//!    boxes are returned with an explicit `Candidate` status, never silently.

use super::hermite::trace_form;
use super::linalg::{multiplication_matrix, vector_annihilator};
use super::univariate::{isolate_real_roots_upoly, refine_to_width, UPoly};
use crate::error::{Error, Result};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::polyring::{eval_poly_interval, Interval, MonomialOrder, Polynomial};
use crate::{Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Certification status of a solution box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum BoxStatus {
    /// The box contains exactly one real solution of the system.
    CertifiedUnique,
    /// The box passed every interval test but uniqueness/existence was not
    /// established (degenerate fallback cases only).
    Candidate,
}

/// A rational interval vector enclosing (at least potentially) one real
/// solution. Every generator of the system evaluates, in interval
/// arithmetic, to an interval containing zero on the box.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct SolutionBox {
    pub coordinates: Vec<Interval>,
    pub status: BoxStatus,
}

impl SolutionBox {
    pub fn max_width(&self) -> Rat {
        self.coordinates.iter().map(|iv| iv.width()).max().unwrap_or_else(Rat::zero)
    }

    /// Midpoint of every coordinate, as f64 (for reporting only).
    pub fn midpoint_f64(&self) -> Vec<f64> {
        self.coordinates.iter().map(|iv| iv.midpoint_f64()).collect()
    }

    pub fn is_certified(&self) -> bool {
        self.status == BoxStatus::CertifiedUnique
    }
}

/// Full counting + solving summary of a zero-dimensional ideal.
#[derive(Debug, Clone)]
pub struct SolutionSet {
    pub ideal: Ideal,
    pub complex_count_with_multiplicity: usize,
    pub distinct_complex_count: usize,
    pub real_count: usize,
    pub real_boxes: Vec<SolutionBox>,
}

/// Default box width 2⁻²⁰.
pub fn default_box_width() -> Rat {
    Rat::new(Int::one(), Int::one() << 20)
}

/// Count complex/real solutions and enclose every real one in a rational
/// box of width ≤ `width`.
pub fn analyze(ideal: &Ideal, width: &Rat) -> Result<SolutionSet> {
    let gb = ideal.groebner(&MonomialOrder::GrevLex)?;
    let tf = trace_form(&gb)?;
    let real_count = tf.signature().max(0) as usize;
    let real_boxes = solve_real_with_counts(ideal, &gb, real_count, width)?;
    Ok(SolutionSet {
        ideal: ideal.clone(),
        complex_count_with_multiplicity: tf.dimension(),
        distinct_complex_count: tf.rank(),
        real_count,
        real_boxes,
    })
}

/// One box per distinct real solution, each of width ≤ `width`,
/// certified unique whenever possible.
pub fn solve_real(ideal: &Ideal, width: &Rat) -> Result<Vec<SolutionBox>> {
    Ok(analyze(ideal, width)?.real_boxes)
}

fn solve_real_with_counts(
    ideal: &Ideal,
    gb: &GroebnerBasis,
    real_count: usize,
    width: &Rat,
) -> Result<Vec<SolutionBox>> {
    if width.is_zero() || width.is_negative() {
        return Err(Error::InvalidInput("requested box width must be positive".into()));
    }
    if real_count == 0 {
        return Ok(Vec::new());
    }
    let lex = ideal.groebner(&MonomialOrder::Lex)?;
    if let Some(boxes) = try_shape_position(ideal, &lex, real_count, width)? {
        return Ok(boxes);
    }
    eliminant_boxes(ideal, gb, real_count, width)
}

// ---------------------------------------------------------------------------
// Shape-position path
// ---------------------------------------------------------------------------

/// Recognize a lex basis of the form {x_v − h_v(x_last)}_{v<last} ∪ {q(x_last)}
/// and, if it matches, build one certified box per real root of q.
fn try_shape_position(
    ideal: &Ideal,
    lex: &GroebnerBasis,
    real_count: usize,
    width: &Rat,
) -> Result<Option<Vec<SolutionBox>>> {
    let ring = lex.ring();
    let n = ring.nvars();
    let last = n - 1;
    if lex.elements().len() != n {
        return Ok(None);
    }
    let order = MonomialOrder::Lex;
    let mut eliminant: Option<Polynomial<Rat>> = None;
    let mut h: Vec<Option<Polynomial<Rat>>> = vec![None; n.saturating_sub(1)];
    for el in lex.elements() {
        let support: Vec<usize> = el.support_vars();
        if support.iter().all(|&v| v == last) {
            if eliminant.is_some() {
                return Ok(None);
            }
            eliminant = Some(el.clone());
            continue;
        }
        // must be x_v − h_v(x_last)
        let (lm, _) = match el.leading(&order) {
            Some(t) => t,
            None => return Ok(None),
        };
        if lm.degree() != 1 {
            return Ok(None);
        }
        let v = lm.support().next().unwrap();
        if v == last || h[v].is_some() {
            return Ok(None);
        }
        let tail = el - &Polynomial::var(ring, v)?;
        if !tail.support_vars().iter().all(|&w| w == last) {
            return Ok(None);
        }
        h[v] = Some(-&tail);
    }
    let q = match eliminant {
        Some(q) => q,
        None => return Ok(None),
    };
    if h.iter().any(|e| e.is_none()) {
        return Ok(None);
    }
    let h: Vec<Polynomial<Rat>> = h.into_iter().map(|e| e.unwrap()).collect();

    let (uq, _) = UPoly::from_poly(&q)?;
    let sf = uq.squarefree_part()?;
    let roots = isolate_real_roots_upoly(&uq)?;
    if roots.len() != real_count {
        // cannot happen for a true shape-position basis; degrade safely
        return Ok(None);
    }

    let mut boxes = Vec::with_capacity(roots.len());
    for root in &roots {
        let mut iv = refine_to_width(&sf, root, width)?;
        let mut coords: Vec<Interval>;
        let mut rounds = 0usize;
        loop {
            let mut probe = vec![Interval::point(Rat::zero()); n];
            probe[last] = iv.clone();
            coords = Vec::with_capacity(n);
            for v in 0..n {
                if v == last {
                    coords.push(iv.clone());
                } else {
                    coords.push(eval_poly_interval(&h[v], &probe)?);
                }
            }
            if coords.iter().all(|c| c.width() <= *width) {
                break;
            }
            rounds += 1;
            if rounds > 4096 {
                return Err(Error::ResourceLimit {
                    what: "box refinement through back-substitution".into(),
                    limit: 4096,
                });
            }
            iv = refine_to_width(&sf, &iv, &(iv.width() / Rat::from_integer(Int::from(2))))?;
        }
        debug_assert!(ideal
            .generators()
            .iter()
            .all(|g| eval_poly_interval(g, &coords).is_ok_and(|iv| iv.contains_zero())));
        boxes.push(SolutionBox { coordinates: coords, status: BoxStatus::CertifiedUnique });
    }
    Ok(Some(boxes))
}

// ---------------------------------------------------------------------------
// Eliminant fallback path
// ---------------------------------------------------------------------------

/// Exact generator of I ∩ Q[x_v]: the monic annihilator of the class of 1
/// under multiplication by x_v — q(M_v)·[1] is the coordinate vector of the
/// normal form of q(x_v), which vanishes exactly when q(x_v) ∈ I.
fn coordinate_eliminant(gb: &GroebnerBasis, var: usize) -> Result<UPoly> {
    let m = multiplication_matrix(gb, var)?;
    let d = m.len();
    let mut start = vec![Rat::zero(); d];
    // the quotient basis is sorted ascending, so the constant monomial 1 is
    // always the first basis element
    start[0] = Rat::one();
    let coeffs = vector_annihilator(&m, &start);
    Ok(upoly_from_rat_coeffs(&coeffs))
}

fn upoly_from_rat_coeffs(coeffs: &[Rat]) -> UPoly {
    let mut den = Int::one();
    for c in coeffs {
        den = den.lcm(c.denom());
    }
    UPoly::new(coeffs.iter().map(|c| (c * &den).to_integer()).collect())
}

struct CoordinateRoots {
    squarefree: UPoly,
    intervals: Vec<Interval>,
}

/// Product boxes from per-coordinate eliminants, pruned by interval
/// evaluation and certified by exact counting.
fn eliminant_boxes(
    ideal: &Ideal,
    gb: &GroebnerBasis,
    real_count: usize,
    width: &Rat,
) -> Result<Vec<SolutionBox>> {
    let ring = gb.ring();
    let n = ring.nvars();
    let mut coords = Vec::with_capacity(n);
    for v in 0..n {
        let e = coordinate_eliminant(gb, v)?;
        let sf = e.squarefree_part()?;
        let mut intervals = isolate_real_roots_upoly(&e)?;
        for iv in intervals.iter_mut() {
            *iv = refine_to_width(&sf, iv, width)?;
        }
        coords.push(CoordinateRoots { squarefree: sf, intervals });
    }

    let generators = ideal.generators();
    let two = Rat::from_integer(Int::from(2));
    let max_rounds = 24usize;
    for round in 0..=max_rounds {
        let surviving = prune_product_boxes(generators, &coords);
        debug_assert!(surviving.len() >= real_count);
        if surviving.len() == real_count {
            return Ok(surviving
                .into_iter()
                .map(|coordinates| SolutionBox {
                    coordinates,
                    status: BoxStatus::CertifiedUnique,
                })
                .collect());
        }
        if round == max_rounds {
            return Ok(surviving
                .into_iter()
                .map(|coordinates| SolutionBox { coordinates, status: BoxStatus::Candidate })
                .collect());
        }
        // shrink every coordinate interval and try again
        for cr in coords.iter_mut() {
            for iv in cr.intervals.iter_mut() {
                if iv.lo == iv.hi {
                    continue;
                }
                let target = iv.width() / &two;
                *iv = refine_to_width(&cr.squarefree, iv, &target)?;
            }
        }
    }
    unreachable!("loop returns on the final round");
}

/// All product boxes on which every generator's interval evaluation
/// contains zero, enumerated in odometer order (deterministic).
fn prune_product_boxes(
    generators: &[Polynomial<Rat>],
    coords: &[CoordinateRoots],
) -> Vec<Vec<Interval>> {
    let n = coords.len();
    let mut out = Vec::new();
    if coords.iter().any(|c| c.intervals.is_empty()) {
        return out;
    }
    let mut idx = vec![0usize; n];
    loop {
        let candidate: Vec<Interval> =
            (0..n).map(|v| coords[v].intervals[idx[v]].clone()).collect();
        let keep = generators.iter().all(|g| {
            eval_poly_interval(g, &candidate)
                .expect("candidate box length matches the ring")
                .contains_zero()
        });
        if keep {
            out.push(candidate);
        }
        // odometer increment
        let mut carry = n;
        for v in (0..n).rev() {
            idx[v] += 1;
            if idx[v] < coords[v].intervals.len() {
                carry = v;
                break;
            }
            idx[v] = 0;
        }
        if carry == n {
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, Ring};
    use std::sync::Arc;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(names).unwrap()
    }

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_poly(s, r).unwrap()).collect()).unwrap()
    }

    fn assert_contains(boxes: &[SolutionBox], point: &[f64], tol: f64) {
        assert!(
            boxes.iter().any(|b| {
                b.midpoint_f64().iter().zip(point).all(|(m, p)| (m - p).abs() <= tol)
            }),
            "no box near {point:?}; got {:?}",
            boxes.iter().map(|b| b.midpoint_f64()).collect::<Vec<_>>()
        );
    }

    #[test]
    fn two_points_on_a_line() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 - 1", "y"]);
        let boxes = solve_real(&i, &default_box_width()).unwrap();
        assert_eq!(boxes.len(), 2);
        assert!(boxes.iter().all(|b| b.is_certified()));
        assert!(boxes.iter().all(|b| b.max_width() <= default_box_width()));
        assert_contains(&boxes, &[1.0, 0.0], 1e-5);
        assert_contains(&boxes, &[-1.0, 0.0], 1e-5);
    }

    #[test]
    fn no_real_points() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x", "y^2 + 1"]);
        let boxes = solve_real(&i, &default_box_width()).unwrap();
        assert!(boxes.is_empty());
    }

    #[test]
    fn circle_meets_line_diagonally() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 + y^2 - 1", "x - y"]);
        let s = analyze(&i, &default_box_width()).unwrap();
        assert_eq!(s.real_count, 2);
        assert_eq!(s.real_boxes.len(), 2);
        let c = 0.7071067811865476;
        assert_contains(&s.real_boxes, &[c, c], 1e-5);
        assert_contains(&s.real_boxes, &[-c, -c], 1e-5);
    }

    #[test]
    fn repeated_coordinates_force_fallback() {
        // x² = y², x² = 1 has the four real points (±1, ±1); the ideal is
        // not in shape position w.r.t. the last coordinate (two x per y)
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 - y^2", "x^2 - 1"]);
        let s = analyze(&i, &default_box_width()).unwrap();
        assert_eq!(s.real_count, 4);
        assert_eq!(s.real_boxes.len(), 4);
        assert!(s.real_boxes.iter().all(|b| b.is_certified()));
        for p in [[1.0, 1.0], [1.0, -1.0], [-1.0, 1.0], [-1.0, -1.0]] {
            assert_contains(&s.real_boxes, &p, 1e-5);
        }
    }

    #[test]
    fn boxes_are_pairwise_disjoint() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^3 - x", "y^2 - x^2"]);
        let boxes = solve_real(&i, &default_box_width()).unwrap();
        // points: (0,0), (1,±1), (−1,±1)
        assert_eq!(boxes.len(), 5);
        for a in 0..boxes.len() {
            for b in a + 1..boxes.len() {
                let overlap = boxes[a]
                    .coordinates
                    .iter()
                    .zip(&boxes[b].coordinates)
                    .all(|(p, q)| p.intersects(q));
                assert!(!overlap, "boxes {a} and {b} overlap");
            }
        }
    }

    #[test]
    fn univariate_cubic() {
        let r = ring(&["x"]);
        let i = ideal(&r, &["x^3 - 2*x"]);
        let boxes = solve_real(&i, &default_box_width()).unwrap();
        assert_eq!(boxes.len(), 3);
        assert_contains(&boxes, &[0.0], 1e-6);
        assert_contains(&boxes, &[1.4142135623], 1e-5);
        assert_contains(&boxes, &[-1.4142135623], 1e-5);
    }

    #[test]
    fn widths_respect_request() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 - 2", "y - x"]);
        let w = Rat::new(Int::one(), Int::from(1 << 10));
        let boxes = solve_real(&i, &w).unwrap();
        assert_eq!(boxes.len(), 2);
        for b in &boxes {
            assert!(b.max_width() <= w);
        }
    }

    #[test]
    fn generators_interval_satisfied() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 + y^2 - 4", "x*y - 1"]);
        let s = analyze(&i, &default_box_width()).unwrap();
        assert_eq!(s.real_count, 4);
        for b in &s.real_boxes {
            for g in s.ideal.generators() {
                assert!(eval_poly_interval(g, &b.coordinates).unwrap().contains_zero());
            }
        }
    }

    #[test]
    fn multiplicity_does_not_duplicate_boxes() {
        let r = ring(&["x"]);
        let i = ideal(&r, &["(x - 1)^2 * (x + 2)"]);
        let s = analyze(&i, &default_box_width()).unwrap();
        assert_eq!(s.complex_count_with_multiplicity, 3);
        assert_eq!(s.distinct_complex_count, 2);
        assert_eq!(s.real_count, 2);
        assert_eq!(s.real_boxes.len(), 2);
    }

    #[test]
    fn rejects_positive_dimensional() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x*y - 1"]);
        assert!(matches!(
            solve_real(&i, &default_box_width()),
            Err(Error::NotZeroDimensional { .. })
        ));
    }

    #[test]
    fn eliminant_matches_elimination_ideal() {
        use crate::groebner::elimination_ideal;
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 + y^2 - 1", "x - y^2"]);
        let gb = i.groebner(&MonomialOrder::GrevLex).unwrap();
        for v in 0..2 {
            let e = coordinate_eliminant(&gb, v).unwrap();
            let elim = elimination_ideal(&i, &[v]).unwrap();
            // the elimination ideal of a zero-dimensional ideal down to one
            // variable is principal; compare the primitive parts
            assert_eq!(elim.generators().len(), 1);
            let (u, _) = UPoly::from_poly(&elim.generators()[0]).unwrap();
            let mut e2 = e.clone();
            e2.make_primitive();
            let mut u2 = u.clone();
            u2.make_primitive();
            assert_eq!(e2.coeffs, u2.coeffs, "variable {v}");
        }
    }
}
