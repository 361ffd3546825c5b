//! Candidate-roadmap assembly. Validates the structural assumptions on the
//! input (dimension, smoothness, properness of the first map component,
//! fiber equidimensionality, finiteness of the sample construction) with
//! honest four-valued statuses, computes the sample set on the inner polar
//! system, the distinguished point set K (a union of zero-dimensional
//! systems), the image eliminants of the map prefix, the selected critical
//! values, and the fiber-union ideal F; the result is the pair (W, F) of
//! curve ideals bundled with all supporting data.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::geometry::{
    critical_ideal, fiber_ideal, singular_ideal, CriticalLocus, FiberSpec, PolyMap, VarietySpec,
};
use crate::groebner::{elimination_ideal, intersect, krull_dimension, Ideal};
use crate::polyring::{
    eval_poly_interval, Interval, Monomial, MonomialOrder, Polynomial, Ring,
};
use crate::zerodim::{
    analyze, isolate_univariate_roots, multiplication_matrix_for_poly, refine_to_width,
    solve_real, vector_annihilator, SolutionBox, SolutionSet, UPoly,
};
use crate::Rat;

type Poly = Polynomial<Rat>;

/// Number of random fiber values probed by the equidimensionality check
/// when the caller does not choose a sample count explicitly.
pub const DEFAULT_FIBER_SAMPLES: usize = 4;

// ---------------------------------------------------------------------------
// Assumption statuses
// ---------------------------------------------------------------------------

/// Outcome of one assumption check. `Verified` is only ever produced by a
/// rigorous argument; `VerifiedProbabilistically` marks conclusions that
/// rest on random probes; `Unverified` means the check could neither
/// confirm nor refute; `Violated` carries a concrete witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Verified,
    VerifiedProbabilistically,
    Unverified,
    Violated,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::VerifiedProbabilistically => "verified-probabilistically",
            Status::Unverified => "unverified",
            Status::Violated => "violated",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One assumption's verdict: status, a human-readable evidence line, and —
/// mandatory whenever the status is `Violated` — a concrete witness.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AssumptionFragment {
    pub status: Status,
    pub evidence: String,
    pub witness: Option<String>,
}

impl AssumptionFragment {
    fn verified(evidence: impl Into<String>) -> Self {
        AssumptionFragment { status: Status::Verified, evidence: evidence.into(), witness: None }
    }

    fn probabilistic(evidence: impl Into<String>) -> Self {
        AssumptionFragment {
            status: Status::VerifiedProbabilistically,
            evidence: evidence.into(),
            witness: None,
        }
    }

    fn unverified(evidence: impl Into<String>, witness: Option<String>) -> Self {
        AssumptionFragment { status: Status::Unverified, evidence: evidence.into(), witness }
    }

    fn violated(evidence: impl Into<String>, witness: String) -> Self {
        AssumptionFragment {
            status: Status::Violated,
            evidence: evidence.into(),
            witness: Some(witness),
        }
    }
}

/// The six structural assumptions, each with its own verdict:
/// A — the input is d-equidimensional with a finite singular locus;
/// P — the first map component is proper and bounded below on real space;
/// B1 — the order-i polar locus is empty or (i−1)-equidimensional and
///      smooth away from the base singular locus;
/// B2 — fibers of the length-(i−1) map prefix are empty or
///      (d−i+1)-equidimensional;
/// C1 — the sample set is finite;
/// C2 — the sample set meets every semi-algebraically connected component
///      of the inner polar system's real locus.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AssumptionReport {
    pub a: AssumptionFragment,
    pub p: AssumptionFragment,
    pub b1: AssumptionFragment,
    pub b2: AssumptionFragment,
    pub c1: AssumptionFragment,
    pub c2: AssumptionFragment,
}

impl AssumptionReport {
    /// The six fragments with their conventional labels, in fixed order.
    pub fn fragments(&self) -> [(&'static str, &AssumptionFragment); 6] {
        [
            ("A", &self.a),
            ("P", &self.p),
            ("B1", &self.b1),
            ("B2", &self.b2),
            ("C1", &self.c1),
            ("C2", &self.c2),
        ]
    }

    pub fn any_violated(&self) -> bool {
        self.fragments().iter().any(|(_, f)| f.status == Status::Violated)
    }

    /// One line per fragment whose status falls short of `Verified`.
    pub fn degraded_reasons(&self) -> Vec<String> {
        self.fragments()
            .iter()
            .filter(|(_, f)| f.status != Status::Verified)
            .map(|(name, f)| format!("{name}: {} — {}", f.status, f.evidence))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Assumption A: claimed dimension exact, singular locus finite
// ---------------------------------------------------------------------------

/// Check that the generators cut out a set of the claimed dimension whose
/// singular locus is finite (for the downstream constructions: empty).
///
/// Verdicts, with no false `Verified` possible:
/// - computed Krull dimension ≠ claimed → `Violated` (dimension is a
///   radical-invariant, so this is a true set-theoretic fact);
/// - complete intersection whose rank-deficiency system is inconsistent →
///   `Verified` (unmixedness gives equidimensionality, the Jacobian
///   criterion gives smoothness and an empty singular locus);
/// - more generators than the codimension with an inconsistent
///   rank-deficiency system → random hyperplane-section dimension probe,
///   `VerifiedProbabilistically` on success;
/// - rank-deficiency system zero-dimensional but consistent → `Unverified`
///   with a witness (candidate singular points cannot be told apart from
///   artifacts of a non-reduced presentation without radical computation);
/// - anything else → `Unverified`.
pub fn check_assumption_a(v: &VarietySpec) -> Result<AssumptionFragment> {
    let ideal = v.ideal();
    let claimed = v.dimension() as i64;
    let dim = krull_dimension(&ideal)?;
    if dim != claimed {
        return Ok(AssumptionFragment::violated(
            format!("the generators cut out a set of dimension {dim}, not the claimed {claimed}"),
            format!("Krull dimension {dim}"),
        ));
    }
    let p = v.generators().len();
    let c = v.codimension();
    if p < c {
        return Ok(AssumptionFragment::unverified(
            format!(
                "only {p} generators for codimension {c}: the rank criterion for smoothness \
                 cannot be formed"
            ),
            None,
        ));
    }
    let sing = singular_ideal(v)?;
    let sing_gb = sing.groebner(&MonomialOrder::GrevLex)?;
    if sing_gb.contains_one() {
        if p == c {
            return Ok(AssumptionFragment::verified(format!(
                "complete intersection ({p} generators, codimension {c}): every component has \
                 dimension {claimed} and the rank-deficiency system is inconsistent, so the set \
                 is smooth with an empty singular locus"
            )));
        }
        return hyperplane_section_probe(v);
    }
    let sdim = krull_dimension(&sing)?;
    if sdim > 0 {
        return Ok(AssumptionFragment::unverified(
            format!(
                "the rank-deficiency system has dimension {sdim}; this may reflect a genuinely \
                 infinite singular locus or a non-reduced presentation, neither of which can be \
                 told apart without radical computation"
            ),
            Some(format!("rank-deficiency system of dimension {sdim}")),
        ));
    }
    // Zero-dimensional, consistent: finitely many candidate singular points.
    let witness = match solve_real(&sing, &crate::zerodim::default_box_width()) {
        Ok(boxes) if !boxes.is_empty() => {
            format!("real singular candidate near {}", box_summary(&boxes[0]))
        }
        _ => {
            let (_, distinct) = crate::zerodim::count_solutions(&sing)?;
            format!("{distinct} complex singular candidate(s), none real")
        }
    };
    Ok(AssumptionFragment::unverified(
        "the rank-deficiency system has finitely many solutions; they are singular-point \
         candidates that cannot be certified or excluded without radical computation",
        Some(witness),
    ))
}

/// Support the claimed dimension with random hyperplane sections: cutting a
/// d-dimensional set by j generic hyperplanes must leave dimension d−j, and
/// d+1 cuts must empty it. Passing every probe yields only a probabilistic
/// verdict — the sections are random, not provably generic.
fn hyperplane_section_probe(v: &VarietySpec) -> Result<AssumptionFragment> {
    let mut rng = ChaCha20Rng::seed_from_u64(0x243F_6A88_85A3_08D3);
    let ring = v.ring();
    let d = v.dimension() as i64;
    let mut cuts: Vec<Poly> = Vec::new();
    for j in 1..=(d + 1) {
        cuts.push(random_hyperplane(ring, &mut rng)?);
        let mut gens = v.generators().to_vec();
        gens.extend(cuts.iter().cloned());
        let cut_dim = krull_dimension(&Ideal::new(ring, gens)?)?;
        let expected = (d - j).max(-1);
        if cut_dim != expected {
            return Ok(AssumptionFragment::unverified(
                format!(
                    "hyperplane-section probe failed: after {j} random cuts the dimension is \
                     {cut_dim}, expected {expected}"
                ),
                None,
            ));
        }
    }
    Ok(AssumptionFragment::probabilistic(format!(
        "dimension {d} confirmed and every random hyperplane-section probe (1..={} cuts) \
         returned the expected dimension; the rank-deficiency system is inconsistent",
        d + 1
    )))
}

fn random_hyperplane(ring: &Arc<Ring>, rng: &mut ChaCha20Rng) -> Result<Poly> {
    let n = ring.nvars();
    for _ in 0..64 {
        let coeffs: Vec<i64> = (0..=n).map(|_| rng.gen_range(-9..=9)).collect();
        if coeffs[..n].iter().all(|&c| c == 0) {
            continue;
        }
        let mut h = Polynomial::constant(ring, Rat::from_integer(coeffs[n].into()));
        for (vidx, &cv) in coeffs[..n].iter().enumerate() {
            if cv != 0 {
                let mut e = vec![0u32; n];
                e[vidx] = 1;
                h.add_term(Monomial(e), Rat::from_integer(cv.into()));
            }
        }
        return Ok(h);
    }
    Err(Error::ResourceLimit { what: "random hyperplane draws".into(), limit: 64 })
}

// ---------------------------------------------------------------------------
// Assumption P: first component proper and bounded below
// ---------------------------------------------------------------------------

/// Properness is claimed only by exact shape recognition: the first map
/// component must be literally Σ_k (x_k − a_k)², the squared distance to a
/// rational center, which is proper and bounded below on real space. Any
/// other shape is reported `Unverified` — no general properness analysis is
/// attempted.
pub fn check_assumption_p(map: &PolyMap) -> AssumptionFragment {
    match squared_distance_center(map.component(0)) {
        Some(center) => {
            let c: Vec<String> = center.iter().map(|a| a.to_string()).collect();
            AssumptionFragment::verified(format!(
                "the first map component is the squared distance to ({}): proper and bounded \
                 below on real space by construction",
                c.join(", ")
            ))
        }
        None => AssumptionFragment::unverified(
            "the first map component is not a squared-distance form; properness and \
             boundedness below are not checked for general polynomials",
            None,
        ),
    }
}

/// If `p` equals Σ_k (x_k − a_k)² exactly, return the center (a_1,…,a_n).
pub fn squared_distance_center(p: &Poly) -> Option<Vec<Rat>> {
    let n = p.ring().nvars();
    let two = Rat::from_integer(2.into());
    let mut center = vec![Rat::zero(); n];
    let mut squares_seen = vec![false; n];
    let mut constant = Rat::zero();
    for (m, c) in p.terms() {
        let support: Vec<usize> = m.support().collect();
        match support.len() {
            0 => constant = c.clone(),
            1 => {
                let v = support[0];
                match m.0[v] {
                    1 => center[v] = -(c / &two),
                    2 => {
                        if !c.is_one() {
                            return None;
                        }
                        squares_seen[v] = true;
                    }
                    _ => return None,
                }
            }
            _ => return None,
        }
    }
    if !squares_seen.iter().all(|&s| s) {
        return None;
    }
    let norm2: Rat = center.iter().map(|a| a * a).sum();
    if constant != norm2 {
        return None;
    }
    Some(center)
}

// ---------------------------------------------------------------------------
// Assumptions B1/B2: polar-locus dimension & smoothness, fiber dimensions
// ---------------------------------------------------------------------------

/// Check B1 (the order-i polar locus is empty or (i−1)-equidimensional and
/// smooth away from the base singular locus) and B2 (every fiber of the
/// length-(i−1) map prefix is empty or (d−i+1)-equidimensional, probed on
/// `samples` random rational values plus values attained near real points
/// of the input).
pub fn check_assumption_b(
    v: &VarietySpec,
    map: &PolyMap,
    i: usize,
    samples: usize,
    seed: u64,
) -> Result<(AssumptionFragment, AssumptionFragment)> {
    if i < 2 || i > v.dimension() {
        return Err(Error::InvalidInput(format!(
            "prefix order {i} outside 2..={}",
            v.dimension()
        )));
    }
    let locus = critical_ideal(v, map, i)?;
    let b1 = check_b1(v, &locus, i)?;
    let b2 = check_b2(v, map, i, samples, seed)?;
    Ok((b1, b2))
}

fn check_b1(v: &VarietySpec, locus: &CriticalLocus, i: usize) -> Result<AssumptionFragment> {
    let w = locus.w_ideal();
    let wgb = w.groebner(&MonomialOrder::GrevLex)?;
    if wgb.contains_one() {
        return Ok(AssumptionFragment::verified(
            "the polar system is inconsistent: the polar locus is empty",
        ));
    }
    let want = (i - 1) as i64;
    let wdim = krull_dimension(w)?;
    if wdim != want {
        return Ok(AssumptionFragment::violated(
            format!("the polar locus has dimension {wdim}, expected {want}"),
            format!("Krull dimension {wdim}"),
        ));
    }
    let n = v.nvars();
    if w.generators().len() == n - (i - 1) {
        let wvar = VarietySpec::new(v.ring(), w.generators().to_vec(), i - 1)?;
        let sing = singular_ideal(&wvar)?;
        if sing.groebner(&MonomialOrder::GrevLex)?.contains_one() {
            return Ok(AssumptionFragment::verified(format!(
                "the polar locus is a complete intersection of dimension {want} whose \
                 rank-deficiency system is inconsistent: equidimensional and smooth everywhere"
            )));
        }
        let sdim = krull_dimension(&sing)?;
        return Ok(AssumptionFragment::unverified(
            format!(
                "the polar locus has dimension {want} but its rank-deficiency system is \
                 consistent (dimension {sdim}); candidate singular points cannot be separated \
                 from the base singular locus without radical computation"
            ),
            None,
        ));
    }
    Ok(AssumptionFragment::probabilistic(format!(
        "the polar locus has exact dimension {want}; smoothness was not probed because its \
         {} generators do not form a complete intersection of codimension {}",
        w.generators().len(),
        n - (i - 1)
    )))
}

fn check_b2(
    v: &VarietySpec,
    map: &PolyMap,
    i: usize,
    samples: usize,
    seed: u64,
) -> Result<AssumptionFragment> {
    let m = i - 1;
    let d = v.dimension() as i64;
    let expected = d - m as i64;
    let mut values: Vec<Vec<Rat>> = Vec::new();

    // Values attained near real points of the input: midpoints of the real
    // boxes of the order-1 polar system are rational points close to the
    // set, and their images under the prefix are the most delicate fiber
    // values (the extremal levels). Skipped silently when that system is
    // not zero-dimensional — the random probes below still run.
    if let Ok(locus1) = critical_ideal(v, &PolyMap::new(vec![map.component(0).clone()])?, 1) {
        if krull_dimension(locus1.w_ideal())? == 0 {
            if let Ok(boxes) = solve_real(locus1.w_ideal(), &crate::zerodim::default_box_width()) {
                for b in boxes.iter().take(4) {
                    let point: Vec<Rat> = b.coordinates.iter().map(|iv| iv.midpoint()).collect();
                    let mut y = Vec::with_capacity(m);
                    for j in 0..m {
                        y.push(map.component(j).evaluate(&point)?);
                    }
                    values.push(y);
                }
            }
        }
    }

    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0xB2B2_B2B2);
    for _ in 0..samples {
        let y: Vec<Rat> = (0..m)
            .map(|_| {
                Rat::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into())
            })
            .collect();
        values.push(y);
    }

    let mut probed = 0usize;
    for y in &values {
        let spec = FiberSpec::new(v.clone(), map.clone(), m, y.clone())?;
        let fib = fiber_ideal(&spec)?;
        let fdim = krull_dimension(&fib)?;
        if fdim != -1 && fdim != expected {
            let ys: Vec<String> = y.iter().map(|a| a.to_string()).collect();
            return Ok(AssumptionFragment::violated(
                format!(
                    "the fiber of the length-{m} prefix over ({}) has dimension {fdim}, \
                     expected empty or {expected}",
                    ys.join(", ")
                ),
                format!("fiber value ({})", ys.join(", ")),
            ));
        }
        probed += 1;
    }
    Ok(AssumptionFragment::probabilistic(format!(
        "{probed} fibers of the length-{m} prefix probed (random values and values attained \
         near real points): every dimension was empty or {expected}"
    )))
}

// ---------------------------------------------------------------------------
// Sample set on the inner polar system
// ---------------------------------------------------------------------------

/// All real solutions of the inner polar system W(first-component, polar
/// locus), each enclosed in a rational box, together with that system.
#[derive(Debug, Clone)]
pub struct SampleSet {
    points: Vec<SolutionBox>,
    source_ideal: Ideal,
}

impl SampleSet {
    pub fn points(&self) -> &[SolutionBox] {
        &self.points
    }

    pub fn source_ideal(&self) -> &Ideal {
        &self.source_ideal
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Compute the sample set: the critical points of the first map component
/// on the order-i polar locus, solved over the reals. Only the
/// zero-dimensional case is supported; a positive-dimensional inner system
/// is reported as an explicit error carrying the computed dimension
/// (general sample-point algorithms for positive dimension are out of
/// scope). An inconsistent (empty) polar or inner system yields an empty
/// sample set.
pub fn compute_sample_set(
    v: &VarietySpec,
    map: &PolyMap,
    i: usize,
    width: &Rat,
) -> Result<SampleSet> {
    let locus = critical_ideal(v, map, i)?;
    let w = locus.w_ideal().clone();
    if w.groebner(&MonomialOrder::GrevLex)?.contains_one() {
        return Ok(SampleSet { points: Vec::new(), source_ideal: w });
    }
    let wdim = krull_dimension(&w)?;
    let wvar = VarietySpec::new(v.ring(), w.generators().to_vec(), i - 1)?;
    let phi1 = PolyMap::new(vec![map.component(0).clone()])?;
    let inner = match critical_ideal(&wvar, &phi1, 1) {
        Ok(locus) => locus,
        // a degenerate polar locus (wrong dimension) may not even admit the
        // rank criterion; the sample construction is then positive-dimensional
        Err(Error::InvalidInput(_)) if wdim != (i as i64) - 1 => {
            return Err(Error::PositiveDimensional { dim: wdim });
        }
        Err(e) => return Err(e),
    };
    let source = inner.w_ideal().clone();
    if source.groebner(&MonomialOrder::GrevLex)?.contains_one() {
        return Ok(SampleSet { points: Vec::new(), source_ideal: source });
    }
    let dim = krull_dimension(&source)?;
    if dim != 0 {
        return Err(Error::PositiveDimensional { dim });
    }
    let points = solve_real(&source, width)?;
    Ok(SampleSet { points, source_ideal: source })
}

// ---------------------------------------------------------------------------
// Image ideal of a zero-dimensional set under a map prefix
// ---------------------------------------------------------------------------

/// The ring Q[y1,…,ym] hosting images of the length-m map prefix.
pub fn image_ring(m: usize) -> Arc<Ring> {
    let names: Vec<String> = (1..=m).map(|j| format!("y{j}")).collect();
    Ring::internal(&names)
}

/// Generators (in Q[y1,…,ym]) of the vanishing ideal of the image of the
/// zero-dimensional set V(K) under the length-m map prefix.
///
/// For m = 1 the generator is computed directly as the annihilator of the
/// class of 1 under multiplication by the first component in the quotient
/// ring: that polynomial q satisfies q(first component) ∈ K, so it kills
/// every image value, and it divides the matrix's minimal polynomial, whose
/// roots are exactly the image values — hence q is squarefree with root set
/// exactly the image. For m ≥ 2 the y-variables are adjoined with relations
/// y_j − φ_j and the x-variables are eliminated.
pub fn image_ideal(k: &Ideal, map: &PolyMap, m: usize) -> Result<Vec<Poly>> {
    if m == 0 || m > map.len() {
        return Err(Error::InvalidInput(format!(
            "prefix length {m} outside 1..={}",
            map.len()
        )));
    }
    if k.ring() != map.ring() {
        return Err(Error::RingMismatch {
            left: k.ring().to_string(),
            right: map.ring().to_string(),
        });
    }
    let yring = image_ring(m);
    let gb = k.groebner(&MonomialOrder::GrevLex)?;
    if gb.contains_one() {
        return Ok(vec![Polynomial::one(&yring)]);
    }
    if m == 1 {
        let mult = multiplication_matrix_for_poly(&gb, map.component(0))?;
        let mut start = vec![Rat::zero(); mult.len()];
        start[0] = Rat::one(); // the constant monomial 1 is minimal in any order
        let ann = vector_annihilator(&mult, &start);
        let mut q = Polynomial::zero(&yring);
        for (j, c) in ann.iter().enumerate() {
            if !c.is_zero() {
                q.add_term(Monomial(vec![j as u32]), c.clone());
            }
        }
        return Ok(vec![q]);
    }
    let ring = k.ring();
    let n = ring.nvars();
    let ynames: Vec<String> = (1..=m).map(|j| format!("y{j}")).collect();
    let yrefs: Vec<&str> = ynames.iter().map(|s| s.as_str()).collect();
    let ext = ring.extended(&yrefs);
    let idmap: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Poly> =
        k.generators().iter().map(|g| g.map_vars(&ext, &idmap)).collect::<Result<_>>()?;
    for (j, phi) in map.components().iter().take(m).enumerate() {
        let y = Polynomial::var(&ext, n + j)?;
        gens.push(y.checked_sub(&phi.map_vars(&ext, &idmap)?)?);
    }
    let keep: Vec<usize> = (n..n + m).collect();
    let eliminated = elimination_ideal(&Ideal::new(&ext, gens)?, &keep)?;
    let mut var_map = vec![0usize; n + m];
    for (j, slot) in var_map.iter_mut().enumerate().skip(n) {
        *slot = j - n;
    }
    eliminated.generators().iter().map(|g| g.map_vars(&yring, &var_map)).collect()
}

// ---------------------------------------------------------------------------
// Bundle assembly
// ---------------------------------------------------------------------------

/// Everything the verification harness needs about the candidate roadmap
/// R = W ∪ F: the input, the polar locus W with its ideals, the sample set,
/// the distinguished point set K (solved and counted), the selected
/// critical values of the first component, the image eliminants of the
/// prefix, the fiber-union ideal F, the assumption report, and the list of
/// downgrade reasons (empty exactly when every assumption is `Verified`).
#[derive(Debug, Clone)]
pub struct RoadmapBundle {
    variety: VarietySpec,
    map: PolyMap,
    prefix_len: usize,
    w_locus: CriticalLocus,
    sample: SampleSet,
    k_ideal: Ideal,
    k_points: SolutionSet,
    critical_values: Vec<Interval>,
    image_eliminants: Vec<Poly>,
    f_ideal: Ideal,
    assumptions: AssumptionReport,
    certificate: Vec<String>,
    notes: Vec<String>,
}

impl RoadmapBundle {
    pub fn variety(&self) -> &VarietySpec {
        &self.variety
    }

    pub fn map(&self) -> &PolyMap {
        &self.map
    }

    /// The prefix order i of the construction.
    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    pub fn w_locus(&self) -> &CriticalLocus {
        &self.w_locus
    }

    pub fn sample(&self) -> &SampleSet {
        &self.sample
    }

    /// The union ideal behind the distinguished point set K.
    pub fn k_ideal(&self) -> &Ideal {
        &self.k_ideal
    }

    pub fn k_points(&self) -> &SolutionSet {
        &self.k_points
    }

    /// Isolating intervals of the selected critical values, pairwise
    /// disjoint and increasing.
    pub fn critical_values(&self) -> &[Interval] {
        &self.critical_values
    }

    /// Generators (in the image ring) of the vanishing ideal of the image
    /// of K under the length-(i−1) prefix.
    pub fn image_eliminants(&self) -> &[Poly] {
        &self.image_eliminants
    }

    pub fn f_ideal(&self) -> &Ideal {
        &self.f_ideal
    }

    /// The pair of curve ideals (W, F) whose union is the candidate roadmap.
    pub fn components(&self) -> (&Ideal, &Ideal) {
        (self.w_locus.w_ideal(), &self.f_ideal)
    }

    pub fn assumptions(&self) -> &AssumptionReport {
        &self.assumptions
    }

    /// Downgrade reasons; empty exactly when the bundle is fully verified.
    pub fn certificate(&self) -> &[String] {
        &self.certificate
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    /// Serialize the bundle as a versioned JSON tree: polynomials as
    /// canonical strings, intervals as exact rational endpoint pairs,
    /// statuses as enum strings.
    pub fn to_document(&self) -> serde_json::Value {
        let polys = |ps: &[Poly]| -> Vec<String> { ps.iter().map(|p| p.to_string()).collect() };
        let interval = |iv: &Interval| json!([iv.lo.to_string(), iv.hi.to_string()]);
        let boxes = |bs: &[SolutionBox]| -> Vec<serde_json::Value> {
            bs.iter()
                .map(|b| {
                    json!({
                        "coordinates": b.coordinates.iter().map(interval).collect::<Vec<_>>(),
                        "status": match b.status {
                            crate::zerodim::BoxStatus::CertifiedUnique => "certified-unique",
                            crate::zerodim::BoxStatus::Candidate => "candidate",
                        },
                    })
                })
                .collect()
        };
        json!({
            "format": 1,
            "variety": {
                "variables": self.variety.ring().var_names(),
                "dimension": self.variety.dimension(),
                "generators": polys(self.variety.generators()),
            },
            "map": polys(self.map.components()),
            "prefix_len": self.prefix_len,
            "w_ideal": polys(self.w_locus.w_ideal().generators()),
            "critical_system": polys(self.w_locus.k_ideal().generators()),
            "singular_system": polys(self.w_locus.sing_ideal().generators()),
            "sample_points": boxes(&self.sample.points),
            "sample_source": polys(self.sample.source_ideal.generators()),
            "k_ideal": polys(self.k_ideal.generators()),
            "k_points": {
                "complex_with_multiplicity": self.k_points.complex_count_with_multiplicity,
                "distinct_complex": self.k_points.distinct_complex_count,
                "real": self.k_points.real_count,
                "boxes": boxes(&self.k_points.real_boxes),
            },
            "critical_values": self.critical_values.iter().map(interval).collect::<Vec<_>>(),
            "image_eliminants": polys(&self.image_eliminants),
            "f_ideal": polys(self.f_ideal.generators()),
            "assumptions": self.assumptions,
            "certificate": self.certificate,
            "notes": self.notes,
        })
    }
}

/// Assemble the candidate roadmap of order i for the given input and map:
/// run every assumption check (a violated one aborts with an error; any
/// other shortfall only downgrades the certificate), compute the polar
/// locus W, the sample set, the distinguished points
/// K = (order-1 polar points) ∪ (sample points) ∪ (singular points) as one
/// zero-dimensional ideal (an intersection of the component ideals), the
/// image eliminants of the length-(i−1) prefix, the selected critical
/// values, and the fiber-union ideal F = input + composed eliminants.
/// Deterministic for a fixed seed.
pub fn assemble_roadmap(
    v: &VarietySpec,
    map: &PolyMap,
    i: usize,
    width: &Rat,
    seed: u64,
) -> Result<RoadmapBundle> {
    if i < 2 || i > v.dimension() {
        return Err(Error::InvalidInput(format!(
            "prefix order {i} outside 2..={}",
            v.dimension()
        )));
    }
    if map.ring() != v.ring() {
        return Err(Error::RingMismatch {
            left: v.ring().to_string(),
            right: map.ring().to_string(),
        });
    }
    if map.len() < i {
        return Err(Error::InvalidInput(format!(
            "the map has {} components, fewer than the prefix order {i}",
            map.len()
        )));
    }

    let a = check_assumption_a(v)?;
    let p = check_assumption_p(map);
    let (b1, b2) = check_assumption_b(v, map, i, DEFAULT_FIBER_SAMPLES, seed)?;
    for (name, frag) in [("A", &a), ("P", &p), ("B1", &b1), ("B2", &b2)] {
        if frag.status == Status::Violated {
            return Err(Error::InvalidInput(format!(
                "assumption {name} is violated: {} (witness: {})",
                frag.evidence,
                frag.witness.as_deref().unwrap_or("none")
            )));
        }
    }

    let w_locus = critical_ideal(v, map, i)?;
    let sample = compute_sample_set(v, map, i, width)?;
    let c1 = AssumptionFragment::verified(format!(
        "the inner polar system is zero-dimensional; the sample set has {} real point(s)",
        sample.len()
    ));
    let c2 = AssumptionFragment::verified(
        "the sample set consists of every real solution of the inner polar system, so it \
         meets every semi-algebraically connected component of that system's real locus",
    );
    let assumptions = AssumptionReport { a, p, b1, b2, c1, c2 };

    // K as one zero-dimensional ideal: intersect the component ideals
    // (order-1 polar points, sample source, singular points when present).
    // An intersection of radical ideals is radical, so the solution counts
    // of the union are exact.
    let phi1 = PolyMap::new(vec![map.component(0).clone()])?;
    let order1 = critical_ideal(v, &phi1, 1)?;
    let mut k_ideal = intersect(order1.w_ideal(), &sample.source_ideal)?;
    let sing = w_locus.sing_ideal();
    if !sing.groebner(&MonomialOrder::GrevLex)?.contains_one() {
        k_ideal = intersect(&k_ideal, sing)?;
    }
    let k_points = analyze(&k_ideal, width)?;

    let m = i - 1;
    let image_eliminants = image_ideal(&k_ideal, map, m)?;

    let critical_values = if m == 1 {
        select_critical_values(
            &image_eliminants[0],
            map.component(0),
            &k_points.real_boxes,
            width,
        )?
    } else {
        Vec::new()
    };

    let mut f_gens = v.generators().to_vec();
    for q in &image_eliminants {
        f_gens.push(compose_with_prefix(q, map, m)?);
    }
    let f_ideal = Ideal::new(v.ring(), f_gens)?;

    let mut certificate = assumptions.degraded_reasons();
    if !k_points.real_boxes.iter().all(|b| b.is_certified())
        || !sample.points.iter().all(|b| b.is_certified())
    {
        certificate
            .push("some solution boxes carry candidate (uncertified) status".to_string());
    }
    let notes = vec![
        "generators are taken as given: ideal-theoretic statements are about the input \
         presentation, not its radical"
            .to_string(),
    ];

    Ok(RoadmapBundle {
        variety: v.clone(),
        map: map.clone(),
        prefix_len: i,
        w_locus,
        sample,
        k_ideal,
        k_points,
        critical_values,
        image_eliminants,
        f_ideal,
        assumptions,
        certificate,
        notes,
    })
}

/// Select, among the real roots of the univariate image eliminant, exactly
/// the values attained by the *real* distinguished points: a complex
/// solution can still have a real image value, so roots are kept only when
/// their isolating interval meets the interval image of some real box.
/// Ambiguities (one box image meeting several root intervals) are resolved
/// by shrinking the root intervals; if a box image genuinely spans several
/// roots after the bounded refinement, all of them are kept (a conservative
/// superset). Returned intervals are refined to the requested width,
/// pairwise disjoint, and increasing.
fn select_critical_values(
    eliminant: &Poly,
    first_component: &Poly,
    boxes: &[SolutionBox],
    width: &Rat,
) -> Result<Vec<Interval>> {
    if boxes.is_empty() {
        return Ok(Vec::new());
    }
    let (u, _) = UPoly::from_poly(eliminant)?;
    if u.degree() == 0 {
        return Ok(Vec::new());
    }
    let sf = u.squarefree_part()?;
    let mut roots = isolate_univariate_roots(eliminant)?;
    let images: Vec<Interval> = boxes
        .iter()
        .map(|b| eval_poly_interval(first_component, &b.coordinates))
        .collect::<Result<_>>()?;
    let sixteen = Rat::from_integer(16.into());
    let mut hit: BTreeSet<usize> = BTreeSet::new();
    for round in 0..40 {
        hit.clear();
        let mut ambiguous = false;
        for img in &images {
            let matches: Vec<usize> = roots
                .iter()
                .enumerate()
                .filter(|(_, r)| r.intersects(img))
                .map(|(idx, _)| idx)
                .collect();
            if matches.len() > 1 {
                ambiguous = true;
            }
            hit.extend(matches);
        }
        if !ambiguous || round == 39 {
            break;
        }
        roots = roots
            .iter()
            .map(|r| {
                let target = r.width() / &sixteen;
                refine_to_width(&sf, r, &target)
            })
            .collect::<Result<_>>()?;
    }
    let mut out = Vec::with_capacity(hit.len());
    for idx in hit {
        let iv = &roots[idx];
        out.push(if iv.width() > *width { refine_to_width(&sf, iv, width)? } else { iv.clone() });
    }
    Ok(out)
}

/// Compose an image-ring polynomial with the length-m map prefix, yielding
/// a polynomial in the input ring. The univariate case runs a Horner loop
/// in the first component; the multivariate case substitutes every image
/// variable.
fn compose_with_prefix(q: &Poly, map: &PolyMap, m: usize) -> Result<Poly> {
    if m == 1 {
        let inner = map.component(0);
        let ring = inner.ring();
        let deg = q.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (mono, c) in q.terms() {
            coeffs[mono.0[0] as usize] = c.clone();
        }
        let mut acc = Polynomial::constant(ring, coeffs[deg].clone());
        for j in (0..deg).rev() {
            acc = acc.checked_mul(inner)?;
            if !coeffs[j].is_zero() {
                acc = acc.checked_add(&Polynomial::constant(ring, coeffs[j].clone()))?;
            }
        }
        return Ok(acc);
    }
    q.substitute_all(&map.components()[..m], |c| c.clone())
}

fn box_summary(b: &SolutionBox) -> String {
    let mids: Vec<String> = b.coordinates.iter().map(|iv| format!("{}", iv.midpoint_f64())).collect();
    format!("({})", mids.join(", "))
}
