//! Numerical verification harness for the roadmap connectivity property.
//! Samples real points of varieties inside sublevel sets of the first map
//! component (exact line/hyperplane sections, floating point only at the
//! very end), estimates semi-algebraically connected components with
//! ε-graphs, traces curves by exact level slicing, and issues three-valued
//! verdicts (pass / fail / inconclusive) that never claim more than the
//! numerics support: a fail must persist when ε doubles, and ε-instability
//! always degrades to inconclusive.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::geometry::{critical_ideal, PolyMap, VarietySpec};
use crate::groebner::{krull_dimension, Ideal};
use crate::polyring::{Interval, Monomial, Polynomial, Ring};
use crate::roadmap::{squared_distance_center, RoadmapBundle};
use crate::zerodim::{isolate_univariate_roots_to_width, solve_real, SolutionBox};
use crate::{Int, Rat};

type Poly = Polynomial<Rat>;

/// Residual bound demanded of every sampled point (exact evaluation at the
/// rational point, compared after conversion to double precision).
pub const SAMPLE_RESIDUAL_TOLERANCE: f64 = 1e-10;
/// Residual bound demanded of every curve-slice polyline vertex.
pub const POLYLINE_RESIDUAL_TOLERANCE: f64 = 1e-8;

fn rat_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Box width used whenever sampled points must pass the residual filter:
/// midpoints of 2⁻⁴⁰ boxes evaluate well below the 1e−10 tolerance.
fn sampling_box_width() -> Rat {
    Rat::new(Int::one(), Int::one() << 40)
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn ideal_id(ideal: &Ideal) -> String {
    let mut text = String::new();
    for g in ideal.generators() {
        text.push_str(&g.to_string());
        text.push(';');
    }
    format!("{:016x}", fnv1a64(text.as_bytes()))
}

// ---------------------------------------------------------------------------
// Point clouds
// ---------------------------------------------------------------------------

/// Issued when a sampling run could not reach the requested point count.
#[derive(Debug, Clone)]
pub struct SampleShortfall {
    pub requested: usize,
    pub achieved: usize,
    pub lines_drawn: usize,
}

/// Double-precision samples of a real algebraic set inside a sublevel
/// region of the first map component, each with an exact-evaluation
/// residual bound.
#[derive(Debug, Clone)]
pub struct PointCloud {
    pub points: Vec<Vec<f64>>,
    pub residuals: Vec<f64>,
    /// Hash identifier of the sampled ideal's generators.
    pub source: String,
    /// The sublevel bound u for the first component.
    pub region_bound: Rat,
    pub tolerance: f64,
    pub shortfall: Option<SampleShortfall>,
}

impl PointCloud {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Sample real points of V(I) inside {φ1 ≤ u} with seeded random rational
/// sections, exact root isolation, and exact residual/region filtering.
///
/// Supported shapes (≤ 4 variables): dimension n−1 (sections by random
/// rational lines, the restriction being univariate), dimension 1 (sections
/// by random rational hyperplanes, each cut solved as a zero-dimensional
/// system), and dimension 0 (solved directly). Other shapes are rejected.
/// Reaching fewer than `count` points is not an error: the cloud carries an
/// explicit shortfall report.
pub fn sample_real_points(
    ideal: &Ideal,
    phi1: &Poly,
    u: &Rat,
    count: usize,
    seed: u64,
) -> Result<PointCloud> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if n > 4 {
        return Err(Error::UnsupportedShape(format!(
            "sampling supports at most 4 variables, got {n}"
        )));
    }
    if phi1.ring() != ring {
        return Err(Error::RingMismatch { left: ring.to_string(), right: phi1.ring().to_string() });
    }
    if count == 0 {
        return Err(Error::InvalidInput("requested sample count must be positive".into()));
    }
    let dim = krull_dimension(ideal)?;
    let mut cloud = PointCloud {
        points: Vec::new(),
        residuals: Vec::new(),
        source: ideal_id(ideal),
        region_bound: u.clone(),
        tolerance: SAMPLE_RESIDUAL_TOLERANCE,
        shortfall: None,
    };
    if dim == -1 {
        cloud.shortfall = Some(SampleShortfall { requested: count, achieved: 0, lines_drawn: 0 });
        return Ok(cloud);
    }
    if dim == 0 {
        for b in solve_real(ideal, &sampling_box_width())? {
            let point: Vec<Rat> = b.coordinates.iter().map(|iv| iv.midpoint()).collect();
            admit_point(&mut cloud, ideal, phi1, u, &point);
        }
        if cloud.len() < count {
            cloud.shortfall =
                Some(SampleShortfall { requested: count, achieved: cloud.len(), lines_drawn: 0 });
        }
        return Ok(cloud);
    }
    if dim != (n as i64) - 1 && dim != 1 {
        return Err(Error::UnsupportedShape(format!(
            "sampling supports hypersurfaces, curves and points; the ideal has dimension {dim} \
             in {n} variables"
        )));
    }

    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let anchor_radius = anchor_radius(phi1, u);
    let budget = 8 * count.max(8);
    let mut drawn = 0usize;
    while cloud.len() < count && drawn < budget {
        drawn += 1;
        if dim == (n as i64) - 1 {
            sample_line_section(ideal, phi1, u, &anchor_radius, &mut rng, &mut cloud)?;
        } else {
            sample_hyperplane_section(ideal, phi1, u, &anchor_radius, &mut rng, &mut cloud)?;
        }
    }
    if cloud.len() < count {
        cloud.shortfall =
            Some(SampleShortfall { requested: count, achieved: cloud.len(), lines_drawn: drawn });
    }
    Ok(cloud)
}

/// Radius of the box the random sections are anchored in: for a
/// squared-distance first component this is 1.3·√u around its center (the
/// whole sublevel region plus margin); otherwise a slab of size |u|·1.3+5
/// around the origin (adequate for the compact corpus shapes).
fn anchor_radius(phi1: &Poly, u: &Rat) -> (Vec<Rat>, i64) {
    let n = phi1.ring().nvars();
    let uf = rat_f64(u);
    match squared_distance_center(phi1) {
        Some(center) if uf >= 0.0 => {
            let r = (1.3 * uf.sqrt()).ceil().max(1.0) as i64;
            (center, r)
        }
        _ => {
            let r = (1.3 * uf.abs() + 5.0).ceil() as i64;
            (vec![Rat::zero(); n], r)
        }
    }
}

fn random_anchor(center: &[Rat], radius: i64, rng: &mut ChaCha20Rng) -> Vec<Rat> {
    center
        .iter()
        .map(|c| c + Rat::new(Int::from(rng.gen_range(-1000i64..=1000) * radius), Int::from(1000)))
        .collect()
}

fn random_direction(n: usize, rng: &mut ChaCha20Rng) -> Vec<i64> {
    loop {
        let d: Vec<i64> = (0..n).map(|_| rng.gen_range(-9i64..=9)).collect();
        if d.iter().any(|&c| c != 0) {
            return d;
        }
    }
}

/// Exact filter + residual check; the point is admitted only when every
/// generator evaluates below the tolerance and φ1 ≤ u holds exactly.
fn admit_point(cloud: &mut PointCloud, ideal: &Ideal, phi1: &Poly, u: &Rat, point: &[Rat]) {
    let mut residual = 0f64;
    for g in ideal.generators() {
        let val = match g.evaluate(point) {
            Ok(v) => rat_f64(&v).abs(),
            Err(_) => return,
        };
        residual = residual.max(val);
    }
    if residual > cloud.tolerance {
        return;
    }
    let reach = match phi1.evaluate(point) {
        Ok(v) => v,
        Err(_) => return,
    };
    if reach > *u {
        return;
    }
    cloud.points.push(point.iter().map(rat_f64).collect());
    cloud.residuals.push(residual);
}

/// Intersect a hypersurface with the rational line through `anchor` along a
/// random direction: restrict the first generator to the line (univariate in
/// the parameter), isolate its real roots exactly, push the midpoints back.
fn sample_line_section(
    ideal: &Ideal,
    phi1: &Poly,
    u: &Rat,
    anchor_box: &(Vec<Rat>, i64),
    rng: &mut ChaCha20Rng,
    cloud: &mut PointCloud,
) -> Result<()> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let anchor = random_anchor(&anchor_box.0, anchor_box.1, rng);
    let dir = random_direction(n, rng);
    let tring = Ring::internal(&["t"]);
    let t = Polynomial::var(&tring, 0)?;
    let repl: Vec<Poly> = anchor
        .iter()
        .zip(&dir)
        .map(|(a, &d)| {
            let mut line = Polynomial::constant(&tring, a.clone());
            if d != 0 {
                line = line
                    .checked_add(&t.scale(&Rat::from_integer(d.into())))
                    .expect("line coordinate");
            }
            line
        })
        .collect();
    let restricted = ideal.generators()[0].substitute_all(&repl, |c| c.clone())?;
    if restricted.is_zero() {
        return Ok(()); // the line lies inside the hypersurface; skip the draw
    }
    let roots = isolate_univariate_roots_to_width(&restricted, &sampling_box_width())?;
    for iv in roots {
        let tm = iv.midpoint();
        let point: Vec<Rat> = anchor
            .iter()
            .zip(&dir)
            .map(|(a, &d)| a + &tm * Rat::from_integer(d.into()))
            .collect();
        admit_point(cloud, ideal, phi1, u, &point);
    }
    Ok(())
}

/// Intersect a curve with a random rational hyperplane through an anchor in
/// the region; the cut is a zero-dimensional system, solved exactly.
fn sample_hyperplane_section(
    ideal: &Ideal,
    phi1: &Poly,
    u: &Rat,
    anchor_box: &(Vec<Rat>, i64),
    rng: &mut ChaCha20Rng,
    cloud: &mut PointCloud,
) -> Result<()> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let anchor = random_anchor(&anchor_box.0, anchor_box.1, rng);
    let coeffs = random_direction(n, rng);
    let mut plane = Polynomial::zero(ring);
    let mut shift = Rat::zero();
    for (v, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            let mut e = vec![0u32; n];
            e[v] = 1;
            plane.add_term(Monomial(e), Rat::from_integer(c.into()));
            shift += Rat::from_integer(c.into()) * &anchor[v];
        }
    }
    plane = plane.checked_sub(&Polynomial::constant(ring, shift))?;
    let mut gens = ideal.generators().to_vec();
    gens.push(plane);
    let cut = Ideal::new(ring, gens)?;
    let boxes = match solve_real(&cut, &sampling_box_width()) {
        Ok(b) => b,
        Err(Error::NotZeroDimensional { .. }) => return Ok(()), // degenerate cut; skip
        Err(e) => return Err(e),
    };
    for b in boxes {
        let point: Vec<Rat> = b.coordinates.iter().map(|iv| iv.midpoint()).collect();
        admit_point(cloud, ideal, phi1, u, &point);
    }
    Ok(())
}

/// Quasi-uniform subsample at the spacing a `target`-point cloud would
/// have: the keeping radius is 2.2× the median nearest-neighbor distance of
/// a stride-`len/target` subsample, and points (in deterministic order) are
/// kept when at least that far from every point already kept. Evening the
/// raw sections out at the target scale is what makes the default ε of the
/// component graph (3× median nearest-neighbor) reliable: raw random
/// sections leave voids of order mean·log(n) that the raw median never
/// covers, while oversampling shrinks them below the target spacing.
pub fn thin_cloud(cloud: &PointCloud, target: usize) -> PointCloud {
    if cloud.len() < 3 {
        return cloud.clone();
    }
    let stride = (cloud.len() / target.max(1)).max(1);
    let subsample: Vec<Vec<f64>> =
        cloud.points.iter().step_by(stride).cloned().collect();
    let med = if subsample.len() >= 3 {
        median_nearest_neighbor(&subsample)
    } else {
        median_nearest_neighbor(&cloud.points)
    };
    let r = 2.2 * med;
    let mut kept: Vec<usize> = Vec::new();
    for i in 0..cloud.points.len() {
        if kept.iter().all(|&j| dist(&cloud.points[i], &cloud.points[j]) >= r) {
            kept.push(i);
        }
    }
    PointCloud {
        points: kept.iter().map(|&i| cloud.points[i].clone()).collect(),
        residuals: kept.iter().map(|&i| cloud.residuals[i]).collect(),
        source: cloud.source.clone(),
        region_bound: cloud.region_bound.clone(),
        tolerance: cloud.tolerance,
        shortfall: cloud.shortfall.clone(),
    }
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

fn median_nearest_neighbor(points: &[Vec<f64>]) -> f64 {
    let mut nn: Vec<f64> = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            points
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| dist(p, q))
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    nn.sort_by(|a, b| a.partial_cmp(b).unwrap());
    nn[nn.len() / 2]
}

// ---------------------------------------------------------------------------
// ε-graphs
// ---------------------------------------------------------------------------

/// The ε-graph of a point cloud: edges between points at distance ≤ ε,
/// vertex labels indexing the connected components (numbered by first
/// occurrence), and a stability flag comparing the count against 2ε.
#[derive(Debug, Clone)]
pub struct ComponentGraph {
    pub edges: Vec<(usize, usize)>,
    pub labels: Vec<usize>,
    pub component_count: usize,
    pub epsilon: f64,
    /// True when doubling ε does not change the component count.
    pub stable: bool,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, i: usize) -> usize {
        if self.parent[i] != i {
            let root = self.find(self.parent[i]);
            self.parent[i] = root;
        }
        self.parent[i]
    }

    fn union(&mut self, i: usize, j: usize) {
        let (ri, rj) = (self.find(i), self.find(j));
        if ri != rj {
            self.parent[ri.max(rj)] = ri.min(rj);
        }
    }
}

fn component_labels(points: &[Vec<f64>], eps: f64, extra_edges: &[(usize, usize)]) -> Vec<usize> {
    let n = points.len();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if dist(&points[i], &points[j]) <= eps {
                uf.union(i, j);
            }
        }
    }
    for &(i, j) in extra_edges {
        uf.union(i, j);
    }
    let mut labels = vec![usize::MAX; n];
    let mut next = 0usize;
    let mut root_label: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        let r = uf.find(i);
        let lbl = match root_label.iter().find(|(root, _)| *root == r) {
            Some((_, l)) => *l,
            None => {
                root_label.push((r, next));
                next += 1;
                next - 1
            }
        };
        labels[i] = lbl;
    }
    labels
}

/// Build the ε-graph of the cloud. When ε is not given it defaults to 3×
/// the median nearest-neighbor distance. The stability flag compares the
/// component count against the one at 2ε.
pub fn epsilon_components(cloud: &PointCloud, epsilon: Option<f64>) -> Result<ComponentGraph> {
    if cloud.is_empty() {
        return Err(Error::InvalidInput("cannot build the ε-graph of an empty cloud".into()));
    }
    let eps = match epsilon {
        Some(e) if e > 0.0 => e,
        Some(e) => {
            return Err(Error::InvalidInput(format!("ε must be positive, got {e}")));
        }
        None => {
            if cloud.len() < 2 {
                1.0
            } else {
                3.0 * median_nearest_neighbor(&cloud.points)
            }
        }
    };
    let labels = component_labels(&cloud.points, eps, &[]);
    let component_count = labels.iter().copied().max().map_or(0, |m| m + 1);
    let doubled = component_labels(&cloud.points, 2.0 * eps, &[]);
    let doubled_count = doubled.iter().copied().max().map_or(0, |m| m + 1);
    let mut edges = Vec::new();
    for i in 0..cloud.points.len() {
        for j in (i + 1)..cloud.points.len() {
            if dist(&cloud.points[i], &cloud.points[j]) <= eps {
                edges.push((i, j));
            }
        }
    }
    Ok(ComponentGraph {
        edges,
        labels,
        component_count,
        epsilon: eps,
        stable: component_count == doubled_count,
    })
}

// ---------------------------------------------------------------------------
// Exact level slicing of curves
// ---------------------------------------------------------------------------

/// The exact real solutions of curve ∩ {φ1 = level}.
#[derive(Debug, Clone)]
pub struct LevelSlice {
    pub level: Rat,
    pub boxes: Vec<SolutionBox>,
    /// Set when the requested level had to be moved off a degenerate value;
    /// holds the documented rational offset that was applied.
    pub perturbed_by: Option<Rat>,
}

/// A traced branch of the curve: one vertex per level it appears in.
#[derive(Debug, Clone)]
pub struct Polyline {
    pub branch: usize,
    /// Indices into the slice list, parallel with `vertices`.
    pub slice_indices: Vec<usize>,
    pub vertices: Vec<Vec<f64>>,
    pub boxes: Vec<SolutionBox>,
}

/// The result of slicing: per-level solutions plus the linked polylines.
#[derive(Debug, Clone)]
pub struct SliceTrace {
    pub slices: Vec<LevelSlice>,
    pub polylines: Vec<Polyline>,
}

/// Slice a dimension-1 ideal by exact levels of φ1 and link the per-level
/// real solutions into polylines by nearest-neighbor matching across
/// consecutive levels. A level whose system degenerates (not
/// zero-dimensional) is retried once after adding a documented rational
/// offset of 1/1000 of the minimal gap between the requested levels.
pub fn slice_trace_curve(curve: &Ideal, phi1: &Poly, levels: &[Rat]) -> Result<SliceTrace> {
    if phi1.ring() != curve.ring() {
        return Err(Error::RingMismatch {
            left: curve.ring().to_string(),
            right: phi1.ring().to_string(),
        });
    }
    let mut sorted = levels.to_vec();
    sorted.sort();
    sorted.dedup();
    let offset = min_gap(&sorted)
        .map(|g| g / Rat::from_integer(1000.into()))
        .unwrap_or_else(|| Rat::new(Int::one(), Int::from(1000)));
    // tight boxes so that polyline vertices meet the residual bound
    let width = Rat::new(Int::one(), Int::one() << 40);
    let mut slices = Vec::with_capacity(sorted.len());
    for level in &sorted {
        let slice = match solve_level(curve, phi1, level, &width) {
            Ok(boxes) => LevelSlice { level: level.clone(), boxes, perturbed_by: None },
            Err(Error::NotZeroDimensional { .. }) => {
                let moved = level + &offset;
                let boxes = solve_level(curve, phi1, &moved, &width)?;
                LevelSlice { level: moved, boxes, perturbed_by: Some(offset.clone()) }
            }
            Err(e) => return Err(e),
        };
        slices.push(slice);
    }
    let polylines = link_slices(&slices);
    Ok(SliceTrace { slices, polylines })
}

fn min_gap(sorted: &[Rat]) -> Option<Rat> {
    sorted.windows(2).map(|w| &w[1] - &w[0]).min()
}

fn solve_level(curve: &Ideal, phi1: &Poly, level: &Rat, width: &Rat) -> Result<Vec<SolutionBox>> {
    let mut gens = curve.generators().to_vec();
    gens.push(phi1.checked_sub(&Polynomial::constant(curve.ring(), level.clone()))?);
    solve_real(&Ideal::new(curve.ring(), gens)?, width)
}

/// Greedy nearest-neighbor linking: consecutive slices are matched pair by
/// pair in order of increasing distance; unmatched points terminate or
/// start branches. A match extending a chain with at least two vertices is
/// refused when it is more than 3× longer than the chain's own previous
/// step, rescaled by the ratio of level spacings when the ladder gets
/// sparser — a branch ending near where another begins must not be fused
/// across a gap much wider than a genuine continuation step, or a polyline
/// could leap between distant parts of the curve. Fresh chains link to
/// whatever greedy matching leaves them: their first step has no
/// history to compare against.
fn link_slices(slices: &[LevelSlice]) -> Vec<Polyline> {
    let lvl = |si: usize| rat_f64(&slices[si].level);
    let mut polylines: Vec<Polyline> = Vec::new();
    // open[k] = index into polylines of the branch currently ending at
    // point k of the previous slice
    let mut open: Vec<usize> = Vec::new();
    for (si, slice) in slices.iter().enumerate() {
        let pts: Vec<Vec<f64>> =
            slice.boxes.iter().map(|b| b.midpoint_f64()).collect();
        let mut assigned: Vec<Option<usize>> = vec![None; pts.len()];
        if si > 0 && !open.is_empty() && !pts.is_empty() {
            let prev_last: Vec<Vec<f64>> =
                open.iter().map(|&pl| polylines[pl].vertices.last().unwrap().clone()).collect();
            let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
            for (oi, pv) in prev_last.iter().enumerate() {
                for (ci, cv) in pts.iter().enumerate() {
                    pairs.push((dist(pv, cv), oi, ci));
                }
            }
            pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            let mut used_prev = vec![false; prev_last.len()];
            for (d, oi, ci) in pairs {
                if used_prev[oi] || assigned[ci].is_some() {
                    continue;
                }
                let chain = &polylines[open[oi]];
                let k = chain.vertices.len();
                if k >= 2 {
                    let own_step =
                        dist(&chain.vertices[k - 1], &chain.vertices[k - 2]).max(1e-12);
                    let own_dl =
                        (lvl(chain.slice_indices[k - 1]) - lvl(chain.slice_indices[k - 2]))
                            .max(1e-15);
                    let trans_dl = (lvl(si) - lvl(chain.slice_indices[k - 1])).max(1e-15);
                    if d > 3.0 * own_step * (trans_dl / own_dl).max(1.0) {
                        continue;
                    }
                }
                used_prev[oi] = true;
                assigned[ci] = Some(open[oi]);
            }
        }
        let mut next_open = Vec::with_capacity(pts.len());
        for (ci, coords) in pts.iter().enumerate() {
            let pl = match assigned[ci] {
                Some(pl) => pl,
                None => {
                    polylines.push(Polyline {
                        branch: polylines.len(),
                        slice_indices: Vec::new(),
                        vertices: Vec::new(),
                        boxes: Vec::new(),
                    });
                    polylines.len() - 1
                }
            };
            polylines[pl].slice_indices.push(si);
            polylines[pl].vertices.push(coords.clone());
            polylines[pl].boxes.push(slice.boxes[ci].clone());
            next_open.push(pl);
        }
        open = next_open;
    }
    polylines
}

/// The simplest rational (smallest denominator, then smallest numerator) in
/// the open interval (lo, hi) — used to pick slicing levels with tiny
/// coefficients, keeping the per-level Gröbner bases cheap.
pub fn simplest_rational_between(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo < hi, "empty interval");
    if lo.is_negative() && hi.is_positive() {
        return Rat::zero();
    }
    if !hi.is_positive() {
        return -simplest_rational_between(&-hi.clone(), &-lo.clone());
    }
    // now 0 ≤ lo < hi
    let fl = lo.floor().to_integer();
    let candidate = Rat::from_integer(&fl + 1);
    if candidate < *hi {
        return candidate;
    }
    let a = hi - Rat::from_integer(fl.clone()); // 0 < a ≤ 1 upper offset
    let b = lo - Rat::from_integer(fl.clone()); // 0 ≤ b < a lower offset
    let inner = if b.is_zero() {
        // (fl, hi): pick fl + 1/y with the smallest y > 1/a
        let y = (Rat::one() / &a).floor().to_integer() + 1;
        Rat::from_integer(y)
    } else {
        simplest_rational_between(&(Rat::one() / &a), &(Rat::one() / &b))
    };
    Rat::from_integer(fl) + Rat::one() / inner
}

// ---------------------------------------------------------------------------
// Roadmap verification (the truncated connectivity property)
// ---------------------------------------------------------------------------

/// Verdict of a numerical connectivity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How one estimated component of the sublevel set fared.
#[derive(Debug, Clone)]
pub struct ComponentEntry {
    pub size: usize,
    pub has_roadmap_point: bool,
    pub roadmap_connected: bool,
}

/// What a realized roadmap point is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoadmapPointKind {
    /// Vertex of a traced polar-curve polyline.
    WSlice,
    /// Midpoint of a distinguished-point solution box.
    KPoint,
    /// Sample of a fiber of the first component just above a critical value.
    Fiber,
}

impl RoadmapPointKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RoadmapPointKind::WSlice => "w-slice",
            RoadmapPointKind::KPoint => "k-point",
            RoadmapPointKind::Fiber => "fiber",
        }
    }
}

/// One realized roadmap point, tagged with its source and (when within
/// reach) the cloud component it was assigned to.
#[derive(Debug, Clone)]
pub struct RoadmapPoint {
    pub kind: RoadmapPointKind,
    pub coords: Vec<f64>,
    pub residual: f64,
    pub component: Option<usize>,
    pub branch: Option<usize>,
}

/// Tuning for [`verify_rm`].
#[derive(Debug, Clone)]
pub struct VerifyParams {
    /// Target cloud size after thinning (the sampler draws 8× as many raw).
    pub sample_count: usize,
    pub seed: u64,
    /// ε for the variety cloud; `None` = 3× median nearest-neighbor.
    pub epsilon: Option<f64>,
    /// Interior slicing levels per gap between consecutive critical values.
    pub levels_per_gap: usize,
    /// Points per sampled fiber.
    pub fiber_count: usize,
    /// Include the fiber clouds in the realized roadmap (disable to observe
    /// the connectivity failures the fibers exist to repair).
    pub include_fibers: bool,
    /// Accept a bound u that is not above every critical value.
    pub force: bool,
}

impl Default for VerifyParams {
    fn default() -> Self {
        VerifyParams {
            sample_count: 600,
            seed: 0,
            epsilon: None,
            levels_per_gap: 6,
            fiber_count: 60,
            include_fibers: true,
            force: false,
        }
    }
}

/// Outcome of the truncated-roadmap connectivity check at sublevel u.
#[derive(Debug, Clone)]
pub struct ConnectivityReport {
    pub u: Rat,
    pub forced: bool,
    pub variety_components: usize,
    pub per_component: Vec<ComponentEntry>,
    pub verdict: Verdict,
    pub diagnostics: Vec<String>,
    pub cloud: PointCloud,
    pub labels: Vec<usize>,
    pub epsilon: f64,
    pub stable: bool,
    pub roadmap_points: Vec<RoadmapPoint>,
    pub polylines: Vec<Polyline>,
}

impl ConnectivityReport {
    /// JSON tree of the verdict and its supporting numbers (not the raw
    /// point data — that goes to CSV).
    pub fn to_document(&self) -> serde_json::Value {
        json!({
            "format": 1,
            "u": self.u.to_string(),
            "forced": self.forced,
            "variety_components": self.variety_components,
            "per_component": self.per_component.iter().map(|c| json!({
                "size": c.size,
                "has_roadmap_point": c.has_roadmap_point,
                "roadmap_connected": c.roadmap_connected,
            })).collect::<Vec<_>>(),
            "verdict": self.verdict.as_str(),
            "epsilon": self.epsilon,
            "stable": self.stable,
            "cloud_size": self.cloud.len(),
            "roadmap_points": self.roadmap_points.len(),
            "polylines": self.polylines.len(),
            "diagnostics": self.diagnostics,
        })
    }

    /// CSV of the variety cloud: component id, coordinates, residual.
    pub fn points_csv(&self) -> String {
        let n = self.cloud.points.first().map_or(0, |p| p.len());
        let mut out = String::from("component");
        for v in 0..n {
            out.push_str(&format!(",x{}", v + 1));
        }
        out.push_str(",residual\n");
        for (i, p) in self.cloud.points.iter().enumerate() {
            out.push_str(&self.labels[i].to_string());
            for c in p {
                out.push_str(&format!(",{c}"));
            }
            out.push_str(&format!(",{}\n", self.cloud.residuals[i]));
        }
        out
    }

    /// CSV of the realized roadmap: kind, branch, component, coordinates,
    /// residual.
    pub fn roadmap_csv(&self) -> String {
        let n = self.roadmap_points.first().map_or(0, |p| p.coords.len());
        let mut out = String::from("kind,branch,component");
        for v in 0..n {
            out.push_str(&format!(",x{}", v + 1));
        }
        out.push_str(",residual\n");
        for p in &self.roadmap_points {
            out.push_str(p.kind.as_str());
            out.push_str(&format!(
                ",{},{}",
                p.branch.map_or(String::new(), |b| b.to_string()),
                p.component.map_or(String::new(), |c| c.to_string())
            ));
            for c in &p.coords {
                out.push_str(&format!(",{c}"));
            }
            out.push_str(&format!(",{}\n", p.residual));
        }
        out
    }
}

/// Check the truncated connectivity property at sublevel u: every estimated
/// component of V ∩ {φ1 ≤ u} must contain a realized roadmap point, and the
/// roadmap points inside each component must form a connected ε-graph.
/// Fail is only confirmed when it persists at doubled ε on a stable cloud;
/// ε-instability or insufficient samples yield `Inconclusive`, never a
/// spurious fail.
pub fn verify_rm(
    v: &VarietySpec,
    bundle: &RoadmapBundle,
    u: &Rat,
    params: &VerifyParams,
) -> Result<ConnectivityReport> {
    if v.ring() != bundle.variety().ring() {
        return Err(Error::RingMismatch {
            left: v.ring().to_string(),
            right: bundle.variety().ring().to_string(),
        });
    }
    let phi1 = bundle.map().component(0);
    let mut diagnostics = Vec::new();
    let max_crit = bundle.critical_values().iter().map(|iv| iv.hi.clone()).max();
    let mut forced = false;
    if let Some(mc) = &max_crit {
        if u <= mc {
            if !params.force {
                return Err(Error::InvalidInput(format!(
                    "u = {u} is not above the largest critical value (≈ {}); pass force to \
                     truncate anyway",
                    rat_f64(mc)
                )));
            }
            forced = true;
            diagnostics.push(format!(
                "u = {} forced below the largest critical value ≈ {}",
                rat_f64(u),
                rat_f64(mc)
            ));
        }
    }

    // 1. sample the variety inside the sublevel region, then thin
    let raw = sample_real_points(&v.ideal(), phi1, u, 8 * params.sample_count, params.seed)?;
    diagnostics.push(format!("raw cloud: {} points", raw.len()));
    if raw.is_empty() {
        let verdict = if bundle.k_points().real_count == 0 {
            diagnostics.push(
                "no real points found and the bundle has no real distinguished points: the \
                 property holds vacuously"
                    .into(),
            );
            Verdict::Pass
        } else {
            diagnostics.push("sampling found no points; cannot estimate components".into());
            Verdict::Inconclusive
        };
        return Ok(ConnectivityReport {
            u: u.clone(),
            forced,
            variety_components: 0,
            per_component: Vec::new(),
            verdict,
            diagnostics,
            cloud: raw,
            labels: Vec::new(),
            epsilon: 0.0,
            stable: true,
            roadmap_points: Vec::new(),
            polylines: Vec::new(),
        });
    }
    let cloud = thin_cloud(&raw, params.sample_count);
    diagnostics.push(format!("thinned cloud: {} points", cloud.len()));
    let graph = epsilon_components(&cloud, params.epsilon)?;
    diagnostics.push(format!(
        "ε = {:.6}, {} component(s), stable = {}",
        graph.epsilon, graph.component_count, graph.stable
    ));

    // 2. realize the roadmap: polar-curve polylines (sliced with extra
    //    levels just above each critical value), distinguished points,
    //    fiber samples at those near-critical levels
    let crit_below: Vec<&Interval> =
        bundle.critical_values().iter().filter(|iv| iv.lo <= *u).collect();
    let fiber_levels: Vec<Rat> =
        crit_below.iter().map(|iv| iv.hi.clone()).filter(|l| l < u).collect();
    let regular_levels = build_levels(&crit_below, u, params.levels_per_gap);
    let mut levels = regular_levels.clone();
    levels.extend(fiber_levels.iter().cloned());
    levels.sort();
    levels.dedup();
    diagnostics.push(format!("{} slicing level(s)", levels.len()));
    let trace = if levels.is_empty() {
        SliceTrace { slices: Vec::new(), polylines: Vec::new() }
    } else {
        slice_trace_curve(bundle.w_locus().w_ideal(), phi1, &levels)?
    };
    let w_ideal = bundle.w_locus().w_ideal();
    let mut roadmap_points: Vec<RoadmapPoint> = Vec::new();
    // per polyline: (point index, slice level) per vertex, in order
    let mut chains: Vec<Vec<(usize, Rat)>> = Vec::new();
    for pl in &trace.polylines {
        let mut chain = Vec::with_capacity(pl.boxes.len());
        for (b, &si) in pl.boxes.iter().zip(&pl.slice_indices) {
            let point: Vec<Rat> = b.coordinates.iter().map(|iv| iv.midpoint()).collect();
            let residual = max_residual(w_ideal, &point);
            let idx = roadmap_points.len();
            roadmap_points.push(RoadmapPoint {
                kind: RoadmapPointKind::WSlice,
                coords: point.iter().map(rat_f64).collect(),
                residual,
                component: None,
                branch: Some(pl.branch),
            });
            chain.push((idx, trace.slices[si].level.clone()));
        }
        chains.push(chain);
    }
    let mut k_indices: Vec<(usize, Rat)> = Vec::new();
    for b in &bundle.k_points().real_boxes {
        let point: Vec<Rat> = b.coordinates.iter().map(|iv| iv.midpoint()).collect();
        let reach = phi1.evaluate(&point)?;
        if reach > *u {
            continue;
        }
        let residual = max_residual(&v.ideal(), &point);
        k_indices.push((roadmap_points.len(), reach));
        roadmap_points.push(RoadmapPoint {
            kind: RoadmapPointKind::KPoint,
            coords: point.iter().map(rat_f64).collect(),
            residual,
            component: None,
            branch: None,
        });
    }
    // per fiber: probe for real points, then trace the fiber curve by
    // slicing it along its widest coordinate, so each fiber enters the
    // roadmap as chains with construction edges rather than as an
    // unstructured cloud
    let mut fibers: Vec<FiberRealization> = Vec::new();
    if params.include_fibers {
        for (j, level) in fiber_levels.iter().enumerate() {
            let mut gens = v.generators().to_vec();
            gens.push(phi1.checked_sub(&Polynomial::constant(v.ring(), level.clone()))?);
            let fiber = Ideal::new(v.ring(), gens)?;
            let probe =
                sample_real_points(&fiber, phi1, u, 24, params.seed ^ ((j as u64 + 1) << 32))?;
            if probe.is_empty() {
                diagnostics.push(format!(
                    "fiber at level ≈ {}: no real points located; skipping it (the \
                     distinguished-point bridges cover its junctions)",
                    rat_f64(level)
                ));
                continue;
            }
            let nv = v.ring().nvars();
            let (cvar, lo, hi) = (0..nv)
                .map(|var| {
                    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
                    for p in &probe.points {
                        lo = lo.min(p[var]);
                        hi = hi.max(p[var]);
                    }
                    (var, lo, hi)
                })
                .max_by(|a, b| (a.2 - a.1).partial_cmp(&(b.2 - b.1)).unwrap())
                .unwrap();
            let pad = (hi - lo) * 0.1 + 1.0 / 64.0;
            let scale = 4096.0;
            let lo_r = Rat::new(Int::from(((lo - pad) * scale).floor() as i64), Int::from(4096));
            let hi_r = Rat::new(Int::from(((hi + pad) * scale).ceil() as i64), Int::from(4096));
            let m = (params.fiber_count / 4).max(12);
            let width = hi_r.clone() - lo_r.clone();
            let mut fiber_slice_levels = Vec::with_capacity(m);
            for k in 0..m {
                let a = lo_r.clone() + width.clone() * Rat::new(Int::from(k as i64), Int::from(m as i64));
                let b = lo_r.clone()
                    + width.clone() * Rat::new(Int::from(k as i64 + 1), Int::from(m as i64));
                fiber_slice_levels.push(simplest_rational_between(&a, &b));
            }
            let coord = Polynomial::var(v.ring(), cvar)?;
            let ftrace = slice_trace_curve(&fiber, &coord, &fiber_slice_levels)?;
            let mut chains: Vec<Vec<usize>> = Vec::new();
            let mut vertex_count = 0usize;
            for pl in &ftrace.polylines {
                let mut chain = Vec::with_capacity(pl.boxes.len());
                for b in &pl.boxes {
                    let point: Vec<Rat> =
                        b.coordinates.iter().map(|iv| iv.midpoint()).collect();
                    let residual = max_residual(&fiber, &point);
                    chain.push(roadmap_points.len());
                    roadmap_points.push(RoadmapPoint {
                        kind: RoadmapPointKind::Fiber,
                        coords: point.iter().map(rat_f64).collect(),
                        residual,
                        component: None,
                        branch: Some(pl.branch),
                    });
                }
                vertex_count += chain.len();
                chains.push(chain);
            }
            diagnostics.push(format!(
                "fiber at level ≈ {}: {} vertices in {} chain(s)",
                rat_f64(level),
                vertex_count,
                chains.len()
            ));
            fibers.push(FiberRealization { level: level.clone(), chains });
        }
    } else {
        diagnostics.push("fiber curves excluded on request".into());
    }
    diagnostics.push(format!("realized roadmap: {} point(s)", roadmap_points.len()));

    // 3. assign roadmap points to cloud components (nearest cloud point
    //    within ε)
    let mut unassigned = 0usize;
    for rp in roadmap_points.iter_mut() {
        let mut best = f64::INFINITY;
        let mut best_label = None;
        for (ci, cp) in cloud.points.iter().enumerate() {
            let d = dist(&rp.coords, cp);
            if d < best {
                best = d;
                best_label = Some(graph.labels[ci]);
            }
        }
        if best <= graph.epsilon {
            rp.component = best_label;
        } else {
            unassigned += 1;
        }
    }
    if unassigned > 0 {
        diagnostics.push(format!(
            "{unassigned} roadmap point(s) farther than ε from every cloud point"
        ));
    }

    // 4. judge connectivity through structural pieces: points joined by
    //    polyline order, by locally-scaled bridges at the distinguished
    //    points, and by the exact incidence of polyline vertices with the
    //    fiber sampled at the same level. A confirmed failure must survive
    //    doubling every threshold.
    let realized = RealizedRoadmap {
        chains,
        k_indices,
        fibers,
        levels: regular_levels,
        fallback: graph.epsilon,
    };
    let pieces = structural_pieces(&roadmap_points, &realized, 1.0);
    let pieces_doubled = structural_pieces(&roadmap_points, &realized, 2.0);
    let mut crossing = 0usize;
    for (a, b, kind) in structural_edges(&roadmap_points, &realized, 1.0) {
        if let (Some(ca), Some(cb)) =
            (roadmap_points[a].component, roadmap_points[b].component)
        {
            if ca != cb {
                crossing += 1;
                if crossing <= 10 {
                    diagnostics.push(format!(
                        "{kind} edge joins cloud components {ca} and {cb}: #{a} {:?} ↔ #{b} \
                         {:?}, distance {:.4}",
                        roadmap_points[a].coords,
                        roadmap_points[b].coords,
                        dist(&roadmap_points[a].coords, &roadmap_points[b].coords)
                    ));
                }
            }
        }
    }
    let mut spanning = false;
    let piece_count = pieces.iter().copied().max().map_or(0, |m| m + 1);
    for piece in 0..piece_count {
        let comps: BTreeSet<usize> = roadmap_points
            .iter()
            .zip(&pieces)
            .filter(|(_, &pc)| pc == piece)
            .filter_map(|(p, _)| p.component)
            .collect();
        if comps.len() > 1 {
            spanning = true;
            diagnostics.push(format!(
                "roadmap piece {{{}}} spans {} cloud components — treating the run as unstable",
                piece_summary(&roadmap_points, &pieces, piece),
                comps.len()
            ));
        }
    }
    let mut per_component = Vec::with_capacity(graph.component_count);
    let mut confirmed_fail = false;
    let mut soft_fail = spanning;
    for comp in 0..graph.component_count {
        let size = graph.labels.iter().filter(|&&l| l == comp).count();
        let pieces_here: BTreeSet<usize> = roadmap_points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.component == Some(comp))
            .map(|(i, _)| pieces[i])
            .collect();
        let pieces_here_doubled: BTreeSet<usize> = roadmap_points
            .iter()
            .enumerate()
            .filter(|(_, p)| p.component == Some(comp))
            .map(|(i, _)| pieces_doubled[i])
            .collect();
        let has = !pieces_here.is_empty();
        let connected = pieces_here.len() == 1;
        if !has {
            if size >= 5 && graph.stable {
                confirmed_fail = true;
                diagnostics
                    .push(format!("component {comp} ({size} points) has no roadmap point"));
            } else {
                soft_fail = true;
                diagnostics.push(format!(
                    "component {comp} ({size} points) has no roadmap point, but is too small \
                     or the graph too unstable to confirm a failure"
                ));
            }
        } else if !connected {
            if pieces_here_doubled.len() > 1 && graph.stable {
                confirmed_fail = true;
                diagnostics.push(format!(
                    "component {comp}: {} roadmap pieces remain separate even with doubled \
                     linking thresholds",
                    pieces_here_doubled.len()
                ));
                for &piece in pieces_here.iter().take(12) {
                    diagnostics.push(format!(
                        "  piece {{{}}}",
                        piece_summary(&roadmap_points, &pieces, piece)
                    ));
                }
            } else {
                soft_fail = true;
                diagnostics.push(format!(
                    "component {comp}: {} roadmap pieces at base thresholds, {} at doubled — \
                     inconclusive",
                    pieces_here.len(),
                    pieces_here_doubled.len()
                ));
                for &piece in pieces_here.iter().take(12) {
                    diagnostics.push(format!(
                        "  piece {{{}}}",
                        piece_summary(&roadmap_points, &pieces, piece)
                    ));
                }
            }
        }
        per_component.push(ComponentEntry {
            size,
            has_roadmap_point: has,
            roadmap_connected: connected,
        });
    }

    let verdict = if confirmed_fail {
        Verdict::Fail
    } else if !graph.stable || soft_fail {
        Verdict::Inconclusive
    } else if per_component.iter().all(|c| c.has_roadmap_point && c.roadmap_connected) {
        Verdict::Pass
    } else {
        Verdict::Inconclusive
    };

    Ok(ConnectivityReport {
        u: u.clone(),
        forced,
        variety_components: graph.component_count,
        per_component,
        verdict,
        diagnostics,
        cloud,
        labels: graph.labels.clone(),
        epsilon: graph.epsilon,
        stable: graph.stable,
        roadmap_points,
        polylines: trace.polylines,
    })
}

/// A fiber of the first map component realized as traced chains: the fiber
/// curve is sliced along its widest coordinate, so its connectivity comes
/// from construction edges rather than from an unstructured cloud.
struct FiberRealization {
    /// The φ1 level of the fiber (also one of the polar-curve slicing
    /// levels, giving exact vertex incidences).
    level: Rat,
    /// Chains of point indices, each a traced branch of the fiber.
    chains: Vec<Vec<usize>>,
}

/// The structure of the realized roadmap, kept alongside the flat point
/// list: polar-curve chains with their slicing levels, the indices of the
/// distinguished points, and the traced fibers.
struct RealizedRoadmap {
    chains: Vec<Vec<(usize, Rat)>>,
    /// Distinguished points with their exact φ1 values.
    k_indices: Vec<(usize, Rat)>,
    fibers: Vec<FiberRealization>,
    /// The regular (mid-gap) φ1 slicing levels, sorted; bridges at the
    /// distinguished points require adjacency in this ladder — the
    /// near-critical fiber levels sit within 2⁻²⁰ of their critical value
    /// and do not count as separating.
    levels: Vec<Rat>,
    /// Linking threshold when no local scale is available.
    fallback: f64,
}

/// No slicing level lies strictly between `a` and `b` (the two values are
/// neighbors of the level ladder, so a bridge between them crosses no
/// intermediate slice).
fn levels_adjacent(levels: &[Rat], a: &Rat, b: &Rat) -> bool {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    !levels.iter().any(|m| m > lo && m < hi)
}

/// One-line composition summary of a structural piece, for diagnostics:
/// sizes by point kind, the branch tags involved, and the centroid.
fn piece_summary(points: &[RoadmapPoint], pieces: &[usize], piece: usize) -> String {
    let members: Vec<&RoadmapPoint> =
        points.iter().zip(pieces).filter(|(_, &pc)| pc == piece).map(|(p, _)| p).collect();
    let count = |k: RoadmapPointKind| members.iter().filter(|p| p.kind == k).count();
    let mut branches: Vec<String> = members
        .iter()
        .filter_map(|p| {
            p.branch.map(|b| {
                format!("{}{b}", if p.kind == RoadmapPointKind::Fiber { "f" } else { "w" })
            })
        })
        .collect();
    branches.sort();
    branches.dedup();
    let dims = members.first().map_or(0, |p| p.coords.len());
    let mut centroid = vec![0.0; dims];
    for p in &members {
        for (c, x) in centroid.iter_mut().zip(&p.coords) {
            *c += x;
        }
    }
    for c in centroid.iter_mut() {
        *c /= members.len().max(1) as f64;
    }
    format!(
        "{} pts: {} w-slice, {} k-point, {} fiber; branches [{}]; centroid ({})",
        members.len(),
        count(RoadmapPointKind::WSlice),
        count(RoadmapPointKind::KPoint),
        count(RoadmapPointKind::Fiber),
        branches.join(" "),
        centroid.iter().map(|c| format!("{c:.3}")).collect::<Vec<_>>().join(", ")
    )
}

/// (point index, the local sampling step at that point: distance to its
/// nearest chain neighbor)
type LocalVertex = (usize, f64);

fn chain_vertices_with_steps(
    points: &[RoadmapPoint],
    chain: &[usize],
    fallback: f64,
) -> Vec<LocalVertex> {
    chain
        .iter()
        .enumerate()
        .map(|(pos, &idx)| {
            let mut step = f64::INFINITY;
            if pos > 0 {
                step = step.min(dist(&points[idx].coords, &points[chain[pos - 1]].coords));
            }
            if pos + 1 < chain.len() {
                step = step.min(dist(&points[idx].coords, &points[chain[pos + 1]].coords));
            }
            if !step.is_finite() {
                step = fallback;
            }
            (idx, step.max(1e-12))
        })
        .collect()
}

/// Partition the roadmap points into structurally connected pieces.
///
/// Edges, with every threshold scaled by `factor` (1 = base, 2 = the
/// doubled confirmation pass):
/// * consecutive vertices of a polar-curve or fiber chain (same branch);
/// * a distinguished point and a polar-chain endpoint within 3× the
///   endpoint's last step — branches terminate at the distinguished
///   critical points, and with uniform slicing levels the last step covers
///   a fixed fraction (1 − 1/√2) of the remaining square-root-scaled
///   distance, so genuine terminations satisfy the bound with margin;
/// * two fiber-chain endpoints of the same fiber within 3× the sum of
///   their last steps (two branches turning at the same fold);
/// * a polar-chain vertex sliced at exactly the fiber's level and the
///   nearest vertex of that fiber, within 3× that fiber vertex's local
///   step (the polar vertex lies on the fiber curve itself);
/// * a distinguished point and the nearest vertex of a fiber, within the
///   same local-step bound.
fn structural_edges(
    points: &[RoadmapPoint],
    realized: &RealizedRoadmap,
    factor: f64,
) -> Vec<(usize, usize, &'static str)> {
    let mut edges: Vec<(usize, usize, &'static str)> = Vec::new();
    for chain in &realized.chains {
        for w in chain.windows(2) {
            edges.push((w[0].0, w[1].0, "polar-chain"));
        }
    }
    for fiber in &realized.fibers {
        for chain in &fiber.chains {
            for w in chain.windows(2) {
                edges.push((w[0], w[1], "fiber-chain"));
            }
        }
        let mut verts: Vec<LocalVertex> = Vec::new();
        let mut endpoints: Vec<LocalVertex> = Vec::new();
        for chain in &fiber.chains {
            let with_steps = chain_vertices_with_steps(points, chain, realized.fallback);
            if let Some(&first) = with_steps.first() {
                endpoints.push(first);
            }
            if with_steps.len() > 1 {
                endpoints.push(*with_steps.last().unwrap());
            }
            verts.extend(with_steps);
        }
        // folds join mutually-nearest endpoints only; two distinct arcs of
        // the same fiber stay apart even when their endpoints are within
        // the distance bound
        let nearest_endpoint = |from: usize| -> Option<usize> {
            let here = &points[endpoints[from].0].coords;
            endpoints
                .iter()
                .enumerate()
                .filter(|&(e, _)| e != from)
                .min_by(|(_, (i, _)), (_, (j, _))| {
                    dist(here, &points[*i].coords)
                        .partial_cmp(&dist(here, &points[*j].coords))
                        .unwrap()
                })
                .map(|(e, _)| e)
        };
        for a in 0..endpoints.len() {
            match nearest_endpoint(a) {
                Some(b) if b > a && nearest_endpoint(b) == Some(a) => {
                    let (ia, sa) = endpoints[a];
                    let (ib, sb) = endpoints[b];
                    if dist(&points[ia].coords, &points[ib].coords)
                        <= factor * 3.0 * (sa + sb)
                    {
                        edges.push((ia, ib, "fiber-fold"));
                    }
                }
                _ => {}
            }
        }
        let nearest_vert = |coords: &[f64]| -> Option<LocalVertex> {
            verts.iter().copied().min_by(|(i, _), (j, _)| {
                dist(coords, &points[*i].coords)
                    .partial_cmp(&dist(coords, &points[*j].coords))
                    .unwrap()
            })
        };
        for chain in &realized.chains {
            for (idx, lvl) in chain {
                if *lvl == fiber.level {
                    if let Some((fi, step)) = nearest_vert(&points[*idx].coords) {
                        if dist(&points[*idx].coords, &points[fi].coords) <= factor * 3.0 * step
                        {
                            edges.push((*idx, fi, "polar-fiber"));
                        }
                    }
                }
            }
        }
        for (ki, kval) in &realized.k_indices {
            if !levels_adjacent(&realized.levels, &fiber.level, kval) {
                continue; // this fiber belongs to another critical value
            }
            if let Some((fi, step)) = nearest_vert(&points[*ki].coords) {
                if dist(&points[*ki].coords, &points[fi].coords) <= factor * 3.0 * step {
                    edges.push((*ki, fi, "critical-fiber"));
                }
            }
        }
    }
    for (ki, kval) in &realized.k_indices {
        for chain in &realized.chains {
            if chain.is_empty() {
                continue;
            }
            for (end, neighbor) in
                [(0usize, 1usize), (chain.len() - 1, chain.len().saturating_sub(2))]
            {
                let (ei, terminal) = &chain[end];
                if !levels_adjacent(&realized.levels, terminal, kval) {
                    continue; // the chain terminates at some other junction
                }
                let step = if chain.len() >= 2 && end != neighbor {
                    dist(&points[*ei].coords, &points[chain[neighbor].0].coords)
                } else {
                    realized.fallback
                };
                if dist(&points[*ki].coords, &points[*ei].coords) <= factor * 3.0 * step {
                    edges.push((*ki, *ei, "critical-polar"));
                }
            }
        }
    }
    edges
}

fn structural_pieces(
    points: &[RoadmapPoint],
    realized: &RealizedRoadmap,
    factor: f64,
) -> Vec<usize> {
    let n = points.len();
    let mut uf = UnionFind::new(n);
    for (a, b, _) in structural_edges(points, realized, factor) {
        uf.union(a, b);
    }
    let mut labels = vec![usize::MAX; n];
    let mut next = 0usize;
    let mut root_label: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        let r = uf.find(i);
        let lbl = match root_label.iter().find(|(root, _)| *root == r) {
            Some((_, l)) => *l,
            None => {
                root_label.push((r, next));
                next += 1;
                next - 1
            }
        };
        labels[i] = lbl;
    }
    labels
}

fn max_residual(ideal: &Ideal, point: &[Rat]) -> f64 {
    ideal
        .generators()
        .iter()
        .filter_map(|g| g.evaluate(point).ok())
        .map(|v| rat_f64(&v).abs())
        .fold(0.0, f64::max)
}

/// Slicing levels: `per_gap` simple rationals strictly inside every gap
/// between consecutive critical values (and between the last one and u),
/// chosen as simplest rationals of the subdivided gaps and nudged off any
/// critical-value interval they might touch.
fn build_levels(crit: &[&Interval], u: &Rat, per_gap: usize) -> Vec<Rat> {
    if crit.is_empty() || per_gap == 0 {
        return Vec::new();
    }
    let mut anchors: Vec<Rat> = crit.iter().map(|iv| iv.midpoint()).collect();
    anchors.sort();
    anchors.dedup();
    anchors.push(u.clone());
    let min_gap = min_gap(&anchors).unwrap_or_else(Rat::one);
    let nudge = &min_gap / Rat::from_integer(1000.into());
    let mut out = Vec::new();
    for w in anchors.windows(2) {
        let (lo, hi) = (&w[0], &w[1]);
        if lo >= hi {
            continue;
        }
        let step = (hi - lo) / Rat::from_integer((per_gap as i64 + 1).into());
        for k in 1..=per_gap {
            let a = lo + &step * Rat::from_integer((k as i64).into());
            let b = lo + &step * Rat::from_integer((k as i64 + 1).into());
            let mut level = simplest_rational_between(&a, &b.min(hi.clone()));
            if crit.iter().any(|iv| iv.contains(&level)) {
                level += &nudge;
            }
            if level < *u {
                out.push(level);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

// ---------------------------------------------------------------------------
// Bounded components meet the critical locus
// ---------------------------------------------------------------------------

/// Outcome of the bounded-component criticality check: every bounded
/// component of Z ∩ {φ < u} must contain a critical point of φ on Z.
#[derive(Debug, Clone)]
pub struct BoundedComponentReport {
    pub u: Rat,
    pub component_count: usize,
    /// Per component: (size, judged bounded, contains a critical point).
    pub entries: Vec<(usize, bool, bool)>,
    pub verdict: Verdict,
    pub diagnostics: Vec<String>,
}

/// For every sampled bounded component of Z ∩ {φ < u}, confirm that a real
/// critical point of φ on Z lies within the component's ε-hull. Supports a
/// zero-dimensional critical system (solved exactly) and a one-dimensional
/// one (sampled as a curve).
pub fn check_bounded_component_critical(
    z: &Ideal,
    phi: &Poly,
    u: &Rat,
    count: usize,
    seed: u64,
) -> Result<BoundedComponentReport> {
    let ring = z.ring();
    let zdim = krull_dimension(z)?;
    if zdim < 1 {
        return Err(Error::UnsupportedShape(format!(
            "the bounded-component check needs a positive-dimensional set, got dimension {zdim}"
        )));
    }
    let mut diagnostics = Vec::new();
    // the boundary φ = u has measure zero among the exact rational samples,
    // so the closed filter of the sampler serves the open region too
    let raw = sample_real_points(z, phi, u, 8 * count, seed)?;
    let cloud = thin_cloud(&raw, count);
    if cloud.is_empty() {
        diagnostics.push("no sample points in the region".into());
        return Ok(BoundedComponentReport {
            u: u.clone(),
            component_count: 0,
            entries: Vec::new(),
            verdict: Verdict::Inconclusive,
            diagnostics,
        });
    }
    let graph = epsilon_components(&cloud, None)?;
    diagnostics.push(format!(
        "{} points, ε = {:.6}, {} component(s), stable = {}",
        cloud.len(),
        graph.epsilon,
        graph.component_count,
        graph.stable
    ));

    // critical points of φ on Z
    let zvar = VarietySpec::new(ring, z.generators().to_vec(), zdim as usize)?;
    let locus = critical_ideal(&zvar, &PolyMap::new(vec![phi.clone()])?, 1)?;
    let k = locus.k_ideal();
    let kdim = krull_dimension(k)?;
    let crit_points: Vec<Vec<f64>> = match kdim {
        -1 => Vec::new(),
        0 => solve_real(k, &crate::zerodim::default_box_width())?
            .iter()
            .map(|b| b.midpoint_f64())
            .collect(),
        1 => {
            diagnostics.push("the critical locus is a curve; sampling it".into());
            let kc = sample_real_points(k, phi, u, count.max(64) / 2, seed ^ 0x5eed)?;
            kc.points
        }
        d => {
            return Err(Error::UnsupportedShape(format!(
                "critical locus of dimension {d} is not supported"
            )))
        }
    };
    diagnostics.push(format!("{} realized critical point(s)", crit_points.len()));

    // bounded judgement: a proper (squared-distance) φ bounds every
    // component; otherwise a component is judged bounded when it stays
    // inside the sampling box with a margin
    let proper = squared_distance_center(phi).is_some();
    let (_, radius) = anchor_radius(phi, u);
    let margin = radius as f64 - 1.0;

    let mut entries = Vec::new();
    let mut confirmed_fail = false;
    let mut soft_fail = false;
    for comp in 0..graph.component_count {
        let members: Vec<usize> =
            (0..cloud.len()).filter(|&i| graph.labels[i] == comp).collect();
        let size = members.len();
        let bounded = proper
            || members.iter().all(|&i| {
                cloud.points[i].iter().all(|c| c.abs() <= margin)
            });
        let contains = crit_points.iter().any(|cp| {
            members.iter().any(|&i| dist(cp, &cloud.points[i]) <= graph.epsilon)
        });
        if bounded && !contains {
            if size >= 5 && graph.stable {
                confirmed_fail = true;
                diagnostics.push(format!(
                    "bounded component {comp} ({size} points) contains no critical point"
                ));
            } else {
                soft_fail = true;
            }
        }
        entries.push((size, bounded, contains));
    }
    let verdict = if confirmed_fail {
        Verdict::Fail
    } else if !graph.stable || soft_fail {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    Ok(BoundedComponentReport {
        u: u.clone(),
        component_count: graph.component_count,
        entries,
        verdict,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::geometry::build_phi;
    use crate::polyring::parse_poly;
    use crate::rat;
    use crate::roadmap::assemble_roadmap;
    use crate::zerodim::default_box_width;

    fn ring2() -> Arc<Ring> {
        Ring::new(&["x1", "x2"]).unwrap()
    }

    fn ring3() -> Arc<Ring> {
        Ring::new(&["x1", "x2", "x3"]).unwrap()
    }

    fn pp(s: &str, r: &Arc<Ring>) -> Poly {
        parse_poly(s, r).unwrap()
    }

    fn torus(r: &Arc<Ring>) -> Poly {
        // (‖x‖² + R² − r²)² = 4R² (x1²+x2²) with R = 2, r = 1
        pp("(x1^2+x2^2+x3^2+3)^2 - 16*(x1^2+x2^2)", r)
    }

    #[test]
    fn circle_cloud_is_dense_and_accurate() {
        let r = ring2();
        let circle = Ideal::new(&r, vec![pp("x1^2+x2^2-1", &r)]).unwrap();
        let phi1 = pp("x1^2+x2^2", &r);
        let cloud = sample_real_points(&circle, &phi1, &rat(9, 1), 100, 3).unwrap();
        assert!(cloud.len() >= 90, "got {}", cloud.len());
        assert!(cloud.residuals.iter().all(|&e| e < 1e-10));
        for p in &cloud.points {
            let rad = (p[0] * p[0] + p[1] * p[1]).sqrt();
            assert!((rad - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn empty_real_locus_reports_shortfall() {
        let r = ring2();
        let empty = Ideal::new(&r, vec![pp("x1^2+x2^2+1", &r)]).unwrap();
        let phi1 = pp("x1^2+x2^2", &r);
        let cloud = sample_real_points(&empty, &phi1, &rat(100, 1), 50, 1).unwrap();
        assert!(cloud.is_empty());
        let s = cloud.shortfall.expect("a shortfall report");
        assert_eq!(s.requested, 50);
        assert_eq!(s.achieved, 0);
    }

    #[test]
    fn running_surface_cloud_nonempty() {
        let r = ring3();
        let v = Ideal::new(&r, vec![pp("x1^3+x2^3+x3^3-x1-x2-x3-1", &r)]).unwrap();
        let phi1 = pp("(x1-1)^2+x2^2+x3^2", &r);
        let cloud = sample_real_points(&v, &phi1, &rat(20, 1), 200, 5).unwrap();
        assert!(cloud.len() >= 50, "got {}", cloud.len());
        assert!(cloud.residuals.iter().all(|&e| e < 1e-10));
        // exact region filter: φ1 ≤ u within float slack
        for p in &cloud.points {
            let reach = (p[0] - 1.0).powi(2) + p[1] * p[1] + p[2] * p[2];
            assert!(reach <= 20.0 + 1e-6);
        }
    }

    #[test]
    fn one_circle_is_one_component() {
        let r = ring2();
        let circle = Ideal::new(&r, vec![pp("x1^2+x2^2-1", &r)]).unwrap();
        let phi1 = pp("x1^2+x2^2", &r);
        let raw = sample_real_points(&circle, &phi1, &rat(9, 1), 800, 3).unwrap();
        let cloud = thin_cloud(&raw, 100);
        let graph = epsilon_components(&cloud, None).unwrap();
        assert_eq!(graph.component_count, 1);
        assert!(graph.stable);
    }

    #[test]
    fn two_far_circles_are_two_components() {
        let r = ring2();
        let two = Ideal::new(
            &r,
            vec![pp("(x1^2+x2^2-1)*((x1-6)^2+x2^2-1)", &r)],
        )
        .unwrap();
        let phi1 = pp("x1^2+x2^2", &r);
        let raw = sample_real_points(&two, &phi1, &rat(50, 1), 800, 9).unwrap();
        assert!(raw.len() >= 400, "got {}", raw.len());
        let cloud = thin_cloud(&raw, 100);
        let graph = epsilon_components(&cloud, None).unwrap();
        assert_eq!(graph.component_count, 2);
        // component count is non-increasing in ε
        let c1 = epsilon_components(&cloud, Some(graph.epsilon)).unwrap().component_count;
        let c2 = epsilon_components(&cloud, Some(1.5 * graph.epsilon)).unwrap().component_count;
        let c3 = epsilon_components(&cloud, Some(2.25 * graph.epsilon)).unwrap().component_count;
        assert!(c1 >= c2 && c2 >= c3);
    }

    #[test]
    fn torus_cloud_is_one_stable_component() {
        let r = ring3();
        let t = Ideal::new(&r, vec![torus(&r)]).unwrap();
        let phi1 = pp("x1^2+x2^2+x3^2", &r);
        let raw = sample_real_points(&t, &phi1, &rat(30, 1), 2000, 17).unwrap();
        assert!(raw.len() >= 1200, "got {}", raw.len());
        let cloud = thin_cloud(&raw, 250);
        let graph = epsilon_components(&cloud, None).unwrap();
        assert_eq!(graph.component_count, 1);
        assert!(graph.stable);
    }

    #[test]
    fn slicing_a_circle_gives_two_branches() {
        let r = ring2();
        let circle = Ideal::new(&r, vec![pp("x1^2+x2^2-1", &r)]).unwrap();
        // squared distance to (1,0): ranges over [0, 4] on the circle
        let phi1 = pp("(x1-1)^2+x2^2", &r);
        let levels: Vec<Rat> = vec![rat(1, 2), rat(1, 1), rat(2, 1), rat(3, 1)];
        let trace = slice_trace_curve(&circle, &phi1, &levels).unwrap();
        for s in &trace.slices {
            assert_eq!(s.boxes.len(), 2, "two points per interior level");
            assert!(s.perturbed_by.is_none());
        }
        assert_eq!(trace.polylines.len(), 2);
        for pl in &trace.polylines {
            assert_eq!(pl.vertices.len(), 4);
            for b in &pl.boxes {
                let point: Vec<Rat> = b.coordinates.iter().map(|iv| iv.midpoint()).collect();
                let res = max_residual(&circle, &point);
                assert!(res < POLYLINE_RESIDUAL_TOLERANCE);
            }
        }
        // outside the range: empty slices
        let empty = slice_trace_curve(&circle, &phi1, &[rat(5, 1)]).unwrap();
        assert!(empty.slices[0].boxes.is_empty());
        assert!(empty.polylines.is_empty());
    }

    #[test]
    fn slice_counts_constant_between_critical_values() {
        // the polar curve of the running example; its branch counts can
        // only change across the five critical levels
        let r = ring3();
        let g = pp("x1^3+x2^3+x3^3-x1-x2-x3-1", &r);
        let d = pp("(3*x1*x3+1)*(x1-x3)+3*x3^2-1", &r);
        let curve = Ideal::new(&r, vec![g, d]).unwrap();
        let phi1 = pp("(x1-1)^2+x2^2+x3^2", &r);
        // gap (0.0945, 2.1092)
        let gap1: Vec<Rat> = vec![rat(1, 2), rat(1, 1), rat(3, 2), rat(2, 1)];
        let t1 = slice_trace_curve(&curve, &phi1, &gap1).unwrap();
        let counts: Vec<usize> = t1.slices.iter().map(|s| s.boxes.len()).collect();
        assert!(counts.windows(2).all(|w| w[0] == w[1]), "{counts:?}");
        assert!(counts[0] > 0);
        // gap (2.2513, 4.2364)
        let gap2: Vec<Rat> = vec![rat(5, 2), rat(3, 1), rat(7, 2), rat(4, 1)];
        let t2 = slice_trace_curve(&curve, &phi1, &gap2).unwrap();
        let counts2: Vec<usize> = t2.slices.iter().map(|s| s.boxes.len()).collect();
        assert!(counts2.windows(2).all(|w| w[0] == w[1]), "{counts2:?}");
    }

    #[test]
    fn simplest_rationals_are_simple() {
        assert_eq!(simplest_rational_between(&rat(1, 3), &rat(1, 2)), rat(2, 5));
        assert_eq!(simplest_rational_between(&rat(-1, 1), &rat(1, 1)), rat(0, 1));
        assert_eq!(simplest_rational_between(&rat(2, 1), &rat(4, 1)), rat(3, 1));
        assert_eq!(simplest_rational_between(&rat(5, 2), &rat(11, 4)), rat(8, 3));
        let s = simplest_rational_between(&rat(94, 1000), &rat(2109, 1000));
        assert_eq!(s, rat(1, 1));
    }

    #[test]
    fn verify_running_example_at_u20_passes() {
        let r = ring3();
        let g = pp("x1^3+x2^3+x3^3-x1-x2-x3-1", &r);
        let v = VarietySpec::new(&r, vec![g], 2).unwrap();
        let phi1 = pp("(x1-1)^2+x2^2+x3^2", &r);
        let map = PolyMap::new(vec![phi1, pp("x2", &r), pp("x1", &r)]).unwrap();
        let bundle = assemble_roadmap(&v, &map, 2, &default_box_width(), 7).unwrap();

        let params =
            VerifyParams { sample_count: 2000, seed: 7, force: true, ..Default::default() };
        let report = verify_rm(&v, &bundle, &rat(20, 1), &params).unwrap();
        assert_eq!(report.variety_components, 2, "{:?}", report.diagnostics);
        assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.diagnostics);
        assert!(report.forced);
        assert!(report.per_component.iter().all(|c| c.has_roadmap_point && c.roadmap_connected));
        // every polyline vertex satisfies the polar-curve system tightly
        for p in &report.roadmap_points {
            if p.kind == RoadmapPointKind::WSlice {
                assert!(p.residual < POLYLINE_RESIDUAL_TOLERANCE);
            }
        }

        // determinism: the same parameters give the same document
        let again = verify_rm(&v, &bundle, &rat(20, 1), &params).unwrap();
        assert_eq!(report.to_document().to_string(), again.to_document().to_string());

        // ablation: removing the fiber clouds must break connectivity
        let ablated = VerifyParams { include_fibers: false, ..params };
        let broken = verify_rm(&v, &bundle, &rat(20, 1), &ablated).unwrap();
        assert_eq!(broken.verdict, Verdict::Fail, "{:?}", broken.diagnostics);
    }

    #[test]
    fn verify_sphere_bundle_passes() {
        let r = ring3();
        let sphere = VarietySpec::new(&r, vec![pp("x1^2+x2^2+x3^2-1", &r)], 2).unwrap();
        let map = build_phi(&r, &[rat(3, 1), rat(0, 1), rat(0, 1)], 11).unwrap();
        let bundle = assemble_roadmap(&sphere, &map, 2, &default_box_width(), 11).unwrap();
        let max_crit = bundle.critical_values().iter().map(|iv| iv.hi.clone()).max().unwrap();
        let u = max_crit + rat(1, 1);
        let params = VerifyParams { sample_count: 400, seed: 11, ..Default::default() };
        let report = verify_rm(&sphere, &bundle, &u, &params).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.diagnostics);
        assert!(!report.forced);
        assert_eq!(report.variety_components, 1);
    }

    #[test]
    fn rejects_u_below_critical_values_unless_forced() {
        let r = ring3();
        let sphere = VarietySpec::new(&r, vec![pp("x1^2+x2^2+x3^2-1", &r)], 2).unwrap();
        let map = build_phi(&r, &[rat(3, 1), rat(0, 1), rat(0, 1)], 11).unwrap();
        let bundle = assemble_roadmap(&sphere, &map, 2, &default_box_width(), 11).unwrap();
        let params = VerifyParams::default();
        assert!(verify_rm(&sphere, &bundle, &rat(1, 1), &params).is_err());
    }

    #[test]
    fn bounded_circle_component_contains_leftmost_critical_point() {
        let r = ring2();
        let circle = Ideal::new(&r, vec![pp("x1^2+x2^2-1", &r)]).unwrap();
        let phi = pp("x1", &r);
        let report =
            check_bounded_component_critical(&circle, &phi, &rat(2, 1), 80, 3).unwrap();
        assert_eq!(report.component_count, 1);
        assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.diagnostics);
        assert!(report.entries[0].1, "the circle is bounded");
        assert!(report.entries[0].2, "the component contains a critical point");
    }

    #[test]
    fn bounded_torus_components_contain_critical_boxes() {
        let r = ring3();
        let t = Ideal::new(&r, vec![torus(&r)]).unwrap();
        let phi = pp("x1", &r);
        // the critical system of the first coordinate on the torus has the
        // four real points (±3,0,0), (±1,0,0)
        let zvar = VarietySpec::new(&r, vec![torus(&r)], 2).unwrap();
        let locus = critical_ideal(&zvar, &PolyMap::new(vec![phi.clone()]).unwrap(), 1).unwrap();
        let boxes = solve_real(locus.k_ideal(), &default_box_width()).unwrap();
        let mut xs: Vec<f64> = boxes.iter().map(|b| b.midpoint_f64()[0]).collect();
        xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(xs.len(), 4);
        for (got, want) in xs.iter().zip([-3.0, -1.0, 1.0, 3.0]) {
            assert!((got - want).abs() < 1e-6);
        }

        let report = check_bounded_component_critical(&t, &phi, &rat(0, 1), 200, 23).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.diagnostics);
        assert!(report.entries.iter().all(|e| !e.1 || e.2));
    }

    #[test]
    fn cylinder_waist_circle_detected() {
        let r = ring3();
        let cyl = Ideal::new(&r, vec![pp("x1^2+x2^2-1", &r)]).unwrap();
        let phi = pp("x1^2+x2^2+x3^2", &r);
        let report = check_bounded_component_critical(&cyl, &phi, &rat(2, 1), 150, 5).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.diagnostics);
        assert!(report
            .diagnostics
            .iter()
            .any(|d| d.contains("curve")), "{:?}", report.diagnostics);
    }

    #[test]
    fn report_documents_and_csv_have_content() {
        let r = ring2();
        let circle = Ideal::new(&r, vec![pp("x1^2+x2^2-1", &r)]).unwrap();
        let phi1 = pp("x1^2+x2^2", &r);
        let cloud = sample_real_points(&circle, &phi1, &rat(9, 1), 80, 3).unwrap();
        let graph = epsilon_components(&cloud, None).unwrap();
        let report = ConnectivityReport {
            u: rat(9, 1),
            forced: false,
            variety_components: graph.component_count,
            per_component: vec![ComponentEntry {
                size: cloud.len(),
                has_roadmap_point: true,
                roadmap_connected: true,
            }],
            verdict: Verdict::Pass,
            diagnostics: vec!["test".into()],
            cloud,
            labels: graph.labels,
            epsilon: graph.epsilon,
            stable: graph.stable,
            roadmap_points: Vec::new(),
            polylines: Vec::new(),
        };
        let doc = report.to_document();
        assert_eq!(doc["format"], 1);
        assert_eq!(doc["verdict"], "pass");
        let csv = report.points_csv();
        assert!(csv.starts_with("component,x1,x2,residual\n"));
        assert!(csv.lines().count() > 50);
    }
}
