//! Geometric constructions over exact rationals: Jacobians, minor ideals,
//! singular loci, critical loci of polynomial-map prefixes (generalized
//! polar varieties), the squared-distance map family, and fiber ideals.

use crate::error::{Error, Result};
use crate::groebner::{intersect, saturation, Ideal};
use crate::polyring::{MonomialOrder, PolyMatrix, Polynomial, Ring};
use crate::Rat;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use std::sync::Arc;

type Poly = Polynomial<Rat>;

/// An algebraic set V = V(g1,…,gp) together with its claimed dimension d.
/// The generators are taken as-given; radicality/completeness of the ideal
/// is the caller's responsibility (the assumption checks report it).
#[derive(Debug, Clone)]
pub struct VarietySpec {
    ring: Arc<Ring>,
    generators: Vec<Poly>,
    dimension: usize,
}

impl VarietySpec {
    pub fn new(ring: &Arc<Ring>, generators: Vec<Poly>, dimension: usize) -> Result<Self> {
        if dimension > ring.nvars() {
            return Err(Error::InvalidInput(format!(
                "claimed dimension {dimension} exceeds the ambient dimension {}",
                ring.nvars()
            )));
        }
        if generators.is_empty() {
            return Err(Error::InvalidInput("a variety needs at least one generator".into()));
        }
        for g in &generators {
            if g.is_zero() {
                return Err(Error::InvalidInput("variety generators must be nonzero".into()));
            }
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: g.ring().to_string(),
                });
            }
        }
        Ok(VarietySpec { ring: ring.clone(), generators, dimension })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    /// Claimed dimension d.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Expected codimension n − d.
    pub fn codimension(&self) -> usize {
        self.ring.nvars() - self.dimension
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.generators.clone()).expect("generators already validated")
    }
}

/// A tuple map φ = (φ1,…,φm) out of the ambient space, m ≤ n, with access
/// to its prefixes φ^(i) = (φ1,…,φ_i).
#[derive(Debug, Clone)]
pub struct PolyMap {
    components: Vec<Poly>,
}

impl PolyMap {
    pub fn new(components: Vec<Poly>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidInput("a map needs at least one component".into()));
        }
        let ring = components[0].ring().clone();
        if components.len() > ring.nvars() {
            return Err(Error::InvalidInput(format!(
                "map has {} components but the ring has only {} variables",
                components.len(),
                ring.nvars()
            )));
        }
        for c in &components {
            if c.ring() != &ring {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: c.ring().to_string(),
                });
            }
        }
        Ok(PolyMap { components })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.components[0].ring()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires ≥ 1 component
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn component(&self, j: usize) -> &Poly {
        &self.components[j]
    }

    /// The prefix φ^(i) = (φ1,…,φ_i).
    pub fn prefix(&self, i: usize) -> Result<&[Poly]> {
        if i > self.components.len() {
            return Err(Error::InvalidInput(format!(
                "prefix length {i} exceeds the map's {} components",
                self.components.len()
            )));
        }
        Ok(&self.components[..i])
    }
}

/// The critical locus of a map prefix on a variety:
/// K = V(g) ∩ {rank jac([g, φ^(i)]) < p+i}, its singular part, and the
/// polar variety W = Zariski closure of K ∖ sing.
#[derive(Debug, Clone)]
pub struct CriticalLocus {
    base: VarietySpec,
    prefix_len: usize,
    k_ideal: Ideal,
    sing_ideal: Ideal,
    w_ideal: Ideal,
}

impl CriticalLocus {
    pub fn base(&self) -> &VarietySpec {
        &self.base
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    /// Generators of V plus the rank-defect minors.
    pub fn k_ideal(&self) -> &Ideal {
        &self.k_ideal
    }

    pub fn sing_ideal(&self) -> &Ideal {
        &self.sing_ideal
    }

    /// The polar variety: K with the singular locus saturated away
    /// (equal to K whenever the singular system is inconsistent).
    pub fn w_ideal(&self) -> &Ideal {
        &self.w_ideal
    }
}

/// A fiber φ^(i) = value over a variety.
#[derive(Debug, Clone)]
pub struct FiberSpec {
    base: VarietySpec,
    map: PolyMap,
    prefix_len: usize,
    value: Vec<Rat>,
}

impl FiberSpec {
    pub fn new(base: VarietySpec, map: PolyMap, prefix_len: usize, value: Vec<Rat>) -> Result<Self> {
        if value.len() != prefix_len {
            return Err(Error::DimensionMismatch { expected: prefix_len, got: value.len() });
        }
        if prefix_len > map.len() {
            return Err(Error::InvalidInput(format!(
                "fiber prefix {prefix_len} exceeds the map's {} components",
                map.len()
            )));
        }
        Ok(FiberSpec { base, map, prefix_len, value })
    }

    pub fn base(&self) -> &VarietySpec {
        &self.base
    }

    pub fn map(&self) -> &PolyMap {
        &self.map
    }

    pub fn prefix_len(&self) -> usize {
        self.prefix_len
    }

    pub fn value(&self) -> &[Rat] {
        &self.value
    }
}

/// Jacobian matrix: row j is the gradient of `polys[j]`. An empty list
/// yields a 0×n matrix.
pub fn jacobian(polys: &[Poly], ring: &Arc<Ring>) -> Result<PolyMatrix<Rat>> {
    if polys.is_empty() {
        return Ok(PolyMatrix::zero(ring, 0, ring.nvars()));
    }
    let mut rows = Vec::with_capacity(polys.len());
    for p in polys {
        if p.ring() != ring {
            return Err(Error::RingMismatch { left: ring.to_string(), right: p.ring().to_string() });
        }
        rows.push((0..ring.nvars()).map(|v| p.derivative(v)).collect::<Result<Vec<_>>>()?);
    }
    PolyMatrix::from_rows(ring, rows)
}

/// Ideal generated by all k×k minors of `m`, in the canonical
/// (row-combination, column-combination) order.
pub fn minors_ideal(m: &PolyMatrix<Rat>, k: usize) -> Result<Ideal> {
    if k == 0 || k > m.nrows().min(m.ncols()) {
        return Err(Error::InvalidInput(format!(
            "minor size {k} out of range for a {}x{} matrix",
            m.nrows(),
            m.ncols()
        )));
    }
    Ideal::new(m.ring(), m.minors(k)?)
}

/// The singular system of V: the generators together with all
/// (n−d)-minors of their Jacobian (rank below the expected codimension).
pub fn singular_ideal(v: &VarietySpec) -> Result<Ideal> {
    let c = v.codimension();
    let ring = v.ring();
    if c == 0 {
        // rank cannot drop below zero: the singular system is inconsistent
        return Ideal::new(ring, vec![Polynomial::one(ring)]);
    }
    if v.generators().len() < c {
        return Err(Error::InvalidInput(format!(
            "{} generators cannot cut out codimension {c}",
            v.generators().len()
        )));
    }
    let jac = jacobian(v.generators(), ring)?;
    let minors = minors_ideal(&jac, c)?;
    let mut gens = v.generators().to_vec();
    gens.extend(minors.generators().iter().cloned());
    Ideal::new(ring, gens)
}

/// Critical locus of the prefix map φ^(i) on V: the vanishing of the
/// generators plus the (p+i)-minors of the stacked Jacobian jac([g, φ^(i)]).
/// When p+i exceeds n the rank condition is vacuous and K = I(V).
pub fn critical_ideal(v: &VarietySpec, map: &PolyMap, i: usize) -> Result<CriticalLocus> {
    let ring = v.ring();
    let n = ring.nvars();
    if i == 0 || i > n {
        return Err(Error::InvalidInput(format!(
            "prefix length {i} out of range for {n} variables"
        )));
    }
    let prefix = map.prefix(i)?;
    let p = v.generators().len();

    let mut k_gens = v.generators().to_vec();
    if p + i <= n {
        let mut stacked = v.generators().to_vec();
        stacked.extend(prefix.iter().cloned());
        let jac = jacobian(&stacked, ring)?;
        let minors = minors_ideal(&jac, p + i)?;
        k_gens.extend(minors.generators().iter().cloned());
    }
    let k_ideal = Ideal::new(ring, k_gens)?;

    let sing_ideal = singular_ideal(v)?;
    let w_ideal = polar_from_critical(&k_ideal, &sing_ideal)?;
    Ok(CriticalLocus { base: v.clone(), prefix_len: i, k_ideal, sing_ideal, w_ideal })
}

/// Zariski closure of V(K) ∖ V(sing): the intersection over the singular
/// generators m_j of the saturations K : m_j^∞ (removing the locus where
/// all of them vanish, not merely one). Identity when the singular system
/// is inconsistent (1 lies in it), which covers every smooth example.
fn polar_from_critical(k_ideal: &Ideal, sing_ideal: &Ideal) -> Result<Ideal> {
    let sing_gb = sing_ideal.groebner(&MonomialOrder::GrevLex)?;
    if sing_gb.contains_one() {
        return Ok(k_ideal.clone());
    }
    let mut parts = sing_ideal.generators().iter();
    let first = parts.next().ok_or_else(|| {
        Error::InvalidInput("singular system has no generators".into())
    })?;
    let mut w = saturation(k_ideal, first)?;
    for m in parts {
        let s = saturation(k_ideal, m)?;
        w = intersect(&w, &s)?;
    }
    Ok(w)
}

/// Sum of squared coordinate distances to `center`.
pub fn squared_distance(ring: &Arc<Ring>, center: &[Rat]) -> Result<Poly> {
    if center.len() != ring.nvars() {
        return Err(Error::DimensionMismatch { expected: ring.nvars(), got: center.len() });
    }
    let mut acc = Polynomial::zero(ring);
    for (k, a) in center.iter().enumerate() {
        let d = &Polynomial::var(ring, k)? - &Polynomial::constant(ring, a.clone());
        acc = &acc + &(&d * &d);
    }
    Ok(acc)
}

/// Map family used throughout: φ1 = Σ(x_k − a_k)² followed by n−1 linear
/// forms with small integer coefficients drawn deterministically from
/// `seed`; the forms are redrawn (boundedly) until exactly independent.
pub fn build_phi(ring: &Arc<Ring>, center: &[Rat], seed: u64) -> Result<PolyMap> {
    let n = ring.nvars();
    let phi1 = squared_distance(ring, center)?;
    if n == 1 {
        return PolyMap::new(vec![phi1]);
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let max_redraws = 64usize;
    for _ in 0..max_redraws {
        let coeffs: Vec<Vec<i64>> =
            (0..n - 1).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let rat_rows: Vec<Vec<Rat>> = coeffs
            .iter()
            .map(|row| row.iter().map(|&c| Rat::from_integer(c.into())).collect())
            .collect();
        if rat_rank(rat_rows) != n - 1 {
            continue;
        }
        let mut components = vec![phi1.clone()];
        for row in &coeffs {
            let mut form = Polynomial::zero(ring);
            for (v, &c) in row.iter().enumerate() {
                if c != 0 {
                    let term = Polynomial::var(ring, v)?
                        .scale(&Rat::from_integer(c.into()));
                    form = &form + &term;
                }
            }
            components.push(form);
        }
        return PolyMap::new(components);
    }
    Err(Error::ResourceLimit { what: "independent linear-form redraws".into(), limit: max_redraws })
}

/// Rank of a dense rational matrix by Gaussian elimination.
fn rat_rank(mut m: Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut col = 0;
    while rank < rows && col < cols {
        let pivot = (rank..rows).find(|&r| !m[r][col].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                col += 1;
                continue;
            }
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].clone();
        for r in rank + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &inv;
            for c in col..cols {
                let sub = &f * &m[rank][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
        rank += 1;
        col += 1;
    }
    rank
}

/// I(V) + ⟨φ_j − value_j : j ≤ i⟩.
pub fn fiber_ideal(f: &FiberSpec) -> Result<Ideal> {
    let ring = f.base.ring();
    let mut gens = f.base.generators().to_vec();
    for (j, val) in f.value.iter().enumerate() {
        let shifted = f.map.component(j) - &Polynomial::constant(ring, val.clone());
        gens.push(shifted);
    }
    Ideal::new(ring, gens)
}
