//! Ideal-theoretic engine: Buchberger-style Gröbner bases with the
//! Gebauer–Möller pair-elimination criteria, normal forms, membership,
//! elimination ideals, saturation, ideal intersection, quotient-ring
//! monomial bases, and Krull dimension.
//!
//! Internally the basis computation runs fraction-free over the integers
//! (primitive polynomials with positive leading coefficients) to avoid
//! rational-arithmetic blowup; the published basis is reduced and monic
//! over the rationals and is therefore unique for (ideal, order).

use crate::error::{Error, Result};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::{Int, Poly, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::{Arc, Mutex};

// ---------------------------------------------------------------------------
// budgets
// ---------------------------------------------------------------------------

/// Hard resource limits for basis computations. Exceeding any limit aborts
/// with a distinct resource-limit error — results are never silently
/// truncated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbBudget {
    /// Maximum number of S-pairs processed in one basis computation.
    pub max_pairs: usize,
    /// Maximum number of intermediate basis elements.
    pub max_basis: usize,
    /// Maximum number of terms in any intermediate polynomial.
    pub max_terms: usize,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget { max_pairs: 1_000_000, max_basis: 20_000, max_terms: 2_000_000 }
    }
}

static GLOBAL_BUDGET: Mutex<Option<GbBudget>> = Mutex::new(None);

/// Install a process-wide default budget (used by the command-line driver;
/// library callers normally pass budgets explicitly).
pub fn set_global_budget(b: GbBudget) {
    *GLOBAL_BUDGET.lock().unwrap() = Some(b);
}

/// The budget used by the convenience entry points: the globally installed
/// one if any, otherwise the built-in default.
pub fn effective_budget() -> GbBudget {
    GLOBAL_BUDGET.lock().unwrap().clone().unwrap_or_default()
}

// ---------------------------------------------------------------------------
// public types
// ---------------------------------------------------------------------------

/// A polynomial ideal, carrying its generators and a write-once cache of
/// reduced Gröbner bases keyed by monomial order. The cache may be shared
/// across threads; entries are never mutated after insertion.
#[derive(Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Poly>,
    cache: Mutex<Vec<(MonomialOrder, Arc<GroebnerBasis>)>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    /// Build an ideal from generators; zero generators are dropped. An
    /// empty list (or all-zero list) is the zero ideal.
    pub fn new(ring: &Arc<Ring>, generators: Vec<Poly>) -> Result<Self> {
        for g in &generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: g.ring().to_string(),
                });
            }
        }
        let generators: Vec<Poly> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, cache: Mutex::new(Vec::new()) })
    }

    pub fn zero(ring: &Arc<Ring>) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new(), cache: Mutex::new(Vec::new()) }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Gröbner basis under `order`, from the cache when available.
    pub fn groebner(&self, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
        self.groebner_budgeted(order, &effective_budget())
    }

    pub fn groebner_budgeted(
        &self,
        order: &MonomialOrder,
        budget: &GbBudget,
    ) -> Result<Arc<GroebnerBasis>> {
        {
            let cache = self.cache.lock().unwrap();
            if let Some((_, gb)) = cache.iter().find(|(o, _)| o == order) {
                return Ok(gb.clone());
            }
        }
        let gb = Arc::new(buchberger(&self.ring, &self.generators, order, budget)?);
        let mut cache = self.cache.lock().unwrap();
        if let Some((_, existing)) = cache.iter().find(|(o, _)| o == order) {
            return Ok(existing.clone()); // another thread won the race
        }
        cache.push((order.clone(), gb.clone()));
        Ok(gb)
    }
}

/// A reduced Gröbner basis: monic elements, no term of any element lies in
/// the leading-term ideal of the others, sorted ascending by leading
/// monomial. Unique for (ideal, order).
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    order: MonomialOrder,
    elements: Vec<Poly>,
    leading: Vec<Monomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// True when the basis is {1}, i.e. the ideal is the whole ring.
    pub fn contains_one(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant() && !self.elements[0].is_zero()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

// ---------------------------------------------------------------------------
// fraction-free internals
// ---------------------------------------------------------------------------

/// Integer polynomial as a term list sorted strictly descending under the
/// active order; primitive with positive leading coefficient after
/// normalization.
type ITerms = Vec<(Monomial, Int)>;

fn ipoly_from_poly(p: &Poly, order: &MonomialOrder) -> ITerms {
    let mut den_lcm = Int::one();
    for (_, c) in p.terms() {
        den_lcm = den_lcm.lcm(c.denom());
    }
    let mut v: ITerms = p
        .terms()
        .map(|(m, c)| (m.clone(), c.numer() * (&den_lcm / c.denom())))
        .collect();
    v.sort_by(|a, b| order.cmp(&b.0, &a.0));
    make_primitive(&mut v);
    v
}

fn ipoly_to_poly(f: &ITerms, ring: &Arc<Ring>) -> Poly {
    Polynomial::from_terms(ring, f.iter().map(|(m, c)| (m.clone(), Rat::from_integer(c.clone()))))
}

/// Divide out the content and make the leading coefficient positive.
fn make_primitive(f: &mut ITerms) {
    if f.is_empty() {
        return;
    }
    let mut g = Int::zero();
    for (_, c) in f.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if f[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in f.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// `a·f + b·g` with both inputs sorted descending; output sorted, no zeros.
fn linear_combine(f: &ITerms, a: &Int, g: &ITerms, b: &Int, order: &MonomialOrder) -> ITerms {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < f.len() || j < g.len() {
        let take_f = if i >= f.len() {
            false
        } else if j >= g.len() {
            true
        } else {
            match order.cmp(&f[i].0, &g[j].0) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => {
                    let c = &f[i].1 * a + &g[j].1 * b;
                    if !c.is_zero() {
                        out.push((f[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                    continue;
                }
            }
        };
        if take_f {
            let c = &f[i].1 * a;
            if !c.is_zero() {
                out.push((f[i].0.clone(), c));
            }
            i += 1;
        } else {
            let c = &g[j].1 * b;
            if !c.is_zero() {
                out.push((g[j].0.clone(), c));
            }
            j += 1;
        }
    }
    out
}

/// Multiply every monomial of `g` by `q` (order-compatible, stays sorted).
fn shift(g: &ITerms, q: &Monomial) -> ITerms {
    g.iter().map(|(m, c)| (m.mul(q), c.clone())).collect()
}

/// Fraction-free full reduction of `f` by `basis`. The result is the
/// primitive part of a polynomial that is congruent to a positive integer
/// multiple of `f` modulo the ideal generated by `basis`; in particular it
/// is zero exactly when `f` reduces to zero.
fn reduce_full(
    mut f: ITerms,
    basis: &[ITerms],
    order: &MonomialOrder,
    budget: &GbBudget,
) -> Result<ITerms> {
    let mut out: ITerms = Vec::new();
    'outer: while !f.is_empty() {
        if f.len() + out.len() > budget.max_terms {
            return Err(Error::ResourceLimit {
                what: "polynomial term count during reduction".into(),
                limit: budget.max_terms,
            });
        }
        let (lm, lc) = (&f[0].0, &f[0].1);
        for g in basis {
            if g.is_empty() {
                continue;
            }
            let gm = &g[0].0;
            if gm.divides(lm) {
                let q = gm.div_into(lm);
                let gc = &g[0].1;
                let d = lc.gcd(gc);
                let a = gc / &d; // multiply f (and out) by a
                let b = -(lc / &d); // add b · x^q · g
                debug_assert!(a.is_positive(), "basis elements have positive leading coeff");
                if !a.is_one() {
                    for (_, c) in out.iter_mut() {
                        *c = &*c * &a;
                    }
                }
                let shifted = shift(g, &q);
                f = linear_combine(&f, &a, &shifted, &b, order);
                continue 'outer;
            }
        }
        // leading term is irreducible: move it to the remainder
        let head = f.remove(0);
        out.push(head);
    }
    make_primitive(&mut out);
    Ok(out)
}

/// S-polynomial with integer cross-multipliers (leading terms cancel).
fn s_poly(f: &ITerms, g: &ITerms, order: &MonomialOrder) -> ITerms {
    let (fm, fc) = (&f[0].0, &f[0].1);
    let (gm, gc) = (&g[0].0, &g[0].1);
    let l = fm.lcm(gm);
    let d = fc.gcd(gc);
    let a = gc / &d;
    let b = -(fc / &d);
    let fs = shift(f, &fm.div_into(&l));
    let gs = shift(g, &gm.div_into(&l));
    linear_combine(&fs, &a, &gs, &b, order)
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer–Möller pair update: add element `t` (index of the new basis
/// element) to the pair set, discarding pairs by the standard chain,
/// equal-lcm and coprimality criteria.
fn update_pairs(pairs: &mut Vec<Pair>, basis: &[ITerms], t: usize) {
    let lm_t = &basis[t][0].0;
    let mut fresh: Vec<Pair> = (0..t)
        .filter(|&i| !basis[i].is_empty())
        .map(|i| Pair { i, j: t, lcm: basis[i][0].0.lcm(lm_t) })
        .collect();

    // chain criterion among the fresh pairs: keep (i,t) only if no other
    // fresh pair's lcm properly divides it, and keep one representative per
    // lcm value (coprime pairs survive this phase so they can knock out
    // non-coprime ones, then get dropped below).
    let mut keep = vec![true; fresh.len()];
    for a in 0..fresh.len() {
        if !keep[a] {
            continue;
        }
        for b in 0..fresh.len() {
            if a == b || !keep[a] {
                continue;
            }
            if !keep[b] {
                continue;
            }
            if fresh[b].lcm != fresh[a].lcm && fresh[b].lcm.divides(&fresh[a].lcm) {
                keep[a] = false;
            }
        }
    }
    // one representative per lcm value (first index wins, deterministic)
    let mut seen: Vec<Monomial> = Vec::new();
    for (a, p) in fresh.iter().enumerate() {
        if !keep[a] {
            continue;
        }
        if seen.contains(&p.lcm) {
            keep[a] = false;
        } else {
            seen.push(p.lcm.clone());
        }
    }
    // coprimality: drop pairs whose leading monomials are coprime
    for (a, p) in fresh.iter().enumerate() {
        if keep[a] && basis[p.i][0].0.coprime(lm_t) {
            keep[a] = false;
        }
    }
    let mut a = 0usize;
    fresh.retain(|_| {
        let k = keep[a];
        a += 1;
        k
    });

    // prune old pairs made redundant by the new element
    pairs.retain(|p| {
        if !lm_t.divides(&p.lcm) {
            return true;
        }
        let li = basis[p.i][0].0.lcm(lm_t);
        let lj = basis[p.j][0].0.lcm(lm_t);
        li == p.lcm || lj == p.lcm
    });
    pairs.extend(fresh);
}

/// Buchberger's algorithm; returns the unique reduced monic basis.
fn buchberger(
    ring: &Arc<Ring>,
    generators: &[Poly],
    order: &MonomialOrder,
    budget: &GbBudget,
) -> Result<GroebnerBasis> {
    let mut basis: Vec<ITerms> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for g in generators {
        if g.is_zero() {
            continue;
        }
        let ip = ipoly_from_poly(g, order);
        if basis.contains(&ip) {
            continue;
        }
        basis.push(ip);
        update_pairs(&mut pairs, &basis, basis.len() - 1);
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        processed += 1;
        if processed > budget.max_pairs {
            return Err(Error::ResourceLimit {
                what: "S-pair budget".into(),
                limit: budget.max_pairs,
            });
        }
        // normal selection: smallest lcm under the order; ties by indices
        let mut best = 0usize;
        for k in 1..pairs.len() {
            let c = order.cmp(&pairs[k].lcm, &pairs[best].lcm);
            let better = match c {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => (pairs[k].i, pairs[k].j) < (pairs[best].i, pairs[best].j),
            };
            if better {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = s_poly(&basis[pair.i], &basis[pair.j], order);
        let h = reduce_full(s, &basis, order, budget)?;
        if h.is_empty() {
            continue;
        }
        if basis.len() + 1 > budget.max_basis {
            return Err(Error::ResourceLimit {
                what: "basis size budget".into(),
                limit: budget.max_basis,
            });
        }
        basis.push(h);
        update_pairs(&mut pairs, &basis, basis.len() - 1);
    }

    // interreduce over the rationals into the unique reduced monic basis
    let mut polys: Vec<Poly> = basis.iter().filter(|f| !f.is_empty()).map(|f| ipoly_to_poly(f, ring)).collect();

    // minimalize: drop elements whose leading monomial is divisible by
    // another element's leading monomial
    polys.sort_by(|a, b| {
        let la = a.leading(order).unwrap().0.clone();
        let lb = b.leading(order).unwrap().0.clone();
        order.cmp(&la, &lb)
    });
    let mut minimal: Vec<Poly> = Vec::new();
    let mut minimal_lm: Vec<Monomial> = Vec::new();
    for p in polys {
        let lm = p.leading(order).unwrap().0.clone();
        if minimal_lm.iter().any(|m| m.divides(&lm)) {
            continue;
        }
        minimal.push(p);
        minimal_lm.push(lm);
    }

    // tail-reduce each element against the others and normalize to monic
    let mut reduced: Vec<Poly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<(Monomial, Poly)> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(j, p)| (minimal_lm[j].clone(), p.monic(order)))
            .collect();
        let nf = divide_by_basis(&minimal[i], &others, order);
        reduced.push(nf.monic(order));
    }
    reduced.sort_by(|a, b| {
        let la = a.leading(order).unwrap().0.clone();
        let lb = b.leading(order).unwrap().0.clone();
        order.cmp(&la, &lb)
    });
    let leading: Vec<Monomial> = reduced.iter().map(|p| p.leading(order).unwrap().0.clone()).collect();
    Ok(GroebnerBasis { ring: ring.clone(), order: order.clone(), elements: reduced, leading })
}

/// Multivariate division remainder of `p` by monic divisors given with their
/// leading monomials. No remainder term is divisible by any divisor's lead.
fn divide_by_basis(p: &Poly, divisors: &[(Monomial, Poly)], order: &MonomialOrder) -> Poly {
    let ring = p.ring().clone();
    let mut rem = Polynomial::zero(&ring);
    let mut f = p.clone();
    while !f.is_zero() {
        let (lm, lc) = {
            let (m, c) = f.leading(order).unwrap();
            (m.clone(), c.clone())
        };
        let mut reduced = false;
        for (dm, d) in divisors {
            if dm.divides(&lm) {
                let q = dm.div_into(&lm);
                f = f.checked_sub(&d.mul_term(&q, &lc)).expect("same ring");
                reduced = true;
                break;
            }
        }
        if !reduced {
            let t = Polynomial::term(&ring, lm.clone(), lc.clone());
            rem = rem.checked_add(&t).expect("same ring");
            f = f.checked_sub(&t).expect("same ring");
        }
    }
    rem
}

// ---------------------------------------------------------------------------
// public operations
// ---------------------------------------------------------------------------

/// Reduced Gröbner basis of `ideal` under `order` (cached on the ideal).
pub fn groebner_basis(ideal: &Ideal, order: &MonomialOrder) -> Result<Arc<GroebnerBasis>> {
    ideal.groebner(order)
}

pub fn groebner_basis_budgeted(
    ideal: &Ideal,
    order: &MonomialOrder,
    budget: &GbBudget,
) -> Result<Arc<GroebnerBasis>> {
    ideal.groebner_budgeted(order, budget)
}

/// Remainder of `p` on division by the basis: no remainder term is
/// divisible by any basis leading monomial, and `p − normal_form(p)` lies
/// in the ideal. Idempotent.
pub fn normal_form(p: &Poly, gb: &GroebnerBasis) -> Result<Poly> {
    if p.ring() != &gb.ring {
        return Err(Error::RingMismatch { left: gb.ring.to_string(), right: p.ring().to_string() });
    }
    let divisors: Vec<(Monomial, Poly)> =
        gb.leading.iter().cloned().zip(gb.elements.iter().cloned()).collect();
    Ok(divide_by_basis(p, &divisors, &gb.order))
}

/// True exactly when `p` lies in the ideal.
pub fn ideal_membership(p: &Poly, ideal: &Ideal) -> Result<bool> {
    let gb = ideal.groebner(&MonomialOrder::GrevLex)?;
    Ok(normal_form(p, &gb)?.is_zero())
}

/// Generators of the contraction I ∩ Q[keep] (returned in the same ring),
/// computed with a block order eliminating the complement of `keep`.
pub fn elimination_ideal(ideal: &Ideal, keep: &[usize]) -> Result<Ideal> {
    elimination_ideal_budgeted(ideal, keep, &effective_budget())
}

pub fn elimination_ideal_budgeted(ideal: &Ideal, keep: &[usize], budget: &GbBudget) -> Result<Ideal> {
    let n = ideal.ring.nvars();
    let keep_set: BTreeSet<usize> = keep.iter().copied().collect();
    for &k in keep {
        if k >= n {
            return Err(Error::VarIndex { index: k, nvars: n });
        }
    }
    let eliminated: Vec<usize> = (0..n).filter(|i| !keep_set.contains(i)).collect();
    if eliminated.is_empty() {
        return Ok(ideal.clone());
    }
    let order = MonomialOrder::Block { eliminated };
    let gb = ideal.groebner_budgeted(&order, budget)?;
    let kept: Vec<Poly> = gb
        .elements
        .iter()
        .filter(|p| p.support_vars().iter().all(|v| keep_set.contains(v)))
        .cloned()
        .collect();
    Ideal::new(&ideal.ring, kept)
}

/// Saturation I : h^∞ via the auxiliary-variable construction: adjoin a
/// fresh variable t, add t·h − 1, eliminate t.
pub fn saturation(ideal: &Ideal, h: &Poly) -> Result<Ideal> {
    saturation_budgeted(ideal, h, &effective_budget())
}

pub fn saturation_budgeted(ideal: &Ideal, h: &Poly, budget: &GbBudget) -> Result<Ideal> {
    if h.is_zero() {
        return Err(Error::InvalidInput("saturation by the zero polynomial".into()));
    }
    if h.ring() != &ideal.ring {
        return Err(Error::RingMismatch {
            left: ideal.ring.to_string(),
            right: h.ring().to_string(),
        });
    }
    if h.is_constant() {
        return Ok(ideal.clone()); // nonzero constant: saturation changes nothing
    }
    let n = ideal.ring.nvars();
    let ext = ideal.ring.extended(&["t"]);
    let idmap: Vec<usize> = (0..n).collect();
    let mut gens: Vec<Poly> = ideal
        .generators
        .iter()
        .map(|g| g.map_vars(&ext, &idmap))
        .collect::<Result<_>>()?;
    let t = Polynomial::var(&ext, n)?;
    let h_ext = h.map_vars(&ext, &idmap)?;
    let th1 = (&t * &h_ext).checked_sub(&Polynomial::one(&ext))?;
    gens.push(th1);
    let extended = Ideal::new(&ext, gens)?;
    let contracted = elimination_ideal_budgeted(&extended, &idmap, budget)?;
    let back: Vec<Poly> = contracted
        .generators
        .iter()
        .map(|g| g.map_vars(&ideal.ring, &idmap))
        .collect::<Result<_>>()?;
    Ideal::new(&ideal.ring, back)
}

/// Ideal intersection I ∩ J via t·I + (1−t)·J and elimination of t.
pub fn intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    intersect_budgeted(a, b, &effective_budget())
}

pub fn intersect_budgeted(a: &Ideal, b: &Ideal, budget: &GbBudget) -> Result<Ideal> {
    if a.ring != b.ring {
        return Err(Error::RingMismatch { left: a.ring.to_string(), right: b.ring.to_string() });
    }
    if a.is_zero_ideal() || b.is_zero_ideal() {
        return Ok(Ideal::zero(&a.ring));
    }
    let n = a.ring.nvars();
    let ext = a.ring.extended(&["t"]);
    let idmap: Vec<usize> = (0..n).collect();
    let t = Polynomial::var(&ext, n)?;
    let one_minus_t = Polynomial::one(&ext).checked_sub(&t)?;
    let mut gens: Vec<Poly> = Vec::new();
    for g in &a.generators {
        gens.push(&g.map_vars(&ext, &idmap)? * &t);
    }
    for g in &b.generators {
        gens.push(&g.map_vars(&ext, &idmap)? * &one_minus_t);
    }
    let extended = Ideal::new(&ext, gens)?;
    let contracted = elimination_ideal_budgeted(&extended, &idmap, budget)?;
    let back: Vec<Poly> = contracted
        .generators
        .iter()
        .map(|g| g.map_vars(&a.ring, &idmap))
        .collect::<Result<_>>()?;
    Ideal::new(&a.ring, back)
}

/// The standard monomials — those outside the leading-term ideal — for a
/// zero-dimensional basis. Their count is the vector-space dimension of the
/// quotient ring, i.e. the number of complex solutions with multiplicity.
pub fn quotient_basis(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let n = gb.ring.nvars();
    if gb.contains_one() {
        return Ok(Vec::new()); // unit ideal: empty variety, zero-dimensional quotient {0}
    }
    // zero-dimensionality: every variable needs a pure power among the
    // leading monomials
    let mut bound = vec![0u32; n];
    for lm in &gb.leading {
        let sup: Vec<usize> = lm.support().collect();
        if sup.len() == 1 {
            let v = sup[0];
            let e = lm.0[v];
            if bound[v] == 0 || e < bound[v] {
                bound[v] = e;
            }
        }
    }
    if gb.is_empty() || bound.iter().any(|&b| b == 0) {
        let dim = krull_dimension_of_gb(gb);
        return Err(Error::NotZeroDimensional { dim: Some(dim) });
    }
    // enumerate the staircase below the pure-power bounds
    let mut out: Vec<Monomial> = Vec::new();
    let mut cur = vec![0u32; n];
    loop {
        let m = Monomial(cur.clone());
        if !gb.leading.iter().any(|lm| lm.divides(&m)) {
            out.push(m);
        }
        // odometer over the box Π [0, bound_v)
        let mut v = 0usize;
        loop {
            if v == n {
                out.sort_by(|a, b| gb.order.cmp(a, b));
                return Ok(out);
            }
            cur[v] += 1;
            if cur[v] < bound[v] {
                break;
            }
            cur[v] = 0;
            v += 1;
        }
    }
}

/// Number of standard monomials (complex solution count with multiplicity).
pub fn quotient_dimension(gb: &GroebnerBasis) -> Result<usize> {
    Ok(quotient_basis(gb)?.len())
}

/// Krull dimension of the quotient ring, computed combinatorially as the
/// maximum cardinality of a variable subset containing no leading-monomial
/// support. Returns −1 for the unit ideal.
pub fn krull_dimension(ideal: &Ideal) -> Result<i64> {
    let gb = ideal.groebner(&MonomialOrder::GrevLex)?;
    Ok(krull_dimension_of_gb(&gb))
}

pub(crate) fn krull_dimension_of_gb(gb: &GroebnerBasis) -> i64 {
    if gb.contains_one() {
        return -1;
    }
    let n = gb.ring.nvars();
    assert!(n <= 24, "dimension search limited to 24 variables");
    let supports: Vec<u32> = gb
        .leading
        .iter()
        .map(|lm| lm.support().fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    let mut best = 0i64;
    for mask in 0u32..(1u32 << n) {
        let size = mask.count_ones() as i64;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !mask != 0) {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;

    fn ring(names: &[&str]) -> Arc<Ring> {
        Ring::new(names).unwrap()
    }

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_poly(s, r).unwrap()).collect()).unwrap()
    }

    fn gb_strings(gb: &GroebnerBasis) -> Vec<String> {
        gb.elements().iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn principal_ideal_basis_is_monic_generator() {
        let r = ring(&["x"]);
        let i = ideal(&r, &["2*x^2 - 2"]);
        let gb = i.groebner(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb_strings(&gb), vec!["x^2 - 1"]);
    }

    #[test]
    fn two_generator_lex_basis() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x - y", "y^2 - 1"]);
        let gb = i.groebner(&MonomialOrder::Lex).unwrap();
        assert_eq!(gb_strings(&gb), vec!["y^2 - 1", "x - y"]);
    }

    #[test]
    fn coordinate_ideal() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x", "y"]);
        let gb = i.groebner(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb_strings(&gb), vec!["y", "x"]);
    }

    #[test]
    fn normal_forms() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x - y"]);
        let gb = i.groebner(&MonomialOrder::Lex).unwrap();
        let p = parse_poly("x^2 - y^2", &r).unwrap();
        assert!(normal_form(&p, &gb).unwrap().is_zero());

        let ix = ideal(&r, &["x"]);
        let gbx = ix.groebner(&MonomialOrder::Lex).unwrap();
        let y = parse_poly("y", &r).unwrap();
        assert_eq!(normal_form(&y, &gbx).unwrap(), y);

        let r1 = ring(&["x"]);
        let iu = ideal(&r1, &["x^2 - 1"]);
        let gbu = iu.groebner(&MonomialOrder::Lex).unwrap();
        let x2 = parse_poly("x^2", &r1).unwrap();
        assert_eq!(normal_form(&x2, &gbu).unwrap(), parse_poly("1", &r1).unwrap());
        // idempotence
        let nf = normal_form(&x2, &gbu).unwrap();
        assert_eq!(normal_form(&nf, &gbu).unwrap(), nf);
    }

    #[test]
    fn membership() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x - y"]);
        assert!(ideal_membership(&parse_poly("x^2 - y^2", &r).unwrap(), &i).unwrap());
        let j = ideal(&r, &["x", "y"]);
        assert!(!ideal_membership(&parse_poly("1", &r).unwrap(), &j).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["x", "y"]);
        // eliminate x (keep y)
        let i = ideal(&r, &["x^2 + y^2 - 1", "x - y"]);
        let e = elimination_ideal(&i, &[1]).unwrap();
        assert_eq!(e.generators().len(), 1);
        assert_eq!(e.generators()[0], parse_poly("y^2 - 1/2", &r).unwrap().monic(&MonomialOrder::GrevLex));
        // scaling: 2y^2 - 1 is a member and conversely
        assert!(ideal_membership(&parse_poly("2*y^2 - 1", &r).unwrap(), &e).unwrap());

        // eliminate nothing: same reduced basis
        let full = elimination_ideal(&i, &[0, 1]).unwrap();
        let gb1 = i.groebner(&MonomialOrder::GrevLex).unwrap();
        let gb2 = full.groebner(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb_strings(&gb1), gb_strings(&gb2));

        // dense projection: eliminate y from the parabola graph
        let j = ideal(&r, &["y - x^2"]);
        let pj = elimination_ideal(&j, &[0]).unwrap();
        assert!(pj.is_zero_ideal());
    }

    #[test]
    fn saturation_examples() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x*y"]);
        let s = saturation(&i, &parse_poly("y", &r).unwrap()).unwrap();
        let gb = s.groebner(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb_strings(&gb), vec!["x"]);

        // saturation by a unit changes nothing
        let s1 = saturation(&i, &parse_poly("1", &r).unwrap()).unwrap();
        let gb1 = s1.groebner(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb_strings(&gb1), vec!["x*y"]);

        // ⟨x², xy⟩ : x^∞ is the unit ideal: x²·1 ∈ I already, so 1 lies in
        // the saturation (the finite quotient I : x, by contrast, is ⟨x,y⟩).
        let i2 = ideal(&r, &["x^2", "x*y"]);
        let s2 = saturation(&i2, &parse_poly("x", &r).unwrap()).unwrap();
        assert!(ideal_membership(&parse_poly("x", &r).unwrap(), &s2).unwrap());
        assert!(ideal_membership(&parse_poly("y", &r).unwrap(), &s2).unwrap());
        assert!(s2.groebner(&MonomialOrder::GrevLex).unwrap().contains_one());

        // idempotence
        let s3 = saturation(&s2, &parse_poly("x", &r).unwrap()).unwrap();
        let a = s2.groebner(&MonomialOrder::GrevLex).unwrap();
        let b = s3.groebner(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb_strings(&a), gb_strings(&b));
    }

    #[test]
    fn saturation_contains_original() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x*y", "y^2 - y"]);
        let s = saturation(&i, &parse_poly("y", &r).unwrap()).unwrap();
        for g in i.generators() {
            assert!(ideal_membership(g, &s).unwrap());
        }
    }

    #[test]
    fn intersection_of_two_points() {
        let r = ring(&["x"]);
        let a = ideal(&r, &["x - 1"]);
        let b = ideal(&r, &["x + 1"]);
        let c = intersect(&a, &b).unwrap();
        let gb = c.groebner(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(gb_strings(&gb), vec!["x^2 - 1"]);
    }

    #[test]
    fn quotient_bases() {
        let r1 = ring(&["x"]);
        let i = ideal(&r1, &["x^2 - 1"]);
        let q = quotient_basis(&i.groebner(&MonomialOrder::GrevLex).unwrap()).unwrap();
        assert_eq!(q.len(), 2); // {1, x}
        assert!(q.contains(&Monomial(vec![0])));
        assert!(q.contains(&Monomial(vec![1])));

        let r2 = ring(&["x", "y"]);
        let j = ideal(&r2, &["x^2", "y^3"]);
        let qj = quotient_basis(&j.groebner(&MonomialOrder::GrevLex).unwrap()).unwrap();
        assert_eq!(qj.len(), 6);

        let k = ideal(&r2, &["x - y", "y^2 - 1"]);
        let qk = quotient_basis(&k.groebner(&MonomialOrder::Lex).unwrap()).unwrap();
        assert_eq!(qk.len(), 2);

        // positive-dimensional input is a distinct error
        let l = ideal(&r2, &["x"]);
        match quotient_basis(&l.groebner(&MonomialOrder::GrevLex).unwrap()) {
            Err(Error::NotZeroDimensional { dim }) => assert_eq!(dim, Some(1)),
            other => panic!("expected NotZeroDimensional, got {other:?}"),
        }
    }

    #[test]
    fn univariate_quotient_count_is_degree() {
        let r = ring(&["x"]);
        for (p, d) in [("x^5 - x - 1", 5usize), ("x^3 - 2*x", 3), ("x - 4", 1)] {
            let i = ideal(&r, &[p]);
            let q = quotient_basis(&i.groebner(&MonomialOrder::GrevLex).unwrap()).unwrap();
            assert_eq!(q.len(), d);
        }
    }

    #[test]
    fn krull_dimensions() {
        let r3 = ring(&["x1", "x2", "x3"]);
        let g = ideal(&r3, &["x1^3+x2^3+x3^3-x1-x2-x3-1"]);
        assert_eq!(krull_dimension(&g).unwrap(), 2);

        let z = Ideal::zero(&r3);
        assert_eq!(krull_dimension(&z).unwrap(), 3);

        let r1 = ring(&["x"]);
        let p = ideal(&r1, &["x^2 - 1"]);
        assert_eq!(krull_dimension(&p).unwrap(), 0);

        let u = ideal(&r1, &["x", "x - 1"]);
        assert_eq!(krull_dimension(&u).unwrap(), -1);
    }

    #[test]
    fn generators_reduce_to_zero_and_permutation_invariance() {
        let r = ring(&["x", "y", "z"]);
        let gens = ["x*y - z", "y*z - x", "x*z - y"];
        let i1 = ideal(&r, &gens);
        let gb1 = i1.groebner(&MonomialOrder::GrevLex).unwrap();
        for g in i1.generators() {
            assert!(normal_form(g, &gb1).unwrap().is_zero());
        }
        let perms: [[usize; 3]; 3] = [[1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for perm in perms {
            let permuted: Vec<&str> = perm.iter().map(|&k| gens[k]).collect();
            let i2 = ideal(&r, &permuted);
            let gb2 = i2.groebner(&MonomialOrder::GrevLex).unwrap();
            assert_eq!(gb_strings(&gb1), gb_strings(&gb2));
        }
    }

    #[test]
    fn normal_form_is_linear_on_members() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 - y", "y^2 - x"]);
        let gb = i.groebner(&MonomialOrder::GrevLex).unwrap();
        // random-ish members: multiples of the generators
        let muls = ["x", "y + 1", "x*y - 3", "x^2 + y^2"];
        for a in muls {
            for b in muls {
                let p = &parse_poly(a, &r).unwrap() * i.generators().first().unwrap();
                let q = &parse_poly(b, &r).unwrap() * &i.generators()[1];
                let s = &p + &q;
                assert!(normal_form(&s, &gb).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn pair_budget_is_a_distinct_error() {
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x*y - z", "y*z - x", "x*z - y"]);
        let tiny = GbBudget { max_pairs: 1, max_basis: 20_000, max_terms: 2_000_000 };
        match i.groebner_budgeted(&MonomialOrder::GrevLex, &tiny) {
            Err(e) => assert!(e.is_resource_limit(), "{e:?}"),
            Ok(_) => panic!("expected resource-limit error"),
        }
    }

    #[test]
    fn cache_returns_same_arc() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 - y", "y^2 - x"]);
        let a = i.groebner(&MonomialOrder::GrevLex).unwrap();
        let b = i.groebner(&MonomialOrder::GrevLex).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        let c = i.groebner(&MonomialOrder::Lex).unwrap();
        assert!(!Arc::ptr_eq(&a, &c));
    }

    #[test]
    fn cyclic3_has_expected_solution_count() {
        // classic small benchmark: cyclic-3 has 6 solutions with multiplicity
        let r = ring(&["x", "y", "z"]);
        let i = ideal(&r, &["x + y + z", "x*y + y*z + z*x", "x*y*z - 1"]);
        let gb = i.groebner(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(quotient_dimension(&gb).unwrap(), 6);
    }

    #[test]
    fn katsura3_zero_dimensional() {
        let r = ring(&["a", "b", "c"]);
        let i = ideal(
            &r,
            &["a + 2*b + 2*c - 1", "a^2 + 2*b^2 + 2*c^2 - a", "2*a*b + 2*b*c - b"],
        );
        let gb = i.groebner(&MonomialOrder::GrevLex).unwrap();
        assert_eq!(quotient_dimension(&gb).unwrap(), 4);
    }
}
