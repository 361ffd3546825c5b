//! Exact univariate machinery: integer polynomials, squarefree parts,
//! Descartes/bisection real-root isolation on dyadic intervals, root
//! refinement, and Sturm sequences (kept as an independent testing oracle).

use crate::error::{Error, Result};
use crate::polyring::{Interval, Polynomial};
use crate::{Int, Poly, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense univariate integer polynomial, coefficients ascending by degree,
/// trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    pub coeffs: Vec<Int>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Extract from a multivariate polynomial that uses at most one
    /// variable; scales rational coefficients to a primitive integer vector
    /// (root set is unchanged). Returns the polynomial and the variable
    /// index it uses (`None` for constants).
    pub fn from_poly(p: &Poly) -> Result<(Self, Option<usize>)> {
        let vars = p.support_vars();
        if vars.len() > 1 {
            return Err(Error::UnsupportedShape(format!(
                "expected a univariate polynomial, found {} variables",
                vars.len()
            )));
        }
        let var = vars.first().copied();
        let deg = var.map(|v| p.degree_in(v).unwrap_or(0)).unwrap_or(0) as usize;
        let mut den_lcm = Int::one();
        for (_, c) in p.terms() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut coeffs = vec![Int::zero(); deg + 1];
        for (m, c) in p.terms() {
            let e = var.map(|v| m.0[v] as usize).unwrap_or(0);
            coeffs[e] = c.numer() * (&den_lcm / c.denom());
        }
        let mut u = UPoly::new(coeffs);
        u.make_primitive();
        Ok((u, var))
    }

    pub fn to_poly(&self, ring: &std::sync::Arc<crate::polyring::Ring>, var: usize) -> Poly {
        let mut p = Polynomial::zero(ring);
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut exps = vec![0u32; ring.nvars()];
                exps[var] = e as u32;
                p.add_term(crate::polyring::Monomial(exps), Rat::from_integer(c.clone()));
            }
        }
        p
    }

    pub fn make_primitive(&mut self) {
        if self.coeffs.is_empty() {
            return;
        }
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.coeffs.last().unwrap().is_negative() {
            g = -g;
        }
        if !g.is_one() && !g.is_zero() {
            for c in self.coeffs.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rat) -> i8 {
        let v = self.eval_rat(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return UPoly::zero();
        }
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(e, c)| c * Int::from(e))
                .collect(),
        )
    }

    fn scale(&self, c: &Int) -> Self {
        UPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Int::zero);
            let b = other.coeffs.get(i).cloned().unwrap_or_else(Int::zero);
            out.push(a - b);
        }
        UPoly::new(out)
    }

    /// Pseudo-remainder of `self` by `other` (fraction-free): returns a
    /// remainder equal to `f · (self mod other)` for some nonzero rational
    /// `f`, together with whether `f` is negative (one multiplication by
    /// the divisor's leading coefficient per cancellation step).
    fn prem_signed(&self, other: &Self) -> (Self, bool) {
        let d = other.degree();
        let lc = other.coeffs.last().unwrap().clone();
        let lc_neg = lc.is_negative();
        let mut neg = false;
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= d {
            let k = r.degree() - d;
            let rl = r.coeffs.last().unwrap().clone();
            // r = lc·r − rl·x^k·other
            let mut shifted = vec![Int::zero(); k];
            shifted.extend(other.coeffs.iter().cloned());
            r = r.scale(&lc).sub(&UPoly::new(shifted).scale(&rl));
            neg ^= lc_neg;
        }
        (r, neg)
    }

    fn prem(&self, other: &Self) -> Self {
        self.prem_signed(other).0
    }

    /// Primitive-sequence polynomial GCD.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        a.make_primitive();
        b.make_primitive();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let mut r = a.prem(&b);
            if r.is_zero() {
                b.make_primitive();
                return b;
            }
            r.make_primitive();
            a = b;
            b = r;
            if b.degree() == 0 {
                return UPoly::new(vec![Int::one()]);
            }
        }
    }

    /// Exact quotient (errors if not exact).
    pub fn div_exact(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::InvalidInput("univariate division by zero".into()));
        }
        let mut r: Vec<Rat> = self.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect();
        let d = other.degree();
        let lc = Rat::from_integer(other.coeffs.last().unwrap().clone());
        if r.len() <= d && !self.is_zero() {
            return Err(Error::InvalidInput("inexact univariate division".into()));
        }
        let mut q = vec![Rat::zero(); self.coeffs.len().saturating_sub(d)];
        for k in (0..q.len()).rev() {
            let c = r[k + d].clone() / lc.clone();
            q[k] = c.clone();
            for j in 0..=d {
                let sub = c.clone() * Rat::from_integer(other.coeffs[j].clone());
                r[k + j] -= sub;
            }
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::InvalidInput("inexact univariate division".into()));
        }
        // the quotient of integer polynomials with exact division may still
        // have rational coefficients only when the divisor is imprimitive;
        // clear denominators (root set is what callers use)
        let mut den = Int::one();
        for c in &q {
            den = den.lcm(c.denom());
        }
        Ok(UPoly::new(q.iter().map(|c| c.numer() * (&den / c.denom())).collect()))
    }

    /// Squarefree part: self / gcd(self, self′), primitive.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() || self.degree() == 0 {
            let mut c = self.clone();
            c.make_primitive();
            return Ok(c);
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == 0 {
            let mut c = self.clone();
            c.make_primitive();
            return Ok(c);
        }
        let mut q = self.div_exact(&g)?;
        q.make_primitive();
        Ok(q)
    }

    /// Smallest power of two strictly exceeding every real root's absolute
    /// value (Cauchy bound rounded up).
    pub fn root_bound_pow2(&self) -> Rat {
        let lc = self.coeffs.last().unwrap().abs();
        let mut max = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let q = Rat::new(c.abs(), lc.clone());
            if q > max {
                max = q;
            }
        }
        let bound = Rat::one() + max;
        let mut b = Rat::one();
        let two = Rat::from_integer(Int::from(2));
        while b < bound {
            b *= two.clone();
        }
        b
    }

    /// Substitute x ↦ x + 1 (Taylor shift), exactly.
    fn taylor_shift_1(&self) -> Self {
        // synthetic division cascade (Horner/Ruffini, in place)
        let n = self.coeffs.len();
        let mut c = self.coeffs.clone();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let add = c[j + 1].clone();
                c[j] += add;
            }
        }
        UPoly::new(c)
    }

    /// coefficients of x^n · p(1/x) (reversal).
    fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        UPoly::new(c)
    }

    /// 2^n · p(x/2): maps roots x ↦ 2x (left-half zoom).
    fn stretch_left(&self) -> Self {
        let n = self.degree();
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| c * (Int::one() << (n - e)))
                .collect(),
        )
    }

    /// 2^n · p((x+1)/2): right half of (0,1) mapped to (0,1).
    fn half_shift_right(&self) -> Self {
        self.stretch_left().taylor_shift_1()
    }

    fn sign_variations(&self) -> usize {
        let mut vars = 0usize;
        let mut prev = 0i8;
        for c in &self.coeffs {
            let s = if c.is_zero() {
                0
            } else if c.is_positive() {
                1
            } else {
                -1
            };
            if s != 0 {
                if prev != 0 && s != prev {
                    vars += 1;
                }
                prev = s;
            }
        }
        vars
    }

    /// Descartes bound for the number of roots in the open interval (0,1):
    /// sign variations of (x+1)^n · p(1/(x+1)).
    fn descartes_01(&self) -> usize {
        self.reverse().taylor_shift_1().sign_variations()
    }
}

/// Isolate all distinct real roots of `p` (any nonzero integer polynomial):
/// returns disjoint closed rational intervals in increasing order, one per
/// distinct real root. Exact roots are returned as point intervals.
pub fn isolate_real_roots_upoly(p: &UPoly) -> Result<Vec<Interval>> {
    if p.is_zero() {
        return Err(Error::InvalidInput("cannot isolate roots of the zero polynomial".into()));
    }
    let sf = p.squarefree_part()?;
    if sf.degree() == 0 {
        return Ok(Vec::new());
    }
    let mut roots: Vec<Interval> = Vec::new();
    let mut q = sf.clone();
    // root at zero
    if q.coeffs[0].is_zero() {
        roots.push(Interval::point(Rat::zero()));
        let first_nonzero = q.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        q = UPoly::new(q.coeffs[first_nonzero..].to_vec());
    }
    if q.degree() >= 1 {
        let bound = q.root_bound_pow2();
        // positive roots: isolate r(x) = q(B·x) on (0,1)
        let scaled_pos = scale_arg(&q, &bound);
        let mut pos: Vec<Interval> = Vec::new();
        isolate_01(&scaled_pos, &Rat::zero(), &Rat::one(), &mut pos, 0)?;
        for iv in pos {
            roots.push(Interval::new(iv.lo * bound.clone(), iv.hi * bound.clone())?);
        }
        // negative roots via q(−x)
        let neg_poly = negate_arg(&q);
        let scaled_neg = scale_arg(&neg_poly, &bound);
        let mut neg: Vec<Interval> = Vec::new();
        isolate_01(&scaled_neg, &Rat::zero(), &Rat::one(), &mut neg, 0)?;
        for iv in neg {
            roots.push(Interval::new(-(iv.hi * bound.clone()), -(iv.lo * bound.clone()))?);
        }
    }
    roots.sort_by(|a, b| a.lo.cmp(&b.lo));
    // some enclosing intervals may have a *different* root sitting exactly
    // on an endpoint (adjacent dyadic root); move such endpoints off the
    // root so that sign bisection is valid
    fix_root_endpoints(&sf, &mut roots)?;
    // separate: shrink sign-change intervals until pairwise disjoint
    separate_intervals(&sf, &mut roots)?;
    Ok(roots)
}

/// For every non-point interval whose endpoint is itself a root of `sf`
/// (the root *inside* is strictly interior), nudge that endpoint inward
/// using Sturm counts, so both endpoints get nonzero signs.
fn fix_root_endpoints(sf: &UPoly, roots: &mut [Interval]) -> Result<()> {
    let mut chain: Option<Vec<UPoly>> = None;
    let two = Rat::from_integer(Int::from(2));
    for iv in roots.iter_mut() {
        if iv.lo == iv.hi {
            continue;
        }
        if sf.sign_at(&iv.lo) == 0 {
            let chain = chain.get_or_insert_with(|| sturm_chain(sf));
            let mut step = iv.width() / two.clone();
            loop {
                let m = &iv.lo + &step;
                if m < iv.hi && sturm_count_halfopen(chain, &iv.lo, &m) == 0 {
                    *iv = Interval::new(m, iv.hi.clone())?;
                    break;
                }
                step /= two.clone();
            }
        }
        if sf.sign_at(&iv.hi) == 0 {
            let chain = chain.get_or_insert_with(|| sturm_chain(sf));
            let mut step = iv.width() / two.clone();
            loop {
                let m = &iv.hi - &step;
                if m > iv.lo && sturm_count_halfopen(chain, &m, &iv.hi) == 1 && sf.sign_at(&m) != 0 {
                    *iv = Interval::new(iv.lo.clone(), m)?;
                    break;
                }
                step /= two.clone();
            }
        }
    }
    Ok(())
}

/// p(c·x) with c = 2^k rational: integer-preserving after clearing powers.
fn scale_arg(p: &UPoly, c: &Rat) -> UPoly {
    // p(c x) has coefficients a_e c^e; clear denominators by the lcm —
    // since c is a power of two, multiply through by denom^deg.
    let n = p.degree();
    let mut out = Vec::with_capacity(n + 1);
    for (e, a) in p.coeffs.iter().enumerate() {
        // a · c^e · denom(c)^n  =  a · numer^e · denom^(n−e)
        let num = c.numer().pow(e as u32);
        let den = c.denom().pow((n - e) as u32);
        out.push(a * num * den);
    }
    let mut u = UPoly::new(out);
    u.make_primitive();
    u
}

fn negate_arg(p: &UPoly) -> UPoly {
    UPoly::new(
        p.coeffs
            .iter()
            .enumerate()
            .map(|(e, c)| if e % 2 == 1 { -c.clone() } else { c.clone() })
            .collect(),
    )
}

/// Descartes/bisection isolation of the roots of `p` inside (0,1), reported
/// in the caller's coordinates (lo, hi). `p` must be squarefree.
fn isolate_01(p: &UPoly, lo: &Rat, hi: &Rat, out: &mut Vec<Interval>, depth: usize) -> Result<()> {
    if depth > 512 {
        return Err(Error::ResourceLimit { what: "root-isolation bisection depth".into(), limit: 512 });
    }
    let v = p.descartes_01();
    if v == 0 {
        return Ok(());
    }
    if v == 1 {
        out.push(Interval::new(lo.clone(), hi.clone())?);
        return Ok(());
    }
    let mid = (lo + hi) / Rat::from_integer(Int::from(2));
    let half = Rat::new(Int::one(), Int::from(2));
    if p.eval_rat(&half).is_zero() {
        out.push(Interval::point(mid.clone()));
    }
    isolate_01(&p.stretch_left(), lo, &mid, out, depth + 1)?;
    isolate_01(&p.half_shift_right(), &mid, hi, out, depth + 1)?;
    Ok(())
}

/// Shrink intervals (by sign bisection on the squarefree polynomial) until
/// they are pairwise disjoint. Point intervals never move.
fn separate_intervals(sf: &UPoly, roots: &mut [Interval]) -> Result<()> {
    loop {
        let mut touched = false;
        for i in 1..roots.len() {
            if roots[i - 1].hi >= roots[i].lo {
                let a = refine_step(sf, &roots[i - 1])?;
                let b = refine_step(sf, &roots[i])?;
                roots[i - 1] = a;
                roots[i] = b;
                touched = true;
            }
        }
        if !touched {
            return Ok(());
        }
    }
}

/// One bisection step on an isolating interval (point intervals returned
/// unchanged). The interval must contain exactly one simple root.
fn refine_step(sf: &UPoly, iv: &Interval) -> Result<Interval> {
    if iv.lo == iv.hi {
        return Ok(iv.clone());
    }
    let sa = sf.sign_at(&iv.lo);
    let mid = iv.midpoint();
    let sm = sf.sign_at(&mid);
    if sm == 0 {
        return Ok(Interval::point(mid));
    }
    if sa != 0 && sm != sa {
        Interval::new(iv.lo.clone(), mid)
    } else {
        Interval::new(mid, iv.hi.clone())
    }
}

/// Refine an isolating interval until its width is at most `width`.
pub fn refine_to_width(sf: &UPoly, iv: &Interval, width: &Rat) -> Result<Interval> {
    let mut cur = iv.clone();
    while cur.width() > *width {
        cur = refine_step(sf, &cur)?;
    }
    Ok(cur)
}

/// Isolate the distinct real roots of a univariate polynomial (possibly a
/// constant, never zero): disjoint closed intervals in increasing order.
pub fn isolate_univariate_roots(p: &Poly) -> Result<Vec<Interval>> {
    if p.is_zero() {
        return Err(Error::InvalidInput("cannot isolate roots of the zero polynomial".into()));
    }
    let (u, _) = UPoly::from_poly(p)?;
    if u.degree() == 0 {
        return Ok(Vec::new());
    }
    isolate_real_roots_upoly(&u)
}

/// Same, then refine every interval to at most the requested width.
pub fn isolate_univariate_roots_to_width(p: &Poly, width: &Rat) -> Result<Vec<Interval>> {
    if width.is_zero() || width.is_negative() {
        return Err(Error::InvalidInput("requested interval width must be positive".into()));
    }
    let (u, _) = UPoly::from_poly(p)?;
    if u.is_zero() {
        return Err(Error::InvalidInput("cannot isolate roots of the zero polynomial".into()));
    }
    if u.degree() == 0 {
        return Ok(Vec::new());
    }
    let sf = u.squarefree_part()?;
    let rough = isolate_real_roots_upoly(&u)?;
    rough.iter().map(|iv| refine_to_width(&sf, iv, width)).collect()
}

// ---------------------------------------------------------------------------
// Sturm oracle
// ---------------------------------------------------------------------------

/// Number of distinct real roots by Sturm's theorem — an independent oracle
/// used by the test suites to validate the Descartes isolation and the
/// trace-form real counts.
pub fn sturm_distinct_real_roots(p: &Poly) -> Result<usize> {
    let (u, _) = UPoly::from_poly(p)?;
    if u.is_zero() {
        return Err(Error::InvalidInput("Sturm count of the zero polynomial".into()));
    }
    if u.degree() == 0 {
        return Ok(0);
    }
    let sf = u.squarefree_part()?;
    if sf.degree() == 0 {
        return Ok(0);
    }
    let chain = sturm_chain(&sf);
    let bound = sf.root_bound_pow2();
    let lo = -bound.clone();
    Ok(sturm_variations(&chain, &lo) - sturm_variations(&chain, &bound))
}

fn sturm_chain(p: &UPoly) -> Vec<UPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let len = chain.len();
        // the chain needs −(a mod b) up to a positive factor; the signed
        // pseudo-remainder reports whether its factor already flipped sign
        let (r, factor_negative) = chain[len - 2].prem_signed(&chain[len - 1]);
        if r.is_zero() {
            break;
        }
        let mut rr = if factor_negative {
            r
        } else {
            UPoly::new(r.coeffs.iter().map(|c| -c.clone()).collect())
        };
        rr.make_primitive_keep_sign();
        chain.push(rr);
    }
    chain
}

/// Number of roots of the (squarefree) chain head in the half-open
/// interval (a, b], by Sturm's theorem.
fn sturm_count_halfopen(chain: &[UPoly], a: &Rat, b: &Rat) -> usize {
    sturm_variations(chain, a) - sturm_variations(chain, b)
}

impl UPoly {
    /// Remove the content but keep the sign (used by the Sturm chain, where
    /// sign normalization would break the theorem).
    fn make_primitive_keep_sign(&mut self) {
        if self.coeffs.is_empty() {
            return;
        }
        let mut g = Int::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                return;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for c in self.coeffs.iter_mut() {
                *c = &*c / &g;
            }
        }
    }
}

fn sturm_variations(chain: &[UPoly], x: &Rat) -> usize {
    let mut vars = 0usize;
    let mut prev = 0i8;
    for p in chain {
        let s = p.sign_at(x);
        if s != 0 {
            if prev != 0 && s != prev {
                vars += 1;
            }
            prev = s;
        }
    }
    vars
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{parse_poly, Ring};
    use crate::rat;

    fn up(coeffs: &[i64]) -> UPoly {
        UPoly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    #[test]
    fn isolates_sqrt2() {
        let r = Ring::new(&["x"]).unwrap();
        let p = parse_poly("x^2 - 2", &r).unwrap();
        let roots = isolate_univariate_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots[0].hi < roots[1].lo);
        let w = rat(1, 1 << 20);
        let tight = isolate_univariate_roots_to_width(&p, &w).unwrap();
        for iv in &tight {
            assert!(iv.width() <= w);
        }
        // √2 ≈ 1.41421356...
        let hi = &tight[1];
        assert!(hi.contains(&rat(141_421_356, 100_000_000)) || hi.lo > rat(141_421_35, 10_000_000));
    }

    #[test]
    fn no_real_roots() {
        let r = Ring::new(&["x"]).unwrap();
        let p = parse_poly("x^2 + 1", &r).unwrap();
        assert!(isolate_univariate_roots(&p).unwrap().is_empty());
        assert_eq!(sturm_distinct_real_roots(&p).unwrap(), 0);
    }

    #[test]
    fn three_distinct_roots() {
        let r = Ring::new(&["x"]).unwrap();
        let p = parse_poly("(x-1)*(x-2)*(x-3)", &r).unwrap();
        let roots = isolate_univariate_roots(&p).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(sturm_distinct_real_roots(&p).unwrap(), 3);
        for (iv, target) in roots.iter().zip([1i64, 2, 3]) {
            assert!(iv.contains(&crate::rint(target)), "{iv} should contain {target}");
        }
        // pairwise disjoint
        for i in 1..roots.len() {
            assert!(roots[i - 1].hi < roots[i].lo);
        }
    }

    #[test]
    fn repeated_roots_counted_once() {
        let r = Ring::new(&["x"]).unwrap();
        let p = parse_poly("(x-1)^3*(x+2)^2", &r).unwrap();
        let roots = isolate_univariate_roots(&p).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(sturm_distinct_real_roots(&p).unwrap(), 2);
    }

    #[test]
    fn root_at_zero_and_rational_roots() {
        let r = Ring::new(&["x"]).unwrap();
        let p = parse_poly("x*(2*x-1)*(x+3)", &r).unwrap();
        let roots = isolate_univariate_roots(&p).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().any(|iv| iv.contains(&Rat::zero())));
        assert!(roots.iter().any(|iv| iv.contains(&rat(1, 2))));
        assert!(roots.iter().any(|iv| iv.contains(&crate::rint(-3))));
    }

    #[test]
    fn dyadic_midpoint_roots() {
        // roots exactly at dyadic bisection points of the search tree
        let r = Ring::new(&["x"]).unwrap();
        let p = parse_poly("(x-1/2)*(x-1/4)*(x-3/4)", &r).unwrap();
        let roots = isolate_univariate_roots(&p).unwrap();
        assert_eq!(roots.len(), 3);
        for target in [rat(1, 4), rat(1, 2), rat(3, 4)] {
            assert_eq!(roots.iter().filter(|iv| iv.contains(&target)).count(), 1);
        }
    }

    #[test]
    fn agrees_with_sturm_on_seeded_random_polys() {
        use rand::{Rng, SeedableRng};
        let r = Ring::new(&["x"]).unwrap();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(0xfeed);
        for _ in 0..60 {
            let deg = rng.gen_range(1..=8);
            let mut s = String::new();
            for e in (0..=deg).rev() {
                let c: i64 = rng.gen_range(-9..=9);
                if c == 0 {
                    continue;
                }
                if !s.is_empty() {
                    s.push_str(" + ");
                }
                s.push_str(&format!("{c}*x^{e}"));
            }
            if s.is_empty() {
                continue;
            }
            let p = parse_poly(&s, &r).unwrap();
            if p.is_constant() {
                continue;
            }
            let isolated = isolate_univariate_roots(&p).unwrap().len();
            let sturm = sturm_distinct_real_roots(&p).unwrap();
            assert_eq!(isolated, sturm, "mismatch on {s}");
        }
    }

    #[test]
    fn squarefree_part_examples() {
        let p = up(&[0, 0, 1]); // x^2
        assert_eq!(p.squarefree_part().unwrap(), up(&[0, 1]));
        let q = up(&[1, 2, 1]); // (x+1)^2
        assert_eq!(q.squarefree_part().unwrap(), up(&[1, 1]));
        let r = up(&[-2, 0, 1]); // x^2-2 already squarefree
        assert_eq!(r.squarefree_part().unwrap(), up(&[-2, 0, 1]));
    }

    #[test]
    fn gcd_and_exact_division() {
        let a = up(&[-1, 0, 1]); // x^2 - 1
        let b = up(&[1, 1]); // x + 1
        assert_eq!(a.gcd(&b), up(&[1, 1]));
        assert_eq!(a.div_exact(&b).unwrap(), up(&[-1, 1]));
        assert!(up(&[1, 1, 1]).div_exact(&b).is_err());
    }

    #[test]
    fn refinement_keeps_root() {
        let r = Ring::new(&["x"]).unwrap();
        let p = parse_poly("x^3 - x - 1", &r).unwrap(); // one real root ≈ 1.3247
        let (u, _) = UPoly::from_poly(&p).unwrap();
        let sf = u.squarefree_part().unwrap();
        let roots = isolate_univariate_roots(&p).unwrap();
        assert_eq!(roots.len(), 1);
        let tight = refine_to_width(&sf, &roots[0], &rat(1, 1 << 30)).unwrap();
        assert!(tight.width() <= rat(1, 1 << 30));
        assert!(tight.contains(&rat(1_324_717_957, 1_000_000_000)));
    }

    #[test]
    fn multivariate_input_rejected() {
        let r = Ring::new(&["x", "y"]).unwrap();
        let p = parse_poly("x*y - 1", &r).unwrap();
        assert!(isolate_univariate_roots(&p).is_err());
    }
}
