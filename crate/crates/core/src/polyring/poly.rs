use super::monomial::{Monomial, MonomialOrder};
use super::ring::Ring;
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Coefficient requirements for the generic polynomial layer: a commutative
/// ring with exact equality, negation and display. Satisfied by the
/// arbitrary-precision rationals (the type every exact computation in this
/// crate uses) and by `f64` (used only for fast approximate residual
/// evaluation in the connectivity harness).
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Send
    + Sync
    + 'static
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Send
        + Sync
        + 'static
{
}

/// Sparse multivariate polynomial: a map from monomials to nonzero
/// coefficients. Terms are stored under a canonical key order so that
/// iteration is deterministic independently of construction history.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<C: Coeff> {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: C) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ring.nvars()), c);
        }
        p
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Result<Self> {
        if index >= ring.nvars() {
            return Err(Error::VarIndex { index, nvars: ring.nvars() });
        }
        let mut p = Self::zero(ring);
        p.terms.insert(Monomial::var(ring.nvars(), index), C::one());
        Ok(p)
    }

    pub fn term(ring: &Arc<Ring>, mono: Monomial, c: C) -> Self {
        debug_assert_eq!(mono.0.len(), ring.nvars());
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    pub fn from_terms(ring: &Arc<Ring>, it: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn coeff(&self, mono: &Monomial) -> C {
        self.terms.get(mono).cloned().unwrap_or_else(C::zero)
    }

    /// Constant coefficient.
    pub fn constant_term(&self) -> C {
        self.coeff(&Monomial::one(self.ring.nvars()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    /// Variables that actually occur.
    pub fn support_vars(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        let mut used = vec![false; n];
        for m in self.terms.keys() {
            for i in m.support() {
                used[i] = true;
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    pub fn add_term(&mut self, mono: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.to_string(),
                right: other.ring.to_string(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = Self::zero(&self.ring);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.clone() * c.clone());
        }
        out
    }

    pub fn mul_term(&self, mono: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = Self::zero(&self.ring);
        for (m, a) in &self.terms {
            out.add_term(m.mul(mono), a.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// Exact formal partial derivative. Needs a coefficient embedding of the
    /// integers, supplied by repeated addition to stay generic.
    pub fn derivative(&self, var: usize) -> Result<Self> {
        if var >= self.ring.nvars() {
            return Err(Error::VarIndex { index: var, nvars: self.ring.nvars() });
        }
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            // c * e via doubling
            let mut mult = C::zero();
            let mut add = c.clone();
            let mut k = e;
            while k > 0 {
                if k & 1 == 1 {
                    mult = mult + add.clone();
                }
                k >>= 1;
                if k > 0 {
                    add = add.clone() + add;
                }
            }
            out.add_term(m2, mult);
        }
        Ok(out)
    }

    /// Evaluate at a point, exactly in the coefficient ring.
    pub fn evaluate(&self, point: &[C]) -> Result<C> {
        if point.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch { expected: self.ring.nvars(), got: point.len() });
        }
        // cache powers per variable up to the degree that occurs
        let n = self.ring.nvars();
        let mut pows: Vec<Vec<C>> = (0..n).map(|i| vec![C::one(), point[i].clone()]).collect();
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..n {
                let e = m.0[i] as usize;
                if e == 0 {
                    continue;
                }
                while pows[i].len() <= e {
                    let last = pows[i].last().unwrap().clone();
                    pows[i].push(last * point[i].clone());
                }
                t = t * pows[i][e].clone();
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Substitute a polynomial (possibly in another ring) for every variable
    /// simultaneously: the result lives in the replacements' common ring.
    pub fn substitute_all<D: Coeff>(
        &self,
        repl: &[Polynomial<D>],
        embed: impl Fn(&C) -> D,
    ) -> Result<Polynomial<D>> {
        if repl.len() != self.ring.nvars() {
            return Err(Error::DimensionMismatch { expected: self.ring.nvars(), got: repl.len() });
        }
        let target = repl
            .first()
            .map(|p| p.ring().clone())
            .ok_or_else(|| Error::InvalidInput("substitution needs at least one variable".into()))?;
        for r in repl {
            if *r.ring() != target {
                return Err(Error::RingMismatch {
                    left: target.to_string(),
                    right: r.ring().to_string(),
                });
            }
        }
        let mut out = Polynomial::<D>::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, embed(c));
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.checked_mul(&repl[i].pow(e))?;
                }
            }
            out = out.checked_add(&t)?;
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Coeff>(&self, ring: &Arc<Ring>, f: impl Fn(&C) -> D) -> Polynomial<D> {
        debug_assert_eq!(ring.nvars(), self.ring.nvars());
        let mut out = Polynomial::zero(ring);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Move this polynomial into `target`, sending variable `i` of the
    /// source ring to variable `var_map[i]` of the target.
    pub fn map_vars(&self, target: &Arc<Ring>, var_map: &[usize]) -> Result<Self> {
        let tn = target.nvars();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0u32; tn];
            for (i, &exp) in m.0.iter().enumerate() {
                if exp > 0 {
                    let j = *var_map.get(i).ok_or(Error::VarIndex { index: i, nvars: var_map.len() })?;
                    if j >= tn {
                        return Err(Error::VarIndex { index: j, nvars: tn });
                    }
                    e[j] += exp;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Leading (monomial, coefficient) under `order`; `None` when zero.
    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted descending under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Monomial, C)> {
        let mut v: Vec<(Monomial, C)> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }
}

impl<C: Coeff> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.checked_add(rhs).expect("ring mismatch in +")
    }
}

impl<C: Coeff> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.checked_sub(rhs).expect("ring mismatch in -")
    }
}

impl<C: Coeff> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.checked_mul(rhs).expect("ring mismatch in *")
    }
}

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        let mut out = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }
}

/// Canonical text form: terms descending under graded reverse lexicographic
/// order, coefficients printed exactly, `*` between coefficient and
/// variables, `^` for powers. Parsing this string recovers the polynomial.
impl<C: Coeff> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms = self.sorted_terms(&MonomialOrder::GrevLex);
        for (k, (m, c)) in terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(self.ring.var_name(i).to_string());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.var_name(i), e));
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

// ---- rational-specific helpers ----

use crate::{Int, Rat};
use num_traits::Signed;

impl Polynomial<Rat> {
    /// Divide by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading(order) {
            None => self.clone(),
            Some((_, lc)) => {
                let inv = Rat::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Largest positive rational `c` such that `self / c` has coprime
    /// integer coefficients; sign fixed so the `order`-leading coefficient
    /// is positive. Returns the normalized polynomial.
    pub fn primitive_part(&self, order: &MonomialOrder) -> Self {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let mut den_lcm = Int::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = Int::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let mut factor = Rat::new(num_gcd, den_lcm);
        if let Some((_, lc)) = self.leading(order) {
            if lc.is_negative() {
                factor = -factor;
            }
        }
        let inv = Rat::one() / factor;
        self.scale(&inv)
    }

    pub fn to_f64(&self) -> Polynomial<f64> {
        self.map_coeffs(&self.ring, rat_to_f64)
    }
}

pub(crate) fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or_else(|| {
        // fall back to a quotient of clamped parts for huge entries
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;
    use crate::{rat, rint, Poly};

    fn ring3() -> Arc<Ring> {
        Ring::new(&["x1", "x2", "x3"]).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let r = Ring::new(&["x"]).unwrap();
        let x = Poly::var(&r, 0).unwrap();
        let one = Poly::one(&r);
        let prod = &(&x + &one) * &(&x - &one);
        let expect = &(&x * &x) - &one;
        assert_eq!(prod, expect);
    }

    #[test]
    fn binomial_square() {
        let r = ring3();
        let x1 = Poly::var(&r, 0).unwrap();
        let one = Poly::one(&r);
        let sq = (&x1 - &one).pow(2);
        let expect = parse_poly("x1^2 - 2*x1 + 1", &r).unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn additive_inverse_is_zero() {
        let r = ring3();
        let p = parse_poly("3*x1^2*x2 - x3 + 7", &r).unwrap();
        assert!((&p + &(-&p)).is_zero());
    }

    #[test]
    fn derivative_power_rule() {
        let r = ring3();
        let g = parse_poly("x1^3+x2^3+x3^3-x1-x2-x3-1", &r).unwrap();
        assert_eq!(g.derivative(0).unwrap(), parse_poly("3*x1^2-1", &r).unwrap());
        let c = Poly::constant(&r, rint(42));
        assert!(c.derivative(1).unwrap().is_zero());
        let phi = parse_poly("(x1-1)^2+x2^2+x3^2", &r).unwrap();
        assert_eq!(phi.derivative(0).unwrap(), parse_poly("2*x1-2", &r).unwrap());
    }

    #[test]
    fn product_rule_on_random_smalls() {
        let r = ring3();
        let ps = [
            parse_poly("x1*x2 - 3*x3 + 1", &r).unwrap(),
            parse_poly("x2^2 + x1 - 5", &r).unwrap(),
            parse_poly("x3^3 - x1*x3", &r).unwrap(),
        ];
        for a in &ps {
            for b in &ps {
                for v in 0..3 {
                    let lhs = (a * b).derivative(v).unwrap();
                    let rhs = &(&a.derivative(v).unwrap() * b) + &(a * &b.derivative(v).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn evaluate_point_on_sphere() {
        let r = ring3();
        let s = parse_poly("x1^2+x2^2+x3^2-1", &r).unwrap();
        let v = s.evaluate(&[rint(1), rint(0), rint(0)]).unwrap();
        assert!(v.is_zero());
        let g = parse_poly("x1^3+x2^3+x3^3-x1-x2-x3-1", &r).unwrap();
        assert_eq!(g.evaluate(&[rint(1), rint(1), rint(1)]).unwrap(), rint(-1));
    }

    #[test]
    fn ring_axioms_on_samples() {
        let r = ring3();
        let ps = [
            parse_poly("x1 - x2*x3", &r).unwrap(),
            parse_poly("2*x2^2 + x3 - 1", &r).unwrap(),
            parse_poly("x1*x2*x3 - 7", &r).unwrap(),
        ];
        for a in &ps {
            for b in &ps {
                assert_eq!(&(a * b), &(b * a));
                for c in &ps {
                    assert_eq!(&(a * b) * c, a * &(b * c));
                    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
                    assert_eq!(&(a + b) + c, a + &(b + c));
                }
            }
        }
    }

    #[test]
    fn display_roundtrip() {
        let r = ring3();
        let samples = [
            "x1^3+x2^3+x3^3-x1-x2-x3-1",
            "0",
            "-x1 + 1/2",
            "5",
            "-3/4*x1^2*x2 + x3 - 2",
        ];
        for s in samples {
            let p = parse_poly(s, &r).unwrap();
            let q = parse_poly(&p.to_string(), &r).unwrap();
            assert_eq!(p, q, "roundtrip failed for {s}");
        }
    }

    #[test]
    fn primitive_part_normalizes() {
        let r = ring3();
        let p = parse_poly("2/3*x1 - 4/6", &r).unwrap();
        let prim = p.primitive_part(&MonomialOrder::GrevLex);
        assert_eq!(prim, parse_poly("x1 - 1", &r).unwrap());
        let q = parse_poly("-2*x1 + 4", &r).unwrap();
        assert_eq!(q.primitive_part(&MonomialOrder::GrevLex), parse_poly("x1 - 2", &r).unwrap());
    }

    #[test]
    fn monic_under_order() {
        let r = ring3();
        let p = parse_poly("3*x1^2 - 6*x2", &r).unwrap();
        let m = p.monic(&MonomialOrder::GrevLex);
        assert_eq!(m, parse_poly("x1^2 - 2*x2", &r).unwrap());
    }

    #[test]
    fn ring_mismatch_rejected() {
        let r1 = ring3();
        let r2 = Ring::new(&["a", "b"]).unwrap();
        let p = Poly::one(&r1);
        let q = Poly::one(&r2);
        assert!(p.checked_add(&q).is_err());
    }

    #[test]
    fn substitute_line() {
        // restrict x1^2+x2^2-1 to the line (q1+t, q2+2t): exact univariate
        let r2 = Ring::new(&["x1", "x2"]).unwrap();
        let circle = parse_poly("x1^2+x2^2-1", &r2).unwrap();
        let rt = Ring::new(&["s"]).unwrap();
        let t = Poly::var(&rt, 0).unwrap();
        let l1 = &Poly::constant(&rt, rat(1, 2)) + &t;
        let l2 = t.scale(&rint(2));
        let u = circle.substitute_all(&[l1, l2], |c| c.clone()).unwrap();
        // (1/2+t)^2 + 4t^2 - 1 = 5t^2 + t - 3/4
        assert_eq!(u, parse_poly("5*s^2 + s - 3/4", &rt).unwrap());
    }
}
