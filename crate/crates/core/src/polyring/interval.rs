//! Exact rational interval arithmetic. Intervals are closed, with rational
//! endpoints, so every enclosure computed here is mathematically rigorous —
//! no rounding occurs anywhere.

use super::poly::Polynomial;
use crate::error::{Error, Result};
use crate::Rat;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidInput(format!("interval endpoints out of order: [{lo}, {hi}]")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(v: Rat) -> Self {
        Interval { lo: v.clone(), hi: v }
    }

    pub fn zero() -> Self {
        Self::point(Rat::zero())
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(2.into())
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn contains(&self, v: &Rat) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Self) -> Self {
        Interval {
            lo: if self.lo <= other.lo { self.lo.clone() } else { other.lo.clone() },
            hi: if self.hi >= other.hi { self.hi.clone() } else { other.hi.clone() },
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Interval { lo: &self.lo + &other.lo, hi: &self.hi + &other.hi }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Interval { lo: &self.lo - &other.hi, hi: &self.hi - &other.lo }
    }

    pub fn neg(&self) -> Self {
        Interval { lo: -self.hi.clone(), hi: -self.lo.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let candidates = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = candidates[0].clone();
        let mut hi = candidates[0].clone();
        for c in &candidates[1..] {
            if *c < lo {
                lo = c.clone();
            }
            if *c > hi {
                hi = c.clone();
            }
        }
        Interval { lo, hi }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_negative() {
            Interval { lo: &self.hi * c, hi: &self.lo * c }
        } else {
            Interval { lo: &self.lo * c, hi: &self.hi * c }
        }
    }

    /// Tight power: even powers of straddling intervals start at zero.
    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::point(Rat::one());
        }
        let pl = pow_rat(&self.lo, e);
        let ph = pow_rat(&self.hi, e);
        if e % 2 == 1 {
            Interval { lo: pl, hi: ph }
        } else {
            let (mut lo, hi) = if pl <= ph { (pl.clone(), ph) } else { (ph, pl) };
            if self.contains_zero() {
                lo = Rat::zero();
            }
            Interval { lo, hi }
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (super::poly::rat_to_f64(&self.lo), super::poly::rat_to_f64(&self.hi))
    }

    pub fn midpoint_f64(&self) -> f64 {
        super::poly::rat_to_f64(&self.midpoint())
    }
}

fn pow_rat(r: &Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    let mut base = r.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base.clone();
        }
        e >>= 1;
        if e > 0 {
            base = base.clone() * base;
        }
    }
    acc
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Evaluate a polynomial over a box, term by term. Exact and rigorous, not
/// the tightest possible enclosure (no Horner re-association), which is fine
/// for the root-certification uses in this crate.
pub fn eval_poly_interval(p: &Polynomial<Rat>, box_: &[Interval]) -> Result<Interval> {
    if box_.len() != p.ring().nvars() {
        return Err(Error::DimensionMismatch { expected: p.ring().nvars(), got: box_.len() });
    }
    let mut acc = Interval::zero();
    for (m, c) in p.terms() {
        let mut t = Interval::point(c.clone());
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = t.mul(&box_[i].pow(e));
            }
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}
