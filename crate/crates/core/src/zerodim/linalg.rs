//! Exact rational linear algebra for quotient-ring computations:
//! multiplication matrices, Krylov-style annihilator polynomials (exact
//! coordinate eliminants), characteristic polynomials, and the signature
//! of symmetric matrices by congruence diagonalization.

use crate::error::{Error, Result};
use crate::groebner::{normal_form, quotient_basis, GroebnerBasis};
use crate::polyring::{Monomial, Polynomial};
use crate::{Poly, Rat};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Dense rational matrix, row-major.
pub type QMat = Vec<Vec<Rat>>;

pub fn mat_vec(m: &QMat, v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| {
            let mut acc = Rat::zero();
            for (a, b) in row.iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
        .collect()
}

pub fn mat_mul(a: &QMat, b: &QMat) -> QMat {
    let n = a.len();
    let k = b.len();
    let m = if k > 0 { b[0].len() } else { 0 };
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for (l, brow) in b.iter().enumerate() {
            let ail = &a[i][l];
            if ail.is_zero() {
                continue;
            }
            for j in 0..m {
                if !brow[j].is_zero() {
                    out[i][j] += ail * &brow[j];
                }
            }
        }
    }
    out
}

/// Expand the normal form of `p` in the quotient basis `basis` (all of the
/// normal form's monomials must be standard monomials).
pub fn nf_coordinates(p: &Poly, gb: &GroebnerBasis, basis: &[Monomial]) -> Result<Vec<Rat>> {
    let nf = normal_form(p, gb)?;
    let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut v = vec![Rat::zero(); basis.len()];
    for (m, c) in nf.terms() {
        match index.get(m) {
            Some(&i) => v[i] = c.clone(),
            None => {
                return Err(Error::InvalidInput(
                    "normal form has a monomial outside the quotient basis".into(),
                ))
            }
        }
    }
    Ok(v)
}

/// Matrix of multiplication by x_var on the quotient ring, in the standard
/// monomial basis: column j holds the coordinates of normal_form(x_var·b_j).
pub fn multiplication_matrix(gb: &GroebnerBasis, var: usize) -> Result<QMat> {
    let ring = gb.ring().clone();
    if var >= ring.nvars() {
        return Err(Error::VarIndex { index: var, nvars: ring.nvars() });
    }
    let x = Polynomial::var(&ring, var)?;
    multiplication_matrix_for_poly(gb, &x)
}

/// Matrix of multiplication by an arbitrary polynomial on the quotient.
pub fn multiplication_matrix_for_poly(gb: &GroebnerBasis, h: &Poly) -> Result<QMat> {
    let basis = quotient_basis(gb)?;
    let d = basis.len();
    let ring = gb.ring().clone();
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(d);
    for b in &basis {
        let bp = Polynomial::term(&ring, b.clone(), Rat::one());
        let prod = h.checked_mul(&bp)?;
        cols.push(nf_coordinates(&prod, gb, &basis)?);
    }
    // transpose columns into a row-major matrix
    let mut m = vec![vec![Rat::zero(); d]; d];
    for (j, col) in cols.iter().enumerate() {
        for (i, c) in col.iter().enumerate() {
            m[i][j] = c.clone();
        }
    }
    Ok(m)
}

/// Monic annihilator of `start` under `m`: the lowest-degree monic
/// polynomial q with q(m)·start = 0, found by Krylov iteration with exact
/// Gaussian elimination. Coefficients returned ascending; always
/// terminates within dim+1 steps.
///
/// Applied to the coordinate vector of 1 in a quotient ring and the
/// multiplication matrix of a polynomial h, this yields the exact generator
/// of { q : q(h) ∈ I } — the ideal-theoretic eliminant of h.
pub fn vector_annihilator(m: &QMat, start: &[Rat]) -> Vec<Rat> {
    let n = start.len();
    // fully reduced echelon rows: (vector, combination over Krylov powers);
    // every row is zero at every other row's pivot position
    let mut ech: Vec<(Vec<Rat>, Vec<Rat>)> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    let mut v = start.to_vec();
    let mut power = 0usize;
    loop {
        // express v over the echelon rows; the residual drives elimination
        let mut combo = vec![Rat::zero(); n + 2];
        combo[power] = Rat::one();
        let mut res = v.clone();
        for (row, (re, rc)) in ech.iter().enumerate() {
            let p = pivots[row];
            if res[p].is_zero() {
                continue;
            }
            let f = res[p].clone();
            for (a, b) in res.iter_mut().zip(re) {
                *a -= f.clone() * b;
            }
            for (a, b) in combo.iter_mut().zip(rc) {
                *a -= f.clone() * b;
            }
        }
        match res.iter().position(|c| !c.is_zero()) {
            None => {
                // m^power·start − Σ prev ≡ 0: combo is the monic annihilator
                combo.truncate(power + 1);
                return combo;
            }
            Some(p) => {
                let inv = Rat::one() / res[p].clone();
                let re: Vec<Rat> = res.iter().map(|c| c * &inv).collect();
                let rc: Vec<Rat> = combo.iter().map(|c| c * &inv).collect();
                // back-eliminate the new pivot from the older rows to keep
                // the echelon fully reduced
                for (row, (ore, orc)) in ech.iter_mut().enumerate() {
                    debug_assert_ne!(pivots[row], p);
                    if ore[p].is_zero() {
                        continue;
                    }
                    let f = ore[p].clone();
                    for (a, b) in ore.iter_mut().zip(&re) {
                        *a -= f.clone() * b;
                    }
                    for (a, b) in orc.iter_mut().zip(&rc) {
                        *a -= f.clone() * b;
                    }
                }
                ech.push((re, rc));
                pivots.push(p);
            }
        }
        assert!(power <= n, "annihilator iteration exceeded the dimension bound");
        v = mat_vec(m, &v);
        power += 1;
    }
}

/// Characteristic polynomial det(λI − A) by the Faddeev–LeVerrier
/// recurrence, exact over the rationals. Coefficients ascending, leading
/// coefficient 1. O(n⁴); intended for small matrices and as a test oracle.
pub fn charpoly(a: &QMat) -> Vec<Rat> {
    let n = a.len();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut m: QMat = vec![vec![Rat::zero(); n]; n]; // M_0 = 0
    let mut c = Rat::one(); // c_n = 1
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I
        let mut am = if k == 1 { vec![vec![Rat::zero(); n]; n] } else { mat_mul(a, &m) };
        for (i, row) in am.iter_mut().enumerate() {
            row[i] += c.clone();
        }
        m = am;
        let prod = mat_mul(a, &m);
        let mut tr = Rat::zero();
        for (i, row) in prod.iter().enumerate() {
            tr += row[i].clone();
        }
        c = -tr / Rat::from_integer(crate::Int::from(k));
        coeffs[n - k] = c.clone();
    }
    coeffs
}

/// (rank, positive count, negative count) of a symmetric rational matrix,
/// by exact congruence diagonalization (symmetric Gaussian elimination).
/// The signature is positive − negative.
pub fn symmetric_inertia(a: &QMat) -> (usize, usize, usize) {
    let n = a.len();
    let mut m = a.to_vec();
    debug_assert!(is_symmetric(&m), "inertia requires a symmetric matrix");
    let mut pos = 0usize;
    let mut neg = 0usize;
    for k in 0..n {
        if m[k][k].is_zero() {
            // look for a nonzero diagonal entry to swap in
            if let Some(i) = (k + 1..n).find(|&i| !m[i][i].is_zero()) {
                swap_sym(&mut m, k, i);
            } else if let Some(i) = (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                // all remaining diagonal entries vanish: make one by the
                // congruence  row_k += row_i, col_k += col_i
                // (2·m[i][k] ≠ 0 in characteristic zero)
                add_row_col(&mut m, k, i);
            } else {
                continue; // column (and row) k is zero from k on
            }
        }
        let pivot = m[k][k].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = m[i][k].clone() / pivot.clone();
            for j in k..n {
                let sub = f.clone() * m[k][j].clone();
                m[i][j] -= sub;
            }
        }
        // the implicit mirrored column operations zero out row k and leave
        // the trailing block exactly symmetric; record that explicitly
        for j in k + 1..n {
            m[k][j] = Rat::zero();
        }
    }
    (pos + neg, pos, neg)
}

fn is_symmetric(m: &QMat) -> bool {
    let n = m.len();
    for i in 0..n {
        for j in 0..i {
            if m[i][j] != m[j][i] {
                return false;
            }
        }
    }
    true
}

fn swap_sym(m: &mut QMat, a: usize, b: usize) {
    m.swap(a, b);
    for row in m.iter_mut() {
        row.swap(a, b);
    }
}

fn add_row_col(m: &mut QMat, k: usize, i: usize) {
    let n = m.len();
    for j in 0..n {
        let add = m[i][j].clone();
        m[k][j] += add;
    }
    for row in m.iter_mut().take(n) {
        let add = row[i].clone();
        row[k] += add;
    }
}

/// Count of strictly positive / strictly negative eigenvalues from the
/// characteristic polynomial of a symmetric matrix via Descartes' rule
/// (exact because all roots are real). Test oracle for symmetric_inertia.
pub fn inertia_via_charpoly(a: &QMat) -> (usize, usize, usize) {
    let cp = charpoly(a);
    let signs: Vec<i8> = cp
        .iter()
        .map(|c| {
            if c.is_zero() {
                0
            } else if c.is_positive() {
                1
            } else {
                -1
            }
        })
        .collect();
    let variations = |s: &[i8]| {
        let mut v = 0usize;
        let mut prev = 0i8;
        for &x in s {
            if x != 0 {
                if prev != 0 && x != prev {
                    v += 1;
                }
                prev = x;
            }
        }
        v
    };
    let pos = variations(&signs);
    let alt: Vec<i8> = signs
        .iter()
        .enumerate()
        .map(|(e, &s)| if e % 2 == 1 { -s } else { s })
        .collect();
    let neg = variations(&alt);
    (pos + neg, pos, neg)
}
