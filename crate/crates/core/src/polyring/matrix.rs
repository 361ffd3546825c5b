//! Matrices with polynomial entries, and exact determinants.
//!
//! Two determinant algorithms are provided and cross-checked in tests:
//! cofactor (Laplace) expansion, good for tiny matrices, and fraction-free
//! Bareiss elimination, whose intermediate entries stay polynomial (every
//! division is exact) and which scales much better in size and degree.

use super::monomial::MonomialOrder;
use super::poly::{Coeff, Polynomial};
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::Rat;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
pub struct PolyMatrix<C: Coeff> {
    ring: Arc<Ring>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<C>>, // row-major
}

impl<C: Coeff> PolyMatrix<C> {
    pub fn from_rows(ring: &Arc<Ring>, rows: Vec<Vec<Polynomial<C>>>) -> Result<Self> {
        let nr = rows.len();
        let nc = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut entries = Vec::with_capacity(nr * nc);
        for row in rows {
            if row.len() != nc {
                return Err(Error::DimensionMismatch { expected: nc, got: row.len() });
            }
            for p in row {
                if p.ring() != ring {
                    return Err(Error::RingMismatch {
                        left: ring.to_string(),
                        right: p.ring().to_string(),
                    });
                }
                entries.push(p);
            }
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: nr, cols: nc, entries })
    }

    pub fn zero(ring: &Arc<Ring>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<C> {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial<C>) {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        debug_assert_eq!(p.ring(), &self.ring);
        self.entries[i * self.cols + j] = p;
    }

    /// Submatrix on the given (strictly increasing) row/column indices.
    pub fn submatrix(&self, row_ix: &[usize], col_ix: &[usize]) -> Result<Self> {
        let mut rows = Vec::with_capacity(row_ix.len());
        for &i in row_ix {
            if i >= self.rows {
                return Err(Error::VarIndex { index: i, nvars: self.rows });
            }
            let mut row = Vec::with_capacity(col_ix.len());
            for &j in col_ix {
                if j >= self.cols {
                    return Err(Error::VarIndex { index: j, nvars: self.cols });
                }
                row.push(self.get(i, j).clone());
            }
            rows.push(row);
        }
        Self::from_rows(&self.ring, rows)
    }

    /// Laplace (cofactor) expansion along the first row. Exponential in the
    /// size; kept public as an independent oracle for the Bareiss routine.
    pub fn determinant_cofactor(&self) -> Result<Polynomial<C>> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        Ok(self.det_cofactor_rec(&(0..self.rows).collect::<Vec<_>>(), &(0..self.cols).collect::<Vec<_>>()))
    }

    fn det_cofactor_rec(&self, row_ix: &[usize], col_ix: &[usize]) -> Polynomial<C> {
        let n = row_ix.len();
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        if n == 1 {
            return self.get(row_ix[0], col_ix[0]).clone();
        }
        if n == 2 {
            let a = self.get(row_ix[0], col_ix[0]);
            let b = self.get(row_ix[0], col_ix[1]);
            let c = self.get(row_ix[1], col_ix[0]);
            let d = self.get(row_ix[1], col_ix[1]);
            return &(a * d) - &(b * c);
        }
        let mut acc = Polynomial::zero(&self.ring);
        let sub_rows: Vec<usize> = row_ix[1..].to_vec();
        for (k, &j) in col_ix.iter().enumerate() {
            let e = self.get(row_ix[0], j);
            if e.is_zero() {
                continue;
            }
            let sub_cols: Vec<usize> =
                col_ix.iter().enumerate().filter(|&(t, _)| t != k).map(|(_, &c)| c).collect();
            let minor = self.det_cofactor_rec(&sub_rows, &sub_cols);
            let term = e * &minor;
            if k % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }
}

impl PolyMatrix<Rat> {
    /// Determinant; picks cofactor expansion for very small matrices and
    /// fraction-free Bareiss elimination otherwise.
    pub fn determinant(&self) -> Result<Polynomial<Rat>> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        if self.rows < 4 {
            self.determinant_cofactor()
        } else {
            self.determinant_bareiss()
        }
    }

    /// Fraction-free Bareiss elimination with row pivoting. Every division
    /// performed is exact in the polynomial ring, keeping intermediate
    /// expression swell polynomial rather than exponential.
    pub fn determinant_bareiss(&self) -> Result<Polynomial<Rat>> {
        if self.rows != self.cols {
            return Err(Error::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        let mut m: Vec<Vec<Polynomial<Rat>>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut sign = 1i32;
        let mut prev = Polynomial::one(&self.ring);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let swap = (k + 1..n).find(|&i| !m[i][k].is_zero());
                match swap {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(Polynomial::zero(&self.ring)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = poly_div_exact(&num, &prev)?;
                }
            }
            for row in m.iter_mut().take(n).skip(k + 1) {
                row[k] = Polynomial::zero(&self.ring);
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign < 0 { -&det } else { det })
    }

    /// All `k`×`k` minors, ordered by (row combination, column combination)
    /// in lexicographic order — a deterministic generating set for minor
    /// ideals.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial<Rat>>> {
        if k == 0 || k > self.rows || k > self.cols {
            return Err(Error::InvalidInput(format!(
                "minor size {k} out of range for a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let row_sets = combinations(self.rows, k);
        let col_sets = combinations(self.cols, k);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.submatrix(rs, cs)?.determinant()?);
            }
        }
        Ok(out)
    }
}

/// All k-subsets of {0..n-1} in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Exact multivariate division: returns `num / den` when the division is
/// exact, an error otherwise. Used by Bareiss elimination, where exactness
/// is guaranteed by the algorithm.
pub(crate) fn poly_div_exact(num: &Polynomial<Rat>, den: &Polynomial<Rat>) -> Result<Polynomial<Rat>> {
    if den.is_zero() {
        return Err(Error::InvalidInput("division by the zero polynomial".into()));
    }
    let order = MonomialOrder::GrevLex;
    let ring = num.ring().clone();
    let (dm, dc) = {
        let (m, c) = den.leading(&order).unwrap();
        (m.clone(), c.clone())
    };
    let mut rem = num.clone();
    let mut quot = Polynomial::zero(&ring);
    while !rem.is_zero() {
        let (lm, lc) = {
            let (m, c) = rem.leading(&order).unwrap();
            (m.clone(), c.clone())
        };
        if !dm.divides(&lm) {
            return Err(Error::InvalidInput(
                "inexact polynomial division (leading monomial not divisible)".into(),
            ));
        }
        let q = dm.div_into(&lm);
        let qc = lc / dc.clone();
        quot.add_term(q.clone(), qc.clone());
        rem = rem.checked_sub(&den.mul_term(&q, &qc))?;
    }
    Ok(quot)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::parse_poly;
    use crate::Poly;

    fn ring3() -> Arc<Ring> {
        Ring::new(&["x1", "x2", "x3"]).unwrap()
    }

    fn mat(r: &Arc<Ring>, rows: &[&[&str]]) -> PolyMatrix<Rat> {
        PolyMatrix::from_rows(
            r,
            rows.iter()
                .map(|row| row.iter().map(|s| parse_poly(s, r).unwrap()).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn gradient_stack_determinant() {
        // rows: gradient of the unit sphere, then e1, e2
        let r = ring3();
        let m = mat(&r, &[&["2*x1", "2*x2", "2*x3"], &["1", "0", "0"], &["0", "1", "0"]]);
        let det = m.determinant().unwrap();
        assert_eq!(det, parse_poly("2*x3", &r).unwrap());
        assert_eq!(m.determinant_cofactor().unwrap(), det);
        assert_eq!(m.determinant_bareiss().unwrap(), det);
    }

    #[test]
    fn projection_direction_determinant_matches_expansion() {
        // det of the Jacobian of (g, squared-distance-from-(1,0,0), x2):
        // rows grad g, grad phi, e2 — frozen expected expansion below.
        let r = ring3();
        let m = mat(
            &r,
            &[
                &["3*x1^2-1", "3*x2^2-1", "3*x3^2-1"],
                &["2*x1-2", "2*x2", "2*x3"],
                &["0", "1", "0"],
            ],
        );
        let det = m.determinant().unwrap();
        let expect =
            parse_poly("-2*((3*x1*x3+1)*(x1-x3) + 3*x3^2 - 1)", &r).unwrap();
        assert_eq!(det, expect);
    }

    #[test]
    fn bareiss_matches_cofactor_on_seeded_random_matrices() {
        use rand::{Rng, SeedableRng};
        let r = ring3();
        let vars: Vec<Poly> = (0..3).map(|i| Poly::var(&r, i).unwrap()).collect();
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(0x5eed);
        for n in [2usize, 3, 4, 5] {
            for _ in 0..6 {
                let mut rows = Vec::new();
                for _ in 0..n {
                    let mut row = Vec::new();
                    for _ in 0..n {
                        // random linear-ish entry with small coefficients
                        let mut p = Poly::constant(&r, crate::rint(rng.gen_range(-3..=3)));
                        for v in &vars {
                            let c = rng.gen_range(-2..=2);
                            if c != 0 {
                                p = &p + &v.scale(&crate::rint(c));
                            }
                        }
                        row.push(p);
                    }
                    rows.push(row);
                }
                let m = PolyMatrix::from_rows(&r, rows).unwrap();
                assert_eq!(m.determinant_bareiss().unwrap(), m.determinant_cofactor().unwrap());
            }
        }
    }

    #[test]
    fn zero_pivot_needs_row_swap() {
        let r = ring3();
        let m = mat(
            &r,
            &[
                &["0", "1", "0", "0"],
                &["1", "0", "0", "0"],
                &["0", "0", "0", "1"],
                &["0", "0", "1", "0"],
            ],
        );
        assert_eq!(m.determinant().unwrap(), Poly::one(&r));
        let singular = mat(
            &r,
            &[
                &["x1", "x2", "x3", "1"],
                &["x1", "x2", "x3", "1"],
                &["0", "0", "1", "0"],
                &["0", "1", "0", "0"],
            ],
        );
        assert!(singular.determinant().unwrap().is_zero());
    }

    #[test]
    fn minors_enumeration_order_and_count() {
        let r = ring3();
        let m = mat(&r, &[&["x1", "x2", "x3"], &["1", "2", "3"]]);
        let mins = m.minors(2).unwrap();
        assert_eq!(mins.len(), 3); // C(2,2)*C(3,2)
        assert_eq!(mins[0], parse_poly("2*x1 - x2", &r).unwrap()); // cols {0,1}
        assert_eq!(mins[1], parse_poly("3*x1 - x3", &r).unwrap()); // cols {0,2}
        assert_eq!(mins[2], parse_poly("3*x2 - 2*x3", &r).unwrap()); // cols {1,2}
        assert!(m.minors(0).is_err());
        assert!(m.minors(3).is_err());
    }

    #[test]
    fn combinations_lexicographic() {
        assert_eq!(combinations(4, 2), vec![
            vec![0, 1],
            vec![0, 2],
            vec![0, 3],
            vec![1, 2],
            vec![1, 3],
            vec![2, 3]
        ]);
        assert_eq!(combinations(3, 3), vec![vec![0, 1, 2]]);
        assert_eq!(combinations(2, 3), Vec::<Vec<usize>>::new());
    }

    #[test]
    fn exact_division() {
        let r = ring3();
        let a = parse_poly("(x1+x2)*(x1-x3)", &r).unwrap();
        let b = parse_poly("x1+x2", &r).unwrap();
        assert_eq!(poly_div_exact(&a, &b).unwrap(), parse_poly("x1-x3", &r).unwrap());
        let c = parse_poly("x1+1", &r).unwrap();
        assert!(poly_div_exact(&a, &c).is_err());
    }

    #[test]
    fn non_square_rejected() {
        let r = ring3();
        let m = mat(&r, &[&["x1", "x2"], &["1", "0"], &["0", "1"]]);
        assert!(m.determinant().is_err());
        assert!(m.determinant_cofactor().is_err());
        assert!(m.determinant_bareiss().is_err());
    }
}
