//! Hermite trace forms: exact solution counting for zero-dimensional
//! ideals. The rank of the trace form is the number of distinct complex
//! solutions; its signature is the number of distinct real solutions —
//! both computed exactly over the rationals.

use super::linalg::{multiplication_matrix, symmetric_inertia, QMat};
use crate::error::Result;
use crate::groebner::{quotient_basis, GroebnerBasis, Ideal};
use crate::polyring::{Monomial, MonomialOrder};
use crate::Rat;
use num_traits::Zero;
use std::collections::BTreeMap;

/// The symmetric bilinear trace form Tr(m_i·m_j) on the quotient ring of a
/// zero-dimensional ideal, over the standard monomial basis.
#[derive(Debug, Clone)]
pub struct TraceForm {
    pub basis: Vec<Monomial>,
    pub matrix: QMat,
}

impl TraceForm {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Number of distinct complex solutions.
    pub fn rank(&self) -> usize {
        symmetric_inertia(&self.matrix).0
    }

    /// Number of distinct real solutions (the form's signature).
    pub fn signature(&self) -> i64 {
        let (_, pos, neg) = symmetric_inertia(&self.matrix);
        pos as i64 - neg as i64
    }
}

/// Normal forms of arbitrary monomials expressed in quotient coordinates,
/// computed by the recurrence nf(x_v·m) = M_v · nf(m) with memoization.
pub(crate) struct NfTable<'a> {
    gb: &'a GroebnerBasis,
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
    mult: Vec<Option<QMat>>,
    memo: BTreeMap<Monomial, Vec<Rat>>,
}

impl<'a> NfTable<'a> {
    pub fn new(gb: &'a GroebnerBasis) -> Result<Self> {
        let basis = quotient_basis(gb)?;
        let index: BTreeMap<Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let n = gb.ring().nvars();
        Ok(NfTable { gb, basis, index, mult: vec![None; n], memo: BTreeMap::new() })
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    fn mult_matrix(&mut self, var: usize) -> Result<&QMat> {
        if self.mult[var].is_none() {
            self.mult[var] = Some(multiplication_matrix(self.gb, var)?);
        }
        Ok(self.mult[var].as_ref().unwrap())
    }

    /// Quotient coordinates of the normal form of `m`.
    pub fn nf(&mut self, m: &Monomial) -> Result<Vec<Rat>> {
        if let Some(&i) = self.index.get(m) {
            let mut v = vec![Rat::zero(); self.basis.len()];
            v[i] = num_traits::One::one();
            return Ok(v);
        }
        if let Some(v) = self.memo.get(m) {
            return Ok(v.clone());
        }
        // strip one variable and recurse
        let var = m.support().next().expect("non-constant monomial");
        let mut reduced = m.clone();
        reduced.0[var] -= 1;
        let inner = self.nf(&reduced)?;
        self.mult_matrix(var)?;
        let mat = self.mult[var].as_ref().unwrap();
        let out = super::linalg::mat_vec(mat, &inner);
        self.memo.insert(m.clone(), out.clone());
        Ok(out)
    }
}

/// Build the trace form of a zero-dimensional basis.
///
/// With D the quotient dimension, only the D(D+1)/2 products of basis
/// monomials are reduced (each product is again a monomial), and the traces
/// Tr(M_{b_l}) are recovered from the same normal-form table:
/// Tr(M_{b_l}) = Σ_r nf(b_l·b_r)[r], and
/// Tr(m_j·m_k) = Σ_l nf(b_j·b_k)[l] · Tr(M_{b_l}).
pub fn trace_form(gb: &GroebnerBasis) -> Result<TraceForm> {
    let mut table = NfTable::new(gb)?;
    let basis = table.basis().to_vec();
    let d = basis.len();

    // nf(b_j·b_k) for all pairs (j ≤ k)
    let mut prod_nf: Vec<Vec<Option<Vec<Rat>>>> = vec![vec![None; d]; d];
    for j in 0..d {
        for k in j..d {
            let m = basis[j].mul(&basis[k]);
            let v = table.nf(&m)?;
            prod_nf[j][k] = Some(v);
        }
    }
    let get = |j: usize, k: usize| -> &Vec<Rat> {
        if j <= k {
            prod_nf[j][k].as_ref().unwrap()
        } else {
            prod_nf[k][j].as_ref().unwrap()
        }
    };

    // tr_l = trace of multiplication by b_l
    let mut tr = vec![Rat::zero(); d];
    for l in 0..d {
        let mut acc = Rat::zero();
        for r in 0..d {
            acc += get(l, r)[r].clone();
        }
        tr[l] = acc;
    }

    // T_jk = Σ_l nf(b_j·b_k)[l] · tr_l
    let mut matrix = vec![vec![Rat::zero(); d]; d];
    for j in 0..d {
        for k in j..d {
            let v = get(j, k);
            let mut acc = Rat::zero();
            for (c, t) in v.iter().zip(&tr) {
                if !c.is_zero() && !t.is_zero() {
                    acc += c * t;
                }
            }
            matrix[j][k] = acc.clone();
            matrix[k][j] = acc;
        }
    }
    Ok(TraceForm { basis, matrix })
}

/// (count with multiplicity, distinct complex count) of a zero-dimensional
/// ideal: the quotient dimension and the trace-form rank.
pub fn count_solutions(ideal: &Ideal) -> Result<(usize, usize)> {
    let gb = ideal.groebner(&MonomialOrder::GrevLex)?;
    let tf = trace_form(&gb)?;
    Ok((tf.dimension(), tf.rank()))
}

/// Number of distinct real solutions of a zero-dimensional ideal: the
/// trace-form signature, computed exactly.
pub fn count_real_solutions(ideal: &Ideal) -> Result<usize> {
    let gb = ideal.groebner(&MonomialOrder::GrevLex)?;
    let tf = trace_form(&gb)?;
    let s = tf.signature();
    debug_assert!(s >= 0, "trace-form signature is a cardinality");
    Ok(s.max(0) as usize)
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

    #[test]
    fn double_root_counted_once_distinct() {
        let r = ring(&["x"]);
        let i = ideal(&r, &["x^2"]);
        assert_eq!(count_solutions(&i).unwrap(), (2, 1));
        assert_eq!(count_real_solutions(&i).unwrap(), 1);
    }

    #[test]
    fn two_simple_roots() {
        let r = ring(&["x"]);
        let i = ideal(&r, &["x^2 - 1"]);
        assert_eq!(count_solutions(&i).unwrap(), (2, 2));
        assert_eq!(count_real_solutions(&i).unwrap(), 2);
    }

    #[test]
    fn complex_pair_has_no_real_solutions() {
        let r = ring(&["x"]);
        let i = ideal(&r, &["x^2 + 1"]);
        assert_eq!(count_solutions(&i).unwrap(), (2, 2));
        assert_eq!(count_real_solutions(&i).unwrap(), 0);
    }

    #[test]
    fn mixed_multiplicities_and_reality() {
        let r = ring(&["x"]);
        // (x²+1)(x−2)²(x+3): 5 with multiplicity, 4 distinct, 2 real
        let i = ideal(&r, &["(x^2+1)*(x-2)^2*(x+3)"]);
        assert_eq!(count_solutions(&i).unwrap(), (5, 4));
        assert_eq!(count_real_solutions(&i).unwrap(), 2);
    }

    #[test]
    fn bivariate_circle_line() {
        let r = ring(&["x", "y"]);
        // unit circle ∩ line y=x: two real points
        let i = ideal(&r, &["x^2 + y^2 - 1", "x - y"]);
        assert_eq!(count_solutions(&i).unwrap(), (2, 2));
        assert_eq!(count_real_solutions(&i).unwrap(), 2);
        // circle ∩ distant line: two complex, none real
        let j = ideal(&r, &["x^2 + y^2 - 1", "x + y - 10"]);
        assert_eq!(count_solutions(&j).unwrap(), (2, 2));
        assert_eq!(count_real_solutions(&j).unwrap(), 0);
    }

    #[test]
    fn signature_le_rank_le_dimension() {
        let r = ring(&["x", "y"]);
        let systems: [&[&str]; 4] = [
            &["x^2 - 1", "y^2 - 1"],
            &["x^2 + 1", "y^3 - y"],
            &["x^3 - x", "y - x^2"],
            &["x^2", "y^2"],
        ];
        for gens in systems {
            let i = ideal(&r, gens);
            let gb = i.groebner(&MonomialOrder::GrevLex).unwrap();
            let tf = trace_form(&gb).unwrap();
            let sig = tf.signature();
            assert!(sig >= 0);
            assert!(sig as usize <= tf.rank());
            assert!(tf.rank() <= tf.dimension());
        }
    }

    #[test]
    fn trace_form_is_symmetric() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2 - y", "y^2 - 3"]);
        let gb = i.groebner(&MonomialOrder::GrevLex).unwrap();
        let tf = trace_form(&gb).unwrap();
        let d = tf.dimension();
        for a in 0..d {
            for b in 0..d {
                assert_eq!(tf.matrix[a][b], tf.matrix[b][a]);
            }
        }
        assert_eq!(d, 4);
    }

    #[test]
    fn real_count_agrees_with_sturm_on_univariate() {
        use crate::zerodim::univariate::sturm_distinct_real_roots;
        let r = ring(&["x"]);
        for p in [
            "x^3 - x",
            "x^4 - 5*x^2 + 4",
            "x^4 + 1",
            "x^5 - x - 1",
            "(x^2+4)*(x-1)",
            "x^6 - 3*x^2 + 1",
        ] {
            let poly = parse_poly(p, &r).unwrap();
            let i = Ideal::new(&r, vec![poly.clone()]).unwrap();
            assert_eq!(
                count_real_solutions(&i).unwrap(),
                sturm_distinct_real_roots(&poly).unwrap(),
                "mismatch on {p}"
            );
        }
    }
}
