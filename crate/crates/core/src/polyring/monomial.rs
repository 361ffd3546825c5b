use std::cmp::Ordering;

/// Exponent vector; the length always equals the ring's variable count.
///
/// The derived `Ord` (plain lexicographic on the exponent vector) serves
/// only as a canonical storage key; mathematical comparisons go through
/// [`MonomialOrder`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// True when the supports are disjoint (lcm = product).
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

/// Total, multiplicative well-orders on monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Plain lexicographic, first variable strongest.
    Lex,
    /// Graded reverse lexicographic.
    GrevLex,
    /// Elimination (product) order: graded reverse lexicographic on the
    /// `eliminated` variables first, then on the remaining ones. Leading
    /// terms free of the eliminated block certify membership in the
    /// elimination ideal.
    Block { eliminated: Vec<usize> },
}

fn grevlex_on(ixs: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = ixs.iter().map(|&i| a.0[i]).sum();
    let db: u32 = ixs.iter().map(|&i| b.0[i]).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // tie: smallest exponent difference in the *last* differing variable wins
    for &i in ixs.iter().rev() {
        match a.0[i].cmp(&b.0[i]) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.0.len(), b.0.len());
        match self {
            MonomialOrder::Lex => {
                for (x, y) in a.0.iter().zip(&b.0) {
                    match x.cmp(y) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GrevLex => {
                let all: Vec<usize> = (0..a.0.len()).collect();
                grevlex_on(&all, a, b)
            }
            MonomialOrder::Block { eliminated } => {
                match grevlex_on(eliminated, a, b) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                let kept: Vec<usize> =
                    (0..a.0.len()).filter(|i| !eliminated.contains(i)).collect();
                grevlex_on(&kept, a, b)
            }
        }
    }

    /// Short tag used in reports.
    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrevLex => "grevlex".into(),
            MonomialOrder::Block { eliminated } => format!(
                "block(eliminated={})",
                eliminated.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
            ),
        }
    }
}
