use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use super::Monomial;
use crate::error::{Error, Result};

/// Monomial orders. Variables are ranked by index: variable 0 is the largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TermOrder {
    Lex,
    DegRevLex,
    /// The first `k` variables are eliminated: compare their block by
    /// degrevlex first, break ties by degrevlex on the remaining variables.
    BlockElimination(usize),
    /// Compare the degree in the variable block `start..end` first, then
    /// degrevlex on all variables.
    WeightedTDegreeFirst { start: usize, end: usize },
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    /// Compare two monomials of equal length. No length check.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::DegRevLex => degrevlex(a, b),
            TermOrder::BlockElimination(k) => {
                let k = (*k).min(a.len());
                degrevlex(&a[..k], &b[..k]).then_with(|| degrevlex(&a[k..], &b[k..]))
            }
            TermOrder::WeightedTDegreeFirst { start, end } => {
                let ta: u32 = a[*start..*end].iter().sum();
                let tb: u32 = b[*start..*end].iter().sum();
                ta.cmp(&tb).then_with(|| degrevlex(a, b))
            }
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, TermOrder::DegRevLex)
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Lex => f.write_str("lex"),
            TermOrder::DegRevLex => f.write_str("degrevlex"),
            TermOrder::BlockElimination(k) => write!(f, "elim({k})"),
            TermOrder::WeightedTDegreeFirst { start, end } => {
                write!(f, "tdeg({start}..{end})")
            }
        }
    }
}

/// Compare `a` and `b` under `ord`, checking that the exponent vectors agree
/// in length.
pub fn compare_monomials(a: &Monomial, b: &Monomial, ord: &TermOrder) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::Dimension(format!(
            "monomials with {} and {} variables",
            a.nvars(),
            b.nvars()
        )));
    }
    if let TermOrder::WeightedTDegreeFirst { end, .. } = ord {
        if *end > a.nvars() {
            return Err(Error::Dimension(format!(
                "T-block ends at {end} but monomials have {} variables",
                a.nvars()
            )));
        }
    }
    Ok(ord.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn degrevlex_xy_vs_y2() {
        // same degree; last variable: y^1 vs y^2, fewer y wins
        assert_eq!(
            compare_monomials(&m(&[1, 1]), &m(&[0, 2]), &TermOrder::DegRevLex).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn reflexive_and_one_minimal() {
        let a = m(&[2, 0, 1]);
        for ord in all_orders(3) {
            assert_eq!(compare_monomials(&a, &a, &ord).unwrap(), Ordering::Equal);
        }
        assert_eq!(
            compare_monomials(&m(&[0]), &m(&[1]), &TermOrder::Lex).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn length_mismatch_is_dimension_error() {
        let err = compare_monomials(&m(&[1]), &m(&[1, 0]), &TermOrder::Lex).unwrap_err();
        assert!(matches!(err, Error::Dimension(_)));
    }

    #[test]
    fn degrevlex_known_chain() {
        // x^2 > xy > y^2 > xz > yz > z^2 in degrevlex with x > y > z
        let chain = [[2, 0, 0], [1, 1, 0], [0, 2, 0], [1, 0, 1], [0, 1, 1], [0, 0, 2]];
        for w in chain.windows(2) {
            assert_eq!(TermOrder::DegRevLex.cmp(&m(&w[0]), &m(&w[1])), Ordering::Greater);
        }
    }

    #[test]
    fn elimination_puts_block_first() {
        let ord = TermOrder::BlockElimination(1);
        // t * 1 beats any power of the other variables
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        let ord = TermOrder::WeightedTDegreeFirst { start: 2, end: 3 };
        assert_eq!(ord.cmp(&m(&[0, 0, 1]), &m(&[7, 7, 0])), Ordering::Greater);
    }

    fn all_orders(n: usize) -> Vec<TermOrder> {
        vec![
            TermOrder::Lex,
            TermOrder::DegRevLex,
            TermOrder::BlockElimination(1),
            TermOrder::WeightedTDegreeFirst { start: n - 1, end: n },
        ]
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 3).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn total_antisymmetric_transitive_multiplicative(a in mono3(), b in mono3(), c in mono3()) {
            for ord in all_orders(3) {
                let ab = ord.cmp(&a, &b);
                prop_assert_eq!(ab, ord.cmp(&b, &a).reverse());
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                if ab != Ordering::Greater && ord.cmp(&b, &c) != Ordering::Greater {
                    prop_assert_ne!(ord.cmp(&a, &c), Ordering::Greater);
                }
                prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
                if !a.is_one() {
                    prop_assert_eq!(ord.cmp(&Monomial::one(3), &a), Ordering::Less);
                }
            }
        }
    }
}
