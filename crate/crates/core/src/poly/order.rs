use std::cmp::Ordering;

use super::Monomial;
use crate::error::{Error, Result};

/// Term order on monomials of a fixed context.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic.
    #[default]
    Grevlex,
    /// Pure lexicographic, first variable largest.
    Lex,
    /// Graded lexicographic.
    GradedLex,
    /// Elimination order. The first `split` variables form the leading block
    /// and are compared with `first`; ties are broken on the remaining
    /// variables with `rest`. Any monomial involving a leading-block
    /// variable exceeds every monomial free of them.
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        rest: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Block order eliminating the first `split` variables, grevlex in both blocks.
    pub fn elimination(split: usize) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(MonomialOrder::Grevlex),
            rest: Box::new(MonomialOrder::Grevlex),
        }
    }

    pub fn is_degree_compatible(&self) -> bool {
        matches!(self, MonomialOrder::Grevlex | MonomialOrder::GradedLex)
    }

    /// Checked comparison; errors when the exponent vectors differ in length.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::LengthMismatch {
                left: a.nvars(),
                right: b.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Unchecked comparison used on hot paths.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        cmp_slices(self, a.exponents(), b.exponents())
    }
}

fn cmp_slices(order: &MonomialOrder, a: &[u32], b: &[u32]) -> Ordering {
    match order {
        MonomialOrder::Lex => a.cmp(b),
        MonomialOrder::GradedLex => degree(a).cmp(&degree(b)).then_with(|| a.cmp(b)),
        MonomialOrder::Grevlex => degree(a).cmp(&degree(b)).then_with(|| {
            // smaller exponent in the last differing variable wins
            for (x, y) in a.iter().zip(b).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        }),
        MonomialOrder::Block { split, first, rest } => {
            let k = (*split).min(a.len());
            cmp_slices(first, &a[..k], &b[..k]).then_with(|| cmp_slices(rest, &a[k..], &b[k..]))
        }
    }
}

fn degree(e: &[u32]) -> u32 {
    e.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grevlex_two_variables() {
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn grevlex_differs_from_graded_lex() {
        // x*z^2 vs y^3: grevlex prefers y^3, graded lex prefers x*z^2
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 3, 0]);
        assert_eq!(MonomialOrder::Grevlex.cmp(&a, &b), Ordering::Less);
        assert_eq!(MonomialOrder::GradedLex.cmp(&a, &b), Ordering::Greater);
    }

    #[test]
    fn lex_first_variable_dominates() {
        for k in 0..20 {
            assert_eq!(
                MonomialOrder::Lex.cmp(&m(&[1, 0]), &m(&[0, k])),
                Ordering::Greater
            );
        }
    }

    #[test]
    fn block_order_eliminates_leading_block() {
        let o = MonomialOrder::elimination(1);
        let with_a1 = m(&[1, 0, 0, 0, 0]);
        for d in 0..4 {
            for rest in Monomial::all_of_degree(4, d) {
                let mut e = vec![0];
                e.extend_from_slice(rest.exponents());
                assert_eq!(o.cmp(&with_a1, &m(&e)), Ordering::Greater);
            }
        }
    }

    #[test]
    fn compare_rejects_length_mismatch() {
        assert!(MonomialOrder::Lex.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }
}
