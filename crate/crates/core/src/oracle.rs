//! Brute-force cross-checks by Macaulay matrices.
//!
//! Nothing here touches Gröbner bases. For a homogeneous ideal `I` the
//! degree-`e` piece `I_e` is spanned by the products `m * g` with `g` a
//! generator and `m` a monomial of degree `e - deg g`, so graded quotient
//! dimensions and membership reduce to ranks of those spanning sets.

use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{rank, RationalMatrix};
use crate::poly::{Monomial, Polynomial, Rational, RingContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleDimension {
    Dimension(usize),
    /// The quotient did not vanish in any degree up to the bound.
    ExceedsBound,
}

/// Rows `m * g` spanning `I_e`, written in the basis of degree-`e` monomials.
#[derive(Debug, Clone)]
pub struct MacaulayTruncation {
    ctx: Arc<RingContext>,
    gens: Vec<Polynomial>,
    bound: u32,
}

impl MacaulayTruncation {
    pub fn new(ctx: &Arc<RingContext>, gens: &[Polynomial], bound: u32) -> Result<Self> {
        let mut kept = Vec::new();
        for g in gens {
            if !g.context().same_as(ctx) {
                return Err(Error::ContextMismatch);
            }
            if !g.is_homogeneous() {
                return Err(Error::NotHomogeneous);
            }
            if !g.is_zero() {
                kept.push(g.clone());
            }
        }
        Ok(MacaulayTruncation {
            ctx: ctx.clone(),
            gens: kept,
            bound,
        })
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Degree-`e` monomials, ascending lex (the matrix column order).
    pub fn monomials(&self, e: u32) -> Vec<Monomial> {
        let mut v = Monomial::all_of_degree(self.ctx.len(), e);
        v.sort();
        v
    }

    pub fn matrix(&self, e: u32) -> RationalMatrix {
        let basis = self.monomials(e);
        let mut m = RationalMatrix::empty(basis.len());
        for g in &self.gens {
            let dg = g.degree().unwrap();
            if dg > e {
                continue;
            }
            for mult in Monomial::all_of_degree(self.ctx.len(), e - dg) {
                let mut row = vec![Rational::zero(); basis.len()];
                for (t, c) in g.terms() {
                    let i = basis
                        .binary_search(&t.mul(&mult))
                        .expect("degree-e monomial");
                    row[i] = c.clone();
                }
                m.push_row(row);
            }
        }
        m
    }

    /// `dim (S/I)_e`.
    pub fn quotient_dimension_in_degree(&self, e: u32) -> usize {
        let m = self.matrix(e);
        m.cols() - rank(&m)
    }
}

pub fn oracle_quotient_dimension(
    ctx: &Arc<RingContext>,
    gens: &[Polynomial],
    bound: u32,
) -> Result<OracleDimension> {
    let mac = MacaulayTruncation::new(ctx, gens, bound)?;
    let mut total = 0;
    for e in 0..=bound {
        let h = mac.quotient_dimension_in_degree(e);
        if h == 0 {
            // generated in degrees <= e, so I_e = S_e forces I_k = S_k above
            return Ok(OracleDimension::Dimension(total));
        }
        total += h;
    }
    Ok(OracleDimension::ExceedsBound)
}

pub fn oracle_membership(p: &Polynomial, gens: &[Polynomial], bound: u32) -> Result<bool> {
    let ctx = p.context();
    if p.is_zero() {
        MacaulayTruncation::new(ctx, gens, bound)?;
        return Ok(true);
    }
    if !p.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let d = p.degree().unwrap();
    if d > bound {
        return Err(Error::DegreeAboveBound {
            degree: d as usize,
            bound: bound as usize,
        });
    }
    let mac = MacaulayTruncation::new(ctx, gens, bound)?;
    let mut m = mac.matrix(d);
    let before = rank(&m);
    let basis = mac.monomials(d);
    let mut row = vec![Rational::zero(); basis.len()];
    for (t, c) in p.terms() {
        row[basis.binary_search(t).unwrap()] = c.clone();
    }
    m.push_row(row);
    Ok(rank(&m) == before)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::{parse_ideal, parse_polynomial};

    const GENS: &str =
        "a1*a2, a1*a3, a1*a4, a2^2 - a1^2, a2*a3, a2*a4 - a3^2, a2*a5 - a4^2, a3*a5, a4*a5, a5^2";

    fn ring() -> Arc<RingContext> {
        RingContext::new(["a1", "a2", "a3", "a4", "a5"]).unwrap()
    }

    #[test]
    fn matrix_shape() {
        let r = ring();
        let gens = parse_ideal(GENS, &r).unwrap();
        let mac = MacaulayTruncation::new(&r, &gens, 4).unwrap();
        let m = mac.matrix(3);
        assert_eq!((m.rows(), m.cols()), (50, 35));
        assert!(mac.monomials(3).windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn apolar_ideal_dimension() {
        let r = ring();
        let gens = parse_ideal(GENS, &r).unwrap();
        assert_eq!(
            oracle_quotient_dimension(&r, &gens, 4).unwrap(),
            OracleDimension::Dimension(12)
        );
        let mac = MacaulayTruncation::new(&r, &gens, 4).unwrap();
        let h: Vec<_> = (0..=4)
            .map(|e| mac.quotient_dimension_in_degree(e))
            .collect();
        assert_eq!(h, [1, 5, 5, 1, 0]);
        assert_eq!(
            oracle_quotient_dimension(&r, &gens, 2).unwrap(),
            OracleDimension::ExceedsBound
        );
    }

    #[test]
    fn small_cases() {
        let r = ring();
        let maximal = parse_ideal("a1, a2, a3, a4, a5", &r).unwrap();
        assert_eq!(
            oracle_quotient_dimension(&r, &maximal, 1).unwrap(),
            OracleDimension::Dimension(1)
        );
        let r1 = RingContext::new(["a1"]).unwrap();
        let sq = parse_ideal("a1^2", &r1).unwrap();
        assert_eq!(
            oracle_quotient_dimension(&r1, &sq, 5).unwrap(),
            OracleDimension::Dimension(2)
        );
        let unit = parse_ideal("3", &r1).unwrap();
        assert_eq!(
            oracle_quotient_dimension(&r1, &unit, 0).unwrap(),
            OracleDimension::Dimension(0)
        );
        assert_eq!(
            oracle_quotient_dimension(&r1, &[], 3).unwrap(),
            OracleDimension::ExceedsBound
        );
    }

    #[test]
    fn membership() {
        let r = ring();
        let gens = parse_ideal(GENS, &r).unwrap();
        let yes = parse_polynomial("a1*a2*a5", &r).unwrap();
        let no = parse_polynomial("a1^2", &r).unwrap();
        assert!(oracle_membership(&yes, &gens, 4).unwrap());
        assert!(!oracle_membership(&no, &gens, 4).unwrap());
        assert!(oracle_membership(&Polynomial::zero(&r), &gens, 4).unwrap());
        // a1^3 = a1*(a1^2 - a2^2) + a2*(a1*a2)
        assert!(oracle_membership(&parse_polynomial("a1^3", &r).unwrap(), &gens, 4).unwrap());
    }

    #[test]
    fn bad_input() {
        let r = ring();
        let gens = parse_ideal(GENS, &r).unwrap();
        let high = parse_polynomial("a1^5", &r).unwrap();
        assert!(matches!(
            oracle_membership(&high, &gens, 4),
            Err(Error::DegreeAboveBound {
                degree: 5,
                bound: 4
            })
        ));
        let mixed = parse_polynomial("a1 + a2^2", &r).unwrap();
        assert!(matches!(
            oracle_membership(&mixed, &gens, 4),
            Err(Error::NotHomogeneous)
        ));
        assert!(matches!(
            oracle_quotient_dimension(&r, &[mixed], 4),
            Err(Error::NotHomogeneous)
        ));
    }
}
