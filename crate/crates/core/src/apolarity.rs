//! Macaulay inverse systems.
//!
//! The dual ring acts on the primal ring by differentiation: the dual
//! variable paired with `x_i` acts as `d/dx_i`, with the ordinary
//! derivative coefficients (not divided powers). The apolar ideal of a form
//! `F` is the annihilator of `F` under this action, and the quotient of the
//! dual ring by it is the apolar algebra of `F`.
//!
//! Every dual monomial of degree `deg F + 1` kills `F`, so the annihilator
//! is generated in degrees at most `deg F + 1`; generators are searched
//! only up to that bound.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::HilbertFunction;
use crate::ideals::Ideal;
use crate::linalg::{kernel_basis, rank, EchelonSpan, RationalMatrix};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, RingContext};

/// A primal ring of forms together with its dual ring of differential
/// operators, variables paired by position.
#[derive(Debug, Clone)]
pub struct DualPairing {
    primal: Arc<RingContext>,
    dual: Arc<RingContext>,
}

impl DualPairing {
    /// Dual names are derived from the primal ones: a leading `x` becomes
    /// `a` (`x3` pairs with `a3`), any other name `v` pairs with `dv`.
    pub fn new(primal: &Arc<RingContext>) -> Result<Self> {
        let names = primal.names().iter().map(|n| match n.strip_prefix('x') {
            Some(rest) => format!("a{rest}"),
            None => format!("d{n}"),
        });
        Ok(DualPairing {
            primal: primal.clone(),
            dual: RingContext::new(names)?,
        })
    }

    pub fn with_dual(primal: &Arc<RingContext>, dual: &Arc<RingContext>) -> Result<Self> {
        if primal.len() != dual.len() {
            return Err(Error::LengthMismatch {
                left: primal.len(),
                right: dual.len(),
            });
        }
        Ok(DualPairing {
            primal: primal.clone(),
            dual: dual.clone(),
        })
    }

    pub fn primal(&self) -> &Arc<RingContext> {
        &self.primal
    }

    pub fn dual(&self) -> &Arc<RingContext> {
        &self.dual
    }

    /// `theta ⌟ form`.
    pub fn contract(&self, theta: &Polynomial, form: &Polynomial) -> Result<Polynomial> {
        if !theta.context().same_as(&self.dual) || !form.context().same_as(&self.primal) {
            return Err(Error::ContextMismatch);
        }
        let mut terms = Vec::new();
        for (alpha, a) in theta.terms() {
            for (beta, b) in form.terms() {
                if let Some((m, k)) = differentiate(alpha, beta) {
                    terms.push((m, a * b * Rational::from_integer(k.into())));
                }
            }
        }
        Ok(Polynomial::from_terms(&self.primal, terms))
    }

    /// Matrix of `theta ↦ theta ⌟ form` on dual forms of degree `e`.
    pub fn catalecticant(&self, form: &Polynomial, e: usize) -> Result<CatalecticantMap> {
        let d = self.check_form(form)?;
        if e > d {
            return Err(Error::DegreeOutOfRange { degree: e, max: d });
        }
        Ok(self.catalecticant_unchecked(form, d, e))
    }

    fn check_form(&self, form: &Polynomial) -> Result<usize> {
        if !form.context().same_as(&self.primal) {
            return Err(Error::ContextMismatch);
        }
        if form.is_zero() {
            return Err(Error::ZeroForm);
        }
        if !form.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(form.degree().unwrap() as usize)
    }

    fn catalecticant_unchecked(&self, form: &Polynomial, d: usize, e: usize) -> CatalecticantMap {
        let n = self.primal.len();
        let cols = graded_basis(n, e as u32);
        let rows = if e <= d {
            graded_basis(n, (d - e) as u32)
        } else {
            Vec::new()
        };
        let mut matrix = RationalMatrix::zeros(rows.len(), cols.len());
        for (j, alpha) in cols.iter().enumerate() {
            for (beta, b) in form.terms() {
                if let Some((m, k)) = differentiate(alpha, beta) {
                    let i = rows
                        .iter()
                        .position(|r| *r == m)
                        .expect("degree-(d-e) monomial");
                    matrix.set(i, j, b * Rational::from_integer(k.into()));
                }
            }
        }
        CatalecticantMap {
            degree: e,
            form_degree: d,
            row_monomials: rows,
            col_monomials: cols,
            matrix,
        }
    }

    /// Annihilator of `form` in the dual ring.
    ///
    /// For a homogeneous form the generators are chosen degree by degree
    /// and form a minimal homogeneous generating set. Otherwise a single
    /// kernel of the filtered map on dual polynomials of degree at most
    /// `deg F + 1` is taken and thinned greedily.
    pub fn apolar_ideal(&self, form: &Polynomial) -> Result<Ideal> {
        if !form.context().same_as(&self.primal) {
            return Err(Error::ContextMismatch);
        }
        if form.is_zero() {
            return Err(Error::ZeroForm);
        }
        if form.is_homogeneous() {
            self.apolar_ideal_graded(form)
        } else {
            self.apolar_ideal_filtered(form)
        }
    }

    fn apolar_ideal_graded(&self, form: &Polynomial) -> Result<Ideal> {
        let n = self.dual.len();
        let d = form.degree().unwrap() as usize;
        let mut gens: Vec<Polynomial> = Vec::new();
        for e in 1..=d + 1 {
            let cat = self.catalecticant_unchecked(form, d, e);
            let kernel = kernel_basis(&cat.matrix);
            if kernel.is_empty() {
                continue;
            }
            let cols = &cat.col_monomials;
            let mut span = EchelonSpan::new(cols.len());
            for g in &gens {
                let gd = g.degree().unwrap() as usize;
                for m in Monomial::all_of_degree(n, (e - gd) as u32) {
                    span.insert(&coordinates(&g.mul_term(&m, &Rational::one()), cols));
                }
            }
            for v in kernel {
                if span.insert(&v) {
                    gens.push(from_coordinates(&self.dual, cols, &v));
                }
            }
        }
        Ideal::new(&self.dual, gens)
    }

    fn apolar_ideal_filtered(&self, form: &Polynomial) -> Result<Ideal> {
        let n = self.dual.len();
        let d = form.degree().unwrap() as usize;
        let bound = (d + 1) as u32;
        // descending grevlex, so each rref kernel row leads at its pivot
        let mut cols: Vec<Monomial> = (0..=bound)
            .flat_map(|k| Monomial::all_of_degree(n, k))
            .collect();
        cols.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
        let rows: Vec<Monomial> = (0..=d as u32)
            .flat_map(|k| Monomial::all_of_degree(n, k))
            .collect();
        let mut matrix = RationalMatrix::zeros(rows.len(), cols.len());
        for (j, alpha) in cols.iter().enumerate() {
            for (beta, b) in form.terms() {
                if let Some((m, k)) = differentiate(alpha, beta) {
                    let i = rows.iter().position(|r| *r == m).unwrap();
                    matrix.set(i, j, b * Rational::from_integer(k.into()));
                }
            }
        }
        let mut kernel = kernel_basis(&matrix);
        // smallest leading monomial first
        kernel.reverse();

        let mut span = EchelonSpan::new(cols.len());
        let mut gens = Vec::new();
        for v in kernel {
            if !span.insert(&v) {
                continue;
            }
            let g = from_coordinates(&self.dual, &cols, &v);
            let gd = g.degree().unwrap();
            for k in 1..=bound.saturating_sub(gd) {
                for m in Monomial::all_of_degree(n, k) {
                    span.insert(&coordinates(&g.mul_term(&m, &Rational::one()), &cols));
                }
            }
            gens.push(g);
        }
        Ideal::new(&self.dual, gens)
    }

    /// Hilbert function of the apolar algebra from catalecticant ranks.
    pub fn apolar_hilbert(&self, form: &Polynomial) -> Result<HilbertFunction> {
        let d = self.check_form(form)?;
        Ok(HilbertFunction::new(
            (0..=d)
                .map(|e| rank(&self.catalecticant_unchecked(form, d, e).matrix))
                .collect(),
        ))
    }
}

/// `d^alpha x^beta = k * x^(beta - alpha)`, or `None` when it vanishes.
fn differentiate(alpha: &Monomial, beta: &Monomial) -> Option<(Monomial, u64)> {
    let m = alpha.quotient_of(beta)?;
    let k = alpha
        .exponents()
        .iter()
        .zip(beta.exponents())
        .map(|(&a, &b)| ((b - a + 1)..=b).map(u64::from).product::<u64>())
        .product();
    Some((m, k))
}

/// Degree-`d` monomials in descending grevlex.
fn graded_basis(n: usize, d: u32) -> Vec<Monomial> {
    let mut v = Monomial::all_of_degree(n, d);
    v.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b, a));
    v
}

fn coordinates(p: &Polynomial, basis: &[Monomial]) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); basis.len()];
    for (m, c) in p.terms() {
        let i = basis
            .iter()
            .position(|b| b == m)
            .expect("term outside basis");
        v[i] = c.clone();
    }
    v
}

fn from_coordinates(ctx: &Arc<RingContext>, basis: &[Monomial], v: &[Rational]) -> Polynomial {
    Polynomial::from_terms(ctx, basis.iter().cloned().zip(v.iter().cloned()))
}

/// Contraction map `S^e(dual) → S^(d-e)(primal)` for a form of degree `d`.
#[derive(Debug, Clone)]
pub struct CatalecticantMap {
    pub degree: usize,
    pub form_degree: usize,
    /// Primal monomials of degree `d - e`, descending grevlex.
    pub row_monomials: Vec<Monomial>,
    /// Dual monomials of degree `e`, descending grevlex.
    pub col_monomials: Vec<Monomial>,
    pub matrix: RationalMatrix,
}

impl CatalecticantMap {
    pub fn rank(&self) -> usize {
        rank(&self.matrix)
    }
}

pub fn contract(
    pairing: &DualPairing,
    theta: &Polynomial,
    form: &Polynomial,
) -> Result<Polynomial> {
    pairing.contract(theta, form)
}

pub fn catalecticant(
    pairing: &DualPairing,
    form: &Polynomial,
    e: usize,
) -> Result<CatalecticantMap> {
    pairing.catalecticant(form, e)
}

pub fn apolar_ideal(pairing: &DualPairing, form: &Polynomial) -> Result<Ideal> {
    pairing.apolar_ideal(form)
}

pub fn apolar_hilbert(pairing: &DualPairing, form: &Polynomial) -> Result<HilbertFunction> {
    pairing.apolar_hilbert(form)
}
