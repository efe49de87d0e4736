//! Buchberger's algorithm and what it buys: normal forms, membership,
//! standard monomials, quotient dimension and graded Hilbert functions.
//!
//! S-pairs are processed with the normal selection strategy (smallest lcm
//! degree, then smallest lcm in the term order, then insertion order), and
//! pruned with the coprime-leading-terms and chain criteria. Output is the
//! reduced basis, sorted by increasing leading monomial.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Rational, RingContext};

/// Term list sorted by descending `order`, no zero coefficients.
#[derive(Clone, Debug)]
struct Sorted {
    terms: Vec<(Monomial, Rational)>,
}

impl Sorted {
    fn new(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms = p.terms().to_vec();
        if *order != MonomialOrder::Grevlex {
            terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        Sorted { terms }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &Rational {
        &self.terms[0].1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn is_constant(&self) -> bool {
        !self.terms.is_empty() && self.lm().is_one()
    }

    fn monic(mut self) -> Self {
        if let Some(inv) = self.terms.first().map(|t| t.1.recip()) {
            for t in &mut self.terms {
                t.1 *= &inv;
            }
        }
        self
    }

    fn to_polynomial(&self, ctx: &Arc<RingContext>) -> Polynomial {
        Polynomial::from_terms(ctx, self.terms.iter().cloned())
    }
}

/// `p[start..] - c * m * g`, all lists sorted descending.
fn sub_scaled(
    p: &[(Monomial, Rational)],
    c: &Rational,
    m: &Monomial,
    g: &[(Monomial, Rational)],
    order: &MonomialOrder,
) -> Vec<(Monomial, Rational)> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let mut gj: Option<(Monomial, Rational)> = None;
    let next_g = |j: usize| (g[j].0.mul(m), &g[j].1 * c);
    while i < p.len() || j < g.len() {
        if gj.is_none() && j < g.len() {
            gj = Some(next_g(j));
        }
        match (p.get(i), gj.as_ref()) {
            (Some(a), Some(b)) => match order.cmp(&a.0, &b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (bm, bc) = gj.take().unwrap();
                    out.push((bm, -bc));
                    j += 1;
                }
                Ordering::Equal => {
                    let (_, bc) = gj.take().unwrap();
                    let v = &a.1 - bc;
                    if !v.is_zero() {
                        out.push((a.0.clone(), v));
                    }
                    i += 1;
                    j += 1;
                }
            },
            (Some(a), None) => {
                out.push(a.clone());
                i += 1;
            }
            (None, Some(_)) => {
                let (bm, bc) = gj.take().unwrap();
                out.push((bm, -bc));
                j += 1;
            }
            (None, None) => break,
        }
    }
    out
}

/// Full normal form of `p` modulo `basis` (leading monomials taken under
/// `order`). No term of the result is divisible by a basis leading monomial.
fn normal_form(p: Sorted, basis: &[&Sorted], order: &MonomialOrder) -> Sorted {
    let mut rem = Vec::new();
    let mut work = p.terms;
    let mut start = 0;
    while start < work.len() {
        let (m, c) = &work[start];
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let q = g.lm().quotient_of(m).unwrap();
                let coef = c / g.lc();
                work = sub_scaled(&work[start..], &coef, &q, &g.terms, order);
                start = 0;
            }
            None => {
                rem.push(work[start].clone());
                start += 1;
            }
        }
    }
    Sorted { terms: rem }
}

/// Normal form of `p` modulo an arbitrary list of polynomials.
///
/// When `basis` is a Gröbner basis for `order` the result is the unique
/// remainder; otherwise it is one valid division remainder.
pub fn reduce(p: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Result<Polynomial> {
    for g in basis {
        if !g.context().same_as(p.context()) {
            return Err(Error::ContextMismatch);
        }
    }
    let sorted: Vec<Sorted> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::new(g, order))
        .collect();
    let refs: Vec<&Sorted> = sorted.iter().collect();
    Ok(normal_form(Sorted::new(p, order), &refs, order).to_polynomial(p.context()))
}

/// Reduced Gröbner basis of an ideal for a fixed term order.
#[derive(Clone)]
pub struct GroebnerBasis {
    ctx: Arc<RingContext>,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    sorted: Vec<Sorted>,
}

impl GroebnerBasis {
    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Monic, inter-reduced elements by increasing leading monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.sorted.iter().map(Sorted::lm)
    }

    pub fn is_unit(&self) -> bool {
        self.sorted.len() == 1 && self.sorted[0].is_constant()
    }

    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        if !p.context().same_as(&self.ctx) {
            return Err(Error::ContextMismatch);
        }
        let refs: Vec<&Sorted> = self.sorted.iter().collect();
        Ok(normal_form(Sorted::new(p, &self.order), &refs, &self.order).to_polynomial(&self.ctx))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// True iff every variable has a pure power among the leading
    /// monomials, i.e. the quotient is finite-dimensional.
    pub fn is_zero_dimensional(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        let mut seen = vec![false; self.ctx.len()];
        for m in self.leading_monomials() {
            if let Some(v) = m.pure_power_variable() {
                seen[v] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading_monomials().any(|l| l.divides(m))
    }

    /// Monomials outside the leading-term ideal, by increasing degree and
    /// then increasing order within a degree.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return Err(Error::InfiniteDimensional);
        }
        let n = self.ctx.len();
        let mut out = Vec::new();
        let mut layer: Vec<Monomial> = vec![Monomial::one(n)];
        layer.retain(|m| self.is_standard(m));
        while !layer.is_empty() {
            let mut sorted = layer.clone();
            sorted.sort_by(|a, b| self.order.cmp(a, b));
            out.extend(sorted);
            // standard monomials are closed under division, so every
            // standard monomial of the next degree is some x_i times one here
            let mut next = HashSet::new();
            for m in &layer {
                for i in 0..n {
                    let c = m.mul(&Monomial::variable(n, i));
                    if self.is_standard(&c) {
                        next.insert(c);
                    }
                }
            }
            layer = next.into_iter().collect();
        }
        Ok(out)
    }

    /// k-dimension of the quotient ring.
    pub fn quotient_dimension(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.same_as(&other.ctx) && self.order == other.order && self.elements == other.elements
    }
}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.elements.iter().map(|p| p.to_string()))
            .finish()
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    seq: usize,
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ctx`.
///
/// The zero ideal gives the empty basis and the unit ideal gives `{1}`.
pub fn buchberger(
    ctx: &Arc<RingContext>,
    gens: &[Polynomial],
    order: &MonomialOrder,
) -> Result<GroebnerBasis> {
    for g in gens {
        if !g.context().same_as(ctx) {
            return Err(Error::ContextMismatch);
        }
    }
    let unit = || GroebnerBasis {
        ctx: ctx.clone(),
        order: order.clone(),
        elements: vec![Polynomial::one(ctx)],
        sorted: vec![Sorted::new(&Polynomial::one(ctx), order)],
    };

    let mut basis: Vec<Sorted> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if g.is_constant() {
            return Ok(unit());
        }
        basis.push(Sorted::new(g, order).monic());
    }

    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut seq = 0;
    let mut add_pairs = |basis: &[Sorted],
                         pairs: &mut Vec<Pair>,
                         pending: &mut HashSet<(usize, usize)>,
                         j: usize| {
        for i in 0..j {
            pairs.push(Pair {
                i,
                j,
                lcm: basis[i].lm().lcm(basis[j].lm()),
                seq,
            });
            pending.insert((i, j));
            seq += 1;
        }
    };
    for j in 0..basis.len() {
        add_pairs(&basis, &mut pairs, &mut pending, j);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.lcm
                    .degree()
                    .cmp(&q.lcm.degree())
                    .then_with(|| order.cmp(&p.lcm, &q.lcm))
                    .then_with(|| p.seq.cmp(&q.seq))
            })
            .unwrap();
        let Pair { i, j, lcm, .. } = pairs.swap_remove(best);
        pending.remove(&(i, j));

        if basis[i].lm().is_coprime(basis[j].lm()) {
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], &lcm, order);
        let refs: Vec<&Sorted> = basis.iter().collect();
        let r = normal_form(s, &refs, order);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(unit());
        }
        basis.push(r.monic());
        add_pairs(&basis, &mut pairs, &mut pending, basis.len() - 1);
    }

    Ok(reduce_basis(ctx, basis, order))
}

fn s_polynomial(f: &Sorted, g: &Sorted, lcm: &Monomial, order: &MonomialOrder) -> Sorted {
    // both monic
    let uf = f.lm().quotient_of(lcm).unwrap();
    let ug = g.lm().quotient_of(lcm).unwrap();
    let fu: Vec<_> = f
        .terms
        .iter()
        .map(|(m, c)| (m.mul(&uf), c.clone()))
        .collect();
    Sorted {
        terms: sub_scaled(&fu, &Rational::one(), &ug, &g.terms, order),
    }
}

fn reduce_basis(
    ctx: &Arc<RingContext>,
    mut basis: Vec<Sorted>,
    order: &MonomialOrder,
) -> GroebnerBasis {
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<Sorted> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lm().divides(g.lm())) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Sorted> = minimal
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, g)| g)
            .collect();
        let head = minimal[k].terms[0].clone();
        let tail = Sorted {
            terms: minimal[k].terms[1..].to_vec(),
        };
        let mut nf = normal_form(tail, &others, order);
        nf.terms.insert(0, head);
        reduced.push(nf.monic());
    }
    GroebnerBasis {
        ctx: ctx.clone(),
        order: order.clone(),
        elements: reduced.iter().map(|g| g.to_polynomial(ctx)).collect(),
        sorted: reduced,
    }
}

pub fn is_zero_dimensional(gb: &GroebnerBasis) -> bool {
    gb.is_zero_dimensional()
}

pub fn standard_monomials(gb: &GroebnerBasis) -> Result<Vec<Monomial>> {
    gb.standard_monomials()
}

pub fn membership(p: &Polynomial, gb: &GroebnerBasis) -> Result<bool> {
    gb.contains(p)
}

/// Dimension over Q of `ctx / (gens)`; errors if it is infinite.
pub fn quotient_dimension(ctx: &Arc<RingContext>, gens: &[Polynomial]) -> Result<usize> {
    buchberger(ctx, gens, &MonomialOrder::Grevlex)?.quotient_dimension()
}

/// Values `h(0), h(1), ..., h(d)` with trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(transparent)]
pub struct HilbertFunction(Vec<usize>);

impl HilbertFunction {
    pub fn new(mut values: Vec<usize>) -> Self {
        while values.last() == Some(&0) {
            values.pop();
        }
        HilbertFunction(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn get(&self, degree: usize) -> usize {
        self.0.get(degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest degree with a nonzero value.
    pub fn socle_degree(&self) -> Result<usize> {
        self.0
            .len()
            .checked_sub(1)
            .ok_or(Error::ZeroHilbertFunction)
    }

    pub fn is_symmetric(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl fmt::Display for HilbertFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", vals.join(", "))
    }
}

pub fn socle_degree(h: &HilbertFunction) -> Result<usize> {
    h.socle_degree()
}

/// Hilbert function of `ctx / (gens)` for homogeneous generators with a
/// finite-dimensional quotient.
pub fn hilbert_function(ctx: &Arc<RingContext>, gens: &[Polynomial]) -> Result<HilbertFunction> {
    if !gens.iter().all(Polynomial::is_homogeneous) {
        return Err(Error::NotHomogeneous);
    }
    let gb = buchberger(ctx, gens, &MonomialOrder::Grevlex)?;
    hilbert_function_of(&gb)
}

pub(crate) fn hilbert_function_of(gb: &GroebnerBasis) -> Result<HilbertFunction> {
    let mut values = Vec::new();
    for m in gb.standard_monomials()? {
        let d = m.degree() as usize;
        if values.len() <= d {
            values.resize(d + 1, 0);
        }
        values[d] += 1;
    }
    Ok(HilbertFunction::new(values))
}
