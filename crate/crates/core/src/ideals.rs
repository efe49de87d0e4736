//! Ideals of a polynomial ring and the usual operations on them.
//!
//! Equality and containment are decided through reduced Gröbner bases,
//! which each [`Ideal`] computes lazily and caches per term order.
//! Intersections use one auxiliary variable `t`: the intersection of `I`
//! and `J` is the `t`-free part of `t*I + (1 - t)*J` under an order
//! eliminating `t`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, hilbert_function_of, GroebnerBasis, HilbertFunction};
use crate::parser::parse_ideal;
use crate::poly::{MonomialOrder, Polynomial, RingContext};

pub struct Ideal {
    ctx: Arc<RingContext>,
    generators: Vec<Polynomial>,
    // write-once per order: the first stored basis wins
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Ideal {
    pub fn new(ctx: &Arc<RingContext>, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| !g.context().same_as(ctx)) {
            return Err(Error::ContextMismatch);
        }
        Ok(Ideal {
            ctx: ctx.clone(),
            generators,
            cache: Mutex::default(),
        })
    }

    /// Parse a generator list in the crate's text syntax.
    pub fn parse(ctx: &Arc<RingContext>, src: &str) -> Result<Self> {
        Self::new(ctx, parse_ideal(src, ctx)?)
    }

    pub fn zero(ctx: &Arc<RingContext>) -> Self {
        Ideal {
            ctx: ctx.clone(),
            generators: Vec::new(),
            cache: Mutex::default(),
        }
    }

    pub fn unit(ctx: &Arc<RingContext>) -> Self {
        Ideal {
            ctx: ctx.clone(),
            generators: vec![Polynomial::one(ctx)],
            cache: Mutex::default(),
        }
    }

    pub fn principal(f: Polynomial) -> Self {
        let ctx = f.context().clone();
        Ideal {
            ctx,
            generators: vec![f],
            cache: Mutex::default(),
        }
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Reduced Gröbner basis under grevlex.
    pub fn groebner(&self) -> Arc<GroebnerBasis> {
        self.groebner_for(&MonomialOrder::Grevlex)
    }

    pub fn groebner_for(&self, order: &MonomialOrder) -> Arc<GroebnerBasis> {
        if let Some(gb) = self.cache.lock().unwrap().get(order) {
            return gb.clone();
        }
        let gb = Arc::new(
            buchberger(&self.ctx, &self.generators, order)
                .expect("generators share the ideal's ring"),
        );
        self.cache
            .lock()
            .unwrap()
            .entry(order.clone())
            .or_insert(gb)
            .clone()
    }

    fn check_ctx(&self, other: &Ideal) -> Result<()> {
        if self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn is_unit(&self) -> bool {
        self.groebner().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.iter().all(Polynomial::is_zero)
    }

    /// Homogeneous ideals have a homogeneous reduced grevlex basis.
    pub fn is_homogeneous(&self) -> bool {
        self.groebner()
            .elements()
            .iter()
            .all(Polynomial::is_homogeneous)
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        self.groebner().contains(p)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Ideal) -> Result<bool> {
        self.check_ctx(other)?;
        let gb = other.groebner();
        for g in &self.generators {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equal reduced grevlex bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_ctx(other)?;
        Ok(self.groebner().elements() == other.groebner().elements())
    }

    pub fn quotient_dimension(&self) -> Result<usize> {
        self.groebner().quotient_dimension()
    }

    pub fn hilbert_function(&self) -> Result<HilbertFunction> {
        if !self.generators.iter().all(Polynomial::is_homogeneous) {
            return Err(Error::NotHomogeneous);
        }
        hilbert_function_of(&self.groebner())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ctx(other)?;
        let gens = self
            .generators
            .iter()
            .chain(&other.generators)
            .cloned()
            .collect();
        Ideal::new(&self.ctx, gens)
    }

    /// Generated by all pairwise products, duplicates dropped.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ctx(other)?;
        let mut seen = HashSet::new();
        let mut gens = Vec::new();
        for f in &self.generators {
            for g in &other.generators {
                let p = f * g;
                if !p.is_zero() && seen.insert(p.clone()) {
                    gens.push(p);
                }
            }
        }
        Ideal::new(&self.ctx, gens)
    }

    pub fn power(&self, n: u32) -> Result<Ideal> {
        if n < 1 {
            return Err(Error::InvalidPower(n));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ctx(other)?;
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ctx));
        }
        let t_name = self.ctx.fresh_name("t");
        let ext = self.ctx.with_prepended(&t_name)?;
        let t = Polynomial::variable(&ext, &t_name)?;
        let one_minus_t = &Polynomial::one(&ext) - &t;
        let mut gens = Vec::with_capacity(self.generators.len() + other.generators.len());
        for g in &self.generators {
            gens.push(&t * &g.change_context(&ext)?);
        }
        for h in &other.generators {
            gens.push(&one_minus_t * &h.change_context(&ext)?);
        }
        let gb = buchberger(&ext, &gens, &MonomialOrder::elimination(1))?;
        let mut out = Vec::new();
        for g in gb.elements() {
            if g.terms().iter().all(|(m, _)| m.exponents()[0] == 0) {
                out.push(g.change_context(&self.ctx)?);
            }
        }
        Ideal::new(&self.ctx, out)
    }

    /// `{g : g*f ∈ self}`, via `(self ∩ (f)) / f`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        if !f.context().same_as(&self.ctx) {
            return Err(Error::ContextMismatch);
        }
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let meet = self.intersect(&Ideal::principal(f.clone()))?;
        let gens = meet
            .generators
            .iter()
            .map(|g| {
                g.div_exact(f)
                    .map(|q| q.expect("generator of I ∩ (f) must be divisible by f"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ctx, gens)
    }

    /// `self : f^∞`, iterating the colon until the ideal stops growing.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        let mut current = self.clone();
        loop {
            let next = current.colon(f)?;
            if next.equals(&current)? {
                return Ok(current);
            }
            current = next;
        }
    }

    /// `self : m^∞` for the ideal `m` of all variables, as the
    /// intersection of the saturations by each variable.
    pub fn irrelevant_saturation(&self) -> Result<Ideal> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let mut acc = Ideal::unit(&self.ctx);
        for name in self.ctx.names() {
            let v = Polynomial::variable(&self.ctx, name)?;
            let sat = self.saturate(&v)?;
            acc = acc.intersect(&sat)?;
        }
        Ok(acc)
    }

    /// Homogenize with a new last variable `name`, using a grevlex basis so
    /// that the result is the homogenization of the ideal itself.
    pub fn homogenize(&self, name: &str) -> Result<Ideal> {
        let ext = self.ctx.with_appended(name)?;
        let gens = self
            .groebner()
            .elements()
            .iter()
            .map(|g| g.homogenize_into(&ext))
            .collect();
        Ideal::new(&ext, gens)
    }

    /// Same ideal with its generators replaced by the reduced grevlex basis.
    pub fn canonical(&self) -> Ideal {
        let gb = self.groebner();
        let ideal = Ideal::new(&self.ctx, gb.elements().to_vec()).unwrap();
        ideal
            .cache
            .lock()
            .unwrap()
            .insert(MonomialOrder::Grevlex, gb);
        ideal
    }
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ctx: self.ctx.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}
