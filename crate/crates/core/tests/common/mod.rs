//! Seeded random corpora shared by the integration tests.

#![allow(dead_code)]

use std::sync::Arc;

use macaulay::parser::parse_ideal;
use macaulay::poly::{ratio, rational};
use macaulay::{Ideal, Monomial, Polynomial, RingContext};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const APOLAR_GENS: &str =
    "a1*a2, a1*a3, a1*a4, a2^2 - a1^2, a2*a3, a2*a4 - a3^2, a2*a5 - a4^2, a3*a5, a4*a5, a5^2";
pub const FORM: &str = "x2^2*x5 + x2*x4^2 + x1^2*x5 + x3^2*x4";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn ring(stem: &str, n: usize) -> Arc<RingContext> {
    RingContext::new((1..=n).map(|i| format!("{stem}{i}"))).unwrap()
}

pub fn apolar_ring() -> Arc<RingContext> {
    ring("a", 5)
}

pub fn apolar_gens(ctx: &Arc<RingContext>) -> Vec<Polynomial> {
    parse_ideal(APOLAR_GENS, ctx).unwrap()
}

fn small_coefficient(rng: &mut ChaCha8Rng) -> macaulay::Rational {
    loop {
        let n = rng.random_range(-3..=3);
        if n != 0 {
            return if rng.random_bool(0.2) {
                ratio(n, rng.random_range(2..=3))
            } else {
                rational(n)
            };
        }
    }
}

/// Homogeneous polynomial of degree `d` with at most `terms` terms.
pub fn random_form(
    rng: &mut ChaCha8Rng,
    ctx: &Arc<RingContext>,
    d: u32,
    terms: usize,
) -> Polynomial {
    let monomials = Monomial::all_of_degree(ctx.len(), d);
    let picked: Vec<_> = monomials
        .choose_multiple(rng, terms.min(monomials.len()))
        .cloned()
        .collect();
    Polynomial::from_terms(ctx, picked.into_iter().map(|m| (m, small_coefficient(rng))))
}

/// Nonzero form; retries if cancellation left nothing.
pub fn random_nonzero_form(
    rng: &mut ChaCha8Rng,
    ctx: &Arc<RingContext>,
    d: u32,
    terms: usize,
) -> Polynomial {
    loop {
        let f = random_form(rng, ctx, d, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Homogeneous zero-dimensional ideal in at most four variables with
/// generators of degree at most three: a pure power of every variable plus
/// a few random forms. Returns the generators and a degree bound past the
/// socle degree.
pub struct SmallIdeal {
    pub ctx: Arc<RingContext>,
    pub gens: Vec<Polynomial>,
    pub bound: u32,
}

pub fn random_small_ideal(rng: &mut ChaCha8Rng) -> SmallIdeal {
    let n = rng.random_range(1..=4);
    let ctx = ring("y", n);
    let mut gens = Vec::new();
    let mut socle = 0;
    for i in 0..n {
        let d = rng.random_range(1..=3);
        socle += d - 1;
        let mut e = vec![0; n];
        e[i] = d;
        gens.push(Polynomial::monomial(&ctx, Monomial::new(e), rational(1)));
    }
    for _ in 0..rng.random_range(0..=3) {
        let d = rng.random_range(1..=3);
        let terms = rng.random_range(1..=3);
        gens.push(random_form(rng, &ctx, d, terms));
    }
    gens.shuffle(rng);
    SmallIdeal {
        ctx,
        gens,
        bound: socle + 1,
    }
}

/// Homogeneous test polynomials for membership: half are combinations of
/// multiples of generators (members by construction), half are random.
pub fn membership_probes(
    rng: &mut ChaCha8Rng,
    ideal: &SmallIdeal,
    count: usize,
) -> Vec<Polynomial> {
    let ctx = &ideal.ctx;
    let nonzero: Vec<_> = ideal.gens.iter().filter(|g| !g.is_zero()).collect();
    (0..count)
        .map(|k| {
            let d = rng.random_range(0..=ideal.bound);
            if k % 2 == 0 {
                let mut acc = Polynomial::zero(ctx);
                for g in &nonzero {
                    let dg = g.degree().unwrap();
                    if dg <= d && rng.random_bool(0.5) {
                        acc = &acc + &(&random_form(rng, ctx, d - dg, 2) * g);
                    }
                }
                acc
            } else {
                let terms = rng.random_range(1..=3);
                random_form(rng, ctx, d, terms)
            }
        })
        .collect()
}

/// Ideal supported at `point` and containing `m^k` for the maximal ideal of
/// `point`, with a few extra generators: it is primary to that maximal ideal.
pub fn translated_primary(rng: &mut ChaCha8Rng, ctx: &Arc<RingContext>, point: &[i64]) -> Ideal {
    let n = ctx.len();
    let mut gens = Vec::new();
    for i in 0..n {
        let d = rng.random_range(1..=3);
        let mut e = vec![0; n];
        e[i] = d;
        gens.push(Polynomial::monomial(ctx, Monomial::new(e), rational(1)));
    }
    for _ in 0..rng.random_range(0..=2) {
        let d = rng.random_range(1..=2);
        gens.push(random_form(rng, ctx, d, 2));
    }
    // x -> x - point moves the support from the origin to the point
    let shifted: Vec<(&str, Polynomial)> = (0..n)
        .map(|i| {
            let v = Polynomial::variable(ctx, ctx.name(i)).unwrap();
            (
                ctx.name(i),
                &v - &Polynomial::constant(ctx, rational(point[i])),
            )
        })
        .collect();
    let moved = gens
        .iter()
        .map(|g| g.substitute(&shifted).unwrap())
        .collect();
    Ideal::new(ctx, moved).unwrap()
}

/// Two ideals primary to distinct points, hence comaximal.
pub fn comaximal_pair(rng: &mut ChaCha8Rng) -> (Ideal, Ideal) {
    let n = rng.random_range(1..=3);
    let ctx = ring("z", n);
    let p: Vec<i64> = (0..n).map(|_| rng.random_range(-2..=2)).collect();
    let mut q = p.clone();
    while q == p {
        q = (0..n).map(|_| rng.random_range(-2..=2)).collect();
    }
    (
        translated_primary(rng, &ctx, &p),
        translated_primary(rng, &ctx, &q),
    )
}
