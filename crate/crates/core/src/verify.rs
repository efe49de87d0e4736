//! Scenario runner for the smoothability argument for the cubic
//! `F = x2^2*x5 + x2*x4^2 + x1^2*x5 + x3^2*x4`.
//!
//! Each scenario recomputes a group of numbers and ideal identities and
//! compares them with constants fixed in [`Constant`]. Scenarios never
//! panic on a mathematical failure; a failed computation becomes a failed
//! check in the report.
//!
//! | id | content |
//! |----|---------|
//! | L1 | apolar ideal of `F`, its Hilbert function and length |
//! | L2 | flat degeneration to `F`'s algebra, at a nonzero `alpha` |
//! | C1 | decomposition of the apolar ideal along `a1` |
//! | L3 | tangent space dimension and saturation |

use std::fmt;
use std::sync::Arc;
use std::thread;
use std::time::{Duration, Instant};

use num_traits::Zero;
use serde::Serialize;

use crate::apolarity::DualPairing;
use crate::error::{Error, Result};
use crate::ideals::Ideal;
use crate::parser::{parse_ideal, parse_polynomial};
use crate::poly::{ratio, rational, Polynomial, Rational, RingContext};

/// Textual inputs of all scenarios. Tests mutate a copy to check that the
/// scenarios notice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    /// The cubic, in `x1..x5`.
    pub form: String,
    /// Claimed generators of its apolar ideal, in `a1..a5`.
    pub generators: String,
    /// `J0`, in `a2..a5`.
    pub j0: String,
    /// `J1`, in `a2..a5`.
    pub j1: String,
    /// The element `m` of `J1`, in `a2..a5`.
    pub m: String,
}

impl Default for Fixture {
    fn default() -> Self {
        Fixture {
            form: "x2^2*x5 + x2*x4^2 + x1^2*x5 + x3^2*x4".into(),
            generators: "a1*a2, a1*a3, a1*a4, a2^2 - a1^2, a2*a3, a2*a4 - a3^2, \
                         a2*a5 - a4^2, a3*a5, a4*a5, a5^2"
                .into(),
            // the six quadrics alone do not contain a2^3
            j0: "a2*a3, a2*a4 - a3^2, a2*a5 - a4^2, a3*a5, a4*a5, a5^2, a2^3".into(),
            j1: "a2, a3, a4".into(),
            m: "a2^2".into(),
        }
    }
}

/// Expected values. These are fixed inputs, never recomputed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constant {
    /// Length of the apolar algebra of `F`.
    QuotientDimension,
    /// Hilbert function of the apolar algebra of `F`.
    HilbertFunction,
    /// Rank of the first catalecticant of `F`.
    LinearRank,
    /// Hilbert function of the apolar algebra of `F(x1 = 0)`.
    RestrictedHilbertFunction,
    /// Length of `A0 / J1`.
    LinearPartDimension,
    /// Length of `A0 / m*J1`.
    RestrictedDimension,
    /// `dim I/I^2` for the apolar ideal.
    TangentDimension,
    /// The tangent dimension equals `12 * 5`, the length times the number of variables.
    ComponentDimension,
}

impl Constant {
    pub const ALL: [Constant; 8] = [
        Constant::QuotientDimension,
        Constant::HilbertFunction,
        Constant::LinearRank,
        Constant::RestrictedHilbertFunction,
        Constant::LinearPartDimension,
        Constant::RestrictedDimension,
        Constant::TangentDimension,
        Constant::ComponentDimension,
    ];

    pub fn value(self) -> Value {
        match self {
            Constant::QuotientDimension => Value::Integer(12),
            Constant::HilbertFunction => Value::Vector(vec![1, 5, 5, 1]),
            Constant::LinearRank => Value::Integer(5),
            Constant::RestrictedHilbertFunction => Value::Vector(vec![1, 4, 4, 1]),
            Constant::LinearPartDimension => Value::Integer(2),
            Constant::RestrictedDimension => Value::Integer(10),
            Constant::TangentDimension => Value::Integer(60),
            Constant::ComponentDimension => Value::Boolean(true),
        }
    }

    /// Short label for the statement the constant comes from.
    pub fn citation(self) -> &'static str {
        match self {
            Constant::QuotientDimension => "apolar ideal lemma: length 12",
            Constant::HilbertFunction => "apolar ideal lemma: h = (1,5,5,1)",
            Constant::LinearRank => "apolar ideal lemma: no linear annihilator, h(1) = 5",
            Constant::RestrictedHilbertFunction => {
                "smoothability corollary: h = (1,4,4,1) for F(x1=0)"
            }
            Constant::LinearPartDimension => {
                "smoothability corollary: second component has length 2"
            }
            Constant::RestrictedDimension => "flat family lemma: dim A0/mJ = 10",
            Constant::TangentDimension => "tangent space lemma: dim I/I^2 = 60",
            Constant::ComponentDimension => "tangent space lemma: 60 = 12*5",
        }
    }
}

/// A computed or expected quantity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Integer(i64),
    Vector(Vec<usize>),
    Boolean(bool),
    /// The computation itself failed; never equal to an expected value.
    Error {
        error: String,
    },
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Integer(n) => write!(f, "{n}"),
            Value::Vector(v) => {
                let parts: Vec<_> = v.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
            Value::Boolean(b) => write!(f, "{b}"),
            Value::Error { error } => write!(f, "error: {error}"),
        }
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Integer(n as i64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Boolean(b)
    }
}

impl From<Vec<usize>> for Value {
    fn from(v: Vec<usize>) -> Self {
        Value::Vector(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub description: String,
    pub computed: Value,
    pub expected: Value,
    pub citation: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub scenario: String,
    /// Scenario parameter, e.g. `alpha=1/2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter: Option<String>,
    pub checks: Vec<Check>,
    pub passed: bool,
    /// Not serialized, so that reports render deterministically.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

struct Builder {
    scenario: &'static str,
    parameter: Option<String>,
    checks: Vec<Check>,
    start: Instant,
}

impl Builder {
    fn new(scenario: &'static str, parameter: Option<String>) -> Self {
        Builder {
            scenario,
            parameter,
            checks: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(
        &mut self,
        id: &str,
        description: &str,
        computed: Result<Value>,
        expected: Value,
        citation: &str,
    ) {
        let computed = computed.unwrap_or_else(|e| Value::Error {
            error: e.to_string(),
        });
        let passed = computed == expected;
        self.checks.push(Check {
            id: id.into(),
            description: description.into(),
            computed,
            expected,
            citation: citation.into(),
            passed,
        });
    }

    fn constant(&mut self, id: &str, description: &str, computed: Result<Value>, c: Constant) {
        self.check(id, description, computed, c.value(), c.citation());
    }

    fn holds(&mut self, id: &str, description: &str, computed: Result<bool>, citation: &str) {
        self.check(
            id,
            description,
            computed.map(Value::Boolean),
            Value::Boolean(true),
            citation,
        );
    }

    /// Record a setup failure as a failed check and close the report.
    fn abort(mut self, err: Error) -> VerificationReport {
        self.check(
            "setup",
            "parse scenario inputs",
            Err(err),
            Value::Boolean(true),
            "fixture",
        );
        self.finish()
    }

    fn finish(self) -> VerificationReport {
        let passed = self.checks.iter().all(|c| c.passed);
        VerificationReport {
            scenario: self.scenario.into(),
            parameter: self.parameter,
            checks: self.checks,
            passed,
            wall_time: self.start.elapsed(),
        }
    }
}

fn ring(names: &[&str]) -> Arc<RingContext> {
    RingContext::new(names.iter().copied()).expect("valid names")
}

fn dual_ring() -> Arc<RingContext> {
    ring(&["a1", "a2", "a3", "a4", "a5"])
}

fn primal_ring() -> Arc<RingContext> {
    ring(&["x1", "x2", "x3", "x4", "x5"])
}

fn restricted_ring() -> Arc<RingContext> {
    ring(&["a2", "a3", "a4", "a5"])
}

fn gen_list(p: &Polynomial) -> Ideal {
    Ideal::principal(p.clone())
}

pub fn verify_lemma_apolar() -> VerificationReport {
    verify_lemma_apolar_with(&Fixture::default())
}

pub fn verify_lemma_apolar_with(data: &Fixture) -> VerificationReport {
    let mut b = Builder::new("L1", None);
    let pairing = match DualPairing::with_dual(&primal_ring(), &dual_ring()) {
        Ok(p) => p,
        Err(e) => return b.abort(e),
    };
    let inputs = parse_polynomial(&data.form, pairing.primal())
        .map_err(Error::from)
        .and_then(|f| Ok((f, parse_ideal(&data.generators, pairing.dual())?)));
    let (form, gens) = match inputs {
        Ok(x) => x,
        Err(e) => return b.abort(e),
    };
    for (i, g) in gens.iter().enumerate() {
        b.holds(
            &format!("a{}", i + 1),
            &format!("{g} annihilates F"),
            pairing.contract(g, &form).map(|r| r.is_zero()),
            "apolar ideal lemma: listed generators annihilate F",
        );
    }
    let listed = Ideal::new(pairing.dual(), gens).expect("same context");
    let apolar = pairing.apolar_ideal(&form);
    b.holds(
        "b",
        "apolar ideal of F equals the listed ideal",
        apolar
            .as_ref()
            .map_err(Clone::clone)
            .and_then(|i| i.equals(&listed)),
        "apolar ideal lemma: generating set",
    );
    b.constant(
        "c",
        "length of the quotient by the listed ideal",
        listed.quotient_dimension().map(Value::from),
        Constant::QuotientDimension,
    );
    b.constant(
        "d",
        "Hilbert function of the quotient by the listed ideal",
        listed
            .hilbert_function()
            .map(|h| Value::from(h.values().to_vec())),
        Constant::HilbertFunction,
    );
    b.constant(
        "e",
        "rank of the degree-1 catalecticant of F",
        pairing
            .catalecticant(&form, 1)
            .map(|c| Value::from(c.rank())),
        Constant::LinearRank,
    );
    b.finish()
}

/// Ideals of `S = Q[a1..a5]` describing the flat family, with `x = a1`.
struct Family {
    s: Arc<RingContext>,
    /// `J0 + J1*x`; ideals of `A = A0[x]/J1*x` are the ideals of `S` containing it.
    base: Ideal,
    x: Polynomial,
    m: Polynomial,
    j0: Ideal,
    j1: Ideal,
}

impl Family {
    fn new(data: &Fixture) -> Result<Self> {
        let s = dual_ring();
        let j0 = Ideal::parse(&s, &data.j0)?;
        let j1 = Ideal::parse(&s, &data.j1)?;
        let m = parse_polynomial(&data.m, &s)?;
        let x = Polynomial::variable(&s, "a1")?;
        // J0, J1 and m must live in Q[a2..a5]
        let r = restricted_ring();
        for g in j0.generators().iter().chain(j1.generators()).chain([&m]) {
            g.change_context(&r)?;
        }
        let base = j0.sum(&j1.product(&gen_list(&x))?)?;
        Ok(Family {
            s,
            base,
            x,
            m,
            j0,
            j1,
        })
    }

    /// `(base, gens)` as an ideal of `S`.
    fn ideal(&self, gens: &[&Polynomial]) -> Ideal {
        let extra = Ideal::new(&self.s, gens.iter().map(|g| (*g).clone()).collect()).unwrap();
        self.base.sum(&extra).unwrap()
    }

    fn restrict(&self, ideal: &Ideal) -> Result<Ideal> {
        let r = restricted_ring();
        let gens = ideal
            .generators()
            .iter()
            .map(|g| g.change_context(&r))
            .collect::<Result<_>>()?;
        Ideal::new(&r, gens)
    }
}

pub fn verify_flat_family(alpha: &Rational) -> Result<VerificationReport> {
    verify_flat_family_with(&Fixture::default(), alpha)
}

pub fn verify_flat_family_with(data: &Fixture, alpha: &Rational) -> Result<VerificationReport> {
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    let mut b = Builder::new("L2", Some(format!("alpha={alpha}")));
    let fam = match Family::new(data) {
        Ok(f) => f,
        Err(e) => return Ok(b.abort(e)),
    };
    let s = &fam.s;
    let x = &fam.x;
    let a = Polynomial::constant(s, alpha.clone());
    let x2 = x * x;
    // f_alpha = m - alpha*x - x^2
    let f = &(&fam.m - &(&a * x)) - &x2;
    let x_plus_a = x + &a;
    let p = fam.ideal(&[&f, &x2]);
    let q = fam.ideal(&[&f, &x_plus_a]);
    let principal = fam.ideal(&[&f]);

    b.holds(
        "a",
        "(f, x^2) + (f, x + alpha) is the unit ideal",
        Ok(p.sum(&q).map(|i| i.is_unit()).unwrap_or(false)),
        "flat family lemma: (x^2, x + alpha) = (1)",
    );
    let meet = p.intersect(&q);
    b.holds(
        "b1",
        "(f, x^2) ∩ (f, x + alpha) = (f)",
        meet.as_ref()
            .map_err(Clone::clone)
            .and_then(|i| i.equals(&principal)),
        "flat family lemma: intersection equals (f)",
    );
    let prod = p.product(&q).and_then(|i| i.sum(&fam.base));
    b.holds(
        "b2",
        "(f, x^2) * (f, x + alpha) = (f)",
        prod.as_ref()
            .map_err(Clone::clone)
            .and_then(|i| i.equals(&principal)),
        "flat family lemma: product equals (f)",
    );
    let cubic = &(&x2 * x) + &(&a * &x2);
    b.holds(
        "b3",
        "(f, x^2) * (f, x + alpha) = (f, x^3 + alpha*x^2)",
        prod.as_ref()
            .map_err(Clone::clone)
            .and_then(|i| i.equals(&fam.ideal(&[&f, &cubic]))),
        "flat family lemma: product equals (f, x^3 + alpha*x^2)",
    );
    let linear = &fam.m - &(&a * x);
    b.holds(
        "c",
        "(f, x^2) = (m - alpha*x)",
        p.equals(&fam.ideal(&[&linear])),
        "flat family lemma: (f, x^2) = (m - alpha*x)",
    );

    // lengths inside A0 = Q[a2..a5]/J0
    let mj = fam.j1.product(&gen_list(&fam.m));
    let a0_mj = mj.and_then(|mj| fam.restrict(&fam.j0.sum(&mj)?));
    let a0_j = fam.j0.sum(&fam.j1).and_then(|i| fam.restrict(&i));
    let dim_mj = a0_mj.and_then(|i| i.quotient_dimension());
    let dim_j = a0_j.and_then(|i| i.quotient_dimension());
    // special fiber f = m - x^2
    let special = &fam.m - &x2;
    let dim_special = fam.ideal(&[&special]).quotient_dimension();
    b.constant(
        "d1",
        "dim A/f for f = m - x^2",
        dim_special.clone().map(Value::from),
        Constant::QuotientDimension,
    );
    b.constant(
        "d2",
        "dim A0/mJ",
        dim_mj.clone().map(Value::from),
        Constant::RestrictedDimension,
    );
    b.constant(
        "d3",
        "dim A0/J",
        dim_j.clone().map(Value::from),
        Constant::LinearPartDimension,
    );
    b.holds(
        "d4",
        "dim A/f = dim A0/mJ + dim A0/J",
        (|| Ok(dim_special? == dim_mj? + dim_j?))(),
        "flat family lemma: dimension additivity",
    );
    b.constant(
        "d5",
        "dim A/(f, x^2), first component of the general fiber",
        p.quotient_dimension().map(Value::from),
        Constant::RestrictedDimension,
    );
    b.constant(
        "d6",
        "dim A/(f, x + alpha), second component of the general fiber",
        q.quotient_dimension().map(Value::from),
        Constant::LinearPartDimension,
    );
    b.constant(
        "d7",
        "dim A/f_alpha, the general fiber",
        principal.quotient_dimension().map(Value::from),
        Constant::QuotientDimension,
    );
    Ok(b.finish())
}

pub fn verify_corollary_decomposition() -> VerificationReport {
    verify_corollary_decomposition_with(&Fixture::default())
}

pub fn verify_corollary_decomposition_with(data: &Fixture) -> VerificationReport {
    let mut b = Builder::new("C1", None);
    let s = dual_ring();
    let parsed = (|| {
        let listed = Ideal::parse(&s, &data.generators)?;
        let fam = Family::new(data)?;
        let form = parse_polynomial(&data.form, &primal_ring())?;
        Ok::<_, Error>((listed, fam, form))
    })();
    let (listed, fam, form) = match parsed {
        Ok(x) => x,
        Err(e) => return b.abort(e),
    };
    let a1 = &fam.x;
    let twist = &fam.m - &(a1 * a1);
    let decomposition = fam.base.sum(&gen_list(&twist));
    b.holds(
        "a",
        "I_F = J0 + J1*(a1) + (m - a1^2)",
        decomposition.and_then(|d| listed.equals(&d)),
        "smoothability corollary: decomposition of I_F",
    );
    b.holds(
        "b1",
        "J0 ⊆ J1",
        fam.j0.is_subset_of(&fam.j1),
        "smoothability corollary: J0 ⊆ J1",
    );
    b.holds(
        "b2",
        "m ∈ J1",
        fam.j1.contains(&fam.m),
        "smoothability corollary: a2^2 ∈ J1",
    );
    b.holds(
        "b3",
        "m*J1 ⊆ J0",
        fam.j1
            .product(&gen_list(&fam.m))
            .and_then(|i| i.is_subset_of(&fam.j0)),
        "smoothability corollary: a2^2*J1 ⊆ J0",
    );

    let restricted = (|| {
        let primal = ring(&["x2", "x3", "x4", "x5"]);
        let zero = Polynomial::zero(&primal);
        let g = form.substitute_into(&[("x1", zero)], &primal)?;
        let pairing = DualPairing::with_dual(&primal, &restricted_ring())?;
        let ideal = pairing.apolar_ideal(&g)?;
        Ok::<_, Error>(ideal)
    })();
    b.constant(
        "c1",
        "Hilbert function of the apolar algebra of F(x1=0)",
        restricted
            .as_ref()
            .map_err(Clone::clone)
            .and_then(|i| i.hilbert_function())
            .map(|h| h.values().to_vec().into()),
        Constant::RestrictedHilbertFunction,
    );
    b.holds(
        "c2",
        "apolar ideal of F(x1=0) equals J0",
        restricted.and_then(|i| i.equals(&fam.restrict(&fam.j0)?)),
        "smoothability corollary: Q[a2..a5]/J0 is apolar to F(x1=0)",
    );
    b.constant(
        "d",
        "dim Q[a2..a5]/(J0 + J1)",
        fam.j0
            .sum(&fam.j1)
            .and_then(|i| fam.restrict(&i)?.quotient_dimension())
            .map(Value::from),
        Constant::LinearPartDimension,
    );
    b.finish()
}

pub fn verify_tangent() -> VerificationReport {
    verify_tangent_with(&Fixture::default())
}

pub fn verify_tangent_with(data: &Fixture) -> VerificationReport {
    let mut b = Builder::new("L3", None);
    let s = dual_ring();
    let ideal = match Ideal::parse(&s, &data.generators) {
        Ok(i) => i,
        Err(e) => return b.abort(e),
    };
    let tangent = tangent_dimension(&ideal);
    b.constant(
        "a",
        "dim S/I^2 - dim S/I",
        tangent.clone().map(Value::from),
        Constant::TangentDimension,
    );
    let saturated = (|| {
        let z = s.fresh_name("z");
        let h = ideal.homogenize(&z)?;
        h.irrelevant_saturation()?.equals(&h)
    })();
    b.holds(
        "b",
        "homogenization of I is saturated",
        saturated,
        "tangent space lemma: saturation",
    );
    b.constant(
        "c",
        "dim I/I^2 = (dim S/I) * (number of variables)",
        (|| {
            Ok(Value::from(
                tangent? == ideal.quotient_dimension()? * s.len(),
            ))
        })(),
        Constant::ComponentDimension,
    );
    b.finish()
}

/// `dim S/I^2 - dim S/I`, the dimension of the tangent space to the Hilbert
/// scheme at `S/I`.
pub fn tangent_dimension(ideal: &Ideal) -> Result<usize> {
    let small = ideal.quotient_dimension()?;
    let big = ideal.power(2)?.quotient_dimension()?;
    Ok(big - small)
}

/// The sample parameters used when none are given.
pub fn default_alphas() -> Vec<Rational> {
    vec![rational(1), rational(-3), ratio(1, 2)]
}

pub fn verify_all(alphas: &[Rational]) -> Result<Vec<VerificationReport>> {
    verify_all_with(&Fixture::default(), alphas)
}

/// L1, L2 for each alpha, C1 and L3, in that order. Scenarios run on
/// separate threads; the order of the result does not depend on timing.
pub fn verify_all_with(data: &Fixture, alphas: &[Rational]) -> Result<Vec<VerificationReport>> {
    if alphas.iter().any(Zero::is_zero) {
        return Err(Error::ZeroAlpha);
    }
    thread::scope(|scope| {
        let l1 = scope.spawn(|| verify_lemma_apolar_with(data));
        let l2: Vec<_> = alphas
            .iter()
            .map(|a| scope.spawn(move || verify_flat_family_with(data, a)))
            .collect();
        let c1 = scope.spawn(|| verify_corollary_decomposition_with(data));
        let l3 = scope.spawn(|| verify_tangent_with(data));
        let mut out = vec![l1.join().expect("L1 panicked")];
        for h in l2 {
            out.push(h.join().expect("L2 panicked")?);
        }
        out.push(c1.join().expect("C1 panicked"));
        out.push(l3.join().expect("L3 panicked"));
        Ok(out)
    })
}
