//! The six-parameter space of Galilei cocycles, the automorphism group
//! `GL(2,ℝ) ⋉ ℝ²` acting on it, and the exact orbit classifier.
//!
//! A cocycle is written
//!
//! ```text
//! δ(P) = s K∧P − r H∧P
//! δ(H) = s K∧H + α K∧P − β H∧P
//! δ(K) = r K∧H + γ K∧P − ρ H∧P
//! ```
//!
//! and it is a bialgebra iff `2sρ − r(β+γ) = 0` and `2rα − s(β+γ) = 0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bialgebra::Cocommutator;
use crate::error::{Error, ParseError, Result};
use crate::exact_algebra::{det2, Poly, Rational, Scalar};
use crate::lie_core::{apply_generator_map, GeneratorMap, Wedge2};

const K: usize = 0;
const H: usize = 1;
const P: usize = 2;

/// Parameters `(α, β, γ, ρ, r, s)` of a Galilei cocycle.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SixTuple<S> {
    pub alpha: S,
    pub beta: S,
    pub gamma: S,
    pub rho: S,
    pub r: S,
    pub s: S,
}

/// Text of the two co-Jacobi constraints, in the order returned by
/// [`SixTuple::constraints`].
pub const CONSTRAINT_TEXT: [&str; 2] = ["2*s*rho - r*(beta + gamma)", "2*r*alpha - s*(beta + gamma)"];

/// Parameter symbol names, in tuple order.
pub const PARAM_NAMES: [&str; 6] = ["alpha", "beta", "gamma", "rho", "r", "s"];

impl<S: Scalar> SixTuple<S> {
    pub fn new(alpha: S, beta: S, gamma: S, rho: S, r: S, s: S) -> Self {
        SixTuple {
            alpha,
            beta,
            gamma,
            rho,
            r,
            s,
        }
    }

    pub fn from_array([alpha, beta, gamma, rho, r, s]: [S; 6]) -> Self {
        SixTuple::new(alpha, beta, gamma, rho, r, s)
    }

    pub fn to_array(&self) -> [S; 6] {
        [
            self.alpha.clone(),
            self.beta.clone(),
            self.gamma.clone(),
            self.rho.clone(),
            self.r.clone(),
            self.s.clone(),
        ]
    }

    pub fn zero() -> Self {
        SixTuple::from_array(std::array::from_fn(|_| S::zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.to_array().iter().all(S::is_zero)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SixTuple<T> {
        let [a, b, g, rho, r, s] = self.to_array();
        SixTuple::new(f(&a), f(&b), f(&g), f(&rho), f(&r), f(&s))
    }

    /// `[2sρ − r(β+γ), 2rα − s(β+γ)]`; both vanish iff co-Jacobi holds.
    pub fn constraints(&self) -> [S; 2] {
        let two = S::from_i64(2);
        let sum = self.beta.clone() + self.gamma.clone();
        [
            two.clone() * self.s.clone() * self.rho.clone() - self.r.clone() * sum.clone(),
            two * self.r.clone() * self.alpha.clone() - self.s.clone() * sum,
        ]
    }

    pub fn satisfies_constraints(&self) -> bool {
        self.constraints().iter().all(S::is_zero)
    }

    /// The cocommutator with these parameters.
    pub fn to_cocommutator(&self) -> Cocommutator<S> {
        let mut dk = Wedge2::zero(3);
        dk.add_term(K, H, self.r.clone());
        dk.add_term(K, P, self.gamma.clone());
        dk.add_term(H, P, -self.rho.clone());
        let mut dh = Wedge2::zero(3);
        dh.add_term(K, H, self.s.clone());
        dh.add_term(K, P, self.alpha.clone());
        dh.add_term(H, P, -self.beta.clone());
        let mut dp = Wedge2::zero(3);
        dp.add_term(K, P, self.s.clone());
        dp.add_term(H, P, -self.r.clone());
        Cocommutator::new(vec![dk, dh, dp])
    }

    /// Reads the parameters back; `None` if `delta` is outside the family.
    pub fn from_cocommutator(delta: &Cocommutator<S>) -> Option<Self> {
        if delta.dim() != 3 {
            return None;
        }
        let (dk, dh) = (delta.image(K), delta.image(H));
        let p = SixTuple::new(
            dh.get(K, P),
            -dh.get(H, P),
            dk.get(K, P),
            -dk.get(H, P),
            dk.get(K, H),
            dh.get(K, H),
        );
        (p.to_cocommutator() == *delta).then_some(p)
    }
}

impl SixTuple<Rational> {
    /// Errors with the first violated co-Jacobi constraint.
    pub fn check_bialgebra(&self) -> Result<()> {
        for (value, text) in self.constraints().iter().zip(CONSTRAINT_TEXT) {
            if !value.is_zero() {
                return Err(Error::NotABialgebra {
                    constraint: format!("{text} = 0"),
                    value: value.to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn to_poly(&self) -> SixTuple<Poly> {
        self.map(|c| Poly::constant(c.clone()))
    }

    pub fn to_f64(&self) -> SixTuple<f64> {
        self.map(Rational::to_f64)
    }
}

impl SixTuple<Poly> {
    /// Fully symbolic tuple with symbols `alpha, beta, gamma, rho, r, s`.
    pub fn symbolic() -> Self {
        SixTuple::from_array(PARAM_NAMES.map(Poly::var))
    }
}

impl FromStr for SixTuple<Rational> {
    type Err = ParseError;

    /// Comma-separated `α,β,γ,ρ,r,s`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 6 {
            return Err(ParseError::new(format!(
                "expected six comma-separated rationals α,β,γ,ρ,r,s, got `{s}`"
            )));
        }
        let mut vals = Vec::with_capacity(6);
        for p in parts {
            vals.push(p.parse::<Rational>()?);
        }
        let arr: [Rational; 6] = vals.try_into().expect("six values");
        Ok(SixTuple::from_array(arr))
    }
}

impl<S: fmt::Display> fmt::Display for SixTuple<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(α={}, β={}, γ={}, ρ={}, r={}, s={})",
            self.alpha, self.beta, self.gamma, self.rho, self.r, self.s
        )
    }
}

// ---------------------------------------------------------------------------
// Automorphisms

/// Automorphism `K′ = aK + bH + x₁P`, `H′ = cK + dH + x₂P`, `P′ = ΔP` with
/// `Δ = ad − bc ≠ 0`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Automorphism<S> {
    pub a: S,
    pub b: S,
    pub c: S,
    pub d: S,
    pub x1: S,
    pub x2: S,
}

impl<S: Scalar> Automorphism<S> {
    pub fn new(a: S, b: S, c: S, d: S, x1: S, x2: S) -> Self {
        Automorphism { a, b, c, d, x1, x2 }
    }

    pub fn identity() -> Self {
        Automorphism::new(S::one(), S::zero(), S::zero(), S::one(), S::zero(), S::zero())
    }

    pub fn linear(a: S, b: S, c: S, d: S) -> Self {
        Automorphism::new(a, b, c, d, S::zero(), S::zero())
    }

    pub fn det(&self) -> S {
        det2(&self.a, &self.b, &self.c, &self.d)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Automorphism<T> {
        Automorphism::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d), f(&self.x1), f(&self.x2))
    }

    /// `(A,X) ⋆ (A′,X′) = (A·A′, A·X′ + det(A′)·X)`, the product of the
    /// generator matrices; acting with `u ⋆ w` equals acting with `w`, then `u`.
    pub fn compose(&self, w: &Self) -> Self {
        let m = |p: &S, q: &S| p.clone() * q.clone();
        let dw = w.det();
        Automorphism::new(
            m(&self.a, &w.a) + m(&self.b, &w.c),
            m(&self.a, &w.b) + m(&self.b, &w.d),
            m(&self.c, &w.a) + m(&self.d, &w.c),
            m(&self.c, &w.b) + m(&self.d, &w.d),
            m(&self.a, &w.x1) + m(&self.b, &w.x2) + m(&dw, &self.x1),
            m(&self.c, &w.x1) + m(&self.d, &w.x2) + m(&dw, &self.x2),
        )
    }

    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        let inv = |x: S| x.try_div(&det).ok_or(Error::SingularAutomorphism);
        let (a, b, c, d) = (
            inv(self.d.clone())?,
            inv(-self.b.clone())?,
            inv(-self.c.clone())?,
            inv(self.a.clone())?,
        );
        // X'' = A⁻¹X' + det(A')X = 0 with A' = A⁻¹ gives X' = −det(A)⁻¹ A X ... solved directly:
        // for (A⁻¹, Y) ⋆ (A, X) = (I, 0) we need A⁻¹X + det(A)Y = 0.
        let ax1 = a.clone() * self.x1.clone() + b.clone() * self.x2.clone();
        let ax2 = c.clone() * self.x1.clone() + d.clone() * self.x2.clone();
        let y1 = (-ax1).try_div(&det).ok_or(Error::SingularAutomorphism)?;
        let y2 = (-ax2).try_div(&det).ok_or(Error::SingularAutomorphism)?;
        Ok(Automorphism::new(a, b, c, d, y1, y2))
    }

    /// Matrix with rows `K′, H′, P′` in terms of `K, H, P`.
    pub fn generator_matrix(&self) -> GeneratorMap<S> {
        GeneratorMap::new(vec![
            vec![self.a.clone(), self.b.clone(), self.x1.clone()],
            vec![self.c.clone(), self.d.clone(), self.x2.clone()],
            vec![S::zero(), S::zero(), self.det()],
        ])
    }
}

impl Automorphism<Rational> {
    pub fn to_f64(&self) -> Automorphism<f64> {
        self.map(Rational::to_f64)
    }
}

/// `Δ²α′, Δ²β′, Δ²γ′, Δ²ρ′, Δr′, Δs′` together with `Δ`. Polynomial in all
/// inputs, so it is usable over any ring.
pub fn act_numerators<S: Scalar>(p: &SixTuple<S>, phi: &Automorphism<S>) -> (SixTuple<S>, S) {
    let m = |x: &S, y: &S| x.clone() * y.clone();
    let Automorphism { a, b, c, d, x1, x2 } = phi;
    let SixTuple {
        alpha,
        beta,
        gamma,
        rho,
        r,
        s,
    } = p;
    let sum = beta.clone() + gamma.clone();
    let nr = m(a, r) + m(b, s);
    let ns = m(c, r) + m(d, s);
    let shift = -m(&ns, x1) + m(&nr, x2);
    let n_alpha = m(&m(d, d), alpha) + m(&m(c, d), &sum) + m(&m(c, c), rho);
    let n_rho = m(&m(b, b), alpha) + m(&m(a, b), &sum) + m(&m(a, a), rho);
    let common = m(&m(b, d), alpha) + m(&m(a, c), rho);
    let n_beta = common.clone() + m(&m(a, d), beta) + m(&m(b, c), gamma) + shift.clone();
    let n_gamma = common + m(&m(b, c), beta) + m(&m(a, d), gamma) - shift;
    (
        SixTuple::new(n_alpha, n_beta, n_gamma, n_rho, nr, ns),
        phi.det(),
    )
}

/// Parameters of the same cocommutator written in the transformed generators.
pub fn act<S: Scalar>(p: &SixTuple<S>, phi: &Automorphism<S>) -> Result<SixTuple<S>> {
    let (n, det) = act_numerators(p, phi);
    let det2 = det.clone() * det.clone();
    let div = |x: &S, y: &S| x.try_div(y).ok_or(Error::SingularAutomorphism);
    if det.is_zero() {
        return Err(Error::SingularAutomorphism);
    }
    Ok(SixTuple::new(
        div(&n.alpha, &det2)?,
        div(&n.beta, &det2)?,
        div(&n.gamma, &det2)?,
        div(&n.rho, &det2)?,
        div(&n.r, &det)?,
        div(&n.s, &det)?,
    ))
}

/// The same action computed by re-expressing the cocommutator through the
/// generic generator-substitution machinery.
pub fn act_via_generator_map<S: Scalar>(p: &SixTuple<S>, phi: &Automorphism<S>) -> Result<SixTuple<S>> {
    let substitution = phi.generator_matrix().inverse()?;
    let delta = apply_generator_map(&substitution, &p.to_cocommutator())?;
    SixTuple::from_cocommutator(&delta)
        .ok_or_else(|| Error::Dimension("transformed cocommutator left the six-parameter family".into()))
}

// ---------------------------------------------------------------------------
// Orbit classes

/// Row of the classification table, or the zero cocommutator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ClassId {
    Trivial,
    Row(u8),
}

impl ClassId {
    pub const ROWS: [ClassId; 9] = [
        ClassId::Row(1),
        ClassId::Row(2),
        ClassId::Row(3),
        ClassId::Row(4),
        ClassId::Row(5),
        ClassId::Row(6),
        ClassId::Row(7),
        ClassId::Row(8),
        ClassId::Row(9),
    ];

    pub fn row(n: u8) -> Result<Self> {
        if (1..=9).contains(&n) {
            Ok(ClassId::Row(n))
        } else {
            Err(Error::UnknownClass(n.to_string()))
        }
    }

    /// Classes 1–4 carry a continuous parameter ε.
    pub fn has_epsilon(self) -> bool {
        matches!(self, ClassId::Row(1..=4))
    }

    pub fn is_coboundary(self) -> bool {
        self == ClassId::Row(9)
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassId::Trivial => write!(f, "trivial"),
            ClassId::Row(n) => write!(f, "{n}"),
        }
    }
}

impl FromStr for ClassId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "trivial" | "0" => Ok(ClassId::Trivial),
            t => t
                .parse::<u8>()
                .map_err(|_| Error::UnknownClass(t.to_string()))
                .and_then(ClassId::row),
        }
    }
}

impl Serialize for ClassId {
    fn serialize<Se: Serializer>(&self, serializer: Se) -> Result<Se::Ok, Se::Error> {
        match self {
            ClassId::Trivial => serializer.serialize_str("trivial"),
            ClassId::Row(n) => serializer.serialize_u8(*n),
        }
    }
}

impl<'de> Deserialize<'de> for ClassId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u8),
            Text(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Num(n) => ClassId::row(n).map_err(serde::de::Error::custom),
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Orbit of a bialgebra with its exact invariant: ε for class 1, ε² for
/// classes 2–4, nothing otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitClass {
    pub id: ClassId,
    invariant: Option<Rational>,
}

impl OrbitClass {
    pub fn trivial() -> Self {
        OrbitClass {
            id: ClassId::Trivial,
            invariant: None,
        }
    }

    pub fn discrete(id: ClassId) -> Result<Self> {
        if id.has_epsilon() {
            let ClassId::Row(n) = id else { unreachable!() };
            return Err(Error::MissingEpsilon(n));
        }
        Ok(OrbitClass { id, invariant: None })
    }

    pub fn with_epsilon(id: ClassId, epsilon: Rational) -> Result<Self> {
        match id {
            ClassId::Row(1) => Ok(OrbitClass {
                id,
                invariant: Some(epsilon),
            }),
            ClassId::Row(n @ 2..=4) => {
                if epsilon.is_negative() {
                    return Err(Error::NegativeEpsilon {
                        class: n,
                        value: epsilon.to_string(),
                    });
                }
                Ok(OrbitClass {
                    id,
                    invariant: Some(&epsilon * &epsilon),
                })
            }
            ClassId::Row(n) => Err(Error::UnexpectedEpsilon(n)),
            ClassId::Trivial => Err(Error::UnexpectedEpsilon(0)),
        }
    }

    pub fn with_epsilon_squared(id: ClassId, eps2: Rational) -> Result<Self> {
        match id {
            ClassId::Row(n @ 2..=4) if eps2.is_negative() => Err(Error::NegativeEpsilon {
                class: n,
                value: eps2.to_string(),
            }),
            ClassId::Row(2..=4) => Ok(OrbitClass {
                id,
                invariant: Some(eps2),
            }),
            ClassId::Row(n) => Err(Error::UnexpectedEpsilon(n)),
            ClassId::Trivial => Err(Error::UnexpectedEpsilon(0)),
        }
    }

    pub fn coboundary(&self) -> bool {
        self.id.is_coboundary()
    }

    /// Exact ε: always for class 1, for classes 2–4 only when ε² is a
    /// rational square.
    pub fn epsilon_exact(&self) -> Option<Rational> {
        match self.id {
            ClassId::Row(1) => self.invariant.clone(),
            ClassId::Row(2..=4) => self.invariant.as_ref().and_then(Rational::sqrt_exact),
            _ => None,
        }
    }

    pub fn epsilon_squared(&self) -> Option<Rational> {
        match self.id {
            ClassId::Row(1) => self.invariant.as_ref().map(|e| e * e),
            ClassId::Row(2..=4) => self.invariant.clone(),
            _ => None,
        }
    }

    /// ε as a float (non-negative square root for classes 2–4).
    pub fn epsilon_f64(&self) -> Option<f64> {
        match self.id {
            ClassId::Row(1) => self.invariant.as_ref().map(Rational::to_f64),
            ClassId::Row(2..=4) => self.epsilon_exact().map(|e| e.to_f64()).or_else(|| {
                self.invariant.as_ref().map(|e2| e2.to_f64().sqrt())
            }),
            _ => None,
        }
    }

    /// Canonical representative, when ε is exactly representable.
    pub fn canonical(&self) -> Option<SixTuple<Rational>> {
        let eps = if self.id.has_epsilon() {
            Some(self.epsilon_exact()?)
        } else {
            None
        };
        canonical_rep(self.id, eps).ok()
    }

    pub fn canonical_f64(&self) -> SixTuple<f64> {
        canonical_rep_with(self.id, self.epsilon_f64().unwrap_or(0.0))
    }
}

/// JSON shape of a classification result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitClassJson {
    pub class: ClassId,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_exact: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_squared: Option<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    pub coboundary: bool,
}

impl From<&OrbitClass> for OrbitClassJson {
    fn from(c: &OrbitClass) -> Self {
        OrbitClassJson {
            class: c.id,
            epsilon_exact: c.epsilon_exact(),
            epsilon_squared: c.epsilon_squared(),
            epsilon: c.epsilon_f64(),
            coboundary: c.coboundary(),
        }
    }
}

impl TryFrom<&OrbitClassJson> for OrbitClass {
    type Error = Error;
    fn try_from(j: &OrbitClassJson) -> Result<Self> {
        match j.class {
            ClassId::Trivial => Ok(OrbitClass::trivial()),
            ClassId::Row(1) => {
                let eps = j
                    .epsilon_exact
                    .clone()
                    .ok_or(Error::MissingEpsilon(1))?;
                OrbitClass::with_epsilon(j.class, eps)
            }
            ClassId::Row(n @ 2..=4) => {
                let e2 = j.epsilon_squared.clone().ok_or(Error::MissingEpsilon(n))?;
                OrbitClass::with_epsilon_squared(j.class, e2)
            }
            id => OrbitClass::discrete(id),
        }
    }
}

/// Symmetric matrix `T` with `T₁₁ = ρ`, `T₂₂ = α`, `T₁₂ = (β+γ)/2` and the
/// data the `r = s = 0` classification needs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignatureData {
    pub t: [[Rational; 2]; 2],
    pub det: Rational,
    pub trace: Rational,
    pub beta_minus_gamma: Rational,
}

impl SignatureData {
    pub fn new(p: &SixTuple<Rational>) -> Self {
        let off = (&p.beta + &p.gamma) * Rational::new(1, 2);
        let t = [[p.rho.clone(), off.clone()], [off, p.alpha.clone()]];
        let det = &t[0][0] * &t[1][1] - &t[0][1] * &t[1][0];
        let trace = &t[0][0] + &t[1][1];
        SignatureData {
            t,
            det,
            trace,
            beta_minus_gamma: &p.beta - &p.gamma,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.t.iter().flatten().all(Rational::is_zero)
    }
}

/// Exact orbit of a bialgebra, without radicals.
pub fn classify(p: &SixTuple<Rational>) -> Result<OrbitClass> {
    p.check_bialgebra()?;
    if p.is_zero() {
        return Ok(OrbitClass::trivial());
    }
    if !(p.r.is_zero() && p.s.is_zero()) {
        let norm = &p.r * &p.r + &p.s * &p.s;
        let num = &p.s * &p.s * &p.alpha + &p.r * &p.s * (&p.beta + &p.gamma) + &p.r * &p.r * &p.rho;
        return OrbitClass::with_epsilon(ClassId::Row(1), num / (&norm * &norm));
    }
    let sig = SignatureData::new(p);
    let bmg = &sig.beta_minus_gamma;
    let eps2 = || {
        let denom = sig.det.abs() * Rational::from(4);
        bmg * bmg / denom
    };
    let (id, inv) = match (sig.det.signum(), sig.trace.signum()) {
        (1, 1) => (2, Some(eps2())),
        (1, _) => (3, Some(eps2())),
        (-1, _) => (4, Some(eps2())),
        (0, 1) => (if bmg.is_zero() { 5 } else { 6 }, None),
        (0, -1) => (if bmg.is_zero() { 7 } else { 8 }, None),
        _ => {
            // T = 0; p ≠ 0 forces β ≠ γ
            debug_assert!(sig.is_zero() && !bmg.is_zero());
            (9, None)
        }
    };
    match inv {
        Some(e2) => OrbitClass::with_epsilon_squared(ClassId::Row(id), e2),
        None => OrbitClass::discrete(ClassId::Row(id)),
    }
}

/// Canonical tuple over any scalar ring; no sign check on ε.
pub fn canonical_rep_with<S: Scalar>(id: ClassId, eps: S) -> SixTuple<S> {
    let z = S::zero;
    let o = S::one;
    let i = |n: i64| S::from_i64(n);
    match id {
        ClassId::Trivial => SixTuple::zero(),
        ClassId::Row(1) => SixTuple::new(z(), z(), z(), eps, o(), z()),
        ClassId::Row(2) => SixTuple::new(o(), eps.clone(), -eps, o(), z(), z()),
        ClassId::Row(3) => SixTuple::new(i(-1), eps.clone(), -eps, i(-1), z(), z()),
        ClassId::Row(4) => SixTuple::new(i(-1), eps.clone(), -eps, o(), z(), z()),
        ClassId::Row(5) => SixTuple::new(z(), z(), z(), o(), z(), z()),
        ClassId::Row(6) => SixTuple::new(z(), o(), i(-1), o(), z(), z()),
        ClassId::Row(7) => SixTuple::new(z(), z(), z(), i(-1), z(), z()),
        ClassId::Row(8) => SixTuple::new(z(), o(), i(-1), i(-1), z(), z()),
        ClassId::Row(9) => SixTuple::new(z(), o(), i(-1), z(), z(), z()),
        ClassId::Row(n) => panic!("no class {n}"),
    }
}

/// Canonical representative of a class; ε is required exactly for classes
/// 1–4 and must be non-negative for classes 2–4.
pub fn canonical_rep(id: ClassId, eps: Option<Rational>) -> Result<SixTuple<Rational>> {
    let label = match id {
        ClassId::Row(n) => n,
        ClassId::Trivial => 0,
    };
    match (id.has_epsilon(), eps) {
        (true, None) => Err(Error::MissingEpsilon(label)),
        (false, Some(_)) => Err(Error::UnexpectedEpsilon(label)),
        (true, Some(e)) => {
            if id != ClassId::Row(1) && e.is_negative() {
                return Err(Error::NegativeEpsilon {
                    class: label,
                    value: e.to_string(),
                });
            }
            Ok(canonical_rep_with(id, e))
        }
        (false, None) => Ok(canonical_rep_with(id, Rational::zero())),
    }
}

// ---------------------------------------------------------------------------
// Witnesses

/// Automorphism carrying a tuple to its canonical representative.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Exact(Automorphism<Rational>),
    Approximate(Automorphism<f64>),
}

impl Witness {
    pub fn as_f64(&self) -> Automorphism<f64> {
        match self {
            Witness::Exact(a) => a.to_f64(),
            Witness::Approximate(a) => a.clone(),
        }
    }

    /// Max-abs difference between `act(p, witness)` and the canonical tuple,
    /// evaluated in floating point.
    pub fn residual(&self, p: &SixTuple<Rational>, class: &OrbitClass) -> f64 {
        let Ok(image) = act(&p.to_f64(), &self.as_f64()) else {
            return f64::INFINITY;
        };
        let target = class.canonical_f64();
        image
            .to_array()
            .iter()
            .zip(target.to_array())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

/// An automorphism mapping `p` to `canonical_rep(class)`: exact for the
/// trivial class and classes 1 and 9, floating point for classes 2–8 where
/// the normalization needs square roots.
pub fn witness(p: &SixTuple<Rational>, class: &OrbitClass) -> Result<Witness> {
    let zero = Rational::zero;
    match class.id {
        ClassId::Trivial => Ok(Witness::Exact(Automorphism::identity())),
        ClassId::Row(1) => {
            // A = [[r, s], [−s, r]] sends (r, s) to (1, 0); x₂ kills β − γ
            let x2 = -(&p.beta - &p.gamma) * Rational::new(1, 2);
            Ok(Witness::Exact(Automorphism::new(
                p.r.clone(),
                p.s.clone(),
                -&p.s,
                p.r.clone(),
                zero(),
                x2,
            )))
        }
        ClassId::Row(9) => {
            // T = 0, so only Δ matters: β′ − γ′ = (β − γ)/Δ = 2
            let half = (&p.beta - &p.gamma) * Rational::new(1, 2);
            Ok(Witness::Exact(Automorphism::linear(half, zero(), zero(), Rational::one())))
        }
        ClassId::Row(_) => Ok(Witness::Approximate(signature_witness(p, class))),
    }
}

/// Diagonalize `T` by a rotation, order the eigenvalues to match the target
/// slots, rescale, then fix the sign of Δ so that `β′ − γ′ ≥ 0`.
fn signature_witness(p: &SixTuple<Rational>, class: &OrbitClass) -> Automorphism<f64> {
    let sig = SignatureData::new(p);
    let rho = sig.t[0][0].to_f64();
    let m = sig.t[0][1].to_f64();
    let alpha = sig.t[1][1].to_f64();
    let bmg = sig.beta_minus_gamma.to_f64();

    // rows u1, u2 orthonormal with T u_i = λ_i u_i; λ1 goes to the ρ slot
    let (u1, l1, u2, l2) = if sig.det.is_zero() {
        // rank one: λ1 = tr T with eigenvector along a nonzero row of T
        let v = if !sig.t[0][0].is_zero() || !sig.t[0][1].is_zero() {
            [rho, m]
        } else {
            [m, alpha]
        };
        let n = v[0].hypot(v[1]);
        let u1 = [v[0] / n, v[1] / n];
        (u1, sig.trace.to_f64(), [-u1[1], u1[0]], 0.0)
    } else {
        let theta = 0.5 * (2.0 * m).atan2(rho - alpha);
        let (sn, cs) = theta.sin_cos();
        let ua = [cs, sn];
        let ub = [-sn, cs];
        let la = rho * cs * cs + 2.0 * m * sn * cs + alpha * sn * sn;
        let lb = rho * sn * sn - 2.0 * m * sn * cs + alpha * cs * cs;
        // class 4 puts the positive eigenvalue in the ρ slot
        if la >= lb {
            (ua, la, ub, lb)
        } else {
            (ub, lb, ua, la)
        }
    };

    // T′ = diag(λ1/d2², λ2/d1²) after A = diag(d1, d2)·U
    let d2 = l1.abs().sqrt();
    let d1 = if sig.det.is_zero() {
        if bmg == 0.0 {
            1.0
        } else {
            bmg.abs() / (2.0 * d2)
        }
    } else {
        l2.abs().sqrt()
    };
    let mut u2 = u2;
    let det_u = u1[0] * u2[1] - u1[1] * u2[0];
    if bmg * det_u < 0.0 {
        u2 = [-u2[0], -u2[1]];
    }
    debug_assert!(class.id != ClassId::Row(1));
    Automorphism::linear(d1 * u1[0], d1 * u1[1], d2 * u2[0], d2 * u2[1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bialgebra::{cocycle_check, cojacobi_check};
    use crate::exact_algebra::{poly, q};
    use crate::lie_core::LieAlgebra;

    fn t(v: [i64; 6]) -> SixTuple<Rational> {
        SixTuple::from_array(v.map(Rational::from))
    }

    #[test]
    fn family_instance_is_a_cocycle() {
        let g = LieAlgebra::galilei();
        let p = SixTuple::new(q(2, 1), q(-1, 1), q(3, 1), q(1, 2), q(5, 1), q(-7, 1));
        assert!(cocycle_check(&g, &p.to_cocommutator()));
        assert_eq!(SixTuple::from_cocommutator(&p.to_cocommutator()), Some(p));
    }

    #[test]
    fn constraint_violation_detected() {
        let g = LieAlgebra::galilei();
        let p = t([1, 0, 0, 0, 1, 0]);
        assert!(!cojacobi_check(&g, &p.to_cocommutator()));
        let err = classify(&p).unwrap_err();
        assert!(matches!(err, Error::NotABialgebra { ref constraint, .. } if constraint.starts_with("2*r*alpha")));
    }

    #[test]
    fn compose_example() {
        let u = Automorphism::new(q(2, 1), q(0, 1), q(0, 1), q(1, 1), q(1, 1), q(0, 1));
        let w = Automorphism::new(q(1, 1), q(1, 1), q(0, 1), q(1, 1), q(0, 1), q(2, 1));
        let uw = u.compose(&w);
        assert_eq!(uw, Automorphism::new(q(2, 1), q(2, 1), q(0, 1), q(1, 1), q(1, 1), q(2, 1)));
        assert_eq!(Automorphism::identity().compose(&w), w);
    }

    #[test]
    fn inverse_automorphism() {
        let u = Automorphism::new(q(2, 1), q(3, 1), q(-1, 1), q(4, 1), q(5, 2), q(-1, 3));
        let inv = u.inverse().unwrap();
        assert_eq!(u.compose(&inv), Automorphism::identity());
        assert_eq!(inv.compose(&u), Automorphism::identity());
    }

    #[test]
    fn act_examples() {
        let p = t([7, 1, -2, 3, 4, 5]);
        assert_eq!(act(&p, &Automorphism::identity()).unwrap(), p);

        let swap = Automorphism::linear(q(0, 1), q(1, 1), q(1, 1), q(0, 1));
        let p = t([1, 0, 0, 2, 0, 0]);
        let out = act(&p, &swap).unwrap();
        assert_eq!((out.alpha.clone(), out.rho.clone()), (q(2, 1), q(1, 1)));
        let p = t([1, 3, 1, 1, 0, 0]);
        let out = act(&p, &swap).unwrap();
        assert_eq!(&out.beta - &out.gamma, -(&p.beta - &p.gamma));

        let dim = Automorphism::linear(poly("v0^-1"), Poly::zero(), Poly::zero(), poly("tau0^-1"));
        let row1 = canonical_rep_with(ClassId::Row(1), poly("eps"));
        let out = act(&row1, &dim).unwrap();
        assert_eq!(out, SixTuple::new(Poly::zero(), Poly::zero(), Poly::zero(), poly("eps*tau0^2"), poly("tau0"), Poly::zero()));
    }

    #[test]
    fn singular_automorphism_rejected() {
        let bad = Automorphism::linear(q(1, 1), q(2, 1), q(2, 1), q(4, 1));
        assert_eq!(act(&t([1, 0, 0, 1, 0, 0]), &bad), Err(Error::SingularAutomorphism));
    }

    #[test]
    fn canonical_reps() {
        assert_eq!(canonical_rep(ClassId::Row(1), Some(Rational::zero())).unwrap(), t([0, 0, 0, 0, 1, 0]));
        assert_eq!(canonical_rep(ClassId::Row(9), None).unwrap(), t([0, 1, -1, 0, 0, 0]));
        assert!(ClassId::Row(9).is_coboundary());
        assert_eq!(canonical_rep(ClassId::Row(5), None).unwrap(), t([0, 0, 0, 1, 0, 0]));
        assert_eq!(canonical_rep(ClassId::Row(4), Some(q(2, 1))).unwrap(), t([-1, 2, -2, 1, 0, 0]));
        assert!(matches!(
            canonical_rep(ClassId::Row(3), Some(q(-1, 2))),
            Err(Error::NegativeEpsilon { class: 3, .. })
        ));
        assert!(canonical_rep(ClassId::Row(2), None).is_err());
        assert!(canonical_rep(ClassId::Row(6), Some(q(1, 1))).is_err());
    }

    #[test]
    fn classify_canonical_rows() {
        let eps = q(3, 2);
        for id in ClassId::ROWS {
            let e = match id {
                ClassId::Row(1) => Some(q(-5, 7)),
                i if i.has_epsilon() => Some(eps.clone()),
                _ => None,
            };
            let p = canonical_rep(id, e.clone()).unwrap();
            let c = classify(&p).unwrap();
            assert_eq!(c.id, id);
            match id {
                ClassId::Row(1) => assert_eq!(c.epsilon_exact(), Some(q(-5, 7))),
                ClassId::Row(2..=4) => assert_eq!(c.epsilon_squared(), Some(q(9, 4))),
                _ => assert_eq!(c.epsilon_squared(), None),
            }
        }
        assert_eq!(classify(&SixTuple::zero()).unwrap(), OrbitClass::trivial());
    }

    #[test]
    fn class_json_round_trip() {
        for c in [
            OrbitClass::trivial(),
            OrbitClass::with_epsilon(ClassId::Row(1), q(-2, 3)).unwrap(),
            OrbitClass::with_epsilon_squared(ClassId::Row(3), q(2, 1)).unwrap(),
            OrbitClass::discrete(ClassId::Row(9)).unwrap(),
        ] {
            let j = serde_json::to_string(&OrbitClassJson::from(&c)).unwrap();
            let back: OrbitClassJson = serde_json::from_str(&j).unwrap();
            assert_eq!(OrbitClass::try_from(&back).unwrap(), c);
        }
    }

    #[test]
    fn witnesses() {
        // class 1 with r ≠ 0, s ≠ 0: act canonical row 1 by a fixed automorphism
        let phi = Automorphism::new(q(1, 2), q(2, 1), q(-3, 1), q(1, 1), q(4, 1), q(-1, 1));
        let p = act(&canonical_rep(ClassId::Row(1), Some(q(2, 3))).unwrap(), &phi).unwrap();
        let c = classify(&p).unwrap();
        let Witness::Exact(w) = witness(&p, &c).unwrap() else {
            panic!("class 1 witness must be exact");
        };
        assert_eq!(w.a, p.r);
        assert_eq!(w.c, -&p.s);
        assert_eq!(act(&p, &w).unwrap(), c.canonical().unwrap());

        let canon = canonical_rep(ClassId::Row(5), None).unwrap();
        let c = classify(&canon).unwrap();
        assert!(witness(&canon, &c).unwrap().residual(&canon, &c) < 1e-12);

        let p = SixTuple::new(q(2, 1), q(0, 1), q(0, 1), q(1, 2), q(0, 1), q(0, 1));
        let c = classify(&p).unwrap();
        assert_eq!(c.id, ClassId::Row(2));
        let w = witness(&p, &c).unwrap();
        assert!(matches!(w, Witness::Approximate(_)));
        assert!(w.residual(&p, &c) <= 1e-9);
    }
}
