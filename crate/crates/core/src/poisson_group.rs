//! The two-dimensional Galilei group in coordinates `(τ, v, a)`, its
//! multiplicative bivectors and the resulting Poisson–Lie brackets.
//!
//! Group law: `(τ,v,a)⋆(τ′,v′,a′) = (τ+τ′, v+v′, a+a′+vτ′)`. One-parameter
//! subgroups are `exp(tK) = (0,t,0)`, `exp(tH) = (−t,0,0)`, `exp(tP) = (0,0,t)`,
//! so at the identity `K = ∂v`, `H = −∂τ`, `P = ∂a`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_algebra::{LinearSystem, Monomial, Poly, Rational, Scalar};
use crate::galilei_orbits::{act, canonical_rep_with, Automorphism, ClassId, SixTuple};
use crate::lie_core::Wedge2;

pub const TAU: &str = "tau";
pub const V: &str = "v";
pub const A: &str = "a";
/// Coordinates of the second factor in two-point identities.
pub const TAU2: &str = "tau'";
pub const V2: &str = "v'";
pub const A2: &str = "a'";
/// Dimensionful constants and the class parameter.
pub const TAU0: &str = "tau0";
pub const V0: &str = "v0";
pub const EPS: &str = "eps";

const COORDS: [&str; 3] = [TAU, V, A];
const T: &str = "t";

const K: usize = 0;
const H: usize = 1;
const P: usize = 2;

/// Overall sign tying the bivector `η` to the Poisson bracket
/// `{f,g} = BRACKET_SIGN · Σ η^{kl} X^R_k f X^R_l g`; fixed by requiring
/// `{a,v} = −μ`, `{a,τ} = λ − ντ`, `{v,τ} = −ν`.
pub const BRACKET_SIGN: i64 = -1;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroupElement<S> {
    pub tau: S,
    pub v: S,
    pub a: S,
}

impl<S: Scalar> GroupElement<S> {
    pub fn new(tau: S, v: S, a: S) -> Self {
        GroupElement { tau, v, a }
    }

    pub fn identity() -> Self {
        GroupElement::new(S::zero(), S::zero(), S::zero())
    }

    pub fn compose(&self, h: &Self) -> Self {
        GroupElement::new(
            self.tau.clone() + h.tau.clone(),
            self.v.clone() + h.v.clone(),
            self.a.clone() + h.a.clone() + self.v.clone() * h.tau.clone(),
        )
    }

    pub fn inverse(&self) -> Self {
        GroupElement::new(
            -self.tau.clone(),
            -self.v.clone(),
            -self.a.clone() + self.v.clone() * self.tau.clone(),
        )
    }
}

impl GroupElement<Poly> {
    /// The generic point `(tau, v, a)`.
    pub fn symbolic() -> Self {
        GroupElement::new(Poly::var(TAU), Poly::var(V), Poly::var(A))
    }

    /// The generic point `(tau', v', a')`.
    pub fn symbolic_primed() -> Self {
        GroupElement::new(Poly::var(TAU2), Poly::var(V2), Poly::var(A2))
    }

    fn coords(&self) -> [&Poly; 3] {
        [&self.tau, &self.v, &self.a]
    }

    fn bindings(&self) -> BTreeMap<String, Poly> {
        COORDS
            .iter()
            .zip(self.coords())
            .map(|(n, p)| (n.to_string(), p.clone()))
            .collect()
    }
}

/// `exp(tX)` for the basis generator `X ∈ {K, H, P}`.
pub fn one_parameter<S: Scalar>(generator: usize, t: S) -> GroupElement<S> {
    match generator {
        K => GroupElement::new(S::zero(), t, S::zero()),
        H => GroupElement::new(-t, S::zero(), S::zero()),
        P => GroupElement::new(S::zero(), S::zero(), t),
        _ => panic!("generator index {generator} out of range"),
    }
}

/// `(dτ, dv, da)` of a curve polynomial in `t`, at `t = 0`.
fn velocity(g: &GroupElement<Poly>) -> [Poly; 3] {
    g.coords().map(|c| c.derivative(T).subs(&[(T, Poly::zero())]))
}

/// Tangent vector at the identity, expressed in `(K, H, P)`.
fn tangent_to_generators([dtau, dv, da]: [Poly; 3]) -> Vec<Poly> {
    vec![dv, -dtau, da]
}

/// Matrix of `Ad_g`: row `X` holds `Ad_g X` in the basis `(K, H, P)`, from
/// `d/dt g·exp(tX)·g⁻¹` at `t = 0`.
pub fn adjoint(g: &GroupElement<Poly>) -> Vec<Vec<Poly>> {
    (0..3)
        .map(|x| {
            let curve = g.compose(&one_parameter(x, Poly::var(T))).compose(&g.inverse());
            tangent_to_generators(velocity(&curve))
        })
        .collect()
}

/// `Ad_g` acting on `Λ²L`.
pub fn adjoint_wedge2(g: &GroupElement<Poly>, w: &Wedge2<Poly>) -> Wedge2<Poly> {
    w.transform(&adjoint(g))
}

// ---------------------------------------------------------------------------
// Vector fields

/// First-order differential operator `c_τ ∂τ + c_v ∂v + c_a ∂a`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VectorField {
    pub tau: Poly,
    pub v: Poly,
    pub a: Poly,
}

impl VectorField {
    pub fn new(tau: Poly, v: Poly, a: Poly) -> Self {
        VectorField { tau, v, a }
    }

    pub fn zero() -> Self {
        VectorField::new(Poly::zero(), Poly::zero(), Poly::zero())
    }

    fn components(&self) -> [&Poly; 3] {
        [&self.tau, &self.v, &self.a]
    }

    pub fn apply(&self, f: &Poly) -> Poly {
        self.components()
            .iter()
            .zip(COORDS)
            .map(|(c, x)| *c * &f.derivative(x))
            .sum()
    }

    /// Operator commutator `[X, Y] = XY − YX`.
    pub fn commutator(&self, other: &Self) -> Self {
        let comp = |i: usize| {
            let (x, y) = (self.components()[i], other.components()[i]);
            &self.apply(y) - &other.apply(x)
        };
        VectorField::new(comp(0), comp(1), comp(2))
    }

    pub fn scale(&self, c: &Poly) -> Self {
        VectorField::new(c * &self.tau, c * &self.v, c * &self.a)
    }

    pub fn is_zero(&self) -> bool {
        self.components().iter().all(|c| c.is_zero())
    }
}

impl std::ops::Neg for VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        VectorField::new(-self.tau, -self.v, -self.a)
    }
}

fn field_from_curve(curve: &GroupElement<Poly>) -> VectorField {
    let [tau, v, a] = velocity(curve);
    VectorField::new(tau, v, a)
}

/// Right-invariant fields `X^R f(g) = d/dt f(exp(tX)·g)`, indexed `K, H, P`.
pub fn right_invariant_fields() -> [VectorField; 3] {
    let g = GroupElement::symbolic();
    std::array::from_fn(|x| field_from_curve(&one_parameter(x, Poly::var(T)).compose(&g)))
}

/// Left-invariant fields `X^L f(g) = d/dt f(g·exp(tX))`, indexed `K, H, P`.
pub fn left_invariant_fields() -> [VectorField; 3] {
    let g = GroupElement::symbolic();
    std::array::from_fn(|x| field_from_curve(&g.compose(&one_parameter(x, Poly::var(T)))))
}

/// Left and right fields together.
pub fn invariant_fields() -> ([VectorField; 3], [VectorField; 3]) {
    (left_invariant_fields(), right_invariant_fields())
}

// ---------------------------------------------------------------------------
// Multiplicative bivectors

/// `η(τ,v,a) = λ P∧H + μ P∧K + ν H∧K`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EtaMap {
    pub lambda: Poly,
    pub mu: Poly,
    pub nu: Poly,
}

impl EtaMap {
    pub fn new(lambda: Poly, mu: Poly, nu: Poly) -> Self {
        EtaMap { lambda, mu, nu }
    }

    pub fn zero() -> Self {
        EtaMap::new(Poly::zero(), Poly::zero(), Poly::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.lambda.is_zero() && self.mu.is_zero() && self.nu.is_zero()
    }

    pub fn to_wedge2(&self) -> Wedge2<Poly> {
        let mut w = Wedge2::zero(3);
        w.add_term(P, H, self.lambda.clone());
        w.add_term(P, K, self.mu.clone());
        w.add_term(H, K, self.nu.clone());
        w
    }

    pub fn from_wedge2(w: &Wedge2<Poly>) -> Self {
        EtaMap::new(w.get(P, H), w.get(P, K), w.get(H, K))
    }

    /// `η` evaluated at a (possibly symbolic) group element.
    pub fn at(&self, g: &GroupElement<Poly>) -> Self {
        let b = g.bindings();
        EtaMap::new(
            self.lambda.substitute(&b),
            self.mu.substitute(&b),
            self.nu.substitute(&b),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        EtaMap::new(&self.lambda + &o.lambda, &self.mu + &o.mu, &self.nu + &o.nu)
    }

    pub fn scale(&self, c: &Poly) -> Self {
        EtaMap::new(c * &self.lambda, c * &self.mu, c * &self.nu)
    }

    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Self {
        EtaMap::new(
            self.lambda.subs(bindings),
            self.mu.subs(bindings),
            self.nu.subs(bindings),
        )
    }
}

impl fmt::Display for EtaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ = {}, μ = {}, ν = {}", self.lambda, self.mu, self.nu)
    }
}

/// `η(g⋆h) − η(g) − Ad_g η(h)` at generic `g = (tau,v,a)`, `h = (tau',v',a')`.
pub fn multiplicativity_residual(eta: &EtaMap) -> EtaMap {
    let g = GroupElement::symbolic();
    let h = GroupElement::symbolic_primed();
    let lhs = eta.at(&g.compose(&h)).to_wedge2();
    let rhs = eta.to_wedge2().add(&adjoint_wedge2(&g, &eta.at(&h).to_wedge2()));
    EtaMap::from_wedge2(&lhs.sub(&rhs))
}

pub fn multiplicativity_check(eta: &EtaMap) -> bool {
    multiplicativity_residual(eta).is_zero()
}

/// Monomials `τ^i v^j a^k` with `i + j + k ≤ max_degree`.
fn coordinate_monomials(max_degree: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for i in 0..=max_degree {
        for j in 0..=max_degree - i {
            for k in 0..=max_degree - i - j {
                out.push((i, j, k));
            }
        }
    }
    out
}

fn coordinate_monomial((i, j, k): (u32, u32, u32)) -> Poly {
    Poly::var(TAU).pow(i) * Poly::var(V).pow(j) * Poly::var(A).pow(k)
}

/// Basis of all multiplicative `η` whose components are polynomials of
/// degree at most `max_degree`, found by an exact linear solve over every
/// coefficient.
pub fn eta_solve(max_degree: u32) -> Result<Vec<EtaMap>> {
    let monos = coordinate_monomials(max_degree);
    let unknown = |comp: &str, (i, j, k): (u32, u32, u32)| format!("{comp}_{i}{j}{k}");
    let ansatz = |comp: &str| -> Poly {
        monos
            .iter()
            .map(|&m| Poly::var(&unknown(comp, m)) * coordinate_monomial(m))
            .sum()
    };
    let generic = EtaMap::new(ansatz("cl"), ansatz("cm"), ansatz("cn"));
    let names: Vec<String> = ["cl", "cm", "cn"]
        .iter()
        .flat_map(|c| monos.iter().map(move |&m| unknown(c, m)))
        .collect();
    let res = multiplicativity_residual(&generic);
    let sys = LinearSystem::from_identities(&names, [&res.lambda, &res.mu, &res.nu])?;
    let order = sys.unknowns().to_vec();
    Ok(sys
        .null_space()
        .into_iter()
        .map(|x| {
            let b: Vec<(&str, Poly)> = order
                .iter()
                .zip(x)
                .map(|(n, c)| (n.as_str(), Poly::constant(c)))
                .collect();
            generic.substitute(&b)
        })
        .collect())
}

/// True iff `eta` is a linear combination of `basis` with rational
/// coefficients.
pub fn eta_in_span(basis: &[EtaMap], eta: &EtaMap) -> bool {
    let names: Vec<String> = (0..basis.len()).map(|i| format!("x{i:04}")).collect();
    let mut combo = eta.scale(&Poly::int(-1));
    for (n, b) in names.iter().zip(basis) {
        combo = combo.add(&b.scale(&Poly::var(n)));
    }
    match LinearSystem::from_identities(&names, [&combo.lambda, &combo.mu, &combo.nu]) {
        Ok(sys) => sys.solve().is_some(),
        Err(_) => false,
    }
}

/// Coordinates `(b, c, d, e, f, k)` of the solved multiplicative family.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EtaParams<S> {
    pub b: S,
    pub c: S,
    pub d: S,
    pub e: S,
    pub f: S,
    pub k: S,
}

pub const ETA_PARAM_NAMES: [&str; 6] = ["b", "c", "d", "e", "f", "k"];

impl<S: Scalar> EtaParams<S> {
    pub fn from_array([b, c, d, e, f, k]: [S; 6]) -> Self {
        EtaParams { b, c, d, e, f, k }
    }

    pub fn to_array(&self) -> [S; 6] {
        [
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
            self.f.clone(),
            self.k.clone(),
        ]
    }

    /// `(b,c,d,e,f,k) = (s, −β, −r, ρ, −γ, α)`.
    pub fn from_tuple(p: &SixTuple<S>) -> Self {
        EtaParams::from_array([
            p.s.clone(),
            -p.beta.clone(),
            -p.r.clone(),
            p.rho.clone(),
            -p.gamma.clone(),
            p.alpha.clone(),
        ])
    }

    pub fn to_tuple(&self) -> SixTuple<S> {
        SixTuple::new(
            self.k.clone(),
            -self.c.clone(),
            -self.f.clone(),
            self.e.clone(),
            -self.d.clone(),
            self.b.clone(),
        )
    }
}

impl<S: Scalar + Into<Poly>> EtaParams<S> {
    /// ```text
    /// λ = b/2 τ² + cτ + d(vτ − a) + ev
    /// μ = kτ − ba + fv − d/2 v²
    /// ν = bτ + dv
    /// ```
    pub fn to_eta(&self) -> EtaMap {
        let [b, c, d, e, f, k]: [Poly; 6] = self.to_array().map(Into::into);
        let (tau, v, a) = (Poly::var(TAU), Poly::var(V), Poly::var(A));
        let half = Poly::constant(Rational::new(1, 2));
        let lambda = &half * &b * tau.pow(2) + &c * &tau + &d * &(&v * &tau - a.clone()) + &e * &v;
        let mu = &k * &tau - &b * &a + &f * &v - &half * &d * v.pow(2);
        let nu = &b * &tau + &d * &v;
        EtaMap::new(lambda, mu, nu)
    }
}

impl EtaParams<Poly> {
    /// Reads `(b,c,d,e,f,k)` off `η`; `None` if `η` is not in the family.
    pub fn from_eta(eta: &EtaMap) -> Option<Self> {
        let coeff = |p: &Poly, var: &str| -> Poly {
            p.coefficients_in(&COORDS)
                .remove(&Monomial::var(var))
                .unwrap_or_default()
        };
        let params = EtaParams::from_array([
            coeff(&eta.nu, TAU),
            coeff(&eta.lambda, TAU),
            coeff(&eta.nu, V),
            coeff(&eta.lambda, V),
            coeff(&eta.mu, V),
            coeff(&eta.mu, TAU),
        ]);
        (params.to_eta() == *eta).then_some(params)
    }
}

/// The six family members with one of `b, c, d, e, f, k` equal to 1.
pub fn eta_family_basis() -> Vec<EtaMap> {
    (0..6)
        .map(|i| {
            EtaParams::from_array(std::array::from_fn(|j| Rational::from(i64::from(i == j)))).to_eta()
        })
        .collect()
}

/// `δ(X) = d/dt η(exp(tX))` at `t = 0`.
pub fn linearize(eta: &EtaMap) -> Vec<Wedge2<Poly>> {
    let w = eta.to_wedge2();
    (0..3)
        .map(|x| {
            let g = one_parameter(x, Poly::var(T));
            let b = g.bindings();
            w.map(|c| c.substitute(&b).derivative(T).subs(&[(T, Poly::zero())]))
        })
        .collect()
}

/// The cocommutator tangent to a multiplicative `η`, as a parameter tuple.
pub fn delta_from_eta(eta: &EtaMap) -> Result<SixTuple<Poly>> {
    if !multiplicativity_check(eta) {
        return Err(Error::NotMultiplicative);
    }
    let delta = crate::bialgebra::Cocommutator::new(linearize(eta));
    SixTuple::from_cocommutator(&delta)
        .ok_or_else(|| Error::Dimension("linearization left the six-parameter family".into()))
}

/// The family member integrating `p`; rejects tuples violating co-Jacobi.
pub fn eta_from_params(p: &SixTuple<Poly>) -> Result<EtaMap> {
    for (value, text) in p.constraints().iter().zip(crate::galilei_orbits::CONSTRAINT_TEXT) {
        if !value.is_zero() {
            return Err(Error::NotABialgebra {
                constraint: format!("{text} = 0"),
                value: value.to_string(),
            });
        }
    }
    Ok(eta_from_params_unchecked(p))
}

/// As [`eta_from_params`] without the co-Jacobi guard.
pub fn eta_from_params_unchecked(p: &SixTuple<Poly>) -> EtaMap {
    EtaParams::from_tuple(p).to_eta()
}

// ---------------------------------------------------------------------------
// Poisson brackets

/// `{a,v}`, `{a,τ}`, `{v,τ}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BracketTable {
    pub a_v: Poly,
    pub a_tau: Poly,
    pub v_tau: Poly,
}

impl BracketTable {
    pub fn zero() -> Self {
        BracketTable {
            a_v: Poly::zero(),
            a_tau: Poly::zero(),
            v_tau: Poly::zero(),
        }
    }

    pub fn from_strs(a_v: &str, a_tau: &str, v_tau: &str) -> Result<Self> {
        Ok(BracketTable {
            a_v: a_v.parse()?,
            a_tau: a_tau.parse()?,
            v_tau: v_tau.parse()?,
        })
    }

    pub fn substitute(&self, bindings: &[(&str, Poly)]) -> Self {
        BracketTable {
            a_v: self.a_v.subs(bindings),
            a_tau: self.a_tau.subs(bindings),
            v_tau: self.v_tau.subs(bindings),
        }
    }

    /// `{f, g}` of the bivector with these coordinate brackets.
    pub fn bracket(&self, f: &Poly, g: &Poly) -> Poly {
        let d = |p: &Poly, x: &str| p.derivative(x);
        let pair = |x: &str, y: &str| &d(f, x) * &d(g, y) - &d(f, y) * &d(g, x);
        &self.a_v * &pair(A, V) + &self.a_tau * &pair(A, TAU) + &self.v_tau * &pair(V, TAU)
    }

    /// `{{a,v},τ} + {{v,τ},a} + {{τ,a},v}`.
    pub fn jacobiator(&self) -> Poly {
        let (tau, v, a) = (Poly::var(TAU), Poly::var(V), Poly::var(A));
        self.bracket(&self.a_v, &tau) + self.bracket(&self.v_tau, &a) + self.bracket(&-&self.a_tau, &v)
    }
}

/// Jacobi on the coordinate triple, which suffices for a bivector on three
/// coordinates.
pub fn jacobi_check(bt: &BracketTable) -> bool {
    bt.jacobiator().is_zero()
}

/// `{f,g}` induced by `η` through the right-invariant fields.
pub fn poisson_bracket(eta: &EtaMap, f: &Poly, g: &Poly) -> Poly {
    let fields = right_invariant_fields();
    let xf: Vec<Poly> = fields.iter().map(|x| x.apply(f)).collect();
    let xg: Vec<Poly> = fields.iter().map(|x| x.apply(g)).collect();
    let w = eta.to_wedge2();
    let sum: Poly = w
        .pairs()
        .zip(w.coeffs())
        .map(|((k, l), c)| c * &(&xf[k] * &xg[l] - &xf[l] * &xg[k]))
        .sum();
    sum.scale(&Rational::from(BRACKET_SIGN))
}

pub fn coordinate_brackets(eta: &EtaMap) -> BracketTable {
    let (tau, v, a) = (Poly::var(TAU), Poly::var(V), Poly::var(A));
    BracketTable {
        a_v: poisson_bracket(eta, &a, &v),
        a_tau: poisson_bracket(eta, &a, &tau),
        v_tau: poisson_bracket(eta, &v, &tau),
    }
}

// ---------------------------------------------------------------------------
// Dimensionful table

/// `K ↦ K/v0`, `H ↦ H/τ0` (so `P ↦ P/(v0τ0)`).
pub fn dimensionful_automorphism() -> Automorphism<Poly> {
    let inv = |s: &str| Poly::var(s).try_inverse().expect("monomial");
    Automorphism::linear(inv(V0), Poly::zero(), Poly::zero(), inv(TAU0))
}

/// Canonical tuple of a class in dimensionful generators, with `ε` symbolic.
pub fn dimensionful_tuple(id: ClassId) -> SixTuple<Poly> {
    let eps = if id.has_epsilon() { Poly::var(EPS) } else { Poly::zero() };
    act(&canonical_rep_with(id, eps), &dimensionful_automorphism()).expect("nonsingular")
}

/// Coordinate brackets of the Poisson–Lie structure of class `id`, symbolic
/// in `tau0`, `v0` and (for classes 1–4) `eps`.
pub fn table2_row(id: ClassId) -> Result<BracketTable> {
    if id == ClassId::Trivial {
        return Ok(BracketTable::zero());
    }
    Ok(coordinate_brackets(&eta_from_params(&dimensionful_tuple(id))?))
}

/// Numeric or partially numeric instantiation of [`table2_row`].
pub fn table2_row_with(
    id: ClassId,
    eps: Option<&Rational>,
    tau0: Option<&Rational>,
    v0: Option<&Rational>,
) -> Result<BracketTable> {
    let mut binds = Vec::new();
    for (name, val) in [(EPS, eps), (TAU0, tau0), (V0, v0)] {
        if let Some(x) = val {
            if name != EPS && x.is_zero() {
                return Err(Error::Dimension(format!("{name} must be nonzero")));
            }
            binds.push((name, Poly::constant(x.clone())));
        }
    }
    Ok(table2_row(id)?.substitute(&binds))
}

/// Remarks column: the admissible range of ε.
pub fn epsilon_remark(id: ClassId) -> &'static str {
    match id {
        ClassId::Row(1) => "eps real",
        ClassId::Row(2..=4) => "eps >= 0",
        _ => "",
    }
}

pub const TABLE2_HEADER: &str = "| class | {a,v} | {a,tau} | {v,tau} | remarks |\n|---|---|---|---|---|";

pub fn markdown_row(id: ClassId, bt: &BracketTable, remark: &str) -> String {
    format!("| {id} | {} | {} | {} | {remark} |", bt.a_v, bt.a_tau, bt.v_tau)
}
