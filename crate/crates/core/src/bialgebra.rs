//! Cocommutators, the cocycle and co-Jacobi conditions, the general cocycle
//! solver, and the coboundary toolchain (Schouten bracket, CYBE, mCYBE).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::exact_algebra::{LinearSystem, Poly, Rational, Scalar};
use crate::lie_core::{
    ad_wedge2_vec, ad_wedge3, jacobi_residuals, LieAlgebra, StructureConstants, Wedge2, Wedge3,
};

/// Linear map `L → Λ²L` given by its values on the basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Cocommutator<S> {
    images: Vec<Wedge2<S>>,
}

impl<S: Scalar> std::fmt::Debug for Cocommutator<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.images).finish()
    }
}

impl<S: Scalar> Cocommutator<S> {
    pub fn new(images: Vec<Wedge2<S>>) -> Self {
        let n = images.len();
        assert!(
            images.iter().all(|w| w.dim() == n),
            "cocommutator images must live in Λ² of the same algebra"
        );
        Cocommutator { images }
    }

    pub fn zero(dim: usize) -> Self {
        Cocommutator {
            images: vec![Wedge2::zero(dim); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> &Wedge2<S> {
        &self.images[i]
    }

    pub fn images(&self) -> &[Wedge2<S>] {
        &self.images
    }

    /// `δ(x)` for `x` given by coordinates.
    pub fn apply(&self, x: &[S]) -> Wedge2<S> {
        self.images
            .iter()
            .zip(x)
            .fold(Wedge2::zero(self.dim()), |acc, (w, c)| acc.add(&w.scale(c)))
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Wedge2::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        Cocommutator {
            images: self
                .images
                .iter()
                .zip(&other.images)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        Cocommutator {
            images: self.images.iter().map(|w| w.scale(c)).collect(),
        }
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T + Copy) -> Cocommutator<T> {
        Cocommutator {
            images: self.images.iter().map(|w| w.map(f)).collect(),
        }
    }

    /// All coefficients, generator-major then pair order.
    pub fn flat_coeffs(&self) -> Vec<S> {
        self.images
            .iter()
            .flat_map(|w| w.coeffs().iter().cloned())
            .collect()
    }

    /// Dual structure constants `f[i][j][k]`: coefficient of `Xᵢ∧Xⱼ` in
    /// `δ(Xₖ)`, read as the bracket `[ξⁱ, ξʲ] = Σₖ f[i][j][k] ξᵏ` on the dual.
    pub fn dual_constants(&self) -> StructureConstants<S> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.images[k].get(i, j)).collect())
                    .collect()
            })
            .collect()
    }
}

impl Cocommutator<Rational> {
    pub fn to_poly(&self) -> Cocommutator<Poly> {
        self.map(|c| Poly::constant(c.clone()))
    }
}

/// JSON form: generator name ↦ list of `[coeff, "X∧Y"]` pairs. Coefficients
/// are polynomial text, so symbolic constants are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct CocommutatorSpec(pub BTreeMap<String, Vec<(Poly, String)>>);

/// Parses `"X∧Y"` (also accepts `^` or `/\` as the wedge) into basis indices.
pub fn parse_wedge_label(alg: &LieAlgebra, label: &str) -> Result<(usize, usize)> {
    let normalized = label.replace("/\\", "∧").replace('^', "∧");
    let (x, y) = normalized
        .split_once('∧')
        .ok_or_else(|| ParseError::new(format!("wedge label `{label}` must look like X∧Y")))?;
    let idx = |s: &str| {
        alg.index_of(s.trim())
            .ok_or_else(|| Error::from(ParseError::new(format!("unknown generator `{}`", s.trim()))))
    };
    Ok((idx(x)?, idx(y)?))
}

impl CocommutatorSpec {
    pub fn build(&self, alg: &LieAlgebra) -> Result<Cocommutator<Poly>> {
        let n = alg.dim();
        let mut images = vec![Wedge2::<Poly>::zero(n); n];
        for (gen, terms) in &self.0 {
            let i = alg
                .index_of(gen)
                .ok_or_else(|| ParseError::new(format!("unknown generator `{gen}`")))?;
            for (coeff, label) in terms {
                let (a, b) = parse_wedge_label(alg, label)?;
                if a == b {
                    return Err(ParseError::new(format!("degenerate wedge `{label}`")).into());
                }
                images[i].add_term(a, b, coeff.clone());
            }
        }
        Ok(Cocommutator::new(images))
    }

    pub fn from_cocommutator<S: Scalar + Into<Poly>>(alg: &LieAlgebra, d: &Cocommutator<S>) -> Self {
        let labels = alg.basis();
        let mut out = BTreeMap::new();
        for (i, w) in d.images().iter().enumerate() {
            let terms: Vec<(Poly, String)> = w
                .pairs()
                .zip(w.coeffs())
                .filter(|(_, c)| !c.is_zero())
                .map(|((a, b), c)| (c.clone().into(), format!("{}∧{}", labels[a], labels[b])))
                .collect();
            out.insert(labels[i].clone(), terms);
        }
        CocommutatorSpec(out)
    }
}

// ---------------------------------------------------------------------------
// Cocycle condition

/// `δ([X,Y]) − X·δ(Y) + Y·δ(X)` for every basis pair `i<j`.
pub fn cocycle_residuals<S: Scalar>(alg: &LieAlgebra, delta: &Cocommutator<S>) -> Vec<Wedge2<S>> {
    let n = alg.dim();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let ei = alg.unit::<S>(i);
            let ej = alg.unit::<S>(j);
            let lhs = delta.apply(&alg.bracket(&ei, &ej));
            let rhs = ad_wedge2_vec(alg, &ei, delta.image(j)).sub(&ad_wedge2_vec(alg, &ej, delta.image(i)));
            out.push(lhs.sub(&rhs));
        }
    }
    out
}

pub fn cocycle_check<S: Scalar>(alg: &LieAlgebra, delta: &Cocommutator<S>) -> bool {
    delta.dim() == alg.dim() && cocycle_residuals(alg, delta).iter().all(Wedge2::is_zero)
}

fn unknown_name(gen: usize, pair: usize) -> String {
    format!("d{gen:03}_{pair:03}")
}

/// The general cocommutator with one unknown symbol per coefficient.
pub fn generic_cocommutator(alg: &LieAlgebra) -> (Cocommutator<Poly>, Vec<String>) {
    let n = alg.dim();
    let npairs = n * n.saturating_sub(1) / 2;
    let mut names = Vec::new();
    let images = (0..n)
        .map(|g| {
            let coeffs = (0..npairs)
                .map(|p| {
                    let name = unknown_name(g, p);
                    names.push(name.clone());
                    Poly::var(&name)
                })
                .collect();
            Wedge2::from_coeffs(n, coeffs)
        })
        .collect();
    (Cocommutator::new(images), names)
}

/// Basis of the space of 1-cocycles `L → Λ²L`.
pub fn cocycle_space(alg: &LieAlgebra) -> Vec<Cocommutator<Rational>> {
    let n = alg.dim();
    let (generic, names) = generic_cocommutator(alg);
    let residuals: Vec<Poly> = cocycle_residuals(alg, &generic)
        .into_iter()
        .flat_map(|w| w.coeffs().to_vec())
        .collect();
    let sys = LinearSystem::from_identities(&names, residuals.iter())
        .expect("cocycle conditions are linear in the coefficients");
    // the system orders unknowns lexicographically; names were generated in
    // that same order
    debug_assert_eq!(sys.unknowns(), names.as_slice());
    let npairs = n * n.saturating_sub(1) / 2;
    sys.null_space()
        .into_iter()
        .map(|v| {
            Cocommutator::new(
                v.chunks(npairs.max(1))
                    .take(n)
                    .map(|c| Wedge2::from_coeffs(n, c[..npairs].to_vec()))
                    .collect(),
            )
        })
        .collect()
}

/// Exact membership test: is `delta` a linear combination of `basis`?
pub fn in_span(basis: &[Cocommutator<Rational>], delta: &Cocommutator<Rational>) -> bool {
    let names: Vec<String> = (0..basis.len()).map(|k| format!("x{k:04}")).collect();
    let target = delta.flat_coeffs();
    let mut sys = LinearSystem::new(&names);
    for (row, t) in target.iter().enumerate() {
        let coeffs: BTreeMap<String, Rational> = basis
            .iter()
            .zip(&names)
            .map(|(b, name)| (name.clone(), b.flat_coeffs()[row].clone()))
            .collect();
        sys.add_row(coeffs, t.clone()).expect("declared unknowns");
    }
    sys.solve().is_some()
}

// ---------------------------------------------------------------------------
// Co-Jacobi

/// Jacobiator components of the dual bracket read off from `δ`.
pub fn cojacobi_residuals<S: Scalar>(delta: &Cocommutator<S>) -> Vec<S> {
    jacobi_residuals(&delta.dual_constants())
}

pub fn cojacobi_check<S: Scalar>(alg: &LieAlgebra, delta: &Cocommutator<S>) -> bool {
    delta.dim() == alg.dim() && cojacobi_residuals(delta).iter().all(S::is_zero)
}

/// Polynomial constraints on the parameters of a symbolic family equivalent
/// to co-Jacobi. Each constraint is scaled to integer coprime coefficients
/// with a positive leading coefficient; duplicates and zeros are dropped and
/// the result is sorted by its text form.
pub fn cojacobi_ideal(alg: &LieAlgebra, family: &Cocommutator<Poly>) -> Vec<Poly> {
    assert_eq!(alg.dim(), family.dim(), "family does not match the algebra");
    normalize_constraints(cojacobi_residuals(family))
}

/// Canonical form for a set of polynomial constraints.
pub fn normalize_constraints(polys: impl IntoIterator<Item = Poly>) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    for p in polys {
        let p = p.primitive();
        if !p.is_zero() && !out.contains(&p) {
            out.push(p);
        }
    }
    out.sort_by_key(|p| p.to_string());
    out
}

// ---------------------------------------------------------------------------
// Coboundaries and the Schouten bracket

/// An r-matrix is simply an element of Λ²L.
pub type RMatrix<S> = Wedge2<S>;

/// Galilei r-matrix `a·P∧H + b·P∧K + c·H∧K` in basis `(K, H, P)`.
pub fn galilei_r_matrix<S: Scalar>(a: S, b: S, c: S) -> RMatrix<S> {
    let (k, h, p) = (0, 1, 2);
    let mut r = Wedge2::zero(3);
    r.add_term(p, h, a);
    r.add_term(p, k, b);
    r.add_term(h, k, c);
    r
}

/// `[[r,r]] = [r₁₂,r₁₃] + [r₁₂,r₂₃] + [r₁₃,r₂₃]`, expanded on the full tensor
/// cube and projected to Λ³.
pub fn schouten<S: Scalar>(alg: &LieAlgebra, r: &RMatrix<S>) -> Wedge3<S> {
    let n = alg.dim();
    let t = r.to_tensor();
    let c = alg.constants();
    let mut cube = vec![vec![vec![S::zero(); n]; n]; n];
    let mut add = |p: usize, q: usize, s: usize, v: S| {
        cube[p][q][s] = cube[p][q][s].clone() + v;
    };
    for i in 0..n {
        for j in 0..n {
            if t[i][j].is_zero() {
                continue;
            }
            for k in 0..n {
                for l in 0..n {
                    if t[k][l].is_zero() {
                        continue;
                    }
                    let rr = t[i][j].clone() * t[k][l].clone();
                    for m in 0..n {
                        // [r12, r13]: [Xi,Xk] ⊗ Xj ⊗ Xl
                        if !c[i][k][m].is_zero() {
                            add(m, j, l, rr.clone() * S::from_rational(&c[i][k][m]));
                        }
                        // [r12, r23]: Xi ⊗ [Xj,Xk] ⊗ Xl
                        if !c[j][k][m].is_zero() {
                            add(i, m, l, rr.clone() * S::from_rational(&c[j][k][m]));
                        }
                        // [r13, r23]: Xi ⊗ Xk ⊗ [Xj,Xl]
                        if !c[j][l][m].is_zero() {
                            add(i, k, m, rr.clone() * S::from_rational(&c[j][l][m]));
                        }
                    }
                }
            }
        }
    }
    // antisymmetrizing projection; with u∧v∧w the six-term alternating sum,
    // the coefficient of Xi∧Xj∧Xk is (1/6) Σ sgn(σ) cube[σ(i,j,k)]
    let sixth = S::from_rational(&Rational::new(1, 6));
    let mut out = Wedge3::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let alt = cube[i][j][k].clone() + cube[j][k][i].clone() + cube[k][i][j].clone()
                    - cube[j][i][k].clone()
                    - cube[i][k][j].clone()
                    - cube[k][j][i].clone();
                out.add_term(i, j, k, alt * sixth.clone());
            }
        }
    }
    out
}

/// Coefficient `κ` with `[[c·H∧K, c·H∧K]] = κ c² P∧K∧H` on the Galilei
/// algebra. Measured by brute-force tensor expansion in the test suite.
pub const SCHOUTEN_KAPPA: i64 = 1;

pub fn cybe_check<S: Scalar>(alg: &LieAlgebra, r: &RMatrix<S>) -> bool {
    schouten(alg, r).is_zero()
}

/// `ad_X [[r,r]] = 0` for every basis element.
pub fn mcybe_check<S: Scalar>(alg: &LieAlgebra, r: &RMatrix<S>) -> bool {
    let rr = schouten(alg, r);
    (0..alg.dim()).all(|x| ad_wedge3(alg, x, &rr).is_zero())
}

/// Sign relating the coboundary `δ(X) = COBOUNDARY_SIGN · X·r` to the
/// derivation action. It absorbs the product of imaginary units in the
/// physics convention `δ(X) = i[1⊗X + X⊗1, r]` with `[K,H] = iP`.
pub const COBOUNDARY_SIGN: i64 = -1;

pub fn delta_from_r<S: Scalar>(alg: &LieAlgebra, r: &RMatrix<S>) -> Cocommutator<S> {
    let sign = S::from_i64(COBOUNDARY_SIGN);
    Cocommutator::new(
        (0..alg.dim())
            .map(|x| ad_wedge2_vec(alg, &alg.unit::<S>(x), r).scale(&sign))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{poly, q};

    const K: usize = 0;
    const H: usize = 1;
    const P: usize = 2;

    fn delta(images: [&[(usize, usize, i64)]; 3]) -> Cocommutator<Rational> {
        Cocommutator::new(
            images
                .iter()
                .map(|terms| {
                    let mut w = Wedge2::zero(3);
                    for &(i, j, c) in terms.iter() {
                        w.add_term(i, j, Rational::from(c));
                    }
                    w
                })
                .collect(),
        )
    }

    #[test]
    fn zero_is_a_bialgebra() {
        let g = LieAlgebra::galilei();
        let z = Cocommutator::<Rational>::zero(3);
        assert!(cocycle_check(&g, &z));
        assert!(cojacobi_check(&g, &z));
    }

    #[test]
    fn hk_image_of_p_is_not_a_cocycle() {
        let g = LieAlgebra::galilei();
        let d = delta([&[], &[], &[(H, K, 1)]]);
        assert!(!cocycle_check(&g, &d));
    }

    #[test]
    fn abelian_cocycles_are_everything() {
        let ab = LieAlgebra::abelian(&["X", "Y", "Z"]);
        assert_eq!(cocycle_space(&ab).len(), 9);
    }

    #[test]
    fn two_dimensional_nonabelian() {
        // [X,Y]=Y: Λ² is spanned by X∧Y and both sides of the cocycle
        // condition reduce to δ(Y), so every linear map is a cocycle.
        let alg = LieAlgebra::from_brackets(&["X", "Y"], &[("X", "Y", &[("Y", Rational::one())])]).unwrap();
        let space = cocycle_space(&alg);
        assert_eq!(space.len(), 2);
        assert!(space.iter().all(|d| cocycle_check(&alg, d)));
    }

    #[test]
    fn cocommutator_json_round_trip() {
        let g = LieAlgebra::galilei();
        let json = r#"{"P": [["1", "K∧P"], ["-2", "H^P"]], "K": [["eps", "P∧H"]]}"#;
        let spec: CocommutatorSpec = serde_json::from_str(json).unwrap();
        let d = spec.build(&g).unwrap();
        assert_eq!(d.image(P).get(K, P), Poly::one());
        assert_eq!(d.image(P).get(H, P), Poly::int(-2));
        assert_eq!(d.image(K).get(H, P), -poly("eps"));
        let back = CocommutatorSpec::from_cocommutator(&g, &d);
        assert_eq!(back.build(&g).unwrap(), d);
        let bad: CocommutatorSpec = serde_json::from_str(r#"{"Q": [["1", "K∧P"]]}"#).unwrap();
        assert!(bad.build(&g).is_err());
    }

    #[test]
    fn coboundary_examples() {
        let g = LieAlgebra::galilei();
        let c = q(3, 1);
        let d = delta_from_r(&g, &galilei_r_matrix(Rational::zero(), Rational::zero(), c.clone()));
        assert!(d.image(P).is_zero());
        assert_eq!(d.image(H), &Wedge2::basis(3, H, P, c.clone()));
        assert_eq!(d.image(K), &Wedge2::basis(3, K, P, c));
        let d = delta_from_r(&g, &galilei_r_matrix(q(5, 1), Rational::zero(), Rational::zero()));
        assert!(d.is_zero());
        assert!(delta_from_r(&g, &Wedge2::<Rational>::zero(3)).is_zero());
    }

    #[test]
    fn schouten_examples() {
        let g = LieAlgebra::galilei();
        let r = galilei_r_matrix(q(2, 1), q(-7, 3), Rational::zero());
        assert!(schouten(&g, &r).is_zero());
        assert!(cybe_check(&g, &r));
        let r = galilei_r_matrix(Rational::zero(), Rational::zero(), Rational::one());
        let rr = schouten(&g, &r);
        assert_eq!(rr.get(P, K, H), Rational::from(SCHOUTEN_KAPPA));
        let r = galilei_r_matrix(q(1, 1), q(2, 1), q(3, 1));
        assert!(mcybe_check(&g, &r));
        assert!(!cybe_check(&g, &r));
        assert!(schouten(&g, &Wedge2::<Rational>::zero(3)).is_zero());
    }

    #[test]
    fn normalized_constraints_dedupe_scalar_multiples() {
        let out = normalize_constraints([poly("2*x - y"), poly("-4*x + 2*y"), Poly::zero()]);
        assert_eq!(out, vec![poly("2*x - y")]);
    }
}
