//! Finite-dimensional Lie algebras over the rationals, the wedge spaces
//! Λ²L and Λ³L, and the adjoint action extended to them.
//!
//! Structure constants are real: for the Galilei algebra we use
//! `[K,H] = P`, `[K,P] = [H,P] = 0` with basis order `(K, H, P)`.
//! Wedges are unnormalized, `u∧w = u⊗w − w⊗u`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bialgebra::Cocommutator;
use crate::error::{Error, ParseError, Result};
use crate::exact_algebra::{Rational, Scalar};

/// Structure constants `c[i][j][k]`: `[Xᵢ, Xⱼ] = Σₖ c[i][j][k] Xₖ`.
pub type StructureConstants<S> = Vec<Vec<Vec<S>>>;

/// Components of the Jacobiator `[[Xᵢ,Xⱼ],Xₖ] + cyclic` for every `i<j<k`
/// and every output coordinate. All vanish iff the Jacobi identity holds.
pub fn jacobi_residuals<S: Scalar>(c: &StructureConstants<S>) -> Vec<S> {
    let n = c.len();
    let mut out = Vec::new();
    let nested = |i: usize, j: usize, k: usize, m: usize| -> S {
        (0..n).fold(S::zero(), |acc, l| {
            acc + c[i][j][l].clone() * c[l][k][m].clone()
        })
    };
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for m in 0..n {
                    out.push(nested(i, j, k, m) + nested(j, k, i, m) + nested(k, i, j, m));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    basis: Vec<String>,
    consts: StructureConstants<Rational>,
}

impl LieAlgebra {
    /// Validates antisymmetry and the Jacobi identity.
    pub fn from_constants(basis: Vec<String>, consts: StructureConstants<Rational>) -> Result<Self> {
        let n = basis.len();
        if consts.len() != n
            || consts
                .iter()
                .any(|row| row.len() != n || row.iter().any(|v| v.len() != n))
        {
            return Err(Error::Dimension(format!(
                "structure constants must be {n}×{n}×{n}"
            )));
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if consts[i][j][k] != -&consts[j][i][k] {
                        return Err(Error::InvalidAlgebra(format!(
                            "bracket [{},{}] is not antisymmetric",
                            basis[i], basis[j]
                        )));
                    }
                }
            }
        }
        let alg = LieAlgebra { basis, consts };
        if !alg.check_jacobi() {
            return Err(Error::InvalidAlgebra("Jacobi identity fails".into()));
        }
        Ok(alg)
    }

    /// Builds from the brackets `[Xᵢ,Xⱼ]` for some ordered pairs; the
    /// antisymmetric completion is automatic and omitted pairs are zero.
    pub fn from_brackets(
        basis: &[&str],
        brackets: &[(&str, &str, &[(&str, Rational)])],
    ) -> Result<Self> {
        let labels: Vec<String> = basis.iter().map(|s| s.to_string()).collect();
        let n = labels.len();
        let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
        let idx = |s: &str| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| Error::InvalidAlgebra(format!("unknown generator `{s}`")))
        };
        let mut seen: BTreeMap<(usize, usize), Vec<Rational>> = BTreeMap::new();
        for (x, y, value) in brackets {
            let (i, j) = (idx(x)?, idx(y)?);
            let mut v = vec![Rational::zero(); n];
            for (z, coeff) in value.iter() {
                v[idx(z)?] += coeff;
            }
            if i == j {
                if v.iter().any(|x| !x.is_zero()) {
                    return Err(Error::InvalidAlgebra(format!("[{x},{x}] must vanish")));
                }
                continue;
            }
            let (key, signed) = if i < j {
                ((i, j), v)
            } else {
                ((j, i), v.iter().map(|t| -t).collect())
            };
            if let Some(prev) = seen.get(&key) {
                if prev != &signed {
                    return Err(Error::InvalidAlgebra(format!(
                        "brackets [{x},{y}] and [{y},{x}] are inconsistent"
                    )));
                }
            }
            seen.insert(key, signed);
        }
        for ((i, j), v) in seen {
            for k in 0..n {
                c[i][j][k] = v[k].clone();
                c[j][i][k] = -&v[k];
            }
        }
        LieAlgebra::from_constants(labels, c)
    }

    /// The two-dimensional Galilei algebra, basis `(K, H, P)`, `[K,H] = P`.
    pub fn galilei() -> Self {
        LieAlgebra::from_brackets(&["K", "H", "P"], &[("K", "H", &[("P", Rational::one())])])
            .expect("Galilei algebra is a Lie algebra")
    }

    pub fn abelian(labels: &[&str]) -> Self {
        LieAlgebra::from_brackets(labels, &[]).expect("abelian algebra is a Lie algebra")
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|l| l == label)
    }

    pub fn constants(&self) -> &StructureConstants<Rational> {
        &self.consts
    }

    /// `[Xᵢ, Xⱼ]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.consts[i][j]
    }

    pub fn bracket<S: Scalar>(&self, x: &[S], y: &[S]) -> Vec<S> {
        let n = self.dim();
        let mut out = vec![S::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = x[i].clone() * y[j].clone();
                for (k, c) in self.consts[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].clone() + xy.clone() * S::from_rational(c);
                    }
                }
            }
        }
        out
    }

    pub fn check_jacobi(&self) -> bool {
        jacobi_residuals(&self.consts).iter().all(Rational::is_zero)
    }

    /// Basis vector `eᵢ` over any scalar ring.
    pub fn unit<S: Scalar>(&self, i: usize) -> Vec<S> {
        (0..self.dim())
            .map(|k| if k == i { S::one() } else { S::zero() })
            .collect()
    }

    pub fn to_spec(&self) -> AlgebraSpec {
        let mut brackets = BTreeMap::new();
        let n = self.dim();
        for i in 0..n {
            for j in i + 1..n {
                let v: BTreeMap<String, Rational> = self.consts[i][j]
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (self.basis[k].clone(), c.clone()))
                    .collect();
                if !v.is_empty() {
                    brackets.insert(format!("[{},{}]", self.basis[i], self.basis[j]), v);
                }
            }
        }
        AlgebraSpec {
            basis: self.basis.clone(),
            brackets,
        }
    }
}

/// JSON form of an algebra:
/// `{"basis": ["K","H","P"], "brackets": {"[K,H]": {"P": "1"}}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: BTreeMap<String, BTreeMap<String, Rational>>,
}

impl AlgebraSpec {
    pub fn build(&self) -> Result<LieAlgebra> {
        let mut parsed = Vec::new();
        for (key, value) in &self.brackets {
            let inner = key
                .trim()
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| ParseError::new(format!("bracket key `{key}` must look like [X,Y]")))?;
            let (x, y) = inner
                .split_once(',')
                .ok_or_else(|| ParseError::new(format!("bracket key `{key}` must look like [X,Y]")))?;
            let terms: Vec<(&str, Rational)> =
                value.iter().map(|(z, c)| (z.as_str(), c.clone())).collect();
            parsed.push((x.trim(), y.trim(), terms));
        }
        let basis: Vec<&str> = self.basis.iter().map(String::as_str).collect();
        let brackets: Vec<(&str, &str, &[(&str, Rational)])> =
            parsed.iter().map(|(x, y, t)| (*x, *y, t.as_slice())).collect();
        LieAlgebra::from_brackets(&basis, &brackets)
    }
}

// ---------------------------------------------------------------------------
// Wedge spaces

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),...
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Element of Λ²L stored on the basis `{Xᵢ∧Xⱼ : i<j}` in lexicographic order.
#[derive(Clone, PartialEq, Eq)]
pub struct Wedge2<S> {
    dim: usize,
    coeffs: Vec<S>,
}

impl<S: Scalar> Wedge2<S> {
    pub fn zero(dim: usize) -> Self {
        Wedge2 {
            dim,
            coeffs: vec![S::zero(); dim * dim.saturating_sub(1) / 2],
        }
    }

    /// `coeff · Xᵢ∧Xⱼ`, normalized to `i<j` with a sign flip.
    pub fn basis(dim: usize, i: usize, j: usize, coeff: S) -> Self {
        let mut w = Wedge2::zero(dim);
        w.add_term(i, j, coeff);
        w
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.dim;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<S>) -> Self {
        assert_eq!(coeffs.len(), dim * dim.saturating_sub(1) / 2);
        Wedge2 { dim, coeffs }
    }

    /// Coefficient of `Xᵢ∧Xⱼ` for any ordered pair (antisymmetric).
    pub fn get(&self, i: usize, j: usize) -> S {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.coeffs[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => -self.coeffs[pair_index(self.dim, j, i)].clone(),
            std::cmp::Ordering::Equal => S::zero(),
        }
    }

    pub fn add_term(&mut self, i: usize, j: usize, coeff: S) {
        if i == j {
            return;
        }
        let (i, j, c) = if i < j { (i, j, coeff) } else { (j, i, -coeff) };
        let k = pair_index(self.dim, i, j);
        self.coeffs[k] = self.coeffs[k].clone() + c;
    }

    /// `u∧w` for coordinate vectors.
    pub fn wedge(u: &[S], w: &[S]) -> Self {
        let n = u.len();
        let mut out = Wedge2::zero(n);
        for (i, j) in out.pairs().collect::<Vec<_>>() {
            let k = pair_index(n, i, j);
            out.coeffs[k] = u[i].clone() * w[j].clone() - u[j].clone() * w[i].clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(S::is_zero)
    }

    pub fn scale(&self, c: &S) -> Self {
        Wedge2 {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|x| x.clone() * c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Wedge2 {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-S::one()))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Wedge2<T> {
        Wedge2 {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Full antisymmetric tensor `t[i][j]` with `w = Σ t[i][j] Xᵢ⊗Xⱼ`.
    pub fn to_tensor(&self) -> Vec<Vec<S>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Image under the linear map sending `Xₚ ↦ Σₐ m[p][a] Xₐ` on both factors.
    pub fn transform(&self, m: &[Vec<S>]) -> Self {
        let mut out = Wedge2::zero(self.dim);
        for ((p, q), c) in self.pairs().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            out = out.add(&Wedge2::wedge(&m[p], &m[q]).scale(c));
        }
        out
    }

    pub fn display_with(&self, labels: &[String]) -> String
    where
        S: fmt::Display,
    {
        let parts: Vec<String> = self
            .pairs()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|((i, j), c)| format!("({c})·{}∧{}", labels[i], labels[j]))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl<S: Scalar> fmt::Debug for Wedge2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(
                self.pairs()
                    .zip(&self.coeffs)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|((i, j), c)| (format!("{i}∧{j}"), c)),
            )
            .finish()
    }
}

/// Element of Λ³L on the basis `{Xᵢ∧Xⱼ∧Xₖ : i<j<k}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Wedge3<S> {
    dim: usize,
    coeffs: BTreeMap<(usize, usize, usize), S>,
}

fn sort3(i: usize, j: usize, k: usize) -> Option<((usize, usize, usize), bool)> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut v = [i, j, k];
    let mut odd = false;
    for a in 0..3 {
        for b in 0..2 - a {
            if v[b] > v[b + 1] {
                v.swap(b, b + 1);
                odd = !odd;
            }
        }
    }
    Some(((v[0], v[1], v[2]), odd))
}

impl<S: Scalar> Wedge3<S> {
    pub fn zero(dim: usize) -> Self {
        Wedge3 {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(dim: usize, i: usize, j: usize, k: usize, coeff: S) -> Self {
        let mut w = Wedge3::zero(dim);
        w.add_term(i, j, k, coeff);
        w
    }

    /// Fully antisymmetric coefficient of `Xᵢ∧Xⱼ∧Xₖ` in any index order.
    pub fn get(&self, i: usize, j: usize, k: usize) -> S {
        match sort3(i, j, k) {
            None => S::zero(),
            Some((key, odd)) => {
                let c = self.coeffs.get(&key).cloned().unwrap_or_else(S::zero);
                if odd {
                    -c
                } else {
                    c
                }
            }
        }
    }

    pub fn add_term(&mut self, i: usize, j: usize, k: usize, coeff: S) {
        if let Some((key, odd)) = sort3(i, j, k) {
            let c = if odd { -coeff } else { coeff };
            let e = self.coeffs.entry(key).or_insert_with(S::zero);
            *e = e.clone() + c;
            if e.is_zero() {
                self.coeffs.remove(&key);
            }
        }
    }

    /// `u∧v∧w` for coordinate vectors.
    pub fn wedge(u: &[S], v: &[S], w: &[S]) -> Self {
        let n = u.len();
        let mut out = Wedge3::zero(n);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let det = u[i].clone() * (v[j].clone() * w[k].clone() - v[k].clone() * w[j].clone())
                        - u[j].clone() * (v[i].clone() * w[k].clone() - v[k].clone() * w[i].clone())
                        + u[k].clone() * (v[i].clone() * w[j].clone() - v[j].clone() * w[i].clone());
                    out.add_term(i, j, k, det);
                }
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, usize), &S)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(S::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j, k), c) in &other.coeffs {
            out.add_term(i, j, k, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Wedge3::zero(self.dim);
        for (&(i, j, k), v) in &self.coeffs {
            out.add_term(i, j, k, v.clone() * c.clone());
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Adjoint action

/// `ad_X` on Λ²: `X·(u∧w) = [X,u]∧w + u∧[X,w]`, for `X` given by coordinates.
pub fn ad_wedge2_vec<S: Scalar>(alg: &LieAlgebra, x: &[S], w: &Wedge2<S>) -> Wedge2<S> {
    let n = alg.dim();
    let mut out = Wedge2::zero(n);
    for ((i, j), c) in w.pairs().zip(w.coeffs()) {
        if c.is_zero() {
            continue;
        }
        let ei = alg.unit::<S>(i);
        let ej = alg.unit::<S>(j);
        let term = Wedge2::wedge(&alg.bracket(x, &ei), &ej).add(&Wedge2::wedge(&ei, &alg.bracket(x, &ej)));
        out = out.add(&term.scale(c));
    }
    out
}

/// `ad_{Xₓ}` on Λ² for a basis element.
pub fn ad_wedge2<S: Scalar>(alg: &LieAlgebra, x: usize, w: &Wedge2<S>) -> Wedge2<S> {
    ad_wedge2_vec(alg, &alg.unit::<S>(x), w)
}

/// `ad_{Xₓ}` on Λ³ with three Leibniz terms.
pub fn ad_wedge3<S: Scalar>(alg: &LieAlgebra, x: usize, w: &Wedge3<S>) -> Wedge3<S> {
    let n = alg.dim();
    let xv = alg.unit::<S>(x);
    let mut out = Wedge3::zero(n);
    for (&(i, j, k), c) in w.terms() {
        let (ei, ej, ek) = (alg.unit::<S>(i), alg.unit::<S>(j), alg.unit::<S>(k));
        let term = Wedge3::wedge(&alg.bracket(&xv, &ei), &ej, &ek)
            .add(&Wedge3::wedge(&ei, &alg.bracket(&xv, &ej), &ek))
            .add(&Wedge3::wedge(&ei, &ej, &alg.bracket(&xv, &ek)));
        out = out.add(&term.scale(c));
    }
    out
}

// ---------------------------------------------------------------------------
// Generator maps

/// Square matrix acting on generators by substitution: every occurrence of
/// `Xᵢ` is replaced by `Σⱼ m[i][j] Xⱼ`, the `Xⱼ` on the right being the new
/// generators.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorMap<S> {
    pub m: Vec<Vec<S>>,
}

impl<S: Scalar> GeneratorMap<S> {
    pub fn new(m: Vec<Vec<S>>) -> Self {
        GeneratorMap { m }
    }

    pub fn identity(n: usize) -> Self {
        GeneratorMap {
            m: (0..n)
                .map(|i| (0..n).map(|j| if i == j { S::one() } else { S::zero() }).collect())
                .collect(),
        }
    }

    pub fn diagonal(d: Vec<S>) -> Self {
        let n = d.len();
        let mut g = GeneratorMap::identity(n);
        for (i, v) in d.into_iter().enumerate() {
            g.m[i][i] = v;
        }
        g
    }

    pub fn dim(&self) -> usize {
        self.m.len()
    }

    /// Gauss-Jordan inverse using exact ring division.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim();
        let mut a = self.m.clone();
        let mut inv = GeneratorMap::<S>::identity(n).m;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero() && S::one().try_div(&a[r][col]).is_some())
                .ok_or(Error::SingularMap)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p_inv = S::one().try_div(&a[col][col]).ok_or(Error::SingularMap)?;
            for j in 0..n {
                a[col][j] = a[col][j].clone() * p_inv.clone();
                inv[col][j] = inv[col][j].clone() * p_inv.clone();
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let f = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = a[r][j].clone() - f.clone() * a[col][j].clone();
                    inv[r][j] = inv[r][j].clone() - f.clone() * inv[col][j].clone();
                }
            }
        }
        Ok(GeneratorMap { m: inv })
    }

    pub fn compose(&self, other: &Self) -> Self {
        let n = self.dim();
        GeneratorMap {
            m: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            (0..n).fold(S::zero(), |acc, k| {
                                acc + self.m[i][k].clone() * other.m[k][j].clone()
                            })
                        })
                        .collect()
                })
                .collect(),
        }
    }
}

/// Re-expresses a cocommutator after substituting generators by `map`:
/// `δ′(X′ᵢ) = (M∧M) δ(Σⱼ (M⁻¹)ᵢⱼ Xⱼ)`.
pub fn apply_generator_map<S: Scalar>(
    map: &GeneratorMap<S>,
    delta: &Cocommutator<S>,
) -> Result<Cocommutator<S>> {
    let n = map.dim();
    if delta.dim() != n {
        return Err(Error::Dimension(format!(
            "generator map is {n}-dimensional, cocommutator is {}-dimensional",
            delta.dim()
        )));
    }
    let inv = map.inverse()?;
    let images = (0..n)
        .map(|i| {
            let pre = (0..n).fold(Wedge2::zero(n), |acc, j| {
                acc.add(&delta.image(j).scale(&inv.m[i][j]))
            });
            pre.transform(&map.m)
        })
        .collect();
    Ok(Cocommutator::new(images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::q;

    const K: usize = 0;
    const H: usize = 1;
    const P: usize = 2;

    fn w2(i: usize, j: usize, c: i64) -> Wedge2<Rational> {
        Wedge2::basis(3, i, j, Rational::from(c))
    }

    #[test]
    fn galilei_and_abelian_are_lie() {
        assert!(LieAlgebra::galilei().check_jacobi());
        assert!(LieAlgebra::abelian(&["X", "Y", "Z"]).check_jacobi());
        let g = LieAlgebra::galilei();
        assert_eq!(g.bracket_basis(K, H), &[q(0, 1), q(0, 1), q(1, 1)]);
        assert_eq!(g.bracket_basis(H, K), &[q(0, 1), q(0, 1), q(-1, 1)]);
    }

    #[test]
    fn sign_flips_of_so3_stay_lie() {
        // Flipping the sign of one constant in [K,H]=P, [H,P]=K, [P,K]=H gives
        // so(2,1), still a Lie algebra: every Jacobi term is [X,X].
        let one = Rational::one();
        for brackets in [
            [("K", "H", "P"), ("H", "P", "K"), ("P", "K", "H")],
            [("K", "H", "P"), ("H", "P", "K"), ("K", "P", "H")],
        ] {
            let b: Vec<(&str, &str, Vec<(&str, Rational)>)> = brackets
                .iter()
                .map(|(x, y, z)| (*x, *y, vec![(*z, one.clone())]))
                .collect();
            let b: Vec<_> = b.iter().map(|(x, y, v)| (*x, *y, v.as_slice())).collect();
            assert!(LieAlgebra::from_brackets(&["K", "H", "P"], &b).is_ok());
        }
    }

    #[test]
    fn non_jacobi_constants_rejected() {
        // [[K,H],P] + [[H,P],K] + [[P,K],H] = [P,P] + [H,K] + 0 = -P
        let one = Rational::one();
        let bad = LieAlgebra::from_brackets(
            &["K", "H", "P"],
            &[("K", "H", &[("P", one.clone())]), ("H", "P", &[("H", one.clone())])],
        );
        assert!(matches!(bad, Err(Error::InvalidAlgebra(_))));
        let mut c = LieAlgebra::galilei().constants().clone();
        c[H][P][H] = one.clone();
        c[P][H][H] = -one;
        assert_eq!(jacobi_residuals(&c).iter().filter(|r| !r.is_zero()).count(), 1);
    }

    #[test]
    fn non_antisymmetric_constants_rejected() {
        let n = 2;
        let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
        c[0][1][1] = Rational::one();
        let r = LieAlgebra::from_constants(vec!["X".into(), "Y".into()], c);
        assert!(matches!(r, Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn spec_round_trip() {
        let spec: AlgebraSpec =
            serde_json::from_str(r#"{"basis": ["K","H","P"], "brackets": {"[K,H]": {"P": "1"}}}"#).unwrap();
        let alg = spec.build().unwrap();
        assert_eq!(alg, LieAlgebra::galilei());
        assert_eq!(alg.to_spec().build().unwrap(), alg);
        let conflicting: AlgebraSpec = serde_json::from_str(
            r#"{"basis": ["K","H","P"], "brackets": {"[K,H]": {"P": "1"}, "[H,K]": {"P": "1"}}}"#,
        )
        .unwrap();
        assert!(conflicting.build().is_err());
    }

    #[test]
    fn wedge_sign_normalization() {
        let a = Wedge2::basis(3, P, K, Rational::one());
        assert_eq!(a, w2(K, P, -1));
        assert_eq!(a.get(P, K), Rational::one());
        assert_eq!(a.get(K, P), -Rational::one());
        let t = Wedge3::basis(3, P, K, H, Rational::one());
        assert_eq!(t.get(K, H, P), Rational::one());
        assert_eq!(t.get(H, K, P), -Rational::one());
        assert_eq!(t.get(K, K, P), Rational::zero());
    }

    #[test]
    fn ad_wedge2_examples() {
        let g = LieAlgebra::galilei();
        assert_eq!(ad_wedge2(&g, K, &w2(H, K, 1)), w2(P, K, 1));
        assert!(ad_wedge2(&g, H, &w2(P, K, 1)).is_zero());
        let ab = LieAlgebra::abelian(&["X", "Y", "Z"]);
        assert!(ad_wedge2(&ab, 0, &w2(0, 1, 5).add(&w2(1, 2, 3))).is_zero());
    }

    #[test]
    fn ad_wedge3_kills_top_form() {
        let g = LieAlgebra::galilei();
        let top = Wedge3::basis(3, P, K, H, Rational::one());
        for x in 0..3 {
            assert!(ad_wedge3(&g, x, &top).is_zero());
        }
        let ab = LieAlgebra::abelian(&["X", "Y", "Z"]);
        assert!(ad_wedge3(&ab, 1, &top).is_zero());
    }

    #[test]
    fn generator_map_inverse() {
        let m = GeneratorMap::new(vec![
            vec![q(2, 1), q(1, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1), q(3, 1)],
            vec![q(0, 1), q(0, 1), q(1, 2)],
        ]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.compose(&inv), GeneratorMap::identity(3));
        let singular = GeneratorMap::new(vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]]);
        assert_eq!(singular.inverse(), Err(Error::SingularMap));
    }

    #[test]
    fn pair_indexing() {
        assert_eq!(pair_index(3, 0, 1), 0);
        assert_eq!(pair_index(3, 0, 2), 1);
        assert_eq!(pair_index(3, 1, 2), 2);
        assert_eq!(pair_index(4, 1, 3), 4);
        assert_eq!(pair_index(4, 2, 3), 5);
    }
}
