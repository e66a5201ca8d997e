use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{Monomial, Poly, Rational};
use crate::error::{Error, Result};

/// Linear equations over named unknowns with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    unknowns: Vec<String>,
    rows: Vec<BTreeMap<String, Rational>>,
    rhs: Vec<Rational>,
}

impl LinearSystem {
    pub fn new<S: AsRef<str>>(unknowns: impl IntoIterator<Item = S>) -> Self {
        let set: BTreeSet<String> = unknowns.into_iter().map(|s| s.as_ref().to_string()).collect();
        LinearSystem {
            unknowns: set.into_iter().collect(),
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    /// Unknowns in pivot order (lexicographic by name). Solution vectors are
    /// indexed in this order.
    pub fn unknowns(&self) -> &[String] {
        &self.unknowns
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn add_row(&mut self, coeffs: BTreeMap<String, Rational>, rhs: Rational) -> Result<()> {
        if let Some(bad) = coeffs.keys().find(|k| self.unknowns.binary_search(k).is_err()) {
            return Err(Error::UndeclaredUnknown(bad.clone()));
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        self.rows.push(coeffs);
        self.rhs.push(rhs);
        Ok(())
    }

    /// Adds the equation `p = 0` where `p` is affine in the unknowns and
    /// otherwise a plain rational constant.
    pub fn add_linear_poly(&mut self, p: &Poly) -> Result<()> {
        let mut coeffs = BTreeMap::new();
        let mut constant = Rational::zero();
        for (m, c) in p.terms() {
            match m.factors() {
                [] => constant = c.clone(),
                [(s, 1)] if self.unknowns.binary_search(s).is_ok() => {
                    coeffs.insert(s.clone(), c.clone());
                }
                [(s, 1)] => return Err(Error::UndeclaredUnknown(s.clone())),
                _ => return Err(Error::NotLinear(p.to_string())),
            }
        }
        self.add_row(coeffs, -constant)
    }

    /// Builds a system from polynomials that must vanish identically in every
    /// symbol other than the unknowns: each coefficient (a polynomial in the
    /// remaining symbols) contributes one equation.
    pub fn from_identities<'a, S: AsRef<str>>(
        unknowns: impl IntoIterator<Item = S>,
        identities: impl IntoIterator<Item = &'a Poly>,
    ) -> Result<Self> {
        let mut sys = LinearSystem::new(unknowns);
        let names: Vec<&str> = sys.unknowns.iter().map(String::as_str).collect();
        let mut rows = Vec::new();
        for p in identities {
            // Group by the non-unknown part: coefficients_in(unknowns) keys on
            // the unknown monomial, so regroup by the complement instead.
            let mut by_rest: BTreeMap<Monomial, Poly> = BTreeMap::new();
            for (um, rest) in p.coefficients_in(&names) {
                for (rm, c) in rest.terms() {
                    let e = by_rest.entry(rm.clone()).or_default();
                    *e = std::mem::take(e) + Poly::term(c.clone(), um.clone());
                }
            }
            rows.extend(by_rest.into_values().filter(|q| !q.is_zero()));
        }
        for r in &rows {
            sys.add_linear_poly(r)?;
        }
        Ok(sys)
    }

    fn integer_matrix(&self, augmented: bool) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .zip(&self.rhs)
            .map(|(row, rhs)| {
                let mut vals: Vec<Rational> = self
                    .unknowns
                    .iter()
                    .map(|u| row.get(u).cloned().unwrap_or_else(Rational::zero))
                    .collect();
                if augmented {
                    vals.push(rhs.clone());
                }
                let lcm = Rational::lcm_denoms(&vals);
                let mut ints: Vec<BigInt> =
                    vals.iter().map(|v| v.numer() * &lcm / v.denom()).collect();
                make_primitive(&mut ints);
                ints
            })
            .collect()
    }

    /// Homogeneous solution space. Basis vectors are indexed like
    /// [`LinearSystem::unknowns`]; the right-hand side is ignored.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let n = self.unknowns.len();
        let (rref, pivots) = eliminate(self.integer_matrix(false), n);
        let pivot_cols: BTreeSet<usize> = pivots.iter().map(|(_, c)| *c).collect();
        (0..n)
            .filter(|c| !pivot_cols.contains(c))
            .map(|free| {
                let mut x = vec![Rational::zero(); n];
                x[free] = Rational::one();
                for &(r, p) in &pivots {
                    x[p] = Rational::new(-rref[r][free].clone(), rref[r][p].clone());
                }
                // first nonzero entry positive
                if x.iter().find(|v| !v.is_zero()).is_some_and(Rational::is_negative) {
                    x.iter_mut().for_each(|v| *v = -&*v);
                }
                x
            })
            .collect()
    }

    /// A particular solution with free unknowns set to zero, or `None` when
    /// the system is inconsistent.
    pub fn solve(&self) -> Option<Vec<Rational>> {
        let n = self.unknowns.len();
        let (rref, pivots) = eliminate(self.integer_matrix(true), n);
        let inconsistent = rref
            .iter()
            .any(|row| row[..n].iter().all(Zero::is_zero) && !row[n].is_zero());
        if inconsistent {
            return None;
        }
        let mut x = vec![Rational::zero(); n];
        for &(r, p) in &pivots {
            x[p] = Rational::new(rref[r][n].clone(), rref[r][p].clone());
        }
        Some(x)
    }

    pub fn rank(&self) -> usize {
        eliminate(self.integer_matrix(false), self.unknowns.len()).1.len()
    }

    /// True when `x` (indexed like `unknowns`) satisfies every row exactly.
    pub fn is_solution(&self, x: &[Rational], homogeneous: bool) -> bool {
        self.rows.iter().zip(&self.rhs).all(|(row, rhs)| {
            let lhs: Rational = self
                .unknowns
                .iter()
                .zip(x)
                .filter_map(|(u, xv)| row.get(u).map(|c| c * xv))
                .sum();
            if homogeneous {
                lhs.is_zero()
            } else {
                &lhs == rhs
            }
        })
    }
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && g != BigInt::from(1) {
        for v in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

/// Fraction-free Gauss-Jordan elimination over the first `ncols` columns in
/// column order. Returns the reduced integer matrix and `(row, column)` pivot
/// positions; each row is kept primitive and pivot entries positive.
fn eliminate(mut m: Vec<Vec<BigInt>>, ncols: usize) -> (Vec<Vec<BigInt>>, Vec<(usize, usize)>) {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        let Some(found) = (next..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(next, found);
        if m[next][col].is_negative() {
            for v in m[next].iter_mut() {
                *v = -&*v;
            }
        }
        let pivot_row = m[next].clone();
        let p = pivot_row[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v = &p * &*v - &f * pv;
            }
            make_primitive(row);
        }
        pivots.push((next, col));
        next += 1;
        if next == m.len() {
            break;
        }
    }
    (m, pivots)
}
