use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::ParseError;

/// Product of named symbols with integer exponents, kept sorted by symbol
/// name with no zero exponents.
///
/// Exponents may be negative so that nonzero symbolic constants (such as a
/// time scale) can be divided out exactly; every polynomial produced from
/// nonnegative inputs by ring operations stays nonnegative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<(String, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Monomial(vec![(name.to_string(), 1)])
    }

    /// Builds a canonical monomial from arbitrary `(symbol, exponent)` pairs.
    pub fn from_pairs<S: AsRef<str>>(pairs: impl IntoIterator<Item = (S, i32)>) -> Self {
        let mut acc: BTreeMap<String, i32> = BTreeMap::new();
        for (s, e) in pairs {
            *acc.entry(s.as_ref().to_string()).or_insert(0) += e;
        }
        Monomial(acc.into_iter().filter(|(_, e)| *e != 0).collect())
    }

    pub fn factors(&self) -> &[(String, i32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|(_, e)| *e).sum()
    }

    pub fn exponent(&self, name: &str) -> i32 {
        self.0
            .iter()
            .find(|(s, _)| s == name)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = self.0[i].1 + other.0[j].1;
                    if e != 0 {
                        out.push((self.0[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|(s, e)| (s.clone(), -e)).collect())
    }

    /// Splits into the part over `vars` and the remainder.
    pub fn split(&self, vars: &BTreeSet<&str>) -> (Monomial, Monomial) {
        let (inside, outside): (Vec<_>, Vec<_>) = self
            .0
            .iter()
            .cloned()
            .partition(|(s, _)| vars.contains(s.as_str()));
        (Monomial(inside), Monomial(outside))
    }

    fn without(&self, name: &str) -> Monomial {
        Monomial(self.0.iter().filter(|(s, _)| s != name).cloned().collect())
    }

    /// Graded order: total degree first, then the structural order.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            // lex on exponent vectors, alphabetically earlier symbols first
            let (a, b) = (&self.0, &other.0);
            for i in 0..a.len().max(b.len()) {
                let ord = match (a.get(i), b.get(i)) {
                    (Some((sa, ea)), Some((sb, eb))) if sa == sb => ea.cmp(eb),
                    (Some((sa, ea)), Some((sb, eb))) => {
                        if sa < sb {
                            ea.cmp(&0)
                        } else {
                            0.cmp(eb)
                        }
                    }
                    (Some((_, ea)), None) => ea.cmp(&0),
                    (None, Some((_, eb))) => 0.cmp(eb),
                    (None, None) => Ordering::Equal,
                };
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse multivariate polynomial with exact rational coefficients over
/// open-ended symbol names. Zero coefficients are never stored, so equality
/// is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(Rational::from(n))
    }

    pub fn var(name: &str) -> Self {
        Poly::term(Rational::one(), Monomial::var(name))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    /// Canonical polynomial from raw terms: like terms merged, zeros dropped.
    pub fn normalize(raw: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in raw {
            *terms.entry(m).or_insert_with(Rational::zero) += &c;
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The value when the polynomial has no symbols.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn symbols(&self) -> BTreeSet<String> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(s, _)| s.clone()))
            .collect()
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a single nonzero term; `None` for anything else.
    pub fn try_inverse(&self) -> Option<Poly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        Some(Poly::term(c.recip()?, m.inverse()))
    }

    /// Simultaneous substitution of symbols by polynomials; unbound symbols
    /// pass through unchanged.
    ///
    /// # Panics
    ///
    /// Panics if a symbol with a negative exponent is bound to a polynomial
    /// that is not a single nonzero term.
    pub fn substitute(&self, bindings: &BTreeMap<String, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            for (s, e) in m.factors() {
                let factor = match bindings.get(s) {
                    Some(p) if *e >= 0 => p.pow(*e as u32),
                    Some(p) => p
                        .try_inverse()
                        .unwrap_or_else(|| {
                            panic!("cannot invert `{p}` bound to `{s}` with exponent {e}")
                        })
                        .pow(e.unsigned_abs()),
                    None => Poly::term(Rational::one(), Monomial::from_pairs([(s.as_str(), *e)])),
                };
                acc = &acc * &factor;
            }
            out = out + acc;
        }
        out
    }

    /// Convenience wrapper for [`Poly::substitute`] with borrowed names.
    pub fn subs(&self, bindings: &[(&str, Poly)]) -> Poly {
        let map = bindings
            .iter()
            .map(|(s, p)| (s.to_string(), p.clone()))
            .collect();
        self.substitute(&map)
    }

    pub fn derivative(&self, var: &str) -> Poly {
        Poly::normalize(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(var);
            (e != 0).then(|| {
                let rest = m.without(var);
                let m2 = rest.mul(&Monomial::from_pairs([(var, e - 1)]));
                (m2, c * &Rational::from(e as i64))
            })
        }))
    }

    /// Groups terms by their monomial in `vars`; each value is the
    /// coefficient polynomial in the remaining symbols.
    pub fn coefficients_in(&self, vars: &[&str]) -> BTreeMap<Monomial, Poly> {
        let set: BTreeSet<&str> = vars.iter().copied().collect();
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(&set);
            let entry = out.entry(inside).or_default();
            *entry = std::mem::take(entry) + Poly::term(c.clone(), outside);
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Evaluates with every symbol bound to a rational; `None` if a symbol is
    /// unbound or a negative power of zero appears.
    pub fn eval(&self, values: &BTreeMap<String, Rational>) -> Option<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (s, e) in m.factors() {
                let v = values.get(s)?;
                if v.is_zero() && *e < 0 {
                    return None;
                }
                t = t * v.pow(*e);
            }
            acc += &t;
        }
        Some(acc)
    }

    pub fn eval_f64(&self, values: &BTreeMap<String, f64>) -> Option<f64> {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64();
            for (s, e) in m.factors() {
                t *= values.get(s)?.powi(*e);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Leading term under [`Monomial::graded_cmp`].
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| a.0.graded_cmp(b.0))
    }

    /// Scales to integer coefficients with unit content and a positive
    /// leading coefficient. Zero stays zero.
    pub fn primitive(&self) -> Poly {
        let Some((_, lead)) = self.leading() else {
            return Poly::zero();
        };
        let lcm = Rational::lcm_denoms(self.terms.values());
        let content = self
            .terms
            .values()
            .map(|c| (c.numer() * &lcm / c.denom()).abs())
            .fold(BigInt::zero(), |acc, n| acc.gcd(&n));
        let mut factor = Rational::new(lcm, content);
        if lead.is_negative() {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// Terms ordered for display: highest degree first.
    fn display_order(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.graded_cmp(a.0));
        v
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.display_order().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::int(n)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            match self.terms.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += &c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        self
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.clone() + rhs.clone()
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -self.clone()
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self.clone() - rhs.clone()
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *terms.entry(m1.mul(m2)).or_insert_with(Rational::zero) += &(c1 * c2);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { terms }
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

// mixed owned/borrowed forms
impl Add<&Poly> for Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self + rhs.clone()
    }
}

impl Sub<&Poly> for Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self - rhs.clone()
    }
}

impl Mul<&Poly> for Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        &self * rhs
    }
}

impl Mul<Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        self * &rhs
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

// ---------------------------------------------------------------------------
// Text form: `-1/2*tau0*v^2 + a - 3`.

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src,
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn err(&self, what: &str) -> ParseError {
        ParseError::new(format!(
            "{what} at position {} in polynomial `{}`",
            self.pos, self.src
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = Poly::zero();
        let mut first = true;
        loop {
            let sign = if self.eat('-') {
                -1
            } else if self.eat('+') || first {
                1
            } else {
                break;
            };
            let t = self.term()?;
            acc = if sign < 0 { acc - t } else { acc + t };
            first = false;
            match self.peek() {
                Some('+') | Some('-') => continue,
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| self.err("bad integer"))
    }

    fn exponent(&mut self) -> Result<i32, ParseError> {
        if !self.eat('^') {
            return Ok(1);
        }
        let neg = self.eat('-');
        let n = self.integer()?;
        let n: i32 = n.try_into().map_err(|_| self.err("exponent too large"))?;
        Ok(if neg { -n } else { n })
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let value = if self.eat('/') {
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    Rational::new(n, d)
                } else {
                    Rational::from(n)
                };
                let e = self.exponent()?;
                Ok(Poly::constant(value.pow(e)))
            }
            Some(c) if is_ident_start(c) => {
                let start = self.pos;
                while self.pos < self.chars.len() && is_ident_char(self.chars[self.pos]) {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let e = self.exponent()?;
                Ok(Poly::term(
                    Rational::one(),
                    Monomial::from_pairs([(name.as_str(), e)]),
                ))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                let e = self.exponent()?;
                if e >= 0 {
                    Ok(inner.pow(e as u32))
                } else {
                    inner
                        .try_inverse()
                        .map(|p| p.pow(e.unsigned_abs()))
                        .ok_or_else(|| self.err("negative power of a non-monomial"))
                }
            }
            Some('-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            _ => Err(self.err("expected number, symbol or `(`")),
        }
    }
}

impl FromStr for Poly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(s);
        let out = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(out)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Int(i64),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(s) => s.parse().map_err(serde::de::Error::custom),
            Repr::Int(n) => Ok(Poly::int(n)),
        }
    }
}

/// Parses a polynomial literal, panicking on malformed input. Intended for
/// canned tables and tests.
pub fn poly(s: &str) -> Poly {
    s.parse()
        .unwrap_or_else(|e| panic!("invalid polynomial literal `{s}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::q;

    fn m(pairs: &[(&str, i32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|(s, e)| (*s, *e)))
    }

    #[test]
    fn normalize_merges_like_terms() {
        let p = Poly::normalize([(m(&[("a", 1)]), q(1, 2)), (m(&[("a", 1)]), q(1, 2))]);
        assert_eq!(p, Poly::var("a"));
    }

    #[test]
    fn normalize_cancels() {
        let p = Poly::normalize([(m(&[("v", 2)]), q(1, 1)), (m(&[("v", 2)]), q(-1, 1))]);
        assert!(p.is_zero());
    }

    #[test]
    fn normalize_drops_zero_coefficients() {
        let p = Poly::normalize([
            (m(&[("tau", 1), ("v", 1)]), q(2, 3)),
            (m(&[("a", 1)]), q(0, 1)),
        ]);
        assert_eq!(p, poly("2/3*tau*v"));
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn substitute_group_law_position() {
        let p = Poly::var("a");
        let out = p.subs(&[("a", poly("a + a' + v*tau'"))]);
        assert_eq!(out, poly("a + a' + v*tau'"));
    }

    #[test]
    fn substitute_to_zero() {
        assert!(poly("tau^2").subs(&[("tau", Poly::zero())]).is_zero());
    }

    #[test]
    fn substitute_product() {
        let out = poly("v*tau").subs(&[("v", poly("v + v'")), ("tau", poly("tau + tau'"))]);
        assert_eq!(out, poly("v*tau + v*tau' + v'*tau + v'*tau'"));
    }

    #[test]
    fn substitution_is_simultaneous() {
        let out = poly("x*y").subs(&[("x", poly("y")), ("y", poly("x"))]);
        assert_eq!(out, poly("x*y"));
    }

    #[test]
    fn text_form() {
        assert_eq!(poly("-1/2*tau0*v^2").to_string(), "-1/2*tau0*v^2");
        assert_eq!(poly("a - a").to_string(), "0");
        assert_eq!(poly("3 - x").to_string(), "-x + 3");
        assert_eq!(poly("(a+b)^2"), poly("a^2 + 2*a*b + b^2"));
        assert_eq!(poly("2*x*3"), poly("6*x"));
        assert_eq!(poly("v0^-1*v0"), Poly::one());
        assert!("a +".parse::<Poly>().is_err());
        assert!("a b".parse::<Poly>().is_err());
        assert!("1/0*a".parse::<Poly>().is_err());
    }

    #[test]
    fn derivative_and_coefficients() {
        let p = poly("3*a^2*v + v*tau - 5");
        assert_eq!(p.derivative("a"), poly("6*a*v"));
        assert_eq!(p.derivative("v"), poly("3*a^2 + tau"));
        let c = p.coefficients_in(&["a"]);
        assert_eq!(c[&Monomial::from_pairs([("a", 2)])], poly("3*v"));
        assert_eq!(c[&Monomial::one()], poly("v*tau - 5"));
    }

    #[test]
    fn primitive_normalization() {
        assert_eq!(poly("-1/2*x + 1/3*y").primitive(), poly("3*x - 2*y"));
        assert_eq!(poly("4*x*y - 6").primitive(), poly("2*x*y - 3"));
        assert!(Poly::zero().primitive().is_zero());
    }

    #[test]
    fn inverse_of_monomials_only() {
        assert_eq!(poly("2*v0").try_inverse().unwrap(), poly("1/2*v0^-1"));
        assert!(poly("v0 + 1").try_inverse().is_none());
        assert!(Poly::zero().try_inverse().is_none());
    }
}
