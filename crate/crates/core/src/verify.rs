//! End-to-end self-check of the whole pipeline, one report per criterion.
//! Reference values are the published classification and bracket tables.

use std::fmt;

use serde::Serialize;

use crate::bialgebra::{
    cocycle_space, cojacobi_ideal, cybe_check, delta_from_r, galilei_r_matrix, in_span, mcybe_check,
    normalize_constraints, schouten, Cocommutator, SCHOUTEN_KAPPA,
};
use crate::exact_algebra::{poly, Poly, Rational};
use crate::galilei_orbits::{canonical_rep, classify, ClassId, SixTuple};
use crate::lie_core::{apply_generator_map, GeneratorMap, LieAlgebra, Wedge2, Wedge3};
use crate::par::Execution;
use crate::poisson_group::{
    coordinate_brackets, delta_from_eta, dimensionful_tuple, eta_family_basis, eta_from_params,
    eta_from_params_unchecked, eta_in_span, eta_solve, jacobi_check, multiplicativity_check, table2_row,
    BracketTable, EtaParams, ETA_PARAM_NAMES,
};
use crate::sampling::{random_rational, rng_for, DEFAULT_BOUND};
use crate::sweeps::{orbit_invariance, witness_quality};

const K: usize = 0;
const H: usize = 1;
const P: usize = 2;

/// Published coordinate brackets `{a,v}`, `{a,τ}`, `{v,τ}` for rows 1–9.
pub const REFERENCE_BRACKETS: [[&str; 3]; 9] = [
    ["-1/2*tau0*v^2", "tau0*a + eps*tau0^2*v", "tau0*v"],
    ["-v0^2*tau - eps*v0*tau0*v", "-eps*v0*tau0*tau + tau0^2*v", "0"],
    ["v0^2*tau - eps*v0*tau0*v", "-eps*v0*tau0*tau - tau0^2*v", "0"],
    ["v0^2*tau - eps*v0*tau0*v", "-eps*v0*tau0*tau + tau0^2*v", "0"],
    ["0", "tau0^2*v", "0"],
    ["-v0*tau0*v", "-v0*tau0*tau + tau0^2*v", "0"],
    ["0", "-tau0^2*v", "0"],
    ["-v0*tau0*v", "-v0*tau0*tau - tau0^2*v", "0"],
    ["-v0*tau0*v", "-tau0*v0*tau", "0"],
];

/// Published co-Jacobi constraints.
pub const REFERENCE_CONSTRAINTS: [&str; 2] = ["2*s*rho - r*(beta + gamma)", "2*r*alpha - s*(beta + gamma)"];

/// Published multiplicative family in the parameters `b, c, d, e, f, k`.
pub const REFERENCE_ETA: [&str; 3] = [
    "1/2*b*tau^2 + c*tau + d*(v*tau - a) + e*v",
    "k*tau - b*a + f*v - 1/2*d*v^2",
    "b*tau + d*v",
];

pub const NUM_CRITERIA: u8 = 10;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {:>2} {}: {}", self.id, self.title, self.detail)
    }
}

fn report(id: u8, title: &'static str, failures: Vec<String>, ok_detail: String) -> CriterionReport {
    CriterionReport {
        id,
        title,
        passed: failures.is_empty(),
        detail: if failures.is_empty() { ok_detail } else { failures.join("; ") },
    }
}

/// Canonical tuples at the sample ε values: rows 1–4 at 0, 1, 7/3, row 1
/// also at −2, and rows 5–9.
pub fn table1_samples() -> Vec<(ClassId, SixTuple<Rational>)> {
    let eps = [Rational::zero(), Rational::one(), Rational::new(7, 3)];
    let mut out = Vec::new();
    for id in ClassId::ROWS {
        if id.has_epsilon() {
            for e in &eps {
                out.push((id, canonical_rep(id, Some(e.clone())).expect("valid")));
            }
            if id == ClassId::Row(1) {
                out.push((id, canonical_rep(id, Some(Rational::from(-2))).expect("valid")));
            }
        } else {
            out.push((id, canonical_rep(id, None).expect("valid")));
        }
    }
    out
}

pub fn table1_reproduction() -> CriterionReport {
    let samples = table1_samples();
    let mut fails = Vec::new();
    for (id, p) in &samples {
        match classify(p) {
            Ok(c) if c.id == *id && c.canonical().as_ref() == Some(p) => {}
            other => fails.push(format!("{p}: {other:?}")),
        }
    }
    report(1, "canonical forms", fails, format!("{} canonical tuples fixed", samples.len()))
}

pub fn orbit_invariance_check(exec: Execution, seed: u64) -> CriterionReport {
    let canon: Vec<_> = table1_samples().into_iter().map(|(_, p)| p).collect();
    let r = orbit_invariance(exec, seed, &canon, 100);
    report(2, "orbit invariance", r.failures.clone(), format!("{} random automorphisms", r.checked))
}

fn family_basis() -> Vec<Cocommutator<Rational>> {
    (0..6)
        .map(|i| SixTuple::from_array(std::array::from_fn(|j| Rational::from(i64::from(i == j)))).to_cocommutator())
        .collect()
}

pub fn cocycle_space_check() -> CriterionReport {
    let g = LieAlgebra::galilei();
    let space = cocycle_space(&g);
    let family = family_basis();
    let mut fails = Vec::new();
    if space.len() != 6 {
        fails.push(format!("dimension {}", space.len()));
    }
    if !space.iter().all(|d| in_span(&family, d)) {
        fails.push("solved cocycle outside the family".into());
    }
    if !family.iter().all(|d| in_span(&space, d)) {
        fails.push("family member outside the solved space".into());
    }
    report(3, "cocycle space", fails, "dimension 6, spans agree".into())
}

pub fn cojacobi_check_family() -> CriterionReport {
    let g = LieAlgebra::galilei();
    let got = cojacobi_ideal(&g, &SixTuple::symbolic().to_cocommutator());
    let want = normalize_constraints(REFERENCE_CONSTRAINTS.map(poly));
    let fails = if got == want {
        vec![]
    } else {
        vec![format!("got {got:?}")]
    };
    let text: Vec<String> = got.iter().map(ToString::to_string).collect();
    report(4, "co-Jacobi constraints", fails, text.join(", "))
}

pub fn coboundary_check(seed: u64) -> CriterionReport {
    let g = LieAlgebra::galilei();
    let mut fails = Vec::new();

    let sym = galilei_r_matrix(poly("a_r"), poly("b_r"), poly("c_r"));
    if !mcybe_check(&g, &sym) {
        fails.push("mCYBE fails symbolically".into());
    }
    let mut rng = rng_for(seed, 0xc0b);
    for i in 0..100 {
        let mut x = || random_rational(&mut rng, DEFAULT_BOUND);
        let (a, b, c) = (x(), x(), if i % 4 == 0 { Rational::zero() } else { x() });
        let r = galilei_r_matrix(a, b, c.clone());
        if !mcybe_check(&g, &r) {
            fails.push(format!("mCYBE fails at {r:?}"));
        }
        if cybe_check(&g, &r) != c.is_zero() {
            fails.push(format!("CYBE verdict wrong at {r:?}"));
        }
    }

    let c = poly("c_r");
    let r = galilei_r_matrix(Poly::zero(), Poly::zero(), c.clone());
    let mut want = Wedge3::zero(3);
    want.add_term(P, K, H, Poly::int(SCHOUTEN_KAPPA) * c.pow(2));
    if schouten(&g, &r) != want {
        fails.push("Schouten bracket differs from kappa c^2 P^K^H".into());
    }

    // δ(P) = 0, δ(H) = c H∧P, δ(K) = c K∧P
    let delta = delta_from_r(&g, &r);
    let expected = Cocommutator::new(vec![
        Wedge2::basis(3, K, P, c.clone()),
        Wedge2::basis(3, H, P, c.clone()),
        Wedge2::zero(3),
    ]);
    if delta != expected {
        fails.push(format!("coboundary {delta:?}"));
    }
    let two = Rational::from(2);
    let r2 = galilei_r_matrix(Rational::zero(), Rational::zero(), two.clone());
    let half = Rational::new(1, 2);
    let redefine = GeneratorMap::diagonal(vec![half.clone(), Rational::one(), -half]);
    match apply_generator_map(&redefine, &delta_from_r(&g, &r2)) {
        Ok(d) if SixTuple::from_cocommutator(&d) == canonical_rep(ClassId::Row(9), None).ok() => {}
        other => fails.push(format!("redefinition gives {other:?}")),
    }
    report(
        5,
        "coboundary analysis",
        fails,
        format!("kappa = {SCHOUTEN_KAPPA} (published magnitude 3)"),
    )
}

pub fn eta_family_check() -> CriterionReport {
    let mut fails = Vec::new();
    let family = eta_family_basis();
    match eta_solve(2) {
        Ok(sol) => {
            if sol.len() != 6 {
                fails.push(format!("degree 2 dimension {}", sol.len()));
            }
            if !sol.iter().all(|e| eta_in_span(&family, e)) || !family.iter().all(|e| eta_in_span(&sol, e)) {
                fails.push("solved family differs from the published one".into());
            }
        }
        Err(e) => fails.push(e.to_string()),
    }
    match eta_solve(3) {
        Ok(sol) if sol.len() == 6 => {}
        Ok(sol) => fails.push(format!("degree 3 dimension {}", sol.len())),
        Err(e) => fails.push(e.to_string()),
    }
    let generic = EtaParams::from_array(ETA_PARAM_NAMES.map(Poly::var)).to_eta();
    let reference = REFERENCE_ETA.map(poly);
    if [&generic.lambda, &generic.mu, &generic.nu] != [&reference[0], &reference[1], &reference[2]] {
        fails.push("parametrized family differs from the published formulas".into());
    }
    if !multiplicativity_check(&generic) {
        fails.push("family not multiplicative symbolically".into());
    }
    report(6, "eta family", fails, "dimension 6 at degrees 2 and 3".into())
}

/// `δ` read off the published linearization of the family.
fn published_linearization(p: &EtaParams<Rational>) -> Cocommutator<Rational> {
    let mut dh = Wedge2::zero(3);
    dh.add_term(P, H, -p.c.clone());
    dh.add_term(P, K, -p.k.clone());
    dh.add_term(H, K, -p.b.clone());
    let mut dp = Wedge2::zero(3);
    dp.add_term(P, H, -p.d.clone());
    dp.add_term(P, K, -p.b.clone());
    let mut dk = Wedge2::zero(3);
    dk.add_term(P, H, p.e.clone());
    dk.add_term(P, K, p.f.clone());
    dk.add_term(H, K, p.d.clone());
    Cocommutator::new(vec![dk, dh, dp])
}

pub fn dictionary_check() -> CriterionReport {
    let mut fails = Vec::new();
    for i in 0..6 {
        let params = EtaParams::from_array(std::array::from_fn(|j| Rational::from(i64::from(i == j))));
        let from_eta = delta_from_eta(&params.to_eta());
        let published = SixTuple::from_cocommutator(&published_linearization(&params)).map(|t| t.to_poly());
        let dictionary = params.to_tuple().to_poly();
        match from_eta {
            Ok(t) if Some(&t) == published.as_ref() && t == dictionary => {}
            other => fails.push(format!("direction {}: {other:?}", ETA_PARAM_NAMES[i])),
        }
    }
    report(7, "dictionary", fails, "d=-r, k=alpha, f=-gamma, b=s, c=-beta, e=rho".into())
}

pub fn reference_row(n: usize) -> BracketTable {
    let [av, at, vt] = REFERENCE_BRACKETS[n - 1];
    BracketTable::from_strs(av, at, vt).expect("reference table parses")
}

pub fn table2_check(exec: Execution) -> CriterionReport {
    let results = exec.map(&ClassId::ROWS, |&id| (id, table2_row(id)));
    let mut fails = Vec::new();
    for (n, (id, got)) in results.into_iter().enumerate() {
        match got {
            Ok(bt) if bt == reference_row(n + 1) => {}
            other => fails.push(format!("row {id}: {other:?}")),
        }
    }
    report(8, "coordinate brackets", fails, "nine rows equal as polynomials".into())
}

pub fn poisson_lie_check(exec: Execution) -> CriterionReport {
    let results = exec.map(&ClassId::ROWS, |&id| {
        let eta = eta_from_params(&dimensionful_tuple(id));
        match eta {
            Ok(eta) => {
                let bt = coordinate_brackets(&eta);
                (!(jacobi_check(&bt) && multiplicativity_check(&eta))).then(|| format!("row {id}"))
            }
            Err(e) => Some(format!("row {id}: {e}")),
        }
    });
    let mut fails: Vec<String> = results.into_iter().flatten().collect();
    let bad = SixTuple::from_array([1, 0, 0, 0, 1, 0].map(Poly::int));
    if jacobi_check(&coordinate_brackets(&eta_from_params_unchecked(&bad))) {
        fails.push("violating tuple passes Jacobi".into());
    }
    report(9, "Jacobi and Poisson-Lie", fails, "nine structures pass, violating tuple fails".into())
}

pub fn witness_check(exec: Execution, seed: u64) -> CriterionReport {
    let exact = witness_quality(exec, seed, &[ClassId::Row(1)], 50, 0.0);
    let rows: Vec<ClassId> = (2..=8).map(ClassId::Row).collect();
    let approx = witness_quality(exec, seed, &rows, 50, 1e-9);
    let mut fails = exact.failures;
    fails.extend(approx.failures);
    report(
        10,
        "witness quality",
        fails,
        format!(
            "{} exact, {} float, max residual {:.1e}",
            exact.checked, approx.checked, approx.max_residual
        ),
    )
}

pub fn run_criterion(id: u8, exec: Execution, seed: u64) -> Option<CriterionReport> {
    Some(match id {
        1 => table1_reproduction(),
        2 => orbit_invariance_check(exec, seed),
        3 => cocycle_space_check(),
        4 => cojacobi_check_family(),
        5 => coboundary_check(seed),
        6 => eta_family_check(),
        7 => dictionary_check(),
        8 => table2_check(exec),
        9 => poisson_lie_check(exec),
        10 => witness_check(exec, seed),
        _ => return None,
    })
}

/// All criteria in order.
pub fn run_all(exec: Execution, seed: u64) -> Vec<CriterionReport> {
    (1..=NUM_CRITERIA)
        .filter_map(|id| run_criterion(id, exec, seed))
        .collect()
}
