//! Monte Carlo sweeps and batch classification over the automorphism group.

use crate::error::Result;
use crate::exact_algebra::Rational;
use crate::galilei_orbits::{act, classify, witness, ClassId, OrbitClass, SixTuple, Witness};
use crate::par::Execution;
use crate::sampling::{random_automorphism, random_in_class, rng_for, DEFAULT_BOUND};

pub fn classify_batch(exec: Execution, tuples: &[SixTuple<Rational>]) -> Vec<Result<OrbitClass>> {
    exec.map(tuples, classify)
}

/// Outcome of a sweep: how many samples ran and which failed.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SweepReport {
    pub checked: usize,
    pub failures: Vec<String>,
    /// Largest float residual seen, where applicable.
    pub max_residual: f64,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn collect(outcomes: Vec<(Option<String>, f64)>) -> Self {
        SweepReport {
            checked: outcomes.len(),
            max_residual: outcomes.iter().map(|(_, r)| *r).fold(0.0, f64::max),
            failures: outcomes.into_iter().filter_map(|(f, _)| f).collect(),
        }
    }
}

fn stream(row: ClassId, i: usize) -> u64 {
    let r = match row {
        ClassId::Trivial => 0,
        ClassId::Row(n) => u64::from(n),
    };
    (r << 32) | i as u64
}

/// Acts on each canonical tuple by `per_row` random automorphisms and checks
/// that class and invariant are unchanged.
pub fn orbit_invariance(exec: Execution, seed: u64, canon: &[SixTuple<Rational>], per_row: usize) -> SweepReport {
    let jobs: Vec<(usize, usize)> = (0..canon.len())
        .flat_map(|r| (0..per_row).map(move |i| (r, i)))
        .collect();
    let outcomes = exec.map(&jobs, |&(r, i)| {
        let p = &canon[r];
        let mut rng = rng_for(seed, ((r as u64) << 32) | i as u64);
        let phi = random_automorphism(&mut rng, DEFAULT_BOUND);
        let before = classify(p);
        let after = act(p, &phi).and_then(|q| classify(&q));
        let fail = match (&before, &after) {
            (Ok(b), Ok(a)) if a == b => None,
            _ => Some(format!("{p} under {phi:?}: {before:?} vs {after:?}")),
        };
        (fail, 0.0)
    });
    SweepReport::collect(outcomes)
}

/// Random inputs from each class in `rows`, checking that the witness maps
/// them onto the canonical tuple: exactly when the witness is exact,
/// otherwise within `tol`.
pub fn witness_quality(exec: Execution, seed: u64, rows: &[ClassId], per_row: usize, tol: f64) -> SweepReport {
    let jobs: Vec<(ClassId, usize)> = rows
        .iter()
        .flat_map(|&r| (0..per_row).map(move |i| (r, i)))
        .collect();
    let outcomes = exec.map(&jobs, |&(id, i)| {
        let mut rng = rng_for(seed ^ 0x5eed, stream(id, i));
        let (p, _, _) = random_in_class(&mut rng, id, DEFAULT_BOUND);
        let check = || -> Result<(Option<String>, f64)> {
            let class = classify(&p)?;
            let w = witness(&p, &class)?;
            Ok(match &w {
                Witness::Exact(phi) => {
                    let ok = class.canonical().is_some_and(|c| act(&p, phi).ok() == Some(c));
                    ((!ok).then(|| format!("exact witness failed for {p}")), 0.0)
                }
                Witness::Approximate(_) => {
                    let res = w.residual(&p, &class);
                    ((res > tol).then(|| format!("residual {res:e} for {p}")), res)
                }
            })
        };
        check().unwrap_or_else(|e| (Some(format!("{p}: {e}")), f64::INFINITY))
    });
    SweepReport::collect(outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galilei_orbits::canonical_rep;
    use crate::exact_algebra::q;

    #[test]
    fn sequential_and_parallel_agree() {
        let canon = vec![canonical_rep(ClassId::Row(2), Some(q(1, 2))).unwrap()];
        let a = orbit_invariance(Execution::Sequential, 3, &canon, 10);
        let b = orbit_invariance(Execution::Parallel, 3, &canon, 10);
        assert_eq!(a, b);
        assert!(a.passed());
        let rows = [ClassId::Row(1), ClassId::Row(4)];
        let a = witness_quality(Execution::Sequential, 3, &rows, 5, 1e-9);
        let b = witness_quality(Execution::Parallel, 3, &rows, 5, 1e-9);
        assert_eq!(a, b);
    }
}
