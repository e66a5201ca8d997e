//! Seeded pseudo-random inputs. Every sample draws from its own ChaCha stream
//! keyed by `(seed, index)`, so results do not depend on scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact_algebra::Rational;
use crate::galilei_orbits::{act, canonical_rep, Automorphism, ClassId, SixTuple};

/// Environment variable overriding the default seed.
pub const SEED_ENV: &str = "LIEBIALG_SEED";
pub const DEFAULT_SEED: u64 = 1995;

/// Bound on numerators and denominators of random rationals.
pub const DEFAULT_BOUND: i64 = 10;

/// Seed from `LIEBIALG_SEED`, or the default when unset or unparsable.
pub fn seed_from_env() -> u64 {
    std::env::var(SEED_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// `n/d` with `|n| ≤ bound` and `1 ≤ d ≤ bound`.
pub fn random_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    Rational::new(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let x = random_rational(rng, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Automorphism with rational entries drawn as above and `Δ ≠ 0`.
pub fn random_automorphism<R: Rng>(rng: &mut R, bound: i64) -> Automorphism<Rational> {
    loop {
        let mut e = || random_rational(rng, bound);
        let phi = Automorphism::new(e(), e(), e(), e(), e(), e());
        if !phi.det().is_zero() {
            return phi;
        }
    }
}

/// ε for a class: any rational for class 1, non-negative for classes 2–4.
pub fn random_epsilon<R: Rng>(rng: &mut R, id: ClassId, bound: i64) -> Option<Rational> {
    match id {
        ClassId::Row(1) => Some(random_rational(rng, bound)),
        ClassId::Row(2..=4) => Some(random_rational(rng, bound).abs()),
        _ => None,
    }
}

/// A random point of the orbit of `id`, with its seed tuple and the
/// automorphism used.
pub fn random_in_class<R: Rng>(
    rng: &mut R,
    id: ClassId,
    bound: i64,
) -> (SixTuple<Rational>, SixTuple<Rational>, Automorphism<Rational>) {
    let eps = random_epsilon(rng, id, bound);
    let canon = canonical_rep(id, eps).expect("valid class");
    let phi = random_automorphism(rng, bound);
    let p = act(&canon, &phi).expect("nonsingular");
    (p, canon, phi)
}

/// A random tuple violating at least one co-Jacobi constraint.
pub fn random_violating<R: Rng>(rng: &mut R, bound: i64) -> SixTuple<Rational> {
    loop {
        let p = SixTuple::from_array(std::array::from_fn(|_| random_rational(rng, bound)));
        if !p.satisfies_constraints() {
            return p;
        }
    }
}
