//! Seeded generators for the randomized checks.

use ramcalc_core::pmfun::PmFunction;
use ramcalc_core::{Coeff, FiniteGroup, InertiaDatum, PrimeContext, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n/d` with `1 <= n <= num_max`, `1 <= d <= den_max`.
pub fn positive(rng: &mut ChaCha8Rng, num_max: i64, den_max: i64) -> Rational {
    Rational::new(rng.gen_range(1..=num_max).into(), rng.gen_range(1..=den_max).into())
}

/// Cyclic groups of order 2..=27 and the elementary abelian groups of
/// order at most 27.
pub fn small_groups() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = (2..=27).map(|n| (format!("Z/{n}"), FiniteGroup::cyclic(n))).collect();
    for factors in [
        vec![2, 2],
        vec![2, 2, 2],
        vec![2, 2, 2, 2],
        vec![3, 3],
        vec![3, 3, 3],
        vec![5, 5],
    ] {
        let name = format!("(Z/{})^{}", factors[0], factors.len());
        out.push((name, FiniteGroup::abelian(&factors)));
    }
    out
}

/// A datum from a random descending chain of normal subgroups with random
/// increasing values; the first value is 0 about one time in five.
pub fn chain_datum(rng: &mut ChaCha8Rng, g: &FiniteGroup, normal: &[Vec<usize>]) -> InertiaDatum {
    let mut current: Vec<usize> = (0..g.order()).collect();
    let mut value = if rng.gen_ratio(1, 5) {
        Rational::from_integer(0.into())
    } else {
        positive(rng, 12, 4)
    };
    let mut chain = Vec::new();
    while current.len() > 1 {
        chain.push((current.clone(), value.clone()));
        let smaller: Vec<&Vec<usize>> = normal
            .iter()
            .filter(|h| h.len() < current.len() && h.iter().all(|x| current.binary_search(x).is_ok()))
            .collect();
        current = smaller[rng.gen_range(0..smaller.len())].clone();
        value += positive(rng, 12, 4);
    }
    InertiaDatum::from_chain(g.clone(), &chain).expect("chains of normal subgroups are valid data")
}

/// `per_group` data on every group of [`small_groups`].
pub fn inertia_data(seed: u64, per_group: usize) -> Vec<(String, InertiaDatum)> {
    let mut rng = rng(seed);
    let mut out = Vec::new();
    for (name, g) in small_groups() {
        let normal = g.normal_subgroups();
        for k in 0..per_group {
            out.push((format!("{name}#{k}"), chain_datum(&mut rng, &g, &normal)));
        }
    }
    out
}

/// A random function with up to four breaks and rational slopes; the
/// intercept, if any, is non-negative so that compositions are defined.
pub fn pm(rng: &mut ChaCha8Rng, with_intercept: bool) -> PmFunction {
    let n = rng.gen_range(0..=4);
    let mut breaks = Vec::with_capacity(n);
    let mut x = Rational::from_integer(0.into());
    for _ in 0..n {
        x += positive(rng, 12, 6);
        breaks.push(x.clone());
    }
    let mut slopes: Vec<Rational> = Vec::with_capacity(n + 1);
    while slopes.len() < n + 1 {
        let s = positive(rng, 20, 4);
        if slopes.last() != Some(&s) {
            slopes.push(s);
        }
    }
    let intercept = if with_intercept {
        Rational::new(rng.gen_range(0..=6).into(), rng.gen_range(1..=3).into())
    } else {
        Rational::from_integer(0.into())
    };
    PmFunction::new(intercept, breaks, slopes).expect("generated data is canonical")
}

/// A sum of up to four monomials `a ε^e` with `e` in `[-2, 12]`.
pub fn coeff(rng: &mut ChaCha8Rng, ctx: PrimeContext) -> Coeff {
    let n = rng.gen_range(0..=4);
    let terms: Vec<(Rational, i64)> = (0..n)
        .map(|_| {
            let e = Rational::new(rng.gen_range(-6..=36).into(), rng.gen_range(1..=3).into());
            (e, rng.gen_range(1..ctx.p() as i64 + 3))
        })
        .collect();
    Coeff::from_terms(ctx, terms)
}
