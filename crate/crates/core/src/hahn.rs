//! Finite Hahn sums `sum a_j * eps^{e_j}` with `a_j` in `F_p` and rational
//! exponents: an exact stand-in for elements of an algebraically closed
//! non-archimedean field of residue characteristic `p`.
//!
//! Only the ring operations and the valuation are provided; nothing in the
//! disc and translation calculus needs division.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::pmfun::Val;
use crate::rational::{fmt_q, parse_q, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HahnError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("coefficients over F_{left} and F_{right} cannot be combined")]
    ContextMismatch { left: u64, right: u64 },
    #[error("binomial C({n}, {j}) requested with j > n")]
    BinomialRange { n: u64, j: u64 },
    #[error("bad exponent: {0}")]
    Exponent(String),
}

/// The residue characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeContext {
    p: u64,
}

impl PrimeContext {
    pub fn new(p: u64) -> Result<Self, HahnError> {
        if is_prime(p) {
            Ok(PrimeContext { p })
        } else {
            Err(HahnError::NotPrime(p))
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv_mod(&self, a: u64) -> u64 {
        // Fermat; a is nonzero mod p.
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_mod(acc, base);
            }
            base = self.mul_mod(base, base);
            exp >>= 1;
        }
        acc
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `C(n, j) mod p` by Lucas's theorem.
pub fn binom_mod_p(ctx: PrimeContext, n: u64, j: u64) -> Result<u64, HahnError> {
    if j > n {
        return Err(HahnError::BinomialRange { n, j });
    }
    let p = ctx.p;
    let (mut n, mut j) = (n, j);
    let mut acc = 1u64;
    while j > 0 || n > 0 {
        let (nd, jd) = (n % p, j % p);
        if jd > nd {
            return Ok(0);
        }
        acc = ctx.mul_mod(acc, small_binom(ctx, nd, jd));
        n /= p;
        j /= p;
    }
    Ok(acc)
}

// C(a, b) mod p for a < p.
fn small_binom(ctx: PrimeContext, a: u64, b: u64) -> u64 {
    let b = b.min(a - b);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..b {
        num = ctx.mul_mod(num, a - i);
        den = ctx.mul_mod(den, i + 1);
    }
    ctx.mul_mod(num, ctx.inv_mod(den))
}

/// A finite Hahn sum: terms sorted by strictly increasing exponent, each
/// coefficient in `1..p`. The empty sum is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coeff {
    ctx: PrimeContext,
    terms: Vec<(Rational, u64)>,
}

/// One `{"e": "num/den", "a": k}` entry of the file format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRepr {
    pub e: String,
    pub a: i64,
}

impl Coeff {
    pub fn zero(ctx: PrimeContext) -> Self {
        Coeff { ctx, terms: Vec::new() }
    }

    pub fn one(ctx: PrimeContext) -> Self {
        Self::monomial(ctx, 1, Rational::zero())
    }

    /// `a * eps^e`, with `a` reduced mod `p`.
    pub fn monomial(ctx: PrimeContext, a: i64, e: Rational) -> Self {
        Self::from_terms(ctx, [(e, a)])
    }

    /// Sorts by exponent, merges equal exponents mod `p` and drops zeros.
    pub fn from_terms(ctx: PrimeContext, terms: impl IntoIterator<Item = (Rational, i64)>) -> Self {
        let mut raw: Vec<(Rational, u64)> = terms.into_iter().map(|(e, a)| (e, ctx.reduce(a))).collect();
        raw.sort_by(|x, y| x.0.cmp(&y.0));
        Self::normalize_sorted(ctx, raw)
    }

    fn normalize_sorted(ctx: PrimeContext, raw: Vec<(Rational, u64)>) -> Self {
        let mut terms: Vec<(Rational, u64)> = Vec::with_capacity(raw.len());
        for (e, a) in raw {
            match terms.last_mut() {
                Some((le, la)) if *le == e => *la = (*la + a) % ctx.p,
                _ => terms.push((e, a)),
            }
            if terms.last().is_some_and(|(_, a)| *a == 0) {
                terms.pop();
            }
        }
        Coeff { ctx, terms }
    }

    pub fn from_repr(ctx: PrimeContext, repr: &[TermRepr]) -> Result<Self, HahnError> {
        let terms = repr
            .iter()
            .map(|t| {
                parse_q(&t.e)
                    .map(|e| (e, t.a))
                    .map_err(|err| HahnError::Exponent(err.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_terms(ctx, terms))
    }

    pub fn to_repr(&self) -> Vec<TermRepr> {
        self.terms
            .iter()
            .map(|(e, a)| TermRepr {
                e: fmt_q(e),
                a: *a as i64,
            })
            .collect()
    }

    pub fn ctx(&self) -> PrimeContext {
        self.ctx
    }

    pub fn terms(&self) -> &[(Rational, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Smallest exponent; `INF` for zero.
    pub fn val(&self) -> Val {
        self.terms.first().map_or(Val::Inf, |(e, _)| Val::Fin(e.clone()))
    }

    fn check(&self, other: &Coeff) -> Result<(), HahnError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(HahnError::ContextMismatch {
                left: self.ctx.p,
                right: other.ctx.p,
            })
        }
    }

    pub fn try_add(&self, other: &Coeff) -> Result<Coeff, HahnError> {
        self.check(other)?;
        let (a, b) = (&self.terms, &other.terms);
        let mut merged = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j == b.len() || (i < a.len() && a[i].0 <= b[j].0);
            if take_a {
                merged.push(a[i].clone());
                i += 1;
            } else {
                merged.push(b[j].clone());
                j += 1;
            }
        }
        Ok(Self::normalize_sorted(self.ctx, merged))
    }

    pub fn try_mul(&self, other: &Coeff) -> Result<Coeff, HahnError> {
        self.check(other)?;
        let ctx = self.ctx;
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, aa) in &self.terms {
            for (eb, ab) in &other.terms {
                raw.push((ea + eb, ctx.mul_mod(*aa, *ab)));
            }
        }
        raw.sort_by(|x, y| x.0.cmp(&y.0));
        Ok(Self::normalize_sorted(ctx, raw))
    }

    /// Multiplication by the integer `k`, reduced mod `p`.
    pub fn scale(&self, k: u64) -> Coeff {
        let k = k % self.ctx.p;
        if k == 0 {
            return Coeff::zero(self.ctx);
        }
        Coeff {
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(e, a)| (e.clone(), self.ctx.mul_mod(*a, k)))
                .collect(),
        }
    }

    pub fn neg(&self) -> Coeff {
        self.scale(self.ctx.p - 1)
    }

    pub fn pow(&self, n: u64) -> Coeff {
        let mut acc = Coeff::one(self.ctx);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

/// Panics if the operands live over different primes; use
/// [`Coeff::try_add`] when that is not already guaranteed.
impl Add for &Coeff {
    type Output = Coeff;

    fn add(self, rhs: &Coeff) -> Coeff {
        self.try_add(rhs).expect("mixed prime contexts")
    }
}

/// Panics if the operands live over different primes.
impl Mul for &Coeff {
    type Output = Coeff;

    fn mul(self, rhs: &Coeff) -> Coeff {
        self.try_mul(rhs).expect("mixed prime contexts")
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, a)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if e.is_zero() {
                write!(f, "{a}")?;
            } else if e.is_one() {
                write!(f, "{a}*eps")?;
            } else {
                write!(f, "{a}*eps^({})", fmt_q(e))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn c(ctx: PrimeContext, terms: &[(Rational, i64)]) -> Coeff {
        Coeff::from_terms(ctx, terms.iter().cloned())
    }

    fn f3() -> PrimeContext {
        PrimeContext::new(3).unwrap()
    }

    #[test]
    fn prime_context() {
        assert!(PrimeContext::new(2).is_ok());
        assert!(PrimeContext::new(5).is_ok());
        assert_eq!(PrimeContext::new(1), Err(HahnError::NotPrime(1)));
        assert_eq!(PrimeContext::new(9), Err(HahnError::NotPrime(9)));
    }

    #[test]
    fn arithmetic_examples_mod_3() {
        let ctx = f3();
        let a = c(ctx, &[(int(1), 1), (int(2), 2)]);
        let b = c(ctx, &[(int(1), 2)]);
        assert_eq!(&a + &b, c(ctx, &[(int(2), 2)]));

        let x = Coeff::monomial(ctx, 1, q(1, 2));
        let y = Coeff::monomial(ctx, 2, q(1, 2));
        assert_eq!(&x * &y, Coeff::monomial(ctx, 2, int(1)));

        let s = c(ctx, &[(int(0), 1), (int(1), 1)]);
        assert_eq!(s.pow(3), c(ctx, &[(int(0), 1), (int(3), 1)]));
        assert_eq!(s.pow(3), &(&s * &s) * &s);
        assert_eq!(s.pow(0), Coeff::one(ctx));
    }

    #[test]
    fn valuation_examples() {
        let ctx = f3();
        assert_eq!(Coeff::zero(ctx).val(), Val::Inf);
        let a = c(ctx, &[(q(9, 2), 2), (int(7), 1)]);
        assert_eq!(a.val(), Val::Fin(q(9, 2)));
        let x = Coeff::monomial(ctx, 2, q(1, 3));
        let y = Coeff::monomial(ctx, 2, q(2, 3));
        let xy = &x * &y;
        assert_eq!(xy, Coeff::monomial(ctx, 1, int(1)));
        assert_eq!(xy.val(), Val::Fin(int(1)));
    }

    #[test]
    fn mixing_primes_is_an_error() {
        let a = Coeff::one(f3());
        let b = Coeff::one(PrimeContext::new(5).unwrap());
        assert_eq!(a.try_add(&b), Err(HahnError::ContextMismatch { left: 3, right: 5 }));
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn serialization_format() {
        let ctx = f3();
        let a = c(ctx, &[(int(7), 1), (q(9, 2), 2)]);
        let json = serde_json::to_string(&a.to_repr()).unwrap();
        assert_eq!(json, r#"[{"e":"9/2","a":2},{"e":"7/1","a":1}]"#);
        let back: Vec<TermRepr> = serde_json::from_str(&json).unwrap();
        assert_eq!(Coeff::from_repr(ctx, &back).unwrap(), a);
        let bad = vec![TermRepr { e: "0.5".into(), a: 1 }];
        assert!(Coeff::from_repr(ctx, &bad).is_err());
    }

    fn exact_binom(n: u64, j: u64) -> BigUint {
        let fact = |m: u64| (1..=m).fold(BigUint::one(), |acc, k| acc * k);
        fact(n) / (fact(j) * fact(n - j))
    }

    #[test]
    fn lucas_examples() {
        let ctx = f3();
        assert_eq!(exact_binom(9, 3) % 3u32, BigUint::zero());
        assert_eq!(binom_mod_p(ctx, 9, 3).unwrap(), 0);
        assert_eq!(exact_binom(18, 9) % 3u32, BigUint::from(2u32));
        assert_eq!(binom_mod_p(ctx, 18, 9).unwrap(), 2);
        for n in 0..20 {
            assert_eq!(binom_mod_p(ctx, n, 0).unwrap(), 1);
        }
        assert_eq!(binom_mod_p(ctx, 2, 3), Err(HahnError::BinomialRange { n: 2, j: 3 }));
    }

    #[test]
    fn lucas_matches_factorials_up_to_60() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let ctx = PrimeContext::new(p).unwrap();
            for n in 0..=60 {
                for j in 0..=n {
                    let expected = exact_binom(n, j) % p;
                    assert_eq!(
                        BigUint::from(binom_mod_p(ctx, n, j).unwrap()),
                        expected,
                        "p={p} C({n},{j})"
                    );
                }
            }
        }
    }

    pub(crate) fn arb_coeff(p: u64) -> impl Strategy<Value = Coeff> {
        let ctx = PrimeContext::new(p).unwrap();
        prop::collection::vec(((0i64..24, 1i64..4), 0i64..(p as i64)), 0..5)
            .prop_map(move |ts| Coeff::from_terms(ctx, ts.into_iter().map(|((n, d), a)| (q(n, d), a))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn ultrametric(a in arb_coeff(3), b in arb_coeff(3)) {
            let s = &a + &b;
            let (va, vb) = (a.val(), b.val());
            prop_assert!(s.val() >= va.clone().min(vb.clone()));
            if va != vb {
                prop_assert_eq!(s.val(), va.min(vb));
            }
        }

        #[test]
        fn ring_axioms(a in arb_coeff(5), b in arb_coeff(5), c in arb_coeff(5)) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a + &a.neg()).is_zero());
            prop_assert_eq!((&a * &b).val(), a.val() + b.val());
        }

        #[test]
        fn frobenius(a in arb_coeff(3), b in arb_coeff(3), c in arb_coeff(2), d in arb_coeff(2)) {
            prop_assert_eq!((&a + &b).pow(3), &a.pow(3) + &b.pow(3));
            prop_assert_eq!((&c + &d).pow(2), &c.pow(2) + &d.pow(2));
        }
    }
}
