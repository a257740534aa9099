//! Finite morphisms of open discs `t -> sum c_i t^i` and their profiles.
//!
//! On the upward path from the origin the radius of the image of the circle
//! of valuation `v` is `V(v) = min_i (i * v + val(c_i))`, the lower envelope
//! of one affine form per term. Its slopes are the dominant degrees, i.e.
//! the multiplicities along the path.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::hahn::{binom_mod_p, Coeff, HahnError, PrimeContext, TermRepr};
use crate::pmfun::{Profile, Val};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NewtonError {
    #[error("series has no terms")]
    Empty,
    #[error("series has a constant term")]
    ConstantTerm,
    #[error("coefficient of t^{0} is zero")]
    ZeroCoeff(u64),
    #[error("coefficient of t^{0} has negative valuation")]
    NegativeValuation(u64),
    #[error("series is not normalized: smallest coefficient valuation is {0}, expected 0")]
    NotNormalized(String),
    #[error("translation center must have positive valuation, got {0}")]
    ProbeValuation(String),
    #[error(transparent)]
    Hahn(#[from] HahnError),
}

/// A sparse series with `c_0 = 0` and `min_i val(c_i) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscSeries {
    ctx: PrimeContext,
    terms: BTreeMap<u64, Coeff>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesRepr {
    pub p: u64,
    pub terms: Vec<SeriesTermRepr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTermRepr {
    pub deg: u64,
    pub coeff: Vec<TermRepr>,
}

/// One maximal interval of the path on which a single degree dominates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominantPiece {
    #[serde(with = "crate::rational::serde_q")]
    pub start: Rational,
    pub end: Val,
    pub degree: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvelopeReport {
    pub profile: Profile,
    pub dominant: Vec<DominantPiece>,
}

impl EnvelopeReport {
    pub fn dominant_degrees(&self) -> Vec<u64> {
        self.dominant.iter().map(|d| d.degree).collect()
    }

    /// Radius threshold of `{multiplicity > bound}` on the path: the largest
    /// `v` such that the dominant degree exceeds `bound` on all of `(0, v]`.
    pub fn threshold_above(&self, bound: u64) -> Val {
        let mut threshold = Val::zero();
        for piece in &self.dominant {
            if piece.degree <= bound {
                break;
            }
            threshold = piece.end.clone();
        }
        threshold
    }
}

impl DiscSeries {
    pub fn new(ctx: PrimeContext, terms: impl IntoIterator<Item = (u64, Coeff)>) -> Result<Self, NewtonError> {
        let mut map: BTreeMap<u64, Coeff> = BTreeMap::new();
        for (deg, c) in terms {
            if c.ctx() != ctx {
                return Err(HahnError::ContextMismatch {
                    left: ctx.p(),
                    right: c.ctx().p(),
                }
                .into());
            }
            let merged = match map.remove(&deg) {
                Some(prev) => &prev + &c,
                None => c,
            };
            map.insert(deg, merged);
        }
        Self::from_map(ctx, map)
    }

    fn from_map(ctx: PrimeContext, terms: BTreeMap<u64, Coeff>) -> Result<Self, NewtonError> {
        if terms.is_empty() {
            return Err(NewtonError::Empty);
        }
        if terms.contains_key(&0) {
            return Err(NewtonError::ConstantTerm);
        }
        let mut min_val = Val::Inf;
        for (deg, c) in &terms {
            let v = c.val();
            match &v {
                Val::Inf => return Err(NewtonError::ZeroCoeff(*deg)),
                Val::Fin(x) if x.is_negative() => return Err(NewtonError::NegativeValuation(*deg)),
                _ => {}
            }
            min_val = min_val.min(v);
        }
        if min_val != Val::zero() {
            return Err(NewtonError::NotNormalized(min_val.to_string()));
        }
        Ok(DiscSeries { ctx, terms })
    }

    pub fn from_repr(repr: &SeriesRepr) -> Result<Self, NewtonError> {
        let ctx = PrimeContext::new(repr.p)?;
        let terms = repr
            .terms
            .iter()
            .map(|t| Ok((t.deg, Coeff::from_repr(ctx, &t.coeff)?)))
            .collect::<Result<Vec<_>, HahnError>>()?;
        Self::new(ctx, terms)
    }

    pub fn to_repr(&self) -> SeriesRepr {
        SeriesRepr {
            p: self.ctx.p(),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(deg, c)| SeriesTermRepr {
                    deg: *deg,
                    coeff: c.to_repr(),
                })
                .collect(),
        }
    }

    pub fn ctx(&self) -> PrimeContext {
        self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<u64, Coeff> {
        &self.terms
    }

    pub fn coeff(&self, deg: u64) -> Option<&Coeff> {
        self.terms.get(&deg)
    }

    /// The minimal degree whose coefficient is a unit.
    pub fn degree(&self) -> u64 {
        *self
            .terms
            .iter()
            .find(|(_, c)| c.val() == Val::zero())
            .expect("normalized")
            .0
    }

    fn forms(&self) -> Vec<(u64, Rational)> {
        self.terms
            .iter()
            .map(|(d, c)| (*d, c.val().finite().expect("nonzero coefficient").clone()))
            .collect()
    }

    /// Lower envelope of the forms `i * v + val(c_i)` on `[0, INF)`.
    pub fn newton_profile(&self) -> EnvelopeReport {
        let forms = self.forms();
        let mut current = self.degree();
        let value_of = |deg: u64| &forms.iter().find(|(d, _)| *d == deg).unwrap().1;
        let mut start = Rational::zero();
        let mut dominant = Vec::new();
        loop {
            let a_cur = value_of(current);
            // Forms of smaller degree overtake the current one at
            // (a_j - a_cur) / (cur - j); the earliest wins, ties go to the
            // smallest degree since it stays below the others afterwards.
            let next = forms
                .iter()
                .filter(|(d, _)| *d < current)
                .map(|(d, a)| ((a - a_cur) / Rational::from_integer((current - d).into()), *d))
                .min_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)));
            match next {
                Some((at, deg)) => {
                    debug_assert!(at > start);
                    dominant.push(DominantPiece {
                        start: std::mem::replace(&mut start, at.clone()),
                        end: Val::Fin(at),
                        degree: current,
                    });
                    current = deg;
                }
                None => {
                    dominant.push(DominantPiece {
                        start,
                        end: Val::Inf,
                        degree: current,
                    });
                    break;
                }
            }
        }
        let breaks = dominant.iter().filter_map(|d| d.end.finite().cloned()).collect();
        let slopes = dominant
            .iter()
            .map(|d| Rational::from_integer(d.degree.into()))
            .collect();
        let profile = Profile::new(breaks, slopes).expect("envelope slopes are positive");
        EnvelopeReport { profile, dominant }
    }

    /// Multiplicity at the point of valuation `v` on the upward path: the
    /// largest degree attaining the envelope minimum. At `INF` (the rigid
    /// origin) this is the smallest degree present.
    pub fn multiplicity_at(&self, v: &Val) -> u64 {
        let forms = self.forms();
        let Val::Fin(v) = v else {
            return forms[0].0;
        };
        let values: Vec<(u64, Rational)> = forms
            .into_iter()
            .map(|(d, a)| (d, Rational::from_integer(d.into()) * v + a))
            .collect();
        let min = values.iter().map(|(_, x)| x).min().unwrap();
        values.iter().filter(|(_, x)| x == min).map(|(d, _)| *d).max().unwrap()
    }

    /// `phi(t + a) - phi(a)`.
    pub fn translate(&self, a: &Coeff) -> Result<DiscSeries, NewtonError> {
        if a.ctx() != self.ctx {
            return Err(HahnError::ContextMismatch {
                left: self.ctx.p(),
                right: a.ctx().p(),
            }
            .into());
        }
        match a.val() {
            Val::Fin(x) if x.is_positive() => {}
            other => return Err(NewtonError::ProbeValuation(other.to_string())),
        }
        let top = *self.terms.keys().next_back().unwrap();
        let mut powers = Vec::with_capacity(top as usize + 1);
        powers.push(Coeff::one(self.ctx));
        for k in 1..=top as usize {
            let next = &powers[k - 1] * a;
            powers.push(next);
        }
        let mut out: BTreeMap<u64, Coeff> = BTreeMap::new();
        for (&i, c) in &self.terms {
            for j in 1..=i {
                let b = binom_mod_p(self.ctx, i, j)?;
                if b == 0 {
                    continue;
                }
                let term = (c * &powers[(i - j) as usize]).scale(b);
                let entry = out.entry(j).or_insert_with(|| Coeff::zero(self.ctx));
                *entry = &*entry + &term;
            }
        }
        out.retain(|_, c| !c.is_zero());
        let translated = Self::from_map(self.ctx, out).expect("translation preserves normalization");
        debug_assert_eq!(translated.degree(), self.degree());
        Ok(translated)
    }

    /// Etale iff `c_1 != 0` and `val(c_1) <= val(i) + val(c_i)` for every
    /// `i`, where `val(i) = INF` when `p | i`; then the derivative is a unit.
    pub fn etale_check(&self) -> bool {
        let Some(c1) = self.terms.get(&1) else {
            return false;
        };
        let v1 = c1.val();
        self.terms
            .iter()
            .filter(|(i, _)| *i % self.ctx.p() != 0)
            .all(|(_, c)| v1 <= c.val())
    }

    /// Every dominant degree on the upward path is a power of `p`.
    pub fn p_power_criterion(&self) -> bool {
        self.newton_profile()
            .dominant
            .iter()
            .all(|d| is_power_of(self.ctx.p(), d.degree))
    }

    /// Compares the envelope at the origin with the envelope after
    /// translating to each probe center. Probes are evaluated in parallel and
    /// the first differing probe in input order is reported.
    pub fn radiality_probe(&self, probes: &[Coeff]) -> Result<RadialityVerdict, NewtonError> {
        let origin = self.newton_profile();
        let reports = self.probe_reports(probes)?;
        for (i, report) in reports.into_iter().enumerate() {
            if report.profile != origin.profile {
                return Ok(RadialityVerdict::Refuted {
                    witness: i,
                    probe: probes[i].clone(),
                    origin,
                    translated: report,
                });
            }
        }
        Ok(RadialityVerdict::Consistent { probes: probes.len() })
    }

    /// Like [`Self::radiality_probe`], restricted to the locus
    /// `{multiplicity > bound}`: only its radius threshold is compared.
    pub fn locus_probe(&self, probes: &[Coeff], bound: u64) -> Result<LocusVerdict, NewtonError> {
        let origin = self.newton_profile().threshold_above(bound);
        let reports = self.probe_reports(probes)?;
        for (i, report) in reports.into_iter().enumerate() {
            let t = report.threshold_above(bound);
            if t != origin {
                return Ok(LocusVerdict::Refuted {
                    bound,
                    witness: i,
                    origin_threshold: origin,
                    probe_threshold: t,
                });
            }
        }
        Ok(LocusVerdict::Consistent {
            bound,
            threshold: origin,
            probes: probes.len(),
        })
    }

    fn probe_reports(&self, probes: &[Coeff]) -> Result<Vec<EnvelopeReport>, NewtonError> {
        probes
            .par_iter()
            .map(|a| self.translate(a).map(|s| s.newton_profile()))
            .collect()
    }
}

impl Serialize for DiscSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_repr().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiscSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(d)?;
        DiscSeries::from_repr(&repr).map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Display for DiscSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (k, (deg, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*t^{deg}")?;
        }
        Ok(())
    }
}

/// Outcome of a finite probe of radiality. `Consistent` is not a proof.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum RadialityVerdict {
    Refuted {
        witness: usize,
        probe: Coeff,
        origin: EnvelopeReport,
        translated: EnvelopeReport,
    },
    Consistent {
        probes: usize,
    },
}

impl RadialityVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, RadialityVerdict::Refuted { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocusVerdict {
    Refuted {
        bound: u64,
        witness: usize,
        origin_threshold: Val,
        probe_threshold: Val,
    },
    Consistent {
        bound: u64,
        threshold: Val,
        probes: usize,
    },
}

pub fn is_power_of(p: u64, mut d: u64) -> bool {
    if d == 0 {
        return false;
    }
    while d.is_multiple_of(p) {
        d /= p;
    }
    d == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pmfun::{PmFunction, Side};
    use crate::rational::{int, q};
    use proptest::prelude::*;

    fn ctx(p: u64) -> PrimeContext {
        PrimeContext::new(p).unwrap()
    }

    fn mono(p: u64, e: Rational) -> Coeff {
        Coeff::monomial(ctx(p), 1, e)
    }

    /// `terms` as (degree, valuation) pairs with unit coefficient 1.
    fn series(p: u64, terms: &[(u64, Rational)]) -> DiscSeries {
        DiscSeries::new(ctx(p), terms.iter().map(|(d, e)| (*d, mono(p, e.clone())))).unwrap()
    }

    fn brute_envelope(s: &DiscSeries, v: &Rational) -> Rational {
        s.terms()
            .iter()
            .map(|(d, c)| Rational::from_integer((*d).into()) * v + c.val().finite().unwrap())
            .min()
            .unwrap()
    }

    fn grid() -> Vec<Rational> {
        (0..=240)
            .map(|k| q(k, 12))
            .chain([q(1, 15), q(1, 6), q(91, 600), q(29, 2)])
            .collect()
    }

    fn prof(breaks: &[Rational], slopes: &[i64]) -> Profile {
        Profile::new(breaks.to_vec(), slopes.iter().map(|s| int(*s)).collect()).unwrap()
    }

    #[test]
    fn validation() {
        let c = ctx(3);
        assert_eq!(DiscSeries::new(c, []), Err(NewtonError::Empty));
        assert_eq!(
            DiscSeries::new(c, [(0, Coeff::one(c)), (1, Coeff::one(c))]),
            Err(NewtonError::ConstantTerm)
        );
        assert!(matches!(
            DiscSeries::new(c, [(2, mono(3, int(1)))]),
            Err(NewtonError::NotNormalized(_))
        ));
        assert!(matches!(
            DiscSeries::new(c, [(2, mono(3, int(-1)))]),
            Err(NewtonError::NegativeValuation(2))
        ));
        // 1 + 2 cancels mod 3.
        assert_eq!(
            DiscSeries::new(c, [(1, Coeff::one(c)), (1, Coeff::monomial(c, 2, int(0)))]),
            Err(NewtonError::ZeroCoeff(1))
        );
        assert!(DiscSeries::new(c, [(1, Coeff::one(ctx(5)))]).is_err());
    }

    #[test]
    fn profile_examples() {
        let s = series(3, &[(3, int(0)), (1, int(2))]);
        let r = s.newton_profile();
        assert_eq!(r.profile, prof(&[int(1)], &[3, 1]));
        assert_eq!(r.dominant_degrees(), vec![3, 1]);

        let s = series(3, &[(9, int(0)), (3, int(1)), (1, int(5))]);
        let r = s.newton_profile();
        assert_eq!(r.profile, prof(&[q(1, 6), int(2)], &[9, 3, 1]));
        for v in grid() {
            assert_eq!(r.profile.eval_q(&v), brute_envelope(&s, &v));
        }

        assert!(series(3, &[(1, int(0))]).newton_profile().profile.is_identity());
    }

    #[test]
    fn multiplicity_examples() {
        let s = series(3, &[(6, int(0)), (1, int(1))]);
        assert_eq!(s.multiplicity_at(&Val::zero()), 6);
        assert_eq!(s.multiplicity_at(&Val::Fin(int(1))), 1);
        let s = series(3, &[(9, int(0)), (3, int(1)), (1, int(5))]);
        assert_eq!(s.multiplicity_at(&Val::Fin(int(1))), 3);
        assert_eq!(s.multiplicity_at(&Val::Inf), 1);
        let s = series(3, &[(3, int(0)), (1, int(2))]);
        assert_eq!(s.multiplicity_at(&Val::Fin(int(1))), 3);
    }

    #[test]
    fn translate_examples() {
        let c3 = ctx(3);
        let s = series(3, &[(18, int(0)), (3, int(1)), (1, int(30))]);
        let t = s.translate(&mono(3, q(1, 2))).unwrap();
        let expected = DiscSeries::new(
            c3,
            [
                (18, Coeff::one(c3)),
                (9, Coeff::monomial(c3, 2, q(9, 2))),
                (3, mono(3, int(1))),
                (1, mono(3, int(30))),
            ],
        )
        .unwrap();
        assert_eq!(t, expected);

        let id = series(3, &[(1, int(0))]);
        assert_eq!(id.translate(&mono(3, int(100))).unwrap(), id);

        let s = series(3, &[(6, int(0)), (1, int(1))]);
        let t = s.translate(&mono(3, q(1, 3))).unwrap();
        let expected = DiscSeries::new(
            c3,
            [
                (6, Coeff::one(c3)),
                (3, Coeff::monomial(c3, 2, int(1))),
                (1, mono(3, int(1))),
            ],
        )
        .unwrap();
        assert_eq!(t, expected);

        assert!(matches!(
            s.translate(&Coeff::one(c3)),
            Err(NewtonError::ProbeValuation(_))
        ));
        assert!(matches!(
            s.translate(&Coeff::zero(c3)),
            Err(NewtonError::ProbeValuation(_))
        ));
    }

    /// Expands `(t + a)^i` term by term with exact integer binomials.
    fn translate_oracle(s: &DiscSeries, a: &Coeff) -> BTreeMap<u64, Coeff> {
        let c = s.ctx();
        let mut out: BTreeMap<u64, Coeff> = BTreeMap::new();
        for (&i, ci) in s.terms() {
            // Pascal's triangle row i, mod p.
            let mut row = vec![1u64];
            for _ in 0..i {
                let mut next = vec![1u64; row.len() + 1];
                for k in 1..row.len() {
                    next[k] = (row[k - 1] + row[k]) % c.p();
                }
                row = next;
            }
            for j in 1..=i {
                let mut term = ci.scale(row[j as usize]);
                for _ in 0..(i - j) {
                    term = &term * a;
                }
                let e = out.entry(j).or_insert_with(|| Coeff::zero(c));
                *e = &*e + &term;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    #[test]
    fn translate_matches_binomial_expansion() {
        let s = series(3, &[(18, int(0)), (3, int(1)), (1, int(30))]);
        for a in [
            mono(3, q(1, 2)),
            mono(3, q(1, 100)),
            Coeff::from_terms(ctx(3), [(q(1, 3), 1), (int(2), 2)]),
        ] {
            assert_eq!(s.translate(&a).unwrap().terms(), &translate_oracle(&s, &a));
        }
    }

    #[test]
    fn radiality_examples() {
        let s = series(3, &[(18, int(0)), (3, int(1)), (1, int(30))]);
        let origin = s.newton_profile();
        assert_eq!(origin.dominant_degrees(), vec![18, 3, 1]);
        assert_eq!(origin.threshold_above(3), Val::Fin(q(1, 15)));
        let probe = mono(3, q(1, 100));
        match s.radiality_probe(std::slice::from_ref(&probe)).unwrap() {
            RadialityVerdict::Refuted {
                witness, translated, ..
            } => {
                assert_eq!(witness, 0);
                assert_eq!(translated.dominant_degrees(), vec![18, 9, 3, 1]);
                assert_eq!(translated.threshold_above(3), Val::Fin(q(91, 600)));
            }
            other => panic!("expected refutation, got {other:?}"),
        }
        match s.locus_probe(&[probe], 1).unwrap() {
            LocusVerdict::Consistent { threshold, .. } => assert_eq!(threshold, Val::Fin(q(29, 2))),
            other => panic!("{other:?}"),
        }
        let plem = series(3, &[(3, int(0)), (1, int(2))]);
        let probes: Vec<Coeff> = [q(1, 100), q(1, 2), int(1), int(5)]
            .into_iter()
            .map(|e| mono(3, e))
            .collect();
        assert_eq!(
            plem.radiality_probe(&probes).unwrap(),
            RadialityVerdict::Consistent { probes: 4 }
        );
    }

    #[test]
    fn etale_examples() {
        assert!(series(3, &[(3, int(0)), (1, int(2))]).etale_check());
        assert!(!series(3, &[(2, int(0)), (1, int(1))]).etale_check());
        assert!(series(3, &[(1, int(0))]).etale_check());
        assert!(!series(3, &[(3, int(0))]).etale_check());
    }

    #[test]
    fn p_power_examples() {
        assert!(!series(3, &[(6, int(0)), (1, int(1))]).p_power_criterion());
        assert!(series(3, &[(9, int(0)), (3, int(1)), (1, int(5))]).p_power_criterion());
        assert!(series(3, &[(1, int(0))]).p_power_criterion());
    }

    #[test]
    fn serialization_format() {
        let s = series(3, &[(18, int(0)), (3, int(1)), (1, int(30))]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(
            json,
            r#"{"p":3,"terms":[{"deg":18,"coeff":[{"e":"0/1","a":1}]},{"deg":3,"coeff":[{"e":"1/1","a":1}]},{"deg":1,"coeff":[{"e":"30/1","a":1}]}]}"#
        );
        assert_eq!(serde_json::from_str::<DiscSeries>(&json).unwrap(), s);
        assert!(serde_json::from_str::<DiscSeries>(r#"{"p":4,"terms":[]}"#).is_err());
    }

    fn arb_series(p: u64) -> impl Strategy<Value = DiscSeries> {
        (
            prop::collection::btree_map(1u64..30, (0i64..40, 1i64..5), 1..6),
            any::<prop::sample::Index>(),
        )
            .prop_map(move |(map, idx)| {
                let unit = *idx.get(&map.keys().copied().collect::<Vec<_>>());
                let c = ctx(p);
                DiscSeries::new(
                    c,
                    map.into_iter().map(|(d, (n, den))| {
                        let e = if d == unit { int(0) } else { q(n, den) };
                        (d, Coeff::monomial(c, 1, e))
                    }),
                )
                .unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn envelope_matches_brute_force(s in arb_series(3)) {
            let r = s.newton_profile();
            for v in grid() {
                prop_assert_eq!(r.profile.eval_q(&v), brute_envelope(&s, &v));
            }
            prop_assert!(r.profile.is_concave());
            prop_assert!(r.dominant.windows(2).all(|w| w[0].degree > w[1].degree));
        }

        #[test]
        fn multiplicity_is_monotone_and_matches_slopes(s in arb_series(5)) {
            let r = s.newton_profile();
            let g = grid();
            for w in g.windows(2).filter(|w| w[0] < w[1]) {
                prop_assert!(s.multiplicity_at(&Val::Fin(w[0].clone())) >= s.multiplicity_at(&Val::Fin(w[1].clone())));
            }
            for piece in &r.dominant {
                let mid = match &piece.end {
                    Val::Fin(e) => (&piece.start + e) / int(2),
                    Val::Inf => &piece.start + int(1),
                };
                prop_assert_eq!(s.multiplicity_at(&Val::Fin(mid.clone())), piece.degree);
                prop_assert_eq!(r.profile.slope_at(&mid, Side::TowardZero).unwrap(), int(piece.degree as i64));
            }
        }

        #[test]
        fn translation_keeps_degree(s in arb_series(3), n in 1i64..40, d in 1i64..6) {
            let t = s.translate(&Coeff::monomial(s.ctx(), 2, q(n, d))).unwrap();
            prop_assert_eq!(t.degree(), s.degree());
        }

        #[test]
        fn degree_p_series_is_radial(p in prop::sample::select(vec![2u64, 3, 5, 7]), n in 1i64..30, d in 1i64..5, pn in 1i64..30, pd in 1i64..5) {
            let v1 = q(n, d);
            let s = series(p, &[(p, int(0)), (1, v1.clone())]);
            let r = s.newton_profile();
            let expected = Profile::single_break(int(p as i64), &v1 / int(p as i64 - 1)).unwrap();
            prop_assert_eq!(&r.profile, &expected);
            let t = s.translate(&mono(p, q(pn, pd))).unwrap();
            prop_assert_eq!(t.newton_profile().profile, expected);
        }
    }

    #[test]
    fn plain_pm_conversion() {
        let s = series(3, &[(3, int(0)), (1, int(2))]);
        let pm: PmFunction = s.newton_profile().profile.into();
        assert_eq!(pm.breaks(), &[int(1)]);
    }
}
