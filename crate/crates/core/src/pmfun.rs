//! Piecewise-monomial functions in valuation coordinates.
//!
//! A piecewise `|k^x|`-monomial bijection of `[0, 1]` becomes, after taking
//! `v = -log_q r`, a continuous piecewise-affine increasing map of
//! `[0, INF]`. Each affine piece `v -> n * v + v(c)` is a monomial `c * t^n`,
//! so the slopes are the degrees of the pieces.

use std::fmt;
use std::ops::{Add, Deref};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{fmt_q, parse_q, serde_q, serde_q_vec, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PmError {
    #[error("expected {expected} slopes for {breaks} breaks, got {got}")]
    Shape { breaks: usize, expected: usize, got: usize },
    #[error("slope {0} is not positive")]
    NonPositiveSlope(String),
    #[error("breakpoints must be nonnegative and strictly increasing")]
    BadBreaks,
    #[error("function has nonzero intercept {0}")]
    NonzeroIntercept(String),
    #[error("no affine piece toward zero at v = 0")]
    NoPieceBelowZero,
    #[error("argument {0} is outside [0, inf)")]
    OutOfDomain(String),
}

/// An extended valuation: a finite rational or `INF`.
///
/// Radii are always nonnegative; valuations of field elements (see
/// [`crate::hahn::Coeff::val`]) may be negative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Val {
    Fin(Rational),
    Inf,
}

impl Val {
    pub fn zero() -> Self {
        Val::Fin(Rational::zero())
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Val::Fin(x) => Some(x),
            Val::Inf => None,
        }
    }

    pub fn is_inf(&self) -> bool {
        matches!(self, Val::Inf)
    }

    pub fn parse(s: &str) -> Result<Self, crate::rational::ParseRationalError> {
        if s.trim().eq_ignore_ascii_case("inf") {
            Ok(Val::Inf)
        } else {
            parse_q(s).map(Val::Fin)
        }
    }
}

impl From<Rational> for Val {
    fn from(x: Rational) -> Self {
        Val::Fin(x)
    }
}

impl Add for &Val {
    type Output = Val;

    fn add(self, rhs: &Val) -> Val {
        match (self, rhs) {
            (Val::Fin(a), Val::Fin(b)) => Val::Fin(a + b),
            _ => Val::Inf,
        }
    }
}

impl Add for Val {
    type Output = Val;

    fn add(self, rhs: Val) -> Val {
        &self + &rhs
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Fin(x) => f.write_str(&fmt_q(x)),
            Val::Inf => f.write_str("inf"),
        }
    }
}

impl Serialize for Val {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Val {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Val::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Which affine piece to read at a breakpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// The piece on `[v - e, v]`; corresponds to the right derivative in `r`.
    TowardZero,
    TowardInfinity,
}

/// A continuous, strictly increasing, piecewise-affine function on `[0, INF]`
/// with rational breakpoints and positive rational slopes, kept in canonical
/// form: breaks are strictly positive and increasing, adjacent slopes differ.
///
/// `slopes[i]` applies on `[breaks[i-1], breaks[i]]`; the last slope applies
/// on the unbounded final interval.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PmRepr", into = "PmRepr")]
pub struct PmFunction {
    intercept: Rational,
    breaks: Vec<Rational>,
    slopes: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct PmRepr {
    #[serde(with = "serde_q")]
    intercept: Rational,
    #[serde(with = "serde_q_vec")]
    breaks: Vec<Rational>,
    #[serde(with = "serde_q_vec")]
    slopes: Vec<Rational>,
}

impl TryFrom<PmRepr> for PmFunction {
    type Error = PmError;

    fn try_from(r: PmRepr) -> Result<Self, PmError> {
        PmFunction::new(r.intercept, r.breaks, r.slopes)
    }
}

impl From<PmFunction> for PmRepr {
    fn from(f: PmFunction) -> Self {
        PmRepr {
            intercept: f.intercept,
            breaks: f.breaks,
            slopes: f.slopes,
        }
    }
}

impl PmFunction {
    /// Validates and canonicalizes. Breaks at `v = 0` are dropped together
    /// with the slope of the empty piece before them.
    pub fn new(intercept: Rational, breaks: Vec<Rational>, slopes: Vec<Rational>) -> Result<Self, PmError> {
        if slopes.len() != breaks.len() + 1 {
            return Err(PmError::Shape {
                breaks: breaks.len(),
                expected: breaks.len() + 1,
                got: slopes.len(),
            });
        }
        if let Some(s) = slopes.iter().find(|s| !s.is_positive()) {
            return Err(PmError::NonPositiveSlope(fmt_q(s)));
        }
        if breaks.iter().any(|b| b.is_negative()) || breaks.windows(2).any(|w| w[0] >= w[1]) {
            return Err(PmError::BadBreaks);
        }
        Ok(Self::canonical(intercept, breaks, slopes))
    }

    pub fn identity() -> Self {
        Self::monomial(Rational::one())
    }

    /// `v -> slope * v`, a single monomial `t^slope`.
    pub fn monomial(slope: Rational) -> Self {
        assert!(slope.is_positive());
        PmFunction {
            intercept: Rational::zero(),
            breaks: Vec::new(),
            slopes: vec![slope],
        }
    }

    /// Builds the function interpolating `knots` (sorted by abscissa, the
    /// first at `v = 0`) and continuing with `final_slope` after the last knot.
    pub fn from_knots(knots: &[(Rational, Rational)], final_slope: Rational) -> Result<Self, PmError> {
        let Some((x0, y0)) = knots.first() else {
            return Err(PmError::BadBreaks);
        };
        if !x0.is_zero() {
            return Err(PmError::BadBreaks);
        }
        let mut breaks = Vec::with_capacity(knots.len());
        let mut slopes = Vec::with_capacity(knots.len());
        for w in knots.windows(2) {
            let (xa, ya) = &w[0];
            let (xb, yb) = &w[1];
            if xb <= xa {
                return Err(PmError::BadBreaks);
            }
            slopes.push((yb - ya) / (xb - xa));
            breaks.push(xb.clone());
        }
        slopes.push(final_slope);
        PmFunction::new(y0.clone(), breaks, slopes)
    }

    fn canonical(intercept: Rational, breaks: Vec<Rational>, slopes: Vec<Rational>) -> Self {
        let mut out_breaks: Vec<Rational> = Vec::with_capacity(breaks.len());
        let mut out_slopes: Vec<Rational> = Vec::with_capacity(slopes.len());
        let mut slopes = slopes.into_iter();
        out_slopes.push(slopes.next().expect("at least one slope"));
        for (b, s) in breaks.into_iter().zip(slopes) {
            if b.is_zero() {
                *out_slopes.last_mut().unwrap() = s;
            } else if out_slopes.last() == Some(&s) {
                continue;
            } else {
                out_breaks.push(b);
                out_slopes.push(s);
            }
        }
        PmFunction {
            intercept,
            breaks: out_breaks,
            slopes: out_slopes,
        }
    }

    pub fn intercept(&self) -> &Rational {
        &self.intercept
    }

    pub fn breaks(&self) -> &[Rational] {
        &self.breaks
    }

    pub fn slopes(&self) -> &[Rational] {
        &self.slopes
    }

    pub fn final_slope(&self) -> &Rational {
        self.slopes.last().unwrap()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// All slopes are integers, as for every profile of an actual morphism.
    pub fn is_integral(&self) -> bool {
        self.slopes.iter().all(crate::rational::is_integral)
    }

    /// Slopes nonincreasing in `v`.
    pub fn is_concave(&self) -> bool {
        self.slopes.windows(2).all(|w| w[0] >= w[1])
    }

    /// `(start, end, slope)` for every piece; `end` is `Inf` on the last one.
    pub fn pieces(&self) -> impl Iterator<Item = (Rational, Val, &Rational)> + '_ {
        self.slopes.iter().enumerate().map(move |(i, s)| {
            let start = if i == 0 {
                Rational::zero()
            } else {
                self.breaks[i - 1].clone()
            };
            let end = self.breaks.get(i).cloned().map_or(Val::Inf, Val::Fin);
            (start, end, s)
        })
    }

    /// Value at a finite `v`. Negative arguments extend the first piece.
    pub fn eval_q(&self, v: &Rational) -> Rational {
        let mut acc = self.intercept.clone();
        let mut prev = Rational::zero();
        for (b, s) in self.breaks.iter().zip(&self.slopes) {
            if v <= b {
                return acc + s * (v - &prev);
            }
            acc += s * (b - &prev);
            prev = b.clone();
        }
        acc + self.final_slope() * (v - prev)
    }

    pub fn eval(&self, v: &Val) -> Val {
        match v {
            Val::Fin(x) => Val::Fin(self.eval_q(x)),
            Val::Inf => Val::Inf,
        }
    }

    /// The unique `v >= 0` with `f(v) = y`, if `y` is in the image.
    pub fn preimage(&self, y: &Rational) -> Option<Rational> {
        if *y < self.intercept {
            return None;
        }
        let mut acc = self.intercept.clone();
        let mut prev = Rational::zero();
        for (b, s) in self.breaks.iter().zip(&self.slopes) {
            let next = &acc + s * (b - &prev);
            if *y <= next {
                return Some(prev + (y - acc) / s);
            }
            acc = next;
            prev = b.clone();
        }
        Some(prev + (y - acc) / self.final_slope())
    }

    /// `self ∘ inner`. `inner` must send `[0, INF]` into itself, i.e. have a
    /// non-negative intercept; the result is unspecified otherwise.
    pub fn compose(&self, inner: &PmFunction) -> PmFunction {
        let mut points: Vec<Rational> = Vec::with_capacity(inner.breaks.len() + self.breaks.len() + 1);
        points.push(Rational::zero());
        points.extend(inner.breaks.iter().cloned());
        points.extend(
            self.breaks
                .iter()
                .filter_map(|b| inner.preimage(b))
                .filter(|x| x.is_positive()),
        );
        points.sort();
        points.dedup();
        let knots: Vec<(Rational, Rational)> = points
            .into_iter()
            .map(|x| {
                let y = self.eval_q(&inner.eval_q(&x));
                (x, y)
            })
            .collect();
        let final_slope = self.final_slope() * inner.final_slope();
        PmFunction::from_knots(&knots, final_slope).expect("composition of increasing maps")
    }

    /// The compositional inverse; defined when the intercept is 0 so that
    /// `[0, INF]` maps onto itself.
    pub fn inverse(&self) -> Result<PmFunction, PmError> {
        if !self.intercept.is_zero() {
            return Err(PmError::NonzeroIntercept(fmt_q(&self.intercept)));
        }
        let breaks = self.breaks.iter().map(|b| self.eval_q(b)).collect();
        let slopes = self.slopes.iter().map(|s| s.recip()).collect();
        Ok(Self::canonical(Rational::zero(), breaks, slopes))
    }

    pub fn slope_at(&self, v: &Rational, side: Side) -> Result<Rational, PmError> {
        if v.is_negative() {
            return Err(PmError::OutOfDomain(fmt_q(v)));
        }
        let idx = match side {
            Side::TowardZero => {
                if v.is_zero() {
                    return Err(PmError::NoPieceBelowZero);
                }
                self.breaks.iter().take_while(|b| *b < v).count()
            }
            Side::TowardInfinity => self.breaks.iter().take_while(|b| *b <= v).count(),
        };
        Ok(self.slopes[idx].clone())
    }

    /// `v -> f(v + depth) - f(depth)`: the function seen from a point
    /// `depth` further down a tail.
    pub fn shift_rescale(&self, depth: &Rational) -> Result<PmFunction, PmError> {
        if depth.is_negative() {
            return Err(PmError::OutOfDomain(fmt_q(depth)));
        }
        let skip = self.breaks.iter().take_while(|b| *b <= depth).count();
        let breaks = self.breaks[skip..].iter().map(|b| b - depth).collect();
        let slopes = self.slopes[skip..].to_vec();
        Ok(Self::canonical(Rational::zero(), breaks, slopes))
    }
}

impl fmt::Display for PmFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("identity");
        }
        if !self.intercept.is_zero() {
            write!(f, "{} + ", fmt_q(&self.intercept))?;
        }
        let mut first = true;
        for (start, end, s) in self.pieces() {
            if !first {
                f.write_str(", ")?;
            }
            first = false;
            match end {
                Val::Fin(e) => write!(f, "slope {} on [{}, {}]", fmt_q(s), fmt_q(&start), fmt_q(&e))?,
                Val::Inf if self.breaks.is_empty() => write!(f, "slope {}", fmt_q(s))?,
                Val::Inf => write!(f, "slope {} after", fmt_q(s))?,
            }
        }
        Ok(())
    }
}

/// A [`PmFunction`] with intercept 0: a profile or Herbrand function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PmFunction", into = "PmFunction")]
pub struct Profile(PmFunction);

impl TryFrom<PmFunction> for Profile {
    type Error = PmError;

    fn try_from(f: PmFunction) -> Result<Self, PmError> {
        if f.intercept.is_zero() {
            Ok(Profile(f))
        } else {
            Err(PmError::NonzeroIntercept(fmt_q(&f.intercept)))
        }
    }
}

impl From<Profile> for PmFunction {
    fn from(p: Profile) -> Self {
        p.0
    }
}

impl Deref for Profile {
    type Target = PmFunction;

    fn deref(&self) -> &PmFunction {
        &self.0
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Profile {
    pub fn identity() -> Self {
        Profile(PmFunction::identity())
    }

    pub fn monomial(degree: Rational) -> Self {
        Profile(PmFunction::monomial(degree))
    }

    /// Slope `degree` on `[0, at]`, slope 1 after.
    pub fn single_break(degree: Rational, at: Rational) -> Result<Self, PmError> {
        PmFunction::new(Rational::zero(), vec![at], vec![degree, Rational::one()]).map(Profile)
    }

    pub fn new(breaks: Vec<Rational>, slopes: Vec<Rational>) -> Result<Self, PmError> {
        PmFunction::new(Rational::zero(), breaks, slopes).map(Profile)
    }

    pub fn as_pm(&self) -> &PmFunction {
        &self.0
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Profile) -> Profile {
        Profile(self.0.compose(&inner.0))
    }

    pub fn inverse(&self) -> Profile {
        Profile(self.0.inverse().expect("profiles have intercept 0"))
    }

    pub fn shift_rescale(&self, depth: &Rational) -> Result<Profile, PmError> {
        self.0.shift_rescale(depth).map(Profile)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, q};
    use proptest::prelude::*;

    fn pm(breaks: &[Rational], slopes: &[Rational]) -> PmFunction {
        PmFunction::new(Rational::zero(), breaks.to_vec(), slopes.to_vec()).unwrap()
    }

    fn grid_for(fs: &[&PmFunction]) -> Vec<Rational> {
        let mut pts: Vec<Rational> = (0..=400).map(|k| q(k, 16)).collect();
        let eps = q(1, 1000);
        for f in fs {
            for b in f.breaks() {
                pts.push(b.clone());
                pts.push(b + &eps);
                if b > &eps {
                    pts.push(b - &eps);
                }
            }
        }
        pts
    }

    #[test]
    fn eval_examples() {
        assert_eq!(PmFunction::identity().eval(&Val::Fin(q(5, 2))), Val::Fin(q(5, 2)));
        let f = pm(&[int(2)], &[int(3), int(1)]);
        assert_eq!(f.eval(&Val::Fin(int(1))), Val::Fin(int(3)));
        assert_eq!(f.eval(&Val::Inf), Val::Inf);
        assert_eq!(f.eval_q(&int(5)), int(9));
    }

    #[test]
    fn compose_examples() {
        let f = pm(&[int(3)], &[int(2), int(1)]);
        let ff = f.compose(&f);
        assert_eq!(ff, pm(&[q(3, 2), int(3)], &[int(4), int(2), int(1)]));
        for v in grid_for(&[&f, &ff]) {
            assert_eq!(ff.eval_q(&v), f.eval_q(&f.eval_q(&v)));
        }
        assert_eq!(PmFunction::identity().compose(&f), f);

        let step = pm(&[int(3)], &[int(3), int(1)]);
        let tower = step.compose(&step);
        assert_eq!(tower, pm(&[int(1), int(3)], &[int(9), int(3), int(1)]));
        for v in grid_for(&[&step, &tower]) {
            assert_eq!(tower.eval_q(&v), step.eval_q(&step.eval_q(&v)));
        }
    }

    #[test]
    fn inverse_examples() {
        let (p, m) = (int(5), q(7, 3));
        let f = pm(std::slice::from_ref(&m), &[p.clone(), int(1)]);
        assert_eq!(f.inverse().unwrap(), pm(&[&p * &m], &[p.recip(), int(1)]));
        assert!(PmFunction::identity().inverse().unwrap().is_identity());

        let f = pm(&[int(1), int(3)], &[int(9), int(3), int(1)]);
        let g = f.inverse().unwrap();
        assert_eq!(g, pm(&[int(9), int(15)], &[q(1, 9), q(1, 3), int(1)]));
        assert!(g.compose(&f).is_identity());

        let shifted = PmFunction::new(int(1), vec![], vec![int(2)]).unwrap();
        assert!(matches!(shifted.inverse(), Err(PmError::NonzeroIntercept(_))));
    }

    #[test]
    fn slope_at_examples() {
        let f = pm(&[int(1)], &[int(3), int(1)]);
        assert_eq!(f.slope_at(&int(1), Side::TowardZero).unwrap(), int(3));
        assert_eq!(f.slope_at(&int(1), Side::TowardInfinity).unwrap(), int(1));
        assert_eq!(f.slope_at(&int(0), Side::TowardInfinity).unwrap(), int(3));
        assert_eq!(f.slope_at(&int(0), Side::TowardZero), Err(PmError::NoPieceBelowZero));
        let id = PmFunction::identity();
        for v in [q(1, 7), int(4)] {
            assert_eq!(id.slope_at(&v, Side::TowardZero).unwrap(), int(1));
            assert_eq!(id.slope_at(&v, Side::TowardInfinity).unwrap(), int(1));
        }
    }

    #[test]
    fn shift_rescale_examples() {
        let f = pm(&[int(2)], &[int(3), int(1)]);
        let g = f.shift_rescale(&int(1)).unwrap();
        assert_eq!(g, pm(&[int(1)], &[int(3), int(1)]));
        for v in grid_for(&[&f]) {
            assert_eq!(g.eval_q(&v), f.eval_q(&(&v + int(1))) - f.eval_q(&int(1)));
        }
        assert_eq!(f.shift_rescale(&int(0)).unwrap(), f);
        assert!(f.shift_rescale(&int(2)).unwrap().is_identity());
        assert!(f.shift_rescale(&int(-1)).is_err());
    }

    #[test]
    fn canonical_form() {
        let redundant = pm(&[int(1), int(2)], &[int(3), int(3), int(1)]);
        assert_eq!(redundant, pm(&[int(2)], &[int(3), int(1)]));
        let zero_break = pm(&[int(0), int(2)], &[int(7), int(3), int(1)]);
        assert_eq!(zero_break, pm(&[int(2)], &[int(3), int(1)]));
        assert_ne!(PmFunction::monomial(int(2)), PmFunction::monomial(int(3)));
        assert!(PmFunction::new(int(0), vec![int(2), int(1)], vec![int(1); 3]).is_err());
        assert!(PmFunction::new(int(0), vec![], vec![int(0)]).is_err());
        assert!(PmFunction::new(int(0), vec![int(1)], vec![int(1)]).is_err());
    }

    #[test]
    fn serialization_format() {
        let f = pm(&[q(1, 15), q(29, 2)], &[int(18), int(3), int(1)]);
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"intercept":"0/1","breaks":["1/15","29/2"],"slopes":["18/1","3/1","1/1"]}"#
        );
        let back: PmFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let bad = r#"{"intercept":"0/1","breaks":["2/1"],"slopes":["1/1","-1/1"]}"#;
        assert!(serde_json::from_str::<PmFunction>(bad).is_err());
        let not_profile = r#"{"intercept":"1/1","breaks":[],"slopes":["1/1"]}"#;
        assert!(serde_json::from_str::<Profile>(not_profile).is_err());
        assert_eq!(serde_json::to_string(&Val::Inf).unwrap(), r#""inf""#);
    }

    #[test]
    fn val_order_and_sum() {
        assert!(Val::Fin(int(1_000_000)) < Val::Inf);
        assert_eq!(Val::Fin(int(2)) + Val::Inf, Val::Inf);
        assert_eq!(Val::Fin(int(2)) + Val::Fin(q(1, 2)), Val::Fin(q(5, 2)));
    }

    pub(crate) fn arb_rational(max_num: i64, max_den: i64) -> impl Strategy<Value = Rational> {
        (1..=max_num, 1..=max_den).prop_map(|(n, d)| q(n, d))
    }

    pub(crate) fn arb_pm(with_intercept: bool) -> impl Strategy<Value = PmFunction> {
        let intercept = if with_intercept {
            (0..20i64, 1..4i64).prop_map(|(n, d)| q(n, d)).boxed()
        } else {
            Just(Rational::zero()).boxed()
        };
        (
            intercept,
            prop::collection::vec(arb_rational(30, 6), 0..4),
            prop::collection::vec(arb_rational(12, 4), 4),
        )
            .prop_map(|(c, gaps, slopes)| {
                let mut breaks = Vec::new();
                let mut acc = Rational::zero();
                for g in gaps {
                    acc += g;
                    breaks.push(acc.clone());
                }
                let slopes = slopes[..breaks.len() + 1].to_vec();
                PmFunction::new(c, breaks, slopes).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn compose_is_associative(f in arb_pm(true), g in arb_pm(true), h in arb_pm(true)) {
            prop_assert_eq!(f.compose(&g.compose(&h)), f.compose(&g).compose(&h));
        }

        #[test]
        fn compose_matches_pointwise(f in arb_pm(true), g in arb_pm(true)) {
            let fg = f.compose(&g);
            for v in grid_for(&[&f, &g, &fg]).iter().step_by(7) {
                prop_assert_eq!(fg.eval_q(v), f.eval_q(&g.eval_q(v)));
            }
        }

        #[test]
        fn inverse_round_trip(f in arb_pm(false)) {
            let g = f.inverse().unwrap();
            prop_assert!(f.compose(&g).is_identity());
            prop_assert!(g.compose(&f).is_identity());
        }

        #[test]
        fn canonical_form_is_normal(f in arb_pm(true), extra in arb_rational(60, 7)) {
            // Insert a redundant break and rebuild from knots.
            let mut pts: Vec<Rational> = std::iter::once(Rational::zero())
                .chain(f.breaks().iter().cloned())
                .chain(std::iter::once(extra))
                .collect();
            pts.sort();
            pts.dedup();
            let knots: Vec<_> = pts.into_iter().map(|x| { let y = f.eval_q(&x); (x, y) }).collect();
            let g = PmFunction::from_knots(&knots, f.final_slope().clone()).unwrap();
            prop_assert_eq!(g, f);
        }

        #[test]
        fn shift_rescale_is_additive(f in arb_pm(false), a in arb_rational(20, 5), b in arb_rational(20, 5)) {
            let lhs = f.shift_rescale(&a).unwrap().shift_rescale(&b).unwrap();
            prop_assert_eq!(lhs, f.shift_rescale(&(a + b)).unwrap());
        }
    }
}
