//! Higher ramification from inertia data.
//!
//! An [`InertiaDatum`] assigns to every non-identity `σ` of a finite group the
//! valuation `iv(σ) = -log_q i(σ)` of its inertia. The lower filtration is
//! `G_v = {σ : iv(σ) >= v}`; Herbrand's function has slope `|G_v|` on each
//! interval between jumps and equals `v -> sum_σ min(iv(σ), v)`.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::pmfun::{PmError, PmFunction, Profile, Val};
use crate::rational::{fmt_q, parse_q, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RamifyError {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid inertia datum ({invariant}): {detail}")]
    InvalidDatum { invariant: &'static str, detail: String },
    #[error("{0:?} is not a subgroup")]
    NotSubgroup(Vec<usize>),
    #[error("{0:?} is not a normal subgroup")]
    NotNormal(Vec<usize>),
    #[error("the identity coset has no inertia")]
    IdentityCoset,
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("bad tower step {0:?}")]
    BadTowerStep(String),
    #[error(transparent)]
    Pm(#[from] PmError),
}

/// A finite group given by its Cayley table; element 0 is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
}

/// `{"cyclic": n}`, `{"abelian": [n1, n2, ...]}` or `{"order": n, "table": [[...]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRepr {
    Cyclic { cyclic: usize },
    Abelian { abelian: Vec<usize> },
    Table { order: usize, table: Vec<Vec<usize>> },
}

impl FiniteGroup {
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self, RamifyError> {
        let n = table.len();
        let bad = |msg: String| Err(RamifyError::InvalidGroup(msg));
        if n == 0 {
            return bad("empty table".into());
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return bad(format!("row {a} has length {}", row.len()));
            }
            if let Some(x) = row.iter().find(|x| **x >= n) {
                return bad(format!("entry {x} out of range"));
            }
            if row[0] != a || table[0][a] != a {
                return bad("element 0 is not the identity".into());
            }
        }
        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverses[a] = b,
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!("({a}*{b})*{c} != {a}*({b}*{c})"));
                    }
                }
            }
        }
        Ok(FiniteGroup { table, inverses })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z/n` with element `k` standing for `k mod n`.
    pub fn cyclic(n: usize) -> Self {
        Self::abelian(&[n])
    }

    /// `Z/n1 x Z/n2 x ...`; element index is the mixed-radix number with
    /// the first factor as least significant digit.
    pub fn abelian(factors: &[usize]) -> Self {
        assert!(factors.iter().all(|f| *f > 0));
        let n: usize = factors.iter().product();
        let digits = |mut x: usize| {
            factors
                .iter()
                .map(|f| {
                    let d = x % f;
                    x /= f;
                    d
                })
                .collect::<Vec<_>>()
        };
        let encode = |ds: &[usize]| ds.iter().zip(factors).rev().fold(0, |acc, (d, f)| acc * f + d);
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| {
                let da = digits(a);
                (0..n)
                    .map(|b| {
                        let sum: Vec<usize> = da
                            .iter()
                            .zip(digits(b))
                            .zip(factors)
                            .map(|((x, y), f)| (x + y) % f)
                            .collect();
                        encode(&sum)
                    })
                    .collect()
            })
            .collect();
        let inverses = (0..n)
            .map(|a| {
                let neg: Vec<usize> = digits(a).iter().zip(factors).map(|(d, f)| (f - d) % f).collect();
                encode(&neg)
            })
            .collect();
        FiniteGroup { table, inverses }
    }

    pub fn from_repr(repr: &GroupRepr) -> Result<Self, RamifyError> {
        match repr {
            GroupRepr::Cyclic { cyclic } if *cyclic > 0 => Ok(Self::cyclic(*cyclic)),
            GroupRepr::Abelian { abelian } if !abelian.is_empty() && abelian.iter().all(|f| *f > 0) => {
                Ok(Self::abelian(abelian))
            }
            GroupRepr::Table { order, table } if *order == table.len() => Self::new(table.clone()),
            GroupRepr::Table { order, table } => Err(RamifyError::InvalidGroup(format!(
                "order {order} but table has {} rows",
                table.len()
            ))),
            _ => Err(RamifyError::InvalidGroup("factors must be positive".into())),
        }
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let gens: Vec<usize> = gens.into_iter().filter(|g| *g != 0).collect();
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|x| seen[*x]).collect()
    }

    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        set.contains(&0)
            && set.iter().all(|x| *x < self.order())
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, self.inv(b)))))
    }

    pub fn is_normal(&self, elems: &[usize]) -> bool {
        let set: BTreeSet<usize> = elems.iter().copied().collect();
        self.is_subgroup(elems) && (0..self.order()).all(|g| set.iter().all(|&h| set.contains(&self.conj(g, h))))
    }

    /// All subgroups, sorted by order and then lexicographically.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: HashSet<Vec<usize>> = HashSet::new();
        let trivial = vec![0usize];
        found.insert(trivial.clone());
        let mut queue = VecDeque::from([trivial]);
        while let Some(h) = queue.pop_front() {
            for g in 0..self.order() {
                if h.binary_search(&g).is_ok() {
                    continue;
                }
                let bigger = self.closure(h.iter().copied().chain([g]));
                if found.insert(bigger.clone()) {
                    queue.push_back(bigger);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn normal_subgroups(&self) -> Vec<Vec<usize>> {
        self.subgroups().into_iter().filter(|h| self.is_normal(h)).collect()
    }

    /// `G/H` with cosets numbered by their smallest element.
    pub fn quotient(&self, h: &[usize]) -> Result<Quotient, RamifyError> {
        if !self.is_normal(h) {
            return Err(if self.is_subgroup(h) {
                RamifyError::NotNormal(h.to_vec())
            } else {
                RamifyError::NotSubgroup(h.to_vec())
            });
        }
        let mut coset_of = vec![usize::MAX; self.order()];
        let mut cosets: Vec<Vec<usize>> = Vec::new();
        for x in 0..self.order() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> = h.iter().map(|&y| self.mul(x, y)).collect();
            coset.sort_unstable();
            for &y in &coset {
                coset_of[y] = cosets.len();
            }
            cosets.push(coset);
        }
        let table = cosets
            .iter()
            .map(|a| cosets.iter().map(|b| coset_of[self.mul(a[0], b[0])]).collect())
            .collect();
        let group = FiniteGroup::new(table)?;
        Ok(Quotient {
            group,
            coset_of,
            cosets,
        })
    }

    /// The subgroup `H` as a group in its own right; element `k` of the
    /// result is `h[k]` (sorted, so the identity stays at 0).
    pub fn restrict(&self, h: &[usize]) -> Result<FiniteGroup, RamifyError> {
        if !self.is_subgroup(h) {
            return Err(RamifyError::NotSubgroup(h.to_vec()));
        }
        let mut sorted = h.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let index: BTreeMap<usize, usize> = sorted.iter().enumerate().map(|(k, x)| (*x, k)).collect();
        let table = sorted
            .iter()
            .map(|a| sorted.iter().map(|b| index[&self.mul(*a, *b)]).collect())
            .collect();
        FiniteGroup::new(table)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Coset index of every element of the big group.
    pub coset_of: Vec<usize>,
    pub cosets: Vec<Vec<usize>>,
}

/// A finite group together with the inertia valuation of each element.
/// `iv[0]` (the identity) is `INF`; every other entry is finite and `>= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InertiaDatum {
    group: FiniteGroup,
    iv: Vec<Val>,
}

/// `{"iv": {"1": "1/1", "2": "3/1", ...}}`, keyed by element index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InertiaRepr {
    pub iv: BTreeMap<String, String>,
}

impl InertiaDatum {
    pub fn new(group: FiniteGroup, iv: &BTreeMap<usize, Rational>) -> Result<Self, RamifyError> {
        let n = group.order();
        let invalid = |invariant, detail: String| Err(RamifyError::InvalidDatum { invariant, detail });
        if let Some(k) = iv.keys().find(|k| **k == 0 || **k >= n) {
            return invalid(
                "domain",
                format!("key {k} is not a non-identity element of a group of order {n}"),
            );
        }
        let mut vals = vec![Val::Inf; n];
        for (sigma, slot) in vals.iter_mut().enumerate().skip(1) {
            match iv.get(&sigma) {
                Some(x) if x.is_negative() => return invalid("nonnegative", format!("iv({sigma}) = {} < 0", fmt_q(x))),
                Some(x) => *slot = Val::Fin(x.clone()),
                None => return invalid("domain", format!("missing iv for element {sigma}")),
            }
        }
        let datum = InertiaDatum { group, iv: vals };
        datum.validate()?;
        Ok(datum)
    }

    fn validate(&self) -> Result<(), RamifyError> {
        let g = &self.group;
        let n = g.order();
        let invalid = |invariant, detail: String| Err(RamifyError::InvalidDatum { invariant, detail });
        for s in 1..n {
            if self.iv[g.inv(s)] != self.iv[s] {
                return invalid("inversion-invariant", format!("iv({s}) != iv({})", g.inv(s)));
            }
            for t in 0..n {
                if self.iv[g.conj(t, s)] != self.iv[s] {
                    return invalid(
                        "conjugation-invariant",
                        format!("iv({s}) != iv({}) (conjugate by {t})", g.conj(t, s)),
                    );
                }
                let st = g.mul(s, t);
                if self.iv[st] < self.iv[s].clone().min(self.iv[t].clone()) {
                    return invalid(
                        "ultrametric",
                        format!("iv({s}*{t}) = iv({st}) below min(iv({s}), iv({t}))"),
                    );
                }
            }
        }
        Ok(())
    }

    /// Builds a datum from a strictly decreasing chain of normal subgroups
    /// `G = N_0 > N_1 > ... ` with increasing values: `iv(σ)` is the value of
    /// the deepest `N_i` containing `σ`.
    pub fn from_chain(group: FiniteGroup, chain: &[(Vec<usize>, Rational)]) -> Result<Self, RamifyError> {
        let mut iv = BTreeMap::new();
        for (h, value) in chain {
            for &s in h.iter().filter(|s| **s != 0) {
                iv.insert(s, value.clone());
            }
        }
        Self::new(group, &iv)
    }

    pub fn from_repr(group: FiniteGroup, repr: &InertiaRepr) -> Result<Self, RamifyError> {
        let mut iv = BTreeMap::new();
        for (k, v) in &repr.iv {
            let key: usize = k.trim().parse().map_err(|_| RamifyError::InvalidDatum {
                invariant: "domain",
                detail: format!("key {k:?} is not an element index"),
            })?;
            let value = parse_q(v).map_err(|e| RamifyError::InvalidDatum {
                invariant: "domain",
                detail: e.to_string(),
            })?;
            iv.insert(key, value);
        }
        Self::new(group, &iv)
    }

    pub fn to_repr(&self) -> InertiaRepr {
        InertiaRepr {
            iv: (1..self.group.order())
                .map(|s| (s.to_string(), self.iv[s].to_string()))
                .collect(),
        }
    }

    /// The datum with every inertia valuation equal to `value`.
    pub fn constant(group: FiniteGroup, value: Rational) -> Result<Self, RamifyError> {
        let iv = (1..group.order()).map(|s| (s, value.clone())).collect();
        Self::new(group, &iv)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn iv(&self, sigma: usize) -> &Val {
        &self.iv[sigma]
    }

    fn iv_fin(&self, sigma: usize) -> &Rational {
        self.iv[sigma].finite().expect("non-identity element")
    }

    /// `G_v = {σ : iv(σ) >= v}`.
    pub fn lower_group(&self, v: &Rational) -> Vec<usize> {
        (0..self.group.order())
            .filter(|&s| self.iv[s] >= Val::Fin(v.clone()))
            .collect()
    }

    /// `G^s = G_{ψ(s)}` with `ψ` the inverse of Herbrand's function.
    pub fn upper_group(&self, s: &Rational) -> Result<Vec<usize>, RamifyError> {
        let psi = herbrand_slopes(self)?.inverse();
        Ok(self.lower_group(&psi.eval_q(s)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Filtration {
    /// Increasing jumps `v_0 < ... < v_n`.
    #[serde(with = "crate::rational::serde_q_vec")]
    pub jumps: Vec<Rational>,
    /// `G_{v_i}`.
    pub groups: Vec<Vec<usize>>,
    /// `g_i = |G_{v_i}|`.
    pub orders: Vec<usize>,
}

pub fn filtration(datum: &InertiaDatum) -> Result<Filtration, RamifyError> {
    let g = &datum.group;
    let jumps: Vec<Rational> = (1..g.order())
        .map(|s| datum.iv_fin(s).clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut groups = Vec::with_capacity(jumps.len());
    for v in &jumps {
        let level = datum.lower_group(v);
        if !g.is_subgroup(&level) {
            return Err(RamifyError::InvalidDatum {
                invariant: "ultrametric",
                detail: format!("level set at v = {} is not a subgroup", fmt_q(v)),
            });
        }
        groups.push(level);
    }
    let orders = groups.iter().map(Vec::len).collect();
    Ok(Filtration { jumps, groups, orders })
}

fn rat(n: usize) -> Rational {
    Rational::from_integer(n.into())
}

/// Herbrand's function read off the filtration: slope `g_i` up to the jump
/// `v_i`, slope 1 after the last jump.
pub fn herbrand_slopes(datum: &InertiaDatum) -> Result<Profile, RamifyError> {
    let f = filtration(datum)?;
    let mut slopes: Vec<Rational> = f.orders.iter().map(|g| rat(*g)).collect();
    slopes.push(Rational::one());
    Ok(Profile::new(f.jumps, slopes)?)
}

/// Herbrand's function as `v -> sum_σ min(iv(σ), v)`.
pub fn herbrand_product(datum: &InertiaDatum) -> Profile {
    let n = datum.group.order();
    let sum_at = |v: &Rational| -> Rational {
        (0..n)
            .map(|s| match &datum.iv[s] {
                Val::Fin(x) if x < v => x.clone(),
                _ => v.clone(),
            })
            .sum()
    };
    let mut xs: Vec<Rational> = std::iter::once(Rational::zero())
        .chain((1..n).map(|s| datum.iv_fin(s).clone()))
        .collect();
    xs.sort();
    xs.dedup();
    let knots: Vec<(Rational, Rational)> = xs.into_iter().map(|x| (x.clone(), sum_at(&x))).collect();
    let f = PmFunction::from_knots(&knots, Rational::one()).expect("sum of increasing functions");
    Profile::try_from(f).expect("vanishes at 0")
}

/// `(sum_{σ != e} iv(σ), sum_i (g_i - g_{i+1}) v_i)`, unchecked.
pub fn different_sums(datum: &InertiaDatum) -> Result<(Rational, Rational), RamifyError> {
    let by_elements: Rational = (1..datum.group.order()).map(|s| datum.iv_fin(s).clone()).sum();
    let f = filtration(datum)?;
    let by_jumps: Rational = f
        .jumps
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let next = f.orders.get(i + 1).copied().unwrap_or(1);
            rat(f.orders[i] - next) * v
        })
        .sum();
    Ok((by_elements, by_jumps))
}

/// Valuation of the different, computed as `sum_{σ != e} iv(σ)` and as
/// `sum_i (g_i - g_{i+1}) v_i`; both, and the linear tail
/// `φ(v) = v + v(δ)`, are checked.
pub fn different(datum: &InertiaDatum) -> Result<Rational, RamifyError> {
    let (by_elements, by_jumps) = different_sums(datum)?;
    if by_elements != by_jumps {
        return Err(RamifyError::InvariantViolation(format!(
            "different by elements {} != by jumps {}",
            fmt_q(&by_elements),
            fmt_q(&by_jumps)
        )));
    }
    let phi = herbrand_slopes(datum)?;
    let last = filtration(datum)?.jumps.last().cloned().unwrap_or_else(Rational::zero);
    for v in [last.clone(), last + Rational::one()] {
        if phi.eval_q(&v) != &v + &by_elements {
            return Err(RamifyError::InvariantViolation(format!(
                "Herbrand function at {} is not v + {}",
                fmt_q(&v),
                fmt_q(&by_elements)
            )));
        }
    }
    Ok(by_elements)
}

/// Inertia of `G/H`: `iv(σH) = sum_{τ in σH} iv(τ)`.
pub fn quotient_inertia(datum: &InertiaDatum, h: &[usize]) -> Result<InertiaDatum, RamifyError> {
    let q = datum.group.quotient(h)?;
    quotient_inertia_on(datum, &q)
}

fn quotient_inertia_on(datum: &InertiaDatum, q: &Quotient) -> Result<InertiaDatum, RamifyError> {
    let iv: BTreeMap<usize, Rational> = q
        .cosets
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, coset)| (k, coset.iter().map(|&t| datum.iv_fin(t).clone()).sum()))
        .collect();
    InertiaDatum::new(q.group.clone(), &iv)
}

pub fn restrict_inertia(datum: &InertiaDatum, h: &[usize]) -> Result<InertiaDatum, RamifyError> {
    let sub = datum.group.restrict(h)?;
    let mut sorted = h.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let iv = sorted
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &s)| (k, datum.iv_fin(s).clone()))
        .collect();
    InertiaDatum::new(sub, &iv)
}

/// `j(σH) = max_{τ in σH} iv(τ)`; `coset` indexes `G/H` as numbered by
/// [`FiniteGroup::quotient`].
pub fn j_function(datum: &InertiaDatum, h: &[usize], coset: usize) -> Result<Rational, RamifyError> {
    let q = datum.group.quotient(h)?;
    j_on(datum, &q, coset)
}

fn j_on(datum: &InertiaDatum, q: &Quotient, coset: usize) -> Result<Rational, RamifyError> {
    if coset == 0 || coset >= q.cosets.len() {
        return Err(RamifyError::IdentityCoset);
    }
    Ok(q.cosets[coset]
        .iter()
        .map(|&t| datum.iv_fin(t).clone())
        .max()
        .expect("nonempty coset"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransitivityReport {
    pub subgroup: Vec<usize>,
    pub composite: Profile,
    pub checks: Vec<Check>,
}

impl TransitivityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Checks `φ_{L/K} = φ_{F/K} ∘ φ_{L/F}`, the relation
/// `φ_{L/F}(j(σH)) = iv_{F/K}(σH)` on every coset, and
/// `G_v H / H = (G/H)^{φ_{L/K}(v)}` at every jump `v`.
pub fn check_herbrand_transitivity(datum: &InertiaDatum, h: &[usize]) -> Result<TransitivityReport, RamifyError> {
    let q = datum.group.quotient(h)?;
    let top = quotient_inertia_on(datum, &q)?;
    let bottom = restrict_inertia(datum, h)?;
    let phi_lk = herbrand_slopes(datum)?;
    let phi_fk = herbrand_slopes(&top)?;
    let phi_lf = herbrand_slopes(&bottom)?;
    let composite = phi_fk.compose(&phi_lf);
    let mut checks = vec![Check {
        name: "transitivity".into(),
        pass: composite == phi_lk,
        detail: format!("φ_L/K = {phi_lk}; φ_F/K ∘ φ_L/F = {composite}"),
    }];

    for coset in 1..q.cosets.len() {
        let j = j_on(datum, &q, coset)?;
        let lhs = phi_lf.eval_q(&j);
        let rhs = top.iv_fin(coset);
        checks.push(Check {
            name: format!("j-function[{coset}]"),
            pass: &lhs == rhs,
            detail: format!(
                "φ_L/F(j) = φ_L/F({}) = {}; iv_F/K = {}",
                fmt_q(&j),
                fmt_q(&lhs),
                fmt_q(rhs)
            ),
        });
    }

    let psi_fk = phi_fk.inverse();
    let f = filtration(datum)?;
    for v in &f.jumps {
        let s = phi_lk.eval_q(v);
        let image: BTreeSet<usize> = datum.lower_group(v).iter().map(|&x| q.coset_of[x]).collect();
        let upper: BTreeSet<usize> = top.lower_group(&psi_fk.eval_q(&s)).into_iter().collect();
        checks.push(Check {
            name: format!("upper-numbering[v={}]", fmt_q(v)),
            pass: image == upper,
            detail: format!("G_v H/H = {image:?}; (G/H)^{} = {upper:?}", fmt_q(&s)),
        });
    }
    let mut subgroup = h.to_vec();
    subgroup.sort_unstable();
    Ok(TransitivityReport {
        subgroup,
        composite,
        checks,
    })
}

/// One step of a tower of extensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TowerStep {
    /// Degree prime to `p`.
    Tame(u64),
    /// Purely inseparable of degree `p`.
    InsepP,
    /// Separable of degree `p` with the given different valuation.
    SepP(Rational),
}

impl TowerStep {
    pub fn profile(&self, p: u64) -> Result<Profile, RamifyError> {
        let pq = Rational::from_integer(p.into());
        match self {
            TowerStep::Tame(m) => {
                if *m == 0 || m.gcd(&p) != 1 {
                    return Err(RamifyError::BadTowerStep(format!("tame degree {m} not prime to {p}")));
                }
                Ok(Profile::identity())
            }
            TowerStep::InsepP => Ok(Profile::monomial(pq)),
            TowerStep::SepP(d) => {
                if d.is_negative() {
                    return Err(RamifyError::BadTowerStep(format!("negative different {}", fmt_q(d))));
                }
                let at = d / (&pq - Rational::one());
                Ok(Profile::single_break(pq, at)?)
            }
        }
    }
}

impl FromStr for TowerStep {
    type Err = RamifyError;

    /// `tame:M`, `insep`, or `sep:D` with `D` a rational.
    fn from_str(s: &str) -> Result<Self, RamifyError> {
        let bad = || RamifyError::BadTowerStep(s.to_string());
        let (kind, arg) = match s.split_once(':') {
            Some((k, a)) => (k.trim(), Some(a.trim())),
            None => (s.trim(), None),
        };
        match (kind.to_ascii_lowercase().as_str(), arg) {
            ("tame", Some(a)) => a.parse().map(TowerStep::Tame).map_err(|_| bad()),
            ("insep", None) => Ok(TowerStep::InsepP),
            ("sep", Some(a)) => parse_q(a).map(TowerStep::SepP).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for TowerStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TowerStep::Tame(m) => write!(f, "tame:{m}"),
            TowerStep::InsepP => f.write_str("insep"),
            TowerStep::SepP(d) => write!(f, "sep:{}", fmt_q(d)),
        }
    }
}

/// Profile of a tower listed from the base upward:
/// `profile(steps[0]) ∘ profile(steps[1]) ∘ ...`. The empty tower is the
/// identity.
pub fn tower_profile(steps: &[TowerStep], p: u64) -> Result<Profile, RamifyError> {
    steps
        .iter()
        .try_fold(Profile::identity(), |acc, step| Ok(acc.compose(&step.profile(p)?)))
}
