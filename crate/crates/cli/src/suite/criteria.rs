use std::collections::BTreeSet;

use num_traits::{One, ToPrimitive, Zero};
use ramcalc_core::newton::{is_power_of, LocusVerdict};
use ramcalc_core::pmfun::{PmFunction, Val};
use ramcalc_core::ramify::{
    check_herbrand_transitivity, different, different_sums, herbrand_product, herbrand_slopes, tower_profile,
};
use ramcalc_core::rational::{fmt_q, parse_q};
use ramcalc_core::{
    binom_mod_p, Coeff, DiscSeries, FiniteGroup, InertiaDatum, PrimeContext, RadialityVerdict, Rational, TailPoint,
    TowerStep,
};
use rand::Rng;
use rayon::prelude::*;

use super::data;
use super::golden::Golden;
use super::{CheckDef, Log};

pub(super) static CHECKS: &[CheckDef] = &[
    CheckDef {
        id: "newton.degree-p-break",
        criterion: 1,
        tags: &["newton"],
        title: "t^p + c_1 t breaks once, at val(c_1)/(p-1), with slopes (p, 1)",
        run: degree_p_break,
    },
    CheckDef {
        id: "newton.non-radial-catalog",
        criterion: 2,
        tags: &["newton", "golden"],
        title: "non-radial examples: degrees 2p, p^2 and the split disc",
        run: non_radial_catalog,
    },
    CheckDef {
        id: "ramify.product-formula",
        criterion: 3,
        tags: &["ramify", "herbrand"],
        title: "sum of min(iv, v) equals the slope construction",
        run: product_formula,
    },
    CheckDef {
        id: "ramify.herbrand-theorem",
        criterion: 4,
        tags: &["ramify", "herbrand", "golden"],
        title: "transitivity and upper numbering for every normal subgroup",
        run: herbrand_theorem,
    },
    CheckDef {
        id: "ramify.different",
        criterion: 5,
        tags: &["ramify"],
        title: "both different sums agree; (p-1) * break = v(different) in degree p",
        run: different_formulas,
    },
    CheckDef {
        id: "compare.newton-herbrand",
        criterion: 6,
        tags: &["newton", "ramify", "compare"],
        title: "Newton profile of t^p + c_1 t equals Herbrand's function of Z/p",
        run: comparison,
    },
    CheckDef {
        id: "ramify.tower-calculus",
        criterion: 7,
        tags: &["ramify", "tower", "golden"],
        title: "towers of length <= 4 are concave with p-power slopes",
        run: tower_calculus,
    },
    CheckDef {
        id: "skeleta.locus-enlarge",
        criterion: 8,
        tags: &["skeleta", "locus", "golden"],
        title: "loci are nested and membership survives enlargement",
        run: locus_and_enlarge,
    },
    CheckDef {
        id: "kernel.algebra",
        criterion: 9,
        tags: &["kernel", "pmfun", "hahn"],
        title: "profile calculus and Hahn-sum ring laws on random input",
        run: kernel_algebra,
    },
];

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn int(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

fn ctx(p: u64) -> PrimeContext {
    PrimeContext::new(p).expect("prime")
}

/// `sum_i eps^{e_i} t^{d_i}`.
fn series(p: u64, terms: &[(u64, Rational)]) -> DiscSeries {
    let c = ctx(p);
    DiscSeries::new(c, terms.iter().map(|(d, e)| (*d, Coeff::monomial(c, 1, e.clone())))).expect("normalized")
}

/// Multiplicities seen on the path, by brute force: at each sample `v` the
/// largest degree attaining `min_i (i v + val(c_i))`.
fn brute_multiplicities(terms: &[(u64, Rational)], samples: &[Rational]) -> BTreeSet<u64> {
    samples
        .iter()
        .map(|v| {
            let line = |(d, e): &(u64, Rational)| int(*d) * v + e;
            let min = terms.iter().map(line).min().expect("nonempty");
            terms
                .iter()
                .filter(|t| line(t) == min)
                .map(|t| t.0)
                .max()
                .expect("attained")
        })
        .collect()
}

fn grid(step_den: i64, upto: i64) -> Vec<Rational> {
    (1..=upto * step_den).map(|k| q(k, step_den)).collect()
}

fn degree_p_break(_: &Golden, log: &mut Log) {
    for p in [2u64, 3, 5] {
        for v1 in [q(1, 2), q(1, 1), q(7, 3)] {
            let prof = series(p, &[(p, Rational::zero()), (1, v1.clone())])
                .newton_profile()
                .profile;
            let at = &v1 / int(p - 1);
            log.expect(
                prof.breaks() == [at.clone()] && prof.slopes() == [int(p), int(1)],
                || format!("p = {p}, val(c_1) = {}: got {prof}", fmt_q(&v1)),
            );
            log.note(format!(
                "p = {p}, val(c_1) = {}: break {} ({prof})",
                fmt_q(&v1),
                fmt_q(&at)
            ));
        }
    }
}

fn non_radial_catalog(golden: &Golden, log: &mut Log) {
    let samples = grid(60, 20);
    // (a) degree 2p
    for p in [3u64, 5, 7] {
        let terms = [(2 * p, Rational::zero()), (1, int(1))];
        let s = series(p, &terms);
        let seen: BTreeSet<u64> = brute_multiplicities(&terms, &samples);
        let env = s.newton_profile();
        let expected = BTreeSet::from([1, 2 * p]);
        log.expect(seen == expected && env.dominant_degrees() == [2 * p, 1], || {
            format!(
                "t^{} + eps t: multiplicities {seen:?}, dominant {:?}",
                2 * p,
                env.dominant_degrees()
            )
        });
        log.expect(!s.p_power_criterion(), || {
            format!("t^{} + eps t passes the p-power criterion", 2 * p)
        });
        log.note(format!("(a) p = {p}: multiplicities {seen:?}, p-power criterion false"));
    }

    // (b) degree p^2: (v_1 - v_2p)/(2p - 1) > v_2p/(p^2 - 2p)
    for (p, v2p, v1) in [(3u64, int(1), int(6)), (5, int(1), int(4))] {
        let lhs = (&v1 - &v2p) / int(2 * p - 1);
        let rhs = &v2p / int(p * p - 2 * p);
        log.expect(lhs > rhs, || {
            format!("p = {p}: chosen valuations violate the inequality")
        });
        let terms = [(p * p, Rational::zero()), (2 * p, v2p.clone()), (1, v1.clone())];
        let s = series(p, &terms);
        let seen = brute_multiplicities(&terms, &samples);
        let expected = BTreeSet::from([1, 2 * p, p * p]);
        log.expect(
            seen == expected && s.newton_profile().dominant_degrees() == [p * p, 2 * p, 1],
            || format!("p = {p}: multiplicities {seen:?}"),
        );
        log.note(format!(
            "(b) p = {p}, val(c_2p) = {}, val(c_1) = {}: multiplicities {seen:?}",
            fmt_q(&v2p),
            fmt_q(&v1)
        ));
    }

    // (c) the split disc
    let case = match golden.split() {
        Ok(c) => c,
        Err(e) => return log.fail(e),
    };
    let s = match DiscSeries::from_repr(&case.series) {
        Ok(s) => s,
        Err(e) => return log.fail(format!("golden series: {e}")),
    };
    let env = s.newton_profile();
    log.expect(env.dominant_degrees() == case.origin_degrees, || {
        format!(
            "origin degrees {:?}, golden {:?}",
            env.dominant_degrees(),
            case.origin_degrees
        )
    });
    let c = s.ctx();
    let mono = |a: i64, e: Rational| Coeff::monomial(c, a, e);
    let mut probes: Vec<Coeff> = [
        q(1, 100),
        q(1, 10),
        q(1, 3),
        q(1, 1),
        q(2, 1),
        q(29, 2),
        q(30, 1),
        q(100, 1),
    ]
    .into_iter()
    .map(|e| mono(1, e))
    .collect();
    probes.push(&mono(1, q(1, 2)) + &mono(2, q(3, 1)));
    probes.push(mono(2, q(1, 7)));
    probes.push(&mono(1, q(5, 4)) + &mono(1, q(40, 1)));
    let split_at = parse_q(&case.split.threshold).map(Val::Fin);
    match (s.locus_probe(&probes, case.split.bound), split_at) {
        (
            Ok(LocusVerdict::Consistent {
                threshold, probes: n, ..
            }),
            Ok(t),
        ) => {
            log.expect(threshold == t, || format!("split threshold {threshold}, golden {t}"));
            log.note(format!(
                "(c) N_>{}: threshold {threshold} at the origin and after all {n} probes",
                case.split.bound
            ));
        }
        (
            Ok(LocusVerdict::Refuted {
                witness,
                probe_threshold,
                ..
            }),
            _,
        ) => log.fail(format!(
            "probe {} moves the split threshold to {probe_threshold}",
            probes[witness]
        )),
        (Err(e), _) => log.fail(e.to_string()),
        (_, Err(e)) => log.fail(e.to_string()),
    }

    let r = &case.refutation;
    let probe = match Coeff::from_repr(c, &r.probe) {
        Ok(a) => a,
        Err(e) => return log.fail(e.to_string()),
    };
    match s.radiality_probe(std::slice::from_ref(&probe)) {
        Ok(RadialityVerdict::Refuted { translated, .. }) => {
            log.expect(translated.dominant_degrees() == r.probe_degrees, || {
                format!(
                    "degrees after translation {:?}, golden {:?}",
                    translated.dominant_degrees(),
                    r.probe_degrees
                )
            });
            log.note(format!(
                "(c) witness a = {probe}: degrees {:?} -> {:?}",
                env.dominant_degrees(),
                translated.dominant_degrees()
            ));
        }
        Ok(RadialityVerdict::Consistent { .. }) => log.fail(format!("probe {probe} does not refute radiality")),
        Err(e) => log.fail(e.to_string()),
    }
    match s.locus_probe(std::slice::from_ref(&probe), r.bound) {
        Ok(LocusVerdict::Refuted {
            origin_threshold,
            probe_threshold,
            ..
        }) => {
            let ok =
                origin_threshold.to_string() == r.origin_threshold && probe_threshold.to_string() == r.probe_threshold;
            log.expect(ok, || {
                format!(
                    "N_>{}: thresholds {origin_threshold} vs {probe_threshold}, golden {} vs {}",
                    r.bound, r.origin_threshold, r.probe_threshold
                )
            });
            log.note(format!(
                "(c) N_>{} not radial: threshold {origin_threshold} at the origin, {probe_threshold} at a = {probe}",
                r.bound
            ));
        }
        Ok(LocusVerdict::Consistent { .. }) => log.fail(format!("probe {probe} leaves N_>{} unchanged", r.bound)),
        Err(e) => log.fail(e.to_string()),
    }
}

/// `v -> sum_σ min(iv(σ), v)` evaluated directly.
fn product_at(d: &InertiaDatum, v: &Rational) -> Rational {
    (0..d.group().order())
        .map(|s| match d.iv(s) {
            Val::Fin(x) if x < v => x.clone(),
            _ => v.clone(),
        })
        .sum()
}

fn product_formula(_: &Golden, log: &mut Log) {
    let data = data::inertia_data(3, 4);
    let samples = grid(4, 40);
    let results: Vec<Result<(), String>> = data
        .par_iter()
        .map(|(name, d)| {
            let slopes = herbrand_slopes(d).map_err(|e| format!("{name}: {e}"))?;
            let product = herbrand_product(d);
            if slopes != product {
                return Err(format!("{name}: slopes {slopes} vs product {product}"));
            }
            match samples.iter().find(|v| slopes.eval_q(v) != product_at(d, v)) {
                Some(v) => Err(format!("{name}: disagrees with the direct sum at v = {}", fmt_q(v))),
                None => Ok(()),
            }
        })
        .collect();
    for r in results {
        log.expect(r.is_ok(), || r.clone().unwrap_err());
    }
    log.note(format!("{} data on {} groups", data.len(), data::small_groups().len()));
}

fn herbrand_theorem(golden: &Golden, log: &mut Log) {
    let data = data::inertia_data(4, 4);
    let results: Vec<(usize, Vec<String>)> = data
        .par_iter()
        .map(|(name, d)| {
            let normal = d.group().normal_subgroups();
            let mut bad = Vec::new();
            for h in &normal {
                match check_herbrand_transitivity(d, h) {
                    Ok(r) if r.passed() => {}
                    Ok(r) => {
                        for c in r.checks.iter().filter(|c| !c.pass) {
                            bad.push(format!("{name}, H = {h:?}: {} ({})", c.name, c.detail));
                        }
                    }
                    Err(e) => bad.push(format!("{name}, H = {h:?}: {e}")),
                }
            }
            (normal.len(), bad)
        })
        .collect();
    let mut pairs = 0;
    for (n, bad) in results {
        pairs += n;
        log.expect(bad.is_empty(), || bad.join("; "));
    }
    log.note(format!(
        "{pairs} (datum, normal subgroup) pairs over {} data",
        data.len()
    ));

    let case = match golden.z9() {
        Ok(c) => c,
        Err(e) => return log.fail(e),
    };
    let datum = FiniteGroup::from_repr(&case.group).and_then(|g| InertiaDatum::from_repr(g, &case.inertia));
    let datum = match datum {
        Ok(d) => d,
        Err(e) => return log.fail(format!("golden Z/9 datum: {e}")),
    };
    match herbrand_slopes(&datum) {
        Ok(s) => log.expect(s.as_pm() == &case.herbrand, || {
            format!("Z/9 slopes: {s}, golden {}", case.herbrand)
        }),
        Err(e) => log.fail(e.to_string()),
    }
    let product = herbrand_product(&datum);
    log.expect(product.as_pm() == &case.herbrand, || {
        format!("Z/9 product: {product}, golden {}", case.herbrand)
    });
    match check_herbrand_transitivity(&datum, &case.subgroup) {
        Ok(r) => {
            log.expect(r.passed(), || format!("Z/9 over {:?}: {:?}", case.subgroup, r.checks));
            log.expect(r.composite.as_pm() == &case.herbrand, || {
                format!("Z/9 composite {}, golden {}", r.composite, case.herbrand)
            });
            log.note(format!("Z/9 over {:?}: {}", case.subgroup, r.composite));
        }
        Err(e) => log.fail(e.to_string()),
    }
}

fn different_formulas(_: &Golden, log: &mut Log) {
    for (name, d) in data::inertia_data(5, 4) {
        match different_sums(&d) {
            Ok((a, b)) => log.expect(a == b, || format!("{name}: {} vs {}", fmt_q(&a), fmt_q(&b))),
            Err(e) => log.fail(format!("{name}: {e}")),
        }
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        for c in [q(1, 2), q(3, 4), q(1, 1), q(7, 3), q(5, 1)] {
            let d = InertiaDatum::constant(FiniteGroup::cyclic(p as usize), c.clone()).expect("valid");
            let delta = int(p - 1) * &c;
            let result = herbrand_slopes(&d).and_then(|s| Ok((s, different(&d)?)));
            match result {
                Ok((s, vd)) => {
                    let ok = s.breaks().len() == 1 && int(p - 1) * &s.breaks()[0] == vd && vd == delta;
                    log.expect(ok, || format!("Z/{p}, iv = {}: {s}, v(δ) = {}", fmt_q(&c), fmt_q(&vd)));
                }
                Err(e) => log.fail(format!("Z/{p}: {e}")),
            }
        }
    }
    log.note("degree-p data: p in {2, 3, 5, 7, 11, 13}, iv in {1/2, 3/4, 1, 7/3, 5}");
}

fn comparison(_: &Golden, log: &mut Log) {
    for p in [2u64, 3, 5] {
        for v1 in [int(1), q(3, 2)] {
            let newton = series(p, &[(p, Rational::zero()), (1, v1.clone())])
                .newton_profile()
                .profile;
            let iv = &v1 / int(p - 1);
            let herbrand =
                InertiaDatum::constant(FiniteGroup::cyclic(p as usize), iv.clone()).and_then(|d| herbrand_slopes(&d));
            match herbrand {
                Ok(h) => {
                    log.expect(h == newton, || {
                        format!("p = {p}, val(c_1) = {}: Newton {newton}, Herbrand {h}", fmt_q(&v1))
                    });
                    log.note(format!("p = {p}, val(c_1) = {}, iv = {}: {h}", fmt_q(&v1), fmt_q(&iv)));
                }
                Err(e) => log.fail(e.to_string()),
            }
        }
    }
}

fn is_p_power_slope(p: u64, s: &Rational) -> bool {
    s.is_integer() && s.to_integer().to_u64().is_some_and(|d| is_power_of(p, d))
}

fn tower_calculus(golden: &Golden, log: &mut Log) {
    for p in [2u64, 3, 5] {
        let tame = if p == 2 { 3 } else { 2 };
        let alphabet = [
            TowerStep::Tame(tame),
            TowerStep::InsepP,
            TowerStep::SepP(Rational::zero()),
            TowerStep::SepP(int(1)),
            TowerStep::SepP(q(3, 2)),
            TowerStep::SepP(int(6)),
        ];
        let mut towers: Vec<Vec<TowerStep>> = vec![Vec::new()];
        let mut frontier = towers.clone();
        for _ in 0..4 {
            frontier = frontier
                .iter()
                .flat_map(|t| {
                    alphabet.iter().map(move |s| {
                        let mut t = t.clone();
                        t.push(s.clone());
                        t
                    })
                })
                .collect();
            towers.extend(frontier.iter().cloned());
        }
        let results: Vec<Option<String>> = towers
            .par_iter()
            .map(|t| {
                let names = || t.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
                match tower_profile(t, p) {
                    Ok(f) if f.is_concave() && f.slopes().iter().all(|s| is_p_power_slope(p, s)) => None,
                    Ok(f) => Some(format!("p = {p}, [{}]: {f}", names())),
                    Err(e) => Some(format!("p = {p}, [{}]: {e}", names())),
                }
            })
            .collect();
        for r in results {
            log.expect(r.is_none(), || r.clone().unwrap_or_default());
        }
        log.note(format!("p = {p}: {} towers", towers.len()));
    }
    let case = match golden.z9() {
        Ok(c) => c,
        Err(e) => return log.fail(e),
    };
    match tower_profile(&[TowerStep::SepP(int(6)), TowerStep::SepP(int(6))], 3) {
        Ok(f) => {
            log.expect(f.as_pm() == &case.herbrand, || {
                format!("sep:6 sep:6 gives {f}, golden {}", case.herbrand)
            });
            log.note(format!("p = 3, sep:6 sep:6: {f}"));
        }
        Err(e) => log.fail(e.to_string()),
    }
}

fn locus_and_enlarge(golden: &Golden, log: &mut Log) {
    let cases = match golden.models() {
        Ok(c) => c,
        Err(e) => return log.fail(e),
    };
    for case in cases {
        let m = &case.model;
        let name = &case.name;
        let type2: Vec<String> = m.profiles().keys().cloned().collect();
        let top = m
            .profiles()
            .values()
            .flat_map(|f| f.slopes().iter().map(|s| s.ceil().to_integer().to_u64().unwrap_or(1)))
            .max()
            .unwrap_or(1);
        let bounds: Vec<u64> = (1..=top + 1).collect();
        let loci: Vec<_> = match bounds
            .iter()
            .map(|b| m.multiplicity_locus(*b))
            .collect::<Result<Vec<_>, _>>()
        {
            Ok(l) => l,
            Err(e) => return log.fail(format!("{name}: {e}")),
        };

        for (b, expected) in &case.loci {
            let Some(k) = b.parse::<u64>().ok().and_then(|b| bounds.iter().position(|x| *x == b)) else {
                log.fail(format!("{name}: golden bound {b} out of range"));
                continue;
            };
            for (vertex, t) in expected {
                let got = loci[k].threshold_at(vertex).to_string();
                log.expect(&got == t, || {
                    format!("{name}: N_>={b} at {vertex} is {got}, golden {t}")
                });
            }
        }

        let reach = m
            .profiles()
            .values()
            .filter_map(|f| f.breaks().last().cloned())
            .max()
            .unwrap_or_else(Rational::one)
            .max(Rational::one())
            * int(2);
        let depths: Vec<Val> = (1..50).map(|k| Val::Fin(&reach * q(k, 49))).chain([Val::Inf]).collect();
        for w in loci.windows(2) {
            for v in &type2 {
                for d in &depths {
                    let x = TailPoint::new(v.clone(), d.clone());
                    let (small, big) = (w[1].contains(&x), w[0].contains(&x));
                    log.expect(
                        matches!((small, big), (Ok(false), Ok(_)) | (Ok(true), Ok(true))),
                        || format!("{name}: loci not nested at {v}:{d}"),
                    );
                }
            }
        }

        for u in &type2 {
            let f = &m.profiles()[u];
            let mut at: BTreeSet<Rational> = f.breaks().iter().cloned().collect();
            at.extend(f.breaks().iter().map(|b| b / int(2)));
            at.extend([q(1, 3), int(1), q(5, 2), int(7)]);
            for depth in at {
                let (bigger, id) = match m.enlarge(&TailPoint::new(u.clone(), Val::Fin(depth.clone()))) {
                    Ok(x) => x,
                    Err(e) => {
                        log.fail(format!("{name}: enlarge at {u}:{}: {e}", fmt_q(&depth)));
                        continue;
                    }
                };
                for (b, old) in bounds.iter().zip(&loci) {
                    let new = match bigger.multiplicity_locus(*b) {
                        Ok(l) => l,
                        Err(e) => return log.fail(e.to_string()),
                    };
                    for d in &depths {
                        let shifted = match d {
                            Val::Fin(x) => Val::Fin(x + &depth),
                            Val::Inf => Val::Inf,
                        };
                        let pairs = [(
                            TailPoint::new(id.clone(), d.clone()),
                            TailPoint::new(u.clone(), shifted),
                        )]
                        .into_iter()
                        .chain(type2.iter().map(|w| {
                            (
                                TailPoint::new(w.clone(), d.clone()),
                                TailPoint::new(w.clone(), d.clone()),
                            )
                        }));
                        for (x_new, x_old) in pairs {
                            let a = new.contains(&x_new);
                            let b_old = old.contains(&x_old);
                            log.expect(a.is_ok() && a == b_old, || {
                                format!(
                                    "{name}: enlarged at {u}:{}, bound {b}: {}:{} is {a:?} but {}:{} was {b_old:?}",
                                    fmt_q(&depth),
                                    x_new.anchor,
                                    x_new.depth,
                                    x_old.anchor,
                                    x_old.depth
                                )
                            });
                        }
                    }
                }
            }
        }
        log.note(format!("{name}: bounds 1..={}, {} grid depths", top + 1, depths.len()));
    }
}

const KERNEL_CASES: usize = 1000;

fn kernel_algebra(_: &Golden, log: &mut Log) {
    let mut rng = data::rng(9);

    for _ in 0..KERNEL_CASES {
        let (f, g, h) = (
            data::pm(&mut rng, true),
            data::pm(&mut rng, true),
            data::pm(&mut rng, true),
        );
        let lhs = f.compose(&g.compose(&h));
        let rhs = f.compose(&g).compose(&h);
        log.expect(lhs == rhs, || format!("associativity fails for {f}; {g}; {h}"));
        let x = data::positive(&mut rng, 200, 7);
        log.expect(f.compose(&g).eval_q(&x) == f.eval_q(&g.eval_q(&x)), || {
            format!("({f}) ∘ ({g}) at {}", fmt_q(&x))
        });
    }

    for _ in 0..KERNEL_CASES {
        let f = data::pm(&mut rng, false);
        match f.inverse() {
            Ok(g) => {
                let ok = f.compose(&g).is_identity() && g.compose(&f).is_identity();
                log.expect(ok, || format!("inverse of {f} is {g}"));
            }
            Err(e) => log.fail(format!("{f}: {e}")),
        }
    }

    for _ in 0..KERNEL_CASES {
        let f = data::pm(&mut rng, true);
        // a redundant presentation: an extra knot inside one piece and a
        // break at 0
        let mut breaks = f.breaks().to_vec();
        let mut slopes = f.slopes().to_vec();
        let i = rng.gen_range(0..slopes.len());
        let lo = if i == 0 {
            Rational::zero()
        } else {
            breaks[i - 1].clone()
        };
        let mid = match breaks.get(i) {
            Some(hi) => (&lo + hi) / int(2),
            None => &lo + int(1),
        };
        breaks.insert(i, mid);
        slopes.insert(i, slopes[i].clone());
        breaks.insert(0, Rational::zero());
        slopes.insert(0, data::positive(&mut rng, 9, 2));
        let again = PmFunction::new(f.intercept().clone(), breaks, slopes);
        log.expect(again.as_ref() == Ok(&f), || format!("{f} re-presented as {again:?}"));
        let mut knots = vec![(Rational::zero(), f.intercept().clone())];
        knots.extend(f.breaks().iter().map(|b| (b.clone(), f.eval_q(b))));
        let from_knots = PmFunction::from_knots(&knots, f.final_slope().clone());
        log.expect(from_knots.as_ref() == Ok(&f), || {
            format!("{f} from its knots: {from_knots:?}")
        });
    }

    let primes = [2u64, 3, 5, 7];
    for _ in 0..KERNEL_CASES {
        let c = ctx(primes[rng.gen_range(0..primes.len())]);
        let (a, b, d) = (
            data::coeff(&mut rng, c),
            data::coeff(&mut rng, c),
            data::coeff(&mut rng, c),
        );
        let ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a + &b) + &d == &a + &(&b + &d)
            && &(&a * &b) * &d == &a * &(&b * &d)
            && &a * &(&b + &d) == &(&a * &b) + &(&a * &d)
            && (&a + &a.neg()).is_zero()
            && &a * &Coeff::one(c) == a;
        log.expect(ok, || format!("ring laws fail for p = {}: {a}; {b}; {d}", c.p()));
        let (va, vb, vs) = (a.val(), b.val(), (&a + &b).val());
        let ultra = vs >= va.clone().min(vb.clone()) && (va == vb || vs == va.clone().min(vb.clone()));
        log.expect(ultra, || format!("ultrametric fails for {a}; {b}"));
    }

    for _ in 0..KERNEL_CASES {
        let c = ctx(primes[rng.gen_range(0..3)]);
        let trim = |x: Coeff| Coeff::from_terms(c, x.terms().iter().take(3).map(|(e, k)| (e.clone(), *k as i64)));
        let a = trim(data::coeff(&mut rng, c));
        let b = trim(data::coeff(&mut rng, c));
        let p = c.p();
        log.expect((&a + &b).pow(p) == &a.pow(p) + &b.pow(p), || {
            format!("Frobenius fails for {a}; {b}")
        });
    }

    // Lucas against exact binomials reduced mod p
    let exact = |n: u64, j: u64, p: u64| -> u64 {
        let c: Rational = (0..j).map(|i| int(n - i) / int(i + 1)).product();
        (c.to_integer() % int(p).to_integer()).to_u64().expect("small residue")
    };
    for p in [2u64, 3, 5, 7, 11, 13] {
        for n in 0..=60 {
            let row: Vec<u64> = (0..=n).map(|j| binom_mod_p(ctx(p), n, j).unwrap_or(u64::MAX)).collect();
            let oracle: Vec<u64> = (0..=n).map(|j| exact(n, j, p)).collect();
            log.expect(row == oracle, || format!("Lucas row n = {n}, p = {p}"));
        }
    }
    for _ in 0..KERNEL_CASES {
        let p = [2u64, 3, 5, 7, 11, 13][rng.gen_range(0..6)];
        let n = rng.gen_range(0..400);
        let j = rng.gen_range(0..=n);
        let got = binom_mod_p(ctx(p), n, j);
        log.expect(got == Ok(exact(n, j, p)), || format!("C({n}, {j}) mod {p}: {got:?}"));
    }
    log.note(format!("{KERNEL_CASES} seeded cases per property"));
}
