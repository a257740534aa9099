//! One function per subcommand. Each returns the JSON report to print and,
//! separately, the failure that decides the exit code, so a report is still
//! printed when an expectation or a check fails.

use std::path::Path;

use ramcalc_core::newton::{is_power_of, LocusVerdict};
use ramcalc_core::pmfun::PmFunction;
use ramcalc_core::ramify::{
    check_herbrand_transitivity, different_sums, filtration, herbrand_product, herbrand_slopes, tower_profile,
    TransitivityReport,
};
use ramcalc_core::rational::fmt_q;
use ramcalc_core::{PrimeContext, RadialityVerdict, TowerStep, Val};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::input;

pub struct Report {
    pub json: Value,
    pub failure: Option<CliError>,
}

impl Report {
    fn ok(json: Value) -> Self {
        Report { json, failure: None }
    }
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report values serialize")
}

fn pm_json(f: &PmFunction) -> Value {
    json!({ "function": to_json(f), "text": f.to_string() })
}

#[derive(Debug, Default, Clone)]
pub struct NewtonArgs<'a> {
    pub probes: Option<&'a Path>,
    pub at: Option<&'a str>,
    pub bound: Option<u64>,
    pub expect_radial: bool,
}

pub fn newton(series_path: &Path, args: &NewtonArgs) -> Result<Report, CliError> {
    let series = input::load_series(series_path)?;
    let env = series.newton_profile();
    let mut out = json!({
        "series": series.to_string(),
        "p": series.ctx().p(),
        "degree": series.degree(),
        "profile": pm_json(env.profile.as_pm()),
        "dominant": to_json(&env.dominant),
        "dominant_degrees": env.dominant_degrees(),
        "etale": series.etale_check(),
        "p_power_criterion": series.p_power_criterion(),
    });
    if let Some(at) = args.at {
        let v = Val::parse(at).map_err(|e| CliError::Input(e.to_string()))?;
        out["at"] = json!({ "v": v.to_string(), "multiplicity": series.multiplicity_at(&v) });
    }
    let probes = match args.probes {
        Some(path) => input::load_probes(path, &series)?,
        None => Vec::new(),
    };
    let mut failure = None;
    if args.probes.is_some() {
        let verdict = series.radiality_probe(&probes).map_err(CliError::invalid)?;
        out["radiality"] = match &verdict {
            RadialityVerdict::Refuted {
                witness,
                probe,
                origin,
                translated,
            } => json!({
                "verdict": "REFUTED",
                "witness": witness,
                "probe": probe.to_string(),
                "origin": pm_json(origin.profile.as_pm()),
                "translated": pm_json(translated.profile.as_pm()),
                "origin_degrees": origin.dominant_degrees(),
                "translated_degrees": translated.dominant_degrees(),
            }),
            RadialityVerdict::Consistent { probes } => json!({
                "verdict": "CONSISTENT",
                "probes": probes,
                "note": "finitely many probes agree; this is not a proof of radiality",
            }),
        };
        if args.expect_radial && verdict.is_refuted() {
            failure = Some(CliError::Expectation(format!(
                "probe {} changes the profile",
                out["radiality"]["witness"]
            )));
        }
    } else if args.expect_radial {
        return Err(CliError::Input("--expect-radial needs --probes".into()));
    }
    if let Some(bound) = args.bound {
        let threshold = env.threshold_above(bound);
        out["locus"] = if probes.is_empty() {
            json!({ "bound": bound, "threshold": threshold.to_string() })
        } else {
            match series.locus_probe(&probes, bound).map_err(CliError::invalid)? {
                LocusVerdict::Refuted {
                    witness,
                    origin_threshold,
                    probe_threshold,
                    ..
                } => json!({
                    "bound": bound,
                    "verdict": "REFUTED",
                    "witness": witness,
                    "probe": probes[witness].to_string(),
                    "origin_threshold": origin_threshold.to_string(),
                    "probe_threshold": probe_threshold.to_string(),
                }),
                LocusVerdict::Consistent { threshold, probes, .. } => json!({
                    "bound": bound,
                    "verdict": "CONSISTENT",
                    "threshold": threshold.to_string(),
                    "probes": probes,
                }),
            }
        };
    }
    Ok(Report { json: out, failure })
}

fn transitivity_json(r: &TransitivityReport) -> Value {
    json!({
        "subgroup": r.subgroup,
        "result": if r.passed() { "PASS" } else { "FAIL" },
        "composite": pm_json(r.composite.as_pm()),
        "checks": to_json(&r.checks),
    })
}

#[derive(Debug, Default, Clone)]
pub struct HerbrandArgs {
    pub subgroup: Option<Vec<usize>>,
    pub all_normal: bool,
}

pub fn herbrand(group_path: &Path, inertia_path: &Path, args: &HerbrandArgs) -> Result<Report, CliError> {
    let datum = input::load_datum(group_path, inertia_path)?;
    let filt = filtration(&datum).map_err(CliError::invalid)?;
    let by_slopes = herbrand_slopes(&datum).map_err(CliError::invalid)?;
    let by_product = herbrand_product(&datum);
    let (by_elements, by_jumps) = different_sums(&datum).map_err(CliError::invalid)?;
    let agree = by_slopes == by_product;
    let mut out = json!({
        "group_order": datum.group().order(),
        "filtration": to_json(&filt),
        "herbrand": {
            "agreement": if agree { "AGREE" } else { "DISAGREE" },
            "slopes": pm_json(by_slopes.as_pm()),
            "product": pm_json(by_product.as_pm()),
        },
        "different": {
            "by_elements": fmt_q(&by_elements),
            "by_jumps": fmt_q(&by_jumps),
        },
    });
    let mut failures = Vec::new();
    if !agree {
        failures.push("Herbrand formulas disagree".to_string());
    }
    if by_elements != by_jumps {
        failures.push("different sums disagree".to_string());
    }

    let subgroups: Vec<Vec<usize>> = match (&args.subgroup, args.all_normal) {
        (Some(h), _) => vec![h.clone()],
        (None, true) => datum.group().normal_subgroups(),
        (None, false) => Vec::new(),
    };
    if !subgroups.is_empty() {
        let reports: Vec<TransitivityReport> = subgroups
            .par_iter()
            .map(|h| check_herbrand_transitivity(&datum, h))
            .collect::<Result<_, _>>()
            .map_err(CliError::invalid)?;
        for r in reports.iter().filter(|r| !r.passed()) {
            failures.push(format!("transitivity fails for subgroup {:?}", r.subgroup));
        }
        out["transitivity"] = Value::Array(reports.iter().map(transitivity_json).collect());
    }
    let failure = (!failures.is_empty()).then(|| CliError::Verification(failures.join("; ")));
    Ok(Report { json: out, failure })
}

pub fn tower(p: u64, steps: &[String]) -> Result<Report, CliError> {
    PrimeContext::new(p).map_err(CliError::invalid)?;
    let steps: Vec<TowerStep> = steps
        .iter()
        .map(|s| s.parse().map_err(|e| CliError::Input(format!("{e}"))))
        .collect::<Result<_, _>>()?;
    let profile = tower_profile(&steps, p).map_err(CliError::invalid)?;
    let p_power = profile
        .slopes()
        .iter()
        .all(|s| s.is_integer() && u64::try_from(s.to_integer()).is_ok_and(|d| is_power_of(p, d)));
    Ok(Report::ok(json!({
        "p": p,
        "steps": steps.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "profile": pm_json(profile.as_pm()),
        "concave": profile.is_concave(),
        "p_power_slopes": p_power,
    })))
}

#[derive(Debug, Default, Clone)]
pub struct LocusArgs {
    pub bound: u64,
    pub points: Vec<String>,
    pub enlarge: Option<String>,
}

pub fn locus(model_path: &Path, args: &LocusArgs) -> Result<Report, CliError> {
    let model = input::load_model(model_path)?;
    let set = model.multiplicity_locus(args.bound).map_err(CliError::invalid)?;
    let thresholds = |s: &ramcalc_core::RadialSet| {
        s.graph
            .vertices()
            .iter()
            .map(|v| (v.id.clone(), Value::String(s.threshold_at(&v.id).to_string())))
            .collect::<serde_json::Map<_, _>>()
    };
    let mut out = json!({
        "bound": args.bound,
        "thresholds": thresholds(&set),
    });
    if !args.points.is_empty() {
        let mut members = Vec::new();
        for s in &args.points {
            let x = input::parse_point(s)?;
            let inside = set.contains(&x).map_err(CliError::invalid)?;
            members.push(json!({ "point": s, "member": inside }));
        }
        out["points"] = Value::Array(members);
    }
    if let Some(s) = &args.enlarge {
        let x = input::parse_point(s)?;
        let (bigger, id) = model.enlarge(&x).map_err(CliError::invalid)?;
        let new_set = bigger.multiplicity_locus(args.bound).map_err(CliError::invalid)?;
        out["enlarged"] = json!({
            "at": s,
            "vertex": id,
            "profile": pm_json(bigger.profile(&id).expect("new vertex is type 2").as_pm()),
            "thresholds": thresholds(&new_set),
            "model": to_json(&bigger),
        });
    }
    Ok(Report::ok(out))
}
