//! Reading the JSON input files. Decoding failures (bad JSON, wrong shape,
//! malformed rationals, graphs or profiles that fail validation while
//! decoding) exit with 2; data that decodes but violates a mathematical
//! invariant checked afterwards exits with 4.

use std::fs;
use std::path::Path;

use ramcalc_core::hahn::TermRepr;
use ramcalc_core::newton::SeriesRepr;
use ramcalc_core::pmfun::{PmFunction, Val};
use ramcalc_core::ramify::{GroupRepr, InertiaRepr};
use ramcalc_core::{Coeff, DiscSeries, FiniteGroup, InertiaDatum, RadialMorphismModel, TailPoint};
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::error::CliError;

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn decode<T: DeserializeOwned>(path: &Path, text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        msg: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
    })
}

pub fn load<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    decode(path, &read_text(path)?)
}

pub fn load_series(path: &Path) -> Result<DiscSeries, CliError> {
    let repr: SeriesRepr = load(path)?;
    DiscSeries::from_repr(&repr).map_err(CliError::invalid)
}

/// `{"probes": [[{"e": "1/100", "a": 1}], ...]}`: one coefficient per probe.
#[derive(Deserialize)]
struct ProbeFile {
    probes: Vec<Vec<TermRepr>>,
}

pub fn load_probes(path: &Path, series: &DiscSeries) -> Result<Vec<Coeff>, CliError> {
    let file: ProbeFile = load(path)?;
    file.probes
        .iter()
        .map(|terms| Coeff::from_repr(series.ctx(), terms).map_err(CliError::invalid))
        .collect()
}

pub fn load_group(path: &Path) -> Result<FiniteGroup, CliError> {
    let repr: GroupRepr = load(path)?;
    FiniteGroup::from_repr(&repr).map_err(CliError::invalid)
}

pub fn load_datum(group_path: &Path, inertia_path: &Path) -> Result<InertiaDatum, CliError> {
    let group = load_group(group_path)?;
    let repr: InertiaRepr = load(inertia_path)?;
    InertiaDatum::from_repr(group, &repr).map_err(CliError::invalid)
}

pub fn load_pm(path: &Path) -> Result<PmFunction, CliError> {
    load(path)
}

pub fn load_model(path: &Path) -> Result<RadialMorphismModel, CliError> {
    load(path)
}

/// `anchor:depth`, depth a rational or `inf`.
pub fn parse_point(s: &str) -> Result<TailPoint, CliError> {
    let (anchor, depth) = s
        .rsplit_once(':')
        .ok_or_else(|| CliError::Input(format!("point {s:?} is not of the form anchor:depth")))?;
    let depth = Val::parse(depth).map_err(|e| CliError::Input(format!("point {s:?}: {e}")))?;
    Ok(TailPoint::new(anchor, depth))
}

/// Comma-separated element indices, as in `0,3,6`.
pub fn parse_elements(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| CliError::Input(format!("{x:?} is not an element index")))
        })
        .collect()
}
