//! Reference files for the verification suite. The copies under `golden/`
//! are compiled in; `--golden-dir` swaps in another directory with the same
//! file names.

use std::collections::BTreeMap;
use std::path::Path;

use ramcalc_core::hahn::TermRepr;
use ramcalc_core::newton::SeriesRepr;
use ramcalc_core::pmfun::PmFunction;
use ramcalc_core::ramify::{GroupRepr, InertiaRepr};
use ramcalc_core::RadialMorphismModel;
use serde::de::DeserializeOwned;
use serde::Deserialize;

use crate::error::CliError;

pub const FILES: [(&str, &str); 3] = [
    ("z9_herbrand.json", include_str!("../../golden/z9_herbrand.json")),
    ("split_series.json", include_str!("../../golden/split_series.json")),
    ("models.json", include_str!("../../golden/models.json")),
];

#[derive(Debug, Clone)]
pub struct Golden {
    texts: BTreeMap<&'static str, String>,
}

#[derive(Debug, Deserialize)]
pub struct HerbrandCase {
    pub group: GroupRepr,
    pub inertia: InertiaRepr,
    pub subgroup: Vec<usize>,
    pub herbrand: PmFunction,
}

#[derive(Debug, Deserialize)]
pub struct SplitCase {
    pub series: SeriesRepr,
    pub origin_degrees: Vec<u64>,
    pub split: SplitThreshold,
    pub refutation: Refutation,
}

#[derive(Debug, Deserialize)]
pub struct SplitThreshold {
    pub bound: u64,
    pub threshold: String,
}

#[derive(Debug, Deserialize)]
pub struct Refutation {
    pub bound: u64,
    pub probe: Vec<TermRepr>,
    pub probe_degrees: Vec<u64>,
    pub origin_threshold: String,
    pub probe_threshold: String,
}

#[derive(Debug, Deserialize)]
pub struct ModelCase {
    pub name: String,
    pub model: RadialMorphismModel,
    /// Expected thresholds of `N_{>= bound}`, keyed by bound then vertex.
    pub loci: BTreeMap<String, BTreeMap<String, String>>,
}

impl Default for Golden {
    fn default() -> Self {
        Golden {
            texts: FILES.iter().map(|(name, text)| (*name, text.to_string())).collect(),
        }
    }
}

impl Golden {
    pub fn from_dir(dir: &Path) -> Result<Self, CliError> {
        let mut texts = BTreeMap::new();
        for (name, _) in FILES {
            let path = dir.join(name);
            let text =
                std::fs::read_to_string(&path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            texts.insert(name, text);
        }
        Ok(Golden { texts })
    }

    fn get<T: DeserializeOwned>(&self, name: &str) -> Result<T, String> {
        serde_json::from_str(&self.texts[name]).map_err(|e| format!("golden file {name}: {e}"))
    }

    pub fn z9(&self) -> Result<HerbrandCase, String> {
        self.get("z9_herbrand.json")
    }

    pub fn split(&self) -> Result<SplitCase, String> {
        self.get("split_series.json")
    }

    pub fn models(&self) -> Result<Vec<ModelCase>, String> {
        self.get("models.json")
    }
}
