use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{parse_descriptor, AlgebraDescriptor};
use crate::error::{Error, Result};

use super::checks::registry;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Alg,
    Hua,
    Spec,
    Wh,
    Axb,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Alg, Suite::Hua, Suite::Spec, Suite::Wh, Suite::Axb];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Alg => "alg",
            Suite::Hua => "hua",
            Suite::Spec => "spec",
            Suite::Wh => "wh",
            Suite::Axb => "axb",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.id() == s.trim())
            .ok_or_else(|| Error::Config(format!("unknown suite `{s}` (expected one of alg, hua, spec, wh, axb)")))
    }
}

pub const DEFAULT_ALGEBRAS: [&str; 5] = ["rn:5", "sym:3", "sym:4", "spin:4", "sum(sym:2,spin:3)"];

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub algebras: Vec<AlgebraDescriptor>,
    pub seed: u64,
    pub samples: usize,
    pub tolerances: BTreeMap<String, f64>,
    pub suites: Vec<Suite>,
    pub out: Option<PathBuf>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            algebras: DEFAULT_ALGEBRAS.iter().map(|s| s.parse().expect("valid default")).collect(),
            seed: 42,
            samples: 1000,
            tolerances: BTreeMap::new(),
            suites: Suite::ALL.to_vec(),
            out: None,
            jobs: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        if self.suites.is_empty() {
            return Err(Error::Config("no suites selected".into()));
        }
        if self.algebras.is_empty() {
            return Err(Error::Config("no algebras selected".into()));
        }
        if self.jobs == Some(0) {
            return Err(Error::Config("jobs must be at least 1".into()));
        }
        for (key, value) in &self.tolerances {
            if !registry().iter().any(|c| c.id == key) {
                return Err(Error::Config(format!("unknown check `{key}` in tolerance overrides")));
            }
            if !(value.is_finite() && *value >= 0.0) {
                return Err(Error::Config(format!("tolerance for `{key}` must be a finite non-negative number")));
            }
        }
        for a in &self.algebras {
            a.validate()?;
        }
        Ok(())
    }
}

/// Settings gathered from a config file or the command line. Unset fields
/// leave the base configuration alone.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConfigOverrides {
    pub algebras: Option<Vec<String>>,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub tolerances: Vec<(String, f64)>,
    pub suites: Option<Vec<String>>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

impl ConfigOverrides {
    pub fn apply(&self, cfg: &mut RunConfig) -> Result<()> {
        if let Some(algs) = &self.algebras {
            cfg.algebras = algs.iter().map(|s| parse_descriptor(s)).collect::<Result<_>>()?;
        }
        if let Some(seed) = self.seed {
            cfg.seed = seed;
        }
        if let Some(n) = self.samples {
            cfg.samples = n;
        }
        for (k, v) in &self.tolerances {
            cfg.tolerances.insert(k.clone(), *v);
        }
        if let Some(suites) = &self.suites {
            cfg.suites = suites.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        }
        if let Some(out) = &self.out {
            cfg.out = Some(out.clone());
        }
        if let Some(j) = self.jobs {
            cfg.jobs = Some(j);
        }
        Ok(())
    }
}

/// Parses `check=value`.
pub fn parse_tolerance(s: &str) -> Result<(String, f64)> {
    let (k, v) = s.split_once('=').ok_or_else(|| Error::Config(format!("expected check=value, got `{s}`")))?;
    let v: f64 = v.trim().parse().map_err(|_| Error::Config(format!("bad tolerance value in `{s}`")))?;
    Ok((k.trim().to_string(), v))
}

/// Reads the `key = value` config format.
///
/// ```text
/// # comment
/// algebra = sym:3
/// algebra = spin:4
/// seed = 42
/// samples = 1000
/// suites = alg, hua, wh
/// tol.hua.residual = 1e-9
/// out = reports.jsonl
/// jobs = 4
/// ```
///
/// `algebra` may repeat. Descriptors contain commas, so each line holds one.
pub fn parse_config_text(text: &str) -> Result<ConfigOverrides> {
    let mut o = ConfigOverrides::default();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |m: &str| Error::Config(format!("line {}: {m}", n + 1));
        let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key = value"))?;
        let (key, value) = (key.trim(), value.trim());
        match key {
            "algebra" => o.algebras.get_or_insert_with(Vec::new).push(value.to_string()),
            "seed" => o.seed = Some(value.parse().map_err(|_| bad("seed must be an unsigned integer"))?),
            "samples" => o.samples = Some(value.parse().map_err(|_| bad("samples must be a positive integer"))?),
            "suites" => o.suites = Some(value.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect()),
            "out" => o.out = Some(PathBuf::from(value)),
            "jobs" => o.jobs = Some(value.parse().map_err(|_| bad("jobs must be a positive integer"))?),
            _ => match key.strip_prefix("tol.") {
                Some(check) => {
                    let v = value.parse().map_err(|_| bad("tolerance must be a number"))?;
                    o.tolerances.push((check.to_string(), v));
                }
                None => return Err(bad(&format!("unknown key `{key}`"))),
            },
        }
    }
    Ok(o)
}

pub fn read_config_file(path: &Path) -> Result<ConfigOverrides> {
    parse_config_text(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_flags() {
        let file = parse_config_text(
            "# run\nalgebra = sum(sym:2,spin:3)\nalgebra = rn:2\nseed = 7\nsuites = hua, spec\ntol.hua.residual = 1e-9\n",
        )
        .unwrap();
        let flags = ConfigOverrides { seed: Some(9), ..Default::default() };
        let mut cfg = RunConfig::default();
        file.apply(&mut cfg).unwrap();
        flags.apply(&mut cfg).unwrap();
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.algebras.len(), 2);
        assert_eq!(cfg.algebras[0].to_string(), "sum(sym:2,spin:3)");
        assert_eq!(cfg.suites, vec![Suite::Hua, Suite::Spec]);
        assert_eq!(cfg.tolerances["hua.residual"], 1e-9);
        cfg.validate().unwrap();
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_config_text("colour = red").is_err());
        assert!(parse_config_text("seed = -1").is_err());
        let mut cfg = RunConfig::default();
        let o = ConfigOverrides { suites: Some(vec!["nope".into()]), ..Default::default() };
        assert!(matches!(o.apply(&mut cfg), Err(Error::Config(_))));

        let cfg = RunConfig { suites: vec![], ..Default::default() };
        assert!(matches!(cfg.validate(), Err(Error::Config(_))));
        let mut cfg = RunConfig::default();
        cfg.tolerances.insert("no.such.check".into(), 1.0);
        assert!(matches!(cfg.validate(), Err(Error::Config(_))));
        let cfg = RunConfig { samples: 0, ..Default::default() };
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn tolerance_flag_syntax() {
        assert_eq!(parse_tolerance("wh.roundtrip=1e-6").unwrap(), ("wh.roundtrip".to_string(), 1e-6));
        assert!(parse_tolerance("wh.roundtrip").is_err());
        assert!(parse_tolerance("wh.roundtrip=abc").is_err());
    }
}
