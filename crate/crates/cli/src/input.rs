//! Plat and covering files.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use serde::{Deserialize, Serialize};

use platcover::{ArcDirection, MonodromyAssignment, PlatPresentation};

use crate::catalog;

/// `{"strands": 2n, "word": [signed ints], "name": optional}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlatFile {
    pub strands: usize,
    pub word: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl PlatFile {
    pub fn from_plat(plat: &PlatPresentation, name: Option<String>) -> Self {
        Self {
            strands: plat.strand_count(),
            word: plat.word().to_signed(),
            name,
        }
    }

    pub fn plat(&self) -> platcover::Result<PlatPresentation> {
        PlatPresentation::from_signed(self.strands, &self.word)
    }
}

/// `{"p": int, "weights": [int per component]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoveringFile {
    pub p: u64,
    pub weights: Vec<i64>,
}

impl CoveringFile {
    pub fn assignment(&self) -> platcover::Result<MonodromyAssignment> {
        MonodromyAssignment::new(self.p, &self.weights)
    }
}

/// A plat together with the name it was loaded under, if any.
#[derive(Debug, Clone)]
pub struct NamedPlat {
    pub name: Option<String>,
    pub plat: PlatPresentation,
}

pub fn parse_plat_json(text: &str) -> Result<NamedPlat> {
    let file: PlatFile = serde_json::from_str(text)
        .map_err(|e| anyhow!("invalid plat JSON at line {}, column {}: {e}", e.line(), e.column()))?;
    let plat = file.plat()?;
    Ok(NamedPlat { name: file.name, plat })
}

pub fn read_plat_file(path: &Path) -> Result<NamedPlat> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_plat_json(&text).with_context(|| format!("in {}", path.display()))
}

pub fn parse_covering_json(text: &str) -> Result<CoveringFile> {
    serde_json::from_str(text)
        .map_err(|e| anyhow!("invalid covering JSON at line {}, column {}: {e}", e.line(), e.column()))
}

pub fn read_covering_file(path: &Path) -> Result<CoveringFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_covering_json(&text).with_context(|| format!("in {}", path.display()))
}

pub fn catalog_plat(name: &str) -> Result<NamedPlat> {
    let entry = catalog::lookup(name).ok_or_else(|| anyhow!("no catalog entry named {name:?}"))?;
    Ok(NamedPlat {
        name: Some(entry.name.to_string()),
        plat: entry.plat()?,
    })
}

/// Parses `1:forward,2:backward`. Components not mentioned keep the
/// default (forward) seed.
pub fn parse_seed_orientation(text: &str, mu: usize) -> Result<Vec<ArcDirection>> {
    let mut seeds = vec![ArcDirection::Forward; mu];
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (component, dir) = item
            .split_once(':')
            .ok_or_else(|| anyhow!("seed {item:?} is not of the form component:direction"))?;
        let j: usize = component
            .trim()
            .parse()
            .map_err(|_| anyhow!("seed {item:?}: {component:?} is not a component number"))?;
        if j == 0 || j > mu {
            return Err(anyhow!("seed {item:?}: component {j} out of range 1..={mu}"));
        }
        seeds[j - 1] = match dir.trim() {
            "forward" | "f" | "+" => ArcDirection::Forward,
            "backward" | "b" | "-" => ArcDirection::Backward,
            other => return Err(anyhow!("seed {item:?}: unknown direction {other:?}")),
        };
    }
    Ok(seeds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plat_json() {
        let p = parse_plat_json(r#"{"strands": 4, "word": [2, -1, 2], "name": "x"}"#).unwrap();
        assert_eq!(p.name.as_deref(), Some("x"));
        assert_eq!(p.plat.word().to_string(), "2 -1 2");
        assert!(parse_plat_json(r#"{"strands": 4, "word": [0]}"#).is_err());
        assert!(parse_plat_json(r#"{"strands": 5, "word": []}"#).is_err());
        let err = parse_plat_json("{\n\"strands\": 4,\n\"word\": [1,]}").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
        assert!(parse_plat_json(r#"{"strands": 4, "word": [], "extra": 1}"#).is_err());
    }

    #[test]
    fn covering_json() {
        let c = parse_covering_json(r#"{"p": 6, "weights": [2, 3]}"#).unwrap();
        assert_eq!(c.assignment().unwrap().weights(), &[2, 3]);
        assert!(parse_covering_json(r#"{"p": 6, "weights": [2, 0]}"#)
            .unwrap()
            .assignment()
            .is_err());
    }

    #[test]
    fn seeds() {
        use ArcDirection::*;
        assert_eq!(
            parse_seed_orientation("2:backward", 3).unwrap(),
            vec![Forward, Backward, Forward]
        );
        assert_eq!(parse_seed_orientation("", 2).unwrap(), vec![Forward, Forward]);
        assert!(parse_seed_orientation("4:forward", 3).is_err());
        assert!(parse_seed_orientation("1=forward", 3).is_err());
        assert!(parse_seed_orientation("1:sideways", 3).is_err());
    }
}
