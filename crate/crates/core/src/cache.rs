//! On-disk cache of [`LatticeSummary`] values, one JSON file per modulus.
//!
//! Every integer is written as a decimal string. A file whose
//! `schema_version` differs from [`SCHEMA_VERSION`] is ignored and
//! overwritten.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::affine_lattice::{ClassSummary, LatticeSummary};
use crate::error::{Error, Result};
use crate::lattice::{Convention, LatticeLimits, TableOfMarks};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Serialize, Deserialize)]
struct ClassRecord {
    order: String,
    length: String,
    mu: String,
    orbit_sizes: Vec<String>,
    in_k0: Option<bool>,
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    schema_version: String,
    n: String,
    group_order: String,
    subgroup_count: String,
    convention: String,
    classes: Vec<ClassRecord>,
    marks: Vec<Vec<String>>,
}

fn parse<T: std::str::FromStr>(s: &str, field: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::Inconsistency(format!("cache field {field}: bad integer {s:?}")))
}

pub fn to_json(summary: &LatticeSummary) -> Result<String> {
    let file = CacheFile {
        schema_version: SCHEMA_VERSION.into(),
        n: summary.n.to_string(),
        group_order: summary.group_order.to_string(),
        subgroup_count: summary.subgroup_count.to_string(),
        convention: Convention::Ascending.label().into(),
        classes: summary
            .classes
            .iter()
            .map(|c| ClassRecord {
                order: c.order.to_string(),
                length: c.length.to_string(),
                mu: c.mu.to_string(),
                orbit_sizes: c.orbit_sizes.iter().map(ToString::to_string).collect(),
                in_k0: c.in_k0,
            })
            .collect(),
        marks: summary
            .marks
            .rows(Convention::Ascending)
            .into_iter()
            .map(|r| r.into_iter().map(|m| m.to_string()).collect())
            .collect(),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

/// Parses a cache file; `Ok(None)` when the schema version differs.
pub fn from_json(text: &str) -> Result<Option<LatticeSummary>> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("schema_version").and_then(|v| v.as_str()) != Some(SCHEMA_VERSION) {
        return Ok(None);
    }
    let file: CacheFile = serde_json::from_value(value)?;
    if file.convention != Convention::Ascending.label() {
        return Err(Error::Inconsistency(format!(
            "unsupported marks convention {:?}",
            file.convention
        )));
    }
    let classes = file
        .classes
        .iter()
        .map(|c| {
            Ok(ClassSummary {
                order: parse(&c.order, "order")?,
                length: parse(&c.length, "length")?,
                mu: parse(&c.mu, "mu")?,
                orbit_sizes: c
                    .orbit_sizes
                    .iter()
                    .map(|s| parse(s, "orbit_sizes"))
                    .collect::<Result<_>>()?,
                in_k0: c.in_k0,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let group_order: u64 = parse(&file.group_order, "group_order")?;
    let marks = file
        .marks
        .iter()
        .map(|r| r.iter().map(|m| parse(m, "marks")).collect::<Result<Vec<u64>>>())
        .collect::<Result<Vec<_>>>()?;
    let orders = classes.iter().map(|c| c.order).collect();
    Ok(Some(LatticeSummary {
        n: parse(&file.n, "n")?,
        group_order,
        subgroup_count: parse(&file.subgroup_count, "subgroup_count")?,
        classes,
        marks: TableOfMarks::from_marks(group_order, orders, marks)?,
    }))
}

pub fn cache_path(dir: &Path, n: u64) -> PathBuf {
    dir.join(format!("aff-{n}.json"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Disabled,
    Hit,
    Miss,
}

impl CacheStatus {
    pub fn label(self) -> &'static str {
        match self {
            CacheStatus::Disabled => "disabled",
            CacheStatus::Hit => "hit",
            CacheStatus::Miss => "miss",
        }
    }
}

/// Loads the summary for `n` from `dir`, or computes it and writes it there.
pub fn load_or_compute(
    n: u64,
    limits: LatticeLimits,
    dir: Option<&Path>,
) -> Result<(LatticeSummary, CacheStatus)> {
    let Some(dir) = dir else {
        return Ok((LatticeSummary::compute(n, limits)?, CacheStatus::Disabled));
    };
    let path = cache_path(dir, n);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Some(summary) = from_json(&text)? {
            if summary.n != n {
                return Err(Error::Inconsistency(format!(
                    "cache file {} holds n = {}",
                    path.display(),
                    summary.n
                )));
            }
            if summary.group_order as usize > limits.max_order {
                return Err(Error::OrderCapExceeded {
                    cap: limits.max_order,
                    reached: summary.group_order as usize,
                });
            }
            return Ok((summary, CacheStatus::Hit));
        }
    }
    let summary = LatticeSummary::compute(n, limits)?;
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, to_json(&summary)?)?;
    fs::rename(&tmp, &path)?;
    Ok((summary, CacheStatus::Miss))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let s = LatticeSummary::compute(10, LatticeLimits::default()).unwrap();
        let text = to_json(&s).unwrap();
        assert_eq!(from_json(&text).unwrap().unwrap(), s);
        assert!(text.contains("\"group_order\": \"40\""));
    }

    #[test]
    fn stale_schema_is_ignored() {
        let s = LatticeSummary::compute(2, LatticeLimits::default()).unwrap();
        let text = to_json(&s).unwrap().replace("\"schema_version\": \"1\"", "\"schema_version\": \"0\"");
        assert!(from_json(&text).unwrap().is_none());
    }

    #[test]
    fn warm_cache_hits() {
        let dir = tempfile::tempdir().unwrap();
        let limits = LatticeLimits::default();
        let (cold, st) = load_or_compute(6, limits, Some(dir.path())).unwrap();
        assert_eq!(st, CacheStatus::Miss);
        let (warm, st) = load_or_compute(6, limits, Some(dir.path())).unwrap();
        assert_eq!(st, CacheStatus::Hit);
        assert_eq!(cold, warm);

        // An outdated file is recomputed and replaced.
        let path = cache_path(dir.path(), 6);
        let old = fs::read_to_string(&path).unwrap().replace("\"schema_version\": \"1\"", "\"schema_version\": \"0\"");
        fs::write(&path, old).unwrap();
        let (_, st) = load_or_compute(6, limits, Some(dir.path())).unwrap();
        assert_eq!(st, CacheStatus::Miss);
        assert!(fs::read_to_string(&path).unwrap().contains("\"schema_version\": \"1\""));
    }
}
