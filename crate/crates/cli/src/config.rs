//! Flat `key = value` configuration files.
//!
//! Command-line flags override file values, which override built-in
//! defaults. Run manifests use the same syntax, so a manifest can be fed
//! back in with `--config` to repeat a run.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;
use std::str::FromStr;

use anyhow::{Context, Result};

use crate::error::usage;

/// Manifest-only keys that a config file may carry and that are ignored.
const MANIFEST_KEYS: &[&str] = &["tool", "command", "wall_clock_ms", "seeds"];
const MANIFEST_PREFIXES: &[&str] = &["output."];

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Settings {
    values: BTreeMap<String, String>,
}

impl Settings {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| usage(format!("config line {}: expected key = value", i + 1)))?;
            let key = key.trim();
            if key.is_empty() {
                return Err(usage(format!("config line {}: empty key", i + 1)));
            }
            if MANIFEST_KEYS.contains(&key) || MANIFEST_PREFIXES.iter().any(|p| key.starts_with(p)) {
                continue;
            }
            values.insert(key.to_string(), value.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("in config {}", path.display()))
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    /// `cli` if given, else the file value, else `default`.
    pub fn pick<T>(&self, key: &str, cli: Option<T>, default: T) -> Result<T>
    where
        T: FromStr,
        T::Err: Display,
    {
        Ok(self.pick_opt(key, cli)?.unwrap_or(default))
    }

    pub fn pick_opt<T>(&self, key: &str, cli: Option<T>) -> Result<Option<T>>
    where
        T: FromStr,
        T::Err: Display,
    {
        if cli.is_some() {
            return Ok(cli);
        }
        self.raw(key)
            .map(|v| v.parse::<T>().map_err(|e| usage(format!("config key {key}: {e}"))))
            .transpose()
    }

    /// Keys the caller did not consume, for a "did you mean" style warning.
    pub fn unknown_keys<'a>(&'a self, known: &'a [&str]) -> impl Iterator<Item = &'a str> + 'a {
        self.values.keys().map(String::as_str).filter(move |k| !known.contains(k))
    }
}

/// Comma-separated list, e.g. `0.1,0.3,0.5`.
pub fn parse_list<T>(s: &str) -> Result<Vec<T>>
where
    T: FromStr,
    T::Err: Display,
{
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<T>().map_err(|e| usage(format!("bad list item {t:?}: {e}"))))
        .collect()
}

/// Settings echo in config syntax, keys sorted.
pub fn echo(pairs: &[(&str, String)]) -> String {
    let sorted: BTreeMap<&str, &String> = pairs.iter().map(|(k, v)| (*k, v)).collect();
    sorted.iter().map(|(k, v)| format!("{k} = {v}\n")).collect()
}
