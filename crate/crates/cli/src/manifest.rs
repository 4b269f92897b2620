//! Output directories with hashed files and a run manifest.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use sha2::{Digest, Sha256};

pub const MANIFEST_FILE: &str = "manifest.txt";
/// Manifest line excluded from byte-level reproducibility checks.
pub const WALL_CLOCK_KEY: &str = "wall_clock_ms";

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Collects files written during a run, with their hashes.
#[derive(Debug)]
pub struct OutputDir {
    dir: PathBuf,
    files: Vec<(String, String)>,
}

impl OutputDir {
    pub fn create(dir: &Path) -> Result<Self> {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        Ok(Self {
            dir: dir.to_path_buf(),
            files: Vec::new(),
        })
    }

    pub fn path(&self) -> &Path {
        &self.dir
    }

    pub fn write(&mut self, name: &str, contents: &str) -> Result<()> {
        let path = self.dir.join(name);
        fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))?;
        self.files.push((name.to_string(), sha256_hex(contents.as_bytes())));
        Ok(())
    }

    pub fn files(&self) -> &[(String, String)] {
        &self.files
    }
}

/// Everything needed to repeat a run: the resolved settings, seeds, tool
/// version and the hash of every output file.
#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub command: String,
    /// Resolved settings in config-file syntax, one `key = value` per entry.
    pub config: Vec<(String, String)>,
    pub seeds: Vec<u64>,
    pub wall_clock_ms: u128,
    pub outputs: Vec<(String, String)>,
}

pub fn tool_version() -> String {
    format!("{} {}", env!("CARGO_PKG_NAME"), env!("CARGO_PKG_VERSION"))
}

impl RunManifest {
    pub fn new(command: &str, config: Vec<(String, String)>, seeds: Vec<u64>, started: Instant, outputs: &OutputDir) -> Self {
        Self {
            command: command.to_string(),
            config,
            seeds,
            wall_clock_ms: started.elapsed().as_millis(),
            outputs: outputs.files().to_vec(),
        }
    }

    /// Renders in the flat config syntax so the file can be passed back with
    /// `--config`.
    pub fn render(&self) -> String {
        let mut s = String::from("# fairank run manifest\n");
        writeln!(s, "tool = {}", tool_version()).unwrap();
        writeln!(s, "command = {}", self.command).unwrap();
        writeln!(s, "{WALL_CLOCK_KEY} = {}", self.wall_clock_ms).unwrap();
        let seeds: Vec<String> = self.seeds.iter().map(u64::to_string).collect();
        writeln!(s, "seeds = {}", seeds.join(",")).unwrap();
        for (k, v) in &self.config {
            writeln!(s, "{k} = {v}").unwrap();
        }
        for (name, hash) in &self.outputs {
            writeln!(s, "output.{name} = {hash}").unwrap();
        }
        s
    }

    pub fn write(&self, dir: &Path) -> Result<()> {
        let path = dir.join(MANIFEST_FILE);
        fs::write(&path, self.render()).with_context(|| format!("writing {}", path.display()))
    }
}

/// Output files listed in a manifest whose current hash differs, or that
/// are missing. Empty means the directory matches its manifest.
pub fn verify_dir(dir: &Path) -> Result<Vec<String>> {
    let text = fs::read_to_string(dir.join(MANIFEST_FILE)).context("reading manifest")?;
    let mut bad = Vec::new();
    for line in text.lines() {
        let Some(rest) = line.strip_prefix("output.") else {
            continue;
        };
        let Some((name, hash)) = rest.split_once(" = ") else {
            continue;
        };
        match fs::read(dir.join(name)) {
            Ok(bytes) if sha256_hex(&bytes) == hash => {}
            _ => bad.push(name.to_string()),
        }
    }
    Ok(bad)
}

/// Manifest text without the wall-clock line, for reproducibility checks.
pub fn stable_manifest(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with(WALL_CLOCK_KEY))
        .map(|l| format!("{l}\n"))
        .collect()
}
