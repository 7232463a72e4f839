//! Job configuration and the persisted oracle calibration.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{ensure, Context, Result};
use qhowe_core::fock::SpaceDescriptor;
use qhowe_core::indexsets::{count_matrices, Flavor};
use qhowe_core::oracle::{is_prime, Calibration};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Relations,
    Commuting,
    Intertwiner,
    Oracle,
    Spectrum,
    Decomposition,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// The normalized Fock basis [A].
    Fock,
    /// The monomial basis t^(A) / t~^(A).
    Coord,
    /// The rescaled coordinate basis <A>.
    Rescaled,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case", tag = "name")]
pub enum Command {
    Enumerate,
    Straighten { word: String },
    Act { side: String, generator: String, label: String, basis: Basis },
    Verify { suite: Suite },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Enumerate => "enumerate",
            Command::Straighten { .. } => "straighten",
            Command::Act { .. } => "act",
            Command::Verify { .. } => "verify",
        }
    }
}

/// Everything that determines a report. The output path and cache location
/// are deliberately absent so they cannot change the report bytes.
#[derive(Clone, Debug, Serialize)]
pub struct JobConfig {
    pub command: Command,
    pub flavor: Flavor,
    pub m: usize,
    pub n: usize,
    pub d: usize,
    pub primes: Vec<u64>,
    pub degree_bound: Option<usize>,
    pub max_basis: u128,
    pub calibrate: bool,
}

impl JobConfig {
    pub fn space(&self) -> SpaceDescriptor {
        SpaceDescriptor::new(self.flavor, self.m, self.n, self.d)
    }

    /// Primes must exceed 5 and the label set must fit under the cap.
    pub fn validate(&self) -> Result<()> {
        for &p in &self.primes {
            ensure!(p > 5 && is_prime(p), "{p} is not a prime greater than 5");
        }
        ensure!(self.m >= 1 && self.n >= 1, "m and n must be positive");
        let count = count_matrices(self.flavor, self.m, self.n, self.d);
        ensure!(
            count <= self.max_basis,
            "{} has {count} labels, above the cap of {} (raise --max-basis)",
            self.space(),
            self.max_basis
        );
        Ok(())
    }
}

/// The calibration file inside the cache directory.
pub struct CalibrationStore {
    path: PathBuf,
}

impl CalibrationStore {
    pub fn in_dir(dir: &Path) -> Self {
        Self {
            path: dir.join("calibration.json"),
        }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn load(&self) -> Result<Option<Calibration>> {
        if !self.path.exists() {
            return Ok(None);
        }
        let text = fs::read_to_string(&self.path).with_context(|| format!("reading {}", self.path.display()))?;
        let cal = serde_json::from_str(&text).with_context(|| format!("parsing {}", self.path.display()))?;
        Ok(Some(cal))
    }

    pub fn save(&self, cal: &Calibration) -> Result<()> {
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        let mut text = serde_json::to_string_pretty(cal)?;
        text.push('\n');
        fs::write(&self.path, text).with_context(|| format!("writing {}", self.path.display()))
    }
}
