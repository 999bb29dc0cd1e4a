//! Atomic file output and the on-disk cache of invariant bases.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use braidrep_core::elliptic::{invariants, InvariantBasis};

use crate::json::{from_text, to_text, BasisJson};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "BRAIDREP_CACHE_DIR";

/// Write through a temporary file in the same directory, then rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut tmp =
        tempfile::NamedTempFile::new_in(dir).with_context(|| format!("creating a file in {}", dir.display()))?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path)
        .with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

/// Memoized invariant bases, one JSON file per `(n, K)`.
#[derive(Clone, Debug)]
pub struct BasisCache {
    dir: Option<PathBuf>,
}

impl BasisCache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        BasisCache { dir }
    }

    pub fn from_env() -> Self {
        Self::new(std::env::var_os(CACHE_ENV).map(PathBuf::from))
    }

    pub fn path(&self, n: usize, k: usize) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("basis_n{n}_K{k}.json")))
    }

    /// The cached basis if present and well formed, else a fresh one which is then stored.
    pub fn basis(&self, n: usize, k: usize) -> Result<InvariantBasis> {
        let Some(path) = self.path(n, k) else {
            return Ok(invariants(n, k));
        };
        if let Ok(text) = fs::read_to_string(&path) {
            let cached = from_text::<BasisJson>(&text).and_then(|j| j.to_basis());
            if let Ok(b) = cached {
                if b.n == n && b.k == k {
                    return Ok(b);
                }
            }
        }
        let b = invariants(n, k);
        write_atomic(&path, &to_text(&BasisJson::from_basis(&b))?)?;
        Ok(b)
    }
}
