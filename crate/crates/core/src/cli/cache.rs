//! Content-addressed result cache: one JSON file per record, named by the
//! SHA-256 of the canonical (parameters, quadrature, version) material.

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::params::Params;
use super::record::{ResultRecord, VERSION};
use super::CliError;
use crate::numerics::QuadratureSpec;

#[derive(Serialize)]
struct KeyMaterial<'a> {
    params: &'a Params,
    quadrature: &'a QuadratureSpec,
    version: &'a str,
}

/// Hex key of a request. `params` carries the selector under `fn`.
pub fn cache_key(params: &Params, q: &QuadratureSpec) -> String {
    let material = KeyMaterial {
        params,
        quadrature: q,
        version: VERSION,
    };
    let bytes = serde_json::to_vec(&material).expect("parameters serialize");
    hex::encode(Sha256::digest(bytes))
}

pub struct Cache {
    dir: PathBuf,
    locks: Mutex<HashMap<String, Arc<Mutex<()>>>>,
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self, CliError> {
        let dir = dir.into();
        fs::create_dir_all(&dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
        Ok(Self {
            dir,
            locks: Mutex::new(HashMap::new()),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Cached record for `key`, or compute, store and return it. Concurrent
    /// callers with the same key compute once; failures are not stored.
    pub fn get_or_compute<F>(&self, key: &str, compute: F) -> Result<ResultRecord, CliError>
    where
        F: FnOnce() -> Result<ResultRecord, CliError>,
    {
        let lock = {
            let mut locks = self.locks.lock().unwrap_or_else(|p| p.into_inner());
            locks.entry(key.to_string()).or_default().clone()
        };
        let _guard = lock.lock().unwrap_or_else(|p| p.into_inner());
        let path = self.path(key);
        if let Ok(text) = fs::read_to_string(&path) {
            if let Ok(record) = ResultRecord::from_json(&text) {
                return Ok(record);
            }
        }
        let record = compute()?;
        // write-then-rename keeps readers from seeing a partial file
        let tmp = self.dir.join(format!("{key}.{}.tmp", std::process::id()));
        let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
        fs::write(&tmp, record.to_json()).map_err(io)?;
        fs::rename(&tmp, &path).map_err(io)?;
        Ok(record)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::params::{Cplx, ParamValue};

    #[test]
    fn key_depends_on_quadrature_and_params() {
        let mut p = Params::new();
        p.insert("fn".into(), ParamValue::Text("zeta".into()));
        let q = QuadratureSpec::default();
        let k = cache_key(&p, &q);
        assert_eq!(k.len(), 64);
        assert_eq!(k, cache_key(&p, &q));
        assert_ne!(k, cache_key(&p, &q.scaled(0.1)));
        p.insert("s".into(), ParamValue::Real(2.0));
        assert_ne!(k, cache_key(&p, &q));
    }

    #[test]
    fn second_lookup_is_served_from_disk() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let q = QuadratureSpec::default();
        let make = || {
            Ok(ResultRecord::new(
                Params::new(),
                Cplx { re: 1.0, im: 2.0 },
                0.0,
                true,
                &q,
            ))
        };
        let a = cache.get_or_compute("k", make).unwrap();
        let b = cache
            .get_or_compute("k", || Err(CliError::Usage("must not recompute".into())))
            .unwrap();
        assert_eq!(a, b);
    }
}
