//! On-disk JSON cache for computed artifacts.
//!
//! Entries live in `<dir>/<kind>-<key>.json`, where `key` hashes the artifact
//! version, the kind, extra parameters and the Cayley table. Every output is
//! rendered from the artifact value, so a hit prints the same bytes as a
//! recomputation.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use hopfcat::error::Result;
use hopfcat::group::Group;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// Bump whenever an artifact's layout or content changes.
pub const CACHE_VERSION: u32 = 1;

pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Cache {
        Cache { dir }
    }

    pub fn disabled() -> Cache {
        Cache { dir: None }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(kind: &str, group: &Group, params: &str) -> String {
        key_for_version(CACHE_VERSION, kind, group, params)
    }

    fn path(&self, kind: &str, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{kind}-{key}.json")))
    }

    /// The cached value, or `compute()` stored for next time. Unreadable or
    /// mismatched entries are reported on stderr and replaced.
    pub fn get_or_compute(
        &self,
        kind: &str,
        group: &Group,
        params: &str,
        compute: impl FnOnce() -> Result<Value>,
    ) -> Result<Value> {
        let key = Cache::key(kind, group, params);
        let Some(path) = self.path(kind, &key) else {
            return compute();
        };
        match fs::read_to_string(&path) {
            Ok(text) => match decode(&text, kind, &key) {
                Some(v) => return Ok(v),
                None => eprintln!("warning: discarding corrupt cache entry {}", path.display()),
            },
            Err(e) if e.kind() == io::ErrorKind::NotFound => {}
            Err(e) => eprintln!("warning: cannot read cache entry {}: {e}", path.display()),
        }
        let value = compute()?;
        if let Err(e) = store(&path, kind, &key, &value) {
            eprintln!("warning: cannot write cache entry {}: {e}", path.display());
        }
        Ok(value)
    }

    /// Removes every entry this cache wrote; returns how many.
    pub fn purge(&self) -> io::Result<usize> {
        let Some(dir) = &self.dir else { return Ok(0) };
        let entries = match fs::read_dir(dir) {
            Ok(e) => e,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e),
        };
        let mut removed = 0;
        for entry in entries {
            let path = entry?.path();
            if is_entry_name(&path) {
                fs::remove_file(&path)?;
                removed += 1;
            }
        }
        Ok(removed)
    }
}

/// Entries of another version live under other names, so a bump is a miss.
fn key_for_version(version: u32, kind: &str, group: &Group, params: &str) -> String {
    let mut h = Sha256::new();
    h.update(version.to_le_bytes());
    h.update(kind.as_bytes());
    h.update([0]);
    h.update(params.as_bytes());
    h.update([0]);
    h.update(group.table_bytes());
    hex::encode(h.finalize())
}

fn decode(text: &str, kind: &str, key: &str) -> Option<Value> {
    let mut v: Value = serde_json::from_str(text).ok()?;
    let ok = v.get("version")? == CACHE_VERSION && v.get("kind")? == kind && v.get("key")? == key;
    if ok {
        v.get_mut("value").map(Value::take)
    } else {
        None
    }
}

fn store(path: &Path, kind: &str, key: &str, value: &Value) -> io::Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let body = json!({ "version": CACHE_VERSION, "kind": kind, "key": key, "value": value });
    // Write then rename so a reader never sees half an entry.
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_string(&body).expect("serializable"))?;
    fs::rename(&tmp, path)
}

fn is_entry_name(path: &Path) -> bool {
    let Some(name) = path.file_name().and_then(|n| n.to_str()) else {
        return false;
    };
    let Some(stem) = name.strip_suffix(".json") else {
        return false;
    };
    match stem.rsplit_once('-') {
        Some((kind, key)) => {
            !kind.is_empty() && key.len() == 64 && key.bytes().all(|b| b.is_ascii_hexdigit())
        }
        None => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopfcat::group::parse_group_spec;

    #[test]
    fn roundtrip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().to_path_buf()));
        let g = parse_group_spec("Z3").unwrap();
        let mut calls = 0;
        let get = |calls: &mut i32| {
            cache
                .get_or_compute("demo", &g, "", || {
                    *calls += 1;
                    Ok(json!({ "x": 1 }))
                })
                .unwrap()
        };
        assert_eq!(get(&mut calls), json!({ "x": 1 }));
        assert_eq!(get(&mut calls), json!({ "x": 1 }));
        assert_eq!(calls, 1);
        let path = dir.path().join(format!("demo-{}.json", Cache::key("demo", &g, "")));
        fs::write(&path, "{ not json").unwrap();
        assert_eq!(get(&mut calls), json!({ "x": 1 }));
        assert_eq!(calls, 2);
        fs::write(dir.path().join("unrelated.json"), "{}").unwrap();
        assert_eq!(cache.purge().unwrap(), 1);
        assert!(dir.path().join("unrelated.json").exists());
    }

    #[test]
    fn keys_separate_groups_and_kinds() {
        let a = parse_group_spec("Z4").unwrap();
        let b = parse_group_spec("Z2xZ2").unwrap();
        assert_ne!(Cache::key("smatrix", &a, ""), Cache::key("smatrix", &b, ""));
        assert_ne!(Cache::key("smatrix", &a, ""), Cache::key("chartab", &a, ""));
        assert_eq!(Cache::key("smatrix", &a, "").len(), 64);
        assert_ne!(
            Cache::key("smatrix", &a, ""),
            key_for_version(CACHE_VERSION + 1, "smatrix", &a, "")
        );
    }

    #[test]
    fn stale_version_in_place_is_recomputed() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(Some(dir.path().to_path_buf()));
        let g = parse_group_spec("Z2").unwrap();
        let key = Cache::key("demo", &g, "");
        let old = json!({ "version": CACHE_VERSION + 1, "kind": "demo", "key": key, "value": 7 });
        fs::write(dir.path().join(format!("demo-{key}.json")), old.to_string()).unwrap();
        assert_eq!(cache.get_or_compute("demo", &g, "", || Ok(json!(8))).unwrap(), json!(8));
        assert_eq!(cache.get_or_compute("demo", &g, "", || Ok(json!(9))).unwrap(), json!(8));
    }

    #[test]
    fn disabled_cache_always_computes() {
        let g = parse_group_spec("Z2").unwrap();
        let c = Cache::disabled();
        assert!(c.dir().is_none());
        assert_eq!(c.get_or_compute("k", &g, "", || Ok(json!(3))).unwrap(), json!(3));
        assert_eq!(c.purge().unwrap(), 0);
    }
}
