//! On-disk cache of sweep records: a JSON header line followed by one
//! `{key, record}` object per line.

use std::collections::BTreeMap;
use std::fs;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::emit::write_atomic;
use crate::error::CliResult;
use crate::sweep::InstanceRecord;

const FORMAT: &str = "demazure-sweep-cache";
const VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize, PartialEq, Eq)]
struct Header {
    format: String,
    version: u32,
    fingerprint: String,
    #[serde(rename = "type")]
    lie_type: String,
    rank: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct Line {
    key: String,
    record: InstanceRecord,
}

pub struct Cache {
    path: PathBuf,
    header: Header,
    records: BTreeMap<String, InstanceRecord>,
}

impl Cache {
    /// Opens the cache file for one root datum, discarding it if unreadable.
    pub fn open(dir: &Path, fingerprint: &str, label: &str, rank: usize) -> CliResult<Self> {
        fs::create_dir_all(dir)?;
        let path = dir.join(format!("{label}-{}.jsonl", &fingerprint[..16]));
        let header = Header {
            format: FORMAT.into(),
            version: VERSION,
            fingerprint: fingerprint.into(),
            lie_type: label.into(),
            rank,
        };
        let mut cache = Self { path, header, records: BTreeMap::new() };
        if cache.path.exists() {
            match cache.load() {
                Ok(records) => cache.records = records,
                Err(reason) => {
                    log::warn!("cache {} unusable ({reason}); rebuilding from scratch", cache.path.display());
                }
            }
        }
        Ok(cache)
    }

    fn load(&self) -> Result<BTreeMap<String, InstanceRecord>, String> {
        let file = fs::File::open(&self.path).map_err(|e| e.to_string())?;
        let mut lines = BufReader::new(file).lines();
        let first = lines.next().ok_or("empty file")?.map_err(|e| e.to_string())?;
        let header: Header = serde_json::from_str(&first).map_err(|e| format!("bad header: {e}"))?;
        if header != self.header {
            return Err("header does not match this datum and convention".into());
        }
        let mut out = BTreeMap::new();
        for (n, line) in lines.enumerate() {
            let line = line.map_err(|e| e.to_string())?;
            let rec: Line = serde_json::from_str(&line).map_err(|e| format!("bad record on line {}: {e}", n + 2))?;
            out.insert(rec.key, rec.record);
        }
        Ok(out)
    }

    pub fn get(&self, key: &str) -> Option<&InstanceRecord> {
        self.records.get(key)
    }

    pub fn insert(&mut self, key: String, record: InstanceRecord) {
        self.records.insert(key, record);
    }

    pub fn clear(&mut self) {
        self.records.clear();
    }

    pub fn save(&self) -> CliResult<()> {
        let mut out = serde_json::to_string(&self.header)?;
        out.push('\n');
        for (key, record) in &self.records {
            out.push_str(&serde_json::to_string(&Line { key: key.clone(), record: record.clone() })?);
            out.push('\n');
        }
        write_atomic(&self.path, out.as_bytes())
    }

    pub fn path(&self) -> &Path {
        &self.path
    }
}
