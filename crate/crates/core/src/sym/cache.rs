//! On-disk cache of Macdonald expansions with per-degree checksums.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::macdonald::MacTable;
use super::tables::ClassicalTable;
use super::SymError;
use crate::qt::QTRational;

pub const FORMAT_VERSION: u32 = 1;
pub const FILE_NAME: &str = "macdonald_cache.json";

type Expansions = BTreeMap<String, BTreeMap<String, String>>;

#[derive(Serialize, Deserialize, Default)]
struct CacheFile {
    format_version: u32,
    degrees: BTreeMap<String, DegreeEntry>,
}

#[derive(Serialize, Deserialize, Clone)]
struct DegreeEntry {
    checksum: String,
    macdonald_p: Expansions,
}

fn checksum(e: &Expansions) -> String {
    let body = serde_json::to_string(e).expect("serializable");
    hex::encode(Sha256::digest(body.as_bytes()))
}

pub fn cache_path(dir: &Path) -> PathBuf {
    dir.join(FILE_NAME)
}

fn read(dir: &Path) -> Result<CacheFile, SymError> {
    let path = cache_path(dir);
    if !path.exists() {
        return Ok(CacheFile { format_version: FORMAT_VERSION, degrees: BTreeMap::new() });
    }
    let text = fs::read_to_string(&path).map_err(|e| SymError::Io(e.to_string()))?;
    let file: CacheFile =
        serde_json::from_str(&text).map_err(|e| SymError::CacheCorrupt(format!("{}: {}", path.display(), e)))?;
    if file.format_version != FORMAT_VERSION {
        return Err(SymError::CacheCorrupt(format!("unsupported format version {}", file.format_version)));
    }
    Ok(file)
}

fn write(dir: &Path, file: &CacheFile) -> Result<(), SymError> {
    fs::create_dir_all(dir).map_err(|e| SymError::Io(e.to_string()))?;
    let tmp = dir.join(format!("{}.tmp{}", FILE_NAME, std::process::id()));
    let text = serde_json::to_string_pretty(file).expect("serializable");
    fs::write(&tmp, text).map_err(|e| SymError::Io(e.to_string()))?;
    fs::rename(&tmp, cache_path(dir)).map_err(|e| SymError::Io(e.to_string()))
}

/// Monomial expansions of `P_λ` for one degree, if cached; errors on checksum mismatch.
pub fn load_degree(dir: &Path, ct: &ClassicalTable) -> Result<Option<Vec<Vec<QTRational>>>, SymError> {
    let file = read(dir)?;
    let Some(entry) = file.degrees.get(&ct.degree.to_string()) else { return Ok(None) };
    if checksum(&entry.macdonald_p) != entry.checksum {
        return Err(SymError::CacheCorrupt(format!("checksum mismatch for degree {}", ct.degree)));
    }
    let dim = ct.dim();
    let mut rows = vec![vec![QTRational::zero(); dim]; dim];
    for (i, l) in ct.parts.iter().enumerate() {
        let exp = entry
            .macdonald_p
            .get(&l.to_string())
            .ok_or_else(|| SymError::CacheCorrupt(format!("missing P_{} in degree {}", l, ct.degree)))?;
        for (key, val) in exp {
            let mu = key.parse().map_err(|_| SymError::CacheCorrupt(format!("bad partition {}", key)))?;
            let j = *ct.index.get(&mu).ok_or_else(|| SymError::CacheCorrupt(format!("bad partition {}", key)))?;
            rows[i][j] = val.parse().map_err(|_| SymError::CacheCorrupt(format!("bad coefficient {}", val)))?;
        }
    }
    Ok(Some(rows))
}

pub fn store_degree(dir: &Path, ct: &ClassicalTable, mt: &MacTable) -> Result<(), SymError> {
    let mut file = read(dir)?;
    let mut exps = Expansions::new();
    for (i, l) in ct.parts.iter().enumerate() {
        let row: BTreeMap<String, String> = ct
            .parts
            .iter()
            .enumerate()
            .filter(|(j, _)| !mt.p_in_m[i][*j].is_zero())
            .map(|(j, mu)| (mu.to_string(), mt.p_in_m[i][j].to_string()))
            .collect();
        exps.insert(l.to_string(), row);
    }
    let entry = DegreeEntry { checksum: checksum(&exps), macdonald_p: exps };
    file.degrees.insert(ct.degree.to_string(), entry);
    write(dir, &file)
}

/// Per-degree checksum status of the cache file.
pub fn verify(dir: &Path) -> Result<Vec<(usize, bool)>, SymError> {
    let file = read(dir)?;
    let mut out: Vec<(usize, bool)> = file
        .degrees
        .iter()
        .map(|(d, e)| (d.parse().unwrap_or(usize::MAX), checksum(&e.macdonald_p) == e.checksum))
        .collect();
    out.sort();
    Ok(out)
}

pub fn clear(dir: &Path) -> Result<(), SymError> {
    let path = cache_path(dir);
    if path.exists() {
        fs::remove_file(path).map_err(|e| SymError::Io(e.to_string()))?;
    }
    Ok(())
}
