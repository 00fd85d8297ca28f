//! One JSON file per prime, `table_p{P}.json`, in the cache directory.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use log::{info, warn};
use vq_chartab::character::character_table;
use vq_chartab::export::{TableDocument, FORMAT_VERSION};
use vq_chartab::Error;

use crate::output::write_atomic;

pub fn cache_path(dir: &Path, prime: u32) -> PathBuf {
    dir.join(format!("table_p{prime}.json"))
}

/// Reads a cached table; stale formats and unreadable files count as misses.
pub fn load(dir: &Path, prime: u32) -> Option<TableDocument> {
    let path = cache_path(dir, prime);
    let text = fs::read_to_string(&path).ok()?;
    match serde_json::from_str::<TableDocument>(&text) {
        Ok(doc) if doc.format == FORMAT_VERSION && doc.prime == prime && doc.is_consistent() => {
            Some(doc)
        }
        Ok(doc) => {
            warn!(
                "ignoring cache entry {} (format {}, prime {})",
                path.display(),
                doc.format,
                doc.prime
            );
            None
        }
        Err(e) => {
            warn!("ignoring unreadable cache entry {}: {e}", path.display());
            None
        }
    }
}

pub fn store(dir: &Path, doc: &TableDocument) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let json = serde_json::to_string(doc).map_err(io::Error::other)?;
    write_atomic(&cache_path(dir, doc.prime), json.as_bytes())
}

/// The table document for `prime`, from the cache when possible.
pub fn table_document(prime: u32, cache_dir: Option<&Path>) -> Result<TableDocument, Error> {
    if let Some(dir) = cache_dir {
        if let Some(doc) = load(dir, prime) {
            info!("cache hit: {}", cache_path(dir, prime).display());
            return Ok(doc);
        }
        info!("cache miss: {}", cache_path(dir, prime).display());
    }
    let doc = TableDocument::from(&character_table(prime)?);
    if let Some(dir) = cache_dir {
        if let Err(e) = store(dir, &doc) {
            warn!("could not write cache entry in {}: {e}", dir.display());
        }
    }
    Ok(doc)
}
