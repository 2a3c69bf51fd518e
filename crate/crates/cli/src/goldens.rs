//! Committed classification records for the whole catalog.

use minw_core::levels::ClassificationRecord;
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

pub const CATALOG_FILE: &str = "catalog.json";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GoldenHeader {
    pub generated_by: String,
    pub tool_version: String,
    pub entries: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GoldenFile {
    pub header: GoldenHeader,
    pub records: Vec<ClassificationRecord>,
}

fn path(dir: &Path) -> PathBuf {
    dir.join(CATALOG_FILE)
}

pub fn load(dir: &Path) -> Result<GoldenFile, String> {
    let p = path(dir);
    let text = std::fs::read_to_string(&p).map_err(|e| {
        format!(
            "cannot read golden file {}: {e} (rerun with --regenerate-goldens)",
            p.display()
        )
    })?;
    serde_json::from_str(&text).map_err(|e| format!("malformed golden file {}: {e}", p.display()))
}

pub fn write(dir: &Path, suite: &str, records: &[ClassificationRecord]) -> Result<(), String> {
    let file = GoldenFile {
        header: GoldenHeader {
            generated_by: format!("minw verify {suite} --regenerate-goldens"),
            tool_version: env!("CARGO_PKG_VERSION").into(),
            entries: records.len(),
        },
        records: records.to_vec(),
    };
    let p = path(dir);
    std::fs::create_dir_all(dir).map_err(|e| format!("cannot create {}: {e}", dir.display()))?;
    let mut text = serde_json::to_string_pretty(&file).expect("golden serializes");
    text.push('\n');
    std::fs::write(&p, text).map_err(|e| format!("cannot write {}: {e}", p.display()))
}
