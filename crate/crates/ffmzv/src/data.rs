//! Shipped data files.
//!
//! Curve specs and F-function transcriptions are compiled into the library.
//! Setting `FFMZV_DATA` to a directory makes every lookup read from that
//! directory instead, with the same relative layout as `data/` in the crate.

use crate::error::{Error, Result};
use std::path::PathBuf;

/// Environment variable overriding the data directory.
pub const DATA_ENV: &str = "FFMZV_DATA";

macro_rules! embedded {
    ($($path:literal),* $(,)?) => {
        &[$(($path, include_str!(concat!("../data/", $path)))),*]
    };
}

static EMBEDDED: &[(&str, &str)] = embedded![
    "curves/genus0-q2.json",
    "curves/genus0-q3.json",
    "curves/case-i.json",
    "curves/case-ii.json",
    "curves/case-iii.json",
    "curves/case-iv.json",
    "ffunctions/case-i/F_12.txt",
    "ffunctions/case-i/F_3.txt",
    "ffunctions/case-i/F_34.txt",
    "ffunctions/case-i/F_le12.txt",
    "ffunctions/case-i/F_le34.txt",
    "ffunctions/case-i/F_lt3.txt",
    "ffunctions/case-i/F_lt7.txt",
    "ffunctions/case-ii/F_26.txt",
    "ffunctions/case-ii/F_le26.txt",
    "ffunctions/case-ii/F_lt8.txt",
    "ffunctions/case-iii/F_le3_12.txt",
    "ffunctions/case-iii/F_lt15.txt",
    "ffunctions/case-iv/F_1.txt",
    "ffunctions/case-iv/F_12.txt",
    "ffunctions/case-iv/F_le12.txt",
    "ffunctions/case-iv/F_lt1.txt",
    "ffunctions/case-iv/F_lt3.txt",
];

/// The override directory, if configured.
pub fn data_dir() -> Option<PathBuf> {
    std::env::var_os(DATA_ENV).map(PathBuf::from)
}

/// Read a data file by relative path.
pub fn read_data_file(rel: &str) -> Result<String> {
    if let Some(dir) = data_dir() {
        let path = dir.join(rel);
        return std::fs::read_to_string(&path).map_err(|e| Error::Data(format!("{}: {e}", path.display())));
    }
    EMBEDDED
        .iter()
        .find(|(p, _)| *p == rel)
        .map(|(_, t)| t.to_string())
        .ok_or_else(|| Error::Data(format!("no shipped data file `{rel}`")))
}

/// Relative paths of all shipped files under a prefix.
pub fn shipped_files(prefix: &str) -> Vec<&'static str> {
    EMBEDDED.iter().map(|(p, _)| *p).filter(|p| p.starts_with(prefix)).collect()
}
