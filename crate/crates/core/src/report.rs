//! Result records, table formatting, and the on-disk result cache.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::conventions::Conventions;
use crate::counting::BoundReport;
use crate::error::Result;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "NETBOUNDS_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = ".netbounds-cache";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ResultRecord {
    pub d: usize,
    pub k: usize,
    pub bound: u64,
    pub sum_v: u64,
    pub diagram_count: u64,
    pub elapsed_milliseconds: u64,
    pub tool_version: String,
    pub convention_fingerprint: String,
}

impl ResultRecord {
    pub fn from_report(report: &BoundReport, conventions: &Conventions) -> Self {
        ResultRecord {
            d: report.d,
            k: report.k,
            bound: report.bound,
            sum_v: report.sum_v,
            diagram_count: report.diagram_count,
            elapsed_milliseconds: report.elapsed.as_millis() as u64,
            tool_version: report.tool_version.to_string(),
            convention_fingerprint: conventions.fingerprint(),
        }
    }

    /// `bound · (2d - 2) = sumV`.
    pub fn is_consistent(&self) -> bool {
        self.d >= 2 && self.bound.checked_mul(2 * self.d as u64 - 2) == Some(self.sum_v)
    }
}

/// Directory-backed cache keyed by `(d, k, fingerprint, version)`. Reads are
/// advisory: anything unreadable or inconsistent is treated as a miss.
#[derive(Debug, Clone)]
pub struct ResultCache {
    dir: PathBuf,
    fingerprint: String,
}

impl ResultCache {
    pub fn new(dir: impl Into<PathBuf>, conventions: &Conventions) -> Self {
        ResultCache {
            dir: dir.into(),
            fingerprint: conventions.fingerprint(),
        }
    }

    /// Cache at `$NETBOUNDS_CACHE_DIR`, or `.netbounds-cache`.
    pub fn from_env(conventions: &Conventions) -> Self {
        let dir = std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| DEFAULT_CACHE_DIR.into());
        Self::new(dir, conventions)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, d: usize, k: usize) -> PathBuf {
        self.dir.join(format!(
            "d{d}-k{k}-{}-v{}.json",
            self.fingerprint,
            env!("CARGO_PKG_VERSION")
        ))
    }

    pub fn get(&self, d: usize, k: usize) -> Option<ResultRecord> {
        let text = fs::read_to_string(self.path(d, k)).ok()?;
        let record: ResultRecord = serde_json::from_str(&text).ok()?;
        let matches = record.d == d
            && record.k == k
            && record.convention_fingerprint == self.fingerprint
            && record.tool_version == env!("CARGO_PKG_VERSION");
        (matches && record.is_consistent()).then_some(record)
    }

    /// Write via a temporary file in the same directory, then rename.
    pub fn put(&self, record: &ResultRecord) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(record.d, record.k);
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            let json = serde_json::to_string_pretty(record).expect("record serializes");
            f.write_all(json.as_bytes())?;
            f.write_all(b"\n")?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }
}

/// One table cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct TableEntry {
    pub d: usize,
    pub k: usize,
    pub bound: u64,
    pub sum_v: u64,
    pub diagram_count: u64,
}

impl From<&ResultRecord> for TableEntry {
    fn from(r: &ResultRecord) -> Self {
        TableEntry {
            d: r.d,
            k: r.k,
            bound: r.bound,
            sum_v: r.sum_v,
            diagram_count: r.diagram_count,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
    Json,
}

/// Render entries (any order) deterministically.
pub fn format_table(entries: &[TableEntry], format: TableFormat) -> String {
    let mut entries = entries.to_vec();
    entries.sort_by_key(|e| (e.d, e.k));
    match format {
        TableFormat::Csv => {
            let mut out = String::from("d,k,bound\n");
            for e in &entries {
                out.push_str(&format!("{},{},{}\n", e.d, e.k, e.bound));
            }
            out
        }
        TableFormat::Json => {
            serde_json::to_string_pretty(&entries).expect("entries serialize") + "\n"
        }
        TableFormat::Markdown => {
            let mut ds: Vec<usize> = entries.iter().map(|e| e.d).collect();
            ds.dedup();
            let kmax = entries.iter().map(|e| e.k).max().unwrap_or(0);
            let mut out = String::from("| k \\ d |");
            for d in &ds {
                out.push_str(&format!(" {d} |"));
            }
            out.push_str("\n|---|");
            out.push_str(&"---:|".repeat(ds.len()));
            out.push('\n');
            for k in 1..=kmax {
                out.push_str(&format!("| {k} |"));
                for &d in &ds {
                    match entries.iter().find(|e| e.d == d && e.k == k) {
                        Some(e) => out.push_str(&format!(" {} |", e.bound)),
                        None => out.push_str("  |"),
                    }
                }
                out.push('\n');
            }
            out
        }
    }
}
