//! Memo of chromatic polynomials keyed by canonical form, optionally backed
//! by an append-only file.
//!
//! File format, one record per line:
//! `<canonical key as hex> <space-separated decimal coefficients, x^0 first>`.

use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex};

use dashmap::DashMap;
use num_bigint::BigInt;

use super::poly::StandardPolynomial;
use crate::canon::CanonKey;
use crate::error::{Error, Result};

/// Environment variable that overrides the cache path used by the CLI.
pub const CACHE_ENV: &str = "CHROMAKIT_CACHE";

#[derive(Default)]
pub struct PolyCache {
    map: DashMap<CanonKey, Arc<StandardPolynomial>>,
    sink: Option<Mutex<File>>,
    path: Option<PathBuf>,
    skipped_lines: usize,
}

impl PolyCache {
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads every well-formed record of `path`, then appends new entries to it.
    /// A torn final line from an interrupted run is skipped, not fatal.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let io = |e: std::io::Error| Error::Cache(format!("{}: {e}", path.display()));
        let map = DashMap::new();
        let mut skipped = 0;
        if path.exists() {
            let reader = BufReader::new(File::open(path).map_err(io)?);
            for line in reader.lines() {
                let line = line.map_err(io)?;
                match parse_record(&line) {
                    Some((k, p)) => {
                        map.insert(k, Arc::new(p));
                    }
                    None if line.trim().is_empty() => {}
                    None => skipped += 1,
                }
            }
        }
        let mut file = OpenOptions::new().create(true).append(true).open(path).map_err(io)?;
        let ends_clean = std::fs::read(path)
            .map(|b| b.last().is_none_or(|&c| c == b'\n'))
            .map_err(io)?;
        if !ends_clean {
            // Terminate a torn record so the next append starts a fresh line.
            file.write_all(b"\n").map_err(io)?;
        }
        Ok(Self {
            map,
            sink: Some(Mutex::new(file)),
            path: Some(path.to_path_buf()),
            skipped_lines: skipped,
        })
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn skipped_lines(&self) -> usize {
        self.skipped_lines
    }

    pub fn get(&self, key: &CanonKey) -> Option<Arc<StandardPolynomial>> {
        self.map.get(key).map(|e| Arc::clone(e.value()))
    }

    /// Inserts unless present. Concurrent duplicate inserts of one key carry
    /// the same polynomial, so whichever wins is correct.
    pub fn insert(&self, key: CanonKey, poly: Arc<StandardPolynomial>) {
        let record = self.sink.as_ref().map(|_| format_record(&key, &poly));
        match self.map.entry(key) {
            dashmap::mapref::entry::Entry::Occupied(e) => {
                debug_assert_eq!(**e.get(), *poly, "conflicting cache values");
            }
            dashmap::mapref::entry::Entry::Vacant(e) => {
                e.insert(poly);
                if let (Some(sink), Some(record)) = (&self.sink, record) {
                    // One write call per record; a failed append only loses a memo entry.
                    if let Ok(mut f) = sink.lock() {
                        let _ = f.write_all(record.as_bytes());
                    }
                }
            }
        }
    }

    pub fn flush(&self) -> Result<()> {
        if let Some(sink) = &self.sink {
            let mut f = sink.lock().map_err(|e| Error::Cache(e.to_string()))?;
            f.flush().map_err(|e| Error::Cache(e.to_string()))?;
        }
        Ok(())
    }
}

fn format_record(key: &CanonKey, poly: &StandardPolynomial) -> String {
    let mut line = key.to_hex();
    for c in poly.coeffs() {
        line.push(' ');
        line.push_str(&c.to_string());
    }
    line.push('\n');
    line
}

fn parse_record(line: &str) -> Option<(CanonKey, StandardPolynomial)> {
    let mut it = line.split_ascii_whitespace();
    let key = CanonKey::from_hex(it.next()?)?;
    let coeffs = it.map(|t| t.parse::<BigInt>().ok()).collect::<Option<Vec<_>>>()?;
    if coeffs.is_empty() {
        return None;
    }
    // n in the key must match the degree, which rejects torn lines.
    let n = *key.as_bytes().first()? as usize;
    let poly = StandardPolynomial::new(coeffs);
    (poly.degree() == n || (n == 0 && poly.degree() == 0)).then_some((key, poly))
}
