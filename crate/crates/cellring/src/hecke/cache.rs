//! On-disk memo of KL polynomials as JSON lines.
//!
//! The first line is the header `{"format":1,"type":"B3~"}`; every further line is a
//! record `{"y":word,"w":word,"P":[q-coefficients]}`.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use super::kl::{KlTable, QPoly};
use crate::error::Error;
use crate::weyl::WeylElement;

pub const CACHE_FORMAT: u32 = 1;
pub const CACHE_TYPE: &str = "B3~";

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct Header {
    format: u32,
    #[serde(rename = "type")]
    kind: String,
}

#[derive(Serialize, Deserialize)]
struct Record {
    y: String,
    w: String,
    #[serde(rename = "P")]
    p: QPoly,
}

fn cache_err(path: &Path, what: impl std::fmt::Display) -> Error {
    Error::Cache(format!("{}: {what}", path.display()))
}

impl KlTable {
    /// A table whose `kl_poly` answers are memoized and seeded from `path` if it exists.
    pub fn with_cache(path: &Path) -> Result<KlTable, Error> {
        let mut memo = HashMap::new();
        if path.exists() {
            let file = File::open(path).map_err(|e| cache_err(path, e))?;
            let mut lines = BufReader::new(file).lines();
            let head = lines.next().ok_or_else(|| cache_err(path, "empty file"))?.map_err(|e| cache_err(path, e))?;
            let header: Header = serde_json::from_str(&head).map_err(|e| cache_err(path, e))?;
            if header != (Header { format: CACHE_FORMAT, kind: CACHE_TYPE.to_string() }) {
                return Err(cache_err(path, format!("unsupported header {head}")));
            }
            for (n, line) in lines.enumerate() {
                let line = line.map_err(|e| cache_err(path, e))?;
                if line.trim().is_empty() {
                    continue;
                }
                let r: Record = serde_json::from_str(&line).map_err(|e| cache_err(path, format!("line {}: {e}", n + 2)))?;
                let y = WeylElement::from_word(&r.y)?;
                let w = WeylElement::from_word(&r.w)?;
                memo.insert((y, w), r.p);
            }
        }
        let mut t = KlTable::new();
        t.memo = Some(RwLock::new(memo));
        Ok(t)
    }

    /// Number of memoized polynomials; zero for a table without a cache.
    pub fn cached_len(&self) -> usize {
        self.memo.as_ref().map_or(0, |m| m.read().len())
    }

    /// Writes every memoized polynomial to `path`, sorted by `(w, y)`.
    pub fn save_cache(&self, path: &Path) -> Result<usize, Error> {
        let Some(memo) = &self.memo else { return Ok(0) };
        let memo = memo.read();
        let mut keys: Vec<_> = memo.keys().copied().collect();
        keys.sort_by_key(|a| (a.1, a.0));
        let tmp = path.with_extension("tmp");
        {
            let file = File::create(&tmp).map_err(|e| cache_err(&tmp, e))?;
            let mut out = BufWriter::new(file);
            let header = Header { format: CACHE_FORMAT, kind: CACHE_TYPE.to_string() };
            let io = |e| cache_err(&tmp, e);
            writeln!(out, "{}", serde_json::to_string(&header).expect("header")).map_err(io)?;
            for (y, w) in &keys {
                let r = Record { y: y.to_string(), w: w.to_string(), p: memo[&(*y, *w)].clone() };
                writeln!(out, "{}", serde_json::to_string(&r).expect("record")).map_err(|e| cache_err(&tmp, e))?;
            }
            out.flush().map_err(|e| cache_err(&tmp, e))?;
        }
        std::fs::rename(&tmp, path).map_err(|e| cache_err(path, e))?;
        Ok(keys.len())
    }
}
