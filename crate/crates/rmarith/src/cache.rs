//! Persistent memo of class numbers.
//!
//! The file is line oriented and sorted by discriminant:
//!
//! ```text
//! rmarith-classnumbers v1
//! -23 3 3
//! 12 2 1
//! ```
//!
//! Each data line is `D narrow wide`. A file with any other header, or with a
//! line that does not parse, is ignored and rebuilt from scratch.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use rmarith_core::{class_number, Flavor};

pub const HEADER: &str = "rmarith-classnumbers v1";

/// Environment variable naming the cache file.
pub const ENV_VAR: &str = "RMARITH_CACHE";

#[derive(Debug, Default)]
pub struct ClassNumberCache {
    path: Option<PathBuf>,
    entries: BTreeMap<BigInt, (u64, u64)>,
    dirty: bool,
}

impl ClassNumberCache {
    /// A cache that never touches the disk.
    pub fn in_memory() -> Self {
        Self::default()
    }

    /// Loads `path`; a missing, stale or malformed file yields an empty cache bound to `path`.
    pub fn open(path: impl Into<PathBuf>) -> Self {
        let path = path.into();
        let entries = fs::read_to_string(&path)
            .ok()
            .and_then(|text| parse(&text))
            .unwrap_or_default();
        Self {
            path: Some(path),
            entries,
            dirty: false,
        }
    }

    /// `explicit`, else `$RMARITH_CACHE`, else `$XDG_CACHE_HOME/rmarith/classnumbers.txt`
    /// or `$HOME/.cache/rmarith/classnumbers.txt`.
    pub fn default_path(explicit: Option<&Path>) -> Option<PathBuf> {
        if let Some(p) = explicit {
            return Some(p.to_path_buf());
        }
        if let Some(p) = std::env::var_os(ENV_VAR).filter(|p| !p.is_empty()) {
            return Some(PathBuf::from(p));
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .filter(|p| !p.is_empty())
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))?;
        Some(base.join("rmarith").join("classnumbers.txt"))
    }

    pub fn path(&self) -> Option<&Path> {
        self.path.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, d: &BigInt) -> Option<(u64, u64)> {
        self.entries.get(d).copied()
    }

    /// Records a computed pair. Existing entries are never overwritten.
    pub fn insert(&mut self, d: BigInt, narrow: u64, wide: u64) {
        if let std::collections::btree_map::Entry::Vacant(v) = self.entries.entry(d) {
            v.insert((narrow, wide));
            self.dirty = true;
        }
    }

    /// `(narrow, wide)` class numbers of discriminant `d`, computed on a miss.
    pub fn class_numbers(&mut self, d: &BigInt) -> rmarith_core::Result<(u64, u64)> {
        if let Some(hit) = self.get(d) {
            return Ok(hit);
        }
        let pair = compute(d)?;
        self.insert(d.clone(), pair.0, pair.1);
        Ok(pair)
    }

    pub fn class_number(&mut self, d: &BigInt, flavor: Flavor) -> rmarith_core::Result<u64> {
        let (narrow, wide) = self.class_numbers(d)?;
        Ok(match flavor {
            Flavor::Narrow => narrow,
            Flavor::Wide => wide,
        })
    }

    /// Writes the cache if it changed, via a temporary file renamed into place.
    pub fn flush(&mut self) -> io::Result<()> {
        let Some(path) = self.path.as_ref().filter(|_| self.dirty) else {
            return Ok(());
        };
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let mut tmp = path.clone().into_os_string();
        tmp.push(format!(".tmp{}", std::process::id()));
        let tmp = PathBuf::from(tmp);
        {
            let mut out = io::BufWriter::new(fs::File::create(&tmp)?);
            out.write_all(render(&self.entries).as_bytes())?;
            out.into_inner().map_err(|e| e.into_error())?.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        self.dirty = false;
        Ok(())
    }
}

pub fn compute(d: &BigInt) -> rmarith_core::Result<(u64, u64)> {
    Ok((class_number(d, Flavor::Narrow)?, class_number(d, Flavor::Wide)?))
}

fn parse(text: &str) -> Option<BTreeMap<BigInt, (u64, u64)>> {
    let mut lines = text.lines();
    if lines.next()? != HEADER {
        return None;
    }
    let mut out = BTreeMap::new();
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let mut it = line.split_whitespace();
        let d = it.next()?.parse().ok()?;
        let narrow = it.next()?.parse().ok()?;
        let wide = it.next()?.parse().ok()?;
        if it.next().is_some() {
            return None;
        }
        out.insert(d, (narrow, wide));
    }
    Some(out)
}

fn render(entries: &BTreeMap<BigInt, (u64, u64)>) -> String {
    let mut s = String::with_capacity(16 * entries.len() + HEADER.len() + 1);
    s.push_str(HEADER);
    s.push('\n');
    for (d, (n, w)) in entries {
        s.push_str(&format!("{d} {n} {w}\n"));
    }
    s
}
