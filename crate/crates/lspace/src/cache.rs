//! A versioned on-disk cache of correction-term tables.
//!
//! The file is CSV with a version header comment on the first line, then a
//! column header, then one row `p,q,i,num,den` per spin-c label, with the
//! value stored as an exact reduced fraction `num/den`. Loading a file
//! whose version line does not match is an error rather than a silent
//! reinterpretation.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::{Error, LensSpace, Result};

/// First line of every cache file; bump when the row format changes.
pub const CACHE_VERSION_LINE: &str = "# d-cache v1";

/// In-memory mirror of a cache file: full tables keyed by `(p, q)`.
#[derive(Debug, Default, Clone)]
pub struct DCache {
    tables: BTreeMap<(u32, u32), Vec<BigRational>>,
}

impl DCache {
    /// An empty cache.
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of complete tables held.
    pub fn len(&self) -> usize {
        self.tables.len()
    }

    /// True when no tables are held.
    pub fn is_empty(&self) -> bool {
        self.tables.is_empty()
    }

    /// Looks up the table for one lens space.
    pub fn get(&self, space: LensSpace) -> Option<&[BigRational]> {
        self.tables.get(&(space.p(), space.q())).map(|v| v.as_slice())
    }

    /// Inserts a full table (one value per label `0..p`).
    pub fn insert(&mut self, space: LensSpace, values: Vec<BigRational>) -> Result<()> {
        if values.len() != space.p() as usize {
            return Err(Error::Invariant(format!(
                "table for {space} has {} entries, expected {}",
                values.len(),
                space.p()
            )));
        }
        self.tables.insert((space.p(), space.q()), values);
        Ok(())
    }

    /// Returns the cached table, computing and inserting it on a miss.
    pub fn get_or_compute(&mut self, space: LensSpace) -> Result<&[BigRational]> {
        if !self.tables.contains_key(&(space.p(), space.q())) {
            let table = crate::dinv::d_table(space);
            self.insert(space, table.values)?;
        }
        Ok(self.tables[&(space.p(), space.q())].as_slice())
    }

    /// Loads a cache file; a missing file yields an empty cache.
    pub fn load(path: &Path) -> Result<Self> {
        if !path.exists() {
            return Ok(Self::new());
        }
        let text = std::fs::read_to_string(path)?;
        let mut lines = text.lines();
        match lines.next() {
            Some(first) if first.trim() == CACHE_VERSION_LINE => {}
            Some(first) => {
                return Err(Error::Parse(format!(
                    "cache version mismatch: expected {CACHE_VERSION_LINE:?}, found {:?}",
                    first.trim()
                )))
            }
            None => return Ok(Self::new()),
        }
        let rest: String = lines.collect::<Vec<_>>().join("\n");
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(rest.as_bytes());
        let mut cache = Self::new();
        for record in reader.records() {
            let record = record.map_err(|e| Error::Parse(format!("cache row: {e}")))?;
            if record.len() != 5 {
                return Err(Error::Parse(format!(
                    "cache row has {} fields, expected 5",
                    record.len()
                )));
            }
            let p: u32 = parse_field(&record[0], "p")?;
            let q: u32 = parse_field(&record[1], "q")?;
            let i: u32 = parse_field(&record[2], "i")?;
            let num = BigInt::from_str(record[3].trim())
                .map_err(|e| Error::Parse(format!("cache num: {e}")))?;
            let den = BigInt::from_str(record[4].trim())
                .map_err(|e| Error::Parse(format!("cache den: {e}")))?;
            if den <= BigInt::from(0) {
                return Err(Error::Parse("cache den must be positive".into()));
            }
            let space = LensSpace::new(p, q)?;
            if i >= p {
                return Err(Error::Parse(format!("cache label {i} out of range for p={p}")));
            }
            let entry = cache
                .tables
                .entry((p, q))
                .or_insert_with(|| vec![BigRational::from(BigInt::from(0)); p as usize]);
            entry[i as usize] = BigRational::new(num, den);
            let _ = space;
        }
        Ok(cache)
    }

    /// Writes the cache atomically (temp file + rename) in sorted order.
    pub fn store(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut out = std::fs::File::create(&tmp)?;
            writeln!(out, "{CACHE_VERSION_LINE}")?;
            let mut writer = csv::Writer::from_writer(&mut out);
            writer
                .write_record(["p", "q", "i", "num", "den"])
                .map_err(|e| Error::Parse(format!("cache write: {e}")))?;
            for (&(p, q), values) in &self.tables {
                for (i, v) in values.iter().enumerate() {
                    writer
                        .write_record([
                            p.to_string(),
                            q.to_string(),
                            i.to_string(),
                            v.numer().to_string(),
                            v.denom().to_string(),
                        ])
                        .map_err(|e| Error::Parse(format!("cache write: {e}")))?;
                }
            }
            writer
                .flush()
                .map_err(|e| Error::Parse(format!("cache write: {e}")))?;
        }
        std::fs::rename(&tmp, path)?;
        Ok(())
    }
}

fn parse_field(s: &str, what: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|e| Error::Parse(format!("cache {what}: {e}")))
}
