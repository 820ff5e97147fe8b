//! On-disk cache of dominant multiplicities.
//!
//! File layout (little endian):
//!
//! ```text
//! magic   8 bytes  "LIECHAR\0"
//! version u32
//! count   u32
//! entry*  { label_len u16, label utf8, rank u32, lambda i64*rank,
//!           terms u32, { mu i64*rank, mult_len u32, mult two's-complement bytes }* }
//! ```
//!
//! A file with a different magic or version is ignored. The cache only ever
//! saves recomputation; a missing or unreadable file is not an error for
//! callers that treat it as a hint.

use std::fs::File;
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::Path;
use std::sync::Arc;

use byteorder::{LittleEndian as LE, ReadBytesExt, WriteBytesExt};
use num_bigint::BigInt;

use super::freudenthal::MEMO;
use crate::rootsystem::Weight;
use crate::{Error, Result};

pub const CACHE_MAGIC: &[u8; 8] = b"LIECHAR\0";
pub const CACHE_VERSION: u32 = 1;

fn io_err(e: std::io::Error) -> Error {
    Error::Cache(e.to_string())
}

/// Loads cached tables into memory. Returns the number of entries read;
/// files with a foreign header yield 0.
pub fn load_cache(path: &Path) -> Result<usize> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(io_err(e)),
    };
    let mut r = BufReader::new(file);
    let mut magic = [0u8; 8];
    if r.read_exact(&mut magic).is_err() || &magic != CACHE_MAGIC {
        return Ok(0);
    }
    if r.read_u32::<LE>().map_err(io_err)? != CACHE_VERSION {
        return Ok(0);
    }
    let count = r.read_u32::<LE>().map_err(io_err)?;
    let mut entries = Vec::with_capacity(count as usize);
    for _ in 0..count {
        let len = r.read_u16::<LE>().map_err(io_err)? as usize;
        let mut label = vec![0u8; len];
        r.read_exact(&mut label).map_err(io_err)?;
        let label = String::from_utf8(label).map_err(|e| Error::Cache(e.to_string()))?;
        let rank = r.read_u32::<LE>().map_err(io_err)? as usize;
        let read_vec = |r: &mut BufReader<File>| -> Result<Vec<i64>> {
            (0..rank).map(|_| r.read_i64::<LE>().map_err(io_err)).collect()
        };
        let lambda = read_vec(&mut r)?;
        let terms = r.read_u32::<LE>().map_err(io_err)?;
        let mut table = Vec::with_capacity(terms as usize);
        for _ in 0..terms {
            let mu = read_vec(&mut r)?;
            let blen = r.read_u32::<LE>().map_err(io_err)? as usize;
            let mut bytes = vec![0u8; blen];
            r.read_exact(&mut bytes).map_err(io_err)?;
            table.push((Weight(mu), BigInt::from_signed_bytes_le(&bytes)));
        }
        entries.push(((label, lambda), Arc::new(table)));
    }
    let n = entries.len();
    let mut memo = MEMO.write();
    for (k, v) in entries {
        memo.entry(k).or_insert(v);
    }
    Ok(n)
}

/// Writes every table currently in memory to `path`, sorted by key.
pub fn save_cache(path: &Path) -> Result<usize> {
    let memo = MEMO.read();
    let mut keys: Vec<_> = memo.keys().collect();
    keys.sort();
    let tmp = path.with_extension("tmp");
    {
        let mut w = BufWriter::new(File::create(&tmp).map_err(io_err)?);
        w.write_all(CACHE_MAGIC).map_err(io_err)?;
        w.write_u32::<LE>(CACHE_VERSION).map_err(io_err)?;
        w.write_u32::<LE>(keys.len() as u32).map_err(io_err)?;
        for key in &keys {
            let (label, lambda) = key;
            let table = &memo[*key];
            w.write_u16::<LE>(label.len() as u16).map_err(io_err)?;
            w.write_all(label.as_bytes()).map_err(io_err)?;
            w.write_u32::<LE>(lambda.len() as u32).map_err(io_err)?;
            for x in lambda {
                w.write_i64::<LE>(*x).map_err(io_err)?;
            }
            w.write_u32::<LE>(table.len() as u32).map_err(io_err)?;
            for (mu, m) in table.iter() {
                for x in &mu.0 {
                    w.write_i64::<LE>(*x).map_err(io_err)?;
                }
                let bytes = m.to_signed_bytes_le();
                w.write_u32::<LE>(bytes.len() as u32).map_err(io_err)?;
                w.write_all(&bytes).map_err(io_err)?;
            }
        }
        w.flush().map_err(io_err)?;
    }
    std::fs::rename(&tmp, path).map_err(io_err)?;
    Ok(keys.len())
}
