//! On-disk coset tables.
//!
//! Format: four text lines
//! ```text
//! threemove-coset-table 1
//! generators <g>
//! degree <n>
//! subgroup <word>;<word>;...
//! ```
//! followed by the row-major table as little-endian `u32`, `2g` entries
//! per coset (generator, inverse, next generator, ...).

use super::{CosetTable, GroupError, Word};
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "THREEMOVE_CACHE";

const MAGIC: &str = "threemove-coset-table 1";

/// Directory from `THREEMOVE_CACHE`, if set.
pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV).map(PathBuf::from)
}

fn err(e: impl std::fmt::Display) -> GroupError {
    GroupError::Cache(e.to_string())
}

pub fn save_table(t: &CosetTable, path: &Path) -> Result<(), GroupError> {
    if let Some(dir) = path.parent() {
        std::fs::create_dir_all(dir).map_err(err)?;
    }
    let tmp = path.with_extension("partial");
    let mut f = std::io::BufWriter::new(std::fs::File::create(&tmp).map_err(err)?);
    let sub: Vec<String> = t
        .subgroup
        .iter()
        .map(|w| w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    write!(
        f,
        "{MAGIC}\ngenerators {}\ndegree {}\nsubgroup {}\n",
        t.generators,
        t.index(),
        sub.join(";")
    )
    .map_err(err)?;
    for &x in &t.rows {
        f.write_all(&x.to_le_bytes()).map_err(err)?;
    }
    f.into_inner().map_err(err)?.sync_all().map_err(err)?;
    std::fs::rename(&tmp, path).map_err(err)
}

pub fn load_table(path: &Path) -> Result<CosetTable, GroupError> {
    let mut r = BufReader::new(std::fs::File::open(path).map_err(err)?);
    let mut line = String::new();
    let mut header = Vec::new();
    for _ in 0..4 {
        line.clear();
        r.read_line(&mut line).map_err(err)?;
        header.push(line.trim_end_matches('\n').to_string());
    }
    if header[0] != MAGIC {
        return Err(err("not a coset table"));
    }
    let field = |i: usize, key: &str| -> Result<String, GroupError> {
        header[i]
            .strip_prefix(key)
            .map(|s| s.trim().to_string())
            .ok_or_else(|| err(format!("missing `{key}`")))
    };
    let generators: usize = field(1, "generators")?.parse().map_err(err)?;
    let degree: usize = field(2, "degree")?.parse().map_err(err)?;
    let sub = field(3, "subgroup")?;
    let subgroup: Vec<Word> = if sub.is_empty() {
        Vec::new()
    } else {
        sub.split(';')
            .map(|w| w.split_whitespace().map(|l| l.parse().map_err(err)).collect())
            .collect::<Result<_, _>>()?
    };
    let mut bytes = Vec::new();
    r.read_to_end(&mut bytes).map_err(err)?;
    if bytes.len() != degree * 2 * generators * 4 {
        return Err(err("table size does not match header"));
    }
    let rows: Vec<u32> = bytes
        .chunks_exact(4)
        .map(|b| u32::from_le_bytes([b[0], b[1], b[2], b[3]]))
        .collect();
    if rows.iter().any(|&x| x as usize >= degree) {
        return Err(err("entry out of range"));
    }
    Ok(CosetTable {
        generators,
        rows,
        subgroup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{braid_quotient_presentation, coset_enumeration, EnumerationLimits};

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = braid_quotient_presentation(3);
        for sub in [vec![], vec![vec![1], vec![-2, 1]]] {
            let t = coset_enumeration(&p, &sub, &EnumerationLimits::default()).unwrap();
            let path = dir.path().join("c3.table");
            save_table(&t, &path).unwrap();
            assert_eq!(load_table(&path).unwrap(), t);
        }
        std::fs::write(dir.path().join("bad"), "nope\n").unwrap();
        assert!(load_table(&dir.path().join("bad")).is_err());
    }
}
