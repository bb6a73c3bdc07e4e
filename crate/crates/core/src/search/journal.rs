//! Append-only JSONL checkpoint of processed isomorphism classes.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::prune::Rule;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionSummary {
    pub primes: Vec<u64>,
    pub degrees: Vec<isize>,
}

/// One processed class. An empty `verdict` means the graph survived
/// pruning and `torsion` was computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub g6: String,
    pub verdict: Vec<Rule>,
    pub torsion: TorsionSummary,
}

pub(crate) struct Journal {
    out: Option<BufWriter<File>>,
}

/// Records already in the file, keyed by canonical graph6, and one
/// warning per unreadable line.
pub(crate) type Loaded = (HashMap<String, ClassRecord>, Vec<String>);

impl Journal {
    pub(crate) fn disabled() -> Self {
        Journal { out: None }
    }

    pub(crate) fn open(path: &Path) -> Result<(Self, Loaded)> {
        let mut known = HashMap::new();
        let mut warnings = Vec::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            for (k, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<ClassRecord>(&line) {
                    Ok(r) => {
                        known.insert(r.g6.clone(), r);
                    }
                    Err(e) => warnings.push(format!("{}:{}: {e}", path.display(), k + 1)),
                }
            }
        }
        let torn = std::fs::read(path).map(|b| b.last().is_some_and(|&c| c != b'\n')).unwrap_or(false);
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(|e| Error::Journal(format!("cannot open {}: {e}", path.display())))?;
        if torn {
            file.write_all(b"\n")?;
        }
        Ok((Journal { out: Some(BufWriter::new(file)) }, (known, warnings)))
    }

    pub(crate) fn append(&mut self, records: &[ClassRecord]) -> Result<()> {
        let Some(out) = &mut self.out else {
            return Ok(());
        };
        for r in records {
            serde_json::to_writer(&mut *out, r).map_err(|e| Error::Journal(e.to_string()))?;
            out.write_all(b"\n")?;
        }
        out.flush()?;
        Ok(())
    }
}
