use std::path::Path;
use std::sync::OnceLock;

use super::SrgParams;
use crate::{Error, Result};

const BUILTIN: &str = include_str!("../../data/nonexistence.txt");

/// File name looked up inside a data directory.
pub const TABLE_FILE: &str = "nonexistence.txt";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub params: SrgParams,
    pub citation: String,
}

/// Parameter sets known not to be realized although they pass the arithmetic
/// screens.
#[derive(Debug, Clone, Default)]
pub struct NonexistenceTable {
    entries: Vec<TableEntry>,
}

impl NonexistenceTable {
    /// Parses `n k lambda mu | citation` records; blank lines and `#` comments
    /// are skipped.
    pub fn parse(text: &str, source_name: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |reason: String| Error::Parse {
                source_name: source_name.to_string(),
                line: idx + 1,
                reason,
            };
            let (nums, citation) = line
                .split_once('|')
                .ok_or_else(|| err("missing '|' before the citation".into()))?;
            let values: Vec<u64> = nums
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| err(format!("`{t}` is not an integer"))))
                .collect::<Result<_>>()?;
            let [n, k, lambda, mu] = values[..] else {
                return Err(err(format!("expected 4 parameters, found {}", values.len())));
            };
            let params = SrgParams::new(n, k, lambda, mu).map_err(|e| err(e.to_string()))?;
            entries.push(TableEntry {
                params,
                citation: citation.trim().to_string(),
            });
        }
        Ok(NonexistenceTable { entries })
    }

    /// The table shipped with the crate.
    pub fn builtin() -> &'static NonexistenceTable {
        static TABLE: OnceLock<NonexistenceTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            NonexistenceTable::parse(BUILTIN, "builtin nonexistence table")
                .expect("bundled table parses")
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, &path.display().to_string())
    }

    /// `dir/nonexistence.txt` if present, otherwise the builtin table.
    pub fn from_data_dir(dir: Option<&Path>) -> Result<Self> {
        match dir.map(|d| d.join(TABLE_FILE)) {
            Some(path) if path.exists() => Self::load(&path),
            _ => Ok(Self::builtin().clone()),
        }
    }

    /// Finds an entry for `p` or for its complement.
    pub fn lookup(&self, p: &SrgParams) -> Option<&TableEntry> {
        let comp = p.complement().ok();
        self.entries
            .iter()
            .find(|e| e.params == *p || Some(e.params) == comp)
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }
}
