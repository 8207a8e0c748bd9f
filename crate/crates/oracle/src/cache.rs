//! On-disk JSON cache of character tables: `<root>/v<SCHEMA_VERSION>/<descriptor>.json`.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::dixon::{character_table, CharTable, ClassInfo};
use crate::group::FiniteGroup;
use crate::OracleError;

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable naming the default cache root.
pub const CACHE_ENV: &str = "TYPEA_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CachedTable {
    schema_version: u32,
    module_version: String,
    descriptor: String,
    group_name: String,
    table: CharTable,
}

/// A character-table cache; `None` computes every table afresh.
#[derive(Clone, Debug, Default)]
pub struct TableCache {
    root: Option<PathBuf>,
}

/// File-safe form of a group name: `SL_2(3)` becomes `sl_2-3`.
pub fn descriptor(name: &str) -> String {
    let mut out = String::new();
    for ch in name.chars() {
        match ch {
            c if c.is_ascii_alphanumeric() || c == '_' => out.push(c.to_ascii_lowercase()),
            _ if !out.ends_with('-') => out.push('-'),
            _ => {}
        }
    }
    out.trim_end_matches('-').to_string()
}

impl TableCache {
    pub fn disabled() -> Self {
        TableCache { root: None }
    }

    pub fn at(root: impl Into<PathBuf>) -> Self {
        TableCache { root: Some(root.into()) }
    }

    /// Root from the `TYPEA_CACHE_DIR` environment variable, if set.
    pub fn from_env() -> Self {
        TableCache { root: std::env::var_os(CACHE_ENV).map(PathBuf::from) }
    }

    pub fn root(&self) -> Option<&Path> {
        self.root.as_deref()
    }

    pub fn path_for(&self, group: &FiniteGroup) -> Option<PathBuf> {
        self.root
            .as_ref()
            .map(|r| r.join(format!("v{SCHEMA_VERSION}")).join(format!("{}.json", descriptor(&group.name))))
    }

    /// The cached table when it is current and its classes agree with `group`,
    /// otherwise a fresh table (written back when caching is enabled).
    pub fn table(&self, group: &FiniteGroup) -> Result<CharTable, OracleError> {
        let Some(path) = self.path_for(group) else {
            return character_table(group);
        };
        if let Some(t) = load(&path, group) {
            return Ok(t);
        }
        let table = character_table(group)?;
        let record = CachedTable {
            schema_version: SCHEMA_VERSION,
            module_version: env!("CARGO_PKG_VERSION").to_string(),
            descriptor: descriptor(&group.name),
            group_name: group.name.clone(),
            table,
        };
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_vec(&record)?)?;
        fs::rename(&tmp, &path)?;
        Ok(record.table)
    }
}

fn load(path: &Path, group: &FiniteGroup) -> Option<CharTable> {
    let bytes = fs::read(path).ok()?;
    let rec: CachedTable = serde_json::from_slice(&bytes).ok()?;
    if rec.schema_version != SCHEMA_VERSION || rec.module_version != env!("CARGO_PKG_VERSION") || rec.group_name != group.name {
        return None;
    }
    let classes: Vec<ClassInfo> = group
        .classes()
        .iter()
        .map(|c| ClassInfo { rep: group.element(c.rep).clone(), size: c.size as u64, order: c.order })
        .collect();
    (rec.table.classes == classes && rec.table.group_order == group.order() as u64).then_some(rec.table)
}
