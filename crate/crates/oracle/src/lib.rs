//! Brute-force ground truth for small finite groups: element enumeration,
//! conjugacy classes, exact character tables, Gelfand-Graev induction and the
//! census against the series catalog.

pub mod cache;
pub mod census;
pub mod dixon;
pub mod gelfand_graev;
pub mod group;
pub mod modp;
pub mod wreath_check;

use thiserror::Error;

pub use cache::TableCache;
pub use census::{census, census_compare, CensusCheck, CensusReport};
pub use dixon::{character_table, CharTable, ClassInfo};
pub use group::{FiniteGroup, GroupKind};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("group exceeds {bound} elements")]
    TooLarge { bound: usize },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error(transparent)]
    Field(#[from] typea::field::FieldError),
    #[error("group construction: {0}")]
    Construction(String),
    #[error("character table: {0}")]
    Table(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Series(#[from] typea::series::SeriesError),
    #[error("census identity violated: {identity} (expected {expected}, found {found})")]
    Census { identity: String, expected: String, found: String },
    #[error("oracle mismatch: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
