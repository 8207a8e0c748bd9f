//! Census of `SL_n(q)` / `SU_n(q)`: the oracle's table against the series catalog.

use std::collections::BTreeMap;

use serde::Serialize;
use typea::cyclotomic::QmodZ;
use typea::series::{gelfand_graev_labels, series_catalog, SeriesEntry};

use crate::cache::TableCache;
use crate::dixon::CharTable;
use crate::gelfand_graev::{gelfand_graev_characters, regular_unipotent_classes, GelfandGraev};
use crate::group::{special_linear, special_unitary, FiniteGroup};
use crate::OracleError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusCheck {
    pub identity: String,
    pub expected: String,
    pub found: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    pub group: String,
    pub order: u64,
    pub class_count: usize,
    pub series_sizes: Vec<usize>,
    pub checks: Vec<CensusCheck>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CensusCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// `Err` naming the first violated identity.
    pub fn into_result(self) -> Result<Self, OracleError> {
        if let Some(c) = self.failures().next() {
            return Err(OracleError::Census { identity: c.identity.clone(), expected: c.expected.clone(), found: c.found.clone() });
        }
        Ok(self)
    }

    fn push(&mut self, identity: &str, expected: impl std::fmt::Debug, found: impl std::fmt::Debug) {
        let (expected, found) = (format!("{expected:?}"), format!("{found:?}"));
        let passed = expected == found;
        self.checks.push(CensusCheck { identity: identity.to_string(), expected, found, passed });
    }
}

pub fn matrix_group(n: usize, q: u64, twisted: bool) -> Result<FiniteGroup, OracleError> {
    if twisted {
        special_unitary(n, q)
    } else {
        special_linear(n, q)
    }
}

/// Index of the class of the scalar generating `Z(G^F)`: `i(1/g) I`, where `i(1/(p^s - 1))`
/// is the distinguished generator of the matrix entry field.
pub fn central_generator_class(g: &FiniteGroup, center_order: u64) -> Result<usize, OracleError> {
    let (field, n) = match &g.kind {
        crate::group::GroupKind::Matrix { field, n, projective: false } => (field, *n),
        _ => return Err(OracleError::Unsupported(format!("{} is not a linear matrix group", g.name))),
    };
    let z = field.exp(field.unit_order() / center_order);
    let scalar: Vec<u32> = (0..n * n).map(|k| if k / n == k % n { z } else { 0 }).collect();
    let idx = g
        .index_of(&scalar)
        .ok_or_else(|| OracleError::Construction(format!("scalar of order {center_order} not in {}", g.name)))?;
    Ok(g.class_of(idx))
}

/// Central-character tag `k` of each character: `chi(z) = zeta_g^k chi(1)`.
pub fn central_tags(table: &CharTable, z_class: usize, center_order: u64) -> Result<Vec<u64>, OracleError> {
    table
        .characters
        .iter()
        .map(|row| {
            let d = row[0].to_integer().ok_or_else(|| OracleError::Table("degree is not an integer".into()))?;
            let ratio = row[z_class].scale(&num_rational::BigRational::new(1.into(), d));
            let phase = ratio
                .as_root_of_unity()
                .ok_or_else(|| OracleError::Table("central value is not a root of unity times the degree".into()))?;
            Ok(phase_tag(&phase, center_order))
        })
        .collect()
}

fn phase_tag(x: &QmodZ, g: u64) -> u64 {
    (x.numer() * g as i64 / x.denom()).rem_euclid(g as i64) as u64
}

fn series_tag(e: &SeriesEntry, g: u64) -> u64 {
    if g == 1 {
        0
    } else {
        phase_tag(&e.central_char.phase_coords(&[1]), g)
    }
}

/// Everything the census computes, kept for reporting.
pub struct Census {
    pub group: FiniteGroup,
    pub table: CharTable,
    pub catalog: Vec<SeriesEntry>,
    pub gelfand_graev: Vec<GelfandGraev>,
    pub report: CensusReport,
}

pub fn census(n: usize, q: u64, twisted: bool, cache: &TableCache) -> Result<Census, OracleError> {
    let group = matrix_group(n, q, twisted)?;
    let table = cache.table(&group)?;
    let catalog = series_catalog(n, q, twisted)?;
    let h1 = catalog.first().map_or(1, |e| e.class.setting.fixed_center_order());
    let mut report = CensusReport {
        group: group.name.clone(),
        order: group.order() as u64,
        class_count: table.classes.len(),
        series_sizes: catalog.iter().map(|e| e.size).collect(),
        checks: Vec::new(),
    };

    let total: usize = catalog.iter().map(|e| e.size).sum();
    report.push("class count equals the sum of series sizes", total, table.classes.len());

    let z_class = central_generator_class(&group, h1)?;
    let mut oracle_hist: BTreeMap<u64, usize> = BTreeMap::new();
    for t in central_tags(&table, z_class, h1)? {
        *oracle_hist.entry(t).or_default() += 1;
    }
    let mut series_hist: BTreeMap<u64, usize> = BTreeMap::new();
    for e in &catalog {
        *series_hist.entry(series_tag(e, h1)).or_default() += e.size;
    }
    report.push("irreducibles per central character equal series sizes per s-hat", series_hist, oracle_hist);

    let gg = gelfand_graev_characters(&group, &table, twisted)?;
    report.push("number of Gelfand-Graev characters equals |H^1(F, Z(G))|", h1 as usize, gg.len());
    report.push(
        "Gelfand-Graev characters are multiplicity free",
        vec![true; gg.len()],
        gg.iter().map(GelfandGraev::is_multiplicity_free).collect::<Vec<_>>(),
    );
    report.push(
        "Gelfand-Graev constituent count equals the number of rational classes",
        vec![catalog.len(); gg.len()],
        gg.iter().map(|g| g.constituents.len()).collect::<Vec<_>>(),
    );
    let tags = central_tags(&table, z_class, h1)?;
    let mut want: Vec<u64> = catalog.iter().map(|e| series_tag(e, h1)).collect();
    want.sort_unstable();
    let found: Vec<Vec<u64>> = gg
        .iter()
        .map(|g| {
            let mut t: Vec<u64> = g.constituents.iter().map(|&(i, _)| tags[i]).collect();
            t.sort_unstable();
            t
        })
        .collect();
    report.push("Gelfand-Graev constituents carry one central character per series", vec![want; gg.len()], found);
    let labels = gelfand_graev_labels(&catalog)?;
    report.push("Gelfand-Graev labels, one per element of H^1(F, Z(G))", gg.len(), labels.len());

    let reg = regular_unipotent_classes(&group)?;
    report.push("regular unipotent classes number |H^1(F, Z(G))|", h1 as usize, reg.len());

    Ok(Census { group, table, catalog, gelfand_graev: gg, report })
}

/// The census report alone, failing on the first violated identity.
pub fn census_compare(n: usize, q: u64, twisted: bool, cache: &TableCache) -> Result<CensusReport, OracleError> {
    census(n, q, twisted, cache)?.report.into_result()
}
