use typea_oracle::group::{projective_linear, special_linear, special_unitary, symmetric};
use typea_oracle::{character_table, FiniteGroup};

fn degrees(g: &FiniteGroup) -> Vec<u64> {
    let mut d = character_table(g).unwrap().degrees();
    d.sort_unstable();
    d
}

#[test]
fn small_linear_groups() {
    let g = special_linear(2, 3).unwrap();
    assert_eq!((g.order(), g.classes().len()), (24, 7));
    assert_eq!(degrees(&g), vec![1, 1, 1, 2, 2, 2, 3]);
    let g = special_linear(2, 5).unwrap();
    assert_eq!((g.order(), g.classes().len()), (120, 9));
    let g = projective_linear(2, 3).unwrap();
    assert_eq!((g.order(), g.classes().len()), (24, 5));
    let p_prime = g.classes().iter().filter(|c| c.order % 3 != 0).count();
    assert_eq!(p_prime, 4);
}

#[test]
fn unitary_and_symmetric() {
    let g = special_unitary(3, 2).unwrap();
    assert_eq!(g.order(), 216);
    let t = character_table(&g).unwrap();
    assert_eq!(t.characters.len(), g.classes().len());
    assert_eq!(degrees(&symmetric(1).unwrap()), vec![1]);
    assert_eq!(degrees(&symmetric(4).unwrap()), vec![1, 1, 2, 3, 3]);
}

#[test]
fn size_bound_is_enforced() {
    use typea_oracle::OracleError;
    assert!(matches!(special_linear(3, 5), Err(OracleError::TooLarge { .. })));
    assert!(matches!(symmetric(9), Err(OracleError::TooLarge { .. })));
}

#[test]
fn gelfand_graev_small_cases() {
    use typea_oracle::gelfand_graev::gelfand_graev_characters;
    let g = special_linear(2, 3).unwrap();
    let t = character_table(&g).unwrap();
    let gg = gelfand_graev_characters(&g, &t, false).unwrap();
    assert_eq!(gg.len(), 2);
    for c in &gg {
        assert_eq!(c.degree(), Some(8.into()));
        assert!(c.is_multiplicity_free());
        assert_eq!(c.constituents.len(), 4);
    }
    let g = special_linear(2, 2).unwrap();
    let t = character_table(&g).unwrap();
    assert_eq!(gelfand_graev_characters(&g, &t, false).unwrap().len(), 1);
}

#[test]
fn cache_round_trip() {
    use typea_oracle::cache::{descriptor, SCHEMA_VERSION};
    use typea_oracle::TableCache;
    let dir = tempfile::tempdir().unwrap();
    let cache = TableCache::at(dir.path());
    let g = special_linear(2, 3).unwrap();
    let fresh = cache.table(&g).unwrap();
    let path = dir.path().join(format!("v{SCHEMA_VERSION}")).join(format!("{}.json", descriptor(&g.name)));
    assert!(path.exists());
    assert_eq!(cache.table(&g).unwrap(), fresh);
    // a corrupted entry is recomputed and replaced
    std::fs::write(&path, b"{}").unwrap();
    assert_eq!(cache.table(&g).unwrap(), fresh);
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    assert_eq!(v["table"]["characters"].as_array().unwrap().len(), 7);
}
