use std::collections::BTreeMap;

use typea::dual::{class_invariants, omega1_phase, torsor_element};
use typea::series::{
    cuspidal_labels, families, families_with_section, gelfand_graev_labels, is_identity_matrix, jordan_counts,
    mat_mul, rho_dot_gram, series_catalog, sign_epsilon, xi_labels,
};
use typea::symchar::Partition;

const GROUPS: &[(usize, u64, bool)] = &[
    (2, 3, false),
    (2, 5, false),
    (2, 7, false),
    (3, 4, false),
    (3, 2, true),
    (4, 3, true),
    (4, 5, false),
];

#[test]
fn fourier_rows_orthonormal_and_invertible() {
    for &(n, q, tw) in GROUPS {
        for entry in series_catalog(n, q, tw).unwrap() {
            for fam in families(&entry) {
                let m = &fam.fourier;
                assert_eq!(m.dim(), fam.size());
                assert!(is_identity_matrix(&m.gram()), "{n} {q} {tw}");
                assert!(is_identity_matrix(&mat_mul(&m.inverse(), &m.entries)));
                assert!(is_identity_matrix(&mat_mul(&m.entries, &m.inverse())));
            }
        }
    }
}

#[test]
fn families_partition_geometric_series() {
    for &(n, q, tw) in GROUPS {
        let cat = series_catalog(n, q, tw).unwrap();
        let mut by_geo: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for (i, e) in cat.iter().enumerate() {
            by_geo.entry(format!("{:?}", e.class.geometric_id())).or_default().push(i);
        }
        for members in by_geo.values() {
            let base = &cat[members[0]];
            let geometric_total: usize = members.iter().map(|&i| cat[i].size).sum();
            let fams = families(base);
            let mut per_alpha: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
            for f in &fams {
                let counted: usize = f.rational_counts.iter().map(|(_, c)| c).sum();
                assert_eq!(counted, f.size(), "{n} {q} {tw} family {:?}", f.representative);
                for (al, c) in &f.rational_counts {
                    *per_alpha.entry(al.clone()).or_default() += c;
                }
            }
            assert_eq!(fams.iter().map(|f| f.size()).sum::<usize>(), geometric_total);
            // per alpha, the families see exactly the series of that rational class
            for &i in members {
                let alpha = torsor_element(&base.class, &cat[i].class).unwrap();
                let label = base.invariants.project_h1(&alpha);
                assert_eq!(per_alpha[&label], cat[i].size, "{n} {q} {tw}");
            }
        }
    }
}

#[test]
fn families_independent_of_section() {
    for &(n, q, tw) in GROUPS {
        for entry in series_catalog(n, q, tw).unwrap() {
            let inv = &entry.invariants;
            if inv.a_order() > 4 {
                continue;
            }
            let reference = families(&entry);
            for section in inv.all_sections() {
                let other = families_with_section(&entry, &section).unwrap();
                assert_eq!(other.len(), reference.len());
                for (a, b) in reference.iter().zip(&other) {
                    assert_eq!(a.representative, b.representative);
                    assert_eq!(a.size(), b.size());
                    assert_eq!(a.fourier, b.fourier);
                    assert_eq!(a.rational_counts, b.rational_counts);
                }
            }
        }
    }
}

#[test]
fn rho_dot_gram_is_scalar() {
    for &(n, q, tw) in GROUPS {
        for entry in series_catalog(n, q, tw).unwrap() {
            let g = rho_dot_gram(&entry);
            let k = entry.invariants.fixed.order() as i64;
            for (i, row) in g.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    let want = if i == j { k } else { 0 };
                    assert_eq!(x.to_integer().unwrap(), want.into());
                }
            }
        }
    }
}

#[test]
fn regular_singleton_families() {
    let cat = series_catalog(2, 5, false).unwrap();
    for e in cat.iter().filter(|e| e.invariants.a_order() == 1) {
        let fams = families(e);
        assert!(fams.iter().all(|f| f.size() == 1 && f.fourier.entries[0][0].to_integer() == Some(1.into())));
    }
}

#[test]
fn split_signs_have_trivial_chi_part() {
    for (n, q) in [(2, 5), (3, 4), (4, 5)] {
        for e in series_catalog(n, q, false).unwrap() {
            let trivial: Vec<Partition> = e.components.iter().map(|c| Partition::row(c.multiplicity)).collect();
            let column: Vec<Partition> = e.components.iter().map(|c| Partition::column(c.multiplicity)).collect();
            let want = e.epsilon_g * e.epsilon_c;
            assert_eq!(sign_epsilon(&e, &trivial).unwrap(), want);
            assert_eq!(sign_epsilon(&e, &column).unwrap(), want);
        }
    }
}

#[test]
fn asai_relation_between_rational_labels() {
    for &(n, q, tw) in GROUPS {
        let cat = series_catalog(n, q, tw).unwrap();
        let center = cat[0].class.setting.fixed_center();
        for base in &cat {
            for other in cat.iter().filter(|c| c.class.geometric_id() == base.class.geometric_id()) {
                let a = torsor_element(&base.class, &other.class).unwrap();
                let alpha = class_invariants(&base.class).project_h1(&a);
                for z in center.coordinate_tuples() {
                    let lhs = other.central_char.phase_coords(&z).sub(&base.central_char.phase_coords(&z));
                    assert_eq!(lhs, omega1_phase(&base.class, &alpha, &z).unwrap(), "{n} {q} {tw}");
                }
            }
        }
    }
}

#[test]
fn gelfand_graev_counts() {
    for &(n, q, tw) in GROUPS {
        let cat = series_catalog(n, q, tw).unwrap();
        let gg = gelfand_graev_labels(&cat).unwrap();
        assert_eq!(gg.len() as u64, cat[0].class.setting.fixed_center_order());
        for g in &gg {
            assert_eq!(g.constituents.len(), cat.len());
        }
        for (i, e) in cat.iter().enumerate() {
            assert_eq!(xi_labels(i, e).len() as u64, e.invariants.fixed.order());
        }
    }
}

#[test]
fn jordan_counts_agree() {
    for &(n, q, tw) in GROUPS {
        for row in jordan_counts(&series_catalog(n, q, tw).unwrap()) {
            assert_eq!(row.series_size, row.unipotent_count, "{n} {q} {tw}");
        }
    }
    let cat = series_catalog(2, 5, false).unwrap();
    let rows = jordan_counts(&cat);
    for (e, r) in cat.iter().zip(&rows) {
        if e.invariants.a_order() == 2 {
            assert_eq!((r.series_size, r.unipotent_count), (2, 2));
        }
        if e.class.is_regular() && e.invariants.a_order() == 1 {
            assert_eq!((r.series_size, r.unipotent_count), (1, 1));
        }
    }
}

#[test]
fn cuspidal_lines() {
    let cat = series_catalog(2, 3, false).unwrap();
    let with_cusp = cat.iter().filter(|e| !cuspidal_labels(e).unwrap().is_empty()).count();
    assert_eq!(with_cusp, 2);
}
