use typea::lattice::FinAbGroup;
use typea::wreath::WreathGroup;
use typea_oracle::wreath_check::{check_canonical_extension, compare_symmetric, compare_wreath_table, WreathModel};
use typea_oracle::TableCache;

fn groups() -> Vec<WreathGroup> {
    vec![
        WreathGroup::cyclic_wreath(2, 2),
        WreathGroup::cyclic_wreath(2, 3),
        WreathGroup::cyclic_wreath(3, 2),
        WreathGroup::cyclic_wreath(2, 4),
        WreathGroup::cyclic_wreath(3, 3),
        WreathGroup::cyclic_wreath(4, 2),
        WreathGroup::direct(vec![2, 3]),
        // Z/4 acting through its quotient Z/2
        WreathGroup::new(vec![2, 2], FinAbGroup::cyclic(4), vec![vec![1, 0]]).unwrap(),
        // Klein four-group on four blocks
        WreathGroup::new(vec![2; 4], FinAbGroup::new(&[2, 2]).unwrap(), vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap(),
        // a fixed block next to a swapped pair
        WreathGroup::new(vec![2, 2, 3], FinAbGroup::cyclic(2), vec![vec![1, 0, 2]]).unwrap(),
    ]
}

#[test]
fn encoding_is_a_homomorphism() {
    for w in groups().into_iter().filter(|w| w.order() <= 200) {
        let model = WreathModel::new(&w, typea::lattice::AbSubgroup::whole(w.acting())).unwrap();
        assert_eq!(model.group.order() as u128, w.order());
        let elems = w.elements();
        for x in elems.iter().step_by(3) {
            assert_eq!(&model.decode(&model.encode(x)), x);
            for y in elems.iter().step_by(5) {
                let lhs = model.encode(&w.mul(x, y));
                let rhs = model.group.kind.mul(&model.encode(x), &model.encode(y));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn oracle_tables_match_closed_form() {
    for w in groups() {
        assert!(w.order() <= 2000);
        compare_wreath_table(&w, &TableCache::disabled()).unwrap();
    }
}

#[test]
fn canonical_extension_is_unique() {
    for w in groups() {
        for lambda in w.all_labels() {
            if w.orbit(&lambda).iter().next() == Some(&lambda) {
                check_canonical_extension(&w, &lambda, &TableCache::disabled()).unwrap();
            }
        }
    }
}

#[test]
fn symmetric_groups_match_formula() {
    for n in 1..=6 {
        compare_symmetric(n, &TableCache::disabled()).unwrap();
    }
}
