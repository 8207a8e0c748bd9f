use typea::center::{
    affine_stabilizer, center_group, cuspidal_data, levi_center, levi_kernel, self_opposed_closure, CenterGroup,
};
use typea::lattice::FinAbGroup;
use typea::root_datum::{build_group, LeviLabel, RootDatumA};

fn all_subsets(r: usize) -> Vec<LeviLabel> {
    (0u32..1 << r).map(|mask| LeviLabel::new((0..r).filter(|&i| mask >> i & 1 == 1))).collect()
}

/// `SL_n` over a field of characteristic `p`.
fn sl(n: usize, p: u64) -> (RootDatumA, CenterGroup) {
    let (d, f) = build_group(n, 1, p, false).unwrap();
    let c = center_group(&d, &f);
    (d, c)
}

#[test]
fn kernel_of_intersection_is_product() {
    for n in 2..=8 {
        for p in [2u64, 3, 11] {
            let (_, c) = sl(n, p);
            let subsets = all_subsets(n - 1);
            let kernels: Vec<_> = subsets.iter().map(|i| levi_kernel(&c, i)).collect();
            for (a, ka) in subsets.iter().zip(&kernels) {
                for (b, kb) in subsets.iter().zip(&kernels) {
                    assert_eq!(levi_kernel(&c, &a.intersection(b)), ka.join(kb), "n={n} p={p} I={a} J={b}");
                }
            }
        }
    }
}

#[test]
fn kernel_only_sees_self_opposed_closure() {
    for n in 2..=8 {
        for p in [2u64, 3, 11] {
            let (d, c) = sl(n, p);
            for i in all_subsets(n - 1) {
                let inf = self_opposed_closure(&d, &i).unwrap();
                assert!(inf.is_subset(&i));
                assert_eq!(self_opposed_closure(&d, &inf).unwrap(), inf);
                assert_eq!(levi_kernel(&c, &i), levi_kernel(&c, &inf), "n={n} p={p} I={i}");
            }
        }
    }
}

#[test]
fn kernel_equals_affine_stabilizer_on_self_opposed() {
    for n in 2..=8 {
        // p prime to n so that the center is all of mu_n
        let p = [11u64, 13].into_iter().find(|p| !(n as u64).is_multiple_of(*p)).unwrap();
        let (d, c) = sl(n, p);
        for i in all_subsets(n - 1) {
            let inf = self_opposed_closure(&d, &i).unwrap();
            assert_eq!(levi_kernel(&c, &inf), affine_stabilizer(&c, &inf).unwrap(), "n={n} I={inf}");
        }
    }
}

#[test]
fn table_row_values() {
    let (d, c) = sl(6, 5);
    assert_eq!(c.group(), &FinAbGroup::cyclic(6));
    for (blocks, order) in [(vec![2, 2, 2], 2u64), (vec![3, 3], 3)] {
        let l = LeviLabel::from_composition(6, &blocks).unwrap();
        assert_eq!(levi_center(&d, &l, 5), FinAbGroup::cyclic(order));
        assert_eq!(levi_kernel(&c, &l).quotient_structure(), FinAbGroup::cyclic(order));
    }
    // p-part is dropped
    assert_eq!(sl(6, 2).1.group(), &FinAbGroup::cyclic(3));
    assert_eq!(sl(6, 3).1.group(), &FinAbGroup::cyclic(2));
}

#[test]
fn cuspidal_characters_are_injective_when_p_prime_to_n() {
    for n in 2..=8 {
        let p = [11u64, 13].into_iter().find(|p| !(n as u64).is_multiple_of(*p)).unwrap();
        let (d, c) = sl(n, p);
        let cus = cuspidal_data(&c, &d);
        let injective = (1..n as u64).filter(|k| num_integer::gcd(*k, n as u64) == 1).count();
        assert_eq!(cus.characters.len(), injective, "n={n}");
        let whole = cus.min_levi.iter().find(|(k, _)| k.order() == n as u64).unwrap();
        assert_eq!(whole.1, LeviLabel::empty());
    }
}
