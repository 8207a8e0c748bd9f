use std::collections::BTreeMap;

use proptest::prelude::*;
use typea::cyclotomic::Cyclotomic;
use typea::lattice::FinAbGroup;
use typea::symchar::{char_value, Partition};
use typea::wreath::{compose, ClassFunction, CosetClass, WreathElem, WreathGroup};

fn groups() -> Vec<WreathGroup> {
    let klein = FinAbGroup::new(&[2, 2]).unwrap();
    vec![
        WreathGroup::cyclic_wreath(2, 2),
        WreathGroup::cyclic_wreath(3, 2),
        WreathGroup::cyclic_wreath(2, 3),
        WreathGroup::direct(vec![2, 3]),
        // Klein four acting regularly on four copies of S_2
        WreathGroup::new(vec![2; 4], klein.clone(), vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]]).unwrap(),
        // a non-faithful action: the second generator acts trivially
        WreathGroup::new(vec![3, 3, 1], klein, vec![vec![1, 0, 2], vec![0, 1, 2]]).unwrap(),
    ]
}

#[test]
fn tables_are_orthonormal() {
    for g in groups() {
        let irr = g.irr_semidirect();
        assert_eq!(irr.iter().map(|c| c.degree * c.degree).sum::<u128>(), g.order());
        let vals: Vec<ClassFunction> = irr.iter().map(|c| g.char_values(c)).collect();
        for i in 0..vals.len() {
            for j in 0..=i {
                assert_eq!(g.inner_product(&vals[i], &vals[j]), Cyclotomic::from_int((i == j) as i64));
            }
        }
    }
}

#[test]
fn young_induction_is_unitriangular() {
    for g in groups() {
        let irr = g.irr_semidirect();
        let vals: Vec<ClassFunction> = irr.iter().map(|c| g.char_values(c)).collect();
        for pi in &irr {
            for (chi, v) in irr.iter().zip(&vals) {
                let coeff = g.young_pairing(v, &pi.lambda, &pi.xi);
                let c = coeff.to_rational().expect("rational multiplicity");
                assert!(c.is_integer() && c >= num_rational::BigRational::from_integer(0.into()));
                if chi == pi {
                    assert_eq!(coeff, Cyclotomic::one());
                } else if !coeff.is_zero() {
                    assert!(chi.b_invariant() < pi.b_invariant(), "{:?} in Pi{:?}", chi.lambda, pi.lambda);
                }
            }
        }
    }
}

#[test]
fn pi_pullback_is_an_isometry() {
    // <pi_a^* f, pi_a^* h> on the coset equals <f, h> on (G°)^a
    let g = WreathGroup::cyclic_wreath(3, 2);
    let a = vec![1u64];
    let cyc = g.cycles(&a);
    let parts = Partition::all(3);
    let mut total_coset = Cyclotomic::zero();
    let mut total_fixed = Cyclotomic::zero();
    for l1 in &parts {
        for l2 in &parts {
            let mut acc_c = Cyclotomic::zero();
            let mut acc_f = Cyclotomic::zero();
            for (k, size) in g.classes().into_iter().filter(|(k, _)| k.a == a) {
                let t = &k.cycles[0].1;
                let v = char_value(l1, t).unwrap() * char_value(l2, t).unwrap();
                acc_c = acc_c + Cyclotomic::from_int(v * size as i64);
                acc_f = acc_f + Cyclotomic::from_int(v * t.class_size() as i64);
            }
            assert_eq!(cyc.len(), 1);
            let lhs = acc_c.scale(&num_rational::BigRational::new(1.into(), (g.base_order() as i64).into()));
            let rhs = acc_f.scale(&num_rational::BigRational::new(1.into(), 6.into()));
            assert_eq!(lhs, rhs);
            total_coset = total_coset + lhs;
            total_fixed = total_fixed + rhs;
        }
    }
    assert_eq!(total_coset, Cyclotomic::from_int(3));
    assert_eq!(total_fixed, total_coset);
}

#[test]
fn twisted_induction_matches_coset_sum() {
    let g = WreathGroup::cyclic_wreath(3, 2);
    let a = vec![1u64];
    let young = vec![vec![2, 1], vec![2, 1]];
    // f = pi_a^*(sign on S_2 x trivial on S_1)
    let mut f = BTreeMap::new();
    for k in Partition::all(2) {
        f.insert(vec![vec![k.clone(), Partition::row(1)]], Cyclotomic::from_int(k.sign()));
    }
    let induced = g.twisted_induce(&a, &young, &f).unwrap();
    // brute force: (1/|H°|) sum_{x in G°} f°(x g x^{-1})
    let in_young = |p: &[usize]| p[2] == 2;
    let h_order = 4i64;
    let base: Vec<WreathElem> = g.elements().into_iter().filter(|e| e.a == vec![0]).collect();
    for gg in g.elements().into_iter().filter(|e| e.a == a) {
        let mut s = 0i64;
        for x in &base {
            let c = g.mul(&g.mul(x, &gg), &g.inv(x));
            if c.w.iter().all(|w| in_young(w)) {
                let pi = &g.pi_project(&c)[0].1;
                s += Partition::cycle_type(&pi[..2]).sign();
            }
        }
        let key = g.coset_class(&gg);
        let expected = Cyclotomic::from_rational(&num_rational::BigRational::new(s.into(), h_order.into()));
        let got = induced.get(&key).cloned().unwrap_or_else(Cyclotomic::zero);
        assert_eq!(got, expected, "{key:?}");
    }
    // H° = G° leaves f unchanged
    let mut f = BTreeMap::new();
    for k in Partition::all(3) {
        f.insert(vec![vec![k.clone()]], Cyclotomic::from_int(char_value(&Partition::new(vec![2, 1]).unwrap(), &k).unwrap()));
    }
    let same = g.twisted_induce(&a, &[vec![3], vec![3]], &f).unwrap();
    for (key, v) in &f {
        let class = CosetClass { a: a.clone(), cycles: vec![(vec![0, 1], key[0][0].clone())] };
        assert_eq!(&same[&class], v);
    }
    assert!(g.twisted_induce(&a, &[vec![2, 1], vec![1, 2]], &BTreeMap::new()).is_err());
}

#[test]
fn pi_example_order() {
    let g = WreathGroup::cyclic_wreath(3, 2);
    let x = WreathElem { w: vec![vec![1, 2, 0], vec![1, 0, 2]], a: vec![1] };
    assert_eq!(g.pi_project(&x)[0].1, compose(&[1, 2, 0], &[1, 0, 2]));
}

fn integrality_case(g: &WreathGroup, coeffs: &[i64], half: Option<usize>) -> bool {
    let irr = g.irr_semidirect();
    let mut eta = ClassFunction::new();
    for (k, _) in g.classes() {
        eta.insert(k, Cyclotomic::zero());
    }
    for (i, chi) in irr.iter().enumerate() {
        let mut c = num_rational::BigRational::from_integer(coeffs[i % coeffs.len()].into());
        if half == Some(i) {
            c += num_rational::BigRational::new(1.into(), 2.into());
        }
        for (k, v) in g.char_values(chi) {
            let e = eta.get_mut(&k).unwrap();
            *e = &*e + &v.scale(&c);
        }
    }
    g.integrality_test(&eta)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn integrality_accepts_exactly_integer_combinations(
        coeffs in proptest::collection::vec(-3i64..4, 1..6),
        which in 0usize..3,
        idx in 0usize..64,
    ) {
        let g = &groups()[which];
        let n = g.irr_semidirect().len();
        prop_assert!(integrality_case(g, &coeffs, None));
        prop_assert!(!integrality_case(g, &coeffs, Some(idx % n)));
    }
}
