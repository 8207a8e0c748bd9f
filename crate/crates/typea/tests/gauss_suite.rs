use typea::center::center_group;
use typea::cyclotomic::Cyclotomic;
use typea::field::FqField;
use typea::gauss::{
    gauss_sum, kappa_power_phase, lambda, lambda_closed, sln_constant_closed, stable_cuspidal_characters,
    trace_zero_element, ConstantProblem, Registry,
};
use typea::root_datum::{build_group, build_product};

#[test]
fn norm_identity() {
    for (p, s) in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 1), (7, 2)] {
        let f = FqField::new(p, s).unwrap();
        let q = f.unit_order() as i64;
        for m in 1..q {
            let lhs = gauss_sum(&f, m).unwrap() * gauss_sum(&f, -m).unwrap();
            let theta_minus_one = if p == 2 || m % 2 == 0 { 1 } else { -1 };
            assert_eq!(lhs, Cyclotomic::from_int(theta_minus_one * p.pow(s) as i64), "p={p} s={s} m={m}");
        }
    }
}

#[test]
fn unitary_identity() {
    for q in [2u64, 3, 4, 5, 7, 8] {
        let (p, r) = typea::arith::prime_power(q).unwrap();
        let f = FqField::new(p, 2 * r).unwrap();
        let xi = trace_zero_element(&f, q).unwrap();
        for k in 1..=q {
            // theta = kappa^{k (q - 1)} has order dividing q + 1
            let m = (k * (q - 1)) as i64;
            let sign = Cyclotomic::from_phase(kappa_power_phase(&f, m, xi).unwrap());
            assert_eq!(gauss_sum(&f, m).unwrap(), sign.scale_int(q as i64), "q={q} k={k}");
        }
    }
}

#[test]
fn all_routes_agree_on_special_groups() {
    let reg = Registry::standard();
    let mut cases = 0;
    for n in 1..=6 {
        for q in [2u64, 3, 4, 5, 7, 9] {
            for twisted in [false, true] {
                let (d, f) = build_group(n, 1, q, twisted).unwrap();
                let c = center_group(&d, &f);
                let zetas = stable_cuspidal_characters(&c);
                let closed = sln_constant_closed(n, q, twisted);
                assert_eq!(zetas.is_empty(), closed.is_err(), "n={n} q={q} twisted={twisted}");
                for z in zetas {
                    let problem = ConstantProblem::new(d.clone(), f.clone(), z).unwrap();
                    let values: Vec<Cyclotomic> =
                        reg.names().iter().map(|r| reg.get(r).unwrap().evaluate(&problem).unwrap()).collect();
                    assert!(values.iter().all(|v| v == &values[0]), "n={n} q={q} twisted={twisted}: {values:?}");
                    assert_eq!(values[0].pow(4), Cyclotomic::one());
                    cases += 1;
                }
            }
        }
    }
    assert!(cases > 20);
}

#[test]
fn product_of_groups_multiplies() {
    // SL_2 x SL_2 over F_5, split: the constant is the product of the two
    let (d, f) = build_product(&[2, 2], 5, &[false, false], &[0, 1]).unwrap();
    let c = center_group(&d, &f);
    let zetas = stable_cuspidal_characters(&c);
    assert_eq!(zetas.len(), 1);
    let problem = ConstantProblem::new(d, f, zetas[0].clone()).unwrap();
    let v = Registry::standard().get("direct").unwrap().evaluate(&problem).unwrap();
    let single = sln_constant_closed(2, 5, false).unwrap();
    assert_eq!(v, single.clone() * single);
}

#[test]
fn exact_lambda_matches_closed_form() {
    for p in [3, 5, 7, 11, 13] {
        for s in 1..=3 {
            assert_eq!(lambda(p, s).unwrap(), lambda_closed(p, s).unwrap());
        }
    }
}

#[test]
fn restriction_of_scalars_matches_larger_field() {
    // two factors swapped by F over F_q behave like one factor over F_{q^2}
    for (q, twisted) in [(3u64, false), (3, true), (5, false), (7, true)] {
        let (d, f) = build_product(&[2, 2], q, &[twisted, twisted], &[1, 0]).unwrap();
        let c = center_group(&d, &f);
        let zetas = stable_cuspidal_characters(&c);
        assert!(!zetas.is_empty());
        for z in zetas {
            let problem = ConstantProblem::new(d.clone(), f.clone(), z).unwrap();
            let v = Registry::standard().get("direct").unwrap().evaluate(&problem).unwrap();
            assert_eq!(v, sln_constant_closed(2, q * q, false).unwrap(), "q={q}");
        }
    }
}
