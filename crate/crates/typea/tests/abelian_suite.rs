use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use typea::lattice::{hom_invariants, smith_normal_form, AbHom, FinAbGroup, IntMatrix};

/// Invariant factors `m_1 | m_2 | ...` with product at most 10^4.
fn group_strategy() -> impl Strategy<Value = FinAbGroup> {
    prop::collection::vec(1u64..=12, 1..=4).prop_filter_map("order bound", |steps| {
        let mut factors = Vec::new();
        let mut cur = 1u64;
        for s in steps {
            cur *= s;
            factors.push(cur);
        }
        let order: u64 = factors.iter().product();
        (order <= 10_000).then(|| FinAbGroup::new(&factors).expect("divisibility chain"))
    })
}

/// A random endomorphism: entry `(i, j)` is a multiple of `m_i / gcd(m_i, m_j)`.
fn endo_strategy() -> impl Strategy<Value = AbHom> {
    group_strategy().prop_flat_map(|g| {
        let k = g.rank();
        prop::collection::vec(0u64..10_000, k * k).prop_map(move |raw| {
            let f = g.invariant_factors();
            let m = IntMatrix::from_fn(k, k, |i, j| {
                let step = f[i] / f[i].gcd(&f[j]);
                BigInt::from(raw[i * k + j] % (f[i] / step).max(1) * step)
            });
            AbHom::new(g.clone(), g.clone(), m).expect("entries respect the orders")
        })
    })
}

fn unimodular(n: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for &(i, j, c) in ops {
        let (i, j) = (i % n, j % n);
        if i == j {
            continue;
        }
        // row_i += c * row_j
        for col in 0..n {
            let v = u.get(i, col) + u.get(j, col) * BigInt::from(c);
            u.set(i, col, v);
        }
    }
    u
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn fixed_points_and_h1_have_equal_order(phi in endo_strategy()) {
        let g = phi.source().clone();
        let h = phi.sub(&AbHom::identity(&g)).unwrap();
        let inv = hom_invariants(&h);
        prop_assert_eq!(inv.kernel.order(), inv.cokernel.order());
        if g.order() <= 2_000 {
            let fixed = g.elements().into_iter().filter(|e| &phi.apply(e).unwrap() == e).count() as u64;
            prop_assert_eq!(fixed, inv.kernel.order());
        }
    }

    #[test]
    fn snf_invariant_under_unimodular_change(
        rows in 1usize..=4,
        cols in 1usize..=4,
        entries in prop::collection::vec(-30i64..=30, 16),
        left in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..8),
        right in prop::collection::vec((0usize..4, 0usize..4, -3i64..=3), 0..8),
    ) {
        let m = IntMatrix::from_fn(rows, cols, |i, j| BigInt::from(entries[i * 4 + j]));
        let u = unimodular(rows, &left);
        let v = unimodular(cols, &right).transpose();
        let changed = u.mul(&m).mul(&v);
        let a = smith_normal_form(&m);
        let b = smith_normal_form(&changed);
        prop_assert_eq!(a.diagonal(), b.diagonal());
        prop_assert_eq!(a.u.mul(&m).mul(&a.v), a.s.clone());
        prop_assert!(a.s.is_diagonal());
        let d = a.diagonal();
        for w in d.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]) || w[0] == BigInt::from(0) && w[1] == BigInt::from(0));
        }
    }
}
