//! Gelfand-Graev characters by explicit induction from the upper unitriangular group.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use typea::cyclotomic::Cyclotomic;
use typea::field::{Fe, FqField};

use crate::dixon::CharTable;
use crate::group::{FiniteGroup, GroupKind};
use crate::OracleError;

/// One induced character `Ind_U^G psi` and its decomposition.
#[derive(Clone, Debug, Serialize)]
pub struct GelfandGraev {
    /// Coefficients `a` of `psi(v) = zeta_p^{Tr(sum a_i v_i)}` on the superdiagonal.
    pub psi: Vec<Fe>,
    pub values: Vec<Cyclotomic>,
    /// `(row of the character table, multiplicity)` for nonzero multiplicities.
    pub constituents: Vec<(usize, i64)>,
}

impl GelfandGraev {
    pub fn degree(&self) -> Option<BigInt> {
        self.values[0].to_integer()
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.constituents.iter().all(|&(_, m)| m == 1)
    }
}

fn matrix_parts(g: &FiniteGroup) -> Result<(&FqField, usize), OracleError> {
    match &g.kind {
        GroupKind::Matrix { field, n, projective: false } => Ok((field, *n)),
        _ => Err(OracleError::Unsupported(format!("{}: Gelfand-Graev needs a linear matrix group", g.name))),
    }
}

fn is_upper_unitriangular(n: usize, m: &[u32]) -> bool {
    (0..n).all(|i| (0..=i).all(|j| m[i * n + j] == u32::from(i == j)))
}

fn superdiagonal(n: usize, m: &[u32]) -> Vec<Fe> {
    (0..n - 1).map(|i| m[i * n + i + 1]).collect()
}

/// Positions of the simple roots grouped into Frobenius orbits.
fn simple_root_orbits(n: usize, twisted: bool) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for i in 0..n - 1 {
        let j = if twisted { n - 2 - i } else { i };
        if j < i {
            continue;
        }
        out.push(if i == j { vec![i] } else { vec![i, j] });
    }
    out
}

/// One Gelfand-Graev character per `T`-orbit of regular characters of `U`,
/// each decomposed against `table`. `twisted` selects the unitary pairing of root slices.
pub fn gelfand_graev_characters(g: &FiniteGroup, table: &CharTable, twisted: bool) -> Result<Vec<GelfandGraev>, OracleError> {
    let (field, n) = matrix_parts(g)?;
    if n < 2 {
        return Err(OracleError::Unsupported("rank zero".into()));
    }
    let p = field.p();
    let unipotent: Vec<usize> = (0..g.order()).filter(|&x| is_upper_unitriangular(n, g.element(x))).collect();
    let torus: Vec<usize> = (0..g.order())
        .filter(|&x| {
            let m = g.element(x);
            (0..n * n).all(|k| k / n == k % n || m[k] == 0)
        })
        .collect();

    let mut v_index: BTreeMap<Vec<Fe>, usize> = BTreeMap::new();
    for &u in &unipotent {
        let v = superdiagonal(n, g.element(u));
        let next = v_index.len();
        v_index.entry(v).or_insert(next);
    }
    let vs: Vec<Vec<Fe>> = {
        let mut vs = vec![Vec::new(); v_index.len()];
        for (v, &i) in &v_index {
            vs[i] = v.clone();
        }
        vs
    };

    // characters of V, as trace vectors, keyed by their least coefficient vector
    let size = field.size();
    let mut chars: BTreeMap<Vec<u64>, Vec<Fe>> = BTreeMap::new();
    for code in 0..size.pow((n - 1) as u32) {
        let mut c = code;
        let a: Vec<Fe> = (0..n - 1)
            .map(|_| {
                let x = (c % size) as Fe;
                c /= size;
                x
            })
            .collect();
        let vals: Vec<u64> = vs
            .iter()
            .map(|v| {
                let s = a.iter().zip(v).fold(0, |acc, (&ai, &vi)| field.add(acc, field.mul(ai, vi)));
                field.trace(s)
            })
            .collect();
        chars.entry(vals).or_insert(a);
    }

    let orbits = simple_root_orbits(n, twisted);
    let regular: Vec<(&Vec<u64>, &Vec<Fe>)> = chars
        .iter()
        .filter(|(vals, _)| {
            orbits.iter().all(|orb| {
                vs.iter().zip(vals.iter()).any(|(v, &t)| t != 0 && v.iter().enumerate().all(|(i, &x)| x == 0 || orb.contains(&i)))
            })
        })
        .collect();

    // (t . psi)(v) = psi(t^{-1} v t), (t^{-1} v t)_i = t_i^{-1} v_i t_{i+1}
    let act = |t: usize, vals: &[u64]| -> Vec<u64> {
        let m = g.element(t);
        let d: Vec<Fe> = (0..n).map(|i| m[i * n + i]).collect();
        vs.iter()
            .map(|v| {
                let w: Vec<Fe> = (0..n - 1)
                    .map(|i| field.mul(field.mul(field.inv(d[i]).expect("torus entries are units"), v[i]), d[i + 1]))
                    .collect();
                vals[v_index[&w]]
            })
            .collect()
    };
    let mut seen = std::collections::BTreeSet::new();
    let mut reps = Vec::new();
    for (vals, a) in &regular {
        if seen.contains(*vals) {
            continue;
        }
        for &t in &torus {
            seen.insert(act(t, vals));
        }
        reps.push(((*vals).clone(), (*a).clone()));
    }

    let mut v_of = vec![0usize; g.order()];
    for &u in &unipotent {
        v_of[u] = v_index[&superdiagonal(n, g.element(u))];
    }
    let order = BigInt::from(g.order());
    let u_order = BigInt::from(unipotent.len());
    let mut out = Vec::new();
    for (vals, a) in reps {
        let k = g.classes().len();
        let mut counts = vec![vec![0i64; p as usize]; k];
        for &u in &unipotent {
            counts[g.class_of(u)][vals[v_of[u]] as usize] += 1;
        }
        let values: Vec<Cyclotomic> = g
            .classes()
            .iter()
            .zip(&counts)
            .map(|(cl, cnt)| {
                let sum = Cyclotomic::from_exponent_counts(p, cnt).expect("p is positive");
                sum.scale(&BigRational::new(order.clone(), BigInt::from(cl.size) * &u_order))
            })
            .collect();
        let mut constituents = Vec::new();
        for (i, row) in table.characters.iter().enumerate() {
            let ip = table.inner_product(&values, row);
            let m = ip
                .to_integer()
                .and_then(|m| i64::try_from(m).ok())
                .ok_or_else(|| OracleError::Table(format!("non-integral multiplicity {ip:?}")))?;
            if m != 0 {
                constituents.push((i, m));
            }
        }
        out.push(GelfandGraev { psi: a, values, constituents });
    }
    Ok(out)
}

/// Classes of regular unipotent elements: `(u - 1)^{n-1} != 0` and `u` of `p`-power order.
pub fn regular_unipotent_classes(g: &FiniteGroup) -> Result<Vec<usize>, OracleError> {
    let (field, n) = matrix_parts(g)?;
    let p = field.p();
    Ok(g.classes()
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            let mut o = c.order;
            while o % p == 0 {
                o /= p;
            }
            if o != 1 {
                return false;
            }
            let m = g.element(c.rep);
            let nil: Vec<Fe> = (0..n * n).map(|k| if k / n == k % n { field.sub(m[k], 1) } else { m[k] }).collect();
            let mut pow = nil.clone();
            for _ in 1..n - 1 {
                pow = g.kind.mul(&pow, &nil);
            }
            pow.iter().any(|&x| x != 0)
        })
        .map(|(i, _)| i)
        .collect())
}
