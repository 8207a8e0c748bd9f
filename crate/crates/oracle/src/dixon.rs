//! Character tables by Dixon's method: simultaneous eigenvectors of the class
//! multiplication matrices modulo a prime `l = 1 mod exp(G)`, lifted to exact
//! cyclotomic values through eigenvalue multiplicities on cyclic subgroups.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use typea::arith::pow_mod;
use typea::cyclotomic::Cyclotomic;

use crate::group::{Elem, FiniteGroup};
use crate::modp::{charpoly, null_space, roots, rref, splitting_prime, Modulus};
use crate::OracleError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub rep: Elem,
    pub size: u64,
    pub order: u64,
}

/// An exact character table; columns follow the group's class order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharTable {
    pub group_order: u64,
    pub classes: Vec<ClassInfo>,
    pub characters: Vec<Vec<Cyclotomic>>,
}

impl CharTable {
    pub fn degrees(&self) -> Vec<u64> {
        self.characters
            .iter()
            .map(|row| row[0].to_integer().and_then(|d| u64::try_from(d).ok()).expect("degrees are positive integers"))
            .collect()
    }

    /// `<f, g> = |G|^{-1} sum_C |C| f(C) conj(g(C))`.
    pub fn inner_product(&self, f: &[Cyclotomic], g: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for ((c, x), y) in self.classes.iter().zip(f).zip(g) {
            acc = acc.add_ref(&x.mul_ref(&y.conj()).scale_int(c.size as i64));
        }
        acc.scale(&BigRational::new(BigInt::from(1), BigInt::from(self.group_order)))
    }

    /// Row orthonormality and column orthogonality, both exact.
    pub fn verify_orthogonality(&self, inverse_classes: &[usize]) -> Result<(), OracleError> {
        let k = self.classes.len();
        if self.characters.len() != k {
            return Err(OracleError::Table(format!("{} characters for {k} classes", self.characters.len())));
        }
        for i in 0..k {
            for j in i..k {
                let ip = self.inner_product(&self.characters[i], &self.characters[j]);
                let want = i64::from(i == j);
                if ip.to_integer() != Some(BigInt::from(want)) {
                    return Err(OracleError::Table(format!("rows {i}, {j} have inner product {ip:?}")));
                }
            }
        }
        for a in 0..k {
            for b in 0..k {
                let mut acc = Cyclotomic::zero();
                for row in &self.characters {
                    acc = acc.add_ref(&row[a].mul_ref(&row[b]));
                }
                // sum_chi chi(g_a) chi(g_b) = |C_G(g_a)| when g_b ~ g_a^{-1}
                let want = if inverse_classes[a] == b { (self.group_order / self.classes[a].size) as i64 } else { 0 };
                if acc.to_integer() != Some(BigInt::from(want)) {
                    return Err(OracleError::Table(format!("columns {a}, {b} fail orthogonality")));
                }
            }
        }
        Ok(())
    }
}

/// `c[i][j][k] = #{(x, y) in C_i x C_j : x y = g_k}`.
fn class_coefficients(g: &FiniteGroup) -> Vec<Vec<Vec<u64>>> {
    let k = g.classes().len();
    let mut c = vec![vec![vec![0u64; k]; k]; k];
    for (t, cl) in g.classes().iter().enumerate() {
        for x in 0..g.order() {
            let y = g.mul_idx(g.inverse_idx(x), cl.rep);
            c[g.class_of(x)][g.class_of(y)][t] += 1;
        }
    }
    c
}

/// Split a subspace (rows in reduced echelon form) by the eigenspaces of `mat`.
fn split(m: Modulus, basis: &[Vec<u64>], pivots: &[usize], mat: &[Vec<u64>]) -> Option<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let k = mat.len();
    // image of basis vector b_c under mat, in coordinates b_c -> (M b_c)[pivots]
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| (0..k).map(|r| (0..k).fold(0, |acc, s| m.add(acc, m.mul(mat[r][s], b[s])))).collect())
        .collect();
    let a: Vec<Vec<u64>> = (0..d).map(|r| (0..d).map(|c| images[c][pivots[r]]).collect()).collect();
    let poly = charpoly(m, &a);
    let mut pieces = Vec::new();
    let mut total = 0;
    for lambda in roots(m, &poly) {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|r| (0..d).map(|c| if r == c { m.sub(a[r][c], lambda) } else { a[r][c] }).collect())
            .collect();
        let coords = null_space(m, &shifted);
        total += coords.len();
        let vecs: Vec<Vec<u64>> = coords
            .iter()
            .map(|x| (0..k).map(|s| (0..d).fold(0, |acc, c| m.add(acc, m.mul(x[c], basis[c][s])))).collect())
            .collect();
        pieces.push(vecs);
    }
    (total == d).then_some(pieces)
}

/// The full character table of `g`, verified by the orthogonality relations.
pub fn character_table(g: &FiniteGroup) -> Result<CharTable, OracleError> {
    let classes = g.classes();
    let k = classes.len();
    let order = g.order() as u64;
    let e = g.exponent();
    let bound = 2 * ((order as f64).sqrt().ceil() as u64) + 1;
    let l = splitting_prime(e, bound);
    let m = Modulus(l);
    let coeff = class_coefficients(g);
    let inverse = g.inverse_classes();
    let sizes: Vec<u64> = classes.iter().map(|c| c.size as u64).collect();

    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect()];
    for i in 1..k {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mat: Vec<Vec<u64>> = (0..k).map(|j| (0..k).map(|t| coeff[i][j][t] % l).collect()).collect();
        let mut next = Vec::new();
        for mut s in spaces {
            if s.len() == 1 {
                next.push(s);
                continue;
            }
            let pivots = rref(m, &mut s);
            let pieces = split(m, &s, &pivots, &mat)
                .ok_or_else(|| OracleError::Table(format!("class matrix {i} is not split modulo {l}")))?;
            next.extend(pieces);
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(OracleError::Table(format!("{} simultaneous eigenvectors for {k} classes", spaces.len())));
    }

    let z = pow_mod(m.primitive_root(), (l - 1) / e, l);
    let powers = g.power_maps();
    let mut rows = Vec::with_capacity(k);
    for s in spaces {
        let w0 = &s[0];
        let scale = m.inv(w0[0]);
        let w: Vec<u64> = w0.iter().map(|&x| m.mul(x, scale)).collect();
        // sum_j w_j w_{j*} / h_j = |G| / chi(1)^2
        let sum = (0..k).fold(0, |acc, j| m.add(acc, m.mul(m.mul(w[j], w[inverse[j]]), m.inv(sizes[j] % l))));
        let d2 = m.mul(order % l, m.inv(sum));
        let d = (1..=((order as f64).sqrt() as u64 + 1))
            .find(|&d| d * d % l == d2 && order.is_multiple_of(d))
            .ok_or_else(|| OracleError::Table(format!("no degree with square {d2} mod {l}")))?;
        let modvals: Vec<u64> = (0..k).map(|j| m.mul(m.mul(d % l, w[j]), m.inv(sizes[j] % l))).collect();
        let mut row = Vec::with_capacity(k);
        for (j, cl) in classes.iter().enumerate() {
            let o = cl.order;
            let zo = pow_mod(z, e / o, l);
            let oinv = m.inv(o % l);
            let mut counts = Vec::with_capacity(o as usize);
            for r in 0..o {
                let mut acc = 0;
                for t in 0..o {
                    let root = pow_mod(zo, (o - r * t % o) % o, l);
                    acc = m.add(acc, m.mul(modvals[powers[j][t as usize]], root));
                }
                let mult = m.mul(acc, oinv);
                if mult > d {
                    return Err(OracleError::Table(format!("eigenvalue multiplicity {mult} exceeds degree {d}")));
                }
                counts.push(mult as i64);
            }
            row.push(Cyclotomic::from_exponent_counts(o, &counts).map_err(|e| OracleError::Table(e.to_string()))?);
        }
        rows.push(row);
    }
    rows.sort_by_cached_key(|row| {
        let d = row[0].to_integer().unwrap_or_default();
        (d, serde_json::to_string(row).unwrap_or_default())
    });
    let table = CharTable {
        group_order: order,
        classes: classes
            .iter()
            .map(|c| ClassInfo { rep: g.element(c.rep).clone(), size: c.size as u64, order: c.order })
            .collect(),
        characters: rows,
    };
    table.verify_orthogonality(&inverse)?;
    Ok(table)
}
