//! Dense linear algebra over a prime field `F_l` with `l < 2^31`.

use typea::arith::{factorize, is_prime, pow_mod};

#[derive(Clone, Copy, Debug)]
pub struct Modulus(pub u64);

impl Modulus {
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b) % self.0
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.0));
        pow_mod(a, self.0 - 2, self.0)
    }

    pub fn from_i64(self, a: i64) -> u64 {
        a.rem_euclid(self.0 as i64) as u64
    }

    /// Least generator of `F_l^*`.
    pub fn primitive_root(self) -> u64 {
        let l = self.0;
        let primes: Vec<u64> = factorize(l - 1).into_iter().map(|(p, _)| p).collect();
        (2..l).find(|&g| primes.iter().all(|&p| pow_mod(g, (l - 1) / p, l) != 1)).unwrap_or(1)
    }
}

/// Least prime `l > bound` with `l = 1 mod e`.
pub fn splitting_prime(e: u64, bound: u64) -> u64 {
    let mut l = (bound / e + 1) * e + 1;
    while !is_prime(l) {
        l += e;
    }
    l
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: Modulus, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = m.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = m.mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..ncols {
                    let v = m.sub(rows[i][j], m.mul(f, rows[r][j]));
                    rows[i][j] = v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of the right null space `{x : A x = 0}` of a square or rectangular matrix.
pub fn null_space(m: Modulus, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut rows = a.to_vec();
    let pivots = rref(m, &mut rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![0; ncols];
            x[f] = 1;
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = m.sub(0, rows[r][f]);
            }
            x
        })
        .collect()
}

/// Characteristic polynomial `det(xI - A)`, coefficients from the constant term up,
/// via reduction to upper Hessenberg form.
pub fn charpoly(m: Modulus, a: &[Vec<u64>]) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for c in 0..n.saturating_sub(2) {
        let Some(p) = (c + 1..n).find(|&i| h[i][c] != 0) else {
            continue;
        };
        if p != c + 1 {
            h.swap(p, c + 1);
            for row in h.iter_mut() {
                row.swap(p, c + 1);
            }
        }
        let inv = m.inv(h[c + 1][c]);
        for i in c + 2..n {
            let f = m.mul(h[i][c], inv);
            if f == 0 {
                continue;
            }
            // row_i -= f row_{c+1}; then col_{c+1} += f col_i
            for j in 0..n {
                let v = m.sub(h[i][j], m.mul(f, h[c + 1][j]));
                h[i][j] = v;
            }
            for row in h.iter_mut() {
                let v = m.add(row[c + 1], m.mul(f, row[i]));
                row[c + 1] = v;
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 0..n {
        let prev = &polys[k];
        let mut next = vec![0; k + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = m.add(next[d + 1], c);
            next[d] = m.sub(next[d], m.mul(h[k][k], c));
        }
        let mut prod = 1;
        for i in (0..k).rev() {
            prod = m.mul(prod, h[i + 1][i]);
            if prod == 0 {
                break;
            }
            let f = m.mul(h[i][k], prod);
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = m.sub(next[d], m.mul(f, c));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap_or_else(|| vec![1])
}

pub fn eval_poly(m: Modulus, p: &[u64], x: u64) -> u64 {
    p.iter().rev().fold(0, |acc, &c| m.add(m.mul(acc, x), c))
}

/// Roots in `F_l` with multiplicity ignored, by exhaustive evaluation.
pub fn roots(m: Modulus, p: &[u64]) -> Vec<u64> {
    (0..m.0).filter(|&x| eval_poly(m, p, x) == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_matches_small_cases() {
        let m = Modulus(101);
        // [[2,1],[1,2]] has charpoly x^2 - 4x + 3
        let p = charpoly(m, &[vec![2, 1], vec![1, 2]]);
        assert_eq!(p, vec![3, 97, 1]);
        let a = vec![vec![0, 0, 5], vec![1, 0, 0], vec![0, 1, 0]];
        // companion of x^3 - 5
        assert_eq!(charpoly(m, &a), vec![96, 0, 0, 1]);
        let b = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]];
        let p = charpoly(m, &b);
        // trace 16, det -3
        assert_eq!(p[2], m.from_i64(-16));
        assert_eq!(p[0], m.from_i64(3));
        assert_eq!(p[1], m.from_i64(-12));
    }

    #[test]
    fn null_space_and_prime() {
        let m = Modulus(7);
        let ns = null_space(m, &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!((v[0] + 2 * v[1] + 3 * v[2]) % 7, 0);
        }
        assert_eq!(splitting_prime(4, 10), 13);
        assert_eq!(Modulus(13).primitive_root(), 2);
    }
}
