//! Integer linear algebra: Smith normal form, finite abelian groups in
//! invariant-factor form, their homomorphisms, characters and subgroups.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cyclotomic::{Cyclotomic, QmodZ};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invariant factors {0:?} do not form a divisibility chain")]
    NotAChain(Vec<u64>),
    #[error("invariant factor 0 describes an infinite group")]
    Infinite,
    #[error("element {coords:?} does not belong to the group with factors {factors:?}")]
    OutOfRange { coords: Vec<u64>, factors: Vec<u64> },
    #[error("elements of different groups cannot be combined")]
    GroupMismatch,
    #[error("matrix of shape {rows}x{cols} does not define a homomorphism of these groups")]
    NotAHom { rows: usize, cols: usize },
    #[error("matrix is not square")]
    NotSquare,
}

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows of machine integers; all rows must share a length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Self::from_fn(rows.len(), cols, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn diagonal(entries: &[i64]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { BigInt::from(entries[i]) } else { BigInt::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn get_i64(&self, i: usize, j: usize) -> i64 {
        self.get(i, j).to_i64().expect("entry exceeds i64")
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// Submatrix keeping the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        Self::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> IntMatrix {
        Self::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<BigInt, LatticeError> {
        if self.rows != self.cols {
            return Err(LatticeError::NotSquare);
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&i| !a[i * n + k].is_zero()) {
                    Some(i) => {
                        for j in 0..n {
                            a.swap(k * n + j, i * n + j);
                        }
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        Ok(sign * &a[n * n - 1])
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + i, r * self.cols + j);
            }
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for c in 0..self.cols {
            let v = &self.data[src * self.cols + c] * k;
            self.data[dst * self.cols + c] += v;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for r in 0..self.rows {
            let v = &self.data[r * self.cols + src] * k;
            self.data[r * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -&self.data[i * self.cols + c];
            self.data[i * self.cols + c] = v;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            let v = -&self.data[r * self.cols + j];
            self.data[r * self.cols + j] = v;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Result of [`smith_normal_form`]: `u * m * v == s`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Snf {
    /// Diagonal entries of `s`, including trailing zeros up to `min(rows, cols)`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivots always on the nonzero entry of least absolute value in the
/// remaining block, ties broken by (row, col) order.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (r, c) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut v_inv = IntMatrix::identity(c);

    let mut t = 0;
    while t < r.min(c) {
        let Some((pi, pj)) = min_pivot(&a, t) else { break };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        u_inv.swap_cols(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);
        v_inv.swap_rows(t, pj);

        loop {
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..r {
                if !a.get(i, t).is_zero() {
                    let q = -(a.get(i, t) / &p);
                    if !q.is_zero() {
                        a.add_row(i, t, &q);
                        u.add_row(i, t, &q);
                        u_inv.add_col(t, i, &-&q);
                    }
                    dirty |= !a.get(i, t).is_zero();
                }
            }
            for j in t + 1..c {
                if !a.get(t, j).is_zero() {
                    let q = -(a.get(t, j) / &p);
                    if !q.is_zero() {
                        a.add_col(j, t, &q);
                        v.add_col(j, t, &q);
                        v_inv.add_row(t, j, &-&q);
                    }
                    dirty |= !a.get(t, j).is_zero();
                }
            }
            if !dirty {
                let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !a.get(i, j).is_multiple_of(&p)));
                match bad {
                    None => break,
                    Some(i) => {
                        let one = BigInt::one();
                        a.add_row(t, i, &one);
                        u.add_row(t, i, &one);
                        u_inv.add_col(i, t, &-&one);
                    }
                }
            }
            let (pi, pj) = min_pivot(&a, t).expect("block cannot vanish while reducing");
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        t += 1;
    }
    Snf { s: a, u, v, u_inv, v_inv }
}

fn min_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                best = Some((i, j, ax));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Basis (as columns) of the lattice spanned by the columns of `gens`.
pub fn lattice_basis(gens: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(gens);
    let d = snf.diagonal();
    let cols: Vec<usize> = (0..d.len()).filter(|&i| !d[i].is_zero()).collect();
    let mut b = snf.u_inv.select_columns(&cols);
    for (k, &i) in cols.iter().enumerate() {
        for row in 0..b.rows {
            let v = b.get(row, k) * &d[i];
            b.set(row, k, v);
        }
    }
    b
}

/// Basis (as columns) of the integer kernel `{x : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let cols: Vec<usize> = (rank..m.cols).collect();
    snf.v.select_columns(&cols)
}

/// Dense rational matrix for small change-of-basis computations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> BigRational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        Self::from_fn(m.rows, m.cols, |i, j| BigRational::from_integer(m.get(i, j).clone()))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { BigRational::one() } else { BigRational::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(k, j)).sum()
        })
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&i| !a.get(i, col).is_zero())?;
            for j in 0..n {
                a.data.swap(col * n + j, piv * n + j);
                inv.data.swap(col * n + j, piv * n + j);
            }
            let p = a.get(col, col).clone();
            for j in 0..n {
                a.data[col * n + j] = &a.data[col * n + j] / &p;
                inv.data[col * n + j] = &inv.data[col * n + j] / &p;
            }
            for i in 0..n {
                if i == col || a.get(i, col).is_zero() {
                    continue;
                }
                let f = a.get(i, col).clone();
                for j in 0..n {
                    let x = &a.data[col * n + j] * &f;
                    a.data[i * n + j] -= x;
                    let y = &inv.data[col * n + j] * &f;
                    inv.data[i * n + j] -= y;
                }
            }
        }
        Some(inv)
    }

    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&i| !a.get(i, col).is_zero()) else {
                return BigRational::zero();
            };
            if piv != col {
                for j in 0..n {
                    a.data.swap(col * n + j, piv * n + j);
                }
                det = -det;
            }
            let p = a.get(col, col).clone();
            det *= &p;
            for i in col + 1..n {
                let f = a.get(i, col) / &p;
                if f.is_zero() {
                    continue;
                }
                for j in col..n {
                    let x = &a.data[col * n + j] * &f;
                    a.data[i * n + j] -= x;
                }
            }
        }
        det
    }

    /// Converts to an integer matrix when every entry is integral.
    pub fn to_int(&self) -> Option<IntMatrix> {
        if self.data.iter().any(|x| !x.is_integer()) {
            return None;
        }
        Some(IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).to_integer()))
    }
}

/// Finite abelian group `Z/m_1 x ... x Z/m_k` with `m_1 | m_2 | ... | m_k`, all `m_i >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinAbGroup {
    invariant_factors: Vec<u64>,
}

impl FinAbGroup {
    /// Factors equal to 1 are dropped; the rest must form a divisibility chain.
    pub fn new(factors: &[u64]) -> Result<Self, LatticeError> {
        if factors.contains(&0) {
            return Err(LatticeError::Infinite);
        }
        let kept: Vec<u64> = factors.iter().copied().filter(|&m| m != 1).collect();
        if kept.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(LatticeError::NotAChain(factors.to_vec()));
        }
        Ok(FinAbGroup { invariant_factors: kept })
    }

    pub fn trivial() -> Self {
        FinAbGroup { invariant_factors: Vec::new() }
    }

    pub fn cyclic(m: u64) -> Self {
        Self::new(&[m]).expect("cyclic group of positive order")
    }

    /// Invariant-factor form of `Z/o_1 x ... x Z/o_k` for arbitrary positive orders.
    pub fn from_orders(orders: &[u64]) -> Result<Self, LatticeError> {
        let diag: Vec<i64> = orders.iter().map(|&o| o as i64).collect();
        Ok(Presentation::cokernel(&IntMatrix::diagonal(&diag))?.group)
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn exponent(&self) -> u64 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariant_factors.len() <= 1
    }

    pub fn contains(&self, coords: &[u64]) -> bool {
        coords.len() == self.rank() && coords.iter().zip(&self.invariant_factors).all(|(c, m)| c < m)
    }

    pub fn element(&self, coords: &[u64]) -> Result<AbElem, LatticeError> {
        if !self.contains(coords) {
            return Err(LatticeError::OutOfRange {
                coords: coords.to_vec(),
                factors: self.invariant_factors.clone(),
            });
        }
        Ok(AbElem { group: self.clone(), coords: coords.to_vec() })
    }

    /// Element from arbitrary integer coordinates, reduced modulo the factors.
    pub fn element_from_ints(&self, coords: &[i64]) -> AbElem {
        assert_eq!(coords.len(), self.rank());
        let c = coords
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&x, &m)| x.rem_euclid(m as i64) as u64)
            .collect();
        AbElem { group: self.clone(), coords: c }
    }

    pub fn zero(&self) -> AbElem {
        AbElem { group: self.clone(), coords: vec![0; self.rank()] }
    }

    /// The i-th standard generator.
    pub fn generator(&self, i: usize) -> AbElem {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        AbElem { group: self.clone(), coords: c }
    }

    /// All elements in mixed-radix order, first coordinate fastest.
    pub fn elements(&self) -> Vec<AbElem> {
        self.coordinate_tuples().into_iter().map(|c| AbElem { group: self.clone(), coords: c }).collect()
    }

    pub fn coordinate_tuples(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &m in &self.invariant_factors {
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for x in 0..m {
                for c in &out {
                    let mut c = c.clone();
                    c.push(x);
                    next.push(c);
                }
            }
            out = next;
        }
        // first coordinate fastest
        out.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
        out
    }

    /// The p'-part: each factor replaced by its largest divisor prime to `p`.
    pub fn p_prime_part(&self, p: u64) -> (FinAbGroup, Vec<u64>) {
        let moduli: Vec<u64> = self.invariant_factors.iter().map(|&m| p_prime(m, p)).collect();
        (FinAbGroup::new(&moduli).expect("p'-parts keep the chain"), moduli)
    }

    /// All subgroups, each as a sorted element list; deterministic order.
    pub fn subgroups(&self) -> Vec<AbSubgroup> {
        let mut seen: BTreeSet<Vec<Vec<u64>>> = BTreeSet::new();
        let mut frontier = vec![AbSubgroup::generated_by(self, &[])];
        seen.insert(frontier[0].elements.clone());
        let mut all = frontier.clone();
        let tuples = self.coordinate_tuples();
        while let Some(h) = frontier.pop() {
            for t in &tuples {
                if h.contains(t) {
                    continue;
                }
                let mut gens = h.generators.clone();
                gens.push(t.clone());
                let k = AbSubgroup::generated_by(self, &gens);
                if seen.insert(k.elements.clone()) {
                    all.push(k.clone());
                    frontier.push(k);
                }
            }
        }
        all.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        all
    }

    pub fn add_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.invariant_factors).map(|((x, y), m)| (x + y) % m).collect()
    }

    pub fn scale_coords(&self, a: &[u64], k: i64) -> Vec<u64> {
        a.iter()
            .zip(&self.invariant_factors)
            .map(|(&x, &m)| ((x as i128 * k as i128).rem_euclid(m as i128)) as u64)
            .collect()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|m| format!("Z/{m}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

pub(crate) fn p_prime(mut m: u64, p: u64) -> u64 {
    if p < 2 {
        return m;
    }
    while m.is_multiple_of(p) {
        m /= p;
    }
    m
}

/// Element of a [`FinAbGroup`], carried with its group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbElem {
    group: FinAbGroup,
    coords: Vec<u64>,
}

impl AbElem {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn add(&self, other: &AbElem) -> Result<AbElem, LatticeError> {
        if self.group != other.group {
            return Err(LatticeError::GroupMismatch);
        }
        Ok(AbElem { group: self.group.clone(), coords: self.group.add_coords(&self.coords, &other.coords) })
    }

    pub fn neg(&self) -> AbElem {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> AbElem {
        AbElem { group: self.group.clone(), coords: self.group.scale_coords(&self.coords, k) }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn order(&self) -> u64 {
        self.coords
            .iter()
            .zip(self.group.invariant_factors())
            .map(|(&c, &m)| m / c.gcd(&m))
            .fold(1, |acc, o| acc.lcm(&o))
    }
}

/// Group presentation `Z^n -> group`, from the cokernel of a relation matrix.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub group: FinAbGroup,
    /// `group.rank() x n`; entries reduced modulo the factors.
    pub projection: IntMatrix,
    /// `n x group.rank()`; column i lifts the i-th generator.
    pub lift: IntMatrix,
}

impl Presentation {
    /// Cokernel of the columns of `relations` inside `Z^n` (n = rows).
    pub fn cokernel(relations: &IntMatrix) -> Result<Presentation, LatticeError> {
        let n = relations.rows();
        let snf = smith_normal_form(relations);
        let diag = snf.diagonal();
        let mut keep = Vec::new();
        let mut factors = Vec::new();
        for i in 0..n {
            let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
            if d.is_zero() {
                return Err(LatticeError::Infinite);
            }
            if !d.is_one() {
                keep.push(i);
                factors.push(d.to_u64().expect("factor fits in u64"));
            }
        }
        let group = FinAbGroup { invariant_factors: factors.clone() };
        let mut projection = snf.u.select_rows(&keep);
        for (r, &m) in factors.iter().enumerate() {
            for c in 0..n {
                let v = projection.get(r, c).mod_floor(&BigInt::from(m));
                projection.set(r, c, v);
            }
        }
        let lift = snf.u_inv.select_columns(&keep);
        Ok(Presentation { group, projection, lift })
    }

    /// Torsion part of the cokernel, ignoring free summands.
    pub fn torsion_of_cokernel(relations: &IntMatrix) -> Presentation {
        let n = relations.rows();
        let snf = smith_normal_form(relations);
        let diag = snf.diagonal();
        let mut keep = Vec::new();
        let mut factors = Vec::new();
        for i in 0..n {
            if let Some(d) = diag.get(i) {
                if !d.is_zero() && !d.is_one() {
                    keep.push(i);
                    factors.push(d.to_u64().expect("factor fits in u64"));
                }
            }
        }
        let group = FinAbGroup { invariant_factors: factors.clone() };
        let mut projection = snf.u.select_rows(&keep);
        for (r, &m) in factors.iter().enumerate() {
            for c in 0..n {
                let v = projection.get(r, c).mod_floor(&BigInt::from(m));
                projection.set(r, c, v);
            }
        }
        let lift = snf.u_inv.select_columns(&keep);
        Presentation { group, projection, lift }
    }

    pub fn project(&self, v: &[BigInt]) -> Vec<u64> {
        self.projection
            .mul_vec(v)
            .iter()
            .zip(self.group.invariant_factors())
            .map(|(x, &m)| x.mod_floor(&BigInt::from(m)).to_u64().unwrap())
            .collect()
    }
}

/// Homomorphism given by a matrix sending source generators to target coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbHom {
    source: FinAbGroup,
    target: FinAbGroup,
    matrix: IntMatrix,
}

impl AbHom {
    pub fn new(source: FinAbGroup, target: FinAbGroup, matrix: IntMatrix) -> Result<Self, LatticeError> {
        if matrix.rows() != target.rank() || matrix.cols() != source.rank() {
            return Err(LatticeError::NotAHom { rows: matrix.rows(), cols: matrix.cols() });
        }
        for (j, &m) in source.invariant_factors().iter().enumerate() {
            for (i, &t) in target.invariant_factors().iter().enumerate() {
                if !(matrix.get(i, j) * BigInt::from(m)).is_multiple_of(&BigInt::from(t)) {
                    return Err(LatticeError::NotAHom { rows: matrix.rows(), cols: matrix.cols() });
                }
            }
        }
        let mut reduced = matrix;
        for (i, &t) in target.invariant_factors().iter().enumerate() {
            for j in 0..source.rank() {
                let v = reduced.get(i, j).mod_floor(&BigInt::from(t));
                reduced.set(i, j, v);
            }
        }
        Ok(AbHom { source, target, matrix: reduced })
    }

    pub fn identity(g: &FinAbGroup) -> Self {
        AbHom { source: g.clone(), target: g.clone(), matrix: IntMatrix::identity(g.rank()) }
    }

    /// Multiplication by an integer on a group.
    pub fn scalar(g: &FinAbGroup, k: i64) -> Self {
        let n = g.rank();
        AbHom::new(g.clone(), g.clone(), IntMatrix::from_fn(n, n, |i, j| if i == j { BigInt::from(k) } else { BigInt::zero() }))
            .expect("scalars are endomorphisms")
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, e: &AbElem) -> Result<AbElem, LatticeError> {
        if e.group != self.source {
            return Err(LatticeError::GroupMismatch);
        }
        Ok(AbElem { group: self.target.clone(), coords: self.apply_coords(&e.coords) })
    }

    pub(crate) fn apply_coords(&self, c: &[u64]) -> Vec<u64> {
        let v: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
        self.matrix
            .mul_vec(&v)
            .iter()
            .zip(self.target.invariant_factors())
            .map(|(x, &m)| x.mod_floor(&BigInt::from(m)).to_u64().unwrap())
            .collect()
    }

    pub fn compose(&self, inner: &AbHom) -> Result<AbHom, LatticeError> {
        if inner.target != self.source {
            return Err(LatticeError::GroupMismatch);
        }
        AbHom::new(inner.source.clone(), self.target.clone(), self.matrix.mul(&inner.matrix))
    }

    /// `self - other` for homomorphisms with the same source and target.
    pub fn sub(&self, other: &AbHom) -> Result<AbHom, LatticeError> {
        if self.source != other.source || self.target != other.target {
            return Err(LatticeError::GroupMismatch);
        }
        let m = IntMatrix::from_fn(self.matrix.rows(), self.matrix.cols(), |i, j| {
            self.matrix.get(i, j) - other.matrix.get(i, j)
        });
        AbHom::new(self.source.clone(), self.target.clone(), m)
    }
}

/// Kernel with its embedding and cokernel with its projection.
#[derive(Clone, Debug)]
pub struct HomInvariants {
    pub kernel: FinAbGroup,
    pub embedding: AbHom,
    pub cokernel: FinAbGroup,
    pub projection: AbHom,
}

/// Kernel and cokernel of a homomorphism, both in invariant-factor form.
///
/// For `h = phi - 1` the cokernel is `H^1(phi, G)` and the kernel is `G^phi`.
pub fn hom_invariants(h: &AbHom) -> HomInvariants {
    let k = h.source.rank();
    let tdiag: Vec<i64> = h.target.invariant_factors().iter().map(|&t| t as i64).collect();
    let sdiag: Vec<i64> = h.source.invariant_factors().iter().map(|&s| s as i64).collect();

    let relations = IntMatrix::diagonal(&tdiag).hcat(&h.matrix);
    let coker = Presentation::cokernel(&relations).expect("finite target has finite cokernel");
    let projection = AbHom::new(h.target.clone(), coker.group.clone(), coker.projection.clone())
        .expect("cokernel projection is a homomorphism");

    let (kernel, embedding) = if k == 0 {
        (FinAbGroup::trivial(), IntMatrix::zeros(0, 0))
    } else {
        // c in Z^k with M c in diag(t) Z^m
        let joined = h.matrix.hcat(&IntMatrix::diagonal(&tdiag));
        let ker = integer_kernel(&joined);
        let rows: Vec<usize> = (0..k).collect();
        let gens = ker.select_rows(&rows).hcat(&IntMatrix::diagonal(&sdiag));
        let basis = lattice_basis(&gens);
        let binv = RatMatrix::from_int(&basis).inverse().expect("kernel lattice has full rank");
        let rel = binv.mul(&RatMatrix::from_int(&IntMatrix::diagonal(&sdiag))).to_int().expect("source relations lie in kernel");
        let pres = Presentation::cokernel(&rel).expect("kernel is finite");
        let emb = basis.mul(&pres.lift);
        (pres.group, emb)
    };
    let embedding = AbHom::new(kernel.clone(), h.source.clone(), embedding).expect("kernel embedding is a homomorphism");
    HomInvariants { kernel, embedding, cokernel: coker.group, projection }
}

/// Linear character `e -> zeta_N^{sum e_i c_i N / m_i}` with `N` the exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AbChar {
    group: FinAbGroup,
    exponents: Vec<u64>,
}

impl AbChar {
    pub fn new(group: &FinAbGroup, exponents: &[u64]) -> Result<Self, LatticeError> {
        if !group.contains(exponents) {
            return Err(LatticeError::OutOfRange {
                coords: exponents.to_vec(),
                factors: group.invariant_factors().to_vec(),
            });
        }
        Ok(AbChar { group: group.clone(), exponents: exponents.to_vec() })
    }

    pub fn trivial(group: &FinAbGroup) -> Self {
        AbChar { group: group.clone(), exponents: vec![0; group.rank()] }
    }

    /// All characters of the group, in the group's element order.
    pub fn all(group: &FinAbGroup) -> Vec<AbChar> {
        group.coordinate_tuples().into_iter().map(|c| AbChar { group: group.clone(), exponents: c }).collect()
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&c| c == 0)
    }

    /// The value as an element of Q/Z.
    pub fn phase(&self, e: &AbElem) -> Result<QmodZ, LatticeError> {
        if e.group != self.group {
            return Err(LatticeError::GroupMismatch);
        }
        Ok(self.phase_coords(&e.coords))
    }

    pub fn phase_coords(&self, coords: &[u64]) -> QmodZ {
        let n = self.group.exponent();
        let mut acc: u128 = 0;
        for ((&c, &x), &m) in self.exponents.iter().zip(coords).zip(self.group.invariant_factors()) {
            acc += (c as u128 * x as u128 % m as u128) * (n / m) as u128;
        }
        QmodZ::new((acc % n as u128) as i64, n as i64)
    }

    pub fn eval(&self, e: &AbElem) -> Result<Cyclotomic, LatticeError> {
        Ok(Cyclotomic::from_phase(self.phase(e)?))
    }

    pub fn mul(&self, other: &AbChar) -> Result<AbChar, LatticeError> {
        if self.group != other.group {
            return Err(LatticeError::GroupMismatch);
        }
        Ok(AbChar { group: self.group.clone(), exponents: self.group.add_coords(&self.exponents, &other.exponents) })
    }

    pub fn conj(&self) -> AbChar {
        AbChar { group: self.group.clone(), exponents: self.group.scale_coords(&self.exponents, -1) }
    }

    /// Precomposition with a homomorphism into this character's group.
    pub fn pullback(&self, h: &AbHom) -> Result<AbChar, LatticeError> {
        if h.target != self.group {
            return Err(LatticeError::GroupMismatch);
        }
        // value on the j-th source generator, read as a character exponent
        let src = h.source.clone();
        let ex: Vec<u64> = (0..src.rank())
            .map(|j| {
                let img: Vec<u64> = (0..h.target.rank()).map(|i| h.matrix.get(i, j).to_u64().unwrap()).collect();
                let ph = self.phase_coords(&img);
                let m = src.invariant_factors()[j] as i64;
                let num = ph.numer() * m;
                debug_assert_eq!(num % ph.denom(), 0);
                (num / ph.denom()).rem_euclid(m) as u64
            })
            .collect();
        AbChar::new(&src, &ex)
    }
}

/// Subgroup of a finite abelian group, stored by generators and sorted elements.
/// Equality compares elements only.
#[derive(Clone, Debug)]
pub struct AbSubgroup {
    ambient: FinAbGroup,
    generators: Vec<Vec<u64>>,
    elements: Vec<Vec<u64>>,
}

impl PartialEq for AbSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.elements == other.elements
    }
}

impl Eq for AbSubgroup {}

impl std::hash::Hash for AbSubgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ambient.hash(state);
        self.elements.hash(state);
    }
}

impl AbSubgroup {
    pub fn generated_by(ambient: &FinAbGroup, generators: &[Vec<u64>]) -> Self {
        let zero = vec![0; ambient.rank()];
        let mut set: BTreeSet<Vec<u64>> = BTreeSet::new();
        set.insert(zero.clone());
        let mut frontier = vec![zero];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = ambient.add_coords(&x, g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        AbSubgroup { ambient: ambient.clone(), generators: generators.to_vec(), elements: set.into_iter().collect() }
    }

    pub fn whole(ambient: &FinAbGroup) -> Self {
        let gens: Vec<Vec<u64>> = (0..ambient.rank()).map(|i| ambient.generator(i).coords).collect();
        Self::generated_by(ambient, &gens)
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    pub fn generators(&self) -> &[Vec<u64>] {
        &self.generators
    }

    pub fn elements(&self) -> &[Vec<u64>] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, coords: &[u64]) -> bool {
        self.elements.binary_search_by(|e| e.as_slice().cmp(coords)).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &AbSubgroup) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    /// Subgroup generated by both.
    pub fn join(&self, other: &AbSubgroup) -> AbSubgroup {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        AbSubgroup::generated_by(&self.ambient, &gens)
    }

    /// Isomorphism type of the subgroup.
    pub fn structure(&self) -> FinAbGroup {
        self.presentation().0
    }

    /// Invariant-factor form together with the embedding into the ambient group.
    pub fn presentation(&self) -> (FinAbGroup, AbHom) {
        let g = self.generators.len();
        if g == 0 {
            let triv = FinAbGroup::trivial();
            let emb = AbHom::new(triv.clone(), self.ambient.clone(), IntMatrix::zeros(self.ambient.rank(), 0)).unwrap();
            return (triv, emb);
        }
        let orders: Vec<u64> = self
            .generators
            .iter()
            .map(|c| AbElem { group: self.ambient.clone(), coords: c.clone() }.order())
            .collect();
        // free presentation of the source, then the kernel of the map onto the subgroup
        let rank = self.ambient.rank();
        let gens = IntMatrix::from_fn(rank, g, |i, j| BigInt::from(self.generators[j][i]));
        let tdiag: Vec<i64> = self.ambient.invariant_factors().iter().map(|&t| t as i64).collect();
        let joined = gens.hcat(&IntMatrix::diagonal(&tdiag));
        let ker = integer_kernel(&joined);
        let rows: Vec<usize> = (0..g).collect();
        let odiag: Vec<i64> = orders.iter().map(|&o| o as i64).collect();
        let rel = lattice_basis(&ker.select_rows(&rows).hcat(&IntMatrix::diagonal(&odiag)));
        let pres = Presentation::cokernel(&rel).expect("subgroup is finite");
        let emb = gens.mul(&pres.lift);
        let hom = AbHom::new(pres.group.clone(), self.ambient.clone(), emb).expect("embedding respects orders");
        (pres.group, hom)
    }

    /// Isomorphism type of `ambient / self`.
    pub fn quotient_structure(&self) -> FinAbGroup {
        let rank = self.ambient.rank();
        let tdiag: Vec<i64> = self.ambient.invariant_factors().iter().map(|&t| t as i64).collect();
        let gens = IntMatrix::from_fn(rank, self.generators.len(), |i, j| BigInt::from(self.generators[j][i]));
        Presentation::cokernel(&IntMatrix::diagonal(&tdiag).hcat(&gens)).expect("quotient is finite").group
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_snf(m: &IntMatrix) -> Snf {
        let snf = smith_normal_form(m);
        assert_eq!(snf.u.mul(m).mul(&snf.v), snf.s);
        assert_eq!(snf.u.mul(&snf.u_inv), IntMatrix::identity(m.rows()));
        assert_eq!(snf.v.mul(&snf.v_inv), IntMatrix::identity(m.cols()));
        assert!(snf.s.is_diagonal());
        snf
    }

    #[test]
    fn snf_examples() {
        let s = check_snf(&IntMatrix::identity(2));
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(2));
        let s = check_snf(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.s, IntMatrix::diagonal(&[2, 4]));
        let s = check_snf(&IntMatrix::from_rows(&[vec![3]]));
        assert_eq!(s.s, IntMatrix::diagonal(&[3]));
        let cartan = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(check_snf(&cartan).diagonal(), vec![1.into(), 1.into(), 4.into()]);
        check_snf(&IntMatrix::zeros(0, 3));
        check_snf(&IntMatrix::zeros(2, 0));
    }

    #[test]
    fn group_normalization() {
        assert_eq!(FinAbGroup::new(&[1, 2, 4]).unwrap().invariant_factors(), &[2, 4]);
        assert!(FinAbGroup::new(&[2, 3]).is_err());
        assert_eq!(FinAbGroup::from_orders(&[2, 3]).unwrap(), FinAbGroup::cyclic(6));
        assert_eq!(FinAbGroup::from_orders(&[4, 6]).unwrap().invariant_factors(), &[2, 12]);
    }

    #[test]
    fn h1_examples() {
        let z2 = FinAbGroup::cyclic(2);
        let h = AbHom::scalar(&z2, 3).sub(&AbHom::identity(&z2)).unwrap();
        let inv = hom_invariants(&h);
        assert_eq!(inv.cokernel, z2);
        assert_eq!(inv.kernel, z2);

        let z4 = FinAbGroup::cyclic(4);
        let h = AbHom::scalar(&z4, -3).sub(&AbHom::identity(&z4)).unwrap();
        assert_eq!(hom_invariants(&h).cokernel, z4);

        let g = FinAbGroup::new(&[2, 6]).unwrap();
        let zero = AbHom::identity(&g).sub(&AbHom::identity(&g)).unwrap();
        let inv = hom_invariants(&zero);
        assert_eq!(inv.cokernel, g);
        assert_eq!(inv.kernel, g);
    }

    #[test]
    fn kernel_embedding_lands_in_kernel() {
        let g = FinAbGroup::new(&[2, 12]).unwrap();
        let m = IntMatrix::from_rows(&[vec![1, 1], vec![6, 5]]);
        let h = AbHom::new(g.clone(), g.clone(), m).unwrap();
        let inv = hom_invariants(&h);
        let brute = g.elements().iter().filter(|e| h.apply(e).unwrap().is_zero()).count() as u64;
        assert_eq!(inv.kernel.order(), brute);
        for e in inv.kernel.elements() {
            let x = inv.embedding.apply(&e).unwrap();
            assert!(h.apply(&x).unwrap().is_zero());
        }
        let image: BTreeSet<_> = inv.kernel.elements().iter().map(|e| inv.embedding.apply(e).unwrap()).collect();
        assert_eq!(image.len() as u64, brute);
    }

    #[test]
    fn pairing_examples() {
        let z4 = FinAbGroup::cyclic(4);
        let triv = AbChar::trivial(&z4);
        assert_eq!(triv.eval(&z4.generator(0)).unwrap(), Cyclotomic::one());
        let id = AbChar::new(&z4, &[1]).unwrap();
        assert_eq!(id.eval(&z4.generator(0)).unwrap(), Cyclotomic::i());
        let z2 = FinAbGroup::cyclic(2);
        let sign = AbChar::new(&z2, &[1]).unwrap();
        assert_eq!(sign.eval(&z2.generator(0)).unwrap(), Cyclotomic::from_int(-1));
        assert!(sign.eval(&z4.generator(0)).is_err());
        assert!(z4.element(&[4]).is_err());
    }

    #[test]
    fn subgroups_of_z6() {
        let z6 = FinAbGroup::cyclic(6);
        let subs = z6.subgroups();
        assert_eq!(subs.iter().map(AbSubgroup::order).collect::<Vec<_>>(), vec![1, 2, 3, 6]);
        let h = AbSubgroup::generated_by(&z6, &[vec![2], vec![4]]);
        assert_eq!(h.structure(), FinAbGroup::cyclic(3));
        assert_eq!(h.quotient_structure(), FinAbGroup::cyclic(2));
        let k = FinAbGroup::new(&[2, 4]).unwrap();
        assert_eq!(k.subgroups().len(), 8);
    }
}
