//! Based root data of type A: `SL_n`, `SU_n`, quotients `SL_n / mu_d`,
//! products of such factors, and their standard Levi subdata.
//!
//! `X ⊗ Q` is written in the basis of simple roots and `Y ⊗ Q` in the dual
//! basis of fundamental coweights, so the pairing is the dot product of
//! those coordinate vectors.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::prime_power;
use crate::lattice::{lattice_basis, IntMatrix, RatMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootDatumError {
    #[error("lattice index {d} does not divide n = {n}")]
    IndexNotDivisor { n: usize, d: u64 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("factor rank n must be at least 1, got {0}")]
    BadRank(usize),
    #[error("factor permutation {0:?} is not a permutation of the factors")]
    BadPermutation(Vec<usize>),
    #[error("factor permutation must preserve factor sizes")]
    SizeMismatch,
    #[error("Frobenius does not preserve the character lattice")]
    NotIntegral,
    #[error("simple root index {0} out of range")]
    BadRoot(usize),
    #[error("composition {0:?} does not sum to {1}")]
    BadComposition(Vec<usize>, usize),
}

/// Standard Levi label: a subset of global simple-root indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LeviLabel(pub BTreeSet<usize>);

impl LeviLabel {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        LeviLabel(indices.into_iter().collect())
    }

    pub fn empty() -> Self {
        LeviLabel(BTreeSet::new())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &LeviLabel) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersection(&self, other: &LeviLabel) -> LeviLabel {
        LeviLabel(self.0.intersection(&other.0).copied().collect())
    }

    /// Label of the block-diagonal Levi of `GL_n`-type with the given block sizes,
    /// for a single factor whose roots start at index 0.
    pub fn from_composition(n: usize, blocks: &[usize]) -> Result<Self, RootDatumError> {
        if blocks.iter().sum::<usize>() != n || blocks.contains(&0) {
            return Err(RootDatumError::BadComposition(blocks.to_vec(), n));
        }
        let mut cuts = BTreeSet::new();
        let mut acc = 0;
        for &b in &blocks[..blocks.len() - 1] {
            acc += b;
            cuts.insert(acc - 1);
        }
        Ok(LeviLabel((0..n.saturating_sub(1)).filter(|i| !cuts.contains(i)).collect()))
    }
}

impl fmt::Display for LeviLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("a{}", i + 1)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Based root datum of a semisimple group all of whose factors have type A.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatumA {
    factors: Vec<usize>,
    lattice_index: u64,
    /// Columns: basis of X in simple-root coordinates.
    x_basis: RatMatrix,
    /// Column j: simple root j in X coordinates.
    roots_x: IntMatrix,
    /// Column j: simple coroot j in Y coordinates.
    coroots_y: IntMatrix,
    /// Simple roots of this datum (all of them unless it is a Levi subdatum).
    base: Vec<usize>,
}

/// Frobenius `F = q phi_0` together with the permutation data defining `phi_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusData {
    pub q: u64,
    pub p: u64,
    pub r: u32,
    /// Per factor: whether `phi_0` composes with the graph flip on it.
    pub twisted: Vec<bool>,
    /// `phi_0` sends factor `i` to factor `component_permutation[i]`.
    pub component_permutation: Vec<usize>,
    /// `phi_0` on global simple-root indices.
    pub phi0_perm: Vec<usize>,
    /// `phi_0` on X coordinates.
    pub phi0_x: IntMatrix,
}

impl FrobeniusData {
    /// Order of `phi_0`.
    pub fn phi0_order(&self) -> usize {
        let n = self.phi0_perm.len();
        let mut k = 1;
        loop {
            if (0..n).all(|i| apply_times(&self.phi0_perm, i, k) == i) {
                return k;
            }
            k += 1;
        }
    }

    /// `epsilon q`-style scalar for single-factor groups: `q` if split, `-q` if twisted.
    pub fn eps_q(&self) -> i64 {
        if self.twisted.first().copied().unwrap_or(false) {
            -(self.q as i64)
        } else {
            self.q as i64
        }
    }

    /// Orbits of `phi_0` on the simple roots, each listed from its least element.
    pub fn root_orbits(&self) -> Vec<Vec<usize>> {
        perm_orbits(&self.phi0_perm)
    }

    /// Orbits of `phi_0` on the factors.
    pub fn factor_orbits(&self) -> Vec<Vec<usize>> {
        perm_orbits(&self.component_permutation)
    }
}

fn apply_times(perm: &[usize], mut i: usize, k: usize) -> usize {
    for _ in 0..k {
        i = perm[i];
    }
    i
}

pub(crate) fn perm_orbits(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            orbit.push(i);
            i = perm[i];
        }
        out.push(orbit);
    }
    out
}

pub(crate) fn perm_sign(perm: &[usize]) -> i64 {
    perm_orbits(perm).iter().map(|o| if o.len() % 2 == 0 { -1 } else { 1 }).product()
}

/// Cartan matrix of `A_{n_1 - 1} x ... x A_{n_k - 1}`, entry `(i, j) = <alpha_i, alpha_j^vee>`.
pub fn cartan_matrix(factors: &[usize]) -> IntMatrix {
    let ell: usize = factors.iter().map(|n| n - 1).sum();
    let mut c = IntMatrix::zeros(ell, ell);
    let mut off = 0;
    for &n in factors {
        for i in 0..n - 1 {
            c.set(off + i, off + i, BigInt::from(2));
            if i + 1 < n - 1 {
                c.set(off + i, off + i + 1, BigInt::from(-1));
                c.set(off + i + 1, off + i, BigInt::from(-1));
            }
        }
        off += n - 1;
    }
    c
}

impl RootDatumA {
    fn from_x_generators(factors: Vec<usize>, lattice_index: u64, gens: &IntMatrix, denom: i64) -> Self {
        // gens are denom * (vectors in root coordinates)
        let basis_scaled = lattice_basis(gens);
        let ell = basis_scaled.rows();
        let d = BigRational::from_integer(BigInt::from(denom));
        let x_basis = RatMatrix::from_fn(ell, ell, |i, j| BigRational::from_integer(basis_scaled.get(i, j).clone()) / &d);
        let binv = x_basis.inverse().expect("X has full rank");
        let roots_x = binv.to_int().expect("roots lie in X");
        let cartan = RatMatrix::from_int(&cartan_matrix(&factors));
        let coroots_y = x_basis.transpose().mul(&cartan).to_int().expect("coroots lie in Y");
        RootDatumA { factors, lattice_index, x_basis, roots_x, coroots_y, base: (0..ell).collect() }
    }

    /// Weight coordinates (in the root basis) of the fundamental weights, scaled by `det`.
    fn scaled_fundamental_weights(factors: &[usize]) -> (IntMatrix, i64) {
        let c = RatMatrix::from_int(&cartan_matrix(factors));
        let cinv = c.inverse().expect("Cartan matrix is invertible");
        let den = factors.iter().fold(1i64, |acc, &n| num_integer::lcm(acc, n as i64));
        let ell = cinv.rows();
        let scaled = IntMatrix::from_fn(ell, ell, |i, j| {
            (cinv.get(i, j) * BigRational::from_integer(BigInt::from(den))).to_integer()
        });
        (scaled, den)
    }

    /// Datum of `SL_n / mu_d`.
    pub fn sl_quotient(n: usize, d: u64) -> Result<Self, RootDatumError> {
        if n < 1 {
            return Err(RootDatumError::BadRank(n));
        }
        if d == 0 || !(n as u64).is_multiple_of(d) {
            return Err(RootDatumError::IndexNotDivisor { n, d });
        }
        let ell = n - 1;
        let (w, den) = Self::scaled_fundamental_weights(&[n]);
        // generators: den * alpha_i and den * d * varpi_1
        let mut gens = IntMatrix::zeros(ell, ell + 1);
        for i in 0..ell {
            gens.set(i, i, BigInt::from(den));
            gens.set(i, ell, w.get(i, 0) * BigInt::from(d));
        }
        Ok(Self::from_x_generators(vec![n], d, &gens, den))
    }

    /// Simply connected datum for a product of `SL_{n_i}`.
    pub fn simply_connected(factors: &[usize]) -> Result<Self, RootDatumError> {
        if let Some(&n) = factors.iter().find(|&&n| n < 1) {
            return Err(RootDatumError::BadRank(n));
        }
        let ell: usize = factors.iter().map(|n| n - 1).sum();
        let (w, den) = Self::scaled_fundamental_weights(factors);
        let gens = if ell == 0 { IntMatrix::zeros(0, 0) } else { w };
        Ok(Self::from_x_generators(factors.to_vec(), 1, &gens, den))
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn lattice_index(&self) -> u64 {
        self.lattice_index
    }

    /// Number of simple roots of the ambient group.
    pub fn ambient_rank(&self) -> usize {
        self.roots_x.cols()
    }

    /// Simple roots of this datum, as global indices.
    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Semisimple rank.
    pub fn semisimple_rank(&self) -> usize {
        self.base.len()
    }

    /// First global index of each factor.
    pub fn factor_offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.factors.len());
        let mut off = 0;
        for &n in &self.factors {
            out.push(off);
            off += n - 1;
        }
        out
    }

    /// (factor, position within factor) of a global simple-root index.
    pub fn locate(&self, i: usize) -> (usize, usize) {
        let mut off = 0;
        for (f, &n) in self.factors.iter().enumerate() {
            if i < off + n - 1 {
                return (f, i - off);
            }
            off += n - 1;
        }
        panic!("simple root index {i} out of range")
    }

    pub fn x_basis(&self) -> &RatMatrix {
        &self.x_basis
    }

    /// All ambient simple roots in X coordinates (columns).
    pub fn roots_x(&self) -> &IntMatrix {
        &self.roots_x
    }

    /// All ambient simple coroots in Y coordinates (columns).
    pub fn coroots_y(&self) -> &IntMatrix {
        &self.coroots_y
    }

    /// Simple roots of this datum in X coordinates (columns, in base order).
    pub fn simple_roots(&self) -> IntMatrix {
        self.roots_x.select_columns(&self.base)
    }

    pub fn simple_coroots(&self) -> IntMatrix {
        self.coroots_y.select_columns(&self.base)
    }

    /// `<x, y>` for X and Y coordinate vectors.
    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        x.iter().zip(y).map(|(a, b)| a * b).sum()
    }

    /// Matrix `(<alpha_i, alpha_j^vee>)` over the base.
    pub fn cartan(&self) -> IntMatrix {
        let r = self.simple_roots();
        let c = self.simple_coroots();
        r.transpose().mul(&c)
    }

    /// `<x, varpi_alpha^vee>` for `x` in X coordinates: the alpha-th root coordinate.
    pub fn root_coordinates(&self, x: &[BigInt]) -> Vec<BigRational> {
        let ell = self.ambient_rank();
        (0..ell)
            .map(|i| (0..ell).map(|j| self.x_basis.get(i, j) * BigRational::from_integer(x[j].clone())).sum())
            .collect()
    }

    /// Levi subdatum with base `I`; X and Y are unchanged.
    pub fn levi_subdatum(&self, levi: &LeviLabel) -> Result<RootDatumA, RootDatumError> {
        if let Some(&i) = levi.0.iter().find(|&&i| i >= self.ambient_rank()) {
            return Err(RootDatumError::BadRoot(i));
        }
        let mut sub = self.clone();
        sub.base = levi.0.iter().copied().collect();
        Ok(sub)
    }

    /// Label of the full base.
    pub fn full_label(&self) -> LeviLabel {
        LeviLabel::new(self.base.iter().copied())
    }

    /// Per-factor compositions of the Levi with base `levi`.
    pub fn composition(&self, levi: &LeviLabel) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut off = 0;
        for &n in &self.factors {
            let mut blocks = Vec::new();
            let mut cur = 1;
            for j in 0..n - 1 {
                if levi.contains(off + j) {
                    cur += 1;
                } else {
                    blocks.push(cur);
                    cur = 1;
                }
            }
            blocks.push(cur);
            out.push(blocks);
            off += n - 1;
        }
        out
    }

    /// Levi label from per-factor compositions.
    pub fn label_from_compositions(&self, comps: &[Vec<usize>]) -> Result<LeviLabel, RootDatumError> {
        let mut set = BTreeSet::new();
        for ((&n, comp), off) in self.factors.iter().zip(comps).zip(self.factor_offsets()) {
            let l = LeviLabel::from_composition(n, comp)?;
            set.extend(l.0.iter().map(|i| i + off));
        }
        Ok(LeviLabel(set))
    }
}

/// `(datum, Frobenius)` for `SL_n / mu_d` over `F_q`, split or unitary.
pub fn build_group(n: usize, d: u64, q: u64, twisted: bool) -> Result<(RootDatumA, FrobeniusData), RootDatumError> {
    let datum = RootDatumA::sl_quotient(n, d)?;
    let frob = frobenius_for(&datum, q, &[twisted], &[0])?;
    Ok((datum, frob))
}

/// `(datum, Frobenius)` for a product of simply connected factors; `phi_0` sends
/// factor `i` to factor `perm[i]`, composing with the graph flip where `twisted[i]`.
pub fn build_product(
    factors: &[usize],
    q: u64,
    twisted: &[bool],
    perm: &[usize],
) -> Result<(RootDatumA, FrobeniusData), RootDatumError> {
    let datum = RootDatumA::simply_connected(factors)?;
    let frob = frobenius_for(&datum, q, twisted, perm)?;
    Ok((datum, frob))
}

fn frobenius_for(datum: &RootDatumA, q: u64, twisted: &[bool], perm: &[usize]) -> Result<FrobeniusData, RootDatumError> {
    let (p, r) = prime_power(q).ok_or(RootDatumError::NotPrimePower(q))?;
    let k = datum.factors.len();
    let mut sorted = perm.to_vec();
    sorted.sort_unstable();
    if perm.len() != k || twisted.len() != k || sorted != (0..k).collect::<Vec<_>>() {
        return Err(RootDatumError::BadPermutation(perm.to_vec()));
    }
    if (0..k).any(|i| datum.factors[i] != datum.factors[perm[i]]) {
        return Err(RootDatumError::SizeMismatch);
    }
    let offs = datum.factor_offsets();
    let ell = datum.ambient_rank();
    let mut phi0_perm = vec![0; ell];
    for i in 0..ell {
        let (f, j) = datum.locate(i);
        let n = datum.factors[f];
        let j2 = if twisted[f] { n - 2 - j } else { j };
        phi0_perm[i] = offs[perm[f]] + j2;
    }
    // phi_0 on root coordinates is the permutation matrix; conjugate into X coordinates
    let pmat = RatMatrix::from_fn(ell, ell, |a, b| {
        if phi0_perm[b] == a {
            BigRational::one()
        } else {
            BigRational::zero()
        }
    });
    let binv = datum.x_basis.inverse().expect("X basis invertible");
    let phi0_x = binv.mul(&pmat).mul(&datum.x_basis).to_int().ok_or(RootDatumError::NotIntegral)?;
    Ok(FrobeniusData {
        q,
        p,
        r,
        twisted: twisted.to_vec(),
        component_permutation: perm.to_vec(),
        phi0_perm,
        phi0_x,
    })
}

/// `(epsilon, eta)`: determinant of `phi_0` on `X ⊗ Q`, and on the span of the datum's roots.
///
/// For a Levi subdatum whose base is not `phi_0`-stable, `eta` is reported as the
/// sign of `phi_0` restricted to the largest stable subset of the base.
pub fn frobenius_sign(datum: &RootDatumA, frob: &FrobeniusData) -> (i64, i64) {
    let eps = RatMatrix::from_int(&frob.phi0_x).det().to_integer().to_i64().expect("determinant is a sign");
    let base: BTreeSet<usize> = datum.base.iter().copied().collect();
    let stable: Vec<usize> = base.iter().copied().filter(|&i| base.contains(&frob.phi0_perm[i])).collect();
    let idx: std::collections::BTreeMap<usize, usize> = stable.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let restricted: Vec<usize> = stable.iter().map(|&i| idx.get(&frob.phi0_perm[i]).copied().unwrap_or(idx[&i])).collect();
    (eps, perm_sign(&restricted))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_split() {
        let (d, f) = build_group(2, 1, 3, false).unwrap();
        assert_eq!(d.cartan(), IntMatrix::from_rows(&[vec![2]]));
        assert_eq!(f.phi0_perm, vec![0]);
        assert_eq!(frobenius_sign(&d, &f), (1, 1));
    }

    #[test]
    fn su3_swaps() {
        let (d, f) = build_group(3, 1, 2, true).unwrap();
        assert_eq!(f.phi0_perm, vec![1, 0]);
        assert_eq!(frobenius_sign(&d, &f), (-1, -1));
        let (d, f) = build_group(2, 1, 2, true).unwrap();
        assert_eq!(frobenius_sign(&d, &f), (1, 1));
    }

    #[test]
    fn pairing_is_cartan() {
        for (n, dd) in [(4, 2), (6, 3), (6, 2), (5, 1), (4, 4)] {
            let (d, _) = build_group(n, dd, 5, true).unwrap();
            assert_eq!(d.cartan(), cartan_matrix(&[n]));
        }
    }

    #[test]
    fn sl4_mod_mu2_contains_varpi2() {
        let d = RootDatumA::sl_quotient(4, 2).unwrap();
        // varpi_2 = (1/2, 1, 1/2) in root coordinates must be an integral X vector
        let binv = d.x_basis().inverse().unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let v = RatMatrix::from_fn(3, 1, |i, _| if i == 1 { BigRational::one() } else { half.clone() });
        assert!(binv.mul(&v).to_int().is_some());
        let w1 = RatMatrix::from_fn(3, 1, |i, _| BigRational::new((3 - i as i64).into(), 4.into()));
        assert!(binv.mul(&w1).to_int().is_none());
        assert!(matches!(build_group(4, 3, 3, false), Err(RootDatumError::IndexNotDivisor { .. })));
        assert!(matches!(build_group(4, 1, 6, false), Err(RootDatumError::NotPrimePower(6))));
    }

    #[test]
    fn levi_labels() {
        let (d, _) = build_group(6, 1, 5, false).unwrap();
        let l = LeviLabel::from_composition(6, &[2, 2, 2]).unwrap();
        assert_eq!(l, LeviLabel::new([0, 2, 4]));
        assert_eq!(d.composition(&l), vec![vec![2, 2, 2]]);
        let sub = d.levi_subdatum(&l).unwrap();
        assert_eq!(sub.semisimple_rank(), 3);
        assert_eq!(d.levi_subdatum(&d.full_label()).unwrap(), d);
        assert_eq!(d.levi_subdatum(&LeviLabel::empty()).unwrap().semisimple_rank(), 0);
    }
}
