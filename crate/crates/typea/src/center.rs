//! The component group of the center, its Frobenius action, Levi kernels,
//! affine-diagram automorphisms, self-opposed closures and cuspidal characters.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::arith::{inv_mod, p_prime_part};
use crate::lattice::{hom_invariants, smith_normal_form, AbChar, AbHom, AbSubgroup, FinAbGroup, IntMatrix, LatticeError, Presentation};
use crate::root_datum::{FrobeniusData, LeviLabel, RootDatumA};

/// Largest factor rank for which Weyl-group enumeration is attempted.
pub const MAX_ENUMERATED_RANK: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CenterError {
    #[error("the affine-diagram isomorphism needs a simply connected quasi-simple group")]
    NotSimplyConnectedQuasiSimple,
    #[error("factor SL_{0} is beyond the enumeration bound n <= {MAX_ENUMERATED_RANK}")]
    TooLarge(usize),
    #[error("simple root index {0} out of range")]
    BadRoot(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// `Z(G) / Z(G)°` (prime-to-p part) with coweight images and Frobenius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterGroup {
    group: FinAbGroup,
    coweight_images: Vec<Vec<u64>>,
    frobenius: AbHom,
    p: u64,
    factors: Vec<usize>,
    lattice_index: u64,
}

/// Report-friendly view of a [`CenterGroup`].
#[derive(Clone, Debug, Serialize)]
pub struct CenterSummary {
    pub invariant_factors: Vec<u64>,
    pub coweight_images: Vec<Vec<u64>>,
    pub frobenius_matrix: Vec<Vec<i64>>,
}

impl CenterGroup {
    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    /// Image of `varpi_alpha^vee` for each ambient simple root (global index).
    pub fn coweight_images(&self) -> &[Vec<u64>] {
        &self.coweight_images
    }

    pub fn coweight_image(&self, alpha: usize) -> &[u64] {
        &self.coweight_images[alpha]
    }

    pub fn frobenius(&self) -> &AbHom {
        &self.frobenius
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn summary(&self) -> CenterSummary {
        let m = self.frobenius.matrix();
        CenterSummary {
            invariant_factors: self.group.invariant_factors().to_vec(),
            coweight_images: self.coweight_images.clone(),
            frobenius_matrix: (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get_i64(i, j)).collect()).collect(),
        }
    }
}

/// Center component group from the Smith form of the root inclusion `ZΦ -> X`.
pub fn center_group(datum: &RootDatumA, frob: &FrobeniusData) -> CenterGroup {
    let roots = datum.roots_x();
    let ell = roots.rows();
    let snf = smith_normal_form(roots);
    let diag: Vec<u64> = snf.diagonal().iter().map(|d| d.to_u64().expect("factor fits u64")).collect();
    let torsion: Vec<usize> = (0..ell).filter(|&i| diag[i] > 1).collect();

    // coweight images: coordinate i of alpha is D_i <x_i, varpi_alpha^vee> mod D_i
    let mut images_full = vec![vec![0u64; torsion.len()]; ell];
    for (k, &i) in torsion.iter().enumerate() {
        let xi = snf.u_inv.column(i);
        let coords = datum.root_coordinates(&xi);
        let d = BigInt::from(diag[i]);
        for (alpha, c) in coords.iter().enumerate() {
            let v = c * num_rational::BigRational::from_integer(d.clone());
            debug_assert!(v.is_integer());
            images_full[alpha][k] = v.to_integer().mod_floor(&d).to_u64().unwrap();
        }
    }

    // Frobenius: F(z)_i = D_i (U M U^{-1})_{ji} z_j / D_j with M = q phi_0 on X
    let m = IntMatrix::from_fn(ell, ell, |a, b| frob.phi0_x.get(a, b) * BigInt::from(frob.q));
    let c = snf.u.mul(&m).mul(&snf.u_inv);
    let mut f_full = vec![vec![BigInt::zero(); torsion.len()]; torsion.len()];
    for (a, &i) in torsion.iter().enumerate() {
        for (b, &j) in torsion.iter().enumerate() {
            let num = c.get(j, i) * BigInt::from(diag[i]);
            let dj = BigInt::from(diag[j]);
            debug_assert!(num.is_multiple_of(&dj));
            f_full[a][b] = num / dj;
        }
    }

    // prime-to-p projection
    let p = frob.p;
    let full_mod: Vec<u64> = torsion.iter().map(|&i| diag[i]).collect();
    let reduced: Vec<u64> = full_mod.iter().map(|&d| p_prime_part(d, p)).collect();
    let keep: Vec<usize> = (0..torsion.len()).filter(|&k| reduced[k] > 1).collect();
    let moduli: Vec<u64> = keep.iter().map(|&k| reduced[k]).collect();
    let idempotent: Vec<i64> = (0..torsion.len())
        .map(|k| {
            let (dp, pp) = (reduced[k] as i64, (full_mod[k] / reduced[k]) as i64);
            // e = 1 mod dp, 0 mod pp
            let t = inv_mod(pp, dp).unwrap_or(0);
            (pp * t).rem_euclid(full_mod[k] as i64)
        })
        .collect();
    let group = FinAbGroup::new(&moduli).expect("p'-parts keep the chain");
    let mut images: Vec<Vec<u64>> = images_full
        .iter()
        .map(|img| keep.iter().map(|&k| img[k] % reduced[k]).collect())
        .collect();
    let fmat = IntMatrix::from_fn(keep.len(), keep.len(), |a, b| {
        let (ka, kb) = (keep[a], keep[b]);
        (&f_full[ka][kb] * BigInt::from(idempotent[kb])).mod_floor(&BigInt::from(reduced[ka]))
    });

    // cyclic case: normalize so the first simple coweight maps to 1
    if group.rank() == 1 && ell > 0 {
        let n = moduli[0] as i64;
        if let Some(u) = inv_mod(images[0][0] as i64, n) {
            for img in &mut images {
                img[0] = ((img[0] as i64 * u).rem_euclid(n)) as u64;
            }
        }
    }
    let frobenius = AbHom::new(group.clone(), group.clone(), fmat).expect("Frobenius respects orders");
    CenterGroup {
        group,
        coweight_images: images,
        frobenius,
        p,
        factors: datum.factors().to_vec(),
        lattice_index: datum.lattice_index(),
    }
}

/// `Ker h_{L_I}`: generated by the coweight images of the simple roots outside `I`.
pub fn levi_kernel(center: &CenterGroup, levi: &LeviLabel) -> AbSubgroup {
    let gens: Vec<Vec<u64>> = (0..center.coweight_images.len())
        .filter(|a| !levi.contains(*a))
        .map(|a| center.coweight_images[a].clone())
        .collect();
    AbSubgroup::generated_by(&center.group, &gens)
}

/// `Z(L_I) / Z(L_I)°` (prime-to-p part), from the torsion of `X / Z Φ_I`.
pub fn levi_center(datum: &RootDatumA, levi: &LeviLabel, p: u64) -> FinAbGroup {
    let cols: Vec<usize> = levi.0.iter().copied().collect();
    let pres = Presentation::torsion_of_cokernel(&datum.roots_x().select_columns(&cols));
    pres.group.p_prime_part(p).0
}

/// `H^1(F, Z(G)/Z(G)°)`.
pub fn h1_center(center: &CenterGroup) -> FinAbGroup {
    hom_invariants(&f_minus_one(center)).cokernel
}

/// Fixed points of `F` on the center component group.
pub fn fixed_center(center: &CenterGroup) -> FinAbGroup {
    hom_invariants(&f_minus_one(center)).kernel
}

pub(crate) fn f_minus_one(center: &CenterGroup) -> AbHom {
    center.frobenius.sub(&AbHom::identity(&center.group)).expect("same group")
}

/// Permutation of the affine simple roots `alpha_0, ..., alpha_{n-1}` induced by `w_z`.
///
/// `alpha_j = e_j - e_{j+1}` with indices mod n, so `alpha_0 = e_n - e_1`.
pub fn affine_center_iso(center: &CenterGroup, z: &[u64]) -> Result<Vec<usize>, CenterError> {
    if center.factors.len() != 1 || center.lattice_index != 1 {
        return Err(CenterError::NotSimplyConnectedQuasiSimple);
    }
    let n = center.factors[0];
    if !center.group.contains(z) {
        return Err(LatticeError::OutOfRange { coords: z.to_vec(), factors: center.group.invariant_factors().to_vec() }.into());
    }
    let m = center.group.order() as i64;
    let k = z.first().copied().unwrap_or(0) as i64;
    // lift k in Z/m to Z/n with zero p-part
    let pp = n as i64 / m;
    let t = if m == 1 { 0 } else { (pp * inv_mod(pp, m).unwrap() * k).rem_euclid(n as i64) } as usize;
    Ok(affine_action(n, &w_alpha(n, t)))
}

/// `w_{alpha_j} = w_Δ w_{Δ - {alpha_j}}` in `S_n` (one-based values stored zero-based); `j = 0` gives 1.
pub fn w_alpha(n: usize, j: usize) -> Vec<usize> {
    if j == 0 {
        return (0..n).collect();
    }
    // zero-based: w_{Δ - alpha_j} reverses [0, j) and [j, n); w_Δ reverses [0, n)
    (0..n)
        .map(|i| {
            let inner = if i < j { j - 1 - i } else { n - 1 - (i - j) };
            n - 1 - inner
        })
        .collect()
}

/// Action of `w` in `S_n` on the affine simple roots, or panics if they are not permuted.
fn affine_action(n: usize, w: &[usize]) -> Vec<usize> {
    // alpha_j = e_{j} - e_{j+1} in one-based mod-n indexing; zero-based e index of alpha_j's head is (j + n - 1) % n
    (0..n)
        .map(|j| {
            let head = (j + n - 1) % n;
            let tail = j % n;
            let (wh, wt) = (w[head], w[tail]);
            assert_eq!((wh + 1) % n, wt, "w does not preserve the affine base");
            (wh + 1) % n
        })
        .collect()
}

/// `{z : w_z(I) = I}` for a simply connected quasi-simple group.
pub fn affine_stabilizer(center: &CenterGroup, levi: &LeviLabel) -> Result<AbSubgroup, CenterError> {
    let mut gens = Vec::new();
    for z in center.group.coordinate_tuples() {
        let w = affine_center_iso(center, &z)?;
        // global index i is alpha_{i+1}
        if levi.0.iter().all(|&i| levi.contains(w[i + 1] .wrapping_sub(1))) {
            gens.push(z);
        }
    }
    Ok(AbSubgroup::generated_by(&center.group, &gens))
}

/// Distinct arrangements of a composition's blocks: the images `w(I)` for `w` in `W^I`.
fn block_arrangements(blocks: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = blocks.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    loop {
        out.push(sorted.clone());
        if !next_permutation(&mut sorted) {
            return out;
        }
    }
}

pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `I^{(1)} = ∩_{w in W^I} w(I)`.
///
/// An element of `W^I` maps each block of `I` increasingly onto a run of
/// consecutive indices, so `w(I)` only depends on the order of the blocks.
pub fn opposed_step(datum: &RootDatumA, levi: &LeviLabel) -> Result<LeviLabel, CenterError> {
    if let Some(&n) = datum.factors().iter().find(|&&n| n > MAX_ENUMERATED_RANK) {
        return Err(CenterError::TooLarge(n));
    }
    let comps = datum.composition(levi);
    let mut out = BTreeSet::new();
    for ((&n, comp), off) in datum.factors().iter().zip(&comps).zip(datum.factor_offsets()) {
        let mut acc: Option<BTreeSet<usize>> = None;
        for arr in block_arrangements(comp) {
            let l = LeviLabel::from_composition(n, &arr).expect("rearranged composition");
            acc = Some(match acc {
                None => l.0,
                Some(a) => a.intersection(&l.0).copied().collect(),
            });
        }
        out.extend(acc.unwrap_or_default().into_iter().map(|i| i + off));
    }
    Ok(LeviLabel(out))
}

/// Largest self-opposed subset of `I`.
pub fn self_opposed_closure(datum: &RootDatumA, levi: &LeviLabel) -> Result<LeviLabel, CenterError> {
    if let Some(&i) = levi.0.iter().find(|&&i| i >= datum.ambient_rank()) {
        return Err(CenterError::BadRoot(i));
    }
    let mut cur = levi.clone();
    loop {
        let next = opposed_step(datum, &cur)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// Cuspidal linear characters and minimal Levi representatives per subgroup.
#[derive(Clone, Debug)]
pub struct CuspidalData {
    pub characters: Vec<AbChar>,
    pub min_levi: Vec<(AbSubgroup, LeviLabel)>,
}

/// All subsets of `0..n` as labels, in binary counting order.
pub(crate) fn all_labels(n: usize) -> Vec<LeviLabel> {
    (0u64..1 << n).map(|mask| LeviLabel::new((0..n).filter(|i| mask >> i & 1 == 1))).collect()
}

pub fn is_cuspidal_character(center: &CenterGroup, zeta: &AbChar) -> bool {
    let ell = center.coweight_images.len();
    all_labels(ell).into_iter().filter(|l| l.len() < ell).all(|l| {
        (0..ell).filter(|a| !l.contains(*a)).any(|a| !zeta.phase_coords(&center.coweight_images[a]).is_zero())
    })
}

pub fn cuspidal_data(center: &CenterGroup, datum: &RootDatumA) -> CuspidalData {
    let characters = AbChar::all(&center.group).into_iter().filter(|z| is_cuspidal_character(center, z)).collect();
    let ell = datum.ambient_rank();
    let labels = all_labels(ell);
    let kernels: Vec<AbSubgroup> = labels.iter().map(|l| levi_kernel(center, l)).collect();
    let mut min_levi = Vec::new();
    for k in center.group.subgroups() {
        let fits: Vec<usize> = (0..labels.len()).filter(|&i| kernels[i].is_subgroup_of(&k)).collect();
        let minimal: Vec<&LeviLabel> = fits
            .iter()
            .map(|&i| &labels[i])
            .filter(|l| !fits.iter().any(|&j| labels[j] != **l && labels[j].is_subset(l)))
            .collect();
        let best = minimal
            .into_iter()
            .min_by_key(|l| datum.composition(l))
            .cloned()
            .unwrap_or_else(|| datum.full_label());
        min_levi.push((k, best));
    }
    CuspidalData { characters, min_levi }
}
