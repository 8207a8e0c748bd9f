//! Lusztig series of `SL_n(q)` and `SU_n(q)` as labels: one series per rational
//! semisimple class of the dual group, of size `|Irr W(s)^{w_s F*}|`, split into
//! families with Fourier matrices.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::cyclotomic::{Cyclotomic, QmodZ};
use crate::dual::{
    central_phase, class_invariants, cuspidal_test, enumerate_rational_classes, ClassInvariants, DualError,
    DualSetting, Exponent, RationalClass,
};
use crate::lattice::{hom_invariants, AbChar, AbHom, AbSubgroup, FinAbGroup, RatMatrix};
use crate::root_datum::{build_group, frobenius_sign, RootDatumError};
use crate::symchar::Partition;
use crate::wreath::WreathGroup;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error(transparent)]
    Dual(#[from] DualError),
    #[error(transparent)]
    RootDatum(#[from] RootDatumError),
    #[error("label {0:?} does not match the components of the series")]
    BadLabel(Vec<Partition>),
    #[error("section has {got} entries, H^1 has {expected} elements")]
    BadSection { expected: usize, got: usize },
    #[error("{0:?} is not an element of H^1(F, Z(G))")]
    NotInH1(Vec<u64>),
}

/// A Frobenius orbit on the distinct eigenvalues: one factor `S_m` of `W°(s)^{F*}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesComponent {
    pub eigenvalues: Vec<Exponent>,
    pub multiplicity: usize,
    /// The `GL_m` factor carries a unitary twist.
    pub twisted: bool,
}

#[derive(Clone, Debug)]
pub struct SeriesEntry {
    pub class: RationalClass,
    pub invariants: ClassInvariants,
    pub components: Vec<SeriesComponent>,
    /// `W°(s)^{w_s F*} ⋊ A(s)^{F*}`, components in the order of `components`.
    pub wreath: WreathGroup,
    pub size: usize,
    /// `s^` as a character of `Z(G)^F`.
    pub central_char: AbChar,
    pub epsilon_g: i64,
    pub epsilon_c: i64,
}

/// Frobenius `x -> eps q x + t` on exponents.
fn frob_twisted(s: &DualSetting, x: u64, t: u64) -> u64 {
    let d = s.denom as i128;
    ((s.eps as i128 * s.q as i128 * x as i128 + t as i128).rem_euclid(d)) as u64
}

/// Translation (in units of `1/denom`) of an element of `A(s)`.
fn translation(inv: &ClassInvariants, s: &DualSetting, a: &[u64]) -> u64 {
    let m = inv.a_s.order();
    a.first().map_or(0, |&k| k * (s.denom / m) % s.denom)
}

fn distinct(lift: &[u64]) -> BTreeMap<u64, usize> {
    let mut mult = BTreeMap::new();
    for &x in lift {
        *mult.entry(x).or_default() += 1;
    }
    mult
}

/// Orbits of `x -> eps q x + t` on the distinct eigenvalues, each from its least member.
fn twisted_orbits(s: &DualSetting, mult: &BTreeMap<u64, usize>, t: u64) -> Vec<Vec<u64>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &x in mult.keys() {
        if !seen.insert(x) {
            continue;
        }
        let mut orbit = vec![x];
        let mut y = frob_twisted(s, x, t);
        while y != x {
            seen.insert(y);
            orbit.push(y);
            y = frob_twisted(s, y, t);
        }
        out.push(orbit);
    }
    out
}

/// Fixed-point wreath group for the Frobenius twisted by the translation `t`.
fn fixed_point_wreath(
    s: &DualSetting,
    lift: &[u64],
    inv: &ClassInvariants,
    t: u64,
) -> (Vec<Vec<u64>>, Vec<usize>, WreathGroup) {
    let mult = distinct(lift);
    let orbits = twisted_orbits(s, &mult, t);
    let sizes: Vec<usize> = orbits.iter().map(|o| mult[&o[0]]).collect();
    let index: BTreeMap<u64, usize> =
        orbits.iter().enumerate().flat_map(|(i, o)| o.iter().map(move |&x| (x, i))).collect();
    let perms = (0..inv.fixed.rank())
        .map(|i| {
            let a = inv.embed_fixed(inv.fixed.generator(i).coords());
            let tr = translation(inv, s, &a);
            orbits.iter().map(|o| index[&((o[0] + tr) % s.denom)]).collect()
        })
        .collect();
    let w = WreathGroup::new(sizes.clone(), inv.fixed.clone(), perms).expect("A(s)^F permutes the Frobenius orbits");
    (orbits, sizes, w)
}

/// `det phi_0` on the character lattice of the maximally split torus of `C°(s)`
/// inside `PGL_n`: the sum-zero vectors of `Z^n`, one coordinate per eigenvalue.
fn centralizer_sign(s: &DualSetting, orbits: &[Vec<u64>], sizes: &[usize]) -> i64 {
    let n = s.n;
    if n == 1 {
        return 1;
    }
    // image of each coordinate under phi_0, as (target, sign)
    let mut image = vec![(0usize, 0i64); n];
    let mut offset = 0;
    for (o, &m) in orbits.iter().zip(sizes) {
        let k = o.len();
        let twisted = s.eps < 0 && k % 2 == 1;
        for j in 0..k {
            for i in 0..m {
                let (nj, ni) = if j + 1 == k && twisted { (0, m - 1 - i) } else { ((j + 1) % k, i) };
                image[offset + j * m + i] = (offset + nj * m + ni, s.eps);
            }
        }
        offset += k * m;
    }
    // basis b_r = e_r - e_{r+1}; a sum-zero v has b-coordinates c_i = v_0 + ... + v_i
    let apply = |r: usize| -> Vec<i64> {
        let mut v = vec![0i64; n];
        let (t0, s0) = image[r];
        let (t1, s1) = image[r + 1];
        v[t0] += s0;
        v[t1] -= s1;
        v
    };
    let cols: Vec<Vec<i64>> = (0..n - 1)
        .map(|r| {
            let v = apply(r);
            let mut acc = 0;
            (0..n - 1)
                .map(|i| {
                    acc += v[i];
                    acc
                })
                .collect()
        })
        .collect();
    let m = RatMatrix::from_fn(n - 1, n - 1, |i, j| BigRational::from_integer(BigInt::from(cols[j][i])));
    m.det().to_integer().to_i64().expect("determinant of a finite-order map is a sign")
}

/// The character of `group` taking the given phases on its invariant-factor generators.
fn char_from_phases(group: &FinAbGroup, phases: &[QmodZ]) -> AbChar {
    let ex: Vec<u64> = group
        .invariant_factors()
        .iter()
        .zip(phases)
        .map(|(&f, ph)| {
            let num = ph.numer() as i128 * f as i128;
            debug_assert_eq!(num % ph.denom() as i128, 0);
            (num / ph.denom() as i128).rem_euclid(f as i128) as u64
        })
        .collect();
    AbChar::new(group, &ex).expect("exponents reduced modulo the factors")
}

fn epsilon_g(s: &DualSetting) -> Result<i64, SeriesError> {
    let (datum, frob) = build_group(s.n, 1, s.q, s.twisted())?;
    Ok(frobenius_sign(&datum, &frob).0)
}

fn build_entry(class: RationalClass, eps_g: i64) -> Result<SeriesEntry, SeriesError> {
    let s = class.setting;
    let inv = class_invariants(&class);
    let (orbits, sizes, wreath) = fixed_point_wreath(&s, class.raw_lift(), &inv, 0);
    let size = wreath.irr_semidirect().len();
    let center = s.fixed_center();
    let phases: Vec<QmodZ> =
        (0..center.rank()).map(|i| central_phase(&class, center.generator(i).coords())).collect::<Result<_, _>>()?;
    let central_char = char_from_phases(&center, &phases);
    let epsilon_c = centralizer_sign(&s, &orbits, &sizes);
    let components = orbits
        .iter()
        .zip(&sizes)
        .map(|(o, &m)| SeriesComponent {
            eigenvalues: o.iter().map(|&x| Exponent(QmodZ::new(x as i64, s.denom as i64))).collect(),
            multiplicity: m,
            twisted: s.eps < 0 && o.len() % 2 == 1,
        })
        .collect();
    Ok(SeriesEntry { class, invariants: inv, components, wreath, size, central_char, epsilon_g: eps_g, epsilon_c })
}

/// One entry per rational semisimple class of the dual group, in
/// [`enumerate_rational_classes`] order.
pub fn series_catalog(n: usize, q: u64, twisted: bool) -> Result<Vec<SeriesEntry>, SeriesError> {
    let classes = enumerate_rational_classes(n, q, twisted)?;
    let eps_g = match classes.first() {
        Some(c) => epsilon_g(&c.setting)?,
        None => 1,
    };
    classes.into_iter().map(|c| build_entry(c, eps_g)).collect()
}

/// `eps_G eps_{C°(s)} eps_chi` for a label of `W°(s)^{w_s F*}`, one partition per component.
pub fn sign_epsilon(entry: &SeriesEntry, chi: &[Partition]) -> Result<i64, SeriesError> {
    if chi.len() != entry.components.len()
        || chi.iter().zip(&entry.components).any(|(l, c)| l.size() != c.multiplicity)
    {
        return Err(SeriesError::BadLabel(chi.to_vec()));
    }
    let eps_chi: i64 = chi
        .iter()
        .zip(&entry.components)
        .filter(|(_, c)| c.twisted)
        .map(|(l, _)| if l.b_invariant() % 2 == 0 { 1 } else { -1 })
        .product();
    Ok(entry.epsilon_g * entry.epsilon_c * eps_chi)
}

/// Fourier matrix of a family: rows `(a, tau)` with `a` in `A(s,chi)^{F*}` and `tau`
/// a character of `H^1`, columns `(xi, alpha)`; entry `xi(a)^{-1} tau(alpha) / |A(s,chi)^{F*}|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierMatrix {
    pub rows: Vec<(Vec<u64>, AbChar)>,
    pub cols: Vec<(AbChar, Vec<u64>)>,
    pub entries: Vec<Vec<Cyclotomic>>,
}

impl FourierMatrix {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// `M M*`.
    pub fn gram(&self) -> Vec<Vec<Cyclotomic>> {
        let d = self.dim();
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        self.entries[i].iter().zip(&self.entries[j]).fold(Cyclotomic::zero(), |acc, (x, y)| {
                            acc + x * &y.conj()
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// The inverse transform, `tau(alpha)^{-1} xi(a)` up to normalisation: the conjugate transpose.
    pub fn inverse(&self) -> Vec<Vec<Cyclotomic>> {
        let d = self.dim();
        (0..d).map(|i| (0..d).map(|j| self.entries[j][i].conj()).collect()).collect()
    }
}

/// Product of square matrices.
pub fn mat_mul(x: &[Vec<Cyclotomic>], y: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    let d = y.first().map_or(0, Vec::len);
    x.iter()
        .map(|row| {
            (0..d).map(|j| row.iter().zip(y).fold(Cyclotomic::zero(), |acc, (a, yr)| acc + a * &yr[j])).collect()
        })
        .collect()
}

pub fn is_identity_matrix(m: &[Vec<Cyclotomic>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.len() == m.len()
            && row.iter().enumerate().all(|(j, x)| if i == j { *x == Cyclotomic::one() } else { x.is_zero() })
    })
}

/// An `F*`-stable `A(s)`-orbit on `Irr W°(s)`, for the geometric class of a series.
#[derive(Clone, Debug)]
pub struct FamilyEntry {
    /// Least member of the orbit; one partition per distinct eigenvalue of the base lift.
    pub representative: Vec<Partition>,
    pub orbit: Vec<Vec<Partition>>,
    /// `A(s, chi)` inside `A(s)`.
    pub stabilizer: AbSubgroup,
    pub fixed: FinAbGroup,
    pub h1: FinAbGroup,
    pub fourier: FourierMatrix,
    /// For each `alpha` in `H^1(F*, A(s))` (relative to the base series), the number of
    /// irreducible characters of the `delta(alpha)`-twisted wreath group lying in this family.
    pub rational_counts: Vec<(Vec<u64>, usize)>,
}

impl FamilyEntry {
    /// `|M(A(s,chi), F*)|`.
    pub fn size(&self) -> usize {
        (self.fixed.order() * self.h1.order()) as usize
    }
}

fn all_tuples(sizes: &[usize]) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    for &m in sizes {
        let ps = Partition::all(m);
        out = out
            .into_iter()
            .flat_map(|t| {
                ps.iter().map(move |p| {
                    let mut v = t.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn permute_label(perm: &[usize], chi: &[Partition]) -> Vec<Partition> {
    let mut out = chi.to_vec();
    for (i, p) in chi.iter().enumerate() {
        out[perm[i]] = p.clone();
    }
    out
}

fn fourier_matrix(fixed: &FinAbGroup, h1: &FinAbGroup) -> FourierMatrix {
    let rows: Vec<(Vec<u64>, AbChar)> = fixed
        .coordinate_tuples()
        .into_iter()
        .flat_map(|a| AbChar::all(h1).into_iter().map(move |tau| (a.clone(), tau)))
        .collect();
    let cols: Vec<(AbChar, Vec<u64>)> = AbChar::all(fixed)
        .into_iter()
        .flat_map(|xi| h1.coordinate_tuples().into_iter().map(move |al| (xi.clone(), al)))
        .collect();
    let scale = BigRational::new(BigInt::one(), BigInt::from(fixed.order()));
    let entries = rows
        .iter()
        .map(|(a, tau)| {
            cols.iter()
                .map(|(xi, al)| {
                    let ph = tau.phase_coords(al).sub(&xi.phase_coords(a));
                    Cyclotomic::from_phase(ph).scale(&scale)
                })
                .collect()
        })
        .collect();
    FourierMatrix { rows, cols, entries }
}

/// Families of the geometric class of `entry`, with `delta` the least-exponent section.
pub fn families(entry: &SeriesEntry) -> Vec<FamilyEntry> {
    let inv = &entry.invariants;
    let section: Vec<Vec<u64>> = inv.h1.coordinate_tuples().iter().map(|al| inv.lift_h1(al)).collect();
    families_with_section(entry, &section).expect("the least section has the right length")
}

/// Families with an explicit section `H^1(F*, A(s)) -> A(s)`, listed in
/// `h1.coordinate_tuples()` order.
pub fn families_with_section(entry: &SeriesEntry, section: &[Vec<u64>]) -> Result<Vec<FamilyEntry>, SeriesError> {
    let inv = &entry.invariants;
    let s = &entry.class.setting;
    let h1_elems = inv.h1.coordinate_tuples();
    if section.len() != h1_elems.len() {
        return Err(SeriesError::BadSection { expected: h1_elems.len(), got: section.len() });
    }
    let lift = entry.class.raw_lift();
    let mult = distinct(lift);
    let eigen: Vec<u64> = mult.keys().copied().collect();
    let sizes: Vec<usize> = mult.values().copied().collect();
    let pos: BTreeMap<u64, usize> = eigen.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let perm_of = |f: &dyn Fn(u64) -> u64| -> Vec<usize> { eigen.iter().map(|&x| pos[&f(x)]).collect() };

    let a_elems = inv.a_s.coordinate_tuples();
    let a_perms: Vec<Vec<usize>> = a_elems
        .iter()
        .map(|a| {
            let t = translation(inv, s, a);
            perm_of(&|x| (x + t) % s.denom)
        })
        .collect();
    let f_perm = perm_of(&|x| frob_twisted(s, x, 0));

    // twisted wreath groups and their labels spread over the distinct eigenvalues
    let twisted_labels: Vec<Vec<Vec<Partition>>> = section
        .iter()
        .map(|a| {
            let t = translation(inv, s, a);
            let (orbits, _, w) = fixed_point_wreath(s, lift, inv, t);
            w.irr_semidirect()
                .into_iter()
                .map(|chi| {
                    let mut spread = vec![Partition::row(0); eigen.len()];
                    for (o, p) in orbits.iter().zip(&chi.lambda) {
                        for x in o {
                            spread[pos[x]] = p.clone();
                        }
                    }
                    spread
                })
                .collect()
        })
        .collect();

    let mut seen: BTreeSet<Vec<Partition>> = BTreeSet::new();
    let mut out = Vec::new();
    for chi in all_tuples(&sizes) {
        if seen.contains(&chi) {
            continue;
        }
        let orbit: BTreeSet<Vec<Partition>> = a_perms.iter().map(|p| permute_label(p, &chi)).collect();
        seen.extend(orbit.iter().cloned());
        if !orbit.contains(&permute_label(&f_perm, &chi)) {
            continue;
        }
        let stab_elems: Vec<Vec<u64>> = a_elems
            .iter()
            .zip(&a_perms)
            .filter(|(_, p)| permute_label(p, &chi) == chi)
            .map(|(a, _)| a.clone())
            .collect();
        let stabilizer = AbSubgroup::generated_by(&inv.a_s, &stab_elems);
        let (sub, _) = stabilizer.presentation();
        let fm1 = AbHom::scalar(&sub, s.eps_q_minus_one());
        let hi = hom_invariants(&fm1);
        let rational_counts = h1_elems
            .iter()
            .zip(&twisted_labels)
            .map(|(al, labels)| (al.clone(), labels.iter().filter(|l| orbit.contains(*l)).count()))
            .collect();
        out.push(FamilyEntry {
            representative: chi,
            orbit: orbit.into_iter().collect(),
            stabilizer,
            fourier: fourier_matrix(&hi.kernel, &hi.cokernel),
            fixed: hi.kernel,
            h1: hi.cokernel,
            rational_counts,
        });
    }
    Ok(out)
}

/// Gram matrix of the `rho.` basis `rho._{s,a} = sum_xi xi(a) rho_{s,xi}`, rows and
/// columns indexed by `A(s)^{F*}`.
pub fn rho_dot_gram(entry: &SeriesEntry) -> Vec<Vec<Cyclotomic>> {
    let fixed = &entry.invariants.fixed;
    let elems = fixed.coordinate_tuples();
    let chars = AbChar::all(fixed);
    elems
        .iter()
        .map(|a| {
            elems
                .iter()
                .map(|b| {
                    chars.iter().fold(Cyclotomic::zero(), |acc, xi| {
                        acc + Cyclotomic::from_phase(xi.phase_coords(a).sub(&xi.phase_coords(b)))
                    })
                })
                .collect()
        })
        .collect()
}

/// Elements `a` of `A(s)^{F*}` (as elements of `A(s)`) whose line `rho._{s,a}` is cuspidal.
pub fn cuspidal_labels(entry: &SeriesEntry) -> Result<Vec<Vec<u64>>, SeriesError> {
    let inv = &entry.invariants;
    let mut out = Vec::new();
    for b in inv.fixed.coordinate_tuples() {
        let a = inv.embed_fixed(&b);
        if cuspidal_test(&entry.class, &a)? {
            out.push(a);
        }
    }
    Ok(out)
}

/// `H^1(F, Z(G))`, cyclic of order `gcd(n, q - eps)`; `j` is the class of `ı(j/n)`.
pub fn h1_center(s: &DualSetting) -> FinAbGroup {
    FinAbGroup::cyclic(s.fixed_center_order())
}

/// `omega^0_s(z)` as a character of `A(s)^{F*}`: `a -> n (k_a/m)(j/n)`.
pub fn omega0_hat(entry: &SeriesEntry, z: &[u64]) -> Result<AbChar, SeriesError> {
    let s = &entry.class.setting;
    if !h1_center(s).contains(z) {
        return Err(SeriesError::NotInH1(z.to_vec()));
    }
    let inv = &entry.invariants;
    let m = inv.a_s.order() as i64;
    let j = z.first().copied().unwrap_or(0) as i64;
    let phases: Vec<QmodZ> = (0..inv.fixed.rank())
        .map(|i| {
            let a = inv.embed_fixed(inv.fixed.generator(i).coords());
            let ka = a.first().copied().unwrap_or(0) as i64;
            QmodZ::new((ka * j).rem_euclid(m), m)
        })
        .collect();
    Ok(char_from_phases(&inv.fixed, &phases))
}

/// `chi_{s,xi}` (equivalently `rho_{s,xi}`): series index and a character of `A(s)^{F*}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RegularLabel {
    pub series: usize,
    pub xi: AbChar,
}

/// The Gelfand-Graev character `Gamma_z` as its regular constituents, one per series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GGLabel {
    pub z: Vec<u64>,
    pub constituents: Vec<RegularLabel>,
}

/// All regular (or semisimple) labels of a series: `|A(s)^{F*}|` of them.
pub fn xi_labels(series: usize, entry: &SeriesEntry) -> Vec<RegularLabel> {
    AbChar::all(&entry.invariants.fixed).into_iter().map(|xi| RegularLabel { series, xi }).collect()
}

pub fn gelfand_graev_labels(catalog: &[SeriesEntry]) -> Result<Vec<GGLabel>, SeriesError> {
    let Some(first) = catalog.first() else {
        return Ok(Vec::new());
    };
    h1_center(&first.class.setting)
        .coordinate_tuples()
        .into_iter()
        .map(|z| {
            let constituents = catalog
                .iter()
                .enumerate()
                .map(|(i, e)| Ok(RegularLabel { series: i, xi: omega0_hat(e, &z)? }))
                .collect::<Result<_, SeriesError>>()?;
            Ok(GGLabel { z, constituents })
        })
        .collect()
}

/// Diagonal automorphism `tau_z`: `xi -> xi * omega^0_s(z)`.
pub fn diagonal_action(catalog: &[SeriesEntry], label: &RegularLabel, z: &[u64]) -> Result<RegularLabel, SeriesError> {
    let entry = &catalog[label.series];
    let w = omega0_hat(entry, z)?;
    let xi = label.xi.mul(&w).expect("both characters live on A(s)^F");
    Ok(RegularLabel { series: label.series, xi })
}

/// Translation by `z` in `Z(G)^F` scales every character of the series by `s^(z)`.
pub fn center_translation(entry: &SeriesEntry, z: &[u64]) -> Result<Cyclotomic, SeriesError> {
    Ok(Cyclotomic::from_phase(central_phase(&entry.class, z)?))
}

/// Apply `tau_z` to every constituent.
pub fn translate_gg(catalog: &[SeriesEntry], label: &GGLabel, z: &[u64]) -> Result<Vec<RegularLabel>, SeriesError> {
    label.constituents.iter().map(|c| diagonal_action(catalog, c, z)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanRow {
    pub series: usize,
    pub series_size: usize,
    pub unipotent_count: usize,
}

/// Unipotent characters of `C(s)^{F*}`: orbits of `A(s)^{F*}` on partition labels of the
/// components, each counted with its stabilizer order, via
/// `|A|^{-1} sum_{a,b} #labels fixed by <a, b>`.
pub fn unipotent_count(entry: &SeriesEntry) -> usize {
    let w = &entry.wreath;
    let sizes = w.components();
    let elems = w.acting().coordinate_tuples();
    let perms: Vec<Vec<usize>> = elems.iter().map(|a| w.action(a)).collect();
    let mut total = 0usize;
    for pa in &perms {
        for pb in &perms {
            let mut parent: Vec<usize> = (0..sizes.len()).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while p[r] != r {
                    r = p[r];
                }
                p[x] = r;
                r
            }
            for perm in [pa, pb] {
                for (c, &d) in perm.iter().enumerate() {
                    let (x, y) = (find(&mut parent, c), find(&mut parent, d));
                    parent[x] = y;
                }
            }
            let roots: BTreeSet<usize> = (0..sizes.len()).map(|c| find(&mut parent, c)).collect();
            total += roots.iter().map(|&r| Partition::all(sizes[r]).len()).product::<usize>();
        }
    }
    total / elems.len()
}

pub fn jordan_counts(catalog: &[SeriesEntry]) -> Vec<JordanRow> {
    catalog
        .iter()
        .enumerate()
        .map(|(i, e)| JordanRow { series: i, series_size: e.size, unipotent_count: unipotent_count(e) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sl2_3_sizes() {
        let cat = series_catalog(2, 3, false).unwrap();
        let mut sizes: Vec<usize> = cat.iter().map(|e| e.size).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(sizes, vec![2, 2, 2, 1]);
        assert_eq!(series_catalog(2, 5, false).unwrap().iter().map(|e| e.size).sum::<usize>(), 9);
        let one = series_catalog(1, 7, false).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].size, 1);
    }

    #[test]
    fn isolated_family() {
        let cat = series_catalog(2, 3, false).unwrap();
        let iso = cat.iter().find(|e| e.invariants.a_order() == 2).unwrap();
        let fams = families(iso);
        assert_eq!(fams.len(), 1);
        let f = &fams[0];
        assert_eq!(f.size(), 4);
        let half = BigRational::new(1.into(), 2.into());
        for row in &f.fourier.entries {
            for x in row {
                let r = x.to_rational().unwrap();
                assert!(r == half || r == -half.clone());
            }
        }
        assert!(is_identity_matrix(&f.fourier.gram()));
        assert_eq!(f.rational_counts.iter().map(|(_, c)| c).sum::<usize>(), 4);
    }

    #[test]
    fn signs() {
        let cat = series_catalog(3, 2, true).unwrap();
        let e = &cat[0];
        assert!(e.class.is_identity());
        assert_eq!(e.epsilon_g * e.epsilon_c, 1);
        assert_eq!(sign_epsilon(e, &[p(&[2, 1])]).unwrap(), -sign_epsilon(e, &[p(&[3])]).unwrap());
        assert!(sign_epsilon(e, &[p(&[2])]).is_err());
        // a non-split torus of SL_2 has eps = -1
        let cat = series_catalog(2, 3, false).unwrap();
        let torus = cat.iter().find(|e| e.size == 1).unwrap();
        assert_eq!(torus.epsilon_c, -1);
        assert_eq!(cat[0].epsilon_c, 1);
    }

    #[test]
    fn gelfand_graev() {
        let cat = series_catalog(2, 3, false).unwrap();
        let gg = gelfand_graev_labels(&cat).unwrap();
        assert_eq!(gg.len(), 2);
        assert!(gg.iter().all(|g| g.constituents.len() == 4));
        assert!(gg[0].constituents.iter().all(|c| c.xi.is_trivial()));
        assert_eq!(translate_gg(&cat, &gg[0], &[1]).unwrap(), gg[1].constituents);
        assert_eq!(translate_gg(&cat, &gg[1], &[0]).unwrap(), gg[1].constituents);
    }

    #[test]
    fn jordan() {
        let cat = series_catalog(2, 5, false).unwrap();
        for row in jordan_counts(&cat) {
            assert_eq!(row.series_size, row.unipotent_count);
        }
        assert_eq!(jordan_counts(&cat)[0].unipotent_count, 2);
    }
}
