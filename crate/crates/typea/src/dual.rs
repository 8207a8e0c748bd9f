//! Semisimple classes of the dual group `PGL_n` over `F_q` (split or unitary).
//!
//! A semisimple element is recorded by the eigenvalue exponents of a lift to
//! `GL_n`: a multiset in `(Q/Z)_{p'}`, with Frobenius acting as `x -> eps q x`.
//! Exponents are stored as integers modulo a common denominator `D`, the lcm
//! of `|(eps q)^k - 1|` for `k <= n`, so that value order is integer order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::prime_power;
use crate::cyclotomic::{Cyclotomic, QmodZ};
use crate::lattice::{hom_invariants, AbHom, FinAbGroup, HomInvariants};

/// Largest rank accepted.
pub const MAX_RANK: usize = 12;
/// Largest `q^n` accepted.
pub const MAX_QN: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualError {
    #[error("q = {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("rank n = {0} must be between 1 and {MAX_RANK}")]
    BadRank(usize),
    #[error("q^n = {q}^{n} exceeds the bound {MAX_QN}")]
    TooLarge { n: usize, q: u64 },
    #[error("{0} is not an element of A(s)")]
    NotInAs(String),
    #[error("{0} is not in the fixed center Z(G)^F")]
    NotInCenter(QmodZ),
}

/// Element `a/m` of `(Q/Z)_{p'}`, ordered by value in `[0, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponent(pub QmodZ);

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        let l = self.0.numer() as i128 * other.0.denom() as i128;
        let r = other.0.numer() as i128 * self.0.denom() as i128;
        l.cmp(&r)
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format!("{}/{}", self.0.numer(), self.0.denom()))
    }
}

/// The group `G = SL_n` (split) or `SU_n` (twisted) over `F_q`, seen from its dual.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DualSetting {
    pub n: usize,
    pub q: u64,
    pub p: u64,
    pub eps: i64,
    /// Common denominator of all exponents.
    pub denom: u64,
}

impl DualSetting {
    pub fn new(n: usize, q: u64, twisted: bool) -> Result<Self, DualError> {
        let (p, _) = prime_power(q).ok_or(DualError::NotPrimePower(q))?;
        if n == 0 || n > MAX_RANK {
            return Err(DualError::BadRank(n));
        }
        if q.checked_pow(n as u32).is_none_or(|v| v > MAX_QN) {
            return Err(DualError::TooLarge { n, q });
        }
        let eps = if twisted { -1 } else { 1 };
        let denom = (1..=n as u32).fold(1u64, |acc, k| acc.lcm(&Self::orbit_modulus(q, eps, k)));
        Ok(DualSetting { n, q, p, eps, denom })
    }

    /// `|(eps q)^k - 1|`.
    fn orbit_modulus(q: u64, eps: i64, k: u32) -> u64 {
        let v = (eps as i128 * q as i128).pow(k) - 1;
        v.unsigned_abs() as u64
    }

    pub fn twisted(&self) -> bool {
        self.eps < 0
    }

    /// `q - eps`: order of the rational scalars of `GL_n` or `GU_n`.
    pub fn q_minus_eps(&self) -> u64 {
        (self.q as i64 - self.eps) as u64
    }

    /// `eps q - 1` as a signed integer.
    pub fn eps_q_minus_one(&self) -> i64 {
        self.eps * self.q as i64 - 1
    }

    fn frob(&self, x: u64) -> u64 {
        let d = self.denom as i128;
        ((self.eps as i128 * self.q as i128 * x as i128).rem_euclid(d)) as u64
    }

    fn shift(&self, e: &[u64], c: u64) -> Vec<u64> {
        let mut v: Vec<u64> = e.iter().map(|&x| (x + c) % self.denom).collect();
        v.sort_unstable();
        v
    }

    fn exponent(&self, x: u64) -> Exponent {
        Exponent(QmodZ::new(x as i64, self.denom as i64))
    }

    /// Order of `Z(G)^F`, i.e. `gcd(n, q - eps)`.
    pub fn fixed_center_order(&self) -> u64 {
        (self.n as u64).gcd(&self.q_minus_eps())
    }

    /// `Z(G)^F` as a cyclic group; the element `k` is the scalar `ı(k / g)`.
    pub fn fixed_center(&self) -> FinAbGroup {
        FinAbGroup::cyclic(self.fixed_center_order())
    }
}

/// One rational semisimple class of `PGL_n(q)` (or its unitary form).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalClass {
    pub setting: DualSetting,
    /// Sorted exponents of an `eps q`-stable lift, in units of `1/denom`;
    /// the least such multiset under rational scalar translation.
    lift: Vec<u64>,
    /// Least translate of the lift under all scalars.
    geometric: Vec<u64>,
    /// Label in `H^1(F*, A(s))`.
    pub alpha: Vec<u64>,
}

impl RationalClass {
    pub fn lift(&self) -> Vec<Exponent> {
        self.lift.iter().map(|&x| self.setting.exponent(x)).collect()
    }

    pub fn geometric_id(&self) -> Vec<Exponent> {
        self.geometric.iter().map(|&x| self.setting.exponent(x)).collect()
    }

    pub fn raw_lift(&self) -> &[u64] {
        &self.lift
    }

    pub fn is_identity(&self) -> bool {
        self.geometric.iter().all(|&x| x == 0)
    }

    /// Every eigenvalue has multiplicity one.
    pub fn is_regular(&self) -> bool {
        self.lift.windows(2).all(|w| w[0] != w[1])
    }
}

/// Rational classes with the same geometric class share the group `A(s)`.
#[derive(Clone, Debug)]
pub struct ClassInvariants {
    /// `A(s)`, cyclic of order `m`; the element `k` is translation by `k/m`.
    pub a_s: FinAbGroup,
    /// `eps q` on `A(s)`.
    pub frob_on_a: AbHom,
    pub h1: FinAbGroup,
    /// `A(s)^{F*}` with its embedding into `A(s)`.
    pub fixed: FinAbGroup,
    pub fixed_embedding: AbHom,
    pub multiplicities: Vec<(Exponent, usize)>,
    /// Orbits of `x -> eps q x` on the distinct eigenvalues, each from its least member.
    pub frob_orbits: Vec<Vec<Exponent>>,
    /// `W°(s)^{F*}` is the product of `S_m` over these multiplicities, one per orbit.
    pub w_fixed_type: Vec<usize>,
    /// Orbits on which Frobenius acts on the corresponding `GL_m` factor with a twist
    /// (`eps = -1` and odd orbit length).
    pub twisted_orbits: Vec<bool>,
    invariants: HomInvariants,
    raw_orbits: Vec<Vec<u64>>,
}

impl ClassInvariants {
    /// `|A(s)|`.
    pub fn a_order(&self) -> u64 {
        self.a_s.order()
    }
}

/// Levi data `L_{s,a}`: blocks are the `a`-orbits on the eigenvalue multiset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LsaData {
    pub block_size: usize,
    pub blocks: Vec<Vec<Exponent>>,
    /// Frobenius permutes the blocks; its orbits, by block index.
    pub frob_orbits: Vec<Vec<usize>>,
}

/// Orbits of size exactly `k` under `x -> eps q x`, each listed from its least member.
fn orbits_of_size(s: &DualSetting, k: u32) -> Vec<Vec<u64>> {
    let m = DualSetting::orbit_modulus(s.q, s.eps, k);
    let step = s.denom / m;
    let mut out = Vec::new();
    for j in 0..m {
        let x = j * step;
        let mut orbit = vec![x];
        let mut y = s.frob(x);
        while y != x && orbit.len() <= k as usize {
            orbit.push(y);
            y = s.frob(y);
        }
        if orbit.len() == k as usize && orbit.iter().all(|&z| z >= x) {
            out.push(orbit);
        }
    }
    out
}

/// All `eps q`-stable multisets of `n` exponents.
fn stable_multisets(s: &DualSetting) -> Vec<Vec<u64>> {
    let orbits: Vec<Vec<u64>> = (1..=s.n as u32).flat_map(|k| orbits_of_size(s, k)).collect();
    fn rec(orbits: &[Vec<u64>], start: usize, room: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if room == 0 {
            let mut v = cur.clone();
            v.sort_unstable();
            out.push(v);
            return;
        }
        for i in start..orbits.len() {
            if orbits[i].len() <= room {
                cur.extend_from_slice(&orbits[i]);
                rec(orbits, i, room - orbits[i].len(), cur, out);
                cur.truncate(cur.len() - orbits[i].len());
            }
        }
    }
    let mut out = Vec::new();
    rec(&orbits, 0, s.n, &mut Vec::new(), &mut out);
    out
}

fn rational_normal_form(s: &DualSetting, e: &[u64]) -> Vec<u64> {
    let step = s.denom / s.q_minus_eps();
    (0..s.q_minus_eps()).map(|j| s.shift(e, j * step)).min().expect("at least one translate")
}

fn geometric_normal_form(s: &DualSetting, e: &[u64]) -> Vec<u64> {
    e.iter().map(|&x| s.shift(e, s.denom - x)).min().expect("nonempty multiset")
}

/// `A(s)`: order `m` of the translation stabilizer of the multiset.
fn stabilizer_order(s: &DualSetting, e: &[u64]) -> u64 {
    let g0 = (s.n as u64).gcd(&s.denom);
    let step = s.denom / g0;
    (0..g0).filter(|&k| s.shift(e, k * step) == e).count() as u64
}

fn a_invariants(s: &DualSetting, m: u64) -> (FinAbGroup, AbHom, HomInvariants) {
    let a = FinAbGroup::cyclic(m);
    let frob = AbHom::scalar(&a, s.eps * s.q as i64);
    let inv = hom_invariants(&AbHom::scalar(&a, s.eps_q_minus_one()));
    (a, frob, inv)
}

/// Exactly one representative per rational semisimple class, sorted by
/// `(geometric_id, alpha)`.
pub fn enumerate_rational_classes(n: usize, q: u64, twisted: bool) -> Result<Vec<RationalClass>, DualError> {
    let s = DualSetting::new(n, q, twisted)?;
    let lifts: BTreeSet<Vec<u64>> = stable_multisets(&s).iter().map(|e| rational_normal_form(&s, e)).collect();
    let mut by_geometric: BTreeMap<Vec<u64>, Vec<Vec<u64>>> = BTreeMap::new();
    for e in lifts {
        by_geometric.entry(geometric_normal_form(&s, &e)).or_default().push(e);
    }
    let mut out = Vec::new();
    for (geometric, members) in by_geometric {
        let base = &members[0];
        let m = stabilizer_order(&s, base);
        let (_, _, inv) = a_invariants(&s, m);
        for e in &members {
            let c = translation_between(&s, base, e).expect("members of a geometric class are translates");
            let alpha = torsor_label(&s, m, &inv, c);
            out.push(RationalClass { setting: s, lift: e.clone(), geometric: geometric.clone(), alpha });
        }
    }
    out.sort_by(|a, b| (&a.geometric, &a.alpha).cmp(&(&b.geometric, &b.alpha)));
    Ok(out)
}

/// Some `c` with `from + c = to`.
fn translation_between(s: &DualSetting, from: &[u64], to: &[u64]) -> Option<u64> {
    to.iter().map(|&y| (y + s.denom - from[0]) % s.denom).find(|&c| s.shift(from, c) == to)
}

/// Class of `(eps q - 1) c` in `H^1(F*, A(s))`.
fn torsor_label(s: &DualSetting, m: u64, inv: &HomInvariants, c: u64) -> Vec<u64> {
    let d = s.denom as i128;
    let a = (s.eps_q_minus_one() as i128 * c as i128).rem_euclid(d) as u64;
    let unit = s.denom / m;
    assert_eq!(a % unit, 0, "(eps q - 1) c lies in A(s)");
    let coords = if m > 1 { vec![a / unit] } else { Vec::new() };
    inv.projection.apply_coords(&coords)
}

pub fn class_invariants(c: &RationalClass) -> ClassInvariants {
    let s = &c.setting;
    let m = stabilizer_order(s, &c.lift);
    let (a_s, frob_on_a, invariants) = a_invariants(s, m);
    let mut mult: BTreeMap<u64, usize> = BTreeMap::new();
    for &x in &c.lift {
        *mult.entry(x).or_default() += 1;
    }
    let mut seen = BTreeSet::new();
    let mut raw_orbits = Vec::new();
    for &x in mult.keys() {
        if seen.contains(&x) {
            continue;
        }
        let mut orbit = vec![x];
        seen.insert(x);
        let mut y = s.frob(x);
        while y != x {
            orbit.push(y);
            seen.insert(y);
            y = s.frob(y);
        }
        raw_orbits.push(orbit);
    }
    let w_fixed_type = raw_orbits.iter().map(|o| mult[&o[0]]).collect();
    let twisted_orbits = raw_orbits.iter().map(|o| s.eps < 0 && o.len() % 2 == 1).collect();
    ClassInvariants {
        a_s,
        frob_on_a,
        h1: invariants.cokernel.clone(),
        fixed: invariants.kernel.clone(),
        fixed_embedding: invariants.embedding.clone(),
        multiplicities: mult.iter().map(|(&x, &k)| (s.exponent(x), k)).collect(),
        frob_orbits: raw_orbits.iter().map(|o| o.iter().map(|&x| s.exponent(x)).collect()).collect(),
        w_fixed_type,
        twisted_orbits,
        invariants,
        raw_orbits,
    }
}

impl ClassInvariants {
    /// Translation amount (in units of `1/denom`) of an element of `A(s)`.
    fn translation(&self, s: &DualSetting, a: &[u64]) -> u64 {
        let m = self.a_s.order();
        a.first().map_or(0, |&k| k * (s.denom / m) % s.denom)
    }

    /// Image in `A(s)` of an element of `A(s)^{F*}`.
    pub fn embed_fixed(&self, b: &[u64]) -> Vec<u64> {
        self.fixed_embedding.apply_coords(b)
    }

    /// Orbit index of each distinct eigenvalue after translation by `a`: the
    /// permutation of the Frobenius orbits induced by `a`.
    pub fn orbit_permutation(&self, s: &DualSetting, a: &[u64]) -> Vec<usize> {
        let t = self.translation(s, a);
        let index: BTreeMap<u64, usize> =
            self.raw_orbits.iter().enumerate().flat_map(|(i, o)| o.iter().map(move |&x| (x, i))).collect();
        self.raw_orbits.iter().map(|o| index[&((o[0] + t) % s.denom)]).collect()
    }

    /// The least element of `A(s)` mapping to `alpha` in `H^1`.
    pub fn lift_h1(&self, alpha: &[u64]) -> Vec<u64> {
        self.a_s
            .coordinate_tuples()
            .into_iter()
            .find(|a| self.invariants.projection.apply_coords(a) == alpha)
            .expect("projection onto H^1 is surjective")
    }

    /// All sections `H^1 -> A(s)`, as lists indexed by `h1.coordinate_tuples()`.
    pub fn all_sections(&self) -> Vec<Vec<Vec<u64>>> {
        let mut out: Vec<Vec<Vec<u64>>> = vec![Vec::new()];
        for alpha in self.h1.coordinate_tuples() {
            let pre: Vec<Vec<u64>> = self
                .a_s
                .coordinate_tuples()
                .into_iter()
                .filter(|a| self.invariants.projection.apply_coords(a) == alpha)
                .collect();
            out = out
                .into_iter()
                .flat_map(|sec| {
                    pre.iter().map(move |a| {
                        let mut v = sec.clone();
                        v.push(a.clone());
                        v
                    })
                })
                .collect();
        }
        out
    }

    pub fn project_h1(&self, a: &[u64]) -> Vec<u64> {
        self.invariants.projection.apply_coords(a)
    }
}

/// `(s, a)` is cuspidal iff the multiset is one coset of `<a>` and `a` has order `n`.
pub fn cuspidal_test(c: &RationalClass, a: &[u64]) -> Result<bool, DualError> {
    let inv = class_invariants(c);
    if !inv.a_s.contains(a) {
        return Err(DualError::NotInAs(format!("{a:?}")));
    }
    let s = &c.setting;
    let t = inv.translation(s, a);
    let ord = QmodZ::new(t as i64, s.denom as i64).order() as usize;
    Ok(ord == s.n && c.is_regular())
}

pub fn l_sa(c: &RationalClass, a: &[u64]) -> Result<LsaData, DualError> {
    let inv = class_invariants(c);
    if !inv.a_s.contains(a) {
        return Err(DualError::NotInAs(format!("{a:?}")));
    }
    let s = &c.setting;
    let t = inv.translation(s, a);
    let ord = QmodZ::new(t as i64, s.denom as i64).order() as usize;
    let mut remaining: Vec<u64> = c.lift.clone();
    let mut blocks: Vec<Vec<u64>> = Vec::new();
    while let Some(&x) = remaining.first() {
        let block: Vec<u64> = (0..ord as u64).map(|j| (x + j * t) % s.denom).collect();
        for y in &block {
            let pos = remaining.iter().position(|z| z == y).expect("multiset is stable under a");
            remaining.remove(pos);
        }
        let mut b = block;
        b.sort_unstable();
        blocks.push(b);
    }
    // Frobenius maps blocks to blocks; match equal sorted images, respecting multiplicity
    let images: Vec<Vec<u64>> = blocks
        .iter()
        .map(|b| {
            let mut v: Vec<u64> = b.iter().map(|&x| s.frob(x)).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let mut used = vec![false; blocks.len()];
    let mut perm = vec![0; blocks.len()];
    for (i, img) in images.iter().enumerate() {
        let j = (0..blocks.len()).find(|&j| !used[j] && &blocks[j] == img).expect("Frobenius permutes the blocks");
        used[j] = true;
        perm[i] = j;
    }
    let frob_orbits = crate::root_datum::perm_orbits(&perm);
    Ok(LsaData {
        block_size: ord,
        blocks: blocks.iter().map(|b| b.iter().map(|&x| s.exponent(x)).collect()).collect(),
        frob_orbits,
    })
}

/// `s^(z)` as a phase, `z = ı(k/g)` in `Z(G)^F` of order `g = gcd(n, q - eps)`:
/// `(eps q - 1)(k/g) * sum of the exponents of the lift`.
pub fn central_phase(c: &RationalClass, z: &[u64]) -> Result<QmodZ, DualError> {
    let s = &c.setting;
    let g = s.fixed_center_order();
    let k = z.first().copied().unwrap_or(0);
    if g > 1 && k >= g || z.len() != s.fixed_center().rank() {
        return Err(DualError::NotInCenter(QmodZ::new(k as i64, g.max(1) as i64)));
    }
    let factor = s.eps_q_minus_one() as i128 * k as i128 / g as i128;
    let sum: i128 = c.lift.iter().map(|&x| x as i128).sum();
    let d = s.denom as i128;
    Ok(QmodZ::new((factor * sum).rem_euclid(d) as i64, s.denom as i64))
}

pub fn central_character(c: &RationalClass, z: &[u64]) -> Result<Cyclotomic, DualError> {
    Ok(Cyclotomic::from_phase(central_phase(c, z)?))
}

/// `omega_s(a)` at `z = ı(k/g)`: the pairing `n * a * (k/g)` of `A(s)` with the center.
pub fn omega_phase(c: &RationalClass, a: &[u64], z: &[u64]) -> Result<QmodZ, DualError> {
    let inv = class_invariants(c);
    if !inv.a_s.contains(a) {
        return Err(DualError::NotInAs(format!("{a:?}")));
    }
    let s = &c.setting;
    let m = inv.a_s.order() as i128;
    let g = s.fixed_center_order() as i128;
    let ka = a.first().copied().unwrap_or(0) as i128;
    let kz = z.first().copied().unwrap_or(0) as i128;
    // n (ka/m)(kz/g), with m | n
    let num = (s.n as i128 / m) * ka * kz;
    Ok(QmodZ::new((num % g) as i64, g as i64))
}

/// `omega_s^1(alpha)` at `z`, through the least lift of `alpha` to `A(s)`.
pub fn omega1_phase(c: &RationalClass, alpha: &[u64], z: &[u64]) -> Result<QmodZ, DualError> {
    let a = class_invariants(c).lift_h1(alpha);
    omega_phase(c, &a, z)
}

/// Translation in `A(s)` realising the torsor label of `c` relative to the base
/// point of its geometric class: `(eps q - 1) c` as an element of `A(s)`.
pub fn torsor_element(base: &RationalClass, c: &RationalClass) -> Option<Vec<u64>> {
    if base.geometric != c.geometric || base.setting != c.setting {
        return None;
    }
    let s = &c.setting;
    let shift = translation_between(s, &base.lift, &c.lift)?;
    let m = stabilizer_order(s, &base.lift);
    let a = (s.eps_q_minus_one() as i128 * shift as i128).rem_euclid(s.denom as i128) as u64;
    Some(if m > 1 { vec![a / (s.denom / m)] } else { Vec::new() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(a: i64, b: i64) -> Exponent {
        Exponent(QmodZ::new(a, b))
    }

    #[test]
    fn sl2_3() {
        let cl = enumerate_rational_classes(2, 3, false).unwrap();
        assert_eq!(cl.len(), 4);
        assert!(cl[0].is_identity());
        let iso: Vec<_> = cl.iter().filter(|c| c.geometric_id() == vec![ex(0, 1), ex(1, 2)]).collect();
        assert_eq!(iso.len(), 2);
        assert_ne!(iso[0].alpha, iso[1].alpha);
        let reg = cl.iter().find(|c| c.geometric_id() == vec![ex(0, 1), ex(1, 4)]).unwrap();
        assert_eq!(central_phase(reg, &[1]).unwrap(), QmodZ::new(1, 2));
        // the two isolated labels carry opposite central characters at -1
        assert_ne!(central_phase(iso[0], &[1]).unwrap(), central_phase(iso[1], &[1]).unwrap());
        let inv = class_invariants(iso[0]);
        assert_eq!(inv.a_s.order(), 2);
        assert_eq!(inv.h1.order(), 2);
        assert!(inv.w_fixed_type.iter().all(|&m| m == 1));
        assert!(cuspidal_test(iso[1], &[1]).unwrap());
        assert!(!cuspidal_test(iso[1], &[0]).unwrap());
        assert!(!cuspidal_test(&cl[0], &[]).unwrap());
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_rational_classes(2, 5, false).unwrap().len(), 6);
        assert_eq!(enumerate_rational_classes(1, 7, false).unwrap().len(), 1);
        assert!(enumerate_rational_classes(13, 2, false).is_err());
        assert!(enumerate_rational_classes(2, 6, false).is_err());
    }

    #[test]
    fn mu4_coset() {
        let s = DualSetting::new(4, 5, false).unwrap();
        let c = enumerate_rational_classes(4, 5, false)
            .unwrap()
            .into_iter()
            .find(|c| c.geometric_id() == vec![ex(0, 1), ex(1, 4), ex(1, 2), ex(3, 4)])
            .unwrap();
        let inv = class_invariants(&c);
        assert_eq!(inv.a_s.order(), 4);
        assert_eq!(inv.w_fixed_type, vec![1; 4]);
        assert!(cuspidal_test(&c, &[1]).unwrap());
        let l = l_sa(&c, &[1]).unwrap();
        assert_eq!((l.block_size, l.blocks.len()), (4, 1));
        let l = l_sa(&c, &[2]).unwrap();
        assert_eq!((l.block_size, l.blocks.len()), (2, 2));
        assert_eq!(s.fixed_center_order(), 4);
    }

    #[test]
    fn identity_class() {
        let cl = enumerate_rational_classes(3, 2, true).unwrap();
        let inv = class_invariants(&cl[0]);
        assert_eq!(inv.a_s.order(), 1);
        assert_eq!(inv.w_fixed_type, vec![3]);
        assert_eq!(inv.twisted_orbits, vec![true]);
        assert_eq!(central_phase(&cl[0], &[1]).unwrap(), QmodZ::zero());
    }
}
